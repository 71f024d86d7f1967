//! Exact enumeration of pattern-avoiding permutations and involutions with a
//! unique longest increasing subsequence (ULIS), together with the bijections,
//! generating functions and tree counts that explain those numbers.
//!
//! Module map:
//!
//! * [`perm`]: permutations, pattern containment, symmetries, decompositions.
//! * [`lis`]: ranks, LIS length and exact LIS counts.
//! * [`enumerate`]: avoider streams and brute-force counters.
//! * [`bijections`]: ψ, φ, the Claesson–Kitaev map and Robinson–Schensted.
//! * [`series`]: truncated power series over the rationals.
//! * [`trees`]: polynomial-time counts of trees with a unique deepest leaf.
//! * [`sampler`]: uniform Dyck paths and Monte Carlo deepest-leaf statistics.
//! * [`verify`]: the invariant suites run by `ulis verify`.

pub mod bijections;
pub mod enumerate;
pub mod lis;
pub mod perm;
pub mod sampler;
pub mod series;
pub mod trees;
pub mod verify;

pub use perm::Permutation;

/// Known prefixes of OEIS b-files, in b-file format.
pub mod fixtures {
    pub const A082582: &str = include_str!("../fixtures/b082582.txt");
    pub const A152880: &str = include_str!("../fixtures/b152880.txt");

    /// Parses `"n a(n)"` lines; blank lines and `#` comments are skipped.
    pub fn parse_bfile(text: &str) -> Result<Vec<(usize, num_bigint::BigUint)>, String> {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                let mut parts = l.split_whitespace();
                let n = parts.next().and_then(|t| t.parse().ok());
                let a = parts.next().and_then(|t| t.parse().ok());
                match (n, a, parts.next()) {
                    (Some(n), Some(a), None) => Ok((n, a)),
                    _ => Err(format!("bad b-file line {l:?}")),
                }
            })
            .collect()
    }
}
