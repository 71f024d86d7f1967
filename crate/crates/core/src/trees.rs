//! Exact counting of plane trees with a unique deepest leaf, which counts
//! 132-avoiders with a ULIS in polynomial time, plus Catalan/binomial helpers.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeCountError {
    #[error("binomial({n}, {k}) is out of range")]
    Binomial { n: usize, k: usize },
    #[error("tree size must be at least 1")]
    EmptyTree,
    #[error("n = {n} exceeds the table capacity {capacity}")]
    Capacity { n: usize, capacity: usize },
}

/// Default capacity (vertices) of the memo tables.
pub const DEFAULT_CAPACITY: usize = 200;

pub fn binomial(n: usize, k: usize) -> Result<BigUint, TreeCountError> {
    if k > n {
        return Err(TreeCountError::Binomial { n, k });
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    Ok(acc)
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n).expect("n <= 2n") / BigUint::from(n + 1)
}

/// Memo tables over tree sizes `1..=capacity` and heights `0..capacity`.
///
/// * `forest[m][h]`: ordered forests with `m` vertices in total, every tree of height ≤ h.
/// * `unique[n][h]`: trees on `n` vertices of height exactly `h` with a single deepest leaf.
///
/// Trees of height ≤ h on `n` vertices are `forest[n - 1][h - 1]` (a root over a forest).
#[derive(Debug, Clone)]
pub struct TreeCountDp {
    capacity: usize,
    // forest[h + 1][m] so that h = -1 is representable.
    forest: Vec<Vec<BigUint>>,
    unique: Vec<Vec<BigUint>>,
}

impl TreeCountDp {
    pub fn new(capacity: usize) -> Self {
        let cap = capacity.max(1);
        // forest with height bound h' in -1..cap, sizes 0..cap
        let mut forest = vec![vec![BigUint::zero(); cap]; cap + 1];
        forest[0][0] = BigUint::one();
        for hb in 1..=cap {
            // height bound h = hb - 1; a tree of size j ≤ h is a root over forest[h - 1] of size j - 1
            forest[hb][0] = BigUint::one();
            for m in 1..cap {
                let mut total = BigUint::zero();
                for j in 1..=m {
                    let trees = &forest[hb - 1][j - 1];
                    if !trees.is_zero() {
                        total += trees * &forest[hb][m - j];
                    }
                }
                forest[hb][m] = total;
            }
        }

        // pair[hb][m] = sum_a F(a) F(m - a) under height bound hb - 1
        let pair: Vec<Vec<BigUint>> = forest
            .iter()
            .map(|f| {
                (0..cap)
                    .map(|m| (0..=m).map(|a| &f[a] * &f[m - a]).sum())
                    .collect()
            })
            .collect();

        let mut unique = vec![vec![BigUint::zero(); cap]; cap + 1];
        if cap >= 1 {
            unique[1][0] = BigUint::one();
        }
        for n in 2..=cap {
            for h in 1..n {
                let mut total = BigUint::zero();
                // side forests have height ≤ h - 2, i.e. bound index h - 1
                for k in 1..n {
                    let w = &unique[k][h - 1];
                    if w.is_zero() {
                        continue;
                    }
                    total += w * &pair[h - 1][n - 1 - k];
                }
                unique[n][h] = total;
            }
        }
        Self {
            capacity: cap,
            forest,
            unique,
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    fn check(&self, n: usize) -> Result<(), TreeCountError> {
        if n == 0 {
            return Err(TreeCountError::EmptyTree);
        }
        if n > self.capacity {
            return Err(TreeCountError::Capacity {
                n,
                capacity: self.capacity,
            });
        }
        Ok(())
    }

    /// Ordered forests of `m` total vertices whose trees all have height ≤ `h`
    /// (`h = -1` admits only the empty forest).
    pub fn forests(&self, m: usize, h: isize) -> BigUint {
        let hb = (h + 1).clamp(0, self.capacity as isize) as usize;
        self.forest[hb].get(m).cloned().unwrap_or_default()
    }

    /// Trees on `n` vertices of height ≤ `h`.
    pub fn trees_at_most(&self, n: usize, h: usize) -> Result<BigUint, TreeCountError> {
        self.check(n)?;
        Ok(self.forests(n - 1, h as isize - 1))
    }

    /// Trees on `n` vertices, height exactly `h`, with one deepest leaf.
    pub fn unique_deepest(&self, n: usize, h: usize) -> Result<BigUint, TreeCountError> {
        self.check(n)?;
        Ok(self.unique[n].get(h).cloned().unwrap_or_default())
    }

    pub fn count_unique_deepest_leaf_trees(&self, n: usize) -> Result<BigUint, TreeCountError> {
        self.check(n)?;
        Ok(self.unique[n].iter().sum())
    }

    /// u_n(132) = trees on n + 1 vertices with a unique deepest leaf.
    pub fn u132(&self, n: usize) -> Result<BigUint, TreeCountError> {
        self.count_unique_deepest_leaf_trees(n + 1)
    }

    pub fn ratio_report(&self, max_n: usize) -> Result<Vec<RatioRow>, TreeCountError> {
        let mut rows: Vec<RatioRow> = Vec::with_capacity(max_n);
        for n in 1..=max_n {
            let u = self.u132(n)?;
            let c = catalan(n);
            let ratio = BigRational::new(u.clone().into(), c.clone().into());
            let real = ratio.to_f64().unwrap_or(f64::NAN);
            let mut notes = Vec::new();
            if n >= 3 {
                if ratio <= BigRational::new(1.into(), 2.into()) {
                    notes.push("at or below 1/2".to_string());
                }
                if let Some(prev) = rows.last() {
                    if prev.n >= 3 && ratio >= prev.ratio {
                        notes.push("not decreasing".to_string());
                    }
                }
            }
            rows.push(RatioRow {
                n,
                u132: u,
                catalan: c,
                ratio,
                real,
                diagnostic: notes.join("; "),
            });
        }
        Ok(rows)
    }
}

/// `u_n(132) / C_n`, exactly and as a float, with a diagnostic note for any
/// n ≥ 3 where the ratio stops decreasing or reaches 1/2.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow {
    pub n: usize,
    pub u132: BigUint,
    pub catalan: BigUint,
    pub ratio: BigRational,
    pub real: f64,
    pub diagnostic: String,
}

pub fn count_unique_deepest_leaf_trees(n: usize) -> Result<BigUint, TreeCountError> {
    TreeCountDp::new(n.max(1)).count_unique_deepest_leaf_trees(n)
}

pub fn u132_fast(n: usize) -> BigUint {
    TreeCountDp::new(n + 1)
        .u132(n)
        .expect("table sized for n + 1")
}

pub fn ratio_report(max_n: usize) -> Vec<RatioRow> {
    TreeCountDp::new(max_n + 1)
        .ratio_report(max_n)
        .expect("table sized for max_n + 1")
}
