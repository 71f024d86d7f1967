use std::fmt;
use std::str::FromStr;

use super::BijectionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }

    pub fn flip(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::U => "U",
            Step::D => "D",
        })
    }
}

/// A Dyck path: equally many U and D steps, no prefix dipping below zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, BijectionError> {
        let mut h = 0i64;
        for (i, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(BijectionError::MalformedPath(format!(
                    "prefix of length {} goes below zero",
                    i + 1
                )));
            }
        }
        if h != 0 {
            return Err(BijectionError::MalformedPath(format!(
                "path ends at height {h}"
            )));
        }
        Ok(Self { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(Self::new(steps.clone()).is_ok());
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Peaks as (x, y): x is the number of steps taken before the peak point.
    pub fn peaks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut h = 0i64;
        for (i, w) in self.steps.windows(2).enumerate() {
            h += w[0].delta();
            if w[0] == Step::U && w[1] == Step::D {
                out.push((i + 1, h as usize));
            }
        }
        out
    }

    /// The maximum peak height, if exactly one peak attains it.
    pub fn unique_max_peak(&self) -> Option<usize> {
        let peaks = self.peaks();
        let max = peaks.iter().map(|&(_, y)| y).max()?;
        (peaks.iter().filter(|&&(_, y)| y == max).count() == 1).then_some(max)
    }

    /// Mirror-symmetric about the vertical line through the midpoint.
    pub fn is_symmetric(&self) -> bool {
        self.steps
            .iter()
            .copied()
            .eq(self.steps.iter().rev().map(|s| s.flip()))
    }

    /// Splits into primes (returns to height zero). Each prime is `U inner D`.
    pub fn primes(&self) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let mut h = 0i64;
        let mut start = 0;
        for (i, s) in self.steps.iter().enumerate() {
            h += s.delta();
            if h == 0 {
                out.push(DyckPath {
                    steps: self.steps[start..=i].to_vec(),
                });
                start = i + 1;
            }
        }
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                other => Err(BijectionError::MalformedPath(format!(
                    "unexpected character {other:?} at step {}",
                    i + 1
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckPath::new(steps)
    }
}

/// Every Dyck path of the given semilength, in lexicographic order (U < D).
pub fn all_dyck_paths(semilength: usize) -> Vec<DyckPath> {
    fn rec(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < n {
            cur.push(Step::U);
            rec(n, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::D);
            rec(n, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        semilength,
        0,
        0,
        &mut Vec::with_capacity(2 * semilength),
        &mut out,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn peak_examples() {
        assert_eq!(p("UUDD").peaks(), vec![(2, 2)]);
        assert_eq!(p("UUDD").unique_max_peak(), Some(2));
        assert_eq!(p("UDUD").peaks(), vec![(1, 1), (3, 1)]);
        assert_eq!(p("UDUD").unique_max_peak(), None);
        assert_eq!(p("").unique_max_peak(), None);
    }

    #[test]
    fn symmetry() {
        assert!(p("UUDD").is_symmetric());
        assert!(!p("UUDDUD").is_symmetric());
        assert!(p("UDUUDDUD").is_symmetric());
    }

    #[test]
    fn rejects_malformed() {
        assert!("UDDU".parse::<DyckPath>().is_err());
        assert!("UUD".parse::<DyckPath>().is_err());
        assert!("UXD".parse::<DyckPath>().is_err());
    }

    #[test]
    fn catalan_many_paths() {
        let counts: Vec<usize> = (0..7).map(|n| all_dyck_paths(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn primes_concatenate_back() {
        let d = p("UDUUDDUUUDDD");
        let primes = d.primes();
        assert_eq!(primes.len(), 3);
        let joined: Vec<Step> = primes.iter().flat_map(|q| q.steps().to_vec()).collect();
        assert_eq!(joined, d.steps());
    }
}
