use std::fmt;
use std::str::FromStr;

use super::dyck::{DyckPath, Step};
use super::BijectionError;

/// A rooted plane (ordered, unlabeled) tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        Self::default()
    }

    pub fn with_children(children: Vec<PlaneTree>) -> Self {
        Self { children }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::size).sum::<usize>()
    }

    /// Height in edges; a single vertex has height 0.
    pub fn height(&self) -> usize {
        self.max_depth_leaf_count().0
    }

    /// `(height, number of leaves at depth == height)`.
    pub fn max_depth_leaf_count(&self) -> (usize, usize) {
        if self.children.is_empty() {
            return (0, 1);
        }
        let mut best = (0, 0);
        for c in &self.children {
            let (h, k) = c.max_depth_leaf_count();
            if h + 1 > best.0 {
                best = (h + 1, k);
            } else if h + 1 == best.0 {
                best.1 += k;
            }
        }
        best
    }

    /// Standard glue: U descends into a new rightmost child, D returns to the parent.
    pub fn from_dyck(d: &DyckPath) -> Self {
        let mut stack: Vec<PlaneTree> = vec![PlaneTree::leaf()];
        for s in d.steps() {
            match s {
                Step::U => stack.push(PlaneTree::leaf()),
                Step::D => {
                    let child = stack.pop().expect("valid Dyck path");
                    stack
                        .last_mut()
                        .expect("valid Dyck path")
                        .children
                        .push(child);
                }
            }
        }
        stack.pop().expect("root")
    }

    pub fn to_dyck(&self) -> DyckPath {
        fn walk(t: &PlaneTree, out: &mut Vec<Step>) {
            for c in &t.children {
                out.push(Step::U);
                walk(c, out);
                out.push(Step::D);
            }
        }
        let mut steps = Vec::with_capacity(2 * (self.size() - 1));
        walk(self, &mut steps);
        DyckPath::from_steps_unchecked(steps)
    }
}

/// Balanced parentheses: every vertex is `(` children `)`; a single vertex is `()`.
impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for PlaneTree {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| BijectionError::MalformedTree(msg.to_string());
        let s = s.trim();
        let mut stack: Vec<PlaneTree> = Vec::new();
        let mut root = None;
        for c in s.chars() {
            if root.is_some() {
                return Err(bad("trailing characters after the root closes"));
            }
            match c {
                '(' => stack.push(PlaneTree::leaf()),
                ')' => {
                    let t = stack.pop().ok_or_else(|| bad("unbalanced ')'"))?;
                    match stack.last_mut() {
                        Some(parent) => parent.children.push(t),
                        None => root = Some(t),
                    }
                }
                _ => return Err(bad("only '(' and ')' are allowed")),
            }
        }
        root.ok_or_else(|| bad("unbalanced '('"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_statistics() {
        assert_eq!(PlaneTree::leaf().max_depth_leaf_count(), (0, 1));
        let cherry = PlaneTree::with_children(vec![PlaneTree::leaf(), PlaneTree::leaf()]);
        assert_eq!(cherry.max_depth_leaf_count(), (1, 2));
        let t: PlaneTree = "((())())".parse().unwrap();
        assert_eq!(t.max_depth_leaf_count(), (2, 1));
        assert_eq!(t.size(), 4);
    }

    #[test]
    fn dyck_glue() {
        assert_eq!(
            PlaneTree::from_dyck(&DyckPath::default()),
            PlaneTree::leaf()
        );
        assert_eq!(
            PlaneTree::from_dyck(&"UUDD".parse().unwrap()).to_string(),
            "((()))"
        );
        assert_eq!(
            PlaneTree::from_dyck(&"UDUD".parse().unwrap()).to_string(),
            "(()())"
        );
        let d: DyckPath = "UUDUUDDDUD".parse().unwrap();
        assert_eq!(PlaneTree::from_dyck(&d).to_dyck(), d);
    }

    #[test]
    fn parens_roundtrip_and_errors() {
        let t: PlaneTree = "(()(()()))".parse().unwrap();
        assert_eq!(t.to_string(), "(()(()()))");
        assert!("(()".parse::<PlaneTree>().is_err());
        assert!("())".parse::<PlaneTree>().is_err());
        assert!("()()".parse::<PlaneTree>().is_err());
        assert!("".parse::<PlaneTree>().is_err());
    }
}
