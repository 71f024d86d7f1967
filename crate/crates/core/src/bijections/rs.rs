//! Robinson–Schensted row insertion.

use std::fmt;

use crate::perm::Permutation;

/// Left-justified rows, stored row-major. Rows increase left to right,
/// columns increase top to bottom, row lengths weakly decrease.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct YoungTableau {
    pub rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Column lengths, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).count())
            .collect()
    }

    pub fn odd_columns(&self) -> usize {
        self.column_lengths()
            .iter()
            .filter(|&&l| l % 2 == 1)
            .count()
    }

    /// Checks the row, column and shape conditions, and that entries are exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
            && self.rows.iter().all(|r| !r.is_empty());
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        let entries_ok = all.iter().enumerate().all(|(i, &v)| v as usize == i + 1);
        shape_ok && rows_ok && cols_ok && entries_ok
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            f.write_str(&line.join(" "))?;
        }
        Ok(())
    }
}

/// Returns the insertion tableau P and the recording tableau Q.
pub fn rs_insert(p: &Permutation) -> (YoungTableau, YoungTableau) {
    let mut ins = YoungTableau::default();
    let mut rec = YoungTableau::default();
    for (step, &value) in p.values().iter().enumerate() {
        let mut x = value;
        let mut row = 0;
        loop {
            if row == ins.rows.len() {
                ins.rows.push(vec![x]);
                rec.rows.push(vec![step as u32 + 1]);
                break;
            }
            let r = &mut ins.rows[row];
            // rows hold distinct values, so the insertion point is the first larger entry
            let pos = r.partition_point(|&y| y < x);
            if pos == r.len() {
                r.push(x);
                rec.rows[row].push(step as u32 + 1);
                break;
            }
            x = std::mem::replace(&mut r[pos], x);
            row += 1;
        }
    }
    (ins, rec)
}

pub fn rs_shape(p: &Permutation) -> Vec<usize> {
    rs_insert(p).0.shape()
}

/// Number of standard Young tableaux of the given shape, by removing corners.
pub fn count_standard_tableaux(shape: &[usize]) -> u128 {
    fn rec(shape: &mut Vec<usize>, memo: &mut std::collections::HashMap<Vec<usize>, u128>) -> u128 {
        while shape.last() == Some(&0) {
            shape.pop();
        }
        if shape.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(shape.as_slice()) {
            return v;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let is_corner = i + 1 == shape.len() || shape[i + 1] < shape[i];
            if is_corner {
                let mut next = shape.clone();
                next[i] -= 1;
                total += rec(&mut next, memo);
            }
        }
        memo.insert(shape.clone(), total);
        total
    }
    rec(&mut shape.to_vec(), &mut Default::default())
}
