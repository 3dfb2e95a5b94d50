use std::cmp::Ordering;

use crate::field::{Elem, Field};
use crate::linalg::Mat;

/// Upper Jordan block of size `d`.
pub fn jordan_block(field: &Field, lambda: &Elem, d: usize) -> Mat {
    Mat::from_fn(field, d, d, |i, j| {
        if i == j {
            lambda.clone()
        } else if j == i + 1 {
            field.one()
        } else {
            field.zero()
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanEntry {
    pub eigenvalue: Elem,
    pub sizes: Vec<usize>,
}

/// Jordan structure of `B`. Canonical when eigenvalues are strictly
/// increasing in the field order and each size list is weakly decreasing
/// and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JordanSpec(pub Vec<JordanEntry>);

impl JordanSpec {
    pub fn dim(&self) -> usize {
        self.0.iter().flat_map(|e| &e.sizes).sum()
    }

    /// Merge repeated eigenvalues, sort, and drop empty blocks.
    pub fn canonical(&self, field: &Field) -> JordanSpec {
        let mut entries: Vec<JordanEntry> = Vec::new();
        let mut sorted = self.0.clone();
        sorted.sort_by(|a, b| field.cmp(&a.eigenvalue, &b.eigenvalue));
        for e in sorted {
            match entries.last_mut() {
                Some(last) if field.cmp(&last.eigenvalue, &e.eigenvalue) == Ordering::Equal => {
                    last.sizes.extend(e.sizes)
                }
                _ => entries.push(e),
            }
        }
        for e in &mut entries {
            e.sizes.retain(|&s| s > 0);
            e.sizes.sort_by(|a, b| b.cmp(a));
        }
        entries.retain(|e| !e.sizes.is_empty());
        JordanSpec(entries)
    }

    pub fn is_canonical(&self, field: &Field) -> bool {
        let ordered = self
            .0
            .windows(2)
            .all(|w| field.cmp(&w[0].eigenvalue, &w[1].eigenvalue) == Ordering::Less);
        let sizes = self.0.iter().all(|e| {
            !e.sizes.is_empty() && e.sizes.iter().all(|&s| s > 0) && e.sizes.windows(2).all(|w| w[0] >= w[1])
        });
        ordered && sizes
    }

    /// Block-diagonal Jordan matrix in spec order.
    pub fn matrix(&self, field: &Field) -> Mat {
        let blocks: Vec<Mat> = self
            .0
            .iter()
            .flat_map(|e| e.sizes.iter().map(|&d| jordan_block(field, &e.eigenvalue, d)))
            .collect();
        Mat::block_diag(field, &blocks)
    }

    pub fn format(&self, field: &Field) -> String {
        self.0
            .iter()
            .map(|e| {
                let sizes: Vec<String> = e.sizes.iter().map(|s| s.to_string()).collect();
                format!("{}:[{}]", field.format(&e.eigenvalue), sizes.join(","))
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}
