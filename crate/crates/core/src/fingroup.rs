//! Finite groups given by validated multiplication tables.
//!
//! Elements are dense indices `0..n`. The identity is discovered by scan, so
//! imported tables need not put it at index 0. Every constructor validates
//! eagerly; a [`FiniteGroup`] value always satisfies the group axioms.

use thiserror::Error;

/// Largest supported group order. The associativity check is cubic in the
/// order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order must be positive")]
    InvalidOrder,
    #[error("group order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(usize),
    #[error("multiplication table is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry ({row}, {col}) = {value} is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("no identity element found")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
}

/// A finite group as a multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

/// Partition of a group into conjugacy classes.
///
/// Classes are sorted by their smallest element and each class is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ConjugacyPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `g`.
    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }
}

impl FiniteGroup {
    /// The cyclic group ℤ/n, with `i` standing for the `i`-th power of the
    /// generator `1`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidOrder);
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i + j) % n))
            .collect();
        let inverses = (0..n).map(|i| (n - i) % n).collect();
        Ok(Self { order: n, table, identity: 0, inverses })
    }

    /// Validates an arbitrary table, where `rows[g][h]` is the index of `g·h`.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::InvalidOrder);
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare { row, len: entries.len(), expected: n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::OutOfRange { row, col, value });
                }
                table.push(value);
            }
        }
        let at = |a: usize, b: usize| table[a * n + b];

        let identity = (0..n)
            .find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or(GroupError::NoInverse(g))?;
            inverses.push(inv);
        }

        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }

        Ok(Self { order: n, table, identity, inverses })
    }

    /// Direct product; the pair `(g, h)` has index `g·|H| + h`.
    pub fn product(left: &Self, right: &Self) -> Result<Self, GroupError> {
        let n = left.order * right.order;
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let m = right.order;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let g = left.mul(a / m, b / m);
                let h = right.mul(a % m, b % m);
                table.push(g * m + h);
            }
        }
        let identity = left.identity * m + right.identity;
        let inverses = (0..n)
            .map(|a| left.inverse(a / m) * m + right.inverse(a % m))
            .collect();
        Ok(Self { order: n, table, identity, inverses })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h]
    }

    #[inline]
    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// `s g s⁻¹`
    pub fn conjugate(&self, s: usize, g: usize) -> usize {
        self.mul(self.mul(s, g), self.inverse(s))
    }

    /// The table as nested rows, suitable for serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// `g^k` for `k ≥ 0`.
    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (g..self.order).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Smallest-index element generating the whole group, if the group is
    /// cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        self.elements().find(|&g| self.element_order(g) == self.order)
    }

    /// Orbits of `g ↦ s g s⁻¹`.
    pub fn conjugacy_classes(&self) -> ConjugacyPartition {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let mut class: Vec<usize> = (0..n).map(|s| self.conjugate(s, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                class_of[x] = idx;
            }
            classes.push(class);
        }
        ConjugacyPartition { classes, class_of }
    }

    /// Display name of an element: `e` for the identity, `g<i>` otherwise.
    pub fn element_name(&self, g: usize) -> String {
        if g == self.identity {
            "e".to_string()
        } else {
            format!("g{g}")
        }
    }
}
