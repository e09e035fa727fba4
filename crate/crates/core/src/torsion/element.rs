use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::loopalg::Scalar;

/// Basis vector `x_base ⊗ group` of `H ⊗ k[G]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TwistedBasis {
    pub base: usize,
    pub group: usize,
}

impl TwistedBasis {
    pub fn new(base: usize, group: usize) -> Self {
        Self { base, group }
    }
}

impl fmt::Display for TwistedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.base, self.group)
    }
}

fn add_into<K: Ord>(terms: &mut BTreeMap<K, Scalar>, key: K, coefficient: Scalar) {
    if coefficient.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coefficient);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = *o.get() + coefficient;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

macro_rules! sparse_vector {
    ($name:ident, $key:ty) => {
        #[derive(Debug, Clone, Default, PartialEq, Eq)]
        pub struct $name {
            terms: BTreeMap<$key, Scalar>,
        }

        impl $name {
            pub fn zero() -> Self {
                Self::default()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn add_term(&mut self, key: $key, coefficient: Scalar) {
                add_into(&mut self.terms, key, coefficient);
            }

            pub fn add_scaled(&mut self, other: &Self, factor: Scalar) {
                for (k, c) in &other.terms {
                    add_into(&mut self.terms, *k, *c * factor);
                }
            }

            pub fn coefficient(&self, key: $key) -> Option<Scalar> {
                self.terms.get(&key).copied()
            }

            /// Nonzero terms in key order.
            pub fn terms(&self) -> impl Iterator<Item = ($key, Scalar)> + '_ {
                self.terms.iter().map(|(k, c)| (*k, *c))
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }
        }
    };
}

sparse_vector!(TwistedElement, TwistedBasis);
sparse_vector!(TwistedTensor, (TwistedBasis, TwistedBasis));
sparse_vector!(TwistedTensor3, (TwistedBasis, TwistedBasis, TwistedBasis));

impl TwistedElement {
    pub fn basis(b: TwistedBasis, one: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(b, one);
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c);
        }
        out
    }
}

impl TwistedTensor {
    pub fn outer(left: &TwistedElement, right: &TwistedElement) -> Self {
        let mut out = Self::zero();
        for (a, x) in left.terms() {
            for (b, y) in right.terms() {
                out.add_term((a, b), x * y);
            }
        }
        out
    }

    /// The tensor with its two factors swapped.
    pub fn swapped(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in self.terms() {
            out.add_term((b, a), c);
        }
        out
    }
}
