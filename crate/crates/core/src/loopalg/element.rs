use std::collections::BTreeMap;

use super::scalar::Scalar;

/// Sparse linear combination of basis elements. Zero coefficients are never
/// stored, so structural equality is equality of vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<usize, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(index: usize, one: Scalar) -> Self {
        Self::term(index, one)
    }

    pub fn term(index: usize, coefficient: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(index, coefficient);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: usize, coefficient: Scalar) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(c) => {
                *c += coefficient;
                if c.is_zero() {
                    self.terms.remove(&index);
                }
            }
            None => {
                self.terms.insert(index, coefficient);
            }
        }
    }

    /// `self += factor · other`
    pub fn add_scaled(&mut self, other: &AlgebraElement, factor: Scalar) {
        for (&i, &c) in &other.terms {
            self.add_term(i, c * factor);
        }
    }

    pub fn scaled(&self, factor: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn plus(&self, other: &AlgebraElement) -> Self {
        let mut out = self.clone();
        for (&i, &c) in &other.terms {
            out.add_term(i, c);
        }
        out
    }

    pub fn coefficient(&self, index: usize) -> Option<Scalar> {
        self.terms.get(&index).copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, Scalar)> + '_ {
        self.terms.iter().map(|(&i, &c)| (i, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Sparse element of `H ⊗ H`, indexed by pairs of basis indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(usize, usize), Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `left ⊗ right`
    pub fn outer(left: &AlgebraElement, right: &AlgebraElement) -> Self {
        let mut t = Self::zero();
        for (i, a) in left.terms() {
            for (j, b) in right.terms() {
                t.add_term((i, j), a * b);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: (usize, usize), coefficient: Scalar) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(c) => {
                *c += coefficient;
                if c.is_zero() {
                    self.terms.remove(&index);
                }
            }
            None => {
                self.terms.insert(index, coefficient);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, factor: Scalar) {
        for (&i, &c) in &other.terms {
            self.add_term(i, c * factor);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), Scalar)> + '_ {
        self.terms.iter().map(|(&i, &c)| (i, c))
    }
}
