//! Normalized group cochains with trivially acting finite abelian
//! coefficients, in degrees 1 and 2.
//!
//! Coefficients are written additively, so the coboundary of a 1-cochain
//! is `dξ(g, h) = ξ(g) + ξ(h) − ξ(gh)` and the 2-cocycle identity reads
//! `c(h, k) − c(gh, k) + c(g, hk) − c(g, h) = 0`.
//!
//! Two routes decide whether two cocycles are cohomologous:
//! [`solve_coboundary`] reduces the linear system over each cyclic factor
//! of the coefficients, and [`brute_force_cohomologous`] enumerates every
//! normalized 1-cochain. They share no code beyond the cochain types.

mod brute;
pub mod linalg;
mod solve;

use std::sync::Arc;

use thiserror::Error;

use crate::abelian::{AbelianError, FiniteAbelianGroup};
use crate::fingroup::FiniteGroup;

pub use brute::{brute_force_cohomologous, h2_order_brute, BRUTE_FORCE_LIMIT};
pub use solve::{class_order, cocycle_generators, h2_order, solve_coboundary, LINALG_ENTRY_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("cochain has {got} values, expected {expected}")]
    WrongShape { expected: usize, got: usize },
    #[error("value {value} at {at:?} is not an element of the coefficient group")]
    ValueOutOfRange { at: (usize, usize), value: usize },
    #[error("cochain is not normalized at ({0}, {1})")]
    NotNormalized(usize, usize),
    #[error("cochains live over different groups or coefficients")]
    Mismatch,
    #[error("cocycle identity fails at ({0}, {1}, {2})")]
    NotCocycle(usize, usize, usize),
    #[error("element {0} does not generate the group, which must be cyclic")]
    NotCyclic(usize),
    #[error("search space of {0} cochains exceeds the brute-force limit")]
    SearchSpaceTooLarge(u128),
    #[error("cocycle search gave up after {0} backtracking steps")]
    SearchBudgetExceeded(u64),
    #[error("linear system with {0} entries exceeds the supported size")]
    SystemTooLarge(usize),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Normalized 1-cochain `ξ: G → A` with `ξ(e) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain1 {
    group: Arc<FiniteGroup>,
    coeff: FiniteAbelianGroup,
    values: Vec<usize>,
}

impl Cochain1 {
    pub fn new(
        group: Arc<FiniteGroup>,
        coeff: FiniteAbelianGroup,
        values: Vec<usize>,
    ) -> Result<Self, CohomologyError> {
        if values.len() != group.order() {
            return Err(CohomologyError::WrongShape { expected: group.order(), got: values.len() });
        }
        for (g, &v) in values.iter().enumerate() {
            if v >= coeff.order() {
                return Err(CohomologyError::ValueOutOfRange { at: (g, 0), value: v });
            }
        }
        let e = group.identity();
        if values[e] != 0 {
            return Err(CohomologyError::NotNormalized(e, e));
        }
        Ok(Self { group, coeff, values })
    }

    pub fn zero(group: Arc<FiniteGroup>, coeff: FiniteAbelianGroup) -> Self {
        let values = vec![0; group.order()];
        Self { group, coeff, values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeff(&self) -> &FiniteAbelianGroup {
        &self.coeff
    }

    pub fn get(&self, g: usize) -> usize {
        self.values[g]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `dξ(g, h) = ξ(g) + ξ(h) − ξ(gh)`
    pub fn coboundary(&self) -> Cochain2 {
        let (g, a) = (&self.group, &self.coeff);
        let n = g.order();
        let mut values = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                values.push(a.sub(a.add(self.values[x], self.values[y]), self.values[g.mul(x, y)]));
            }
        }
        Cochain2 { group: self.group.clone(), coeff: self.coeff.clone(), values }
    }
}

/// `dξ`; free-function form of [`Cochain1::coboundary`].
pub fn d1(xi: &Cochain1) -> Cochain2 {
    xi.coboundary()
}

/// Normalized 2-cochain `c: G × G → A` with `c(e, g) = c(g, e) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain2 {
    group: Arc<FiniteGroup>,
    coeff: FiniteAbelianGroup,
    values: Vec<usize>,
}

impl Cochain2 {
    /// `values[g * |G| + h] = c(g, h)`; must already be normalized.
    pub fn new(
        group: Arc<FiniteGroup>,
        coeff: FiniteAbelianGroup,
        values: Vec<usize>,
    ) -> Result<Self, CohomologyError> {
        let n = group.order();
        if values.len() != n * n {
            return Err(CohomologyError::WrongShape { expected: n * n, got: values.len() });
        }
        for (i, &v) in values.iter().enumerate() {
            if v >= coeff.order() {
                return Err(CohomologyError::ValueOutOfRange { at: (i / n, i % n), value: v });
            }
        }
        let e = group.identity();
        for g in 0..n {
            if values[e * n + g] != 0 {
                return Err(CohomologyError::NotNormalized(e, g));
            }
            if values[g * n + e] != 0 {
                return Err(CohomologyError::NotNormalized(g, e));
            }
        }
        Ok(Self { group, coeff, values })
    }

    pub fn from_fn(
        group: Arc<FiniteGroup>,
        coeff: FiniteAbelianGroup,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, CohomologyError> {
        let n = group.order();
        let values = (0..n * n).map(|i| f(i / n, i % n)).collect();
        Self::new(group, coeff, values)
    }

    /// Normalizes raw input by subtracting the constant `c(e, e)` from every
    /// value. For a cocycle with trivial action this always yields a
    /// normalized cocycle in the same class.
    pub fn normalized_from_raw(
        group: Arc<FiniteGroup>,
        coeff: FiniteAbelianGroup,
        mut values: Vec<usize>,
    ) -> Result<Self, CohomologyError> {
        let n = group.order();
        if values.len() != n * n {
            return Err(CohomologyError::WrongShape { expected: n * n, got: values.len() });
        }
        if let Some((i, &v)) = values.iter().enumerate().find(|(_, &v)| v >= coeff.order()) {
            return Err(CohomologyError::ValueOutOfRange { at: (i / n, i % n), value: v });
        }
        let e = group.identity();
        let shift = values[e * n + e];
        for v in values.iter_mut() {
            *v = coeff.sub(*v, shift);
        }
        Self::new(group, coeff, values)
    }

    pub fn zero(group: Arc<FiniteGroup>, coeff: FiniteAbelianGroup) -> Self {
        let n = group.order();
        Self { group, coeff, values: vec![0; n * n] }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeff(&self) -> &FiniteAbelianGroup {
        &self.coeff
    }

    #[inline]
    pub fn get(&self, g: usize, h: usize) -> usize {
        self.values[g * self.group.order() + h]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn same_domain(&self, other: &Cochain2) -> bool {
        same_group(&self.group, &other.group) && self.coeff == other.coeff
    }

    fn zip_with(&self, other: &Cochain2, op: impl Fn(usize, usize) -> usize) -> Result<Cochain2, CohomologyError> {
        if !self.same_domain(other) {
            return Err(CohomologyError::Mismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| op(a, b)).collect();
        Ok(Cochain2 { group: self.group.clone(), coeff: self.coeff.clone(), values })
    }

    pub fn plus(&self, other: &Cochain2) -> Result<Cochain2, CohomologyError> {
        self.zip_with(other, |a, b| self.coeff.add(a, b))
    }

    pub fn minus(&self, other: &Cochain2) -> Result<Cochain2, CohomologyError> {
        self.zip_with(other, |a, b| self.coeff.sub(a, b))
    }

    /// `k · c`
    pub fn scaled(&self, k: i64) -> Cochain2 {
        let values = self.values.iter().map(|&a| self.coeff.scale(k, a)).collect();
        Cochain2 { group: self.group.clone(), coeff: self.coeff.clone(), values }
    }

    /// First triple `(g, h, k)` violating the cocycle identity, if any.
    pub fn cocycle_defect(&self) -> Option<(usize, usize, usize)> {
        let (grp, a) = (&*self.group, &self.coeff);
        for g in grp.elements() {
            for h in grp.elements() {
                let gh = grp.mul(g, h);
                for k in grp.elements() {
                    let lhs = a.add(self.get(h, k), self.get(g, grp.mul(h, k)));
                    let rhs = a.add(self.get(gh, k), self.get(g, h));
                    if lhs != rhs {
                        return Some((g, h, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_cocycle(&self) -> bool {
        self.cocycle_defect().is_none()
    }

    /// Whether `c(g, h) = c(s g s⁻¹, s h s⁻¹)` for all `s, g, h`.
    pub fn is_conjugation_invariant(&self) -> bool {
        self.conjugation_defect().is_none()
    }

    /// First `(s, g, h)` where conjugation by `s` changes the value.
    pub fn conjugation_defect(&self) -> Option<(usize, usize, usize)> {
        let grp = &*self.group;
        for s in grp.elements() {
            for g in grp.elements() {
                let sg = grp.conjugate(s, g);
                for h in grp.elements() {
                    if self.get(g, h) != self.get(sg, grp.conjugate(s, h)) {
                        return Some((s, g, h));
                    }
                }
            }
        }
        None
    }
}

/// The cocycle of a cyclic group that records wrap-around:
/// `c(gⁱ, gʲ) = 0` if `i + j < n` and `a` if `i + j ≥ n`, for `0 ≤ i, j < n`.
pub fn carrying_cocycle(
    group: Arc<FiniteGroup>,
    generator: usize,
    coeff: FiniteAbelianGroup,
    a: usize,
) -> Result<Cochain2, CohomologyError> {
    let n = group.order();
    if generator >= n || group.element_order(generator) != n {
        return Err(CohomologyError::NotCyclic(generator));
    }
    if a >= coeff.order() {
        return Err(CohomologyError::ValueOutOfRange { at: (0, 0), value: a });
    }
    let mut exponent = vec![0usize; n];
    let mut x = group.identity();
    for (i, _) in (0..n).enumerate() {
        exponent[x] = i;
        x = group.mul(x, generator);
    }
    Cochain2::from_fn(group, coeff, |g, h| if exponent[g] + exponent[h] >= n { a } else { 0 })
}
