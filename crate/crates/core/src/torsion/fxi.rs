use serde::Serialize;

use super::element::{TwistedBasis, TwistedElement, TwistedTensor};
use super::twisted::TwistedAlgebra;
use super::TorsionError;
use crate::cohomology::Cochain1;
use crate::loopalg::{AlgebraElement, AlgebraError};

/// `F_ξ(x⊗g) = (φ(ξ(g)) ∘ x) ⊗ g`, from the `c`-twisted algebra to the
/// `c′`-twisted one, where `c = c′ + dξ`.
#[derive(Debug, Clone)]
pub struct FXiMap<'a> {
    source: &'a TwistedAlgebra,
    target: &'a TwistedAlgebra,
    xi: Cochain1,
    units: Vec<AlgebraElement>,
}

/// Outcome of an exhaustive verification sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MapCheck {
    pub checked: usize,
    /// Inputs whose products leave a truncated model's window.
    pub skipped: usize,
    pub failures: Vec<Vec<TwistedBasis>>,
}

impl MapCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl<'a> FXiMap<'a> {
    pub fn new(source: &'a TwistedAlgebra, target: &'a TwistedAlgebra, xi: Cochain1) -> Result<Self, TorsionError> {
        if !source.shares_data_with(target) {
            return Err(TorsionError::DifferentData);
        }
        if xi.coeff() != source.coeff() || **xi.group() != **source.group() {
            return Err(TorsionError::DifferentData);
        }
        let (c, c2) = (source.cocycle(), target.cocycle());
        let d = xi.coboundary();
        let grp = source.group();
        let a = source.coeff();
        for g in grp.elements() {
            for h in grp.elements() {
                if c.get(g, h) != a.add(c2.get(g, h), d.get(g, h)) {
                    return Err(TorsionError::CocycleRelation { g, h });
                }
            }
        }
        let units = grp.elements().map(|g| source.embedding().image(xi.get(g)).clone()).collect();
        Ok(Self { source, target, xi, units })
    }

    pub fn xi(&self) -> &Cochain1 {
        &self.xi
    }

    pub fn apply_basis(&self, b: TwistedBasis) -> Result<TwistedElement, AlgebraError> {
        let base = self.source.base();
        let y = base.multiply(&self.units[b.group], &base.basis_element(b.base))?;
        let mut out = TwistedElement::zero();
        for (i, c) in y.terms() {
            out.add_term(TwistedBasis::new(i, b.group), c);
        }
        Ok(out)
    }

    pub fn apply(&self, u: &TwistedElement) -> Result<TwistedElement, AlgebraError> {
        let mut out = TwistedElement::zero();
        for (b, c) in u.terms() {
            out.add_scaled(&self.apply_basis(b)?, c);
        }
        Ok(out)
    }

    /// `(F ⊗ F)(t)`
    pub fn apply_tensor(&self, t: &TwistedTensor) -> Result<TwistedTensor, AlgebraError> {
        let mut out = TwistedTensor::zero();
        for ((a, b), c) in t.terms() {
            out.add_scaled(&TwistedTensor::outer(&self.apply_basis(a)?, &self.apply_basis(b)?), c);
        }
        Ok(out)
    }

    /// `F(uv) = F(u)F(v)` on all basis pairs.
    pub fn verify_multiplicative(&self) -> MapCheck {
        let mut report = MapCheck::default();
        for a in self.source.basis() {
            for b in self.source.basis() {
                let lhs = self.source.basis_product(a, b).and_then(|p| self.apply(&p));
                let rhs = self
                    .apply_basis(a)
                    .and_then(|fa| self.apply_basis(b).and_then(|fb| self.target.multiply(&fa, &fb)));
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) => {
                        report.checked += 1;
                        if l != r {
                            report.failures.push(vec![a, b]);
                        }
                    }
                    _ => report.skipped += 1,
                }
            }
        }
        report
    }

    /// `(F ⊗ F) ∘ δ_c = δ_{c′} ∘ F` on all basis elements. Errors when the
    /// base coproduct is undefined.
    pub fn verify_comultiplicative(&self) -> Result<MapCheck, AlgebraError> {
        let mut report = MapCheck::default();
        for a in self.source.basis() {
            let lhs = self.source.basis_coproduct(a).and_then(|t| self.apply_tensor(&t));
            let rhs = self.apply_basis(a).and_then(|fa| self.target.coproduct(&fa));
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    report.checked += 1;
                    if l != r {
                        report.failures.push(vec![a]);
                    }
                }
                (Err(AlgebraError::PointClassRequired), _) | (_, Err(AlgebraError::PointClassRequired)) => {
                    return Err(AlgebraError::PointClassRequired);
                }
                _ => report.skipped += 1,
            }
        }
        Ok(report)
    }

    /// Composes with `F_{−ξ}` both ways and checks for the identity on
    /// every basis vector.
    pub fn verify_bijective(&self) -> Result<MapCheck, TorsionError> {
        let a = self.source.coeff();
        let values = self.xi.values().iter().map(|&v| a.neg(v)).collect();
        let neg = Cochain1::new(self.xi.group().clone(), a.clone(), values)?;
        let inverse = FXiMap::new(self.target, self.source, neg)?;
        let mut report = MapCheck::default();
        for b in self.source.basis() {
            let x = self.source.basis_element(b);
            let there_and_back = self.apply(&x).and_then(|y| inverse.apply(&y));
            let back_and_there = inverse.apply(&x).and_then(|y| self.apply(&y));
            match (there_and_back, back_and_there) {
                (Ok(l), Ok(r)) => {
                    report.checked += 1;
                    if l != x || r != x {
                        report.failures.push(vec![b]);
                    }
                }
                _ => report.skipped += 1,
            }
        }
        Ok(report)
    }
}
