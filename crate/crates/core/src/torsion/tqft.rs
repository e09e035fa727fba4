use serde::Serialize;

use super::element::{TwistedBasis, TwistedElement, TwistedTensor, TwistedTensor3};
use super::twisted::TwistedAlgebra;
use crate::loopalg::AlgebraError;

/// Inclusive range of base degrees swept by [`check_tqft`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeWindow {
    pub min: i32,
    pub max: i32,
}

impl DegreeWindow {
    pub const ALL: DegreeWindow = DegreeWindow { min: i32::MIN, max: i32::MAX };

    pub fn contains(&self, degree: i32) -> bool {
        (self.min..=self.max).contains(&degree)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    /// `false` when the axiom involves an undefined coproduct.
    pub applicable: bool,
    pub checked: usize,
    /// Inputs whose products leave a truncated model's window.
    pub skipped: usize,
    pub failures: Vec<Vec<TwistedBasis>>,
}

impl AxiomCheck {
    fn applicable() -> Self {
        Self { applicable: true, ..Self::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, outcome: Result<bool, AlgebraError>, witness: impl FnOnce() -> Vec<TwistedBasis>) {
        match outcome {
            Ok(true) => self.checked += 1,
            Ok(false) => {
                self.checked += 1;
                self.failures.push(witness());
            }
            Err(_) => self.skipped += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TqftReport {
    pub associativity: AxiomCheck,
    pub coassociativity: AxiomCheck,
    pub frobenius: AxiomCheck,
    /// Whether `δ` is symmetric under swapping factors; informational, and
    /// `None` without a coproduct.
    pub cocommutative: Option<bool>,
}

impl TqftReport {
    pub fn passed(&self) -> bool {
        self.associativity.passed() && self.coassociativity.passed() && self.frobenius.passed()
    }
}

fn left_coproduct(alg: &TwistedAlgebra, t: &TwistedTensor) -> Result<TwistedTensor3, AlgebraError> {
    let mut out = TwistedTensor3::zero();
    for ((a, b), s) in t.terms() {
        for ((p, q), r) in alg.basis_coproduct(a)?.terms() {
            out.add_term((p, q, b), s * r);
        }
    }
    Ok(out)
}

fn right_coproduct(alg: &TwistedAlgebra, t: &TwistedTensor) -> Result<TwistedTensor3, AlgebraError> {
    let mut out = TwistedTensor3::zero();
    for ((a, b), s) in t.terms() {
        for ((p, q), r) in alg.basis_coproduct(b)?.terms() {
            out.add_term((a, p, q), s * r);
        }
    }
    Ok(out)
}

/// `(id ⊗ μ)(t ⊗ v)` when `right`, `(μ ⊗ id)(v ⊗ t)` otherwise.
fn absorb(alg: &TwistedAlgebra, t: &TwistedTensor, v: &TwistedElement, right: bool) -> Result<TwistedTensor, AlgebraError> {
    let mut out = TwistedTensor::zero();
    for ((a, b), s) in t.terms() {
        let (x, y) = if right {
            (alg.basis_element(a), alg.multiply(&alg.basis_element(b), v)?)
        } else {
            (alg.multiply(v, &alg.basis_element(a))?, alg.basis_element(b))
        };
        out.add_scaled(&TwistedTensor::outer(&x, &y), s);
    }
    Ok(out)
}

/// Associativity on basis triples, and when the coproduct is defined,
/// coassociativity `(δ⊗id)δ = (id⊗δ)δ` and the Frobenius relation
/// `δ(uv) = (id⊗μ)(δ(u)⊗v) = (μ⊗id)(u⊗δ(v))`, all restricted to basis
/// vectors whose degree lies in `window`.
///
/// No Koszul signs enter the coalgebra checks, which is exact whenever the
/// coproduct vanishes or the basis sits in even degrees.
pub fn check_tqft(alg: &TwistedAlgebra, window: DegreeWindow) -> TqftReport {
    let basis: Vec<TwistedBasis> = alg.basis().filter(|&b| window.contains(alg.degree(b))).collect();
    let elem = |b: TwistedBasis| alg.basis_element(b);

    let mut associativity = AxiomCheck::applicable();
    for &a in &basis {
        for &b in &basis {
            let ab = alg.basis_product(a, b);
            for &c in &basis {
                let outcome = ab.clone().and_then(|ab| {
                    let left = alg.multiply(&ab, &elem(c))?;
                    let right = alg.multiply(&elem(a), &alg.basis_product(b, c)?)?;
                    Ok(left == right)
                });
                associativity.record(outcome, || vec![a, b, c]);
            }
        }
    }

    if !alg.has_coproduct() {
        return TqftReport {
            associativity,
            coassociativity: AxiomCheck::default(),
            frobenius: AxiomCheck::default(),
            cocommutative: None,
        };
    }

    let mut coassociativity = AxiomCheck::applicable();
    let mut cocommutative = true;
    for &a in &basis {
        let delta = alg.basis_coproduct(a);
        if let Ok(d) = &delta {
            cocommutative &= d.swapped() == *d;
        }
        let outcome = delta.and_then(|d| Ok(left_coproduct(alg, &d)? == right_coproduct(alg, &d)?));
        coassociativity.record(outcome, || vec![a]);
    }

    let mut frobenius = AxiomCheck::applicable();
    for &a in &basis {
        let da = alg.basis_coproduct(a);
        for &b in &basis {
            let outcome = (|| {
                let lhs = alg.coproduct(&alg.basis_product(a, b)?)?;
                let db = alg.basis_coproduct(b)?;
                let mid = absorb(alg, da.as_ref().map_err(Clone::clone)?, &elem(b), true)?;
                let rhs = absorb(alg, &db, &elem(a), false)?;
                Ok(lhs == mid && mid == rhs)
            })();
            frobenius.record(outcome, || vec![a, b]);
        }
    }

    TqftReport { associativity, coassociativity, frobenius, cocommutative: Some(cocommutative) }
}
