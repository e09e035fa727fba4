use num_integer::Integer;
use serde::Serialize;

use super::fxi::FXiMap;
use super::twisted::TwistedAlgebra;
use crate::cohomology::{class_order, h2_order, solve_coboundary, Cochain1};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplittingReport {
    pub splits: bool,
    /// `ξ` with `c = dξ`, by its values on the group elements in index order.
    pub witness: Option<Vec<usize>>,
    /// Description of the nonzero class when the algebra does not split.
    pub obstruction: Option<String>,
    pub obstruction_order: Option<u64>,
    /// Whether `F_ξ` was verified multiplicative, bijective and, when a
    /// coproduct exists, comultiplicative on every basis vector.
    pub checked_iso: bool,
    pub h2_order: Option<u64>,
    pub failures: Vec<String>,
    pub warnings: Vec<String>,
}

/// Decides whether the twisted algebra is isomorphic to the untwisted tensor
/// product via some `F_ξ`, and verifies the isomorphism when it is.
pub fn splitting_verdict(alg: &TwistedAlgebra) -> SplittingReport {
    let mut report = SplittingReport {
        splits: false,
        witness: None,
        obstruction: None,
        obstruction_order: None,
        checked_iso: false,
        h2_order: None,
        failures: Vec::new(),
        warnings: Vec::new(),
    };

    let ch = alg.field().characteristic() as u64;
    let order = alg.group().order() as u64;
    if ch != 0 && ch.gcd(&order) != 1 {
        report.warnings.push(format!(
            "characteristic {ch} is not coprime to the group order {order}"
        ));
    }
    match h2_order(alg.group(), alg.coeff()) {
        Ok(h) => report.h2_order = Some(h),
        Err(e) => report.warnings.push(format!("H² order not computed: {e}")),
    }

    let untwisted = alg.untwisted();
    let xi = match solve_coboundary(alg.cocycle(), untwisted.cocycle()) {
        Ok(xi) => xi,
        Err(e) => {
            report.failures.push(e.to_string());
            return report;
        }
    };
    let Some(xi) = xi else {
        match class_order(alg.cocycle()) {
            Ok(k) => {
                report.obstruction_order = Some(k);
                report.obstruction = Some(format!("cocycle class of order {k} in H²; not a coboundary"));
            }
            Err(e) => report.failures.push(e.to_string()),
        }
        return report;
    };

    report.splits = true;
    report.witness = Some(xi.values().to_vec());
    report.checked_iso = verify(alg, &untwisted, xi, &mut report.failures);
    report
}

fn verify(alg: &TwistedAlgebra, untwisted: &TwistedAlgebra, xi: Cochain1, failures: &mut Vec<String>) -> bool {
    let f = match FXiMap::new(alg, untwisted, xi) {
        Ok(f) => f,
        Err(e) => {
            failures.push(e.to_string());
            return false;
        }
    };
    let names = |w: &[super::TwistedBasis]| {
        w.iter().map(|&b| alg.basis_name(b)).collect::<Vec<_>>().join(", ")
    };
    let mut ok = true;
    let mult = f.verify_multiplicative();
    for w in &mult.failures {
        failures.push(format!("F_ξ not multiplicative at ({})", names(w)));
    }
    ok &= mult.passed() && mult.checked > 0;
    match f.verify_bijective() {
        Ok(b) => {
            for w in &b.failures {
                failures.push(format!("F_ξ not invertible at {}", names(w)));
            }
            ok &= b.passed();
        }
        Err(e) => {
            failures.push(e.to_string());
            ok = false;
        }
    }
    if alg.has_coproduct() {
        match f.verify_comultiplicative() {
            Ok(c) => {
                for w in &c.failures {
                    failures.push(format!("F_ξ not comultiplicative at {}", names(w)));
                }
                ok &= c.passed();
            }
            Err(e) => {
                failures.push(e.to_string());
                ok = false;
            }
        }
    }
    ok
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::abelian::{FiniteAbelianGroup, UnitEmbedding};
    use crate::cohomology::carrying_cocycle;
    use crate::fingroup::FiniteGroup;
    use crate::loopalg::GradedBasisAlgebra;

    fn cp1(n: usize) -> TwistedAlgebra {
        let base = Arc::new(GradedBasisAlgebra::cpl_minimal_model(1, 2).unwrap());
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let img = base.parse_element("[CP^1] + eps").unwrap();
        let phi = UnitEmbedding::new(z2.clone(), base.clone(), vec![img]).unwrap();
        let g = Arc::new(FiniteGroup::cyclic(n).unwrap());
        let c = carrying_cocycle(g.clone(), 1, z2, 1).unwrap();
        TwistedAlgebra::new(base, g, phi, c).unwrap()
    }

    #[test]
    fn odd_cyclic_groups_split() {
        let r = splitting_verdict(&cp1(3));
        assert!(r.splits && r.checked_iso, "{r:?}");
        assert_eq!(r.h2_order, Some(1));
        assert!(r.warnings.is_empty());
        assert!(r.failures.is_empty());
    }

    #[test]
    fn c2_carrying_class_obstructs() {
        let r = splitting_verdict(&cp1(2));
        assert!(!r.splits);
        assert_eq!(r.obstruction_order, Some(2));
        assert_eq!(r.h2_order, Some(2));
        assert_eq!(r.warnings.len(), 1);
    }
}
