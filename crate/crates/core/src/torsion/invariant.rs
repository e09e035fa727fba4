use super::element::{TwistedBasis, TwistedElement};
use super::twisted::TwistedAlgebra;
use super::TorsionError;
use crate::fingroup::ConjugacyPartition;

/// The span of `x ⊗ σ_C`, with `σ_C` the sum of a conjugacy class `C`.
#[derive(Debug, Clone)]
pub struct InvariantPart {
    partition: ConjugacyPartition,
    base_dim: usize,
    /// Product pairs checked for closure.
    pub checked: usize,
    /// Product pairs skipped because the base product leaves its window.
    pub skipped: usize,
}

impl InvariantPart {
    pub fn classes(&self) -> &[Vec<usize>] {
        self.partition.classes()
    }

    pub fn dim(&self) -> usize {
        self.base_dim * self.partition.len()
    }

    /// Basis in index order: base index major, class minor.
    pub fn basis(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.partition.len();
        (0..self.dim()).map(move |i| (i / k, i % k))
    }

    /// `x_base ⊗ σ_class`
    pub fn element(&self, alg: &TwistedAlgebra, base: usize, class: usize) -> TwistedElement {
        let one = alg.field().one();
        let mut out = TwistedElement::zero();
        for &g in &self.partition.classes()[class] {
            out.add_term(TwistedBasis::new(base, g), one);
        }
        out
    }

    /// Whether `u` is constant on conjugacy classes in each base slot.
    pub fn contains(&self, u: &TwistedElement) -> bool {
        u.terms().all(|(b, c)| {
            self.partition.classes()[self.partition.class_of(b.group)]
                .iter()
                .all(|&g| u.coefficient(TwistedBasis::new(b.base, g)) == Some(c))
        })
    }

    pub fn is_whole_algebra(&self) -> bool {
        self.partition.classes().iter().all(|c| c.len() == 1)
    }
}

/// Restricts to `H ⊗ Z(k[G])` and checks that the product closes on it.
pub fn invariant_part(alg: &TwistedAlgebra) -> Result<InvariantPart, TorsionError> {
    let mut part = InvariantPart {
        partition: alg.group().conjugacy_classes(),
        base_dim: alg.base().dim(),
        checked: 0,
        skipped: 0,
    };
    let basis: Vec<(usize, usize)> = part.basis().collect();
    let elements: Vec<TwistedElement> = basis.iter().map(|&(x, c)| part.element(alg, x, c)).collect();
    for (i, u) in elements.iter().enumerate() {
        for (j, v) in elements.iter().enumerate() {
            let Ok(p) = alg.multiply(u, v) else {
                part.skipped += 1;
                continue;
            };
            part.checked += 1;
            if !part.contains(&p) {
                let name = |(x, c): (usize, usize)| {
                    format!("{}⊗σ{}", alg.base().basis()[x].name, c)
                };
                return Err(TorsionError::NotClosed(format!(
                    "{} * {} = {}",
                    name(basis[i]),
                    name(basis[j]),
                    alg.format_element(&p)
                )));
            }
        }
    }
    Ok(part)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::abelian::{FiniteAbelianGroup, UnitEmbedding};
    use crate::cohomology::Cochain2;
    use crate::fingroup::FiniteGroup;
    use crate::loopalg::GradedBasisAlgebra;

    fn over(group: FiniteGroup, cocycle: impl Fn(usize, usize) -> usize) -> Result<TwistedAlgebra, TorsionError> {
        let base = Arc::new(GradedBasisAlgebra::cpl_minimal_model(1, 2).unwrap());
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let img = base.parse_element("[CP^1] + eps").unwrap();
        let phi = UnitEmbedding::new(z2.clone(), base.clone(), vec![img]).unwrap();
        let g = Arc::new(group);
        let c = Cochain2::from_fn(g.clone(), z2, cocycle).unwrap();
        TwistedAlgebra::new(base, g, phi, c)
    }

    #[test]
    fn abelian_groups_give_everything() {
        let ta = over(FiniteGroup::cyclic(4).unwrap(), |_, _| 0).unwrap();
        let part = invariant_part(&ta).unwrap();
        assert!(part.is_whole_algebra());
        assert_eq!(part.dim(), ta.dim());
    }

    #[test]
    fn s3_class_sums_close() {
        let s3 = FiniteGroup::from_table(&crate::test_support::s3_rows()).unwrap();
        let ta = over(s3, |_, _| 0).unwrap();
        let part = invariant_part(&ta).unwrap();
        assert_eq!(part.classes().len(), 3);
        assert_eq!(part.dim(), 2 * 3);
        assert_eq!(part.checked, 36);
        // a single transposition is not a class sum
        assert!(!part.contains(&ta.basis_element(TwistedBasis::new(0, 1))));
    }

    #[test]
    fn non_invariant_cocycle_is_rejected() {
        let s3 = Arc::new(FiniteGroup::from_table(&crate::test_support::s3_rows()).unwrap());
        // dξ for ξ supported on one transposition: a cocycle, but not a class function
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let xi = crate::cohomology::Cochain1::new(s3.clone(), z2, vec![0, 1, 0, 0, 0, 0]).unwrap();
        let d = xi.coboundary();
        assert!(d.is_cocycle());
        assert!(matches!(
            over((*s3).clone(), |g, h| d.get(g, h)),
            Err(TorsionError::NotConjugationInvariant(..))
        ));
    }
}
