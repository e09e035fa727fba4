use std::sync::Arc;

use super::element::{TwistedBasis, TwistedElement, TwistedTensor};
use super::TorsionError;
use crate::abelian::{FiniteAbelianGroup, UnitEmbedding};
use crate::cohomology::Cochain2;
use crate::fingroup::FiniteGroup;
use crate::loopalg::{AlgebraError, Field, GradedBasisAlgebra};

/// `H ⊗ k[G]` with product `(x⊗g)(y⊗h) = (x ∘ y ∘ φ(c(g,h))) ⊗ gh` and
/// coproduct `δ_c(x⊗g) = Σ_k Σ (δ₁⊗gk) ⊗ (δ₂⊗k⁻¹)`, where
/// `Σ δ₁⊗δ₂ = δ(x ∘ φ(−c(gk, k⁻¹)))`.
#[derive(Debug, Clone)]
pub struct TwistedAlgebra {
    base: Arc<GradedBasisAlgebra>,
    group: Arc<FiniteGroup>,
    embedding: UnitEmbedding,
    cocycle: Cochain2,
    /// `φ(c(g, h))` at `g·|G| + h`.
    twists: Vec<crate::loopalg::AlgebraElement>,
    /// `φ(−c(g, h))` at `g·|G| + h`.
    inverse_twists: Vec<crate::loopalg::AlgebraElement>,
}

impl TwistedAlgebra {
    pub fn new(
        base: Arc<GradedBasisAlgebra>,
        group: Arc<FiniteGroup>,
        embedding: UnitEmbedding,
        cocycle: Cochain2,
    ) -> Result<Self, TorsionError> {
        if let Some((g, h, k)) = cocycle.cocycle_defect() {
            return Err(TorsionError::NotCocycle(g, h, k));
        }
        if !group.is_abelian() {
            if let Some((s, g, h)) = cocycle.conjugation_defect() {
                return Err(TorsionError::NotConjugationInvariant(s, g, h));
            }
        }
        Self::new_unchecked(base, group, embedding, cocycle)
    }

    /// Like [`TwistedAlgebra::new`] but accepts any normalized 2-cochain, so
    /// that the effect of a broken cocycle identity can be observed.
    pub fn new_unchecked(
        base: Arc<GradedBasisAlgebra>,
        group: Arc<FiniteGroup>,
        embedding: UnitEmbedding,
        cocycle: Cochain2,
    ) -> Result<Self, TorsionError> {
        if !(Arc::ptr_eq(&base, embedding.target()) || *base == **embedding.target()) {
            return Err(TorsionError::EmbeddingTarget);
        }
        if !(Arc::ptr_eq(&group, cocycle.group()) || *group == **cocycle.group()) {
            return Err(TorsionError::GroupMismatch);
        }
        if cocycle.coeff() != embedding.domain() {
            return Err(TorsionError::CoeffMismatch);
        }
        let coeff = embedding.domain();
        let twists = cocycle.values().iter().map(|&a| embedding.image(a).clone()).collect();
        let inverse_twists = cocycle.values().iter().map(|&a| embedding.image(coeff.neg(a)).clone()).collect();
        Ok(Self { base, group, embedding, cocycle, twists, inverse_twists })
    }

    /// The same data twisted by a different cocycle.
    pub fn with_cocycle(&self, cocycle: Cochain2) -> Result<Self, TorsionError> {
        Self::new(self.base.clone(), self.group.clone(), self.embedding.clone(), cocycle)
    }

    /// The untwisted tensor product `H ⊗ k[G]`.
    pub fn untwisted(&self) -> Self {
        let zero = Cochain2::zero(self.group.clone(), self.coeff().clone());
        self.with_cocycle(zero).expect("the zero cochain is an invariant cocycle")
    }

    pub fn base(&self) -> &Arc<GradedBasisAlgebra> {
        &self.base
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeff(&self) -> &FiniteAbelianGroup {
        self.embedding.domain()
    }

    pub fn embedding(&self) -> &UnitEmbedding {
        &self.embedding
    }

    pub fn cocycle(&self) -> &Cochain2 {
        &self.cocycle
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    /// Whether `other` has the same base, group and embedding.
    pub fn shares_data_with(&self, other: &TwistedAlgebra) -> bool {
        (Arc::ptr_eq(&self.base, &other.base) || self.base == other.base)
            && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
            && self.embedding == other.embedding
    }

    pub fn dim(&self) -> usize {
        self.base.dim() * self.group.order()
    }

    /// Basis vectors in index order: base index major, group element minor.
    pub fn basis(&self) -> impl Iterator<Item = TwistedBasis> + '_ {
        let n = self.group.order();
        (0..self.dim()).map(move |i| TwistedBasis::new(i / n, i % n))
    }

    pub fn basis_element(&self, b: TwistedBasis) -> TwistedElement {
        TwistedElement::basis(b, self.field().one())
    }

    pub fn degree(&self, b: TwistedBasis) -> i32 {
        self.base.basis()[b.base].degree
    }

    /// `1 ⊗ e`
    pub fn unit(&self) -> TwistedElement {
        self.basis_element(TwistedBasis::new(self.base.unit_index(), self.group.identity()))
    }

    pub fn basis_product(&self, a: TwistedBasis, b: TwistedBasis) -> Result<TwistedElement, AlgebraError> {
        let xy = self.base.multiply(&self.base.basis_element(a.base), &self.base.basis_element(b.base))?;
        let n = self.group.order();
        let twisted = self.base.multiply(&xy, &self.twists[a.group * n + b.group])?;
        let gh = self.group.mul(a.group, b.group);
        let mut out = TwistedElement::zero();
        for (i, c) in twisted.terms() {
            out.add_term(TwistedBasis::new(i, gh), c);
        }
        Ok(out)
    }

    pub fn multiply(&self, u: &TwistedElement, v: &TwistedElement) -> Result<TwistedElement, AlgebraError> {
        let mut out = TwistedElement::zero();
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                out.add_scaled(&self.basis_product(a, b)?, x * y);
            }
        }
        Ok(out)
    }

    pub fn has_coproduct(&self) -> bool {
        self.base.has_coproduct()
    }

    pub fn basis_coproduct(&self, a: TwistedBasis) -> Result<TwistedTensor, AlgebraError> {
        let grp = &*self.group;
        let n = grp.order();
        let x = self.base.basis_element(a.base);
        let mut out = TwistedTensor::zero();
        for k in grp.elements() {
            let gk = grp.mul(a.group, k);
            let kinv = grp.inverse(k);
            let y = self.base.multiply(&x, &self.inverse_twists[gk * n + kinv])?;
            for ((p, q), c) in self.base.coproduct(&y)?.terms() {
                out.add_term((TwistedBasis::new(p, gk), TwistedBasis::new(q, kinv)), c);
            }
        }
        Ok(out)
    }

    pub fn coproduct(&self, u: &TwistedElement) -> Result<TwistedTensor, AlgebraError> {
        let mut out = TwistedTensor::zero();
        for (a, x) in u.terms() {
            out.add_scaled(&self.basis_coproduct(a)?, x);
        }
        Ok(out)
    }

    /// `x⊗g` with base and group element names.
    pub fn basis_name(&self, b: TwistedBasis) -> String {
        format!("{}⊗{}", self.base.basis()[b.base].name, self.group.element_name(b.group))
    }

    pub fn format_element(&self, u: &TwistedElement) -> String {
        if u.is_zero() {
            return "0".to_string();
        }
        u.terms()
            .map(|(b, c)| if c.is_one() { self.basis_name(b) } else { format!("{c}*{}", self.basis_name(b)) })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn format_tensor(&self, t: &TwistedTensor) -> String {
        if t.is_zero() {
            return "0".to_string();
        }
        t.terms()
            .map(|((a, b), c)| {
                let pair = format!("({}) ⊗ ({})", self.basis_name(a), self.basis_name(b));
                if c.is_one() { pair } else { format!("{c}*{pair}") }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Every basis product, in index order; `None` where the base product
    /// leaves its window.
    pub fn product_table(&self) -> ProductTable {
        let basis: Vec<TwistedBasis> = self.basis().collect();
        let mut entries = Vec::with_capacity(basis.len() * basis.len());
        for &a in &basis {
            for &b in &basis {
                entries.push(self.basis_product(a, b).ok());
            }
        }
        ProductTable { basis, entries }
    }
}

/// All basis products of a twisted algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTable {
    pub basis: Vec<TwistedBasis>,
    pub entries: Vec<Option<TwistedElement>>,
}

impl ProductTable {
    pub fn get(&self, i: usize, j: usize) -> Option<&TwistedElement> {
        self.entries[i * self.basis.len() + j].as_ref()
    }

    /// First index pair where the tables disagree.
    pub fn first_difference(&self, other: &ProductTable) -> Option<(TwistedBasis, TwistedBasis)> {
        if self.basis != other.basis {
            return self.basis.first().map(|&b| (b, b));
        }
        let n = self.basis.len();
        (0..n * n)
            .find(|&k| self.entries[k] != other.entries[k])
            .map(|k| (self.basis[k / n], self.basis[k % n]))
    }

    /// Tab-separated rows `x⊗g  y⊗h  →  product`, after a header line
    /// naming the basis.
    pub fn to_tsv(&self, alg: &TwistedAlgebra) -> String {
        let names: Vec<String> = self.basis.iter().map(|&b| alg.basis_name(b)).collect();
        let mut out = format!("# basis\t{}\n", names.join("\t"));
        let n = self.basis.len();
        for i in 0..n {
            for j in 0..n {
                let value = match self.get(i, j) {
                    Some(v) => alg.format_element(v),
                    None => "overflow".to_string(),
                };
                out.push_str(&format!("{}\t{}\t→\t{}\n", names[i], names[j], value));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::carrying_cocycle;

    fn cp1_c3(a: usize) -> TwistedAlgebra {
        let base = Arc::new(GradedBasisAlgebra::cpl_minimal_model(1, 2).unwrap());
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let img = base.parse_element("[CP^1] + eps").unwrap();
        let phi = UnitEmbedding::new(z2.clone(), base.clone(), vec![img]).unwrap();
        let g = Arc::new(FiniteGroup::cyclic(3).unwrap());
        let c = carrying_cocycle(g.clone(), 1, z2, a).unwrap();
        TwistedAlgebra::new(base, g, phi, c).unwrap()
    }

    #[test]
    fn carrying_product_wraps_into_the_unit_group() {
        let ta = cp1_c3(1);
        let one_g = TwistedBasis::new(0, 1);
        let one_g2 = TwistedBasis::new(0, 2);
        let p = ta.basis_product(one_g, one_g2).unwrap();
        assert_eq!(ta.format_element(&p), "[CP^1]⊗e + eps⊗e");
        let p = ta.basis_product(one_g, one_g).unwrap();
        assert_eq!(ta.format_element(&p), "[CP^1]⊗g2");
    }

    #[test]
    fn unit_and_untwisted_limit() {
        let ta = cp1_c3(1);
        let unit = ta.unit();
        for b in ta.basis() {
            let x = ta.basis_element(b);
            assert_eq!(ta.multiply(&unit, &x).unwrap(), x);
            assert_eq!(ta.multiply(&x, &unit).unwrap(), x);
        }
        let flat = ta.untwisted();
        for a in flat.basis() {
            for b in flat.basis() {
                let xy = ta.base().multiply(&ta.base().basis_element(a.base), &ta.base().basis_element(b.base)).unwrap();
                let gh = ta.group().mul(a.group, b.group);
                let mut expect = TwistedElement::zero();
                for (i, c) in xy.terms() {
                    expect.add_term(TwistedBasis::new(i, gh), c);
                }
                assert_eq!(flat.basis_product(a, b).unwrap(), expect);
            }
        }
        assert_eq!(flat.product_table().first_difference(&cp1_c3(0).product_table()), None);
        assert_eq!(
            ta.product_table().first_difference(&flat.product_table()),
            Some((TwistedBasis::new(0, 1), TwistedBasis::new(0, 2)))
        );
    }

    #[test]
    fn construction_checks() {
        let ta = cp1_c3(1);
        let other = Arc::new(GradedBasisAlgebra::cpl_minimal_model(1, 2).unwrap());
        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        let g = ta.group().clone();
        let c = Cochain2::zero(g.clone(), z3);
        assert_eq!(
            TwistedAlgebra::new(other.clone(), g.clone(), ta.embedding().clone(), c).unwrap_err(),
            TorsionError::CoeffMismatch
        );
        let c4 = Arc::new(FiniteGroup::cyclic(4).unwrap());
        let c = Cochain2::zero(c4, ta.coeff().clone());
        assert_eq!(
            TwistedAlgebra::new(other, g, ta.embedding().clone(), c).unwrap_err(),
            TorsionError::GroupMismatch
        );
    }

    #[test]
    fn coproduct_vanishes_when_euler_char_does() {
        let ta = cp1_c3(1);
        for b in ta.basis() {
            assert!(ta.basis_coproduct(b).unwrap().is_zero());
        }
    }

    #[test]
    fn tsv_has_header_and_rows() {
        let ta = cp1_c3(1);
        let tsv = ta.product_table().to_tsv(&ta);
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines.len(), 1 + 36);
        assert!(lines[0].starts_with("# basis\t[CP^1]⊗e\t[CP^1]⊗g1"));
        assert!(lines.contains(&"[CP^1]⊗g1\t[CP^1]⊗g2\t→\t[CP^1]⊗e + eps⊗e"));
    }
}
