//! Finite abelian coefficient groups and their embeddings into algebra units.
//!
//! A [`FiniteAbelianGroup`] is `ℤ/m₁ × … × ℤ/m_r`, written additively.
//! Elements are encoded as indices in mixed radix with the first factor most
//! significant, so index order is lexicographic order on component tuples.
//! The acting group always acts trivially on these coefficients.

use std::sync::Arc;

use thiserror::Error;

use crate::loopalg::{AlgebraElement, AlgebraError, GradedBasisAlgebra};

/// Largest coefficient group accepted by [`UnitEmbedding`]; the
/// multiplicativity check is quadratic in the order.
pub const MAX_EMBEDDED_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("coefficient modulus must be at least 1")]
    ZeroModulus,
    #[error("coefficient group order overflows")]
    TooLarge,
    #[error("element {0:?} does not belong to the coefficient group")]
    BadElement(Vec<u64>),
    #[error("cannot parse coefficient element {0:?}")]
    ElementParse(String),
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("image of generator {generator} is not concentrated in the unit's degree")]
    ImageDegree { generator: usize },
    #[error("image of generator {generator} has order {order} which does not divide {modulus}")]
    ImageOrder { generator: usize, modulus: u64, order: String },
    #[error("embedding is not injective: element {0:?} maps to the unit")]
    NotInjective(Vec<u64>),
    #[error("embedding is not multiplicative at ({0:?}, {1:?})")]
    NotMultiplicative(Vec<u64>, Vec<u64>),
    #[error("coefficient group of order {0} is too large to embed (max {MAX_EMBEDDED_ORDER})")]
    EmbeddingTooLarge(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
    order: usize,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self, AbelianError> {
        if factors.contains(&0) {
            return Err(AbelianError::ZeroModulus);
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(usize::try_from(m).ok()?))
            .ok_or(AbelianError::TooLarge)?;
        Ok(Self { factors, order })
    }

    /// The trivial group (no factors).
    pub fn trivial() -> Self {
        Self { factors: Vec::new(), order: 1 }
    }

    /// `ℤ/m`
    pub fn cyclic(m: u64) -> Result<Self, AbelianError> {
        Self::new(vec![m])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn components(&self, a: usize) -> Vec<u64> {
        let mut rest = a as u64;
        let mut out = vec![0; self.factors.len()];
        for (slot, &m) in out.iter_mut().zip(&self.factors).rev() {
            *slot = rest % m;
            rest /= m;
        }
        out
    }

    pub fn from_components(&self, comps: &[u64]) -> Result<usize, AbelianError> {
        if comps.len() != self.factors.len() || comps.iter().zip(&self.factors).any(|(c, m)| c >= m) {
            return Err(AbelianError::BadElement(comps.to_vec()));
        }
        Ok(comps
            .iter()
            .zip(&self.factors)
            .fold(0u64, |acc, (&c, &m)| acc * m + c) as usize)
    }

    /// Component `i` of `a`.
    pub fn component(&self, a: usize, i: usize) -> u64 {
        let below: u64 = self.factors[i + 1..].iter().product();
        (a as u64 / below) % self.factors[i]
    }

    /// The element with `value` in factor `i` and zero elsewhere.
    pub fn embed_component(&self, i: usize, value: u64) -> usize {
        let below: u64 = self.factors[i + 1..].iter().product();
        ((value % self.factors[i]) * below) as usize
    }

    /// Generator of factor `i`.
    pub fn generator(&self, i: usize) -> usize {
        self.embed_component(i, 1)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, m| (x + y) % m)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, m| (x + m - y) % m)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.sub(0, a)
    }

    /// `k · a`
    pub fn scale(&self, k: i64, a: usize) -> usize {
        self.combine(a, 0, |x, _, m| ((x as i128 * k as i128).rem_euclid(m as i128)) as u64)
    }

    fn combine(&self, a: usize, b: usize, op: impl Fn(u64, u64, u64) -> u64) -> usize {
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut weight = 1u64;
        for &m in self.factors.iter().rev() {
            out += op(a % m, b % m, m) * weight;
            weight *= m;
            a /= m;
            b /= m;
        }
        out as usize
    }

    /// Least `k ≥ 1` with `k·a = 0`.
    pub fn element_order(&self, a: usize) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    /// Comma-separated components; `"0"` in the trivial group.
    pub fn format_element(&self, a: usize) -> String {
        if self.factors.is_empty() {
            return "0".to_string();
        }
        self.components(a).iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }

    /// Parses comma-separated components, e.g. `"1"` or `"1,2"`.
    pub fn parse_element(&self, text: &str) -> Result<usize, AbelianError> {
        let text = text.trim();
        if self.factors.is_empty() && (text.is_empty() || text == "0") {
            return Ok(0);
        }
        let comps = text
            .split(',')
            .map(|c| c.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| AbelianError::ElementParse(text.to_string()))?;
        self.from_components(&comps)
    }
}

/// An injective homomorphism from a coefficient group into the units of an
/// algebra, concentrated in the unit's degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitEmbedding {
    domain: FiniteAbelianGroup,
    target: Arc<GradedBasisAlgebra>,
    generator_images: Vec<AlgebraElement>,
    images: Vec<AlgebraElement>,
}

impl UnitEmbedding {
    /// Sends every element to the unit; only valid on the trivial group.
    pub fn trivial(target: Arc<GradedBasisAlgebra>) -> Self {
        let unit = target.unit();
        Self {
            domain: FiniteAbelianGroup::trivial(),
            target,
            generator_images: Vec::new(),
            images: vec![unit],
        }
    }

    /// Validates one image per factor generator and tabulates the whole map.
    pub fn new(
        domain: FiniteAbelianGroup,
        target: Arc<GradedBasisAlgebra>,
        generator_images: Vec<AlgebraElement>,
    ) -> Result<Self, AbelianError> {
        let r = domain.factors().len();
        if generator_images.len() != r {
            return Err(AbelianError::ImageCount { expected: r, got: generator_images.len() });
        }
        if domain.order() > MAX_EMBEDDED_ORDER {
            return Err(AbelianError::EmbeddingTooLarge(domain.order()));
        }
        let unit = target.unit();
        let unit_degree = target.basis()[target.unit_index()].degree;

        // powers[i][k] = image_i^k for 0 ≤ k < m_i
        let mut powers: Vec<Vec<AlgebraElement>> = Vec::with_capacity(r);
        for (i, (img, &m)) in generator_images.iter().zip(domain.factors()).enumerate() {
            if target.homogeneous_degree(img) != Some(unit_degree) {
                return Err(AbelianError::ImageDegree { generator: i });
            }
            let mut pw = vec![unit.clone()];
            for _ in 1..m {
                let next = target.multiply(pw.last().unwrap(), img)?;
                pw.push(next);
            }
            let full = target.multiply(pw.last().unwrap(), img)?;
            if full != unit {
                let order = Self::multiplicative_order(&target, img, 4 * MAX_EMBEDDED_ORDER as u64)
                    .map_or_else(|| "infinite or unknown".to_string(), |o| o.to_string());
                return Err(AbelianError::ImageOrder { generator: i, modulus: m, order });
            }
            powers.push(pw);
        }

        let mut images = Vec::with_capacity(domain.order());
        for a in domain.elements() {
            let mut x = unit.clone();
            for (i, pw) in powers.iter().enumerate() {
                x = target.multiply(&x, &pw[domain.component(a, i) as usize])?;
            }
            if a != 0 && x == unit {
                return Err(AbelianError::NotInjective(domain.components(a)));
            }
            images.push(x);
        }

        for a in domain.elements() {
            for b in domain.elements() {
                if target.multiply(&images[a], &images[b])? != images[domain.add(a, b)] {
                    return Err(AbelianError::NotMultiplicative(
                        domain.components(a),
                        domain.components(b),
                    ));
                }
            }
        }

        Ok(Self { domain, target, generator_images, images })
    }

    fn multiplicative_order(alg: &GradedBasisAlgebra, x: &AlgebraElement, bound: u64) -> Option<u64> {
        let unit = alg.unit();
        let mut acc = x.clone();
        for k in 1..=bound {
            if acc == unit {
                return Some(k);
            }
            acc = alg.multiply(&acc, x).ok()?;
        }
        None
    }

    pub fn domain(&self) -> &FiniteAbelianGroup {
        &self.domain
    }

    pub fn target(&self) -> &Arc<GradedBasisAlgebra> {
        &self.target
    }

    pub fn generator_images(&self) -> &[AlgebraElement] {
        &self.generator_images
    }

    /// `φ(a)`
    pub fn image(&self, a: usize) -> &AlgebraElement {
        &self.images[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_basics() {
        assert_eq!(FiniteAbelianGroup::new(vec![2, 0]), Err(AbelianError::ZeroModulus));
        let trivial = FiniteAbelianGroup::new(vec![1]).unwrap();
        assert_eq!(trivial.order(), 1);
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        assert_eq!(z2.element_order(1), 2);
        let z6 = FiniteAbelianGroup::cyclic(6).unwrap();
        assert_eq!(z6.element_order(0), 1);
        assert_eq!(z6.element_order(1), 6);

        let a = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
        assert_eq!(a.order(), 6);
        let x = a.from_components(&[1, 1]).unwrap();
        // iterate addition until zero
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = a.add(y, x);
            k += 1;
        }
        assert_eq!(k, 6);
        assert_eq!(a.element_order(x), 6);

        let b = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        assert_eq!(b.element_order(b.from_components(&[1, 2]).unwrap()), 2);
        assert_eq!(b.element_order(b.from_components(&[1, 1]).unwrap()), 4);
    }

    #[test]
    fn encoding_and_arithmetic() {
        let a = FiniteAbelianGroup::new(vec![3, 4]).unwrap();
        for x in a.elements() {
            assert_eq!(a.parse_element(&a.format_element(x)).unwrap(), x);
            assert_eq!(a.from_components(&a.components(x)).unwrap(), x);
            assert_eq!(a.add(x, a.neg(x)), 0);
            assert_eq!(a.scale(-1, x), a.neg(x));
            assert_eq!(a.scale(3, x), a.add(x, a.add(x, x)));
            for y in a.elements() {
                assert_eq!(a.sub(a.add(x, y), y), x);
            }
        }
        assert_eq!(a.components(a.generator(1)), vec![0, 1]);
        assert_eq!(a.component(a.parse_element("2,3").unwrap(), 0), 2);
        assert!(a.parse_element("3,0").is_err());
        assert!(a.parse_element("x").is_err());
        assert_eq!(FiniteAbelianGroup::trivial().parse_element("").unwrap(), 0);
    }

    #[test]
    fn embeddings_into_cp1() {
        let alg = Arc::new(GradedBasisAlgebra::cpl_minimal_model(1, 2).unwrap());
        let u = alg.parse_element("[CP^1] + eps").unwrap();

        let triv = UnitEmbedding::trivial(alg.clone());
        assert_eq!(triv.image(0), &alg.unit());

        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let phi = UnitEmbedding::new(z2, alg.clone(), vec![u.clone()]).unwrap();
        assert_eq!(phi.image(1), &u);

        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        let err = UnitEmbedding::new(z3, alg.clone(), vec![u.clone()]).unwrap_err();
        assert_eq!(
            err,
            AbelianError::ImageOrder { generator: 0, modulus: 3, order: "2".into() }
        );

        // order 2 divides 4 but the map would not be injective
        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        let err = UnitEmbedding::new(z4, alg.clone(), vec![u.clone()]).unwrap_err();
        assert_eq!(err, AbelianError::NotInjective(vec![2]));

        let eps = alg.parse_element("eps").unwrap();
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        assert!(UnitEmbedding::new(z2, alg, vec![eps]).is_err());
    }

    #[test]
    fn embedding_degree_check() {
        let alg = Arc::new(
            GradedBasisAlgebra::circle_model(crate::loopalg::Field::Prime(2), 2).unwrap(),
        );
        let at0 = alg.parse_element("a.t^0").unwrap();
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        assert_eq!(
            UnitEmbedding::new(z2, alg, vec![at0]).unwrap_err(),
            AbelianError::ImageDegree { generator: 0 }
        );
    }
}
