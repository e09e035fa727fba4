//! JSON presentation files for graded algebras.
//!
//! ```json
//! {"name": "k[e]/e^2", "scalar": "Fp:3",
//!  "basis": [{"name": "1", "degree": 0}, {"name": "e", "degree": 0}],
//!  "unit": 0, "point_class": 1, "euler_char": 2, "graded_commutative": true,
//!  "products": [[0, 0, [["1", 0]]], [0, 1, [["1", 1]]], [1, 0, [["1", 1]]]]}
//! ```
//!
//! Missing `(i, j)` entries are zero products.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::algebra::{BasisElement, GradedBasisAlgebra};
use super::element::AlgebraElement;
use super::scalar::Field;
use super::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationBasis {
    pub name: String,
    pub degree: i32,
}

/// `(i, j, [(coefficient, k), ...])`: `b_i ∘ b_j = Σ coefficient · b_k`.
pub type ProductEntry = (usize, usize, Vec<(String, usize)>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub name: String,
    pub scalar: String,
    pub basis: Vec<PresentationBasis>,
    pub unit: usize,
    #[serde(default)]
    pub point_class: Option<usize>,
    pub euler_char: i64,
    #[serde(default)]
    pub graded_commutative: bool,
    pub products: Vec<ProductEntry>,
}

impl Presentation {
    pub fn build(&self) -> Result<GradedBasisAlgebra, AlgebraError> {
        let field = Field::parse(&self.scalar)?;
        let n = self.basis.len();
        let mut table = vec![Some(AlgebraElement::zero()); n * n];
        let mut seen = vec![false; n * n];
        for (i, j, terms) in &self.products {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(AlgebraError::IndexOutOfRange { what: "product", index: i.max(j) });
            }
            if std::mem::replace(&mut seen[i * n + j], true) {
                return Err(AlgebraError::Presentation(format!("product ({i}, {j}) given twice")));
            }
            let mut value = AlgebraElement::zero();
            for (coef, k) in terms {
                if *k >= n {
                    return Err(AlgebraError::IndexOutOfRange { what: "product term", index: *k });
                }
                value.add_term(*k, field.parse_scalar(coef)?);
            }
            table[i * n + j] = Some(value);
        }
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElement { name: b.name.clone(), degree: b.degree })
            .collect();
        GradedBasisAlgebra::new(
            self.name.clone(),
            field,
            basis,
            self.unit,
            self.point_class,
            self.euler_char,
            self.graded_commutative,
            table,
        )
    }
}

impl GradedBasisAlgebra {
    /// The presentation of this algebra, listing nonzero products only.
    pub fn to_presentation(&self) -> Result<Presentation, AlgebraError> {
        if self.is_truncated() {
            return Err(AlgebraError::NotPresentable);
        }
        let n = self.dim();
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let value = self.basis_product(i, j).expect("not truncated");
                if !value.is_zero() {
                    let terms = value.terms().map(|(k, c)| (c.to_string(), k)).collect();
                    products.push((i, j, terms));
                }
            }
        }
        Ok(Presentation {
            name: self.name.clone(),
            scalar: self.field.to_string(),
            basis: self
                .basis
                .iter()
                .map(|b| PresentationBasis { name: b.name.clone(), degree: b.degree })
                .collect(),
            unit: self.unit,
            point_class: self.point_class,
            euler_char: self.euler_char,
            graded_commutative: self.graded_commutative,
            products,
        })
    }
}

pub fn parse_presentation(json: &str) -> Result<GradedBasisAlgebra, AlgebraError> {
    let p: Presentation =
        serde_json::from_str(json).map_err(|e| AlgebraError::Presentation(e.to_string()))?;
    p.build()
}

pub fn load_presentation(path: impl AsRef<Path>) -> Result<GradedBasisAlgebra, AlgebraError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| AlgebraError::Presentation(format!("{}: {e}", path.display())))?;
    parse_presentation(&text)
}
