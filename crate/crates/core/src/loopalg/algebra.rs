use crate::fingroup::{FiniteGroup, GroupError};

use super::element::{AlgebraElement, TensorElement};
use super::scalar::{Field, Scalar};
use super::AlgebraError;

/// Largest basis accepted; validation is cubic in the basis size.
pub const MAX_BASIS: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub degree: i32,
}

/// A graded algebra with a finite basis and an explicit product table.
///
/// A table entry of `None` marks a product that leaves a truncated model
/// (the Laurent window of the circle model). Multiplying into such an
/// entry is an error, never a silent zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasisAlgebra {
    pub(super) name: String,
    pub(super) field: Field,
    pub(super) basis: Vec<BasisElement>,
    pub(super) unit: usize,
    pub(super) point_class: Option<usize>,
    pub(super) euler_char: i64,
    pub(super) graded_commutative: bool,
    pub(super) table: Vec<Option<AlgebraElement>>,
    pub(super) notes: Option<String>,
}

impl GradedBasisAlgebra {
    /// Assembles and validates an algebra. `products[i * n + j]` is
    /// `b_i ∘ b_j`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        field: Field,
        basis: Vec<BasisElement>,
        unit: usize,
        point_class: Option<usize>,
        euler_char: i64,
        graded_commutative: bool,
        products: Vec<Option<AlgebraElement>>,
    ) -> Result<Self, AlgebraError> {
        let alg = Self {
            name: name.into(),
            field,
            basis,
            unit,
            point_class,
            euler_char,
            graded_commutative,
            table: products,
            notes: None,
        };
        alg.validate()?;
        Ok(alg)
    }

    /// Checks the unit laws, degree additivity, associativity on all basis
    /// triples and, when flagged, graded commutativity. Triples touching a
    /// truncated product are skipped.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.basis.len();
        if n == 0 {
            return Err(AlgebraError::EmptyBasis);
        }
        if n > MAX_BASIS {
            return Err(AlgebraError::TooLarge(n));
        }
        if self.table.len() != n * n {
            return Err(AlgebraError::Presentation(format!(
                "product table has {} entries, expected {}",
                self.table.len(),
                n * n
            )));
        }
        if self.unit >= n {
            return Err(AlgebraError::IndexOutOfRange { what: "unit", index: self.unit });
        }
        if let Some(pc) = self.point_class {
            if pc >= n {
                return Err(AlgebraError::IndexOutOfRange { what: "point class", index: pc });
            }
        }
        for (i, b) in self.basis.iter().enumerate() {
            if self.basis[..i].iter().any(|o| o.name == b.name) {
                return Err(AlgebraError::DuplicateName(b.name.clone()));
            }
        }
        for entry in self.table.iter().flatten() {
            for (k, c) in entry.terms() {
                if k >= n {
                    return Err(AlgebraError::IndexOutOfRange { what: "product term", index: k });
                }
                if c.field() != self.field {
                    return Err(AlgebraError::Presentation(
                        "coefficient from a different field".into(),
                    ));
                }
            }
        }

        let one = self.field.one();
        for b in 0..n {
            let expect = Some(AlgebraElement::basis(b, one));
            if self.entry(self.unit, b) != expect.as_ref() || self.entry(b, self.unit) != expect.as_ref() {
                return Err(AlgebraError::UnitLaw(self.basis[b].name.clone()));
            }
        }

        for i in 0..n {
            for j in 0..n {
                let Some(prod) = self.entry(i, j) else { continue };
                let deg = self.basis[i].degree + self.basis[j].degree;
                if prod.terms().any(|(k, _)| self.basis[k].degree != deg) {
                    return Err(AlgebraError::DegreeMismatch(
                        self.basis[i].name.clone(),
                        self.basis[j].name.clone(),
                    ));
                }
            }
        }

        if self.graded_commutative {
            for i in 0..n {
                for j in i..n {
                    let (Some(ij), Some(ji)) = (self.entry(i, j), self.entry(j, i)) else {
                        continue;
                    };
                    let sign = self.koszul_sign(i, j);
                    if *ij != ji.scaled(sign) {
                        return Err(AlgebraError::Commutativity(
                            self.basis[i].name.clone(),
                            self.basis[j].name.clone(),
                        ));
                    }
                }
            }
        }

        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if let Some((l, r)) = self.associator(i, j, k) {
                        if l != r {
                            return Err(AlgebraError::Associativity(
                                self.basis[i].name.clone(),
                                self.basis[j].name.clone(),
                                self.basis[k].name.clone(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Both bracketings of `b_i b_j b_k`, or `None` when either leaves the
    /// window.
    pub(crate) fn associator(&self, i: usize, j: usize, k: usize) -> Option<(AlgebraElement, AlgebraElement)> {
        let one = self.field.one();
        let ij = self.entry(i, j)?;
        let jk = self.entry(j, k)?;
        let left = self.multiply(ij, &AlgebraElement::basis(k, one)).ok()?;
        let right = self.multiply(&AlgebraElement::basis(i, one), jk).ok()?;
        Some((left, right))
    }

    fn koszul_sign(&self, i: usize, j: usize) -> Scalar {
        let d = self.basis[i].degree as i64 * self.basis[j].degree as i64;
        if d.rem_euclid(2) == 0 {
            self.field.one()
        } else {
            -self.field.one()
        }
    }

    #[inline]
    fn entry(&self, i: usize, j: usize) -> Option<&AlgebraElement> {
        self.table[i * self.basis.len() + j].as_ref()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::basis(self.unit, self.field.one())
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(i, self.field.one())
    }

    pub fn point_class(&self) -> Option<usize> {
        self.point_class
    }

    pub fn euler_char(&self) -> i64 {
        self.euler_char
    }

    pub fn is_graded_commutative(&self) -> bool {
        self.graded_commutative
    }

    /// Free-form remarks attached to a built-in model.
    pub fn notes(&self) -> Option<&str> {
        self.notes.as_deref()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Whether a window-truncated product exists anywhere in the table.
    pub fn is_truncated(&self) -> bool {
        self.table.iter().any(Option::is_none)
    }

    /// Raw table entry `b_i ∘ b_j` (`None` for a truncated product).
    pub fn basis_product(&self, i: usize, j: usize) -> Option<&AlgebraElement> {
        self.entry(i, j)
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let mut out = AlgebraElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let prod = self.entry(i, j).ok_or_else(|| AlgebraError::WindowOverflow {
                    left: self.basis[i].name.clone(),
                    right: self.basis[j].name.clone(),
                })?;
                out.add_scaled(prod, a * b);
            }
        }
        Ok(out)
    }

    /// The common degree of all terms, or `None` for zero or inhomogeneous
    /// elements.
    pub fn homogeneous_degree(&self, x: &AlgebraElement) -> Option<i32> {
        let mut degs = x.terms().map(|(i, _)| self.basis[i].degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Whether the base coproduct is defined: the Euler characteristic
    /// vanishes in the field, or a point class is present.
    pub fn has_coproduct(&self) -> bool {
        self.field.from_i64(self.euler_char).is_zero() || self.point_class.is_some()
    }

    /// `δ(x) = χ · ([c₀] ∘ x) ⊗ [c₀]`, the coproduct determined by the Euler
    /// characteristic and the point class.
    pub fn coproduct(&self, x: &AlgebraElement) -> Result<TensorElement, AlgebraError> {
        let chi = self.field.from_i64(self.euler_char);
        if chi.is_zero() {
            return Ok(TensorElement::zero());
        }
        let pc = self.point_class.ok_or(AlgebraError::PointClassRequired)?;
        let point = self.basis_element(pc);
        let left = self.multiply(&point, x)?;
        let mut out = TensorElement::zero();
        out.add_scaled(&TensorElement::outer(&left, &point), chi);
        Ok(out)
    }

    /// Multiplication table of a finite set of units, as a group with the
    /// algebra unit as identity. Candidate `i` becomes group element `i`.
    pub fn unit_group(
        &self,
        candidates: &[AlgebraElement],
    ) -> Result<(FiniteGroup, Vec<AlgebraElement>), AlgebraError> {
        for (i, a) in candidates.iter().enumerate() {
            if let Some(j) = candidates[..i].iter().position(|b| b == a) {
                return Err(AlgebraError::DuplicateCandidate(j, i));
            }
        }
        let unit = self.unit();
        if !candidates.contains(&unit) {
            return Err(AlgebraError::MissingUnit);
        }
        let mut rows = Vec::with_capacity(candidates.len());
        for (i, a) in candidates.iter().enumerate() {
            let mut row = Vec::with_capacity(candidates.len());
            for (j, b) in candidates.iter().enumerate() {
                let prod = self.multiply(a, b).map_err(|_| AlgebraError::NotClosed(i, j))?;
                let k = candidates
                    .iter()
                    .position(|c| *c == prod)
                    .ok_or(AlgebraError::NotClosed(i, j))?;
                row.push(k);
            }
            rows.push(row);
        }
        let group = FiniteGroup::from_table(&rows).map_err(|e| match e {
            GroupError::NoInverse(g) => AlgebraError::NoInverse(g),
            other => AlgebraError::Presentation(other.to_string()),
        })?;
        Ok((group, candidates.to_vec()))
    }

    /// Renders an element as `c*name + ...`, or `0`.
    pub fn format_element(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.terms()
            .map(|(i, c)| {
                if c.is_one() {
                    self.basis[i].name.clone()
                } else {
                    format!("{c}*{}", self.basis[i].name)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses `name`, `c*name` and sums of those joined by `+`. Basis names
    /// therefore may not contain `+` or `*`.
    pub fn parse_element(&self, text: &str) -> Result<AlgebraElement, AlgebraError> {
        let mut out = AlgebraElement::zero();
        if text.trim() == "0" {
            return Ok(out);
        }
        for term in text.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(AlgebraError::ElementParse(text.to_string()));
            }
            let (coef, name) = match term.split_once('*') {
                Some((c, n)) => (self.field.parse_scalar(c)?, n.trim()),
                None => (self.field.one(), term),
            };
            let idx = self.index_of(name).ok_or_else(|| AlgebraError::UnknownBasis(name.to_string()))?;
            out.add_term(idx, coef);
        }
        Ok(out)
    }
}
