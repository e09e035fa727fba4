//! Built-in models: the circle and the top-degree part of projective space.

use num_integer::Integer;

use super::algebra::{BasisElement, GradedBasisAlgebra, MAX_BASIS};
use super::element::AlgebraElement;
use super::scalar::Field;
use super::AlgebraError;

const CIRCLE_NOTES: &str = "Lambda(a) (x) k[t, t^-1] truncated to exponents in [-w, w]. \
The exterior generator is placed one degree below the fundamental class \
(deg a = -1, deg t = 0), so the point class a.t^0 and the unit t^0 sit in \
different degrees; a grading with deg a = 0 would not separate them.";

impl GradedBasisAlgebra {
    /// Window-truncated circle model `Λ(a) ⊗ k[t, t⁻¹]`.
    ///
    /// Basis: `t^n` for `-w ≤ n ≤ w` followed by `a.t^n` in the same order.
    /// Products add exponents; `a² = 0`. A product whose exponent leaves the
    /// window is marked truncated and raises
    /// [`AlgebraError::WindowOverflow`] when multiplied.
    pub fn circle_model(field: Field, window: u32) -> Result<Self, AlgebraError> {
        if window == 0 {
            return Err(AlgebraError::InvalidWindow);
        }
        let w = window as i64;
        let span = (2 * w + 1) as usize;
        if 2 * span > MAX_BASIS {
            return Err(AlgebraError::TooLarge(2 * span));
        }
        let one = field.one();
        let mut basis = Vec::with_capacity(2 * span);
        for n in -w..=w {
            basis.push(BasisElement { name: format!("t^{n}"), degree: 0 });
        }
        for n in -w..=w {
            basis.push(BasisElement { name: format!("a.t^{n}"), degree: -1 });
        }
        let exponent = |i: usize| (i % span) as i64 - w;
        let has_a = |i: usize| i >= span;
        let index = |a: bool, n: i64| (n + w) as usize + if a { span } else { 0 };

        let dim = basis.len();
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let entry = if has_a(i) && has_a(j) {
                    Some(AlgebraElement::zero())
                } else {
                    let n = exponent(i) + exponent(j);
                    (n.abs() <= w).then(|| AlgebraElement::basis(index(has_a(i) || has_a(j), n), one))
                };
                table.push(entry);
            }
        }
        let mut alg = Self::new(
            format!("circle (w={window}) over {field}"),
            field,
            basis,
            index(false, 0),
            Some(index(true, 0)),
            0,
            true,
            table,
        )?;
        alg.notes = Some(CIRCLE_NOTES.to_string());
        Ok(alg)
    }

    /// Minimal model of the fundamental-class degree of the loop homology of
    /// `ℂP^l` over `𝔽_p`: basis `[CP^l]` (the unit) and `eps` with
    /// `eps² = 0`, both in degree 0, Euler characteristic `l + 1` and no
    /// point class.
    ///
    /// The torsion summand carrying `eps` is `𝔽_p ⊗ ℤ/(l+1)`, which vanishes
    /// when `p ∤ l+1`; the model is then one-dimensional.
    pub fn cpl_minimal_model(l: u32, p: u32) -> Result<Self, AlgebraError> {
        if l == 0 {
            return Err(AlgebraError::Presentation("l must be at least 1".into()));
        }
        let field = Field::prime(p)?;
        let one = field.one();
        let unit_name = format!("[CP^{l}]");
        let torsion = (p as u64).gcd(&(l as u64 + 1)) > 1;
        let (basis, table) = if torsion {
            (
                vec![
                    BasisElement { name: unit_name, degree: 0 },
                    BasisElement { name: "eps".into(), degree: 0 },
                ],
                vec![
                    Some(AlgebraElement::basis(0, one)),
                    Some(AlgebraElement::basis(1, one)),
                    Some(AlgebraElement::basis(1, one)),
                    Some(AlgebraElement::zero()),
                ],
            )
        } else {
            (
                vec![BasisElement { name: unit_name, degree: 0 }],
                vec![Some(AlgebraElement::basis(0, one))],
            )
        };
        Self::new(
            format!("CP^{l} minimal model over {field}"),
            field,
            basis,
            0,
            None,
            l as i64 + 1,
            true,
            table,
        )
    }
}
