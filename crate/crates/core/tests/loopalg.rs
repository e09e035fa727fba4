mod common;

use common::*;
use discrete_torsion::loopalg::{AlgebraElement, AlgebraError, Field, GradedBasisAlgebra, TensorElement};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![Field::parse("Q").unwrap(), Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::prime(5).unwrap()]
}

fn builtins() -> Vec<GradedBasisAlgebra> {
    let mut out = Vec::new();
    for f in fields() {
        for w in 1..=4 {
            out.push(GradedBasisAlgebra::circle_model(f, w).unwrap());
        }
    }
    for l in 1..=6 {
        for p in [2, 3, 5] {
            out.push(GradedBasisAlgebra::cpl_minimal_model(l, p).unwrap());
        }
    }
    out.push((*dual_numbers()).clone());
    out
}

#[test]
fn builtins_are_unital_associative_and_graded() {
    for alg in builtins() {
        let n = alg.dim();
        let unit = alg.unit();
        for i in 0..n {
            let b = alg.basis_element(i);
            assert_eq!(alg.multiply(&unit, &b).unwrap(), b, "{}", alg.name());
            assert_eq!(alg.multiply(&b, &unit).unwrap(), b, "{}", alg.name());
            for j in 0..n {
                let Some(bij) = alg.basis_product(i, j) else { continue };
                let deg = alg.basis()[i].degree + alg.basis()[j].degree;
                assert!(bij.terms().all(|(k, _)| alg.basis()[k].degree == deg), "{}", alg.name());
                for k in 0..n {
                    let left = alg.multiply(bij, &alg.basis_element(k));
                    let right = alg.basis_product(j, k).map(|bjk| alg.multiply(&b, bjk));
                    if let (Ok(l), Some(Ok(r))) = (left, right) {
                        assert_eq!(l, r, "{} at ({i}, {j}, {k})", alg.name());
                    }
                }
            }
        }
    }
}

#[test]
fn cpl_unit_has_order_gcd() {
    for l in 1..=6u32 {
        for p in [2u32, 3, 5] {
            let alg = GradedBasisAlgebra::cpl_minimal_model(l, p).unwrap();
            let g = num_integer::gcd(p, l + 1);
            if g == 1 {
                assert_eq!(alg.dim(), 1);
                continue;
            }
            let x = alg.unit().plus(&alg.basis_element(alg.index_of("eps").unwrap()));
            let mut acc = x.clone();
            let mut order = 1;
            while acc != alg.unit() {
                acc = alg.multiply(&acc, &x).unwrap();
                order += 1;
            }
            assert_eq!(order, g, "l={l} p={p}");
        }
    }
}

/// `δ(xyz) = Σ δ₁(x)y ⊗ δ₂(x)z` on every algebra with a point class.
#[test]
fn coproduct_factors_through_the_first_factor() {
    for alg in builtins().into_iter().filter(|a| a.has_coproduct()) {
        let n = alg.dim();
        for x in 0..n {
            let dx = alg.coproduct(&alg.basis_element(x)).unwrap();
            for y in 0..n {
                for z in 0..n {
                    let (y, z) = (alg.basis_element(y), alg.basis_element(z));
                    let Ok(xy) = alg.multiply(&alg.basis_element(x), &y) else { continue };
                    let Ok(xyz) = alg.multiply(&xy, &z) else { continue };
                    let mut rhs = TensorElement::zero();
                    let mut truncated = false;
                    for ((p, q), s) in dx.terms() {
                        match (alg.multiply(&alg.basis_element(p), &y), alg.multiply(&alg.basis_element(q), &z)) {
                            (Ok(l), Ok(r)) => rhs.add_scaled(&TensorElement::outer(&l, &r), s),
                            _ => truncated = true,
                        }
                    }
                    if !truncated {
                        assert_eq!(alg.coproduct(&xyz).unwrap(), rhs, "{}", alg.name());
                    }
                }
            }
        }
    }
}

#[test]
fn coproduct_vanishes_when_euler_char_does() {
    for alg in builtins() {
        if alg.field().from_i64(alg.euler_char()).is_zero() {
            for i in 0..alg.dim() {
                if let Ok(d) = alg.coproduct(&alg.basis_element(i)) {
                    assert!(d.is_zero(), "{}", alg.name());
                }
            }
        }
    }
}

#[test]
fn fixture_coproduct_values() {
    let h = dual_numbers();
    let two = h.field().from_i64(2);
    let eps = h.basis_element(1);
    let mut expect = TensorElement::zero();
    expect.add_scaled(&TensorElement::outer(&eps, &eps), two);
    assert_eq!(h.coproduct(&h.unit()).unwrap(), expect);
    assert!(h.coproduct(&eps).unwrap().is_zero());
}

proptest! {
    /// Circle products match Laurent arithmetic or overflow; nothing is
    /// silently dropped.
    #[test]
    fn circle_window_discipline(w in 1u32..=6, i in -6i64..=6, j in -6i64..=6, ai: bool, aj: bool) {
        let w_ = w as i64;
        prop_assume!(i.abs() <= w_ && j.abs() <= w_);
        let alg = GradedBasisAlgebra::circle_model(Field::prime(3).unwrap(), w).unwrap();
        let name = |a: bool, n: i64| if a { format!("a.t^{n}") } else { format!("t^{n}") };
        let x = alg.basis_element(alg.index_of(&name(ai, i)).unwrap());
        let y = alg.basis_element(alg.index_of(&name(aj, j)).unwrap());
        let got = alg.multiply(&x, &y);
        if ai && aj {
            prop_assert!(got.unwrap().is_zero());
        } else if (i + j).abs() <= w_ {
            let expect = alg.basis_element(alg.index_of(&name(ai || aj, i + j)).unwrap());
            prop_assert_eq!(got.unwrap(), expect);
        } else {
            let overflowed = matches!(got, Err(AlgebraError::WindowOverflow { .. }));
            prop_assert!(overflowed);
        }
    }

    #[test]
    fn elements_store_no_zeros(coeffs in proptest::collection::vec(-4i64..=4, 1..8)) {
        let f = Field::prime(3).unwrap();
        let mut x = AlgebraElement::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            x.add_term(i % 3, f.from_i64(c));
        }
        prop_assert!(x.terms().all(|(_, c)| !c.is_zero()));
        prop_assert_eq!(x.is_zero(), x.is_empty());
    }
}
