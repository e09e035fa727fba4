//! Linear-algebra route: coboundary equations and `H²` orders, solved one
//! cyclic factor of the coefficients at a time.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::linalg::ModMatrix;
use super::{Cochain1, Cochain2, CohomologyError};
use crate::abelian::FiniteAbelianGroup;
use crate::fingroup::FiniteGroup;

/// Largest dense matrix (rows × columns) built by [`h2_order`] and
/// [`cocycle_generators`].
pub const LINALG_ENTRY_LIMIT: usize = 8_000_000;

/// Non-identity elements and their positions among the unknowns.
struct Cells {
    nonid: Vec<usize>,
    pos: Vec<Option<usize>>,
}

impl Cells {
    fn new(group: &FiniteGroup) -> Self {
        let e = group.identity();
        let nonid: Vec<usize> = group.elements().filter(|&g| g != e).collect();
        let mut pos = vec![None; group.order()];
        for (i, &g) in nonid.iter().enumerate() {
            pos[g] = Some(i);
        }
        Self { nonid, pos }
    }

    fn len(&self) -> usize {
        self.nonid.len()
    }

    /// Column of the 2-cochain value `c(g, h)`, if it is not fixed to zero.
    fn pair(&self, g: usize, h: usize) -> Option<usize> {
        Some(self.pos[g]? * self.len() + self.pos[h]?)
    }
}

/// The matrix of `d` on normalized 1-cochains: rows `(g, h)`, columns `ξ(g)`.
fn d1_matrix(group: &FiniteGroup, cells: &Cells, m: u64) -> ModMatrix {
    let k = cells.len();
    let mut a = ModMatrix::zeros(m, k * k, k);
    for (i, &g) in cells.nonid.iter().enumerate() {
        for (j, &h) in cells.nonid.iter().enumerate() {
            let row = i * k + j;
            a.add_at(row, i, 1);
            a.add_at(row, j, 1);
            if let Some(p) = cells.pos[group.mul(g, h)] {
                a.add_at(row, p, -1);
            }
        }
    }
    a
}

/// The matrix of `d` on normalized 2-cochains: rows `(g, h, k)`, columns
/// `c(g, h)`.
fn d2_matrix(group: &FiniteGroup, cells: &Cells, m: u64) -> Result<ModMatrix, CohomologyError> {
    let k = cells.len();
    let entries = k.pow(3).saturating_mul(k * k);
    if entries > LINALG_ENTRY_LIMIT {
        return Err(CohomologyError::SystemTooLarge(entries));
    }
    let mut a = ModMatrix::zeros(m, k * k * k, k * k);
    let mut row = 0;
    for &g in &cells.nonid {
        for &h in &cells.nonid {
            let gh = group.mul(g, h);
            for &x in &cells.nonid {
                let hx = group.mul(h, x);
                for (cell, sign) in [
                    (cells.pair(h, x), 1),
                    (cells.pair(gh, x), -1),
                    (cells.pair(g, hx), 1),
                    (cells.pair(g, h), -1),
                ] {
                    if let Some(c) = cell {
                        a.add_at(row, c, sign);
                    }
                }
                row += 1;
            }
        }
    }
    Ok(a)
}

fn check_pair(c: &Cochain2, c2: &Cochain2) -> Result<(), CohomologyError> {
    if !c.same_domain(c2) {
        return Err(CohomologyError::Mismatch);
    }
    for x in [c, c2] {
        if let Some((g, h, k)) = x.cocycle_defect() {
            return Err(CohomologyError::NotCocycle(g, h, k));
        }
    }
    Ok(())
}

/// Some normalized `ξ` with `c = c′ + dξ`, or `None` if the classes differ.
pub fn solve_coboundary(c: &Cochain2, c_prime: &Cochain2) -> Result<Option<Cochain1>, CohomologyError> {
    check_pair(c, c_prime)?;
    let group = c.group();
    let coeff = c.coeff();
    let cells = Cells::new(group);
    let diff = c.minus(c_prime)?;
    let mut xi = vec![0usize; group.order()];

    for (f, &m) in coeff.factors().iter().enumerate() {
        let rhs: Vec<u64> = cells
            .nonid
            .iter()
            .flat_map(|&g| cells.nonid.iter().map(move |&h| (g, h)))
            .map(|(g, h)| coeff.component(diff.get(g, h), f))
            .collect();
        let Some(sol) = d1_matrix(group, &cells, m).diagonalize(Some(&rhs)).solution() else {
            return Ok(None);
        };
        for (&g, &v) in cells.nonid.iter().zip(&sol) {
            xi[g] = coeff.add(xi[g], coeff.embed_component(f, v));
        }
    }
    let xi = Cochain1::new(group.clone(), coeff.clone(), xi)?;
    debug_assert_eq!(c_prime.plus(&xi.coboundary()).ok().as_ref(), Some(c));
    Ok(Some(xi))
}

/// `|H²(G; A)|` with trivial action, as the product of `|Z²| / |B²|` over the cyclic
/// factors of `A`.
pub fn h2_order(group: &FiniteGroup, coeff: &FiniteAbelianGroup) -> Result<u64, CohomologyError> {
    let cells = Cells::new(group);
    let mut total = BigUint::from(1u32);
    for &m in coeff.factors() {
        let z2 = d2_matrix(group, &cells, m)?.diagonalize(None);
        let b2 = d1_matrix(group, &cells, m).diagonalize(None);
        let cocycles: BigUint = z2.kernel_factors().into_iter().map(BigUint::from).product();
        let coboundaries: BigUint = b2.image_factors().into_iter().map(BigUint::from).product();
        debug_assert!((&cocycles % &coboundaries) == BigUint::from(0u32));
        total *= cocycles / coboundaries;
    }
    total.to_u64().ok_or(CohomologyError::SystemTooLarge(usize::MAX))
}

/// Order of the class of `c` in `H²`: the least `k ≥ 1` with `k·c` a
/// coboundary.
pub fn class_order(c: &Cochain2) -> Result<u64, CohomologyError> {
    if let Some((g, h, k)) = c.cocycle_defect() {
        return Err(CohomologyError::NotCocycle(g, h, k));
    }
    let zero = Cochain2::zero(c.group().clone(), c.coeff().clone());
    let exponent = c.coeff().factors().iter().fold(1u64, |acc, &m| num_integer::lcm(acc, m));
    for k in 1..=exponent {
        if solve_coboundary(&c.scaled(k as i64), &zero)?.is_some() {
            return Ok(k);
        }
    }
    unreachable!("exponent · c vanishes")
}

/// Generators of the cocycle group `Z²(G; A)`.
pub fn cocycle_generators(
    group: &Arc<FiniteGroup>,
    coeff: &FiniteAbelianGroup,
) -> Result<Vec<Cochain2>, CohomologyError> {
    let cells = Cells::new(group);
    let n = group.order();
    let mut out = Vec::new();
    for (f, &m) in coeff.factors().iter().enumerate() {
        for gen in d2_matrix(group, &cells, m)?.diagonalize(None).kernel_generators() {
            let mut values = vec![0usize; n * n];
            for (i, &g) in cells.nonid.iter().enumerate() {
                for (j, &h) in cells.nonid.iter().enumerate() {
                    values[g * n + h] = coeff.embed_component(f, gen[i * cells.len() + j]);
                }
            }
            out.push(Cochain2::new(group.clone(), coeff.clone(), values)?);
        }
    }
    Ok(out)
}
