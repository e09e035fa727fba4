//! Exhaustive search over cochains. Slow, independent of the linear algebra.

use std::collections::HashSet;

use super::{Cochain1, Cochain2, CohomologyError};
use crate::abelian::FiniteAbelianGroup;
use crate::fingroup::FiniteGroup;

/// Cap on `|A|^(|G|−1)` for exhaustive searches over 1-cochains.
pub const BRUTE_FORCE_LIMIT: u128 = 1_000_000;

/// Cap on backtracking nodes when counting 2-cocycles.
const NODE_BUDGET: u64 = 200_000_000;

fn search_space(group: &FiniteGroup, coeff: &FiniteAbelianGroup) -> Result<u128, CohomologyError> {
    let exp = group.order().saturating_sub(1) as u32;
    let size = (coeff.order() as u128).checked_pow(exp).unwrap_or(u128::MAX);
    if size > BRUTE_FORCE_LIMIT {
        return Err(CohomologyError::SearchSpaceTooLarge(size));
    }
    Ok(size)
}

/// Every normalized 1-cochain, in lexicographic order of its values on the
/// non-identity elements.
fn all_cochains1(group: &FiniteGroup, coeff: &FiniteAbelianGroup) -> impl Iterator<Item = Vec<usize>> {
    let e = group.identity();
    let slots: Vec<usize> = group.elements().filter(|&g| g != e).collect();
    let n = group.order();
    let a = coeff.order();
    let mut next = Some(vec![0usize; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for &g in slots.iter().rev() {
            succ[g] += 1;
            if succ[g] < a {
                next = Some(succ);
                break;
            }
            succ[g] = 0;
        }
        Some(current)
    })
}

/// The least normalized `ξ` (lexicographically) with `c = c′ + dξ`.
pub fn brute_force_cohomologous(c: &Cochain2, c_prime: &Cochain2) -> Result<Option<Cochain1>, CohomologyError> {
    if !c.same_domain(c_prime) {
        return Err(CohomologyError::Mismatch);
    }
    let (group, coeff) = (c.group(), c.coeff());
    search_space(group, coeff)?;
    let diff = c.minus(c_prime)?;
    let n = group.order();
    for xi in all_cochains1(group, coeff) {
        let hit = (0..n).all(|g| {
            (0..n).all(|h| coeff.sub(coeff.add(xi[g], xi[h]), xi[group.mul(g, h)]) == diff.get(g, h))
        });
        if hit {
            return Ok(Some(Cochain1::new(group.clone(), coeff.clone(), xi)?));
        }
    }
    Ok(None)
}

/// `|H²(G; A)|` by counting: cocycles by backtracking over the cells
/// `c(g, h)`, coboundaries by listing `dξ` for every `ξ`.
pub fn h2_order_brute(group: &FiniteGroup, coeff: &FiniteAbelianGroup) -> Result<u64, CohomologyError> {
    let space = search_space(group, coeff)?;
    let n = group.order();
    let e = group.identity();

    let mut boundaries = HashSet::new();
    for xi in all_cochains1(group, coeff) {
        let d: Vec<usize> = (0..n * n)
            .map(|i| {
                let (g, h) = (i / n, i % n);
                coeff.sub(coeff.add(xi[g], xi[h]), xi[group.mul(g, h)])
            })
            .collect();
        boundaries.insert(d);
    }

    // cells in row-major order; each cocycle triple is checked at the last of its cells
    let cells: Vec<(usize, usize)> = (0..n * n)
        .map(|i| (i / n, i % n))
        .filter(|&(g, h)| g != e && h != e)
        .collect();
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); cells.len()];
    let cell_rank = |g: usize, h: usize| cells.iter().position(|&c| c == (g, h));
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                let touched = [(h, k), (group.mul(g, h), k), (g, group.mul(h, k)), (g, h)];
                if let Some(last) = touched.iter().filter_map(|&(x, y)| cell_rank(x, y)).max() {
                    checks[last].push((g, h, k));
                }
            }
        }
    }

    let mut values = vec![0usize; n * n];
    let mut nodes = 0u64;
    let count = count_cocycles(group, coeff, &cells, &checks, 0, &mut values, &mut nodes)?;
    let cocycles = count as u128;
    let b = boundaries.len() as u128;
    debug_assert!(b <= space && cocycles.is_multiple_of(b));
    Ok((cocycles / b) as u64)
}

fn count_cocycles(
    group: &FiniteGroup,
    coeff: &FiniteAbelianGroup,
    cells: &[(usize, usize)],
    checks: &[Vec<(usize, usize, usize)>],
    depth: usize,
    values: &mut [usize],
    nodes: &mut u64,
) -> Result<u64, CohomologyError> {
    if depth == cells.len() {
        return Ok(1);
    }
    let n = group.order();
    let (g0, h0) = cells[depth];
    let c = |v: &[usize], g: usize, h: usize| v[g * n + h];
    let mut total = 0;
    for a in coeff.elements() {
        *nodes += 1;
        if *nodes > NODE_BUDGET {
            return Err(CohomologyError::SearchBudgetExceeded(NODE_BUDGET));
        }
        values[g0 * n + h0] = a;
        let ok = checks[depth].iter().all(|&(g, h, k)| {
            let lhs = coeff.add(c(values, h, k), c(values, g, group.mul(h, k)));
            let rhs = coeff.add(c(values, group.mul(g, h), k), c(values, g, h));
            lhs == rhs
        });
        if ok {
            total += count_cocycles(group, coeff, cells, checks, depth + 1, values, nodes)?;
        }
    }
    values[g0 * n + h0] = 0;
    Ok(total)
}
