#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use discrete_torsion::abelian::{FiniteAbelianGroup, UnitEmbedding};
use discrete_torsion::cohomology::{cocycle_generators, Cochain1, Cochain2};
use discrete_torsion::fingroup::FiniteGroup;
use discrete_torsion::loopalg::{load_presentation, GradedBasisAlgebra};
use discrete_torsion::torsion::TwistedAlgebra;
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n).unwrap())
}

pub fn zm(m: u64) -> FiniteAbelianGroup {
    FiniteAbelianGroup::cyclic(m).unwrap()
}

pub fn s3() -> Arc<FiniteGroup> {
    let text = std::fs::read_to_string(fixture("s3.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let rows: Vec<Vec<usize>> = serde_json::from_value(v["table"].clone()).unwrap();
    Arc::new(FiniteGroup::from_table(&rows).unwrap())
}

/// `k[ε]/(ε²)` over `𝔽₃` with point class `ε` and Euler characteristic 2.
pub fn dual_numbers() -> Arc<GradedBasisAlgebra> {
    Arc::new(load_presentation(fixture("dual_numbers_f3.json")).unwrap())
}

/// `ℤ/m → units`, generator to `unit + eps`.
pub fn unit_plus_eps(base: &Arc<GradedBasisAlgebra>, m: u64) -> UnitEmbedding {
    let img = base.unit().plus(&base.basis_element(base.index_of("eps").unwrap()));
    UnitEmbedding::new(zm(m), base.clone(), vec![img]).unwrap()
}

/// `ℂP^l` model over `𝔽_p` with `A = ℤ/gcd(p, l+1)` embedded as `[CP^l] + eps`.
pub fn cpl(l: u32, p: u32) -> (Arc<GradedBasisAlgebra>, UnitEmbedding) {
    let base = Arc::new(GradedBasisAlgebra::cpl_minimal_model(l, p).unwrap());
    let m = num_integer::gcd(p, l + 1) as u64;
    let phi = unit_plus_eps(&base, m);
    (base, phi)
}

pub fn twisted(base: &Arc<GradedBasisAlgebra>, phi: &UnitEmbedding, c: Cochain2) -> TwistedAlgebra {
    TwistedAlgebra::new(base.clone(), c.group().clone(), phi.clone(), c).unwrap()
}

pub fn random_cochain2(rng: &mut impl Rng, group: &Arc<FiniteGroup>, coeff: &FiniteAbelianGroup) -> Cochain2 {
    let e = group.identity();
    Cochain2::from_fn(group.clone(), coeff.clone(), |g, h| {
        if g == e || h == e {
            0
        } else {
            rng.gen_range(0..coeff.order())
        }
    })
    .unwrap()
}

pub fn random_cochain1(rng: &mut impl Rng, group: &Arc<FiniteGroup>, coeff: &FiniteAbelianGroup) -> Cochain1 {
    let e = group.identity();
    let values = group.elements().map(|g| if g == e { 0 } else { rng.gen_range(0..coeff.order()) }).collect();
    Cochain1::new(group.clone(), coeff.clone(), values).unwrap()
}

/// A random element of `Z²`, as a random combination of generators.
pub fn random_cocycle(rng: &mut impl Rng, group: &Arc<FiniteGroup>, coeff: &FiniteAbelianGroup) -> Cochain2 {
    let mut c = Cochain2::zero(group.clone(), coeff.clone());
    for g in cocycle_generators(group, coeff).unwrap() {
        let k = rng.gen_range(0..coeff.order().max(1) as i64);
        c = c.plus(&g.scaled(k)).unwrap();
    }
    c
}
