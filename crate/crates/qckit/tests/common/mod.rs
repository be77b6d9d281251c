//! Shared helpers for the integration test suites: deterministic RNG,
//! random polynomial/code sampling, and brute-force reference oracles.
#![allow(dead_code)]

use std::sync::Arc;

use qckit::{ctx_new, factor_xm_minus_1, Error, FieldCtx, Poly, RingElem, TwoGenQc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic RNG so every run of the suite exercises the same instances.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The standard field roster for randomized sweeps: F2, F3, F4, F5.
pub fn small_fields() -> Vec<Arc<FieldCtx>> {
    vec![
        ctx_new(2, 1).unwrap(),
        ctx_new(3, 1).unwrap(),
        ctx_new(2, 2).unwrap(),
        ctx_new(5, 1).unwrap(),
    ]
}

/// Uniformly random polynomial of degree at most `max_deg` (possibly zero).
pub fn random_poly(rng: &mut ChaCha8Rng, ctx: &Arc<FieldCtx>, max_deg: usize) -> Poly {
    let coeffs: Vec<_> = (0..=max_deg)
        .map(|_| ctx.elem_from_enc(rng.gen_range(0..ctx.q() as u32)))
        .collect();
    Poly::from_coeffs(ctx, &coeffs)
}

/// Random nonzero polynomial of degree at most `max_deg`.
pub fn random_nonzero_poly(rng: &mut ChaCha8Rng, ctx: &Arc<FieldCtx>, max_deg: usize) -> Poly {
    loop {
        let p = random_poly(rng, ctx, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random nonzero residue in F_q[x]/(x^m - 1).
pub fn random_ring_elem(rng: &mut ChaCha8Rng, ctx: &Arc<FieldCtx>, m: usize) -> RingElem {
    RingElem::new(random_nonzero_poly(rng, ctx, m - 1), m).unwrap()
}

/// Random monic divisor of x^m - 1: each irreducible factor is raised to a
/// uniformly random exponent between zero and its multiplicity.
pub fn random_divisor(rng: &mut ChaCha8Rng, ctx: &Arc<FieldCtx>, m: usize) -> Poly {
    let factors = factor_xm_minus_1(ctx, m).unwrap();
    let mut g = Poly::one(ctx);
    for (f, mult) in &factors {
        let e = rng.gen_range(0..=*mult);
        g = g.mul(&f.pow(e));
    }
    g
}

/// Random proper divisor (excludes x^m - 1 itself so the code is nonzero).
pub fn random_proper_divisor(rng: &mut ChaCha8Rng, ctx: &Arc<FieldCtx>, m: usize) -> Poly {
    loop {
        let g = random_divisor(rng, ctx, m);
        if g.degree() != Some(m) {
            return g;
        }
    }
}

/// Shape constraints for sampling two-generator codes.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum VShape {
    /// No constraint: v1 and v2 are independent random residues.
    Free,
    /// v2 = 0 (nested-pair shape).
    SecondZero,
    /// v2 = 1.
    SecondOne,
    /// v1 = v2.
    Equal,
}

/// Sample a valid two-generator code, retrying until the unit certificate
/// gcd(v1 v2 - 1, x^m - 1) = 1 holds for the drawn v's.
pub fn random_two_gen(
    rng: &mut ChaCha8Rng,
    ctx: &Arc<FieldCtx>,
    m: usize,
    shape: VShape,
) -> TwoGenQc {
    loop {
        let g1 = random_proper_divisor(rng, ctx, m);
        let g2 = random_proper_divisor(rng, ctx, m);
        let v1 = random_poly(rng, ctx, m - 1);
        let v2 = match shape {
            VShape::Free => random_poly(rng, ctx, m - 1),
            VShape::SecondZero => Poly::zero(ctx),
            VShape::SecondOne => Poly::one(ctx),
            VShape::Equal => v1.clone(),
        };
        match TwoGenQc::new(m, g1, g2, v1, v2) {
            Ok(code) => return code,
            Err(Error::GcdConditionFailed(_)) => continue,
            Err(e) => panic!("unexpected sampling failure: {e}"),
        }
    }
}

/// Parse helper: polynomial from symbolic text in the given field.
pub fn poly(ctx: &Arc<FieldCtx>, text: &str) -> Poly {
    Poly::parse(ctx, text).unwrap()
}
