//! Synchronizable-code chains: the published prime-power and composite-length
//! constructions, the annihilator exponent law they rest on, and randomized
//! invariant checks over small prime-power lengths.

mod common;

use common::{poly, random_poly, rng};
use qckit::{
    build_qsc_general, build_qsc_prime_power, ctx_new, cyclotomic_cosets, min_poly,
    qsc_from_chain, CosetExponents, Error, FieldCtx, Poly, RingElem, TwoGenQc,
};
use rand::Rng;
use std::sync::Arc;

/// ord((x - 1)^e) over GF(p): the smallest power of p that is >= e.
fn prime_power_ord(p: u64, e: usize) -> u64 {
    let mut n = 1u64;
    while (n as usize) < e {
        n *= p;
    }
    n
}

/// The ternary length-27 chain: [[54 + a, 4]]_3 for any split a_l + a_r < 27.
#[test]
fn ternary_prime_power_chain_m27() {
    let ctx = ctx_new(3, 1).unwrap();
    let v1 = poly(&ctx, "x^3+x^2+1");
    let v2 = poly(&ctx, "x^5+2*x^3+x^2+2*x+1");
    let chain = build_qsc_prime_power(&ctx, 3, v1, v2, (12, 13), (2, 5), None).unwrap();
    let p = &chain.params;

    assert_eq!(p.m, 27);
    assert_eq!(p.k1, 29);
    assert_eq!(p.k2, 47);
    assert_eq!(p.k, 4);
    assert_eq!(p.k, 2 * (p.k1 - p.m));

    let x_minus_1 = poly(&ctx, "x+2");
    assert_eq!(p.eta, x_minus_1.pow(12));
    assert_eq!(p.f, x_minus_1.pow(10));
    assert_eq!(p.max_tolerance, 27);
    assert_eq!(p.max_tolerance, prime_power_ord(3, 10));

    // 3^29 codewords are far over any desk budget: distances stay unreported.
    assert_eq!(p.d1, None);
    assert_eq!(p.d2, None);
    assert_eq!(p.phase_floor, None);
    assert!(p.warnings.is_empty(), "{:?}", p.warnings);

    assert_eq!(p.block_params(0, 0).unwrap(), (54, 4));
    assert_eq!(p.block_params(13, 13).unwrap(), (80, 4));
    assert!(matches!(
        p.block_params(13, 14),
        Err(Error::ToleranceExceeded {
            requested: 27,
            max: 27
        })
    ));
}

/// The quinary length-25 chain: [[50 + a, 10]]_5 for any split a_l + a_r < 25.
#[test]
fn quinary_prime_power_chain_m25() {
    let ctx = ctx_new(5, 1).unwrap();
    let v1 = poly(&ctx, "x^3+x^2+2*x+3");
    let v2 = poly(&ctx, "x^5+2*x^4+x^3+2*x^2+x");
    let chain = build_qsc_prime_power(&ctx, 2, v1, v2, (9, 11), (3, 4), None).unwrap();
    let p = &chain.params;

    assert_eq!(p.m, 25);
    assert_eq!(p.k1, 30);
    assert_eq!(p.k, 10);

    let x_minus_1 = poly(&ctx, "x+4");
    assert_eq!(p.eta, x_minus_1.pow(9));
    assert_eq!(p.f, x_minus_1.pow(6));
    assert_eq!(p.max_tolerance, 25);
    assert_eq!(p.max_tolerance, prime_power_ord(5, 6));

    assert_eq!(p.d1, None);
    assert_eq!(p.d2, None);
    assert!(p.warnings.is_empty(), "{:?}", p.warnings);

    assert_eq!(p.block_params(0, 0).unwrap(), (50, 10));
    assert_eq!(p.block_params(12, 12).unwrap(), (74, 10));
    assert!(p.block_params(12, 13).is_err());
}

/// The composite construction requires gcd(l, p) = 1: the published l = 3,
/// q = 3 attempt is rejected before any polynomial work happens.
#[test]
fn general_build_rejects_l_sharing_a_factor_with_p() {
    let ctx = ctx_new(3, 1).unwrap();
    let err = build_qsc_general(
        &ctx,
        3,
        3,
        poly(&ctx, "1"),
        poly(&ctx, "x"),
        &[],
        &[],
        None,
    )
    .unwrap_err();
    assert!(matches!(err, Error::GcdConditionFailed(_)));
}

/// The same data read as a pure prime-power chain at m = 81. The published
/// tolerance bound quotes 81, but the sync quotient is (x - 1)^23 and
/// ord((x - 1)^23) over GF(3) is 27, so misalignments must satisfy
/// a_l + a_r < 27; this pins the computed value.
#[test]
fn ternary_prime_power_chain_m81_tolerance() {
    let ctx = ctx_new(3, 1).unwrap();
    let v1 = poly(&ctx, "x^3+x^2+2*x+1");
    let v2 = poly(&ctx, "x^5+2*x^4+x^3+2*x^2+2*x+2");
    let chain = build_qsc_prime_power(&ctx, 4, v1, v2, (29, 37), (6, 27), None).unwrap();
    let p = &chain.params;

    assert_eq!(p.m, 81);
    assert_eq!(p.k1, 96);
    assert_eq!(p.k, 30);

    let x_minus_1 = poly(&ctx, "x+2");
    assert_eq!(p.eta, x_minus_1.pow(29));
    assert_eq!(p.f, x_minus_1.pow(23));
    assert_eq!(p.max_tolerance, 27);
    assert_eq!(p.max_tolerance, prime_power_ord(3, 23));

    assert_eq!(p.block_params(0, 0).unwrap(), (162, 30));
    assert!(p.block_params(14, 13).is_err());
}

/// The septenary composite chain at m = 5 * 49 = 245, built from the two
/// factors of x^5 - 1 over GF(7). The dimension oracle gives k1 = 351, so
/// the net parameter is k = 2(k1 - m) = 212 (the published table quotes 444,
/// which is not consistent with the printed generator exponents; this pins
/// the rank-oracle value).
#[test]
fn septenary_general_chain_m245() {
    let ctx = ctx_new(7, 1).unwrap();
    let cosets = cyclotomic_cosets(5, 7).unwrap();
    let reps: Vec<u64> = cosets.iter().map(|c| c.rep).collect();
    assert_eq!(reps, vec![0, 1]);

    let r = [
        CosetExponents {
            rep: 0,
            e1: 9,
            e2: 14,
        },
        CosetExponents {
            rep: 1,
            e1: 13,
            e2: 16,
        },
    ];
    let j = [
        CosetExponents {
            rep: 0,
            e1: 7,
            e2: 11,
        },
        CosetExponents {
            rep: 1,
            e1: 3,
            e2: 12,
        },
    ];
    let v1 = poly(&ctx, "x^3");
    let v2 = poly(&ctx, "x^5+x^2+5*x+4");
    let chain = build_qsc_general(&ctx, 5, 2, v1, v2, &r, &j, None).unwrap();
    let p = &chain.params;

    assert_eq!(p.m, 245);
    assert_eq!(p.k1, 351);
    assert_eq!(p.k2, 412);
    assert_eq!(p.k, 212);

    let m0 = min_poly(&ctx, 0, 5).unwrap();
    let m1 = min_poly(&ctx, 1, 5).unwrap();
    assert_eq!(m1.degree(), Some(4));
    let expected_f = m0.pow(2).mul(&m1.pow(10));
    assert_eq!(p.f, expected_f);
    assert_eq!(p.f.degree(), Some(42));
    // ord(M0^2) = 7 and ord(M1^10) = 5 * 49; the quotient's order is their lcm.
    assert_eq!(p.max_tolerance, 245);

    assert_eq!(p.d1, None);
    assert_eq!(p.d2, None);
    assert_eq!(p.block_params(0, 0).unwrap(), (490, 212));
    assert_eq!(p.block_params(100, 144).unwrap(), (734, 212));
    assert!(p.block_params(100, 145).is_err());
}

/// Annihilator exponent law over m = l p^t: if g = prod_c M_c^(e_c) runs over
/// the distinct irreducible factors of x^l - 1 (each appearing p^t times in
/// x^m - 1), then the annihilator generator is prod_c M_(-c)^(p^t - e_c),
/// where -c indexes the coset of l - c.
#[test]
fn annihilator_exponents_complement_the_generator() {
    let mut rng = rng(0x5A11_C0DE);
    let cases: [(u64, u64, u32); 4] = [(2, 7, 1), (3, 2, 2), (2, 1, 3), (5, 3, 1)];
    for (q, l, t) in cases {
        let ctx = ctx_new(q, 1).unwrap();
        let pt = q.pow(t) as usize;
        let m = l as usize * pt;
        let cosets = cyclotomic_cosets(l, q).unwrap();
        let factors: Vec<(u64, Poly)> = cosets
            .iter()
            .map(|c| (c.rep, min_poly(&ctx, c.rep, l).unwrap()))
            .collect();
        let neg_rep = |c: u64| -> u64 {
            let target = (l - c % l) % l;
            cosets
                .iter()
                .find(|co| co.members.contains(&target))
                .unwrap()
                .rep
        };
        for _ in 0..25 {
            let exps: Vec<usize> = factors
                .iter()
                .map(|_| rng.gen_range(0..=pt))
                .collect();
            let mut g = Poly::one(&ctx);
            for ((_, fac), &e) in factors.iter().zip(&exps) {
                g = g.mul(&fac.pow(e as u32));
            }
            let deg = g.degree().unwrap();
            if deg == 0 || deg == m {
                continue; // unit and full-modulus generators have no proper annihilator pair
            }
            let mut expected = Poly::one(&ctx);
            for ((c, _), &e) in factors.iter().zip(&exps) {
                let mirror = factors
                    .iter()
                    .find(|(r, _)| *r == neg_rep(*c))
                    .map(|(_, fac)| fac)
                    .unwrap();
                expected = expected.mul(&mirror.pow((pt - e) as u32));
            }
            let perp = RingElem::new(g, m).unwrap().perp();
            assert_eq!(
                perp.poly(),
                &expected,
                "q = {q}, l = {l}, t = {t}, exponents {exps:?}"
            );
        }
    }
}

/// The chain oracle rejects pairs that are not nested and inner codes that do
/// not contain their Euclidean dual.
#[test]
fn chain_oracle_rejects_invalid_pairs() {
    let ctx = ctx_new(3, 1).unwrap();
    let v1 = poly(&ctx, "x^3+x^2+1");
    let v2 = poly(&ctx, "x^5+2*x^3+x^2+2*x+1");
    let g = |e: u32| poly(&ctx, "x+2").pow(e);

    // r1 + r2 > m forces dim < m, so the dual cannot fit inside.
    let shallow = TwoGenQc::new(27, g(14), g(14), v1.clone(), v2.clone()).unwrap();
    let full = TwoGenQc::new(27, g(2), g(5), v1.clone(), v2.clone()).unwrap();
    let err = qsc_from_chain(shallow.clone(), full.clone(), None).unwrap_err();
    assert!(matches!(err, Error::ChainInvalid(_)), "{err}");

    // A valid inner code paired with an outer code that does not contain it.
    let inner = TwoGenQc::new(27, g(12), g(13), v1.clone(), v2.clone()).unwrap();
    let not_outer = TwoGenQc::new(27, g(13), g(14), v1, v2).unwrap();
    let err = qsc_from_chain(inner, not_outer, None).unwrap_err();
    assert!(matches!(err, Error::ChainInvalid(_)), "{err}");
}

/// Randomized prime-power chains: every successful build satisfies the
/// published parameter laws — k = 2(k1 - m), k1 from the degree formula,
/// f = (x - 1)^(r1 - s1), the tolerance bound as the closed-form order, and
/// the block-parameter boundary behavior.
#[test]
fn random_prime_power_chains_satisfy_the_sync_invariants() {
    let mut rng = rng(0xC4A1_5EED);
    let shapes: [(u64, u32); 5] = [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2)];
    let mut successes = 0usize;
    for (p, t) in shapes {
        let ctx: Arc<FieldCtx> = ctx_new(p, 1).unwrap();
        let m = (p as usize).pow(t);
        for _ in 0..60 {
            // e1 <= e2 within each pair keeps the column contents at the
            // plain g1 exponents, which is what the f-law below describes.
            let r2 = rng.gen_range(1..=m / 2);
            let r1 = rng.gen_range(1..=r2);
            let s1 = rng.gen_range(0..=r1);
            let s2 = rng.gen_range(s1..=r2);
            let v1 = random_poly(&mut rng, &ctx, m - 1);
            let v2 = random_poly(&mut rng, &ctx, m - 1);
            let chain =
                match build_qsc_prime_power(&ctx, t, v1, v2, (r1, r2), (s1, s2), Some(1 << 12)) {
                    Ok(chain) => chain,
                    Err(_) => continue, // gcd certificate or chain gate failed for this draw
                };
            successes += 1;
            let params = &chain.params;
            assert_eq!(params.m, m);
            assert_eq!(params.k1, 2 * m - r1 - r2);
            assert_eq!(params.k2, 2 * m - s1 - s2);
            assert_eq!(params.k, 2 * (params.k1 - m));

            let x_minus_1 = poly(&ctx, &format!("x+{}", p - 1));
            assert_eq!(params.eta, x_minus_1.pow(r1 as u32));
            assert_eq!(params.f, x_minus_1.pow((r1 - s1) as u32));
            assert_eq!(params.max_tolerance, prime_power_ord(p, r1 - s1));

            let max = params.max_tolerance;
            assert_eq!(
                params.block_params(max - 1, 0).unwrap(),
                (2 * m + max as usize - 1, params.k)
            );
            assert!(matches!(
                params.block_params(max, 0),
                Err(Error::ToleranceExceeded { .. })
            ));

            if let (Some(d1), Some(floor)) = (params.d1, params.phase_floor) {
                assert_eq!(floor, (d1 - 1) / 2);
            }
        }
    }
    assert!(successes >= 40, "only {successes} valid chains drawn");
}
