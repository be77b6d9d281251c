//! Report builders for each CLI command.
//!
//! Each builder takes validated configuration, runs the library, and fills a
//! [`Report`] with a fixed key order, so identical inputs always render
//! identical bytes. Timing never enters a report (it would break
//! reproducibility); the main entry point logs it to stderr instead.

use std::collections::BTreeSet;
use std::sync::Arc;

use qckit::{
    euclidean_stabilizer, factor_xm_minus_1, hermitian_stabilizer, min_weight,
    symplectic_stabilizer, build_qsc_general, CosetExponents, Error, FieldCtx, InnerProduct,
    LegacyCondition, Poly, StabilizerParams, TGenQc, TwoGenQc, WeightKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{
    parse_kind, CliError, CodeDescription, SearchDescription, SyncDescription, lib_err,
};
use crate::report::{Report, Value};

/// The three kinds in report order.
const ALL_KINDS: [InnerProduct; 3] = [
    InnerProduct::Euclidean,
    InnerProduct::Hermitian,
    InnerProduct::Symplectic,
];

fn u64_value(n: u64) -> Value {
    i64::try_from(n)
        .map(Value::Int)
        .unwrap_or_else(|_| Value::Str(n.to_string()))
}

fn count_value(count: u128) -> Value {
    i64::try_from(count)
        .map(Value::Int)
        .unwrap_or_else(|_| Value::Str(count.to_string()))
}

fn echo_field(report: &mut Report, ctx: &Arc<FieldCtx>, m: usize) {
    report.push("input", "q", ctx.q());
    report.push("input", "gamma", ctx.gamma());
    report.push("input", "m", m);
}

fn echo_two_gen(report: &mut Report, code: &TwoGenQc) {
    report.push("input", "g1", code.g1().format());
    report.push("input", "g2", code.g2().format());
    report.push("input", "v1", code.v1().poly().format());
    report.push("input", "v2", code.v2().poly().format());
}

fn echo_t_gen(report: &mut Report, code: &TGenQc) {
    for r in 0..code.t() {
        let (g, ks) = code.row(r);
        let mut row = vec![g.format()];
        row.extend(ks.iter().map(|k| k.poly().format()));
        report.push("input", &format!("row_{}", r + 1), row);
    }
}

/// True when this kind is testable over the code's field and shape; used to
/// skip kinds silently when no explicit kind was requested.
fn kind_unavailable(e: &Error) -> bool {
    matches!(
        e,
        Error::NotAQuadraticExtension { .. } | Error::OddIndex { .. } | Error::OddColumns { .. }
    )
}

/// Gram-matrix oracle verdict for one kind: the code is self-orthogonal iff
/// the corresponding Gram matrix of its generator matrix vanishes.
fn gram_verdict(code_matrix: &qckit::MatFq, ip: InnerProduct) -> Result<bool, Error> {
    let gram = match ip {
        InnerProduct::Euclidean => code_matrix.gram_euclidean(),
        InnerProduct::Hermitian => code_matrix.gram_hermitian()?,
        InnerProduct::Symplectic => code_matrix.gram_symplectic()?,
    };
    Ok(gram.is_zero())
}

/// Every legacy sufficient condition with its report key, in report order.
/// Conditions whose shape or field does not match the code are skipped, so
/// the renderable subset is decided by the code, not by the requested kind
/// (a symplectic verdict can be compared against a Euclidean-chain
/// condition, for example).
const LEGACY_CONDITIONS: [(&str, LegacyCondition); 6] = [
    ("legacy_galindo_euclidean_chain", LegacyCondition::GalindoEuclideanChain),
    ("legacy_galindo_hermitian_chain", LegacyCondition::GalindoHermitianChain),
    ("legacy_du_chao_euclidean", LegacyCondition::DuChaoEuclidean),
    ("legacy_lv_symplectic", LegacyCondition::LvSymplectic),
    ("legacy_guan_hermitian", LegacyCondition::GuanHermitian),
    ("legacy_guan_symplectic", LegacyCondition::GuanSymplectic),
];

fn kinds_to_test(kind: Option<InnerProduct>) -> Vec<(InnerProduct, bool)> {
    match kind {
        // An explicitly requested kind must work; errors are fatal.
        Some(k) => vec![(k, true)],
        // Otherwise test whatever the field and shape support.
        None => ALL_KINDS.iter().map(|&k| (k, false)).collect(),
    }
}

/// `check`: orthogonality verdicts for a described code.
///
/// Two-generator descriptions get the full clause-level breakdown
/// (self-orthogonality and dual-containment criteria, the Gram and
/// membership oracles' view, and the applicable legacy sufficient
/// conditions); general rows get the rowwise criterion plus the Gram oracle.
pub fn check_report(
    desc: &CodeDescription,
    kind: Option<InnerProduct>,
) -> Result<Report, CliError> {
    let ctx = desc.ctx()?;
    let mut report = Report::new();
    report.push("input", "command", "check");
    echo_field(&mut report, &ctx, desc.m);
    report.push("input", "layout", desc.layout.name());
    if desc.has_two_generator() {
        let code = desc.build_two_gen(&ctx)?;
        echo_two_gen(&mut report, &code);
        if let Some(k) = kind {
            report.push("input", "kind", k.tag());
        }
        let matrix = code.generator_matrix();
        for (k, required) in kinds_to_test(kind) {
            let tag = k.tag();
            let (so, clauses) = match code.so_conditions(k) {
                Ok(v) => v,
                Err(e) if !required && kind_unavailable(&e) => continue,
                Err(e) => return Err(lib_err(e)),
            };
            report.push("verdicts", &format!("self_orthogonal_{tag}"), so);
            for clause in &clauses {
                report.push("verdicts", &clause.id, clause.holds);
            }
            let gram = gram_verdict(&matrix, k).map_err(lib_err)?;
            report.push("verdicts", &format!("gram_oracle_{tag}"), gram);
            if gram != so {
                return Err(CliError::Validation(format!(
                    "criterion and Gram oracle disagree for kind {tag}"
                )));
            }
            let (dc, dc_clauses) = code.is_dual_containing(k).map_err(lib_err)?;
            report.push("verdicts", &format!("dual_containing_{tag}"), dc);
            for clause in &dc_clauses {
                report.push("verdicts", &clause.id, clause.holds);
            }
        }
        for (key, condition) in LEGACY_CONDITIONS {
            match code.legacy_sufficient_condition(condition) {
                Ok(holds) => report.push("verdicts", key, holds),
                Err(Error::ShapeMismatch(_)) | Err(Error::NotAQuadraticExtension { .. }) => {}
                Err(e) => return Err(lib_err(e)),
            }
        }
        report.push("derived", "length", code.length());
        report.push("derived", "dimension", code.dimension().map_err(lib_err)?);
    } else {
        let code = desc.build_t_gen(&ctx)?;
        echo_t_gen(&mut report, &code);
        if let Some(k) = kind {
            report.push("input", "kind", k.tag());
        }
        let matrix = code.generator_matrix();
        for (k, required) in kinds_to_test(kind) {
            let tag = k.tag();
            let so = match code.is_self_orthogonal(k) {
                Ok(v) => v,
                Err(e) if !required && kind_unavailable(&e) => continue,
                Err(e) => return Err(lib_err(e)),
            };
            report.push("verdicts", &format!("self_orthogonal_{tag}"), so.holds);
            if !so.failing_pairs.is_empty() {
                let pairs: Vec<String> = so
                    .failing_pairs
                    .iter()
                    .map(|(r, s)| format!("({r}, {s})"))
                    .collect();
                report.push("verdicts", &format!("failing_pairs_{tag}"), pairs);
            }
            let gram = gram_verdict(&matrix, k).map_err(lib_err)?;
            report.push("verdicts", &format!("gram_oracle_{tag}"), gram);
            if gram != so.holds {
                return Err(CliError::Validation(format!(
                    "criterion and Gram oracle disagree for kind {tag}"
                )));
            }
        }
        report.push("derived", "length", code.length());
        report.push("derived", "index", code.index());
        report.push("derived", "dimension", code.dimension());
    }
    Ok(report)
}

/// `dual`: generators of the dual code under one inner product.
pub fn dual_report(desc: &CodeDescription, kind: InnerProduct) -> Result<Report, CliError> {
    let ctx = desc.ctx()?;
    let code = desc.build_two_gen(&ctx)?;
    let mut report = Report::new();
    report.push("input", "command", "dual");
    echo_field(&mut report, &ctx, desc.m);
    report.push("input", "layout", desc.layout.name());
    echo_two_gen(&mut report, &code);
    report.push("input", "kind", kind.tag());
    let dual = code.dual(kind).map_err(lib_err)?;
    report.push("derived", "dimension", code.dimension().map_err(lib_err)?);
    report.push("derived", "dual_g1", dual.g1().format());
    report.push("derived", "dual_g2", dual.g2().format());
    report.push("derived", "dual_v1", dual.v1().poly().format());
    report.push("derived", "dual_v2", dual.v2().poly().format());
    report.push("derived", "dual_dimension", dual.dimension().map_err(lib_err)?);
    Ok(report)
}

/// `distance`: exhaustive minimum-weight enumeration.
///
/// Symplectic weight always reads the block layout: coordinate i pairs with
/// coordinate n/2 + i.
pub fn distance_report(
    desc: &CodeDescription,
    weight: WeightKind,
    budget: Option<u64>,
) -> Result<Report, CliError> {
    let ctx = desc.ctx()?;
    let code = desc.build_t_gen(&ctx)?;
    let mut report = Report::new();
    report.push("input", "command", "distance");
    echo_field(&mut report, &ctx, desc.m);
    report.push("input", "layout", desc.layout.name());
    if desc.has_two_generator() {
        let two = desc.build_two_gen(&ctx)?;
        echo_two_gen(&mut report, &two);
    } else {
        echo_t_gen(&mut report, &code);
    }
    let weight_name = match weight {
        WeightKind::Hamming => "hamming",
        WeightKind::Symplectic => "symplectic",
    };
    report.push("input", "weight", weight_name);
    if let Some(b) = budget {
        report.push("input", "budget", u64_value(b));
    }
    let d = min_weight(&code.generator_matrix(), weight, budget).map_err(lib_err)?;
    let k = code.dimension();
    report.push("derived", "length", code.length());
    report.push("derived", "dimension", k);
    let words = (ctx.q() as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    report.push("derived", "words", count_value(words));
    report.push("derived", "distance", d);
    Ok(report)
}

fn stabilizer_for(
    code: &TwoGenQc,
    kind: InnerProduct,
    budget: Option<u64>,
) -> Result<StabilizerParams, Error> {
    match kind {
        InnerProduct::Euclidean => euclidean_stabilizer(code, budget),
        InnerProduct::Hermitian => hermitian_stabilizer(code, budget),
        InnerProduct::Symplectic => symplectic_stabilizer(code, budget),
    }
}

/// `stabilizer`: derived quantum parameters under one inner product.
pub fn stabilizer_report(
    desc: &CodeDescription,
    kind: InnerProduct,
    budget: Option<u64>,
) -> Result<Report, CliError> {
    let ctx = desc.ctx()?;
    let code = desc.build_two_gen(&ctx)?;
    let mut report = Report::new();
    report.push("input", "command", "stabilizer");
    echo_field(&mut report, &ctx, desc.m);
    report.push("input", "layout", desc.layout.name());
    echo_two_gen(&mut report, &code);
    report.push("input", "kind", kind.tag());
    if let Some(b) = budget {
        report.push("input", "budget", u64_value(b));
    }
    let params = stabilizer_for(&code, kind, budget).map_err(lib_err)?;
    report.push("derived", "dimension", code.dimension().map_err(lib_err)?);
    let dual = code.dual(kind).map_err(lib_err)?;
    report.push("derived", "dual_dimension", dual.dimension().map_err(lib_err)?);
    report.push("derived", "params", params.to_string());
    report.push("derived", "n", params.n);
    report.push("derived", "k", params.k);
    report.push("derived", "d", params.d);
    report.push("derived", "degenerate_distance", params.degenerate_distance);
    Ok(report)
}

/// `sync`: build a quantum synchronizable code from factor exponents and
/// report its parameters, optionally evaluating (a_l, a_r) tolerances.
pub fn sync_report(desc: &SyncDescription, budget: Option<u64>) -> Result<Report, CliError> {
    let ctx = crate::config::field_ctx(desc.q, desc.gamma)?;
    let v1 = Poly::parse(&ctx, &desc.v1).map_err(crate::config::config_err)?;
    let v2 = Poly::parse(&ctx, &desc.v2).map_err(crate::config::config_err)?;
    let to_exps = |entries: &[crate::config::ExponentEntry]| -> Vec<CosetExponents> {
        entries
            .iter()
            .map(|e| CosetExponents {
                rep: e.rep,
                e1: e.e1,
                e2: e.e2,
            })
            .collect()
    };
    let inner = to_exps(&desc.inner);
    let outer = to_exps(&desc.outer);
    let budget = budget.or(desc.budget);
    let mut report = Report::new();
    report.push("input", "command", "sync");
    report.push("input", "q", ctx.q());
    report.push("input", "gamma", ctx.gamma());
    report.push("input", "l", desc.l);
    report.push("input", "t", desc.t);
    report.push("input", "v1", v1.format());
    report.push("input", "v2", v2.format());
    let fmt_exps = |exps: &[CosetExponents]| -> Vec<String> {
        exps.iter()
            .map(|e| format!("({}, {}, {})", e.rep, e.e1, e.e2))
            .collect()
    };
    report.push("input", "inner", fmt_exps(&inner));
    report.push("input", "outer", fmt_exps(&outer));
    if let Some(b) = budget {
        report.push("input", "budget", u64_value(b));
    }
    let chain =
        build_qsc_general(&ctx, desc.l, desc.t, v1, v2, &inner, &outer, budget).map_err(lib_err)?;
    let p = &chain.params;
    report.push("derived", "m", p.m);
    report.push("derived", "inner_g1", chain.inner.g1().format());
    report.push("derived", "inner_g2", chain.inner.g2().format());
    report.push("derived", "outer_g1", chain.outer.g1().format());
    report.push("derived", "outer_g2", chain.outer.g2().format());
    report.push("derived", "k1", p.k1);
    report.push("derived", "k2", p.k2);
    report.push("derived", "k", p.k);
    report.push("derived", "eta", p.eta.format());
    report.push("derived", "f", p.f.format());
    report.push("derived", "max_tolerance", p.max_tolerance);
    let opt = |v: Option<usize>| -> Value {
        match v {
            Some(n) => Value::Int(n as i64),
            None => Value::Str("not computed".into()),
        }
    };
    report.push("derived", "d1", opt(p.d1));
    report.push("derived", "d2", opt(p.d2));
    report.push("derived", "phase_floor", opt(p.phase_floor));
    report.push("derived", "bit_floor", opt(p.bit_floor));
    if !p.warnings.is_empty() {
        report.push("derived", "warnings", p.warnings.clone());
    }
    for pair in &desc.evaluate {
        let (n, k) = p.block_params(pair[0], pair[1]).map_err(lib_err)?;
        report.push(
            "blocks",
            &format!("({}, {})", pair[0], pair[1]),
            format!("[[{n}, {k}]]_{}", p.q),
        );
    }
    Ok(report)
}

/// One search hit, kept sortable by (d desc, k desc, encoding asc).
struct SearchHit {
    params: StabilizerParams,
    g1: String,
    g2: String,
    v1: String,
    v2: String,
    encoding: String,
}

/// Exponent vectors over the factor multiplicities in colex order (the
/// first coordinate cycles fastest).
fn colex_vectors(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut v = vec![0u32; bounds.len()];
    loop {
        out.push(v.clone());
        let mut i = 0;
        loop {
            if i == bounds.len() {
                return out;
            }
            if v[i] < bounds[i] {
                v[i] += 1;
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

fn divisor_from_exponents(factors: &[(Poly, u32)], exps: &[u32]) -> Poly {
    let ctx = factors[0].0.ctx();
    let mut acc = Poly::one(ctx);
    for ((f, _), &e) in factors.iter().zip(exps) {
        if e > 0 {
            acc = acc.mul(&f.pow(e));
        }
    }
    acc
}

fn divisor_degree(factors: &[(Poly, u32)], exps: &[u32]) -> usize {
    factors
        .iter()
        .zip(exps)
        .map(|((f, _), &e)| f.degree().unwrap_or(0) * e as usize)
        .sum()
}

/// All polynomials of degree <= max_degree in lexicographic order of their
/// coefficient lists (constant coefficient most significant).
fn v_candidates(ctx: &Arc<FieldCtx>, max_degree: usize) -> Vec<Poly> {
    let q = ctx.q();
    let len = max_degree + 1;
    let total = (q as u128).pow(len as u32);
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut coeffs = Vec::with_capacity(len);
        let mut rest = idx;
        let mut place = (q as u128).pow(len as u32 - 1);
        for _ in 0..len {
            coeffs.push(ctx.elem_from_enc((rest / place) as u32));
            rest %= place;
            place = std::cmp::max(place / q as u128, 1);
        }
        out.push(Poly::from_coeffs(ctx, &coeffs));
    }
    out
}

/// `search`: enumerate (g1, g2, v1, v2) candidates, keep those passing the
/// requested self-orthogonality test, derive their quantum parameters, and
/// report the best hits ordered by (d, k) descending with a lexicographic
/// tie-break on the generator encoding.
///
/// The detailed `[result.N]` sections are truncated to `limit`, but
/// `params_found` in `[derived]` lists every distinct parameter string seen
/// across all hits, so rarer parameter sets remain visible even when
/// higher-distance hits crowd them out of the top results.
///
/// Candidates whose distance enumeration exceeds the budget are skipped and
/// counted, not fatal. The estimated exhaustive candidate count must stay
/// under `max_candidates` (default 2^20).
pub fn search_report(desc: &SearchDescription, seed: Option<u64>) -> Result<Report, CliError> {
    let ctx = crate::config::field_ctx(desc.q, desc.gamma)?;
    let kind = parse_kind(&desc.kind)?;
    if kind == InnerProduct::Hermitian && ctx.gamma() % 2 == 1 {
        return Err(CliError::Validation(format!(
            "Hermitian search needs a quadratic extension, got GF({})",
            ctx.q()
        )));
    }
    let seed = seed.or(desc.seed);
    let limit = desc.limit.unwrap_or(10);
    let max_candidates = desc.max_candidates.unwrap_or(1 << 20);
    let factors = factor_xm_minus_1(&ctx, desc.m).map_err(lib_err)?;
    let bounds: Vec<u32> = factors.iter().map(|(_, e)| *e).collect();
    let g1_cap = desc.g1_max_degree.unwrap_or(desc.m);
    let g2_cap = desc.g2_max_degree.unwrap_or(desc.m);
    let vectors = colex_vectors(&bounds);
    let g1_vectors: Vec<&Vec<u32>> = vectors
        .iter()
        .filter(|v| divisor_degree(&factors, v) <= g1_cap)
        .collect();
    let g2_vectors: Vec<&Vec<u32>> = vectors
        .iter()
        .filter(|v| divisor_degree(&factors, v) <= g2_cap)
        .collect();

    let mut report = Report::new();
    report.push("input", "command", "search");
    report.push("input", "q", ctx.q());
    report.push("input", "gamma", ctx.gamma());
    report.push("input", "m", desc.m);
    report.push("input", "kind", kind.tag());
    report.push("input", "v_max_degree", desc.v_max_degree);
    if let Some(cap) = desc.g1_max_degree {
        report.push("input", "g1_max_degree", cap);
    }
    if let Some(cap) = desc.g2_max_degree {
        report.push("input", "g2_max_degree", cap);
    }
    let mode = if desc.exhaustive { "exhaustive" } else { "sampled" };
    report.push("input", "mode", mode);
    if !desc.exhaustive {
        let samples = desc.samples.ok_or_else(|| {
            CliError::Config("sampled search needs a samples count (or set exhaustive = true)".into())
        })?;
        report.push("input", "samples", u64_value(samples));
        let seed = seed.ok_or_else(|| {
            CliError::Config("sampled search needs a seed for reproducibility".into())
        })?;
        report.push("input", "seed", u64_value(seed));
    }
    report.push("input", "limit", limit);
    if let Some(b) = desc.budget {
        report.push("input", "budget", u64_value(b));
    }

    let v_count = (ctx.q() as u128).pow(desc.v_max_degree as u32 + 1);
    let mut hits: Vec<SearchHit> = Vec::new();
    let mut tested: u128 = 0;
    let mut so_count: u128 = 0;
    let mut budget_skipped: u128 = 0;
    let mut seen = std::collections::HashSet::new();

    let mut try_candidate = |g1: &Poly,
                             g2: &Poly,
                             v1: &Poly,
                             v2: &Poly,
                             hits: &mut Vec<SearchHit>|
     -> Result<(), CliError> {
        let encoding = format!(
            "{} | {} | {} | {}",
            g1.format_coeff_list(),
            g2.format_coeff_list(),
            v1.format_coeff_list(),
            v2.format_coeff_list()
        );
        if !seen.insert(encoding.clone()) {
            return Ok(());
        }
        let code = match TwoGenQc::new(desc.m, g1.clone(), g2.clone(), v1.clone(), v2.clone()) {
            Ok(c) => c,
            Err(_) => return Ok(()), // gcd certificate failed: not a candidate
        };
        tested += 1;
        let (so, _) = code.so_conditions(kind).map_err(lib_err)?;
        if !so {
            return Ok(());
        }
        so_count += 1;
        let params = match stabilizer_for(&code, kind, desc.budget) {
            Ok(p) => p,
            Err(Error::BudgetExceeded { .. }) => {
                budget_skipped += 1;
                return Ok(());
            }
            Err(e) => return Err(lib_err(e)),
        };
        hits.push(SearchHit {
            params,
            g1: code.g1().format(),
            g2: code.g2().format(),
            v1: code.v1().poly().format(),
            v2: code.v2().poly().format(),
            encoding,
        });
        Ok(())
    };

    if desc.exhaustive {
        let estimated = (g1_vectors.len() as u128)
            * (g2_vectors.len() as u128)
            * v_count.saturating_mul(v_count);
        if estimated > max_candidates as u128 {
            return Err(CliError::Budget(format!(
                "search range too large: about {estimated} candidates, cap {max_candidates}"
            )));
        }
        let vs = v_candidates(&ctx, desc.v_max_degree);
        // Colex order over the pair: the g1 exponent vector cycles fastest.
        for g2e in &g2_vectors {
            let g2 = divisor_from_exponents(&factors, g2e);
            for g1e in &g1_vectors {
                let g1 = divisor_from_exponents(&factors, g1e);
                for v2 in &vs {
                    for v1 in &vs {
                        try_candidate(&g1, &g2, v1, v2, &mut hits)?;
                    }
                }
            }
        }
    } else {
        let samples = desc.samples.expect("checked above");
        let seed = seed.expect("checked above");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random_v = |rng: &mut ChaCha8Rng| -> Poly {
            let coeffs: Vec<_> = (0..=desc.v_max_degree)
                .map(|_| ctx.elem_from_enc(rng.gen_range(0..ctx.q()) as u32))
                .collect();
            Poly::from_coeffs(&ctx, &coeffs)
        };
        for _ in 0..samples {
            let g1e = g1_vectors[rng.gen_range(0..g1_vectors.len())];
            let g2e = g2_vectors[rng.gen_range(0..g2_vectors.len())];
            let g1 = divisor_from_exponents(&factors, g1e);
            let g2 = divisor_from_exponents(&factors, g2e);
            let v1 = random_v(&mut rng);
            let v2 = random_v(&mut rng);
            try_candidate(&g1, &g2, &v1, &v2, &mut hits)?;
        }
    }

    hits.sort_by(|a, b| {
        b.params
            .d
            .cmp(&a.params.d)
            .then(b.params.k.cmp(&a.params.k))
            .then(a.encoding.cmp(&b.encoding))
    });
    let params_found: BTreeSet<String> = hits.iter().map(|h| h.params.to_string()).collect();
    hits.truncate(limit);

    report.push("derived", "candidates_tested", count_value(tested));
    report.push("derived", "self_orthogonal", count_value(so_count));
    if budget_skipped > 0 {
        report.push("derived", "budget_skipped", count_value(budget_skipped));
    }
    report.push(
        "derived",
        "params_found",
        params_found.into_iter().collect::<Vec<_>>(),
    );
    report.push("derived", "results", hits.len());
    for (i, hit) in hits.iter().enumerate() {
        let section = format!("result.{}", i + 1);
        report.push(&section, "g1", hit.g1.clone());
        report.push(&section, "g2", hit.g2.clone());
        report.push(&section, "v1", hit.v1.clone());
        report.push(&section, "v2", hit.v2.clone());
        report.push(&section, "params", hit.params.to_string());
        report.push(&section, "n", hit.params.n);
        report.push(&section, "k", hit.params.k);
        report.push(&section, "d", hit.params.d);
        report.push(&section, "degenerate_distance", hit.params.degenerate_distance);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(text: &str) -> CodeDescription {
        toml::from_str(text).unwrap()
    }

    #[test]
    fn check_report_covers_every_kind_for_a_binary_two_gen_code() {
        let d = desc(
            r#"
            q = 2
            gamma = 1
            m = 6
            [two_generator]
            g1 = "x^4+x^3+x+1"
            g2 = "x^5+x^4+x^3+x^2+x+1"
            v1 = "x^5"
            v2 = "x^5+x"
        "#,
        );
        let report = check_report(&d, None).unwrap();
        let text = report.render();
        // check_report itself errors if criterion and Gram oracle disagree,
        // so reaching here already certifies the cross-check for E and S.
        assert!(text.contains("self_orthogonal_E = "));
        assert!(text.contains("self_orthogonal_S = true"));
        assert!(text.contains("gram_oracle_S = true"));
        assert!(!text.contains("self_orthogonal_H"), "GF(2) has no Hermitian form");
        assert!(text.contains("dimension = 3"));
    }

    #[test]
    fn colex_vectors_cycle_the_first_coordinate_fastest() {
        let vs = colex_vectors(&[2, 1]);
        assert_eq!(
            vs,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![2, 0],
                vec![0, 1],
                vec![1, 1],
                vec![2, 1],
            ]
        );
    }

    #[test]
    fn v_candidates_list_constant_coefficient_most_significant() {
        let ctx = qckit::ctx_new(2, 1).unwrap();
        let vs = v_candidates(&ctx, 1);
        let texts: Vec<String> = vs.iter().map(|p| p.format()).collect();
        // Coefficient lists (c0 c1) in lex order: (0 0), (0 1), (1 0), (1 1).
        assert_eq!(texts, vec!["0", "x", "1", "x+1"]);
    }
}
