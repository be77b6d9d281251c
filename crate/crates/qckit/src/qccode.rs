//! Quasi-cyclic codes presented by generator polynomials.
//!
//! A length-lm quasi-cyclic code of index l is spanned by rows of the form
//! a(x) * (g k_1, ..., g k_l), one block of m coordinates per entry. Two
//! presentations are provided:
//!
//! * [`TGenQc`] — any number of generator rows (g_r, [k_r1, ..., k_rl]);
//! * [`TwoGenQc`] — the two-generator, index-2 shape
//!   ([g1], [v1 g1]), ([v2 g2], [g2]) whose orthogonality behavior reduces
//!   to three divisibility clauses per inner product.
//!
//! Self-orthogonality and dual-containment are decided by polynomial
//! divisibility; every verdict is cross-checked in debug builds against the
//! corresponding matrix oracle (Gram matrix, kernel, or row-space
//! membership). Codewords live in the BLOCK coordinate layout
//! (block_1 | ... | block_l); [`block_to_interleaved`] converts to the
//! interleaved layout, a fixed permutation that no weight computation can
//! see.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::matfq::{omega, MatFq};
use crate::polyring::{Poly, RingElem};

/// Default cap on distance-enumeration work: at most this many codewords.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 24;

/// The three inner products under which orthogonality is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InnerProduct {
    /// Componentwise dot product.
    Euclidean,
    /// Conjugate dot product over a quadratic extension.
    Hermitian,
    /// The alternating form pairing coordinate i with coordinate n/2 + i.
    Symplectic,
}

impl InnerProduct {
    /// Short tag used in clause identifiers and reports.
    pub fn tag(self) -> &'static str {
        match self {
            InnerProduct::Euclidean => "E",
            InnerProduct::Hermitian => "H",
            InnerProduct::Symplectic => "S",
        }
    }
}

impl fmt::Display for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            InnerProduct::Euclidean => "Euclidean",
            InnerProduct::Hermitian => "Hermitian",
            InnerProduct::Symplectic => "Symplectic",
        };
        write!(f, "{name}")
    }
}

impl std::str::FromStr for InnerProduct {
    type Err = Error;

    fn from_str(s: &str) -> Result<InnerProduct> {
        match s {
            "E" | "e" | "euclidean" | "Euclidean" => Ok(InnerProduct::Euclidean),
            "H" | "h" | "hermitian" | "Hermitian" => Ok(InnerProduct::Hermitian),
            "S" | "s" | "symplectic" | "Symplectic" => Ok(InnerProduct::Symplectic),
            other => Err(Error::ParseError(format!(
                "unknown inner product {other:?} (expected E, H, or S)"
            ))),
        }
    }
}

/// Outcome of a self-orthogonality test with the failing generator pairs
/// (r, s), 1-indexed, as witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfOrthogonality {
    /// True iff the code is self-orthogonal under the tested inner product.
    pub holds: bool,
    /// Generator-row pairs whose orthogonality condition failed.
    pub failing_pairs: Vec<(usize, usize)>,
}

/// One divisibility clause of a two-generator criterion: `divisor` must
/// divide `dividend` (the canonical representative mod x^m - 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    /// Stable identifier, e.g. "SO-E.1" or "DC-S.3".
    pub id: String,
    /// The polynomial that must divide.
    pub divisor: Poly,
    /// The canonical representative it must divide.
    pub dividend: Poly,
    /// Whether the division is exact.
    pub holds: bool,
}

fn rmul(a: &RingElem, b: &RingElem) -> RingElem {
    a.mul(b).expect("operands share one ring")
}

fn radd(a: &RingElem, b: &RingElem) -> RingElem {
    a.add(b).expect("operands share one ring")
}

fn rsub(a: &RingElem, b: &RingElem) -> RingElem {
    a.sub(b).expect("operands share one ring")
}

/// Divisibility with the zero-divisor convention 0 | y iff y = 0 (the zero
/// polynomial generates the zero code, which only contains zero).
fn divides_with_zero(divisor: &Poly, dividend: &Poly) -> bool {
    if divisor.is_zero() {
        dividend.is_zero()
    } else {
        divisor.divides(dividend).expect("divisor is nonzero")
    }
}

fn build_clause(id: String, divisor: Poly, dividend: &RingElem) -> Clause {
    let rep = dividend.poly().clone();
    let holds = divides_with_zero(&divisor, &rep);
    Clause {
        id,
        divisor,
        dividend: rep,
        holds,
    }
}

#[derive(Clone)]
struct TGenRow {
    g: Poly,
    ks: Vec<RingElem>,
}

/// Quasi-cyclic code given by t generator rows (g_r, [k_r1, ..., k_rl]):
/// row r spans { a(x) * (g_r k_r1, ..., g_r k_rl) }.
///
/// Each g_r must be a divisor of x^m - 1 (stored monic) and each row must
/// satisfy gcd(k_r1, ..., k_rl, (x^m - 1)/g_r) = 1, so the row's content is
/// exactly g_r.
#[derive(Clone)]
pub struct TGenQc {
    ctx: Arc<FieldCtx>,
    m: usize,
    l: usize,
    rows: Vec<TGenRow>,
}

impl fmt::Debug for TGenQc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TGenQc(m = {}, l = {}, t = {})", self.m, self.l, self.rows.len())
    }
}

impl TGenQc {
    /// Build from rows of (g, [k_1, ..., k_l]).
    pub fn new(m: usize, rows: Vec<(Poly, Vec<Poly>)>) -> Result<TGenQc> {
        if m == 0 {
            return Err(Error::ZeroLength);
        }
        let Some(first) = rows.first() else {
            return Err(Error::DimensionMismatch(
                "a quasi-cyclic code needs at least one generator row".into(),
            ));
        };
        let ctx = Arc::clone(first.0.ctx());
        let l = first.1.len();
        if l == 0 {
            return Err(Error::DimensionMismatch(
                "a quasi-cyclic code needs index at least 1".into(),
            ));
        }
        let xm1 = Poly::xm_minus_one(&ctx, m);
        let mut built = Vec::with_capacity(rows.len());
        for (idx, (g, ks)) in rows.into_iter().enumerate() {
            if ks.len() != l {
                return Err(Error::LengthMismatch {
                    left: l,
                    right: ks.len(),
                });
            }
            if g.is_zero() || !g.divides(&xm1)? {
                return Err(Error::GeneratorNotDivisor { m });
            }
            let g = g.monic();
            let h = xm1.divrem(&g)?.0;
            let ks: Vec<RingElem> = ks
                .into_iter()
                .map(|k| RingElem::new(k, m))
                .collect::<Result<_>>()?;
            let mut cert = h.clone();
            for k in &ks {
                if cert.degree() == Some(0) {
                    break;
                }
                cert = Poly::gcd(&cert, k.poly())?;
            }
            if cert.degree() != Some(0) {
                return Err(Error::GcdConditionFailed(format!(
                    "row {}: gcd(k_1, ..., k_l, (x^m-1)/g) = {} must be 1",
                    idx + 1,
                    cert.format()
                )));
            }
            built.push(TGenRow { g, ks });
        }
        Ok(TGenQc {
            ctx,
            m,
            l,
            rows: built,
        })
    }

    /// Field context.
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    /// Block length m.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Index l (number of blocks).
    pub fn index(&self) -> usize {
        self.l
    }

    /// Number of generator rows.
    pub fn t(&self) -> usize {
        self.rows.len()
    }

    /// Code length l * m.
    pub fn length(&self) -> usize {
        self.l * self.m
    }

    /// Row r (0-indexed): its content polynomial and multipliers.
    pub fn row(&self, r: usize) -> (&Poly, &[RingElem]) {
        (&self.rows[r].g, &self.rows[r].ks)
    }

    fn h_of(&self, g: &Poly) -> Poly {
        Poly::xm_minus_one(&self.ctx, self.m)
            .divrem(g)
            .expect("validated divisor")
            .0
    }

    /// Generator matrix in the block layout: for each row r, the circulant
    /// blocks of (g_r k_r1 | ... | g_r k_rl) with m - deg g_r rows, stacked.
    pub fn generator_matrix(&self) -> MatFq {
        let mut out: Option<MatFq> = None;
        for row in &self.rows {
            let nrows = self.m - row.g.degree().expect("g is nonzero");
            let gr = RingElem::new(row.g.clone(), self.m).expect("m > 0");
            let mut block_row: Option<MatFq> = None;
            for k in &row.ks {
                let entry = rmul(&gr, k);
                let circ = MatFq::circulant(&entry, nrows).expect("nrows <= m");
                block_row = Some(match block_row {
                    None => circ,
                    Some(acc) => acc.hcat(&circ).expect("equal row counts"),
                });
            }
            let block_row = block_row.expect("index >= 1");
            out = Some(match out {
                None => block_row,
                Some(acc) => acc.vcat(&block_row).expect("equal column counts"),
            });
        }
        match out {
            Some(mat) => mat,
            None => MatFq::zeros(&self.ctx, 0, self.length()),
        }
    }

    /// Dimension, computed as the exact rank of the generator matrix.
    pub fn dimension(&self) -> usize {
        self.generator_matrix().rank()
    }

    /// Decide self-orthogonality under the given inner product.
    ///
    /// For rows r <= s the test checks, with h_r = (x^m - 1)/g_r and
    /// bar the substitution x -> x^(-1):
    ///
    /// * Euclidean:  h_r | bar(g_s) * sum_j k_rj bar(k_sj)
    /// * Hermitian:  h_r^[q] | bar(g_s) * sum_j k_rj^[q] bar(k_sj)
    /// * Symplectic (l = 2w): h_r | bar(g_s) * sum_{j<w}
    ///   (k_rj bar(k_s(w+j)) - k_r(w+j) bar(k_sj))
    ///
    /// In debug builds the verdict is checked against the Gram-matrix oracle.
    pub fn is_self_orthogonal(&self, ip: InnerProduct) -> Result<SelfOrthogonality> {
        match ip {
            InnerProduct::Symplectic if self.l % 2 != 0 => {
                return Err(Error::OddIndex { l: self.l });
            }
            InnerProduct::Hermitian => {
                self.ctx.conj_exponent()?;
            }
            _ => {}
        }
        let w = self.l / 2;
        let mut failing = Vec::new();
        for r in 0..self.rows.len() {
            for s in r..self.rows.len() {
                let row_r = &self.rows[r];
                let row_s = &self.rows[s];
                let g_s_bar = RingElem::new(row_s.g.clone(), self.m)
                    .expect("m > 0")
                    .bar();
                let mut acc = RingElem::zero(&self.ctx, self.m)?;
                match ip {
                    InnerProduct::Euclidean => {
                        for j in 0..self.l {
                            acc = radd(&acc, &rmul(&row_r.ks[j], &row_s.ks[j].bar()));
                        }
                    }
                    InnerProduct::Hermitian => {
                        for j in 0..self.l {
                            acc = radd(
                                &acc,
                                &rmul(&row_r.ks[j].power_map_q()?, &row_s.ks[j].bar()),
                            );
                        }
                    }
                    InnerProduct::Symplectic => {
                        for j in 0..w {
                            let plus = rmul(&row_r.ks[j], &row_s.ks[w + j].bar());
                            let minus = rmul(&row_r.ks[w + j], &row_s.ks[j].bar());
                            acc = radd(&acc, &rsub(&plus, &minus));
                        }
                    }
                }
                let dividend = rmul(&g_s_bar, &acc);
                let divisor = match ip {
                    InnerProduct::Hermitian => self.h_of(&row_r.g).power_map_q()?,
                    _ => self.h_of(&row_r.g),
                };
                if !divides_with_zero(&divisor, dividend.poly()) {
                    failing.push((r + 1, s + 1));
                }
            }
        }
        let holds = failing.is_empty();
        #[cfg(debug_assertions)]
        {
            let g = self.generator_matrix();
            let gram_zero = match ip {
                InnerProduct::Euclidean => g.gram_euclidean().is_zero(),
                InnerProduct::Hermitian => g.gram_hermitian()?.is_zero(),
                InnerProduct::Symplectic => g.gram_symplectic()?.is_zero(),
            };
            debug_assert_eq!(
                holds, gram_zero,
                "polynomial criterion must agree with the Gram-matrix oracle"
            );
        }
        Ok(SelfOrthogonality {
            holds,
            failing_pairs: failing,
        })
    }

    /// Minimum Hamming distance by exhaustive enumeration.
    pub fn min_distance(&self, budget: Option<u64>) -> Result<usize> {
        min_weight(&self.generator_matrix(), WeightKind::Hamming, budget)
    }
}

/// Two-generator quasi-cyclic code of index 2:
/// spanned by ([g1], [v1 g1]) and ([v2 g2], [g2]).
///
/// Invariants checked at construction: g1 and g2 divide x^m - 1 (stored
/// monic), and gcd(v1 v2 - 1, x^m - 1) = 1. Under these the dimension is
/// exactly 2m - deg g1 - deg g2, which [`TwoGenQc::dimension`] verifies
/// against the matrix rank on every call.
#[derive(Clone)]
pub struct TwoGenQc {
    ctx: Arc<FieldCtx>,
    m: usize,
    g1: Poly,
    g2: Poly,
    v1: RingElem,
    v2: RingElem,
}

impl fmt::Debug for TwoGenQc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TwoGenQc(m = {}, g1 = {}, g2 = {}, v1 = {}, v2 = {})",
            self.m,
            self.g1.format(),
            self.g2.format(),
            self.v1.poly().format(),
            self.v2.poly().format()
        )
    }
}

impl TwoGenQc {
    /// Build from block length m, generator polynomials, and multipliers.
    /// The multipliers need not be monic and are reduced mod x^m - 1.
    pub fn new(m: usize, g1: Poly, g2: Poly, v1: Poly, v2: Poly) -> Result<TwoGenQc> {
        if m == 0 {
            return Err(Error::ZeroLength);
        }
        let ctx = Arc::clone(g1.ctx());
        let xm1 = Poly::xm_minus_one(&ctx, m);
        for g in [&g1, &g2] {
            if g.is_zero() || !g.divides(&xm1)? {
                return Err(Error::GeneratorNotDivisor { m });
            }
        }
        let g1 = g1.monic();
        let g2 = g2.monic();
        let v1 = RingElem::new(v1, m)?;
        let v2 = RingElem::new(v2, m)?;
        let one = RingElem::one(&ctx, m)?;
        let unit_part = rsub(&rmul(&v1, &v2), &one);
        let cert = Poly::gcd(unit_part.poly(), &xm1)?;
        if cert.degree() != Some(0) {
            return Err(Error::GcdConditionFailed(format!(
                "gcd(v1 v2 - 1, x^m - 1) = {} must be 1",
                cert.format()
            )));
        }
        Ok(TwoGenQc {
            ctx,
            m,
            g1,
            g2,
            v1,
            v2,
        })
    }

    /// Field context.
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    /// Block length m.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Code length 2m.
    pub fn length(&self) -> usize {
        2 * self.m
    }

    /// First generator polynomial (monic divisor of x^m - 1).
    pub fn g1(&self) -> &Poly {
        &self.g1
    }

    /// Second generator polynomial (monic divisor of x^m - 1).
    pub fn g2(&self) -> &Poly {
        &self.g2
    }

    /// First multiplier.
    pub fn v1(&self) -> &RingElem {
        &self.v1
    }

    /// Second multiplier.
    pub fn v2(&self) -> &RingElem {
        &self.v2
    }

    /// The same code as a two-row [`TGenQc`]: rows (g1, [1, v1]) and
    /// (g2, [v2, 1]). The gcd certificates hold automatically because each
    /// row contains the constant 1.
    pub fn to_t_gen(&self) -> TGenQc {
        let one = Poly::one(&self.ctx);
        TGenQc::new(
            self.m,
            vec![
                (self.g1.clone(), vec![one.clone(), self.v1.poly().clone()]),
                (self.g2.clone(), vec![self.v2.poly().clone(), one]),
            ],
        )
        .expect("certified by construction")
    }

    /// Generator matrix in the block layout.
    pub fn generator_matrix(&self) -> MatFq {
        self.to_t_gen().generator_matrix()
    }

    /// Dimension 2m - deg g1 - deg g2, verified against the exact rank.
    pub fn dimension(&self) -> Result<usize> {
        let formula = 2 * self.m
            - self.g1.degree().expect("g1 is nonzero")
            - self.g2.degree().expect("g2 is nonzero");
        let rank = self.generator_matrix().rank();
        if formula != rank {
            return Err(Error::FormulaRankMismatch { formula, rank });
        }
        Ok(formula)
    }

    /// Self-orthogonality via the general quasi-cyclic criterion.
    pub fn is_self_orthogonal(&self, ip: InnerProduct) -> Result<SelfOrthogonality> {
        self.to_t_gen().is_self_orthogonal(ip)
    }

    fn h1(&self) -> Poly {
        Poly::xm_minus_one(&self.ctx, self.m)
            .divrem(&self.g1)
            .expect("validated divisor")
            .0
    }

    fn h2(&self) -> Poly {
        Poly::xm_minus_one(&self.ctx, self.m)
            .divrem(&self.g2)
            .expect("validated divisor")
            .0
    }

    fn one(&self) -> RingElem {
        RingElem::one(&self.ctx, self.m).expect("m > 0")
    }

    fn g1_ring(&self) -> RingElem {
        RingElem::new(self.g1.clone(), self.m).expect("m > 0")
    }

    fn g2_ring(&self) -> RingElem {
        RingElem::new(self.g2.clone(), self.m).expect("m > 0")
    }

    /// The three self-orthogonality clauses for this shape, plus their
    /// conjunction. Clause ids are "SO-E.1" through "SO-S.3" by inner
    /// product. In debug builds the conjunction is checked against the
    /// general criterion on the expanded two-row form.
    pub fn so_conditions(&self, ip: InnerProduct) -> Result<(bool, Vec<Clause>)> {
        let one = self.one();
        let g1b = self.g1_ring().bar();
        let g2b = self.g2_ring().bar();
        let v1b = self.v1.bar();
        let v2b = self.v2.bar();
        let tag = ip.tag();
        let clauses = match ip {
            InnerProduct::Euclidean => {
                let c1 = rmul(&g1b, &radd(&one, &rmul(&self.v1, &v1b)));
                let c2 = rmul(&g2b, &radd(&v2b, &self.v1));
                let c3 = rmul(&g2b, &radd(&one, &rmul(&self.v2, &v2b)));
                vec![
                    build_clause(format!("SO-{tag}.1"), self.h1(), &c1),
                    build_clause(format!("SO-{tag}.2"), self.h1(), &c2),
                    build_clause(format!("SO-{tag}.3"), self.h2(), &c3),
                ]
            }
            InnerProduct::Hermitian => {
                let v1q = self.v1.power_map_q()?;
                let v2q = self.v2.power_map_q()?;
                let h1q = self.h1().power_map_q()?;
                let h2q = self.h2().power_map_q()?;
                let c1 = rmul(&g1b, &radd(&one, &rmul(&v1q, &v1b)));
                let c2 = rmul(&g2b, &radd(&v2b, &v1q));
                let c3 = rmul(&g2b, &radd(&rmul(&v2q, &v2b), &one));
                vec![
                    build_clause(format!("SO-{tag}.1"), h1q.clone(), &c1),
                    build_clause(format!("SO-{tag}.2"), h1q, &c2),
                    build_clause(format!("SO-{tag}.3"), h2q, &c3),
                ]
            }
            InnerProduct::Symplectic => {
                let c1 = rmul(&g1b, &rsub(&v1b, &self.v1));
                let c2 = rmul(&g2b, &rsub(&one, &rmul(&v2b, &self.v1)));
                let c3 = rmul(&g2b, &rsub(&self.v2, &v2b));
                vec![
                    build_clause(format!("SO-{tag}.1"), self.h1(), &c1),
                    build_clause(format!("SO-{tag}.2"), self.h1(), &c2),
                    build_clause(format!("SO-{tag}.3"), self.h2(), &c3),
                ]
            }
        };
        let holds = clauses.iter().all(|c| c.holds);
        debug_assert_eq!(
            holds,
            self.is_self_orthogonal(ip)?.holds,
            "shape-specialized clauses must agree with the general criterion"
        );
        Ok((holds, clauses))
    }

    /// Generator of the dual code under the given inner product, again in
    /// two-generator form:
    ///
    /// * Euclidean:  (g1_perp, g2_perp) with v1' = -bar(v2), v2' = -bar(v1);
    /// * Hermitian:  Hermitian perps with v1' = -bar(v2)^[q],
    ///   v2' = -bar(v1)^[q];
    /// * Symplectic: generator roles swap — (g2_perp, g1_perp) with
    ///   v1' = bar(v1), v2' = bar(v2), Euclidean perps throughout.
    ///
    /// In debug builds the result is checked row space against kernel.
    pub fn dual(&self, ip: InnerProduct) -> Result<TwoGenQc> {
        // The annihilator of a unit generator is the zero residue; its cyclic
        // block is the zero code, whose divisor representative is x^m - 1.
        let as_divisor = |p: &RingElem| -> Poly {
            if p.is_zero() {
                Poly::xm_minus_one(&self.ctx, self.m)
            } else {
                p.poly().clone()
            }
        };
        let g1r = self.g1_ring();
        let g2r = self.g2_ring();
        let dual = match ip {
            InnerProduct::Euclidean => {
                let p1 = g1r.perp();
                let p2 = g2r.perp();
                TwoGenQc::new(
                    self.m,
                    as_divisor(&p1),
                    as_divisor(&p2),
                    self.v2.bar().neg().poly().clone(),
                    self.v1.bar().neg().poly().clone(),
                )?
            }
            InnerProduct::Hermitian => {
                let p1 = g1r.perp_hermitian()?;
                let p2 = g2r.perp_hermitian()?;
                TwoGenQc::new(
                    self.m,
                    as_divisor(&p1),
                    as_divisor(&p2),
                    self.v2.bar().neg().power_map_q()?.poly().clone(),
                    self.v1.bar().neg().power_map_q()?.poly().clone(),
                )?
            }
            InnerProduct::Symplectic => {
                let p1 = g1r.perp();
                let p2 = g2r.perp();
                TwoGenQc::new(
                    self.m,
                    as_divisor(&p2),
                    as_divisor(&p1),
                    self.v1.bar().poly().clone(),
                    self.v2.bar().poly().clone(),
                )?
            }
        };
        #[cfg(debug_assertions)]
        {
            let g = self.generator_matrix();
            let ker = match ip {
                InnerProduct::Euclidean => g.kernel_basis(),
                InnerProduct::Hermitian => g.conj()?.kernel_basis(),
                InnerProduct::Symplectic => {
                    let om = omega(&self.ctx, g.cols())?;
                    g.matmul(&om).expect("shapes agree").kernel_basis()
                }
            };
            let dg = dual.generator_matrix();
            debug_assert!(
                ker.rref_basis().contains_row_space(&dg)?
                    && dg.rref_basis().contains_row_space(&ker)?,
                "dual construction must match the kernel of the form"
            );
        }
        Ok(dual)
    }

    /// The three dual-containment clauses (C-dual inside C) for this shape,
    /// plus their conjunction. Clause ids are "DC-E.1" through "DC-S.3".
    /// In debug builds the conjunction is checked against direct row-space
    /// membership of the dual's generators in C.
    pub fn is_dual_containing(&self, ip: InnerProduct) -> Result<(bool, Vec<Clause>)> {
        let one = self.one();
        let v1b = self.v1.bar();
        let v2b = self.v2.bar();
        let tag = ip.tag();
        let clauses = match ip {
            InnerProduct::Euclidean => {
                let p1 = self.g1_ring().perp();
                let p2 = self.g2_ring().perp();
                let c1 = rmul(&p1, &radd(&one, &rmul(&v2b, &self.v2)));
                let c2 = rmul(&p2, &radd(&v1b, &self.v2));
                let c3 = rmul(&p2, &radd(&one, &rmul(&v1b, &self.v1)));
                vec![
                    build_clause(format!("DC-{tag}.1"), self.g1.clone(), &c1),
                    build_clause(format!("DC-{tag}.2"), self.g1.clone(), &c2),
                    build_clause(format!("DC-{tag}.3"), self.g2.clone(), &c3),
                ]
            }
            InnerProduct::Hermitian => {
                let p1 = self.g1_ring().perp_hermitian()?;
                let p2 = self.g2_ring().perp_hermitian()?;
                let v1bq = v1b.power_map_q()?;
                let v2bq = v2b.power_map_q()?;
                let c1 = rmul(&p1, &radd(&one, &rmul(&self.v2, &v2bq)));
                let c2 = rmul(&p2, &radd(&v1bq, &self.v2));
                let c3 = rmul(&p2, &radd(&one, &rmul(&self.v1, &v1bq)));
                vec![
                    build_clause(format!("DC-{tag}.1"), self.g1.clone(), &c1),
                    build_clause(format!("DC-{tag}.2"), self.g1.clone(), &c2),
                    build_clause(format!("DC-{tag}.3"), self.g2.clone(), &c3),
                ]
            }
            InnerProduct::Symplectic => {
                let p1 = self.g1_ring().perp();
                let p2 = self.g2_ring().perp();
                // Each clause is the self-orthogonality clause of the dual
                // code (whose multipliers are bar(v1), bar(v2)), rewritten in
                // terms of this code's data; the bar therefore falls on v2 in
                // the cross clause, not on v1.
                let c1 = rmul(&p2, &rsub(&v1b, &self.v1));
                let c2 = rmul(&p1, &rsub(&one, &rmul(&v2b, &self.v1)));
                let c3 = rmul(&p1, &rsub(&self.v2, &v2b));
                vec![
                    build_clause(format!("DC-{tag}.1"), self.g2.clone(), &c1),
                    build_clause(format!("DC-{tag}.2"), self.g2.clone(), &c2),
                    build_clause(format!("DC-{tag}.3"), self.g1.clone(), &c3),
                ]
            }
        };
        let holds = clauses.iter().all(|c| c.holds);
        #[cfg(debug_assertions)]
        {
            let dual = self.dual(ip)?;
            let contained = self
                .generator_matrix()
                .rref_basis()
                .contains_row_space(&dual.generator_matrix())?;
            debug_assert_eq!(
                holds, contained,
                "dual-containment clauses must agree with direct membership"
            );
        }
        Ok((holds, clauses))
    }

    /// Minimum Hamming distance by exhaustive enumeration.
    pub fn min_distance(&self, budget: Option<u64>) -> Result<usize> {
        min_weight(&self.generator_matrix(), WeightKind::Hamming, budget)
    }

    /// Evaluate one of the previously published sufficient conditions on
    /// this code. Errors with [`Error::ShapeMismatch`] if the code's
    /// multipliers don't have the shape that condition speaks about.
    pub fn legacy_sufficient_condition(&self, which: LegacyCondition) -> Result<bool> {
        let zero = RingElem::zero(&self.ctx, self.m)?;
        let one = self.one();
        match which {
            LegacyCondition::GalindoEuclideanChain | LegacyCondition::GalindoHermitianChain => {
                if self.v2 != zero {
                    return Err(Error::ShapeMismatch(format!(
                        "{which:?} requires v2 = 0, got v2 = {}",
                        self.v2.poly().format()
                    )));
                }
            }
            LegacyCondition::DuChaoEuclidean | LegacyCondition::LvSymplectic => {
                if self.v2 != one {
                    return Err(Error::ShapeMismatch(format!(
                        "{which:?} requires v2 = 1, got v2 = {}",
                        self.v2.poly().format()
                    )));
                }
            }
            LegacyCondition::GuanHermitian | LegacyCondition::GuanSymplectic => {
                if self.v1 != self.v2 {
                    return Err(Error::ShapeMismatch(format!(
                        "{which:?} requires v1 = v2, got v1 = {} and v2 = {}",
                        self.v1.poly().format(),
                        self.v2.poly().format()
                    )));
                }
            }
        }
        let verdict = match which {
            LegacyCondition::GalindoEuclideanChain => {
                let p1 = self.g1_ring().perp();
                let p2 = self.g2_ring().perp();
                divides_with_zero(&self.g1, &self.g2)
                    && divides_with_zero(&self.g2, p2.poly())
                    && divides_with_zero(p2.poly(), p1.poly())
            }
            LegacyCondition::GalindoHermitianChain => {
                let p1 = self.g1_ring().perp_hermitian()?;
                let p2 = self.g2_ring().perp_hermitian()?;
                divides_with_zero(&self.g1, &self.g2)
                    && divides_with_zero(&self.g2, p2.poly())
                    && divides_with_zero(p2.poly(), p1.poly())
            }
            LegacyCondition::DuChaoEuclidean => {
                let p1 = self.g1_ring().perp();
                let p2 = self.g2_ring().perp();
                divides_with_zero(&self.g2, p1.poly())
                    && divides_with_zero(&self.g2, p2.poly())
                    && self.v1.bar() == self.v1
            }
            LegacyCondition::LvSymplectic => {
                let p2 = self.g2_ring().perp();
                divides_with_zero(&self.g1, p2.poly()) && self.v1.bar() == self.v1
            }
            LegacyCondition::GuanHermitian => {
                let p1 = self.g1_ring().perp_hermitian()?;
                let p2 = self.g2_ring().perp_hermitian()?;
                let vbq = self.v1.bar().power_map_q()?;
                let mid = rmul(&p2, &radd(&vbq, &self.v1));
                divides_with_zero(&self.g1, p1.poly())
                    && divides_with_zero(&self.g1, mid.poly())
                    && divides_with_zero(&self.g2, p2.poly())
            }
            LegacyCondition::GuanSymplectic => {
                let p2 = self.g2_ring().perp();
                let coprime = Poly::gcd(&self.g1, &self.g2)?.degree() == Some(0);
                divides_with_zero(&self.g1, p2.poly())
                    && coprime
                    && self.v1.bar() == self.v1
            }
        };
        Ok(verdict)
    }
}

/// Previously published sufficient conditions for dual-containment of
/// two-generator quasi-cyclic codes, each tied to a multiplier shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegacyCondition {
    /// v2 = 0: the divisibility chain g1 | g2 | g2_perp | g1_perp.
    GalindoEuclideanChain,
    /// v2 = 0: the same chain with Hermitian perps.
    GalindoHermitianChain,
    /// v2 = 1: g2 | g1_perp, g2 | g2_perp, and bar(v1) = v1.
    DuChaoEuclidean,
    /// v2 = 1: g1 | g2_perp and bar(v1) = v1.
    LvSymplectic,
    /// v1 = v2 = v: g1 | g1_perp_H, g1 | g2_perp_H (bar(v)^[q] + v),
    /// and g2 | g2_perp_H.
    GuanHermitian,
    /// v1 = v2 = v: g1 | g2_perp, gcd(g1, g2) = 1, and bar(v) = v.
    GuanSymplectic,
}

// ----- coordinate layouts -----

/// Convert a block-layout vector (block_1 | ... | block_l) to the
/// interleaved layout, where coordinate i*l + j is coefficient i of block j.
pub fn block_to_interleaved(v: &[FieldElem], l: usize, m: usize) -> Result<Vec<FieldElem>> {
    if v.len() != l * m || l == 0 || m == 0 {
        return Err(Error::LengthMismatch {
            left: l * m,
            right: v.len(),
        });
    }
    let mut out = Vec::with_capacity(v.len());
    for i in 0..m {
        for j in 0..l {
            out.push(v[j * m + i]);
        }
    }
    Ok(out)
}

/// Inverse of [`block_to_interleaved`].
pub fn interleaved_to_block(v: &[FieldElem], l: usize, m: usize) -> Result<Vec<FieldElem>> {
    if v.len() != l * m || l == 0 || m == 0 {
        return Err(Error::LengthMismatch {
            left: l * m,
            right: v.len(),
        });
    }
    let mut out = Vec::with_capacity(v.len());
    for j in 0..l {
        for i in 0..m {
            out.push(v[i * l + j]);
        }
    }
    Ok(out)
}

/// Apply the block-to-interleaved column permutation to a matrix whose
/// columns are in the block layout.
pub fn interleave_columns(mat: &MatFq, l: usize, m: usize) -> Result<MatFq> {
    if mat.cols() != l * m || l == 0 || m == 0 {
        return Err(Error::LengthMismatch {
            left: l * m,
            right: mat.cols(),
        });
    }
    let mut out = MatFq::zeros(mat.ctx(), mat.rows(), mat.cols());
    for r in 0..mat.rows() {
        for i in 0..m {
            for j in 0..l {
                out.set(r, i * l + j, mat.get(r, j * m + i));
            }
        }
    }
    Ok(out)
}

// ----- codeword enumeration and minimum weights -----

/// Which weight to measure during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    /// Number of nonzero coordinates.
    Hamming,
    /// Number of indices i < n/2 where (c_i, c_{n/2+i}) != (0, 0),
    /// in the block layout.
    Symplectic,
}

/// Exhaustive iterator over all q^k codewords of a generator matrix's row
/// space, starting at zero, in mixed-radix odometer order over the reduced
/// basis. Construction fails upfront if q^k exceeds the budget.
pub struct CodewordIter {
    ctx: Arc<FieldCtx>,
    /// deltas[pos][d]: the vector to add when row pos's digit steps from
    /// scalar enc d to enc (d+1) mod q, i.e. row * (elem(d+1) - elem(d)).
    /// Repeatedly adding the bare row would only reach the prime-subfield
    /// multiples, so each scalar transition gets its own precomputed delta.
    deltas: Vec<Vec<Vec<u32>>>,
    digits: Vec<u32>,
    state: Vec<u32>,
    remaining: u64,
    started: bool,
}

impl CodewordIter {
    /// Enumerate the row space of `gen`. `budget` caps q^rank (default
    /// [`DEFAULT_DISTANCE_BUDGET`]).
    pub fn new(gen: &MatFq, budget: Option<u64>) -> Result<CodewordIter> {
        let basis = gen.rref_basis();
        let ctx = Arc::clone(basis.ctx());
        let q = ctx.q() as u32;
        let total = checked_count(ctx.q(), basis.rows(), budget)?;
        let deltas = (0..basis.rows())
            .map(|pos| {
                let row = basis.row_encs(pos);
                (0..q)
                    .map(|d| {
                        let from = ctx.elem_from_enc(d);
                        let to = ctx.elem_from_enc((d + 1) % q);
                        let step = ctx.sub(to, from);
                        row.iter().map(|&r| ctx.mul_enc(r, step.enc())).collect()
                    })
                    .collect()
            })
            .collect();
        Ok(CodewordIter {
            ctx,
            deltas,
            digits: vec![0; basis.rows()],
            state: vec![0; basis.cols()],
            remaining: total,
            started: false,
        })
    }

    /// Total number of codewords (q^k).
    pub fn total(&self) -> u64 {
        self.remaining
    }

    /// Advance and borrow the next codeword's encodings, or None when done.
    pub(crate) fn step_encs(&mut self) -> Option<&[u32]> {
        if self.remaining == 0 {
            return None;
        }
        if !self.started {
            self.started = true;
            self.remaining -= 1;
            return Some(&self.state);
        }
        self.remaining -= 1;
        let q = self.ctx.q() as u32;
        let mut pos = 0;
        loop {
            let d = self.digits[pos];
            for (slot, &r) in self.state.iter_mut().zip(&self.deltas[pos][d as usize]) {
                *slot = self.ctx.add_enc(*slot, r);
            }
            self.digits[pos] += 1;
            if self.digits[pos] == q {
                self.digits[pos] = 0;
                pos += 1;
            } else {
                break;
            }
        }
        Some(&self.state)
    }
}

impl Iterator for CodewordIter {
    type Item = Vec<FieldElem>;

    fn next(&mut self) -> Option<Self::Item> {
        let ctx = Arc::clone(&self.ctx);
        self.step_encs()
            .map(|encs| encs.iter().map(|&e| ctx.elem_from_enc(e)).collect())
    }
}

fn checked_count(q: u64, k: usize, budget: Option<u64>) -> Result<u64> {
    let budget = budget.unwrap_or(DEFAULT_DISTANCE_BUDGET);
    let mut required: u128 = 1;
    for _ in 0..k {
        required = required.saturating_mul(q as u128);
    }
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(required as u64)
}

fn hamming_weight_encs(v: &[u32]) -> usize {
    v.iter().filter(|&&e| e != 0).count()
}

fn symplectic_weight_encs(v: &[u32]) -> usize {
    let w = v.len() / 2;
    (0..w).filter(|&i| v[i] != 0 || v[w + i] != 0).count()
}

fn validate_weight_kind(kind: WeightKind, cols: usize) -> Result<()> {
    if kind == WeightKind::Symplectic && cols % 2 != 0 {
        return Err(Error::OddColumns { cols });
    }
    Ok(())
}

/// Minimum weight over the nonzero codewords of `gen`'s row space, by
/// exhaustive enumeration (bit-packed for binary codes of length <= 64).
pub fn min_weight(gen: &MatFq, kind: WeightKind, budget: Option<u64>) -> Result<usize> {
    validate_weight_kind(kind, gen.cols())?;
    let basis = gen.rref_basis();
    if basis.rows() == 0 {
        return Err(Error::DimensionMismatch(
            "the zero code has no nonzero codewords".into(),
        ));
    }
    let q = basis.ctx().q();
    let total = checked_count(q, basis.rows(), budget)?;
    if q == 2 && basis.cols() <= 64 {
        let masks = pack_rows(&basis);
        let wf = bit_weight_fn(kind, basis.cols());
        let mut state = 0u64;
        let mut best = usize::MAX;
        for i in 1..total {
            state ^= masks[i.trailing_zeros() as usize];
            let w = wf(state);
            if w < best {
                best = w;
            }
        }
        return Ok(best);
    }
    let mut iter = CodewordIter::new(gen, budget)?;
    let mut best = usize::MAX;
    iter.step_encs(); // skip the zero word
    while let Some(encs) = iter.step_encs() {
        let w = match kind {
            WeightKind::Hamming => hamming_weight_encs(encs),
            WeightKind::Symplectic => symplectic_weight_encs(encs),
        };
        if w < best {
            best = w;
        }
    }
    Ok(best)
}

/// Minimum weight over codewords of `big` that are NOT in `small`.
///
/// Requires small's row space to lie inside big's ([`Error::NotASubcode`]
/// otherwise). Returns None when the two row spaces coincide (the
/// difference is empty). Membership is only tested when a codeword would
/// improve the running minimum.
pub fn min_weight_in_difference(
    big: &MatFq,
    small: &MatFq,
    kind: WeightKind,
    budget: Option<u64>,
) -> Result<Option<usize>> {
    validate_weight_kind(kind, big.cols())?;
    let big_basis = big.rref_basis();
    let small_basis = small.rref_basis();
    if !big_basis.contains_row_space(&small_basis)? {
        return Err(Error::NotASubcode);
    }
    if big_basis.rows() == small_basis.rows() {
        return Ok(None);
    }
    let q = big_basis.ctx().q();
    let total = checked_count(q, big_basis.rows(), budget)?;
    if q == 2 && big_basis.cols() <= 64 {
        let masks = pack_rows(&big_basis);
        let small_masks = pack_rows(&small_basis);
        let small_pivots: Vec<usize> = pivot_columns(&small_basis);
        let wf = bit_weight_fn(kind, big_basis.cols());
        let in_small = |word: u64| -> bool {
            let mut x = word;
            for (row, &pc) in small_masks.iter().zip(&small_pivots) {
                if (x >> pc) & 1 == 1 {
                    x ^= row;
                }
            }
            x == 0
        };
        let mut state = 0u64;
        let mut best = usize::MAX;
        for i in 1..total {
            state ^= masks[i.trailing_zeros() as usize];
            let w = wf(state);
            if w < best && !in_small(state) {
                best = w;
            }
        }
        return Ok(Some(best));
    }
    let mut iter = CodewordIter::new(big, budget)?;
    let mut best = usize::MAX;
    iter.step_encs(); // zero is always in small
    let mut candidate = Vec::new();
    while let Some(encs) = iter.step_encs() {
        let w = match kind {
            WeightKind::Hamming => hamming_weight_encs(encs),
            WeightKind::Symplectic => symplectic_weight_encs(encs),
        };
        if w < best {
            candidate.clear();
            candidate.extend_from_slice(encs);
            if !small_basis.contains_encs(&candidate) {
                best = w;
            }
        }
    }
    Ok(Some(best))
}

fn pack_rows(basis: &MatFq) -> Vec<u64> {
    (0..basis.rows())
        .map(|i| {
            basis
                .row_encs(i)
                .iter()
                .enumerate()
                .fold(0u64, |acc, (j, &e)| acc | ((e as u64 & 1) << j))
        })
        .collect()
}

fn pivot_columns(rref: &MatFq) -> Vec<usize> {
    (0..rref.rows())
        .map(|i| {
            rref.row_encs(i)
                .iter()
                .position(|&e| e != 0)
                .expect("rref basis has no zero rows")
        })
        .collect()
}

fn bit_weight_fn(kind: WeightKind, cols: usize) -> impl Fn(u64) -> usize {
    let w = cols / 2;
    let low = if w == 0 { 0 } else { (1u64 << w) - 1 };
    move |state: u64| match kind {
        WeightKind::Hamming => state.count_ones() as usize,
        WeightKind::Symplectic => ((state & low) | ((state >> w) & low)).count_ones() as usize,
    }
}
