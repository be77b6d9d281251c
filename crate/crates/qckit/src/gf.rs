//! Small finite fields GF(p^gamma), p prime, p^gamma <= 2^16.
//!
//! A [`FieldCtx`] owns everything needed for arithmetic in one field: the
//! characteristic, the extension degree, the defining modulus, and (for small
//! fields) log/antilog tables. Construction is fully deterministic: the
//! modulus is the lexicographically smallest monic irreducible polynomial of
//! the right degree, comparing coefficients from the constant term upward, so
//! two contexts built from the same `(p, gamma)` are interchangeable. For
//! GF(4) this yields `w^2 + w + 1`, for GF(9) `w^2 + 1`.
//!
//! Elements are plain copyable values ([`FieldElem`]) carrying the packed
//! coefficient tuple plus a fingerprint of their context; operations panic if
//! asked to mix elements from structurally different fields.

use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field cardinality, inclusive.
pub const MAX_FIELD_CARDINALITY: u64 = 1 << 16;

/// Fields up to this cardinality get log/antilog multiplication tables;
/// larger ones multiply by schoolbook polynomial arithmetic. Observable
/// behavior is identical on both sides of the bound.
const TABLE_BOUND: u64 = 4096;

/// One element of a finite field: the coefficient tuple over F_p packed in
/// base p, plus the fingerprint of the owning [`FieldCtx`].
///
/// Elements are created and combined through a `FieldCtx`; two elements may be
/// combined exactly when their contexts share the same fingerprint (same
/// characteristic, degree, and modulus).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem {
    enc: u32,
    ctx: u64,
}

impl FieldElem {
    /// Packed encoding: sum of c_i * p^i over the coefficient tuple.
    pub fn enc(self) -> u32 {
        self.enc
    }

    /// True for the additive identity.
    pub fn is_zero(self) -> bool {
        self.enc == 0
    }
}

struct Tables {
    /// exp[i] = generator^i for i in 0..q-1.
    exp: Vec<u32>,
    /// log[e] for e in 1..q; log[0] is unused.
    log: Vec<u32>,
}

/// Arithmetic context for one finite field GF(p^gamma).
///
/// Immutable after construction and safe to share across threads; wrap it in
/// an [`Arc`] (see [`ctx_new`]) to share between polynomials, matrices, and
/// codes.
pub struct FieldCtx {
    p: u64,
    gamma: u32,
    q: u64,
    /// Ascending coefficients of the monic defining polynomial, length
    /// gamma + 1. For prime fields this is the degenerate `x`.
    modulus: Vec<u64>,
    /// Smallest generator of the multiplicative group, in encoding order.
    generator: u32,
    tables: Option<Tables>,
    id: u64,
}

/// Build a shared field context; see [`FieldCtx::new`].
pub fn ctx_new(p: u64, gamma: u32) -> Result<Arc<FieldCtx>> {
    FieldCtx::new(p, gamma).map(Arc::new)
}

impl FieldCtx {
    /// Construct GF(p^gamma).
    ///
    /// The defining modulus is derived, not supplied: the lexicographically
    /// smallest monic irreducible polynomial of degree gamma over F_p, with
    /// coefficients compared from the constant term upward. The generator is
    /// the multiplicatively smallest element (in encoding order) of full
    /// order, found by exhaustive order testing against the prime
    /// factorization of q - 1.
    ///
    /// # Examples
    ///
    /// ```
    /// use qckit::gf::FieldCtx;
    /// let f4 = FieldCtx::new(2, 2).unwrap();
    /// let w = f4.generator();
    /// // w^2 + w + 1 = 0, so w * w = w + 1
    /// assert_eq!(f4.mul(w, w), f4.add(w, f4.one()));
    /// ```
    pub fn new(p: u64, gamma: u32) -> Result<FieldCtx> {
        if gamma == 0 {
            return Err(Error::ZeroExtensionDegree);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = (p as u128).checked_pow(gamma).ok_or(Error::FieldTooLarge {
            q: u128::MAX,
        })?;
        if q > MAX_FIELD_CARDINALITY as u128 {
            return Err(Error::FieldTooLarge { q });
        }
        let q = q as u64;

        let modulus = if gamma == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, gamma)
        };

        let mut ctx = FieldCtx {
            p,
            gamma,
            q,
            id: fingerprint(p, gamma, &modulus),
            modulus,
            generator: 0,
            tables: None,
        };
        ctx.generator = ctx.find_generator();
        if q <= TABLE_BOUND {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    /// Field characteristic.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    /// Cardinality p^gamma.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Ascending coefficients of the defining modulus (length gamma + 1).
    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.modulus
    }

    /// Context fingerprint; equal fingerprints mean interchangeable contexts.
    pub fn id(&self) -> u64 {
        self.id
    }

    /// The additive identity.
    pub fn zero(&self) -> FieldElem {
        self.make(0)
    }

    /// The multiplicative identity.
    pub fn one(&self) -> FieldElem {
        self.make(1)
    }

    /// Smallest generator of the multiplicative group (encoding order).
    pub fn generator(&self) -> FieldElem {
        self.make(self.generator)
    }

    /// Element with the given packed encoding.
    ///
    /// # Panics
    ///
    /// Panics if `enc >= q`; encodings come from this crate's own arithmetic
    /// or from [`FieldCtx::parse_elem`], so an out-of-range value is a bug.
    pub fn elem_from_enc(&self, enc: u32) -> FieldElem {
        assert!(
            (enc as u64) < self.q,
            "encoding {enc} out of range for GF({})",
            self.q
        );
        self.make(enc)
    }

    /// All q elements, in encoding order.
    pub fn elems(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q as u32).map(move |e| self.make(e))
    }

    /// a + b.
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.make(self.add_enc(self.take(a), self.take(b)))
    }

    /// a - b.
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.make(self.sub_enc(self.take(a), self.take(b)))
    }

    /// -a.
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        self.make(self.neg_enc(self.take(a)))
    }

    /// a * b.
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.make(self.mul_enc(self.take(a), self.take(b)))
    }

    /// Multiplicative inverse.
    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        Ok(self.make(self.inv_enc(self.take(a))?))
    }

    /// a^e with a^0 = 1 (also for a = 0).
    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        self.make(self.pow_enc(self.take(a), e))
    }

    /// The conjugation a -> a^sqrt(q) of a quadratic extension; errors with
    /// [`Error::NotAQuadraticExtension`] for odd extension degree.
    pub fn pow_q(&self, a: FieldElem) -> Result<FieldElem> {
        let s = self.conj_exponent()?;
        Ok(self.pow(a, s))
    }

    /// sqrt(q) = p^(gamma/2), the exponent of the conjugation map, available
    /// exactly when gamma is even.
    pub fn conj_exponent(&self) -> Result<u64> {
        if self.gamma % 2 != 0 {
            return Err(Error::NotAQuadraticExtension { q: self.q });
        }
        Ok(self.p.pow(self.gamma / 2))
    }

    // ----- encoding-level arithmetic (shared with the sibling modules) -----

    #[inline]
    pub(crate) fn add_enc(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.gamma == 1 {
            return ((a as u64 + b as u64) % self.p) as u32;
        }
        let mut out = 0u64;
        let (mut a, mut b, mut shift) = (a as u64, b as u64, 1u64);
        while a != 0 || b != 0 {
            out += (a % self.p + b % self.p) % self.p * shift;
            a /= self.p;
            b /= self.p;
            shift *= self.p;
        }
        out as u32
    }

    #[inline]
    pub(crate) fn neg_enc(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.gamma == 1 {
            return if a == 0 { 0 } else { (self.p - a as u64) as u32 };
        }
        let mut out = 0u64;
        let (mut a, mut shift) = (a as u64, 1u64);
        while a != 0 {
            out += (self.p - a % self.p) % self.p * shift;
            a /= self.p;
            shift *= self.p;
        }
        out as u32
    }

    #[inline]
    pub(crate) fn sub_enc(&self, a: u32, b: u32) -> u32 {
        self.add_enc(a, self.neg_enc(b))
    }

    #[inline]
    pub(crate) fn mul_enc(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let i = t.log[a as usize] as u64 + t.log[b as usize] as u64;
            return t.exp[(i % (self.q - 1)) as usize];
        }
        self.mul_enc_schoolbook(a, b)
    }

    pub(crate) fn inv_enc(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.tables {
            let i = (self.q - 1 - t.log[a as usize] as u64) % (self.q - 1);
            return Ok(t.exp[i as usize]);
        }
        let v = pp_inv_mod(&self.enc_to_vec(a), &self.modulus, self.p)
            .expect("nonzero element of a field is invertible");
        Ok(self.vec_to_enc(&v))
    }

    pub(crate) fn pow_enc(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let i = (t.log[a as usize] as u128 * e as u128 % (self.q as u128 - 1)) as u64;
            return t.exp[i as usize];
        }
        // Nonzero elements satisfy a^(q-1) = 1, so reduce the exponent first.
        let e = e % (self.q - 1);
        if e == 0 {
            return 1;
        }
        self.pow_enc_sb(a, e)
    }

    fn mul_enc_schoolbook(&self, a: u32, b: u32) -> u32 {
        if self.gamma == 1 {
            return (a as u64 * b as u64 % self.p) as u32;
        }
        let prod = pp_mul(&self.enc_to_vec(a), &self.enc_to_vec(b), self.p);
        let rem = pp_rem(prod, &self.modulus, self.p);
        self.vec_to_enc(&rem)
    }

    fn enc_to_vec(&self, e: u32) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.gamma as usize);
        let mut e = e as u64;
        for _ in 0..self.gamma {
            v.push(e % self.p);
            e /= self.p;
        }
        pp_trim(&mut v);
        v
    }

    fn vec_to_enc(&self, v: &[u64]) -> u32 {
        let mut e = 0u64;
        for &c in v.iter().rev() {
            e = e * self.p + c;
        }
        e as u32
    }

    #[inline]
    fn make(&self, enc: u32) -> FieldElem {
        FieldElem { enc, ctx: self.id }
    }

    /// Unwrap an element's encoding, panicking on a context mismatch.
    #[inline]
    pub(crate) fn take(&self, a: FieldElem) -> u32 {
        assert!(
            a.ctx == self.id,
            "context mismatch: element belongs to a different field"
        );
        a.enc
    }

    fn find_generator(&self) -> u32 {
        if self.q == 2 {
            return 1;
        }
        let order = self.q - 1;
        let primes = prime_factors(order);
        'cand: for cand in 2..self.q as u32 {
            for &r in &primes {
                if self.pow_enc_sb(cand, order / r) == 1 {
                    continue 'cand;
                }
            }
            return cand;
        }
        unreachable!("every finite field has a multiplicative generator")
    }

    /// Square-and-multiply power that works before tables exist.
    fn pow_enc_sb(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_enc_schoolbook(acc, base);
            }
            base = self.mul_enc_schoolbook(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&self) -> Tables {
        let n = (self.q - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![u32::MAX; self.q as usize];
        let mut acc = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc;
            debug_assert_eq!(log[acc as usize], u32::MAX, "generator order too small");
            log[acc as usize] = i as u32;
            acc = self.mul_enc_schoolbook(acc, self.generator);
        }
        debug_assert_eq!(acc, 1, "generator order mismatch");
        Tables { exp, log }
    }

    // ----- text format -----

    /// Parse an element from text.
    ///
    /// Prime fields accept decimal residues ("0", "2"). Extension fields
    /// additionally accept sums of `w`-powers such as "w+1", "2w", "w^2+2w+2",
    /// where `w` is the residue class of the modulus variable; an optional `*`
    /// may separate coefficient and `w`. Minus signs are folded into the
    /// coefficients.
    ///
    /// # Examples
    ///
    /// ```
    /// use qckit::gf::FieldCtx;
    /// let f4 = FieldCtx::new(2, 2).unwrap();
    /// let a = f4.parse_elem("w+1").unwrap();
    /// assert_eq!(f4.format_elem(a), "w+1");
    /// ```
    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::ParseError("empty element".into()));
        }
        let mut coeffs: Vec<u64> = Vec::new();
        for (sign, term) in split_signed_terms(text)? {
            let (coeff, exp) = self.parse_term(term)?;
            let coeff = if sign < 0 { (self.p - coeff % self.p) % self.p } else { coeff };
            if exp >= coeffs.len() {
                coeffs.resize(exp + 1, 0);
            }
            coeffs[exp] = (coeffs[exp] + coeff) % self.p;
        }
        let reduced = pp_rem(coeffs, &self.modulus, self.p);
        Ok(self.make(self.vec_to_enc(&reduced)))
    }

    /// One term: decimal, `w`, `cw`, `w^k`, or `c*w^k`.
    fn parse_term(&self, term: &str) -> Result<(u64, usize)> {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::ParseError("empty term".into()));
        }
        let (coeff_text, w_part) = match term.find('w') {
            None => (term, None),
            Some(i) => (&term[..i], Some(&term[i + 1..])),
        };
        let coeff_text = coeff_text.trim().trim_end_matches('*').trim();
        let coeff = if coeff_text.is_empty() {
            if w_part.is_none() {
                return Err(Error::ParseError(format!("bad term {term:?}")));
            }
            1
        } else {
            coeff_text
                .parse::<u64>()
                .map_err(|_| Error::ParseError(format!("bad coefficient {coeff_text:?}")))?
                % self.p
        };
        let exp = match w_part {
            None => 0,
            Some(rest) => {
                if self.gamma == 1 {
                    return Err(Error::ParseError(
                        "no extension generator 'w' in a prime field".into(),
                    ));
                }
                let rest = rest.trim();
                if rest.is_empty() {
                    1
                } else {
                    let digits = rest
                        .strip_prefix('^')
                        .ok_or_else(|| Error::ParseError(format!("bad term {term:?}")))?
                        .trim();
                    let e: usize = digits
                        .parse()
                        .map_err(|_| Error::ParseError(format!("bad exponent {digits:?}")))?;
                    if e > 1 << 12 {
                        return Err(Error::ParseError(format!("exponent {e} too large")));
                    }
                    e
                }
            }
        };
        Ok((coeff, exp))
    }

    /// Canonical text form: decimal residue for prime fields, otherwise a sum
    /// of `w`-powers from the highest degree down, e.g. "w^2+2w+2".
    pub fn format_elem(&self, a: FieldElem) -> String {
        let enc = self.take(a);
        if self.gamma == 1 {
            return enc.to_string();
        }
        let coeffs = self.enc_to_vec(enc);
        if coeffs.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "w".to_string(),
                (1, c) => format!("{c}w"),
                (i, 1) => format!("w^{i}"),
                (i, c) => format!("{c}w^{i}"),
            });
        }
        parts.join("+")
    }
}

/// Split "a+b-c" into signed terms. A single leading sign is allowed;
/// consecutive or trailing signs are not.
fn split_signed_terms(s: &str) -> Result<Vec<(i32, &str)>> {
    let mut out = Vec::new();
    let mut sign = 1i32;
    let mut start = 0usize;
    for (i, ch) in s.bytes().enumerate() {
        if ch == b'+' || ch == b'-' {
            let piece = s[start..i].trim();
            if piece.is_empty() && i != 0 {
                return Err(Error::ParseError(format!("dangling sign in {s:?}")));
            }
            if !piece.is_empty() {
                out.push((sign, piece));
            }
            sign = if ch == b'-' { -1 } else { 1 };
            start = i + 1;
        }
    }
    let piece = s[start..].trim();
    if piece.is_empty() {
        return Err(Error::ParseError(format!("dangling sign in {s:?}")));
    }
    out.push((sign, piece));
    Ok(out)
}

/// FNV-1a over the defining data; equal fields hash equal.
fn fingerprint(p: u64, gamma: u32, modulus: &[u64]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    let mut eat = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    eat(p);
    eat(gamma as u64);
    for &c in modulus {
        eat(c);
    }
    h
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Lexicographically smallest monic irreducible of the given degree over F_p,
/// comparing coefficient tuples from the constant term upward.
fn smallest_irreducible(p: u64, degree: u32) -> Vec<u64> {
    let d = degree as usize;
    let total = p.pow(degree);
    for idx in 0..total {
        // Decode idx so that the constant term is the most significant digit:
        // lexicographic order on (c_0, c_1, ..., c_{d-1}).
        let mut cand = vec![0u64; d + 1];
        cand[d] = 1;
        let mut rest = idx;
        for i in (0..d).rev() {
            cand[d - 1 - i] = rest / p.pow(i as u32);
            rest %= p.pow(i as u32);
        }
        if pp_is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

// ----- polynomial arithmetic over the prime field F_p -----
//
// Ascending coefficient vectors with trailing zeros trimmed; digits in 0..p.
// Only used for context construction and the large-field fallback, so clarity
// beats speed here.

pub(crate) fn pp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    pp_trim(&mut out);
    out
}

/// Remainder of `a` by monic `f`.
fn pp_rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    pp_trim(&mut a);
    let df = f.len() - 1;
    while a.len() > df {
        let lead = a[a.len() - 1];
        let shift = a.len() - 1 - df;
        if lead != 0 {
            for (i, &fc) in f.iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + (p - fc % p) % p * lead) % p;
            }
        }
        a.pop();
        pp_trim(&mut a);
        if a.len() <= df {
            break;
        }
    }
    pp_trim(&mut a);
    a
}

fn pp_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = pp_rem(base.to_vec(), f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = pp_rem(pp_mul(&acc, &b, p), f, p);
        }
        b = pp_rem(pp_mul(&b, &b, p), f, p);
        e >>= 1;
    }
    acc
}

fn pp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    pp_trim(&mut out);
    out
}

fn pp_monic(mut a: Vec<u64>, p: u64) -> Vec<u64> {
    pp_trim(&mut a);
    if let Some(&lead) = a.last() {
        if lead != 1 {
            let inv = mod_inv(lead, p);
            for c in &mut a {
                *c = *c * inv % p;
            }
        }
    }
    a
}

fn pp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    pp_trim(&mut a);
    pp_trim(&mut b);
    while !b.is_empty() {
        let monic_b = pp_monic(b.clone(), p);
        let r = pp_rem(a, &monic_b, p);
        a = monic_b;
        b = r;
    }
    pp_monic(a, p)
}

/// Inverse of `a` modulo monic irreducible `f`, by the extended Euclid run.
fn pp_inv_mod(a: &[u64], f: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut r0 = f.to_vec();
    let mut r1 = pp_rem(a.to_vec(), f, p);
    let mut t0: Vec<u64> = Vec::new();
    let mut t1 = vec![1u64];
    while !r1.is_empty() {
        let (quot, rem) = pp_divrem(&r0, &r1, p);
        let t2 = pp_sub(&t0, &pp_mul(&quot, &t1, p), p);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    if r0.len() != 1 {
        return None; // gcd not a unit: `a` was zero mod f
    }
    let scale = mod_inv(r0[0], p);
    Some(t0.iter().map(|&c| c * scale % p).collect())
}

fn pp_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut rem = a.to_vec();
    pp_trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    while rem.len() > db {
        let coeff = rem[rem.len() - 1] * lead_inv % p;
        let shift = rem.len() - 1 - db;
        quot[shift] = coeff;
        if coeff != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let idx = shift + i;
                rem[idx] = (rem[idx] + (p - bc * coeff % p)) % p;
            }
        }
        rem.pop();
        pp_trim(&mut rem);
    }
    pp_trim(&mut quot);
    (quot, rem)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: p prime, a nonzero mod p.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Rabin irreducibility test over F_p.
fn pp_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = (f.len() - 1) as u32;
    if d == 0 {
        return false;
    }
    let x = vec![0u64, 1];
    // x^(p^d) == x mod f
    let total = match (p as u128).checked_pow(d) {
        Some(v) if v <= 1 << 40 => v as u64,
        _ => return pp_is_irreducible_trial(f, p),
    };
    if pp_powmod(&x, total, f, p) != pp_rem(x.clone(), f, p) {
        return false;
    }
    for r in prime_factors(d as u64) {
        let e = p.pow(d / r as u32);
        let xe = pp_powmod(&x, e, f, p);
        let diff = pp_sub(&xe, &x, p);
        let g = pp_gcd(&diff, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Trial-division fallback for cardinalities too big for the Rabin exponent;
/// unused at the supported field sizes but keeps the helper total.
fn pp_is_irreducible_trial(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    for deg in 1..=d / 2 {
        let count = p.pow(deg as u32);
        for idx in 0..count {
            let mut cand = vec![0u64; deg + 1];
            cand[deg] = 1;
            let mut rest = idx;
            for c in cand.iter_mut().take(deg) {
                *c = rest % p;
                rest /= p;
            }
            if pp_rem(f.to_vec(), &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}
