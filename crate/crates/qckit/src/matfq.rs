//! Dense matrices over GF(q): circulants, exact elimination, row spaces,
//! kernels, and the Gram matrices of the three inner products.
//!
//! Elimination is exact — field arithmetic has no rounding — so rank,
//! membership, and kernel computations are decision procedures, not
//! approximations. Everything here is the "oracle side" of the library: the
//! polynomial criteria in [`crate::qccode`] are checked against these
//! matrices in tests and debug assertions.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::polyring::RingElem;

/// Dense row-major matrix over a finite field.
#[derive(Clone)]
pub struct MatFq {
    ctx: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PartialEq for MatFq {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.id() == other.ctx.id()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for MatFq {}

impl fmt::Debug for MatFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatFq {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.ctx.format_elem(self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl MatFq {
    /// All-zero matrix.
    pub fn zeros(ctx: &Arc<FieldCtx>, rows: usize, cols: usize) -> MatFq {
        MatFq {
            ctx: Arc::clone(ctx),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Identity matrix.
    pub fn identity(ctx: &Arc<FieldCtx>, n: usize) -> MatFq {
        let mut m = MatFq::zeros(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from rows of field elements; rows must have equal lengths.
    pub fn from_rows(ctx: &Arc<FieldCtx>, rows: &[Vec<FieldElem>]) -> Result<MatFq> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    left: cols,
                    right: row.len(),
                });
            }
            for &e in row {
                data.push(ctx.take(e));
            }
        }
        Ok(MatFq {
            ctx: Arc::clone(ctx),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub(crate) fn from_enc_rows(ctx: &Arc<FieldCtx>, rows: Vec<Vec<u32>>, cols: usize) -> MatFq {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            debug_assert_eq!(row.len(), cols);
            data.extend_from_slice(&row);
        }
        MatFq {
            ctx: Arc::clone(ctx),
            rows: nrows,
            cols,
            data,
        }
    }

    /// The first `nrows` rows of the full circulant of k: row i is the
    /// coefficient vector of x^i * k in R, so row 0 holds k's coefficients
    /// and each later row is the cyclic right shift of the one above.
    pub fn circulant(k: &RingElem, nrows: usize) -> Result<MatFq> {
        let m = k.m();
        if nrows > m {
            return Err(Error::RowCountOutOfRange { nrows, m });
        }
        let base = k.encs_padded();
        let ctx = Arc::clone(k.ctx());
        let mut data = Vec::with_capacity(nrows * m);
        for i in 0..nrows {
            for j in 0..m {
                // entry (i, j) = coefficient (j - i) mod m of k
                data.push(base[(j + m - i) % m]);
            }
        }
        Ok(MatFq {
            ctx,
            rows: nrows,
            cols: m,
            data,
        })
    }

    /// Field context.
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    /// Row count.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Column count.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry (i, j).
    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.ctx.elem_from_enc(self.data[i * self.cols + j])
    }

    /// Set entry (i, j).
    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.data[i * self.cols + j] = self.ctx.take(v);
    }

    /// Row i as field elements.
    pub fn row(&self, i: usize) -> Vec<FieldElem> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub(crate) fn row_encs(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// True if every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    fn same_field(&self, other: &MatFq) {
        assert!(
            self.ctx.id() == other.ctx.id(),
            "context mismatch: matrices over different fields"
        );
    }

    /// Stack vertically: self above other.
    pub fn vcat(&self, other: &MatFq) -> Result<MatFq> {
        self.same_field(other);
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vcat needs equal column counts ({} vs {})",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatFq {
            ctx: Arc::clone(&self.ctx),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Concatenate horizontally: self left of other.
    pub fn hcat(&self, other: &MatFq) -> Result<MatFq> {
        self.same_field(other);
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hcat needs equal row counts ({} vs {})",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row_encs(i));
            data.extend_from_slice(other.row_encs(i));
        }
        Ok(MatFq {
            ctx: Arc::clone(&self.ctx),
            rows: self.rows,
            cols,
            data,
        })
    }

    /// Transpose.
    pub fn transpose(&self) -> MatFq {
        let mut data = vec![0u32; self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        MatFq {
            ctx: Arc::clone(&self.ctx),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Matrix product self * other.
    pub fn matmul(&self, other: &MatFq) -> Result<MatFq> {
        self.same_field(other);
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "matmul needs inner dimensions to agree ({} vs {})",
                self.cols, other.rows
            )));
        }
        let mut out = MatFq::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let orow = other.row_encs(k);
                let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (slot, &b) in out_row.iter_mut().zip(orow) {
                    if b != 0 {
                        *slot = self.ctx.add_enc(*slot, self.ctx.mul_enc(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise conjugation over a quadratic extension.
    pub fn conj(&self) -> Result<MatFq> {
        let s = self.ctx.conj_exponent()?;
        let data = self
            .data
            .iter()
            .map(|&e| self.ctx.pow_enc(e, s))
            .collect();
        Ok(MatFq {
            ctx: Arc::clone(&self.ctx),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form: pivots 1 with zeroed columns, pivot columns
    /// strictly increasing top to bottom, zero rows at the bottom.
    /// Returns (rref, rank, pivot columns).
    fn rref(&self) -> (MatFq, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.data[i * m.cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(r * m.cols + j, pr * m.cols + j);
                }
            }
            let inv = m
                .ctx
                .inv_enc(m.data[r * m.cols + c])
                .expect("pivot entry is nonzero");
            for j in c..m.cols {
                m.data[r * m.cols + j] = m.ctx.mul_enc(m.data[r * m.cols + j], inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.data[i * m.cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let sub = m.ctx.mul_enc(m.data[r * m.cols + j], factor);
                    m.data[i * m.cols + j] = m.ctx.sub_enc(m.data[i * m.cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Row-space basis in reduced row echelon form, zero rows dropped.
    pub fn rref_basis(&self) -> MatFq {
        let (m, rank, _) = self.rref();
        MatFq {
            ctx: Arc::clone(&self.ctx),
            rows: rank,
            cols: self.cols,
            data: m.data[..rank * self.cols].to_vec(),
        }
    }

    /// True iff v lies in the row space.
    pub fn contains(&self, v: &[FieldElem]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        let enc: Vec<u32> = v.iter().map(|&e| self.ctx.take(e)).collect();
        Ok(self.reduces_to_zero(&enc))
    }

    pub(crate) fn contains_encs(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length must match columns");
        self.reduces_to_zero(v)
    }

    fn reduces_to_zero(&self, v: &[u32]) -> bool {
        // reduce against the RREF basis; pivot entries there are 1
        let (basis, rank, pivots) = self.rref();
        let mut w = v.to_vec();
        for (row, &pc) in pivots.iter().enumerate().take(rank) {
            let factor = w[pc];
            if factor == 0 {
                continue;
            }
            for j in pc..self.cols {
                let sub = self.ctx.mul_enc(basis.data[row * self.cols + j], factor);
                w[j] = self.ctx.sub_enc(w[j], sub);
            }
        }
        w.iter().all(|&e| e == 0)
    }

    /// True iff every row of other lies in self's row space.
    pub fn contains_row_space(&self, other: &MatFq) -> Result<bool> {
        self.same_field(other);
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "row spaces live in different ambient dimensions ({} vs {})",
                self.cols, other.cols
            )));
        }
        let (basis, rank, pivots) = self.rref();
        for i in 0..other.rows {
            let mut w = other.row_encs(i).to_vec();
            for (row, &pc) in pivots.iter().enumerate().take(rank) {
                let factor = w[pc];
                if factor == 0 {
                    continue;
                }
                for j in pc..self.cols {
                    let sub = self.ctx.mul_enc(basis.data[row * self.cols + j], factor);
                    w[j] = self.ctx.sub_enc(w[j], sub);
                }
            }
            if w.iter().any(|&e| e != 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis (as rows) of the right kernel {x : self x^T = 0}.
    pub fn kernel_basis(&self) -> MatFq {
        let (rref, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u32; self.cols];
            v[fc] = 1;
            for (row, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = self.ctx.neg_enc(rref.data[row * self.cols + fc]);
            }
            rows.push(v);
        }
        MatFq::from_enc_rows(&self.ctx, rows, self.cols)
    }

    /// Gram matrix of the Euclidean inner product: self * self^T.
    pub fn gram_euclidean(&self) -> MatFq {
        self.matmul(&self.transpose()).expect("shapes agree")
    }

    /// Gram matrix of the Hermitian inner product: self^[q] * self^T,
    /// conjugating the left factor entrywise.
    pub fn gram_hermitian(&self) -> Result<MatFq> {
        Ok(self.conj()?.matmul(&self.transpose()).expect("shapes agree"))
    }

    /// Gram matrix of the symplectic form: self * Omega * self^T, where
    /// Omega = [[0, I], [-I, 0]] in the block layout (left half | right half).
    pub fn gram_symplectic(&self) -> Result<MatFq> {
        let om = omega(&self.ctx, self.cols)?;
        Ok(self
            .matmul(&om)
            .expect("shapes agree")
            .matmul(&self.transpose())
            .expect("shapes agree"))
    }
}

/// The symplectic form matrix Omega = [[0, I], [-I, 0]] of size cols x cols.
pub fn omega(ctx: &Arc<FieldCtx>, cols: usize) -> Result<MatFq> {
    if cols % 2 != 0 {
        return Err(Error::OddColumns { cols });
    }
    let w = cols / 2;
    let mut m = MatFq::zeros(ctx, cols, cols);
    for i in 0..w {
        m.data[i * cols + (w + i)] = 1;
        m.data[(w + i) * cols + i] = ctx.neg_enc(1);
    }
    Ok(m)
}
