//! Exact rational matrix kernel: fraction-free rank, LDL' positive
//! semidefiniteness certificates, nullspace bases, and big-integer walk
//! counting. Everything here is exact; there is no floating-point path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Rat = BigRational;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse an exact rational from `p/q` or plain integer text.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rat::new(parse_int(p)?, q))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let n = r.numer();
    let d = r.denom();
    // desk-scale rationals; fall back to string parsing for huge values
    match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
        (Ok(a), Ok(b)) => a / b,
        _ => f64::NAN,
    }
}

/// Dense matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn ones(n: usize) -> Self {
        RationalMatrix {
            rows: n,
            cols: n,
            data: vec![Rat::one(); n * n],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Exact 0/1 adjacency matrix of a graph.
    pub fn adjacency(g: &Graph) -> Self {
        Self::from_fn(g.n(), g.n(), |i, j| {
            if g.has_edge(i, j) {
                Rat::one()
            } else {
                Rat::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// x' M x, exact.
    pub fn quadratic_form(&self, x: &[Rat]) -> Rat {
        assert_eq!(self.rows, self.cols);
        assert_eq!(x.len(), self.rows);
        let mut acc = Rat::zero();
        for i in 0..self.rows {
            if x[i].is_zero() {
                continue;
            }
            let mut row = Rat::zero();
            for j in 0..self.cols {
                if !x[j].is_zero() {
                    row += self.get(i, j) * &x[j];
                }
            }
            acc += &x[i] * row;
        }
        acc
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(rat_to_f64).collect()
    }

    /// Entries as exact fraction strings, row-major grid.
    pub fn to_fraction_grid(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| rat_to_string(self.get(i, j))).collect())
            .collect()
    }

    /// Clear denominators row by row; preserves the row space and hence
    /// the rank.
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    lcm = num_integer::lcm(lcm, self.get(i, j).denom().clone());
                }
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect()
    }
}

/// Exact rank over the rationals via fraction-free (Bareiss) elimination
/// on the denominator-cleared integer matrix.
pub fn rank(m: &RationalMatrix) -> usize {
    bigint_rank(m.to_integer_rows())
}

fn bigint_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        for i in row + 1..rows {
            for j in col + 1..cols {
                let num = &a[row][col] * &a[i][j] - &a[i][col] * &a[row][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss exact division");
                a[i][j] = num / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        row += 1;
    }
    row
}

/// Outcome of the exact LDL' positive-semidefiniteness check.
///
/// A PSD verdict carries the pivot sequence (with the symmetric
/// permutation that produced it); a negative verdict carries an exact
/// vector x with x' M x < 0 together with that value.
#[derive(Clone, Debug)]
pub struct PsdCertificate {
    pub is_psd: bool,
    pub permutation: Vec<usize>,
    pub pivots: Vec<Rat>,
    pub witness: Option<Vec<Rat>>,
    pub witness_value: Option<Rat>,
}

/// Exact LDL' with symmetric pivoting on the largest nonnegative
/// diagonal entry. A negative diagonal anywhere in a Schur complement
/// certifies non-PSD immediately (Schur complements of PSD matrices are
/// PSD); an all-zero diagonal with a nonzero off-diagonal entry does too.
pub fn psd_certificate(m: &RationalMatrix) -> Result<PsdCertificate> {
    if !m.is_symmetric() {
        return Err(Error::Parameter("psd_certificate needs a symmetric matrix".into()));
    }
    let n = m.rows();
    let mut w = m.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut permutation = Vec::new();
    let mut pivots = Vec::new();
    // elimination history for witness back-substitution:
    // (pivot index, pivot value, row of (index, entry) over then-active indices)
    let mut history: Vec<(usize, Rat, Vec<(usize, Rat)>)> = Vec::new();

    let finish_negative =
        |m: &RationalMatrix,
         history: &[(usize, Rat, Vec<(usize, Rat)>)],
         seed: Vec<(usize, Rat)>,
         permutation: Vec<usize>,
         pivots: Vec<Rat>|
         -> Result<PsdCertificate> {
            let mut x = vec![Rat::zero(); m.rows()];
            for (i, v) in seed {
                x[i] = v;
            }
            for (p, d, row) in history.iter().rev() {
                let mut s = Rat::zero();
                for (j, coef) in row {
                    if !x[*j].is_zero() {
                        s += coef * &x[*j];
                    }
                }
                x[*p] = -s / d;
            }
            let value = m.quadratic_form(&x);
            if !value.is_negative() {
                return Err(Error::Verification(
                    "internal: non-PSD witness failed its exact check".into(),
                ));
            }
            Ok(PsdCertificate {
                is_psd: false,
                permutation,
                pivots,
                witness: Some(x),
                witness_value: Some(value),
            })
        };

    while !active.is_empty() {
        // any negative diagonal certifies non-PSD right away
        if let Some(&i) = active.iter().find(|&&i| w.get(i, i).is_negative()) {
            return finish_negative(
                m,
                &history,
                vec![(i, Rat::one())],
                permutation,
                pivots,
            );
        }
        // largest positive diagonal becomes the pivot
        let mut best: Option<usize> = None;
        for &i in &active {
            if w.get(i, i).is_positive()
                && best.map_or(true, |b| w.get(i, i) > w.get(b, b))
            {
                best = Some(i);
            }
        }
        let Some(p) = best else {
            // all remaining diagonals are zero; PSD iff the block is zero
            for (ai, &i) in active.iter().enumerate() {
                for &j in &active[ai + 1..] {
                    let c = w.get(i, j);
                    if !c.is_zero() {
                        let sgn = if c.is_positive() {
                            -Rat::one()
                        } else {
                            Rat::one()
                        };
                        return finish_negative(
                            m,
                            &history,
                            vec![(i, Rat::one()), (j, sgn)],
                            permutation,
                            pivots,
                        );
                    }
                }
            }
            break;
        };

        let d = w.get(p, p).clone();
        active.retain(|&i| i != p);
        let row: Vec<(usize, Rat)> = active
            .iter()
            .map(|&j| (j, w.get(p, j).clone()))
            .collect();
        for &i in &active {
            for &j in &active {
                if j < i {
                    continue;
                }
                let upd = w.get(i, j) - w.get(i, p) * w.get(p, j) / &d;
                w.set(i, j, upd.clone());
                w.set(j, i, upd);
            }
        }
        permutation.push(p);
        pivots.push(d.clone());
        history.push((p, d, row));
    }

    // remaining active indices correspond to exact zero pivots
    for &i in &active {
        permutation.push(i);
        pivots.push(Rat::zero());
    }
    Ok(PsdCertificate {
        is_psd: true,
        permutation,
        pivots,
        witness: None,
        witness_value: None,
    })
}

/// Basis of the exact nullspace, via rational Gauss-Jordan.
pub fn nullspace(m: &RationalMatrix) -> Vec<Vec<Rat>> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<Rat>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).clone()).collect())
        .collect();

    let mut pivot_col_of_row = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x /= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let sub = &a[r][j] * &f;
                    a[i][j] -= sub;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }

    let pivot_cols: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Nullspace dimension of (a - lam I) and whether that nullspace meets
/// the hyperplane orthogonal to the all-ones vector nontrivially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneMeet {
    pub dim_nullspace: usize,
    pub meets_ones_perp: bool,
}

pub fn eigenspace_meets_hyperplane(a: &RationalMatrix, lam: &Rat) -> Result<HyperplaneMeet> {
    if !a.is_symmetric() {
        return Err(Error::Parameter(
            "eigenspace_meets_hyperplane needs a symmetric matrix".into(),
        ));
    }
    let n = a.rows();
    let shifted = a.sub(&RationalMatrix::identity(n).scale(lam));
    let basis = nullspace(&shifted);
    let dim = basis.len();
    // the hyperplane has codimension 1: a >= 2 dimensional nullspace always
    // meets it; a 1-dimensional one meets it iff its spanning vector sums to 0
    let meets = match dim {
        0 => false,
        1 => basis[0].iter().fold(Rat::zero(), |s, x| s + x).is_zero(),
        _ => true,
    };
    Ok(HyperplaneMeet {
        dim_nullspace: dim,
        meets_ones_perp: meets,
    })
}

// -- big-integer walk counting ---------------------------------------------

pub fn adjacency_bigint(g: &Graph) -> Vec<Vec<BigInt>> {
    let n = g.n();
    let mut a = vec![vec![BigInt::zero(); n]; n];
    for u in 0..n {
        for v in g.neighbors(u) {
            a[u][v] = BigInt::one();
        }
    }
    a
}

pub fn bigint_mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut c = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    c[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    c
}

/// A^e by repeated squaring (e >= 1).
pub fn bigint_mat_pow(a: &[Vec<BigInt>], e: usize) -> Vec<Vec<BigInt>> {
    assert!(e >= 1);
    let mut result: Option<Vec<Vec<BigInt>>> = None;
    let mut base = a.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => bigint_mat_mul(&r, &base),
            });
        }
        e >>= 1;
        if e > 0 {
            base = bigint_mat_mul(&base, &base);
        }
    }
    result.unwrap()
}

pub fn bigint_trace(a: &[Vec<BigInt>]) -> BigInt {
    a.iter()
        .enumerate()
        .fold(BigInt::zero(), |s, (i, row)| s + &row[i])
}

pub fn bigint_to_f64(x: &BigInt) -> f64 {
    x.to_string().parse::<f64>().unwrap_or(f64::NAN)
}
