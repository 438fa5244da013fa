//! Adjacency spectra, eigenvalue multiplicities (numeric and exact),
//! Perron vectors, and the interlacing certificate.
//!
//! The numeric path carries a backward-stability contract: each returned
//! eigenvalue is within `tol` of a true eigenvalue of the adjacency
//! matrix. The exact path never computes full spectra; it answers
//! multiplicity questions at a rational target by rational rank.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cert::{sig15, BoundCertificate, StatementId};
use crate::eigen;
use crate::error::{Error, Result};
use crate::exact::{self, Rat, RationalMatrix};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumMode {
    Exact,
    Numeric,
}

/// Numeric spectrum: all n adjacency eigenvalues, sorted non-increasing,
/// with the clustering tolerance used to group equal values.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub mode: SpectrumMode,
    pub values: Vec<f64>,
    pub cluster_tol: f64,
}

impl Spectrum {
    pub fn lambda1(&self) -> f64 {
        self.values[0]
    }

    pub fn lambda2(&self) -> Option<f64> {
        self.values.get(1).copied()
    }

    /// Group the sorted values at gaps larger than `cluster_tol`;
    /// returns (representative value, count) per cluster.
    pub fn clusters(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((rep, count)) if (*rep - v).abs() <= self.cluster_tol => {
                    *count += 1;
                }
                _ => out.push((v, 1)),
            }
        }
        out
    }

    fn check_invariants(&self, n: usize) -> Result<()> {
        if self.values.len() != n {
            return Err(Error::Verification("spectrum length mismatch".into()));
        }
        if self.values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Verification("spectrum not sorted".into()));
        }
        let sum: f64 = self.values.iter().sum();
        if sum.abs() > 2.0 * n as f64 * self.cluster_tol.max(1e-12) {
            return Err(Error::Verification(format!(
                "trace check failed: eigenvalue sum {sum}"
            )));
        }
        Ok(())
    }
}

/// Default clustering tolerance, scaled to the spectral radius.
pub fn default_cluster_tol(lambda1: f64) -> f64 {
    1e-9 * lambda1.abs().max(1.0)
}

/// All eigenvalues of the adjacency matrix. Exact mode is not served
/// here (only multiplicities at rational targets are available exactly);
/// requesting it is a capability error.
pub fn spectrum(g: &Graph, mode: SpectrumMode, tol: Option<f64>) -> Result<Spectrum> {
    match mode {
        SpectrumMode::Exact => Err(Error::Capability(
            "exact mode serves multiplicity at a rational target only; full exact spectra are not provided".into(),
        )),
        SpectrumMode::Numeric => spectrum_numeric(g, tol),
    }
}

pub fn spectrum_numeric(g: &Graph, tol: Option<f64>) -> Result<Spectrum> {
    if g.n() == 0 {
        return Err(Error::Structure("spectrum of an empty graph".into()));
    }
    if let Some(t) = tol {
        if t <= 0.0 {
            return Err(Error::Parameter("tolerance must be positive".into()));
        }
    }
    let values = eigen::sym_eigen(&g.adjacency_f64(), g.n(), false).values;
    let cluster_tol = tol.unwrap_or_else(|| default_cluster_tol(values[0]));
    let s = Spectrum {
        mode: SpectrumMode::Numeric,
        values,
        cluster_tol,
    };
    s.check_invariants(g.n())?;
    Ok(s)
}

/// Numeric multiplicity: the number of eigenvalues within `tol` of `lam`.
/// If the hits split into more than one cluster (two distinct eigenvalues
/// both inside the window) the count is ambiguous and the error reports
/// every cluster's count.
pub fn multiplicity_numeric(g: &Graph, lam: f64, tol: f64) -> Result<usize> {
    let spec = spectrum_numeric(g, None)?;
    let hits: Vec<f64> = spec
        .values
        .iter()
        .copied()
        .filter(|v| (v - lam).abs() <= tol)
        .collect();
    if hits.is_empty() {
        return Ok(0);
    }
    let mut counts = vec![1usize];
    for w in hits.windows(2) {
        if (w[0] - w[1]).abs() > spec.cluster_tol {
            counts.push(1);
        } else {
            *counts.last_mut().unwrap() += 1;
        }
    }
    if counts.len() > 1 {
        return Err(Error::AmbiguousMultiplicity { lambda: lam, counts });
    }
    Ok(counts[0])
}

/// Exact multiplicity of a rational eigenvalue target:
/// n - rank(A - lam I) over the rationals.
pub fn multiplicity_exact(g: &Graph, lam: &Rat) -> usize {
    let n = g.n();
    let shifted =
        RationalMatrix::adjacency(g).sub(&RationalMatrix::identity(n).scale(lam));
    n - exact::rank(&shifted)
}

/// Eigenvalue target for multiplicity queries: exact rational or numeric.
#[derive(Clone, Debug)]
pub enum LambdaTarget {
    Exact(Rat),
    Numeric(f64),
}

impl LambdaTarget {
    pub fn value(&self) -> f64 {
        match self {
            LambdaTarget::Exact(r) => exact::rat_to_f64(r),
            LambdaTarget::Numeric(x) => *x,
        }
    }
}

pub fn multiplicity_at(g: &Graph, lam: &LambdaTarget, tol: f64) -> Result<usize> {
    match lam {
        LambdaTarget::Exact(r) => Ok(multiplicity_exact(g, r)),
        LambdaTarget::Numeric(x) => multiplicity_numeric(g, *x, tol),
    }
}

/// Unit Perron vector of a connected graph: all entries positive,
/// residual ||A x - lambda1 x|| at most `tol`.
pub fn perron_vector(g: &Graph, tol: f64) -> Result<Vec<f64>> {
    if g.n() == 0 {
        return Err(Error::Structure("perron_vector of an empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Structure("perron_vector needs a connected graph".into()));
    }
    let n = g.n();
    let a = g.adjacency_f64();
    let e = eigen::sym_eigen(&a, n, true);
    let lam = e.values[0];
    let mut x = e.vectors.unwrap().swap_remove(0);
    let sum: f64 = x.iter().sum();
    if sum < 0.0 {
        for v in &mut x {
            *v = -*v;
        }
    }
    if x.iter().any(|&v| v <= 0.0) {
        return Err(Error::Verification(
            "Perron vector has a nonpositive entry; input may be disconnected".into(),
        ));
    }
    let mut res = 0.0;
    for i in 0..n {
        let mut ax = 0.0;
        for j in 0..n {
            ax += a[i * n + j] * x[j];
        }
        res += (ax - lam * x[i]).powi(2);
    }
    if res.sqrt() > tol {
        return Err(Error::Verification(format!(
            "Perron residual {} exceeds tolerance {tol}",
            res.sqrt()
        )));
    }
    Ok(x)
}

/// Interlacing certificate for vertex deletion: deleting the set s can
/// change the multiplicity of any eigenvalue by at most |s| in either
/// direction. Records both multiplicities and checks both inequalities.
pub fn interlacing_check(
    g: &Graph,
    s_mask: u64,
    lam: &LambdaTarget,
    tol: f64,
) -> Result<BoundCertificate> {
    if g.n() == 0 {
        return Err(Error::Structure("interlacing_check on an empty graph".into()));
    }
    let s_mask = s_mask & g.full_mask();
    let s_size = s_mask.count_ones() as usize;
    let (rest, _) = g.without_vertices(s_mask);

    let m_g = multiplicity_at(g, lam, tol)?;
    let m_rest = if rest.n() == 0 {
        0
    } else {
        multiplicity_at(&rest, lam, tol)?
    };

    let holds = m_rest + s_size >= m_g && m_g + s_size >= m_rest;
    let mut computed = BTreeMap::new();
    computed.insert("lambda".into(), sig15(lam.value()));
    computed.insert("m_graph".into(), m_g.to_string());
    computed.insert("m_deleted".into(), m_rest.to_string());
    computed.insert("s_size".into(), s_size.to_string());
    let inputs = serde_json::json!({
        "graph": g.to_text(),
        "s": (0..g.n()).filter(|v| (s_mask >> v) & 1 == 1).collect::<Vec<_>>(),
        "mode": match lam { LambdaTarget::Exact(_) => "exact", LambdaTarget::Numeric(_) => "numeric" },
    });
    Ok(BoundCertificate::new(
        StatementId::Interlacing,
        inputs,
        computed,
        true,
        holds,
    ))
}
