//! Dense symmetric eigensolver (cyclic Jacobi rotations).
//!
//! The matrices here are tiny (adjacency and Gram matrices at desk scale),
//! so Jacobi is the right tool: simple, unconditionally convergent on
//! symmetric input, and backward stable.

/// Eigendecomposition of a symmetric matrix, eigenvalues sorted
/// non-increasing. `vectors[k]` is the unit eigenvector for `values[k]`,
/// sign-fixed so its first coordinate of magnitude > 1e-8 is positive.
#[derive(Clone, Debug)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<Vec<f64>>>,
}

/// Eigenvalues (and optionally eigenvectors) of a symmetric matrix given
/// as a flat row-major n x n slice.
pub fn sym_eigen(a: &[f64], n: usize, want_vectors: bool) -> SymEigen {
    assert_eq!(a.len(), n * n, "matrix shape mismatch");
    if n == 0 {
        return SymEigen {
            values: vec![],
            vectors: want_vectors.then(Vec::new),
        };
    }

    let mut m = a.to_vec();
    let mut v = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        Some(id)
    } else {
        None
    };

    let fro: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let stop = 1e-14 * fro.max(1.0);
    const MAX_SWEEPS: usize = 100;

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += m[p * n + q].abs();
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq.abs() <= stop / (n * n) as f64 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // tangent of the rotation angle, smaller root for stability
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                if let Some(vm) = v.as_mut() {
                    for k in 0..n {
                        let vkp = vm[k * n + p];
                        let vkq = vm[k * n + q];
                        vm[k * n + p] = c * vkp - s * vkq;
                        vm[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        m[j * n + j]
            .partial_cmp(&m[i * n + i])
            .unwrap_or(std::cmp::Ordering::Equal)
    });

    let values: Vec<f64> = order.iter().map(|&i| m[i * n + i]).collect();
    let vectors = v.map(|vm| {
        order
            .iter()
            .map(|&col| {
                let mut vec: Vec<f64> = (0..n).map(|row| vm[row * n + col]).collect();
                if let Some(first) = vec.iter().find(|x| x.abs() > 1e-8) {
                    if *first < 0.0 {
                        for x in &mut vec {
                            *x = -*x;
                        }
                    }
                }
                vec
            })
            .collect()
    });

    SymEigen { values, vectors }
}

/// Largest eigenvalue of a symmetric matrix; 0.0 for the empty matrix
/// (the convention the subgraph checkers rely on for empty vertex sets).
pub fn lambda_max(a: &[f64], n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    sym_eigen(a, n, false).values[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn complete_graph_spectrum() {
        let g = Graph::complete(4).unwrap();
        let e = sym_eigen(&g.adjacency_f64(), 4, false);
        let want = [3.0, -1.0, -1.0, -1.0];
        for (v, w) in e.values.iter().zip(want) {
            assert_close(*v, w, 1e-12);
        }
    }

    #[test]
    fn eigenvectors_reconstruct() {
        let g = Graph::petersen();
        let n = g.n();
        let a = g.adjacency_f64();
        let e = sym_eigen(&a, n, true);
        let vs = e.vectors.unwrap();
        for (k, lam) in e.values.iter().enumerate() {
            let x = &vs[k];
            // residual ||A x - lam x||
            let mut res = 0.0;
            for i in 0..n {
                let mut ax = 0.0;
                for j in 0..n {
                    ax += a[i * n + j] * x[j];
                }
                res += (ax - lam * x[i]).powi(2);
            }
            assert!(res.sqrt() < 1e-10, "residual {} at {}", res.sqrt(), lam);
        }
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(lambda_max(&[], 0), 0.0);
    }
}
