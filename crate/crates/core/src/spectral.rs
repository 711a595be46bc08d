//! Dense symmetric eigensolver (cyclic Jacobi) and the spectral bounds.

use alloc::vec;
use alloc::vec::Vec;

use libm::{fabs, log, sqrt};

use crate::error::{Error, Reason, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::report::{BoundReport, Certificate};

/// Off-diagonal Frobenius norm at which Jacobi sweeps stop (relative to the
/// matrix norm when that exceeds one).
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;
/// Eigenvalues below this magnitude are treated as zero.
pub const ZERO_EIGENVALUE: f64 = 1e-9;
pub const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition of a real symmetric matrix.
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    n: usize,
    /// Descending.
    pub values: Vec<f64>,
    /// Row-major; column `i` is the unit eigenvector of `values[i]`.
    pub vectors: Vec<f64>,
    /// `max_i ‖A v_i - λ_i v_i‖∞`.
    pub residual: f64,
}

impl SymmetricEigen {
    pub fn vector(&self, i: usize) -> Vec<f64> {
        (0..self.n).map(|r| self.vectors[r * self.n + i]).collect()
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    sqrt(s)
}

/// Full spectrum of the row-major symmetric `n × n` matrix.
pub fn symmetric_eigen(matrix: &[f64], n: usize) -> Result<SymmetricEigen> {
    if n == 0 || matrix.len() != n * n {
        return Err(Error::OutOfRange {
            what: "matrix order",
            value: n as i64,
        });
    }
    let scale = sqrt(matrix.iter().map(|x| x * x).sum::<f64>()).max(1.0);
    for p in 0..n {
        for q in p + 1..n {
            if fabs(matrix[p * n + q] - matrix[q * n + p]) > 1e-12 * scale {
                return Err(Error::NonSymmetric);
            }
        }
    }
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let mut sweeps = 0;
    while off_diagonal_norm(&a, n) > OFF_DIAGONAL_TOLERANCE * scale {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (fabs(theta) + sqrt(theta * theta + 1.0));
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values: Vec<f64> = idx.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (col, &i) in idx.iter().enumerate() {
        for r in 0..n {
            vectors[r * n + col] = v[r * n + i];
        }
    }
    let mut residual: f64 = 0.0;
    for (col, &lambda) in values.iter().enumerate() {
        for r in 0..n {
            let av: f64 = (0..n)
                .map(|k| matrix[r * n + k] * vectors[k * n + col])
                .sum();
            residual = residual.max(fabs(av - lambda * vectors[r * n + col]));
        }
    }
    Ok(SymmetricEigen {
        n,
        values,
        vectors,
        residual,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralSummary {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    pub residual: f64,
    /// Second largest `|λ|`, reported for regular graphs.
    pub lambda_second_abs: Option<f64>,
    pub degree: Option<usize>,
}

/// Eigenvalues of an arbitrary symmetric matrix.
pub fn symmetric_eigenvalues(matrix: &[f64], n: usize) -> Result<SpectralSummary> {
    let e = symmetric_eigen(matrix, n)?;
    Ok(SpectralSummary {
        eigenvalues: e.values,
        residual: e.residual,
        lambda_second_abs: None,
        degree: None,
    })
}

fn second_largest_abs(values: &[f64]) -> Option<f64> {
    let mut abs: Vec<f64> = values.iter().map(|x| fabs(*x)).collect();
    abs.sort_by(|a, b| b.total_cmp(a));
    abs.get(1).copied()
}

/// Adjacency spectrum; `λ` is filled in when the graph is regular.
pub fn graph_spectrum(g: &Graph) -> Result<SpectralSummary> {
    let mut s = symmetric_eigenvalues(&g.adjacency_matrix(), g.order())?;
    s.degree = g.regular_degree();
    if s.degree.is_some() {
        s.lambda_second_abs = second_largest_abs(&s.eigenvalues);
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteSpectralSummary {
    /// Eigenvalues of `M Mᵀ`, descending.
    pub gram_eigenvalues: Vec<f64>,
    pub lambda_prime: Option<f64>,
    pub residual: f64,
}

pub fn bipartite_spectrum(gb: &BipartiteGraph) -> Result<BipartiteSpectralSummary> {
    let (na, nb) = (gb.n_a(), gb.n_b());
    let m = gb.incidence_matrix();
    let mut gram = vec![0.0; na * na];
    for i in 0..na {
        for j in 0..na {
            gram[i * na + j] = (0..nb).map(|b| m[i * nb + b] * m[j * nb + b]).sum();
        }
    }
    let e = symmetric_eigen(&gram, na)?;
    Ok(BipartiteSpectralSummary {
        lambda_prime: e.values.get(1).copied(),
        gram_eigenvalues: e.values,
        residual: e.residual,
    })
}

/// `(k²/λ²) / ln(1 + k²/λ²) · (n-k-1) / (2n)`.
pub fn spectral_formula(n: usize, k: usize, lambda: f64) -> f64 {
    let ratio = (k * k) as f64 / (lambda * lambda);
    ratio / log(1.0 + ratio) * (n - k - 1) as f64 / (2.0 * n as f64)
}

/// Spectral lower bound for connected regular non-complete graphs, using the
/// measured second largest absolute eigenvalue.
pub fn bound_spectral(g: &Graph) -> Result<BoundReport> {
    if !g.is_connected() {
        return Err(Reason::Disconnected.into());
    }
    let k = g.regular_degree().ok_or(Reason::NotRegular)?;
    if g.is_complete() {
        return Err(Reason::CompleteGraph.into());
    }
    let s = graph_spectrum(g)?;
    let lambda = s.lambda_second_abs.expect("regular graph with n >= 2");
    if lambda < ZERO_EIGENVALUE {
        return Err(Reason::ZeroEigenvalue.into());
    }
    Ok(BoundReport::real(
        "spectral",
        spectral_formula(g.order(), k, lambda),
        Certificate::Eigenvalue {
            name: "lambda",
            value: lambda,
        },
    ))
}

/// Secondary eigenvalue of a strongly regular graph with degree `k`, `a`
/// common neighbours per edge and `c` per non-edge: the root of
/// `x² + (c-a)x + (c-k)` of largest magnitude.
pub fn srg_secondary(k: usize, a: usize, c: usize) -> Result<f64> {
    if c == 0 || c > k || a + 1 >= k {
        return Err(Reason::InvalidParameters.into());
    }
    let b = c as f64 - a as f64;
    let c0 = c as f64 - k as f64;
    let disc = b * b - 4.0 * c0;
    if disc < 0.0 {
        return Err(Reason::InvalidParameters.into());
    }
    let r1 = (-b + sqrt(disc)) / 2.0;
    let r2 = (-b - sqrt(disc)) / 2.0;
    Ok(fabs(r1).max(fabs(r2)))
}

/// `k²x / (λ² + (k²-λ²) x / n)`: Tanner's lower bound on `|N'(X)|` for `|X| = x`.
pub fn tanner_formula(k: usize, lambda_sq: f64, n: usize, x: usize) -> f64 {
    let k2 = (k * k) as f64;
    k2 * x as f64 / (lambda_sq + (k2 - lambda_sq) * x as f64 / n as f64)
}

/// Tanner's bound for a `k`-regular graph.
pub fn tanner_lb(g: &Graph, x_size: usize) -> Result<f64> {
    let k = g.regular_degree().ok_or(Reason::NotRegular)?;
    let lambda = graph_spectrum(g)?.lambda_second_abs.expect("regular");
    Ok(tanner_formula(k, lambda * lambda, g.order(), x_size))
}

/// Tanner's bound for `X ⊆ A` in a `k`-regular balanced bipartite graph:
/// `k²x / (λ' + (k²-λ')·2x/n)` with `n` the total vertex count.
pub fn tanner_lb_bipartite(gb: &BipartiteGraph, x_size: usize) -> Result<f64> {
    if !gb.is_balanced() {
        return Err(Reason::Unbalanced.into());
    }
    let k = gb.regular_degree().ok_or(Reason::NotRegular)?;
    let lp = bipartite_spectrum(gb)?.lambda_prime.unwrap_or(0.0);
    Ok(tanner_formula(k, lp, gb.n_a() + gb.n_b(), 2 * x_size) / 2.0)
}

/// `k / (4 √λ')` for balanced `k`-regular bipartite graphs with `λ' ≠ 0`.
pub fn bound_bipartite_spectral(gb: &BipartiteGraph) -> Result<BoundReport> {
    if !gb.is_balanced() {
        return Err(Reason::Unbalanced.into());
    }
    let k = gb.regular_degree().ok_or(Reason::NotRegular)?;
    let lp = bipartite_spectrum(gb)?.lambda_prime.unwrap_or(0.0);
    if fabs(lp) < ZERO_EIGENVALUE {
        return Err(Reason::ZeroEigenvalue.into());
    }
    Ok(BoundReport::real(
        "bipartite_spectral",
        k as f64 / (4.0 * sqrt(lp)),
        Certificate::Eigenvalue {
            name: "lambda_prime",
            value: lp,
        },
    )
    .with_note("stated with equality in the source; applied as a lower bound"))
}

/// The spectral formula with `λ = 2√(k-1)`: the typical value for random
/// `k`-regular graphs, not a certified bound for any particular graph.
pub fn reference_random_regular_curve(n: usize, k: usize) -> Result<f64> {
    if k < 3 || k + 1 > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
        });
    }
    Ok(spectral_formula(n, k, 2.0 * sqrt((k - 1) as f64)))
}
