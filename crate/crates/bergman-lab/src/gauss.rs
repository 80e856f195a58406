//! Gaussian quadrature for the radial measure `r dr` on `[r_lo, 1]`.
//!
//! The polar area element contributes a Jacobian factor `r`, so the radial
//! rule is built as a true Gaussian rule with respect to the measure `r dr`:
//! starting from the monic Legendre recurrence mapped to the interval, one
//! Christoffel step multiplies the weight function by `r`, and Golub-Welsch
//! (symmetric tridiagonal eigenproblem) turns the modified recurrence into
//! nodes and weights. An `n`-point rule integrates `r^a` against `r dr`
//! exactly for `a <= 2n - 1`, nodes are strictly interior, and the weights
//! are positive and sum to exactly `integral of r dr` over the interval.

/// Nodes and weights of the radial rule; `sum_j w_j f(r_j) ~ int f(r) r dr`.
pub(crate) struct RadialRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Build the `n`-point Gaussian rule for the measure `r dr` on `[r_lo, 1]`.
///
/// `r_lo` must lie in `[0, 1)`; `n >= 1`.
pub(crate) fn radial_rule(r_lo: f64, n: usize) -> RadialRule {
    assert!(n >= 1, "radial rule needs at least one node");
    assert!((0.0..1.0).contains(&r_lo), "radial interval must sit in [0, 1)");

    // Monic Legendre recurrence on [-1, 1], affinely mapped to [r_lo, 1]:
    // alpha_k stays the midpoint, beta_k scales by the half-width squared.
    let half = (1.0 - r_lo) / 2.0;
    let mid = (1.0 + r_lo) / 2.0;
    // One extra coefficient pair feeds the Christoffel step below.
    let m = n + 1;
    let mut alpha = vec![mid; m];
    let mut beta = vec![0.0; m];
    beta[0] = 1.0 - r_lo; // total mass of the flat weight on the interval
    for k in 1..m {
        let kf = k as f64;
        beta[k] = half * half * kf * kf / (4.0 * kf * kf - 1.0);
    }

    // Christoffel step: multiply the weight function by (r - 0). With the
    // monic Jacobi matrix J, factor J = L U (unit lower / upper bidiagonal)
    // and form U L; the product's diagonals are the modified recurrence.
    let mut u = vec![0.0; m];
    let mut l = vec![0.0; m - 1];
    u[0] = alpha[0];
    for k in 0..m - 1 {
        l[k] = beta[k + 1] / u[k];
        u[k + 1] = alpha[k + 1] - l[k];
    }
    let mass = beta[0] * u[0]; // = int r dr over [r_lo, 1]
    for k in 0..n {
        alpha[k] = u[k] + l[k];
    }
    for k in 1..n {
        beta[k] = u[k] * l[k - 1];
    }
    beta[0] = mass;

    golub_welsch(&alpha[..n], &beta[..n])
}

/// Nodes = eigenvalues of the symmetric tridiagonal matrix with diagonal
/// `alpha` and off-diagonal `sqrt(beta[k])`; weight_j = beta[0] * q_j^2 where
/// q_j is the first component of the normalized eigenvector.
fn golub_welsch(alpha: &[f64], beta: &[f64]) -> RadialRule {
    let n = alpha.len();
    let mut diag = alpha.to_vec();
    let mut off = vec![0.0; n];
    for k in 1..n {
        off[k - 1] = beta[k].sqrt();
    }
    let mut first = vec![0.0; n];
    first[0] = 1.0;

    tridiag_ql(&mut diag, &mut off, &mut first);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| diag[a].total_cmp(&diag[b]));
    let nodes: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let weights: Vec<f64> = order.iter().map(|&i| beta[0] * first[i] * first[i]).collect();
    RadialRule { nodes, weights }
}

/// Implicit-shift QL for a symmetric tridiagonal matrix, accumulating only
/// the first row of the eigenvector matrix (all Golub-Welsch needs).
/// `d` holds the diagonal (in: matrix, out: eigenvalues); `e` the
/// off-diagonal in `e[0..n-1]`; `z` the tracked row.
fn tridiag_ql(d: &mut [f64], e: &mut [f64], z: &mut [f64]) {
    let n = d.len();
    if n == 1 {
        return;
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 50, "tridiagonal QL failed to converge");

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Negligible rotation: deflate and restart this eigenvalue.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                let f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}
