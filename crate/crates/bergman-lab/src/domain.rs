//! The integration region (unit disk or annulus) and polar quadrature rules.
//!
//! A rule is a tensor product of a Gaussian radial rule for the measure
//! `r dr` (see [`crate::gauss`]) and the uniform trapezoid rule in the angle,
//! which integrates `e^{i k theta}` exactly for `|k| < n_theta`. Weights
//! carry the full area element, so `integrate` is a plain weighted sum over
//! nodes in ascending index order.

use num_complex::Complex64;

use crate::gauss::radial_rule;
use crate::{Error, Result};

/// The region of integration. The outer radius is always 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Disk,
    Annulus { inner_radius: f64 },
}

impl Domain {
    pub fn disk() -> Self {
        Domain::Disk
    }

    /// An annulus `rho < |z| < 1`; fails unless `0 < rho < 1`.
    pub fn annulus(rho: f64) -> Result<Self> {
        if rho > 0.0 && rho < 1.0 {
            Ok(Domain::Annulus { inner_radius: rho })
        } else {
            Err(Error::InvalidInnerRadius { rho })
        }
    }

    /// Open radial interval `(r_lo, 1)` of the region.
    pub fn radial_interval(&self) -> (f64, f64) {
        match self {
            Domain::Disk => (0.0, 1.0),
            Domain::Annulus { inner_radius } => (*inner_radius, 1.0),
        }
    }

    pub fn inner_radius(&self) -> Option<f64> {
        match self {
            Domain::Disk => None,
            Domain::Annulus { inner_radius } => Some(*inner_radius),
        }
    }

    /// Area of the region: `pi` or `pi (1 - rho^2)`.
    pub fn area(&self) -> f64 {
        match self {
            Domain::Disk => std::f64::consts::PI,
            Domain::Annulus { inner_radius } => {
                std::f64::consts::PI * (1.0 - inner_radius * inner_radius)
            }
        }
    }

    /// Strict interior membership test.
    pub fn contains(&self, z: Complex64) -> bool {
        let r = z.norm();
        let (lo, hi) = self.radial_interval();
        r > lo && r < hi || (matches!(self, Domain::Disk) && r == 0.0)
    }

    pub fn kind_str(&self) -> &'static str {
        match self {
            Domain::Disk => "disk",
            Domain::Annulus { .. } => "annulus",
        }
    }
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Domain::Disk => write!(f, "disk"),
            Domain::Annulus { inner_radius } => write!(f, "annulus:{inner_radius}"),
        }
    }
}

/// Deterministic polar quadrature rule realizing `int_Omega . dA`.
///
/// Node `q = ir * n_theta + it` sits at `(r_ir, theta_it)` with weight
/// `w_ir * 2 pi / n_theta`; the radial weight includes the Jacobian factor.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    domain: Domain,
    n_r: usize,
    n_theta: usize,
    nodes: Vec<(f64, f64)>,
    points: Vec<Complex64>,
    weights: Vec<f64>,
}

/// Build the `(n_r, n_theta)` tensor rule on the given region.
pub fn build_quadrature(domain: &Domain, n_r: usize, n_theta: usize) -> Result<QuadratureRule> {
    if n_r == 0 || n_theta == 0 {
        return Err(Error::InvalidQuadratureOrders { n_r, n_theta });
    }
    let (r_lo, _) = domain.radial_interval();
    let radial = radial_rule(r_lo, n_r);
    let w_theta = std::f64::consts::TAU / n_theta as f64;

    let mut nodes = Vec::with_capacity(n_r * n_theta);
    let mut points = Vec::with_capacity(n_r * n_theta);
    let mut weights = Vec::with_capacity(n_r * n_theta);
    for (r, wr) in radial.nodes.iter().zip(&radial.weights) {
        for it in 0..n_theta {
            let theta = w_theta * it as f64;
            nodes.push((*r, theta));
            points.push(Complex64::from_polar(*r, theta));
            weights.push(wr * w_theta);
        }
    }
    Ok(QuadratureRule {
        domain: *domain,
        n_r,
        n_theta,
        nodes,
        points,
        weights,
    })
}

impl QuadratureRule {
    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.n_r, self.n_theta)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn nodes(&self) -> &[(f64, f64)] {
        &self.nodes
    }

    /// Node positions as complex points `r e^{i theta}`.
    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weighted sum of the integrand over all nodes, in ascending node order.
    ///
    /// Fails if the integrand is not finite at some node, naming the node.
    pub fn integrate<F>(&self, integrand: F) -> Result<Complex64>
    where
        F: Fn(Complex64) -> Complex64,
    {
        let mut acc = Complex64::new(0.0, 0.0);
        for (index, (&z, &w)) in self.points.iter().zip(&self.weights).enumerate() {
            let value = integrand(z);
            if !value.re.is_finite() || !value.im.is_finite() {
                let (r, theta) = self.nodes[index];
                return Err(Error::NonFiniteIntegrand { index, r, theta });
            }
            acc += w * value;
        }
        Ok(acc)
    }
}

/// Result of [`integrate_adaptive`]; `converged == false` means the order cap
/// was reached with the last two values still differing by `err_estimate`.
#[derive(Debug, Clone, Copy)]
pub struct AdaptiveOutcome {
    pub value: Complex64,
    pub err_estimate: f64,
    pub converged: bool,
    /// Orders of the final rule used.
    pub orders: (usize, usize),
}

/// Refine a `(8, 16)` rule by doubling both orders until two successive
/// values differ by less than `tol`, capping at `(1024, 2048)`.
pub fn integrate_adaptive<F>(domain: &Domain, integrand: F, tol: f64) -> Result<AdaptiveOutcome>
where
    F: Fn(Complex64) -> Complex64,
{
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "adaptive tolerance must be positive (got {tol})"
        )));
    }
    const CAP: (usize, usize) = (1024, 2048);
    let (mut n_r, mut n_theta) = (8, 16);
    let mut prev = build_quadrature(domain, n_r, n_theta)?.integrate(&integrand)?;
    loop {
        n_r *= 2;
        n_theta *= 2;
        let value = build_quadrature(domain, n_r, n_theta)?.integrate(&integrand)?;
        let diff = (value - prev).norm();
        if diff < tol {
            return Ok(AdaptiveOutcome {
                value,
                err_estimate: diff,
                converged: true,
                orders: (n_r, n_theta),
            });
        }
        if (n_r, n_theta) >= CAP {
            return Ok(AdaptiveOutcome {
                value,
                err_estimate: diff,
                converged: false,
                orders: (n_r, n_theta),
            });
        }
        prev = value;
    }
}
