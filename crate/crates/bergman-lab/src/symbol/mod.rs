//! Quasi-polynomial symbols: finite sums of terms `c * z^m * zbar^n * r^a * log(r)^p`.
//!
//! The term algebra is closed under products, so powers of a symbol and
//! products like `u * phi^n` stay representable. Symbols are kept canonical:
//! terms sorted by `(z_pow, zbar_pow, r_pow, log_pow)`, equal signatures
//! merged, zero coefficients dropped. The [`std::fmt::Display`] impl prints
//! the same grammar the parser accepts, and printing a canonical symbol and
//! reparsing it reproduces the term list exactly.

mod parse;

use num_complex::Complex64;

use crate::domain::Domain;
use crate::{Error, Result};

/// One term `coeff * z^m * zbar^n * r^a * log(r)^p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    /// Power of `z`.
    pub z_pow: u32,
    /// Power of `zbar`.
    pub zbar_pow: u32,
    /// Real power of `r = |z|`.
    pub r_pow: f64,
    /// Power of `log r`.
    pub log_pow: u32,
}

impl Term {
    pub fn new(coeff: Complex64, z_pow: u32, zbar_pow: u32, r_pow: f64, log_pow: u32) -> Self {
        Term { coeff, z_pow, zbar_pow, r_pow, log_pow }
    }

    /// Basis-index shift `m - n` contributed by the angular part.
    pub fn angular_mode(&self) -> i64 {
        self.z_pow as i64 - self.zbar_pow as i64
    }

    /// Total radial exponent `m + n + a`.
    pub fn radial_exponent(&self) -> f64 {
        self.z_pow as f64 + self.zbar_pow as f64 + self.r_pow
    }

    fn signature(&self) -> (u32, u32, u64, u32) {
        (self.z_pow, self.zbar_pow, self.r_pow.to_bits(), self.log_pow)
    }

    fn cmp_signature(&self, other: &Term) -> std::cmp::Ordering {
        (self.z_pow, self.zbar_pow)
            .cmp(&(other.z_pow, other.zbar_pow))
            .then(self.r_pow.total_cmp(&other.r_pow))
            .then(self.log_pow.cmp(&other.log_pow))
    }
}

/// A finite, canonical sum of [`Term`]s. The empty sum is the zero function.
#[derive(Debug, Clone, PartialEq)]
pub struct Symbol {
    terms: Vec<Term>,
}

/// Structural properties of a symbol relative to a target domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassificationFlags {
    pub analytic: bool,
    pub conjugate_analytic: bool,
    pub radial: bool,
    pub harmonic: bool,
    pub constant: bool,
    /// Bounded on the given domain. Log factors and negative radial powers
    /// blow up at the disk's center; everything in the grammar is bounded on
    /// an annulus.
    pub bounded: bool,
}

/// Angular Fourier profiles `psi_j(r)`, with
/// `psi(r e^{i theta}) = sum_j psi_j(r) e^{i j theta}`.
#[derive(Debug, Clone)]
pub struct FourierProfiles {
    pub j_min: i64,
    pub j_max: i64,
    pub radii: Vec<f64>,
    /// `values[j - j_min][i] = psi_j(radii[i])`.
    pub values: Vec<Vec<Complex64>>,
}

impl FourierProfiles {
    pub fn profile(&self, j: i64) -> Option<&[Complex64]> {
        if j < self.j_min || j > self.j_max {
            return None;
        }
        Some(&self.values[(j - self.j_min) as usize])
    }

    /// Re-sum the profiles at `(radii[r_index], theta)`.
    pub fn reconstruct(&self, r_index: usize, theta: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (row, values) in self.values.iter().enumerate() {
            let j = self.j_min + row as i64;
            acc += values[r_index] * Complex64::from_polar(1.0, j as f64 * theta);
        }
        acc
    }

    /// Modes `j` whose profile is not identically below `tol` in magnitude.
    pub fn support(&self, tol: f64) -> Vec<i64> {
        let mut out = Vec::new();
        for (row, values) in self.values.iter().enumerate() {
            if values.iter().any(|v| v.norm() > tol) {
                out.push(self.j_min + row as i64);
            }
        }
        out
    }
}

impl Symbol {
    /// The zero function.
    pub fn zero() -> Self {
        Symbol { terms: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Symbol::from_terms(vec![Term::new(c, 0, 0, 0.0, 0)])
    }

    pub fn one() -> Self {
        Symbol::constant(Complex64::new(1.0, 0.0))
    }

    /// The coordinate symbol `z`.
    pub fn z() -> Self {
        Symbol::monomial(1, 0)
    }

    /// The conjugate coordinate `zbar`.
    pub fn zbar() -> Self {
        Symbol::monomial(0, 1)
    }

    /// `z^m * zbar^n` with unit coefficient.
    pub fn monomial(z_pow: u32, zbar_pow: u32) -> Self {
        Symbol::from_terms(vec![Term::new(
            Complex64::new(1.0, 0.0),
            z_pow,
            zbar_pow,
            0.0,
            0,
        )])
    }

    /// `log r`.
    pub fn log_r() -> Self {
        Symbol::from_terms(vec![Term::new(Complex64::new(1.0, 0.0), 0, 0, 0.0, 1)])
    }

    /// `r^a`.
    pub fn r_power(a: f64) -> Self {
        Symbol::from_terms(vec![Term::new(Complex64::new(1.0, 0.0), 0, 0, a, 0)])
    }

    /// Canonicalize a term list: sort by signature, merge, drop zeros.
    pub fn from_terms(mut terms: Vec<Term>) -> Self {
        terms.sort_by(Term::cmp_signature);
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.signature() == t.signature() => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != Complex64::new(0.0, 0.0));
        Symbol { terms: merged }
    }

    /// Parse a symbol in the grammar
    /// `term (('+'|'-') term)*` with
    /// `term = [coeff '*'] factor ('*' factor)*` or a bare coefficient, and
    /// `factor = z[^int] | zbar[^int] | r^float | log(r)[^int]`.
    pub fn parse(text: &str) -> Result<Self> {
        parse::parse_symbol(text)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluate at a point. Fails at `z = 0` when any term carries a
    /// negative radial power or a log factor.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let r = z.norm();
        if r == 0.0 && self.terms.iter().any(|t| t.r_pow < 0.0 || t.log_pow > 0) {
            return Err(Error::SingularAtOrigin);
        }
        let log_r = if r > 0.0 { r.ln() } else { 0.0 };
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            let mut v = t.coeff;
            if t.z_pow > 0 {
                v *= z.powu(t.z_pow);
            }
            if t.zbar_pow > 0 {
                v *= z.conj().powu(t.zbar_pow);
            }
            if t.r_pow != 0.0 {
                v *= r.powf(t.r_pow);
            }
            if t.log_pow > 0 {
                v *= log_r.powi(t.log_pow as i32);
            }
            acc += v;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Symbol) -> Symbol {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Symbol::from_terms(terms)
    }

    pub fn sub(&self, other: &Symbol) -> Symbol {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> Symbol {
        Symbol::from_terms(
            self.terms
                .iter()
                .map(|t| Term { coeff: c * t.coeff, ..*t })
                .collect(),
        )
    }

    /// Termwise product: coefficients multiply, exponents add.
    pub fn multiply(&self, other: &Symbol) -> Symbol {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term::new(
                    a.coeff * b.coeff,
                    a.z_pow + b.z_pow,
                    a.zbar_pow + b.zbar_pow,
                    a.r_pow + b.r_pow,
                    a.log_pow + b.log_pow,
                ));
            }
        }
        Symbol::from_terms(terms)
    }

    /// Repeated multiplication; `power(0)` is the constant 1.
    pub fn power(&self, n: usize) -> Symbol {
        let mut acc = Symbol::one();
        for _ in 0..n {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Complex conjugate: swaps `z` and `zbar` powers.
    pub fn conj(&self) -> Symbol {
        Symbol::from_terms(
            self.terms
                .iter()
                .map(|t| Term::new(t.coeff.conj(), t.zbar_pow, t.z_pow, t.r_pow, t.log_pow))
                .collect(),
        )
    }

    /// Max `|m - n|` over terms: how far the symbol shifts basis indices.
    pub fn angular_bandwidth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.angular_mode().unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Every term integrable against `dA` on the domain.
    pub fn integrable_on(&self, domain: &Domain) -> bool {
        match domain {
            Domain::Disk => self.terms.iter().all(|t| t.radial_exponent() > -2.0),
            Domain::Annulus { .. } => true,
        }
    }

    pub fn classify(&self, domain: &Domain) -> ClassificationFlags {
        let analytic = self
            .terms
            .iter()
            .all(|t| t.zbar_pow == 0 && t.r_pow == 0.0 && t.log_pow == 0);
        let conjugate_analytic = self
            .terms
            .iter()
            .all(|t| t.z_pow == 0 && t.r_pow == 0.0 && t.log_pow == 0);
        let radial = self.terms.iter().all(|t| t.z_pow == t.zbar_pow);
        let harmonic = self.terms.iter().all(|t| {
            let analytic_monomial = t.zbar_pow == 0 && t.r_pow == 0.0 && t.log_pow == 0;
            let conj_monomial = t.z_pow == 0 && t.r_pow == 0.0 && t.log_pow == 0;
            let log_term = t.z_pow == 0 && t.zbar_pow == 0 && t.r_pow == 0.0 && t.log_pow == 1;
            analytic_monomial || conj_monomial || log_term
        });
        let constant = self
            .terms
            .iter()
            .all(|t| t.z_pow == 0 && t.zbar_pow == 0 && t.r_pow == 0.0 && t.log_pow == 0);
        let bounded = match domain {
            Domain::Disk => self.terms.iter().all(|t| t.r_pow >= 0.0 && t.log_pow == 0),
            Domain::Annulus { .. } => true,
        };
        ClassificationFlags {
            analytic,
            conjugate_analytic,
            radial,
            harmonic,
            constant,
            bounded,
        }
    }

    /// Angular Fourier profiles over `j_min..=j_max` at the given radii.
    ///
    /// A term contributes `c * r^{m+n+a} (log r)^p` to mode `j = m - n`.
    /// Radii must be positive (log factors and negative powers are singular
    /// at 0).
    pub fn fourier_profiles(
        &self,
        j_min: i64,
        j_max: i64,
        radii: &[f64],
    ) -> Result<FourierProfiles> {
        if j_min > j_max {
            return Err(Error::InvalidArgument(format!(
                "empty mode range {j_min}..{j_max}"
            )));
        }
        if radii.iter().any(|&r| !(r > 0.0)) {
            return Err(Error::InvalidArgument(
                "fourier profile radii must be positive".into(),
            ));
        }
        let rows = (j_max - j_min + 1) as usize;
        let mut values = vec![vec![Complex64::new(0.0, 0.0); radii.len()]; rows];
        for t in &self.terms {
            let j = t.angular_mode();
            if j < j_min || j > j_max {
                continue;
            }
            let row = &mut values[(j - j_min) as usize];
            let exponent = t.radial_exponent();
            for (i, &r) in radii.iter().enumerate() {
                row[i] += t.coeff * r.powf(exponent) * r.ln().powi(t.log_pow as i32);
            }
        }
        Ok(FourierProfiles {
            j_min,
            j_max,
            radii: radii.to_vec(),
            values,
        })
    }
}

fn write_factors(
    f: &mut std::fmt::Formatter<'_>,
    t: &Term,
    after_coeff: bool,
) -> std::fmt::Result {
    let mut need_star = after_coeff;
    let mut sep = |f: &mut std::fmt::Formatter<'_>, need: &mut bool| -> std::fmt::Result {
        if *need {
            write!(f, "*")?;
        }
        *need = true;
        Ok(())
    };
    if t.z_pow > 0 {
        sep(f, &mut need_star)?;
        if t.z_pow == 1 {
            write!(f, "z")?;
        } else {
            write!(f, "z^{}", t.z_pow)?;
        }
    }
    if t.zbar_pow > 0 {
        sep(f, &mut need_star)?;
        if t.zbar_pow == 1 {
            write!(f, "zbar")?;
        } else {
            write!(f, "zbar^{}", t.zbar_pow)?;
        }
    }
    if t.r_pow != 0.0 {
        sep(f, &mut need_star)?;
        write!(f, "r^{}", t.r_pow)?;
    }
    if t.log_pow > 0 {
        sep(f, &mut need_star)?;
        if t.log_pow == 1 {
            write!(f, "log(r)")?;
        } else {
            write!(f, "log(r)^{}", t.log_pow)?;
        }
    }
    Ok(())
}

impl std::fmt::Display for Symbol {
    /// Canonical printing in the parser's grammar, terms in signature order.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let first = i == 0;
            let has_factors = t.z_pow > 0 || t.zbar_pow > 0 || t.r_pow != 0.0 || t.log_pow > 0;
            let c = t.coeff;
            if c.im == 0.0 {
                // Real coefficient: fold the sign into the separator.
                match (first, c.re < 0.0) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                let mag = c.re.abs();
                if !has_factors {
                    write!(f, "{mag}")?;
                } else if mag != 1.0 {
                    write!(f, "{mag}")?;
                }
                write_factors(f, t, has_factors && mag != 1.0)?;
            } else if c.re == 0.0 {
                // Pure imaginary coefficient: `bi` form.
                match (first, c.im < 0.0) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                write!(f, "{}i", c.im.abs())?;
                if has_factors {
                    write!(f, "*")?;
                }
                write_factors(f, t, false)?;
            } else {
                // General complex coefficient: parenthesized `(re+imi)`.
                if !first {
                    write!(f, " + ")?;
                }
                write!(
                    f,
                    "({}{}{}i)",
                    c.re,
                    if c.im < 0.0 { "-" } else { "+" },
                    c.im.abs()
                )?;
                if has_factors {
                    write!(f, "*")?;
                }
                write_factors(f, t, false)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn canonicalization_merges_and_drops() {
        let s = Symbol::from_terms(vec![
            Term::new(c(1.0, 0.0), 1, 0, 0.0, 0),
            Term::new(c(2.0, 0.0), 1, 0, 0.0, 0),
            Term::new(c(-3.0, 0.0), 0, 1, 0.0, 0),
            Term::new(c(3.0, 0.0), 0, 1, 0.0, 0),
        ]);
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s.terms()[0].coeff, c(3.0, 0.0));
    }

    #[test]
    fn difference_of_equal_symbols_is_zero() {
        let s = Symbol::parse("z^2 + log(r)").unwrap();
        assert!(s.sub(&s).is_zero());
        assert_eq!(s.sub(&s).to_string(), "0");
    }

    #[test]
    fn eval_basic_points() {
        let z = c(0.3, 0.4);
        assert_eq!(Symbol::z().eval(z).unwrap(), z);
        let s = Symbol::parse("z*zbar").unwrap();
        assert!((s.eval(c(0.5, 0.0)).unwrap() - c(0.25, 0.0)).norm() < 1e-15);
        let lg = Symbol::log_r();
        assert!((lg.eval(c(0.5, 0.0)).unwrap().re - 0.5f64.ln()).abs() < 1e-15);
        assert!((lg.eval(c(0.5, 0.0)).unwrap().re + 0.6931472).abs() < 1e-7);
    }

    #[test]
    fn eval_singular_at_origin() {
        assert!(matches!(
            Symbol::log_r().eval(c(0.0, 0.0)),
            Err(Error::SingularAtOrigin)
        ));
        assert!(matches!(
            Symbol::r_power(-0.5).eval(c(0.0, 0.0)),
            Err(Error::SingularAtOrigin)
        ));
        // Plain monomials and nonnegative powers are fine at 0.
        assert_eq!(Symbol::z().eval(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert_eq!(Symbol::r_power(2.0).eval(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert_eq!(Symbol::one().eval(c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn multiply_adds_exponents() {
        let p = Symbol::z().multiply(&Symbol::zbar());
        assert_eq!(p.terms().len(), 1);
        assert_eq!((p.terms()[0].z_pow, p.terms()[0].zbar_pow), (1, 1));

        assert_eq!(Symbol::z().power(2), Symbol::monomial(2, 0));

        let log2 = Symbol::log_r().multiply(&Symbol::log_r());
        assert_eq!(log2.terms()[0].log_pow, 2);
    }

    #[test]
    fn power_zero_is_one() {
        assert_eq!(Symbol::parse("z + zbar").unwrap().power(0), Symbol::one());
    }

    #[test]
    fn conj_swaps_powers() {
        let s = Symbol::parse("(1+2i)*z^2*zbar").unwrap();
        let sc = s.conj();
        let t = sc.terms()[0];
        assert_eq!((t.z_pow, t.zbar_pow), (1, 2));
        assert_eq!(t.coeff, c(1.0, -2.0));
        assert_eq!(sc.conj(), s);
    }

    #[test]
    fn classify_examples() {
        let disk = Domain::disk();
        let ann = Domain::annulus(0.5).unwrap();

        let f = Symbol::monomial(2, 0).classify(&disk);
        assert!(f.analytic && f.harmonic && !f.radial && !f.constant && f.bounded);

        let f = Symbol::log_r().classify(&ann);
        assert!(f.radial && f.harmonic && !f.analytic && !f.conjugate_analytic && f.bounded);
        assert!(!Symbol::log_r().classify(&disk).bounded);

        let f = Symbol::parse("z*zbar").unwrap().classify(&disk);
        assert!(f.radial && !f.harmonic && !f.analytic && f.bounded);

        let f = Symbol::constant(c(2.0, 1.0)).classify(&disk);
        assert!(f.constant && f.analytic && f.conjugate_analytic && f.radial && f.harmonic);

        assert!(Symbol::zero().classify(&disk).constant);

        assert!(!Symbol::r_power(-0.5).classify(&disk).bounded);
        assert!(Symbol::r_power(0.5).classify(&disk).bounded);
        assert!(Symbol::r_power(-0.5).classify(&ann).bounded);
    }

    #[test]
    fn integrability_on_disk() {
        let disk = Domain::disk();
        let ann = Domain::annulus(0.5).unwrap();
        assert!(Symbol::r_power(-1.5).integrable_on(&disk));
        assert!(!Symbol::r_power(-2.0).integrable_on(&disk));
        assert!(Symbol::r_power(-2.0).integrable_on(&ann));
        // z * r^-2.5 has m+n+a = -1.5 > -2.
        assert!(Symbol::parse("r^-2.5*z").unwrap().integrable_on(&disk));
    }

    #[test]
    fn fourier_profile_modes() {
        let radii = [0.25, 0.5, 0.75];
        let p = Symbol::z().fourier_profiles(-2, 2, &radii).unwrap();
        assert_eq!(p.support(0.0), vec![1]);
        for (i, &r) in radii.iter().enumerate() {
            assert!((p.profile(1).unwrap()[i] - c(r, 0.0)).norm() < 1e-15);
        }

        // z^2 zbar contributes r^3 to mode 1.
        let p = Symbol::parse("z^2*zbar")
            .unwrap()
            .fourier_profiles(-3, 3, &radii)
            .unwrap();
        assert_eq!(p.support(0.0), vec![1]);
        for (i, &r) in radii.iter().enumerate() {
            assert!((p.profile(1).unwrap()[i] - c(r.powi(3), 0.0)).norm() < 1e-15);
        }

        let p = Symbol::log_r().fourier_profiles(-1, 1, &radii).unwrap();
        assert_eq!(p.support(0.0), vec![0]);
    }

    #[test]
    fn fourier_reconstruction_matches_eval() {
        let s = Symbol::parse("(1+2i)*z^2*zbar + log(r) + r^0.5*zbar^3").unwrap();
        let radii = [0.3, 0.6, 0.9];
        let p = s.fourier_profiles(-5, 5, &radii).unwrap();
        for (i, &r) in radii.iter().enumerate() {
            for k in 0..7 {
                let theta = 0.9 * k as f64;
                let z = Complex64::from_polar(r, theta);
                let direct = s.eval(z).unwrap();
                let summed = p.reconstruct(i, theta);
                assert!(
                    (direct - summed).norm() < 1e-12,
                    "r={r} theta={theta}: {direct} vs {summed}"
                );
            }
        }
    }

    #[test]
    fn radial_iff_fourier_support_is_zero_mode() {
        let radii = [0.4, 0.8];
        for text in ["z*zbar", "log(r)", "r^0.5", "z", "z+zbar", "z^2*zbar"] {
            let s = Symbol::parse(text).unwrap();
            let radial = s.classify(&Domain::disk()).radial;
            let support = s.fourier_profiles(-4, 4, &radii).unwrap().support(1e-14);
            assert_eq!(
                radial,
                support.iter().all(|&j| j == 0),
                "disagreement for {text}"
            );
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Symbol::zero().to_string(), "0");
        assert_eq!(Symbol::one().to_string(), "1");
        assert_eq!(Symbol::parse("z^2").unwrap().to_string(), "z^2");
        assert_eq!(Symbol::parse("2*z + 5").unwrap().to_string(), "5 + 2*z");
        assert_eq!(Symbol::parse("z - zbar").unwrap().to_string(), "-zbar + z");
        assert_eq!(
            Symbol::parse("(1+2i)*z*zbar^3 + log(r)").unwrap().to_string(),
            "log(r) + (1+2i)*z*zbar^3"
        );
        assert_eq!(Symbol::parse("r^0.5*z").unwrap().to_string(), "z*r^0.5");
        assert_eq!(Symbol::parse("-2i*z").unwrap().to_string(), "-2i*z");
    }

    // Random canonical symbols for round-trip checks.
    fn arb_term() -> impl Strategy<Value = Term> {
        (
            (-4i32..=4, -4i32..=4),
            0u32..=3,
            0u32..=3,
            prop_oneof![Just(0.0f64), Just(0.5), Just(-1.5), Just(2.0)],
            0u32..=2,
        )
            .prop_map(|((re, im), m, n, a, p)| {
                Term::new(c(re as f64 * 0.5, im as f64 * 0.25), m, n, a, p)
            })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(terms in proptest::collection::vec(arb_term(), 0..6)) {
            let s = Symbol::from_terms(terms);
            let printed = s.to_string();
            let back = Symbol::parse(&printed).unwrap();
            prop_assert_eq!(back, s);
        }

        #[test]
        fn eval_of_product_is_product_of_evals(
            ta in proptest::collection::vec(arb_term(), 0..4),
            tb in proptest::collection::vec(arb_term(), 0..4),
            re in 0.1f64..0.7,
            im in 0.1f64..0.7,
        ) {
            let a = Symbol::from_terms(ta);
            let b = Symbol::from_terms(tb);
            let z = c(re, im);
            let lhs = a.multiply(&b).eval(z).unwrap();
            let rhs = a.eval(z).unwrap() * b.eval(z).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-10 * (1.0 + rhs.norm()));
        }

        #[test]
        fn powers_preserve_analyticity(
            terms in proptest::collection::vec(arb_term(), 0..4),
            n in 1usize..4,
        ) {
            let s = Symbol::from_terms(terms);
            let disk = Domain::disk();
            prop_assert_eq!(
                s.power(n).classify(&disk).analytic,
                s.classify(&disk).analytic
            );
        }
    }
}
