//! Dual certificates for cubic graphs.
//!
//! Minimization: with `Lambda = U_{K_{3,3}}` and `Delta = Delta*`, every
//! local view must satisfy `U^v_C + Delta*(U^N_C - U^v_C) - U_{K_{3,3}} >= 0`.
//! After `lam = 1/(1+t)`, `q = r + 3` and a positive rescaling, this slack is
//! a polynomial `S_C(r, t)` whose coefficients are checked to be
//! non-negative.
//!
//! Maximization: `U^v_{K_4} - U^v_C >= 0` for every view, rescaled to a
//! polynomial `D_C(s, t)` with `q = s + max(3, q_C)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::graphs::{oracle, Graph, OracleLimits};
use crate::localstats::{self, LocalQuantities};
use crate::localview::{enumerate_views, LocalView, ViewTable};
use crate::polynomial::{lam, lam_to_t, q, r, s, t, Monomial, Polynomial, RationalFunction, Var};
use crate::rational::{self, Rational};
use crate::{Error, Result};

/// The closed form of `Delta*` as printed, over the denominator
/// `2 (lam^2 + lam + q - 2)^2 Z_{K_{3,3}}`.
fn published_delta_star(z_k33: &Polynomial) -> RationalFunction {
    let l = lam;
    let one = || Polynomial::one();
    let int = Polynomial::int;
    let poly = |coeffs: &[i64]| {
        Polynomial::univariate(Var::Lam, coeffs.iter().map(|&c| rational::int(c)))
    };
    let lm1 = l() - one();
    let qq = q();
    let bracket = &poly(&[13, 27, 22, 9, 1]).scale(&rational::int(2)) * &lm1.pow(6)
        + &poly(&[-1, 2, 1]).scale(&rational::int(2)) * &qq.pow(5)
        + &poly(&[17, -41, 0, 20, 3, 1]) * &qq.pow(4)
        + &(&poly(&[-57, 47, 91, 31, 8]) * &lm1.pow(2)) * &qq.pow(3)
        + &(&poly(&[-95, 22, 146, 82, 25]) * &lm1.pow(3)) * &qq.pow(2)
        + &(&poly(&[-79, -31, 93, 87, 36, 2]) * &lm1.pow(4)) * &qq;
    let num = &(&qq.scale(&rational::int(-3)) * &(one() - l()).pow(2)) * &bracket;
    let tri = l().pow(2) + l() + qq - int(2);
    let den = &tri.pow(2).scale(&rational::int(2)) * z_k33;
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// Shared ingredients of the minimization certificate.
#[derive(Clone, Debug)]
pub struct MinCertifier {
    z_k33: Polynomial,
    /// `lam Z_{K_{3,3}}'`, so that `U_{K_{3,3}} = l_k33 / (6 Z_{K_{3,3}})`.
    l_k33: Polynomial,
    /// `Delta* = p / (Z_{K_{3,3}} m)`.
    p: Polynomial,
    m: Polynomial,
}

impl MinCertifier {
    /// Derives `Delta*` from the equality constraint of `C_1` and checks it
    /// against the published closed form.
    pub fn new() -> Result<Self> {
        let c1 = localstats::local_quantities(&LocalView::monochromatic_boundary(3)?);
        let z_k33 = localstats::z_complete_bipartite(3);
        let l_k33 = &lam() * &z_k33.derivative(Var::Lam);
        // U^v_C1 = A/(2Z), U^N_C1 = B/(6Z), U_K33 = L/(6 Z_K33):
        // Delta* = (3 A Z_K33 - Z L) / (Z_K33 (3A - B)).
        let a3 = c1.uv_num.scale(&rational::int(3));
        let p = &(&a3 * &z_k33) - &(&c1.z * &l_k33);
        let m = &a3 - &c1.un_num;
        let cert = MinCertifier { z_k33, l_k33, p, m };
        if cert.delta_star() != published_delta_star(&cert.z_k33) {
            return Err(Error::DeltaStarMismatch);
        }
        Ok(cert)
    }

    pub fn delta_star(&self) -> RationalFunction {
        RationalFunction::new(self.p.clone(), &self.z_k33 * &self.m).expect("nonzero")
    }

    pub fn u_k33(&self) -> RationalFunction {
        RationalFunction::new(self.l_k33.clone(), self.z_k33.scale(&rational::int(6)))
            .expect("nonzero")
    }

    /// `SLACK(C)` as a rational function in `(lam, q)`.
    pub fn slack(&self, lq: &LocalQuantities) -> RationalFunction {
        let (num, den) = self.slack_parts(lq);
        RationalFunction::new(num, den).expect("nonzero")
    }

    /// `SLACK(C) = N / (6 Z_C Z_{K_{3,3}} m)` with
    /// `N = 3 A Z_K33 m + p (B - 3A) - L Z_C m`.
    fn slack_parts(&self, lq: &LocalQuantities) -> (Polynomial, Polynomial) {
        let a3 = lq.uv_num.scale(&rational::int(3));
        let n = &(&(&a3 * &self.z_k33) * &self.m) + &(&self.p * &(&lq.un_num - &a3))
            - &(&(&self.l_k33 * &lq.z) * &self.m);
        let den = (&(&lq.z * &self.z_k33) * &self.m).scale(&rational::int(6));
        (n, den)
    }

    /// The rescaled slack `S_C(r, t)`.
    pub fn scaled_slack(&self, view: &LocalView) -> Result<Polynomial> {
        if view.degree() != 3 {
            return Err(Error::UnsupportedDegree(view.degree()));
        }
        let lq = localstats::local_quantities(view);
        // Z_K33 Z_C SLACK = N / (6 m)
        let (n, _) = self.slack_parts(&lq);
        let bindings = min_bindings();
        let n = n.substitute(&bindings)?;
        let m = self.m.substitute(&bindings)?;
        let (pre_num, pre_den) = min_prefactor();
        let num = &(&pre_num * n.numerator()) * m.denominator();
        let den = &(&(&pre_den * n.denominator()) * m.numerator()).scale(&rational::int(6));
        num.divide_exact(den)
    }
}

fn min_bindings() -> BTreeMap<Var, RationalFunction> {
    let mut b = BTreeMap::new();
    b.insert(Var::Lam, lam_to_t());
    b.insert(Var::Q, RationalFunction::from(r() + Polynomial::int(3)));
    b
}

/// `4 (1+t)^17 (r(1+t)^2 + t^2 + 3t + 3)^2` over `(3 + r) t^2`.
fn min_prefactor() -> (Polynomial, Polynomial) {
    let one_t = t() + Polynomial::one();
    let mid = &r() * &one_t.pow(2) + t().pow(2) + t().scale(&rational::int(3)) + Polynomial::int(3);
    let num = (&one_t.pow(17) * &mid.pow(2)).scale(&rational::int(4));
    let den = &(r() + Polynomial::int(3)) * &t().pow(2);
    (num, den)
}

/// `2 (1+t)^14` over `t^2`.
fn max_prefactor() -> (Polynomial, Polynomial) {
    let one_t = t() + Polynomial::one();
    (one_t.pow(14).scale(&rational::int(2)), t().pow(2))
}

/// Every factor of the rescaling is positive for `r >= 0`, `t > 0` (and
/// at `r = -1`), which is what lets non-negative coefficients imply the
/// unscaled inequalities.
pub fn prefactors_positive() -> bool {
    let one_t = t() + Polynomial::one();
    let mid = &r() * &one_t.pow(2) + t().pow(2) + t().scale(&rational::int(3)) + Polynomial::int(3);
    let factors = [
        one_t.clone(),
        mid.clone(),
        r() + Polynomial::int(3),
        mid.eval_var(Var::R, &rational::int(-1)),
        Polynomial::one().scale(&rational::int(4)),
    ];
    let nonzero_nonneg = factors.iter().all(|f| {
        let c = f.coeffs_nonneg();
        c.all_nonneg && !c.is_zero
    });
    // each factor has a positive constant term, so it is positive on t > 0
    let constant_terms = factors
        .iter()
        .all(|f| f.coefficient(&Monomial::ONE).is_positive());
    let (max_num, _) = max_prefactor();
    nonzero_nonneg && constant_terms && max_num.coeffs_nonneg().all_nonneg
}

pub fn compute_delta_star() -> Result<RationalFunction> {
    Ok(MinCertifier::new()?.delta_star())
}

pub fn scaled_slack_min(view: &LocalView) -> Result<Polynomial> {
    MinCertifier::new()?.scaled_slack(view)
}

/// Ingredients of the maximization certificate.
#[derive(Clone, Debug)]
pub struct MaxCertifier {
    z_k4: Polynomial,
    a_k4: Polynomial,
}

impl MaxCertifier {
    pub fn new() -> Result<Self> {
        let k4 = localstats::local_quantities(&LocalView::clique(3)?);
        Ok(MaxCertifier {
            z_k4: k4.z,
            a_k4: k4.uv_num,
        })
    }

    /// `U^v_{K_4} - U^v_C` in `(lam, q)`.
    pub fn difference(&self, lq: &LocalQuantities) -> RationalFunction {
        let num = &(&self.a_k4 * &lq.z) - &(&lq.uv_num * &self.z_k4);
        RationalFunction::new(num, (&self.z_k4 * &lq.z).scale(&rational::int(2))).expect("nonzero")
    }

    /// `D_C(s, t) = 2(1+t)^14 Z_K4 Z_C t^{-2} (U^v_K4 - U^v_C)`.
    pub fn scaled_diff(&self, view: &LocalView) -> Result<Polynomial> {
        if view.degree() != 3 {
            return Err(Error::UnsupportedDegree(view.degree()));
        }
        let lq = localstats::local_quantities(view);
        // 2 Z_K4 Z_C (U^v_K4 - U^v_C) = A_K4 Z_C - A_C Z_K4
        let diff = &(&self.a_k4 * &lq.z) - &(&lq.uv_num * &self.z_k4);
        let shift = view.q_c().max(3) as i64;
        let mut bindings = BTreeMap::new();
        bindings.insert(Var::Lam, lam_to_t());
        bindings.insert(Var::Q, RationalFunction::from(s() + Polynomial::int(shift)));
        let diff = diff.substitute(&bindings)?;
        let (pre_num, pre_den) = max_prefactor();
        let num = (&pre_num * diff.numerator()).scale(&(Rational::one() / rational::int(2)));
        let den = &pre_den * diff.denominator();
        num.divide_exact(&den)
    }
}

pub fn scaled_diff_max(view: &LocalView) -> Result<Polynomial> {
    MaxCertifier::new()?.scaled_diff(view)
}

/// Result of scanning one certificate polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    /// 1-based position in the degree-3 view table.
    pub ordinal: usize,
    pub view: LocalView,
    pub poly: Polynomial,
    pub is_zero: bool,
    pub all_nonneg: bool,
    pub negative_witness: Option<(Monomial, Rational)>,
    /// Value at `(r or s, t) = (0, 1)`, positive for every nonzero entry.
    pub strict_witness: Option<Rational>,
}

impl Entry {
    pub fn new(ordinal: usize, view: LocalView, poly: Polynomial) -> Self {
        let mut e = Entry {
            ordinal,
            view,
            poly,
            is_zero: false,
            all_nonneg: false,
            negative_witness: None,
            strict_witness: None,
        };
        e.rescan();
        e
    }

    /// Recomputes the flags from `poly`.
    pub fn rescan(&mut self) {
        let check = self.poly.coeffs_nonneg();
        self.is_zero = check.is_zero;
        self.all_nonneg = check.all_nonneg;
        self.negative_witness = check.witness;
        self.strict_witness = if self.is_zero {
            None
        } else {
            let mut at = BTreeMap::new();
            for v in Var::ALL {
                at.insert(v, if v == Var::T { Rational::one() } else { Rational::zero() });
            }
            self.poly.eval(&at).ok()
        };
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Vec<String>),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    fn from_failures(f: Vec<String>) -> Self {
        if f.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail(f)
        }
    }
}

fn judge_entries(label: &str, entries: &[Entry], zero_set: &[usize], failures: &mut Vec<String>) {
    for e in entries {
        let expect_zero = zero_set.contains(&e.ordinal);
        if e.is_zero != expect_zero {
            failures.push(format!(
                "{label} view {}: expected {} polynomial",
                e.ordinal,
                if expect_zero { "zero" } else { "nonzero" }
            ));
        }
        if let Some((m, c)) = &e.negative_witness {
            failures.push(format!("{label} view {}: negative term {} * {}", e.ordinal, c, MonomialText(m)));
        }
        if !e.is_zero && !e.strict_witness.as_ref().is_some_and(|w| w.is_positive()) {
            failures.push(format!("{label} view {}: not positive at (0, 1)", e.ordinal));
        }
    }
    for &z in zero_set {
        if !entries.iter().any(|e| e.ordinal == z) {
            failures.push(format!("{label}: missing entry for view {z}"));
        }
    }
}

struct MonomialText<'a>(&'a Monomial);

impl core::fmt::Display for MonomialText<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.0.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                f.write_str(v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct MinCertificateReport {
    pub entries: Vec<Entry>,
    /// `S_C(-1, t)` for views with `q_C <= 2`.
    pub q2_entries: Vec<Entry>,
    pub delta_star_identity_verified: bool,
    pub prefactors_positive: bool,
    /// Ordinals of `C_1` and `C_2`.
    pub zero_set: Vec<usize>,
    pub verdict: Verdict,
}

impl MinCertificateReport {
    /// Re-evaluates flags and verdict from the stored polynomials.
    pub fn rejudge(&mut self) {
        let mut failures = Vec::new();
        for e in self.entries.iter_mut().chain(self.q2_entries.iter_mut()) {
            e.rescan();
        }
        if !self.delta_star_identity_verified {
            failures.push(String::from("delta-star mismatch with published form"));
        }
        if !self.prefactors_positive {
            failures.push(String::from("rescaling prefactor not positive"));
        }
        judge_entries("min", &self.entries, &self.zero_set, &mut failures);
        judge_entries("min q=2", &self.q2_entries, &self.zero_set, &mut failures);
        self.verdict = Verdict::from_failures(failures);
    }
}

#[derive(Clone, Debug)]
pub struct MaxCertificateReport {
    pub entries: Vec<Entry>,
    /// `D_C(-1, t)` for views with `q_C <= 2`, i.e. `q = 2`.
    pub q2_entries: Vec<Entry>,
    pub prefactors_positive: bool,
    /// Ordinal of the `K_4` view.
    pub zero_set: Vec<usize>,
    pub verdict: Verdict,
}

impl MaxCertificateReport {
    pub fn rejudge(&mut self) {
        let mut failures = Vec::new();
        for e in self.entries.iter_mut().chain(self.q2_entries.iter_mut()) {
            e.rescan();
        }
        if !self.prefactors_positive {
            failures.push(String::from("rescaling prefactor not positive"));
        }
        judge_entries("max", &self.entries, &self.zero_set, &mut failures);
        judge_entries("max q=2", &self.q2_entries, &self.zero_set, &mut failures);
        self.verdict = Verdict::from_failures(failures);
    }
}

fn ordinal_of(table: &ViewTable, view: &LocalView) -> Result<usize> {
    table
        .position(view)
        .map(|i| i + 1)
        .ok_or_else(|| Error::InconsistentView(format!("{view} missing from table")))
}

/// Builds per-view entries with a caller-supplied map, so that a std
/// caller can run the 35 independent computations in parallel.
pub fn verify_min_certificate_with<F>(map: F) -> Result<MinCertificateReport>
where
    F: FnOnce(&MinCertifier, &[LocalView]) -> Vec<Result<Polynomial>>,
{
    let table = enumerate_views(3)?;
    // construction fails outright on a delta-star mismatch
    let cert = MinCertifier::new()?;
    let polys = map(&cert, table.views());
    let mut entries = Vec::with_capacity(table.len());
    let mut q2_entries = Vec::new();
    for (i, (view, poly)) in table.views().iter().zip(polys).enumerate() {
        let poly = poly?;
        if view.q_c() <= 2 {
            let at = poly.eval_var(Var::R, &rational::int(-1));
            q2_entries.push(Entry::new(i + 1, view.clone(), at));
        }
        entries.push(Entry::new(i + 1, view.clone(), poly));
    }
    let zero_set = alloc::vec![
        ordinal_of(&table, &LocalView::monochromatic_boundary(3)?)?,
        ordinal_of(&table, &LocalView::split_boundary_cubic())?,
    ];
    let mut report = MinCertificateReport {
        entries,
        q2_entries,
        delta_star_identity_verified: true,
        prefactors_positive: prefactors_positive(),
        zero_set,
        verdict: Verdict::Pass,
    };
    report.rejudge();
    Ok(report)
}

pub fn verify_min_certificate() -> Result<MinCertificateReport> {
    verify_min_certificate_with(|cert, views| views.iter().map(|v| cert.scaled_slack(v)).collect())
}

pub fn verify_max_certificate_with<F>(map: F) -> Result<MaxCertificateReport>
where
    F: FnOnce(&MaxCertifier, &[LocalView]) -> Vec<Result<Polynomial>>,
{
    let table = enumerate_views(3)?;
    let cert = MaxCertifier::new()?;
    let polys = map(&cert, table.views());
    let mut entries = Vec::with_capacity(table.len());
    let mut q2_entries = Vec::new();
    for (i, (view, poly)) in table.views().iter().zip(polys).enumerate() {
        let poly = poly?;
        if view.q_c() <= 2 {
            // max(3, q_C) = 3, so q = 2 is s = -1
            let at = poly.eval_var(Var::S, &rational::int(-1));
            q2_entries.push(Entry::new(i + 1, view.clone(), at));
        }
        entries.push(Entry::new(i + 1, view.clone(), poly));
    }
    let zero_set = alloc::vec![ordinal_of(&table, &LocalView::clique(3)?)?];
    let mut report = MaxCertificateReport {
        entries,
        q2_entries,
        prefactors_positive: prefactors_positive(),
        zero_set,
        verdict: Verdict::Pass,
    };
    report.rejudge();
    Ok(report)
}

pub fn verify_max_certificate() -> Result<MaxCertificateReport> {
    verify_max_certificate_with(|cert, views| views.iter().map(|v| cert.scaled_diff(v)).collect())
}

/// True iff every local view seen in `g` under the Potts measure is `C_1`
/// or `C_2`.
pub fn uniqueness_argument_check(g: &Graph, q: u32, lam: &Rational, limits: OracleLimits) -> Result<bool> {
    if g.regular_degree() != Some(3) {
        return Err(Error::NotRegular);
    }
    let c1 = LocalView::monochromatic_boundary(3)?;
    let c2 = LocalView::split_boundary_cubic();
    let dist = oracle::local_view_distribution(g, q, lam, limits)?;
    Ok(dist
        .iter()
        .filter(|(_, p)| !p.is_zero())
        .all(|(v, _)| *v == c1 || *v == c2))
}
