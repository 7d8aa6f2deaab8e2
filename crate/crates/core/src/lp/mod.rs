//! Local-view linear programs at concrete `(q, lam)`.
//!
//! Variables are probabilities `p_C` over the admissible views (`q_C <= q`).
//! The objective is `sum p_C U^v_C`. Rows: the simplex row, the energy row
//! `sum p_C (U^v_C - U^N_C) = 0`, and optionally one histogram row
//! `sum p_C (gamma^{v,S}_C - gamma^{N,S}_C) = 0` per partition `S` of `d`
//! into at most `q` parts.

pub mod simplex;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::graphs::{oracle, Graph, OracleLimits};
use crate::localstats::{self, energy_weight, q_partitions, LocalCounts, QPartition};
use crate::localview::{enumerate_views_bounded, LocalView, ViewTable};
use crate::polynomial::{point, Var};
use crate::rational::{self, Rational};
use crate::{Error, Result};

pub use simplex::{solve_standard, StandardSolution, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintSet {
    EnergyOnly,
    QPartitions,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowKind {
    Simplex,
    Energy,
    Gamma(QPartition),
}

impl RowKind {
    pub fn name(&self) -> String {
        match self {
            RowKind::Simplex => String::from("simplex"),
            RowKind::Energy => String::from("energy"),
            RowKind::Gamma(s) => format!("gamma{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub kind: RowKind,
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

#[derive(Clone, Debug)]
pub struct LPInstance {
    pub degree: usize,
    pub q: u32,
    pub lam: Rational,
    pub sense: Sense,
    pub constraint_set: ConstraintSet,
    /// 1-based ordinals into the view table the instance was built from.
    pub ordinals: Vec<usize>,
    pub views: Vec<LocalView>,
    pub objective: Vec<Rational>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPSolution {
    pub status: Status,
    pub optimum: Rational,
    /// Ordinal -> probability, nonzero entries only.
    pub distribution: BTreeMap<usize, Rational>,
    /// One value per row, in row order.
    pub dual_values: Vec<Rational>,
    pub redundant_rows: Vec<usize>,
    pub pivots: usize,
}

/// Per-view count tables for one degree, reusable across `(q, lam)`.
#[derive(Clone, Debug)]
pub struct LpBuilder {
    table: ViewTable,
    counts: Vec<LocalCounts>,
}

impl LpBuilder {
    /// Views with at most `max_colors` boundary colors; `view_budget` caps
    /// the table size.
    pub fn new(d: usize, max_colors: Option<usize>, view_budget: Option<usize>) -> Result<Self> {
        if !(2..=5).contains(&d) {
            return Err(Error::UnsupportedDegree(d));
        }
        let table = enumerate_views_bounded(d, max_colors, view_budget)?;
        Ok(Self::from_table(table))
    }

    pub fn from_table(table: ViewTable) -> Self {
        let counts = table.views().iter().map(LocalCounts::new).collect();
        LpBuilder { table, counts }
    }

    pub fn table(&self) -> &ViewTable {
        &self.table
    }

    pub fn degree(&self) -> usize {
        self.table.degree()
    }

    pub fn instance(&self, q: u32, lam: &Rational, set: ConstraintSet, sense: Sense) -> Result<LPInstance> {
        if q < 2 {
            return Err(Error::TooFewColors(q));
        }
        if !lam.is_positive() || *lam >= Rational::one() {
            return Err(Error::InvalidArgument(format!("lam must lie in (0, 1), got {lam}")));
        }
        if let Some(cap) = self.table.max_colors() {
            if cap < q as usize && cap < self.degree() * (self.degree() - 1) {
                return Err(Error::InvalidArgument(format!(
                    "view table is limited to {cap} boundary colors but q = {q}"
                )));
            }
        }
        let d = self.degree();
        let parts = match set {
            ConstraintSet::EnergyOnly => Vec::new(),
            ConstraintSet::QPartitions => q_partitions(d, q as usize),
        };
        let mut ordinals = Vec::new();
        let mut views = Vec::new();
        let mut objective = Vec::new();
        let mut energy = Vec::new();
        let mut gamma: Vec<Vec<Rational>> = vec![Vec::new(); parts.len()];
        for (i, view) in self.table.admissible(q as usize) {
            let nq = self.counts[i].numeric(q, lam)?;
            ordinals.push(i + 1);
            views.push(view.clone());
            energy.push(&nq.u_v - &nq.u_n);
            objective.push(nq.u_v.clone());
            for (row, s) in gamma.iter_mut().zip(&parts) {
                row.push(nq.gamma_v(s) - nq.gamma_n(s));
            }
        }
        let width = views.len();
        let mut rows = vec![
            Row {
                kind: RowKind::Simplex,
                coeffs: vec![Rational::one(); width],
                rhs: Rational::one(),
            },
            Row {
                kind: RowKind::Energy,
                coeffs: energy,
                rhs: Rational::zero(),
            },
        ];
        for (coeffs, s) in gamma.into_iter().zip(parts) {
            rows.push(Row {
                kind: RowKind::Gamma(s),
                coeffs,
                rhs: Rational::zero(),
            });
        }
        Ok(LPInstance {
            degree: d,
            q,
            lam: lam.clone(),
            sense,
            constraint_set: set,
            ordinals,
            views,
            objective,
            rows,
        })
    }
}

pub fn build_lp(d: usize, q: u32, lam: &Rational, set: ConstraintSet, sense: Sense) -> Result<LPInstance> {
    LpBuilder::new(d, Some(q as usize), None)?.instance(q, lam, set, sense)
}

pub fn solve_exact(lp: &LPInstance) -> LPSolution {
    let a: Vec<Vec<Rational>> = lp.rows.iter().map(|r| r.coeffs.clone()).collect();
    let b: Vec<Rational> = lp.rows.iter().map(|r| r.rhs.clone()).collect();
    let c: Vec<Rational> = match lp.sense {
        Sense::Min => lp.objective.clone(),
        Sense::Max => lp.objective.iter().map(|v| -v).collect(),
    };
    let sol = solve_standard(&a, &b, &c);
    let flip = |v: Rational| match lp.sense {
        Sense::Min => v,
        Sense::Max => -v,
    };
    let distribution = sol
        .x
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(j, p)| (lp.ordinals[j], p.clone()))
        .collect();
    LPSolution {
        status: sol.status,
        optimum: flip(sol.objective),
        distribution,
        dual_values: sol.y.into_iter().map(flip).collect(),
        redundant_rows: sol.redundant_rows,
        pivots: sol.pivots,
    }
}

/// Outcome of checking an optimal solution against its instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityCheck {
    pub primal_feasible: bool,
    /// `A^T y <= c` for min, `>= c` for max.
    pub dual_feasible: bool,
    pub strong_duality: bool,
    pub complementary_slackness: bool,
}

impl DualityCheck {
    pub fn all(&self) -> bool {
        self.primal_feasible && self.dual_feasible && self.strong_duality && self.complementary_slackness
    }
}

pub fn check_duality(lp: &LPInstance, sol: &LPSolution) -> DualityCheck {
    let n = lp.views.len();
    let mut x = vec![Rational::zero(); n];
    let mut primal_feasible = true;
    for (ord, p) in &sol.distribution {
        match lp.ordinals.iter().position(|o| o == ord) {
            Some(j) => x[j] = p.clone(),
            None => primal_feasible = false,
        }
    }
    primal_feasible &= x.iter().all(|v| !v.is_negative());
    for row in &lp.rows {
        let lhs: Rational = row.coeffs.iter().zip(&x).map(|(a, v)| a * v).sum();
        primal_feasible &= lhs == row.rhs;
    }
    let primal_value: Rational = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    let dual_value: Rational = lp.rows.iter().zip(&sol.dual_values).map(|(r, y)| &r.rhs * y).sum();
    let mut dual_feasible = true;
    let mut complementary_slackness = true;
    for j in 0..n {
        let ay: Rational = lp.rows.iter().zip(&sol.dual_values).map(|(r, y)| &r.coeffs[j] * y).sum();
        let reduced = &lp.objective[j] - ay;
        dual_feasible &= match lp.sense {
            Sense::Min => !reduced.is_negative(),
            Sense::Max => !reduced.is_positive(),
        };
        complementary_slackness &= (&reduced * &x[j]).is_zero();
    }
    DualityCheck {
        primal_feasible,
        dual_feasible,
        strong_duality: primal_value == sol.optimum && dual_value == sol.optimum,
        complementary_slackness,
    }
}

/// Checks that the energy row equals `sum_S f(S)/2 * gamma_S`, the
/// identity that makes it redundant given the histogram rows.
pub fn energy_row_redundant(lp: &LPInstance) -> Result<bool> {
    let energy = lp
        .rows
        .iter()
        .find(|r| r.kind == RowKind::Energy)
        .ok_or(Error::InvalidArgument(String::from("instance has no energy row")))?;
    let half = Rational::one() / rational::int(2);
    let mut combo = vec![Rational::zero(); lp.views.len()];
    let mut any = false;
    for row in &lp.rows {
        if let RowKind::Gamma(s) = &row.kind {
            any = true;
            let w = energy_weight(s, lp.q, &lp.lam)? * &half;
            for (acc, a) in combo.iter_mut().zip(&row.coeffs) {
                *acc += &w * a;
            }
        }
    }
    if !any {
        return Err(Error::InvalidArgument(String::from("instance has no histogram rows")));
    }
    Ok(combo == energy.coeffs)
}

/// `U_{K_{d,d}}` at a concrete point.
pub fn u_complete_bipartite_at(d: usize, q: u32, lam: &Rational) -> Result<Rational> {
    let at = point(&[(Var::Lam, lam.clone()), (Var::Q, rational::int(i64::from(q)))]);
    localstats::u_complete_bipartite(d).eval(&at)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub lam: Rational,
    pub lp_min: Rational,
    pub u_kdd: Rational,
    /// `lp_min - U_{K_{d,d}}`.
    pub gap: Rational,
    /// Support of the optimal distribution (ordinals).
    pub support: Vec<usize>,
}

impl ScanRecord {
    pub fn below(&self) -> bool {
        self.gap.is_negative()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub degree: usize,
    pub q: u32,
    pub constraint_set: ConstraintSet,
    pub records: Vec<ScanRecord>,
    /// Set when the solve budget stopped the scan early.
    pub truncated: bool,
    /// First lam with the LP strictly below `U_{K_{d,d}}`.
    pub witness: Option<Rational>,
    pub duality_verified: bool,
}

/// One scan point: solve the min LP and compare with `K_{d,d}`.
pub fn scan_point(builder: &LpBuilder, q: u32, lam: &Rational, set: ConstraintSet) -> Result<(ScanRecord, bool)> {
    let lp = builder.instance(q, lam, set, Sense::Min)?;
    let sol = solve_exact(&lp);
    if sol.status != Status::Optimal {
        return Err(Error::InvalidArgument(format!("LP at lam = {lam} is {:?}", sol.status)));
    }
    let ok = check_duality(&lp, &sol).all();
    let u_kdd = u_complete_bipartite_at(builder.degree(), q, lam)?;
    let gap = &sol.optimum - &u_kdd;
    Ok((
        ScanRecord {
            lam: lam.clone(),
            lp_min: sol.optimum,
            u_kdd,
            gap,
            support: sol.distribution.keys().copied().collect(),
        },
        ok,
    ))
}

/// Assembles a report from per-point results in lam order.
pub fn assemble_scan(
    degree: usize,
    q: u32,
    set: ConstraintSet,
    points: Vec<(ScanRecord, bool)>,
    truncated: bool,
) -> ScanReport {
    let duality_verified = points.iter().all(|(_, ok)| *ok);
    let records: Vec<ScanRecord> = points.into_iter().map(|(r, _)| r).collect();
    let witness = records.iter().find(|r| r.below()).map(|r| r.lam.clone());
    ScanReport {
        degree,
        q,
        constraint_set: set,
        records,
        truncated,
        witness,
        duality_verified,
    }
}

/// Default lam grid `{k/8 : 1 <= k <= 7}`.
pub fn default_grid() -> Vec<Rational> {
    (1..=7).map(|k| rational::ratio(k, 8)).collect()
}

/// Solves the min LP at each lam, stopping after `max_solves` points.
pub fn tightness_scan(
    builder: &LpBuilder,
    q: u32,
    lams: &[Rational],
    set: ConstraintSet,
    max_solves: Option<usize>,
) -> Result<ScanReport> {
    let take = max_solves.unwrap_or(lams.len()).min(lams.len());
    let mut points = Vec::with_capacity(take);
    for lam in &lams[..take] {
        points.push(scan_point(builder, q, lam, set)?);
    }
    Ok(assemble_scan(builder.degree(), q, set, points, take < lams.len()))
}

/// Row residuals `sum_C p_C a_C - b` of a distribution over views.
pub fn row_residuals(
    d: usize,
    q: u32,
    lam: &Rational,
    set: ConstraintSet,
    dist: &BTreeMap<LocalView, Rational>,
) -> Result<Vec<(String, Rational)>> {
    let parts = match set {
        ConstraintSet::EnergyOnly => Vec::new(),
        ConstraintSet::QPartitions => q_partitions(d, q as usize),
    };
    let mut simplex = -Rational::one();
    let mut energy = Rational::zero();
    let mut gamma = vec![Rational::zero(); parts.len()];
    for (view, p) in dist {
        if view.degree() != d {
            return Err(Error::InconsistentView(format!("{view} has degree {}", view.degree())));
        }
        let nq = LocalCounts::new(view).numeric(q, lam)?;
        simplex += p;
        energy += p * (&nq.u_v - &nq.u_n);
        for (g, s) in gamma.iter_mut().zip(&parts) {
            *g += p * (nq.gamma_v(s) - nq.gamma_n(s));
        }
    }
    let mut out = vec![
        (RowKind::Simplex.name(), simplex),
        (RowKind::Energy.name(), energy),
    ];
    for (g, s) in gamma.into_iter().zip(parts) {
        out.push((RowKind::Gamma(s).name(), g));
    }
    Ok(out)
}

/// True iff the local-view distribution induced by `g` satisfies every row.
pub fn check_graph_feasibility(
    g: &Graph,
    q: u32,
    lam: &Rational,
    set: ConstraintSet,
    limits: OracleLimits,
) -> Result<bool> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let dist = oracle::local_view_distribution(g, q, lam, limits)?;
    Ok(row_residuals(d, q, lam, set, &dist)?.iter().all(|(_, r)| r.is_zero()))
}
