//! Exhaustive Potts computations on small graphs.
//!
//! Colorings are enumerated up to color permutation: vertex `i` may only use
//! a color already used by an earlier vertex or the next unused one. A
//! coloring with `k` distinct colors stands for `q (q-1) ... (q-k+1)`
//! concrete colorings, all with the same number of monochromatic edges and
//! the same local views.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Graph;
use crate::localview::{Extractor, LocalView};
use crate::polynomial::{Monomial, Polynomial, Var};
use crate::rational::{self, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
}

impl OracleLimits {
    pub const DEFAULT_MAX_VERTICES: usize = 16;
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: Self::DEFAULT_MAX_VERTICES,
        }
    }
}

fn check(g: &Graph, q: u32, limits: OracleLimits) -> Result<()> {
    if q < 1 {
        return Err(Error::TooFewColors(q));
    }
    if g.n() > limits.max_vertices {
        return Err(Error::InstanceTooLarge {
            vertices: g.n(),
            cap: limits.max_vertices,
        });
    }
    Ok(())
}

/// Visits every restricted-growth coloring with at most `q` colors, passing
/// the coloring, its number of distinct colors and its number of
/// monochromatic edges.
pub(crate) fn for_each_coloring(g: &Graph, q: u32, mut visit: impl FnMut(&[u8], usize, usize)) {
    let n = g.n();
    let q = q.min(n.max(1) as u32) as usize;
    // Only edges to earlier vertices matter when extending a prefix.
    let back: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().filter(|&w| w < v).collect())
        .collect();
    let mut colors = vec![0u8; n];
    fn rec(
        i: usize,
        used: usize,
        mono: usize,
        q: usize,
        back: &[Vec<usize>],
        colors: &mut [u8],
        visit: &mut dyn FnMut(&[u8], usize, usize),
    ) {
        if i == colors.len() {
            visit(colors, used, mono);
            return;
        }
        let top = if used < q { used + 1 } else { used };
        for c in 0..top {
            let c8 = c as u8;
            let extra = back[i].iter().filter(|&&w| colors[w] == c8).count();
            colors[i] = c8;
            rec(i + 1, used.max(c + 1), mono + extra, q, back, colors, visit);
        }
    }
    if n == 0 {
        visit(&colors, 0, 0);
        return;
    }
    rec(0, 0, 0, q, &back, &mut colors, &mut visit);
}

/// `counts[k][m]`: restricted-growth colorings with `k` colors and `m`
/// monochromatic edges.
fn class_counts(g: &Graph, q: u32) -> Vec<Vec<u64>> {
    let mut counts = vec![vec![0u64; g.edge_count() + 1]; g.n() + 1];
    for_each_coloring(g, q, |_, k, m| counts[k][m] += 1);
    counts
}

/// Number of colorings in `[q]^V` with exactly `m` monochromatic edges, for
/// each `m`.
pub fn mono_counts(g: &Graph, q: u32, limits: OracleLimits) -> Result<Vec<BigInt>> {
    check(g, q, limits)?;
    let counts = class_counts(g, q);
    let mut out = vec![BigInt::zero(); g.edge_count() + 1];
    for (k, row) in counts.iter().enumerate() {
        let w = rational::falling_factorial(i64::from(q), k as u32);
        for (m, &c) in row.iter().enumerate() {
            if c > 0 {
                out[m] += &w * BigInt::from(c);
            }
        }
    }
    Ok(out)
}

/// The partition function as a polynomial in `lam` and `q`.
pub fn partition_polynomial(g: &Graph, limits: OracleLimits) -> Result<Polynomial> {
    check(g, 1, limits)?;
    let counts = class_counts(g, g.n().max(1) as u32);
    let qpoly = Polynomial::var(Var::Q);
    let mut out = Polynomial::zero();
    let mut falling = Polynomial::one();
    for (k, row) in counts.iter().enumerate() {
        if k > 0 {
            falling = &falling * &(&qpoly - &Polynomial::int(k as i64 - 1));
        }
        let lam_part = Polynomial::from_terms(
            row.iter()
                .enumerate()
                .map(|(m, &c)| (Monomial::var(Var::Lam, m as u32), rational::int(c as i64))),
        );
        out += &(&falling * &lam_part);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PottsEvaluation {
    pub q: u32,
    pub lam: Rational,
    pub z: Rational,
    pub u: Rational,
    /// Total weight `w_m` of colorings with `m` monochromatic edges.
    pub mono_distribution: BTreeMap<usize, Rational>,
}

fn check_lam(lam: &Rational) -> Result<()> {
    if lam.is_negative() {
        return Err(Error::InvalidArgument("lam must be non-negative".into()));
    }
    Ok(())
}

pub fn potts_evaluation(g: &Graph, q: u32, lam: &Rational, limits: OracleLimits) -> Result<PottsEvaluation> {
    check_lam(lam)?;
    let counts = mono_counts(g, q, limits)?;
    let mut z = Rational::zero();
    let mut energy = Rational::zero();
    let mut dist = BTreeMap::new();
    let mut pw = Rational::one();
    for (m, c) in counts.iter().enumerate() {
        if m > 0 {
            pw *= lam;
        }
        if c.is_zero() {
            continue;
        }
        let w = Rational::from_integer(c.clone()) * &pw;
        energy += &w * rational::int(m as i64);
        z += &w;
        dist.insert(m, w);
    }
    if z.is_zero() {
        return Err(Error::Undefined("partition function vanishes"));
    }
    let u = energy / (&z * rational::int(g.n() as i64));
    Ok(PottsEvaluation {
        q,
        lam: lam.clone(),
        z,
        u,
        mono_distribution: dist,
    })
}

pub fn potts_partition(g: &Graph, q: u32, lam: &Rational, limits: OracleLimits) -> Result<Rational> {
    check_lam(lam)?;
    let counts = mono_counts(g, q, limits)?;
    let lam_poly = Polynomial::univariate(Var::Lam, counts.into_iter().map(Rational::from_integer));
    lam_poly.eval(&crate::polynomial::point(&[(Var::Lam, lam.clone())]))
}

pub fn internal_energy(g: &Graph, q: u32, lam: &Rational, limits: OracleLimits) -> Result<Rational> {
    Ok(potts_evaluation(g, q, lam, limits)?.u)
}

/// Proper `q`-colorings: the `lam = 0` value with `0^0 = 1`.
pub fn count_proper_colorings(g: &Graph, q: u32, limits: OracleLimits) -> Result<BigInt> {
    Ok(mono_counts(g, q, limits)?.swap_remove(0))
}

/// The joint law of (uniform vertex, Potts coloring) pushed to local views,
/// kept as polynomials in `lam` so that many temperatures can be read off
/// one enumeration.
#[derive(Clone, Debug)]
pub struct ViewDistribution {
    pub n: usize,
    pub q: u32,
    /// `views[C][m]`: number of (vertex, coloring) pairs with view `C` and
    /// `m` monochromatic edges.
    pub views: BTreeMap<LocalView, Vec<BigInt>>,
    /// `z[m]`: colorings with `m` monochromatic edges.
    pub z: Vec<BigInt>,
}

fn eval_counts(counts: &[BigInt], lam: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut pw = Rational::one();
    for (m, c) in counts.iter().enumerate() {
        if m > 0 {
            pw *= lam;
        }
        if !c.is_zero() {
            acc += Rational::from_integer(c.clone()) * &pw;
        }
    }
    acc
}

impl ViewDistribution {
    /// Exact probability of each view at temperature `lam`.
    pub fn at(&self, lam: &Rational) -> Result<BTreeMap<LocalView, Rational>> {
        check_lam(lam)?;
        let z = eval_counts(&self.z, lam) * rational::int(self.n as i64);
        if z.is_zero() {
            return Err(Error::Undefined("partition function vanishes"));
        }
        Ok(self
            .views
            .iter()
            .map(|(v, c)| (v.clone(), eval_counts(c, lam) / &z))
            .filter(|(_, p)| !p.is_zero())
            .collect())
    }

    /// Views with positive probability for some `lam > 0`.
    pub fn support(&self) -> impl Iterator<Item = &LocalView> {
        self.views.keys()
    }
}

pub fn view_distribution(g: &Graph, q: u32, limits: OracleLimits) -> Result<ViewDistribution> {
    check(g, q, limits)?;
    let ex = Extractor::new(g)?;
    let mut ids: BTreeMap<LocalView, usize> = BTreeMap::new();
    // per view id: counts[k][m]
    let mut tables: Vec<Vec<Vec<u64>>> = Vec::new();
    let edges = g.edge_count();
    let n = g.n();
    for_each_coloring(g, q, |colors, k, m| {
        for v in 0..n {
            let view = ex.view(v, colors);
            let next = ids.len();
            let id = *ids.entry(view).or_insert(next);
            if id == tables.len() {
                tables.push(vec![vec![0; edges + 1]; n + 1]);
            }
            tables[id][k][m] += 1;
        }
    });
    let weights: Vec<BigInt> = (0..=n)
        .map(|k| rational::falling_factorial(i64::from(q), k as u32))
        .collect();
    let collapse = |t: &Vec<Vec<u64>>| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); edges + 1];
        for (k, row) in t.iter().enumerate() {
            for (m, &c) in row.iter().enumerate() {
                if c > 0 {
                    out[m] += &weights[k] * BigInt::from(c);
                }
            }
        }
        out
    };
    let mut views = BTreeMap::new();
    for (view, id) in ids {
        let counts = collapse(&tables[id]);
        if counts.iter().any(|c| !c.is_zero()) {
            views.insert(view, counts);
        }
    }
    let z = mono_counts(g, q, limits)?;
    Ok(ViewDistribution { n, q, views, z })
}

/// Probability of each canonical local view under (uniform vertex, Potts
/// coloring).
pub fn local_view_distribution(
    g: &Graph,
    q: u32,
    lam: &Rational,
    limits: OracleLimits,
) -> Result<BTreeMap<LocalView, Rational>> {
    view_distribution(g, q, limits)?.at(lam)
}
