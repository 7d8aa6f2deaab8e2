//! Exact local quantities of a local view: the local partition function,
//! the energies seen from `v` and from its neighbours, and the probabilities
//! of each neighbourhood color histogram.
//!
//! Colorings of the `d + 1` uncolored vertices are enumerated as
//! representatives: boundary colors `1..=q_C` are used freely, and any other
//! color is a "new" color numbered `q_C + 1, q_C + 2, ...` in order of first
//! use (vertex order `v, u_1, ..., u_d`). A representative with `k` new
//! colors stands for `(q - q_C)(q - q_C - 1)...(q - q_C - k + 1)` concrete
//! colorings. Every quantity is first tallied as integer counts keyed by
//! `(k, m)`, where `m` is the number of monochromatic edges, and then turned
//! into a polynomial in `(lam, q)` or evaluated at a concrete point.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graphs::{oracle, Graph, OracleLimits};
use crate::localview::LocalView;
use crate::polynomial::{Monomial, Polynomial, RationalFunction, Var};
use crate::rational::{self, Rational};
use crate::{Error, Result};

/// A partition of `d` into at most `q` parts, stored as its positive parts
/// in non-increasing order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPartition(Vec<u8>);

impl QPartition {
    pub fn new(mut parts: Vec<u8>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        QPartition(parts)
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| usize::from(p)).sum()
    }

    /// The length-`q` vector with trailing zeros.
    pub fn padded(&self, q: usize) -> Vec<u8> {
        let mut v = self.0.clone();
        v.resize(q.max(v.len()), 0);
        v
    }
}

impl fmt::Debug for QPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Color histogram of a multiset of colors.
pub fn histogram<T: Ord>(colors: &[T]) -> QPartition {
    let mut counts: BTreeMap<&T, u8> = BTreeMap::new();
    for c in colors {
        *counts.entry(c).or_insert(0) += 1;
    }
    QPartition::new(counts.into_values().collect())
}

/// All partitions of `d` into at most `q` parts, in decreasing
/// lexicographic order.
pub fn q_partitions(d: usize, q: usize) -> Vec<QPartition> {
    fn rec(left: usize, max: usize, slots: usize, cur: &mut Vec<u8>, out: &mut Vec<QPartition>) {
        if left == 0 {
            out.push(QPartition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p as u8);
            rec(left - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, q, &mut Vec::new(), &mut out);
    out
}

/// Expected monochromatic degree of a vertex whose `d` neighbours carry the
/// histogram `s`, when the vertex's own color is drawn from the Potts
/// conditional law: `sum s_i lam^{s_i} / (sum lam^{s_i} + q - len(s))`.
pub fn energy_weight(s: &QPartition, q: u32, lam: &Rational) -> Result<Rational> {
    let mut num = Rational::zero();
    let mut den = rational::int(i64::from(q) - s.len() as i64);
    for &p in s.parts() {
        let w = rational::pow(lam, u32::from(p));
        num += &w * rational::int(i64::from(p));
        den += w;
    }
    if den.is_zero() {
        return Err(Error::Undefined("energy weight denominator vanishes"));
    }
    Ok(num / den)
}

/// One representative coloring of `v, u_1, ..., u_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepColoring {
    /// Colors, 1-based; values above `q_C` are new colors in first-use order.
    pub assignment: Vec<u32>,
    /// Largest color in play, never below `q_C`.
    pub ell: u32,
    pub mono: u32,
    pub mono_v: u32,
    pub mono_per_neighbor: Vec<u32>,
    pub neighbor_histogram: QPartition,
    /// Histogram of `N(u_i)` for each neighbour, boundary colors included.
    pub neighbor_neighborhoods: Vec<QPartition>,
}

impl RepColoring {
    pub fn new_colors(&self, q_c: usize) -> u32 {
        self.ell - q_c as u32
    }
}

fn analyse(view: &LocalView, assignment: &[u32]) -> RepColoring {
    let d = view.degree();
    let q_c = view.q_c() as u32;
    let cols = view.columns();
    let cv = assignment[0];
    let mut mono = 0;
    let mut mono_v = 0;
    let mut per = vec![0u32; d];
    for i in 0..d {
        let ci = assignment[i + 1];
        if ci == cv {
            mono_v += 1;
            per[i] += 1;
        }
        for j in 0..d {
            if view.is_adjacent(i, j) && assignment[j + 1] == ci {
                per[i] += 1;
            }
        }
        if ci >= 1 && ci <= q_c {
            per[i] += u32::from(cols[(ci - 1) as usize][i]);
        }
    }
    // v's edges + each neighbour's edges, inner edges counted twice
    mono += mono_v;
    let mut inner_twice = 0;
    let mut boundary = 0;
    for i in 0..d {
        let ci = assignment[i + 1];
        for j in 0..d {
            if view.is_adjacent(i, j) && assignment[j + 1] == ci {
                inner_twice += 1;
            }
        }
        if ci >= 1 && ci <= q_c {
            boundary += u32::from(cols[(ci - 1) as usize][i]);
        }
    }
    mono += inner_twice / 2 + boundary;
    let neighbor_histogram = histogram(&assignment[1..]);
    let neighbor_neighborhoods = (0..d)
        .map(|i| {
            let mut around = vec![cv];
            for j in 0..d {
                if view.is_adjacent(i, j) {
                    around.push(assignment[j + 1]);
                }
            }
            around.extend(view.boundary(i));
            histogram(&around)
        })
        .collect();
    let ell = assignment.iter().copied().max().unwrap_or(0).max(q_c);
    RepColoring {
        assignment: assignment.to_vec(),
        ell,
        mono,
        mono_v,
        mono_per_neighbor: per,
        neighbor_histogram,
        neighbor_neighborhoods,
    }
}

fn for_each_rep(view: &LocalView, mut visit: impl FnMut(&[u32])) {
    let n = view.degree() + 1;
    let q_c = view.q_c() as u32;
    let mut assignment = vec![0u32; n];
    fn rec(i: usize, top: u32, q_c: u32, a: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
        if i == a.len() {
            visit(a);
            return;
        }
        for c in 1..=top + 1 {
            a[i] = c;
            rec(i + 1, top.max(c), q_c, a, visit);
        }
    }
    rec(0, q_c, q_c, &mut assignment, &mut visit);
}

/// `(q - q_c)(q - q_c - 1)...(q - q_c - k + 1)` as a polynomial in `q`.
fn new_color_weight(q_c: usize, k: u32) -> Polynomial {
    let q = Polynomial::var(Var::Q);
    let mut w = Polynomial::one();
    for i in 0..k {
        w = &w * &(&q - &Polynomial::int(q_c as i64 + i64::from(i)));
    }
    w
}

/// Representatives of the colorings of `V_C`, each with its multiplicity as
/// a polynomial in `q`.
pub fn rep_colorings(view: &LocalView) -> Vec<(RepColoring, Polynomial)> {
    let q_c = view.q_c();
    let mut out = Vec::new();
    for_each_rep(view, |a| {
        let rep = analyse(view, a);
        let w = new_color_weight(q_c, rep.new_colors(q_c));
        out.push((rep, w));
    });
    out
}

type Tally = BTreeMap<(u32, u32), i64>;

fn bump(t: &mut Tally, k: u32, m: u32, by: i64) {
    if by != 0 {
        *t.entry((k, m)).or_insert(0) += by;
    }
}

/// Integer tallies from which every local quantity is assembled.
#[derive(Clone, Debug)]
pub struct LocalCounts {
    degree: usize,
    q_c: usize,
    z: Tally,
    uv: Tally,
    un: Tally,
    gamma_v: BTreeMap<QPartition, Tally>,
    gamma_n: BTreeMap<QPartition, Tally>,
}

impl LocalCounts {
    pub fn new(view: &LocalView) -> Self {
        let q_c = view.q_c();
        let mut c = LocalCounts {
            degree: view.degree(),
            q_c,
            z: Tally::new(),
            uv: Tally::new(),
            un: Tally::new(),
            gamma_v: BTreeMap::new(),
            gamma_n: BTreeMap::new(),
        };
        for_each_rep(view, |a| {
            let rep = analyse(view, a);
            let k = rep.new_colors(q_c);
            let m = rep.mono;
            bump(&mut c.z, k, m, 1);
            bump(&mut c.uv, k, m, i64::from(rep.mono_v));
            bump(&mut c.un, k, m, rep.mono_per_neighbor.iter().map(|&x| i64::from(x)).sum());
            bump(c.gamma_v.entry(rep.neighbor_histogram.clone()).or_default(), k, m, 1);
            for h in &rep.neighbor_neighborhoods {
                bump(c.gamma_n.entry(h.clone()).or_default(), k, m, 1);
            }
        });
        c
    }

    fn poly(&self, t: &Tally) -> Polynomial {
        let mut by_k: BTreeMap<u32, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (&(k, m), &n) in t {
            by_k.entry(k)
                .or_default()
                .push((Monomial::var(Var::Lam, m), rational::int(n)));
        }
        let mut out = Polynomial::zero();
        for (k, terms) in by_k {
            out += &(&new_color_weight(self.q_c, k) * &Polynomial::from_terms(terms));
        }
        out
    }

    fn value(&self, t: &Tally, q: u32, lam: &Rational) -> Rational {
        let mut weights: BTreeMap<u32, BigInt> = BTreeMap::new();
        let mut acc = Rational::zero();
        for (&(k, m), &n) in t {
            let w = weights
                .entry(k)
                .or_insert_with(|| rational::falling_factorial(i64::from(q) - self.q_c as i64, k));
            if w.is_zero() {
                continue;
            }
            acc += Rational::from_integer(w.clone() * BigInt::from(n)) * rational::pow(lam, m);
        }
        acc
    }

    pub fn symbolic(&self) -> LocalQuantities {
        let d = rational::int(self.degree as i64);
        let inv_d = Rational::one() / d;
        let mut gamma = BTreeMap::new();
        for s in self.gamma_v.keys().chain(self.gamma_n.keys()) {
            if gamma.contains_key(s) {
                continue;
            }
            let gv = self.gamma_v.get(s).map(|t| self.poly(t)).unwrap_or_default();
            let gn = self
                .gamma_n
                .get(s)
                .map(|t| self.poly(t).scale(&inv_d))
                .unwrap_or_default();
            gamma.insert(s.clone(), (gv, gn));
        }
        LocalQuantities {
            degree: self.degree,
            z: self.poly(&self.z),
            uv_num: self.poly(&self.uv),
            un_num: self.poly(&self.un),
            gamma,
        }
    }

    /// Exact values at integer `q >= q_C` and rational `lam`.
    pub fn numeric(&self, q: u32, lam: &Rational) -> Result<NumericQuantities> {
        if (q as usize) < self.q_c {
            return Err(Error::InvalidArgument(alloc::format!(
                "view needs {} boundary colors but q = {q}",
                self.q_c
            )));
        }
        let z = self.value(&self.z, q, lam);
        if z.is_zero() {
            return Err(Error::Undefined("local partition function vanishes"));
        }
        let two = rational::int(2);
        let d = rational::int(self.degree as i64);
        let u_v = self.value(&self.uv, q, lam) / (&two * &z);
        let u_n = self.value(&self.un, q, lam) / (&two * &d * &z);
        let mut gamma_v = BTreeMap::new();
        let mut gamma_n = BTreeMap::new();
        for (s, t) in &self.gamma_v {
            let x = self.value(t, q, lam) / &z;
            if !x.is_zero() {
                gamma_v.insert(s.clone(), x);
            }
        }
        for (s, t) in &self.gamma_n {
            let x = self.value(t, q, lam) / (&d * &z);
            if !x.is_zero() {
                gamma_n.insert(s.clone(), x);
            }
        }
        Ok(NumericQuantities {
            z,
            u_v,
            u_n,
            gamma_v,
            gamma_n,
        })
    }
}

/// Symbolic local quantities in `(lam, q)`.
#[derive(Clone, Debug)]
pub struct LocalQuantities {
    pub degree: usize,
    pub z: Polynomial,
    /// `U^v = uv_num / (2 Z)`.
    pub uv_num: Polynomial,
    /// `U^N = un_num / (2 d Z)`.
    pub un_num: Polynomial,
    /// Per histogram: numerators of `gamma^v` and `gamma^N` over `Z`; the
    /// `1/d` neighbour average is already applied.
    pub gamma: BTreeMap<QPartition, (Polynomial, Polynomial)>,
}

impl LocalQuantities {
    pub fn u_v(&self) -> RationalFunction {
        RationalFunction::new(self.uv_num.clone(), self.z.scale(&rational::int(2)))
            .expect("local partition function is nonzero")
    }

    pub fn u_n(&self) -> RationalFunction {
        RationalFunction::new(
            self.un_num.clone(),
            self.z.scale(&rational::int(2 * self.degree as i64)),
        )
        .expect("local partition function is nonzero")
    }

    /// `(gamma^{v,S}, gamma^{N,S})`; zero for histograms that never occur.
    pub fn gamma(&self, s: &QPartition) -> (RationalFunction, RationalFunction) {
        let (gv, gn) = self.gamma.get(s).cloned().unwrap_or_default();
        (
            RationalFunction::new(gv, self.z.clone()).expect("nonzero"),
            RationalFunction::new(gn, self.z.clone()).expect("nonzero"),
        )
    }
}

/// Local quantities evaluated at a concrete `(q, lam)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericQuantities {
    pub z: Rational,
    pub u_v: Rational,
    pub u_n: Rational,
    pub gamma_v: BTreeMap<QPartition, Rational>,
    pub gamma_n: BTreeMap<QPartition, Rational>,
}

impl NumericQuantities {
    pub fn gamma_v(&self, s: &QPartition) -> Rational {
        self.gamma_v.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn gamma_n(&self, s: &QPartition) -> Rational {
        self.gamma_n.get(s).cloned().unwrap_or_else(Rational::zero)
    }
}

pub fn local_z(view: &LocalView) -> Polynomial {
    LocalCounts::new(view).symbolic().z
}

pub fn local_quantities(view: &LocalView) -> LocalQuantities {
    LocalCounts::new(view).symbolic()
}

/// `Z_{K_{d,d}}` by summing over colorings of one side: each vertex on the
/// other side contributes `sum_c lam^{#left neighbours colored c}`.
pub fn z_complete_bipartite(d: usize) -> Polynomial {
    let q = Polynomial::var(Var::Q);
    let lam = Polynomial::var(Var::Lam);
    let mut total = Polynomial::zero();
    let left = Graph::empty(d);
    let mut classes: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    oracle::for_each_coloring(&left, d as u32, |colors, k, _| {
        let mut sizes = vec![0u32; k];
        for &c in colors {
            sizes[usize::from(c)] += 1;
        }
        sizes.sort_unstable();
        *classes.entry(sizes).or_insert(0) += 1;
    });
    for (sizes, count) in classes {
        let k = sizes.len() as u32;
        let mut factor = &q - &Polynomial::int(i64::from(k));
        for &s in &sizes {
            factor += &lam.pow(s);
        }
        total += &(&new_color_weight(0, k) * &factor.pow(d as u32)).scale(&rational::int(count));
    }
    total
}

/// `U = lam Z' / (|V| Z)` for a graph with partition polynomial `z`.
fn energy_from_partition(z: &Polynomial, vertices: usize) -> RationalFunction {
    let num = &Polynomial::var(Var::Lam) * &z.derivative(Var::Lam);
    RationalFunction::new(num, z.scale(&rational::int(vertices as i64))).expect("nonzero")
}

pub fn u_complete_bipartite(d: usize) -> RationalFunction {
    energy_from_partition(&z_complete_bipartite(d), 2 * d)
}

/// `Z_{K_k}` in `(lam, q)`.
pub fn z_complete(k: usize) -> Polynomial {
    let g = Graph::complete(k).expect("k >= 1");
    oracle::partition_polynomial(&g, OracleLimits { max_vertices: k })
        .expect("within limits")
}

pub fn u_complete(k: usize) -> RationalFunction {
    energy_from_partition(&z_complete(k), k)
}

/// The two extremal cubic graphs.
#[derive(Clone, Debug)]
pub struct ClosedForms {
    pub z_k33: Polynomial,
    pub u_k33: RationalFunction,
    pub z_k4: Polynomial,
    pub u_k4: RationalFunction,
}

pub fn closed_forms() -> ClosedForms {
    ClosedForms {
        z_k33: z_complete_bipartite(3),
        u_k33: u_complete_bipartite(3),
        z_k4: z_complete(4),
        u_k4: u_complete(4),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localview::enumerate_views;
    use crate::polynomial::{lam, point, q};
    use crate::rational::{int, ratio};

    fn c1() -> LocalView {
        LocalView::monochromatic_boundary(3).unwrap()
    }

    #[test]
    fn histogram_examples() {
        assert_eq!(histogram(&[1, 4, 2, 2, 1, 2]).padded(4), vec![3, 2, 1, 0]);
        assert_eq!(histogram(&[1, 1, 1]).parts(), &[3]);
        assert_eq!(histogram(&[1, 2, 3]).parts(), &[1, 1, 1]);
    }

    #[test]
    fn partitions_of_three() {
        assert_eq!(q_partitions(3, 5).len(), 3);
        assert_eq!(q_partitions(3, 2).len(), 2);
        assert_eq!(q_partitions(4, 3).len(), 4);
        assert_eq!(q_partitions(6, 6).len(), 11);
    }

    #[test]
    fn c1_partition_function_matches_closed_form() {
        let one = Polynomial::one();
        let a = (lam().pow(3) + q() - one.clone()).pow(3);
        let b = &(q() - one.clone()) * &(lam().pow(2) + lam() + q() - Polynomial::int(2)).pow(3);
        assert_eq!(local_z(&c1()), a + b);
    }

    #[test]
    fn c1_energies_match_closed_forms() {
        let lq = local_quantities(&c1());
        let one = Polynomial::one();
        let tri = lam().pow(2) + lam() + q() - Polynomial::int(2);
        let mono = (lam().pow(3) + q() - one.clone()).pow(2);
        let same = (&lam().pow(3) * &mono).scale(&int(3));
        let uv = same.clone() + (&(&(q() - one.clone()) * &lam()) * &tri.pow(2)).scale(&int(3));
        assert_eq!(lq.uv_num, uv);
        let un = same + &(&(q() - one.clone()) * &(lam() + lam().pow(2).scale(&int(2)))) * &tri.pow(2);
        assert_eq!(lq.u_n(), RationalFunction::new(un, lq.z.scale(&int(2))).unwrap());
        // U^v - U^N = lam (1 - lam) (q - 1) tri^2 / Z
        let diff = &lq.u_v() - &lq.u_n();
        let expected = RationalFunction::new(
            &(&(&lam() * &(one.clone() - lam())) * &(q() - one)) * &tri.pow(2),
            lq.z.clone(),
        )
        .unwrap();
        assert_eq!(diff, expected);
    }

    #[test]
    fn totals_are_q_to_the_four() {
        let q4 = q().pow(4);
        for view in enumerate_views(3).unwrap().views() {
            let total = rep_colorings(view)
                .into_iter()
                .fold(Polynomial::zero(), |acc, (_, w)| acc + w);
            assert_eq!(total, q4);
            let z = local_z(view);
            assert_eq!(z.eval_var(Var::Lam, &int(1)), q4);
        }
    }

    #[test]
    fn clique_view_is_symmetric() {
        let lq = local_quantities(&LocalView::clique(3).unwrap());
        assert_eq!(lq.u_v(), lq.u_n());
        assert_eq!(lq.z, z_complete(4));
        assert_eq!(lq.u_v(), u_complete(4));
    }

    #[test]
    fn k33_closed_forms() {
        let one = Polynomial::one();
        let a = lam().pow(3) + q() - one.clone();
        let b = lam().pow(2) + lam() + q() - Polynomial::int(2);
        let c = lam().scale(&int(3)) + q() - Polynomial::int(3);
        let q1 = q() - one;
        let q2 = q() - Polynomial::int(2);
        let z = &q() * &a.pow(3)
            + (&(&q() * &q1) * &b.pow(3)).scale(&int(3))
            + &(&(&q() * &q1) * &q2) * &c.pow(3);
        let forms = closed_forms();
        assert_eq!(forms.z_k33, z);
        let inner = &lam().pow(3) * &a.pow(2)
            + &(&(&lam() * &q1) * &q2) * &c.pow(2)
            + &(&q1 * &(lam().pow(2).scale(&int(2)) + lam())) * &b.pow(2);
        let u = RationalFunction::new((&q() * &inner).scale(&int(3)), z.scale(&int(2))).unwrap();
        assert_eq!(forms.u_k33, u);
        assert_eq!(forms.z_k33.eval_var(Var::Lam, &int(1)), q().pow(6));
        let at = point(&[(Var::Lam, int(1)), (Var::Q, int(5))]);
        assert_eq!(forms.u_k4.eval(&at).unwrap(), ratio(3, 10));
    }

    #[test]
    fn gamma_normalisation() {
        for view in enumerate_views(3).unwrap().views() {
            let lq = local_quantities(view);
            let (mut sv, mut sn) = (Polynomial::zero(), Polynomial::zero());
            for (gv, gn) in lq.gamma.values() {
                sv += gv;
                sn += gn;
            }
            assert_eq!(sv, lq.z);
            assert_eq!(sn, lq.z);
        }
    }

    #[test]
    fn gamma_at_infinite_temperature_is_multinomial() {
        let lq = LocalCounts::new(&c1());
        for qv in 2..=5u32 {
            let nq = lq.numeric(qv, &int(1)).unwrap();
            let qq = i64::from(qv);
            assert_eq!(nq.gamma_v(&QPartition::new(vec![3])), ratio(1, qq * qq));
            assert_eq!(nq.gamma_v(&QPartition::new(vec![2, 1])), ratio(3 * (qq - 1), qq * qq));
        }
    }

    #[test]
    fn numeric_rejects_inadmissible_q() {
        let v = LocalView::split_boundary_cubic();
        assert!(LocalCounts::new(&v).numeric(1, &ratio(1, 2)).is_err());
    }

    #[test]
    fn kdd_forms_match_oracle() {
        for d in 2..=4 {
            let g = Graph::complete_bipartite(d).unwrap();
            let direct = oracle::partition_polynomial(&g, OracleLimits::default()).unwrap();
            assert_eq!(z_complete_bipartite(d), direct);
        }
    }
}
