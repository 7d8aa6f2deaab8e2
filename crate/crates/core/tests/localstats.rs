use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{rngs::StdRng, Rng, SeedableRng};

use potts_core::graphs::{connected_cubic_graphs, oracle, OracleLimits};
use potts_core::localstats::{closed_forms, histogram, q_partitions, LocalCounts, QPartition};
use potts_core::localview::{canonicalize, enumerate_views, Extractor, LocalView};
use potts_core::polynomial::point;
use potts_core::rational::{int, pow, ratio};
use potts_core::{Graph, Rational, Var};

struct Naive {
    z: Rational,
    u_v: Rational,
    u_n: Rational,
    gamma_v: BTreeMap<QPartition, Rational>,
}

/// Plain summation over all of `[q]^{V_C}`.
fn naive(view: &LocalView, q: u32, lam: &Rational) -> Naive {
    let d = view.degree();
    let mut colors = vec![1u32; d + 1];
    let (mut z, mut ev, mut en) = (Rational::zero(), Rational::zero(), Rational::zero());
    let mut gamma_v: BTreeMap<QPartition, Rational> = BTreeMap::new();
    loop {
        let mut m = 0;
        let mut mv = 0;
        let mut mu_total = 0;
        for i in 0..d {
            let ci = colors[i + 1];
            let mut mu = 0;
            if ci == colors[0] {
                mv += 1;
                mu += 1;
            }
            for j in 0..d {
                if view.is_adjacent(i, j) && colors[j + 1] == ci {
                    mu += 1;
                    if j > i {
                        m += 1;
                    }
                }
            }
            let b = view.boundary(i).iter().filter(|&&c| c == ci).count();
            mu += b;
            m += b;
            mu_total += mu;
        }
        m += mv;
        let w = pow(lam, m as u32);
        ev += &w * int(mv as i64);
        en += &w * int(mu_total as i64);
        *gamma_v.entry(histogram(&colors[1..])).or_insert_with(Rational::zero) += &w;
        z += w;
        let mut k = 0;
        loop {
            if k == colors.len() {
                let two = int(2);
                for g in gamma_v.values_mut() {
                    *g /= &z;
                }
                return Naive {
                    u_v: ev / (&two * &z),
                    u_n: en / (two * int(d as i64) * &z),
                    z,
                    gamma_v,
                };
            }
            colors[k] += 1;
            if colors[k] <= q {
                break;
            }
            colors[k] = 1;
            k += 1;
        }
    }
}

#[test]
fn local_quantities_match_naive_summation() {
    let mut rng = StdRng::seed_from_u64(3);
    for view in enumerate_views(3).unwrap().views() {
        let counts = LocalCounts::new(view);
        for q in 2..=6u32 {
            if (q as usize) < view.q_c() {
                continue;
            }
            for _ in 0..5 {
                let den = rng.gen_range(2..30);
                let lam = ratio(rng.gen_range(1..den), den);
                let fast = counts.numeric(q, &lam).unwrap();
                let slow = naive(view, q, &lam);
                assert_eq!(fast.z, slow.z, "{view} q={q} lam={lam}");
                assert_eq!(fast.u_v, slow.u_v);
                assert_eq!(fast.u_n, slow.u_n);
                assert_eq!(fast.gamma_v, slow.gamma_v);
            }
        }
    }
}

#[test]
fn clique_view_rainbow_probability() {
    let k4 = LocalView::clique(3).unwrap();
    let s = QPartition::new(vec![1, 1, 1]);
    for q in [3, 4] {
        let lam = ratio(1, 3);
        let fast = LocalCounts::new(&k4).numeric(q, &lam).unwrap();
        assert_eq!(fast.gamma_v(&s), naive(&k4, q, &lam).gamma_v[&s]);
    }
}

#[test]
fn energy_functional_recovers_local_energies() {
    for view in enumerate_views(3).unwrap().views() {
        for (q, lam) in [(3u32, ratio(1, 2)), (5, ratio(2, 7))] {
            if (q as usize) < view.q_c() {
                continue;
            }
            let nq = LocalCounts::new(view).numeric(q, &lam).unwrap();
            let (mut sv, mut sn) = (Rational::zero(), Rational::zero());
            for s in q_partitions(3, q as usize) {
                let f = potts_core::localstats::energy_weight(&s, q, &lam).unwrap();
                sv += &f * nq.gamma_v(&s);
                sn += &f * nq.gamma_n(&s);
            }
            assert_eq!(sv, &nq.u_v * int(2));
            assert_eq!(sn, &nq.u_n * int(2));
        }
    }
}

#[test]
fn k33_closed_form_matches_oracle() {
    let forms = closed_forms();
    let at = point(&[(Var::Lam, ratio(1, 2)), (Var::Q, int(2))]);
    let g = Graph::complete_bipartite(3).unwrap();
    let lim = OracleLimits::default();
    assert_eq!(forms.z_k33.eval(&at).unwrap(), oracle::potts_partition(&g, 2, &ratio(1, 2), lim).unwrap());
    for q in 2..=4u32 {
        let lam = ratio(2, 3);
        let at = point(&[(Var::Lam, lam.clone()), (Var::Q, int(q as i64))]);
        assert_eq!(forms.u_k33.eval(&at).unwrap(), oracle::internal_energy(&g, q, &lam, lim).unwrap());
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(forms.u_k4.eval(&at).unwrap(), oracle::internal_energy(&k4, q, &lam, lim).unwrap());
    }
}

#[test]
fn graph_distributions_satisfy_consistency() {
    let lim = OracleLimits::default();
    for n in [4, 6, 8] {
        for g in connected_cubic_graphs(n) {
            for (q, lam) in [(2u32, ratio(1, 4)), (3, ratio(1, 2))] {
                let dist = oracle::local_view_distribution(&g, q, &lam, lim).unwrap();
                let total: Rational = dist.values().sum();
                assert!(total.is_one());
                let (mut uv, mut un) = (Rational::zero(), Rational::zero());
                for (view, p) in &dist {
                    let nq = LocalCounts::new(view).numeric(q, &lam).unwrap();
                    uv += p * &nq.u_v;
                    un += p * &nq.u_n;
                }
                let u = oracle::internal_energy(&g, q, &lam, lim).unwrap();
                assert_eq!(uv, u);
                assert_eq!(un, u);
            }
        }
    }
}

#[test]
fn extracted_views_are_in_the_table() {
    let table = enumerate_views(3).unwrap();
    for n in [4, 6, 8] {
        for g in connected_cubic_graphs(n) {
            let ex = Extractor::new(&g).unwrap();
            let mut colors = vec![0u8; n];
            // every assignment of 4 colors
            let q = 4u8;
            loop {
                for v in 0..n {
                    assert!(table.position(&ex.view(v, &colors)).is_some());
                }
                let mut k = 0;
                while k < n {
                    colors[k] += 1;
                    if colors[k] < q {
                        break;
                    }
                    colors[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
    }
}

#[test]
fn canonical_form_is_idempotent() {
    for view in enumerate_views(3).unwrap().views() {
        assert_eq!(&canonicalize(&view.to_raw()).unwrap(), view);
    }
    for view in enumerate_views(4).unwrap().views().iter().step_by(37) {
        assert_eq!(&canonicalize(&view.to_raw()).unwrap(), view);
    }
}
