use num_traits::{Signed, Zero};
use potts_core::certificate::{
    verify_max_certificate, verify_min_certificate, MaxCertifier, MinCertifier, Verdict,
};
use potts_core::localstats::local_quantities;
use potts_core::localview::enumerate_views;
use potts_core::polynomial::point;
use potts_core::rational::{int, ratio};
use potts_core::{Rational, Var};
use rand::{rngs::StdRng, Rng, SeedableRng};

#[test]
fn min_certificate_passes() {
    let report = verify_min_certificate().unwrap();
    assert_eq!(report.verdict, Verdict::Pass);
    assert_eq!(report.entries.len(), 35);
    assert_eq!(report.entries.iter().filter(|e| e.is_zero).count(), 2);
    assert_eq!(report.q2_entries.len(), 14);
    assert_eq!(report.q2_entries.iter().filter(|e| e.is_zero).count(), 2);
    assert!(report.delta_star_identity_verified);
    for e in &report.entries {
        assert!(e.all_nonneg);
        assert!(e.is_zero || !e.poly.variables().is_empty());
    }
}

#[test]
fn max_certificate_passes() {
    let report = verify_max_certificate().unwrap();
    assert_eq!(report.verdict, Verdict::Pass);
    assert_eq!(report.entries.iter().filter(|e| e.is_zero).count(), 1);
    assert_eq!(report.entries.len(), 35);
    assert_eq!(report.q2_entries.len(), 14);
}

#[test]
fn tampered_coefficient_is_caught() {
    let mut report = verify_min_certificate().unwrap();
    let idx = report.entries.iter().position(|e| !e.is_zero).unwrap();
    let (m, c) = {
        let (m, c) = report.entries[idx].poly.terms().next().unwrap();
        (*m, c.clone())
    };
    let bump = potts_core::Polynomial::term(-(&c + &c), m);
    report.entries[idx].poly += &bump;
    report.rejudge();
    match &report.verdict {
        Verdict::Fail(msgs) => {
            assert!(msgs.iter().any(|s| s.contains(&format!("view {}", idx + 1)) && s.contains("negative")));
        }
        Verdict::Pass => panic!("tampering not detected"),
    }
    assert_eq!(report.entries[idx].negative_witness, Some((m, -c)));
}

fn random_point(rng: &mut StdRng) -> (i64, Rational) {
    let q = rng.gen_range(2..=9);
    let den = rng.gen_range(2..=40);
    let num = rng.gen_range(1..den);
    (q, ratio(num, den))
}

#[test]
fn dual_feasibility_by_direct_evaluation() {
    let cert = MinCertifier::new().unwrap();
    let max = MaxCertifier::new().unwrap();
    let table = enumerate_views(3).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    let pts: Vec<_> = (0..10).map(|_| random_point(&mut rng)).collect();
    for view in table.views() {
        let lq = local_quantities(view);
        for (q, lam) in &pts {
            if (*q as usize) < view.q_c() {
                continue;
            }
            let at = point(&[(Var::Lam, lam.clone()), (Var::Q, int(*q))]);
            let uv = lq.u_v().eval(&at).unwrap();
            let un = lq.u_n().eval(&at).unwrap();
            let ds = cert.delta_star().eval(&at).unwrap();
            let uk = cert.u_k33().eval(&at).unwrap();
            assert!(&uk + &ds * (&uv - &un) <= uv, "view {view} at q={q} lam={lam}");
            assert!(!max.difference(&lq).eval(&at).unwrap().is_negative());
        }
    }
}

#[test]
fn slack_sign_matches_scaled_polynomial() {
    let cert = MinCertifier::new().unwrap();
    let table = enumerate_views(3).unwrap();
    let mut rng = StdRng::seed_from_u64(11);
    for view in table.views() {
        let lq = local_quantities(view);
        let poly = cert.scaled_slack(view).unwrap();
        for _ in 0..5 {
            let r0 = ratio(rng.gen_range(1..30), rng.gen_range(1..7));
            let t0 = ratio(rng.gen_range(1..30), rng.gen_range(1..7));
            let lam = Rational::from_integer(1.into()) / (&t0 + Rational::from_integer(1.into()));
            let q = &r0 + int(3);
            let slack = cert.slack(&lq).eval(&point(&[(Var::Lam, lam), (Var::Q, q)])).unwrap();
            let scaled = poly.eval(&point(&[(Var::R, r0.clone()), (Var::T, t0.clone())])).unwrap();
            assert_eq!(slack.is_zero(), scaled.is_zero());
            assert_eq!(slack.is_positive(), scaled.is_positive());
        }
    }
}

#[test]
fn k4_beats_sampled_views_at_four_colors() {
    let max = MaxCertifier::new().unwrap();
    let table = enumerate_views(3).unwrap();
    let at = point(&[(Var::Lam, ratio(1, 3)), (Var::Q, int(4))]);
    for view in table.views().iter().step_by(7).take(5) {
        let d = max.difference(&local_quantities(view)).eval(&at).unwrap();
        assert!(d.is_positive(), "{view}");
    }
}
