//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so each line is printed as it completes.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gammadist_core::converse::{converse_decide, twist_scan, ConverseOutcome};
use gammadist_core::gamma::tate_gamma_unitary;
use gammadist_core::involution::Involution;
use gammadist_core::matrix::{
    a_part_distance, fit_log_bound, kah_decompose, monomial_matrix, orbit_involution,
    twisted_action, unipotent_probe, Order, XPoint,
};
use gammadist_core::sample::{self, seeded};
use gammadist_core::scalar::rational;
use gammadist_core::strata::{
    inversion_set, kappa_solutions, normal_space_check, sample_balanced_lambda, sample_lambda,
};
use gammadist_core::*;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::Rng;

struct Report {
    pass: bool,
    detail: String,
}

fn criterion(id: u32, name: &str, budget: Option<Duration>, body: impl FnOnce() -> Report) -> bool {
    let start = Instant::now();
    let report = body();
    let elapsed = start.elapsed();
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let pass = report.pass && in_time;
    let timing = match budget {
        Some(b) => format!("{:.2} s of {} s", elapsed.as_secs_f64(), b.as_secs()),
        None => format!("{:.2} s", elapsed.as_secs_f64()),
    };
    println!(
        "criterion {id} {:<4} {name}: {} ({timing}{})",
        if pass { "PASS" } else { "FAIL" },
        report.detail,
        if in_time { "" } else { ", over budget" }
    );
    pass
}

fn rankin_selberg() -> Report {
    let mut rng = seeded(101);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let (t, r) = (rng.random_range(1..=6), rng.random_range(1..=6));
        let chi = common::certified_character(t, &mut rng, 3, 16);
        let chi2 = common::certified_character(r, &mut rng, 3, 16);
        worst = worst.max(rs_gamma(&chi, &chi2, &Scalar::ratio(1, 2)).defect());
    }
    Report {
        pass: worst < 1e-9,
        detail: format!("200 certified pairs, max |gamma - 1| = {worst:.2e}"),
    }
}

fn functional_equation() -> Report {
    let (mut worst, mut points, mut skipped) = (0.0f64, 0usize, 0usize);
    let one = Complex64::new(1.0, 0.0);
    for a in 0..10 {
        for b in 0..5 {
            for k in -8i64..=8 {
                for c in 0..12 {
                    let s = Scalar::float(
                        -2.0 + 0.5 * a as f64 + 0.0173,
                        -2.0 + 1.0 * b as f64 + 0.031,
                    );
                    let sigma = Scalar::float(
                        -0.95 + 0.16 * c as f64 + 0.0071,
                        0.37 * (c % 5) as f64 - 0.74,
                    );
                    match tate_fe_defect(&s, &Character::new(sigma, k)) {
                        Ok(d) => {
                            worst = worst.max((d - one).norm());
                            points += 1;
                        }
                        Err(_) => skipped += 1,
                    }
                }
            }
        }
    }
    Report {
        pass: worst < 1e-9 && points >= 10_000,
        detail: format!(
            "{points} grid points ({skipped} at poles skipped), max |defect - 1| = {worst:.2e}"
        ),
    }
}

fn epsilon_signs() -> Report {
    let mut worst: f64 = 0.0;
    for m in -50i64..=50 {
        let eps = if m < 0 && m % 2 != 0 { -1.0 } else { 1.0 };
        worst = worst.max(
            (tate_gamma_unitary(Complex64::new(0.5, 0.0), m).value() - Complex64::new(eps, 0.0))
                .norm(),
        );
    }
    Report {
        pass: worst < 1e-12,
        detail: format!("|m| <= 50, max |gamma(1/2, c_m) - eps_m| = {worst:.2e}"),
    }
}

fn converse_cross_oracle() -> Report {
    let mut rng = seeded(404);
    let (mut disagreements, mut certified, mut counterexamples, mut weak) = (0, 0, 0, 0);
    let mut min_defect = f64::INFINITY;
    for _ in 0..1000 {
        let chi = common::mixed_character(rng.random_range(1..=6), &mut rng);
        let direct = find_involution(&chi, MatchMode::Exact)
            .expect("exact input")
            .is_certified();
        let outcome = converse_decide(&chi).expect("in strip");
        if outcome.is_certified() != direct {
            disagreements += 1;
        }
        match outcome {
            ConverseOutcome::Certified { .. } => certified += 1,
            ConverseOutcome::Counterexample { m, .. } => {
                counterexamples += 1;
                let defect = twist_scan(&chi, m, m).expect("scan").entries[0].defect;
                min_defect = min_defect.min(defect);
                if defect <= 0.5 {
                    weak += 1;
                }
            }
        }
    }
    Report {
        pass: disagreements == 0 && weak == 0,
        detail: format!(
            "1000 characters ({certified} certified, {counterexamples} refuted), {disagreements} disagreements, \
             {weak} counterexamples with |gamma - 1| <= 0.5, min counterexample defect {min_defect:.3}"
        ),
    }
}

fn kah() -> Report {
    let mut rng = seeded(505);
    let (mut recon, mut invariance, mut failures) = (0.0f64, 0.0f64, 0);
    for trial in 0..500 {
        let n = 1 + trial % 8;
        let g = sample::with_condition(n, rng.random_range(0.0..=6.0), &mut rng);
        let order = if trial % 2 == 0 {
            Order::Kah
        } else {
            Order::Hak
        };
        match kah_decompose(&g, order) {
            Ok(d) => recon = recon.max(d.relative_error(&g)),
            Err(_) => failures += 1,
        }
        let k = sample::unitary(n, &mut rng);
        let h = sample::real_invertible(n, &mut rng).map(|x| Complex64::new(x, 0.0));
        match a_part_distance(&g, &(k * &g * h)) {
            Ok(d) => invariance = invariance.max(d),
            Err(_) => failures += 1,
        }
    }
    Report {
        pass: failures == 0 && recon <= 1e-10 && invariance <= 1e-8,
        detail: format!(
            "500 matrices n <= 8, max reconstruction {recon:.2e}, max A+ drift {invariance:.2e}, {failures} failures"
        ),
    }
}

fn orbit_recovery() -> Report {
    let mut rng = seeded(606);
    let (mut total, mut recovered) = (0, 0);
    for n in 1..=4 {
        for w in Involution::all(n) {
            for _ in 0..20 {
                total += 1;
                let d = sample::admissible_diagonal(&w, &mut rng);
                let b = sample::borel(n, &mut rng);
                let x = twisted_action(&b, &monomial_matrix(&d, &w).expect("sizes"))
                    .expect("invertible");
                let found = XPoint::new(x, 1e-9).and_then(|p| orbit_involution(&p));
                if found.as_ref() == Ok(&w) {
                    recovered += 1;
                }
            }
        }
    }
    Report {
        pass: recovered == total,
        detail: format!("{recovered}/{total} orbits recovered for n <= 4"),
    }
}

fn normal_space() -> Report {
    let mut rng = seeded(707);
    let (mut total, mut matched, mut at_five) = (0, 0, 0);
    let mut mismatches = Vec::new();
    for n in 1..=5 {
        for w in Involution::all(n) {
            total += 1;
            at_five += usize::from(n == 5);
            match normal_space_check(&w, &mut rng) {
                Ok(r) if r.matches() && r.tangent_dimension == n * n => matched += 1,
                other => mismatches.push(format!("{w}: {other:?}")),
            }
        }
    }
    Report {
        pass: matched == total && at_five == 26,
        detail: format!(
            "{matched}/{total} involutions (26 expected at n = 5, got {at_five}); real dimension |I_w| and weights t_i/t_j over I_w{}",
            if mismatches.is_empty() { String::new() } else { format!("; first mismatch {}", mismatches[0]) }
        ),
    }
}

fn nudge<R: Rng>(lambda: &mut [BigRational], rng: &mut R) {
    let i = rng.random_range(0..lambda.len());
    let delta = rational(
        if rng.random_bool(0.5) { 1 } else { -1 },
        rng.random_range(1..=4),
    );
    lambda[i] += delta;
    lambda.sort_by(|a, b| b.cmp(a));
}

fn kappa_solver() -> Report {
    let mut rng = seeded(808);
    let (mut cases, mut mismatches, mut balanced) = (0, 0, 0);
    for w in Involution::all(4) {
        for k in 0..50 {
            let mut lambda = match k % 3 {
                2 => sample_lambda(4, &mut rng),
                _ => {
                    sample_balanced_lambda(&w, &mut rng).unwrap_or_else(|| vec![rational(0, 1); 4])
                }
            };
            if k % 3 == 1 {
                nudge(&mut lambda, &mut rng);
            }
            let report = kappa_solutions(&w, &lambda, 3).expect("sorted");
            cases += 1;
            balanced += usize::from(!report.predicted.is_empty());
            if !report.agrees() {
                mismatches += 1;
            }
        }
    }
    let sizes: Vec<usize> = Involution::all(4)
        .iter()
        .map(|w| inversion_set(w).len())
        .collect();
    Report {
        pass: mismatches == 0 && cases == 500,
        detail: format!(
            "{cases} (w, lambda) cases over W_4,2 (|I_w| in {sizes:?}), {balanced} balanced, {mismatches} mismatches"
        ),
    }
}

fn probe() -> Report {
    let mut rng = seeded(909);
    let samples: Vec<_> = (0..10_000)
        .map(|i| {
            let n = 1 + i % 4;
            unipotent_probe(&sample::unipotent(n, 3.0, &mut rng)).expect("fundamental domain")
        })
        .collect();
    let fit = fit_log_bound(&samples, 1e-6);
    let (train, held) = samples.split_at(samples.len() / 2);
    let held_fit = fit_log_bound(train, 1e-6);
    let held_violations = held_fit.count_violations(held);
    let unit_violations = samples
        .iter()
        .filter(|s| s.norm_u.ln() > s.norm_v.ln() + 1e-6)
        .count();
    Report {
        pass: fit.violations == 0,
        detail: format!(
            "10^4 samples n <= 4, fit d = {:.4}, c = {:.4}, {} violations; held-out half: {held_violations} violations; \
             unit slope log|u| <= log|v|: {unit_violations} violations",
            fit.d, fit.c, fit.violations
        ),
    }
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let results = [
        criterion(1, "Rankin-Selberg factor at 1/2", secs(10), rankin_selberg),
        criterion(2, "Tate functional equation", secs(5), functional_equation),
        criterion(3, "unitary signs", None, epsilon_signs),
        criterion(4, "converse cross-oracle", None, converse_cross_oracle),
        criterion(5, "KAH decomposition", secs(30), kah),
        criterion(6, "orbit classification", None, orbit_recovery),
        criterion(7, "normal space", None, normal_space),
        criterion(8, "kappa solver", None, kappa_solver),
        criterion(9, "unipotent probe", None, probe),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
