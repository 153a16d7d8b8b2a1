//! Acceptance suite. Each test drives one criterion end to end and prints
//! one `criterion N PASS/FAIL` line (visible with `--nocapture`). All
//! comparisons are exact polynomial equalities; there are no tolerances.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::process::Command;
use std::time::Instant;

use degenpoly::families::{self, AltSumMode, Stirling2Mode};
use degenpoly::identity::{
    run_check, run_check_with_constants, AlphaMode, CheckConstants, CheckStatus, IdentityId,
    ParamGrid,
};
use degenpoly::poly::Var;
use degenpoly::scalar::Scalar;
use degenpoly::series::half_exp_plus_one;
use degenpoly::{comb, EgfSeries, Poly, Rat, Series};

fn criterion(n: u32, what: &str, body: impl FnOnce() + UnwindSafe) {
    let result = catch_unwind(body);
    match &result {
        Ok(()) => println!("criterion {n} PASS: {what}"),
        Err(_) => println!("criterion {n} FAIL: {what}"),
    }
    if let Err(cause) = result {
        resume_unwind(cause);
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_degenpoly"))
}

const SWEEP_ARGS: [&str; 11] = [
    "verify", "--identity", "all", "--n-max", "10", "--r-max", "3", "--m", "1,3,5", "--k-max",
    "10",
];

#[test]
fn acceptance_1_full_identity_sweep() {
    criterion(1, "full identity sweep, exact equality, under 60 s", || {
        let start = Instant::now();
        let out = bin().args(SWEEP_ARGS).output().expect("binary runs");
        let elapsed = start.elapsed();
        assert_eq!(out.status.code(), Some(0), "sweep exit code");
        let reports: serde_json::Value =
            serde_json::from_slice(&out.stdout).expect("JSON report");
        let reports = reports.as_array().unwrap();
        assert_eq!(reports.len(), 20, "whole catalog swept");
        for report in reports {
            assert_eq!(report["status"], "pass", "{}", report["identity"]);
        }
        assert!(elapsed.as_secs() < 60, "sweep took {elapsed:?}");
    });
}

#[test]
fn acceptance_2_dual_route_agreement() {
    criterion(2, "Stirling and alternating-sum routes agree", || {
        for n in 0..=10u32 {
            for k in 0..=n {
                assert_eq!(
                    families::stirling2_deg::<Rat>(n, k, Stirling2Mode::ExplicitSum).unwrap(),
                    families::stirling2_deg::<Rat>(n, k, Stirling2Mode::BellRoute).unwrap(),
                    "stirling n={n} k={k}"
                );
            }
        }
        for k in 0..=10u32 {
            for n in 0..=10u32 {
                assert_eq!(
                    families::alt_power_sum::<Rat>(k, n, AltSumMode::Direct).unwrap(),
                    families::alt_power_sum::<Rat>(k, n, AltSumMode::Closed).unwrap(),
                    "closed k={k} n={n}"
                );
            }
        }
        for k in 1..=10u32 {
            for n in 0..=6u32 {
                assert_eq!(
                    families::alt_power_sum::<Rat>(k, n, AltSumMode::Direct).unwrap(),
                    families::alt_power_sum::<Rat>(k, n, AltSumMode::Parity).unwrap(),
                    "parity k={k} n={n}"
                );
            }
        }
    });
}

// --- independent brute-force oracle over ordinary power series ---------

fn exp_series(order: usize) -> Vec<Rat> {
    let mut out = vec![Rat::from_int(1)];
    let mut inv_fact = Rat::from_int(1);
    for n in 1..=order {
        inv_fact /= Rat::from_int(n as i64);
        out.push(inv_fact.clone());
    }
    out
}

fn mul_series(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    (0..a.len())
        .map(|n| {
            let mut acc = Rat::from_int(0);
            for k in 0..=n {
                acc += a[k].clone() * b[n - k].clone();
            }
            acc
        })
        .collect()
}

fn inverse_series(a: &[Rat]) -> Vec<Rat> {
    let inv0 = Rat::from_int(1) / a[0].clone();
    let mut out = vec![inv0.clone()];
    for n in 1..a.len() {
        let mut acc = Rat::from_int(0);
        for k in 1..=n {
            acc += a[k].clone() * out[n - k].clone();
        }
        out.push(-inv0.clone() * acc);
    }
    out
}

fn rat_factorial(n: usize) -> Rat {
    comb::factorial::<Rat>(n as u32)
}

#[test]
fn acceptance_3_classical_limit_oracle() {
    criterion(3, "lambda = 0 collapses to brute-force classical values", || {
        let order = 10usize;
        let mut e_plus_1 = exp_series(order);
        e_plus_1[0] = e_plus_1[0].clone() + Rat::from_int(1);
        let two_over = inverse_series(&e_plus_1)
            .iter()
            .map(|c| c.clone() * Rat::from_int(2))
            .collect::<Vec<_>>();

        let at_zero = |p: &Poly| -> Rat {
            p.substitute(Var::Lambda, &Poly::zero())
                .as_constant()
                .expect("constant after lambda = 0")
        };

        // Euler numbers: n! [t^n] 2/(e^t+1)
        let euler = families::euler_series(&Poly::zero(), order);
        for n in 0..=order {
            assert_eq!(
                at_zero(euler.coeff(n)),
                two_over[n].clone() * rat_factorial(n),
                "euler n={n}"
            );
        }

        // Genocchi numbers: n! [t^n] 2t/(e^t+1)
        let genocchi = families::genocchi_order_series(&Poly::zero(), 1, order).unwrap();
        for n in 0..=order {
            let expected = if n == 0 {
                Rat::from_int(0)
            } else {
                two_over[n - 1].clone() * rat_factorial(n)
            };
            assert_eq!(at_zero(genocchi.coeff(n)), expected, "genocchi n={n}");
        }

        // Stirling numbers: n! [t^n] (e^t-1)^k / k!
        let mut em1 = exp_series(order);
        em1[0] = Rat::from_int(0);
        let mut pow = vec![Rat::from_int(0); order + 1];
        pow[0] = Rat::from_int(1);
        for k in 0..=order {
            if k > 0 {
                pow = mul_series(&pow, &em1);
            }
            for n in k..=order {
                let s = families::stirling2_deg::<Rat>(
                    n as u32,
                    k as u32,
                    Stirling2Mode::ExplicitSum,
                )
                .unwrap();
                assert_eq!(
                    at_zero(&s),
                    pow[n].clone() * rat_factorial(n) / rat_factorial(k),
                    "stirling n={n} k={k}"
                );
            }
        }
    });
}

#[test]
fn acceptance_4_symbolic_power_consistency() {
    criterion(4, "symbolic power specialized at 1..4 equals repeated products", || {
        let order = 12usize;
        let bases = [
            half_exp_plus_one::<Rat>(order),
            EgfSeries::degenerate_exp(&Poly::var(Var::X), order),
        ];
        for base in bases {
            let symbolic = base.pow_alpha(&Poly::var(Var::Alpha)).unwrap();
            let mut power = Series::unit(order);
            for m in 1..=4i64 {
                power = power.mul(&base).unwrap();
                let at_m = Poly::from_int(m);
                for n in 0..=order {
                    assert_eq!(
                        symbolic.coeff(n).substitute(Var::Alpha, &at_m),
                        power.coeff(n).clone(),
                        "m={m} n={n}"
                    );
                }
                assert_eq!(base.pow_alpha(&at_m).unwrap(), power, "integer exponent m={m}");
            }
        }
    });
}

#[test]
fn acceptance_5_generating_function_vs_closed_form() {
    criterion(5, "r-shifted order-alpha family equals its Euler closed form", || {
        let order = 16usize;
        let x = Poly::var(Var::X);
        let euler_alpha = families::euler_order_series(&x, order);
        for r in 0..=4u32 {
            let a = families::aeg_order_series(&x, r, order).unwrap();
            for n in 0..=12u32 {
                let lhs = a.coeff(n as usize);
                let rhs = if n < r {
                    Poly::zero()
                } else {
                    euler_alpha
                        .coeff((n - r) as usize)
                        .scale(&comb::falling_int::<Rat>(n as i64, r))
                };
                assert_eq!(lhs, &rhs, "n={n} r={r}");
            }
        }
    });
}

#[test]
fn acceptance_6_mutation_sensitivity() {
    criterion(6, "perturbing one constant makes the designated checks fail", || {
        let grid = ParamGrid::new(4, 2, vec![1, 3], AlphaMode::Symbolic, 4).unwrap();
        let perturbed = CheckConstants { half: Rat::from_ratio(1, 3) };
        for id in [
            IdentityId::T1,
            IdentityId::T3,
            IdentityId::T6,
            IdentityId::T9,
            IdentityId::T10,
        ] {
            assert!(run_check(id, &grid).passed(), "{id} must pass unperturbed");
            let report = run_check_with_constants(id, &grid, &perturbed);
            assert_eq!(report.status, CheckStatus::Fail, "{id} vacuous under mutation");
            let cex = report.first_counterexample.expect("counterexample recorded");
            let small_index = cex
                .params
                .iter()
                .filter(|(name, _)| name == "n" || name == "k")
                .all(|(_, v)| v.parse::<u32>().unwrap() <= 4);
            assert!(small_index, "{id} only failed late: {:?}", cex.params);
        }
    });
}

#[test]
fn acceptance_7_determinism() {
    criterion(7, "two full sweeps produce byte-identical JSON reports", || {
        let dir = tempfile::tempdir().unwrap();
        let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
        for path in [&a, &b] {
            let out = bin()
                .args(SWEEP_ARGS)
                .args(["--out", path.to_str().unwrap()])
                .output()
                .expect("binary runs");
            assert_eq!(out.status.code(), Some(0));
        }
        let bytes_a = std::fs::read(&a).unwrap();
        let bytes_b = std::fs::read(&b).unwrap();
        assert!(!bytes_a.is_empty());
        assert_eq!(bytes_a, bytes_b);
    });
}
