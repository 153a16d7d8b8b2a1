//! At lambda = 0 the degenerate families collapse to their classical
//! counterparts. The expected values here come from a brute-force truncated
//! expansion of 2/(e^t+1), 2t/(e^t+1) and (e^t-1)^k/k! over ordinary power
//! series, written against plain coefficient vectors so it shares nothing
//! with the EGF engine.

use degenpoly::families::{self, Stirling2Mode};
use degenpoly::poly::Var;
use degenpoly::scalar::Scalar;
use degenpoly::{Poly, Rat};

// --- ordinary power series over Rat: f = sum a_n t^n -----------------

fn exp_series(order: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(order + 1);
    let mut inv_fact = Rat::from_int(1);
    out.push(inv_fact.clone());
    for n in 1..=order {
        inv_fact /= Rat::from_int(n as i64);
        out.push(inv_fact.clone());
    }
    out
}

fn mul_series(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let order = a.len() - 1;
    (0..=order)
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
    let order = a.len() - 1;
    let inv0 = Rat::from_int(1) / a[0].clone();
    let mut out = vec![inv0.clone()];
    for n in 1..=order {
        let mut acc = Rat::from_int(0);
        for k in 1..=n {
            acc += a[k].clone() * out[n - k].clone();
        }
        out.push(-inv0.clone() * acc);
    }
    out
}

fn factorial(n: usize) -> Rat {
    let mut acc = Rat::from_int(1);
    for i in 1..=n {
        acc *= Rat::from_int(i as i64);
    }
    acc
}

// n! [t^n] 2/(e^t + 1): the classical Euler numbers E_n(0)
fn classical_euler_numbers(order: usize) -> Vec<Rat> {
    let mut denom = exp_series(order);
    denom[0] = denom[0].clone() + Rat::from_int(1);
    let inv = inverse_series(&denom);
    (0..=order)
        .map(|n| Rat::from_int(2) * inv[n].clone() * factorial(n))
        .collect()
}

// n! [t^n] 2t/(e^t + 1): the classical Genocchi numbers
fn classical_genocchi_numbers(order: usize) -> Vec<Rat> {
    let euler = classical_euler_numbers(order);
    (0..=order)
        .map(|n| {
            if n == 0 {
                Rat::from_int(0)
            } else {
                // t shifts the coefficient and the normalization adds a
                // factor n: n! e_{n-1} / (n-1)! = n e_{n-1}
                euler[n - 1].clone() * Rat::from_int(n as i64)
            }
        })
        .collect()
}

// n! [t^n] (e^t - 1)^k / k!: the classical Stirling numbers S(n,k)
fn classical_stirling2(n: usize, k: usize) -> Rat {
    let mut em1 = exp_series(n);
    em1[0] = Rat::from_int(0);
    let mut pow = vec![Rat::from_int(0); n + 1];
    pow[0] = Rat::from_int(1);
    for _ in 0..k {
        pow = mul_series(&pow, &em1);
    }
    pow[n].clone() * factorial(n) / factorial(k)
}

// --- the comparisons --------------------------------------------------

fn at_lambda_zero(p: &Poly) -> Rat {
    p.substitute(Var::Lambda, &Poly::zero())
        .as_constant()
        .expect("lambda-only polynomial")
}

#[test]
fn euler_numbers_collapse() {
    let expected = classical_euler_numbers(10);
    let series = families::euler_series(&Poly::zero(), 10);
    for n in 0..=10usize {
        assert_eq!(at_lambda_zero(series.coeff(n)), expected[n], "n={n}");
    }
}

#[test]
fn genocchi_numbers_collapse() {
    let expected = classical_genocchi_numbers(10);
    let series = families::genocchi_order_series(&Poly::zero(), 1, 10).unwrap();
    for n in 0..=10usize {
        assert_eq!(at_lambda_zero(series.coeff(n)), expected[n], "n={n}");
    }
}

#[test]
fn stirling_numbers_collapse() {
    for n in 0..=10u32 {
        for k in 0..=n {
            let s = families::stirling2_deg::<Rat>(n, k, Stirling2Mode::ExplicitSum).unwrap();
            assert_eq!(
                at_lambda_zero(&s),
                classical_stirling2(n as usize, k as usize),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn known_classical_values() {
    // spot anchors for the oracle itself
    let euler = classical_euler_numbers(6);
    assert_eq!(euler[0], Rat::from_int(1));
    assert_eq!(euler[1], Rat::from_ratio(-1, 2));
    assert_eq!(euler[3], Rat::from_ratio(1, 4));
    let genocchi = classical_genocchi_numbers(6);
    assert_eq!(genocchi[1], Rat::from_int(1));
    assert_eq!(genocchi[2], Rat::from_int(-1));
    assert_eq!(genocchi[4], Rat::from_int(1));
    assert_eq!(genocchi[6], Rat::from_int(-3));
    assert_eq!(classical_stirling2(5, 3), Rat::from_int(25));
    assert_eq!(classical_stirling2(6, 2), Rat::from_int(31));
}
