//! Constructors for the named polynomial families.
//!
//! Every family comes out of its generating function; where a closed form
//! exists as well, both routes are exposed and their agreement is checked by
//! the identity suite and the tests. Conventions:
//!
//! * `x` stays symbolic unless a caller substitutes for it;
//! * the degeneracy parameter `lambda` is always symbolic;
//! * the order parameter `alpha` is a polynomial indeterminate, so
//!   specialization (including to negative integers) is a substitution.

use crate::bell::bell_partial;
use crate::comb::{binomial, factorial};
use crate::error::{Error, Result};
use crate::poly::{falling_factorial, MultiPoly, Var};
use crate::scalar::{pow_int, Scalar};
use crate::series::{half_exp_plus_one, EgfSeries};

fn x_var<C: Scalar>() -> MultiPoly<C> {
    MultiPoly::var(Var::X)
}

fn lambda_var<C: Scalar>() -> MultiPoly<C> {
    MultiPoly::var(Var::Lambda)
}

fn alpha_var<C: Scalar>() -> MultiPoly<C> {
    MultiPoly::var(Var::Alpha)
}

/// `((e_lambda(t)+1)/2)^{-exponent} e_lambda^{x_expr}(t)`: the common shape
/// of every Euler-type generating function here.
pub fn euler_power_series<C: Scalar>(
    x_expr: &MultiPoly<C>,
    exponent: &MultiPoly<C>,
    order: usize,
) -> EgfSeries<C> {
    let base = half_exp_plus_one(order)
        .pow_alpha(&exponent.negate())
        .expect("constant term is 1 by construction");
    base.mul(&EgfSeries::degenerate_exp(x_expr, order))
        .expect("orders match by construction")
}

/// Degenerate Euler polynomial series `2/(e_lambda(t)+1) e_lambda^{x}(t)`,
/// computed by series inversion (order-1 route).
pub fn euler_series<C: Scalar>(x_expr: &MultiPoly<C>, order: usize) -> EgfSeries<C> {
    let inv = half_exp_plus_one(order)
        .inverse()
        .expect("constant term is 1 by construction");
    inv.mul(&EgfSeries::degenerate_exp(x_expr, order))
        .expect("orders match by construction")
}

/// Order-`alpha` degenerate Euler series with symbolic `alpha`.
pub fn euler_order_series<C: Scalar>(x_expr: &MultiPoly<C>, order: usize) -> EgfSeries<C> {
    euler_power_series(x_expr, &alpha_var(), order)
}

/// Generalized degenerate Euler-Genocchi series
/// `2 t^r/(e_lambda(t)+1) e_lambda^{x}(t)`, built as an honest product with
/// the `t^r` series.
pub fn aeg_series<C: Scalar>(x_expr: &MultiPoly<C>, r: u32, order: usize) -> Result<EgfSeries<C>> {
    let t_r = EgfSeries::t_power(r as usize, order)?;
    euler_series(x_expr, order).mul(&t_r)
}

/// Order-`alpha` generalized degenerate Euler-Genocchi series
/// `t^r (2/(e_lambda(t)+1))^alpha e_lambda^{x}(t)` with symbolic `alpha`.
pub fn aeg_order_series<C: Scalar>(
    x_expr: &MultiPoly<C>,
    r: u32,
    order: usize,
) -> Result<EgfSeries<C>> {
    let t_r = EgfSeries::t_power(r as usize, order)?;
    euler_order_series(x_expr, order).mul(&t_r)
}

/// Degenerate Genocchi series of nonnegative integer order `rho`:
/// `(2t/(e_lambda(t)+1))^rho e_lambda^{x}(t) = t^rho (2/(e+1))^rho e^x`.
pub fn genocchi_order_series<C: Scalar>(
    x_expr: &MultiPoly<C>,
    rho: u32,
    order: usize,
) -> Result<EgfSeries<C>> {
    euler_power_series(x_expr, &MultiPoly::from_int(rho as i64), order).shift(rho as usize)
}

/// Order-`alpha` degenerate Euler polynomial (symbolic `alpha`); with
/// `with_x = false` the number variant (`x = 0`).
pub fn euler_order_poly<C: Scalar>(n: u32, with_x: bool) -> MultiPoly<C> {
    let x_expr = if with_x { x_var() } else { MultiPoly::zero() };
    euler_order_series(&x_expr, n as usize).coeff(n as usize).clone()
}

/// Degenerate Genocchi polynomial of integer order `rho` (symbolic `x`).
pub fn genocchi_order_poly<C: Scalar>(n: u32, rho: u32) -> MultiPoly<C> {
    let order = (n as usize).max(rho as usize);
    genocchi_order_series(&x_var(), rho, order)
        .expect("rho <= order by construction")
        .coeff(n as usize)
        .clone()
}

/// Generalized degenerate Euler-Genocchi polynomial `A^{(r)}_{n,lambda}(x)`.
pub fn aeg_poly<C: Scalar>(n: u32, r: u32) -> MultiPoly<C> {
    let order = (n as usize).max(r as usize);
    aeg_series(&x_var(), r, order)
        .expect("r <= order by construction")
        .coeff(n as usize)
        .clone()
}

/// Order-`alpha` generalized degenerate Euler-Genocchi polynomial
/// `A^{(r,alpha)}_{n,lambda}(x)` with symbolic `alpha`.
pub fn aeg_order_poly<C: Scalar>(n: u32, r: u32) -> MultiPoly<C> {
    let order = (n as usize).max(r as usize);
    aeg_order_series(&x_var(), r, order)
        .expect("r <= order by construction")
        .coeff(n as usize)
        .clone()
}

/// Computation route for the degenerate Stirling numbers of the second kind.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stirling2Mode {
    /// Alternating binomial sum `1/k! sum_j C(k,j) (-1)^{k-j} (j)_{n,lambda}`.
    ExplicitSum,
    /// Incomplete Bell polynomial at `(1)_{1,lambda}, (1)_{2,lambda}, ...`.
    BellRoute,
}

/// Degenerate Stirling number of the second kind `S_{2,lambda}(n,k)` as a
/// polynomial in `lambda`.
pub fn stirling2_deg<C: Scalar>(n: u32, k: u32, mode: Stirling2Mode) -> Result<MultiPoly<C>> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    match mode {
        Stirling2Mode::ExplicitSum => {
            let lam = lambda_var();
            let mut acc = MultiPoly::zero();
            for j in 0..=k {
                let sign = if (k - j).is_multiple_of(2) { C::one() } else { -C::one() };
                let coeff = binomial::<C>(k, j as i64) * sign;
                let ff = falling_factorial(&MultiPoly::from_int(j as i64), n, &lam);
                acc = acc.add(&ff.scale(&coeff));
            }
            Ok(acc.scale(&(C::one() / factorial::<C>(k))))
        }
        Stirling2Mode::BellRoute => {
            let lam = lambda_var();
            let args: Vec<MultiPoly<C>> = (1..=(n - k + 1))
                .map(|i| falling_factorial(&MultiPoly::one(), i, &lam))
                .collect();
            bell_partial(n, k, &args)
        }
    }
}

/// Computation route for the alternating degenerate power sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AltSumMode {
    /// Literal alternating sum `sum_{i=0}^{n} (-1)^i (i)_{k,lambda}`.
    Direct,
    /// Euler-polynomial closed form
    /// `(E_{k,lambda} + (-1)^n E_{k,lambda}(n+1)) / 2`.
    Closed,
    /// Parity-split closed forms in terms of Stirling numbers; requires
    /// `k >= 1`.
    Parity,
}

/// Alternating degenerate power sum `T_{k,lambda}(n)` as a polynomial in
/// `lambda`.
pub fn alt_power_sum<C: Scalar>(k: u32, n: u32, mode: AltSumMode) -> Result<MultiPoly<C>> {
    let lam = lambda_var();
    match mode {
        AltSumMode::Direct => {
            let mut acc = MultiPoly::zero();
            for i in 0..=n {
                let ff = falling_factorial(&MultiPoly::from_int(i as i64), k, &lam);
                acc = if i.is_multiple_of(2) { acc.add(&ff) } else { acc.sub(&ff) };
            }
            Ok(acc)
        }
        AltSumMode::Closed => {
            let numbers = euler_series(&MultiPoly::zero(), k as usize);
            let at_np1 = euler_series(&MultiPoly::from_int(n as i64 + 1), k as usize);
            let signed = if n.is_multiple_of(2) {
                at_np1.coeff(k as usize).clone()
            } else {
                at_np1.coeff(k as usize).negate()
            };
            Ok(numbers.coeff(k as usize).add(&signed).scale(&C::one_half()))
        }
        AltSumMode::Parity => {
            if k == 0 {
                return Err(Error::ParityRequiresPositiveK);
            }
            if n.is_multiple_of(2) {
                alt_sum_even_closed(k, n)
            } else {
                alt_sum_odd_closed(k, n)
            }
        }
    }
}

// T_{k,lambda}(2q) = (2q+1)_{k,lambda}/2
//   + 2 sum_{j=1}^{k} (-1)^j j! (1/2)^{j+1} S_{2,lambda}(k,j)
//   + sum_{j=1}^{k-1} C(k,j) (2q+1)_{k-j,lambda}
//       sum_{i=1}^{j} (-1)^i i! (1/2)^{i+1} S_{2,lambda}(j,i)
fn alt_sum_even_closed<C: Scalar>(k: u32, n: u32) -> Result<MultiPoly<C>> {
    let lam = lambda_var();
    let np1 = MultiPoly::from_int(n as i64 + 1);
    let half = C::one_half();

    let inner = |j: u32| -> MultiPoly<C> {
        let mut acc = MultiPoly::zero();
        for i in 1..=j {
            let sign = if i.is_multiple_of(2) { C::one() } else { -C::one() };
            let c = sign * factorial::<C>(i) * pow_int(&half, i as i64 + 1);
            let s = stirling2_deg(j, i, Stirling2Mode::ExplicitSum)
                .expect("i <= j in range");
            acc = acc.add(&s.scale(&c));
        }
        acc
    };

    let mut out = falling_factorial(&np1, k, &lam).scale(&half);
    out = out.add(&inner(k).scale(&C::from_int(2)));
    for j in 1..k {
        let ff = falling_factorial(&np1, k - j, &lam);
        out = out.add(&ff.mul(&inner(j)).scale(&binomial::<C>(k, j as i64)));
    }
    Ok(out)
}

// T_{k,lambda}(2q+1) = -2^{k-1} (q+1)_{k,lambda/2}
//   - sum_{j=1}^{k-1} C(k,j) (q+1)_{k-j,lambda/2}
//       sum_{i=1}^{j} (-1)^i i! 2^{k-j-i-1} S_{2,lambda}(j,i)
fn alt_sum_odd_closed<C: Scalar>(k: u32, n: u32) -> Result<MultiPoly<C>> {
    let q = (n - 1) / 2;
    let half_lam = lambda_var().scale(&C::one_half());
    let qp1 = MultiPoly::from_int(q as i64 + 1);
    let two = C::from_int(2);

    let mut out = falling_factorial(&qp1, k, &half_lam)
        .scale(&-pow_int(&two, k as i64 - 1));
    for j in 1..k {
        let mut inner = MultiPoly::zero();
        for i in 1..=j {
            let sign = if i.is_multiple_of(2) { C::one() } else { -C::one() };
            let c = sign
                * factorial::<C>(i)
                * pow_int(&two, k as i64 - j as i64 - i as i64 - 1);
            let s = stirling2_deg(j, i, Stirling2Mode::ExplicitSum)
                .expect("i <= j in range");
            inner = inner.add(&s.scale(&c));
        }
        let ff = falling_factorial(&qp1, k - j, &half_lam);
        out = out.sub(&ff.mul(&inner).scale(&binomial::<C>(k, j as i64)));
    }
    Ok(out)
}

/// Degenerate Euler numbers through the Stirling expansion:
/// `E_{0,lambda} = 1` and, for `n >= 1`,
/// `E_{n,lambda} = sum_{k=1}^{n} (-1)^k k! (1/2)^k S_{2,lambda}(n,k)`.
pub fn euler_numbers_stirling_route<C: Scalar>(n: u32) -> MultiPoly<C> {
    if n == 0 {
        return MultiPoly::one();
    }
    let half = C::one_half();
    let mut acc = MultiPoly::zero();
    for k in 1..=n {
        let sign = if k.is_multiple_of(2) { C::one() } else { -C::one() };
        let c = sign * factorial::<C>(k) * pow_int(&half, k as i64);
        let s = stirling2_deg::<C>(n, k, Stirling2Mode::ExplicitSum).expect("k <= n in range");
        acc = acc.add(&s.scale(&c));
    }
    acc
}
