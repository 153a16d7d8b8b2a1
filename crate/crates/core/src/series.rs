//! Truncated exponential generating functions with polynomial coefficients.
//!
//! A series of order `N` stores `c_0 .. c_N` and represents
//! `f(t) = sum c_n t^n / n!`. Multiplication is therefore a binomial
//! convolution of the coefficient sequences.

use std::fmt;

use crate::bell::bell_partial;
use crate::comb::{falling_int, BinomialTable};
use crate::error::{Error, Result};
use crate::poly::{falling_factorial, MultiPoly, Var};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EgfSeries<C> {
    coeffs: Vec<MultiPoly<C>>,
}

impl<C: Scalar> EgfSeries<C> {
    /// Zero series of the given truncation order.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![MultiPoly::zero(); order + 1] }
    }

    /// The unit series `1`.
    pub fn unit(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// The series `t^r` (EGF coefficient `r!` at index `r`).
    pub fn t_power(r: usize, order: usize) -> Result<Self> {
        Self::unit(order).shift(r)
    }

    pub fn from_coeffs(coeffs: Vec<MultiPoly<C>>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the order-0 coefficient");
        Self { coeffs }
    }

    /// Degenerate exponential `e_lambda^{x_expr}(t)`: coefficient `n` is the
    /// generalized falling factorial `(x_expr)_{n,lambda}`.
    pub fn degenerate_exp(x_expr: &MultiPoly<C>, order: usize) -> Self {
        let lam = MultiPoly::var(Var::Lambda);
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(MultiPoly::one());
        let mut factor = x_expr.clone();
        for _ in 1..=order {
            let next = coeffs.last().unwrap().mul(&factor);
            coeffs.push(next);
            factor = factor.sub(&lam);
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly<C> {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly<C>] {
        &self.coeffs
    }

    /// Drop coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch { left: order, right: self.order() });
        }
        Ok(Self { coeffs: self.coeffs[..=order].to_vec() })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &C) -> Self {
        Self { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Binomial convolution: `(f g)_n = sum_k C(n,k) f_k g_{n-k}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n_max = self.order();
        let binom = BinomialTable::<C>::new(n_max);
        let mut coeffs = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = MultiPoly::zero();
            for k in 0..=n {
                let (f, g) = (&self.coeffs[k], &other.coeffs[n - k]);
                if f.is_zero() || g.is_zero() {
                    continue;
                }
                acc = acc.add(&f.mul(g).scale(binom.at(n, k)));
            }
            coeffs.push(acc);
        }
        Ok(Self { coeffs })
    }

    /// Multiplicative inverse. The order-0 coefficient must be a nonzero
    /// scalar constant.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .as_constant()
            .ok_or_else(|| Error::NonInvertible(format!(
                "leading coefficient `{}` is not a constant",
                self.coeffs[0]
            )))?;
        if c0.is_zero() {
            return Err(Error::NonInvertible("leading coefficient is zero".into()));
        }
        let n_max = self.order();
        let binom = BinomialTable::<C>::new(n_max);
        let inv0 = C::one() / c0;
        let mut coeffs = vec![MultiPoly::constant(inv0.clone())];
        for n in 1..=n_max {
            let mut acc = MultiPoly::zero();
            for k in 1..=n {
                let f = &self.coeffs[k];
                if f.is_zero() || coeffs[n - k].is_zero() {
                    continue;
                }
                acc = acc.add(&f.mul(&coeffs[n - k]).scale(binom.at(n, k)));
            }
            coeffs.push(acc.scale(&-inv0.clone()));
        }
        Ok(Self { coeffs })
    }

    /// Symbolic power `f^a` for a series with constant term exactly 1:
    /// coefficient `n >= 1` is `sum_{k=1}^{n} (a)_k B_{n,k}(f_1, ..., f_{n-k+1})`
    /// with `(a)_k` the step-1 falling factorial of the exponent.
    pub fn pow_alpha(&self, a: &MultiPoly<C>) -> Result<Self> {
        if self.coeffs[0] != MultiPoly::one() {
            return Err(Error::LeadingTermNotOne(self.coeffs[0].to_string()));
        }
        let n_max = self.order();
        let one = MultiPoly::one();
        let mut exp_ff = Vec::with_capacity(n_max + 1);
        exp_ff.push(MultiPoly::<C>::one());
        let mut factor = a.clone();
        for _ in 1..=n_max {
            let next = exp_ff.last().unwrap().mul(&factor);
            exp_ff.push(next);
            factor = factor.sub(&one);
        }
        let mut coeffs = vec![MultiPoly::one()];
        for n in 1..=n_max {
            let mut acc = MultiPoly::zero();
            for k in 1..=n {
                let args = &self.coeffs[1..=(n - k + 1)];
                let b = bell_partial(n as u32, k as u32, args)
                    .expect("k <= n and arguments sized by construction");
                if b.is_zero() {
                    continue;
                }
                acc = acc.add(&exp_ff[k].mul(&b));
            }
            coeffs.push(acc);
        }
        Ok(Self { coeffs })
    }

    /// Integer power by repeated multiplication.
    pub fn pow_int(&self, m: u32) -> Result<Self> {
        let mut acc = Self::unit(self.order());
        for _ in 0..m {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplication by `t^r`: coefficient `n` becomes `(n)_r f_{n-r}`;
    /// zero below index `r`. The truncation order is preserved.
    pub fn shift(&self, r: usize) -> Result<Self> {
        if r > self.order() {
            return Err(Error::ShiftBeyondOrder { shift: r, order: self.order() });
        }
        let mut coeffs = vec![MultiPoly::zero(); r];
        for n in r..=self.order() {
            coeffs.push(self.coeffs[n - r].scale(&falling_int(n as i64, r as u32)));
        }
        Ok(Self { coeffs })
    }
}

impl<C: Scalar> fmt::Display for EgfSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{n}: {c}")?;
        }
        Ok(())
    }
}

/// `(e_lambda(t) + 1) / 2`, the normalized denominator series: constant term
/// 1, coefficient `n >= 1` equal to `(1)_{n,lambda} / 2`.
pub fn half_exp_plus_one<C: Scalar>(order: usize) -> EgfSeries<C> {
    let e = EgfSeries::degenerate_exp(&MultiPoly::one(), order);
    e.add(&EgfSeries::unit(order))
        .expect("orders match by construction")
        .scale(&C::one_half())
}

/// Step-1 falling factorial of a polynomial, `(p)_n`.
pub fn falling_step1<C: Scalar>(p: &MultiPoly<C>, n: u32) -> MultiPoly<C> {
    falling_factorial(p, n, &MultiPoly::one())
}
