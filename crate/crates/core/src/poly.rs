//! Sparse multivariate polynomials over an exact scalar in the fixed
//! indeterminate set `{x, lambda, alpha}`.
//!
//! Values are canonical by construction: no zero coefficient is ever stored
//! and terms live in a map ordered graded-lexicographically, so structural
//! equality is polynomial equality and rendering is deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// The three indeterminates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Lambda,
    Alpha,
}

/// Exponent triple of one monomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    pub x: u32,
    pub lambda: u32,
    pub alpha: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, lambda: 0, alpha: 0 };

    pub fn degree(&self) -> u32 {
        self.x + self.lambda + self.alpha
    }

    pub fn exp(&self, var: Var) -> u32 {
        match var {
            Var::X => self.x,
            Var::Lambda => self.lambda,
            Var::Alpha => self.alpha,
        }
    }

    fn with_exp(mut self, var: Var, e: u32) -> Monomial {
        match var {
            Var::X => self.x = e,
            Var::Lambda => self.lambda = e,
            Var::Alpha => self.alpha = e,
        }
        self
    }

    fn product(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x + other.x,
            lambda: self.lambda + other.lambda,
            alpha: self.alpha + other.alpha,
        }
    }
}

// Graded lexicographic order on (e_x, e_lambda, e_alpha): total degree
// first, then the exponent triple.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.x, self.lambda, self.alpha).cmp(&(
            other.degree(),
            other.x,
            other.lambda,
            other.alpha,
        ))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: map from monomial to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::constant(C::from_ratio(num, den))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::ONE.with_exp(v, 1), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::ONE)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, var: Var) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    fn insert_add(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, -c.clone());
        }
        out
    }

    pub fn negate(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_add(m1.product(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact substitution of `expr` for every occurrence of `var`.
    pub fn substitute(&self, var: Var, expr: &Self) -> Self {
        if !self.contains_var(var) {
            return self.clone();
        }
        let max_e = self.degree_in(var) as usize;
        let mut powers: Vec<Self> = Vec::with_capacity(max_e + 1);
        powers.push(Self::one());
        for _ in 1..=max_e {
            let next = powers.last().unwrap().mul(expr);
            powers.push(next);
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            let rest = Self::monomial(m.with_exp(var, 0), c.clone());
            out = out.add(&rest.mul(&powers[e]));
        }
        out
    }

    /// LaTeX rendering of the canonical form.
    pub fn latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = coeff.abs();
            let mag_str = {
                let s = mag.to_string();
                match s.split_once('/') {
                    Some((p, q)) => format!("\\tfrac{{{p}}}{{{q}}}"),
                    None => s,
                }
            };
            let vars = [
                (mono.alpha, "\\alpha"),
                (mono.lambda, "\\lambda"),
                (mono.x, "x"),
            ];
            let var_str: Vec<String> = vars
                .iter()
                .filter(|(e, _)| *e > 0)
                .map(|(e, name)| {
                    if *e == 1 {
                        (*name).to_string()
                    } else {
                        format!("{name}^{{{e}}}")
                    }
                })
                .collect();
            if var_str.is_empty() {
                out.push_str(&mag_str);
            } else {
                if !mag.is_one() {
                    out.push_str(&mag_str);
                    out.push(' ');
                }
                out.push_str(&var_str.join(" "));
            }
        }
        out
    }
}

/// `base (base - step) (base - 2 step) ... (base - (n-1) step)`; `1` at n = 0.
pub fn falling_factorial<C: Scalar>(
    base: &MultiPoly<C>,
    n: u32,
    step: &MultiPoly<C>,
) -> MultiPoly<C> {
    let mut acc = MultiPoly::one();
    let mut factor = base.clone();
    for _ in 0..n {
        acc = acc.mul(&factor);
        factor = factor.sub(step);
    }
    acc
}

impl<C: Scalar> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::add(self, rhs)
    }
}

impl<C: Scalar> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::sub(self, rhs)
    }
}

impl<C: Scalar> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::mul(self, rhs)
    }
}

impl<C: Scalar> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.negate()
    }
}

// Canonical text form: terms in descending graded-lex order, coefficients
// as `num/den`, variables named `x`, `l`, `a`, e.g. `x^2 - 1/2*l*x`.
impl<C: Scalar> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mag = coeff.abs();
            let vars = [(mono.alpha, "a"), (mono.lambda, "l"), (mono.x, "x")];
            let var_str: Vec<String> = vars
                .iter()
                .filter(|(e, _)| *e > 0)
                .map(|(e, name)| {
                    if *e == 1 {
                        (*name).to_string()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if var_str.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", var_str.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, var_str.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rat};

    fn x() -> Poly {
        Poly::var(Var::X)
    }

    fn lam() -> Poly {
        Poly::var(Var::Lambda)
    }

    fn alf() -> Poly {
        Poly::var(Var::Alpha)
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = &x() + &x().negate();
        assert!(p.is_zero());
        assert_eq!(p, Poly::zero());
    }

    #[test]
    fn product_of_linear_factors() {
        // x (x - l) = x^2 - l x
        let got = &x() * &(&x() - &lam());
        let expected = &x().pow(2) - &(&lam() * &x());
        assert_eq!(got, expected);
        assert_eq!(got.to_string(), "x^2 - l*x");
    }

    #[test]
    fn multiplicative_identity() {
        let p = &(&x().pow(3) - &lam().scale(&Rat::from_ratio(2, 7))) + &alf();
        assert_eq!(p.mul(&Poly::one()), p);
    }

    #[test]
    fn substitute_shift_by_one() {
        // (x^2 - l x) at x -> x + 1
        let p = &x().pow(2) - &(&lam() * &x());
        let got = p.substitute(Var::X, &(&x() + &Poly::one()));
        let expected = &(&(&x().pow(2) + &x().scale(&Rat::from_int(2))) + &Poly::one())
            - &(&(&lam() * &x()) + &lam());
        assert_eq!(got, expected);
    }

    #[test]
    fn substitute_scaled_lambda() {
        // (x)_{2,l} at l -> l/3 is x (x - l/3) = x^2 - (1/3) l x
        let p = falling_factorial(&x(), 2, &lam());
        let got = p.substitute(Var::Lambda, &lam().scale(&Rat::from_ratio(1, 3)));
        let expected = &x().pow(2) - &(&lam() * &x()).scale(&Rat::from_ratio(1, 3));
        assert_eq!(got, expected);
    }

    #[test]
    fn substitute_constant_alpha() {
        // a (a - 1) at a -> -2 is (-2)(-3) = 6
        let p = falling_factorial(&alf(), 2, &Poly::one());
        let got = p.substitute(Var::Alpha, &Poly::from_int(-2));
        assert_eq!(got, Poly::from_int(6));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&x(), 0, &lam()), Poly::one());

        // x (x - l) (x - 2l)
        let expected = &(&x() * &(&x() - &lam())) * &(&x() - &lam().scale(&Rat::from_int(2)));
        assert_eq!(falling_factorial(&x(), 3, &lam()), expected);
        assert_eq!(falling_factorial(&x(), 3, &lam()).total_degree(), 3);

        // (a)_2 = a^2 - a
        assert_eq!(
            falling_factorial(&alf(), 2, &Poly::one()),
            &alf().pow(2) - &alf()
        );
    }

    #[test]
    fn falling_factorial_specializations() {
        for n in 0..=12u32 {
            // l -> 0 gives the plain monomial x^n
            let p = falling_factorial(&x(), n, &lam());
            assert_eq!(p.substitute(Var::Lambda, &Poly::zero()), x().pow(n));

            // step 1 at x = n gives n!
            let q = falling_factorial(&x(), n, &Poly::one());
            assert_eq!(
                q.substitute(Var::X, &Poly::from_int(n as i64)),
                Poly::constant(crate::comb::factorial::<Rat>(n))
            );
        }
    }

    #[test]
    fn display_canonical() {
        let p = &x().pow(2) - &(&lam() * &x()).scale(&Rat::from_ratio(1, 2));
        assert_eq!(p.to_string(), "x^2 - 1/2*l*x");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_ratio(-3, 4).to_string(), "-3/4");
        let q = &(&alf() * &x()) - &Poly::one();
        assert_eq!(q.to_string(), "a*x - 1");
    }

    #[test]
    fn latex_rendering() {
        let p = &x().pow(2) - &(&lam() * &x()).scale(&Rat::from_ratio(1, 2));
        assert_eq!(p.latex(), "x^{2} - \\tfrac{1}{2} \\lambda x");
    }

    #[test]
    fn graded_lex_term_order() {
        let m_x2 = Monomial { x: 2, lambda: 0, alpha: 0 };
        let m_lx = Monomial { x: 1, lambda: 1, alpha: 0 };
        let m_x = Monomial { x: 1, lambda: 0, alpha: 0 };
        assert!(m_x2 > m_lx);
        assert!(m_lx > m_x);
    }
}
