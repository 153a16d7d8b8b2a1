//! One evaluator per catalog entry.
//!
//! Conventions shared by every check:
//!
//! * the left-hand side is the subject family computed from its generating
//!   function (or the literal defining sum), with the true constants;
//! * the right-hand side re-evaluates the asserted closed form, reading its
//!   literal one-half through [`CheckConstants`] so the mutation harness
//!   can perturb it;
//! * grid points are visited in the nesting order of the loops, so the
//!   recorded counterexample is the lexicographically smallest tuple.

use super::{AlphaMode, CheckConstants, Counterexample, IdentityId, ParamGrid};
use crate::comb::{binomial, factorial, falling_int};
use crate::families::{
    aeg_order_series, aeg_series, alt_power_sum, euler_numbers_stirling_route, euler_series,
    stirling2_deg, AltSumMode, Stirling2Mode,
};
use crate::poly::{falling_factorial, Var};
use crate::scalar::{pow_int, Scalar};
use crate::series::falling_step1;
use crate::{bell, Poly, Rat};

pub(super) struct Sweep {
    points: u64,
    first: Option<Counterexample>,
}

impl Sweep {
    fn new() -> Self {
        Self { points: 0, first: None }
    }

    pub(super) fn into_parts(self) -> (u64, Option<Counterexample>) {
        (self.points, self.first)
    }

    fn point(&mut self, params: &[(&str, String)], lhs: &Poly, rhs: &Poly) {
        self.points += 1;
        if self.first.is_none() && lhs != rhs {
            self.first = Some(Counterexample {
                params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            });
        }
    }

    // A grid point whose sides are polynomial in alpha: compared symbolically
    // or once per specialized value, per the grid's alpha mode.
    fn alpha_point(
        &mut self,
        grid: &ParamGrid,
        params: &[(&str, String)],
        lhs: &Poly,
        rhs: &Poly,
    ) {
        match &grid.alpha_mode {
            AlphaMode::Symbolic => self.point(params, lhs, rhs),
            AlphaMode::Specialize(values) => {
                for a in values {
                    let at = Poly::constant(a.clone());
                    let mut with_alpha: Vec<(&str, String)> = params.to_vec();
                    with_alpha.push(("alpha", a.to_string()));
                    self.point(
                        &with_alpha,
                        &lhs.substitute(Var::Alpha, &at),
                        &rhs.substitute(Var::Alpha, &at),
                    );
                }
            }
        }
    }
}

fn x() -> Poly {
    Poly::var(Var::X)
}

fn lam() -> Poly {
    Poly::var(Var::Lambda)
}

fn alf() -> Poly {
    Poly::var(Var::Alpha)
}

// (1)_{j,lambda} for j = 0..=n_hi
fn ones_ff(n_hi: u32) -> Vec<Poly> {
    (0..=n_hi).map(|j| falling_factorial(&Poly::one(), j, &lam())).collect()
}

// A^{(r)}_{n,lambda}(x) for n = 0..=n_hi, from the generating function
fn aeg_coeffs(r: u32, n_hi: u32) -> Vec<Poly> {
    let order = (n_hi as usize).max(r as usize);
    let s = aeg_series(&x(), r, order).expect("r <= order by construction");
    s.coeffs()[..=n_hi as usize].to_vec()
}

// A^{(r,alpha)}_{n,lambda}(x) for n = 0..=n_hi
fn aego_coeffs(r: u32, n_hi: u32) -> Vec<Poly> {
    let order = (n_hi as usize).max(r as usize);
    let s = aeg_order_series(&x(), r, order).expect("r <= order by construction");
    s.coeffs()[..=n_hi as usize].to_vec()
}

// E_{n,lambda}(x) via the series-inversion route
fn euler_coeffs(n_hi: u32) -> Vec<Poly> {
    euler_series(&x(), n_hi as usize).coeffs().to_vec()
}

fn euler_numbers(n_hi: u32) -> Vec<Poly> {
    euler_series(&Poly::zero(), n_hi as usize).coeffs().to_vec()
}

// E^{(alpha)}_{n,lambda} numbers, symbolic alpha, via the symbolic power
fn eao_numbers(n_hi: u32) -> Vec<Poly> {
    crate::families::euler_order_series(&Poly::zero(), n_hi as usize)
        .coeffs()
        .to_vec()
}

// S_{2,lambda}(n,k) for k <= n <= n_hi, explicit-sum route
fn stirlings(n_hi: u32) -> Vec<Vec<Poly>> {
    (0..=n_hi)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    stirling2_deg(n, k, Stirling2Mode::ExplicitSum).expect("k <= n in range")
                })
                .collect()
        })
        .collect()
}

fn alt_direct(k: u32, n: u32) -> Poly {
    alt_power_sum(k, n, AltSumMode::Direct).expect("Direct mode is total")
}

// (-alpha)_j, step 1, for j = 0..=n_hi
fn neg_alpha_ff(n_hi: u32) -> Vec<Poly> {
    (0..=n_hi).map(|j| falling_step1(&alf().negate(), j)).collect()
}

// (x + k)/m as a substitution target
fn shifted_arg(k: u32, m: u32) -> Poly {
    (&x() + &Poly::from_int(k as i64)).scale(&Rat::from_ratio(1, m as i64))
}

fn sign(i: u32) -> Rat {
    if i.is_multiple_of(2) {
        Rat::from_int(1)
    } else {
        Rat::from_int(-1)
    }
}

pub(super) fn dispatch(id: IdentityId, grid: &ParamGrid, consts: &CheckConstants) -> Sweep {
    match id {
        IdentityId::T1 => t1(grid, consts),
        IdentityId::T2 => t2(grid, consts),
        IdentityId::T3 => t3(grid, consts),
        IdentityId::T4 => t4(grid, consts),
        IdentityId::T5 => t5(grid, consts),
        IdentityId::T6 => t6(grid, consts),
        IdentityId::T7 => t7(grid, consts),
        IdentityId::T8 => t8(grid, consts),
        IdentityId::T9 => t9(grid, consts),
        IdentityId::T10 => t10(grid, consts),
        IdentityId::E5 => e5(grid, consts),
        IdentityId::E10 => e10(grid, consts),
        IdentityId::E13 => e13(grid, consts),
        IdentityId::E26 => e26(grid, consts),
        IdentityId::E30 => e30(grid, consts),
        IdentityId::E34 => e34(grid, consts),
        IdentityId::E40 => e40(grid, consts),
        IdentityId::E43 => e43(grid, consts),
        IdentityId::E44 => e44(grid, consts),
        IdentityId::E48 => e48(grid, consts),
    }
}

// (x)_{n,lambda} = 1/(2 (n+r)_r) ( sum_{l=0}^{n} C(n+r, l+r) (1)_{n-l,lambda}
//                  A^{(r)}_{l+r,lambda}(x) + A^{(r)}_{n+r,lambda}(x) )
fn t1(grid: &ParamGrid, consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let ones = ones_ff(grid.n_max);
    for r in 0..=grid.r_max {
        let a = aeg_coeffs(r, grid.n_max + r);
        for n in 0..=grid.n_max {
            let lhs = falling_factorial(&x(), n, &lam());
            let mut sum = Poly::zero();
            for l in 0..=n {
                let c = binomial::<Rat>(n + r, (l + r) as i64);
                sum = sum.add(&ones[(n - l) as usize].mul(&a[(l + r) as usize]).scale(&c));
            }
            sum = sum.add(&a[(n + r) as usize]);
            let scale = consts.half.clone() / falling_int::<Rat>((n + r) as i64, r);
            let rhs = sum.scale(&scale);
            sweep.point(&[("r", r.to_string()), ("n", n.to_string())], &lhs, &rhs);
        }
    }
    sweep
}

// A^{(r)}_{n,lambda}(x) = m^{n-r} sum_{l=0}^{m-1} (-1)^l
//                         A^{(r)}_{n,lambda/m}((l+x)/m), odd m
fn t2(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    for r in 0..=grid.r_max {
        let a = aeg_coeffs(r, grid.n_max);
        for n in 0..=grid.n_max {
            for &m in &grid.m_values {
                let lhs = &a[n as usize];
                let scaled_lam = lam().scale(&Rat::from_ratio(1, m as i64));
                let at_lam = lhs.substitute(Var::Lambda, &scaled_lam);
                let mut rhs = Poly::zero();
                for l in 0..m {
                    let term = at_lam.substitute(Var::X, &shifted_arg(l, m));
                    rhs = rhs.add(&term.scale(&sign(l)));
                }
                let rhs = rhs.scale(&pow_int(&Rat::from_int(m as i64), n as i64 - r as i64));
                sweep.point(
                    &[("r", r.to_string()), ("n", n.to_string()), ("m", m.to_string())],
                    lhs,
                    &rhs,
                );
            }
        }
    }
    sweep
}

// A^{(r,-m)}_{n,lambda}(x) = (n)_r / 2^m sum_{k=0}^{m} C(m,k) (k+x)_{n-r,lambda}
fn t3(grid: &ParamGrid, consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    for r in 0..=grid.r_max {
        let ao = aego_coeffs(r, grid.n_max);
        for n in 0..=grid.n_max {
            for &m in &grid.m_values {
                let lhs =
                    ao[n as usize].substitute(Var::Alpha, &Poly::from_int(-(m as i64)));
                let rhs = if n < r {
                    Poly::zero()
                } else {
                    let mut sum = Poly::zero();
                    for k in 0..=m {
                        let base = &x() + &Poly::from_int(k as i64);
                        let ff = falling_factorial(&base, n - r, &lam());
                        sum = sum.add(&ff.scale(&binomial::<Rat>(m, k as i64)));
                    }
                    let scale = falling_int::<Rat>(n as i64, r)
                        * pow_int(&consts.half, m as i64);
                    sum.scale(&scale)
                };
                sweep.point(
                    &[("r", r.to_string()), ("n", n.to_string()), ("m", m.to_string())],
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    sweep
}

// A^{(r,alpha)}_{n,lambda}(x) = (n)_r E^{(alpha)}_{n-r,lambda}(x)
fn t4(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let eao = crate::families::euler_order_series(&x(), grid.n_max as usize);
    for r in 0..=grid.r_max {
        let ao = aego_coeffs(r, grid.n_max);
        for n in 0..=grid.n_max {
            let lhs = &ao[n as usize];
            let rhs = if n < r {
                Poly::zero()
            } else {
                eao.coeff((n - r) as usize).scale(&falling_int::<Rat>(n as i64, r))
            };
            sweep.alpha_point(
                grid,
                &[("r", r.to_string()), ("n", n.to_string())],
                lhs,
                &rhs,
            );
        }
    }
    sweep
}

// A^{(r,alpha)}_{n,lambda}(x) = (n)_r (x)_{n-r,lambda}
//   + (n)_r sum_{k=0}^{n-r-1} C(n-r,k) E^{(alpha)}_{n-k-r,lambda} (x)_{k,lambda}
fn t5(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let nums = eao_numbers(grid.n_max);
    for r in 0..=grid.r_max {
        let ao = aego_coeffs(r, grid.n_max);
        for n in 0..=grid.n_max {
            let lhs = &ao[n as usize];
            let rhs = if n < r {
                Poly::zero()
            } else {
                let mut acc = falling_factorial(&x(), n - r, &lam());
                for k in 0..(n - r) {
                    let c = binomial::<Rat>(n - r, k as i64);
                    let term = nums[(n - k - r) as usize]
                        .mul(&falling_factorial(&x(), k, &lam()))
                        .scale(&c);
                    acc = acc.add(&term);
                }
                acc.scale(&falling_int::<Rat>(n as i64, r))
            };
            sweep.alpha_point(
                grid,
                &[("r", r.to_string()), ("n", n.to_string())],
                lhs,
                &rhs,
            );
        }
    }
    sweep
}

// E^{(alpha)}_{n,lambda} = sum_{k=1}^{n} (-alpha)_k (1/2)^k B_{n,k}((1)_{1,lambda}, ...)
//                        = sum_{k=1}^{n} (-alpha)_k (1/2)^k S_{2,lambda}(n,k)
fn t6(grid: &ParamGrid, consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let nums = eao_numbers(grid.n_max);
    let s = stirlings(grid.n_max);
    let ones = ones_ff(grid.n_max);
    let naff = neg_alpha_ff(grid.n_max);
    for n in 1..=grid.n_max {
        let lhs = &nums[n as usize];
        let mut via_stirling = Poly::zero();
        let mut via_bell = Poly::zero();
        for k in 1..=n {
            let weight = naff[k as usize].scale(&pow_int(&consts.half, k as i64));
            via_stirling = via_stirling.add(&weight.mul(&s[n as usize][k as usize]));
            let b = bell::bell_partial(n, k, &ones[1..=(n - k + 1) as usize])
                .expect("k <= n and arguments sized by construction");
            via_bell = via_bell.add(&weight.mul(&b));
        }
        sweep.alpha_point(
            grid,
            &[("n", n.to_string()), ("route", "stirling".into())],
            lhs,
            &via_stirling,
        );
        sweep.alpha_point(
            grid,
            &[("n", n.to_string()), ("route", "bell".into())],
            lhs,
            &via_bell,
        );
    }
    sweep
}

// (x)_{n,lambda} = A^{(r,alpha)}_{n+r,lambda}(x) / (n+r)_r
//   - sum_{k=0}^{n-1} sum_{j=1}^{n-k} (-alpha)_j (1/2)^j C(n,k)
//     S_{2,lambda}(n-k,j) (x)_{k,lambda}
fn t7(grid: &ParamGrid, consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let s = stirlings(grid.n_max);
    let naff = neg_alpha_ff(grid.n_max);
    for r in 0..=grid.r_max {
        let ao = aego_coeffs(r, grid.n_max + r);
        for n in 1..=grid.n_max {
            let lhs = falling_factorial(&x(), n, &lam());
            let inv = Rat::from_int(1) / falling_int::<Rat>((n + r) as i64, r);
            let mut rhs = ao[(n + r) as usize].scale(&inv);
            for k in 0..n {
                let xk = falling_factorial(&x(), k, &lam());
                for j in 1..=(n - k) {
                    let c = pow_int(&consts.half, j as i64) * binomial::<Rat>(n, k as i64);
                    let term = naff[j as usize]
                        .mul(&s[(n - k) as usize][j as usize])
                        .mul(&xk)
                        .scale(&c);
                    rhs = rhs.sub(&term);
                }
            }
            sweep.alpha_point(
                grid,
                &[("r", r.to_string()), ("n", n.to_string())],
                &lhs,
                &rhs,
            );
        }
    }
    sweep
}

// sum_{k=0}^{m-1} (-1)^k A^{(r,alpha)}_{n,lambda}((x+k)/m)
//   = sum_{l=0}^{n} C(n,l) A^{(r)}_{l,m lambda}(x) m^{r-l} E^{(alpha-1)}_{n-l,lambda}
fn t8(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let alpha_minus_one = &alf() - &Poly::one();
    let shifted_nums: Vec<Poly> = eao_numbers(grid.n_max)
        .iter()
        .map(|p| p.substitute(Var::Alpha, &alpha_minus_one))
        .collect();
    for r in 0..=grid.r_max {
        let ao = aego_coeffs(r, grid.n_max);
        let a1 = aeg_coeffs(r, grid.n_max);
        for &m in &grid.m_values {
            let m_lam = lam().scale(&Rat::from_int(m as i64));
            let a1_scaled: Vec<Poly> =
                a1.iter().map(|p| p.substitute(Var::Lambda, &m_lam)).collect();
            for n in 0..=grid.n_max {
                let mut lhs = Poly::zero();
                for k in 0..m {
                    let term = ao[n as usize].substitute(Var::X, &shifted_arg(k, m));
                    lhs = lhs.add(&term.scale(&sign(k)));
                }
                let mut rhs = Poly::zero();
                for l in 0..=n {
                    let c = binomial::<Rat>(n, l as i64)
                        * pow_int(&Rat::from_int(m as i64), r as i64 - l as i64);
                    rhs = rhs.add(
                        &a1_scaled[l as usize]
                            .mul(&shifted_nums[(n - l) as usize])
                            .scale(&c),
                    );
                }
                sweep.alpha_point(
                    grid,
                    &[("r", r.to_string()), ("m", m.to_string()), ("n", n.to_string())],
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    sweep
}

// T_{k,lambda}(n) = (-1)^n/2 (n+1)_{k,lambda}
//   + (1 + (-1)^n) sum_{j=1}^{k} (-1)^j j! (1/2)^{j+1} S_{2,lambda}(k,j)
//   + (-1)^n sum_{j=1}^{k-1} C(k,j) (n+1)_{k-j,lambda}
//       sum_{i=1}^{j} (-1)^i i! (1/2)^{i+1} S_{2,lambda}(j,i)
fn t9(grid: &ParamGrid, consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let s = stirlings(grid.k_max);
    let inner: Vec<Poly> = (0..=grid.k_max)
        .map(|j| {
            let mut acc = Poly::zero();
            for i in 1..=j {
                let c = sign(i)
                    * factorial::<Rat>(i)
                    * pow_int(&consts.half, i as i64 + 1);
                acc = acc.add(&s[j as usize][i as usize].scale(&c));
            }
            acc
        })
        .collect();
    for k in 1..=grid.k_max {
        for n in 0..=grid.n_max {
            let lhs = alt_direct(k, n);
            let sgn = sign(n);
            let np1 = Poly::from_int(n as i64 + 1);
            let mut rhs = falling_factorial(&np1, k, &lam())
                .scale(&(sgn.clone() * consts.half.clone()));
            rhs = rhs.add(&inner[k as usize].scale(&(Rat::from_int(1) + sgn.clone())));
            let mut tail = Poly::zero();
            for j in 1..k {
                let term = falling_factorial(&np1, k - j, &lam())
                    .mul(&inner[j as usize])
                    .scale(&binomial::<Rat>(k, j as i64));
                tail = tail.add(&term);
            }
            rhs = rhs.add(&tail.scale(&sgn));
            sweep.point(&[("k", k.to_string()), ("n", n.to_string())], &lhs, &rhs);
        }
    }
    sweep
}

// A^{(r)}_{n,lambda}(x) = (n)_r sum_{l=0}^{n-r} C(n-r,l) (x)_{n-l-r,lambda} T_{l,lambda}(m-1)
//   + (n)_r sum_{k=0}^{n-r-1} sum_{j=1}^{n-k-r} sum_{l=0}^{k} j! (-1/2)^j
//     C(n-r,k) C(k,l) m^{n-r-k} S_{2,lambda/m}(n-k-r,j) T_{l,lambda}(m-1) (x)_{k-l,lambda}
fn t10(grid: &ParamGrid, consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let s = stirlings(grid.n_max);
    // sum_j j! (-1/2)^j S_{2,lambda}(q,j) for q = 0..=n_max
    let weights: Vec<Poly> = (0..=grid.n_max)
        .map(|q| {
            let mut acc = Poly::zero();
            for j in 1..=q {
                let c = factorial::<Rat>(j) * pow_int(&-consts.half.clone(), j as i64);
                acc = acc.add(&s[q as usize][j as usize].scale(&c));
            }
            acc
        })
        .collect();
    for r in 0..=grid.r_max {
        let a = aeg_coeffs(r, grid.n_max);
        for &m in &grid.m_values {
            let lam_over_m = lam().scale(&Rat::from_ratio(1, m as i64));
            let weights_m: Vec<Poly> = weights
                .iter()
                .map(|p| p.substitute(Var::Lambda, &lam_over_m))
                .collect();
            let tv: Vec<Poly> = (0..=grid.n_max).map(|l| alt_direct(l, m - 1)).collect();
            // W_k = sum_{l=0}^{k} C(k,l) T_{l,lambda}(m-1) (x)_{k-l,lambda}
            let w: Vec<Poly> = (0..=grid.n_max)
                .map(|k| {
                    let mut acc = Poly::zero();
                    for l in 0..=k {
                        let term = tv[l as usize]
                            .mul(&falling_factorial(&x(), k - l, &lam()))
                            .scale(&binomial::<Rat>(k, l as i64));
                        acc = acc.add(&term);
                    }
                    acc
                })
                .collect();
            for n in 0..=grid.n_max {
                let lhs = &a[n as usize];
                let rhs = if n < r {
                    Poly::zero()
                } else {
                    let mut s1 = Poly::zero();
                    for l in 0..=(n - r) {
                        let term = falling_factorial(&x(), n - l - r, &lam())
                            .mul(&tv[l as usize])
                            .scale(&binomial::<Rat>(n - r, l as i64));
                        s1 = s1.add(&term);
                    }
                    let mut s2 = Poly::zero();
                    for k in 0..(n - r) {
                        let c = binomial::<Rat>(n - r, k as i64)
                            * pow_int(&Rat::from_int(m as i64), (n - r - k) as i64);
                        s2 = s2.add(
                            &weights_m[(n - k - r) as usize].mul(&w[k as usize]).scale(&c),
                        );
                    }
                    s1.add(&s2).scale(&falling_int::<Rat>(n as i64, r))
                };
                sweep.point(
                    &[("r", r.to_string()), ("m", m.to_string()), ("n", n.to_string())],
                    lhs,
                    &rhs,
                );
            }
        }
    }
    sweep
}

// A^{(r)}_{n,lambda}(x+1) = sum_{l=0}^{n} C(n,l) (1)_{n-l,lambda} A^{(r)}_{l,lambda}(x)
fn e5(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let ones = ones_ff(grid.n_max);
    let x_plus_one = &x() + &Poly::one();
    for r in 0..=grid.r_max {
        let a = aeg_coeffs(r, grid.n_max);
        for n in 0..=grid.n_max {
            let lhs = a[n as usize].substitute(Var::X, &x_plus_one);
            let mut rhs = Poly::zero();
            for l in 0..=n {
                let term = ones[(n - l) as usize]
                    .mul(&a[l as usize])
                    .scale(&binomial::<Rat>(n, l as i64));
                rhs = rhs.add(&term);
            }
            sweep.point(&[("r", r.to_string()), ("n", n.to_string())], &lhs, &rhs);
        }
    }
    sweep
}

// A^{(r,alpha)}_{n,lambda}(x) = sum_{k=0}^{n} C(n,k) A^{(r,alpha)}_{k,lambda} (x)_{n-k,lambda}
fn e10(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    for r in 0..=grid.r_max {
        let ao = aego_coeffs(r, grid.n_max);
        let nums: Vec<Poly> =
            ao.iter().map(|p| p.substitute(Var::X, &Poly::zero())).collect();
        for n in 0..=grid.n_max {
            let lhs = &ao[n as usize];
            let mut rhs = Poly::zero();
            for k in 0..=n {
                let term = nums[k as usize]
                    .mul(&falling_factorial(&x(), n - k, &lam()))
                    .scale(&binomial::<Rat>(n, k as i64));
                rhs = rhs.add(&term);
            }
            sweep.alpha_point(
                grid,
                &[("r", r.to_string()), ("n", n.to_string())],
                lhs,
                &rhs,
            );
        }
    }
    sweep
}

// A^{(r,-m)}_{n,lambda}(x) = 1/2^m sum_{k=0}^{n-r} sum_{j=0}^{m} C(n,k) C(m,j)
//                            (j)_{n-k-r,lambda} (n-k)_r (x)_{k,lambda}
// (terms with k > n-r carry (n-k)_r = 0 and are dropped by the k-range)
fn e13(grid: &ParamGrid, consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    for r in 0..=grid.r_max {
        let ao = aego_coeffs(r, grid.n_max);
        for n in 0..=grid.n_max {
            for &m in &grid.m_values {
                let lhs =
                    ao[n as usize].substitute(Var::Alpha, &Poly::from_int(-(m as i64)));
                let rhs = if n < r {
                    Poly::zero()
                } else {
                    let mut sum = Poly::zero();
                    for k in 0..=(n - r) {
                        let xk = falling_factorial(&x(), k, &lam());
                        for j in 0..=m {
                            let c = binomial::<Rat>(n, k as i64)
                                * binomial::<Rat>(m, j as i64)
                                * falling_int::<Rat>((n - k) as i64, r);
                            let ff = falling_factorial(
                                &Poly::from_int(j as i64),
                                n - k - r,
                                &lam(),
                            );
                            sum = sum.add(&ff.mul(&xk).scale(&c));
                        }
                    }
                    sum.scale(&pow_int(&consts.half, m as i64))
                };
                sweep.point(
                    &[("r", r.to_string()), ("n", n.to_string()), ("m", m.to_string())],
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    sweep
}

// A^{(r,alpha)}_{n,lambda} = (n)_r sum_{j=1}^{n-r} (-alpha)_j (1/2)^j S_{2,lambda}(n-r,j),
// for n > r
fn e26(grid: &ParamGrid, consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let s = stirlings(grid.n_max);
    let naff = neg_alpha_ff(grid.n_max);
    for r in 0..=grid.r_max {
        let ao = aego_coeffs(r, grid.n_max);
        for n in (r + 1)..=grid.n_max {
            let lhs = ao[n as usize].substitute(Var::X, &Poly::zero());
            let mut rhs = Poly::zero();
            for j in 1..=(n - r) {
                let c = pow_int(&consts.half, j as i64);
                rhs = rhs.add(
                    &naff[j as usize].mul(&s[(n - r) as usize][j as usize]).scale(&c),
                );
            }
            let rhs = rhs.scale(&falling_int::<Rat>(n as i64, r));
            sweep.alpha_point(
                grid,
                &[("r", r.to_string()), ("n", n.to_string())],
                &lhs,
                &rhs,
            );
        }
    }
    sweep
}

// sum_{k=0}^{m-1} (-1)^k A^{(r)}_{n,lambda}((x+k)/m) = A^{(r)}_{n,m lambda}(x) (1/m)^{n-r}
fn e30(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    for r in 0..=grid.r_max {
        let a = aeg_coeffs(r, grid.n_max);
        for n in 0..=grid.n_max {
            for &m in &grid.m_values {
                let mut lhs = Poly::zero();
                for k in 0..m {
                    let term = a[n as usize].substitute(Var::X, &shifted_arg(k, m));
                    lhs = lhs.add(&term.scale(&sign(k)));
                }
                let m_lam = lam().scale(&Rat::from_int(m as i64));
                let rhs = a[n as usize]
                    .substitute(Var::Lambda, &m_lam)
                    .scale(&pow_int(&Rat::from_int(m as i64), r as i64 - n as i64));
                sweep.point(
                    &[("r", r.to_string()), ("n", n.to_string()), ("m", m.to_string())],
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    sweep
}

// T_{k,lambda}(n) = ( E_{k,lambda} + (-1)^n E_{k,lambda}(n+1) ) / 2
fn e34(grid: &ParamGrid, consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let nums = euler_numbers(grid.k_max);
    let polys = euler_coeffs(grid.k_max);
    for k in 0..=grid.k_max {
        for n in 0..=grid.n_max {
            let lhs = alt_direct(k, n);
            let at_np1 =
                polys[k as usize].substitute(Var::X, &Poly::from_int(n as i64 + 1));
            let rhs = nums[k as usize]
                .add(&at_np1.scale(&sign(n)))
                .scale(&consts.half);
            sweep.point(&[("k", k.to_string()), ("n", n.to_string())], &lhs, &rhs);
        }
    }
    sweep
}

// E_{n,lambda} = sum_{k=1}^{n} (-1)^k k! (1/2)^k S_{2,lambda}(n,k), n >= 1
fn e40(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    let nums = euler_numbers(grid.n_max);
    for n in 0..=grid.n_max {
        let lhs = &nums[n as usize];
        let rhs = euler_numbers_stirling_route(n);
        sweep.point(&[("n", n.to_string())], lhs, &rhs);
    }
    sweep
}

// parity closed forms of T_{k,lambda} against the literal alternating sum
fn parity_check(grid: &ParamGrid, want_odd: bool) -> Sweep {
    let mut sweep = Sweep::new();
    for k in 1..=grid.k_max {
        for n in 0..=grid.n_max {
            if (n % 2 == 1) != want_odd {
                continue;
            }
            let lhs = alt_direct(k, n);
            let rhs = alt_power_sum(k, n, AltSumMode::Parity).expect("k >= 1 in range");
            sweep.point(&[("k", k.to_string()), ("n", n.to_string())], &lhs, &rhs);
        }
    }
    sweep
}

fn e43(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    parity_check(grid, false)
}

fn e44(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    parity_check(grid, true)
}

// sum_{i=0}^{m-1} (-1)^i ((x+i)/m)_{k,lambda}
//   = 1/m^k sum_{l=0}^{k} C(k,l) (x)_{k-l,m lambda} T_{l,m lambda}(m-1)
fn e48(grid: &ParamGrid, _consts: &CheckConstants) -> Sweep {
    let mut sweep = Sweep::new();
    for &m in &grid.m_values {
        let m_lam = lam().scale(&Rat::from_int(m as i64));
        let tv: Vec<Poly> = (0..=grid.k_max)
            .map(|l| alt_direct(l, m - 1).substitute(Var::Lambda, &m_lam))
            .collect();
        for k in 0..=grid.k_max {
            let mut lhs = Poly::zero();
            for i in 0..m {
                let ff = falling_factorial(&shifted_arg(i, m), k, &lam());
                lhs = lhs.add(&ff.scale(&sign(i)));
            }
            let mut rhs = Poly::zero();
            for l in 0..=k {
                let term = falling_factorial(&x(), k - l, &m_lam)
                    .mul(&tv[l as usize])
                    .scale(&binomial::<Rat>(k, l as i64));
                rhs = rhs.add(&term);
            }
            let rhs = rhs.scale(&pow_int(&Rat::from_int(m as i64), -(k as i64)));
            sweep.point(&[("m", m.to_string()), ("k", k.to_string())], &lhs, &rhs);
        }
    }
    sweep
}
