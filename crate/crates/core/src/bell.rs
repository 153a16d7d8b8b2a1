//! Incomplete (partial) Bell polynomials.

use crate::comb::factorial;
use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// `B_{n,k}(x_1, ..., x_{n-k+1})`: the multinomial sum over all
/// `(l_1, ..., l_{n-k+1})` with `l_1 + ... + l_{n-k+1} = k` and
/// `l_1 + 2 l_2 + ... + (n-k+1) l_{n-k+1} = n` of
/// `n! / (l_1! ... l_{n-k+1}!) * prod (x_i / i!)^{l_i}`.
///
/// `xs[0]` is `x_1`. `B_{0,0} = 1` and `B_{n,0} = 0` for `n >= 1`.
pub fn bell_partial<C: Scalar>(n: u32, k: u32, xs: &[MultiPoly<C>]) -> Result<MultiPoly<C>> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    if k == 0 {
        return Ok(MultiPoly::zero());
    }
    let slots = (n - k + 1) as usize;
    if xs.len() < slots {
        return Err(Error::NotEnoughArguments { needed: slots, got: xs.len() });
    }

    let mut out = MultiPoly::zero();
    let mut counts = vec![0u32; slots];
    sum_partitions(n, k, 0, &mut counts, &mut |counts| {
        let mut coeff: C = factorial(n);
        let mut term = MultiPoly::one();
        for (i, &l) in counts.iter().enumerate() {
            if l == 0 {
                continue;
            }
            let part = (i + 1) as u32;
            coeff = coeff / factorial::<C>(l);
            for _ in 0..l {
                coeff = coeff / factorial::<C>(part);
            }
            term = term.mul(&xs[i].pow(l));
        }
        out = out.add(&term.scale(&coeff));
    });
    Ok(out)
}

// Enumerate all exponent vectors with the prescribed part count and weight.
fn sum_partitions<F: FnMut(&[u32])>(
    weight_left: u32,
    parts_left: u32,
    idx: usize,
    counts: &mut Vec<u32>,
    visit: &mut F,
) {
    if idx == counts.len() {
        if weight_left == 0 && parts_left == 0 {
            visit(counts);
        }
        return;
    }
    let part = (idx + 1) as u32;
    let max_l = parts_left.min(weight_left / part);
    for l in 0..=max_l {
        counts[idx] = l;
        sum_partitions(weight_left - part * l, parts_left - l, idx + 1, counts, visit);
    }
    counts[idx] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{falling_factorial, Var};
    use crate::series::EgfSeries;
    use crate::{Poly, Rat};

    // Independent route: B_{n,k} is the EGF coefficient n of
    // (sum_i x_i t^i / i!)^k / k!, computed by series products.
    fn bell_by_series(n: u32, k: u32, xs: &[Poly]) -> Poly {
        let order = n as usize;
        let mut coeffs = vec![Poly::zero(); order + 1];
        for (i, x) in xs.iter().enumerate() {
            if i < order {
                coeffs[i + 1] = x.clone();
            }
        }
        let s = EgfSeries::from_coeffs(coeffs);
        let p = s.pow_int(k).unwrap();
        p.coeff(n as usize)
            .scale(&(Rat::from_int(1) / crate::comb::factorial::<Rat>(k)))
    }

    fn arg_polys(count: usize) -> Vec<Poly> {
        // x_i = (x + i)_{i, l}: distinct non-constant arguments
        (1..=count)
            .map(|i| {
                falling_factorial(
                    &(&Poly::var(Var::X) + &Poly::from_int(i as i64)),
                    i as u32,
                    &Poly::var(Var::Lambda),
                )
            })
            .collect()
    }

    #[test]
    fn diagonal_is_power_of_first_argument() {
        let xs = arg_polys(1);
        for n in 1..=6u32 {
            assert_eq!(bell_partial(n, n, &xs).unwrap(), xs[0].pow(n));
        }
    }

    #[test]
    fn small_case_frozen_and_series_oracle() {
        let xs = arg_polys(2);
        // B_{3,2}(x1, x2) = 3 x1 x2
        let expected = xs[0].mul(&xs[1]).scale(&Rat::from_int(3));
        assert_eq!(bell_partial(3, 2, &xs).unwrap(), expected);
        assert_eq!(bell_by_series(3, 2, &xs), expected);
    }

    #[test]
    fn matches_series_route() {
        let xs = arg_polys(8);
        for n in 0..=8u32 {
            for k in 0..=n {
                assert_eq!(
                    bell_partial(n, k, &xs).unwrap(),
                    bell_by_series(n, k, &xs),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn rejects_bad_indices() {
        let xs = arg_polys(3);
        assert!(matches!(bell_partial(2, 3, &xs), Err(Error::KExceedsN { .. })));
        assert!(matches!(
            bell_partial(6, 2, &xs),
            Err(Error::NotEnoughArguments { .. })
        ));
    }

    #[test]
    fn base_cases() {
        let xs = arg_polys(4);
        assert_eq!(bell_partial(0, 0, &[]).unwrap(), Poly::one());
        for n in 1..=4 {
            assert!(bell_partial(n, 0, &xs).unwrap().is_zero());
        }
    }
}
