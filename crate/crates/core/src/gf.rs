//! Generating-function identities for the avoidance counts, each written as
//! a residual or a coefficient extraction so it can be compared exactly
//! against the recurrences and the oracle.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{classical_parabolic_set, FamilyParams, Kind};
use crate::oracle::Oracle;
use crate::recurrences::{binomial, c_sequence, factorial};
use crate::sequence::CountSequence;
use crate::series::TruncatedSeries;

fn rat(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn rat_u(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `F_n^l(x) = sum_j (-1)^j C(n - (l-2) j, j) x^j`, truncated at `order`.
pub fn f_poly(n: usize, l: usize, order: usize) -> Result<TruncatedSeries> {
    if l < 2 {
        return Err(Error::InvalidParams(format!("l = {l}: need l >= 2")));
    }
    let mut coeffs = Vec::new();
    // C(n - (l-2) j, j) vanishes once n - (l-1) j < 0, and stays zero after.
    let mut j = 0;
    while j <= order && (l - 1) * j <= n {
        let top = n as i64 - (l as i64 - 2) * j as i64;
        let c = BigInt::from(binomial(top, j as i64)?);
        coeffs.push(rat(if j % 2 == 1 { -c } else { c }));
        j += 1;
    }
    Ok(TruncatedSeries::new(coeffs, order))
}

/// Linear correction inside the `(k-2)!` term of the `C` family OGF identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OgfForm {
    /// `F_{2l-2}^l(x) - 1 + (2l-2) x`, as published.
    Published,
    /// `F_{2l-2}^l(x) - 1 + l x`, which cancels the linear term of
    /// `F_{2l-2}^l` and agrees with `Published` at `l = 2`.
    Corrected,
}

/// LHS minus RHS of the OGF form of the `C` recurrence (`l >= 2`):
///
/// ```text
/// x (k-1-l) sum_{n>=k-1} c(n) x^n
///   = (k-1)! (F_{2l-1}^l - 1) x^{k-1}
///   + (k-2)! (F_{2l-2}^l - 1 + (2l-2) x) x^{k-2}
///   + sum_{n>=k} c(n) F_{n-k+2l}^l x^n
/// ```
pub fn c_ogf_residual(
    params: &FamilyParams,
    order: usize,
    form: OgfForm,
) -> Result<TruncatedSeries> {
    if params.kind() != Kind::C {
        return Err(Error::InvalidParams(format!("{params} is not a C family")));
    }
    let (k, l) = (params.k(), params.l());
    if l < 2 {
        return Err(Error::InvalidParams(format!(
            "l = {l}: the OGF identity needs l >= 2"
        )));
    }
    let c = c_sequence(params, order)?;
    let lhs_coeffs: Vec<BigRational> = (0..=order)
        .map(|n| {
            if n >= k && n >= 1 {
                rat_u(c[n - 1].clone()) * rat(BigInt::from(k - 1 - l))
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let lhs = TruncatedSeries::new(lhs_coeffs, order);

    let one = TruncatedSeries::one(order);
    let mut rhs = (&f_poly(2 * l - 1, l, order)? - &one)
        .shift(k - 1)
        .scale(&rat_u(factorial(k - 1)));
    let linear = match form {
        OgfForm::Published => 2 * l - 2,
        OgfForm::Corrected => l,
    };
    let middle = &(&f_poly(2 * l - 2, l, order)? - &one)
        + &TruncatedSeries::monomial(rat(BigInt::from(linear)), 1, order);
    rhs = &rhs + &middle.shift(k - 2).scale(&rat_u(factorial(k - 2)));
    for n in k..=order {
        let term = f_poly(n - k + 2 * l, l, order)?
            .shift(n)
            .scale(&rat_u(c[n].clone()));
        rhs = &rhs + &term;
    }
    Ok(&lhs - &rhs)
}

/// `C` counts `n = 0..=order` obtained by solving the OGF identity
/// coefficient by coefficient (`l >= 2`).
///
/// The coefficient of `x^n`, `n >= k`, contains `c(n)` once (from
/// `F_{2l}^l(0) = 1`) and otherwise only earlier counts, so each step is a
/// single subtraction. The linear term that separates [`OgfForm`] variants
/// sits at `x^{k-1}` and never enters.
pub fn c_ogf_counts(params: &FamilyParams, order: usize) -> Result<CountSequence> {
    if params.kind() != Kind::C {
        return Err(Error::InvalidParams(format!("{params} is not a C family")));
    }
    let (k, l) = (params.k(), params.l());
    if l < 2 {
        return Err(Error::InvalidParams(format!(
            "l = {l}: the OGF identity needs l >= 2"
        )));
    }
    let one = TruncatedSeries::one(order);
    let known = &(&f_poly(2 * l - 1, l, order)? - &one)
        .shift(k - 1)
        .scale(&rat_u(factorial(k - 1)))
        + &(&(&f_poly(2 * l - 2, l, order)? - &one)
            + &TruncatedSeries::monomial(rat(BigInt::from(l)), 1, order))
            .shift(k - 2)
            .scale(&rat_u(factorial(k - 2)));
    let mut values: Vec<BigRational> = (0..k.min(order + 1)).map(|n| rat_u(factorial(n))).collect();
    let polys: Vec<TruncatedSeries> = (k..=order)
        .map(|m| f_poly(m - k + 2 * l, l, order))
        .collect::<Result<_>>()?;
    for n in k..=order {
        let mut rest = known.coeffs()[n].clone();
        for m in k..n {
            rest += &values[m] * &polys[m - k].coeffs()[n - m];
        }
        let lhs = &values[n - 1] * rat(BigInt::from(k - 1 - l));
        values.push(lhs - rest);
    }
    Ok(CountSequence::new(
        TruncatedSeries::new(values, order).count_coeffs()?,
    ))
}

/// Exponent multiplying `x + x^2/2 + ... + x^l/l` inside the exponential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EgfExponent {
    /// `k - l`, forced by the recurrence's differential equation.
    KMinusL,
    /// `k - 1`.
    KMinusOne,
}

/// `n!` times each coefficient of an exponential generating function.
pub fn egf_counts(egf: &TruncatedSeries) -> Result<CountSequence> {
    let scaled: Vec<BigRational> = egf
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c * rat_u(factorial(n)))
        .collect();
    let order = egf.order();
    Ok(CountSequence::new(
        TruncatedSeries::new(scaled, order).count_coeffs()?,
    ))
}

/// The `P` family EGF: `(k-l-1)! exp(e (x + ... + x^l/l))` integrated
/// `k-l-1` times, the constant at each step fixed by `p(m) = m!` for
/// `m < k - l - 1`.
pub fn p_egf(k: usize, l: usize, order: usize, exponent: EgfExponent) -> Result<TruncatedSeries> {
    if k < 3 || l < 1 || l > k - 1 {
        return Err(Error::InvalidParams(format!(
            "k = {k}, l = {l}: need k >= 3 and 1 <= l <= k - 1"
        )));
    }
    let depth = k - l - 1;
    let inner_order = order.saturating_sub(depth);
    let e = match exponent {
        EgfExponent::KMinusL => k - l,
        EgfExponent::KMinusOne => k - 1,
    };
    let mut arg = TruncatedSeries::zero(inner_order);
    for i in 1..=l.min(inner_order) {
        let c = BigRational::new(BigInt::from(e), BigInt::from(i));
        arg = &arg + &TruncatedSeries::monomial(c, i, inner_order);
    }
    let mut f = arg.exp()?.scale(&rat_u(factorial(depth)));
    for step in 1..=depth {
        f = f.integrate(rat_u(factorial(depth - step)));
    }
    Ok(f.truncate(order))
}

/// `P` counts `n = 0..=order` read off [`p_egf`].
pub fn p_egf_counts(
    k: usize,
    l: usize,
    order: usize,
    exponent: EgfExponent,
) -> Result<CountSequence> {
    egf_counts(&p_egf(k, l, order, exponent)?)
}

/// OGF for classical avoiders of the patterns that start `k-1, k`:
///
/// ```text
/// (k-3)! x^{k-4} (1 - (k-1)x - sqrt(1 - 2(k-1)x + (k-3)^2 x^2)) / 2 + sum_{i=0}^{k-3} i! x^i
/// ```
///
/// At `k = 3` the bracket is divisible by `x`, and the division is carried
/// out exactly.
pub fn centralizer_ogf(k: usize, order: usize) -> Result<TruncatedSeries> {
    if k < 3 {
        return Err(Error::InvalidParams(format!("k = {k}: need k >= 3")));
    }
    let work = order + 1;
    let km1 = k as i64 - 1;
    let km3 = k as i64 - 3;
    let radicand = TruncatedSeries::from_integers(&[1, -2 * km1, km3 * km3], work);
    let bracket = &TruncatedSeries::from_integers(&[1, -km1], work) - &radicand.sqrt()?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let body = bracket.scale(&(half * rat_u(factorial(k - 3))));
    let body = if k == 3 {
        body.unshift(1)?
    } else {
        body.shift(k - 4).truncate(order)
    };
    let head: Vec<BigRational> = (0..=k - 3).map(|i| rat_u(factorial(i))).collect();
    let out = &body + &TruncatedSeries::new(head, order);
    out.count_coeffs()?;
    Ok(out)
}

/// Rook polynomial of an `s x t` board: `sum_j j! C(s,j) C(t,j) x^j`.
pub fn rook_polynomial(s: usize, t: usize) -> TruncatedSeries {
    let deg = s.min(t);
    let coeffs: Vec<BigRational> = (0..=deg)
        .map(|j| {
            let c = factorial(j)
                * binomial(s as i64, j as i64).expect("nonnegative")
                * binomial(t as i64, j as i64).expect("nonnegative");
            rat_u(c)
        })
        .collect();
    TruncatedSeries::new(coeffs, deg)
}

/// Coefficients of the generalized Laguerre polynomial `L_n^alpha`, expanded
/// from `(1/n!) e^x x^-alpha d^n/dx^n (e^-x x^(n+alpha))` by Leibniz's rule.
pub fn laguerre(n: usize, alpha: usize) -> Vec<BigRational> {
    let mut coeffs = alloc::vec![BigRational::zero(); n + 1];
    let nf = rat_u(factorial(n));
    for i in 0..=n {
        // i derivatives on the power, n - i on the exponential.
        let falling = factorial(n + alpha) / factorial(n + alpha - i);
        let mag = rat_u(binomial(n as i64, i as i64).expect("nonnegative") * falling) / &nf;
        coeffs[n - i] = if (n - i) % 2 == 1 { -mag } else { mag };
    }
    coeffs
}

/// `s! x^s L_s^{t-s}(-1/x)` for `s <= t`, swapping otherwise.
pub fn rook_polynomial_via_laguerre(s: usize, t: usize) -> TruncatedSeries {
    let (s, t) = if s <= t { (s, t) } else { (t, s) };
    let lag = laguerre(s, t - s);
    let sf = rat_u(factorial(s));
    let mut coeffs = alloc::vec![BigRational::zero(); s + 1];
    for (p, c) in lag.iter().enumerate() {
        let v = c * &sf;
        coeffs[s - p] = if p % 2 == 1 { -v } else { v };
    }
    TruncatedSeries::new(coeffs, s)
}

/// `sum_{j<=r} (-1)^j C(l,j) C(m,j) / C(r,j)`. Not always an integer:
/// `(l, m, r) = (3, 3, 2)` gives `11/2`.
pub fn parabolic_inner_sum(l: usize, m: usize, r: usize) -> Result<BigRational> {
    let mut inner = BigRational::zero();
    for j in 0..=r {
        let num = BigInt::from(binomial(l as i64, j as i64)? * binomial(m as i64, j as i64)?);
        let den = BigInt::from(binomial(r as i64, j as i64)?);
        let term = BigRational::new(num, den);
        inner = if j % 2 == 1 {
            inner - term
        } else {
            inner + term
        };
    }
    Ok(inner)
}

/// Polynomial claimed to equal `F(x) R_{l,m}(-x)`, where `F` is the OGF of
/// classical avoiders of the parabolic set:
///
/// ```text
/// sum_{r<lambda} x^r r! sum_{j<=r} (-1)^j C(l,j) C(m,j) / C(r,j)
///   + (-1)^lambda x^lambda lambda! sum_{r<mu-lambda} x^r r! C(mu-r-1, lambda)
/// ```
pub fn parabolic_rhs(l: usize, m: usize, order: usize) -> Result<TruncatedSeries> {
    let (lambda, mu) = (l.min(m), l.max(m));
    let mut coeffs = alloc::vec![BigRational::zero(); order + 1];
    for (r, slot) in coeffs.iter_mut().enumerate().take(lambda) {
        let coeff = parabolic_inner_sum(l, m, r)? * rat_u(factorial(r));
        if !coeff.is_integer() {
            return Err(Error::NotACount {
                index: r,
                value: format!("{coeff}"),
            });
        }
        *slot += coeff;
    }
    let sign = if lambda % 2 == 1 {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    for r in 0..mu - lambda {
        if lambda + r <= order {
            let v = BigInt::from(
                factorial(lambda)
                    * factorial(r)
                    * binomial(mu as i64 - r as i64 - 1, lambda as i64)?,
            );
            coeffs[lambda + r] += rat(&sign * v);
        }
    }
    Ok(TruncatedSeries::new(coeffs, order))
}

/// `F(x) R_{l,m}(-x) - rhs` with `F` given by its first coefficients.
pub fn parabolic_residual_from_counts(
    l: usize,
    m: usize,
    counts: &CountSequence,
    order: usize,
) -> Result<TruncatedSeries> {
    if counts.len() < order + 1 {
        return Err(Error::InvalidParams(format!(
            "need {} counts for order {order}, got {}",
            order + 1,
            counts.len()
        )));
    }
    let f = TruncatedSeries::from_counts(counts.values(), order);
    let rook = rook_polynomial(l, m);
    let deg = rook.order();
    let neg: Vec<BigRational> = rook
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
        .collect();
    let rook_neg = TruncatedSeries::new(neg, deg.max(order));
    Ok(&(&f * &rook_neg) - &parabolic_rhs(l, m, order)?)
}

/// OGF of classical avoiders of the parabolic set, solved from the identity
/// as `rhs / R_{l,m}(-x)`. It does not depend on `a`.
pub fn parabolic_ogf(l: usize, m: usize, order: usize) -> Result<TruncatedSeries> {
    let neg: Vec<BigRational> = rook_polynomial(l, m)
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
        .collect();
    let rook_neg = TruncatedSeries::new(neg, order);
    let out = &parabolic_rhs(l, m, order)? * &rook_neg.reciprocal()?;
    out.count_coeffs()?;
    Ok(out)
}

/// Residual of the parabolic identity with `F` counted by brute force.
pub fn parabolic_identity_residual(
    l: usize,
    m: usize,
    a: usize,
    order: usize,
    oracle: &Oracle,
) -> Result<TruncatedSeries> {
    let fam = classical_parabolic_set(l, m, a)?;
    let counts = oracle.sequence(&fam, order)?;
    parabolic_residual_from_counts(l, m, &counts, order)
}
