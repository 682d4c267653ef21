//! Exact truncated power series over the rationals.
//!
//! A series of order `N` stores `c_0..=c_N` and stands for
//! `c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))`. Binary operations truncate to
//! the smaller order of their operands; nothing ever invents coefficients
//! beyond what both inputs determine.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl TruncatedSeries {
    /// Series of the given order from leading coefficients; missing ones are
    /// zero and extra ones are dropped.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(alloc::vec![c], order)
    }

    /// `x` truncated at `order`.
    pub fn x(order: usize) -> Self {
        Self::monomial(BigRational::one(), 1, order)
    }

    /// `c x^power`, or zero when `power > order`.
    pub fn monomial(c: BigRational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn from_bigints(coeffs: &[BigInt], order: usize) -> Self {
        Self::new(
            coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
            order,
        )
    }

    pub fn from_counts(coeffs: &[BigUint], order: usize) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(BigInt::from(c.clone())))
                .collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^n`; `None` above the order.
    pub fn coeff(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn first_nonzero_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// `x^m f`, keeping the order.
    pub fn shift(&self, m: usize) -> Self {
        let order = self.order();
        let mut coeffs = alloc::vec![BigRational::zero(); (order + 1).min(m)];
        coeffs.extend(
            self.coeffs
                .iter()
                .take((order + 1).saturating_sub(m))
                .cloned(),
        );
        Self::new(coeffs, order)
    }

    /// `f / x^m`, requiring the low coefficients to vanish. Order drops by `m`.
    pub fn unshift(&self, m: usize) -> Result<Self> {
        if m > self.order() {
            return Err(Error::Series(format!(
                "cannot divide an order-{} series by x^{m}",
                self.order()
            )));
        }
        if let Some(i) = self.coeffs[..m].iter().position(|c| !c.is_zero()) {
            return Err(Error::Series(format!(
                "coefficient of x^{i} is nonzero, so the series is not divisible by x^{m}"
            )));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[m..].to_vec(),
        })
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::Series(
                "derivative of an order-0 series is undetermined".into(),
            ));
        }
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        })
    }

    /// Antiderivative with the given constant term; the order rises by one.
    pub fn integrate(&self, constant: BigRational) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(constant);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / rat(i as i64 + 1)),
        );
        TruncatedSeries { coeffs }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Series(
                "reciprocal needs a nonzero constant term".into(),
            ));
        }
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for i in 1..=n {
                acc += &self.coeffs[i] * &out[n - i];
            }
            out.push(-acc * &inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Square root with constant term 1; the input's constant term must be 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series("sqrt needs constant term 1".into()));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(BigRational::one());
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc -= &out[i] * &out[n - i];
            }
            out.push(acc * &half);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `exp(f)` for `f(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp needs a zero constant term".into()));
        }
        // g' = f' g, so n g_n = sum_{i=1}^{n} i f_i g_{n-i}.
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(BigRational::one());
        for n in 1..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for i in 1..=n {
                acc += &self.coeffs[i] * &out[n - i] * rat(i as i64);
            }
            out.push(acc / rat(n as i64));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `f(g(x))` for `g(0) = 0`.
    pub fn substitute(&self, g: &TruncatedSeries) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::Series("substitute needs g(0) = 0".into()));
        }
        let order = self.order().min(g.order());
        let g = g.truncate(order);
        let mut out = Self::constant(self.coeffs[order].clone(), order);
        for c in self.coeffs[..order].iter().rev() {
            out = &(&out * &g) + &Self::constant(c.clone(), order);
        }
        Ok(out)
    }

    /// Coefficients as integers, failing on the first that is not.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotACount {
                        index: i,
                        value: format!("{c}"),
                    })
                }
            })
            .collect()
    }

    /// Coefficients as nonnegative integers.
    pub fn count_coeffs(&self) -> Result<Vec<BigUint>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() && !c.is_negative() {
                    Ok(c.to_integer().to_biguint().expect("nonnegative"))
                } else {
                    Err(Error::NotACount {
                        index: i,
                        value: format!("{c}"),
                    })
                }
            })
            .collect()
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = alloc::vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn sqrt_of_one_minus_four_x() {
        let f = TruncatedSeries::from_integers(&[1, -4], 3);
        let r = f.sqrt().unwrap();
        assert_eq!(ints(&r), [1, -2, -2, -4]);
        assert_eq!(&r * &r, f);
    }

    #[test]
    fn integrate_one() {
        let one = TruncatedSeries::one(0);
        let x = one.integrate(BigRational::zero());
        assert_eq!(x, TruncatedSeries::x(1));
    }

    #[test]
    fn substitute_geometric() {
        // 1/(1-x) with x -> x/(1-x) is (1-x)/(1-2x) = 1 + x + 2x^2 + 4x^3 + ...
        let order = 6;
        let geo = TruncatedSeries::from_integers(&[1, -1], order)
            .reciprocal()
            .unwrap();
        let g = TruncatedSeries::x(order) * geo.clone();
        let out = geo.substitute(&g).unwrap();
        assert_eq!(ints(&out), [1, 1, 2, 4, 8, 16, 32]);
        let direct = TruncatedSeries::from_integers(&[1, -1], order)
            * TruncatedSeries::from_integers(&[1, -2], order)
                .reciprocal()
                .unwrap();
        assert_eq!(out, direct);
    }

    #[test]
    fn exp_of_x() {
        let e = TruncatedSeries::x(5).exp().unwrap();
        let expected: Vec<BigRational> = [1, 1, 2, 6, 24, 120]
            .iter()
            .map(|&d| BigRational::new(BigInt::one(), BigInt::from(d)))
            .collect();
        assert_eq!(e.coeffs(), expected.as_slice());
    }

    #[test]
    fn preconditions() {
        assert!(TruncatedSeries::from_integers(&[0, 1], 3)
            .reciprocal()
            .is_err());
        assert!(TruncatedSeries::from_integers(&[4, 1], 3).sqrt().is_err());
        assert!(TruncatedSeries::from_integers(&[1, 1], 3).exp().is_err());
        let f = TruncatedSeries::from_integers(&[1, 1], 3);
        assert!(f.substitute(&f).is_err());
        assert!(TruncatedSeries::one(0).derivative().is_err());
        assert!(TruncatedSeries::from_integers(&[1, 1], 3)
            .unshift(1)
            .is_err());
    }

    #[test]
    fn orders_take_the_minimum() {
        let a = TruncatedSeries::from_integers(&[1, 2, 3], 5);
        let b = TruncatedSeries::from_integers(&[1, 1], 2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!(ints(&(&a * &b)), [1, 3, 5]);
    }

    #[test]
    fn shifting() {
        let a = TruncatedSeries::from_integers(&[1, 2, 3], 3);
        assert_eq!(ints(&a.shift(2)), [0, 0, 1, 2]);
        assert_eq!(ints(&a.shift(5)), [0, 0, 0, 0]);
        assert_eq!(ints(&a.shift(2).unshift(2).unwrap()), [1, 2]);
    }

    #[test]
    fn display() {
        let a = TruncatedSeries::from_integers(&[1, -2, 0, 3], 3);
        assert_eq!(a.to_string(), "1 - 2*x + 3*x^3 + O(x^4)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(x^2)");
    }

    #[test]
    fn rationals_stay_reduced() {
        let f = TruncatedSeries::from_integers(&[2, 2], 2).integrate(BigRational::zero());
        assert_eq!(f.coeffs()[2], BigRational::one());
        assert!(f.coeffs()[2].denom().is_one());
        let g = TruncatedSeries::from_integers(&[3], 1)
            .reciprocal()
            .unwrap();
        assert_eq!(*g.coeffs()[0].denom(), BigInt::from(3));
    }
}
