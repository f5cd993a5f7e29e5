use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Poly, QFieldError, Scalar};

/// Reduced quotient `num / den` of polynomials in `q`.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, and `den = 1` whenever
/// `num = 0`. Two values are equal iff their canonical forms coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<T> {
    num: Poly<T>,
    den: Poly<T>,
}

/// Outcome of [`RatFunc::to_polynomial`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralReport<T> {
    pub poly: Poly<T>,
    pub integer_coefficients: bool,
}

impl<T: Scalar> RatFunc<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Result<Self, QFieldError> {
        if den.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly<T>, den: Poly<T>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
            }
        };
        let inv = T::one() / den.leading().expect("nonzero denominator").clone();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(T::from_i64(c))
    }

    /// `q^k` for any integer `k`; negative powers become `1/q^|k|`.
    pub fn q_pow(k: i64) -> Self {
        let mono = Poly::monomial(T::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            RatFunc {
                num: Poly::one(),
                den: mono,
            }
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn numer(&self) -> &Poly<T> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self, QFieldError> {
        if self.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QFieldError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, QFieldError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Evaluate at a concrete `q0`; a vanishing denominator is a pole.
    pub fn eval(&self, q0: &T) -> Result<T, QFieldError> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(QFieldError::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    pub fn to_polynomial(&self) -> Result<IntegralReport<T>, QFieldError> {
        if !self.den.is_one() {
            return Err(QFieldError::NotPolynomial {
                residual: self.den.to_string(),
            });
        }
        Ok(IntegralReport {
            integer_coefficients: self.num.all_integral(),
            poly: self.num.clone(),
        })
    }

    pub fn to_json(&self) -> RatFuncJson {
        RatFuncJson {
            num: self.num.coeffs().iter().map(ToString::to_string).collect(),
            den: self.den.coeffs().iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_json(json: &RatFuncJson) -> Result<Self, QFieldError> {
        let parse = |xs: &[String]| -> Result<Poly<T>, QFieldError> {
            xs.iter()
                .map(|s| s.parse::<T>().map_err(|_| QFieldError::Parse(s.clone())))
                .collect::<Result<Vec<_>, _>>()
                .map(Poly::from_coeffs)
        };
        Self::new(parse(&json.num)?, parse(&json.den)?)
    }
}

impl<T: Scalar> Default for RatFunc<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> From<Poly<T>> for RatFunc<T> {
    fn from(p: Poly<T>) -> Self {
        Self::from_poly(p)
    }
}

impl<T: Scalar> Add<&RatFunc<T>> for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn add(self, rhs: &RatFunc<T>) -> RatFunc<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<T: Scalar> Sub<&RatFunc<T>> for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn sub(self, rhs: &RatFunc<T>) -> RatFunc<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul<&RatFunc<T>> for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn mul(self, rhs: &RatFunc<T>) -> RatFunc<T> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<T: Scalar> Neg for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn neg(self) -> RatFunc<T> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<T: Scalar> Neg for RatFunc<T> {
    type Output = RatFunc<T>;
    fn neg(self) -> RatFunc<T> {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<T: Scalar> $tr<RatFunc<T>> for RatFunc<T> {
            type Output = RatFunc<T>;
            fn $m(self, rhs: RatFunc<T>) -> RatFunc<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&RatFunc<T>> for RatFunc<T> {
            type Output = RatFunc<T>;
            fn $m(self, rhs: &RatFunc<T>) -> RatFunc<T> {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> std::iter::Sum for RatFunc<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<T: Scalar> std::iter::Product for RatFunc<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

fn many_terms<T: Scalar>(p: &Poly<T>) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
}

impl<T: Scalar> fmt::Display for RatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if many_terms(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if many_terms(&self.den) || !self.den.leading().is_some_and(|c| c.is_one()) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for RatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RatFunc")
            .field("num", &self.num)
            .field("den", &self.den)
            .finish()
    }
}

/// Wire form: ascending-power coefficient strings of numerator and
/// denominator, each in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl<T: Scalar> Serialize for RatFunc<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for RatFunc<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = RatFuncJson::deserialize(deserializer)?;
        Self::from_json(&json).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type R = RatFunc<BigRational>;
    type P = Poly<BigRational>;

    fn p(c: &[i64]) -> P {
        P::from_coeffs(c.iter().map(|&x| BigRational::from_i64(x)).collect())
    }

    fn r(n: &[i64], d: &[i64]) -> R {
        R::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn telescoping_sum() {
        assert_eq!(&r(&[1], &[-1, 1]) + &r(&[-2, 1], &[-1, 1]), R::one());
    }

    #[test]
    fn factor_cancels() {
        let x = R::from_poly(p(&[-1, 0, 1]))
            .checked_div(&R::from_poly(p(&[-1, 1])))
            .unwrap();
        assert_eq!(x, R::from_poly(p(&[1, 1])));
    }

    #[test]
    fn negative_power_clears() {
        let x = &R::q_pow(-1) - &R::one();
        assert_eq!(x, r(&[1, -1], &[0, 1]));
        assert_eq!(&x * &R::q(), R::from_poly(p(&[1, -1])));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(R::one().checked_div(&R::zero()), Err(QFieldError::DivisionByZero));
        assert_eq!(R::new(p(&[1]), P::zero()), Err(QFieldError::DivisionByZero));
    }

    #[test]
    fn eval_and_pole() {
        let two = BigRational::from_i64(2);
        assert_eq!(R::from_poly(p(&[1, 1])).eval(&two).unwrap(), BigRational::from_i64(3));
        assert_eq!(R::from_poly(p(&[0, -1, 1])).eval(&two).unwrap(), two);
        assert!(matches!(
            r(&[1], &[-1, 1]).eval(&BigRational::from_i64(1)),
            Err(QFieldError::Pole(_))
        ));
    }

    #[test]
    fn polynomial_reports() {
        let rep = R::from_poly(p(&[-1, 0, 1]))
            .checked_div(&R::from_poly(p(&[-1, 1])))
            .unwrap()
            .to_polynomial()
            .unwrap();
        assert!(rep.integer_coefficients);
        assert_eq!(rep.poly, p(&[1, 1]));

        let half = R::from_poly(p(&[0, -1, 1])).scale(&"1/2".parse().unwrap());
        assert!(!half.to_polynomial().unwrap().integer_coefficients);

        match r(&[1], &[-1, 1]).to_polynomial() {
            Err(QFieldError::NotPolynomial { residual }) => assert_eq!(residual, "q - 1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn denominator_is_monic() {
        let x = r(&[2], &[0, 4]);
        assert_eq!(x.denom(), &p(&[0, 1]));
        assert_eq!(x.numer().coeffs(), &["1/2".parse::<BigRational>().unwrap()]);
    }

    #[test]
    fn json_shape() {
        let x = r(&[1], &[-1, 2]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"num":["1/2"],"den":["-1/2","1"]}"#);
        let back: R = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn display() {
        assert_eq!(r(&[-1, 1], &[0, 1]).to_string(), "(q - 1)/q");
        assert_eq!(r(&[1], &[-1, 1]).to_string(), "1/(q - 1)");
    }
}
