//! Exact coefficient arithmetic.
//!
//! Every coefficient in the algebra lives in the field of rational functions
//! `Q(u)` where `q = u^2`. Working in `u` rather than `q` makes half powers
//! such as `q^(1/2)` exact. A [`Scalar`] is kept in canonical form: numerator
//! and denominator are coprime and the denominator is monic, so structural
//! equality is field equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarError;

pub type Rational = BigRational;

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact square root of a rational, if it exists.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Dense univariate polynomial in `u` with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `u^i`; trailing zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        UPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of low-order zero coefficients (the `u`-adic valuation).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// True when exactly one coefficient is nonzero.
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.valuation() + 1 == self.coeffs.len()
    }

    pub fn has_odd_powers(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero())
    }

    /// Divides by `u^k`; the caller guarantees `k <= valuation()`.
    fn shift_down(&self, k: usize) -> Self {
        debug_assert!(k <= self.valuation() || self.is_zero());
        UPoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.lc().recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (UPoly::zero(), UPoly::zero());
        };
        if nd < dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let lc = self.lc();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates a polynomial with only even powers at `u^2 = q0`.
    fn eval_even(&self, q0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().step_by(2).rev() {
            acc = acc * q0 + c;
        }
        acc
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        UPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        UPoly::from_coeffs(coeffs)
    }
}

/// An element of `Q(u)`, `q = u^2`, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: UPoly,
    den: UPoly,
}

impl Scalar {
    pub fn from_rational(c: Rational) -> Self {
        Scalar {
            num: UPoly::constant(c),
            den: UPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `u^e` for any integer `e`, i.e. `q^(e/2)`.
    pub fn u_pow(e: i64) -> Self {
        let e_abs = e.unsigned_abs() as usize;
        if e >= 0 {
            Scalar {
                num: UPoly::monomial(Rational::one(), e_abs),
                den: UPoly::one(),
            }
        } else {
            Scalar {
                num: UPoly::one(),
                den: UPoly::monomial(Rational::one(), e_abs),
            }
        }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::u_pow(2 * e)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `c * q^e`.
    pub fn q_term(c: i64, e: i64) -> Self {
        &Self::from_int(c) * &Self::q_pow(e)
    }

    /// Builds `num/den`, canonicalizing.
    pub fn from_parts(num: UPoly, den: UPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: UPoly, den: UPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_monomial() {
            let k = num.valuation().min(den.valuation());
            (num.shift_down(k), den.shift_down(k))
        } else {
            let g = num.gcd(&den);
            if g.degree() == Some(0) {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.lc();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    /// The value as a rational constant, if it does not depend on `u`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0) {
            Some(self.num.lc() / self.den.lc())
        } else {
            None
        }
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Complex conjugation. The coefficient field is real (`u` is a real
    /// parameter), so this is the identity.
    pub fn conj(&self) -> Self {
        self.clone()
    }

    fn uses_odd_powers(&self) -> bool {
        self.num.has_odd_powers() || self.den.has_odd_powers()
    }

    /// Exact substitution `u^2 = q0` for `q0` in the open unit interval.
    pub fn eval(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        if !q0.is_positive() || q0 >= &Rational::one() {
            return Err(ScalarError::OutOfRange(q0.clone()));
        }
        self.eval_at_q(q0)
    }

    /// Substitution `u^2 = q0` without the range restriction.
    pub fn eval_at_q(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        let (n, d) = if self.uses_odd_powers() {
            let u0 = rational_sqrt(q0).ok_or_else(|| ScalarError::NonSquare(q0.clone()))?;
            (self.num.eval(&u0), self.den.eval(&u0))
        } else {
            (self.num.eval_even(q0), self.den.eval_even(q0))
        };
        if d.is_zero() {
            return Err(ScalarError::Pole(q0.clone()));
        }
        Ok(n / d)
    }

    /// Floating-point evaluation at `u^2 = q0`.
    pub fn eval_f64(&self, q0: f64) -> f64 {
        let u0 = q0.sqrt();
        let ev = |p: &UPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * u0 + rational_to_f64(c))
        };
        ev(&self.num) / ev(&self.den)
    }
}

pub fn rational_to_f64(c: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar {
            num: UPoly::one(),
            den: UPoly::one(),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::from_rational(c)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Scalar::canonical(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_monomial() && rhs.den.is_monomial() {
            // Both denominators are monic powers of u.
            let (i, j) = (self.den.valuation(), rhs.den.valuation());
            let m = i.max(j);
            let num = &self.num.shift_up(m - i) + &rhs.num.shift_up(m - j);
            return Scalar::canonical(num, UPoly::monomial(Rational::one(), m));
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::canonical(num, &self.den * &rhs.den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if self.den.is_monomial() && rhs.den.is_monomial() {
            return Scalar::canonical(&self.num * &rhs.num, &self.den * &rhs.den);
        }
        // Cross-cancel first to keep the gcd small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = rhs.den.div_rem(&g1).0;
        let n2 = rhs.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        Scalar::canonical(&n1 * &n2, &d1 * &d2)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $tra:ident, $ma:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tra<&Scalar> for Scalar {
            fn $ma(&mut self, rhs: &Scalar) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $tra for Scalar {
            fn $ma(&mut self, rhs: Scalar) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

forward_owned!(Add, add, AddAssign, add_assign);
forward_owned!(Sub, sub, SubAssign, sub_assign);
forward_owned!(Mul, mul, MulAssign, mul_assign);

/// Renders `c * u^e` as a `q`-power term.
fn fmt_term(c: &Rational, e: i64, out: &mut String) {
    let mono = match e {
        0 => String::new(),
        2 => "q".to_string(),
        e if e % 2 == 0 => format!("q^{}", e / 2),
        e => format!("q^({}/2)", e),
    };
    if mono.is_empty() {
        out.push_str(&c.to_string());
    } else if c.is_one() {
        out.push_str(&mono);
    } else if (-c).is_one() {
        out.push('-');
        out.push_str(&mono);
    } else {
        out.push_str(&format!("{}*{}", c, mono));
    }
}

/// Renders `sum c_i u^(i - shift)` in ascending order.
fn fmt_laurent(p: &UPoly, shift: i64) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = String::new();
        fmt_term(c, i as i64 - shift, &mut term);
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_laurent(self, 0))
    }
}

impl Scalar {
    /// Number of additive terms in the rendered form; used to decide on
    /// parentheses when embedding a scalar in a larger expression.
    pub fn is_single_term(&self) -> bool {
        self.den.is_monomial() && (self.num.is_zero() || self.num.is_monomial())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_monomial() {
            // Monic monomial denominator: fold it into negative exponents.
            write!(f, "{}", fmt_laurent(&self.num, self.den.valuation() as i64))
        } else {
            write!(
                f,
                "({})/({})",
                fmt_laurent(&self.num, 0),
                fmt_laurent(&self.den, 0)
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2_over_one_minus_q2() -> Scalar {
        let one_minus = &Scalar::one() - &Scalar::q_pow(2);
        &Scalar::q_pow(2) * &one_minus.inv().unwrap()
    }

    #[test]
    fn self_division_is_one() {
        let x = &Scalar::one() - &Scalar::q_pow(2);
        assert_eq!(x.checked_div(&x).unwrap(), Scalar::one());
    }

    #[test]
    fn q_times_inverse() {
        assert_eq!(&Scalar::q() * &Scalar::q_pow(-1), Scalar::one());
        assert_eq!(&Scalar::u_pow(2) * &Scalar::u_pow(-2), Scalar::one());
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let x = q2_over_one_minus_q2();
        // num -u^4, den u^4 - 1
        let mut num = vec![Rational::zero(); 5];
        num[4] = rat(-1, 1);
        let mut den = vec![Rational::zero(); 5];
        den[0] = rat(-1, 1);
        den[4] = rat(1, 1);
        assert_eq!(x.numer(), &UPoly::from_coeffs(num));
        assert_eq!(x.denom(), &UPoly::from_coeffs(den));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(q2_over_one_minus_q2().eval(&rat(1, 2)).unwrap(), rat(1, 3));
        assert_eq!(Scalar::one().eval(&rat(3, 7)).unwrap(), rat(1, 1));
        assert_eq!(Scalar::q_pow(-1).eval(&rat(1, 4)).unwrap(), rat(4, 1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert!(Scalar::from_parts(UPoly::one(), UPoly::zero()).is_err());
    }

    #[test]
    fn odd_powers_need_a_square() {
        let half = Scalar::u_pow(1);
        assert!(matches!(
            half.eval(&rat(1, 2)),
            Err(ScalarError::NonSquare(_))
        ));
        assert_eq!(half.eval(&rat(1, 4)).unwrap(), rat(1, 2));
    }

    #[test]
    fn pole_is_reported() {
        let x = (&Scalar::one() - &Scalar::q_pow(2)).inv().unwrap();
        assert!(matches!(x.eval_at_q(&rat(1, 1)), Err(ScalarError::Pole(_))));
        assert!(matches!(x.eval(&rat(2, 1)), Err(ScalarError::OutOfRange(_))));
    }

    #[test]
    fn rendering() {
        assert_eq!(Scalar::q_pow(-1).to_string(), "q^-1");
        assert_eq!(Scalar::q().to_string(), "q");
        assert_eq!(Scalar::u_pow(1).to_string(), "q^(1/2)");
        assert_eq!(Scalar::u_pow(-3).to_string(), "q^(-3/2)");
        assert_eq!((&Scalar::one() - &Scalar::q_pow(2)).to_string(), "1 - q^2");
        assert_eq!(q2_over_one_minus_q2().to_string(), "(-q^2)/(-1 + q^2)");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::from_rational(rat(-3, 2)).to_string(), "-3/2");
    }

    #[test]
    fn gcd_cancellation() {
        // (1 - q^4) / (1 - q^2) = 1 + q^2
        let a = &Scalar::one() - &Scalar::q_pow(4);
        let b = &Scalar::one() - &Scalar::q_pow(2);
        assert_eq!(a.checked_div(&b).unwrap(), &Scalar::one() + &Scalar::q_pow(2));
    }
}
