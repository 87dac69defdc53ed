//! Exact scalars in the rational function field `Q(t)` with `t = q^(1/N)`.
//!
//! A [`QScalar`] is stored in a canonical reduced form: a Laurent numerator
//! over a polynomial denominator whose constant term is `1`, with no common
//! factor between the two. Equality is therefore structural.
//!
//! Rational constants carry root order `0` and combine with scalars of any
//! root order. Two non-constant scalars must share the same root order.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Pow, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("root order mismatch: q^(1/{0}) vs q^(1/{1})")]
    RootMismatch(u32, u32),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
    #[error("evaluation hits a pole")]
    Pole,
    #[error("evaluation point must be a positive rational")]
    NonPositive,
}

/// Dense polynomial helpers over `Q`; index `k` holds the coefficient of `t^k`.
mod poly {
    use super::Rat;
    use num::traits::{One, Zero};

    pub fn trim(p: &mut Vec<Rat>) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let n = a.len().max(b.len());
        let mut r = Vec::with_capacity(n);
        for k in 0..n {
            match (a.get(k), b.get(k)) {
                (Some(x), Some(y)) => r.push(x + y),
                (Some(x), None) => r.push(x.clone()),
                (None, Some(y)) => r.push(y.clone()),
                (None, None) => unreachable!(),
            }
        }
        trim(&mut r);
        r
    }

    pub fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![Rat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    r[i + j] += x * y;
                }
            }
        }
        trim(&mut r);
        r
    }

    pub fn scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
        let mut r: Vec<Rat> = a.iter().map(|x| x * c).collect();
        trim(&mut r);
        r
    }

    /// Quotient and remainder; `b` must be non-zero.
    pub fn divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let mut rem = a.to_vec();
        trim(&mut rem);
        let db = b.len() - 1;
        let lead = b[db].clone();
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let mut quot = vec![Rat::zero(); rem.len() - db];
        while rem.len() >= b.len() {
            let shift = rem.len() - b.len();
            let c = rem.last().unwrap() / &lead;
            for (k, bk) in b.iter().enumerate() {
                if !bk.is_zero() {
                    rem[shift + k] -= &c * bk;
                }
            }
            quot[shift] = c;
            rem.pop();
            trim(&mut rem);
        }
        trim(&mut quot);
        (quot, rem)
    }

    pub fn monic(a: &[Rat]) -> Vec<Rat> {
        let lead = a.last().unwrap().clone();
        a.iter().map(|x| x / &lead).collect()
    }

    pub fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y);
            x = y;
            y = r;
        }
        if x.is_empty() {
            return x;
        }
        monic(&x)
    }

    pub fn is_one(a: &[Rat]) -> bool {
        a.len() == 1 && a[0].is_one()
    }

    /// Extended Euclid: returns `(g, s)` with `s*a = g mod m`.
    pub fn inverse_mod(a: &[Rat], m: &[Rat]) -> Option<Vec<Rat>> {
        let (mut r0, mut r1) = (m.to_vec(), divrem(a, m).1);
        let (mut s0, mut s1): (Vec<Rat>, Vec<Rat>) = (Vec::new(), vec![Rat::one()]);
        while !r1.is_empty() {
            let (qt, r) = divrem(&r0, &r1);
            let s = add(&s0, &scale(&mul(&qt, &s1), &-Rat::one()));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].clone();
        Some(divrem(&scale(&s0, &(Rat::one() / c)), m).1)
    }
}

/// Element of `Q(q^(1/N))` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    root: u32,
    shift: i32,
    num: Vec<Rat>,
    den: Vec<Rat>,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar { root: 0, shift: 0, num: Vec::new(), den: vec![Rat::one()] }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(k)))
    }

    pub fn from_rat(c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QScalar { root: 0, shift: 0, num: vec![c], den: vec![Rat::one()] }
    }

    /// `c * t^k` where `t = q^(1/root)`.
    pub fn monomial(c: Rat, k: i32, root: u32) -> Self {
        assert!(root > 0, "root order must be positive");
        Self::build(root, k, vec![c], vec![Rat::one()])
    }

    /// `t^k = q^(k/root)`.
    pub fn t_pow(k: i32, root: u32) -> Self {
        Self::monomial(Rat::one(), k, root)
    }

    /// `q^k` for integer `k`.
    pub fn q_pow(k: i32, root: u32) -> Self {
        Self::t_pow(k * root as i32, root)
    }

    pub fn q(root: u32) -> Self {
        Self::q_pow(1, root)
    }

    /// `nu = q - q^(-1)`.
    pub fn nu(root: u32) -> Self {
        Self::q_pow(1, root) - Self::q_pow(-1, root)
    }

    pub fn root_order(&self) -> u32 {
        self.root
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.root == 0 && self.num.len() == 1 && self.num[0].is_one()
    }

    /// True when the denominator is `1`.
    pub fn is_laurent(&self) -> bool {
        poly::is_one(&self.den)
    }

    /// Returns `Some(c)` when the scalar is the rational constant `c`.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.root == 0 {
            Some(self.num[0].clone())
        } else {
            None
        }
    }

    /// Returns `(c, k)` when the scalar is a single term `c * t^k`.
    pub fn as_monomial(&self) -> Option<(Rat, i32)> {
        if self.is_laurent() && self.num.iter().filter(|c| !c.is_zero()).count() == 1 {
            Some((self.num[0].clone(), self.shift))
        } else {
            None
        }
    }

    /// Conjugation of the real form: `q` is real, so this is the identity.
    pub fn conj(&self) -> Self {
        self.clone()
    }

    fn build(root: u32, shift: i32, mut num: Vec<Rat>, mut den: Vec<Rat>) -> Self {
        poly::trim(&mut num);
        poly::trim(&mut den);
        assert!(!den.is_empty());
        if num.is_empty() {
            return Self::zero();
        }
        let mut shift = shift;
        let lead_zero = num.iter().take_while(|c| c.is_zero()).count();
        if lead_zero > 0 {
            num.drain(..lead_zero);
            shift += lead_zero as i32;
        }
        let den_zero = den.iter().take_while(|c| c.is_zero()).count();
        if den_zero > 0 {
            den.drain(..den_zero);
            shift -= den_zero as i32;
        }
        if !poly::is_one(&den) {
            if den.len() > 1 {
                let g = poly::gcd(&num, &den);
                if g.len() > 1 {
                    num = poly::divrem(&num, &g).0;
                    den = poly::divrem(&den, &g).0;
                }
            }
            let c0 = den[0].clone();
            if !c0.is_one() {
                let inv = Rat::one() / &c0;
                num = poly::scale(&num, &inv);
                den = poly::scale(&den, &inv);
            }
        }
        let constant = shift == 0 && num.len() == 1 && den.len() == 1;
        QScalar { root: if constant { 0 } else { root }, shift, num, den }
    }

    fn common_root(&self, other: &Self) -> Result<u32, ScalarError> {
        match (self.root, other.root) {
            (0, r) | (r, 0) => Ok(r),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(ScalarError::RootMismatch(a, b)),
        }
    }

    fn laurent_add(s1: i32, a: &[Rat], s2: i32, b: &[Rat]) -> (i32, Vec<Rat>) {
        let s = s1.min(s2);
        let pad = |sh: i32, p: &[Rat]| {
            let mut v = vec![Rat::zero(); (sh - s) as usize];
            v.extend_from_slice(p);
            v
        };
        (s, poly::add(&pad(s1, a), &pad(s2, b)))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let root = self.common_root(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.den == other.den {
            let (s, n) = Self::laurent_add(self.shift, &self.num, other.shift, &other.num);
            return Ok(Self::build(root, s, n, self.den.clone()));
        }
        let a = poly::mul(&self.num, &other.den);
        let b = poly::mul(&other.num, &self.den);
        let (s, n) = Self::laurent_add(self.shift, &a, other.shift, &b);
        Ok(Self::build(root, s, n, poly::mul(&self.den, &other.den)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let root = self.common_root(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let num = poly::mul(&self.num, &other.num);
        let den = if self.is_laurent() {
            other.den.clone()
        } else if other.is_laurent() {
            self.den.clone()
        } else {
            poly::mul(&self.den, &other.den)
        };
        Ok(Self::build(root, self.shift + other.shift, num, den))
    }

    pub fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::build(self.root, -self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_mul(&other.try_inv()?)
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.try_inv().expect("zero to a negative power") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Substitutes `q = q0`. Works in the real field `Q(q0^(1/N))`.
    pub fn eval(&self, q0: &Rat) -> Result<EvalValue, ScalarError> {
        if !q0.is_positive() {
            return Err(ScalarError::NonPositive);
        }
        if self.is_zero() {
            return Ok(EvalValue::rational(Rat::zero()));
        }
        if self.root == 0 {
            return Ok(EvalValue::rational(self.num[0].clone()));
        }
        // Reduce t^root = q0 to an irreducible binomial t^d = base.
        let mut d = self.root;
        let mut base = q0.clone();
        'outer: loop {
            for p in 2..=d {
                if d % p == 0 && is_prime(p) {
                    if let Some(r) = rational_root(&base, p) {
                        base = r;
                        d /= p;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        let d = d as usize;
        // modulus t^d - base
        let mut modulus = vec![Rat::zero(); d + 1];
        modulus[0] = -base.clone();
        modulus[d] = Rat::one();
        let reduce = |shift: i32, p: &[Rat]| -> Vec<Rat> {
            let mut out = vec![Rat::zero(); d];
            for (k, c) in p.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let e = shift as i64 + k as i64;
                let r = e.rem_euclid(d as i64);
                let m = (e - r) / d as i64;
                let f: Rat = Pow::pow(&base, m as i32);
                out[r as usize] += c * f;
            }
            poly::trim(&mut out);
            out
        };
        let n = reduce(self.shift, &self.num);
        let den = reduce(0, &self.den);
        if den.is_empty() {
            return Err(ScalarError::Pole);
        }
        let inv = poly::inverse_mod(&den, &modulus).ok_or(ScalarError::Pole)?;
        let mut v = poly::divrem(&poly::mul(&n, &inv), &modulus).1;
        v.resize(d, Rat::zero());
        Ok(EvalValue { degree: d as u32, base, coeffs: v })
    }

    /// Parses the text form produced by `Display`, e.g. `2*q^(1/3) - q^(-1) + 1/2`.
    pub fn parse(s: &str, root: u32) -> Result<Self, ScalarError> {
        let toks = crate::text::lex(s).map_err(ScalarError::Parse)?;
        let mut p = crate::text::Parser::new(&toks);
        let v = p.scalar_expr(root).map_err(ScalarError::Parse)?;
        if !p.done() {
            return Err(ScalarError::Parse(format!("trailing input in {s:?}")));
        }
        Ok(v)
    }

    fn fmt_laurent(f: &mut fmt::Formatter<'_>, root: u32, shift: i32, p: &[Rat]) -> fmt::Result {
        let mut first = true;
        for (k, c) in p.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = shift + k as i32;
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            let ex = Rat::new(BigInt::from(e), BigInt::from(root.max(1)));
            if ex.is_one() {
                write!(f, "q")?;
            } else if ex.is_integer() && ex.is_positive() {
                write!(f, "q^{ex}")?;
            } else {
                write!(f, "q^({ex})")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn integer_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_zero() || n.is_one() {
        return Some(n.clone());
    }
    let r = n.nth_root(k);
    if Pow::pow(&r, k) == *n {
        Some(r)
    } else {
        None
    }
}

fn rational_root(x: &Rat, k: u32) -> Option<Rat> {
    let n = integer_root(x.numer(), k)?;
    let d = integer_root(x.denom(), k)?;
    Some(Rat::new(n, d))
}

/// Exact value in `Q(base^(1/degree))`: `sum_k coeffs[k] * base^(k/degree)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalValue {
    pub degree: u32,
    pub base: Rat,
    pub coeffs: Vec<Rat>,
}

impl EvalValue {
    fn rational(c: Rat) -> Self {
        EvalValue { degree: 1, base: Rat::one(), coeffs: vec![c] }
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rat::zero))
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        let b = self.base.to_f64().unwrap_or(f64::NAN);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * b.powf(k as f64 / self.degree as f64))
            .sum()
    }
}

impl fmt::Display for EvalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k == 0 {
                parts.push(format!("{c}"));
            } else {
                parts.push(format!("{c}*{}^({k}/{})", self.base, self.degree));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            return Self::fmt_laurent(f, self.root, self.shift, &self.num);
        }
        write!(f, "(")?;
        Self::fmt_laurent(f, self.root, self.shift, &self.num)?;
        write!(f, ")/(")?;
        Self::fmt_laurent(f, self.root, 0, &self.den)?;
        write!(f, ")")
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar[{}]({})", self.root, self)
    }
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QScalar {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&QScalar> for &QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                let f: fn(&QScalar, &QScalar) -> Result<QScalar, ScalarError> = $f;
                f(self, rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<QScalar> for &QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.try_add(b));
binop!(Sub, sub, |a, b| a.try_add(&-b));
binop!(Mul, mul, |a, b| a.try_mul(b));
binop!(Div, div, |a, b| a.try_div(b));

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            root: self.root,
            shift: self.shift,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, rhs: &QScalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn nu_at_one_vanishes() {
        let v = QScalar::nu(3).eval(&r(1, 1)).unwrap();
        assert_eq!(v.as_rational(), Some(r(0, 1)));
    }

    #[test]
    fn minus_one_plus_q_squared_times_q_at_one() {
        let q = QScalar::q(1);
        let x = -(QScalar::one() + &q * &q) * &q;
        assert_eq!(x.eval(&r(1, 1)).unwrap().as_rational(), Some(r(-2, 1)));
    }

    #[test]
    fn canonical_form_is_structural() {
        let q = QScalar::q(2);
        let one = QScalar::one();
        let a = (&q * &q - &one) / (&q - &one);
        assert_eq!(a, &q + &one);
        assert!(a.is_laurent());
        let b = &one / (&one + &q);
        let c = (&q - &one) / (&q * &q - &one);
        assert_eq!(b, c);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(QScalar::one().try_div(&QScalar::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn root_mismatch_is_an_error() {
        let a = QScalar::t_pow(1, 2);
        let b = QScalar::t_pow(1, 3);
        assert_eq!(a.try_add(&b), Err(ScalarError::RootMismatch(2, 3)));
        assert!(a.try_add(&QScalar::from_int(5)).is_ok());
    }

    #[test]
    fn eval_in_radical_extension() {
        // q^(1/2) at q = 2 is sqrt(2)
        let t = QScalar::t_pow(1, 2);
        let v = (&t * &t * &t).eval(&r(2, 1)).unwrap();
        assert_eq!(v.coeffs, vec![r(0, 1), r(2, 1)]);
        let w = (QScalar::one() / (QScalar::one() + &t)).eval(&r(2, 1)).unwrap();
        // 1/(1+sqrt2) = sqrt2 - 1
        assert_eq!(w.coeffs, vec![r(-1, 1), r(1, 1)]);
        // q^(1/2) at q = 4 is 2
        assert_eq!(t.eval(&r(4, 1)).unwrap().as_rational(), Some(r(2, 1)));
    }

    #[test]
    fn eval_pole() {
        let q = QScalar::q(1);
        let x = QScalar::one() / (&q - QScalar::one());
        assert_eq!(x.eval(&r(1, 1)), Err(ScalarError::Pole));
    }

    #[test]
    fn display_round_trip() {
        let t = QScalar::t_pow(1, 3);
        let q = QScalar::q(3);
        let samples = vec![
            QScalar::zero(),
            QScalar::from_rat(r(-3, 4)),
            &t * QScalar::from_int(2) - q.pow(-1) + QScalar::from_rat(r(1, 2)),
            (&q + &t) / (QScalar::one() + &q * &q),
            -QScalar::nu(3) * t.pow(-2),
        ];
        for s in samples {
            let txt = s.to_string();
            assert_eq!(QScalar::parse(&txt, 3).unwrap(), s, "{txt}");
        }
        assert_eq!(QScalar::parse("q^(2/3)", 3).unwrap(), t.pow(2));
        assert!(QScalar::parse("q^(1/2)", 3).is_err());
    }
}
