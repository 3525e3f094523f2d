//! Exact arithmetic in `Z[t^(±1/4)]` and the quantum symbols built on it.
//!
//! Exponents are stored as integers counting quarter powers of `t`, so the
//! monomial `t^(k/4)` has key `k`. The half-power `v = t^(1/2)` is key `2`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QAlgebraError {
    #[error("division is not exact: ({num}) / ({den})")]
    NonExactDivision { num: String, den: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse Laurent polynomial {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A Laurent polynomial in `t^(1/4)` with big-integer coefficients.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    terms: Vec<(i64, BigInt)>,
}

/// Largest exponent span for which multiplication uses a dense accumulator.
const DENSE_SPAN_LIMIT: i64 = 1 << 16;

impl LaurentQ {
    pub fn zero() -> Self {
        LaurentQ { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * t^(quarter/4)`.
    pub fn monomial(quarter: i64, coeff: impl Into<BigInt>) -> Self {
        let c = coeff.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentQ { terms: vec![(quarter, c)] }
        }
    }

    /// `t^(quarter/4)`.
    pub fn t_quarter(quarter: i64) -> Self {
        Self::monomial(quarter, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut v: Vec<(i64, BigInt)> = iter.into_iter().map(|(k, c)| (k, c.into())).collect();
        v.sort_by_key(|(k, _)| *k);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc += c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentQ { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Terms in ascending exponent order as (quarter exponent, coefficient).
    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, quarter: i64) -> BigInt {
        match self.terms.binary_search_by_key(&quarter, |(k, _)| *k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.first().map(|(k, _)| *k)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.last().map(|(k, _)| *k)
    }

    /// Multiplies by `t^(quarter/4)`.
    pub fn shift(&self, quarter: i64) -> Self {
        LaurentQ { terms: self.terms.iter().map(|(k, c)| (k + quarter, c.clone())).collect() }
    }

    pub fn shift_in_place(&mut self, quarter: i64) {
        for (k, _) in self.terms.iter_mut() {
            *k += quarter;
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQ { terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect() }
    }

    /// `t -> t^(-1)`: every exponent negated.
    pub fn substitute_inverse(&self) -> Self {
        LaurentQ { terms: self.terms.iter().rev().map(|(k, c)| (-k, c.clone())).collect() }
    }

    /// True iff invariant under `t -> t^(-1)`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.substitute_inverse()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / den`; fails unless the remainder is zero.
    pub fn div_exact(&self, den: &LaurentQ) -> Result<LaurentQ, QAlgebraError> {
        if den.is_zero() {
            return Err(QAlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let non_exact = || QAlgebraError::NonExactDivision { num: self.to_string(), den: den.to_string() };
        let (dk, dc) = den.terms.last().expect("nonzero");
        let floor = self.min_exponent().unwrap() - den.min_exponent().unwrap();
        let mut rem = self.clone();
        let mut quot: Vec<(i64, BigInt)> = Vec::new();
        while let Some((rk, rc)) = rem.terms.last().cloned() {
            let k = rk - dk;
            if k < floor {
                return Err(non_exact());
            }
            let (q, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return Err(non_exact());
            }
            rem -= &den.shift(k).scale(&q);
            quot.push((k, q));
        }
        quot.reverse();
        Ok(LaurentQ { terms: quot })
    }

    fn small_coeffs(&self) -> Option<Vec<(i64, i64)>> {
        self.terms.iter().map(|(k, c)| c.to_i64().map(|c| (*k, c))).collect()
    }

    fn mul_small(a: &[(i64, i64)], b: &[(i64, i64)]) -> Option<LaurentQ> {
        let lo = a[0].0 + b[0].0;
        let hi = a[a.len() - 1].0 + b[b.len() - 1].0;
        if hi - lo > DENSE_SPAN_LIMIT {
            return None;
        }
        let mut acc = vec![0i128; (hi - lo + 1) as usize];
        for &(ka, ca) in a {
            for &(kb, cb) in b {
                let slot = &mut acc[(ka + kb - lo) as usize];
                *slot = slot.checked_add(ca as i128 * cb as i128)?;
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (lo + i as i64, BigInt::from(c)))
            .collect();
        Some(LaurentQ { terms })
    }

    fn mul_big(a: &LaurentQ, b: &LaurentQ) -> LaurentQ {
        let lo = a.terms[0].0 + b.terms[0].0;
        let hi = a.terms[a.len() - 1].0 + b.terms[b.len() - 1].0;
        if hi - lo <= DENSE_SPAN_LIMIT {
            let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
            for (ka, ca) in &a.terms {
                for (kb, cb) in &b.terms {
                    acc[(ka + kb - lo) as usize] += ca * cb;
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect();
            return LaurentQ { terms };
        }
        let mut map = std::collections::BTreeMap::<i64, BigInt>::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                *map.entry(ka + kb).or_default() += ca * cb;
            }
        }
        LaurentQ { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    fn merge(&self, other: &LaurentQ, negate_other: bool) -> LaurentQ {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentQ { terms: out }
    }
}

impl Add<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        self.merge(rhs, false)
    }
}

impl Sub<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        self.merge(rhs, true)
    }
}

impl Mul<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        if self.is_zero() || rhs.is_zero() {
            return LaurentQ::zero();
        }
        if let (Some(a), Some(b)) = (self.small_coeffs(), rhs.small_coeffs()) {
            if let Some(p) = LaurentQ::mul_small(&a, &b) {
                return p;
            }
        }
        LaurentQ::mul_big(self, rhs)
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(mut self) -> LaurentQ {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentQ> for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: LaurentQ) -> LaurentQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentQ> for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: &LaurentQ) -> LaurentQ {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentQ> for &LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: LaurentQ) -> LaurentQ {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        *self = self.merge(rhs, false);
    }
}

impl AddAssign<LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: LaurentQ) {
        if self.is_zero() {
            *self = rhs;
        } else {
            *self = self.merge(&rhs, false);
        }
    }
}

impl SubAssign<&LaurentQ> for LaurentQ {
    fn sub_assign(&mut self, rhs: &LaurentQ) {
        *self = self.merge(rhs, true);
    }
}

impl MulAssign<&LaurentQ> for LaurentQ {
    fn mul_assign(&mut self, rhs: &LaurentQ) {
        *self = &*self * rhs;
    }
}

impl Sum for LaurentQ {
    fn sum<I: Iterator<Item = LaurentQ>>(iter: I) -> Self {
        iter.fold(LaurentQ::zero(), |mut a, b| {
            a += b;
            a
        })
    }
}

impl<'a> Sum<&'a LaurentQ> for LaurentQ {
    fn sum<I: Iterator<Item = &'a LaurentQ>>(iter: I) -> Self {
        iter.fold(LaurentQ::zero(), |mut a, b| {
            a += b;
            a
        })
    }
}

impl Product for LaurentQ {
    fn product<I: Iterator<Item = LaurentQ>>(iter: I) -> Self {
        iter.fold(LaurentQ::one(), |a, b| &a * &b)
    }
}

impl From<i64> for LaurentQ {
    fn from(c: i64) -> Self {
        LaurentQ::constant(c)
    }
}

/// Renders `t^(k/4)` with the fraction reduced; exponent 0 renders empty.
fn render_power(k: i64) -> String {
    let g = k.gcd(&4);
    let (p, q) = (k / g, 4 / g);
    match (q, p) {
        (_, 0) => String::new(),
        (1, p) if p > 0 => format!("t^{p}"),
        (1, p) => format!("t^({p})"),
        (q, p) => format!("t^({p}/{q})"),
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let pow = render_power(*k);
            match (pow.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{pow}")?,
                (false, false) => write!(f, "{mag}*{pow}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQ({self})")
    }
}

fn parse_exponent(s: &str) -> Option<i64> {
    let inner = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s);
    match inner.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 || (4 * p) % q != 0 {
                return None;
            }
            Some(4 * p / q)
        }
        None => inner.trim().parse::<i64>().ok().map(|e| 4 * e),
    }
}

fn parse_term(body: &str) -> Option<(i64, BigInt)> {
    let body = body.trim();
    if body.is_empty() {
        return None;
    }
    let (coeff_txt, power_txt) = match body.find('t') {
        Some(pos) => (body[..pos].trim_end_matches('*').trim(), Some(&body[pos + 1..])),
        None => (body, None),
    };
    let coeff = if coeff_txt.is_empty() { BigInt::one() } else { coeff_txt.parse::<BigInt>().ok()? };
    let k = match power_txt {
        None => 0,
        Some("") => 4,
        Some(p) => parse_exponent(p.strip_prefix('^')?)?,
    };
    Some((k, coeff))
}

impl FromStr for LaurentQ {
    type Err = QAlgebraError;

    /// Parses the canonical rendering (and reasonable variations of it).
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| QAlgebraError::Parse { text: text.to_string(), reason: reason.to_string() };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        let mut depth = 0i32;
        let mut start = 0usize;
        let bytes = compact.as_bytes();
        let mut pieces: Vec<&str> = Vec::new();
        for (i, &ch) in bytes.iter().enumerate() {
            match ch {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 && i > 0 && bytes[i - 1] != b'^' => {
                    pieces.push(&compact[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (neg, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            let (k, c) = parse_term(body).ok_or_else(|| err(&format!("bad term {piece:?}")))?;
            terms.push((k, if neg { -c } else { c }));
        }
        Ok(LaurentQ::from_terms(terms))
    }
}

/// `{a} = t^(a/2) - t^(-a/2)`.
pub fn qbrace(a: i64) -> LaurentQ {
    LaurentQ::from_terms([(2 * a, 1), (-2 * a, -1)])
}

/// Balanced quantum integer `[a] = {a}/{1}`; `[-a] = -[a]`.
pub fn qint(a: i64) -> LaurentQ {
    if a < 0 {
        return -qint(-a);
    }
    LaurentQ::from_terms((0..a).map(|k| (2 * (a - 1) - 4 * k, 1)))
}

/// `{a}_b = {a}{a-1}...{a-b+1}`; 1 for b = 0 and 0 for b < 0.
pub fn pochhammer(a: i64, b: i64) -> LaurentQ {
    if b < 0 {
        return LaurentQ::zero();
    }
    (0..b).map(|s| qbrace(a - s)).product()
}

/// `{a}_{b,t^eps} = prod_{s<b} (1 - t^(eps*(a-s)))`; 0 for b < 0.
pub fn pochhammer_signed(a: i64, b: i64, eps: i8) -> LaurentQ {
    if b < 0 {
        return LaurentQ::zero();
    }
    let e = eps as i64;
    (0..b).map(|s| LaurentQ::from_terms([(0, 1), (4 * e * (a - s), -1)])).product()
}

/// Balanced quantum binomial `{a}_b / {b}_b`; 0 for b < 0.
pub fn qbinom(a: i64, b: i64) -> Result<LaurentQ, QAlgebraError> {
    if b < 0 {
        return Ok(LaurentQ::zero());
    }
    pochhammer(a, b).div_exact(&pochhammer(b, b))
}

/// Gaussian binomial in the variable `t^eps`: `{a}_{b,t^eps} / {b}_{b,t^eps}`.
pub fn qbinom_signed(a: i64, b: i64, eps: i8) -> Result<LaurentQ, QAlgebraError> {
    if b < 0 {
        return Ok(LaurentQ::zero());
    }
    pochhammer_signed(a, b, eps).div_exact(&pochhammer_signed(b, b, eps))
}

/// Free-function form of [`LaurentQ::substitute_inverse`].
pub fn substitute_inverse(p: &LaurentQ) -> LaurentQ {
    p.substitute_inverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lq(s: &str) -> LaurentQ {
        s.parse().unwrap()
    }

    #[test]
    fn renders_canonical_text() {
        assert_eq!(LaurentQ::zero().to_string(), "0");
        assert_eq!(LaurentQ::one().to_string(), "1");
        assert_eq!(qbrace(1).to_string(), "-t^(-1/2) + t^(1/2)");
        assert_eq!(LaurentQ::from_terms([(8, 3), (-1, -2), (4, 1)]).to_string(), "-2*t^(-1/4) + t^1 + 3*t^2");
        assert_eq!(LaurentQ::monomial(0, -7).to_string(), "-7");
        assert_eq!(LaurentQ::t_quarter(-4).to_string(), "t^(-1)");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "1", "-t^(-1/2) + t^(1/2)", "-2*t^(-1/4) + t^1 + 3*t^2", "t^(-3/4) - 5"] {
            assert_eq!(lq(s).to_string(), s);
        }
        assert_eq!(lq("t + t^2"), LaurentQ::from_terms([(4, 1), (8, 1)]));
        assert!("t^(1/3)".parse::<LaurentQ>().is_err());
        assert!("".parse::<LaurentQ>().is_err());
    }

    #[test]
    fn qbrace_values() {
        assert!(qbrace(0).is_zero());
        assert_eq!(qbrace(1), lq("t^(1/2) - t^(-1/2)"));
        assert_eq!(qbrace(-1), -qbrace(1));
    }

    #[test]
    fn qint_values() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(1), LaurentQ::one());
        assert_eq!(qint(2), lq("t^(1/2) + t^(-1/2)"));
        for a in 0..8 {
            assert_eq!(qbrace(a).div_exact(&qbrace(1)).unwrap(), qint(a));
        }
        let n = 3;
        let geometric: LaurentQ = (0..=n).map(|b| LaurentQ::t_quarter(2 * (-n + 2 * b))).sum();
        assert_eq!(geometric, qint(n + 1));
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(5, 0), LaurentQ::one());
        assert!(pochhammer(5, -2).is_zero());
        assert_eq!(pochhammer(3, 2), &qbrace(3) * &pochhammer(2, 1));
        assert_eq!(pochhammer_signed(1, 1, 1), lq("1 - t"));
        assert_eq!(pochhammer_signed(9, 0, -1), LaurentQ::one());
    }

    #[test]
    fn qbinom_values() {
        assert_eq!(qbinom(3, 3).unwrap(), LaurentQ::one());
        assert_eq!(qbinom(7, 0).unwrap(), LaurentQ::one());
        assert_eq!(qbinom(5, 2).unwrap(), qbinom(5, 3).unwrap());
        assert_eq!(qbinom(2, 1).unwrap(), qint(2));
        assert!(qbinom(2, 3).unwrap().is_zero());
        assert_eq!(qbinom_signed(2, 1, 1).unwrap(), lq("1 + t"));
        assert_eq!(qbinom_signed(2, 1, -1).unwrap(), lq("1 + t^(-1)"));
    }

    #[test]
    fn div_exact_rejects_remainders() {
        assert!(qint(3).div_exact(&qint(2)).is_err());
        assert!(lq("3*t").div_exact(&lq("2")).is_err());
        assert_eq!(LaurentQ::one().div_exact(&LaurentQ::zero()), Err(QAlgebraError::DivisionByZero));
        let p = &lq("t^(-1/2) + 2 - t^3") * &lq("1 - t^(1/4)");
        assert_eq!(p.div_exact(&lq("1 - t^(1/4)")).unwrap(), lq("t^(-1/2) + 2 - t^3"));
    }

    #[test]
    fn big_coefficients_take_slow_path() {
        let big = LaurentQ::monomial(0, BigInt::from(i64::MAX) * 4);
        let p = &big * &big;
        assert_eq!(p.coeff(0), BigInt::from(i64::MAX) * BigInt::from(i64::MAX) * 16);
        let spread = LaurentQ::from_terms([(0, 1), (DENSE_SPAN_LIMIT * 2, 1)]);
        assert_eq!((&spread * &spread).len(), 3);
    }

    #[test]
    fn substitute_inverse_is_involution() {
        let p = lq("-2*t^(-1/4) + t + 3*t^2");
        assert_eq!(p.substitute_inverse().substitute_inverse(), p);
        assert_eq!(substitute_inverse(&qbrace(1)), -qbrace(1));
        assert_eq!(LaurentQ::one().substitute_inverse(), LaurentQ::one());
    }
}
