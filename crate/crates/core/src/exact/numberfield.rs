//! Number fields Q[t]/(m(t)) with exact rational arithmetic.
//!
//! A field is described by a monic minimal polynomial over Q; elements are
//! reduced remainders mod that polynomial. Degree 1 degenerates to Q itself
//! and is used as the uniform representation of the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Exact rational number; numerator/denominator are arbitrary-precision,
/// always stored reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A number field Q[t]/(m(t)) with m monic of degree >= 1.
///
/// The minimal polynomial is not tested for irreducibility; a reducible m
/// surfaces lazily as [`ArithError::ZeroDivisor`] during inversion.
#[derive(Debug, PartialEq, Eq)]
pub struct NumberField {
    name: String,
    /// Coefficients of m, ascending degree, last = 1.
    minpoly: Vec<Rational>,
}

impl NumberField {
    pub fn new(name: impl Into<String>, minpoly: Vec<Rational>) -> Result<Arc<Self>, ArithError> {
        let mut minpoly = minpoly;
        while minpoly.last().is_some_and(|c| c.is_zero()) {
            minpoly.pop();
        }
        if minpoly.len() < 2 {
            return Err(ArithError::ZeroPolynomial);
        }
        let lc = minpoly.last().unwrap().clone();
        if !lc.is_one() {
            for c in &mut minpoly {
                *c /= lc.clone();
            }
        }
        Ok(Arc::new(NumberField { name: name.into(), minpoly }))
    }

    /// The rationals, represented uniformly as Q[t]/(t).
    pub fn rationals() -> Arc<Self> {
        NumberField::new("t", vec![Rational::zero(), Rational::one()]).unwrap()
    }

    /// Q(e) with e a primitive 9th root of unity: minpoly t^6 + t^3 + 1.
    pub fn cyclotomic9() -> Arc<Self> {
        let mut m = vec![Rational::zero(); 7];
        m[0] = Rational::one();
        m[3] = Rational::one();
        m[6] = Rational::one();
        NumberField::new("e", m).unwrap()
    }

    /// Q(w) with w a primitive 36th root of unity: minpoly t^12 - t^6 + 1.
    pub fn cyclotomic36() -> Arc<Self> {
        let mut m = vec![Rational::zero(); 13];
        m[0] = Rational::one();
        m[6] = -Rational::one();
        m[12] = Rational::one();
        NumberField::new("w", m).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn generator_name(&self) -> &str {
        &self.name
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.minpoly
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    /// Reduces an arbitrary coefficient list mod the minimal polynomial and
    /// pads to exactly `degree` entries.
    fn reduce(&self, mut coeffs: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        while coeffs.len() > d {
            let top = coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = coeffs.len() - d; // degree of the reduced power block
            for i in 0..d {
                let delta = &top * &self.minpoly[i];
                coeffs[k - 1 + i] -= delta;
            }
        }
        coeffs.resize(d, Rational::zero());
        coeffs
    }

    pub fn elem(self: &Arc<Self>, coeffs: Vec<Rational>) -> NFElem {
        NFElem { field: Arc::clone(self), coeffs: self.reduce(coeffs) }
    }

    pub fn zero(self: &Arc<Self>) -> NFElem {
        self.elem(Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> NFElem {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> NFElem {
        self.elem(vec![r])
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> NFElem {
        self.from_rational(rat_int(n))
    }

    /// The class of t, i.e. the generator of the extension.
    pub fn generator(self: &Arc<Self>) -> NFElem {
        self.elem(vec![Rational::zero(), Rational::one()])
    }
}

/// An element of a [`NumberField`], stored as the unique reduced remainder
/// mod the minimal polynomial (exactly `degree` rational coefficients).
#[derive(Debug, Clone)]
pub struct NFElem {
    field: Arc<NumberField>,
    coeffs: Vec<Rational>,
}

impl NFElem {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Some(r) iff the element lies in the prime field Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn same_field(&self, other: &NFElem) {
        debug_assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "number field mismatch"
        );
    }

    pub fn add(&self, other: &NFElem) -> NFElem {
        self.same_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        NFElem { field: Arc::clone(&self.field), coeffs }
    }

    pub fn sub(&self, other: &NFElem) -> NFElem {
        self.same_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        NFElem { field: Arc::clone(&self.field), coeffs }
    }

    pub fn neg(&self) -> NFElem {
        NFElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &NFElem) -> NFElem {
        self.same_field(other);
        let d = self.field.degree();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        self.field.elem(prod)
    }

    pub fn mul_rational(&self, r: &Rational) -> NFElem {
        NFElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via extended gcd with the minimal polynomial.
    pub fn inverse(&self) -> Result<NFElem, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (g, s) = ext_gcd_with(&self.coeffs, &self.field.minpoly);
        if g.len() == 1 {
            // s * self = g (a nonzero constant) mod minpoly
            let ginv = g[0].recip();
            let coeffs = s.into_iter().map(|c| c * &ginv).collect();
            Ok(self.field.elem(coeffs))
        } else {
            Err(ArithError::ZeroDivisor { factor: g.iter().map(fmt_rational).collect::<Vec<_>>().join(",") })
        }
    }

    pub fn div(&self, other: &NFElem) -> Result<NFElem, ArithError> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, mut e: u64) -> NFElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Extended Euclid on rational coefficient lists: returns (g, s) with
/// s*a + t*b = g for some t, g the gcd (not normalized).
fn ext_gcd_with(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0: Vec<Rational> = a.to_vec();
    rp_trim(&mut r0);
    let mut r1: Vec<Rational> = b.to_vec();
    rp_trim(&mut r1);
    let mut s0 = vec![Rational::one()];
    let mut s1: Vec<Rational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = rp_divrem(&r0, &r1);
        let s = rp_sub(&s0, &rp_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

fn rp_trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rp_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    rp_trim(&mut out);
    out
}

fn rp_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rp_trim(&mut out);
    out
}

fn rp_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem: Vec<Rational> = a.to_vec();
    rp_trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    let lb = b.last().unwrap();
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let c = rem.last().unwrap() / lb;
        quot[k] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let delta = &c * bc;
            rem[k + i] -= delta;
        }
        rp_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
        if rem.len() < b.len() {
            break;
        }
    }
    rp_trim(&mut quot);
    (quot, rem)
}

impl PartialEq for NFElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for NFElem {}

impl PartialOrd for NFElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the reduced coefficient vector; a canonical (not
/// arithmetic) order used for deterministic group element enumeration.
impl Ord for NFElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl std::hash::Hash for NFElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let name = self.field.generator_name();
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if k == 0 {
                fmt_rational(&mag)
            } else {
                let pow = if k == 1 { name.to_string() } else { format!("{name}^{k}") };
                if mag.is_one() {
                    pow
                } else {
                    format!("{}*{}", fmt_rational(&mag), pow)
                }
            };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
                first = false;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_sixth_power_reduces() {
        let f = NumberField::cyclotomic9();
        let eps = f.generator();
        // e^6 = -e^3 - 1
        let mut expect = vec![Rational::zero(); 6];
        expect[0] = -Rational::one();
        expect[3] = -Rational::one();
        assert_eq!(eps.pow(6), f.elem(expect));
    }

    #[test]
    fn omega_is_primitive_cube_root() {
        let f = NumberField::cyclotomic9();
        let eps = f.generator();
        let omega = f.from_int(-1).sub(&eps.pow(3));
        let acc = omega.mul(&omega).add(&omega).add(&f.one());
        assert!(acc.is_zero());
        assert!(omega.pow(3).is_one());
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let f = NumberField::cyclotomic9();
        let x = f.elem(vec![rat(1, 2), rat_int(3), rat(-2, 7)]);
        assert_eq!(f.one().mul(&x), x);
    }

    #[test]
    fn inverse_round_trips() {
        let f = NumberField::cyclotomic9();
        let x = f.elem(vec![rat_int(2), rat_int(1), rat(0, 1), rat(5, 3)]);
        let inv = x.inverse().unwrap();
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn zero_inverse_is_division_by_zero() {
        let f = NumberField::cyclotomic9();
        assert!(matches!(f.zero().inverse(), Err(ArithError::DivisionByZero)));
    }

    #[test]
    fn reducible_minpoly_yields_zero_divisor() {
        // t^2 - 1 is reducible; t - 1 is a zero divisor.
        let m = vec![rat_int(-1), rat_int(0), rat_int(1)];
        let f = NumberField::new("t", m).unwrap();
        let x = f.generator().sub(&f.one());
        assert!(matches!(x.inverse(), Err(ArithError::ZeroDivisor { .. })));
    }

    #[test]
    fn degree_one_field_is_plain_rationals() {
        let q = NumberField::rationals();
        let x = q.from_rational(rat(3, 4));
        let y = q.from_rational(rat(-1, 2));
        assert_eq!(x.mul(&y), q.from_rational(rat(-3, 8)));
        assert!(q.is_rationals());
    }

    #[test]
    fn display_round_style() {
        let f = NumberField::cyclotomic9();
        let x = f.elem(vec![rat(1, 2), Rational::zero(), Rational::zero(), rat_int(-2)]);
        assert_eq!(x.to_string(), "-2*e^3 + 1/2");
    }
}
