//! Reduced rational functions over a number field: the coefficient field
//! K = F(z) for everything downstream.

use std::fmt;
use std::sync::Arc;

use super::numberfield::{NFElem, NumberField, Rational};
use super::unipoly::UniPoly;
use super::ArithError;

/// num/den with gcd(num, den) = 1 and den monic; the canonical form is
/// unique, so derived equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Canonicalizes num/den: gcd-reduced, monic denominator; zero is 0/1.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<RatFunc, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let field = Arc::clone(num.field());
        if num.is_zero() {
            return Ok(RatFunc { num, den: UniPoly::one(&field) });
        }
        let g = num.gcd(&den)?;
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.divrem(&g)?.0, den.divrem(&g)?.0)
        };
        let lc = den.leading_coeff().unwrap();
        if !lc.is_one() {
            let inv = lc.inverse()?;
            num = num.mul_scalar(&inv);
            den = den.mul_scalar(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(num: UniPoly) -> RatFunc {
        let field = Arc::clone(num.field());
        RatFunc { num, den: UniPoly::one(&field) }
    }

    pub fn from_elem(c: NFElem) -> RatFunc {
        RatFunc::from_poly(UniPoly::constant(c))
    }

    pub fn from_rational(field: &Arc<NumberField>, r: Rational) -> RatFunc {
        RatFunc::from_elem(field.from_rational(r))
    }

    pub fn zero(field: &Arc<NumberField>) -> RatFunc {
        RatFunc::from_poly(UniPoly::zero(field))
    }

    pub fn one(field: &Arc<NumberField>) -> RatFunc {
        RatFunc::from_poly(UniPoly::one(field))
    }

    pub fn var(field: &Arc<NumberField>) -> RatFunc {
        RatFunc::from_poly(UniPoly::var(field))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Some(c) iff the function is a constant of the number field.
    pub fn as_constant(&self) -> Option<NFElem> {
        if self.den.is_one() && self.num.degree().map_or(true, |d| d == 0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(self.field());
        }
        // polynomial-by-polynomial products dominate the workload; skip the gcd
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: self.den.clone() };
        }
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, ArithError> {
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inverse(&self) -> Result<RatFunc, ArithError> {
        RatFunc::one(self.field()).div(self)
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc, ArithError> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = RatFunc::one(self.field());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// d/dz by the quotient rule.
    pub fn derivative(&self) -> RatFunc {
        let num = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        let den = self.den.mul(&self.den);
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    /// f(c*z) for nonzero c.
    pub fn rescale(&self, c: &NFElem) -> Result<RatFunc, ArithError> {
        if c.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        RatFunc::new(self.num.rescale(c), self.den.rescale(c))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Display with integer-primitive coefficients: the stored form keeps
        // the denominator monic, which would print 1/(2z) as "1/2/z".
        let (num, den) = integer_primitive_pair(&self.num, &self.den);
        let num = if num.term_count() > 1 { format!("({num})") } else { num.to_string() };
        let den = if den.term_count() > 1 || den_needs_parens(&den) {
            format!("({den})")
        } else {
            den.to_string()
        };
        write!(f, "{num}/{den}")
    }
}

/// True when a single-term denominator still needs parentheses, i.e. when it
/// renders with a `*` ("2*z" must not become "1/2*z").
fn den_needs_parens(den: &UniPoly) -> bool {
    den.to_string().contains('*')
}

/// Scales num and den jointly by a positive rational so every rational
/// coordinate is an integer and their collective gcd is 1.
fn integer_primitive_pair(num: &UniPoly, den: &UniPoly) -> (UniPoly, UniPoly) {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::One;

    let mut lcm = BigInt::one();
    for p in [num, den] {
        for c in p.coeffs() {
            for r in c.coeffs() {
                if !num_traits::Zero::is_zero(r) {
                    lcm = lcm.lcm(r.denom());
                }
            }
        }
    }
    let mut gcd = BigInt::from(0);
    for p in [num, den] {
        for c in p.coeffs() {
            for r in c.coeffs() {
                if !num_traits::Zero::is_zero(r) {
                    let int = r.numer() * (&lcm / r.denom());
                    gcd = gcd.gcd(&int);
                }
            }
        }
    }
    if num_traits::Zero::is_zero(&gcd) {
        gcd = BigInt::one();
    }
    let scale = Rational::new(lcm, gcd);
    let field = num.field();
    let s = field.from_rational(scale);
    (num.mul_scalar(&s), den.mul_scalar(&s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::numberfield::rat_int;

    fn q() -> Arc<NumberField> {
        NumberField::rationals()
    }

    fn zp(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_int_coeffs(&q(), coeffs)
    }

    #[test]
    fn normalize_cancels_common_factor() {
        // (z^2 - 1)/(z - 1) -> z + 1
        let r = RatFunc::new(zp(&[-1, 0, 1]), zp(&[-1, 1])).unwrap();
        assert_eq!(r, RatFunc::from_poly(zp(&[1, 1])));
        // cross-multiplication identity against the raw inputs
        assert_eq!(r.num().mul(&zp(&[-1, 1])), r.den().mul(&zp(&[-1, 0, 1])));
    }

    #[test]
    fn normalize_zero_and_constants() {
        let z = RatFunc::new(UniPoly::zero(&q()), zp(&[3, 1])).unwrap();
        assert!(z.is_zero());
        assert!(z.den().is_one());
        // (2z)/2 -> z
        let r = RatFunc::new(zp(&[0, 2]), zp(&[2])).unwrap();
        assert_eq!(r, RatFunc::var(&q()));
        assert!(matches!(RatFunc::new(zp(&[1]), UniPoly::zero(&q())), Err(ArithError::DivisionByZero)));
    }

    #[test]
    fn normalize_is_idempotent_and_canonical() {
        let a = RatFunc::new(zp(&[0, 2, 2]), zp(&[0, 0, 4])).unwrap(); // (2z^2+2z)/(4z^2) = (z+1)/(2z)
        let b = RatFunc::new(zp(&[1, 1]), zp(&[0, 2])).unwrap();
        assert_eq!(a, b);
        let again = RatFunc::new(a.num().clone(), a.den().clone()).unwrap();
        assert_eq!(again, a);
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dz (1/z) = -1/z^2
        let r = RatFunc::new(zp(&[1]), zp(&[0, 1])).unwrap();
        let expect = RatFunc::new(zp(&[-1]), zp(&[0, 0, 1])).unwrap();
        assert_eq!(r.derivative(), expect);
    }

    #[test]
    fn display_forms() {
        let r = RatFunc::new(zp(&[-1]), zp(&[0, 2])).unwrap();
        assert_eq!(r.to_string(), "-1/(2*z)");
        let s = RatFunc::new(zp(&[1]), zp(&[0, 0, 2])).unwrap();
        assert_eq!(s.to_string(), "1/(2*z^2)");
        let t = RatFunc::new(zp(&[1, 1]), zp(&[0, 1])).unwrap();
        assert_eq!(t.to_string(), "(z + 1)/z");
        let c = RatFunc::from_rational(&q(), rat_int(5));
        assert_eq!(c.to_string(), "5");
    }
}
