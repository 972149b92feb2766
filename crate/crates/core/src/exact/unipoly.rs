//! Dense univariate polynomials in z over a number field.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::numberfield::{fmt_rational, NFElem, NumberField, Rational};
use super::ArithError;

/// The display variable; the engine only ever differentiates with respect
/// to this one transcendental.
pub const VAR: &str = "z";

/// Univariate polynomial, ascending coefficients, no trailing zeros
/// (the zero polynomial has an empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Arc<NumberField>,
    coeffs: Vec<NFElem>,
}

impl UniPoly {
    pub fn new(field: &Arc<NumberField>, mut coeffs: Vec<NFElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field: Arc::clone(field), coeffs }
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        UniPoly { field: Arc::clone(field), coeffs: Vec::new() }
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        UniPoly::constant(field.one())
    }

    pub fn constant(c: NFElem) -> Self {
        let field = Arc::clone(c.field());
        UniPoly::new(&field, vec![c])
    }

    /// The variable z.
    pub fn var(field: &Arc<NumberField>) -> Self {
        UniPoly::new(field, vec![field.zero(), field.one()])
    }

    pub fn from_int_coeffs(field: &Arc<NumberField>, coeffs: &[i64]) -> Self {
        UniPoly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[NFElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn leading_coeff(&self) -> Option<&NFElem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> NFElem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UniPoly::new(&self.field, out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { field: Arc::clone(&self.field), coeffs: self.coeffs.iter().map(NFElem::neg).collect() }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(&self.field, out)
    }

    pub fn mul_scalar(&self, c: &NFElem) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(&self.field);
        }
        UniPoly {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one(&self.field);
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

    /// Formal derivative d/dz.
    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(&self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&self.field.from_int(k as i64)))
            .collect();
        UniPoly::new(&self.field, coeffs)
    }

    /// p(c*z); multiplicities and parities of zeros are preserved for c != 0.
    pub fn rescale(&self, c: &NFElem) -> UniPoly {
        let mut pow = self.field.one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.mul(&pow));
            pow = pow.mul(c);
        }
        UniPoly::new(&self.field, out)
    }

    pub fn eval(&self, x: &NFElem) -> NFElem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Euclidean division; errors propagate from leading-coefficient
    /// inversion (only possible over a reducible minimal polynomial).
    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), ArithError> {
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let dlen = divisor.coeffs.len();
        let lc_inv = divisor.leading_coeff().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        if rem.len() < dlen {
            return Ok((UniPoly::zero(&self.field), UniPoly::new(&self.field, rem)));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dlen + 1];
        while rem.len() >= dlen {
            let k = rem.len() - dlen;
            let c = rem.last().unwrap().mul(&lc_inv);
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let delta = c.mul(dc);
                rem[k + i] = rem[k + i].sub(&delta);
            }
            quot[k] = c;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        Ok((UniPoly::new(&self.field, quot), UniPoly::new(&self.field, rem)))
    }

    pub fn make_monic(&self) -> Result<UniPoly, ArithError> {
        match self.leading_coeff() {
            None => Ok(self.clone()),
            Some(lc) if lc.is_one() => Ok(self.clone()),
            Some(lc) => Ok(self.mul_scalar(&lc.inverse()?)),
        }
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly, ArithError> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        a.make_monic()
    }

    /// Squarefree decomposition by Yun's algorithm (characteristic 0).
    ///
    /// Returns pairs (monic squarefree factor, multiplicity) with strictly
    /// increasing multiplicities and pairwise coprime factors, such that
    /// p = lc * prod factor_i ^ multiplicity_i. A nonzero constant yields
    /// the empty decomposition.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, u32)>, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.degree() == Some(0) {
            return Ok(out);
        }
        let f = self.make_monic()?;
        let df = f.derivative();
        let a = f.gcd(&df)?;
        let mut b = f.divrem(&a)?.0;
        let c = df.divrem(&a)?.0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        while b.degree() != Some(0) {
            let ai = b.gcd(&d)?;
            b = b.divrem(&ai)?.0;
            let cc = d.divrem(&ai)?.0;
            d = cc.sub(&b.derivative());
            if ai.degree().is_some_and(|dg| dg > 0) {
                out.push((ai, i));
            }
            i += 1;
        }
        Ok(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (neg, body) = render_coeff_power(c, VAR, k);
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

/// Renders `c * v^k` as (sign, magnitude-body), parenthesizing multi-term
/// number-field coefficients so output re-parses under the CLI grammar.
pub(crate) fn render_coeff_power(c: &NFElem, v: &str, k: usize) -> (bool, String) {
    let pow = match k {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{k}"),
    };
    let nonzero: Vec<usize> = (0..c.coeffs().len()).filter(|&i| !c.coeffs()[i].is_zero()).collect();
    if let Some(r) = c.as_rational() {
        let neg = r.is_negative();
        let mag = r.abs();
        let body = if pow.is_empty() {
            fmt_rational(&mag)
        } else if mag.is_one() {
            pow
        } else {
            format!("{}*{}", fmt_rational(&mag), pow)
        };
        (neg, body)
    } else if nonzero.len() == 1 {
        let j = nonzero[0];
        let r = &c.coeffs()[j];
        let neg = r.is_negative();
        let mag = r.abs();
        let name = c.field().generator_name();
        let gen_pow = if j == 1 { name.to_string() } else { format!("{name}^{j}") };
        let mut body = if mag.is_one() { gen_pow } else { format!("{}*{}", fmt_rational(&mag), gen_pow) };
        if !pow.is_empty() {
            body = format!("{body}*{pow}");
        }
        (neg, body)
    } else {
        let body = if pow.is_empty() {
            format!("({c})")
        } else {
            format!("({c})*{pow}")
        };
        (false, body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::numberfield::rat_int;

    fn q() -> Arc<NumberField> {
        NumberField::rationals()
    }

    fn zpoly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_int_coeffs(&q(), coeffs)
    }

    #[test]
    fn divrem_exact() {
        // (z^2 - 1) / (z - 1) = z + 1
        let (quot, rem) = zpoly(&[-1, 0, 1]).divrem(&zpoly(&[-1, 1])).unwrap();
        assert_eq!(quot, zpoly(&[1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        let a = zpoly(&[-1, 0, 1]); // (z-1)(z+1)
        let b = zpoly(&[-2, 2]); // 2(z-1)
        assert_eq!(a.gcd(&b).unwrap(), zpoly(&[-1, 1]));
    }

    #[test]
    fn squarefree_known_multiplicities() {
        // z^2 (z-1)^3
        let p = zpoly(&[0, 1]).pow(2).mul(&zpoly(&[-1, 1]).pow(3));
        let dec = p.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(zpoly(&[0, 1]), 2), (zpoly(&[-1, 1]), 3)]);
    }

    #[test]
    fn squarefree_of_squarefree_input() {
        let p = zpoly(&[-2, 0, 3]); // 3z^2 - 2, squarefree
        let dec = p.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(p.make_monic().unwrap(), 1)]);
    }

    #[test]
    fn squarefree_of_constant_is_empty() {
        assert!(zpoly(&[7]).squarefree_decomposition().unwrap().is_empty());
        assert!(matches!(
            UniPoly::zero(&q()).squarefree_decomposition(),
            Err(ArithError::ZeroPolynomial)
        ));
    }

    #[test]
    fn squarefree_round_trip() {
        let p = zpoly(&[1, 2]).pow(1).mul(&zpoly(&[-3, 1]).pow(4)).mul_scalar(&q().from_int(-5));
        let dec = p.squarefree_decomposition().unwrap();
        let mut acc = UniPoly::constant(p.leading_coeff().unwrap().clone());
        for (f, m) in &dec {
            acc = acc.mul(&f.pow(*m as u64));
        }
        assert_eq!(acc, p);
    }

    #[test]
    fn rescale_shifts_coefficients() {
        let p = zpoly(&[1, 1, 1]); // 1 + z + z^2
        let c = q().from_int(2);
        assert_eq!(p.rescale(&c), zpoly(&[1, 2, 4]));
    }

    #[test]
    fn display_descending() {
        let p = zpoly(&[1, -2, 1]);
        assert_eq!(p.to_string(), "z^2 - 2*z + 1");
        assert_eq!(UniPoly::zero(&q()).to_string(), "0");
        assert_eq!(zpoly(&[0, 0, -3]).to_string(), "-3*z^2");
    }

    #[test]
    fn derivative_and_eval() {
        let p = zpoly(&[5, 0, 3]); // 3z^2+5
        assert_eq!(p.derivative(), zpoly(&[0, 6]));
        assert_eq!(p.eval(&q().from_int(2)), q().from_int(17));
    }
}
