//! Sparse multivariate polynomials over the rational-function field.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::exact::{NFElem, NumberField, RatFunc};

use super::monomial::{Monomial, MonomialOrder};
use super::MultiPolyError;

/// Ring context shared by all polynomials of one computation: arity,
/// variable names, coefficient number field and the active monomial order.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
    field: Arc<NumberField>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, field: &Arc<NumberField>, order: MonomialOrder) -> Arc<Self> {
        assert_eq!(order.arity(), vars.len(), "order arity must match variable count");
        Arc::new(PolyRing { vars, field: Arc::clone(field), order })
    }

    /// X1..Xn over the given field with the default grevlex order.
    pub fn natural(n: usize, field: &Arc<NumberField>) -> Arc<Self> {
        let vars = (1..=n).map(|i| format!("X{i}")).collect();
        PolyRing::new(vars, field, MonomialOrder::grevlex(n))
    }

    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Arc<Self> {
        PolyRing::new(self.vars.clone(), &self.field, order)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn same_ring(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

/// Sparse polynomial; terms are kept strictly descending in the ring's
/// active order with no zero coefficients stored.
#[derive(Debug, Clone)]
pub struct MPoly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, RatFunc)>,
}

impl MPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MPoly { ring: Arc::clone(ring), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        MPoly::constant(ring, RatFunc::one(ring.field()))
    }

    pub fn constant(ring: &Arc<PolyRing>, c: RatFunc) -> Self {
        if c.is_zero() {
            return MPoly::zero(ring);
        }
        MPoly { ring: Arc::clone(ring), terms: vec![(Monomial::one(ring.arity()), c)] }
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        assert!(i < ring.arity(), "variable index out of range");
        MPoly {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::var(ring.arity(), i), RatFunc::one(ring.field()))],
        }
    }

    /// Normalizing constructor: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, RatFunc)>) -> Self {
        let mut map: HashMap<Monomial, RatFunc> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ring.arity());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = e.get().add(&c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, RatFunc)> = map.into_iter().collect();
        terms.sort_unstable_by(|(a, _), (b, _)| ring.order().cmp(b, a));
        MPoly { ring: Arc::clone(ring), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Terms in strictly descending active order.
    pub fn terms(&self) -> &[(Monomial, RatFunc)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &RatFunc)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Some(c) iff the polynomial is free of all X variables.
    pub fn as_coefficient(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero(self.ring.field())),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn coeff(&self, m: &Monomial) -> RatFunc {
        self.terms
            .iter()
            .find(|(mm, _)| mm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| RatFunc::zero(self.ring.field()))
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        debug_assert!(self.ring.same_ring(&other.ring));
        let ord = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ord.cmp(&self.terms[i].0, &other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MPoly { ring: Arc::clone(&self.ring), terms: out }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(&self.ring);
        }
        let mut map: HashMap<Monomial, RatFunc> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, RatFunc)> = map.into_iter().collect();
        let ord = self.ring.order();
        terms.sort_unstable_by(|(a, _), (b, _)| ord.cmp(b, a));
        MPoly { ring: Arc::clone(&self.ring), terms }
    }

    pub fn mul_scalar(&self, c: &RatFunc) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    /// self * c * X^m, used heavily by polynomial division.
    pub fn mul_term(&self, mono: &Monomial, c: &RatFunc) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.mul(c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> MPoly {
        let mut acc = MPoly::one(&self.ring);
        let mut base = self.clone();
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

    /// Ring homomorphism X_i -> images[i]; coefficients pass through.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly, MultiPolyError> {
        let n = self.ring.arity();
        if images.len() != n {
            return Err(MultiPolyError::ArityMismatch { expected: n, got: images.len() });
        }
        let target = if images.is_empty() { &self.ring } else { images[0].ring() };
        // memoized variable powers up to the max exponent used per variable
        let mut max_exp = vec![0u32; n];
        for (m, _) in &self.terms {
            for (i, &e) in m.exps().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let mut powers: Vec<Vec<MPoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut tower = vec![MPoly::one(target)];
            for k in 1..=max_exp[i] {
                let next = tower[(k - 1) as usize].mul(&images[i]);
                tower.push(next);
            }
            powers.push(tower);
        }
        let mut acc = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to X_k (0-based index).
    pub fn partial_derivative(&self, k: usize) -> MPoly {
        assert!(k < self.ring.arity(), "variable index out of range");
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps()[k] > 0)
            .map(|(m, c)| {
                let e = m.exps()[k];
                let mut exps = m.exps().to_vec();
                exps[k] -= 1;
                let factor = RatFunc::from_elem(field.from_int(e as i64));
                (Monomial::new(exps), c.mul(&factor))
            })
            .collect();
        // exponents shift but relative order of distinct results is preserved;
        // re-normalize anyway to be safe about collisions
        MPoly::from_terms(&self.ring, terms)
    }

    /// Applies d/dz to every coefficient; monomials untouched (delta X_i = 0).
    pub fn delta_coeffs(&self) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.derivative()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MPoly { ring: Arc::clone(&self.ring), terms }
    }

    fn mono_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.ring.vars()[i].clone()),
                _ => parts.push(format!("{}^{}", self.ring.vars()[i], e)),
            }
        }
        parts.join("*")
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let multi_term = c.den().is_one() && c.num().term_count() > 1;
            let body = if m.is_one() {
                if multi_term {
                    format!("({c})")
                } else {
                    c.to_string()
                }
            } else if c.is_one() {
                self.mono_string(m)
            } else if c.neg().is_one() {
                format!("-{}", self.mono_string(m))
            } else if multi_term {
                format!("({})*{}", c, self.mono_string(m))
            } else {
                format!("{}*{}", c, self.mono_string(m))
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::natural(2, &NumberField::rationals())
    }

    fn ring3() -> Arc<PolyRing> {
        PolyRing::natural(3, &NumberField::rationals())
    }

    fn int(ring: &Arc<PolyRing>, n: i64) -> RatFunc {
        RatFunc::from_rational(ring.field(), rat_int(n))
    }

    #[test]
    fn product_of_all_variables_is_symmetric_under_rotation() {
        let r = ring3();
        let p = MPoly::var(&r, 0).mul(&MPoly::var(&r, 1)).mul(&MPoly::var(&r, 2));
        // X1 -> X3, X2 -> X1, X3 -> X2
        let images = vec![MPoly::var(&r, 2), MPoly::var(&r, 0), MPoly::var(&r, 1)];
        assert_eq!(p.substitute(&images).unwrap(), p);
    }

    #[test]
    fn f6_at_unit_point() {
        // F6 = S^2 - 12 Q with S = sum Xi^3, Q = sum of products of cubes
        let r = ring3();
        let x: Vec<MPoly> = (0..3).map(|i| MPoly::var(&r, i)).collect();
        let s = x[0].pow(3).add(&x[1].pow(3)).add(&x[2].pow(3));
        let q = x[0]
            .pow(3)
            .mul(&x[1].pow(3))
            .add(&x[0].pow(3).mul(&x[2].pow(3)))
            .add(&x[1].pow(3).mul(&x[2].pow(3)));
        let f6 = s.pow(2).sub(&q.mul_scalar(&int(&r, 12)));
        let images = vec![MPoly::one(&r), MPoly::zero(&r), MPoly::zero(&r)];
        assert_eq!(f6.substitute(&images).unwrap(), MPoly::one(&r));
    }

    #[test]
    fn identity_substitution_is_identity() {
        let r = ring2();
        let p = MPoly::var(&r, 0)
            .pow(2)
            .mul_scalar(&RatFunc::var(r.field()))
            .add(&MPoly::var(&r, 1));
        let ids: Vec<MPoly> = (0..2).map(|i| MPoly::var(&r, i)).collect();
        assert_eq!(p.substitute(&ids).unwrap(), p);
    }

    #[test]
    fn substitute_arity_mismatch() {
        let r = ring2();
        let p = MPoly::var(&r, 0);
        assert!(matches!(
            p.substitute(&[MPoly::var(&r, 0)]),
            Err(MultiPolyError::ArityMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn partial_derivatives() {
        let r = ring3();
        let x: Vec<MPoly> = (0..3).map(|i| MPoly::var(&r, i)).collect();
        let p = x[0].mul(&x[1]).mul(&x[2]);
        assert_eq!(p.partial_derivative(0), x[1].mul(&x[2]));
        // d/dX1 of z*X1^2 = 2z*X1
        let zx2 = x[0].pow(2).mul_scalar(&RatFunc::var(r.field()));
        let expect = x[0].mul_scalar(&RatFunc::var(r.field()).mul(&int(&r, 2)));
        assert_eq!(zx2.partial_derivative(0), expect);
        // d/dX1 of S = 3*X1^2
        let s = x[0].pow(3).add(&x[1].pow(3)).add(&x[2].pow(3));
        assert_eq!(s.partial_derivative(0), x[0].pow(2).mul_scalar(&int(&r, 3)));
    }

    #[test]
    fn delta_on_coefficients() {
        let r = ring2();
        let z = RatFunc::var(r.field());
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        // delta(z*X1^2) = X1^2
        assert_eq!(x1.pow(2).mul_scalar(&z).delta_coeffs(), x1.pow(2));
        // delta of a constant-coefficient polynomial is zero
        assert!(x1.mul_scalar(&int(&r, 7)).delta_coeffs().is_zero());
        // delta(z^2*X1 + (1/z)*X2) = 2z*X1 - (1/z^2)*X2
        let inv_z = RatFunc::one(r.field()).div(&z).unwrap();
        let p = x1.mul_scalar(&z.mul(&z)).add(&x2.mul_scalar(&inv_z));
        let expect = x1
            .mul_scalar(&z.mul(&int(&r, 2)))
            .add(&x2.mul_scalar(&inv_z.mul(&inv_z).neg()));
        assert_eq!(p.delta_coeffs(), expect);
    }

    #[test]
    fn leading_monomial_is_multiplicative() {
        let r = ring2();
        let p = MPoly::var(&r, 0).pow(2).add(&MPoly::var(&r, 1));
        let q = MPoly::var(&r, 1).pow(3).add(&MPoly::one(&r));
        let lm = |f: &MPoly| f.leading_monomial().unwrap().clone();
        assert_eq!(lm(&p.mul(&q)), lm(&p).mul(&lm(&q)));
    }

    #[test]
    fn term_iteration_strictly_descends() {
        let r = ring2();
        let p = MPoly::var(&r, 0)
            .pow(3)
            .add(&MPoly::var(&r, 1).pow(2))
            .add(&MPoly::var(&r, 0))
            .add(&MPoly::one(&r));
        let ord = r.order();
        for w in p.terms().windows(2) {
            assert_eq!(ord.cmp(&w[0].0, &w[1].0), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn display_canonical() {
        let r = ring2();
        let z = RatFunc::var(r.field());
        let p = MPoly::var(&r, 0)
            .pow(2)
            .mul_scalar(&int(&r, 3))
            .sub(&MPoly::var(&r, 1).mul_scalar(&z))
            .add(&MPoly::one(&r));
        assert_eq!(p.to_string(), "3*X1^2 - z*X2 + 1");
    }
}
