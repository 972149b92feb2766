//! Monomials and admissible monomial orders.

use std::cmp::Ordering;

/// Exponent vector of fixed arity (the ring context fixes n).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, when self divides other.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GrevLex,
    GradedLex,
}

/// An admissible order: total, multiplicative, with 1 minimal.
///
/// `priority` is a permutation of 0..n giving the sequence in which
/// variables are compared (identity = natural priority X1 > X2 > ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Self {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            assert!(p < priority.len() && !seen[p], "priority must be a permutation");
            seen[p] = true;
        }
        MonomialOrder { kind, priority }
    }

    pub fn natural(kind: OrderKind, n: usize) -> Self {
        MonomialOrder { kind, priority: (0..n).collect() }
    }

    pub fn grevlex(n: usize) -> Self {
        Self::natural(OrderKind::GrevLex, n)
    }

    pub fn lex(n: usize) -> Self {
        Self::natural(OrderKind::Lex, n)
    }

    pub fn graded_lex(n: usize) -> Self {
        Self::natural(OrderKind::GradedLex, n)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), self.priority.len());
        debug_assert_eq!(b.arity(), self.priority.len());
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::GradedLex => a.degree().cmp(&b.degree()).then_with(|| self.lex_cmp(a, b)),
            OrderKind::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // ties: the last differing position (in priority sequence)
                // with the *smaller* exponent wins
                for &i in self.priority.iter().rev() {
                    match a.exps()[i].cmp(&b.exps()[i]) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &i in &self.priority {
            match a.exps()[i].cmp(&b.exps()[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}
