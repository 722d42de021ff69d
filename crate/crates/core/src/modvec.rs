//! Vectors in graded free modules.
//!
//! A `ModVec` is a sparse element of `S^r` stored as terms
//! `(component, monomial, coefficient)` sorted by position-over-term:
//! lower component index first, then degrevlex descending. Degree shifts of
//! the ambient module live in `FreeModule`; a homogeneous vector has
//! `deg(monomial) + shift[component]` constant over its support.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mono::Monomial;
use crate::poly::{Polynomial, Rat};

/// Ambient graded free module `⊕_k S[-shifts[k]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    pub arity: usize,
    pub shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(arity: usize, shifts: Vec<i64>) -> Self {
        FreeModule { arity, shifts }
    }

    pub fn unshifted(arity: usize, rank: usize) -> Self {
        FreeModule { arity, shifts: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }
}

/// Module order: position-over-term with positions compared by a declared
/// priority (identity by default), ties broken by degrevlex. The engine
/// realizes a non-trivial priority by relabeling components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    /// `priority[k]` is the rank of component `k`; lower rank compares higher.
    pub priority: Vec<u32>,
}

impl ModuleOrder {
    pub fn natural(rank: usize) -> Self {
        ModuleOrder { priority: (0..rank as u32).collect() }
    }

    pub fn is_natural(&self) -> bool {
        self.priority.iter().enumerate().all(|(i, &p)| p == i as u32)
    }
}

/// One sparse term of a module vector.
pub type Term = (u32, Monomial, Rat);

/// Position-over-term comparison with the natural priority.
pub fn term_cmp(a: (u32, Monomial), b: (u32, Monomial)) -> Ordering {
    match b.0.cmp(&a.0) {
        Ordering::Equal => a.1.cmp_degrevlex(b.1),
        ord => ord,
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct ModVec {
    /// Sorted strictly descending by `term_cmp`, no zero coefficients.
    terms: Vec<Term>,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: vec![] }
    }

    pub fn from_terms(mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| term_cmp((b.0, b.1), (a.0, a.1)));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (p, m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == p && last.1 == m => last.2 += c,
                _ => out.push((p, m, c)),
            }
            if let Some(last) = out.last() {
                if last.2.is_zero() {
                    out.pop();
                }
            }
        }
        ModVec { terms: out }
    }

    /// A unit vector `e_k`.
    pub fn unit(k: u32) -> Self {
        ModVec { terms: vec![(k, Monomial::ONE, Rat::one())] }
    }

    /// Build from per-component polynomials.
    pub fn from_polys(polys: &[Polynomial]) -> Self {
        let mut terms = vec![];
        for (k, p) in polys.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((k as u32, *m, c.clone()));
            }
        }
        ModVec::from_terms(terms)
    }

    /// Extract component `k` as a polynomial with the given arity.
    pub fn component(&self, k: u32, arity: usize) -> Polynomial {
        Polynomial::from_terms(
            arity,
            self.terms.iter().filter(|t| t.0 == k).map(|t| (t.1, t.2.clone())).collect(),
        )
    }

    pub fn components(&self, fm: &FreeModule) -> Vec<Polynomial> {
        (0..fm.rank() as u32).map(|k| self.component(k, fm.arity)).collect()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(u32, Monomial, &Rat)> {
        self.terms.first().map(|(p, m, c)| (*p, *m, c))
    }

    /// Degree of a homogeneous vector; error when the support mixes degrees.
    pub fn degree(&self, fm: &FreeModule) -> Result<Option<i64>> {
        let mut deg = None;
        for (p, m, _) in &self.terms {
            let d = m.total_degree() as i64 + fm.shifts[*p as usize];
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => {
                    return Err(Error::Inhomogeneous(format!(
                        "module vector mixes degrees {prev} and {d}"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self, fm: &FreeModule) -> bool {
        self.degree(fm).is_ok()
    }

    /// `self + c * x^m * other`.
    pub fn add_scaled(&self, other: &ModVec, c: &Rat, m: Monomial) -> ModVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            let bt = b.peek().map(|(p, mm, cc)| (*p, mm.mul(m), cc));
            match (a.peek(), bt) {
                (Some(&&(pa, ma, ref ca)), Some((pb, mb, cb))) => {
                    match term_cmp((pa, ma), (pb, mb)) {
                        Ordering::Greater => {
                            out.push((pa, ma, ca.clone()));
                            a.next();
                        }
                        Ordering::Less => {
                            out.push((pb, mb, cb * c));
                            b.next();
                        }
                        Ordering::Equal => {
                            let v = ca + cb * c;
                            if !v.is_zero() {
                                out.push((pa, ma, v));
                            }
                            a.next();
                            b.next();
                        }
                    }
                }
                (Some(&&(pa, ma, ref ca)), None) => {
                    out.push((pa, ma, ca.clone()));
                    a.next();
                }
                (None, Some((pb, mb, cb))) => {
                    out.push((pb, mb, cb * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        ModVec { terms: out }
    }

    pub fn add(&self, other: &ModVec) -> ModVec {
        self.add_scaled(other, &Rat::one(), Monomial::ONE)
    }

    pub fn sub(&self, other: &ModVec) -> ModVec {
        self.add_scaled(other, &-Rat::one(), Monomial::ONE)
    }

    pub fn scale(&self, c: &Rat) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec { terms: self.terms.iter().map(|(p, m, k)| (*p, *m, k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: Monomial) -> ModVec {
        ModVec { terms: self.terms.iter().map(|(p, n, c)| (*p, n.mul(m), c.clone())).collect() }
    }

    /// Multiply by a polynomial.
    pub fn mul_poly(&self, p: &Polynomial) -> ModVec {
        let mut acc = ModVec::zero();
        for (m, c) in p.terms() {
            acc = acc.add_scaled(self, c, *m);
        }
        acc
    }

    /// True when the support lies in a single component.
    pub fn single_component(&self) -> Option<u32> {
        let first = self.terms.first()?.0;
        self.terms.iter().all(|t| t.0 == first).then_some(first)
    }

    /// Scale so coefficients are coprime integers with positive leading one.
    pub fn primitive(&self) -> ModVec {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, _, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, _, c) in &self.terms {
            g = g.gcd(&(c.numer() * &den_lcm / c.denom()));
            if g.is_one() && den_lcm.is_one() {
                break;
            }
        }
        if self.terms[0].2.is_negative() {
            g = -g;
        }
        let f = Rat::new(den_lcm, g);
        if f.is_one() {
            self.clone()
        } else {
            self.scale(&f)
        }
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> ModVec {
        match self.leading() {
            None => self.clone(),
            Some((_, _, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Apply a component relabeling: `new component = perm[old component]`.
    pub fn relabel(&self, perm: &[u32]) -> ModVec {
        ModVec::from_terms(
            self.terms.iter().map(|(p, m, c)| (perm[*p as usize], *m, c.clone())).collect(),
        )
    }
}

impl fmt::Debug for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, m, c)| format!("{}*{:?}*e{}", crate::poly::rat_to_string(c), m, p))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    #[test]
    fn pot_order_and_merge() {
        let e0 = ModVec::unit(0);
        let e1 = ModVec::unit(1);
        let v = e1.add_scaled(&e0, &rat_int(3), Monomial::var(0));
        // component 0 sorts first
        assert_eq!(v.leading().map(|(p, _, _)| p), Some(0));
        let w = v.sub(&v);
        assert!(w.is_zero());
    }

    #[test]
    fn homogeneity_with_shifts() {
        let fm = FreeModule::new(2, vec![0, 1]);
        // x1*e0 + e1 is homogeneous of degree 1
        let v = ModVec::from_terms(vec![
            (0, Monomial::var(0), rat_int(1)),
            (1, Monomial::ONE, rat_int(2)),
        ]);
        assert_eq!(v.degree(&fm).unwrap(), Some(1));
        let w = ModVec::from_terms(vec![
            (0, Monomial::var(0), rat_int(1)),
            (1, Monomial::var(0), rat_int(2)),
        ]);
        assert!(w.degree(&fm).is_err());
    }

    #[test]
    fn primitive_clears_denominators() {
        let v = ModVec::from_terms(vec![
            (0, Monomial::ONE, Rat::new(BigInt::from(-2), BigInt::from(4))),
            (1, Monomial::ONE, Rat::new(BigInt::from(3), BigInt::from(2))),
        ]);
        let p = v.primitive();
        assert_eq!(p.terms()[0].2, rat_int(-1));
        assert_eq!(p.terms()[1].2, rat_int(3));
        // sign convention: leading coefficient positive
        let q = v.scale(&rat_int(-1)).primitive();
        assert_eq!(q.terms()[0].2, rat_int(1));
    }
}
