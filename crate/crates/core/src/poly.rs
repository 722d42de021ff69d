//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept sorted in strictly decreasing degrevlex order with no zero
//! coefficients, so structural equality is semantic equality. All arithmetic
//! is exact.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mono::Monomial;

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse a rational written as `p` or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Render a rational as `p` or `p/q`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    arity: usize,
    /// Sorted strictly descending by degrevlex; no zero coefficients.
    terms: Vec<(Monomial, Rat)>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial { arity, terms: vec![] }
    }

    pub fn one(arity: usize) -> Self {
        Polynomial::constant(arity, Rat::one())
    }

    pub fn constant(arity: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Polynomial::zero(arity);
        }
        Polynomial { arity, terms: vec![(Monomial::ONE, c)] }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity);
        Polynomial { arity, terms: vec![(Monomial::var(i), Rat::one())] }
    }

    /// A linear form with the given coefficient vector.
    pub fn linear_form(coeffs: &[Rat]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Monomial::var(i), c.clone()))
            .collect();
        Polynomial::from_terms(coeffs.len(), terms)
    }

    pub fn monomial(arity: usize, m: Monomial, c: Rat) -> Self {
        if c.is_zero() {
            return Polynomial::zero(arity);
        }
        Polynomial { arity, terms: vec![(m, c)] }
    }

    /// Normalize an arbitrary term soup: sort, merge, drop zeros.
    pub fn from_terms(arity: usize, mut terms: Vec<(Monomial, Rat)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp_degrevlex(a.0));
        let mut out: Vec<(Monomial, Rat)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
            if let Some(last) = out.last() {
                if last.1.is_zero() {
                    out.pop();
                }
            }
        }
        Polynomial { arity, terms: out }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(Monomial, &Rat)> {
        self.terms.first().map(|(m, c)| (*m, c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// All terms share one total degree (the zero polynomial qualifies).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.total_degree();
                self.terms.iter().all(|(n, _)| n.total_degree() == d)
            }
        }
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp_degrevlex(*mb) {
                    Ordering::Greater => {
                        out.push((*ma, ca.clone()));
                        a.next();
                    }
                    Ordering::Less => {
                        out.push((*mb, if negate { -cb.clone() } else { cb.clone() }));
                        b.next();
                    }
                    Ordering::Equal => {
                        let c = if negate { ca - cb } else { ca + cb };
                        if !c.is_zero() {
                            out.push((*ma, c));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((ma, ca)), None) => {
                    out.push((*ma, ca.clone()));
                    a.next();
                }
                (None, Some((mb, cb))) => {
                    out.push((*mb, if negate { -cb.clone() } else { cb.clone() }));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Polynomial { arity: self.arity, terms: out }
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.arity));
        }
        // Accumulate into a term soup and renormalize; fine at desk scale.
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(*mb), ca * cb));
            }
        }
        Ok(Polynomial::from_terms(self.arity, terms))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.arity);
        for _ in 0..e {
            acc = acc.try_mul(self).unwrap();
        }
        acc
    }

    /// Substitute `x_i := images[i]`; all images must share one arity, which
    /// becomes the arity of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.arity {
            return Err(Error::ArityMismatch(self.arity, images.len()));
        }
        let out_arity = images.first().map(|p| p.arity).unwrap_or(0);
        for p in images {
            if p.arity != out_arity {
                return Err(Error::ArityMismatch(out_arity, p.arity));
            }
        }
        let mut acc = Polynomial::zero(out_arity);
        // Cache powers of each image as needed.
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(out_arity), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(out_arity, c.clone());
            for i in 0..self.arity {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().try_mul(&images[i])?;
                    powers[i].push(next);
                }
                term = term.try_mul(&powers[i][e])?;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Compose with the linear change of coordinates `x -> M x`, where `M` is
    /// an invertible square rational matrix given as rows.
    pub fn substitute_linear(&self, m: &crate::linalg::Mat) -> Result<Polynomial> {
        if m.rows() != self.arity || m.cols() != self.arity {
            return Err(Error::ArityMismatch(self.arity, m.rows()));
        }
        if m.inverse().is_none() {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Polynomial> =
            (0..self.arity).map(|i| Polynomial::linear_form(m.row(i))).collect();
        self.substitute(&images)
    }

    /// Exact division: `Some(q)` with `q * den == num`, or `None` when `num`
    /// is not a polynomial multiple of `den`.
    pub fn exact_divide(num: &Polynomial, den: &Polynomial) -> Result<Option<Polynomial>> {
        num.check_arity(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Some(Polynomial::zero(num.arity)));
        }
        let (dm, dc) = den.leading().unwrap();
        let mut rem = num.clone();
        let mut q_terms: Vec<(Monomial, Rat)> = vec![];
        while let Some((rm, rc)) = rem.leading() {
            // For a true multiple the leading term stays divisible throughout.
            let Some(f) = rm.try_div(dm) else {
                return Ok(None);
            };
            let coef = rc / dc;
            q_terms.push((f, coef.clone()));
            rem = rem.merge(&den.mul_monomial(f).scale(&coef), true);
        }
        Ok(Some(Polynomial { arity: num.arity, terms: q_terms }))
    }

    /// Scale so that coefficients are coprime integers and the leading
    /// coefficient is positive. Zero stays zero.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        if self.terms[0].1.is_negative() {
            num_gcd = -num_gcd;
        }
        self.scale(&Rat::new(den_lcm, num_gcd))
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Evaluate the polynomial at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch(self.arity, point.len()));
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..self.arity {
                for _ in 0..m.exponent(i) {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", rat_to_string(&abs))?;
            } else if abs.is_one() {
                write!(f, "{:?}", m)?;
            } else {
                write!(f, "{}*{:?}", rat_to_string(&abs), m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p_x1_plus_x2() -> Polynomial {
        Polynomial::var(2, 0).try_add(&Polynomial::var(2, 1)).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p_x1_plus_x2();
        let b = Polynomial::var(2, 0).try_sub(&Polynomial::var(2, 1)).unwrap();
        let prod = a.try_mul(&b).unwrap();
        let x1sq = Polynomial::var(2, 0).pow(2);
        let x2sq = Polynomial::var(2, 1).pow(2);
        assert_eq!(prod, x1sq.try_sub(&x2sq).unwrap());
    }

    #[test]
    fn add_zero_is_identity() {
        let p = p_x1_plus_x2().try_mul(&p_x1_plus_x2()).unwrap();
        assert_eq!(p.try_add(&Polynomial::zero(2)).unwrap(), p);
    }

    #[test]
    fn arity_mismatch_rejected() {
        let p = Polynomial::var(2, 0);
        let q = Polynomial::var(3, 0);
        assert!(matches!(p.try_add(&q), Err(Error::ArityMismatch(2, 3))));
    }

    #[test]
    fn exact_division() {
        let x1 = Polynomial::var(2, 0);
        let x2 = Polynomial::var(2, 1);
        let num = x1.pow(2).try_sub(&x2.pow(2)).unwrap();
        let den = x1.try_sub(&x2).unwrap();
        let q = Polynomial::exact_divide(&num, &den).unwrap().unwrap();
        assert_eq!(q, x1.try_add(&x2).unwrap());
        // p / p = 1
        let q = Polynomial::exact_divide(&num, &num).unwrap().unwrap();
        assert_eq!(q, Polynomial::one(2));
        // irreducible numerator
        let num2 = x1.pow(2).try_add(&x2.pow(2)).unwrap();
        assert_eq!(Polynomial::exact_divide(&num2, &den).unwrap(), None);
        assert!(matches!(
            Polynomial::exact_divide(&num, &Polynomial::zero(2)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn substitution_identity_and_swap() {
        let x1 = Polynomial::var(2, 0);
        let x2 = Polynomial::var(2, 1);
        let p = x1.try_sub(&x2).unwrap().pow(2);
        let id = crate::linalg::Mat::identity(2);
        assert_eq!(p.substitute_linear(&id).unwrap(), p);
        // swap of x1, x2 fixes (x1-x2)^2
        let swap = crate::linalg::Mat::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(0)],
        ]);
        assert_eq!(p.substitute_linear(&swap).unwrap(), p);
        // x1 under the map sending x1 to x1+x2
        let m = crate::linalg::Mat::from_rows(vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(0), rat_int(1)],
        ]);
        assert_eq!(x1.substitute_linear(&m).unwrap(), x1.try_add(&x2).unwrap());
    }

    #[test]
    fn primitive_part_normalizes() {
        let p = Polynomial::var(1, 0)
            .scale(&Rat::new(BigInt::from(-4), BigInt::from(6)))
            .try_add(&Polynomial::constant(1, Rat::new(BigInt::from(2), BigInt::from(3))))
            .unwrap();
        let prim = p.primitive_part();
        // -2/3 x + 2/3 -> x - 1
        assert_eq!(prim.to_string(), "x1 - 1");
    }
}
