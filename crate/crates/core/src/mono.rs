//! Packed monomials with degree-reverse-lexicographic comparison.
//!
//! A monomial is an exponent vector of length `arity <= MAX_VARS`. Exponents
//! are stored in the low seven bytes of a `u64` (byte `i` = exponent of
//! variable `i`) and the total degree in the top byte, so equality and
//! hashing are single word operations and the degrevlex comparison needs no
//! loop. Total degree is capped at 255, far above anything the desk-scale
//! workloads reach.

use std::cmp::Ordering;
use std::fmt;

/// Maximum number of ring variables supported by the packed layout.
pub const MAX_VARS: usize = 7;

/// Maximum total degree representable.
pub const MAX_DEGREE: u32 = 255;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(u64);

impl Monomial {
    /// The constant monomial 1.
    pub const ONE: Monomial = Monomial(0);

    /// Build from an exponent slice. Panics if too many variables or the
    /// total degree exceeds the representable range.
    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut bytes = [0u8; 8];
        let mut deg: u32 = 0;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_DEGREE, "exponent too large");
            deg += e;
            bytes[i] = e as u8;
        }
        assert!(deg <= MAX_DEGREE, "total degree too large");
        bytes[7] = deg as u8;
        Monomial(u64::from_le_bytes(bytes))
    }

    /// The monomial `x_i`.
    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        let mut bytes = [0u8; 8];
        bytes[i] = 1;
        bytes[7] = 1;
        Monomial(u64::from_le_bytes(bytes))
    }

    pub fn exponent(self, i: usize) -> u32 {
        debug_assert!(i < MAX_VARS);
        (self.0.to_le_bytes()[i]) as u32
    }

    pub fn exponents(self, arity: usize) -> Vec<u32> {
        (0..arity).map(|i| self.exponent(i)).collect()
    }

    pub fn total_degree(self) -> u32 {
        (self.0 >> 56) as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Product of monomials. Panics on degree overflow.
    pub fn mul(self, other: Self) -> Self {
        let deg = self.total_degree() + other.total_degree();
        assert!(deg <= MAX_DEGREE, "monomial degree overflow");
        // No byte can carry: every exponent is bounded by the total degree.
        Monomial(self.0 + other.0)
    }

    /// Quotient `self / other` if `other` divides `self`.
    pub fn try_div(self, other: Self) -> Option<Self> {
        let a = self.0.to_le_bytes();
        let b = other.0.to_le_bytes();
        for i in 0..8 {
            if a[i] < b[i] {
                return None;
            }
        }
        Some(Monomial(self.0 - other.0))
    }

    pub fn divides(self, other: Self) -> bool {
        other.try_div(self).is_some()
    }

    pub fn lcm(self, other: Self) -> Self {
        let a = self.0.to_le_bytes();
        let b = other.0.to_le_bytes();
        let mut out = [0u8; 8];
        let mut deg: u32 = 0;
        for i in 0..MAX_VARS {
            out[i] = a[i].max(b[i]);
            deg += out[i] as u32;
        }
        assert!(deg <= MAX_DEGREE);
        out[7] = deg as u8;
        Monomial(u64::from_le_bytes(out))
    }

    pub fn gcd(self, other: Self) -> Self {
        let a = self.0.to_le_bytes();
        let b = other.0.to_le_bytes();
        let mut out = [0u8; 8];
        let mut deg: u32 = 0;
        for i in 0..MAX_VARS {
            out[i] = a[i].min(b[i]);
            deg += out[i] as u32;
        }
        out[7] = deg as u8;
        Monomial(u64::from_le_bytes(out))
    }

    pub fn coprime(self, other: Self) -> bool {
        self.gcd(other).is_one()
    }

    /// Degree-reverse-lexicographic comparison: higher total degree wins;
    /// on ties the monomial with the smaller exponent at the last variable
    /// where they differ is the larger one.
    pub fn cmp_degrevlex(self, other: Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let da = self.0 >> 56;
        let db = other.0 >> 56;
        if da != db {
            return da.cmp(&db);
        }
        let x = self.0 ^ other.0;
        // Highest differing byte is the largest differing variable index.
        let shift = (63 - x.leading_zeros()) & !7;
        let ea = (self.0 >> shift) & 0xff;
        let eb = (other.0 >> shift) & 0xff;
        eb.cmp(&ea)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..MAX_VARS {
            let e = self.exponent(i);
            if e > 0 {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "x{}", i + 1)?;
                } else {
                    write!(f, "x{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_basics() {
        let x1 = Monomial::var(0);
        let x2 = Monomial::var(1);
        let x3 = Monomial::var(2);
        assert_eq!(x1.cmp_degrevlex(x2), Ordering::Greater);
        assert_eq!(x2.cmp_degrevlex(x3), Ordering::Greater);
        // degree dominates
        assert_eq!(x3.mul(x3).cmp_degrevlex(x1), Ordering::Greater);
        // x1*x3 vs x2^2: last differing variable is x3, x2^2 has exponent 0 there
        let a = x1.mul(x3);
        let b = x2.mul(x2);
        assert_eq!(a.cmp_degrevlex(b), Ordering::Less);
    }

    #[test]
    fn div_lcm_gcd() {
        let m = Monomial::from_exponents(&[2, 1, 0]);
        let d = Monomial::from_exponents(&[1, 1, 0]);
        assert_eq!(m.try_div(d), Some(Monomial::var(0)));
        assert_eq!(m.try_div(Monomial::var(2)), None);
        let n = Monomial::from_exponents(&[0, 2, 1]);
        assert_eq!(m.lcm(n), Monomial::from_exponents(&[2, 2, 1]));
        assert_eq!(m.gcd(n), Monomial::from_exponents(&[0, 1, 0]));
        assert!(Monomial::var(0).coprime(Monomial::var(1)));
    }

    #[test]
    fn total_order_on_degree_slice() {
        // all degree-3 monomials in 3 variables are pairwise comparable
        let mut monos = vec![];
        for a in 0..=3u32 {
            for b in 0..=(3 - a) {
                monos.push(Monomial::from_exponents(&[a, b, 3 - a - b]));
            }
        }
        for (i, &m) in monos.iter().enumerate() {
            for &n in &monos[i + 1..] {
                assert_ne!(m.cmp_degrevlex(n), Ordering::Equal);
            }
        }
    }
}
