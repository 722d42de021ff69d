//! Dense exact linear algebra over the rationals.
//!
//! Small matrices only: coordinate changes, flat subspaces, Saito
//! determinants. The graded-slice solver has its own sparse elimination.

use num_traits::{One, Signed, Zero};

use crate::poly::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // choose a pivot row: prefer entries of small height for stability of cost
            let mut pick = None;
            for i in r..self.rows {
                if !self.get(i, c).is_zero() {
                    pick = Some(i);
                    break;
                }
            }
            let Some(p) = pick else { continue };
            self.swap_rows(r, p);
            let inv = self.get(r, c).recip();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j) - &f * self.get(r, j);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let pivots = aug.rref();
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let mut pick = None;
            for i in c..n {
                if !m.get(i, c).is_zero() {
                    pick = Some(i);
                    break;
                }
            }
            let Some(p) = pick else { return Rat::zero() };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m.get(c, c);
            let inv = m.get(c, c).recip();
            for i in c + 1..n {
                if !m.get(i, c).is_zero() {
                    let f = m.get(i, c) * &inv;
                    for j in c..n {
                        let v = m.get(i, j) - &f * m.get(c, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self.get(i, j).is_zero() && !v[j].is_zero() {
                        acc += self.get(i, j) * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Basis of the right kernel, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = vec![];
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            writeln!(
                f,
                "[{}]",
                self.row(i).iter().map(crate::poly::rat_to_string).collect::<Vec<_>>().join(", ")
            )?;
        }
        Ok(())
    }
}

/// Canonical reduced row echelon basis of the row span, zero rows dropped.
/// Two matrices have equal output iff they have equal row spans.
pub fn row_space_canonical(rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    if rows.is_empty() {
        return vec![];
    }
    let mut m = Mat::from_rows(rows);
    let pivots = m.rref();
    (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
}

/// Normalize a vector so its first nonzero entry is 1; `None` if zero.
pub fn normalize_first_one(v: &[Rat]) -> Option<Vec<Rat>> {
    let lead = v.iter().find(|c| !c.is_zero())?;
    let inv = lead.recip();
    Some(v.iter().map(|c| c * &inv).collect())
}

/// Clear denominators and divide by the integer content; first nonzero entry
/// positive. Canonical representative of the projective point.
pub fn normalize_primitive(v: &[Rat]) -> Option<Vec<Rat>> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    if v.iter().all(|c| c.is_zero()) {
        return None;
    }
    let mut den_lcm = BigInt::one();
    for c in v {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut g = BigInt::zero();
    let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * &den_lcm / c.denom()).collect();
    for x in &ints {
        g = g.gcd(x);
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            g = -g;
        }
    }
    Some(ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    #[test]
    fn inverse_and_det() {
        let m = Mat::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(5)],
        ]);
        assert_eq!(m.det(), rat_int(-1));
        let inv = m.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &rat_int(-5));
        let singular = Mat::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.det(), rat_int(0));
    }

    #[test]
    fn kernel() {
        let m = Mat::from_rows(vec![vec![rat_int(1), rat_int(1), rat_int(0)]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn canonical_row_space() {
        let a = row_space_canonical(vec![
            vec![rat_int(2), rat_int(0), rat_int(2)],
            vec![rat_int(0), rat_int(1), rat_int(1)],
        ]);
        let b = row_space_canonical(vec![
            vec![rat_int(1), rat_int(1), rat_int(2)],
            vec![rat_int(0), rat_int(2), rat_int(2)],
        ]);
        assert_eq!(a, b);
    }
}
