//! Dense integer and rational matrices with exact linear algebra:
//! Bareiss determinants, Gaussian elimination, exterior powers.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rat::{rat_from_int, Int, Rat};

/// Row-major integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    a: Vec<Int>,
}

impl IntMat {
    pub fn new(rows: usize, cols: usize, a: Vec<Int>) -> Self {
        assert_eq!(a.len(), rows * cols, "entry count must match dimensions");
        IntMat { rows, cols, a }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            a.extend(row.iter().map(|&v| Int::from(v)));
        }
        IntMat { rows: r, cols: c, a }
    }

    pub fn identity(n: usize) -> Self {
        let mut a = vec![Int::zero(); n * n];
        for i in 0..n {
            a[i * n + i] = Int::one();
        }
        IntMat { rows: n, cols: n, a }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMat {
        let mut a = Vec::with_capacity(self.a.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                a.push(self.at(i, j).clone());
            }
        }
        IntMat {
            rows: self.cols,
            cols: self.rows,
            a,
        }
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut a = vec![Int::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = self.at(i, k);
                if lik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    a[i * rhs.cols + j] += lik * rhs.at(k, j);
                }
            }
        }
        IntMat {
            rows: self.rows,
            cols: rhs.cols,
            a,
        }
    }

    pub fn pow(&self, p: u32) -> IntMat {
        assert!(self.is_square());
        let mut result = IntMat::identity(self.rows);
        let mut base = self.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Matrix--vector product over the integers.
    pub fn apply_int(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Int::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// Matrix--vector product with a rational vector.
    pub fn apply_rat(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| rat_from_int(a) * b)
                    .fold(Rat::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<Int> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut m: Vec<Vec<Int>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = 1i64;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = Int::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// k-th exterior power: entry ((I),(J)) is the k x k minor with rows I
    /// and columns J, index sets in lexicographic order.
    pub fn ext_power(&self, k: usize) -> Result<IntMat> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
        let dim = subsets.len();
        let mut a = Vec::with_capacity(dim * dim);
        for rows_sel in &subsets {
            for cols_sel in &subsets {
                let minor_entries: Vec<Int> = rows_sel
                    .iter()
                    .flat_map(|&i| cols_sel.iter().map(move |&j| self.at(i, j).clone()))
                    .collect();
                let minor = IntMat::new(k, k, minor_entries);
                a.push(minor.det()?);
            }
        }
        Ok(IntMat {
            rows: dim,
            cols: dim,
            a,
        })
    }

    pub fn to_rat(&self) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(rat_from_int).collect(),
        }
    }

    pub fn entries_i64(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_i64()).collect())
            .collect()
    }
}

/// Row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    a: Vec<Rat>,
}

impl QMat {
    pub fn new(rows: usize, cols: usize, a: Vec<Rat>) -> Self {
        assert_eq!(a.len(), rows * cols);
        QMat { rows, cols, a }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            a: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, rhs: &QMat) -> QMat {
        assert_eq!(self.cols, rhs.rows);
        let mut a = vec![Rat::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = self.at(i, k);
                if lik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    a[i * rhs.cols + j] += lik * rhs.at(k, j);
                }
            }
        }
        QMat {
            rows: self.rows,
            cols: rhs.cols,
            a,
        }
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rat::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols))
            .map(|i| self.at(i, i).clone())
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    pub fn scale(&self, c: &Rat) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, rhs: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMat {
            rows: self.rows,
            cols: self.cols,
            a: self
                .a
                .iter()
                .zip(&rhs.a)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Rat>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let pivot = (rank..self.rows).find(|&i| !m[i][col].is_zero());
            let Some(p) = pivot else { continue };
            m.swap(rank, p);
            let inv = m[rank][col].clone();
            for j in col..self.cols {
                let v = m[rank][j].clone() / inv.clone();
                m[rank][j] = v;
            }
            for i in 0..self.rows {
                if i != rank && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for j in col..self.cols {
                        let v = m[i][j].clone() - f.clone() * m[rank][j].clone();
                        m[i][j] = v;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Solve `self * x = b`. Requires a square nonsingular matrix.
    pub fn solve(&self, b: &[Rat]) -> Result<Vec<Rat>> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        assert_eq!(b.len(), n);
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(b[i].clone());
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&i| !m[i][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            m.swap(col, pivot);
            let inv = m[col][col].clone();
            for j in col..=n {
                let v = m[col][j].clone() / inv.clone();
                m[col][j] = v;
            }
            for i in 0..n {
                if i != col && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for j in col..=n {
                        let v = m[i][j].clone() - f.clone() * m[col][j].clone();
                        m[i][j] = v;
                    }
                }
            }
        }
        Ok(m.into_iter().map(|row| row[n].clone()).collect())
    }

    pub fn inverse(&self) -> Result<QMat> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut inv = QMat::zero(n, n);
        for j in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::one();
            let col = self.solve(&e)?;
            for i in 0..n {
                inv.set(i, j, col[i].clone());
            }
        }
        Ok(inv)
    }
}

/// Reduced row echelon form; returns the matrix together with the pivot
/// column of each nonzero row (pivots chosen left to right).
pub fn rref(mat: &QMat) -> (QMat, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = (0..mat.rows()).map(|i| mat.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..mat.cols() {
        let Some(p) = (r..mat.rows()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].clone();
        for j in col..mat.cols() {
            let v = m[r][j].clone() / inv.clone();
            m[r][j] = v;
        }
        for i in 0..mat.rows() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..mat.cols() {
                    let v = m[i][j].clone() - f.clone() * m[r][j].clone();
                    m[i][j] = v;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == mat.rows() {
            break;
        }
    }
    let flat: Vec<Rat> = m.into_iter().flatten().collect();
    (QMat::new(mat.rows(), mat.cols(), flat), pivots)
}

/// Primitive integer vector in the same positive direction as `v`.
pub fn primitivize(v: &[Rat]) -> Vec<Int> {
    use num_integer::Integer;
    let mut lcm = Int::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = Int::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// gcd of all maximal minors of an n x k integer matrix of rank k given by
/// columns; equals the index of the column lattice inside its saturation.
pub fn lattice_index(cols: &[Vec<Int>]) -> Result<Int> {
    use num_integer::Integer;
    let k = cols.len();
    if k == 0 {
        return Ok(Int::one());
    }
    let n = cols[0].len();
    if k > n {
        return Err(Error::InvalidParameter(
            "more columns than ambient dimensions".into(),
        ));
    }
    let mut g = Int::zero();
    for rows_sel in (0..n).combinations(k) {
        let entries: Vec<Int> = rows_sel
            .iter()
            .flat_map(|&i| cols.iter().map(move |c| c[i].clone()))
            .collect();
        let minor = IntMat::new(k, k, entries).det()?;
        g = g.gcd(&minor);
    }
    if g.is_zero() {
        return Err(Error::InvalidParameter(
            "columns are linearly dependent".into(),
        ));
    }
    Ok(g.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    #[test]
    fn ext_power_of_identity_is_identity() {
        let a = IntMat::identity(3);
        assert_eq!(a.ext_power(2).unwrap(), IntMat::identity(3));
    }

    #[test]
    fn ext_power_top_is_det() {
        let a = IntMat::from_i64(&[vec![2, 1], vec![1, 1]]);
        let top = a.ext_power(2).unwrap();
        assert_eq!(top, IntMat::new(1, 1, vec![int(1)]));
    }

    #[test]
    fn ext_power_zero_is_one_by_one() {
        let a = IntMat::from_i64(&[vec![5, 3], vec![7, 2]]);
        assert_eq!(a.ext_power(0).unwrap(), IntMat::identity(1));
    }

    #[test]
    fn bareiss_det() {
        let a = IntMat::from_i64(&[vec![2, 1, 0], vec![1, 1, 3], vec![0, -1, 2]]);
        // expand: 2*(2+3) - 1*(2-0) = 10 - 2 = 8
        assert_eq!(a.det().unwrap(), int(8));
    }

    #[test]
    fn solve_and_inverse() {
        let m = QMat::new(2, 2, vec![rat(2), rat(1), rat(1), rat(1)]);
        let x = m.solve(&[rat(3), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv.mul(&m), QMat::identity(2));
    }

    #[test]
    fn lattice_index_detects_sublattice() {
        // columns (1,1) and (1,-1) span an index-2 sublattice of Z^2
        let cols = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        assert_eq!(lattice_index(&cols).unwrap(), int(2));
    }

    #[test]
    fn primitivize_clears_denominators() {
        use crate::exact::rat::rat_pq;
        let v = vec![rat_pq(2, 3), rat_pq(4, 3)];
        assert_eq!(primitivize(&v), vec![int(1), int(2)]);
    }
}
