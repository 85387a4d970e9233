//! Exact Smith normal form over the integers.
//!
//! Elimination runs on `i64` with checked arithmetic and restarts on
//! arbitrary-precision integers if any intermediate value overflows.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Matrix product. Panics on dimension mismatch or overflow.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = self.data.chunks(self.cols.max(1)).take(self.rows).collect();
        f.debug_struct("IntMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &rows)
            .finish()
    }
}

/// Nonzero diagonal of the Smith normal form: `d₁ | d₂ | … | d_r`, all
/// positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Diagonal entries greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.diagonal.iter().filter(|d| **d > BigInt::from(1))
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let work: Vec<Vec<i64>> = (0..m.rows)
        .map(|r| m.data[r * m.cols..(r + 1) * m.cols].to_vec())
        .collect();
    let diagonal = match eliminate(work) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => {
            let big: Vec<Vec<BigInt>> = (0..m.rows)
                .map(|r| m.data[r * m.cols..(r + 1) * m.cols].iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            eliminate(big).expect("arbitrary precision elimination cannot overflow")
        }
    };
    SnfResult { diagonal }
}

/// Smith normal form of a matrix that is already given with big entries.
pub fn smith_normal_form_big(rows: Vec<Vec<BigInt>>) -> SnfResult {
    SnfResult {
        diagonal: eliminate(rows).expect("arbitrary precision elimination cannot overflow"),
    }
}

/// Ring operations needed by the elimination; `None` signals overflow.
trait Entry: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    /// Truncated quotient and remainder.
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)>;
    /// `self − q·b`.
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn add(&self, b: &Self) -> Option<Self>;
    fn abs(&self) -> Option<Self>;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        Some((self.checked_div(*d)?, self.checked_rem(*d)?))
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        self.checked_add(*b)
    }
    fn abs(&self) -> Option<Self> {
        self.checked_abs()
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        Some((self / d, self % d))
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn abs(&self) -> Option<Self> {
        Some(Signed::abs(self))
    }
}

/// Position of a nonzero entry of minimal absolute value in `a[t.., t..]`.
fn min_pivot<T: Entry>(a: &[Vec<T>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if !v.abs_lt(&a[bi][bj]) => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_cols<T>(a: &mut [Vec<T>], j: usize, k: usize) {
    if j != k {
        for row in a.iter_mut() {
            row.swap(j, k);
        }
    }
}

fn eliminate<T: Entry>(mut a: Vec<Vec<T>>) -> Option<Vec<T>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_pivot(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut smaller: Option<(usize, usize)> = None;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].div_rem(&a[t][t])?;
                for j in t..cols {
                    a[i][j] = a[i][j].sub_mul(&q, &a[t][j])?;
                }
                if !r.is_zero() {
                    smaller = Some((i, t));
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].div_rem(&a[t][t])?;
                for i in t..rows {
                    a[i][j] = a[i][j].sub_mul(&q, &a[i][t])?;
                }
                if !r.is_zero() {
                    smaller = Some((t, j));
                }
            }
            if let Some((i, j)) = smaller {
                // A remainder smaller than the pivot survived; move it to the
                // pivot position and reduce again.
                let (mut bi, mut bj) = (i, j);
                for k in t + 1..rows {
                    if !a[k][t].is_zero() && a[k][t].abs_lt(&a[bi][bj]) {
                        (bi, bj) = (k, t);
                    }
                }
                for k in t + 1..cols {
                    if !a[t][k].is_zero() && a[t][k].abs_lt(&a[bi][bj]) {
                        (bi, bj) = (t, k);
                    }
                }
                a.swap(t, bi);
                swap_cols(&mut a, t, bj);
                continue;
            }
            // Row and column are clear; the pivot must divide the rest.
            let offending = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| {
                    !a[i][j].is_zero() && a[i][j].div_rem(&a[t][t]).is_some_and(|(_, r)| !r.is_zero())
                })
            });
            match offending {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] = a[t][j].add(&a[i][j])?;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs()?);
        t += 1;
    }
    Some(diagonal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_rows(m))
            .diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(diag(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(diag(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(diag(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(diag(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(smith_normal_form(&IntMatrix::zeros(0, 5)).rank(), 0);
        assert_eq!(smith_normal_form(&IntMatrix::zeros(3, 0)).rank(), 0);
    }

    #[test]
    fn overflow_promotes_to_big_integers() {
        let big = i64::MAX / 2;
        let m = IntMatrix::from_rows(&[vec![big, big - 1], vec![big - 1, -big]]);
        let r = smith_normal_form(&m);
        // det = -big² - (big-1)², gcd of entries is 1.
        let b = BigInt::from(big);
        let det = &b * &b + (&b - 1) * (&b - 1);
        assert_eq!(r.diagonal, vec![BigInt::from(1), det]);

        let m = IntMatrix::from_rows(&[vec![i64::MIN, 0], vec![0, 1]]);
        let r = smith_normal_form(&m);
        assert_eq!(r.diagonal, vec![BigInt::from(1), -BigInt::from(i64::MIN)]);
    }
}
