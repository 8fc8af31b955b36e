//! Dense exact linear algebra, generic over the scalar.
//!
//! Ranks of integer matrices use fraction-free row elimination: rows are
//! combined with integer multipliers and divided by their content, so no
//! fractions ever appear. Elimination over machine integers reports overflow
//! instead of wrapping; [`rank`] retries with arbitrary precision when that
//! happens. Kernels are computed over a field (exact rationals in practice)
//! from the reduced row echelon form.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedMul, CheckedSub, Num, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Builds a matrix from row vectors; `None` if the rows are ragged.
    /// `cols` fixes the width when there are no rows.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Option<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone + Zero + std::ops::Mul<Output = T>> Matrix<T> {
    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let acc = out.get(r, c).clone() + a.clone() * b.clone();
                        out.set(r, c, acc);
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix: `x^T M`.
    pub fn left_apply(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.rows, "shape mismatch in vector product");
        let mut out = vec![T::zero(); self.cols];
        for (r, xr) in x.iter().enumerate() {
            if xr.is_zero() {
                continue;
            }
            for (c, slot) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *slot = slot.clone() + xr.clone() * a.clone();
                }
            }
        }
        out
    }
}

/// Integer types usable for fraction-free elimination.
pub trait ExactInteger: Integer + Signed + Clone + CheckedMul + CheckedSub + Debug {}

impl<T: Integer + Signed + Clone + CheckedMul + CheckedSub + Debug> ExactInteger for T {}

/// Exact field scalars.
pub trait Field: Clone + PartialEq + Num + Neg<Output = Self> + Debug {}

impl<I: Integer + Signed + Clone + Debug> Field for Ratio<I> {}

/// Rank by fraction-free elimination. `None` if an intermediate value does
/// not fit in `T`.
pub fn try_rank<T: ExactInteger>(m: &Matrix<T>) -> Option<usize> {
    let mut rows: Vec<Vec<T>> = m
        .row_vecs()
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        if rank == rows.len() {
            break;
        }
        // smallest pivot keeps multipliers small
        let Some(p) = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()))
        else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pivot.gcd(&row[col]);
            let keep = pivot.clone() / g.clone();
            let take = row[col].clone() / g;
            for c in col..row.len() {
                let a = keep.checked_mul(&row[c])?;
                let b = take.checked_mul(&pivot_row[c])?;
                row[c] = a.checked_sub(&b)?;
            }
            let content = row.iter().fold(T::zero(), |acc, x| acc.gcd(x));
            if !content.is_zero() && !content.is_one() {
                for x in row.iter_mut() {
                    *x = x.clone() / content.clone();
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Exact rank of an integer matrix.
pub fn rank(m: &Matrix<i64>) -> usize {
    try_rank(m).unwrap_or_else(|| {
        try_rank(&m.map(|&x| BigInt::from(x))).expect("arbitrary precision cannot overflow")
    })
}

/// Reduced row echelon form and the pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        if p != r {
            for c in 0..a.cols() {
                let tmp = a.get(p, c).clone();
                a.set(p, c, a.get(r, c).clone());
                a.set(r, c, tmp);
            }
        }
        let inv = F::one() / a.get(r, col).clone();
        for c in col..a.cols() {
            let x = a.get(r, c).clone() * inv.clone();
            a.set(r, c, x);
        }
        for i in 0..a.rows() {
            if i == r || a.get(i, col).is_zero() {
                continue;
            }
            let factor = a.get(i, col).clone();
            for c in col..a.cols() {
                let x = a.get(i, c).clone() - factor.clone() * a.get(r, c).clone();
                a.set(i, c, x);
            }
        }
        pivots.push(col);
        r += 1;
    }
    (a, pivots)
}

/// Rank over a field.
pub fn rank_over_field<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : M x = 0}`, one vector per free column of the RREF.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let (r, pivots) = rref(m);
    let free = (0..m.cols()).filter(|c| !pivots.contains(c));
    free.map(|fc| {
        let mut x = vec![F::zero(); m.cols()];
        x[fc] = F::one();
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = -r.get(row, fc).clone();
        }
        x
    })
    .collect()
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. The zero vector maps to zeros.
pub fn primitive<I: Integer + Signed + Clone>(v: &[Ratio<I>]) -> Vec<I> {
    let lcm = v.iter().fold(I::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<I> = v
        .iter()
        .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
        .collect();
    let g = ints.iter().fold(I::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let negate = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in &mut ints {
        *x = x.clone() / g.clone();
        if negate {
            *x = -x.clone();
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn int_matrix(rows: &[&[i64]]) -> Matrix<i64> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect(), cols).unwrap()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&int_matrix(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&int_matrix(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(
            rank(&int_matrix(&[&[2, 3, 5], &[7, 11, 13], &[17, 19, 23]])),
            3
        );
        assert_eq!(rank(&Matrix::<i64>::zeros(0, 4)), 0);
        assert_eq!(rank(&Matrix::<i64>::zeros(3, 0)), 0);
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 2;
        let m = int_matrix(&[&[big, big - 1], &[big - 3, big - 7]]);
        assert_eq!(try_rank(&m), None);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn kernel_of_projection() {
        let m = Matrix::from_rows(vec![vec![q(1), q(1), q(0)]], 3).unwrap();
        let k = kernel(&m);
        assert_eq!(k, vec![vec![q(-1), q(1), q(0)], vec![q(0), q(0), q(1)]]);
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![
            BigRational::new((-1).into(), 2.into()),
            q(0),
            BigRational::new(3.into(), 4.into()),
        ];
        let p: Vec<BigInt> = primitive(&v);
        assert_eq!(p, vec![2.into(), 0.into(), (-3).into()]);
        assert_eq!(primitive::<BigInt>(&[q(0), q(0)]), vec![BigInt::from(0); 2]);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<i64>> {
        (0usize..7, 0usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
                .prop_map(move |rows| Matrix::from_rows(rows, c).unwrap())
        })
    }

    proptest! {
        #[test]
        fn integer_and_field_ranks_agree(m in small_matrix()) {
            let over_q = rank_over_field(&m.map(|&x| q(x)));
            prop_assert_eq!(rank(&m), over_q);
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in small_matrix()) {
            let mq = m.map(|&x| q(x));
            let ker = kernel(&mq);
            prop_assert_eq!(ker.len() + rank(&m), m.cols());
            for v in ker {
                let col = Matrix::from_rows(v.into_iter().map(|x| vec![x]).collect(), 1).unwrap();
                prop_assert!(mq.mul(&col).is_zero());
            }
        }
    }
}
