//! Exact determinants and inverses of small integer matrices.

use num_rational::Rational64;
use num_traits::{One, Zero};

/// Determinant by fraction-free Bareiss elimination.
pub fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Inverse over the rationals, `None` if singular.
pub fn inverse(m: &[Vec<Rational64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    m.iter().map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect()).collect()
}

/// A nonzero vector orthogonal to the given `k - 1` vectors in `Z^k`, or
/// `None` if they are linearly dependent.
pub fn normal_vector(vectors: &[&[i64]]) -> Option<Vec<i64>> {
    let k = vectors.len() + 1;
    let w: Vec<i64> = (0..k)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                vectors.iter().map(|v| (0..k).filter(|&c| c != j).map(|c| v[c]).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * det(&minor)
        })
        .collect();
    w.iter().any(|&x| x != 0).then_some(w)
}
