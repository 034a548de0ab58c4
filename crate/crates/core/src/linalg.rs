//! Exact rank of sparse integer matrices.
//!
//! Rows are reduced fraction-free against previously found pivot rows and
//! divided by their content after every step, which is Gaussian elimination
//! over the rationals without denominators. Elimination first runs in `i64`
//! with checked arithmetic and restarts in arbitrary precision on overflow.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse row: `(column, value)` pairs. Order and zero entries are tolerated.
pub type SparseRow = Vec<(usize, i64)>;

/// Rank over the rationals.
pub fn rank(rows: &[SparseRow]) -> usize {
    match eliminate::<i64>(rows) {
        Some(r) => r,
        None => eliminate::<BigInt>(rows).expect("arbitrary precision elimination cannot overflow"),
    }
}

/// Rank of a dense integer matrix given row by row.
pub fn rank_dense(rows: &[Vec<i64>]) -> usize {
    let sparse: Vec<SparseRow> = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|&(_, &x)| x != 0).map(|(c, &x)| (c, x)).collect())
        .collect();
    rank(&sparse)
}

trait Scalar: Clone + PartialEq + Sized {
    fn from_i64(x: i64) -> Self;
    fn from_i128(x: i128) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// `a * x - b * y`
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn is_unit(&self) -> bool;
}

impl Scalar for i64 {
    fn from_i64(x: i64) -> Self {
        x
    }
    fn from_i128(x: i128) -> Option<Self> {
        i64::try_from(x).ok()
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl Scalar for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn from_i128(x: i128) -> Option<Self> {
        Some(BigInt::from(x))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

fn eliminate<T: Scalar>(rows: &[SparseRow]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for raw in rows {
        let mut row = prepare::<T>(raw)?;
        while let Some((col, lead)) = row.first().cloned() {
            match pivots.get(&col) {
                None => {
                    pivots.insert(col, row);
                    break;
                }
                Some(pivot) => {
                    let plead = pivot[0].1.clone();
                    row = combine(&row, &plead, pivot, &lead)?;
                    normalize(&mut row)?;
                }
            }
        }
    }
    Some(pivots.len())
}

fn prepare<T: Scalar>(raw: &SparseRow) -> Option<Vec<(usize, T)>> {
    let mut sorted: Vec<(usize, i64)> = raw.clone();
    sorted.sort_unstable_by_key(|&(c, _)| c);
    let mut merged: Vec<(usize, i128)> = Vec::with_capacity(sorted.len());
    for (c, x) in sorted {
        match merged.last_mut() {
            Some((lc, lx)) if *lc == c => *lx += x as i128,
            _ => merged.push((c, x as i128)),
        }
    }
    merged.into_iter().filter(|&(_, x)| x != 0).map(|(c, x)| Some((c, T::from_i128(x)?))).collect()
}

/// `a * row - b * pivot`, where `a` is the pivot's leading entry and `b` the row's.
fn combine<T: Scalar>(row: &[(usize, T)], a: &T, pivot: &[(usize, T)], b: &T) -> Option<Vec<(usize, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let (c, x, y) = match (row.get(i), pivot.get(j)) {
            (Some((c1, x)), Some((c2, y))) if c1 == c2 => {
                i += 1;
                j += 1;
                (*c1, x, y)
            }
            (Some((c1, x)), Some((c2, _))) if c1 < c2 => {
                i += 1;
                (*c1, x, &zero)
            }
            (Some((c1, x)), None) => {
                i += 1;
                (*c1, x, &zero)
            }
            (_, Some((c2, y))) => {
                j += 1;
                (*c2, &zero, y)
            }
            (None, None) => unreachable!(),
        };
        let v = T::cross(a, x, b, y)?;
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    Some(out)
}

fn normalize<T: Scalar>(row: &mut [(usize, T)]) -> Option<()> {
    let Some(first) = row.first() else {
        return Some(());
    };
    let mut g = first.1.clone();
    for (_, x) in row.iter().skip(1) {
        if g.is_unit() {
            break;
        }
        g = g.gcd(x);
    }
    if g.is_negative() {
        g = g.neg()?;
    }
    if !g.is_unit() && !g.is_zero() {
        for (_, x) in row.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
    Some(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_dense(&[]), 0);
        assert_eq!(rank_dense(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_dense(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_dense(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
        assert_eq!(rank_dense(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]), 3);
    }

    #[test]
    fn duplicate_columns_are_summed() {
        assert_eq!(rank(&[vec![(0, 1), (0, -1)], vec![(1, 1)]]), 1);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 2;
        let rows = vec![vec![(0, big), (1, big - 1)], vec![(0, big - 1), (1, big - 3)], vec![(0, 3), (1, 7)]];
        assert_eq!(eliminate::<i64>(&rows), None);
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn cycle_incidence_rank() {
        // signed incidence matrix of a 5-cycle has rank 4
        let rows: Vec<SparseRow> = (0..5).map(|i| vec![(i, 1), ((i + 1) % 5, -1)]).collect();
        assert_eq!(rank(&rows), 4);
    }

    /// Small entries keep floating-point elimination exact enough to compare against.
    #[test]
    fn agrees_with_float_elimination_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let (m, n) = (rng.gen_range(1..7), rng.gen_range(1..7));
            let rows: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-2..3)).collect()).collect();
            assert_eq!(rank_dense(&rows), float_rank(&rows));
        }
    }

    fn float_rank(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        let (m, n) = (a.len(), a.first().map_or(0, Vec::len));
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..m).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())) else { break };
            if a[p][c].abs() < 1e-9 {
                continue;
            }
            a.swap(r, p);
            for i in 0..m {
                if i != r {
                    let f = a[i][c] / a[r][c];
                    for k in 0..n {
                        a[i][k] -= f * a[r][k];
                    }
                }
            }
            r += 1;
        }
        r
    }
}
