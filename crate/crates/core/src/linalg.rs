//! Dense exact linear algebra over the rationals.

use crate::ring::Q;
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::Bound;

pub type Matrix = Vec<Vec<Q>>;

/// Reduced row echelon form with first-nonzero pivoting; returns pivot columns.
pub fn rref(rows: &[Vec<Q>], ncols: usize) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    match rows.first() {
        None => 0,
        Some(r0) => rref(rows, r0.len()).1.len(),
    }
}

/// Basis of `{x : M x = 0}` for an `nrows × ncols` matrix.
pub fn kernel(rows: &[Vec<Q>], ncols: usize) -> Matrix {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Coefficients `c` with `Σ c_i basis_i = v`, if `v` lies in the span.
pub fn coords_in_span(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let n = v.len();
    let k = basis.len();
    if k == 0 {
        return if v.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // columns are basis vectors, augmented with v
    let aug: Matrix = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let (r, pivots) = rref(&aug, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![Q::zero(); k];
    for (row, &pc) in r.iter().zip(&pivots) {
        c[pc] = row[k].clone();
    }
    // a dependent basis leaves free coordinates at zero
    Some(c)
}

pub fn transpose(m: &[Vec<Q>]) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Matrix {
    let bt = transpose(b);
    a.iter()
        .map(|row| {
            bt.iter()
                .map(|col| row.iter().zip(col).fold(Q::zero(), |acc, (x, y)| acc + x * y))
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn inverse(m: &[Vec<Q>]) -> Option<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let (r, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let pivot = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    det
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

pub type SparseVec<K> = BTreeMap<K, Q>;

pub fn sparse_axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &Q, x: &SparseVec<K>) {
    for (k, v) in x {
        let delta = a * v;
        match y.get_mut(k) {
            Some(e) => {
                *e += delta;
                if e.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                if !delta.is_zero() {
                    y.insert(k.clone(), delta);
                }
            }
        }
    }
}

/// Leading-term echelon basis of a subspace of a sparse coordinate space,
/// optionally tracking each row as a combination of inserted generators.
/// Leading term = greatest key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone, T: Ord + Clone> {
    rows: BTreeMap<K, (SparseVec<K>, SparseVec<T>)>,
    operations: u64,
    budget: u64,
}

impl<K: Ord + Clone, T: Ord + Clone> Echelon<K, T> {
    pub fn new(budget: u64) -> Self {
        Echelon {
            rows: BTreeMap::new(),
            operations: 0,
            budget,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn operations(&self) -> u64 {
        self.operations
    }

    pub fn set_budget(&mut self, budget: u64) {
        self.budget = budget;
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    fn charge(&mut self) -> Result<()> {
        self.operations += 1;
        if self.operations > self.budget {
            Err(Error::BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    /// Eliminates every pivot key from `v`; returns the canonical remainder
    /// and the combination of generators that was subtracted.
    pub fn reduce(&mut self, mut v: SparseVec<K>) -> Result<(SparseVec<K>, SparseVec<T>)> {
        let mut used: SparseVec<T> = BTreeMap::new();
        let mut upper: Option<K> = None;
        loop {
            let found = {
                let mut range: Box<dyn DoubleEndedIterator<Item = (&K, &Q)>> = match &upper {
                    None => Box::new(v.iter()),
                    Some(u) => Box::new(v.range((Bound::Unbounded, Bound::Excluded(u.clone())))),
                };
                range
                    .by_ref()
                    .rev()
                    .find(|(k, _)| self.rows.contains_key(*k))
                    .map(|(k, c)| (k.clone(), c.clone()))
            };
            let Some((k, c)) = found else { break };
            self.charge()?;
            let (row, combo) = &self.rows[&k];
            let minus = -c.clone();
            sparse_axpy(&mut v, &minus, row);
            sparse_axpy(&mut used, &c, combo);
            upper = Some(k);
        }
        Ok((v, used))
    }

    /// Adds `v` (known as the combination `combo` of generators); returns
    /// whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>, combo: SparseVec<T>) -> Result<bool> {
        let (rem, used) = self.reduce(v)?;
        let Some((lead, lc)) = rem.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return Ok(false);
        };
        let mut combo = combo;
        sparse_axpy(&mut combo, &-Q::one(), &used);
        let inv = lc.recip();
        let row: SparseVec<K> = rem.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        let combo: SparseVec<T> = combo.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        self.rows.insert(lead, (row, combo));
        Ok(true)
    }

    /// Coordinates of `v` in the inserted generators, if `v` lies in the span.
    pub fn express(&mut self, v: SparseVec<K>) -> Result<Option<SparseVec<T>>> {
        let (rem, used) = self.reduce(v)?;
        Ok(if rem.is_empty() { Some(used) } else { None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qi;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]);
        assert_eq!(rank(&a), 2);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&a, &k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(determinant(&a), qi(1));
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn echelon_tracks_combinations() {
        let mut e: Echelon<u32, u32> = Echelon::new(1000);
        let v = |pairs: &[(u32, i64)]| pairs.iter().map(|&(k, c)| (k, qi(c))).collect::<SparseVec<u32>>();
        let gen = |t: u32| [(t, qi(1))].into_iter().collect::<SparseVec<u32>>();
        assert!(e.insert(v(&[(0, 1), (2, 1)]), gen(0)).unwrap());
        assert!(e.insert(v(&[(1, 1), (2, 1)]), gen(1)).unwrap());
        assert!(!e.insert(v(&[(0, 1), (1, -1)]), gen(2)).unwrap());
        let c = e.express(v(&[(0, 2), (1, 3), (2, 5)])).unwrap().unwrap();
        assert_eq!(c, [(0, qi(2)), (1, qi(3))].into_iter().collect());
        assert!(e.express(v(&[(0, 1)])).unwrap().is_none());
        let (rem, _) = e.reduce(v(&[(0, 1)])).unwrap();
        let (rem2, _) = e.reduce(v(&[(1, 1)])).unwrap();
        assert_eq!(rem, rem2);
        let mut tiny: Echelon<u32, u32> = Echelon::new(0);
        tiny.rows = e.rows.clone();
        assert!(tiny.reduce(v(&[(2, 1)])).is_err());
    }

    #[test]
    fn span_coordinates() {
        let basis = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let c = coords_in_span(&basis, &[qi(2), qi(3), qi(5)]).unwrap();
        assert_eq!(c, vec![qi(2), qi(3)]);
        assert!(coords_in_span(&basis, &[qi(0), qi(0), qi(1)]).is_none());
    }
}
