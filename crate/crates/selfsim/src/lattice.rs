//! Finite-index sublattices of Z^d: membership, coordinates, transversals.
//!
//! A lattice is given by a d x d integer basis matrix (rows generate). The
//! Hermite normal form is computed once; membership and canonical residues
//! reduce against it, so all answers are exact.

use crate::error::{Error, Result};
use crate::poly::ExpVec;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    basis: Vec<Vec<i64>>,
    hnf: Vec<Vec<i64>>,
}

impl Lattice {
    /// Builds a full-rank lattice from basis rows; errors when det = 0.
    pub fn new(basis: Vec<Vec<i64>>) -> Result<Self> {
        let d = basis.len();
        if d == 0 || basis.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidParameter("lattice basis must be square".into()));
        }
        if det(&basis) == 0 {
            return Err(Error::SingularLattice);
        }
        let hnf = hermite_normal_form(&basis)?;
        Ok(Lattice { basis, hnf })
    }

    /// The full lattice Z^d.
    pub fn full(d: usize) -> Self {
        let mut basis = vec![vec![0i64; d]; d];
        for (i, row) in basis.iter_mut().enumerate() {
            row[i] = 1;
        }
        Lattice::new(basis).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> ExpVec {
        ExpVec::new(self.basis[i].clone())
    }

    /// [Z^d : L] = |det(basis)|.
    pub fn index(&self) -> u64 {
        self.hnf.iter().enumerate().map(|(i, r)| r[i] as u64).product()
    }

    /// Membership in the integer row span.
    pub fn contains(&self, v: &ExpVec) -> bool {
        self.canonical_residue(v).is_zero()
    }

    /// Coordinates of `v` in the original basis, when `v` is a member.
    pub fn coords(&self, v: &ExpVec) -> Option<Vec<i64>> {
        solve_row_system(&self.basis, v.as_slice())
    }

    /// The canonical representative of `v + L` with 0 <= r_i < hnf[i][i].
    pub fn canonical_residue(&self, v: &ExpVec) -> ExpVec {
        assert_eq!(v.dim(), self.dim(), "rank mismatch");
        let mut r: Vec<i64> = v.as_slice().to_vec();
        for i in 0..self.dim() {
            let q = r[i].div_euclid(self.hnf[i][i]);
            for j in 0..self.dim() {
                r[j] -= q * self.hnf[i][j];
            }
        }
        ExpVec::new(r)
    }

    /// All [Z^d : L] canonical residues, graded-lexicographically ordered;
    /// the zero vector comes first.
    pub fn transversal(&self) -> Vec<ExpVec> {
        let d = self.dim();
        let mut out = Vec::with_capacity(self.index() as usize);
        let mut cur = vec![0i64; d];
        loop {
            out.push(ExpVec::new(cur.clone()));
            let mut i = 0;
            loop {
                if i == d {
                    let mut keyed: Vec<(i64, ExpVec)> = out
                        .into_iter()
                        .map(|e| (e.as_slice().iter().sum::<i64>(), e))
                        .collect();
                    keyed.sort();
                    return keyed.into_iter().map(|(_, e)| e).collect();
                }
                cur[i] += 1;
                if cur[i] < self.hnf[i][i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    /// The image lattice under the column action v -> v * M.
    pub fn transform(&self, m: &[Vec<i64>]) -> Result<Lattice> {
        let new_basis: Vec<Vec<i64>> = self
            .basis
            .iter()
            .map(|row| mat_vec_mul(row, m))
            .collect();
        Lattice::new(new_basis)
    }
}

/// Row vector times matrix: (v * M)_j = sum_i v_i M[i][j].
pub(crate) fn mat_vec_mul(v: &[i64], m: &[Vec<i64>]) -> Vec<i64> {
    let d = v.len();
    let mut out = vec![0i64; m[0].len()];
    for (i, &vi) in v.iter().enumerate().take(d) {
        for (j, o) in out.iter_mut().enumerate() {
            *o = o
                .checked_add(vi.checked_mul(m[i][j]).expect("matrix overflow"))
                .expect("matrix overflow");
        }
    }
    out
}

/// Matrix product of two row-major square matrices.
pub(crate) fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter().map(|row| mat_vec_mul(row, b)).collect()
}

/// Determinant by cofactor expansion; fine for the small d used here.
pub(crate) fn det(m: &[Vec<i64>]) -> i128 {
    let m128: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    det128(&m128)
}

fn det128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut acc: i128 = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc += sign * m[0][j] * det128(&minor);
    }
    acc
}

/// Solves c * B = v over the integers via Cramer's rule; None when no
/// integral solution exists.
pub(crate) fn solve_row_system(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let d = basis.len();
    let dt = det(basis);
    if dt == 0 {
        return None;
    }
    let mut coords = Vec::with_capacity(d);
    for i in 0..d {
        let mut m = basis.to_vec();
        m[i] = v.to_vec();
        let di = det(&m);
        if di % dt != 0 {
            return None;
        }
        let c = di / dt;
        if c > i64::MAX as i128 || c < i64::MIN as i128 {
            return None;
        }
        coords.push(c as i64);
    }
    Some(coords)
}

/// Upper-triangular row Hermite normal form with positive diagonal and
/// above-diagonal entries reduced into [0, pivot).
fn hermite_normal_form(basis: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let d = basis.len();
    let mut m: Vec<Vec<i128>> = basis
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    for col in 0..d {
        // Euclidean elimination below the pivot.
        loop {
            let mut pivot: Option<usize> = None;
            for (r, row) in m.iter().enumerate().take(d).skip(col) {
                if row[col] != 0 {
                    pivot = match pivot {
                        None => Some(r),
                        Some(q) if row[col].abs() < m[q][col].abs() => Some(r),
                        Some(q) => Some(q),
                    };
                }
            }
            let p = pivot.ok_or(Error::SingularLattice)?;
            m.swap(col, p);
            let mut done = true;
            for r in col + 1..d {
                if m[r][col] != 0 {
                    let q = m[r][col].div_euclid(m[col][col]);
                    for j in 0..d {
                        m[r][j] -= q * m[col][j];
                    }
                    if m[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[col][col] < 0 {
            for j in 0..d {
                m[col][j] = -m[col][j];
            }
        }
        // Reduce the entries above the pivot.
        for r in 0..col {
            let q = m[r][col].div_euclid(m[col][col]);
            for j in 0..d {
                m[r][j] -= q * m[col][j];
            }
        }
    }
    let mut out = vec![vec![0i64; d]; d];
    for i in 0..d {
        for j in 0..d {
            if m[i][j] > i64::MAX as i128 || m[i][j] < i64::MIN as i128 {
                return Err(Error::InvalidParameter("lattice entries overflow".into()));
            }
            out[i][j] = m[i][j] as i64;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn membership_examples() {
        let y = Lattice::new(vec![vec![2, 0], vec![0, 1]]).unwrap();
        assert!(y.contains(&ExpVec::new(vec![0, 0])));
        assert!(!y.contains(&ExpVec::new(vec![1, 0])));
        assert!(y.contains(&ExpVec::new(vec![2, 5])));
        assert_eq!(y.coords(&ExpVec::new(vec![2, 5])), Some(vec![1, 5]));
        assert_eq!(y.coords(&ExpVec::new(vec![1, 0])), None);
    }

    #[test]
    fn transversal_examples() {
        assert_eq!(Lattice::full(2).transversal(), vec![ExpVec::zero(2)]);
        let y1 = Lattice::new(vec![vec![3]]).unwrap();
        assert_eq!(
            y1.transversal(),
            vec![
                ExpVec::new(vec![0]),
                ExpVec::new(vec![1]),
                ExpVec::new(vec![2])
            ]
        );
        let y2 = Lattice::new(vec![vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            y2.transversal(),
            vec![ExpVec::new(vec![0, 0]), ExpVec::new(vec![1, 0])]
        );
    }

    #[test]
    fn singular_rejected() {
        assert!(matches!(
            Lattice::new(vec![vec![1, 2], vec![2, 4]]),
            Err(Error::SingularLattice)
        ));
    }

    #[test]
    fn hnf_is_canonical_under_row_swaps() {
        let a = Lattice::new(vec![vec![2, 0], vec![0, 1]]).unwrap();
        let b = Lattice::new(vec![vec![0, 1], vec![2, 0]]).unwrap();
        assert_eq!(a.hnf, b.hnf);
        // (2,1) and (0,1) span the same lattice as (2,0) and (0,1).
        let c = Lattice::new(vec![vec![2, 1], vec![0, 1]]).unwrap();
        assert_eq!(a.hnf, c.hnf);
        let d = Lattice::new(vec![vec![1, 0], vec![0, 2]]).unwrap();
        assert_ne!(a.hnf, d.hnf);
    }

    proptest! {
        #[test]
        fn transversal_size_is_det(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 2)) {
            prop_assume!(det(&rows) != 0);
            let lat = Lattice::new(rows.clone()).unwrap();
            let t = lat.transversal();
            prop_assert_eq!(t.len() as u64, lat.index());
            prop_assert_eq!(t.len() as i128, det(&rows).abs());
            prop_assert!(t[0].is_zero());
            // All residues canonical and pairwise distinct cosets.
            for r in &t {
                prop_assert_eq!(&lat.canonical_residue(r), r);
            }
        }

        #[test]
        fn residue_is_coset_invariant(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 2), v in proptest::collection::vec(-6i64..=6, 2), c in proptest::collection::vec(-2i64..=2, 2)) {
            prop_assume!(det(&rows) != 0);
            let lat = Lattice::new(rows.clone()).unwrap();
            let v = ExpVec::new(v);
            // v and v + c*B have the same residue.
            let shift = ExpVec::new(mat_vec_mul(&c, &rows));
            prop_assert_eq!(lat.canonical_residue(&v), lat.canonical_residue(&v.add(&shift)));
        }
    }
}
