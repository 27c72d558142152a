//! Exact inertia of symmetric integer matrices by rational congruence
//! diagonalization (Sylvester's law of inertia). No floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::AlgebraError;

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InertiaTriple {
    pub b_plus: usize,
    pub b_minus: usize,
    pub b_zero: usize,
}

impl InertiaTriple {
    pub fn dimension(&self) -> usize {
        self.b_plus + self.b_minus + self.b_zero
    }
}

/// Compute the inertia of a symmetric integer matrix by symmetric Gaussian
/// elimination over Q. Pivots take the largest-absolute-value diagonal
/// entry; when the active diagonal is all zero but some off-diagonal a_ij
/// is not, row/column j is first added into i.
pub fn inertia(matrix: &[Vec<i64>]) -> Result<InertiaTriple, AlgebraError> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(AlgebraError::NotSquare);
        }
    }
    for i in 0..n {
        for j in 0..n {
            if matrix[i][j] != matrix[j][i] {
                return Err(AlgebraError::NotSymmetric);
            }
        }
    }
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();

    let mut triple = InertiaTriple { b_plus: 0, b_minus: 0, b_zero: 0 };
    let mut k = 0;
    while k < n {
        // best diagonal pivot in the active block
        let pivot = (k..n)
            .filter(|&i| !a[i][i].is_zero())
            .max_by(|&i, &j| a[i][i].abs().cmp(&a[j][j].abs()));
        let pivot = match pivot {
            Some(p) => p,
            None => {
                // all active diagonal entries are zero; look for a_ij != 0
                let mut found = None;
                'scan: for i in k..n {
                    for j in (i + 1)..n {
                        if !a[i][j].is_zero() {
                            found = Some((i, j));
                            break 'scan;
                        }
                    }
                }
                match found {
                    None => {
                        // active block is identically zero
                        triple.b_zero += n - k;
                        break;
                    }
                    Some((i, j)) => {
                        // add row/col j into i; diagonal becomes 2 a_ij != 0
                        for col in 0..n {
                            let v = a[j][col].clone();
                            a[i][col] = &a[i][col] + v;
                        }
                        for row in 0..n {
                            let v = a[row][j].clone();
                            a[row][i] = &a[row][i] + v;
                        }
                        i
                    }
                }
            }
        };
        a.swap(k, pivot);
        for row in a.iter_mut() {
            row.swap(k, pivot);
        }
        let d = a[k][k].clone();
        if d.is_positive() {
            triple.b_plus += 1;
        } else {
            triple.b_minus += 1;
        }
        for i in (k + 1)..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &d;
            for col in 0..n {
                let sub = &f * &a[k][col];
                a[i][col] = &a[i][col] - sub;
            }
            for row in 0..n {
                let sub = &f * &a[row][k];
                a[row][i] = &a[row][i] - sub;
            }
        }
        k += 1;
    }
    Ok(triple)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            inertia(&[vec![-1]]).unwrap(),
            InertiaTriple { b_plus: 0, b_minus: 1, b_zero: 0 }
        );
        assert_eq!(
            inertia(&[vec![0, 1], vec![1, 0]]).unwrap(),
            InertiaTriple { b_plus: 1, b_minus: 1, b_zero: 0 }
        );
        assert_eq!(
            inertia(&[vec![0]]).unwrap(),
            InertiaTriple { b_plus: 0, b_minus: 0, b_zero: 1 }
        );
    }

    #[test]
    fn rejects_non_symmetric() {
        assert!(inertia(&[vec![0, 1], vec![2, 0]]).is_err());
        assert!(inertia(&[vec![0, 1]]).is_err());
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(
            inertia(&[]).unwrap(),
            InertiaTriple { b_plus: 0, b_minus: 0, b_zero: 0 }
        );
    }
}
