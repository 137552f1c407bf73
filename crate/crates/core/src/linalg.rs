//! Small dense linear-algebra helpers shared by the representation and
//! solver machinery.
//!
//! Rank decisions use singular values with a relative cutoff against the
//! largest singular value, so they are invariant under rescaling the input.

use nalgebra::{DMatrix, DVector};

/// Largest absolute entry, 0 for an empty matrix.
pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0_f64, |acc, &x| acc.max(x.abs()))
}

/// Numerical rank with a relative singular-value cutoff.
pub fn rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let smax = sv.iter().fold(0.0_f64, |a, &s| a.max(s));
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * smax).count()
}

/// Orthonormal basis of the right nullspace of `m`, columns in a
/// deterministic order.
///
/// The matrix is padded to a square so the factorization exposes the full
/// set of right singular vectors; rows of `V^T` whose singular value falls
/// at or below `rel_tol * sigma_max` span the nullspace.
pub fn nullspace(m: &DMatrix<f64>, rel_tol: f64) -> DMatrix<f64> {
    let (rows, cols) = m.shape();
    if cols == 0 {
        return DMatrix::zeros(0, 0);
    }
    let n = rows.max(cols);
    let mut padded = DMatrix::zeros(n, cols);
    padded.view_mut((0, 0), (rows, cols)).copy_from(m);
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("requested v_t");
    let sv = svd.singular_values;
    let smax = sv.iter().fold(0.0_f64, |a, &s| a.max(s));
    let mut keep = Vec::new();
    for i in 0..vt.nrows() {
        let s = if i < sv.len() { sv[i] } else { 0.0 };
        if smax == 0.0 || s <= rel_tol * smax {
            keep.push(i);
        }
    }
    let mut basis = DMatrix::zeros(cols, keep.len());
    for (k, &i) in keep.iter().enumerate() {
        basis.set_column(k, &vt.row(i).transpose());
    }
    basis
}

/// Orthonormal basis of the column space of `m`.
pub fn column_space(m: &DMatrix<f64>, rel_tol: f64) -> DMatrix<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return DMatrix::zeros(m.nrows(), 0);
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("requested u");
    let sv = svd.singular_values;
    let smax = sv.iter().fold(0.0_f64, |a, &s| a.max(s));
    let mut keep = Vec::new();
    for i in 0..sv.len() {
        if smax > 0.0 && sv[i] > rel_tol * smax {
            keep.push(i);
        }
    }
    let mut basis = DMatrix::zeros(m.nrows(), keep.len());
    for (k, &i) in keep.iter().enumerate() {
        basis.set_column(k, &u.column(i).into_owned());
    }
    basis
}

/// `max |B^T B - I|`: how far the columns of `b` are from orthonormal.
pub fn orthonormal_defect(b: &DMatrix<f64>) -> f64 {
    if b.ncols() == 0 {
        return 0.0;
    }
    let g = b.transpose() * b;
    max_abs(&(g - DMatrix::identity(b.ncols(), b.ncols())))
}

/// Largest principal-angle cosine between the column spans of two
/// orthonormal bases (the largest singular value of `A^T B`).
pub fn max_principal_cosine(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    if a.ncols() == 0 || b.ncols() == 0 {
        return 0.0;
    }
    let cross = a.transpose() * b;
    let sv = cross.svd(false, false).singular_values;
    sv.iter().fold(0.0_f64, |acc, &s| acc.max(s))
}

/// Orthonormal basis of the sum-zero hyperplane in `R^n` (Helmert columns),
/// deterministic and exact up to rounding.
pub fn sum_zero_basis(n: usize) -> DMatrix<f64> {
    assert!(n >= 1);
    let mut basis = DMatrix::zeros(n, n - 1);
    for k in 1..n {
        let norm = (k as f64 * (k as f64 + 1.0)).sqrt();
        for i in 0..k {
            basis[(i, k - 1)] = 1.0 / norm;
        }
        basis[(k, k - 1)] = -(k as f64) / norm;
    }
    basis
}

/// Dimension of the affine hull of a point set (rank of the centered
/// coordinate matrix at the given relative tolerance).
pub fn affine_rank(points: &[DVector<f64>], rel_tol: f64) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let d = points[0].len();
    let n = points.len();
    let mut centroid = DVector::zeros(d);
    for p in points {
        centroid += p;
    }
    centroid /= n as f64;
    let mut centered = DMatrix::zeros(d, n);
    for (j, p) in points.iter().enumerate() {
        centered.set_column(j, &(p - &centroid));
    }
    rank(&centered, rel_tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_sum_constraint() {
        // [1 1 1] has a 2-dimensional nullspace.
        let m = DMatrix::from_row_slice(1, 3, &[1.0, 1.0, 1.0]);
        let ns = nullspace(&m, 1e-10);
        assert_eq!(ns.ncols(), 2);
        assert!(orthonormal_defect(&ns) < 1e-12);
        let residual = m * &ns;
        assert!(max_abs(&residual) < 1e-12);
    }

    #[test]
    fn column_space_of_rank_one() {
        let m = DMatrix::from_row_slice(3, 2, &[1.0, 2.0, 2.0, 4.0, 3.0, 6.0]);
        let cs = column_space(&m, 1e-10);
        assert_eq!(cs.ncols(), 1);
    }

    #[test]
    fn helmert_columns_sum_to_zero() {
        for n in 2..8 {
            let b = sum_zero_basis(n);
            assert_eq!(b.shape(), (n, n - 1));
            assert!(orthonormal_defect(&b) < 1e-12);
            for k in 0..n - 1 {
                let s: f64 = b.column(k).iter().sum();
                assert!(s.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn affine_rank_of_coplanar_points() {
        let pts = vec![
            DVector::from_vec(vec![0.0, 0.0, 1.0]),
            DVector::from_vec(vec![1.0, 0.0, 1.0]),
            DVector::from_vec(vec![0.0, 1.0, 1.0]),
            DVector::from_vec(vec![1.0, 1.0, 1.0]),
        ];
        assert_eq!(affine_rank(&pts, 1e-8), 2);
    }
}
