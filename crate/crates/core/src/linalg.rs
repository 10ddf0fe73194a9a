//! Thin LAPACK bindings (divide-and-conquer eigensolvers) plus the few
//! dense kernels used throughout the crate.
//!
//! Matrices are `ndarray::Array2` in row-major order. LAPACK is
//! column-major, so a row-major Hermitian buffer is seen by LAPACK as the
//! conjugate of the original matrix; eigenvalues are unaffected and
//! eigenvectors come back conjugated, which `eigh` undoes before
//! returning. Eigenvectors are returned as *rows* of the output matrix.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

extern "C" {
    fn zheevd_(
        jobz: *const u8,
        uplo: *const u8,
        n: *const i32,
        a: *mut C64,
        lda: *const i32,
        w: *mut f64,
        work: *mut C64,
        lwork: *const i32,
        rwork: *mut f64,
        lrwork: *const i32,
        iwork: *mut i32,
        liwork: *const i32,
        info: *mut i32,
    );

    fn dsyevd_(
        jobz: *const u8,
        uplo: *const u8,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        w: *mut f64,
        work: *mut f64,
        lwork: *const i32,
        iwork: *mut i32,
        liwork: *const i32,
        info: *mut i32,
    );
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns `(values, vectors)` with eigenvalues ascending and the i-th
/// *row* of `vectors` holding the i-th eigenvector.
pub fn eigh(h: &Array2<C64>) -> Result<(Array1<f64>, Array2<C64>)> {
    let n = h.nrows();
    if n != h.ncols() {
        return Err(Error::validation("eigh: matrix not square"));
    }
    if n == 0 {
        return Err(Error::validation("eigh: empty matrix"));
    }
    let mut a: Vec<C64> = h.iter().copied().collect();
    let mut w = vec![0.0f64; n];
    let ni = n as i32;
    let (jobz, uplo) = (b'V', b'L');
    let mut info: i32 = 0;

    // workspace query
    let mut work_q = [C64::new(0.0, 0.0)];
    let mut rwork_q = [0.0f64];
    let mut iwork_q = [0i32];
    let neg1: i32 = -1;
    unsafe {
        zheevd_(
            &jobz, &uplo, &ni, a.as_mut_ptr(), &ni, w.as_mut_ptr(),
            work_q.as_mut_ptr(), &neg1, rwork_q.as_mut_ptr(), &neg1,
            iwork_q.as_mut_ptr(), &neg1, &mut info,
        );
    }
    if info != 0 {
        return Err(Error::numerical(format!("zheevd workspace query failed: info={info}")));
    }
    let lwork = work_q[0].re as i32;
    let lrwork = rwork_q[0] as i32;
    let liwork = iwork_q[0];
    let mut work = vec![C64::new(0.0, 0.0); lwork.max(1) as usize];
    let mut rwork = vec![0.0f64; lrwork.max(1) as usize];
    let mut iwork = vec![0i32; liwork.max(1) as usize];
    unsafe {
        zheevd_(
            &jobz, &uplo, &ni, a.as_mut_ptr(), &ni, w.as_mut_ptr(),
            work.as_mut_ptr(), &lwork, rwork.as_mut_ptr(), &lrwork,
            iwork.as_mut_ptr(), &liwork, &mut info,
        );
    }
    if info != 0 {
        return Err(Error::numerical(format!("zheevd failed: info={info}")));
    }
    // LAPACK diagonalized conj(H); undo the conjugation so row i is an
    // eigenvector of H itself.
    let vecs = Array2::from_shape_fn((n, n), |(i, j)| a[j * n + i].conj());
    Ok((Array1::from(w), vecs))
}

/// Eigendecomposition of a real symmetric matrix; same conventions as `eigh`.
pub fn eigh_real(h: &Array2<f64>) -> Result<(Array1<f64>, Array2<f64>)> {
    let n = h.nrows();
    if n != h.ncols() || n == 0 {
        return Err(Error::validation("eigh_real: matrix not square or empty"));
    }
    let mut a: Vec<f64> = h.iter().copied().collect();
    let mut w = vec![0.0f64; n];
    let ni = n as i32;
    let (jobz, uplo) = (b'V', b'L');
    let mut info: i32 = 0;
    let mut work_q = [0.0f64];
    let mut iwork_q = [0i32];
    let neg1: i32 = -1;
    unsafe {
        dsyevd_(
            &jobz, &uplo, &ni, a.as_mut_ptr(), &ni, w.as_mut_ptr(),
            work_q.as_mut_ptr(), &neg1, iwork_q.as_mut_ptr(), &neg1, &mut info,
        );
    }
    if info != 0 {
        return Err(Error::numerical(format!("dsyevd workspace query failed: info={info}")));
    }
    let lwork = work_q[0] as i32;
    let liwork = iwork_q[0];
    let mut work = vec![0.0f64; lwork.max(1) as usize];
    let mut iwork = vec![0i32; liwork.max(1) as usize];
    unsafe {
        dsyevd_(
            &jobz, &uplo, &ni, a.as_mut_ptr(), &ni, w.as_mut_ptr(),
            work.as_mut_ptr(), &lwork, iwork.as_mut_ptr(), &liwork, &mut info,
        );
    }
    if info != 0 {
        return Err(Error::numerical(format!("dsyevd failed: info={info}")));
    }
    // Real symmetric: row-major buffer is the transpose, so rows of the
    // row-major view are LAPACK's columns, i.e. the eigenvectors.
    let vecs = Array2::from_shape_fn((n, n), |(i, j)| a[i * n + j]);
    Ok((Array1::from(w), vecs))
}

/// y = A x for a dense complex matrix.
pub fn matvec(a: &Array2<C64>, x: &[C64]) -> Vec<C64> {
    let n = a.nrows();
    let m = a.ncols();
    debug_assert_eq!(m, x.len());
    let mut y = vec![C64::new(0.0, 0.0); n];
    let buf = a.as_slice().expect("matvec: non-contiguous matrix");
    for i in 0..n {
        let row = &buf[i * m..(i + 1) * m];
        let mut acc = C64::new(0.0, 0.0);
        for (aij, xj) in row.iter().zip(x.iter()) {
            acc += aij * xj;
        }
        y[i] = acc;
    }
    y
}

/// Largest singular value, estimated by power iteration on A†A.
pub fn spectral_norm(a: &Array2<C64>, iters: usize) -> f64 {
    let n = a.ncols();
    if n == 0 || a.nrows() == 0 {
        return 0.0;
    }
    let mut x: Vec<C64> = (0..n)
        .map(|i| C64::new(1.0 + (i as f64 * 0.7).sin(), (i as f64 * 1.3).cos()))
        .collect();
    let ah = a.t().mapv(|v| v.conj());
    let mut sigma2 = 0.0;
    for _ in 0..iters {
        let y = matvec(a, &x);
        let z = matvec(&ah, &y);
        let norm: f64 = z.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        sigma2 = norm;
        for (xi, zi) in x.iter_mut().zip(z.iter()) {
            *xi = zi / norm;
        }
    }
    sigma2.sqrt()
}

/// max_ij |A_ij - conj(A_ji)|
pub fn hermiticity_defect(a: &Array2<C64>) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (a[[i, j]] - a[[j, i]].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn eigh_reconstructs_matrix() {
        let h = array![
            [C64::new(2.0, 0.0), C64::new(0.5, 1.0), C64::new(0.0, -0.3)],
            [C64::new(0.5, -1.0), C64::new(-1.0, 0.0), C64::new(0.2, 0.0)],
            [C64::new(0.0, 0.3), C64::new(0.2, 0.0), C64::new(0.7, 0.0)],
        ];
        let (w, v) = eigh(&h).unwrap();
        // sum_k w_k v_k v_k^dagger == H
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..3 {
                    acc += w[k] * v[[k, i]] * v[[k, j]].conj();
                }
                assert!((acc - h[[i, j]]).norm() < 1e-12, "mismatch at ({i},{j})");
            }
        }
        assert!(w[0] <= w[1] && w[1] <= w[2]);
    }

    #[test]
    fn eigh_real_two_by_two() {
        let h = array![[0.0, 1.0], [1.0, 0.0]];
        let (w, v) = eigh_real(&h).unwrap();
        assert!((w[0] + 1.0).abs() < 1e-14);
        assert!((w[1] - 1.0).abs() < 1e-14);
        for k in 0..2 {
            let hv0 = h[[0, 0]] * v[[k, 0]] + h[[0, 1]] * v[[k, 1]];
            assert!((hv0 - w[k] * v[[k, 0]]).abs() < 1e-14);
        }
    }

    #[test]
    fn spectral_norm_of_diagonal() {
        let a = array![
            [C64::new(3.0, 0.0), C64::new(0.0, 0.0)],
            [C64::new(0.0, 0.0), C64::new(-7.0, 0.0)],
        ];
        let s = spectral_norm(&a, 50);
        assert!((s - 7.0).abs() < 1e-9);
    }
}
