//! Small dense linear algebra.

use alloc::vec::Vec;

/// Determinant of a square row-major matrix by LU factorization with partial
/// pivoting. `dim == 0` yields 1.
pub fn determinant(mut a: Vec<f64>, dim: usize) -> f64 {
    assert_eq!(
        a.len(),
        dim * dim,
        "matrix storage does not match dimension"
    );
    let mut det = 1.0;
    for col in 0..dim {
        let mut pivot = col;
        let mut best = libm::fabs(a[col * dim + col]);
        for row in col + 1..dim {
            let v = libm::fabs(a[row * dim + col]);
            if v > best {
                best = v;
                pivot = row;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for k in 0..dim {
                a.swap(col * dim + k, pivot * dim + k);
            }
            det = -det;
        }
        let diag = a[col * dim + col];
        det *= diag;
        for row in col + 1..dim {
            let factor = a[row * dim + col] / diag;
            if factor == 0.0 {
                continue;
            }
            for k in col + 1..dim {
                a[row * dim + k] -= factor * a[col * dim + k];
            }
        }
    }
    det
}

/// Row-major Toeplitz matrix with `entry(i, j) = value(i - j)`.
pub fn toeplitz<F: FnMut(i64) -> f64>(dim: usize, mut value: F) -> Vec<f64> {
    let mut m = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            m.push(value(i as i64 - j as i64));
        }
    }
    m
}
