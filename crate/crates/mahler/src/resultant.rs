//! Resultants of polynomials in an outer variable y whose coefficients are
//! integer polynomials in x, computed by fraction-free (Bareiss) elimination
//! on the Sylvester matrix. Every division is exact, so no precision is lost.

use crate::poly::IntPolynomial;

/// Resultant with respect to y of `f(y)` and `g(y)`, where each coefficient
/// slice is ascending in y and the entries live in Z[x]. The highest entry of
/// each slice must be nonzero.
pub fn sylvester_resultant(f: &[IntPolynomial], g: &[IntPolynomial]) -> IntPolynomial {
    assert!(!f.is_empty() && !g.is_empty(), "empty polynomial");
    assert!(
        !f.last().unwrap().is_zero() && !g.last().unwrap().is_zero(),
        "leading y-coefficient must be nonzero"
    );
    let m = f.len() - 1;
    let n = g.len() - 1;
    if m == 0 && n == 0 {
        return IntPolynomial::one();
    }
    if m == 0 {
        return pow(&f[0], n);
    }
    if n == 0 {
        return pow(&g[0], m);
    }

    // Sylvester matrix: n rows of f's coefficients (descending in y), then
    // m rows of g's, each shifted one column right per row.
    let size = m + n;
    let mut mat = vec![vec![IntPolynomial::zero(); size]; size];
    for row in 0..n {
        for j in 0..=m {
            mat[row][row + j] = f[m - j].clone();
        }
    }
    for row in 0..m {
        for j in 0..=n {
            mat[n + row][row + j] = g[n - j].clone();
        }
    }
    bareiss_determinant(mat)
}

fn pow(base: &IntPolynomial, e: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for _ in 0..e {
        acc = acc.multiply(base);
    }
    acc
}

/// Fraction-free determinant: at step k every new entry is divided by the
/// previous pivot, which divides exactly in any integral domain.
fn bareiss_determinant(mut m: Vec<Vec<IntPolynomial>>) -> IntPolynomial {
    let n = m.len();
    let mut sign_flip = false;
    let mut prev_pivot = IntPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let pivot_row = match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => i,
                None => return IntPolynomial::zero(),
            };
            m.swap(k, pivot_row);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].multiply(&m[k][k]).sub(&m[i][k].multiply(&m[k][j]));
                m[i][j] = num
                    .divide_exact(&prev_pivot)
                    .expect("Bareiss division is exact");
            }
            m[i][k] = IntPolynomial::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> IntPolynomial {
        IntPolynomial::from_i64(&[v])
    }

    #[test]
    fn scalar_resultants() {
        // res(y - 2, y - 3) = +/-1 in magnitude; both linear polys coprime
        let r = sylvester_resultant(&[c(-2), c(1)], &[c(-3), c(1)]);
        assert_eq!(r, c(-1));
        // shared root: res((y-1)(y-2), y-1) = 0
        let f = [c(2), c(-3), c(1)];
        let g = [c(-1), c(1)];
        assert!(sylvester_resultant(&f, &g).is_zero());
        // classic integer check: res(y^2 - 2, y^2 - 3) = 1
        let r = sylvester_resultant(&[c(-2), c(0), c(1)], &[c(-3), c(0), c(1)]);
        assert_eq!(r, c(1));
    }

    #[test]
    fn constant_cases() {
        assert_eq!(sylvester_resultant(&[c(5)], &[c(-7), c(0), c(1)]), c(25));
        assert_eq!(sylvester_resultant(&[c(-7), c(0), c(1)], &[c(5)]), c(25));
    }

    #[test]
    fn polynomial_entries() {
        // res_y(y - x, y - (x+1)) = x - (x+1) = -1 up to sign
        let x = IntPolynomial::from_i64(&[0, 1]);
        let xp1 = IntPolynomial::from_i64(&[1, 1]);
        let r = sylvester_resultant(&[x.neg(), c(1)], &[xp1.neg(), c(1)]);
        assert_eq!(r.normalize_leading_sign(), c(1));
        // res_y(y^2 - x, y - x) = x^2 - x
        let r = sylvester_resultant(&[x.neg(), c(0), c(1)], &[x.neg(), c(1)]);
        assert_eq!(
            r.normalize_leading_sign(),
            IntPolynomial::from_i64(&[0, -1, 1])
        );
    }
}
