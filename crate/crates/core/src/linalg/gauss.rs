use crate::Scalar;

/// Solves the square system `a · x = b` by Gaussian elimination with
/// partial pivoting. Returns `None` when `a` is singular.
///
/// Exact scalars take the first nonzero pivot; approximate ones take the
/// largest in magnitude and treat entries below `1e-12` as zero. Zero
/// multipliers are skipped so sparse rows stay cheap.
pub fn solve_linear<S: Scalar>(mut a: Vec<Vec<S>>, mut b: Vec<S>) -> Option<Vec<S>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|r| r.len() == n), "system must be square");
    let negligible = |v: &S| {
        if S::EXACT {
            v.is_zero()
        } else {
            v.abs().to_f64().is_none_or(|f| f < 1e-12)
        }
    };
    for col in 0..n {
        let pivot = if S::EXACT {
            (col..n).find(|&r| !a[r][col].is_zero())?
        } else {
            let best = (col..n).max_by(|&r1, &r2| {
                a[r1][col].abs().partial_cmp(&a[r2][col].abs()).unwrap_or(std::cmp::Ordering::Equal)
            })?;
            if negligible(&a[best][col]) {
                return None;
            }
            best
        };
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = S::one() / a[col][col].clone();
        let (upper, lower) = a.split_at_mut(col + 1);
        let prow = &upper[col];
        for (off, row) in lower.iter_mut().enumerate() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() * inv.clone();
            for k in col..n {
                if !prow[k].is_zero() {
                    row[k] = row[k].clone() - factor.clone() * prow[k].clone();
                }
            }
            let r = col + 1 + off;
            b[r] = b[r].clone() - factor * b[col].clone();
        }
    }
    let mut x = vec![S::zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for k in i + 1..n {
            if !a[i][k].is_zero() {
                acc = acc - a[i][k].clone() * x[k].clone();
            }
        }
        x[i] = acc / a[i][i].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ratio, Rational};

    #[test]
    fn solves_small_rational_system() {
        // 2x + y = 3, x + 3y = 5  →  x = 4/5, y = 7/5
        let a = vec![vec![ratio(2, 1), ratio(1, 1)], vec![ratio(1, 1), ratio(3, 1)]];
        let x = solve_linear(a, vec![ratio(3, 1), ratio(5, 1)]).unwrap();
        assert_eq!(x, vec![ratio(4, 5), ratio(7, 5)]);
    }

    #[test]
    fn needs_row_swap() {
        let a = vec![vec![ratio(0, 1), ratio(1, 1)], vec![ratio(1, 1), ratio(0, 1)]];
        let x = solve_linear(a, vec![ratio(2, 1), ratio(3, 1)]).unwrap();
        assert_eq!(x, vec![ratio(3, 1), ratio(2, 1)]);
    }

    #[test]
    fn singular_is_none() {
        let a: Vec<Vec<Rational>> = vec![vec![ratio(1, 1), ratio(2, 1)], vec![ratio(2, 1), ratio(4, 1)]];
        assert!(solve_linear(a, vec![ratio(1, 1), ratio(2, 1)]).is_none());
        let f = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        assert!(solve_linear(f, vec![1.0, 2.0]).is_none());
    }

    #[test]
    fn float_agrees_with_exact() {
        let a: Vec<Vec<f64>> = vec![vec![4.0, -2.0, 1.0], vec![-2.0, 4.0, -2.0], vec![1.0, -2.0, 4.0]];
        let x = solve_linear(a, vec![11.0, -16.0, 17.0]).unwrap();
        for (got, want) in x.iter().zip([1.0, -2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }
}
