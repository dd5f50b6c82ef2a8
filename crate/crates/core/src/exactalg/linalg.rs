//! Dense exact linear algebra over `Q(t1, t2)`; matrices here are tiny.

use super::scalar::EqScalar;

/// Inverse by Gauss–Jordan elimination; `None` if singular.
pub fn invert(m: &[Vec<EqScalar>]) -> Option<Vec<Vec<EqScalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<EqScalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { EqScalar::one() } else { EqScalar::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].inv().ok()?;
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..2 * n {
                let delta = &f * &a[col][c];
                a[r][c] -= &delta;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<EqScalar>], v: &[EqScalar]) -> Vec<EqScalar> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverts_two_by_two() {
        let m = vec![
            vec![EqScalar::from_int(-2), EqScalar::one()],
            vec![EqScalar::one(), EqScalar::from_int(-2)],
        ];
        let inv = invert(&m).unwrap();
        assert_eq!(inv[0][0], EqScalar::frac(-2, 3));
        assert_eq!(inv[0][1], EqScalar::frac(-1, 3));
        let e = mat_vec(&m, &[inv[0][0].clone(), inv[1][0].clone()]);
        assert_eq!(e, vec![EqScalar::one(), EqScalar::zero()]);
    }

    #[test]
    fn singular_is_none() {
        let m = vec![
            vec![EqScalar::t1(), EqScalar::t2()],
            vec![&EqScalar::t1() * &EqScalar::t1(), &EqScalar::t1() * &EqScalar::t2()],
        ];
        assert!(invert(&m).is_none());
    }
}
