//! Exact integer vectors and matrices: the unimodular basis extension used
//! by the abelian basis algorithm, plus a fraction-free determinant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type IntVec = Vec<BigInt>;
pub type IntMat = Vec<IntVec>;

pub fn int_vec(values: &[i64]) -> IntVec {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

pub fn inf_norm(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
}

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &IntMat) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Extends a primitive row vector to a unimodular matrix.
///
/// Returns the full n×n matrix whose first row is `a` and whose remaining
/// rows complete it to a basis of ℤⁿ (determinant ±1). This is the Hermite
/// normal form construction: column operations reduce `a` to (1, 0, …, 0)
/// while the inverse operations accumulate on the identity.
pub fn hnf_complement(a: &[BigInt]) -> Result<IntMat> {
    let n = a.len();
    if n == 0 || gcd_of(a) != BigInt::one() {
        return Err(Error::NotPrimitive);
    }
    let mut work: IntVec = a.to_vec();
    // w = U⁻¹ for the accumulated column operations U with work = a·U.
    let mut w: IntMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for j in 1..n {
        if work[j].is_zero() {
            continue;
        }
        let g = extended_gcd(&work[0], &work[j]);
        // Columns (0, j) of U change by [[s, −wj/g], [t, w0/g]]; the inverse
        // row operation on w is row0 ← (w0/g)·row0 + (wj/g)·rowj,
        // rowj ← −t·row0 + s·rowj, evaluated on the old rows.
        let w0_g = &work[0] / &g.gcd;
        let wj_g = &work[j] / &g.gcd;
        let (row0, rowj): (IntVec, IntVec) = w[0]
            .iter()
            .zip(&w[j])
            .map(|(r0, rj)| (&w0_g * r0 + &wj_g * rj, -&g.t * r0 + &g.s * rj))
            .unzip();
        w[0] = row0;
        w[j] = rowj;
        work[0] = g.gcd;
        work[j] = BigInt::zero();
    }
    debug_assert!(work[0].is_one() || work[0] == -BigInt::one());
    if !work[0].is_one() {
        // gcd came out as −1; flip the first row pair of operations.
        w[0] = w[0].iter().map(|v| -v).collect();
        if n > 1 {
            w[1] = w[1].iter().map(|v| -v).collect();
        }
    }
    debug_assert_eq!(&w[0], a);
    debug_assert!(determinant(&w).abs().is_one());
    Ok(w)
}

struct Gcd {
    gcd: BigInt,
    s: BigInt,
    t: BigInt,
}

/// s·a + t·b = gcd ≥ 0.
fn extended_gcd(a: &BigInt, b: &BigInt) -> Gcd {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let nr = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        Gcd {
            gcd: -old_r,
            s: -old_s,
            t: -old_t,
        }
    } else {
        Gcd {
            gcd: old_r,
            s: old_s,
            t: old_t,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        let m = hnf_complement(&int_vec(&[1, -4])).unwrap();
        assert_eq!(m[0], int_vec(&[1, -4]));
        assert!(determinant(&m).abs().is_one());

        let m = hnf_complement(&int_vec(&[0, 1])).unwrap();
        assert_eq!(m[0], int_vec(&[0, 1]));
        assert!(determinant(&m).abs().is_one());

        let m = hnf_complement(&int_vec(&[1])).unwrap();
        assert_eq!(m, vec![int_vec(&[1])]);
    }

    #[test]
    fn complement_larger_vectors() {
        for a in [
            vec![6i64, 10, 15],
            vec![-3, 2],
            vec![2, 3, 5, 7],
            vec![0, 0, 1],
            vec![-1],
            vec![35, -21, 15],
        ] {
            let v = int_vec(&a);
            let m = hnf_complement(&v).unwrap();
            assert_eq!(m[0], v);
            assert!(determinant(&m).abs().is_one(), "{a:?}");
        }
    }

    #[test]
    fn non_primitive_rejected() {
        assert!(matches!(
            hnf_complement(&int_vec(&[2, 4])),
            Err(Error::NotPrimitive)
        ));
        assert!(matches!(
            hnf_complement(&int_vec(&[0, 0])),
            Err(Error::NotPrimitive)
        ));
        assert!(matches!(hnf_complement(&[]), Err(Error::NotPrimitive)));
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(
            determinant(&vec![int_vec(&[1, 2]), int_vec(&[3, 4])]),
            BigInt::from(-2)
        );
        assert_eq!(
            determinant(&vec![
                int_vec(&[2, 0, 0]),
                int_vec(&[0, 3, 0]),
                int_vec(&[0, 0, 4])
            ]),
            BigInt::from(24)
        );
        assert_eq!(
            determinant(&vec![int_vec(&[0, 1]), int_vec(&[1, 0])]),
            BigInt::from(-1)
        );
        assert_eq!(
            determinant(&vec![int_vec(&[1, 1]), int_vec(&[1, 1])]),
            BigInt::zero()
        );
    }
}
