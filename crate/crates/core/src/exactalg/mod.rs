//! Exact arithmetic: rationals, polynomials and rational functions in the
//! torus weights `t1`, `t2`, and truncated formal series.

pub mod linalg;
mod parse;
pub mod poly;
pub mod scalar;
pub mod series;

pub use parse::parse_scalar;
pub use poly::{Monomial, Poly};
pub use scalar::EqScalar;
pub use series::{TruncatedSeries, VarSet};

pub type Rational = num_rational::BigRational;

/// Multiplicity of `t1 + t2` in a polynomial scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TSumSplit {
    /// `p = (t1+t2)^multiplicity * cofactor`, cofactor not divisible by `t1+t2`.
    Finite { multiplicity: u32, cofactor: Poly },
    /// `p = 0`.
    Infinite,
}

/// Splits off the largest power of `t1 + t2` dividing `p`.
///
/// Divisibility is decided by substituting `t2 = -t1`. Returns `None` when
/// `p` has a nontrivial denominator.
pub fn split_off_t_sum(p: &EqScalar) -> Option<TSumSplit> {
    if !p.is_polynomial() {
        return None;
    }
    let mut cur = p.numer().clone();
    if cur.is_zero() {
        return Some(TSumSplit::Infinite);
    }
    let t_sum = Poly::linear(1, 1);
    let mut multiplicity = 0;
    while cur.divisible_by_t_sum() {
        cur = cur.div_exact(&t_sum).expect("antidiagonal test guarantees divisibility");
        multiplicity += 1;
    }
    Some(TSumSplit::Finite {
        multiplicity,
        cofactor: cur,
    })
}

pub fn factorial(n: u32) -> num_bigint::BigInt {
    (1..=n).fold(num_bigint::BigInt::from(1), |acc, k| acc * k)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn multiplicity(p: &EqScalar) -> (u32, Poly) {
        match split_off_t_sum(p).unwrap() {
            TSumSplit::Finite { multiplicity, cofactor } => (multiplicity, cofactor),
            TSumSplit::Infinite => panic!("zero"),
        }
    }

    #[test]
    fn t_sum_examples() {
        assert_eq!(multiplicity(&EqScalar::linear(4, 4)), (1, Poly::from_int(4)));
        let dos = &(&EqScalar::t1() * &EqScalar::t1()) - &(&EqScalar::t2() * &EqScalar::t2());
        assert_eq!(multiplicity(&dos), (1, Poly::linear(1, -1)));
        let prod = &EqScalar::t1() * &EqScalar::t2();
        assert_eq!(multiplicity(&prod), (0, prod.numer().clone()));
        assert_eq!(split_off_t_sum(&EqScalar::zero()), Some(TSumSplit::Infinite));
    }
}
