//! Multivariate truncated power series with [`EqScalar`] coefficients.
//!
//! Truncation is a box: every stored exponent tuple is componentwise at most
//! the per-variable order. Queries beyond the box are errors rather than
//! silent zeros.

use std::collections::BTreeMap;
use std::fmt;

use super::scalar::EqScalar;
use crate::error::{Error, Result};

/// The variable sets series can live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarSet {
    /// Single even auxiliary variable `t`.
    T,
    /// `u, s1, ..., sr`.
    Us(usize),
    /// `s1, ..., sr`.
    S(usize),
}

impl VarSet {
    pub fn arity(&self) -> usize {
        match self {
            VarSet::T => 1,
            VarSet::Us(r) => r + 1,
            VarSet::S(r) => *r,
        }
    }

    pub fn names(&self) -> Vec<String> {
        match self {
            VarSet::T => vec!["t".into()],
            VarSet::Us(r) => std::iter::once("u".to_string())
                .chain((1..=*r).map(|k| format!("s{k}")))
                .collect(),
            VarSet::S(r) => (1..=*r).map(|k| format!("s{k}")).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: VarSet,
    orders: Vec<u32>,
    coeffs: BTreeMap<Vec<u32>, EqScalar>,
}

impl TruncatedSeries {
    pub fn zero(vars: VarSet, orders: Vec<u32>) -> Self {
        assert_eq!(orders.len(), vars.arity(), "one truncation order per variable");
        TruncatedSeries {
            vars,
            orders,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(vars: VarSet, orders: Vec<u32>, c: EqScalar) -> Self {
        let mut s = TruncatedSeries::zero(vars, orders);
        let arity = s.vars.arity();
        s.insert_unchecked(vec![0; arity], c);
        s
    }

    pub fn one(vars: VarSet, orders: Vec<u32>) -> Self {
        TruncatedSeries::constant(vars, orders, EqScalar::one())
    }

    /// Univariate series in `t` from `(exponent, coefficient)` pairs.
    pub fn in_t(order: u32, terms: impl IntoIterator<Item = (u32, EqScalar)>) -> Result<Self> {
        let mut s = TruncatedSeries::zero(VarSet::T, vec![order]);
        for (e, c) in terms {
            s.add_term(vec![e], c)?;
        }
        Ok(s)
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    fn within(&self, exps: &[u32]) -> bool {
        exps.len() == self.orders.len() && exps.iter().zip(&self.orders).all(|(e, o)| e <= o)
    }

    fn check(&self, exps: &[u32]) -> Result<()> {
        if self.within(exps) {
            Ok(())
        } else {
            Err(Error::BeyondTruncation {
                requested: exps.to_vec(),
                order: self.orders.clone(),
            })
        }
    }

    fn insert_unchecked(&mut self, exps: Vec<u32>, c: EqScalar) {
        if c.is_zero() {
            self.coeffs.remove(&exps);
        } else {
            self.coeffs.insert(exps, c);
        }
    }

    /// Adds `c` to the coefficient at `exps`.
    pub fn add_term(&mut self, exps: Vec<u32>, c: EqScalar) -> Result<()> {
        self.check(&exps)?;
        let cur = self.coeffs.remove(&exps).unwrap_or_default();
        self.insert_unchecked(exps, cur + c);
        Ok(())
    }

    /// Adds `c` at `exps` if inside the box, drops it otherwise.
    pub fn add_term_truncating(&mut self, exps: Vec<u32>, c: EqScalar) {
        if self.within(&exps) {
            let cur = self.coeffs.remove(&exps).unwrap_or_default();
            self.insert_unchecked(exps, cur + c);
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> Result<EqScalar> {
        self.check(exps)?;
        Ok(self.coeffs.get(exps).cloned().unwrap_or_default())
    }

    pub fn constant_term(&self) -> EqScalar {
        self.coeffs
            .get(&vec![0; self.orders.len()])
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &EqScalar)> {
        self.coeffs.iter()
    }

    /// Same series with smaller (or equal) truncation orders.
    pub fn truncate(&self, orders: &[u32]) -> Result<Self> {
        if orders.len() != self.orders.len() || orders.iter().zip(&self.orders).any(|(a, b)| a > b) {
            return Err(Error::SeriesMismatch(format!(
                "cannot extend truncation {:?} to {:?}",
                self.orders, orders
            )));
        }
        let mut out = TruncatedSeries::zero(self.vars, orders.to_vec());
        for (e, c) in &self.coeffs {
            out.add_term_truncating(e.clone(), c.clone());
        }
        Ok(out)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars || self.orders != other.orders {
            return Err(Error::SeriesMismatch(format!(
                "{:?}{:?} vs {:?}{:?}",
                self.vars, self.orders, other.vars, other.orders
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term_truncating(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            vars: self.vars,
            orders: self.orders.clone(),
            coeffs: self.coeffs.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &EqScalar) -> Self {
        let mut out = TruncatedSeries::zero(self.vars, self.orders.clone());
        if k.is_zero() {
            return out;
        }
        for (e, c) in &self.coeffs {
            out.insert_unchecked(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = TruncatedSeries::zero(self.vars, self.orders.clone());
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if out.within(&e) {
                    out.add_term_truncating(e, ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NonInvertibleConstantTerm);
        }
        let c0_inv = c0.inv()?;
        // s = c0 (1 - h), h without constant term; 1/s = c0^-1 sum_k h^k
        let one = TruncatedSeries::one(self.vars, self.orders.clone());
        let h = one.sub(&self.scale(&c0_inv))?;
        let max_power: u32 = self.orders.iter().sum();
        let mut acc = one.clone();
        let mut p = one;
        for _ in 0..max_power {
            p = p.mul(&h)?;
            if p.is_zero() {
                break;
            }
            acc = acc.add(&p)?;
        }
        Ok(acc.scale(&c0_inv))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.invert()?)
    }

    /// True when every stored exponent has all components even.
    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|e| e.iter().all(|x| x % 2 == 0))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.vars.names();
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (k, (e, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (name, x) in names.iter().zip(e) {
                if *x > 0 {
                    write!(f, "*{name}^{x}")?;
                }
            }
        }
        let bounds: Vec<String> = names
            .iter()
            .zip(&self.orders)
            .map(|(n, o)| format!("{n}^{}", o + 1))
            .collect();
        write!(f, " + O({})", bounds.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_series(order: u32, terms: &[(u32, i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::in_t(order, terms.iter().map(|&(e, n, d)| (e, EqScalar::frac(n, d)))).unwrap()
    }

    #[test]
    fn hand_multiplication() {
        let a = t_series(2, &[(0, 1, 1), (2, 1, 6)]);
        let b = t_series(2, &[(0, 1, 1), (2, -1, 24)]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p, t_series(2, &[(0, 1, 1), (2, 1, 8)]));
    }

    #[test]
    fn invert_examples() {
        let one = t_series(2, &[(0, 1, 1)]);
        assert_eq!(one.invert().unwrap(), one);
        let s = t_series(2, &[(0, 1, 1), (2, 1, 24)]);
        assert_eq!(s.invert().unwrap(), t_series(2, &[(0, 1, 1), (2, -1, 24)]));
    }

    #[test]
    fn zero_constant_term_is_not_invertible() {
        let s = t_series(3, &[(1, 1, 1)]);
        assert_eq!(s.invert(), Err(Error::NonInvertibleConstantTerm));
    }

    #[test]
    fn coefficient_contract() {
        let s = t_series(2, &[(0, 1, 1), (2, 1, 8)]);
        assert_eq!(s.coefficient(&[2]).unwrap(), EqScalar::frac(1, 8));
        assert!(s.coefficient(&[1]).unwrap().is_zero());
        assert!(matches!(s.coefficient(&[3]), Err(Error::BeyondTruncation { .. })));
    }

    #[test]
    fn mismatched_truncation_is_rejected() {
        let a = t_series(2, &[(0, 1, 1)]);
        let b = t_series(3, &[(0, 1, 1)]);
        assert!(a.mul(&b).is_err());
        assert_eq!(b.truncate(&[2]).unwrap(), a);
    }

    #[test]
    fn multivariate_box_truncation() {
        let vars = VarSet::Us(1);
        let mut x = TruncatedSeries::one(vars, vec![1, 2]);
        x.add_term(vec![1, 0], EqScalar::one()).unwrap();
        x.add_term(vec![0, 1], EqScalar::t1()).unwrap();
        let inv = x.invert().unwrap();
        assert_eq!(x.mul(&inv).unwrap(), TruncatedSeries::one(vars, vec![1, 2]));
        assert!(inv.coefficient(&[2, 0]).is_err());
    }
}
