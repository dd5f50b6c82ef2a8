//! Sparse bivariate polynomials in `t1`, `t2` over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded-lex on `(deg t1, deg t2)`: total degree first, then the `t1`
//! exponent. The leading term is the last entry of the map.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Exponent pair `t1^i * t2^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub t1: u32,
    pub t2: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { t1: 0, t2: 0 };

    pub fn new(t1: u32, t2: u32) -> Self {
        Monomial { t1, t2 }
    }

    pub fn degree(&self) -> u32 {
        self.t1 + self.t2
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.t1.cmp(&other.t1))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.t1 + rhs.t1, self.t2 + rhs.t2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(Rational::from_integer(c.into()))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn t1() -> Self {
        Poly::term(Rational::one(), Monomial::new(1, 0))
    }

    pub fn t2() -> Self {
        Poly::term(Rational::one(), Monomial::new(0, 1))
    }

    /// `a*t1 + b*t2`.
    pub fn linear(a: i64, b: i64) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::new(1, 0), Rational::from_integer(a.into()));
        p.add_term(Monomial::new(0, 1), Rational::from_integer(b.into()));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                existing.is_zero()
            }
            None => {
                self.terms.insert(m, c);
                false
            }
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Returns the value when the polynomial has no `t` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Makes the leading coefficient one; returns the factor divided out.
    pub fn monic(&self) -> (Poly, Rational) {
        match self.leading() {
            None => (Poly::zero(), Rational::one()),
            Some((_, lc)) => {
                let lc = lc.clone();
                (self.scale(&lc.recip()), lc)
            }
        }
    }

    /// Restriction to the line `t2 = -t1`, as coefficients of powers of `t1`.
    pub fn on_antidiagonal(&self) -> BTreeMap<u32, Rational> {
        let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = if m.t2 % 2 == 0 { c.clone() } else { -c.clone() };
            *out.entry(m.degree()).or_insert_with(Rational::zero) += v;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// True iff `t1 + t2` divides the polynomial.
    pub fn divisible_by_t_sum(&self) -> bool {
        self.on_antidiagonal().is_empty()
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let a = Rec::from_poly(self);
        let b = Rec::from_poly(divisor);
        a.div_exact(&b).map(|q| q.to_poly())
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic().0;
        }
        if b.is_zero() {
            return a.monic().0;
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        let g = Rec::gcd(&Rec::from_poly(a), &Rec::from_poly(b)).to_poly();
        g.monic().0
    }

    pub fn eval(&self, t1: &Rational, t2: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c * pow_rat(t1, m.t1) * pow_rat(t2, m.t2);
        }
        acc
    }
}

fn pow_rat(x: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub(crate) fn fmt_rational_abs(c: &Rational) -> String {
    let c = c.abs();
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// `c*t1^i*t2^j` terms, leading term first, joined by `+`/`-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            let mut factors = Vec::new();
            let abs = fmt_rational_abs(c);
            if *m == Monomial::ONE || abs != "1" {
                factors.push(abs);
            }
            for (name, e) in [("t1", m.t1), ("t2", m.t2)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials over Q, used as coefficients of the recursive
// representation Q[t1][t2].

#[derive(Debug, Clone, PartialEq, Eq)]
struct Upoly(Vec<Rational>);

impl Upoly {
    fn zero() -> Self {
        Upoly(Vec::new())
    }

    fn one() -> Self {
        Upoly(vec![Rational::one()])
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lc(&self) -> &Rational {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn add(&self, o: &Upoly) -> Upoly {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        Upoly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
        .trim()
    }

    fn sub(&self, o: &Upoly) -> Upoly {
        self.add(&o.neg())
    }

    fn neg(&self) -> Upoly {
        Upoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    fn mul(&self, o: &Upoly) -> Upoly {
        if self.is_zero() || o.is_zero() {
            return Upoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Upoly(out).trim()
    }

    fn scale(&self, c: &Rational) -> Upoly {
        Upoly(self.0.iter().map(|x| x * c).collect()).trim()
    }

    fn divrem(&self, d: &Upoly) -> (Upoly, Upoly) {
        let dd = d.deg().expect("division by zero polynomial");
        let lc_inv = d.lc().recip();
        let mut rem = self.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(dd).max(1)];
        while let Some(rd) = rem.deg() {
            if rd < dd {
                break;
            }
            let c = rem.lc() * &lc_inv;
            let shift = rd - dd;
            q[shift] = c.clone();
            let mut sub = vec![Rational::zero(); shift];
            sub.extend(d.0.iter().map(|x| x * &c));
            rem = rem.sub(&Upoly(sub));
        }
        (Upoly(q).trim(), rem)
    }

    fn monic(&self) -> Upoly {
        if self.is_zero() {
            return Upoly::zero();
        }
        self.scale(&self.lc().recip())
    }

    fn gcd(a: &Upoly, b: &Upoly) -> Upoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.divrem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }
}

/// Q[t1][t2]: index = power of t2.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Rec(Vec<Upoly>);

impl Rec {
    fn from_poly(p: &Poly) -> Rec {
        let max_t2 = p.terms.keys().map(|m| m.t2).max().unwrap_or(0) as usize;
        let mut coeffs: Vec<Vec<Rational>> = vec![Vec::new(); max_t2 + 1];
        for (m, c) in &p.terms {
            let row = &mut coeffs[m.t2 as usize];
            if row.len() <= m.t1 as usize {
                row.resize(m.t1 as usize + 1, Rational::zero());
            }
            row[m.t1 as usize] = c.clone();
        }
        Rec(coeffs.into_iter().map(|r| Upoly(r).trim()).collect()).trim()
    }

    fn to_poly(&self) -> Poly {
        let mut p = Poly::zero();
        for (j, u) in self.0.iter().enumerate() {
            for (i, c) in u.0.iter().enumerate() {
                p.add_term(Monomial::new(i as u32, j as u32), c.clone());
            }
        }
        p
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Upoly::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lc(&self) -> &Upoly {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn content(&self) -> Upoly {
        let mut g = Upoly::zero();
        for c in &self.0 {
            g = Upoly::gcd(&g, c);
            if g.deg() == Some(0) {
                break;
            }
        }
        g
    }

    fn map(&self, f: impl Fn(&Upoly) -> Upoly) -> Rec {
        Rec(self.0.iter().map(f).collect()).trim()
    }

    fn primitive(&self) -> Rec {
        let c = self.content();
        self.map(|u| {
            let (q, r) = u.divrem(&c);
            debug_assert!(r.is_zero());
            q
        })
    }

    fn shifted_mul(&self, c: &Upoly, shift: usize) -> Rec {
        let mut v = vec![Upoly::zero(); shift];
        v.extend(self.0.iter().map(|u| u.mul(c)));
        Rec(v).trim()
    }

    fn sub(&self, o: &Rec) -> Rec {
        let n = self.0.len().max(o.0.len());
        let z = Upoly::zero();
        Rec(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z).sub(o.0.get(i).unwrap_or(&z)))
                .collect(),
        )
        .trim()
    }

    /// Pseudo-remainder of `self` by `b` (in the variable t2).
    fn prem(&self, b: &Rec) -> Rec {
        let db = b.deg().expect("pseudo-division by zero");
        let lb = b.lc().clone();
        let mut r = self.clone();
        while let Some(dr) = r.deg() {
            if dr < db {
                break;
            }
            let lr = r.lc().clone();
            r = r.map(|u| u.mul(&lb)).sub(&b.shifted_mul(&lr, dr - db));
        }
        r
    }

    fn gcd(a: &Rec, b: &Rec) -> Rec {
        let c = Upoly::gcd(&a.content(), &b.content());
        let (mut x, mut y) = (a.primitive(), b.primitive());
        if x.deg() < y.deg() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            if y.deg() == Some(0) {
                // primitive and constant in t2: a unit
                x = Rec(vec![Upoly::one()]);
                break;
            }
            let r = x.prem(&y);
            x = y;
            y = if r.is_zero() { r } else { r.primitive() };
        }
        x.map(|u| u.mul(&c))
    }

    fn div_exact(&self, b: &Rec) -> Option<Rec> {
        let db = b.deg()?;
        let lb = b.lc().clone();
        let mut r = self.clone();
        let mut q = vec![Upoly::zero(); r.0.len().saturating_sub(db).max(1)];
        while let Some(dr) = r.deg() {
            if dr < db {
                return None;
            }
            let (qc, rem) = r.lc().divrem(&lb);
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&b.shifted_mul(&qc, dr - db));
            q[dr - db] = qc;
        }
        Some(Rec(q).trim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn graded_lex_order() {
        assert!(Monomial::new(0, 2) > Monomial::new(1, 0));
        assert!(Monomial::new(2, 0) > Monomial::new(1, 1));
        assert!(Monomial::new(1, 1) > Monomial::new(0, 2));
    }

    #[test]
    fn difference_of_squares() {
        let a = Poly::linear(1, 1);
        let b = Poly::linear(1, -1);
        let p = &a * &b;
        let expected = &Poly::t1().pow(2) - &Poly::t2().pow(2);
        assert_eq!(p, expected);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&Poly::t1()), None);
    }

    #[test]
    fn gcd_of_products() {
        let a = Poly::linear(1, 1);
        let b = Poly::linear(2, -1);
        let c = &Poly::t1() * &Poly::t2();
        let x = &(&a * &b) * &c;
        let y = &(&a * &a) * &Poly::linear(3, 5);
        assert_eq!(Poly::gcd(&x, &y), a.monic().0);
        let g = Poly::gcd(&x, &(&b * &c));
        assert_eq!(g, (&b * &c).monic().0);
    }

    #[test]
    fn display_syntax() {
        let p = &Poly::linear(2, 2) + &Poly::constant(Rational::new(1.into(), 2.into()));
        assert_eq!(p.to_string(), "2*t1+2*t2+1/2");
        let p = &Poly::t1().pow(2) - &Poly::t2().scale(&q(3));
        assert_eq!(p.to_string(), "t1^2-3*t2");
        assert_eq!((-&Poly::t1()).to_string(), "-t1");
    }

    #[test]
    fn antidiagonal_divisibility() {
        assert!(Poly::linear(4, 4).divisible_by_t_sum());
        assert!(!(&Poly::t1() * &Poly::t2()).divisible_by_t_sum());
    }
}
