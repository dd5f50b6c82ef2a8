//! Double Hurwitz numbers `H^g_{λ,ρ}`.
//!
//! Convention: ordered tuples of transpositions, one global division by `n!`.
//! Two independent routes are provided: the closed form for one-part `ρ`
//! ([`gjv_hurwitz`]) and a class-algebra convolution over `S_n` valid for any
//! `ρ` ([`brute_force_hurwitz`]).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{factorial, EqScalar, Rational, TruncatedSeries};
use crate::partitions::{enumerate_partitions, Partition};

pub const DEFAULT_BRUTE_BOUND: u32 = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzQuery {
    pub lambda: Partition,
    pub rho: Partition,
    pub g: i64,
}

impl HurwitzQuery {
    pub fn new(lambda: Partition, rho: Partition, g: i64) -> Result<Self> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch(format!("|{lambda}| != |{rho}|")));
        }
        Ok(HurwitzQuery { lambda, rho, g })
    }

    pub fn n(&self) -> u32 {
        self.lambda.size()
    }

    /// Number of simple branch points, `2g - 2 + ℓ(λ) + ℓ(ρ)`.
    pub fn b(&self) -> i64 {
        2 * self.g - 2 + self.lambda.len() as i64 + self.rho.len() as i64
    }
}

/// `sinh(x t/2)/(x t/2)` to order `t^order`.
fn sinhc(x: u32, order: u32) -> TruncatedSeries {
    let half = Rational::new(x.into(), 2.into());
    let terms = (0..=order / 2).map(|k| {
        let c = num_traits::pow(half.clone(), 2 * k as usize) / Rational::from_integer(factorial(2 * k + 1));
        (2 * k, EqScalar::from_rational(c))
    });
    TruncatedSeries::in_t(order, terms).expect("exponents within order")
}

/// The even series `(t/2)/sinh(t/2) · ∏ sinh(λ_i t/2)/(λ_i t/2)` to `t^order`.
pub fn gjv_integrand(lambda: &Partition, order: u32) -> TruncatedSeries {
    let mut acc = sinhc(1, order).invert().expect("unit constant term");
    for &p in lambda.parts() {
        acc = acc.mul(&sinhc(p, order)).expect("same truncation");
    }
    acc
}

/// `H^g_{λ,(n)}` by the closed formula. Memoized.
pub fn gjv_hurwitz(lambda: &Partition, g: u32) -> Rational {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, u32), Rational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), g);
    if let Some(v) = cache.lock().expect("cache lock").get(&key) {
        return v.clone();
    }
    let v = gjv_closed_form(lambda, g);
    cache.lock().expect("cache lock").insert(key, v.clone());
    v
}

fn gjv_closed_form(lambda: &Partition, g: u32) -> Rational {
    let n = lambda.size();
    let l = lambda.len() as i64;
    let coeff = gjv_integrand(lambda, 2 * g)
        .coefficient(&[2 * g])
        .expect("within truncation")
        .as_rational()
        .expect("rational coefficients");
    let e = 2 * g as i64 + l - 2;
    let n_pow = if e >= 0 {
        Rational::from_integer(BigInt::from(n).pow(e as u32))
    } else {
        Rational::new(BigInt::one(), BigInt::from(n).pow((-e) as u32))
    };
    let fact = factorial((2 * g as i64 + l - 1) as u32);
    coeff * n_pow * Rational::new(fact, lambda.aut_order())
}

/// `H^g_{μ,(n)}` with `g = (a_k + 1 - ℓ(μ))/2`; zero unless that is a
/// nonnegative integer.
pub fn hurwitz_for_marked_points(mu: &Partition, a_k: u32, n: u32) -> Result<Rational> {
    if mu.size() != n {
        return Err(Error::SizeMismatch(format!("|{mu}| != {n}")));
    }
    let twice_g = a_k as i64 + 1 - mu.len() as i64;
    if twice_g < 0 || twice_g % 2 != 0 {
        return Ok(Rational::zero());
    }
    Ok(gjv_hurwitz(mu, (twice_g / 2) as u32))
}

pub type Perm = Vec<u8>;

/// `(a ∘ b)(i) = a(b(i))`.
pub fn compose(a: &[u8], b: &[u8]) -> Perm {
    b.iter().map(|&i| a[i as usize]).collect()
}

pub fn cycle_type(p: &[u8]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts).expect("nonempty permutation")
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: u32) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Perm = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// A permutation with the given cycle type.
pub fn representative(lambda: &Partition) -> Perm {
    let n = lambda.size() as usize;
    let mut p: Perm = vec![0; n];
    let mut start = 0;
    for &len in lambda.parts() {
        let len = len as usize;
        for k in 0..len {
            p[start + k] = (start + (k + 1) % len) as u8;
        }
        start += len;
    }
    p
}

pub fn transpositions(n: u32) -> Vec<Perm> {
    let mut out = Vec::new();
    for i in 0..n as u8 {
        for j in i + 1..n as u8 {
            let mut p: Perm = (0..n as u8).collect();
            p.swap(i as usize, j as usize);
            out.push(p);
        }
    }
    out
}

/// Center of `Q[S_n]` in the basis of conjugacy-class sums `K_λ`.
#[derive(Debug)]
pub struct ClassAlgebra {
    n: u32,
    classes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    sizes: Vec<BigInt>,
    /// `transposition[ν][μ]`: coefficient of `K_μ` in `T · K_ν`.
    transposition: Vec<Vec<u64>>,
    products: Mutex<HashMap<(usize, usize), Arc<Vec<BigInt>>>>,
}

impl ClassAlgebra {
    fn build(n: u32) -> Self {
        let classes = enumerate_partitions(n);
        let index: HashMap<Partition, usize> =
            classes.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let nfact = factorial(n);
        let sizes = classes.iter().map(|c| &nfact / c.centralizer_order()).collect();
        let taus = transpositions(n);
        // coefficient of K_μ in T·K_ν is #{τ : τ·w ∈ C_ν} for a fixed w ∈ C_μ
        let mut transposition = vec![vec![0u64; classes.len()]; classes.len()];
        for (mu_idx, mu) in classes.iter().enumerate() {
            let w = representative(mu);
            for t in &taus {
                let nu = cycle_type(&compose(t, &w));
                transposition[index[&nu]][mu_idx] += 1;
            }
        }
        ClassAlgebra {
            n,
            classes,
            index,
            sizes,
            transposition,
            products: Mutex::new(HashMap::new()),
        }
    }

    /// Shared instance for `S_n`, built on first use.
    pub fn for_n(n: u32) -> Arc<ClassAlgebra> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ClassAlgebra>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("class algebra cache");
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(ClassAlgebra::build(n)))
            .clone()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn class_size(&self, p: &Partition) -> &BigInt {
        &self.sizes[self.index[p]]
    }

    /// `T · x` for `x` in class-sum coordinates.
    pub fn apply_transposition(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.classes.len()];
        for (nu, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (mu, &m) in self.transposition[nu].iter().enumerate() {
                if m != 0 {
                    out[mu] += c * m;
                }
            }
        }
        out
    }

    /// `K_a · K_b` in class-sum coordinates, by enumeration of `C_a`.
    pub fn multiply_class_sums(&self, a: &Partition, b: &Partition) -> Arc<Vec<BigInt>> {
        let key = (self.index[a], self.index[b]);
        if let Some(v) = self.products.lock().expect("products cache").get(&key) {
            return v.clone();
        }
        // coefficient of K_μ = #{x ∈ C_a : x^{-1} w ∈ C_b} for fixed w ∈ C_μ
        let members_a: Vec<Perm> = all_permutations(self.n)
            .into_iter()
            .filter(|p| cycle_type(p) == *a)
            .collect();
        let out: Vec<BigInt> = self
            .classes
            .iter()
            .map(|mu| {
                let w = representative(mu);
                let count = members_a
                    .iter()
                    .filter(|x| cycle_type(&compose(&inverse(x), &w)) == *b)
                    .count();
                BigInt::from(count)
            })
            .collect();
        let out = Arc::new(out);
        self.products.lock().expect("products cache").insert(key, out.clone());
        out
    }

    /// Coefficient of the identity in `K_a K_b K_c`.
    pub fn identity_coefficient(&self, a: &Partition, b: &Partition, c: &Partition) -> BigInt {
        // e = x·y with y ∈ C_c forces x ∈ C_c, each such x once
        let ab = self.multiply_class_sums(a, b);
        &ab[self.index[c]] * self.class_size(c)
    }
}

fn inverse(p: &[u8]) -> Perm {
    let mut out = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j as usize] = i as u8;
    }
    out
}

/// `H^g_{λ,ρ}` by class-algebra convolution, `n ≤ 7`.
pub fn brute_force_hurwitz(q: &HurwitzQuery) -> Result<Rational> {
    brute_force_hurwitz_bounded(q, DEFAULT_BRUTE_BOUND)
}

pub fn brute_force_hurwitz_bounded(q: &HurwitzQuery, bound: u32) -> Result<Rational> {
    let n = q.n();
    if n > bound {
        return Err(Error::HurwitzBound {
            n: n as usize,
            bound: bound as usize,
        });
    }
    let b = q.b();
    if q.g < 0 || b < 0 {
        return Ok(Rational::zero());
    }
    // sign(λ)·sign(ρ) must equal (-1)^b
    if (q.lambda.is_odd() ^ q.rho.is_odd()) != (b % 2 == 1) {
        return Ok(Rational::zero());
    }
    let alg = ClassAlgebra::for_n(n);
    let mut x = vec![BigInt::zero(); alg.classes().len()];
    x[alg.index_of(&q.rho)] = BigInt::one();
    for _ in 0..b {
        x = alg.apply_transposition(&x);
    }
    let count = &x[alg.index_of(&q.lambda)] * alg.class_size(&q.lambda);
    Ok(Rational::new(count, factorial(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn brute(l: &[u32], r: &[u32], g: i64) -> Rational {
        brute_force_hurwitz(&HurwitzQuery::new(p(l), p(r), g).unwrap()).unwrap()
    }

    /// Raw enumeration of `(α, τ_1..τ_b, β)` with product identity.
    fn tuple_count(l: &Partition, r: &Partition, g: i64) -> Rational {
        let q = HurwitzQuery::new(l.clone(), r.clone(), g).unwrap();
        let n = q.n();
        let b = q.b();
        if g < 0 || b < 0 {
            return Rational::zero();
        }
        let perms = all_permutations(n);
        let alphas: Vec<&Perm> = perms.iter().filter(|x| cycle_type(x) == *l).collect();
        let betas: Vec<&Perm> = perms.iter().filter(|x| cycle_type(x) == *r).collect();
        let taus = transpositions(n);
        let id: Perm = (0..n as u8).collect();
        // all products τ_1⋯τ_b
        let mut words: Vec<Perm> = vec![id.clone()];
        for _ in 0..b {
            words = words
                .iter()
                .flat_map(|w| taus.iter().map(move |t| compose(w, t)))
                .collect();
        }
        let mut count = 0u64;
        for a in &alphas {
            for w in &words {
                let aw = compose(a, w);
                for be in &betas {
                    if compose(&aw, be) == id {
                        count += 1;
                    }
                }
            }
        }
        Rational::new(count.into(), factorial(n))
    }

    #[test]
    fn gjv_examples() {
        assert_eq!(gjv_hurwitz(&p(&[1, 1, 1]), 0), rat(1, 1));
        assert_eq!(gjv_hurwitz(&p(&[2]), 1), rat(1, 2));
        for n in 1..=6 {
            assert_eq!(gjv_hurwitz(&Partition::full_cycle(n), 0), rat(1, n as i64));
        }
    }

    #[test]
    fn brute_examples() {
        assert_eq!(brute(&[2], &[2], 0), rat(1, 2));
        assert_eq!(brute(&[1, 1], &[2], 1), rat(1, 2));
        assert_eq!(brute(&[2, 1], &[3], 0), rat(1, 1));
        assert_eq!(brute(&[2], &[2], -1), rat(0, 1));
        // (1,1),(2) at g=0 needs b=1 transposition taking identity to (12): 1/2
        assert_eq!(brute(&[1, 1], &[2], 0), rat(1, 2));
    }

    #[test]
    fn marked_point_examples() {
        assert_eq!(hurwitz_for_marked_points(&p(&[2]), 0, 2).unwrap(), rat(1, 2));
        assert_eq!(hurwitz_for_marked_points(&p(&[1, 1]), 0, 2).unwrap(), rat(0, 1));
        assert_eq!(hurwitz_for_marked_points(&p(&[1, 1]), 1, 2).unwrap(), rat(1, 2));
        assert!(hurwitz_for_marked_points(&p(&[1, 1]), 1, 3).is_err());
    }

    #[test]
    fn bound_is_enforced() {
        let q = HurwitzQuery::new(Partition::identity(8), Partition::full_cycle(8), 0).unwrap();
        assert!(matches!(brute_force_hurwitz(&q), Err(Error::HurwitzBound { n: 8, bound: 7 })));
        assert!(brute_force_hurwitz_bounded(&q, 8).is_ok());
    }

    #[test]
    fn convolution_matches_tuple_enumeration() {
        for n in 1..=3 {
            for l in enumerate_partitions(n) {
                for r in enumerate_partitions(n) {
                    for g in -1..=1 {
                        let q = HurwitzQuery::new(l.clone(), r.clone(), g).unwrap();
                        if q.b() > 5 {
                            continue;
                        }
                        assert_eq!(brute_force_hurwitz(&q).unwrap(), tuple_count(&l, &r, g), "{l} {r} g={g}");
                    }
                }
            }
        }
    }

    #[test]
    fn gjv_matches_convolution_small() {
        for n in 1..=5 {
            for l in enumerate_partitions(n) {
                for g in 0..=2 {
                    assert_eq!(gjv_hurwitz(&l, g), brute(l.parts(), &[n], g as i64), "{l} g={g}");
                }
            }
        }
    }

    #[test]
    fn integrand_is_even() {
        for l in enumerate_partitions(5) {
            let s = gjv_integrand(&l, 7);
            assert!(s.terms().all(|(e, _)| e[0] % 2 == 0));
        }
    }

    #[test]
    fn parity_and_sign() {
        for n in 1..=5 {
            for l in enumerate_partitions(n) {
                for r in enumerate_partitions(n) {
                    for g in 0..=2 {
                        let q = HurwitzQuery::new(l.clone(), r.clone(), g).unwrap();
                        let v = brute_force_hurwitz(&q).unwrap();
                        assert!(v >= Rational::zero());
                        if (l.is_odd() ^ r.is_odd()) != (q.b().rem_euclid(2) == 1) {
                            assert!(v.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn class_products() {
        let alg = ClassAlgebra::for_n(3);
        let c3 = p(&[3]);
        assert!(!alg.identity_coefficient(&c3, &c3, &c3).is_zero());
        assert!(alg.identity_coefficient(&p(&[2, 1]), &c3, &p(&[1, 1, 1])).is_zero());
        // K_T · K_T = 3 K_e + 3 K_(3)
        let tt = alg.multiply_class_sums(&p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(tt[alg.index_of(&p(&[1, 1, 1]))], 3.into());
        assert_eq!(tt[alg.index_of(&c3)], 3.into());
        assert_eq!(all_permutations(4).len(), 24);
    }
}
