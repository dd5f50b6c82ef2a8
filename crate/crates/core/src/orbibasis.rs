//! Orbifold cohomology basis of `[Sym^n(A_r)]`: classes indexed by
//! cohomology-weighted partitions, the pairing, dual classes, and sector
//! bookkeeping.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::argeom::ArSurface;
use crate::error::{Error, Result};
use crate::exactalg::{linalg, EqScalar, Rational};
use crate::hurwitz::ClassAlgebra;
use crate::partitions::{enumerate_partitions, CohLabel, Partition, WeightedPartition};

/// `EqScalar`-linear combination of basis elements with a common `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbClass {
    n: u32,
    terms: BTreeMap<WeightedPartition, EqScalar>,
}

impl OrbClass {
    pub fn zero(n: u32) -> Self {
        OrbClass {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(w: WeightedPartition) -> Self {
        let mut c = OrbClass::zero(w.size());
        c.terms.insert(w, EqScalar::one());
        c
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightedPartition, &EqScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &WeightedPartition) -> EqScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: WeightedPartition, c: EqScalar) -> Result<()> {
        if w.size() != self.n {
            return Err(Error::SizeMismatch(format!("{w} in a class with n = {}", self.n)));
        }
        let cur = self.terms.remove(&w).unwrap_or_default() + c;
        if !cur.is_zero() {
            self.terms.insert(w, cur);
        }
        Ok(())
    }

    pub fn add(&self, other: &OrbClass) -> Result<OrbClass> {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &EqScalar) -> OrbClass {
        let mut out = OrbClass::zero(self.n);
        if k.is_zero() {
            return out;
        }
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), c * k);
        }
        out
    }

    /// Age of the common sector, `None` if the class is zero or mixes sectors.
    pub fn age(&self) -> Option<u32> {
        let mut ages = self
            .terms
            .keys()
            .map(|w| self.n - w.len() as u32);
        let first = ages.next()?;
        ages.all(|a| a == first).then_some(first)
    }
}

impl fmt::Display for OrbClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| if c.is_one() { format!("[{w}]") } else { format!("({c})*[{w}]") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rewrites every label in the fixed-point basis `[x_i]`.
pub fn to_fixed_point_basis(c: &OrbClass, surface: &ArSurface) -> Result<OrbClass> {
    let mut out = OrbClass::zero(c.n);
    for (w, coeff) in &c.terms {
        // multilinear expansion, one part at a time
        let mut partial: Vec<(Vec<(u32, CohLabel)>, EqScalar)> = vec![(Vec::new(), coeff.clone())];
        for &(part, label) in w.terms() {
            let expansion = surface.label_to_fixed_basis(label)?;
            partial = partial
                .into_iter()
                .flat_map(|(terms, k)| {
                    expansion.iter().map(move |(i, e)| {
                        let mut t = terms.clone();
                        t.push((part, CohLabel::Fixed(*i)));
                        (t, &k * e)
                    })
                })
                .collect();
        }
        for (terms, k) in partial {
            out.add_term(WeightedPartition::new(terms)?, k)?;
        }
    }
    Ok(out)
}

fn permanent(m: &[Vec<EqScalar>]) -> EqScalar {
    fn rec(m: &[Vec<EqScalar>], row: usize, used: &mut Vec<bool>) -> EqScalar {
        if row == m.len() {
            return EqScalar::one();
        }
        let mut acc = EqScalar::zero();
        for col in 0..m.len() {
            if used[col] || m[row][col].is_zero() {
                continue;
            }
            used[col] = true;
            let rest = rec(m, row + 1, used);
            used[col] = false;
            acc += &(&m[row][col] * &rest);
        }
        acc
    }
    rec(m, 0, &mut vec![false; m.len()])
}

/// Pairing of two basis elements: zero across sectors, otherwise
/// `1/𝔷(λ)` times the sum over part-size-preserving bijections of
/// `∏ ∫ η_k ξ_{m(k)}`.
pub fn orb_pairing(w1: &WeightedPartition, w2: &WeightedPartition, surface: &ArSurface) -> Result<EqScalar> {
    if w1.size() != w2.size() {
        return Err(Error::SizeMismatch(format!("|{w1}| != |{w2}|")));
    }
    if w1.underlying() != w2.underlying() {
        return Ok(EqScalar::zero());
    }
    let Some(lambda) = w1.underlying() else {
        return Ok(EqScalar::one());
    };
    let mut total = EqScalar::one();
    for part in lambda.multiplicities().keys() {
        let eta: Vec<_> = w1.terms().iter().filter(|(p, _)| p == part).map(|(_, l)| *l).collect();
        let xi: Vec<_> = w2.terms().iter().filter(|(p, _)| p == part).map(|(_, l)| *l).collect();
        let mut m = Vec::new();
        for a in &eta {
            let ca = surface.class_of(*a)?;
            let mut row = Vec::new();
            for b in &xi {
                row.push(surface.equivariant_integral(&[&ca, &surface.class_of(*b)?]));
            }
            m.push(row);
        }
        total *= &permanent(&m);
        if total.is_zero() {
            return Ok(total);
        }
    }
    Ok(total.scale(&Rational::new(BigInt::one(), lambda.centralizer_order())))
}

/// Bilinear extension of [`orb_pairing`].
pub fn orb_pairing_classes(c1: &OrbClass, c2: &OrbClass, surface: &ArSurface) -> Result<EqScalar> {
    let mut acc = EqScalar::zero();
    for (w1, k1) in c1.terms() {
        for (w2, k2) in c2.terms() {
            let p = orb_pairing(w1, w2, surface)?;
            if !p.is_zero() {
                acc += &(&(k1 * k2) * &p);
            }
        }
    }
    Ok(acc)
}

/// Basis elements with labels in `{1, E_1..E_r}`, grouped by sector in
/// partition enumeration order.
pub fn standard_basis(n: u32, r: u32) -> Vec<WeightedPartition> {
    let mut labels = vec![CohLabel::One];
    labels.extend((1..=r).map(CohLabel::E));
    let mut out = Vec::new();
    for lambda in enumerate_partitions(n) {
        let mut acc: Vec<Vec<(u32, CohLabel)>> = vec![Vec::new()];
        for (part, mult) in lambda.multiplicities().into_iter().rev() {
            // multisets of size `mult` from `labels`
            let mut choices: Vec<Vec<CohLabel>> = Vec::new();
            multisets(&labels, mult as usize, 0, &mut Vec::new(), &mut choices);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |ch| {
                        let mut t = prefix.clone();
                        t.extend(ch.iter().map(|l| (part, *l)));
                        t
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(|t| WeightedPartition::new(t).expect("valid parts")));
    }
    out
}

fn multisets(labels: &[CohLabel], k: usize, start: usize, cur: &mut Vec<CohLabel>, out: &mut Vec<Vec<CohLabel>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..labels.len() {
        cur.push(labels[i]);
        multisets(labels, k, i, cur, out);
        cur.pop();
    }
}

/// A basis with its pairing: Gram matrix, per-sector inverse, duals.
#[derive(Debug, Clone)]
pub struct BasisContext {
    n: u32,
    basis: Vec<WeightedPartition>,
    index: BTreeMap<WeightedPartition, usize>,
    gram: Vec<Vec<EqScalar>>,
    inverse: Vec<Vec<EqScalar>>,
}

impl BasisContext {
    /// Pairing computed by [`orb_pairing`] on `A_r`.
    pub fn geometric(basis: Vec<WeightedPartition>, surface: &ArSurface) -> Result<Self> {
        let gram = basis
            .iter()
            .map(|a| basis.iter().map(|b| orb_pairing(a, b, surface)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        BasisContext::from_gram(basis, gram)
    }

    /// Pairing given explicitly. Must vanish across sectors and be symmetric.
    pub fn from_gram(basis: Vec<WeightedPartition>, gram: Vec<Vec<EqScalar>>) -> Result<Self> {
        let n = basis.first().map(|w| w.size()).unwrap_or(0);
        if basis.iter().any(|w| w.size() != n) {
            return Err(Error::SizeMismatch("basis elements of different n".into()));
        }
        let k = basis.len();
        if gram.len() != k || gram.iter().any(|r| r.len() != k) {
            return Err(Error::Input(format!("Gram matrix must be {k}x{k}")));
        }
        for a in 0..k {
            for b in 0..k {
                if gram[a][b] != gram[b][a] {
                    return Err(Error::Input(format!("pairing not symmetric at ({}, {})", basis[a], basis[b])));
                }
                if basis[a].underlying() != basis[b].underlying() && !gram[a][b].is_zero() {
                    return Err(Error::Input(format!("pairing mixes sectors at ({}, {})", basis[a], basis[b])));
                }
            }
        }
        let mut inverse = vec![vec![EqScalar::zero(); k]; k];
        let mut sectors: BTreeMap<Option<Partition>, Vec<usize>> = BTreeMap::new();
        for (i, w) in basis.iter().enumerate() {
            sectors.entry(w.underlying()).or_default().push(i);
        }
        for (sector, idx) in &sectors {
            let block: Vec<Vec<EqScalar>> = idx
                .iter()
                .map(|&a| idx.iter().map(|&b| gram[a][b].clone()).collect())
                .collect();
            let inv = linalg::invert(&block).ok_or_else(|| {
                Error::SingularGram(sector.as_ref().map(|p| p.to_string()).unwrap_or_default())
            })?;
            for (x, &a) in idx.iter().enumerate() {
                for (y, &b) in idx.iter().enumerate() {
                    inverse[a][b] = inv[x][y].clone();
                }
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(BasisContext {
            n,
            basis,
            index,
            gram,
            inverse,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn basis(&self) -> &[WeightedPartition] {
        &self.basis
    }

    pub fn index_of(&self, w: &WeightedPartition) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn gram(&self) -> &[Vec<EqScalar>] {
        &self.gram
    }

    /// `G^{-1}`, assembled from the per-sector inverses.
    pub fn inverse_gram(&self) -> &[Vec<EqScalar>] {
        &self.inverse
    }

    /// Multiplies the pairing on the sector of `sector` by `factor`.
    pub fn rescaled(&self, factors: &BTreeMap<Partition, EqScalar>) -> Result<Self> {
        let k = self.basis.len();
        let factor = |i: usize| {
            self.basis[i]
                .underlying()
                .and_then(|p| factors.get(&p).cloned())
                .unwrap_or_else(EqScalar::one)
        };
        let gram = (0..k)
            .map(|a| (0..k).map(|b| &self.gram[a][b] * &factor(a)).collect())
            .collect();
        BasisContext::from_gram(self.basis.clone(), gram)
    }

    fn coords(&self, c: &OrbClass) -> Result<Vec<EqScalar>> {
        let mut v = vec![EqScalar::zero(); self.basis.len()];
        for (w, k) in c.terms() {
            let i = self
                .index_of(w)
                .ok_or_else(|| Error::Input(format!("{w} is not in the basis")))?;
            v[i] = k.clone();
        }
        Ok(v)
    }

    fn from_coords(&self, v: &[EqScalar]) -> OrbClass {
        let mut c = OrbClass::zero(self.n);
        for (w, k) in self.basis.iter().zip(v) {
            if !k.is_zero() {
                c.terms.insert(w.clone(), k.clone());
            }
        }
        c
    }

    pub fn pairing(&self, a: &OrbClass, b: &OrbClass) -> Result<EqScalar> {
        let (x, y) = (self.coords(a)?, self.coords(b)?);
        Ok(linalg::mat_vec(&self.gram, &y).iter().zip(&x).map(|(g, k)| g * k).sum())
    }

    /// `w^∨ = Σ_v (G^{-1})_{v w} v`.
    pub fn dual_class(&self, w: &WeightedPartition) -> Result<OrbClass> {
        let i = self
            .index_of(w)
            .ok_or_else(|| Error::Input(format!("{w} is not in the basis")))?;
        let col: Vec<EqScalar> = (0..self.basis.len()).map(|v| self.inverse[v][i].clone()).collect();
        Ok(self.from_coords(&col))
    }

    /// Dual basis of an arbitrary basis `classes` of the span.
    pub fn dual_basis(&self, classes: &[OrbClass]) -> Result<Vec<OrbClass>> {
        let g: Vec<Vec<EqScalar>> = classes
            .iter()
            .map(|a| classes.iter().map(|b| self.pairing(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let inv = linalg::invert(&g).ok_or_else(|| Error::SingularGram("dual basis".into()))?;
        let mut out = Vec::new();
        for i in 0..classes.len() {
            let mut acc = OrbClass::zero(self.n);
            for (v, c) in classes.iter().enumerate() {
                if !inv[v][i].is_zero() {
                    acc = acc.add(&c.scale(&inv[v][i]))?;
                }
            }
            out.push(acc);
        }
        Ok(out)
    }
}

/// `n · dim X + k - 3 - Σ age(σ_i)`.
pub fn virtual_dimension(sectors: &[Partition], n: u32, dim_x: u32) -> Result<i64> {
    let mut ages = 0i64;
    for s in sectors {
        ages += crate::partitions::age(s, n)? as i64;
    }
    Ok((n * dim_x) as i64 + sectors.len() as i64 - 3 - ages)
}

/// Whether the identity lies in `C_{λ1} C_{λ2} C_{λ3}`.
pub fn monodromy_admissible(l1: &Partition, l2: &Partition, l3: &Partition) -> Result<bool> {
    let n = l1.size();
    if l2.size() != n || l3.size() != n {
        return Err(Error::SizeMismatch(format!("{l1}, {l2}, {l3}")));
    }
    let alg = ClassAlgebra::for_n(n);
    Ok(!alg.identity_coefficient(l1, l2, l3).is_zero())
}
