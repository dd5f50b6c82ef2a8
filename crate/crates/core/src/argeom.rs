//! Torus-equivariant geometry of the `A_r` resolution: fixed points, tangent
//! weights, divisor restrictions and Atiyah–Bott integration.
//!
//! Fixed points are `x_1, ..., x_{r+1}`; the exceptional curve `E_k` joins
//! `x_k` and `x_{k+1}`. All indices in the public API are 1-based.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exactalg::{linalg, EqScalar, Rational};
use crate::partitions::CohLabel;

/// `(L_i, R_i)` at fixed point `x_i` of `A_r`.
pub fn tangent_weights(r: u32, i: u32) -> Result<(EqScalar, EqScalar)> {
    if r == 0 || i == 0 || i > r + 1 {
        return Err(Error::OutOfRange(format!("fixed point {i} of A_{r}")));
    }
    let (r, i) = (r as i64, i as i64);
    Ok((
        EqScalar::linear(r - i + 2, 1 - i),
        EqScalar::linear(-r + i - 1, i),
    ))
}

/// Which weight `E_k` restricts to at its two endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RestrictionConvention {
    /// `E_k|x_k = L_k`, `E_k|x_{k+1} = R_{k+1}` (the normal weights).
    #[default]
    Normal,
    /// `E_k|x_k = R_k`, `E_k|x_{k+1} = L_{k+1}`: the tangent weights of the
    /// curve itself. Wrong on purpose; exists so the Cartan check can be
    /// shown to catch it.
    TangentSwapped,
}

/// A class on `A_r` stored by its restrictions to the fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    restrictions: Vec<EqScalar>,
    e_coords: Option<Vec<Rational>>,
}

impl DivisorClass {
    pub fn from_restrictions(restrictions: Vec<EqScalar>) -> Self {
        DivisorClass {
            restrictions,
            e_coords: None,
        }
    }

    pub fn restrictions(&self) -> &[EqScalar] {
        &self.restrictions
    }

    /// Restriction to `x_i` (1-based).
    pub fn at(&self, i: u32) -> &EqScalar {
        &self.restrictions[i as usize - 1]
    }

    /// Coordinates in the `E_k` basis when known.
    pub fn e_coords(&self) -> Option<&[Rational]> {
        self.e_coords.as_deref()
    }

    pub fn is_supported_on(&self, points: &[u32]) -> bool {
        self.restrictions
            .iter()
            .enumerate()
            .all(|(i, v)| v.is_zero() || points.contains(&(i as u32 + 1)))
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        let e_coords = match (&self.e_coords, &other.e_coords) {
            (Some(a), Some(b)) => Some(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            _ => None,
        };
        DivisorClass {
            restrictions: self.restrictions.iter().zip(&other.restrictions).map(|(a, b)| a + b).collect(),
            e_coords,
        }
    }

    pub fn scale(&self, c: &Rational) -> DivisorClass {
        DivisorClass {
            restrictions: self.restrictions.iter().map(|v| v.scale(c)).collect(),
            e_coords: self.e_coords.as_ref().map(|v| v.iter().map(|x| x * c).collect()),
        }
    }
}

/// `β = Σ d_k E_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass(Vec<i64>);

impl CurveClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        CurveClass(coeffs)
    }

    /// `d · E_k` on `A_r`.
    pub fn multiple_of(r: u32, k: u32, d: i64) -> Self {
        let mut v = vec![0; r as usize];
        v[k as usize - 1] = d;
        CurveClass(v)
    }

    /// `d · (E_i + ... + E_j)` on `A_r`.
    pub fn chain(r: u32, d: i64, i: u32, j: u32) -> Self {
        CurveClass(
            (1..=r)
                .map(|k| if (i..=j).contains(&k) { d } else { 0 })
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&d| d >= 0)
    }

    /// `β · ω_k = d_k`.
    pub fn dot_omega(&self, k: u32) -> i64 {
        self.0[k as usize - 1]
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for CurveClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad curve class {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CurveClass(v))
    }
}

/// `β = d · (E_i + ... + E_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chain {
    pub d: u32,
    pub i: u32,
    pub j: u32,
}

impl Chain {
    pub fn contains(&self, k: u32) -> bool {
        self.i <= k && k <= self.j
    }
}

/// Reads `β` as a multiple of a chain class, if it is one.
pub fn chain_decompose(beta: &CurveClass) -> Result<Option<Chain>> {
    if beta.is_zero() {
        return Err(Error::ZeroCurveClass);
    }
    let support: Vec<usize> = (0..beta.0.len()).filter(|&k| beta.0[k] != 0).collect();
    let (first, last) = (support[0], *support.last().unwrap());
    let d = beta.0[first];
    if d <= 0 || support.len() != last - first + 1 || support.iter().any(|&k| beta.0[k] != d) {
        return Ok(None);
    }
    Ok(Some(Chain {
        d: d as u32,
        i: first as u32 + 1,
        j: last as u32 + 1,
    }))
}

#[derive(Debug, Clone)]
pub struct ArSurface {
    r: u32,
    convention: RestrictionConvention,
    weights: Vec<(EqScalar, EqScalar)>,
    eulers: Vec<EqScalar>,
    intersection: Vec<Vec<i64>>,
    omega_coords: Vec<Vec<Rational>>,
}

impl ArSurface {
    pub fn new(r: u32) -> Result<Self> {
        ArSurface::with_convention(r, RestrictionConvention::Normal)
    }

    /// Built once per `(r, convention)` and cloned afterwards.
    pub fn with_convention(r: u32, convention: RestrictionConvention) -> Result<Self> {
        static CACHE: OnceLock<Mutex<HashMap<(u32, RestrictionConvention), ArSurface>>> = OnceLock::new();
        if r == 0 {
            return Err(Error::OutOfRange("A_r needs r >= 1".into()));
        }
        let cache = CACHE.get_or_init(Default::default);
        if let Some(s) = cache.lock().expect("cache lock").get(&(r, convention)) {
            return Ok(s.clone());
        }
        let s = ArSurface::build(r, convention)?;
        cache.lock().expect("cache lock").insert((r, convention), s.clone());
        Ok(s)
    }

    fn build(r: u32, convention: RestrictionConvention) -> Result<Self> {
        let weights = (1..=r + 1)
            .map(|i| tangent_weights(r, i))
            .collect::<Result<Vec<_>>>()?;
        let eulers = weights.iter().map(|(l, rr)| l * rr).collect();
        let n = r as usize;
        let intersection = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| match a.abs_diff(b) {
                        0 => -2,
                        1 => 1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        let mut s = ArSurface {
            r,
            convention,
            weights,
            eulers,
            intersection,
            omega_coords: Vec::new(),
        };
        s.omega_coords = s.solve_omegas();
        Ok(s)
    }

    fn solve_omegas(&self) -> Vec<Vec<Rational>> {
        // ∫ω_k E_i = Σ_l c_l ∫E_l E_i, so c = (column k of the inverse Gram).
        let gram: Vec<Vec<EqScalar>> = (1..=self.r)
            .map(|a| {
                (1..=self.r)
                    .map(|b| self.equivariant_integral(&[&self.e_class(a), &self.e_class(b)]))
                    .collect()
            })
            .collect();
        let inv = match linalg::invert(&gram) {
            Some(inv) => inv,
            // only reachable under a broken convention
            None => return Vec::new(),
        };
        (0..self.r as usize)
            .map(|k| {
                (0..self.r as usize)
                    .map(|l| inv[l][k].as_rational().unwrap_or_default())
                    .collect()
            })
            .collect()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn convention(&self) -> RestrictionConvention {
        self.convention
    }

    pub fn num_fixed_points(&self) -> u32 {
        self.r + 1
    }

    /// `(L_i, R_i)`.
    pub fn weights(&self, i: u32) -> Result<&(EqScalar, EqScalar)> {
        self.weights
            .get((i as usize).wrapping_sub(1))
            .ok_or_else(|| Error::OutOfRange(format!("fixed point {i} of A_{}", self.r)))
    }

    /// Equivariant Euler class `L_i R_i` of the tangent space at `x_i`.
    pub fn euler(&self, i: u32) -> &EqScalar {
        &self.eulers[i as usize - 1]
    }

    /// `(E_k · E_l)`, minus the `A_r` Cartan matrix.
    pub fn intersection_matrix(&self) -> &[Vec<i64>] {
        &self.intersection
    }

    fn check_k(&self, k: u32) -> Result<()> {
        if k == 0 || k > self.r {
            Err(Error::OutOfRange(format!("E_{k} on A_{}", self.r)))
        } else {
            Ok(())
        }
    }

    pub fn one(&self) -> DivisorClass {
        DivisorClass::from_restrictions(vec![EqScalar::one(); self.r as usize + 1])
    }

    /// `E_k`; panics on out-of-range `k` (use [`ArSurface::class_of`] for checked access).
    pub fn e_class(&self, k: u32) -> DivisorClass {
        self.check_k(k).expect("E_k index");
        let mut v = vec![EqScalar::zero(); self.r as usize + 1];
        let (lk, rk) = &self.weights[k as usize - 1];
        let (lk1, rk1) = &self.weights[k as usize];
        match self.convention {
            RestrictionConvention::Normal => {
                v[k as usize - 1] = lk.clone();
                v[k as usize] = rk1.clone();
            }
            RestrictionConvention::TangentSwapped => {
                v[k as usize - 1] = rk.clone();
                v[k as usize] = lk1.clone();
            }
        }
        let mut coords = vec![Rational::default(); self.r as usize];
        coords[k as usize - 1] = Rational::from_integer(1.into());
        DivisorClass {
            restrictions: v,
            e_coords: Some(coords),
        }
    }

    /// Point class `[x_i]`.
    pub fn fixed_class(&self, i: u32) -> DivisorClass {
        let mut v = vec![EqScalar::zero(); self.r as usize + 1];
        v[i as usize - 1] = self.euler(i).clone();
        DivisorClass::from_restrictions(v)
    }

    /// E-basis coordinates of `ω_k`.
    pub fn omega_coords(&self, k: u32) -> Result<&[Rational]> {
        self.check_k(k)?;
        self.omega_coords
            .get(k as usize - 1)
            .map(|v| v.as_slice())
            .ok_or_else(|| Error::Input("intersection matrix is singular under this convention".into()))
    }

    /// `ω_k`, the class with `∫ ω_k E_i = δ_{ki}`.
    pub fn omega_dual(&self, k: u32) -> Result<DivisorClass> {
        let coords = self.omega_coords(k)?.to_vec();
        let mut acc = DivisorClass {
            restrictions: vec![EqScalar::zero(); self.r as usize + 1],
            e_coords: Some(vec![Rational::default(); self.r as usize]),
        };
        for (l, c) in coords.iter().enumerate() {
            acc = acc.add(&self.e_class(l as u32 + 1).scale(c));
        }
        Ok(acc)
    }

    pub fn class_of(&self, label: CohLabel) -> Result<DivisorClass> {
        match label {
            CohLabel::One => Ok(self.one()),
            CohLabel::E(k) => {
                self.check_k(k)?;
                Ok(self.e_class(k))
            }
            CohLabel::Omega(k) => self.omega_dual(k),
            CohLabel::Fixed(i) => {
                if i == 0 || i > self.r + 1 {
                    return Err(Error::OutOfRange(format!("x_{i} on A_{}", self.r)));
                }
                Ok(self.fixed_class(i))
            }
        }
    }

    /// Restrictions of `1`, every `E_k` and every `[x_i]` to every fixed point.
    pub fn restriction_table(&self) -> BTreeMap<(CohLabel, u32), EqScalar> {
        let mut labels = vec![CohLabel::One];
        labels.extend((1..=self.r).map(CohLabel::E));
        labels.extend((1..=self.r + 1).map(CohLabel::Fixed));
        let mut out = BTreeMap::new();
        for l in labels {
            let c = self.class_of(l).expect("label in range");
            for i in 1..=self.r + 1 {
                out.insert((l, i), c.at(i).clone());
            }
        }
        out
    }

    /// Atiyah–Bott: `Σ_i ∏_c c|x_i / (L_i R_i)`.
    pub fn equivariant_integral(&self, classes: &[&DivisorClass]) -> EqScalar {
        (0..=self.r as usize)
            .map(|i| {
                let num: EqScalar = classes.iter().map(|c| c.restrictions[i].clone()).product();
                if num.is_zero() {
                    return EqScalar::zero();
                }
                num.checked_div(&self.eulers[i]).expect("Euler classes are nonzero")
            })
            .sum()
    }

    /// `β · D = Σ_k d_k ∫ E_k D`.
    pub fn curve_dot(&self, beta: &CurveClass, divisor: &DivisorClass) -> EqScalar {
        beta.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, d)| **d != 0)
            .map(|(k, d)| {
                self.equivariant_integral(&[&self.e_class(k as u32 + 1), divisor])
                    .scale(&Rational::from_integer((*d).into()))
            })
            .sum()
    }

    /// Coefficients of `[x_i]` when `label` is written in the fixed-point basis.
    pub fn label_to_fixed_basis(&self, label: CohLabel) -> Result<Vec<(u32, EqScalar)>> {
        if let CohLabel::Fixed(i) = label {
            self.class_of(label)?;
            return Ok(vec![(i, EqScalar::one())]);
        }
        let c = self.class_of(label)?;
        Ok((1..=self.r + 1)
            .filter(|&i| !c.at(i).is_zero())
            .map(|i| (i, c.at(i).checked_div(self.euler(i)).expect("nonzero Euler class")))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use proptest::prelude::*;

    fn s(x: &str) -> EqScalar {
        x.parse().unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(tangent_weights(1, 1).unwrap(), (s("2*t1"), s("-t1+t2")));
        assert_eq!(tangent_weights(2, 2).unwrap(), (s("2*t1-t2"), s("-t1+2*t2")));
        assert!(tangent_weights(2, 4).is_err());
        assert!(tangent_weights(2, 0).is_err());
    }

    #[test]
    fn weight_identities() {
        for r in 1..=10 {
            for i in 1..=r + 1 {
                let (l, rr) = tangent_weights(r, i).unwrap();
                assert_eq!(&l + &rr, EqScalar::t_sum());
                if i <= r {
                    assert_eq!(rr, -tangent_weights(r, i + 1).unwrap().0);
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let a1 = ArSurface::new(1).unwrap();
        let t = a1.restriction_table();
        assert_eq!(t[&(CohLabel::E(1), 1)], s("2*t1"));
        assert_eq!(t[&(CohLabel::E(1), 2)], s("2*t2"));
        assert_eq!(t[&(CohLabel::Fixed(2), 2)], s("(t1-t2)*2*t2"));
        assert!(t[&(CohLabel::Fixed(2), 1)].is_zero());
        let a2 = ArSurface::new(2).unwrap();
        assert!(a2.restriction_table()[&(CohLabel::E(1), 3)].is_zero());
        for k in 1..=5 {
            let a = ArSurface::new(5).unwrap();
            assert!(a.e_class(k).is_supported_on(&[k, k + 1]));
        }
    }

    #[test]
    fn cartan_collapse() {
        for r in 1..=5 {
            let a = ArSurface::new(r).unwrap();
            for k in 1..=r {
                for l in 1..=r {
                    let v = a.equivariant_integral(&[&a.e_class(k), &a.e_class(l)]);
                    assert_eq!(v, EqScalar::from_int(a.intersection_matrix()[k as usize - 1][l as usize - 1]));
                }
            }
            for i in 1..=r + 1 {
                assert!(a.equivariant_integral(&[&a.fixed_class(i)]).is_one());
            }
        }
    }

    #[test]
    fn swapped_convention_breaks_cartan() {
        let a = ArSurface::with_convention(1, RestrictionConvention::TangentSwapped).unwrap();
        let v = a.equivariant_integral(&[&a.e_class(1), &a.e_class(1)]);
        assert_ne!(v, EqScalar::from_int(-2));
    }

    #[test]
    fn small_integrals() {
        let a = ArSurface::new(1).unwrap();
        assert_eq!(a.equivariant_integral(&[]), s("1/(2*t1*t2)"));
        assert!(a.equivariant_integral(&[&a.e_class(1)]).is_zero());
    }

    #[test]
    fn omega_examples() {
        let a1 = ArSurface::new(1).unwrap();
        assert_eq!(a1.omega_coords(1).unwrap(), &[rat(-1, 2)]);
        let a2 = ArSurface::new(2).unwrap();
        assert_eq!(a2.omega_coords(1).unwrap(), &[rat(-2, 3), rat(-1, 3)]);
        for r in 1..=4 {
            let a = ArSurface::new(r).unwrap();
            for k in 1..=r {
                let w = a.omega_dual(k).unwrap();
                for i in 1..=r {
                    let v = a.equivariant_integral(&[&w, &a.e_class(i)]);
                    assert_eq!(v, EqScalar::from_int((k == i) as i64));
                }
            }
        }
    }

    #[test]
    fn chain_examples() {
        let c = |v: &[i64]| chain_decompose(&CurveClass::new(v.to_vec())).unwrap();
        assert_eq!(c(&[0, 2, 2]), Some(Chain { d: 2, i: 2, j: 3 }));
        assert_eq!(c(&[1, 0, 1]), None);
        assert_eq!(c(&[1, 1, 1]), Some(Chain { d: 1, i: 1, j: 3 }));
        assert_eq!(c(&[1, 2, 0]), None);
        assert_eq!(
            chain_decompose(&CurveClass::new(vec![0, 0])),
            Err(Error::ZeroCurveClass)
        );
        assert_eq!("1,0,2".parse::<CurveClass>().unwrap(), CurveClass::new(vec![1, 0, 2]));
    }

    #[test]
    fn fixed_basis_examples() {
        let a = ArSurface::new(1).unwrap();
        assert_eq!(
            a.label_to_fixed_basis(CohLabel::E(1)).unwrap(),
            vec![(1, s("1/(-t1+t2)")), (2, s("1/(t1-t2)"))]
        );
        assert_eq!(
            a.label_to_fixed_basis(CohLabel::One).unwrap(),
            vec![(1, s("1/(2*t1*(-t1+t2))")), (2, s("1/((t1-t2)*2*t2)"))]
        );
        assert_eq!(a.label_to_fixed_basis(CohLabel::Fixed(2)).unwrap(), vec![(2, EqScalar::one())]);
    }

    #[test]
    fn fixed_basis_round_trip() {
        for r in 1..=3 {
            let a = ArSurface::new(r).unwrap();
            for k in 1..=r {
                let expanded = a.label_to_fixed_basis(CohLabel::E(k)).unwrap();
                for l in 1..=r {
                    let el = a.e_class(l);
                    let v: EqScalar = expanded
                        .iter()
                        .map(|(i, c)| c * &a.equivariant_integral(&[&a.fixed_class(*i), &el]))
                        .sum();
                    assert_eq!(v, a.equivariant_integral(&[&a.e_class(k), &el]));
                }
            }
        }
    }

    #[test]
    fn chain_pairings() {
        // ℰ_23 · ω_2 = 1 and ℰ_23 · E_1 = 1 on A_3
        let a = ArSurface::new(3).unwrap();
        let chain = CurveClass::chain(3, 1, 2, 3);
        assert!(a.curve_dot(&chain, &a.omega_dual(2).unwrap()).is_one());
        assert!(a.curve_dot(&chain, &a.e_class(1)).is_one());
        assert!(a.curve_dot(&chain, &a.one()).is_zero());
    }

    proptest! {
        #[test]
        fn chain_iff_interval(v in prop::collection::vec(0i64..3, 1..6)) {
            prop_assume!(v.iter().any(|&x| x != 0));
            let support: Vec<usize> = (0..v.len()).filter(|&k| v[k] != 0).collect();
            let interval = support.last().unwrap() - support[0] + 1 == support.len();
            let constant = support.iter().all(|&k| v[k] == v[support[0]]);
            let got = chain_decompose(&CurveClass::new(v.clone())).unwrap();
            prop_assert_eq!(got.is_some(), interval && constant);
            if let Some(c) = got {
                prop_assert_eq!(CurveClass::chain(v.len() as u32, c.d as i64, c.i, c.j), CurveClass::new(v));
            }
        }
    }
}
