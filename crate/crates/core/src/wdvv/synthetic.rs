//! A consistent synthetic dataset for the solver.
//!
//! Start from the two-dimensional Frobenius algebra `H = span{1, E}` over
//! `Q[[s]]` with `E·E = α(s) E - 2`, `α = 1 + 3s + s^2`, `η(1,1) = 1`,
//! `η(E,E) = -2`, and build the symmetric-group orbifold product on
//! `⊕_σ H^{⊗ orbits(σ)}` of `S_3`. Its invariant part has the same ten
//! classes and sector pattern as the geometric basis, and is associative,
//! so every WDVV relation holds to all orders in `s`. None of these
//! numbers are geometric.

use std::collections::BTreeMap;

use super::{
    all_triples, export_entries, export_pairs, is_step_one, triple, EntryStatus, KnownData, PositiveDegree,
    Sym3Basis, ThreePtTable, Triple, A1, A2,
};
use crate::error::{Error, Result};
use crate::exactalg::{EqScalar, TruncatedSeries, VarSet};
use crate::hurwitz::{all_permutations, compose, Perm};
use crate::orbibasis::BasisContext;
use crate::partitions::{CohLabel, WeightedPartition};

/// Every entry is a polynomial in `s` of degree below this.
pub const EXACT_ORDER: u32 = 8;

const ETA: [i64; 2] = [1, -2];

type S = TruncatedSeries;
type Elt = [S; 2];
type Tensor = BTreeMap<Vec<u8>, S>;

struct Frobenius {
    order: u32,
    alpha: S,
}

impl Frobenius {
    fn new(order: u32) -> Self {
        let mut alpha = zero(order);
        for (e, c) in [(0, 1), (1, 3), (2, 1)] {
            alpha.add_term_truncating(vec![e], EqScalar::from_int(c));
        }
        Frobenius { order, alpha }
    }

    fn constant(&self, c: i64) -> S {
        TruncatedSeries::constant(VarSet::S(1), vec![self.order], EqScalar::from_int(c))
    }

    fn basis(&self, i: u8) -> Elt {
        if i == 0 {
            [self.constant(1), zero(self.order)]
        } else {
            [zero(self.order), self.constant(1)]
        }
    }

    fn mul(&self, u: &Elt, v: &Elt) -> Result<Elt> {
        let uv11 = u[1].mul(&v[1])?;
        let c0 = u[0].mul(&v[0])?.add(&uv11.scale(&EqScalar::from_int(-2)))?;
        let c1 = u[0].mul(&v[1])?.add(&u[1].mul(&v[0])?)?.add(&uv11.mul(&self.alpha)?)?;
        Ok([c0, c1])
    }

    /// `Σ_i e_i e_i^∨`.
    fn euler(&self) -> Result<Elt> {
        let ee = self.mul(&self.basis(1), &self.basis(1))?;
        let half = EqScalar::frac(1, ETA[1]);
        Ok([
            self.constant(1).add(&ee[0].scale(&half))?,
            ee[1].scale(&half),
        ])
    }

    /// Adjoint of the `m`-fold product: coefficients on `e_{i1} ⊗ ... ⊗ e_{im}`.
    fn comult(&self, x: &Elt, m: usize) -> Result<Vec<(Vec<u8>, S)>> {
        let mut out = Vec::new();
        for bits in 0..(1u32 << m) {
            let idx: Vec<u8> = (0..m).map(|k| ((bits >> k) & 1) as u8).collect();
            let mut prod = self.basis(0);
            let mut norm = 1i64;
            for &i in &idx {
                prod = self.mul(&prod, &self.basis(i))?;
                norm *= ETA[i as usize];
            }
            let mut eta = zero(self.order);
            for k in 0..2 {
                eta = eta.add(&x[k].mul(&prod[k])?.scale(&EqScalar::from_int(ETA[k])))?;
            }
            if !eta.is_zero() {
                out.push((idx, eta.scale(&EqScalar::frac(1, norm))));
            }
        }
        Ok(out)
    }
}

fn zero(order: u32) -> S {
    TruncatedSeries::zero(VarSet::S(1), vec![order])
}

/// Orbits of the group generated by `gens`, each sorted, ordered by minimum.
fn orbits(gens: &[&Perm], n: usize) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut orbit = vec![start];
        label[start] = id;
        let mut k = 0;
        while k < orbit.len() {
            let i = orbit[k];
            for g in gens {
                let j = g[i] as usize;
                if label[j] == usize::MAX {
                    label[j] = id;
                    orbit.push(j);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

fn containing(small: &[Vec<usize>], big: &[Vec<usize>]) -> Vec<usize> {
    small
        .iter()
        .map(|o| big.iter().position(|b| b.contains(&o[0])).expect("orbits refine"))
        .collect()
}

/// Element of `⊕_σ H^{⊗ orbits(σ)}`.
#[derive(Debug, Clone, Default, PartialEq)]
struct SymElt(BTreeMap<Perm, Tensor>);

impl SymElt {
    fn add_at(&mut self, p: &Perm, idx: Vec<u8>, c: S) -> Result<()> {
        let t = self.0.entry(p.clone()).or_default();
        let cur = match t.remove(&idx) {
            Some(v) => v.add(&c)?,
            None => c,
        };
        if !cur.is_zero() {
            t.insert(idx, cur);
        }
        Ok(())
    }
}

struct Model {
    h: Frobenius,
    n: usize,
}

impl Model {
    fn class(&self, w: &WeightedPartition) -> Result<SymElt> {
        let mut out = SymElt::default();
        for p in all_permutations(self.n as u32) {
            let orb = orbits(&[&p], self.n);
            for bits in 0..(1u32 << orb.len()) {
                let idx: Vec<u8> = (0..orb.len()).map(|k| ((bits >> k) & 1) as u8).collect();
                let terms = orb
                    .iter()
                    .zip(&idx)
                    .map(|(o, &i)| (o.len() as u32, if i == 0 { CohLabel::One } else { CohLabel::E(1) }))
                    .collect();
                if WeightedPartition::new(terms)? == *w {
                    out.add_at(&p, idx, self.h.constant(1))?;
                }
            }
        }
        Ok(out)
    }

    fn product(&self, x: &SymElt, y: &SymElt) -> Result<SymElt> {
        let mut out = SymElt::default();
        let euler = self.h.euler()?;
        for (pi, tx) in &x.0 {
            for (sigma, ty) in &y.0 {
                let ps = compose(pi, sigma);
                let po = orbits(&[pi], self.n);
                let qo = orbits(&[sigma], self.n);
                let ro = orbits(&[&ps], self.n);
                let ho = orbits(&[pi, sigma], self.n);
                let (p_in, q_in, r_in) = (containing(&po, &ho), containing(&qo, &ho), containing(&ro, &ho));
                let count = |v: &[usize], h: usize| v.iter().filter(|&&k| k == h).count();
                let defects: Vec<usize> = (0..ho.len())
                    .map(|h| (ho[h].len() + 2 - count(&p_in, h) - count(&q_in, h) - count(&r_in, h)) / 2)
                    .collect();
                let r_of_h: Vec<Vec<usize>> = (0..ho.len())
                    .map(|h| (0..ro.len()).filter(|&r| r_in[r] == h).collect())
                    .collect();
                for (ax, cx) in tx {
                    for (ay, cy) in ty {
                        let mut factors: Vec<Elt> = (0..ho.len()).map(|_| self.h.basis(0)).collect();
                        for (p, &i) in ax.iter().enumerate() {
                            factors[p_in[p]] = self.h.mul(&factors[p_in[p]], &self.h.basis(i))?;
                        }
                        for (q, &i) in ay.iter().enumerate() {
                            factors[q_in[q]] = self.h.mul(&factors[q_in[q]], &self.h.basis(i))?;
                        }
                        let mut partial: Vec<(Vec<u8>, S)> = vec![(vec![0; ro.len()], cx.mul(cy)?)];
                        for h in 0..ho.len() {
                            for _ in 0..defects[h] {
                                factors[h] = self.h.mul(&factors[h], &euler)?;
                            }
                            let pieces = self.h.comult(&factors[h], r_of_h[h].len())?;
                            let mut next = Vec::new();
                            for (idx, c) in &partial {
                                for (sub, d) in &pieces {
                                    let mut idx = idx.clone();
                                    for (k, &r) in r_of_h[h].iter().enumerate() {
                                        idx[r] = sub[k];
                                    }
                                    next.push((idx, c.mul(d)?));
                                }
                            }
                            partial = next;
                        }
                        for (idx, c) in partial {
                            out.add_at(&ps, idx, c)?;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Integral over the untwisted component.
    fn trace(&self, x: &SymElt) -> Result<S> {
        let id: Perm = (0..self.n as u8).collect();
        let mut acc = zero(self.h.order);
        if let Some(t) = x.0.get(&id) {
            for (idx, c) in t {
                if idx.iter().all(|&i| i == 0) {
                    acc = acc.add(&c.scale(&EqScalar::from_int(ETA[0].pow(idx.len() as u32))))?;
                }
            }
        }
        Ok(acc)
    }
}

/// The full synthetic table to `s_order`, all entries marked known.
pub fn synthetic_complete(s_order: u32) -> Result<ThreePtTable> {
    let basis = Sym3Basis::new();
    let model = Model {
        h: Frobenius::new(s_order),
        n: 3,
    };
    let elts = basis.classes().iter().map(|w| model.class(w)).collect::<Result<Vec<_>>>()?;
    let k = elts.len();
    let mut prods: BTreeMap<(usize, usize), SymElt> = BTreeMap::new();
    let mut gram = vec![vec![EqScalar::zero(); k]; k];
    for i in 0..k {
        for j in i..k {
            let p = model.product(&elts[i], &elts[j])?;
            let g = model.trace(&p)?;
            if g.terms().any(|(e, _)| e[0] > 0) {
                return Err(Error::Input("synthetic pairing depends on s".into()));
            }
            gram[i][j] = g.constant_term();
            gram[j][i] = g.constant_term();
            prods.insert((i, j), p);
        }
    }
    let ctx = BasisContext::from_gram(basis.classes().to_vec(), gram)?;
    let mut table = ThreePtTable::blank(ctx, s_order)?;
    for t in all_triples() {
        let v = model.trace(&model.product(&prods[&(t[0], t[1])], &elts[t[2]])?)?;
        table.set(t, v, EntryStatus::KnownInput)?;
    }
    Ok(table)
}

fn known_from(table: &ThreePtTable, keep: impl Fn(&Triple) -> bool) -> KnownData {
    KnownData {
        pairs: Some(export_pairs(table.context())),
        entries: export_entries(table, keep),
        s_order: Some(table.s_order()),
        positive_degree: PositiveDegree::Input,
        unknown: Vec::new(),
    }
}

/// Seed input: pairing plus the step-(1) entries.
pub fn synthetic_known() -> Result<KnownData> {
    Ok(known_from(&synthetic_complete(EXACT_ORDER)?, is_step_one))
}

/// Every nonzero entry, for comparison with a solved table.
pub fn synthetic_full() -> Result<KnownData> {
    Ok(known_from(&synthetic_complete(EXACT_ORDER)?, |_| true))
}

/// Seed input whose step-(3) pivot `⟨a2^∨, a1, a1⟩` has zero `s^0` term.
pub fn pivot_failure_fixture() -> Result<KnownData> {
    let mut data = synthetic_known()?;
    let target = triple(A1, A1, A2).map(|i| Sym3Basis::name(i).to_string());
    let e = data
        .entries
        .iter_mut()
        .find(|e| e.triple == target)
        .ok_or_else(|| Error::Input("fixture lacks <a1,a1,a2>".into()))?;
    e.series.retain(|t| t.s != 0);
    Ok(data)
}

/// Seed input withholding `⟨a1, a2, a2⟩`, which step (3) consumes.
pub fn out_of_order_fixture() -> Result<KnownData> {
    let mut data = synthetic_known()?;
    let t = triple(A1, A2, A2).map(|i| Sym3Basis::name(i).to_string());
    data.entries.retain(|e| e.triple != t);
    data.unknown.push(t);
    Ok(data)
}

/// File names and contents of the shipped fixtures.
pub fn fixture_files() -> Result<Vec<(&'static str, String)>> {
    Ok(vec![
        ("synthetic_sym3.json", synthetic_known()?.to_json()),
        ("synthetic_sym3_full.json", synthetic_full()?.to_json()),
        ("synthetic_pivot_failure.json", pivot_failure_fixture()?.to_json()),
        ("synthetic_out_of_order.json", out_of_order_fixture()?.to_json()),
    ])
}
