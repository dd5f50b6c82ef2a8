//! WDVV elimination for the ten-class basis of `Sym^3(A_1)`.
//!
//! Three-point functions live in a [`ThreePtTable`] keyed by sorted index
//! triples. Seeding fills the entries with an `a0`, `a1` or `b0` insertion
//! and stamps the monodromy-forbidden ones to zero; [`solve_procedure`]
//! then eliminates the rest in a fixed order, checking every pivot it
//! divides by.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::argeom::{ArSurface, CurveClass};
use crate::error::{Error, Result};
use crate::exactalg::{EqScalar, Rational, TruncatedSeries, VarSet};
use crate::invariants::{three_point_divisor, DivisorInsertion};
use crate::orbibasis::{monodromy_admissible, BasisContext, OrbClass};
use crate::partitions::{CohLabel, Partition, WeightedPartition};

pub mod io;
pub mod synthetic;

pub use io::{EntryData, KnownData, PairValue, PositiveDegree, SeriesTerm};

pub const A0: usize = 0;
pub const A1: usize = 1;
pub const A2: usize = 2;
pub const A3: usize = 3;
pub const B0: usize = 4;
pub const B1: usize = 5;
pub const B2: usize = 6;
pub const B3: usize = 7;
pub const C0: usize = 8;
pub const C1: usize = 9;

const NAMES: [&str; 10] = ["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3", "c0", "c1"];

/// `a_k = 1(1)^{3-k} 1(E1)^k`, `b = 1(.) 2(.)`, `c = 3(.)`; ages 0, 1, 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sym3Basis {
    classes: Vec<WeightedPartition>,
}

impl Default for Sym3Basis {
    fn default() -> Self {
        Sym3Basis::new()
    }
}

impl Sym3Basis {
    pub fn new() -> Self {
        let one = CohLabel::One;
        let e = CohLabel::E(1);
        let w = |t: Vec<(u32, CohLabel)>| WeightedPartition::new(t).expect("valid basis term");
        let classes = vec![
            w(vec![(1, one), (1, one), (1, one)]),
            w(vec![(1, one), (1, one), (1, e)]),
            w(vec![(1, one), (1, e), (1, e)]),
            w(vec![(1, e), (1, e), (1, e)]),
            w(vec![(1, one), (2, one)]),
            w(vec![(1, e), (2, one)]),
            w(vec![(1, one), (2, e)]),
            w(vec![(1, e), (2, e)]),
            w(vec![(3, one)]),
            w(vec![(3, e)]),
        ];
        Sym3Basis { classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[WeightedPartition] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &WeightedPartition {
        &self.classes[i]
    }

    pub fn name(i: usize) -> &'static str {
        NAMES[i]
    }

    pub fn index(name: &str) -> Option<usize> {
        NAMES.iter().position(|&n| n == name)
    }

    pub fn sector(&self, i: usize) -> Partition {
        self.classes[i].underlying().expect("nonempty class")
    }

    pub fn age(&self, i: usize) -> u32 {
        crate::partitions::age(&self.sector(i), 3).expect("n = 3")
    }
}

/// Sorted index triple.
pub type Triple = [usize; 3];

pub fn triple(a: usize, b: usize, c: usize) -> Triple {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

pub fn triple_name(t: &Triple) -> String {
    format!("<{},{},{}>", NAMES[t[0]], NAMES[t[1]], NAMES[t[2]])
}

/// All `C(12, 3) = 220` unordered triples.
pub fn all_triples() -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..10 {
        for b in a..10 {
            for c in b..10 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Triples with an `a0`, `a1` or `b0` insertion.
pub fn is_step_one(t: &Triple) -> bool {
    t.iter().any(|&i| i == A0 || i == A1 || i == B0)
}

fn parse_triple(names: &[String; 3]) -> Result<Triple> {
    let mut idx = [0; 3];
    for (k, n) in names.iter().enumerate() {
        idx[k] = Sym3Basis::index(n).ok_or_else(|| Error::Input(format!("unknown basis class {n:?}")))?;
    }
    Ok(triple(idx[0], idx[1], idx[2]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryStatus {
    KnownInput,
    Derived,
    StructurallyZero,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Entry {
    status: EntryStatus,
    value: Option<TruncatedSeries>,
}

/// Three-point functions as series in `s1`, with a status per entry.
#[derive(Debug, Clone)]
pub struct ThreePtTable {
    basis: Sym3Basis,
    ctx: BasisContext,
    s_order: u32,
    entries: BTreeMap<Triple, Entry>,
}

impl ThreePtTable {
    /// Everything unknown except the monodromy-forbidden triples.
    pub fn blank(ctx: BasisContext, s_order: u32) -> Result<Self> {
        let basis = Sym3Basis::new();
        if ctx.basis() != basis.classes() {
            return Err(Error::Input("pairing context is not over the Sym^3 basis".into()));
        }
        let mut entries = BTreeMap::new();
        for t in all_triples() {
            let ok = monodromy_admissible(&basis.sector(t[0]), &basis.sector(t[1]), &basis.sector(t[2]))?;
            let entry = if ok {
                Entry { status: EntryStatus::Unknown, value: None }
            } else {
                Entry {
                    status: EntryStatus::StructurallyZero,
                    value: Some(zero_series(s_order)),
                }
            };
            entries.insert(t, entry);
        }
        Ok(ThreePtTable { basis, ctx, s_order, entries })
    }

    pub fn basis(&self) -> &Sym3Basis {
        &self.basis
    }

    pub fn context(&self) -> &BasisContext {
        &self.ctx
    }

    pub fn s_order(&self) -> u32 {
        self.s_order
    }

    pub fn status(&self, t: &Triple) -> EntryStatus {
        self.entries[&triple(t[0], t[1], t[2])].status
    }

    pub fn value(&self, t: &Triple) -> Option<&TruncatedSeries> {
        self.entries[&triple(t[0], t[1], t[2])].value.as_ref()
    }

    /// `⟨x, y, z⟩` in any argument order.
    pub fn get(&self, x: usize, y: usize, z: usize) -> Option<&TruncatedSeries> {
        self.value(&triple(x, y, z))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Triple, EntryStatus, Option<&TruncatedSeries>)> {
        self.entries.iter().map(|(t, e)| (t, e.status, e.value.as_ref()))
    }

    /// Stores a value; a monodromy-forbidden entry only accepts zero.
    pub fn set(&mut self, t: Triple, value: TruncatedSeries, status: EntryStatus) -> Result<()> {
        let t = triple(t[0], t[1], t[2]);
        let value = value.truncate(&[self.s_order])?;
        let e = self.entries.get_mut(&t).expect("all triples present");
        if e.status == EntryStatus::StructurallyZero {
            if !value.is_zero() {
                return Err(Error::Input(format!("{} is forced to vanish", triple_name(&t))));
            }
            return Ok(());
        }
        *e = Entry { status, value: Some(value) };
        Ok(())
    }

    /// Marks an entry unknown again.
    pub fn forget(&mut self, t: Triple) {
        let e = self.entries.get_mut(&triple(t[0], t[1], t[2])).expect("all triples present");
        if e.status != EntryStatus::StructurallyZero {
            *e = Entry { status: EntryStatus::Unknown, value: None };
        }
    }

    pub fn unknown(&self) -> Vec<Triple> {
        self.entries
            .iter()
            .filter(|(_, e)| e.status == EntryStatus::Unknown)
            .map(|(t, _)| *t)
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.unknown().is_empty()
    }

    /// Same entries, different pairing.
    pub fn with_context(&self, ctx: BasisContext) -> Result<Self> {
        if ctx.basis() != self.basis.classes() {
            return Err(Error::Input("pairing context is not over the Sym^3 basis".into()));
        }
        Ok(ThreePtTable { ctx, ..self.clone() })
    }

    /// Same table at a smaller `s`-order.
    pub fn truncated(&self, s_order: u32) -> Result<Self> {
        let mut out = self.clone();
        out.s_order = s_order;
        for e in out.entries.values_mut() {
            if let Some(v) = &e.value {
                e.value = Some(v.truncate(&[s_order])?);
            }
        }
        Ok(out)
    }

    fn known(&self, t: &Triple) -> Option<&TruncatedSeries> {
        let e = &self.entries[t];
        match e.status {
            EntryStatus::Unknown => None,
            _ => e.value.as_ref(),
        }
    }
}

fn zero_series(order: u32) -> TruncatedSeries {
    TruncatedSeries::zero(VarSet::S(1), vec![order])
}

/// `Σ_α ⟨x, y, α⟩ ⟨α^∨, z, w⟩` with the dual already expanded:
/// one term per `α`, carrying `Σ_β (G^{-1})_{αβ} ⟨β, z, w⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelTerm {
    pub alpha: usize,
    pub entry: Triple,
    pub dual: Vec<(EqScalar, Triple)>,
}

/// `Σ_α ⟨x,y,α⟩⟨α^∨,z,w⟩ = Σ_α ⟨x,z,α⟩⟨α^∨,y,w⟩` for `(x, y, z, w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub quadruple: [usize; 4],
    pub lhs: Vec<RelTerm>,
    pub rhs: Vec<RelTerm>,
}

fn dual_terms(ctx: &BasisContext, alpha: usize, z: usize, w: usize) -> Vec<(EqScalar, Triple)> {
    let inv = ctx.inverse_gram();
    (0..inv.len())
        .filter(|&b| !inv[alpha][b].is_zero())
        .map(|b| (inv[alpha][b].clone(), triple(b, z, w)))
        .collect()
}

fn channel(ctx: &BasisContext, x: usize, y: usize, z: usize, w: usize) -> Vec<RelTerm> {
    (0..ctx.basis().len())
        .map(|alpha| RelTerm {
            alpha,
            entry: triple(x, y, alpha),
            dual: dual_terms(ctx, alpha, z, w),
        })
        .collect()
}

/// Relation between the channels `(x y | z w)` and `(x z | y w)`.
pub fn wdvv_relation(ctx: &BasisContext, q: [usize; 4]) -> Relation {
    let [x, y, z, w] = q;
    Relation {
        quadruple: q,
        lhs: channel(ctx, x, y, z, w),
        rhs: channel(ctx, x, z, y, w),
    }
}

/// Value of one term: a known part plus a multiple of the target.
struct TermValue {
    known: TruncatedSeries,
    target: TruncatedSeries,
}

fn out_of_order(step: &str, t: &Triple) -> Error {
    Error::OutOfOrder {
        step: step.into(),
        entry: triple_name(t),
    }
}

fn eval_dual(table: &ThreePtTable, dual: &[(EqScalar, Triple)]) -> Result<(TruncatedSeries, Vec<(EqScalar, Triple)>)> {
    let mut known = zero_series(table.s_order);
    let mut unknown = Vec::new();
    for (c, t) in dual {
        match table.known(t) {
            Some(v) => known = known.add(&v.scale(c))?,
            None => unknown.push((c.clone(), *t)),
        }
    }
    Ok((known, unknown))
}

/// Terms whose partner factor vanishes are dropped even if unknown.
fn eval_term(table: &ThreePtTable, term: &RelTerm, target: Option<&Triple>, step: &str) -> Result<TermValue> {
    let zero = zero_series(table.s_order);
    let (d_known, d_unknown) = eval_dual(table, &term.dual)?;
    match table.known(&term.entry) {
        Some(f) => {
            if f.is_zero() {
                return Ok(TermValue { known: zero.clone(), target: zero });
            }
            let mut coeff = zero;
            for (c, u) in &d_unknown {
                if Some(u) != target {
                    return Err(out_of_order(step, u));
                }
                coeff = coeff.add(&f.scale(c))?;
            }
            Ok(TermValue {
                known: f.mul(&d_known)?,
                target: coeff,
            })
        }
        None => {
            if let Some((_, u)) = d_unknown.iter().find(|(_, u)| Some(u) != target) {
                return Err(out_of_order(step, u));
            }
            if !d_unknown.is_empty() {
                // target on both sides of a product: not linear
                return Err(out_of_order(step, &term.entry));
            }
            if d_known.is_zero() {
                return Ok(TermValue { known: zero.clone(), target: zero });
            }
            if Some(&term.entry) != target {
                return Err(out_of_order(step, &term.entry));
            }
            Ok(TermValue { known: zero, target: d_known })
        }
    }
}

impl Relation {
    /// The same constraint with its two channels exchanged.
    pub fn swapped(&self) -> Relation {
        let [x, y, z, w] = self.quadruple;
        Relation {
            quadruple: [x, z, y, w],
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
        }
    }

    /// `lhs - rhs` on a table with every needed entry known.
    pub fn evaluate(&self, table: &ThreePtTable) -> Result<TruncatedSeries> {
        let (k, _) = self.linear_in(table, None, "evaluate")?;
        Ok(k)
    }

    /// Writes `lhs - rhs = K + P · target`.
    fn linear_in(&self, table: &ThreePtTable, target: Option<&Triple>, step: &str) -> Result<(TruncatedSeries, TruncatedSeries)> {
        let mut k = zero_series(table.s_order);
        let mut p = zero_series(table.s_order);
        for (side, sign) in [(&self.lhs, 1i64), (&self.rhs, -1)] {
            let sign = EqScalar::from_int(sign);
            for term in side {
                let v = eval_term(table, term, target, step)?;
                k = k.add(&v.known.scale(&sign))?;
                p = p.add(&v.target.scale(&sign))?;
            }
        }
        Ok((k, p))
    }

    /// Number of terms that still involve an unknown, nonzero entry.
    pub fn unknown_bearing_terms(&self, table: &ThreePtTable) -> usize {
        self.lhs
            .iter()
            .chain(&self.rhs)
            .filter(|t| {
                std::iter::once(&t.entry)
                    .chain(t.dual.iter().map(|(_, u)| u))
                    .any(|u| table.status(u) == EntryStatus::Unknown)
            })
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PivotRequirement {
    Vanishes,
    Invertible,
}

/// A required property of `⟨α^∨, z, w⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PivotClaim {
    pub step: &'static str,
    pub alpha: usize,
    pub z: usize,
    pub w: usize,
    pub requirement: PivotRequirement,
}

impl fmt::Display for PivotClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = format!("<{}^v,{},{}>", NAMES[self.alpha], NAMES[self.z], NAMES[self.w]);
        match self.requirement {
            PivotRequirement::Vanishes => write!(f, "{e} = 0"),
            PivotRequirement::Invertible => write!(f, "{e} has an invertible s^0 term"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PivotClass {
    Zero,
    Invertible,
    /// Nonzero with vanishing `s^0` term.
    Singular,
}

fn claim(step: &'static str, alpha: usize, z: usize, w: usize, requirement: PivotRequirement) -> PivotClaim {
    PivotClaim { step, alpha, z, w, requirement }
}

fn claims_for(step: &'static str) -> Vec<PivotClaim> {
    use PivotRequirement::*;
    match step {
        "3" | "4" => vec![
            claim(step, A3, A1, A1, Vanishes),
            claim(step, A2, A1, A1, Invertible),
            claim(step, A3, A1, A2, Invertible),
        ],
        "5" => vec![claim(step, C1, B0, B0, Vanishes), claim(step, C0, B0, B0, Invertible)],
        "6" => vec![claim(step, C1, C0, A1, Invertible)],
        _ => Vec::new(),
    }
}

/// Every pivot property the procedure relies on, in order.
pub fn pivot_claims() -> Vec<PivotClaim> {
    ["3", "5", "6"].into_iter().flat_map(claims_for).collect()
}

fn dual_value(table: &ThreePtTable, alpha: usize, z: usize, w: usize, step: &str) -> Result<TruncatedSeries> {
    let (known, unknown) = eval_dual(table, &dual_terms(&table.ctx, alpha, z, w))?;
    if let Some((_, u)) = unknown.first() {
        return Err(out_of_order(step, u));
    }
    Ok(known)
}

fn classify(s: &TruncatedSeries) -> PivotClass {
    if s.is_zero() {
        PivotClass::Zero
    } else if s.constant_term().is_zero() {
        PivotClass::Singular
    } else {
        PivotClass::Invertible
    }
}

/// Zero / invertible status of each pivot on the given table.
pub fn classify_pivots(table: &ThreePtTable) -> Result<Vec<(PivotClaim, PivotClass)>> {
    pivot_claims()
        .into_iter()
        .map(|c| {
            let v = dual_value(table, c.alpha, c.z, c.w, c.step)?;
            Ok((c, classify(&v)))
        })
        .collect()
}

fn check_claims(table: &ThreePtTable, step: &'static str) -> Result<Vec<String>> {
    let mut done = Vec::new();
    for c in claims_for(step) {
        let class = classify(&dual_value(table, c.alpha, c.z, c.w, step)?);
        let ok = match c.requirement {
            PivotRequirement::Vanishes => class == PivotClass::Zero,
            PivotRequirement::Invertible => class == PivotClass::Invertible,
        };
        if !ok {
            return Err(Error::PivotFailure {
                step: step.into(),
                claim: c.to_string(),
            });
        }
        done.push(c.to_string());
    }
    Ok(done)
}

/// Iteration order over the targets inside a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolveOrder {
    #[default]
    Canonical,
    Reversed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub step: String,
    pub checked: Vec<String>,
    pub solved: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SolveReport {
    pub steps: Vec<StepRecord>,
}

/// One elimination: `target` from the relation on `quadruple`.
struct Task {
    target: Triple,
    quadruple: [usize; 4],
}

fn without_one(t: &Triple, x: usize) -> Option<(usize, usize)> {
    let k = t.iter().position(|&i| i == x)?;
    let rest: Vec<usize> = (0..3).filter(|&j| j != k).map(|j| t[j]).collect();
    Some((rest[0], rest[1]))
}

fn tasks(
    table: &ThreePtTable,
    order: SolveOrder,
    slot: usize,
    allowed: &[usize],
    partners: (usize, usize),
) -> Vec<Task> {
    let mut out: Vec<Task> = table
        .unknown()
        .into_iter()
        .filter_map(|t| {
            let (p, q) = without_one(&t, slot)?;
            (allowed.contains(&p) && allowed.contains(&q)).then_some(Task {
                target: t,
                quadruple: [p, q, partners.0, partners.1],
            })
        })
        .collect();
    if order == SolveOrder::Reversed {
        out.reverse();
    }
    out
}

fn run_tasks(table: &mut ThreePtTable, tasks: Vec<Task>, step: &str, solved: &mut Vec<String>) -> Result<()> {
    for task in tasks {
        let rel = wdvv_relation(&table.ctx, task.quadruple);
        let (k, p) = rel.linear_in(table, Some(&task.target), step)?;
        if p.constant_term().is_zero() {
            return Err(Error::PivotFailure {
                step: step.into(),
                claim: format!("coefficient of {} has an invertible s^0 term", triple_name(&task.target)),
            });
        }
        let u = k.neg().div(&p)?;
        table.set(task.target, u, EntryStatus::Derived)?;
        solved.push(triple_name(&task.target));
    }
    Ok(())
}

/// Steps (3)–(6) on a seeded table.
pub fn solve_procedure(table: &ThreePtTable) -> Result<ThreePtTable> {
    solve_with_order(table, SolveOrder::Canonical).map(|(t, _)| t)
}

pub fn solve_with_order(table: &ThreePtTable, order: SolveOrder) -> Result<(ThreePtTable, SolveReport)> {
    let mut t = table.clone();
    let mut report = SolveReport::default();
    let a_high = [A2, A3];
    let b_high = [B1, B2, B3];
    let cs = [C0, C1];
    let plan: [(&'static str, Vec<(usize, Vec<usize>, (usize, usize))>); 4] = [
        ("3", vec![(A2, a_high.to_vec(), (A1, A1)), (A3, vec![A3], (A1, A2))]),
        (
            "4",
            vec![
                (A2, b_high.to_vec(), (A1, A1)),
                (A2, cs.to_vec(), (A1, A1)),
                (A3, b_high.to_vec(), (A1, A2)),
                (A3, cs.to_vec(), (A1, A2)),
            ],
        ),
        ("5", vec![(C0, vec![B1, B2, B3, C0, C1], (B0, B0))]),
        ("6", vec![(C1, vec![B1, B2, B3, C1], (C0, A1))]),
    ];
    for (step, parts) in plan {
        let checked = check_claims(&t, step)?;
        let mut solved = Vec::new();
        for (slot, allowed, partners) in parts {
            let todo = tasks(&t, order, slot, &allowed, partners);
            run_tasks(&mut t, todo, step, &mut solved)?;
        }
        report.steps.push(StepRecord {
            step: step.into(),
            checked,
            solved,
        });
    }
    if let Some(u) = t.unknown().first() {
        return Err(out_of_order("final", u));
    }
    Ok((t, report))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub quadruple: [String; 4],
    pub channels: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    /// Relations were compared through `s^{s_order}`.
    pub s_order: u32,
    pub relations_checked: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

type Pair = [usize; 2];

fn pair(a: usize, b: usize) -> Pair {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

fn channel_label(p: Pair, q: Pair) -> String {
    format!("{}{}|{}{}", NAMES[p[0]], NAMES[p[1]], NAMES[q[0]], NAMES[q[1]])
}

/// Every relation over all quadruples of basis classes.
pub fn verify_all_relations(table: &ThreePtTable) -> Result<VerifyReport> {
    if let Some(u) = table.unknown().first() {
        return Err(out_of_order("verify", u));
    }
    let k = table.basis.len();
    let mut duals: HashMap<(usize, Pair), TruncatedSeries> = HashMap::new();
    for alpha in 0..k {
        for z in 0..k {
            for w in z..k {
                duals.insert((alpha, [z, w]), dual_value(table, alpha, z, w, "verify")?);
            }
        }
    }
    let mut channels: HashMap<(Pair, Pair), TruncatedSeries> = HashMap::new();
    let mut value = |p: Pair, q: Pair| -> Result<TruncatedSeries> {
        let key = if p <= q { (p, q) } else { (q, p) };
        if let Some(v) = channels.get(&key) {
            return Ok(v.clone());
        }
        let mut acc = zero_series(table.s_order);
        for alpha in 0..k {
            let f = table.known(&triple(key.0[0], key.0[1], alpha)).expect("complete table");
            if f.is_zero() {
                continue;
            }
            acc = acc.add(&f.mul(&duals[&(alpha, key.1)])?)?;
        }
        channels.insert(key, acc.clone());
        Ok(acc)
    };
    let mut checked = 0;
    let mut violations = Vec::new();
    for i in 0..k {
        for j in i..k {
            for l in j..k {
                for m in l..k {
                    let splits = [
                        (pair(i, j), pair(l, m)),
                        (pair(i, l), pair(j, m)),
                        (pair(i, m), pair(j, l)),
                    ];
                    let mut distinct: Vec<(Pair, Pair)> = Vec::new();
                    for (p, q) in splits {
                        let key = if p <= q { (p, q) } else { (q, p) };
                        if !distinct.contains(&key) {
                            distinct.push(key);
                        }
                    }
                    let base = value(distinct[0].0, distinct[0].1)?;
                    for &(p, q) in &distinct[1..] {
                        checked += 1;
                        if value(p, q)? != base {
                            violations.push(Violation {
                                quadruple: [i, j, l, m].map(|x| NAMES[x].to_string()),
                                channels: [channel_label(distinct[0].0, distinct[0].1), channel_label(p, q)],
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(VerifyReport {
        s_order: table.s_order,
        relations_checked: checked,
        violations,
    })
}

fn context_for(data: &KnownData, basis: &Sym3Basis) -> Result<BasisContext> {
    let Some(pairs) = &data.pairs else {
        return BasisContext::geometric(basis.classes().to_vec(), &ArSurface::new(1)?);
    };
    let k = basis.len();
    let mut gram = vec![vec![EqScalar::zero(); k]; k];
    let mut seen = BTreeSet::new();
    for p in pairs {
        let idx = |n: &String| Sym3Basis::index(n).ok_or_else(|| Error::Input(format!("unknown basis class {n:?}")));
        let (a, b) = (idx(&p.pair[0])?, idx(&p.pair[1])?);
        if !seen.insert(pair(a, b)) {
            return Err(Error::Input(format!("pair ({}, {}) listed twice", p.pair[0], p.pair[1])));
        }
        gram[a][b] = p.value.clone();
        gram[b][a] = p.value.clone();
    }
    BasisContext::from_gram(basis.classes().to_vec(), gram)
}

/// Step-(1) positive-degree part from the closed forms, `β = d E_1`.
fn geometric_tail(basis: &Sym3Basis, t: &Triple, s_order: u32) -> Result<TruncatedSeries> {
    let mut out = zero_series(s_order);
    let (ins, rest) = if t.contains(&A0) {
        return Ok(out);
    } else if t.contains(&A1) {
        (A1, without_one(t, A1).expect("contains a1"))
    } else {
        (B0, without_one(t, B0).expect("contains b0"))
    };
    let x = OrbClass::basis(basis.class(rest.0).clone());
    let y = OrbClass::basis(basis.class(rest.1).clone());
    for d in 1..=s_order {
        let beta = CurveClass::new(vec![d as i64]);
        let v = if ins == A1 {
            // a1 = 1(1)^2 1(E1) = -2 D_1 since ω_1 = -E_1/2
            three_point_divisor(&x, DivisorInsertion::D(1), &y, 0, &beta, 1)?.scale(&Rational::from_integer((-2).into()))
        } else {
            three_point_divisor(&x, DivisorInsertion::TwoSector, &y, 0, &beta, 1)?
        };
        out.add_term(vec![d], v)?;
    }
    Ok(out)
}

/// Step (1) and step (2): known entries filled, forbidden ones zero.
pub fn seed_table(data: &KnownData, s_order: u32) -> Result<ThreePtTable> {
    let basis = Sym3Basis::new();
    if let Some(exact) = data.s_order {
        if data.positive_degree == PositiveDegree::Input && exact < s_order {
            return Err(Error::Input(format!("input series are exact to s^{exact}, asked for s^{s_order}")));
        }
    }
    let ctx = context_for(data, &basis)?;
    let mut table = ThreePtTable::blank(ctx, s_order)?;
    let mut given: BTreeMap<Triple, &EntryData> = BTreeMap::new();
    for e in &data.entries {
        let t = parse_triple(&e.triple)?;
        if given.insert(t, e).is_some() {
            return Err(Error::Input(format!("{} listed twice", triple_name(&t))));
        }
    }
    let withheld: BTreeSet<Triple> = data.unknown.iter().map(parse_triple).collect::<Result<_>>()?;
    for t in given.keys() {
        if !is_step_one(t) && table.status(t) != EntryStatus::StructurallyZero {
            return Err(Error::Input(format!("{} is not a step-(1) entry", triple_name(t))));
        }
    }
    let mut missing = Vec::new();
    for t in all_triples() {
        let Some(e) = given.get(&t) else {
            if is_step_one(&t) && table.status(&t) == EntryStatus::Unknown && !withheld.contains(&t) {
                missing.push(triple_name(&t));
            }
            continue;
        };
        if withheld.contains(&t) {
            continue;
        }
        let value = match data.positive_degree {
            PositiveDegree::Input => e.to_series(s_order),
            PositiveDegree::Geometric => {
                let d0 = TruncatedSeries::constant(VarSet::S(1), vec![s_order], e.degree_zero());
                d0.add(&geometric_tail(&basis, &t, s_order)?)?
            }
        };
        table.set(t, value, EntryStatus::KnownInput)?;
    }
    if !missing.is_empty() {
        return Err(Error::MissingDegreeZeroInput(missing));
    }
    Ok(table)
}

/// A table with every entry read from `data`, e.g. a reference table.
pub fn load_complete(data: &KnownData, s_order: u32) -> Result<ThreePtTable> {
    let basis = Sym3Basis::new();
    let mut table = ThreePtTable::blank(context_for(data, &basis)?, s_order)?;
    for e in &data.entries {
        table.set(parse_triple(&e.triple)?, e.to_series(s_order), EntryStatus::KnownInput)?;
    }
    if let Some(u) = table.unknown().first() {
        return Err(Error::Input(format!("{} missing from complete table", triple_name(u))));
    }
    Ok(table)
}

/// Serializes the non-trivial entries accepted by `keep`.
pub fn export_entries(table: &ThreePtTable, keep: impl Fn(&Triple) -> bool) -> Vec<EntryData> {
    table
        .entries()
        .filter(|(t, s, v)| *s != EntryStatus::StructurallyZero && v.is_some() && keep(t))
        .map(|(t, _, v)| EntryData::from_series(t.map(|i| NAMES[i].to_string()), v.expect("filtered")))
        .collect()
}

/// `pairs` list of the table's Gram matrix, upper triangle, nonzero only.
pub fn export_pairs(ctx: &BasisContext) -> Vec<PairValue> {
    let g = ctx.gram();
    let mut out = Vec::new();
    for a in 0..g.len() {
        for b in a..g.len() {
            if !g[a][b].is_zero() {
                out.push(PairValue {
                    pair: [NAMES[a].to_string(), NAMES[b].to_string()],
                    value: g[a][b].clone(),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
