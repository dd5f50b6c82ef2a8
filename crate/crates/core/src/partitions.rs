//! Integer partitions and cohomology-weighted partitions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{factorial, Rational};

/// A partition, parts stored weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// The one-part partition `(n)`.
    pub fn full_cycle(n: u32) -> Self {
        Partition(vec![n])
    }

    /// `(1^n)`.
    pub fn identity(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// `(2, 1^{n-2})`, the class of a transposition.
    pub fn transposition(n: u32) -> Self {
        assert!(n >= 2, "S_{n} has no transpositions");
        let mut v = vec![2];
        v.extend(std::iter::repeat_n(1, n as usize - 2));
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `|Aut(λ)|`: product of factorials of part multiplicities.
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities().values().map(|&m| factorial(m)).product()
    }

    /// Centralizer order `∏ λ_i · |Aut(λ)|` of a permutation of this cycle type.
    pub fn centralizer_order(&self) -> BigInt {
        let prod: BigInt = self.0.iter().map(|&p| BigInt::from(p)).product();
        prod * self.aut_order()
    }

    /// Parity of a permutation of this cycle type: `(n - ℓ) mod 2`.
    pub fn is_odd(&self) -> bool {
        (self.size() as usize - self.len()) % 2 == 1
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// `age(λ) = n - ℓ(λ)`.
pub fn age(lambda: &Partition, n: u32) -> Result<u32> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch(format!("|{lambda}| != {n}")));
    }
    Ok(n - lambda.len() as u32)
}

/// Cohomology label attached to a part.
///
/// The derived ordering (`One < E(k) < Omega(k) < Fixed(i)`, then by index)
/// is the canonical label order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CohLabel {
    One,
    /// Exceptional curve class `E_k`, `1 ≤ k ≤ r`.
    E(u32),
    /// Dual class `ω_k`.
    Omega(u32),
    /// Fixed-point class `[x_i]`, `1 ≤ i ≤ r+1`.
    Fixed(u32),
}

impl CohLabel {
    pub fn is_divisor_or_one(&self) -> bool {
        !matches!(self, CohLabel::Fixed(_))
    }
}

impl fmt::Display for CohLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohLabel::One => write!(f, "1"),
            CohLabel::E(k) => write!(f, "E{k}"),
            CohLabel::Omega(k) => write!(f, "w{k}"),
            CohLabel::Fixed(i) => write!(f, "x{i}"),
        }
    }
}

impl FromStr for CohLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(CohLabel::One);
        }
        let bad = || Error::Parse(format!("bad label {s:?}"));
        let (head, idx) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let k: u32 = idx.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match head {
            "E" => Ok(CohLabel::E(k)),
            "w" => Ok(CohLabel::Omega(k)),
            "x" => Ok(CohLabel::Fixed(k)),
            _ => Err(bad()),
        }
    }
}

/// Multiset of `(part, label)` pairs, stored sorted by part descending then
/// label ascending. May be empty (used for the trivial side of a splitting).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedPartition(Vec<(u32, CohLabel)>);

impl WeightedPartition {
    pub fn new(mut terms: Vec<(u32, CohLabel)>) -> Result<Self> {
        if terms.iter().any(|(p, _)| *p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Ok(WeightedPartition(terms))
    }

    pub fn empty() -> Self {
        WeightedPartition(Vec::new())
    }

    /// Every part of `lambda` labelled with `label`.
    pub fn uniform(lambda: &Partition, label: CohLabel) -> Self {
        WeightedPartition(lambda.parts().iter().map(|&p| (p, label)).collect())
    }

    pub fn terms(&self) -> &[(u32, CohLabel)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(|(p, _)| p).sum()
    }

    pub fn labels(&self) -> impl Iterator<Item = CohLabel> + '_ {
        self.0.iter().map(|(_, l)| *l)
    }

    /// Underlying partition; `None` for the empty multiset.
    pub fn underlying(&self) -> Option<Partition> {
        if self.0.is_empty() {
            None
        } else {
            Some(Partition(self.0.iter().map(|(p, _)| *p).collect()))
        }
    }

    fn term_multiplicities(&self) -> Vec<((u32, CohLabel), u32)> {
        let mut out: Vec<((u32, CohLabel), u32)> = Vec::new();
        for t in &self.0 {
            match out.last_mut() {
                Some((last, m)) if last == t => *m += 1,
                _ => out.push((*t, 1)),
            }
        }
        out
    }

    /// Order of the group permuting parts while preserving size and label.
    pub fn aut_order(&self) -> BigInt {
        self.term_multiplicities()
            .iter()
            .map(|(_, m)| factorial(*m))
            .product()
    }

    /// `[μ(γ)] = |Aut(μ)| / |Aut(μ(γ))|`.
    pub fn bracket_factor(&self) -> Rational {
        let base = self.underlying().map(|p| p.aut_order()).unwrap_or_else(BigInt::one);
        Rational::new(base, self.aut_order())
    }

    /// All ways to write `self = σ ∪ μ` as labelled multisets with `μ`
    /// nonempty. `σ` may be empty; each distinct split appears once.
    pub fn splittings(&self) -> Vec<(WeightedPartition, WeightedPartition)> {
        let groups = self.term_multiplicities();
        let mut out = Vec::new();
        let mut counts = vec![0u32; groups.len()];
        loop {
            let mut sigma = Vec::new();
            let mut mu = Vec::new();
            for ((term, m), &k) in groups.iter().zip(&counts) {
                sigma.extend(std::iter::repeat_n(*term, k as usize));
                mu.extend(std::iter::repeat_n(*term, (*m - k) as usize));
            }
            if !mu.is_empty() {
                out.push((WeightedPartition(sigma), WeightedPartition(mu)));
            }
            // odometer over 0..=m per group
            let mut i = 0;
            loop {
                if i == groups.len() {
                    return out;
                }
                if counts[i] < groups[i].1 {
                    counts[i] += 1;
                    break;
                }
                counts[i] = 0;
                i += 1;
            }
        }
    }
}

impl fmt::Display for WeightedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|(p, l)| format!("{p}({l})")).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for WeightedPartition {
    type Err = Error;
    /// `part(label)` terms separated by commas, e.g. `2(E1),1(1)`.
    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(Error::Parse("empty weighted partition".into()));
        }
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected part(label) in {s:?}")))?;
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed label in {s:?}")))?;
            if close < open {
                return Err(Error::Parse(format!("malformed term in {s:?}")));
            }
            let part: u32 = rest[..open]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad part in {s:?}")))?;
            let label: CohLabel = rest[open + 1..close].parse()?;
            terms.push((part, label));
            rest = rest[close + 1..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
                if rest.is_empty() {
                    return Err(Error::Parse(format!("trailing comma in {s:?}")));
                }
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected ',' in {s:?}")));
            }
        }
        WeightedPartition::new(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn w(s: &str) -> WeightedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(6).len(), 11);
    }

    #[test]
    fn partition_counts_match_recurrence() {
        // p(n) via the pentagonal-free DP over largest part
        let mut table = vec![vec![0u64; 13]; 13];
        for m in 0..13 {
            table[0][m] = 1;
        }
        for n in 1..13 {
            for m in 1..13 {
                table[n][m] = table[n][m - 1] + if n >= m { table[n - m][m] } else { 0 };
            }
        }
        for n in 1..13u32 {
            assert_eq!(enumerate_partitions(n).len() as u64, table[n as usize][n as usize]);
        }
    }

    #[test]
    fn aut_orders() {
        assert_eq!(p(&[1, 1, 1]).aut_order(), 6.into());
        assert_eq!(p(&[2, 1]).aut_order(), 1.into());
        assert_eq!(p(&[2, 2, 1, 1, 1]).aut_order(), 12.into());
    }

    #[test]
    fn weighted_aut_orders() {
        assert_eq!(w("1(E1),1(E1)").aut_order(), 2.into());
        assert_eq!(w("1(E1),1(E2)").aut_order(), 1.into());
        assert_eq!(w("2(E1),2(E1),1(1)").aut_order(), 2.into());
    }

    #[test]
    fn bracket_factors() {
        assert_eq!(w("2(E1)").bracket_factor(), Rational::one());
        assert_eq!(w("2(E1),2(E2)").bracket_factor(), Rational::from_integer(2.into()));
        assert_eq!(w("1(E1),1(E1)").bracket_factor(), Rational::one());
    }

    #[test]
    fn ages() {
        assert_eq!(age(&p(&[1, 1, 1]), 3).unwrap(), 0);
        assert_eq!(age(&Partition::full_cycle(5), 5).unwrap(), 4);
        assert_eq!(age(&Partition::transposition(6), 6).unwrap(), 1);
        assert!(age(&p(&[2]), 3).is_err());
    }

    #[test]
    fn class_equation() {
        // sum over cycle types of 1/z(λ) is 1
        for n in 1..=8 {
            let total: Rational = enumerate_partitions(n)
                .iter()
                .map(|l| Rational::new(BigInt::one(), l.centralizer_order()))
                .sum();
            assert_eq!(total, Rational::one(), "n = {n}");
        }
    }

    #[test]
    fn splitting_examples() {
        let single = w("3(E1)");
        assert_eq!(single.splittings(), vec![(WeightedPartition::empty(), single.clone())]);

        let two = w("1(1),2(E1)");
        let got: Vec<(String, String)> = two
            .splittings()
            .into_iter()
            .map(|(s, m)| (s.to_string(), m.to_string()))
            .collect();
        assert_eq!(got.len(), 3);
        for expected in [("∅", "2(E1),1(1)"), ("1(1)", "2(E1)"), ("2(E1)", "1(1)")] {
            assert!(got.contains(&(expected.0.into(), expected.1.into())), "{expected:?}");
        }

        let same = w("1(E1),1(E1)");
        let splits = same.splittings();
        assert_eq!(splits.len(), 2);
        assert!(splits.contains(&(w("1(E1)"), w("1(E1)"))));
    }

    #[test]
    fn label_sensitive_equality() {
        assert_ne!(w("2(E1),1(E2)"), w("2(E2),1(E1)"));
        assert_eq!(w("1(1),2(E1)"), w("2(E1),1(1)"));
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "2", "2(E0)", "2(Q1)", "2(E1),", "0(1)", "2(E1) 1(1)"] {
            assert!(bad.parse::<WeightedPartition>().is_err(), "{bad:?}");
        }
        assert!("0,1".parse::<Partition>().is_err());
    }

    fn arb_weighted() -> impl Strategy<Value = WeightedPartition> {
        prop::collection::vec((1u32..4, 0u32..3), 1..6).prop_map(|v| {
            let terms = v
                .into_iter()
                .map(|(p, l)| (p, if l == 0 { CohLabel::One } else { CohLabel::E(l) }))
                .collect();
            WeightedPartition::new(terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn uniform_labels_have_unit_bracket(parts in prop::collection::vec(1u32..5, 1..6), k in 1u32..4) {
            let l = Partition::new(parts).unwrap();
            prop_assert_eq!(WeightedPartition::uniform(&l, CohLabel::E(k)).bracket_factor(), Rational::one());
        }

        #[test]
        fn splittings_reassemble(wp in arb_weighted()) {
            let splits = wp.splittings();
            for (s, m) in &splits {
                prop_assert!(!m.is_empty());
                let mut all = s.terms().to_vec();
                all.extend_from_slice(m.terms());
                prop_assert_eq!(&WeightedPartition::new(all).unwrap(), &wp);
            }
            let mut dedup = splits.clone();
            dedup.sort();
            dedup.dedup();
            prop_assert_eq!(dedup.len(), splits.len());
            prop_assert!(!wp.bracket_factor().is_zero());
        }
    }
}
