//! Command-line front end. Every command prints one JSON document.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::argeom::{ArSurface, CurveClass};
use crate::error::{Error, Result};
use crate::exactalg::{split_off_t_sum, EqScalar, TSumSplit};
use crate::hurwitz::{brute_force_hurwitz_bounded, gjv_hurwitz, HurwitzQuery, DEFAULT_BRUTE_BOUND};
use crate::invariants::{
    theorem_corollary_audit, three_point_series, two_point_corollary, two_point_disconnected, two_point_theorem,
    DegreeZeroSource, DivisorInsertion, InvariantQuery,
};
use crate::orbibasis::{orb_pairing, standard_basis, BasisContext, OrbClass};
use crate::partitions::{Partition, WeightedPartition};
use crate::wdvv::{self, KnownData, SolveOrder};

pub mod checks;

pub use checks::{check_suites, Assertion, CheckSuiteResult};

#[derive(Parser, Debug)]
#[command(name = "symgw", version, about = "Exact invariants of symmetric products of A_r surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Double Hurwitz number H^g_{lambda,rho}.
    Hurwitz(HurwitzArgs),
    /// Two-point connected or disconnected invariant.
    Invariant(InvariantArgs),
    /// Orbifold pairing of two basis classes, or a whole Gram matrix.
    Pairing(PairingArgs),
    /// Three-point generating series with a divisor insertion.
    Series(SeriesArgs),
    /// Seed, solve and optionally verify a Sym^3(A_1) three-point table.
    Wdvv(WdvvArgs),
    /// Consistency suites.
    Check(CheckArgs),
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Oracle {
    Gjv,
    Brute,
    Both,
}

#[derive(clap::Args, Debug)]
struct HurwitzArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    rho: String,
    #[arg(long, allow_negative_numbers = true)]
    genus: i64,
    #[arg(long, value_enum, default_value = "both")]
    oracle: Oracle,
    /// Largest n the brute-force oracle accepts.
    #[arg(long, default_value_t = DEFAULT_BRUTE_BOUND)]
    bound: u32,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Formula {
    Theorem,
    Corollary,
    Both,
    Disconnected,
}

#[derive(clap::Args, Debug)]
struct InvariantArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    mu1: String,
    #[arg(long)]
    mu2: String,
    #[arg(long)]
    a: u32,
    /// `d1,...,dr`.
    #[arg(long)]
    beta: String,
    #[arg(long, value_enum, default_value = "both")]
    formula: Formula,
}

#[derive(clap::Args, Debug)]
struct PairingArgs {
    #[arg(long)]
    r: u32,
    #[arg(long, required_unless_present = "gram")]
    w1: Option<String>,
    #[arg(long, required_unless_present = "gram")]
    w2: Option<String>,
    /// Print the Gram matrix of the standard basis of Sym^N instead.
    #[arg(long, value_name = "N", conflicts_with_all = ["w1", "w2"])]
    gram: Option<u32>,
}

#[derive(clap::Args, Debug)]
struct SeriesArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    alpha1: String,
    /// `identity`, `two-sector` or `D<k>`.
    #[arg(long)]
    theta: String,
    #[arg(long)]
    alpha2: String,
    #[arg(long, default_value_t = 2)]
    u_order: u32,
    /// One order per `s_k`, comma separated.
    #[arg(long)]
    s_order: String,
    /// Degree-zero values `a:value;a:value` per power of `u`.
    #[arg(long)]
    degree0: Option<String>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OrderArg {
    Canonical,
    Reversed,
}

#[derive(clap::Args, Debug)]
struct WdvvArgs {
    /// known.json; the built-in synthetic fixture when absent.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, default_value_t = 4)]
    s_order: u32,
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value = "canonical")]
    order: OrderArg,
}

#[derive(clap::Args, Debug)]
struct CheckArgs {
    #[arg(long, default_value = "all")]
    suite: String,
}

fn error_json(kind: &str, message: String) -> String {
    json!({"error": {"kind": kind, "message": message}}).to_string()
}

/// Parses `argv` (without the program name), runs the command, and returns
/// the exit status with the JSON text to print.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let args = std::iter::once("symgw").chain(argv.iter().map(|s| s.as_ref()));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, json!({"help": e.to_string()}).to_string()),
                _ => (2, error_json("usage", e.to_string())),
            };
        }
    };
    match dispatch(cli.command) {
        Ok((status, v)) => (status, v.to_string()),
        Err(e) => (1, error_json(e.kind(), e.to_string())),
    }
}

fn dispatch(cmd: Command) -> Result<(i32, Value)> {
    match cmd {
        Command::Hurwitz(a) => hurwitz(a).map(|v| (0, v)),
        Command::Invariant(a) => invariant(a).map(|v| (0, v)),
        Command::Pairing(a) => pairing(a).map(|v| (0, v)),
        Command::Series(a) => series(a).map(|v| (0, v)),
        Command::Wdvv(a) => wdvv_cmd(a),
        Command::Check(a) => {
            let results = check_suites(&a.suite)?;
            let passed = results.iter().all(|r| r.passed);
            let v = json!({"status": if passed { "pass" } else { "fail" }, "suites": results});
            Ok((if passed { 0 } else { 1 }, v))
        }
    }
}

fn hurwitz(a: HurwitzArgs) -> Result<Value> {
    let q = HurwitzQuery::new(a.lambda.parse()?, a.rho.parse()?, a.genus)?;
    let one_part = q.rho == Partition::full_cycle(q.n());
    let closed = || -> Result<_> {
        if !one_part {
            return Err(Error::Input(format!("the closed form needs rho = ({})", q.n())));
        }
        if a.genus < 0 {
            return Ok(num_traits::Zero::zero());
        }
        Ok(gjv_hurwitz(&q.lambda, a.genus as u32))
    };
    let query = json!({"lambda": q.lambda.to_string(), "rho": q.rho.to_string(), "genus": a.genus});
    match a.oracle {
        Oracle::Gjv => Ok(json!({"query": query, "value": closed()?.to_string(), "oracle": "gjv"})),
        Oracle::Brute => {
            let v = brute_force_hurwitz_bounded(&q, a.bound)?;
            Ok(json!({"query": query, "value": v.to_string(), "oracle": "brute"}))
        }
        Oracle::Both => {
            let g = closed()?;
            let b = brute_force_hurwitz_bounded(&q, a.bound)?;
            if g != b {
                return Err(Error::OracleMismatch {
                    gjv: g.to_string(),
                    brute: b.to_string(),
                });
            }
            Ok(json!({"query": query, "value": g.to_string(), "agreement": true}))
        }
    }
}

fn t_sum_multiplicity(v: &EqScalar) -> Value {
    match split_off_t_sum(v) {
        Some(TSumSplit::Infinite) => json!("infinite"),
        Some(TSumSplit::Finite { multiplicity, .. }) => json!(multiplicity),
        None => Value::Null,
    }
}

fn invariant(a: InvariantArgs) -> Result<Value> {
    let mu1: WeightedPartition = a.mu1.parse()?;
    let mu2: WeightedPartition = a.mu2.parse()?;
    let beta: CurveClass = a.beta.parse()?;
    let query = json!({
        "n": a.n, "r": a.r, "mu1": mu1.to_string(), "mu2": mu2.to_string(),
        "a": a.a, "beta": beta.to_string(),
    });
    let q = InvariantQuery::new(a.n, a.r, mu1.clone(), mu2.clone(), a.a, beta.clone())?;
    let (value, audit) = match a.formula {
        Formula::Theorem => (two_point_theorem(&q)?, Value::Null),
        Formula::Corollary => (two_point_corollary(&q)?, Value::Null),
        Formula::Disconnected => (two_point_disconnected(&mu1, &mu2, a.a, &beta, a.r)?, Value::Null),
        Formula::Both => {
            let rep = theorem_corollary_audit(&q)?;
            (rep.theorem.clone(), serde_json::to_value(&rep).expect("serializable"))
        }
    };
    Ok(json!({
        "query": query,
        "value": value,
        "t_sum_multiplicity": t_sum_multiplicity(&value),
        "audit": audit,
    }))
}

fn pairing(a: PairingArgs) -> Result<Value> {
    let surface = ArSurface::new(a.r)?;
    if let Some(n) = a.gram {
        let basis = standard_basis(n, a.r);
        let ctx = BasisContext::geometric(basis.clone(), &surface)?;
        let names: Vec<String> = basis.iter().map(|w| w.to_string()).collect();
        return Ok(json!({"basis": names, "gram": ctx.gram(), "inverse": ctx.inverse_gram()}));
    }
    let w1: WeightedPartition = a.w1.as_deref().unwrap_or_default().parse()?;
    let w2: WeightedPartition = a.w2.as_deref().unwrap_or_default().parse()?;
    let v = orb_pairing(&w1, &w2, &surface)?;
    Ok(json!({"w1": w1.to_string(), "w2": w2.to_string(), "value": v}))
}

fn parse_theta(s: &str) -> Result<DivisorInsertion> {
    match s {
        "identity" => Ok(DivisorInsertion::Identity),
        "two-sector" => Ok(DivisorInsertion::TwoSector),
        _ => s
            .strip_prefix('D')
            .and_then(|k| k.parse().ok())
            .map(DivisorInsertion::D)
            .ok_or_else(|| Error::Parse(format!("divisor insertion {s:?}: use identity, two-sector or D<k>"))),
    }
}

fn parse_degree0(s: &str) -> Result<BTreeMap<u32, EqScalar>> {
    s.split(';')
        .filter(|x| !x.trim().is_empty())
        .map(|item| {
            let (a, v) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("degree-zero entry {item:?}: expected a:value")))?;
            let a = a.trim().parse().map_err(|_| Error::Parse(format!("power of u in {item:?}")))?;
            Ok((a, v.parse()?))
        })
        .collect()
}

fn series(a: SeriesArgs) -> Result<Value> {
    let x = OrbClass::basis(a.alpha1.parse()?);
    let y = OrbClass::basis(a.alpha2.parse()?);
    let theta = parse_theta(&a.theta)?;
    let s_orders = a
        .s_order
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("s-order {t:?}"))))
        .collect::<Result<Vec<u32>>>()?;
    let degree0 = match &a.degree0 {
        Some(s) => DegreeZeroSource::Table(parse_degree0(s)?),
        None => DegreeZeroSource::Absent,
    };
    let s = three_point_series(&x, theta, &y, a.u_order, &s_orders, a.r, &degree0)?;
    let terms: Vec<Value> = s
        .series()
        .terms()
        .map(|(e, c)| json!({"u": e[0], "s": &e[1..], "value": c}))
        .collect();
    Ok(json!({
        "terms": terms,
        "partial": s.is_partial(),
        "missing_degree_zero": s.missing_degree_zero(),
    }))
}

fn wdvv_cmd(a: WdvvArgs) -> Result<(i32, Value)> {
    let data = match &a.input {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?;
            KnownData::from_json(&text)?
        }
        None => wdvv::synthetic::synthetic_known()?,
    };
    let order = match a.order {
        OrderArg::Canonical => SolveOrder::Canonical,
        OrderArg::Reversed => SolveOrder::Reversed,
    };
    let seeded = wdvv::seed_table(&data, a.s_order)?;
    let (solved, report) = wdvv::solve_with_order(&seeded, order)?;
    let entries: Vec<Value> = solved
        .entries()
        .filter(|(_, s, _)| *s != wdvv::EntryStatus::StructurallyZero)
        .map(|(t, s, v)| {
            let e = wdvv::EntryData::from_series(t.map(|i| wdvv::Sym3Basis::name(i).to_string()), v.expect("solved"));
            json!({"triple": e.triple, "status": s, "series": e.series})
        })
        .collect();
    let mut out = json!({"s_order": a.s_order, "solve": report, "entries": entries});
    let mut status = 0;
    if a.verify {
        let v = wdvv::verify_all_relations(&solved)?;
        if !v.passed() {
            status = 1;
        }
        out["verify"] = serde_json::to_value(&v).expect("serializable");
    }
    Ok((status, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &str) -> (i32, Value) {
        let argv: Vec<&str> = args.split_whitespace().collect();
        let (code, text) = run_command(&argv);
        (code, serde_json::from_str(&text).expect("valid JSON"))
    }

    #[test]
    fn hurwitz_both_oracles() {
        let (code, v) = run("hurwitz --lambda 2 --rho 2 --genus 1 --oracle both");
        assert_eq!(code, 0);
        assert_eq!(v["value"], "1/2");
        assert_eq!(v["agreement"], true);
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (code, v) = run("frobnicate");
        assert_eq!(code, 2);
        assert_eq!(v["error"]["kind"], "usage");
    }

    #[test]
    fn malformed_partition_is_reported() {
        let (code, v) = run("hurwitz --lambda 2,x --rho 3 --genus 0");
        assert_eq!(code, 1);
        assert_eq!(v["error"]["kind"], "parse");
    }

    #[test]
    fn theta_syntax() {
        assert_eq!(parse_theta("D2").unwrap(), DivisorInsertion::D(2));
        assert!(parse_theta("E1").is_err());
        assert_eq!(parse_degree0("0:1;2:-1/3").unwrap().len(), 2);
    }
}
