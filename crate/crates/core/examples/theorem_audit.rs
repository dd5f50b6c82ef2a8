//! Where the label-factor closed form and the endpoint closed form agree,
//! and how they part ways elsewhere.

use symgw::argeom::CurveClass;
use symgw::invariants::{theorem_corollary_audit, InvariantQuery};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (2, 2, "2(E1)", "2(E2)", vec![1, 1]),
        (2, 3, "1(E1),1(E3)", "2(E3)", vec![1, 1, 1]),
        (1, 2, "1(E2)", "1(E2)", vec![0, 1]),
        (1, 3, "1(E1)", "1(E1)", vec![0, 1, 0]),
        (2, 3, "2(E3)", "2(E2)", vec![0, 1, 1]),
    ];
    for (n, r, m1, m2, beta) in cases {
        let q = InvariantQuery::new(n, r, m1.parse()?, m2.parse()?, 0, CurveClass::new(beta))?;
        let rep = theorem_corollary_audit(&q)?;
        println!(
            "r={r} beta={} <{m1} | {m2}>: {:?} theorem={} corollary={} family={:?}",
            q.beta, rep.status, rep.theorem, rep.corollary, rep.family
        );
    }
    Ok(())
}
