//! Connected two-point invariants on Sym^n of A_r.

use symgw::argeom::CurveClass;
use symgw::exactalg::{split_off_t_sum, TSumSplit};
use symgw::invariants::{two_point_theorem, InvariantQuery};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (2, 1, "2(E1)", "2(E1)", 0, vec![1]),
        (2, 1, "2(E1)", "2(E1)", 0, vec![3]),
        (2, 1, "1(E1),1(E1)", "1(E1),1(E1)", 2, vec![2]),
        (3, 2, "3(E1)", "2(E2),1(E1)", 1, vec![1, 1]),
        (3, 3, "3(E1)", "3(E3)", 0, vec![1, 1, 1]),
        // one-labels and parity kill the invariant
        (2, 1, "2(1)", "2(E1)", 0, vec![1]),
        (2, 1, "2(E1)", "2(E1)", 1, vec![1]),
    ];
    for (n, r, m1, m2, a, beta) in cases {
        let q = InvariantQuery::new(n, r, m1.parse()?, m2.parse()?, a, CurveClass::new(beta))?;
        let v = two_point_theorem(&q)?;
        let split = match split_off_t_sum(&v).expect("polynomial value") {
            TSumSplit::Finite { multiplicity, cofactor } => format!("(t1+t2)^{multiplicity} * {cofactor}"),
            TSumSplit::Infinite => "zero".into(),
        };
        println!("n={n} r={r} <{m1} | {m2}> a={a} beta={}: {v} = {split}", q.beta);
    }
    Ok(())
}
