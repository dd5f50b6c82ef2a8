//! Divisor-type three-point series in u and s, with and without the
//! degree-zero input.

use std::collections::BTreeMap;

use symgw::exactalg::EqScalar;
use symgw::invariants::{three_point_series, DegreeZeroSource, DivisorInsertion};
use symgw::orbibasis::OrbClass;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = OrbClass::basis("2(E1)".parse()?);
    for theta in [DivisorInsertion::D(1), DivisorInsertion::TwoSector] {
        let partial = three_point_series(&x, theta, &x, 2, &[3], 1, &DegreeZeroSource::Absent)?;
        println!("{theta:?}: missing degree-zero at u^{:?}", partial.missing_degree_zero());
        for (e, c) in partial.series().terms() {
            println!("  u^{} s^{}: {c}", e[0], e[1]);
        }
    }
    let table: BTreeMap<u32, EqScalar> = [(0, EqScalar::frac(-1, 2)), (1, EqScalar::zero()), (2, EqScalar::zero())].into();
    let full = three_point_series(&x, DivisorInsertion::D(1), &x, 2, &[3], 1, &DegreeZeroSource::Table(table))?;
    println!("with degree zero supplied, partial = {}", full.is_partial());
    println!("constant term: {}", full.coefficient(&[0, 0])?);
    Ok(())
}
