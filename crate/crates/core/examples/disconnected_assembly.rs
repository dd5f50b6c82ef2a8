//! Possibly disconnected two-point invariants, glued from a pairing of the
//! idle parts and a connected invariant of the rest.

use symgw::argeom::CurveClass;
use symgw::invariants::two_point_disconnected;
use symgw::partitions::WeightedPartition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: WeightedPartition = "2(E1),1(E1)".parse()?;
    println!("splittings of {lambda}:");
    for (sigma, mu) in lambda.splittings() {
        println!("  idle {sigma:<8} moving {mu}");
    }
    for (l, rho) in [("2(E1),1(E1)", "2(E1),1(E1)"), ("2(E1),1(1)", "2(E1),1(E1)"), ("3(E1)", "3(E1)")] {
        let (l, rho): (WeightedPartition, WeightedPartition) = (l.parse()?, rho.parse()?);
        for d in 1..=2 {
            let v = two_point_disconnected(&l, &rho, 0, &CurveClass::new(vec![d]), 1)?;
            println!("<{l} | {rho}> d={d}: {v}");
        }
    }
    Ok(())
}
