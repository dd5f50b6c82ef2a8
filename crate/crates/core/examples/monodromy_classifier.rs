//! Which sector triples of Sym^3 can carry nonzero three-point functions.

use symgw::orbibasis::{monodromy_admissible, virtual_dimension};
use symgw::partitions::enumerate_partitions;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sectors = enumerate_partitions(3);
    for (i, a) in sectors.iter().enumerate() {
        for (j, b) in sectors.iter().enumerate().skip(i) {
            for c in sectors.iter().skip(j) {
                let ok = monodromy_admissible(a, b, c)?;
                let vd = virtual_dimension(&[a.clone(), b.clone(), c.clone()], 3, 2)?;
                println!("{a:<8} {b:<8} {c:<8} admissible={ok:<5} vdim={vd}");
            }
        }
    }
    Ok(())
}
