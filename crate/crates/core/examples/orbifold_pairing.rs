//! The orbifold Poincare pairing on Sym^n of A_1, its Gram matrix and duals.

use std::collections::BTreeMap;

use symgw::argeom::ArSurface;
use symgw::exactalg::EqScalar;
use symgw::orbibasis::{standard_basis, BasisContext, OrbClass};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = ArSurface::new(1)?;
    let ctx = BasisContext::geometric(standard_basis(2, 1), &s)?;
    for (w, row) in ctx.basis().iter().zip(ctx.gram()) {
        let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("{w:<12} [{}]", row.join(", "));
    }
    let w = ctx.basis()[1].clone();
    let dual = ctx.dual_class(&w)?;
    println!("dual of {w}: {:?}", dual.terms().map(|(b, c)| format!("{c}*[{b}]")).collect::<Vec<_>>());
    println!("<dual, {w}> = {}", ctx.pairing(&dual, &OrbClass::basis(w.clone()))?);
    let factors: BTreeMap<_, _> = [(w.underlying().expect("nonempty"), EqScalar::from_int(3))].into();
    let scaled = ctx.rescaled(&factors)?;
    println!("rescaled diagonal entry: {}", scaled.gram()[1][1]);
    Ok(())
}
