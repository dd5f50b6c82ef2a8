//! Atiyah-Bott sums on the A_r resolution collapse to integers.

use symgw::argeom::ArSurface;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in 1..=4 {
        let s = ArSurface::new(r)?;
        println!("A_{r}: {} fixed points", s.num_fixed_points());
        for i in 1..=s.num_fixed_points() {
            let (l, rr) = s.weights(i)?;
            println!("  x_{i}: tangent weights {l}, {rr}");
        }
        for k in 1..=r {
            let row: Vec<String> = (1..=r)
                .map(|l| s.equivariant_integral(&[&s.e_class(k), &s.e_class(l)]).to_string())
                .collect();
            println!("  E_{k} . E_l = [{}]", row.join(", "));
        }
        let w1 = s.omega_dual(1)?;
        println!("  omega_1 . E_1 = {}", s.equivariant_integral(&[&w1, &s.e_class(1)]));
    }
    Ok(())
}
