//! Double Hurwitz numbers with one full-cycle profile: the sinh closed form
//! next to the class-algebra count.

use symgw::hurwitz::{brute_force_hurwitz, gjv_hurwitz, HurwitzQuery};
use symgw::partitions::{enumerate_partitions, Partition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<12} {:>3} {:>14} {:>14}", "lambda", "g", "closed form", "convolution");
    for n in 1..=5 {
        for lambda in enumerate_partitions(n) {
            for g in 0..=2u32 {
                let closed = gjv_hurwitz(&lambda, g);
                let q = HurwitzQuery::new(lambda.clone(), Partition::full_cycle(n), g as i64)?;
                let brute = brute_force_hurwitz(&q)?;
                assert_eq!(closed, brute);
                println!("{:<12} {:>3} {:>14} {:>14}", lambda.to_string(), g, closed, brute);
            }
        }
    }
    // two profiles away from the full cycle: only the convolution applies
    let q = HurwitzQuery::new(Partition::new(vec![2, 2])?, Partition::new(vec![3, 1])?, 0)?;
    println!("H^0 of (2,2) against (3,1) = {}", brute_force_hurwitz(&q)?);
    Ok(())
}
