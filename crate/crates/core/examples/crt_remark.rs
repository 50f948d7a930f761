//! Z/n splits along idempotents into summands that are projective but too
//! small to be free.

use spectra::harness::{crt_decomposition, prime_power_factors};
use spectra::ring::Ring;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [12u64, 30, 36] {
        let ring = Ring::modular(n)?;
        println!("Z/{n} = {:?}", prime_power_factors(n));
        for part in crt_decomposition(&ring)? {
            println!(
                "  e = {:<3} |R·e| = {:<3} projective={} free={}",
                part.idempotent,
                part.summand_size,
                part.projective,
                part.summand_size as u64 >= n
            );
        }
    }
    Ok(())
}
