//! The ring of eventually constant bit sequences is not an S-ring: the chain
//! x_n = 1 on {1..n} never stabilizes, and the ideal of finitely supported
//! sequences has a flat, non-projective quotient.

use std::time::Instant;

use spectra::flatness::{is_cyclic_flat, is_cyclic_projective};
use spectra::ring::Ring;
use spectra::sring::{boolean_chain, check_chain_stabilization, dual_chain, StabilizationOutcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = Instant::now();
    let chain = boolean_chain(100)?;
    let report = check_chain_stabilization(&chain);
    println!("x_1..x_3 = {}, {}, {}", chain.terms()[0], chain.terms()[1], chain.terms()[2]);
    match &report.outcome {
        StabilizationOutcome::NotStabilizedWithinBudget { last_index, .. } => {
            println!("not stabilized within {last_index} terms")
        }
        StabilizationOutcome::StabilizedAt { k, e } => println!("stabilized at {k} with {e}"),
    }
    println!("proof: {}", report.never_stabilizes.unwrap_or("-"));
    let dual = dual_chain(&chain);
    println!("dual starts with {}", dual.terms()[0]);

    let ring = Ring::eventually_constant_bits();
    let fin = ring.finitely_supported_ideal()?;
    let cert = is_cyclic_flat(&ring, &fin)?;
    let proj = is_cyclic_projective(&ring, &fin)?;
    println!("R/{}: flat={} ({})", fin.name(), cert.verdict, cert.schema.unwrap_or(""));
    println!("R/{}: projective={} ({})", fin.name(), proj.projective, proj.reason);
    println!("elapsed {:?}", start.elapsed());
    Ok(())
}
