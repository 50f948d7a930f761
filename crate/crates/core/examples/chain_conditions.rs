//! Chain conditions on X ∩ V(f) for X the minimal or maximal primes, and a
//! set X that misses a maximal ideal.

use spectra::dsl::ring_from_str;
use spectra::spectrum::{PointSet, SpectrumPoset};
use spectra::sring::th55_check;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["Z/12", "Z/6", "Zloc(2) * Z/3"] {
        let spec = SpectrumPoset::enumerate(&ring_from_str(text)?)?;
        for (name, x) in [("Min", spec.minimal()), ("Max", spec.maximal())] {
            let trace = th55_check(&spec, x)?;
            println!(
                "{text} X={name} {:?}: J={} family={} pairs={} passes={}",
                spec.labels(x),
                trace.j.name(),
                trace.family.len(),
                trace.pairs_checked,
                trace.passes()
            );
        }
    }
    let spec = SpectrumPoset::enumerate(&ring_from_str("Zloc(2) * Z/3")?)?;
    match th55_check(&spec, PointSet::singleton(0)) {
        Err(e) => println!("X={:?}: {e}", spec.labels(PointSet::singleton(0))),
        Ok(_) => unreachable!("the point (0)×(1) lies below only one maximal ideal"),
    }
    Ok(())
}
