//! Enumerate a spectrum and print its three topologies.
//!
//! cargo run --example spectrum_and_topologies -- "Zloc(2) * Z/3"

use spectra::dsl::ring_from_str;
use spectra::spectrum::{SpectrumPoset, Topology};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "Z/12".into());
    let ring = ring_from_str(&text)?;
    let spec = SpectrumPoset::enumerate(&ring)?;

    println!("Spec({ring}) has {} points", spec.len());
    for (i, p) in spec.points().iter().enumerate() {
        println!(
            "  [{i}] {:<10} minimal={} maximal={}",
            p.label(),
            p.is_minimal,
            p.is_maximal
        );
    }
    for (a, b) in spec.covering_pairs() {
        println!("  {} ⊂ {}", spec.label(a), spec.label(b));
    }

    for topology in Topology::ALL {
        let family = spec.closed_family(topology)?;
        println!("{topology} closed sets ({}):", family.len());
        for set in family.iter() {
            println!("  {:?}", spec.labels(set));
        }
    }
    Ok(())
}
