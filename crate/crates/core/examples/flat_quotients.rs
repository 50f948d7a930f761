//! Decide flatness and projectivity of R/I for every ideal of a finite ring.

use spectra::dsl::ring_from_str;
use spectra::flatness::{is_cyclic_flat, is_cyclic_projective};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "Z/12".into());
    let ring = ring_from_str(&text)?;

    for ideal in ring.representative_ideals()? {
        let cert = is_cyclic_flat(&ring, &ideal)?;
        let proj = is_cyclic_projective(&ring, &ideal)?;
        print!("R/{:<8} flat={:<5} projective={:<5}", ideal.name(), cert.verdict, proj.projective);
        match (&cert.failing, cert.witnesses.iter().find(|w| !ring.is_zero(&w.f))) {
            (Some(f), _) => println!("  Ann({f}) + I is proper"),
            (None, Some(w)) => println!("  f={} a={} b={}", w.f, w.a, w.b),
            (None, None) => println!(),
        }
        assert!(cert.recheck()?);
    }
    Ok(())
}
