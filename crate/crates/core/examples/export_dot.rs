//! Write the specialization order of a spectrum as a DOT graph.
//!
//! cargo run --example export_dot -- "Zloc(2) * Z/3" | dot -Tsvg > spec.svg

use spectra::dsl::ring_from_str;
use spectra::export::export_dot;
use spectra::spectrum::SpectrumPoset;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "Zloc(2) * Z/3".into());
    let spec = SpectrumPoset::enumerate(&ring_from_str(&text)?)?;
    print!("{}", export_dot(&spec));
    Ok(())
}
