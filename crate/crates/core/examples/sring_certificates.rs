//! S-ring certificates: open-closed conditions and double-closed sets
//! matched to idempotents.

use spectra::dsl::ring_from_str;
use spectra::spectrum::SpectrumPoset;
use spectra::sring::sring_certificate;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["Z/12", "GF(4)", "Z/2[x]/(x^2+x)", "Zloc(2)", "Zloc(2) * Z/3"] {
        let ring = ring_from_str(text)?;
        let spec = SpectrumPoset::enumerate(&ring)?;
        let cert = sring_certificate(&spec)?;
        println!("{ring}: passes={}", cert.passes());
        for (set, e) in &cert.double_closed {
            let e = e.as_ref().map_or("none".to_string(), |e| e.to_string());
            println!("  {:?} = V({e})", spec.labels(*set));
        }
    }
    Ok(())
}
