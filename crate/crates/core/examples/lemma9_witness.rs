//! A single g in I with f = f·g for several members f of a flat-quotient ideal.

use spectra::dsl::{parse_elements, parse_ideal, ring_from_str};
use spectra::flatness::lemma9_witness;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (ring, ideal, members) in [
        ("Z/6", "2", "2, 4"),
        ("Z/12", "4", "4, 8"),
        ("Z/2[x]/(x^2+x)", "x", "x"),
        ("EvBits", "{1}:0, {2}:0, {3}:0", "{1}:0, {2,3}:0"),
    ] {
        let ring = ring_from_str(ring)?;
        let ideal = parse_ideal(&ring, ideal)?;
        let fs = parse_elements(&ring, members)?;
        let g = lemma9_witness(&ring, &ideal, &fs)?;
        let shown: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
        println!("{ring}: I = {}, members [{}] -> g = {g}", ideal.name(), shown.join(", "));
        for f in &fs {
            assert_eq!(ring.mul(f, &g), *f);
        }
    }
    Ok(())
}
