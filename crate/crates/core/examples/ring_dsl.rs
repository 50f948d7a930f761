//! Parse ring descriptions and element literals, including rejected ones.

use spectra::dsl::{parse_elements, parse_ring, ring_from_str};

fn main() {
    for text in ["Z/12", "GF(8)", "Z/3[x]/(x^2+1)", "Zloc(2) * Z/3", "EvBits", "GF(6)", "Zloc(9)", "Z/2[x]/(2x)", "Z/4 *"] {
        match parse_ring(text) {
            Ok(p) => println!("{text:<18} -> {p:?}"),
            Err(e) => println!("{text:<18} -> error {e}"),
        }
    }
    for (ring, elems) in [("Z/12", "4, -1"), ("GF(4)", "x^2, x+1"), ("Zloc(3)", "1/2, 6"), ("Zloc(2) * Z/3", "(1/3, 2)"), ("EvBits", "{1,3}:0, {}:1")] {
        let ring = ring_from_str(ring).expect("valid ring");
        let shown: Vec<String> = parse_elements(&ring, elems)
            .expect("valid literals")
            .iter()
            .map(|e| e.to_string())
            .collect();
        println!("{ring}: {elems:?} -> [{}]", shown.join(", "));
    }
}
