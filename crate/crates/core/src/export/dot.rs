use std::fmt::Write;

use crate::spectrum::SpectrumPoset;

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram of the spectrum: an edge `p -> q` for each inclusion
/// `p ⊂ q` with no prime strictly between. Output depends only on the ring.
pub fn export_dot(spectrum: &SpectrumPoset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph spectrum {{").unwrap();
    writeln!(out, "  label={};", quoted(&spectrum.ring().to_string())).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for i in 0..spectrum.len() {
        writeln!(out, "  p{i} [label={}];", quoted(&spectrum.label(i))).unwrap();
    }
    for (a, b) in spectrum.covering_pairs() {
        writeln!(out, "  p{a} -> p{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn local_ring_has_one_edge() {
        let s = SpectrumPoset::enumerate(&Ring::localized_integers(2).unwrap()).unwrap();
        let dot = export_dot(&s);
        assert_eq!(
            dot,
            "digraph spectrum {\n  label=\"Zloc(2)\";\n  rankdir=BT;\n  p0 [label=\"(0)\"];\n  p1 [label=\"(2)\"];\n  p0 -> p1;\n}\n"
        );
    }

    #[test]
    fn field_has_no_edges() {
        let s = SpectrumPoset::enumerate(&Ring::galois_field(2, 2).unwrap()).unwrap();
        assert!(!export_dot(&s).contains("->"));
    }
}
