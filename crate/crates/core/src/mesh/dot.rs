//! Graphviz rendering of AR-quivers of orbit categories.

use std::collections::BTreeMap;

use super::orbit::OrbitSpec;
use super::translation::{column, successors, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mark {
    Bullet,
    Circle,
    Diamond,
    Label(String),
}

impl Mark {
    fn attrs(&self) -> String {
        match self {
            Mark::Bullet => "shape=circle, style=filled, fillcolor=black, width=0.15".into(),
            Mark::Circle => "shape=circle, width=0.15".into(),
            Mark::Diamond => "shape=diamond, width=0.15".into(),
            Mark::Label(s) => format!("shape=plaintext, label=\"{s}\""),
        }
    }
}

/// DOT for `spec`'s AR-quiver on the fundamental domain. Tau-orbits are
/// rows, columns follow `Z Delta`; arrows leaving the domain are drawn
/// dashed to the glued vertex.
pub fn emit_ar_quiver_dot(spec: &OrbitSpec, marks: &[(Vertex, Mark)]) -> String {
    let d = spec.dynkin();
    let marks: BTreeMap<Vertex, &Mark> = marks.iter().map(|(v, m)| (spec.canonical(*v), m)).collect();
    let mut s = format!(
        "digraph AR {{\n  label=\"{}\";\n  node [shape=point, label=\"\"];\n",
        spec.name()
    );
    for v in spec.vertices() {
        let pos = format!("{},{}!", column(d, v), -(d.display_row(v.i) as i64));
        match marks.get(&v) {
            Some(m) => s.push_str(&format!("  \"{v}\" [pos=\"{pos}\", {}];\n", m.attrs())),
            None => s.push_str(&format!("  \"{v}\" [pos=\"{pos}\"];\n")),
        }
    }
    for v in spec.vertices() {
        for w in successors(d, v) {
            let c = spec.canonical(w);
            if c == w {
                s.push_str(&format!("  \"{v}\" -> \"{w}\";\n"));
            } else {
                s.push_str(&format!("  \"{v}\" -> \"{c}\" [style=dashed, constraint=false];\n"));
            }
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_complete() {
        let spec = OrbitSpec::c_me(4, 2).unwrap();
        let a = emit_ar_quiver_dot(&spec, &[(Vertex::new(0, 6), Mark::Bullet)]);
        let b = emit_ar_quiver_dot(&spec, &[(Vertex::new(0, 6), Mark::Bullet)]);
        assert_eq!(a, b);
        assert_eq!(a.matches("pos=").count(), 32);
        assert_eq!(a.matches("->").count(), spec.arrows().len());
        assert_eq!(a.matches("fillcolor").count(), 1);
    }
}
