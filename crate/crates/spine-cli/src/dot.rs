//! DOT export with τ-annotated survivors and an optional emboldened cycle.

use spine_core::{Cycle, Graph, NodeId, ReductionResult};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DotError {
    #[error("highlight is not a cycle of the emitted graph: {0}")]
    HighlightNotACycle(spine_core::CycleError),
}

/// Renders `g` as DOT with deterministic node and edge order.
///
/// With a reduction, survivors are labeled `label:τ` (the convention used
/// for drawn spines). A highlight cycle — which must be a cycle of `g` —
/// gets `style=bold` on its edges.
pub fn write_dot(
    g: &Graph,
    r: Option<&ReductionResult>,
    highlight: Option<&Cycle>,
) -> Result<String, DotError> {
    let bold: Vec<(NodeId, NodeId)> = match highlight {
        Some(c) => {
            Cycle::in_graph(g, c.vertices()).map_err(DotError::HighlightNotACycle)?;
            c.edges().collect()
        }
        None => Vec::new(),
    };

    let mut out = String::from("graph spine {\n");
    for v in g.nodes() {
        let label = match r {
            Some(r) if r.is_survivor(v) => format!("{}:{}", g.label(v), r.tau(v)),
            _ => g.label(v).to_string(),
        };
        out.push_str(&format!("  {} [label={}];\n", quote(g.label(v)), quote(&label)));
    }
    for (u, v) in g.edges() {
        let attr = if bold.contains(&(u, v)) { " [style=bold]" } else { "" };
        out.push_str(&format!(
            "  {} -- {}{};\n",
            quote(g.label(u)),
            quote(g.label(v)),
            attr
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use spine_core::{gen, reduce, Graph};

    #[test]
    fn c4_is_stable() {
        let dot = write_dot(&gen::cycle_graph(4), None, None).unwrap();
        assert_eq!(
            dot,
            "graph spine {\n  \"0\" [label=\"0\"];\n  \"1\" [label=\"1\"];\n  \"2\" [label=\"2\"];\n  \"3\" [label=\"3\"];\n  \"0\" -- \"1\";\n  \"0\" -- \"3\";\n  \"1\" -- \"2\";\n  \"2\" -- \"3\";\n}\n"
        );
    }

    #[test]
    fn survivors_carry_tau_labels() {
        // C5 + chord: node 0 absorbs node 1, so the spine shows "0:2".
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let r = reduce(&g);
        let dot = write_dot(r.spine(), Some(&r), None).unwrap();
        assert!(dot.contains("label=\"0:2\""));
        assert!(dot.contains("label=\"3:1\""));
        assert!(!dot.contains("\"1\" [")); // victims are not drawn
    }

    #[test]
    fn highlighted_cycle_edges_are_bold() {
        let c4 = gen::cycle_graph(4);
        let cycles = spine_core::chordless_cycles(&c4, 3, 8);
        let dot = write_dot(&c4, None, Some(&cycles[0])).unwrap();
        assert_eq!(dot.matches("[style=bold]").count(), 4);
    }

    #[test]
    fn foreign_highlight_is_rejected() {
        let c4 = gen::cycle_graph(4);
        let c5 = gen::cycle_graph(5);
        let five = &spine_core::chordless_cycles(&c5, 3, 8)[0];
        assert!(write_dot(&c4, None, Some(five)).is_err());
    }
}
