//! Interchange documents (JSON) and DOT export for posets and Cayley tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::AbstractMonoid;
use crate::poset::AbstractPoset;

/// JSON poset document: element labels plus `i <= j` index pairs.
/// Reflexive pairs are optional; the transitive closure is applied on load.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    pub leq: Vec<(usize, usize)>,
}

impl PosetDocument {
    pub fn from_poset(p: &AbstractPoset) -> Self {
        let n = p.len();
        let mut leq = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if p.lt(i, j) {
                    leq.push((i, j));
                }
            }
        }
        PosetDocument {
            elements: p.elements().to_vec(),
            leq,
        }
    }

    pub fn to_poset(&self) -> Result<AbstractPoset> {
        AbstractPoset::from_pairs(self.elements.clone(), &self.leq)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))
    }
}

/// JSON Cayley table document.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MonoidDocument {
    pub size: usize,
    pub table: Vec<Vec<usize>>,
}

impl MonoidDocument {
    pub fn from_monoid(m: &AbstractMonoid) -> Self {
        MonoidDocument {
            size: m.len(),
            table: m.rows(),
        }
    }

    pub fn to_monoid(&self) -> Result<AbstractMonoid> {
        if self.table.len() != self.size {
            return Err(Error::MalformedTable(format!(
                "size field is {} but the table has {} rows",
                self.size,
                self.table.len()
            )));
        }
        AbstractMonoid::new(&self.table)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))
    }
}

fn dot_escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering of the Hasse diagram, bottom-to-top, one node per element.
/// Node order and edge order follow element indices, so output is stable.
pub fn poset_to_dot(p: &AbstractPoset, highlight: &[usize]) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, label) in p.elements().iter().enumerate() {
        let attrs = if highlight.contains(&i) {
            " style=filled fillcolor=gray"
        } else {
            ""
        };
        out.push_str(&format!(
            "  n{} [label=\"{}\"{}];\n",
            i,
            dot_escape(label),
            attrs
        ));
    }
    for (lo, hi) in p.hasse_covers() {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> AbstractPoset {
        AbstractPoset::from_pairs(
            vec!["b".into(), "l".into(), "r".into(), "t".into()],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn poset_document_round_trip() {
        let p = diamond();
        let doc = PosetDocument::from_poset(&p);
        let text = doc.to_json();
        let doc2 = PosetDocument::from_json(&text).unwrap();
        assert_eq!(doc, doc2);
        assert_eq!(doc2.to_poset().unwrap(), p);
    }

    #[test]
    fn poset_document_accepts_cover_only_input() {
        // transitive closure applied on load: covers alone describe the
        // diamond too
        let doc = PosetDocument {
            elements: vec!["b".into(), "l".into(), "r".into(), "t".into()],
            leq: vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        };
        assert_eq!(doc.to_poset().unwrap(), diamond());
    }

    #[test]
    fn poset_document_rejects_cycles() {
        let doc = PosetDocument {
            elements: vec!["a".into(), "b".into()],
            leq: vec![(0, 1), (1, 0)],
        };
        assert!(doc.to_poset().is_err());
    }

    #[test]
    fn monoid_document_round_trip() {
        let m = AbstractMonoid::new(&[vec![0, 1], vec![1, 1]]).unwrap();
        let doc = MonoidDocument::from_monoid(&m);
        let doc2 = MonoidDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, doc2);
        assert_eq!(doc2.to_monoid().unwrap(), m);

        let bad = MonoidDocument {
            size: 3,
            table: vec![vec![0, 1], vec![1, 1]],
        };
        assert!(bad.to_monoid().is_err());
    }

    #[test]
    fn dot_is_deterministic_and_marks_highlights() {
        let p = diamond();
        let a = poset_to_dot(&p, &[0, 3]);
        let b = poset_to_dot(&p, &[0, 3]);
        assert_eq!(a, b);
        assert!(a.contains("fillcolor=gray"));
        assert_eq!(a.matches("->").count(), 4);
        assert!(a.contains("n0 -> n1;"));
    }
}
