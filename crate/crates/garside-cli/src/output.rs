//! JSON and DOT serialization of elements and summit sets.

use garside::conjugacy::SummitSet;
use garside::translation::Rational;
use garside::{Element, Structure};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// `{"delta": r, "factors": [[atom, ...], ...]}` with 1-based atoms.
pub fn element_json<S: Structure>(e: &Element<S>) -> Value {
    let s = e.structure();
    let factors: Vec<Value> = e
        .factors()
        .iter()
        .map(|f| {
            Value::Array(
                s.word(f)
                    .iter()
                    .map(|&a| Value::from(a as u64 + 1))
                    .collect(),
            )
        })
        .collect();
    json!({
        "delta": e.inf(),
        "factors": factors,
        "word": e.canonical_word(),
    })
}

pub fn rational_json(r: &Rational) -> Value {
    json!({
        "num": r.numer().to_i64().map(Value::from).unwrap_or_else(|| Value::from(r.numer().to_string())),
        "den": r.denom().to_i64().map(Value::from).unwrap_or_else(|| Value::from(r.denom().to_string())),
    })
}

fn simple_word<S: Structure>(s: &S, simple: &S::Simple) -> String {
    s.word(simple)
        .iter()
        .map(|&a| format!("s{}", a + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn summit_members_json<S: Structure>(set: &SummitSet<S>) -> Value {
    Value::Array(set.members.iter().map(element_json).collect())
}

pub fn summit_set_json<S: Structure>(s: &S, set: &SummitSet<S>) -> Value {
    let edges: Vec<Value> = set
        .edges
        .iter()
        .map(|e| {
            json!({
                "from": e.from,
                "label": s.word(&e.label).iter().map(|&a| a as u64 + 1).collect::<Vec<_>>(),
                "label_word": simple_word(s, &e.label),
                "to": e.to,
            })
        })
        .collect();
    json!({
        "kind": set.kind.as_str(),
        "inf_s": set.inf_s,
        "sup_s": set.sup_s,
        "members": summit_members_json(set),
        "witnesses": set.witnesses.iter().map(element_json).collect::<Vec<_>>(),
        "edges": edges,
    })
}

/// Deterministic DOT digraph; node indices follow the canonical member
/// order and edges carry the conjugating simple as their label.
pub fn summit_set_dot<S: Structure>(s: &S, set: &SummitSet<S>) -> String {
    let mut out = String::from("digraph summit {\n");
    for (i, m) in set.members.iter().enumerate() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, m.canonical_word()));
    }
    for e in &set.edges {
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{}\"];\n",
            e.from,
            e.to,
            simple_word(s, &e.label)
        ));
    }
    out.push_str("}\n");
    out
}
