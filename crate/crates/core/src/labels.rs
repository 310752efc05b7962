//! Element labelers for rendering permutations.

use std::sync::Arc;

use crate::marked_group::Permutation;
use crate::registry::Registry;

pub trait Labeler: Send + Sync {
    fn name(&self) -> &'static str;
    fn label(&self, p: &Permutation) -> String;
}

/// Plain cycle notation, `()` for the identity.
pub struct CycleLabels;

/// Short letters: `1` for the identity, `δ` for the standard d-cycle,
/// and `a, b, c` for `(1 2), (2 3), (1 3)` in degree 3. Everything else
/// falls back to cycle notation.
pub struct LetterLabels;

impl Labeler for CycleLabels {
    fn name(&self) -> &'static str {
        "cycle"
    }

    fn label(&self, p: &Permutation) -> String {
        p.to_string()
    }
}

impl Labeler for LetterLabels {
    fn name(&self) -> &'static str {
        "letters"
    }

    fn label(&self, p: &Permutation) -> String {
        letters(p)
    }
}

pub fn letters(p: &Permutation) -> String {
    if p.is_identity() {
        return "1".into();
    }
    if *p == Permutation::delta(p.degree()) {
        return "δ".into();
    }
    if p.degree() == 3 {
        match p.one_line().as_slice() {
            [2, 1, 3] => return "a".into(),
            [1, 3, 2] => return "b".into(),
            [3, 2, 1] => return "c".into(),
            _ => {}
        }
    }
    p.to_string()
}

pub fn labelers() -> Registry<dyn Labeler> {
    Registry::new("labeler")
        .with("cycle", || Arc::new(CycleLabels) as Arc<dyn Labeler>)
        .with("letters", || Arc::new(LetterLabels) as Arc<dyn Labeler>)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_for_sym3() {
        let p = |s: &str| Permutation::parse(3, s).unwrap();
        let got: Vec<String> = ["()", "(1 2)", "(2 3)", "(1 3)", "(1 2 3)", "(1 3 2)"]
            .iter()
            .map(|s| letters(&p(s)))
            .collect();
        assert_eq!(got, ["1", "a", "b", "c", "δ", "(1 3 2)"]);
    }

    #[test]
    fn registry_lookup() {
        let r = labelers();
        assert_eq!(r.names(), ["cycle", "letters"]);
        let p = Permutation::delta(4);
        assert_eq!(r.get("cycle").unwrap().label(&p), "(1 2 3 4)");
        assert_eq!(r.get("letters").unwrap().label(&p), "δ");
        assert!(r.get("greek").is_err());
    }
}
