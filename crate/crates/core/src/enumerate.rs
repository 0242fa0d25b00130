//! Exhaustive backtracking over exceptional sequences.
//!
//! Terms are chosen from the right: `E_n` over the whole catalog, then each
//! earlier term over the right perpendicular category of the terms already
//! chosen. Candidates are tried in catalog order, so sequences come out
//! ordered lexicographically by `(E_n, E_{n-1}, …)`.

use crate::catalog::{Catalog, ModuleId};
use crate::sequence::ExceptionalSequence;

/// Calls `f` on every exceptional sequence of length `len`; `f` returns
/// `false` to stop early.
pub fn for_each_sequence(cat: &Catalog, len: usize, mut f: impl FnMut(&[ModuleId]) -> bool) {
    if len > cat.n() {
        return;
    }
    let mut chosen: Vec<ModuleId> = Vec::with_capacity(len);
    let mut terms = vec![ModuleId(0); len];
    recurse(cat, len, &mut chosen, &mut terms, &mut f);
}

fn recurse(
    cat: &Catalog,
    len: usize,
    chosen: &mut Vec<ModuleId>,
    terms: &mut [ModuleId],
    f: &mut impl FnMut(&[ModuleId]) -> bool,
) -> bool {
    if chosen.len() == len {
        return f(terms);
    }
    for x in cat.ids() {
        if !chosen.iter().all(|&e| cat.perp(e, x)) {
            continue;
        }
        terms[len - 1 - chosen.len()] = x;
        chosen.push(x);
        let go_on = recurse(cat, len, chosen, terms, f);
        chosen.pop();
        if !go_on {
            return false;
        }
    }
    true
}

pub fn enumerate_sequences(cat: &Catalog, len: usize) -> Vec<ExceptionalSequence> {
    let mut out = Vec::new();
    for_each_sequence(cat, len, |t| {
        out.push(ExceptionalSequence::new_unchecked(t.to_vec()));
        true
    });
    out
}

/// All complete exceptional sequences.
pub fn enumerate_ces(cat: &Catalog) -> Vec<ExceptionalSequence> {
    enumerate_sequences(cat, cat.n())
}

pub fn count_ces(cat: &Catalog) -> u64 {
    let mut count = 0;
    for_each_sequence(cat, cat.n(), |_| {
        count += 1;
        true
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use crate::sequence::validate;
    use std::collections::HashSet;

    fn cat(text: &str) -> Catalog {
        Catalog::build(&Quiver::parse(text).unwrap()).unwrap()
    }

    /// Brute force over all n-tuples of catalog modules.
    fn brute_force(c: &Catalog) -> HashSet<Vec<ModuleId>> {
        let n = c.n();
        let mut out = HashSet::new();
        let total = c.len().pow(n as u32);
        for code in 0..total {
            let mut x = code;
            let terms: Vec<ModuleId> = (0..n)
                .map(|_| {
                    let id = ModuleId(x % c.len());
                    x /= c.len();
                    id
                })
                .collect();
            if validate(c, &terms).is_ok() {
                out.insert(terms);
            }
        }
        out
    }

    #[test]
    fn a2_has_three() {
        let c = cat("A2:1>2");
        let all: Vec<Vec<String>> = enumerate_ces(&c).iter().map(|s| s.keys(&c)).collect();
        assert_eq!(
            all,
            vec![vec!["1.0", "0.1"], vec!["1.1", "1.0"], vec!["0.1", "1.1"]]
        );
    }

    #[test]
    fn matches_brute_force() {
        for text in ["A2:1>2", "A3:1>2<3", "A3", "Q3:2>1,2>3"] {
            let c = cat(text);
            let fast: HashSet<Vec<ModuleId>> = enumerate_ces(&c)
                .into_iter()
                .map(|s| s.terms().to_vec())
                .collect();
            let slow = brute_force(&c);
            assert_eq!(fast, slow, "{text}");
        }
        assert_eq!(brute_force(&cat("A3:1>2<3")).len(), 16);
    }

    #[test]
    fn counts_and_no_duplicates() {
        for (text, count) in [("A1", 1), ("A2", 3), ("A3", 16), ("D4:sym-source", 162)] {
            let c = cat(text);
            let all = enumerate_ces(&c);
            assert_eq!(all.len(), count, "{text}");
            let unique: HashSet<_> = all.iter().collect();
            assert_eq!(unique.len(), all.len());
        }
    }

    #[test]
    fn early_stop() {
        let c = cat("A3");
        let mut seen = 0;
        for_each_sequence(&c, 3, |_| {
            seen += 1;
            seen < 5
        });
        assert_eq!(seen, 5);
    }
}
