//! Exhaustive checks of the structural theorems over small Dynkin quivers.

use excseq::enumerate::enumerate_ces;
use excseq::mutation::{braid_sigma, delta_k, garside, relative_translate_dim};
use excseq::sequence::{
    classify, covered_by, has_epimorphism_from, has_monomorphism_into, left_perp, perp_a, perp_b,
    private_vertices, rel_proj_reduced_scan, support_hasse, CoverSide,
};
use excseq::{BraidDirection, Catalog, ExceptionalSequence, Quiver};

const QUIVERS: [&str; 10] = [
    "A1",
    "A2:1>2",
    "A2:1<2",
    "A3",
    "A3:1>2<3",
    "A3:1<2>3",
    "A4",
    "A4:1>2<3>4",
    "D4:sym-source",
    "D4:sym-sink",
];

fn cat(text: &str) -> Catalog {
    Catalog::build(&Quiver::parse(text).unwrap()).unwrap()
}

fn for_all(f: impl Fn(&Catalog, &ExceptionalSequence)) {
    for q in QUIVERS {
        let c = cat(q);
        for seq in enumerate_ces(&c) {
            f(&c, &seq);
        }
    }
}

#[test]
fn complete_sequences_form_a_basis() {
    for_all(|c, seq| {
        assert!(seq.is_complete(c));
        assert_eq!(seq.dimension_determinant(c).abs(), 1);
    });
}

#[test]
fn covering_criteria() {
    for_all(|c, seq| {
        let classes = classify(c, seq).unwrap();
        for k in 1..=seq.len() {
            let class = classes[k - 1];
            let left = covered_by(c, seq, k, &CoverSide::Left);
            let right = covered_by(c, seq, k, &CoverSide::Right);
            if class.rel_inj {
                assert_eq!(class.rel_proj, !left);
            }
            assert_eq!(!class.rel_proj, class.rel_inj && left);
            assert_eq!(!class.rel_inj, class.rel_proj && right);
        }
    });
}

#[test]
fn roots_are_exactly_the_uncovered_terms() {
    for_all(|c, seq| {
        let classes = classify(c, seq).unwrap();
        let hasse = support_hasse(c, seq);
        let n = c.n();
        for k in 1..=seq.len() {
            let root = classes[k - 1].is_root();
            assert_eq!(root, !covered_by(c, seq, k, &CoverSide::Others));
            assert_eq!(root, !private_vertices(c, seq, k).is_empty());
            if root {
                assert!(hasse.maximal[k - 1]);
            }
            let rest: Vec<_> = (1..=n).filter(|&j| j != k).map(|j| seq.term(j)).collect();
            let by_projective = (0..n).any(|v| {
                let mut t = rest.clone();
                t.push(c.projective(v));
                ExceptionalSequence::new(c, t).is_ok()
            });
            let by_injective = (0..n).any(|v| {
                let mut t = vec![c.injective(v)];
                t.extend(&rest);
                ExceptionalSequence::new(c, t).is_ok()
            });
            assert_eq!(root, by_projective);
            assert_eq!(root, by_injective);
        }
    });
}

#[test]
fn reduced_scan_and_epi_mono_criteria() {
    for_all(|c, seq| {
        let classes = classify(c, seq).unwrap();
        for k in 1..=seq.len() {
            let class = classes[k - 1];
            let e = seq.term(k);
            assert_eq!(rel_proj_reduced_scan(c, seq, k).unwrap(), class.rel_proj);
            let a_prev = perp_a(c, seq, k - 1).unwrap();
            assert_eq!(
                class.rel_proj,
                !has_epimorphism_from(c, a_prev.members(), e)
            );
            let b_next = if k == seq.len() {
                Vec::new()
            } else {
                perp_b(c, seq, k + 1).unwrap().members().to_vec()
            };
            assert_eq!(class.rel_inj, !has_monomorphism_into(c, e, &b_next));
        }
    });
}

#[test]
fn b_k_is_the_left_perp_of_the_earlier_terms() {
    for_all(|c, seq| {
        for k in 1..=seq.len() {
            let direct = left_perp(c, &seq.terms()[..k - 1]);
            assert_eq!(perp_b(c, seq, k).unwrap(), direct);
        }
    });
}

#[test]
fn classification_of_suffixes_matches() {
    for_all(|c, seq| {
        let full = classify(c, seq).unwrap();
        for start in 1..=seq.len() {
            let suffix = ExceptionalSequence::new(c, seq.terms()[start - 1..].to_vec()).unwrap();
            assert_eq!(suffix.start_index(c), start);
            assert_eq!(classify(c, &suffix).unwrap(), full[start - 1..]);
        }
        let last = full.last().unwrap();
        assert!(last.rel_inj);
        assert_eq!(last.rel_proj, c.is_projective(seq.term(seq.len())));
    });
}

#[test]
fn roots_shift_to_roots() {
    for_all(|c, seq| {
        let classes = classify(c, seq).unwrap();
        for k in 1..seq.len() {
            if classes[k - 1].is_root() {
                let moved = braid_sigma(c, seq, k, BraidDirection::Right).unwrap();
                assert!(classify(c, &moved).unwrap()[k].is_root());
            }
        }
    });
}

#[test]
fn braid_moves_invert_each_other() {
    for_all(|c, seq| {
        for k in 1..seq.len() {
            let r = braid_sigma(c, seq, k, BraidDirection::Right).unwrap();
            assert_eq!(&braid_sigma(c, &r, k, BraidDirection::Left).unwrap(), seq);
            let l = braid_sigma(c, seq, k, BraidDirection::Left).unwrap();
            assert_eq!(&braid_sigma(c, &l, k, BraidDirection::Right).unwrap(), seq);
        }
    });
}

#[test]
fn braid_relations_on_a3_and_a4() {
    let right = BraidDirection::Right;
    for q in ["A3", "A3:1>2<3", "A4", "A4:1>2<3>4"] {
        let c = cat(q);
        let s = |seq: &ExceptionalSequence, k| braid_sigma(&c, seq, k, right).unwrap();
        for seq in enumerate_ces(&c) {
            for k in 1..c.n() - 1 {
                assert_eq!(
                    s(&s(&s(&seq, k), k + 1), k),
                    s(&s(&s(&seq, k + 1), k), k + 1)
                );
            }
            for k in 1..c.n() {
                for j in k + 2..c.n() {
                    assert_eq!(s(&s(&seq, k), j), s(&s(&seq, j), k));
                }
            }
        }
    }
}

#[test]
fn delta_k_front_term_is_the_relative_translate() {
    for_all(|c, seq| {
        let classes = classify(c, seq).unwrap();
        for k in 1..=seq.len() {
            let d = delta_k(c, seq, k).unwrap();
            assert!(d.is_complete(c));
            let rest: Vec<_> = (1..=seq.len())
                .filter(|&j| j != k)
                .map(|j| seq.term(j))
                .collect();
            assert_eq!(&d.terms()[1..], rest.as_slice());
            if !classes[k - 1].rel_proj {
                assert_eq!(*c.dim(d.term(1)), relative_translate_dim(c, seq, k));
            }
        }
    });
}

#[test]
fn theorem_e() {
    for q in [
        "A1",
        "A2:1>2",
        "A3",
        "A3:1>2<3",
        "A3:1<2>3",
        "D4:sym-source",
        "D4:sym-sink",
    ] {
        let c = cat(q);
        for seq in enumerate_ces(&c) {
            let g = garside(&c, &seq).unwrap();
            let n = seq.len();
            assert_eq!(g.term(n), seq.term(1));
            let before = classify(&c, &seq).unwrap();
            let after = classify(&c, &g).unwrap();
            for k in 1..=n {
                let (e, ep) = (before[k - 1], after[n - k]);
                let e_mod = seq.term(k);
                let ep_mod = g.term(n + 1 - k);
                assert_eq!(e.rel_proj, ep.rel_inj, "{q} (1) at {k}");
                assert_eq!(c.is_projective(e_mod), ep.is_root(), "{q} (2) at {k}");
                assert_eq!(e.is_root(), c.is_injective(ep_mod), "{q} (3) at {k}");
                assert_eq!(
                    e.rel_inj && !e.rel_proj,
                    ep.rel_proj && !ep.rel_inj,
                    "{q} (4) at {k}"
                );
            }
        }
    }
}

#[test]
fn almost_split_middle_terms_lie_in_the_right_perp() {
    for q in QUIVERS {
        let c = cat(q);
        assert_eq!(c.len(), c.quiver().positive_roots().unwrap().len());
        for x in c.ids() {
            match c.ar_translate(x) {
                None => assert!(c.is_projective(x)),
                Some(t) => {
                    assert_eq!(c.hom(x, t), 0);
                    assert_eq!(c.ext(x, t), 1);
                    for b in c.ar_middle(x).unwrap() {
                        assert!(c.perp(x, b), "{q}: middle term not in C^perp");
                    }
                }
            }
        }
    }
}
