use std::collections::HashSet;

use excseq::cluster::{
    clusters, compatible, enumerate_m_sequences, enumerate_tuples, key_sigma, theta, theta_inverse,
    Domain, Leveled,
};
use excseq::{Catalog, Direction, Quiver};

fn cat(text: &str) -> Catalog {
    Catalog::build(&Quiver::parse(text).unwrap()).unwrap()
}

fn round_trip(text: &str, m: u32) {
    let c = cat(text);
    for t in 1..=c.n() {
        let tuples = enumerate_tuples(&c, m, t);
        let seqs = enumerate_m_sequences(&c, m, t).unwrap();
        assert_eq!(tuples.len(), seqs.len(), "{text} m={m} t={t}");
        let mut images = HashSet::new();
        for tuple in &tuples {
            let seq = theta(&c, tuple).unwrap();
            assert_eq!(&theta_inverse(&c, &seq).unwrap(), tuple);
            assert_eq!(tuple.is_positive(), seq.is_projectively_signed(&c).unwrap());
            images.insert(seq);
        }
        assert_eq!(images.len(), tuples.len());
        for seq in &seqs {
            assert!(
                images.contains(seq),
                "{text} m={m}: {seq:?} has no preimage"
            );
            let tuple = theta_inverse(&c, seq).unwrap();
            assert_eq!(&theta(&c, &tuple).unwrap(), seq);
        }
    }
}

#[test]
fn theta_round_trips_a2() {
    round_trip("A2:1>2", 1);
    round_trip("A2:1>2", 2);
    round_trip("A2:1<2", 3);
}

#[test]
fn theta_round_trips_a3() {
    for q in ["A3:1>2<3", "A3", "A3:1<2>3"] {
        round_trip(q, 1);
        round_trip(q, 2);
    }
}

#[test]
fn theta_round_trips_d4() {
    round_trip("D4:sym-source", 1);
    round_trip("D4:sym-sink", 1);
}

#[test]
fn key_sigma_level_drop_needs_projective_of_perp() {
    for (q, m) in [("A2:1>2", 1), ("A3:1>2<3", 1), ("A3:1>2<3", 2), ("A3", 2)] {
        let c = cat(q);
        let outer = Domain::full(&c, m);
        for t in outer.objects() {
            let inner = outer.perp_of(&c, t.module);
            let perp_projectives = inner.wide().projectives(&c);
            for x in inner.objects() {
                let y = key_sigma(&c, m, t, x, Direction::Forward).unwrap();
                assert!(compatible(&c, y, t));
                assert_eq!(key_sigma(&c, m, t, y, Direction::Inverse).unwrap(), x);
                if y.level + 1 == x.level {
                    assert!(perp_projectives.contains(&x.module));
                }
                if y != x && c.is_projective(y.module) {
                    assert_eq!(y.level, x.level);
                    assert!(perp_projectives.contains(&x.module));
                }
            }
            // the image is exactly the set of objects compatible with T[k]
            let image: HashSet<Leveled> = inner
                .objects()
                .into_iter()
                .map(|x| key_sigma(&c, m, t, x, Direction::Forward).unwrap())
                .collect();
            let partners: HashSet<Leveled> = outer
                .objects()
                .into_iter()
                .filter(|&z| z != t && compatible(&c, z, t))
                .collect();
            assert_eq!(image, partners, "{q} m={m} T={}", t.display(&c));
        }
    }
}

#[test]
fn compatibility_is_preserved_by_sigma() {
    let c = cat("A3:1>2<3");
    for m in [1, 2] {
        let outer = Domain::full(&c, m);
        for t in outer.objects() {
            let inner = outer.perp_of(&c, t.module).objects();
            for &a in &inner {
                for &b in &inner {
                    let sa = key_sigma(&c, m, t, a, Direction::Forward).unwrap();
                    let sb = key_sigma(&c, m, t, b, Direction::Forward).unwrap();
                    assert_eq!(compatible(&c, a, b), compatible(&c, sa, sb));
                }
            }
        }
    }
}

#[test]
fn cluster_counts_match_ordered_tuples() {
    for (q, m, count, positive) in [
        ("A1", 1, 2, 1),
        ("A2", 1, 5, 2),
        ("A3:1>2<3", 1, 14, 5),
        ("A3", 2, 55, 30),
        ("A3:1>2<3", 3, 140, 91),
        ("D4:sym-source", 1, 50, 20),
    ] {
        let c = cat(q);
        let all = clusters(&c, m).unwrap();
        assert_eq!(all.len(), count, "{q} m={m}");
        let pos = all.iter().filter(|s| s.iter().all(|x| x.level < m)).count();
        assert_eq!(pos, positive, "{q} m={m}");
        let n_fact: usize = (1..=c.n()).product();
        assert_eq!(enumerate_tuples(&c, m, c.n()).len(), n_fact * count);
    }
}
