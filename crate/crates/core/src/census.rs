//! Exhaustive statistics over complete exceptional sequences and m-clusters.
//!
//! Every probability is an exact ratio `count / total`.

use std::collections::{BTreeMap, HashSet};

use num::rational::Ratio;

use crate::catalog::{Catalog, ModuleId};
use crate::cluster::{clusters, enumerate_m_sequences, enumerate_tuples, theta};
use crate::enumerate::{enumerate_ces, for_each_sequence};
use crate::error::{Error, Result};
use crate::mutation::move_left;
use crate::quiver::DynkinType;
use crate::sequence::{classify, private_vertices, right_perp, ExceptionalSequence};

pub const DEFAULT_RANK_CAP: usize = 5;
pub const RANK_CAP_VAR: &str = "EXCSEQ_RANK_CAP";

/// The rank cap from `EXCSEQ_RANK_CAP`, or [`DEFAULT_RANK_CAP`].
pub fn rank_cap_from_env() -> usize {
    std::env::var(RANK_CAP_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_RANK_CAP)
}

pub fn check_rank(cat: &Catalog, cap: usize) -> Result<()> {
    if cat.n() > cap {
        Err(Error::Scale { rank: cat.n(), cap })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PositionCounts {
    pub rel_proj: u64,
    pub rel_inj: u64,
    /// Both relatively projective and relatively injective.
    pub rpi: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub label: String,
    pub dynkin: DynkinType,
    pub coxeter_number: u64,
    pub total: u64,
    /// Indexed by position `k - 1`.
    pub positions: Vec<PositionCounts>,
    /// For every nonempty set of 1-based positions, the number of sequences
    /// whose terms at all those positions are rPI.
    pub rpi_sets: BTreeMap<Vec<usize>, u64>,
    /// Same, for relative projectivity.
    pub rel_proj_sets: BTreeMap<Vec<usize>, u64>,
    /// Indexed by `k = 0..=n`: sequences whose last `k` terms are projective.
    pub last_projective: Vec<u64>,
    /// Indexed by `k = 0..=n`: sequences whose last `k` terms are relatively
    /// projective.
    pub last_rel_proj: Vec<u64>,
}

fn subsets(n: usize) -> impl Iterator<Item = (u64, Vec<usize>)> {
    (1u64..1 << n).map(move |mask| {
        let set = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| i + 1)
            .collect();
        (mask, set)
    })
}

fn trailing_ones(mask: u64, n: usize) -> usize {
    (0..n)
        .take_while(|i| mask & (1 << (n - 1 - i)) != 0)
        .count()
}

/// Counts over every complete exceptional sequence of `cat`.
pub fn census(cat: &Catalog, rank_cap: usize) -> Result<CensusReport> {
    check_rank(cat, rank_cap)?;
    let q = cat.quiver();
    let dynkin = q.dynkin_type()?;
    let n = cat.n();
    let mut total = 0u64;
    let mut positions = vec![PositionCounts::default(); n];
    let mut rpi_by_mask: BTreeMap<u64, u64> = BTreeMap::new();
    let mut proj_by_mask: BTreeMap<u64, u64> = BTreeMap::new();
    let mut last_projective = vec![0u64; n + 1];
    let mut last_rel_proj = vec![0u64; n + 1];
    let mut failure = None;
    for_each_sequence(cat, n, |terms| {
        let seq = ExceptionalSequence::new_unchecked(terms.to_vec());
        let classes = match classify(cat, &seq) {
            Ok(c) => c,
            Err(e) => {
                failure = Some(e);
                return false;
            }
        };
        total += 1;
        let (mut rpi, mut proj, mut projective) = (0u64, 0u64, 0u64);
        for (i, c) in classes.iter().enumerate() {
            let p = &mut positions[i];
            p.rel_proj += c.rel_proj as u64;
            p.rel_inj += c.rel_inj as u64;
            p.rpi += c.is_root() as u64;
            rpi |= (c.is_root() as u64) << i;
            proj |= (c.rel_proj as u64) << i;
            projective |= (cat.is_projective(terms[i]) as u64) << i;
        }
        *rpi_by_mask.entry(rpi).or_default() += 1;
        *proj_by_mask.entry(proj).or_default() += 1;
        for count in &mut last_projective[..=trailing_ones(projective, n)] {
            *count += 1;
        }
        for count in &mut last_rel_proj[..=trailing_ones(proj, n)] {
            *count += 1;
        }
        true
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let superset_counts = |by_mask: &BTreeMap<u64, u64>| -> BTreeMap<Vec<usize>, u64> {
        subsets(n)
            .map(|(mask, set)| {
                let count = by_mask
                    .iter()
                    .filter(|(m, _)| *m & mask == mask)
                    .map(|(_, c)| c)
                    .sum();
                (set, count)
            })
            .collect()
    };
    Ok(CensusReport {
        label: q.label().to_string(),
        dynkin,
        coxeter_number: dynkin.coxeter_number(),
        total,
        positions,
        rpi_sets: superset_counts(&rpi_by_mask),
        rel_proj_sets: superset_counts(&proj_by_mask),
        last_projective,
        last_rel_proj,
    })
}

impl CensusReport {
    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn probability(&self, count: u64) -> Ratio<u64> {
        Ratio::new(count, self.total)
    }

    pub fn rpi_count(&self, positions: &[usize]) -> Option<u64> {
        self.rpi_sets.get(positions).copied()
    }

    /// Sequences whose last two terms are rPI, as `"count/total = p"`.
    pub fn rpi_pair_text(&self) -> Option<String> {
        let n = self.n();
        let count = self.rpi_count(&[n.checked_sub(1).filter(|&p| p >= 1)?, n])?;
        Some(format!(
            "{count}/{} = {}",
            self.total,
            self.probability(count)
        ))
    }

    /// The exact identities the counts must satisfy; each entry is a
    /// description and whether it holds.
    pub fn identities(&self) -> Vec<(String, bool)> {
        let h = self.coxeter_number;
        let mut out = vec![(
            format!(
                "total = n! h^n / |W| = {}",
                self.dynkin.exceptional_sequence_count()
            ),
            self.total == self.dynkin.exceptional_sequence_count(),
        )];
        for (i, p) in self.positions.iter().enumerate() {
            out.push((
                format!("#rPI at position {} times h = 2 total", i + 1),
                p.rpi * h == 2 * self.total,
            ));
        }
        out.push((
            "#(E_n projective) times h = 2 total".into(),
            self.last_projective
                .get(1)
                .is_some_and(|&c| c * h == 2 * self.total),
        ));
        for (set, &count) in &self.rpi_sets {
            out.push((
                format!("#rPI at {set:?} = #(last {} terms projective)", set.len()),
                count == self.last_projective[set.len()],
            ));
        }
        out
    }

    /// Whether relative projectivity at distinct positions is independent:
    /// `count(S) * total^(|S|-1) = prod_{k in S} count(k)` for every `S`.
    pub fn rel_proj_independent(&self) -> bool {
        self.rel_proj_sets.iter().all(|(set, &count)| {
            let lhs = count as u128 * (self.total as u128).pow(set.len() as u32 - 1);
            let rhs: u128 = set
                .iter()
                .map(|&k| self.positions[k - 1].rel_proj as u128)
                .product();
            lhs == rhs
        })
    }
}

fn check_positions(seq: &ExceptionalSequence, positions: &[usize]) -> Result<()> {
    let ok = !positions.is_empty()
        && positions.windows(2).all(|w| w[0] < w[1])
        && positions.iter().all(|&j| j >= 1 && j <= seq.len());
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "positions {positions:?} are not increasing within 1..={}",
            seq.len()
        )))
    }
}

/// Removes the rPI terms at `positions` and appends `P_{v_k}, …, P_{v_1}`,
/// where `v_i` is the vertex owned by the term at `positions[i-1]`.
pub fn rpi_to_projective(
    cat: &Catalog,
    seq: &ExceptionalSequence,
    positions: &[usize],
) -> Result<ExceptionalSequence> {
    check_positions(seq, positions)?;
    let classes = classify(cat, seq)?;
    let mut vertices = Vec::with_capacity(positions.len());
    for &j in positions {
        if !classes[j - 1].is_root() {
            return Err(Error::Domain(format!("term {j} is not rPI")));
        }
        match private_vertices(cat, seq, j).as_slice() {
            [v] => vertices.push(*v),
            other => {
                return Err(Error::Integrity(format!(
                    "rPI term {j} owns {} vertices",
                    other.len()
                )))
            }
        }
    }
    let mut terms: Vec<ModuleId> = (1..=seq.len())
        .filter(|j| !positions.contains(j))
        .map(|j| seq.term(j))
        .collect();
    terms.extend(vertices.iter().rev().map(|&v| cat.projective(v)));
    ExceptionalSequence::new(cat, terms)
        .map_err(|e| Error::Integrity(format!("B -> P image is not exceptional: {e}")))
}

/// Inverse of [`rpi_to_projective`]: moves the last term to `positions[0]`,
/// then the new last term to `positions[1]`, and so on.
pub fn projective_to_rpi(
    cat: &Catalog,
    seq: &ExceptionalSequence,
    positions: &[usize],
) -> Result<ExceptionalSequence> {
    check_positions(seq, positions)?;
    let n = seq.len();
    if let Some(j) = (n + 1 - positions.len()..=n).find(|&j| !cat.is_projective(seq.term(j))) {
        return Err(Error::Domain(format!("term {j} is not projective")));
    }
    let mut current = seq.clone();
    for &j in positions {
        current = move_left(cat, &current, n, j)?;
    }
    Ok(current)
}

/// Builds the bijection between sequences rPI at `positions` and sequences
/// whose last `k` terms are projective, checks both round trips, and returns
/// the common count.
pub fn verify_bp_bijection(cat: &Catalog, positions: &[usize]) -> Result<u64> {
    let all = enumerate_ces(cat);
    let k = positions.len();
    let n = cat.n();
    let mut b = Vec::new();
    let mut p = Vec::new();
    for seq in &all {
        let classes = classify(cat, seq)?;
        if positions.iter().all(|&j| classes[j - 1].is_root()) {
            b.push(seq);
        }
        if (n + 1 - k..=n).all(|j| cat.is_projective(seq.term(j))) {
            p.push(seq);
        }
    }
    let p_set: HashSet<&ExceptionalSequence> = p.iter().copied().collect();
    let b_set: HashSet<&ExceptionalSequence> = b.iter().copied().collect();
    let mut images = HashSet::new();
    for &seq in &b {
        let image = rpi_to_projective(cat, seq, positions)?;
        if !p_set.contains(&image) {
            return Err(Error::Integrity("B -> P image is outside P".into()));
        }
        if projective_to_rpi(cat, &image, positions)? != *seq {
            return Err(Error::Integrity("P -> B does not invert B -> P".into()));
        }
        images.insert(image);
    }
    for &seq in &p {
        let image = projective_to_rpi(cat, seq, positions)?;
        if !b_set.contains(&image) {
            return Err(Error::Integrity("P -> B image is outside B".into()));
        }
        if rpi_to_projective(cat, &image, positions)? != *seq {
            return Err(Error::Integrity("B -> P does not invert P -> B".into()));
        }
    }
    if images.len() != b.len() || b.len() != p.len() {
        return Err(Error::Integrity(format!(
            "|B| = {}, |P| = {}, distinct images = {}",
            b.len(),
            p.len(),
            images.len()
        )));
    }
    Ok(b.len() as u64)
}

/// Outcome of checking the structure of sequences whose last `k` terms are
/// relatively projective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LastKReport {
    pub k: usize,
    /// Sequences whose last `k` terms are relatively projective.
    pub checked: u64,
    /// Among those, sequences whose last `k` terms are rPI.
    pub rpi: u64,
    /// Counts per top sequence `(v_1, …, v_k)` (0-based vertices).
    pub by_tops: BTreeMap<Vec<usize>, u64>,
    /// Top sequences for which the last `k` terms are rPI.
    pub rpi_tops: Vec<Vec<usize>>,
}

/// The unique vertex `w` with `Hom(M, S_w) != 0`, if `M` has a simple top.
pub fn simple_top(cat: &Catalog, m: ModuleId) -> Option<usize> {
    let tops: Vec<usize> = (0..cat.n())
        .filter(|&w| cat.hom(m, cat.simple(w)) > 0)
        .collect();
    match tops.as_slice() {
        [w] if cat.hom(m, cat.simple(*w)) == 1 => Some(*w),
        _ => None,
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

/// Checks, for every complete exceptional sequence whose last `k` terms are
/// relatively projective: simple tops `v_i`, `v_i` outside the supports of
/// earlier terms, each term equal to the projective object of its right
/// perpendicular category with top `v_i`, the rPI criterion
/// `Hom(P_{v_i}, P_{v_j}) = 0 for i < j`, and invariance of the counts under
/// reordering the tops.
pub fn last_k_projective_structure(
    cat: &Catalog,
    k: usize,
    rank_cap: usize,
) -> Result<LastKReport> {
    check_rank(cat, rank_cap)?;
    let n = cat.n();
    if k == 0 || k > n {
        return Err(Error::Domain(format!("k = {k} is outside 1..={n}")));
    }
    let fail = |msg: String| Err(Error::Integrity(msg));
    let mut report = LastKReport {
        k,
        checked: 0,
        rpi: 0,
        by_tops: BTreeMap::new(),
        rpi_tops: Vec::new(),
    };
    let mut rpi_tops = HashSet::new();
    for seq in enumerate_ces(cat) {
        let classes = classify(cat, &seq)?;
        let last: Vec<usize> = (n + 1 - k..=n).collect();
        if !last.iter().all(|&j| classes[j - 1].rel_proj) {
            continue;
        }
        report.checked += 1;
        let mut tops = Vec::with_capacity(k);
        for &j in &last {
            let e = seq.term(j);
            let Some(v) = simple_top(cat, e) else {
                return fail(format!("term {j} of {:?} has no simple top", seq.keys(cat)));
            };
            if (1..j).any(|i| cat.support(seq.term(i)) & (1 << v) != 0) {
                return fail(format!("top of term {j} lies in an earlier support"));
            }
            let perp = right_perp(cat, &seq.terms()[j..]);
            let with_top: Vec<ModuleId> = perp
                .projectives(cat)
                .into_iter()
                .filter(|&p| simple_top(cat, p) == Some(v))
                .collect();
            if with_top != [e] {
                return fail(format!(
                    "term {j} is not the projective object with top {} of its perpendicular category",
                    v + 1
                ));
            }
            tops.push(v);
        }
        let all_rpi = last.iter().all(|&j| classes[j - 1].is_root());
        let hom_test = (0..k).all(|i| {
            (i + 1..k).all(|j| cat.hom(cat.projective(tops[i]), cat.projective(tops[j])) == 0)
        });
        if all_rpi != hom_test {
            return fail(format!(
                "rPI of the last {k} terms disagrees with the Hom test for tops {tops:?}"
            ));
        }
        if all_rpi {
            report.rpi += 1;
            rpi_tops.insert(tops.clone());
        }
        *report.by_tops.entry(tops).or_default() += 1;
    }
    for (tops, &count) in &report.by_tops {
        for perm in permutations(tops) {
            if report.by_tops.get(&perm).copied().unwrap_or(0) != count {
                return fail(format!("count for tops {perm:?} differs from {tops:?}"));
            }
        }
    }
    report.rpi_tops = rpi_tops.into_iter().collect();
    report.rpi_tops.sort();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterCensus {
    pub m: u32,
    pub clusters: u64,
    pub positive_clusters: u64,
    pub ordered_tuples: u64,
    pub m_sequences: u64,
    pub projectively_signed: u64,
}

/// Counts m-clusters and checks that `theta` matches ordered complete tuples
/// with complete m-exceptional sequences one to one.
pub fn cluster_census(cat: &Catalog, m: u32, rank_cap: usize) -> Result<ClusterCensus> {
    check_rank(cat, rank_cap)?;
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let n = cat.n();
    let all = clusters(cat, m)?;
    let positive = all.iter().filter(|c| c.iter().all(|x| x.level < m)).count();
    let tuples = enumerate_tuples(cat, m, n);
    let seqs = enumerate_m_sequences(cat, m, n)?;
    let mut images = HashSet::new();
    for t in &tuples {
        images.insert(theta(cat, t)?);
    }
    if images.len() != tuples.len() || seqs.iter().any(|s| !images.contains(s)) {
        return Err(Error::Integrity(
            "theta is not a bijection onto complete m-exceptional sequences".into(),
        ));
    }
    let mut signed = 0u64;
    for s in &seqs {
        signed += s.is_projectively_signed(cat)? as u64;
    }
    let n_fact: u64 = (1..=n as u64).product();
    if tuples.len() as u64 != n_fact * all.len() as u64 {
        return Err(Error::Integrity(format!(
            "{} ordered tuples for {} clusters of size {n}",
            tuples.len(),
            all.len()
        )));
    }
    Ok(ClusterCensus {
        m,
        clusters: all.len() as u64,
        positive_clusters: positive as u64,
        ordered_tuples: tuples.len() as u64,
        m_sequences: seqs.len() as u64,
        projectively_signed: signed,
    })
}
