//! Exceptional sequences, perpendicular categories and relative
//! projectivity/injectivity.
//!
//! Positions are 1-based and count from the first present term. For a
//! complete sequence they coincide with the usual `(E_1, …, E_n)` indices; a
//! shorter sequence `(E_k, …, E_n)` is read as completed on the left, and
//! nothing computed here depends on the missing terms.

use crate::catalog::{Catalog, ModuleId};
use crate::error::{Error, PairDefect, Result};
use crate::linalg;
use crate::rep::{self, Morphism};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExceptionalSequence {
    terms: Vec<ModuleId>,
}

impl ExceptionalSequence {
    pub fn new(cat: &Catalog, terms: Vec<ModuleId>) -> Result<Self> {
        validate(cat, &terms)?;
        Ok(ExceptionalSequence { terms })
    }

    pub fn from_keys<S: AsRef<str>>(cat: &Catalog, keys: &[S]) -> Result<Self> {
        let terms = keys
            .iter()
            .map(|k| cat.parse_key(k.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        ExceptionalSequence::new(cat, terms)
    }

    pub(crate) fn new_unchecked(terms: Vec<ModuleId>) -> Self {
        ExceptionalSequence { terms }
    }

    pub fn terms(&self) -> &[ModuleId] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The term at 1-based position `k`.
    pub fn term(&self, k: usize) -> ModuleId {
        self.terms[k - 1]
    }

    /// Index of the first present term when the sequence is completed on the left.
    pub fn start_index(&self, cat: &Catalog) -> usize {
        cat.n() - self.terms.len() + 1
    }

    pub fn is_complete(&self, cat: &Catalog) -> bool {
        self.terms.len() == cat.n()
    }

    pub fn keys(&self, cat: &Catalog) -> Vec<String> {
        self.terms.iter().map(|&t| cat.key(t)).collect()
    }

    /// Determinant of the matrix of dimension vectors (rows = terms).
    pub fn dimension_determinant(&self, cat: &Catalog) -> i64 {
        let rows: Vec<Vec<i64>> = self.terms.iter().map(|&t| cat.dim(t).0.clone()).collect();
        linalg::det_i64(&rows)
    }
}

/// Checks `Hom(E_j, E_i) = 0 = Ext(E_j, E_i)` for all `i < j`, reporting the
/// first failing pair.
pub fn validate(cat: &Catalog, terms: &[ModuleId]) -> Result<()> {
    if let Some(bad) = terms.iter().find(|t| t.0 >= cat.len()) {
        return Err(Error::Catalog(format!("unknown module id {bad}")));
    }
    if terms.len() > cat.n() {
        return Err(Error::InvalidTuple(format!(
            "{} terms exceed the rank {}",
            terms.len(),
            cat.n()
        )));
    }
    for j in 0..terms.len() {
        for i in 0..j {
            let defect = if cat.hom(terms[j], terms[i]) != 0 {
                Some(PairDefect::Hom)
            } else if cat.ext(terms[j], terms[i]) != 0 {
                Some(PairDefect::Ext)
            } else {
                None
            };
            if let Some(defect) = defect {
                return Err(Error::NotExceptional {
                    later: j + 1,
                    earlier: i + 1,
                    defect,
                });
            }
        }
    }
    Ok(())
}

/// A wide subcategory given by its indecomposable objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WideSubcat {
    members: Vec<ModuleId>,
}

impl WideSubcat {
    pub fn all(cat: &Catalog) -> Self {
        WideSubcat {
            members: cat.ids().collect(),
        }
    }

    pub fn members(&self) -> &[ModuleId] {
        &self.members
    }

    pub fn contains(&self, id: ModuleId) -> bool {
        self.members.binary_search(&id).is_ok()
    }

    pub fn intersection(&self, other: &WideSubcat) -> WideSubcat {
        WideSubcat {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Indecomposable projective objects: no extensions into the subcategory.
    pub fn projectives(&self, cat: &Catalog) -> Vec<ModuleId> {
        self.members
            .iter()
            .copied()
            .filter(|&x| self.members.iter().all(|&z| cat.ext(x, z) == 0))
            .collect()
    }

    pub fn injectives(&self, cat: &Catalog) -> Vec<ModuleId> {
        self.members
            .iter()
            .copied()
            .filter(|&x| self.members.iter().all(|&z| cat.ext(z, x) == 0))
            .collect()
    }
}

/// `(E_1 (+) … (+) E_r)^perp`: modules `X` with `Hom(E, X) = 0 = Ext(E, X)`.
pub fn right_perp(cat: &Catalog, objects: &[ModuleId]) -> WideSubcat {
    WideSubcat {
        members: cat
            .ids()
            .filter(|&x| objects.iter().all(|&e| cat.perp(e, x)))
            .collect(),
    }
}

/// `^perp(E_1 (+) … (+) E_r)`: modules `X` with `Hom(X, E) = 0 = Ext(X, E)`.
pub fn left_perp(cat: &Catalog, objects: &[ModuleId]) -> WideSubcat {
    WideSubcat {
        members: cat
            .ids()
            .filter(|&x| objects.iter().all(|&e| cat.perp(x, e)))
            .collect(),
    }
}

/// `A_k = (E_{k+1} (+) … (+) E_n)^perp`, for `k` in `0..=len`.
pub fn perp_a(cat: &Catalog, seq: &ExceptionalSequence, k: usize) -> Result<WideSubcat> {
    if k > seq.len() {
        return Err(Error::Domain(format!(
            "A_{k} is undefined for a sequence of length {}",
            seq.len()
        )));
    }
    Ok(right_perp(cat, &seq.terms[k..]))
}

/// `B_k = ^perp A_{k-1}`, for `k` in `1..=len`.
pub fn perp_b(cat: &Catalog, seq: &ExceptionalSequence, k: usize) -> Result<WideSubcat> {
    if k == 0 || k > seq.len() {
        return Err(Error::Domain(format!(
            "B_{k} is undefined for a sequence of length {}",
            seq.len()
        )));
    }
    let a = perp_a(cat, seq, k - 1)?;
    Ok(left_perp(cat, a.members()))
}

/// Relative projectivity and injectivity of one term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RelClass {
    pub rel_proj: bool,
    pub rel_inj: bool,
}

impl RelClass {
    /// Both relatively projective and relatively injective.
    pub fn is_root(self) -> bool {
        self.rel_proj && self.rel_inj
    }
}

/// Classifies every term by Ext-vanishing scans over `A_k` and `B_k`.
///
/// Fails with an integrity error if some term is neither relatively
/// projective nor relatively injective.
pub fn classify(cat: &Catalog, seq: &ExceptionalSequence) -> Result<Vec<RelClass>> {
    (1..=seq.len())
        .map(|k| {
            let e = seq.term(k);
            let a = perp_a(cat, seq, k)?;
            let b = perp_b(cat, seq, k)?;
            let class = RelClass {
                rel_proj: a.members().iter().all(|&x| cat.ext(e, x) == 0),
                rel_inj: b.members().iter().all(|&x| cat.ext(x, e) == 0),
            };
            if !class.rel_proj && !class.rel_inj {
                return Err(Error::Integrity(format!(
                    "term {k} ({}) is neither relatively projective nor relatively injective",
                    cat.key(e)
                )));
            }
            Ok(class)
        })
        .collect()
}

/// Relative projectivity via the reduced scan over `A_k ∩ E_{k-1}^perp`.
pub fn rel_proj_reduced_scan(cat: &Catalog, seq: &ExceptionalSequence, k: usize) -> Result<bool> {
    let e = seq.term(k);
    let a = perp_a(cat, seq, k)?;
    let scan = a
        .members()
        .iter()
        .copied()
        .filter(|&x| k < 2 || cat.perp(seq.term(k - 1), x));
    Ok(scan.into_iter().all(|x| cat.ext(e, x) == 0))
}

/// Which other terms a covering test is taken against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverSide {
    Left,
    Right,
    Others,
    Positions(Vec<usize>),
}

/// Whether the support of `E_k` lies in the union of the supports of the
/// terms selected by `side`.
pub fn covered_by(cat: &Catalog, seq: &ExceptionalSequence, k: usize, side: &CoverSide) -> bool {
    let positions: Vec<usize> = match side {
        CoverSide::Left => (1..k).collect(),
        CoverSide::Right => (k + 1..=seq.len()).collect(),
        CoverSide::Others => (1..=seq.len()).filter(|&j| j != k).collect(),
        CoverSide::Positions(p) => p.clone(),
    };
    let union = positions
        .iter()
        .fold(0u64, |acc, &j| acc | cat.support(seq.term(j)));
    cat.support(seq.term(k)) & !union == 0
}

/// Vertices (0-based) in the support of `E_k` and of no other term.
pub fn private_vertices(cat: &Catalog, seq: &ExceptionalSequence, k: usize) -> Vec<usize> {
    let others = (1..=seq.len())
        .filter(|&j| j != k)
        .fold(0u64, |acc, j| acc | cat.support(seq.term(j)));
    let own = cat.support(seq.term(k)) & !others;
    (0..cat.n()).filter(|v| own & (1 << v) != 0).collect()
}

/// Hasse diagram of the terms ordered by inclusion of supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportHasse {
    pub nodes: Vec<ModuleId>,
    /// Covering relations `(smaller, larger)` as indices into `nodes`.
    pub edges: Vec<(usize, usize)>,
    /// Maximal elements (the roots of the diagram).
    pub maximal: Vec<bool>,
}

pub fn support_hasse(cat: &Catalog, seq: &ExceptionalSequence) -> SupportHasse {
    let nodes = seq.terms.clone();
    let sup: Vec<u64> = nodes.iter().map(|&t| cat.support(t)).collect();
    let below = |a: usize, b: usize| sup[a] != sup[b] && sup[a] & !sup[b] == 0;
    let count = nodes.len();
    let mut edges = Vec::new();
    for a in 0..count {
        for b in 0..count {
            if below(a, b) && !(0..count).any(|c| below(a, c) && below(c, b)) {
                edges.push((a, b));
            }
        }
    }
    let maximal = (0..count)
        .map(|a| !(0..count).any(|b| below(a, b)))
        .collect();
    SupportHasse {
        nodes,
        edges,
        maximal,
    }
}

fn all_hom_bases(cat: &Catalog, from: &[ModuleId], to: &[ModuleId]) -> Vec<Morphism> {
    let q = cat.quiver();
    let mut out = Vec::new();
    for &a in from {
        for &b in to {
            out.extend(rep::hom_basis(q, cat.rep(a), cat.rep(b)));
        }
    }
    out
}

/// Whether some object of the additive closure of `sources` maps onto `target`.
pub fn has_epimorphism_from(cat: &Catalog, sources: &[ModuleId], target: ModuleId) -> bool {
    let maps = all_hom_bases(cat, sources, &[target]);
    let refs: Vec<&Morphism> = maps.iter().collect();
    rep::image_dims(cat.quiver(), cat.rep(target), &refs) == *cat.dim(target)
}

/// Whether `source` embeds into some object of the additive closure of `targets`.
pub fn has_monomorphism_into(cat: &Catalog, source: ModuleId, targets: &[ModuleId]) -> bool {
    let maps = all_hom_bases(cat, &[source], targets);
    let refs: Vec<&Morphism> = maps.iter().collect();
    rep::common_kernel_dims(cat.quiver(), cat.rep(source), &refs).is_zero()
}
