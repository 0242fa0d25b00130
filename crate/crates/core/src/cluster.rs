//! The m-cluster fundamental domain, compatibility, the single-object
//! bijection `sigma_{T[k]}` and the bijection `theta` between ordered
//! compatible tuples and m-exceptional sequences.
//!
//! Objects of the fundamental domain `mod[0] ∪ … ∪ mod[m-1] ∪ proj[m]` are
//! stored as `(module, level)` pairs; every rule reduces to Hom/Ext tests.

use std::fmt;

use crate::catalog::{Catalog, ModuleId};
use crate::error::{Error, Result};
use crate::linalg::integer_combination;
use crate::mutation::{mutate_left, mutate_right};
use crate::quiver::{DimVector, Direction};
use crate::sequence::{classify, right_perp, validate, ExceptionalSequence, RelClass, WideSubcat};

/// A module placed in shift level `level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Leveled {
    pub module: ModuleId,
    pub level: u32,
}

impl Leveled {
    pub fn new(module: ModuleId, level: u32) -> Self {
        Leveled { module, level }
    }

    /// `(-1)^level * dim`.
    pub fn signed_dim(&self, cat: &Catalog) -> DimVector {
        let d = cat.dim(self.module);
        if self.level.is_multiple_of(2) {
            d.clone()
        } else {
            d.scale(-1)
        }
    }

    pub fn display(&self, cat: &Catalog) -> String {
        format!("{}[{}]", cat.key(self.module), self.level)
    }
}

impl fmt::Display for Leveled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.module, self.level)
    }
}

/// The fundamental domain of a wide subcategory `W`:
/// `W[0] ∪ … ∪ W[m-1] ∪ P(W)[m]`, with `P(W)` the projective objects of `W`.
#[derive(Clone, Debug)]
pub struct Domain {
    m: u32,
    wide: WideSubcat,
    projectives: Vec<ModuleId>,
}

impl Domain {
    pub fn new(cat: &Catalog, m: u32, wide: WideSubcat) -> Self {
        let projectives = wide.projectives(cat);
        Domain {
            m,
            wide,
            projectives,
        }
    }

    /// The fundamental domain of the whole module category.
    pub fn full(cat: &Catalog, m: u32) -> Self {
        Domain::new(cat, m, WideSubcat::all(cat))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn wide(&self) -> &WideSubcat {
        &self.wide
    }

    pub fn contains(&self, x: Leveled) -> bool {
        self.wide.contains(x.module)
            && (x.level < self.m || (x.level == self.m && self.projectives.contains(&x.module)))
    }

    /// Every object, ordered by level and then by catalog order.
    pub fn objects(&self) -> Vec<Leveled> {
        let mut out = Vec::new();
        for level in 0..self.m {
            out.extend(self.wide.members().iter().map(|&x| Leveled::new(x, level)));
        }
        out.extend(self.projectives.iter().map(|&p| Leveled::new(p, self.m)));
        out
    }

    /// The domain of `T^perp ∩ W`.
    pub fn perp_of(&self, cat: &Catalog, t: ModuleId) -> Domain {
        let wide = self.wide.intersection(&right_perp(cat, &[t]));
        Domain::new(cat, self.m, wide)
    }
}

/// Compatibility of two fundamental-domain objects.
pub fn compatible(cat: &Catalog, a: Leveled, b: Leveled) -> bool {
    use std::cmp::Ordering;
    match a.level.cmp(&b.level) {
        Ordering::Less => cat.perp(b.module, a.module),
        Ordering::Greater => cat.perp(a.module, b.module),
        Ordering::Equal => cat.ext(a.module, b.module) == 0 && cat.ext(b.module, a.module) == 0,
    }
}

fn check_domain(cat: &Catalog, domain: &Domain, x: Leveled, what: &str) -> Result<()> {
    if domain.contains(x) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{what} {} is not in the fundamental domain for m = {}",
            x.display(cat),
            domain.m
        )))
    }
}

/// Picks the unique level in `levels` for which `(-1)^i dim X - (-1)^j dim Y`
/// is an integer multiple of `dim T`.
fn level_by_ratio(
    cat: &Catalog,
    x: Leveled,
    y: ModuleId,
    t: ModuleId,
    levels: [i64; 2],
) -> Result<u32> {
    let dt = cat.dim(t);
    let sx = x.signed_dim(cat);
    let fits: Vec<i64> = levels
        .into_iter()
        .filter(|&j| {
            let dy = cat.dim(y);
            let sy = if j.rem_euclid(2) == 0 {
                dy.clone()
            } else {
                dy.scale(-1)
            };
            sx.sub(&sy).integer_multiple_of(dt).is_some()
        })
        .collect();
    match fits.as_slice() {
        [j] if *j >= 0 => Ok(*j as u32),
        _ => Err(Error::Integrity(format!(
            "level choice for {} against {} is not unique and non-negative: {fits:?}",
            cat.key(y),
            cat.key(t)
        ))),
    }
}

/// `sigma_{T[k]}` from the domain of `T^perp ∩ W` to the objects of the domain
/// of `W` compatible with `T[k]`.
fn sigma_forward(cat: &Catalog, outer: &Domain, t: Leveled, x: Leveled) -> Result<Leveled> {
    if !cat.perp(t.module, x.module) {
        return Err(Error::Domain(format!(
            "{} is not in the right perpendicular category of {}",
            x.display(cat),
            cat.key(t.module)
        )));
    }
    if outer.contains(x) && compatible(cat, x, t) {
        return Ok(x);
    }
    let y = mutate_right(cat, x.module, t.module)?;
    let j = level_by_ratio(cat, x, y, t.module, [x.level as i64, x.level as i64 - 1])?;
    let out = Leveled::new(y, j);
    if !outer.contains(out) || !compatible(cat, out, t) {
        return Err(Error::Integrity(format!(
            "sigma sends {} to {}, which is not a compatible object of the domain",
            x.display(cat),
            out.display(cat)
        )));
    }
    Ok(out)
}

fn sigma_inverse(
    cat: &Catalog,
    outer: &Domain,
    inner: &Domain,
    t: Leveled,
    z: Leveled,
) -> Result<Leveled> {
    if !compatible(cat, z, t) || z == t {
        return Err(Error::Domain(format!(
            "{} is not a compatible partner of {}",
            z.display(cat),
            t.display(cat)
        )));
    }
    let x = if inner.contains(z) {
        z
    } else {
        let x = mutate_left(cat, t.module, z.module)?;
        let i = level_by_ratio(cat, z, x, t.module, [z.level as i64, z.level as i64 + 1])?;
        Leveled::new(x, i)
    };
    if !inner.contains(x) {
        return Err(Error::Integrity(format!(
            "inverse sigma sends {} outside the perpendicular domain",
            z.display(cat)
        )));
    }
    let back = sigma_forward(cat, outer, t, x)?;
    if back != z {
        return Err(Error::Integrity(format!(
            "sigma does not invert: {} -> {} -> {}",
            z.display(cat),
            x.display(cat),
            back.display(cat)
        )));
    }
    Ok(x)
}

/// The Key-Lemma bijection relative to `T[k]` over the whole module category.
///
/// `Forward` maps an object of the domain of `T^perp` to an object compatible
/// with `T[k]`; `Inverse` goes back.
pub fn key_sigma(
    cat: &Catalog,
    m: u32,
    t: Leveled,
    x: Leveled,
    direction: Direction,
) -> Result<Leveled> {
    let outer = Domain::full(cat, m);
    check_domain(cat, &outer, t, "T")?;
    let inner = outer.perp_of(cat, t.module);
    match direction {
        Direction::Forward => {
            check_domain(cat, &inner, x, "object")?;
            sigma_forward(cat, &outer, t, x)
        }
        Direction::Inverse => {
            check_domain(cat, &outer, x, "object")?;
            sigma_inverse(cat, &outer, &inner, t, x)
        }
    }
}

/// An ordered tuple of pairwise compatible, pairwise distinct objects.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompatibleTuple {
    m: u32,
    objects: Vec<Leveled>,
}

impl CompatibleTuple {
    pub fn new(cat: &Catalog, m: u32, objects: Vec<Leveled>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidTuple("m must be at least 1".into()));
        }
        if objects.len() > cat.n() {
            return Err(Error::InvalidTuple(format!(
                "{} objects exceed the rank {}",
                objects.len(),
                cat.n()
            )));
        }
        let domain = Domain::full(cat, m);
        for &x in &objects {
            if !domain.contains(x) {
                return Err(Error::InvalidTuple(format!(
                    "{} is outside the fundamental domain for m = {m}",
                    x.display(cat)
                )));
            }
        }
        for (i, &a) in objects.iter().enumerate() {
            for &b in &objects[i + 1..] {
                if a == b {
                    return Err(Error::InvalidTuple(format!(
                        "{} appears twice",
                        a.display(cat)
                    )));
                }
                if !compatible(cat, a, b) {
                    return Err(Error::InvalidTuple(format!(
                        "{} and {} are not compatible",
                        a.display(cat),
                        b.display(cat)
                    )));
                }
            }
        }
        Ok(CompatibleTuple { m, objects })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn objects(&self) -> &[Leveled] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// No object sits in level `m`.
    pub fn is_positive(&self) -> bool {
        self.objects.iter().all(|x| x.level < self.m)
    }
}

/// An exceptional sequence with a level `0..=m` on every term; level `m` only
/// on relatively projective terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MExcSequence {
    m: u32,
    terms: Vec<Leveled>,
}

impl MExcSequence {
    pub fn new(cat: &Catalog, m: u32, terms: Vec<Leveled>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidTuple("m must be at least 1".into()));
        }
        let modules: Vec<ModuleId> = terms.iter().map(|x| x.module).collect();
        validate(cat, &modules)?;
        if let Some(x) = terms.iter().find(|x| x.level > m) {
            return Err(Error::InvalidTuple(format!(
                "level of {} exceeds m = {m}",
                x.display(cat)
            )));
        }
        let classes = classify(cat, &ExceptionalSequence::new_unchecked(modules))?;
        for (k, (x, class)) in terms.iter().zip(&classes).enumerate() {
            if x.level == m && !class.rel_proj {
                return Err(Error::InvalidTuple(format!(
                    "term {} ({}) has level m but is not relatively projective",
                    k + 1,
                    x.display(cat)
                )));
            }
        }
        Ok(MExcSequence { m, terms })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn terms(&self) -> &[Leveled] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn underlying(&self) -> ExceptionalSequence {
        ExceptionalSequence::new_unchecked(self.terms.iter().map(|x| x.module).collect())
    }

    /// No relatively injective term sits in level `m`; for `m = 1` these are
    /// the projectively signed sequences.
    pub fn is_projectively_signed(&self, cat: &Catalog) -> Result<bool> {
        let classes = classify(cat, &self.underlying())?;
        Ok(self
            .terms
            .iter()
            .zip(&classes)
            .all(|(x, c)| x.level < self.m || !c.rel_inj))
    }
}

fn theta_in(cat: &Catalog, domain: &Domain, tuple: &[Leveled]) -> Result<Vec<Leveled>> {
    let Some((&t, rest)) = tuple.split_last() else {
        return Ok(Vec::new());
    };
    let inner = domain.perp_of(cat, t.module);
    let pulled = rest
        .iter()
        .map(|&z| sigma_inverse(cat, domain, &inner, t, z))
        .collect::<Result<Vec<_>>>()?;
    for (i, &a) in pulled.iter().enumerate() {
        for &b in &pulled[i + 1..] {
            if !compatible(cat, a, b) {
                return Err(Error::Integrity(format!(
                    "inverse sigma broke compatibility of {} and {}",
                    a.display(cat),
                    b.display(cat)
                )));
            }
        }
    }
    let mut out = theta_in(cat, &inner, &pulled)?;
    out.push(t);
    Ok(out)
}

fn theta_inverse_in(cat: &Catalog, domain: &Domain, seq: &[Leveled]) -> Result<Vec<Leveled>> {
    let Some((&t, rest)) = seq.split_last() else {
        return Ok(Vec::new());
    };
    if !domain.contains(t) {
        return Err(Error::Integrity(format!(
            "{} is outside the fundamental domain of its perpendicular category",
            t.display(cat)
        )));
    }
    let inner = domain.perp_of(cat, t.module);
    let pulled = theta_inverse_in(cat, &inner, rest)?;
    let mut out = pulled
        .iter()
        .map(|&x| sigma_forward(cat, domain, t, x))
        .collect::<Result<Vec<_>>>()?;
    out.push(t);
    Ok(out)
}

/// Checks the linear and level conditions and properties (a), (b), (c)
/// relating a tuple and its m-exceptional sequence.
fn check_correspondence(cat: &Catalog, tuple: &CompatibleTuple, seq: &MExcSequence) -> Result<()> {
    let fail = |what: String| Err(Error::Integrity(what));
    let classes: Vec<RelClass> = classify(cat, &seq.underlying())?;
    let t = tuple.objects();
    let e = seq.terms();
    for i in 0..t.len() {
        let diff = t[i].signed_dim(cat).sub(&e[i].signed_dim(cat));
        let later_t: Vec<Vec<i64>> = t[i + 1..]
            .iter()
            .map(|x| cat.dim(x.module).0.clone())
            .collect();
        let later_e: Vec<Vec<i64>> = e[i + 1..]
            .iter()
            .map(|x| cat.dim(x.module).0.clone())
            .collect();
        if integer_combination(&diff.0, &later_t).is_none()
            || integer_combination(&diff.0, &later_e).is_none()
        {
            return fail(format!("position {}: linear condition fails", i + 1));
        }
        let (lt, le) = (t[i].level, e[i].level);
        if !(lt == le || lt + 1 == le) {
            return fail(format!("position {}: level condition fails", i + 1));
        }
        let class = classes[i];
        if cat.is_projective(t[i].module) && (lt != le || !class.rel_proj) {
            return fail(format!("position {}: property (a) fails", i + 1));
        }
        if class.is_root() && lt != le {
            return fail(format!("position {}: property (b) fails", i + 1));
        }
        if lt != le && !(class.rel_proj && !class.rel_inj && le == lt + 1) {
            return fail(format!("position {}: property (c) fails", i + 1));
        }
    }
    if tuple.is_positive() != seq.is_projectively_signed(cat)? {
        return fail("positivity does not match projective signing".into());
    }
    Ok(())
}

/// `theta`: ordered compatible tuple to m-exceptional sequence.
pub fn theta(cat: &Catalog, tuple: &CompatibleTuple) -> Result<MExcSequence> {
    let domain = Domain::full(cat, tuple.m);
    let terms = theta_in(cat, &domain, tuple.objects())?;
    let seq = MExcSequence::new(cat, tuple.m, terms)
        .map_err(|e| Error::Integrity(format!("theta produced an invalid sequence: {e}")))?;
    check_correspondence(cat, tuple, &seq)?;
    Ok(seq)
}

/// Inverse of [`theta`].
pub fn theta_inverse(cat: &Catalog, seq: &MExcSequence) -> Result<CompatibleTuple> {
    let domain = Domain::full(cat, seq.m);
    let objects = theta_inverse_in(cat, &domain, seq.terms())?;
    let tuple = CompatibleTuple::new(cat, seq.m, objects)
        .map_err(|e| Error::Integrity(format!("theta inverse produced an invalid tuple: {e}")))?;
    check_correspondence(cat, &tuple, seq)?;
    Ok(tuple)
}

/// Every ordered tuple of `t` pairwise compatible distinct objects, in
/// lexicographic order of domain positions.
pub fn enumerate_tuples(cat: &Catalog, m: u32, t: usize) -> Vec<CompatibleTuple> {
    let objects = Domain::full(cat, m).objects();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    extend_tuples(cat, &objects, t, &mut current, &mut |tuple| {
        out.push(CompatibleTuple {
            m,
            objects: tuple.to_vec(),
        })
    });
    out
}

fn extend_tuples(
    cat: &Catalog,
    objects: &[Leveled],
    t: usize,
    current: &mut Vec<Leveled>,
    f: &mut impl FnMut(&[Leveled]),
) {
    if current.len() == t {
        f(current);
        return;
    }
    for &x in objects {
        if current.iter().all(|&y| y != x && compatible(cat, x, y)) {
            current.push(x);
            extend_tuples(cat, objects, t, current, f);
            current.pop();
        }
    }
}

/// Every m-exceptional sequence of length `t`: exceptional sequences with all
/// admissible level assignments, the last term's level varying fastest.
pub fn enumerate_m_sequences(cat: &Catalog, m: u32, t: usize) -> Result<Vec<MExcSequence>> {
    let mut out = Vec::new();
    for seq in crate::enumerate::enumerate_sequences(cat, t) {
        let classes = classify(cat, &seq)?;
        let tops: Vec<u32> = classes
            .iter()
            .map(|c| if c.rel_proj { m } else { m - 1 })
            .collect();
        let mut levels = vec![0u32; t];
        loop {
            let terms = seq
                .terms()
                .iter()
                .zip(&levels)
                .map(|(&x, &l)| Leveled::new(x, l))
                .collect();
            out.push(MExcSequence { m, terms });
            let Some(p) = (0..t).rev().find(|&p| levels[p] < tops[p]) else {
                break;
            };
            levels[p] += 1;
            levels[p + 1..].fill(0);
        }
    }
    Ok(out)
}

/// Unordered m-clusters as sorted object lists.
///
/// Fails with an integrity error if some maximal compatible set does not have
/// exactly `n` objects.
pub fn clusters(cat: &Catalog, m: u32) -> Result<Vec<Vec<Leveled>>> {
    let objects = Domain::full(cat, m).objects();
    let n = cat.n();
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut error = None;
    grow_cliques(cat, &objects, 0, &mut current, &mut |clique| {
        let maximal = objects
            .iter()
            .enumerate()
            .filter(|(i, _)| !clique.contains(i))
            .all(|(_, &x)| !clique.iter().all(|&c| compatible(cat, x, objects[c])));
        if maximal {
            if clique.len() != n {
                error.get_or_insert(clique.len());
            }
            out.push(clique.iter().map(|&c| objects[c]).collect::<Vec<_>>());
        }
    });
    if let Some(size) = error {
        return Err(Error::Integrity(format!(
            "found a maximal compatible set of size {size} in rank {n}"
        )));
    }
    for c in &mut out {
        c.sort();
    }
    out.sort();
    Ok(out)
}

fn grow_cliques(
    cat: &Catalog,
    objects: &[Leveled],
    start: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    f(current);
    for i in start..objects.len() {
        if current
            .iter()
            .all(|&c| compatible(cat, objects[i], objects[c]))
        {
            current.push(i);
            grow_cliques(cat, objects, i + 1, current, f);
            current.pop();
        }
    }
}
