//! Braid mutations of exceptional pairs, `delta_k` and the Garside element.

use crate::catalog::{Catalog, ModuleId};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::quiver::DimVector;
use crate::sequence::{validate, ExceptionalSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidDirection {
    Right,
    Left,
}

/// Picks the unique candidate that is a root and satisfies `valid`.
fn select(
    cat: &Catalog,
    candidates: Vec<DimVector>,
    valid: impl Fn(ModuleId) -> bool,
    what: &str,
) -> Result<ModuleId> {
    let mut found: Vec<ModuleId> = candidates
        .iter()
        .filter(|d| d.is_positive())
        .filter_map(|d| cat.lookup(d))
        .filter(|&id| valid(id))
        .collect();
    found.sort();
    found.dedup();
    match found.as_slice() {
        [id] => Ok(*id),
        [] => Err(Error::Integrity(format!("{what}: no valid candidate"))),
        _ => Err(Error::Integrity(format!(
            "{what}: {} valid candidates",
            found.len()
        ))),
    }
}

/// Right mutation of an exceptional pair: `(X, T) -> (T, Y)`; returns `Y`.
///
/// `Y` is one of `X` (orthogonal pair), `X + sT` (extension, `s = ext(X, T)`),
/// `X - sT` (epimorphism) or `sT - X` (monomorphism, `s = hom(X, T)`).
pub fn mutate_right(cat: &Catalog, x: ModuleId, t: ModuleId) -> Result<ModuleId> {
    if !cat.perp(t, x) {
        return Err(Error::Domain(format!(
            "({}, {}) is not an exceptional pair",
            cat.key(x),
            cat.key(t)
        )));
    }
    let (dx, dt) = (cat.dim(x), cat.dim(t));
    let h = cat.hom(x, t) as i64;
    let e = cat.ext(x, t) as i64;
    let mut candidates = Vec::new();
    if h == 0 && e == 0 {
        candidates.push(dx.clone());
    }
    if e > 0 {
        candidates.push(dx.add(&dt.scale(e)));
    }
    if h > 0 {
        candidates.push(dx.sub(&dt.scale(h)));
        candidates.push(dt.scale(h).sub(dx));
    }
    select(cat, candidates, |y| cat.perp(y, t), "right mutation")
}

/// Left mutation of an exceptional pair: `(T, Y) -> (X, T)`; returns `X`.
pub fn mutate_left(cat: &Catalog, t: ModuleId, y: ModuleId) -> Result<ModuleId> {
    if !cat.perp(y, t) {
        return Err(Error::Domain(format!(
            "({}, {}) is not an exceptional pair",
            cat.key(t),
            cat.key(y)
        )));
    }
    let (dy, dt) = (cat.dim(y), cat.dim(t));
    let h = cat.hom(t, y) as i64;
    let e = cat.ext(t, y) as i64;
    let mut candidates = Vec::new();
    if h == 0 && e == 0 {
        candidates.push(dy.clone());
    }
    if e > 0 {
        candidates.push(dy.add(&dt.scale(e)));
    }
    if h > 0 {
        candidates.push(dy.sub(&dt.scale(h)));
        candidates.push(dt.scale(h).sub(dy));
    }
    select(cat, candidates, |x| cat.perp(t, x), "left mutation")
}

/// Braid move on the adjacent pair at positions `(k, k+1)`.
///
/// `Right` sends `(E_k, E_{k+1})` to `(E_{k+1}, E_k')`; `Left` is its inverse
/// and sends `(E_k, E_{k+1})` to `(E_{k+1}', E_k)`.
pub fn braid_sigma(
    cat: &Catalog,
    seq: &ExceptionalSequence,
    k: usize,
    direction: BraidDirection,
) -> Result<ExceptionalSequence> {
    if k == 0 || k >= seq.len() {
        return Err(Error::Domain(format!(
            "no adjacent pair at position {k} in a sequence of length {}",
            seq.len()
        )));
    }
    let mut terms = seq.terms().to_vec();
    let (a, b) = (terms[k - 1], terms[k]);
    match direction {
        BraidDirection::Right => {
            let y = mutate_right(cat, a, b)?;
            terms[k - 1] = b;
            terms[k] = y;
        }
        BraidDirection::Left => {
            let x = mutate_left(cat, a, b)?;
            terms[k - 1] = x;
            terms[k] = a;
        }
    }
    validate(cat, &terms)
        .map_err(|e| Error::Integrity(format!("braid move produced an invalid sequence: {e}")))?;
    Ok(ExceptionalSequence::new_unchecked(terms))
}

/// Moves a term from position `from` to position `to <= from` by successive
/// left moves; only the moving term changes.
pub fn move_left(
    cat: &Catalog,
    seq: &ExceptionalSequence,
    from: usize,
    to: usize,
) -> Result<ExceptionalSequence> {
    let mut current = seq.clone();
    for p in (to..from).rev() {
        current = braid_sigma(cat, &current, p, BraidDirection::Left)?;
    }
    Ok(current)
}

/// `delta_k (E_1, …, E_n) = (E_k', E_1, …, ^E_k, …, E_n)`.
pub fn delta_k(cat: &Catalog, seq: &ExceptionalSequence, k: usize) -> Result<ExceptionalSequence> {
    if !seq.is_complete(cat) {
        return Err(Error::Domain("delta_k needs a complete sequence".into()));
    }
    if k == 0 || k > seq.len() {
        return Err(Error::Domain(format!("delta_{k} is undefined")));
    }
    move_left(cat, seq, k, 1)
}

/// The Garside element `Delta = delta_n ⋯ delta_2`, applied as `delta_2` first.
///
/// The output reads `(E_n', …, E_1')` with `E_1' = E_1`.
pub fn garside(cat: &Catalog, seq: &ExceptionalSequence) -> Result<ExceptionalSequence> {
    if !seq.is_complete(cat) {
        return Err(Error::Domain(
            "the Garside action needs a complete sequence".into(),
        ));
    }
    let mut current = seq.clone();
    for k in 2..=seq.len() {
        current = delta_k(cat, &current, k)?;
    }
    Ok(current)
}

/// Dimension vector of the AR translate of `E_k` inside `A_k`, computed from
/// the Euler form alone: the unique `z` in the lattice of `A_k` with
/// `<x, y> = -<y, z>` for every `y` in that lattice.
pub fn relative_translate_dim(cat: &Catalog, seq: &ExceptionalSequence, k: usize) -> DimVector {
    let q = cat.quiver();
    let basis: Vec<&DimVector> = seq.terms()[..k].iter().map(|&t| cat.dim(t)).collect();
    let x = cat.dim(seq.term(k));
    let mut gram = QMatrix::zeros(k, k);
    let mut rhs = Vec::with_capacity(k);
    for (l, bl) in basis.iter().enumerate() {
        for (i, bi) in basis.iter().enumerate() {
            gram.add_i64(l, i, q.euler_unchecked(bl.as_slice(), bi.as_slice()));
        }
        rhs.push(num::BigRational::from_integer(
            (-q.euler_unchecked(x.as_slice(), bl.as_slice())).into(),
        ));
    }
    let coeffs = gram
        .solve(&rhs)
        .expect("Gram matrix of an exceptional sequence is unimodular");
    let mut z = DimVector::zero(cat.n());
    for (c, b) in coeffs.iter().zip(&basis) {
        let c: i64 = num::ToPrimitive::to_i64(&c.to_integer()).expect("integral");
        z = z.add(&b.scale(c));
    }
    z
}
