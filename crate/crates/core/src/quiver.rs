//! Acyclic quivers, their Euler form, positive roots and Coxeter data.
//!
//! Vertices are stored 0-based. Everything user-facing (the text grammar,
//! module keys, JSON) is 1-based, matching the usual `1 -> 2 <- 3` notation.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::QMatrix;

/// A dimension vector, or its signed variant in m-cluster arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, v: usize) -> Self {
        let mut d = DimVector::zero(n);
        d.0[v] = 1;
        d
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Nonzero with all entries nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: i64) -> DimVector {
        DimVector(self.0.iter().map(|a| a * s).collect())
    }

    /// Vertices (0-based) where the entry is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.0[v] != 0).collect()
    }

    /// The `d1.d2.….dn` key used on the command line and in JSON.
    pub fn key(&self) -> String {
        self.0
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn parse_key(key: &str) -> Result<DimVector> {
        key.split('.')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Catalog(format!("malformed module key {key:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(DimVector)
    }

    /// If `self = c * other` for an integer `c`, returns `c`.
    pub fn integer_multiple_of(&self, other: &DimVector) -> Option<i64> {
        let p = other.0.iter().position(|&x| x != 0)?;
        if self.0[p] % other.0[p] != 0 {
            return None;
        }
        let c = self.0[p] / other.0[p];
        (self.0.iter().zip(&other.0).all(|(a, b)| *a == c * b)).then_some(c)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl std::ops::Index<usize> for DimVector {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Simply-laced Dynkin diagram types.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    pub fn coxeter_number(self) -> u64 {
        match self {
            DynkinType::A(n) => n as u64 + 1,
            DynkinType::D(n) => 2 * n as u64 - 2,
            DynkinType::E(6) => 12,
            DynkinType::E(7) => 18,
            DynkinType::E(_) => 30,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u64 {
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        match self {
            DynkinType::A(n) => fact(n + 1),
            DynkinType::D(n) => (1u64 << (n - 1)) * fact(n),
            DynkinType::E(6) => 51_840,
            DynkinType::E(7) => 2_903_040,
            DynkinType::E(_) => 696_729_600,
        }
    }

    /// Degrees of the basic invariants.
    pub fn degrees(self) -> Vec<u64> {
        match self {
            DynkinType::A(n) => (2..=n as u64 + 1).collect(),
            DynkinType::D(n) => {
                let mut d: Vec<u64> = (1..n as u64).map(|i| 2 * i).collect();
                d.push(n as u64);
                d.sort_unstable();
                d
            }
            DynkinType::E(6) => vec![2, 5, 6, 8, 9, 12],
            DynkinType::E(7) => vec![2, 6, 8, 10, 12, 14, 18],
            DynkinType::E(_) => vec![2, 8, 12, 14, 18, 20, 24, 30],
        }
    }

    /// Number of complete exceptional sequences, `n! h^n / |W|`.
    pub fn exceptional_sequence_count(self) -> u64 {
        let n = self.rank();
        let fact: u128 = (1..=n as u128).product();
        let h = self.coxeter_number() as u128;
        (fact * h.pow(n as u32) / self.weyl_order() as u128) as u64
    }

    /// Fuss–Catalan number `prod (m h + d_i) / d_i`.
    pub fn fuss_catalan(self, m: u64) -> u64 {
        self.catalan_product(m, 0)
    }

    /// Positive Fuss–Catalan number `prod (m h + d_i - 2) / d_i`.
    pub fn positive_fuss_catalan(self, m: u64) -> u64 {
        self.catalan_product(m, 2)
    }

    fn catalan_product(self, m: u64, shift: u64) -> u64 {
        let h = self.coxeter_number();
        let degrees = self.degrees();
        let num: u128 = degrees
            .iter()
            .map(|&d| (m * h + d - shift) as u128)
            .product();
        let den: u128 = degrees.iter().map(|&d| d as u128).product();
        (num / den) as u64
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

/// A finite acyclic quiver with vertices `0..n` (shown as `1..=n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    label: String,
}

impl Quiver {
    /// Builds a quiver from 0-based arrows, rejecting bad indices and oriented cycles.
    pub fn new(n: usize, arrows: Vec<(usize, usize)>, label: impl Into<String>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("a quiver needs at least one vertex".into()));
        }
        for &(s, t) in &arrows {
            for v in [s, t] {
                if v >= n {
                    return Err(Error::Index {
                        index: v as i64 + 1,
                        n,
                    });
                }
            }
            if s == t {
                return Err(Error::Cycle(s + 1));
            }
        }
        let q = Quiver {
            n,
            arrows,
            label: label.into(),
        };
        q.try_topological_order()?;
        Ok(q)
    }

    /// Parses a preset (`A3:1>2<3`, `D4:sym-source`, `E6`) or an explicit
    /// arrow list (`Q3:1>2,3>2`, or just `1>2,3>2`).
    pub fn parse(text: &str) -> Result<Quiver> {
        let text = text.trim();
        let (head, tail) = match text.split_once(':') {
            Some((h, t)) => (h.trim(), Some(t.trim())),
            None => (text, None),
        };
        if head.contains('>') || head.contains('<') {
            let arrows = parse_arrow_list(head)?;
            let n = arrows.iter().flat_map(|&(s, t)| [s, t]).max().unwrap_or(0);
            return Quiver::from_one_based(n as usize, &arrows, text);
        }
        let mut chars = head.chars();
        let kind = chars
            .next()
            .ok_or_else(|| Error::Parse("empty quiver description".into()))?;
        let n: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {head:?}")))?;
        if kind == 'Q' || kind == 'q' {
            let arrows = match tail {
                Some(t) if !t.is_empty() => parse_arrow_list(t)?,
                _ => Vec::new(),
            };
            return Quiver::from_one_based(n, &arrows, text);
        }
        let edges = preset_edges(kind, n)?;
        let arrows = match tail {
            None | Some("") | Some("linear") => edges.clone(),
            Some("sym-source") | Some("sym-sink") => {
                if kind != 'D' || n != 4 {
                    return Err(Error::Parse(
                        "symmetric orientations are defined for D4 only".into(),
                    ));
                }
                if tail == Some("sym-source") {
                    vec![(2, 1), (2, 3), (2, 4)]
                } else {
                    vec![(1, 2), (3, 2), (4, 2)]
                }
            }
            Some(t) => {
                let arrows = parse_arrow_list(t)?;
                let norm = |v: &[(i64, i64)]| -> BTreeSet<(i64, i64)> {
                    v.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
                };
                for &(s, t) in &arrows {
                    for v in [s, t] {
                        if v < 1 || v as usize > n {
                            return Err(Error::Index { index: v, n });
                        }
                    }
                }
                if arrows.len() != edges.len() || norm(&arrows) != norm(&edges) {
                    return Err(Error::Parse(format!(
                        "orientation {t:?} does not match the {kind}{n} diagram"
                    )));
                }
                arrows
            }
        };
        Quiver::from_one_based(n, &arrows, text)
    }

    fn from_one_based(n: usize, arrows: &[(i64, i64)], label: &str) -> Result<Quiver> {
        let mut zero_based = Vec::with_capacity(arrows.len());
        for &(s, t) in arrows {
            for v in [s, t] {
                if v < 1 || v as usize > n {
                    return Err(Error::Index { index: v, n });
                }
            }
            zero_based.push((s as usize - 1, t as usize - 1));
        }
        Quiver::new(n, zero_based, label)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arrows as 0-based `(source, target)` pairs.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != v)
    }

    /// The quiver with every arrow at `v` reversed; arrow indices are kept.
    pub fn reflect_at(&self, v: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == v || t == v { (t, s) } else { (s, t) })
            .collect();
        Quiver {
            n: self.n,
            arrows,
            label: self.label.clone(),
        }
    }

    fn try_topological_order(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        if order.len() < self.n {
            let on_cycle = (0..self.n).find(|&v| indeg[v] > 0).unwrap_or(0);
            return Err(Error::Cycle(on_cycle + 1));
        }
        Ok(order)
    }

    /// Vertices ordered so that every arrow points forward (sources first).
    pub fn topological_order(&self) -> Vec<usize> {
        self.try_topological_order()
            .expect("quivers are acyclic by construction")
    }

    /// Number of paths from `from` to `to` (the trivial path included).
    pub fn path_count(&self, from: usize, to: usize) -> i64 {
        let order = self.topological_order();
        let mut count = vec![0i64; self.n];
        count[from] = 1;
        for &v in &order {
            if count[v] == 0 {
                continue;
            }
            for &(s, t) in &self.arrows {
                if s == v {
                    count[t] += count[v];
                }
            }
        }
        count[to]
    }

    /// `E[i][j]` with ones on the diagonal and minus the arrow count `i -> j` elsewhere.
    pub fn euler_matrix(&self) -> Vec<Vec<i64>> {
        let mut e = vec![vec![0i64; self.n]; self.n];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(s, t) in &self.arrows {
            e[s][t] -= 1;
        }
        e
    }

    fn check_len(&self, x: &DimVector) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `<x, y> = sum_i x_i y_i - sum_{a: i -> j} x_i y_j`.
    pub fn euler_form(&self, x: &DimVector, y: &DimVector) -> Result<i64> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.euler_unchecked(x.as_slice(), y.as_slice()))
    }

    pub(crate) fn euler_unchecked(&self, x: &[i64], y: &[i64]) -> i64 {
        let diag: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|&(s, t)| x[s] * y[t]).sum();
        diag - off
    }

    /// Symmetrized form `(x, y) = <x, y> + <y, x>`.
    pub fn symmetric_form(&self, x: &[i64], y: &[i64]) -> i64 {
        self.euler_unchecked(x, y) + self.euler_unchecked(y, x)
    }

    /// Positive definiteness of the symmetrized form (Sylvester's criterion).
    pub fn is_finite_type(&self) -> bool {
        let e = self.euler_matrix();
        (1..=self.n).all(|k| {
            let minor: Vec<Vec<i64>> = (0..k)
                .map(|i| (0..k).map(|j| e[i][j] + e[j][i]).collect())
                .collect();
            crate::linalg::det_i64(&minor) > 0
        })
    }

    fn require_finite_type(&self) -> Result<()> {
        if self.is_finite_type() {
            Ok(())
        } else {
            Err(Error::NotFiniteType(self.label.clone()))
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(s, t) in &self.arrows {
                let w = if s == v {
                    t
                } else if t == v {
                    s
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Simple reflection `s_v(x) = x - (x, e_v) e_v`.
    pub fn reflect_vector(&self, v: usize, x: &[i64]) -> Vec<i64> {
        let mut e = vec![0; self.n];
        e[v] = 1;
        let c = self.symmetric_form(x, &e);
        let mut y = x.to_vec();
        y[v] -= c;
        y
    }

    /// Positive roots by closing the simple roots under simple reflections,
    /// sorted lexicographically.
    pub fn positive_roots(&self) -> Result<Vec<DimVector>> {
        self.require_finite_type()?;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for v in 0..self.n {
            let e = DimVector::unit(self.n, v).0;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(r) = queue.pop_front() {
            for v in 0..self.n {
                let s = self.reflect_vector(v, &r);
                if s.iter().all(|&x| x >= 0) && s.iter().any(|&x| x > 0) && seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        Ok(seen.into_iter().map(DimVector).collect())
    }

    /// `h = 2 |Phi+| / n`.
    pub fn coxeter_number(&self) -> Result<u64> {
        let roots = self.positive_roots()?.len() as u64;
        let n = self.n as u64;
        if !(2 * roots).is_multiple_of(n) {
            return Err(Error::Domain(format!(
                "{} is not connected; the Coxeter number is undefined",
                self.label
            )));
        }
        Ok(2 * roots / n)
    }

    /// Identifies the Dynkin type of a connected finite-type quiver.
    pub fn dynkin_type(&self) -> Result<DynkinType> {
        let roots = self.positive_roots()?.len();
        if !self.is_connected() {
            return Err(Error::Domain(format!("{} is not connected", self.label)));
        }
        let n = self.n;
        let t = if roots == n * (n + 1) / 2 {
            DynkinType::A(n)
        } else if roots == n * (n - 1) {
            DynkinType::D(n)
        } else {
            DynkinType::E(n)
        };
        Ok(t)
    }

    /// Coxeter transformation `Phi = -E^{-1} E^T`, so that `dim tau M = Phi dim M`
    /// for non-projective indecomposables `M`.
    pub fn coxeter_matrix(&self, direction: Direction) -> Vec<Vec<i64>> {
        let e = QMatrix::from_rows(&self.euler_matrix());
        let e_inv = e
            .inverse()
            .expect("Euler matrix of an acyclic quiver is unimodular");
        let et = e.transpose();
        let (a, b) = match direction {
            Direction::Forward => (&e_inv, &et),
            Direction::Inverse => (&et.inverse().expect("unimodular"), &e),
        };
        let n = self.n;
        let a = a.to_integer_rows().expect("integral inverse");
        let b = b.to_integer_rows().expect("integral");
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| -(0..n).map(|k| a[i][k] * b[k][j]).sum::<i64>())
                    .collect()
            })
            .collect()
    }

    pub fn coxeter_transform(&self, x: &DimVector, direction: Direction) -> Result<DimVector> {
        self.check_len(x)?;
        let phi = self.coxeter_matrix(direction);
        Ok(DimVector(
            phi.iter()
                .map(|row| row.iter().zip(x.as_slice()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|&(s, t)| format!("{}>{}", s + 1, t + 1))
            .collect();
        write!(f, "Q{}:{}", self.n, arrows.join(","))
    }
}

/// Underlying edges of a preset diagram, oriented in the default way.
fn preset_edges(kind: char, n: usize) -> Result<Vec<(i64, i64)>> {
    let n_i = n as i64;
    let path = |len: i64| (1..len).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match kind {
        'A' | 'a' if n >= 1 => Ok(path(n_i)),
        'D' | 'd' if n >= 4 => {
            let mut e = path(n_i - 1);
            e.push((n_i - 2, n_i));
            Ok(e)
        }
        'E' | 'e' if (6..=8).contains(&n) => {
            let mut e = path(n_i - 1);
            e.push((3, n_i));
            Ok(e)
        }
        _ => Err(Error::Parse(format!("unknown preset {kind}{n}"))),
    }
}

/// Comma-separated chains such as `1>2<3,4>2`; `a>b` is an arrow a -> b.
fn parse_arrow_list(text: &str) -> Result<Vec<(i64, i64)>> {
    let mut arrows = Vec::new();
    for chain in text.split(',').map(str::trim).filter(|c| !c.is_empty()) {
        let mut vertices = Vec::new();
        let mut ops = Vec::new();
        let mut current = String::new();
        for ch in chain.chars() {
            match ch {
                '>' | '<' => {
                    vertices.push(std::mem::take(&mut current));
                    ops.push(ch);
                }
                c if c.is_whitespace() => {}
                c => current.push(c),
            }
        }
        vertices.push(current);
        if ops.is_empty() {
            return Err(Error::Parse(format!("no arrow in {chain:?}")));
        }
        let vertices = vertices
            .iter()
            .map(|v| {
                v.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad vertex {v:?} in {chain:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        for (w, op) in vertices.windows(2).zip(ops) {
            arrows.push(if op == '>' {
                (w[0], w[1])
            } else {
                (w[1], w[0])
            });
        }
    }
    Ok(arrows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[i64]) -> DimVector {
        DimVector(v.to_vec())
    }

    #[test]
    fn parse_presets() {
        let q = Quiver::parse("A3:1>2<3").unwrap();
        assert_eq!(q.n(), 3);
        assert_eq!(q.arrows(), &[(0, 1), (2, 1)]);

        let a1 = Quiver::parse("A1").unwrap();
        assert_eq!(a1.n(), 1);
        assert!(a1.arrows().is_empty());

        let d4 = Quiver::parse("D4:sym-source").unwrap();
        assert_eq!(d4.arrows().len(), 3);
        assert!(d4.arrows().iter().all(|&(s, _)| s == 1));
        let d4s = Quiver::parse("D4:sym-sink").unwrap();
        assert!(d4s.arrows().iter().all(|&(_, t)| t == 1));

        assert_eq!(Quiver::parse("A4").unwrap().arrows().len(), 3);
        assert_eq!(Quiver::parse("E6").unwrap().n(), 6);
    }

    #[test]
    fn parse_explicit_lists() {
        let q = Quiver::parse("1>2,3>2").unwrap();
        assert_eq!(q.n(), 3);
        let q = Quiver::parse("Q4:1>2").unwrap();
        assert_eq!(q.n(), 4);
        let q = Quiver::parse("A3:2<3,1>2").unwrap();
        assert_eq!(q.arrows(), &[(2, 1), (0, 1)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Quiver::parse("1>2,2>3,3>1"), Err(Error::Cycle(_))));
        assert!(matches!(
            Quiver::parse("Q2:1>3"),
            Err(Error::Index { index: 3, n: 2 })
        ));
        assert!(matches!(Quiver::parse("Q2:0>1"), Err(Error::Index { .. })));
        assert!(matches!(Quiver::parse("A3:1>3"), Err(Error::Parse(_))));
        assert!(matches!(Quiver::parse("Z9"), Err(Error::Parse(_))));
        assert!(matches!(
            Quiver::parse("A3:sym-source"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn euler_form_examples() {
        let a2 = Quiver::parse("A2:1>2").unwrap();
        assert_eq!(a2.euler_form(&dv(&[1, 0]), &dv(&[0, 1])).unwrap(), -1);
        assert_eq!(a2.euler_form(&dv(&[1, 1]), &dv(&[1, 1])).unwrap(), 1);
        let a3 = Quiver::parse("A3:1>2<3").unwrap();
        // 3 - (x1 y2 + x3 y2) = 1 - 2
        assert_eq!(a3.euler_form(&dv(&[1, 1, 1]), &dv(&[0, 1, 0])).unwrap(), -1);
        assert!(matches!(
            a3.euler_form(&dv(&[1, 1]), &dv(&[0, 1, 0])),
            Err(Error::Dimension {
                expected: 3,
                found: 2
            })
        ));
    }

    #[test]
    fn roots_and_coxeter_numbers() {
        let a2 = Quiver::parse("A2").unwrap();
        assert_eq!(
            a2.positive_roots().unwrap(),
            vec![dv(&[0, 1]), dv(&[1, 0]), dv(&[1, 1])]
        );
        for (text, roots, h) in [
            ("A1", 1, 2),
            ("A3:1>2<3", 6, 4),
            ("A4", 10, 5),
            ("D4:sym-source", 12, 6),
            ("D5", 20, 8),
            ("E6", 36, 12),
        ] {
            let q = Quiver::parse(text).unwrap();
            let n = q.n() as u64;
            assert_eq!(q.positive_roots().unwrap().len(), roots, "{text}");
            assert_eq!(q.coxeter_number().unwrap(), h, "{text}");
            assert_eq!(roots as u64, n * h / 2);
            assert_eq!(q.dynkin_type().unwrap().coxeter_number(), h);
        }
    }

    #[test]
    fn non_dynkin_rejected() {
        let kronecker = Quiver::parse("Q2:1>2,1>2").unwrap();
        assert!(matches!(
            kronecker.positive_roots(),
            Err(Error::NotFiniteType(_))
        ));
        let d4_tilde = Quiver::parse("Q5:1>2,3>2,4>2,5>2").unwrap();
        assert!(matches!(
            d4_tilde.coxeter_number(),
            Err(Error::NotFiniteType(_))
        ));
    }

    #[test]
    fn coxeter_transform_examples() {
        let a2 = Quiver::parse("A2:1>2").unwrap();
        assert_eq!(
            a2.coxeter_transform(&dv(&[1, 0]), Direction::Forward)
                .unwrap(),
            dv(&[0, 1])
        );
        let p1 = a2
            .coxeter_transform(&dv(&[1, 1]), Direction::Forward)
            .unwrap();
        assert!(p1.0.iter().all(|&x| x <= 0) && !p1.is_zero());
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!(DynkinType::A(3).fuss_catalan(1), 14);
        assert_eq!(DynkinType::A(3).positive_fuss_catalan(1), 5);
        assert_eq!(DynkinType::A(3).fuss_catalan(2), 55);
        assert_eq!(DynkinType::D(4).fuss_catalan(1), 50);
        assert_eq!(DynkinType::D(4).exceptional_sequence_count(), 162);
        assert_eq!(DynkinType::A(4).exceptional_sequence_count(), 125);
    }

    #[test]
    fn multiple_of() {
        assert_eq!(dv(&[2, 0, 2]).integer_multiple_of(&dv(&[1, 0, 1])), Some(2));
        assert_eq!(dv(&[0, 0, 0]).integer_multiple_of(&dv(&[1, 0, 1])), Some(0));
        assert_eq!(dv(&[1, 0, 2]).integer_multiple_of(&dv(&[1, 0, 1])), None);
        assert_eq!(dv(&[1, 0]).integer_multiple_of(&dv(&[2, 0])), None);
    }
}
