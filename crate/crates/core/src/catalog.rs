//! The module catalog of a Dynkin quiver: one interned indecomposable per
//! positive root, with precomputed Hom/Ext tables and AR data.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Direction, Quiver};
use crate::rep::{self, Rep};

/// Index of a module in its catalog. Catalog order is lexicographic by
/// dimension vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleId(pub usize);

impl fmt::Display for ModuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct Module {
    pub rep: Rep,
    /// Bit `v` is set when vertex `v` (0-based) lies in the support.
    pub support: u64,
}

impl Module {
    pub fn dim(&self) -> &DimVector {
        &self.rep.dims
    }
}

#[derive(Debug)]
pub struct Catalog {
    quiver: Quiver,
    modules: Vec<Module>,
    by_dim: HashMap<DimVector, ModuleId>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
    projectives: Vec<ModuleId>,
    injectives: Vec<ModuleId>,
    simples: Vec<ModuleId>,
    projective_at: Vec<Option<usize>>,
    injective_at: Vec<Option<usize>>,
    tau: Vec<Option<ModuleId>>,
    tau_inv: Vec<Option<ModuleId>>,
}

impl Catalog {
    pub fn build(quiver: &Quiver) -> Result<Catalog> {
        let n = quiver.n();
        if n > 64 {
            return Err(Error::Domain("at most 64 vertices are supported".into()));
        }
        let roots = quiver.positive_roots()?;
        let mut modules = Vec::with_capacity(roots.len());
        let mut by_dim = HashMap::new();
        for (i, root) in roots.iter().enumerate() {
            let rep = rep::indecomposable(quiver, root)?;
            let support = root.support().iter().fold(0u64, |acc, &v| acc | (1 << v));
            modules.push(Module { rep, support });
            by_dim.insert(root.clone(), ModuleId(i));
        }

        let count = modules.len();
        let mut hom = vec![vec![0; count]; count];
        let mut ext = vec![vec![0; count]; count];
        for i in 0..count {
            for j in 0..count {
                let h = rep::hom_dim(quiver, &modules[i].rep, &modules[j].rep);
                let euler = quiver
                    .euler_unchecked(modules[i].dim().as_slice(), modules[j].dim().as_slice());
                let e = h as i64 - euler;
                if e < 0 {
                    return Err(Error::Integrity(format!(
                        "negative Ext dimension between {} and {}",
                        modules[i].dim(),
                        modules[j].dim()
                    )));
                }
                hom[i][j] = h;
                ext[i][j] = e as usize;
            }
            if hom[i][i] != 1 || ext[i][i] != 0 {
                return Err(Error::Integrity(format!(
                    "module {} is not an exceptional brick (End {}, Ext {})",
                    modules[i].dim(),
                    hom[i][i],
                    ext[i][i]
                )));
            }
        }

        let lookup = |d: &DimVector, what: &str| -> Result<ModuleId> {
            by_dim.get(d).copied().ok_or_else(|| {
                Error::Integrity(format!("{what} with dimension vector {d} is missing"))
            })
        };
        let mut projectives = Vec::with_capacity(n);
        let mut injectives = Vec::with_capacity(n);
        let mut simples = Vec::with_capacity(n);
        for v in 0..n {
            let p = DimVector((0..n).map(|w| quiver.path_count(v, w)).collect());
            let i = DimVector((0..n).map(|w| quiver.path_count(w, v)).collect());
            projectives.push(lookup(&p, "projective")?);
            injectives.push(lookup(&i, "injective")?);
            simples.push(lookup(&DimVector::unit(n, v), "simple")?);
        }
        let mut projective_at = vec![None; count];
        let mut injective_at = vec![None; count];
        for v in 0..n {
            projective_at[projectives[v].0] = Some(v);
            injective_at[injectives[v].0] = Some(v);
        }

        let phi = quiver.coxeter_matrix(Direction::Forward);
        let phi_inv = quiver.coxeter_matrix(Direction::Inverse);
        let apply = |m: &Vec<Vec<i64>>, d: &DimVector| {
            DimVector(
                m.iter()
                    .map(|row| row.iter().zip(d.as_slice()).map(|(a, b)| a * b).sum())
                    .collect(),
            )
        };
        let mut tau = vec![None; count];
        let mut tau_inv = vec![None; count];
        for (i, module) in modules.iter().enumerate() {
            let t = apply(&phi, module.dim());
            if t.is_positive() {
                tau[i] = Some(lookup(&t, "AR translate")?);
            }
            let ti = apply(&phi_inv, module.dim());
            if ti.is_positive() {
                tau_inv[i] = Some(lookup(&ti, "inverse AR translate")?);
            }
            if tau[i].is_none() != projective_at[i].is_some() {
                return Err(Error::Integrity(format!(
                    "Coxeter transform disagrees with projectivity of {}",
                    module.dim()
                )));
            }
            if tau_inv[i].is_none() != injective_at[i].is_some() {
                return Err(Error::Integrity(format!(
                    "inverse Coxeter transform disagrees with injectivity of {}",
                    module.dim()
                )));
            }
        }

        Ok(Catalog {
            quiver: quiver.clone(),
            modules,
            by_dim,
            hom,
            ext,
            projectives,
            injectives,
            simples,
            projective_at,
            injective_at,
            tau,
            tau_inv,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ModuleId> + Clone {
        (0..self.modules.len()).map(ModuleId)
    }

    pub fn module(&self, id: ModuleId) -> &Module {
        &self.modules[id.0]
    }

    pub fn rep(&self, id: ModuleId) -> &Rep {
        &self.modules[id.0].rep
    }

    pub fn dim(&self, id: ModuleId) -> &DimVector {
        self.modules[id.0].dim()
    }

    pub fn support(&self, id: ModuleId) -> u64 {
        self.modules[id.0].support
    }

    /// Support as sorted 0-based vertices.
    pub fn support_vertices(&self, id: ModuleId) -> Vec<usize> {
        (0..self.n())
            .filter(|v| self.support(id) & (1 << v) != 0)
            .collect()
    }

    pub fn lookup(&self, dim: &DimVector) -> Option<ModuleId> {
        self.by_dim.get(dim).copied()
    }

    pub fn key(&self, id: ModuleId) -> String {
        self.dim(id).key()
    }

    /// Resolves a `d1.d2.….dn` key, naming the key in the error.
    pub fn parse_key(&self, key: &str) -> Result<ModuleId> {
        let dim = DimVector::parse_key(key)?;
        if dim.len() != self.n() {
            return Err(Error::Catalog(format!(
                "module key {key:?} has {} entries, expected {}",
                dim.len(),
                self.n()
            )));
        }
        self.lookup(&dim).ok_or_else(|| {
            Error::Catalog(format!(
                "unknown module key {key:?}: not a positive root of {}",
                self.quiver.label()
            ))
        })
    }

    pub fn hom(&self, a: ModuleId, b: ModuleId) -> usize {
        self.hom[a.0][b.0]
    }

    pub fn ext(&self, a: ModuleId, b: ModuleId) -> usize {
        self.ext[a.0][b.0]
    }

    /// `Hom(a, b) = 0 = Ext(a, b)`, i.e. `b` lies in `a^perp`.
    pub fn perp(&self, a: ModuleId, b: ModuleId) -> bool {
        self.hom(a, b) == 0 && self.ext(a, b) == 0
    }

    pub fn projective(&self, v: usize) -> ModuleId {
        self.projectives[v]
    }

    pub fn injective(&self, v: usize) -> ModuleId {
        self.injectives[v]
    }

    pub fn simple(&self, v: usize) -> ModuleId {
        self.simples[v]
    }

    /// The vertex `v` with `id = P_v`, if `id` is projective.
    pub fn projective_vertex(&self, id: ModuleId) -> Option<usize> {
        self.projective_at[id.0]
    }

    pub fn injective_vertex(&self, id: ModuleId) -> Option<usize> {
        self.injective_at[id.0]
    }

    pub fn is_projective(&self, id: ModuleId) -> bool {
        self.projective_at[id.0].is_some()
    }

    pub fn is_injective(&self, id: ModuleId) -> bool {
        self.injective_at[id.0].is_some()
    }

    pub fn simple_vertex(&self, id: ModuleId) -> Option<usize> {
        self.simples.iter().position(|&s| s == id)
    }

    /// Hom and Ext recomputed from explicit matrices, bypassing the tables.
    pub fn hom_dim(&self, a: ModuleId, b: ModuleId) -> usize {
        rep::hom_dim(&self.quiver, self.rep(a), self.rep(b))
    }

    pub fn ext_dim(&self, a: ModuleId, b: ModuleId) -> usize {
        self.ext(a, b)
    }

    /// Ext from the projective resolution, independent of the Euler form.
    pub fn ext_dim_by_resolution(&self, a: ModuleId, b: ModuleId) -> usize {
        rep::ext_dim_by_resolution(&self.quiver, self.rep(a), self.rep(b))
    }

    pub fn ar_translate(&self, id: ModuleId) -> Option<ModuleId> {
        self.tau[id.0]
    }

    pub fn ar_translate_inverse(&self, id: ModuleId) -> Option<ModuleId> {
        self.tau_inv[id.0]
    }

    /// Indecomposable summands of the middle term of the almost split sequence
    /// ending in `c`, by knitting from the projective slice.
    pub fn ar_middle(&self, c: ModuleId) -> Result<Vec<ModuleId>> {
        if self.is_projective(c) {
            return Err(Error::Domain(format!(
                "{} is projective and ends no almost split sequence",
                self.key(c)
            )));
        }
        let mut memo: HashMap<ModuleId, Vec<ModuleId>> = HashMap::new();
        let middle = self.predecessors(c, &mut memo);
        let tc = self.tau[c.0].expect("non-projective has a translate");
        let sum = middle
            .iter()
            .fold(DimVector::zero(self.n()), |acc, &x| acc.add(self.dim(x)));
        if sum != self.dim(c).add(self.dim(tc)) {
            return Err(Error::Integrity(format!(
                "mesh at {} is not additive",
                self.key(c)
            )));
        }
        Ok(middle)
    }

    /// Sources of irreducible maps into `x`.
    fn predecessors(
        &self,
        x: ModuleId,
        memo: &mut HashMap<ModuleId, Vec<ModuleId>>,
    ) -> Vec<ModuleId> {
        if let Some(p) = memo.get(&x) {
            return p.clone();
        }
        let result = match self.projective_at[x.0] {
            // rad P_v is the sum of P_w over arrows v -> w.
            Some(v) => self
                .quiver
                .arrows()
                .iter()
                .filter(|&&(s, _)| s == v)
                .map(|&(_, t)| self.projectives[t])
                .collect(),
            None => self.successors(self.tau[x.0].unwrap(), memo),
        };
        memo.insert(x, result.clone());
        result
    }

    /// Targets of irreducible maps out of `x`.
    fn successors(
        &self,
        x: ModuleId,
        memo: &mut HashMap<ModuleId, Vec<ModuleId>>,
    ) -> Vec<ModuleId> {
        let mut out: Vec<ModuleId> = match self.projective_at[x.0] {
            Some(w) => self
                .quiver
                .arrows()
                .iter()
                .filter(|&&(_, t)| t == w)
                .map(|&(s, _)| self.projectives[s])
                .collect(),
            None => Vec::new(),
        };
        for z in self.predecessors(x, memo) {
            if let Some(tz) = self.tau_inv[z.0] {
                out.push(tz);
            }
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat(text: &str) -> Catalog {
        Catalog::build(&Quiver::parse(text).unwrap()).unwrap()
    }

    fn id(c: &Catalog, key: &str) -> ModuleId {
        c.parse_key(key).unwrap()
    }

    #[test]
    fn a2_catalog() {
        let c = cat("A2:1>2");
        assert_eq!(c.len(), 3);
        let p1 = id(&c, "1.1");
        assert_eq!(c.rep(p1).maps[0].get(0, 0).abs(), 1);
        assert_eq!(c.projective(0), p1);
        assert_eq!(c.projective(1), id(&c, "0.1"));
        assert_eq!(c.hom(id(&c, "0.1"), p1), 1);
        assert_eq!(c.ext(id(&c, "1.0"), id(&c, "0.1")), 1);
    }

    #[test]
    fn a3_projectives_and_injectives() {
        let c = cat("A3:1>2<3");
        let keys = |ids: Vec<ModuleId>| ids.into_iter().map(|i| c.key(i)).collect::<Vec<_>>();
        assert_eq!(
            keys((0..3).map(|v| c.projective(v)).collect()),
            ["1.1.0", "0.1.0", "0.1.1"]
        );
        assert_eq!(
            keys((0..3).map(|v| c.injective(v)).collect()),
            ["1.0.0", "1.1.1", "0.0.1"]
        );
        assert_eq!(c.hom(c.projective(2), c.injective(1)), 1);
    }

    #[test]
    fn a1_single_module() {
        let c = cat("A1");
        assert_eq!(c.len(), 1);
        let s = ModuleId(0);
        assert_eq!(c.projective(0), s);
        assert_eq!(c.injective(0), s);
        assert_eq!(c.simple(0), s);
        assert!(matches!(c.ar_middle(s), Err(Error::Domain(_))));
    }

    #[test]
    fn unknown_key_is_named() {
        let c = cat("A2");
        let err = c.parse_key("2.1").unwrap_err();
        assert!(err.to_string().contains("2.1"));
        assert!(c.parse_key("1.1.1").is_err());
    }

    #[test]
    fn a2_translate_and_mesh() {
        let c = cat("A2:1>2");
        let s1 = id(&c, "1.0");
        let p2 = id(&c, "0.1");
        let p1 = id(&c, "1.1");
        assert_eq!(c.ar_translate(s1), Some(p2));
        assert_eq!(c.hom(s1, p2), 0);
        assert_eq!(c.ext(s1, p2), 1);
        assert_eq!(c.ar_translate(p1), None);
        assert_eq!(c.ar_middle(s1).unwrap(), vec![p1]);
    }

    #[test]
    fn a3_middle_of_i2_has_two_summands() {
        let c = cat("A3:1>2<3");
        let i2 = id(&c, "1.1.1");
        let mid = c.ar_middle(i2).unwrap();
        assert_eq!(mid.len(), 2);
        let t = c.ar_translate(id(&c, "1.0.0")).unwrap();
        assert_eq!(
            c.dim(t),
            &c.quiver()
                .coxeter_transform(&DimVector(vec![1, 0, 0]), Direction::Forward)
                .unwrap()
        );
    }

    #[test]
    fn ext_by_resolution_single_instance() {
        let c = cat("A3:1>2<3");
        let i3 = c.injective(2);
        let p3 = c.projective(2);
        assert_eq!(c.ext_dim(i3, p3), c.ext_dim_by_resolution(i3, p3));
        assert_eq!(c.ext_dim(i3, p3), 0);
    }
}
