//! Explicit quiver representations, BGP reflection functors and Hom/Ext.

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::quiver::{DimVector, Quiver};

/// Integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    fn to_q(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.add_i64(r, c, self.get(r, c));
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.to_q().rank()
    }
}

/// A representation: a vector space per vertex and a matrix per arrow.
///
/// `maps[a]` has shape `dims[target] x dims[source]` for arrow `a` of the quiver
/// it was built for; arrow indices follow `Quiver::arrows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    pub dims: DimVector,
    pub maps: Vec<IMatrix>,
}

/// A morphism given by one matrix per vertex (`dims_N[v] x dims_M[v]`).
pub type Morphism = Vec<IMatrix>;

impl Rep {
    pub fn simple(q: &Quiver, v: usize) -> Rep {
        let dims = DimVector::unit(q.n(), v);
        let maps = q
            .arrows()
            .iter()
            .map(|&(s, t)| IMatrix::zeros(dims[t] as usize, dims[s] as usize))
            .collect();
        Rep { dims, maps }
    }

    pub fn check_shape(&self, q: &Quiver) -> bool {
        self.dims.len() == q.n()
            && self.maps.len() == q.arrows().len()
            && q.arrows().iter().zip(&self.maps).all(|(&(s, t), m)| {
                m.rows == self.dims[t] as usize && m.cols == self.dims[s] as usize
            })
    }
}

/// BGP reflection at a sink `k`: replaces `V_k` by the kernel of `(+) V_i -> V_k`.
/// Returns a representation of `q.reflect_at(k)`.
pub fn reflect_at_sink(q: &Quiver, rep: &Rep, k: usize) -> Rep {
    assert!(q.is_sink(k), "vertex {} is not a sink", k + 1);
    let incoming: Vec<usize> = (0..q.arrows().len())
        .filter(|&a| q.arrows()[a].1 == k)
        .collect();
    let dk = rep.dims[k] as usize;
    let offsets = block_offsets(incoming.iter().map(|&a| rep.dims[q.arrows()[a].0] as usize));
    let total = *offsets.last().unwrap_or(&0);

    let mut psi = QMatrix::zeros(dk, total);
    for (b, &a) in incoming.iter().enumerate() {
        let m = &rep.maps[a];
        for r in 0..m.rows {
            for c in 0..m.cols {
                psi.add_i64(r, offsets[b] + c, m.get(r, c));
            }
        }
    }
    let kernel = psi.kernel();
    let new_dk = kernel.len();

    let mut dims = rep.dims.clone();
    dims.0[k] = new_dk as i64;
    let mut maps = rep.maps.clone();
    for (b, &a) in incoming.iter().enumerate() {
        let di = rep.dims[q.arrows()[a].0] as usize;
        let mut m = IMatrix::zeros(di, new_dk);
        for (col, v) in kernel.iter().enumerate() {
            for r in 0..di {
                m.set(r, col, v[offsets[b] + r]);
            }
        }
        maps[a] = m;
    }
    Rep { dims, maps }
}

/// BGP reflection at a source `k`: replaces `V_k` by the cokernel of `V_k -> (+) V_j`.
/// Returns a representation of `q.reflect_at(k)`.
pub fn reflect_at_source(q: &Quiver, rep: &Rep, k: usize) -> Rep {
    assert!(q.is_source(k), "vertex {} is not a source", k + 1);
    let outgoing: Vec<usize> = (0..q.arrows().len())
        .filter(|&a| q.arrows()[a].0 == k)
        .collect();
    let dk = rep.dims[k] as usize;
    let offsets = block_offsets(outgoing.iter().map(|&a| rep.dims[q.arrows()[a].1] as usize));
    let total = *offsets.last().unwrap_or(&0);

    let mut phi = QMatrix::zeros(total, dk);
    for (b, &a) in outgoing.iter().enumerate() {
        let m = &rep.maps[a];
        for r in 0..m.rows {
            for c in 0..m.cols {
                phi.add_i64(offsets[b] + r, c, m.get(r, c));
            }
        }
    }
    // Rows of the projection onto the cokernel span the left kernel of phi.
    let projection = phi.left_kernel();
    let new_dk = projection.len();

    let mut dims = rep.dims.clone();
    dims.0[k] = new_dk as i64;
    let mut maps = rep.maps.clone();
    for (b, &a) in outgoing.iter().enumerate() {
        let dj = rep.dims[q.arrows()[a].1] as usize;
        let mut m = IMatrix::zeros(new_dk, dj);
        for (row, v) in projection.iter().enumerate() {
            for c in 0..dj {
                m.set(row, c, v[offsets[b] + c]);
            }
        }
        maps[a] = m;
    }
    Rep { dims, maps }
}

fn block_offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut offsets = vec![0];
    for s in sizes {
        offsets.push(offsets.last().unwrap() + s);
    }
    offsets
}

/// Builds the indecomposable representation with dimension vector `root`.
///
/// Reflect at sinks in an admissible order until the dimension vector becomes
/// simple, then walk back with source reflections starting from that simple.
pub fn indecomposable(q: &Quiver, root: &DimVector) -> Result<Rep> {
    let n = q.n();
    let mut order = q.topological_order();
    order.reverse();
    let mut quivers = vec![q.clone()];
    let mut steps = Vec::new();
    let mut current = root.0.clone();
    let bound = 4 * n * (n + 1) * (n + 1);
    for i in 0.. {
        if i > bound {
            return Err(Error::Integrity(format!(
                "reflection sequence for root {root} does not terminate"
            )));
        }
        let k = order[i % n];
        let cur_q = quivers.last().unwrap();
        debug_assert!(cur_q.is_sink(k));
        if current == DimVector::unit(n, k).0 {
            break;
        }
        let next = cur_q.reflect_vector(k, &current);
        if next.iter().any(|&x| x < 0) {
            return Err(Error::Integrity(format!(
                "{root} is not a positive root of {}",
                q.label()
            )));
        }
        current = next;
        quivers.push(cur_q.reflect_at(k));
        steps.push(k);
    }
    let base_q = quivers.last().unwrap();
    let simple_at = (0..n).find(|&v| current[v] == 1).unwrap();
    let mut rep = Rep::simple(base_q, simple_at);
    for (idx, &k) in steps.iter().enumerate().rev() {
        // quivers[idx + 1] has k as a source.
        rep = reflect_at_source(&quivers[idx + 1], &rep, k);
    }
    if rep.dims != *root || !rep.check_shape(q) {
        return Err(Error::Integrity(format!(
            "reflection functors produced {} instead of {root}",
            rep.dims
        )));
    }
    Ok(rep)
}

/// The intertwiner system `f_t M_a - N_a f_s = 0`, one block of unknowns per vertex.
fn hom_system(q: &Quiver, m: &Rep, n: &Rep) -> QMatrix {
    let var_offsets = block_offsets((0..q.n()).map(|v| (n.dims[v] * m.dims[v]) as usize));
    let var = |v: usize, r: usize, c: usize| var_offsets[v] + r * m.dims[v] as usize + c;
    let eq_count: usize = q
        .arrows()
        .iter()
        .map(|&(s, t)| (n.dims[t] * m.dims[s]) as usize)
        .sum();
    let mut sys = QMatrix::zeros(eq_count, *var_offsets.last().unwrap());
    let mut row = 0;
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        for r in 0..n.dims[t] as usize {
            for c in 0..m.dims[s] as usize {
                // (f_t M_a)[r][c] = sum_l f_t[r][l] M_a[l][c]
                for l in 0..m.dims[t] as usize {
                    sys.add_i64(row, var(t, r, l), ma.get(l, c));
                }
                // (N_a f_s)[r][c] = sum_l N_a[r][l] f_s[l][c]
                for l in 0..n.dims[s] as usize {
                    sys.add_i64(row, var(s, l, c), -na.get(r, l));
                }
                row += 1;
            }
        }
    }
    sys
}

/// `dim Hom(M, N)` as the nullity of the intertwiner system.
pub fn hom_dim(q: &Quiver, m: &Rep, n: &Rep) -> usize {
    let sys = hom_system(q, m, n);
    sys.cols() - sys.rank()
}

/// `dim Ext(M, N)` as the cokernel of the same system, from the standard
/// projective resolution `0 -> (+)_a P_t (x) M_s -> (+)_v P_v (x) M_v -> M -> 0`.
pub fn ext_dim_by_resolution(q: &Quiver, m: &Rep, n: &Rep) -> usize {
    let sys = hom_system(q, m, n);
    sys.rows() - sys.rank()
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis(q: &Quiver, m: &Rep, n: &Rep) -> Vec<Morphism> {
    let sys = hom_system(q, m, n);
    sys.kernel()
        .into_iter()
        .map(|v| {
            let mut offset = 0;
            (0..q.n())
                .map(|vert| {
                    let rows = n.dims[vert] as usize;
                    let cols = m.dims[vert] as usize;
                    let mut f = IMatrix::zeros(rows, cols);
                    for r in 0..rows {
                        for c in 0..cols {
                            f.set(r, c, v[offset + r * cols + c]);
                        }
                    }
                    offset += rows * cols;
                    f
                })
                .collect()
        })
        .collect()
}

/// Dimension vector of the sum of the images of the given morphisms into `N`.
pub fn image_dims(q: &Quiver, target: &Rep, morphisms: &[&Morphism]) -> DimVector {
    DimVector(
        (0..q.n())
            .map(|v| {
                let rows = target.dims[v] as usize;
                let cols: usize = morphisms.iter().map(|f| f[v].cols).sum();
                let mut joined = IMatrix::zeros(rows, cols);
                let mut c0 = 0;
                for f in morphisms {
                    for r in 0..rows {
                        for c in 0..f[v].cols {
                            joined.set(r, c0 + c, f[v].get(r, c));
                        }
                    }
                    c0 += f[v].cols;
                }
                joined.rank() as i64
            })
            .collect(),
    )
}

/// Dimension vector of the common kernel of the given morphisms out of `M`.
pub fn common_kernel_dims(q: &Quiver, source: &Rep, morphisms: &[&Morphism]) -> DimVector {
    DimVector(
        (0..q.n())
            .map(|v| {
                let cols = source.dims[v] as usize;
                let rows: usize = morphisms.iter().map(|f| f[v].rows).sum();
                let mut stacked = IMatrix::zeros(rows, cols);
                let mut r0 = 0;
                for f in morphisms {
                    for r in 0..f[v].rows {
                        for c in 0..cols {
                            stacked.set(r0 + r, c, f[v].get(r, c));
                        }
                    }
                    r0 += f[v].rows;
                }
                (cols - stacked.rank()) as i64
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::parse("A2:1>2").unwrap()
    }

    #[test]
    fn a2_indecomposables() {
        let q = a2();
        let p1 = indecomposable(&q, &DimVector(vec![1, 1])).unwrap();
        assert_eq!(p1.maps[0].rank(), 1);
        assert_eq!(hom_dim(&q, &p1, &p1), 1);
        let s1 = indecomposable(&q, &DimVector(vec![1, 0])).unwrap();
        let s2 = indecomposable(&q, &DimVector(vec![0, 1])).unwrap();
        assert_eq!(hom_dim(&q, &s2, &p1), 1);
        assert_eq!(hom_dim(&q, &p1, &s2), 0);
        assert_eq!(hom_dim(&q, &p1, &s1), 1);
        assert_eq!(ext_dim_by_resolution(&q, &s1, &s2), 1);
        assert_eq!(ext_dim_by_resolution(&q, &s2, &s1), 0);
    }

    #[test]
    fn decomposable_has_bigger_endomorphisms() {
        let q = a2();
        // S1 (+) S2 with the zero map.
        let rep = Rep {
            dims: DimVector(vec![1, 1]),
            maps: vec![IMatrix::zeros(1, 1)],
        };
        assert_eq!(hom_dim(&q, &rep, &rep), 2);
    }

    #[test]
    fn sink_then_source_reflection_round_trips_dimension() {
        let q = Quiver::parse("A3:1>2<3").unwrap();
        let i2 = indecomposable(&q, &DimVector(vec![1, 1, 1])).unwrap();
        let r = reflect_at_sink(&q, &i2, 1);
        assert_eq!(r.dims, DimVector(vec![1, 1, 1]));
        let back = reflect_at_source(&q.reflect_at(1), &r, 1);
        assert_eq!(back.dims, i2.dims);
        assert_eq!(hom_dim(&q, &back, &back), 1);
    }

    #[test]
    fn image_and_kernel_of_inclusion() {
        let q = a2();
        let s2 = indecomposable(&q, &DimVector(vec![0, 1])).unwrap();
        let p1 = indecomposable(&q, &DimVector(vec![1, 1])).unwrap();
        let basis = hom_basis(&q, &s2, &p1);
        assert_eq!(basis.len(), 1);
        let refs: Vec<&Morphism> = basis.iter().collect();
        assert_eq!(image_dims(&q, &p1, &refs), DimVector(vec![0, 1]));
        assert_eq!(common_kernel_dims(&q, &s2, &refs), DimVector(vec![0, 0]));
    }
}
