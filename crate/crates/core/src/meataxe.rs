//! Composition factors of modules over a prime field: random algebra
//! elements, kernel spinning and the Holt–Rees form of Norton's
//! irreducibility test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::field::{GroundField, PrimeField};
use crate::hecke::{quotient_by, restrict_to, ModuleRep};
use crate::linalg::{self, Mat, Subspace};
use crate::polyfp;

/// Largest module dimension accepted by [`chop`].
pub const MAX_CHOP_DIM: usize = 400;
const TRIES: usize = 400;

/// Composition factors grouped by label, in label order.
#[derive(Debug, Clone)]
pub struct ChopResult {
    pub factors: Vec<(ModuleRep<u64>, usize)>,
    pub labels: Vec<Partition>,
}

impl ChopResult {
    pub fn multiplicity(&self, label: &Partition) -> usize {
        self.labels
            .iter()
            .position(|l| l == label)
            .map_or(0, |i| self.factors[i].1)
    }
}

enum Verdict {
    Irreducible,
    Submodule(Vec<Vec<u64>>),
}

/// Smallest submodule containing `v`.
pub fn spin<F: GroundField>(f: &F, gens: &[Mat<F::Elem>], v: &[F::Elem]) -> Subspace<F::Elem> {
    let mut sub = Subspace::new(v.len());
    let mut queue = Vec::new();
    if sub.insert(f, v) {
        queue.push(v.to_vec());
    }
    while let Some(w) = queue.pop() {
        for g in gens {
            let img = linalg::mat_vec(f, g, &w);
            if sub.insert(f, &img) {
                queue.push(img);
            }
        }
    }
    sub
}

fn find_split(f: &PrimeField, rep: &ModuleRep<u64>, rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let dim = rep.dim;
    if dim <= 1 {
        return Ok(Verdict::Irreducible);
    }
    let p = f.modulus();
    let transposes: Vec<Mat<u64>> = rep.gens.iter().map(Mat::transpose).collect();
    let mut pool: Vec<Mat<u64>> = rep.gens.clone();
    if pool.is_empty() {
        // Every subspace is a submodule.
        let mut e = vec![0u64; dim];
        e[0] = 1;
        return Ok(Verdict::Submodule(vec![e]));
    }
    for _ in 0..TRIES {
        if pool.len() < rep.gens.len() + 16 {
            let a = rng.gen_range(0..pool.len());
            let b = rng.gen_range(0..pool.len());
            let prod = linalg::mat_mul(f, &pool[a], &pool[b]);
            pool.push(prod);
        } else {
            let a = rng.gen_range(0..pool.len());
            let b = rng.gen_range(0..rep.gens.len());
            let slot = rng.gen_range(rep.gens.len()..pool.len());
            pool[slot] = linalg::mat_mul(f, &pool[a], &rep.gens[b]);
        }
        let mut theta = linalg::zeros(f, dim, dim);
        for m in &pool {
            let c = f.random(rng);
            if c != 0 {
                theta = linalg::mat_add(f, &theta, &linalg::mat_scale(f, &c, m));
            }
        }
        let cp = polyfp::char_poly(&theta, p);
        for g in polyfp::irreducible_factors(&cp, p, rng) {
            let deg = g.len() - 1;
            let gt = polyfp::eval_matrix(&g, &theta, p);
            let kernel = linalg::nullspace(f, &gt);
            for v in kernel.iter().take(4) {
                let s = spin(f, &rep.gens, v);
                if s.dim() < dim {
                    return Ok(Verdict::Submodule(s.basis().to_vec()));
                }
            }
            if kernel.len() == deg {
                let kt = linalg::nullspace(f, &gt.transpose());
                let w = spin(f, &transposes, &kt[0]);
                if w.dim() == dim {
                    return Ok(Verdict::Irreducible);
                }
                let rows = Mat::from_rows(w.basis().to_vec(), dim);
                return Ok(Verdict::Submodule(linalg::nullspace(f, &rows)));
            }
        }
    }
    Err(Error::Resource(format!(
        "irreducibility test inconclusive for a {dim}-dimensional module after {TRIES} tries"
    )))
}

/// The composition factors of `rep`, deterministic in `seed`.
pub fn chop(f: &PrimeField, rep: &ModuleRep<u64>, seed: u64) -> Result<Vec<ModuleRep<u64>>> {
    if rep.dim > MAX_CHOP_DIM {
        return Err(Error::Resource(format!(
            "module of dimension {} exceeds the chop bound {MAX_CHOP_DIM}",
            rep.dim
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stack = vec![rep.clone()];
    let mut out = Vec::new();
    while let Some(m) = stack.pop() {
        if m.dim == 0 {
            continue;
        }
        match find_split(f, &m, &mut rng)? {
            Verdict::Irreducible => out.push(m),
            Verdict::Submodule(basis) => {
                let mut sub = Subspace::new(m.dim);
                for v in &basis {
                    sub.insert(f, v);
                }
                let quotient = quotient_by(f, &m, &sub);
                let inner = restrict_to(f, &m, sub.basis())?;
                stack.push(quotient);
                stack.push(inner);
            }
        }
    }
    Ok(out)
}

/// Chops and groups the factors by the label `identify` assigns.
pub fn chop_and_label(
    f: &PrimeField,
    rep: &ModuleRep<u64>,
    seed: u64,
    mut identify: impl FnMut(&ModuleRep<u64>) -> Result<Partition>,
) -> Result<ChopResult> {
    let mut groups: Vec<(Partition, ModuleRep<u64>, usize)> = Vec::new();
    for mut factor in chop(f, rep, seed)? {
        let label = identify(&factor)?;
        factor.label = Some(label.clone());
        match groups.iter_mut().find(|g| g.0 == label) {
            Some(g) => g.2 += 1,
            None => groups.push((label, factor, 1)),
        }
    }
    groups.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(ChopResult {
        labels: groups.iter().map(|g| g.0.clone()).collect(),
        factors: groups.into_iter().map(|g| (g.1, g.2)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{endomorphism_dim, permutation_module, specht_module, HeckeAlgebra};
    use crate::Composition;

    #[test]
    fn regular_module_dims_are_conserved() {
        let h = HeckeAlgebra::new(PrimeField::new(3, 2).unwrap(), 3).unwrap();
        let f = h.field().clone();
        let m = permutation_module(&h, &Composition::ones(3)).unwrap();
        let factors = chop(&f, &m.rep, 1).unwrap();
        assert_eq!(factors.iter().map(|x| x.dim).sum::<usize>(), 6);
        for x in &factors {
            assert_eq!(endomorphism_dim(&f, x), 1);
        }
        let mut dims: Vec<usize> = factors.iter().map(|x| x.dim).collect();
        dims.sort();
        // Two 1-dim (index/sign coincide at e = 2) plus the 2-dim simple twice.
        assert_eq!(dims, vec![1, 1, 2, 2]);
    }

    #[test]
    fn simple_chops_to_itself() {
        let h = HeckeAlgebra::new(PrimeField::new(7, 2).unwrap(), 4).unwrap();
        let f = h.field().clone();
        let s = specht_module(&h, &Partition::new(vec![3, 1]).unwrap()).unwrap();
        let factors = chop(&f, &s.rep, 5).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].dim, 3);
    }

    #[test]
    fn chop_is_deterministic() {
        let h = HeckeAlgebra::new(PrimeField::new(3, 2).unwrap(), 4).unwrap();
        let f = h.field().clone();
        let m = permutation_module(&h, &Composition::new(vec![2, 1, 1]).unwrap()).unwrap();
        let a = chop(&f, &m.rep, 9).unwrap();
        let b = chop(&f, &m.rep, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.iter().map(|x| x.dim).sum::<usize>(), 12);
    }
}
