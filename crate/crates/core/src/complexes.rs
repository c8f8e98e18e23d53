//! Cochain complexes over the composition poset: `X_H` with terms
//! `H ⊗_{H_λ} H` and `X_S` with terms `S(n)e_λ ⊗_{S(λ)} e_λ S(n)`.
//!
//! Degree `i` carries one block per composition with `n − i` parts, in
//! [`combinat::enumerate_compositions`] order. Differentials raise degree
//! and are stored column-wise.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::combinat::{self, Composition};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, GroundField, PrimeField};
use crate::hecke::{self, HeckeAlgebra, HeckeElement, IsoVerdict, ModuleRep};
use crate::linalg::{self, Mat, SparseEchelon, SparseMat, SparseRow};
use crate::par::Exec;
use crate::schur::SchurAlgebra;
use crate::with_field;

pub const MAX_XH_N: usize = 5;
pub const MAX_XS_N: usize = 4;

const HINT_PRIME: u64 = 2_147_483_647;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    XH,
    XS,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::XH => "XH",
            Which::XS => "XS",
        })
    }
}

impl FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "XH" | "xh" => Ok(Which::XH),
            "XS" | "xs" => Ok(Which::XS),
            _ => Err(Error::Input(format!("unknown complex {s:?}; expected XH or XS"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub label: Composition,
    pub offset: usize,
    pub dim: usize,
}

/// Graded based free modules with one differential per degree; `diffs[i]`
/// maps term `i` to term `i + 1` (the last one to the zero space).
#[derive(Debug, Clone)]
pub struct CochainComplex<F: GroundField> {
    pub field: F,
    pub terms: Vec<Vec<Block>>,
    pub diffs: Vec<SparseMat<F::Elem>>,
}

impl<F: GroundField> CochainComplex<F> {
    pub fn term_dims(&self) -> Vec<usize> {
        self.terms
            .iter()
            .map(|t| t.iter().map(|b| b.dim).sum())
            .collect()
    }

    pub fn d2_zero(&self, exec: Exec) -> bool {
        let f = &self.field;
        exec.map_range(self.diffs.len().saturating_sub(1), |i| {
            self.diffs[i + 1].compose(f, &self.diffs[i]).is_zero()
        })
        .into_iter()
        .all(|b| b)
    }

    pub fn ranks(&self, exec: Exec) -> Vec<usize> {
        exec.map(&self.diffs, |d| d.rank(&self.field))
    }

    /// `dim X^i − rank d^i − rank d^{i−1}`.
    pub fn cohomology(&self, exec: Exec) -> Vec<usize> {
        cohomology_from(&self.term_dims(), &self.ranks(exec))
    }

    /// Ranks modulo a large prime, where every entry reduces. Only a hint:
    /// they bound the exact ranks from below.
    pub fn rank_hints(&self, exec: Exec) -> Vec<Option<usize>> {
        let fp = PrimeField::new(HINT_PRIME, 2).expect("hint prime");
        exec.map(&self.diffs, |d| {
            let cols = d
                .cols
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|(i, v)| self.field.residue_mod(v, HINT_PRIME).map(|r| (*i, r)))
                        .filter(|x| !matches!(x, Some((_, 0))))
                        .collect::<Option<Vec<_>>>()
                })
                .collect::<Option<Vec<_>>>()?;
            Some(fp.sparse_rank(cols))
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.term_dims()
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Every nonzero entry of `d^i` joins a block `λ` to a block `ν`
    /// covering it.
    pub fn respects_covers(&self) -> bool {
        self.diffs.iter().enumerate().all(|(i, d)| {
            let Some(target) = self.terms.get(i + 1) else {
                return d.is_zero();
            };
            self.terms[i].iter().all(|src| {
                let covers = combinat::covers_above(&src.label);
                (src.offset..src.offset + src.dim).all(|j| {
                    d.cols[j].iter().all(|(r, _)| {
                        target
                            .iter()
                            .find(|b| b.offset <= *r && *r < b.offset + b.dim)
                            .is_some_and(|b| covers.contains(&b.label))
                    })
                })
            })
        })
    }
}

pub fn cohomology_from(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..dims.len())
        .map(|i| dims[i] - ranks[i] - if i > 0 { ranks[i - 1] } else { 0 })
        .collect()
}

/// `Σ_{λ ∈ Λ(n)} (−1)^{n−|λ|} (n!/λ!) n!`.
pub fn xh_euler_formula(n: usize) -> Result<i64> {
    let nf = combinat::factorial(n) as i64;
    Ok(combinat::enumerate_compositions(n, None)?
        .iter()
        .map(|l| {
            let s = if (n - l.len()) % 2 == 0 { 1 } else { -1 };
            s * nf / l.factorial_product() as i64 * nf
        })
        .sum())
}

fn graded_compositions(n: usize) -> Result<Vec<Vec<Composition>>> {
    (0..n.max(1))
        .map(|i| combinat::enumerate_compositions(n, Some(n - i)))
        .collect()
}

fn layout(labels: &[Composition], mut dims: impl FnMut(&Composition) -> usize) -> Vec<Block> {
    let mut offset = 0;
    labels
        .iter()
        .map(|l| {
            let dim = dims(l);
            let b = Block { label: l.clone(), offset, dim };
            offset += dim;
            b
        })
        .collect()
}

fn find_block(term: &[Block], label: &Composition) -> usize {
    term.iter().position(|b| &b.label == label).expect("block present")
}

fn sign_elem<F: GroundField>(f: &F, lambda: &Composition, nu: &Composition) -> Result<F::Elem> {
    Ok(f.from_i64(combinat::cover_sign(lambda, nu)? as i64))
}

/// `X_H` together with the coset data needed to rewrite `T_a ⊗ h`.
pub struct XhComplex<F: GroundField> {
    pub complex: CochainComplex<F>,
    hecke: HeckeAlgebra<F>,
    /// `[deg][block]`: the representatives `D_λ`.
    reps: Vec<Vec<Vec<usize>>>,
    /// `[deg][block][a]`: `(pos of d, u)` with `a = d u`, `u ∈ S_λ`.
    splits: Vec<Vec<Vec<(usize, usize)>>>,
}

pub fn build_xh<F: GroundField>(field: F, n: usize, exec: Exec) -> Result<XhComplex<F>> {
    if n == 0 || n > MAX_XH_N {
        return Err(Error::Resource(format!("X_H is built for 1 <= n <= {MAX_XH_N}, got {n}")));
    }
    let hecke = HeckeAlgebra::new(field.clone(), n)?;
    let g = hecke.group();
    let order = g.order();
    let labels = graded_compositions(n)?;
    let terms: Vec<Vec<Block>> = labels
        .iter()
        .map(|ls| layout(ls, |l| order / l.factorial_product() as usize * order))
        .collect();
    let reps: Vec<Vec<Vec<usize>>> = labels
        .iter()
        .map(|ls| ls.iter().map(|l| g.left_coset_reps(l)).collect())
        .collect();
    let splits = labels
        .iter()
        .zip(&reps)
        .map(|(ls, rs)| {
            ls.iter()
                .zip(rs)
                .map(|(l, ds)| {
                    let mut table = vec![(0, 0); order];
                    for (k, &d) in ds.iter().enumerate() {
                        for u in g.parabolic_elements(l) {
                            table[g.mul(d, u)] = (k, u);
                        }
                    }
                    table
                })
                .collect()
        })
        .collect();
    let mut xh = XhComplex {
        complex: CochainComplex { field, terms, diffs: Vec::new() },
        hecke,
        reps,
        splits,
    };
    xh.complex.diffs = (0..labels.len())
        .map(|i| xh.differential(i, exec))
        .collect::<Result<_>>()?;
    Ok(xh)
}

impl<F: GroundField> XhComplex<F> {
    pub fn hecke(&self) -> &HeckeAlgebra<F> {
        &self.hecke
    }

    /// Coordinates of `left ⊗ right` in block `b` of degree `deg`.
    pub fn element(
        &self,
        deg: usize,
        b: usize,
        left: &HeckeElement<F::Elem>,
        right: &HeckeElement<F::Elem>,
    ) -> SparseRow<F::Elem> {
        let f = self.hecke.field();
        let order = self.hecke.dim();
        let off = self.complex.terms[deg][b].offset;
        let mut out = Vec::new();
        for (a, c) in left.coeffs().iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let (pos, u) = self.splits[deg][b][a];
            let h = self.hecke.mul_basis_left(u, right);
            for (w, x) in h.coeffs().iter().enumerate() {
                if !f.is_zero(x) {
                    out.push((off + pos * order + w, f.mul(c, x)));
                }
            }
        }
        linalg::sparse_from_entries(f, out)
    }

    /// `(d, w)` for a basis index of block `b` (block-local).
    pub fn basis_pair(&self, deg: usize, b: usize, local: usize) -> (usize, usize) {
        let order = self.hecke.dim();
        (self.reps[deg][b][local / order], local % order)
    }

    fn differential(&self, i: usize, exec: Exec) -> Result<SparseMat<F::Elem>> {
        let f = self.hecke.field();
        let terms = &self.complex.terms;
        let src_dim: usize = terms[i].iter().map(|b| b.dim).sum();
        let Some(target) = terms.get(i + 1) else {
            return Ok(SparseMat::zero(0, src_dim));
        };
        let tgt_dim = target.iter().map(|b| b.dim).sum();
        let mut cols = Vec::with_capacity(src_dim);
        for (bi, blk) in terms[i].iter().enumerate() {
            let covers = combinat::covers_above(&blk.label)
                .into_iter()
                .map(|nu| {
                    let s = sign_elem(f, &blk.label, &nu)?;
                    Ok((find_block(target, &nu), s))
                })
                .collect::<Result<Vec<_>>>()?;
            cols.extend(exec.map_range(blk.dim, |local| {
                let (d, w) = self.basis_pair(i, bi, local);
                let left = self.hecke.basis(d);
                let right = self.hecke.basis(w);
                let mut entries = Vec::new();
                for (tb, s) in &covers {
                    for (r, v) in self.element(i + 1, *tb, &left, &right) {
                        entries.push((r, f.mul(s, &v)));
                    }
                }
                linalg::sparse_from_entries(f, entries)
            }));
        }
        Ok(SparseMat { nrows: tgt_dim, cols })
    }

    /// `H ⊗ H` in degree 0 as a module for the enveloping algebra: left
    /// multiplication by each `T_s`, then right multiplication by each `T_s`.
    fn degree_zero_bimodule(&self) -> ModuleRep<F::Elem> {
        let f = self.hecke.field();
        let n = self.hecke.n();
        let dim = self.complex.terms[0][0].dim;
        let mut gens = Vec::new();
        for side in 0..2 {
            for s in 0..n.saturating_sub(1) {
                let cols: Vec<SparseRow<F::Elem>> = (0..dim)
                    .map(|local| {
                        let (a, w) = self.basis_pair(0, 0, local);
                        let (l, r) = if side == 0 {
                            (self.hecke.mul_s_left(s, &self.hecke.basis(a)), self.hecke.basis(w))
                        } else {
                            (self.hecke.basis(a), self.hecke.mul_s_right(&self.hecke.basis(w), s))
                        };
                        self.element(0, 0, &l, &r)
                    })
                    .collect();
                gens.push(SparseMat { nrows: dim, cols }.to_dense(f));
            }
        }
        ModuleRep::new(dim, gens)
    }

    /// `_αH`: left action through `α`, right action by multiplication.
    fn alpha_regular_bimodule(&self) -> ModuleRep<F::Elem> {
        let h = &self.hecke;
        let f = h.field();
        let n = h.n();
        let mut gens = Vec::new();
        for s in 0..n.saturating_sub(1) {
            let a = h.alpha_generator(s);
            let cols: Vec<Vec<F::Elem>> = (0..h.dim())
                .map(|w| h.multiply(&a, &h.basis(w)).coeffs().to_vec())
                .collect();
            gens.push(Mat::from_columns(h.dim(), &cols, f.zero()));
        }
        for s in 0..n.saturating_sub(1) {
            let cols: Vec<Vec<F::Elem>> = (0..h.dim())
                .map(|w| h.mul_s_right(&h.basis(w), s).coeffs().to_vec())
                .collect();
            gens.push(Mat::from_columns(h.dim(), &cols, f.zero()));
        }
        ModuleRep::new(h.dim(), gens)
    }

    /// `H⁰ = ker d⁰` as an `H`-`H`-bimodule.
    pub fn h0_bimodule(&self) -> Result<ModuleRep<F::Elem>> {
        let f = self.hecke.field();
        let d0 = self.complex.diffs[0].to_dense(f);
        let kernel = linalg::nullspace(f, &d0);
        hecke::restrict_to(f, &self.degree_zero_bimodule(), &kernel)
    }
}

/// Whether `H⁰(X_H) ≅ _αH` as bimodules.
pub fn h0_bimodule_identify<F: GroundField>(xh: &XhComplex<F>, seed: u64) -> Result<bool> {
    if xh.hecke.n() > 3 {
        return Err(Error::Resource("H⁰ identification is bounded to n <= 3".into()));
    }
    let f = xh.hecke.field();
    let h0 = xh.h0_bimodule()?;
    let target = xh.alpha_regular_bimodule();
    Ok(matches!(
        hecke::find_isomorphism(f, &h0, &target, seed)?,
        IsoVerdict::Isomorphic(_)
    ))
}

/// Whether `H⁰(X_H)` is isomorphic to the untwisted regular bimodule.
pub fn h0_is_regular<F: GroundField>(xh: &XhComplex<F>, seed: u64) -> Result<bool> {
    let f = xh.hecke.field();
    let h0 = xh.h0_bimodule()?;
    let mut regular = xh.alpha_regular_bimodule();
    let h = &xh.hecke;
    for s in 0..h.n().saturating_sub(1) {
        let cols: Vec<Vec<F::Elem>> = (0..h.dim())
            .map(|w| h.mul_s_left(s, &h.basis(w)).coeffs().to_vec())
            .collect();
        regular.gens[s] = Mat::from_columns(h.dim(), &cols, f.zero());
    }
    Ok(matches!(
        hecke::find_isomorphism(f, &h0, &regular, seed)?,
        IsoVerdict::Isomorphic(_)
    ))
}

/// One block `S(n)e_λ ⊗_{S(λ)} e_λ S(n)` as the quotient of the tensor
/// space on pairs `(x, y)` by the balancing relations.
#[derive(Debug, Clone)]
struct XsBlock<E> {
    xs: Vec<usize>,
    ys: Vec<usize>,
    xpos: HashMap<usize, usize>,
    ypos: HashMap<usize, usize>,
    ech: SparseEchelon<E>,
    free: Vec<usize>,
    free_pos: HashMap<usize, usize>,
}

impl<E: Clone> XsBlock<E> {
    fn tensor(&self, x: usize, y: usize) -> Option<usize> {
        Some(self.xpos.get(&x)? * self.ys.len() + self.ypos.get(&y)?)
    }

    fn pair(&self, t: usize) -> (usize, usize) {
        (self.xs[t / self.ys.len()], self.ys[t % self.ys.len()])
    }
}

pub struct XsComplex<F: GroundField> {
    pub complex: CochainComplex<F>,
    schur: SchurAlgebra<F>,
    blocks: Vec<Vec<XsBlock<F::Elem>>>,
}

pub fn build_xs<F: GroundField>(field: F, n: usize, exec: Exec) -> Result<XsComplex<F>> {
    build_xs_bounded(field, n, MAX_XS_N, exec)
}

pub fn build_xs_bounded<F: GroundField>(
    field: F,
    n: usize,
    bound: usize,
    exec: Exec,
) -> Result<XsComplex<F>> {
    if n == 0 || n > bound {
        return Err(Error::Resource(format!("X_S is built for 1 <= n <= {bound}, got {n}")));
    }
    let schur = SchurAlgebra::with_bound(field.clone(), n, bound.max(n))?;
    let labels = graded_compositions(n)?;
    let blocks: Vec<Vec<XsBlock<F::Elem>>> = labels
        .iter()
        .map(|ls| ls.iter().map(|l| xs_block(&schur, l, exec)).collect())
        .collect();
    let terms = labels
        .iter()
        .zip(&blocks)
        .map(|(ls, bs)| {
            let mut it = bs.iter();
            layout(ls, |_| it.next().expect("block").free.len())
        })
        .collect();
    let mut xs = XsComplex {
        complex: CochainComplex { field, terms, diffs: Vec::new() },
        schur,
        blocks,
    };
    xs.complex.diffs = (0..labels.len())
        .map(|i| xs.differential(i, exec))
        .collect::<Result<_>>()?;
    Ok(xs)
}

/// Generators of the embedded `S(λ)`: idempotents of `Λ(λ)` and `Φ^1`
/// both ways along covers inside `Λ(λ)`.
fn sub_generators<F: GroundField>(s: &SchurAlgebra<F>, lambda: &Composition) -> Vec<usize> {
    let set = combinat::refinements(lambda);
    let mut gens: Vec<usize> = set
        .iter()
        .map(|a| s.idempotent_index(s.comp_index(a).expect("composition")))
        .collect();
    for a in &set {
        let ai = s.comp_index(a).expect("composition");
        for b in combinat::covers_above(a) {
            if !set.contains(&b) {
                continue;
            }
            let bi = s.comp_index(&b).expect("composition");
            gens.push(s.block(ai, bi)[0]);
            gens.push(s.block(bi, ai)[0]);
        }
    }
    gens
}

fn balancing_relations<F: GroundField>(
    s: &SchurAlgebra<F>,
    blk: &XsBlock<F::Elem>,
    a: usize,
) -> Vec<SparseRow<F::Elem>> {
    let f = s.field();
    let ab = s.basis()[a];
    let xa: Vec<Option<SparseRow<F::Elem>>> = blk
        .xs
        .iter()
        .map(|&x| (s.basis()[x].col == ab.row).then(|| s.mul_basis(x, a)))
        .collect();
    let ay: Vec<Option<SparseRow<F::Elem>>> = blk
        .ys
        .iter()
        .map(|&y| (s.basis()[y].row == ab.col).then(|| s.mul_basis(a, y)))
        .collect();
    let mut rows = Vec::new();
    for (xi, &x) in blk.xs.iter().enumerate() {
        for (yi, &y) in blk.ys.iter().enumerate() {
            if xa[xi].is_none() && ay[yi].is_none() {
                continue;
            }
            let mut entries = Vec::new();
            if let Some(v) = &xa[xi] {
                for (k, c) in v {
                    entries.push((blk.tensor(*k, y).expect("x a lies in S e_λ"), c.clone()));
                }
            }
            if let Some(v) = &ay[yi] {
                for (k, c) in v {
                    entries.push((blk.tensor(x, *k).expect("a y lies in e_λ S"), f.neg(c)));
                }
            }
            let row = linalg::sparse_from_entries(f, entries);
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    rows
}

fn xs_block<F: GroundField>(
    s: &SchurAlgebra<F>,
    lambda: &Composition,
    exec: Exec,
) -> XsBlock<F::Elem> {
    let f = s.field();
    let set = s.lambda_set(lambda);
    let xs: Vec<usize> = (0..s.dim()).filter(|&i| set.contains(&s.basis()[i].col)).collect();
    let ys: Vec<usize> = (0..s.dim()).filter(|&i| set.contains(&s.basis()[i].row)).collect();
    let xpos = xs.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let ypos = ys.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut blk = XsBlock {
        xs,
        ys,
        xpos,
        ypos,
        ech: SparseEchelon::new(),
        free: Vec::new(),
        free_pos: HashMap::new(),
    };
    let gens = sub_generators(s, lambda);
    let batches = exec.map(&gens, |&a| balancing_relations(s, &blk, a));
    let mut ech = SparseEchelon::new();
    for row in batches.into_iter().flatten() {
        ech.insert(f, row);
    }
    let total = blk.xs.len() * blk.ys.len();
    blk.free = (0..total).filter(|&t| !ech.is_pivot(t)).collect();
    blk.free_pos = blk.free.iter().enumerate().map(|(k, &t)| (t, k)).collect();
    blk.ech = ech;
    blk
}

impl<F: GroundField> XsComplex<F> {
    pub fn schur(&self) -> &SchurAlgebra<F> {
        &self.schur
    }

    /// Class of a tensor vector in block `b`, as global coordinates of
    /// term `deg`.
    fn project(&self, deg: usize, b: usize, v: &SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let f = self.schur.field();
        let blk = &self.blocks[deg][b];
        let off = self.complex.terms[deg][b].offset;
        blk.ech
            .reduce(f, v)
            .into_iter()
            .map(|(t, c)| (off + blk.free_pos[&t], c))
            .collect()
    }

    fn differential(&self, i: usize, exec: Exec) -> Result<SparseMat<F::Elem>> {
        let f = self.schur.field();
        let terms = &self.complex.terms;
        let src_dim: usize = terms[i].iter().map(|b| b.dim).sum();
        let Some(target) = terms.get(i + 1) else {
            return Ok(SparseMat::zero(0, src_dim));
        };
        let tgt_dim = target.iter().map(|b| b.dim).sum();
        let mut cols = Vec::with_capacity(src_dim);
        for (bi, blk) in terms[i].iter().enumerate() {
            let covers = combinat::covers_above(&blk.label)
                .into_iter()
                .map(|nu| Ok((find_block(target, &nu), sign_elem(f, &blk.label, &nu)?)))
                .collect::<Result<Vec<_>>>()?;
            let data = &self.blocks[i][bi];
            cols.extend(exec.map(&data.free, |&t| {
                let (x, y) = data.pair(t);
                let mut entries = Vec::new();
                for (tb, sgn) in &covers {
                    let tt = self.blocks[i + 1][*tb].tensor(x, y).expect("Λ(λ) ⊂ Λ(ν)");
                    entries.extend(self.project(i + 1, *tb, &vec![(tt, sgn.clone())]));
                }
                linalg::sparse_from_entries(f, entries)
            }));
        }
        Ok(SparseMat { nrows: tgt_dim, cols })
    }

    /// Global indices of the basis of `e X_S e` in degree `deg`: classes
    /// of `x ⊗ y` with `x` in row `(1^n)` and `y` in column `(1^n)`.
    pub fn corner_indices(&self, deg: usize) -> Vec<usize> {
        let ones = self.schur.comp_index(&Composition::ones(self.schur.n())).expect("ones");
        let mut out = Vec::new();
        for (b, blk) in self.blocks[deg].iter().enumerate() {
            let off = self.complex.terms[deg][b].offset;
            for (k, &t) in blk.free.iter().enumerate() {
                let (x, y) = blk.pair(t);
                if self.schur.basis()[x].row == ones && self.schur.basis()[y].col == ones {
                    out.push(off + k);
                }
            }
        }
        out
    }
}

/// Outcome of the split monomorphism check, degree by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMonoReport {
    /// `(dim X_H^i, dim eX_S^i e)`.
    pub dims: Vec<(usize, usize)>,
    pub iota_chain_map: bool,
    pub iota_injective: bool,
    pub sigma_chain_map: bool,
    pub sigma_left_inverse: bool,
    /// Whether `x ⊗ y ↦ xe ⊗ ey` vanishes on the balancing relations.
    pub literal_section_well_defined: bool,
}

impl SplitMonoReport {
    pub fn ok(&self) -> bool {
        self.iota_chain_map && self.iota_injective && self.sigma_chain_map && self.sigma_left_inverse
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dims": self.dims,
            "iota_chain_map": self.iota_chain_map,
            "iota_injective": self.iota_injective,
            "sigma_chain_map": self.sigma_chain_map,
            "sigma_left_inverse": self.sigma_left_inverse,
            "literal_section_well_defined": self.literal_section_well_defined,
            "ok": self.ok(),
        })
    }
}

fn restrict_rows<E: Clone>(m: &SparseMat<E>, rows: &HashMap<usize, usize>, nrows: usize) -> Option<SparseMat<E>> {
    let cols = m
        .cols
        .iter()
        .map(|c| {
            c.iter()
                .map(|(r, v)| rows.get(r).map(|k| (*k, v.clone())))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    Some(SparseMat { nrows, cols })
}

/// Builds `ι: X_H → eX_S e`, a section `σ`, and checks both are chain maps
/// with `σ ∘ ι = id`. When `ι` is bijective in every degree, `σ = ι⁻¹`;
/// otherwise the check fails on injectivity or on `σ`.
pub fn split_mono_check<F: GroundField>(field: F, n: usize, exec: Exec) -> Result<SplitMonoReport> {
    let xh = build_xh(field.clone(), n, exec)?;
    let xs = build_xs(field, n, exec)?;
    split_mono_from(&xh, &xs)
}

pub fn split_mono_from<F: GroundField>(xh: &XhComplex<F>, xs: &XsComplex<F>) -> Result<SplitMonoReport> {
    let f = &xh.complex.field;
    let s = &xs.schur;
    let degs = xh.complex.terms.len();
    let corners: Vec<Vec<usize>> = (0..degs).map(|i| xs.corner_indices(i)).collect();
    let corner_pos: Vec<HashMap<usize, usize>> = corners
        .iter()
        .map(|c| c.iter().enumerate().map(|(k, &g)| (g, k)).collect())
        .collect();

    // ι in each degree.
    let mut iotas = Vec::new();
    for i in 0..degs {
        let mut cols = Vec::new();
        for (b, blk) in xh.complex.terms[i].iter().enumerate() {
            let data = &xs.blocks[i][b];
            for local in 0..blk.dim {
                let (d, w) = xh.basis_pair(i, b, local);
                let t = data
                    .tensor(s.psi_index(d), s.psi_index(w))
                    .ok_or_else(|| Error::Internal("ψ(T_d) outside S e_λ".into()))?;
                let img = xs.project(i, b, &vec![(t, f.one())]);
                let col = img
                    .into_iter()
                    .map(|(g, c)| corner_pos[i].get(&g).map(|k| (*k, c)))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::Internal("ι leaves the e-corner".into()))?;
                cols.push(col);
            }
        }
        iotas.push(SparseMat { nrows: corners[i].len(), cols });
    }

    // Differential of e X_S e.
    let corner_d: Vec<SparseMat<F::Elem>> = (0..degs)
        .map(|i| {
            let d = &xs.complex.diffs[i];
            let sub = SparseMat {
                nrows: d.nrows,
                cols: corners[i].iter().map(|&g| d.cols[g].clone()).collect(),
            };
            let (rows, nrows) = match corner_pos.get(i + 1) {
                Some(p) => (p.clone(), corners[i + 1].len()),
                None => (HashMap::new(), 0),
            };
            restrict_rows(&sub, &rows, nrows)
                .ok_or_else(|| Error::Internal("differential leaves the e-corner".into()))
        })
        .collect::<Result<_>>()?;

    let dims: Vec<(usize, usize)> = (0..degs)
        .map(|i| (iotas[i].ncols(), iotas[i].nrows))
        .collect();
    let iota_chain_map = (0..degs).all(|i| {
        corner_d[i].compose(f, &iotas[i]) == compose_next(f, &iotas, i, &xh.complex.diffs[i])
    });
    let iota_injective = iotas.iter().all(|m| m.rank(f) == m.ncols());

    let sigmas: Option<Vec<Mat<F::Elem>>> = iotas
        .iter()
        .map(|m| {
            if m.nrows != m.ncols() {
                return None;
            }
            linalg::inverse(f, &m.to_dense(f))
        })
        .collect();
    let (sigma_chain_map, sigma_left_inverse) = match &sigmas {
        None => (false, false),
        Some(sig) => {
            let chain = (0..degs).all(|i| {
                let dh = xh.complex.diffs[i].to_dense(f);
                let lhs = linalg::mat_mul(f, &dh, &sig[i]);
                let rhs = match sig.get(i + 1) {
                    Some(next) => linalg::mat_mul(f, next, &corner_d[i].to_dense(f)),
                    None => linalg::zeros(f, 0, sig[i].cols()),
                };
                lhs == rhs
            });
            let left = (0..degs).all(|i| {
                linalg::mat_mul(f, &sig[i], &iotas[i].to_dense(f)) == linalg::identity(f, sig[i].rows())
            });
            (chain, left)
        }
    };

    Ok(SplitMonoReport {
        dims,
        iota_chain_map,
        iota_injective,
        sigma_chain_map,
        sigma_left_inverse,
        literal_section_well_defined: literal_section_well_defined(xh, xs),
    })
}

fn compose_next<F: GroundField>(
    f: &F,
    iotas: &[SparseMat<F::Elem>],
    i: usize,
    d: &SparseMat<F::Elem>,
) -> SparseMat<F::Elem> {
    match iotas.get(i + 1) {
        Some(next) => next.compose(f, d),
        None => SparseMat::zero(0, d.ncols()),
    }
}

/// Applies `x ⊗ y ↦ ψ⁻¹(xe) ⊗ ψ⁻¹(ey)` to every balancing relation lying
/// in the `e`-corner and reports whether all images vanish.
fn literal_section_well_defined<F: GroundField>(xh: &XhComplex<F>, xs: &XsComplex<F>) -> bool {
    let s = &xs.schur;
    let f = s.field();
    let h = &xh.hecke;
    let ones = s.comp_index(&Composition::ones(s.n())).expect("ones");
    for (i, term) in xs.blocks.iter().enumerate() {
        for (b, blk) in term.iter().enumerate() {
            let label = &xs.complex.terms[i][b].label;
            for a in sub_generators(s, label) {
                for rel in balancing_relations(s, blk, a) {
                    let (x0, y0) = blk.pair(rel[0].0);
                    if s.basis()[x0].row != ones || s.basis()[y0].col != ones {
                        continue;
                    }
                    let mut image = Vec::new();
                    for (t, c) in &rel {
                        let (x, y) = blk.pair(*t);
                        let (bx, by) = (s.basis()[x], s.basis()[y]);
                        if bx.col != ones || by.row != ones {
                            continue;
                        }
                        for (r, v) in xh.element(i, b, &h.basis(bx.rep), &h.basis(by.rep)) {
                            image.push((r, f.mul(c, &v)));
                        }
                    }
                    if !linalg::sparse_from_entries(f, image).is_empty() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Which checks a complex report runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub d2: bool,
    pub cohomology: bool,
    pub split_mono: bool,
    pub h0: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Checks { d2: true, cohomology: true, split_mono: false, h0: false }
    }
}

impl FromStr for Checks {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Checks { d2: false, cohomology: false, split_mono: false, h0: false };
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            match item {
                "d2" => c.d2 = true,
                "cohomology" => c.cohomology = true,
                "splitmono" => c.split_mono = true,
                "h0" => c.h0 = true,
                _ => return Err(Error::Input(format!("unknown check {item:?}"))),
            }
        }
        Ok(c)
    }
}

/// The report `{complex, n, field, term_dims, d2_zero, cohomology,
/// split_mono}`, with extra diagnostics for the checks that ran.
pub fn complex_report(
    which: Which,
    n: usize,
    spec: FieldSpec,
    checks: Checks,
    seed: u64,
    exec: Exec,
) -> Result<Value> {
    with_field!(spec.resolve()?, |f| report_in(which, n, f, spec, checks, seed, exec))
}

fn report_in<F: GroundField>(
    which: Which,
    n: usize,
    f: F,
    spec: FieldSpec,
    checks: Checks,
    seed: u64,
    exec: Exec,
) -> Result<Value> {
    let xh;
    let xs;
    let complex = match which {
        Which::XH => {
            xh = Some(build_xh(f.clone(), n, exec)?);
            xs = None;
            &xh.as_ref().expect("built").complex
        }
        Which::XS => {
            xs = Some(build_xs(f.clone(), n, exec)?);
            xh = None;
            &xs.as_ref().expect("built").complex
        }
    };
    let mut out = json!({
        "complex": which.to_string(),
        "n": n,
        "field": spec,
        "term_dims": complex.term_dims(),
        "d2_zero": Value::Null,
        "cohomology": Value::Null,
        "split_mono": Value::Null,
    });
    if checks.d2 {
        out["d2_zero"] = json!(complex.d2_zero(exec));
        out["respects_covers"] = json!(complex.respects_covers());
    }
    if checks.cohomology {
        let (ranks, hints) = exec.join(|| complex.ranks(exec), || complex.rank_hints(exec));
        out["cohomology"] = json!(cohomology_from(&complex.term_dims(), &ranks));
        out["ranks"] = json!(ranks);
        out["rank_hints"] = json!(hints);
        out["euler_characteristic"] = json!(complex.euler_characteristic());
    }
    if checks.split_mono {
        let report = match (&xh, &xs) {
            (Some(h), _) => split_mono_from(h, &build_xs(f.clone(), n, exec)?)?,
            (_, Some(s)) => split_mono_from(&build_xh(f.clone(), n, exec)?, s)?,
            _ => unreachable!(),
        };
        out["split_mono"] = json!(report.ok());
        out["split_mono_detail"] = report.to_json();
    }
    if checks.h0 {
        let verdict = match &xh {
            Some(h) => h0_bimodule_identify(h, seed)?,
            None => h0_bimodule_identify(&build_xh(f.clone(), n, exec)?, seed)?,
        };
        out["h0_alpha_regular"] = json!(verdict);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q() -> Rationals {
        Rationals::new(4).unwrap()
    }

    #[test]
    fn xh_term_dims() {
        let x2 = build_xh(q(), 2, Exec::Sequential).unwrap();
        assert_eq!(x2.complex.term_dims(), vec![4, 2]);
        let x3 = build_xh(q(), 3, Exec::Parallel).unwrap();
        assert_eq!(x3.complex.term_dims(), vec![36, 36, 6]);
    }

    #[test]
    fn xh_cohomology_small() {
        for n in 1..=3 {
            let x = build_xh(q(), n, Exec::Parallel).unwrap();
            assert!(x.complex.d2_zero(Exec::Parallel));
            assert!(x.complex.respects_covers());
            let mut expect = vec![0; n];
            expect[0] = combinat::factorial(n) as usize;
            assert_eq!(x.complex.cohomology(Exec::Parallel), expect, "n = {n}");
            assert_eq!(x.complex.euler_characteristic(), xh_euler_formula(n).unwrap());
        }
        let fp = PrimeField::new(3, 1).unwrap();
        let x = build_xh(fp, 3, Exec::Parallel).unwrap();
        assert_eq!(x.complex.cohomology(Exec::Sequential), vec![6, 0, 0]);
    }

    #[test]
    fn rank_hints_agree_generically() {
        let x = build_xh(q(), 3, Exec::Parallel).unwrap();
        let hints: Vec<usize> = x.complex.rank_hints(Exec::Parallel).into_iter().map(Option::unwrap).collect();
        assert_eq!(hints, x.complex.ranks(Exec::Parallel));
    }

    #[test]
    fn xs_term_dims() {
        let x1 = build_xs(q(), 1, Exec::Sequential).unwrap();
        assert_eq!(x1.complex.term_dims(), vec![1]);
        let x2 = build_xs(q(), 2, Exec::Sequential).unwrap();
        assert_eq!(x2.complex.term_dims(), vec![9, 5]);
        assert!(x2.complex.d2_zero(Exec::Sequential));
    }

    #[test]
    fn xs_d2_n3() {
        let x = build_xs(PrimeField::new(3, 1).unwrap(), 3, Exec::Parallel).unwrap();
        assert!(x.complex.d2_zero(Exec::Parallel));
        assert!(x.complex.respects_covers());
    }

    #[test]
    fn sub_generators_span_parabolic() {
        let s = SchurAlgebra::new(q(), 3).unwrap();
        let f = s.field().clone();
        for lam in combinat::enumerate_compositions(3, None).unwrap() {
            let gens: Vec<SparseRow<_>> = sub_generators(&s, &lam)
                .into_iter()
                .map(|i| vec![(i, f.one())])
                .collect();
            let mut span = linalg::Subspace::new(s.dim());
            let unit = s.idempotent_e(&lam).unwrap();
            span.insert(&f, &s.to_dense(&unit));
            let mut queue = vec![unit];
            while let Some(x) = queue.pop() {
                for g in &gens {
                    let y = s.multiply_sparse(g, &x);
                    if span.insert(&f, &s.to_dense(&y)) {
                        queue.push(y);
                    }
                }
            }
            assert_eq!(span.dim(), s.parabolic_basis(&lam).len(), "{lam}");
            for i in s.parabolic_basis(&lam) {
                let mut v = vec![f.zero(); s.dim()];
                v[i] = f.one();
                assert!(span.contains(&f, &v));
            }
        }
    }

    #[test]
    fn split_mono_n2() {
        let r = split_mono_check(q(), 2, Exec::Sequential).unwrap();
        assert_eq!(r.dims, vec![(4, 4), (2, 2)]);
        assert!(r.ok(), "{r:?}");
        assert!(!r.literal_section_well_defined);
    }

    #[test]
    fn split_mono_n1_n3() {
        assert!(split_mono_check(q(), 1, Exec::Sequential).unwrap().ok());
        let r = split_mono_check(PrimeField::new(2, 1).unwrap(), 3, Exec::Parallel).unwrap();
        assert!(r.ok(), "{r:?}");
    }

    #[test]
    fn h0_is_alpha_twisted() {
        for n in 1..=3 {
            let x = build_xh(q(), n, Exec::Parallel).unwrap();
            assert!(h0_bimodule_identify(&x, 1).unwrap(), "n = {n}");
        }
        let x = build_xh(PrimeField::new(3, 1).unwrap(), 3, Exec::Parallel).unwrap();
        assert!(h0_bimodule_identify(&x, 1).unwrap());
    }

    #[test]
    fn h0_is_not_untwisted_generically() {
        let x = build_xh(q(), 2, Exec::Sequential).unwrap();
        assert!(!h0_is_regular(&x, 1).unwrap());
    }

    #[test]
    fn report_shape() {
        let v = complex_report(Which::XH, 2, FieldSpec::generic(), Checks::default(), 1, Exec::Sequential)
            .unwrap();
        assert_eq!(v["cohomology"], json!([2, 0]));
        assert_eq!(v["d2_zero"], json!(true));
        assert_eq!(v["term_dims"], json!([4, 2]));
    }

    #[test]
    fn checks_parse() {
        let c: Checks = "d2,h0".parse().unwrap();
        assert!(c.d2 && c.h0 && !c.cohomology && !c.split_mono);
        assert!("d3".parse::<Checks>().is_err());
    }
}
