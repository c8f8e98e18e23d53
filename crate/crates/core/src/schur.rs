//! The q-Schur algebra `S(n) = End_H(⊕_{λ ∈ Λ(n)} M^λ)` on its basis
//! `Φ^u_{λ,μ}`, with idempotents, corners, parabolic subalgebras, the
//! Schur functor and modules given by generator actions.
//!
//! `Φ^u_{λ,μ}: M^μ → M^λ` sends `x_μ` to the sum of `T_w` over the double
//! coset `S_μ u⁻¹ S_λ`, for `u ∈ D_{λ,μ}`. With left modules this is the
//! form an `H`-homomorphism into `H x_λ` must take. Products compose:
//! `ab = a ∘ b`.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::combinat::{self, Composition};
use crate::error::{Error, Result};
use crate::field::GroundField;
use crate::hecke::{HeckeAlgebra, HeckeElement, ModuleRep};
use crate::linalg::{self, Mat, SparseRow, Subspace};
use crate::par::Exec;

pub const MAX_SCHUR_N: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchurBasis {
    pub row: usize,
    pub col: usize,
    pub rep: usize,
}

pub struct SchurAlgebra<F: GroundField> {
    hecke: HeckeAlgebra<F>,
    comps: Vec<Composition>,
    comp_index: HashMap<Composition, usize>,
    coset_reps: Vec<Vec<usize>>,
    coset_pos: Vec<Vec<Option<usize>>>,
    basis: Vec<SchurBasis>,
    index: HashMap<SchurBasis, usize>,
    blocks: Vec<Vec<Vec<usize>>>,
    images: Vec<Vec<F::Elem>>,
    maps: Vec<OnceLock<Mat<F::Elem>>>,
}

impl<F: GroundField> SchurAlgebra<F> {
    pub fn new(field: F, n: usize) -> Result<Self> {
        Self::with_bound(field, n, MAX_SCHUR_N)
    }

    pub fn with_bound(field: F, n: usize, bound: usize) -> Result<Self> {
        if n > bound {
            return Err(Error::Resource(format!("q-Schur algebra bound is n <= {bound}, got {n}")));
        }
        let hecke = HeckeAlgebra::new(field, n)?;
        let g = hecke.group();
        let comps = combinat::enumerate_compositions(n, None)?;
        let comp_index = comps.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let coset_reps: Vec<Vec<usize>> = comps.iter().map(|c| g.left_coset_reps(c)).collect();
        let coset_pos = coset_reps
            .iter()
            .map(|reps| {
                let mut pos = vec![None; g.order()];
                for (k, &d) in reps.iter().enumerate() {
                    pos[d] = Some(k);
                }
                pos
            })
            .collect::<Vec<_>>();
        let mut basis = Vec::new();
        let mut blocks = vec![vec![Vec::new(); comps.len()]; comps.len()];
        for (r, lam) in comps.iter().enumerate() {
            for (c, mu) in comps.iter().enumerate() {
                for u in g.double_coset_reps(lam, mu) {
                    blocks[r][c].push(basis.len());
                    basis.push(SchurBasis { row: r, col: c, rep: u });
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        let f = hecke.field().clone();
        let images = basis
            .iter()
            .map(|b| {
                let coset = g.double_coset(&comps[b.col], g.inverse(b.rep), &comps[b.row]);
                let mut v = vec![f.zero(); coset_reps[b.row].len()];
                for w in coset {
                    if let Some(k) = coset_pos[b.row][w] {
                        v[k] = f.one();
                    }
                }
                v
            })
            .collect();
        let maps = (0..basis.len()).map(|_| OnceLock::new()).collect();
        Ok(SchurAlgebra {
            hecke,
            comps,
            comp_index,
            coset_reps,
            coset_pos,
            basis,
            index,
            blocks,
            images,
            maps,
        })
    }

    pub fn field(&self) -> &F {
        self.hecke.field()
    }

    pub fn hecke(&self) -> &HeckeAlgebra<F> {
        &self.hecke
    }

    pub fn n(&self) -> usize {
        self.hecke.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.comps
    }

    pub fn comp_index(&self, c: &Composition) -> Option<usize> {
        self.comp_index.get(c).copied()
    }

    pub fn basis(&self) -> &[SchurBasis] {
        &self.basis
    }

    pub fn block(&self, row: usize, col: usize) -> &[usize] {
        &self.blocks[row][col]
    }

    pub fn index_of(&self, b: SchurBasis) -> Option<usize> {
        self.index.get(&b).copied()
    }

    /// `Φ^1_{λ,λ}`.
    pub fn idempotent_index(&self, c: usize) -> usize {
        self.blocks[c][c][0]
    }

    /// Matrix of the homomorphism in the bases `T_d x_μ`, `T_d x_λ`.
    fn map_matrix(&self, i: usize) -> &Mat<F::Elem> {
        self.maps[i].get_or_init(|| {
            let b = self.basis[i];
            let h = &self.hecke;
            let img = self.image_element(i);
            let cols: Vec<Vec<F::Elem>> = self.coset_reps[b.col]
                .iter()
                .map(|&d| self.coords_in(b.row, &h.mul_basis_left(d, &img)))
                .collect();
            Mat::from_columns(self.coset_reps[b.row].len(), &cols, self.field().zero())
        })
    }

    /// `Φ(x_μ)` as an element of `H`.
    pub fn image_element(&self, i: usize) -> HeckeElement<F::Elem> {
        let b = self.basis[i];
        let g = self.hecke.group();
        let coset = g.double_coset(&self.comps[b.col], g.inverse(b.rep), &self.comps[b.row]);
        self.hecke.sum_of(&coset)
    }

    fn coords_in(&self, row: usize, a: &HeckeElement<F::Elem>) -> Vec<F::Elem> {
        self.coset_reps[row].iter().map(|&d| a.coeff(d).clone()).collect()
    }

    /// Coordinates of a homomorphism `M^κ → M^λ` from the image of `x_κ`,
    /// read at the distinguished representatives.
    fn read_hom(&self, row: usize, col: usize, image: &[F::Elem]) -> SparseRow<F::Elem> {
        let g = self.hecke.group();
        let f = self.field();
        self.blocks[row][col]
            .iter()
            .filter_map(|&t| {
                let k = self.coset_pos[row][g.inverse(self.basis[t].rep)].expect("distinguished");
                let c = &image[k];
                (!f.is_zero(c)).then(|| (t, c.clone()))
            })
            .collect()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> SparseRow<F::Elem> {
        let (a, b) = (self.basis[i], self.basis[j]);
        if a.col != b.row {
            return Vec::new();
        }
        let v = linalg::mat_vec(self.field(), self.map_matrix(i), &self.images[j]);
        self.read_hom(a.row, b.col, &v)
    }

    pub fn multiply_sparse(&self, a: &SparseRow<F::Elem>, b: &SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let f = self.field();
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                if self.basis[*i].col != self.basis[*j].row {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.mul_basis(*i, *j) {
                    let e = acc.entry(k).or_insert_with(|| f.zero());
                    *e = f.add_mul(e, &xy, &c);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
    }

    pub fn to_dense(&self, a: &SparseRow<F::Elem>) -> Vec<F::Elem> {
        let mut v = vec![self.field().zero(); self.dim()];
        for (k, c) in a {
            v[*k] = c.clone();
        }
        v
    }

    pub fn to_sparse(&self, v: &[F::Elem]) -> SparseRow<F::Elem> {
        let f = self.field();
        v.iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(k, c)| (k, c.clone()))
            .collect()
    }

    pub fn identity(&self) -> SparseRow<F::Elem> {
        (0..self.comps.len())
            .map(|c| (self.idempotent_index(c), self.field().one()))
            .collect()
    }

    /// `e_ν`: the sum of `Φ^1_{λ,λ}` over `λ ∈ Λ(ν)`.
    pub fn idempotent_e(&self, nu: &Composition) -> Result<SparseRow<F::Elem>> {
        if nu.n() != self.n() {
            return Err(Error::Input(format!("{nu} is not a composition of {}", self.n())));
        }
        let mut v: SparseRow<F::Elem> = combinat::refinements(nu)
            .iter()
            .map(|l| (self.idempotent_index(self.comp_index[l]), self.field().one()))
            .collect();
        v.sort_by_key(|x| x.0);
        Ok(v)
    }

    /// Indices of the compositions in `Λ(ν)`.
    pub fn lambda_set(&self, nu: &Composition) -> Vec<usize> {
        combinat::refinements(nu).iter().map(|l| self.comp_index[l]).collect()
    }

    /// Basis of `e_ν S(n) e_ν`.
    pub fn corner_basis(&self, nu: &Composition) -> Vec<usize> {
        let set = self.lambda_set(nu);
        let mut out: Vec<usize> = set
            .iter()
            .flat_map(|&r| set.iter().flat_map(move |&c| self.blocks[r][c].iter().copied()))
            .collect();
        out.sort_unstable();
        out
    }

    /// Basis of the image of `S(ν)` in `e_ν S(n) e_ν`: the `Φ^u_{α,β}` with
    /// `α, β ∈ Λ(ν)` and `u ∈ S_ν`.
    pub fn parabolic_basis(&self, nu: &Composition) -> Vec<usize> {
        let g = self.hecke.group();
        self.corner_basis(nu)
            .into_iter()
            .filter(|&i| g.in_parabolic(self.basis[i].rep, nu))
            .collect()
    }

    /// `ψ(T_u) = Φ^u_{(1^n),(1^n)}`, realising `H ≅ e S(n) e`.
    pub fn psi_index(&self, u: usize) -> usize {
        let ones = self.comp_index[&Composition::ones(self.n())];
        self.index[&SchurBasis { row: ones, col: ones, rep: u }]
    }

    /// Generating set: all `Φ^1_{λ,λ}` in composition order, then `Φ^1`
    /// between each cover pair, finer-to-coarser before coarser-to-finer.
    pub fn generators(&self) -> Vec<SparseRow<F::Elem>> {
        let one = self.field().one();
        let mut gens: Vec<SparseRow<F::Elem>> = (0..self.comps.len())
            .map(|c| vec![(self.idempotent_index(c), one.clone())])
            .collect();
        for (li, lam) in self.comps.iter().enumerate() {
            for nu in combinat::covers_above(lam) {
                let ni = self.comp_index[&nu];
                gens.push(vec![(self.blocks[li][ni][0], one.clone())]);
                gens.push(vec![(self.blocks[ni][li][0], one.clone())]);
            }
        }
        gens
    }

    /// Dimension of the subalgebra generated by [`Self::generators`].
    pub fn generated_dim(&self) -> usize {
        let f = self.field();
        let gens = self.generators();
        let mut span = Subspace::new(self.dim());
        let mut queue = vec![self.identity()];
        span.insert(f, &self.to_dense(&self.identity()));
        while let Some(x) = queue.pop() {
            for g in &gens {
                let y = self.multiply_sparse(g, &x);
                if span.insert(f, &self.to_dense(&y)) {
                    queue.push(y);
                }
            }
        }
        span.dim()
    }

    /// Left multiplication by `g` on the span of `subset`, which must be a
    /// left ideal's basis.
    pub fn left_action(&self, g: &SparseRow<F::Elem>, subset: &[usize]) -> Result<Mat<F::Elem>> {
        let f = self.field();
        let pos: HashMap<usize, usize> = subset.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let cols = subset
            .iter()
            .map(|&j| {
                let mut col = vec![f.zero(); subset.len()];
                for (k, c) in self.multiply_sparse(g, &vec![(j, f.one())]) {
                    let p = pos
                        .get(&k)
                        .ok_or_else(|| Error::Internal("subset is not a left ideal".into()))?;
                    col[*p] = c;
                }
                Ok(col)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_columns(subset.len(), &cols, f.zero()))
    }

    /// `S(n) Φ^1_{λ,λ}`, the basis elements with column `λ`.
    pub fn column_basis(&self, c: usize) -> Vec<usize> {
        (0..self.comps.len())
            .flat_map(|r| self.blocks[r][c].iter().copied())
            .collect()
    }

    pub fn column_module(&self, lambda: &Composition, exec: Exec) -> Result<ModuleRep<F::Elem>> {
        let c = self
            .comp_index(lambda)
            .ok_or_else(|| Error::Input(format!("{lambda} is not a composition of {}", self.n())))?;
        let subset = self.column_basis(c);
        self.module_on(&subset, exec)
    }

    pub fn regular_module(&self, exec: Exec) -> Result<ModuleRep<F::Elem>> {
        let all: Vec<usize> = (0..self.dim()).collect();
        self.module_on(&all, exec)
    }

    fn module_on(&self, subset: &[usize], exec: Exec) -> Result<ModuleRep<F::Elem>> {
        let gens = self.generators();
        let mats = exec
            .map(&gens, |g| self.left_action(g, subset))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleRep::new(subset.len(), mats))
    }

    /// Weight dimensions of a module on [`Self::generators`]: the rank of
    /// each `Φ^1_{ν,ν}`.
    pub fn weight_dims(&self, m: &ModuleRep<F::Elem>) -> BTreeMap<Composition, usize> {
        self.comps
            .iter()
            .enumerate()
            .map(|(c, nu)| (nu.clone(), linalg::rank(self.field(), &m.gens[c])))
            .collect()
    }

    /// Checks `e S(n) e ≅ H` on bases `Φ^u ↔ T_u`.
    pub fn schur_functor_check(&self) -> bool {
        let h = &self.hecke;
        let g = h.group();
        let f = self.field();
        (0..g.order()).all(|u| {
            (0..g.order()).all(|v| {
                let lhs = self.mul_basis(self.psi_index(u), self.psi_index(v));
                let t = h.mul_basis_right(&h.basis(u), v);
                let rhs: SparseRow<F::Elem> = {
                    let mut r: SparseRow<F::Elem> = t
                        .coeffs()
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !f.is_zero(c))
                        .map(|(w, c)| (self.psi_index(w), c.clone()))
                        .collect();
                    r.sort_by_key(|x| x.0);
                    r
                };
                lhs == rhs
            })
        })
    }

    /// Embeds `S(ν_1) ⊗ ... ⊗ S(ν_h)` into `e_ν S(n) e_ν` on basis tuples
    /// and checks the map is injective onto the parabolic basis and
    /// multiplicative on all basis pairs.
    pub fn parabolic_embedding(&self, nu: &Composition) -> Result<Vec<usize>> {
        let f = self.field().clone();
        let factors: Vec<SchurAlgebra<F>> = nu
            .parts()
            .iter()
            .map(|&k| SchurAlgebra::new(f.clone(), k))
            .collect::<Result<_>>()?;
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for a in &factors {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (0..a.dim()).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        let image: Vec<usize> = tuples
            .iter()
            .map(|t| self.embed_tuple(&factors, nu, t))
            .collect::<Result<_>>()?;
        let mut sorted = image.clone();
        sorted.sort_unstable();
        if sorted != self.parabolic_basis(nu) {
            return Err(Error::Internal(format!("S({nu}) does not embed onto its basis")));
        }
        let pos: HashMap<Vec<usize>, usize> = tuples.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        for (x, tx) in tuples.iter().enumerate() {
            for (y, ty) in tuples.iter().enumerate() {
                // Product of tuples, componentwise.
                let mut prod: BTreeMap<Vec<usize>, F::Elem> = BTreeMap::new();
                prod.insert(Vec::new(), f.one());
                for (k, a) in factors.iter().enumerate() {
                    let pk = a.mul_basis(tx[k], ty[k]);
                    let mut next = BTreeMap::new();
                    for (pre, c) in &prod {
                        for (i, d) in &pk {
                            let mut key = pre.clone();
                            key.push(*i);
                            next.insert(key, f.mul(c, d));
                        }
                    }
                    prod = next;
                }
                let mut expected: SparseRow<F::Elem> = prod
                    .into_iter()
                    .filter(|(_, c)| !f.is_zero(c))
                    .map(|(t, c)| (image[pos[&t]], c))
                    .collect();
                expected.sort_by_key(|e| e.0);
                if self.mul_basis(image[x], image[y]) != expected {
                    return Err(Error::Internal(format!("embedding of S({nu}) is not multiplicative")));
                }
            }
        }
        Ok(image)
    }

    fn embed_tuple(&self, factors: &[SchurAlgebra<F>], nu: &Composition, t: &[usize]) -> Result<usize> {
        let g = self.hecke.group();
        let mut row = Vec::new();
        let mut col = Vec::new();
        let mut perm: Vec<u8> = Vec::new();
        let mut offset = 0u8;
        for (k, a) in factors.iter().enumerate() {
            let b = a.basis[t[k]];
            row.extend_from_slice(a.comps[b.row].parts());
            col.extend_from_slice(a.comps[b.col].parts());
            perm.extend(a.hecke.group().one_line(b.rep).iter().map(|&v| v + offset));
            offset += nu.parts()[k] as u8;
        }
        let key = SchurBasis {
            row: self.comp_index[&Composition::new(row)?],
            col: self.comp_index[&Composition::new(col)?],
            rep: g.index_of(&perm).expect("a permutation"),
        };
        self.index_of(key)
            .ok_or_else(|| Error::Internal("embedded element is not a basis element".into()))
    }

    pub fn basis_json(&self) -> Value {
        let g = self.hecke.group();
        Value::Array(
            self.basis
                .iter()
                .map(|b| {
                    json!({
                        "row": self.comps[b.row],
                        "col": self.comps[b.col],
                        "rep": g.one_line(b.rep),
                    })
                })
                .collect(),
        )
    }

    /// Nonzero structure constants as `[i, j, [[k, c], ...]]`, for `n <= 3`.
    pub fn structure_constants_json(&self) -> Result<Value> {
        if self.n() > 3 {
            return Err(Error::Resource("structure constants are exported for n <= 3 only".into()));
        }
        let f = self.field();
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let p = self.mul_basis(i, j);
                if !p.is_empty() {
                    let terms: Vec<Value> = p.iter().map(|(k, c)| json!([k, f.format(c)])).collect();
                    out.push(json!([i, j, terms]));
                }
            }
        }
        Ok(Value::Array(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::Partition;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dimensions() {
        let dims: Vec<usize> = (1..=4)
            .map(|n| SchurAlgebra::new(PrimeField::new(3, 2).unwrap(), n).unwrap().dim())
            .collect();
        assert_eq!(&dims[..3], &[1, 5, 33]);
        let s4 = SchurAlgebra::new(PrimeField::new(3, 2).unwrap(), 4).unwrap();
        let expected: usize = s4
            .compositions()
            .iter()
            .flat_map(|l| s4.compositions().iter().map(move |m| (l, m)))
            .map(|(l, m)| s4.hecke().group().double_coset_reps(l, m).len())
            .sum();
        assert_eq!(dims[3], expected);
        assert!(SchurAlgebra::with_bound(PrimeField::new(3, 2).unwrap(), 4, 3).is_err());
    }

    #[test]
    fn idempotents_and_corners() {
        for n in 1..=4 {
            let s = SchurAlgebra::new(PrimeField::new(7, 2).unwrap(), n).unwrap();
            let f = s.field().clone();
            let k = s.compositions().len();
            for a in 0..k {
                for b in 0..k {
                    let p = s.mul_basis(s.idempotent_index(a), s.idempotent_index(b));
                    if a == b {
                        assert_eq!(p, vec![(s.idempotent_index(a), f.one())]);
                    } else {
                        assert!(p.is_empty());
                    }
                }
            }
            let id = s.idempotent_e(&Composition::full(n)).unwrap();
            assert_eq!(id, s.identity());
            for nu in s.compositions().to_vec() {
                let e = s.idempotent_e(&nu).unwrap();
                assert_eq!(s.multiply_sparse(&e, &e), e);
                for lam in combinat::refinements(&nu) {
                    let el = s.idempotent_e(&lam).unwrap();
                    assert_eq!(s.multiply_sparse(&e, &el), el);
                    assert_eq!(s.multiply_sparse(&el, &e), el);
                }
                let expected: usize = s
                    .lambda_set(&nu)
                    .iter()
                    .flat_map(|&a| s.lambda_set(&nu).into_iter().map(move |b| (a, b)))
                    .map(|(a, b)| s.block(a, b).len())
                    .sum();
                assert_eq!(s.corner_basis(&nu).len(), expected);
            }
        }
        let s2 = SchurAlgebra::new(PrimeField::new(3, 2).unwrap(), 2).unwrap();
        assert_eq!(s2.corner_basis(&c(&[1, 1])).len(), 2);
    }

    #[test]
    fn associativity_exhaustive_small() {
        for n in 1..=3 {
            let s = SchurAlgebra::new(Rationals::new(4).unwrap(), n).unwrap();
            let d = s.dim();
            for i in 0..d {
                for j in 0..d {
                    let ij = s.mul_basis(i, j);
                    for k in 0..d {
                        let lhs = s.multiply_sparse(&ij, &vec![(k, s.field().one())]);
                        let rhs = s.multiply_sparse(&vec![(i, s.field().one())], &s.mul_basis(j, k));
                        assert_eq!(lhs, rhs, "({i},{j},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_random_larger() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 4..=5 {
            let s = SchurAlgebra::new(PrimeField::new(7, 3).unwrap(), n).unwrap();
            let d = s.dim();
            for _ in 0..60 {
                let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
                let one = s.field().one();
                let lhs = s.multiply_sparse(&s.mul_basis(i, j), &vec![(k, one)]);
                let rhs = s.multiply_sparse(&vec![(i, one)], &s.mul_basis(j, k));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn schur_functor_corner() {
        for n in 1..=4 {
            let s = SchurAlgebra::new(PrimeField::new(3, 2).unwrap(), n).unwrap();
            assert!(s.schur_functor_check(), "n = {n}");
        }
        let s = SchurAlgebra::new(Rationals::new(4).unwrap(), 3).unwrap();
        assert!(s.schur_functor_check());
        assert_eq!(s.corner_basis(&Composition::ones(3)).len(), 6);
    }

    #[test]
    fn generators_generate() {
        for n in 1..=4 {
            for f in [PrimeField::new(3, 2).unwrap(), PrimeField::new(2, 1).unwrap()] {
                let s = SchurAlgebra::new(f, n).unwrap();
                assert_eq!(s.generated_dim(), s.dim(), "n = {n}");
            }
        }
        let s = SchurAlgebra::new(Rationals::new(4).unwrap(), 3).unwrap();
        assert_eq!(s.generated_dim(), 33);
    }

    #[test]
    fn parabolic_embeddings() {
        for n in 1..=4 {
            let s = SchurAlgebra::new(PrimeField::new(5, 2).unwrap(), n).unwrap();
            for nu in s.compositions().to_vec() {
                let img = s.parabolic_embedding(&nu).unwrap();
                let expected: usize = nu
                    .parts()
                    .iter()
                    .map(|&k| SchurAlgebra::new(PrimeField::new(5, 2).unwrap(), k).unwrap().dim())
                    .product();
                assert_eq!(img.len(), expected);
            }
        }
        let s = SchurAlgebra::new(PrimeField::new(5, 2).unwrap(), 2).unwrap();
        assert_eq!(s.parabolic_basis(&c(&[1, 1])).len(), 1);
        assert_eq!(s.parabolic_basis(&c(&[2])).len(), 5);
    }

    #[test]
    fn weight_dims_of_modules() {
        let s = SchurAlgebra::new(PrimeField::new(3, 2).unwrap(), 3).unwrap();
        let reg = s.regular_module(Exec::Sequential).unwrap();
        let w = s.weight_dims(&reg);
        assert_eq!(w.values().sum::<usize>(), s.dim());
        for (nu, d) in &w {
            let ci = s.comp_index(nu).unwrap();
            let col: usize = (0..s.compositions().len()).map(|r| s.block(r, ci).len()).sum();
            assert_eq!(*d, col);
        }
        // Semisimple: the column module at λ has weight dims Σ_μ K_{μλ} K_{μν}.
        let s = SchurAlgebra::new(PrimeField::new(7, 1).unwrap(), 3).unwrap();
        for lam in combinat::partitions(3) {
            let m = s.column_module(&lam.composition(), Exec::Sequential).unwrap();
            let w = s.weight_dims(&m);
            for (nu, d) in &w {
                let expected: u64 = combinat::partitions(3)
                    .iter()
                    .map(|mu: &Partition| {
                        combinat::kostka(mu, &lam.composition()) * combinat::kostka(mu, nu)
                    })
                    .sum();
                assert_eq!(*d as u64, expected, "{lam} at {nu}");
            }
        }
    }

    #[test]
    fn json_exports() {
        let s = SchurAlgebra::new(PrimeField::new(3, 2).unwrap(), 2).unwrap();
        assert_eq!(s.basis_json().as_array().unwrap().len(), 5);
        assert!(s.structure_constants_json().is_ok());
        let s4 = SchurAlgebra::new(PrimeField::new(3, 2).unwrap(), 4).unwrap();
        assert!(s4.structure_constants_json().is_err());
    }
}
