//! Finite-dimensional modules given by generator matrices: permutation,
//! Specht and simple modules of the Hecke algebra, the α-twist and
//! explicit isomorphism testing.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{HeckeAlgebra, HeckeElement};
use crate::combinat::{self, Composition, Partition};
use crate::error::{Error, Result};
use crate::field::GroundField;
use crate::linalg::{self, Mat, Subspace};

/// A module over an algebra given by one matrix per generator, acting on
/// column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRep<E> {
    pub dim: usize,
    pub gens: Vec<Mat<E>>,
    pub gram: Option<Mat<E>>,
    pub label: Option<Partition>,
}

impl<E: Clone> ModuleRep<E> {
    pub fn new(dim: usize, gens: Vec<Mat<E>>) -> Self {
        ModuleRep {
            dim,
            gens,
            gram: None,
            label: None,
        }
    }

    pub fn to_json<F: GroundField<Elem = E>>(&self, f: &F) -> Value {
        let gens: Vec<Vec<String>> = self
            .gens
            .iter()
            .map(|m| m.entries().iter().map(|x| f.format(x)).collect())
            .collect();
        json!({
            "dim": self.dim,
            "generators": gens,
            "label": self.label,
        })
    }
}

/// Checks the quadratic, braid and commutation relations for generators
/// `T_{s_1}, ..., T_{s_{n-1}}`.
pub fn satisfies_hecke_relations<F: GroundField>(f: &F, rep: &ModuleRep<F::Elem>) -> bool {
    let q = f.q();
    let id = linalg::identity(f, rep.dim);
    let qm1 = f.sub(&q, &f.one());
    let k = rep.gens.len();
    for (i, a) in rep.gens.iter().enumerate() {
        let sq = linalg::mat_mul(f, a, a);
        let rhs = linalg::mat_add(f, &linalg::mat_scale(f, &q, &id), &linalg::mat_scale(f, &qm1, a));
        if sq != rhs {
            return false;
        }
        for j in i + 1..k {
            let b = &rep.gens[j];
            if j == i + 1 {
                let aba = linalg::mat_mul(f, &linalg::mat_mul(f, a, b), a);
                let bab = linalg::mat_mul(f, &linalg::mat_mul(f, b, a), b);
                if aba != bab {
                    return false;
                }
            } else if linalg::mat_mul(f, a, b) != linalg::mat_mul(f, b, a) {
                return false;
            }
        }
    }
    true
}

/// Matrix of `T_w` on a Hecke module, along a reduced word.
pub fn act_basis<F: GroundField>(
    h: &HeckeAlgebra<F>,
    rep: &ModuleRep<F::Elem>,
    w: usize,
) -> Mat<F::Elem> {
    let f = h.field();
    h.group()
        .reduced_word(w)
        .iter()
        .fold(linalg::identity(f, rep.dim), |acc, &i| linalg::mat_mul(f, &acc, &rep.gens[i]))
}

pub fn act_element<F: GroundField>(
    h: &HeckeAlgebra<F>,
    rep: &ModuleRep<F::Elem>,
    a: &HeckeElement<F::Elem>,
) -> Mat<F::Elem> {
    let f = h.field();
    let mut out = linalg::zeros(f, rep.dim, rep.dim);
    for (w, c) in a.coeffs().iter().enumerate() {
        if !f.is_zero(c) {
            out = linalg::mat_add(f, &out, &linalg::mat_scale(f, c, &act_basis(h, rep, w)));
        }
    }
    out
}

/// `M^λ = H x_λ` with its basis `{T_d x_λ : d ∈ D_λ}`.
pub struct PermutationModule<F: GroundField> {
    pub lambda: Composition,
    pub reps: Vec<usize>,
    pub rep: ModuleRep<F::Elem>,
}

impl<F: GroundField> PermutationModule<F> {
    /// Coordinates of an element of `H x_λ`: the coefficient of `T_d x_λ`
    /// is the coefficient of `T_d`.
    pub fn coordinates(&self, a: &HeckeElement<F::Elem>) -> Vec<F::Elem> {
        self.reps.iter().map(|&d| a.coeff(d).clone()).collect()
    }
}

pub fn permutation_module<F: GroundField>(
    h: &HeckeAlgebra<F>,
    lambda: &Composition,
) -> Result<PermutationModule<F>> {
    if lambda.n() != h.n() {
        return Err(Error::Input(format!("{lambda} is not a composition of {}", h.n())));
    }
    let f = h.field();
    let reps = h.group().left_coset_reps(lambda);
    let x = h.x_lambda(lambda);
    let basis: Vec<HeckeElement<F::Elem>> =
        reps.iter().map(|&d| h.mul_basis_left(d, &x)).collect();
    let gens = (0..h.n() - 1)
        .map(|i| {
            let cols: Vec<Vec<F::Elem>> = basis
                .iter()
                .map(|b| {
                    let img = h.mul_s_left(i, b);
                    reps.iter().map(|&d| img.coeff(d).clone()).collect()
                })
                .collect();
            Mat::from_columns(reps.len(), &cols, f.zero())
        })
        .collect();
    let mut rep = ModuleRep::new(reps.len(), gens);
    rep.gram = Some(Mat::from_fn(reps.len(), reps.len(), |a, b| {
        if a == b {
            f.pow(&f.q(), h.group().length(reps[a]) as i64)
        } else {
            f.zero()
        }
    }));
    Ok(PermutationModule {
        lambda: lambda.clone(),
        reps,
        rep,
    })
}

/// Coordinates of each vector in `vectors` with respect to the linearly
/// independent columns `basis`; `None` when some vector is outside the span.
pub fn coordinates_in<F: GroundField>(
    f: &F,
    basis: &[Vec<F::Elem>],
    vectors: &[Vec<F::Elem>],
) -> Option<Vec<Vec<F::Elem>>> {
    let k = basis.len();
    let dim = basis.first().map_or(0, Vec::len);
    let mut aug = Mat::from_fn(dim, k + vectors.len(), |i, j| {
        if j < k {
            basis[j][i].clone()
        } else {
            vectors[j - k][i].clone()
        }
    });
    let pivots = linalg::rref(f, &mut aug);
    if pivots.len() > k && pivots[k] >= k {
        return None;
    }
    Some(
        (0..vectors.len())
            .map(|v| (0..k).map(|r| aug.get(r, k + v).clone()).collect())
            .collect(),
    )
}

/// Restriction of a module to an invariant subspace spanned by the
/// independent vectors `basis`.
pub fn restrict_to<F: GroundField>(
    f: &F,
    rep: &ModuleRep<F::Elem>,
    basis: &[Vec<F::Elem>],
) -> Result<ModuleRep<F::Elem>> {
    let gens = rep
        .gens
        .iter()
        .map(|a| {
            let imgs: Vec<Vec<F::Elem>> = basis.iter().map(|b| linalg::mat_vec(f, a, b)).collect();
            let coords = coordinates_in(f, basis, &imgs)
                .ok_or_else(|| Error::Internal("subspace is not invariant".into()))?;
            Ok(Mat::from_columns(basis.len(), &coords, f.zero()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ModuleRep::new(basis.len(), gens))
}

/// Quotient of a module by an invariant subspace, on the complement
/// spanned by unit vectors at the non-pivot columns.
pub fn quotient_by<F: GroundField>(
    f: &F,
    rep: &ModuleRep<F::Elem>,
    sub: &Subspace<F::Elem>,
) -> ModuleRep<F::Elem> {
    let free = sub.non_pivots();
    let gens = rep
        .gens
        .iter()
        .map(|a| {
            Mat::from_fn(free.len(), free.len(), |r, c| {
                let col = a.column(free[c]);
                let red = sub.reduce(f, &col);
                red[free[r]].clone()
            })
        })
        .collect();
    ModuleRep::new(free.len(), gens)
}

/// The distinguished `(λ', λ)` double coset representative whose double
/// coset has trivial stabiliser, i.e. size `|S_λ'| |S_λ|`.
fn specht_twist<F: GroundField>(h: &HeckeAlgebra<F>, lambda: &Partition) -> usize {
    let g = h.group();
    let conj = lambda.conjugate().composition();
    let lam = lambda.composition();
    let full = (conj.factorial_product() * lam.factorial_product()) as usize;
    g.double_coset_reps(&conj, &lam)
        .into_iter()
        .find(|&d| g.double_coset(&conj, d, &lam).len() == full)
        .expect("a trivially intersecting double coset exists")
}

/// Specht module `S^λ = H y_{λ'} T_d x_λ ⊂ M^λ`, on a basis of vectors
/// `T_w z` chosen greedily by length, with the Gram matrix of the form
/// `<T_d x_λ, T_e x_λ> = δ_{de} q^{l(d)}` restricted from `M^λ`.
pub struct SpechtModule<F: GroundField> {
    pub lambda: Partition,
    pub perm: PermutationModule<F>,
    /// Basis of `S^λ` in `M^λ` coordinates.
    pub basis: Vec<Vec<F::Elem>>,
    /// Elements `w` with basis vectors `T_w z`.
    pub words: Vec<usize>,
    pub rep: ModuleRep<F::Elem>,
}

pub fn specht_module<F: GroundField>(h: &HeckeAlgebra<F>, lambda: &Partition) -> Result<SpechtModule<F>> {
    if lambda.n() != h.n() {
        return Err(Error::Input(format!("{lambda} is not a partition of {}", h.n())));
    }
    let f = h.field();
    let g = h.group();
    let lam = lambda.composition();
    let perm = permutation_module(h, &lam)?;
    let d = specht_twist(h, lambda);
    let z = h.multiply(
        &h.multiply(&h.y_lambda(&lambda.conjugate().composition()), &h.basis(d)),
        &h.x_lambda(&lam),
    );
    let z_coords = perm.coordinates(&z);

    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&w| (g.length(w), w));
    let mut orbit: Vec<Option<Vec<F::Elem>>> = vec![None; g.order()];
    orbit[g.identity()] = Some(z_coords);
    let mut span = Subspace::new(perm.rep.dim);
    let mut basis = Vec::new();
    let mut words = Vec::new();
    for &w in &order {
        if orbit[w].is_none() {
            let i = g.reduced_word(w)[0];
            let prev = g.mul_s_left(i, w);
            let v = linalg::mat_vec(f, &perm.rep.gens[i], orbit[prev].as_ref().expect("shorter"));
            orbit[w] = Some(v);
        }
        let v = orbit[w].as_ref().expect("filled");
        if span.insert(f, v) {
            basis.push(v.clone());
            words.push(w);
        }
    }
    let expected = combinat::syt_count(lambda) as usize;
    if basis.len() != expected {
        return Err(Error::Internal(format!(
            "Specht module {lambda} has dimension {}, expected {expected}",
            basis.len()
        )));
    }
    let mut rep = restrict_to(f, &perm.rep, &basis)?;
    let ambient = perm.rep.gram.as_ref().expect("permutation module has a form");
    rep.gram = Some(Mat::from_fn(basis.len(), basis.len(), |a, b| {
        let gb = linalg::mat_vec(f, ambient, &basis[b]);
        basis[a].iter().zip(&gb).fold(f.zero(), |acc, (x, y)| f.add_mul(&acc, x, y))
    }));
    rep.label = Some(lambda.clone());
    Ok(SpechtModule {
        lambda: lambda.clone(),
        perm,
        basis,
        words,
        rep,
    })
}

/// Quantum characteristic of the field's `q` (`None` when no quantum
/// integer up to `n` vanishes).
pub fn field_e<F: GroundField>(f: &F, n: usize) -> Option<usize> {
    f.quantum_characteristic(n.max(2))
}

/// `L^λ = S^λ / rad`, the head of the Specht module for `e`-regular `λ`.
pub fn simple_module<F: GroundField>(h: &HeckeAlgebra<F>, lambda: &Partition) -> Result<ModuleRep<F::Elem>> {
    let f = h.field();
    if let Some(e) = field_e(f, h.n()) {
        if !combinat::is_e_regular(lambda, e)? {
            return Err(Error::Input(format!("{lambda} is not {e}-regular")));
        }
    }
    let s = specht_module(h, lambda)?;
    let gram = s.rep.gram.clone().expect("Specht gram");
    let radical = linalg::nullspace(f, &gram);
    let mut sub = Subspace::new(s.rep.dim);
    for v in &radical {
        sub.insert(f, v);
    }
    let mut q = quotient_by(f, &s.rep, &sub);
    if q.dim == 0 {
        return Err(Error::Internal(format!("{lambda} has a zero head")));
    }
    let free = sub.non_pivots();
    q.gram = Some(Mat::from_fn(free.len(), free.len(), |a, b| gram.get(free[a], free[b]).clone()));
    q.label = Some(lambda.clone());
    Ok(q)
}

/// The module with action `h·v = α(h) v`.
pub fn alpha_twist<F: GroundField>(f: &F, rep: &ModuleRep<F::Elem>) -> ModuleRep<F::Elem> {
    let qm1 = f.sub(&f.q(), &f.one());
    let id = linalg::identity(f, rep.dim);
    let gens = rep
        .gens
        .iter()
        .map(|a| linalg::mat_sub(f, &linalg::mat_scale(f, &qm1, &id), a))
        .collect();
    ModuleRep::new(rep.dim, gens)
}

/// Solution space of `X A_i = B_i X` for all `i`, as `dim_b × dim_a`
/// matrices.
pub fn intertwiners<F: GroundField>(
    f: &F,
    pairs: &[(&Mat<F::Elem>, &Mat<F::Elem>)],
    dim_a: usize,
    dim_b: usize,
) -> Vec<Mat<F::Elem>> {
    let unknowns = dim_a * dim_b;
    let var = |r: usize, c: usize| r * dim_a + c;
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    let mut sub = Subspace::new(unknowns);
    for (a, b) in pairs {
        for r in 0..dim_b {
            for c in 0..dim_a {
                let mut eq = vec![f.zero(); unknowns];
                for k in 0..dim_a {
                    let v = a.get(k, c);
                    if !f.is_zero(v) {
                        eq[var(r, k)] = f.add(&eq[var(r, k)], v);
                    }
                }
                for k in 0..dim_b {
                    let v = b.get(r, k);
                    if !f.is_zero(v) {
                        eq[var(k, c)] = f.sub(&eq[var(k, c)], v);
                    }
                }
                if sub.insert(f, &eq) {
                    rows.push(eq);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        linalg::zeros(f, 0, unknowns)
    } else {
        Mat::from_rows(rows, unknowns)
    };
    linalg::nullspace(f, &system)
        .into_iter()
        .map(|v| Mat::from_rows(v.chunks(dim_a).map(<[_]>::to_vec).collect(), dim_a))
        .collect()
}

/// Result of an explicit isomorphism search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoVerdict<E> {
    Isomorphic(Mat<E>),
    NotIsomorphic,
}

/// Decides whether two modules over the same generators are isomorphic by
/// solving for intertwiners and looking for an invertible one. Gives up
/// with a resource error when intertwiners exist but none of the sampled
/// ones is invertible.
pub fn find_isomorphism<F: GroundField>(
    f: &F,
    a: &ModuleRep<F::Elem>,
    b: &ModuleRep<F::Elem>,
    seed: u64,
) -> Result<IsoVerdict<F::Elem>> {
    if a.dim != b.dim || a.gens.len() != b.gens.len() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    for (x, y) in a.gens.iter().zip(&b.gens) {
        if linalg::trace(f, x) != linalg::trace(f, y) {
            return Ok(IsoVerdict::NotIsomorphic);
        }
    }
    let pairs: Vec<_> = a.gens.iter().zip(&b.gens).collect();
    let sols = intertwiners(f, &pairs, a.dim, b.dim);
    invertible_combination(f, &sols, a.dim, seed)
}

pub fn invertible_combination<F: GroundField>(
    f: &F,
    sols: &[Mat<F::Elem>],
    dim: usize,
    seed: u64,
) -> Result<IsoVerdict<F::Elem>> {
    if dim == 0 {
        return Ok(IsoVerdict::Isomorphic(linalg::zeros(f, 0, 0)));
    }
    if sols.is_empty() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    for s in sols {
        if linalg::rank(f, s) == dim {
            return Ok(IsoVerdict::Isomorphic(s.clone()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let mut x = linalg::zeros(f, dim, dim);
        for s in sols {
            let c = f.random(&mut rng);
            x = linalg::mat_add(f, &x, &linalg::mat_scale(f, &c, s));
        }
        if linalg::rank(f, &x) == dim {
            return Ok(IsoVerdict::Isomorphic(x));
        }
    }
    Err(Error::Resource(
        "intertwiners exist but no invertible one was found".into(),
    ))
}

/// Dimension of the endomorphism algebra of a module.
pub fn endomorphism_dim<F: GroundField>(f: &F, rep: &ModuleRep<F::Elem>) -> usize {
    let pairs: Vec<_> = rep.gens.iter().zip(&rep.gens).collect();
    intertwiners(f, &pairs, rep.dim, rep.dim).len()
}

/// Twists `L^λ` by `α` and identifies the simple module it is isomorphic
/// to.
pub fn alpha_twist_and_identify<F: GroundField>(
    h: &HeckeAlgebra<F>,
    lambda: &Partition,
    seed: u64,
) -> Result<Partition> {
    let f = h.field();
    let twisted = alpha_twist(f, &simple_module(h, lambda)?);
    let candidates: Vec<Partition> = match field_e(f, h.n()) {
        Some(e) => combinat::e_regular_partitions(h.n(), e)?,
        None => combinat::partitions(h.n()),
    };
    for mu in candidates {
        let l = simple_module(h, &mu)?;
        if l.dim != twisted.dim {
            continue;
        }
        if let IsoVerdict::Isomorphic(_) = find_isomorphism(f, &twisted, &l, seed)? {
            return Ok(mu);
        }
    }
    Err(Error::Internal(format!("α-twist of L^{lambda} matches no simple module")))
}

/// `[Res_{H_μ} S^λ]` as outer tensor products of Specht classes with
/// Littlewood–Richardson multiplicities.
pub fn branching_class(lambda: &Partition, mu: &Composition) -> Result<Vec<(Vec<Partition>, u64)>> {
    if lambda.n() != mu.n() {
        return Err(Error::Input(format!("{lambda} and {mu} have different sizes")));
    }
    let mut out = Vec::new();
    for t in combinat::partition_tuples(mu.parts()) {
        let m = combinat::littlewood_richardson(lambda, &t)?;
        if m > 0 {
            out.push((t, m));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions;
    use crate::field::{PrimeField, Rationals};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn permutation_module_examples() {
        let h = HeckeAlgebra::new(Rationals::new(4).unwrap(), 3).unwrap();
        let f = h.field().clone();
        let m = permutation_module(&h, &c(&[3])).unwrap();
        assert_eq!(m.rep.dim, 1);
        for g in &m.rep.gens {
            assert_eq!(g.get(0, 0), &f.q());
        }
        assert_eq!(permutation_module(&h, &c(&[1, 1, 1])).unwrap().rep.dim, 6);
        assert_eq!(permutation_module(&h, &c(&[2, 1])).unwrap().rep.dim, 3);
        for l in crate::combinat::enumerate_compositions(3, None).unwrap() {
            assert!(satisfies_hecke_relations(&f, &permutation_module(&h, &l).unwrap().rep));
        }
    }

    #[test]
    fn specht_index_and_sign() {
        let h = HeckeAlgebra::new(Rationals::new(4).unwrap(), 3).unwrap();
        let f = h.field().clone();
        let triv = specht_module(&h, &p(&[3])).unwrap().rep;
        assert_eq!(triv.dim, 1);
        assert!(triv.gens.iter().all(|g| g.get(0, 0) == &f.q()));
        let sign = specht_module(&h, &p(&[1, 1, 1])).unwrap().rep;
        assert_eq!(sign.dim, 1);
        assert!(sign.gens.iter().all(|g| g.get(0, 0) == &f.from_i64(-1)));
        assert_eq!(specht_module(&h, &p(&[2, 1])).unwrap().rep.dim, 2);
    }

    #[test]
    fn generic_specht_modules_are_simple_and_fill_the_algebra() {
        for n in 1..=5 {
            let h = HeckeAlgebra::new(Rationals::new(4).unwrap(), n).unwrap();
            let f = h.field().clone();
            let mut total = 0;
            for l in partitions(n) {
                let s = specht_module(&h, &l).unwrap().rep;
                assert!(satisfies_hecke_relations(&f, &s));
                if n <= 4 {
                    assert_eq!(endomorphism_dim(&f, &s), 1, "{l}");
                }
                total += s.dim * s.dim;
            }
            assert_eq!(total as u64, crate::combinat::factorial(n));
        }
    }

    #[test]
    fn gram_form_is_invariant() {
        for n in 2..=4 {
            let h = HeckeAlgebra::new(PrimeField::new(7, 2).unwrap(), n).unwrap();
            let f = h.field().clone();
            for l in partitions(n) {
                let s = specht_module(&h, &l).unwrap().rep;
                let g = s.gram.as_ref().unwrap();
                for a in &s.gens {
                    let lhs = linalg::mat_mul(&f, &a.transpose(), g);
                    let rhs = linalg::mat_mul(&f, g, a);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn simple_module_examples() {
        let h2 = HeckeAlgebra::new(PrimeField::new(3, 2).unwrap(), 2).unwrap();
        assert_eq!(simple_module(&h2, &p(&[2])).unwrap().dim, 1);
        assert!(simple_module(&h2, &p(&[1, 1])).is_err());
        let h3 = HeckeAlgebra::new(PrimeField::new(3, 2).unwrap(), 3).unwrap();
        let l = simple_module(&h3, &p(&[2, 1])).unwrap();
        assert_eq!(l.dim, 2);
        assert_eq!(endomorphism_dim(h3.field(), &l), 1);
        let hq = HeckeAlgebra::new(Rationals::new(4).unwrap(), 3).unwrap();
        assert_eq!(simple_module(&hq, &p(&[2, 1])).unwrap().dim, 2);
    }

    #[test]
    fn simple_modules_are_absolutely_irreducible() {
        for (ell, qbar, n) in [(3, 2, 4), (7, 2, 4), (3, 1, 4), (5, 4, 4)] {
            let h = HeckeAlgebra::new(PrimeField::new(ell, qbar).unwrap(), n).unwrap();
            let e = field_e(h.field(), n).unwrap_or(n + 1);
            for l in crate::combinat::e_regular_partitions(n, e.max(2)).unwrap() {
                let s = simple_module(&h, &l).unwrap();
                assert!(satisfies_hecke_relations(h.field(), &s));
                assert_eq!(endomorphism_dim(h.field(), &s), 1);
            }
        }
    }

    #[test]
    fn alpha_twist_examples() {
        let h = HeckeAlgebra::new(PrimeField::new(7, 2).unwrap(), 3).unwrap();
        assert_eq!(alpha_twist_and_identify(&h, &p(&[3]), 1).unwrap(), p(&[2, 1]));
        let h = HeckeAlgebra::new(PrimeField::new(3, 2).unwrap(), 3).unwrap();
        assert_eq!(alpha_twist_and_identify(&h, &p(&[2, 1]), 1).unwrap(), p(&[2, 1]));
        let h = HeckeAlgebra::new(Rationals::new(4).unwrap(), 3).unwrap();
        for l in partitions(3) {
            assert_eq!(alpha_twist_and_identify(&h, &l, 1).unwrap(), l.conjugate());
        }
    }

    #[test]
    fn branching_examples() {
        let b = branching_class(&p(&[2, 1]), &c(&[2, 1])).unwrap();
        assert_eq!(b, vec![(vec![p(&[2]), p(&[1])], 1), (vec![p(&[1, 1]), p(&[1])], 1)]);
        let b = branching_class(&p(&[4]), &c(&[1, 3])).unwrap();
        assert_eq!(b, vec![(vec![p(&[1]), p(&[3])], 1)]);
        let b = branching_class(&p(&[3, 1]), &c(&[4])).unwrap();
        assert_eq!(b, vec![(vec![p(&[3, 1])], 1)]);
    }
}
