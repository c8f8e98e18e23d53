//! Duality matrices on Grothendieck groups: the signed sum of
//! `Ind_λ Res_λ` on Specht and standard classes, `A_G = Z_u⁻¹ P Z_u`,
//! `A_H` from Mullineux and from `Z_H`, `A_S`, the Bruhat factorisation
//! that recovers `Z_u` from `A_G`, and the identity suite.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinat::{self, Composition, Partition};
use crate::decomp::{
    self, conjugation_matrix, int_inverse, mat_mul, IntMat, LabeledIntMatrix, Meta,
};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::par::Exec;

pub const MAX_LR_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    GlUnipotentSimples,
    HeckeSimples,
    SchurSimples,
    SpechtBasis,
    StandardBasis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Specht,
    Standard,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityMatrix {
    pub side: Side,
    #[serde(flatten)]
    pub matrix: LabeledIntMatrix,
}

impl DualityMatrix {
    pub fn entries(&self) -> &IntMat {
        &self.matrix.entries
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

fn sign(n: usize, lambda: &Composition) -> i64 {
    if (n - lambda.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Schur expansion of `s_a s_b` from monomial coefficients: the
/// coefficient of `x^α` is `Σ_{β+γ=α} K_{a,β} K_{b,γ}`, then the Kostka
/// matrix is inverted triangularly.
fn schur_product(a: &Partition, b: &Partition) -> BTreeMap<Partition, i64> {
    let n = a.n() + b.n();
    let targets = combinat::partitions(n);
    let kostka_weak = |l: &Partition, w: &[usize]| -> i64 {
        let parts: Vec<usize> = w.iter().copied().filter(|&x| x > 0).collect();
        if parts.is_empty() {
            return (l.n() == 0) as i64;
        }
        combinat::kostka(l, &Composition::new(parts).expect("positive")) as i64
    };
    let mut monomial: Vec<i64> = Vec::with_capacity(targets.len());
    for alpha in &targets {
        let mut total = 0;
        let mut beta = vec![0usize; alpha.len()];
        fn rec(
            i: usize,
            left: usize,
            alpha: &[usize],
            beta: &mut Vec<usize>,
            f: &mut dyn FnMut(&[usize]),
        ) {
            if i == alpha.len() {
                if left == 0 {
                    f(beta);
                }
                return;
            }
            for x in 0..=alpha[i].min(left) {
                beta[i] = x;
                rec(i + 1, left - x, alpha, beta, f);
            }
            beta[i] = 0;
        }
        rec(0, a.n(), alpha.parts(), &mut beta, &mut |beta: &[usize]| {
            let gamma: Vec<usize> = alpha.parts().iter().zip(beta).map(|(x, y)| x - y).collect();
            total += kostka_weak(a, beta) * kostka_weak(b, &gamma);
        });
        monomial.push(total);
    }
    let mut coeffs: Vec<i64> = vec![0; targets.len()];
    for (j, alpha) in targets.iter().enumerate() {
        let mut c = monomial[j];
        for (i, kappa) in targets.iter().enumerate().take(j) {
            c -= coeffs[i] * combinat::kostka(kappa, &alpha.composition()) as i64;
        }
        coeffs[j] = c;
    }
    targets
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| *c != 0)
        .collect()
}

fn product_of(tuple: &[Partition], cache: &mut HashMap<(Partition, Partition), BTreeMap<Partition, i64>>) -> BTreeMap<Partition, i64> {
    let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
    acc.insert(Partition::empty(), 1);
    for t in tuple {
        let mut next = BTreeMap::new();
        for (p, c) in &acc {
            let prod = if p.n() == 0 {
                BTreeMap::from([(t.clone(), 1)])
            } else {
                cache
                    .entry((p.clone(), t.clone()))
                    .or_insert_with(|| schur_product(p, t))
                    .clone()
            };
            for (q, d) in prod {
                *next.entry(q).or_insert(0) += c * d;
            }
        }
        acc = next;
    }
    acc.retain(|_, c| *c != 0);
    acc
}

/// `Σ_{λ ∈ Λ(n)} (−1)^{n−|λ|} [Ind_λ Res_λ V]` on the Specht classes
/// (lattice-word Littlewood–Richardson numbers) or the standard classes
/// (weight characters through Kostka numbers). The result must equal the
/// conjugation permutation.
pub fn duality_on_basis(n: usize, basis: Basis, exec: Exec) -> Result<DualityMatrix> {
    if n == 0 || n > MAX_LR_N {
        return Err(Error::Resource(format!("LR duality is bounded to 1 <= n <= {MAX_LR_N}, got {n}")));
    }
    let parts = combinat::partitions(n);
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let comps = combinat::enumerate_compositions(n, None)?;
    let pieces = exec.map(&comps, |lam| -> Result<IntMat> {
        let s = sign(n, lam);
        let mut m = vec![vec![0i64; parts.len()]; parts.len()];
        let mut cache = HashMap::new();
        for tuple in combinat::partition_tuples(lam.parts()) {
            let v: Vec<i64> = match basis {
                Basis::Specht => parts
                    .iter()
                    .map(|mu| combinat::littlewood_richardson(mu, &tuple).map(|c| c as i64))
                    .collect::<Result<_>>()?,
                Basis::Standard => {
                    let prod = product_of(&tuple, &mut cache);
                    let mut v = vec![0; parts.len()];
                    for (p, c) in prod {
                        v[index[&p]] = c;
                    }
                    v
                }
            };
            for (i, a) in v.iter().enumerate().filter(|(_, a)| **a != 0) {
                for (j, b) in v.iter().enumerate().filter(|(_, b)| **b != 0) {
                    m[i][j] += s * a * b;
                }
            }
        }
        Ok(m)
    });
    let mut total = vec![vec![0i64; parts.len()]; parts.len()];
    for piece in pieces {
        for (row, prow) in total.iter_mut().zip(piece?) {
            for (x, y) in row.iter_mut().zip(prow) {
                *x += y;
            }
        }
    }
    if total != conjugation_matrix(&parts) {
        return Err(Error::Verification(format!(
            "signed induction-restriction sum on the {basis:?} basis is not the conjugation permutation for n = {n}"
        )));
    }
    let side = match basis {
        Basis::Specht => Side::SpechtBasis,
        Basis::Standard => Side::StandardBasis,
    };
    let engine = match basis {
        Basis::Specht => "lr-lattice-words",
        Basis::Standard => "lr-weight-characters",
    };
    let meta = Meta { n, engine: engine.into(), ..Meta::default() };
    Ok(DualityMatrix { side, matrix: LabeledIntMatrix::new(parts.clone(), parts, total, meta)? })
}

/// `Z⁻¹ P Z` over the integers.
pub fn a_from_z(z: &LabeledIntMatrix, side: Side) -> Result<DualityMatrix> {
    if !z.is_square() {
        return Err(Error::Input("a_from_z needs a square matrix on all partitions".into()));
    }
    let inv = int_inverse(&z.entries).ok_or_else(|| Error::Input("matrix is not invertible over the integers".into()))?;
    let p = conjugation_matrix(&z.rows);
    let a = mat_mul(&mat_mul(&inv, &p), &z.entries);
    let meta = Meta { engine: format!("{}+conjugate", z.meta.engine), ..z.meta.clone() };
    Ok(DualityMatrix { side, matrix: LabeledIntMatrix::new(z.rows.clone(), z.cols.clone(), a, meta)? })
}

/// Permutation matrix of the Mullineux map on `e`-regular partitions.
pub fn mullineux_matrix(n: usize, e: usize) -> Result<DualityMatrix> {
    let labels = combinat::e_regular_partitions(n, e)?;
    let table = combinat::mullineux_table(n, e)?;
    let entries = labels
        .iter()
        .map(|l| labels.iter().map(|m| (table[l] == *m) as i64).collect())
        .collect();
    let meta = Meta { n, e: Some(e), engine: "mullineux".into(), ..Meta::default() };
    Ok(DualityMatrix {
        side: Side::HeckeSimples,
        matrix: LabeledIntMatrix::new(labels.clone(), labels, entries, meta)?,
    })
}

/// `Z_H` with rows reindexed by conjugation: row `λ` is row `λ'` of `Z_H`.
pub fn conjugate_rows(zh: &LabeledIntMatrix) -> Result<IntMat> {
    zh.rows
        .iter()
        .map(|l| {
            let c = l.conjugate();
            zh.rows
                .iter()
                .position(|r| *r == c)
                .map(|i| zh.entries[i].clone())
                .ok_or_else(|| Error::Input("rows are not closed under conjugation".into()))
        })
        .collect()
}

/// Solves `Z_H A_H = (conjugation-reindexed Z_H)` on the `e`-regular row
/// block and checks the solution on every row.
pub fn a_hecke_from_decomp(zh: &LabeledIntMatrix) -> Result<DualityMatrix> {
    let idx: Vec<usize> = zh
        .cols
        .iter()
        .map(|c| zh.rows.iter().position(|r| r == c).ok_or_else(|| Error::Input(format!("no row {c}"))))
        .collect::<Result<_>>()?;
    let block: IntMat = idx.iter().map(|&i| zh.entries[i].clone()).collect();
    let rhs_all = conjugate_rows(zh)?;
    let rhs: IntMat = idx.iter().map(|&i| rhs_all[i].clone()).collect();
    let inv = int_inverse(&block).ok_or_else(|| Error::Input("e-regular row block is not invertible".into()))?;
    let a = mat_mul(&inv, &rhs);
    if mat_mul(&zh.entries, &a) != rhs_all {
        return Err(Error::Verification("Z_H A_H differs from the conjugated Z_H on some row".into()));
    }
    let meta = Meta { engine: format!("{}+solve", zh.meta.engine), ..zh.meta.clone() };
    Ok(DualityMatrix {
        side: Side::HeckeSimples,
        matrix: LabeledIntMatrix::new(zh.cols.clone(), zh.cols.clone(), a, meta)?,
    })
}

pub type QMat = Vec<Vec<BigRational>>;

/// `A = U1·T·R·U2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatFactorization {
    pub u1: QMat,
    pub t: QMat,
    pub r: QMat,
    pub u2: QMat,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn q_identity(n: usize) -> QMat {
    (0..n).map(|i| (0..n).map(|j| q((i == j) as i64)).collect()).collect()
}

fn q_mul(a: &QMat, b: &QMat) -> QMat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

fn is_lower_unitri_q(a: &QMat) -> bool {
    a.iter().enumerate().all(|(i, r)| {
        r.iter().enumerate().all(|(j, x)| {
            if i == j {
                x.is_one()
            } else if j > i {
                x.is_zero()
            } else {
                true
            }
        })
    })
}

fn is_upper_unitri_q(a: &QMat) -> bool {
    a.iter().enumerate().all(|(i, r)| {
        r.iter().enumerate().all(|(j, x)| {
            if i == j {
                x.is_one()
            } else if j < i {
                x.is_zero()
            } else {
                true
            }
        })
    })
}

impl BruhatFactorization {
    pub fn reassemble(&self) -> QMat {
        q_mul(&q_mul(&q_mul(&self.u1, &self.t), &self.r), &self.u2)
    }

    /// Shape conditions that make the factorisation unique.
    pub fn is_normal_form(&self) -> bool {
        let n = self.t.len();
        let diag = (0..n).all(|i| (0..n).all(|j| i == j || self.t[i][j].is_zero()));
        let perm = (0..n).all(|i| {
            self.r[i].iter().filter(|x| x.is_one()).count() == 1
                && self.r[i].iter().filter(|x| !x.is_zero()).count() == 1
        });
        let rt: QMat = (0..n).map(|i| (0..n).map(|j| self.r[j][i].clone()).collect()).collect();
        let conj = q_mul(&q_mul(&self.r, &self.u2), &rt);
        diag && perm && is_lower_unitri_q(&self.u1) && is_lower_unitri_q(&self.u2) && is_upper_unitri_q(&conj)
    }

    pub fn to_json(&self) -> Value {
        let show = |m: &QMat| -> Value {
            json!(m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
        };
        json!({"U1": show(&self.u1), "T": show(&self.t), "R": show(&self.r), "U2": show(&self.u2)})
    }
}

/// Row reduction from the top, pivoting on the rightmost nonzero entry of
/// each row: rows below and columns to the left are cleared.
pub fn bruhat_factorize(a: &IntMat) -> Result<BruhatFactorization> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Input("Bruhat factorisation needs a square matrix".into()));
    }
    let mut m: QMat = a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let mut rows = q_identity(n);
    let mut cols = q_identity(n);
    for i in 0..n {
        let p = (0..n)
            .rev()
            .find(|&j| !m[i][j].is_zero())
            .ok_or_else(|| Error::Input("singular matrix".into()))?;
        let piv = m[i][p].clone();
        for j in 0..p {
            if m[i][j].is_zero() {
                continue;
            }
            let c = &m[i][j] / &piv;
            for r in 0..n {
                let v = &m[r][p] * &c;
                m[r][j] = &m[r][j] - v;
                let w = &cols[r][p] * &c;
                cols[r][j] = &cols[r][j] - w;
            }
        }
        for r in i + 1..n {
            if m[r][p].is_zero() {
                continue;
            }
            let c = &m[r][p] / &piv;
            for j in 0..n {
                let v = &m[i][j] * &c;
                m[r][j] = &m[r][j] - v;
                let w = &rows[i][j] * &c;
                rows[r][j] = &rows[r][j] - w;
            }
        }
    }
    let u1 = decomp::rational_inverse(&rows).ok_or_else(|| Error::Internal("row operations singular".into()))?;
    let u2 = decomp::rational_inverse(&cols).ok_or_else(|| Error::Internal("column operations singular".into()))?;
    let mut t = vec![vec![BigRational::zero(); n]; n];
    let mut r = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        let p = (0..n).find(|&j| !m[i][j].is_zero()).expect("monomial");
        t[i][i] = m[i][p].clone();
        r[i][p] = BigRational::one();
    }
    let f = BruhatFactorization { u1, t, r, u2 };
    if f.reassemble() != a.iter().map(|r| r.iter().map(|&x| q(x)).collect::<Vec<_>>()).collect::<QMat>() {
        return Err(Error::Internal("Bruhat factors do not reassemble".into()));
    }
    Ok(f)
}

/// `Z_u` as the `U2` factor of `A_G`; requires `T = I` and `R = P`.
pub fn recover_zu(a: &DualityMatrix) -> Result<LabeledIntMatrix> {
    let m = &a.matrix;
    let f = bruhat_factorize(&m.entries)?;
    let n = m.rows.len();
    let p = conjugation_matrix(&m.rows);
    if f.t != q_identity(n) {
        return Err(Error::Verification("Bruhat factor T is not the identity".into()));
    }
    if f.r != p.iter().map(|r| r.iter().map(|&x| q(x)).collect::<Vec<_>>()).collect::<QMat>() {
        return Err(Error::Verification("Bruhat factor R is not the conjugation permutation".into()));
    }
    let u2 = decomp::to_integer(&f.u2).ok_or_else(|| Error::Verification("U2 is not integral".into()))?;
    let meta = Meta { engine: "bruhat".into(), ..m.meta.clone() };
    LabeledIntMatrix::new(m.rows.clone(), m.cols.clone(), u2, meta)
}

#[derive(Debug, Clone, Serialize)]
pub struct Identity {
    pub name: String,
    pub status: String,
    pub lhs: Value,
    pub rhs: Value,
}

impl Identity {
    fn check(name: &str, lhs: Value, rhs: Value) -> Self {
        let status = if lhs == rhs { "pass" } else { "fail" };
        Identity { name: name.into(), status: status.into(), lhs, rhs }
    }

    fn failed(name: &str, err: &Error) -> Self {
        Identity { name: name.into(), status: "fail".into(), lhs: json!(err.to_string()), rhs: Value::Null }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub params: Value,
    pub identities: Vec<Identity>,
    pub engines: Value,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.identities.iter().all(Identity::passed)
    }

    pub fn identity(&self, name: &str) -> Option<&Identity> {
        self.identities.iter().find(|i| i.name == name)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// The matrices the identity suite works with.
#[derive(Debug, Clone)]
pub struct Matrices {
    pub zs: LabeledIntMatrix,
    pub zu: LabeledIntMatrix,
    pub zh: LabeledIntMatrix,
    pub a_g: DualityMatrix,
    pub a_s: DualityMatrix,
    pub a_h: DualityMatrix,
    pub mullineux: DualityMatrix,
}

pub fn compute_matrices(n: usize, spec: FieldSpec, seed: u64, exec: Exec) -> Result<Matrices> {
    let e = spec.e().unwrap_or(n + 1);
    let (zs, zh) = exec.join(
        || decomp::decomp_schur(n, spec, seed, exec),
        || decomp::decomp_hecke(n, spec, seed, exec),
    );
    let (zs, zh) = (zs?, zh?);
    let zu = decomp::zu_from_zs(&zs)?;
    let a_g = a_from_z(&zu, Side::GlUnipotentSimples)?;
    let a_s = a_from_z(&zs, Side::SchurSimples)?;
    let a_h = a_hecke_from_decomp(&zh)?;
    let mullineux = mullineux_matrix(n, e)?;
    Ok(Matrices { zs, zu, zh, a_g, a_s, a_h, mullineux })
}

/// `Z⁻¹ P Z` through rational inversion, independent of [`a_from_z`].
fn rational_conjugate(z: &IntMat, p: &IntMat) -> Result<IntMat> {
    let zq = decomp::to_rational(z);
    let inv = decomp::rational_inverse(&zq).ok_or_else(|| Error::Verification("Z is singular".into()))?;
    let prod = q_mul(&q_mul(&inv, &decomp::to_rational(p)), &zq);
    decomp::to_integer(&prod).ok_or_else(|| Error::Verification("Z^-1 P Z is not integral".into()))
}

fn block(m: &LabeledIntMatrix, labels: &[Partition]) -> IntMat {
    labels
        .iter()
        .map(|r| labels.iter().map(|c| m.get(r, c).unwrap_or(0)).collect())
        .collect()
}

/// Every matrix identity for `(n, e, ℓ)` with the smallest `q̄` of quantum
/// characteristic `e` in `F_ℓ`.
pub fn verify_identities(n: usize, e: usize, ell: u64, seed: u64, exec: Exec) -> Result<VerifyReport> {
    let spec = FieldSpec::modular_with_e(ell, e)?;
    verify_with_field(n, spec, seed, exec)
}

pub fn verify_with_field(n: usize, spec: FieldSpec, seed: u64, exec: Exec) -> Result<VerifyReport> {
    let m = compute_matrices(n, spec, seed, exec)?;
    let e = spec.e().unwrap_or(n + 1);
    let parts = &m.zs.rows;
    let p = conjugation_matrix(parts);
    let zu = &m.zu.entries;
    let ag = m.a_g.entries();
    let mut ids = Vec::new();

    ids.push(Identity::check("A_G = Z_u^-1 P Z_u", json!(ag), json!(rational_conjugate(zu, &p)?)));
    ids.push(Identity::check(
        "Z_u A_G = P Z_u",
        json!(mat_mul(zu, ag)),
        json!(mat_mul(&p, zu)),
    ));
    ids.push(Identity::check("A_G^2 = I", json!(mat_mul(ag, ag)), json!(decomp::identity(parts.len()))));
    ids.push(Identity::check(
        "Z_H A_H = P Z_H",
        json!(mat_mul(&m.zh.entries, m.mullineux.entries())),
        json!(conjugate_rows(&m.zh)?),
    ));
    ids.push(Identity::check(
        "A_H (solved from Z_H) = Mullineux",
        json!(m.a_h.entries()),
        json!(m.mullineux.entries()),
    ));
    let zs = &m.zs.entries;
    ids.push(Identity::check("A_S = Z_S^-1 P Z_S", json!(m.a_s.entries()), json!(rational_conjugate(zs, &p)?)));
    ids.push(Identity::check(
        "Z_S A_S = P Z_S",
        json!(mat_mul(zs, m.a_s.entries())),
        json!(mat_mul(&p, zs)),
    ));
    ids.push(Identity::check(
        "A_S = P^-1 A_G P",
        json!(m.a_s.entries()),
        json!(mat_mul(&mat_mul(&p, ag), &p)),
    ));
    let read_off: IntMat = parts
        .iter()
        .map(|l| parts.iter().map(|mu| m.a_g.matrix.get(&l.conjugate(), &mu.conjugate()).unwrap_or(0)).collect())
        .collect();
    ids.push(Identity::check("D_S(L(λ)) = Σ a_{λ'μ'} L(μ)", json!(m.a_s.entries()), json!(read_off)));
    let regular = combinat::e_regular_partitions(n, e)?;
    ids.push(Identity::check(
        "e-regular block of A_G = Mullineux",
        json!(block(&m.a_g.matrix, &regular)),
        json!(m.mullineux.entries()),
    ));
    match recover_zu(&m.a_g) {
        Ok(z) => ids.push(Identity::check("Bruhat recovery of Z_u", json!(z.entries), json!(zu))),
        Err(err) => ids.push(Identity::failed("Bruhat recovery of Z_u", &err)),
    }
    ids.push(Identity::check(
        "Z_H = e-regular columns of P Z_S P",
        json!(decomp::zh_from_zu(&m.zu, e)?.entries),
        json!(m.zh.entries),
    ));
    let sym = decomp::mullineux_symmetry_failures(&m.zh, e)?;
    ids.push(Identity::check("Z_H[λ,μ] = Z_H[λ',m(μ)]", json!(sym.len()), json!(0)));

    let mut engines = json!({
        "Z_S": m.zs.meta.engine,
        "Z_H": m.zh.meta.engine,
        "A_H": "mullineux and solve",
    });
    if let FieldSpec::Modular { ell, .. } = spec {
        let oracle = decomp::decomp_llt(n, e)?;
        let agrees = oracle.entries == m.zh.entries;
        engines["llt_agrees"] = json!(agrees);
        if ell as usize > n {
            ids.push(Identity::check("Z_H = LLT (ell > n)", json!(m.zh.entries), json!(oracle.entries)));
        } else if !agrees {
            engines["adjustment"] = match decomp::adjustment_matrix(&m.zh, &oracle) {
                Ok(a) => json!(a.entries),
                Err(err) => json!(err.to_string()),
            };
        }
    }
    let params = match spec {
        FieldSpec::Modular { ell, qbar } => json!({"n": n, "e": e, "ell": ell, "qbar": qbar}),
        FieldSpec::Generic { q } => json!({"n": n, "q": q}),
    };
    Ok(VerifyReport { params, identities: ids, engines })
}

/// Runs [`verify_identities`] over a grid, in grid order.
pub fn verify_grid(points: &[(usize, usize, u64)], seed: u64, exec: Exec) -> Vec<Result<VerifyReport>> {
    exec.map(points, |&(n, e, ell)| verify_identities(n, e, ell, seed, exec))
}

pub const GRID: [(usize, usize, u64); 5] = [(2, 2, 3), (3, 2, 3), (3, 3, 7), (4, 2, 3), (4, 3, 7)];

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn lim(rows: &[&str], entries: IntMat) -> LabeledIntMatrix {
        let labels: Vec<Partition> = rows.iter().map(|s| p(s)).collect();
        LabeledIntMatrix::new(labels.clone(), labels, entries, Meta::default()).unwrap()
    }

    #[test]
    fn specht_duality_small() {
        let d = duality_on_basis(2, Basis::Specht, Exec::Sequential).unwrap();
        assert_eq!(d.entries(), &vec![vec![0, 1], vec![1, 0]]);
        let d = duality_on_basis(3, Basis::Specht, Exec::Sequential).unwrap();
        assert_eq!(d.matrix.get(&p("2,1"), &p("2,1")), Some(1));
    }

    #[test]
    fn both_bases_n6() {
        for b in [Basis::Specht, Basis::Standard] {
            assert!(duality_on_basis(6, b, Exec::Parallel).is_ok());
        }
    }

    #[test]
    fn schur_products_match_lr() {
        let a = p("2,1");
        let b = p("2");
        for (k, c) in schur_product(&a, &b) {
            assert_eq!(c as u64, combinat::lr_coefficient(&k, &a, &b));
        }
    }

    #[test]
    fn a_from_z_examples() {
        let zu = lim(&["2", "1,1"], vec![vec![1, 0], vec![1, 1]]);
        let a = a_from_z(&zu, Side::GlUnipotentSimples).unwrap();
        assert_eq!(a.entries(), &vec![vec![1, 1], vec![0, -1]]);
        let id = lim(&["2", "1,1"], decomp::identity(2));
        assert_eq!(a_from_z(&id, Side::GlUnipotentSimples).unwrap().entries(), &vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn bruhat_examples() {
        let f = bruhat_factorize(&vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(f.u1, q_identity(2));
        assert_eq!(f.u2, q_identity(2));
        assert!(f.is_normal_form());
        let f = bruhat_factorize(&vec![vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(decomp::to_integer(&f.u1).unwrap(), vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(f.r, q_identity(2));
        let f = bruhat_factorize(&vec![vec![1, 1], vec![0, -1]]).unwrap();
        assert_eq!(decomp::to_integer(&f.u1).unwrap(), vec![vec![1, 0], vec![-1, 1]]);
        assert_eq!(decomp::to_integer(&f.u2).unwrap(), vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(f.t, q_identity(2));
        assert!(f.is_normal_form());
        assert!(bruhat_factorize(&vec![vec![1, 2], vec![2, 4]]).is_err());
    }

    #[test]
    fn recover_round_trip() {
        let zu = lim(&["2", "1,1"], vec![vec![1, 0], vec![1, 1]]);
        let a = a_from_z(&zu, Side::GlUnipotentSimples).unwrap();
        assert_eq!(recover_zu(&a).unwrap().entries, zu.entries);
    }

    #[test]
    fn mullineux_examples() {
        let m = mullineux_matrix(3, 3).unwrap();
        assert_eq!(m.entries(), &vec![vec![0, 1], vec![1, 0]]);
        let m = mullineux_matrix(5, 2).unwrap();
        assert_eq!(m.entries(), &decomp::identity(3));
    }

    #[test]
    fn a_hecke_examples() {
        let zh = LabeledIntMatrix::new(
            vec![p("3"), p("2,1"), p("1,1,1")],
            vec![p("3"), p("2,1")],
            vec![vec![1, 0], vec![0, 1], vec![1, 0]],
            Meta::default(),
        )
        .unwrap();
        assert_eq!(a_hecke_from_decomp(&zh).unwrap().entries(), &decomp::identity(2));
        let bad = LabeledIntMatrix::new(
            vec![p("3"), p("2,1"), p("1,1,1")],
            vec![p("3"), p("2,1")],
            vec![vec![1, 0], vec![0, 1], vec![0, 1]],
            Meta::default(),
        )
        .unwrap();
        assert!(matches!(a_hecke_from_decomp(&bad), Err(Error::Verification(_))));
    }

    #[test]
    fn verify_n2() {
        let r = verify_identities(2, 2, 3, 1, Exec::Sequential).unwrap();
        assert!(r.all_pass(), "{}", serde_json::to_string_pretty(&r.to_json()).unwrap());
    }

    #[test]
    fn verify_semisimple() {
        let r = verify_identities(3, 5, 11, 1, Exec::Parallel).unwrap();
        assert!(r.all_pass());
        let r = verify_with_field(3, FieldSpec::generic(), 1, Exec::Parallel).unwrap();
        assert!(r.all_pass());
    }
}
