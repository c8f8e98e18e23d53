//! Decomposition matrices: `Z_H` by chopping Specht modules, `Z_S` from
//! weight characters as `K·W⁻¹`, `Z_u = P Z_S P`, and the LLT oracle.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{self, Partition};
use crate::error::{Error, Result};
use crate::field::{AnyField, FieldSpec, GroundField, PrimeField};
use crate::hecke::{self, HeckeAlgebra, IsoVerdict, ModuleRep};
use crate::llt;
use crate::meataxe;
use crate::par::Exec;
use crate::schur::SchurAlgebra;

pub const MAX_HECKE_CHOP_N: usize = 5;
pub const MAX_SCHUR_CHOP_N: usize = 4;

pub type IntMat = Vec<Vec<i64>>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub n: usize,
    #[serde(default)]
    pub e: Option<usize>,
    #[serde(default)]
    pub ell: Option<u64>,
    #[serde(default)]
    pub engine: String,
    #[serde(default)]
    pub seed: Option<u64>,
}

/// Integer matrix with partition labels on rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledIntMatrix {
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: IntMat,
    pub meta: Meta,
}

impl LabeledIntMatrix {
    pub fn new(rows: Vec<Partition>, cols: Vec<Partition>, entries: IntMat, meta: Meta) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::Input("matrix shape does not match its labels".into()));
        }
        Ok(LabeledIntMatrix { rows, cols, entries, meta })
    }

    pub fn identity(labels: Vec<Partition>, meta: Meta) -> Self {
        let entries = identity(labels.len());
        LabeledIntMatrix { rows: labels.clone(), cols: labels, entries, meta }
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> Option<i64> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.cols.iter().position(|c| c == col)?;
        Some(self.entries[i][j])
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let m: LabeledIntMatrix = serde_json::from_str(s)?;
        LabeledIntMatrix::new(m.rows, m.cols, m.entries, m.meta)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.cols.iter().map(|c| c.to_string()));
        w.write_record(&header).map_err(csv_err)?;
        for (r, row) in self.rows.iter().zip(&self.entries) {
            let mut rec = vec![r.to_string()];
            rec.extend(row.iter().map(|x| x.to_string()));
            w.write_record(&rec).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "\\begin{{array}}{{r|{}}}", "c".repeat(self.cols.len()));
        let head: Vec<String> = self.cols.iter().map(|c| format!("{c}")).collect();
        let _ = writeln!(s, " & {} \\\\ \\hline", head.join(" & "));
        for (r, row) in self.rows.iter().zip(&self.entries) {
            let cells: Vec<String> = row
                .iter()
                .map(|x| if *x == 0 { ".".to_string() } else { x.to_string() })
                .collect();
            let _ = writeln!(s, "{r} & {} \\\\", cells.join(" & "));
        }
        s.push_str("\\end{array}\n");
        s
    }

    /// Rows and columns permuted by conjugation, relabelled in place:
    /// the result at `(λ, μ)` is `self[λ', μ']`.
    pub fn conjugate_reindex(&self) -> Result<Self> {
        let rows = &self.rows;
        let cols = &self.cols;
        let entries = rows
            .iter()
            .map(|r| {
                cols.iter()
                    .map(|c| {
                        self.get(&r.conjugate(), &c.conjugate()).ok_or_else(|| {
                            Error::Input("labels are not closed under conjugation".into())
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        LabeledIntMatrix::new(rows.clone(), cols.clone(), entries, self.meta.clone())
    }

    /// Only the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[Partition]) -> Result<Self> {
        let idx = cols
            .iter()
            .map(|c| {
                self.cols
                    .iter()
                    .position(|x| x == c)
                    .ok_or_else(|| Error::Input(format!("no column {c}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let entries = self.entries.iter().map(|r| idx.iter().map(|&j| r[j]).collect()).collect();
        LabeledIntMatrix::new(self.rows.clone(), cols.to_vec(), entries, self.meta.clone())
    }

    pub fn with_engine(mut self, engine: &str) -> Self {
        self.meta.engine = engine.into();
        self
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Internal(format!("csv: {e}"))
}

pub fn identity(n: usize) -> IntMat {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn is_lower_unitriangular(a: &IntMat) -> bool {
    a.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, &x)| if i == j { x == 1 } else if j > i { x == 0 } else { true })
    })
}

pub fn is_upper_unitriangular(a: &IntMat) -> bool {
    a.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, &x)| if i == j { x == 1 } else if j < i { x == 0 } else { true })
    })
}

pub fn to_rational(a: &IntMat) -> Vec<Vec<BigRational>> {
    a.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect()
}

/// Exact inverse over the rationals.
pub fn rational_inverse(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let k = m[r][c].clone();
                for j in 0..2 * n {
                    let v = &m[c][j] * &k;
                    m[r][j] = &m[r][j] - v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn to_integer(a: &[Vec<BigRational>]) -> Option<IntMat> {
    a.iter()
        .map(|r| {
            r.iter()
                .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
                .collect()
        })
        .collect()
}

/// Inverse over the integers, if it exists.
pub fn int_inverse(a: &IntMat) -> Option<IntMat> {
    to_integer(&rational_inverse(&to_rational(a))?)
}

/// The conjugation permutation `P` on `labels`: `P[λ, μ] = 1` iff `μ = λ'`.
pub fn conjugation_matrix(labels: &[Partition]) -> IntMat {
    labels
        .iter()
        .map(|l| {
            let c = l.conjugate();
            labels.iter().map(|m| (*m == c) as i64).collect()
        })
        .collect()
}

fn field_meta(n: usize, spec: FieldSpec, engine: &str, seed: Option<u64>) -> Meta {
    let ell = match spec {
        FieldSpec::Modular { ell, .. } => Some(ell),
        FieldSpec::Generic { .. } => None,
    };
    Meta { n, e: spec.e(), ell, engine: engine.into(), seed }
}

fn check_n(n: usize, bound: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Input("n must be positive".into()));
    }
    if n > bound {
        return Err(Error::Resource(format!("{what} is bounded to n <= {bound}, got {n}")));
    }
    Ok(())
}

/// `Z_H`: rows all partitions, columns `e`-regular partitions, entry
/// `[S^λ : L^μ]`. Over a generic field the Specht modules are checked to
/// be simple and the result is the identity.
pub fn decomp_hecke(n: usize, spec: FieldSpec, seed: u64, exec: Exec) -> Result<LabeledIntMatrix> {
    check_n(n, MAX_HECKE_CHOP_N, "Hecke decomposition")?;
    match spec.resolve()? {
        AnyField::Rational(f) => {
            let h = HeckeAlgebra::new(f, n)?;
            let parts = combinat::partitions(n);
            let ok = exec.map(&parts, |l| -> Result<bool> {
                let s = hecke::specht_module(&h, l)?;
                let simple = hecke::simple_module(&h, l)?;
                Ok(simple.dim == s.rep.dim && hecke::endomorphism_dim(h.field(), &simple) == 1)
            });
            for (l, r) in parts.iter().zip(ok) {
                if !r? {
                    return Err(Error::Verification(format!("S^{l} is not simple over the generic field")));
                }
            }
            Ok(LabeledIntMatrix::identity(parts, field_meta(n, spec, "semisimple", None)))
        }
        AnyField::Prime(f) => chop_hecke(n, f, spec, seed, exec),
    }
}

fn chop_hecke(n: usize, f: PrimeField, spec: FieldSpec, seed: u64, exec: Exec) -> Result<LabeledIntMatrix> {
    let e = f.e();
    let h = HeckeAlgebra::new(f, n)?;
    let rows = combinat::partitions(n);
    let cols = combinat::e_regular_partitions(n, e)?;
    let simples: Vec<ModuleRep<u64>> = exec
        .map(&cols, |mu| hecke::simple_module(&h, mu))
        .into_iter()
        .collect::<Result<_>>()?;
    let indexed: Vec<(usize, &Partition)> = rows.iter().enumerate().collect();
    let results = exec.map(&indexed, |&(i, lam)| -> Result<(Vec<i64>, usize)> {
        let s = hecke::specht_module(&h, lam)?;
        let chopped = meataxe::chop_and_label(&f, &s.rep, seed.wrapping_add(i as u64), |factor| {
            for (mu, l) in cols.iter().zip(&simples) {
                if l.dim != factor.dim {
                    continue;
                }
                if let IsoVerdict::Isomorphic(_) = hecke::find_isomorphism(&f, factor, l, seed)? {
                    return Ok(mu.clone());
                }
            }
            Err(Error::Internal(format!("a factor of S^{lam} matches no simple module")))
        })?;
        let row = cols.iter().map(|mu| chopped.multiplicity(mu) as i64).collect();
        Ok((row, s.rep.dim))
    });
    let mut entries = Vec::new();
    for (lam, r) in rows.iter().zip(results) {
        let (row, dim) = r?;
        let total: i64 = row.iter().zip(&simples).map(|(m, l)| m * l.dim as i64).sum();
        if total != dim as i64 {
            return Err(Error::Internal(format!("factors of S^{lam} do not add up")));
        }
        entries.push(row);
    }
    LabeledIntMatrix::new(rows, cols, entries, field_meta(n, spec, "chop", Some(seed)))
}

/// The LLT oracle at quantum characteristic `e`.
pub fn decomp_llt(n: usize, e: usize) -> Result<LabeledIntMatrix> {
    let (rows, cols, entries) = llt::decomposition_numbers(n, e)?;
    let meta = Meta { n, e: Some(e), ell: None, engine: "llt".into(), seed: None };
    LabeledIntMatrix::new(rows, cols, entries, meta)
}

/// Weight character of a module on the partitions of `n`.
fn partition_weights<F: GroundField>(s: &SchurAlgebra<F>, m: &ModuleRep<F::Elem>) -> BTreeMap<Partition, usize> {
    s.weight_dims(m)
        .into_iter()
        .filter(|(c, _)| c.is_partition())
        .map(|(c, d)| (c.sorted(), d))
        .collect()
}

/// The `⊴`-maximal weight of a simple module, required to be unique and
/// of multiplicity one.
fn maximal_weight(weights: &BTreeMap<Partition, usize>) -> Result<Partition> {
    let support: Vec<&Partition> = weights.iter().filter(|(_, d)| **d > 0).map(|(p, _)| p).collect();
    let mut maxima = Vec::new();
    for p in &support {
        let mut dominated = false;
        for q in &support {
            if p != q && combinat::dominates(q, p)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            maxima.push(*p);
        }
    }
    match maxima.as_slice() {
        [p] if weights[*p] == 1 => Ok((*p).clone()),
        _ => Err(Error::Internal("simple module without a unique one-dimensional top weight".into())),
    }
}

/// `Z_S = K·W⁻¹` on all partitions. Simples of `S(n)` are found by
/// chopping the column modules `S(n)Φ^1_{λλ}` for partitions `λ` and are
/// labelled by their maximal weight.
pub fn decomp_schur(n: usize, spec: FieldSpec, seed: u64, exec: Exec) -> Result<LabeledIntMatrix> {
    decomp_schur_bounded(n, spec, seed, MAX_SCHUR_CHOP_N, exec)
}

pub fn decomp_schur_bounded(
    n: usize,
    spec: FieldSpec,
    seed: u64,
    bound: usize,
    exec: Exec,
) -> Result<LabeledIntMatrix> {
    check_n(n, bound, "Schur decomposition")?;
    let parts = combinat::partitions(n);
    let kostka: IntMat = parts
        .iter()
        .map(|l| parts.iter().map(|nu| combinat::kostka(l, &nu.composition()) as i64).collect())
        .collect();
    match spec.resolve()? {
        AnyField::Rational(f) => {
            // Semisimple: S e_λ has character Σ_μ K_{μλ} ch Δ(μ).
            let s = SchurAlgebra::with_bound(f, n, bound)?;
            let expected = mat_mul(&transpose(&kostka), &kostka);
            for (i, lam) in parts.iter().enumerate() {
                let m = s.column_module(&lam.composition(), exec)?;
                let w = partition_weights(&s, &m);
                for (j, nu) in parts.iter().enumerate() {
                    if w[nu] as i64 != expected[i][j] {
                        return Err(Error::Verification(format!(
                            "weight {nu} of S e_{lam} is {} not {}",
                            w[nu], expected[i][j]
                        )));
                    }
                }
            }
            Ok(LabeledIntMatrix::identity(parts, field_meta(n, spec, "semisimple", None)))
        }
        AnyField::Prime(f) => {
            let s = SchurAlgebra::with_bound(f, n, bound)?;
            let indexed: Vec<(usize, &Partition)> = parts.iter().enumerate().collect();
            let found = exec.map(&indexed, |&(i, lam)| -> Result<Vec<(Partition, BTreeMap<Partition, usize>)>> {
                let m = s.column_module(&lam.composition(), Exec::Sequential)?;
                let mut out = Vec::new();
                for factor in meataxe::chop(&f, &m, seed.wrapping_add(i as u64))? {
                    let w = partition_weights(&s, &factor);
                    out.push((maximal_weight(&w)?, w));
                }
                Ok(out)
            });
            let mut simples: BTreeMap<Partition, BTreeMap<Partition, usize>> = BTreeMap::new();
            for r in found {
                for (label, w) in r? {
                    if let Some(prev) = simples.get(&label) {
                        if *prev != w {
                            return Err(Error::Internal(format!("two simples share the label {label}")));
                        }
                    }
                    simples.insert(label, w);
                }
            }
            if simples.len() != parts.len() {
                return Err(Error::Internal(format!(
                    "found {} simple modules, expected {}",
                    simples.len(),
                    parts.len()
                )));
            }
            let w: IntMat = parts
                .iter()
                .map(|mu| parts.iter().map(|nu| simples[mu][nu] as i64).collect())
                .collect();
            if !is_upper_unitriangular(&w) {
                return Err(Error::Internal("weight matrix of the simples is not unitriangular".into()));
            }
            let winv = int_inverse(&w).ok_or_else(|| Error::Internal("weight matrix not invertible".into()))?;
            let z = mat_mul(&kostka, &winv);
            if z.iter().flatten().any(|&x| x < 0) {
                return Err(Error::Internal("negative decomposition number".into()));
            }
            LabeledIntMatrix::new(parts.clone(), parts, z, field_meta(n, spec, "weights", Some(seed)))
        }
    }
}

pub fn transpose(a: &IntMat) -> IntMat {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// `Z_u = P Z_S P`, required lower unitriangular.
pub fn zu_from_zs(zs: &LabeledIntMatrix) -> Result<LabeledIntMatrix> {
    if !zs.is_square() {
        return Err(Error::Input("Z_S must be square on all partitions".into()));
    }
    let zu = zs.conjugate_reindex()?.with_engine(&format!("{}+conjugation", zs.meta.engine));
    if !is_lower_unitriangular(&zu.entries) {
        return Err(Error::Verification("Z_u is not lower unitriangular".into()));
    }
    Ok(zu)
}

/// The `e`-regular columns of `Z_u`, which is `Z_H` by the Schur functor.
pub fn zh_from_zu(zu: &LabeledIntMatrix, e: usize) -> Result<LabeledIntMatrix> {
    let cols = combinat::e_regular_partitions(zu.meta.n, e)?;
    zu.select_columns(&cols)
}

/// `(λ, μ)` with `Z_H[λ, μ] ≠ Z_H[λ', m(μ)]`.
pub fn mullineux_symmetry_failures(zh: &LabeledIntMatrix, e: usize) -> Result<Vec<(Partition, Partition)>> {
    let mut bad = Vec::new();
    for lam in &zh.rows {
        for mu in &zh.cols {
            let lhs = zh.get(lam, mu);
            let rhs = zh.get(&lam.conjugate(), &combinat::mullineux(mu, e)?);
            if lhs.is_none() || lhs != rhs {
                bad.push((lam.clone(), mu.clone()));
            }
        }
    }
    Ok(bad)
}

/// The matrix `X` with `A = B·X` on shared labels, when `B` has an
/// invertible square row block on its columns.
pub fn adjustment_matrix(chop: &LabeledIntMatrix, llt: &LabeledIntMatrix) -> Result<LabeledIntMatrix> {
    if chop.rows != llt.rows || chop.cols != llt.cols {
        return Err(Error::Input("matrices have different labels".into()));
    }
    let idx: Vec<usize> = llt
        .cols
        .iter()
        .map(|c| llt.rows.iter().position(|r| r == c).ok_or_else(|| Error::Input(format!("no row {c}"))))
        .collect::<Result<_>>()?;
    let block: IntMat = idx.iter().map(|&i| llt.entries[i].clone()).collect();
    let target: IntMat = idx.iter().map(|&i| chop.entries[i].clone()).collect();
    let inv = int_inverse(&block).ok_or_else(|| Error::Input("row block not invertible".into()))?;
    let adj = mat_mul(&inv, &target);
    if mat_mul(&llt.entries, &adj) != chop.entries {
        return Err(Error::Verification("no adjustment matrix relates the two matrices".into()));
    }
    let meta = Meta { engine: "adjustment".into(), ..chop.meta.clone() };
    LabeledIntMatrix::new(llt.cols.clone(), llt.cols.clone(), adj, meta)
}

pub fn is_nonnegative(m: &LabeledIntMatrix) -> bool {
    m.entries.iter().flatten().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn hecke_examples() {
        let z = decomp_hecke(2, FieldSpec::modular(3, 2), 1, Exec::Sequential).unwrap();
        assert_eq!(z.cols, vec![p("2")]);
        assert_eq!(z.entries, vec![vec![1], vec![1]]);
        let z = decomp_hecke(3, FieldSpec::modular(3, 2), 1, Exec::Parallel).unwrap();
        assert_eq!(z.entries, vec![vec![1, 0], vec![0, 1], vec![1, 0]]);
        let z = decomp_hecke(3, FieldSpec::generic(), 1, Exec::Parallel).unwrap();
        assert_eq!(z.entries, identity(3));
    }

    #[test]
    fn schur_examples() {
        let z = decomp_schur(2, FieldSpec::modular(3, 2), 1, Exec::Sequential).unwrap();
        assert_eq!(z.entries, vec![vec![1, 1], vec![0, 1]]);
        let zu = zu_from_zs(&z).unwrap();
        assert_eq!(zu.entries, vec![vec![1, 0], vec![1, 1]]);
        let z = decomp_schur(3, FieldSpec::generic(), 1, Exec::Parallel).unwrap();
        assert_eq!(z.entries, identity(3));
    }

    #[test]
    fn schur_functor_compatibility_n3() {
        let spec = FieldSpec::modular(3, 2);
        let zs = decomp_schur(3, spec, 1, Exec::Parallel).unwrap();
        let zu = zu_from_zs(&zs).unwrap();
        let zh = decomp_hecke(3, spec, 1, Exec::Parallel).unwrap();
        assert_eq!(zh_from_zu(&zu, 2).unwrap().entries, zh.entries);
    }

    #[test]
    fn llt_matches_chop_small() {
        let chop = decomp_hecke(4, FieldSpec::modular(7, 2), 3, Exec::Parallel).unwrap();
        let oracle = decomp_llt(4, 3).unwrap();
        assert_eq!(chop.entries, oracle.entries);
        assert_eq!(adjustment_matrix(&chop, &oracle).unwrap().entries, identity(chop.cols.len()));
    }

    #[test]
    fn export_round_trip() {
        let z = decomp_llt(3, 2).unwrap();
        let back = LabeledIntMatrix::from_json(&z.to_json().to_string()).unwrap();
        assert_eq!(back, z);
        let csv = z.to_csv().unwrap();
        assert!(csv.starts_with(",(3),\"(2,1)\"\n"), "{csv}");
        assert!(z.to_latex().contains("(1,1,1) & 1 & . \\\\"));
        assert!(LabeledIntMatrix::from_json(r#"{"rows":[[1]],"cols":[],"entries":[[1]],"meta":{"n":1}}"#).is_err());
    }

    #[test]
    fn conjugation_matrix_is_involution() {
        let labels = combinat::partitions(5);
        let pm = conjugation_matrix(&labels);
        assert_eq!(mat_mul(&pm, &pm), identity(labels.len()));
    }

    #[test]
    fn int_inverse_unitriangular() {
        let a = vec![vec![1, 0, 0], vec![2, 1, 0], vec![-1, 3, 1]];
        let inv = int_inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        assert!(int_inverse(&vec![vec![2]]).is_none());
    }
}
