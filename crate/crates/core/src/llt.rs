//! Canonical basis of the level-one Fock space of `U_v(sl_e^)`, computed by
//! the ladder construction and bar-invariant corrections. Specialising at
//! `v = 1` gives decomposition numbers of the Hecke algebra at a primitive
//! `e`-th root of unity in characteristic zero.

use std::collections::BTreeMap;

use crate::combinat::{self, Partition};
use crate::error::{Error, Result};

/// Laurent polynomial in `v` with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LPoly(BTreeMap<i32, i64>);

impl LPoly {
    pub fn zero() -> Self {
        LPoly::default()
    }

    pub fn monomial(k: i32, c: i64) -> Self {
        let mut p = LPoly::zero();
        p.add_term(k, c);
        p
    }

    fn add_term(&mut self, k: i32, c: i64) {
        let e = self.0.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.0.iter().map(|(k, c)| (*k, *c))
    }

    pub fn add(&self, o: &LPoly) -> LPoly {
        let mut r = self.clone();
        for (k, c) in o.terms() {
            r.add_term(k, c);
        }
        r
    }

    pub fn sub(&self, o: &LPoly) -> LPoly {
        let mut r = self.clone();
        for (k, c) in o.terms() {
            r.add_term(k, -c);
        }
        r
    }

    pub fn mul(&self, o: &LPoly) -> LPoly {
        let mut r = LPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in o.terms() {
                r.add_term(a + b, x * y);
            }
        }
        r
    }

    /// `v ↦ v⁻¹`.
    pub fn bar(&self) -> LPoly {
        LPoly(self.terms().map(|(k, c)| (-k, c)).collect())
    }

    pub fn at_one(&self) -> i64 {
        self.terms().map(|(_, c)| c).sum()
    }

    /// Exact division; `None` if `d` does not divide.
    pub fn div_exact(&self, d: &LPoly) -> Option<LPoly> {
        let (&dk, &dc) = d.0.iter().next_back()?;
        let dlo = *d.0.keys().next()?;
        let lo = self.0.keys().next().map_or(0, |k| k - dlo);
        let mut rem = self.clone();
        let mut q = LPoly::zero();
        while let Some((&rk, &rc)) = rem.0.iter().next_back() {
            if rc % dc != 0 || rk - dk < lo {
                return None;
            }
            let t = LPoly::monomial(rk - dk, rc / dc);
            rem = rem.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// `[k] = v^{1-k} + v^{3-k} + … + v^{k-1}`.
    pub fn quantum_int(k: i32) -> LPoly {
        let mut p = LPoly::zero();
        let mut j = 1 - k;
        while j <= k - 1 {
            p.add_term(j, 1);
            j += 2;
        }
        p
    }
}

type Fock = BTreeMap<Vec<usize>, LPoly>;

fn residue(row: usize, col: usize, e: usize) -> usize {
    (col + e * (row + 1) - row) % e
}

/// Addable and removable `i`-nodes as `(row, is_addable)`, top row first.
fn i_nodes(lam: &[usize], i: usize, e: usize) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    for r in 0..=lam.len() {
        let len = lam.get(r).copied().unwrap_or(0);
        if (r == 0 || lam[r - 1] > len) && residue(r, len, e) == i {
            out.push((r, true));
        }
        if len > 0 && lam.get(r + 1).copied().unwrap_or(0) < len && residue(r, len - 1, e) == i {
            out.push((r, false));
        }
    }
    out.sort();
    out
}

/// `f_i λ = Σ v^{N} (λ + γ)`, `N` = addable minus removable `i`-nodes
/// strictly to the right of `γ`.
fn f_i(vec: &Fock, i: usize, e: usize) -> Fock {
    let mut out: Fock = BTreeMap::new();
    for (lam, c) in vec {
        let nodes = i_nodes(lam, i, e);
        for &(r, add) in &nodes {
            if !add {
                continue;
            }
            let n: i32 = nodes
                .iter()
                .filter(|(r2, _)| *r2 < r)
                .map(|(_, a)| if *a { 1 } else { -1 })
                .sum();
            let mut mu = lam.clone();
            if r == mu.len() {
                mu.push(1);
            } else {
                mu[r] += 1;
            }
            let slot = out.entry(mu).or_default();
            *slot = slot.add(&c.mul(&LPoly::monomial(n, 1)));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn divided_power(vec: &Fock, i: usize, k: usize, e: usize) -> Result<Fock> {
    let mut cur = vec.clone();
    let mut fact = LPoly::monomial(0, 1);
    for j in 1..=k {
        cur = f_i(&cur, i, e);
        fact = fact.mul(&LPoly::quantum_int(j as i32));
    }
    cur.into_iter()
        .map(|(lam, c)| {
            let q = c
                .div_exact(&fact)
                .ok_or_else(|| Error::Internal("divided power is not integral".into()))?;
            Ok((lam, q))
        })
        .collect()
}

/// `A(μ)`: divided powers along the ladders of `μ`, applied to `∅`.
fn ladder_vector(mu: &Partition, e: usize) -> Result<Fock> {
    let mut ladders: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (r, &len) in mu.parts().iter().enumerate() {
        for c in 0..len {
            let l = r + (e - 1) * c;
            let slot = ladders.entry(l).or_insert((residue(r, c, e), 0));
            slot.1 += 1;
        }
    }
    let mut vec: Fock = BTreeMap::new();
    vec.insert(Vec::new(), LPoly::monomial(0, 1));
    for (_, (res, k)) in ladders {
        vec = divided_power(&vec, res, k, e)?;
    }
    Ok(vec)
}

fn in_v_z(c: &LPoly) -> bool {
    c.terms().all(|(k, _)| k >= 1)
}

/// Canonical basis `G(μ)` for every `e`-regular `μ ⊢ n`.
pub fn canonical_basis(n: usize, e: usize) -> Result<BTreeMap<Partition, BTreeMap<Partition, LPoly>>> {
    if e < 2 {
        return Err(Error::Input(format!("e must be at least 2, got {e}")));
    }
    let mut regular = combinat::e_regular_partitions(n, e)?;
    regular.sort();
    let mut basis: BTreeMap<Partition, Fock> = BTreeMap::new();
    for mu in regular {
        let mut vec = ladder_vector(&mu, e)?;
        if vec.get(mu.parts()) != Some(&LPoly::monomial(0, 1)) {
            return Err(Error::Internal(format!("A({mu}) does not lead with {mu}")));
        }
        let keys: Vec<Vec<usize>> = vec.keys().rev().cloned().collect();
        for lam in keys {
            if lam.as_slice() >= mu.parts() {
                continue;
            }
            let Some(c) = vec.get(&lam).cloned() else {
                continue;
            };
            if in_v_z(&c) {
                continue;
            }
            let nu = Partition::new(lam.clone())?;
            let g = basis
                .get(&nu)
                .ok_or_else(|| Error::Internal(format!("coefficient at e-singular {nu} not in vZ[v]")))?;
            let mut alpha = LPoly::zero();
            for (k, x) in c.terms() {
                if k == 0 {
                    alpha.add_term(0, x);
                } else if k < 0 {
                    alpha.add_term(k, x);
                    alpha.add_term(-k, x);
                }
            }
            for (l2, c2) in g {
                let slot = vec.entry(l2.clone()).or_default();
                *slot = slot.sub(&alpha.mul(c2));
            }
            vec.retain(|_, c| !c.is_zero());
        }
        for (lam, c) in &vec {
            if lam.as_slice() != mu.parts() && (!in_v_z(c) || c.terms().any(|(_, x)| x < 0)) {
                return Err(Error::Internal(format!("G({mu}) has a non-positive coefficient at {lam:?}")));
            }
        }
        basis.insert(mu, vec);
    }
    basis
        .into_iter()
        .map(|(mu, vec)| {
            let col = vec
                .into_iter()
                .map(|(lam, c)| Ok((Partition::new(lam)?, c)))
                .collect::<Result<_>>()?;
            Ok((mu, col))
        })
        .collect()
}

/// Decomposition numbers `d_{λμ}(1)`: rows all partitions, columns the
/// `e`-regular ones, both in descending order.
pub fn decomposition_numbers(n: usize, e: usize) -> Result<(Vec<Partition>, Vec<Partition>, Vec<Vec<i64>>)> {
    let g = canonical_basis(n, e)?;
    let rows = combinat::partitions(n);
    let mut cols: Vec<Partition> = g.keys().cloned().collect();
    cols.reverse();
    let entries = rows
        .iter()
        .map(|lam| {
            cols.iter()
                .map(|mu| g[mu].get(lam).map_or(0, LPoly::at_one))
                .collect()
        })
        .collect();
    Ok((rows, cols, entries))
}
