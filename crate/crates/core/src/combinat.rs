//! Compositions, partitions and the combinatorics around them: the
//! refinement poset, dominance, conjugation, e-regularity, the Mullineux
//! map, Kostka numbers and Littlewood–Richardson coefficients.
//!
//! The global order on partitions is descending lexicographic, which
//! refines the dominance order with `(n)` first and `(1^n)` last.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ordered tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

/// Weakly decreasing tuple of positive integers. The empty partition is
/// allowed (it is the partition of 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Subset of `{1, ..., n-1}` naming basic transpositions `s_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorSubset {
    pub indices: BTreeSet<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Input("a composition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Input(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Composition { parts: vec![1; n] }
    }

    /// `(n)`.
    pub fn full(n: usize) -> Self {
        Composition { parts: vec![n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `|λ|`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Partial sums `λ_1, λ_1+λ_2, ...` excluding the final sum `n`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.parts.len().saturating_sub(1));
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::partial_sums`].
    pub fn from_partial_sums(n: usize, sums: &BTreeSet<usize>) -> Result<Self> {
        let mut parts = Vec::with_capacity(sums.len() + 1);
        let mut prev = 0;
        for &s in sums.iter().chain(std::iter::once(&n)) {
            if s <= prev || s > n {
                return Err(Error::Input(format!("bad partial sums {sums:?} for n = {n}")));
            }
            parts.push(s - prev);
            prev = s;
        }
        Composition::new(parts)
    }

    /// Sorted into a partition.
    pub fn sorted(&self) -> Partition {
        let mut p = self.parts.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: p }
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// Block index of each position `0..n`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        for (b, &p) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat(b).take(p));
        }
        out
    }

    pub fn factorial_product(&self) -> u64 {
        self.parts.iter().map(|&p| factorial(p)).product()
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Input(format!("partition {parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Input(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parses `"3,2,1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Input(format!("cannot parse partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn composition(&self) -> Composition {
        Composition::new(self.parts.clone()).expect("nonempty partition")
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        j < self.part(i)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All compositions of `n`, or those with exactly `k` parts, in
/// descending lexicographic order.
pub fn enumerate_compositions(n: usize, k: Option<usize>) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::Input("n must be positive".into()));
    }
    if let Some(k) = k {
        if k == 0 || k > n {
            return Err(Error::Input(format!("k = {k} out of range 1..={n}")));
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, k: Option<usize>, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            if k.map_or(true, |k| k == cur.len()) {
                out.push(Composition { parts: cur.clone() });
            }
            return;
        }
        if k.is_some_and(|k| cur.len() >= k) {
            return;
        }
        for p in (1..=rest).rev() {
            cur.push(p);
            rec(rest - p, k, cur, out);
            cur.pop();
        }
    }
    rec(n, k, &mut cur, &mut out);
    Ok(out)
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// `I_λ = {1, ..., n-1}` minus the partial sums of `λ`.
pub fn generator_subset(lambda: &Composition) -> GeneratorSubset {
    let sums: BTreeSet<usize> = lambda.partial_sums().into_iter().collect();
    GeneratorSubset {
        indices: (1..lambda.n()).filter(|i| !sums.contains(i)).collect(),
    }
}

fn same_n(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::Input(format!("size mismatch: {a} vs {b}")));
    }
    Ok(())
}

/// `λ ≼ μ`: every partial sum of `μ` is a partial sum of `λ`.
pub fn refines(lambda: &Composition, mu: &Composition) -> Result<bool> {
    same_n(lambda.n(), mu.n())?;
    let ls: BTreeSet<usize> = lambda.partial_sums().into_iter().collect();
    Ok(mu.partial_sums().iter().all(|s| ls.contains(s)))
}

/// Sign attached to a cover `λ ≺ ν` (`ν` has one part fewer). It is
/// `(-1)^j` where `j` is the 1-based position, in the list of partial sums
/// of `λ`, of the partial sum missing from `ν`.
pub fn cover_sign(lambda: &Composition, nu: &Composition) -> Result<i32> {
    if !refines(lambda, nu)? || lambda.len() != nu.len() + 1 {
        return Err(Error::Input(format!("{lambda} ≺ {nu} is not a cover")));
    }
    let nus: BTreeSet<usize> = nu.partial_sums().into_iter().collect();
    let pos = lambda
        .partial_sums()
        .iter()
        .position(|s| !nus.contains(s))
        .expect("a cover misses exactly one partial sum");
    Ok(if (pos + 1) % 2 == 0 { 1 } else { -1 })
}

/// Coarsenings `ν` of `λ` covering it, i.e. with one partial sum removed.
pub fn covers_above(lambda: &Composition) -> Vec<Composition> {
    let sums = lambda.partial_sums();
    (0..sums.len())
        .map(|skip| {
            let s: BTreeSet<usize> = sums
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            Composition::from_partial_sums(lambda.n(), &s).expect("valid sums")
        })
        .collect()
}

/// `Λ(ν)`: compositions refining `ν`, in descending lexicographic order.
pub fn refinements(nu: &Composition) -> Vec<Composition> {
    enumerate_compositions(nu.n(), None)
        .expect("n positive")
        .into_iter()
        .filter(|l| refines(l, nu).expect("same n"))
        .collect()
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let first = lambda.part(0);
    Partition {
        parts: (0..first)
            .map(|j| lambda.parts.iter().filter(|&&p| p > j).count())
            .collect(),
    }
}

/// `λ ⊵ μ`.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    same_n(lambda.n(), mu.n())?;
    Ok(dominates_parts(&lambda.parts, &mu.parts))
}

fn dominates_parts(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    for i in 0..a.len().max(b.len()) {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sb > sa {
            return false;
        }
    }
    true
}

/// Dominance on compositions by partial sums: `λ ⊴ μ`.
pub fn composition_dominated(lambda: &Composition, mu: &Composition) -> Result<bool> {
    same_n(lambda.n(), mu.n())?;
    Ok(dominates_parts(&mu.parts, &lambda.parts))
}

pub fn is_e_regular(lambda: &Partition, e: usize) -> Result<bool> {
    if e < 2 {
        return Err(Error::Input(format!("e = {e} must be at least 2")));
    }
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &p in &lambda.parts {
        *counts.entry(p).or_default() += 1;
    }
    Ok(counts.values().all(|&c| c < e))
}

pub fn e_regular_partitions(n: usize, e: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for p in partitions(n) {
        if is_e_regular(&p, e)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Number of standard tableaux, by the hook length formula.
pub fn syt_count(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let n = lambda.n();
    let mut hooks: u64 = 1;
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j - 1 + conj.part(j) - i - 1 + 1) as u64;
        }
    }
    factorial(n) / hooks
}

/// Nodes of the `e`-rim of `λ` as `(row, col)`, 0-based.
pub fn e_rim(lambda: &Partition, e: usize) -> Vec<(usize, usize)> {
    let rows = lambda.len();
    let rim_row = |i: usize| -> Vec<(usize, usize)> {
        let lo = lambda.part(i + 1).saturating_sub(1);
        (lo..lambda.part(i)).rev().map(|j| (i, j)).collect()
    };
    let mut path: Vec<(usize, usize)> = Vec::new();
    let mut row_start = Vec::with_capacity(rows);
    for i in 0..rows {
        row_start.push(path.len());
        path.extend(rim_row(i));
    }
    let mut rim = Vec::new();
    let mut start_row = 0;
    while start_row < rows {
        let begin = row_start[start_row];
        let end = (begin + e).min(path.len());
        rim.extend_from_slice(&path[begin..end]);
        let last_row = path[end - 1].0;
        start_row = last_row + 1;
    }
    rim
}

/// Mullineux symbol: columns `(A_i, R_i)` of rim sizes and row counts.
pub fn mullineux_symbol(lambda: &Partition, e: usize) -> Vec<(usize, usize)> {
    let mut cur = lambda.parts.clone();
    let mut symbol = Vec::new();
    while !cur.is_empty() {
        let p = Partition { parts: cur.clone() };
        let rim = e_rim(&p, e);
        symbol.push((rim.len(), cur.len()));
        for (i, _) in rim {
            cur[i] -= 1;
        }
        while cur.last() == Some(&0) {
            cur.pop();
        }
        debug_assert!(cur.windows(2).all(|w| w[0] >= w[1]));
    }
    symbol
}

/// The Mullineux map on all `e`-regular partitions of `n`.
pub fn mullineux_table(n: usize, e: usize) -> Result<BTreeMap<Partition, Partition>> {
    let regular = e_regular_partitions(n, e)?;
    let by_symbol: HashMap<Vec<(usize, usize)>, Partition> = regular
        .iter()
        .map(|p| (mullineux_symbol(p, e), p.clone()))
        .collect();
    let mut table = BTreeMap::new();
    for p in &regular {
        let image_symbol: Vec<(usize, usize)> = mullineux_symbol(p, e)
            .into_iter()
            .map(|(a, r)| (a, a + usize::from(a % e != 0) - r))
            .collect();
        let image = by_symbol.get(&image_symbol).ok_or_else(|| {
            Error::Internal(format!("Mullineux symbol of {p} has no preimage at e = {e}"))
        })?;
        table.insert(p.clone(), image.clone());
    }
    Ok(table)
}

pub fn mullineux(lambda: &Partition, e: usize) -> Result<Partition> {
    if !is_e_regular(lambda, e)? {
        return Err(Error::Input(format!("{lambda} is not {e}-regular")));
    }
    Ok(mullineux_table(lambda.n(), e)?[lambda].clone())
}

/// Number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &Composition) -> u64 {
    if lambda.n() != mu.n() {
        return 0;
    }
    let mut memo = HashMap::new();
    kostka_rec(&lambda.parts, &mu.parts, &mut memo)
}

fn kostka_rec(shape: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
    // Strip the largest entry as a horizontal strip.
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    let key = (shape.to_vec(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for inner in horizontal_strips_removed(shape, last) {
        total += kostka_rec(&inner, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Shapes `ν ⊆ shape` with `shape/ν` a horizontal strip of size `k`.
fn horizontal_strips_removed(shape: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = shape.to_vec();
    fn rec(i: usize, k: usize, shape: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == shape.len() {
            if k == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let floor = shape.get(i + 1).copied().unwrap_or(0);
        let max_remove = (shape[i] - floor).min(k);
        for r in 0..=max_remove {
            cur[i] = shape[i] - r;
            rec(i + 1, k - r, shape, cur, out);
        }
        cur[i] = shape[i];
    }
    rec(0, k, shape, &mut cur, &mut out);
    out
}

/// Kostka matrix on partitions of `n` in the global order.
pub fn kostka_matrix(n: usize) -> Vec<Vec<u64>> {
    let ps = partitions(n);
    ps.iter()
        .map(|l| ps.iter().map(|m| kostka(l, &m.composition())).collect())
        .collect()
}

/// `c^λ_{μν}` by counting lattice-word skew tableaux of shape `λ/μ` and
/// content `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.n() != mu.n() + nu.n() || (0..mu.len()).any(|i| mu.part(i) > lambda.part(i)) {
        return 0;
    }
    let rows = lambda.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (mu.part(i)..lambda.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut grid = vec![vec![0usize; lambda.part(0)]; rows];
    let mut count = vec![0usize; nu.len() + 1];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        mu: &Partition,
        lambda: &Partition,
        nu: &Partition,
        grid: &mut Vec<Vec<usize>>,
        count: &mut Vec<usize>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        let max_right = if j + 1 < lambda.part(i) { grid[i][j + 1] } else { usize::MAX };
        let min_above = if i > 0 && j >= mu.part(i - 1) { grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in min_above..=nu.len().min(max_right) {
            if count[v] >= nu.part(v - 1) {
                continue;
            }
            if v > 1 && count[v] + 1 > count[v - 1] {
                continue;
            }
            count[v] += 1;
            grid[i][j] = v;
            total += rec(idx + 1, cells, mu, lambda, nu, grid, count);
            count[v] -= 1;
        }
        grid[i][j] = 0;
        total
    }
    rec(0, &cells, mu, lambda, nu, &mut grid, &mut count)
}

/// Multiplicity of `S^{μ(1)} ⊠ ... ⊠ S^{μ(k)}` in the restriction of `S^λ`,
/// by iterating the pairwise rule over the tuple.
pub fn littlewood_richardson(lambda: &Partition, tuple: &[Partition]) -> Result<u64> {
    let total: usize = tuple.iter().map(Partition::n).sum();
    if total != lambda.n() {
        return Err(Error::Input(format!(
            "tuple sizes sum to {total}, shape has size {}",
            lambda.n()
        )));
    }
    Ok(lr_iterated(lambda, tuple))
}

fn lr_iterated(lambda: &Partition, tuple: &[Partition]) -> u64 {
    match tuple {
        [] => u64::from(lambda.is_empty()),
        [only] => u64::from(only == lambda),
        [init @ .., last] => {
            let m = lambda.n() - last.n();
            partitions_or_empty(m)
                .iter()
                .map(|rho| {
                    let c = lr_coefficient(lambda, rho, last);
                    if c == 0 {
                        0
                    } else {
                        c * lr_iterated(rho, init)
                    }
                })
                .sum()
        }
    }
}

pub fn partitions_or_empty(n: usize) -> Vec<Partition> {
    if n == 0 {
        vec![Partition::empty()]
    } else {
        partitions(n)
    }
}

/// All tuples of partitions with the given sizes.
pub fn partition_tuples(sizes: &[usize]) -> Vec<Vec<Partition>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        let ps = partitions_or_empty(s);
        out = out
            .into_iter()
            .flat_map(|t| {
                ps.iter().map(move |p| {
                    let mut t2 = t.clone();
                    t2.push(p.clone());
                    t2
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }
    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn composition_listing() {
        let all = enumerate_compositions(3, None).unwrap();
        assert_eq!(all, vec![c(&[3]), c(&[2, 1]), c(&[1, 2]), c(&[1, 1, 1])]);
        assert_eq!(enumerate_compositions(3, Some(2)).unwrap(), vec![c(&[2, 1]), c(&[1, 2])]);
        assert_eq!(enumerate_compositions(5, None).unwrap().len(), 16);
        assert!(enumerate_compositions(3, Some(4)).is_err());
        assert!(enumerate_compositions(0, None).is_err());
    }

    #[test]
    fn generator_subsets() {
        assert!(generator_subset(&c(&[1, 1, 1])).indices.is_empty());
        assert_eq!(generator_subset(&c(&[3])).indices, BTreeSet::from([1, 2]));
        for l in enumerate_compositions(6, None).unwrap() {
            assert_eq!(generator_subset(&l).indices.len(), 6 - l.len());
        }
    }

    #[test]
    fn refinement_examples() {
        assert!(refines(&c(&[1, 2]), &c(&[3])).unwrap());
        assert!(!refines(&c(&[2, 1]), &c(&[1, 2])).unwrap());
        assert!(refines(&c(&[2]), &c(&[1, 1, 1])).is_err());
    }

    #[test]
    fn cover_signs_anticommute() {
        assert_eq!(cover_sign(&c(&[1, 1, 1]), &c(&[2, 1])).unwrap(), -1);
        assert_eq!(cover_sign(&c(&[1, 1, 1]), &c(&[1, 2])).unwrap(), 1);
        assert_eq!(cover_sign(&c(&[2, 1]), &c(&[3])).unwrap(), -1);
        assert!(cover_sign(&c(&[1, 1, 1]), &c(&[3])).is_err());
        // every square λ ≺ ν1, ν2 ≺ μ carries opposite sign products
        for n in 2..=6 {
            for l in enumerate_compositions(n, None).unwrap() {
                for m in enumerate_compositions(n, None).unwrap() {
                    if m.len() + 2 != l.len() || !refines(&l, &m).unwrap() {
                        continue;
                    }
                    let mids: Vec<_> = covers_above(&l)
                        .into_iter()
                        .filter(|v| refines(v, &m).unwrap())
                        .collect();
                    assert_eq!(mids.len(), 2);
                    let s: i32 = mids
                        .iter()
                        .map(|v| cover_sign(&l, v).unwrap() * cover_sign(v, &m).unwrap())
                        .sum();
                    assert_eq!(s, 0);
                }
            }
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&p(&[3])), p(&[1, 1, 1]));
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(conjugate(&p(&[2, 2, 1])), p(&[3, 2]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[3]), &p(&[2, 1])).unwrap());
        assert!(!dominates(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(dominates(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(dominates(&p(&[2, 1]), &p(&[2, 1])).unwrap());
    }

    #[test]
    fn refinement_implies_dominance() {
        for n in 1..=6 {
            let all = enumerate_compositions(n, None).unwrap();
            for l in &all {
                for m in &all {
                    if refines(l, m).unwrap() {
                        assert!(composition_dominated(l, m).unwrap(), "{l} {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn regularity() {
        assert!(is_e_regular(&p(&[2, 1]), 2).unwrap());
        assert!(!is_e_regular(&p(&[2, 2, 1]), 2).unwrap());
        assert!(!is_e_regular(&p(&[1, 1, 1]), 3).unwrap());
        assert!(is_e_regular(&p(&[1]), 1).is_err());
    }

    #[test]
    fn rims() {
        assert_eq!(e_rim(&p(&[3]), 3).len(), 3);
        assert_eq!(e_rim(&p(&[2, 1]), 2).len(), 3);
        // (3,1) at e=2: first segment (0,2),(0,1); next starts in row 1
        assert_eq!(e_rim(&p(&[3, 1]), 2), vec![(0, 2), (0, 1), (1, 0)]);
    }

    #[test]
    fn mullineux_examples() {
        assert_eq!(mullineux(&p(&[3]), 3).unwrap(), p(&[2, 1]));
        assert_eq!(mullineux(&p(&[2, 1]), 2).unwrap(), p(&[2, 1]));
        assert_eq!(mullineux(&p(&[3, 1]), 7).unwrap(), p(&[2, 1, 1]));
        assert!(mullineux(&p(&[1, 1]), 2).is_err());
    }

    #[test]
    fn mullineux_involution_and_semisimple_limit() {
        for n in 1..=10 {
            for e in 2..=6 {
                let t = mullineux_table(n, e).unwrap();
                for (l, m) in &t {
                    assert_eq!(&t[m], l);
                    if e > n {
                        assert_eq!(m, &conjugate(l));
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &c(&[1, 1, 1])), 2);
        assert_eq!(kostka(&p(&[1, 1]), &c(&[2])), 0);
        for l in partitions(5) {
            assert_eq!(kostka(&l, &l.composition()), 1);
            assert_eq!(kostka(&l, &Composition::ones(5)), syt_count(&l));
        }
        // content order does not matter
        assert_eq!(kostka(&p(&[3, 1]), &c(&[1, 2, 1])), kostka(&p(&[3, 1]), &c(&[2, 1, 1])));
    }

    #[test]
    fn kostka_matrix_unitriangular() {
        for n in 1..=6 {
            let ps = partitions(n);
            let k = kostka_matrix(n);
            for (i, l) in ps.iter().enumerate() {
                assert_eq!(k[i][i], 1);
                for (j, m) in ps.iter().enumerate() {
                    if k[i][j] != 0 {
                        assert!(dominates(l, m).unwrap());
                        assert!(j >= i);
                    }
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(littlewood_richardson(&p(&[2]), &[p(&[1]), p(&[1])]).unwrap(), 1);
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &[p(&[2]), p(&[1])]).unwrap(), 1);
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &[p(&[1, 1]), p(&[1])]).unwrap(), 1);
        assert_eq!(littlewood_richardson(&p(&[2, 2]), &[p(&[2]), p(&[2])]).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert!(littlewood_richardson(&p(&[2]), &[p(&[1])]).is_err());
    }

    #[test]
    fn lr_restriction_to_ones_counts_tableaux() {
        for l in partitions(5) {
            let ones = vec![p(&[1]); 5];
            assert_eq!(littlewood_richardson(&l, &ones).unwrap(), syt_count(&l));
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(syt_count(&p(&[2, 1])), 2);
        assert_eq!(syt_count(&p(&[3, 1, 1])), 6);
        let total: u64 = partitions(6).iter().map(|l| syt_count(l).pow(2)).sum();
        assert_eq!(total, 720);
    }

    #[test]
    fn serde_roundtrip() {
        let l = p(&[3, 1]);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, "[3,1]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), l);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
        assert!(serde_json::from_str::<Composition>("[]").is_err());
    }
}
