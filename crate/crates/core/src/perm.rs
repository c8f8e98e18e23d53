//! The symmetric group `S_n` with all elements enumerated, lengths,
//! reduced words and minimal coset representatives of Young subgroups.
//!
//! Permutations are stored in one-line notation on `0..n`; products compose
//! as functions, `(w v)(k) = w(v(k))`, so `w s_i` swaps positions `i, i+1`
//! and `s_i w` swaps values `i, i+1`. Generator `s_i` has 0-based index
//! `i - 1` in the tables below.

use std::collections::{BTreeSet, HashMap};

use crate::combinat::Composition;
use crate::error::{Error, Result};

pub const MAX_N: usize = 7;

#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    n: usize,
    elems: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    length: Vec<usize>,
    inverse: Vec<usize>,
    right_s: Vec<Vec<usize>>,
    left_s: Vec<Vec<usize>>,
    words: Vec<Vec<usize>>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Resource(format!("S_n supported for 1 <= n <= {MAX_N}, got {n}")));
        }
        let mut elems = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            elems.push(cur.clone());
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let index: HashMap<Vec<u8>, usize> =
            elems.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let length = elems
            .iter()
            .map(|w| {
                (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| w[a] > w[b])
                    .count()
            })
            .collect();
        let inverse = elems
            .iter()
            .map(|w| {
                let mut inv = vec![0u8; n];
                for (k, &v) in w.iter().enumerate() {
                    inv[v as usize] = k as u8;
                }
                index[&inv]
            })
            .collect();
        let right_s = elems
            .iter()
            .map(|w| {
                (0..n - 1)
                    .map(|i| {
                        let mut x = w.clone();
                        x.swap(i, i + 1);
                        index[&x]
                    })
                    .collect()
            })
            .collect();
        let left_s = elems
            .iter()
            .map(|w| {
                (0..n - 1)
                    .map(|i| {
                        let x: Vec<u8> = w
                            .iter()
                            .map(|&v| {
                                if v as usize == i {
                                    v + 1
                                } else if v as usize == i + 1 {
                                    v - 1
                                } else {
                                    v
                                }
                            })
                            .collect();
                        index[&x]
                    })
                    .collect()
            })
            .collect();
        let mut g = SymmetricGroup {
            n,
            elems,
            index,
            length,
            inverse,
            right_s,
            left_s,
            words: Vec::new(),
        };
        g.words = (0..g.order()).map(|w| g.compute_word(w)).collect();
        Ok(g)
    }

    fn compute_word(&self, mut w: usize) -> Vec<usize> {
        // Peel right descents: w = w' s_i with l(w') < l(w).
        let mut word = Vec::new();
        while self.length[w] > 0 {
            let i = (0..self.n - 1)
                .find(|&i| self.elems[w][i] > self.elems[w][i + 1])
                .expect("nonidentity has a descent");
            word.push(i);
            w = self.right_s[w][i];
        }
        word.reverse();
        word
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn one_line(&self, w: usize) -> &[u8] {
        &self.elems[w]
    }

    pub fn index_of(&self, one_line: &[u8]) -> Option<usize> {
        self.index.get(one_line).copied()
    }

    pub fn length(&self, w: usize) -> usize {
        self.length[w]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    /// `w s_i`.
    pub fn mul_s_right(&self, w: usize, i: usize) -> usize {
        self.right_s[w][i]
    }

    /// `s_i w`.
    pub fn mul_s_left(&self, i: usize, w: usize) -> usize {
        self.left_s[w][i]
    }

    /// Whether `l(w s_i) > l(w)`.
    pub fn right_ascent(&self, w: usize, i: usize) -> bool {
        self.elems[w][i] < self.elems[w][i + 1]
    }

    /// Whether `l(s_i w) > l(w)`.
    pub fn left_ascent(&self, i: usize, w: usize) -> bool {
        self.right_ascent(self.inverse[w], i)
    }

    pub fn mul(&self, w: usize, v: usize) -> usize {
        let x: Vec<u8> = self.elems[v].iter().map(|&k| self.elems[w][k as usize]).collect();
        self.index[&x]
    }

    /// A reduced word `i_1 ... i_k` with `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    pub fn longest(&self) -> usize {
        self.order() - 1
    }

    /// 0-based generator indices of `S_λ`.
    pub fn parabolic_generators(&self, lambda: &Composition) -> Vec<usize> {
        assert_eq!(lambda.n(), self.n);
        let sums: BTreeSet<usize> = lambda.partial_sums().into_iter().collect();
        (0..self.n - 1).filter(|i| !sums.contains(&(i + 1))).collect()
    }

    pub fn in_parabolic(&self, w: usize, lambda: &Composition) -> bool {
        let block = lambda.block_of();
        self.elems[w]
            .iter()
            .enumerate()
            .all(|(k, &v)| block[k] == block[v as usize])
    }

    pub fn parabolic_elements(&self, lambda: &Composition) -> Vec<usize> {
        (0..self.order()).filter(|&w| self.in_parabolic(w, lambda)).collect()
    }

    /// Minimal length representatives of the left cosets `w S_λ`, sorted
    /// by length then index.
    pub fn left_coset_reps(&self, lambda: &Composition) -> Vec<usize> {
        let gens = self.parabolic_generators(lambda);
        self.sorted_filter(|w| gens.iter().all(|&i| self.right_ascent(w, i)))
    }

    /// Minimal length representatives of the right cosets `S_λ w`.
    pub fn right_coset_reps(&self, lambda: &Composition) -> Vec<usize> {
        let gens = self.parabolic_generators(lambda);
        self.sorted_filter(|w| gens.iter().all(|&i| self.left_ascent(i, w)))
    }

    /// Minimal length representatives of the double cosets `S_λ w S_μ`.
    pub fn double_coset_reps(&self, lambda: &Composition, mu: &Composition) -> Vec<usize> {
        let gl = self.parabolic_generators(lambda);
        let gm = self.parabolic_generators(mu);
        self.sorted_filter(|w| {
            gl.iter().all(|&i| self.left_ascent(i, w)) && gm.iter().all(|&i| self.right_ascent(w, i))
        })
    }

    /// Elements of `S_λ d S_μ`.
    pub fn double_coset(&self, lambda: &Composition, d: usize, mu: &Composition) -> Vec<usize> {
        let gl = self.parabolic_generators(lambda);
        let gm = self.parabolic_generators(mu);
        let mut seen = vec![false; self.order()];
        let mut stack = vec![d];
        seen[d] = true;
        let mut out = Vec::new();
        while let Some(w) = stack.pop() {
            out.push(w);
            for &i in &gl {
                let x = self.mul_s_left(i, w);
                if !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                }
            }
            for &i in &gm {
                let x = self.mul_s_right(w, i);
                if !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn sorted_filter(&self, pred: impl Fn(usize) -> bool) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).filter(|&w| pred(w)).collect();
        v.sort_by_key(|&w| (self.length[w], w));
        v
    }
}

fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_compositions;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn words_are_reduced() {
        let g = SymmetricGroup::new(4).unwrap();
        for w in 0..g.order() {
            let word = g.reduced_word(w);
            assert_eq!(word.len(), g.length(w));
            let rebuilt = word.iter().fold(g.identity(), |acc, &i| g.mul_s_right(acc, i));
            assert_eq!(rebuilt, w);
            assert_eq!(g.mul(w, g.inverse(w)), g.identity());
        }
        assert_eq!(g.length(g.longest()), 6);
    }

    #[test]
    fn coset_counts() {
        let g2 = SymmetricGroup::new(2).unwrap();
        assert_eq!(g2.left_coset_reps(&c(&[1, 1])).len(), 2);
        assert_eq!(g2.double_coset_reps(&c(&[1, 1]), &c(&[1, 1])).len(), 2);
        let g3 = SymmetricGroup::new(3).unwrap();
        assert_eq!(g3.left_coset_reps(&c(&[2, 1])).len(), 3);
    }

    #[test]
    fn coset_reps_are_unique_minimal() {
        let g = SymmetricGroup::new(4).unwrap();
        let comps = enumerate_compositions(4, None).unwrap();
        for l in &comps {
            let reps = g.left_coset_reps(l);
            assert_eq!(reps.len() as u64, 24 / l.factorial_product());
            let par = g.parabolic_elements(l);
            let mut covered = vec![false; g.order()];
            for &d in &reps {
                for &u in &par {
                    let w = g.mul(d, u);
                    assert!(!covered[w]);
                    covered[w] = true;
                    assert_eq!(g.length(w), g.length(d) + g.length(u));
                }
            }
            for m in &comps {
                let ds = g.double_coset_reps(l, m);
                let total: usize = ds.iter().map(|&d| g.double_coset(l, d, m).len()).sum();
                assert_eq!(total, 24);
                for &d in &ds {
                    let dc = g.double_coset(l, d, m);
                    let min = dc.iter().min_by_key(|&&w| g.length(w)).unwrap();
                    assert_eq!(*min, d);
                }
            }
        }
    }
}
