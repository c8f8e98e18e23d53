//! Dense univariate polynomials over a prime field `F_p`: arithmetic,
//! characteristic polynomials and factorisation into distinct irreducible
//! factors (distinct-degree plus Cantor–Zassenhaus).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;

use crate::linalg::Mat;

/// Coefficients from the constant term up; no trailing zeros.
pub type Poly = Vec<u64>;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(a: &Poly) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn x() -> Poly {
    vec![0, 1]
}

pub fn add(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = inv(b[db], p);
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (db..r.len()).rev() {
        let c = mulmod(r[k], lead_inv, p);
        if c == 0 {
            continue;
        }
        q[k - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            let idx = k - db + j;
            r[idx] = (r[idx] + p - mulmod(c, bj, p)) % p;
        }
    }
    (trim(q), trim(r))
}

pub fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    divrem(a, b, p).1
}

pub fn monic(a: &Poly, p: u64) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = inv(l, p);
            a.iter().map(|&c| mulmod(c, li, p)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn derivative(a: &Poly, p: u64) -> Poly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % p, p))
            .collect(),
    )
}

/// `base^e mod m`.
pub fn powmod_poly(base: &Poly, e: &BigUint, m: &Poly, p: u64) -> Poly {
    let mut result: Poly = rem(&vec![1], m, p);
    let mut b = rem(base, m, p);
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            result = rem(&mul(&result, &b, p), m, p);
        }
        if i + 1 < bits {
            b = rem(&mul(&b, &b, p), m, p);
        }
    }
    result
}

pub fn eval(a: &Poly, t: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| (mulmod(acc, t, p) + c) % p)
}

/// Characteristic polynomial `det(xI - A)` via reduction to upper
/// Hessenberg form.
pub fn char_poly(a: &Mat<u64>, p: u64) -> Poly {
    let n = a.rows();
    let mut h: Vec<Vec<u64>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        let pinv = inv(h[m][m - 1], p);
        for i in m + 1..n {
            let t = mulmod(h[i][m - 1], pinv, p);
            if t == 0 {
                continue;
            }
            for j in 0..n {
                let v = mulmod(t, h[m][j], p);
                h[i][j] = (h[i][j] + p - v) % p;
            }
            for row in h.iter_mut() {
                let v = mulmod(t, row[i], p);
                row[m] = (row[m] + v) % p;
            }
        }
    }
    // Recurrence on leading principal minors of xI - H.
    let mut polys: Vec<Poly> = vec![vec![1]];
    for k in 0..n {
        let mut next = mul(&vec![(p - h[k][k]) % p, 1], &polys[k], p);
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mulmod(prod, h[i + 1][i], p);
            if prod == 0 {
                break;
            }
            let c = mulmod(prod, h[i][k], p);
            next = sub(&next, &mul(&vec![c], &polys[i], p), p);
        }
        polys.push(next);
    }
    polys.pop().expect("nonempty")
}

/// `a(M)` for a square matrix `M`.
pub fn eval_matrix(a: &Poly, m: &Mat<u64>, p: u64) -> Mat<u64> {
    let n = m.rows();
    let mut acc = Mat::filled(n, n, 0u64);
    for &c in a.iter().rev() {
        let mut next = Mat::filled(n, n, 0u64);
        for i in 0..n {
            for k in 0..n {
                let x = *acc.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = *m.get(k, j);
                    if y != 0 {
                        let v = (next.get(i, j) + mulmod(x, y, p)) % p;
                        next.set(i, j, v);
                    }
                }
            }
        }
        for i in 0..n {
            let v = (next.get(i, i) + c) % p;
            next.set(i, i, v);
        }
        acc = next;
    }
    acc
}

/// Distinct monic irreducible factors, sorted by degree then
/// coefficients.
pub fn irreducible_factors<R: Rng>(a: &Poly, p: u64, rng: &mut R) -> Vec<Poly> {
    let mut out = Vec::new();
    collect_factors(&monic(&trim(a.clone()), p), p, rng, &mut out);
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out.dedup();
    out
}

fn collect_factors<R: Rng>(a: &Poly, p: u64, rng: &mut R, out: &mut Vec<Poly>) {
    if degree(a).map_or(true, |d| d == 0) {
        return;
    }
    let da = derivative(a, p);
    if da.is_empty() {
        // a(x) = b(x^p) = b(x)^p over F_p.
        let b: Poly = a.iter().step_by(p as usize).copied().collect();
        collect_factors(&b, p, rng, out);
        return;
    }
    let g = gcd(a, &da, p);
    let squarefree = divrem(a, &g, p).0;
    distinct_degree(&monic(&squarefree, p), p, rng, out);
    collect_factors(&g, p, rng, out);
}

fn distinct_degree<R: Rng>(a: &Poly, p: u64, rng: &mut R, out: &mut Vec<Poly>) {
    let mut f = a.clone();
    let mut h = rem(&x(), &f, p);
    let mut d = 1;
    let pbig = BigUint::from(p);
    while degree(&f).map_or(false, |df| df >= 2 * d) {
        h = powmod_poly(&h, &pbig, &f, p);
        let g = gcd(&sub(&h, &x(), p), &f, p);
        if degree(&g).map_or(false, |dg| dg > 0) {
            equal_degree(&g, d, p, rng, out);
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
        d += 1;
    }
    if degree(&f).map_or(false, |df| df > 0) {
        out.push(monic(&f, p));
    }
}

fn equal_degree<R: Rng>(g: &Poly, d: usize, p: u64, rng: &mut R, out: &mut Vec<Poly>) {
    let dg = degree(g).expect("nonzero");
    if dg == d {
        out.push(monic(g, p));
        return;
    }
    let exp = if p == 2 {
        BigUint::zero()
    } else {
        (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32)
    };
    loop {
        let r: Poly = trim((0..dg).map(|_| rng.gen_range(0..p)).collect());
        if degree(&r).map_or(true, |dr| dr == 0) {
            continue;
        }
        let t = if p == 2 {
            // Trace map r + r^2 + ... + r^(2^(d-1)).
            let mut acc = r.clone();
            let mut cur = r.clone();
            for _ in 1..d {
                cur = rem(&mul(&cur, &cur, p), g, p);
                acc = add(&acc, &cur, p);
            }
            acc
        } else {
            sub(&powmod_poly(&r, &exp, g, p), &vec![1], p)
        };
        let s = gcd(&t, g, p);
        let ds = degree(&s).unwrap_or(0);
        if ds > 0 && ds < dg {
            equal_degree(&s, d, p, rng, out);
            equal_degree(&divrem(g, &s, p).0, d, p, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn product(fs: &[Poly], p: u64) -> Poly {
        fs.iter().fold(vec![1], |acc, f| mul(&acc, f, p))
    }

    #[test]
    fn division_identity() {
        let p = 7;
        let a = vec![3, 0, 5, 1, 6];
        let b = vec![2, 1, 3];
        let (q, r) = divrem(&a, &b, p);
        assert_eq!(add(&mul(&q, &b, p), &r, p), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn char_poly_small() {
        let p = 5;
        let a = Mat::from_rows(vec![vec![1, 2], vec![3, 4]], 2);
        // x^2 - 5x - 2 = x^2 + 3 mod 5
        assert_eq!(char_poly(&a, p), vec![3, 0, 1]);
        let z = Mat::filled(3, 3, 0u64);
        assert_eq!(char_poly(&z, p), vec![0, 0, 0, 1]);
        assert!(eval_matrix(&char_poly(&a, p), &a, p).entries().iter().all(|&v| v == 0));
    }

    #[test]
    fn factors_known() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // x^4 - 1 over F_3 = (x-1)(x+1)(x^2+1)
        let f = vec![2, 0, 0, 0, 1];
        let fs = irreducible_factors(&f, 3, &mut rng);
        assert_eq!(fs, vec![vec![1, 1], vec![2, 1], vec![1, 0, 1]]);
        // x^2 + x + 1 over F_2 is irreducible; (x+1)^2 collapses to x+1.
        assert_eq!(irreducible_factors(&vec![1, 1, 1], 2, &mut rng), vec![vec![1, 1, 1]]);
        assert_eq!(irreducible_factors(&vec![1, 0, 1], 2, &mut rng), vec![vec![1, 1]]);
        // x^9 - x over F_3 splits into linear factors times x^2+1 etc.
        let mut g = vec![0u64; 10];
        g[9] = 1;
        g[1] = 2;
        let fs = irreducible_factors(&g, 3, &mut rng);
        assert_eq!(fs.iter().map(|f| f.len() - 1).sum::<usize>(), 9);
    }

    proptest! {
        #[test]
        fn factors_divide_and_are_irreducible(
            coeffs in proptest::collection::vec(0u64..5, 2..9),
            seed in 0u64..100,
        ) {
            let p = 5;
            let f = monic(&trim(coeffs), p);
            prop_assume!(degree(&f).map_or(false, |d| d >= 1));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let fs = irreducible_factors(&f, p, &mut rng);
            for g in &fs {
                prop_assert!(rem(&f, g, p).is_empty());
                let dg = degree(g).unwrap();
                for t in 0..p {
                    if dg > 1 {
                        prop_assert_ne!(eval(g, t, p), 0);
                    }
                }
            }
            // The radical divides f and every root of f is a root of it.
            let rad = product(&fs, p);
            for t in 0..p {
                prop_assert_eq!(eval(&f, t, p) == 0, eval(&rad, t, p) == 0);
            }
        }
    }
}
