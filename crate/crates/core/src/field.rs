//! Ground fields carrying the Hecke parameter.
//!
//! Two kinds are supported: the rationals with `q` specialised to an integer
//! `q >= 2` (so that no quantum integer `[k]_q` vanishes and the Hecke algebra
//! is semisimple), and a prime field `F_ell` with a unit `qbar`. For the prime
//! field the quantum characteristic `e` is the least `i` with
//! `1 + qbar + ... + qbar^(i-1) = 0`.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::SparseRow;

/// A field together with a distinguished invertible element `q`.
pub trait GroundField: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// The Hecke parameter.
    fn q(&self) -> Self::Elem;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    fn random<R: Rng>(&self, rng: &mut R) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn spec(&self) -> FieldSpec;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Image in `F_p`, when the reduction is defined. Used only for
    /// probabilistic rank hints.
    fn residue_mod(&self, _a: &Self::Elem, _p: u64) -> Option<u64> {
        None
    }

    fn pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let base = if k < 0 {
            self.inv(a).expect("power of a non-invertible element")
        } else {
            a.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = self.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// `a + c*b`
    fn add_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.mul(c, b))
    }

    /// Rank of a sparse row set. Fields may override with a specialised
    /// elimination.
    fn sparse_rank(&self, rows: Vec<SparseRow<Self::Elem>>) -> usize {
        crate::linalg::sparse_rank_generic(self, rows)
    }

    /// Quantum characteristic of `q` bounded by `limit`; `None` when
    /// `1 + q + ... + q^(i-1)` is nonzero for all `i <= limit`.
    fn quantum_characteristic(&self, limit: usize) -> Option<usize> {
        let q = self.q();
        let mut partial = self.zero();
        let mut power = self.one();
        for i in 1..=limit {
            partial = self.add(&partial, &power);
            if self.is_zero(&partial) {
                return Some(i);
            }
            power = self.mul(&power, &q);
        }
        None
    }
}

/// Serializable description of a ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Generic { q: i64 },
    Modular { ell: u64, qbar: u64 },
}

impl FieldSpec {
    pub fn generic() -> Self {
        FieldSpec::Generic { q: 4 }
    }

    pub fn modular(ell: u64, qbar: u64) -> Self {
        FieldSpec::Modular { ell, qbar }
    }

    /// Modular field with the smallest `qbar` of quantum characteristic `e`.
    pub fn modular_with_e(ell: u64, e: usize) -> Result<Self> {
        if !is_prime(ell) {
            return Err(Error::Input(format!("ell = {ell} is not prime")));
        }
        for qbar in 1..ell {
            if modular_e(ell, qbar) == Some(e) {
                return Ok(FieldSpec::Modular { ell, qbar });
            }
        }
        Err(Error::Input(format!(
            "no unit of F_{ell} has quantum characteristic {e}"
        )))
    }

    pub fn resolve(&self) -> Result<AnyField> {
        match *self {
            FieldSpec::Generic { q } => Rationals::new(q).map(AnyField::Rational),
            FieldSpec::Modular { ell, qbar } => {
                PrimeField::new(ell, qbar).map(AnyField::Prime)
            }
        }
    }

    /// Quantum characteristic; `None` for the generic field.
    pub fn e(&self) -> Option<usize> {
        match *self {
            FieldSpec::Generic { .. } => None,
            FieldSpec::Modular { ell, qbar } => modular_e(ell, qbar),
        }
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, FieldSpec::Generic { .. })
    }

    pub fn label(&self) -> String {
        match *self {
            FieldSpec::Generic { q } => format!("Q(q={q})"),
            FieldSpec::Modular { ell, qbar } => format!("F_{ell}(q={qbar})"),
        }
    }
}

/// Resolved field, used to dispatch generic code at runtime.
#[derive(Debug, Clone)]
pub enum AnyField {
    Rational(Rationals),
    Prime(PrimeField),
}

/// Runs a block generic over [`GroundField`] for a resolved [`AnyField`].
#[macro_export]
macro_rules! with_field {
    ($any:expr, |$f:ident| $body:expr) => {
        match $any {
            $crate::field::AnyField::Rational($f) => $body,
            $crate::field::AnyField::Prime($f) => $body,
        }
    };
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Quantum characteristic of `qbar` in `F_ell` (`e = ell` when `qbar = 1`).
pub fn modular_e(ell: u64, qbar: u64) -> Option<usize> {
    let qbar = qbar % ell;
    if qbar == 0 {
        return None;
    }
    let mut partial = 0u64;
    let mut power = 1u64;
    for i in 1..=ell as usize {
        partial = (partial + power) % ell;
        if partial == 0 {
            return Some(i);
        }
        power = power * qbar % ell;
    }
    None
}

/// The prime field `F_p` with Hecke parameter `qbar`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    qbar: u64,
}

impl PrimeField {
    pub fn new(p: u64, qbar: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Input(format!("ell = {p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Input(format!("ell = {p} too large")));
        }
        let qbar = qbar % p;
        if qbar == 0 {
            return Err(Error::Input(format!("qbar must be a unit mod {p}")));
        }
        let e = modular_e(p, qbar);
        if e.map_or(true, |e| e < 2) {
            return Err(Error::Input(format!(
                "qbar = {qbar} has no quantum characteristic >= 2 in F_{p}"
            )));
        }
        Ok(PrimeField { p, qbar })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> usize {
        modular_e(self.p, self.qbar).expect("checked at construction")
    }

    fn pow_u(&self, mut a: u64, mut k: u64) -> u64 {
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * a % self.p;
            }
            a = a * a % self.p;
            k >>= 1;
        }
        acc
    }
}

impl GroundField for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow_u(*a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn q(&self) -> u64 {
        self.qbar
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn random<R: Rng>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Modular {
            ell: self.p,
            qbar: self.qbar,
        }
    }
}

/// The rationals with `q` specialised to an integer `>= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rationals {
    q: i64,
}

impl Rationals {
    pub fn new(q: i64) -> Result<Self> {
        if q < 2 {
            return Err(Error::Input(format!(
                "generic field needs an integer q >= 2, got {q}"
            )));
        }
        Ok(Rationals { q })
    }
}

impl GroundField for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn q(&self) -> BigRational {
        self.from_i64(self.q)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn random<R: Rng>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-9..=9))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Generic { q: self.q }
    }

    fn residue_mod(&self, a: &BigRational, p: u64) -> Option<u64> {
        let m = BigInt::from(p);
        let num: u64 = a.numer().mod_floor(&m).try_into().ok()?;
        let den: u64 = a.denom().mod_floor(&m).try_into().ok()?;
        if den == 0 {
            return None;
        }
        let mut inv = 1u128;
        let (mut b, mut e) = (den as u128, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                inv = inv * b % p as u128;
            }
            b = b * b % p as u128;
            e >>= 1;
        }
        Some((num as u128 * inv % p as u128) as u64)
    }

    fn sparse_rank(&self, rows: Vec<SparseRow<BigRational>>) -> usize {
        let int_rows = rows
            .into_iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
                row.into_iter()
                    .map(|(c, v)| (c, (v * BigRational::from_integer(lcm.clone())).to_integer()))
                    .collect::<Vec<_>>()
            })
            .collect();
        crate::linalg::fraction_free_rank(int_rows)
    }
}

/// Exact integer-to-field conversion for signed big integers.
pub fn elem_from_bigint<F: GroundField>(f: &F, v: &BigInt) -> F::Elem {
    let p = f.characteristic();
    if p == 0 {
        let small: i64 = v.try_into().expect("integer too large for conversion");
        f.from_i64(small)
    } else {
        let r = v.mod_floor(&BigInt::from(p));
        let r: i64 = (&r).try_into().expect("residue fits");
        f.from_i64(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_characteristic_rules() {
        assert_eq!(modular_e(3, 2), Some(2));
        assert_eq!(modular_e(3, 1), Some(3));
        assert_eq!(modular_e(7, 2), Some(3));
        assert_eq!(modular_e(7, 6), Some(2));
        assert_eq!(modular_e(7, 1), Some(7));
        assert_eq!(modular_e(13, 5), Some(4));
    }

    #[test]
    fn modular_with_e_picks_smallest_unit() {
        assert_eq!(
            FieldSpec::modular_with_e(7, 3).unwrap(),
            FieldSpec::Modular { ell: 7, qbar: 2 }
        );
        assert_eq!(
            FieldSpec::modular_with_e(3, 2).unwrap(),
            FieldSpec::Modular { ell: 3, qbar: 2 }
        );
        assert!(FieldSpec::modular_with_e(7, 4).is_err());
        assert!(FieldSpec::modular_with_e(9, 2).is_err());
    }

    #[test]
    fn generic_field_never_vanishes_small_quantum_integers() {
        let f = Rationals::new(4).unwrap();
        assert_eq!(f.quantum_characteristic(20), None);
        assert!(Rationals::new(1).is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7, 2).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.pow(&2, -1), 4);
        assert_eq!(f.quantum_characteristic(10), Some(3));
        assert!(PrimeField::new(7, 0).is_err());
    }
}
