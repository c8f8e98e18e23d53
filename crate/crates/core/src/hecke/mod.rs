//! The Iwahori–Hecke algebra of `S_n` over a [`GroundField`], with
//! elements stored densely over the basis `T_w`.

mod modules;

use std::sync::Arc;

use crate::combinat::Composition;
use crate::error::{Error, Result};
use crate::field::GroundField;
use crate::perm::SymmetricGroup;

pub use modules::*;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeckeElement<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> HeckeElement<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff(&self, w: usize) -> &E {
        &self.coeffs[w]
    }
}

#[derive(Debug, Clone)]
pub struct HeckeAlgebra<F: GroundField> {
    field: F,
    group: Arc<SymmetricGroup>,
}

impl<F: GroundField> HeckeAlgebra<F> {
    pub fn new(field: F, n: usize) -> Result<Self> {
        Ok(HeckeAlgebra {
            field,
            group: Arc::new(SymmetricGroup::new(n)?),
        })
    }

    pub fn with_group(field: F, group: Arc<SymmetricGroup>) -> Self {
        HeckeAlgebra { field, group }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<SymmetricGroup> {
        self.group.clone()
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> HeckeElement<F::Elem> {
        HeckeElement {
            coeffs: vec![self.field.zero(); self.dim()],
        }
    }

    pub fn one(&self) -> HeckeElement<F::Elem> {
        self.basis(self.group.identity())
    }

    /// `T_w`.
    pub fn basis(&self, w: usize) -> HeckeElement<F::Elem> {
        let mut a = self.zero();
        a.coeffs[w] = self.field.one();
        a
    }

    pub fn from_coeffs(&self, coeffs: Vec<F::Elem>) -> Result<HeckeElement<F::Elem>> {
        if coeffs.len() != self.dim() {
            return Err(Error::Input(format!(
                "expected {} coefficients, got {}",
                self.dim(),
                coeffs.len()
            )));
        }
        Ok(HeckeElement { coeffs })
    }

    pub fn add(&self, a: &HeckeElement<F::Elem>, b: &HeckeElement<F::Elem>) -> HeckeElement<F::Elem> {
        HeckeElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.field.add(x, y)).collect(),
        }
    }

    pub fn sub(&self, a: &HeckeElement<F::Elem>, b: &HeckeElement<F::Elem>) -> HeckeElement<F::Elem> {
        HeckeElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.field.sub(x, y)).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem, a: &HeckeElement<F::Elem>) -> HeckeElement<F::Elem> {
        HeckeElement {
            coeffs: a.coeffs.iter().map(|x| self.field.mul(c, x)).collect(),
        }
    }

    pub fn is_zero(&self, a: &HeckeElement<F::Elem>) -> bool {
        a.coeffs.iter().all(|x| self.field.is_zero(x))
    }

    /// `a T_{s_i}`: `T_w T_s = T_{ws}` when `l(ws) > l(w)`, and
    /// `q T_{ws} + (q-1) T_w` otherwise.
    pub fn mul_s_right(&self, a: &HeckeElement<F::Elem>, i: usize) -> HeckeElement<F::Elem> {
        let f = &self.field;
        let q = f.q();
        let qm1 = f.sub(&q, &f.one());
        let mut out = self.zero();
        for (w, c) in a.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let ws = self.group.mul_s_right(w, i);
            if self.group.right_ascent(w, i) {
                out.coeffs[ws] = f.add(&out.coeffs[ws], c);
            } else {
                out.coeffs[ws] = f.add_mul(&out.coeffs[ws], &q, c);
                out.coeffs[w] = f.add_mul(&out.coeffs[w], &qm1, c);
            }
        }
        out
    }

    /// `T_{s_i} a`.
    pub fn mul_s_left(&self, i: usize, a: &HeckeElement<F::Elem>) -> HeckeElement<F::Elem> {
        let f = &self.field;
        let q = f.q();
        let qm1 = f.sub(&q, &f.one());
        let mut out = self.zero();
        for (w, c) in a.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let sw = self.group.mul_s_left(i, w);
            if self.group.left_ascent(i, w) {
                out.coeffs[sw] = f.add(&out.coeffs[sw], c);
            } else {
                out.coeffs[sw] = f.add_mul(&out.coeffs[sw], &q, c);
                out.coeffs[w] = f.add_mul(&out.coeffs[w], &qm1, c);
            }
        }
        out
    }

    /// `a T_v`, multiplying along a reduced word of `v`.
    pub fn mul_basis_right(&self, a: &HeckeElement<F::Elem>, v: usize) -> HeckeElement<F::Elem> {
        self.group
            .reduced_word(v)
            .iter()
            .fold(a.clone(), |acc, &i| self.mul_s_right(&acc, i))
    }

    /// `T_v a`.
    pub fn mul_basis_left(&self, v: usize, a: &HeckeElement<F::Elem>) -> HeckeElement<F::Elem> {
        self.group
            .reduced_word(v)
            .iter()
            .rev()
            .fold(a.clone(), |acc, &i| self.mul_s_left(i, &acc))
    }

    pub fn multiply(&self, a: &HeckeElement<F::Elem>, b: &HeckeElement<F::Elem>) -> HeckeElement<F::Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for (v, c) in b.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let av = self.mul_basis_right(a, v);
            for (o, x) in out.coeffs.iter_mut().zip(&av.coeffs) {
                if !f.is_zero(x) {
                    *o = f.add_mul(o, c, x);
                }
            }
        }
        out
    }

    /// `T_{s_i}^{-1} = q^{-1} T_{s_i} + (q^{-1} - 1)`.
    pub fn inverse_generator(&self, i: usize) -> HeckeElement<F::Elem> {
        let f = &self.field;
        let qi = f.inv(&f.q()).expect("q is a unit");
        let mut a = self.zero();
        a.coeffs[self.group.identity()] = f.sub(&qi, &f.one());
        a.coeffs[self.group.mul_s_right(self.group.identity(), i)] = qi;
        a
    }

    /// `T_w^{-1}`.
    pub fn inverse_basis(&self, w: usize) -> HeckeElement<F::Elem> {
        // T_w = T_{i1} ... T_{ik}, so T_w^{-1} = T_{ik}^{-1} ... T_{i1}^{-1}.
        self.group
            .reduced_word(w)
            .iter()
            .rev()
            .fold(self.one(), |acc, &i| self.multiply(&acc, &self.inverse_generator(i)))
    }

    /// The involution `T_w ↦ (-q)^{l(w)} (T_{w^{-1}})^{-1}`.
    pub fn alpha(&self, a: &HeckeElement<F::Elem>) -> HeckeElement<F::Elem> {
        let f = &self.field;
        let mq = f.neg(&f.q());
        let mut out = self.zero();
        for (w, c) in a.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let g = &self.group;
            let scale = f.mul(c, &f.pow(&mq, g.length(w) as i64));
            let img = self.inverse_basis(g.inverse(w));
            for (o, x) in out.coeffs.iter_mut().zip(&img.coeffs) {
                if !f.is_zero(x) {
                    *o = f.add_mul(o, &scale, x);
                }
            }
        }
        out
    }

    /// `α(T_{s_i}) = (q-1) - T_{s_i}`.
    pub fn alpha_generator(&self, i: usize) -> HeckeElement<F::Elem> {
        let f = &self.field;
        let mut a = self.zero();
        a.coeffs[self.group.identity()] = f.sub(&f.q(), &f.one());
        a.coeffs[self.group.mul_s_right(self.group.identity(), i)] = f.neg(&f.one());
        a
    }

    /// The anti-involution `T_w ↦ T_{w^{-1}}`.
    pub fn star(&self, a: &HeckeElement<F::Elem>) -> HeckeElement<F::Elem> {
        let mut out = self.zero();
        for (w, c) in a.coeffs.iter().enumerate() {
            out.coeffs[self.group.inverse(w)] = c.clone();
        }
        out
    }

    /// `x_λ = Σ_{w ∈ S_λ} T_w`.
    pub fn x_lambda(&self, lambda: &Composition) -> HeckeElement<F::Elem> {
        let mut a = self.zero();
        for w in self.group.parabolic_elements(lambda) {
            a.coeffs[w] = self.field.one();
        }
        a
    }

    /// `y_λ = Σ_{w ∈ S_λ} (-q)^{-l(w)} T_w`.
    pub fn y_lambda(&self, lambda: &Composition) -> HeckeElement<F::Elem> {
        let f = &self.field;
        let mq = f.neg(&f.q());
        let mut a = self.zero();
        for w in self.group.parabolic_elements(lambda) {
            a.coeffs[w] = f.pow(&mq, -(self.group.length(w) as i64));
        }
        a
    }

    /// Sum of `T_w` over a set of permutations.
    pub fn sum_of(&self, ws: &[usize]) -> HeckeElement<F::Elem> {
        let mut a = self.zero();
        for &w in ws {
            a.coeffs[w] = self.field.add(&a.coeffs[w], &self.field.one());
        }
        a
    }

    pub fn format(&self, a: &HeckeElement<F::Elem>) -> String {
        let f = &self.field;
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(w, c)| {
                let word: String = self.group.one_line(w).iter().map(|v| (v + 1).to_string()).collect();
                format!("{}*T[{}]", f.format(c), word)
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}
