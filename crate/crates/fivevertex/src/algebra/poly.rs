//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Monomials are compared lexicographically along the total variable order,
//! and terms are stored in a `BTreeMap` keyed by that order, so every
//! polynomial has one canonical representation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{ToPrimitive, Zero};
use smallvec::SmallVec;

use super::{AlgebraError, ComplexNum, Scalar, VarId};

/// A monomial: variables with positive exponents, sorted by `VarId`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(SmallVec<[(VarId, u32); 4]>);

impl Mono {
    pub fn one() -> Self {
        Mono(SmallVec::new())
    }

    pub fn var(v: VarId) -> Self {
        Mono(smallvec::smallvec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(VarId, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        let mut out: SmallVec<[(VarId, u32); 4]> = SmallVec::new();
        for (v, e) in pairs {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        Mono(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(VarId, u32)> {
        self.0.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out: SmallVec<[(VarId, u32); 4]> = SmallVec::new();
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(&&(v, e)), None) => {
                    out.push((v, e));
                    a.next();
                }
                (None, Some(&&(v, e))) => {
                    out.push((v, e));
                    b.next();
                }
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
            }
        }
        Mono(out)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`. Caller must ensure divisibility.
    pub fn div_into(&self, other: &Mono) -> Mono {
        let mut out: SmallVec<[(VarId, u32); 4]> = SmallVec::new();
        for &(v, e) in other.0.iter() {
            let d = e - self.exponent(v);
            if d > 0 {
                out.push((v, d));
            }
        }
        Mono(out)
    }

    /// Exchange two variable names.
    pub fn swap_vars(&self, a: VarId, b: VarId) -> Mono {
        let pairs = self
            .0
            .iter()
            .map(|&(v, e)| {
                let w = if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                };
                (w, e)
            })
            .collect();
        Mono::from_pairs(pairs)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    /// Lexicographic order: the first variable (in the `VarId` order) with
    /// differing exponents decides, larger exponent first.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0.iter(), other.0.iter());
        let (mut x, mut y) = (a.next(), b.next());
        loop {
            match (x, y) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        x = a.next();
                        y = b.next();
                    }
                },
            }
        }
    }
}

/// A sparse multivariate polynomial. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(super::scalar_one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(super::scalar(n))
    }

    pub fn var(v: VarId) -> Self {
        Poly::from_term(Mono::var(v), super::scalar_one())
    }

    pub fn from_term(m: Mono, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::one())
                .map(|c| *c == super::scalar_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::one()))
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(super::scalar_zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    /// Terms in canonical order, leading term first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Mono, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Mono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(super::scalar_zero)
    }

    fn insert_add(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in other.terms.iter() {
            self.insert_add(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Poly) {
        for (m, c) in other.terms.iter() {
            self.insert_add(m.clone(), -c.clone());
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Exact division; `NotDivisible` if the remainder is nonzero.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly, AlgebraError> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (dm, dc) = d.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return Err(AlgebraError::NotDivisible);
            }
            let qm = dm.div_into(rm);
            let qc = rc.clone() / dc.clone();
            let t = Poly::from_term(qm.clone(), qc.clone());
            rem.sub_assign(&d.mul_mono(&qm, &qc));
            quot.add_assign(&t);
        }
        Ok(quot)
    }

    /// Exchange two variable names everywhere.
    pub fn swap_vars(&self, a: VarId, b: VarId) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms.iter() {
            out.insert_add(m.swap_vars(a, b), c.clone());
        }
        out
    }

    /// Simultaneous substitution of variables by polynomials. Unbound
    /// variables stay as themselves.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, Poly>) -> Poly {
        let mut powers: BTreeMap<(VarId, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in self.terms.iter() {
            let mut term = Poly::constant(c.clone());
            for &(v, e) in m.iter() {
                match bindings.get(&v) {
                    None => term = term.mul_mono(&Mono::from_pairs(vec![(v, e)]), &super::scalar_one()),
                    Some(p) => {
                        let pe = powers
                            .entry((v, e))
                            .or_insert_with(|| p.pow(e))
                            .clone();
                        term = &term * &pe;
                    }
                }
            }
            out.add_assign(&term);
        }
        out
    }

    /// All variables appearing in the polynomial.
    pub fn vars(&self) -> Vec<VarId> {
        let mut set = std::collections::BTreeSet::new();
        for (m, _) in self.terms.iter() {
            for &(v, _) in m.iter() {
                set.insert(v);
            }
        }
        set.into_iter().collect()
    }

    pub fn max_exponent(&self, v: VarId) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Whether every monomial has the same total degree (zero counts as
    /// homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Collect coefficients of powers of `v`: index i holds the coefficient
    /// polynomial of v^i.
    pub fn coefficients_of(&self, v: VarId) -> Vec<Poly> {
        let deg = self.max_exponent(v) as usize;
        let mut out = vec![Poly::zero(); deg + 1];
        for (m, c) in self.terms.iter() {
            let e = m.exponent(v) as usize;
            let rest = Mono::from_pairs(
                m.iter()
                    .filter(|&&(w, _)| w != v)
                    .cloned()
                    .collect::<Vec<_>>(),
            );
            out[e].insert_add(rest, c.clone());
        }
        out
    }

    /// Evaluate numerically with the given assignment.
    pub fn eval_complex<F>(&self, assign: &F) -> ComplexNum
    where
        F: Fn(VarId) -> ComplexNum,
    {
        let mut acc = ComplexNum::new(0.0, 0.0);
        for (m, c) in self.terms.iter() {
            let mut t = scalar_to_complex(c);
            for &(v, e) in m.iter() {
                t *= assign(v).powu(e);
            }
            acc += t;
        }
        acc
    }
}

pub(crate) fn scalar_to_complex(c: &Scalar) -> ComplexNum {
    let num = c.numer().to_f64().unwrap_or(f64::NAN);
    let den = c.denom().to_f64().unwrap_or(f64::NAN);
    ComplexNum::new(num / den, 0.0)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // Iterate over the smaller factor in the outer loop.
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = Poly::zero();
        for (m1, c1) in small.terms.iter() {
            for (m2, c2) in big.terms.iter() {
                out.insert_add(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::{scalar, VarId};
    use super::*;

    fn x(i: u16) -> Poly {
        Poly::var(VarId::x(i))
    }

    #[test]
    fn monomial_order_is_lex() {
        let x1 = Mono::var(VarId::x(1));
        let x2 = Mono::var(VarId::x(2));
        let x1x1 = x1.mul(&x1);
        let x1x2 = x1.mul(&x2);
        assert!(x1x1 > x1x2); // x1^2 > x1 x2
        assert!(x1x2 > x2.mul(&x2)); // x1 x2 > x2^2
        assert!(x1 > x2);
        assert!(x1x1 > x1);
    }

    #[test]
    fn difference_of_squares_divides() {
        let p = &(&x(1) * &x(1)) - &(&x(2) * &x(2));
        let d = &x(1) - &x(2);
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, &x(1) + &x(2));
    }

    #[test]
    fn non_divisible_pair_errors() {
        let p = &x(1) - &x(2);
        let d = &x(1) - &Poly::var(VarId::x(3));
        assert_eq!(p.exact_div(&d), Err(AlgebraError::NotDivisible));
    }

    #[test]
    fn mul_div_roundtrip() {
        let p = &(&x(1) + &Poly::int(3)) * &(&x(2) - &x(1));
        let d = &x(2) - &x(1);
        assert_eq!(p.exact_div(&d).unwrap(), &x(1) + &Poly::int(3));
    }

    #[test]
    fn substitution_is_simultaneous() {
        // x1 -> x2, x2 -> x1 swaps rather than collapsing.
        let p = &x(1) - &(&x(2) * &x(2));
        let mut b = BTreeMap::new();
        b.insert(VarId::x(1), x(2));
        b.insert(VarId::x(2), x(1));
        let q = p.substitute(&b);
        assert_eq!(q, &x(2) - &(&x(1) * &x(1)));
    }

    #[test]
    fn coefficients_of_var() {
        // (x1 + 1)^2 in terms of x1: [1, 2, 1].
        let p = (&x(1) + &Poly::one()).pow(2);
        let cs = p.coefficients_of(VarId::x(1));
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], Poly::one());
        assert_eq!(cs[1], Poly::constant(scalar(2)));
        assert_eq!(cs[2], Poly::one());
    }
}
