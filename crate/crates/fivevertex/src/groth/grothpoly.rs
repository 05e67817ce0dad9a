//! The double β-Grothendieck polynomial family.
//!
//! Values are stored as plain polynomials in the atoms (x_1, …, x_{N−1}) and
//! (z_1, …, z_{N−1}); the z-atom stands for the second argument slot, whose
//! canonical meaning is ⊖t_i. All identities stay polynomial this way: with
//! z = ⊖t one has x ⊕ z = x ⊖ t and 1 + β(σ⊖t) = (1+βσ)(1+βz).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::algebra::{AlgebraError, Frac, Poly, Scalar, VarId};

use super::divdiff::{
    divided_difference, x_alphabet, z_alphabet, DivDiff,
};
use super::perm::{Perm, PermError};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GrothError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("polynomial lies outside the module: exponent of x_{0} exceeds {1}")]
    NotInModule(u16, u32),
    #[error("identity failed for {0}: nonzero difference {1}")]
    IdentityFailed(String, String),
}

/// Flavor of the family.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Flavor {
    Standard,
    Dual,
    /// Biaxial with left index v (built by second-slot ∂̄ steps from w).
    Biaxial(Perm),
}

/// A member of the family, with its defining data.
#[derive(Clone, PartialEq, Debug)]
pub struct GrothPoly {
    pub perm: Perm,
    pub n_vars: usize,
    pub flavor: Flavor,
    pub value: Poly,
}

type CacheKey = (usize, u8, Vec<u8>, Vec<u8>);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<Poly>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cache_get(key: &CacheKey) -> Option<Arc<Poly>> {
    cache().lock().unwrap().get(key).cloned()
}

fn cache_put(key: CacheKey, value: Poly) -> Arc<Poly> {
    let arc = Arc::new(value);
    // Insert-once: identical keys always carry identical values.
    cache().lock().unwrap().entry(key).or_insert_with(|| arc.clone()).clone()
}

/// x ⊕ z = x + z + βxz, the polynomial building block of the top product.
fn oplus(x: VarId, z: VarId) -> Poly {
    let (px, pz) = (Poly::var(x), Poly::var(z));
    &(&px + &pz) + &(&(&Poly::var(VarId::beta()) * &px) * &pz)
}

/// The top-cell value ∏_{i+j≤N} (x_i + z_j + β x_i z_j).
pub fn top_product(n: usize) -> Poly {
    let mut out = Poly::one();
    for i in 1..=n as u16 {
        for j in 1..=n as u16 {
            if (i + j) as usize <= n {
                out = &out * &oplus(VarId::x(i), VarId::z(j));
            }
        }
    }
    out
}

fn standard_value(w: &Perm, n: usize, variant: DivDiff) -> Poly {
    let tag = match variant {
        DivDiff::Plain => 0u8,
        DivDiff::Bar => 1u8,
    };
    let key: CacheKey = (n, tag, w.oneline().to_vec(), vec![]);
    if let Some(v) = cache_get(&key) {
        return (*v).clone();
    }
    let value = if *w == Perm::longest(n) {
        top_product(n)
    } else {
        // G_w = ∂_i G_{w s_i} with i the first letter of the canonical
        // reduced word of w^{-1} ω_N.
        let v = w.inverse().compose(&Perm::longest(n)).unwrap();
        let i = v.reduced_word()[0];
        let higher = standard_value(&w.mul_right_simple(i).unwrap(), n, variant);
        divided_difference(&higher, &x_alphabet(n), i, variant)
            .expect("defining numerator is always divisible")
    };
    let arc = cache_put(key, value);
    (*arc).clone()
}

/// G_w as a polynomial in the (x, z) atoms.
pub fn groth_value(w: &Perm, n: usize) -> Poly {
    assert_eq!(w.n(), n);
    standard_value(w, n, DivDiff::Plain)
}

/// Dual-family value (∂̄ recursion from the same top cell).
pub fn dual_value(w: &Perm, n: usize) -> Poly {
    assert_eq!(w.n(), n);
    standard_value(w, n, DivDiff::Bar)
}

/// Biaxial value: second-slot ∂̄ steps applied along a reduced word of v.
pub fn biaxial_value(v: &Perm, w: &Perm, n: usize) -> Poly {
    assert_eq!(w.n(), n);
    assert_eq!(v.n(), n);
    let key: CacheKey = (n, 2, w.oneline().to_vec(), v.oneline().to_vec());
    if let Some(p) = cache_get(&key) {
        return (*p).clone();
    }
    // v s_i with l(v s_i) = l(v) + 1 adds one ∂̄ on the z side, so a reduced
    // word i_1 ⋯ i_p of v applies left-to-right.
    let mut value = groth_value(w, n);
    let zvars = z_alphabet(n);
    for &i in v.reduced_word().iter() {
        value = divided_difference(&value, &zvars, i, DivDiff::Bar)
            .expect("defining numerator is always divisible");
    }
    let arc = cache_put(key, value);
    (*arc).clone()
}

pub fn groth(w: &Perm, n: usize) -> GrothPoly {
    GrothPoly {
        perm: w.clone(),
        n_vars: n,
        flavor: Flavor::Standard,
        value: groth_value(w, n),
    }
}

pub fn groth_variant(w: &Perm, n: usize, flavor: Flavor) -> GrothPoly {
    let value = match &flavor {
        Flavor::Standard => groth_value(w, n),
        Flavor::Dual => dual_value(w, n),
        Flavor::Biaxial(v) => biaxial_value(v, w, n),
    };
    GrothPoly { perm: w.clone(), n_vars: n, flavor, value }
}

/// Specialize β: 0 gives the double Schubert member, −1 the double
/// Grothendieck member.
pub fn specialize_family(g: &GrothPoly, beta_value: i64) -> Poly {
    let mut b = BTreeMap::new();
    b.insert(VarId::beta(), Poly::constant(Scalar::from_integer(beta_value.into())));
    g.value.substitute(&b)
}

/// How to fill one argument slot of a stored value.
#[derive(Clone, Copy, Debug)]
pub enum Slot {
    /// Plain variables of this family, indexed 1, 2, ….
    Plain(crate::algebra::Family),
    /// ⊖(variables) of this family.
    Ominus(crate::algebra::Family),
}

fn slot_binding(atom_family: crate::algebra::Family, n: usize, slot: Slot) -> Vec<(VarId, Frac)> {
    (1..=n as u16)
        .map(|j| {
            let atom = VarId::new(atom_family, j, 0);
            let val = match slot {
                Slot::Plain(fam) => Frac::var(VarId::new(fam, j, 0)),
                Slot::Ominus(fam) => Frac::ominus_var(VarId::new(fam, j, 0)),
            };
            (atom, val)
        })
        .collect()
}

/// Instantiate a stored (x, z)-atom value with arbitrary slot fillings, e.g.
/// G_w(z; ⊖t) or G_w(x; ⊖z). The substitution is simultaneous.
pub fn instantiate(value: &Poly, n: usize, first: Slot, second: Slot) -> Frac {
    let mut bindings: BTreeMap<VarId, Frac> = BTreeMap::new();
    for (v, f) in slot_binding(crate::algebra::Family::X, n, first) {
        bindings.insert(v, f);
    }
    for (v, f) in slot_binding(crate::algebra::Family::Z, n, second) {
        bindings.insert(v, f);
    }
    Frac::from_poly(value.clone())
        .substitute(&bindings)
        .expect("slot fillings stay structured")
}

/// G_w(σ_plain; ⊖t): the form produced by the B-operator expansions.
pub fn groth_sigma_t(w: &Perm, n: usize) -> Frac {
    use crate::algebra::Family;
    let value = groth_value(w, n);
    let mut bindings: BTreeMap<VarId, Frac> = BTreeMap::new();
    for j in 1..=n as u16 {
        bindings.insert(VarId::x(j), Frac::var(VarId::sigma_plain(j)));
        bindings.insert(VarId::new(Family::Z, j, 0), Frac::ominus_var(VarId::t(j)));
    }
    Frac::from_poly(value)
        .substitute(&bindings)
        .expect("slot fillings stay structured")
}

/// G_w(x; ⊖t) as a structured fraction.
pub fn groth_x_t(w: &Perm, n: usize) -> Frac {
    use crate::algebra::Family;
    instantiate(&groth_value(w, n), n, Slot::Plain(Family::X), Slot::Ominus(Family::T))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Family;

    fn p(digits: &[u8]) -> Perm {
        Perm::from_oneline(digits.to_vec()).unwrap()
    }

    #[test]
    fn identity_value_is_one() {
        assert!(groth_value(&Perm::identity(3), 3).is_one());
    }

    #[test]
    fn simple_transposition_value() {
        // G_{213} = x_1 + z_1 + β x_1 z_1.
        let g = groth_value(&p(&[2, 1, 3]), 3);
        assert_eq!(g, oplus(VarId::x(1), VarId::z(1)));
    }

    #[test]
    fn longest_in_s3() {
        let g = groth_value(&p(&[3, 2, 1]), 3);
        let expected = &(&oplus(VarId::x(1), VarId::z(1)) * &oplus(VarId::x(1), VarId::z(2)))
            * &oplus(VarId::x(2), VarId::z(1));
        assert_eq!(g, expected);
    }

    #[test]
    fn divdiff_step_between_members() {
        // ∂_1 G_{ω_3} = G_{(231)} = (x_1 ⊕ z_1)(x_2 ⊕ z_1).
        let top = groth_value(&Perm::longest(3), 3);
        let d = divided_difference(&top, &x_alphabet(3), 1, DivDiff::Plain).unwrap();
        let expected = &oplus(VarId::x(1), VarId::z(1)) * &oplus(VarId::x(2), VarId::z(1));
        assert_eq!(d, expected);
        assert_eq!(d, groth_value(&p(&[2, 3, 1]), 3));
    }

    #[test]
    fn beta_zero_specialization() {
        let g = groth(&p(&[2, 1, 3]), 3);
        let s = specialize_family(&g, 0);
        assert_eq!(s, &Poly::var(VarId::x(1)) + &Poly::var(VarId::z(1)));
        let id = groth(&Perm::identity(4), 4);
        assert!(specialize_family(&id, -1).is_one());
    }

    #[test]
    fn beta_zero_longest_is_schubert_product() {
        let g = groth(&p(&[3, 2, 1]), 3);
        let s = specialize_family(&g, 0);
        let lin = |i: u16, j: u16| &Poly::var(VarId::x(i)) + &Poly::var(VarId::z(j));
        let expected = &(&lin(1, 1) * &lin(1, 2)) * &lin(2, 1);
        assert_eq!(s, expected);
    }

    #[test]
    fn dual_top_agrees_with_standard() {
        assert_eq!(dual_value(&Perm::longest(3), 3), groth_value(&Perm::longest(3), 3));
    }

    #[test]
    fn biaxial_identity_left_index() {
        let w = p(&[3, 1, 2]);
        assert_eq!(biaxial_value(&Perm::identity(3), &w, 3), groth_value(&w, 3));
    }

    #[test]
    fn biaxial_one_step_in_s2() {
        // ∂̄ on the z-side of x_1 ⊕ z_1 gives (1+βx_1)(1+βz_1).
        let v = p(&[2, 1]);
        let w = Perm::longest(2);
        let got = biaxial_value(&v, &w, 2);
        let b = Poly::var(VarId::beta());
        let f = |u: VarId| &Poly::one() + &(&b * &Poly::var(u));
        assert_eq!(got, &f(VarId::x(1)) * &f(VarId::z(1)));
    }

    #[test]
    fn instantiate_sigma_ominus_t() {
        // G_{213}(σ;⊖t) = σ_1 ⊖ t_1.
        let g = groth_sigma_t(&p(&[2, 1, 3]), 3);
        assert_eq!(g, Frac::ominus(VarId::sigma_plain(1), VarId::t(1)));
    }

    #[test]
    fn instantiate_x_ominus_z() {
        // G_{21}(x;⊖z) = x_1 ⊖ z_1.
        let val = groth_value(&p(&[2, 1]), 2);
        let f = instantiate(&val, 2, Slot::Plain(Family::X), Slot::Ominus(Family::Z));
        assert_eq!(f, Frac::ominus(VarId::x(1), VarId::z(1)));
    }
}
