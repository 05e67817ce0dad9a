//! β-divided difference operators over an ordered alphabet.
//!
//! For an alphabet (v_1, …, v_N) the operator acts as
//!
//! ```text
//! ∂_i f = [(1 + β v_{i+1}) f − (1 + β v_i) (s_i f)] / (v_i − v_{i+1})
//! ```
//!
//! where s_i exchanges v_i and v_{i+1}. The companion operator is
//! ∂̄_i = ∂_i + β. The internal division is always exact; a remainder
//! indicates a caller bug and is surfaced as `NotDivisible`.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraError, Frac, Poly, VarId};

use super::perm::Perm;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DivDiff {
    /// ∂_i.
    Plain,
    /// ∂̄_i = ∂_i + β.
    Bar,
}

fn one_plus_beta(v: VarId) -> Poly {
    &Poly::one() + &(&Poly::var(VarId::beta()) * &Poly::var(v))
}

/// Apply ∂_i (or ∂̄_i) to a polynomial; `i` is 1-based, needs i+1 ≤ |vars|.
pub fn divided_difference(
    f: &Poly,
    vars: &[VarId],
    i: usize,
    variant: DivDiff,
) -> Result<Poly, AlgebraError> {
    assert!(i >= 1 && i < vars.len(), "index {i} out of range");
    let (a, b) = (vars[i - 1], vars[i]);
    let swapped = f.swap_vars(a, b);
    let num = &(&one_plus_beta(b) * f) - &(&one_plus_beta(a) * &swapped);
    let den = &Poly::var(a) - &Poly::var(b);
    let mut out = num.exact_div(&den)?;
    if variant == DivDiff::Bar {
        out.add_assign(&(&Poly::var(VarId::beta()) * f));
    }
    Ok(out)
}

/// Apply a word of operators; the rightmost letter acts first, matching the
/// composition ∂_{i_1} ∂_{i_2} ⋯ ∂_{i_l}.
pub fn divided_difference_word(
    f: &Poly,
    vars: &[VarId],
    word: &[usize],
    variant: DivDiff,
) -> Result<Poly, AlgebraError> {
    let mut out = f.clone();
    for &i in word.iter().rev() {
        out = divided_difference(&out, vars, i, variant)?;
    }
    Ok(out)
}

/// ∂_w (resp. ∂̄_w) along the canonical reduced word of `w`. Well defined by
/// the braid relations, which the test suite checks.
pub fn divided_difference_perm(
    f: &Poly,
    vars: &[VarId],
    w: &Perm,
    variant: DivDiff,
) -> Result<Poly, AlgebraError> {
    divided_difference_word(f, vars, &w.reduced_word(), variant)
}

/// Divided difference on a fraction whose denominator does not involve the
/// two active variables (the only case the model needs).
pub fn divided_difference_frac(
    f: &Frac,
    vars: &[VarId],
    i: usize,
    variant: DivDiff,
) -> Result<Frac, AlgebraError> {
    let (a, b) = (vars[i - 1], vars[i]);
    if f.den_factors().contains_key(&a) || f.den_factors().contains_key(&b) {
        return Err(AlgebraError::NotStructured(
            "divided difference across a denominator variable".into(),
        ));
    }
    let num = divided_difference(f.num(), vars, i, variant)?;
    Ok(Frac::new(num, f.den_factors().clone()))
}

pub fn divided_difference_frac_word(
    f: &Frac,
    vars: &[VarId],
    word: &[usize],
    variant: DivDiff,
) -> Result<Frac, AlgebraError> {
    let mut out = f.clone();
    for &i in word.iter().rev() {
        out = divided_difference_frac(&out, vars, i, variant)?;
    }
    Ok(out)
}

pub fn divided_difference_frac_perm(
    f: &Frac,
    vars: &[VarId],
    w: &Perm,
    variant: DivDiff,
) -> Result<Frac, AlgebraError> {
    divided_difference_frac_word(f, vars, &w.reduced_word(), variant)
}

/// The x-alphabet (x_1, …, x_N).
pub fn x_alphabet(n: usize) -> Vec<VarId> {
    (1..=n as u16).map(VarId::x).collect()
}

/// The z-alphabet (z_1, …, z_N).
pub fn z_alphabet(n: usize) -> Vec<VarId> {
    (1..=n as u16).map(VarId::z).collect()
}

/// The σ^(s) alphabet (σ^(s)_1, …, σ^(s)_k); level 0 gives plain σ_a.
pub fn sigma_alphabet(level: u16, k: usize) -> Vec<VarId> {
    (1..=k as u16).map(|a| VarId::sigma(level, a)).collect()
}

/// Convenience: simultaneous polynomial substitution map from pairs.
pub fn binding(pairs: Vec<(VarId, Poly)>) -> BTreeMap<VarId, Poly> {
    pairs.into_iter().collect()
}
