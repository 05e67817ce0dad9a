//! The Cauchy identity for the family, and interpolation in the module
//! L_n = span{ x^i : i_j ≤ n−j }.

use std::collections::BTreeMap;

use crate::algebra::{Family, Frac, Poly, VarId};

use super::divdiff::{divided_difference_frac_perm, divided_difference_word, z_alphabet, DivDiff};
use super::grothpoly::{groth_value, instantiate, GrothError, Slot};
use super::perm::Perm;

/// One summand of the Cauchy expansion.
#[derive(Clone, Debug)]
pub struct CauchySummand {
    pub v: Perm,
    /// G_v(x;⊖z).
    pub left: Frac,
    /// ∂̄_v G_w(z;⊖t).
    pub right: Frac,
}

#[derive(Clone, Debug)]
pub struct CauchyCertificate {
    pub w: Perm,
    pub lhs: Frac,
    pub summands: Vec<CauchySummand>,
}

/// Check G_w(x;⊖t) = Σ_v G_v(x;⊖z) ∂̄_v G_w(z;⊖t) exactly.
pub fn cauchy_check(w: &Perm, n: usize) -> Result<CauchyCertificate, GrothError> {
    let lhs = instantiate(&groth_value(w, n), n, Slot::Plain(Family::X), Slot::Ominus(Family::T));
    let w_z_t = instantiate(&groth_value(w, n), n, Slot::Plain(Family::Z), Slot::Ominus(Family::T));
    let zvars = z_alphabet(n);

    let mut summands = Vec::new();
    let mut rhs = Frac::zero();
    for v in Perm::all(n) {
        let left =
            instantiate(&groth_value(&v, n), n, Slot::Plain(Family::X), Slot::Ominus(Family::Z));
        let right = divided_difference_frac_perm(&w_z_t, &zvars, &v, DivDiff::Bar)?;
        rhs = &rhs + &(&left * &right);
        summands.push(CauchySummand { v, left, right });
    }

    if rhs != lhs {
        let diff = &rhs - &lhs;
        return Err(GrothError::IdentityFailed(
            format!("cauchy w={w}"),
            format!("{diff:?}"),
        ));
    }
    Ok(CauchyCertificate { w: w.clone(), lhs, summands })
}

/// Coefficients {∂̄_v F(z)} of the expansion F = Σ_v G_v(x;⊖z) coeff_v.
/// `NotInModule` if some exponent of x_j exceeds n−j.
pub fn interpolate(f: &Poly, n: usize) -> Result<BTreeMap<Perm, Poly>, GrothError> {
    for j in 1..=n as u16 {
        let bound = (n as u32) - (j as u32);
        let got = f.max_exponent(VarId::x(j));
        if got > bound {
            return Err(GrothError::NotInModule(j, got));
        }
    }
    // Rename x -> z, then divided-difference in the z alphabet.
    let mut rename = BTreeMap::new();
    for j in 1..=n as u16 {
        rename.insert(VarId::x(j), Poly::var(VarId::z(j)));
    }
    let f_z = f.substitute(&rename);
    let zvars = z_alphabet(n);

    let mut out = BTreeMap::new();
    for v in Perm::all(n) {
        let coeff = divided_difference_word(&f_z, &zvars, &v.reduced_word(), DivDiff::Bar)?;
        out.insert(v, coeff);
    }
    Ok(out)
}

/// Σ_v G_v(x;⊖z)·coeff_v, for round-trip checks.
pub fn reassemble(coeffs: &BTreeMap<Perm, Poly>, n: usize) -> Frac {
    let mut acc = Frac::zero();
    for (v, c) in coeffs {
        let g = instantiate(&groth_value(v, n), n, Slot::Plain(Family::X), Slot::Ominus(Family::Z));
        acc = &acc + &g.mul_poly(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cauchy_identity_n2() {
        for v in Perm::all(2) {
            cauchy_check(&v, 2).unwrap();
        }
    }

    #[test]
    fn cauchy_telescopes_for_s2_longest() {
        // (z1 ⊖ t1) + (x1 ⊖ z1)(1 + β(z1 ⊖ t1)) = x1 ⊖ t1.
        let cert = cauchy_check(&Perm::longest(2), 2).unwrap();
        assert_eq!(cert.lhs, Frac::ominus(VarId::x(1), VarId::t(1)));
        let id_term = &cert.summands[0];
        assert!(id_term.v.is_identity());
        assert!(id_term.left.is_one());
        assert_eq!(id_term.right, Frac::ominus(VarId::z(1), VarId::t(1)));
    }

    #[test]
    fn interpolate_constant() {
        let coeffs = interpolate(&Poly::one(), 3).unwrap();
        for (v, c) in &coeffs {
            if v.is_identity() {
                assert!(c.is_one());
            } else {
                assert!(c.is_zero(), "coefficient of {v} should vanish");
            }
        }
    }

    #[test]
    fn interpolate_x1_in_l2() {
        let coeffs = interpolate(&Poly::var(VarId::x(1)), 2).unwrap();
        let id = Perm::identity(2);
        let w0 = Perm::longest(2);
        assert_eq!(coeffs[&id], Poly::var(VarId::z(1)));
        let b = Poly::var(VarId::beta());
        assert_eq!(coeffs[&w0], &Poly::one() + &(&b * &Poly::var(VarId::z(1))));
        let back = reassemble(&coeffs, 2);
        assert_eq!(back, Frac::var(VarId::x(1)));
    }

    #[test]
    fn not_in_module_detected() {
        let p = Poly::var(VarId::x(1)).pow(2);
        assert!(matches!(interpolate(&p, 2), Err(GrothError::NotInModule(1, 2))));
    }
}
