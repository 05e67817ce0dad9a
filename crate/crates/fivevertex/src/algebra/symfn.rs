//! Elementary symmetric polynomials and rewriting symmetric polynomials in
//! the elementary basis (fundamental theorem of symmetric polynomials, by
//! lexicographic leading-term reduction).



use super::{AlgebraError, Mono, Poly, VarId};

/// e_l(vars). Returns 0 for l > |vars| and 1 for l = 0.
pub fn elementary_symmetric(vars: &[VarId], l: usize) -> Poly {
    if l > vars.len() {
        return Poly::zero();
    }
    // Row i of the DP: e_i of the prefix processed so far.
    let mut e = vec![Poly::zero(); l + 1];
    e[0] = Poly::one();
    for &v in vars {
        let vp = Poly::var(v);
        for i in (1..=l).rev() {
            let bump = &e[i - 1] * &vp;
            e[i].add_assign(&bump);
        }
    }
    e.pop().unwrap()
}

/// Split a monomial into its profile on `vars` (exponent per variable, in
/// the given order) and the spectator remainder.
fn split_mono(m: &Mono, vars: &[VarId]) -> (Vec<u32>, Mono) {
    let profile: Vec<u32> = vars.iter().map(|&v| m.exponent(v)).collect();
    let rest = Mono::from_pairs(
        m.iter()
            .filter(|(v, _)| !vars.contains(v))
            .cloned()
            .collect(),
    );
    (profile, rest)
}

/// Rewrite a polynomial symmetric in `vars` as a polynomial in the fresh
/// names `e_names` (standing for e_1, …, e_k of `vars`) and the untouched
/// spectator variables.
///
/// Substituting `e_names[l-1] -> e_l(vars)` into the output reproduces the
/// input exactly; `NotSymmetric` if the symmetry precondition fails.
pub fn rewrite_in_elementary(
    p: &Poly,
    vars: &[VarId],
    e_names: &[VarId],
) -> Result<Poly, AlgebraError> {
    assert_eq!(vars.len(), e_names.len(), "one name per elementary degree");
    let k = vars.len();
    if k == 0 {
        return Ok(p.clone());
    }
    // Adjacent transpositions generate the full symmetric group on `vars`.
    for i in 0..k - 1 {
        if p.swap_vars(vars[i], vars[i + 1]) != *p {
            return Err(AlgebraError::NotSymmetric);
        }
    }

    let mut rem = p.clone();
    let mut out = Poly::zero();
    loop {
        // Leading profile: the lexicographically largest exponent vector on
        // `vars` present in the remainder.
        let mut lead: Option<Vec<u32>> = None;
        for (m, _) in rem.terms() {
            let (profile, _) = split_mono(m, vars);
            if lead.as_ref().map(|l| profile > *l).unwrap_or(true) {
                lead = Some(profile);
            }
        }
        let lead = match lead {
            None => break,
            Some(l) => l,
        };
        if lead.iter().all(|&e| e == 0) {
            // Remaining terms are spectator-only.
            out.add_assign(&rem);
            break;
        }
        // Symmetry makes the leading profile weakly decreasing.
        debug_assert!(lead.windows(2).all(|w| w[0] >= w[1]));

        // Spectator coefficient of the leading profile.
        let mut coeff = Poly::zero();
        for (m, c) in rem.terms() {
            let (profile, rest) = split_mono(m, vars);
            if profile == lead {
                coeff.add_assign(&Poly::from_term(rest, c.clone()));
            }
        }

        // lead = (a_1 >= ... >= a_k) maps to ∏ e_l^{a_l - a_{l+1}}.
        let mut basis_actual = Poly::one();
        let mut basis_named = Poly::one();
        for l in 1..=k {
            let next = if l < k { lead[l] } else { 0 };
            let exp = lead[l - 1] - next;
            if exp > 0 {
                basis_actual = &basis_actual * &elementary_symmetric(vars, l).pow(exp);
                basis_named = &basis_named * &Poly::var(e_names[l - 1]).pow(exp);
            }
        }
        rem.sub_assign(&(&coeff * &basis_actual));
        out.add_assign(&(&coeff * &basis_named));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{scalar, VarId};
    use super::*;

    fn xs(n: u16) -> Vec<VarId> {
        (1..=n).map(VarId::x).collect()
    }

    fn es(n: u16) -> Vec<VarId> {
        (1..=n).map(|l| VarId::eta(0, l)).collect()
    }

    #[test]
    fn e2_of_three() {
        let e2 = elementary_symmetric(&xs(3), 2);
        let x = |i| Poly::var(VarId::x(i));
        let expected = &(&(&x(1) * &x(2)) + &(&x(1) * &x(3))) + &(&x(2) * &x(3));
        assert_eq!(e2, expected);
    }

    #[test]
    fn e0_is_one_and_overflow_is_zero() {
        assert_eq!(elementary_symmetric(&xs(3), 0), Poly::one());
        assert_eq!(elementary_symmetric(&xs(2), 4), Poly::zero());
    }

    #[test]
    fn power_sum_in_elementary_basis() {
        // x1^2 + x2^2 = E1^2 - 2 E2.
        let x = |i| Poly::var(VarId::x(i));
        let p = &(&x(1) * &x(1)) + &(&x(2) * &x(2));
        let out = rewrite_in_elementary(&p, &xs(2), &es(2)).unwrap();
        let e1 = Poly::var(VarId::eta(0, 1));
        let e2 = Poly::var(VarId::eta(0, 2));
        let expected = &(&e1 * &e1) - &e2.scale(&scalar(2));
        assert_eq!(out, expected);
    }

    #[test]
    fn basis_element_maps_to_name() {
        let p = elementary_symmetric(&xs(3), 2);
        let out = rewrite_in_elementary(&p, &xs(3), &es(3)).unwrap();
        assert_eq!(out, Poly::var(VarId::eta(0, 2)));
    }

    #[test]
    fn antisymmetric_input_rejected() {
        let x = |i| Poly::var(VarId::x(i));
        let p = &x(1) - &x(2);
        assert_eq!(
            rewrite_in_elementary(&p, &xs(2), &es(2)),
            Err(AlgebraError::NotSymmetric)
        );
    }

    #[test]
    fn roundtrip_with_spectators() {
        // (x1+x2)^2 * t1 + x1 x2 β rewrites and substitutes back exactly.
        let x = |i| Poly::var(VarId::x(i));
        let p = &(&(&x(1) + &x(2)).pow(2) * &Poly::var(VarId::t(1)))
            + &(&(&x(1) * &x(2)) * &Poly::var(VarId::beta()));
        let out = rewrite_in_elementary(&p, &xs(2), &es(2)).unwrap();
        let mut back = std::collections::BTreeMap::new();
        back.insert(VarId::eta(0, 1), elementary_symmetric(&xs(2), 1));
        back.insert(VarId::eta(0, 2), elementary_symmetric(&xs(2), 2));
        assert_eq!(out.substitute(&back), p);
    }
}
