//! JSON schema for polynomials and structured fractions.
//!
//! ```json
//! {"vars":[{"family":"x","level":1,"pos":0}],
//!  "terms":[{"num":"-3","den":"2","exps":{"x.1":2,"beta.0":1}}],
//!  "denfactors":{"t.2":1}}
//! ```
//!
//! Integers are decimal strings; terms appear in canonical monomial order,
//! leading term first. `denfactors` is omitted for plain polynomials.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Frac, Mono, Poly, Scalar, VarId};

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct JsonVar {
    pub family: String,
    pub level: u16,
    pub pos: u16,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct JsonTerm {
    pub num: String,
    pub den: String,
    pub exps: BTreeMap<String, u32>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct JsonPoly {
    pub vars: Vec<JsonVar>,
    pub terms: Vec<JsonTerm>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub denfactors: BTreeMap<String, u32>,
}

fn var_to_json(v: VarId) -> JsonVar {
    JsonVar {
        family: v.family.text_name().to_string(),
        level: v.level,
        pos: v.pos,
    }
}

fn mono_to_exps(m: &Mono) -> BTreeMap<String, u32> {
    m.iter().map(|&(v, e)| (v.json_key(), e)).collect()
}

fn poly_to_terms(p: &Poly) -> Vec<JsonTerm> {
    p.terms_desc()
        .map(|(m, c)| JsonTerm {
            num: c.numer().to_string(),
            den: c.denom().to_string(),
            exps: mono_to_exps(m),
        })
        .collect()
}

pub fn poly_to_json(p: &Poly) -> JsonPoly {
    JsonPoly {
        vars: p.vars().into_iter().map(var_to_json).collect(),
        terms: poly_to_terms(p),
        denfactors: BTreeMap::new(),
    }
}

/// A `Frac` with empty denominator serializes identically to its numerator
/// polynomial.
pub fn frac_to_json(f: &Frac) -> JsonPoly {
    let mut vars: std::collections::BTreeSet<VarId> = f.num().vars().into_iter().collect();
    for (&v, _) in f.den_factors() {
        vars.insert(v);
        vars.insert(VarId::beta());
    }
    JsonPoly {
        vars: vars.into_iter().map(var_to_json).collect(),
        terms: poly_to_terms(f.num()),
        denfactors: f
            .den_factors()
            .iter()
            .map(|(&v, &e)| (v.json_key(), e))
            .collect(),
    }
}

fn parse_err(msg: impl Into<String>) -> serde_json::Error {
    serde::de::Error::custom(msg.into())
}

fn terms_to_poly(terms: &[JsonTerm]) -> Result<Poly, serde_json::Error> {
    let mut out = Poly::zero();
    for t in terms {
        let num = BigInt::from_str(&t.num).map_err(|e| parse_err(e.to_string()))?;
        let den = BigInt::from_str(&t.den).map_err(|e| parse_err(e.to_string()))?;
        let coeff = Scalar::new(num, den);
        let mut pairs = Vec::new();
        for (key, &e) in &t.exps {
            let v = VarId::parse_json_key(key)
                .ok_or_else(|| parse_err(format!("bad variable key {key:?}")))?;
            pairs.push((v, e));
        }
        out.add_assign(&Poly::from_term(Mono::from_pairs(pairs), coeff));
    }
    Ok(out)
}

pub fn poly_from_json(j: &JsonPoly) -> Result<Poly, serde_json::Error> {
    if !j.denfactors.is_empty() {
        return Err(parse_err("expected a plain polynomial, found denfactors"));
    }
    terms_to_poly(&j.terms)
}

pub fn frac_from_json(j: &JsonPoly) -> Result<Frac, serde_json::Error> {
    let num = terms_to_poly(&j.terms)?;
    let mut den = BTreeMap::new();
    for (key, &e) in &j.denfactors {
        let v = VarId::parse_json_key(key)
            .ok_or_else(|| parse_err(format!("bad variable key {key:?}")))?;
        den.insert(v, e);
    }
    Ok(Frac::new(num, den))
}
