//! Text and LaTeX rendering of polynomials and fractions.
//!
//! In ominus display mode the z-atoms print as ⊖t_i (their canonical
//! meaning); in atom mode they print as z_i.

use std::fmt::Write;

use num_traits::{One, Signed};

use super::{Family, Frac, Poly, Scalar, VarId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisplayMode {
    pub latex: bool,
    /// Print z_i as ⊖t_i.
    pub ominus_t: bool,
}

impl Default for DisplayMode {
    fn default() -> Self {
        DisplayMode { latex: false, ominus_t: true }
    }
}

impl DisplayMode {
    pub fn text() -> Self {
        DisplayMode { latex: false, ominus_t: true }
    }

    pub fn latex() -> Self {
        DisplayMode { latex: true, ominus_t: true }
    }

    pub fn atoms() -> Self {
        DisplayMode { latex: false, ominus_t: false }
    }
}

fn var_string(v: VarId, mode: DisplayMode) -> String {
    let sub = |l: u16| l.to_string();
    if mode.latex {
        match v.family {
            Family::Beta => "\\beta".to_string(),
            Family::X => format!("x_{{{}}}", sub(v.level)),
            Family::Sigma => {
                if v.level == 0 {
                    format!("\\sigma_{{{}}}", v.pos)
                } else {
                    format!("\\sigma^{{({})}}_{{{}}}", v.level, v.pos)
                }
            }
            Family::T => format!("t_{{{}}}", v.level),
            Family::Z => {
                if mode.ominus_t {
                    format!("\\ominus t_{{{}}}", v.level)
                } else {
                    format!("z_{{{}}}", v.level)
                }
            }
            Family::Q => format!("q_{{{}}}", v.level),
            Family::U => {
                if v.pos == 0 {
                    "u".to_string()
                } else {
                    format!("u_{{{}}}", v.pos)
                }
            }
            Family::Lambda => "\\lambda".to_string(),
            Family::Eta => format!("\\eta^{{({})}}_{{{}}}", v.level, v.pos),
            Family::BigX => format!("X^{{({})}}_{{{}}}", v.level, v.pos),
            Family::BigY => format!("Y^{{({})}}_{{{}}}", v.level, v.pos),
        }
    } else {
        match v.family {
            Family::Beta => "beta".to_string(),
            Family::X => format!("x{}", v.level),
            Family::Sigma => {
                if v.level == 0 {
                    format!("sigma{}", v.pos)
                } else {
                    format!("sigma^({})_{}", v.level, v.pos)
                }
            }
            Family::T => format!("t{}", v.level),
            Family::Z => {
                if mode.ominus_t {
                    format!("(-)t{}", v.level)
                } else {
                    format!("z{}", v.level)
                }
            }
            Family::Q => format!("q{}", v.level),
            Family::U => {
                if v.pos == 0 {
                    "u".to_string()
                } else {
                    format!("u{}", v.pos)
                }
            }
            Family::Lambda => "lambda".to_string(),
            Family::Eta => format!("eta^({})_{}", v.level, v.pos),
            Family::BigX => format!("X^({})_{}", v.level, v.pos),
            Family::BigY => format!("Y^({})_{}", v.level, v.pos),
        }
    }
}

fn scalar_string(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders a polynomial, leading term first.
pub struct PolyDisplay;

impl PolyDisplay {
    pub fn poly(p: &Poly, mode: DisplayMode) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mul = if mode.latex { " " } else { "*" };
        for (idx, (m, c)) in p.terms_desc().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(scalar_string(&abs));
            }
            for &(v, e) in m.iter() {
                let vs = var_string(v, mode);
                if e == 1 {
                    factors.push(vs);
                } else if mode.latex {
                    factors.push(format!("{vs}^{{{e}}}"));
                } else {
                    factors.push(format!("{vs}^{e}"));
                }
            }
            out.push_str(&factors.join(mul));
        }
        out
    }

    pub fn frac(f: &Frac, mode: DisplayMode) -> String {
        let num = Self::poly(f.num(), mode);
        if f.is_poly() {
            return num;
        }
        let mut den = String::new();
        let beta = if mode.latex { "\\beta" } else { "beta" };
        let mul = if mode.latex { " " } else { "*" };
        for (&v, &e) in f.den_factors() {
            let factor = format!("(1 + {beta}{mul}{})", var_string(v, mode));
            if e == 1 {
                write!(den, "{factor}").unwrap();
            } else if mode.latex {
                write!(den, "{factor}^{{{e}}}").unwrap();
            } else {
                write!(den, "{factor}^{e}").unwrap();
            }
        }
        if mode.latex {
            format!("\\frac{{{num}}}{{{den}}}")
        } else {
            format!("({num}) / [{den}]")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering() {
        let f = Frac::ominus(VarId::x(1), VarId::t(1));
        let s = PolyDisplay::frac(&f, DisplayMode::text());
        assert_eq!(s, "(x1 - t1) / [(1 + beta*t1)]");
    }

    #[test]
    fn latex_rendering_with_ominus() {
        let p = &Poly::var(VarId::x(1)) + &Poly::var(VarId::z(1));
        let s = PolyDisplay::poly(&p, DisplayMode::latex());
        assert_eq!(s, "x_{1} + \\ominus t_{1}");
        let s2 = PolyDisplay::poly(&p, DisplayMode::atoms());
        assert_eq!(s2, "x1 + z1");
    }
}
