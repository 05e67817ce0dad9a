//! Exact-arithmetic kernel: variables, sparse multivariate polynomials over
//! arbitrary-precision rationals, structured fractions, symmetric-function
//! tooling and a complex root finder.
//!
//! All symbolic values are immutable once built and all operations are pure,
//! so everything here can be shared freely across threads.

mod display;
mod frac;
mod json;
mod poly;
mod roots;
mod symfn;

pub use display::{DisplayMode, PolyDisplay};
pub use frac::Frac;
pub use json::{frac_from_json, frac_to_json, poly_from_json, poly_to_json};
pub use poly::{Mono, Poly};
pub use roots::{find_roots, find_roots_with, RootConfig};
pub use symfn::{elementary_symmetric, rewrite_in_elementary};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar. `num_rational` keeps it reduced with a positive
/// denominator, which is exactly the invariant we need.
pub type Scalar = BigRational;

/// Double-precision complex number used by the numeric verification layer.
pub type ComplexNum = num_complex::Complex64;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn scalar_ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn scalar_one() -> Scalar {
    BigRational::one()
}

pub fn scalar_zero() -> Scalar {
    BigRational::zero()
}

/// Variable families, ordered. The total order on variables (and hence the
/// monomial order) is lexicographic on `(family, level, pos)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    /// The formal deformation parameter β.
    Beta,
    /// x_i (first Grothendieck slot, Chern-root side).
    X,
    /// σ^(s)_a Bethe roots; level 0 is used for plain σ_i spectral labels.
    Sigma,
    /// t_i inhomogeneities / equivariant parameters.
    T,
    /// z_i, the atom standing for a second-slot value (canonically ⊖t_i).
    Z,
    /// q_m twist ratios b_{m-1}/b_m.
    Q,
    /// u spectral variable (pos distinguishes several of them).
    U,
    /// λ, the characteristic-polynomial variable.
    Lambda,
    /// η^(m)_b auxiliary Whitney roots (cohomology side).
    Eta,
    /// X^(m)_a = 1 + β σ^(m)_a (K-theory side).
    BigX,
    /// Y^(m)_b auxiliary Whitney roots (K-theory side).
    BigY,
}

impl Family {
    pub fn text_name(self) -> &'static str {
        match self {
            Family::Beta => "beta",
            Family::X => "x",
            Family::Sigma => "sigma",
            Family::T => "t",
            Family::Z => "z",
            Family::Q => "q",
            Family::U => "u",
            Family::Lambda => "lambda",
            Family::Eta => "eta",
            Family::BigX => "X",
            Family::BigY => "Y",
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        Some(match name {
            "beta" => Family::Beta,
            "x" => Family::X,
            "sigma" => Family::Sigma,
            "t" => Family::T,
            "z" => Family::Z,
            "q" => Family::Q,
            "u" => Family::U,
            "lambda" => Family::Lambda,
            "eta" => Family::Eta,
            "X" => Family::BigX,
            "Y" => Family::BigY,
            _ => return None,
        })
    }
}

/// A variable: `(family, level, pos)`. `level` is the superscript (s in
/// σ^(s)_a), `pos` the subscript within a level; both are 0 when unused.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId {
    pub family: Family,
    pub level: u16,
    pub pos: u16,
}

impl VarId {
    pub const fn new(family: Family, level: u16, pos: u16) -> Self {
        VarId { family, level, pos }
    }

    pub const fn beta() -> Self {
        VarId::new(Family::Beta, 0, 0)
    }

    /// x_i.
    pub const fn x(i: u16) -> Self {
        VarId::new(Family::X, i, 0)
    }

    /// σ^(s)_a.
    pub const fn sigma(s: u16, a: u16) -> Self {
        VarId::new(Family::Sigma, s, a)
    }

    /// Plain σ_i (no level superscript).
    pub const fn sigma_plain(i: u16) -> Self {
        VarId::new(Family::Sigma, 0, i)
    }

    /// t_i.
    pub const fn t(i: u16) -> Self {
        VarId::new(Family::T, i, 0)
    }

    /// z_i.
    pub const fn z(i: u16) -> Self {
        VarId::new(Family::Z, i, 0)
    }

    /// q_m.
    pub const fn q(m: u16) -> Self {
        VarId::new(Family::Q, m, 0)
    }

    /// The spectral variable u (pos picks one of several).
    pub const fn u(pos: u16) -> Self {
        VarId::new(Family::U, 0, pos)
    }

    pub const fn lambda() -> Self {
        VarId::new(Family::Lambda, 0, 0)
    }

    /// η^(m)_b.
    pub const fn eta(m: u16, b: u16) -> Self {
        VarId::new(Family::Eta, m, b)
    }

    /// X^(m)_a.
    pub const fn big_x(m: u16, a: u16) -> Self {
        VarId::new(Family::BigX, m, a)
    }

    /// Y^(m)_b.
    pub const fn big_y(m: u16, b: u16) -> Self {
        VarId::new(Family::BigY, m, b)
    }

    /// Key used in the JSON schema: `family.level` or `family.level.pos`.
    pub fn json_key(&self) -> String {
        if self.pos == 0 {
            format!("{}.{}", self.family.text_name(), self.level)
        } else {
            format!("{}.{}.{}", self.family.text_name(), self.level, self.pos)
        }
    }

    pub fn parse_json_key(key: &str) -> Option<VarId> {
        let mut it = key.split('.');
        let family = Family::parse(it.next()?)?;
        let level: u16 = it.next()?.parse().ok()?;
        let pos: u16 = match it.next() {
            Some(p) => p.parse().ok()?,
            None => 0,
        };
        if it.next().is_some() {
            return None;
        }
        Some(VarId::new(family, level, pos))
    }
}

/// Errors produced by the exact-arithmetic kernel.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum AlgebraError {
    /// Exact division left a nonzero remainder. This signals a violated
    /// identity and is surfaced, never silently truncated.
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    /// A substitution made a stored denominator factor identically zero.
    #[error("substitution collapses denominator factor (1 + beta*{0:?})")]
    DenominatorCollapse(VarId),
    /// An operation would produce a denominator outside the ∏(1+β·v)^e shape.
    #[error("operation leaves the structured-fraction form: {0}")]
    NotStructured(String),
    /// The polynomial is not symmetric in the requested variables.
    #[error("polynomial is not symmetric in the given variables")]
    NotSymmetric,
    /// Root iteration did not converge within the iteration cap.
    #[error("root finder did not converge after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },
    /// Leading coefficient too small or degree < 1.
    #[error("invalid polynomial for root finding: {0}")]
    BadPolynomial(String),
    /// NaN or infinity in a numeric input.
    #[error("non-finite numeric input")]
    NonFinite,
}
