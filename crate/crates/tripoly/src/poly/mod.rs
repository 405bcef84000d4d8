//! Exact scalars, basis-tagged polynomials, truncated Laurent series and
//! the binomial/Catalan tables they are built from.
//!
//! Every coefficient is a [`Rational`]. Polynomials carry a [`BasisTag`]
//! naming their variable, and binary operations refuse to mix tags.

mod combinat;
pub(crate) mod intpoly;
mod joint;
mod laurent;
mod scalar;
mod tagged;
mod text;

use std::fmt;

pub use malachite_nz::integer::Integer;
pub use malachite_nz::natural::Natural;
pub use malachite_q::Rational;

pub use combinat::{binomial, catalan, Binomials};
pub use joint::JointPoly;
pub use laurent::LaurentSeries;
pub(crate) use scalar::{clear_denominators, rescale};
pub use scalar::{integer_value, parse_rational, ratio, rational_to_f64};
pub use tagged::TaggedPoly;

/// The variable a polynomial is written in.
///
/// `X`/`Y` describe the upper side of a near-edge and `U`/`V` the lower side.
/// `Y` and `U` are concave-basis variables, `X` and `V` convex-basis ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTag {
    X,
    Y,
    U,
    V,
}

impl BasisTag {
    pub fn symbol(self) -> char {
        match self {
            BasisTag::X => 'x',
            BasisTag::Y => 'y',
            BasisTag::U => 'u',
            BasisTag::V => 'v',
        }
    }

    pub fn from_symbol(c: char) -> Option<BasisTag> {
        match c.to_ascii_lowercase() {
            'x' => Some(BasisTag::X),
            'y' => Some(BasisTag::Y),
            'u' => Some(BasisTag::U),
            'v' => Some(BasisTag::V),
            _ => None,
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(self, BasisTag::X | BasisTag::Y)
    }

    pub fn is_concave(self) -> bool {
        matches!(self, BasisTag::Y | BasisTag::U)
    }

    /// Convex-basis variable on the same side (`Y -> X`, `U -> V`).
    pub fn to_convex(self) -> BasisTag {
        match self {
            BasisTag::X | BasisTag::Y => BasisTag::X,
            BasisTag::U | BasisTag::V => BasisTag::V,
        }
    }

    /// Concave-basis variable on the same side (`X -> Y`, `V -> U`).
    pub fn to_concave(self) -> BasisTag {
        match self {
            BasisTag::X | BasisTag::Y => BasisTag::Y,
            BasisTag::U | BasisTag::V => BasisTag::U,
        }
    }

    /// Same basis, other side (`Y <-> U`, `X <-> V`); used by flips.
    pub fn mirrored(self) -> BasisTag {
        match self {
            BasisTag::X => BasisTag::V,
            BasisTag::Y => BasisTag::U,
            BasisTag::U => BasisTag::Y,
            BasisTag::V => BasisTag::X,
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}
