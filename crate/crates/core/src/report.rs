//! Bound reports: a named value, its integer consequence, and the evidence.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::Reason;
use crate::interval::VertexOrder;
use crate::method2::Method2Certificate;
use crate::Rational;

/// Slack applied before rounding floating-point bounds up, so that values
/// which are integers up to rounding noise do not overshoot.
pub const CEIL_TOLERANCE: f64 = 1e-9;
/// Grid on which real-valued bounds are rendered as fractions (rounded down).
pub const REAL_DENOMINATOR: i64 = 1_000_000_000;

/// Exact rational bounds, or real ones derived from computed eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundValue {
    Exact(Rational),
    Real(f64),
}

impl BoundValue {
    pub fn to_f64(self) -> f64 {
        match self {
            BoundValue::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            BoundValue::Real(x) => x,
        }
    }

    /// Smallest integer not below the value, floored at 0.
    pub fn ceiling(self) -> u64 {
        let c = match self {
            BoundValue::Exact(q) => q.ceil().to_integer(),
            BoundValue::Real(x) => libm::ceil(x - CEIL_TOLERANCE) as i64,
        };
        c.max(0) as u64
    }

    /// The value as a reduced fraction; real values are rounded down onto a
    /// `1/10^9` grid so the fraction never exceeds the bound.
    pub fn as_fraction(self) -> Rational {
        match self {
            BoundValue::Exact(q) => q,
            BoundValue::Real(x) => {
                let num = libm::floor(x * REAL_DENOMINATOR as f64) as i64;
                let g = num.gcd(&REAL_DENOMINATOR);
                Rational::new_raw(num / g, REAL_DENOMINATOR / g)
            }
        }
    }
}

impl fmt::Display for BoundValue {
    /// `num/den`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.as_fraction();
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Method-specific evidence behind a bound.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    None,
    /// An optimal vertex order of a minimum interval supergraph.
    Ordering(VertexOrder),
    /// `c_v(1..n-1)` of the complement.
    CvProfile(Vec<usize>),
    /// Named integer parameters the closed form was evaluated at.
    Params(Vec<(&'static str, i64)>),
    /// The eigenvalue the spectral formula used.
    Eigenvalue {
        name: &'static str,
        value: f64,
    },
    Method2(Method2Certificate),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Status {
    Applicable,
    Inapplicable(Reason),
    /// The instance exceeds an exhaustive-search budget.
    Budget(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub name: &'static str,
    pub status: Status,
    pub value: Option<BoundValue>,
    pub certificate: Certificate,
    pub notes: Vec<&'static str>,
}

impl BoundReport {
    pub fn exact(name: &'static str, value: Rational, certificate: Certificate) -> Self {
        BoundReport {
            name,
            status: Status::Applicable,
            value: Some(BoundValue::Exact(value)),
            certificate,
            notes: Vec::new(),
        }
    }

    pub fn real(name: &'static str, value: f64, certificate: Certificate) -> Self {
        BoundReport {
            name,
            status: Status::Applicable,
            value: Some(BoundValue::Real(value)),
            certificate,
            notes: Vec::new(),
        }
    }

    pub fn inapplicable(name: &'static str, reason: Reason) -> Self {
        BoundReport {
            name,
            status: Status::Inapplicable(reason),
            value: None,
            certificate: Certificate::None,
            notes: Vec::new(),
        }
    }

    pub fn over_budget(name: &'static str, detail: String) -> Self {
        BoundReport {
            name,
            status: Status::Budget(detail),
            value: None,
            certificate: Certificate::None,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: &'static str) -> Self {
        self.notes.push(note);
        self
    }

    pub fn is_applicable(&self) -> bool {
        self.status == Status::Applicable
    }

    pub fn ceiling(&self) -> Option<u64> {
        self.value.map(BoundValue::ceiling)
    }

    pub fn exact_value(&self) -> Option<Rational> {
        match self.value {
            Some(BoundValue::Exact(q)) => Some(q),
            _ => None,
        }
    }
}

/// `num / den` as an exact bound value; `den` must be nonzero.
pub(crate) fn ratio(num: i64, den: i64) -> Rational {
    debug_assert!(!den.is_zero());
    Rational::new(num, den)
}
