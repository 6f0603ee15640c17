//! Leja sequences on the unit disc and their real projections on `[-1, 1]`.
//!
//! Nodes are generated exactly as dyadic angles (rational multiples of `pi`
//! with power-of-two denominators). On top of the node generators the crate
//! evaluates Lagrange and quadratic Lebesgue functions, searches their
//! suprema, and checks a catalogue of known inequalities against the
//! computed values.

pub mod angle;
pub mod binary;
pub mod bounds;
pub mod disc;
pub mod error;
pub mod interp;
pub mod interval;
pub mod lebesgue;
pub mod scaled;
pub mod search;

use serde::{Deserialize, Serialize};

pub use angle::DyadicAngle;
pub use binary::{binary_stats, sigma1, two_adic, BinaryStats};
pub use bounds::{BoundCheck, CheckStatus, Severity, SuiteConfig, SuiteReport};
pub use disc::{leja_section, DiscSection};
pub use error::{LejaError, Result};
pub use interp::{LagrangeBasis, NewtonInterpolant};
pub use interval::{angle_recursion_section, project_from_disc, IntervalSection};
pub use lebesgue::{lebesgue_report, LebesgueReport};
pub use search::{SearchConfig, SearchStatus, SupResult};

/// Where the nodes live: the unit circle or the interval `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Disc,
    Interval,
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Domain::Disc => "disc",
            Domain::Interval => "interval",
        })
    }
}

impl std::str::FromStr for Domain {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "disc" => Ok(Domain::Disc),
            "interval" => Ok(Domain::Interval),
            other => Err(format!("unknown domain '{other}' (expected disc or interval)")),
        }
    }
}
