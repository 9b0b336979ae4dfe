//! Burnside-type rings of finite `G`-sets with `Z^r`-valued weights, and
//! equivariant Poincaré series of multi-index filtrations computed from
//! resolution data.
//!
//! Elements live in a truncated ring: a [`ring::Context`] fixes the group
//! and a bound `V`, and every orbit lying entirely above `V` is dropped.

pub mod cli;
pub mod error;
pub mod group;
pub mod json;
pub mod oracle;
pub mod orbit;
pub mod resolution;
pub mod ring;
pub mod selftest;
pub mod series;

pub use error::{Error, Result};
pub use group::{Character, Elem, Group, GroupKind, Subgroup};
pub use orbit::{Orbit, OrbitData};
pub use resolution::{builtin, builtin_specs, ResolutionSpec, Stratum, ValuationKind};
pub use ring::{Context, RingElement};
pub use series::{project_pi, project_pi_prime, EquivariantSeries, MultiIndexSeries};
