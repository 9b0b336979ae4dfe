//! Equivariant Poincaré series from the strata of a G-invariant resolution.
//!
//! The caller describes the smooth part of the exceptional divisor modulo
//! `G` as a list of strata. Each stratum carries its Euler characteristic
//! and the orbit `T` of the class of an equivariant curvette function at one
//! of its points. The series is the product of `(1 - T)^(-euler)` over all
//! strata. Divisorial and curve valuations use the same formula; the `kind`
//! field only records which one the data came from.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::json::{GroupDescriptor, OrbitDescriptor};
use crate::orbit::Orbit;
use crate::ring::{Context, RingElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValuationKind {
    Divisorial,
    Curve,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StratumFile {
    pub name: String,
    pub euler: i64,
    pub orbit: OrbitDescriptor,
}

/// The on-disk spec format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub group: GroupDescriptor,
    pub r: usize,
    pub bound: Vec<u32>,
    pub kind: ValuationKind,
    pub strata: Vec<StratumFile>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub name: String,
    pub euler: i64,
    pub orbit: Orbit,
}

/// A validated spec: group built, orbits canonical, invariants checked.
#[derive(Clone, Debug)]
pub struct ResolutionSpec {
    group: Group,
    bound: Vec<u32>,
    kind: ValuationKind,
    strata: Vec<Stratum>,
}

impl ResolutionSpec {
    pub fn parse(text: &str) -> Result<ResolutionSpec> {
        let file: SpecFile = serde_json::from_str(text)?;
        ResolutionSpec::validate(&file)
    }

    pub fn validate(file: &SpecFile) -> Result<ResolutionSpec> {
        if file.bound.len() != file.r {
            return Err(Error::ContextMismatch(format!(
                "bound has {} entries but r = {}",
                file.bound.len(),
                file.r
            )));
        }
        let group = file.group.build()?;
        let mut strata = Vec::with_capacity(file.strata.len());
        for s in &file.strata {
            let orbit = s.orbit.build(&group)?;
            strata.push(Stratum {
                name: s.name.clone(),
                euler: s.euler,
                orbit,
            });
        }
        ResolutionSpec::from_parts(&group, &file.bound, file.kind, strata)
    }

    pub fn from_parts(
        group: &Group,
        bound: &[u32],
        kind: ValuationKind,
        strata: Vec<Stratum>,
    ) -> Result<ResolutionSpec> {
        let mut names = BTreeSet::new();
        for s in &strata {
            if !names.insert(s.name.as_str()) {
                return Err(Error::DuplicateStratum(s.name.clone()));
            }
            if s.orbit.group() != group {
                return Err(Error::GroupMismatch);
            }
            if s.orbit.r() != bound.len() {
                return Err(Error::WeightLength {
                    expected: bound.len(),
                    found: s.orbit.r(),
                });
            }
            if s.euler > 0 && !s.orbit.is_positively_weighted() {
                return Err(Error::ZeroWeightWithPositiveEuler(s.name.clone()));
            }
        }
        Ok(ResolutionSpec {
            group: group.clone(),
            bound: bound.to_vec(),
            kind,
            strata,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn bound(&self) -> &[u32] {
        &self.bound
    }

    pub fn r(&self) -> usize {
        self.bound.len()
    }

    pub fn kind(&self) -> ValuationKind {
        self.kind
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn with_bound(&self, bound: &[u32]) -> Result<ResolutionSpec> {
        if bound.len() != self.r() {
            return Err(Error::ContextMismatch(format!(
                "bound override has {} entries, spec has r = {}",
                bound.len(),
                self.r()
            )));
        }
        Ok(ResolutionSpec {
            bound: bound.to_vec(),
            ..self.clone()
        })
    }

    pub fn with_strata(&self, strata: Vec<Stratum>) -> Result<ResolutionSpec> {
        ResolutionSpec::from_parts(&self.group, &self.bound, self.kind, strata)
    }

    /// `prod (1 - T_s)^(-euler_s)`, truncated at the bound.
    pub fn poincare_series(&self) -> Result<RingElement> {
        let ctx = Context::new(&self.group, &self.bound);
        self.strata.iter().try_fold(ctx.one(), |acc, s| {
            let factor = ctx.from_orbit(&s.orbit)?.geometric_inverse_power(s.euler)?;
            acc.mul(&factor)
        })
    }
}

/// A spec compiled into the library.
#[derive(Clone, Copy, Debug)]
pub struct BuiltinSpec {
    pub name: &'static str,
    pub json: &'static str,
}

impl BuiltinSpec {
    pub fn load(&self) -> Result<ResolutionSpec> {
        ResolutionSpec::parse(self.json)
    }
}

const BUILTINS: &[BuiltinSpec] = &[
    BuiltinSpec {
        name: "trivial-multiplicity",
        json: include_str!("../specs/trivial-multiplicity.json"),
    },
    BuiltinSpec {
        name: "smooth-branch",
        json: include_str!("../specs/smooth-branch.json"),
    },
    BuiltinSpec {
        name: "cusp",
        json: include_str!("../specs/cusp.json"),
    },
    BuiltinSpec {
        name: "z2-antipodal",
        json: include_str!("../specs/z2-antipodal.json"),
    },
    BuiltinSpec {
        name: "z2-swap",
        json: include_str!("../specs/z2-swap.json"),
    },
];

/// The built-in example resolutions.
pub fn builtin_specs() -> &'static [BuiltinSpec] {
    BUILTINS
}

pub fn builtin(name: &str) -> Result<ResolutionSpec> {
    BUILTINS
        .iter()
        .find(|b| b.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?
        .load()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{jet_dimension_series, semigroup_series};
    use crate::series::project_pi;

    fn stratum(group: &Group, name: &str, euler: i64, w: i64) -> Stratum {
        let h = group.whole();
        let orbit = Orbit::new(&h, &h.trivial_character(), &[(group.identity(), vec![w])]).unwrap();
        Stratum {
            name: name.into(),
            euler,
            orbit,
        }
    }

    #[test]
    fn validation() {
        let g = Group::trivial();
        let kind = ValuationKind::Divisorial;
        assert!(ResolutionSpec::from_parts(&g, &[4], kind, vec![stratum(&g, "E", 2, 1)]).is_ok());
        assert!(matches!(
            ResolutionSpec::from_parts(&g, &[4], kind, vec![stratum(&g, "E", 1, 0)]),
            Err(Error::ZeroWeightWithPositiveEuler(_))
        ));
        assert!(ResolutionSpec::from_parts(&g, &[4], kind, vec![stratum(&g, "E", -1, 0)]).is_ok());
        assert!(matches!(
            ResolutionSpec::from_parts(
                &g,
                &[4],
                kind,
                vec![stratum(&g, "E", 1, 1), stratum(&g, "E", 1, 2)]
            ),
            Err(Error::DuplicateStratum(_))
        ));
        assert!(matches!(
            ResolutionSpec::from_parts(&g, &[4, 4], kind, vec![stratum(&g, "E", 1, 1)]),
            Err(Error::WeightLength { .. })
        ));
        let text = r#"{"group": {"named": {"kind": "cyclic", "m": 1}}, "r": 2, "bound": [3], "kind": "curve", "strata": []}"#;
        assert!(matches!(
            ResolutionSpec::parse(text),
            Err(Error::ContextMismatch(_))
        ));
        let text = r#"{"group": {"named": {"kind": "cyclic", "m": 1}}, "r": 1, "bound": [3], "kind": "curve",
            "strata": [{"name": "E", "euler": 1, "orbit": {"stabilizer": [0], "points": [{"rep": 0, "weight": ["infinity"]}]}}]}"#;
        assert!(matches!(
            ResolutionSpec::parse(text),
            Err(Error::InfiniteWeight)
        ));
        assert!(matches!(ResolutionSpec::parse("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn all_builtins_load() {
        for b in builtin_specs() {
            let spec = b.load().unwrap();
            assert_eq!(spec.bound(), &[8]);
        }
        assert!(matches!(builtin("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn trivial_multiplicity_series() {
        let spec = builtin("trivial-multiplicity")
            .unwrap()
            .with_bound(&[6])
            .unwrap();
        assert_eq!(
            project_pi(&spec.poincare_series().unwrap()),
            jet_dimension_series(6)
        );
        assert!(spec.with_bound(&[6, 6]).is_err());
    }

    #[test]
    fn curve_examples() {
        let smooth = builtin("smooth-branch").unwrap();
        assert_eq!(
            project_pi(&smooth.poincare_series().unwrap()),
            semigroup_series(&[1], 8)
        );
        let cusp = builtin("cusp").unwrap().with_bound(&[20]).unwrap();
        assert_eq!(
            project_pi(&cusp.poincare_series().unwrap()),
            semigroup_series(&[2, 3], 20)
        );
        assert_eq!(cusp.kind(), ValuationKind::Curve);
    }

    #[test]
    fn z2_products_in_closed_form() {
        let anti = builtin("z2-antipodal").unwrap().with_bound(&[5]).unwrap();
        let g = anti.group().clone();
        let ctx = Context::new(&g, &[5]);
        let t3t4 = ctx.from_orbit(&anti.strata()[0].orbit).unwrap();
        assert_eq!(
            anti.poincare_series().unwrap(),
            t3t4.geometric_inverse_power(2).unwrap()
        );

        let swap = builtin("z2-swap").unwrap().with_bound(&[5]).unwrap();
        let whole = g.whole();
        let t3 = ctx
            .from_orbit(&Orbit::new(&whole, &whole.trivial_character(), &[(0, vec![1])]).unwrap())
            .unwrap();
        let expect = t3
            .geometric_inverse_power(1)
            .unwrap()
            .mul(&t3t4.geometric_inverse_power(1).unwrap())
            .unwrap();
        assert_eq!(swap.poincare_series().unwrap(), expect);
        assert_eq!(project_pi(&expect), crate::oracle::jet_dimension_series(5));
    }

    #[test]
    fn order_and_zero_strata_do_not_matter() {
        for b in builtin_specs() {
            let spec = b.load().unwrap().with_bound(&[6]).unwrap();
            let base = spec.poincare_series().unwrap();
            let mut rev = spec.strata().to_vec();
            rev.reverse();
            assert_eq!(
                spec.with_strata(rev).unwrap().poincare_series().unwrap(),
                base
            );
            let mut extra = spec.strata().to_vec();
            let mut z = extra[0].clone();
            z.name = "extra".into();
            z.euler = 0;
            extra.insert(0, z);
            assert_eq!(
                spec.with_strata(extra).unwrap().poincare_series().unwrap(),
                base
            );
        }
    }
}
