//! JSON descriptors for groups, orbits, ring elements and expression files.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group::{Group, GroupKind};
use crate::orbit::Orbit;
use crate::ring::{Context, RingElement};

/// `{"cayley": [[...]]}` or `{"named": {"kind": "cyclic", "m": 3}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupDescriptor {
    Cayley(Vec<Vec<usize>>),
    Named { kind: String, m: usize },
}

impl GroupDescriptor {
    pub fn build(&self) -> Result<Group> {
        match self {
            GroupDescriptor::Cayley(table) => Group::from_cayley(table.clone()),
            GroupDescriptor::Named { kind, m } => Group::named(kind.parse::<GroupKind>()?, *m),
        }
    }
}

/// A weight coordinate: an integer, or a spelling of infinity (rejected).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightEntry {
    Finite(i64),
    Symbol(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointDescriptor {
    pub rep: usize,
    pub weight: Vec<WeightEntry>,
}

/// `{"stabilizer": [...], "character": {"g": k, ...}, "points": [...]}`.
/// An absent or empty character means the trivial one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    pub stabilizer: Vec<usize>,
    #[serde(default)]
    pub character: BTreeMap<String, i64>,
    pub points: Vec<PointDescriptor>,
}

fn parse_weight(entries: &[WeightEntry]) -> Result<Vec<i64>> {
    entries
        .iter()
        .map(|e| match e {
            WeightEntry::Finite(x) => Ok(*x),
            WeightEntry::Symbol(s) => match s.trim().to_ascii_lowercase().as_str() {
                "inf" | "+inf" | "infinity" | "+infinity" | "∞" => Err(Error::InfiniteWeight),
                other => Err(Error::Parse(format!(
                    "weight entry `{other}` is not an integer"
                ))),
            },
        })
        .collect()
}

impl OrbitDescriptor {
    pub fn build(&self, group: &Group) -> Result<Orbit> {
        let stabilizer = group.subgroup(&self.stabilizer)?;
        let n = group.exponent() as i64;
        let character = if self.character.is_empty() {
            stabilizer.trivial_character()
        } else {
            let mut given: BTreeMap<usize, i64> = BTreeMap::new();
            for (k, v) in &self.character {
                let g: usize = k.trim().parse().map_err(|_| {
                    Error::Parse(format!("character key `{k}` is not an element index"))
                })?;
                if !stabilizer.contains(g) {
                    return Err(Error::CharacterDomainMismatch(format!(
                        "character given at {g}, which is not in the stabilizer"
                    )));
                }
                given.insert(g, *v);
            }
            let values = stabilizer
                .elements()
                .iter()
                .map(|&g| match given.get(&g) {
                    Some(v) => Ok(v.rem_euclid(n) as u32),
                    None if g == group.identity() => Ok(0),
                    None => Err(Error::CharacterDomainMismatch(format!(
                        "no character value at {g}"
                    ))),
                })
                .collect::<Result<Vec<u32>>>()?;
            stabilizer.character(values)?
        };
        let points = self
            .points
            .iter()
            .map(|p| Ok((p.rep, parse_weight(&p.weight)?)))
            .collect::<Result<Vec<_>>>()?;
        Orbit::new(&stabilizer, &character, &points)
    }
}

pub fn orbit_descriptor(o: &Orbit) -> OrbitDescriptor {
    let character = o
        .stabilizer()
        .elements()
        .iter()
        .zip(o.character().values())
        .map(|(g, v)| (g.to_string(), *v as i64))
        .collect();
    let points = o
        .transversal()
        .iter()
        .zip(o.weights())
        .map(|(&rep, w)| PointDescriptor {
            rep,
            weight: w.iter().map(|&x| WeightEntry::Finite(x as i64)).collect(),
        })
        .collect();
    OrbitDescriptor {
        stabilizer: o.stabilizer().elements().to_vec(),
        character,
        points,
    }
}

pub fn orbit_to_json(o: &Orbit) -> Value {
    serde_json::to_value(orbit_descriptor(o)).expect("descriptor serializes")
}

fn parse_coeff(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("coefficient {n} is not an integer"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("coefficient `{s}` is not an integer"))),
        other => Err(Error::Parse(format!(
            "coefficient {other} is not an integer"
        ))),
    }
}

#[derive(Deserialize)]
struct RingTermDescriptor {
    coeff: Value,
    orbit: OrbitDescriptor,
}

#[derive(Deserialize)]
struct RingElementDescriptor {
    bound: Vec<u32>,
    terms: Vec<RingTermDescriptor>,
}

/// Inverse of [`RingElement::to_json`]; the group is supplied separately.
pub fn ring_element_from_json(group: &Group, value: &Value) -> Result<RingElement> {
    let desc: RingElementDescriptor = serde_json::from_value(value.clone())?;
    let ctx = Context::new(group, &desc.bound);
    let mut acc = ctx.zero();
    for t in &desc.terms {
        let c = parse_coeff(&t.coeff)?;
        let o = t.orbit.build(group)?;
        acc = acc.add(&ctx.from_orbit(&o)?.scale(&c))?;
    }
    Ok(acc)
}

/// Orbit literal inside an expression: a name from the file's `orbits`
/// table or an inline descriptor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Named(String),
    Inline(OrbitDescriptor),
}

/// Ring expression tree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expr {
    Lit(Literal),
    Int(i64),
    Add(Vec<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Vec<Expr>),
    Pow(Box<Expr>, u32),
    Geom { euler: i64, of: Box<Expr> },
}

/// `{"group": ..., "bound": [...], "orbits": {"t1": {...}}, "expr": ...}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExprFile {
    pub group: GroupDescriptor,
    pub bound: Vec<u32>,
    #[serde(default)]
    pub orbits: BTreeMap<String, OrbitDescriptor>,
    pub expr: Expr,
}

impl ExprFile {
    pub fn parse(text: &str) -> Result<ExprFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn evaluate(&self) -> Result<RingElement> {
        let group = self.group.build()?;
        let ctx = Context::new(&group, &self.bound);
        let named: BTreeMap<&str, Orbit> = self
            .orbits
            .iter()
            .map(|(k, d)| Ok((k.as_str(), d.build(&group)?)))
            .collect::<Result<_>>()?;
        eval(&self.expr, &ctx, &named)
    }
}

fn eval(e: &Expr, ctx: &Context, named: &BTreeMap<&str, Orbit>) -> Result<RingElement> {
    match e {
        Expr::Lit(Literal::Named(name)) => {
            let o = named
                .get(name.as_str())
                .ok_or_else(|| Error::UnknownName(name.clone()))?;
            ctx.from_orbit(o)
        }
        Expr::Lit(Literal::Inline(d)) => ctx.from_orbit(&d.build(ctx.group())?),
        Expr::Int(n) => Ok(ctx.integer(*n)),
        Expr::Add(xs) => xs
            .iter()
            .try_fold(ctx.zero(), |acc, x| acc.add(&eval(x, ctx, named)?)),
        Expr::Sub(a, b) => eval(a, ctx, named)?.sub(&eval(b, ctx, named)?),
        Expr::Neg(a) => Ok(eval(a, ctx, named)?.neg()),
        Expr::Mul(xs) => xs
            .iter()
            .try_fold(ctx.one(), |acc, x| acc.mul(&eval(x, ctx, named)?)),
        Expr::Pow(a, k) => Ok(eval(a, ctx, named)?.pow(*k)),
        Expr::Geom { euler, of } => eval(of, ctx, named)?.geometric_inverse_power(*euler),
    }
}
