//! The Grothendieck ring of (G,r)-sets, truncated at a weight bound.
//!
//! An element is a finite integer combination of canonical orbits. Addition
//! is disjoint union, multiplication is the Cartesian product with weights
//! added and characters multiplied. An orbit is dropped once every one of
//! its points has some weight coordinate above the bound; products only
//! increase weights, so the dropped orbits form an ideal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::orbit::Orbit;
use crate::series::coeff_to_json;

/// Group and truncation bound shared by all elements that can be combined.
/// `r` is the length of the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    group: Group,
    bound: Vec<u32>,
}

impl Context {
    pub fn new(group: &Group, bound: &[u32]) -> Context {
        Context {
            group: group.clone(),
            bound: bound.to_vec(),
        }
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

    pub fn zero(&self) -> RingElement {
        RingElement {
            ctx: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> RingElement {
        self.monomial(Orbit::unit(&self.group, self.r()))
    }

    /// The class of a single orbit; zero when the orbit lies above the bound.
    pub fn from_orbit(&self, orbit: &Orbit) -> Result<RingElement> {
        if orbit.group() != &self.group {
            return Err(Error::GroupMismatch);
        }
        if orbit.r() != self.r() {
            return Err(Error::WeightLength {
                expected: self.r(),
                found: orbit.r(),
            });
        }
        Ok(self.monomial(orbit.clone()))
    }

    pub fn integer(&self, n: impl Into<BigInt>) -> RingElement {
        self.one().scale(&n.into())
    }

    fn monomial(&self, orbit: Orbit) -> RingElement {
        let mut e = self.zero();
        e.accumulate(orbit, BigInt::one());
        e
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ctx: Context,
    terms: BTreeMap<Orbit, BigInt>,
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({self})")
    }
}

/// Sum of `coeff*orbit` in canonical orbit order; the unit orbit prints as `1`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (orbit, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let text = match (orbit.is_unit(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => orbit.to_string(),
                (false, false) => format!("{mag}*{orbit}"),
            };
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{text}")?,
                (0, true) => write!(f, "-{text}")?,
                (_, false) => write!(f, " + {text}")?,
                (_, true) => write!(f, " - {text}")?,
            }
        }
        Ok(())
    }
}

#[allow(clippy::should_implement_trait)]
impl RingElement {
    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn group(&self) -> &Group {
        &self.ctx.group
    }

    pub fn bound(&self) -> &[u32] {
        &self.ctx.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Orbit, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, orbit: &Orbit) -> BigInt {
        self.terms.get(orbit).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, orbit: Orbit, c: BigInt) {
        if c.is_zero() || orbit.exceeds_bound(&self.ctx.bound) {
            return;
        }
        match self.terms.entry(orbit) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &RingElement) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(format!(
                "bounds {:?} vs {:?} (or different groups)",
                self.ctx.bound, other.ctx.bound
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (o, c) in &other.terms {
            out.accumulate(o.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> RingElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> RingElement {
        if k.is_zero() {
            return self.ctx.zero();
        }
        let terms = self.terms.iter().map(|(o, c)| (o.clone(), c * k)).collect();
        RingElement {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    /// Bilinear extension of the orbit product.
    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let mut out = self.ctx.zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for o in a.product(b)? {
                    out.accumulate(o, c.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> RingElement {
        let mut acc = self.ctx.one();
        for _ in 0..k {
            acc = acc.mul(self).expect("same context");
        }
        acc
    }

    pub fn equals(&self, other: &RingElement) -> Result<bool> {
        self.check(other)?;
        Ok(self.terms == other.terms)
    }

    pub fn is_positively_weighted(&self) -> bool {
        self.terms.keys().all(Orbit::is_positively_weighted)
    }

    /// `(1 - T)^(-euler)`.
    ///
    /// For positive `euler` this is `sum_k C(euler+k-1, k) T^k`, which is finite
    /// after truncation only when no point of `T` has zero weight. For
    /// negative `euler` it is the binomial expansion of `(1 - T)^|euler|`.
    pub fn geometric_inverse_power(&self, euler: i64) -> Result<RingElement> {
        let ctx = &self.ctx;
        match euler.signum() {
            0 => Ok(ctx.one()),
            1 => {
                if !self.is_positively_weighted() {
                    return Err(Error::NonPositiveWeights);
                }
                let mut acc = ctx.one();
                let mut power = ctx.one();
                let mut binom = BigInt::one();
                let mut k: i64 = 1;
                loop {
                    power = power.mul(self)?;
                    if power.is_zero() {
                        break;
                    }
                    binom = binom * BigInt::from(euler + k - 1) / BigInt::from(k);
                    acc = acc.add(&power.scale(&binom))?;
                    k += 1;
                }
                Ok(acc)
            }
            _ => {
                let m = euler.unsigned_abs();
                let mut acc = ctx.one();
                let mut power = ctx.one();
                let mut binom = BigInt::one();
                for k in 1..=m {
                    power = power.mul(self)?;
                    if power.is_zero() {
                        break;
                    }
                    binom = binom * BigInt::from(m - k + 1) / BigInt::from(k);
                    let signed = if k % 2 == 1 { -&binom } else { binom.clone() };
                    acc = acc.add(&power.scale(&signed))?;
                }
                Ok(acc)
            }
        }
    }

    /// `{"bound": [...], "terms": [{"coeff": c, "orbit": {...}}, ...]}` with
    /// terms in canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(o, c)| {
                serde_json::json!({ "coeff": coeff_to_json(c), "orbit": crate::json::orbit_to_json(o) })
            })
            .collect();
        serde_json::json!({ "bound": self.ctx.bound, "terms": terms })
    }
}
