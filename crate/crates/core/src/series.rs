//! Truncated multi-index power series, plain and with coefficients in the
//! ring generated by one-dimensional characters, and the two projections of
//! the Grothendieck ring onto them.
//!
//! `project_pi` forgets the group action and sums `t^w(x)` over all points.
//! `project_pi_prime` keeps only one-point orbits and records their character.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{Character, Group};
use crate::ring::RingElement;

pub type MultiIndex = Vec<u32>;

fn within(index: &[u32], bound: &[u32]) -> bool {
    index.iter().zip(bound).all(|(i, v)| i <= v)
}

fn add_index(a: &[u32], b: &[u32]) -> MultiIndex {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Rendering order: by total degree, then `t1` before `t2`.
fn monomial_order(a: &MultiIndex, b: &MultiIndex) -> std::cmp::Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

fn render_monomial(index: &[u32]) -> String {
    let parts: Vec<String> = index
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("t{}", i + 1)
            } else {
                format!("t{}^{}", i + 1, e)
            }
        })
        .collect();
    parts.join("*")
}

/// Joins signed terms as `a + b - c`; each term is `(coefficient, body)`
/// where an empty body means a constant.
fn render_sum(f: &mut fmt::Formatter<'_>, terms: Vec<(BigInt, String)>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (c, body)) in terms.into_iter().enumerate() {
        let mag = c.abs();
        let text = if body.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            body
        } else {
            format!("{mag}*{body}")
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

pub(crate) fn coeff_to_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(c.to_string()),
    }
}

/// An element of `Z[[t1..tr]]` modulo monomials outside the box `index <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndexSeries {
    bound: Vec<u32>,
    coeffs: BTreeMap<MultiIndex, BigInt>,
}

impl MultiIndexSeries {
    pub fn zero(bound: &[u32]) -> Self {
        MultiIndexSeries {
            bound: bound.to_vec(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(bound: &[u32]) -> Self {
        let mut s = Self::zero(bound);
        s.add_term(&vec![0; bound.len()], BigInt::one());
        s
    }

    pub fn from_terms<I, C>(bound: &[u32], terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(bound);
        for (i, c) in terms {
            s.add_term(&i, c.into());
        }
        s
    }

    /// Adds `c * t^index`, ignoring indices outside the bound.
    pub fn add_term(&mut self, index: &[u32], c: BigInt) {
        if c.is_zero() || !within(index, &self.bound) {
            return;
        }
        let entry = self
            .coeffs
            .entry(index.to_vec())
            .or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(index);
        }
    }

    pub fn bound(&self) -> &[u32] {
        &self.bound
    }

    pub fn r(&self) -> usize {
        self.bound.len()
    }

    pub fn coeff(&self, index: &[u32]) -> BigInt {
        self.coeffs.get(index).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.bound != other.bound {
            return Err(Error::ContextMismatch(format!(
                "series bounds {:?} and {:?}",
                self.bound, other.bound
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (i, c) in &other.coeffs {
            out.add_term(i, c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(i, c)| (i.clone(), -c)).collect();
        MultiIndexSeries {
            bound: self.bound.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Truncated convolution.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.bound);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                out.add_term(&add_index(i, j), a * b);
            }
        }
        Ok(out)
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut terms: Vec<(&MultiIndex, &BigInt)> = self.coeffs.iter().collect();
        terms.sort_by(|a, b| monomial_order(a.0, b.0));
        serde_json::json!({
            "bound": self.bound,
            "coefficients": terms
                .into_iter()
                .map(|(i, c)| serde_json::json!({ "index": i, "coeff": coeff_to_json(c) }))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for MultiIndexSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(&MultiIndex, &BigInt)> = self.coeffs.iter().collect();
        terms.sort_by(|a, b| monomial_order(a.0, b.0));
        render_sum(
            f,
            terms
                .into_iter()
                .map(|(i, c)| (c.clone(), render_monomial(i)))
                .collect(),
        )
    }
}

/// An element of `R1(G)[[t1..tr]]`, truncated like [`MultiIndexSeries`].
/// Coefficients are integer combinations of characters of the whole group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantSeries {
    group: Group,
    bound: Vec<u32>,
    coeffs: BTreeMap<MultiIndex, BTreeMap<Character, BigInt>>,
}

impl EquivariantSeries {
    pub fn zero(group: &Group, bound: &[u32]) -> Self {
        EquivariantSeries {
            group: group.clone(),
            bound: bound.to_vec(),
            coeffs: BTreeMap::new(),
        }
    }

    /// Adds `c * chi * t^index`. `chi` must be a character of the whole group.
    pub fn add_term(&mut self, index: &[u32], chi: &Character, c: BigInt) {
        debug_assert!(chi.domain().is_whole());
        if c.is_zero() || !within(index, &self.bound) {
            return;
        }
        let inner = self.coeffs.entry(index.to_vec()).or_default();
        let entry = inner.entry(chi.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            inner.remove(chi);
            if inner.is_empty() {
                self.coeffs.remove(index);
            }
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn bound(&self) -> &[u32] {
        &self.bound
    }

    pub fn coeff(&self, index: &[u32], chi: &Character) -> BigInt {
        self.coeffs
            .get(index)
            .and_then(|m| m.get(chi))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Character, &BigInt)> {
        self.coeffs
            .iter()
            .flat_map(|(i, m)| m.iter().map(move |(chi, c)| (i, chi, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.bound != other.bound || self.group != other.group {
            return Err(Error::ContextMismatch(
                "equivariant series contexts differ".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (i, chi, c) in other.terms() {
            out.add_term(i, chi, c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.group, &self.bound);
        for (i, chi, c) in self.terms() {
            out.add_term(i, chi, -c);
        }
        out
    }

    /// Truncated convolution; characters multiply.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.group, &self.bound);
        for (i, chi_a, a) in self.terms() {
            for (j, chi_b, b) in other.terms() {
                out.add_term(&add_index(i, j), &chi_a.multiply(chi_b)?, a * b);
            }
        }
        Ok(out)
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    fn sorted_terms(&self) -> Vec<(&MultiIndex, &Character, &BigInt)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| monomial_order(a.0, b.0).then_with(|| a.1.cmp(b.1)));
        terms
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(i, chi, c)| {
                let values: serde_json::Map<String, serde_json::Value> = chi
                    .domain()
                    .elements()
                    .iter()
                    .zip(chi.values())
                    .map(|(g, v)| (g.to_string(), serde_json::Value::from(*v)))
                    .collect();
                serde_json::json!({ "index": i, "character": values, "coeff": coeff_to_json(c) })
            })
            .collect();
        serde_json::json!({
            "bound": self.bound,
            "modulus": self.group.exponent(),
            "coefficients": terms,
        })
    }
}

/// `chi{g: e^{2πi·k/N}, ...}`
pub fn render_character(chi: &Character) -> String {
    let n = chi.domain().group().exponent();
    let parts: Vec<String> = chi
        .domain()
        .elements()
        .iter()
        .zip(chi.values())
        .map(|(g, k)| format!("{g}: e^{{2πi·{k}/{n}}}"))
        .collect();
    format!("chi{{{}}}", parts.join(", "))
}

impl fmt::Display for EquivariantSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(i, chi, c)| {
                let mono = render_monomial(i);
                let body = if mono.is_empty() {
                    render_character(chi)
                } else {
                    format!("{}*{}", render_character(chi), mono)
                };
                (c.clone(), body)
            })
            .collect();
        render_sum(f, terms)
    }
}

/// Forgets the action: every point `x` of every orbit contributes `t^w(x)`.
/// Points above the bound are dropped.
pub fn project_pi(a: &RingElement) -> MultiIndexSeries {
    let mut out = MultiIndexSeries::zero(a.bound());
    for (orbit, c) in a.terms() {
        for w in orbit.weights() {
            out.add_term(w, c.clone());
        }
    }
    out
}

/// Keeps the one-point orbits, each contributing `chi * t^w`; orbits with a
/// proper stabilizer map to zero.
pub fn project_pi_prime(a: &RingElement) -> EquivariantSeries {
    let mut out = EquivariantSeries::zero(a.group(), a.bound());
    for (orbit, c) in a.terms() {
        if orbit.is_fixed_point() {
            out.add_term(&orbit.weights()[0], orbit.character(), c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::tests::{arb_orbit_vec, z2, z2_generators};
    use crate::orbit::{Orbit, OrbitData};
    use crate::ring::{Context, RingElement};
    use proptest::prelude::*;

    #[test]
    fn series_arithmetic_and_rendering() {
        let v = [5];
        let a = MultiIndexSeries::from_terms(&v, [(vec![0], 1), (vec![1], 1)]);
        let b = MultiIndexSeries::from_terms(&v, [(vec![0], 1), (vec![1], -1)]);
        let p = a.mul(&b).unwrap();
        assert_eq!(
            p,
            MultiIndexSeries::from_terms(&v, [(vec![0], 1), (vec![2], -1)])
        );
        assert_eq!(p.to_string(), "1 - t1^2");
        assert_eq!(MultiIndexSeries::zero(&v).to_string(), "0");
        assert_eq!(a.add(&a.neg()).unwrap(), MultiIndexSeries::zero(&v));
        assert!(matches!(
            a.mul(&MultiIndexSeries::one(&[4])),
            Err(Error::ContextMismatch(_))
        ));

        let two = MultiIndexSeries::from_terms(
            &[2, 2],
            [
                (vec![0, 0], 3),
                (vec![1, 0], -2),
                (vec![0, 1], 1),
                (vec![1, 1], 4),
            ],
        );
        assert_eq!(two.to_string(), "3 - 2*t1 + t2 + 4*t1*t2");
        // truncation at the box
        let x = MultiIndexSeries::from_terms(&[2, 2], [(vec![2, 0], 1)]);
        assert!(x.mul(&x).unwrap().is_zero());
    }

    #[test]
    fn equivariant_rendering() {
        let g = z2();
        let sign = g.whole().character(vec![0, 1]).unwrap();
        let mut s = EquivariantSeries::zero(&g, &[3]);
        s.add_term(&[1], &sign, BigInt::from(2));
        s.add_term(&[0], &g.whole().trivial_character(), BigInt::one());
        assert_eq!(
            s.to_string(),
            "chi{0: e^{2πi·0/2}, 1: e^{2πi·0/2}} + 2*chi{0: e^{2πi·0/2}, 1: e^{2πi·1/2}}*t1"
        );
        let sq = s.mul(&s).unwrap();
        assert_eq!(
            sq.coeff(&[2], &g.whole().trivial_character()),
            BigInt::from(4)
        );
        assert_eq!(sq.coeff(&[1], &sign), BigInt::from(4));
    }

    #[test]
    fn projections_of_generators() {
        let [t1, _, t3, t4] = z2_generators();
        let ctx = Context::new(&z2(), &[4]);
        let one = ctx.one();
        assert_eq!(project_pi(&one), MultiIndexSeries::one(&[4]));
        let t1e = ctx.from_orbit(&t1).unwrap();
        assert_eq!(project_pi(&t1e).to_string(), "1 + t1");
        assert!(project_pi_prime(&t1e).is_zero());

        let t4e = ctx.from_orbit(&t4).unwrap();
        let pp = project_pi_prime(&t4e);
        assert_eq!(pp.coeff(&[0], t4.character()), BigInt::one());

        let t = ctx.from_orbit(&t3).unwrap().mul(&t4e).unwrap();
        let p = t.geometric_inverse_power(2).unwrap();
        assert_eq!(
            project_pi(&p).to_string(),
            "1 + 2*t1 + 3*t1^2 + 4*t1^3 + 5*t1^4"
        );
        let pp = project_pi_prime(&p);
        for k in 0..=4u32 {
            let chi = if k % 2 == 0 {
                z2().whole().trivial_character()
            } else {
                t4.character().clone()
            };
            assert_eq!(pp.coeff(&[k], &chi), BigInt::from(k + 1));
        }
    }

    #[test]
    fn trivial_group_projections_agree() {
        let g = Group::trivial();
        let h = g.whole();
        let ctx = Context::new(&g, &[3, 3]);
        let o = |w: Vec<i64>| {
            ctx.from_orbit(&Orbit::new(&h, &h.trivial_character(), &[(0, w)]).unwrap())
                .unwrap()
        };
        let a = o(vec![1, 0])
            .add(&o(vec![0, 2]))
            .unwrap()
            .geometric_inverse_power(1)
            .unwrap();
        let pi = project_pi(&a);
        let pip = project_pi_prime(&a);
        let chi = h.trivial_character();
        let from_prime: Vec<(MultiIndex, BigInt)> = pip
            .terms()
            .map(|(i, c, v)| {
                assert_eq!(c, &chi);
                (i.clone(), v.clone())
            })
            .collect();
        let from_pi: Vec<(MultiIndex, BigInt)> =
            pi.terms().map(|(i, v)| (i.clone(), v.clone())).collect();
        assert_eq!(from_pi, from_prime);
    }

    fn element(data: &[OrbitData], coeffs: &[i64], bound: &[u32]) -> RingElement {
        let ctx = Context::new(data[0].stabilizer.group(), bound);
        let mut acc = ctx.zero();
        for (d, &c) in data.iter().zip(coeffs) {
            let o = Orbit::from_data(d).unwrap();
            acc = acc
                .add(&ctx.from_orbit(&o).unwrap().scale(&BigInt::from(c)))
                .unwrap();
        }
        acc
    }

    proptest! {
        #[test]
        fn projections_are_ring_homomorphisms(data in arb_orbit_vec(4, 2, 2), k in prop::collection::vec(-3i64..=3, 4)) {
            let bound = [3, 3];
            let x = element(&data[..2], &k[..2], &bound);
            let y = element(&data[2..], &k[2..], &bound);
            prop_assert_eq!(project_pi(&x.mul(&y).unwrap()), project_pi(&x).mul(&project_pi(&y)).unwrap());
            prop_assert_eq!(project_pi(&x.add(&y).unwrap()), project_pi(&x).add(&project_pi(&y)).unwrap());
            prop_assert_eq!(project_pi_prime(&x.mul(&y).unwrap()), project_pi_prime(&x).mul(&project_pi_prime(&y)).unwrap());
            prop_assert_eq!(project_pi_prime(&x.add(&y).unwrap()), project_pi_prime(&x).add(&project_pi_prime(&y)).unwrap());
        }
    }
}
