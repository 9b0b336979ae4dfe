//! Transitive (G,r)-sets.
//!
//! A transitive (G,r)-set is a coset space `G/H` together with a weight
//! vector in `Z^r_{>=0}` at every point and a one-dimensional character of
//! the isotropy subgroup at every point. Only the character at the base
//! point `H` is stored; the character at `bH` is its conjugate by `b`.
//!
//! [`Orbit`] values are always in canonical form, so two orbits are
//! isomorphic as (G,r)-sets exactly when they compare equal.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Character, Elem, Group, Subgroup};

/// A weight vector in `Z^r_{>=0}`.
pub type Weight = Vec<u32>;

/// Left cosets of a subgroup in a fixed order: the subgroup itself first
/// (represented by the identity), then the remaining cosets sorted by their
/// smallest element, each represented by that smallest element.
#[derive(Debug)]
pub struct CosetSpace {
    reps: Vec<Elem>,
    index_of: Vec<usize>,
}

impl CosetSpace {
    pub fn new(h: &Subgroup) -> CosetSpace {
        let group = h.group();
        let mut index_of = vec![usize::MAX; group.order()];
        let mut reps = Vec::with_capacity(group.order() / h.order());
        let mut visit = |rep: Elem, index_of: &mut Vec<usize>| {
            let idx = reps.len();
            reps.push(rep);
            for &x in h.elements() {
                index_of[group.mul(rep, x)] = idx;
            }
        };
        visit(group.identity(), &mut index_of);
        for g in group.elements() {
            if index_of[g] == usize::MAX {
                visit(g, &mut index_of);
            }
        }
        CosetSpace { reps, index_of }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    /// Index of the coset `gH`.
    #[inline]
    pub fn coset_of(&self, g: Elem) -> usize {
        self.index_of[g]
    }
}

/// Orbit data as supplied from outside, in no particular normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    pub stabilizer: Subgroup,
    /// Character of `stabilizer` at the base point `stabilizer` itself.
    pub character: Character,
    /// One entry per coset: any element of the coset and the weight there.
    pub points: Vec<(Elem, Vec<i64>)>,
}

/// A transitive (G,r)-set in canonical form.
#[derive(Clone)]
pub struct Orbit {
    stabilizer: Subgroup,
    character: Character,
    weights: Vec<Weight>,
    cosets: Arc<CosetSpace>,
}

impl PartialEq for Orbit {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Orbit {}

impl PartialOrd for Orbit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Orbit {
    fn cmp(&self, other: &Self) -> Ordering {
        self.stabilizer
            .cmp(&other.stabilizer)
            .then_with(|| self.weights.cmp(&other.weights))
            .then_with(|| self.character.values().cmp(other.character.values()))
    }
}

impl Hash for Orbit {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.stabilizer.elements().hash(state);
        self.weights.hash(state);
        self.character.values().hash(state);
    }
}

impl fmt::Debug for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn render_weight(w: &[u32]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let stab: Vec<String> = self
            .stabilizer
            .elements()
            .iter()
            .map(|x| x.to_string())
            .collect();
        write!(f, "O(stab=[{}]", stab.join(","))?;
        if !self.character.is_trivial() {
            let chi: Vec<String> = self
                .character
                .values()
                .iter()
                .map(|x| x.to_string())
                .collect();
            write!(f, "; chi=[{}]", chi.join(","))?;
        }
        let w: Vec<String> = self.weights.iter().map(|w| render_weight(w)).collect();
        write!(f, "; w=[{}])", w.join(","))
    }
}

fn check_weight(raw: &[i64], r: usize) -> Result<Weight> {
    if raw.len() != r {
        return Err(Error::WeightLength {
            expected: r,
            found: raw.len(),
        });
    }
    raw.iter()
        .map(|&x| u32::try_from(x).map_err(|_| Error::NegativeWeight(x)))
        .collect()
}

impl Orbit {
    /// Builds the orbit `G/H` with base character `character` and the given
    /// weight at the coset of each listed representative.
    pub fn new(
        stabilizer: &Subgroup,
        character: &Character,
        points: &[(Elem, Vec<i64>)],
    ) -> Result<Orbit> {
        if character.domain() != stabilizer {
            return Err(Error::CharacterDomainMismatch(format!(
                "character lives on {:?}, stabilizer is {:?}",
                character.domain(),
                stabilizer
            )));
        }
        let group = stabilizer.group();
        let cosets = CosetSpace::new(stabilizer);
        if points.len() != cosets.len() {
            return Err(Error::BadTransversal(format!(
                "{} points given, G/H has {}",
                points.len(),
                cosets.len()
            )));
        }
        let r = points.first().map_or(0, |p| p.1.len());
        let mut weights: Vec<Option<Weight>> = vec![None; cosets.len()];
        for (rep, raw) in points {
            if *rep >= group.order() {
                return Err(Error::BadTransversal(format!("element {rep} out of range")));
            }
            let slot = &mut weights[cosets.coset_of(*rep)];
            if slot.is_some() {
                return Err(Error::BadTransversal(format!(
                    "representative {rep} repeats an earlier coset"
                )));
            }
            *slot = Some(check_weight(raw, r)?);
        }
        let weights = weights
            .into_iter()
            .map(|w| w.expect("all cosets covered"))
            .collect();
        Ok(canonical(stabilizer, character, weights, &cosets))
    }

    pub fn from_data(data: &OrbitData) -> Result<Orbit> {
        Orbit::new(&data.stabilizer, &data.character, &data.points)
    }

    /// The one-point set with weight zero and trivial character.
    pub fn unit(group: &Group, r: usize) -> Orbit {
        let whole = group.whole();
        let cosets = Arc::new(CosetSpace::new(&whole));
        Orbit {
            character: whole.trivial_character(),
            stabilizer: whole,
            weights: vec![vec![0; r]],
            cosets,
        }
    }

    /// The stored data, with the canonical transversal as representatives.
    pub fn to_data(&self) -> OrbitData {
        OrbitData {
            stabilizer: self.stabilizer.clone(),
            character: self.character.clone(),
            points: self
                .cosets
                .reps()
                .iter()
                .zip(&self.weights)
                .map(|(&b, w)| (b, w.iter().map(|&x| x as i64).collect()))
                .collect(),
        }
    }

    /// Re-derives the canonical form; always equal to `self`.
    pub fn canonicalize(&self) -> Orbit {
        canonical(
            &self.stabilizer,
            &self.character,
            self.weights.clone(),
            &self.cosets,
        )
    }

    pub fn group(&self) -> &Group {
        self.stabilizer.group()
    }

    pub fn stabilizer(&self) -> &Subgroup {
        &self.stabilizer
    }

    /// Character at the base point.
    pub fn character(&self) -> &Character {
        &self.character
    }

    /// Character at the `i`-th point of the transversal.
    pub fn character_at(&self, i: usize) -> Character {
        self.character.conjugate(self.cosets.reps()[i])
    }

    pub fn transversal(&self) -> &[Elem] {
        self.cosets.reps()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn r(&self) -> usize {
        self.weights[0].len()
    }

    /// Number of points, `|G/H|`.
    pub fn size(&self) -> usize {
        self.weights.len()
    }

    pub fn is_fixed_point(&self) -> bool {
        self.stabilizer.is_whole()
    }

    pub fn is_unit(&self) -> bool {
        self.is_fixed_point()
            && self.character.is_trivial()
            && self.weights[0].iter().all(|&x| x == 0)
    }

    /// No point carries the zero weight vector.
    pub fn is_positively_weighted(&self) -> bool {
        self.weights.iter().all(|w| w.iter().any(|&x| x > 0))
    }

    /// Every point has some coordinate above the corresponding bound.
    pub fn exceeds_bound(&self, bound: &[u32]) -> bool {
        self.weights
            .iter()
            .all(|w| w.iter().zip(bound).any(|(x, v)| x > v))
    }

    /// Decomposes `self x other` into orbits, one per double coset
    /// `H1 g H2`. The orbit through `(H1, g H2)` has stabilizer
    /// `S = H1 ∩ g H2 g^-1`, character `chi1|S * (g.chi2)|S`, and weight
    /// `w1(b H1) + w2(b g H2)` at the point `bS`.
    pub fn product(&self, other: &Orbit) -> Result<Vec<Orbit>> {
        let group = self.group();
        if group != other.group() {
            return Err(Error::GroupMismatch);
        }
        if self.r() != other.r() {
            return Err(Error::WeightLength {
                expected: self.r(),
                found: other.r(),
            });
        }
        let h1 = &self.stabilizer;
        let h2 = &other.stabilizer;
        let mut out = Vec::new();
        for g in group.double_cosets(h1, h2) {
            let moved = other.character.conjugate(g);
            let s = h1.intersection(moved.domain());
            let chi = self
                .character
                .restrict(&s)?
                .multiply(&moved.restrict(&s)?)?;
            let cosets = CosetSpace::new(&s);
            let weights = cosets
                .reps()
                .iter()
                .map(|&b| {
                    let w1 = &self.weights[self.cosets.coset_of(b)];
                    let w2 = &other.weights[other.cosets.coset_of(group.mul(b, g))];
                    w1.iter().zip(w2).map(|(x, y)| x + y).collect()
                })
                .collect();
            out.push(canonical(&s, &chi, weights, &cosets));
        }
        Ok(out)
    }
}

/// Minimal encoding over all equivariant relabelings.
///
/// An equivariant bijection `G/H -> G/K` sends `bH` to `bnK` for some `n`
/// with `n^-1 H n = K`; it carries the character `chi` to `n^-1.chi`. `K` is
/// fixed to the lexicographically least conjugate of `H`, and among the
/// admissible `n` the one giving the least `(weights, character)` wins.
fn canonical(h: &Subgroup, chi: &Character, weights: Vec<Weight>, cosets: &CosetSpace) -> Orbit {
    let group = h.group();
    let (k, _) = h.canonical_conjugate();
    let k_cosets = Arc::new(CosetSpace::new(&k));

    let mut best: Option<(Vec<Weight>, Character)> = None;
    for n in group.elements() {
        let n_inv = group.inv(n);
        if h.conjugate(n_inv) != k {
            continue;
        }
        let mut moved: Vec<Weight> = vec![Vec::new(); weights.len()];
        for (i, &b) in cosets.reps().iter().enumerate() {
            moved[k_cosets.coset_of(group.mul(b, n))] = weights[i].clone();
        }
        let moved_chi = chi.conjugate(n_inv);
        let better = match &best {
            None => true,
            Some((bw, bc)) => (&moved, moved_chi.values()) < (bw, bc.values()),
        };
        if better {
            best = Some((moved, moved_chi));
        }
    }
    let (weights, character) = best.expect("the canonical conjugator is admissible");
    Orbit {
        stabilizer: k,
        character,
        weights,
        cosets: k_cosets,
    }
}
