//! Finite groups given by explicit Cayley tables, their subgroups, and
//! one-dimensional characters.
//!
//! Characters are written additively: a character of a subgroup `H` is a
//! homomorphism `H -> Z/N`, where `N` is the exponent of the *parent* group.
//! The residue `k` stands for the root of unity `exp(2*pi*i*k/N)`. Using the
//! parent exponent for every subgroup means characters of different subgroups
//! can be restricted and multiplied without any change of modulus.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of an element inside its group's Cayley table.
pub type Elem = usize;

#[derive(Debug)]
struct GroupData {
    order: usize,
    /// Row-major: `table[a * order + b] = a * b`.
    table: Vec<Elem>,
    identity: Elem,
    inverse: Vec<Elem>,
    element_orders: Vec<u32>,
    exponent: u32,
    cayley: Vec<Vec<Elem>>,
}

/// A finite group. Cheap to clone; all clones share one table.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.table == other.0.table
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Group(order={}, exponent={})",
            self.order(),
            self.exponent()
        )
    }
}

/// The named families accepted by [`Group::named`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic,
    Dihedral,
}

impl std::str::FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(GroupKind::Cyclic),
            "dihedral" => Ok(GroupKind::Dihedral),
            other => Err(Error::UnsupportedKind(other.to_string())),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Group {
    /// Validates a Cayley table and builds the group.
    ///
    /// The identity is detected from the table, so it need not be element 0.
    pub fn from_cayley(cayley: Vec<Vec<Elem>>) -> Result<Group> {
        let n = cayley.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (i, row) in cayley.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!(
                    "entry {bad} in row {i} is out of range"
                )));
            }
        }
        let table: Vec<Elem> = cayley.iter().flatten().copied().collect();
        let mul = |a: Elem, b: Elem| table[a * n + b];

        // Latin square: every row and column is a permutation.
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                let r = mul(a, b);
                let c = mul(b, a);
                if row_seen[r] || col_seen[c] {
                    return Err(Error::NotAGroup(format!(
                        "row or column {a} repeats an element (not a Latin square)"
                    )));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;

        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }

        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                    .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;

        let element_orders: Vec<u32> = (0..n)
            .map(|a| {
                let mut k = 1u32;
                let mut p = a;
                while p != identity {
                    p = mul(p, a);
                    k += 1;
                }
                k
            })
            .collect();
        let exponent = element_orders
            .iter()
            .fold(1u64, |acc, &o| acc / gcd(acc, o as u64) * o as u64)
            as u32;

        Ok(Group(Arc::new(GroupData {
            order: n,
            table,
            identity,
            inverse,
            element_orders,
            exponent,
            cayley,
        })))
    }

    pub fn named(kind: GroupKind, m: usize) -> Result<Group> {
        if m == 0 {
            return Err(Error::NotAGroup("named group needs m >= 1".into()));
        }
        match kind {
            GroupKind::Cyclic => Group::cyclic(m),
            GroupKind::Dihedral => Group::dihedral(m),
        }
    }

    /// `Z/m` with element `i` standing for `i mod m`.
    pub fn cyclic(m: usize) -> Result<Group> {
        let table = (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m).collect())
            .collect();
        Group::from_cayley(table)
    }

    /// Symmetries of the regular `m`-gon, order `2m`. Element `i + m*j`
    /// is `r^i s^j`, with `s r s = r^-1`.
    pub fn dihedral(m: usize) -> Result<Group> {
        let n = 2 * m;
        let decode = |x: usize| (x % m, x / m);
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let (a, b) = decode(x);
                        let (c, d) = decode(y);
                        let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
                        rot + m * ((b + d) % 2)
                    })
                    .collect()
            })
            .collect();
        Group::from_cayley(table)
    }

    pub fn trivial() -> Group {
        Group::cyclic(1).expect("trivial group")
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> Elem {
        self.0.identity
    }

    pub fn exponent(&self) -> u32 {
        self.0.exponent
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.table[a * self.0.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.0.inverse[a]
    }

    pub fn element_order(&self, a: Elem) -> u32 {
        self.0.element_orders[a]
    }

    /// `a x a^-1`.
    #[inline]
    pub fn conj(&self, a: Elem, x: Elem) -> Elem {
        self.mul(self.mul(a, x), self.inv(a))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn cayley(&self) -> &[Vec<Elem>] {
        &self.0.cayley
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            group: self.clone(),
            elements: self.elements().collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            group: self.clone(),
            elements: vec![self.identity()],
        }
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &[Elem]) -> Subgroup {
        let mut members: BTreeSet<Elem> = BTreeSet::new();
        members.insert(self.identity());
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            group: self.clone(),
            elements: members.into_iter().collect(),
        }
    }

    /// Validates an explicit element list as a subgroup.
    pub fn subgroup(&self, elements: &[Elem]) -> Result<Subgroup> {
        if let Some(&bad) = elements.iter().find(|&&x| x >= self.order()) {
            return Err(Error::NotASubgroup(format!("element {bad} out of range")));
        }
        let set: BTreeSet<Elem> = elements.iter().copied().collect();
        if !set.contains(&self.identity()) {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        for &a in &set {
            if !set.contains(&self.inv(a)) {
                return Err(Error::NotASubgroup(format!(
                    "not closed under inverse at {a}"
                )));
            }
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("not closed: {a}*{b}")));
                }
            }
        }
        Ok(Subgroup {
            group: self.clone(),
            elements: set.into_iter().collect(),
        })
    }

    /// One representative `g` per double coset `H g K`, in increasing index
    /// order of the first uncovered element.
    pub fn double_cosets(&self, h: &Subgroup, k: &Subgroup) -> Vec<Elem> {
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for g in self.elements() {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &x in &h.elements {
                let xg = self.mul(x, g);
                for &y in &k.elements {
                    covered[self.mul(xg, y)] = true;
                }
            }
        }
        reps
    }
}

/// A subgroup, stored as the strictly increasing list of its element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    group: Group,
    elements: Vec<Elem>,
}

impl std::hash::Hash for Group {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.order.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements.cmp(&other.elements)
    }
}

impl Subgroup {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn position(&self, x: Elem) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// `g H g^-1`.
    pub fn conjugate(&self, g: Elem) -> Subgroup {
        let mut elements: Vec<Elem> = self
            .elements
            .iter()
            .map(|&h| self.group.conj(g, h))
            .collect();
        elements.sort_unstable();
        Subgroup {
            group: self.group.clone(),
            elements,
        }
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Subgroup {
            group: self.group.clone(),
            elements,
        }
    }

    /// `{g : g H g^-1 = H}`.
    pub fn normalizer(&self) -> Subgroup {
        let elements = self
            .group
            .elements()
            .filter(|&g| {
                self.elements
                    .iter()
                    .all(|&h| self.contains(self.group.conj(g, h)))
            })
            .collect();
        Subgroup {
            group: self.group.clone(),
            elements,
        }
    }

    /// The conjugate with lexicographically smallest element list, together
    /// with the least `g` such that `g H g^-1` equals it.
    pub fn canonical_conjugate(&self) -> (Subgroup, Elem) {
        self.group
            .elements()
            .map(|g| (self.conjugate(g), g))
            .min_by(|a, b| a.0.elements.cmp(&b.0.elements).then(a.1.cmp(&b.1)))
            .expect("groups are nonempty")
    }

    /// Greedy generating set: repeatedly adjoin the smallest missing element.
    pub fn generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = self.group.subgroup_closure(&gens);
        for &x in &self.elements {
            if !span.contains(x) {
                gens.push(x);
                span = self.group.subgroup_closure(&gens);
            }
        }
        gens
    }

    pub fn trivial_character(&self) -> Character {
        Character {
            domain: self.clone(),
            values: vec![0; self.order()],
        }
    }

    /// Builds a character from its values on `elements()` (same order),
    /// checking the homomorphism property.
    pub fn character(&self, values: Vec<u32>) -> Result<Character> {
        if values.len() != self.order() {
            return Err(Error::CharacterDomainMismatch(format!(
                "{} values for a subgroup of order {}",
                values.len(),
                self.order()
            )));
        }
        let n = self.group.exponent();
        let values: Vec<u32> = values.into_iter().map(|v| v % n).collect();
        let chi = Character {
            domain: self.clone(),
            values,
        };
        for &a in &self.elements {
            for &b in &self.elements {
                if chi.value(self.group.mul(a, b)) != (chi.value(a) + chi.value(b)) % n {
                    return Err(Error::NotAHomomorphism(format!(
                        "chi({a}*{b}) != chi({a}) + chi({b})"
                    )));
                }
            }
        }
        Ok(chi)
    }

    /// All homomorphisms into `Z/N`, `N` the exponent of the parent group.
    ///
    /// Each generator `g` can only go to a multiple of `N / ord(g)`; every
    /// such assignment is propagated along right multiplication by generators
    /// and kept when it is consistent.
    pub fn one_dim_characters(&self) -> Vec<Character> {
        let group = &self.group;
        let n = group.exponent();
        let gens = self.generators();
        let choices: Vec<Vec<u32>> = gens
            .iter()
            .map(|&g| {
                let ord = group.element_order(g);
                (0..ord).map(|j| j * (n / ord)).collect()
            })
            .collect();

        let mut out = Vec::new();
        let mut pick = vec![0usize; gens.len()];
        loop {
            let images: Vec<u32> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            if let Some(chi) = self.extend_character(&gens, &images) {
                out.push(chi);
            }
            // odometer over the choice lists
            let mut i = 0;
            while i < pick.len() {
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if i == pick.len() {
                break;
            }
        }
        out.sort();
        out
    }

    fn extend_character(&self, gens: &[Elem], images: &[u32]) -> Option<Character> {
        let group = &self.group;
        let n = group.exponent();
        let mut values: Vec<Option<u32>> = vec![None; self.order()];
        values[self.position(group.identity())?] = Some(0);
        let mut frontier = vec![group.identity()];
        while let Some(x) = frontier.pop() {
            let vx = values[self.position(x)?]?;
            for (&g, &vg) in gens.iter().zip(images) {
                let y = group.mul(x, g);
                let slot = &mut values[self.position(y)?];
                let vy = (vx + vg) % n;
                match *slot {
                    None => {
                        *slot = Some(vy);
                        frontier.push(y);
                    }
                    Some(v) if v != vy => return None,
                    Some(_) => {}
                }
            }
        }
        let values = values.into_iter().collect::<Option<Vec<u32>>>()?;
        self.character(values).ok()
    }
}

/// A one-dimensional character of a subgroup, valued in `Z/N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character {
    domain: Subgroup,
    values: Vec<u32>,
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character{{")?;
        for (i, (x, v)) in self.domain.elements.iter().zip(&self.values).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}: {v}")?;
        }
        write!(f, "}}")
    }
}

impl PartialOrd for Character {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Character {
    fn cmp(&self, other: &Self) -> Ordering {
        self.domain
            .cmp(&other.domain)
            .then_with(|| self.values.cmp(&other.values))
    }
}

impl Character {
    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    /// Residues in the order of `domain().elements()`.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Residue at `x`. Panics if `x` is outside the domain.
    pub fn value(&self, x: Elem) -> u32 {
        let i = self
            .domain
            .position(x)
            .expect("element outside character domain");
        self.values[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// The character `g -> chi(a^-1 g a)` of `a H a^-1`.
    pub fn conjugate(&self, a: Elem) -> Character {
        let group = &self.domain.group;
        let domain = self.domain.conjugate(a);
        let a_inv = group.inv(a);
        let values = domain
            .elements
            .iter()
            .map(|&g| self.value(group.conj(a_inv, g)))
            .collect();
        Character { domain, values }
    }

    pub fn restrict(&self, to: &Subgroup) -> Result<Character> {
        if !to.is_subgroup_of(&self.domain) {
            return Err(Error::DomainMismatch(format!(
                "{:?} is not contained in {:?}",
                to, self.domain
            )));
        }
        let values = to.elements.iter().map(|&x| self.value(x)).collect();
        Ok(Character {
            domain: to.clone(),
            values,
        })
    }

    pub fn multiply(&self, other: &Character) -> Result<Character> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(format!(
                "{:?} vs {:?}",
                self.domain, other.domain
            )));
        }
        let n = self.domain.group.exponent();
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a + b) % n)
            .collect();
        Ok(Character {
            domain: self.domain.clone(),
            values,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Group {
        // permutations of {0,1,2} listed in lexicographic order, composed as
        // (p * q)(i) = p(q(i))
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| idx([p[q[0]], p[q[1]], p[q[2]]]))
                    .collect()
            })
            .collect();
        Group::from_cayley(table).unwrap()
    }

    fn is_isomorphic(a: &Group, b: &Group) -> bool {
        fn extend(
            a: &Group,
            b: &Group,
            map: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
            i: usize,
        ) -> bool {
            if i == a.order() {
                return a.elements().all(|x| {
                    a.elements()
                        .all(|y| map[a.mul(x, y)] == Some(b.mul(map[x].unwrap(), map[y].unwrap())))
                });
            }
            for t in b.elements() {
                if !used[t] && a.element_order(i) == b.element_order(t) {
                    used[t] = true;
                    map[i] = Some(t);
                    if extend(a, b, map, used, i + 1) {
                        return true;
                    }
                    used[t] = false;
                    map[i] = None;
                }
            }
            false
        }
        a.order() == b.order()
            && extend(
                a,
                b,
                &mut vec![None; a.order()],
                &mut vec![false; b.order()],
                0,
            )
    }

    #[test]
    fn builds_small_groups() {
        let t = Group::from_cayley(vec![vec![0]]).unwrap();
        assert_eq!((t.order(), t.exponent()), (1, 1));
        let z2 = Group::from_cayley(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!((z2.order(), z2.exponent()), (2, 2));
        let s3 = s3();
        assert_eq!((s3.order(), s3.exponent()), (6, 6));
        assert!(!s3.is_abelian());
    }

    #[test]
    fn identity_need_not_be_zero() {
        let g = Group::from_cayley(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.identity(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn rejects_non_groups() {
        assert!(matches!(
            Group::from_cayley(vec![vec![0, 0], vec![1, 1]]),
            Err(Error::NotAGroup(_))
        ));
        assert!(matches!(
            Group::from_cayley(vec![vec![0, 2], vec![1, 0]]),
            Err(Error::NotAGroup(_))
        ));
        // Latin square without identity
        assert!(matches!(
            Group::from_cayley(
                vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]]
                    .into_iter()
                    .rev()
                    .collect()
            ),
            Err(Error::NotAGroup(_))
        ));
        // a non-associative loop of order 5 (Latin square with identity 0)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            Group::from_cayley(loop5),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn named_groups() {
        assert_eq!(Group::named(GroupKind::Cyclic, 1).unwrap().order(), 1);
        assert_eq!(
            Group::named(GroupKind::Cyclic, 2).unwrap(),
            Group::from_cayley(vec![vec![0, 1], vec![1, 0]]).unwrap()
        );
        let d3 = Group::named(GroupKind::Dihedral, 3).unwrap();
        assert!(is_isomorphic(&d3, &s3()));
        assert!(!is_isomorphic(&Group::cyclic(6).unwrap(), &s3()));
        assert!(matches!(
            "icosahedral".parse::<GroupKind>(),
            Err(Error::UnsupportedKind(_))
        ));
    }

    #[test]
    fn closure_and_conjugation() {
        let z2 = Group::cyclic(2).unwrap();
        assert_eq!(z2.subgroup_closure(&[]).elements(), &[0]);
        assert_eq!(z2.subgroup_closure(&[1]).elements(), &[0, 1]);

        let g = s3();
        let c3 = g.subgroup_closure(&[3]);
        assert_eq!(c3.elements(), &[0, 3, 4]);
        let h = g.subgroup_closure(&[1]);
        assert_eq!(h.conjugate(g.identity()), h);
        assert_eq!(g.whole().conjugate(3), g.whole());
        let h2 = h.conjugate(3);
        assert_eq!(h2.order(), 2);
        assert_ne!(h2, h);
    }

    #[test]
    fn normalizers() {
        let g = s3();
        assert_eq!(g.whole().normalizer(), g.whole());
        assert_eq!(g.trivial_subgroup().normalizer(), g.whole());
        let h = g.subgroup_closure(&[1]);
        assert_eq!(h.normalizer(), h);
        // brute force
        let brute: Vec<_> = g.elements().filter(|&x| h.conjugate(x) == h).collect();
        assert_eq!(h.normalizer().elements(), &brute[..]);
    }

    #[test]
    fn double_coset_counts() {
        let g = s3();
        assert_eq!(g.double_cosets(&g.whole(), &g.whole()), vec![g.identity()]);
        assert_eq!(
            g.double_cosets(&g.trivial_subgroup(), &g.trivial_subgroup())
                .len(),
            6
        );
        let h = g.subgroup_closure(&[1]);
        let reps = g.double_cosets(&h, &h);
        assert_eq!(reps.len(), 2);
        let mut sizes: Vec<usize> = reps
            .iter()
            .map(|&r| {
                let set: BTreeSet<_> = h
                    .elements()
                    .iter()
                    .flat_map(|&x| h.elements().iter().map(move |&y| (x, y)))
                    .map(|(x, y)| g.mul(g.mul(x, r), y))
                    .collect();
                set.len()
            })
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
    }

    #[test]
    fn characters_of_small_subgroups() {
        let g = s3();
        assert_eq!(g.trivial_subgroup().one_dim_characters().len(), 1);

        let z2 = Group::cyclic(2).unwrap();
        let chars = z2.whole().one_dim_characters();
        let on_sigma: Vec<u32> = chars.iter().map(|c| c.value(1)).collect();
        assert_eq!(on_sigma, vec![0, 1]);

        let c3 = g.subgroup_closure(&[3]);
        let mut on_gen: Vec<u32> = c3.one_dim_characters().iter().map(|c| c.value(3)).collect();
        on_gen.sort();
        assert_eq!(on_gen, vec![0, 2, 4]);

        // S3 has abelianization Z2
        assert_eq!(g.whole().one_dim_characters().len(), 2);
        // Klein four group
        assert_eq!(
            Group::dihedral(2)
                .unwrap()
                .whole()
                .one_dim_characters()
                .len(),
            4
        );
    }

    #[test]
    fn character_conjugation_restriction_product() {
        let g = s3();
        let h = g.subgroup_closure(&[1]);
        let sign = h
            .one_dim_characters()
            .into_iter()
            .find(|c| !c.is_trivial())
            .unwrap();
        assert_eq!(sign.conjugate(g.identity()), sign);
        let moved = sign.conjugate(3);
        assert_eq!(moved.domain(), &h.conjugate(3));
        let image = g.conj(3, 1);
        assert_eq!(moved.value(image), 3);
        assert_eq!(moved.value(g.identity()), 0);

        let c3 = g.subgroup_closure(&[3]);
        assert!(c3.trivial_character().conjugate(1).is_trivial());

        let z2 = Group::cyclic(2).unwrap();
        let s = z2.whole().character(vec![0, 1]).unwrap();
        assert!(s.multiply(&s).unwrap().is_trivial());
        assert!(s.restrict(&z2.trivial_subgroup()).unwrap().is_trivial());

        let z4 = Group::cyclic(4).unwrap();
        let chi = z4.whole().character(vec![0, 1, 2, 3]).unwrap();
        let sub = z4.subgroup_closure(&[2]);
        let r = chi.restrict(&sub).unwrap();
        assert_eq!(r.values(), &[0, 2]);

        assert!(matches!(
            sign.multiply(&c3.trivial_character()),
            Err(Error::DomainMismatch(_))
        ));
        assert!(matches!(
            r.restrict(&z4.whole()),
            Err(Error::DomainMismatch(_))
        ));
        assert!(matches!(
            z2.whole().character(vec![1, 1]),
            Err(Error::NotAHomomorphism(_))
        ));
    }

    #[test]
    fn subgroup_validation() {
        let g = s3();
        assert!(g.subgroup(&[0, 1]).is_ok());
        assert!(g.subgroup(&[0, 1, 2]).is_err());
        assert!(g.subgroup(&[1]).is_err());
        assert!(g.subgroup(&[0, 9]).is_err());
    }

    fn small_groups() -> Vec<Group> {
        let mut v: Vec<Group> = (1..=6).map(|m| Group::cyclic(m).unwrap()).collect();
        v.extend((1..=4).map(|m| Group::dihedral(m).unwrap()));
        v.push(s3());
        v
    }

    #[test]
    fn group_axioms_hold_for_named_families() {
        for g in small_groups() {
            for a in g.elements() {
                assert_eq!(g.mul(a, g.inv(a)), g.identity());
                let mut k = g.identity();
                for _ in 0..g.exponent() {
                    k = g.mul(k, a);
                }
                assert_eq!(k, g.identity());
                for b in g.elements() {
                    for c in g.elements() {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn double_cosets_partition_the_group() {
        for g in small_groups() {
            let subs: Vec<Subgroup> = g.elements().map(|x| g.subgroup_closure(&[x])).collect();
            for h in &subs {
                for k in &subs {
                    let reps = g.double_cosets(h, k);
                    let mut seen = vec![0usize; g.order()];
                    for &r in &reps {
                        let set: BTreeSet<_> = h
                            .elements()
                            .iter()
                            .flat_map(|&x| k.elements().iter().map(move |&y| (x, y)))
                            .map(|(x, y)| g.mul(g.mul(x, r), y))
                            .collect();
                        for x in set {
                            seen[x] += 1;
                        }
                    }
                    assert!(seen.iter().all(|&c| c == 1));
                }
            }
        }
    }

    #[test]
    fn characters_form_a_group() {
        for g in small_groups() {
            for x in g.elements() {
                for y in g.elements() {
                    let h = g.subgroup_closure(&[x, y]);
                    let chars = h.one_dim_characters();
                    assert!(chars.contains(&h.trivial_character()));
                    for a in &chars {
                        for b in &chars {
                            assert!(chars.contains(&a.multiply(b).unwrap()));
                        }
                    }
                    for a in g.elements() {
                        for b in g.elements() {
                            for chi in &chars {
                                assert_eq!(
                                    chi.conjugate(b).conjugate(a),
                                    chi.conjugate(g.mul(a, b))
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn character_count_is_abelianization_order() {
        // |H^ab| = |H| / |[H,H]|
        for g in small_groups() {
            let h = g.whole();
            let commutators: Vec<Elem> = g
                .elements()
                .flat_map(|a| g.elements().map(move |b| (a, b)))
                .map(|(a, b)| g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))))
                .collect();
            let derived = g.subgroup_closure(&commutators);
            assert_eq!(h.one_dim_characters().len(), g.order() / derived.order());
        }
    }
}
