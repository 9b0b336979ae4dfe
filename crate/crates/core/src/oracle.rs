//! Brute-force reference computations.
//!
//! Nothing here goes through [`crate::orbit::Orbit`] products or
//! [`crate::ring::RingElement`] arithmetic: the series are obtained by
//! enumerating monomials directly, and orbit isomorphism is decided by
//! trying every bijection of points.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::{Elem, Group};
use crate::orbit::OrbitData;
use crate::series::{EquivariantSeries, MultiIndexSeries};

/// A 2x2 signed permutation matrix acting on the coordinates `(x, y)`.
pub type SignedPerm = [[i32; 2]; 2];

const IDENTITY: SignedPerm = [[1, 0], [0, 1]];

fn mat_mul(a: &SignedPerm, b: &SignedPerm) -> SignedPerm {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn is_signed_perm(m: &SignedPerm) -> bool {
    let ok_entry = m.iter().flatten().all(|&x| x.abs() <= 1);
    let rows = m.iter().all(|r| r.iter().filter(|&&x| x != 0).count() == 1);
    let cols = (0..2).all(|j| (0..2).filter(|&i| m[i][j] != 0).count() == 1);
    ok_entry && rows && cols
}

/// The inverse of a signed permutation matrix is its transpose.
fn transpose(m: &SignedPerm) -> SignedPerm {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

/// A linear action of a finite group on `C^2` by signed permutation
/// matrices, acting on functions by `(a*f)(p) = f(a^-1 p)`.
#[derive(Clone, Debug)]
pub struct MonomialAction {
    group: Group,
    matrices: Vec<SignedPerm>,
}

impl MonomialAction {
    pub fn new(group: &Group, matrices: Vec<SignedPerm>) -> Result<MonomialAction> {
        if matrices.len() != group.order() {
            return Err(Error::InvalidAction(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        if let Some(i) = matrices.iter().position(|m| !is_signed_perm(m)) {
            return Err(Error::InvalidAction(format!(
                "matrix {i} is not a signed permutation"
            )));
        }
        if matrices[group.identity()] != IDENTITY {
            return Err(Error::InvalidAction("identity must act trivially".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                if matrices[group.mul(a, b)] != mat_mul(&matrices[a], &matrices[b]) {
                    return Err(Error::InvalidAction(format!(
                        "not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(MonomialAction {
            group: group.clone(),
            matrices,
        })
    }

    /// `(x, y) -> (-x, -y)`.
    pub fn antipodal() -> MonomialAction {
        let g = Group::cyclic(2).expect("Z2");
        MonomialAction::new(&g, vec![IDENTITY, [[-1, 0], [0, -1]]]).expect("valid action")
    }

    /// `(x, y) -> (y, x)`.
    pub fn swap() -> MonomialAction {
        let g = Group::cyclic(2).expect("Z2");
        MonomialAction::new(&g, vec![IDENTITY, [[0, 1], [1, 0]]]).expect("valid action")
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Trace of `a*` on homogeneous forms of degree `k`: the signed count of
    /// monomials `x^i y^j` sent to `±x^i y^j`.
    fn trace_on_degree(&self, a: Elem, k: u32) -> i64 {
        // f(a^-1 p): substitute (x, y) by the rows of a^-1
        let sub = transpose(&self.matrices[a]);
        let var = |row: &[i32; 2]| -> (usize, i64) {
            if row[0] != 0 {
                (0, row[0] as i64)
            } else {
                (1, row[1] as i64)
            }
        };
        let (v0, s0) = var(&sub[0]);
        let (v1, s1) = var(&sub[1]);
        let mut trace = 0;
        for i in 0..=k {
            let j = k - i;
            let mut exps = [0u32; 2];
            exps[v0] += i;
            exps[v1] += j;
            if exps == [i, j] {
                trace += s0.pow(i) * s1.pow(j);
            }
        }
        trace
    }
}

/// Number of degree-`k` monomials in two variables, for `k <= k_max`.
pub fn jet_dimension_series(k_max: u32) -> MultiIndexSeries {
    let terms = (0..=k_max).map(|k| {
        let count = (0..=k)
            .flat_map(|a| (0..=k).map(move |b| (a, b)))
            .filter(|(a, b)| a + b == k)
            .count();
        (vec![k], BigInt::from(count))
    });
    MultiIndexSeries::from_terms(&[k_max], terms)
}

/// For each degree, the decomposition of degree-`k` forms into character
/// eigenspaces `{f : a*f = chi(a) f}`, weighted by dimension.
///
/// Multiplicities come from the orthogonality formula
/// `m(chi) = |G|^-1 sum_a conj(chi(a)) tr(a)`, evaluated in floating point and
/// rounded; the residual is checked.
pub fn equivariant_jet_series(action: &MonomialAction, k_max: u32) -> Result<EquivariantSeries> {
    let group = action.group();
    if !group.is_abelian() {
        return Err(Error::NonAbelianAction);
    }
    let n = group.exponent() as f64;
    let chars = group.whole().one_dim_characters();
    let mut out = EquivariantSeries::zero(group, &[k_max]);
    for k in 0..=k_max {
        let traces: Vec<i64> = group
            .elements()
            .map(|a| action.trace_on_degree(a, k))
            .collect();
        let mut total = 0i64;
        for chi in &chars {
            let (mut re, mut im) = (0.0f64, 0.0f64);
            for a in group.elements() {
                let angle = -2.0 * std::f64::consts::PI * chi.value(a) as f64 / n;
                re += traces[a] as f64 * angle.cos();
                im += traces[a] as f64 * angle.sin();
            }
            re /= group.order() as f64;
            im /= group.order() as f64;
            let m = re.round();
            assert!(
                (re - m).abs() < 1e-9 && im.abs() < 1e-9,
                "non-integral multiplicity"
            );
            total += m as i64;
            out.add_term(&[k], chi, BigInt::from(m as i64));
        }
        assert_eq!(
            total,
            k as i64 + 1,
            "eigenspaces must fill the degree-{k} forms"
        );
    }
    Ok(out)
}

/// Indicator series of the numerical semigroup generated by `gens`.
pub fn semigroup_series(gens: &[u32], k_max: u32) -> MultiIndexSeries {
    let mut reachable = vec![false; k_max as usize + 1];
    reachable[0] = true;
    for s in 1..=k_max as usize {
        reachable[s] = gens
            .iter()
            .any(|&g| g as usize <= s && g > 0 && reachable[s - g as usize]);
    }
    let terms = reachable
        .iter()
        .enumerate()
        .filter(|(_, &hit)| hit)
        .map(|(s, _)| (vec![s as u32], 1));
    MultiIndexSeries::from_terms(&[k_max], terms)
}

/// Decides isomorphism of two transitive (G,r)-sets by trying every
/// bijection between their points.
///
/// A bijection qualifies when it commutes with the action of every group
/// element, preserves weights, and matches the character at every point
/// (the character at `bH` is `x -> chi(b^-1 x b)` on `bHb^-1`).
pub fn orbits_isomorphic_brute_force(a: &OrbitData, b: &OrbitData) -> bool {
    let group = a.stabilizer.group();
    if group != b.stabilizer.group() || a.points.len() != b.points.len() {
        return false;
    }
    let same_coset =
        |h: &crate::group::Subgroup, x: Elem, y: Elem| h.contains(group.mul(group.inv(x), y));
    let locate = |d: &OrbitData, g: Elem| -> usize {
        d.points
            .iter()
            .position(|(r, _)| same_coset(&d.stabilizer, *r, g))
            .expect("complete transversal")
    };
    // action tables: act[g][i] = index of g * point i
    let table = |d: &OrbitData| -> Vec<Vec<usize>> {
        group
            .elements()
            .map(|g| {
                d.points
                    .iter()
                    .map(|(r, _)| locate(d, group.mul(g, *r)))
                    .collect()
            })
            .collect()
    };
    let (act_a, act_b) = (table(a), table(b));
    let char_at = |d: &OrbitData, i: usize| -> Vec<(Elem, u32)> {
        let rep = d.points[i].0;
        let mut v: Vec<(Elem, u32)> = d
            .stabilizer
            .elements()
            .iter()
            .map(|&h| (group.conj(rep, h), d.character.value(h)))
            .collect();
        v.sort_unstable();
        v
    };
    let m = a.points.len();
    let chars_a: Vec<_> = (0..m).map(|i| char_at(a, i)).collect();
    let chars_b: Vec<_> = (0..m).map(|i| char_at(b, i)).collect();

    fn search(
        i: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ok_pair: &dyn Fn(usize, usize) -> bool,
        check: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if i == perm.len() {
            return check(perm);
        }
        for j in 0..perm.len() {
            if !used[j] && ok_pair(i, j) {
                used[j] = true;
                perm[i] = j;
                if search(i + 1, perm, used, ok_pair, check) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    let ok_pair = |i: usize, j: usize| a.points[i].1 == b.points[j].1 && chars_a[i] == chars_b[j];
    let check = |perm: &[usize]| {
        (0..group.order()).all(|g| (0..m).all(|i| perm[act_a[g][i]] == act_b[g][perm[i]]))
    };
    search(0, &mut vec![0; m], &mut vec![false; m], &ok_pair, &check)
}
