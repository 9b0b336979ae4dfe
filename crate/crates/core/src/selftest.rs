//! The verification suite run by `grsets selftest` and the acceptance tests.
//!
//! Each check is named `c<N>/<topic>[/<spec>]`, where `N` is the number of
//! the acceptance criterion it belongs to, and can be selected by substring.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::{Elem, Group};
use crate::oracle::{
    equivariant_jet_series, jet_dimension_series, orbits_isomorphic_brute_force, semigroup_series,
    MonomialAction,
};
use crate::orbit::{CosetSpace, Orbit, OrbitData};
use crate::resolution::{builtin_specs, ResolutionSpec, Stratum};
use crate::ring::{Context, RingElement};
use crate::series::{project_pi, project_pi_prime, MultiIndexSeries};

const SEED: u64 = 0x5eed_2024;

/// Which independent computation the usual series of a spec is checked against.
#[derive(Clone, Debug)]
pub enum UsualOracle {
    /// Dimensions of spaces of homogeneous forms: `k + 1`.
    JetDimensions,
    /// Indicator series of a numerical semigroup.
    Semigroup(Vec<u32>),
}

/// A spec together with the oracles it must agree with.
#[derive(Clone, Debug)]
pub struct SpecCase {
    pub name: String,
    pub json: String,
    pub usual: UsualOracle,
    pub equivariant: Option<MonomialAction>,
}

/// The compiled-in specs with their oracles.
pub fn builtin_cases() -> Vec<SpecCase> {
    builtin_specs()
        .iter()
        .map(|b| {
            let (usual, equivariant) = match b.name {
                "smooth-branch" => (UsualOracle::Semigroup(vec![1]), None),
                "cusp" => (UsualOracle::Semigroup(vec![2, 3]), None),
                "z2-antipodal" => (
                    UsualOracle::JetDimensions,
                    Some(MonomialAction::antipodal()),
                ),
                "z2-swap" => (UsualOracle::JetDimensions, Some(MonomialAction::swap())),
                _ => (UsualOracle::JetDimensions, None),
            };
            SpecCase {
                name: b.name.to_string(),
                json: b.json.to_string(),
                usual,
                equivariant,
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

struct Check {
    criterion: u8,
    name: String,
    run: Box<dyn Fn() -> Outcome>,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn run(filter: Option<&str>) -> Vec<CheckResult> {
    run_with(&builtin_cases(), filter)
}

pub fn run_with(cases: &[SpecCase], filter: Option<&str>) -> Vec<CheckResult> {
    checks(cases)
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.name.contains(f)))
        .map(|c| {
            let outcome = (c.run)();
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult {
                criterion: c.criterion,
                name: c.name,
                passed,
                detail,
            }
        })
        .collect()
}

fn checks(cases: &[SpecCase]) -> Vec<Check> {
    let mut out = vec![
        Check {
            criterion: 1,
            name: "c1/z2-relations".into(),
            run: Box::new(z2_relations),
        },
        Check {
            criterion: 2,
            name: "c2/z2-a15-identity".into(),
            run: Box::new(z2_a15),
        },
        Check {
            criterion: 3,
            name: "c3/trivial-group-isomorphism".into(),
            run: Box::new(trivial_group_isomorphism),
        },
    ];
    for case in cases {
        let c = case.clone();
        out.push(Check {
            criterion: 4,
            name: format!("c4/usual-series/{}", case.name),
            run: Box::new(move || usual_series_matches(&c)),
        });
    }
    for case in cases.iter().filter(|c| c.equivariant.is_some()) {
        let c = case.clone();
        out.push(Check {
            criterion: 5,
            name: format!("c5/fixed-part/{}", case.name),
            run: Box::new(move || fixed_part_matches(&c)),
        });
    }
    for case in cases {
        let c = case.clone();
        out.push(Check {
            criterion: 6,
            name: format!("c6/strata-structure/{}", case.name),
            run: Box::new(move || strata_structure(&c)),
        });
    }
    out.push(Check {
        criterion: 7,
        name: "c7/ring-axioms".into(),
        run: Box::new(ring_axioms),
    });
    out.push(Check {
        criterion: 7,
        name: "c7/geometric-inverse".into(),
        run: Box::new(geometric_inverse),
    });
    out.push(Check {
        criterion: 8,
        name: "c8/canonical-isomorphic".into(),
        run: Box::new(canonical_isomorphic),
    });
    out.push(Check {
        criterion: 8,
        name: "c8/canonical-non-isomorphic".into(),
        run: Box::new(canonical_non_isomorphic),
    });
    out
}

fn z2_generators(ctx: &Context) -> [RingElement; 4] {
    let g = ctx.group();
    let free = g.trivial_subgroup();
    let all = g.whole();
    let sign = all.character(vec![0, 1]).expect("sign character");
    let orbits = [
        Orbit::new(
            &free,
            &free.trivial_character(),
            &[(0, vec![0]), (1, vec![1])],
        ),
        Orbit::new(
            &free,
            &free.trivial_character(),
            &[(0, vec![0]), (1, vec![0])],
        ),
        Orbit::new(&all, &all.trivial_character(), &[(0, vec![1])]),
        Orbit::new(&all, &sign, &[(0, vec![0])]),
    ];
    orbits.map(|o| {
        ctx.from_orbit(&o.expect("generator"))
            .expect("same context")
    })
}

fn z2_relations() -> Outcome {
    let ctx = Context::new(&lift(Group::cyclic(2))?, &[10]);
    let [t1, t2, _, t4] = z2_generators(&ctx);
    let two = BigInt::from(2);
    let relations = [
        ("t4^2 = 1", lift(t4.mul(&t4))?, ctx.one()),
        ("t2^2 = 2 t2", lift(t2.mul(&t2))?, t2.scale(&two)),
        ("t2 t4 = t2", lift(t2.mul(&t4))?, t2.clone()),
        ("t1 t4 = t1", lift(t1.mul(&t4))?, t1.clone()),
        ("t1 t2 = 2 t1", lift(t1.mul(&t2))?, t1.scale(&two)),
    ];
    for (label, lhs, rhs) in &relations {
        ensure(lift(lhs.equals(rhs))?, || {
            format!("{label} fails: {lhs} vs {rhs}")
        })?;
    }
    Ok("5 relations hold exactly at V=(10)".into())
}

fn z2_a15() -> Outcome {
    let g = lift(Group::cyclic(2))?;
    let ctx = Context::new(&g, &[6]);
    let [t1, t2, t3, _] = z2_generators(&ctx);
    let lhs = lift(t1.pow(4).mul(&t3))?;
    let lhs = lift(lhs.add(&lift(t2.mul(&t3.pow(3)))?))?;
    let lhs = lift(lhs.sub(&lift(t1.pow(2).mul(&t3.pow(2)))?.scale(&BigInt::from(4))))?;
    let free = g.trivial_subgroup();
    let a15 = lift(Orbit::new(
        &free,
        &free.trivial_character(),
        &[(0, vec![1]), (1, vec![5])],
    ))?;
    let rhs = lift(ctx.from_orbit(&a15))?;
    ensure(lift(lhs.equals(&rhs))?, || format!("got {lhs}"))?;
    Ok(format!("t1^4 t3 + t2 t3^3 - 4 t1^2 t3^2 = {lhs} at V=(6)"))
}

/// Dense truncated polynomials in two variables, independent of the series module.
#[derive(Clone, PartialEq, Debug)]
struct Dense([[i64; 5]; 5]);

impl Dense {
    fn add(&self, o: &Dense) -> Dense {
        Dense(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j] + o.0[i][j])))
    }

    fn mul(&self, o: &Dense) -> Dense {
        let mut c = [[0; 5]; 5];
        for i in 0..5 {
            for j in 0..5 {
                for k in 0..5 - i {
                    for l in 0..5 - j {
                        c[i + k][j + l] += self.0[i][j] * o.0[k][l];
                    }
                }
            }
        }
        Dense(c)
    }
}

fn to_dense(e: &RingElement) -> std::result::Result<Dense, String> {
    let mut c = [[0i64; 5]; 5];
    for (o, k) in e.terms() {
        ensure(o.size() == 1, || {
            format!("trivial group orbit with {} points", o.size())
        })?;
        let w = &o.weights()[0];
        let k = i64::try_from(k).map_err(|_| "coefficient overflow".to_string())?;
        c[w[0] as usize][w[1] as usize] += k;
    }
    Ok(Dense(c))
}

fn trivial_group_isomorphism() -> Outcome {
    let g = Group::trivial();
    let h = g.whole();
    let ctx = Context::new(&g, &[4, 4]);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let random = |rng: &mut ChaCha8Rng| -> std::result::Result<(RingElement, Dense), String> {
        let mut e = ctx.zero();
        let mut d = Dense([[0; 5]; 5]);
        for _ in 0..rng.gen_range(1..=3) {
            let (a, b) = (rng.gen_range(0..=4u32), rng.gen_range(0..=4u32));
            let c: i64 = rng.gen_range(-3..=3);
            let o = lift(Orbit::new(
                &h,
                &h.trivial_character(),
                &[(0, vec![a as i64, b as i64])],
            ))?;
            e = lift(e.add(&lift(ctx.from_orbit(&o))?.scale(&BigInt::from(c))))?;
            d.0[a as usize][b as usize] += c;
        }
        Ok((e, d))
    };
    for i in 0..200 {
        let (x, dx) = random(&mut rng)?;
        let (y, dy) = random(&mut rng)?;
        let (z, dz) = if i % 2 == 0 {
            (lift(x.mul(&y))?, dx.mul(&dy))
        } else {
            (lift(x.add(&y))?, dx.add(&dy))
        };
        ensure(to_dense(&z)? == dz, || format!("trial {i}: ring gives {z}"))?;
    }
    Ok("200 random sums/products agree with dense polynomial arithmetic at V=(4,4)".into())
}

fn load(case: &SpecCase, bound: u32) -> std::result::Result<ResolutionSpec, String> {
    lift(lift(ResolutionSpec::parse(&case.json))?.with_bound(&[bound]))
}

fn usual_series_matches(case: &SpecCase) -> Outcome {
    let spec = load(case, 8)?;
    let got = project_pi(&lift(spec.poincare_series())?);
    let (want, label): (MultiIndexSeries, String) = match &case.usual {
        UsualOracle::JetDimensions => (jet_dimension_series(8), "jet dimensions".into()),
        UsualOracle::Semigroup(gens) => (semigroup_series(gens, 8), format!("semigroup {gens:?}")),
    };
    ensure(got == want, || {
        format!("pi(P^G) = {got}, oracle ({label}) = {want}")
    })?;
    Ok(format!("pi(P^G) = {got} matches {label}"))
}

fn fixed_part_matches(case: &SpecCase) -> Outcome {
    let action = case.equivariant.as_ref().ok_or("no equivariant oracle")?;
    let spec = load(case, 8)?;
    let got = project_pi_prime(&lift(spec.poincare_series())?);
    let want = lift(equivariant_jet_series(action, 8))?;
    ensure(got == want, || format!("pi'(P^G) = {got}, oracle = {want}"))?;
    Ok("pi'(P^G) matches the character decomposition of jets up to degree 8".into())
}

fn strata_structure(case: &SpecCase) -> Outcome {
    let spec = load(case, 8)?;
    let base = lift(spec.poincare_series())?;
    let strata = spec.strata().to_vec();
    let n = strata.len();
    for shift in 0..n {
        let mut perm = strata.clone();
        perm.rotate_left(shift);
        if shift % 2 == 1 {
            perm.reverse();
        }
        let p = lift(lift(spec.with_strata(perm))?.poincare_series())?;
        ensure(p == base, || {
            format!("permutation {shift} changes the series")
        })?;
    }
    for (i, s) in strata.iter().enumerate() {
        let mut extra = strata.clone();
        extra.insert(
            i,
            Stratum {
                name: format!("{}-blowup", s.name),
                euler: 0,
                orbit: s.orbit.clone(),
            },
        );
        let p = lift(lift(spec.with_strata(extra))?.poincare_series())?;
        ensure(p == base, || {
            format!("a zero-Euler copy of `{}` changes the series", s.name)
        })?;
    }
    Ok(format!(
        "{n} permutations and {n} zero-Euler insertions leave P^G unchanged"
    ))
}

fn small_groups() -> Vec<Group> {
    let mut v: Vec<Group> = (1..=6).map(|m| Group::cyclic(m).expect("cyclic")).collect();
    v.push(Group::dihedral(2).expect("Klein four"));
    v.push(Group::dihedral(3).expect("S3"));
    v
}

/// Random orbit data with arbitrary (non-canonical) stabilizer and
/// representatives.
fn random_orbit_data(
    rng: &mut ChaCha8Rng,
    g: &Group,
    r: usize,
    max_w: u32,
    min_w: u32,
) -> OrbitData {
    let gens: Vec<Elem> = (0..rng.gen_range(0..=2))
        .map(|_| rng.gen_range(0..g.order()))
        .collect();
    let h = g.subgroup_closure(&gens);
    let character = h
        .one_dim_characters()
        .choose(rng)
        .expect("trivial character exists")
        .clone();
    let points = CosetSpace::new(&h)
        .reps()
        .iter()
        .map(|&b| {
            let x = *h.elements().choose(rng).expect("nonempty");
            let w = (0..r)
                .map(|_| rng.gen_range(min_w..=max_w) as i64)
                .collect();
            (g.mul(b, x), w)
        })
        .collect();
    OrbitData {
        stabilizer: h,
        character,
        points,
    }
}

fn random_element(
    rng: &mut ChaCha8Rng,
    ctx: &Context,
    max_w: u32,
    min_w: u32,
) -> std::result::Result<RingElement, String> {
    let mut e = ctx.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let d = random_orbit_data(rng, ctx.group(), ctx.r(), max_w, min_w);
        let o = lift(Orbit::from_data(&d))?;
        let c = rng.gen_range(-3i64..=3);
        e = lift(e.add(&lift(ctx.from_orbit(&o))?.scale(&BigInt::from(c))))?;
    }
    Ok(e)
}

fn random_context(rng: &mut ChaCha8Rng, groups: &[Group]) -> Context {
    let g = groups.choose(rng).expect("groups").clone();
    let r = rng.gen_range(1..=2);
    let bound: Vec<u32> = (0..r).map(|_| rng.gen_range(0..=4)).collect();
    Context::new(&g, &bound)
}

fn ring_axioms() -> Outcome {
    let groups = small_groups();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    for i in 0..500 {
        let ctx = random_context(&mut rng, &groups);
        let a = random_element(&mut rng, &ctx, 2, 0)?;
        let b = random_element(&mut rng, &ctx, 2, 0)?;
        let c = random_element(&mut rng, &ctx, 2, 0)?;
        let ab = lift(a.mul(&b))?;
        ensure(ab == lift(b.mul(&a))?, || format!("triple {i}: ab != ba"))?;
        let bc = lift(b.mul(&c))?;
        ensure(lift(ab.mul(&c))? == lift(a.mul(&bc))?, || {
            format!("triple {i}: (ab)c != a(bc)")
        })?;
        let lhs = lift(a.mul(&lift(b.add(&c))?))?;
        let rhs = lift(ab.add(&lift(a.mul(&c))?))?;
        ensure(lhs == rhs, || format!("triple {i}: a(b+c) != ab+ac"))?;
        ensure(lift(a.add(&b))? == lift(b.add(&a))?, || {
            format!("triple {i}: a+b != b+a")
        })?;
        ensure(lift(a.mul(&ctx.one()))? == a, || {
            format!("triple {i}: a*1 != a")
        })?;
        ensure(lift(a.add(&ctx.zero()))? == a, || {
            format!("triple {i}: a+0 != a")
        })?;
    }
    Ok("500 random triples: commutative, associative, distributive, unital".into())
}

fn geometric_inverse() -> Outcome {
    let groups = small_groups();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 11);
    let trials = 60;
    for i in 0..trials {
        let ctx = random_context(&mut rng, &groups);
        let t = random_element(&mut rng, &ctx, 2, 1)?;
        for euler in [1i64, 2] {
            let inv = lift(t.geometric_inverse_power(euler))?;
            let fwd = lift(ctx.one().sub(&t))?.pow(euler as u32);
            ensure(lift(inv.mul(&fwd))? == ctx.one(), || {
                format!("trial {i}: (1-T)^-{euler} * (1-T)^{euler} != 1 for T = {t}")
            })?;
        }
    }
    Ok(format!(
        "{trials} random positively weighted T, euler in {{1,2}}: inverse recovers 1"
    ))
}

/// Relabels along `bH -> b n (n^-1 H n)` with random representatives.
fn transport(rng: &mut ChaCha8Rng, data: &OrbitData, n: Elem) -> OrbitData {
    let g = data.stabilizer.group();
    let n_inv = g.inv(n);
    let k = data.stabilizer.conjugate(n_inv);
    let mut points: Vec<(Elem, Vec<i64>)> = data
        .points
        .iter()
        .map(|(b, w)| {
            let x = *k.elements().choose(rng).expect("nonempty");
            (g.mul(g.mul(*b, n), x), w.clone())
        })
        .collect();
    points.shuffle(rng);
    OrbitData {
        character: data.character.conjugate(n_inv),
        points,
        stabilizer: k,
    }
}

fn canonical_isomorphic() -> Outcome {
    let groups = small_groups();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 13);
    for i in 0..200 {
        let g = groups.choose(&mut rng).expect("groups").clone();
        let r = rng.gen_range(1..=2);
        let a = random_orbit_data(&mut rng, &g, r, 2, 0);
        let n = rng.gen_range(0..g.order());
        let b = transport(&mut rng, &a, n);
        ensure(orbits_isomorphic_brute_force(&a, &b), || {
            format!("pair {i}: transport is not an isomorphism")
        })?;
        let (ca, cb) = (lift(Orbit::from_data(&a))?, lift(Orbit::from_data(&b))?);
        ensure(ca == cb, || format!("pair {i}: {ca} vs {cb}"))?;
    }
    Ok("200 pairs related by random equivariant bijections canonicalize identically".into())
}

fn canonical_non_isomorphic() -> Outcome {
    let groups = small_groups();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 17);
    let mut found = 0;
    let mut attempts = 0;
    while found < 200 {
        attempts += 1;
        ensure(attempts < 100_000, || {
            "could not generate enough non-isomorphic pairs".into()
        })?;
        let g = groups.choose(&mut rng).expect("groups").clone();
        let a = random_orbit_data(&mut rng, &g, 1, 1, 0);
        // bias towards near misses: same stabilizer class half the time
        let b = if rng.gen_bool(0.5) {
            let n = rng.gen_range(0..g.order());
            let mut b = transport(&mut rng, &a, n);
            let j = rng.gen_range(0..b.points.len());
            b.points[j].1[0] = rng.gen_range(0..=1);
            if rng.gen_bool(0.3) {
                let chars = b.stabilizer.one_dim_characters();
                b.character = chars.choose(&mut rng).expect("nonempty").clone();
            }
            b
        } else {
            random_orbit_data(&mut rng, &g, 1, 1, 0)
        };
        if orbits_isomorphic_brute_force(&a, &b) {
            continue;
        }
        found += 1;
        let (ca, cb) = (lift(Orbit::from_data(&a))?, lift(Orbit::from_data(&b))?);
        ensure(ca != cb, || format!("non-isomorphic pair collides on {ca}"))?;
    }
    Ok(format!(
        "200 brute-force non-isomorphic pairs have distinct canonical forms ({attempts} drawn)"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_selects_z2_checks() {
        let names: Vec<String> = checks(&builtin_cases())
            .into_iter()
            .map(|c| c.name)
            .filter(|n| n.contains("z2"))
            .collect();
        assert!(names.iter().all(|n| n.contains("z2")));
        assert!(names.contains(&"c1/z2-relations".to_string()));
        assert!(names.contains(&"c5/fixed-part/z2-swap".to_string()));
        assert!(!names.iter().any(|n| n.contains("cusp")));
    }

    #[test]
    fn corrupted_spec_is_reported() {
        let mut cases = builtin_cases();
        let anti = cases.iter_mut().find(|c| c.name == "z2-antipodal").unwrap();
        anti.json = anti.json.replace("\"euler\": 2", "\"euler\": 1");
        let results = run_with(&cases, Some("z2-antipodal"));
        assert!(!results.is_empty());
        assert!(results.iter().any(|r| !r.passed && r.criterion == 4));
        assert!(results.iter().any(|r| !r.passed && r.criterion == 5));
    }
}
