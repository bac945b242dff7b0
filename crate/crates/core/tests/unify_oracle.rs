//! Weak unification checked against exhaustive ground-unifier search on
//! a three-symbol universe, and against classical unification under the
//! identity relation.

use std::collections::HashMap;

use proxilog::{
    apply_bindings, build_relation, ClosureKind, FuzzyRelation, ProximityEquation, TNorm, Term,
    Unifier, UnifyOutcome,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SYMS: [&str; 3] = ["a", "b", "c"];
const VARS: [&str; 3] = ["X", "Y", "Z"];
const DEGREES: [f64; 6] = [0.0, 0.3, 0.5, 0.7, 0.9, 1.0];

fn random_relation(rng: &mut ChaCha8Rng) -> FuzzyRelation {
    let mut eqs = Vec::new();
    for i in 0..SYMS.len() {
        for j in (i + 1)..SYMS.len() {
            let d = DEGREES[rng.random_range(0..DEGREES.len())];
            if d > 0.0 {
                eqs.push(ProximityEquation::new(SYMS[i], SYMS[j], 0, d));
            }
        }
    }
    build_relation(&eqs, 0.0, TNorm::Godel, ClosureKind::Proximity).unwrap()
}

fn random_leaf(rng: &mut ChaCha8Rng) -> Term {
    if rng.random_bool(0.4) {
        Term::var(VARS[rng.random_range(0..VARS.len())])
    } else {
        Term::constant(SYMS[rng.random_range(0..SYMS.len())])
    }
}

/// A term of depth at most two: a leaf, or a functor over leaves.
fn random_term(rng: &mut ChaCha8Rng) -> Term {
    match rng.random_range(0..10) {
        0..=2 => Term::constant(SYMS[rng.random_range(0..SYMS.len())]),
        3..=4 => Term::var(VARS[rng.random_range(0..VARS.len())]),
        _ => {
            let arity = rng.random_range(1..=2);
            let args = (0..arity).map(|_| random_leaf(rng)).collect();
            Term::compound(SYMS[rng.random_range(0..SYMS.len())], args)
        }
    }
}

/// Every ground term of the universe up to depth two.
fn ground_candidates() -> Vec<Term> {
    let consts: Vec<Term> = SYMS.iter().map(|s| Term::constant(*s)).collect();
    let mut out = consts.clone();
    for f in SYMS {
        for x in &consts {
            out.push(Term::compound(f, vec![x.clone()]));
            for y in &consts {
                out.push(Term::compound(f, vec![x.clone(), y.clone()]));
            }
        }
    }
    out
}

/// Proximity degree of two terms under an assignment of the variables to
/// ground candidates: the t-norm fold of the symbol degrees at every
/// aligned position, zero on any structural mismatch.
fn assigned_degree(
    t1: &Term,
    t2: &Term,
    assignment: &[(&str, &Term)],
    rel: &FuzzyRelation,
    tnorm: TNorm,
) -> f64 {
    let resolve = |t: &'_ Term| -> Term {
        if let Term::Var(v) = t {
            let bound = assignment
                .iter()
                .find(|(name, _)| name == v)
                .expect("assignment covers every variable");
            bound.1.clone()
        } else {
            t.clone()
        }
    };
    let (t1, t2) = (resolve(t1), resolve(t2));
    match (&t1, &t2) {
        (Term::Const(x), Term::Const(y)) => rel.degree_of(x, y),
        (Term::Compound(f, xs), Term::Compound(g, ys)) if xs.len() == ys.len() => {
            let mut acc = rel.degree_of(f, g);
            for (x, y) in xs.iter().zip(ys) {
                if acc <= 0.0 {
                    return 0.0;
                }
                acc = tnorm.apply(acc, assigned_degree(x, y, assignment, rel, tnorm));
            }
            acc
        }
        _ => 0.0,
    }
}

/// The best degree any ground unifier reaches, by exhaustive enumeration.
fn oracle_best(t1: &Term, t2: &Term, rel: &FuzzyRelation, tnorm: TNorm) -> f64 {
    let mut vars = t1.distinct_vars();
    for v in t2.distinct_vars() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    let candidates = ground_candidates();
    let mut idx = vec![0usize; vars.len()];
    let mut best = 0.0f64;
    loop {
        let assignment: Vec<(&str, &Term)> = vars
            .iter()
            .zip(&idx)
            .map(|(v, &i)| (v.as_str(), &candidates[i]))
            .collect();
        best = best.max(assigned_degree(t1, t2, &assignment, rel, tnorm));
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return best;
            }
            idx[pos] += 1;
            if idx[pos] < candidates.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn wmgu_agrees_with_exhaustive_ground_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    let tnorms = [TNorm::Godel, TNorm::Product, TNorm::Lukasiewicz];
    let lambdas = [0.0, 0.2, 0.6];
    for round in 0..150 {
        let rel = random_relation(&mut rng);
        let tnorm = tnorms[round % tnorms.len()];
        let lambda = lambdas[round / tnorms.len() % lambdas.len()];
        let (t1, t2) = (random_term(&mut rng), random_term(&mut rng));
        let best = oracle_best(&t1, &t2, &rel, tnorm);
        let unifier = Unifier { relation: &rel, lambda, tnorm, occurs_check: true };
        match unifier.wmgu(&t1, &t2) {
            UnifyOutcome::Success { theta, degree } => {
                assert!(
                    best > 0.0 && best >= lambda,
                    "round {round}: {t1} ~ {t2} succeeded at {degree} but \
                     the oracle found no unifier above lambda {lambda}"
                );
                assert!(
                    (degree - best).abs() < 1e-9,
                    "round {round}: {t1} ~ {t2} got {degree}, oracle best {best}"
                );
                let once = apply_bindings(&theta, &t1);
                assert_eq!(once, apply_bindings(&theta, &once), "substitution is idempotent");
            }
            UnifyOutcome::Failure(reason) => {
                assert!(
                    !(best > 0.0 && best >= lambda),
                    "round {round}: {t1} ~ {t2} failed ({reason:?}) but the \
                     oracle reaches {best} at lambda {lambda}"
                );
            }
        }
    }
}

#[test]
fn wmgu_is_symmetric_in_success_and_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(89);
    for round in 0..150 {
        let rel = random_relation(&mut rng);
        let (t1, t2) = (random_term(&mut rng), random_term(&mut rng));
        let unifier = Unifier::new(&rel, 0.0, TNorm::Godel);
        let fwd = unifier.wmgu(&t1, &t2);
        let rev = unifier.wmgu(&t2, &t1);
        match (&fwd, &rev) {
            (
                UnifyOutcome::Success { degree: d1, .. },
                UnifyOutcome::Success { degree: d2, .. },
            ) => {
                assert!((d1 - d2).abs() < 1e-12, "round {round}: {t1} ~ {t2}: {d1} vs {d2}")
            }
            (UnifyOutcome::Failure(_), UnifyOutcome::Failure(_)) => {}
            _ => panic!("round {round}: asymmetric outcome on {t1} ~ {t2}"),
        }
    }
}

/// Textbook unification with eager substitution, used as the reference
/// for the identity-relation case.
fn classical_mgu(t1: &Term, t2: &Term) -> Option<HashMap<String, Term>> {
    fn occurs(v: &str, t: &Term) -> bool {
        match t {
            Term::Var(w) => v == w,
            Term::Const(_) => false,
            Term::Compound(_, args) => args.iter().any(|a| occurs(v, a)),
        }
    }
    fn subst_one(t: &Term, v: &str, replacement: &Term) -> Term {
        match t {
            Term::Var(w) if w == v => replacement.clone(),
            Term::Var(_) | Term::Const(_) => t.clone(),
            Term::Compound(f, args) => Term::Compound(
                f.clone(),
                args.iter().map(|a| subst_one(a, v, replacement)).collect(),
            ),
        }
    }
    let mut work = vec![(t1.clone(), t2.clone())];
    let mut out: HashMap<String, Term> = HashMap::new();
    while let Some((s, t)) = work.pop() {
        if s == t {
            continue;
        }
        match (s, t) {
            (Term::Var(v), t) | (t, Term::Var(v)) => {
                if occurs(&v, &t) {
                    return None;
                }
                for (lhs, rhs) in work.iter_mut() {
                    *lhs = subst_one(lhs, &v, &t);
                    *rhs = subst_one(rhs, &v, &t);
                }
                for bound in out.values_mut() {
                    *bound = subst_one(bound, &v, &t);
                }
                out.insert(v, t);
            }
            (Term::Compound(f, xs), Term::Compound(g, ys))
                if f == g && xs.len() == ys.len() =>
            {
                work.extend(xs.into_iter().zip(ys));
            }
            _ => return None,
        }
    }
    Some(out)
}

#[test]
fn identity_relation_embeds_classical_unification() {
    let identity = FuzzyRelation::identity();
    let unifier = Unifier::new(&identity, 0.0, TNorm::Godel);
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    let mut successes = 0;
    for round in 0..300 {
        let (t1, t2) = (random_term(&mut rng), random_term(&mut rng));
        let reference = classical_mgu(&t1, &t2);
        match unifier.wmgu(&t1, &t2) {
            UnifyOutcome::Success { theta, degree } => {
                assert!(reference.is_some(), "round {round}: classically non-unifiable {t1} ~ {t2}");
                assert_eq!(degree, 1.0);
                assert_eq!(
                    apply_bindings(&theta, &t1),
                    apply_bindings(&theta, &t2),
                    "round {round}: the substitution must unify {t1} ~ {t2}"
                );
                successes += 1;
            }
            UnifyOutcome::Failure(_) => {
                assert!(reference.is_none(), "round {round}: {t1} ~ {t2} unifies classically");
            }
        }
    }
    assert!(successes >= 50, "generator should produce plenty of unifiable pairs");
}
