//! Relation construction checked against an independent matrix-closure
//! oracle, plus algebraic properties of the t-norms.

use proptest::prelude::*;
use proxilog::{build_relation, ClosureKind, FuzzyRelation, ProximityEquation, TNorm};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SYMBOLS: [&str; 8] = ["s0", "s1", "s2", "s3", "s4", "s5", "s6", "s7"];
const GRID: [f64; 7] = [0.15, 0.3, 0.45, 0.6, 0.75, 0.9, 1.0];

/// A random symmetric degree matrix over [`SYMBOLS`] with unit diagonal;
/// roughly half of the off-diagonal pairs stay unrelated.
fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let n = SYMBOLS.len();
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        m[i][i] = 1.0;
        for j in (i + 1)..n {
            if rng.random_bool(0.5) {
                let d = GRID[rng.random_range(0..GRID.len())];
                m[i][j] = d;
                m[j][i] = d;
            }
        }
    }
    m
}

fn matrix_equations(m: &[Vec<f64>]) -> Vec<ProximityEquation> {
    let mut eqs = Vec::new();
    for i in 0..m.len() {
        for j in (i + 1)..m.len() {
            if m[i][j] > 0.0 {
                eqs.push(ProximityEquation::new(SYMBOLS[i], SYMBOLS[j], 0, m[i][j]));
            }
        }
    }
    eqs
}

/// Repeated relaxation until nothing improves: the least fixpoint of
/// max-composition over the t-norm.
fn closed_oracle(mut m: Vec<Vec<f64>>, tnorm: TNorm) -> Vec<Vec<f64>> {
    let n = m.len();
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let via = tnorm.apply(m[i][k], m[k][j]);
                    if via > m[i][j] {
                        m[i][j] = via;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return m;
        }
    }
}

fn check_against(relation: &FuzzyRelation, expected: &[Vec<f64>], lambda: f64, label: &str) {
    for (i, row) in expected.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            let got = relation.degree_of(SYMBOLS[i], SYMBOLS[j]);
            let want = if i != j && want < lambda { 0.0 } else { want };
            assert!(
                (got - want).abs() < 1e-12,
                "{label}: {} ~ {} got {got}, want {want}",
                SYMBOLS[i],
                SYMBOLS[j]
            );
        }
    }
}

#[test]
fn transitive_closure_matches_the_matrix_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(67);
    for round in 0..60 {
        let m = random_matrix(&mut rng);
        let eqs = matrix_equations(&m);
        for tnorm in [TNorm::Godel, TNorm::Product, TNorm::Lukasiewicz] {
            let expected = closed_oracle(m.clone(), tnorm);
            // 0.42 is unreachable by any composition of the grid values,
            // so float association noise cannot flip the cut comparison.
            for lambda in [0.0, 0.42] {
                let relation =
                    build_relation(&eqs, lambda, tnorm, ClosureKind::Similarity).unwrap();
                check_against(
                    &relation,
                    &expected,
                    lambda,
                    &format!("round {round}, {tnorm}, lambda {lambda}"),
                );
            }
        }
    }
}

#[test]
fn proximity_mode_stores_raw_degrees_symmetrically() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for _ in 0..20 {
        let m = random_matrix(&mut rng);
        let relation =
            build_relation(&matrix_equations(&m), 0.0, TNorm::Godel, ClosureKind::Proximity)
                .unwrap();
        check_against(&relation, &m, 0.0, "uncomposed");
        for i in 0..SYMBOLS.len() {
            for j in 0..SYMBOLS.len() {
                assert_eq!(
                    relation.degree_of(SYMBOLS[i], SYMBOLS[j]),
                    relation.degree_of(SYMBOLS[j], SYMBOLS[i])
                );
            }
        }
    }
}

#[test]
fn closure_stays_within_blocks() {
    let eqs = vec![
        ProximityEquation::new("a", "b", 0, 0.9),
        ProximityEquation::new("b", "c", 1, 0.8),
        ProximityEquation::new("c", "d", 1, 0.7),
    ];
    let relation = build_relation(&eqs, 0.0, TNorm::Godel, ClosureKind::Similarity).unwrap();
    assert_eq!(relation.degree_of("a", "c"), 0.0, "blocks never compose together");
    assert_eq!(relation.degree_of("a", "d"), 0.0);
    assert!((relation.degree_of("b", "d") - 0.7).abs() < 1e-12, "within-block closure");
}

#[test]
fn duplicate_pairs_keep_the_maximum_and_warn() {
    let eqs = vec![
        ProximityEquation::new("a", "b", 0, 0.5),
        ProximityEquation::new("b", "a", 0, 0.7),
    ];
    let relation = build_relation(&eqs, 0.0, TNorm::Godel, ClosureKind::Proximity).unwrap();
    assert_eq!(relation.degree_of("a", "b"), 0.7);
    assert_eq!(relation.warnings().len(), 1);

    let same = vec![
        ProximityEquation::new("a", "b", 0, 0.5),
        ProximityEquation::new("b", "a", 0, 0.5),
    ];
    let relation = build_relation(&same, 0.0, TNorm::Godel, ClosureKind::Proximity).unwrap();
    assert!(relation.warnings().is_empty(), "agreeing duplicates are silent");
}

/// Closing an already-closed relation changes nothing.
#[test]
fn closure_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(73);
    for _ in 0..20 {
        let m = random_matrix(&mut rng);
        let eqs = matrix_equations(&m);
        let once = build_relation(&eqs, 0.0, TNorm::Product, ClosureKind::Similarity).unwrap();
        let again =
            build_relation(&once.equations(), 0.0, TNorm::Product, ClosureKind::Similarity)
                .unwrap();
        for i in 0..SYMBOLS.len() {
            for j in 0..SYMBOLS.len() {
                assert_eq!(
                    once.degree_of(SYMBOLS[i], SYMBOLS[j]),
                    again.degree_of(SYMBOLS[i], SYMBOLS[j])
                );
            }
        }
    }
}

#[test]
fn closure_never_lowers_a_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(79);
    for _ in 0..20 {
        let m = random_matrix(&mut rng);
        let eqs = matrix_equations(&m);
        for tnorm in [TNorm::Godel, TNorm::Product, TNorm::Lukasiewicz] {
            let relation = build_relation(&eqs, 0.0, tnorm, ClosureKind::Similarity).unwrap();
            for i in 0..SYMBOLS.len() {
                for j in 0..SYMBOLS.len() {
                    assert!(relation.degree_of(SYMBOLS[i], SYMBOLS[j]) >= m[i][j] - 1e-15);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn tnorm_algebra(
        a in 0.0..=1.0f64,
        b in 0.0..=1.0f64,
        c in 0.0..=1.0f64,
        which in 0usize..3,
    ) {
        let t = [TNorm::Godel, TNorm::Product, TNorm::Lukasiewicz][which];
        prop_assert_eq!(t.apply(a, b), t.apply(b, a));
        prop_assert!((t.apply(t.apply(a, b), c) - t.apply(a, t.apply(b, c))).abs() < 1e-12);
        prop_assert!((t.apply(a, 1.0) - a).abs() < 1e-12);
        let lo = a.min(b);
        prop_assert!(t.apply(a, b) <= lo + 1e-12);
        prop_assert!(t.apply(a, b) >= -1e-12);
        // Monotone in each argument.
        if b <= c {
            prop_assert!(t.apply(a, b) <= t.apply(a, c) + 1e-15);
        }
    }

    #[test]
    fn degree_lookup_is_reflexive_and_in_range(
        degree in 0.05..=1.0f64,
        sym in "[a-z]{1,6}",
    ) {
        let eqs = vec![ProximityEquation::new("left", sym.clone(), 0, degree)];
        let relation = build_relation(&eqs, 0.0, TNorm::Godel, ClosureKind::Proximity).unwrap();
        prop_assert_eq!(relation.degree_of(&sym, &sym), 1.0);
        prop_assert_eq!(relation.degree_of("anything", "anything"), 1.0);
        let stored = relation.degree_of("left", &sym);
        if sym == "left" {
            prop_assert_eq!(stored, 1.0);
        } else {
            prop_assert_eq!(stored, degree);
        }
    }
}
