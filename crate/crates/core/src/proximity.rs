//! Block-partitioned fuzzy binary relations over plain symbols.
//!
//! A relation is assembled from proximity equations `a ~ b = d`. It is kept
//! symmetric by construction, reflexivity is implicit (every symbol relates
//! to itself with degree 1), and an optional transitive closure upgrades it
//! to a similarity relation per block. Entries below the session's lambda
//! cut are pruned after closure.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Triangular norm used to compose approximation degrees.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TNorm {
    /// Minimum; the default.
    #[default]
    Godel,
    Product,
    Lukasiewicz,
}

impl TNorm {
    pub fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Godel => a.min(b),
            TNorm::Product => a * b,
            TNorm::Lukasiewicz => (a + b - 1.0).max(0.0),
        }
    }

    /// Folds a sequence of degrees, starting from the unit 1.
    pub fn fold(self, degrees: impl IntoIterator<Item = f64>) -> f64 {
        degrees.into_iter().fold(1.0, |acc, d| self.apply(acc, d))
    }

    pub fn name(self) -> &'static str {
        match self {
            TNorm::Godel => "godel",
            TNorm::Product => "product",
            TNorm::Lukasiewicz => "lukasiewicz",
        }
    }
}

impl fmt::Display for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TNorm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "godel" | "goedel" | "min" => Ok(TNorm::Godel),
            "product" => Ok(TNorm::Product),
            "lukasiewicz" | "luka" => Ok(TNorm::Lukasiewicz),
            _ => Err(Error::InvalidArgument(format!(
                "unknown t-norm '{s}' (expected godel, product or lukasiewicz)"
            ))),
        }
    }
}

/// A graded statement that two symbols approximate each other. Symbols in
/// different blocks are unrelated by definition.
#[derive(Clone, Debug, PartialEq)]
pub struct ProximityEquation {
    pub sym_a: String,
    pub sym_b: String,
    pub block: u32,
    pub degree: f64,
}

impl ProximityEquation {
    pub fn new(sym_a: impl Into<String>, sym_b: impl Into<String>, block: u32, degree: f64) -> Self {
        ProximityEquation { sym_a: sym_a.into(), sym_b: sym_b.into(), block, degree }
    }
}

/// Whether to close the relation transitively (making it a similarity
/// relation) or leave it a plain proximity relation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClosureKind {
    #[default]
    Proximity,
    Similarity,
}

impl FromStr for ClosureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proximity" => Ok(ClosureKind::Proximity),
            "similarity" => Ok(ClosureKind::Similarity),
            _ => Err(Error::InvalidArgument(format!(
                "unknown closure kind '{s}' (expected proximity or similarity)"
            ))),
        }
    }
}

/// An immutable fuzzy relation. Lookups are symmetric; identical symbols
/// always relate with degree 1.
#[derive(Clone, Debug, Default)]
pub struct FuzzyRelation {
    /// Symmetric adjacency: both orientations of every pair are stored so
    /// lookups never allocate.
    adjacency: HashMap<String, HashMap<String, (f64, u32)>>,
    lambda: f64,
    tnorm: TNorm,
    closure_kind: ClosureKind,
    warnings: Vec<String>,
}

fn pair_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Builds the relation: resolves duplicate equations (maximum degree wins,
/// with a warning), closes each block transitively when requested, then
/// prunes entries below the lambda cut.
pub fn build_relation(
    equations: &[ProximityEquation],
    lambda: f64,
    tnorm: TNorm,
    closure_kind: ClosureKind,
) -> Result<FuzzyRelation> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::InvalidArgument(format!(
            "lambda must lie in [0,1], got {lambda}"
        )));
    }
    let mut warnings = Vec::new();
    let mut entries: HashMap<(String, String), (f64, u32)> = HashMap::new();
    for eq in equations {
        if !(eq.degree > 0.0 && eq.degree <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "proximity degree must lie in (0,1]: {} ~ {} = {}",
                eq.sym_a, eq.sym_b, eq.degree
            )));
        }
        if eq.sym_a == eq.sym_b {
            continue; // reflexivity is implicit
        }
        let key = pair_key(&eq.sym_a, &eq.sym_b);
        match entries.get_mut(&key) {
            None => {
                entries.insert(key, (eq.degree, eq.block));
            }
            Some(existing) => {
                if existing.0 != eq.degree {
                    warnings.push(format!(
                        "duplicate proximity pair {} ~ {} with degrees {} and {}; keeping {}",
                        key.0,
                        key.1,
                        existing.0,
                        eq.degree,
                        existing.0.max(eq.degree)
                    ));
                }
                existing.0 = existing.0.max(eq.degree);
            }
        }
    }
    if closure_kind == ClosureKind::Similarity {
        close_blocks(&mut entries, tnorm);
    }
    entries.retain(|_, &mut (degree, _)| degree >= lambda);

    let mut adjacency: HashMap<String, HashMap<String, (f64, u32)>> = HashMap::new();
    for ((a, b), value) in entries {
        adjacency.entry(a.clone()).or_default().insert(b.clone(), value);
        adjacency.entry(b).or_default().insert(a, value);
    }
    Ok(FuzzyRelation { adjacency, lambda, tnorm, closure_kind, warnings })
}

/// Least fixpoint of max-composition under the t-norm, per block: each
/// block's symbols form a dense matrix with a unit diagonal that is
/// recomposed until stable.
fn close_blocks(entries: &mut HashMap<(String, String), (f64, u32)>, tnorm: TNorm) {
    let mut blocks: HashMap<u32, Vec<String>> = HashMap::new();
    for ((a, b), &(_, block)) in entries.iter() {
        let symbols = blocks.entry(block).or_default();
        for s in [a, b] {
            if !symbols.contains(s) {
                symbols.push(s.clone());
            }
        }
    }
    for (&block, symbols) in &mut blocks {
        symbols.sort_unstable();
        let n = symbols.len();
        let index: HashMap<&str, usize> =
            symbols.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut matrix = vec![0.0f64; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1.0;
        }
        for ((a, b), &(degree, blk)) in entries.iter() {
            if blk == block {
                let (i, j) = (index[a.as_str()], index[b.as_str()]);
                matrix[i * n + j] = degree;
                matrix[j * n + i] = degree;
            }
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let mut best = matrix[i * n + j];
                    for k in 0..n {
                        let via = tnorm.apply(matrix[i * n + k], matrix[k * n + j]);
                        if via > best {
                            best = via;
                        }
                    }
                    if best > matrix[i * n + j] {
                        matrix[i * n + j] = best;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let degree = matrix[i * n + j];
                if degree > 0.0 {
                    entries.insert(pair_key(&symbols[i], &symbols[j]), (degree, block));
                }
            }
        }
    }
}

impl FuzzyRelation {
    /// The identity-only relation.
    pub fn identity() -> Self {
        FuzzyRelation::default()
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn tnorm(&self) -> TNorm {
        self.tnorm
    }

    pub fn closure_kind(&self) -> ClosureKind {
        self.closure_kind
    }

    /// Warnings gathered while building (duplicate pairs).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The degree between two symbols: 1 on identity, the stored symmetric
    /// degree otherwise, 0 when unrelated.
    pub fn degree_of(&self, a: &str, b: &str) -> f64 {
        if a == b {
            return 1.0;
        }
        self.adjacency
            .get(a)
            .and_then(|m| m.get(b))
            .map_or(0.0, |&(degree, _)| degree)
    }

    /// All stored entries as equations (one per unordered pair), sorted for
    /// determinism.
    pub fn equations(&self) -> Vec<ProximityEquation> {
        let mut out: Vec<ProximityEquation> = self
            .adjacency
            .iter()
            .flat_map(|(a, row)| {
                row.iter().filter_map(move |(b, &(degree, block))| {
                    (a < b).then(|| ProximityEquation::new(a.clone(), b.clone(), block, degree))
                })
            })
            .collect();
        out.sort_by(|x, y| (&x.sym_a, &x.sym_b).cmp(&(&y.sym_a, &y.sym_b)));
        out
    }

    /// Symbols related to `sym` with a positive stored degree, paired with
    /// those degrees, sorted by symbol. Does not include `sym` itself.
    pub fn neighbors(&self, sym: &str) -> Vec<(&str, f64)> {
        let mut out: Vec<(&str, f64)> = self
            .adjacency
            .get(sym)
            .into_iter()
            .flat_map(|row| row.iter().map(|(b, &(degree, _))| (b.as_str(), degree)))
            .collect();
        out.sort_by(|x, y| x.0.cmp(y.0));
        out
    }

    /// Every symbol mentioned by some entry, sorted.
    pub fn support(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.adjacency.keys().map(String::as_str).collect();
        out.sort_unstable();
        out
    }

    /// Number of stored unordered pairs.
    pub fn entry_count(&self) -> usize {
        self.adjacency.values().map(HashMap::len).sum::<usize>() / 2
    }
}
