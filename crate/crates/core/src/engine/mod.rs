//! The resolution engine: program loading, weak SLD solving, and clause
//! translation.
//!
//! A loaded [`Program`] couples its rules with a proximity relation built
//! from all equations in scope (handwritten, read back from `sim` facts,
//! or generated from the lexical database by directives). Queries are
//! answered by depth-first weak SLD resolution: each step weakly unifies
//! the leftmost goal with a renamed rule head and folds the rule degree
//! and the unification degree into the answer degree, pruning any branch
//! that falls below the lambda cut.
//!
//! [`Program::translate`] expands every rule into one clause per
//! predicate close to its head predicate, with the weak unification made
//! explicit as argument equations. Solving against the translated clauses
//! matches the direct path answer for answer; the argument equations of a
//! clause are solved as one simultaneous system, because maximizing them
//! one at a time could fix a witness value too early.

mod lexer;
mod parser;

pub use parser::{parse_pattern_lists, parse_program, parse_query, ParsedProgram};

use std::collections::HashSet;
use std::fmt;

use crate::eqgen;
use crate::error::{Error, Result};
use crate::measures::{Measure, SimilarityContext};
use crate::proximity::{build_relation, ClosureKind, FuzzyRelation, ProximityEquation, TNorm};
use crate::store::Pattern;
use crate::unify::{
    apply_bindings, atom_string, compose, Bindings, Term, Unifier, UnifyOutcome,
};

/// A rule with an attached degree: `head :- body with delta.` A fact has
/// an empty body; the body is a disjunction (`;`) of conjunctions (`,`).
#[derive(Clone, Debug)]
pub struct GradedRule {
    pub head: Term,
    pub body: Vec<Vec<Term>>,
    pub delta: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransitivityArg {
    No,
    Yes,
    Norm(TNorm),
}

#[derive(Clone, Debug)]
pub enum Directive {
    LambdaCut(f64),
    Transitivity(TransitivityArg),
    WnConnect,
    /// `lists: None` is auto mode (relate the program's own symbols).
    GenEquations { measure: Measure, lists: Option<Vec<Vec<Pattern>>> },
}

/// Session settings a program starts from; directives in the source
/// override them.
#[derive(Clone, Copy, Debug)]
pub struct EngineConfig {
    pub lambda: f64,
    pub tnorm: TNorm,
    pub closure: ClosureKind,
    pub occurs_check: bool,
    pub depth_limit: Option<usize>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            lambda: 0.0,
            tnorm: TNorm::Godel,
            closure: ClosureKind::Proximity,
            occurs_check: true,
            depth_limit: None,
        }
    }
}

/// A loaded, immutable program: rules in source order plus the proximity
/// relation in force.
#[derive(Debug)]
pub struct Program {
    rules: Vec<GradedRule>,
    equations: Vec<ProximityEquation>,
    relation: FuzzyRelation,
    lambda: f64,
    tnorm: TNorm,
    closure: ClosureKind,
    occurs_check: bool,
    depth_limit: Option<usize>,
}

/// Parses and finishes a program in one call. `wn` is only needed when
/// the source uses the lexical-database directives.
pub fn load_program(
    source: &str,
    cfg: &EngineConfig,
    wn: Option<&SimilarityContext<'_>>,
) -> Result<Program> {
    parse_program(source)?.finish(cfg, wn)
}

impl ParsedProgram {
    /// Applies directives, runs equation generation, and builds the
    /// relation.
    pub fn finish(
        self,
        cfg: &EngineConfig,
        wn: Option<&SimilarityContext<'_>>,
    ) -> Result<Program> {
        let mut lambda = cfg.lambda;
        let mut tnorm = cfg.tnorm;
        let mut closure = cfg.closure;
        let mut gen_jobs: Vec<(Measure, Option<Vec<Vec<Pattern>>>)> = Vec::new();
        for directive in &self.directives {
            match directive {
                Directive::LambdaCut(cut) => lambda = *cut,
                Directive::Transitivity(TransitivityArg::No) => closure = ClosureKind::Proximity,
                Directive::Transitivity(TransitivityArg::Yes) => closure = ClosureKind::Similarity,
                Directive::Transitivity(TransitivityArg::Norm(t)) => {
                    closure = ClosureKind::Similarity;
                    tnorm = *t;
                }
                Directive::WnConnect => {
                    require_wn(wn)?;
                }
                Directive::GenEquations { measure, lists } => {
                    gen_jobs.push((*measure, lists.clone()));
                }
            }
        }

        let mut equations = self.equations;
        // Explicit lists are generated in directive order; auto jobs run
        // last, once the whole program's symbols are known.
        for (measure, lists) in gen_jobs.iter().filter(|(_, l)| l.is_some()) {
            let ctx = require_wn(wn)?;
            equations.extend(eqgen::generate(
                ctx,
                *measure,
                lists.as_deref().unwrap(),
                lambda,
            )?);
        }
        for (measure, _) in gen_jobs.iter().filter(|(_, l)| l.is_none()) {
            let ctx = require_wn(wn)?;
            let (constants, functors, predicates) = token_classes(&self.rules);
            equations.extend(eqgen::auto_generate(
                ctx, *measure, &constants, &functors, &predicates, lambda,
            )?);
        }

        let relation = build_relation(&equations, lambda, tnorm, closure)?;
        Ok(Program {
            rules: self.rules,
            equations,
            relation,
            lambda,
            tnorm,
            closure,
            occurs_check: cfg.occurs_check,
            depth_limit: cfg.depth_limit,
        })
    }
}

fn require_wn<'a, 'b>(
    wn: Option<&'a SimilarityContext<'b>>,
) -> Result<&'a SimilarityContext<'b>> {
    wn.ok_or_else(|| {
        Error::InvalidArgument(
            "this program needs the lexical database; pass --wndb or set WNDB".into(),
        )
    })
}

/// The program's symbols split into the three classes auto mode relates:
/// constants, functors (inside terms) and predicates, each in first
/// occurrence order without duplicates.
fn token_classes(rules: &[GradedRule]) -> (Vec<String>, Vec<String>, Vec<String>) {
    let mut constants = Uniq::default();
    let mut functors = Uniq::default();
    let mut predicates = Uniq::default();
    let mut walk_args = |atom: &Term| {
        predicates.push(atom.symbol().unwrap_or_default());
        let mut stack: Vec<&Term> = atom.args().iter().collect();
        while let Some(t) = stack.pop() {
            match t {
                Term::Const(c) => constants.push(c),
                Term::Compound(f, args) => {
                    functors.push(f);
                    stack.extend(args.iter());
                }
                Term::Var(_) => {}
            }
        }
    };
    for rule in rules {
        walk_args(&rule.head);
        for branch in &rule.body {
            for atom in branch {
                walk_args(atom);
            }
        }
    }
    (constants.items, functors.items, predicates.items)
}

#[derive(Default)]
struct Uniq {
    seen: HashSet<String>,
    items: Vec<String>,
}

impl Uniq {
    fn push(&mut self, s: &str) {
        if self.seen.insert(s.to_string()) {
            self.items.push(s.to_string());
        }
    }
}

/// One expanded clause: a crisp head predicate over fresh variables, a
/// fixed degree factor, explicit argument equations and the original
/// body.
#[derive(Clone, Debug)]
pub struct TranslatedClause {
    pub pred: String,
    pub head_vars: Vec<String>,
    pub guard: f64,
    pub arg_terms: Vec<Term>,
    pub body: Vec<Vec<Term>>,
}

impl TranslatedClause {
    pub fn arity(&self) -> usize {
        self.arg_terms.len()
    }
}

/// An answer: the query variables' values and the approximation degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Answer {
    pub bindings: Vec<(String, Term)>,
    pub degree: f64,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bindings.is_empty() {
            write!(f, "yes with {}", self.degree)
        } else {
            for (i, (var, value)) in self.bindings.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{var} = {value}")?;
            }
            write!(f, " with {}", self.degree)
        }
    }
}

impl Program {
    pub fn rules(&self) -> &[GradedRule] {
        &self.rules
    }

    pub fn equations(&self) -> &[ProximityEquation] {
        &self.equations
    }

    pub fn relation(&self) -> &FuzzyRelation {
        &self.relation
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn tnorm(&self) -> TNorm {
        self.tnorm
    }

    /// Changes the lambda cut and rebuilds the relation. Previously
    /// translated clause lists are stale after this.
    pub fn set_lambda(&mut self, lambda: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidArgument(format!("lambda {lambda} outside [0,1]")));
        }
        self.lambda = lambda;
        self.rebuild()
    }

    /// Changes the t-norm and rebuilds the relation.
    pub fn set_tnorm(&mut self, tnorm: TNorm) -> Result<()> {
        self.tnorm = tnorm;
        self.rebuild()
    }

    fn rebuild(&mut self) -> Result<()> {
        self.relation = build_relation(&self.equations, self.lambda, self.tnorm, self.closure)?;
        Ok(())
    }

    fn unifier(&self) -> Unifier<'_> {
        Unifier {
            relation: &self.relation,
            lambda: self.lambda,
            tnorm: self.tnorm,
            occurs_check: self.occurs_check,
        }
    }

    /// Streams the answers to a conjunctive query, in derivation order.
    pub fn solve<'p>(&'p self, query: &[Term]) -> Solver<'p> {
        Solver::new(self, None, query)
    }

    /// Streams answers by resolving against a translated clause list.
    pub fn solve_translated<'p>(
        &'p self,
        clauses: &'p [TranslatedClause],
        query: &[Term],
    ) -> Solver<'p> {
        Solver::new(self, Some(clauses), query)
    }

    /// Expands every rule for every predicate close to its head
    /// predicate: the rule's own predicate first at degree 1, then the
    /// others by descending proximity (ties alphabetical). A clause is
    /// kept when its degree factor `delta (t-norm) alpha` clears the
    /// lambda cut.
    pub fn translate(&self) -> Vec<TranslatedClause> {
        let mut out = Vec::new();
        for rule in &self.rules {
            let Some(p) = rule.head.symbol() else { continue };
            let mut partners: Vec<(String, f64)> = vec![(p.to_string(), 1.0)];
            let mut close: Vec<(String, f64)> = self
                .relation
                .neighbors(p)
                .into_iter()
                .filter(|&(q, a)| q != p && a > 0.0 && a >= self.lambda)
                .map(|(q, a)| (q.to_string(), a))
                .collect();
            close.sort_by(|(qa, aa), (qb, ab)| {
                ab.partial_cmp(aa).unwrap().then_with(|| qa.cmp(qb))
            });
            partners.extend(close);

            let args = rule.head.args();
            let head_vars = fresh_head_vars(rule, args.len());
            for (q, alpha) in partners {
                let guard = self.tnorm.apply(rule.delta, alpha);
                if guard <= 0.0 || guard < self.lambda {
                    continue;
                }
                out.push(TranslatedClause {
                    pred: q,
                    head_vars: head_vars.clone(),
                    guard,
                    arg_terms: args.to_vec(),
                    body: rule.body.clone(),
                });
            }
        }
        out
    }

    /// The text of the translated program: the equation set as `sim/4`
    /// facts, then the expanded clauses.
    pub fn tpl_dump(&self, clauses: &[TranslatedClause]) -> String {
        let mut out = String::new();
        for eq in &self.equations {
            out.push_str(&format!(
                "sim({}, {}, {}, {}).\n",
                atom_string(&eq.sym_a),
                atom_string(&eq.sym_b),
                eq.block,
                eq.degree
            ));
        }
        if !self.equations.is_empty() && !clauses.is_empty() {
            out.push('\n');
        }
        for clause in clauses {
            let mut parts: Vec<String> = vec![format!("deg({})", clause.guard)];
            for (hv, t) in clause.head_vars.iter().zip(&clause.arg_terms) {
                parts.push(format!("{hv} ~ {t}"));
            }
            match clause.body.len() {
                0 => {}
                1 => parts.extend(clause.body[0].iter().map(|a| a.to_string())),
                _ => {
                    let branches: Vec<String> = clause
                        .body
                        .iter()
                        .map(|b| b.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", "))
                        .collect();
                    parts.push(format!("({})", branches.join(" ; ")));
                }
            }
            let head = if clause.head_vars.is_empty() {
                atom_string(&clause.pred)
            } else {
                format!("{}({})", atom_string(&clause.pred), clause.head_vars.join(", "))
            };
            out.push_str(&format!("{} :- {}.\n", head, parts.join(", ")));
        }
        out
    }
}

/// Names `X1..Xn` for the linearized head, stepping around collisions
/// with the rule's own variables.
fn fresh_head_vars(rule: &GradedRule, n: usize) -> Vec<String> {
    let mut used: Vec<String> = Vec::new();
    rule.head.collect_vars(&mut used);
    for branch in &rule.body {
        for atom in branch {
            atom.collect_vars(&mut used);
        }
    }
    let used: HashSet<String> = used.into_iter().collect();
    (1..=n)
        .map(|i| {
            let mut name = format!("X{i}");
            while used.contains(&name) {
                name.push('_');
            }
            name
        })
        .collect()
}

struct State {
    goals: Vec<Term>,
    theta: Bindings,
    alpha: f64,
    depth: usize,
}

/// Depth-first, leftmost-literal resolution as a streaming iterator.
pub struct Solver<'p> {
    program: &'p Program,
    translated: Option<&'p [TranslatedClause]>,
    stack: Vec<State>,
    query_vars: Vec<String>,
    counter: usize,
}

impl<'p> Solver<'p> {
    fn new(program: &'p Program, translated: Option<&'p [TranslatedClause]>, query: &[Term]) -> Self {
        let mut query_vars = Vec::new();
        let mut seen = HashSet::new();
        for goal in query {
            for v in goal.distinct_vars() {
                if seen.insert(v.clone()) {
                    query_vars.push(v);
                }
            }
        }
        Solver {
            program,
            translated,
            stack: vec![State {
                goals: query.to_vec(),
                theta: Bindings::new(),
                alpha: 1.0,
                depth: 0,
            }],
            query_vars,
            counter: 0,
        }
    }

    fn rename(&self, term: &Term, tag: usize) -> Term {
        match term {
            Term::Var(v) => {
                let base = v.split('#').next().unwrap_or(v);
                Term::Var(format!("{base}#{tag}"))
            }
            Term::Const(_) => term.clone(),
            Term::Compound(f, args) => Term::Compound(
                f.clone(),
                args.iter().map(|a| self.rename(a, tag)).collect(),
            ),
        }
    }

    fn push_children(
        &self,
        children: &mut Vec<State>,
        state: &State,
        rest: &[Term],
        body: &[Vec<Term>],
        sigma: &Bindings,
        alpha: f64,
        tag: usize,
    ) {
        let branches: Vec<Vec<Term>> = if body.is_empty() {
            vec![Vec::new()]
        } else {
            body.iter()
                .map(|b| b.iter().map(|a| self.rename(a, tag)).collect())
                .collect()
        };
        for branch in branches {
            let mut goals: Vec<Term> = Vec::with_capacity(branch.len() + rest.len());
            goals.extend(branch.iter().map(|a| apply_bindings(sigma, a)));
            goals.extend(rest.iter().map(|a| apply_bindings(sigma, a)));
            let mut theta = state.theta.clone();
            compose(&mut theta, sigma);
            children.push(State { goals, theta, alpha, depth: state.depth + 1 });
        }
    }

    fn expand_direct(&mut self, state: &State, goal: &Term, rest: &[Term], children: &mut Vec<State>) {
        let unifier = self.program.unifier();
        for rule in &self.program.rules {
            self.counter += 1;
            let tag = self.counter;
            let head = self.rename(&rule.head, tag);
            let UnifyOutcome::Success { theta: sigma, degree: beta } =
                unifier.wmgu(goal, &head)
            else {
                continue;
            };
            let alpha = self
                .program
                .tnorm
                .apply(state.alpha, self.program.tnorm.apply(rule.delta, beta));
            if alpha <= 0.0 || alpha < self.program.lambda {
                continue;
            }
            self.push_children(children, state, rest, &rule.body, &sigma, alpha, tag);
        }
    }

    fn expand_translated(
        &mut self,
        clauses: &[TranslatedClause],
        state: &State,
        goal: &Term,
        rest: &[Term],
        children: &mut Vec<State>,
    ) {
        let Some(pred) = goal.symbol() else { return };
        let unifier = self.program.unifier();
        for clause in clauses {
            if clause.pred != pred || clause.arity() != goal.args().len() {
                continue;
            }
            self.counter += 1;
            let tag = self.counter;
            let pairs: Vec<(Term, Term)> = goal
                .args()
                .iter()
                .cloned()
                .zip(clause.arg_terms.iter().map(|t| self.rename(t, tag)))
                .collect();
            let UnifyOutcome::Success { theta: sigma, degree: beta } =
                unifier.wmgu_system(&pairs)
            else {
                continue;
            };
            let alpha = self
                .program
                .tnorm
                .apply(state.alpha, self.program.tnorm.apply(clause.guard, beta));
            if alpha <= 0.0 || alpha < self.program.lambda {
                continue;
            }
            self.push_children(children, state, rest, &clause.body, &sigma, alpha, tag);
        }
    }

    fn answer(&self, state: &State) -> Answer {
        let bindings = self
            .query_vars
            .iter()
            .filter_map(|v| {
                let value = apply_bindings(&state.theta, &Term::Var(v.clone()));
                (value != Term::Var(v.clone())).then(|| (v.clone(), value))
            })
            .collect();
        Answer { bindings, degree: state.alpha }
    }
}

impl Iterator for Solver<'_> {
    type Item = Answer;

    fn next(&mut self) -> Option<Answer> {
        while let Some(state) = self.stack.pop() {
            if state.goals.is_empty() {
                return Some(self.answer(&state));
            }
            if self
                .program
                .depth_limit
                .is_some_and(|limit| state.depth >= limit)
            {
                continue;
            }
            let goal = state.goals[0].clone();
            let rest: Vec<Term> = state.goals[1..].to_vec();
            if goal.is_var() {
                continue; // an unbound goal cannot be resolved
            }
            let mut children = Vec::new();
            match self.translated {
                None => self.expand_direct(&state, &goal, &rest, &mut children),
                Some(clauses) => {
                    self.expand_translated(clauses, &state, &goal, &rest, &mut children)
                }
            }
            while let Some(child) = children.pop() {
                self.stack.push(child);
            }
        }
        None
    }
}

/// Collapses answers with identical bindings to their best degree,
/// keeping first-appearance order.
pub fn dedup_max(answers: Vec<Answer>) -> Vec<Answer> {
    let mut out: Vec<Answer> = Vec::new();
    for answer in answers {
        let key: Vec<(String, String)> = answer
            .bindings
            .iter()
            .map(|(v, t)| (v.clone(), t.to_string()))
            .collect();
        match out.iter_mut().find(|a| {
            a.bindings.len() == key.len()
                && a.bindings
                    .iter()
                    .zip(&key)
                    .all(|((v, t), (kv, kt))| v == kv && t.to_string() == *kt)
        }) {
            Some(existing) => existing.degree = existing.degree.max(answer.degree),
            None => out.push(answer),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FAMILY: &str = r#"
        ancestor~ascendant=1.0.    ancestor~progenitor=0.9.

        father(abraham,isaac).     father(isaac,esau).     father(isaac,jacob).
        mother(sara,isaac).        mother(rebeca,jacob).   mother(rebeca,esau).

        direct_ancestor(X,Y) :- father(X,Y); mother(X,Y).

        ancestor(X,Z) :- direct_ancestor(X,Z).
        ancestor(X,Z) :- direct_ancestor(X,Y), ancestor(Y,Z).
    "#;

    fn family() -> Program {
        load_program(FAMILY, &EngineConfig::default(), None).unwrap()
    }

    fn answers(program: &Program, query: &str) -> Vec<Answer> {
        program.solve(&parse_query(query).unwrap()).collect()
    }

    #[test]
    fn progenitor_query_matches_published_answers() {
        let program = family();
        let got = answers(&program, "progenitor(X, isaac)");
        let shown: Vec<String> = got.iter().map(|a| a.to_string()).collect();
        assert_eq!(shown, vec!["X = abraham with 0.9", "X = sara with 0.9"]);
    }

    #[test]
    fn exact_fact_answers_at_degree_one() {
        let program = family();
        let got = answers(&program, "father(abraham, isaac)");
        assert_eq!(got.len(), 1);
        assert!(got[0].bindings.is_empty());
        assert_eq!(got[0].degree, 1.0);
        assert_eq!(got[0].to_string(), "yes with 1");
    }

    #[test]
    fn lambda_one_removes_the_weak_link() {
        let mut program = family();
        program.set_lambda(1.0).unwrap();
        assert!(answers(&program, "progenitor(X, isaac)").is_empty());
        let still: Vec<Answer> = answers(&program, "ascendant(X, isaac)");
        assert!(!still.is_empty(), "the degree-1 link must survive");
    }

    #[test]
    fn translated_clauses_agree_with_direct_resolution() {
        let program = family();
        let clauses = program.translate();
        for query in ["progenitor(X, isaac)", "ancestor(X, esau)", "ascendant(A, B)"] {
            let goals = parse_query(query).unwrap();
            let direct: Vec<Answer> = program.solve(&goals).collect();
            let translated: Vec<Answer> = program.solve_translated(&clauses, &goals).collect();
            assert_eq!(direct.len(), translated.len(), "{query}");
            for (d, t) in direct.iter().zip(&translated) {
                assert_eq!(d.bindings, t.bindings, "{query}");
                assert!((d.degree - t.degree).abs() < 1e-9, "{query}");
            }
        }
    }

    #[test]
    fn translation_expands_proximate_heads() {
        let cfg = EngineConfig::default();
        let program = load_program("p~q=0.9.\np(a).", &cfg, None).unwrap();
        let clauses = program.translate();
        assert_eq!(clauses.len(), 2);
        assert_eq!(clauses[0].pred, "p");
        assert_eq!(clauses[0].guard, 1.0);
        assert_eq!(clauses[1].pred, "q");
        assert_eq!(clauses[1].guard, 0.9);
        let dump = program.tpl_dump(&clauses);
        assert!(dump.contains("sim(p, q, 0, 0.9)."));
        assert!(dump.contains("p(X1) :- deg(1), X1 ~ a."));
        assert!(dump.contains("q(X1) :- deg(0.9), X1 ~ a."));
    }

    #[test]
    fn crisp_programs_behave_classically() {
        let cfg = EngineConfig::default();
        let program = load_program(
            "edge(a,b). edge(b,c).\npath(X,Y) :- edge(X,Y).\npath(X,Z) :- edge(X,Y), path(Y,Z).",
            &cfg,
            None,
        )
        .unwrap();
        let got = answers(&program, "path(a, X)");
        let shown: Vec<String> = got.iter().map(|a| a.to_string()).collect();
        assert_eq!(shown, vec!["X = b with 1", "X = c with 1"]);
    }

    #[test]
    fn depth_limit_cuts_infinite_descent() {
        let cfg = EngineConfig { depth_limit: Some(10), ..EngineConfig::default() };
        let program = load_program("loop(X) :- loop(X).\nloop(a).", &cfg, None).unwrap();
        // One answer per depth at which the recursion finally hits the
        // fact; without the limit this query never terminates.
        let got = answers(&program, "loop(a)");
        assert_eq!(got.len(), 10);
        assert!(got.iter().all(|a| a.degree == 1.0));
    }

    #[test]
    fn dedup_collapses_to_max_degree() {
        let cfg = EngineConfig::default();
        let program = load_program("p~q=0.8.\np(a).\nq(a).", &cfg, None).unwrap();
        let all = answers(&program, "p(a)");
        assert_eq!(all.len(), 2);
        let deduped = dedup_max(all);
        assert_eq!(deduped.len(), 1);
        assert_eq!(deduped[0].degree, 1.0);
    }

    #[test]
    fn transitivity_directive_closes_blocks() {
        let cfg = EngineConfig::default();
        let program = load_program(
            ":- transitivity(yes).\na~b=0.8. b~c=0.7.\np(a).",
            &cfg,
            None,
        )
        .unwrap();
        assert!((program.relation().degree_of("a", "c") - 0.7).abs() < 1e-12);
        let open = load_program("a~b=0.8. b~c=0.7.\np(a).", &cfg, None).unwrap();
        assert_eq!(open.relation().degree_of("a", "c"), 0.0);
    }
}
