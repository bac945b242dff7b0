//! Weak (proximity-based) unification of first-order terms.
//!
//! Classical unification decides whether two terms can be made equal; weak
//! unification asks instead how close they can be made under a proximity
//! relation on symbols, and answers with a substitution plus an
//! approximation degree. Structure is still rigid: arities must match and a
//! constant never unifies with a compound. Symbols are soft: wherever two
//! rigid symbols meet, their proximity degree enters the result, and
//! wherever a variable is squeezed between several symbols, the variable
//! may take any value close to all of them.
//!
//! For non-transitive relations the best value for such a squeezed variable
//! need not be one of the symbols it was equated with: with
//! `R(a,c) = R(c,b) = 0.8` and `a`, `b` otherwise unrelated, the pair
//! `p(X,X) ~ p(a,b)` unifies best with `X` valued at `c`. The unifier
//! therefore works in two stages: a structural stage (a standard
//! union-find Martelli-Montanari pass over term shapes that also records
//! which positions were aligned) and an optimization stage that picks the
//! degree-maximal witness values for the aligned variable positions. The
//! reported degree equals the best degree any ground unifier can reach,
//! which is what the brute-force oracle in the test suite checks.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::proximity::{FuzzyRelation, TNorm};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(String),
    Compound(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Term {
        Term::Const(name.into())
    }

    /// A compound term; an empty argument list degrades to a constant.
    pub fn compound(functor: impl Into<String>, args: Vec<Term>) -> Term {
        if args.is_empty() {
            Term::Const(functor.into())
        } else {
            Term::Compound(functor.into(), args)
        }
    }

    pub fn symbol(&self) -> Option<&str> {
        match self {
            Term::Var(_) => None,
            Term::Const(s) | Term::Compound(s, _) => Some(s),
        }
    }

    pub fn args(&self) -> &[Term] {
        match self {
            Term::Compound(_, args) => args,
            _ => &[],
        }
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    /// Appends every variable occurrence in traversal order.
    pub fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => out.push(v.clone()),
            Term::Const(_) => {}
            Term::Compound(_, args) => {
                for a in args {
                    a.collect_vars(out);
                }
            }
        }
    }

    /// Distinct variables in first-occurrence order.
    pub fn distinct_vars(&self) -> Vec<String> {
        let mut all = Vec::new();
        self.collect_vars(&mut all);
        let mut seen = HashSet::new();
        all.retain(|v| seen.insert(v.clone()));
        all
    }
}

/// Writes a symbol the way the program syntax expects it: bare when it is a
/// plain lowercase atom or a number, single-quoted otherwise.
pub fn fmt_atom(f: &mut fmt::Formatter<'_>, s: &str) -> fmt::Result {
    let plain_atom = s
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_lowercase())
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    let number = !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() || c == '.' || c == '-');
    if plain_atom || number {
        f.write_str(s)
    } else {
        write!(f, "'{}'", s.replace('\'', "''"))
    }
}

/// [`fmt_atom`] as a plain string.
pub fn atom_string(s: &str) -> String {
    struct AtomDisplay<'a>(&'a str);
    impl fmt::Display for AtomDisplay<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            fmt_atom(f, self.0)
        }
    }
    AtomDisplay(s).to_string()
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(c) => fmt_atom(f, c),
            Term::Compound(functor, args) => {
                fmt_atom(f, functor)?;
                f.write_str("(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// An idempotent substitution in solved form: bound variables never occur
/// in any bound term.
pub type Bindings = HashMap<String, Term>;

/// Replaces variables by their bindings. Assumes `theta` is in solved form,
/// so one pass suffices.
pub fn apply_bindings(theta: &Bindings, term: &Term) -> Term {
    match term {
        Term::Var(v) => theta.get(v).cloned().unwrap_or_else(|| term.clone()),
        Term::Const(_) => term.clone(),
        Term::Compound(f, args) => Term::Compound(
            f.clone(),
            args.iter().map(|a| apply_bindings(theta, a)).collect(),
        ),
    }
}

/// Composition `theta; sigma`: applies `sigma` to the images of `theta` and
/// adopts the bindings of `sigma` for variables `theta` leaves free.
pub fn compose(theta: &mut Bindings, sigma: &Bindings) {
    for value in theta.values_mut() {
        *value = apply_bindings(sigma, value);
    }
    for (var, value) in sigma {
        theta.entry(var.clone()).or_insert_with(|| value.clone());
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// A needed symbol pair is unrelated or falls below the lambda cut.
    Clash,
    /// Occurs-check violation.
    Occurs,
    /// Arity mismatch, including constant against compound.
    Arity,
}

#[derive(Clone, Debug)]
pub enum UnifyOutcome {
    Success { theta: Bindings, degree: f64 },
    Failure(FailureReason),
}

impl UnifyOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, UnifyOutcome::Success { .. })
    }

    pub fn degree(&self) -> Option<f64> {
        match self {
            UnifyOutcome::Success { degree, .. } => Some(*degree),
            UnifyOutcome::Failure(_) => None,
        }
    }
}

/// Weak unification settings: the relation, the lambda cut, the t-norm
/// composing degrees, and whether to run the occurs check (on by default).
#[derive(Clone, Copy)]
pub struct Unifier<'a> {
    pub relation: &'a FuzzyRelation,
    pub lambda: f64,
    pub tnorm: TNorm,
    pub occurs_check: bool,
}

impl<'a> Unifier<'a> {
    pub fn new(relation: &'a FuzzyRelation, lambda: f64, tnorm: TNorm) -> Self {
        Unifier { relation, lambda, tnorm, occurs_check: true }
    }

    /// The weak most general unifier of a single pair.
    pub fn wmgu(&self, e1: &Term, e2: &Term) -> UnifyOutcome {
        self.wmgu_system(&[(e1.clone(), e2.clone())])
    }

    /// Unifies all pairs simultaneously, maximizing one joint degree. The
    /// translated-program execution path relies on this: solving the
    /// argument equations of a clause head one at a time would fix witness
    /// values too early.
    pub fn wmgu_system(&self, pairs: &[(Term, Term)]) -> UnifyOutcome {
        let mut work = Work::new(self);
        match work.run(pairs) {
            Ok(()) => {
                let degree = work.best_degree();
                if degree > 0.0 && degree >= self.lambda {
                    UnifyOutcome::Success { theta: work.solved_form(), degree }
                } else {
                    UnifyOutcome::Failure(FailureReason::Clash)
                }
            }
            Err(reason) => UnifyOutcome::Failure(reason),
        }
    }
}

/// Recursion/positions deeper than this are abandoned; only reachable with
/// the occurs check disabled, where bindings may be cyclic.
const CYCLE_DEPTH_LIMIT: usize = 64;

#[derive(Clone, Debug)]
enum RawAlign {
    /// Two variables were aligned.
    VarVar(String, String),
    /// A variable was aligned with a rigid term.
    VarRigid(String, Term),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// An alignment of the two input sides: symbol meetings count toward
    /// the degree.
    Top,
    /// Reconciliation of two constraints already attached to one variable
    /// class: only shapes are merged, degrees are settled later by witness
    /// optimization.
    Merge,
}

struct ClassData {
    parent: usize,
    rank: u32,
    /// The variable that survives elimination and names the class in the
    /// solved form.
    rep_var: String,
    /// First rigid structure the class was equated with, if any.
    binding: Option<Term>,
}

/// Per-call working state.
struct Work<'a> {
    cfg: &'a Unifier<'a>,
    classes: Vec<ClassData>,
    slot_of: HashMap<String, usize>,
    aligns: Vec<RawAlign>,
    /// Fold of the degrees of directly-met rigid symbol pairs.
    fixed: f64,
}

impl<'a> Work<'a> {
    fn new(cfg: &'a Unifier<'a>) -> Self {
        Work {
            cfg,
            classes: Vec::new(),
            slot_of: HashMap::new(),
            aligns: Vec::new(),
            fixed: 1.0,
        }
    }

    fn slot(&mut self, var: &str) -> usize {
        if let Some(&s) = self.slot_of.get(var) {
            return s;
        }
        let s = self.classes.len();
        self.classes.push(ClassData {
            parent: s,
            rank: 0,
            rep_var: var.to_string(),
            binding: None,
        });
        self.slot_of.insert(var.to_string(), s);
        s
    }

    fn find(&mut self, s: usize) -> usize {
        let mut root = s;
        while self.classes[root].parent != root {
            root = self.classes[root].parent;
        }
        let mut cur = s;
        while self.classes[cur].parent != root {
            let next = self.classes[cur].parent;
            self.classes[cur].parent = root;
            cur = next;
        }
        root
    }

    fn find_var(&mut self, var: &str) -> usize {
        let s = self.slot(var);
        self.find(s)
    }

    /// The structural pass: a worklist Martelli-Montanari walk over shapes
    /// that folds rigid-rigid proximity factors and records alignments.
    fn run(&mut self, pairs: &[(Term, Term)]) -> Result<(), FailureReason> {
        let mut queue: VecDeque<(Term, Term, Mode)> = pairs
            .iter()
            .map(|(a, b)| (a.clone(), b.clone(), Mode::Top))
            .collect();
        while let Some((a, b, mode)) = queue.pop_front() {
            match (&a, &b) {
                (Term::Var(x), Term::Var(y)) => {
                    if mode == Mode::Top {
                        self.aligns.push(RawAlign::VarVar(x.clone(), y.clone()));
                    }
                    self.union(x, y, &mut queue)?;
                }
                (Term::Var(x), rigid) => {
                    if mode == Mode::Top {
                        self.aligns.push(RawAlign::VarRigid(x.clone(), (*rigid).clone()));
                    }
                    self.bind(x, rigid, &mut queue)?;
                }
                (rigid, Term::Var(y)) => {
                    if mode == Mode::Top {
                        self.aligns.push(RawAlign::VarRigid(y.clone(), (*rigid).clone()));
                    }
                    self.bind(y, rigid, &mut queue)?;
                }
                (s, t) => {
                    let (fs, ft) = (s.symbol().expect("rigid"), t.symbol().expect("rigid"));
                    let (sa, ta) = (s.args(), t.args());
                    if sa.len() != ta.len() {
                        return Err(FailureReason::Arity);
                    }
                    if mode == Mode::Top {
                        let factor = self.cfg.relation.degree_of(fs, ft);
                        if factor <= 0.0 || factor < self.cfg.lambda {
                            return Err(FailureReason::Clash);
                        }
                        self.fixed = self.cfg.tnorm.apply(self.fixed, factor);
                        if self.fixed <= 0.0 || self.fixed < self.cfg.lambda {
                            return Err(FailureReason::Clash);
                        }
                    }
                    for (x, y) in sa.iter().zip(ta.iter()) {
                        queue.push_back((x.clone(), y.clone(), mode));
                    }
                }
            }
        }
        Ok(())
    }

    fn union(
        &mut self,
        x: &str,
        y: &str,
        queue: &mut VecDeque<(Term, Term, Mode)>,
    ) -> Result<(), FailureReason> {
        let rx = self.find_var(x);
        let ry = self.find_var(y);
        if rx == ry {
            return Ok(());
        }
        // The left variable is the one being eliminated, so the merged
        // class answers to the right variable's representative.
        let rep = self.classes[ry].rep_var.clone();
        let binding = match (self.classes[rx].binding.take(), self.classes[ry].binding.take()) {
            (Some(s), Some(t)) => {
                queue.push_back((s.clone(), t, Mode::Merge));
                Some(s)
            }
            (Some(s), None) | (None, Some(s)) => Some(s),
            (None, None) => None,
        };
        let root = if self.classes[rx].rank < self.classes[ry].rank {
            self.classes[rx].parent = ry;
            ry
        } else if self.classes[rx].rank > self.classes[ry].rank {
            self.classes[ry].parent = rx;
            rx
        } else {
            self.classes[ry].parent = rx;
            self.classes[rx].rank += 1;
            rx
        };
        self.classes[root].rep_var = rep;
        self.classes[root].binding = binding;
        Ok(())
    }

    fn bind(
        &mut self,
        x: &str,
        rigid: &Term,
        queue: &mut VecDeque<(Term, Term, Mode)>,
    ) -> Result<(), FailureReason> {
        let root = self.find_var(x);
        if self.cfg.occurs_check && self.occurs(root, rigid) {
            return Err(FailureReason::Occurs);
        }
        match &self.classes[root].binding {
            None => {
                self.classes[root].binding = Some(rigid.clone());
                Ok(())
            }
            Some(existing) => {
                queue.push_back((existing.clone(), rigid.clone(), Mode::Merge));
                Ok(())
            }
        }
    }

    /// Whether the class occurs in the term, looking through the bindings
    /// of any variables inside it.
    fn occurs(&mut self, target: usize, term: &Term) -> bool {
        let mut visited: HashSet<usize> = HashSet::new();
        let mut stack: Vec<Term> = vec![term.clone()];
        while let Some(t) = stack.pop() {
            match t {
                Term::Var(v) => {
                    let root = self.find_var(&v);
                    if root == target {
                        return true;
                    }
                    if visited.insert(root) {
                        if let Some(b) = self.classes[root].binding.clone() {
                            stack.push(b);
                        }
                    }
                }
                Term::Const(_) => {}
                Term::Compound(_, args) => stack.extend(args.iter().cloned()),
            }
        }
        false
    }

    /// The shape governing the subterm of a class binding at `path`:
    /// either a rigid term or a flex (unbound) class.
    fn shape_at(&mut self, var: &str, path: &[u32]) -> Shape {
        let mut root = self.find_var(var);
        let mut term = match self.classes[root].binding.clone() {
            Some(t) => t,
            None => return Shape::Flex(root),
        };
        for (hops, &step) in path.iter().enumerate() {
            if hops >= CYCLE_DEPTH_LIMIT {
                return Shape::Flex(root);
            }
            loop {
                match term {
                    Term::Var(ref v) => {
                        root = self.find_var(v);
                        match self.classes[root].binding.clone() {
                            Some(t) => term = t,
                            None => return Shape::Flex(root),
                        }
                    }
                    _ => break,
                }
            }
            term = term.args()[step as usize].clone();
        }
        loop {
            match term {
                Term::Var(ref v) => {
                    root = self.find_var(v);
                    match self.classes[root].binding.clone() {
                        Some(t) => term = t,
                        None => return Shape::Flex(root),
                    }
                }
                _ => return Shape::Rigid(term),
            }
        }
    }

    /// Expands the recorded alignments into a constraint graph over witness
    /// positions and returns the degree-maximal fold.
    fn best_degree(&mut self) -> f64 {
        let mut graph = ConstraintGraph::default();
        let aligns = std::mem::take(&mut self.aligns);
        for align in &aligns {
            match align {
                RawAlign::VarVar(x, y) => {
                    self.expand_var_var(&mut graph, x, &[], y, &[], 0);
                }
                RawAlign::VarRigid(x, t) => {
                    self.expand_var_rigid(&mut graph, x, &[], t, 0);
                }
            }
        }
        self.aligns = aligns;
        graph.solve(self.cfg, self.fixed)
    }

    fn expand_var_rigid(
        &mut self,
        graph: &mut ConstraintGraph,
        x: &str,
        path: &[u32],
        t: &Term,
        depth: usize,
    ) {
        if depth >= CYCLE_DEPTH_LIMIT {
            return;
        }
        match t {
            Term::Var(z) => self.expand_var_var(graph, x, path, z, &[], depth),
            rigid => {
                let node = graph.node(x, path);
                graph.sym_edge(node, rigid.symbol().expect("rigid term"));
                for (i, arg) in rigid.args().iter().enumerate() {
                    let mut sub = path.to_vec();
                    sub.push(i as u32);
                    self.expand_var_rigid(graph, x, &sub, arg, depth + 1);
                }
            }
        }
    }

    fn expand_var_var(
        &mut self,
        graph: &mut ConstraintGraph,
        x: &str,
        px: &[u32],
        y: &str,
        py: &[u32],
        depth: usize,
    ) {
        if depth >= CYCLE_DEPTH_LIMIT {
            return;
        }
        if x == y && px == py {
            return; // a position against itself always carries degree 1
        }
        let a = graph.node(x, px);
        let b = graph.node(y, py);
        graph.var_edge(a, b);
        // Both positions share one class, hence one shape; recurse over it.
        if let Shape::Rigid(term) = self.shape_at(x, px) {
            for i in 0..term.args().len() as u32 {
                let mut sx = px.to_vec();
                sx.push(i);
                let mut sy = py.to_vec();
                sy.push(i);
                self.expand_var_var(graph, x, &sx, y, &sy, depth + 1);
            }
        }
    }

    /// Resolves every input variable to its final value: the class
    /// representative for unbound classes, the fully resolved first-seen
    /// structure for bound ones.
    fn solved_form(&mut self) -> Bindings {
        let vars: Vec<String> = self.slot_of.keys().cloned().collect();
        let mut theta = Bindings::new();
        for var in vars {
            let root = self.find_var(&var);
            let value = match self.classes[root].binding.clone() {
                None => Term::Var(self.classes[root].rep_var.clone()),
                Some(term) => self.resolve_term(&term, 0),
            };
            if value != Term::Var(var.clone()) {
                theta.insert(var, value);
            }
        }
        theta
    }

    fn resolve_term(&mut self, term: &Term, depth: usize) -> Term {
        if depth >= CYCLE_DEPTH_LIMIT {
            return term.clone();
        }
        match term {
            Term::Var(v) => {
                let root = self.find_var(v);
                match self.classes[root].binding.clone() {
                    Some(b) => self.resolve_term(&b, depth + 1),
                    None => Term::Var(self.classes[root].rep_var.clone()),
                }
            }
            Term::Const(_) => term.clone(),
            Term::Compound(f, args) => Term::Compound(
                f.clone(),
                args.iter().map(|a| self.resolve_term(a, depth + 1)).collect(),
            ),
        }
    }
}

enum Shape {
    Rigid(Term),
    Flex(#[allow(dead_code)] usize),
}

/// The witness optimization problem: choice nodes (one per variable and
/// position), edges between nodes whose values meet, and edges from nodes
/// to fixed symbols.
#[derive(Default)]
struct ConstraintGraph {
    node_ids: HashMap<(String, Vec<u32>), usize>,
    sym_edges: Vec<Vec<String>>,
    var_edges: Vec<(usize, usize)>,
}

impl ConstraintGraph {
    fn node(&mut self, var: &str, path: &[u32]) -> usize {
        let key = (var.to_string(), path.to_vec());
        if let Some(&id) = self.node_ids.get(&key) {
            return id;
        }
        let id = self.sym_edges.len();
        self.node_ids.insert(key, id);
        self.sym_edges.push(Vec::new());
        id
    }

    fn sym_edge(&mut self, node: usize, sym: &str) {
        self.sym_edges[node].push(sym.to_string());
    }

    fn var_edge(&mut self, a: usize, b: usize) {
        self.var_edges.push((a, b));
    }

    /// Maximizes the t-norm fold of all edge degrees over value
    /// assignments, one connected component at a time, starting from the
    /// already-folded rigid factors.
    fn solve(&self, cfg: &Unifier<'_>, fixed: f64) -> f64 {
        let n = self.sym_edges.len();
        if n == 0 {
            return fixed;
        }
        // Connected components via the node-node edges.
        let mut comp = vec![usize::MAX; n];
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.var_edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut comp_count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = comp_count;
            while let Some(v) = stack.pop() {
                for &w in &adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = comp_count;
                        stack.push(w);
                    }
                }
            }
            comp_count += 1;
        }

        let mut total = fixed;
        for c in 0..comp_count {
            let nodes: Vec<usize> = (0..n).filter(|&v| comp[v] == c).collect();
            // A component whose nodes never meet a symbol is satisfied by
            // giving every node the same fresh value: degree 1.
            if nodes.iter().all(|&v| self.sym_edges[v].is_empty()) {
                continue;
            }
            let best = self.solve_component(cfg, &nodes);
            total = cfg.tnorm.apply(total, best);
            if total <= 0.0 {
                return 0.0;
            }
        }
        total
    }

    fn solve_component(&self, cfg: &Unifier<'_>, nodes: &[usize]) -> f64 {
        // Candidate values: every symbol of the relation's support, every
        // symbol the component is constrained by, plus one fresh symbol
        // unrelated to everything else.
        let mut candidates: Vec<String> =
            cfg.relation.support().iter().map(|s| s.to_string()).collect();
        for &v in nodes {
            for s in &self.sym_edges[v] {
                candidates.push(s.clone());
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        candidates.push("\u{0}fresh".to_string());

        let index_of: HashMap<usize, usize> =
            nodes.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        // Edges rewritten against component-local indices; every edge is
        // charged once, when its later endpoint is assigned.
        let mut local_edges: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
        for &(a, b) in &self.var_edges {
            if let (Some(&ia), Some(&ib)) = (index_of.get(&a), index_of.get(&b)) {
                let (lo, hi) = if ia <= ib { (ia, ib) } else { (ib, ia) };
                local_edges[hi].push(lo);
            }
        }

        let mut assignment: Vec<usize> = vec![0; nodes.len()];
        let mut best = 0.0f64;
        self.assign(
            cfg,
            nodes,
            &candidates,
            &local_edges,
            &mut assignment,
            0,
            1.0,
            &mut best,
        );
        best
    }

    #[allow(clippy::too_many_arguments)]
    fn assign(
        &self,
        cfg: &Unifier<'_>,
        nodes: &[usize],
        candidates: &[String],
        local_edges: &[Vec<usize>],
        assignment: &mut Vec<usize>,
        at: usize,
        acc: f64,
        best: &mut f64,
    ) {
        if acc <= *best || acc < cfg.lambda {
            return;
        }
        if at == nodes.len() {
            *best = acc;
            return;
        }
        for (ci, cand) in candidates.iter().enumerate() {
            let mut here = acc;
            for sym in &self.sym_edges[nodes[at]] {
                here = cfg.tnorm.apply(here, cfg.relation.degree_of(cand, sym));
                if here <= *best || here < cfg.lambda {
                    break;
                }
            }
            if here <= *best || here < cfg.lambda {
                continue;
            }
            let mut ok = true;
            for &earlier in &local_edges[at] {
                let other = &candidates[assignment[earlier]];
                here = cfg.tnorm.apply(here, cfg.relation.degree_of(cand, other));
                if here <= *best || here < cfg.lambda {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            assignment[at] = ci;
            self.assign(cfg, nodes, candidates, local_edges, assignment, at + 1, here, best);
        }
    }
}
