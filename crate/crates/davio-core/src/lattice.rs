//! Positive Davio lattices: leveled DAGs of residual functions with one
//! expansion variable per level, adjacent parents sharing their middle
//! child, and constant leaves.
//!
//! Level k holds exactly k+1 nodes.  A non-leaf node satisfies
//! `residual = left ⊕ v·right` where v is the level's expansion variable,
//! so bottom-up evaluation over the leaf constants reproduces the root
//! function — that evaluation is the structural oracle used by tests.

use serde::Serialize;

use crate::boolfn::{EsopFunction, VarSet};
use crate::error::{Error, Result};

/// How the expansion variable is chosen at each level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingStrategy {
    /// Scan the declared variable order from the start at every level and
    /// expand the first variable some residual still depends on.
    FixedOrder,
    /// Advance cyclically from just past the previously expanded variable,
    /// skipping variables no residual depends on.
    RoundRobin,
    /// Find a variable sequence of minimum level count.  Only permitted for
    /// functions of at most 6 distinct variables.
    ExhaustiveMinLevels,
}

/// Default level budget: three times the distinct-variable count.
pub fn default_max_levels(vars: usize) -> usize {
    3 * vars.max(1)
}

#[derive(Debug, Clone)]
pub struct DavioLattice {
    vars: VarSet,
    /// Rows of residuals, root row first; row k has k+1 nodes and the last
    /// row is all-constant.
    rows: Vec<Vec<EsopFunction>>,
    /// Expansion variable index per level; length = rows.len() - 1.
    level_vars: Vec<usize>,
}

/// View of one lattice node.  Adjacent parents share their middle child, so
/// node (k, i) has children (k+1, i) and (k+1, i+1).
#[derive(Debug, Clone, Copy)]
pub struct LatticeNode<'a> {
    pub level: usize,
    pub position: usize,
    pub residual: &'a EsopFunction,
    pub left_child: Option<(usize, usize)>,
    pub right_child: Option<(usize, usize)>,
}

impl DavioLattice {
    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Number of expansion levels (0 for a constant function).
    pub fn n_levels(&self) -> usize {
        self.level_vars.len()
    }

    pub fn rows(&self) -> &[Vec<EsopFunction>] {
        &self.rows
    }

    pub fn level_var(&self, level: usize) -> usize {
        self.level_vars[level]
    }

    pub fn level_var_names(&self) -> Vec<String> {
        self.level_vars.iter().map(|&v| self.vars.name(v).to_string()).collect()
    }

    pub fn root(&self) -> &EsopFunction {
        &self.rows[0][0]
    }

    pub fn node(&self, level: usize, position: usize) -> LatticeNode<'_> {
        let leaf = level == self.n_levels();
        LatticeNode {
            level,
            position,
            residual: &self.rows[level][position],
            left_child: (!leaf).then_some((level + 1, position)),
            right_child: (!leaf).then_some((level + 1, position + 1)),
        }
    }

    /// Leaf constants, leftmost (top of the diagonal) first.
    pub fn leaves(&self) -> Vec<bool> {
        self.rows
            .last()
            .unwrap()
            .iter()
            .map(|f| f.is_constant().expect("leaves are constant"))
            .collect()
    }

    /// Structural bottom-up evaluation: per-node rule `out = left ⊕ v·right`
    /// over the leaf constants only.  Independent of the stored residuals.
    pub fn evaluate(&self, assignment: u32) -> bool {
        let mut vals = self.leaves();
        for k in (0..self.n_levels()).rev() {
            let v = (assignment >> self.level_vars[k]) & 1 == 1;
            for i in 0..=k {
                vals[i] ^= v & vals[i + 1];
            }
            vals.truncate(k + 1);
        }
        vals[0]
    }

    /// DOT rendering with residual labels and one rank per level.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph lattice {\n  rankdir=TB;\n  node [shape=box];\n");
        for (k, row) in self.rows.iter().enumerate() {
            for (i, f) in row.iter().enumerate() {
                out.push_str(&format!("  n{k}_{i} [label=\"{}\"];\n", f));
            }
            let ids: Vec<String> = (0..row.len()).map(|i| format!("n{k}_{i}")).collect();
            out.push_str(&format!("  {{ rank=same; {} }}\n", ids.join("; ")));
        }
        // left edge carries the residual unchanged, right edge is ANDed
        // with the level variable
        for k in 0..self.n_levels() {
            let var = self.vars.name(self.level_vars[k]);
            for i in 0..self.rows[k].len() {
                out.push_str(&format!("  n{k}_{i} -> n{}_{} [label=\"1\"];\n", k + 1, i));
                out.push_str(&format!("  n{k}_{i} -> n{}_{} [label=\"{}\"];\n", k + 1, i + 1, var));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct LatticeJson {
            levels: Vec<Vec<String>>,
            level_vars: Vec<String>,
            leaves: Vec<u8>,
        }
        serde_json::to_value(LatticeJson {
            levels: self.rows.iter().map(|r| r.iter().map(|f| f.to_string()).collect()).collect(),
            level_vars: self.level_var_names(),
            leaves: self.leaves().iter().map(|&b| b as u8).collect(),
        })
        .expect("lattice serialization cannot fail")
    }
}

/// Combine the middle children of two adjacent parents (shared-node rule).
///
/// `x` is the right child of the left parent, `y` and `z` the left and
/// right children of the right parent, `v` the level's expansion variable.
/// Returns the shared middle node `v·x ⊕ v̄·y` and the corrected right
/// child `x ⊕ y ⊕ z`; both parents' expansion identities keep holding.
pub fn join_children(
    x: &EsopFunction,
    y: &EsopFunction,
    z: &EsopFunction,
    var: &str,
) -> Result<(EsopFunction, EsopFunction)> {
    let v = x.vars().index_of(var)?;
    let middle = x.and_literal(v, true).xor(&y.and_literal(v, false));
    let corrected = x.xor(y).xor(z);
    Ok((middle, corrected))
}

/// Expand one row with variable `v`, joining adjacent children so a row of
/// p nodes produces p+1.  Residuals that are semantic constants are folded
/// to the canonical 0/1 form so leaf detection stays exact.
fn expand_row(row: &[EsopFunction], var: &str) -> Result<Vec<EsopFunction>> {
    let pairs: Vec<(EsopFunction, EsopFunction)> =
        row.iter().map(|f| f.positive_davio_expand(var)).collect::<Result<_>>()?;
    let mut children = Vec::with_capacity(row.len() + 1);
    children.push(pairs[0].0.clone());
    let mut carry = pairs[0].1.clone();
    for (left, diff) in &pairs[1..] {
        let (middle, corrected) = join_children(&carry, left, diff, var)?;
        children.push(middle);
        carry = corrected;
    }
    children.push(carry);
    Ok(children.into_iter().map(fold_constant).collect())
}

fn fold_constant(f: EsopFunction) -> EsopFunction {
    match (f.is_constant(), f.constant_value()) {
        (None, Some(c)) => EsopFunction::constant(f.vars(), c),
        _ => f,
    }
}

/// Build a lattice for `f` top-down, expanding level by level until every
/// residual is constant.
///
/// Variable repetition can grow the lattice without bound for some orders;
/// `max_levels` caps the attempt and exceeding it is an error.
pub fn build_lattice(
    f: &EsopFunction,
    strategy: OrderingStrategy,
    max_levels: usize,
) -> Result<DavioLattice> {
    assert!(max_levels >= 1, "max_levels must be at least 1");
    if let Some(c) = f.constant_value() {
        // Degenerate input: a leaf-only lattice with zero expansion levels.
        return Ok(DavioLattice {
            vars: f.vars().clone(),
            rows: vec![vec![EsopFunction::constant(f.vars(), c)]],
            level_vars: Vec::new(),
        });
    }
    match strategy {
        OrderingStrategy::FixedOrder => build_top_down(f, max_levels, false),
        OrderingStrategy::RoundRobin => build_top_down(f, max_levels, true),
        OrderingStrategy::ExhaustiveMinLevels => build_min_levels(f, max_levels),
    }
}

fn build_top_down(f: &EsopFunction, max_levels: usize, round_robin: bool) -> Result<DavioLattice> {
    let vars = f.vars().clone();
    let n = vars.len();
    let mut rows = vec![vec![f.clone()]];
    let mut level_vars = Vec::new();
    let mut cursor = 0usize; // round-robin scan start
    loop {
        let row = rows.last().unwrap();
        if row.iter().all(|g| g.is_constant().is_some()) {
            break;
        }
        if level_vars.len() == max_levels {
            return Err(Error::LevelBudgetExceeded { budget: max_levels });
        }
        let start = if round_robin { cursor } else { 0 };
        let pick = (0..n)
            .map(|off| (start + off) % n)
            .find(|&v| row.iter().any(|g| g.depends_on(v)))
            .expect("a non-constant residual depends on some variable");
        cursor = (pick + 1) % n;
        let next = expand_row(row, vars.name(pick))?;
        level_vars.push(pick);
        rows.push(next);
    }
    Ok(DavioLattice { vars, rows, level_vars })
}

/// Truth tables of the elementary symmetric polynomials e_0..e_L of a
/// variable multiset, packed as u64 bitmasks (≤ 6 distinct variables).
fn esym_tables(n: usize, multiset: &[usize]) -> Vec<u64> {
    let size = 1usize << n;
    let mut tables = vec![0u64; multiset.len() + 1];
    tables[0] = if size == 64 { u64::MAX } else { (1u64 << size) - 1 }; // e_0 = 1
    for (i, &v) in multiset.iter().enumerate() {
        let mut var_tt: u64 = 0;
        for a in 0..size {
            if a >> v & 1 == 1 {
                var_tt |= 1 << a;
            }
        }
        // e_k ← e_k ⊕ v·e_{k-1}, descending k
        for k in (1..=i + 1).rev() {
            tables[k] ^= var_tt & tables[k - 1];
        }
    }
    tables
}

/// GF(2) least-squares-free exact solve: express `target` as an XOR of
/// basis tables, returning the coefficient vector if solvable.
fn gf2_solve(basis: &[u64], target: u64) -> Option<Vec<bool>> {
    let mut rows: Vec<(u64, u64)> = basis
        .iter()
        .enumerate()
        .map(|(i, &b)| (b, 1u64 << i)) // (table, coefficient tracker)
        .collect();
    let mut t = target;
    let mut t_coeff = 0u64;
    let mut used = vec![false; rows.len()];
    for bit in 0..64 {
        let pivot = (0..rows.len()).find(|&r| !used[r] && rows[r].0 >> bit & 1 == 1);
        let Some(p) = pivot else { continue };
        used[p] = true;
        let (pt, pc) = rows[p];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != p && !used[r] && row.0 >> bit & 1 == 1 {
                row.0 ^= pt;
                row.1 ^= pc;
            }
        }
        if t >> bit & 1 == 1 {
            t ^= pt;
            t_coeff ^= pc;
        }
    }
    if t != 0 {
        return None;
    }
    Some((0..basis.len()).map(|i| t_coeff >> i & 1 == 1).collect())
}

/// Minimum-level search.
///
/// Every fully joined L-level lattice computes
/// `⊕_k leaves[k] · e_k(level variables)`, the elementary symmetric
/// polynomials of the level-variable multiset, so f is realizable in L
/// levels exactly when its truth table lies in the GF(2) span of
/// {1, e_1, …, e_L} for some multiset of size L.  Enumerating multisets in
/// ascending size (lexicographic in declared order) and solving the linear
/// system yields the exact minimum and deterministic tie-breaking.
fn build_min_levels(f: &EsopFunction, max_levels: usize) -> Result<DavioLattice> {
    let vars = f.vars().clone();
    let deps: Vec<usize> = (0..vars.len()).filter(|&v| f.depends_on(v)).collect();
    if deps.len() > 6 {
        return Err(Error::TooManyVariablesForSearch(deps.len()));
    }
    // Project onto the dependent variables: bit j of the solver domain is
    // deps[j].  f is constant over the others.
    let size = 1usize << deps.len();
    let mut target: u64 = 0;
    for a in 0..size {
        let full: u32 = deps
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &v)| acc | (((a >> j) & 1) as u32) << v);
        if f.eval(full) {
            target |= 1 << a;
        }
    }

    for len in deps.len().max(1)..=max_levels {
        let mut seq: Vec<usize> = Vec::new();
        if let Some(lat) = try_multisets(&vars, &deps, &mut seq, len, target) {
            return Ok(lat);
        }
    }
    Err(Error::LevelBudgetExceeded { budget: max_levels })
}

/// Enumerate non-decreasing index sequences over `deps` of length `len`;
/// every dependent variable must appear at least once.  `seq` holds
/// positions into `deps`.
fn try_multisets(
    vars: &VarSet,
    deps: &[usize],
    seq: &mut Vec<usize>,
    len: usize,
    target: u64,
) -> Option<DavioLattice> {
    if seq.len() == len {
        if (0..deps.len()).any(|j| !seq.contains(&j)) {
            return None;
        }
        let tables = esym_tables(deps.len(), seq);
        let leaves = gf2_solve(&tables, target)?;
        let level_vars: Vec<usize> = seq.iter().map(|&j| deps[j]).collect();
        return Some(lattice_from_leaves_ids(vars, &level_vars, &leaves));
    }
    let min_next = seq.last().copied().unwrap_or(0);
    for j in min_next..deps.len() {
        seq.push(j);
        if let Some(l) = try_multisets(vars, deps, seq, len, target) {
            return Some(l);
        }
        seq.pop();
    }
    None
}

/// Construct a lattice bottom-up from a level-variable sequence and leaf
/// constants, filling residuals by the per-node rule.
fn lattice_from_leaves_ids(vars: &VarSet, level_vars: &[usize], leaves: &[bool]) -> DavioLattice {
    assert_eq!(leaves.len(), level_vars.len() + 1);
    let mut rows: Vec<Vec<EsopFunction>> =
        vec![leaves.iter().map(|&b| EsopFunction::constant(vars, b)).collect()];
    for (k, &v) in level_vars.iter().enumerate().rev() {
        let below = &rows[0];
        let mut row = Vec::with_capacity(k + 1);
        for i in 0..=k {
            row.push(below[i].xor(&below[i + 1].and_literal(v, true)));
        }
        rows.insert(0, row);
    }
    DavioLattice { vars: vars.clone(), rows, level_vars: level_vars.to_vec() }
}

/// The regular n-level lattice over fresh variables a, b, c, … with the
/// given n+1 leaf constants (top of the diagonal first).
///
/// Its function is `⊕_k leaves[k] · S^{k,…,n}(vars)`.
pub fn symmetric_lattice(n: usize, leaves: &[bool]) -> Result<DavioLattice> {
    assert!(n >= 1, "a symmetric lattice needs at least one level");
    if leaves.len() != n + 1 {
        return Err(Error::ArityMismatch { expected: n + 1, got: leaves.len() });
    }
    let vars = VarSet::alphabetic(n)?;
    let level_vars: Vec<usize> = (0..n).collect();
    Ok(lattice_from_leaves_ids(&vars, &level_vars, leaves))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{symmetric_function, SymmetryIndexSet};

    fn parse(text: &str, vars: &VarSet) -> EsopFunction {
        EsopFunction::parse(text, vars).unwrap()
    }

    fn oracle_matches(lat: &DavioLattice, f: &EsopFunction) -> bool {
        let tt = f.to_truth_table();
        (0u32..1 << f.vars().len()).all(|a| lat.evaluate(a) == tt.get(a))
    }

    #[test]
    fn join_children_example2() {
        let vars = VarSet::new(["a", "b", "d"]).unwrap();
        let x = parse("a ^ b ^ a b", &vars);
        let y = parse("a ^ b", &vars);
        let z = parse("1 ^ b", &vars);
        let (middle, corrected) = join_children(&x, &y, &z, "d").unwrap();
        assert!(middle.equivalent(&parse("a ^ b ^ a b d", &vars)));
        assert!(corrected.equivalent(&parse("1 ^ b ^ a b", &vars)));
    }

    #[test]
    fn join_with_identical_shared_child() {
        let vars = VarSet::new(["a", "b", "d"]).unwrap();
        let x = parse("a b", &vars);
        let z = parse("b", &vars);
        let (middle, corrected) = join_children(&x, &x, &z, "d").unwrap();
        assert!(middle.equivalent(&x));
        assert!(corrected.equivalent(&z));
    }

    #[test]
    fn join_preserves_parent_identities() {
        // r = w ⊕ v·x and s = y ⊕ v·z keep holding through the joined form.
        let vars = VarSet::new(["a", "b", "c", "v"]).unwrap();
        let v = vars.index_of("v").unwrap();
        let samples = ["a ^ b c", "1 ^ a b", "c", "a ^ b ^ c ^ a c"];
        for x_t in samples {
            for y_t in samples {
                for z_t in samples {
                    let (x, y, z) = (parse(x_t, &vars), parse(y_t, &vars), parse(z_t, &vars));
                    let (middle, corrected) = join_children(&x, &y, &z, "v").unwrap();
                    // left parent: v·middle ≡ v·x
                    assert!(middle
                        .and_literal(v, true)
                        .equivalent(&x.and_literal(v, true)));
                    // right parent: middle ⊕ v·corrected ≡ y ⊕ v·z
                    assert!(middle
                        .xor(&corrected.and_literal(v, true))
                        .equivalent(&y.xor(&z.and_literal(v, true))));
                }
            }
        }
    }

    #[test]
    fn constant_function_builds_leaf_only_lattice() {
        let vars = VarSet::new(["a", "b"]).unwrap();
        let lat = build_lattice(&EsopFunction::one(&vars), OrderingStrategy::FixedOrder, 6).unwrap();
        assert_eq!(lat.n_levels(), 0);
        assert_eq!(lat.leaves(), vec![true]);
        assert!(lat.evaluate(0b11));
    }

    #[test]
    fn level_widths_after_joining() {
        let vars = VarSet::new(["a", "b", "c"]).unwrap();
        let f = parse("a b ^ b c ^ a c", &vars);
        let lat = build_lattice(&f, OrderingStrategy::FixedOrder, 9).unwrap();
        for (k, row) in lat.rows().iter().enumerate() {
            assert_eq!(row.len(), k + 1);
        }
        assert!(oracle_matches(&lat, &f));
    }

    #[test]
    fn symmetric_functions_need_no_repetition() {
        for indices in [vec![1], vec![2, 3], vec![1, 2, 3], vec![0, 2]] {
            let vars = VarSet::alphabetic(3).unwrap();
            let f = symmetric_function(&SymmetryIndexSet::new(3, indices).unwrap(), &vars).unwrap();
            let lat = build_lattice(&f, OrderingStrategy::FixedOrder, 9).unwrap();
            assert_eq!(lat.n_levels(), 3);
            let mut used = lat.level_vars.clone();
            used.sort_unstable();
            used.dedup();
            assert_eq!(used.len(), 3, "each variable used exactly once");
            assert!(oracle_matches(&lat, &f));
        }
    }

    #[test]
    fn level_budget_error_when_constants_unreachable() {
        let vars = VarSet::new(["a", "b", "c"]).unwrap();
        let f = parse("a b ^ b c ^ a !c", &vars);
        // not buildable in two levels under any strategy
        assert_eq!(
            build_lattice(&f, OrderingStrategy::FixedOrder, 2).unwrap_err(),
            Error::LevelBudgetExceeded { budget: 2 }
        );
    }

    #[test]
    fn min_levels_finds_four_for_example3() {
        // f = ab ⊕ bc ⊕ ac̄ is not symmetric; three levels realize only
        // elementary-symmetric combinations, so the true minimum is four.
        let vars = VarSet::new(["a", "b", "c"]).unwrap();
        let f = parse("a b ^ b c ^ a !c", &vars);
        let lat = build_lattice(&f, OrderingStrategy::ExhaustiveMinLevels, 12).unwrap();
        assert_eq!(lat.n_levels(), 4);
        assert!(oracle_matches(&lat, &f));
    }

    #[test]
    fn min_levels_rejects_more_than_six_distinct_variables() {
        let vars = VarSet::alphabetic(7).unwrap();
        let f = parse("a ^ b ^ c ^ d ^ e ^ f ^ g", &vars);
        assert_eq!(
            build_lattice(&f, OrderingStrategy::ExhaustiveMinLevels, 21).unwrap_err(),
            Error::TooManyVariablesForSearch(7)
        );
        // but a wide variable set with few dependents is fine
        let g = parse("a ^ b", &vars);
        let lat = build_lattice(&g, OrderingStrategy::ExhaustiveMinLevels, 21).unwrap();
        assert_eq!(lat.n_levels(), 2);
        assert!(oracle_matches(&lat, &g));
    }

    #[test]
    fn min_levels_matches_symmetric_count() {
        let vars = VarSet::alphabetic(3).unwrap();
        let f = symmetric_function(&SymmetryIndexSet::new(3, [2, 3]).unwrap(), &vars).unwrap();
        let lat = build_lattice(&f, OrderingStrategy::ExhaustiveMinLevels, 12).unwrap();
        assert_eq!(lat.n_levels(), 3);
        assert!(oracle_matches(&lat, &f));
    }

    #[test]
    fn symmetric_lattice_eq5_terms() {
        // leaves (w,x,y,z) = (0,0,1,0) select S^{2,3} = ab ⊕ bc ⊕ ac
        let lat = symmetric_lattice(3, &[false, false, true, false]).unwrap();
        let vars = lat.vars().clone();
        let s23 = parse("a b ^ b c ^ a c", &vars);
        assert!(oracle_matches(&lat, &s23));
        // leaves (0,1,0,0) select S^{1,2,3} = a ⊕ b ⊕ c
        let lat = symmetric_lattice(3, &[false, true, false, false]).unwrap();
        let parity = parse("a ^ b ^ c", &vars);
        assert!(oracle_matches(&lat, &parity));
        // all-zero leaves give the zero function
        let lat = symmetric_lattice(3, &[false; 4]).unwrap();
        assert!((0u32..8).all(|a| !lat.evaluate(a)));
    }

    #[test]
    fn symmetric_lattice_arity_check() {
        assert_eq!(
            symmetric_lattice(3, &[false, true]).unwrap_err(),
            Error::ArityMismatch { expected: 4, got: 2 }
        );
    }

    #[test]
    fn evaluate_agrees_with_root_truth_table() {
        // A fully joined lattice realizes exactly the elementary-symmetric
        // combinations of its level variables, and this function needs a
        // 12-level variable multiset; the top-down orders never reach
        // constants for it.
        let vars = VarSet::new(["a", "b", "c", "d"]).unwrap();
        let f = parse("1 ^ a d ^ b d ^ a b d ^ a c ^ b c ^ c d ^ b c d", &vars);
        let lat = build_lattice(&f, OrderingStrategy::ExhaustiveMinLevels, 12).unwrap();
        assert_eq!(lat.n_levels(), 12);
        assert!(oracle_matches(&lat, &f));
        assert!(lat.evaluate(0)); // f(0,0,0,0) = 1 from the constant term
    }

    #[test]
    fn per_node_expansion_identity() {
        // every non-leaf node satisfies residual ≡ left ⊕ v·right
        let vars = VarSet::new(["a", "b", "c"]).unwrap();
        let f = parse("a b ^ b c ^ a !c", &vars);
        for lat in [
            build_lattice(&f, OrderingStrategy::ExhaustiveMinLevels, 12).unwrap(),
            symmetric_lattice(3, &[true, false, true, true]).unwrap(),
        ] {
            for k in 0..lat.n_levels() {
                let v = lat.level_var(k);
                for i in 0..=k {
                    let node = lat.node(k, i);
                    let (lk, li) = node.left_child.unwrap();
                    let (rk, ri) = node.right_child.unwrap();
                    let recomposed = lat.rows()[lk][li]
                        .xor(&lat.rows()[rk][ri].and_literal(v, true));
                    assert!(node.residual.equivalent(&recomposed), "node ({k},{i})");
                }
            }
            let m = lat.n_levels();
            for i in 0..=m {
                let leaf = lat.node(m, i);
                assert!(leaf.left_child.is_none() && leaf.right_child.is_none());
                assert!(leaf.residual.constant_value().is_some());
            }
        }
    }

    #[test]
    fn json_and_dot_exports() {
        let lat = symmetric_lattice(2, &[false, true, false]).unwrap();
        let json = lat.to_json();
        assert_eq!(json["level_vars"], serde_json::json!(["a", "b"]));
        assert_eq!(json["leaves"], serde_json::json!([0, 1, 0]));
        assert_eq!(json["levels"].as_array().unwrap().len(), 3);
        let dot = lat.to_dot();
        assert!(dot.contains("rank=same"));
        assert!(dot.starts_with("digraph"));
    }
}
