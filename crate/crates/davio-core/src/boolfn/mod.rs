//! GF(2) Boolean-function algebra: ESOP expressions, truth tables, cofactors,
//! the Shannon and Davio expansions, and symmetric-function machinery.
//!
//! Functions are represented as XOR-sums of cubes over a fixed, ordered
//! variable set.  Two functions are considered equal when their truth tables
//! agree; distinct cube sets may denote the same function.

mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard limit on the number of variables; truth-table oracles are 2^n.
pub const MAX_VARS: usize = 16;

/// An ordered set of named variables, shared by every function derived from it.
///
/// The order is fixed at construction: variable 0 is the least significant
/// bit of a truth-table assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

impl VarSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(Error::BadVariableSet);
            }
        }
        Ok(VarSet { names: Arc::new(names) })
    }

    /// Variable set `a, b, c, ...` with `n` single-letter names.
    pub fn alphabetic(n: usize) -> Result<Self> {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        Self::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

/// Three-valued literal of one variable inside a cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Literal {
    Absent,
    Positive,
    Negative,
}

impl Literal {
    fn rank(self) -> u8 {
        match self {
            Literal::Absent => 0,
            Literal::Positive => 1,
            Literal::Negative => 2,
        }
    }
}

/// A product term with per-variable literals in {positive, negative, absent}.
///
/// `mask` has a bit per present variable, `pol` the positive-polarity bits;
/// `pol` is always a subset of `mask`.  The empty cube is the constant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cube {
    mask: u16,
    pol: u16,
}

impl Cube {
    pub const ONE: Cube = Cube { mask: 0, pol: 0 };

    pub fn new(mask: u16, pol: u16) -> Self {
        debug_assert_eq!(pol & !mask, 0, "polarity bits outside the mask");
        Cube { mask, pol: pol & mask }
    }

    pub fn literal(&self, var: usize) -> Literal {
        let bit = 1u16 << var;
        if self.mask & bit == 0 {
            Literal::Absent
        } else if self.pol & bit != 0 {
            Literal::Positive
        } else {
            Literal::Negative
        }
    }

    /// Product evaluation at an assignment (variable i = bit i).
    pub fn eval(&self, assignment: u32) -> bool {
        (assignment as u16) & self.mask == self.pol
    }

    fn with(mut self, var: usize, lit: Literal) -> Self {
        let bit = 1u16 << var;
        match lit {
            Literal::Absent => {
                self.mask &= !bit;
                self.pol &= !bit;
            }
            Literal::Positive => {
                self.mask |= bit;
                self.pol |= bit;
            }
            Literal::Negative => {
                self.mask |= bit;
                self.pol &= !bit;
            }
        }
        self
    }
}

impl Ord for Cube {
    /// Lexicographic over the per-variable literal vector (absent < positive
    /// < negative), variable 0 first.  Fixes display and equality order.
    fn cmp(&self, other: &Self) -> Ordering {
        for v in 0..MAX_VARS {
            let r = self.literal(v).rank().cmp(&other.literal(v).rank());
            if r != Ordering::Equal {
                return r;
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Cube {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Boolean function as an XOR-sum of cubes.
///
/// Duplicate cubes cancel on insertion (x ⊕ x = 0), so the cube set is
/// always duplicate-free.  The zero function has no cubes; the constant 1
/// is the single empty cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsopFunction {
    vars: VarSet,
    cubes: Vec<Cube>, // sorted, duplicate-free
}

impl EsopFunction {
    pub fn zero(vars: &VarSet) -> Self {
        EsopFunction { vars: vars.clone(), cubes: Vec::new() }
    }

    pub fn one(vars: &VarSet) -> Self {
        EsopFunction { vars: vars.clone(), cubes: vec![Cube::ONE] }
    }

    pub fn constant(vars: &VarSet, value: bool) -> Self {
        if value {
            Self::one(vars)
        } else {
            Self::zero(vars)
        }
    }

    /// The single positive literal `name`.
    pub fn variable(vars: &VarSet, name: &str) -> Result<Self> {
        let i = vars.index_of(name)?;
        let mut f = Self::zero(vars);
        f.toggle(Cube::ONE.with(i, Literal::Positive));
        Ok(f)
    }

    pub fn from_cubes<I: IntoIterator<Item = Cube>>(vars: &VarSet, cubes: I) -> Self {
        let mut f = Self::zero(vars);
        for c in cubes {
            f.toggle(c);
        }
        f
    }

    /// Parse the ESOP grammar: terms separated by `^`; a term is `0`, `1`,
    /// or a juxtaposition of literals; a literal is an identifier optionally
    /// prefixed by `!`.  See [`parse`](mod@self) for details.
    pub fn parse(text: &str, vars: &VarSet) -> Result<Self> {
        parse::parse_esop(text, vars)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn is_zero(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn is_constant(&self) -> Option<bool> {
        match self.cubes.as_slice() {
            [] => Some(false),
            [c] if *c == Cube::ONE => Some(true),
            _ => None,
        }
    }

    /// Semantic constant test: some cube sets (x ⊕ x̄) denote constants
    /// without being the canonical empty or 1 form.
    pub fn constant_value(&self) -> Option<bool> {
        if let Some(c) = self.is_constant() {
            return Some(c);
        }
        let first = self.eval(0);
        (1..1u32 << self.vars.len())
            .all(|a| self.eval(a) == first)
            .then_some(first)
    }

    /// XOR-insert: adds the cube, cancelling against an existing duplicate.
    pub fn toggle(&mut self, cube: Cube) {
        match self.cubes.binary_search(&cube) {
            Ok(i) => {
                self.cubes.remove(i);
            }
            Err(i) => self.cubes.insert(i, cube),
        }
    }

    pub fn xor(&self, other: &EsopFunction) -> EsopFunction {
        assert_eq!(self.vars, other.vars, "functions over different variable sets");
        let mut out = self.clone();
        for c in &other.cubes {
            out.toggle(*c);
        }
        out
    }

    /// Multiply by a single literal of `var` (positive when `polarity`).
    /// Cubes already containing the opposite literal vanish.
    pub fn and_literal(&self, var: usize, polarity: bool) -> EsopFunction {
        let bit = 1u16 << var;
        let mut out = Self::zero(&self.vars);
        for c in &self.cubes {
            if c.mask & bit != 0 && ((c.pol & bit != 0) != polarity) {
                continue; // x · x̄ = 0
            }
            out.toggle(Cube::new(c.mask | bit, if polarity { c.pol | bit } else { c.pol & !bit }));
        }
        out
    }

    pub fn eval(&self, assignment: u32) -> bool {
        self.cubes.iter().fold(false, |acc, c| acc ^ c.eval(assignment))
    }

    pub fn to_truth_table(&self) -> TruthTable {
        let n = self.vars.len();
        let bits = (0u32..1 << n).map(|v| self.eval(v)).collect();
        TruthTable { n, bits }
    }

    /// Algebraic normal form: rewrites every negative literal via
    /// x̄ = 1 ⊕ x, leaving only positive and absent literals.
    pub fn to_anf(&self) -> EsopFunction {
        let mut out = Self::zero(&self.vars);
        for c in &self.cubes {
            let pos = c.pol;
            let neg = c.mask & !c.pol;
            // (1 ⊕ x₁)(1 ⊕ x₂)… expands to the XOR over subsets of neg.
            let mut sub: u16 = 0;
            loop {
                out.toggle(Cube::new(pos | sub, pos | sub));
                if sub == neg {
                    break;
                }
                sub = (sub.wrapping_sub(neg)) & neg; // next submask
            }
        }
        out
    }

    /// Reconstruct a positive-polarity ESOP (the ANF) from a truth table via
    /// the GF(2) Möbius transform.
    pub fn from_truth_table(vars: &VarSet, table: &TruthTable) -> Self {
        assert_eq!(vars.len(), table.n, "variable count mismatch");
        let mut a: Vec<bool> = table.bits.clone();
        for i in 0..table.n {
            let bit = 1usize << i;
            for v in 0..a.len() {
                if v & bit != 0 {
                    a[v] ^= a[v ^ bit];
                }
            }
        }
        Self::from_cubes(
            vars,
            a.iter()
                .enumerate()
                .filter(|&(_, &c)| c)
                .map(|(m, _)| Cube::new(m as u16, m as u16)),
        )
    }

    /// Substitute `polarity` for the named variable; the variable is absent
    /// from every cube of the result.
    pub fn cofactor(&self, var: &str, polarity: bool) -> Result<EsopFunction> {
        let i = self.vars.index_of(var)?;
        Ok(self.cofactor_by_index(i, polarity))
    }

    pub fn cofactor_by_index(&self, var: usize, polarity: bool) -> EsopFunction {
        let bit = 1u16 << var;
        let mut out = Self::zero(&self.vars);
        for c in &self.cubes {
            if c.mask & bit == 0 {
                out.toggle(*c);
            } else if (c.pol & bit != 0) == polarity {
                out.toggle(Cube::new(c.mask & !bit, c.pol & !bit));
            }
            // literal contradicts the substitution: term vanishes
        }
        out
    }

    /// Shannon expansion f = v̄·f_v̄ ⊕ v·f_v; returns (f_v̄, f_v).
    pub fn shannon_expand(&self, var: &str) -> Result<(EsopFunction, EsopFunction)> {
        Ok((self.cofactor(var, false)?, self.cofactor(var, true)?))
    }

    /// Positive Davio expansion f = f_v̄ ⊕ v·(f_v̄ ⊕ f_v); returns (f_v̄, f_v̄ ⊕ f_v).
    pub fn positive_davio_expand(&self, var: &str) -> Result<(EsopFunction, EsopFunction)> {
        let (neg, pos) = self.shannon_expand(var)?;
        let diff = neg.xor(&pos);
        Ok((neg, diff))
    }

    /// Negative Davio expansion f = f_v ⊕ v̄·(f_v̄ ⊕ f_v); returns (f_v, f_v̄ ⊕ f_v).
    pub fn negative_davio_expand(&self, var: &str) -> Result<(EsopFunction, EsopFunction)> {
        let (neg, pos) = self.shannon_expand(var)?;
        let diff = neg.xor(&pos);
        Ok((pos, diff))
    }

    /// Whether the function's truth table changes between v = 0 and v = 1.
    pub fn depends_on(&self, var: usize) -> bool {
        !self
            .cofactor_by_index(var, false)
            .equivalent(&self.cofactor_by_index(var, true))
    }

    /// Truth-table equality; distinct ESOPs may represent the same function.
    pub fn equivalent(&self, other: &EsopFunction) -> bool {
        assert_eq!(self.vars, other.vars, "functions over different variable sets");
        self.to_truth_table() == other.to_truth_table()
    }

    /// For a totally symmetric function, the set of popcounts on which it is
    /// 1; `None` when some popcount class is not constant.
    pub fn symmetry_indices(&self) -> Option<SymmetryIndexSet> {
        let n = self.vars.len();
        let tt = self.to_truth_table();
        let mut class: Vec<Option<bool>> = vec![None; n + 1];
        for v in 0u32..1 << n {
            let k = v.count_ones() as usize;
            let bit = tt.bits[v as usize];
            match class[k] {
                None => class[k] = Some(bit),
                Some(b) if b != bit => return None,
                _ => {}
            }
        }
        Some(SymmetryIndexSet {
            n,
            indices: class
                .iter()
                .enumerate()
                .filter(|&(_, b)| *b == Some(true))
                .map(|(k, _)| k)
                .collect(),
        })
    }
}

impl fmt::Display for EsopFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cubes.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .cubes
            .iter()
            .map(|c| {
                if *c == Cube::ONE {
                    return "1".to_string();
                }
                let lits: Vec<String> = (0..self.vars.len())
                    .filter_map(|v| match c.literal(v) {
                        Literal::Absent => None,
                        Literal::Positive => Some(self.vars.name(v).to_string()),
                        Literal::Negative => Some(format!("!{}", self.vars.name(v))),
                    })
                    .collect();
                lits.join(" ")
            })
            .collect();
        write!(f, "{}", terms.join(" ^ "))
    }
}

/// Complete table of function values, indexed by assignment
/// (variable 0 = least significant bit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: usize,
    bits: Vec<bool>,
}

impl TruthTable {
    pub fn new(n: usize, bits: Vec<bool>) -> Self {
        assert!(n <= MAX_VARS);
        assert_eq!(bits.len(), 1 << n, "table must have exactly 2^n entries");
        TruthTable { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, assignment: u32) -> bool {
        self.bits[assignment as usize]
    }
}

/// Index set of a totally symmetric function: the function is 1 exactly on
/// assignments whose popcount lies in `indices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryIndexSet {
    n: usize,
    indices: Vec<usize>, // sorted
}

impl SymmetryIndexSet {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&k| k > n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        Ok(SymmetryIndexSet { n, indices: v })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, k: usize) -> bool {
        self.indices.binary_search(&k).is_ok()
    }
}

/// The totally symmetric function S^{indices}(vars): 1 exactly when the
/// input popcount is in the index set.
pub fn symmetric_function(indices: &SymmetryIndexSet, vars: &VarSet) -> Result<EsopFunction> {
    if indices.n != vars.len() {
        return Err(Error::ArityMismatch { expected: vars.len(), got: indices.n });
    }
    let n = vars.len();
    let bits = (0u32..1 << n)
        .map(|v| indices.contains(v.count_ones() as usize))
        .collect();
    Ok(EsopFunction::from_truth_table(vars, &TruthTable::new(n, bits)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> VarSet {
        VarSet::new(["a", "b", "c"]).unwrap()
    }

    fn example1() -> (VarSet, EsopFunction) {
        // f = a ⊕ āb ⊕ ac ⊕ c
        let vars = abc();
        let f = EsopFunction::parse("a ^ !a b ^ a c ^ c", &vars).unwrap();
        (vars, f)
    }

    #[test]
    fn example1_cofactors() {
        let (vars, f) = example1();
        let neg = f.cofactor("a", false).unwrap();
        let pos = f.cofactor("a", true).unwrap();
        assert!(neg.equivalent(&EsopFunction::parse("b ^ c", &vars).unwrap()));
        assert!(pos.equivalent(&EsopFunction::one(&vars)));
    }

    #[test]
    fn cofactor_of_zero() {
        let vars = abc();
        let z = EsopFunction::zero(&vars);
        assert!(z.cofactor("b", false).unwrap().is_zero());
        assert!(z.cofactor("b", true).unwrap().is_zero());
    }

    #[test]
    fn cofactor_unknown_variable() {
        let (_, f) = example1();
        assert_eq!(f.cofactor("q", false), Err(Error::UnknownVariable("q".into())));
    }

    #[test]
    fn shannon_recomposition_example1() {
        let (vars, f) = example1();
        let (neg, pos) = f.shannon_expand("a").unwrap();
        let a = vars.index_of("a").unwrap();
        let recomposed = neg.and_literal(a, false).xor(&pos.and_literal(a, true));
        assert!(recomposed.equivalent(&f));
        // the paper's printed form ā b ⊕ ā c ⊕ a
        let printed = EsopFunction::parse("!a b ^ !a c ^ a", &vars).unwrap();
        assert!(recomposed.equivalent(&printed));
    }

    #[test]
    fn shannon_on_independent_variable() {
        let vars = abc();
        let f = EsopFunction::parse("a ^ b", &vars).unwrap();
        let (neg, pos) = f.shannon_expand("c").unwrap();
        assert!(neg.equivalent(&f));
        assert!(pos.equivalent(&f));
    }

    #[test]
    fn positive_davio_example2() {
        // f = 1 ⊕ ad ⊕ bd ⊕ abd ⊕ ac ⊕ bc ⊕ cd ⊕ bcd, expanded with c.
        let vars = VarSet::new(["a", "b", "c", "d"]).unwrap();
        let f =
            EsopFunction::parse("1 ^ a d ^ b d ^ a b d ^ a c ^ b c ^ c d ^ b c d", &vars).unwrap();
        let (neg, diff) = f.positive_davio_expand("c").unwrap();
        // direct substitution of c = 0 (the paper's printed "ab" is a typo for "ad")
        assert!(neg.equivalent(&EsopFunction::parse("1 ^ a d ^ b d ^ a b d", &vars).unwrap()));
        assert!(diff.equivalent(&EsopFunction::parse("a ^ b ^ d ^ b d", &vars).unwrap()));
        // recomposition f = f_c̄ ⊕ c·diff
        let c = vars.index_of("c").unwrap();
        assert!(neg.xor(&diff.and_literal(c, true)).equivalent(&f));
    }

    #[test]
    fn positive_davio_of_single_variable() {
        let vars = abc();
        let f = EsopFunction::variable(&vars, "b").unwrap();
        let (neg, diff) = f.positive_davio_expand("b").unwrap();
        assert!(neg.is_zero());
        assert!(diff.equivalent(&EsopFunction::one(&vars)));
    }

    #[test]
    fn negative_davio_examples() {
        let vars = abc();
        // f = v → (1, 1); check 1 ⊕ v̄·1 = v
        let f = EsopFunction::variable(&vars, "a").unwrap();
        let (pos, diff) = f.negative_davio_expand("a").unwrap();
        assert!(pos.equivalent(&EsopFunction::one(&vars)));
        assert!(diff.equivalent(&EsopFunction::one(&vars)));
        let a = vars.index_of("a").unwrap();
        assert!(pos.xor(&diff.and_literal(a, false)).equivalent(&f));

        // Example 1: f_a = 1, diff = 1 ⊕ b ⊕ c
        let (_, f1) = example1();
        let (pos, diff) = f1.negative_davio_expand("a").unwrap();
        assert!(pos.equivalent(&EsopFunction::one(&vars)));
        assert!(diff.equivalent(&EsopFunction::parse("1 ^ b ^ c", &vars).unwrap()));
    }

    #[test]
    fn truth_table_s23() {
        // ab ⊕ bc ⊕ ac is 1 exactly on inputs with ≥ 2 ones
        let vars = abc();
        let f = EsopFunction::parse("a b ^ b c ^ a c", &vars).unwrap();
        let tt = f.to_truth_table();
        for v in 0u32..8 {
            assert_eq!(tt.get(v), v.count_ones() >= 2, "assignment {v:03b}");
        }
    }

    #[test]
    fn truth_table_constant_one() {
        let vars = VarSet::new(["a", "b"]).unwrap();
        let tt = EsopFunction::one(&vars).to_truth_table();
        assert!(tt.bits().iter().all(|&b| b));
    }

    #[test]
    fn anf_removes_negative_literals() {
        let vars = abc();
        let f = EsopFunction::parse("!a b", &vars).unwrap();
        let anf = f.to_anf();
        assert!(anf.equivalent(&f));
        assert!(anf.equivalent(&EsopFunction::parse("b ^ a b", &vars).unwrap()));
        for c in anf.cubes() {
            for v in 0..vars.len() {
                assert_ne!(c.literal(v), Literal::Negative);
            }
        }
    }

    #[test]
    fn anf_fixed_point_on_positive_cubes() {
        let vars = abc();
        let f = EsopFunction::parse("a b", &vars).unwrap();
        assert_eq!(f.to_anf(), f);
    }

    #[test]
    fn anf_of_example1() {
        let (_, f) = example1();
        assert!(f.to_anf().equivalent(&f));
    }

    #[test]
    fn from_truth_table_round_trip() {
        let (vars, f) = example1();
        let g = EsopFunction::from_truth_table(&vars, &f.to_truth_table());
        assert!(g.equivalent(&f));
    }

    #[test]
    fn symmetry_of_s23_and_parity() {
        let vars = abc();
        let f = EsopFunction::parse("a b ^ b c ^ a c", &vars).unwrap();
        assert_eq!(f.symmetry_indices().unwrap().indices(), &[2, 3]);
        // parity is 0 on two-bit inputs, so its index set is {1, 3}
        let g = EsopFunction::parse("a ^ b ^ c", &vars).unwrap();
        assert_eq!(g.symmetry_indices().unwrap().indices(), &[1, 3]);
    }

    #[test]
    fn asymmetric_function_has_no_indices() {
        let vars = abc();
        let f = EsopFunction::parse("!a b", &vars).unwrap();
        assert!(f.symmetry_indices().is_none());
    }

    #[test]
    fn symmetric_function_s1() {
        // S¹(a,b,c) = āb̄c + āb c̄ + a b̄ c̄: 1 exactly on popcount 1
        let vars = abc();
        let s1 = symmetric_function(&SymmetryIndexSet::new(3, [1]).unwrap(), &vars).unwrap();
        let tt = s1.to_truth_table();
        for v in 0u32..8 {
            assert_eq!(tt.get(v), v.count_ones() == 1);
        }
        assert_eq!(s1.symmetry_indices().unwrap().indices(), &[1]);
    }

    #[test]
    fn symmetric_function_empty_and_full() {
        let vars = abc();
        let zero = symmetric_function(&SymmetryIndexSet::new(3, []).unwrap(), &vars).unwrap();
        assert!(zero.is_zero());
        let one =
            symmetric_function(&SymmetryIndexSet::new(3, [0, 1, 2, 3]).unwrap(), &vars).unwrap();
        assert!(one.equivalent(&EsopFunction::one(&vars)));
    }

    #[test]
    fn symmetry_index_out_of_range() {
        assert_eq!(
            SymmetryIndexSet::new(3, [4]),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
    }

    #[test]
    fn xor_cancellation_keeps_cube_set_normalized() {
        let vars = abc();
        let mut f = EsopFunction::parse("a b ^ c", &vars).unwrap();
        let before = f.clone();
        let cube = *EsopFunction::parse("a c", &vars).unwrap().cubes().first().unwrap();
        f.toggle(cube);
        f.toggle(cube);
        assert_eq!(f, before);
    }

    #[test]
    fn display_round_trips_through_parser() {
        let vars = abc();
        let f = EsopFunction::parse("1 ^ !a b ^ b !c", &vars).unwrap();
        let g = EsopFunction::parse(&f.to_string(), &vars).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn var_set_rejects_duplicates_and_overflow() {
        assert_eq!(VarSet::new(["a", "a"]), Err(Error::BadVariableSet));
        assert!(VarSet::new((0..17).map(|i| format!("v{i}"))).is_err());
    }
}
