//! State-sum evaluation of the framed and unframed colored Jones polynomial.
//!
//! The R-matrix model sums over minus-convention states using the incoming
//! left and right colors at every crossing. The arc-graph model sums over
//! plus-convention states using under-exit and over-entry colors and the
//! excess and rotation exponents. Each model has its own enumeration.

use std::fmt;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::diagram::Diagram;
use crate::exec::{sum_laurent, ExecMode};
use crate::qalgebra::{pochhammer, pochhammer_signed, qbinom, qbinom_signed, qint, LaurentQ, QAlgebraError};
use crate::states::{self, Convention, FlowBijection, Potential, State, StateError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelChoice {
    RMatrix,
    ArcGraph,
    Both,
}

impl fmt::Display for ModelChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelChoice::RMatrix => "rmatrix",
            ModelChoice::ArcGraph => "gl",
            ModelChoice::Both => "both",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatesumError {
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Algebra(#[from] QAlgebraError),
    #[error("color must be at least 1, got {0}")]
    BadColor(i64),
    #[error("models disagree on {braid} at n={n}: rmatrix {rmatrix} vs arc-graph {arcgraph}; {witness}")]
    ModelDisagreement { braid: String, n: i64, rmatrix: String, arcgraph: String, witness: String },
    #[error("exponents of {value} are not of a single class")]
    MixedParity { value: String },
    #[error("parity rule violated for {braid} at n={n}: expected {expected:?}, found {found:?}")]
    ParityViolation { braid: String, n: i64, expected: ExponentClass, found: ExponentClass },
}

/// Quantum symbols needed by the evaluators at a fixed color, precomputed
/// over `a` in `[-span, span]` and `b` in `[0, n+1]`.
pub struct QTables {
    n: i64,
    span: i64,
    qbinom: Vec<LaurentQ>,
    poch: Vec<LaurentQ>,
    qbinom_pos: Vec<LaurentQ>,
    qbinom_neg: Vec<LaurentQ>,
    poch_pos: Vec<LaurentQ>,
    poch_neg: Vec<LaurentQ>,
}

impl QTables {
    pub fn new(n: i64) -> Result<Self, QAlgebraError> {
        let span = 2 * n + 2;
        let width = (n + 2) as usize;
        let mut t = QTables {
            n,
            span,
            qbinom: Vec::new(),
            poch: Vec::new(),
            qbinom_pos: Vec::new(),
            qbinom_neg: Vec::new(),
            poch_pos: Vec::new(),
            poch_neg: Vec::new(),
        };
        for a in -span..=span {
            for b in 0..width as i64 {
                t.qbinom.push(qbinom(a, b)?);
                t.poch.push(pochhammer(a, b));
                t.qbinom_pos.push(qbinom_signed(a, b, 1)?);
                t.qbinom_neg.push(qbinom_signed(a, b, -1)?);
                t.poch_pos.push(pochhammer_signed(a, b, 1));
                t.poch_neg.push(pochhammer_signed(a, b, -1));
            }
        }
        Ok(t)
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    fn slot(&self, a: i64, b: i64) -> Option<usize> {
        let width = self.n + 2;
        ((-self.span..=self.span).contains(&a) && (0..width).contains(&b))
            .then(|| ((a + self.span) * width + b) as usize)
    }

    fn get(&self, table: &[LaurentQ], a: i64, b: i64, fallback: impl FnOnce() -> LaurentQ) -> LaurentQ {
        if b < 0 {
            return LaurentQ::zero();
        }
        match self.slot(a, b) {
            Some(i) => table[i].clone(),
            None => fallback(),
        }
    }

    pub fn qbinom(&self, a: i64, b: i64) -> LaurentQ {
        self.get(&self.qbinom, a, b, || qbinom(a, b).expect("quantum binomials divide exactly"))
    }

    pub fn pochhammer(&self, a: i64, b: i64) -> LaurentQ {
        self.get(&self.poch, a, b, || pochhammer(a, b))
    }

    pub fn qbinom_signed(&self, a: i64, b: i64, eps: i8) -> LaurentQ {
        let table = if eps > 0 { &self.qbinom_pos } else { &self.qbinom_neg };
        self.get(table, a, b, || qbinom_signed(a, b, eps).expect("Gaussian binomials divide exactly"))
    }

    pub fn pochhammer_signed(&self, a: i64, b: i64, eps: i8) -> LaurentQ {
        let table = if eps > 0 { &self.poch_pos } else { &self.poch_neg };
        self.get(table, a, b, || pochhammer_signed(a, b, eps))
    }
}

/// R-matrix summand of a minus-convention state, closure prefactor included.
pub fn rmatrix_contribution(d: &Diagram, s: &State, n: i64) -> LaurentQ {
    rmatrix_contribution_with(&QTables::new(n).expect("tables"), d, s)
}

pub fn rmatrix_contribution_with(tables: &QTables, d: &Diagram, s: &State) -> LaurentQ {
    let n = tables.n();
    let colors = &s.colors;
    // quarter exponent
    let mut exp: i64 = colors.closure_colors().iter().map(|&b| 2 * (-n + 2 * b)).sum();
    let mut negate = false;
    let mut poly = LaurentQ::one();
    for x in d.crossings() {
        let i = colors.arc_colors[x.in_left];
        let j = colors.arc_colors[x.in_right];
        let r = s.potential.jumps[x.index];
        if x.sign > 0 {
            negate ^= r % 2 != 0;
            exp -= (n - 2 * i) * (n - 2 * j) + r * (r - 1);
            poly = &poly * &(&tables.qbinom(j + r, r) * &tables.pochhammer(n + r - i, r));
        } else {
            exp += (n - 2 * i - 2 * r) * (n - 2 * j + 2 * r) + r * (r - 1);
            poly = &poly * &(&tables.qbinom(i + r, r) * &tables.pochhammer(n + r - j, r));
        }
        if poly.is_zero() {
            return poly;
        }
    }
    poly.shift_in_place(exp);
    if negate {
        -poly
    } else {
        poly
    }
}

/// Arc-graph summand of a plus-convention state, without the global
/// `t^(delta')` prefactor.
pub fn arcgraph_contribution(d: &Diagram, s: &State, n: i64) -> LaurentQ {
    arcgraph_contribution_with(&QTables::new(n).expect("tables"), d, s)
}

pub fn arcgraph_contribution_with(tables: &QTables, d: &Diagram, s: &State) -> LaurentQ {
    let n = tables.n();
    let colors = &s.colors;
    let rot: i64 = colors.closure_colors().iter().sum();
    let mut exc = 0i64;
    let mut vertex_exp = 0i64;
    let mut poly = LaurentQ::one();
    for x in d.crossings() {
        let v = x.index;
        let eps = x.sign;
        let (i, tj, j) = (colors.i[v], colors.tilde_j[v], s.potential.jumps[v]);
        exc += eps as i64 * i * tj;
        vertex_exp += n * eps as i64 * i;
        poly = &poly * &(&tables.qbinom_signed(i + j, i, -eps) * &tables.pochhammer_signed(n - tj, j, eps));
        if poly.is_zero() {
            return poly;
        }
    }
    poly.shift_in_place(4 * (vertex_exp - exc - rot));
    poly
}

/// Quarter exponent of the arc-graph prefactor: `-n^2 w/4 + n(s-1)/2`.
pub fn arcgraph_prefactor_quarter(d: &Diagram, n: i64) -> i64 {
    -n * n * d.writhe() + 2 * n * (d.strands() as i64 - 1)
}

/// Quarter exponent of the framing correction `w(n^2/4 + n/2)`.
pub fn framing_quarter(writhe: i64, n: i64) -> i64 {
    writhe * (n * n + 2 * n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub framed: LaurentQ,
    /// States summed per model (after free strands are factored out).
    pub rmatrix_states: Option<usize>,
    pub arcgraph_states: Option<usize>,
}

fn sum_rmatrix(d: &Diagram, tables: &QTables, mode: ExecMode) -> Result<(LaurentQ, usize), StatesumError> {
    let st = states::enumerate(d, tables.n(), Convention::Minus, mode)?;
    let total = sum_laurent(&st, mode, |s| rmatrix_contribution_with(tables, d, s));
    Ok((total, st.len()))
}

fn sum_arcgraph(d: &Diagram, tables: &QTables, mode: ExecMode) -> Result<(LaurentQ, usize), StatesumError> {
    let st = states::enumerate(d, tables.n(), Convention::Plus, mode)?;
    let mut total = sum_laurent(&st, mode, |s| arcgraph_contribution_with(tables, d, s));
    total.shift_in_place(arcgraph_prefactor_quarter(d, tables.n()));
    Ok((total, st.len()))
}

/// Arc-graph summand of a plus state on `d` against the R-matrix summand of
/// the mirrored minus state, after `t -> t^(-1)`. Both include their
/// prefactors, so they agree state by state.
pub fn paired_contributions(
    tables: &QTables,
    bij: &FlowBijection,
    d: &Diagram,
    s_plus: &State,
) -> Result<(LaurentQ, LaurentQ), StatesumError> {
    let ag = arcgraph_contribution_with(tables, d, s_plus).shift(arcgraph_prefactor_quarter(d, tables.n()));
    let s_minus = bij.forward(s_plus)?;
    let rm = rmatrix_contribution_with(tables, bij.mirror(), &s_minus).substitute_inverse();
    Ok((ag, rm))
}

/// Smallest plus state (by bases, then jumps) whose paired contributions
/// differ, rendered for a failure report.
pub fn first_disagreeing_state(d: &Diagram, n: i64) -> Result<Option<String>, StatesumError> {
    let tables = QTables::new(n)?;
    let bij = FlowBijection::new(d);
    for s in states::enumerate(d, n, Convention::Plus, ExecMode::Sequential)? {
        let (ag, rm) = paired_contributions(&tables, &bij, d, &s)?;
        if ag != rm {
            return Ok(Some(format!(
                "state bases={:?} jumps={:?} i={:?}: arc-graph {ag} vs mirrored rmatrix {rm}",
                s.potential.bases, s.potential.jumps, s.colors.i
            )));
        }
    }
    Ok(None)
}

fn evaluate_diagram(d: &Diagram, n: i64, model: ModelChoice, mode: ExecMode) -> Result<Evaluation, StatesumError> {
    let tables = QTables::new(n)?;
    match model {
        ModelChoice::RMatrix => {
            let (v, k) = sum_rmatrix(d, &tables, mode)?;
            Ok(Evaluation { framed: v, rmatrix_states: Some(k), arcgraph_states: None })
        }
        ModelChoice::ArcGraph => {
            let (v, k) = sum_arcgraph(d, &tables, mode)?;
            Ok(Evaluation { framed: v, rmatrix_states: None, arcgraph_states: Some(k) })
        }
        ModelChoice::Both => {
            let (r, kr) = sum_rmatrix(d, &tables, mode)?;
            let (g, kg) = sum_arcgraph(d, &tables, mode)?;
            if r != g {
                let witness = first_disagreeing_state(d, n)?
                    .unwrap_or_else(|| "every paired state agrees; totals differ".to_string());
                return Err(StatesumError::ModelDisagreement {
                    braid: d.braid().to_string(),
                    n,
                    rmatrix: r.to_string(),
                    arcgraph: g.to_string(),
                    witness,
                });
            }
            Ok(Evaluation { framed: r, rmatrix_states: Some(kr), arcgraph_states: Some(kg) })
        }
    }
}

/// Framed invariant with free strands summed as explicit state variables.
pub fn evaluate_direct(b: &BraidWord, n: i64, model: ModelChoice, mode: ExecMode) -> Result<Evaluation, StatesumError> {
    if n < 1 {
        return Err(StatesumError::BadColor(n));
    }
    evaluate_diagram(&Diagram::build(b), n, model, mode)
}

/// Framed invariant; each free strand beyond the first component
/// contributes the closed form `[n+1]`.
pub fn evaluate(b: &BraidWord, n: i64, model: ModelChoice, mode: ExecMode) -> Result<Evaluation, StatesumError> {
    if n < 1 {
        return Err(StatesumError::BadColor(n));
    }
    if b.crossing_count() == 0 {
        return Ok(Evaluation { framed: qint(n + 1).pow(b.strands() as u32 - 1), rmatrix_states: None, arcgraph_states: None });
    }
    let (core, k) = b.without_free_strands();
    let mut ev = evaluate_diagram(&Diagram::build(&core), n, model, mode)?;
    if k > 0 {
        ev.framed = &ev.framed * &qint(n + 1).pow(k as u32);
    }
    Ok(ev)
}

pub fn colored_jones_framed(b: &BraidWord, n: i64, model: ModelChoice) -> Result<LaurentQ, StatesumError> {
    Ok(evaluate(b, n, model, ExecMode::default())?.framed)
}

pub fn colored_jones_unframed(b: &BraidWord, n: i64, model: ModelChoice) -> Result<LaurentQ, StatesumError> {
    Ok(unframe(&colored_jones_framed(b, n, model)?, b.writhe(), n))
}

/// `t^(w(n^2/4 + n/2)) * framed`.
pub fn unframe(framed: &LaurentQ, writhe: i64, n: i64) -> LaurentQ {
    framed.shift(framing_quarter(writhe, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentClass {
    Integer,
    HalfInteger,
}

/// Class of all exponents of `p`; `None` when mixed or when a quarter
/// exponent appears.
pub fn exponent_class(p: &LaurentQ) -> Option<ExponentClass> {
    let mut class = None;
    for (k, _) in p.terms() {
        let c = match k.rem_euclid(4) {
            0 => ExponentClass::Integer,
            2 => ExponentClass::HalfInteger,
            _ => return None,
        };
        if class.is_some_and(|x| x != c) {
            return None;
        }
        class = Some(c);
    }
    class
}

/// Integer exponents iff `n` is even or the component count is odd.
pub fn expected_exponent_class(components: usize, n: i64) -> ExponentClass {
    if n % 2 == 0 || components % 2 == 1 {
        ExponentClass::Integer
    } else {
        ExponentClass::HalfInteger
    }
}

/// Classifies the unframed exponents and checks them against the parity
/// rule, predicted here from `s + w` which has the parity of the component
/// count.
pub fn parity_halfinteger_check(b: &BraidWord, n: i64) -> Result<ExponentClass, StatesumError> {
    let value = colored_jones_unframed(b, n, ModelChoice::RMatrix)?;
    let found = exponent_class(&value).ok_or_else(|| StatesumError::MixedParity { value: value.to_string() })?;
    let odd_components = (b.strands() as i64 + b.writhe()).rem_euclid(2) == 1;
    let expected = expected_exponent_class(if odd_components { 1 } else { 2 }, n);
    if found != expected {
        return Err(StatesumError::ParityViolation { braid: b.to_string(), n, expected, found });
    }
    Ok(found)
}

/// One state's summand under a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contribution {
    pub state: Potential,
    pub value: LaurentQ,
}

/// Per-state summands in state order; arc-graph values include the global
/// prefactor so that they add up to the framed invariant.
pub fn contributions(d: &Diagram, n: i64, model: ModelChoice) -> Result<Vec<Contribution>, StatesumError> {
    let tables = QTables::new(n)?;
    let (conv, pre) = match model {
        ModelChoice::ArcGraph => (Convention::Plus, arcgraph_prefactor_quarter(d, n)),
        _ => (Convention::Minus, 0),
    };
    let st = states::enumerate(d, n, conv, ExecMode::Sequential)?;
    Ok(st
        .into_iter()
        .map(|s| {
            let value = match conv {
                Convention::Plus => arcgraph_contribution_with(&tables, d, &s).shift(pre),
                Convention::Minus => rmatrix_contribution_with(&tables, d, &s),
            };
            Contribution { state: s.potential, value }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn single_crossing_anchors() {
        for n in 1..=4 {
            let q = n * n + 2 * n;
            for model in [ModelChoice::RMatrix, ModelChoice::ArcGraph, ModelChoice::Both] {
                assert_eq!(colored_jones_framed(&b("1"), n, model).unwrap(), LaurentQ::t_quarter(-q));
                assert_eq!(colored_jones_framed(&b("-1"), n, model).unwrap(), LaurentQ::t_quarter(q));
                assert_eq!(colored_jones_unframed(&b("1"), n, model).unwrap(), LaurentQ::one());
            }
        }
    }

    #[test]
    fn single_state_values() {
        let d = Diagram::build(&b("1"));
        let st = states::enumerate(&d, 2, Convention::Minus, ExecMode::Sequential).unwrap();
        assert_eq!(st.len(), 1);
        assert_eq!(rmatrix_contribution(&d, &st[0], 2), LaurentQ::t_quarter(-8));
        let zero = states::State {
            potential: Potential::zero(&d, Convention::Plus),
            colors: states::derive_colors(&d, &Potential::zero(&d, Convention::Plus)).unwrap(),
        };
        assert_eq!(arcgraph_contribution(&d, &zero, 3), LaurentQ::one());
    }

    #[test]
    fn empty_braids() {
        let e1 = BraidWord::new(1, vec![]).unwrap();
        assert_eq!(colored_jones_framed(&e1, 3, ModelChoice::Both).unwrap(), LaurentQ::one());
        let e3 = BraidWord::new(3, vec![]).unwrap();
        assert_eq!(colored_jones_framed(&e3, 2, ModelChoice::Both).unwrap(), qint(3).pow(2));
        let direct = evaluate_direct(&e3, 2, ModelChoice::Both, ExecMode::Sequential).unwrap();
        assert_eq!(direct.framed, qint(3).pow(2));
    }

    #[test]
    fn free_strand_factor_matches_direct_sum() {
        let w = BraidWord::new(4, vec![2, 2, 2]).unwrap();
        for n in 1..=2 {
            let fast = evaluate(&w, n, ModelChoice::Both, ExecMode::Sequential).unwrap();
            let slow = evaluate_direct(&w, n, ModelChoice::Both, ExecMode::Sequential).unwrap();
            assert_eq!(fast.framed, slow.framed);
        }
    }

    #[test]
    fn exponent_classes() {
        assert_eq!(exponent_class(&LaurentQ::t_quarter(4)), Some(ExponentClass::Integer));
        assert_eq!(exponent_class(&LaurentQ::t_quarter(-2)), Some(ExponentClass::HalfInteger));
        assert_eq!(exponent_class(&(LaurentQ::t_quarter(2) + LaurentQ::one())), None);
        assert_eq!(exponent_class(&LaurentQ::t_quarter(1)), None);
    }

    #[test]
    fn bad_color_rejected() {
        assert_eq!(colored_jones_framed(&b("1"), 0, ModelChoice::ArcGraph), Err(StatesumError::BadColor(0)));
    }
}
