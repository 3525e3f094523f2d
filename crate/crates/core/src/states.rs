//! Potentials, their derived colors, and enumeration of contributing states.
//!
//! A potential assigns a jump `j_v` to every crossing and a base color to
//! every component after the first. Under the plus convention an over strand
//! gains `j_v` at crossing `v` and the under strand loses it; the minus
//! convention reverses both. The anchor part arc (bottom of position 1) is
//! colored 0.
//!
//! Two routes compute colors from a potential:
//! - [`derive_colors`] solves the flow recursion along sigma-cycles using
//!   tau-preimage orderings.
//! - [`color_forms`] walks each component and records every part-arc color as
//!   an affine form; the enumerator prunes on these forms.

use thiserror::Error;

use crate::diagram::{ArcId, Diagram, Passage};
use crate::exec::ExecMode;
use crate::search::{BoxProblem, Constraint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    Plus,
    Minus,
}

impl Convention {
    /// Color change on an over passage per unit jump.
    pub fn sign(self) -> i64 {
        match self {
            Convention::Plus => 1,
            Convention::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Convention::Plus => Convention::Minus,
            Convention::Minus => Convention::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateError {
    #[error("potential has {got} {what}, diagram needs {want}")]
    WrongShape { what: &'static str, got: usize, want: usize },
    #[error("potential violates the cycle relation of component {component}")]
    InconsistentPotential { component: usize },
    #[error("cycle relations admit no unit pivot; cannot eliminate")]
    NonUnimodular,
}

/// Ordered by bases, then jumps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Potential {
    /// Base colors of components 1.. (component 0 is anchored at 0).
    pub bases: Vec<i64>,
    pub jumps: Vec<i64>,
    pub convention: Convention,
}

impl Potential {
    pub fn zero(d: &Diagram, convention: Convention) -> Self {
        Potential {
            bases: vec![0; d.component_count() - 1],
            jumps: vec![0; d.crossing_count()],
            convention,
        }
    }

    /// Base color of component `ell`.
    pub fn base(&self, ell: usize) -> i64 {
        if ell == 0 {
            0
        } else {
            self.bases[ell - 1]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateColors {
    /// Under-exit color per crossing.
    pub i: Vec<i64>,
    /// Over-entry color per crossing.
    pub tilde_j: Vec<i64>,
    /// Color per part arc.
    pub arc_colors: Vec<i64>,
    /// Color at the top of every position 1..=s (index p-1).
    pub closure: Vec<i64>,
}

impl StateColors {
    /// Closure colors of positions 2..=s.
    pub fn closure_colors(&self) -> &[i64] {
        &self.closure[1..]
    }

    pub fn in_range(&self, n: i64) -> bool {
        self.arc_colors.iter().all(|&c| (0..=n).contains(&c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    pub potential: Potential,
    pub colors: StateColors,
}

fn check_shape(d: &Diagram, p: &Potential) -> Result<(), StateError> {
    let want_b = d.component_count() - 1;
    if p.bases.len() != want_b {
        return Err(StateError::WrongShape { what: "bases", got: p.bases.len(), want: want_b });
    }
    if p.jumps.len() != d.crossing_count() {
        return Err(StateError::WrongShape { what: "jumps", got: p.jumps.len(), want: d.crossing_count() });
    }
    Ok(())
}

/// Colors from the flow recursion `i_w = i_v + s*sum(j over arc w) - s*j_w`
/// along each sigma-cycle, with `w = sigma(v)`.
pub fn derive_colors(d: &Diagram, p: &Potential) -> Result<StateColors, StateError> {
    check_shape(d, p)?;
    let s = p.convention.sign();
    let nc = d.crossing_count();
    let sigma = d.sigma();
    let sigma_inv = d.sigma_inv();
    let arc_sum = |arc: ArcId, upto: usize| -> i64 { d.tau_preimage(arc)[..upto].iter().map(|&w| p.jumps[w]).sum() };
    let arc_total = |arc: ArcId| -> i64 { arc_sum(arc, d.tau_preimage(arc).len()) };

    let mut i = vec![0i64; nc];
    let mut start = vec![0i64; nc + d.circles().len()];
    for (ell, comp) in d.components().iter().enumerate() {
        if comp.is_circle() {
            start[d.arc_index(ArcId::Circle(ell))] = p.base(ell);
            continue;
        }
        let (v0, i0) = if ell == 0 {
            let anchor = d.part_arcs()[d.anchor_arc()];
            let ArcId::Crossing(u) = anchor.owner else { unreachable!("component 0 has vertices") };
            (sigma_inv[u], -s * arc_sum(anchor.owner, anchor.preceding))
        } else {
            (comp.base_vertex.unwrap(), p.base(ell))
        };
        i[v0] = i0;
        let mut v = v0;
        loop {
            let w = sigma[v];
            let iw = i[v] + s * arc_total(ArcId::Crossing(w)) - s * p.jumps[w];
            if w == v0 {
                if iw != i0 {
                    return Err(StateError::InconsistentPotential { component: ell });
                }
                break;
            }
            i[w] = iw;
            v = w;
        }
    }
    for u in 0..nc {
        start[u] = i[sigma_inv[u]];
    }
    let tau = d.tau();
    let tilde_j: Vec<i64> = (0..nc)
        .map(|v| {
            let arc = tau[v];
            let pos = d.tau_preimage(arc).iter().position(|&w| w == v).expect("v lies on tau(v)");
            start[d.arc_index(arc)] + s * arc_sum(arc, pos)
        })
        .collect();
    let arc_colors: Vec<i64> = d
        .part_arcs()
        .iter()
        .map(|pa| start[d.arc_index(pa.owner)] + s * arc_sum(pa.owner, pa.preceding))
        .collect();
    let closure = d.closure_arcs().iter().map(|&a| arc_colors[a]).collect();
    Ok(StateColors { i, tilde_j, arc_colors, closure })
}

/// Sparse integer linear form over the potential variables: bases first
/// (`ell - 1` for component `ell`), then jumps (`mu - 1 + c`).
pub type Form = Vec<(usize, i64)>;

fn add_term(f: &mut Form, var: usize, coeff: i64) {
    match f.iter_mut().find(|(v, _)| *v == var) {
        Some((_, a)) => *a += coeff,
        None => f.push((var, coeff)),
    }
    f.retain(|(_, a)| *a != 0);
}

#[derive(Debug, Clone)]
pub struct ColorForms {
    pub nvars: usize,
    /// Color form per part arc.
    pub arcs: Vec<Form>,
    /// Net change around each component; zero exactly on its cycle relation.
    pub residuals: Vec<Form>,
}

impl ColorForms {
    pub fn eval(form: &Form, p: &Potential) -> i64 {
        let nb = p.bases.len();
        form.iter()
            .map(|&(v, a)| a * if v < nb { p.bases[v] } else { p.jumps[v - nb] })
            .sum()
    }
}

/// Part-arc colors as linear forms, by walking every component once.
pub fn color_forms(d: &Diagram, convention: Convention) -> ColorForms {
    let s = convention.sign();
    let nb = d.component_count() - 1;
    let n_arcs = d.part_arcs().len();
    let mut arcs = vec![Form::new(); n_arcs];
    let mut residuals = Vec::new();
    for (ell, comp) in d.components().iter().enumerate() {
        let mut cur = Form::new();
        if ell > 0 {
            add_term(&mut cur, ell - 1, 1);
        }
        for st in &comp.walk {
            arcs[st.arc] = cur.clone();
            match st.end {
                Some((c, Passage::Over)) => add_term(&mut cur, nb + c, s),
                Some((c, Passage::Under)) => add_term(&mut cur, nb + c, -s),
                None => {}
            }
        }
        if ell > 0 {
            add_term(&mut cur, ell - 1, -1);
        }
        cur.sort();
        residuals.push(cur);
    }
    ColorForms { nvars: nb + d.crossing_count(), arcs, residuals }
}

/// Cycle relations solved for one jump per independent relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub free_jumps: Vec<usize>,
    /// `(c, form)` meaning `j_c = sum coeff * j_w` over free jumps `w`.
    pub dependent: Vec<(usize, Vec<(usize, i64)>)>,
}

/// Gauss-Jordan elimination with unit pivots. Rows of components 1.. are
/// processed first, so the redundant row is the first component's.
pub fn eliminate(d: &Diagram) -> Result<Elimination, StateError> {
    let nc = d.crossing_count();
    let mut rels = d.cycle_relations();
    rels.sort_by_key(|r| (r.component == 0, r.component));
    let mut pivots: Vec<(usize, Vec<i64>)> = Vec::new();
    for rel in rels {
        let mut row = vec![0i64; nc];
        for (c, a) in rel.coeffs {
            row[c] += a;
        }
        for (pc, prow) in &pivots {
            let f = row[*pc];
            if f != 0 {
                for k in 0..nc {
                    row[k] -= f * prow[k];
                }
            }
        }
        if row.iter().all(|&a| a == 0) {
            continue;
        }
        let pc = (0..nc).rev().find(|&k| row[k].abs() == 1).ok_or(StateError::NonUnimodular)?;
        if row[pc] < 0 {
            row.iter_mut().for_each(|a| *a = -*a);
        }
        for (_, prow) in pivots.iter_mut() {
            let f = prow[pc];
            if f != 0 {
                for k in 0..nc {
                    prow[k] -= f * row[k];
                }
            }
        }
        pivots.push((pc, row));
    }
    let dep: Vec<usize> = pivots.iter().map(|(c, _)| *c).collect();
    let free_jumps: Vec<usize> = (0..nc).filter(|c| !dep.contains(c)).collect();
    let mut dependent: Vec<(usize, Vec<(usize, i64)>)> = pivots
        .into_iter()
        .map(|(pc, row)| {
            let form = (0..nc).filter(|&k| k != pc && row[k] != 0).map(|k| (k, -row[k])).collect();
            (pc, form)
        })
        .collect();
    dependent.sort();
    Ok(Elimination { free_jumps, dependent })
}

/// Search variables: bases, then free jumps in braid order.
struct Layout {
    nb: usize,
    elim: Elimination,
    /// Box variable of each free jump.
    box_of_jump: Vec<Option<usize>>,
}

impl Layout {
    fn new(d: &Diagram) -> Result<Layout, StateError> {
        let nb = d.component_count() - 1;
        let elim = eliminate(d)?;
        let mut box_of_jump = vec![None; d.crossing_count()];
        for (k, &c) in elim.free_jumps.iter().enumerate() {
            box_of_jump[c] = Some(nb + k);
        }
        Ok(Layout { nb, elim, box_of_jump })
    }

    fn nvars(&self) -> usize {
        self.nb + self.elim.free_jumps.len()
    }

    /// A jump as a form over box variables.
    fn jump_form(&self, c: usize) -> Vec<(usize, i64)> {
        match self.box_of_jump[c] {
            Some(b) => vec![(b, 1)],
            None => {
                let (_, f) = self.elim.dependent.iter().find(|(x, _)| *x == c).expect("dependent jump");
                f.iter().map(|&(w, a)| (self.box_of_jump[w].unwrap(), a)).collect()
            }
        }
    }

    fn substitute(&self, form: &Form) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for &(v, a) in form {
            if v < self.nb {
                out.push((v, a));
            } else {
                out.extend(self.jump_form(v - self.nb).into_iter().map(|(b, x)| (b, a * x)));
            }
        }
        out
    }

    fn potential(&self, x: &[i64], nc: usize, convention: Convention) -> Potential {
        let jumps = (0..nc)
            .map(|c| self.jump_form(c).iter().map(|&(b, a)| a * x[b]).sum())
            .collect();
        Potential { bases: x[..self.nb].to_vec(), jumps, convention }
    }

    fn dependent_constraints(&self, lo: i64, hi: i64) -> Vec<Constraint> {
        self.elim
            .dependent
            .iter()
            .map(|(c, _)| Constraint { terms: self.jump_form(*c), constant: 0, lo, hi })
            .collect()
    }
}

/// All n-contributing states, sorted by (bases, jumps).
pub fn enumerate(d: &Diagram, n: i64, convention: Convention, mode: ExecMode) -> Result<Vec<State>, StateError> {
    let potentials = enumerate_potentials(d, n, convention, mode)?;
    potentials
        .into_iter()
        .map(|p| {
            let colors = derive_colors(d, &p)?;
            Ok(State { potential: p, colors })
        })
        .collect()
}

/// Potentials of the n-contributing states, sorted by (bases, jumps).
pub fn enumerate_potentials(
    d: &Diagram,
    n: i64,
    convention: Convention,
    mode: ExecMode,
) -> Result<Vec<Potential>, StateError> {
    let layout = Layout::new(d)?;
    let forms = color_forms(d, convention);
    let mut constraints = layout.dependent_constraints(0, n);
    for f in &forms.arcs {
        constraints.push(Constraint { terms: layout.substitute(f), constant: 0, lo: 0, hi: n });
    }
    let nv = layout.nvars();
    let problem = BoxProblem { lo: vec![0; nv], hi: vec![n; nv], constraints };
    let nc = d.crossing_count();
    let mut out: Vec<Potential> =
        problem.solve(mode).iter().map(|x| layout.potential(x, nc, convention)).collect();
    out.sort();
    Ok(out)
}

/// Number of n-contributing states.
pub fn count_states(d: &Diagram, n: i64, convention: Convention, mode: ExecMode) -> Result<usize, StateError> {
    Ok(enumerate_potentials(d, n, convention, mode)?.len())
}

/// Brute force over the full box `[0,n]^(bases, jumps)`, filtered through
/// [`derive_colors`]. Exponential; for testing only.
pub fn enumerate_naive(d: &Diagram, n: i64, convention: Convention) -> Vec<State> {
    let nb = d.component_count() - 1;
    let nc = d.crossing_count();
    let all = BoxProblem { lo: vec![0; nb + nc], hi: vec![n; nb + nc], constraints: Vec::new() }.solve_naive();
    let mut out: Vec<State> = all
        .into_iter()
        .filter_map(|x| {
            let p = Potential { bases: x[..nb].to_vec(), jumps: x[nb..].to_vec(), convention };
            let colors = derive_colors(d, &p).ok()?;
            colors.in_range(n).then_some(State { potential: p, colors })
        })
        .collect();
    out.sort_by(|a, b| a.potential.cmp(&b.potential));
    out
}

/// Integer potentials (plus convention) with every base and jump in
/// `[-bound, bound]` satisfying the cycle relations.
pub fn enumerate_z_potentials(d: &Diagram, bound: i64, mode: ExecMode) -> Result<Vec<Potential>, StateError> {
    let layout = Layout::new(d)?;
    let nv = layout.nvars();
    let problem = BoxProblem {
        lo: vec![-bound; nv],
        hi: vec![bound; nv],
        constraints: layout.dependent_constraints(-bound, bound),
    };
    let nc = d.crossing_count();
    let mut out: Vec<Potential> =
        problem.solve(mode).iter().map(|x| layout.potential(x, nc, Convention::Plus)).collect();
    out.sort();
    Ok(out)
}

/// Correspondence between plus states of a diagram and minus states of its
/// mirror image. Reflection swaps over and under at every crossing, so a
/// plus coloring of a diagram is a minus coloring of its mirror with the
/// same jumps and the same color on every part arc. Base colors are re-read
/// at the target's reference arcs, which sit elsewhere in the mirror.
#[derive(Debug, Clone)]
pub struct FlowBijection {
    source: Diagram,
    mirror: Diagram,
}

impl FlowBijection {
    pub fn new(d: &Diagram) -> Self {
        FlowBijection { source: d.clone(), mirror: Diagram::build(&d.braid().reflect()) }
    }

    pub fn mirror(&self) -> &Diagram {
        &self.mirror
    }

    /// Plus state on the source to minus state on the mirror.
    pub fn forward(&self, s: &State) -> Result<State, StateError> {
        Self::carry(&self.mirror, s, Convention::Minus)
    }

    /// Minus state on the mirror back to a plus state on the source.
    pub fn backward(&self, s: &State) -> Result<State, StateError> {
        Self::carry(&self.source, s, Convention::Plus)
    }

    fn carry(target: &Diagram, s: &State, convention: Convention) -> Result<State, StateError> {
        let bases = target.components()[1..].iter().map(|c| s.colors.arc_colors[c.reference_arc]).collect();
        let potential = Potential { bases, jumps: s.potential.jumps.clone(), convention };
        let colors = derive_colors(target, &potential)?;
        debug_assert_eq!(colors.arc_colors, s.colors.arc_colors);
        Ok(State { potential, colors })
    }
}

/// One-shot form of [`FlowBijection::forward`].
pub fn flow_bijection(d: &Diagram, s_plus: &State) -> Result<State, StateError> {
    FlowBijection::new(d).forward(s_plus)
}
