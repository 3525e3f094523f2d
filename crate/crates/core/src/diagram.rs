//! Combinatorial diagram of a braid closure.
//!
//! Crossings are indexed by letter position (bottom to top). Each crossing
//! owns two outgoing part arcs: `2c` leaves at its left position and `2c+1`
//! at its right position. A free strand owns one part arc of its own. The
//! bottom of position `p` is the same part arc as the top of position `p`.
//!
//! A positive letter sends its left strand over to the right; a negative
//! letter sends its right strand over to the left. Strands always swap.
//!
//! An overcrossing arc runs from one under passage to the next along a
//! component. It is named by the crossing where it ends ([`ArcId::Crossing`]),
//! or by its component when that component has no under passage at all
//! ([`ArcId::Circle`]).

use std::fmt::Write as _;

use crate::braid::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcId {
    Crossing(usize),
    Circle(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Passage {
    Over,
    Under,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub index: usize,
    /// Left strand position, 1-based.
    pub generator: usize,
    pub sign: i8,
    pub under_component: usize,
    pub over_component: usize,
    pub in_left: usize,
    pub in_right: usize,
    pub out_left: usize,
    pub out_right: usize,
}

impl Crossing {
    pub fn under_in(&self) -> usize {
        if self.sign > 0 {
            self.in_right
        } else {
            self.in_left
        }
    }

    pub fn over_in(&self) -> usize {
        if self.sign > 0 {
            self.in_left
        } else {
            self.in_right
        }
    }

    pub fn under_out(&self) -> usize {
        if self.sign > 0 {
            self.out_left
        } else {
            self.out_right
        }
    }

    pub fn over_out(&self) -> usize {
        if self.sign > 0 {
            self.out_right
        } else {
            self.out_left
        }
    }

    pub fn is_mixed(&self) -> bool {
        self.under_component != self.over_component
    }
}

/// A part arc: a piece of a component between consecutive passages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartArc {
    pub component: usize,
    pub owner: ArcId,
    /// Over passages on `owner` before this part arc.
    pub preceding: usize,
}

/// One step of a component walk: a part arc and the passage at its end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub arc: usize,
    pub end: Option<(usize, Passage)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Strand positions whose top part arc lies on this component.
    pub positions: Vec<usize>,
    /// Base vertex: lowest-index crossing passed under by this component.
    pub base_vertex: Option<usize>,
    /// Part arc carrying the base color (the anchor for component 0).
    pub reference_arc: usize,
    /// Walk from `reference_arc` once around the component.
    pub walk: Vec<Step>,
}

impl Component {
    pub fn is_circle(&self) -> bool {
        self.base_vertex.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct Diagram {
    braid: BraidWord,
    crossings: Vec<Crossing>,
    part_arcs: Vec<PartArc>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    tau: Vec<ArcId>,
    /// Indexed by [`Diagram::arc_index`].
    tau_preimage_order: Vec<Vec<usize>>,
    components: Vec<Component>,
    /// Component indices without under passages, in component order.
    circles: Vec<usize>,
    closure_arcs: Vec<usize>,
    free_strands: Vec<usize>,
}

/// One integer linear relation `sum coeff * j_c = 0` over jump variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleRelation {
    pub component: usize,
    pub coeffs: Vec<(usize, i64)>,
}

impl Diagram {
    pub fn build(braid: &BraidWord) -> Diagram {
        let s = braid.strands();
        let nc = braid.crossing_count();
        // Placeholder for the bottom arc at a position, resolved after the sweep.
        #[derive(Clone, Copy)]
        enum Slot {
            Bottom(usize),
            Arc(usize),
        }
        let mut cur: Vec<Slot> = (0..s).map(Slot::Bottom).collect();
        let mut raw_in = Vec::with_capacity(nc);
        for (c, &k) in braid.letters().iter().enumerate() {
            let i = k.unsigned_abs() as usize - 1;
            raw_in.push((cur[i], cur[i + 1]));
            cur[i] = Slot::Arc(2 * c);
            cur[i + 1] = Slot::Arc(2 * c + 1);
        }
        let mut free_strands = Vec::new();
        let mut closure_arcs = vec![0; s];
        for p in 0..s {
            closure_arcs[p] = match cur[p] {
                Slot::Arc(a) => a,
                Slot::Bottom(_) => {
                    free_strands.push(p + 1);
                    2 * nc + free_strands.len() - 1
                }
            };
        }
        let resolve = |slot: Slot| match slot {
            Slot::Arc(a) => a,
            Slot::Bottom(p) => closure_arcs[p],
        };
        let n_arcs = 2 * nc + free_strands.len();
        // arc_end[a]: crossing and side where part arc a enters, None for free strands.
        let mut arc_end: Vec<Option<(usize, Side)>> = vec![None; n_arcs];
        let mut crossings = Vec::with_capacity(nc);
        for (c, &k) in braid.letters().iter().enumerate() {
            let (l, r) = (resolve(raw_in[c].0), resolve(raw_in[c].1));
            arc_end[l] = Some((c, Side::Left));
            arc_end[r] = Some((c, Side::Right));
            crossings.push(Crossing {
                index: c,
                generator: k.unsigned_abs() as usize,
                sign: k.signum() as i8,
                under_component: usize::MAX,
                over_component: usize::MAX,
                in_left: l,
                in_right: r,
                out_left: 2 * c,
                out_right: 2 * c + 1,
            });
        }
        let signs: Vec<i8> = crossings.iter().map(|x| x.sign).collect();
        let passage = |c: usize, side: Side| -> Passage {
            match (signs[c] > 0, side) {
                (true, Side::Left) | (false, Side::Right) => Passage::Over,
                _ => Passage::Under,
            }
        };
        let step = |a: usize| -> Step {
            Step { arc: a, end: arc_end[a].map(|(c, side)| (c, passage(c, side))) }
        };
        let next = |a: usize| -> usize {
            match arc_end[a] {
                None => a,
                Some((c, Side::Left)) => 2 * c + 1,
                Some((c, Side::Right)) => 2 * c,
            }
        };
        let walk_from = |start: usize| -> Vec<Step> {
            let mut out = vec![step(start)];
            let mut a = next(start);
            while a != start {
                out.push(step(a));
                a = next(a);
            }
            out
        };

        let mut comp_of_arc = vec![usize::MAX; n_arcs];
        let mut components: Vec<Component> = Vec::new();
        for p in 0..s {
            let top = closure_arcs[p];
            if comp_of_arc[top] != usize::MAX {
                components[comp_of_arc[top]].positions.push(p + 1);
                continue;
            }
            let ell = components.len();
            let walk = walk_from(top);
            for st in &walk {
                comp_of_arc[st.arc] = ell;
            }
            components.push(Component { positions: vec![p + 1], base_vertex: None, reference_arc: top, walk });
        }
        for (c, x) in crossings.iter_mut().enumerate() {
            let (u, o) = match x.sign > 0 {
                true => (x.in_right, x.in_left),
                false => (x.in_left, x.in_right),
            };
            x.under_component = comp_of_arc[u];
            x.over_component = comp_of_arc[o];
            let ell = x.under_component;
            if components[ell].base_vertex.is_none() {
                components[ell].base_vertex = Some(c);
            }
        }
        for (ell, comp) in components.iter_mut().enumerate() {
            if let Some(v) = comp.base_vertex {
                if ell > 0 {
                    comp.reference_arc = crossings[v].under_out();
                    comp.walk = walk_from(comp.reference_arc);
                }
            }
        }
        let circles: Vec<usize> = (0..components.len()).filter(|&l| components[l].is_circle()).collect();

        // Follows a component from part arc `a` to the next under passage,
        // collecting over passages. Returns (target, overs, arcs visited).
        let run = |a: usize| -> (Option<usize>, Vec<usize>, Vec<usize>) {
            let mut overs = Vec::new();
            let mut arcs = Vec::new();
            let mut x = a;
            loop {
                arcs.push(x);
                match step(x).end {
                    Some((c, Passage::Under)) => return (Some(c), overs, arcs),
                    Some((c, Passage::Over)) => overs.push(c),
                    None => return (None, overs, arcs),
                }
                x = next(x);
                if x == a {
                    return (None, overs, arcs);
                }
            }
        };

        let mut sigma = vec![0; nc];
        let mut tau = vec![ArcId::Crossing(0); nc];
        let mut tau_preimage_order = vec![Vec::new(); nc + circles.len()];
        let mut part_arcs = vec![PartArc { component: 0, owner: ArcId::Crossing(0), preceding: 0 }; n_arcs];
        for (v, x) in crossings.iter().enumerate() {
            let (target, overs, arcs) = run(x.under_out());
            let w = target.expect("an under exit always reaches an under passage");
            sigma[v] = w;
            for (k, &a) in arcs.iter().enumerate() {
                part_arcs[a] = PartArc { component: comp_of_arc[a], owner: ArcId::Crossing(w), preceding: k };
            }
            tau_preimage_order[w] = overs;
        }
        for (slot, &ell) in circles.iter().enumerate() {
            let comp = &components[ell];
            let mut overs = Vec::new();
            for (k, st) in comp.walk.iter().enumerate() {
                part_arcs[st.arc] = PartArc { component: ell, owner: ArcId::Circle(ell), preceding: k };
                if let Some((c, _)) = st.end {
                    overs.push(c);
                }
            }
            tau_preimage_order[nc + slot] = overs;
        }
        for (u, overs) in tau_preimage_order.iter().enumerate() {
            let id = if u < nc { ArcId::Crossing(u) } else { ArcId::Circle(circles[u - nc]) };
            for &c in overs {
                tau[c] = id;
            }
        }
        let mut sigma_inv = vec![0; nc];
        for (v, &w) in sigma.iter().enumerate() {
            sigma_inv[w] = v;
        }
        Diagram {
            braid: braid.clone(),
            crossings,
            part_arcs,
            sigma,
            sigma_inv,
            tau,
            tau_preimage_order,
            components,
            circles,
            closure_arcs,
            free_strands,
        }
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn strands(&self) -> usize {
        self.braid.strands()
    }

    pub fn writhe(&self) -> i64 {
        self.braid.writhe()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn part_arcs(&self) -> &[PartArc] {
        &self.part_arcs
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &[usize] {
        &self.sigma_inv
    }

    pub fn tau(&self) -> &[ArcId] {
        &self.tau
    }

    /// `tau` with circle targets mapped to `None`.
    pub fn tau_vertices(&self) -> Vec<Option<usize>> {
        self.tau
            .iter()
            .map(|t| match t {
                ArcId::Crossing(w) => Some(*w),
                ArcId::Circle(_) => None,
            })
            .collect()
    }

    /// Over passages on `arc`, in traversal order.
    pub fn tau_preimage(&self, arc: ArcId) -> &[usize] {
        &self.tau_preimage_order[self.arc_index(arc)]
    }

    pub fn arc_index(&self, arc: ArcId) -> usize {
        match arc {
            ArcId::Crossing(u) => u,
            ArcId::Circle(ell) => {
                self.crossings.len() + self.circles.iter().position(|&c| c == ell).expect("component is a circle")
            }
        }
    }

    pub fn arc_ids(&self) -> Vec<ArcId> {
        (0..self.crossings.len())
            .map(ArcId::Crossing)
            .chain(self.circles.iter().map(|&l| ArcId::Circle(l)))
            .collect()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn circles(&self) -> &[usize] {
        &self.circles
    }

    /// Part arc at the top (equivalently the bottom) of position `p`, 1-based.
    pub fn closure_arc(&self, p: usize) -> usize {
        self.closure_arcs[p - 1]
    }

    pub fn closure_arcs(&self) -> &[usize] {
        &self.closure_arcs
    }

    pub fn free_strands(&self) -> &[usize] {
        &self.free_strands
    }

    pub fn base_vertices(&self) -> Vec<Option<usize>> {
        self.components.iter().map(|c| c.base_vertex).collect()
    }

    /// The anchor part arc, colored 0 in every state.
    pub fn anchor_arc(&self) -> usize {
        self.closure_arcs[0]
    }

    /// Vertices passed under by component `ell`, in sigma-cycle order from
    /// its base vertex.
    pub fn cycle_order(&self, ell: usize) -> Vec<usize> {
        let Some(v0) = self.components[ell].base_vertex else {
            return Vec::new();
        };
        let mut out = vec![v0];
        let mut v = self.sigma[v0];
        while v != v0 {
            out.push(v);
            v = self.sigma[v];
        }
        out
    }

    pub fn is_tau_bijective(&self) -> bool {
        let mut hit = vec![false; self.crossings.len()];
        for t in &self.tau {
            match t {
                ArcId::Crossing(w) if !hit[*w] => hit[*w] = true,
                _ => return false,
            }
        }
        true
    }

    /// One relation per component with mixed crossings: over passages count
    /// +1, under passages -1. Relations that vanish identically are skipped.
    pub fn cycle_relations(&self) -> Vec<CycleRelation> {
        let mut rows = Vec::new();
        for ell in 0..self.components.len() {
            let coeffs: Vec<(usize, i64)> = self
                .crossings
                .iter()
                .filter(|x| x.is_mixed())
                .filter_map(|x| {
                    if x.over_component == ell {
                        Some((x.index, 1))
                    } else if x.under_component == ell {
                        Some((x.index, -1))
                    } else {
                        None
                    }
                })
                .collect();
            if !coeffs.is_empty() {
                rows.push(CycleRelation { component: ell, coeffs });
            }
        }
        rows
    }

    pub fn chord_graph(&self) -> ChordGraph {
        let mut circles = Vec::with_capacity(self.components.len());
        let mut over_end = vec![None; self.crossings.len()];
        let mut under_end = vec![None; self.crossings.len()];
        for (ell, comp) in self.components.iter().enumerate() {
            let mut passages = Vec::new();
            for st in &comp.walk {
                if let Some((c, p)) = st.end {
                    let end = ChordEnd { circle: ell, position: passages.len() };
                    match p {
                        Passage::Over => over_end[c] = Some(end),
                        Passage::Under => under_end[c] = Some(end),
                    }
                    passages.push((c, p));
                }
            }
            circles.push(ChordCircle { component: ell, passages });
        }
        let chords = self
            .crossings
            .iter()
            .map(|x| Chord {
                crossing: x.index,
                sign: x.sign,
                over: over_end[x.index].expect("over end"),
                under: under_end[x.index].expect("under end"),
                color: None,
            })
            .collect();
        ChordGraph { circles, chords }
    }

    /// Text table: one row per crossing followed by the component list.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "number\tsigma\ttau\tgen\tsign\tunder\tover\torder");
        let fmt_arc = |a: &ArcId| match a {
            ArcId::Crossing(w) => w.to_string(),
            ArcId::Circle(l) => format!("o{l}"),
        };
        for (v, x) in self.crossings.iter().enumerate() {
            let order: Vec<String> = self.tau_preimage_order[v].iter().map(|c| c.to_string()).collect();
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t[{}]",
                v,
                self.sigma[v],
                fmt_arc(&self.tau[v]),
                x.generator,
                if x.sign > 0 { "+" } else { "-" },
                x.under_component,
                x.over_component,
                order.join(",")
            );
        }
        for (ell, comp) in self.components.iter().enumerate() {
            let pos: Vec<String> = comp.positions.iter().map(|p| p.to_string()).collect();
            let cyc: Vec<String> = self.cycle_order(ell).iter().map(|v| v.to_string()).collect();
            let base = comp.base_vertex.map_or("-".to_string(), |v| v.to_string());
            let _ = writeln!(
                out,
                "component {ell}: positions [{}] base {base} cycle [{}]",
                pos.join(","),
                cyc.join(",")
            );
        }
        for &ell in &self.circles {
            let overs: Vec<String> =
                self.tau_preimage(ArcId::Circle(ell)).iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "circle o{ell}: order [{}]", overs.join(","));
        }
        out
    }

    /// Graph description for external viewers: one line per edge, blue for
    /// sigma and red for tau.
    pub fn graph_description(&self) -> String {
        let mut out = String::from("digraph arcs {\n");
        for v in 0..self.crossings.len() {
            let _ = writeln!(out, "  v{v} [label=\"{v}{}\"];", if self.crossings[v].sign > 0 { "+" } else { "-" });
        }
        for &ell in &self.circles {
            let _ = writeln!(out, "  o{ell} [shape=circle];");
        }
        for (v, w) in self.sigma.iter().enumerate() {
            let _ = writeln!(out, "  v{v} -> v{w} [color=blue];");
        }
        for (v, t) in self.tau.iter().enumerate() {
            let target = match t {
                ArcId::Crossing(w) => format!("v{w}"),
                ArcId::Circle(l) => format!("o{l}"),
            };
            let _ = writeln!(out, "  v{v} -> {target} [color=red];");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChordEnd {
    pub circle: usize,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chord {
    pub crossing: usize,
    pub sign: i8,
    /// Head of the chord.
    pub over: ChordEnd,
    /// Tail of the chord.
    pub under: ChordEnd,
    pub color: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordCircle {
    pub component: usize,
    /// Passages in traversal order from the base point.
    pub passages: Vec<(usize, Passage)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordGraph {
    pub circles: Vec<ChordCircle>,
    pub chords: Vec<Chord>,
}

/// Undercrossing map, jump map and arc orderings recovered from chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcStructure {
    pub sigma: Vec<usize>,
    pub tau: Vec<ArcId>,
    pub order: Vec<(ArcId, Vec<usize>)>,
}

impl ChordGraph {
    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    /// Chord counts between each unordered pair of distinct circles.
    pub fn mixed_counts(&self) -> Vec<((usize, usize), usize)> {
        let mut out: Vec<((usize, usize), usize)> = Vec::new();
        for ch in &self.chords {
            let (a, b) = (ch.over.circle.min(ch.under.circle), ch.over.circle.max(ch.under.circle));
            if a == b {
                continue;
            }
            match out.iter_mut().find(|(k, _)| *k == (a, b)) {
                Some((_, n)) => *n += 1,
                None => out.push(((a, b), 1)),
            }
        }
        out.sort();
        out
    }

    /// Rebuilds sigma, tau and the over-passage orderings by reading each
    /// circle cyclically.
    pub fn arc_structure(&self) -> ArcStructure {
        let nc = self.chords.len();
        let mut sigma = vec![usize::MAX; nc];
        let mut tau = vec![ArcId::Crossing(usize::MAX); nc];
        let mut order = Vec::new();
        for circle in &self.circles {
            let ps = &circle.passages;
            let unders: Vec<usize> = (0..ps.len()).filter(|&i| ps[i].1 == Passage::Under).collect();
            if unders.is_empty() {
                let overs: Vec<usize> = ps.iter().map(|(c, _)| *c).collect();
                for &c in &overs {
                    tau[c] = ArcId::Circle(circle.component);
                }
                order.push((ArcId::Circle(circle.component), overs));
                continue;
            }
            let len = ps.len();
            for (k, &i) in unders.iter().enumerate() {
                let j = unders[(k + 1) % unders.len()];
                let target = ps[j].0;
                sigma[ps[i].0] = target;
                let mut overs = Vec::new();
                let mut x = (i + 1) % len;
                while x != j {
                    overs.push(ps[x].0);
                    tau[ps[x].0] = ArcId::Crossing(target);
                    x = (x + 1) % len;
                }
                order.push((ArcId::Crossing(target), overs));
            }
        }
        order.sort();
        ArcStructure { sigma, tau, order }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{weaving, BraidWord};

    fn d(s: &str) -> Diagram {
        Diagram::build(&BraidWord::parse(s).unwrap())
    }

    #[test]
    fn mixed_eight_table() {
        let dg = d("-1 -1 -1 2 1 2 2 -1");
        assert_eq!(dg.sigma(), &[2, 6, 5, 4, 7, 3, 0, 1]);
        let tau: Vec<Option<usize>> = dg.tau_vertices();
        let expect = [1, 2, 6, 5, 6, 6, 3, 0];
        assert_eq!(tau, expect.iter().map(|&x| Some(x)).collect::<Vec<_>>());
        assert_eq!(dg.tau_preimage(ArcId::Crossing(6)), &[2, 4, 5]);
        assert_eq!(dg.component_count(), 1);
        assert!(!dg.is_tau_bijective());
    }

    #[test]
    fn single_crossings() {
        let p = d("1");
        assert_eq!(p.sigma(), &[0]);
        assert_eq!(p.tau(), &[ArcId::Crossing(0)]);
        assert_eq!(p.crossings()[0].under_in(), p.closure_arc(2));
        let e = Diagram::build(&BraidWord::new(1, vec![]).unwrap());
        assert_eq!(e.free_strands(), &[1]);
        assert_eq!(e.circles(), &[0]);
        assert!(e.cycle_relations().is_empty());
    }

    #[test]
    fn overcrossing_circle() {
        // strand 1 only ever passes over
        let dg = d("1 -1");
        assert_eq!(dg.component_count(), 2);
        assert_eq!(dg.circles(), &[0]);
        assert_eq!(dg.tau(), &[ArcId::Circle(0), ArcId::Circle(0)]);
        assert_eq!(dg.tau_preimage(ArcId::Circle(0)), &[0, 1]);
        assert_eq!(dg.sigma(), &[1, 0]);
    }

    #[test]
    fn cycle_relations_basic() {
        assert!(d("1 1 1").cycle_relations().is_empty());
        let rel = d("1 -2 1").cycle_relations();
        assert_eq!(rel.len(), 2);
        assert_eq!(rel[0].coeffs, vec![(0, 1), (2, -1)]);
        assert_eq!(rel[1].coeffs, vec![(0, -1), (2, 1)]);
        let rel = d("-1 -1 -1 -1 -1 -1").cycle_relations();
        assert_eq!(rel[0].coeffs, vec![(0, -1), (1, 1), (2, -1), (3, 1), (4, -1), (5, 1)]);
    }

    #[test]
    fn weaving_tau_is_bijective() {
        for m in 1..=9 {
            assert!(Diagram::build(&weaving(m)).is_tau_bijective(), "m = {m}");
        }
    }

    #[test]
    fn chord_graph_round_trip() {
        for s in ["-1 -1 -1 2 1 2 2 -1", "1 -2 1", "1 -1", "-1 2 -1 2 -1 2", "2 2 -1 3 -2 1"] {
            let dg = d(s);
            let cg = dg.chord_graph();
            assert_eq!(cg.chord_count(), dg.crossing_count());
            for (_, n) in cg.mixed_counts() {
                assert_eq!(n % 2, 0);
            }
            let rebuilt = cg.arc_structure();
            assert_eq!(rebuilt.sigma, dg.sigma());
            assert_eq!(rebuilt.tau, dg.tau());
            for (arc, overs) in &rebuilt.order {
                assert_eq!(overs.as_slice(), dg.tau_preimage(*arc), "{s}");
            }
        }
    }
}
