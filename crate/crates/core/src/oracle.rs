//! Independent checks. The Kauffman-bracket Jones polynomial is computed from
//! the braid word alone, never from the diagram maps. The remaining functions
//! test exact identities that the arc-graph model relies on.

use thiserror::Error;

use crate::braid::BraidWord;
use crate::diagram::Diagram;
use crate::exec::ExecMode;
use crate::qalgebra::{pochhammer, pochhammer_signed, qbinom, qbinom_signed, qint, LaurentQ, QAlgebraError};
use crate::states::{derive_colors, Convention, Potential, StateError};

/// Largest crossing count accepted by [`kauffman_jones`].
pub const MAX_BRACKET_CROSSINGS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{crossings} crossings exceed the bracket cap of {cap}")]
    TooLarge { crossings: usize, cap: usize },
    #[error("cable check needs a knot, got {0} components")]
    NotAKnot(usize),
    #[error("matrix precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Algebra(#[from] QAlgebraError),
}

/// One smoothing choice per crossing (bit set = A-smoothing) and the number
/// of loops it produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmoothingState {
    pub a_mask: u32,
    pub loops: usize,
}

/// Segment graph of the closed braid: node `p` is the bottom of position
/// `p`, nodes `s + 2c` and `s + 2c + 1` leave crossing `c` on the left and
/// right.
struct Segments {
    nodes: usize,
    closure: Vec<(usize, usize)>,
    /// (in_left, in_right, out_left, out_right, sign)
    crossings: Vec<(usize, usize, usize, usize, i32)>,
}

impl Segments {
    fn new(b: &BraidWord) -> Self {
        let s = b.strands();
        let mut cur: Vec<usize> = (0..s).collect();
        let mut crossings = Vec::with_capacity(b.crossing_count());
        for (c, &k) in b.letters().iter().enumerate() {
            let i = k.unsigned_abs() as usize - 1;
            let (ol, or) = (s + 2 * c, s + 2 * c + 1);
            crossings.push((cur[i], cur[i + 1], ol, or, k.signum()));
            cur[i] = ol;
            cur[i + 1] = or;
        }
        let closure = (0..s).map(|p| (p, cur[p])).collect();
        Segments { nodes: s + 2 * b.crossing_count(), closure, crossings }
    }

    fn loops(&self, a_mask: u32, parent: &mut Vec<usize>) -> usize {
        parent.clear();
        parent.extend(0..self.nodes);
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = self.nodes;
        let mut union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra] = rb;
                comps -= 1;
            }
        };
        for &(a, b) in &self.closure {
            union(parent, a, b);
        }
        for (c, &(il, ir, ol, or, sign)) in self.crossings.iter().enumerate() {
            let a_smoothing = a_mask >> c & 1 == 1;
            // the oriented smoothing joins each input to the output above it
            let oriented = a_smoothing == (sign > 0);
            if oriented {
                union(parent, il, ol);
                union(parent, ir, or);
            } else {
                union(parent, il, ir);
                union(parent, ol, or);
            }
        }
        comps
    }
}

/// Every smoothing state of the closed braid, by mask.
pub fn smoothing_states(b: &BraidWord) -> Result<Vec<SmoothingState>, OracleError> {
    let c = b.crossing_count();
    if c > MAX_BRACKET_CROSSINGS {
        return Err(OracleError::TooLarge { crossings: c, cap: MAX_BRACKET_CROSSINGS });
    }
    let seg = Segments::new(b);
    let mut buf = Vec::new();
    Ok((0..1u32 << c).map(|m| SmoothingState { a_mask: m, loops: seg.loops(m, &mut buf) }).collect())
}

/// Histogram `counts[a][loops]` over all smoothings with `a` A-smoothings.
fn bracket_histogram(b: &BraidWord, mode: ExecMode) -> Vec<Vec<u64>> {
    let c = b.crossing_count();
    let seg = Segments::new(b);
    let width = seg.nodes + 1;
    let total: u64 = 1 << c;
    let chunk = |lo: u64, hi: u64| -> Vec<Vec<u64>> {
        let mut h = vec![vec![0u64; width]; c + 1];
        let mut buf = Vec::with_capacity(seg.nodes);
        for m in lo..hi {
            let m = m as u32;
            h[m.count_ones() as usize][seg.loops(m, &mut buf)] += 1;
        }
        h
    };
    let merge = |mut a: Vec<Vec<u64>>, b: Vec<Vec<u64>>| {
        for (ra, rb) in a.iter_mut().zip(b) {
            for (x, y) in ra.iter_mut().zip(rb) {
                *x += y;
            }
        }
        a
    };
    let step = 1u64 << 12;
    let blocks: Vec<u64> = (0..total.div_ceil(step)).collect();
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return blocks
            .par_iter()
            .map(|&k| chunk(k * step, ((k + 1) * step).min(total)))
            .reduce(|| vec![vec![0u64; width]; c + 1], merge);
    }
    let _ = mode;
    blocks
        .iter()
        .map(|&k| chunk(k * step, ((k + 1) * step).min(total)))
        .fold(vec![vec![0u64; width]; c + 1], merge)
}

/// Jones polynomial from the Kauffman bracket with `A = t^(-1/4)`,
/// normalized so the unknot is 1.
pub fn kauffman_jones(b: &BraidWord) -> Result<LaurentQ, OracleError> {
    kauffman_jones_with(b, ExecMode::default())
}

pub fn kauffman_jones_with(b: &BraidWord, mode: ExecMode) -> Result<LaurentQ, OracleError> {
    let c = b.crossing_count();
    if c > MAX_BRACKET_CROSSINGS {
        return Err(OracleError::TooLarge { crossings: c, cap: MAX_BRACKET_CROSSINGS });
    }
    let a_pow = |k: i64| LaurentQ::t_quarter(-k);
    let delta = -(a_pow(2) + a_pow(-2));
    let hist = bracket_histogram(b, mode);
    let max_loops = hist.iter().flat_map(|r| r.iter().enumerate().filter(|(_, &x)| x > 0).map(|(l, _)| l)).max();
    let delta_pows: Vec<LaurentQ> = (0..max_loops.unwrap_or(1)).map(|k| delta.pow(k as u32)).collect();
    let mut bracket = LaurentQ::zero();
    for (a, row) in hist.iter().enumerate() {
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = a_pow(2 * a as i64 - c as i64).scale(&count.into());
            bracket += &term * &delta_pows[loops - 1];
        }
    }
    // (-A^3)^(-w)
    let w = b.writhe();
    let mut norm = a_pow(-3 * w);
    if w % 2 != 0 {
        norm = -norm;
    }
    Ok(&norm * &bracket)
}

/// Global sign relating the unframed engine value at n = 1 to the bracket
/// Jones polynomial: `J_1 = (-1)^(components - 1) * V`.
pub fn oracle_sign(components: usize) -> i64 {
    if components % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Framed n = 2 value of a knot from the bracket of its 2-cable, using
/// `V_1 (x) V_1 = V_2 + V_0`: `[3] J'_2(K) = [2] J'_1(cable) - 1`. The
/// cable has four times the crossings of `b`.
pub fn framed_two_via_cable(b: &BraidWord) -> Result<LaurentQ, OracleError> {
    let mu = b.component_count();
    if mu != 1 {
        return Err(OracleError::NotAKnot(mu));
    }
    let c = b.two_cable();
    let v = kauffman_jones(&c)?;
    // framed n = 1 value of the two-component cable
    let framed = v.scale(&oracle_sign(c.component_count()).into()).shift(-3 * c.writhe());
    let num = &qint(2) * &framed - LaurentQ::one();
    Ok(num.div_exact(&qint(3))?)
}

/// Over-exit color `a`, under-exit color `b` and jump `r` per crossing for a
/// plus-convention potential.
pub fn crossing_colors(d: &Diagram, p: &Potential) -> Result<Vec<(i64, i64, i64)>, StateError> {
    let p = Potential { convention: Convention::Plus, ..p.clone() };
    let c = derive_colors(d, &p)?;
    Ok((0..d.crossing_count()).map(|v| (c.tilde_j[v] + p.jumps[v], c.i[v], p.jumps[v])).collect())
}

/// `sum_c r (a - b - r) = 0`.
pub fn verify_quadratic_jump_identity(d: &Diagram, p: &Potential) -> Result<bool, StateError> {
    Ok(crossing_colors(d, p)?.iter().map(|&(a, b, r)| r * (a - b - r)).sum::<i64>() == 0)
}

/// `sum_c eps (a - b) = sum_c eps r`.
pub fn verify_signed_jump_identity(d: &Diagram, p: &Potential) -> Result<bool, StateError> {
    let cols = crossing_colors(d, p)?;
    let eps = d.crossings().iter().map(|x| x.sign as i64);
    let (lhs, rhs) = cols.iter().zip(eps).fold((0, 0), |(l, r), (&(a, b, rr), e)| (l + e * (a - b), r + e * rr));
    Ok(lhs == rhs)
}

/// Checks `sum_{j<k} a_jk s_jk = 0` with
/// `s_jk = sum_{i<j} a_ik - sum_{k<i<=mu} a_ji` (1-based indices).
pub fn verify_skew_matrix_identity(a: &[Vec<i64>]) -> Result<bool, OracleError> {
    let mu = a.len();
    if a.iter().any(|row| row.len() != mu) {
        return Err(OracleError::Precondition("matrix is not square".into()));
    }
    for j in 0..mu {
        for k in 0..mu {
            if a[j][k] != -a[k][j] {
                return Err(OracleError::Precondition(format!("not skew-symmetric at ({}, {})", j + 1, k + 1)));
            }
        }
    }
    for k in 0..mu {
        if (0..mu).map(|i| a[i][k]).sum::<i64>() != 0 {
            return Err(OracleError::Precondition(format!("column {} does not sum to zero", k + 1)));
        }
    }
    let mut total = 0i64;
    for j in 0..mu {
        for k in j + 1..mu {
            let s: i64 = (0..j).map(|i| a[i][k]).sum::<i64>() - (k + 1..mu).map(|i| a[j][i]).sum::<i64>();
            total += a[j][k] * s;
        }
    }
    Ok(total == 0)
}

/// Skew-symmetric generator with a 2x2 block at rows `j, j+1` and columns
/// `k, k+1` (1-based, `j < k < mu`). Adjacent `k = j+1` blocks overlap the
/// diagonal, which is left at zero.
pub fn matrix_generator(mu: usize, j: usize, k: usize) -> Vec<Vec<i64>> {
    assert!(1 <= j && j < k && k < mu, "generator index out of range");
    let mut a = vec![vec![0i64; mu]; mu];
    let mut set = |r: usize, c: usize, v: i64| {
        if r != c {
            a[r - 1][c - 1] = v;
            a[c - 1][r - 1] = -v;
        }
    };
    set(j, k, 1);
    set(j, k + 1, -1);
    if k > j + 1 {
        set(j + 1, k, -1);
    }
    set(j + 1, k + 1, 1);
    a
}

/// `sum_{0<=r<=n} t^((r(2-n) + r(r-1)/2)/2) {n}_r = t^n`.
pub fn verify_pochhammer_identity(n: i64) -> bool {
    let lhs: LaurentQ =
        (0..=n).map(|r| pochhammer(n, r).shift(2 * r * (2 - n) + r * (r - 1))).sum();
    lhs == LaurentQ::t_quarter(4 * n)
}

/// `{a}_b = (-1)^((1+eps)b/2) t^(-eps(ab/2 - b(b-1)/4)) {a}_{b,t^eps}`.
pub fn verify_pochhammer_sign_identity(a: i64, b: i64, eps: i8) -> bool {
    let e = eps as i64;
    let mut rhs = pochhammer_signed(a, b, eps).shift(-e * (2 * a * b - b * (b - 1)));
    if ((1 + e) * b / 2) % 2 != 0 {
        rhs = -rhs;
    }
    pochhammer(a, b) == rhs
}

/// `(a choose b) = t^(eps b(b-a)/2) (a choose b)_{t^eps}`.
pub fn verify_binomial_sign_identity(a: i64, b: i64, eps: i8) -> Result<bool, QAlgebraError> {
    let e = eps as i64;
    Ok(qbinom(a, b)? == qbinom_signed(a, b, eps)?.shift(2 * e * b * (b - a)))
}

/// `(c+d choose c) = (c+d choose d)`, balanced and in both signed variables.
pub fn verify_binomial_symmetry(c: i64, d: i64) -> Result<bool, QAlgebraError> {
    Ok(qbinom(c + d, c)? == qbinom(c + d, d)?
        && qbinom_signed(c + d, c, 1)? == qbinom_signed(c + d, d, 1)?
        && qbinom_signed(c + d, c, -1)? == qbinom_signed(c + d, d, -1)?)
}
