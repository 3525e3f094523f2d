//! Depth-first enumeration of integer points in a box cut by affine
//! interval constraints.
//!
//! Variables are assigned in index order. Before a variable is branched on,
//! its domain is narrowed so that every constraint touching it can still be
//! met by some completion of the remaining variables. A constraint whose
//! variables are all assigned is therefore exactly satisfied at the leaves.

use crate::exec::ExecMode;

/// `lo <= constant + sum coeff * x[var] <= hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub terms: Vec<(usize, i64)>,
    pub constant: i64,
    pub lo: i64,
    pub hi: i64,
}

#[derive(Debug, Clone)]
pub struct BoxProblem {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
    pub constraints: Vec<Constraint>,
}

/// Precomputed search tables.
struct Plan {
    nvars: usize,
    lo: Vec<i64>,
    hi: Vec<i64>,
    cons: Vec<Constraint>,
    /// Constraints touching each variable: (constraint, coefficient, index
    /// into that constraint's `suffix` for the variables after this one).
    by_var: Vec<Vec<(usize, i64, usize)>>,
    /// Per constraint, min and max of its terms from the t-th term onwards.
    suffix: Vec<Vec<(i64, i64)>>,
    infeasible: bool,
}

impl Plan {
    fn new(p: &BoxProblem) -> Plan {
        let nvars = p.lo.len();
        let mut infeasible = p.lo.iter().zip(&p.hi).any(|(l, h)| l > h);
        let mut cons: Vec<Constraint> = Vec::new();
        for c in &p.constraints {
            let mut terms: Vec<(usize, i64)> = Vec::new();
            let mut sorted = c.terms.clone();
            sorted.sort_by_key(|(v, _)| *v);
            for (v, a) in sorted {
                match terms.last_mut() {
                    Some((lv, la)) if *lv == v => *la += a,
                    _ => terms.push((v, a)),
                }
            }
            terms.retain(|(_, a)| *a != 0);
            if terms.is_empty() {
                if c.constant < c.lo || c.constant > c.hi {
                    infeasible = true;
                }
                continue;
            }
            let norm = Constraint { terms, ..c.clone() };
            // merge duplicates of the same affine form
            match cons.iter_mut().find(|x| x.terms == norm.terms && x.constant == norm.constant) {
                Some(x) => {
                    x.lo = x.lo.max(norm.lo);
                    x.hi = x.hi.min(norm.hi);
                }
                None => cons.push(norm),
            }
        }
        let mut by_var = vec![Vec::new(); nvars];
        let mut suffix = Vec::with_capacity(cons.len());
        for (ci, c) in cons.iter().enumerate() {
            let m = c.terms.len();
            let mut suf = vec![(0i64, 0i64); m + 1];
            for t in (0..m).rev() {
                let (v, a) = c.terms[t];
                let (x, y) = (a * p.lo[v], a * p.hi[v]);
                suf[t] = (suf[t + 1].0 + x.min(y), suf[t + 1].1 + x.max(y));
            }
            for (t, &(v, a)) in c.terms.iter().enumerate() {
                by_var[v].push((ci, a, t + 1));
            }
            suffix.push(suf);
        }
        Plan { nvars, lo: p.lo.clone(), hi: p.hi.clone(), cons, by_var, suffix, infeasible }
    }

    /// Feasible range for variable `v` given the partial sums.
    fn domain(&self, v: usize, partial: &[i64]) -> (i64, i64) {
        let (mut lo, mut hi) = (self.lo[v], self.hi[v]);
        for &(ci, a, idx) in &self.by_var[v] {
            let c = &self.cons[ci];
            let (smin, smax) = self.suffix[ci][idx];
            let base = c.constant + partial[ci];
            // c.lo <= base + a x + s and base + a x + s <= c.hi for some s in [smin, smax]
            let need_lo = c.lo - base - smax;
            let need_hi = c.hi - base - smin;
            let (l, h) = if a > 0 {
                (div_ceil(need_lo, a), div_floor(need_hi, a))
            } else {
                (div_ceil(need_hi, a), div_floor(need_lo, a))
            };
            lo = lo.max(l);
            hi = hi.min(h);
            if lo > hi {
                break;
            }
        }
        (lo, hi)
    }

    fn dfs(&self, v: usize, x: &mut Vec<i64>, partial: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if v == self.nvars {
            out.push(x.clone());
            return;
        }
        let (lo, hi) = self.domain(v, partial);
        for val in lo..=hi {
            self.assign(v, val, x, partial);
            self.dfs(v + 1, x, partial, out);
            self.unassign(v, val, partial);
        }
    }

    fn assign(&self, v: usize, val: i64, x: &mut [i64], partial: &mut [i64]) {
        x[v] = val;
        for &(ci, a, _) in &self.by_var[v] {
            partial[ci] += a * val;
        }
    }

    fn unassign(&self, v: usize, val: i64, partial: &mut [i64]) {
        for &(ci, a, _) in &self.by_var[v] {
            partial[ci] -= a * val;
        }
    }

    fn solve(&self, mode: ExecMode) -> Vec<Vec<i64>> {
        if self.infeasible {
            return Vec::new();
        }
        let mut x = vec![0; self.nvars];
        let mut partial = vec![0; self.cons.len()];
        if self.nvars == 0 {
            return vec![Vec::new()];
        }
        let (lo, hi) = self.domain(0, &partial);
        if lo > hi {
            return Vec::new();
        }
        let branch = |val: i64| -> Vec<Vec<i64>> {
            let mut x = vec![0; self.nvars];
            let mut partial = vec![0; self.cons.len()];
            let mut out = Vec::new();
            self.assign(0, val, &mut x, &mut partial);
            self.dfs(1, &mut x, &mut partial, &mut out);
            out
        };
        if mode.is_parallel() && hi > lo {
            return crate::exec::par_flat_map_range(lo, hi, branch);
        }
        let mut out = Vec::new();
        self.dfs(0, &mut x, &mut partial, &mut out);
        out
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -num_integer::Integer::div_floor(&-a, &b)
}

impl BoxProblem {
    /// All feasible points in lexicographic order.
    pub fn solve(&self, mode: ExecMode) -> Vec<Vec<i64>> {
        Plan::new(self).solve(mode)
    }

    /// Brute force over the whole box, for testing.
    pub fn solve_naive(&self) -> Vec<Vec<i64>> {
        let n = self.lo.len();
        let mut out = Vec::new();
        if self.lo.iter().zip(&self.hi).any(|(l, h)| l > h) {
            return out;
        }
        let mut x = self.lo.clone();
        loop {
            let ok = self.constraints.iter().all(|c| {
                let val = c.constant + c.terms.iter().map(|(v, a)| a * x[*v]).sum::<i64>();
                c.lo <= val && val <= c.hi
            });
            if ok {
                out.push(x.clone());
            }
            // odometer with the last variable fastest
            let mut k = n;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if x[k] < self.hi[k] {
                    x[k] += 1;
                    break;
                }
                x[k] = self.lo[k];
            }
        }
    }
}
