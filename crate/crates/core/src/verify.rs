//! Verification suites shared by the CLI and the acceptance run. Each suite
//! reports how many checks ran and the first few failures, each naming the
//! braid, color and offending state or instance.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::corpus;
use crate::diagram::Diagram;
use crate::exec::ExecMode;
use crate::oracle;
use crate::qalgebra::LaurentQ;
use crate::statesum::{colored_jones_framed, colored_jones_unframed, evaluate, ModelChoice};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Models,
    Props,
    Skein,
    Identity,
    Oracle,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Suite::All,
            "models" => Suite::Models,
            "props" => Suite::Props,
            "skein" => Suite::Skein,
            "identity" => Suite::Identity,
            "oracle" => Suite::Oracle,
            _ => return Err(format!("unknown suite '{s}' (all, models, props, skein, identity, oracle)")),
        })
    }
}

/// Failures kept per report.
const KEEP: usize = 5;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: &str) -> Self {
        Report { name: name.to_string(), ..Default::default() }
    }

    fn check(&mut self, ok: bool, why: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEEP {
                self.failures.push(why());
            }
        }
    }

    fn check_result<E: fmt::Display>(&mut self, r: Result<bool, E>, why: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, why),
            Err(e) => self.check(false, || format!("{}: {e}", why())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} ({} checks, {} failed)", self.name, self.checked, self.failed)?;
        for x in &self.failures {
            write!(f, "\n  {x}")?;
        }
        Ok(())
    }
}

/// Runs `suite` with randomized inputs drawn from `seed`.
pub fn run(suite: Suite, seed: u64) -> Vec<Report> {
    match suite {
        Suite::All => [Suite::Models, Suite::Props, Suite::Identity, Suite::Skein, Suite::Oracle]
            .into_iter()
            .flat_map(|s| run(s, seed))
            .collect(),
        Suite::Models => vec![models(&corpus::standard(seed), 1..=3)],
        Suite::Props => {
            let (quadratic, signed) = potential_identities(seed, 200);
            vec![quadratic, signed, skew_matrix(seed, 200)]
        }
        Suite::Identity => q_identities(),
        Suite::Skein => {
            let c = corpus::standard(seed);
            vec![skein(&c), framing(&c, 1..=2), reflection(&c, 1..=2)]
        }
        Suite::Oracle => {
            let c = corpus::standard(seed);
            vec![bracket_oracle(&c), cable_oracle(&c, 4)]
        }
    }
}

/// Both models on every braid and color; a disagreement carries a witness.
pub fn models(braids: &[BraidWord], colors: std::ops::RangeInclusive<i64>) -> Report {
    let mut r = Report::new("models agree");
    for b in braids {
        for n in colors.clone() {
            let res = evaluate(b, n, ModelChoice::Both, ExecMode::default()).map(|_| true);
            r.check_result(res, || format!("[{b}] n={n}"));
        }
    }
    r
}

/// The two linear identities on random integer potentials of random braids
/// with at most 6 crossings.
pub fn potential_identities(seed: u64, count: usize) -> (Report, Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x61);
    let braids = corpus::random_braids(seed ^ 0x62, count, 4, 6);
    let mut quadratic = Report::new("quadratic jump identity");
    let mut signed = Report::new("signed jump identity");
    for b in &braids {
        let d = Diagram::build(b);
        let p = match corpus::random_z_potential(&d, 4, &mut rng) {
            Ok(p) => p,
            Err(e) => {
                quadratic.check(false, || format!("[{b}] {e}"));
                continue;
            }
        };
        let why = || format!("[{b}] bases={:?} jumps={:?}", p.bases, p.jumps);
        quadratic.check_result(oracle::verify_quadratic_jump_identity(&d, &p), why);
        signed.check_result(oracle::verify_signed_jump_identity(&d, &p), why);
    }
    (quadratic, signed)
}

/// Random skew-symmetric matrices with zero column sums, sizes 2..=6,
/// half built from generators and half from a random block.
pub fn skew_matrix(seed: u64, count: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6d);
    let mut r = Report::new("skew matrix identity");
    for k in 0..count {
        let mu = rng.gen_range(2..=6usize);
        let a = if k % 2 == 0 { from_generators(mu, &mut rng) } else { from_block(mu, &mut rng) };
        r.check_result(oracle::verify_skew_matrix_identity(&a), || format!("{a:?}"));
    }
    r
}

fn from_generators(mu: usize, rng: &mut impl Rng) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; mu]; mu];
    for j in 1..mu {
        for k in j + 1..mu {
            let c = rng.gen_range(-3..=3);
            let g = oracle::matrix_generator(mu, j, k);
            for (ra, rg) in a.iter_mut().zip(&g) {
                for (x, y) in ra.iter_mut().zip(rg) {
                    *x += c * y;
                }
            }
        }
    }
    a
}

/// Random skew block on the first `mu - 1` indices; the last row and
/// column absorb the column sums.
fn from_block(mu: usize, rng: &mut impl Rng) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; mu]; mu];
    for j in 0..mu - 1 {
        for k in j + 1..mu - 1 {
            let v = rng.gen_range(-5..=5);
            a[j][k] = v;
            a[k][j] = -v;
        }
    }
    for k in 0..mu - 1 {
        let s: i64 = (0..mu - 1).map(|i| a[i][k]).sum();
        a[mu - 1][k] = -s;
        a[k][mu - 1] = s;
    }
    a
}

/// Sign-change and symmetry identities for the q-symbols over fixed grids.
pub fn q_identities() -> Vec<Report> {
    let mut poch = Report::new("pochhammer sign change");
    let mut binom = Report::new("binomial sign change");
    for a in -8..=8 {
        for b in 0..=6 {
            for eps in [1i8, -1] {
                poch.check(oracle::verify_pochhammer_sign_identity(a, b, eps), || format!("a={a} b={b} eps={eps}"));
                binom.check_result(oracle::verify_binomial_sign_identity(a, b, eps), || {
                    format!("a={a} b={b} eps={eps}")
                });
            }
        }
    }
    let mut sym = Report::new("binomial symmetry");
    for c in 0..=14 {
        for d in 0..=14 {
            sym.check_result(oracle::verify_binomial_symmetry(c, d), || format!("c={c} d={d}"));
        }
    }
    let mut sum = Report::new("pochhammer sum");
    for n in 0..=12 {
        sum.check(oracle::verify_pochhammer_identity(n), || format!("n={n}"));
    }
    vec![poch, binom, sym, sum]
}

/// Framed and unframed skein relations at n = 1 on every letter of every
/// braid with at most 8 crossings.
pub fn skein(braids: &[BraidWord]) -> Report {
    let mut r = Report::new("skein relations");
    let m = ModelChoice::Both;
    let gap = LaurentQ::t_quarter(-2) - LaurentQ::t_quarter(2);
    for b in braids.iter().filter(|b| b.crossing_count() <= 8) {
        for pos in 0..b.crossing_count() {
            let (kp, km, k0) = b.skein_triple(pos).expect("position in range");
            let res = (|| -> Result<bool, crate::statesum::StatesumError> {
                let (fp, fm, f0) =
                    (colored_jones_framed(&kp, 1, m)?, colored_jones_framed(&km, 1, m)?, colored_jones_framed(&k0, 1, m)?);
                let framed = fp.shift(-1) - fm.shift(1) == &gap * &f0;
                let (up, um, u0) = (
                    colored_jones_unframed(&kp, 1, m)?,
                    colored_jones_unframed(&km, 1, m)?,
                    colored_jones_unframed(&k0, 1, m)?,
                );
                let unframed = up.shift(-4) - um.shift(4) == &gap * &u0;
                Ok(framed && unframed)
            })();
            r.check_result(res, || format!("[{b}] at letter {pos}"));
        }
    }
    r
}

/// Stabilization changes the framed value by `t^(-+(n^2/4 + n/2))` and
/// leaves the unframed value alone.
pub fn framing(braids: &[BraidWord], colors: std::ops::RangeInclusive<i64>) -> Report {
    let mut r = Report::new("framing change");
    for b in braids.iter().filter(|b| b.crossing_count() <= 6) {
        for n in colors.clone() {
            for sign in [1, -1] {
                let st = b.stabilize(sign);
                let res = (|| -> Result<bool, crate::statesum::StatesumError> {
                    let base = colored_jones_framed(b, n, ModelChoice::Both)?;
                    let moved = colored_jones_framed(&st, n, ModelChoice::Both)?;
                    let q = -(sign as i64) * (n * n + 2 * n);
                    Ok(moved == base.shift(q)
                        && colored_jones_unframed(&st, n, ModelChoice::Both)?
                            == colored_jones_unframed(b, n, ModelChoice::Both)?)
                })();
                r.check_result(res, || format!("[{b}] n={n} stabilized {sign:+}"));
            }
        }
    }
    r
}

/// The mirror image inverts the variable.
pub fn reflection(braids: &[BraidWord], colors: std::ops::RangeInclusive<i64>) -> Report {
    let mut r = Report::new("reflection");
    for b in braids.iter().filter(|b| b.crossing_count() <= 8) {
        for n in colors.clone() {
            let res = (|| -> Result<bool, crate::statesum::StatesumError> {
                let v = colored_jones_unframed(b, n, ModelChoice::Both)?;
                let m = colored_jones_unframed(&b.reflect(), n, ModelChoice::Both)?;
                Ok(m == v.substitute_inverse())
            })();
            r.check_result(res, || format!("[{b}] n={n}"));
        }
    }
    r
}

/// Unframed value at n = 1 against the bracket polynomial with the
/// component-count sign.
pub fn bracket_oracle(braids: &[BraidWord]) -> Report {
    let mut r = Report::new("bracket oracle");
    for b in braids.iter().filter(|b| b.crossing_count() <= 16) {
        let res = (|| -> Result<bool, String> {
            let j = colored_jones_unframed(b, 1, ModelChoice::Both).map_err(|e| e.to_string())?;
            let v = oracle::kauffman_jones(b).map_err(|e| e.to_string())?;
            let sign = oracle::oracle_sign(b.component_count());
            Ok(j == v.scale(&sign.into()))
        })();
        r.check_result(res, || format!("[{b}] n=1"));
    }
    r
}

/// Framed n = 2 value of every knot with at most `max_crossings` crossings
/// against the bracket of its 2-cable.
pub fn cable_oracle(braids: &[BraidWord], max_crossings: usize) -> Report {
    let mut r = Report::new("cable oracle");
    for b in braids.iter().filter(|b| b.crossing_count() <= max_crossings && b.component_count() == 1) {
        let res = (|| -> Result<bool, String> {
            let j = colored_jones_framed(b, 2, ModelChoice::Both).map_err(|e| e.to_string())?;
            Ok(j == oracle::framed_two_via_cable(b).map_err(|e| e.to_string())?)
        })();
        r.check_result(res, || format!("[{b}] n=2"));
    }
    r
}
