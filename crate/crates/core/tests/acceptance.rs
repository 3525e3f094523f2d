//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons
//! throughout. Exits nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cjones::braid::{preset, weaving, BraidWord};
use cjones::corpus::{self, DEFAULT_SEED};
use cjones::diagram::ArcId;
use cjones::oracle::{kauffman_jones, oracle_sign};
use cjones::states::{enumerate, Convention};
use cjones::statesum::{
    colored_jones_framed, colored_jones_unframed, exponent_class, expected_exponent_class, ModelChoice,
};
use cjones::verify::{self, Report};
use cjones::{Diagram, ExecMode, LaurentQ};

type Outcome = Result<String, String>;

fn from_reports(reports: &[Report]) -> Outcome {
    let summary: Vec<String> = reports.iter().map(|r| format!("{} x{}", r.name, r.checked)).collect();
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(summary.join(", ")),
        Some(r) => Err(r.to_string()),
    }
}

fn anchors() -> Outcome {
    let start = Instant::now();
    let models = [ModelChoice::RMatrix, ModelChoice::ArcGraph, ModelChoice::Both];
    let empty = BraidWord::new(1, vec![]).map_err(|e| e.to_string())?;
    let (pos, neg) = (preset("unknot-pos").unwrap(), preset("unknot-neg").unwrap());
    for n in 1..=5 {
        let q = n * n + 2 * n;
        for m in models {
            let get = |b: &BraidWord| colored_jones_framed(b, n, m).map_err(|e| e.to_string());
            let cases = [(&empty, LaurentQ::one()), (&pos, LaurentQ::t_quarter(-q)), (&neg, LaurentQ::t_quarter(q))];
            for (b, want) in cases {
                let got = get(b)?;
                if got != want {
                    return Err(format!("[{b}] n={n} {m}: got {got}, want {want}"));
                }
            }
        }
    }
    let took = start.elapsed();
    if took >= Duration::from_secs(1) {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("n = 1..5, three models, {took:?}"))
}

fn model_equivalence(corpus: &[BraidWord]) -> Outcome {
    from_reports(&[verify::models(corpus, 1..=3)])
}

fn state_slices() -> Outcome {
    let d = Diagram::build(&BraidWord::parse("-1 -1 -1 -1 -1 -1").unwrap());
    for n in 1..=6i64 {
        let st = enumerate(&d, n, Convention::Plus, ExecMode::default()).map_err(|e| e.to_string())?;
        let slice = |beta: i64| st.iter().filter(|s| s.potential.bases[0] == beta).count() as i64;
        let (zero, full) = (slice(0), slice(n));
        if zero != (n + 1) * (n + 2) * (n + 3) / 6 || full != n + 1 {
            return Err(format!("n={n}: slice 0 has {zero}, slice n has {full}"));
        }
    }
    Ok("n = 1..6".into())
}

fn jump_maps() -> Outcome {
    let shifts = |d: &Diagram| -> Vec<usize> {
        let ord = d.cycle_order(0);
        let nv = ord.len();
        let mut label = vec![0; nv];
        for (k, &v) in ord.iter().enumerate() {
            label[v] = k;
        }
        ord.iter()
            .enumerate()
            .map(|(k, &v)| match d.tau()[v] {
                ArcId::Crossing(w) => (label[w] + nv - k) % nv,
                ArcId::Circle(_) => usize::MAX,
            })
            .collect()
    };
    for l in 1..=2usize {
        for (m, want) in [(3 * l + 1, 4 * l + 2), (3 * l + 2, 2 * l + 2)] {
            let got = shifts(&Diagram::build(&weaving(m)));
            if got.iter().any(|&s| s != want) {
                return Err(format!("weaving m={m}: shifts {got:?}, want {want}"));
            }
        }
    }
    let d = Diagram::build(&preset("mixed-8").unwrap());
    let sigma = [2, 6, 5, 4, 7, 3, 0, 1];
    let tau: Vec<Option<usize>> = [1, 2, 6, 5, 6, 6, 3, 0].iter().map(|&x| Some(x)).collect();
    if d.sigma() != sigma || d.tau_vertices() != tau {
        return Err(format!("table: sigma {:?} tau {:?}", d.sigma(), d.tau_vertices()));
    }
    Ok("weaving m = 4, 5, 7, 8 and the 8-crossing table".into())
}

fn identities() -> Outcome {
    let mut reports = verify::q_identities();
    let (quadratic, signed) = verify::potential_identities(DEFAULT_SEED, 200);
    reports.extend([quadratic, signed, verify::skew_matrix(DEFAULT_SEED, 200)]);
    if let Some(r) = reports.iter().find(|r| r.name != "pochhammer sum" && r.checked < 200) {
        return Err(format!("{} ran only {} instances", r.name, r.checked));
    }
    from_reports(&reports)
}

fn skein() -> Outcome {
    let braids = corpus::random_braids(DEFAULT_SEED ^ 0x5e, 10, 4, 6);
    let r = verify::skein(&braids);
    if r.checked < 20 {
        return Err(format!("only {} triples", r.checked));
    }
    from_reports(&[r])
}

fn bracket() -> Outcome {
    let names = ["unknot", "hopf", "trefoil-right", "trefoil-left", "figure-eight", "w3-3", "w3-4", "w3-5"];
    for name in names {
        let b = preset(name).unwrap();
        let j = colored_jones_unframed(&b, 1, ModelChoice::Both).map_err(|e| e.to_string())?;
        let v = kauffman_jones(&b).map_err(|e| e.to_string())?;
        if j != v.scale(&oracle_sign(b.component_count()).into()) {
            return Err(format!("{name}: engine {j}, bracket {v}"));
        }
    }
    Ok(format!("{} links, J_1 = (-1)^(components-1) V", names.len()))
}

fn framing_and_reflection(corpus: &[BraidWord]) -> Outcome {
    let mut reports = vec![verify::framing(corpus, 1..=2), verify::reflection(corpus, 1..=2)];
    let mut pal = Report::default();
    pal.name = "weaving palindromes".into();
    for m in 2..=4 {
        for n in 1..=2 {
            pal.checked += 1;
            match colored_jones_unframed(&weaving(m), n, ModelChoice::Both) {
                Ok(v) if v.is_palindromic() => {}
                other => {
                    pal.failed += 1;
                    pal.failures.push(format!("m={m} n={n}: {other:?}"));
                }
            }
        }
    }
    reports.push(pal);
    from_reports(&reports)
}

fn parity(corpus: &[BraidWord]) -> Outcome {
    let mut checked = 0;
    for b in corpus {
        for n in 1..=3 {
            let v = colored_jones_unframed(b, n, ModelChoice::Both).map_err(|e| e.to_string())?;
            let want = expected_exponent_class(b.component_count(), n);
            if exponent_class(&v) != Some(want) {
                return Err(format!("[{b}] n={n}: {v} is not {want:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} values"))
}

fn main() -> ExitCode {
    let corpus = corpus::standard(DEFAULT_SEED);
    println!("corpus: {} braids, seed {DEFAULT_SEED:#x}", corpus.len());
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("anchor values", Box::new(anchors)),
        ("model equivalence", Box::new(|| model_equivalence(&corpus))),
        ("state-count slices", Box::new(state_slices)),
        ("jump-map closed forms", Box::new(jump_maps)),
        ("identity suites", Box::new(identities)),
        ("skein relations", Box::new(skein)),
        ("bracket oracle", Box::new(bracket)),
        ("framing and reflection", Box::new(|| framing_and_reflection(&corpus))),
        ("exponent parity", Box::new(|| parity(&corpus))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}) [{took:.2?}]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL {why} [{took:.2?}]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
