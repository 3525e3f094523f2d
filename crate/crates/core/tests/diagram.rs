use cjones::braid::{weaving, BraidWord};
use cjones::diagram::ArcId;
use cjones::Diagram;

/// `tau(k) - k` in sigma-cycle labels, one entry per vertex.
fn cycle_shifts(d: &Diagram) -> Vec<usize> {
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
            ArcId::Circle(_) => panic!("weaving knots have no circles"),
        })
        .collect()
}

#[test]
fn weaving_jump_map_closed_forms() {
    for l in 1..=3usize {
        let d = Diagram::build(&weaving(3 * l + 1));
        assert_eq!(d.crossing_count(), 6 * l + 2);
        assert!(cycle_shifts(&d).iter().all(|&s| s == 4 * l + 2), "m = {}", 3 * l + 1);

        let d = Diagram::build(&weaving(3 * l + 2));
        assert_eq!(d.crossing_count(), 6 * l + 4);
        assert!(cycle_shifts(&d).iter().all(|&s| s == 2 * l + 2), "m = {}", 3 * l + 2);
    }
}

#[test]
fn weaving_signs_alternate_along_the_cycle() {
    for m in [4, 5, 7, 8] {
        let d = Diagram::build(&weaving(m));
        let signs: Vec<i8> = d.cycle_order(0).iter().map(|&v| d.crossings()[v].sign).collect();
        assert!(signs.iter().enumerate().all(|(k, &e)| e == if k % 2 == 0 { -1 } else { 1 }), "m = {m}");
    }
}

#[test]
fn weaving_links_have_three_relations() {
    let d = Diagram::build(&weaving(6));
    assert_eq!(d.component_count(), 3);
    assert_eq!(d.cycle_relations().len(), 3);
    assert!(d.is_tau_bijective());
}

#[test]
fn eight_crossing_table() {
    let d = Diagram::build(&BraidWord::parse("-1 -1 -1 2 1 2 2 -1").unwrap());
    let sigma = [2, 6, 5, 4, 7, 3, 0, 1];
    let tau = [1, 2, 6, 5, 6, 6, 3, 0];
    assert_eq!(d.sigma(), &sigma);
    assert_eq!(d.tau_vertices(), tau.iter().map(|&x| Some(x)).collect::<Vec<_>>());
    assert_eq!(d.cycle_order(0), vec![0, 2, 5, 3, 4, 7, 1, 6]);
    let dump = d.dump();
    for (v, line) in dump.lines().skip(1).take(8).enumerate() {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols[..3], [v.to_string(), sigma[v].to_string(), tau[v].to_string()]);
    }
}

#[test]
fn sigma_is_a_permutation_and_tau_covers_arcs() {
    for s in ["1 -2 1", "2 2 -1 3 -2 1", "1 -1", "-1 2 -1 2 -1 2", "1 2 3 -1 -2 -3"] {
        let d = Diagram::build(&BraidWord::parse(s).unwrap());
        let mut seen = vec![false; d.crossing_count()];
        for &w in d.sigma() {
            assert!(!seen[w], "{s}");
            seen[w] = true;
        }
        let covered: usize = d.arc_ids().iter().map(|&a| d.tau_preimage(a).len()).sum();
        assert_eq!(covered, d.crossing_count(), "{s}");
    }
}
