mod common;

use std::collections::{HashMap, HashSet};

use springer_points::schubert_points::SchubertPoints;
use springer_points::shapes::{dominance_leq, enumerate_row_strict, Partition};
use springer_points::verify::{
    check_closure, check_deletion_closure, check_dominance, check_maximality, check_theorem1, compare_poincare,
    scan, Claim, Family, Verdict,
};
use springer_points::weyl::{canonical_factorization, Permutation};

use common::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Springer polynomial by a direct pair count and the union by subwords.
#[allow(clippy::needless_range_loop)]
fn brute_polynomials(shape: &Partition) -> (Vec<u64>, Vec<u64>) {
    let mut springer = Vec::new();
    for t in enumerate_row_strict(shape) {
        let pos = t.positions();
        let n = t.size();
        let mut dim = 0;
        for a in 1..=n {
            let (ra, ca) = pos[a];
            for b in a + 1..=n {
                let (rb, cb) = pos[b];
                let below_or_left = (cb == ca && rb > ra) || cb < ca;
                let before_right = t.entry(ra, ca + 1).is_none_or(|r| b < r);
                if below_or_left && before_right {
                    dim += 1;
                }
            }
        }
        if springer.len() <= dim {
            springer.resize(dim + 1, 0);
        }
        springer[dim] += 1;
    }
    let union: HashSet<Permutation> = SchubertPoints::new(shape)
        .points()
        .iter()
        .flat_map(|w| subword_ideal(canonical_factorization(w).to_word().letters(), shape.size()))
        .collect();
    (springer, length_generating(&union))
}

#[test]
fn theorem1_against_brute_force() {
    for shape in partitions_up_to(6).into_iter().filter(is_valid) {
        let report = check_theorem1(&shape).unwrap();
        assert!(report.holds(), "{shape}");
        let (springer, union) = brute_polynomials(&shape);
        assert_eq!(report.polynomials.springer.as_ref().unwrap().coefficients(), springer.as_slice());
        assert_eq!(report.polynomials.schubert_all.as_ref().unwrap().coefficients(), union.as_slice());
        assert_eq!(report.polynomials.schubert_standard, report.polynomials.springer);
    }
}

#[test]
fn counterexample_polynomials_differ() {
    let shape = p("3,1,1,1");
    let (springer, union) = brute_polynomials(&shape);
    assert_ne!(springer, union);
    let report = compare_poincare(&shape);
    assert_eq!(report.verdict, Verdict::Fails);
    assert_eq!(report.polynomials.springer.as_ref().unwrap().coefficients(), springer.as_slice());
    assert_eq!(report.polynomials.schubert_all.as_ref().unwrap().coefficients(), union.as_slice());
    assert!(!report.witnesses.is_empty());
}

#[test]
fn closure_routes_agree() {
    for shape in partitions_up_to(6) {
        let closure = check_closure(&shape);
        let deletion = check_deletion_closure(&shape);
        assert_eq!(closure.verdict, deletion.verdict, "{shape}");
        assert_eq!(closure.holds(), is_valid(&shape), "{shape}");
    }
}

#[test]
fn deletion_witness_names_the_site() {
    let report = check_deletion_closure(&p("3,1,1,1"));
    let bad = word_product(&[5, 2, 3, 2, 1], 6);
    let from = word_product(&[3, 4, 5, 2, 3, 1], 6);
    let witness = report
        .witnesses
        .iter()
        .find(|w| w.deletion.as_ref().is_some_and(|d| d.point == from && d.string == 5 && d.pos == 2))
        .expect("the documented deletion fails");
    assert_eq!(witness.permutation, bad);
    assert_eq!(witness.word, "s5 s2 s3 s2 s1");
    assert_eq!(witness.ell.values(), &[1, 1, 2, 0, 1]);
}

#[test]
fn maximality_everywhere() {
    for shape in partitions_up_to(7) {
        assert!(check_maximality(&shape).holds(), "{shape}");
    }
}

#[test]
fn dominance_everywhere() {
    for n in 1..=7 {
        let shapes = Partition::all(n);
        let sets: HashMap<&Partition, SchubertPoints> = shapes.iter().map(|s| (s, SchubertPoints::new(s))).collect();
        for lambda in &shapes {
            for mu in &shapes {
                if dominance_leq(mu, lambda).unwrap() {
                    let report = check_dominance(lambda, mu).unwrap();
                    assert!(report.holds(), "{lambda} ≥ {mu}");
                    assert!(sets[lambda].points().iter().all(|w| sets[mu].contains(w)));
                } else {
                    assert!(check_dominance(lambda, mu).is_err());
                }
            }
        }
    }
}

#[test]
fn scan_orders_and_reproduces() {
    let a = scan(Family::All, 6, 1).unwrap();
    let b = scan(Family::All, 6, 3).unwrap();
    let json = |r: &[springer_points::VerificationReport]| r.iter().map(|x| x.to_json()).collect::<Vec<_>>();
    assert_eq!(json(&a), json(&b));
    let shapes: Vec<Partition> = a.iter().step_by(2).map(|r| r.shape.clone()).collect();
    assert_eq!(shapes, partitions_up_to(6));
    for pair in a.chunks(2) {
        assert_eq!((pair[0].claim, pair[1].claim), (Claim::Theorem1, Claim::Closure));
        assert_eq!(pair[0].holds(), is_valid(&pair[0].shape));
        assert_eq!(pair[1].holds(), is_valid(&pair[1].shape));
    }
}

#[test]
fn fails_always_has_witnesses() {
    for report in scan(Family::InvalidOnly, 7, 0).unwrap() {
        assert_eq!(report.verdict == Verdict::Fails, !report.witnesses.is_empty());
    }
}

#[test]
fn reports_round_trip_through_json() {
    let report = check_closure(&p("3,1,1,1"));
    let json = report.to_json();
    let back: springer_points::VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
    assert_eq!(back.to_json(), json);
}
