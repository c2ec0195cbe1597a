use std::collections::HashMap;

use qbrauer::diagram::{
    double_factorial_count, parse_diagram, rho_compose, sigma_reduce, triple_decompose, BrauerDiagram,
};
use qbrauer::symgroup::{enumerate_b_sets, in_tail_group, BSet, Perm};

fn w(n: usize, word: &[usize]) -> Perm {
    Perm::from_word(n, word)
}

/// Minimal l(w1) + l(w2) over all factorizations d = w1 e_(k) w2.
fn brute_force_lengths(n: usize) -> HashMap<BrauerDiagram, usize> {
    let perms = Perm::all(n);
    let mut best: HashMap<BrauerDiagram, usize> = HashMap::new();
    for k in 0..=n / 2 {
        let e = BrauerDiagram::e_k(n, k);
        for w1 in &perms {
            let left = BrauerDiagram::from_perm(w1).concat(&e).0;
            for w2 in &perms {
                let d = left.concat(&BrauerDiagram::from_perm(w2)).0;
                let l = w1.length() + w2.length();
                let slot = best.entry(d).or_insert(usize::MAX);
                *slot = (*slot).min(l);
            }
        }
    }
    best
}

#[test]
fn counts_are_double_factorials() {
    for n in 1..=7 {
        let all = BrauerDiagram::enumerate(n, None);
        assert_eq!(all.len() as u64, double_factorial_count(n));
        let by_rank: usize = (0..=n / 2).map(|k| BrauerDiagram::enumerate(n, Some(k)).len()).sum();
        assert_eq!(by_rank, all.len());
    }
    assert_eq!(BrauerDiagram::enumerate(4, Some(2)).len(), 9);
}

#[test]
fn length_matches_brute_force() {
    for n in 1..=5 {
        let best = brute_force_lengths(n);
        assert_eq!(best.len() as u64, double_factorial_count(n));
        for (d, l) in best {
            assert_eq!(d.length(), l, "diagram {d}");
        }
    }
}

#[test]
fn concat_examples() {
    let e = BrauerDiagram::e_k(3, 1);
    assert_eq!(e.concat(&e), (e, 1));
    let id = BrauerDiagram::identity(3);
    assert_eq!(id.concat(&e), (e, 0));
    let s2 = BrauerDiagram::simple(3, 2);
    let (d, loops) = e.concat(&s2).0.concat(&e);
    assert_eq!((d, loops), (e, 0));
}

#[test]
fn relation_seven_has_no_loops() {
    // e_(k+1) = e_(1) s_2 ... s_{2k+1} s_1 ... s_{2k} e_(k)
    for n in 4..=8 {
        for k in 1..n / 2 {
            let mut word: Vec<usize> = (2..=2 * k + 1).collect();
            word.extend(1..=2 * k);
            let mid = BrauerDiagram::from_perm(&w(n, &word));
            let (a, l1) = BrauerDiagram::e_k(n, 1).concat(&mid);
            let (b, l2) = a.concat(&BrauerDiagram::e_k(n, k));
            assert_eq!(b, BrauerDiagram::e_k(n, k + 1));
            assert_eq!(l1 + l2, 0);
        }
    }
}

#[test]
fn length_example_12e21() {
    let n = 3;
    let d = BrauerDiagram::from_perm(&w(n, &[1, 2]))
        .concat(&BrauerDiagram::e_k(n, 1))
        .0
        .concat(&BrauerDiagram::from_perm(&w(n, &[2, 1])))
        .0;
    assert_eq!(d.length(), 4);
}

#[test]
fn sigma_reduce_example_n7() {
    let n = 7;
    let mut word = vec![6];
    word.extend(1..=5);
    word.extend(2..=4);
    word.push(2);
    let r = sigma_reduce(&w(n, &word), 3);
    assert_eq!(r.sigma, w(n, &[6, 4, 2]));
    assert_eq!(r.sigma.length(), r.witness.factor_lengths());
    assert_eq!(sigma_reduce(&w(3, &[1]), 1).sigma, Perm::identity(3));
}

#[test]
fn sigma_reduce_all_small() {
    for n in 2..=5 {
        for k in 0..=n / 2 {
            let bstar = enumerate_b_sets(n, k, BSet::BstarK).unwrap();
            let e = BrauerDiagram::e_k(n, k);
            for x in Perm::all(n) {
                let r = sigma_reduce(&x, k);
                assert!(bstar.contains(&r.sigma));
                let lhs = BrauerDiagram::from_perm(&x).concat(&e).0;
                let rhs = BrauerDiagram::from_perm(&r.sigma).concat(&e).0;
                assert_eq!(lhs, rhs);
                assert!(r.sigma.length() <= x.length());
                assert_eq!(rhs.length(), r.sigma.length());
            }
            for s in &bstar {
                assert_eq!(sigma_reduce(s, k).sigma, *s);
            }
        }
    }
}

#[test]
fn triples_round_trip() {
    for n in 1..=6 {
        for d in BrauerDiagram::enumerate(n, None) {
            let t = triple_decompose(&d);
            assert_eq!(rho_compose(&t), d, "diagram {d}");
            assert_eq!(t.omega1.length() + t.omega_d.length() + t.omega2.length(), d.length());
            if t.k > 0 {
                let bkn = enumerate_b_sets(n, t.k, BSet::BstarKN).unwrap();
                assert!(bkn.contains(&t.omega1));
                assert!(bkn.contains(&t.omega2.inverse()), "{d} {:?}", t);
                assert!(in_tail_group(&t.omega_d, t.k));
            }
        }
    }
}

#[test]
fn triple_example_top_arc_13() {
    let d = parse_diagram("{1-3, 2-3', 1'-2'}", 3).unwrap();
    let t = triple_decompose(&d);
    assert_eq!((t.omega1, t.k), (w(3, &[2]), 1));
    assert!(t.omega_d.is_identity() && t.omega2.is_identity());
}

#[test]
fn rho_is_bijective() {
    for n in 2..=5 {
        for k in 1..=n / 2 {
            let left = enumerate_b_sets(n, k, BSet::BstarKN).unwrap();
            let right = enumerate_b_sets(n, k, BSet::BKN).unwrap();
            let mids: Vec<Perm> = Perm::all(n).into_iter().filter(|x| in_tail_group(x, k)).collect();
            let mut seen = std::collections::HashSet::new();
            for a in &left {
                for m in &mids {
                    for b in &right {
                        let t = qbrauer::diagram::DiagramTriple { omega1: *a, omega_d: *m, omega2: *b, k };
                        let d = rho_compose(&t);
                        assert_eq!(triple_decompose(&d), t);
                        assert!(seen.insert(d));
                    }
                }
            }
            assert_eq!(seen.len(), BrauerDiagram::enumerate(n, Some(k)).len());
        }
    }
}

#[test]
fn text_round_trip() {
    let e = BrauerDiagram::e_k(3, 1);
    assert_eq!(e.to_string(), "{1-2, 1'-2', 3-3'}");
    for d in BrauerDiagram::enumerate(4, None) {
        assert_eq!(parse_diagram(&d.to_string(), 4).unwrap(), d);
    }
    assert!(parse_diagram("{1-2, 1-3'}", 3).is_err());
    assert!(parse_diagram("{1-2, 3-1'}", 3).is_err());
}
