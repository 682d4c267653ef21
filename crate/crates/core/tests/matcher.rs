use gpav_core::perm::next_permutation;
use gpav_core::{order_isomorphic, parse_pattern, GeneralizedPattern};

fn all_perms(n: usize) -> Vec<Vec<u8>> {
    let mut w: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![w.clone()];
    while next_permutation(&mut w) {
        out.push(w.clone());
    }
    out
}

// Every pattern of length k: each word with each of the 2^(k-1) flag sets.
fn all_patterns(k: usize) -> Vec<GeneralizedPattern> {
    let mut out = Vec::new();
    for word in all_perms(k) {
        for mask in 0u32..1 << (k - 1) {
            let flags = (0..k - 1).map(|t| mask >> t & 1 == 1).collect();
            out.push(GeneralizedPattern::new(word.clone(), flags).unwrap());
        }
    }
    out
}

// Increasing index tuples of length k in 0..n.
fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

// Direct reading of the occurrence definition.
fn reference_count(p: &GeneralizedPattern, pi: &[u8]) -> u64 {
    tuples(pi.len(), p.len())
        .into_iter()
        .filter(|idx| {
            let adjacent_ok = p
                .adjacency()
                .iter()
                .enumerate()
                .all(|(t, &adj)| !adj || idx[t + 1] == idx[t] + 1);
            let letters: Vec<u8> = idx.iter().map(|&i| pi[i]).collect();
            adjacent_ok && order_isomorphic(&letters, p.word())
        })
        .count() as u64
}

#[test]
fn matcher_agrees_with_tuple_enumeration() {
    for k in 1..=4 {
        let patterns = all_patterns(k);
        for n in 0..=6 {
            for pi in all_perms(n) {
                for p in &patterns {
                    let expected = reference_count(p, &pi);
                    assert_eq!(p.count_occurrences(&pi), expected, "{p} in {pi:?}");
                    assert_eq!(p.occurs_in(&pi), expected > 0, "{p} in {pi:?}");
                }
            }
        }
    }
}

#[test]
fn classical_matcher_is_subsequence_test() {
    for k in 1..=4 {
        for word in all_perms(k) {
            let p = GeneralizedPattern::classical(word.clone()).unwrap();
            for n in 0..=6 {
                for pi in all_perms(n) {
                    let has = tuples(n, k).into_iter().any(|idx| {
                        let letters: Vec<u8> = idx.iter().map(|&i| pi[i]).collect();
                        order_isomorphic(&letters, &word)
                    });
                    assert_eq!(p.occurs_in(&pi), has, "{p} in {pi:?}");
                }
            }
        }
    }
}

#[test]
fn adjacency_only_removes_occurrences() {
    for k in 1..=4 {
        for p in all_patterns(k) {
            let classical = GeneralizedPattern::classical(p.word().to_vec()).unwrap();
            for n in 0..=6 {
                for pi in all_perms(n) {
                    if !classical.occurs_in(&pi) {
                        assert!(!p.occurs_in(&pi), "{p} in {pi:?}");
                    }
                    assert!(p.count_occurrences(&pi) <= classical.count_occurrences(&pi));
                }
            }
        }
    }
}

#[test]
fn parse_format_round_trip_exhaustive() {
    for k in 1..=5 {
        for p in all_patterns(k) {
            let text = p.to_string();
            assert_eq!(parse_pattern(&text).unwrap(), p, "{text}");
            assert_eq!(parse_pattern(&text).unwrap().to_string(), text);
        }
    }
}
