//! Exhaustive check of the triple correspondence on small weights, driven
//! by a triple enumerator written independently of the library's family
//! walkers.

use std::collections::HashSet;

use overschur::enumerate::{count, enumerate, enumerate_modular};
use overschur::{decompose, insert, invert, FamilyId, Params, PartitionTriple};

/// Partitions into odd parts of size at least 3 with largest part at most
/// max_part, where a part a costs (a - 1)d boxes of the budget.
fn alphas(max_part: u64, budget: u64, d: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    let mut a = 3;
    while a <= max_part && (a - 1) * d <= budget {
        for rest in alphas(a, budget - (a - 1) * d, d) {
            let mut parts = Vec::with_capacity(rest.len() + 1);
            parts.push(a);
            parts.extend(rest);
            out.push(parts);
        }
        a += 2;
    }
    out
}

/// Partitions into distinct parts with largest at most max_part, under an
/// increasing cost function.
fn distincts(max_part: u64, budget: u64, cost: &impl Fn(u64) -> u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    let mut k = 1;
    while k <= max_part && cost(k) <= budget {
        for rest in distincts(k - 1, budget - cost(k), cost) {
            let mut parts = Vec::with_capacity(rest.len() + 1);
            parts.push(k);
            parts.extend(rest);
            out.push(parts);
        }
        k += 1;
    }
    out
}

/// Every valid triple of weight at most budget, grouped by weight.
fn triples_by_weight(params: Params, budget: u64) -> Vec<Vec<PartitionTriple>> {
    let (d, r) = (params.d(), params.r());
    let beta_cost = |k: u64| (k - 1) * d + r;
    let gamma_cost = |k: u64| k * d - r;
    let weigh =
        |parts: &[u64], cost: &dyn Fn(u64) -> u64| -> u64 { parts.iter().map(|&k| cost(k)).sum() };
    let alpha_cost = |a: u64| (a - 1) * d;
    let mut buckets = vec![Vec::new(); budget as usize + 1];
    for alpha in alphas(budget / d + 1, budget, d) {
        let wa = weigh(&alpha, &alpha_cost);
        for beta in distincts(budget / d + 1, budget - wa, &beta_cost) {
            let wb = weigh(&beta, &beta_cost);
            for gamma in distincts(budget / d + 1, budget - wa - wb, &gamma_cost) {
                let wg = weigh(&gamma, &gamma_cost);
                let t = PartitionTriple::new(alpha.clone(), beta.clone(), gamma).unwrap();
                assert_eq!(t.weight(params), wa + wb + wg);
                buckets[(wa + wb + wg) as usize].push(t);
            }
        }
    }
    buckets
}

fn grid() -> [(Params, u64); 3] {
    [
        (Params::new(3, 1).unwrap(), 30),
        (Params::new(5, 2).unwrap(), 34),
        (Params::new(7, 2).unwrap(), 38),
    ]
}

#[test]
fn insert_then_invert_is_the_identity() {
    for (p, budget) in grid() {
        for bucket in triples_by_weight(p, budget) {
            for t in bucket {
                let mu = insert(&t);
                assert_eq!(mu.weight(p), t.weight(p));
                assert_eq!(invert(&mu).unwrap(), t, "triple {t}");
            }
        }
    }
}

#[test]
fn insertion_images_fill_the_gap_family_exactly() {
    for (p, budget) in grid() {
        for (n, bucket) in triples_by_weight(p, budget).into_iter().enumerate() {
            let mut images: Vec<_> = bucket.iter().map(insert).collect();
            images.sort();
            let before = images.len();
            images.dedup();
            assert_eq!(images.len(), before, "insertion must be injective at {n}");
            let family = enumerate_modular(FamilyId::Bbar, p, n as u64);
            assert_eq!(images, family, "images against bbar at weight {n}");
            assert_eq!(
                before as u64,
                count(FamilyId::Bbar, p, n as u64),
                "triple count against bbar at weight {n}"
            );
        }
    }
}

#[test]
fn decompose_matches_the_independent_triples() {
    for (p, budget) in grid() {
        for (n, bucket) in triples_by_weight(p, budget).into_iter().enumerate() {
            let expected: HashSet<PartitionTriple> = bucket.into_iter().collect();
            let mut seen = HashSet::new();
            for lambda in enumerate(FamilyId::Ebar, p, n as u64) {
                let t = decompose(&lambda, p).unwrap();
                assert_eq!(t.weight(p), n as u64);
                assert!(expected.contains(&t), "unexpected triple {t} at weight {n}");
                assert!(seen.insert(t), "decompose must be injective at {n}");
            }
            assert_eq!(seen.len(), expected.len(), "ebar against triples at {n}");
        }
    }
}
