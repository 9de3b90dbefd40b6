//! Property tests for the series algebra, the q-Pochhammer builders, and
//! the partition conversions.

use num_bigint::BigInt;
use proptest::prelude::*;

use overschur::{
    construct, deconstruct, from_dmodular, insert, invert, poch_finite, poch_infinite, to_dmodular,
    BoundedTriple, Monomial, Overpartition, Params, Part, PartitionTriple, TruncatedSeries,
};

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(-8i64..=8, order + 1)
        .prop_map(|v| TruncatedSeries::from_coeffs(v.into_iter().map(BigInt::from).collect()))
}

fn raw_params() -> impl Strategy<Value = Params> {
    (3u64..=11, 1u64..=5).prop_filter_map("needs 2r < d", |(d, r)| Params::new(d, r).ok())
}

/// Sorted-descending vector of distinct values lo, lo + step, ...,
/// selected by a mask of the first `slots` progression members.
fn masked_progression(lo: u64, step: u64, slots: usize) -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(any::<bool>(), slots).prop_map(move |mask| {
        let mut picked: Vec<u64> = mask
            .iter()
            .enumerate()
            .filter(|(_, &keep)| keep)
            .map(|(i, _)| lo + step * i as u64)
            .collect();
        picked.reverse();
        picked
    })
}

fn triple() -> impl Strategy<Value = PartitionTriple> {
    let alpha = proptest::collection::vec(1u64..8, 0..5).prop_map(|v| {
        let mut parts: Vec<u64> = v.into_iter().map(|x| 2 * x + 1).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    });
    (
        alpha,
        masked_progression(1, 1, 10),
        masked_progression(1, 1, 10),
    )
        .prop_map(|(a, b, c)| PartitionTriple::new(a, b, c).unwrap())
}

fn bounded_triple() -> impl Strategy<Value = (Params, BoundedTriple)> {
    (raw_params(), 1u64..7).prop_flat_map(|(p, m)| {
        let (d, r) = (p.d(), p.r());
        let alpha = proptest::collection::vec(1u64..=m, 0..5).prop_map(move |v| {
            let mut parts: Vec<u64> = v.into_iter().map(|s| 2 * s * d).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            parts
        });
        let beta = masked_progression(r, d, m as usize);
        let gamma = masked_progression(d - r, d, m as usize);
        (alpha, beta, gamma)
            .prop_map(move |(a, b, c)| (p, BoundedTriple::new(m, a, b, c, p).unwrap()))
    })
}

/// Parts an overpartition must be built from for the diagram encoding to
/// exist: plain multiples of d, overlined values congruent to r, d - r,
/// or 0 mod d.
fn admissible_parts(p: Params) -> impl Strategy<Value = Vec<Part>> {
    let (d, r) = (p.d(), p.r());
    proptest::collection::vec((0u64..4, 1u64..6), 0..7).prop_map(move |choices| {
        choices
            .into_iter()
            .map(|(class, t)| match class {
                0 => Part::plain(t * d),
                1 => Part::overlined((t - 1) * d + r),
                2 => Part::overlined(t * d - r),
                _ => Part::overlined(t * d),
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn mul_commutes(a in series(20), b in series(20)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn mul_associates(a in series(14), b in series(14), c in series(14)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn mul_distributes_over_add(a in series(14), b in series(14), c in series(14)) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn poch_finite_extends_one_factor_at_a_time(
        step in 1usize..5,
        count in 0usize..6,
        e in 1usize..4,
        minus in any::<bool>(),
    ) {
        let order = 24;
        let arg = if minus { Monomial::minus(e) } else { Monomial::plus(e) };
        let sign = BigInt::from(if minus { 1 } else { -1 });
        let next = TruncatedSeries::one(order)
            .add(&TruncatedSeries::monomial(sign, e + step * count, order))
            .unwrap();
        let grown = poch_finite(arg, step, count, order).mul(&next).unwrap();
        prop_assert_eq!(poch_finite(arg, step, count + 1, order), grown);
    }

    #[test]
    fn inv_poch_cancels_the_finite_product(step in 1usize..6) {
        let order = 30;
        let count = order / step + 1;
        let product = poch_finite(Monomial::plus(step), step, count, order);
        let one = overschur::inv_poch_infinite(step, order).mul(&product).unwrap();
        prop_assert_eq!(one, TruncatedSeries::one(order));
    }

    #[test]
    fn negative_argument_products_expand_nonnegatively(p in raw_params()) {
        let (d, r) = (p.d() as usize, p.r() as usize);
        let product = poch_infinite(&[Monomial::minus(r), Monomial::minus(d - r)], d, 25).unwrap();
        prop_assert!(product.coeffs().iter().all(|c| c >= &BigInt::from(0)));
    }

    #[test]
    fn dmodular_encoding_round_trips(
        (p, parts) in raw_params().prop_flat_map(|p| (Just(p), admissible_parts(p)))
    ) {
        let lambda = match Overpartition::from_unsorted(parts) {
            Ok(lambda) => lambda,
            // A repeated overlined value is not an overpartition.
            Err(_) => return Ok(()),
        };
        let mu = to_dmodular(&lambda, p).unwrap();
        prop_assert_eq!(mu.weight(p), lambda.weight());
        prop_assert_eq!(from_dmodular(&mu, p).unwrap(), lambda);
    }

    #[test]
    fn insertion_round_trips(t in triple()) {
        prop_assert_eq!(invert(&insert(&t)).unwrap(), t);
    }

    #[test]
    fn insertion_preserves_weight(t in triple(), p in raw_params()) {
        prop_assert_eq!(insert(&t).weight(p), t.weight(p));
    }

    #[test]
    fn assembly_round_trips((p, t) in bounded_triple()) {
        let mu = construct(&t, p);
        prop_assert_eq!(mu.weight(p), t.weight(p));
        prop_assert_eq!(deconstruct(&mu, p).unwrap(), t);
    }
}
