//! Brute-force enumeration of the six families.
//!
//! Every family here is closed under removing its largest part, so a
//! single depth-first walk that grows objects from the smallest part
//! upward visits each member of weight at most the budget exactly once.
//! Counting functions ride that walk without materializing anything; the
//! enumerate functions collect the exact-weight hits and sort them.
//!
//! The classical families and ebar are generated over part values; bbar
//! and cbar are generated natively over diagram columns, picking each next
//! length difference from the arithmetic progression the smaller column's
//! label allows.
//!
//! Returned sequences are ordered lexicographically on the part list, the
//! same order as the serialized form.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::family::FamilyId;
use crate::partition::{
    matrix_a_prime, DModularOverpartition, DModularPart, Label, Overpartition, Params, Part, LABELS,
};
use crate::series::{BivariateTable, TruncatedSeries};

// ---------------------------------------------------------------------------
// walkers
// ---------------------------------------------------------------------------

/// b and c: parts congruent to r, d - r, or 0 mod d, ascending with
/// difference at least d, strictly more above a multiple of d. min_first
/// bounds the smallest part (1 for b, d + 1 for c).
fn walk_gap_values(
    params: Params,
    min_first: u64,
    budget: u64,
    stack: &mut Vec<u64>,
    weight: u64,
    visit: &mut impl FnMut(&[u64], u64),
) {
    visit(stack, weight);
    let (d, r) = (params.d(), params.r());
    let start = match stack.last() {
        None => min_first,
        Some(&prev) => prev + d + u64::from(prev % d == 0),
    };
    let remaining = budget - weight;
    for v in start..=remaining {
        let m = v % d;
        if m == r || m == d - r || m == 0 {
            stack.push(v);
            walk_gap_values(params, min_first, budget, stack, weight + v, visit);
            stack.pop();
        }
    }
}

/// e: distinct ascending parts congruent to r or d - r mod d.
fn walk_distinct_values(
    params: Params,
    budget: u64,
    stack: &mut Vec<u64>,
    weight: u64,
    visit: &mut impl FnMut(&[u64], u64),
) {
    visit(stack, weight);
    let (d, r) = (params.d(), params.r());
    let start = stack.last().map_or(1, |&prev| prev + 1);
    let remaining = budget - weight;
    for v in start..=remaining {
        let m = v % d;
        if m == r || m == d - r {
            stack.push(v);
            walk_distinct_values(params, budget, stack, weight + v, visit);
            stack.pop();
        }
    }
}

/// ebar: ascending parts, overlined ones congruent to r or d - r mod d
/// without repetition, non-overlined multiples of 2d with repetition.
/// The two pools are residue-disjoint, so equal neighbors are always the
/// repeatable kind.
fn walk_ebar_values(
    params: Params,
    budget: u64,
    stack: &mut Vec<Part>,
    weight: u64,
    visit: &mut impl FnMut(&[Part], u64),
) {
    visit(stack, weight);
    let (d, r) = (params.d(), params.r());
    let remaining = budget - weight;
    let (min_over, min_plain) = match stack.last() {
        None => (1, 2 * d),
        Some(prev) => {
            if prev.overlined {
                (prev.value + 1, prev.value + 1)
            } else {
                (prev.value + 1, prev.value)
            }
        }
    };
    for v in min_over..=remaining {
        let m = v % d;
        if m == r || m == d - r {
            stack.push(Part::overlined(v));
            walk_ebar_values(params, budget, stack, weight + v, visit);
            stack.pop();
        }
    }
    let mut v = min_plain.max(2 * d);
    v = v.next_multiple_of(2 * d);
    while v <= remaining {
        stack.push(Part::plain(v));
        walk_ebar_values(params, budget, stack, weight + v, visit);
        stack.pop();
        v += 2 * d;
    }
}

/// bbar and cbar, natively over diagram columns in ascending part order.
/// The first column's length parity is the family's smallest-length rule;
/// every later length difference runs over need, need + 2, need + 4, ...
/// for the need keyed to the smaller column's label. Difference 0 only
/// occurs above label d, the minimum at its length, so the stack stays
/// sorted without an extra check.
fn walk_modular(
    params: Params,
    first_odd: bool,
    budget: u64,
    stack: &mut Vec<DModularPart>,
    weight: u64,
    visit: &mut impl FnMut(&[DModularPart], u64),
) {
    visit(stack, weight);
    let d = params.d();
    let remaining = budget - weight;
    match stack.last().copied() {
        None => {
            let mut length = if first_odd { 1 } else { 2 };
            // label d is the cheapest at any length
            while (length - 1) * d <= remaining {
                for label in LABELS {
                    if length == 1 && label == Label::D {
                        continue; // weight-zero column
                    }
                    let col = DModularPart { length, label };
                    let w = col.weight(params);
                    if w <= remaining {
                        stack.push(col);
                        walk_modular(params, first_odd, budget, stack, weight + w, visit);
                        stack.pop();
                    }
                }
                length += 2;
            }
        }
        Some(prev) => {
            let mut gap = matrix_a_prime(Label::D, prev.label);
            loop {
                let length = prev.length + gap;
                if (length - 1) * d > remaining {
                    break;
                }
                for label in LABELS {
                    let col = DModularPart { length, label };
                    let w = col.weight(params);
                    if w <= remaining {
                        stack.push(col);
                        walk_modular(params, first_odd, budget, stack, weight + w, visit);
                        stack.pop();
                    }
                }
                gap += 2;
            }
        }
    }
}

fn visit_family_values(
    family: FamilyId,
    params: Params,
    budget: u64,
    visit: &mut impl FnMut(&[Part], u64),
) {
    match family {
        FamilyId::B | FamilyId::C => {
            let min_first = if family == FamilyId::C {
                params.d() + 1
            } else {
                1
            };
            let mut visit_values = |vals: &[u64], w: u64| {
                let parts: Vec<Part> = vals.iter().map(|&v| Part::plain(v)).collect();
                visit(&parts, w);
            };
            walk_gap_values(
                params,
                min_first,
                budget,
                &mut Vec::new(),
                0,
                &mut visit_values,
            );
        }
        FamilyId::E => {
            let mut visit_values = |vals: &[u64], w: u64| {
                let parts: Vec<Part> = vals.iter().map(|&v| Part::plain(v)).collect();
                visit(&parts, w);
            };
            walk_distinct_values(params, budget, &mut Vec::new(), 0, &mut visit_values);
        }
        FamilyId::Ebar => walk_ebar_values(params, budget, &mut Vec::new(), 0, visit),
        FamilyId::Bbar | FamilyId::Cbar => {
            let mut convert = |cols: &[DModularPart], w: u64| {
                let mut parts: Vec<Part> = cols
                    .iter()
                    .map(|c| Part {
                        value: c.weight(params),
                        overlined: c.overlined(),
                    })
                    .collect();
                // column order and value order can disagree on equal
                // values (overlined d against plain d), so re-sort
                parts.sort_unstable();
                visit(&parts, w);
            };
            walk_modular(
                params,
                family == FamilyId::Bbar,
                budget,
                &mut Vec::new(),
                0,
                &mut convert,
            );
        }
    }
}

// ---------------------------------------------------------------------------
// public enumeration surface
// ---------------------------------------------------------------------------

/// All members of the family with weight exactly n, in lexicographic
/// order of the part list.
pub fn enumerate(family: FamilyId, params: Params, n: u64) -> Vec<Overpartition> {
    let mut out = Vec::new();
    visit_family_values(family, params, n, &mut |parts, w| {
        if w == n {
            // walkers build smallest-first; canonical order is largest-first
            let mut desc = parts.to_vec();
            desc.reverse();
            out.push(Overpartition::new(desc).expect("walker output is canonical"));
        }
    });
    out.sort_unstable();
    out
}

/// bbar and cbar members of weight exactly n in diagram form, in
/// lexicographic order of the column list.
pub fn enumerate_modular(family: FamilyId, params: Params, n: u64) -> Vec<DModularOverpartition> {
    assert!(
        family.barred_gap(),
        "diagram enumeration is defined for bbar and cbar only"
    );
    let mut out = Vec::new();
    walk_modular(
        params,
        family == FamilyId::Bbar,
        n,
        &mut Vec::new(),
        0,
        &mut |cols, w| {
            if w == n {
                let mut desc = cols.to_vec();
                desc.reverse();
                out.push(DModularOverpartition::new(desc).expect("walker output is sorted"));
            }
        },
    );
    out.sort_unstable_by(|a, b| a.parts().cmp(b.parts()));
    out
}

/// Number of members of weight exactly n.
pub fn count(family: FamilyId, params: Params, n: u64) -> u64 {
    let mut c = 0;
    visit_family_values(family, params, n, &mut |_, w| {
        if w == n {
            c += 1;
        }
    });
    c
}

/// Counts for every weight 0..=max_n in one walk.
pub fn count_table(family: FamilyId, params: Params, max_n: u64) -> Vec<u64> {
    let mut counts = vec![0u64; usize::try_from(max_n).unwrap() + 1];
    visit_family_values(family, params, max_n, &mut |_, w| {
        counts[usize::try_from(w).unwrap()] += 1;
    });
    counts
}

/// The counting generating function of the family, truncated at max_n.
pub fn counting_series(family: FamilyId, params: Params, max_n: u64) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(
        count_table(family, params, max_n)
            .into_iter()
            .map(BigInt::from)
            .collect(),
    )
}

/// Members of weight exactly n, split by number of parts.
pub fn count_by_parts(family: FamilyId, params: Params, n: u64) -> BTreeMap<usize, u64> {
    let mut counts = BTreeMap::new();
    visit_family_values(family, params, n, &mut |parts, w| {
        if w == n {
            *counts.entry(parts.len()).or_insert(0) += 1;
        }
    });
    counts
}

/// Joint refinement: entry (m, n) counts members of weight n with exactly
/// m parts, for all n <= max_n. Members with more than max_m parts are
/// ignored.
pub fn count_parts_table(
    family: FamilyId,
    params: Params,
    max_m: usize,
    max_n: u64,
) -> BivariateTable {
    let mut raw = vec![vec![0u64; usize::try_from(max_n).unwrap() + 1]; max_m + 1];
    visit_family_values(family, params, max_n, &mut |parts, w| {
        if parts.len() <= max_m {
            raw[parts.len()][usize::try_from(w).unwrap()] += 1;
        }
    });
    let mut table = BivariateTable::zero(max_m, usize::try_from(max_n).unwrap());
    for (m, row) in raw.iter().enumerate() {
        for (n, &c) in row.iter().enumerate() {
            if c != 0 {
                table.set(m, n, BigInt::from(c));
            }
        }
    }
    table
}

// ---------------------------------------------------------------------------
// admissible universes (for cross-validation and fault injection)
// ---------------------------------------------------------------------------

/// Visits every overpartition of weight <= budget whose parts all lie in
/// the four encodable classes: overlined congruent to r, d - r, or 0
/// mod d, non-overlined divisible by d. No gap conditions are imposed.
/// This is the search space on which the value route and the diagram
/// route of the barred families are compared.
pub fn visit_admissible_values(
    params: Params,
    budget: u64,
    visit: &mut impl FnMut(&Overpartition),
) {
    fn rec(
        params: Params,
        budget: u64,
        stack: &mut Vec<Part>,
        weight: u64,
        visit: &mut impl FnMut(&Overpartition),
    ) {
        let mut desc = stack.clone();
        desc.reverse();
        visit(&Overpartition::new(desc).expect("stack is canonical"));
        let (d, r) = (params.d(), params.r());
        let remaining = budget - weight;
        // ascending by (value, overlined): a plain part may repeat, an
        // overlined one may not; the plain copy of a value precedes the
        // overlined copy.
        let (min_plain, min_over) = match stack.last() {
            None => (d, 1),
            Some(prev) => {
                if prev.overlined {
                    (prev.value + 1, prev.value + 1)
                } else {
                    (prev.value, prev.value)
                }
            }
        };
        let mut v = min_plain.max(d).next_multiple_of(d);
        while v <= remaining {
            stack.push(Part::plain(v));
            rec(params, budget, stack, weight + v, visit);
            stack.pop();
            v += d;
        }
        for v in min_over..=remaining {
            let m = v % d;
            if m == r || m == d - r || m == 0 {
                stack.push(Part::overlined(v));
                rec(params, budget, stack, weight + v, visit);
                stack.pop();
            }
        }
    }
    rec(params, budget, &mut Vec::new(), 0, visit);
}

/// Visits every d-modular overpartition of weight <= budget: any
/// non-increasing column sequence without the weight-zero column, no
/// further conditions. The weight-zero column must stay excluded or the
/// universe would be infinite.
pub fn visit_admissible_modular(
    params: Params,
    budget: u64,
    visit: &mut impl FnMut(&DModularOverpartition),
) {
    fn rec(
        params: Params,
        budget: u64,
        stack: &mut Vec<DModularPart>,
        weight: u64,
        visit: &mut impl FnMut(&DModularOverpartition),
    ) {
        let mut desc = stack.clone();
        desc.reverse();
        visit(&DModularOverpartition::new(desc).expect("stack is sorted"));
        let d = params.d();
        let remaining = budget - weight;
        let floor = stack.last().copied();
        let start_len = floor.map_or(1, |c| c.length);
        let mut length = start_len;
        while (length - 1) * d <= remaining {
            for label in LABELS {
                if length == 1 && label == Label::D {
                    continue;
                }
                if let Some(prev) = floor {
                    if (length, label) < (prev.length, prev.label) {
                        continue;
                    }
                }
                let col = DModularPart { length, label };
                let w = col.weight(params);
                if w <= remaining {
                    stack.push(col);
                    rec(params, budget, stack, weight + w, visit);
                    stack.pop();
                }
            }
            length += 1;
        }
    }
    rec(params, budget, &mut Vec::new(), 0, visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{check_family, FAMILIES};
    use crate::partition::{from_dmodular, Params};

    fn params(d: u64, r: u64) -> Params {
        Params::new(d, r).unwrap()
    }

    fn values(lambda: &Overpartition) -> Vec<(u64, bool)> {
        lambda
            .parts()
            .iter()
            .map(|p| (p.value, p.overlined))
            .collect()
    }

    #[test]
    fn weight_zero_has_the_empty_member() {
        let p = params(7, 2);
        for &f in &FAMILIES {
            let objs = enumerate(f, p, 0);
            assert_eq!(objs.len(), 1);
            assert!(objs[0].is_empty());
        }
    }

    #[test]
    fn gap_family_small_case() {
        let p = params(3, 1);
        let objs = enumerate(FamilyId::B, p, 6);
        assert_eq!(objs.len(), 2);
        assert_eq!(values(&objs[0]), vec![(5, false), (1, false)]);
        assert_eq!(values(&objs[1]), vec![(6, false)]);
    }

    #[test]
    fn distinct_and_gap_counts_agree_at_nine() {
        let p = params(3, 1);
        assert_eq!(count(FamilyId::E, p, 9), 3);
        assert_eq!(count(FamilyId::B, p, 9), 3);
    }

    #[test]
    fn ebar_members_at_fourteen() {
        let p = params(7, 2);
        let objs = enumerate(FamilyId::Ebar, p, 14);
        let got: Vec<Vec<(u64, bool)>> = objs.iter().map(values).collect();
        assert_eq!(
            got,
            vec![
                vec![(9, true), (5, true)],
                vec![(12, true), (2, true)],
                vec![(14, false)],
            ]
        );
    }

    #[test]
    fn bbar_diagrams_at_fourteen() {
        let p = params(7, 2);
        let objs = enumerate_modular(FamilyId::Bbar, p, 14);
        let got: Vec<Vec<(u64, Label)>> = objs
            .iter()
            .map(|mu| mu.parts().iter().map(|c| (c.length, c.label)).collect())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![(2, Label::R), (1, Label::DmR)],
                vec![(2, Label::DmR), (1, Label::R)],
                vec![(3, Label::D)],
            ]
        );
    }

    #[test]
    fn count_matches_enumerate() {
        let p = params(7, 2);
        for &f in &FAMILIES {
            for n in 0..=25 {
                assert_eq!(
                    count(f, p, n),
                    enumerate(f, p, n).len() as u64,
                    "family {f} at weight {n}"
                );
            }
        }
    }

    #[test]
    fn count_table_matches_pointwise_counts() {
        let p = params(3, 1);
        for &f in &FAMILIES {
            let table = count_table(f, p, 20);
            for n in 0..=20u64 {
                assert_eq!(
                    table[n as usize],
                    count(f, p, n),
                    "family {f} at weight {n}"
                );
            }
        }
    }

    #[test]
    fn enumerated_objects_pass_membership() {
        let p = params(7, 2);
        for &f in &FAMILIES {
            for n in 0..=22 {
                for obj in enumerate(f, p, n) {
                    assert_eq!(obj.weight(), n);
                    assert!(
                        check_family(&obj, f, p).unwrap(),
                        "family {f}: {obj} fails its own membership"
                    );
                }
            }
        }
    }

    #[test]
    fn modular_and_value_enumeration_agree() {
        let p = params(9, 4);
        for n in 0..=30 {
            let via_modular: Vec<Overpartition> = enumerate_modular(FamilyId::Bbar, p, n)
                .iter()
                .map(|mu| from_dmodular(mu, p).unwrap())
                .collect();
            let direct = enumerate(FamilyId::Bbar, p, n);
            let mut sorted = via_modular;
            sorted.sort_unstable();
            assert_eq!(sorted, direct);
        }
    }

    #[test]
    fn cbar_by_parts_at_d() {
        let p = params(7, 2);
        let by_parts = count_by_parts(FamilyId::Cbar, p, 7);
        assert_eq!(by_parts, BTreeMap::from([(1, 1)]));
        // the only member is the single column of length 2, label d
        let objs = enumerate_modular(FamilyId::Cbar, p, 7);
        assert_eq!(objs.len(), 1);
        assert_eq!(
            objs[0].parts(),
            &[DModularPart {
                length: 2,
                label: Label::D
            }]
        );
    }

    #[test]
    fn parts_table_row_sums_match_counts() {
        let p = params(5, 2);
        let max_n = 30u64;
        let table = count_parts_table(FamilyId::Cbar, p, (max_n / 5) as usize, max_n);
        let counts = count_table(FamilyId::Cbar, p, max_n);
        let sums = table.row_sum();
        for n in 0..=max_n as usize {
            assert_eq!(*sums.coeff(n), BigInt::from(counts[n]), "weight {n}");
        }
    }

    #[test]
    fn single_part_mutations_leave_the_family_or_change_weight() {
        // Spot check that enumerated diagrams are rigid: nudging one
        // column's length or label never yields a same-weight member.
        let p = params(7, 2);
        for &f in &[FamilyId::Bbar, FamilyId::Cbar] {
            for n in [14u64, 21, 26] {
                for mu in enumerate_modular(f, p, n) {
                    for i in 0..mu.len() {
                        let mut variants: Vec<Vec<DModularPart>> = Vec::new();
                        let base = mu.parts().to_vec();
                        if base[i].length > 1 {
                            let mut v = base.clone();
                            v[i].length -= 1;
                            variants.push(v);
                        }
                        let mut v = base.clone();
                        v[i].length += 1;
                        variants.push(v);
                        let pos = LABELS.iter().position(|&l| l == base[i].label).unwrap();
                        if pos > 0 {
                            let mut v = base.clone();
                            v[i].label = LABELS[pos - 1];
                            variants.push(v);
                        }
                        if pos + 1 < LABELS.len() {
                            let mut v = base.clone();
                            v[i].label = LABELS[pos + 1];
                            variants.push(v);
                        }
                        for cols in variants {
                            let Ok(candidate) = DModularOverpartition::new(cols) else {
                                continue; // mutation broke the ordering
                            };
                            let same_weight = candidate.weight(p) == n;
                            let member =
                                crate::family::check_family_modular(&candidate, f, p).unwrap();
                            assert!(
                                !(same_weight && member),
                                "family {f}: mutated {candidate} still a member at weight {n}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn admissible_value_universe_is_consistent() {
        let p = params(7, 2);
        let mut seen = 0u64;
        let mut max_weight = 0u64;
        visit_admissible_values(p, 20, &mut |lambda| {
            seen += 1;
            max_weight = max_weight.max(lambda.weight());
            for part in lambda.parts() {
                let m = part.value % 7;
                if part.overlined {
                    assert!(m == 2 || m == 5 || m == 0);
                } else {
                    assert_eq!(m, 0);
                }
            }
        });
        assert!(max_weight <= 20);
        // contains at least the empty object, (7), (7'), (14), ...
        assert!(seen > 10);
    }

    #[test]
    fn admissible_modular_universe_excludes_weight_zero_column() {
        let p = params(3, 1);
        let mut count_total = 0u64;
        visit_admissible_modular(p, 12, &mut |mu| {
            count_total += 1;
            assert!(mu.weight(p) <= 12);
            for c in mu.parts() {
                assert!(!(c.length == 1 && c.label == Label::D));
            }
        });
        assert!(count_total > 20);
    }
}
