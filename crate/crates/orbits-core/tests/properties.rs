//! Randomized invariants, complementing the exhaustive small-size checks in
//! the acceptance suite with larger random inputs.

mod common;

use common::{oracle_dominates, oracle_transpose};

use proptest::prelude::*;

use orbits_core::supports::enumerate_supports;
use orbits_core::{
    bv_dual, pi_is_empty, reduce_marking, ClassicalKind, GroupFamily, GroupSpec, InnerTwist,
    Partition, TypedOrbit,
};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=24, 0..=14).prop_map(Partition::new)
}

/// A random partition of an exact total, by greedy descent on a seed.
fn partition_of(total: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=total.max(1), 40).prop_map(move |seed| {
        let mut parts = Vec::new();
        let mut remaining = total;
        let mut cap = total;
        for s in seed {
            if remaining == 0 {
                break;
            }
            let next = (s % cap.min(remaining)) + 1;
            parts.push(next);
            remaining -= next;
            cap = next;
        }
        while remaining > 0 {
            parts.push(1);
            remaining -= 1;
        }
        Partition::new(parts)
    })
}

proptest! {
    #[test]
    fn transpose_is_involution(q in partition()) {
        prop_assert_eq!(q.transpose().transpose(), q);
    }

    #[test]
    fn transpose_matches_column_count(q in partition()) {
        prop_assert_eq!(q.transpose(), oracle_transpose(&q));
    }

    #[test]
    fn union_transposes_to_pointwise_sum(a in partition(), b in partition()) {
        prop_assert_eq!(
            a.union(&b).transpose(),
            a.transpose().pointwise_sum(&b.transpose())
        );
    }

    #[test]
    fn union_total_adds(a in partition(), b in partition()) {
        prop_assert_eq!(a.union(&b).total(), a.total() + b.total());
    }

    #[test]
    fn dominance_matches_prefix_oracle(t in 1u32..=24, seed in 0u64..u64::MAX) {
        // derive two partitions of the same total from one seed
        let mut rng = seed;
        let mut draw = |cap: u32| { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1); (rng >> 33) as u32 % cap };
        let mut make = |mut remaining: u32| {
            let mut parts = Vec::new();
            let mut cap = remaining;
            while remaining > 0 {
                let next = draw(cap.min(remaining)) + 1;
                parts.push(next);
                remaining -= next;
                cap = next;
            }
            Partition::new(parts)
        };
        let a = make(t);
        let b = make(t);
        prop_assert_eq!(a.dominates(&b).unwrap(), oracle_dominates(&a, &b));
    }

    #[test]
    fn collapse_is_idempotent_valid_and_dominated(t in 1u32..=40, seed in 0u64..u64::MAX) {
        let mut rng = seed;
        let mut draw = |cap: u32| { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1); (rng >> 33) as u32 % cap };
        for kind in [ClassicalKind::B, ClassicalKind::C, ClassicalKind::D] {
            let total = match kind {
                ClassicalKind::B => 2 * t + 1,
                _ => 2 * t,
            };
            let mut parts = Vec::new();
            let mut remaining = total;
            while remaining > 0 {
                let next = draw(remaining) + 1;
                parts.push(next);
                remaining -= next;
            }
            let q = Partition::new(parts);
            let c = q.collapse(kind).unwrap();
            prop_assert!(c.is_valid_for(kind));
            prop_assert_eq!(c.collapse(kind).unwrap(), c.clone());
            prop_assert!(q.dominates(&c).unwrap());
        }
    }

    #[test]
    fn triple_dual_is_stable_at_larger_totals(t in 8u32..=40, seed in 0u64..u64::MAX) {
        let mut rng = seed;
        let mut draw = |cap: u32| { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1); (rng >> 33) as u32 % cap };
        for kind in [ClassicalKind::B, ClassicalKind::C, ClassicalKind::D] {
            let total = match kind {
                ClassicalKind::B => 2 * t + 1,
                _ => 2 * t,
            };
            // random partition of the right total, then collapse to a valid orbit
            let mut parts = Vec::new();
            let mut remaining = total;
            let mut cap = total;
            while remaining > 0 {
                let next = draw(cap.min(remaining)) + 1;
                parts.push(next);
                remaining -= next;
                cap = next;
            }
            let q = Partition::new(parts).collapse(kind).unwrap();
            let o = TypedOrbit::new(kind, t, q).unwrap();
            let d = bv_dual(&o);
            prop_assert_eq!(bv_dual(&bv_dual(&d)), d);
        }
    }

    #[test]
    fn reduce_marking_is_idempotent_and_squarefree(q in partition()) {
        let r = reduce_marking(&q);
        prop_assert_eq!(reduce_marking(&r), r.clone());
        prop_assert!(r.runs().iter().all(|&(_, m)| m == 1));
    }

    #[test]
    fn equal_total_dominance_is_antisymmetric(
        (t, a, b) in (1u32..=24).prop_flat_map(|t| (Just(t), partition_of(t), partition_of(t)))
    ) {
        prop_assert_eq!(a.total(), t);
        prop_assert_eq!(b.total(), t);
        if a.dominates(&b).unwrap() && b.dominates(&a).unwrap() {
            prop_assert_eq!(a, b);
        }
    }
}

/// Every enumerated family with n <= 50 carries a pi-emptiness certificate.
#[test]
fn every_enumerated_family_certifies() {
    for family in [GroupFamily::SoOdd, GroupFamily::PSp, GroupFamily::PsoEven] {
        for &twist in InnerTwist::all_for(family) {
            for n in 1..=50 {
                let spec = GroupSpec::new(family, n, twist).unwrap();
                for f in enumerate_supports(&spec).unwrap() {
                    let cert = pi_is_empty(&f.lambda).unwrap();
                    assert!(cert.empty, "{} has no certificate", f.id());
                }
            }
        }
    }
}

/// Kind and total bookkeeping of the duality map.
#[test]
fn dual_kind_and_total_map() {
    let cases = [
        (ClassicalKind::A, 6u32, ClassicalKind::A, 6u32),
        (ClassicalKind::B, 4, ClassicalKind::C, 8),
        (ClassicalKind::C, 4, ClassicalKind::B, 9),
        (ClassicalKind::D, 4, ClassicalKind::D, 8),
    ];
    for (kind, n, want_kind, want_total) in cases {
        let total = kind.ambient_total(n);
        let q = Partition::new(vec![1; total as usize]);
        let o = TypedOrbit::new(kind, n, q).unwrap();
        let d = bv_dual(&o);
        assert_eq!(d.kind(), want_kind);
        assert_eq!(d.partition().total(), want_total);
        assert!(d.partition().is_valid_for(want_kind));
    }
}
