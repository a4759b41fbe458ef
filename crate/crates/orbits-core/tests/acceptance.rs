//! Acceptance suite. One test per criterion; each prints a single
//! pass/fail line (visible with --nocapture). Everything is exact equality:
//! the headline results are identities, not measurements.

mod common;

use common::{all_partitions, oracle_collapse};

use orbits_core::exceptional::DualityFact;
use orbits_core::supports::{enumerate_supports, scan_bound};
use orbits_core::verify::CheckOutcome;
use orbits_core::{
    bv_dual, d_a_trivial, exceptional_rows, kawanaka_wf, verify_exceptional, verify_range,
    ClassicalKind, ComponentKind, GroupFamily, GroupSpec, InnerTwist, Partition, TwistSelection,
    TypedOrbit,
};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn report(criterion: &str, pass: bool) {
    println!(
        "[acceptance] {}: {}",
        criterion,
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion} failed");
}

/// Criterion 1: for every classical family group, every valid twist, and
/// every enumerated (a,b) with n <= 50, the lift equals d_A(lambda, 1) with
/// zero failing checks of any kind.
#[test]
fn criterion_1_main_theorem_batch() {
    let mut families = 0usize;
    for family in GroupFamily::CLASSICAL {
        let agg = verify_range(family, 50, &TwistSelection::All).unwrap();
        families += agg.family_count;
        for r in &agg.reports {
            assert_eq!(
                r.check("lift_equals_dA"),
                Some(&CheckOutcome::Pass),
                "{}: {:?}",
                r.id,
                r.diagnostics
            );
            assert!(r.passed(), "{}: {:?}", r.id, r.diagnostics);
        }
        assert!(agg.all_passed());
    }
    assert!(families > 0);
    report(
        &format!("criterion 1, main-theorem batch over {families} families (n <= 50)"),
        true,
    );
}

/// Criterion 2: transpose(lambda) matches the closed-form generator in every
/// family group, and the dual matches its closed form everywhere except the
/// pso rho/etarho display with b > 0, which must be flagged as skipped with
/// the documented total inconsistency.
#[test]
fn criterion_2_closed_form_regression() {
    let mut checked = 0usize;
    let mut skipped = 0usize;
    for family in GroupFamily::CLASSICAL {
        let agg = verify_range(family, 50, &TwistSelection::All).unwrap();
        let families = orbits_core::verify::collect_families(family, 50, &TwistSelection::All)
            .unwrap();
        for (f, r) in families.iter().zip(&agg.reports) {
            assert_eq!(
                r.check("lambda_t_closed_form"),
                Some(&CheckOutcome::Pass),
                "{}: {:?}",
                r.id,
                r.diagnostics
            );
            let twisted_pso = f.group.family == GroupFamily::PsoEven
                && matches!(f.group.twist, InnerTwist::Rho | InnerTwist::EtaRho);
            match r.check("d_closed_form") {
                Some(CheckOutcome::Pass) => {
                    assert!(!(twisted_pso && f.params.b > 0), "{} must skip", r.id);
                    checked += 1;
                }
                Some(CheckOutcome::Skipped(reason)) => {
                    assert!(twisted_pso && f.params.b > 0, "{} wrongly skipped", r.id);
                    assert!(reason.contains("total"), "skip reason documents the defect");
                    skipped += 1;
                }
                other => panic!("{}: unexpected d_closed_form {:?}", r.id, other),
            }
        }
    }
    assert!(checked > 0 && skipped > 0);
    report(
        &format!(
            "criterion 2, closed forms for n <= 50 ({checked} checked, {skipped} flagged skips)"
        ),
        true,
    );
}

/// Criterion 3: for every partition of total <= 14 and each kind with the
/// right parity, collapse equals the brute-force dominance-maximum valid
/// minorant, and that maximum is unique.
#[test]
fn criterion_3_collapse_oracle_equivalence() {
    let mut cases = 0usize;
    for total in 1..=14u32 {
        for q in all_partitions(total) {
            for kind in [ClassicalKind::B, ClassicalKind::C, ClassicalKind::D] {
                let parity_ok = match kind {
                    ClassicalKind::B => total % 2 == 1,
                    _ => total % 2 == 0,
                };
                if !parity_ok {
                    assert!(q.collapse(kind).is_err());
                    continue;
                }
                let got = q.collapse(kind).unwrap();
                let (want, unique) = oracle_collapse(&q, kind);
                assert!(unique, "oracle maximum not unique for {q} {kind}");
                assert_eq!(got, want, "collapse({q}, {kind})");
                cases += 1;
            }
        }
    }
    report(
        &format!("criterion 3, collapse oracle equivalence ({cases} cases, totals <= 14)"),
        true,
    );
}

/// Criterion 4: the algebraic property suite, exhaustively at the stated
/// sizes: transpose involution (<= 14), transpose-of-union identity
/// (<= 10 x <= 10), collapse idempotence, dominance is a partial order
/// (<= 10), and triple-dual stability (valid orbits of total <= 16).
#[test]
fn criterion_4_algebraic_property_suite() {
    // transpose is an involution
    for total in 0..=14u32 {
        for q in all_partitions(total) {
            assert_eq!(q.transpose().transpose(), q, "involution at {q}");
        }
    }

    // transpose(union(p,q)) = pointwise_sum(transpose(p), transpose(q))
    let small: Vec<Partition> = (0..=10u32).flat_map(all_partitions).collect();
    for a in &small {
        for b in &small {
            assert_eq!(
                a.union(b).transpose(),
                a.transpose().pointwise_sum(&b.transpose()),
                "union/pointwise at {a}, {b}"
            );
        }
    }

    // collapse is idempotent, valid, and dominated by its input
    for total in 1..=14u32 {
        for q in all_partitions(total) {
            for kind in [ClassicalKind::B, ClassicalKind::C, ClassicalKind::D] {
                let Ok(c) = q.collapse(kind) else { continue };
                assert!(c.is_valid_for(kind));
                assert_eq!(c.collapse(kind).unwrap(), c, "idempotence at {q} {kind}");
                assert!(q.dominates(&c).unwrap(), "{q} must dominate {c}");
            }
        }
    }

    // dominance is a partial order on equal totals
    for total in 0..=10u32 {
        let all = all_partitions(total);
        for x in &all {
            assert!(x.dominates(x).unwrap(), "reflexive at {x}");
            for y in &all {
                if x.dominates(y).unwrap() && y.dominates(x).unwrap() {
                    assert_eq!(x, y, "antisymmetry at {x}, {y}");
                }
                for z in &all {
                    if x.dominates(y).unwrap() && y.dominates(z).unwrap() {
                        assert!(x.dominates(z).unwrap(), "transitivity at {x},{y},{z}");
                    }
                }
            }
        }
    }

    // d(d(d(o))) = d(o) on every valid typed orbit of total <= 16
    let mut orbits = 0usize;
    for total in 0..=16u32 {
        for q in all_partitions(total) {
            for kind in [
                ClassicalKind::A,
                ClassicalKind::B,
                ClassicalKind::C,
                ClassicalKind::D,
            ] {
                let n = match kind {
                    ClassicalKind::A => total,
                    ClassicalKind::B => {
                        if total % 2 == 0 {
                            continue;
                        }
                        (total - 1) / 2
                    }
                    _ => {
                        if total % 2 == 1 {
                            continue;
                        }
                        total / 2
                    }
                };
                let Ok(o) = TypedOrbit::new(kind, n, q.clone()) else {
                    continue;
                };
                let d = bv_dual(&o);
                assert_eq!(bv_dual(&bv_dual(&d)), d, "triple dual at {o}");
                orbits += 1;
            }
        }
    }
    assert!(orbits > 500);
    report(
        &format!("criterion 4, algebraic property suite ({orbits} orbits in the dual check)"),
        true,
    );
}

/// Criterion 5: all exceptional rows pass, covering 4+7+2+2+2+3+13 sigmas,
/// the two non-split duality facts, and the (1,1,3,3) <-> A_2 alias.
#[test]
fn criterion_5_exceptional_suite() {
    let rows = exceptional_rows();
    let reports = verify_exceptional();
    assert_eq!(rows.len(), 7);
    for r in &reports {
        assert!(r.passed(), "{}: {:?}", r.id, r.diagnostics);
    }
    let counts: Vec<usize> = rows.iter().map(|r| r.sigma_count()).collect();
    assert_eq!(counts, vec![4, 7, 2, 2, 2, 3, 13]);

    let e6 = rows
        .iter()
        .find(|r| r.family == GroupFamily::E6 && r.twists.len() == 2)
        .unwrap();
    assert_eq!(
        e6.duality_fact,
        DualityFact::Pair {
            dual: "A_2".to_string()
        },
        "d(E_6(a_3)) = A_2"
    );
    assert_eq!(e6.partition_alias, Some(p(&[3, 3, 1, 1])));
    assert_eq!(e6.partition_alias.clone().unwrap(), kawanaka_wf(ComponentKind::D, 2));

    let e7 = rows
        .iter()
        .find(|r| r.family == GroupFamily::E7 && r.twists == vec![InnerTwist::MinusOne])
        .unwrap();
    assert_eq!(
        e7.duality_fact,
        DualityFact::Pair {
            dual: "D_4(a_1)".to_string()
        },
        "d(E_7(a_5)) = D_4(a_1)"
    );

    report("criterion 5, exceptional suite (33 sigmas across 7 rows)", true);
}

/// Independent (a,b) scan with a bound far beyond the production one.
fn independent_solutions(family: GroupFamily, n: u32, twist: InnerTwist) -> Vec<(u32, u32)> {
    let big = 2 * n + 3;
    let mut out = Vec::new();
    for a in 0..=big {
        for b in 0..=big {
            let hit = match (family, twist) {
                (GroupFamily::SoOdd, InnerTwist::Trivial) => {
                    a % 2 == 0 && a * a + b * (b + 1) == n
                }
                (GroupFamily::SoOdd, InnerTwist::MinusOne) => {
                    a % 2 == 1 && a * a + b * (b + 1) == n
                }
                (GroupFamily::PSp, InnerTwist::Trivial) => {
                    a >= b && a * (a + 1) + b * (b + 1) == n
                }
                (GroupFamily::PSp, InnerTwist::MinusOne) => {
                    2 * b * (b + 1) + a * (a + 1) / 2 == n
                }
                (GroupFamily::PsoEven, InnerTwist::Trivial) => {
                    a % 2 == 0 && b % 2 == 0 && a >= b && a * a + b * b == n
                }
                (GroupFamily::PsoEven, InnerTwist::Eta) => {
                    a % 2 == 1 && b % 2 == 1 && a >= b && a * a + b * b == n
                }
                (GroupFamily::PsoEven, InnerTwist::Rho | InnerTwist::EtaRho) => {
                    2 * b * b + a * (a + 1) / 2 == n
                }
                _ => unreachable!(),
            };
            if hit {
                out.push((a, b));
            }
        }
    }
    out
}

/// Criterion 6: enumeration completeness for n <= 60 against an independent
/// scan over a much larger (a,b) box, including the degenerate pseudo-Levi
/// label rule for the twisted PSp families.
#[test]
fn criterion_6_enumeration_completeness() {
    let mut families = 0usize;
    for n in 1..=60u32 {
        for family in [GroupFamily::SoOdd, GroupFamily::PSp, GroupFamily::PsoEven] {
            for &twist in InnerTwist::all_for(family) {
                let spec = GroupSpec::new(family, n, twist).unwrap();
                let got = enumerate_supports(&spec).unwrap();
                let got_pairs: Vec<(u32, u32)> =
                    got.iter().map(|f| (f.params.a, f.params.b)).collect();
                let want = independent_solutions(family, n, twist);
                assert_eq!(got_pairs, want, "{family} n={n} twist={twist}");
                // every solution sits inside the production scan bound
                for &(a, b) in &want {
                    assert!(a <= scan_bound(n) && b <= scan_bound(n));
                }
                for f in &got {
                    // degenerate twisted-A rule
                    if family == GroupFamily::PSp
                        && twist == InnerTwist::MinusOne
                        && f.params.a <= 1
                    {
                        let ell = f.params.b * (f.params.b + 1);
                        assert_eq!(f.j_label, format!("C_{ell}×C_{ell}"), "{}", f.id());
                    }
                    // component totals (doubling A) match the ambient total
                    let ambient = match family {
                        GroupFamily::SoOdd => 2 * n + 1,
                        _ => 2 * n,
                    };
                    let total: u32 = f
                        .wf_components
                        .iter()
                        .map(|c| match c.kind {
                            ComponentKind::ADouble => 2 * c.partition.total(),
                            _ => c.partition.total(),
                        })
                        .sum();
                    assert_eq!(total, ambient, "{}", f.id());
                }
                families += got.len();
            }
        }
        // pgl: exactly one support at the order-n twist, none at proper divisors
        for k in 1..=n {
            if n % k != 0 {
                continue;
            }
            let twist = if k == 1 {
                InnerTwist::Trivial
            } else {
                InnerTwist::OfOrder(k)
            };
            let spec = GroupSpec::new(GroupFamily::Pgl, n, twist).unwrap();
            let got = enumerate_supports(&spec).unwrap();
            assert_eq!(got.len(), usize::from(k == n), "pgl n={n} order {k}");
        }
    }
    report(
        &format!("criterion 6, enumeration completeness for n <= 60 ({families} families)"),
        true,
    );
}

/// Criterion 7: pinned spot vectors for the duality map. The spec labels the
/// second vector "B_4", but (9,5,1) has total 15, which the B-orbit rank
/// invariant (total = 2n+1) pins to rank 7; the partition values are as
/// stated.
#[test]
fn criterion_7_spot_oracles() {
    let d = bv_dual(&TypedOrbit::new(ClassicalKind::C, 2, p(&[2, 2])).unwrap());
    assert_eq!(d.partition(), &p(&[3, 1, 1]));
    assert_eq!(d.kind(), ClassicalKind::B);

    let d = bv_dual(&TypedOrbit::new(ClassicalKind::B, 7, p(&[9, 5, 1])).unwrap());
    assert_eq!(d.partition(), &p(&[2, 2, 2, 2, 2, 2, 1, 1]));
    assert_eq!(d.kind(), ClassicalKind::C);

    let d = bv_dual(&TypedOrbit::new(ClassicalKind::D, 6, p(&[5, 5, 1, 1])).unwrap());
    assert_eq!(d.partition(), &p(&[3, 3, 2, 2, 1, 1]));
    assert_eq!(d.kind(), ClassicalKind::D);

    // PGL principal orbit maps to the zero orbit with trivial marking
    let m = d_a_trivial(&TypedOrbit::new(ClassicalKind::A, 5, p(&[5])).unwrap()).unwrap();
    assert_eq!(m.orbit.partition(), &p(&[1, 1, 1, 1, 1]));
    assert!(m.is_trivially_marked());

    report("criterion 7, pinned spot oracles", true);
}
