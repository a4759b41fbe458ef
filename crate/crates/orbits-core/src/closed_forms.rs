//! Closed forms for transpose and dual of the enumerated dual-orbit
//! partitions, used as regression oracles by the verification engine.
//!
//! Each family group admits a closed form for transpose(lambda) as a
//! pointwise sum of two explicit staircases (the transposes of the two union
//! factors of lambda), and a closed form for the dual written directly as a
//! union of runs. These generators never call the collapse recipes, so they
//! give an independent route to the same partitions.
//!
//! The printed dual form for the pso rho/etarho families is total-consistent
//! only at b = 0; for b > 0 [`d_form`] returns the documented skip instead of
//! a partition.

use crate::partition::Partition;
use crate::supports::{FamilyParams, GroupFamily, InnerTwist, SupportFamily};

/// (k,k, k-1,k-1, ..., 1,1): every value down from k twice.
fn doubles(k: u32) -> Partition {
    Partition::new((1..=k).flat_map(|i| [i, i]).collect::<Vec<_>>())
}

/// (k, k-1,k-1, ..., 1,1): single head, then doubles.
fn head_one_doubles(k: u32) -> Partition {
    if k == 0 {
        return Partition::empty();
    }
    let mut v = vec![k];
    v.extend((1..k).flat_map(|i| [i, i]));
    Partition::new(v)
}

/// (k, (k-1)^4, ..., 1^4): transpose of (1,5,...,4k-3).
fn head_one_fours(k: u32) -> Partition {
    if k == 0 {
        return Partition::empty();
    }
    let mut v = vec![k];
    v.extend((1..k).flat_map(|i| [i; 4]));
    Partition::new(v)
}

/// (k^3, (k-1)^4, ..., 1^4): transpose of (3,7,...,4k-1).
fn head_three_fours(k: u32) -> Partition {
    if k == 0 {
        return Partition::empty();
    }
    let mut v = vec![k; 3];
    v.extend((1..k).flat_map(|i| [i; 4]));
    Partition::new(v)
}

/// (k+1, k^4, ..., 1^4): transpose of (1,5,...,4k+1).
fn peak_one_fours(k: u32) -> Partition {
    let mut v = vec![k + 1];
    v.extend((1..=k).flat_map(|i| [i; 4]));
    Partition::new(v)
}

/// ((k+1)^3, k^4, ..., 1^4): transpose of (3,7,...,4k+3).
fn peak_three_fours(k: u32) -> Partition {
    let mut v = vec![k + 1; 3];
    v.extend((1..=k).flat_map(|i| [i; 4]));
    Partition::new(v)
}

/// (2k-1,2k-1, ..., 1,1): odd values down from 2k-1, twice each.
fn odd_doubles(k: u32) -> Partition {
    Partition::new((1..=k).flat_map(|i| [2 * i - 1, 2 * i - 1]).collect::<Vec<_>>())
}

/// (2k,2k, ..., 2,2): even values down from 2k, twice each.
fn even_doubles(k: u32) -> Partition {
    Partition::new((1..=k).flat_map(|i| [2 * i, 2 * i]).collect::<Vec<_>>())
}

/// Closed form for transpose(lambda) of a classical support family.
pub fn lambda_t_form(f: &SupportFamily) -> Partition {
    let FamilyParams {
        a, b, delta, sigma, ..
    } = f.params;
    match (f.group.family, f.group.twist) {
        (GroupFamily::Pgl, _) => Partition::ones(f.group.n),
        (GroupFamily::SoOdd, _) => doubles(delta).pointwise_sum(&doubles(sigma)),
        (GroupFamily::PSp, InnerTwist::Trivial) => {
            head_one_doubles(delta).pointwise_sum(&head_one_doubles(sigma + 1))
        }
        (GroupFamily::PSp, _) => match (a % 2 == 0, 2 * b >= a) {
            (true, true) => peak_one_fours(sigma).pointwise_sum(&head_three_fours(delta)),
            (true, false) => peak_one_fours(sigma).pointwise_sum(&head_one_fours(delta)),
            (false, true) => peak_three_fours(sigma).pointwise_sum(&head_one_fours(delta)),
            (false, false) => peak_three_fours(sigma).pointwise_sum(&head_three_fours(delta)),
        },
        (GroupFamily::PsoEven, InnerTwist::Trivial | InnerTwist::Eta) => {
            head_one_doubles(delta).pointwise_sum(&head_one_doubles(sigma))
        }
        (GroupFamily::PsoEven, _) => match (a % 2 == 0, 2 * b > a) {
            (true, true) => head_three_fours(sigma).pointwise_sum(&head_one_fours(delta)),
            (true, false) => head_three_fours(sigma).pointwise_sum(&head_three_fours(delta)),
            (false, true) => peak_one_fours(sigma).pointwise_sum(&head_three_fours(delta - 1)),
            (false, false) => peak_one_fours(sigma).pointwise_sum(&peak_one_fours(delta)),
        },
        _ => unreachable!("support families are classical"),
    }
}

/// Why the dual closed form is skipped for a family, when it is.
pub const D_FORM_SKIP_REASON: &str = "printed dual closed form for pso rho/etarho has total \
     4b^2+4b+a^2+a instead of 2n when b > 0; regression skipped";

/// Closed form for the dual of lambda, or `None` where the printed form is
/// total-inconsistent (pso rho/etarho with b > 0).
pub fn d_form(f: &SupportFamily) -> Option<Partition> {
    let FamilyParams { a, b, .. } = f.params;
    match (f.group.family, f.group.twist) {
        (GroupFamily::Pgl, _) => Some(Partition::ones(f.group.n)),
        (GroupFamily::SoOdd, _) => {
            let head = Partition::new(vec![2 * b + 1]);
            Some(head.union(&odd_doubles(b)).union(&odd_doubles(a)))
        }
        (GroupFamily::PSp, InnerTwist::Trivial) => {
            // evens 2a..2b+2 twice each, then evens 2b..2 four times each
            let mut v: Vec<u32> = ((b + 1)..=a).flat_map(|i| [2 * i; 2]).collect();
            v.extend((1..=b).flat_map(|i| [2 * i; 4]));
            Some(Partition::new(v))
        }
        (GroupFamily::PSp, _) => Some(
            even_doubles(b)
                .union(&doubles(a))
                .union(&even_doubles(b)),
        ),
        (GroupFamily::PsoEven, InnerTwist::Trivial | InnerTwist::Eta) => {
            // odds 2a-1..2b+1 twice each, then odds 2b-1..1 four times each
            let mut v: Vec<u32> = ((b + 1)..=a).flat_map(|i| [2 * i - 1; 2]).collect();
            v.extend((1..=b).flat_map(|i| [2 * i - 1; 4]));
            Some(Partition::new(v))
        }
        (GroupFamily::PsoEven, _) => {
            if b == 0 {
                Some(doubles(a))
            } else {
                None
            }
        }
        _ => unreachable!("support families are classical"),
    }
}
