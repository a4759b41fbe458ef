//! Brute-force reference implementations shared by the integration suites.
//! Everything here is deliberately naive and independent of the library's
//! computation paths.
//!
//! Each integration target compiles its own copy and uses its own subset.
#![allow(dead_code)]

use orbits_core::{ClassicalKind, Partition};

/// All partitions of `total`, by naive descent on the largest part.
pub fn all_partitions(total: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(acc.clone()));
            return;
        }
        let cap = remaining.min(max_part);
        for next in (1..=cap).rev() {
            acc.push(next);
            go(remaining - next, next, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total.max(1), &mut Vec::new(), &mut out);
    out
}

/// Validity by direct multiset counting, no shared code with the library.
pub fn oracle_is_valid(p: &Partition, kind: ClassicalKind) -> bool {
    let total: u32 = p.parts().iter().sum();
    let mult = |v: u32| p.parts().iter().filter(|&&x| x == v).count();
    let even_ok = p.parts().iter().all(|&v| v % 2 == 1 || mult(v) % 2 == 0);
    let odd_ok = p.parts().iter().all(|&v| v % 2 == 0 || mult(v) % 2 == 0);
    match kind {
        ClassicalKind::A => true,
        ClassicalKind::B => total % 2 == 1 && even_ok,
        ClassicalKind::C => total.is_multiple_of(2) && odd_ok,
        ClassicalKind::D => total.is_multiple_of(2) && even_ok,
    }
}

/// Prefix-sum dominance, recomputed from scratch.
pub fn oracle_dominates(p: &Partition, q: &Partition) -> bool {
    let len = p.parts().len().max(q.parts().len());
    let prefix = |r: &Partition, k: usize| -> u32 {
        r.parts().iter().take(k).sum()
    };
    (1..=len).all(|k| prefix(p, k) >= prefix(q, k))
}

/// Brute-force collapse: the dominance-maximum kind-valid partition of the
/// same total dominated by `p`. Also reports whether that maximum is the
/// unique dominance-greatest element (every other candidate lies below it).
pub fn oracle_collapse(p: &Partition, kind: ClassicalKind) -> (Partition, bool) {
    let total: u32 = p.parts().iter().sum();
    let candidates: Vec<Partition> = all_partitions(total)
        .into_iter()
        .filter(|q| oracle_is_valid(q, kind) && oracle_dominates(p, q))
        .collect();
    assert!(
        !candidates.is_empty(),
        "no valid partition below {p} for kind {kind}"
    );
    let mut best = candidates[0].clone();
    for c in &candidates[1..] {
        if oracle_dominates(c, &best) {
            best = c.clone();
        }
    }
    let unique_max = candidates.iter().all(|c| oracle_dominates(&best, c));
    (best, unique_max)
}

/// Transpose by literal column count on the Young diagram.
pub fn oracle_transpose(p: &Partition) -> Partition {
    let height = |col: u32| p.parts().iter().filter(|&&row| row > col).count() as u32;
    let first = p.parts().first().copied().unwrap_or(0);
    Partition::new((0..first).map(height).collect::<Vec<_>>())
}
