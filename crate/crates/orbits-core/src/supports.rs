//! Unipotent cuspidal supports of the classical families.
//!
//! For each group family and inner twist, the supports are cut out by a
//! Diophantine constraint on a pair (a, b); each solution carries a symbolic
//! pseudo-Levi descriptor J, the Kawanaka wavefront partitions of its
//! factors, and the partition of the dual nilpotent orbit. The case data:
//!
//! * SO(2n+1), twist ±1: J = D_l x B_t, l = a^2, t = b(b+1), a even resp.
//!   odd; dual orbit is a C-partition of 2n.
//! * PSp(2n), twist 1: J = C_l x C_t, l = a(a+1), t = b(b+1), a >= b; dual
//!   orbit is a B-partition of 2n+1.
//! * PSp(2n), twist -1: J = C_l 2A_t C_l, l = b(b+1), t = a(a+1)/2 - 1
//!   (read as C_l x C_l when a <= 1); dual orbit in four branches.
//! * PSO(2n), twists 1/eta: J = D_l x D_t (twisted D for eta), l = a^2,
//!   t = b^2, a >= b, both even resp. both odd; dual orbit a D-partition.
//! * PSO(2n), twists rho/etarho: J = D_l 2A_t D_l, l = b^2,
//!   t = a(a+1)/2 - 1 (a bare 2A_t when b = 0); dual orbit in four branches.
//! * PGL(n): a single support when the twist has order exactly n, with the
//!   principal dual orbit (n).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::OrbitError;
use crate::partition::{ClassicalKind, Partition, TypedOrbit};

/// The simple group families covered by the tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupFamily {
    #[serde(rename = "pgl")]
    Pgl,
    #[serde(rename = "so-odd")]
    SoOdd,
    #[serde(rename = "psp")]
    PSp,
    #[serde(rename = "pso")]
    PsoEven,
    #[serde(rename = "g2")]
    G2,
    #[serde(rename = "f4")]
    F4,
    #[serde(rename = "e6")]
    E6,
    #[serde(rename = "e7")]
    E7,
    #[serde(rename = "e8")]
    E8,
}

impl GroupFamily {
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            GroupFamily::Pgl | GroupFamily::SoOdd | GroupFamily::PSp | GroupFamily::PsoEven
        )
    }

    pub const CLASSICAL: [GroupFamily; 4] = [
        GroupFamily::Pgl,
        GroupFamily::SoOdd,
        GroupFamily::PSp,
        GroupFamily::PsoEven,
    ];
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupFamily::Pgl => "pgl",
            GroupFamily::SoOdd => "so-odd",
            GroupFamily::PSp => "psp",
            GroupFamily::PsoEven => "pso",
            GroupFamily::G2 => "g2",
            GroupFamily::F4 => "f4",
            GroupFamily::E6 => "e6",
            GroupFamily::E7 => "e7",
            GroupFamily::E8 => "e8",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for GroupFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pgl" => Ok(GroupFamily::Pgl),
            "so-odd" | "so_odd" | "soodd" => Ok(GroupFamily::SoOdd),
            "psp" => Ok(GroupFamily::PSp),
            "pso" | "pso-even" | "pso_even" => Ok(GroupFamily::PsoEven),
            "g2" => Ok(GroupFamily::G2),
            "f4" => Ok(GroupFamily::F4),
            "e6" => Ok(GroupFamily::E6),
            "e7" => Ok(GroupFamily::E7),
            "e8" => Ok(GroupFamily::E8),
            other => Err(format!("unknown group family {other:?}")),
        }
    }
}

/// An inner twist, named by the character of the dual center it corresponds
/// to. PGL twists are identified by their order in the cyclic group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InnerTwist {
    Trivial,
    MinusOne,
    Eta,
    Rho,
    EtaRho,
    Zeta,
    ZetaSq,
    OfOrder(u32),
}

impl InnerTwist {
    /// The twists of a family in their canonical enumeration order. PGL is
    /// excluded here: its twist is a function of the rank.
    pub fn all_for(family: GroupFamily) -> &'static [InnerTwist] {
        match family {
            GroupFamily::SoOdd | GroupFamily::PSp | GroupFamily::E7 => {
                &[InnerTwist::Trivial, InnerTwist::MinusOne]
            }
            GroupFamily::PsoEven => &[
                InnerTwist::Trivial,
                InnerTwist::Eta,
                InnerTwist::Rho,
                InnerTwist::EtaRho,
            ],
            GroupFamily::E6 => &[InnerTwist::Trivial, InnerTwist::Zeta, InnerTwist::ZetaSq],
            GroupFamily::G2 | GroupFamily::F4 | GroupFamily::E8 => &[InnerTwist::Trivial],
            GroupFamily::Pgl => &[],
        }
    }
}

impl fmt::Display for InnerTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InnerTwist::Trivial => f.write_str("1"),
            InnerTwist::MinusOne => f.write_str("-1"),
            InnerTwist::Eta => f.write_str("eta"),
            InnerTwist::Rho => f.write_str("rho"),
            InnerTwist::EtaRho => f.write_str("etarho"),
            InnerTwist::Zeta => f.write_str("zeta"),
            InnerTwist::ZetaSq => f.write_str("zeta2"),
            InnerTwist::OfOrder(k) => write!(f, "{k}"),
        }
    }
}

impl std::str::FromStr for InnerTwist {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" => Ok(InnerTwist::Trivial),
            "-1" => Ok(InnerTwist::MinusOne),
            "eta" => Ok(InnerTwist::Eta),
            "rho" => Ok(InnerTwist::Rho),
            "etarho" | "eta-rho" => Ok(InnerTwist::EtaRho),
            "zeta" => Ok(InnerTwist::Zeta),
            "zeta2" | "zeta^2" => Ok(InnerTwist::ZetaSq),
            other => match other.parse::<u32>() {
                Ok(0) => Err("a twist order must be positive".to_string()),
                Ok(1) => Ok(InnerTwist::Trivial),
                Ok(k) => Ok(InnerTwist::OfOrder(k)),
                Err(_) => Err(format!("unknown inner twist {other:?}")),
            },
        }
    }
}

impl Serialize for InnerTwist {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for InnerTwist {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A group family at a specific rank with an inner twist. Construction
/// checks that the twist actually belongs to the family's twist group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupSpec {
    pub family: GroupFamily,
    pub n: u32,
    pub twist: InnerTwist,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, n: u32, twist: InnerTwist) -> Result<Self, OrbitError> {
        let ok = match family {
            GroupFamily::Pgl => match twist {
                InnerTwist::Trivial => true,
                InnerTwist::OfOrder(k) => k >= 1 && n.is_multiple_of(k),
                _ => false,
            },
            _ => InnerTwist::all_for(family).contains(&twist),
        };
        if ok {
            Ok(GroupSpec { family, n, twist })
        } else {
            Err(OrbitError::InvalidTwist { family, n, twist })
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} twist={}", self.family, self.n, self.twist)
    }
}

/// Kind of a wavefront-set component of a pseudo-Levi factor. `ADouble`
/// marks the twisted-A factors whose partition is doubled when lifted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentKind {
    B,
    C,
    D,
    #[serde(rename = "A-double")]
    ADouble,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WfComponent {
    pub kind: ComponentKind,
    pub partition: Partition,
}

/// Kawanaka wavefront set of the unique cuspidal unipotent representation of
/// a factor, indexed by its staircase parameter `r`:
///
/// * B (rank r^2+r): (1,1,3,3,...,2r-1,2r-1,2r+1), the single box at r = 0;
/// * C (rank r^2+r): (2,2,4,4,...,2r,2r);
/// * D (rank r^2):   (1,1,3,3,...,2r-1,2r-1);
/// * twisted A (rank r(r+1)/2 - 1): (1,2,...,r).
pub fn kawanaka_wf(kind: ComponentKind, r: u32) -> Partition {
    let parts: Vec<u32> = match kind {
        ComponentKind::B => std::iter::once(2 * r + 1)
            .chain((1..=r).rev().flat_map(|i| [2 * i - 1, 2 * i - 1]))
            .collect(),
        ComponentKind::C => (1..=r).rev().flat_map(|i| [2 * i, 2 * i]).collect(),
        ComponentKind::D => (1..=r).rev().flat_map(|i| [2 * i - 1, 2 * i - 1]).collect(),
        ComponentKind::ADouble => (1..=r).rev().collect(),
    };
    Partition::new(parts)
}

/// As [`kawanaka_wf`], but addressed by the factor's rank; errors when the
/// rank admits no cuspidal unipotent representation.
pub fn kawanaka_wf_for_rank(kind: ComponentKind, rank: u32) -> Result<Partition, OrbitError> {
    let family = match kind {
        ComponentKind::B => "B",
        ComponentKind::C => "C",
        ComponentKind::D => "D",
        ComponentKind::ADouble => "2A",
    };
    let r = (0..=rank + 1).find(|&r| match kind {
        ComponentKind::B | ComponentKind::C => r * r + r == rank,
        ComponentKind::D => r * r == rank,
        ComponentKind::ADouble => r * (r + 1) / 2 == rank + 1,
    });
    match r {
        Some(r) => Ok(kawanaka_wf(kind, r)),
        None => Err(OrbitError::NoCuspidal {
            family: family.to_string(),
            rank,
        }),
    }
}

/// The (a, b) solution of a support's Diophantine constraint together with
/// its derived quantities. `delta` and `sigma` follow the case formulas;
/// `a_prime` only exists for the twisted-A cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub a: u32,
    pub b: u32,
    pub delta: u32,
    pub sigma: u32,
    pub a_prime: Option<u32>,
}

/// One unipotent cuspidal support of a classical group: the symbolic
/// pseudo-Levi J, the Kawanaka wavefront partitions of its factors, and the
/// partition of the dual-side nilpotent orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportFamily {
    pub group: GroupSpec,
    pub params: FamilyParams,
    pub j_label: String,
    pub wf_components: Vec<WfComponent>,
    pub lambda: TypedOrbit,
    pub marking_index: usize,
    /// Second marking candidate recorded for the pso rho/etarho families,
    /// where the written marking differs from the wavefront component; both
    /// reduce to the trivial marking.
    pub marking_alt: Option<Partition>,
    pub sigma_count: u32,
}

impl SupportFamily {
    pub fn id(&self) -> String {
        format!(
            "{} a={} b={}",
            self.group, self.params.a, self.params.b
        )
    }
}

// flat wire record: {group, n, twist, a, b, j_label, wf_components, lambda,
// sigma_count, marking_index, marking_alt?}
impl Serialize for SupportFamily {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let extra = usize::from(self.marking_alt.is_some());
        let mut s = serializer.serialize_struct("SupportFamily", 10 + extra)?;
        s.serialize_field("group", &self.group.family)?;
        s.serialize_field("n", &self.group.n)?;
        s.serialize_field("twist", &self.group.twist)?;
        s.serialize_field("a", &self.params.a)?;
        s.serialize_field("b", &self.params.b)?;
        s.serialize_field("j_label", &self.j_label)?;
        s.serialize_field("wf_components", &self.wf_components)?;
        s.serialize_field("lambda", &self.lambda)?;
        s.serialize_field("sigma_count", &self.sigma_count)?;
        s.serialize_field("marking_index", &self.marking_index)?;
        if let Some(alt) = &self.marking_alt {
            s.serialize_field("marking_alt", alt)?;
        }
        s.end()
    }
}

fn t_a(a: u32) -> u32 {
    a * (a + 1) / 2
}

/// Integer ceiling of sqrt(m), plus nothing; exact for all u32.
fn isqrt_ceil(m: u32) -> u32 {
    let mut r = 0u32;
    while r * r < m {
        r += 1;
    }
    r
}

/// Scan bound for (a, b): ceil(sqrt(2n)) + 2 covers every case constraint.
pub fn scan_bound(n: u32) -> u32 {
    isqrt_ceil(2 * n) + 2
}

/// Odd staircase (2k-1, ..., 3, 1); empty for k = 0.
fn odds(k: u32) -> Partition {
    Partition::new((1..=k).map(|i| 2 * i - 1).collect::<Vec<_>>())
}

/// Even staircase (2k, ..., 4, 2); empty for k = 0.
fn evens(k: u32) -> Partition {
    Partition::new((1..=k).map(|i| 2 * i).collect::<Vec<_>>())
}

/// (4k-3, ..., 5, 1): k terms congruent to 1 mod 4.
fn mod4_one(k: u32) -> Partition {
    Partition::new((1..=k).map(|i| 4 * i - 3).collect::<Vec<_>>())
}

/// (4k+1, ..., 5, 1): k+1 terms congruent to 1 mod 4.
fn mod4_one_peak(k: u32) -> Partition {
    Partition::new((0..=k).map(|i| 4 * i + 1).collect::<Vec<_>>())
}

/// (4k-1, ..., 7, 3): k terms congruent to 3 mod 4.
fn mod4_three(k: u32) -> Partition {
    Partition::new((1..=k).map(|i| 4 * i - 1).collect::<Vec<_>>())
}

/// (4k+3, ..., 7, 3): k+1 terms congruent to 3 mod 4.
fn mod4_three_peak(k: u32) -> Partition {
    Partition::new((0..=k).map(|i| 4 * i + 3).collect::<Vec<_>>())
}

/// Splits a as 2a' or 2a'+1.
fn half(a: u32) -> u32 {
    a / 2
}

fn so_odd_family(n: u32, twist: InnerTwist, a: u32, b: u32) -> SupportFamily {
    let (delta, sigma) = (if b >= a { b - a } else { a - b - 1 }, a + b);
    let lambda_p = evens(delta).union(&evens(sigma));
    let lambda = TypedOrbit::new(ClassicalKind::C, n, lambda_p)
        .expect("so-odd dual partitions are C-valid of total 2n");
    SupportFamily {
        group: GroupSpec { family: GroupFamily::SoOdd, n, twist },
        params: FamilyParams { a, b, delta, sigma, a_prime: None },
        j_label: format!("D_{}×B_{}", a * a, b * (b + 1)),
        wf_components: vec![
            WfComponent { kind: ComponentKind::D, partition: kawanaka_wf(ComponentKind::D, a) },
            WfComponent { kind: ComponentKind::B, partition: kawanaka_wf(ComponentKind::B, b) },
        ],
        lambda,
        marking_index: 0,
        marking_alt: None,
        sigma_count: 1,
    }
}

fn psp_split_family(n: u32, a: u32, b: u32) -> SupportFamily {
    let (delta, sigma) = (a - b, a + b);
    let lambda_p = odds(delta).union(&odds(sigma + 1));
    let lambda = TypedOrbit::new(ClassicalKind::B, n, lambda_p)
        .expect("psp split dual partitions are B-valid of total 2n+1");
    SupportFamily {
        group: GroupSpec { family: GroupFamily::PSp, n, twist: InnerTwist::Trivial },
        params: FamilyParams { a, b, delta, sigma, a_prime: None },
        j_label: format!("C_{}×C_{}", a * (a + 1), b * (b + 1)),
        wf_components: vec![
            WfComponent { kind: ComponentKind::C, partition: kawanaka_wf(ComponentKind::C, a) },
            WfComponent { kind: ComponentKind::C, partition: kawanaka_wf(ComponentKind::C, b) },
        ],
        lambda,
        marking_index: 0,
        marking_alt: None,
        sigma_count: 1,
    }
}

fn psp_twisted_family(n: u32, a: u32, b: u32) -> SupportFamily {
    let ap = half(a);
    let sigma = b + ap;
    let delta = b.abs_diff(ap);
    let lambda_p = match (a.is_multiple_of(2), 2 * b >= a) {
        (true, true) => mod4_one_peak(sigma).union(&mod4_three(delta)),
        (true, false) => mod4_one_peak(sigma).union(&mod4_one(delta)),
        (false, true) => mod4_three_peak(sigma).union(&mod4_one(delta)),
        (false, false) => mod4_three_peak(sigma).union(&mod4_three(delta)),
    };
    let lambda = TypedOrbit::new(ClassicalKind::B, n, lambda_p)
        .expect("psp twisted dual partitions are B-valid of total 2n+1");
    let ell = b * (b + 1);
    let j_label = if a <= 1 {
        format!("C_{ell}×C_{ell}")
    } else {
        format!("C_{ell} ²A_{} C_{ell}", t_a(a) - 1)
    };
    SupportFamily {
        group: GroupSpec { family: GroupFamily::PSp, n, twist: InnerTwist::MinusOne },
        params: FamilyParams { a, b, delta, sigma, a_prime: Some(ap) },
        j_label,
        wf_components: vec![
            WfComponent { kind: ComponentKind::C, partition: kawanaka_wf(ComponentKind::C, b) },
            WfComponent { kind: ComponentKind::ADouble, partition: kawanaka_wf(ComponentKind::ADouble, a) },
            WfComponent { kind: ComponentKind::C, partition: kawanaka_wf(ComponentKind::C, b) },
        ],
        lambda,
        marking_index: 0,
        marking_alt: None,
        sigma_count: 1,
    }
}

fn pso_split_family(n: u32, twist: InnerTwist, a: u32, b: u32) -> SupportFamily {
    let (delta, sigma) = (a - b, a + b);
    let lambda_p = odds(delta).union(&odds(sigma));
    let lambda = TypedOrbit::new(ClassicalKind::D, n, lambda_p)
        .expect("pso split dual partitions are D-valid of total 2n");
    let twisted = twist == InnerTwist::Eta;
    let mark = if twisted { "²D" } else { "D" };
    SupportFamily {
        group: GroupSpec { family: GroupFamily::PsoEven, n, twist },
        params: FamilyParams { a, b, delta, sigma, a_prime: None },
        j_label: format!("{mark}_{}×{mark}_{}", a * a, b * b),
        wf_components: vec![
            WfComponent { kind: ComponentKind::D, partition: kawanaka_wf(ComponentKind::D, a) },
            WfComponent { kind: ComponentKind::D, partition: kawanaka_wf(ComponentKind::D, b) },
        ],
        lambda,
        marking_index: 0,
        marking_alt: None,
        sigma_count: 1,
    }
}

fn pso_twisted_family(n: u32, twist: InnerTwist, a: u32, b: u32) -> SupportFamily {
    let ap = half(a);
    let sigma = b + ap;
    let delta = b.abs_diff(ap);
    let lambda_p = match (a.is_multiple_of(2), 2 * b > a) {
        (true, true) => mod4_three(sigma).union(&mod4_one(delta)),
        (true, false) => mod4_three(sigma).union(&mod4_three(delta)),
        // 2b > a with a odd forces delta = b - a' >= 1
        (false, true) => mod4_one_peak(sigma).union(&mod4_three(delta - 1)),
        (false, false) => mod4_one_peak(sigma).union(&mod4_one_peak(delta)),
    };
    let lambda = TypedOrbit::new(ClassicalKind::D, n, lambda_p)
        .expect("pso twisted dual partitions are D-valid of total 2n");
    let ell = b * b;
    let j_label = if b == 0 {
        format!("²A_{}", n - 1)
    } else if a <= 1 {
        format!("D_{ell}×D_{ell}")
    } else {
        format!("D_{ell} ²A_{} D_{ell}", t_a(a) - 1)
    };
    SupportFamily {
        group: GroupSpec { family: GroupFamily::PsoEven, n, twist },
        params: FamilyParams { a, b, delta, sigma, a_prime: Some(ap) },
        j_label,
        wf_components: vec![
            WfComponent { kind: ComponentKind::D, partition: kawanaka_wf(ComponentKind::D, b) },
            WfComponent { kind: ComponentKind::ADouble, partition: kawanaka_wf(ComponentKind::ADouble, a) },
            WfComponent { kind: ComponentKind::D, partition: kawanaka_wf(ComponentKind::D, b) },
        ],
        lambda,
        marking_index: 0,
        marking_alt: Some(kawanaka_wf(ComponentKind::C, b)),
        sigma_count: 1,
    }
}

fn pgl_family(n: u32, twist: InnerTwist) -> SupportFamily {
    let lambda = TypedOrbit::new(ClassicalKind::A, n, Partition::new(vec![n]))
        .expect("the principal orbit is A-valid");
    SupportFamily {
        group: GroupSpec { family: GroupFamily::Pgl, n, twist },
        params: FamilyParams { a: 0, b: 0, delta: 0, sigma: 0, a_prime: None },
        j_label: "∅".to_string(),
        wf_components: Vec::new(),
        lambda,
        marking_index: 0,
        marking_alt: None,
        sigma_count: 1,
    }
}

/// Order of a twist token for the PGL twist group; named twists other than
/// the trivial one do not live there.
fn pgl_twist_order(twist: InnerTwist) -> Option<u32> {
    match twist {
        InnerTwist::Trivial => Some(1),
        InnerTwist::OfOrder(k) => Some(k),
        _ => None,
    }
}

/// Enumerates every unipotent cuspidal support of a classical group spec,
/// scanning 0 <= a, b <= [`scan_bound`]. Solutions come out ordered by
/// (a, b). Exceptional families are rejected: their data is the embedded
/// table served by [`crate::exceptional::exceptional_rows`].
pub fn enumerate_supports(group: &GroupSpec) -> Result<Vec<SupportFamily>, OrbitError> {
    // revalidate in case the spec was assembled by hand
    let group = GroupSpec::new(group.family, group.n, group.twist)?;
    let n = group.n;
    let bound = scan_bound(n);
    let pairs = || (0..=bound).flat_map(move |a| (0..=bound).map(move |b| (a, b)));
    let families = match (group.family, group.twist) {
        (GroupFamily::Pgl, twist) => {
            let order = pgl_twist_order(twist).expect("validated above");
            if order == n && n >= 1 {
                vec![pgl_family(n, twist)]
            } else {
                Vec::new()
            }
        }
        (GroupFamily::SoOdd, twist) => {
            let parity = if twist == InnerTwist::Trivial { 0 } else { 1 };
            pairs()
                .filter(|&(a, b)| a % 2 == parity && a * a + b * (b + 1) == n)
                .map(|(a, b)| so_odd_family(n, twist, a, b))
                .collect()
        }
        (GroupFamily::PSp, InnerTwist::Trivial) => pairs()
            .filter(|&(a, b)| a >= b && a * (a + 1) + b * (b + 1) == n)
            .map(|(a, b)| psp_split_family(n, a, b))
            .collect(),
        (GroupFamily::PSp, InnerTwist::MinusOne) => pairs()
            .filter(|&(a, b)| 2 * b * (b + 1) + t_a(a) == n)
            .map(|(a, b)| psp_twisted_family(n, a, b))
            .collect(),
        (GroupFamily::PsoEven, twist @ (InnerTwist::Trivial | InnerTwist::Eta)) => {
            let parity = if twist == InnerTwist::Trivial { 0 } else { 1 };
            pairs()
                .filter(|&(a, b)| {
                    a % 2 == parity && b % 2 == parity && a >= b && a * a + b * b == n
                })
                .map(|(a, b)| pso_split_family(n, twist, a, b))
                .collect()
        }
        (GroupFamily::PsoEven, twist @ (InnerTwist::Rho | InnerTwist::EtaRho)) => pairs()
            .filter(|&(a, b)| 2 * b * b + t_a(a) == n)
            .map(|(a, b)| pso_twisted_family(n, twist, a, b))
            .collect(),
        (family, _) if !family.is_classical() => {
            return Err(OrbitError::ExceptionalFamily(family))
        }
        _ => unreachable!("GroupSpec::new validated the twist"),
    };
    Ok(families)
}
