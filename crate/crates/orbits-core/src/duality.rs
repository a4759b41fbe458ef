//! Duality maps on nilpotent orbits at the partition level.
//!
//! [`bv_dual`] is the Barbasch-Vogan/Lusztig-Spaltenstein duality realised as
//! type-specific collapse recipes. [`d_a_trivial`] is Achar's refinement at
//! the trivial conjugacy class; it demands a [`PiCertificate`] proving that
//! the relevant subpartition is empty and errors otherwise rather than
//! guessing the general marked algorithm.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::OrbitError;
use crate::partition::{ClassicalKind, Partition, TypedOrbit};

/// An orbit with a marking partition standing in for a conjugacy class in
/// the canonical quotient. The marking is stored reduced: a part surviving
/// reduction occurs exactly once, and the trivial class is the empty marking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedOrbit {
    pub orbit: TypedOrbit,
    marking: Partition,
}

impl MarkedOrbit {
    pub fn new(orbit: TypedOrbit, marking: &Partition) -> Self {
        MarkedOrbit {
            orbit,
            marking: reduce_marking(marking),
        }
    }

    pub fn trivial(orbit: TypedOrbit) -> Self {
        MarkedOrbit {
            orbit,
            marking: Partition::empty(),
        }
    }

    pub fn marking(&self) -> &Partition {
        &self.marking
    }

    pub fn is_trivially_marked(&self) -> bool {
        self.marking.is_empty()
    }
}

impl fmt::Display for MarkedOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marking.is_empty() {
            write!(f, "({}, 1)", self.orbit)
        } else {
            write!(f, "({}, {})", self.orbit, self.marking)
        }
    }
}

impl Serialize for MarkedOrbit {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("MarkedOrbit", 4)?;
        s.serialize_field("kind", &self.orbit.kind())?;
        s.serialize_field("n", &self.orbit.n())?;
        s.serialize_field("partition", self.orbit.partition())?;
        s.serialize_field("marking", &self.marking)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for MarkedOrbit {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            kind: ClassicalKind,
            n: u32,
            partition: Partition,
            marking: Partition,
        }
        let raw = Raw::deserialize(deserializer)?;
        let orbit = TypedOrbit::new(raw.kind, raw.n, raw.partition).map_err(D::Error::custom)?;
        Ok(MarkedOrbit::new(orbit, &raw.marking))
    }
}

/// Deletes every part with even multiplicity and keeps a single copy of each
/// part with odd multiplicity. Idempotent; the empty output is the trivial
/// marking.
pub fn reduce_marking(nu: &Partition) -> Partition {
    let survivors: Vec<u32> = nu
        .runs()
        .into_iter()
        .filter(|&(_, m)| m % 2 == 1)
        .map(|(v, _)| v)
        .collect();
    Partition::new(survivors)
}

/// Barbasch-Vogan duality as a collapse recipe per classical kind:
///
/// * A: transpose;
/// * B -> C: transpose, remove a box from the bottom, C-collapse;
/// * C -> B: transpose, add a box on top, B-collapse;
/// * D -> D: transpose, D-collapse.
///
/// The recipes are pinned family-by-family against closed forms by the
/// verification engine; on its image the map is an involution (d^3 = d).
pub fn bv_dual(o: &TypedOrbit) -> TypedOrbit {
    let n = o.n();
    let t = o.partition().transpose();
    let (kind, partition) = match o.kind() {
        ClassicalKind::A => (ClassicalKind::A, t),
        ClassicalKind::B => (
            ClassicalKind::C,
            t.remove_box_bottom()
                .expect("a B-partition has odd positive total")
                .collapse(ClassicalKind::C)
                .expect("total 2n is even"),
        ),
        ClassicalKind::C => (
            ClassicalKind::B,
            t.add_box_top()
                .collapse(ClassicalKind::B)
                .expect("total 2n+1 is odd"),
        ),
        ClassicalKind::D => (
            ClassicalKind::D,
            t.collapse(ClassicalKind::D).expect("total 2n is even"),
        ),
    };
    TypedOrbit::new(kind, n, partition).expect("duality recipes produce valid orbits")
}

/// Reason a [`PiCertificate`] can assert emptiness, checked on the transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PiReason {
    #[serde(rename = "all-multiplicities-even")]
    AllMultiplicitiesEven,
    #[serde(rename = "even-parts-even-multiplicity")]
    EvenPartsEvenMultiplicity,
    #[serde(rename = "odd-parts-even-multiplicity")]
    OddPartsEvenMultiplicity,
}

/// Certificate that the Achar subpartition of an orbit is empty, together
/// with the transpose it was checked on. Any of the three sufficient parity
/// conditions is accepted for any kind; the certificate records which one
/// fired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiCertificate {
    pub empty: bool,
    pub reason: Option<PiReason>,
    pub witness: Partition,
}

/// Checks the three sufficient emptiness conditions on `transpose(o)`, in
/// order: all multiplicities even; even parts with even multiplicity; odd
/// parts with even multiplicity. Kind A is not covered here.
pub fn pi_is_empty(o: &TypedOrbit) -> Result<PiCertificate, OrbitError> {
    if o.kind() == ClassicalKind::A {
        return Err(OrbitError::UnsupportedKind(ClassicalKind::A));
    }
    let witness = o.partition().transpose();
    let even_ok = witness.parity_multiplicities_even(0);
    let odd_ok = witness.parity_multiplicities_even(1);
    let reason = if even_ok && odd_ok {
        Some(PiReason::AllMultiplicitiesEven)
    } else if even_ok {
        Some(PiReason::EvenPartsEvenMultiplicity)
    } else if odd_ok {
        Some(PiReason::OddPartsEvenMultiplicity)
    } else {
        None
    };
    Ok(PiCertificate {
        empty: reason.is_some(),
        reason,
        witness,
    })
}

/// Achar duality at the trivial class: `(bv_dual(o), trivial)`, available
/// only when [`pi_is_empty`] certifies emptiness. For kind A the certificate
/// is waived. Without a certificate this errors instead of guessing.
pub fn d_a_trivial(o: &TypedOrbit) -> Result<MarkedOrbit, OrbitError> {
    if o.kind() != ClassicalKind::A {
        let cert = pi_is_empty(o)?;
        if !cert.empty {
            return Err(OrbitError::UncertifiedDuality {
                orbit: o.to_string(),
            });
        }
    }
    Ok(MarkedOrbit::trivial(bv_dual(o)))
}
