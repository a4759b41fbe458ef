//! Embedded table of unipotent cuspidal representations of the exceptional
//! groups, one row per (family, twist set). Orbit names use Bala-Carter
//! labels and are carried as opaque text; the only computations ever done on
//! this data are string comparisons and the partition alias of the twisted
//! E6 row.

use serde::Serialize;

use crate::partition::Partition;
use crate::supports::{GroupFamily, InnerTwist};

/// What duality does to the dual orbit of a row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualityFact {
    /// The dual orbit is special and self-dual.
    SelfDual,
    /// The dual orbit is special with d(dual_orbit) the named orbit.
    Pair { dual: String },
}

/// One cuspidal representation: its name and, where the table gives it, the
/// pair (x, tau) parametrizing it inside the canonical-quotient family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaEntry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_tau: Option<String>,
}

/// One row of the exceptional dataset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalRow {
    pub family: GroupFamily,
    /// The inner twists this row covers; the twisted E6 row covers both
    /// nontrivial twists at once.
    pub twists: Vec<InnerTwist>,
    pub j_label: String,
    pub sigmas: Vec<SigmaEntry>,
    pub wf_label: String,
    pub dual_orbit_label: String,
    pub duality_fact: DualityFact,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component_group: Option<String>,
    /// Partition form of the wavefront label in the factor's own classical
    /// type, where one exists (twisted E6: (3,3,1,1) aliases A_2).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition_alias: Option<Partition>,
    /// J is contained in the finite simple roots, so the lift marks
    /// trivially. Recorded as data.
    pub levi_inside_delta: bool,
}

impl ExceptionalRow {
    pub fn id(&self) -> String {
        let twists: Vec<String> = self.twists.iter().map(|t| t.to_string()).collect();
        format!("{} twist={}", self.family, twists.join(","))
    }

    pub fn sigma_count(&self) -> usize {
        self.sigmas.len()
    }

    pub fn sigma_names(&self) -> Vec<&str> {
        self.sigmas.iter().map(|s| s.name.as_str()).collect()
    }
}

fn sigma(name: &str, x_tau: &str) -> SigmaEntry {
    SigmaEntry {
        name: name.to_string(),
        x_tau: Some(x_tau.to_string()),
    }
}

fn sigma_bare(name: &str) -> SigmaEntry {
    SigmaEntry {
        name: name.to_string(),
        x_tau: None,
    }
}

/// The fixed exceptional dataset: 4 + 7 + 2 + 2 + 2 + 3 + 13 cuspidal
/// representations across seven rows.
pub fn exceptional_rows() -> Vec<ExceptionalRow> {
    vec![
        ExceptionalRow {
            family: GroupFamily::G2,
            twists: vec![InnerTwist::Trivial],
            j_label: "G_2".to_string(),
            sigmas: vec![
                sigma("G_2[1]", "(1,eps)"),
                sigma("G_2[-1]", "(g_2,eps)"),
                sigma("G_2[theta]", "(g_3,theta)"),
                sigma("G_2[theta^2]", "(g_3,theta^2)"),
            ],
            wf_label: "G_2(a_1)".to_string(),
            dual_orbit_label: "G_2(a_1)".to_string(),
            duality_fact: DualityFact::SelfDual,
            component_group: Some("S_3".to_string()),
            partition_alias: None,
            levi_inside_delta: true,
        },
        ExceptionalRow {
            family: GroupFamily::F4,
            twists: vec![InnerTwist::Trivial],
            j_label: "F_4".to_string(),
            sigmas: vec![
                sigma("F_4^II[1]", "(1,lambda^3)"),
                sigma("F_4[-1]", "(g_2,eps)"),
                sigma("F_4^I[1]", "(g_2',eps)"),
                sigma("F_4[theta]", "(g_3,theta)"),
                sigma("F_4[theta^2]", "(g_3,theta^2)"),
                sigma("F_4[i]", "(g_4,i)"),
                sigma("F_4[-i]", "(g_4,-i)"),
            ],
            wf_label: "F_4(a_3)".to_string(),
            dual_orbit_label: "F_4(a_3)".to_string(),
            duality_fact: DualityFact::SelfDual,
            component_group: Some("S_4".to_string()),
            partition_alias: None,
            levi_inside_delta: true,
        },
        ExceptionalRow {
            family: GroupFamily::E6,
            twists: vec![InnerTwist::Trivial],
            j_label: "E_6".to_string(),
            sigmas: vec![
                sigma("E_6[theta]", "(g_3,theta)"),
                sigma("E_6[theta^2]", "(g_3,theta^2)"),
            ],
            wf_label: "D_4(a_1)".to_string(),
            dual_orbit_label: "D_4(a_1)".to_string(),
            duality_fact: DualityFact::SelfDual,
            component_group: Some("S_3".to_string()),
            partition_alias: None,
            levi_inside_delta: true,
        },
        ExceptionalRow {
            family: GroupFamily::E6,
            twists: vec![InnerTwist::Zeta, InnerTwist::ZetaSq],
            j_label: "³D_4".to_string(),
            sigmas: vec![sigma_bare("3D_4[1]"), sigma_bare("3D_4[-1]")],
            wf_label: "A_2".to_string(),
            dual_orbit_label: "E_6(a_3)".to_string(),
            duality_fact: DualityFact::Pair {
                dual: "A_2".to_string(),
            },
            component_group: None,
            partition_alias: Some(Partition::new(vec![3, 3, 1, 1])),
            levi_inside_delta: true,
        },
        ExceptionalRow {
            family: GroupFamily::E7,
            twists: vec![InnerTwist::Trivial],
            j_label: "E_7".to_string(),
            sigmas: vec![sigma("E_7[zeta]", "(g_2,1)"), sigma("E_7[zeta]", "(g_2,eps)")],
            wf_label: "A_4+A_1".to_string(),
            dual_orbit_label: "A_4+A_1".to_string(),
            duality_fact: DualityFact::SelfDual,
            component_group: Some("Z/2".to_string()),
            partition_alias: None,
            levi_inside_delta: true,
        },
        ExceptionalRow {
            family: GroupFamily::E7,
            twists: vec![InnerTwist::MinusOne],
            j_label: "²E_6".to_string(),
            sigmas: vec![
                sigma_bare("2E_6[1]"),
                sigma_bare("2E_6[theta]"),
                sigma_bare("2E_6[theta^2]"),
            ],
            wf_label: "D_4(a_1)".to_string(),
            dual_orbit_label: "E_7(a_5)".to_string(),
            duality_fact: DualityFact::Pair {
                dual: "D_4(a_1)".to_string(),
            },
            component_group: None,
            partition_alias: None,
            levi_inside_delta: true,
        },
        ExceptionalRow {
            family: GroupFamily::E8,
            twists: vec![InnerTwist::Trivial],
            j_label: "E_8".to_string(),
            sigmas: vec![
                sigma("E_8^II[1]", "(1,lambda^4)"),
                sigma("E_8[-1]", "(g_2,-eps)"),
                sigma("E_8^I[1]", "(g_2',eps)"),
                sigma("E_8[theta]", "(g_3,eps*theta)"),
                sigma("E_8[theta^2]", "(g_3,eps*theta^2)"),
                sigma("E_8[-theta]", "(g_6,-theta)"),
                sigma("E_8[-theta^2]", "(g_6,-theta^2)"),
                sigma("E_8[i]", "(g_4,i)"),
                sigma("E_8[-i]", "(g_4,-i)"),
                sigma("E_8[zeta]", "(g_5,zeta)"),
                sigma("E_8[zeta^2]", "(g_5,zeta^2)"),
                sigma("E_8[zeta^3]", "(g_5,zeta^3)"),
                sigma("E_8[zeta^4]", "(g_5,zeta^4)"),
            ],
            wf_label: "E_8(a_7)".to_string(),
            dual_orbit_label: "E_8(a_7)".to_string(),
            duality_fact: DualityFact::SelfDual,
            component_group: Some("S_5".to_string()),
            partition_alias: None,
            levi_inside_delta: true,
        },
    ]
}
