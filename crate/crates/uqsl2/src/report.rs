//! Serializable report plumbing shared by the verification and cohomology
//! layers. Reports always state the field mode; in root-of-unity mode both
//! p' (the root order) and the derived p are included, since they differ
//! for even p'.

use serde::{Deserialize, Serialize};

use crate::scalars::{FieldMode, ScalarError};

/// Version tag carried by every serialized report.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum ModeInfo {
    Generic,
    #[serde(rename_all = "camelCase")]
    RootOfUnity { p_prime: u32, p: u32 },
}

impl From<FieldMode> for ModeInfo {
    fn from(mode: FieldMode) -> Self {
        match mode {
            FieldMode::Generic => ModeInfo::Generic,
            FieldMode::RootOfUnity(pp) => ModeInfo::RootOfUnity {
                p_prime: pp,
                p: mode.p().unwrap(),
            },
        }
    }
}

impl ModeInfo {
    pub fn to_field_mode(self) -> Result<FieldMode, ScalarError> {
        match self {
            ModeInfo::Generic => Ok(FieldMode::Generic),
            ModeInfo::RootOfUnity { p_prime, .. } => FieldMode::root_of_unity(p_prime),
        }
    }
}

/// Outcome of one symbolic identity check. `difference` renders the
/// nonzero discrepancy element when the identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityReport {
    pub name: String,
    pub mode: ModeInfo,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub difference: Option<String>,
}

impl IdentityReport {
    pub fn passed(name: impl Into<String>, mode: FieldMode) -> Self {
        IdentityReport {
            name: name.into(),
            mode: mode.into(),
            ok: true,
            difference: None,
        }
    }

    pub fn failed(name: impl Into<String>, mode: FieldMode, difference: String) -> Self {
        IdentityReport {
            name: name.into(),
            mode: mode.into(),
            ok: false,
            difference: Some(difference),
        }
    }
}
