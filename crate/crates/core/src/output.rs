use serde::Serialize;

/// Bumped whenever a field of any payload changes.
pub const SCHEMA_VERSION: u32 = 1;

/// The single record a CLI command emits.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord<T: Serialize> {
    pub schema_version: u32,
    pub command: &'static str,
    pub payload: T,
}

impl<T: Serialize> OutputRecord<T> {
    pub fn new(command: &'static str, payload: T) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("payloads serialize")
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("payloads serialize")
    }
}

/// Payload of the `analyze` command.
#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub periodicity: crate::periodicity::PeriodicityReport,
    pub local: crate::critical::LocalPeriodProfile,
}

pub fn analyze(w: &crate::Word) -> crate::Result<Analysis> {
    Ok(Analysis {
        periodicity: crate::periodicity::analyze(w)?,
        local: crate::critical::local_profile(w)?,
    })
}

/// Payload of the `family` command.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family: &'static str,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub word: crate::periodicity::PeriodicityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<crate::duval::DuvalClassification>,
}

pub fn family_tightness(n: usize, m: usize) -> crate::Result<FamilyReport> {
    let (w, u) = crate::duval::family_tightness(n, m)?;
    Ok(FamilyReport {
        family: "tightness",
        n,
        m: Some(m),
        word: crate::periodicity::analyze(&w)?,
        extension: Some(crate::duval::classify_extension(&w, &u)?),
    })
}

pub fn family_assous_pouzet(n: usize) -> crate::Result<FamilyReport> {
    let w = crate::duval::family_assous_pouzet(n)?;
    Ok(FamilyReport {
        family: "assous-pouzet",
        n,
        m: None,
        word: crate::periodicity::analyze(&w)?,
        extension: None,
    })
}

/// Payload of the `extensions` command.
#[derive(Debug, Clone, Serialize)]
pub struct ExtensionList {
    pub w: crate::Word,
    pub max_extra: usize,
    pub max_nontrivial_len: usize,
    pub extensions: Vec<crate::duval::DuvalClassification>,
}

pub fn extensions(w: &crate::Word, max_extra: usize) -> crate::Result<ExtensionList> {
    let extensions = crate::duval::enumerate_extensions(w, max_extra)?
        .into_iter()
        .map(|(_, c)| c)
        .collect();
    Ok(ExtensionList {
        w: w.clone(),
        max_extra,
        max_nontrivial_len: crate::duval::max_nontrivial_extension_len(w)?,
        extensions,
    })
}
