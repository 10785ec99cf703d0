//! Command implementations behind the `uqsl2` binary: identity
//! verification suites, module construction with Dirac cohomology, and
//! center/Harish-Chandra queries, each rendered as JSON or a plain table.
//!
//! Exit-code contract: 0 success, 1 verification failure, 2 usage or
//! parse error, 3 resource limit.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use uqsl2::cohomology::{
    dirac_cohomology, infinitesimal_character_check, CharacterCheck, CohomologyError,
    DiracCohomologyReport,
};
use uqsl2::report::{IdentityReport, ModeInfo, SCHEMA_VERSION};
use uqsl2::repmod::family::FamilyRegistry;
use uqsl2::repmod::{BuiltModule, IrreducibilityVerdict, RepmodError};
use uqsl2::scalars::{FieldMode, ScalarError};
use uqsl2::tensoralg::TensorAlgebra;
use uqsl2::uq::{parse::parse_element, UqAlgebra, UqError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable overriding the PBW term-count guardrail.
pub const TERM_LIMIT_ENV: &str = "UQSL2_TERM_LIMIT";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Table,
}

/// A failure carrying the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn map_uq_error(e: UqError) -> CliError {
    let code = match e {
        UqError::TermLimit { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    };
    CliError {
        code,
        message: e.to_string(),
    }
}

fn map_repmod_error(e: RepmodError) -> CliError {
    CliError::usage(e.to_string())
}

fn map_cohomology_error(e: CohomologyError) -> CliError {
    let code = match e {
        CohomologyError::Uq(UqError::TermLimit { .. }) => EXIT_RESOURCE,
        CohomologyError::RelationCheckFailed => EXIT_VERIFY_FAILED,
        _ => EXIT_USAGE,
    };
    CliError {
        code,
        message: e.to_string(),
    }
}

/// Parse `generic` or `root:p'`.
pub fn parse_mode(text: &str) -> Result<FieldMode, CliError> {
    if text == "generic" {
        return Ok(FieldMode::Generic);
    }
    if let Some(order) = text.strip_prefix("root:") {
        let p_prime: u32 = order
            .parse()
            .map_err(|_| CliError::usage(format!("invalid root order '{}'", order)))?;
        return FieldMode::root_of_unity(p_prime).map_err(|e: ScalarError| {
            CliError::usage(e.to_string())
        });
    }
    Err(CliError::usage(format!(
        "invalid mode '{}'; expected 'generic' or 'root:N'",
        text
    )))
}

fn term_limit_from_env() -> Option<usize> {
    std::env::var(TERM_LIMIT_ENV).ok()?.parse().ok()
}

fn tensor_algebra(mode: FieldMode) -> TensorAlgebra {
    match term_limit_from_env() {
        Some(limit) => TensorAlgebra::with_term_limit(mode, limit),
        None => TensorAlgebra::new(mode),
    }
}

// ---- verify ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyOutput {
    pub schema_version: u32,
    pub mode: ModeInfo,
    pub identities: Vec<IdentityReport>,
    pub all_passed: bool,
}

/// Run the full identity suite; the exit code is 1 when anything fails.
pub fn cmd_verify(mode: FieldMode) -> Result<(VerifyOutput, i32), CliError> {
    let t = tensor_algebra(mode);
    let identities = t.verify_suite().map_err(map_uq_error)?;
    let all_passed = identities.iter().all(|r| r.ok);
    let code = if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok((
        VerifyOutput {
            schema_version: SCHEMA_VERSION,
            mode: mode.into(),
            identities,
            all_passed,
        },
        code,
    ))
}

pub fn render_verify_table(out: &VerifyOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "mode: {}", mode_label(&out.mode));
    for r in &out.identities {
        let tag = if r.ok { "ok  " } else { "FAIL" };
        let _ = writeln!(s, "[{}] {}", tag, r.name);
        if let Some(diff) = &r.difference {
            let _ = writeln!(s, "       difference: {}", diff);
        }
    }
    let _ = writeln!(
        s,
        "{} identities checked; {}",
        out.identities.len(),
        if out.all_passed { "all passed" } else { "FAILURES PRESENT" }
    );
    s
}

// ---- cohomology ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CohomologyOutput {
    pub schema_version: u32,
    pub mode: ModeInfo,
    pub cohomology: DiracCohomologyReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub irreducibility: Option<IrreducibilityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub infinitesimal_character: Option<CharacterCheck>,
}

/// Build the module named by the descriptor and compute its cohomology
/// report, with the irreducibility verdict and infinitesimal-character
/// check included where they apply.
pub fn cmd_cohomology(
    descriptor: &str,
    mode: FieldMode,
    window: Option<usize>,
) -> Result<(CohomologyOutput, i32), CliError> {
    let registry = FamilyRegistry::standard();
    let mut text = descriptor.trim().to_string();
    // the flag is a default for windowed families only
    if let Some(w) = window {
        if text.starts_with("verma") && !text.contains("window=") {
            let _ = write!(text, " window={}", w);
        }
    }
    let (family, desc) = registry
        .parse_descriptor(&text, mode)
        .map_err(map_repmod_error)?;
    let module = family.build(&desc, mode).map_err(map_repmod_error)?;
    let cohomology = dirac_cohomology(&module).map_err(map_cohomology_error)?;
    let irreducibility = match family.irreducibility(&desc, mode) {
        Ok(v) => Some(v),
        Err(RepmodError::IrreducibilityNotApplicable) => None,
        Err(e) => return Err(map_repmod_error(e)),
    };
    let infinitesimal_character = match &module {
        BuiltModule::Finite(fm) => {
            let alg = UqAlgebra::new(mode);
            match infinitesimal_character_check(fm, &alg) {
                Ok(check) => Some(check),
                Err(CohomologyError::NotInfinitesimalCharacter) => None,
                Err(e) => return Err(map_cohomology_error(e)),
            }
        }
        BuiltModule::Window(_) => None,
    };
    Ok((
        CohomologyOutput {
            schema_version: SCHEMA_VERSION,
            mode: mode.into(),
            cohomology,
            irreducibility,
            infinitesimal_character,
        },
        EXIT_OK,
    ))
}

pub fn render_cohomology_table(out: &CohomologyOutput) -> String {
    let mut s = String::new();
    let c = &out.cohomology;
    let _ = writeln!(s, "module: {}", c.module);
    let _ = writeln!(s, "mode: {}", mode_label(&out.mode));
    if let Some(v) = &out.irreducibility {
        let _ = writeln!(
            s,
            "irreducible: {} ({})",
            if v.irreducible { "yes" } else { "no" },
            v.criterion
        );
    }
    let _ = writeln!(s, "H_D classes:");
    if c.s_minus.is_empty() && c.s_plus.is_empty() {
        let _ = writeln!(s, "  (none)");
    }
    for class in &c.s_minus {
        let _ = writeln!(
            s,
            "  {} (x) s_-1   [delta(K) = {}]",
            class.vector, class.eigenvalue
        );
    }
    for class in &c.s_plus {
        let _ = writeln!(
            s,
            "  {} (x) s_1    [delta(K) = {}]",
            class.vector, class.eigenvalue
        );
    }
    match (c.total_dim, &c.infinite_hint) {
        (Some(d), _) => {
            let _ = writeln!(s, "total dimension: {}", d);
        }
        (None, Some(hint)) => {
            let _ = writeln!(
                s,
                "total dimension: infinite within periodic pattern (weight period {})",
                hint.weight_period
            );
        }
        (None, None) => {}
    }
    if let Some(w) = &c.certified_window {
        let _ = writeln!(
            s,
            "certified window: t = 0..{} (s_1 side), t = 0..{} (s_-1 side) of window {}",
            w.s_plus_t_max, w.s_minus_t_max, w.window
        );
    }
    for note in &c.notes {
        let _ = writeln!(s, "note: {}", note);
    }
    if let Some(check) = &out.infinitesimal_character {
        let _ = writeln!(
            s,
            "infinitesimal character: Cas_q acts by {}; zeta-comparison {}",
            check.casimir_scalar,
            if check.ok { "matches" } else { "FAILS" }
        );
        for cmp in &check.comparisons {
            let _ = writeln!(
                s,
                "  class {} at {} -> zeta(Cas_q) = {} [{}]",
                cmp.class,
                cmp.eigenvalue,
                cmp.zeta_casimir_value,
                if cmp.matches { "ok" } else { "MISMATCH" }
            );
        }
    }
    s
}

// ---- center ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CenterOutput {
    pub schema_version: u32,
    pub mode: ModeInfo,
    pub expr: String,
    pub normal_form: String,
    pub is_central: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zeta: Option<String>,
}

/// Parse an element, test centrality, and when central render its images
/// under mu, gamma and zeta. Non-centrality is data, not a failure.
pub fn cmd_center(expr: &str, mode: FieldMode) -> Result<(CenterOutput, i32), CliError> {
    let t = tensor_algebra(mode);
    let alg = t.uq();
    let z = parse_element(alg, expr)
        .map_err(|e| CliError::usage(format!("expression: {}", e)))?;
    let is_central = alg.is_central(&z).map_err(map_uq_error)?;
    let (mu, gamma, zeta) = if is_central {
        let mu = alg.hc_mu(&z);
        let gamma = alg.hc_gamma(&z).map_err(map_uq_error)?;
        let zeta = t.zeta(&z).map_err(map_uq_error)?;
        (
            Some(mu.to_string()),
            Some(gamma.to_string()),
            Some(zeta.to_string()),
        )
    } else {
        (None, None, None)
    };
    Ok((
        CenterOutput {
            schema_version: SCHEMA_VERSION,
            mode: mode.into(),
            expr: expr.to_string(),
            normal_form: z.to_string(),
            is_central,
            mu,
            gamma,
            zeta,
        },
        EXIT_OK,
    ))
}

pub fn render_center_table(out: &CenterOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "mode: {}", mode_label(&out.mode));
    let _ = writeln!(s, "expression: {}", out.expr);
    let _ = writeln!(s, "normal form: {}", out.normal_form);
    let _ = writeln!(s, "central: {}", if out.is_central { "yes" } else { "no" });
    if let Some(mu) = &out.mu {
        let _ = writeln!(s, "mu(z)    = {}", mu);
    }
    if let Some(gamma) = &out.gamma {
        let _ = writeln!(s, "gamma(z) = {}", gamma);
    }
    if let Some(zeta) = &out.zeta {
        let _ = writeln!(s, "zeta(z)  = {}", zeta);
    }
    s
}

fn mode_label(mode: &ModeInfo) -> String {
    match mode {
        ModeInfo::Generic => "generic".to_string(),
        ModeInfo::RootOfUnity { p_prime, p } => {
            format!("root of unity, p' = {}, p = {}", p_prime, p)
        }
    }
}

/// Serialize a report as pretty JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}
