//! Name-keyed registry of module families.
//!
//! Each family implements [`ModuleFamily`]: it parses its parameters from a
//! descriptor's key=value pairs, builds the module, and evaluates its
//! irreducibility criterion. The registry resolves the family named by the
//! first word of a descriptor such as `Tok omega=+1 twok=4`, so callers
//! (the CLI in particular) select the constructor at runtime by name.
//!
//! Descriptor values must not contain whitespace; the scalar grammar needs
//! none (`lambda=q^2+1`, `b=(q+1)/2`).

use std::collections::BTreeMap;

use crate::scalars::{parse::parse_scalar, FieldMode, Scalar};

use super::{
    default_window, is_irreducible, make_t_abl, make_t_omega_k, make_verma, BuiltModule,
    IrreducibilityVerdict, ModuleDescriptor, RepmodError,
};

/// The key=value parameters of a descriptor.
#[derive(Clone, Debug, Default)]
pub struct ParamMap {
    values: BTreeMap<String, String>,
}

impl ParamMap {
    fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn require(&self, key: &str) -> Result<&str, RepmodError> {
        self.get(key)
            .ok_or_else(|| RepmodError::Descriptor(format!("missing parameter '{}'", key)))
    }

    fn require_i64(&self, key: &str) -> Result<i64, RepmodError> {
        self.require(key)?.parse().map_err(|_| {
            RepmodError::Descriptor(format!("parameter '{}' must be an integer", key))
        })
    }

    fn get_usize(&self, key: &str) -> Result<Option<usize>, RepmodError> {
        match self.get(key) {
            None => Ok(None),
            Some(v) => v.parse().map(Some).map_err(|_| {
                RepmodError::Descriptor(format!(
                    "parameter '{}' must be a non-negative integer",
                    key
                ))
            }),
        }
    }

    fn require_scalar(&self, key: &str, mode: FieldMode) -> Result<Scalar, RepmodError> {
        let text = self.require(key)?;
        parse_scalar(text, mode)
            .map_err(|e| RepmodError::Descriptor(format!("parameter '{}': {}", key, e)))
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<(), RepmodError> {
        for key in self.values.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(RepmodError::Descriptor(format!(
                    "unknown parameter '{}'",
                    key
                )));
            }
        }
        Ok(())
    }
}

/// One interchangeable module constructor, selected by name at runtime.
pub trait ModuleFamily: Send + Sync {
    /// The descriptor keyword, e.g. `Tok`.
    fn name(&self) -> &'static str;

    /// One-line usage string for error messages and help output.
    fn usage(&self) -> &'static str;

    /// Resolve descriptor parameters into a typed descriptor.
    fn parse(&self, params: &ParamMap, mode: FieldMode) -> Result<ModuleDescriptor, RepmodError>;

    /// Construct the module; the defining relations are verified.
    fn build(&self, desc: &ModuleDescriptor, mode: FieldMode)
        -> Result<BuiltModule, RepmodError>;

    /// Evaluate the family's irreducibility criterion, where one exists.
    fn irreducibility(
        &self,
        desc: &ModuleDescriptor,
        mode: FieldMode,
    ) -> Result<IrreducibilityVerdict, RepmodError> {
        is_irreducible(desc, mode)
    }
}

struct TOmegaKFamily;

impl ModuleFamily for TOmegaKFamily {
    fn name(&self) -> &'static str {
        "Tok"
    }

    fn usage(&self) -> &'static str {
        "Tok omega=<+1|-1> twok=<non-negative integer>"
    }

    fn parse(&self, params: &ParamMap, _mode: FieldMode) -> Result<ModuleDescriptor, RepmodError> {
        params.check_keys(&["omega", "twok"])?;
        let omega = match params.require("omega")? {
            "+1" | "1" => 1i8,
            "-1" => -1i8,
            other => {
                return Err(RepmodError::Descriptor(format!(
                    "omega must be +1 or -1, got '{}'",
                    other
                )))
            }
        };
        let twok = params.require_i64("twok")?;
        if twok < 0 {
            return Err(RepmodError::Descriptor(
                "twok must be non-negative".to_string(),
            ));
        }
        Ok(ModuleDescriptor::TOmegaK {
            omega,
            twok: twok as u32,
        })
    }

    fn build(
        &self,
        desc: &ModuleDescriptor,
        mode: FieldMode,
    ) -> Result<BuiltModule, RepmodError> {
        match desc {
            ModuleDescriptor::TOmegaK { omega, twok } => {
                Ok(BuiltModule::Finite(make_t_omega_k(*omega, *twok, mode)?))
            }
            _ => Err(RepmodError::Descriptor(
                "descriptor does not belong to family Tok".to_string(),
            )),
        }
    }
}

struct TablFamily;

impl ModuleFamily for TablFamily {
    fn name(&self) -> &'static str {
        "Tabl"
    }

    fn usage(&self) -> &'static str {
        "Tabl a=<scalar> b=<scalar> lambda=<nonzero scalar>   (root-of-unity mode)"
    }

    fn parse(&self, params: &ParamMap, mode: FieldMode) -> Result<ModuleDescriptor, RepmodError> {
        params.check_keys(&["a", "b", "lambda"])?;
        if !mode.is_root_of_unity() {
            return Err(RepmodError::InvalidParameter(
                "Tabl requires root-of-unity mode".to_string(),
            ));
        }
        let a = params.require_scalar("a", mode)?;
        let b = params.require_scalar("b", mode)?;
        let lambda = params.require_scalar("lambda", mode)?;
        if lambda.is_zero() {
            return Err(RepmodError::InvalidParameter(
                "lambda must be nonzero".to_string(),
            ));
        }
        Ok(ModuleDescriptor::Tabl { a, b, lambda })
    }

    fn build(
        &self,
        desc: &ModuleDescriptor,
        mode: FieldMode,
    ) -> Result<BuiltModule, RepmodError> {
        match desc {
            ModuleDescriptor::Tabl { a, b, lambda } => {
                Ok(BuiltModule::Finite(make_t_abl(a, b, lambda, mode)?))
            }
            _ => Err(RepmodError::Descriptor(
                "descriptor does not belong to family Tabl".to_string(),
            )),
        }
    }
}

struct VermaFamily;

impl ModuleFamily for VermaFamily {
    fn name(&self) -> &'static str {
        "verma"
    }

    fn usage(&self) -> &'static str {
        "verma lambda=<integer> [window=<integer >= 2>]"
    }

    fn parse(&self, params: &ParamMap, mode: FieldMode) -> Result<ModuleDescriptor, RepmodError> {
        params.check_keys(&["lambda", "window"])?;
        let lambda = params.require_i64("lambda")?;
        let window = params
            .get_usize("window")?
            .unwrap_or_else(|| default_window(mode));
        if window < 2 {
            return Err(RepmodError::Descriptor(
                "window must be at least 2".to_string(),
            ));
        }
        Ok(ModuleDescriptor::Verma { lambda, window })
    }

    fn build(
        &self,
        desc: &ModuleDescriptor,
        mode: FieldMode,
    ) -> Result<BuiltModule, RepmodError> {
        match desc {
            ModuleDescriptor::Verma { lambda, window } => {
                Ok(BuiltModule::Window(make_verma(*lambda, *window, mode)?))
            }
            _ => Err(RepmodError::Descriptor(
                "descriptor does not belong to family verma".to_string(),
            )),
        }
    }
}

/// Registry of the available families, keyed by descriptor keyword.
pub struct FamilyRegistry {
    families: Vec<Box<dyn ModuleFamily>>,
}

impl FamilyRegistry {
    /// The registry holding the standard families Tok, Tabl and verma.
    pub fn standard() -> Self {
        let mut reg = FamilyRegistry {
            families: Vec::new(),
        };
        reg.register(Box::new(TOmegaKFamily));
        reg.register(Box::new(TablFamily));
        reg.register(Box::new(VermaFamily));
        reg
    }

    pub fn register(&mut self, family: Box<dyn ModuleFamily>) {
        self.families.push(family);
    }

    pub fn get(&self, name: &str) -> Option<&dyn ModuleFamily> {
        self.families
            .iter()
            .find(|f| f.name() == name)
            .map(Box::as_ref)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.families.iter().map(|f| f.name()).collect()
    }

    pub fn usages(&self) -> Vec<&'static str> {
        self.families.iter().map(|f| f.usage()).collect()
    }

    /// Split a descriptor into its family and typed parameters.
    pub fn parse_descriptor(
        &self,
        text: &str,
        mode: FieldMode,
    ) -> Result<(&dyn ModuleFamily, ModuleDescriptor), RepmodError> {
        let mut words = text.split_whitespace();
        let name = words
            .next()
            .ok_or_else(|| RepmodError::Descriptor("empty descriptor".to_string()))?;
        let family = self
            .get(name)
            .ok_or_else(|| RepmodError::UnknownFamily(name.to_string()))?;
        let mut params = ParamMap::default();
        for word in words {
            let (key, value) = word.split_once('=').ok_or_else(|| {
                RepmodError::Descriptor(format!("expected key=value, got '{}'", word))
            })?;
            if params
                .values
                .insert(key.to_string(), value.to_string())
                .is_some()
            {
                return Err(RepmodError::Descriptor(format!(
                    "duplicate parameter '{}'",
                    key
                )));
            }
        }
        let desc = family.parse(&params, mode)?;
        Ok((family, desc))
    }

    /// Parse and build in one step.
    pub fn build_from_text(
        &self,
        text: &str,
        mode: FieldMode,
    ) -> Result<BuiltModule, RepmodError> {
        let (family, desc) = self.parse_descriptor(text, mode)?;
        family.build(&desc, mode)
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_families_by_name() {
        let reg = FamilyRegistry::standard();
        assert_eq!(reg.names(), vec!["Tok", "Tabl", "verma"]);
        assert!(reg.get("Tok").is_some());
        assert!(reg.get("nope").is_none());
    }

    #[test]
    fn parses_and_builds_descriptors() {
        let reg = FamilyRegistry::standard();
        let g = FieldMode::Generic;
        let built = reg.build_from_text("Tok omega=+1 twok=4", g).unwrap();
        match &built {
            BuiltModule::Finite(m) => assert_eq!(m.dim(), 5),
            _ => panic!("expected a finite module"),
        }
        assert_eq!(built.descriptor().to_string(), "Tok omega=+1 twok=4");

        let r3 = FieldMode::root_of_unity(3).unwrap();
        let built = reg
            .build_from_text("Tabl a=0 b=0 lambda=1", r3)
            .unwrap();
        match &built {
            BuiltModule::Finite(m) => assert_eq!(m.dim(), 3),
            _ => panic!("expected a finite module"),
        }

        let built = reg.build_from_text("verma lambda=0 window=20", r3).unwrap();
        match &built {
            BuiltModule::Window(m) => assert_eq!(m.window(), 20),
            _ => panic!("expected a window module"),
        }
    }

    #[test]
    fn built_modules_pass_relation_checks() {
        let reg = FamilyRegistry::standard();
        let r5 = FieldMode::root_of_unity(5).unwrap();
        for (text, mode) in [
            ("Tok omega=-1 twok=6", FieldMode::Generic),
            ("Tabl a=q b=2 lambda=q^2+1", r5),
            ("verma lambda=3 window=12", r5),
        ] {
            let built = reg.build_from_text(text, mode).unwrap();
            assert!(built.check_relations(), "{}", text);
            assert_eq!(built.mode(), mode);
        }
    }

    #[test]
    fn window_defaults_per_mode() {
        let reg = FamilyRegistry::standard();
        let r3 = FieldMode::root_of_unity(3).unwrap();
        let built = reg.build_from_text("verma lambda=0", r3).unwrap();
        match built {
            BuiltModule::Window(m) => assert_eq!(m.window(), 11),
            _ => panic!(),
        }
        let built = reg
            .build_from_text("verma lambda=-1", FieldMode::Generic)
            .unwrap();
        match built {
            BuiltModule::Window(m) => assert_eq!(m.window(), 20),
            _ => panic!(),
        }
    }

    #[test]
    fn descriptor_errors() {
        let reg = FamilyRegistry::standard();
        let g = FieldMode::Generic;
        assert!(matches!(
            reg.build_from_text("Tok omega=2 twok=1", g),
            Err(RepmodError::Descriptor(_))
        ));
        assert!(matches!(
            reg.build_from_text("Tabl a=1 b=1 lambda=1", g),
            Err(RepmodError::InvalidParameter(_))
        ));
        assert!(matches!(
            reg.build_from_text("Smod x=1", g),
            Err(RepmodError::UnknownFamily(_))
        ));
        let r3 = FieldMode::root_of_unity(3).unwrap();
        assert!(matches!(
            reg.build_from_text("Tabl a=1 b=1 lambda=0", r3),
            Err(RepmodError::InvalidParameter(_))
        ));
        // a pole in a parameter is surfaced with the parameter name
        let err = reg
            .build_from_text("Tabl a=1 b=1 lambda=1/(q^3-1)", r3)
            .unwrap_err();
        match err {
            RepmodError::Descriptor(msg) => assert!(msg.contains("lambda")),
            other => panic!("unexpected error {:?}", other),
        }
    }
}
