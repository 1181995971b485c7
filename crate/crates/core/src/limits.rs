use std::sync::OnceLock;

/// Size limits shared by every exponential or matrix-heavy operation.
///
/// The process-wide value is read once from `PSALG_BUDGET`, a comma-separated
/// list of `key=value` pairs with keys `enum`, `basis`, and `exact`, e.g.
/// `PSALG_BUDGET=enum=26,basis=4000000`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set (edge count) for exhaustive subset enumeration.
    pub enumeration_cap: usize,
    /// Largest number of monomials allowed in one graded component.
    pub basis_budget: usize,
    /// Components wider than this switch from exact to modular ranks.
    pub exact_threshold: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            enumeration_cap: 24,
            basis_budget: 1 << 20,
            exact_threshold: 1 << 14,
        }
    }
}

static GLOBAL: OnceLock<Limits> = OnceLock::new();

impl Limits {
    /// Parses a `PSALG_BUDGET` value, starting from the defaults.
    pub fn parse(spec: &str) -> Result<Self, String> {
        let mut limits = Self::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| format!("{key}: not a nonnegative integer: {value:?}"))?;
            match key.trim() {
                "enum" => limits.enumeration_cap = value.min(63),
                "basis" => limits.basis_budget = value,
                "exact" => limits.exact_threshold = value,
                other => return Err(format!("unknown budget key {other:?}")),
            }
        }
        Ok(limits)
    }

    /// Process-wide limits: `PSALG_BUDGET` if set and valid, defaults otherwise.
    pub fn global() -> Limits {
        *GLOBAL.get_or_init(|| {
            std::env::var("PSALG_BUDGET")
                .ok()
                .and_then(|s| Self::parse(&s).ok())
                .unwrap_or_default()
        })
    }
}
