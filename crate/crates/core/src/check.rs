use serde::Serialize;

/// How many offending inputs a [`CheckResult`] keeps verbatim.
pub const MAX_KEPT_VIOLATIONS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// Outcome of checking one property over one or many instances. Results from
/// disjoint instance sets merge with [`CheckResult::merge`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub lemma: String,
    pub instances: u64,
    pub violations: Vec<String>,
    pub violation_count: u64,
    pub status: CheckStatus,
}

impl CheckResult {
    pub fn new(lemma: impl Into<String>) -> Self {
        CheckResult {
            lemma: lemma.into(),
            instances: 0,
            violations: Vec::new(),
            violation_count: 0,
            status: CheckStatus::Pass,
        }
    }

    pub fn not_applicable(lemma: impl Into<String>) -> Self {
        CheckResult {
            status: CheckStatus::NotApplicable,
            ..CheckResult::new(lemma)
        }
    }

    /// Records one tested instance. `input` is only rendered on failure.
    pub fn record(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.instances += 1;
        if self.status == CheckStatus::NotApplicable {
            self.status = CheckStatus::Pass;
        }
        if !ok {
            self.violation_count += 1;
            self.status = CheckStatus::Fail;
            if self.violations.len() < MAX_KEPT_VIOLATIONS {
                self.violations.push(input());
            }
        }
    }

    pub fn merge(&mut self, other: CheckResult) {
        self.instances += other.instances;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < MAX_KEPT_VIOLATIONS {
                self.violations.push(v);
            }
        }
        self.status = match (self.status, other.status) {
            (CheckStatus::Fail, _) | (_, CheckStatus::Fail) => CheckStatus::Fail,
            (CheckStatus::NotApplicable, CheckStatus::NotApplicable) => CheckStatus::NotApplicable,
            _ => CheckStatus::Pass,
        };
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn is_not_applicable(&self) -> bool {
        self.status == CheckStatus::NotApplicable
    }

    /// Sorts kept violations so merged results do not depend on merge order.
    pub(crate) fn normalize(&mut self) {
        self.violations.sort();
    }
}
