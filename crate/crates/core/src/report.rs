//! Pass/fail records shared by the bound and inequality checkers.

/// One checked instance: its parameters, both sides of the comparison as
/// exact decimal strings, and the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRow {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub name: String,
    pub rows: Vec<CheckRow>,
    /// Largest observed `lhs/rhs`-style ratio, for reporting only.
    pub max_ratio: Option<f64>,
    pub max_ratio_at: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, params: String, lhs: impl ToString, rhs: impl ToString, pass: bool) {
        self.rows.push(CheckRow {
            params,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
        });
    }

    pub fn observe_ratio(&mut self, ratio: f64, at: impl FnOnce() -> String) {
        if self.max_ratio.is_none_or(|m| ratio > m) {
            self.max_ratio = Some(ratio);
            self.max_ratio_at = Some(at());
        }
    }

    pub fn checked(&self) -> usize {
        self.rows.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckRow> {
        self.failures().next()
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}
