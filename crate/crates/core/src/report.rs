use std::fmt;

/// Outcome of a verification pass: empty `failures` means the check passed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub failures: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }

    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        self.failures
            .extend(other.failures.into_iter().map(|f| format!("{prefix}: {f}")));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass");
        }
        writeln!(f, "fail ({} issue(s))", self.failures.len())?;
        for issue in &self.failures {
            writeln!(f, "  - {issue}")?;
        }
        Ok(())
    }
}
