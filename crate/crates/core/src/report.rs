use std::fmt;

/// Outcome of a verification suite: informational lines plus any failed
/// assertions. A report holds when nothing failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub lines: Vec<String>,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            ..Report::default()
        }
    }

    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    /// Records `what` as a failure unless `ok`.
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        if !ok {
            self.failures.push(what());
        }
        ok
    }

    pub fn fail(&mut self, what: impl Into<String>) {
        self.failures.push(what.into());
    }

    /// Folds another report in, prefixing its lines with its name.
    pub fn absorb(&mut self, other: Report) {
        let prefix = other.name;
        self.lines
            .extend(other.lines.into_iter().map(|l| format!("{prefix}: {l}")));
        self.failures
            .extend(other.failures.into_iter().map(|l| format!("{prefix}: {l}")));
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.name, if self.holds() { "holds" } else { "FAILS" })?;
        for l in &self.lines {
            writeln!(f, "  {l}")?;
        }
        for l in &self.failures {
            writeln!(f, "  failed: {l}")?;
        }
        Ok(())
    }
}
