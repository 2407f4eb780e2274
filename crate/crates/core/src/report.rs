use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Duration;

/// Outcome of an axiom suite.
///
/// `Partial` means every axiom instance that fits inside a declared finite
/// fragment holds; the structure is certified as a fragment of an infinite
/// structure, not as a total one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    PartialFragment,
}

/// A witness is a tuple of element names instantiating a violated law.
pub type Witness = Vec<String>;

/// Result of checking one law.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LawCheck {
    pub law: String,
    pub holds: bool,
    /// Sorted, deduplicated witness tuples for a violated law (capped).
    pub witnesses: Vec<Witness>,
}

const WITNESS_CAP: usize = 20;

/// Law-by-law result of an axiom suite over one structure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub verdict: Verdict,
    pub laws: Vec<LawCheck>,
    #[serde(with = "duration_millis")]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            verdict: Verdict::Pass,
            laws: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// Record a law with its sorted witness list; a nonempty list marks the
    /// law violated and flips the verdict to `Fail`.
    pub fn law(&mut self, name: impl Into<String>, mut witnesses: Vec<Witness>) -> &mut Self {
        witnesses.sort();
        witnesses.dedup();
        witnesses.truncate(WITNESS_CAP);
        let holds = witnesses.is_empty();
        if !holds {
            self.verdict = Verdict::Fail;
        }
        self.laws.push(LawCheck {
            law: name.into(),
            holds,
            witnesses,
        });
        self
    }

    /// Mark the report as covering only a declared finite fragment.
    pub fn fragment(&mut self) -> &mut Self {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::PartialFragment;
        }
        self
    }

    pub fn law_holds(&self, name: &str) -> bool {
        self.laws.iter().any(|l| l.law == name && l.holds)
    }

    pub fn failed_laws(&self) -> Vec<&str> {
        self.laws
            .iter()
            .filter(|l| !l.holds)
            .map(|l| l.law.as_str())
            .collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {:?} ({:?})", self.subject, self.verdict, self.elapsed)?;
        for law in &self.laws {
            writeln!(f, "  {} {}", if law.holds { "ok  " } else { "FAIL" }, law.law)?;
            for w in &law.witnesses {
                writeln!(f, "       witness ({})", w.join(", "))?;
            }
        }
        Ok(())
    }
}

mod duration_millis {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        (d.as_secs_f64() * 1000.0).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let ms = f64::deserialize(d)?;
        Ok(Duration::from_secs_f64(ms / 1000.0))
    }
}
