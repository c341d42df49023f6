//! Violation reports shared by every verifier in the crate.

use std::fmt;

/// Default number of violations a report keeps before truncating.
pub const DEFAULT_CAP: usize = 100;

/// A named law checked by one of the verifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    // group layer
    Associativity,
    Identity,
    Inverse,
    // multiplicative Lie algebra axioms
    M1,
    M2,
    M3,
    M4,
    M5,
    // maps
    GroupHom,
    StarHom,
    // extensions
    KernelAbelian,
    KernelTrivialStar,
    IotaInjective,
    BetaSurjective,
    Exactness,
    SectionSplits,
    SectionNormalized,
    SquareCommutes,
    // center factor systems
    C0,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    // Lie-center factor systems
    L0,
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    // twist data
    TwistHom,
    // factor system morphisms
    MorphismNormalized,
    MorphismGroupLaw,
    MorphismStarLaw,
    MorphismAction,
    // cohomology exact sequence
    KernelIsHom,
    ImageIsCoboundaries,
    QuotientKernel,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One failing instance of a law, with the element tuple that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.law)?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

/// Collected violations. Empty means the structure passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    violations: Vec<Violation>,
    cap: usize,
    truncated: bool,
}

impl Default for Report {
    fn default() -> Self {
        Self::with_cap(DEFAULT_CAP)
    }
}

impl Report {
    pub fn with_cap(cap: usize) -> Self {
        Report {
            violations: Vec::new(),
            cap,
            truncated: false,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// True when more violations existed than the cap allowed to record.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Records a violation. Returns false once the cap is reached so callers
    /// can stop scanning early.
    pub fn push(&mut self, law: Law, witness: Vec<usize>) -> bool {
        if self.violations.len() >= self.cap {
            self.truncated = true;
            return false;
        }
        self.violations.push(Violation { law, witness });
        true
    }

    pub fn is_full(&self) -> bool {
        self.violations.len() >= self.cap
    }

    pub fn has(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn first(&self, law: Law) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }

    pub fn merge(&mut self, other: Report) {
        for v in other.violations {
            if !self.push(v.law, v.witness) {
                break;
            }
        }
        self.truncated |= other.truncated;
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("no violations");
        }
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        if self.truncated {
            writeln!(f, "  ... (truncated at {})", self.cap)?;
        }
        Ok(())
    }
}
