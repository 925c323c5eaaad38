use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::tensor::DenseTensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LawId {
    TwoFactor,
    ProductPenrose,
    Coincidence,
    BEqualsAdag,
    TripleRol,
    YDecomposition,
    Involution,
    CorollaryMn,
}

impl LawId {
    pub const ALL: [LawId; 8] = [
        LawId::TwoFactor,
        LawId::ProductPenrose,
        LawId::Coincidence,
        LawId::BEqualsAdag,
        LawId::TripleRol,
        LawId::YDecomposition,
        LawId::Involution,
        LawId::CorollaryMn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::TwoFactor => "two-factor",
            LawId::ProductPenrose => "product-penrose",
            LawId::Coincidence => "coincidence",
            LawId::BEqualsAdag => "b-c-cross",
            LawId::TripleRol => "triple-rol",
            LawId::YDecomposition => "y-decomposition",
            LawId::Involution => "involution",
            LawId::CorollaryMn => "corollary-mn",
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        LawId::ALL.into_iter().find(|l| l.name() == s).ok_or(())
    }
}

/// A named relative residual.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Residual {
    pub name: &'static str,
    pub value: f64,
}

impl Residual {
    pub fn new(name: &'static str, value: f64) -> Self {
        Self { name, value }
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.value <= tol
    }
}

/// A pseudoinverse whose rank decision was close to the cutoff.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConditioningWarning {
    pub tensor: &'static str,
    pub singular_value: f64,
    pub cutoff: f64,
}

impl fmt::Display for ConditioningWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pseudoinverse of {}: singular value {:e} within a factor 10 of cutoff {:e}",
            self.tensor, self.singular_value, self.cutoff
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// Residuals that the law declares equivalent disagree at the tolerance.
    Ambiguous,
}

/// Outcome of a law check.
#[derive(Clone, Debug)]
pub struct LawReport {
    pub law: LawId,
    /// The law's criterion; `verdict` is true iff all of these hold.
    pub conditions: Vec<Residual>,
    /// Direct test of the identity the criterion characterizes.
    pub direct: Option<Residual>,
    /// Further residuals that must hold exactly when the criterion does.
    pub equivalents: Vec<Residual>,
    /// Pairs that must hold or fail together.
    pub paired: Vec<(Residual, Residual)>,
    /// The two sides of the identity in question.
    pub lhs: DenseTensor,
    pub rhs: DenseTensor,
    pub tolerance: f64,
    pub verdict: bool,
    pub ambiguous: bool,
    pub warnings: Vec<ConditioningWarning>,
}

pub(crate) struct ReportParts {
    pub conditions: Vec<Residual>,
    pub direct: Option<Residual>,
    pub equivalents: Vec<Residual>,
    pub paired: Vec<(Residual, Residual)>,
    pub lhs: DenseTensor,
    pub rhs: DenseTensor,
    pub warnings: Vec<ConditioningWarning>,
}

impl LawReport {
    pub(crate) fn assemble(law: LawId, tolerance: f64, p: ReportParts) -> Self {
        let verdict = p.conditions.iter().all(|r| r.holds(tolerance));
        let ambiguous = p.direct.iter().any(|d| d.holds(tolerance) != verdict)
            || p.equivalents.iter().any(|e| e.holds(tolerance) != verdict)
            || p.paired
                .iter()
                .any(|(x, y)| x.holds(tolerance) != y.holds(tolerance));
        LawReport {
            law,
            conditions: p.conditions,
            direct: p.direct,
            equivalents: p.equivalents,
            paired: p.paired,
            lhs: p.lhs,
            rhs: p.rhs,
            tolerance,
            verdict,
            ambiguous,
            warnings: p.warnings,
        }
    }

    pub fn outcome(&self) -> Verdict {
        match (self.ambiguous, self.verdict) {
            (true, _) => Verdict::Ambiguous,
            (false, true) => Verdict::Holds,
            (false, false) => Verdict::Fails,
        }
    }

    /// Verdict of the direct test, if the law has one.
    pub fn direct_verdict(&self) -> Option<bool> {
        self.direct.map(|d| d.holds(self.tolerance))
    }

    /// Every residual in report order.
    pub fn residuals(&self) -> impl Iterator<Item = &Residual> {
        self.conditions
            .iter()
            .chain(self.direct.iter())
            .chain(self.equivalents.iter())
            .chain(self.paired.iter().flat_map(|(a, b)| [a, b]))
    }
}
