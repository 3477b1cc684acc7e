//! Exact noncommutative algebra over `Q(q^{1/2})`.
//!
//! Elements are finite sums of words in the generators of a preset
//! ([`AlgebraPreset`]); [`normal_order`] rewrites them into the PBW order
//! `F… K… E…` (with `E2 < E12 < E1` in `sl3`), so two elements are equal in
//! the quotient algebra iff their normal forms coincide.
//!
//! The formal variable `v` can be read as `q^{1/2}` or `q̃^{1/2}`: every
//! check is parametric in it, see [`Variable`].

mod coeff;
mod coproduct;
mod identities;
mod laurent;
mod poly;
mod preset;
mod rewrite;

pub use coeff::{Coeff, Gaussian, RatFunc};
pub use coproduct::{
    coproduct, coproduct_generator, coproduct_on_leg, defining_relations, verify_coassociativity,
    verify_coproduct_hom, TensorPoly,
};
pub use identities::{
    compare, divided_power, q_binomial, q_factorial, rescaling, verify_commuting_cases, verify_kac,
    verify_mixed_commutator, verify_q_serre, verify_qbinomial, verify_serre_sum, KAC_BOUND, SERRE_BOUND,
};
pub use laurent::Laurent;
pub use poly::{format_word, GenKind, GeneratorSymbol, NCPoly, Word};
pub use preset::{AlgebraPreset, RuleTable};
pub use rewrite::{normal_order, normal_order_with, Rewriter, Strategy, DEFAULT_STEP_BUDGET};

use alloc::vec::Vec;

use crate::report::CheckReport;
use crate::Result;

/// Reading of the formal variable `v`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Variable {
    /// `v = q^{1/2}`, `q = e^{πib²}`.
    #[default]
    Q,
    /// `v = q̃^{1/2}`, `q̃ = e^{πi/b²}`: the dual quantum group.
    QTilde,
}

impl Variable {
    pub fn name(self) -> &'static str {
        match self {
            Variable::Q => "q",
            Variable::QTilde => "q~",
        }
    }
}

/// Bounds for [`symbolic_suite`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SymbolicBounds {
    /// Largest `N` and `M` in the Kac check.
    pub kac: u32,
    /// Largest `m` in the mixed commutators.
    pub commutator: u32,
    /// Largest `N + M` in the Serre sums.
    pub serre: u32,
    /// Largest `N` in the q-binomial check.
    pub binomial: u32,
}

impl Default for SymbolicBounds {
    fn default() -> Self {
        SymbolicBounds { kac: 4, commutator: 4, serre: 5, binomial: 6 }
    }
}

/// One unit of symbolic work.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymbolicJob {
    Kac(u32, u32),
    MixedCommutator(GenKind, u32),
    SerreSum(GenKind, u32, u32),
    QSerre(GenKind),
    CommutingCases,
    QBinomial(u32),
    CoproductHom(AlgebraPreset),
    Coassociativity(AlgebraPreset),
}

impl SymbolicJob {
    pub fn run(self, var: Variable) -> Result<Vec<CheckReport>> {
        let reports = match self {
            SymbolicJob::Kac(n, m) => alloc::vec![verify_kac(n, m)?],
            SymbolicJob::MixedCommutator(g, m) => alloc::vec![verify_mixed_commutator(g, m)?],
            SymbolicJob::SerreSum(g, n, m) => alloc::vec![verify_serre_sum(g, n, m)?],
            SymbolicJob::QSerre(g) => alloc::vec![verify_q_serre(g)?],
            SymbolicJob::CommutingCases => verify_commuting_cases(),
            SymbolicJob::QBinomial(n) => alloc::vec![verify_qbinomial(n)],
            SymbolicJob::CoproductHom(p) => verify_coproduct_hom(p),
            SymbolicJob::Coassociativity(p) => verify_coassociativity(p),
        };
        Ok(reports.into_iter().map(|r| r.with_param("variable", var.name())).collect())
    }
}

/// Every symbolic check within `bounds`, in a fixed order.
pub fn symbolic_jobs(bounds: SymbolicBounds) -> Vec<SymbolicJob> {
    let mut jobs = Vec::new();
    for n in 0..=bounds.kac {
        for m in 0..=bounds.kac {
            jobs.push(SymbolicJob::Kac(n, m));
        }
    }
    for g in [GenKind::E, GenKind::F] {
        for m in 1..=bounds.commutator {
            jobs.push(SymbolicJob::MixedCommutator(g, m));
        }
    }
    for g in [GenKind::E, GenKind::F] {
        for total in 0..=bounds.serre {
            for n in 0..=total {
                jobs.push(SymbolicJob::SerreSum(g, n, total - n));
            }
        }
        jobs.push(SymbolicJob::QSerre(g));
    }
    jobs.push(SymbolicJob::CommutingCases);
    for n in 0..=bounds.binomial {
        jobs.push(SymbolicJob::QBinomial(n));
    }
    for p in [AlgebraPreset::Sl2, AlgebraPreset::Sl3] {
        jobs.push(SymbolicJob::CoproductHom(p));
        jobs.push(SymbolicJob::Coassociativity(p));
    }
    jobs
}

/// Runs [`symbolic_jobs`] sequentially.
pub fn symbolic_suite(bounds: SymbolicBounds, var: Variable) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for job in symbolic_jobs(bounds) {
        out.extend(job.run(var)?);
    }
    Ok(out)
}
