//! The relation catalogue of the modular double of `gl(N)` and its pointwise
//! verification on random test functions.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{build_generator, k_power, GeneratorKind, GzLayout, OmegaParams, ShiftOperator, TestFunction};
use crate::report::{CheckReport, IdentityId};
use crate::{Error, Result};

/// Pass threshold on the relative pointwise error.
pub const REPRESENTATION_TOL: f64 = 1e-8;
/// Resampling limit for degenerate points.
const MAX_REJECTIONS: usize = 100;

/// Relation families. The first nine are relations of one quantum group and
/// come in a plain and a tilde copy; the rest are cross relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationFamily {
    /// `[E_{n,n+1}, E_{m+1,m}] = δ_{nm}(K_nK_{n+1}⁻¹ - K_n⁻¹K_{n+1})/(q - q⁻¹)`
    RaiseLowerCommutator,
    /// `K_n E_{m,m+1} = q^{δ_{nm} - δ_{n,m+1}} E_{m,m+1} K_n`
    KRaise,
    /// `K_n E_{m+1,m} = q^{δ_{n,m+1} - δ_{nm}} E_{m+1,m} K_n`
    KLower,
    /// `[E_{n,n+1}, E_{m,m+1}] = 0` for `m ≠ n ± 1`
    RaiseCommute,
    /// q-Serre in `E_{n,n+1}² E_{n+1,n+2}`
    RaiseSerreFirst,
    /// q-Serre in `E_{n+1,n+2}² E_{n,n+1}`
    RaiseSerreSecond,
    /// `[E_{n+1,n}, E_{m+1,m}] = 0` for `m ≠ n ± 1`
    LowerCommute,
    /// q-Serre in `E_{n+1,n}² E_{n+2,n+1}`
    LowerSerreFirst,
    /// q-Serre in `E_{n+2,n+1}² E_{n+1,n}`
    LowerSerreSecond,
    /// `E_{n,n+1} K̃_m = (-1)^{δ_{nm} + δ_{n,m-1}} K̃_m E_{n,n+1}`
    RaiseDualK,
    /// `E_{n+1,n} K̃_m = (-1)^{δ_{nm} + δ_{n,m-1}} K̃_m E_{n+1,n}`
    LowerDualK,
    /// `E_{n,n+1} Ẽ_{m,m+1} = (-1)^{δ_{n,m+1} + δ_{n+1,m}} Ẽ_{m,m+1} E_{n,n+1}`
    RaiseDualRaise,
    /// `E_{n,n+1} Ẽ_{m+1,m} = Ẽ_{m+1,m} E_{n,n+1}`
    RaiseDualLower,
    /// `E_{n+1,n} Ẽ_{m+1,m} = (-1)^{δ_{n,m-1} + δ_{n-1,m}} Ẽ_{m+1,m} E_{n+1,n}`
    LowerDualLower,
    /// `Ẽ_{n,n+1} K_m = (-1)^{δ_{nm} + δ_{n,m-1}} K_m Ẽ_{n,n+1}`
    DualRaiseK,
    /// `Ẽ_{n+1,n} K_m = (-1)^{δ_{nm} + δ_{n,m-1}} K_m Ẽ_{n+1,n}`
    DualLowerK,
    /// `Ẽ_{n,n+1} E_{m+1,m} = E_{m+1,m} Ẽ_{n,n+1}`
    DualRaiseLower,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 17] = [
        RelationFamily::RaiseLowerCommutator,
        RelationFamily::KRaise,
        RelationFamily::KLower,
        RelationFamily::RaiseCommute,
        RelationFamily::RaiseSerreFirst,
        RelationFamily::RaiseSerreSecond,
        RelationFamily::LowerCommute,
        RelationFamily::LowerSerreFirst,
        RelationFamily::LowerSerreSecond,
        RelationFamily::RaiseDualK,
        RelationFamily::LowerDualK,
        RelationFamily::RaiseDualRaise,
        RelationFamily::RaiseDualLower,
        RelationFamily::LowerDualLower,
        RelationFamily::DualRaiseK,
        RelationFamily::DualLowerK,
        RelationFamily::DualRaiseLower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationFamily::RaiseLowerCommutator => "raise_lower_commutator",
            RelationFamily::KRaise => "k_raise",
            RelationFamily::KLower => "k_lower",
            RelationFamily::RaiseCommute => "raise_commute",
            RelationFamily::RaiseSerreFirst => "raise_serre_first",
            RelationFamily::RaiseSerreSecond => "raise_serre_second",
            RelationFamily::LowerCommute => "lower_commute",
            RelationFamily::LowerSerreFirst => "lower_serre_first",
            RelationFamily::LowerSerreSecond => "lower_serre_second",
            RelationFamily::RaiseDualK => "cross_raise_dual_k",
            RelationFamily::LowerDualK => "cross_lower_dual_k",
            RelationFamily::RaiseDualRaise => "cross_raise_dual_raise",
            RelationFamily::RaiseDualLower => "cross_raise_dual_lower",
            RelationFamily::LowerDualLower => "cross_lower_dual_lower",
            RelationFamily::DualRaiseK => "cross_dual_raise_k",
            RelationFamily::DualLowerK => "cross_dual_lower_k",
            RelationFamily::DualRaiseLower => "cross_dual_raise_lower",
        }
    }

    pub fn is_cross(self) -> bool {
        self >= RelationFamily::RaiseDualK
    }

    /// Index pairs `(n, m)` the family is defined for in rank `big_n`.
    fn index_pairs(self, big_n: usize) -> Vec<(usize, usize)> {
        let e = 1..big_n;
        let k = 1..=big_n;
        let mut out = Vec::new();
        use RelationFamily::*;
        match self {
            RaiseLowerCommutator | RaiseDualRaise | RaiseDualLower | LowerDualLower | DualRaiseLower => {
                for n in e.clone() {
                    for m in e.clone() {
                        out.push((n, m));
                    }
                }
            }
            KRaise | KLower => {
                for n in k.clone() {
                    for m in e.clone() {
                        out.push((n, m));
                    }
                }
            }
            RaiseDualK | LowerDualK | DualRaiseK | DualLowerK => {
                for n in e.clone() {
                    for m in k.clone() {
                        out.push((n, m));
                    }
                }
            }
            RaiseCommute | LowerCommute => {
                for n in e.clone() {
                    for m in n..big_n {
                        if m != n + 1 {
                            out.push((n, m));
                        }
                    }
                }
            }
            RaiseSerreFirst | RaiseSerreSecond | LowerSerreFirst | LowerSerreSecond => {
                for n in 1..big_n.saturating_sub(1) {
                    out.push((n, n + 1));
                }
            }
        }
        out
    }
}

/// One instance of a relation: family, plain or tilde copy, indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    pub family: RelationFamily,
    /// The tilde copy of a single-group relation (always `false` for cross
    /// relations).
    pub dual: bool,
    pub n: usize,
    pub m: usize,
}

fn delta(a: usize, b: usize) -> i32 {
    i32::from(a == b)
}

fn sign(exp: i32) -> Complex64 {
    Complex64::new(if exp % 2 == 0 { 1.0 } else { -1.0 }, 0.0)
}

impl Relation {
    pub fn name(&self) -> String {
        let prefix = if self.dual { "dual_" } else { "" };
        format!("{prefix}{} n={} m={}", self.family.name(), self.n, self.m)
    }

    /// Both sides of the relation as operators.
    pub fn sides(&self, layout: GzLayout, p: OmegaParams) -> Result<(ShiftOperator, ShiftOperator)> {
        use GeneratorKind as G;
        use RelationFamily::*;
        let (n, m) = (self.n, self.m);
        let d = self.dual;
        let pick = |plain: G| -> G {
            match (d, plain) {
                (false, k) => k,
                (true, G::ERaise) => G::TERaise,
                (true, G::ELower) => G::TELower,
                (true, G::K) => G::TK,
                (true, k) => k,
            }
        };
        let gen = |kind: G, i: usize| build_generator(kind, i, layout, p);
        let own = |kind: G, i: usize| build_generator(pick(kind), i, layout, p);
        let qq = if d { p.qtilde() } else { p.q() };
        let prod = |ops: &[&ShiftOperator]| ShiftOperator::product(ops);

        let swap = |a: ShiftOperator, b: ShiftOperator, c: Complex64| -> Result<(ShiftOperator, ShiftOperator)> {
            Ok((prod(&[&a, &b])?, prod(&[&b, &a])?.scale(c)))
        };
        let serre = |x: ShiftOperator, y: ShiftOperator| -> Result<(ShiftOperator, ShiftOperator)> {
            let lhs = prod(&[&x, &x, &y])?.add(&prod(&[&y, &x, &x])?)?;
            let rhs = prod(&[&x, &y, &x])?.scale(qq + 1.0 / qq);
            Ok((lhs, rhs))
        };
        let one = Complex64::new(1.0, 0.0);

        match self.family {
            RaiseLowerCommutator => {
                let a = own(G::ERaise, n)?;
                let b = own(G::ELower, m)?;
                let lhs = prod(&[&a, &b])?;
                let mut rhs = prod(&[&b, &a])?;
                if n == m {
                    let kk = |s: f64, i: usize| k_power(i, s, d, layout, p);
                    let cartan = prod(&[&kk(1.0, n), &kk(-1.0, n + 1)])?.sub(&prod(&[&kk(-1.0, n), &kk(1.0, n + 1)])?)?;
                    rhs = rhs.add(&cartan.scale(one / (qq - 1.0 / qq)))?;
                }
                Ok((lhs, rhs))
            }
            KRaise => swap(own(G::K, n)?, own(G::ERaise, m)?, qq.powi(delta(n, m) - delta(n, m + 1))),
            KLower => swap(own(G::K, n)?, own(G::ELower, m)?, qq.powi(delta(n, m + 1) - delta(n, m))),
            RaiseCommute => swap(own(G::ERaise, n)?, own(G::ERaise, m)?, one),
            LowerCommute => swap(own(G::ELower, n)?, own(G::ELower, m)?, one),
            RaiseSerreFirst => serre(own(G::ERaise, n)?, own(G::ERaise, n + 1)?),
            RaiseSerreSecond => serre(own(G::ERaise, n + 1)?, own(G::ERaise, n)?),
            LowerSerreFirst => serre(own(G::ELower, n)?, own(G::ELower, n + 1)?),
            LowerSerreSecond => serre(own(G::ELower, n + 1)?, own(G::ELower, n)?),
            RaiseDualK => swap(gen(G::ERaise, n)?, gen(G::TK, m)?, sign(delta(n, m) + delta(n + 1, m))),
            LowerDualK => swap(gen(G::ELower, n)?, gen(G::TK, m)?, sign(delta(n, m) + delta(n + 1, m))),
            RaiseDualRaise => swap(gen(G::ERaise, n)?, gen(G::TERaise, m)?, sign(delta(n, m + 1) + delta(n + 1, m))),
            RaiseDualLower => swap(gen(G::ERaise, n)?, gen(G::TELower, m)?, one),
            LowerDualLower => swap(gen(G::ELower, n)?, gen(G::TELower, m)?, sign(delta(n + 1, m) + delta(n, m + 1))),
            DualRaiseK => swap(gen(G::TERaise, n)?, gen(G::K, m)?, sign(delta(n, m) + delta(n + 1, m))),
            DualLowerK => swap(gen(G::TELower, n)?, gen(G::K, m)?, sign(delta(n, m) + delta(n + 1, m))),
            DualRaiseLower => swap(gen(G::TERaise, n)?, gen(G::ELower, m)?, one),
        }
    }
}

/// Every relation instance for rank `big_n`, in a fixed order.
pub fn catalogue(big_n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for family in RelationFamily::ALL {
        let copies: &[bool] = if family.is_cross() { &[false] } else { &[false, true] };
        for &dual in copies {
            for (n, m) in family.index_pairs(big_n) {
                out.push(Relation { family, dual, n, m });
            }
        }
    }
    out
}

/// A random point and test function for one trial.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialSample {
    pub point: Vec<Complex64>,
    pub function: TestFunction,
}

fn well_separated(layout: GzLayout, point: &[Complex64]) -> bool {
    (1..=layout.rank()).all(|row| {
        (1..=row).all(|j| {
            (j + 1..=row).all(|s| (point[layout.index(row, j)] - point[layout.index(row, s)]).norm() >= 2.0 * super::MIN_SEPARATION)
        })
    })
}

/// Draws the sample of trial `trial` from the stream `(seed, trial)`.
pub fn sample_trial(layout: GzLayout, seed: u64, trial: u64) -> Result<TrialSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let len = layout.len();
    for _ in 0..MAX_REJECTIONS {
        let point: Vec<Complex64> = (0..len).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0)).collect();
        let linear = (0..len).map(|_| Complex64::new(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5))).collect();
        let quadratic = (0..len).map(|_| rng.gen_range(-super::MAX_QUADRATIC..super::MAX_QUADRATIC)).collect();
        if well_separated(layout, &point) {
            return Ok(TrialSample { point, function: TestFunction::new(linear, quadratic)? });
        }
    }
    Err(Error::Degenerate(format!("no generic sample after {MAX_REJECTIONS} draws")))
}

/// `|Σ lhs - Σ rhs|` relative to the largest term magnitude sum.
fn pointwise_error(lhs: &ShiftOperator, rhs: &ShiftOperator, s: &TrialSample) -> Result<f64> {
    let l = lhs.contributions(&s.function, &s.point)?;
    let r = rhs.contributions(&s.function, &s.point)?;
    let diff = (l.iter().sum::<Complex64>() - r.iter().sum::<Complex64>()).norm();
    let scale = l.iter().map(|c| c.norm()).sum::<f64>().max(r.iter().map(|c| c.norm()).sum::<f64>());
    Ok(if scale > 0.0 { diff / scale } else { diff })
}

/// Maximal relative pointwise error of `rel` over `trials` random samples.
pub fn verify_relation(rel: Relation, big_n: usize, trials: usize, p: OmegaParams, seed: u64) -> CheckReport {
    let label = rel.name();
    let run = || -> Result<f64> {
        if trials == 0 {
            return Err(Error::Precondition("at least one trial is required".into()));
        }
        let layout = GzLayout::new(big_n)?;
        let (lhs, rhs) = rel.sides(layout, p)?;
        let mut worst = 0.0f64;
        for t in 0..trials {
            let s = sample_trial(layout, seed, t as u64)?;
            let e = pointwise_error(&lhs, &rhs, &s)?;
            worst = if e.is_nan() { f64::NAN } else { worst.max(e) };
        }
        Ok(worst)
    };
    let report = match run() {
        Ok(err) => CheckReport::measured(IdentityId::Representation, label, err, REPRESENTATION_TOL),
        Err(e) => CheckReport::failed(IdentityId::Representation, label, e.to_string()),
    };
    report
        .with_param("relation", rel.family.name())
        .with_param("dual", if rel.dual { "yes" } else { "no" })
        .with_param("N", big_n)
        .with_param("n", rel.n)
        .with_param("m", rel.m)
        .with_param("trials", trials)
        .with_param("seed", seed.to_string())
        .with_param("omega1", p.omega1)
        .with_param("omega2", p.omega2)
}

/// Runs the whole catalogue for rank `big_n`.
pub fn verify_all(big_n: usize, trials: usize, p: OmegaParams, seed: u64) -> Vec<CheckReport> {
    catalogue(big_n).into_iter().map(|r| verify_relation(r, big_n, trials, p, seed)).collect()
}
