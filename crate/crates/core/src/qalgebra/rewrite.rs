//! Normal ordering by repeated rewriting of adjacent pairs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::coeff::Coeff;
use super::poly::{add_into, NCPoly, Word};
use super::preset::{AlgebraPreset, RuleTable};
use crate::{Error, Result};

/// Default cap on the number of single rewrites per call.
pub const DEFAULT_STEP_BUDGET: usize = 5_000_000;

/// Which redex of a word is rewritten first.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// A preset together with its rule table in the coefficient ring `C`.
#[derive(Clone, Debug)]
pub struct Rewriter<C> {
    preset: AlgebraPreset,
    rules: RuleTable<C>,
    strategy: Strategy,
    budget: usize,
}

impl<C: Coeff> Rewriter<C> {
    pub fn new(preset: AlgebraPreset) -> Self {
        Rewriter { preset, rules: preset.rules().convert(), strategy: Strategy::default(), budget: DEFAULT_STEP_BUDGET }
    }

    pub fn with_strategy(mut self, s: Strategy) -> Self {
        self.strategy = s;
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn preset(&self) -> AlgebraPreset {
        self.preset
    }

    fn redex(&self, w: &[super::GeneratorSymbol]) -> Option<usize> {
        let hit = |&i: &usize| self.rules.get(w[i], w[i + 1]).is_some();
        let n = w.len().saturating_sub(1);
        match self.strategy {
            Strategy::Leftmost => (0..n).find(hit),
            Strategy::Rightmost => (0..n).rev().find(hit),
        }
    }

    pub fn is_normal(&self, w: &[super::GeneratorSymbol]) -> bool {
        self.redex(w).is_none()
    }

    /// Rewrites until no term contains an out-of-order pair.
    pub fn normal_order(&self, x: &NCPoly<C>) -> Result<NCPoly<C>> {
        for (w, _) in x.iter() {
            if let Some(g) = w.iter().find(|g| !self.preset.contains(**g)) {
                return Err(Error::Precondition(alloc::format!("{g} is not a generator of {}", self.preset)));
            }
        }
        let mut done: BTreeMap<Word, C> = BTreeMap::new();
        let mut pending = x.clone().into_terms();
        let mut steps = 0usize;
        while !pending.is_empty() {
            let mut next = BTreeMap::new();
            for (w, c) in pending {
                let Some(i) = self.redex(&w) else {
                    add_into(&mut done, w, c);
                    continue;
                };
                steps += 1;
                if steps > self.budget {
                    return Err(Error::RewriteBudget(self.budget));
                }
                let rhs = self.rules.get(w[i], w[i + 1]).expect("redex has a rule");
                for (rc, rw) in rhs {
                    let mut nw: Word = Vec::with_capacity(w.len() + rw.len());
                    nw.extend_from_slice(&w[..i]);
                    nw.extend_from_slice(rw);
                    nw.extend_from_slice(&w[i + 2..]);
                    add_into(&mut next, nw, c.mul(rc));
                }
            }
            pending = next;
        }
        Ok(NCPoly::from_terms(done))
    }
}

/// Normal form of `x` in `preset` with the default strategy and budget.
pub fn normal_order<C: Coeff>(x: &NCPoly<C>, preset: AlgebraPreset) -> Result<NCPoly<C>> {
    Rewriter::new(preset).normal_order(x)
}

/// Normal form with an explicit strategy and step budget.
pub fn normal_order_with<C: Coeff>(
    x: &NCPoly<C>,
    preset: AlgebraPreset,
    strategy: Strategy,
    budget: usize,
) -> Result<NCPoly<C>> {
    Rewriter::new(preset).with_strategy(strategy).with_budget(budget).normal_order(x)
}
