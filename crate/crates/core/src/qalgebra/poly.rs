//! Generators, words and noncommutative polynomials.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::coeff::Coeff;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenKind {
    F,
    Froot12,
    K,
    Kinv,
    E,
    Eroot12,
    /// First element of a q-Weyl pair.
    U,
    /// Second element of a q-Weyl pair.
    V,
}

/// A generator with its node index (ignored for root vectors and `u`, `v`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GeneratorSymbol {
    pub kind: GenKind,
    pub index: u8,
}

impl GeneratorSymbol {
    pub const fn new(kind: GenKind, index: u8) -> Self {
        GeneratorSymbol { kind, index }
    }
    pub const fn e(i: u8) -> Self {
        Self::new(GenKind::E, i)
    }
    pub const fn f(i: u8) -> Self {
        Self::new(GenKind::F, i)
    }
    pub const fn k(i: u8) -> Self {
        Self::new(GenKind::K, i)
    }
    pub const fn kinv(i: u8) -> Self {
        Self::new(GenKind::Kinv, i)
    }
    pub const fn e12() -> Self {
        Self::new(GenKind::Eroot12, 0)
    }
    pub const fn f12() -> Self {
        Self::new(GenKind::Froot12, 0)
    }
    pub const fn u() -> Self {
        Self::new(GenKind::U, 0)
    }
    pub const fn v() -> Self {
        Self::new(GenKind::V, 0)
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.index;
        match self.kind {
            GenKind::E => write!(f, "E{i}"),
            GenKind::F => write!(f, "F{i}"),
            GenKind::K => write!(f, "K{i}"),
            GenKind::Kinv => write!(f, "K{i}^-1"),
            GenKind::Eroot12 => f.write_str("E12"),
            GenKind::Froot12 => f.write_str("F12"),
            GenKind::U => f.write_str("u"),
            GenKind::V => f.write_str("v"),
        }
    }
}

pub type Word = Vec<GeneratorSymbol>;

/// Finite sum of words with nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Default for NCPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> NCPoly<C> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(C::one(), Word::new())
    }

    pub fn scalar(c: C) -> Self {
        Self::term(c, Word::new())
    }

    pub fn term(c: C, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn gen(g: GeneratorSymbol) -> Self {
        Self::term(C::one(), alloc::vec![g])
    }

    pub fn word(w: &[GeneratorSymbol]) -> Self {
        Self::term(C::one(), w.to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[GeneratorSymbol]) -> Option<&C> {
        self.terms.get(w)
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Word, C> {
        self.terms
    }

    pub(crate) fn from_terms(terms: BTreeMap<Word, C>) -> Self {
        NCPoly { terms }
    }

    /// Adds `c·w`, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: C) {
        add_into(&mut self.terms, w, c);
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.neg());
        }
        r
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), c.mul(s));
        }
        r
    }

    /// Product in the free algebra.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                r.add_term(w, c1.mul(c2));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Commutator `xy - yx`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> NCPoly<D> {
        let mut r = NCPoly::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), f(c));
        }
        r
    }
}

pub(crate) fn add_into<C: Coeff>(map: &mut BTreeMap<Word, C>, w: Word, c: C) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&w) {
        Some(e) => {
            let s = e.add(&c);
            if s.is_zero() {
                map.remove(&w);
            } else {
                *e = s;
            }
        }
        None => {
            map.insert(w, c);
        }
    }
}

pub fn format_word(w: &[GeneratorSymbol]) -> alloc::string::String {
    if w.is_empty() {
        return "1".into();
    }
    let parts: Vec<alloc::string::String> = w.iter().map(|g| alloc::format!("{g}")).collect();
    parts.join("·")
}

impl<C: Coeff> fmt::Display for NCPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]·{}", format_word(w))?;
        }
        Ok(())
    }
}
