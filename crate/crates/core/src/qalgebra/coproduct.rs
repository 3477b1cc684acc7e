//! The coproduct on generators, extended multiplicatively, and its checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::coeff::{Coeff, RatFunc};
use super::identities::q_serre_element;
use super::poly::{format_word, GenKind, GeneratorSymbol as G, NCPoly, Word};
use super::preset::AlgebraPreset;
use super::rewrite::Rewriter;
use crate::report::{CheckReport, IdentityId};
use crate::{Error, Result};

/// Element of a tensor power: each key holds one word per tensor leg.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorPoly<C> {
    legs: usize,
    terms: BTreeMap<Vec<Word>, C>,
}

impl<C: Coeff> TensorPoly<C> {
    pub fn zero(legs: usize) -> Self {
        TensorPoly { legs, terms: BTreeMap::new() }
    }

    pub fn one(legs: usize) -> Self {
        Self::term(C::one(), vec![Word::new(); legs])
    }

    pub fn term(c: C, words: Vec<Word>) -> Self {
        let mut t = Self::zero(words.len());
        t.add_term(words, c);
        t
    }

    /// `a ⊗ b` of two single-leg polynomials.
    pub fn pure(a: &NCPoly<C>, b: &NCPoly<C>) -> Self {
        let mut t = Self::zero(2);
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                t.add_term(vec![wa.clone(), wb.clone()], ca.mul(cb));
            }
        }
        t
    }

    pub fn legs(&self) -> usize {
        self.legs
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

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Word>, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: C) {
        assert_eq!(words.len(), self.legs, "leg count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&words) {
            Some(e) => {
                let s = e.add(&c);
                if s.is_zero() {
                    self.terms.remove(&words);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(words, c);
            }
        }
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
        let mut r = Self::zero(self.legs);
        for (w, c) in &self.terms {
            r.add_term(w.clone(), c.mul(s));
        }
        r
    }

    /// Legwise product.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.legs, o.legs, "leg count mismatch");
        let mut r = Self::zero(self.legs);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let w = w1
                    .iter()
                    .zip(w2)
                    .map(|(a, b)| {
                        let mut x = a.clone();
                        x.extend_from_slice(b);
                        x
                    })
                    .collect();
                r.add_term(w, c1.mul(c2));
            }
        }
        r
    }

    /// Normal-orders every leg independently.
    pub fn normal_order(&self, rw: &Rewriter<C>) -> Result<Self> {
        let mut cache: BTreeMap<Word, NCPoly<C>> = BTreeMap::new();
        let mut out = Self::zero(self.legs);
        for (words, c) in &self.terms {
            let mut acc: Vec<(Vec<Word>, C)> = vec![(Vec::new(), c.clone())];
            for w in words {
                if !cache.contains_key(w) {
                    let nf = rw.normal_order(&NCPoly::word(w))?;
                    cache.insert(w.clone(), nf);
                }
                let nf = &cache[w];
                let mut next = Vec::with_capacity(acc.len() * nf.len());
                for (prefix, pc) in &acc {
                    for (nw, nc) in nf.iter() {
                        let mut p = prefix.clone();
                        p.push(nw.clone());
                        next.push((p, pc.mul(nc)));
                    }
                }
                acc = next;
            }
            for (w, c) in acc {
                out.add_term(w, c);
            }
        }
        Ok(out)
    }
}

impl<C: Coeff> fmt::Display for TensorPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (ws, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let legs: Vec<String> = ws.iter().map(|w| format_word(w)).collect();
            write!(f, "[{c}]·{}", legs.join("⊗"))?;
        }
        Ok(())
    }
}

/// `Δ` of one generator: `ΔK = K⊗K`, `ΔE = E⊗1 + K⁻¹⊗E`, `ΔF = 1⊗F + F⊗K`.
pub fn coproduct_generator<C: Coeff>(g: G) -> Result<TensorPoly<C>> {
    let w = |x: &[G]| x.to_vec();
    let one = C::one();
    let i = g.index;
    Ok(match g.kind {
        GenKind::K | GenKind::Kinv => TensorPoly::term(one, vec![w(&[g]), w(&[g])]),
        GenKind::E => {
            let mut t = TensorPoly::term(one.clone(), vec![w(&[g]), w(&[])]);
            t.add_term(vec![w(&[G::kinv(i)]), w(&[g])], one);
            t
        }
        GenKind::F => {
            let mut t = TensorPoly::term(one.clone(), vec![w(&[]), w(&[g])]);
            t.add_term(vec![w(&[g]), w(&[G::k(i)])], one);
            t
        }
        _ => return Err(Error::Precondition(format!("no coproduct given for {g}"))),
    })
}

/// `Δ` extended multiplicatively and linearly.
pub fn coproduct<C: Coeff>(x: &NCPoly<C>) -> Result<TensorPoly<C>> {
    let mut images: BTreeMap<G, TensorPoly<C>> = BTreeMap::new();
    let mut out = TensorPoly::zero(2);
    for (word, c) in x.iter() {
        let mut acc = TensorPoly::one(2);
        for g in word {
            if !images.contains_key(g) {
                images.insert(*g, coproduct_generator(*g)?);
            }
            acc = acc.mul(&images[g]);
        }
        out = out.add(&acc.scale(c));
    }
    Ok(out)
}

/// Applies `Δ` to the leg `leg` of a tensor, producing one more leg.
pub fn coproduct_on_leg<C: Coeff>(t: &TensorPoly<C>, leg: usize) -> Result<TensorPoly<C>> {
    assert!(leg < t.legs());
    let mut out = TensorPoly::zero(t.legs() + 1);
    for (ws, c) in t.iter() {
        let split = coproduct(&NCPoly::word(&ws[leg]))?;
        for (pair, pc) in split.iter() {
            let mut w = ws[..leg].to_vec();
            w.extend(pair.iter().cloned());
            w.extend(ws[leg + 1..].iter().cloned());
            out.add_term(w, c.mul(pc));
        }
    }
    Ok(out)
}

/// The defining relations of a preset, each as an element that must vanish.
pub fn defining_relations(preset: AlgebraPreset) -> Vec<(String, NCPoly<RatFunc>)> {
    let mut rels = Vec::new();
    let r = preset.rank();
    let gen = NCPoly::<RatFunc>::gen;
    let d_inv = RatFunc::q_diff(1).inv();
    for i in 1..=r {
        rels.push((format!("K{i} K{i}^-1 = 1"), gen(G::k(i)).mul(&gen(G::kinv(i))).sub(&NCPoly::one())));
        rels.push((format!("K{i}^-1 K{i} = 1"), gen(G::kinv(i)).mul(&gen(G::k(i))).sub(&NCPoly::one())));
        for j in 1..=r {
            let a = preset.cartan(i, j);
            if i < j {
                rels.push((format!("K{i} K{j} = K{j} K{i}"), gen(G::k(i)).commutator(&gen(G::k(j)))));
            }
            let qa = RatFunc::q_pow(a);
            let qma = RatFunc::q_pow(-a);
            rels.push((
                format!("K{i} E{j} = q^a E{j} K{i}"),
                gen(G::k(i)).mul(&gen(G::e(j))).sub(&gen(G::e(j)).mul(&gen(G::k(i))).scale(&qa)),
            ));
            rels.push((
                format!("K{i} F{j} = q^-a F{j} K{i}"),
                gen(G::k(i)).mul(&gen(G::f(j))).sub(&gen(G::f(j)).mul(&gen(G::k(i))).scale(&qma)),
            ));
            let mut ef = gen(G::e(i)).commutator(&gen(G::f(j)));
            if i == j {
                ef = ef.sub(&gen(G::k(i)).sub(&gen(G::kinv(i))).scale(&d_inv));
            }
            rels.push((format!("[E{i}, F{j}]"), ef));
            if i < j && a == 0 {
                rels.push((format!("[E{i}, E{j}] = 0"), gen(G::e(i)).commutator(&gen(G::e(j)))));
                rels.push((format!("[F{i}, F{j}] = 0"), gen(G::f(i)).commutator(&gen(G::f(j)))));
            }
            if i != j && a == -1 {
                rels.push((format!("q-Serre E{i}²E{j}"), q_serre_element(G::e(i), G::e(j))));
                rels.push((format!("q-Serre F{i}²F{j}"), q_serre_element(G::f(i), G::f(j))));
            }
        }
    }
    rels
}

/// `Δ(R)` normal-orders to zero in both legs for every defining relation `R`.
pub fn verify_coproduct_hom(preset: AlgebraPreset) -> Vec<CheckReport> {
    let rw = Rewriter::<RatFunc>::new(preset);
    defining_relations(preset)
        .into_iter()
        .map(|(name, rel)| {
            let label = format!("{preset}: {name}");
            let res = coproduct(&rel).and_then(|t| t.normal_order(&rw));
            match res {
                Ok(t) if t.is_zero() => CheckReport::exact(IdentityId::CoproductHomomorphism, label, None),
                Ok(t) => CheckReport::exact(
                    IdentityId::CoproductHomomorphism,
                    label,
                    Some(format!("Δ of the relation leaves {} terms", t.len())),
                ),
                Err(e) => CheckReport::failed(IdentityId::CoproductHomomorphism, label, format!("{e}")),
            }
            .with_param("preset", preset.name())
        })
        .collect()
}

/// `(Δ⊗id)Δ(g) = (id⊗Δ)Δ(g)` for every simple generator of the preset.
pub fn verify_coassociativity(preset: AlgebraPreset) -> Vec<CheckReport> {
    let rw = Rewriter::<RatFunc>::new(preset);
    preset
        .alphabet()
        .into_iter()
        .filter(|g| matches!(g.kind, GenKind::E | GenKind::F | GenKind::K | GenKind::Kinv))
        .map(|g| {
            let label = format!("{preset}: {g}");
            let res = coproduct::<RatFunc>(&NCPoly::gen(g)).and_then(|d| {
                let left = coproduct_on_leg(&d, 0)?.normal_order(&rw)?;
                let right = coproduct_on_leg(&d, 1)?.normal_order(&rw)?;
                Ok(left.sub(&right))
            });
            match res {
                Ok(t) if t.is_zero() => CheckReport::exact(IdentityId::Coassociativity, label, None),
                Ok(t) => CheckReport::exact(IdentityId::Coassociativity, label, Some(format!("{t}"))),
                Err(e) => CheckReport::failed(IdentityId::Coassociativity, label, format!("{e}")),
            }
            .with_param("preset", preset.name())
        })
        .collect()
}
