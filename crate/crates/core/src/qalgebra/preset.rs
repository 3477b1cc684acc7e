//! Algebra presets: alphabets, Cartan data, normal-order ranks and the
//! straightening rules that define each quotient.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::coeff::{Coeff, RatFunc};
use super::poly::{GenKind, GeneratorSymbol as G, Word};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AlgebraPreset {
    /// `U_q(sl2)` on `E1, F1, K1^{±1}`.
    Sl2,
    /// `U_q(sl3)` with the non-simple root vectors `E12`, `F12`.
    Sl3,
    /// Two nodes with `a12 = 0`.
    CommutingPair,
    /// `u, v` with `uv = q² vu`.
    QWeylPair,
}

impl AlgebraPreset {
    pub const ALL: [AlgebraPreset; 4] =
        [AlgebraPreset::Sl2, AlgebraPreset::Sl3, AlgebraPreset::CommutingPair, AlgebraPreset::QWeylPair];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraPreset::Sl2 => "sl2",
            AlgebraPreset::Sl3 => "sl3",
            AlgebraPreset::CommutingPair => "commuting_pair",
            AlgebraPreset::QWeylPair => "qweyl_pair",
        }
    }

    pub fn rank(self) -> u8 {
        match self {
            AlgebraPreset::Sl2 => 1,
            AlgebraPreset::Sl3 | AlgebraPreset::CommutingPair => 2,
            AlgebraPreset::QWeylPair => 0,
        }
    }

    /// Cartan matrix entry `a_ij` (1-based).
    pub fn cartan(self, i: u8, j: u8) -> i32 {
        if i == j {
            return 2;
        }
        match self {
            AlgebraPreset::Sl3 => -1,
            _ => 0,
        }
    }

    /// Every generator of the preset.
    pub fn alphabet(self) -> Vec<G> {
        match self {
            AlgebraPreset::QWeylPair => vec![G::u(), G::v()],
            _ => {
                let mut a = Vec::new();
                for i in 1..=self.rank() {
                    a.extend([G::f(i), G::k(i), G::kinv(i), G::e(i)]);
                }
                if self == AlgebraPreset::Sl3 {
                    a.extend([G::f12(), G::e12()]);
                }
                a
            }
        }
    }

    pub fn contains(self, g: G) -> bool {
        match g.kind {
            GenKind::U | GenKind::V => self == AlgebraPreset::QWeylPair,
            GenKind::Eroot12 | GenKind::Froot12 => self == AlgebraPreset::Sl3,
            _ => self != AlgebraPreset::QWeylPair && (1..=self.rank()).contains(&g.index),
        }
    }

    /// Position in the normal order: F-block, then K-block, then E-block.
    pub fn order_key(self, g: G) -> (u8, u8) {
        let root_key = |simple: u8| -> u8 {
            if self == AlgebraPreset::Sl3 {
                // E2 < E12 < E1, likewise for F
                if simple == 2 {
                    0
                } else {
                    2
                }
            } else {
                simple
            }
        };
        match g.kind {
            GenKind::F => (0, root_key(g.index)),
            GenKind::Froot12 => (0, 1),
            GenKind::K => (1, 2 * g.index),
            GenKind::Kinv => (1, 2 * g.index + 1),
            GenKind::E => (2, root_key(g.index)),
            GenKind::Eroot12 => (2, 1),
            GenKind::U => (0, 0),
            GenKind::V => (0, 1),
        }
    }

    /// `Σ_k a_{i,k}` over the simple roots making up `g`.
    fn weight_pairing(self, i: u8, g: G) -> i32 {
        match g.kind {
            GenKind::Eroot12 | GenKind::Froot12 => self.cartan(i, 1) + self.cartan(i, 2),
            _ => self.cartan(i, g.index),
        }
    }

    /// Builds the rewriting rules `ab → Σ c·w` for every out-of-order pair.
    pub fn rules(self) -> RuleTable<RatFunc> {
        let mut t = BTreeMap::new();
        let q = RatFunc::q_pow;
        let d = RatFunc::q_diff(1);
        let one = RatFunc::one();
        let alpha = self.alphabet();

        if self == AlgebraPreset::QWeylPair {
            t.insert((G::v(), G::u()), vec![(q(-2), vec![G::u(), G::v()])]);
            return RuleTable { rules: t };
        }

        // K-block: commuting symbols and cancellation
        for i in 1..=self.rank() {
            t.insert((G::k(i), G::kinv(i)), vec![(one.clone(), vec![])]);
            t.insert((G::kinv(i), G::k(i)), vec![(one.clone(), vec![])]);
            for j in 1..=self.rank() {
                for (a, b) in [(G::k(i), G::k(j)), (G::k(i), G::kinv(j)), (G::kinv(i), G::k(j)), (G::kinv(i), G::kinv(j))] {
                    if i != j && self.order_key(a) > self.order_key(b) {
                        t.insert((a, b), vec![(one.clone(), vec![b, a])]);
                    }
                }
            }
        }

        // E and F against K
        for &g in alpha.iter().filter(|g| matches!(g.kind, GenKind::E | GenKind::Eroot12 | GenKind::F | GenKind::Froot12)) {
            for i in 1..=self.rank() {
                let e = self.weight_pairing(i, g);
                if matches!(g.kind, GenKind::E | GenKind::Eroot12) {
                    t.insert((g, G::k(i)), vec![(q(-e), vec![G::k(i), g])]);
                    t.insert((g, G::kinv(i)), vec![(q(e), vec![G::kinv(i), g])]);
                } else {
                    t.insert((G::k(i), g), vec![(q(-e), vec![g, G::k(i)])]);
                    t.insert((G::kinv(i), g), vec![(q(e), vec![g, G::kinv(i)])]);
                }
            }
        }

        // E against F
        let d_inv = d.inv();
        for i in 1..=self.rank() {
            for j in 1..=self.rank() {
                let mut rhs = vec![(one.clone(), vec![G::f(j), G::e(i)])];
                if i == j {
                    rhs.push((d_inv.clone(), vec![G::k(i)]));
                    rhs.push((d_inv.neg(), vec![G::kinv(i)]));
                }
                t.insert((G::e(i), G::f(j)), rhs);
            }
        }

        match self {
            AlgebraPreset::CommutingPair => {
                t.insert((G::e(2), G::e(1)), vec![(one.clone(), vec![G::e(1), G::e(2)])]);
                t.insert((G::f(2), G::f(1)), vec![(one.clone(), vec![G::f(1), G::f(2)])]);
            }
            AlgebraPreset::Sl3 => self.sl3_root_rules(&mut t),
            _ => {}
        }
        RuleTable { rules: t }
    }

    fn sl3_root_rules(self, t: &mut BTreeMap<(G, G), Vec<(RatFunc, Word)>>) {
        let q = RatFunc::q_pow;
        let v = RatFunc::v_pow;
        let d = RatFunc::q_diff(1);
        let one = RatFunc::one();
        let (e1, e2, e12) = (G::e(1), G::e(2), G::e12());
        let (f1, f2, f12) = (G::f(1), G::f(2), G::f12());
        let (k1, k2, ki1, ki2) = (G::k(1), G::k(2), G::kinv(1), G::kinv(2));

        // X12 = (q^{1/2} X2 X1 - q^{-1/2} X1 X2)/(q - q^{-1}), and the q-Serre
        // relation gives the q-commutation of X12 with X1 and X2.
        for (x1, x2, x12) in [(e1, e2, e12), (f1, f2, f12)] {
            t.insert((x1, x2), vec![(q(1), vec![x2, x1]), (v(1).mul(&d).neg(), vec![x12])]);
            t.insert((x1, x12), vec![(q(-1), vec![x12, x1])]);
            t.insert((x12, x2), vec![(q(-1), vec![x2, x12])]);
        }

        // root vectors against F and E, in closed form
        let over_d = |c: RatFunc| c.div(&d);
        t.insert((e12, f1), vec![(one.clone(), vec![f1, e12]), (over_d(v(1)), vec![k1, e2])]);
        t.insert((e12, f2), vec![(one.clone(), vec![f2, e12]), (over_d(v(-1)).neg(), vec![ki2, e1])]);
        t.insert((e1, f12), vec![(one.clone(), vec![f12, e1]), (over_d(v(-1)).neg(), vec![f2, ki1])]);
        t.insert((e2, f12), vec![(one.clone(), vec![f12, e2]), (over_d(v(1)), vec![f1, k2])]);
        let d3 = d.pow(3);
        t.insert(
            (e12, f12),
            vec![
                (one.clone(), vec![f12, e12]),
                (d3.inv(), vec![ki1, ki2]),
                (d3.inv().neg(), vec![k1, k2]),
            ],
        );
    }
}

impl fmt::Display for AlgebraPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Replacement words for each out-of-order adjacent pair.
#[derive(Clone, Debug)]
pub struct RuleTable<C> {
    rules: BTreeMap<(G, G), Vec<(C, Word)>>,
}

impl<C: Coeff> RuleTable<C> {
    pub fn get(&self, a: G, b: G) -> Option<&[(C, Word)]> {
        self.rules.get(&(a, b)).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(G, G), &Vec<(C, Word)>)> {
        self.rules.iter()
    }
}

impl RuleTable<RatFunc> {
    pub fn convert<C: Coeff>(&self) -> RuleTable<C> {
        RuleTable {
            rules: self
                .rules
                .iter()
                .map(|(k, rhs)| (*k, rhs.iter().map(|(c, w)| (C::from_rat(c.clone()), w.clone())).collect()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_out_of_order_pair_has_a_rule() {
        for p in AlgebraPreset::ALL {
            let rules = p.rules();
            for &a in &p.alphabet() {
                for &b in &p.alphabet() {
                    let out_of_order = p.order_key(a) > p.order_key(b);
                    let has = rules.get(a, b).is_some();
                    let cancels = matches!((a.kind, b.kind), (GenKind::K, GenKind::Kinv) | (GenKind::Kinv, GenKind::K))
                        && a.index == b.index;
                    assert_eq!(has, out_of_order || cancels, "{p}: {a} {b}");
                }
            }
        }
    }

    #[test]
    fn replacement_words_stay_in_the_alphabet() {
        for p in AlgebraPreset::ALL {
            for (_, rhs) in p.rules().iter() {
                for (_, w) in rhs {
                    assert!(w.iter().all(|g| p.contains(*g)));
                }
            }
        }
    }
}
