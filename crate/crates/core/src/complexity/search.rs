//! Bounded shortest-description search.
//!
//! Candidate generation order is fixed, so a given budget always yields the
//! same answer. Every generated candidate except the literal costs one unit.
//!
//! Integers `x`:
//! 1. decimal literal;
//! 2. `r^e` for the largest `e ≥ 2` with `x = r^e` (so `r` is not a power);
//! 3. towers `T(b, h)` equal to `x`;
//! 4. `m*b^j` and `b^j*m` for `b ∈ 2..=10`, `j` the multiplicity of `b`;
//! 5. `b^e+r` and `r+b^e` for `b ∈ 2..=10`, `b^e` the largest power `≤ x`.
//!
//! Operands are searched the same way, down to a nesting depth of
//! `MAX_DEPTH`; below that they stay literal.
//!
//! Words: the blob, then `R(block, m)` for every proper period.
//! Codes: the word list, then Reed–Solomon and generator-matrix forms when
//! the code remembers that structure.

use super::description::{tower_value, Description};
use super::{Describers, Object};
use crate::codes::{reed_solomon::default_points, Code, Structure};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use std::collections::HashMap;

const SMALL_BASES: std::ops::RangeInclusive<u32> = 2..=10;
const MAX_DEPTH: u8 = 2;

pub(crate) struct Searcher {
    describers: Describers,
    remaining: u64,
    ints: HashMap<BigUint, (Description, u8)>,
    words: HashMap<Vec<u8>, (Description, String)>,
}

/// Running minimum by (length, serialization).
struct Best {
    desc: Description,
    text: String,
}

impl Best {
    fn new(desc: Description) -> Self {
        let text = desc.serialize();
        Best { desc, text }
    }

    fn offer(&mut self, desc: Description) {
        let text = desc.serialize();
        if (text.len(), &text) < (self.text.len(), &self.text) {
            self.desc = desc;
            self.text = text;
        }
    }
}

impl Searcher {
    pub(crate) fn new(describers: Describers, budget: u64) -> Self {
        Searcher { describers, remaining: budget, ints: HashMap::new(), words: HashMap::new() }
    }

    fn take(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        true
    }

    pub(crate) fn describe(&mut self, x: &Object) -> Description {
        match x {
            Object::Int(n) => self.int(n),
            Object::Word(w) => self.word(w),
            Object::Code(c) => self.code(c),
            Object::Tower { base, height } => {
                Description::Tower { base: base.clone(), height: height.clone() }
            }
        }
    }

    fn int(&mut self, x: &BigUint) -> Description {
        self.int_at(x, 0)
    }

    fn int_at(&mut self, x: &BigUint, depth: u8) -> Description {
        // A memo made at a shallower depth searched at least as far.
        if let Some((d, at)) = self.ints.get(x) {
            if *at <= depth {
                return d.clone();
            }
        }
        let mut best = Best::new(Description::Lit(x.clone()));
        if depth < MAX_DEPTH && x >= &BigUint::from(10u32) {
            self.int_candidates(x, depth + 1, &mut best);
        }
        self.ints.insert(x.clone(), (best.desc.clone(), depth));
        best.desc
    }

    fn int_candidates(&mut self, x: &BigUint, sub: u8, best: &mut Best) {
        let d = self.describers;
        if d.powers {
            if let Some((root, e)) = primitive_power(x) {
                if !self.take() {
                    return;
                }
                let cand = Description::pow(self.int_at(&root, sub), self.int_at(&BigUint::from(e), sub));
                best.offer(cand);
            }
        }
        if d.towers {
            for (base, height) in towers_equal_to(x) {
                if !self.take() {
                    return;
                }
                best.offer(Description::Tower { base: base.into(), height: height.into() });
            }
        }
        if d.products {
            for b in SMALL_BASES {
                let b = BigUint::from(b);
                let mut power = BigUint::one();
                let mut rest = x.clone();
                while rest.is_multiple_of(&b) {
                    rest /= &b;
                    power *= &b;
                }
                if power.is_one() || rest.is_one() {
                    continue;
                }
                if !self.take() {
                    return;
                }
                let (m, p) = (self.int_at(&rest, sub), self.int_at(&power, sub));
                best.offer(Description::mul(m.clone(), p.clone()));
                best.offer(Description::mul(p, m));
            }
        }
        if d.sums {
            for b in SMALL_BASES {
                let b = BigUint::from(b);
                let mut power = b.clone();
                while &(&power * &b) <= x {
                    power *= &b;
                }
                if power == b || &power == x {
                    continue;
                }
                if !self.take() {
                    return;
                }
                let rest = x - &power;
                let (p, r) = (self.int_at(&power, sub), self.int_at(&rest, sub));
                best.offer(Description::add(p.clone(), r.clone()));
                best.offer(Description::add(r, p));
            }
        }
    }

    fn word(&mut self, w: &[u8]) -> Description {
        if let Some((d, _)) = self.words.get(w) {
            return d.clone();
        }
        let mut best = Best::new(Description::Blob(w.to_vec()));
        if self.describers.repetition {
            let len = w.len();
            for period in 1..len {
                if len % period != 0 || !w.chunks(period).all(|c| c == &w[..period]) {
                    continue;
                }
                if !self.take() {
                    break;
                }
                let block = self.word(&w[..period]);
                best.offer(Description::Rep { block: Box::new(block), count: len / period });
            }
        }
        self.words.insert(w.to_vec(), (best.desc.clone(), best.text));
        best.desc
    }

    fn code(&mut self, c: &Code) -> Description {
        let (q, n) = (c.q(), c.len());
        let words = self.word(&c.word_bytes());
        let mut best = Best::new(Description::CodeWords { q, n, words: Box::new(words) });
        if !self.describers.structured_codes {
            return best.desc;
        }
        if let Some(Structure::ReedSolomon { k, points, .. }) = c.structure() {
            if self.take() {
                let points = if *points == default_points(n) {
                    None
                } else {
                    Some(Box::new(self.word(points)))
                };
                best.offer(Description::ReedSolomon { q, n, k: *k, points });
            }
        }
        if let Some(generator) = c.generator() {
            if self.take() {
                let rows = self.word(&generator.concat());
                best.offer(Description::Linear { q, n, generator: Box::new(rows) });
            }
        }
        best.desc
    }
}

/// `(r, e)` with `x = r^e`, `e ≥ 2` maximal.
fn primitive_power(x: &BigUint) -> Option<(BigUint, u32)> {
    let max_e = x.bits().saturating_sub(1) as u32;
    (2..=max_e).rev().find_map(|e| {
        let r = x.nth_root(e);
        (r > BigUint::one() && num_traits::pow(r.clone(), e as usize) == *x).then_some((r, e))
    })
}

/// All `(b, h)` with `h ≥ 2` and `b ↑↑ h = x`.
fn towers_equal_to(x: &BigUint) -> Vec<(u32, u32)> {
    let mut found = Vec::new();
    for b in 2u32.. {
        let base = BigUint::from(b);
        // b ↑↑ 2 = b^b grows with b; stop once it passes x.
        let square = num_traits::pow(base.clone(), b as usize);
        if &square > x {
            break;
        }
        for h in 2u32.. {
            match tower_value(&base, &BigUint::from(h)) {
                Some(v) if &v == x => {
                    found.push((b, h));
                    break;
                }
                Some(v) if &v < x => continue,
                _ => break,
            }
        }
    }
    found
}
