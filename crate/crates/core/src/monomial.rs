//! Exponent-vector monomials and the monomial orders used by the engine.
//!
//! The variable arity is capped at [`MAX_VARS`]; the rings appearing here
//! never need more than seven variables (`x, y, z, T1, T2, T3, s`).

use std::cmp::Ordering;

pub const MAX_VARS: usize = 8;

/// A monomial as a fixed-width exponent vector. Entries beyond the ring's
/// arity are zero. Structural `Ord` (plain array comparison) is used for
/// canonical storage; order-aware comparison goes through [`MonomialOrder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const fn one() -> Monomial {
        Monomial {
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Monomial {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Monomial::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let mut m = *self;
        for e in m.exps.iter_mut() {
            *e *= k;
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        let mut m = *other;
        for i in 0..MAX_VARS {
            debug_assert!(m.exps[i] >= self.exps[i]);
            m.exps[i] -= self.exps[i];
        }
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].max(other.exps[i]);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Total degree of the exponents in `[0, k)`.
    pub fn degree_prefix(&self, k: usize) -> u32 {
        self.exps[..k].iter().map(|&e| e as u32).sum()
    }

    /// Applies a variable permutation: exponent of old variable `i` moves to
    /// `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut m = Monomial::one();
        for (i, &target) in perm.iter().enumerate() {
            m.exps[target] = self.exps[i];
        }
        m
    }
}

/// Monomial orders. All are total, multiplicative and well-founded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic; the engine default.
    Grevlex,
    /// Lexicographic with the first ring variable strongest; eliminates
    /// leading variables.
    Lex,
    /// Elimination order: the first `block` variables dominate (compared by
    /// grevlex among themselves), ties broken by grevlex on the rest.
    Block(usize),
}

fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u32 = a.exps[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = b.exps[lo..hi].iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (lo..hi).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => {}
            // smaller exponent in the latest differing variable wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex_range(a, b, 0, nvars),
            MonomialOrder::Lex => {
                for i in 0..nvars {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(k) => {
                let k = (*k).min(nvars);
                match grevlex_range(a, b, 0, k) {
                    Ordering::Equal => grevlex_range(a, b, k, nvars),
                    o => o,
                }
            }
        }
    }
}

/// All monomials of total degree `d` in the first `nvars` variables,
/// strictly descending under `order`, duplicate-free.
pub fn graded_basis(d: u32, nvars: usize, order: MonomialOrder) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = Monomial::one();
    fn rec(out: &mut Vec<Monomial>, cur: &mut Monomial, var: usize, rem: u32, nvars: usize) {
        if var == nvars - 1 {
            cur.exps[var] = rem as u16;
            out.push(*cur);
            cur.exps[var] = 0;
            return;
        }
        for e in (0..=rem).rev() {
            cur.exps[var] = e as u16;
            rec(out, cur, var + 1, rem - e, nvars);
        }
        cur.exps[var] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(&mut out, &mut cur, 0, d, nvars);
    out.sort_by(|a, b| order.cmp(b, a, nvars));
    out
}
