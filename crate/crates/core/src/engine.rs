//! Internal Buchberger engine, generic over the term key so the same loop
//! serves ring ideals (keys are monomials) and submodules of free modules
//! (keys are component/monomial pairs). Supports transform tracking, which
//! yields syzygies from the s-pair reduction certificates.

use crate::field::{Field, FieldElement};
use crate::monomial::{Monomial, MonomialOrder};
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::collections::HashSet;
use std::fmt::Debug;
use std::sync::Arc;

pub(crate) trait Key: Copy + Eq + Ord + Debug {
    fn divides(&self, other: &Self) -> bool;
    /// `other / self` as a ring monomial; caller ensures divisibility.
    fn quotient_mono(&self, other: &Self) -> Monomial;
    fn mul_mono(&self, m: &Monomial) -> Self;
    /// `None` when the keys live in different components.
    fn lcm(&self, other: &Self) -> Option<Self>;
    fn coprime(&self, other: &Self) -> bool;
}

impl Key for Monomial {
    fn divides(&self, other: &Self) -> bool {
        Monomial::divides(self, other)
    }
    fn quotient_mono(&self, other: &Self) -> Monomial {
        self.quotient_into(other)
    }
    fn mul_mono(&self, m: &Monomial) -> Self {
        self.mul(m)
    }
    fn lcm(&self, other: &Self) -> Option<Self> {
        Some(Monomial::lcm(self, other))
    }
    fn coprime(&self, other: &Self) -> bool {
        self.is_coprime(other)
    }
}

/// Term key in a free module: component index plus monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct ModKey {
    pub comp: u32,
    pub mono: Monomial,
}

impl Key for ModKey {
    fn divides(&self, other: &Self) -> bool {
        self.comp == other.comp && self.mono.divides(&other.mono)
    }
    fn quotient_mono(&self, other: &Self) -> Monomial {
        self.mono.quotient_into(&other.mono)
    }
    fn mul_mono(&self, m: &Monomial) -> Self {
        ModKey {
            comp: self.comp,
            mono: self.mono.mul(m),
        }
    }
    fn lcm(&self, other: &Self) -> Option<Self> {
        (self.comp == other.comp).then(|| ModKey {
            comp: self.comp,
            mono: self.mono.lcm(&other.mono),
        })
    }
    fn coprime(&self, _other: &Self) -> bool {
        // the product criterion is not valid for module terms
        false
    }
}

pub(crate) trait KeyOrder<K>: Clone {
    fn cmp(&self, a: &K, b: &K) -> Ordering;
}

#[derive(Clone)]
pub(crate) struct RingOrder {
    pub order: MonomialOrder,
    pub nvars: usize,
}

impl KeyOrder<Monomial> for RingOrder {
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, self.nvars)
    }
}

/// Position-over-term over the ring order, refined first by twist-adjusted
/// degree. Lower component index wins within a degree.
#[derive(Clone)]
pub(crate) struct ModOrder {
    pub order: MonomialOrder,
    pub nvars: usize,
    pub twists: Arc<Vec<i64>>,
}

impl KeyOrder<ModKey> for ModOrder {
    fn cmp(&self, a: &ModKey, b: &ModKey) -> Ordering {
        let da = a.mono.degree() as i64 + self.twists.get(a.comp as usize).copied().unwrap_or(0);
        let db = b.mono.degree() as i64 + self.twists.get(b.comp as usize).copied().unwrap_or(0);
        da.cmp(&db)
            .then_with(|| b.comp.cmp(&a.comp))
            .then_with(|| self.order.cmp(&a.mono, &b.mono, self.nvars))
    }
}

/// Terms sorted ascending under the active order; the last entry is the lead.
pub(crate) type WPoly<K> = Vec<(K, FieldElement)>;

/// One reduction step: subtracted `coeff * x^mono * basis[idx]`.
#[derive(Debug, Clone)]
pub(crate) struct RedStep {
    pub idx: usize,
    pub mono: Monomial,
    pub coeff: FieldElement,
}

pub(crate) struct Engine<K, O> {
    pub field: Field,
    pub order: O,
    _key: std::marker::PhantomData<K>,
}

impl<K: Key, O: KeyOrder<K>> Engine<K, O> {
    pub fn new(field: Field, order: O) -> Self {
        Engine {
            field,
            order,
            _key: std::marker::PhantomData,
        }
    }

    pub fn normalize(&self, mut v: WPoly<K>) -> WPoly<K> {
        v.sort_by(|a, b| self.order.cmp(&a.0, &b.0));
        let mut out: WPoly<K> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = self.field.add(lc, &c),
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        out
    }

    /// `a - c * x^m * b`; both inputs sorted, result sorted.
    pub fn sub_scaled(&self, a: &WPoly<K>, c: &FieldElement, m: &Monomial, b: &WPoly<K>) -> WPoly<K> {
        let mut out: WPoly<K> = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut j = 0;
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.push(a[i].clone());
                i += 1;
                continue;
            }
            let bk = b[j].0.mul_mono(m);
            if i == a.len() {
                out.push((bk, self.field.neg(&self.field.mul(c, &b[j].1))));
                j += 1;
                continue;
            }
            match self.order.cmp(&a[i].0, &bk) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((bk, self.field.neg(&self.field.mul(c, &b[j].1))));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = self.field.sub(&a[i].1, &self.field.mul(c, &b[j].1));
                    if !self.field.is_zero(&v) {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn scale(&self, p: &mut WPoly<K>, c: &FieldElement) {
        for (_, v) in p.iter_mut() {
            *v = self.field.mul(v, c);
        }
    }

    pub fn make_monic(&self, p: &mut WPoly<K>) -> FieldElement {
        let lc = p.last().expect("nonzero").1.clone();
        let inv = self.field.inv(&lc).expect("unit lead");
        self.scale(p, &inv);
        inv
    }

    /// Full normal form: repeatedly reduces the largest reducible term by the
    /// first divisor in list order. Every step is appended to `log`.
    pub fn normal_form(
        &self,
        p: WPoly<K>,
        basis: &[WPoly<K>],
        mut log: Option<&mut Vec<RedStep>>,
    ) -> WPoly<K> {
        let mut work = p;
        let mut rem: WPoly<K> = Vec::new();
        'outer: while let Some((k, c)) = work.last().cloned() {
            for (i, b) in basis.iter().enumerate() {
                if b.is_empty() {
                    continue;
                }
                let (bk, bc) = b.last().unwrap();
                if bk.divides(&k) {
                    let m = bk.quotient_mono(&k);
                    let q = self.field.div(&c, bc).expect("unit lead");
                    if let Some(log) = log.as_deref_mut() {
                        log.push(RedStep {
                            idx: i,
                            mono: m,
                            coeff: q.clone(),
                        });
                    }
                    work = self.sub_scaled(&work, &q, &m, b);
                    continue 'outer;
                }
            }
            rem.push(work.pop().unwrap());
        }
        rem.reverse();
        rem
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct PairKey<K: Ord> {
    degree: u32,
    lcm: K,
    i: usize,
    j: usize,
}

impl<K: Ord> PartialOrd for PairKey<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<K: Ord> Ord for PairKey<K> {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap: invert so the smallest degree pops first.
        other
            .degree
            .cmp(&self.degree)
            .then_with(|| other.lcm.cmp(&self.lcm))
            .then_with(|| other.i.cmp(&self.i))
            .then_with(|| other.j.cmp(&self.j))
    }
}

pub(crate) struct GbOutput<K> {
    /// A (not necessarily reduced) Groebner basis; the first `n_inputs`
    /// entries are the inputs themselves when tracking is on.
    pub basis: Vec<WPoly<K>>,
    /// For each basis element, its expression over the inputs.
    pub transforms: Option<Vec<WPoly<ModKey>>>,
    /// Syzygies of the inputs harvested from s-pairs that reduced to zero.
    pub syzygies: Option<Vec<WPoly<ModKey>>>,
}

pub(crate) struct Buchberger<K, O> {
    pub engine: Engine<K, O>,
    /// Apply the product and chain criteria (must be off to harvest syzygies).
    pub use_criteria: bool,
    /// Track transforms and collect syzygies.
    pub track: bool,
    pub degree_of: fn(&K) -> u32,
}

impl<K: Key, O: KeyOrder<K>> Buchberger<K, O> {
    pub fn run(&self, inputs: Vec<WPoly<K>>, mono_order: MonomialOrder, nvars: usize) -> GbOutput<K> {
        let field = self.engine.field;
        let trans_order = ModOrder {
            order: mono_order,
            nvars,
            twists: Arc::new(vec![0; inputs.len()]),
        };
        let tengine: Engine<ModKey, ModOrder> = Engine::new(field, trans_order);

        let mut basis: Vec<WPoly<K>> = Vec::new();
        let mut transforms: Vec<WPoly<ModKey>> = Vec::new();
        let mut syzygies: Vec<WPoly<ModKey>> = Vec::new();

        for (i, p) in inputs.iter().enumerate() {
            // a zero input contributes the unit syzygy e_i
            if p.is_empty() && self.track {
                syzygies.push(vec![(
                    ModKey {
                        comp: i as u32,
                        mono: Monomial::one(),
                    },
                    field.one(),
                )]);
            }
            basis.push(p.clone());
            transforms.push(vec![(
                ModKey {
                    comp: i as u32,
                    mono: Monomial::one(),
                },
                field.one(),
            )]);
        }

        let mut queue: BinaryHeap<PairKey<K>> = BinaryHeap::new();
        let mut done: HashSet<(usize, usize)> = HashSet::new();
        let push_pairs = |queue: &mut BinaryHeap<PairKey<K>>, basis: &[WPoly<K>], j: usize, degree_of: fn(&K) -> u32| {
            if basis[j].is_empty() {
                return;
            }
            for i in 0..j {
                if basis[i].is_empty() {
                    continue;
                }
                let (ki, _) = basis[i].last().unwrap();
                let (kj, _) = basis[j].last().unwrap();
                if let Some(l) = ki.lcm(kj) {
                    queue.push(PairKey {
                        degree: degree_of(&l),
                        lcm: l,
                        i,
                        j,
                    });
                }
            }
        };
        for j in 0..basis.len() {
            push_pairs(&mut queue, &basis, j, self.degree_of);
        }

        while let Some(pair) = queue.pop() {
            let (i, j) = (pair.i, pair.j);
            done.insert((i, j));
            let (ki, ci) = basis[i].last().unwrap().clone();
            let (kj, cj) = basis[j].last().unwrap().clone();

            if self.use_criteria {
                if ki.coprime(&kj) {
                    continue;
                }
                // chain criterion: some lead divides the lcm and both
                // side pairs were already treated
                let lcm = &pair.lcm;
                let mut skip = false;
                for (k, b) in basis.iter().enumerate() {
                    if k == i || k == j || b.is_empty() {
                        continue;
                    }
                    if b.last().unwrap().0.divides(lcm)
                        && done.contains(&(i.min(k), i.max(k)))
                        && done.contains(&(j.min(k), j.max(k)))
                    {
                        skip = true;
                        break;
                    }
                }
                if skip {
                    continue;
                }
            }

            // s-vector: cj * x^(L/lt_i) * f_i - ci * x^(L/lt_j) * f_j
            let mi = ki.quotient_mono(&pair.lcm);
            let mj = kj.quotient_mono(&pair.lcm);
            let mut spair: WPoly<K> = basis[i]
                .iter()
                .map(|(k, c)| (k.mul_mono(&mi), field.mul(c, &cj)))
                .collect();
            spair = self.engine.sub_scaled(&spair, &ci, &mj, &basis[j]);

            let mut log: Vec<RedStep> = Vec::new();
            let nf = self
                .engine
                .normal_form(spair, &basis, if self.track { Some(&mut log) } else { None });

            if self.track {
                // certificate: cj*x^mi*T_i - ci*x^mj*T_j - sum(log steps)
                let mut cert: WPoly<ModKey> = transforms[i]
                    .iter()
                    .map(|(k, c)| (k.mul_mono(&mi), field.mul(c, &cj)))
                    .collect();
                cert = tengine.sub_scaled(&cert, &ci, &mj, &transforms[j]);
                for step in &log {
                    cert = tengine.sub_scaled(&cert, &step.coeff, &step.mono, &transforms[step.idx]);
                }
                cert = tengine.normalize(cert);
                if nf.is_empty() {
                    if !cert.is_empty() {
                        syzygies.push(cert);
                    }
                } else {
                    let mut nf = nf;
                    let lc_inv = self.engine.make_monic(&mut nf);
                    tengine.scale(&mut cert, &lc_inv);
                    basis.push(nf);
                    transforms.push(cert);
                    push_pairs(&mut queue, &basis, basis.len() - 1, self.degree_of);
                }
            } else if !nf.is_empty() {
                let mut nf = nf;
                self.engine.make_monic(&mut nf);
                basis.push(nf);
                transforms.push(Vec::new());
                push_pairs(&mut queue, &basis, basis.len() - 1, self.degree_of);
            }
        }

        GbOutput {
            basis,
            transforms: self.track.then_some(transforms),
            syzygies: self.track.then_some(syzygies),
        }
    }
}

/// Interreduces a Groebner basis into the unique reduced one: drops elements
/// whose lead is divisible by another lead, fully tail-reduces the survivors,
/// scales monic and sorts by leading term.
pub(crate) fn reduce_basis<K: Key, O: KeyOrder<K>>(
    engine: &Engine<K, O>,
    basis: Vec<WPoly<K>>,
) -> Vec<WPoly<K>> {
    let mut nonzero: Vec<WPoly<K>> = basis.into_iter().filter(|p| !p.is_empty()).collect();
    nonzero.sort_by(|a, b| engine.order.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
    let mut minimal: Vec<WPoly<K>> = Vec::new();
    for p in nonzero {
        let lead = p.last().unwrap().0;
        if !minimal.iter().any(|q| q.last().unwrap().0.divides(&lead)) {
            minimal.push(p);
        }
    }
    let snapshot = minimal.clone();
    let mut reduced: Vec<WPoly<K>> = Vec::new();
    for (i, p) in snapshot.iter().enumerate() {
        let others: Vec<WPoly<K>> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let mut nf = engine.normal_form(p.clone(), &others, None);
        if !nf.is_empty() {
            engine.make_monic(&mut nf);
            reduced.push(nf);
        }
    }
    reduced.sort_by(|a, b| engine.order.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
    reduced
}
