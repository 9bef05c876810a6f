//! Buchberger engine and the ideal-theoretic toolkit: membership,
//! elimination, intersection, colon, saturation, the Rees defining ideal and
//! multiplicity.

use crate::engine::{reduce_basis, Buchberger, Engine, RedStep, RingOrder, WPoly};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

pub(crate) fn to_w(p: &Polynomial, order: MonomialOrder) -> WPoly<Monomial> {
    let mut t: Vec<(Monomial, FieldElement)> = p.terms().to_vec();
    let nv = p.ring().nvars();
    t.sort_by(|a, b| order.cmp(&a.0, &b.0, nv));
    t
}

pub(crate) fn from_w(ring: &Ring, w: WPoly<Monomial>) -> Polynomial {
    ring.from_terms(w)
}

fn ring_engine(ring: &Ring, order: MonomialOrder) -> Engine<Monomial, RingOrder> {
    Engine::new(
        ring.field(),
        RingOrder {
            order,
            nvars: ring.nvars(),
        },
    )
}

/// The unique reduced Groebner basis of the ideal generated by `gens`:
/// monic leads, no term of any member divisible by another member's lead.
/// The s-pair loop applies the coprime-lead and chain criteria and follows
/// the normal selection strategy, smallest lcm degree first.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let engine = ring_engine(&ring, order);
    let bb = Buchberger {
        engine,
        use_criteria: true,
        track: false,
        degree_of: |m: &Monomial| m.degree(),
    };
    let inputs: Vec<WPoly<Monomial>> = nonzero.iter().map(|g| to_w(g, order)).collect();
    let out = bb.run(inputs, order, ring.nvars());
    let engine = ring_engine(&ring, order);
    reduce_basis(&engine, out.basis)
        .into_iter()
        .map(|w| from_w(&ring, w))
        .collect()
}

/// Multivariate division: `f = sum(quotients[i] * divisors[i]) + normal_form`
/// with no term of the normal form divisible by any divisor's leading term.
/// Ties are broken deterministically: the largest reducible term is reduced
/// by the first matching divisor in list order.
pub fn reduce(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: MonomialOrder,
) -> (Polynomial, Vec<Polynomial>) {
    let ring = f.ring().clone();
    let engine = ring_engine(&ring, order);
    let basis: Vec<WPoly<Monomial>> = divisors.iter().map(|g| to_w(g, order)).collect();
    let mut log: Vec<RedStep> = Vec::new();
    let nf = engine.normal_form(to_w(f, order), &basis, Some(&mut log));
    let mut quotients = vec![ring.zero(); divisors.len()];
    let mut qterms: Vec<Vec<(Monomial, FieldElement)>> = vec![Vec::new(); divisors.len()];
    for step in log {
        qterms[step.idx].push((step.mono, step.coeff));
    }
    for (i, t) in qterms.into_iter().enumerate() {
        quotients[i] = ring.from_terms(t);
    }
    (from_w(&ring, nf), quotients)
}

/// An ideal with its generators and a per-order cache of reduced Groebner
/// bases. Handles are immutable; the cache is populated on first use.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: Mutex<BTreeMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring,
            gens,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Cached reduced Groebner basis under `order`.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(gb) = self.cache.lock().unwrap().get(&order) {
            return gb.clone();
        }
        let gb = Arc::new(buchberger(&self.gens, order));
        self.cache
            .lock()
            .unwrap()
            .entry(order)
            .or_insert(gb)
            .clone()
    }

    /// Normal form of `f` against the cached reduced basis.
    pub fn normal_form(&self, f: &Polynomial, order: MonomialOrder) -> Polynomial {
        let gb = self.groebner_basis(order);
        reduce(f, &gb, order).0
    }

    /// True iff `f` reduces to zero against the reduced Groebner basis.
    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        self.normal_form(f, MonomialOrder::Grevlex).is_zero()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Ideal equality by mutual reduction of generators to zero.
    pub fn equals(&self, other: &Ideal) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b).expect("same ring"));
            }
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// `I^k`; the generators are the k-fold products of the generators of I,
    /// without repetition.
    pub fn power(&self, k: u32) -> Ideal {
        if k == 0 {
            return Ideal::new(self.ring.clone(), vec![self.ring.one()]);
        }
        let n = self.gens.len();
        let mut gens: Vec<Polynomial> = Vec::new();
        // multisets of size k over n generators
        fn rec(
            gens: &mut Vec<Polynomial>,
            base: &[Polynomial],
            acc: Polynomial,
            start: usize,
            left: u32,
        ) {
            if left == 0 {
                gens.push(acc);
                return;
            }
            for i in start..base.len() {
                let next = acc.mul(&base[i]).expect("same ring");
                rec(gens, base, next, i, left - 1);
            }
        }
        rec(&mut gens, &self.gens, self.ring.one(), 0, k);
        let _ = n;
        Ideal::new(self.ring.clone(), gens)
    }

    /// `I ∩ J` by the auxiliary-variable method: eliminate `s` from
    /// `s*I + (1-s)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::new(self.ring.clone(), Vec::new()));
        }
        let nv = self.ring.nvars();
        let mut names: Vec<&str> = vec!["s@"];
        let var_names: Vec<String> = self.ring.vars().to_vec();
        names.extend(var_names.iter().map(|s| s.as_str()));
        let ext = Ring::new(self.ring.field(), &names);
        let shift: Vec<usize> = (1..=nv).collect();
        let s = ext.var(0);
        let one_minus_s = ext.one().sub(&s).expect("same ring");
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(s.mul(&g.map_variables(&ext, &shift)?)?);
        }
        for h in &other.gens {
            gens.push(one_minus_s.mul(&h.map_variables(&ext, &shift)?)?);
        }
        let gb = buchberger(&gens, MonomialOrder::Block(1));
        let back: Vec<usize> = (0..nv).collect();
        let mut out = Vec::new();
        for g in gb {
            if g.variable_content(0) == 0 && g.terms().iter().all(|(m, _)| m.exps[0] == 0) {
                // drop the auxiliary slot
                let reduced = strip_first_var(&g, &self.ring, &back)?;
                out.push(reduced);
            }
        }
        Ok(Ideal::new(self.ring.clone(), out))
    }

    /// `(I : f)` computed as `intersect(I, (f))` divided by `f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let pf = Ideal::new(self.ring.clone(), vec![f.clone()]);
        let meet = self.intersect(&pf)?;
        let mut out = Vec::new();
        for g in meet.gens() {
            let (nf, quot) = reduce(g, std::slice::from_ref(f), MonomialOrder::Grevlex);
            if !nf.is_zero() {
                return Err(Error::Invalid(
                    "intersection member not divisible by colon element".into(),
                ));
            }
            out.push(quot.into_iter().next().unwrap());
        }
        Ok(Ideal::new(self.ring.clone(), out))
    }

    /// `(I : J) = ∩ (I : f)` over the generators of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for f in other.gens() {
            let c = self.colon_poly(f)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.clone()))
    }

    /// `(I : v^∞)` for a single ring variable, for homogeneous ideals: in a
    /// grevlex basis with `v` last, dividing every member by its `v`-content
    /// yields a basis of the saturation. Variables are swapped so `v` is
    /// last, then swapped back.
    pub fn saturate_variable(&self, v: usize) -> Result<Ideal> {
        if !self.gens.iter().all(|g| g.is_homogeneous()) {
            return Err(Error::Invalid(
                "variable saturation requires homogeneous generators".into(),
            ));
        }
        let nv = self.ring.nvars();
        let mut perm: Vec<usize> = (0..nv).collect();
        perm.swap(v, nv - 1);
        let signs = vec![1i8; nv];
        let swapped: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.apply_symmetry(&perm, &signs))
            .collect::<Result<_>>()?;
        let gb = buchberger(&swapped, MonomialOrder::Grevlex);
        let mut out = Vec::new();
        for g in gb {
            let k = g.variable_content(nv - 1);
            let stripped = if k > 0 {
                g.div_monomial(&Monomial::var(nv - 1).pow(k))
            } else {
                g
            };
            out.push(stripped.apply_symmetry(&perm, &signs)?);
        }
        Ok(Ideal::new(self.ring.clone(), out))
    }

    /// The saturation `(I : J^∞)`: iterated colon by `J` until stable. When
    /// `J` is generated by single variables and `I` is homogeneous, the
    /// per-variable grevlex saturations are computed instead and intersected;
    /// the result is the same ideal.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let var_of = |p: &Polynomial| -> Option<usize> {
            if p.num_terms() != 1 {
                return None;
            }
            let (m, _) = &p.terms()[0];
            let nz: Vec<usize> = (0..self.ring.nvars())
                .filter(|&i| m.exps[i] != 0)
                .collect();
            (nz.len() == 1 && m.exps[nz[0]] == 1).then(|| nz[0])
        };
        let vars: Option<Vec<usize>> = other.gens().iter().map(var_of).collect();
        if let Some(vars) = vars {
            if !vars.is_empty() && self.gens.iter().all(|g| g.is_homogeneous()) {
                let mut acc: Option<Ideal> = None;
                for v in vars {
                    let s = self.saturate_variable(v)?;
                    acc = Some(match acc {
                        None => s,
                        Some(prev) => prev.intersect(&s)?,
                    });
                }
                return Ok(acc.unwrap());
            }
        }
        let mut cur = self.clone();
        loop {
            let next = cur.colon_ideal(other)?;
            if next.is_subset_of(&cur) {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Generators of `I ∩ K[vars outside block]`: members of a block-order
    /// Groebner basis free of the block variables. The block variables are
    /// moved to the front of the elimination order internally.
    pub fn eliminate(&self, block: &[usize]) -> Result<Ideal> {
        if block.is_empty() {
            return Ok(self.clone());
        }
        let nv = self.ring.nvars();
        if block.iter().any(|&v| v >= nv) {
            return Err(Error::Invalid("block variable out of range".into()));
        }
        // permutation sending block vars to the front, stable on the rest
        let mut perm = vec![usize::MAX; nv];
        for (pos, &v) in block.iter().enumerate() {
            perm[v] = pos;
        }
        let mut next = block.len();
        for v in 0..nv {
            if perm[v] == usize::MAX {
                perm[v] = next;
                next += 1;
            }
        }
        let signs = vec![1i8; nv];
        let moved: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.apply_symmetry(&perm, &signs))
            .collect::<Result<_>>()?;
        let gb = buchberger(&moved, MonomialOrder::Block(block.len()));
        let mut out = Vec::new();
        for g in gb {
            if g.terms()
                .iter()
                .all(|(m, _)| m.degree_prefix(block.len()) == 0)
            {
                out.push(g.apply_symmetry(&invert_perm(&perm), &signs)?);
            }
        }
        Ok(Ideal::new(self.ring.clone(), out))
    }

    /// Degree of `R/I` for an ideal of points (`dim R/I = 1`), read off the
    /// stabilized Hilbert function of the leading-term ideal.
    pub fn multiplicity(&self) -> Result<u32> {
        let gb = self.groebner_basis(MonomialOrder::Grevlex);
        if gb.iter().any(|g| g.degree() == Some(0)) {
            return Err(Error::DimensionNot1);
        }
        let lts: Vec<Monomial> = gb
            .iter()
            .map(|g| g.leading_term(MonomialOrder::Grevlex).unwrap().0)
            .collect();
        let dmax = lts.iter().map(|m| m.degree()).max().unwrap_or(0);
        // Hilbert functions of 3-variable monomial ideals agree with the
        // Hilbert polynomial from degree 3*dmax on (Taylor complex bound).
        let probe = 3 * dmax + 2;
        let hf = |d: u32| -> u32 {
            self.ring
                .graded_basis(d, MonomialOrder::Grevlex)
                .into_iter()
                .filter(|m| !lts.iter().any(|l| l.divides(m)))
                .count() as u32
        };
        let a = hf(probe);
        let b = hf(probe + 1);
        if a != b || a == 0 {
            return Err(Error::DimensionNot1);
        }
        Ok(a)
    }

    /// Hilbert function of `R/I` in one degree.
    pub fn hilbert_function(&self, d: u32) -> u32 {
        let gb = self.groebner_basis(MonomialOrder::Grevlex);
        let lts: Vec<Monomial> = gb
            .iter()
            .filter_map(|g| g.leading_term(MonomialOrder::Grevlex).map(|t| t.0))
            .collect();
        self.ring
            .graded_basis(d, MonomialOrder::Grevlex)
            .into_iter()
            .filter(|m| !lts.iter().any(|l| l.divides(m)))
            .count() as u32
    }
}

fn invert_perm(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

fn strip_first_var(g: &Polynomial, target: &Ring, map: &[usize]) -> Result<Polynomial> {
    // g has no occurrence of variable 0; shift the remaining ones down
    let src = g.ring().clone();
    let mut full_map = vec![0usize; src.nvars()];
    full_map[0] = 0; // unused slot
    for (i, &dst) in map.iter().enumerate() {
        full_map[i + 1] = dst;
    }
    g.map_variables(target, &full_map)
}

/// The defining ideal of the Rees algebra of `(f, g, h)`: the kernel of
/// `T_i -> f_i`, computed by eliminating `s` from `(T1 - s f, T2 - s g,
/// T3 - s h)` in `K[s, x.., T1, T2, T3]`. The result lives in the ring
/// `K[x.., T1, T2, T3]`.
pub fn rees_ideal(f: &Polynomial, g: &Polynomial, h: &Polynomial) -> Result<Ideal> {
    let base = f.ring().clone();
    if g.ring() != &base || h.ring() != &base {
        return Err(Error::MixedRings);
    }
    for p in [f, g, h] {
        if p.homogeneous_degree().is_none() {
            return Err(Error::Invalid(
                "Rees ideal requires nonzero homogeneous generators".into(),
            ));
        }
    }
    let nv = base.nvars();
    let mut ext_names: Vec<String> = vec!["s@".into()];
    ext_names.extend(base.vars().iter().cloned());
    ext_names.extend(["T1", "T2", "T3"].iter().map(|s| s.to_string()));
    let ext = Ring::new(
        base.field(),
        &ext_names.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
    );
    let shift: Vec<usize> = (1..=nv).collect();
    let s = ext.var(0);
    let mut gens = Vec::new();
    for (k, p) in [f, g, h].into_iter().enumerate() {
        let t = ext.var(nv + 1 + k);
        gens.push(t.sub(&s.mul(&p.map_variables(&ext, &shift)?)?)?);
    }
    let gb = buchberger(&gens, MonomialOrder::Block(1));
    let mut tnames: Vec<String> = base.vars().to_vec();
    tnames.extend(["T1", "T2", "T3"].iter().map(|s| s.to_string()));
    let tring = Ring::new(
        base.field(),
        &tnames.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
    );
    let mut out = Vec::new();
    for gmem in gb {
        if gmem.terms().iter().all(|(m, _)| m.exps[0] == 0) {
            let map: Vec<usize> = std::iter::once(0)
                .chain(0..tring.nvars())
                .collect();
            out.push(gmem.map_variables(&tring, &map)?);
        }
    }
    Ok(Ideal::new(tring, out))
}

/// T-degree of a polynomial in the Rees ring `K[x.., T1, T2, T3]` (the last
/// three variables), assuming T-homogeneity.
pub fn t_degree(p: &Polynomial, base_vars: usize) -> Option<u32> {
    let degs: Vec<u32> = p
        .terms()
        .iter()
        .map(|(m, _)| {
            m.exps[base_vars..]
                .iter()
                .map(|&e| e as u32)
                .sum::<u32>()
        })
        .collect();
    let first = *degs.first()?;
    degs.iter().all(|&d| d == first).then_some(first)
}

/// True iff the Rees ideal is generated in T-degree 1, i.e. the ideal is of
/// linear type. `base_vars` is the number of ring variables before T1.
pub fn is_linear_type(rees: &Ideal, base_vars: usize) -> bool {
    let linear: Vec<Polynomial> = rees
        .gens()
        .iter()
        .filter(|g| t_degree(g, base_vars) == Some(1))
        .cloned()
        .collect();
    if linear.is_empty() {
        return rees.gens().is_empty();
    }
    let l1 = Ideal::new(rees.ring().clone(), linear);
    rees.gens().iter().all(|g| l1.contains(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::parse_poly;

    fn q_ring() -> Ring {
        Ring::xyz(Field::rationals())
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_poly(r, s).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r.clone(), gens.iter().map(|s| p(r, s)).collect())
    }

    #[test]
    fn monomial_star_is_its_own_basis() {
        let r = q_ring();
        let gb = buchberger(
            &[p(&r, "x*y"), p(&r, "x*z"), p(&r, "y*z")],
            MonomialOrder::Grevlex,
        );
        assert_eq!(gb, vec![p(&r, "y*z"), p(&r, "x*z"), p(&r, "x*y")]);
    }

    #[test]
    fn principal_ideal() {
        let r = q_ring();
        let gb = buchberger(&[p(&r, "3*x")], MonomialOrder::Grevlex);
        assert_eq!(gb, vec![p(&r, "x")]);
        assert!(buchberger(&[], MonomialOrder::Grevlex).is_empty());
    }

    #[test]
    fn twisted_cubic_membership() {
        let r = q_ring();
        let i = ideal(&r, &["y - x^2", "z - x^3"]);
        let gb = i.groebner_basis(MonomialOrder::Lex);
        assert!(gb.iter().any(|g| g.variable_content(0) == 0
            && g.terms().iter().all(|(m, _)| m.exps[0] == 0)));
        assert!(i.contains(&p(&r, "z^2 - y^3")));
        assert!(!i.contains(&p(&r, "z^2 - y^2")));
    }

    #[test]
    fn division_contract() {
        let r = q_ring();
        let f = p(&r, "x^2*y");
        let (nf, q) = reduce(&f, &[p(&r, "x*y")], MonomialOrder::Grevlex);
        assert!(nf.is_zero());
        assert_eq!(q[0], p(&r, "x"));

        let f2 = p(&r, "x^2 + y^2");
        let (nf2, q2) = reduce(&f2, &[p(&r, "x")], MonomialOrder::Grevlex);
        assert_eq!(nf2, p(&r, "y^2"));
        assert_eq!(q2[0], p(&r, "x"));
    }

    #[test]
    fn reduction_reconstructs_input() {
        let r = Ring::xyz(Field::prime(13).unwrap());
        let f = p(&r, "x^4 + 2*x^2*y*z + 5*z^4 + x*y");
        let divisors = [p(&r, "x^2 - z^2"), p(&r, "y^2 + x*z"), p(&r, "x*y*z")];
        let (nf, quots) = reduce(&f, &divisors, MonomialOrder::Grevlex);
        let mut back = nf.clone();
        for (q, d) in quots.iter().zip(&divisors) {
            back = back.add(&q.mul(d).unwrap()).unwrap();
        }
        assert_eq!(back, f);
        // no term of nf divisible by any divisor lead
        for (m, _) in nf.terms() {
            for d in &divisors {
                let (lm, _) = d.leading_term(MonomialOrder::Grevlex).unwrap();
                assert!(!lm.divides(m));
            }
        }
    }

    #[test]
    fn membership_examples() {
        let r = q_ring();
        let i = ideal(&r, &["x"]);
        assert!(i.contains(&p(&r, "x^2")));
        assert!(i.contains(&r.zero()));
        assert!(!i.contains(&p(&r, "y")));
    }

    #[test]
    fn intersect_principal() {
        let r = q_ring();
        let i = ideal(&r, &["x"]);
        let j = ideal(&r, &["y"]);
        let meet = i.intersect(&j).unwrap();
        assert!(meet.equals(&ideal(&r, &["x*y"])));
        // I ∩ I = I
        let star = ideal(&r, &["x*y", "x*z", "y*z"]);
        assert!(star.intersect(&star).unwrap().equals(&star));
    }

    #[test]
    fn colon_examples() {
        let r = q_ring();
        assert!(ideal(&r, &["x^2"])
            .colon_poly(&p(&r, "x"))
            .unwrap()
            .equals(&ideal(&r, &["x"])));
        assert!(ideal(&r, &["x*y", "x*z"])
            .colon_poly(&p(&r, "x"))
            .unwrap()
            .equals(&ideal(&r, &["y", "z"])));
        let i = ideal(&r, &["x*y", "x*z", "y*z"]);
        assert!(i.colon_poly(&r.one()).unwrap().equals(&i));
        assert!(i.colon_poly(&r.zero()).is_err());
    }

    #[test]
    fn saturation_examples() {
        let r = q_ring();
        let m = ideal(&r, &["x", "y", "z"]);
        // x*m has the irrelevant ideal embedded; saturating recovers (x)
        let i = ideal(&r, &["x^2", "x*y", "x*z"]);
        assert!(i.saturate(&m).unwrap().equals(&ideal(&r, &["x"])));
        // (x^2, xy) = (x) ∩ (x^2, y) has embedded prime (x, y), not the
        // irrelevant ideal, so m-saturation leaves it unchanged
        let j = ideal(&r, &["x^2", "x*y"]);
        assert!(j.saturate(&m).unwrap().equals(&j));
        // a point ideal is already saturated
        let pt = ideal(&r, &["y", "z"]);
        assert!(pt.saturate(&m).unwrap().equals(&pt));
        // generic iterated-colon path agrees with the variable fast path
        for target in [&i, &j] {
            let generic = {
                let mut cur = (*target).clone();
                loop {
                    let next = cur.colon_ideal(&m).unwrap();
                    if next.is_subset_of(&cur) {
                        break cur;
                    }
                    cur = next;
                }
            };
            assert!(generic.equals(&target.saturate(&m).unwrap()));
        }
    }

    #[test]
    fn elimination_soundness() {
        let r = q_ring();
        let i = ideal(&r, &["y - x^2", "z - x^3"]);
        let e = i.eliminate(&[0]).unwrap();
        assert!(!e.gens().is_empty());
        for g in e.gens() {
            assert!(g.terms().iter().all(|(m, _)| m.exps[0] == 0));
            assert!(i.contains(g));
        }
        assert!(e.contains(&p(&r, "z^2 - y^3")));
        // eliminate nothing
        assert!(i.eliminate(&[]).unwrap().equals(&i));
        // (s x - 1) has no s-free member: model with x,y,z ring, eliminate x from (x*y - 1)
        let j = ideal(&r, &["x*y - 1"]);
        assert!(j.eliminate(&[0]).unwrap().gens().is_empty());
    }

    #[test]
    fn rees_of_variables_is_koszul_and_linear_type() {
        let r = q_ring();
        let l = rees_ideal(&r.var(0), &r.var(1), &r.var(2)).unwrap();
        let tr = l.ring().clone();
        let koszul = [
            p(&tr, "x*T2 - y*T1"),
            p(&tr, "x*T3 - z*T1"),
            p(&tr, "y*T3 - z*T2"),
        ];
        for k in &koszul {
            assert!(l.contains(k));
        }
        let koszul_ideal = Ideal::new(tr, koszul.to_vec());
        for g in l.gens() {
            assert!(koszul_ideal.contains(g));
        }
        assert!(is_linear_type(&l, 3));
    }

    #[test]
    fn rees_of_veronese_is_not_linear_type() {
        let r = q_ring();
        let l = rees_ideal(&p(&r, "x^2"), &p(&r, "x*y"), &p(&r, "y^2")).unwrap();
        let tr = l.ring().clone();
        assert!(l.contains(&p(&tr, "T1*T3 - T2^2")));
        assert!(!is_linear_type(&l, 3));
    }

    #[test]
    fn multiplicity_of_points() {
        let r = q_ring();
        assert_eq!(ideal(&r, &["x", "y"]).multiplicity().unwrap(), 1);
        assert_eq!(
            ideal(&r, &["x*y", "x*z", "y*z"]).multiplicity().unwrap(),
            3
        );
        assert!(ideal(&r, &["x"]).multiplicity().is_err());
        assert!(ideal(&r, &["1"]).multiplicity().is_err());
    }

    #[test]
    fn gb_canonical_under_permutation_and_scaling() {
        let r = Ring::xyz(Field::prime(7).unwrap());
        let gens = [p(&r, "x*y - z^2"), p(&r, "x^2 - y*z"), p(&r, "y^2 - x*z")];
        let gb1 = buchberger(&gens, MonomialOrder::Grevlex);
        let scaled = [
            gens[2].scale(&r.field().from_i64(3)),
            gens[0].scale(&r.field().from_i64(5)),
            gens[1].clone(),
        ];
        let gb2 = buchberger(&scaled, MonomialOrder::Grevlex);
        assert_eq!(gb1, gb2);
    }

    #[test]
    fn star_symbolic_square_two_routes() {
        // (x,y)^2 ∩ (x,z)^2 ∩ (y,z)^2 equals saturate(I^2, m) for the star
        let r = q_ring();
        let i = ideal(&r, &["x*y", "x*z", "y*z"]);
        let m = ideal(&r, &["x", "y", "z"]);
        let via_sat = i.power(2).saturate(&m).unwrap();
        let pts = [
            ideal(&r, &["x", "y"]).power(2),
            ideal(&r, &["x", "z"]).power(2),
            ideal(&r, &["y", "z"]).power(2),
        ];
        let via_int = pts[0]
            .intersect(&pts[1])
            .unwrap()
            .intersect(&pts[2])
            .unwrap();
        assert!(via_sat.equals(&via_int));
    }
}
