//! Module Groebner bases over twisted free modules: syzygy computation from
//! s-pair reduction certificates, minimal generator extraction, module
//! membership with certificates, and Hilbert-Burch data.

use crate::engine::{Buchberger, Engine, Key, ModKey, ModOrder, RedStep, RingOrder, WPoly};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{self, Ideal};
use crate::linalg;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};
use std::sync::Arc;

/// An element of the twisted graded free module `R(-a_1) ⊕ ... ⊕ R(-a_k)`.
/// Component `i` homogeneous of degree `e` contributes module degree
/// `e + a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector {
    ring: Ring,
    twists: Arc<Vec<i64>>,
    comps: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn new(ring: Ring, twists: Arc<Vec<i64>>, comps: Vec<Polynomial>) -> Result<ModuleVector> {
        if twists.len() != comps.len() {
            return Err(Error::TwistMismatch);
        }
        for c in &comps {
            if c.ring() != &ring {
                return Err(Error::MixedRings);
            }
        }
        Ok(ModuleVector {
            ring,
            twists,
            comps,
        })
    }

    pub fn zero(ring: Ring, twists: Arc<Vec<i64>>) -> ModuleVector {
        let comps = vec![ring.zero(); twists.len()];
        ModuleVector {
            ring,
            twists,
            comps,
        }
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn twists(&self) -> &Arc<Vec<i64>> {
        &self.twists
    }

    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Module degree when homogeneous: every nonzero component `i` of degree
    /// `e_i` must satisfy `e_i + a_i = const`.
    pub fn module_degree(&self) -> Option<i64> {
        let mut deg: Option<i64> = None;
        for (i, c) in self.comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = c.homogeneous_degree()? as i64 + self.twists[i];
            match deg {
                None => deg = Some(e),
                Some(d) if d == e => {}
                _ => return None,
            }
        }
        deg
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.module_degree().is_some()
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.compatible(other)?;
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(ModuleVector {
            ring: self.ring.clone(),
            twists: self.twists.clone(),
            comps,
        })
    }

    pub fn sub(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ModuleVector {
        ModuleVector {
            ring: self.ring.clone(),
            twists: self.twists.clone(),
            comps: self.comps.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale_poly(&self, p: &Polynomial) -> Result<ModuleVector> {
        let comps = self
            .comps
            .iter()
            .map(|c| c.mul(p))
            .collect::<Result<_>>()?;
        Ok(ModuleVector {
            ring: self.ring.clone(),
            twists: self.twists.clone(),
            comps,
        })
    }

    /// `sum_i comps[i] * polys[i]`.
    pub fn dot(&self, polys: &[Polynomial]) -> Result<Polynomial> {
        if polys.len() != self.rank() {
            return Err(Error::TwistMismatch);
        }
        let mut acc = self.ring.zero();
        for (c, p) in self.comps.iter().zip(polys) {
            acc = acc.add(&c.mul(p)?)?;
        }
        Ok(acc)
    }

    fn compatible(&self, other: &ModuleVector) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        if self.twists != other.twists && *self.twists != *other.twists {
            return Err(Error::TwistMismatch);
        }
        Ok(())
    }
}

fn to_wvec(v: &ModuleVector, order: &ModOrder) -> WPoly<ModKey> {
    let mut terms: WPoly<ModKey> = Vec::new();
    for (i, c) in v.comps.iter().enumerate() {
        for (m, coeff) in c.terms() {
            terms.push((
                ModKey {
                    comp: i as u32,
                    mono: *m,
                },
                coeff.clone(),
            ));
        }
    }
    let engine: Engine<ModKey, ModOrder> = Engine::new(v.ring.field(), order.clone());
    engine.normalize(terms)
}

fn from_wvec(ring: &Ring, twists: &Arc<Vec<i64>>, w: &WPoly<ModKey>) -> ModuleVector {
    let rank = twists.len();
    let mut parts: Vec<Vec<(Monomial, FieldElement)>> = vec![Vec::new(); rank];
    for (k, c) in w {
        parts[k.comp as usize].push((k.mono, c.clone()));
    }
    let comps = parts.into_iter().map(|t| ring.from_terms(t)).collect();
    ModuleVector {
        ring: ring.clone(),
        twists: twists.clone(),
        comps,
    }
}

fn mod_order(ring: &Ring, twists: &Arc<Vec<i64>>) -> ModOrder {
    ModOrder {
        order: MonomialOrder::Grevlex,
        nvars: ring.nvars(),
        twists: twists.clone(),
    }
}

/// A generating set of the first syzygy module of `gens`, from the s-pair
/// reduction certificates of a transform-tracking Groebner computation.
/// Every returned `v` satisfies `sum_i v_i * gens_i = 0` exactly. The output
/// lives in `⊕ R(-deg gens_i)`.
pub fn syzygies(gens: &[Polynomial]) -> Result<Vec<ModuleVector>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    let mut twists: Vec<i64> = Vec::with_capacity(gens.len());
    for g in gens {
        if g.ring() != &ring {
            return Err(Error::MixedRings);
        }
        match g.homogeneous_degree() {
            Some(d) => twists.push(d as i64),
            None => {
                if g.is_zero() {
                    twists.push(0);
                } else {
                    return Err(Error::Invalid("syzygies require homogeneous generators".into()));
                }
            }
        }
    }
    let twists = Arc::new(twists);
    let order = MonomialOrder::Grevlex;
    let engine = Engine::new(
        ring.field(),
        RingOrder {
            order,
            nvars: ring.nvars(),
        },
    );
    let bb = Buchberger {
        engine,
        use_criteria: false,
        track: true,
        degree_of: |m: &Monomial| m.degree(),
    };
    let inputs: Vec<WPoly<Monomial>> = gens.iter().map(|g| groebner::to_w(g, order)).collect();
    let out = bb.run(inputs, order, ring.nvars());
    let syz = out.syzygies.expect("tracking on");
    Ok(syz
        .iter()
        .map(|w| from_wvec(&ring, &twists, w))
        .collect())
}

struct ModuleGb {
    basis: Vec<WPoly<ModKey>>,
    transforms: Vec<WPoly<ModKey>>,
    syzygies: Vec<WPoly<ModKey>>,
    order: ModOrder,
}

fn module_gb(gens: &[ModuleVector], track: bool) -> Result<ModuleGb> {
    let first = gens.first().ok_or_else(|| Error::Invalid("empty module".into()))?;
    let ring = first.ring().clone();
    for g in gens {
        first.compatible(g)?;
    }
    let order = mod_order(&ring, &first.twists);
    let engine: Engine<ModKey, ModOrder> = Engine::new(ring.field(), order.clone());
    let bb = Buchberger {
        engine,
        use_criteria: false,
        track,
        degree_of: |k: &ModKey| k.mono.degree(),
    };
    let inputs: Vec<WPoly<ModKey>> = gens.iter().map(|g| to_wvec(g, &order)).collect();
    let out = bb.run(inputs, MonomialOrder::Grevlex, ring.nvars());
    Ok(ModuleGb {
        basis: out.basis,
        transforms: out.transforms.unwrap_or_default(),
        syzygies: out.syzygies.unwrap_or_default(),
        order,
    })
}

/// A generating set of the syzygy module of module vectors. The output lives
/// in `⊕ R(-b_i)` with `b_i` the module degree of `gens[i]`.
pub fn module_syzygies(gens: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let ring = gens[0].ring().clone();
    let mut twists = Vec::with_capacity(gens.len());
    for g in gens {
        if g.is_zero() {
            twists.push(0);
        } else {
            twists.push(g.module_degree().ok_or_else(|| {
                Error::Invalid("module syzygies require homogeneous vectors".into())
            })?);
        }
    }
    let twists = Arc::new(twists);
    let gb = module_gb(gens, true)?;
    Ok(gb
        .syzygies
        .iter()
        .map(|w| from_wvec(&ring, &twists, w))
        .collect())
}

/// Membership of `v` in the submodule generated by `gens`, with certificate
/// coordinates such that `v = sum c_i gens_i`; the certificate is re-verified
/// by expansion before returning.
pub fn module_member(
    v: &ModuleVector,
    gens: &[ModuleVector],
) -> Result<(bool, Option<Vec<Polynomial>>)> {
    if v.is_zero() {
        return Ok((
            true,
            Some(vec![v.ring.zero(); gens.len()]),
        ));
    }
    if gens.is_empty() {
        return Ok((false, None));
    }
    v.compatible(&gens[0])?;
    let ring = v.ring.clone();
    let gb = module_gb(gens, true)?;
    let engine: Engine<ModKey, ModOrder> = Engine::new(ring.field(), gb.order.clone());
    let mut log: Vec<RedStep> = Vec::new();
    let nf = engine.normal_form(to_wvec(v, &gb.order), &gb.basis, Some(&mut log));
    if !nf.is_empty() {
        return Ok((false, None));
    }
    // fold the reduction log through the transforms to express v over gens
    let coord_twists = Arc::new(vec![0i64; gens.len()]);
    let tord = mod_order(&ring, &coord_twists);
    let tengine: Engine<ModKey, ModOrder> = Engine::new(ring.field(), tord);
    let mut acc: WPoly<ModKey> = Vec::new();
    for step in &log {
        let scaled: WPoly<ModKey> = gb.transforms[step.idx]
            .iter()
            .map(|(k, c)| {
                (
                    k.mul_mono(&step.mono),
                    ring.field().mul(c, &step.coeff),
                )
            })
            .collect();
        let neg_one = ring.field().neg(&ring.field().one());
        acc = tengine.sub_scaled(&acc, &neg_one, &Monomial::one(), &scaled);
    }
    acc = tengine.normalize(acc);
    let coords = from_wvec(&ring, &coord_twists, &acc).comps;
    // exact re-verification
    let mut expanded = ModuleVector::zero(ring.clone(), v.twists.clone());
    for (c, g) in coords.iter().zip(gens) {
        expanded = expanded.add(&g.scale_poly(c)?)?;
    }
    if &expanded != v {
        return Err(Error::Invalid(
            "membership certificate failed re-verification".into(),
        ));
    }
    Ok((true, Some(coords)))
}

/// A minimal generating subset of homogeneous vectors: processed by
/// increasing module degree, a vector is discarded when it lies in the
/// submodule generated by those already kept.
pub fn minimalize(vectors: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    for v in vectors {
        if !v.is_homogeneous() {
            return Err(Error::Invalid("minimalize requires homogeneous vectors".into()));
        }
    }
    order.sort_by_key(|&i| (vectors[i].module_degree().unwrap_or(i64::MIN), i));
    let mut kept: Vec<ModuleVector> = Vec::new();
    for i in order {
        let v = &vectors[i];
        if v.is_zero() {
            continue;
        }
        if kept.is_empty() {
            kept.push(v.clone());
            continue;
        }
        let (member, _) = module_member(v, &kept)?;
        if !member {
            kept.push(v.clone());
        }
    }
    Ok(kept)
}

/// Minimal generating subset of homogeneous ideal generators, by the same
/// graded Nakayama process using ideal membership.
pub fn minimalize_ideal_gens(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut order: Vec<usize> = (0..gens.len()).collect();
    for g in gens {
        if !g.is_zero() && g.homogeneous_degree().is_none() {
            return Err(Error::Invalid("minimalize requires homogeneous generators".into()));
        }
    }
    order.sort_by_key(|&i| (gens[i].degree().unwrap_or(0), i));
    let mut kept: Vec<Polynomial> = Vec::new();
    for i in order {
        let g = &gens[i];
        if g.is_zero() {
            continue;
        }
        if kept.is_empty() {
            kept.push(g.clone());
            continue;
        }
        let span = Ideal::new(g.ring().clone(), kept.clone());
        if !span.contains(g) {
            kept.push(g.clone());
        }
    }
    Ok(kept)
}

/// The 3x2 Hilbert-Burch presentation of a 3-generated height-2 ACM ideal:
/// the two minimal syzygy columns sorted by degree `d0 <= d1`, the signed
/// 2x2 minors `(f, g, h)`, and the scalar change of basis expressing the
/// input generators over the minors.
#[derive(Debug, Clone)]
pub struct HilbertBurchData {
    pub ring: Ring,
    pub p_col: [Polynomial; 3],
    pub q_col: [Polynomial; 3],
    pub d0: u32,
    pub d1: u32,
    /// common degree of the minimal generators; `d = d0 + d1`
    pub d: u32,
    pub minors: [Polynomial; 3],
    /// `input_gens[i] = sum_j change_of_basis[i][j] * minors[j]`
    pub change_of_basis: Vec<Vec<FieldElement>>,
}

impl HilbertBurchData {
    /// Builds the presentation whose generators are the signed minors of the
    /// given columns themselves.
    pub fn from_columns_with_minor_generators(
        p_col: [Polynomial; 3],
        q_col: [Polynomial; 3],
    ) -> Result<HilbertBurchData> {
        let minors = signed_minors(&p_col, &q_col)?;
        HilbertBurchData::from_columns(&minors, p_col, q_col)
    }

    /// Builds the presentation from explicit columns, verifying the syzygy
    /// identities and that the signed minors generate the same ideal as
    /// `gens`.
    pub fn from_columns(
        gens: &[Polynomial],
        p_col: [Polynomial; 3],
        q_col: [Polynomial; 3],
    ) -> Result<HilbertBurchData> {
        let ring = p_col[0].ring().clone();
        let d0 = p_col
            .iter()
            .filter_map(|p| p.homogeneous_degree())
            .next()
            .ok_or_else(|| Error::NotHilbertBurch("zero P column".into()))?;
        let d1 = q_col
            .iter()
            .filter_map(|p| p.homogeneous_degree())
            .next()
            .ok_or_else(|| Error::NotHilbertBurch("zero Q column".into()))?;
        if d0 > d1 {
            return HilbertBurchData::from_columns(gens, q_col, p_col);
        }
        let minors = signed_minors(&p_col, &q_col)?;
        let d = d0 + d1;
        for m in &minors {
            if m.homogeneous_degree() != Some(d) {
                return Err(Error::NotHilbertBurch(
                    "minors are not homogeneous of degree d0+d1".into(),
                ));
            }
        }
        // both columns annihilate the minors
        for col in [&p_col, &q_col] {
            let mut acc = ring.zero();
            for (c, m) in col.iter().zip(&minors) {
                acc = acc.add(&c.mul(m)?)?;
            }
            if !acc.is_zero() {
                return Err(Error::NotHilbertBurch("column is not a syzygy".into()));
            }
        }
        let minor_ideal = Ideal::new(ring.clone(), minors.to_vec());
        let gen_ideal = Ideal::new(ring.clone(), gens.to_vec());
        if !minor_ideal.equals(&gen_ideal) {
            return Err(Error::NotHilbertBurch(
                "signed minors do not regenerate the ideal".into(),
            ));
        }
        let change_of_basis = express_in_minors(gens, &minors)?;
        Ok(HilbertBurchData {
            ring,
            p_col,
            q_col,
            d0,
            d1,
            d,
            minors,
            change_of_basis,
        })
    }
}

fn signed_minors(p_col: &[Polynomial; 3], q_col: &[Polynomial; 3]) -> Result<[Polynomial; 3]> {
    let f = p_col[1]
        .mul(&q_col[2])?
        .sub(&p_col[2].mul(&q_col[1])?)?;
    let g = p_col[2]
        .mul(&q_col[0])?
        .sub(&p_col[0].mul(&q_col[2])?)?;
    let h = p_col[0]
        .mul(&q_col[1])?
        .sub(&p_col[1].mul(&q_col[0])?)?;
    Ok([f, g, h])
}

/// Solves `gens[i] = sum_j M[i][j] minors[j]` for scalars `M` in the degree-d
/// graded piece.
fn express_in_minors(
    gens: &[Polynomial],
    minors: &[Polynomial; 3],
) -> Result<Vec<Vec<FieldElement>>> {
    let ring = minors[0].ring().clone();
    let field = ring.field();
    let d = minors[0].homogeneous_degree().unwrap();
    let basis = ring.graded_basis(d, MonomialOrder::Grevlex);
    let cols: Vec<Vec<FieldElement>> = minors.iter().map(|m| m.coeff_vector(&basis)).collect();
    let mut out = Vec::new();
    for g in gens {
        let target = g.coeff_vector(&basis);
        let sol = linalg::solve(field, &cols, &target).ok_or_else(|| {
            Error::NotHilbertBurch("generator is not a scalar combination of minors".into())
        })?;
        out.push(sol);
    }
    Ok(out)
}

/// Computes the Hilbert-Burch presentation of an ideal with exactly three
/// minimal generators of one degree defining points (`dim R/I = 1`).
pub fn hilbert_burch(ideal: &Ideal) -> Result<HilbertBurchData> {
    let gens = minimalize_ideal_gens(ideal.gens())?;
    if gens.len() != 3 {
        return Err(Error::NotThreeGenerated(gens.len()));
    }
    let d = gens[0].homogeneous_degree().ok_or(Error::MixedGeneratorDegrees)?;
    if gens.iter().any(|g| g.homogeneous_degree() != Some(d)) {
        return Err(Error::MixedGeneratorDegrees);
    }
    ideal.multiplicity().map_err(|_| Error::DimensionNot1)?;
    let syz = minimalize(&syzygies(&gens)?)?;
    if syz.len() != 2 {
        return Err(Error::NotHilbertBurch(format!(
            "expected 2 minimal syzygies, found {}",
            syz.len()
        )));
    }
    let mut cols: Vec<[Polynomial; 3]> = syz
        .iter()
        .map(|v| {
            let c = v.comps();
            [c[0].clone(), c[1].clone(), c[2].clone()]
        })
        .collect();
    let col_degree = |col: &[Polynomial; 3]| -> u32 {
        col.iter()
            .filter_map(|p| p.homogeneous_degree())
            .next()
            .unwrap_or(0)
    };
    // sort by entry degree, tie-break on the lexicographically smaller
    // leading-term tuple
    let lead_tuple = |col: &[Polynomial; 3]| -> Vec<Monomial> {
        col.iter()
            .map(|p| {
                p.leading_term(MonomialOrder::Grevlex)
                    .map(|t| t.0)
                    .unwrap_or_else(Monomial::one)
            })
            .collect()
    };
    cols.sort_by(|a, b| {
        col_degree(a)
            .cmp(&col_degree(b))
            .then_with(|| lead_tuple(a).cmp(&lead_tuple(b)))
    });
    let q_col = cols.pop().unwrap();
    let p_col = cols.pop().unwrap();
    HilbertBurchData::from_columns(&gens, p_col, q_col)
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

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = q_ring();
        let syz = syzygies(&[r.var(0), r.var(1)]).unwrap();
        let min = minimalize(&syz).unwrap();
        assert_eq!(min.len(), 1);
        let v = &min[0];
        // (-y, x) up to sign
        let expect = [p(&r, "y"), p(&r, "x")];
        assert!(
            (v.comps()[0] == expect[0].neg() && v.comps()[1] == expect[1])
                || (v.comps()[0] == expect[0] && v.comps()[1] == expect[1].neg())
        );
    }

    #[test]
    fn syzygies_annihilate_generators_exactly() {
        let r = Ring::xyz(Field::prime(7).unwrap());
        let gens = [
            p(&r, "x*y^3 - x*z^3"),
            p(&r, "y*z^3 - x^3*y"),
            p(&r, "x^3*z - y^3*z"),
        ];
        let syz = syzygies(&gens).unwrap();
        assert!(!syz.is_empty());
        for v in &syz {
            assert!(v.dot(&gens).unwrap().is_zero());
        }
    }

    #[test]
    fn minimalize_drops_multiples() {
        let r = q_ring();
        let twists = Arc::new(vec![1i64, 1]);
        let v1 = ModuleVector::new(
            r.clone(),
            twists.clone(),
            vec![p(&r, "y").neg(), p(&r, "x")],
        )
        .unwrap();
        let v2 = ModuleVector::new(
            r.clone(),
            twists.clone(),
            vec![p(&r, "x*y").neg(), p(&r, "x^2")],
        )
        .unwrap();
        let min = minimalize(&[v1.clone(), v2]).unwrap();
        assert_eq!(min, vec![v1]);
    }

    #[test]
    fn module_membership_with_certificate() {
        let r = q_ring();
        let twists = Arc::new(vec![0i64, 0]);
        let e1 = ModuleVector::new(r.clone(), twists.clone(), vec![r.one(), r.zero()]).unwrap();
        let e2 = ModuleVector::new(r.clone(), twists.clone(), vec![r.zero(), r.one()]).unwrap();
        let v = ModuleVector::new(r.clone(), twists.clone(), vec![r.var(0), r.var(1)]).unwrap();
        let (member, coords) = module_member(&v, &[e1, e2]).unwrap();
        assert!(member);
        let coords = coords.unwrap();
        assert_eq!(coords[0], r.var(0));
        assert_eq!(coords[1], r.var(1));
        // zero vector has the zero certificate
        let z = ModuleVector::zero(r.clone(), twists.clone());
        let (member, coords) = module_member(&z, &[v]).unwrap();
        assert!(member);
        assert!(coords.unwrap().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn membership_false_outside_span() {
        let r = q_ring();
        let twists = Arc::new(vec![0i64, 0]);
        let g = ModuleVector::new(r.clone(), twists.clone(), vec![r.var(0), r.var(1)]).unwrap();
        let v = ModuleVector::new(r.clone(), twists.clone(), vec![r.one(), r.zero()]).unwrap();
        let (member, _) = module_member(&v, &[g]).unwrap();
        assert!(!member);
    }

    #[test]
    fn star_hilbert_burch() {
        let r = q_ring();
        let i = Ideal::new(
            r.clone(),
            vec![p(&r, "x*y"), p(&r, "x*z"), p(&r, "y*z")],
        );
        let hb = hilbert_burch(&i).unwrap();
        assert_eq!((hb.d0, hb.d1, hb.d), (1, 1, 2));
        let minors = Ideal::new(r.clone(), hb.minors.to_vec());
        assert!(minors.equals(&i));
        // both columns are syzygies of the minors
        for col in [&hb.p_col, &hb.q_col] {
            let mut acc = r.zero();
            for (c, m) in col.iter().zip(&hb.minors) {
                acc = acc.add(&c.mul(m).unwrap()).unwrap();
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn hilbert_burch_rejects_bad_inputs() {
        let r = q_ring();
        // not 3-generated after minimalization
        let i = Ideal::new(r.clone(), vec![p(&r, "x"), p(&r, "x^2")]);
        assert!(matches!(
            hilbert_burch(&i),
            Err(Error::NotThreeGenerated(1))
        ));
        // mixed degrees
        let j = Ideal::new(
            r.clone(),
            vec![p(&r, "x"), p(&r, "y^2"), p(&r, "z^3")],
        );
        assert!(hilbert_burch(&j).is_err());
    }
}
