//! The built-in point configurations: the Fermat family, the Klein
//! configuration of 49 points, and the 3-point coordinate star used as a
//! positive control.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::groebner::Ideal;
use crate::parse::parse_poly;
use crate::poly::{Polynomial, Ring};
use crate::syzygy::HilbertBurchData;
use std::collections::HashSet;

/// A reduced set of points with its defining ideal and, when available, the
/// line arrangement whose singular locus contains the points.
#[derive(Debug, Clone)]
pub struct PointConfiguration {
    pub name: String,
    pub field: Field,
    pub ring: Ring,
    /// projective coordinates canonicalized so the first nonzero entry is 1
    pub points: Vec<[FieldElement; 3]>,
    pub ideal: Ideal,
    pub lines: Option<Vec<Polynomial>>,
    /// true when the point set is exactly the singular locus of the lines,
    /// which makes the pair-count identity available
    pub full_singular_locus: bool,
}

/// The explicit Klein data: the chosen root `c`, the quartics `C_i`, the
/// quadrics `D_i`, the two syzygy columns and the degree-8 generators.
#[derive(Debug, Clone)]
pub struct KleinStructure {
    pub c: FieldElement,
    pub cbar: FieldElement,
    pub c_forms: [Polynomial; 3],
    pub d_forms: [Polynomial; 3],
    pub p_col: [Polynomial; 3],
    pub q_col: [Polynomial; 3],
    pub gens: [Polynomial; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Fermat(u32),
    Klein,
    Star3,
}

impl Builtin {
    pub fn parse(s: &str) -> Option<Builtin> {
        match s {
            "klein" => Some(Builtin::Klein),
            "star3" => Some(Builtin::Star3),
            _ => s
                .strip_prefix("fermat:")
                .and_then(|n| n.parse().ok())
                .map(Builtin::Fermat),
        }
    }

    pub fn default_field(&self) -> Option<Field> {
        match self {
            Builtin::Fermat(3) => Some(Field::Prime(7)),
            Builtin::Fermat(4) => Some(Field::Prime(13)),
            Builtin::Fermat(5) => Some(Field::Prime(11)),
            Builtin::Fermat(_) => None,
            Builtin::Klein => Some(Field::Prime(11)),
            Builtin::Star3 => Some(Field::Rationals),
        }
    }
}

/// Builds a named configuration; for `klein` the structure data comes along.
pub fn build(b: Builtin, field: Field) -> Result<(PointConfiguration, Option<KleinStructure>)> {
    match b {
        Builtin::Fermat(n) => Ok((fermat(n, field)?, None)),
        Builtin::Star3 => Ok((star3(field), None)),
        Builtin::Klein => {
            let (cfg, ks) = klein(field)?;
            Ok((cfg, Some(ks)))
        }
    }
}

fn canonicalize_point(field: Field, p: [FieldElement; 3]) -> Option<[FieldElement; 3]> {
    let lead = p.iter().position(|c| !field.is_zero(c))?;
    let inv = field.inv(&p[lead]).ok()?;
    Some([
        field.mul(&p[0], &inv),
        field.mul(&p[1], &inv),
        field.mul(&p[2], &inv),
    ])
}

fn dedup_projective(field: Field, raw: Vec<[FieldElement; 3]>) -> Vec<[FieldElement; 3]> {
    let mut seen: HashSet<[FieldElement; 3]> = HashSet::new();
    let mut out = Vec::new();
    for p in raw {
        if let Some(c) = canonicalize_point(field, p) {
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
    }
    out
}

fn all_permutations(p: &[FieldElement; 3]) -> Vec<[FieldElement; 3]> {
    let idx: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    idx.iter()
        .map(|perm| [p[perm[0]].clone(), p[perm[1]].clone(), p[perm[2]].clone()])
        .collect()
}

/// All `n`-th roots of unity in a finite field, by exhaustive scan. Errors
/// unless there are exactly `n` of them.
pub fn roots_of_unity(field: Field, n: u32) -> Result<Vec<FieldElement>> {
    let elems = field.enumerate().map_err(|_| Error::MissingRootsOfUnity {
        n,
        field: field.to_string(),
    })?;
    let roots: Vec<FieldElement> = elems
        .into_iter()
        .filter(|t| !field.is_zero(t) && field.is_one(&field.pow(t, n as u64)))
        .collect();
    if roots.len() == n as usize {
        Ok(roots)
    } else {
        Err(Error::MissingRootsOfUnity {
            n,
            field: field.to_string(),
        })
    }
}

/// The Fermat configuration of `n^2 + 3` points cut out by
/// `(x(y^n - z^n), y(z^n - x^n), z(x^n - y^n))`, together with its `3n + 3`
/// lines.
pub fn fermat(n: u32, field: Field) -> Result<PointConfiguration> {
    if n < 3 {
        return Err(Error::Invalid("fermat requires n >= 3".into()));
    }
    let roots = roots_of_unity(field, n)?;
    let ring = Ring::xyz(field);
    let (x, y, z) = (ring.var(0), ring.var(1), ring.var(2));
    let pow = |p: &Polynomial| p.pow(n);
    let gens = vec![
        x.mul(&pow(&y).sub(&pow(&z))?)?,
        y.mul(&pow(&z).sub(&pow(&x))?)?,
        z.mul(&pow(&x).sub(&pow(&y))?)?,
    ];
    let one = field.one();
    let zero = field.zero();
    let mut raw: Vec<[FieldElement; 3]> = vec![
        [one.clone(), zero.clone(), zero.clone()],
        [zero.clone(), one.clone(), zero.clone()],
        [zero.clone(), zero.clone(), one.clone()],
    ];
    for a in &roots {
        for b in &roots {
            raw.push([one.clone(), a.clone(), b.clone()]);
        }
    }
    let points = dedup_projective(field, raw);
    if points.len() != (n * n + 3) as usize {
        return Err(Error::Invalid(format!(
            "expected {} Fermat points, generated {}",
            n * n + 3,
            points.len()
        )));
    }
    for p in &points {
        for g in &gens {
            if !field.is_zero(&g.evaluate(p)?) {
                return Err(Error::Invalid("generator does not vanish at a point".into()));
            }
        }
    }
    let mut lines = vec![x.clone(), y.clone(), z.clone()];
    for w in &roots {
        let wc = ring.constant(w.clone());
        lines.push(x.sub(&wc.mul(&y)?)?);
        lines.push(y.sub(&wc.mul(&z)?)?);
        lines.push(z.sub(&wc.mul(&x)?)?);
    }
    Ok(PointConfiguration {
        name: format!("fermat:{n}"),
        field,
        ring: ring.clone(),
        points,
        ideal: Ideal::new(ring, gens),
        lines: Some(lines),
        full_singular_locus: false,
    })
}

/// The classical monomial Hilbert-Burch columns of the Fermat ideal:
/// `(x^{n-1}, y^{n-1}, z^{n-1})` and `(yz, xz, xy)`.
pub fn fermat_hilbert_burch(cfg: &PointConfiguration) -> Result<HilbertBurchData> {
    let n: u32 = cfg
        .name
        .strip_prefix("fermat:")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Invalid("not a fermat configuration".into()))?;
    let ring = &cfg.ring;
    let (x, y, z) = (ring.var(0), ring.var(1), ring.var(2));
    let powers = [x.pow(n - 1), y.pow(n - 1), z.pow(n - 1)];
    let products = [y.mul(&z)?, x.mul(&z)?, x.mul(&y)?];
    HilbertBurchData::from_columns(cfg.ideal.gens(), powers, products)
}

/// The 3-point coordinate star `(xy, xz, yz)`, the positive control.
pub fn star3(field: Field) -> PointConfiguration {
    let ring = Ring::xyz(field);
    let (x, y, z) = (ring.var(0), ring.var(1), ring.var(2));
    let gens = vec![
        x.mul(&y).unwrap(),
        x.mul(&z).unwrap(),
        y.mul(&z).unwrap(),
    ];
    let one = field.one();
    let zero = field.zero();
    let points = vec![
        [one.clone(), zero.clone(), zero.clone()],
        [zero.clone(), one.clone(), zero.clone()],
        [zero.clone(), zero.clone(), one.clone()],
    ];
    PointConfiguration {
        name: "star3".into(),
        field,
        ring: ring.clone(),
        points,
        ideal: Ideal::new(ring, gens),
        lines: Some(vec![x, y, z]),
        full_singular_locus: true,
    }
}

/// Extends the field so it contains a root of `t^2 + t + 2` when needed.
fn field_with_klein_root(field: Field) -> Result<Field> {
    if field.generator().is_ok() {
        return Ok(field);
    }
    match field {
        Field::Rationals => Ok(Field::RationalExt),
        Field::Prime(p) => Field::prime_ext(p),
        _ => Err(Error::NoKleinRoot),
    }
}

/// The Klein configuration: 49 points (21 quadruple, 28 triple) forming the
/// singular locus of 21 lines, with the degree-8 generators and the explicit
/// syzygy columns. Requires characteristic not 2 or 7 for the generator
/// formulas.
pub fn klein(field: Field) -> Result<(PointConfiguration, KleinStructure)> {
    let p = field.characteristic();
    if p == 2 || p == 7 {
        return Err(Error::UnsupportedCharacteristic(
            p,
            "the Klein generator formulas degenerate".into(),
        ));
    }
    let field = field_with_klein_root(field)?;
    let ring = Ring::xyz(field);
    let c = field.generator()?;
    let neg_one = field.neg(&field.one());
    let cbar = field.sub(&neg_one, &c);

    // C3 as displayed; C1 = C3 with x <-> z, C2 = C3 with y <-> z
    let c3 = parse_poly(
        &ring,
        "4*x^4 + 4*y^4 + (3*c+9)*x^2*y^2 + (5*c-1)*x^2*z^2 + (5*c-1)*y^2*z^2 + (15*c+25)*z^4",
    )?;
    let ones = [1i8, 1, 1];
    let c1 = c3.apply_symmetry(&[2, 1, 0], &ones)?;
    let c2 = c3.apply_symmetry(&[0, 2, 1], &ones)?;

    let (x, y, z) = (ring.var(0), ring.var(1), ring.var(2));
    let x2y2 = x.pow(2).sub(&y.pow(2))?;
    let y2z2 = y.pow(2).sub(&z.pow(2))?;
    let z2x2 = z.pow(2).sub(&x.pow(2))?;

    let f = x.mul(&y)?.mul(&x2y2)?.mul(&c3)?;
    let g = y.mul(&z)?.mul(&y2z2)?.mul(&c1)?;
    let h = z.mul(&x)?.mul(&z2x2)?.mul(&c2)?;

    // the D quadrics: C1 - C2 = (x^2 - y^2) D3 and cyclic variants
    let d3 = parse_poly(&ring, "(15*c+21)*x^2 + (15*c+21)*y^2 + (2*c-10)*z^2")?;
    let d1 = d3.apply_symmetry(&[2, 1, 0], &ones)?;
    let d2 = d3.apply_symmetry(&[0, 2, 1], &ones)?;
    let checks = [
        c1.sub(&c2)?.sub(&x2y2.mul(&d3)?)?,
        c2.sub(&c3)?.sub(&y2z2.mul(&d1)?)?,
        c3.sub(&c1)?.sub(&z2x2.mul(&d2)?)?,
    ];
    if checks.iter().any(|r| !r.is_zero()) {
        return Err(Error::Invalid("Klein divisibility identities failed".into()));
    }

    let p_col = [z.mul(&d3)?, x.mul(&d1)?, y.mul(&d2)?];
    let q_col = [
        z.mul(&c2)?,
        x.mul(&c2)?,
        y.mul(&y2z2.mul(&d2)?.add(&c3)?)?,
    ];
    for col in [&p_col, &q_col] {
        let mut acc = ring.zero();
        for (a, b) in col.iter().zip([&f, &g, &h]) {
            acc = acc.add(&a.mul(b)?)?;
        }
        if !acc.is_zero() {
            return Err(Error::Invalid("Klein syzygy identity failed".into()));
        }
    }

    // points: permutations of the templates, with cbar in the point rows
    let one = field.one();
    let zero = field.zero();
    let m_one = field.neg(&one);
    let m_cbar = field.neg(&cbar);
    let cbar2 = field.mul(&cbar, &cbar);
    let quad_templates: Vec<[FieldElement; 3]> = vec![
        [one.clone(), zero.clone(), zero.clone()],
        [one.clone(), one.clone(), zero.clone()],
        [one.clone(), m_one.clone(), zero.clone()],
        [one.clone(), one.clone(), cbar.clone()],
        [one.clone(), one.clone(), m_cbar.clone()],
        [one.clone(), m_one.clone(), cbar.clone()],
        [one.clone(), m_one.clone(), m_cbar.clone()],
    ];
    let triple_templates: Vec<[FieldElement; 3]> = vec![
        [c.clone(), one.clone(), zero.clone()],
        [c.clone(), m_one.clone(), zero.clone()],
        [one.clone(), one.clone(), one.clone()],
        [one.clone(), one.clone(), m_one.clone()],
        [one.clone(), m_one.clone(), one.clone()],
        [one.clone(), m_one.clone(), m_one.clone()],
        [cbar2.clone(), one.clone(), one.clone()],
        [cbar2.clone(), one.clone(), m_one.clone()],
        [cbar2.clone(), m_one.clone(), one.clone()],
        [cbar2.clone(), m_one.clone(), m_one.clone()],
    ];
    let expand = |templates: &[[FieldElement; 3]]| -> Vec<[FieldElement; 3]> {
        let mut raw = Vec::new();
        for t in templates {
            raw.extend(all_permutations(t));
        }
        dedup_projective(field, raw)
    };
    let quad_points = expand(&quad_templates);
    let triple_points = expand(&triple_templates);
    if quad_points.len() != 21 || triple_points.len() != 28 {
        return Err(Error::Invalid(format!(
            "Klein orbit counts wrong: {} quadruple, {} triple",
            quad_points.len(),
            triple_points.len()
        )));
    }
    let mut points = quad_points;
    points.extend(triple_points);
    {
        let mut seen: HashSet<[FieldElement; 3]> = HashSet::new();
        for pt in &points {
            if !seen.insert(pt.clone()) {
                return Err(Error::Invalid("Klein point classes overlap".into()));
            }
        }
    }
    for pt in &points {
        for gen in [&f, &g, &h] {
            if !field.is_zero(&gen.evaluate(pt)?) {
                return Err(Error::Invalid(
                    "Klein generator does not vanish at a configuration point".into(),
                ));
            }
        }
    }

    // lines: Hermitian duals of the 21 quadruple points, with c (not cbar)
    let m_c = field.neg(&c);
    let line_templates: Vec<[FieldElement; 3]> = vec![
        [one.clone(), zero.clone(), zero.clone()],
        [one.clone(), one.clone(), zero.clone()],
        [one.clone(), m_one.clone(), zero.clone()],
        [one.clone(), one.clone(), c.clone()],
        [one.clone(), one.clone(), m_c.clone()],
        [one.clone(), m_one.clone(), c.clone()],
        [one.clone(), m_one.clone(), m_c.clone()],
    ];
    let line_coeffs = expand(&line_templates);
    if line_coeffs.len() != 21 {
        return Err(Error::Invalid(format!(
            "expected 21 Klein lines, generated {}",
            line_coeffs.len()
        )));
    }
    let lines: Vec<Polynomial> = line_coeffs
        .iter()
        .map(|co| {
            let mut acc = ring.zero();
            for (i, coeff) in co.iter().enumerate() {
                acc = acc.add(&ring.var(i).scale(coeff)).unwrap();
            }
            acc
        })
        .collect();

    let cfg = PointConfiguration {
        name: "klein".into(),
        field,
        ring: ring.clone(),
        points,
        ideal: Ideal::new(ring, vec![f.clone(), g.clone(), h.clone()]),
        lines: Some(lines),
        full_singular_locus: true,
    };
    let ks = KleinStructure {
        c,
        cbar,
        c_forms: [c1, c2, c3],
        d_forms: [d1, d2, d3],
        p_col,
        q_col,
        gens: [f, g, h],
    };
    Ok((cfg, ks))
}

impl KleinStructure {
    /// The verified Hilbert-Burch presentation from the explicit columns.
    pub fn hilbert_burch(&self) -> Result<HilbertBurchData> {
        HilbertBurchData::from_columns(&self.gens, self.p_col.clone(), self.q_col.clone())
    }
}

/// Per-point line counts by exact evaluation, aligned with `cfg.points`.
/// When the configuration is the full singular locus of its lines, the
/// pair-count identity `sum C(count, 2) = C(#lines, 2)` is verified.
pub fn incidence(cfg: &PointConfiguration) -> Result<Vec<usize>> {
    let lines = cfg
        .lines
        .as_ref()
        .ok_or_else(|| Error::Invalid("configuration has no lines".into()))?;
    let field = cfg.field;
    let mut counts = Vec::with_capacity(cfg.points.len());
    for p in &cfg.points {
        let mut n = 0;
        for l in lines {
            if field.is_zero(&l.evaluate(p)?) {
                n += 1;
            }
        }
        counts.push(n);
    }
    if cfg.full_singular_locus {
        let pairs: usize = counts.iter().map(|&m| m * (m - 1) / 2).sum();
        let total = lines.len() * (lines.len() - 1) / 2;
        if pairs != total {
            return Err(Error::Invalid(format!(
                "pair-count identity failed: {pairs} != {total}"
            )));
        }
    }
    Ok(counts)
}

/// The product of the configuration lines, homogeneous of degree equal to
/// the line count.
pub fn product_of_lines(cfg: &PointConfiguration) -> Result<Polynomial> {
    let lines = cfg
        .lines
        .as_ref()
        .ok_or_else(|| Error::Invalid("configuration has no lines".into()))?;
    let mut acc = cfg.ring.one();
    for l in lines {
        acc = acc.mul(l)?;
    }
    Ok(acc)
}

/// For a Fermat configuration, the product of the `3n` non-coordinate lines
/// `(x^n - y^n)(y^n - z^n)(z^n - x^n)`. The configuration is the full
/// singular locus of this smaller arrangement; note that the full
/// `3n + 3`-line product coincides with the product of the three ideal
/// generators and so always lies in `I^3`.
pub fn fermat_reduced_line_product(cfg: &PointConfiguration) -> Result<Polynomial> {
    if !cfg.name.starts_with("fermat:") {
        return Err(Error::Invalid("not a fermat configuration".into()));
    }
    let lines = cfg.lines.as_ref().expect("fermat has lines");
    // coordinate lines x, y, z come first by construction
    let mut acc = cfg.ring.one();
    for l in &lines[3..] {
        acc = acc.mul(l)?;
    }
    Ok(acc)
}
