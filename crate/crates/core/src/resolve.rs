//! The explicit resolution matrices `X` and `Y` attached to a Hilbert-Burch
//! presentation, and actual minimal free resolutions of `I^2` and `I^3`
//! computed by iterated syzygies, with shape comparison against the
//! predicted twists.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::Polynomial;
use crate::syzygy::{
    hilbert_burch, minimalize, minimalize_ideal_gens, module_member, module_syzygies, syzygies,
    HilbertBurchData, ModuleVector,
};
use std::sync::Arc;

/// Exponent triples `(a, b, c)` of the degree-`k` monomials in `T1, T2, T3`,
/// in descending lexicographic order: `T1^k`, `T1^{k-1}T2`, ...
pub fn t_monomials(k: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=k).rev() {
        for b in (0..=(k - a)).rev() {
            out.push([a, b, k - a - b]);
        }
    }
    out
}

/// The ordered generators of `I^k`: the k-fold products of the minors
/// `(f, g, h)` indexed by the T-monomials of degree `k`.
pub fn power_generators(hb: &HilbertBurchData, k: u32) -> Vec<Polynomial> {
    t_monomials(k)
        .iter()
        .map(|&[a, b, c]| {
            hb.minors[0]
                .pow(a)
                .mul(&hb.minors[1].pow(b))
                .unwrap()
                .mul(&hb.minors[2].pow(c))
                .unwrap()
        })
        .collect()
}

/// The column `X = [P1 P2 P3 -Q1 -Q2 -Q3]^T` ending the resolution of `I^2`.
pub fn build_x(hb: &HilbertBurchData) -> [Polynomial; 6] {
    [
        hb.p_col[0].clone(),
        hb.p_col[1].clone(),
        hb.p_col[2].clone(),
        hb.q_col[0].neg(),
        hb.q_col[1].neg(),
        hb.q_col[2].neg(),
    ]
}

/// The 12x3 matrix `Y` ending the resolution of `I^3`, as rows. Row `r < 6`
/// is indexed by the degree-2 T-monomial `B2[r]` and carries `P_i` in column
/// `j` exactly when `T_i T_j = B2[r]`; rows `6..12` carry `-Q_i` in the same
/// pattern.
pub fn build_y(hb: &HilbertBurchData) -> Vec<[Polynomial; 3]> {
    let ring = &hb.ring;
    let b2 = t_monomials(2);
    let mut rows: Vec<[Polynomial; 3]> = Vec::with_capacity(12);
    for (col_entries, sign) in [(&hb.p_col, 1i8), (&hb.q_col, -1i8)] {
        for mu in &b2 {
            let mut row = [ring.zero(), ring.zero(), ring.zero()];
            for (j, slot) in row.iter_mut().enumerate() {
                // entry is nonzero iff T_j divides mu; then i indexes mu / T_j
                let mut m = *mu;
                if m[j] == 0 {
                    continue;
                }
                m[j] -= 1;
                let i = match m {
                    [1, 0, 0] => 0,
                    [0, 1, 0] => 1,
                    [0, 0, 1] => 2,
                    _ => continue,
                };
                *slot = if sign > 0 {
                    col_entries[i].clone()
                } else {
                    col_entries[i].neg()
                };
            }
            rows.push(row);
        }
    }
    rows
}

/// The middle map of the strand resolution of `I^k`: rows indexed by the
/// degree-k T-monomials, columns by two copies of the degree-(k-1) ones.
/// The first block multiplies by `G = sum Q_i T_i` and the second by
/// `F = sum P_i T_i`, pairing with [`build_y`] so the composition vanishes:
/// the last map sends the `T_j` basis vector to `(F T_j, -G T_j)`.
pub fn middle_map(hb: &HilbertBurchData, k: u32) -> Vec<Vec<Polynomial>> {
    let ring = &hb.ring;
    let bk = t_monomials(k);
    let bk1 = t_monomials(k - 1);
    let mut rows = vec![Vec::new(); bk.len()];
    for (r, row) in rows.iter_mut().enumerate() {
        for col_entries in [&hb.q_col, &hb.p_col] {
            for mu in &bk1 {
                let nu = bk[r];
                let mut entry = ring.zero();
                for i in 0..3 {
                    let mut lifted = *mu;
                    lifted[i] += 1;
                    if lifted == nu {
                        entry = col_entries[i].clone();
                        break;
                    }
                }
                row.push(entry);
            }
        }
    }
    rows
}

/// Ranks and twists of a length-2 graded free resolution of `I^k`, twists
/// reported as the negatives `-a` of `R(-a)`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ResolutionShape {
    pub ranks: [usize; 3],
    pub twists: [Vec<i64>; 3],
}

fn sorted<I: IntoIterator<Item = i64>>(it: I) -> Vec<i64> {
    let mut v: Vec<i64> = it.into_iter().collect();
    v.sort_unstable();
    v
}

impl ResolutionShape {
    /// The predicted shape for `I^k` from the Hilbert-Burch degrees.
    pub fn predicted(k: u32, d: u32, d0: u32, d1: u32) -> Result<ResolutionShape> {
        let (d, d0, d1) = (d as i64, d0 as i64, d1 as i64);
        match k {
            2 => Ok(ResolutionShape {
                ranks: [6, 6, 1],
                twists: [
                    vec![-2 * d; 6],
                    sorted(
                        std::iter::repeat(-2 * d - d0)
                            .take(3)
                            .chain(std::iter::repeat(-2 * d - d1).take(3)),
                    ),
                    vec![-3 * d],
                ],
            }),
            3 => Ok(ResolutionShape {
                ranks: [10, 12, 3],
                twists: [
                    vec![-3 * d; 10],
                    sorted(
                        std::iter::repeat(-3 * d - d0)
                            .take(6)
                            .chain(std::iter::repeat(-3 * d - d1).take(6)),
                    ),
                    vec![-4 * d; 3],
                ],
            }),
            _ => Err(Error::Invalid("only powers 2 and 3 are resolved".into())),
        }
    }
}

/// A computed minimal free resolution of `I^k`, `0 -> F2 -> F1 -> F0 -> I^k`.
#[derive(Debug, Clone)]
pub struct PowerResolution {
    pub shape: ResolutionShape,
    /// ordered generators of `I^k` (the images of the F0 basis)
    pub generators: Vec<Polynomial>,
    /// minimal first syzygies, vectors in F0
    pub first_map: Vec<ModuleVector>,
    /// minimal second syzygies, vectors in F1
    pub last_map: Vec<ModuleVector>,
}

/// Resolves `I^k` (k = 2 or 3) by iterated syzygy computation and
/// minimalization, asserting that consecutive maps compose to zero and that
/// the shape matches the prediction from the Hilbert-Burch degrees.
pub fn resolve_power(ideal: &Ideal, k: u32) -> Result<PowerResolution> {
    let hb = hilbert_burch(ideal)?;
    resolve_power_from_hb(&hb, k)
}

pub fn resolve_power_from_hb(hb: &HilbertBurchData, k: u32) -> Result<PowerResolution> {
    let predicted = ResolutionShape::predicted(k, hb.d, hb.d0, hb.d1)?;
    let generators = power_generators(hb, k);
    let minimal = minimalize_ideal_gens(&generators)?;
    if minimal.len() != generators.len() {
        return Err(Error::ShapeMismatch(format!(
            "expected {} minimal generators of I^{k}, found {}",
            generators.len(),
            minimal.len()
        )));
    }

    let first = minimalize(&syzygies(&generators)?)?;
    for v in &first {
        if !v.dot(&generators)?.is_zero() {
            return Err(Error::ShapeMismatch("first map does not annihilate".into()));
        }
    }
    let last = minimalize(&module_syzygies(&first)?)?;
    for v in &last {
        // composition F2 -> F1 -> F0 must vanish componentwise
        let mut acc = ModuleVector::zero(
            hb.ring.clone(),
            Arc::new(vec![(k as i64) * hb.d as i64; generators.len()]),
        );
        for (c, w) in v.comps().iter().zip(&first) {
            acc = acc.add(&w.scale_poly(c)?)?;
        }
        if !acc.is_zero() {
            return Err(Error::ShapeMismatch("maps do not compose to zero".into()));
        }
    }
    let third = minimalize(&module_syzygies(&last)?)?;
    if !third.is_empty() {
        return Err(Error::ShapeMismatch(
            "resolution does not stop after two steps".into(),
        ));
    }

    let step0 = vec![-((k as i64) * hb.d as i64); generators.len()];
    let step1 = sorted(first.iter().map(|v| -v.module_degree().unwrap()));
    let step2 = sorted(last.iter().map(|v| -v.module_degree().unwrap()));
    let shape = ResolutionShape {
        ranks: [generators.len(), first.len(), last.len()],
        twists: [step0, step1, step2],
    };
    if shape != predicted {
        return Err(Error::ShapeMismatch(format!(
            "computed {shape:?}, predicted {predicted:?}"
        )));
    }
    // alternating rank sum for R/I^k: 1 - r0 + r1 - r2 = 0
    if 1 + shape.ranks[1] != shape.ranks[0] + shape.ranks[2] {
        return Err(Error::ShapeMismatch("rank alternation failed".into()));
    }
    Ok(PowerResolution {
        shape,
        generators,
        first_map: first,
        last_map: last,
    })
}

/// Multiplicity of `R/I` read off the resolution twists
/// `0 -> R(-d-d0) ⊕ R(-d-d1) -> R(-d)^3 -> R`.
pub fn multiplicity_from_twists(d: u32, d0: u32, d1: u32) -> u32 {
    let (d, d0, d1) = (d as i64, d0 as i64, d1 as i64);
    let e = ((d + d0).pow(2) + (d + d1).pow(2) - 3 * d * d) / 2;
    e as u32
}

/// True iff the constructed `Y` is a valid last map for the minimal
/// resolution of `I^3`, so its transpose image computes the same quotient as
/// the computed one. Concretely: `W * Y = 0` for the strand middle map `W`,
/// the computed minimal kernel of `W` has exactly three generators of module
/// degree `4d`, the columns of `Y` generate that kernel (mutual membership
/// in the same coordinates), and the change of basis between the two
/// generator triples is an invertible scalar matrix. The transpose images
/// then agree up to that invertible identification of the rank-3 module.
pub fn check_last_map_equivalence(ideal: &Ideal) -> Result<bool> {
    let hb = hilbert_burch(ideal)?;
    check_last_map_equivalence_from_hb(&hb)
}

pub fn check_last_map_equivalence_from_hb(hb: &HilbertBurchData) -> Result<bool> {
    let ring = &hb.ring;
    let d = hb.d as i64;
    let w = middle_map(hb, 3);
    let y = build_y(hb);
    // W * Y = 0
    for j in 0..3 {
        for wrow in &w {
            let mut acc = ring.zero();
            for (s, yrow) in y.iter().enumerate() {
                acc = acc.add(&wrow[s].mul(&yrow[j])?)?;
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
    }
    // columns of W as vectors in F0 = R(-3d)^10
    let f0_twists = Arc::new(vec![3 * d; w.len()]);
    let ncols = w[0].len();
    let w_cols: Vec<ModuleVector> = (0..ncols)
        .map(|c| {
            let comps: Vec<Polynomial> = w.iter().map(|row| row[c].clone()).collect();
            ModuleVector::new(ring.clone(), f0_twists.clone(), comps)
        })
        .collect::<Result<_>>()?;
    let kernel = minimalize(&module_syzygies(&w_cols)?)?;
    if kernel.len() != 3 || kernel.iter().any(|v| v.module_degree() != Some(4 * d)) {
        return Ok(false);
    }
    let f1_twists = kernel[0].twists().clone();
    let y_cols: Vec<ModuleVector> = (0..3)
        .map(|j| {
            let comps: Vec<Polynomial> = y.iter().map(|row| row[j].clone()).collect();
            ModuleVector::new(ring.clone(), f1_twists.clone(), comps)
        })
        .collect::<Result<_>>()?;
    // mutual span equality, with scalar certificates both ways
    let mut basis_change: Vec<Vec<Polynomial>> = Vec::new();
    for v in &kernel {
        let (member, coords) = module_member(v, &y_cols)?;
        if !member {
            return Ok(false);
        }
        basis_change.push(coords.unwrap());
    }
    for v in &y_cols {
        if !module_member(v, &kernel)?.0 {
            return Ok(false);
        }
    }
    // the change of basis must be an invertible scalar matrix
    let field = ring.field();
    let mut scalar: Vec<Vec<crate::field::FieldElement>> = Vec::new();
    for row in &basis_change {
        let mut srow = Vec::new();
        for c in row {
            if c.is_zero() {
                srow.push(field.zero());
            } else if c.degree() == Some(0) {
                srow.push(c.coeff(&crate::monomial::Monomial::one()));
            } else {
                return Ok(false);
            }
        }
        scalar.push(srow);
    }
    Ok(crate::linalg::invert(field, &scalar).is_some())
}
