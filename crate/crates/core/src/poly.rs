//! Sparse multivariate polynomials over a [`Field`], with homogeneous-degree
//! bookkeeping, coefficient extraction, evaluation and variable symmetries.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::monomial::{graded_basis, Monomial, MonomialOrder, MAX_VARS};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
struct RingInner {
    field: Field,
    vars: Vec<String>,
}

/// A polynomial ring context: coefficient field plus named variables.
/// Cloning is cheap; equality is by field and variable names.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Ring {}

impl Ring {
    pub fn new(field: Field, vars: &[&str]) -> Ring {
        assert!(vars.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        Ring(Arc::new(RingInner {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
        }))
    }

    /// The default geometric ring `K[x, y, z]`.
    pub fn xyz(field: Field) -> Ring {
        Ring::new(field, &["x", "y", "z"])
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: FieldElement) -> Polynomial {
        if self.field().is_zero(&c) {
            self.zero()
        } else {
            Polynomial {
                ring: self.clone(),
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Polynomial {
        self.constant(self.field().from_i64(n))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars());
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::var(i), self.field().one())],
        }
    }

    pub fn var_named(&self, name: &str) -> Result<Polynomial> {
        self.var_index(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))
    }

    pub fn monomial(&self, m: Monomial, c: FieldElement) -> Polynomial {
        if self.field().is_zero(&c) {
            self.zero()
        } else {
            Polynomial {
                ring: self.clone(),
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(&self, terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        let mut terms = terms;
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let field = self.field();
        let mut merged: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = field.add(lc, &c);
                }
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !field.is_zero(c));
        Polynomial {
            ring: self.clone(),
            terms: merged,
        }
    }

    /// All monomials of total degree `d`, descending under `order`.
    pub fn graded_basis(&self, d: u32, order: MonomialOrder) -> Vec<Monomial> {
        graded_basis(d, self.nvars(), order)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.vars().join(","))
    }
}

/// A sparse polynomial. Terms are stored sorted by the structural monomial
/// order with no zero coefficients, so equality is structural on canonical
/// forms. Values are immutable; all operations return new polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(self.ring.from_terms(terms))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (*m, field.mul(k, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.field();
        let mut acc: Vec<(Monomial, FieldElement)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                acc.push((m1.mul(m2), field.mul(c1, c2)));
            }
        }
        Ok(self.ring.from_terms(acc))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        match self.terms.binary_search_by(|(t, _)| t.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field().zero(),
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// Degree check for homogeneous polynomials: `Some(d)` when every term
    /// has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.degree()
        }
    }

    /// Leading (monomial, coefficient) under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(Monomial, FieldElement)> {
        let nv = self.ring.nvars();
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0, nv))
            .map(|(m, c)| (*m, c.clone()))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, FieldElement)> {
        let nv = self.ring.nvars();
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0, nv));
        t
    }

    /// Exact evaluation at a point (one coordinate per ring variable).
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.ring.nvars() {
            return Err(Error::Invalid(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps[..self.ring.nvars()].iter().enumerate() {
                if e > 0 {
                    term = field.mul(&term, &field.pow(&point[i], e as u64));
                }
            }
            acc = field.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Applies a variable permutation with per-variable signs: variable `i`
    /// is replaced by `signs[i] * perm(var i)` where `perm[i]` is the index
    /// variable `i` maps to.
    pub fn apply_symmetry(&self, perm: &[usize], signs: &[i8]) -> Result<Polynomial> {
        let nv = self.ring.nvars();
        if perm.len() != nv || signs.len() != nv {
            return Err(Error::Invalid("permutation arity mismatch".into()));
        }
        let mut seen = vec![false; nv];
        for &t in perm {
            if t >= nv || seen[t] {
                return Err(Error::Invalid("not a bijection on variables".into()));
            }
            seen[t] = true;
        }
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut c = c.clone();
                for i in 0..nv {
                    if signs[i] < 0 && m.exps[i] % 2 == 1 {
                        c = field.neg(&c);
                    }
                }
                (m.permute(perm), c)
            })
            .collect();
        Ok(self.ring.from_terms(terms))
    }

    /// Substitutes variables into another ring: variable `i` maps to
    /// `target` variable `map[i]`.
    pub fn map_variables(&self, target: &Ring, map: &[usize]) -> Result<Polynomial> {
        if self.field() != target.field() {
            return Err(Error::MixedFields);
        }
        if map.len() != self.ring.nvars() || map.iter().any(|&t| t >= target.nvars()) {
            return Err(Error::Invalid("variable map arity mismatch".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut t = Monomial::one();
                for (i, &dst) in map.iter().enumerate() {
                    t.exps[dst] += m.exps[i];
                }
                (t, c.clone())
            })
            .collect();
        Ok(target.from_terms(terms))
    }

    /// Divides by a monomial; caller must ensure it divides every term.
    pub fn div_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (m.quotient_into(t), c.clone()))
                .collect(),
        }
    }

    /// Largest power of variable `i` dividing every term (0 for the zero
    /// polynomial).
    pub fn variable_content(&self, i: usize) -> u16 {
        self.terms
            .iter()
            .map(|(m, _)| m.exps[i])
            .min()
            .unwrap_or(0)
    }

    /// Coefficient vector with respect to an explicit monomial basis.
    pub fn coeff_vector(&self, basis: &[Monomial]) -> Vec<FieldElement> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.field();
        let nv = self.ring.nvars();
        for (i, (m, c)) in self.sorted_terms(MonomialOrder::Grevlex).iter().enumerate() {
            let cs = field.format_element(c);
            let (neg, body) = match cs.strip_prefix('-') {
                // only treat as a sign when the whole coefficient is negated
                Some(rest) if !cs.contains('+') && !rest.contains('-') => {
                    (true, rest.to_string())
                }
                _ => (false, cs),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let needs_parens = body.contains('+') || body.contains('-');
            let is_unit = body == "1";
            let mut wrote_coeff = false;
            if m.is_one() || !is_unit {
                if needs_parens && !m.is_one() {
                    write!(f, "({body})")?;
                } else {
                    write!(f, "{body}")?;
                }
                wrote_coeff = true;
            }
            for v in 0..nv {
                let e = m.exps[v];
                if e == 0 {
                    continue;
                }
                if wrote_coeff {
                    write!(f, "*")?;
                }
                wrote_coeff = true;
                write!(f, "{}", self.ring.vars()[v])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
