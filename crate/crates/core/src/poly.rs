//! Sparse multivariate polynomials.
//!
//! A [`Polynomial`] stores its terms in decreasing grevlex order with no
//! zero coefficients. Computations under other orders go through
//! [`OrdTerms`], which re-sorts on entry.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::monomial::{Monomial, MonomialOrder};

pub type Term<E> = (Monomial, E);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    nvars: usize,
    terms: Vec<Term<E>>,
}

impl<E: Clone + PartialEq> Polynomial<E> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms<F: Field<Elem = E>>(field: &F, nvars: usize, terms: Vec<Term<E>>) -> Self {
        let mut acc: HashMap<Monomial, E> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term<E>> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    /// Terms already sorted in decreasing grevlex order with nonzero
    /// coefficients.
    pub(crate) fn from_sorted(nvars: usize, terms: Vec<Term<E>>) -> Self {
        Polynomial { nvars, terms }
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, nvars: usize, c: E) -> Self {
        if field.is_zero(&c) {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(Monomial::one(nvars), c)],
        }
    }

    pub fn var<F: Field<Elem = E>>(field: &F, nvars: usize, i: usize) -> Self {
        Polynomial {
            nvars,
            terms: vec![(Monomial::var(nvars, i), field.one())],
        }
    }

    pub fn monomial<F: Field<Elem = E>>(field: &F, m: Monomial) -> Self {
        let nvars = m.nvars();
        Polynomial {
            nvars,
            terms: vec![(m, field.one())],
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn terms(&self) -> &[Term<E>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<E>> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&E> {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c)
    }

    /// Leading term under `ord`.
    pub fn leading(&self, ord: MonomialOrder) -> Option<&Term<E>> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Option<&Monomial> {
        self.leading(ord).map(|t| &t.0)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(format!(
                "{} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let ord = MonomialOrder::Grevlex;
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match ord.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&a.1, &b.1);
                    if !field.is_zero(&c) {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add(field, &other.neg(field))
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut acc: HashMap<Monomial, E> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = field.mul(c1, c2);
                match acc.get_mut(&m) {
                    Some(v) => *v = field.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<Term<E>> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.0, &a.0));
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow<F: Field<Elem = E>>(&self, field: &F, e: u32) -> Self {
        let mut acc = Self::constant(field, self.nvars, field.one());
        for _ in 0..e {
            acc = acc.mul(field, self);
        }
        acc
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, point: &[E]) -> E {
        assert_eq!(point.len(), self.nvars);
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = field.mul(&t, &field.pow(&point[i], e as u64));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Substitutes `x_i -> images[i]`. All images must share one ring.
    pub fn substitute<F: Field<Elem = E>>(&self, field: &F, images: &[Polynomial<E>]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut powers: HashMap<(usize, u16), Polynomial<E>> = HashMap::new();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(field, target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(field, e as u32))
                    .clone();
                t = t.mul(field, &p);
            }
            out = out.add(field, &t);
        }
        out
    }

    /// Substitutes `x_i -> sum_j m[i][j] x_j`. Fails on a singular matrix.
    pub fn linear_substitution<F: Field<Elem = E>>(&self, field: &F, m: &Matrix<E>) -> Result<Self> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(Error::RingMismatch(format!(
                "{}x{} matrix for {} variables",
                m.rows(),
                m.cols(),
                self.nvars
            )));
        }
        if m.rank(field) != self.nvars {
            return Err(Error::InvalidCoordinateChange);
        }
        Ok(self.linear_substitution_unchecked(field, m))
    }

    pub(crate) fn linear_substitution_unchecked<F: Field<Elem = E>>(&self, field: &F, m: &Matrix<E>) -> Self {
        let images: Vec<Self> = (0..self.nvars)
            .map(|i| {
                let terms = (0..m.cols())
                    .filter(|&j| !field.is_zero(m.get(i, j)))
                    .map(|j| (Monomial::var(m.cols(), j), m.get(i, j).clone()))
                    .collect();
                Self::from_terms(field, m.cols(), terms)
            })
            .collect();
        self.substitute(field, &images)
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative<F: Field<Elem = E>>(&self, field: &F, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let mut d = m.clone();
                let e = m.exp(i);
                d.set_exp(i, e - 1);
                (d, field.mul(c, &field.from_i64(e as i64)))
            })
            .collect();
        Self::from_terms(field, self.nvars, terms)
    }

    /// Scales so the grevlex leading coefficient is one.
    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if field.is_one(c) => self.clone(),
            Some((_, c)) => self.scale(field, &field.inv(c)),
        }
    }

    /// Embeds into a ring with `k` new variables in front.
    pub fn pad_front(&self, k: usize) -> Self {
        Polynomial {
            nvars: self.nvars + k,
            terms: self.terms.iter().map(|(m, c)| (m.pad_front(k), c.clone())).collect(),
        }
    }

    /// Embeds into a ring with `k` new variables at the end.
    pub fn pad_back(&self, k: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.resize(self.nvars + k, 0);
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Polynomial {
            nvars: self.nvars + k,
            terms,
        }
    }

    /// Drops the first `k` variables, which must not occur.
    pub fn drop_front<F: Field<Elem = E>>(&self, field: &F, k: usize) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.drop_front(k), c.clone())).collect();
        Self::from_terms(field, self.nvars - k, terms)
    }

    /// Whether any of the first `k` variables occurs.
    pub fn involves_front(&self, k: usize) -> bool {
        self.terms
            .iter()
            .any(|(m, _)| m.exponents()[..k].iter().any(|&e| e > 0))
    }

    pub fn to_string_with<F: Field<Elem = E>>(&self, field: &F) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let cs = field.format(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&mag);
            } else if mag == "1" {
                let _ = write!(s, "{m}");
            } else {
                let _ = write!(s, "{mag}*{m}");
            }
        }
        s
    }
}

/// Parses the polynomial text syntax: `3*x0^2*x4 - x1*x2`, `1/2*x0`.
/// Anything after `#` is ignored.
pub fn parse_polynomial<F: Field>(field: &F, nvars: usize, text: &str) -> Result<Polynomial<F::Elem>> {
    let text = text.split('#').next().unwrap_or("");
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pos = 0;
    let mut terms = Vec::new();
    let err = |msg: &str, pos: usize| Error::Parse(format!("{msg} at offset {pos} in `{}`", text.trim()));

    fn read_uint(chars: &[char], pos: &mut usize) -> Option<BigInt> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| chars[start..*pos].iter().collect::<String>().parse().unwrap())
    }

    while pos < chars.len() {
        let mut negative = false;
        while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
            if chars[pos] == '-' {
                negative = !negative;
            }
            pos += 1;
        }
        if pos == chars.len() {
            return Err(err("dangling sign", pos));
        }
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        let mut exps = vec![0u16; nvars];
        let mut factors = 0;
        loop {
            if pos >= chars.len() {
                return Err(err("expected factor", pos));
            }
            if chars[pos].is_ascii_digit() {
                let n = read_uint(&chars, &mut pos).unwrap();
                let mut d = BigInt::from(1);
                if pos < chars.len() && chars[pos] == '/' {
                    pos += 1;
                    d = read_uint(&chars, &mut pos).ok_or_else(|| err("expected denominator", pos))?;
                    if d == BigInt::from(0) {
                        return Err(err("zero denominator", pos));
                    }
                }
                num *= n;
                den *= d;
            } else if chars[pos] == 'x' {
                pos += 1;
                let idx = read_uint(&chars, &mut pos).ok_or_else(|| err("expected variable index", pos))?;
                let idx: usize = idx.try_into().map_err(|_| err("variable index too large", pos))?;
                if idx >= nvars {
                    return Err(Error::RingMismatch(format!(
                        "variable x{idx} in a ring with {nvars} variables"
                    )));
                }
                let mut e = 1u32;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let v = read_uint(&chars, &mut pos).ok_or_else(|| err("expected exponent", pos))?;
                    e = v.try_into().map_err(|_| err("exponent too large", pos))?;
                }
                let total = exps[idx] as u32 + e;
                if total > u16::MAX as u32 {
                    return Err(err("exponent too large", pos));
                }
                exps[idx] = total as u16;
            } else {
                return Err(err(&format!("unexpected `{}`", chars[pos]), pos));
            }
            factors += 1;
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        debug_assert!(factors > 0);
        if negative {
            num = -num;
        }
        let c = field.from_ratio(&num, &den)?;
        terms.push((Monomial::from_exponents(&exps), c));
        if pos < chars.len() && chars[pos] != '+' && chars[pos] != '-' {
            return Err(err(&format!("unexpected `{}`", chars[pos]), pos));
        }
    }
    Ok(Polynomial::from_terms(field, nvars, terms))
}

/// Terms sorted in decreasing order under an arbitrary monomial order.
#[derive(Clone, Debug)]
pub(crate) struct OrdTerms<E> {
    pub terms: Vec<Term<E>>,
}

impl<E: Clone + PartialEq> OrdTerms<E> {
    pub fn from_poly(p: &Polynomial<E>, ord: MonomialOrder) -> Self {
        let mut terms = p.terms.clone();
        if ord != MonomialOrder::Grevlex {
            terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        }
        OrdTerms { terms }
    }

    pub fn to_poly(&self, nvars: usize, ord: MonomialOrder) -> Polynomial<E> {
        let mut terms = self.terms.clone();
        if ord != MonomialOrder::Grevlex {
            terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.0, &a.0));
        }
        Polynomial { nvars, terms }
    }

    pub fn lead(&self) -> &Term<E> {
        &self.terms[0]
    }
}

/// `f - c * m * g`, both sorted decreasingly under `ord`.
pub(crate) fn sub_scaled<F: Field>(
    field: &F,
    ord: MonomialOrder,
    f: &[Term<F::Elem>],
    c: &F::Elem,
    m: &Monomial,
    g: &[Term<F::Elem>],
) -> Vec<Term<F::Elem>> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut gm: Option<Term<F::Elem>> = g.first().map(|(t, a)| (t.mul(m), field.mul(a, c)));
    while i < f.len() {
        let Some((gt, gc)) = &gm else { break };
        match ord.cmp(&f[i].0, gt) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gt.clone(), field.neg(gc)));
                j += 1;
                gm = g.get(j).map(|(t, a)| (t.mul(m), field.mul(a, c)));
            }
            Ordering::Equal => {
                let v = field.sub(&f[i].1, gc);
                if !field.is_zero(&v) {
                    out.push((gt.clone(), v));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|(t, a)| (t.mul(m), field.mul(a, c)));
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    while let Some((gt, gc)) = gm {
        out.push((gt, field.neg(&gc)));
        j += 1;
        gm = g.get(j).map(|(t, a)| (t.mul(m), field.mul(a, c)));
    }
    out
}

/// A monic reducer with its leading monomial cached.
pub(crate) struct Reducer<'a, E> {
    pub lead: &'a Monomial,
    pub mask: u64,
    pub terms: &'a [Term<E>],
}

pub(crate) fn find_reducer<'a, 'b, E>(reducers: &'b [Reducer<'a, E>], m: &Monomial) -> Option<&'b Reducer<'a, E>> {
    let mask = m.support_mask();
    reducers
        .iter()
        .find(|r| r.mask & !mask == 0 && r.lead.divides(m))
}

/// Full normal form of `f` modulo monic, order-sorted reducers.
pub(crate) fn normal_form_terms<F: Field>(
    field: &F,
    ord: MonomialOrder,
    mut f: Vec<Term<F::Elem>>,
    reducers: &[Reducer<'_, F::Elem>],
) -> Vec<Term<F::Elem>> {
    let mut result: Vec<Term<F::Elem>> = Vec::new();
    // `f` holds the not yet inspected tail; position `start` marks its head
    let mut start = 0;
    while start < f.len() {
        let (m, c) = &f[start];
        match find_reducer(reducers, m) {
            Some(r) => {
                let q = m.div(r.lead);
                let c = c.clone();
                let tail = sub_scaled(field, ord, &f[start..], &c, &q, r.terms);
                f = tail;
                start = 0;
            }
            None => {
                result.push(f[start].clone());
                start += 1;
            }
        }
    }
    result
}

/// Normal form of `f` modulo `gs` under `ord`: no term of the result is
/// divisible by a leading monomial of `gs`, and `f - result` lies in the
/// ideal generated by `gs`.
pub fn reduce<F: Field>(
    field: &F,
    f: &Polynomial<F::Elem>,
    gs: &[Polynomial<F::Elem>],
    ord: MonomialOrder,
) -> Result<Polynomial<F::Elem>> {
    for g in gs {
        f.check_ring(g)?;
        if g.is_zero() {
            return Err(Error::Domain("zero divisor polynomial in reduce".into()));
        }
    }
    let monic: Vec<OrdTerms<F::Elem>> = gs
        .iter()
        .map(|g| {
            let t = OrdTerms::from_poly(g, ord);
            let inv = field.inv(&t.lead().1);
            OrdTerms {
                terms: t.terms.iter().map(|(m, c)| (m.clone(), field.mul(c, &inv))).collect(),
            }
        })
        .collect();
    let reducers: Vec<Reducer<'_, F::Elem>> = monic
        .iter()
        .map(|t| Reducer {
            lead: &t.terms[0].0,
            mask: t.terms[0].0.support_mask(),
            terms: &t.terms,
        })
        .collect();
    let nf = normal_form_terms(field, ord, OrdTerms::from_poly(f, ord).terms, &reducers);
    Ok(OrdTerms { terms: nf }.to_poly(f.nvars(), ord))
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
pub fn divide_exact<F: Field>(
    field: &F,
    a: &Polynomial<F::Elem>,
    b: &Polynomial<F::Elem>,
) -> Option<Polynomial<F::Elem>> {
    assert!(!b.is_zero(), "division by zero polynomial");
    let ord = MonomialOrder::Grevlex;
    let (bl, bc) = b.terms()[0].clone();
    let binv = field.inv(&bc);
    let mut rem = a.terms().to_vec();
    let mut quot = Vec::new();
    while let Some((m, c)) = rem.first().cloned() {
        if !bl.divides(&m) {
            return None;
        }
        let q = m.div(&bl);
        let qc = field.mul(&c, &binv);
        rem = sub_scaled(field, ord, &rem, &qc, &q, b.terms());
        quot.push((q, qc));
    }
    Some(Polynomial::from_sorted(a.nvars(), quot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn exact_division() {
        let q = Rationals;
        let a = p("x0^2 - x1^2", 2);
        let b = p("x0 + x1", 2);
        assert_eq!(divide_exact(&q, &a, &b).unwrap(), p("x0 - x1", 2));
        assert!(divide_exact(&q, &p("x0^2 + x1^2", 2), &b).is_none());
    }

    fn p(s: &str, n: usize) -> Polynomial<num_rational::BigRational> {
        parse_polynomial(&Rationals, n, s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let f = p("3*x0^2*x3 - x1*x2 + 1/2*x3^3", 4);
        assert_eq!(f.len(), 3);
        assert_eq!(f.to_string_with(&Rationals), "3*x0^2*x3 + 1/2*x3^3 - x1*x2");
        let g = p("x0*x0 - x0^2 # cancels", 2);
        assert!(g.is_zero());
        assert!(parse_polynomial(&Rationals, 2, "x5").is_err());
        assert!(parse_polynomial(&Rationals, 2, "x0 +").is_err());
        assert!(parse_polynomial(&Rationals, 2, "x0 ** x1").is_err());
    }

    #[test]
    fn parse_mod_p() {
        let f = PrimeField::new(7).unwrap();
        let g = parse_polynomial(&f, 2, "1/2*x0 - 8*x1").unwrap();
        assert_eq!(g.terms()[0].1, 4);
        assert_eq!(g.terms()[1].1, 6);
    }

    #[test]
    fn reduce_examples() {
        let q = Rationals;
        let x0sq = p("x0^2", 4);
        let r = reduce(&q, &x0sq, &[p("x0", 4)], MonomialOrder::Grevlex).unwrap();
        assert!(r.is_zero());

        let cubic = [p("x0*x2 - x1^2", 4), p("x0*x3 - x1*x2", 4)];
        let f = p("x1*x3 - x2^2", 4);
        assert_eq!(reduce(&q, &f, &cubic, MonomialOrder::Grevlex).unwrap(), f);

        assert!(reduce(&q, &f, &[Polynomial::zero(4)], MonomialOrder::Grevlex).is_err());
        assert!(matches!(
            reduce(&q, &f, &[p("x0", 3)], MonomialOrder::Grevlex),
            Err(Error::RingMismatch(_))
        ));
    }

    #[test]
    fn linear_substitution_examples() {
        let q = Rationals;
        let id = Matrix::identity(&q, 2);
        let x0 = p("x0", 2);
        assert_eq!(x0.linear_substitution(&q, &id).unwrap(), x0);

        let swap = Matrix::from_rows(vec![vec![q.zero(), q.one()], vec![q.one(), q.zero()]]);
        let x0x1 = p("x0*x1", 2);
        assert_eq!(x0x1.linear_substitution(&q, &swap).unwrap(), x0x1);

        let shear = Matrix::from_rows(vec![vec![q.one(), q.one()], vec![q.zero(), q.one()]]);
        let sq = p("x0^2", 2).linear_substitution(&q, &shear).unwrap();
        assert_eq!(sq, p("x0^2 + 2*x0*x1 + x1^2", 2));

        let singular = Matrix::from_rows(vec![vec![q.one(), q.one()], vec![q.one(), q.one()]]);
        assert_eq!(x0.linear_substitution(&q, &singular), Err(Error::InvalidCoordinateChange));
    }

    #[test]
    fn derivative_and_eval() {
        let q = Rationals;
        let f = p("x0^3 + 2*x0*x1", 2);
        assert_eq!(f.derivative(&q, 0), p("3*x0^2 + 2*x1", 2));
        let v = f.eval(&q, &[q.from_i64(2), q.from_i64(3)]);
        assert_eq!(v, q.from_i64(20));
    }
}
