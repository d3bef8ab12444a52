//! Homogeneous ideals with cached Gröbner bases, and the ideal-theoretic
//! operations built on them.

pub mod buchberger;
pub mod hilbert;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::cache;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{divide_exact, parse_polynomial, reduce, Polynomial};

pub use buchberger::{groebner_basis, GbOptions};
pub use hilbert::HilbertData;

type Basis<E> = Arc<Vec<Polynomial<E>>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct GbKey {
    order: MonomialOrder,
    bound: Option<u32>,
}

/// A homogeneous ideal. Gröbner bases and Hilbert data are computed on
/// demand and cached; concurrent readers see either nothing or a complete
/// value, and racing writers keep the first result.
pub struct Ideal<F: Field> {
    field: F,
    nvars: usize,
    gens: Vec<Polynomial<F::Elem>>,
    gb_cache: RwLock<HashMap<GbKey, Basis<F::Elem>>>,
    hilbert_cache: OnceLock<HilbertData>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let hilbert_cache = OnceLock::new();
        if let Some(h) = self.hilbert_cache.get() {
            let _ = hilbert_cache.set(h.clone());
        }
        Ideal {
            field: self.field.clone(),
            nvars: self.nvars,
            gens: self.gens.clone(),
            gb_cache: RwLock::new(self.gb_cache.read().unwrap().clone()),
            hilbert_cache,
        }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string_with(&self.field)).collect();
        f.debug_struct("Ideal")
            .field("field", &self.field.config())
            .field("nvars", &self.nvars)
            .field("gens", &gens)
            .finish()
    }
}

impl<F: Field> Ideal<F> {
    /// Builds the ideal generated by `gens`, which must be homogeneous
    /// polynomials in `nvars` variables. Zero generators are dropped.
    pub fn new(field: F, nvars: usize, gens: Vec<Polynomial<F::Elem>>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch(format!(
                    "generator in {} variables, ring has {nvars}",
                    g.nvars()
                )));
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string_with(&field)));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Self::from_parts(field, nvars, gens))
    }

    fn from_parts(field: F, nvars: usize, gens: Vec<Polynomial<F::Elem>>) -> Self {
        Ideal {
            field,
            nvars,
            gens,
            gb_cache: RwLock::new(HashMap::new()),
            hilbert_cache: OnceLock::new(),
        }
    }

    /// Parses one generator per string.
    pub fn parse(field: F, nvars: usize, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| parse_polynomial(&field, nvars, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, nvars, polys)
    }

    pub fn zero(field: F, nvars: usize) -> Self {
        Self::from_parts(field, nvars, Vec::new())
    }

    pub fn unit(field: F, nvars: usize) -> Self {
        let one = Polynomial::constant(&field, nvars, field.one());
        Self::from_parts(field, nvars, vec![one])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F::Elem>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis under `ord`, sorted by increasing leading
    /// monomial and monic.
    pub fn groebner_basis(&self, ord: MonomialOrder) -> Basis<F::Elem> {
        let key = GbKey { order: ord, bound: None };
        if let Some(gb) = self.gb_cache.read().unwrap().get(&key) {
            return gb.clone();
        }
        let disk_key = cache_key(self, ord);
        let gb = self
            .load_gb(&disk_key)
            .unwrap_or_else(|| {
                let gb = groebner_basis(&self.field, self.nvars, &self.gens, GbOptions::new(ord));
                let text: Vec<String> = gb.iter().map(|g| g.to_string_with(&self.field)).collect();
                cache::store("gb", &disk_key, &(text.join("\n") + "\n"));
                gb
            });
        self.insert(key, gb)
    }

    fn load_gb(&self, key: &str) -> Option<Vec<Polynomial<F::Elem>>> {
        let text = cache::load("gb", key)?;
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| parse_polynomial(&self.field, self.nvars, l).ok())
            .collect()
    }

    fn insert(&self, key: GbKey, gb: Vec<Polynomial<F::Elem>>) -> Basis<F::Elem> {
        let mut cache = self.gb_cache.write().unwrap();
        cache.entry(key).or_insert_with(|| Arc::new(gb)).clone()
    }

    /// A Gröbner basis that is correct in all degrees `<= bound`.
    pub fn truncated_groebner_basis(&self, ord: MonomialOrder, bound: u32) -> Basis<F::Elem> {
        {
            let cache = self.gb_cache.read().unwrap();
            let usable = cache
                .iter()
                .filter(|(k, _)| k.order == ord && k.bound.is_none_or(|b| b >= bound))
                .min_by_key(|(k, _)| k.bound.unwrap_or(u32::MAX));
            if let Some((_, gb)) = usable {
                return gb.clone();
            }
        }
        let gb = groebner_basis(
            &self.field,
            self.nvars,
            &self.gens,
            GbOptions::new(ord).truncated(bound),
        );
        self.insert(GbKey { order: ord, bound: Some(bound) }, gb)
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.truncated_groebner_basis(MonomialOrder::Grevlex, 0);
        gb.len() == 1 && gb[0].degree() == Some(0)
    }

    /// Basis of the degree-`t` piece `I_t`: for every monomial `u` of the
    /// initial ideal in degree `t`, the element `u - NF(u)`. This is the
    /// reduced echelon basis of `I_t` with respect to grevlex.
    pub fn graded_piece_basis(&self, t: i64) -> Result<Vec<Polynomial<F::Elem>>> {
        if t < 0 {
            return Err(Error::Domain(format!("negative degree {t}")));
        }
        if self.is_zero() {
            return Ok(Vec::new());
        }
        let t = t as u32;
        let ord = MonomialOrder::Grevlex;
        let gb = self.truncated_groebner_basis(ord, t);
        let leads: Vec<&Monomial> = gb.iter().map(|g| &g.terms()[0].0).collect();
        let mut out = Vec::new();
        for u in Monomial::all_of_degree(self.nvars, t) {
            if !leads.iter().any(|l| l.divides(&u)) {
                continue;
            }
            let um = Polynomial::monomial(&self.field, u);
            let nf = reduce(&self.field, &um, &gb, ord)?;
            out.push(um.sub(&self.field, &nf));
        }
        Ok(out)
    }

    /// `dim I_t`.
    pub fn graded_dim(&self, t: i64) -> Result<usize> {
        if t < 0 {
            return Err(Error::Domain(format!("negative degree {t}")));
        }
        if self.is_zero() {
            return Ok(0);
        }
        let gb = self.truncated_groebner_basis(MonomialOrder::Grevlex, t as u32);
        let leads: Vec<&Monomial> = gb.iter().map(|g| &g.terms()[0].0).collect();
        Ok(Monomial::all_of_degree(self.nvars, t as u32)
            .iter()
            .filter(|u| leads.iter().any(|l| l.divides(u)))
            .count())
    }

    /// Hilbert data of `S/I`, from the grevlex initial ideal.
    pub fn hilbert_function(&self) -> Result<HilbertData> {
        if let Some(h) = self.hilbert_cache.get() {
            return Ok(h.clone());
        }
        let gb = self.groebner_basis(MonomialOrder::Grevlex);
        if gb.len() == 1 && gb[0].degree() == Some(0) {
            return Err(Error::EmptyVariety);
        }
        let leads: Vec<Monomial> = gb.iter().map(|g| g.terms()[0].0.clone()).collect();
        let h = HilbertData::from_initial_ideal(self.nvars, &leads);
        Ok(self.hilbert_cache.get_or_init(|| h).clone())
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial<F::Elem>) -> Result<bool> {
        if f.nvars() != self.nvars {
            return Err(Error::RingMismatch(format!(
                "{} variables vs {}",
                f.nvars(),
                self.nvars
            )));
        }
        if f.is_zero() {
            return Ok(true);
        }
        let gb = match f.degree() {
            Some(d) if f.is_homogeneous() => self.truncated_groebner_basis(MonomialOrder::Grevlex, d),
            _ => self.groebner_basis(MonomialOrder::Grevlex),
        };
        Ok(reduce(&self.field, f, &gb, MonomialOrder::Grevlex)?.is_zero())
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        if self.nvars != other.nvars {
            return Ok(false);
        }
        Ok(self.groebner_basis(MonomialOrder::Grevlex) == other.groebner_basis(MonomialOrder::Grevlex))
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(format!("{} vs {}", self.nvars, other.nvars)));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_parts(self.field.clone(), self.nvars, gens))
    }

    pub fn with_generators(&self, extra: &[Polynomial<F::Elem>]) -> Result<Ideal<F>> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Self::new(self.field.clone(), self.nvars, gens)
    }

    /// Image under `x_i -> sum_j m[i][j] x_j` applied to every generator.
    pub fn linear_substitution(&self, m: &Matrix<F::Elem>) -> Result<Ideal<F>> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(Error::RingMismatch("coordinate change has the wrong size".into()));
        }
        if m.rank(&self.field) != self.nvars {
            return Err(Error::InvalidCoordinateChange);
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.linear_substitution_unchecked(&self.field, m))
            .collect();
        Ok(Self::from_parts(self.field.clone(), self.nvars, gens))
    }

    /// `I ∩ k[x_k, ..., x_r]` as an ideal in `nvars - k` variables.
    pub fn elimination_ideal(&self, k: usize) -> Result<Ideal<F>> {
        if k > self.nvars {
            return Err(Error::Domain(format!(
                "cannot eliminate {k} of {} variables",
                self.nvars
            )));
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let gb = self.groebner_basis(MonomialOrder::Block(k));
        let gens = gb
            .iter()
            .filter(|g| !g.involves_front(k))
            .map(|g| g.drop_front(&self.field, k))
            .collect();
        Ok(Self::from_parts(self.field.clone(), self.nvars - k, gens))
    }

    /// The quotient `I : (f)`.
    pub fn ideal_quotient(&self, f: &Polynomial<F::Elem>) -> Result<Ideal<F>> {
        self.check_divisor(f)?;
        if f.degree() == Some(0) || self.is_zero() {
            return Ok(self.clone());
        }
        if f.degree() == Some(1) {
            return self.linear_colon(f, false);
        }
        // I ∩ (f) = (t·I + (1-t)·f) ∩ S with t of weight zero
        let n = self.nvars;
        let field = &self.field;
        let t = Polynomial::var(field, n + 1, 0);
        let fp = f.pad_front(1);
        let mut gens: Vec<_> = self.gens.iter().map(|g| g.pad_front(1).mul(field, &t)).collect();
        gens.push(fp.sub(field, &fp.mul(field, &t)));
        let mut weights = vec![1u32; n + 1];
        weights[0] = 0;
        let gb = groebner_basis(
            field,
            n + 1,
            &gens,
            GbOptions::new(MonomialOrder::Block(1)).with_weights(&weights),
        );
        let mut quot = Vec::new();
        for g in gb.iter().filter(|g| !g.involves_front(1)) {
            let g = g.drop_front(field, 1);
            let q = divide_exact(field, &g, f)
                .ok_or_else(|| Error::Domain("intersection element not divisible by f".into()))?;
            quot.push(q);
        }
        Ok(Self::from_parts(field.clone(), n, quot))
    }

    /// The saturation `I : f^∞`.
    pub fn saturate_by(&self, f: &Polynomial<F::Elem>) -> Result<Ideal<F>> {
        self.check_divisor(f)?;
        if f.degree() == Some(0) || self.is_zero() {
            return Ok(self.clone());
        }
        if f.degree() == Some(1) {
            return self.linear_colon(f, true);
        }
        let mut cur = self.clone();
        loop {
            let next = cur.ideal_quotient(f)?;
            if next.equals(&cur)? {
                return Ok(next);
            }
            cur = next;
        }
    }

    fn check_divisor(&self, f: &Polynomial<F::Elem>) -> Result<()> {
        if f.is_zero() {
            return Err(Error::Domain("quotient by the zero polynomial".into()));
        }
        if f.nvars() != self.nvars {
            return Err(Error::RingMismatch(format!("{} vs {}", f.nvars(), self.nvars)));
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(f.to_string_with(&self.field)));
        }
        Ok(())
    }

    /// Quotient or saturation by a linear form: move it to the last variable,
    /// where a grevlex basis of `I : x_r` (resp. `I : x_r^∞`) is obtained by
    /// dividing each basis element by `x_r` (resp. its largest power).
    fn linear_colon(&self, f: &Polynomial<F::Elem>, saturate: bool) -> Result<Ideal<F>> {
        let n = self.nvars;
        let field = &self.field;
        let coeffs: Vec<F::Elem> = (0..n)
            .map(|i| {
                f.coeff(&Monomial::var(n, i))
                    .cloned()
                    .unwrap_or_else(|| field.zero())
            })
            .collect();
        let pivot = (0..n).rev().find(|&i| !field.is_zero(&coeffs[i])).unwrap();
        let mut rows: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
        for i in (0..n).filter(|&i| i != pivot) {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            rows.push(e);
        }
        rows.push(coeffs);
        let a = Matrix::from_rows(rows);
        let a_inv = a.inverse(field).ok_or(Error::InvalidCoordinateChange)?;
        let moved = self.linear_substitution(&a_inv)?;
        let gb = moved.groebner_basis(MonomialOrder::Grevlex);
        let last = n - 1;
        let divided: Vec<Polynomial<F::Elem>> = gb
            .iter()
            .map(|g| {
                let min_e = g.terms().iter().map(|(m, _)| m.exp(last)).min().unwrap_or(0);
                let e = if saturate { min_e } else { min_e.min(1) };
                if e == 0 {
                    return g.clone();
                }
                let terms = g
                    .terms()
                    .iter()
                    .map(|(m, c)| {
                        let mut m = m.clone();
                        m.set_exp(last, m.exp(last) - e);
                        (m, c.clone())
                    })
                    .collect();
                Polynomial::from_terms(field, n, terms)
            })
            .collect();
        let back = Self::from_parts(field.clone(), n, divided);
        back.linear_substitution(&a)
    }

    /// Projective dimension, degree and codimension of the zero set.
    pub fn dim_deg_codim(&self) -> Result<(i64, u64, i64)> {
        let h = self.hilbert_function()?;
        Ok((h.dim, h.degree, h.codim()))
    }

    /// Generators as text, one per line.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string_with(&self.field)).collect()
    }

    /// Canonical text: field, arity and the sorted monic generators.
    pub fn canonical_text(&self) -> String {
        let mut gens: Vec<String> = self
            .gens
            .iter()
            .map(|g| g.monic(&self.field).to_string_with(&self.field))
            .collect();
        gens.sort();
        gens.dedup();
        format!("{}\n{}\n{}", self.field.config(), self.nvars, gens.join("\n"))
    }
}

/// Stable digest of an ideal's normalized generators, the field and the
/// monomial order.
pub fn cache_key<F: Field>(ideal: &Ideal<F>, ord: MonomialOrder) -> String {
    cache::digest(&[&ideal.canonical_text(), &ord.name()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::groebner::hilbert::binomial;

    fn twisted_cubic() -> Ideal<Rationals> {
        Ideal::parse(Rationals, 4, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]).unwrap()
    }

    fn p(s: &str, n: usize) -> Polynomial<num_rational::BigRational> {
        parse_polynomial(&Rationals, n, s).unwrap()
    }

    #[test]
    fn rejects_inhomogeneous() {
        assert!(matches!(
            Ideal::parse(Rationals, 2, &["x0^2 - x1"]),
            Err(Error::NotHomogeneous(_))
        ));
        assert!(matches!(
            Ideal::new(Rationals, 3, vec![p("x0", 2)]),
            Err(Error::RingMismatch(_))
        ));
    }

    #[test]
    fn graded_pieces_and_hilbert() {
        let i = twisted_cubic();
        assert_eq!(i.graded_piece_basis(2).unwrap().len(), 3);
        assert!(i.graded_piece_basis(-1).is_err());
        assert!(Ideal::zero(Rationals, 4).graded_piece_basis(3).unwrap().is_empty());
        let h = i.hilbert_function().unwrap();
        assert_eq!((h.dim, h.degree, h.codim()), (1, 3, 2));
        for t in 0..7 {
            let dim_i = i.graded_dim(t).unwrap() as u64;
            assert_eq!(dim_i + h.hf_at(t), u64::try_from(binomial(3 + t, t)).unwrap());
            assert_eq!(h.hf_at(t), (3 * t + 1) as u64);
        }
        assert!(matches!(
            Ideal::unit(Rationals, 3).hilbert_function(),
            Err(Error::EmptyVariety)
        ));
    }

    #[test]
    fn elimination() {
        let i = twisted_cubic();
        let e = i.elimination_ideal(1).unwrap();
        assert_eq!(e.nvars(), 3);
        let expect = Ideal::parse(Rationals, 3, &["x0*x2 - x1^2"]).unwrap();
        assert!(e.equals(&expect).unwrap());
        let lin = Ideal::parse(Rationals, 3, &["x0 - x1"]).unwrap();
        assert!(lin.elimination_ideal(1).unwrap().is_zero());
        assert!(i.elimination_ideal(5).is_err());
        assert!(i.elimination_ideal(4).unwrap().is_zero());
        // every eliminated generator reduces to zero against the block basis
        let gb = i.groebner_basis(MonomialOrder::Block(1));
        for g in e.generators() {
            let g = g.pad_front(1);
            assert!(reduce(&Rationals, &g, &gb, MonomialOrder::Block(1)).unwrap().is_zero());
        }
    }

    #[test]
    fn quotients() {
        let q = Rationals;
        let a = Ideal::parse(q, 2, &["x0^2"]).unwrap();
        assert!(a.ideal_quotient(&p("x0", 2)).unwrap().equals(&Ideal::parse(q, 2, &["x0"]).unwrap()).unwrap());
        let b = Ideal::parse(q, 2, &["x0*x1"]).unwrap();
        assert!(b.ideal_quotient(&p("x0", 2)).unwrap().equals(&Ideal::parse(q, 2, &["x1"]).unwrap()).unwrap());
        assert!(b.ideal_quotient(&Polynomial::zero(2)).is_err());

        let c = Ideal::parse(q, 3, &["x0*x1", "x0*x2"]).unwrap();
        let sat = c.saturate_by(&p("x0", 3)).unwrap();
        assert!(sat.equals(&Ideal::parse(q, 3, &["x1", "x2"]).unwrap()).unwrap());
        let d = Ideal::parse(q, 2, &["x0^2", "x0*x1"]).unwrap();
        assert!(d.saturate_by(&p("x0", 2)).unwrap().is_unit());

        // prime ideal is saturated with respect to anything outside it
        let tc = twisted_cubic();
        assert!(tc.saturate_by(&p("x0 + x3", 4)).unwrap().equals(&tc).unwrap());
        assert!(tc.saturate_by(&p("x0^2 + x1*x3", 4)).unwrap().equals(&tc).unwrap());
    }

    #[test]
    fn nonlinear_quotient_laws() {
        let q = Rationals;
        let i = Ideal::parse(q, 3, &["x0^2*x1", "x0*x1*x2^2"]).unwrap();
        let f = p("x0*x1", 3);
        let quot = i.ideal_quotient(&f).unwrap();
        assert!(quot.equals(&Ideal::parse(q, 3, &["x0", "x2^2"]).unwrap()).unwrap());
        for g in quot.generators() {
            assert!(i.contains(&g.mul(&q, &f)).unwrap());
        }
        assert!(quot.contains_ideal(&i).unwrap());
        let sat = i.saturate_by(&f).unwrap();
        assert!(sat.is_unit());
        let g = p("x1^2 + x0*x2", 3);
        let j = Ideal::parse(q, 3, &["x0^3", "x0*x1^2 + x0^2*x2"]).unwrap();
        let s = j.saturate_by(&g).unwrap();
        assert!(s.ideal_quotient(&g).unwrap().equals(&s).unwrap());
        assert!(s.contains_ideal(&j.ideal_quotient(&g).unwrap()).unwrap());
    }

    #[test]
    fn cache_keys() {
        let a = Ideal::parse(Rationals, 4, &["x0*x2 - x1^2", "x1*x3 - x2^2"]).unwrap();
        let b = Ideal::parse(Rationals, 4, &["x1*x3 - x2^2", "2*x0*x2 - 2*x1^2"]).unwrap();
        assert_eq!(cache_key(&a, MonomialOrder::Grevlex), cache_key(&b, MonomialOrder::Grevlex));
        assert_ne!(cache_key(&a, MonomialOrder::Grevlex), cache_key(&a, MonomialOrder::Block(1)));
        let f = PrimeField::new(32003).unwrap();
        let c = Ideal::parse(f, 4, &["x0*x2 - x1^2", "x1*x3 - x2^2"]).unwrap();
        assert_ne!(cache_key(&a, MonomialOrder::Grevlex), cache_key(&c, MonomialOrder::Grevlex));
    }

    #[test]
    fn substitution_roundtrip() {
        let q = Rationals;
        let i = twisted_cubic();
        let rows = vec![
            vec![1, 1, 0, 0],
            vec![0, 1, 0, 2],
            vec![0, 0, 1, 0],
            vec![3, 0, 0, 1],
        ];
        let m = Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|v| q.from_i64(v)).collect()).collect());
        let inv = m.inverse(&q).unwrap();
        let back = i.linear_substitution(&m).unwrap().linear_substitution(&inv).unwrap();
        assert!(back.equals(&i).unwrap());
    }
}
