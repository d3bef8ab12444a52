//! Graded pieces as vector spaces: coordinates of homogeneous forms in a
//! monomial basis, spans, ranks and complements.

use std::collections::HashMap;

use crate::field::Field;
use crate::linalg::SparseEchelon;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

pub type SparseVec<E> = Vec<(usize, E)>;

/// The monomials of one degree, indexed in decreasing lex order.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    nvars: usize,
    degree: u32,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let monos = Monomial::all_of_degree(nvars, degree);
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis {
            nvars,
            degree,
            monos,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a form of this degree, sorted by index.
    pub fn coords<E: Clone + PartialEq>(&self, p: &Polynomial<E>) -> SparseVec<E> {
        let mut v: SparseVec<E> = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let i = self
                    .index_of(m)
                    .unwrap_or_else(|| panic!("monomial {m} not of degree {}", self.degree));
                (i, c.clone())
            })
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn dense_coords<F: Field>(&self, field: &F, p: &Polynomial<F::Elem>) -> Vec<F::Elem> {
        let mut v = vec![field.zero(); self.len()];
        for (i, c) in self.coords(p) {
            v[i] = c;
        }
        v
    }

    pub fn form<F: Field>(&self, field: &F, coords: &[F::Elem]) -> Polynomial<F::Elem> {
        let terms = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(i, c)| (self.monos[i].clone(), c.clone()))
            .collect();
        Polynomial::from_terms(field, self.nvars, terms)
    }
}

/// Dimension of the span of some forms of a common degree.
pub fn span_dim<F: Field>(field: &F, basis: &MonomialBasis, forms: &[Polynomial<F::Elem>]) -> usize {
    let mut ech = SparseEchelon::new(field.clone());
    for f in forms {
        ech.insert(basis.coords(f));
    }
    ech.rank()
}

/// Indices of `candidates` that extend a basis of `span(base)`, chosen
/// greedily in order.
pub fn complement<F: Field>(
    field: &F,
    basis: &MonomialBasis,
    base: &[Polynomial<F::Elem>],
    candidates: &[Polynomial<F::Elem>],
) -> Vec<usize> {
    let mut ech = SparseEchelon::new(field.clone());
    for f in base {
        ech.insert(basis.coords(f));
    }
    candidates
        .iter()
        .enumerate()
        .filter(|(_, f)| ech.insert(basis.coords(f)))
        .map(|(i, _)| i)
        .collect()
}

/// `S_1 * forms`, the products of every variable with every form.
pub fn times_linear<E: Clone + PartialEq>(nvars: usize, forms: &[Polynomial<E>]) -> Vec<Polynomial<E>> {
    let mut out = Vec::with_capacity(forms.len() * nvars);
    for f in forms {
        for i in 0..nvars {
            out.push(f.mul_monomial(&Monomial::var(nvars, i)));
        }
    }
    out
}

/// Basis of the forms of degree `deg` in `nvars` variables that vanish at
/// every given point.
pub fn forms_through_points<F: Field>(
    field: &F,
    nvars: usize,
    deg: u32,
    points: &[Vec<F::Elem>],
) -> Vec<Polynomial<F::Elem>> {
    let basis = MonomialBasis::new(nvars, deg);
    if points.is_empty() {
        return basis
            .monomials()
            .iter()
            .map(|m| Polynomial::monomial(field, m.clone()))
            .collect();
    }
    let rows: Vec<Vec<F::Elem>> = points
        .iter()
        .map(|p| {
            basis
                .monomials()
                .iter()
                .map(|m| Polynomial::monomial(field, m.clone()).eval(field, p))
                .collect()
        })
        .collect();
    crate::linalg::Matrix::from_rows(rows)
        .kernel(field)
        .iter()
        .map(|v| basis.form(field, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::poly::parse_polynomial;

    #[test]
    fn spans_and_complements() {
        let q = Rationals;
        let b = MonomialBasis::new(3, 2);
        assert_eq!(b.len(), 6);
        let f = |s: &str| parse_polynomial(&q, 3, s).unwrap();
        let forms = vec![f("x0^2 - x1^2"), f("x1^2 - x2^2"), f("x0^2 - x2^2")];
        assert_eq!(span_dim(&q, &b, &forms), 2);
        let cands = vec![f("x0^2 - x2^2"), f("x0*x1"), f("2*x0*x1")];
        assert_eq!(complement(&q, &b, &forms[..2], &cands), vec![1]);
        let v = b.dense_coords(&q, &forms[0]);
        assert_eq!(b.form(&q, &v), forms[0]);
    }

    #[test]
    fn conics_through_points() {
        let q = Rationals;
        let pts: Vec<Vec<_>> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
            .iter()
            .map(|p| p.iter().map(|&v| q.from_i64(v)).collect())
            .collect();
        let conics = forms_through_points(&q, 3, 2, &pts);
        assert_eq!(conics.len(), 2);
        let cubics = forms_through_points(&q, 3, 3, &pts);
        assert_eq!(cubics.len(), 6);
        for c in &cubics {
            for p in &pts {
                assert!(q.is_zero(&c.eval(&q, p)));
            }
        }
    }
}
