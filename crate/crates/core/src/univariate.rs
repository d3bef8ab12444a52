//! Dense univariate polynomials over a [`Field`], used for binary forms
//! and for root finding on hypersurfaces over finite fields.
//!
//! Coefficients are stored lowest degree first with no trailing zeros.

use crate::field::Field;
use crate::poly::Polynomial;

pub type Dense<E> = Vec<E>;

pub fn trim<F: Field>(field: &F, mut a: Dense<F::Elem>) -> Dense<F::Elem> {
    while a.last().is_some_and(|c| field.is_zero(c)) {
        a.pop();
    }
    a
}

/// Degree, with `None` for the zero polynomial.
pub fn degree<E>(a: &Dense<E>) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn eval<F: Field>(field: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    a.iter().rev().fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
}

pub fn derivative<F: Field>(field: &F, a: &[F::Elem]) -> Dense<F::Elem> {
    let d = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| field.mul(c, &field.from_i64(i as i64)))
        .collect();
    trim(field, d)
}

fn rem<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Dense<F::Elem> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = field.inv(&b[db]);
    while r.len() > db {
        let c = field.mul(r.last().unwrap(), &inv);
        let shift = r.len() - 1 - db;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = field.sub(&r[shift + i], &field.mul(&c, bc));
        }
        r.pop();
        r = trim(field, r);
    }
    r
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Dense<F::Elem> {
    let mut a = trim(field, a.to_vec());
    let mut b = trim(field, b.to_vec());
    while !b.is_empty() {
        let r = rem(field, &a, &b);
        a = b;
        b = r;
    }
    if let Some(lc) = a.last().cloned() {
        let inv = field.inv(&lc);
        a = a.iter().map(|c| field.mul(c, &inv)).collect();
    }
    a
}

pub fn is_squarefree<F: Field>(field: &F, a: &[F::Elem]) -> bool {
    degree(&gcd(field, a, &derivative(field, a))) == Some(0)
}

/// `f(x, 1)` for a binary form `f(x0, x1)`, coefficient of `x^i` taken from
/// the monomial `x0^i x1^(d-i)`.
pub fn dehomogenize<F: Field>(field: &F, f: &Polynomial<F::Elem>) -> Dense<F::Elem> {
    assert_eq!(f.nvars(), 2);
    let d = f.degree().unwrap_or(0) as usize;
    let mut a = vec![field.zero(); d + 1];
    for (m, c) in f.terms() {
        a[m.exp(0) as usize] = c.clone();
    }
    trim(field, a)
}

/// All roots in a finite field, by enumeration. `None` over infinite fields.
pub fn roots<F: Field>(field: &F, a: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let elems = field.elements()?;
    Some(elems.into_iter().filter(|x| field.is_zero(&eval(field, a, x))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::parse_polynomial;

    #[test]
    fn gcd_and_squarefree() {
        let q = Rationals;
        let v = |xs: &[i64]| xs.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        // (x-1)(x-2) and (x-1)(x+3)
        let g = gcd(&q, &v(&[2, -3, 1]), &v(&[-3, 2, 1]));
        assert_eq!(g, v(&[-1, 1]));
        assert!(is_squarefree(&q, &v(&[2, -3, 1])));
        // (x-1)^2
        assert!(!is_squarefree(&q, &v(&[1, -2, 1])));
    }

    #[test]
    fn binary_forms_and_roots() {
        let f = PrimeField::new(101).unwrap();
        let p = parse_polynomial(&f, 2, "x0^2 - 4*x1^2").unwrap();
        let a = dehomogenize(&f, &p);
        let mut r = roots(&f, &a).unwrap();
        r.sort();
        assert_eq!(r, vec![2, 99]);
        assert!(roots(&Rationals, &[Rationals.one()]).is_none());
    }
}
