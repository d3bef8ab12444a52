//! Hilbert series of monomial ideals and the Hilbert data of `S/I`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;

/// Integer polynomial in `z`, coefficients indexed by degree.
pub type ZPoly = Vec<i128>;

fn zp_trim(mut p: ZPoly) -> ZPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn zp_add(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect();
    zp_trim(v)
}

fn zp_shift(a: &ZPoly, k: usize) -> ZPoly {
    let mut v = vec![0; k];
    v.extend_from_slice(a);
    zp_trim(v)
}

fn zp_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut v = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    zp_trim(v)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(z)` of the Hilbert series `N(z)/(1-z)^n` of `S/(gens)`
/// with `S` the polynomial ring in `nvars` variables.
pub fn hilbert_numerator(gens: &[Monomial]) -> ZPoly {
    numerator_rec(minimalize(gens.to_vec()))
}

fn numerator_rec(gens: Vec<Monomial>) -> ZPoly {
    if gens.is_empty() {
        return vec![1];
    }
    // pairwise coprime generators: product of (1 - z^deg)
    let mut coprime = true;
    'outer: for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if !a.coprime(b) {
                coprime = false;
                break 'outer;
            }
        }
    }
    if coprime {
        let mut acc: ZPoly = vec![1];
        for g in &gens {
            let d = g.degree() as usize;
            let mut f = vec![0i128; d + 1];
            f[0] = 1;
            f[d] -= 1;
            acc = zp_mul(&acc, &zp_trim(f));
        }
        return acc;
    }
    // pivot on the variable occurring in most non-pure-power generators
    let nvars = gens[0].nvars();
    let is_pure = |m: &Monomial| m.exponents().iter().filter(|&&e| e > 0).count() <= 1;
    let mut best = (0usize, 0usize);
    for v in 0..nvars {
        let count = gens.iter().filter(|g| !is_pure(g) && g.exp(v) > 0).count();
        if count > best.1 {
            best = (v, count);
        }
    }
    let var = best.0;
    let mut exps: Vec<u16> = gens
        .iter()
        .filter(|g| !is_pure(g) && g.exp(var) > 0)
        .map(|g| g.exp(var))
        .collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pivot = Monomial::one(nvars);
    pivot.set_exp(var, e);

    // I : p
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h.set_exp(var, g.exp(var).saturating_sub(e));
            h
        })
        .collect();
    // I + (p)
    let mut plus = gens.clone();
    plus.push(pivot);
    let a = numerator_rec(minimalize(plus));
    let b = numerator_rec(minimalize(colon));
    zp_add(&a, &zp_shift(&b, e as usize))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Value at `t` of the Hilbert function with series `num/(1-z)^nvars`.
pub fn hf_from_numerator(num: &ZPoly, nvars: usize, t: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for (k, &c) in num.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let s = t - k as i64;
        if s < 0 {
            continue;
        }
        acc += BigInt::from(c) * binomial(s + nvars as i64 - 1, nvars as i64 - 1);
    }
    acc
}

/// Hilbert function and polynomial of a homogeneous quotient `S/I`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HilbertData {
    /// Number of variables of `S`.
    pub nvars: usize,
    /// Numerator of the Hilbert series over `(1-z)^nvars`.
    pub numerator: Vec<i128>,
    /// Projective dimension; `-1` for the irrelevant ideal.
    pub dim: i64,
    /// Degree (multiplicity).
    pub degree: u64,
    /// Coefficients of the Hilbert polynomial in `t`, lowest first.
    pub hp_coeffs: Vec<String>,
    /// From here on the Hilbert function equals the Hilbert polynomial.
    pub stabilization_degree: i64,
    /// Hilbert function values `HF(0..=stabilization_degree + 2)`.
    pub hf: Vec<u64>,
}

impl HilbertData {
    pub fn from_initial_ideal(nvars: usize, leads: &[Monomial]) -> Self {
        let num = hilbert_numerator(leads);
        Self::from_numerator(nvars, num)
    }

    pub fn from_numerator(nvars: usize, num: ZPoly) -> Self {
        // divide by (1 - z) as long as possible
        let mut q = num.clone();
        let mut m = 0usize;
        while m < nvars && q.iter().sum::<i128>() == 0 {
            // synthetic division by (1 - z): q = (1-z) * r, r_k = sum_{i<=k} q_i
            let mut r = Vec::with_capacity(q.len().saturating_sub(1));
            let mut acc = 0i128;
            for &c in &q[..q.len() - 1] {
                acc += c;
                r.push(acc);
            }
            q = zp_trim(if r.is_empty() { vec![0] } else { r });
            m += 1;
        }
        let krull = nvars - m;
        let degree = q.iter().sum::<i128>().max(0) as u64;
        let hp = hilbert_polynomial(&q, krull);
        // the closed form is valid for t >= deg(q) - krull + 1
        let mut stab = (q.len() as i64 - 1) - krull as i64 + 1;
        stab = stab.max(0);
        while stab > 0 {
            let t = stab - 1;
            if BigRational::from_integer(hf_from_numerator(&num, nvars, t)) == eval_poly(&hp, t) {
                stab -= 1;
            } else {
                break;
            }
        }
        let hf = (0..=stab + 2)
            .map(|t| hf_from_numerator(&num, nvars, t).to_u64().unwrap_or(u64::MAX))
            .collect();
        HilbertData {
            nvars,
            numerator: num,
            dim: krull as i64 - 1,
            degree,
            hp_coeffs: hp.iter().map(|c| c.to_string()).collect(),
            stabilization_degree: stab,
            hf,
        }
    }

    pub fn hf_at(&self, t: i64) -> u64 {
        hf_from_numerator(&self.numerator, self.nvars, t).to_u64().unwrap_or(u64::MAX)
    }

    pub fn hp_at(&self, t: i64) -> BigRational {
        eval_poly(&self.hp_rational(), t)
    }

    pub fn hp_rational(&self) -> Vec<BigRational> {
        self.hp_coeffs
            .iter()
            .map(|s| {
                let mut it = s.split('/');
                let n: BigInt = it.next().unwrap().parse().unwrap();
                let d: BigInt = it.next().map(|d| d.parse().unwrap()).unwrap_or_else(BigInt::one);
                BigRational::new(n, d)
            })
            .collect()
    }

    /// Codimension in `P^{nvars-1}`.
    pub fn codim(&self) -> i64 {
        self.nvars as i64 - 1 - self.dim
    }
}

fn eval_poly(p: &[BigRational], t: i64) -> BigRational {
    let tt = BigRational::from_integer(BigInt::from(t));
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * &tt + c)
}

/// Expands `sum_k q_k * C(t - k + D - 1, D - 1)` into the monomial basis.
fn hilbert_polynomial(q: &ZPoly, krull: usize) -> Vec<BigRational> {
    if krull == 0 {
        return vec![BigRational::zero()];
    }
    let dm1 = krull - 1;
    let mut fact = BigInt::one();
    for i in 1..=dm1 {
        fact *= BigInt::from(i);
    }
    let mut total = vec![BigRational::zero(); krull];
    for (k, &c) in q.iter().enumerate() {
        if c == 0 {
            continue;
        }
        // prod_{i=1}^{D-1} (t - k + i)
        let mut prod = vec![BigRational::one()];
        for i in 1..=dm1 {
            let shift = BigRational::from_integer(BigInt::from(i as i64 - k as i64));
            let mut next = vec![BigRational::zero(); prod.len() + 1];
            for (j, a) in prod.iter().enumerate() {
                next[j + 1] += a.clone();
                next[j] += a * &shift;
            }
            prod = next;
        }
        let scale = BigRational::new(BigInt::from(c), fact.clone());
        for (j, a) in prod.into_iter().enumerate() {
            total[j] += a * &scale;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    /// Brute-force count of standard monomials.
    fn count_standard(nvars: usize, gens: &[Monomial], t: u32) -> u64 {
        Monomial::all_of_degree(nvars, t)
            .into_iter()
            .filter(|x| !gens.iter().any(|g| g.divides(x)))
            .count() as u64
    }

    #[test]
    fn twisted_cubic_initial_ideal() {
        // grevlex initial ideal of the twisted cubic: (x1^2, x1x2, x2^2)
        let gens = [m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0])];
        let h = HilbertData::from_initial_ideal(4, &gens);
        assert_eq!(h.dim, 1);
        assert_eq!(h.degree, 3);
        for t in 0..8 {
            assert_eq!(h.hf_at(t), count_standard(4, &gens, t as u32));
            assert_eq!(h.hf_at(t), 3 * t as u64 + 1);
        }
        assert_eq!(h.hp_coeffs, vec!["1", "3"]);
        assert_eq!(h.stabilization_degree, 0);
    }

    #[test]
    fn zero_ideal_is_polynomial_ring() {
        let h = HilbertData::from_initial_ideal(4, &[]);
        assert_eq!(h.dim, 3);
        assert_eq!(h.degree, 1);
        for t in 0..6 {
            assert_eq!(h.hf_at(t), binomial(t + 3, 3).to_u64().unwrap());
        }
    }

    #[test]
    fn numerator_matches_brute_force() {
        let gens = [
            m(&[2, 1, 0, 0]),
            m(&[0, 3, 1, 0]),
            m(&[1, 0, 0, 2]),
            m(&[0, 1, 2, 1]),
            m(&[3, 0, 0, 0]),
        ];
        let h = HilbertData::from_initial_ideal(4, &gens);
        for t in 0..10 {
            assert_eq!(h.hf_at(t), count_standard(4, &gens, t as u32), "t = {t}");
        }
        for t in h.stabilization_degree..h.stabilization_degree + 5 {
            assert_eq!(h.hp_at(t), BigRational::from_integer(h.hf_at(t).into()));
        }
    }

    #[test]
    fn irrelevant_ideal() {
        let gens = [m(&[1, 0]), m(&[0, 1])];
        let h = HilbertData::from_initial_ideal(2, &gens);
        assert_eq!(h.dim, -1);
        assert_eq!(h.hf_at(0), 1);
        assert_eq!(h.hf_at(1), 0);
    }
}
