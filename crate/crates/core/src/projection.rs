//! Linear projections from points of a variety and partial elimination
//! ideals.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::MonomialBasis;
use crate::groebner::{GbOptions, Ideal};
use crate::linalg::{Matrix, SparseEchelon};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::varieties::{Param, Point, Variety};

/// Invertible `B` whose first columns are the given points and whose other
/// columns are the standard basis vectors off the pivot columns of the
/// reduced echelon form of the points. In the coordinates `y = B^{-1} x`
/// the points become the first coordinate points. The pivot set depends
/// only on the span of the points, so the trailing coordinates do not
/// depend on the order in which the points are listed.
pub fn coordinate_change<F: Field>(field: &F, points: &[Vec<F::Elem>]) -> Result<Matrix<F::Elem>> {
    let n = points.first().map(|p| p.len()).ok_or(Error::Rank)?;
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::RingMismatch("points of different lengths".into()));
    }
    let mut m = Matrix::from_rows(points.to_vec());
    let pivots = m.rref(field);
    if pivots.len() < points.len() {
        return Err(Error::Rank);
    }
    let mut b = Matrix::zeros(field, n, n);
    for (j, p) in points.iter().enumerate() {
        for i in 0..n {
            b.set(i, j, p[i].clone());
        }
    }
    let mut col = points.len();
    for i in (0..n).filter(|i| !pivots.contains(i)) {
        b.set(i, col, field.one());
        col += 1;
    }
    Ok(b)
}

fn check_points<F: Field>(v: &Variety<F>, points: &[Point<F::Elem>]) -> Result<()> {
    for p in points {
        if !v.contains_point(&p.coords) {
            return Err(Error::Membership(p.format(v.field())));
        }
    }
    Ok(())
}

/// Image of a point under the projection from `centers` in the
/// coordinates of [`project_from_points`]; `None` if it is a center.
pub fn project_point<F: Field>(field: &F, centers: &[Vec<F::Elem>], pt: &Point<F::Elem>) -> Result<Option<Point<F::Elem>>> {
    let b = coordinate_change(field, centers)?;
    let binv = b.inverse(field).ok_or(Error::InvalidCoordinateChange)?;
    let y = binv.mul_vec(field, &pt.coords);
    let tail = y[centers.len()..].to_vec();
    if tail.iter().all(|c| field.is_zero(c)) {
        return Ok(None);
    }
    Ok(Some(Point::new(tail, pt.real)))
}

/// The projection `π_Γ(V)` from linearly independent points of `V`.
pub fn project_from_points<F: Field>(v: &Variety<F>, points: &[Point<F::Elem>]) -> Result<Variety<F>> {
    check_points(v, points)?;
    let field = v.field();
    let k = points.len();
    if k == 0 {
        return Ok(v.clone());
    }
    let coords: Vec<Vec<F::Elem>> = points.iter().map(|p| p.coords.clone()).collect();
    let b = coordinate_change(field, &coords)?;
    let changed = v.ideal().linear_substitution(&b)?;
    let ideal = changed.elimination_ideal(k)?;
    let real_centers = points.iter().all(|p| p.real);
    let param = match v.param() {
        Some(p) => {
            let binv = b.inverse(field).ok_or(Error::InvalidCoordinateChange)?;
            let moved = p.map.then_linear(field, &binv);
            let comps = moved.components()[k..].to_vec();
            let over_q = p.map.over_q() && real_centers;
            Some(Param {
                space: p.space.clone(),
                map: crate::varieties::RationalMap::new(p.map.source_nvars(), comps, over_q)?,
            })
        }
        None => None,
    };
    let name = format!("{} projected from {k} point(s)", v.name());
    Variety::new(name, ideal, param, v.totally_real() && real_centers)
}

/// `dim I(π_Γ(X))_2` from a basis of `I(X)_2`: after the coordinate change
/// it is the dimension of the quadrics free of the first `k` variables,
/// `dim I_2 - rank` of the coefficient block on monomials that involve
/// them.
pub fn projected_quadric_count<F: Field>(
    field: &F,
    quadrics: &[Polynomial<F::Elem>],
    points: &[Vec<F::Elem>],
) -> Result<usize> {
    if quadrics.is_empty() {
        return Ok(0);
    }
    let k = points.len();
    if k == 0 {
        return Ok(quadrics.len());
    }
    let b = coordinate_change(field, points)?;
    let n = b.rows();
    let basis = MonomialBasis::new(n, 2);
    let mut ech = SparseEchelon::new(field.clone());
    for q in quadrics {
        let moved = q.linear_substitution_unchecked(field, &b);
        let front: Vec<(usize, F::Elem)> = basis
            .coords(&moved)
            .into_iter()
            .filter(|(i, _)| basis.monomials()[*i].exponents()[..k].iter().any(|&e| e > 0))
            .collect();
        ech.insert(front);
    }
    Ok(quadrics.len() - ech.rank())
}

/// The partial elimination ideals `K_0 ⊆ K_1 ⊆ ... ⊆ K_m` of `I(V)` at `q`.
#[derive(Clone, Debug)]
pub struct PeiResult<F: Field> {
    pub center: Point<F::Elem>,
    pub ideals: Vec<Ideal<F>>,
    /// `(i, t) -> dim (K_i)_t`, for the degrees the computation certifies.
    pub dims: BTreeMap<(usize, u32), usize>,
}

/// Computes `K_i(I, q)` for `i <= m` from a Gröbner basis under the order
/// with `x0` alone in the front block, after moving `q` to `[1:0:...:0]`.
/// With a degree bound `D` the basis is truncated and `K_i` is reported in
/// degrees `<= D - i`; otherwise in degrees `<= max(m, 2) + 1`.
pub fn partial_elimination_ideals<F: Field>(
    v: &Variety<F>,
    q: &Point<F::Elem>,
    m: usize,
    degree_bound: Option<u32>,
) -> Result<PeiResult<F>> {
    check_points(v, std::slice::from_ref(q))?;
    let field = v.field();
    let n = v.nvars();
    let b = coordinate_change(field, std::slice::from_ref(&q.coords))?;
    let changed = v.ideal().linear_substitution(&b)?;
    let ord = MonomialOrder::Block(1);
    let gb = match degree_bound {
        Some(d) => crate::groebner::groebner_basis(field, n, changed.generators(), GbOptions::new(ord).truncated(d)),
        None => changed.groebner_basis(ord).to_vec(),
    };
    let mut by_x0: Vec<(usize, Polynomial<F::Elem>)> = Vec::new();
    for g in &gb {
        let j = g.leading_monomial(ord).map(|l| l.exp(0) as usize).unwrap_or(0);
        let terms = g
            .terms()
            .iter()
            .filter(|(mono, _)| mono.exp(0) as usize == j)
            .map(|(mono, c)| {
                let mut mono = mono.clone();
                mono.set_exp(0, 0);
                (mono.drop_front(1), c.clone())
            })
            .collect();
        by_x0.push((j, Polynomial::from_terms(field, n - 1, terms)));
    }
    let mut ideals: Vec<Ideal<F>> = Vec::with_capacity(m + 1);
    let mut dims = BTreeMap::new();
    for i in 0..=m {
        let gens: Vec<_> = by_x0.iter().filter(|(j, _)| *j <= i).map(|(_, f)| f.clone()).collect();
        let k = Ideal::new(field.clone(), n - 1, gens)?;
        if let Some(prev) = ideals.last() {
            if !k.contains_ideal(prev)? {
                return Err(Error::Precondition("partial elimination ideals do not form a chain".into()));
            }
        }
        let top = match degree_bound {
            Some(d) => d as i64 - i as i64,
            None => m.max(2) as i64 + 1,
        };
        for t in 0..=top {
            dims.insert((i, t as u32), k.graded_dim(t)?);
        }
        ideals.push(k);
    }
    Ok(PeiResult {
        center: q.clone(),
        ideals,
        dims,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeiIdentity {
    pub dim_i2: usize,
    pub dim_projected_i2: usize,
    pub dim_k1_1: usize,
    pub holds: bool,
}

/// Evaluates `dim I(X)_2 = dim I(X_q)_2 + dim (K_1)_1` at `q`.
pub fn pei_dimension_identity_check<F: Field>(v: &Variety<F>, q: &Point<F::Elem>) -> Result<PeiIdentity> {
    let dim_i2 = v.ideal().graded_dim(2)?;
    let pei = partial_elimination_ideals(v, q, 1, Some(2))?;
    let dim_projected_i2 = pei.dims[&(0, 2)];
    let dim_k1_1 = pei.dims[&(1, 1)];
    Ok(PeiIdentity {
        dim_i2,
        dim_projected_i2,
        dim_k1_1,
        holds: dim_i2 == dim_projected_i2 + dim_k1_1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::varieties::{quadric_hypersurface, rational_normal_curve, veronese, projective_space};

    #[test]
    fn twisted_cubic_projection() {
        let q = Rationals;
        let tc = rational_normal_curve(&q, 3).unwrap();
        let p = tc.sample_point(5).unwrap();
        let conic = project_from_points(&tc, std::slice::from_ref(&p)).unwrap();
        assert_eq!(conic.r(), 2);
        assert_eq!(conic.quadric_basis().unwrap().len(), 1);
        assert!(conic.totally_real());
        let quadrics = tc.quadric_basis().unwrap();
        assert_eq!(projected_quadric_count(&q, &quadrics, std::slice::from_ref(&p.coords)).unwrap(), 1);
        let id = pei_dimension_identity_check(&tc, &p).unwrap();
        assert_eq!((id.dim_i2, id.dim_projected_i2, id.dim_k1_1, id.holds), (3, 1, 2, true));
        let off = Point::from_ints(&q, &[1, 1, 1, 2]);
        assert!(matches!(project_from_points(&tc, &[off]), Err(Error::Membership(_))));
        assert!(matches!(project_from_points(&tc, &[p.clone(), p]), Err(Error::Rank)));
    }

    #[test]
    fn quadric_and_projective_space() {
        let q = Rationals;
        let v = quadric_hypersurface(&q, 4).unwrap();
        let p = v.sample_point(2).unwrap();
        let w = project_from_points(&v, std::slice::from_ref(&p)).unwrap();
        assert!(w.ideal().is_zero());
        let pei = partial_elimination_ideals(&v, &p, 1, None).unwrap();
        assert_eq!(pei.dims[&(0, 2)], 0);
        assert_eq!(pei.dims[&(1, 1)], 1);
        let pn = projective_space(&q, 3);
        let pt = pn.sample_point(1).unwrap();
        let pei = partial_elimination_ideals(&pn, &pt, 2, None).unwrap();
        assert!(pei.ideals.iter().all(|k| k.is_zero()));
    }

    #[test]
    fn veronese_identity_and_composition() {
        let f = PrimeField::new(32003).unwrap();
        let v = veronese(&f, 2, 2).unwrap();
        let p1 = v.sample_point(1).unwrap();
        let p2 = v.sample_point(2).unwrap();
        let id = pei_dimension_identity_check(&v, &p1).unwrap();
        assert_eq!((id.dim_projected_i2, id.dim_k1_1), (3, 3));
        assert!(id.holds);

        let both = project_from_points(&v, &[p1.clone(), p2.clone()]).unwrap();
        let swapped = project_from_points(&v, &[p2.clone(), p1.clone()]).unwrap();
        assert!(both.ideal().equals(swapped.ideal()).unwrap());
        let first = project_from_points(&v, std::slice::from_ref(&p1)).unwrap();
        let p2_img = project_point(&f, std::slice::from_ref(&p1.coords), &p2).unwrap().unwrap();
        let step = project_from_points(&first, &[p2_img]).unwrap();
        assert_eq!(
            step.ideal().hilbert_function().unwrap(),
            both.ideal().hilbert_function().unwrap()
        );
        let quadrics = v.quadric_basis().unwrap();
        let count = projected_quadric_count(&f, &quadrics, &[p1.coords, p2.coords]).unwrap();
        assert_eq!(count, both.quadric_basis().unwrap().len());
    }

    #[test]
    fn pei_chain_and_k0() {
        let f = PrimeField::new(32003).unwrap();
        let c = rational_normal_curve(&f, 4).unwrap();
        let p = c.sample_point(8).unwrap();
        let pei = partial_elimination_ideals(&c, &p, 2, None).unwrap();
        let k0 = &pei.ideals[0];
        let proj = project_from_points(&c, &[p]).unwrap();
        assert!(k0.equals(proj.ideal()).unwrap());
        for w in pei.ideals.windows(2) {
            assert!(w[1].contains_ideal(&w[0]).unwrap());
        }
    }
}
