//! Projective varieties given by an ideal and, optionally, a rational
//! parameterization; images of maps; point sampling; and constructors for
//! the example families.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{complement, forms_through_points, times_linear, MonomialBasis};
use crate::groebner::{groebner_basis, GbOptions, Ideal};
use crate::linalg::Matrix;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{parse_polynomial, reduce, Polynomial};
use crate::univariate;

/// Rejections allowed before sampling gives up.
pub const MAX_SAMPLE_REJECTIONS: usize = 100;
/// Attempts with fresh random data before a constructor gives up.
pub const GENERICITY_ATTEMPTS: usize = 8;
/// Range of the random integer coefficients drawn by constructors.
pub const COEFF_BOUND: i64 = 30;
/// Largest degree searched for generators of an image ideal.
pub const MAX_GENERATOR_DEGREE: u32 = 12;

/// A point of projective space. `real` records that the coordinates are
/// images of rational numbers under a map defined over the rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct Point<E> {
    pub coords: Vec<E>,
    pub real: bool,
}

impl<E: Clone> Point<E> {
    pub fn new(coords: Vec<E>, real: bool) -> Self {
        Point { coords, real }
    }

    pub fn from_ints<F: Field<Elem = E>>(field: &F, coords: &[i64]) -> Self {
        Point {
            coords: coords.iter().map(|&c| field.from_i64(c)).collect(),
            real: true,
        }
    }

    pub fn format<F: Field<Elem = E>>(&self, field: &F) -> String {
        let parts: Vec<String> = self.coords.iter().map(|c| field.format(c)).collect();
        format!("[{}]", parts.join(":"))
    }
}

/// Parses a point literal `[a0:a1:...:ar]` with integer or `a/b` entries.
pub fn parse_point<F: Field>(field: &F, text: &str) -> Result<Point<F::Elem>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("point literal must look like [a0:...:ar], got `{t}`")))?;
    let coords = inner
        .split(':')
        .map(|c| {
            let p = parse_polynomial(field, 1, c.trim())?;
            match p.terms() {
                [] => Ok(field.zero()),
                [(m, v)] if m.is_one() => Ok(v.clone()),
                _ => Err(Error::Parse(format!("bad coordinate `{c}`"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.iter().all(|c| field.is_zero(c)) {
        return Err(Error::Parse("the zero vector is not a projective point".into()));
    }
    Ok(Point { coords, real: true })
}

/// A map `P^s --> P^r` given by forms of one degree.
#[derive(Clone, Debug)]
pub struct RationalMap<F: Field> {
    source_nvars: usize,
    components: Vec<Polynomial<F::Elem>>,
    degree: u32,
    over_q: bool,
}

impl<F: Field> RationalMap<F> {
    /// `over_q` asserts that every coefficient is the image of a rational
    /// number.
    pub fn new(source_nvars: usize, components: Vec<Polynomial<F::Elem>>, over_q: bool) -> Result<Self> {
        let degree = components
            .iter()
            .find_map(|c| c.degree())
            .ok_or_else(|| Error::DegenerateInput("all map components are zero".into()))?;
        for c in &components {
            if c.nvars() != source_nvars {
                return Err(Error::RingMismatch(format!(
                    "component in {} variables, source has {source_nvars}",
                    c.nvars()
                )));
            }
            if !c.is_zero() && (!c.is_homogeneous() || c.degree() != Some(degree)) {
                return Err(Error::NotHomogeneous("map components must be forms of one degree".into()));
            }
        }
        Ok(RationalMap {
            source_nvars,
            components,
            degree,
            over_q,
        })
    }

    pub fn identity(field: &F, nvars: usize) -> Self {
        let components = (0..nvars).map(|i| Polynomial::var(field, nvars, i)).collect();
        RationalMap {
            source_nvars: nvars,
            components,
            degree: 1,
            over_q: true,
        }
    }

    pub fn source_nvars(&self) -> usize {
        self.source_nvars
    }

    pub fn target_nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial<F::Elem>] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn over_q(&self) -> bool {
        self.over_q
    }

    pub fn eval(&self, field: &F, pt: &[F::Elem]) -> Vec<F::Elem> {
        self.components.iter().map(|c| c.eval(field, pt)).collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, field: &F, inner: &RationalMap<F>) -> Result<RationalMap<F>> {
        if inner.target_nvars() != self.source_nvars {
            return Err(Error::RingMismatch("maps cannot be composed".into()));
        }
        let comps = self
            .components
            .iter()
            .map(|c| c.substitute(field, &inner.components))
            .collect();
        RationalMap::new(inner.source_nvars, comps, self.over_q && inner.over_q)
    }

    /// Precomposition with the linear map `y -> m y` of the target.
    pub fn then_linear(&self, field: &F, m: &Matrix<F::Elem>) -> RationalMap<F> {
        let comps = (0..m.rows())
            .map(|i| {
                let mut acc = Polynomial::zero(self.source_nvars);
                for j in 0..m.cols() {
                    if !field.is_zero(m.get(i, j)) {
                        acc = acc.add(field, &self.components[j].scale(field, m.get(i, j)));
                    }
                }
                acc
            })
            .collect();
        RationalMap {
            source_nvars: self.source_nvars,
            components: comps,
            degree: self.degree,
            over_q: self.over_q,
        }
    }
}

/// A parameterization: a map from the zero set of `space`.
#[derive(Clone, Debug)]
pub struct Param<F: Field> {
    pub space: Ideal<F>,
    pub map: RationalMap<F>,
}

#[derive(Clone, Debug)]
pub struct Variety<F: Field> {
    name: String,
    ideal: Ideal<F>,
    param: Option<Param<F>>,
    totally_real: bool,
    ndc: OnceLock<(i64, u64, i64)>,
}

impl<F: Field> Variety<F> {
    /// Checks symbolically that the parameterization lands in the zero set
    /// of every generator.
    pub fn new(name: impl Into<String>, ideal: Ideal<F>, param: Option<Param<F>>, totally_real: bool) -> Result<Self> {
        if let Some(p) = &param {
            if p.map.target_nvars() != ideal.nvars() {
                return Err(Error::RingMismatch("parameterization has the wrong target".into()));
            }
            if p.space.nvars() != p.map.source_nvars() {
                return Err(Error::RingMismatch("parameterization has the wrong source".into()));
            }
            let field = ideal.field();
            let gb = p.space.groebner_basis(MonomialOrder::Grevlex);
            for g in ideal.generators() {
                let pulled = g.substitute(field, p.map.components());
                if !reduce(field, &pulled, &gb, MonomialOrder::Grevlex)?.is_zero() {
                    return Err(Error::Membership(format!(
                        "parameterization does not satisfy {}",
                        g.to_string_with(field)
                    )));
                }
            }
        }
        Ok(Variety {
            name: name.into(),
            ideal,
            param,
            totally_real,
            ndc: OnceLock::new(),
        })
    }

    pub fn from_ideal(name: impl Into<String>, ideal: Ideal<F>) -> Self {
        Variety {
            name: name.into(),
            ideal,
            param: None,
            totally_real: false,
            ndc: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &F {
        self.ideal.field()
    }

    /// Ambient dimension `r`.
    pub fn r(&self) -> usize {
        self.ideal.nvars() - 1
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn param(&self) -> Option<&Param<F>> {
        self.param.as_ref()
    }

    pub fn totally_real(&self) -> bool {
        self.totally_real
    }

    /// `(n, d, c)`: dimension, degree, codimension.
    pub fn dim_deg_codim(&self) -> Result<(i64, u64, i64)> {
        if let Some(v) = self.ndc.get() {
            return Ok(*v);
        }
        let v = self.ideal.dim_deg_codim()?;
        Ok(*self.ndc.get_or_init(|| v))
    }

    pub fn is_nondegenerate(&self) -> Result<bool> {
        Ok(self.ideal.graded_dim(1)? == 0)
    }

    pub fn quadric_basis(&self) -> Result<Vec<Polynomial<F::Elem>>> {
        self.ideal.graded_piece_basis(2)
    }

    pub fn contains_point(&self, pt: &[F::Elem]) -> bool {
        let field = self.field();
        pt.len() == self.nvars()
            && self
                .ideal
                .generators()
                .iter()
                .all(|g| field.is_zero(&g.eval(field, pt)))
    }

    /// A random point, from the parameterization when there is one and by
    /// search on a hypersurface over a finite field otherwise.
    pub fn sample_point(&self, seed: u64) -> Result<Point<F::Elem>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.sample_point_with(&mut rng)
    }

    pub fn sample_point_with<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Point<F::Elem>> {
        let field = self.field();
        for _ in 0..MAX_SAMPLE_REJECTIONS {
            let pt = match &self.param {
                Some(p) => match sample_in(&p.space, rng)? {
                    Some(src) => {
                        let coords = p.map.eval(field, &src.coords);
                        if coords.iter().all(|c| field.is_zero(c)) {
                            continue;
                        }
                        Point::new(coords, src.real && p.map.over_q())
                    }
                    None => continue,
                },
                None => match sample_in(&self.ideal, rng)? {
                    Some(pt) => pt,
                    None => continue,
                },
            };
            if !self.contains_point(&pt.coords) {
                return Err(Error::Membership(format!(
                    "sampled point {} does not satisfy the ideal",
                    pt.format(field)
                )));
            }
            return Ok(pt);
        }
        Err(Error::SamplingFailure(format!(
            "{} rejections while sampling on {}",
            MAX_SAMPLE_REJECTIONS, self.name
        )))
    }
}

/// One attempt at a point in the zero set of `space`; `None` is a rejection.
fn sample_in<F: Field, R: Rng + ?Sized>(space: &Ideal<F>, rng: &mut R) -> Result<Option<Point<F::Elem>>> {
    let field = space.field();
    let n = space.nvars();
    if space.is_zero() {
        let coords: Vec<F::Elem> = (0..n).map(|_| field.random(rng)).collect();
        if coords.iter().all(|c| field.is_zero(c)) {
            return Ok(None);
        }
        return Ok(Some(Point::new(coords, true)));
    }
    let gens = space.generators();
    if gens.len() != 1 {
        return Err(Error::NoSampler(
            "no parameterization and the ideal is not a hypersurface".into(),
        ));
    }
    let f = &gens[0];
    if field.elements().is_none() {
        return Err(Error::NoSampler(
            "hypersurface search needs a finite field".into(),
        ));
    }
    // solve for the variable of highest degree after fixing the others
    let j = (0..n)
        .max_by_key(|&i| (f.terms().iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0), i))
        .unwrap();
    let mut coords: Vec<F::Elem> = (0..n).map(|_| field.random(rng)).collect();
    let mut uni = vec![field.zero(); f.degree().unwrap_or(0) as usize + 1];
    for (m, c) in f.terms() {
        let mut t = c.clone();
        for (i, &e) in m.exponents().iter().enumerate() {
            if i != j && e > 0 {
                t = field.mul(&t, &field.pow(&coords[i], e as u64));
            }
        }
        let e = m.exp(j) as usize;
        uni[e] = field.add(&uni[e], &t);
    }
    let uni = univariate::trim(field, uni);
    if uni.is_empty() {
        return Ok(None);
    }
    let roots = univariate::roots(field, &uni).unwrap_or_default();
    if roots.is_empty() {
        return Ok(None);
    }
    coords[j] = roots[rng.gen_range(0..roots.len())].clone();
    if coords.iter().all(|c| field.is_zero(c)) {
        return Ok(None);
    }
    Ok(Some(Point::new(coords, false)))
}

fn composed_param<F: Field>(source: &Variety<F>, phi: &RationalMap<F>) -> Result<Param<F>> {
    let field = source.field();
    Ok(match source.param() {
        Some(p) => Param {
            space: p.space.clone(),
            map: phi.compose(field, &p.map)?,
        },
        None => Param {
            space: source.ideal().clone(),
            map: phi.clone(),
        },
    })
}

fn check_defined<F: Field>(source: &Variety<F>, phi: &RationalMap<F>) -> Result<()> {
    if phi.source_nvars() != source.nvars() {
        return Err(Error::RingMismatch(format!(
            "map has {} source variables, variety lives in {}",
            phi.source_nvars(),
            source.nvars()
        )));
    }
    for c in phi.components() {
        if !source.ideal().contains(c)? {
            return Ok(());
        }
    }
    Err(Error::Indeterminacy)
}

/// Closure of `φ(source)` by graph elimination: eliminate the source
/// variables from `I(source) + (y_i - φ_i)`, with the `y_i` weighted by
/// the degree of `φ`.
pub fn image_of_map<F: Field>(source: &Variety<F>, phi: &RationalMap<F>) -> Result<Variety<F>> {
    check_defined(source, phi)?;
    let field = source.field();
    let s = phi.source_nvars();
    let t = phi.target_nvars();
    let n = s + t;
    let mut gens: Vec<Polynomial<F::Elem>> = source.ideal().generators().iter().map(|g| g.pad_back(t)).collect();
    for (i, c) in phi.components().iter().enumerate() {
        let y = Polynomial::var(field, n, s + i);
        gens.push(y.sub(field, &c.pad_back(t)));
    }
    let mut weights = vec![1u32; n];
    for w in &mut weights[s..] {
        *w = phi.degree();
    }
    let gb = groebner_basis(field, n, &gens, GbOptions::new(MonomialOrder::Block(s)).with_weights(&weights));
    let elim: Vec<_> = gb
        .iter()
        .filter(|g| !g.involves_front(s))
        .map(|g| g.drop_front(field, s))
        .collect();
    let ideal = Ideal::new(field.clone(), t, elim)?;
    let param = composed_param(source, phi)?;
    let real = source.totally_real() && phi.over_q();
    Variety::new(format!("image of {}", source.name()), ideal, Some(param), real)
}

/// Degree-`t` pieces of the ideal of the image of `φ`, computed as kernels
/// of `S_t -> (source coordinate ring)_{t·e}`. Returns `(I_t basis, minimal
/// generators in degree t)` for `t = 1, 2, ...`.
struct ImagePieces<'a, F: Field> {
    field: F,
    phi: &'a RationalMap<F>,
    space_gb: Vec<Polynomial<F::Elem>>,
    images: HashMap<Monomial, Polynomial<F::Elem>>,
    prev: Vec<Polynomial<F::Elem>>,
    t: u32,
}

impl<'a, F: Field> ImagePieces<'a, F> {
    fn new(space: &Ideal<F>, phi: &'a RationalMap<F>) -> Self {
        let field = space.field().clone();
        let n = phi.target_nvars();
        let mut images = HashMap::new();
        images.insert(Monomial::one(n), Polynomial::constant(&field, phi.source_nvars(), field.one()));
        ImagePieces {
            field,
            phi,
            space_gb: space.groebner_basis(MonomialOrder::Grevlex).to_vec(),
            images,
            prev: Vec::new(),
            t: 0,
        }
    }

    fn next(&mut self) -> Result<(Vec<Polynomial<F::Elem>>, Vec<Polynomial<F::Elem>>)> {
        let field = self.field.clone();
        let n = self.phi.target_nvars();
        self.t += 1;
        let basis = MonomialBasis::new(n, self.t);
        let mut next_images = HashMap::new();
        let mut cols: HashMap<Monomial, usize> = HashMap::new();
        let mut columns: Vec<Vec<(Monomial, F::Elem)>> = Vec::with_capacity(basis.len());
        for m in basis.monomials() {
            let i = (0..n).find(|&i| m.exp(i) > 0).unwrap();
            let lower = m.div(&Monomial::var(n, i));
            let prod = self.images[&lower].mul(&field, &self.phi.components()[i]);
            let img = if self.space_gb.is_empty() {
                prod
            } else {
                reduce(&field, &prod, &self.space_gb, MonomialOrder::Grevlex)?
            };
            for (sm, _) in img.terms() {
                let len = cols.len();
                cols.entry(sm.clone()).or_insert(len);
            }
            columns.push(img.terms().to_vec());
            next_images.insert(m.clone(), img);
        }
        self.images = next_images;
        let mut mat = Matrix::zeros(&field, cols.len(), basis.len());
        for (j, col) in columns.iter().enumerate() {
            for (sm, c) in col {
                mat.set(cols[sm], j, c.clone());
            }
        }
        let piece: Vec<_> = mat.kernel(&field).iter().map(|v| basis.form(&field, v)).collect();
        let lower = times_linear(n, &self.prev);
        let new_idx = complement(&field, &basis, &lower, &piece);
        let gens = new_idx.iter().map(|&i| piece[i].clone()).collect();
        self.prev = piece.clone();
        Ok((piece, gens))
    }
}

/// Closure of `φ(source)` by graded linear algebra. Generators are
/// collected up to degree `bound` and then for as long as the next degree
/// still contributes new minimal generators.
pub fn image_by_interpolation<F: Field>(
    source: &Variety<F>,
    phi: &RationalMap<F>,
    bound: u32,
) -> Result<Variety<F>> {
    check_defined(source, phi)?;
    let field = source.field();
    let space = match source.param() {
        Some(p) => p.space.clone(),
        None => source.ideal().clone(),
    };
    let full = match source.param() {
        Some(p) => phi.compose(field, &p.map)?,
        None => phi.clone(),
    };
    let mut pieces = ImagePieces::new(&space, &full);
    let mut gens = Vec::new();
    let mut bound = bound.max(1);
    loop {
        let (_, new) = pieces.next()?;
        let t = pieces.t;
        if t > bound {
            if new.is_empty() {
                break;
            }
            bound = t;
        }
        if t > MAX_GENERATOR_DEGREE {
            return Err(Error::Precondition(format!(
                "image ideal still gains generators in degree {t}"
            )));
        }
        gens.extend(new);
    }
    let ideal = Ideal::new(field.clone(), phi.target_nvars(), gens)?;
    let param = Param { space, map: full };
    let real = source.totally_real() && phi.over_q();
    Variety::new(format!("image of {}", source.name()), ideal, Some(param), real)
}

pub fn projective_space<F: Field>(field: &F, r: usize) -> Variety<F> {
    let n = r + 1;
    Variety {
        name: format!("P^{r}"),
        ideal: Ideal::zero(field.clone(), n),
        param: Some(Param {
            space: Ideal::zero(field.clone(), n),
            map: RationalMap::identity(field, n),
        }),
        totally_real: true,
        ndc: OnceLock::new(),
    }
}

/// The rational normal scroll `S(a_1, ..., a_k)`: 2x2 minors of the
/// matrix whose i-th block has columns `(x_{b+j}, x_{b+j+1})`,
/// `j < a_i`. Blocks with `a_i = 0` contribute a vertex variable.
pub fn scroll<F: Field>(field: &F, a: &[usize]) -> Result<Variety<F>> {
    if a.is_empty() || a.iter().all(|&x| x == 0) {
        return Err(Error::DegenerateInput("a scroll needs some positive a_i".into()));
    }
    let n: usize = a.iter().map(|x| x + 1).sum();
    let var = |i: usize| Polynomial::var(field, n, i);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    let mut start = 0;
    for &ai in a {
        for j in 0..ai {
            top.push(start + j);
            bottom.push(start + j + 1);
        }
        start += ai + 1;
    }
    let mut gens = Vec::new();
    for i in 0..top.len() {
        for j in i + 1..top.len() {
            let m = var(top[i]).mul(field, &var(bottom[j]));
            gens.push(m.sub(field, &var(top[j]).mul(field, &var(bottom[i]))));
        }
    }
    let ideal = Ideal::new(field.clone(), n, gens)?;
    // source variables: s, t, u_1..u_k, w; component u_i s^(a_i-j) t^j w^(A-a_i)
    let k = a.len();
    let sn = k + 3;
    let big = *a.iter().max().unwrap();
    let mut comps = Vec::with_capacity(n);
    for (i, &ai) in a.iter().enumerate() {
        for j in 0..=ai {
            let mut e = vec![0u16; sn];
            e[0] = (ai - j) as u16;
            e[1] = j as u16;
            e[2 + i] = 1;
            e[sn - 1] = (big - ai) as u16;
            comps.push(Polynomial::monomial(field, Monomial::from_exponents(&e)));
        }
    }
    let map = RationalMap::new(sn, comps, true)?;
    let param = Param {
        space: Ideal::zero(field.clone(), sn),
        map,
    };
    let label: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    Variety::new(format!("S({})", label.join(",")), ideal, Some(param), true)
}

pub fn rational_normal_curve<F: Field>(field: &F, d: usize) -> Result<Variety<F>> {
    if d == 0 {
        return Err(Error::DegenerateInput("degree must be positive".into()));
    }
    Ok(scroll(field, &[d])?.with_name(format!("rational_normal_curve({d})")))
}

/// Quadric hypersurface `x0 x1 + x2^2 + ... + xr^2`, smooth for `r >= 2`.
pub fn quadric_hypersurface<F: Field>(field: &F, r: usize) -> Result<Variety<F>> {
    if r < 2 {
        return Err(Error::DegenerateInput("need r >= 2".into()));
    }
    let n = r + 1;
    let mut q = Polynomial::var(field, n, 0).mul(field, &Polynomial::var(field, n, 1));
    for i in 2..n {
        q = q.add(field, &Polynomial::var(field, n, i).pow(field, 2));
    }
    let ideal = Ideal::new(field.clone(), n, vec![q])?;
    // stereographic parameterization from [1:0:...:0]:
    // x0 = -(y2^2 + ... + yr^2), x1 = y1^2, xi = y1 yi
    let sn = r;
    let y = |i: usize| Polynomial::var(field, sn, i);
    let mut sumsq = Polynomial::zero(sn);
    for i in 1..sn {
        sumsq = sumsq.add(field, &y(i).pow(field, 2));
    }
    let mut comps = vec![sumsq.neg(field), y(0).pow(field, 2)];
    for i in 1..sn {
        comps.push(y(0).mul(field, &y(i)));
    }
    let map = RationalMap::new(sn, comps, true)?;
    let param = Param {
        space: Ideal::zero(field.clone(), sn),
        map,
    };
    Variety::new(format!("quadric in P^{r}"), ideal, Some(param), true)
}

/// The Veronese variety `ν_dd(P^n)`.
pub fn veronese<F: Field>(field: &F, n: usize, dd: u32) -> Result<Variety<F>> {
    if n == 0 || dd == 0 {
        return Err(Error::DegenerateInput("veronese needs n >= 1 and dd >= 1".into()));
    }
    let comps = Monomial::all_of_degree(n + 1, dd)
        .into_iter()
        .map(|m| Polynomial::monomial(field, m))
        .collect();
    let phi = RationalMap::new(n + 1, comps, true)?;
    Ok(image_by_interpolation(&projective_space(field, n), &phi, 2)?.with_name(format!("veronese({n},{dd})")))
}

fn del_pezzo_points<F: Field>(field: &F) -> Vec<Vec<F::Elem>> {
    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
        .iter()
        .map(|p| p.iter().map(|&v| field.from_i64(v)).collect())
        .collect()
}

fn del_pezzo_map<F: Field>(field: &F) -> Result<RationalMap<F>> {
    let cubics = forms_through_points(field, 3, 3, &del_pezzo_points(field));
    RationalMap::new(3, cubics, true)
}

/// The quintic del Pezzo surface in `P^5`: the image of `P^2` under the
/// cubics through `[1:0:0], [0:1:0], [0:0:1], [1:1:1]`.
pub fn del_pezzo_quintic<F: Field>(field: &F) -> Result<Variety<F>> {
    let phi = del_pezzo_map(field)?;
    Ok(image_by_interpolation(&projective_space(field, 2), &phi, 2)?.with_name("del_pezzo_quintic"))
}

/// A threefold scroll of minimal degree containing [`del_pezzo_quintic`]:
/// the union of the planes of the conics that are images of the lines
/// through `[1:0:0]`. Its ideal is given by the 2x2 minors of the matrix
/// `(ℓ · q_j)` with `ℓ ∈ {x1, x2}` and `q_j` the conics through the other
/// three points, written in the coordinates of the del Pezzo embedding.
pub fn del_pezzo_quintic_container<F: Field>(field: &F) -> Result<Variety<F>> {
    let phi = del_pezzo_map(field)?;
    let pts = del_pezzo_points(field);
    let conics = forms_through_points(field, 3, 2, &pts[1..]);
    let basis = MonomialBasis::new(3, 3);
    let cubic_rows: Vec<Vec<F::Elem>> = phi.components().iter().map(|c| basis.dense_coords(field, c)).collect();
    // solve  sum_i a_i * cubic_i = target  for the coefficient vector a
    let a_mat = Matrix::from_rows(cubic_rows).transpose();
    let linear_form = |target: &Polynomial<F::Elem>| -> Result<Polynomial<F::Elem>> {
        let b = basis.dense_coords(field, target);
        let cols = a_mat.cols();
        let mut aug = Matrix::zeros(field, a_mat.rows(), cols + 1);
        for i in 0..a_mat.rows() {
            for j in 0..cols {
                aug.set(i, j, a_mat.get(i, j).clone());
            }
            aug.set(i, cols, b[i].clone());
        }
        let pivots = aug.rref(field);
        if pivots.contains(&cols) {
            return Err(Error::Precondition("product is not in the linear system".into()));
        }
        let mut coeffs = vec![field.zero(); cols];
        for (r, &p) in pivots.iter().enumerate() {
            coeffs[p] = aug.get(r, cols).clone();
        }
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(j, c)| (Monomial::var(cols, j), c))
            .collect();
        Ok(Polynomial::from_terms(field, cols, terms))
    };
    let lines = [Polynomial::var(field, 3, 1), Polynomial::var(field, 3, 2)];
    let mut rows: Vec<Vec<Polynomial<F::Elem>>> = Vec::new();
    for l in &lines {
        rows.push(conics.iter().map(|q| linear_form(&l.mul(field, q))).collect::<Result<_>>()?);
    }
    let mut gens = Vec::new();
    for i in 0..conics.len() {
        for j in i + 1..conics.len() {
            let m = rows[0][i].mul(field, &rows[1][j]).sub(field, &rows[0][j].mul(field, &rows[1][i]));
            gens.push(m);
        }
    }
    let ideal = Ideal::new(field.clone(), 6, gens)?;
    // On the line through [1:0:0] and [0:a:b], φ(s, ta, tb) = t (s^2 C_0 +
    // s t C_1 + t^2 C_2), and the conic's plane is spanned by the C_j.
    // Source variables a, b, u_0, u_1, u_2, e; component
    // Σ u_j C_j(a, b) e^(2-j), homogeneous of degree 4.
    let line = [
        Polynomial::var(field, 4, 0),
        Polynomial::var(field, 4, 1).mul(field, &Polynomial::var(field, 4, 2)),
        Polynomial::var(field, 4, 1).mul(field, &Polynomial::var(field, 4, 3)),
    ];
    let comps = phi
        .components()
        .iter()
        .map(|c| {
            let terms = c
                .substitute(field, &line)
                .terms()
                .iter()
                .map(|(m, v)| {
                    let es = m.exp(0);
                    let mut e = [m.exp(2), m.exp(3), 0, 0, 0, es];
                    e[4 - es as usize] = 1;
                    (Monomial::from_exponents(&e), v.clone())
                })
                .collect();
            Polynomial::from_terms(field, 6, terms)
        })
        .collect();
    let param = Param {
        space: Ideal::zero(field.clone(), 6),
        map: RationalMap::new(6, comps, true)?,
    };
    Variety::new("del_pezzo_quintic_container", ideal, Some(param), true)
}

impl<F: Field> Variety<F> {
    /// Sets the totally-real flag for a variety built from rational data
    /// without a stored parameterization.
    pub fn inherit_real(mut self, real: bool) -> Self {
        self.totally_real = real;
        self
    }
}

/// The Fermat-type quartic `x0^4 + x1^4 - x2^4`, which has real points.
pub fn fermat_quartic<F: Field>(field: &F) -> Polynomial<F::Elem> {
    parse_polynomial(field, 3, "x0^4 + x1^4 - x2^4").expect("literal parses")
}

/// Distinct random points on the plane curve `f = 0`.
pub fn plane_curve_points<F: Field>(
    field: &F,
    f: &Polynomial<F::Elem>,
    count: usize,
    seed: u64,
) -> Result<Vec<Point<F::Elem>>> {
    let curve = Variety::from_ideal("plane curve", Ideal::new(field.clone(), 3, vec![f.clone()])?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Point<F::Elem>> = Vec::new();
    let mut rejections = 0;
    while out.len() < count {
        let p = curve.sample_point_with(&mut rng)?;
        let dup = out.iter().any(|q| {
            Matrix::from_rows(vec![p.coords.clone(), q.coords.clone()]).rank(field) < 2
        });
        if dup {
            rejections += 1;
            if rejections > MAX_SAMPLE_REJECTIONS {
                return Err(Error::SamplingFailure("could not find distinct curve points".into()));
            }
            continue;
        }
        out.push(p);
    }
    Ok(out)
}

/// Embeds the plane curve `f = 0` by the forms of degree `k` through
/// `pts`, modulo `f`. The curve is assumed irreducible.
pub fn plane_curve_reembed<F: Field>(
    field: &F,
    f: &Polynomial<F::Elem>,
    k: u32,
    pts: &[Point<F::Elem>],
) -> Result<Variety<F>> {
    if f.nvars() != 3 || !f.is_homogeneous() || f.is_zero() {
        return Err(Error::Precondition("expected a nonzero ternary form".into()));
    }
    let e = f.degree().unwrap();
    for p in pts {
        if p.coords.len() != 3 || !field.is_zero(&f.eval(field, &p.coords)) {
            return Err(Error::BadBasepoint(p.format(field)));
        }
    }
    let coords: Vec<Vec<F::Elem>> = pts.iter().map(|p| p.coords.clone()).collect();
    let mut forms = forms_through_points(field, 3, k, &coords);
    if k >= e {
        let basis = MonomialBasis::new(3, k);
        let fg = [f.clone()];
        let rows: Vec<Vec<F::Elem>> = forms
            .iter()
            .map(|w| Ok(basis.dense_coords(field, &reduce(field, w, &fg, MonomialOrder::Grevlex)?)))
            .collect::<Result<_>>()?;
        let mut m = Matrix::from_rows(rows);
        let rank = m.rref(field).len();
        forms = m.to_rows()[..rank].iter().map(|v| basis.form(field, v)).collect();
    }
    let binom2 = |x: i64| if x < 0 { 0 } else { (x + 2) * (x + 1) / 2 };
    let expected = binom2(k as i64) - binom2(k as i64 - e as i64) - pts.len() as i64;
    if forms.len() as i64 != expected {
        return Err(Error::NonEmbedding(format!(
            "the points impose dependent conditions ({} forms, expected {expected})",
            forms.len()
        )));
    }
    if forms.len() < 4 {
        return Err(Error::Precondition(format!(
            "linear system has dimension {} < 4",
            forms.len()
        )));
    }
    let plane = Variety::from_ideal("plane curve", Ideal::new(field.clone(), 3, vec![f.clone()])?)
        .inherit_real(pts.iter().all(|p| p.real));
    let phi = RationalMap::new(3, forms, true)?;
    let v = image_by_interpolation(&plane, &phi, 3)?;
    let d = (k * e) as i64 - pts.len() as i64;
    let (n, deg, _) = v.dim_deg_codim()?;
    if n != 1 || deg as i64 != d {
        return Err(Error::NonEmbedding(format!(
            "image has dimension {n} and degree {deg}, expected a curve of degree {d}"
        )));
    }
    // a singular image of the same degree has larger arithmetic genus
    let genus = (e as i64 - 1) * (e as i64 - 2) / 2;
    let hp0 = v.ideal().hilbert_function()?.hp_at(0);
    if hp0 != BigRational::from_integer((1 - genus).into()) {
        return Err(Error::NonEmbedding(format!(
            "image has Hilbert polynomial constant term {hp0}, expected {} for a smooth model",
            1 - genus
        )));
    }
    Ok(v.with_name(format!("plane_curve_reembed(k={k}, {} points)", pts.len())))
}

fn random_binary_form<F: Field, R: Rng + ?Sized>(field: &F, deg: u32, rng: &mut R) -> Polynomial<F::Elem> {
    let terms = (0..=deg)
        .map(|i| {
            let m = Monomial::from_exponents(&[(deg - i) as u16, i as u16]);
            let mut c = rng.gen_range(-COEFF_BOUND..=COEFF_BOUND);
            if i == 0 && c == 0 {
                c = 1;
            }
            (m, field.from_i64(c))
        })
        .collect();
    Polynomial::from_terms(field, 2, terms)
}

/// The line `x2 = ... = xr = 0`, the extremal secant line of [`cmr_curve`].
pub fn cmr_secant_line<F: Field>(field: &F, r: usize) -> Result<Variety<F>> {
    let n = r + 1;
    let gens = (2..n).map(|i| Polynomial::var(field, n, i)).collect();
    let ideal = Ideal::new(field.clone(), n, gens)?;
    let mut comps = vec![Polynomial::var(field, 2, 0), Polynomial::var(field, 2, 1)];
    comps.extend((2..n).map(|_| Polynomial::zero(2)));
    let param = Param {
        space: Ideal::zero(field.clone(), 2),
        map: RationalMap::new(2, comps, true)?,
    };
    Variety::new("secant line", ideal, Some(param), true)
}

/// A rational curve of degree `dd` in `P^r` with a `(dd-r+2)`-secant line,
/// hence of maximal regularity. With `on_scroll` it lies on `S(1, r-2)`.
pub fn cmr_curve<F: Field>(field: &F, r: usize, dd: usize, on_scroll: bool, seed: u64) -> Result<Variety<F>> {
    if r < 4 || dd < r + 2 {
        return Err(Error::Precondition(format!(
            "cmr_curve needs r >= 4 and dd >= r + 2, got r = {r}, dd = {dd}"
        )));
    }
    let m = (dd - r + 2) as u32;
    let line = cmr_secant_line(field, r)?;
    let p1 = projective_space(field, 1);
    let s = Polynomial::var(field, 2, 0);
    let t = Polynomial::var(field, 2, 1);
    let tail = |h: &Polynomial<F::Elem>| -> Vec<Polynomial<F::Elem>> {
        (0..=r - 2)
            .map(|j| h.mul(field, &s.pow(field, (r - 2 - j) as u32)).mul(field, &t.pow(field, j as u32)))
            .collect()
    };
    let mut last_err = String::new();
    for attempt in 0..GENERICITY_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)));
        let comps = if on_scroll {
            let u = random_binary_form(field, dd as u32 - 1, &mut rng);
            let v = random_binary_form(field, m, &mut rng);
            let (ud, vd) = (univariate::dehomogenize(field, &u), univariate::dehomogenize(field, &v));
            if !univariate::is_squarefree(field, &vd) || univariate::degree(&univariate::gcd(field, &ud, &vd)) != Some(0) {
                last_err = "drawn forms are not squarefree and coprime".into();
                continue;
            }
            let mut c = vec![u.mul(field, &s), u.mul(field, &t)];
            c.extend(tail(&v));
            c
        } else {
            let f = random_binary_form(field, dd as u32, &mut rng);
            let g = random_binary_form(field, dd as u32, &mut rng);
            let h = random_binary_form(field, m, &mut rng);
            let hd = univariate::dehomogenize(field, &h);
            let common = univariate::gcd(
                field,
                &univariate::gcd(field, &univariate::dehomogenize(field, &f), &univariate::dehomogenize(field, &g)),
                &hd,
            );
            if !univariate::is_squarefree(field, &hd) || univariate::degree(&common) != Some(0) {
                last_err = "drawn forms are not squarefree and coprime".into();
                continue;
            }
            let mut c = vec![f, g];
            c.extend(tail(&h));
            c
        };
        let phi = RationalMap::new(2, comps, true)?;
        let curve = image_by_interpolation(&p1, &phi, m)?;
        let (n, deg, _) = curve.dim_deg_codim()?;
        if n != 1 || deg != dd as u64 {
            last_err = format!("image has dimension {n} and degree {deg}");
            continue;
        }
        let so = secant_order(&curve, &line)?;
        if so != m as u64 {
            last_err = format!("secant order {so}, expected {m}");
            continue;
        }
        return Ok(curve.with_name(format!("cmr_curve({r},{dd},{on_scroll})")));
    }
    Err(Error::GenericityFailure {
        what: format!("cmr_curve({r},{dd},{on_scroll}): {last_err}"),
        attempts: GENERICITY_ATTEMPTS,
    })
}

/// Length of the scheme `V ∩ L` for a curve `V` and a line `L`.
pub fn secant_order<F: Field>(v: &Variety<F>, l: &Variety<F>) -> Result<u64> {
    if v.nvars() != l.nvars() {
        return Err(Error::RingMismatch("curve and line in different spaces".into()));
    }
    let (ln, ld, _) = l.dim_deg_codim()?;
    if ln != 1 || ld != 1 {
        return Err(Error::Precondition("second argument must be a line".into()));
    }
    if v.dim_deg_codim()?.0 != 1 {
        return Err(Error::Precondition("first argument must be a curve".into()));
    }
    if l.ideal().contains_ideal(v.ideal())? {
        return Err(Error::Containment);
    }
    let field = v.field();
    let n = v.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ec4);
    let terms = (0..n)
        .map(|i| (Monomial::var(n, i), field.from_i64(rng.gen_range(1..=COEFF_BOUND))))
        .collect();
    let h = Polynomial::from_terms(field, n, terms);
    let sat = v.ideal().sum(l.ideal())?.saturate_by(&h)?;
    match sat.hilbert_function() {
        Err(Error::EmptyVariety) => Ok(0),
        Err(e) => Err(e),
        Ok(hd) if hd.dim == 0 => Ok(hd.degree),
        Ok(hd) if hd.dim < 0 => Ok(0),
        Ok(_) => Err(Error::Containment),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn twisted_cubic_two_ways() {
        let q = Rationals;
        let comps = ["x0^3", "x0^2*x1", "x0*x1^2", "x1^3"]
            .iter()
            .map(|s| parse_polynomial(&q, 2, s).unwrap())
            .collect();
        let phi = RationalMap::new(2, comps, true).unwrap();
        let p1 = projective_space(&q, 1);
        let a = image_of_map(&p1, &phi).unwrap();
        let b = image_by_interpolation(&p1, &phi, 2).unwrap();
        assert!(a.ideal().equals(b.ideal()).unwrap());
        assert_eq!(a.dim_deg_codim().unwrap(), (1, 3, 2));
        let rnc = rational_normal_curve(&q, 3).unwrap();
        assert!(rnc.ideal().equals(a.ideal()).unwrap());
        assert!(a.totally_real());
    }

    #[test]
    fn veronese_surface_two_ways() {
        let f = fp();
        let v = veronese(&f, 2, 2).unwrap();
        assert_eq!(v.quadric_basis().unwrap().len(), 6);
        assert_eq!(v.dim_deg_codim().unwrap(), (2, 4, 3));
        let phi = v.param().unwrap().map.clone();
        let g = image_of_map(&projective_space(&f, 2), &phi).unwrap();
        assert!(g.ideal().equals(v.ideal()).unwrap());
        let id = image_of_map(&projective_space(&f, 2), &RationalMap::identity(&f, 3)).unwrap();
        assert!(id.ideal().is_zero());
    }

    #[test]
    fn indeterminacy_is_reported() {
        let q = Rationals;
        let tc = rational_normal_curve(&q, 3).unwrap();
        let phi = RationalMap::new(4, tc.ideal().generators().to_vec(), true).unwrap();
        assert!(matches!(image_of_map(&tc, &phi), Err(Error::Indeterminacy)));
    }

    #[test]
    fn scrolls_have_minimal_degree() {
        let q = Rationals;
        for a in [vec![4], vec![1, 2], vec![2, 2], vec![1, 1, 2], vec![0, 0, 3]] {
            let s = scroll(&q, &a).unwrap();
            let (n, d, c) = s.dim_deg_codim().unwrap();
            assert_eq!(d as i64, c + 1, "{a:?}");
            assert_eq!(n, a.len() as i64, "{a:?}");
            let dim_i2 = s.quadric_basis().unwrap().len() as i64;
            assert_eq!(dim_i2, c * (c + 1) / 2, "{a:?}");
            for seed in 0..5 {
                let p = s.sample_point(seed).unwrap();
                assert!(s.contains_point(&p.coords));
            }
        }
        assert!(matches!(scroll(&q, &[0, 0]), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn quadric_parameterization() {
        let q = Rationals;
        let v = quadric_hypersurface(&q, 4).unwrap();
        assert_eq!(v.dim_deg_codim().unwrap(), (3, 2, 1));
        assert!(v.contains_point(&v.sample_point(3).unwrap().coords));
    }

    #[test]
    fn del_pezzo_and_container() {
        let f = fp();
        let x = del_pezzo_quintic(&f).unwrap();
        assert_eq!(x.dim_deg_codim().unwrap(), (2, 5, 3));
        assert_eq!(x.quadric_basis().unwrap().len(), 5);
        let y = del_pezzo_quintic_container(&f).unwrap();
        assert_eq!(y.dim_deg_codim().unwrap(), (3, 3, 2));
        assert!(x.ideal().contains_ideal(y.ideal()).unwrap());
        let p = x.sample_point(11).unwrap();
        assert!(x.contains_point(&p.coords) && p.real);
    }

    #[test]
    fn points_and_sampling_errors() {
        let q = Rationals;
        let p = parse_point(&q, "[1:-2:1/3]").unwrap();
        assert_eq!(p.format(&q), "[1:-2:1/3]");
        assert!(parse_point(&q, "[0:0]").is_err());
        assert!(parse_point(&q, "1:2").is_err());
        let curve = Variety::from_ideal("c", Ideal::new(q, 3, vec![fermat_quartic(&q)]).unwrap());
        assert!(matches!(curve.sample_point(1), Err(Error::NoSampler(_))));
        let f = fp();
        let pts = plane_curve_points(&f, &fermat_quartic(&f), 5, 9).unwrap();
        assert_eq!(pts.len(), 5);
        for p in &pts {
            assert!(f.is_zero(&fermat_quartic(&f).eval(&f, &p.coords)));
        }
    }

    #[test]
    fn genus_three_models() {
        let f = fp();
        let quartic = fermat_quartic(&f);
        let omega2 = plane_curve_reembed(&f, &quartic, 2, &[]).unwrap();
        assert_eq!(omega2.r(), 5);
        assert_eq!(omega2.dim_deg_codim().unwrap(), (1, 8, 4));
        let v2 = veronese(&f, 2, 2).unwrap();
        assert!(omega2.ideal().contains_ideal(v2.ideal()).unwrap());

        let p = Point::from_ints(&f, &[1, 0, 1]);
        let d7 = plane_curve_reembed(&f, &quartic, 2, &[p]).unwrap();
        assert_eq!(d7.r(), 4);
        assert_eq!(d7.quadric_basis().unwrap().len(), 3);
        assert!(d7.totally_real());

        let bad = Point::from_ints(&f, &[1, 1, 1]);
        assert!(matches!(
            plane_curve_reembed(&f, &quartic, 2, &[bad]),
            Err(Error::BadBasepoint(_))
        ));

        // 2K - p - q identifies the residual points of the line pq
        let q = Point::from_ints(&f, &[0, 1, 1]);
        let p = Point::from_ints(&f, &[1, 0, 1]);
        assert!(matches!(
            plane_curve_reembed(&f, &quartic, 2, &[p, q]),
            Err(Error::NonEmbedding(_))
        ));
    }

    #[test]
    fn secant_orders() {
        let q = Rationals;
        let tc = rational_normal_curve(&q, 3).unwrap();
        let tangent = Variety::from_ideal("tangent", Ideal::parse(q, 4, &["x2", "x3"]).unwrap());
        assert_eq!(secant_order(&tc, &tangent).unwrap(), 2);
        let quartic = rational_normal_curve(&q, 4).unwrap();
        let generic = Variety::from_ideal(
            "line",
            Ideal::parse(q, 5, &["x0 - 2*x1 + x3", "x1 + 3*x2 - x4", "x2 + x3 + 5*x4"]).unwrap(),
        );
        assert_eq!(secant_order(&quartic, &generic).unwrap(), 0);
    }

    #[test]
    fn cmr_contract() {
        let f = fp();
        assert!(matches!(cmr_curve(&f, 4, 5, true, 1), Err(Error::Precondition(_))));
        let c = cmr_curve(&f, 4, 6, false, 3).unwrap();
        assert_eq!(c.dim_deg_codim().unwrap(), (1, 6, 3));
        let line = cmr_secant_line(&f, 4).unwrap();
        assert_eq!(secant_order(&c, &line).unwrap(), 4);
    }
}
