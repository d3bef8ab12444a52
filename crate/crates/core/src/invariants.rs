//! Quadratic persistence with sampling certificates, Pythagoras-number
//! bounds, and classification verdicts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{span_dim, times_linear, MonomialBasis};
use crate::linalg::Matrix;
use crate::projection::projected_quadric_count;
use crate::strands::{strand_table, GlIndex, StrandTable};
use crate::varieties::{Point, Variety, MAX_SAMPLE_REJECTIONS};

/// Tuples drawn per level unless the caller asks otherwise.
pub const DEFAULT_SAMPLES: usize = 3;

/// `dim I(V)_2`.
pub fn quadric_count<F: Field>(v: &Variety<F>) -> Result<usize> {
    v.ideal().graded_dim(2)
}

/// Number of minimal generators of `I(V)` in degree `t`:
/// `dim I_t - dim (S_1 · I_{t-1})`.
pub fn minimal_generator_count<F: Field>(v: &Variety<F>, t: u32) -> Result<usize> {
    let top = v.ideal().graded_dim(t as i64)?;
    if t == 0 {
        return Ok(top);
    }
    let lower = v.ideal().graded_piece_basis(t as i64 - 1)?;
    let products = times_linear(v.nvars(), &lower);
    Ok(top - span_dim(v.field(), &MonomialBasis::new(v.nvars(), t), &products))
}

/// Seed for tuple `sample` at level `k`, a fixed function of the run seed.
pub fn level_seed(seed: u64, k: usize, sample: usize) -> u64 {
    let mut z = seed
        .wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul((k as u64).wrapping_add(1)))
        .wrapping_add(0xbf58_476d_1ce4_e5b9u64.wrapping_mul((sample as u64).wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct QpCertificate<E> {
    pub value: usize,
    /// The tuple of `value` points after which no quadric survives.
    pub witness: Vec<Point<E>>,
    /// Least `dim I(π_Γ X)_2` seen for `|Γ| = 0, 1, ..., value`.
    pub floor_evidence: Vec<usize>,
    /// Seeds of the tuples drawn at each level, level by level.
    pub seeds: Vec<Vec<u64>>,
    pub samples_per_level: usize,
}

/// Printable form of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QpSummary {
    pub value: usize,
    pub witness: Vec<String>,
    pub floor_evidence: Vec<usize>,
    pub seeds: Vec<Vec<u64>>,
    pub samples_per_level: usize,
}

impl<E: Clone> QpCertificate<E> {
    pub fn summary<F: Field<Elem = E>>(&self, field: &F) -> QpSummary {
        QpSummary {
            value: self.value,
            witness: self.witness.iter().map(|p| p.format(field)).collect(),
            floor_evidence: self.floor_evidence.clone(),
            seeds: self.seeds.clone(),
            samples_per_level: self.samples_per_level,
        }
    }
}

/// `k` linearly independent points of `v` drawn from one seed.
pub fn sample_independent_points<F: Field>(v: &Variety<F>, k: usize, seed: u64) -> Result<Vec<Point<F::Elem>>> {
    let field = v.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Point<F::Elem>> = Vec::with_capacity(k);
    let mut rejections = 0;
    while pts.len() < k {
        let p = v.sample_point_with(&mut rng)?;
        let mut rows: Vec<Vec<F::Elem>> = pts.iter().map(|q| q.coords.clone()).collect();
        rows.push(p.coords.clone());
        if Matrix::from_rows(rows).rank(field) == pts.len() + 1 {
            pts.push(p);
        } else {
            rejections += 1;
            if rejections > MAX_SAMPLE_REJECTIONS {
                return Err(Error::SamplingFailure(format!(
                    "could not draw {k} independent points on {}",
                    v.name()
                )));
            }
        }
    }
    Ok(pts)
}

/// The least `k` for which projecting from `k` sampled points of `v`
/// leaves no quadric, the count at each level being the minimum over
/// `samples` independent tuples.
pub fn quadratic_persistence<F: Field>(v: &Variety<F>, samples: usize, seed: u64) -> Result<QpCertificate<F::Elem>> {
    if samples == 0 {
        return Err(Error::Usage("at least one sample per level is needed".into()));
    }
    if !v.is_nondegenerate()? {
        return Err(Error::Degenerate);
    }
    let field = v.field();
    let quadrics = v.quadric_basis()?;
    let mut floor_evidence = vec![quadrics.len()];
    let mut seeds = vec![Vec::new()];
    let mut witness = Vec::new();
    let mut k = 0;
    while *floor_evidence.last().unwrap() > 0 {
        k += 1;
        if k > v.nvars() {
            return Err(Error::GenericityFailure {
                what: format!("quadrics survive projection from {} points", v.nvars()),
                attempts: samples,
            });
        }
        let level: Vec<u64> = (0..samples).map(|s| level_seed(seed, k, s)).collect();
        let results = level
            .par_iter()
            .map(|&s| {
                let pts = sample_independent_points(v, k, s)?;
                let coords: Vec<_> = pts.iter().map(|p| p.coords.clone()).collect();
                let count = projected_quadric_count(field, &quadrics, &coords)?;
                Ok((count, pts))
            })
            .collect::<Result<Vec<_>>>()?;
        let (best, pts) = results
            .into_iter()
            .min_by_key(|(count, _)| *count)
            .expect("samples > 0");
        floor_evidence.push(best);
        seeds.push(level);
        witness = pts;
    }
    Ok(QpCertificate {
        value: k,
        witness,
        floor_evidence,
        seeds,
        samples_per_level: samples,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PyBounds {
    pub lower: i64,
    pub upper: Option<i64>,
    pub lower_source: String,
    pub upper_source: String,
    pub totally_real: bool,
    /// Lower and upper bounds agree, which pins `py(X)`.
    pub collapsed: bool,
}

/// `r + 1 - qp <= py <= dim Y + 1` for a totally real container `Y` of
/// minimal degree. Without a container, a variety of minimal degree is its
/// own and otherwise the ambient space stands in for `Y`.
pub fn py_bounds<F: Field>(v: &Variety<F>, qp: usize, container: Option<&Variety<F>>) -> Result<PyBounds> {
    if !v.totally_real() {
        return Err(Error::TotallyRealRequired);
    }
    let lower = v.r() as i64 + 1 - qp as i64;
    let (upper, upper_source) = match container {
        Some(y) => {
            if !y.totally_real() {
                return Err(Error::TotallyRealRequired);
            }
            if y.nvars() != v.nvars() {
                return Err(Error::BadContainer(format!(
                    "{} lives in a different projective space",
                    y.name()
                )));
            }
            if !v.ideal().contains_ideal(y.ideal())? {
                return Err(Error::BadContainer(format!("{} does not contain {}", y.name(), v.name())));
            }
            let (n, d, c) = y.dim_deg_codim()?;
            if d as i64 != c + 1 {
                return Err(Error::BadContainer(format!(
                    "{} has degree {d} and codimension {c}, not minimal degree",
                    y.name()
                )));
            }
            (n + 1, format!("dim + 1 of the container {}", y.name()))
        }
        None => {
            let (n, d, c) = v.dim_deg_codim()?;
            if d as i64 == c + 1 {
                (n + 1, "dim + 1 of the variety itself (minimal degree)".to_string())
            } else {
                (v.r() as i64 + 1, "ambient projective space".to_string())
            }
        }
    };
    Ok(PyBounds {
        lower,
        upper: Some(upper),
        lower_source: "(*) r + 1 - qp".to_string(),
        upper_source,
        totally_real: true,
        collapsed: lower == upper,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Consistency {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub is_minimal_degree: bool,
    pub is_d_c2: bool,
    pub castelnuovo_divisor: bool,
    pub strand_divisor: Option<bool>,
    pub consistency: Vec<Consistency>,
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree-based verdicts, strand-based ones when a table is given, and the
/// relations between `qp`, `ℓ`, `β_{2,1}` and degree that hold in
/// codimension at least 3.
pub fn classify<F: Field>(v: &Variety<F>, qp: Option<usize>, table: Option<&StrandTable>) -> Result<Verdicts> {
    let (_, d, c) = v.dim_deg_codim()?;
    let d = d as i64;
    let dim_i2 = quadric_count(v)? as i64;
    let strand_divisor = table.map(|t| {
        d >= c + 3 && c >= 2 && t.b1.get(&((c - 1) as usize)).is_some_and(|&b| b != 0)
    });
    let mut consistency = Vec::new();
    let mut check = |name: &str, holds: bool| {
        consistency.push(Consistency {
            name: name.to_string(),
            holds,
        })
    };
    if let Some(qp) = qp {
        let qp = qp as i64;
        check("qp <= c", qp <= c);
        check("qp = c iff d = c + 1", (qp == c) == (d == c + 1));
        if let Some(t) = table {
            check("qp >= ell", qp >= t.ell as i64);
        }
        if c >= 3 {
            if d == c + 2 {
                check("d = c + 2 implies qp = c - 1", qp == c - 1);
            }
            if let Some(t) = table {
                let b21 = t.b1.get(&2).copied().unwrap_or(0);
                check("beta_21 > 0 iff qp >= 2", (b21 > 0) == (qp >= 2));
                if c == 3 && d >= 6 {
                    check("ell = qp", t.ell as i64 == qp);
                }
            }
        }
    }
    Ok(Verdicts {
        is_minimal_degree: d == c + 1,
        is_d_c2: d == c + 2,
        castelnuovo_divisor: d >= 2 * c + 3 && dim_i2 == binomial(c, 2),
        strand_divisor,
        consistency,
    })
}

#[derive(Clone, Debug)]
pub struct ReportOptions<'a, F: Field> {
    pub samples: usize,
    pub seed: u64,
    pub container: Option<&'a Variety<F>>,
    /// Compute the strand table, regularity and strand verdicts.
    pub strands: bool,
}

impl<F: Field> Default for ReportOptions<'_, F> {
    fn default() -> Self {
        ReportOptions {
            samples: DEFAULT_SAMPLES,
            seed: 0,
            container: None,
            strands: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub field: String,
    pub r: usize,
    pub n: i64,
    pub d: u64,
    pub c: i64,
    #[serde(rename = "dimI2")]
    pub dim_i2: usize,
    pub qp: usize,
    pub certificate: QpSummary,
    pub ell: Option<usize>,
    pub gl_index: Option<GlIndex>,
    pub reg: Option<i64>,
    pub strands: Option<StrandTable>,
    pub py_lower: Option<i64>,
    pub py_upper: Option<i64>,
    pub py: Option<PyBounds>,
    /// Values known from the literature for this variety. Never computed.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub known: Vec<KnownValue>,
    pub verdicts: Verdicts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnownValue {
    pub invariant: String,
    pub value: i64,
    pub source: String,
}

/// `(r, n, d, dim I_2)` signatures with a Pythagoras number known from the
/// literature.
const KNOWN_PY: &[((usize, i64, u64, usize), i64, &str)] =
    &[((9, 2, 9, 27), 4, "cubic Veronese surface: py = 4 (literature, not computed)")];

fn known_values(r: usize, n: i64, d: u64, dim_i2: usize) -> Vec<KnownValue> {
    KNOWN_PY
        .iter()
        .filter(|(sig, _, _)| *sig == (r, n, d, dim_i2))
        .map(|(_, value, source)| KnownValue {
            invariant: "py".into(),
            value: *value,
            source: source.to_string(),
        })
        .collect()
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Everything the `invariants` command reports about `v`.
pub fn invariant_report<F: Field>(v: &Variety<F>, opts: &ReportOptions<'_, F>) -> Result<InvariantReport> {
    let (n, d, c) = v.dim_deg_codim()?;
    let dim_i2 = quadric_count(v)?;
    let cert = quadratic_persistence(v, opts.samples, opts.seed)?;
    let table = if opts.strands {
        Some(strand_table(v, c.max(0) as usize + 1, opts.seed)?)
    } else {
        None
    };
    let py = if v.totally_real() {
        Some(py_bounds(v, cert.value, opts.container)?)
    } else {
        None
    };
    let verdicts = classify(v, Some(cert.value), table.as_ref())?;
    Ok(InvariantReport {
        name: v.name().to_string(),
        field: v.field().config().to_string(),
        r: v.r(),
        n,
        d,
        c,
        dim_i2,
        qp: cert.value,
        certificate: cert.summary(v.field()),
        ell: table.as_ref().map(|t| t.ell),
        gl_index: table.as_ref().map(|t| t.gl_index),
        reg: table.as_ref().map(|t| t.reg),
        py_lower: py.as_ref().map(|p| p.lower),
        py_upper: py.as_ref().and_then(|p| p.upper),
        py,
        known: known_values(v.r(), n, d, dim_i2),
        strands: table,
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::varieties::{del_pezzo_quintic, projective_space, quadric_hypersurface, rational_normal_curve, scroll};

    #[test]
    fn quadric_counts() {
        let q = Rationals;
        assert_eq!(quadric_count(&scroll(&q, &[1, 2]).unwrap()).unwrap(), 3);
        assert_eq!(quadric_count(&projective_space(&q, 4)).unwrap(), 0);
        let tc = rational_normal_curve(&q, 3).unwrap();
        assert_eq!(minimal_generator_count(&tc, 2).unwrap(), 3);
        assert_eq!(minimal_generator_count(&tc, 3).unwrap(), 0);
    }

    #[test]
    fn qp_of_minimal_degree_examples() {
        let f = PrimeField::new(32003).unwrap();
        let quad = quadric_hypersurface(&f, 4).unwrap();
        assert_eq!(quadratic_persistence(&quad, 3, 1).unwrap().value, 1);
        let rnc = rational_normal_curve(&f, 5).unwrap();
        let cert = quadratic_persistence(&rnc, 3, 1).unwrap();
        assert_eq!(cert.value, 4);
        assert_eq!(cert.floor_evidence.len(), 5);
        assert!(cert.floor_evidence[..4].iter().all(|&x| x > 0));
        assert_eq!(cert.floor_evidence[4], 0);
        assert_eq!(cert.witness.len(), 4);
        assert_eq!(projected_quadric_count(&f, &rnc.quadric_basis().unwrap(), &cert.witness.iter().map(|p| p.coords.clone()).collect::<Vec<_>>()).unwrap(), 0);
        assert_eq!(quadratic_persistence(&projective_space(&f, 3), 3, 1).unwrap().value, 0);
    }

    #[test]
    fn py_bounds_contract() {
        let q = Rationals;
        let rnc = rational_normal_curve(&q, 4).unwrap();
        let b = py_bounds(&rnc, 3, Some(&rnc)).unwrap();
        assert_eq!((b.lower, b.upper), (2, Some(2)));
        assert!(b.collapsed);
        let own = py_bounds(&rnc, 3, None).unwrap();
        assert_eq!((own.lower, own.upper), (2, Some(2)));
        let dp5 = del_pezzo_quintic(&q).unwrap();
        let amb = py_bounds(&dp5, 2, None).unwrap();
        assert_eq!((amb.lower, amb.upper), (4, Some(6)));
        let other = scroll(&q, &[1, 3]).unwrap();
        assert!(matches!(py_bounds(&rnc, 3, Some(&other)), Err(Error::BadContainer(_))));
    }

    #[test]
    fn verdicts_for_scroll() {
        let f = PrimeField::new(32003).unwrap();
        let s = scroll(&f, &[2, 2]).unwrap();
        let v = classify(&s, Some(3), None).unwrap();
        assert!(v.is_minimal_degree);
        assert!(!v.is_d_c2);
        assert!(v.consistency.iter().all(|c| c.holds));
    }
}
