//! Koszul strands of the graded Betti table: `β_{p,1}` from the quadrics,
//! `β_{i,2}` from the coordinate ring, the derived invariants `ℓ(X)` and
//! `a(X)`, regularity via generic initial ideals, and the variety cut out
//! by the syzygy quadrics of a top Koszul class.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{MonomialBasis, SparseVec};
use crate::groebner::Ideal;
use crate::linalg::{Matrix, SparseEchelon};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{reduce, Polynomial};
use crate::varieties::{Variety, COEFF_BOUND, GENERICITY_ATTEMPTS};

/// The `p`-subsets of `{0..n}`, sorted in colexicographic order.
#[derive(Clone, Debug)]
pub struct WedgeBasis {
    subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl WedgeBasis {
    pub fn new(n: usize, p: usize) -> Self {
        let mut subsets = Vec::new();
        let mut cur = Vec::with_capacity(p);
        fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == p {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, p, cur, out);
                cur.pop();
            }
        }
        rec(0, n, p, &mut cur, &mut subsets);
        subsets.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        let index = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        WedgeBasis { subsets, index }
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s).copied()
    }
}

fn sign<F: Field>(field: &F, pos: usize, c: &F::Elem) -> F::Elem {
    if pos.is_multiple_of(2) {
        c.clone()
    } else {
        field.neg(c)
    }
}

/// Rows of the Koszul differential `∧^p V ⊗ Q -> ∧^{p-1} V ⊗ S_{t+1}` for
/// forms `Q` of degree `t`: `e_J ⊗ q -> Σ_k (-1)^k e_{J \ j_k} ⊗ x_{j_k} q`.
/// Row `(J, q)` has index `J_index * |Q| + q_index`.
fn koszul_rows<F: Field>(
    field: &F,
    n: usize,
    p: usize,
    forms: &[Polynomial<F::Elem>],
    target: &MonomialBasis,
) -> Vec<SparseVec<F::Elem>> {
    let dom = WedgeBasis::new(n, p);
    let cod = WedgeBasis::new(n, p.saturating_sub(1));
    let width = target.len();
    let mut rows = Vec::with_capacity(dom.len() * forms.len());
    for s in dom.subsets() {
        for q in forms {
            let mut row: Vec<(usize, F::Elem)> = Vec::new();
            for (k, &j) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(k);
                let base = cod.index_of(&rest).unwrap() * width;
                let xj = Monomial::var(n, j);
                for (m, c) in q.terms() {
                    let col = base + target.index_of(&m.mul(&xj)).unwrap();
                    row.push((col, sign(field, k, c)));
                }
            }
            rows.push(normalize(field, row));
        }
    }
    rows
}

fn normalize<F: Field>(field: &F, mut row: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    row.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(row.len());
    for (i, c) in row {
        match out.last_mut() {
            Some((j, v)) if *j == i => *v = field.add(v, &c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !field.is_zero(c));
    out
}

fn rank_of<F: Field>(field: &F, rows: Vec<SparseVec<F::Elem>>) -> usize {
    let mut ech = SparseEchelon::new(field.clone());
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

fn require_nondegenerate<F: Field>(v: &Variety<F>) -> Result<()> {
    if v.ideal().graded_dim(1)? > 0 {
        return Err(Error::Degenerate);
    }
    Ok(())
}

/// `β_{p,1}` for `p = 1..=max_p` as `dim ker(∧^{p-1} V ⊗ I_2 -> ∧^{p-2} V ⊗ I_3)`.
/// Once a value vanishes all later ones do, so they are filled in as zero.
pub fn betti_strand_one<F: Field>(v: &Variety<F>, max_p: usize) -> Result<BTreeMap<usize, usize>> {
    require_nondegenerate(v)?;
    let field = v.field();
    let n = v.nvars();
    let quadrics = v.quadric_basis()?;
    let cubic_basis = MonomialBasis::new(n, 3);
    let mut out = BTreeMap::new();
    let mut vanished = quadrics.is_empty();
    for p in 1..=max_p {
        if vanished {
            out.insert(p, 0);
            continue;
        }
        let b = if p == 1 {
            quadrics.len()
        } else {
            let rows = koszul_rows(field, n, p - 1, &quadrics, &cubic_basis);
            rows.len() - rank_of(field, rows)
        };
        vanished = b == 0;
        out.insert(p, b);
    }
    Ok(out)
}

/// Standard-monomial model of `(S_X)_t` for `t <= 3`.
struct Quotient<F: Field> {
    field: F,
    n: usize,
    gb: Vec<Polynomial<F::Elem>>,
    standard: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl<F: Field> Quotient<F> {
    fn new(ideal: &Ideal<F>, top: u32) -> Self {
        let field = ideal.field().clone();
        let n = ideal.nvars();
        let gb = ideal.truncated_groebner_basis(MonomialOrder::Grevlex, top).to_vec();
        let leads: Vec<Monomial> = gb.iter().map(|g| g.terms()[0].0.clone()).collect();
        let mut standard = Vec::new();
        let mut index = Vec::new();
        for t in 0..=top {
            let s: Vec<Monomial> = Monomial::all_of_degree(n, t)
                .into_iter()
                .filter(|m| !leads.iter().any(|l| l.divides(m)))
                .collect();
            index.push(s.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect());
            standard.push(s);
        }
        Quotient {
            field,
            n,
            gb,
            standard,
            index,
        }
    }

    fn dim(&self, t: usize) -> usize {
        self.standard[t].len()
    }

    /// Normal form of `x_j · m` in standard-monomial coordinates of degree `t + 1`.
    fn times_var(&self, j: usize, m: &Monomial, t: usize) -> Result<Vec<(usize, F::Elem)>> {
        let prod = Polynomial::monomial(&self.field, m.mul(&Monomial::var(self.n, j)));
        let nf = reduce(&self.field, &prod, &self.gb, MonomialOrder::Grevlex)?;
        Ok(nf.terms().iter().map(|(mm, c)| (self.index[t + 1][mm], c.clone())).collect())
    }

    /// Rank of `∧^p V ⊗ (S_X)_t -> ∧^{p-1} V ⊗ (S_X)_{t+1}`.
    fn koszul_rank(&self, p: usize, t: usize, cache: &mut HashMap<(usize, usize, Monomial), Vec<(usize, F::Elem)>>) -> Result<usize> {
        if p == 0 || self.dim(t) == 0 {
            return Ok(0);
        }
        let field = &self.field;
        let dom = WedgeBasis::new(self.n, p);
        let cod = WedgeBasis::new(self.n, p - 1);
        let width = self.dim(t + 1);
        let mut ech = SparseEchelon::new(field.clone());
        for s in dom.subsets() {
            for m in &self.standard[t] {
                let mut row = Vec::new();
                for (k, &j) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(k);
                    let base = cod.index_of(&rest).unwrap() * width;
                    let key = (j, t, m.clone());
                    if !cache.contains_key(&key) {
                        let v = self.times_var(j, m, t)?;
                        cache.insert(key.clone(), v);
                    }
                    for (col, c) in &cache[&key] {
                        row.push((base + col, sign(field, k, c)));
                    }
                }
                ech.insert(normalize(field, row));
            }
        }
        Ok(ech.rank())
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `β_{i,2}` for `i = 0..=bound` (clipped to `c + 1`), the homology of
/// `∧^{i+1} V ⊗ (S_X)_1 -> ∧^i V ⊗ (S_X)_2 -> ∧^{i-1} V ⊗ (S_X)_3`.
/// Returns the values and the bound actually used.
pub fn betti_strand_two<F: Field>(v: &Variety<F>, bound: usize) -> Result<(BTreeMap<usize, usize>, usize)> {
    let (_, _, c) = v.dim_deg_codim()?;
    let bound = bound.min(c.max(0) as usize + 1);
    let q = Quotient::new(v.ideal(), 3);
    let n = v.nvars();
    let mut cache = HashMap::new();
    let mut out = BTreeMap::new();
    for i in 0..=bound {
        let chains = binomial(n, i) * q.dim(2);
        let r_out = q.koszul_rank(i, 2, &mut cache)?;
        let r_in = q.koszul_rank(i + 1, 1, &mut cache)?;
        out.insert(i, chains - r_out - r_in);
    }
    Ok((out, bound))
}

/// `ℓ(X) = min{i >= 1 : β_{i,1} = 0} - 1`. `None` if no computed value
/// vanishes.
pub fn ell_from(b1: &BTreeMap<usize, usize>) -> Option<usize> {
    b1.iter().find(|(_, &b)| b == 0).map(|(&p, _)| p - 1)
}

/// The Green–Lazarsfeld index `a(X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum GlIndex {
    Finite(usize),
    /// All computed `β_{i,2}` vanish but nothing certifies the rest.
    AtLeast(usize),
    Infinite,
}

impl std::fmt::Display for GlIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GlIndex::Finite(j) => write!(f, "{j}"),
            GlIndex::AtLeast(j) => write!(f, ">={j}"),
            GlIndex::Infinite => write!(f, "inf"),
        }
    }
}

/// `max{j : β_{i,2} = 0 for i <= j}`; infinite when every computed value
/// vanishes and the regularity is at most 2.
pub fn gl_index_from(b2: &BTreeMap<usize, usize>, reg: Option<i64>) -> GlIndex {
    match b2.iter().find(|(_, &b)| b != 0) {
        Some((&i, _)) if i == 0 => GlIndex::Finite(0),
        Some((&i, _)) => GlIndex::Finite(i - 1),
        None if reg.is_some_and(|r| r <= 2) => GlIndex::Infinite,
        None => GlIndex::AtLeast(b2.keys().last().copied().unwrap_or(0)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandTable {
    pub b1: BTreeMap<usize, usize>,
    pub b2: BTreeMap<usize, usize>,
    pub b2_bound: usize,
    pub ell: usize,
    pub gl_index: GlIndex,
    pub reg: i64,
}

impl StrandTable {
    /// Two-row Betti-style table: row `j = 1` holds `β_{p,1}`, row `j = 2`
    /// holds `β_{i,2}`.
    pub fn render(&self) -> String {
        let cols = self
            .b1
            .keys()
            .chain(self.b2.keys())
            .copied()
            .max()
            .unwrap_or(0);
        let mut s = String::from("      ");
        for i in 0..=cols {
            s.push_str(&format!("{i:>6}"));
        }
        s.push('\n');
        for (j, row) in [(1, &self.b1), (2, &self.b2)] {
            s.push_str(&format!("{j:>4}: "));
            for i in 0..=cols {
                match row.get(&i) {
                    Some(b) => s.push_str(&format!("{b:>6}")),
                    None => s.push_str(&format!("{:>6}", "-")),
                }
            }
            s.push('\n');
        }
        s.push_str(&format!("ell = {}, a = {}, reg = {}\n", self.ell, self.gl_index, self.reg));
        s
    }
}

/// Full strand table with `β_{p,1}` for `p <= c` and `β_{i,2}` for
/// `i <= b2_bound`.
pub fn strand_table<F: Field>(v: &Variety<F>, b2_bound: usize, seed: u64) -> Result<StrandTable> {
    let (_, _, c) = v.dim_deg_codim()?;
    let c = c.max(0) as usize;
    let mut b1 = betti_strand_one(v, c + 1)?;
    let ell = ell_from(&b1).unwrap_or(c);
    b1.remove(&(c + 1));
    let reg = regularity_via_gin(v, seed)?;
    let (b2, b2_bound) = betti_strand_two(v, b2_bound)?;
    let gl_index = gl_index_from(&b2, Some(reg));
    Ok(StrandTable {
        b1,
        b2,
        b2_bound,
        ell,
        gl_index,
        reg,
    })
}

fn random_invertible<F: Field, R: Rng>(field: &F, n: usize, rng: &mut R) -> Matrix<F::Elem> {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| field.from_i64(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))).collect())
            .collect();
        let m = Matrix::from_rows(rows);
        if m.rank(field) == n {
            return m;
        }
    }
}

/// Minimal generators of a monomial ideal given by generators.
fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Whether a monomial ideal is strongly stable: `x_i m / x_j` lies in it
/// for every generator `m`, every `x_j | m` and every `i < j`.
pub fn is_strongly_stable(gens: &[Monomial]) -> bool {
    let set: HashSet<&Monomial> = gens.iter().collect();
    let member = |m: &Monomial| set.contains(m) || gens.iter().any(|g| g.divides(m));
    for m in gens {
        for j in 0..m.nvars() {
            if m.exp(j) == 0 {
                continue;
            }
            for i in 0..j {
                let mut e = m.exponents().to_vec();
                e[j] -= 1;
                e[i] += 1;
                if !member(&Monomial::from_exponents(&e)) {
                    return false;
                }
            }
        }
    }
    true
}

fn gin_generators<F: Field, R: Rng>(v: &Variety<F>, rng: &mut R) -> Result<Vec<Monomial>> {
    let field = v.field();
    let m = random_invertible(field, v.nvars(), rng);
    let moved = v.ideal().linear_substitution(&m)?;
    let gb = moved.groebner_basis(MonomialOrder::Grevlex);
    let leads: Vec<Monomial> = gb.iter().map(|g| g.terms()[0].0.clone()).collect();
    Ok(minimalize(&leads))
}

/// `reg(X)` as the largest generator degree of the generic initial ideal
/// under grevlex. The zero ideal has regularity 0 by convention.
pub fn regularity_via_gin<F: Field>(v: &Variety<F>, seed: u64) -> Result<i64> {
    if v.ideal().is_zero() {
        return Ok(0);
    }
    if v.ideal().is_unit() {
        return Err(Error::EmptyVariety);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = String::new();
    for _ in 0..GENERICITY_ATTEMPTS {
        let a = gin_generators(v, &mut rng)?;
        let b = gin_generators(v, &mut rng)?;
        if !is_strongly_stable(&a) || !is_strongly_stable(&b) {
            last = "initial ideal is not strongly stable".into();
            continue;
        }
        if a != b {
            last = "two generic initial ideals differ".into();
            continue;
        }
        return Ok(a.iter().map(|m| m.degree() as i64).max().unwrap_or(0));
    }
    Err(Error::GenericityFailure {
        what: format!("regularity of {}: {last}", v.name()),
        attempts: GENERICITY_ATTEMPTS,
    })
}

/// Kernel of `∧^{p-1} V ⊗ I_2 -> ∧^{p-2} V ⊗ S_3` as coefficient vectors
/// indexed like [`koszul_rows`].
fn strand_kernel<F: Field>(field: &F, n: usize, p: usize, quadrics: &[Polynomial<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let cubic_basis = MonomialBasis::new(n, 3);
    let rows = koszul_rows(field, n, p - 1, quadrics, &cubic_basis);
    let ncols = WedgeBasis::new(n, p.saturating_sub(2)).len() * cubic_basis.len();
    // kernel of the transpose: vectors v with sum_r v_r row_r = 0
    let mut dense = Matrix::zeros(field, ncols, rows.len());
    for (r, row) in rows.iter().enumerate() {
        for (c, val) in row {
            dense.set(*c, r, val.clone());
        }
    }
    dense.kernel(field)
}

/// The quadrics `q_J` of a class `γ = Σ e_J ⊗ q_J`.
fn class_quadrics<F: Field>(
    field: &F,
    n: usize,
    gamma: &[F::Elem],
    quadrics: &[Polynomial<F::Elem>],
) -> Vec<Polynomial<F::Elem>> {
    let m = quadrics.len();
    gamma
        .chunks(m)
        .map(|coeffs| {
            coeffs
                .iter()
                .zip(quadrics)
                .filter(|(c, _)| !field.is_zero(c))
                .fold(Polynomial::zero(n), |acc, (c, q)| acc.add(field, &q.scale(field, c)))
        })
        .filter(|q| !q.is_zero())
        .collect()
}

/// The variety cut out by the quadrics of a class in `K_{c-1,1}(X)`:
/// contracting `γ ∈ ∧^{c-2} V ⊗ I_2` against the dual wedges yields its
/// coefficient quadrics, which generate the ideal of a variety `Y ⊇ X` of
/// minimal degree with `dim Y = dim X + 1` when `X` is a divisor on such a
/// variety. All of this is verified before returning.
pub fn extract_syzygy_variety<F: Field>(v: &Variety<F>, seed: u64) -> Result<Variety<F>> {
    require_nondegenerate(v)?;
    let field = v.field();
    let (n, d, c) = v.dim_deg_codim()?;
    if c < 2 {
        return Err(Error::Precondition("codimension must be at least 2".into()));
    }
    if d as i64 <= c + 1 {
        return Err(Error::Precondition(format!(
            "degree {d} with codimension {c}: extraction needs d >= c + 2"
        )));
    }
    let nv = v.nvars();
    let quadrics = v.quadric_basis()?;
    let p = (c - 1) as usize;
    let kernel = strand_kernel(field, nv, p, &quadrics);
    if kernel.is_empty() {
        return Err(Error::Precondition("β_{c-1,1} vanishes".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vec<F::Elem>> = vec![kernel[0].clone()];
    for _ in 0..GENERICITY_ATTEMPTS {
        let mut g = vec![field.zero(); kernel[0].len()];
        for k in &kernel {
            let s = field.from_i64(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND));
            for (gi, ki) in g.iter_mut().zip(k) {
                *gi = field.add(gi, &field.mul(&s, ki));
            }
        }
        candidates.push(g);
    }
    let mut last = String::new();
    let mut hyper_rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa5a5);
    for gamma in candidates {
        let qs = class_quadrics(field, nv, &gamma, &quadrics);
        if qs.is_empty() {
            continue;
        }
        let j = Ideal::new(field.clone(), nv, qs)?;
        let h_terms = (0..nv)
            .map(|i| (Monomial::var(nv, i), field.from_i64(hyper_rng.gen_range(1..=COEFF_BOUND))))
            .collect();
        let h = Polynomial::from_terms(field, nv, h_terms);
        let sat = j.saturate_by(&h)?;
        let (yn, yd, yc) = match sat.dim_deg_codim() {
            Ok(t) => t,
            Err(e) => {
                last = e.to_string();
                continue;
            }
        };
        if yn != n + 1 || yd as i64 != yc + 1 {
            last = format!("candidate has (n, d, c) = ({yn}, {yd}, {yc})");
            continue;
        }
        if !v.ideal().contains_ideal(&sat)? {
            last = "candidate ideal is not contained in I(X)".into();
            continue;
        }
        let y = Variety::from_ideal(format!("syzygy variety of {}", v.name()), sat).inherit_real(v.totally_real());
        return Ok(y);
    }
    Err(Error::ExtractionFailure(last))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::varieties::{projective_space, rational_normal_curve, scroll};

    fn eagon_northcott(c: usize, p: usize) -> usize {
        p * binomial(c + 1, p + 1)
    }

    #[test]
    fn colex_order() {
        let w = WedgeBasis::new(4, 2);
        assert_eq!(w.subsets()[..4], [vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3]]);
        assert_eq!(w.len(), 6);
    }

    #[test]
    fn minimal_degree_strands() {
        let q = Rationals;
        for v in [rational_normal_curve(&q, 3).unwrap(), scroll(&q, &[1, 2]).unwrap(), rational_normal_curve(&q, 4).unwrap()] {
            let (_, _, c) = v.dim_deg_codim().unwrap();
            let c = c as usize;
            let b1 = betti_strand_one(&v, c + 1).unwrap();
            for p in 1..=c {
                assert_eq!(b1[&p], eagon_northcott(c, p), "{} p={p}", v.name());
            }
            assert_eq!(b1[&(c + 1)], 0);
            assert_eq!(ell_from(&b1), Some(c));
            let (b2, _) = betti_strand_two(&v, c + 1).unwrap();
            assert!(b2.values().all(|&b| b == 0));
            assert_eq!(regularity_via_gin(&v, 1).unwrap(), 2);
        }
    }

    #[test]
    fn projective_space_conventions() {
        let q = Rationals;
        let p = projective_space(&q, 3);
        assert_eq!(regularity_via_gin(&p, 0).unwrap(), 0);
        let b1 = betti_strand_one(&p, 3).unwrap();
        assert!(b1.values().all(|&b| b == 0));
        let (b2, _) = betti_strand_two(&p, 3).unwrap();
        assert!(b2.values().all(|&b| b == 0));
    }

    #[test]
    fn gl_index_regimes() {
        let b: BTreeMap<usize, usize> = [(0, 0), (1, 0), (2, 3)].into_iter().collect();
        assert_eq!(gl_index_from(&b, Some(3)), GlIndex::Finite(1));
        let z: BTreeMap<usize, usize> = [(0, 0), (1, 0)].into_iter().collect();
        assert_eq!(gl_index_from(&z, Some(2)), GlIndex::Infinite);
        assert_eq!(gl_index_from(&z, Some(4)), GlIndex::AtLeast(1));
    }

    #[test]
    fn strongly_stable_check() {
        let m = |e: &[u16]| Monomial::from_exponents(e);
        assert!(is_strongly_stable(&[m(&[2, 0]), m(&[1, 1])]));
        assert!(!is_strongly_stable(&[m(&[0, 2])]));
    }

    #[test]
    fn degenerate_rejected() {
        let f = PrimeField::new(32003).unwrap();
        let v = Variety::from_ideal("plane", Ideal::parse(f, 4, &["x3"]).unwrap());
        assert!(matches!(betti_strand_one(&v, 2), Err(Error::Degenerate)));
        let mc = rational_normal_curve(&f, 4).unwrap();
        assert!(matches!(extract_syzygy_variety(&mc, 1), Err(Error::Precondition(_))));
    }
}
