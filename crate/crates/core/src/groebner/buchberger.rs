//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller installation of new pairs.
//!
//! Pairs are processed in batches of equal (weighted) degree; within a
//! batch they are ordered by their lcm under the working order and then by
//! index, so the output depends only on the input list.

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{normal_form_terms, sub_scaled, OrdTerms, Polynomial, Reducer, Term};

#[derive(Clone, Copy, Debug)]
pub struct GbOptions<'a> {
    pub order: MonomialOrder,
    /// Variable weights for the degree used by the selection strategy.
    pub weights: Option<&'a [u32]>,
    /// Ignore S-pairs and generators above this degree.
    pub degree_bound: Option<u32>,
}

impl<'a> GbOptions<'a> {
    pub fn new(order: MonomialOrder) -> Self {
        GbOptions {
            order,
            weights: None,
            degree_bound: None,
        }
    }

    pub fn with_weights(mut self, w: &'a [u32]) -> Self {
        self.weights = Some(w);
        self
    }

    pub fn truncated(mut self, bound: u32) -> Self {
        self.degree_bound = Some(bound);
        self
    }
}

#[derive(Clone, Debug)]
enum Item {
    Gen(usize),
    Pair(usize, usize),
}

#[derive(Clone, Debug)]
struct Queued {
    item: Item,
    lcm: Monomial,
    degree: u32,
}

struct Engine<'a, F: Field> {
    field: &'a F,
    opts: GbOptions<'a>,
    polys: Vec<Vec<Term<F::Elem>>>,
    leads: Vec<Monomial>,
    masks: Vec<u64>,
    active: Vec<bool>,
}

fn poly_degree(terms: &[Term<impl Clone>], weights: Option<&[u32]>) -> u32 {
    terms
        .iter()
        .map(|(m, _)| m.weighted_degree(weights))
        .max()
        .unwrap_or(0)
}

impl<'a, F: Field> Engine<'a, F> {
    fn reducers(&self) -> Vec<Reducer<'_, F::Elem>> {
        (0..self.polys.len())
            .filter(|&k| self.active[k])
            .map(|k| Reducer {
                lead: &self.leads[k],
                mask: self.masks[k],
                terms: &self.polys[k],
            })
            .collect()
    }

    fn make_monic(&self, mut t: Vec<Term<F::Elem>>) -> Vec<Term<F::Elem>> {
        let lc = t[0].1.clone();
        if !self.field.is_one(&lc) {
            let inv = self.field.inv(&lc);
            for (_, c) in t.iter_mut() {
                *c = self.field.mul(c, &inv);
            }
        }
        t
    }

    fn s_poly(&self, i: usize, j: usize, lcm: &Monomial) -> Vec<Term<F::Elem>> {
        let f = self.field;
        let mi = lcm.div(&self.leads[i]);
        let mj = lcm.div(&self.leads[j]);
        let fi: Vec<Term<F::Elem>> = self.polys[i].iter().map(|(m, c)| (m.mul(&mi), c.clone())).collect();
        // both monic: leading terms cancel
        sub_scaled(f, self.opts.order, &fi, &f.one(), &mj, &self.polys[j])
    }

    /// Adds a new monic basis element and updates the pair queue.
    fn install(&mut self, h: Vec<Term<F::Elem>>, queue: &mut Vec<Queued>) {
        let w = self.opts.weights;
        let hidx = self.polys.len();
        let hlead = h[0].0.clone();
        self.masks.push(hlead.support_mask());
        self.leads.push(hlead.clone());
        self.polys.push(h);
        self.active.push(true);

        let olds: Vec<usize> = (0..hidx).filter(|&k| self.active[k]).collect();
        let cands: Vec<(usize, Monomial, bool)> = olds
            .iter()
            .map(|&g| {
                let lcm = hlead.lcm(&self.leads[g]);
                let coprime = hlead.coprime(&self.leads[g]);
                (g, lcm, coprime)
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<usize> = Vec::new();
        for (a, (_, lcm_a, coprime_a)) in cands.iter().enumerate() {
            if *coprime_a {
                kept.push(a);
                continue;
            }
            let dominated = cands.iter().enumerate().any(|(b, (_, lcm_b, _))| {
                b != a && lcm_b.divides(lcm_a) && (lcm_b != lcm_a || b < a)
            });
            if !dominated {
                kept.push(a);
            }
        }
        // drop pairs whose lcm is shared with a coprime pair, then the
        // coprime pairs themselves (product criterion)
        let mut new_pairs = Vec::new();
        for &a in &kept {
            let (g, lcm, coprime) = &cands[a];
            if *coprime {
                continue;
            }
            let shares_with_coprime = kept
                .iter()
                .any(|&b| b != a && cands[b].2 && cands[b].1 == *lcm);
            if shares_with_coprime {
                continue;
            }
            new_pairs.push(Queued {
                item: Item::Pair(*g, hidx),
                degree: lcm.weighted_degree(w),
                lcm: lcm.clone(),
            });
        }

        // old pairs made redundant by the new lead
        queue.retain(|q| match q.item {
            Item::Gen(_) => true,
            Item::Pair(i, j) => {
                if !hlead.divides(&q.lcm) {
                    return true;
                }
                let li = self.leads[i].lcm(&hlead);
                let lj = self.leads[j].lcm(&hlead);
                li == q.lcm || lj == q.lcm
            }
        });
        queue.extend(new_pairs);

        for &g in &olds {
            if hlead.divides(&self.leads[g]) {
                self.active[g] = false;
            }
        }
    }
}

/// Computes the reduced Gröbner basis of `gens` (all in `nvars` variables).
/// The output is monic under `opts.order` and sorted by increasing leading
/// monomial. With a degree bound the result is a truncated basis, correct
/// in all degrees up to the bound for homogeneous input.
pub fn groebner_basis<F: Field>(
    field: &F,
    nvars: usize,
    gens: &[Polynomial<F::Elem>],
    opts: GbOptions<'_>,
) -> Vec<Polynomial<F::Elem>> {
    let ord = opts.order;
    let inputs: Vec<Vec<Term<F::Elem>>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| OrdTerms::from_poly(g, ord).terms)
        .collect();
    let mut engine = Engine {
        field,
        opts,
        polys: Vec::new(),
        leads: Vec::new(),
        masks: Vec::new(),
        active: Vec::new(),
    };
    let mut queue: Vec<Queued> = inputs
        .iter()
        .enumerate()
        .map(|(k, t)| Queued {
            item: Item::Gen(k),
            lcm: t[0].0.clone(),
            degree: poly_degree(t, opts.weights),
        })
        .collect();

    loop {
        let Some(deg) = queue.iter().map(|q| q.degree).min() else {
            break;
        };
        if opts.degree_bound.is_some_and(|b| deg > b) {
            break;
        }
        let (mut batch, rest): (Vec<Queued>, Vec<Queued>) = queue.into_iter().partition(|q| q.degree == deg);
        queue = rest;
        batch.sort_by(|a, b| {
            ord.cmp(&a.lcm, &b.lcm).then_with(|| item_key(&a.item).cmp(&item_key(&b.item)))
        });
        for q in batch {
            let spoly = match q.item {
                Item::Gen(k) => inputs[k].clone(),
                Item::Pair(i, j) => {
                    // a pair may have lost relevance after an installation in this batch
                    engine.s_poly(i, j, &q.lcm)
                }
            };
            let nf = {
                let reducers = engine.reducers();
                normal_form_terms(field, ord, spoly, &reducers)
            };
            if nf.is_empty() {
                continue;
            }
            let h = engine.make_monic(nf);
            if h[0].0.is_one() {
                return vec![Polynomial::constant(field, nvars, field.one())];
            }
            engine.install(h, &mut queue);
        }
    }

    interreduce(field, nvars, ord, &engine)
}

fn item_key(i: &Item) -> (usize, usize, usize) {
    match *i {
        Item::Gen(k) => (0, k, 0),
        Item::Pair(a, b) => (1, b, a),
    }
}

fn interreduce<F: Field>(field: &F, nvars: usize, ord: MonomialOrder, engine: &Engine<'_, F>) -> Vec<Polynomial<F::Elem>> {
    let idx: Vec<usize> = (0..engine.polys.len()).filter(|&k| engine.active[k]).collect();
    // minimal basis: active leads are pairwise non-dividing, but guard anyway
    let minimal: Vec<usize> = idx
        .iter()
        .copied()
        .filter(|&a| {
            !idx.iter().any(|&b| {
                b != a
                    && engine.leads[b].divides(&engine.leads[a])
                    && (engine.leads[b] != engine.leads[a] || b < a)
            })
        })
        .collect();
    let mut out: Vec<Vec<Term<F::Elem>>> = Vec::with_capacity(minimal.len());
    for &a in &minimal {
        let reducers: Vec<Reducer<'_, F::Elem>> = minimal
            .iter()
            .filter(|&&b| b != a)
            .map(|&b| Reducer {
                lead: &engine.leads[b],
                mask: engine.masks[b],
                terms: &engine.polys[b],
            })
            .collect();
        let p = &engine.polys[a];
        let mut tail = normal_form_terms(field, ord, p[1..].to_vec(), &reducers);
        let mut full = vec![p[0].clone()];
        full.append(&mut tail);
        out.push(full);
    }
    out.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    out.into_iter()
        .map(|t| OrdTerms { terms: t }.to_poly(nvars, ord))
        .collect()
}
