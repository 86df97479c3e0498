//! Buchberger's algorithm over the rationals, run fraction-free on
//! primitive integer polynomials.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::{CompiledOrder, MonomialOrder};
use crate::arith::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

/// Environment variable holding the default S-pair reduction budget.
pub const GB_BUDGET_ENV: &str = "UPPER_CLUSTER_GB_BUDGET";

/// Which critical pair is treated next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SelectionStrategy {
    /// Smallest lcm in the active order.
    Normal,
    /// Smallest sugar degree, ties broken by the normal strategy.
    Sugar,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GbOptions {
    pub strategy: SelectionStrategy,
    /// Maximum number of S-pair reductions per basis computation.
    pub step_budget: Option<u64>,
}

impl Default for GbOptions {
    fn default() -> Self {
        Self {
            strategy: SelectionStrategy::Sugar,
            step_budget: None,
        }
    }
}

impl GbOptions {
    /// Defaults, with the step budget read from [`GB_BUDGET_ENV`] when set.
    pub fn from_env() -> Self {
        let step_budget = std::env::var(GB_BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok());
        Self {
            step_budget,
            ..Self::default()
        }
    }
}

type Term = (Monomial, BigInt);

/// Integer polynomial with terms in increasing order (leading term last).
#[derive(Clone, Debug)]
struct IntPoly {
    terms: Vec<Term>,
}

impl IntPoly {
    fn lead(&self) -> &Term {
        self.terms.last().expect("nonzero polynomial")
    }
}

/// Converts to a primitive integer polynomial; returns `(p_int, s)` with
/// `p_int = s * p`.
fn to_int(p: &Polynomial, ord: &CompiledOrder) -> (IntPoly, Rational) {
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
    }
    let mut terms: Vec<Term> = p
        .terms()
        .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
        .collect();
    terms.sort_by(|a, b| ord.cmp(a.0.exponents(), b.0.exponents()));
    let mut scale = Rational::from_integer(den);
    let mut ip = IntPoly { terms };
    let c = content(&ip.terms, &[]);
    if !c.is_one() && !c.is_zero() {
        for t in &mut ip.terms {
            t.1 = &t.1 / &c;
        }
        scale /= Rational::from_integer(c);
    }
    if ip.terms.last().is_some_and(|t| t.1.is_negative()) {
        for t in &mut ip.terms {
            t.1 = -&t.1;
        }
        scale = -scale;
    }
    (ip, scale)
}

fn to_monic(p: &IntPoly, nvars: usize) -> Polynomial {
    let lc = Rational::from_integer(p.lead().1.clone());
    Polynomial::from_terms(
        nvars,
        p.terms
            .iter()
            .map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()) / &lc)),
    )
}

fn content(a: &[Term], b: &[Term]) -> BigInt {
    let mut g = BigInt::zero();
    for t in a.iter().chain(b.iter()) {
        g = g.gcd(&t.1);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `sa * ma * a - sb * mb * b` for ascending term lists.
fn merge_sub(
    ord: &CompiledOrder,
    a: &[Term],
    sa: &BigInt,
    ma: Option<&Monomial>,
    b: &[Term],
    sb: &BigInt,
    mb: Option<&Monomial>,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let shift = |t: &Term, m: Option<&Monomial>| -> Monomial {
        match m {
            Some(m) => t.0.mul(m),
            None => t.0.clone(),
        }
    };
    let sa_one = sa.is_one();
    let (mut i, mut j) = (0, 0);
    let mut next_a = a.first().map(|t| shift(t, ma));
    let mut next_b = b.first().map(|t| shift(t, mb));
    loop {
        match (&next_a, &next_b) {
            (None, None) => break,
            (Some(_), None) => {
                let m = next_a.take().unwrap();
                let c = if sa_one { a[i].1.clone() } else { &a[i].1 * sa };
                out.push((m, c));
                i += 1;
                next_a = a.get(i).map(|t| shift(t, ma));
            }
            (None, Some(_)) => {
                let m = next_b.take().unwrap();
                out.push((m, -(&b[j].1 * sb)));
                j += 1;
                next_b = b.get(j).map(|t| shift(t, mb));
            }
            (Some(x), Some(y)) => match ord.cmp(x.exponents(), y.exponents()) {
                Ordering::Less => {
                    let m = next_a.take().unwrap();
                    let c = if sa_one { a[i].1.clone() } else { &a[i].1 * sa };
                    out.push((m, c));
                    i += 1;
                    next_a = a.get(i).map(|t| shift(t, ma));
                }
                Ordering::Greater => {
                    let m = next_b.take().unwrap();
                    out.push((m, -(&b[j].1 * sb)));
                    j += 1;
                    next_b = b.get(j).map(|t| shift(t, mb));
                }
                Ordering::Equal => {
                    let m = next_a.take().unwrap();
                    let c = &a[i].1 * sa - &b[j].1 * sb;
                    if !c.is_zero() {
                        out.push((m, c));
                    }
                    i += 1;
                    j += 1;
                    next_a = a.get(i).map(|t| shift(t, ma));
                    next_b = b.get(j).map(|t| shift(t, mb));
                }
            },
        }
    }
    out
}

struct Entry {
    poly: IntPoly,
    lm: Monomial,
    mask: u64,
    sugar: u32,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// A set of reducers sharing one compiled order.
struct Reducers<'a> {
    ord: &'a CompiledOrder,
    entries: Vec<Entry>,
    active: Vec<usize>,
}

impl<'a> Reducers<'a> {
    fn new(ord: &'a CompiledOrder) -> Self {
        Self {
            ord,
            entries: Vec::new(),
            active: Vec::new(),
        }
    }

    fn push(&mut self, poly: IntPoly, sugar: u32) -> usize {
        let lm = poly.lead().0.clone();
        let mask = lm.divmask();
        self.entries.push(Entry { poly, lm, mask, sugar });
        self.entries.len() - 1
    }

    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mask = m.divmask();
        let mut best: Option<usize> = None;
        for &k in &self.active {
            if Some(k) == skip {
                continue;
            }
            let e = &self.entries[k];
            if e.mask & !mask != 0 || !e.lm.divides(m) {
                continue;
            }
            if best.map_or(true, |b| e.poly.terms.len() < self.entries[b].poly.terms.len()) {
                best = Some(k);
            }
        }
        best
    }

    /// Reduces `p`; with `full` also the tail. Tracks `factor` so that the
    /// result equals `factor * p` modulo the reducers, and the sugar degree.
    fn reduce(
        &self,
        p: IntPoly,
        full: bool,
        skip: Option<usize>,
        factor: &mut Rational,
        sugar: &mut u32,
    ) -> IntPoly {
        let mut rest = p.terms;
        let mut done: Vec<Term> = Vec::new();
        let mut since_content = 0usize;
        while let Some((hm, hc)) = rest.last() {
            match self.find_reducer(hm, skip) {
                Some(r) => {
                    let g = &self.entries[r];
                    let (gm, gc) = g.poly.lead();
                    let q = gm.divide_into(hm).expect("reducer divides");
                    let gg = hc.gcd(gc);
                    let a = gc / &gg;
                    let b = hc / &gg;
                    *sugar = (*sugar).max(g.sugar + q.degree());
                    let head_len = rest.len() - 1;
                    let gl = g.poly.terms.len() - 1;
                    rest = merge_sub(
                        self.ord,
                        &rest[..head_len],
                        &a,
                        None,
                        &g.poly.terms[..gl],
                        &b,
                        Some(&q),
                    );
                    if !a.is_one() {
                        for t in &mut done {
                            t.1 *= &a;
                        }
                        *factor *= Rational::from_integer(a);
                    }
                    since_content += 1;
                    if since_content >= 12 {
                        since_content = 0;
                        let c = content(&rest, &done);
                        if !c.is_zero() && !c.is_one() {
                            for t in rest.iter_mut().chain(done.iter_mut()) {
                                t.1 = &t.1 / &c;
                            }
                            *factor /= Rational::from_integer(c);
                        }
                    }
                }
                None => {
                    if !full {
                        break;
                    }
                    done.push(rest.pop().unwrap());
                }
            }
        }
        done.reverse();
        rest.extend(done);
        let c = content(&rest, &[]);
        if !c.is_zero() && !c.is_one() {
            for t in &mut rest {
                t.1 = &t.1 / &c;
            }
            *factor /= Rational::from_integer(c);
        }
        if rest.last().is_some_and(|t| t.1.is_negative()) {
            for t in &mut rest {
                t.1 = -&t.1;
            }
            *factor = -factor.clone();
        }
        IntPoly { terms: rest }
    }
}

/// Normal form of `f` modulo `basis` (full reduction, exact rational result).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let nvars = f.nvars();
    if f.is_zero() {
        return f.clone();
    }
    let ord = order.compile(nvars);
    let mut red = Reducers::new(&ord);
    for g in basis.iter().filter(|g| !g.is_zero()) {
        let (ip, _) = to_int(g, &ord);
        let k = red.push(ip, 0);
        red.active.push(k);
    }
    let (fi, mut factor) = to_int(f, &ord);
    let mut sugar = 0;
    let r = red.reduce(fi, true, None, &mut factor, &mut sugar);
    Polynomial::from_terms(
        nvars,
        r.terms
            .into_iter()
            .map(|(m, c)| (m, Rational::from_integer(c) / &factor)),
    )
}

/// Reduced, monic Groebner basis of the ideal generated by `gens`.
///
/// Uses the product and chain criteria (Gebauer–Möller installation).
/// Output is sorted by increasing leading monomial; the zero ideal gives an
/// empty basis and the unit ideal gives `[1]`.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder, opts: &GbOptions) -> Result<Vec<Polynomial>> {
    let nvars = match gens.first() {
        Some(g) => g.nvars(),
        None => return Ok(Vec::new()),
    };
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::ContextMismatch {
            left: nvars,
            right: g.nvars(),
        });
    }
    let ord = order.compile(nvars);
    let mut inputs: Vec<IntPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_int(g, &ord).0)
        .collect();
    if inputs.is_empty() {
        return Ok(Vec::new());
    }
    inputs.sort_by(|a, b| ord.cmp(a.lead().0.exponents(), b.lead().0.exponents()));

    let mut red = Reducers::new(&ord);
    let mut pairs: Vec<Pair> = Vec::new();
    let unit = || vec![Polynomial::one(nvars)];

    for p in inputs {
        let sugar0 = p.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0);
        let mut factor = Rational::one();
        let mut sugar = sugar0;
        let h = red.reduce(p, false, None, &mut factor, &mut sugar);
        if h.terms.is_empty() {
            continue;
        }
        if h.lead().0.is_one() {
            return Ok(unit());
        }
        let h = red.reduce(h, true, None, &mut factor, &mut sugar);
        update(&mut red, &mut pairs, h, sugar);
    }

    let mut steps: u64 = 0;
    while !pairs.is_empty() {
        let k = select(&ord, &pairs, opts.strategy);
        let pair = pairs.swap_remove(k);
        steps += 1;
        if let Some(budget) = opts.step_budget {
            if steps > budget {
                return Err(Error::BudgetExceeded { budget });
            }
        }
        let (s, mut sugar) = spoly(&red, &pair);
        if s.terms.is_empty() {
            continue;
        }
        let mut factor = Rational::one();
        let h = red.reduce(s, false, None, &mut factor, &mut sugar);
        if h.terms.is_empty() {
            continue;
        }
        if h.lead().0.is_one() {
            return Ok(unit());
        }
        let h = red.reduce(h, true, None, &mut factor, &mut sugar);
        update(&mut red, &mut pairs, h, sugar);
    }

    // Active entries form a minimal basis; interreduce tails.
    let mut active = red.active.clone();
    active.sort_by(|&a, &b| ord.cmp(red.entries[a].lm.exponents(), red.entries[b].lm.exponents()));
    let mut out = Vec::with_capacity(active.len());
    for &k in &active {
        let p = red.entries[k].poly.clone();
        let mut factor = Rational::one();
        let mut sugar = 0;
        let r = red.reduce(p, true, Some(k), &mut factor, &mut sugar);
        out.push(to_monic(&r, nvars));
    }
    Ok(out)
}

fn select(ord: &CompiledOrder, pairs: &[Pair], strategy: SelectionStrategy) -> usize {
    let key_cmp = |a: &Pair, b: &Pair| -> Ordering {
        let by_lcm = ord.cmp(a.lcm.exponents(), b.lcm.exponents());
        let by_sugar = a.sugar.cmp(&b.sugar);
        let primary = match strategy {
            SelectionStrategy::Normal => by_lcm.then(by_sugar),
            SelectionStrategy::Sugar => by_sugar.then(by_lcm),
        };
        primary.then((a.j, a.i).cmp(&(b.j, b.i)))
    };
    let mut best = 0;
    for k in 1..pairs.len() {
        if key_cmp(&pairs[k], &pairs[best]) == Ordering::Less {
            best = k;
        }
    }
    best
}

fn spoly(red: &Reducers<'_>, pair: &Pair) -> (IntPoly, u32) {
    let f = &red.entries[pair.i];
    let g = &red.entries[pair.j];
    let uf = f.lm.divide_into(&pair.lcm).unwrap();
    let ug = g.lm.divide_into(&pair.lcm).unwrap();
    let (_, fc) = f.poly.lead();
    let (_, gc) = g.poly.lead();
    let gg = fc.gcd(gc);
    let a = gc / &gg;
    let b = fc / &gg;
    let fl = f.poly.terms.len() - 1;
    let gl = g.poly.terms.len() - 1;
    let terms = merge_sub(
        red.ord,
        &f.poly.terms[..fl],
        &a,
        Some(&uf),
        &g.poly.terms[..gl],
        &b,
        Some(&ug),
    );
    (IntPoly { terms }, pair.sugar)
}

fn update(red: &mut Reducers<'_>, pairs: &mut Vec<Pair>, h: IntPoly, sugar: u32) {
    let hk = red.push(h, sugar);
    let hlm = red.entries[hk].lm.clone();
    let hsugar = red.entries[hk].sugar;

    // New pairs (g, h) with every active g.
    let mut cands: Vec<(usize, Monomial, bool)> = red
        .active
        .iter()
        .map(|&g| {
            let glm = &red.entries[g].lm;
            (g, glm.lcm(&hlm), glm.is_coprime(&hlm))
        })
        .collect();

    // Chain criterion on new pairs: drop those whose lcm is properly
    // divisible by another new pair's lcm.
    let keep: Vec<bool> = cands
        .iter()
        .map(|(_, l, _)| {
            !cands
                .iter()
                .any(|(_, l2, _)| l2 != l && l2.divides(l))
        })
        .collect();
    let mut filtered: Vec<(usize, Monomial, bool)> = cands
        .drain(..)
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect();
    // Equal lcms: keep one representative, none if any is coprime.
    filtered.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    let mut new_pairs: Vec<(usize, Monomial)> = Vec::new();
    let mut idx = 0;
    while idx < filtered.len() {
        let mut end = idx + 1;
        while end < filtered.len() && filtered[end].1 == filtered[idx].1 {
            end += 1;
        }
        let any_coprime = filtered[idx..end].iter().any(|c| c.2);
        if !any_coprime {
            new_pairs.push((filtered[idx].0, filtered[idx].1.clone()));
        }
        idx = end;
    }

    // Old pairs made redundant by h.
    pairs.retain(|p| {
        if !hlm.divides(&p.lcm) {
            return true;
        }
        let li = red.entries[p.i].lm.lcm(&hlm);
        let lj = red.entries[p.j].lm.lcm(&hlm);
        li == p.lcm || lj == p.lcm
    });

    for (g, lcm) in new_pairs {
        let e = &red.entries[g];
        let sg = e.sugar + e.lm.divide_into(&lcm).unwrap().degree();
        let sh = hsugar + hlm.divide_into(&lcm).unwrap().degree();
        pairs.push(Pair {
            i: g,
            j: hk,
            lcm,
            sugar: sg.max(sh),
        });
    }

    red.active.retain(|&g| !hlm.divides(&red.entries[g].lm));
    red.active.push(hk);
}
