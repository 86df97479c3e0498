use std::sync::{Arc, OnceLock};

use super::generators::GeneratorSet;
use crate::arith::{LaurentPolynomial, Monomial, Polynomial};
use crate::cluster::{totally_coprime_certificate, CoprimeCertificate, Seed};
use crate::error::{Error, Result};
use crate::groebner::{saturate_element, GbOptions, GroebnerIdeal, MonomialOrder, SubalgebraMembership};

/// Knobs shared by the presentation pipeline.
#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Order for kernel bases, normal forms and printed relations.
    pub order: MonomialOrder,
    pub gb: GbOptions,
    /// Treat the cluster algebra as totally coprime without a certificate.
    pub assume_totally_coprime: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            order: MonomialOrder::DegRevLex,
            gb: GbOptions::from_env(),
            assume_totally_coprime: false,
        }
    }
}

/// A candidate ring `S` presented as a quotient of the ambient polynomial
/// ring `[x_1..x_m | y_1..y_p | f_1..f_k | f̄_1..f̄_k]` by its kernel.
pub struct PresentedRing {
    seed_names: Vec<String>,
    m: usize,
    p: usize,
    k: usize,
    generators: GeneratorSet,
    ambient_names: Vec<String>,
    images: Vec<LaurentPolynomial>,
    config: EngineConfig,
    kernel: GroebnerIdeal,
    reduced_kernel: GroebnerIdeal,
    certificate: CoprimeCertificate,
    membership: OnceLock<Result<Arc<SubalgebraMembership>>>,
}

impl std::fmt::Debug for PresentedRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PresentedRing")
            .field("ambient", &self.ambient_names)
            .field("kernel", &self.kernel)
            .finish()
    }
}

impl PresentedRing {
    pub fn nvars(&self) -> usize {
        self.ambient_names.len()
    }

    pub fn ambient_names(&self) -> &[String] {
        &self.ambient_names
    }

    pub fn seed_names(&self) -> &[String] {
        &self.seed_names
    }

    pub fn mutable_count(&self) -> usize {
        self.m
    }

    pub fn frozen_count(&self) -> usize {
        self.k
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn kernel(&self) -> &GroebnerIdeal {
        &self.kernel
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.config.order
    }

    pub fn certificate(&self) -> CoprimeCertificate {
        self.certificate
    }

    /// Results hold only under the total-coprimality hypothesis.
    pub fn is_conditional(&self) -> bool {
        !self.certificate.is_certified()
    }

    pub fn tag_slots(&self) -> std::ops::Range<usize> {
        self.m..self.m + self.p
    }

    pub fn frozen_slots(&self) -> std::ops::Range<usize> {
        self.m + self.p..self.m + self.p + self.k
    }

    pub fn frozen_inverse_slots(&self) -> std::ops::Range<usize> {
        self.m + self.p + self.k..self.nvars()
    }

    /// Image of each ambient variable in the initial Laurent ring.
    pub fn images(&self) -> &[LaurentPolynomial] {
        &self.images
    }

    /// Evaluates an ambient polynomial in the initial Laurent ring.
    pub fn image_of(&self, p: &Polynomial) -> Result<LaurentPolynomial> {
        LaurentPolynomial::compose(p, &self.images)
    }

    /// `F = x_1⋯x_m` as an ambient polynomial.
    pub fn mutable_product(&self) -> Polynomial {
        let mut e = vec![0u32; self.nvars()];
        for x in e.iter_mut().take(self.m) {
            *x = 1;
        }
        Polynomial::monomial(Monomial::from_exponents(&e))
    }

    /// Ambient slot of seed variable `i`.
    pub fn slot_of_seed_var(&self, i: usize) -> usize {
        if i < self.m {
            i
        } else {
            self.m + self.p + (i - self.m)
        }
    }

    /// Generators of `S` as Laurent polynomials: `x_1..x_m, y_1..y_p`.
    pub fn ring_generators(&self) -> Vec<LaurentPolynomial> {
        self.images[..self.m + self.p].to_vec()
    }

    /// Membership tester for `S` over the Laurent ring of the frozen
    /// variables. Witnesses live in the ambient ring.
    pub fn membership(&self) -> Result<Arc<SubalgebraMembership>> {
        self.membership
            .get_or_init(|| {
                let coeff: Vec<usize> = (self.m..self.m + self.k).collect();
                SubalgebraMembership::new(&self.ring_generators(), &coeff, &self.config.gb).map(Arc::new)
            })
            .clone()
    }

    /// The kernel restricted to `[x | y | f]`, i.e. without the inverse
    /// slots. Localizing it at the frozen variables gives the kernel.
    pub fn reduced_kernel(&self) -> &GroebnerIdeal {
        &self.reduced_kernel
    }

    /// Multiplies `r` by the least frozen monomial that turns every `f̄`
    /// into a polynomial in `f`, substitutes `f̄ = f^{-1}`, and drops the
    /// inverse slots.
    pub fn without_frozen_inverses(&self, r: &Polynomial) -> Polynomial {
        let n = self.nvars();
        let n0 = n - self.k;
        let bars = self.frozen_inverse_slots();
        let mut shift = vec![0u32; n];
        for (m, _) in r.terms() {
            for (j, v) in bars.clone().enumerate() {
                shift[self.m + self.p + j] = shift[self.m + self.p + j].max(m.exponent(v));
            }
        }
        let terms = r.terms().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            for (j, v) in bars.clone().enumerate() {
                let f = self.m + self.p + j;
                e[f] = e[f] + shift[f] - e[v];
            }
            e.truncate(n0);
            (Monomial::from_exponents(&e), c.clone())
        });
        Polynomial::from_terms(n0, terms)
    }

    /// [`Self::without_frozen_inverses`] back in the ambient ring with its
    /// monomial content removed. Returns zero for `f f̄ - 1`.
    pub fn clear_frozen_inverses(&self, r: &Polynomial) -> Polynomial {
        let p = self.without_frozen_inverses(r).extend(self.k);
        let content = p.monomial_content();
        p.divide_monomial(&content).expect("content divides")
    }

    /// `f_j f̄_j - 1` for every frozen variable.
    pub fn inverse_relations(&self) -> Vec<Polynomial> {
        let n = self.nvars();
        self.frozen_slots()
            .zip(self.frozen_inverse_slots())
            .map(|(f, g)| &(&Polynomial::var(n, f) * &Polynomial::var(n, g)) - &Polynomial::one(n))
            .collect()
    }
}

/// [`build_presentation_with`] under the default configuration.
pub fn build_presentation(seed: &Seed, gens: &GeneratorSet) -> Result<PresentedRing> {
    build_presentation_with(seed, gens, &EngineConfig::default())
}

/// Builds `S̃`, the ideal `Ĩ = (y_i x^{α_i} - N_i, f f̄ - 1)` and the kernel
/// `I = (Ĩ : (x_1⋯x_m)^∞)`.
pub fn build_presentation_with(seed: &Seed, gens: &GeneratorSet, config: &EngineConfig) -> Result<PresentedRing> {
    let n = seed.n();
    let m = seed.m();
    let k = n - m;
    let p = gens.len();
    for g in gens.iter() {
        if g.expr.nvars() != n {
            return Err(Error::ContextMismatch { left: n, right: g.expr.nvars() });
        }
        if g.expr.is_zero() {
            return Err(Error::DegenerateGenerator(g.name.clone()));
        }
        if seed.names().contains(&g.name) {
            return Err(Error::InvalidSeed(format!("generator name {} clashes with a seed variable", g.name)));
        }
    }
    let seed_names = seed.names().to_vec();
    let mut ambient_names: Vec<String> = seed_names[..m].to_vec();
    ambient_names.extend(gens.names());
    ambient_names.extend(seed_names[m..].iter().cloned());
    for f in &seed_names[m..] {
        let bar = {
            let base = format!("{f}_inv");
            let mut cand = base.clone();
            let mut i = 1;
            while ambient_names.contains(&cand) {
                cand = format!("{base}{i}");
                i += 1;
            }
            cand
        };
        ambient_names.push(bar);
    }
    let nv = ambient_names.len();

    let mut images: Vec<LaurentPolynomial> = (0..m).map(|i| LaurentPolynomial::var(n, i)).collect();
    images.extend(gens.exprs());
    images.extend((m..n).map(|i| LaurentPolynomial::var(n, i)));
    for i in m..n {
        images.push(LaurentPolynomial::var(n, i).inverse().expect("monomial"));
    }

    // Ĩ is built without the inverse slots, clearing frozen denominators
    // into the frozen variables, then saturated by F f_1⋯f_k. Adjoining
    // f f̄ - 1 afterwards gives the same kernel in a smaller ring.
    let nv0 = m + p + k;
    let slot = |i: usize| if i < m { i } else { m + p + (i - m) };
    let seed_map: Vec<usize> = (0..n).map(slot).collect();
    let mut tilde = Vec::with_capacity(p);
    for (j, g) in gens.iter().enumerate() {
        let den = g.expr.denominator();
        let mut lhs_exps = vec![0u32; nv0];
        for (i, &e) in den.exponents().iter().enumerate() {
            lhs_exps[slot(i)] = e;
        }
        let lhs = Polynomial::var(nv0, m + j).mul_monomial(&Monomial::from_exponents(&lhs_exps));
        tilde.push(&lhs - &g.expr.numerator().remap(nv0, &seed_map));
    }
    let mut ring = PresentedRing {
        seed_names,
        m,
        p,
        k,
        generators: gens.clone(),
        ambient_names,
        images,
        config: config.clone(),
        kernel: GroebnerIdeal::with_options(nv, Vec::new(), config.gb.clone())?,
        reduced_kernel: GroebnerIdeal::with_options(nv0, Vec::new(), config.gb.clone())?,
        certificate: totally_coprime_certificate(seed.matrix()),
        membership: OnceLock::new(),
    };
    let mut sat = Polynomial::one(nv0);
    for i in (0..m).chain(m + p..nv0) {
        sat = sat.mul_monomial(&Monomial::var(nv0, i));
    }
    let tilde = GroebnerIdeal::with_options(nv0, tilde, config.gb.clone())?;
    let kernel0 = saturate_element(&tilde, &sat)?;
    let mut kernel: Vec<Polynomial> = kernel0.generators().iter().map(|g| g.extend(k)).collect();
    kernel.extend(ring.inverse_relations());
    ring.kernel = GroebnerIdeal::with_options(nv, kernel, config.gb.clone())?;
    ring.reduced_kernel = kernel0;
    Ok(ring)
}
