//! Local standard-basis kernel: Mora normal form with ecart descent,
//! Buchberger-style completion, and the ideal measurements built on top of
//! the leading-exponent staircase (colength, Hilbert-Samuel truncations,
//! lengths of finite quotients).

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{ExponentVector, Polynomial};
use crate::variables::VariableSet;

/// Resource limits for the kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisConfig {
    /// Completion aborts with `BoundExceeded` when a new basis element's
    /// leading exponent passes this total degree.
    pub degree_bound: u32,
    /// Hard cap on the Hilbert-Samuel truncation level used by
    /// [`finite_module_length`].
    pub k_cap: u32,
}

impl Default for BasisConfig {
    fn default() -> Self {
        BasisConfig {
            degree_bound: 64,
            k_cap: 40,
        }
    }
}

/// An ideal given by generators over a ring with a chosen monomial order.
/// Zero generators are dropped at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<VariableSet>,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(
        ring: &Arc<VariableSet>,
        order: MonomialOrder,
        generators: Vec<Polynomial>,
    ) -> Result<Self> {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        if let Some(bad) = generators.iter().find(|g| g.ring() != ring) {
            return Err(Error::RingMismatch(format!(
                "generator over [{}], expected [{}]",
                bad.ring(),
                ring
            )));
        }
        Ok(Ideal {
            ring: Arc::clone(ring),
            order,
            generators,
        })
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Ideal sum: generator concatenation.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("ideal sum over different rings".into()));
        }
        if self.order != other.order {
            return Err(Error::Invalid("ideal sum with different monomial orders".into()));
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, self.order, gens)
    }
}

/// The k-th power of the maximal ideal: all monomials of total degree k.
pub fn power_of_maximal(ring: &Arc<VariableSet>, k: u32, order: MonomialOrder) -> Ideal {
    let n = ring.len();
    let mut gens = Vec::new();
    for combo in (0..n).combinations_with_replacement(k as usize) {
        let mut v = vec![0u32; n];
        for i in combo {
            v[i] += 1;
        }
        gens.push(Polynomial::monomial(
            ring,
            ExponentVector::from_vec(v),
            BigRational::one(),
        ));
    }
    Ideal::new(ring, order, gens).expect("monomials over the given ring")
}

/// Finite or infinite vector-space dimension of a local quotient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(v) => Some(v),
            Colength::Infinite => None,
        }
    }
}

// ---------------------------------------------------------------------------
// kernel representation: term lists sorted descending under the active order
// ---------------------------------------------------------------------------

type Term = (ExponentVector, BigRational);

#[derive(Debug, Clone)]
struct KPoly {
    /// Terms sorted descending (leading first) under the kernel's order.
    terms: Vec<Term>,
}

impl KPoly {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms: Vec<Term> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp_exp(&b.0, &a.0));
        KPoly { terms }
    }

    fn into_poly(self, ring: &Arc<VariableSet>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &Term {
        &self.terms[0]
    }

    fn max_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Ecart: total degree spread between the polynomial and its leading
    /// monomial. Zero for monomials and for homogeneous polynomials.
    fn ecart(&self) -> u32 {
        self.max_degree() - self.lead().0.total_degree()
    }

    /// Divide by the rational content and make the leading coefficient
    /// positive; a unit rescaling that keeps integer coefficients small.
    fn normalize(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut scale = BigRational::new(den_lcm, num_gcd);
        if self.terms[0].1.is_negative() {
            scale = -scale;
        }
        if !scale.is_one() {
            for (_, c) in &mut self.terms {
                *c *= &scale;
            }
        }
    }
}

/// `h - c * x^shift * g`, merging the two descending term lists.
fn sub_mul_term(
    h: &KPoly,
    c: &BigRational,
    shift: &ExponentVector,
    g: &KPoly,
    order: MonomialOrder,
) -> KPoly {
    let mut out = Vec::with_capacity(h.terms.len() + g.terms.len());
    let mut i = 0;
    let mut j = 0;
    while i < h.terms.len() && j < g.terms.len() {
        let ge = g.terms[j].0.mul(shift);
        match order.cmp_exp(&h.terms[i].0, &ge) {
            std::cmp::Ordering::Greater => {
                out.push(h.terms[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((ge, -(c * &g.terms[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let coeff = &h.terms[i].1 - c * &g.terms[j].1;
                if !coeff.is_zero() {
                    out.push((ge, coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(h.terms[i..].iter().cloned());
    for (e, gc) in &g.terms[j..] {
        out.push((e.mul(shift), -(c * gc)));
    }
    KPoly { terms: out }
}

/// One reduction step: cancel the lead of `h` against the lead of `g`.
fn reduce_lead(h: &KPoly, g: &KPoly, order: MonomialOrder) -> KPoly {
    let (he, hc) = h.lead();
    let (ge, gc) = g.lead();
    let shift = he.div(ge);
    let c = hc / gc;
    let mut r = sub_mul_term(h, &c, &shift, g, order);
    // drop the cancelled lead explicitly in case of rounding-free endpoints
    debug_assert!(r.is_zero() || order.cmp_exp(&r.lead().0, he) == std::cmp::Ordering::Less);
    r.normalize();
    r
}

/// Mora's weak normal form with the ecart descent rule.
///
/// Divisors are searched among the input basis and the intermediate
/// polynomials recorded when a divisor of larger ecart is used, which is
/// what guarantees termination for local orders.
fn mora_nf_kernel(p: &KPoly, basis: &[KPoly], order: MonomialOrder) -> KPoly {
    let mut h = p.clone();
    h.normalize();
    let mut added: Vec<KPoly> = Vec::new();
    while !h.is_zero() {
        let lead = &h.lead().0;
        // minimal-ecart divisor, basis elements first for determinism
        let mut best: Option<(u32, bool, usize)> = None;
        for (idx, g) in basis.iter().enumerate() {
            if g.lead().0.divides(lead) {
                let e = g.ecart();
                if best.map_or(true, |(be, _, _)| e < be) {
                    best = Some((e, false, idx));
                }
            }
        }
        for (idx, g) in added.iter().enumerate() {
            if g.lead().0.divides(lead) {
                let e = g.ecart();
                if best.map_or(true, |(be, _, _)| e < be) {
                    best = Some((e, true, idx));
                }
            }
        }
        let Some((g_ecart, from_added, idx)) = best else {
            return h;
        };
        if g_ecart > h.ecart() {
            added.push(h.clone());
        }
        let g = if from_added { &added[idx] } else { &basis[idx] };
        h = reduce_lead(&h, g, order);
    }
    h
}

/// Mora normal form of `p` against the family `generators`.
///
/// The result is zero or has a leading exponent not divisible by any leading
/// exponent of the family; `p` minus the result lies in the generated ideal
/// up to a unit multiplier (the weak normal form contract of local orders).
pub fn mora_normal_form(
    p: &Polynomial,
    generators: &[Polynomial],
    order: MonomialOrder,
) -> Polynomial {
    let ring = p.ring().clone();
    assert!(
        generators.iter().all(|g| g.ring() == &ring),
        "normal form requires a single ring"
    );
    let basis: Vec<KPoly> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| KPoly::from_poly(g, order))
        .collect();
    mora_nf_kernel(&KPoly::from_poly(p, order), &basis, order).into_poly(&ring)
}

/// A completed standard basis of an ideal.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    ideal: Ideal,
    basis: Vec<Polynomial>,
    leading_exponents: BTreeSet<ExponentVector>,
    kernel: Vec<KPoly>,
}

fn spair(f: &KPoly, g: &KPoly, order: MonomialOrder) -> KPoly {
    let (fe, fc) = f.lead();
    let (ge, gc) = g.lead();
    let l = fe.lcm(ge);
    // x^(l-fe) f / fc  -  x^(l-ge) g / gc
    let scaled_f = KPoly {
        terms: f
            .terms
            .iter()
            .map(|(e, c)| (e.mul(&l.div(fe)), c / fc))
            .collect(),
    };
    let mut r = sub_mul_term(&scaled_f, &(BigRational::one() / gc), &l.div(ge), g, order);
    r.normalize();
    r
}

/// Buchberger-style completion using Mora normal form.
///
/// Pair selection is the normal strategy: sugar degree ascending, ties broken
/// lexicographically on pair indices, so runs are deterministic. Pairs with
/// coprime leading monomials are discarded (product criterion).
pub fn standard_basis(ideal: &Ideal, config: &BasisConfig) -> Result<StandardBasis> {
    let order = ideal.order();
    let mut g: Vec<KPoly> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();

    let mut push_element = |g: &mut Vec<KPoly>,
                            sugar: &mut Vec<u32>,
                            pairs: &mut BTreeSet<(u32, usize, usize)>,
                            mut k: KPoly,
                            s: u32|
     -> Result<()> {
        k.normalize();
        if k.lead().0.total_degree() > config.degree_bound {
            return Err(Error::BoundExceeded {
                bound: config.degree_bound,
            });
        }
        let new = g.len();
        for i in 0..new {
            let le_i = &g[i].lead().0;
            let le_n = &k.lead().0;
            let lcm = le_i.lcm(le_n);
            if lcm == le_i.mul(le_n) {
                continue; // product criterion
            }
            let s_pair = (sugar[i] + lcm.div(le_i).total_degree())
                .max(s + lcm.div(le_n).total_degree());
            pairs.insert((s_pair, i, new));
        }
        g.push(k);
        sugar.push(s);
        Ok(())
    };

    for gen in ideal.generators() {
        let k = KPoly::from_poly(gen, order);
        let s = k.max_degree();
        push_element(&mut g, &mut sugar, &mut pairs, k, s)?;
    }

    while let Some(&pair) = pairs.iter().next() {
        pairs.remove(&pair);
        let (s_pair, i, j) = pair;
        let sp = spair(&g[i], &g[j], order);
        if sp.is_zero() {
            continue;
        }
        let nf = mora_nf_kernel(&sp, &g, order);
        if nf.is_zero() {
            continue;
        }
        let s = s_pair.max(nf.max_degree());
        push_element(&mut g, &mut sugar, &mut pairs, nf, s)?;
    }

    // minimalize: drop elements whose leading exponent is divisible by the
    // leading exponent of another kept element
    let mut idx: Vec<usize> = (0..g.len()).collect();
    idx.sort_by(|&a, &b| {
        order
            .cmp_exp(&g[b].lead().0, &g[a].lead().0)
            .then(a.cmp(&b))
    });
    let mut kept: Vec<KPoly> = Vec::new();
    for i in idx {
        let le = &g[i].lead().0;
        if !kept.iter().any(|k| k.lead().0.divides(le)) {
            kept.push(g[i].clone());
        }
    }
    kept.sort_by(|a, b| order.cmp_exp(&a.lead().0, &b.lead().0));

    let leading_exponents: BTreeSet<ExponentVector> =
        kept.iter().map(|k| k.lead().0.clone()).collect();
    let basis: Vec<Polynomial> = kept
        .iter()
        .map(|k| k.clone().into_poly(ideal.ring()))
        .collect();
    Ok(StandardBasis {
        ideal: ideal.clone(),
        basis,
        leading_exponents,
        kernel: kept,
    })
}

impl StandardBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_exponents(&self) -> &BTreeSet<ExponentVector> {
        &self.leading_exponents
    }

    /// Mora normal form against this basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let order = self.ideal.order();
        mora_nf_kernel(&KPoly::from_poly(p, order), &self.kernel, order).into_poly(self.ideal.ring())
    }

    /// Ideal membership via zero normal form.
    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    fn leads(&self) -> Vec<&ExponentVector> {
        self.leading_exponents.iter().collect()
    }

    /// The staircase complement is finite iff the leading ideal contains a
    /// pure power of every variable; exact once the basis is completed.
    pub fn staircase_is_finite(&self) -> bool {
        let n = self.ideal.ring().len();
        let leads = self.leads();
        (0..n).all(|v| {
            leads
                .iter()
                .any(|e| (0..n).all(|i| i == v || e.get(i) == 0))
        })
    }

    /// Number of monomials outside the leading-exponent staircase, walking
    /// the downward-closed complement; `None` when infinite.
    pub fn colength(&self) -> Colength {
        if !self.staircase_is_finite() {
            return Colength::Infinite;
        }
        Colength::Finite(self.count_staircase(None))
    }

    /// Number of staircase-complement monomials of total degree < k. Always
    /// finite; this is dim O/(I + m^k) because the leading ideal of I + m^k
    /// is L(I) + m^k for degree-compatible local orders.
    pub fn truncated_colength(&self, k: u32) -> u64 {
        self.count_staircase(Some(k))
    }

    fn count_staircase(&self, degree_below: Option<u32>) -> u64 {
        let n = self.ideal.ring().len();
        let leads = self.leads();
        let origin = ExponentVector::zero(n);
        let mut seen: HashSet<ExponentVector> = HashSet::new();
        let mut stack = vec![origin.clone()];
        seen.insert(origin);
        let mut count = 0u64;
        while let Some(e) = stack.pop() {
            if let Some(k) = degree_below {
                if e.total_degree() >= k {
                    continue;
                }
            }
            if leads.iter().any(|l| l.divides(&e)) {
                continue;
            }
            count += 1;
            for v in 0..n {
                let mut next = e.entries().to_vec();
                next[v] += 1;
                let next = ExponentVector::from_vec(next);
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        count
    }
}

/// Colength of an ideal in the local ring: the dimension of O/I as a vector
/// space, read off the completed staircase.
pub fn colength(ideal: &Ideal, config: &BasisConfig) -> Result<Colength> {
    Ok(standard_basis(ideal, config)?.colength())
}

/// Hilbert-Samuel truncation: dim O/(I + m^k); always finite.
pub fn hs_truncation(ideal: &Ideal, k: u32, config: &BasisConfig) -> Result<u64> {
    Ok(standard_basis(ideal, config)?.truncated_colength(k))
}

/// Length of the finite module P/I, where every generator of `inner` lies in
/// `outer` (checked). Computed as `hs_truncation(inner, k) -
/// hs_truncation(outer, k)` for increasing k until the difference repeats for
/// two consecutive k; the Hilbert-Samuel functions of the two quotients
/// eventually differ by exactly this constant.
pub fn finite_module_length(outer: &Ideal, inner: &Ideal, config: &BasisConfig) -> Result<u64> {
    if outer.ring() != inner.ring() {
        return Err(Error::RingMismatch("module length over different rings".into()));
    }
    let sb_outer = standard_basis(outer, config)?;
    for (index, gen) in inner.generators().iter().enumerate() {
        if !sb_outer.contains(gen) {
            return Err(Error::NotContained { index });
        }
    }
    let sb_inner = standard_basis(inner, config)?;
    let mut prev: Option<u64> = None;
    for k in 1..=config.k_cap {
        let inner_k = sb_inner.truncated_colength(k);
        let outer_k = sb_outer.truncated_colength(k);
        let diff = inner_k - outer_k;
        if prev == Some(diff) {
            return Ok(diff);
        }
        prev = Some(diff);
    }
    Err(Error::NoStabilization { cap: config.k_cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring(names: &[&str]) -> Arc<VariableSet> {
        VariableSet::plain(names).unwrap()
    }

    fn p(r: &Arc<VariableSet>, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    fn ideal(r: &Arc<VariableSet>, gens: &[&str]) -> Ideal {
        let gs = gens.iter().map(|s| p(r, s)).collect();
        Ideal::new(r, MonomialOrder::LocalNegDegRevLex, gs).unwrap()
    }

    const CFG: BasisConfig = BasisConfig {
        degree_bound: 64,
        k_cap: 40,
    };

    #[test]
    fn normal_form_of_multiple_is_zero() {
        let r = ring(&["x", "y"]);
        let nf = mora_normal_form(&p(&r, "x^2"), &[p(&r, "x")], MonomialOrder::LocalNegDegRevLex);
        assert!(nf.is_zero());
    }

    #[test]
    fn normal_form_of_coprime_is_identity() {
        let r = ring(&["x", "y"]);
        let nf = mora_normal_form(&p(&r, "y"), &[p(&r, "x")], MonomialOrder::LocalNegDegRevLex);
        assert_eq!(nf, p(&r, "y"));
    }

    #[test]
    fn mora_unit_division_case() {
        // x + x^3 = (1 + x)(x + x^2) - x^2 - x^4 ... reduces to 0 locally
        let r = ring(&["x"]);
        let nf = mora_normal_form(
            &p(&r, "x + x^3"),
            &[p(&r, "x + x^2")],
            MonomialOrder::LocalNegDegRevLex,
        );
        assert!(nf.is_zero(), "got {nf}");
    }

    #[test]
    fn basis_of_linear_generators() {
        let r = ring(&["x", "y"]);
        let sb = standard_basis(&ideal(&r, &["x", "y"]), &CFG).unwrap();
        assert_eq!(sb.basis().len(), 2);
        assert_eq!(sb.colength(), Colength::Finite(1));
    }

    #[test]
    fn monomial_ideal_staircase() {
        let r = ring(&["x", "y"]);
        let sb = standard_basis(&ideal(&r, &["x^2", "x*y", "y^2"]), &CFG).unwrap();
        assert_eq!(sb.leading_exponents().len(), 3);
        // staircase complement {1, x, y}
        assert_eq!(sb.colength(), Colength::Finite(3));
    }

    #[test]
    fn colength_of_maximal_ideal() {
        let r = ring(&["x", "y"]);
        assert_eq!(
            colength(&ideal(&r, &["x", "y"]), &CFG).unwrap(),
            Colength::Finite(1)
        );
    }

    #[test]
    fn infinite_colength_detected() {
        let r = ring(&["x", "y"]);
        assert_eq!(
            colength(&ideal(&r, &["x"]), &CFG).unwrap(),
            Colength::Infinite
        );
    }

    #[test]
    fn ideal_sum_and_maximal_power() {
        let r = ring(&["x", "y"]);
        let m2 = power_of_maximal(&r, 2, MonomialOrder::LocalNegDegRevLex);
        let gens: Vec<String> = m2.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, vec!["x^2", "x*y", "y^2"]);
        let i = ideal(&r, &["x"]);
        let s = i.sum(&m2).unwrap();
        assert_eq!(s.generators().len(), 4);
        assert_eq!(colength(&s, &CFG).unwrap(), Colength::Finite(2)); // {1, y}
    }

    #[test]
    fn hs_truncation_examples() {
        let r1 = ring(&["x"]);
        assert_eq!(hs_truncation(&ideal(&r1, &["x"]), 5, &CFG).unwrap(), 1);
        assert_eq!(hs_truncation(&ideal(&r1, &["x^2"]), 1, &CFG).unwrap(), 1);
        assert_eq!(hs_truncation(&ideal(&r1, &["x^2"]), 2, &CFG).unwrap(), 2);
        assert_eq!(hs_truncation(&ideal(&r1, &["x^2"]), 7, &CFG).unwrap(), 2);
        // zero ideal in two variables: count monomials of degree < 3
        let r2 = ring(&["x", "y"]);
        let zero = Ideal::new(&r2, MonomialOrder::LocalNegDegRevLex, vec![]).unwrap();
        assert_eq!(hs_truncation(&zero, 3, &CFG).unwrap(), 6);
    }

    #[test]
    fn finite_module_length_examples() {
        let r = ring(&["x"]);
        let len = finite_module_length(&ideal(&r, &["x"]), &ideal(&r, &["x^2"]), &CFG).unwrap();
        assert_eq!(len, 1);
        let r2 = ring(&["x", "y"]);
        let m = ideal(&r2, &["x", "y"]);
        assert_eq!(finite_module_length(&m, &m, &CFG).unwrap(), 0);
    }

    #[test]
    fn containment_is_checked() {
        let r = ring(&["x", "y"]);
        let err =
            finite_module_length(&ideal(&r, &["x"]), &ideal(&r, &["y"]), &CFG).unwrap_err();
        assert!(matches!(err, Error::NotContained { index: 0 }));
    }

    #[test]
    fn generator_normal_forms_vanish() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 - y^3", "x*y + y^4", "y^5 - x^3"]);
        let sb = standard_basis(&i, &CFG).unwrap();
        for g in i.generators() {
            assert!(sb.contains(g));
        }
    }

    #[test]
    fn staircase_invariant_under_permutation_and_scaling() {
        let r = ring(&["x", "y"]);
        let a = ideal(&r, &["x^2 - y^3", "x*y + y^4"]);
        let b = ideal(&r, &["3*x*y + 3*y^4", "-7*x^2 + 7*y^3"]);
        let sa = standard_basis(&a, &CFG).unwrap();
        let sb = standard_basis(&b, &CFG).unwrap();
        assert_eq!(sa.leading_exponents(), sb.leading_exponents());
    }

    #[test]
    fn colength_idempotent_on_regenerated_basis() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 - y^3", "x*y"]);
        let sb = standard_basis(&i, &CFG).unwrap();
        let regen = Ideal::new(
            &r,
            MonomialOrder::LocalNegDegRevLex,
            sb.basis().to_vec(),
        )
        .unwrap();
        let sb2 = standard_basis(&regen, &CFG).unwrap();
        assert_eq!(sb.colength(), sb2.colength());
    }

    #[test]
    fn global_order_buchberger_sanity() {
        let r = ring(&["x", "y"]);
        let i = Ideal::new(
            &r,
            MonomialOrder::GlobalDegRevLex,
            vec![p(&r, "x^2 + y"), p(&r, "x*y - 1")],
        )
        .unwrap();
        let sb = standard_basis(&i, &CFG).unwrap();
        for g in i.generators() {
            assert!(sb.contains(g));
        }
        // x*(x*y - 1) - y*(x^2 + y) = -x - y^2 must be in the ideal
        assert!(sb.contains(&p(&r, "-x - y^2")));
    }

    #[test]
    fn bound_exceeded_is_reported() {
        let r = ring(&["x", "y"]);
        let tight = BasisConfig {
            degree_bound: 2,
            k_cap: 40,
        };
        let i = ideal(&r, &["x^4 - y^5", "y^7"]);
        assert!(matches!(
            standard_basis(&i, &tight),
            Err(Error::BoundExceeded { bound: 2 })
        ));
    }
}
