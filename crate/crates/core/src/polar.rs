//! Polar multiplicities of the image of a germ via ICIS Milnor numbers
//! (Le-Greuel recursion on generic hyperplane slices) and the local Euler
//! obstruction, with an operational genericity certificate: every stage must
//! be an ICIS, the alternating sum of the multiplicities must be 1, and two
//! independent seeds must agree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::double_point::MapGerm;
use crate::sbasis::{colength, BasisConfig, Colength, Ideal};

/// Deterministic family of linear forms on the target, with small integer
/// coefficients drawn from a seeded splitmix64 stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormSet {
    forms: Vec<Vec<i64>>,
    seed: u64,
}

impl LinearFormSet {
    pub fn forms(&self) -> &[Vec<i64>] {
        &self.forms
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// `count` linear forms in `p` target variables with coefficients in
/// [-7, 7] \ {0}; the same seed always yields bit-identical forms.
pub fn random_linear_forms(p: usize, count: usize, seed: u64) -> LinearFormSet {
    let mut state = seed;
    let mut forms = Vec::with_capacity(count);
    for _ in 0..count {
        let mut row = Vec::with_capacity(p);
        for _ in 0..p {
            let r = (splitmix64(&mut state) % 14) as i64;
            row.push(if r < 7 { r - 7 } else { r - 6 });
        }
        forms.push(row);
    }
    LinearFormSet { forms, seed }
}

/// Pull a linear form on the target back through the germ: sum c_i * f_i.
fn compose_form(f: &MapGerm, coeffs: &[i64]) -> Polynomial {
    let mut acc = Polynomial::zero(f.ring());
    for (c, fi) in coeffs.iter().zip(f.coords()) {
        if *c != 0 {
            acc = &acc + &fi.scale(&BigRational::from_integer(BigInt::from(*c)));
        }
    }
    acc
}

/// Milnor number of an isolated hypersurface singularity: colength of the
/// ideal of first partials under the local order.
pub fn milnor_hypersurface(g: &Polynomial, config: &BasisConfig) -> Result<u64> {
    if !g.constant_term().is_zero() {
        return Err(Error::Invalid("hypersurface must pass through the origin".into()));
    }
    let ring = g.ring();
    let gens = (0..ring.len()).map(|v| g.partial_derivative(v)).collect();
    let jac = Ideal::new(ring, MonomialOrder::LocalNegDegRevLex, gens)?;
    match colength(&jac, config)? {
        Colength::Infinite => Err(Error::NotIcis { stage: 1 }),
        Colength::Finite(c) => Ok(c),
    }
}

/// Milnor numbers of the ICIS chain V(g_1), V(g_1, g_2), ... via the
/// Le-Greuel recursion
///
/// ```text
/// mu(g_1..g_k) + mu(g_1..g_{k-1})
///     = colength( <g_1..g_{k-1}> + (k x k minors of Jac(g_1..g_k)) )
/// ```
///
/// with mu(empty) = 0. Every stage colength must be finite (the ICIS
/// certificate); a failure reports the offending stage.
pub fn milnor_icis_chain(gs: &[Polynomial], config: &BasisConfig) -> Result<Vec<u64>> {
    if gs.is_empty() {
        return Ok(Vec::new());
    }
    let ring = gs[0].ring().clone();
    let mut mus: Vec<u64> = Vec::with_capacity(gs.len());
    let mut mu_prev: u64 = 0;
    for k in 1..=gs.len() {
        let jac = PolyMatrix::jacobian(&gs[..k])?;
        let mut gens: Vec<Polynomial> = gs[..k - 1].to_vec();
        gens.extend(jac.minors(k)?);
        let ideal = Ideal::new(&ring, MonomialOrder::LocalNegDegRevLex, gens)?;
        let c = match colength(&ideal, config)? {
            Colength::Infinite => return Err(Error::NotIcis { stage: k }),
            Colength::Finite(c) => c,
        };
        if c < mu_prev {
            return Err(Error::NotIcis { stage: k });
        }
        let mu_k = c - mu_prev;
        mus.push(mu_k);
        mu_prev = mu_k;
    }
    Ok(mus)
}

/// Milnor numbers mu(X_k) of the hyperplane slices
/// X_k = V(l_1 o f, ..., l_{n-k+1} o f), for k = 1..n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorChain {
    mu: Vec<u64>,
}

impl MilnorChain {
    /// mu(X_k), 1-based as in the slicing construction.
    pub fn mu(&self, k: usize) -> u64 {
        self.mu[k - 1]
    }

    pub fn values(&self) -> &[u64] {
        &self.mu
    }
}

fn admissible_dimensions(f: &MapGerm) -> bool {
    let (n, p) = (f.n(), f.p());
    p == 2 * n || (n >= 2 && p == 2 * n - 1) || (n, p) == (3, 4)
}

/// Compute the slice Milnor numbers for one set of forms.
pub fn milnor_chain(f: &MapGerm, forms: &LinearFormSet, config: &BasisConfig) -> Result<MilnorChain> {
    let n = f.n();
    if forms.forms().len() < n {
        return Err(Error::Invalid(format!(
            "need at least {} linear forms, got {}",
            n,
            forms.forms().len()
        )));
    }
    if forms.forms().iter().any(|r| r.len() != f.p()) {
        return Err(Error::Invalid("linear forms must have one coefficient per target variable".into()));
    }
    let gs: Vec<Polynomial> = forms.forms()[..n]
        .iter()
        .map(|row| compose_form(f, row))
        .collect();
    let prefix_mus = milnor_icis_chain(&gs, config)?;
    // X_k is cut by the first n-k+1 compositions
    let mu = (1..=n).map(|k| prefix_mus[n - k]).collect();
    Ok(MilnorChain { mu })
}

/// Polar multiplicities m_0..m_n of the image and the Euler obstruction via
/// the Le-Teissier alternating sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarData {
    pub m: Vec<u64>,
    pub euler_obstruction: i64,
    /// Set when the two-seed genericity protocol had to fall back to a
    /// tie-break draw.
    pub tie_break_warning: bool,
}

fn polar_from_chain(n: usize, chain: &MilnorChain, warned: bool) -> Result<PolarData> {
    let mut m = Vec::with_capacity(n + 1);
    m.push(1 + chain.mu(1));
    for k in 1..n {
        m.push(chain.mu(k) + chain.mu(k + 1));
    }
    m.push(chain.mu(n));
    let mut alt: i64 = 0;
    for (i, &mi) in m.iter().enumerate() {
        alt += if i % 2 == 0 { mi as i64 } else { -(mi as i64) };
    }
    if alt != 1 {
        return Err(Error::Genericity(format!(
            "alternating sum of polar multiplicities is {alt}, expected 1"
        )));
    }
    // Le-Teissier: Eu_0 = sum_{j=0}^{n-1} (-1)^j m_j
    let mut eu: i64 = 0;
    for (j, &mj) in m.iter().enumerate().take(n) {
        eu += if j % 2 == 0 { mj as i64 } else { -(mj as i64) };
    }
    Ok(PolarData {
        m,
        euler_obstruction: eu,
        tie_break_warning: warned,
    })
}

/// Polar multiplicities for a fixed form set (no seed protocol):
/// m_0 = 1 + mu(X_1), m_k = mu(X_k) + mu(X_{k+1}), m_n = mu(X_n).
pub fn polar_multiplicities(
    f: &MapGerm,
    forms: &LinearFormSet,
    config: &BasisConfig,
) -> Result<PolarData> {
    if !admissible_dimensions(f) {
        return Err(Error::Invalid(format!(
            "polar multiplicities need p = 2n or 2n-1 (or (n,p) = (3,4)), got n={}, p={}",
            f.n(),
            f.p()
        )));
    }
    let chain = milnor_chain(f, forms, config)?;
    polar_from_chain(f.n(), &chain, false)
}

/// Euler obstruction by the closed form 1 - (-1)^n mu(X_n), cross-checked
/// against the Le-Teissier alternating sum on the same chain.
pub fn euler_obstruction(
    f: &MapGerm,
    forms: &LinearFormSet,
    config: &BasisConfig,
) -> Result<i64> {
    if !admissible_dimensions(f) {
        return Err(Error::Invalid(format!(
            "the Euler obstruction needs p in {{2n, 2n-1}} or (n,p) = (3,4), got n={}, p={}",
            f.n(),
            f.p()
        )));
    }
    let n = f.n();
    let chain = milnor_chain(f, forms, config)?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let closed = 1 - sign * chain.mu(n) as i64;
    let via_sum = polar_from_chain(n, &chain, false)?.euler_obstruction;
    if closed != via_sum {
        return Err(Error::CrossCheckFailed(format!(
            "Euler obstruction routes disagree: closed form {closed}, alternating sum {via_sum}"
        )));
    }
    Ok(closed)
}

/// The full genericity protocol: two independent seeds must produce the same
/// slice Milnor numbers; on disagreement a third draw tie-breaks and the
/// componentwise minimum is reported with a warning. Stages that fail the
/// ICIS certificate retry with fresh seeds up to `retries` times.
pub fn certified_polar_data(
    f: &MapGerm,
    seed: u64,
    retries: u32,
    config: &BasisConfig,
) -> Result<PolarData> {
    if !admissible_dimensions(f) {
        return Err(Error::Invalid(format!(
            "polar multiplicities need p = 2n or 2n-1 (or (n,p) = (3,4)), got n={}, p={}",
            f.n(),
            f.p()
        )));
    }
    let n = f.n();
    let p = f.p();
    let mut attempt = 0u32;
    let mut base = seed;
    let mut last_err = None;
    while attempt <= retries {
        let draw = |offset: u64| -> Result<MilnorChain> {
            let forms = random_linear_forms(p, n + 1, base.wrapping_add(offset));
            milnor_chain(f, &forms, config)
        };
        match (draw(0), draw(1)) {
            (Ok(a), Ok(b)) => {
                if a == b {
                    return polar_from_chain(n, &a, false);
                }
                let c = draw(2)?;
                let mins: Vec<u64> = (1..=n)
                    .map(|k| a.mu(k).min(b.mu(k)).min(c.mu(k)))
                    .collect();
                return polar_from_chain(n, &MilnorChain { mu: mins }, true);
            }
            (Err(e), _) | (_, Err(e)) => {
                last_err = Some(e);
                attempt += 1;
                base = base.wrapping_add(0x1000);
            }
        }
    }
    Err(last_err.unwrap_or_else(|| Error::Genericity("no admissible linear forms found".into())))
}
