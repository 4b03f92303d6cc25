//! One-parameter families f_t of map germs: specialization at rational
//! parameter values, the reduced invariant lists of the equisingularity
//! theorems, and a sampled Whitney-equisingularity verdict.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::double_point::{corank, d_invariant, MapGerm};
use crate::error::{Error, Result};
use crate::parse::parse_polynomial;
use crate::polar::certified_polar_data;
use crate::poly::Polynomial;
use crate::sbasis::BasisConfig;
use crate::variables::VariableSet;

/// Fixed disclaimer attached to every family verdict.
pub const SAMPLING_CAVEAT: &str = "constancy at finitely many parameter samples is \
necessary evidence for Whitney equisingularity, not a proof over a parameter neighborhood";

/// Default parameter samples: small heights keep colengths cheap, mixed
/// signs catch sign-dependent degenerations.
pub fn default_samples() -> Vec<BigRational> {
    ["0", "1", "-1", "1/2", "-1/3"]
        .iter()
        .map(|s| s.parse().expect("literal rational"))
        .collect()
}

/// An origin-preserving 1-parameter family: polynomials in the source
/// variables and one parameter t, with every monomial of every coordinate of
/// positive degree in the source variables (so f_t(0) = 0 for all t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    ring: Arc<VariableSet>,
    coords: Vec<Polynomial>,
    param: usize,
}

impl Family {
    pub fn new(ring: &Arc<VariableSet>, coords: Vec<Polynomial>) -> Result<Self> {
        let Some(param) = ring.parameter_index() else {
            return Err(Error::Invalid("a family needs a parameter variable".into()));
        };
        let n = ring.len() - 1;
        if coords.len() != 2 * n {
            return Err(Error::Invalid(format!(
                "a family of germs (C^n,0) -> (C^2n,0) needs 2n = {} coordinates, got {}",
                2 * n,
                coords.len()
            )));
        }
        for (i, c) in coords.iter().enumerate() {
            if c.ring() != ring {
                return Err(Error::RingMismatch(format!(
                    "coordinate {} over [{}], expected [{}]",
                    i + 1,
                    c.ring(),
                    ring
                )));
            }
            for (e, _) in c.terms() {
                let plain_degree: u32 = (0..ring.len())
                    .filter(|&v| v != param)
                    .map(|v| e.get(v))
                    .sum();
                if plain_degree == 0 {
                    return Err(Error::Invalid(format!(
                        "coordinate {} is not origin-preserving: it contains a pure power of the parameter",
                        i + 1
                    )));
                }
            }
        }
        Ok(Family {
            ring: Arc::clone(ring),
            coords,
            param,
        })
    }

    /// Convenience constructor from the textual grammar.
    pub fn parse(var_names: &[&str], parameter: &str, coords: &[&str]) -> Result<Self> {
        let ring = VariableSet::with_parameter(var_names, parameter)?;
        let polys = coords
            .iter()
            .map(|s| parse_polynomial(s, &ring).map_err(Error::from))
            .collect::<Result<Vec<_>>>()?;
        Family::new(&ring, polys)
    }

    /// Source dimension n (parameter excluded).
    pub fn n(&self) -> usize {
        self.ring.len() - 1
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    /// The germ f_{t0}: substitute the parameter and restrict to the plain
    /// ring. Origin preservation guarantees zero constant terms.
    pub fn specialize(&self, t0: &BigRational) -> MapGerm {
        let plain_names: Vec<String> = (0..self.ring.len())
            .filter(|&v| v != self.param)
            .map(|v| self.ring.name(v).to_owned())
            .collect();
        let plain = VariableSet::plain(&plain_names).expect("distinct names");
        let coords = self
            .coords
            .iter()
            .map(|c| {
                let images = HashMap::from([(
                    self.param,
                    Polynomial::constant(&plain, t0.clone()),
                )]);
                c.substitute(&plain, &images).expect("specialization")
            })
            .collect();
        MapGerm::new(&plain, coords).expect("origin-preserving family")
    }
}

/// Greatest odd integer <= k (k >= 1).
pub fn greatest_odd_leq(k: u32) -> u32 {
    if k % 2 == 1 {
        k
    } else {
        k - 1
    }
}

/// Greatest even integer <= k (k >= 1).
pub fn greatest_even_leq(k: u32) -> u32 {
    if k % 2 == 0 {
        k
    } else {
        k - 1
    }
}

/// An invariant traced along the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TracedInvariant {
    /// The double point number d(f_t).
    D,
    /// The polar multiplicity m_i(f_t(C^n)).
    M(usize),
}

impl fmt::Display for TracedInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TracedInvariant::D => write!(f, "d"),
            TracedInvariant::M(i) => write!(f, "m{i}"),
        }
    }
}

/// Which invariants control Whitney equisingularity for a family of base
/// corank k: for k <= 2 the two-invariant list {d, m_1} (degenerating to
/// {d} for immersions, whose higher polar multiplicities vanish
/// identically); for larger corank, d together with the odd-index polar
/// multiplicities up to the greatest odd integer <= k.
pub fn invariant_set(_n: usize, corank: usize) -> Vec<TracedInvariant> {
    if corank == 0 {
        return vec![TracedInvariant::D];
    }
    if corank <= 2 {
        return vec![TracedInvariant::D, TracedInvariant::M(1)];
    }
    let mut set = vec![TracedInvariant::D];
    let mut i = 1;
    while i <= greatest_odd_leq(corank as u32) {
        set.push(TracedInvariant::M(i as usize));
        i += 2;
    }
    set
}

/// Invariants of one specialized germ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub t: BigRational,
    pub corank: usize,
    pub d: Option<u64>,
    /// Full polar multiplicities m_0..m_n when the pipeline succeeded.
    pub m: Option<Vec<u64>>,
    pub errors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictStatus {
    /// Every traced invariant is constant across the samples.
    ConsistentWithWhitneyEquisingular,
    /// Some traced invariant changed; carries a concrete witness.
    NotEquisingular {
        witness_t: BigRational,
        witness_invariant: String,
    },
    /// A sample could not be evaluated and no witness was found.
    Indeterminate(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub invariant_set: Vec<TracedInvariant>,
    pub caveat: &'static str,
}

/// Trace the reduced invariant list over the samples and compare against the
/// t = 0 row.
///
/// The invariant list is fixed by the corank of the base germ f_0. A sample
/// whose computation fails (for instance a non-A-finite fiber) degrades to
/// an indeterminate row; a witnessed difference always dominates, so adding
/// samples can never turn a not-equisingular verdict back into a consistent
/// one.
pub fn whitney_trace(
    fam: &Family,
    samples: &[BigRational],
    seed: u64,
    retries: u32,
    config: &BasisConfig,
) -> Result<(Vec<TraceRow>, Verdict)> {
    if !samples.iter().any(|t| t.is_zero()) {
        return Err(Error::Invalid("the sample list must contain t = 0".into()));
    }
    let base = fam.specialize(&BigRational::zero());
    let base_corank = corank(&base);
    let traced = invariant_set(fam.n(), base_corank);
    let needs_polar = traced.iter().any(|i| matches!(i, TracedInvariant::M(_)));

    let mut rows: Vec<TraceRow> = Vec::with_capacity(samples.len());
    for t in samples {
        let germ = fam.specialize(t);
        let mut row = TraceRow {
            t: t.clone(),
            corank: corank(&germ),
            d: None,
            m: None,
            errors: Vec::new(),
        };
        match d_invariant(&germ, config) {
            Ok(d) => row.d = Some(d),
            Err(e) => row.errors.push(format!("d: {e}")),
        }
        if needs_polar {
            match certified_polar_data(&germ, seed, retries, config) {
                Ok(data) => row.m = Some(data.m),
                Err(e) => row.errors.push(format!("polar: {e}")),
            }
        }
        rows.push(row);
    }

    let value_of = |row: &TraceRow, inv: &TracedInvariant| -> Option<u64> {
        match inv {
            TracedInvariant::D => row.d,
            TracedInvariant::M(i) => row.m.as_ref().and_then(|m| m.get(*i).copied()),
        }
    };
    // baseline per invariant: the first sample (in order) where it computed
    let baseline: Vec<Option<u64>> = traced
        .iter()
        .map(|inv| rows.iter().find_map(|r| value_of(r, inv)))
        .collect();

    let mut witness: Option<(BigRational, String)> = None;
    let mut incomplete = false;
    'outer: for row in &rows {
        for (ti, inv) in traced.iter().enumerate() {
            match (baseline[ti], value_of(row, inv)) {
                (Some(a), Some(b)) if a != b => {
                    witness = Some((row.t.clone(), inv.to_string()));
                    break 'outer;
                }
                (Some(_), Some(_)) => {}
                _ => incomplete = true,
            }
        }
    }

    let status = if let Some((t, inv)) = witness {
        VerdictStatus::NotEquisingular {
            witness_t: t,
            witness_invariant: inv,
        }
    } else if incomplete {
        let detail = rows
            .iter()
            .filter(|r| !r.errors.is_empty())
            .map(|r| format!("t = {}: {}", r.t, r.errors.join("; ")))
            .collect::<Vec<_>>()
            .join(" | ");
        VerdictStatus::Indeterminate(detail)
    } else {
        VerdictStatus::ConsistentWithWhitneyEquisingular
    };

    Ok((
        rows,
        Verdict {
            status,
            invariant_set: traced,
            caveat: SAMPLING_CAVEAT,
        },
    ))
}
