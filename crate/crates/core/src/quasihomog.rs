//! Quasihomogeneity detection and the closed-form double-point formulas in
//! weights and degrees: the corank-1 Bezout product, and the general formula
//!
//! ```text
//! 2 d(f) * (w_1 ... w_n)^2 =
//!     d_1 ... d_{2n}
//!   + sum over alpha in {0,1}^{2n}, beta in [1, n+1]^n with |alpha| + |beta| = 2n
//!     of (-1)^(n + |alpha| + 1) * d^alpha * w^beta
//! ```
//!
//! which reduces to the Bezout product at n = 1, agrees with the graded
//! free-resolution computation at n = 2, and restricts to the Bezout product
//! on the corank-1 stratum at n = 3; it is proved for n <= 3 and conjectural
//! beyond.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::double_point::{corank1_normal_form, MapGerm};
use crate::error::{Error, Result};
use crate::poly::ExponentVector;

/// Weights of the source variables (gcd 1) and the induced weighted degrees
/// of the coordinate functions: every term of coordinate i has weighted
/// degree `degrees[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightData {
    pub weights: Vec<u64>,
    pub degrees: Vec<u64>,
}

impl WeightData {
    /// Term-by-term quasihomogeneity certificate.
    pub fn certifies(&self, f: &MapGerm) -> bool {
        if self.weights.len() != f.n() || self.degrees.len() != f.p() {
            return false;
        }
        f.coords().iter().zip(&self.degrees).all(|(c, &d)| {
            c.terms()
                .all(|(e, _)| weighted_degree(e, &self.weights) == d)
        })
    }
}

fn weighted_degree(e: &ExponentVector, weights: &[u64]) -> u64 {
    (0..e.len()).map(|i| e.get(i) as u64 * weights[i]).sum()
}

/// Nullspace basis of a rational matrix (rows of constraints).
fn nullspace(rows: &[Vec<BigRational>], n: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = BigRational::one() / m[rank][col].clone();
        for c in col..n {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..n {
                    let delta = &m[rank][c] * &factor;
                    m[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![BigRational::zero(); n];
        v[fc] = BigRational::one();
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[ri][fc].clone();
        }
        basis.push(v);
    }
    basis
}

fn primitive_positive(ray: &[BigRational]) -> Option<Vec<u64>> {
    if ray.iter().any(|c| c.is_zero()) {
        return None;
    }
    let negate = ray[0].is_negative();
    let mut lcm = BigInt::one();
    for c in ray {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = ray
        .iter()
        .map(|c| {
            let v = c * BigRational::from_integer(lcm.clone());
            if negate {
                -v.to_integer()
            } else {
                v.to_integer()
            }
        })
        .collect();
    if ints.iter().any(|v| !v.is_positive()) {
        return None;
    }
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    for v in &mut ints {
        *v /= &g;
    }
    ints.iter().map(|v| u64::try_from(v).ok()).collect()
}

/// Detect quasihomogeneity: solve the linear system requiring all terms of
/// each coordinate to share one weighted degree.
///
/// When the solution space is one-dimensional, returns the primitive
/// positive integer point on the ray (or `None` when the ray leaves the
/// positive orthant). When it is higher-dimensional (underdetermined maps,
/// e.g. monomial ones), returns the lexicographically smallest primitive
/// positive integer point, searched within a bounded box.
pub fn detect_weights(f: &MapGerm) -> Option<WeightData> {
    let n = f.n();
    if f.coords().iter().any(|c| c.is_zero()) {
        return None;
    }
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for c in f.coords() {
        let mut terms = c.terms();
        let first = terms.next().expect("nonzero coordinate").0;
        for (e, _) in terms {
            let row: Vec<BigRational> = (0..n)
                .map(|i| {
                    BigRational::from_integer(BigInt::from(first.get(i) as i64 - e.get(i) as i64))
                })
                .collect();
            rows.push(row);
        }
    }
    let basis = nullspace(&rows, n);
    let weights: Vec<u64> = match basis.len() {
        0 => return None,
        1 => primitive_positive(&basis[0])?,
        dim if dim == n => vec![1; n],
        _ => lex_smallest_in_box(&rows, n)?,
    };
    let degrees: Vec<u64> = f
        .coords()
        .iter()
        .map(|c| weighted_degree(c.terms().next().unwrap().0, &weights))
        .collect();
    let data = WeightData { weights, degrees };
    debug_assert!(data.certifies(f));
    Some(data)
}

fn lex_smallest_in_box(rows: &[Vec<BigRational>], n: usize) -> Option<Vec<u64>> {
    let bound: u64 = if n <= 4 { 16 } else { 8 };
    let mut w = vec![1u64; n];
    loop {
        let ok = rows.iter().all(|row| {
            let mut acc = BigRational::zero();
            for (i, c) in row.iter().enumerate() {
                acc += c * BigRational::from_integer(BigInt::from(w[i]));
            }
            acc.is_zero()
        });
        if ok {
            let g = w.iter().fold(0u64, |a, &b| a.gcd(&b));
            if g == 1 {
                return Some(w);
            }
        }
        // lexicographic odometer, least significant position last
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if w[i] < bound {
                w[i] += 1;
                for v in &mut w[i + 1..] {
                    *v = 1;
                }
                break;
            }
        }
    }
}

fn big(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Corank-1 Bezout formula:
/// `d(f) = prod_{i=n}^{2n} (d_i - w_n) / (2 w_n^2 prod_{j<n} w_j)`,
/// for weight data ordered to the corank-1 normal form (d_i = w_i for i < n).
pub fn d_qh_corank1(w: &WeightData, n: usize) -> Result<BigRational> {
    if w.weights.len() != n || w.degrees.len() != 2 * n {
        return Err(Error::Invalid(format!(
            "expected {} weights and {} degrees, got {} and {}",
            n,
            2 * n,
            w.weights.len(),
            w.degrees.len()
        )));
    }
    for i in 0..n - 1 {
        if w.degrees[i] != w.weights[i] {
            return Err(Error::Invalid(format!(
                "degrees are not in corank-1 normal form: d_{} = {} but w_{} = {}",
                i + 1,
                w.degrees[i],
                i + 1,
                w.weights[i]
            )));
        }
    }
    let wn = big(w.weights[n - 1]);
    let mut num = BigRational::one();
    for i in (n - 1)..(2 * n) {
        num *= big(w.degrees[i]) - &wn;
    }
    let mut den = big(2) * &wn * &wn;
    for j in 0..n - 1 {
        den *= big(w.weights[j]);
    }
    Ok(num / den)
}

/// Status of the general weighted formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QhStatus {
    /// n <= 3: covered by the graded free-resolution argument.
    Proved,
    /// n > 3: conjectural extrapolation of the same expression.
    Conjectural,
}

/// The general weighted double-point formula (see the module docs), exact
/// over the rationals. The value is an integer for genuine A-finite germs;
/// integrality is the caller's cross-check, not an assumption here.
pub fn d_qh_general(w: &WeightData, n: usize) -> Result<(BigRational, QhStatus)> {
    if w.weights.len() != n || w.degrees.len() != 2 * n {
        return Err(Error::Invalid(format!(
            "expected {} weights and {} degrees, got {} and {}",
            n,
            2 * n,
            w.weights.len(),
            w.degrees.len()
        )));
    }
    // elementary symmetric polynomials of the degrees
    let mut e = vec![BigRational::zero(); 2 * n + 1];
    e[0] = BigRational::one();
    for &d in &w.degrees {
        for a in (1..=2 * n).rev() {
            let add = &e[a - 1] * big(d);
            e[a] += add;
        }
    }
    // W_s = sum over beta in [1, n+1]^n with |beta| = s of w^beta
    let smax = 2 * n;
    let mut ws = vec![BigRational::zero(); smax + 1];
    ws[0] = BigRational::one();
    for &wt in &w.weights {
        let mut next = vec![BigRational::zero(); smax + 1];
        for s in 0..=smax {
            if ws[s].is_zero() {
                continue;
            }
            let mut pw = BigRational::one();
            for b in 1..=(n as u64 + 1) {
                pw *= big(wt);
                let ns = s + b as usize;
                if ns > smax {
                    break;
                }
                let add = &ws[s] * &pw;
                next[ns] += add;
            }
        }
        ws = next;
    }
    let mut sum = e[2 * n].clone();
    for a in 0..(2 * n) {
        let term = &e[a] * &ws[2 * n - a];
        if (n + a + 1) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let mut den = big(2);
    for &wt in &w.weights {
        den *= big(wt) * big(wt);
    }
    let status = if n <= 3 {
        QhStatus::Proved
    } else {
        QhStatus::Conjectural
    };
    Ok((sum / den, status))
}

/// Reorder detected weight data to the corank-1 normal form of a germ and
/// evaluate the Bezout formula: identity-coordinate degrees first (in
/// variable order), the distinguished variable's weight last.
pub fn d_qh_corank1_germ(f: &MapGerm, w: &WeightData) -> Result<BigRational> {
    let n = f.n();
    if f.p() != 2 * n {
        return Err(Error::Invalid("the corank-1 formula needs p = 2n".into()));
    }
    let form = corank1_normal_form(f)?;
    let mut weights = Vec::with_capacity(n);
    let mut degrees = Vec::with_capacity(2 * n);
    for v in (0..n).filter(|&v| v != form.y) {
        weights.push(w.weights[v]);
        degrees.push(w.weights[v]);
    }
    weights.push(w.weights[form.y]);
    for (ci, _) in f.coords().iter().enumerate() {
        if !form.identity_coords.contains(&ci) {
            degrees.push(w.degrees[ci]);
        }
    }
    d_qh_corank1(&WeightData { weights, degrees }, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn detect_monomial_cusp() {
        let f = MapGerm::parse(&["u"], &["u^2", "u^3"]).unwrap();
        let w = detect_weights(&f).unwrap();
        assert_eq!(w.weights, vec![1]);
        assert_eq!(w.degrees, vec![2, 3]);
        assert!(w.certifies(&f));
    }

    #[test]
    fn example_germ_is_not_quasihomogeneous() {
        let f = MapGerm::parse(&["x", "y"], &["x^2", "x^3 - x*y", "y^2", "y^3 + x*y"]).unwrap();
        assert_eq!(detect_weights(&f), None);
    }

    #[test]
    fn detect_solves_a_constrained_system() {
        let f = MapGerm::parse(&["x", "y"], &["x", "y^2", "y^3", "x*y"]).unwrap();
        let w = detect_weights(&f).unwrap();
        assert_eq!(w.weights, vec![1, 1]);
        assert_eq!(w.degrees, vec![1, 2, 3, 2]);
    }

    #[test]
    fn detection_is_invariant_under_coordinate_scaling() {
        let f = MapGerm::parse(&["x", "y"], &["x", "y^2", "y^3", "x*y"]).unwrap();
        let g = MapGerm::parse(&["x", "y"], &["3*x", "-2*y^2", "7*y^3", "1/2*x*y"]).unwrap();
        assert_eq!(detect_weights(&f), detect_weights(&g));
    }

    #[test]
    fn detect_mixed_weights() {
        // (x, y^2, y^5, x*y) forces nothing unusual; (u^2, u^3) already
        // covered; here a genuinely weighted example: (x, y^3, y^4, x*y)
        let f = MapGerm::parse(&["x", "y"], &["x", "y^3", "y^4", "x*y"]).unwrap();
        let w = detect_weights(&f).unwrap();
        assert_eq!(w.weights, vec![1, 1]);
        // and one with distinct weights
        let g = MapGerm::parse(&["x", "y"], &["x^2", "y^2 + x^3"]).unwrap();
        let wg = detect_weights(&g).unwrap();
        assert_eq!(wg.weights, vec![2, 3]);
        assert_eq!(wg.degrees, vec![4, 6]);
    }

    #[test]
    fn bezout_formula_examples() {
        // cusp: (2-1)(3-1)/2 = 1
        let w = WeightData {
            weights: vec![1],
            degrees: vec![2, 3],
        };
        assert_eq!(d_qh_corank1(&w, 1).unwrap(), rat(1));
        // (x, y^2, y^3, x*y): (2-1)(3-1)(2-1)/2 = 1
        let w = WeightData {
            weights: vec![1, 1],
            degrees: vec![1, 2, 3, 2],
        };
        assert_eq!(d_qh_corank1(&w, 2).unwrap(), rat(1));
        // a zero factor gives zero
        let w = WeightData {
            weights: vec![1, 1],
            degrees: vec![1, 1, 3, 2],
        };
        assert_eq!(d_qh_corank1(&w, 2).unwrap(), rat(0));
    }

    #[test]
    fn general_formula_reduces_to_bezout_at_n1() {
        let w = WeightData {
            weights: vec![1],
            degrees: vec![2, 3],
        };
        let (v, status) = d_qh_general(&w, 1).unwrap();
        assert_eq!(v, rat(1));
        assert_eq!(status, QhStatus::Proved);
        let w = WeightData {
            weights: vec![1],
            degrees: vec![2, 5],
        };
        assert_eq!(d_qh_general(&w, 1).unwrap().0, rat(2));
    }

    #[test]
    fn general_formula_n2_values() {
        for (degrees, expect) in [
            (vec![1, 2, 3, 2], 1i64),
            (vec![1, 2, 5, 2], 2),
            (vec![1, 3, 4, 2], 3),
        ] {
            let w = WeightData {
                weights: vec![1, 1],
                degrees,
            };
            let (v, status) = d_qh_general(&w, 2).unwrap();
            assert_eq!(v, rat(expect));
            assert_eq!(status, QhStatus::Proved);
        }
    }

    #[test]
    fn general_formula_matches_bezout_on_corank1_n3() {
        // (x1, x2, y^2, y^3, x1*y, x2*y): type (1,1,2,3,2,2; 1,1,1)
        let w = WeightData {
            weights: vec![1, 1, 1],
            degrees: vec![1, 1, 2, 3, 2, 2],
        };
        let (v, status) = d_qh_general(&w, 3).unwrap();
        assert_eq!(v, d_qh_corank1(&w, 3).unwrap());
        assert_eq!(v, rat(1));
        assert_eq!(status, QhStatus::Proved);
    }

    #[test]
    fn conjectural_status_beyond_n3() {
        let w = WeightData {
            weights: vec![1, 1, 1, 1],
            degrees: vec![1, 1, 1, 2, 3, 2, 2, 2],
        };
        let (_, status) = d_qh_general(&w, 4).unwrap();
        assert_eq!(status, QhStatus::Conjectural);
    }

    #[test]
    fn germ_level_corank1_reordering() {
        // coordinates deliberately not in normal-form order
        let f = MapGerm::parse(&["x", "y"], &["y^2", "x", "y^3", "x*y"]).unwrap();
        let w = detect_weights(&f).unwrap();
        let d = d_qh_corank1_germ(&f, &w).unwrap();
        assert_eq!(d.to_integer().to_i64(), Some(1));
    }
}
