use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::variables::VariableSet;

/// Exponent vector of a monomial; its length is fixed by the ring.
///
/// `Ord` is degree-reverse-lexicographic (total degree first, ties broken by
/// the smaller exponent in the last differing variable), which is the
/// ambient canonical order used for term storage.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn zero(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    pub fn unit(len: usize, var: usize, exp: u32) -> Self {
        let mut v = vec![0; len];
        v[var] = exp;
        ExponentVector(v)
    }

    pub fn from_vec(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials: componentwise sum.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Whether `self` divides `other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise difference; caller must ensure `other` divides `self`.
    pub fn div(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Componentwise maximum (lcm of monomials).
    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // reverse lexicographic tie-break: the last differing exponent,
        // smaller exponent wins
        for i in (0..self.0.len()).rev() {
            if self.0[i] != other.0[i] {
                return other.0[i].cmp(&self.0[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by the canonical degrevlex order on
/// exponent vectors and never contain zero coefficients, so structurally
/// equal polynomials compare bit-equal no matter how they were built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<VariableSet>,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<VariableSet>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<VariableSet>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Arc<VariableSet>, c: BigRational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zero(ring.len()), c);
        }
        p
    }

    pub fn constant_i64(ring: &Arc<VariableSet>, c: i64) -> Self {
        Self::constant(ring, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn variable(ring: &Arc<VariableSet>, var: usize) -> Self {
        Self::monomial(ring, ExponentVector::unit(ring.len(), var, 1), BigRational::one())
    }

    pub fn monomial(ring: &Arc<VariableSet>, exp: ExponentVector, coeff: BigRational) -> Self {
        assert_eq!(exp.len(), ring.len(), "exponent length must match ring size");
        let mut p = Self::zero(ring);
        if !coeff.is_zero() {
            p.terms.insert(exp, coeff);
        }
        p
    }

    pub fn from_terms<I>(ring: &Arc<VariableSet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigRational)>,
    {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&ExponentVector::zero(self.ring.len()))
    }

    /// Maximum total degree over all terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    /// Minimum total degree over all terms; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total_degree()).min()
    }

    /// Leading term with respect to the given monomial order.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&ExponentVector, &BigRational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_exp(a.0, b.0))
    }

    fn add_term(&mut self, exp: ExponentVector, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "[{}] vs [{}]",
                self.ring, other.ring
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.ring.len(), "variable index out of range");
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            let k = e.get(var);
            if k == 0 {
                continue;
            }
            let mut v = e.entries().to_vec();
            v[var] -= 1;
            out.add_term(
                ExponentVector::from_vec(v),
                c * BigRational::from_integer(BigInt::from(k)),
            );
        }
        out
    }

    /// Ring homomorphism determined by `images` (indexed by source variable).
    ///
    /// Variables without an image are sent to the variable of the same name
    /// in `target`; it is an error if no such variable exists or if an image
    /// lives over a different ring than `target`.
    pub fn substitute(
        &self,
        target: &Arc<VariableSet>,
        images: &HashMap<usize, Polynomial>,
    ) -> Result<Polynomial> {
        let mut effective: Vec<Polynomial> = Vec::with_capacity(self.ring.len());
        for i in 0..self.ring.len() {
            match images.get(&i) {
                Some(img) => {
                    if img.ring() != target {
                        return Err(Error::RingMismatch(format!(
                            "image of `{}` lives over [{}], expected [{}]",
                            self.ring.name(i),
                            img.ring(),
                            target
                        )));
                    }
                    effective.push(img.clone());
                }
                None => {
                    let name = self.ring.name(i);
                    let j = target.index_of(name).ok_or_else(|| {
                        Error::RingMismatch(format!(
                            "unassigned variable `{name}` is not present in the target ring [{target}]"
                        ))
                    })?;
                    effective.push(Polynomial::variable(target, j));
                }
            }
        }
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, img) in effective.iter().enumerate() {
                let k = e.get(i);
                if k > 0 {
                    term = term.try_mul(&img.pow(k))?;
                }
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Reindex every exponent vector through `f` into `target`. Internal
    /// helper for variable embeddings and permutations; `f` must be injective
    /// on the support of each exponent vector.
    pub(crate) fn map_exponents<F>(&self, target: &Arc<VariableSet>, f: F) -> Polynomial
    where
        F: Fn(&ExponentVector) -> ExponentVector,
    {
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let e2 = f(e);
            assert_eq!(e2.len(), target.len());
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Embed a polynomial over a plain ring into its primed extension,
    /// leaving exponents on the plain prefix.
    pub fn embed_into_primed(&self, primed: &Arc<VariableSet>) -> Polynomial {
        let n = self.ring.len();
        assert_eq!(primed.len(), 2 * n, "primed ring must double the plain ring");
        self.map_exponents(primed, |e| {
            let mut v = e.entries().to_vec();
            v.resize(2 * n, 0);
            ExponentVector::from_vec(v)
        })
    }

    /// Send every plain variable to its primed companion: f(x) -> f(x').
    pub fn primed_copy(&self, primed: &Arc<VariableSet>) -> Polynomial {
        let n = self.ring.len();
        assert_eq!(primed.len(), 2 * n, "primed ring must double the plain ring");
        self.map_exponents(primed, |e| {
            let mut v = vec![0u32; 2 * n];
            for i in 0..n {
                v[n + i] = e.get(i);
            }
            ExponentVector::from_vec(v)
        })
    }
}

/// Divided difference of `f` with respect to column `j`, over the primed ring:
///
/// ```text
/// alpha_j = [f(x1',..,x_{j-1}', x_j,..,x_n) - f(x1',..,x_j', x_{j+1},..,x_n)] / (x_j - x_j')
/// ```
///
/// The quotient is computed term by term via the exact identity
/// `(x^k - x'^k)/(x - x') = sum_{i<k} x^i x'^{k-1-i}`, so no division ever
/// leaves a remainder. Summing `alpha_j * (x_j - x_j')` over all columns
/// telescopes to `f(x) - f(x')`.
pub fn divided_difference(
    f: &Polynomial,
    primed: &Arc<VariableSet>,
    j: usize,
) -> Polynomial {
    let n = f.ring().len();
    assert!(j < n, "column index out of range");
    assert_eq!(primed.len(), 2 * n, "primed ring must double the plain ring");
    let mut out = Polynomial::zero(primed);
    for (e, c) in f.terms() {
        let k = e.get(j);
        if k == 0 {
            continue;
        }
        // prefix variables (indices < j) become primed, suffix stays plain
        let mut base = vec![0u32; 2 * n];
        for i in 0..n {
            if i < j {
                base[n + i] = e.get(i);
            } else if i > j {
                base[i] = e.get(i);
            }
        }
        for i in 0..k {
            let mut v = base.clone();
            v[j] = i;
            v[n + j] = k - 1 - i;
            out.add_term(ExponentVector::from_vec(v), c.clone());
        }
    }
    out
}

/// Divided difference with respect to a single doubled variable:
/// `(f(.., y, ..) - f(.., y', ..)) / (y - y')` where only `y` acquires a
/// companion `y'` in `target` and all other variables keep their positions.
///
/// `var_map[i]` gives the target index of source variable `i`, `y` is the
/// source index of the doubled variable and `y_primed` its companion's
/// target index.
pub fn divided_difference_single(
    f: &Polynomial,
    target: &Arc<VariableSet>,
    var_map: &[usize],
    y: usize,
    y_primed: usize,
) -> Polynomial {
    let mut out = Polynomial::zero(target);
    for (e, c) in f.terms() {
        let k = e.get(y);
        if k == 0 {
            continue;
        }
        let mut base = vec![0u32; target.len()];
        for (i, &ti) in var_map.iter().enumerate() {
            if i != y {
                base[ti] += e.get(i);
            }
        }
        for i in 0..k {
            let mut v = base.clone();
            v[var_map[y]] += i;
            v[y_primed] += k - 1 - i;
            out.add_term(ExponentVector::from_vec(v), c.clone());
        }
    }
    out
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

fn fmt_monomial(ring: &VariableSet, e: &ExponentVector) -> String {
    let mut parts = Vec::new();
    for i in 0..e.len() {
        match e.get(i) {
            0 => {}
            1 => parts.push(ring.name(i).to_owned()),
            k => parts.push(format!("{}^{}", ring.name(i), k)),
        }
    }
    parts.join("*")
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Prints in the input grammar (descending degrevlex), so that parsing
    /// the output reproduces the polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = fmt_monomial(&self.ring, e);
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring2() -> Arc<VariableSet> {
        VariableSet::plain(&["x", "y"]).unwrap()
    }

    fn p(ring: &Arc<VariableSet>, s: &str) -> Polynomial {
        parse_polynomial(s, ring).unwrap()
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = ring2();
        let a = p(&r, "x + y");
        let b = p(&r, "-x - y");
        assert!(a.try_add(&b).unwrap().is_zero());
    }

    #[test]
    fn multiplicative_identity() {
        let r = ring2();
        let a = p(&r, "x^3 - 7*x*y + 2");
        assert_eq!(a.try_mul(&Polynomial::one(&r)).unwrap(), a);
    }

    #[test]
    fn difference_of_squares_over_primed_ring() {
        let r = ring2().primed_extension().unwrap();
        let a = p(&r, "x - x'");
        let b = p(&r, "x + x'");
        assert_eq!(a.try_mul(&b).unwrap(), p(&r, "x^2 - x'^2"));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = ring2();
        let s = VariableSet::plain(&["u"]).unwrap();
        let a = Polynomial::variable(&r, 0);
        let b = Polynomial::variable(&s, 0);
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn substitute_diagonal_restriction() {
        let r = ring2();
        let pr = r.primed_extension().unwrap();
        let f = p(&pr, "x^2 - x'^2");
        let x = Polynomial::variable(&pr, 0);
        let imgs = HashMap::from([(2, x)]);
        assert!(f.substitute(&pr, &imgs).unwrap().is_zero());
    }

    #[test]
    fn substitute_pullback_of_target_difference() {
        // X1 - X1' pulled back by X1 -> x^2, X1' -> x'^2
        let target_plain = VariableSet::plain(&["X1"]).unwrap();
        let tr = target_plain.primed_extension().unwrap();
        let g = p(&tr, "X1 - X1'");
        let xr = VariableSet::plain(&["x"]).unwrap().primed_extension().unwrap();
        let imgs = HashMap::from([(0, p(&xr, "x^2")), (1, p(&xr, "x'^2"))]);
        assert_eq!(g.substitute(&xr, &imgs).unwrap(), p(&xr, "x^2 - x'^2"));
    }

    #[test]
    fn substitute_specializes_parameter() {
        let fam = VariableSet::with_parameter(&["y"], "t").unwrap();
        let f = p(&fam, "y^3 + t*y");
        let plain = VariableSet::plain(&["y"]).unwrap();
        let imgs = HashMap::from([(1, Polynomial::zero(&plain))]);
        assert_eq!(f.substitute(&plain, &imgs).unwrap(), p(&plain, "y^3"));
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let r = ring2();
        let a = p(&r, "x^2 - y");
        let b = p(&r, "x*y + 3");
        let imgs = HashMap::from([(0, p(&r, "y + 1")), (1, p(&r, "x^2"))]);
        let lhs = a.try_mul(&b).unwrap().substitute(&r, &imgs).unwrap();
        let rhs = a
            .substitute(&r, &imgs)
            .unwrap()
            .try_mul(&b.substitute(&r, &imgs).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_examples() {
        let r = ring2();
        assert_eq!(p(&r, "x^3 - x*y").partial_derivative(0), p(&r, "3*x^2 - y"));
        assert!(p(&r, "5").partial_derivative(0).is_zero());
    }

    #[test]
    fn divided_difference_reproduces_known_rows() {
        let r = ring2();
        let pr = r.primed_extension().unwrap();
        // f = x^2 -> x + x'
        assert_eq!(divided_difference(&p(&r, "x^2"), &pr, 0), p(&pr, "x + x'"));
        // f = x^3 - x*y -> (x^2 + x*x' + x'^2 - y, -x')
        let f = p(&r, "x^3 - x*y");
        assert_eq!(
            divided_difference(&f, &pr, 0),
            p(&pr, "x^2 + x*x' + x'^2 - y")
        );
        assert_eq!(divided_difference(&f, &pr, 1), p(&pr, "-x'"));
        // f = y^3 + x*y -> (y, y^2 + y*y' + y'^2 + x')
        let g = p(&r, "y^3 + x*y");
        assert_eq!(divided_difference(&g, &pr, 0), p(&pr, "y"));
        assert_eq!(
            divided_difference(&g, &pr, 1),
            p(&pr, "y^2 + y*y' + y'^2 + x'")
        );
    }

    #[test]
    fn telescoping_identity_small() {
        let r = ring2();
        let pr = r.primed_extension().unwrap();
        let f = p(&r, "x^3 - x*y + 2*y^4 - 5");
        let mut sum = Polynomial::zero(&pr);
        for j in 0..2 {
            let alpha = divided_difference(&f, &pr, j);
            let xj = Polynomial::variable(&pr, j);
            let xjp = Polynomial::variable(&pr, 2 + j);
            sum = &sum + &(&alpha * &(&xj - &xjp));
        }
        let expected = &f.embed_into_primed(&pr) - &f.primed_copy(&pr);
        assert_eq!(sum, expected);
    }

    #[test]
    fn display_roundtrip() {
        let r = ring2();
        for s in ["0", "x^2", "x^3 - x*y", "-x + 5*y^7 - 1/2"] {
            let q = p(&r, s);
            assert_eq!(p(&r, &q.to_string()), q);
        }
    }
}
