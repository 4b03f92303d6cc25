//! Mond's double-point ideal and the double-point number d(f), computed by
//! three independent routes: the colength of I^2(f), the corank-1
//! divided-difference ideal, and the Artin-Nagata / epsilon-invariant length.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::order::MonomialOrder;
use crate::parse::parse_polynomial;
use crate::poly::{divided_difference, divided_difference_single, ExponentVector, Polynomial};
use crate::sbasis::{colength, finite_module_length, BasisConfig, Colength, Ideal};
use crate::variables::VariableSet;

/// A finite holomorphic map germ f: (C^n, 0) -> (C^p, 0), given by p
/// coordinate polynomials over a plain ring of n variables, each vanishing
/// at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapGerm {
    ring: Arc<VariableSet>,
    coords: Vec<Polynomial>,
}

impl MapGerm {
    pub fn new(ring: &Arc<VariableSet>, coords: Vec<Polynomial>) -> Result<Self> {
        if !ring.is_all_plain() {
            return Err(Error::Invalid("a map germ needs an all-plain source ring".into()));
        }
        if ring.is_empty() {
            return Err(Error::Invalid("a map germ needs at least one source variable".into()));
        }
        if coords.is_empty() {
            return Err(Error::Invalid("a map germ needs at least one coordinate".into()));
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
            if !c.constant_term().is_zero() {
                return Err(Error::Invalid(format!(
                    "coordinate {} does not vanish at the origin",
                    i + 1
                )));
            }
        }
        Ok(MapGerm {
            ring: Arc::clone(ring),
            coords,
        })
    }

    /// Convenience constructor from the textual grammar.
    pub fn parse(var_names: &[&str], coords: &[&str]) -> Result<Self> {
        let ring = VariableSet::plain(var_names)?;
        let polys = coords
            .iter()
            .map(|s| parse_polynomial(s, &ring).map_err(Error::from))
            .collect::<Result<Vec<_>>>()?;
        MapGerm::new(&ring, polys)
    }

    /// Source dimension n.
    pub fn n(&self) -> usize {
        self.ring.len()
    }

    /// Target dimension p.
    pub fn p(&self) -> usize {
        self.coords.len()
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn primed_ring(&self) -> Arc<VariableSet> {
        self.ring.primed_extension().expect("plain source ring")
    }
}

/// The p x n divided-difference matrix alpha of a germ, over the primed
/// ring, together with its telescoping certificate: for every row i,
/// sum_j alpha_ij (x_j - x_j') = f_i(x) - f_i(x'), exactly.
#[derive(Debug, Clone)]
pub struct AlphaMatrix {
    matrix: PolyMatrix,
}

impl AlphaMatrix {
    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }
}

/// Entry (i, j) is the j-th divided difference of f_i; the telescoping
/// identity is verified exactly at construction.
pub fn alpha_matrix(f: &MapGerm) -> AlphaMatrix {
    let primed = f.primed_ring();
    let n = f.n();
    let mut entries = Vec::with_capacity(f.p() * n);
    for fi in f.coords() {
        for j in 0..n {
            entries.push(divided_difference(fi, &primed, j));
        }
    }
    let matrix = PolyMatrix::new(f.p(), n, entries).expect("entries over the primed ring");
    // telescoping certificate
    for (i, fi) in f.coords().iter().enumerate() {
        let mut sum = Polynomial::zero(&primed);
        for j in 0..n {
            let xj = Polynomial::variable(&primed, j);
            let xjp = Polynomial::variable(&primed, n + j);
            sum = &sum + &(matrix.get(i, j) * &(&xj - &xjp));
        }
        let expected = &fi.embed_into_primed(&primed) - &fi.primed_copy(&primed);
        assert_eq!(
            sum, expected,
            "telescoping certificate failed for coordinate {}",
            i + 1
        );
    }
    AlphaMatrix { matrix }
}

/// Mond's double point ideal I^2(f) over the primed 2n-variable ring:
/// the pullbacks f_i(x) - f_i(x') followed by all n x n minors of alpha.
#[derive(Debug, Clone)]
pub struct DoublePointIdeal {
    ideal: Ideal,
}

impl DoublePointIdeal {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }
}

/// The diagonal ideal <x_1 - x_1', ..., x_n - x_n'>.
#[derive(Debug, Clone)]
pub struct DiagonalIdeal {
    ideal: Ideal,
}

impl DiagonalIdeal {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }
}

pub fn diagonal_ideal(primed: &Arc<VariableSet>) -> DiagonalIdeal {
    assert!(primed.is_primed_extension());
    let n = primed.len() / 2;
    let gens = (0..n)
        .map(|j| {
            &Polynomial::variable(primed, j) - &Polynomial::variable(primed, n + j)
        })
        .collect();
    DiagonalIdeal {
        ideal: Ideal::new(primed, MonomialOrder::LocalNegDegRevLex, gens)
            .expect("diagonal generators"),
    }
}

/// Pullback generators f_i(x) - f_i(x') of the target diagonal, i ascending.
pub fn pullback_generators(f: &MapGerm, primed: &Arc<VariableSet>) -> Vec<Polynomial> {
    f.coords()
        .iter()
        .map(|fi| &fi.embed_into_primed(primed) - &fi.primed_copy(primed))
        .collect()
}

/// The pullback ideal I_Delta^2(f) = <f_i(x) - f_i(x')>.
pub fn pullback_ideal(f: &MapGerm) -> Ideal {
    let primed = f.primed_ring();
    Ideal::new(
        &primed,
        MonomialOrder::LocalNegDegRevLex,
        pullback_generators(f, &primed),
    )
    .expect("pullback generators")
}

pub fn double_point_ideal(f: &MapGerm) -> Result<DoublePointIdeal> {
    if f.n() > f.p() {
        return Err(Error::Invalid(format!(
            "double point ideal needs n <= p, got n={}, p={}",
            f.n(),
            f.p()
        )));
    }
    let primed = f.primed_ring();
    let mut gens = pullback_generators(f, &primed);
    let alpha = alpha_matrix(f);
    gens.extend(alpha.matrix().minors(f.n())?);
    Ok(DoublePointIdeal {
        ideal: Ideal::new(&primed, MonomialOrder::LocalNegDegRevLex, gens)?,
    })
}

/// d(f) as half the colength of I^2(f) in O_2n. Requires p = 2n.
pub fn d_invariant(f: &MapGerm, config: &BasisConfig) -> Result<u64> {
    if f.p() != 2 * f.n() {
        return Err(Error::Invalid(format!(
            "d(f) via the double point ideal needs p = 2n, got n={}, p={}",
            f.n(),
            f.p()
        )));
    }
    let dp = double_point_ideal(f)?;
    match colength(dp.ideal(), config)? {
        Colength::Infinite => Err(Error::NotAFinite),
        Colength::Finite(c) => {
            if c % 2 != 0 {
                Err(Error::OddColength(c))
            } else {
                Ok(c / 2)
            }
        }
    }
}

/// Corank: n minus the rank over Q of the differential at the origin.
pub fn corank(f: &MapGerm) -> usize {
    let n = f.n();
    // constant part of the Jacobian
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(f.p());
    for c in f.coords() {
        let mut row = Vec::with_capacity(n);
        for v in 0..n {
            row.push(c.coefficient(&ExponentVector::unit(n, v, 1)));
        }
        rows.push(row);
    }
    n - rational_rank(&mut rows)
}

fn rational_rank(rows: &mut [Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone() * &inv;
                for c2 in col..ncols {
                    let delta = &rows[rank][c2] * &factor;
                    rows[r][c2] -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// The corank-1 normal-form data detected by variable permutation: which
/// coordinates are bare source variables, and which source variable is left
/// over (the distinguished variable y).
pub(crate) struct Corank1Form {
    /// indices of coordinates that are exactly a bare variable, one per
    /// covered variable
    pub(crate) identity_coords: Vec<usize>,
    /// the remaining distinguished source variable
    pub(crate) y: usize,
}

pub(crate) fn corank1_normal_form(f: &MapGerm) -> Result<Corank1Form> {
    let n = f.n();
    let mut coord_of_var: Vec<Option<usize>> = vec![None; n];
    for (ci, c) in f.coords().iter().enumerate() {
        if c.num_terms() != 1 {
            continue;
        }
        let (e, q) = c.terms().next().unwrap();
        if !q.is_one() || e.total_degree() != 1 {
            continue;
        }
        let v = (0..n).find(|&i| e.get(i) == 1).unwrap();
        if coord_of_var[v].is_none() {
            coord_of_var[v] = Some(ci);
        }
    }
    let uncovered: Vec<usize> = (0..n).filter(|&v| coord_of_var[v].is_none()).collect();
    let y = match uncovered.len() {
        0 => n - 1, // immersion written with all variables as coordinates
        1 => uncovered[0],
        _ => return Err(Error::NotNormalizable),
    };
    let identity_coords: Vec<usize> = (0..n)
        .filter(|&v| v != y)
        .map(|v| coord_of_var[v].expect("covered"))
        .collect();
    Ok(Corank1Form { identity_coords, y })
}

/// d(f) via the corank-1 route: half the colength in O_{n+1} of the ideal of
/// single-variable divided differences (f_k(x, y) - f_k(x, y')) / (y - y')
/// over the n+1 non-identity coordinates. Requires p = 2n and corank <= 1
/// with the germ in (or permutable to) the corank-1 normal form.
pub fn d_corank1(f: &MapGerm, config: &BasisConfig) -> Result<u64> {
    if f.p() != 2 * f.n() {
        return Err(Error::Invalid(format!(
            "the corank-1 route needs p = 2n, got n={}, p={}",
            f.n(),
            f.p()
        )));
    }
    let k = corank(f);
    if k > 1 {
        return Err(Error::NotCorank1(k));
    }
    let form = corank1_normal_form(f)?;
    let n = f.n();

    // ring O_{n+1}: the n source variables in order, then y'
    let mut names: Vec<String> = f.ring().names().to_vec();
    let y_name = names[form.y].clone();
    names.push(format!("{y_name}'"));
    let target = VariableSet::plain(&names)?;
    let var_map: Vec<usize> = (0..n).collect();
    let y_primed = n;

    let mut gens = Vec::new();
    for (ci, c) in f.coords().iter().enumerate() {
        if form.identity_coords.contains(&ci) {
            continue;
        }
        gens.push(divided_difference_single(c, &target, &var_map, form.y, y_primed));
    }
    let ideal = Ideal::new(&target, MonomialOrder::LocalNegDegRevLex, gens)?;
    match colength(&ideal, config)? {
        Colength::Infinite => Err(Error::NotAFinite),
        Colength::Finite(c) => {
            if c % 2 != 0 {
                Err(Error::OddColength(c))
            } else {
                Ok(c / 2)
            }
        }
    }
}

/// The Artin-Nagata / epsilon route: epsilon(Delta_f) = 2 d(f) is the length
/// of <x - x'> / I_Delta^2(f), computed by Hilbert-Samuel stabilization.
pub fn epsilon_artin_nagata(f: &MapGerm, config: &BasisConfig) -> Result<u64> {
    if f.p() != 2 * f.n() {
        return Err(Error::Invalid(format!(
            "the Artin-Nagata route needs p = 2n, got n={}, p={}",
            f.n(),
            f.p()
        )));
    }
    let primed = f.primed_ring();
    let diag = diagonal_ideal(&primed);
    let inner = pullback_ideal(f);
    match finite_module_length(diag.ideal(), &inner, config) {
        Err(Error::NoStabilization { .. }) => Err(Error::NotAFinite),
        other => other,
    }
}

/// Evaluate the primary-decomposition form of the epsilon invariant for a
/// caller-supplied m-primary component Q with I_Delta^2(f) = <x - x'> ^ Q:
/// colength(Q) - colength(<x - x'> + Q).
///
/// The decomposition itself is not verified (primary decompositions are not
/// unique and computing one is out of scope); the result should be
/// cross-checked against [`epsilon_artin_nagata`].
pub fn epsilon_from_decomposition(f: &MapGerm, q: &Ideal, config: &BasisConfig) -> Result<i64> {
    let primed = f.primed_ring();
    if q.ring() != &primed {
        return Err(Error::RingMismatch(format!(
            "Q must live over the primed ring [{}]",
            primed
        )));
    }
    let cq = match colength(q, config)? {
        Colength::Infinite => return Err(Error::NotPrimary),
        Colength::Finite(c) => c,
    };
    let diag = diagonal_ideal(&primed);
    let sum = diag.ideal().sum(q)?;
    let csum = match colength(&sum, config)? {
        Colength::Infinite => return Err(Error::NotPrimary),
        Colength::Finite(c) => c,
    };
    Ok(cq as i64 - csum as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sbasis::standard_basis;

    const CFG: BasisConfig = BasisConfig {
        degree_bound: 64,
        k_cap: 40,
    };

    fn paper_germ() -> MapGerm {
        MapGerm::parse(&["x", "y"], &["x^2", "x^3 - x*y", "y^2", "y^3 + x*y"]).unwrap()
    }

    fn cusp() -> MapGerm {
        MapGerm::parse(&["u"], &["u^2", "u^3"]).unwrap()
    }

    #[test]
    fn alpha_matrix_of_the_example_germ() {
        let f = paper_germ();
        let a = alpha_matrix(&f);
        let pr = f.primed_ring();
        let e = |s: &str| parse_polynomial(s, &pr).unwrap();
        assert_eq!(a.matrix().get(0, 0), &e("x + x'"));
        assert_eq!(a.matrix().get(0, 1), &e("0"));
        assert_eq!(a.matrix().get(1, 0), &e("x^2 + x*x' + x'^2 - y"));
        assert_eq!(a.matrix().get(1, 1), &e("-x'"));
        assert_eq!(a.matrix().get(2, 0), &e("0"));
        assert_eq!(a.matrix().get(2, 1), &e("y + y'"));
        assert_eq!(a.matrix().get(3, 0), &e("y"));
        assert_eq!(a.matrix().get(3, 1), &e("y^2 + y*y' + y'^2 + x'"));
    }

    #[test]
    fn alpha_matrix_of_identity_padding() {
        let f = MapGerm::parse(&["x", "y"], &["x", "y", "0", "0"]).unwrap();
        let a = alpha_matrix(&f);
        let pr = f.primed_ring();
        let one = Polynomial::one(&pr);
        assert_eq!(a.matrix().get(0, 0), &one);
        assert!(a.matrix().get(0, 1).is_zero());
        assert!(a.matrix().get(1, 0).is_zero());
        assert_eq!(a.matrix().get(1, 1), &one);
        assert!(a.matrix().get(2, 0).is_zero());
    }

    #[test]
    fn alpha_matrix_of_the_cusp() {
        let f = cusp();
        let a = alpha_matrix(&f);
        let pr = f.primed_ring();
        let e = |s: &str| parse_polynomial(s, &pr).unwrap();
        assert_eq!(a.matrix().get(0, 0), &e("u + u'"));
        assert_eq!(a.matrix().get(1, 0), &e("u^2 + u*u' + u'^2"));
    }

    #[test]
    fn double_point_ideal_generators_of_the_cusp() {
        let f = cusp();
        let dp = double_point_ideal(&f).unwrap();
        let pr = f.primed_ring();
        let e = |s: &str| parse_polynomial(s, &pr).unwrap();
        let gens = dp.ideal().generators();
        assert_eq!(gens.len(), 4);
        assert_eq!(gens[0], e("u^2 - u'^2"));
        assert_eq!(gens[1], e("u^3 - u'^3"));
        assert_eq!(gens[2], e("u + u'"));
        assert_eq!(gens[3], e("u^2 + u*u' + u'^2"));
    }

    #[test]
    fn d_of_the_cusp_is_one() {
        assert_eq!(d_invariant(&cusp(), &CFG).unwrap(), 1);
    }

    #[test]
    fn d_of_the_example_germ_is_six() {
        let f = paper_germ();
        let dp = double_point_ideal(&f).unwrap();
        assert_eq!(colength(dp.ideal(), &CFG).unwrap(), Colength::Finite(12));
        assert_eq!(d_invariant(&f, &CFG).unwrap(), 6);
    }

    #[test]
    fn d_of_a_linear_embedding_is_zero() {
        let f = MapGerm::parse(&["x", "y"], &["x", "y", "0", "0"]).unwrap();
        assert_eq!(d_invariant(&f, &CFG).unwrap(), 0);
    }

    #[test]
    fn corank_examples() {
        assert_eq!(corank(&MapGerm::parse(&["x", "y"], &["x", "y", "0", "0"]).unwrap()), 0);
        assert_eq!(corank(&MapGerm::parse(&["x", "y"], &["x", "y^2", "y^3", "x*y"]).unwrap()), 1);
        assert_eq!(corank(&paper_germ()), 2);
    }

    #[test]
    fn d_corank1_of_the_cusp() {
        assert_eq!(d_corank1(&cusp(), &CFG).unwrap(), 1);
    }

    #[test]
    fn d_corank1_of_an_immersion_is_zero() {
        let f = MapGerm::parse(&["x", "y"], &["x", "y", "0", "0"]).unwrap();
        assert_eq!(d_corank1(&f, &CFG).unwrap(), 0);
    }

    #[test]
    fn d_corank1_agrees_with_colength_route() {
        let f = MapGerm::parse(&["x", "y"], &["x", "y^2", "y^3", "x*y"]).unwrap();
        let via_colength = d_invariant(&f, &CFG).unwrap();
        assert_eq!(d_corank1(&f, &CFG).unwrap(), via_colength);
        assert_eq!(via_colength, 1);
    }

    #[test]
    fn d_corank1_rejects_corank_2() {
        assert!(matches!(
            d_corank1(&paper_germ(), &CFG),
            Err(Error::NotCorank1(2))
        ));
    }

    #[test]
    fn epsilon_of_the_cusp() {
        assert_eq!(epsilon_artin_nagata(&cusp(), &CFG).unwrap(), 2);
    }

    #[test]
    fn epsilon_of_a_stable_immersion_is_zero() {
        let f = MapGerm::parse(&["x", "y"], &["x", "y", "0", "0"]).unwrap();
        assert_eq!(epsilon_artin_nagata(&f, &CFG).unwrap(), 0);
    }

    #[test]
    fn epsilon_of_the_example_germ() {
        assert_eq!(epsilon_artin_nagata(&paper_germ(), &CFG).unwrap(), 12);
    }

    #[test]
    fn epsilon_from_the_papers_decomposition() {
        let f = paper_germ();
        let pr = f.primed_ring();
        let e = |s: &str| parse_polynomial(s, &pr).unwrap();
        let q = Ideal::new(
            &pr,
            MonomialOrder::LocalNegDegRevLex,
            vec![
                e("x'^4"),
                e("y*x'*y'^3"),
                e("y*x'^2*y'^2 - x'^2*y'^3"),
                e("2*y*x'^3 - 2*x'^3*y' + y*y'^3"),
                e("y^2 - y'^2"),
                e("-2*y*x'*y' + 2*x*y'^2 - y*y'^3"),
                e("-2*y*x'^2 + 2*x*x'*y' + y*x'*y'^2 - x'*y'^3"),
                e("2*x*x'^2 - 2*x'^3 + y*y'^2 - y'^3"),
                e("2*x*y - 2*x'*y' + y*y'^2 - y'^3"),
                e("x^2 - x'^2"),
            ],
        )
        .unwrap();
        assert_eq!(colength(&q, &CFG).unwrap(), Colength::Finite(28));
        let sum = diagonal_ideal(&pr).ideal().sum(&q).unwrap();
        assert_eq!(colength(&sum, &CFG).unwrap(), Colength::Finite(16));
        assert_eq!(epsilon_from_decomposition(&f, &q, &CFG).unwrap(), 12);
    }

    #[test]
    fn double_point_ideal_is_swap_symmetric() {
        let f = paper_germ();
        let dp = double_point_ideal(&f).unwrap();
        let sb = standard_basis(dp.ideal(), &CFG).unwrap();
        let pr = f.primed_ring();
        let n = f.n();
        for g in dp.ideal().generators() {
            let swapped = g.map_exponents(&pr, |e| {
                let mut v = vec![0u32; 2 * n];
                for i in 0..n {
                    v[i] = e.get(n + i);
                    v[n + i] = e.get(i);
                }
                ExponentVector::from_vec(v)
            });
            assert!(sb.contains(&swapped), "swapped generator {swapped} escaped the ideal");
        }
    }

    #[test]
    fn d_invariant_under_target_coordinate_changes() {
        let base = paper_germ();
        let d0 = d_invariant(&base, &CFG).unwrap();
        // permute target coordinates
        let perm = MapGerm::parse(&["x", "y"], &["y^3 + x*y", "x^2", "y^2", "x^3 - x*y"]).unwrap();
        assert_eq!(d_invariant(&perm, &CFG).unwrap(), d0);
        // invertible linear mix of target coordinates
        let mixed = MapGerm::parse(
            &["x", "y"],
            &[
                "x^2 + y^2",
                "x^3 - x*y - y^2",
                "y^2 + 2*x^2",
                "y^3 + x*y - x^2",
            ],
        )
        .unwrap();
        assert_eq!(d_invariant(&mixed, &CFG).unwrap(), d0);
    }

    #[test]
    fn germ_must_vanish_at_origin() {
        assert!(MapGerm::parse(&["x"], &["x + 1", "x^2"]).is_err());
    }
}
