use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::poly::ExponentVector;

/// Monomial orders understood by the standard-basis kernel.
///
/// The global order satisfies `1 < x` for every variable; the local order
/// satisfies `x < 1`, which is what makes Mora division compute in the local
/// ring. Both are total and compatible with multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic (global).
    GlobalDegRevLex,
    /// Negative degree reverse lexicographic (local): lower total degree is
    /// larger, ties broken as in degrevlex.
    LocalNegDegRevLex,
}

impl MonomialOrder {
    pub fn cmp_exp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        let deg = a.total_degree().cmp(&b.total_degree());
        let deg = match self {
            MonomialOrder::GlobalDegRevLex => deg,
            MonomialOrder::LocalNegDegRevLex => deg.reverse(),
        };
        match deg {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..a.len()).rev() {
            if a.get(i) != b.get(i) {
                return b.get(i).cmp(&a.get(i));
            }
        }
        Ordering::Equal
    }

    pub fn is_local(&self) -> bool {
        matches!(self, MonomialOrder::LocalNegDegRevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> ExponentVector {
        ExponentVector::from_vec(v.to_vec())
    }

    #[test]
    fn global_one_below_variables() {
        let o = MonomialOrder::GlobalDegRevLex;
        assert_eq!(o.cmp_exp(&e(&[0, 0]), &e(&[1, 0])), Ordering::Less);
        assert_eq!(o.cmp_exp(&e(&[0, 0]), &e(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn local_one_above_variables() {
        let o = MonomialOrder::LocalNegDegRevLex;
        assert_eq!(o.cmp_exp(&e(&[0, 0]), &e(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp_exp(&e(&[0, 0]), &e(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn revlex_tie_break() {
        // with x > y > z in degrevlex: y^2 > x*z
        let o = MonomialOrder::GlobalDegRevLex;
        assert_eq!(
            o.cmp_exp(&e(&[0, 2, 0]), &e(&[1, 0, 1])),
            Ordering::Greater
        );
        // same tie-break direction locally
        let l = MonomialOrder::LocalNegDegRevLex;
        assert_eq!(
            l.cmp_exp(&e(&[0, 2, 0]), &e(&[1, 0, 1])),
            Ordering::Greater
        );
        // multiplication compatibility: x > y implies x*z > y*z
        assert_eq!(o.cmp_exp(&e(&[1, 0, 0]), &e(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp_exp(&e(&[1, 0, 1]), &e(&[0, 1, 1])), Ordering::Greater);
    }
}
