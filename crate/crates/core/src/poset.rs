//! The order `u ⪯ w ⟺ w - u ∈ S` restricted to the nonzero Apéry elements.

use crate::semigroup::Semigroup;

/// Full order relation on `Ap(S) \ {0}`, materialized as all comparable
/// pairs. Quadratic in the multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyPoset {
    pub elements: Vec<u64>,
    /// Pairs `(u, w)` with `u ⪯ w`, `u != w`.
    pub covers: Vec<(u64, u64)>,
    pub min_elements: Vec<u64>,
    pub max_elements: Vec<u64>,
}

impl AperyPoset {
    pub fn new(s: &Semigroup) -> Self {
        let elements = s.apery()[1..].to_vec();
        let mut covers = Vec::new();
        let mut has_below = vec![false; elements.len()];
        let mut has_above = vec![false; elements.len()];
        for (j, &w) in elements.iter().enumerate() {
            for (i, &u) in elements[..j].iter().enumerate() {
                let diff = w - u;
                if s.contains_u64(diff) {
                    // Apéry closure: the difference is itself an Apéry element.
                    debug_assert!(elements.binary_search(&diff).is_ok());
                    covers.push((u, w));
                    has_above[i] = true;
                    has_below[j] = true;
                }
            }
        }
        let pick = |flags: &[bool]| {
            elements
                .iter()
                .zip(flags)
                .filter(|(_, &f)| !f)
                .map(|(&w, _)| w)
                .collect::<Vec<_>>()
        };
        let min_elements = pick(&has_below);
        let max_elements = pick(&has_above);
        Self {
            elements,
            covers,
            min_elements,
            max_elements,
        }
    }

    pub fn precedes(&self, u: u64, w: u64) -> bool {
        u == w
            || self
                .covers
                .binary_search_by(|&(a, b)| (b, a).cmp(&(w, u)))
                .is_ok()
    }

    /// `t(S) = |maxAp(S)|`.
    pub fn type_number(&self) -> usize {
        self.max_elements.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let s = Semigroup::new(&[7, 8, 10, 19]).unwrap();
        let p = AperyPoset::new(&s);
        assert_eq!(p.elements, vec![8, 10, 16, 18, 19, 20]);
        assert_eq!(p.max_elements, vec![16, 18, 19, 20]);
        assert_eq!(p.min_elements, vec![8, 10, 19]);
        assert_eq!(p.type_number(), 4);
        assert!(p.precedes(8, 16));
        assert!(p.precedes(10, 20));
        assert!(!p.precedes(16, 19));
        assert!(p.precedes(19, 19));
    }

    #[test]
    fn singleton_and_empty() {
        let p = AperyPoset::new(&Semigroup::new(&[2, 3]).unwrap());
        assert_eq!(p.elements, vec![3]);
        assert_eq!(p.min_elements, vec![3]);
        assert_eq!(p.max_elements, vec![3]);
        assert!(p.covers.is_empty());

        let p = AperyPoset::new(&Semigroup::naturals());
        assert!(p.elements.is_empty());
        assert_eq!(p.type_number(), 0);
    }
}
