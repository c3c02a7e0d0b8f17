use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Sparse monomial: sorted `(variable index, exponent)` pairs with all
/// exponents positive. The empty list is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pairs: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { pairs: Vec::new() }
    }

    pub fn variable(var: u32) -> Self {
        Monomial { pairs: vec![(var, 1)] }
    }

    /// Builds from arbitrary pairs: sorts, merges duplicates, drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        pairs.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { pairs: merged }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn is_unit(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.pairs.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.pairs
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.pairs[i].1)
            .unwrap_or(0)
    }

    pub fn contains_var(&self, var: u32) -> bool {
        self.exponent(var) > 0
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.pairs.iter().map(|&(v, _)| v)
    }

    pub fn support_set(&self) -> BTreeSet<u32> {
        self.support().collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.pairs.iter().chain(other.pairs.iter()).copied())
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::unit();
        }
        Monomial {
            pairs: self.pairs.iter().map(|&(v, k)| (v, k * e)).collect(),
        }
    }

    /// Squarefree part: every exponent collapsed to 1.
    pub fn radical(&self) -> Monomial {
        Monomial {
            pairs: self.pairs.iter().map(|&(v, _)| (v, 1)).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.pairs.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// Splits into (part supported on `vars`, remaining part).
    pub fn split(&self, vars: &BTreeSet<u32>) -> (Monomial, Monomial) {
        let (inside, outside): (Vec<_>, Vec<_>) =
            self.pairs.iter().partition(|(v, _)| vars.contains(v));
        (Monomial { pairs: inside }, Monomial { pairs: outside })
    }
}

/// Graded reverse lexicographic order with respect to the ring's variable
/// order: higher total degree wins; on ties, the monomial with the smaller
/// exponent at the last variable where they differ is the larger one.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (da, db) = (self.total_degree(), other.total_degree());
        if da != db {
            return da.cmp(&db);
        }
        let mut a = self.pairs.iter().rev();
        let mut b = other.pairs.iter().rev();
        let (mut pa, mut pb) = (a.next(), b.next());
        loop {
            match (pa, pb) {
                (None, None) => return Ordering::Equal,
                // `self` still has a positive exponent at a high index where
                // `other` has zero: the rightmost difference favors `other`.
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va > vb {
                        return Ordering::Less;
                    }
                    if vb > va {
                        return Ordering::Greater;
                    }
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    pa = a.next();
                    pb = b.next();
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn construction_drops_zero_exponents() {
        let mono = m(&[(2, 0), (1, 1), (1, 2)]);
        assert_eq!(mono.pairs(), &[(1, 3)]);
        assert_eq!(mono.total_degree(), 3);
    }

    #[test]
    fn grevlex_degree_two_in_three_vars() {
        // With x = 0, y = 1, z = 2 the expected descending order is
        // x^2 > xy > y^2 > xz > yz > z^2.
        let mut monos = vec![
            m(&[(0, 2)]),
            m(&[(0, 1), (1, 1)]),
            m(&[(1, 2)]),
            m(&[(0, 1), (2, 1)]),
            m(&[(1, 1), (2, 1)]),
            m(&[(2, 2)]),
        ];
        let expected = monos.clone();
        monos.sort_by(|a, b| b.cmp(a));
        assert_eq!(monos, expected);
    }

    #[test]
    fn degree_dominates() {
        assert!(m(&[(2, 3)]) > m(&[(0, 2)]));
        assert!(m(&[(0, 1)]) > Monomial::unit());
    }

    #[test]
    fn split_and_radical() {
        let mono = m(&[(0, 2), (3, 1), (5, 4)]);
        let vars: BTreeSet<u32> = [0, 5].into_iter().collect();
        let (inside, outside) = mono.split(&vars);
        assert_eq!(inside, m(&[(0, 2), (5, 4)]));
        assert_eq!(outside, m(&[(3, 1)]));
        assert_eq!(mono.radical(), m(&[(0, 1), (3, 1), (5, 1)]));
    }
}
