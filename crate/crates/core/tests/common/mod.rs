//! Brute-force oracles, independent of the library's Apéry-set machinery.
#![allow(dead_code)]

/// Membership of `[0, bound]` in the monoid generated by `gens`, by
/// unbounded-knapsack marking of all sums.
pub fn sieve(gens: &[u64], bound: usize) -> Vec<bool> {
    let mut member = vec![false; bound + 1];
    member[0] = true;
    for x in 1..=bound {
        member[x] = gens.iter().any(|&g| {
            let g = g as usize;
            g <= x && member[x - g]
        });
    }
    member
}

/// A bound past the Frobenius number plus the multiplicity: Schur's bound
/// `f <= (g_1 - 1)(g_k - 1) - 1` for coprime generators.
pub fn safe_bound(gens: &[u64]) -> usize {
    let lo = *gens.iter().min().unwrap() as usize;
    let hi = *gens.iter().max().unwrap() as usize;
    lo * hi + 3 * lo + 3
}

pub struct Brute {
    pub member: Vec<bool>,
    pub m: u64,
    pub frobenius: i64,
}

impl Brute {
    pub fn new(gens: &[u64]) -> Self {
        let bound = safe_bound(gens);
        let member = sieve(gens, bound);
        let m = (1..=bound).find(|&x| member[x]).unwrap() as u64;
        let frobenius = (0..=bound)
            .rev()
            .find(|&x| !member[x])
            .map_or(-1, |x| x as i64);
        Self {
            member,
            m,
            frobenius,
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x as usize >= self.member.len() || self.member[x as usize])
    }

    /// Smallest member of each residue class, sorted.
    pub fn apery(&self) -> Vec<u64> {
        let mut w: Vec<u64> = (0..self.m)
            .map(|r| {
                (r..)
                    .step_by(self.m as usize)
                    .find(|&x| self.contains(x as i64))
                    .unwrap()
            })
            .collect();
        w.sort_unstable();
        w
    }

    pub fn n_of(&self) -> u64 {
        (0..=self.frobenius).filter(|&x| self.contains(x)).count() as u64
    }

    /// Atoms: nonzero members that are not a sum of two nonzero members.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let top = self.frobenius + self.m as i64 + 1;
        (1..=top)
            .filter(|&x| self.contains(x))
            .filter(|&x| !(1..x).any(|y| self.contains(y) && self.contains(x - y)))
            .map(|x| x as u64)
            .collect()
    }

    /// Pseudo-Frobenius numbers by definition, testing `x + g` for the
    /// generators only.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let gens = self.minimal_generators();
        (-1..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .filter(|&x| gens.iter().all(|&g| self.contains(x + g as i64)))
            .collect()
    }

    /// `|I_k ∩ S|` for `k = 0..=L`.
    pub fn interval_members(&self) -> Vec<u64> {
        let m = self.m as i64;
        let last = self.frobenius / m;
        (0..=last)
            .map(|k| (k * m..(k + 1) * m).filter(|&x| self.contains(x)).count() as u64)
            .collect()
    }

    /// `eta[j-1]`: intervals with exactly `j` members, `j = 1..m-1`.
    pub fn eta(&self) -> Vec<u64> {
        let counts = self.interval_members();
        (1..self.m)
            .map(|j| counts.iter().filter(|&&c| c == j).count() as u64)
            .collect()
    }
}

/// All gap sets of genus `g` as bitmasks over `[1, 2g - 1]` (bit `x - 1`
/// marks gap `x`): sets of size `g` whose complement is closed under
/// addition. Gaps of a genus-`g` semigroup never exceed `2g - 1`.
pub fn gap_sets(g: u32) -> Vec<u64> {
    if g == 0 {
        return vec![0];
    }
    let width = 2 * g - 1;
    let is_gap = |mask: u64, x: u32| x >= 1 && x <= width && mask >> (x - 1) & 1 == 1;
    (0u64..1 << width)
        .filter(|mask| mask.count_ones() == g)
        .filter(|&mask| {
            (1..=width).filter(|&a| !is_gap(mask, a)).all(|a| {
                (a..=width - a)
                    .filter(|&b| !is_gap(mask, b))
                    .all(|b| !is_gap(mask, a + b))
            })
        })
        .collect()
}

pub fn genus_counts_oracle(max_genus: u32) -> Vec<u64> {
    (0..=max_genus).map(|g| gap_sets(g).len() as u64).collect()
}

/// Minimal generators of the semigroup with the given gap mask.
pub fn generators_of_gap_set(mask: u64) -> Vec<u64> {
    let in_s = |x: u64| x == 0 || x > 63 || mask >> (x - 1) & 1 == 0;
    let frob = if mask == 0 {
        0
    } else {
        64 - mask.leading_zeros() as u64
    };
    let m = (1..).find(|&x| in_s(x)).unwrap();
    (1..=frob + m)
        .filter(|&x| in_s(x))
        .filter(|&x| !(1..x).any(|y| in_s(y) && in_s(x - y)))
        .collect()
}
