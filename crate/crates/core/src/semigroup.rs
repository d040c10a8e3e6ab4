//! Numerical semigroups given by generators, stored through their Apéry set
//! with respect to the multiplicity.
//!
//! Everything is derived from the Apéry set `w_0 < w_1 < … < w_{m-1}`:
//! membership is `x >= w_{x mod m}`, the Frobenius number is `w_{m-1} - m`
//! and the minimal generators are `m` together with the Apéry elements that
//! are not a sum of two nonzero Apéry elements.

use crate::error::{Error, Result};

/// An immutable numerical semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
    apery_by_residue: Vec<u64>,
    frobenius: i64,
}

/// Bit-per-integer membership table over `[0, len)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipTable {
    words: Vec<u64>,
    len: usize,
}

impl MembershipTable {
    fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    fn set(&mut self, x: usize) {
        self.words[x / 64] |= 1 << (x % 64);
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Membership of `x`; integers outside the table read as absent.
    pub fn get(&self, x: usize) -> bool {
        x < self.len && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// Number of members in `[lo, hi)`.
    pub fn count_range(&self, lo: usize, hi: usize) -> usize {
        let hi = hi.min(self.len);
        if lo >= hi {
            return 0;
        }
        (lo..hi).filter(|&x| self.get(x)).count()
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Round-robin shortest paths over the residues modulo `gens[0]`.
///
/// Node `r` is a residue class, each generator `a` adds edges `r -> r + a`
/// of weight `a`. Per generator, every cycle of the residue graph is walked
/// once around starting from its current minimum, which settles all
/// distances without a bound on the conductor. O(ν·m).
fn apery_round_robin(gens: &[u64]) -> Result<Vec<u64>> {
    let m = gens[0];
    let mu = m as usize;
    let mut dist = vec![u64::MAX; mu];
    dist[0] = 0;
    for &a in &gens[1..] {
        let d = gcd(m, a) as usize;
        for p in 0..d {
            let Some(mut best) = (p..mu).step_by(d).map(|q| dist[q]).min() else {
                continue;
            };
            if best == u64::MAX {
                continue;
            }
            for _ in 0..mu / d {
                best = best.checked_add(a).ok_or(Error::Overflow)?;
                let r = (best % m) as usize;
                best = best.min(dist[r]);
                dist[r] = best;
            }
        }
    }
    Ok(dist)
}

impl Semigroup {
    /// Builds the semigroup generated by `raw_generators`.
    ///
    /// Duplicates and redundant generators are dropped, so the stored
    /// generators are the unique minimal system.
    pub fn new(raw_generators: &[u64]) -> Result<Self> {
        if raw_generators.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw_generators.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut gens = raw_generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NonCoprime { gcd: g });
        }
        if gens[0] > usize::MAX as u64 {
            return Err(Error::Overflow);
        }

        let by_residue = apery_round_robin(&gens)?;
        let mut sg = Self::from_parts(by_residue, Vec::new())?;

        // g is redundant iff g - h is in S for some other generator h < g.
        let minimal: Vec<u64> = gens
            .iter()
            .enumerate()
            .filter(|&(i, &g)| !gens[..i].iter().any(|&h| sg.contains_u64(g - h)))
            .map(|(_, &g)| g)
            .collect();
        sg.generators = minimal;
        Ok(sg)
    }

    /// Builds a semigroup from its Apéry set indexed by residue modulo the
    /// multiplicity `apery_by_residue.len()`.
    ///
    /// Minimal generators are recovered by a quadratic scan of the Apéry
    /// set, so this is meant for small multiplicities.
    pub fn from_apery(apery_by_residue: Vec<u64>) -> Result<Self> {
        let m = apery_by_residue.len() as u64;
        if m == 0 {
            return Err(Error::EmptyInput);
        }
        let valid = apery_by_residue[0] == 0
            && apery_by_residue
                .iter()
                .enumerate()
                .all(|(r, &w)| w % m == r as u64 && (r == 0 || w > m));
        if !valid {
            return Err(Error::InternalInconsistency(
                "not the Apéry set of a numerical semigroup".into(),
            ));
        }
        let mut sg = Self::from_parts(apery_by_residue, Vec::new())?;
        let mut gens = vec![m];
        for (i, &w) in sg.apery.iter().enumerate().skip(1) {
            if !sg.apery[1..i].iter().any(|&u| sg.contains_u64(w - u)) {
                gens.push(w);
            }
        }
        sg.generators = gens;
        Ok(sg)
    }

    fn from_parts(apery_by_residue: Vec<u64>, generators: Vec<u64>) -> Result<Self> {
        let m = apery_by_residue.len() as u64;
        let mut apery = apery_by_residue.clone();
        apery.sort_unstable();
        let top = *apery.last().expect("nonempty Apéry set");
        if top > i64::MAX as u64 || top.checked_add(m).is_none() {
            return Err(Error::Overflow);
        }
        let frobenius = top as i64 - m as i64;
        Ok(Self {
            generators,
            apery,
            apery_by_residue,
            frobenius,
        })
    }

    /// The ordinary semigroup `{0} ∪ [m, ∞)`.
    pub fn ordinary(m: u64) -> Result<Self> {
        let gens: Vec<u64> = (m..2 * m).collect();
        Self::new(&gens)
    }

    /// The semigroup of all non-negative integers.
    pub fn naturals() -> Self {
        Self {
            generators: vec![1],
            apery: vec![0],
            apery_by_residue: vec![0],
            frobenius: -1,
        }
    }

    pub fn is_naturals(&self) -> bool {
        self.multiplicity() == 1
    }

    /// Minimal generators `g_1 < … < g_ν`.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Embedding dimension ν.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Apéry set with respect to the multiplicity, sorted ascending.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    /// Apéry set indexed by residue class modulo the multiplicity.
    pub fn apery_by_residue(&self) -> &[u64] {
        &self.apery_by_residue
    }

    /// Largest integer outside the semigroup, `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.contains_u64(x as u64)
    }

    pub(crate) fn contains_u64(&self, x: u64) -> bool {
        let m = self.apery_by_residue.len() as u64;
        x >= self.apery_by_residue[(x % m) as usize]
    }

    /// Membership table for `[0, f + m]`.
    pub fn small_members(&self) -> MembershipTable {
        let m = self.multiplicity() as usize;
        let len = (self.frobenius + 1) as usize + m;
        let mut table = MembershipTable::new(len);
        for &w in &self.apery_by_residue {
            let mut x = w as usize;
            while x < len {
                table.set(x);
                x += m;
            }
        }
        table
    }

    /// `n(S)`: number of elements of S in `[0, f]`. Since `f` is a gap this
    /// equals the number of elements below `f`.
    pub fn n_of(&self) -> u64 {
        if self.frobenius < 0 {
            return 0;
        }
        let f = self.frobenius as u64;
        let m = self.multiplicity();
        self.apery_by_residue
            .iter()
            .filter(|&&w| w <= f)
            .map(|&w| (f - w) / m + 1)
            .sum()
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.conductor() - self.n_of()
    }

    /// `minAp(S)`: the minimal nonzero Apéry elements, which are exactly the
    /// generators other than the multiplicity.
    pub fn min_apery(&self) -> &[u64] {
        &self.generators[1..]
    }

    /// `maxAp(S)`, sorted ascending.
    ///
    /// A nonzero Apéry element `w` is maximal iff `w + g` leaves the Apéry
    /// set for every generator `g`, i.e. `w + g - m` is in S. Costs O(m·ν).
    pub fn max_apery(&self) -> Vec<u64> {
        let m = self.multiplicity();
        self.apery[1..]
            .iter()
            .copied()
            .filter(|&w| {
                self.min_apery()
                    .iter()
                    .all(|&g| self.contains_u64(w + g - m))
            })
            .collect()
    }

    /// Pseudo-Frobenius numbers, sorted ascending.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        if self.is_naturals() {
            return Err(Error::DegenerateSemigroup);
        }
        let m = self.multiplicity() as i64;
        Ok(self.max_apery().into_iter().map(|w| w as i64 - m).collect())
    }

    /// Type `t(S)`, the number of pseudo-Frobenius numbers.
    pub fn type_number(&self) -> Result<usize> {
        if self.is_naturals() {
            return Err(Error::DegenerateSemigroup);
        }
        Ok(self.max_apery().len())
    }

    /// The semigroup `S \ {g}` for a minimal generator `g > f(S)`.
    pub fn remove_generator(&self, g: u64) -> Result<Self> {
        if (g as i64) <= self.frobenius || self.generators.binary_search(&g).is_err() {
            return Err(Error::InternalInconsistency(format!(
                "{g} is not a minimal generator above the Frobenius number"
            )));
        }
        let m = self.multiplicity();
        if g == m {
            // f < m here, so S is ordinary and so is the child.
            return Self::ordinary(m + 1);
        }
        let mut by_residue = self.apery_by_residue.clone();
        by_residue[(g % m) as usize] = g + m;
        Self::from_apery(by_residue)
    }
}

impl std::fmt::Display for Semigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}
