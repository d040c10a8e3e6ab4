//! Executable hypothesis/conclusion checks for the Wilf-type statements
//! about numerical semigroups, meant to be mapped over enumerated families.
//!
//! Every checker reports whether its hypothesis applies, so vacuous
//! instances stay visible in coverage statistics. A counterexample is an
//! instance with the hypothesis met and the conclusion failed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::{type_bound_check, IntervalProfile, WilfReport};
use crate::semigroup::{gcd, Semigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LemmaId {
    /// `m - ν <= 2` gives `t + 1 <= ν`.
    Unfor,
    /// `m <= 6` gives `ν <= 3` or `m - ν <= 2`, and Wilf.
    Ten,
    /// `m - ν >= 2` gives `⌊w_{ν+1}/m⌋ >= ⌊w_1/m⌋ + ⌊w_2/m⌋`.
    Nok,
    /// Equality in the floor relation of `w_{m-1}` gives `n_L >= 3`.
    Make,
    /// `m - ν >= 3` gives `w_2 < f`.
    Box,
    /// `m - ν >= 3` and `n_L = 1` constrain `n_{L-1}`.
    Mos,
    /// `2ν >= m` gives Wilf.
    God,
    /// `m <= 8` gives Wilf.
    Fail,
    /// Type formula for generalized arithmetic sequences.
    Gener,
    /// `f + 1 <= n(S)(t + 1)`.
    TypeBound,
}

impl LemmaId {
    pub const ALL: [LemmaId; 10] = [
        LemmaId::Unfor,
        LemmaId::Ten,
        LemmaId::Nok,
        LemmaId::Make,
        LemmaId::Box,
        LemmaId::Mos,
        LemmaId::God,
        LemmaId::Fail,
        LemmaId::Gener,
        LemmaId::TypeBound,
    ];

    /// Checkers that apply to a single semigroup (all but GENER).
    pub const PER_SEMIGROUP: [LemmaId; 9] = [
        LemmaId::Unfor,
        LemmaId::Ten,
        LemmaId::Nok,
        LemmaId::Make,
        LemmaId::Box,
        LemmaId::Mos,
        LemmaId::God,
        LemmaId::Fail,
        LemmaId::TypeBound,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::Unfor => "UNFOR",
            LemmaId::Ten => "TEN",
            LemmaId::Nok => "NOK",
            LemmaId::Make => "MAKE",
            LemmaId::Box => "BOX",
            LemmaId::Mos => "MOS",
            LemmaId::God => "GOD",
            LemmaId::Fail => "FAIL",
            LemmaId::Gener => "GENER",
            LemmaId::TypeBound => "TYPE_BOUND",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase().replace('-', "_");
        LemmaId::ALL
            .into_iter()
            .find(|id| id.as_str() == upper)
            .ok_or_else(|| format!("unknown checker `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaFinding {
    pub lemma_id: LemmaId,
    #[serde(rename = "gens")]
    pub semigroup: Vec<u64>,
    pub hypothesis_met: bool,
    /// Only meaningful when `hypothesis_met`.
    pub conclusion_met: bool,
}

impl LemmaFinding {
    fn new(
        lemma_id: LemmaId,
        s: &Semigroup,
        hypothesis_met: bool,
        conclusion: impl FnOnce() -> bool,
    ) -> Self {
        Self {
            lemma_id,
            semigroup: s.generators().to_vec(),
            hypothesis_met,
            conclusion_met: hypothesis_met && conclusion(),
        }
    }

    pub fn is_counterexample(&self) -> bool {
        self.hypothesis_met && !self.conclusion_met
    }
}

/// Everything the checkers need about one semigroup, computed once.
#[derive(Clone, Debug)]
pub struct Evidence<'a> {
    pub semigroup: &'a Semigroup,
    /// `None` for ℕ.
    pub type_number: Option<usize>,
    /// `None` for ℕ.
    pub profile: Option<IntervalProfile>,
    pub wilf: WilfReport,
}

impl<'a> Evidence<'a> {
    pub fn new(s: &'a Semigroup) -> Result<Self> {
        if s.is_naturals() {
            return Ok(Self {
                semigroup: s,
                type_number: None,
                profile: None,
                wilf: WilfReport::new(s)?,
            });
        }
        let profile = IntervalProfile::new(s)?;
        let wilf = WilfReport::with_profile(s, &profile)?;
        Ok(Self {
            semigroup: s,
            type_number: Some(s.type_number()?),
            profile: Some(profile),
            wilf,
        })
    }

    fn m(&self) -> u64 {
        self.semigroup.multiplicity()
    }

    fn nu(&self) -> u64 {
        self.semigroup.embedding_dimension() as u64
    }

    /// `m - ν`, never negative.
    fn deficit(&self) -> u64 {
        self.m() - self.nu()
    }

    /// `⌊w_i/m⌋`.
    fn level(&self, i: usize) -> u64 {
        self.semigroup.apery()[i] / self.m()
    }

    fn w(&self, i: usize) -> i64 {
        self.semigroup.apery()[i] as i64
    }

    fn f(&self) -> i64 {
        self.semigroup.frobenius()
    }

    fn finding(
        &self,
        id: LemmaId,
        hypothesis: bool,
        conclusion: impl FnOnce() -> bool,
    ) -> LemmaFinding {
        LemmaFinding::new(id, self.semigroup, hypothesis, conclusion)
    }

    pub fn check(&self, id: LemmaId) -> Result<LemmaFinding> {
        let proper = !self.semigroup.is_naturals();
        let finding = match id {
            LemmaId::Unfor => self.finding(id, proper && self.deficit() <= 2, || {
                (self.type_number.unwrap() as u64) < self.nu() && self.wilf.satisfied
            }),
            LemmaId::Ten => self.finding(id, self.m() <= 6, || {
                (self.nu() <= 3 || self.deficit() <= 2) && self.wilf.satisfied
            }),
            LemmaId::Nok => self.finding(id, proper && self.deficit() >= 2, || {
                let nu = self.nu() as usize;
                self.level(nu + 1) >= self.level(1) + self.level(2)
            }),
            LemmaId::Make => {
                let hyp = proper
                    && self.deficit() >= 2
                    && self.level(self.m() as usize - 1) == self.level(1) + self.level(2);
                self.finding(id, hyp, || self.profile.as_ref().unwrap().n_last() >= 3)
            }
            LemmaId::Box => {
                self.finding(id, proper && self.deficit() >= 3, || self.w(2) < self.f())
            }
            LemmaId::Mos => {
                let hyp =
                    proper && self.deficit() >= 3 && self.profile.as_ref().unwrap().n_last() == 1;
                self.finding(id, hyp, || self.mos_conclusion())
            }
            LemmaId::God => self.finding(id, 2 * self.nu() >= self.m(), || self.wilf.satisfied),
            LemmaId::Fail => self.finding(id, self.m() <= 8, || self.wilf.satisfied),
            LemmaId::TypeBound => {
                let holds = proper && type_bound_check(self.semigroup)?;
                self.finding(id, proper, || holds)
            }
            LemmaId::Gener => {
                return Err(Error::InvalidGasSpec(
                    "GENER is checked on generalized arithmetic sequences, not single semigroups"
                        .into(),
                ))
            }
        };
        Ok(finding)
    }

    /// `n_{L-1} >= 4`, or `n_{L-1} = 3` with `m - ν = 3` and `rho <= m - 2`.
    /// When `n_{L-1} = 3` the intermediate claim `w_3 > f` is also required.
    fn mos_conclusion(&self) -> bool {
        let p = self.profile.as_ref().unwrap();
        let Some(&prev) = p.n_k.len().checked_sub(2).map(|k| &p.n_k[k]) else {
            return false;
        };
        let case_one = prev >= 4;
        let case_two = prev == 3 && self.deficit() == 3 && p.rho <= self.m() - 2;
        let proof_step = prev != 3 || self.w(3) > self.f();
        (case_one || case_two) && proof_step
    }

    pub fn check_all(&self, ids: &[LemmaId]) -> Result<Vec<LemmaFinding>> {
        ids.iter().map(|&id| self.check(id)).collect()
    }
}

fn check_one(s: &Semigroup, id: LemmaId) -> Result<LemmaFinding> {
    Evidence::new(s)?.check(id)
}

pub fn check_unfor(s: &Semigroup) -> Result<LemmaFinding> {
    check_one(s, LemmaId::Unfor)
}

pub fn check_ten(s: &Semigroup) -> Result<LemmaFinding> {
    check_one(s, LemmaId::Ten)
}

pub fn check_nok(s: &Semigroup) -> Result<LemmaFinding> {
    check_one(s, LemmaId::Nok)
}

pub fn check_make(s: &Semigroup) -> Result<LemmaFinding> {
    check_one(s, LemmaId::Make)
}

pub fn check_box(s: &Semigroup) -> Result<LemmaFinding> {
    check_one(s, LemmaId::Box)
}

pub fn check_mos(s: &Semigroup) -> Result<LemmaFinding> {
    check_one(s, LemmaId::Mos)
}

pub fn check_god(s: &Semigroup) -> Result<LemmaFinding> {
    check_one(s, LemmaId::God)
}

/// Multiplicity at most 8 implies Wilf.
pub fn check_small_multiplicity(s: &Semigroup) -> Result<LemmaFinding> {
    check_one(s, LemmaId::Fail)
}

pub fn check_type_bound(s: &Semigroup) -> Result<LemmaFinding> {
    check_one(s, LemmaId::TypeBound)
}

/// Generalized arithmetic sequence `m, hm + d, hm + 2d, …, hm + ld`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GasSpec {
    pub m: u64,
    pub h: u64,
    pub d: u64,
    pub l: u64,
}

impl GasSpec {
    pub fn new(m: u64, h: u64, d: u64, l: u64) -> Result<Self> {
        let spec = Self { m, h, d, l };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let &Self { m, h, d, l } = self;
        if m < 2 {
            return Err(Error::InvalidGasSpec(format!("multiplicity {m} < 2")));
        }
        if h == 0 || d == 0 {
            return Err(Error::InvalidGasSpec("h and d must be positive".into()));
        }
        if gcd(m, d) != 1 {
            return Err(Error::InvalidGasSpec(format!(
                "NonCoprime d: gcd({m}, {d}) != 1"
            )));
        }
        if l == 0 || l + 2 > m {
            return Err(Error::InvalidGasSpec(format!(
                "l = {l} outside 1..={}",
                m.saturating_sub(2)
            )));
        }
        Ok(())
    }

    pub fn generators(&self) -> Result<Vec<u64>> {
        self.validate()?;
        let base = self.h.checked_mul(self.m).ok_or(Error::Overflow)?;
        let mut gens = vec![self.m];
        for i in 1..=self.l {
            let step = i.checked_mul(self.d).ok_or(Error::Overflow)?;
            gens.push(base.checked_add(step).ok_or(Error::Overflow)?);
        }
        Ok(gens)
    }

    /// `m - ⌊(m-2)/l⌋·l - 1`.
    pub fn type_formula(&self) -> u64 {
        self.m - (self.m - 2) / self.l * self.l - 1
    }

    /// Every valid spec with parameters in the given inclusive ranges; `l`
    /// defaults to its full range `1..=m-2`.
    pub fn grid(
        m: (u64, u64),
        h: (u64, u64),
        d: (u64, u64),
        l: Option<(u64, u64)>,
    ) -> impl Iterator<Item = GasSpec> {
        (m.0..=m.1).flat_map(move |m| {
            (h.0..=h.1).flat_map(move |h| {
                (d.0..=d.1).flat_map(move |d| {
                    let (lo, hi) = l.unwrap_or((1, m.saturating_sub(2)));
                    (lo..=hi)
                        .map(move |l| GasSpec { m, h, d, l })
                        .filter(|s| s.validate().is_ok())
                })
            })
        })
    }
}

/// The semigroup of a generalized arithmetic sequence; its listed generators
/// are required to be minimal.
pub fn gas_construct(spec: &GasSpec) -> Result<Semigroup> {
    let gens = spec.generators()?;
    let s = Semigroup::new(&gens)?;
    if s.generators() != gens.as_slice() {
        return Err(Error::InternalInconsistency(format!(
            "generators {gens:?} of {spec:?} are not minimal"
        )));
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GasOutcome {
    pub spec: GasSpec,
    pub gens: Vec<u64>,
    pub nu: usize,
    pub t_computed: usize,
    pub t_formula: u64,
    #[serde(rename = "match")]
    pub matches: bool,
    pub slack: i64,
    pub satisfied: bool,
}

impl GasOutcome {
    pub fn new(spec: &GasSpec) -> Result<Self> {
        let s = gas_construct(spec)?;
        let t_computed = s.type_number()?;
        let t_formula = spec.type_formula();
        let wilf = WilfReport::new(&s)?;
        Ok(Self {
            spec: *spec,
            gens: s.generators().to_vec(),
            nu: s.embedding_dimension(),
            t_computed,
            t_formula,
            matches: t_computed as u64 == t_formula,
            slack: wilf.slack_direct,
            satisfied: wilf.satisfied,
        })
    }

    /// Formula matches, `t < ν`, and Wilf holds directly.
    pub fn holds(&self) -> bool {
        self.matches && self.t_computed < self.nu && self.satisfied
    }
}

pub fn check_gener(spec: &GasSpec) -> Result<LemmaFinding> {
    let outcome = GasOutcome::new(spec)?;
    Ok(LemmaFinding {
        lemma_id: LemmaId::Gener,
        semigroup: outcome.gens.clone(),
        hypothesis_met: true,
        conclusion_met: outcome.holds(),
    })
}
