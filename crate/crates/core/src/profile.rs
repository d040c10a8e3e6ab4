//! Interval decomposition of a semigroup into blocks `I_k = [km, (k+1)m - 1]`
//! and the Wilf inequality `f + 1 <= n(S)·ν` evaluated three ways.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// Per-interval counts of a semigroup with multiplicity `m >= 2`.
///
/// `f + 1 = L·m + rho` with `1 <= rho <= m`, so `I_L` is the interval holding
/// the Frobenius number. `eta[j - 1]` counts intervals with exactly `j`
/// members; `epsilon[j - 1]` does the same for intervals before `I_L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalProfile {
    #[serde(rename = "L")]
    pub last_interval: u64,
    pub rho: u64,
    /// Members below `f` in each of `I_0 … I_L`.
    pub n_k: Vec<u64>,
    /// `|I_L ∩ S|`, which also counts members above `f`.
    pub last_interval_members: u64,
    pub eta: Vec<u64>,
    pub epsilon: Vec<u64>,
}

/// `⌊w_j/m⌋ - ⌊w_{j-1}/m⌋`: the number of intervals containing exactly `j`
/// elements of S.
pub fn eta_closed_form(s: &Semigroup, j: usize) -> Result<u64> {
    let m = s.multiplicity();
    if m < 2 {
        return Err(Error::DegenerateSemigroup);
    }
    let max = m as usize - 1;
    if j == 0 || j > max {
        return Err(Error::IndexOutOfRange { index: j, max });
    }
    let w = s.apery();
    Ok(w[j] / m - w[j - 1] / m)
}

impl IntervalProfile {
    pub fn new(s: &Semigroup) -> Result<Self> {
        if s.is_naturals() {
            return Err(Error::DegenerateSemigroup);
        }
        let m = s.multiplicity();
        let f = s.frobenius() as u64;
        let last_interval = f / m;
        let rho = f + 1 - last_interval * m;

        let table = s.small_members();
        let mu = m as usize;
        let fu = f as usize;
        let interval_members = |k: usize| table.count_range(k * mu, (k + 1) * mu) as u64;
        let n_k: Vec<u64> = (0..=last_interval as usize)
            .map(|k| table.count_range(k * mu, ((k + 1) * mu).min(fu)) as u64)
            .collect();
        let last_interval_members = interval_members(last_interval as usize);

        let eta = (1..mu)
            .map(|j| eta_closed_form(s, j))
            .collect::<Result<Vec<_>>>()?;

        // I_L is the only interval counted by eta but not by epsilon.
        let mut epsilon = eta.clone();
        let slot = &mut epsilon[last_interval_members as usize - 1];
        *slot = slot.checked_sub(1).ok_or_else(|| {
            Error::InternalInconsistency("eta misses the interval holding f".into())
        })?;

        let mut counted = vec![0u64; mu - 1];
        for k in 0..last_interval as usize {
            let members = interval_members(k);
            if members == 0 || members >= m {
                return Err(Error::InternalInconsistency(format!(
                    "interval {k} below f has {members} members"
                )));
            }
            counted[members as usize - 1] += 1;
        }
        if counted != epsilon {
            return Err(Error::InternalInconsistency(format!(
                "epsilon from eta {epsilon:?} differs from direct count {counted:?}"
            )));
        }

        Ok(Self {
            last_interval,
            rho,
            n_k,
            last_interval_members,
            eta,
            epsilon,
        })
    }

    /// `n_L`.
    pub fn n_last(&self) -> u64 {
        *self.n_k.last().expect("at least one interval")
    }
}

/// The Wilf inequality `f + 1 <= n(S)·ν` with its slack computed directly,
/// from the interval counts and from the epsilon tallies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfReport {
    pub wilf_lhs: u64,
    pub wilf_rhs: u64,
    pub slack_direct: i64,
    pub slack_interval: i64,
    pub slack_epsilon: i64,
    pub satisfied: bool,
}

fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

impl WilfReport {
    pub fn new(s: &Semigroup) -> Result<Self> {
        if s.is_naturals() {
            return Self::assemble(s, None);
        }
        let profile = IntervalProfile::new(s)?;
        Self::assemble(s, Some(&profile))
    }

    /// Reuses an already computed profile of `s`.
    pub fn with_profile(s: &Semigroup, profile: &IntervalProfile) -> Result<Self> {
        Self::assemble(s, Some(profile))
    }

    fn assemble(s: &Semigroup, profile: Option<&IntervalProfile>) -> Result<Self> {
        let nu = s.embedding_dimension() as i128;
        let lhs = s.conductor() as i128;
        let rhs = s.n_of() as i128 * nu;
        let slack_direct = narrow(rhs - lhs)?;

        let (slack_interval, slack_epsilon) = match profile {
            None => (slack_direct, slack_direct),
            Some(p) => {
                let m = s.multiplicity() as i128;
                let tail = p.n_last() as i128 * nu - p.rho as i128;
                let full: i128 = p.n_k[..p.n_k.len() - 1]
                    .iter()
                    .map(|&n| n as i128 * nu - m)
                    .sum();
                let by_eps: i128 = p
                    .epsilon
                    .iter()
                    .zip(1i128..)
                    .map(|(&e, j)| e as i128 * (j * nu - m))
                    .sum();
                (narrow(full + tail)?, narrow(by_eps + tail)?)
            }
        };

        if slack_direct != slack_interval || slack_direct != slack_epsilon {
            return Err(Error::InternalInconsistency(format!(
                "Wilf slacks disagree for {s}: direct {slack_direct}, \
                 interval {slack_interval}, epsilon {slack_epsilon}"
            )));
        }
        Ok(Self {
            wilf_lhs: lhs as u64,
            wilf_rhs: u64::try_from(rhs).map_err(|_| Error::Overflow)?,
            slack_direct,
            slack_interval,
            slack_epsilon,
            satisfied: slack_direct >= 0,
        })
    }
}

/// `f + 1 <= n(S)·(t(S) + 1)`.
pub fn type_bound_check(s: &Semigroup) -> Result<bool> {
    let t = s.type_number()? as u128;
    Ok(s.conductor() as u128 <= s.n_of() as u128 * (t + 1))
}
