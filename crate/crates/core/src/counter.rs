//! Constructs, for any nonstandard die with at least 4 sides, a die one step
//! away from the standard die that beats it — plus the exhaustive search and
//! ranking over every one-step neighbor of the standard die.
//!
//! The construction works on the target's adjacent-multiplicity profile ξ:
//! pick indices (i, j) with ξ_i > ξ_j, i ≠ j, i ≠ j+1, then take the standard
//! die and raise its face of value i to i+1 while lowering its face of value
//! j+1 to j. The resulting die's payoff against the target exceeds 1/2 by
//! exactly (ξ_i − ξ_j)/(2n²), so the pair's gain ξ_i − ξ_j measures the win
//! margin in units of 1/(2n²).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dice::Die;
use crate::par;
use crate::payoff::payoff;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CounterError {
    /// The standard die ties every die, so no counter for it exists.
    #[error("the standard die ties every die; no one-step counter can beat it")]
    StandardDie,
    /// The construction needs at least 4 sides.
    #[error("counter construction requires at least 4 sides, got {n}")]
    TooFewSides { n: u32 },
    /// No admissible index pair was found for a nonstandard die. The
    /// construction guarantees this cannot happen; returned instead of
    /// panicking so a violation surfaces loudly.
    #[error("no admissible index pair for a nonstandard die; construction invariant violated")]
    InternalExhaustion,
    /// The constructed counter failed its payoff re-check. Also guaranteed
    /// unreachable; kept as a loud assertion.
    #[error("constructed counter does not beat its target (payoff {payoff})")]
    BeatVerificationFailed { payoff: Rational },
}

/// A verified beating die: the target, the index pair that produced the
/// counter, the counter itself, the pair's gain ξ_i − ξ_j, and the exact
/// payoff of the counter against the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterCertificate {
    pub target: Die,
    pub pair: (usize, usize),
    pub counter: Die,
    pub gain: i64,
    pub payoff: Rational,
}

/// One entry of the full one-step ranking: a neighbor of the standard die,
/// its exact payoff against the target, and its pair's gain (negative for
/// losing dice).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedDie {
    pub die: Die,
    pub payoff: Rational,
    pub gain: i64,
}

/// True iff every entry of the die's ξ profile is equal. For 4 or more sides
/// this holds only for the standard die; the three-sided die {2,2,2} is the
/// nonstandard exception (ξ = (3,3)) that confines the counter construction
/// to n ≥ 4.
pub fn xi_all_equal(b: &Die) -> bool {
    let xi = b.xi_profile();
    xi.windows(2).all(|w| w[0] == w[1])
}

/// Best admissible pair in `xi` (1-based indices): i ≠ j, i ≠ j+1,
/// ξ_i > ξ_j, maximizing ξ_i − ξ_j with ties broken by smallest i then
/// smallest j.
fn best_admissible_pair(xi: &[u32]) -> Option<(usize, usize)> {
    let mut best: Option<(i64, usize, usize)> = None;
    for i in 1..=xi.len() {
        for j in 1..=xi.len() {
            if i == j || i == j + 1 || xi[i - 1] <= xi[j - 1] {
                continue;
            }
            let gain = i64::from(xi[i - 1]) - i64::from(xi[j - 1]);
            if best.map_or(true, |(g, bi, bj)| (-gain, i, j) < (-g, bi, bj)) {
                best = Some((gain, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Best strict pair violating i ≠ j+1 (that is, with i = j+1), same
/// tie-breaking as `best_admissible_pair`.
fn best_violating_pair(xi: &[u32]) -> Option<(usize, usize)> {
    let mut best: Option<(i64, usize, usize)> = None;
    for j in 1..xi.len() {
        let i = j + 1;
        if xi[i - 1] <= xi[j - 1] {
            continue;
        }
        let gain = i64::from(xi[i - 1]) - i64::from(xi[j - 1]);
        if best.map_or(true, |(g, _, bj)| (-gain, i, j) < (-g, j + 1, bj)) {
            best = Some((gain, i, j));
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Repairs a strict pair (i, j) with i = j+1 into one satisfying i ≠ j+1 by
/// relabeling a neighboring index, following the four cases of the
/// construction's endgame:
///
/// * j ≠ 1 and ξ_{j−1} ≤ ξ_j  → (i, j−1)
/// * j ≠ 1 and ξ_{j−1} > ξ_j  → (j−1, j)
/// * j = 1 and ξ_{i+1} ≥ ξ_i  → (i+1, j)
/// * j = 1 and ξ_{i+1} < ξ_i  → (i, i+1)
///
/// Returns `None` when j = 1 and index i+1 does not exist (possible only for
/// profiles shorter than 3, i.e. fewer than 4 sides).
fn relabel_pair(xi: &[u32], i: usize, j: usize) -> Option<(usize, usize)> {
    debug_assert!(i == j + 1 && xi[i - 1] > xi[j - 1]);
    if j != 1 {
        if xi[j - 2] <= xi[j - 1] {
            Some((i, j - 1))
        } else {
            Some((j - 1, j))
        }
    } else if i + 1 > xi.len() {
        None
    } else if xi[i] >= xi[i - 1] {
        Some((i + 1, j))
    } else {
        Some((i, i + 1))
    }
}

fn is_admissible(xi: &[u32], i: usize, j: usize) -> bool {
    (1..=xi.len()).contains(&i)
        && (1..=xi.len()).contains(&j)
        && i != j
        && i != j + 1
        && xi[i - 1] > xi[j - 1]
}

/// Picks the index pair (i, j) the counter for `b` will be built from:
/// ξ_i > ξ_j with i ≠ j, i ≠ j+1, chosen by largest gain then smallest i
/// then smallest j. Falls back to the relabeling endgame when every strict
/// pair has i = j+1.
pub fn find_counter_pair(b: &Die) -> Result<(usize, usize), CounterError> {
    let n = b.sides();
    if n < 4 {
        return Err(CounterError::TooFewSides { n });
    }
    if b.is_standard() {
        return Err(CounterError::StandardDie);
    }
    let xi = b.xi_profile();
    if let Some(pair) = best_admissible_pair(&xi) {
        return Ok(pair);
    }
    let (i, j) = best_violating_pair(&xi).ok_or(CounterError::InternalExhaustion)?;
    match relabel_pair(&xi, i, j) {
        Some((i, j)) if is_admissible(&xi, i, j) => Ok((i, j)),
        _ => Err(CounterError::InternalExhaustion),
    }
}

/// The standard die with face value `i` raised to `i+1` and face value `j+1`
/// lowered to `j` — the counter shape every certificate uses. Requires
/// 1 ≤ i, j ≤ n−1 and i ≠ j+1 (so two distinct faces move).
fn shifted_standard(n: u32, i: usize, j: usize) -> Die {
    debug_assert!((1..n as usize).contains(&i) && (1..n as usize).contains(&j) && i != j + 1);
    let mut faces: Vec<u32> = (1..=n).collect();
    faces[i - 1] = i as u32 + 1;
    faces[j] = j as u32;
    Die::new(faces).expect("shifted standard die stays valid")
}

/// Recovers the unique index pair whose shifted-standard die equals `g`.
/// Total on one-step neighbors of the standard die: the map (i, j) ↦ die is
/// a bijection onto that neighbor set.
fn pair_for_neighbor(g: &Die) -> Option<(usize, usize)> {
    let n = g.sides() as usize;
    for i in 1..n {
        for j in 1..n {
            if i != j && i != j + 1 && shifted_standard(g.sides(), i, j) == *g {
                return Some((i, j));
            }
        }
    }
    None
}

fn certificate(b: &Die, i: usize, j: usize) -> Result<CounterCertificate, CounterError> {
    let xi = b.xi_profile();
    let counter = shifted_standard(b.sides(), i, j);
    let p = payoff(&counter, b).expect("counter has the target's side count");
    if p <= Rational::ONE_HALF {
        return Err(CounterError::BeatVerificationFailed { payoff: p });
    }
    Ok(CounterCertificate {
        target: b.clone(),
        pair: (i, j),
        counter,
        gain: i64::from(xi[i - 1]) - i64::from(xi[j - 1]),
        payoff: p,
    })
}

/// Builds and verifies a beating die for `b`: selects an index pair, shifts
/// the standard die accordingly, and re-checks that the result's payoff
/// against `b` exceeds 1/2.
pub fn construct_counter(b: &Die) -> Result<CounterCertificate, CounterError> {
    let (i, j) = find_counter_pair(b)?;
    certificate(b, i, j)
}

/// Every one-step neighbor of the standard die that beats `b`, each wrapped
/// in a verified certificate, sorted by descending payoff then ascending die
/// order. Empty when `b` is the standard die.
pub fn all_one_step_counters(b: &Die) -> Result<Vec<CounterCertificate>, CounterError> {
    Ok(ranked_neighbors(b)?
        .into_iter()
        .filter(|r| r.payoff > Rational::ONE_HALF)
        .map(|r| CounterCertificate {
            target: b.clone(),
            pair: r.pair,
            counter: r.die,
            gain: r.gain,
            payoff: r.payoff,
        })
        .collect())
}

/// All one-step neighbors of the standard die — winners, ties, and losers
/// against `b` — ranked by descending exact payoff (ties by ascending die
/// order). The losing tail is the "flipped" view: the worst dice one step
/// from standard.
pub fn rank_one_step_dice(b: &Die) -> Result<Vec<RankedDie>, CounterError> {
    Ok(ranked_neighbors(b)?
        .into_iter()
        .map(|r| RankedDie {
            die: r.die,
            payoff: r.payoff,
            gain: r.gain,
        })
        .collect())
}

struct ScoredNeighbor {
    die: Die,
    pair: (usize, usize),
    gain: i64,
    payoff: Rational,
}

fn ranked_neighbors(b: &Die) -> Result<Vec<ScoredNeighbor>, CounterError> {
    let n = b.sides();
    if n < 4 {
        return Err(CounterError::TooFewSides { n });
    }
    let xi = b.xi_profile();
    let standard = Die::standard(n).expect("n >= 4");
    let neighbors: Vec<Die> = standard.one_step_neighbors().into_iter().collect();
    let mut scored: Vec<ScoredNeighbor> = par::ordered_map(&neighbors, |g| {
        let (i, j) = pair_for_neighbor(g)
            .expect("every one-step neighbor of the standard die maps to an index pair");
        ScoredNeighbor {
            die: g.clone(),
            pair: (i, j),
            gain: i64::from(xi[i - 1]) - i64::from(xi[j - 1]),
            payoff: payoff(g, b).expect("neighbor has the target's side count"),
        }
    });
    scored.sort_by(|a, b| b.payoff.cmp(&a.payoff).then_with(|| a.die.cmp(&b.die)));
    Ok(scored)
}
