//! Exact payoff of one die against another: win/tie/loss counts over all n²
//! ordered face pairs, the payoff functional, and the beats trichotomy.
//!
//! The payoff of A against B is Pr(A > B) + ½·Pr(A = B) under independent
//! uniform rolls — the ½ models the tie-breaking coin flip analytically, so
//! nothing here is ever sampled. All arithmetic is integer/rational; floating
//! point would corrupt comparisons against exactly 1/2.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dice::Die;
use crate::rational::Rational;

/// Payoff queries need two dice with the same number of sides.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("dice have different side counts: {a} vs {b}")]
pub struct MismatchedSides {
    pub a: u32,
    pub b: u32,
}

/// Win/tie/loss counts for die A against die B over all n² ordered face
/// pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairTally {
    pub wins: u64,
    pub ties: u64,
    pub losses: u64,
}

impl PairTally {
    pub fn total(&self) -> u64 {
        self.wins + self.ties + self.losses
    }

    /// (2·wins + ties) / (2·total), in lowest terms.
    pub fn payoff(&self) -> Rational {
        Rational::new(
            (2 * self.wins + self.ties) as i64,
            (2 * self.total()) as i64,
        )
    }
}

/// Who wins the die-vs-die matchup, by strict majority of face pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BeatsOutcome {
    AWins,
    BWins,
    Tie,
}

/// Counts face pairs (x from `a`, y from `b`) with x > y and x = y, walking
/// both sorted face lists once with a pair of monotone cursors.
pub fn tally(a: &Die, b: &Die) -> Result<PairTally, MismatchedSides> {
    if a.sides() != b.sides() {
        return Err(MismatchedSides {
            a: a.sides(),
            b: b.sides(),
        });
    }
    let bf = b.faces();
    let (mut wins, mut ties) = (0u64, 0u64);
    // lt = #{y < x}, le = #{y <= x}; both only ever move right because the
    // faces of `a` arrive in ascending order
    let (mut lt, mut le) = (0usize, 0usize);
    for &x in a.faces() {
        while lt < bf.len() && bf[lt] < x {
            lt += 1;
        }
        if le < lt {
            le = lt;
        }
        while le < bf.len() && bf[le] == x {
            le += 1;
        }
        wins += lt as u64;
        ties += (le - lt) as u64;
    }
    let total = (a.sides() as u64) * (b.sides() as u64);
    Ok(PairTally {
        wins,
        ties,
        losses: total - wins - ties,
    })
}

/// Same counts by the plain O(n²) double loop. Kept as the reference
/// implementation the merge-based `tally` is checked against.
pub fn tally_reference(a: &Die, b: &Die) -> Result<PairTally, MismatchedSides> {
    if a.sides() != b.sides() {
        return Err(MismatchedSides {
            a: a.sides(),
            b: b.sides(),
        });
    }
    let (mut wins, mut ties, mut losses) = (0u64, 0u64, 0u64);
    for &x in a.faces() {
        for &y in b.faces() {
            match x.cmp(&y) {
                std::cmp::Ordering::Greater => wins += 1,
                std::cmp::Ordering::Equal => ties += 1,
                std::cmp::Ordering::Less => losses += 1,
            }
        }
    }
    Ok(PairTally { wins, ties, losses })
}

/// Exact payoff of `a` against `b`: Pr(a > b) + ½·Pr(a = b).
pub fn payoff(a: &Die, b: &Die) -> Result<Rational, MismatchedSides> {
    Ok(tally(a, b)?.payoff())
}

/// Beats trichotomy: whichever die wins strictly more of the n² face pairs.
pub fn beats(a: &Die, b: &Die) -> Result<BeatsOutcome, MismatchedSides> {
    let t = tally(a, b)?;
    Ok(match t.wins.cmp(&t.losses) {
        std::cmp::Ordering::Greater => BeatsOutcome::AWins,
        std::cmp::Ordering::Less => BeatsOutcome::BWins,
        std::cmp::Ordering::Equal => BeatsOutcome::Tie,
    })
}

/// Tally plus derived payoff, in the wire shape used by the command-line
/// tool: `{"wins":W,"ties":T,"losses":L,"payoff":"p/q"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PayoffReport {
    pub wins: u64,
    pub ties: u64,
    pub losses: u64,
    pub payoff: Rational,
}

impl From<PairTally> for PayoffReport {
    fn from(t: PairTally) -> Self {
        PayoffReport {
            wins: t.wins,
            ties: t.ties,
            losses: t.losses,
            payoff: t.payoff(),
        }
    }
}
