//! Exact engine for the two-player game of picking dice.
//!
//! An `n`-sided die here is a multiset of `n` faces from `1..=n` whose sum
//! matches the standard die `{1, 2, ..., n}`. Two players each pick a die
//! from that space and roll; ties are split evenly, so the payoff of die A
//! against die B is Pr(A > B) + ½·Pr(A = B), held as an exact rational.
//!
//! The crate provides:
//!
//! * [`dice`] — the die type, validation, γ/ξ multiplicity profiles, and the
//!   one-step move that shifts a unit of weight between two faces;
//! * [`enumeration`] — lazy lexicographic generation of the whole die space
//!   plus an independent dynamic-programming count;
//! * [`payoff`] — exact win/tie/loss tallies, the payoff functional, and the
//!   beats trichotomy;
//! * [`counter`] — for any nonstandard die with 4+ sides, constructs a die
//!   one step from standard that beats it, exhaustively finds all such
//!   counters, and ranks every one-step neighbor;
//! * [`analysis`] — exhaustive pure-Nash search, standard-die neutrality,
//!   one-step connectivity, and the beats digraph with cycle search;
//! * [`verify`] — the batch suite bundling every whole-space check.
//!
//! With the default `parallel` feature the heavy scans fan out over a thread
//! pool; disabling it yields a dependency-light sequential build with
//! identical results.

pub mod analysis;
pub mod counter;
pub mod dice;
pub mod enumeration;
pub mod par;
pub mod payoff;
pub mod rational;
pub mod verify;

pub use analysis::{
    build_beats_digraph, find_nontransitive_cycles, find_pure_nash,
    verify_one_step_connectivity, verify_standard_neutrality, BeatsDigraph, EquilibriumReport,
};
pub use counter::{
    all_one_step_counters, construct_counter, find_counter_pair, rank_one_step_dice,
    xi_all_equal, CounterCertificate, CounterError, RankedDie,
};
pub use dice::{Die, StepError, ValidationError};
pub use enumeration::{all_dice, count_dice, enumerate_dice, DieSpaceIterator};
pub use payoff::{beats, payoff, tally, tally_reference, BeatsOutcome, MismatchedSides, PairTally, PayoffReport};
pub use rational::Rational;
pub use verify::{
    nash_as_expected, nash_standard_present, run_verification_suite, SideCountChecks,
    VerificationSuiteReport,
};
