//! Batch verification: runs every whole-space check for each side count up
//! to a limit and aggregates pass/fail, so one call certifies the full set
//! of game-theoretic claims at a given scale.

use serde::{Deserialize, Serialize};

use crate::analysis::{
    find_pure_nash, verify_one_step_connectivity, verify_standard_neutrality, EquilibriumReport,
};
use crate::counter::{all_one_step_counters, construct_counter, xi_all_equal};
use crate::dice::Die;
use crate::enumeration::all_dice;
use crate::par;

/// Whether the standard pair (S, S) appears among a report's equilibria.
pub fn nash_standard_present(report: &EquilibriumReport) -> bool {
    let Ok(standard) = Die::standard(report.n) else {
        return false;
    };
    report
        .equilibria
        .iter()
        .any(|(a, b)| *a == standard && *b == standard)
}

/// Whether an equilibrium report matches the verified expectation for its
/// side count: a unique standard pair everywhere except the three-sided
/// space, where several equilibria exist and the standard pair is among
/// them.
pub fn nash_as_expected(report: &EquilibriumReport) -> bool {
    if report.n == 3 {
        nash_standard_present(report) && !report.unique_standard
    } else {
        report.unique_standard
    }
}

/// Check results for one side count. Checks that only apply from 4 sides up
/// are `None` below that.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideCountChecks {
    pub n: u32,
    pub space_size: u64,
    /// Every die scores exactly 1/2 against the standard die.
    pub neutrality: bool,
    /// The one-step graph on the die space is connected.
    pub connectivity: bool,
    /// All-equal ξ profile characterizes the standard die (4+ sides).
    pub xi_characterization: Option<bool>,
    /// Counter construction succeeds for every nonstandard die (4+ sides).
    pub counter_totality: Option<bool>,
    /// Every nonstandard die has at least one one-step counter (4+ sides).
    pub counters_nonempty: Option<bool>,
    /// The pure-Nash search found exactly the standard pair.
    pub nash_unique_standard: bool,
    /// The standard pair appears among the equilibria.
    pub nash_standard_present: bool,
    /// All checks above met their expectation for this n. Three-sided
    /// spaces expect multiple equilibria (with the standard pair present);
    /// every other n expects the standard pair to be unique.
    pub pass: bool,
}

/// Results for every side count from 1 to `max_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSuiteReport {
    pub max_n: u32,
    pub per_n: Vec<SideCountChecks>,
    pub overall_pass: bool,
}

fn check_side_count(n: u32) -> SideCountChecks {
    let dice = all_dice(n);
    let nonstandard: Vec<Die> = dice.iter().filter(|d| !d.is_standard()).cloned().collect();

    let neutrality = verify_standard_neutrality(n);
    let connectivity = verify_one_step_connectivity(n);
    let (xi_characterization, counter_totality, counters_nonempty) = if n >= 4 {
        (
            Some(par::all_of(&dice, |d| xi_all_equal(d) == d.is_standard())),
            Some(par::all_of(&nonstandard, |d| construct_counter(d).is_ok())),
            Some(par::all_of(&nonstandard, |d| {
                all_one_step_counters(d).map_or(false, |c| !c.is_empty())
            })),
        )
    } else {
        (None, None, None)
    };

    let nash = find_pure_nash(n);
    let standard_present = nash_standard_present(&nash);
    let nash_expected = nash_as_expected(&nash);

    let pass = neutrality
        && connectivity
        && xi_characterization.unwrap_or(true)
        && counter_totality.unwrap_or(true)
        && counters_nonempty.unwrap_or(true)
        && nash_expected;

    SideCountChecks {
        n,
        space_size: dice.len() as u64,
        neutrality,
        connectivity,
        xi_characterization,
        counter_totality,
        counters_nonempty,
        nash_unique_standard: nash.unique_standard,
        nash_standard_present: standard_present,
        pass,
    }
}

/// Runs every check for n = 1..=max_n.
pub fn run_verification_suite(max_n: u32) -> VerificationSuiteReport {
    let per_n: Vec<SideCountChecks> = (1..=max_n).map(check_side_count).collect();
    let overall_pass = per_n.iter().all(|c| c.pass);
    VerificationSuiteReport {
        max_n,
        per_n,
        overall_pass,
    }
}
