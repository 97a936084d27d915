//! The release gate: nine end-to-end checks covering the worked examples,
//! the structural guarantees for every side count up to eight, and the
//! exhaustive cross-validation of the fast paths against their references.
//!
//! Each check prints a single `[PASS]`/`[FAIL]` line; run with
//! `cargo test --test acceptance -- --nocapture` to see them all.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::Instant;

use dicelab_core::dice::Die;
use dicelab_core::{
    all_dice, all_one_step_counters, beats, construct_counter, count_dice, enumerate_dice,
    find_pure_nash, payoff, tally, tally_reference, verify_one_step_connectivity,
    verify_standard_neutrality, xi_all_equal, BeatsOutcome, Rational,
};

fn criterion(number: u8, summary: &str, check: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(check)) {
        Ok(()) => println!("[PASS] criterion {number}: {summary}"),
        Err(cause) => {
            println!("[FAIL] criterion {number}: {summary}");
            resume_unwind(cause);
        }
    }
}

fn die(faces: &[u32]) -> Die {
    Die::new(faces.to_vec()).unwrap()
}

#[test]
fn criterion_1_worked_example_payoffs() {
    criterion(1, "worked four-sided matchup scores 7/16 and 9/16", || {
        let x = die(&[1, 1, 4, 4]);
        let y = die(&[2, 2, 2, 4]);
        assert_eq!(payoff(&x, &y).unwrap(), Rational::new(7, 16));
        assert_eq!(payoff(&y, &x).unwrap(), Rational::new(9, 16));
        let t = tally(&x, &y).unwrap();
        assert_eq!((t.wins, t.ties, t.losses), (6, 2, 8));
    });
}

#[test]
fn criterion_2_worked_example_counter() {
    criterion(2, "counter for {1,1,4,4} is pair (1,2) giving {2,2,2,4}", || {
        let cert = construct_counter(&die(&[1, 1, 4, 4])).unwrap();
        assert_eq!(cert.pair, (1, 2));
        assert_eq!(cert.counter, die(&[2, 2, 2, 4]));
        assert_eq!(cert.gain, 2);
        assert_eq!(cert.payoff, Rational::new(9, 16));
    });
}

#[test]
fn criterion_3_four_sided_space() {
    criterion(3, "the four-sided space is exactly five dice", || {
        let expected = vec![
            die(&[1, 1, 4, 4]),
            die(&[1, 2, 3, 4]),
            die(&[1, 3, 3, 3]),
            die(&[2, 2, 2, 4]),
            die(&[2, 2, 3, 3]),
        ];
        assert_eq!(all_dice(4), expected);
    });
}

#[test]
fn criterion_4_standard_die_neutrality() {
    criterion(4, "standard die ties everything for n = 1..8 within 10s", || {
        let started = Instant::now();
        for n in 1..=8 {
            assert!(verify_standard_neutrality(n), "neutrality failed at n={n}");
        }
        let elapsed = started.elapsed();
        assert!(elapsed.as_secs() < 10, "took {elapsed:?}");
    });
}

#[test]
fn criterion_5_pure_nash_equilibria() {
    criterion(5, "standard pair is the unique equilibrium for n = 4..8", || {
        for n in 4..=8 {
            let report = find_pure_nash(n);
            let standard = Die::standard(n).unwrap();
            assert!(report.unique_standard, "not unique at n={n}");
            assert_eq!(report.equilibria, vec![(standard.clone(), standard)]);
        }
        // three-sided play degenerates: {2,2,2} also ties everything
        let report = find_pure_nash(3);
        assert!(report.equilibria.len() > 1);
        let standard = Die::standard(3).unwrap();
        assert!(report
            .equilibria
            .contains(&(standard.clone(), standard)));
        assert!(!report.unique_standard);
    });
}

#[test]
fn criterion_6_every_nonstandard_die_is_beaten() {
    criterion(6, "counter construction succeeds on every nonstandard die, n = 4..8", || {
        for n in 4..=8 {
            for target in enumerate_dice(n).filter(|d| !d.is_standard()) {
                let cert = construct_counter(&target)
                    .unwrap_or_else(|e| panic!("{target}: {e}"));
                assert!(cert.payoff > Rational::ONE_HALF);
                assert_eq!(beats(&cert.counter, &target).unwrap(), BeatsOutcome::AWins);
                assert!(!all_one_step_counters(&target).unwrap().is_empty());
            }
        }
    });
}

#[test]
fn criterion_7_flat_xi_profile_characterizes_standard() {
    criterion(7, "flat ξ profile means standard for n = 4..8 but not n = 3", || {
        for n in 4..=8 {
            for d in enumerate_dice(n) {
                assert_eq!(xi_all_equal(&d), d.is_standard(), "n={n}, die {d}");
            }
        }
        let impostor = die(&[2, 2, 2]);
        assert!(xi_all_equal(&impostor) && !impostor.is_standard());
    });
}

#[test]
fn criterion_8_one_step_connectivity() {
    criterion(8, "every space is connected by one-step moves, n = 1..8", || {
        for n in 1..=8 {
            assert!(verify_one_step_connectivity(n), "disconnected at n={n}");
        }
    });
}

#[test]
fn criterion_9_core_invariants() {
    criterion(9, "payoff laws, count agreement, scan agreement, no floats", || {
        // the game is constant-sum and beats follows the payoff ordering
        for n in 1..=6 {
            let dice = all_dice(n);
            for a in &dice {
                for b in &dice {
                    let u = payoff(a, b).unwrap();
                    assert_eq!(u + payoff(b, a).unwrap(), Rational::ONE);
                    let expected = match u.cmp(&Rational::ONE_HALF) {
                        std::cmp::Ordering::Greater => BeatsOutcome::AWins,
                        std::cmp::Ordering::Less => BeatsOutcome::BWins,
                        std::cmp::Ordering::Equal => BeatsOutcome::Tie,
                    };
                    assert_eq!(beats(a, b).unwrap(), expected);
                }
            }
        }

        // the lazy enumerator and the closed-form count agree
        for n in 1..=10 {
            assert_eq!(enumerate_dice(n).count() as u128, count_dice(n));
        }

        // the merge scan and the quadratic reference agree on every pair
        for n in 1..=8 {
            let dice = all_dice(n);
            for a in &dice {
                for b in &dice {
                    assert_eq!(tally(a, b).unwrap(), tally_reference(a, b).unwrap());
                }
            }
        }

        // all arithmetic is exact: no floating-point types in the library
        let src = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("src");
        for entry in std::fs::read_dir(&src).unwrap() {
            let path = entry.unwrap().path();
            if path.extension().is_some_and(|e| e == "rs") {
                let text = std::fs::read_to_string(&path).unwrap();
                assert!(
                    !text.contains("f32") && !text.contains("f64"),
                    "floating point in {}",
                    path.display()
                );
            }
        }
    });
}
