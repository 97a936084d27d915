//! Dice as multisets of face values, plus the one-step moves between them.
//!
//! An `n`-sided die carries `n` faces drawn from `1..=n` whose sum equals
//! `n(n+1)/2` — the same total as the standard die `{1, 2, ..., n}`. Faces are
//! kept sorted ascending, so two dice with the same multiset of faces compare
//! equal regardless of construction order.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Why a face list does not describe a valid die.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("a die needs at least one side")]
    ZeroSides,
    #[error("expected {expected} faces, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("face value {face} outside 1..={n}")]
    FaceOutOfRange { face: u32, n: u32 },
    #[error("face sum {got} != required {expected}")]
    WrongSum { expected: u64, got: u64 },
}

/// Why a requested one-step move cannot be applied.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("decrement and increment positions must differ")]
    SamePosition,
    #[error("position {pos} outside 0..{len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("cannot decrement a face already at 1")]
    DecrementFloor,
    #[error("cannot increment a face already at {n}")]
    IncrementCeiling { n: u32 },
}

/// An `n`-sided die: `n` faces in `1..=n`, sorted ascending, summing to
/// `n(n+1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Die {
    faces: Vec<u32>,
}

impl Die {
    /// Builds a die from faces in any order, validating side count, face
    /// range, and face sum.
    pub fn new(mut faces: Vec<u32>) -> Result<Self, ValidationError> {
        if faces.is_empty() {
            return Err(ValidationError::ZeroSides);
        }
        let n = faces.len() as u32;
        for &face in &faces {
            if face < 1 || face > n {
                return Err(ValidationError::FaceOutOfRange { face, n });
            }
        }
        let expected = u64::from(n) * u64::from(n + 1) / 2;
        let got = faces.iter().map(|&f| u64::from(f)).sum();
        if got != expected {
            return Err(ValidationError::WrongSum { expected, got });
        }
        faces.sort_unstable();
        Ok(Die { faces })
    }

    /// Builds a die for an expected side count, rejecting face lists of any
    /// other length up front.
    pub fn with_sides(n: u32, faces: Vec<u32>) -> Result<Self, ValidationError> {
        if n > 0 && faces.len() != n as usize {
            return Err(ValidationError::WrongLength {
                expected: n as usize,
                got: faces.len(),
            });
        }
        Die::new(faces)
    }

    /// The standard die `{1, 2, ..., n}`.
    pub fn standard(n: u32) -> Result<Self, ValidationError> {
        if n == 0 {
            return Err(ValidationError::ZeroSides);
        }
        Ok(Die {
            faces: (1..=n).collect(),
        })
    }

    pub fn sides(&self) -> u32 {
        self.faces.len() as u32
    }

    /// Faces in ascending order.
    pub fn faces(&self) -> &[u32] {
        &self.faces
    }

    pub fn is_standard(&self) -> bool {
        self.faces
            .iter()
            .enumerate()
            .all(|(i, &f)| f == i as u32 + 1)
    }

    /// Face multiplicities: entry `k` (0-based `k-1`) counts faces equal to
    /// `k`, for `k` in `1..=n`.
    pub fn gamma_profile(&self) -> Vec<u32> {
        let mut gamma = vec![0u32; self.faces.len()];
        for &face in &self.faces {
            gamma[(face - 1) as usize] += 1;
        }
        gamma
    }

    /// Adjacent multiplicity sums: entry `k` (0-based `k-1`) is
    /// `gamma_k + gamma_{k+1}`, for `k` in `1..=n-1`. Empty for `n = 1`.
    pub fn xi_profile(&self) -> Vec<u32> {
        let gamma = self.gamma_profile();
        gamma.windows(2).map(|w| w[0] + w[1]).collect()
    }

    /// Moves one unit of face weight: decrements the face at `dec_pos` and
    /// increments the face at `inc_pos` (0-based positions into the sorted
    /// face list), keeping the sum fixed. Fails if either face would leave
    /// `1..=n`.
    pub fn one_step(&self, dec_pos: usize, inc_pos: usize) -> Result<Self, StepError> {
        if dec_pos == inc_pos {
            return Err(StepError::SamePosition);
        }
        let len = self.faces.len();
        for pos in [dec_pos, inc_pos] {
            if pos >= len {
                return Err(StepError::PositionOutOfRange { pos, len });
            }
        }
        let n = self.sides();
        if self.faces[dec_pos] == 1 {
            return Err(StepError::DecrementFloor);
        }
        if self.faces[inc_pos] == n {
            return Err(StepError::IncrementCeiling { n });
        }
        let mut faces = self.faces.clone();
        faces[dec_pos] -= 1;
        faces[inc_pos] += 1;
        faces.sort_unstable();
        Ok(Die { faces })
    }

    /// Every die reachable by a single one-step move, excluding this die
    /// itself (moving weight between two equal faces lands back on the same
    /// multiset).
    pub fn one_step_neighbors(&self) -> BTreeSet<Die> {
        let len = self.faces.len();
        let mut out = BTreeSet::new();
        for dec_pos in 0..len {
            for inc_pos in 0..len {
                if dec_pos == inc_pos {
                    continue;
                }
                if let Ok(die) = self.one_step(dec_pos, inc_pos) {
                    if die != *self {
                        out.insert(die);
                    }
                }
            }
        }
        out
    }
}

impl From<Die> for Vec<u32> {
    fn from(die: Die) -> Vec<u32> {
        die.faces
    }
}

impl TryFrom<Vec<u32>> for Die {
    type Error = ValidationError;

    fn try_from(faces: Vec<u32>) -> Result<Self, Self::Error> {
        Die::new(faces)
    }
}

impl fmt::Display for Die {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, face) in self.faces.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_accepts_sorted_multiset_and_rejects_bad_input() {
        let die = Die::new(vec![4, 1, 4, 1]).unwrap();
        assert_eq!(die.faces(), &[1, 1, 4, 4]);
        assert_eq!(die.sides(), 4);

        assert_eq!(Die::new(vec![]), Err(ValidationError::ZeroSides));
        assert_eq!(
            Die::new(vec![0, 2, 4, 4]),
            Err(ValidationError::FaceOutOfRange { face: 0, n: 4 })
        );
        assert_eq!(
            Die::new(vec![1, 2, 3, 5]),
            Err(ValidationError::FaceOutOfRange { face: 5, n: 4 })
        );
        assert_eq!(
            Die::new(vec![1, 1, 1, 4]),
            Err(ValidationError::WrongSum {
                expected: 10,
                got: 7
            })
        );
        assert_eq!(
            Die::with_sides(5, vec![1, 1, 4, 4]),
            Err(ValidationError::WrongLength {
                expected: 5,
                got: 4
            })
        );
        assert_eq!(
            Die::with_sides(4, vec![4, 1, 4, 1]).unwrap().faces(),
            &[1, 1, 4, 4]
        );
    }

    #[test]
    fn standard_die_is_identity_permutation() {
        let s = Die::standard(4).unwrap();
        assert_eq!(s.faces(), &[1, 2, 3, 4]);
        assert!(s.is_standard());
        assert!(!Die::new(vec![1, 1, 4, 4]).unwrap().is_standard());
        assert_eq!(Die::standard(0), Err(ValidationError::ZeroSides));
    }

    #[test]
    fn profiles_count_multiplicities_and_adjacent_sums() {
        let x = Die::new(vec![1, 1, 4, 4]).unwrap();
        assert_eq!(x.gamma_profile(), vec![2, 0, 0, 2]);
        assert_eq!(x.xi_profile(), vec![2, 0, 2]);

        let s = Die::standard(4).unwrap();
        assert_eq!(s.gamma_profile(), vec![1, 1, 1, 1]);
        assert_eq!(s.xi_profile(), vec![2, 2, 2]);

        let y = Die::new(vec![2, 2, 2, 4]).unwrap();
        assert_eq!(y.gamma_profile(), vec![0, 3, 0, 1]);
        assert_eq!(y.xi_profile(), vec![3, 3, 1]);

        let one = Die::standard(1).unwrap();
        assert_eq!(one.gamma_profile(), vec![1]);
        assert_eq!(one.xi_profile(), Vec::<u32>::new());
    }

    #[test]
    fn one_step_moves_a_unit_of_weight() {
        let x = Die::new(vec![1, 1, 4, 4]).unwrap();
        // drop one 4 to 3, raise one 1 to 2
        let stepped = x.one_step(3, 0).unwrap();
        assert_eq!(stepped.faces(), &[1, 2, 3, 4]);

        assert_eq!(x.one_step(2, 2), Err(StepError::SamePosition));
        assert_eq!(
            x.one_step(4, 0),
            Err(StepError::PositionOutOfRange { pos: 4, len: 4 })
        );
        assert_eq!(x.one_step(0, 2), Err(StepError::DecrementFloor));
        assert_eq!(
            x.one_step(2, 3),
            Err(StepError::IncrementCeiling { n: 4 })
        );
    }

    #[test]
    fn neighbors_exclude_self_and_cover_the_four_sided_space() {
        let s = Die::standard(4).unwrap();
        let neighbors = s.one_step_neighbors();
        // all four non-standard 4-sided dice are one step from standard
        let expected: BTreeSet<Die> = [
            vec![1, 1, 4, 4],
            vec![1, 3, 3, 3],
            vec![2, 2, 2, 4],
            vec![2, 2, 3, 3],
        ]
        .into_iter()
        .map(|f| Die::new(f).unwrap())
        .collect();
        assert_eq!(neighbors, expected);
        assert!(!neighbors.contains(&s));

        // a die with all faces equal has no legal asymmetric move for n = 1
        let one = Die::standard(1).unwrap();
        assert!(one.one_step_neighbors().is_empty());
    }

    #[test]
    fn serde_uses_bare_face_arrays() {
        let die = Die::new(vec![1, 1, 4, 4]).unwrap();
        assert_eq!(serde_json::to_string(&die).unwrap(), "[1,1,4,4]");
        let back: Die = serde_json::from_str("[4,1,4,1]").unwrap();
        assert_eq!(back, die);
        assert!(serde_json::from_str::<Die>("[1,1,1,4]").is_err());
    }
}
