//! Exhaustive generation of the n-sided die space, plus an independent
//! counting routine used to cross-check the generator.

use crate::dice::Die;

/// Lazy generator of every valid `n`-sided die, in strictly increasing
/// lexicographic order of the sorted face sequences.
///
/// Internally this walks non-decreasing sequences over `1..=n` with a
/// remaining-sum feasibility bound at every slot, so dead branches are never
/// entered: each face chosen at a slot with `s` slots left (including the
/// current one) and `r` sum left must lie in
/// `max(prev, r - (s-1)*n) ..= min(n, r / s)`.
pub struct DieSpaceIterator {
    n: u32,
    faces: Vec<u32>,
    remaining: u32,
    primed: bool,
    exhausted: bool,
}

impl DieSpaceIterator {
    fn new(n: u32) -> Self {
        let target = n * (n + 1) / 2;
        DieSpaceIterator {
            n,
            faces: Vec::with_capacity(n as usize),
            remaining: target,
            primed: false,
            exhausted: n == 0,
        }
    }

    /// Extends a feasible prefix to a full sequence with the smallest legal
    /// face at every slot.
    fn fill_minimal(&mut self) {
        while (self.faces.len() as u32) < self.n {
            let slots = self.n - self.faces.len() as u32;
            let prev = self.faces.last().copied().unwrap_or(1);
            let floor = self.remaining as i64 - (slots as i64 - 1) * self.n as i64;
            let face = floor.max(prev as i64) as u32;
            self.faces.push(face);
            self.remaining -= face;
        }
    }

    fn emit(&self) -> Die {
        Die::new(self.faces.clone()).expect("enumerated face sequence is a valid die")
    }
}

impl Iterator for DieSpaceIterator {
    type Item = Die;

    fn next(&mut self) -> Option<Die> {
        if self.exhausted {
            return None;
        }
        if !self.primed {
            self.primed = true;
            self.fill_minimal();
            return Some(self.emit());
        }
        // backtrack to the rightmost slot whose face can grow and still leave
        // a completable suffix, then refill minimally
        loop {
            let Some(face) = self.faces.pop() else {
                self.exhausted = true;
                return None;
            };
            self.remaining += face;
            let slots = self.n - self.faces.len() as u32;
            let ceiling = self.n.min(self.remaining / slots);
            if face < ceiling {
                self.faces.push(face + 1);
                self.remaining -= face + 1;
                self.fill_minimal();
                return Some(self.emit());
            }
        }
    }
}

/// Iterates every valid `n`-sided die exactly once, lexicographically.
/// Zero-sided spaces are empty.
pub fn enumerate_dice(n: u32) -> DieSpaceIterator {
    DieSpaceIterator::new(n)
}

/// The whole die space, materialized in lexicographic order.
pub fn all_dice(n: u32) -> Vec<Die> {
    enumerate_dice(n).collect()
}

/// Size of the `n`-sided die space, computed by dynamic programming over
/// (slots used, face lower bound, remaining sum) without materializing any
/// die. Serves as an independent oracle for the enumerator.
pub fn count_dice(n: u32) -> u128 {
    if n == 0 {
        return 0;
    }
    let n = n as usize;
    let target = n * (n + 1) / 2;
    // table[v][r] = number of non-decreasing sequences of the current length
    // with faces in v..=n and sum r; length starts at 0 (only the empty
    // sequence, sum 0) and grows to n
    let mut table = vec![vec![0u128; target + 1]; n + 2];
    for row in table.iter_mut() {
        row[0] = 1;
    }
    for _ in 1..=n {
        let mut next = vec![vec![0u128; target + 1]; n + 2];
        for v in (1..=n).rev() {
            for r in 0..=target {
                // either no face equals v (bound rises to v+1), or one more
                // face equals v (one slot fewer, min face still v)
                let take = if r >= v { table[v][r - v] } else { 0 };
                next[v][r] = next[v + 1][r] + take;
            }
        }
        table = next;
    }
    table[1][target]
}
