//! Resumable positions inside a generator's product enumeration.

/// Mixed-radix counter over `radices`; the last slot turns fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Odometer {
    radices: Vec<usize>,
    digits: Vec<usize>,
    exhausted: bool,
}

impl Odometer {
    /// An odometer with any zero radix is born exhausted. With no slots at
    /// all it yields exactly one (empty) reading.
    pub fn new(radices: Vec<usize>) -> Self {
        let exhausted = radices.contains(&0);
        Odometer { digits: vec![0; radices.len()], radices, exhausted }
    }

    pub fn current(&self) -> Option<&[usize]> {
        (!self.exhausted).then_some(self.digits.as_slice())
    }

    pub fn advance(&mut self) {
        for slot in (0..self.digits.len()).rev() {
            self.digits[slot] += 1;
            if self.digits[slot] < self.radices[slot] {
                return;
            }
            self.digits[slot] = 0;
        }
        self.exhausted = true;
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }
}

/// Which branch of the child construction applies to a flip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlipCase {
    /// No children; see the reason.
    Empty(EmptyReason),
    /// `u` is already adjacent to the rest of the parent: every choice of one
    /// candidate per private vertex.
    Free,
    /// `u` must be dominated by an added vertex `w`, taken from the candidate
    /// list at some slot `t` in `first..=last`.
    Anchored { first: usize, last: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmptyReason {
    /// This member of the parent would be left without a private vertex.
    Redundant(usize),
    /// This slot has no candidate.
    NoCandidates(usize),
    /// Nothing can dominate `u`.
    Unanchored,
}

/// Position inside the line-graph style product enumeration: the case, the
/// current anchor slot `t` in the anchored case, and per-slot choice indices.
/// In the anchored case slot 0 of the odometer picks `w`, the remaining
/// slots pick the other candidates in slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorCursor {
    Done,
    Free(Odometer),
    Anchored { t: usize, last: usize, odometer: Option<Odometer> },
}

/// Streams the candidate choices `Z` (one vertex per slot, plus the anchor in
/// the anchored case) described by a [`FlipCase`].
#[derive(Debug, Clone)]
pub struct CandidateProduct {
    lists: Vec<Vec<usize>>,
    /// Per slot, whether each candidate is adjacent to `u`.
    near_u: Vec<Vec<bool>>,
    cursor: GeneratorCursor,
}

impl CandidateProduct {
    pub fn new(case: &FlipCase, lists: Vec<Vec<usize>>, near_u: Vec<Vec<bool>>) -> Self {
        let cursor = match *case {
            FlipCase::Empty(_) => GeneratorCursor::Done,
            FlipCase::Free => GeneratorCursor::Free(Odometer::new(lists.iter().map(Vec::len).collect())),
            FlipCase::Anchored { first, last } => GeneratorCursor::Anchored { t: first, last, odometer: None },
        };
        CandidateProduct { lists, near_u, cursor }
    }

    pub fn cursor(&self) -> &GeneratorCursor {
        &self.cursor
    }

    /// Candidates allowed in slot `i` while the anchor sits at slot `t`.
    fn allowed(&self, i: usize, t: usize) -> impl Iterator<Item = usize> + '_ {
        let want_near = i == t;
        let restricted = i <= t;
        self.lists[i]
            .iter()
            .zip(&self.near_u[i])
            .filter(move |(_, &near)| !restricted || near == want_near)
            .map(|(&z, _)| z)
    }

    fn slot_order(&self, t: usize) -> impl Iterator<Item = usize> {
        std::iter::once(t).chain((0..self.lists.len()).filter(move |&i| i != t))
    }
}

impl Iterator for CandidateProduct {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            match &mut self.cursor {
                GeneratorCursor::Done => return None,
                GeneratorCursor::Free(odo) => {
                    let Some(digits) = odo.current() else {
                        self.cursor = GeneratorCursor::Done;
                        continue;
                    };
                    let choice = digits.iter().enumerate().map(|(i, &d)| self.lists[i][d]).collect();
                    odo.advance();
                    return Some(choice);
                }
                GeneratorCursor::Anchored { t, last, odometer } => {
                    let (t, last) = (*t, *last);
                    match odometer {
                        None => {
                            if t > last {
                                self.cursor = GeneratorCursor::Done;
                                continue;
                            }
                            let radices = self.slot_order(t).map(|i| self.allowed(i, t).count()).collect();
                            self.cursor =
                                GeneratorCursor::Anchored { t, last, odometer: Some(Odometer::new(radices)) };
                        }
                        Some(odo) => {
                            let Some(digits) = odo.current() else {
                                self.cursor = GeneratorCursor::Anchored { t: t + 1, last, odometer: None };
                                continue;
                            };
                            let digits = digits.to_vec();
                            odo.advance();
                            let slots: Vec<usize> = self.slot_order(t).collect();
                            let choice = slots
                                .iter()
                                .zip(digits)
                                .map(|(&i, d)| self.allowed(i, t).nth(d).expect("digit within radix"))
                                .collect();
                            return Some(choice);
                        }
                    }
                }
            }
        }
    }
}
