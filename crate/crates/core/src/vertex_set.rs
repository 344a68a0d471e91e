use std::fmt;

/// A set of vertices stored as a strictly ascending sequence of indices.
///
/// The derived `Ord` compares the sequences lexicographically, which is the
/// order the vertex numbering induces on subsets: at the first position where
/// two sets differ, the set holding the smaller vertex comes first, and a
/// proper prefix comes before its extensions.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Wraps a vector that is already strictly ascending.
    pub fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    /// Builds a set from the `true` positions of a membership mask.
    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn with(&self, v: usize) -> Self {
        let mut members = self.0.clone();
        if let Err(pos) = members.binary_search(&v) {
            members.insert(pos, v);
        }
        VertexSet(members)
    }

    pub fn without(&self, v: usize) -> Self {
        VertexSet(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn difference(&self, other: &VertexSet) -> Self {
        VertexSet(self.0.iter().copied().filter(|&x| !other.contains(x)).collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> Self {
        VertexSet(self.0.iter().copied().filter(|&x| other.contains(x)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    /// Membership mask of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// One-based, space-separated rendering used by the command line tool.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        // {1,3} < {2} in one-based labels
        assert!(VertexSet::from([0, 2]) < VertexSet::from([1]));
        assert!(VertexSet::from([0]) < VertexSet::from([0, 2]));
        assert!(VertexSet::from([0, 2]) < VertexSet::from([0, 3]));
        assert!(VertexSet::new() < VertexSet::from([0]));
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from([4, 1, 3, 1]);
        assert_eq!(a.as_slice(), &[1, 3, 4]);
        let b = VertexSet::from([0, 3]);
        assert_eq!(a.union(&b).as_slice(), &[0, 1, 3, 4]);
        assert_eq!(a.difference(&b).as_slice(), &[1, 4]);
        assert_eq!(a.intersection(&b).as_slice(), &[3]);
        assert_eq!(a.with(2).as_slice(), &[1, 2, 3, 4]);
        assert_eq!(a.without(3).as_slice(), &[1, 4]);
        assert!(VertexSet::from([1, 4]).is_subset(&a));
        assert_eq!(VertexSet::from_mask(&a.mask(6)), a);
        assert_eq!(a.to_string(), "2 4 5");
    }
}
