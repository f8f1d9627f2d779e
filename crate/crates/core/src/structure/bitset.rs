use crate::algebra::Elem;

/// Fixed-capacity set of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn new(capacity: usize) -> Self {
        ElemSet {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn from_elems(capacity: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = Self::new(capacity);
        for e in elems {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.words[e / 64] >> (e % 64) & 1 == 1
    }

    /// Inserts `e`; returns whether it was absent.
    #[inline]
    pub fn insert(&mut self, e: Elem) -> bool {
        let (w, b) = (e / 64, e % 64);
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter() {
        let mut s = ElemSet::new(130);
        assert!(s.insert(129));
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert_eq!(s.to_vec(), vec![3, 129]);
        assert_eq!(s.len(), 2);
        let t = ElemSet::from_elems(130, [3, 64, 129]);
        assert!(s.is_subset(&t));
        assert!(!t.is_subset(&s));
    }
}
