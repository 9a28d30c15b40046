use std::cmp::Ordering;
use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

/// A subset of the set labels `{1, ..., n}`, stored as a bit vector.
///
/// This is the universal currency of the crate: Venn regions, nerve and tube
/// faces, and formula terms are all index sets. Labels are 1-based. Sets over
/// at most 64 labels stay inline; larger label ranges spill to the heap.
///
/// The canonical order (used everywhere a deterministic order matters) is by
/// cardinality first, then lexicographically on the sorted member lists.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IndexSet {
    /// Bit `i` of word `w` encodes membership of label `64*w + i + 1`.
    /// Invariant: no trailing zero words, so equal sets have equal words.
    words: SmallVec<[u64; 1]>,
}

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet { words: SmallVec::new() }
    }

    pub fn singleton(label: u32) -> Self {
        let mut s = IndexSet::empty();
        s.insert(label);
        s
    }

    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Self {
        let mut s = IndexSet::empty();
        for l in labels {
            s.insert(l);
        }
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, label: u32) {
        assert!(label >= 1, "set labels are 1-based");
        let bit = (label - 1) as usize;
        let word = bit / 64;
        if word >= self.words.len() {
            self.words.resize(word + 1, 0);
        }
        self.words[word] |= 1u64 << (bit % 64);
    }

    pub fn remove(&mut self, label: u32) {
        assert!(label >= 1, "set labels are 1-based");
        let bit = (label - 1) as usize;
        let word = bit / 64;
        if word < self.words.len() {
            self.words[word] &= !(1u64 << (bit % 64));
            self.trim();
        }
    }

    pub fn contains(&self, label: u32) -> bool {
        if label == 0 {
            return false;
        }
        let bit = (label - 1) as usize;
        let word = bit / 64;
        word < self.words.len() && self.words[word] >> (bit % 64) & 1 == 1
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(short.words.iter()) {
            *w |= o;
        }
        IndexSet { words }
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        let len = self.words.len().min(other.words.len());
        let mut s = IndexSet {
            words: self.words[..len]
                .iter()
                .zip(other.words[..len].iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    /// True iff every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        if self.words.len() > other.words.len() {
            return false;
        }
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset_of(&self, other: &IndexSet) -> bool {
        self != other && self.is_subset_of(other)
    }

    /// Clone with one extra label.
    pub fn with(&self, label: u32) -> IndexSet {
        let mut s = self.clone();
        s.insert(label);
        s
    }

    /// Clone with one label removed.
    pub fn without(&self, label: u32) -> IndexSet {
        let mut s = self.clone();
        s.remove(label);
        s
    }

    /// Largest label present, or 0 for the empty set.
    pub fn max_label(&self) -> u32 {
        match self.words.last() {
            None => 0,
            Some(w) => (self.words.len() * 64 - w.leading_zeros() as usize) as u32,
        }
    }

    /// Iterate over members in ascending label order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = (wi * 64) as u32;
            BitIter { word: w }.map(move |b| base + b + 1)
        })
    }

    pub fn to_labels(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All nonempty subsets (the downward closure of a single face).
    /// Exponential; callers guard cardinality.
    pub fn nonempty_subsets(&self) -> Vec<IndexSet> {
        let labels = self.to_labels();
        let mut out = Vec::with_capacity((1usize << labels.len()) - 1);
        for mask in 1u64..(1u64 << labels.len()) {
            let mut s = IndexSet::empty();
            for (i, &l) in labels.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    s.insert(l);
                }
            }
            out.push(s);
        }
        out
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = u32;
    fn next(&mut self) -> Option<u32> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(b)
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            // Lexicographic on sorted member lists: the set owning the lowest
            // differing bit has the smaller first point of difference.
            for i in 0..self.words.len().max(other.words.len()) {
                let a = self.words.get(i).copied().unwrap_or(0);
                let b = other.words.get(i).copied().unwrap_or(0);
                let diff = a ^ b;
                if diff != 0 {
                    let low = diff & diff.wrapping_neg();
                    return if a & low != 0 { Ordering::Less } else { Ordering::Greater };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<u32> for IndexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        IndexSet::from_labels(iter)
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for l in self.iter() {
            seq.serialize_element(&l)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = IndexSet;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of 1-based set labels")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<IndexSet, A::Error> {
                let mut s = IndexSet::empty();
                while let Some(l) = seq.next_element::<u32>()? {
                    if l == 0 {
                        return Err(serde::de::Error::custom("set labels are 1-based"));
                    }
                    s.insert(l);
                }
                Ok(s)
            }
        }
        deserializer.deserialize_seq(V)
    }
}
