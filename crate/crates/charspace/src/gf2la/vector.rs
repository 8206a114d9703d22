use std::fmt;

const WORD_BITS: usize = 64;

/// A vector over GF(2), bit-packed 64 coordinates per word.
///
/// Coordinates beyond `len` are kept zero in the packed words, so derived
/// equality and hashing agree with coordinatewise equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zero(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(WORD_BITS).max(1)],
        }
    }

    /// The unit vector with a single 1 at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zero(len);
        v.set(index, true);
        v
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zero(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    /// Parses a string of `0`/`1` characters, coordinate 0 first.
    pub fn from_bitstring(s: &str) -> Option<Self> {
        let mut v = Self::zero(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return None,
            }
        }
        Some(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        self.words[index / WORD_BITS] >> (index % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Coordinatewise addition; over GF(2) this is XOR and `v + v = 0`.
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut v = self.clone();
        v.xor_assign(other);
        v
    }

    /// Standard inner product, i.e. parity of the AND of the two vectors.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Index of the lowest set coordinate, if any.
    pub fn lowest_set(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates the indices of set coordinates in increasing order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(k * WORD_BITS + i)
                }
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The low word of the packing; only meaningful when `len <= 64`.
    pub fn word0(&self) -> u64 {
        self.words[0]
    }

    /// Builds a vector of length `len <= 64` from a packed word.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= WORD_BITS);
        let mask = if len == WORD_BITS { !0 } else { (1u64 << len) - 1 };
        BitVector {
            len,
            words: vec![word & mask],
        }
    }

    /// Renders as a `0`/`1` string, coordinate 0 first.
    pub fn bitstring(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bitstring())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.bitstring())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vectors_and_support() {
        let v = BitVector::from_indices(70, &[0, 2, 69]);
        assert_eq!(v.support().collect::<Vec<_>>(), vec![0, 2, 69]);
        assert_eq!(v.lowest_set(), Some(0));
        assert_eq!(v.count_ones(), 3);
    }

    #[test]
    fn xor_is_involutive() {
        let a = BitVector::from_indices(10, &[1, 3, 5]);
        let b = BitVector::from_indices(10, &[3, 4]);
        let c = a.xor(&b);
        assert_eq!(c.xor(&b), a);
        assert!(a.xor(&a).is_zero());
    }

    #[test]
    fn dot_parity() {
        let a = BitVector::from_indices(6, &[0, 1, 2]);
        let b = BitVector::from_indices(6, &[1, 2, 3]);
        assert!(!a.dot(&b)); // overlap {1,2}, even
        let c = BitVector::from_indices(6, &[2]);
        assert!(a.dot(&c));
    }

    #[test]
    fn bitstring_round_trip() {
        let s = "101001";
        let v = BitVector::from_bitstring(s).unwrap();
        assert_eq!(v.bitstring(), s);
    }
}
