//! Fixed-length bitstrings over Z_2^n.
//!
//! Convention used everywhere in this crate: bit index 0 is qubit 0 and is the
//! leftmost character in textual form, so `"100"` has bit 0 set. When a
//! bitstring is packed into a `u64` (dense tables, statevector indices), bit i
//! maps to the value `1 << i`.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

const BLOCK_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    n: usize,
    blocks: Vec<u64>,
}

#[inline]
fn blocks_for(n: usize) -> usize {
    n.div_ceil(BLOCK_BITS)
}

impl BitString {
    pub fn zeros(n: usize) -> Self {
        BitString {
            n,
            blocks: vec![0; blocks_for(n)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut s = BitString::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            s.set(i, b);
        }
        s
    }

    /// Unpack the low `n` bits of `value` (bit i of `value` becomes bit i).
    pub fn from_u64(n: usize, value: u64) -> Self {
        assert!(n <= 64, "from_u64 requires n <= 64");
        let mut s = BitString::zeros(n);
        if n > 0 {
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            s.blocks[0] = value & mask;
        }
        s
    }

    /// Pack into a `u64`; requires n <= 64.
    pub fn to_u64(&self) -> u64 {
        assert!(self.n <= 64, "to_u64 requires n <= 64");
        if self.n == 0 {
            0
        } else {
            self.blocks[0]
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        (self.blocks[i / BLOCK_BITS] >> (i % BLOCK_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.n);
        let mask = 1u64 << (i % BLOCK_BITS);
        if value {
            self.blocks[i / BLOCK_BITS] |= mask;
        } else {
            self.blocks[i / BLOCK_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.blocks[i / BLOCK_BITS] ^= 1u64 << (i % BLOCK_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Number of set bits.
    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn xor(&self, other: &BitString) -> BitString {
        assert_eq!(self.n, other.n, "bitstring length mismatch");
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a ^ b)
            .collect();
        BitString { n: self.n, blocks }
    }

    pub fn xor_assign(&mut self, other: &BitString) {
        assert_eq!(self.n, other.n, "bitstring length mismatch");
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    /// Hamming distance D(a, b) = |supp(a xor b)|.
    pub fn hamming_distance(&self, other: &BitString) -> usize {
        assert_eq!(self.n, other.n, "bitstring length mismatch");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Parity of |self AND other|, the symplectic-form building block.
    pub fn and_parity(&self, other: &BitString) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.n).map(move |i| self.get(i))
    }

    pub(crate) fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub(crate) fn blocks_mut(&mut self) -> &mut [u64] {
        &mut self.blocks
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(Error::Parse {
                        what: "bitstring",
                        text: s.to_string(),
                    })
                }
            }
        }
        if bits.is_empty() {
            return Err(Error::EmptyRegister);
        }
        Ok(BitString::from_bools(&bits))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter_bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

/// In-place Walsh-Hadamard transform: out[a] = sum_g in[g] * (-1)^{|g & a|}.
///
/// `data.len()` must be a power of two. Unnormalized.
pub fn walsh_hadamard_in_place(data: &mut [f64]) {
    let n = data.len();
    assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        let step = h * 2;
        let mut i = 0;
        while i < n {
            for j in i..i + h {
                let a = data[j];
                let b = data[j + h];
                data[j] = a + b;
                data[j + h] = a - b;
            }
            i += step;
        }
        h *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_roundtrip() {
        let s: BitString = "01101".parse().unwrap();
        assert_eq!(s.n(), 5);
        assert!(!s.get(0) && s.get(1) && s.get(2) && !s.get(3) && s.get(4));
        assert_eq!(s.to_string(), "01101");
    }

    #[test]
    fn xor_and_distance() {
        let a: BitString = "0011".parse().unwrap();
        let b: BitString = "0101".parse().unwrap();
        assert_eq!(a.xor(&b).to_string(), "0110");
        assert_eq!(a.hamming_distance(&b), 2);
        assert_eq!(a.hamming_distance(&a), 0);
        assert_eq!(a.weight(), 2);
    }

    #[test]
    fn u64_packing_keeps_bit_order() {
        let s = BitString::from_u64(3, 0b001);
        assert_eq!(s.to_string(), "100");
        assert_eq!(s.to_u64(), 1);
    }

    #[test]
    fn long_strings_cross_block_boundary() {
        let mut s = BitString::zeros(130);
        s.set(0, true);
        s.set(64, true);
        s.set(129, true);
        assert_eq!(s.weight(), 3);
        let t = s.xor(&s);
        assert!(t.is_zero());
    }

    #[test]
    fn wht_matches_direct() {
        let mut data = vec![0.25, -1.0, 2.0, 0.5, 0.0, 1.0, -3.0, 4.0];
        let orig = data.clone();
        walsh_hadamard_in_place(&mut data);
        for a in 0..8usize {
            let direct: f64 = (0..8usize)
                .map(|g| {
                    let sign = if (g & a).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
                    orig[g] * sign
                })
                .sum();
            assert!((data[a] - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_chars() {
        assert!("01x".parse::<BitString>().is_err());
        assert!("".parse::<BitString>().is_err());
    }
}
