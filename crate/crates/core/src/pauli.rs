//! n-qubit Pauli operators in symplectic (X/Z bit-pair) encoding.
//!
//! A [`SignedPauli`] stores the operator `i^k * X^x Z^z` where `x`, `z` are the
//! X- and Z-bit vectors and `k` is a quarter phase in Z_4. The canonical
//! Hermitian Pauli with a Y on each site where both bits are set corresponds to
//! `k = |x & z| mod 4` (each Y contributes one factor of i, since Y = i XZ).

use crate::bits::BitString;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Single-site Pauli operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SiteOp {
    I,
    X,
    Y,
    Z,
}

impl SiteOp {
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => SiteOp::I,
            (true, false) => SiteOp::X,
            (true, true) => SiteOp::Y,
            (false, true) => SiteOp::Z,
        }
    }

    pub fn to_bits(self) -> (bool, bool) {
        match self {
            SiteOp::I => (false, false),
            SiteOp::X => (true, false),
            SiteOp::Y => (true, true),
            SiteOp::Z => (false, true),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            SiteOp::I => 'I',
            SiteOp::X => 'X',
            SiteOp::Y => 'Y',
            SiteOp::Z => 'Z',
        }
    }
}

/// Quarter phase i^k, k in Z_4, relative to the canonical Hermitian Pauli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    PlusOne,
    PlusI,
    MinusOne,
    MinusI,
}

impl Phase {
    pub fn from_quarter(k: u8) -> Self {
        match k % 4 {
            0 => Phase::PlusOne,
            1 => Phase::PlusI,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    pub fn quarter(self) -> u8 {
        match self {
            Phase::PlusOne => 0,
            Phase::PlusI => 1,
            Phase::MinusOne => 2,
            Phase::MinusI => 3,
        }
    }

    /// The real sign, for Hermitian Paulis.
    pub fn sign(self) -> Result<f64> {
        match self {
            Phase::PlusOne => Ok(1.0),
            Phase::MinusOne => Ok(-1.0),
            _ => Err(Error::Parse {
                what: "phase",
                text: "imaginary phase on a Hermitian Pauli".into(),
            }),
        }
    }
}

/// Unsigned n-qubit Pauli string.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitString,
    z: BitString,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString {
            x: BitString::zeros(n),
            z: BitString::zeros(n),
        }
    }

    pub fn from_bits(x: BitString, z: BitString) -> Result<Self> {
        if x.n() != z.n() {
            return Err(Error::LengthMismatch { a: x.n(), b: z.n() });
        }
        Ok(PauliString { x, z })
    }

    pub fn single(n: usize, site: usize, op: SiteOp) -> Self {
        let mut p = PauliString::identity(n);
        p.set_site(site, op);
        p
    }

    /// Decode a packed index: bit i of `xbits`/`zbits` is site i. Requires n <= 32
    /// when used with the dense 4^n enumeration (`xbits | zbits << n` indexing).
    pub fn from_packed(n: usize, xbits: u64, zbits: u64) -> Self {
        PauliString {
            x: BitString::from_u64(n, xbits),
            z: BitString::from_u64(n, zbits),
        }
    }

    pub fn n(&self) -> usize {
        self.x.n()
    }

    pub fn x_bits(&self) -> &BitString {
        &self.x
    }

    pub fn z_bits(&self) -> &BitString {
        &self.z
    }

    pub fn site(&self, i: usize) -> SiteOp {
        SiteOp::from_bits(self.x.get(i), self.z.get(i))
    }

    pub fn set_site(&mut self, i: usize, op: SiteOp) {
        let (x, z) = op.to_bits();
        self.x.set(i, x);
        self.z.set(i, z);
    }

    /// Number of non-identity sites.
    pub fn weight(&self) -> usize {
        self.x
            .blocks()
            .iter()
            .zip(self.z.blocks())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// Number of Y sites (both bits set).
    pub fn y_count(&self) -> usize {
        self.x
            .blocks()
            .iter()
            .zip(self.z.blocks())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The signature bitstring: bit i set iff site i is not the identity.
    pub fn signature(&self) -> BitString {
        let mut s = BitString::zeros(self.n());
        for (i, (a, b)) in self
            .x
            .blocks()
            .iter()
            .zip(self.z.blocks())
            .enumerate()
        {
            s.blocks_mut()[i] = a | b;
        }
        s
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Symplectic product: false if the operators commute, true if they
    /// anticommute.
    pub fn anticommutes(&self, other: &PauliString) -> bool {
        self.x.and_parity(&other.z) ^ self.z.and_parity(&other.x)
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut ops = Vec::with_capacity(s.len());
        for c in s.chars() {
            ops.push(match c {
                'I' | 'i' => SiteOp::I,
                'X' | 'x' => SiteOp::X,
                'Y' | 'y' => SiteOp::Y,
                'Z' | 'z' => SiteOp::Z,
                _ => {
                    return Err(Error::Parse {
                        what: "Pauli string",
                        text: s.to_string(),
                    })
                }
            });
        }
        if ops.is_empty() {
            return Err(Error::EmptyRegister);
        }
        let mut p = PauliString::identity(ops.len());
        for (i, op) in ops.into_iter().enumerate() {
            p.set_site(i, op);
        }
        Ok(p)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            write!(f, "{}", self.site(i).to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

/// Pauli string with a quarter phase: the operator `i^k X^x Z^z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPauli {
    pauli: PauliString,
    /// Phase exponent k of the stored operator i^k X^x Z^z.
    xz_phase: u8,
}

impl SignedPauli {
    pub fn identity(n: usize) -> Self {
        SignedPauli {
            pauli: PauliString::identity(n),
            xz_phase: 0,
        }
    }

    /// Canonical Hermitian Pauli with the given sign.
    pub fn hermitian(pauli: PauliString, negative: bool) -> Self {
        let k = (pauli.y_count() as u8 + if negative { 2 } else { 0 }) % 4;
        SignedPauli {
            pauli,
            xz_phase: k,
        }
    }

    pub(crate) fn from_raw(pauli: PauliString, xz_phase: u8) -> Self {
        SignedPauli {
            pauli,
            xz_phase: xz_phase % 4,
        }
    }

    pub fn n(&self) -> usize {
        self.pauli.n()
    }

    pub fn pauli(&self) -> &PauliString {
        &self.pauli
    }

    pub(crate) fn xz_phase(&self) -> u8 {
        self.xz_phase
    }

    /// Phase relative to the canonical Hermitian Pauli of the same string.
    pub fn phase(&self) -> Phase {
        let y = (self.pauli.y_count() % 4) as u8;
        Phase::from_quarter((self.xz_phase + 4 - y) % 4)
    }

    pub fn is_hermitian(&self) -> bool {
        matches!(self.phase(), Phase::PlusOne | Phase::MinusOne)
    }

    pub fn weight(&self) -> usize {
        self.pauli.weight()
    }

    /// Product self * other with exact phase tracking.
    pub fn mul(&self, other: &SignedPauli) -> SignedPauli {
        assert_eq!(self.n(), other.n(), "Pauli length mismatch");
        // (i^k1 X^x1 Z^z1)(i^k2 X^x2 Z^z2) = i^(k1+k2) (-1)^(z1.x2) X^(x1^x2) Z^(z1^z2)
        let cross = self.pauli.z_bits().and_parity(other.pauli.x_bits());
        let k = (self.xz_phase + other.xz_phase + if cross { 2 } else { 0 }) % 4;
        let x = self.pauli.x_bits().xor(other.pauli.x_bits());
        let z = self.pauli.z_bits().xor(other.pauli.z_bits());
        SignedPauli {
            pauli: PauliString { x, z },
            xz_phase: k,
        }
    }

    pub fn anticommutes(&self, other: &SignedPauli) -> bool {
        self.pauli.anticommutes(&other.pauli)
    }
}

impl fmt::Display for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase() {
            Phase::PlusOne => "+",
            Phase::PlusI => "+i",
            Phase::MinusOne => "-",
            Phase::MinusI => "-i",
        };
        write!(f, "{}{}", prefix, self.pauli)
    }
}

impl fmt::Debug for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPauli({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_examples() {
        let p: PauliString = "III".parse().unwrap();
        assert_eq!(p.weight(), 0);
        let p: PauliString = "ZIY".parse().unwrap();
        assert_eq!(p.weight(), 2);
        let p: PauliString = "XXXXX".parse().unwrap();
        assert_eq!(p.weight(), 5);
    }

    #[test]
    fn signature_examples() {
        let p: PauliString = "II".parse().unwrap();
        assert_eq!(p.signature().to_string(), "00");
        let p: PauliString = "XIY".parse().unwrap();
        assert_eq!(p.signature().to_string(), "101");
        let p: PauliString = "ZZZZ".parse().unwrap();
        assert_eq!(p.signature().to_string(), "1111");
    }

    #[test]
    fn y_is_i_times_xz() {
        let y = SignedPauli::hermitian("Y".parse().unwrap(), false);
        assert_eq!(y.xz_phase(), 1);
        assert_eq!(y.phase(), Phase::PlusOne);
        // X * Z = -i Y, so (X)(Z) should have canonical phase -i.
        let x = SignedPauli::hermitian("X".parse().unwrap(), false);
        let z = SignedPauli::hermitian("Z".parse().unwrap(), false);
        let xz = x.mul(&z);
        assert_eq!(xz.pauli().to_string(), "Y");
        assert_eq!(xz.phase(), Phase::MinusI);
        // Z * X = i Y.
        let zx = z.mul(&x);
        assert_eq!(zx.phase(), Phase::PlusI);
    }

    #[test]
    fn product_squares_to_identity_sign() {
        for s in ["X", "Y", "Z"] {
            let p = SignedPauli::hermitian(s.parse().unwrap(), false);
            let sq = p.mul(&p);
            assert!(sq.pauli().is_identity());
            assert_eq!(sq.phase(), Phase::PlusOne, "{s}^2 should be +I");
        }
    }

    #[test]
    fn commutation() {
        let x: PauliString = "XI".parse().unwrap();
        let z: PauliString = "ZI".parse().unwrap();
        let zz: PauliString = "ZZ".parse().unwrap();
        let xx: PauliString = "XX".parse().unwrap();
        assert!(x.anticommutes(&z));
        assert!(!xx.anticommutes(&zz));
        assert!(!x.anticommutes(&x));
    }

    #[test]
    fn display_signs() {
        let p = SignedPauli::hermitian("XY".parse().unwrap(), true);
        assert_eq!(p.to_string(), "-XY");
        assert_eq!(p.phase(), Phase::MinusOne);
    }
}
