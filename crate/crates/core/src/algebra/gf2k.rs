//! Small binary fields GF(2^k), k <= 16.
//!
//! A field is a modulus bit pattern (bit i is the coefficient of x^i, the
//! x^k bit included). Elements are bit vectors of length k carrying their
//! field; 0 and 1 are shared by every field.

use std::fmt;

use super::domain::{residue_mod_2pow, Domain, Field, Rat};
use super::poly::Poly;
use crate::error::{Error, Result};

pub const MAX_K: u32 = 16;

/// Low-weight irreducible polynomials, one per degree.
const STANDARD_MODULI: [u32; 16] = [
    0x3,     // x + 1
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11B,   // x^8 + x^4 + x^3 + x + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1009,  // x^12 + x^3 + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4021,  // x^14 + x^5 + 1
    0x8003,  // x^15 + x + 1
    0x1002B, // x^16 + x^5 + x^3 + x + 1
];

fn bit_degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn bitpoly_rem(mut a: u64, m: u64) -> u64 {
    let dm = bit_degree(m);
    while a != 0 && bit_degree(a) >= dm {
        a ^= m << (bit_degree(a) - dm);
    }
    a
}

/// Irreducibility over GF(2) by trial division by every polynomial of degree
/// at most k/2.
pub fn is_irreducible_gf2(modulus: u32) -> bool {
    let m = modulus as u64;
    let k = bit_degree(m);
    if k < 1 {
        return false;
    }
    for d in 1..=k / 2 {
        for low in 0..(1u64 << d) {
            let cand = (1u64 << d) | low;
            if bitpoly_rem(m, cand) == 0 {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gf2k {
    k: u32,
    modulus: u32,
}

impl Gf2k {
    pub fn new(k: u32, modulus: u32) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return Err(Error::FieldTooLarge(k));
        }
        if bit_degree(modulus as u64) != k as i32 {
            return Err(Error::InvalidModulus(format!(
                "{modulus:#b} does not have degree {k}"
            )));
        }
        if !is_irreducible_gf2(modulus) {
            return Err(Error::InvalidModulus(format!("{modulus:#b} is reducible")));
        }
        Ok(Gf2k { k, modulus })
    }

    /// The built-in field of size 2^k.
    pub fn standard(k: u32) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return Err(Error::FieldTooLarge(k));
        }
        Self::new(k, STANDARD_MODULI[k as usize - 1])
    }

    pub fn gf2() -> Self {
        Gf2k { k: 1, modulus: 0x3 }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        1u64 << self.k
    }

    pub fn elem(&self, bits: u32) -> Gf2kElem {
        assert!((bits as u64) < self.order(), "element out of range");
        Gf2kElem { bits, field: *self }
    }

    /// The class of x, a root of the modulus.
    pub fn generator(&self) -> Gf2kElem {
        if self.k == 1 {
            self.elem(1)
        } else {
            self.elem(2)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf2kElem> + '_ {
        (0..self.order() as u32).map(|b| self.elem(b))
    }

    /// The modulus as a polynomial over GF(2).
    pub fn modulus_poly(&self) -> Poly<Gf2kElem> {
        Poly::new(
            (0..=self.k)
                .map(|i| Gf2kElem::from_bit((self.modulus >> i) & 1 == 1))
                .collect(),
        )
    }

    /// An embedding of this field into `target`, sending the generator to the
    /// smallest root of the modulus in `target`.
    pub fn embedding_into(&self, target: &Gf2k) -> Option<Embedding> {
        if !target.k.is_multiple_of(self.k) {
            return None;
        }
        if self == target {
            return Some(Embedding {
                source: *self,
                target: *target,
                images: (0..self.k).map(|i| target.elem(1 << i)).collect(),
            });
        }
        let beta = *roots_in_gf2k(&self.modulus_poly(), target).first()?;
        let mut images = Vec::with_capacity(self.k as usize);
        let mut pow = target.elem(1);
        for _ in 0..self.k {
            images.push(pow);
            pow = pow.times(&beta);
        }
        Some(Embedding {
            source: *self,
            target: *target,
            images,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Embedding {
    source: Gf2k,
    target: Gf2k,
    images: Vec<Gf2kElem>,
}

impl Embedding {
    pub fn source(&self) -> Gf2k {
        self.source
    }

    pub fn target(&self) -> Gf2k {
        self.target
    }

    pub fn apply(&self, a: &Gf2kElem) -> Gf2kElem {
        if a.bits <= 1 {
            return self.target.elem(a.bits);
        }
        assert_eq!(
            a.field, self.source,
            "element is not in the embedding's source"
        );
        self.images
            .iter()
            .enumerate()
            .filter(|(i, _)| (a.bits >> i) & 1 == 1)
            .fold(self.target.elem(0), |acc, (_, img)| acc.plus(img))
    }

    pub fn apply_poly(&self, p: &Poly<Gf2kElem>) -> Poly<Gf2kElem> {
        p.map(|c| self.apply(c))
    }
}

#[derive(Clone, Copy, Eq)]
pub struct Gf2kElem {
    bits: u32,
    field: Gf2k,
}

impl Gf2kElem {
    pub fn from_bit(b: bool) -> Self {
        Gf2kElem {
            bits: b as u32,
            field: Gf2k::gf2(),
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn field(&self) -> Gf2k {
        self.field
    }

    /// Whether the element lies in the prime field GF(2).
    pub fn is_prime_field(&self) -> bool {
        self.bits <= 1
    }

    fn common_field(&self, rhs: &Self) -> Gf2k {
        if self.field == rhs.field {
            self.field
        } else if self.is_prime_field() {
            rhs.field
        } else if rhs.is_prime_field() {
            self.field
        } else {
            panic!(
                "mixing elements of GF(2^{}) and GF(2^{})",
                self.field.k, rhs.field.k
            )
        }
    }

    /// Frobenius square root.
    pub fn sqrt(&self) -> Self {
        let mut r = *self;
        for _ in 1..self.field.k {
            r = r.times(&r);
        }
        r
    }

    /// Lift into the field `f`; only prime-field elements move between fields.
    pub fn in_field(&self, f: &Gf2k) -> Self {
        if self.is_prime_field() {
            f.elem(self.bits)
        } else {
            assert_eq!(self.field, *f, "element belongs to another field");
            *self
        }
    }
}

impl PartialEq for Gf2kElem {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && (self.field == other.field || self.is_prime_field())
    }
}

impl Domain for Gf2kElem {
    fn zero() -> Self {
        Self::from_bit(false)
    }
    fn one() -> Self {
        Self::from_bit(true)
    }
    fn is_zero(&self) -> bool {
        self.bits == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        Gf2kElem {
            bits: self.bits ^ rhs.bits,
            field: self.common_field(rhs),
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        let field = self.common_field(rhs);
        let prod = clmul(self.bits as u64, rhs.bits as u64);
        Gf2kElem {
            bits: bitpoly_rem(prod, field.modulus as u64) as u32,
            field,
        }
    }
    fn negated(&self) -> Self {
        *self
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.times(&i))
    }
    fn mul_u64(&self, n: u64) -> Self {
        if n % 2 == 1 {
            *self
        } else {
            Gf2kElem {
                bits: 0,
                field: self.field,
            }
        }
    }
}

impl Field for Gf2kElem {
    fn inv(&self) -> Option<Self> {
        if self.bits == 0 {
            return None;
        }
        // a^(2^k - 2)
        Some(self.pow((1u64 << self.field.k) - 2))
    }
}

impl fmt::Display for Gf2kElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_prime_field() {
            return write!(f, "{}", self.bits);
        }
        let terms: Vec<String> = (0..self.field.k)
            .rev()
            .filter(|i| (self.bits >> i) & 1 == 1)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for Gf2kElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})[{:#b}]", self.field.k, self.bits)
    }
}

/// Every root of `h` in `field`, by evaluation at each element, in
/// increasing bit order. The zero polynomial has no listed roots.
pub fn roots_in_gf2k(h: &Poly<Gf2kElem>, field: &Gf2k) -> Vec<Gf2kElem> {
    if h.is_zero() {
        return Vec::new();
    }
    let h = h.map(|c| c.in_field(field));
    field.elements().filter(|a| h.eval(a).is_zero()).collect()
}

/// Coefficient-wise reduction of a 2-integral rational polynomial to GF(2).
pub fn reduce_mod2(h: &Poly<Rat>) -> Result<Poly<Gf2kElem>> {
    h.try_map(|c| Ok(Gf2kElem::from_bit(residue_mod_2pow(c, 1)? == 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::domain::{int, rat};

    fn gf2poly(bits: &[u32]) -> Poly<Gf2kElem> {
        Poly::new(bits.iter().map(|&b| Gf2kElem::from_bit(b == 1)).collect())
    }

    #[test]
    fn standard_moduli_are_irreducible() {
        for k in 1..=MAX_K {
            let f = Gf2k::standard(k).unwrap();
            assert_eq!(f.k(), k);
        }
        assert!(Gf2k::new(2, 0b101).is_err()); // x^2 + 1 = (x + 1)^2
        assert!(Gf2k::new(3, 0b111).is_err()); // wrong degree
        assert!(Gf2k::standard(17).is_err());
    }

    #[test]
    fn field_axioms_gf16() {
        let f = Gf2k::standard(4).unwrap();
        for a in f.elements() {
            if !a.is_zero() {
                assert!(a.times(&a.inv().unwrap()).is_one());
            }
            assert_eq!(a.sqrt().times(&a.sqrt()), a);
            for b in f.elements() {
                assert_eq!(a.times(&b), b.times(&a));
            }
        }
    }

    #[test]
    fn frobenius_is_bijective() {
        let f = Gf2k::standard(5).unwrap();
        let mut seen: Vec<u32> = f.elements().map(|a| a.times(&a).bits()).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len() as u64, f.order());
    }

    #[test]
    fn roots_examples() {
        let gf2 = Gf2k::gf2();
        let r = roots_in_gf2k(&gf2poly(&[0, 1, 1]), &gf2);
        assert_eq!(r, vec![gf2.elem(0), gf2.elem(1)]);

        let gf4 = Gf2k::standard(2).unwrap();
        let r = roots_in_gf2k(&gf2poly(&[1, 0, 0, 1]), &gf4);
        assert_eq!(r.len(), 3);
        let w = gf4.generator();
        assert!(r.contains(&gf4.elem(1)) && r.contains(&w) && r.contains(&w.times(&w)));

        assert!(roots_in_gf2k(&gf2poly(&[1, 0, 1, 1]), &gf2).is_empty());
        let gf8 = Gf2k::standard(3).unwrap();
        assert_eq!(roots_in_gf2k(&gf2poly(&[1, 0, 1, 1]), &gf8).len(), 3);
    }

    #[test]
    fn reduction_mod_two() {
        let h = Poly::from_ints(&[7, -3, 0, 1]);
        assert_eq!(reduce_mod2(&h).unwrap(), gf2poly(&[1, 1, 0, 1]));
        let h = Poly::from_ints(&[2, -1, -1]);
        assert_eq!(reduce_mod2(&h).unwrap(), gf2poly(&[0, 1, 1]));
        let h = Poly::from_rats(&[int(1), rat(1, 2)]);
        assert!(matches!(
            reduce_mod2(&h),
            Err(Error::NonIntegralCoefficient(_))
        ));
    }

    #[test]
    fn embeddings_respect_arithmetic() {
        let f4 = Gf2k::standard(2).unwrap();
        let f16 = Gf2k::standard(4).unwrap();
        let e = f4.embedding_into(&f16).unwrap();
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(e.apply(&a.times(&b)), e.apply(&a).times(&e.apply(&b)));
                assert_eq!(e.apply(&a.plus(&b)), e.apply(&a).plus(&e.apply(&b)));
            }
        }
        assert!(f4.embedding_into(&Gf2k::standard(3).unwrap()).is_none());
    }
}
