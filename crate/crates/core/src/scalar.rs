//! Exact scalars over ℚ, F_p and ℤ.
//!
//! A [`Scalar`] carries its ring with it, so matrices and subspaces can be
//! built at runtime from a `"field"` tag in an input file. Rationals are
//! kept in lowest terms with a positive denominator and residues mod `p`
//! are kept in `[0, p)`, which makes derived `PartialEq` an exact equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The ring a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Rationals,
    /// Integers modulo a prime `p`. The constructor [`Ring::prime_field`]
    /// checks primality.
    PrimeField(u64),
    Integers,
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        if is_prime(p) {
            Ok(Ring::PrimeField(p))
        } else {
            Err(Error::Parse(format!("{p} is not prime")))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integers)
    }

    pub fn require_field(self) -> Result<()> {
        if self.is_field() {
            Ok(())
        } else {
            Err(Error::NotAField(self))
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_i64(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_i64(self, 1)
    }

    /// Number of elements, for finite rings.
    pub fn order(self) -> Option<u64> {
        match self {
            Ring::PrimeField(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rationals => write!(f, "Q"),
            Ring::PrimeField(p) => write!(f, "Fp:{p}"),
            Ring::Integers => write!(f, "Z"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    /// Accepts `Q`, `Z`, `Fp:<p>`, and the short form `F<p>` (e.g. `F2`).
    fn from_str(s: &str) -> Result<Ring> {
        let s = s.trim();
        match s {
            "Q" => return Ok(Ring::Rationals),
            "Z" => return Ok(Ring::Integers),
            _ => {}
        }
        let digits = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime in field {s:?}")))?;
        Ring::prime_field(p)
    }
}

impl Serialize for Ring {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Ring, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of a [`Ring`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
    Integer(BigInt),
}

impl Scalar {
    pub fn from_i64(ring: Ring, n: i64) -> Scalar {
        match ring {
            Ring::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Ring::PrimeField(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
            Ring::Integers => Scalar::Integer(BigInt::from(n)),
        }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Scalar {
        Scalar::Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Rational(_) => Ring::Rationals,
            Scalar::Modular { modulus, .. } => Ring::PrimeField(*modulus),
            Scalar::Integer(_) => Ring::Integers,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
            Scalar::Integer(n) => n.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
            Scalar::Integer(n) => n.is_one(),
        }
    }

    /// True iff some `b` in the same ring has `self * b == 1`.
    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Rational(r) => !r.is_zero(),
            Scalar::Modular { value, .. } => *value != 0,
            Scalar::Integer(n) => n.abs().is_one(),
        }
    }

    pub fn invert(&self) -> Result<Scalar> {
        if !self.is_unit() {
            return Err(Error::NotAUnit {
                value: self.to_string(),
                ring: self.ring(),
            });
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
            // the only units of ℤ are ±1, each its own inverse
            Scalar::Integer(n) => Scalar::Integer(n.clone()),
        })
    }

    fn check_ring(&self, other: &Scalar) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring(),
                right: other.ring(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    /// `self / other`; `other` must be a unit.
    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_mul(&other.invert()?)
    }

    /// Parse the text form of an element of `ring`: `a/b` or `a` over ℚ,
    /// `n mod p` or `n` over F_p, `n` over ℤ.
    pub fn parse(ring: Ring, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Parse(format!("cannot read {text:?} as an element of {ring}"));
        match ring {
            Ring::Rationals => {
                let (n, d) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            Ring::PrimeField(p) => {
                let n = match text.split_once("mod") {
                    Some((n, m)) => {
                        let m: u64 = m.trim().parse().map_err(|_| bad())?;
                        if m != p {
                            return Err(Error::Parse(format!(
                                "{text:?} is reduced mod {m}, expected mod {p}"
                            )));
                        }
                        n.trim()
                    }
                    None => text,
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Ok(Scalar::Modular {
                    value: r.to_u64().ok_or_else(bad)?,
                    modulus: p,
                })
            }
            Ring::Integers => Ok(Scalar::Integer(text.parse().map_err(|_| bad())?)),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Modular { value, modulus } => write!(f, "{value} mod {modulus}"),
            Scalar::Integer(n) => write!(f, "{n}"),
        }
    }
}

// Operator forms panic on a ring mismatch; the matrix and subspace code
// checks rings once at its boundary and then uses these.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar ring mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar ring mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar ring mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            Scalar::Integer(n) => Scalar::Integer(-n),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
