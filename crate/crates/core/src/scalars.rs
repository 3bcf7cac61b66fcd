//! Exact scalars over GF(p) (odd prime p < 2^31) and over the rationals.
//!
//! The field is chosen at runtime. A [`Scalar`] carries enough information to
//! do arithmetic on its own, so matrices and vectors can use the ordinary
//! operator traits. Mixing scalars from different fields is a logic error and
//! panics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

/// Descriptor of the ground field: `characteristic == 0` means the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Field {
    characteristic: u32,
}

impl TryFrom<u32> for Field {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        make_field(p as i64)
    }
}

impl From<Field> for u32 {
    fn from(f: Field) -> u32 {
        f.characteristic
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Validates a characteristic and returns the field descriptor.
pub fn make_field(characteristic: i64) -> Result<Field> {
    if characteristic < 0 {
        return Err(Error::InvalidField(format!(
            "negative characteristic {characteristic}"
        )));
    }
    if characteristic == 2 {
        return Err(Error::InvalidField("characteristic two excluded".into()));
    }
    let c = characteristic as u64;
    if c != 0 {
        if c >= MAX_PRIME {
            return Err(Error::InvalidField(format!(
                "characteristic {c} exceeds 2^31"
            )));
        }
        if !is_prime(c) {
            return Err(Error::InvalidField(format!("{c} is not prime")));
        }
    }
    Ok(Field {
        characteristic: c as u32,
    })
}

impl Field {
    pub fn rationals() -> Field {
        Field { characteristic: 0 }
    }

    /// GF(p); panics when `p` is not an odd prime. Use [`make_field`] for
    /// untrusted input.
    pub fn gf(p: u32) -> Field {
        make_field(p as i64).expect("odd prime characteristic")
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        if self.characteristic == 0 {
            Scalar::Q(BigRational::from_integer(BigInt::from(n)))
        } else {
            let p = self.characteristic as i64;
            Scalar::Fp {
                v: n.rem_euclid(p) as u32,
                p: self.characteristic,
            }
        }
    }

    /// `(-1)^k` as a scalar.
    pub fn sign(&self, odd: bool) -> Scalar {
        if odd {
            self.from_i64(-1)
        } else {
            self.one()
        }
    }

    /// Parses the JSON string form: `"a/b"` or `"a"` over ℚ, a decimal
    /// residue over GF(p).
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse(format!("bad scalar {s:?} for {self}"));
        let s = s.trim();
        if self.characteristic == 0 {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a, b),
                None => (s, "1"),
            };
            let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::Q(BigRational::new(num, den)))
        } else {
            let v = i64::from_str(s).map_err(|_| bad())?;
            Ok(self.from_i64(v))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "GF({})", self.characteristic)
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { v: u32, p: u32 },
    Q(BigRational),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Fp { p, .. } => Field { characteristic: *p },
            Scalar::Q(_) => Field::rationals(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Fp { v, p } => Scalar::Fp {
                v: pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32,
                p: *p,
            },
            Scalar::Q(q) => Scalar::Q(q.recip()),
        })
    }

    /// Canonical string used in JSON.
    pub fn to_canonical_string(&self) -> String {
        match self {
            Scalar::Fp { v, .. } => v.to_string(),
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
        }
    }

    /// Sign-flip in place, avoiding an allocation for the common ±1 case.
    pub fn negate(&mut self) {
        match self {
            Scalar::Fp { v, p } => {
                if *v != 0 {
                    *v = *p - *v;
                }
            }
            Scalar::Q(q) => *q = -std::mem::take(q),
        }
    }

    /// Small-integer view, if the value is an integer in `i64` range (ℚ) or
    /// a residue (GF(p)); used in tests and reports.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Fp { v, .. } => Some(*v as i64),
            Scalar::Q(q) => {
                if q.denom().is_one() && q.numer().abs() < BigInt::from(i64::MAX) {
                    q.numer().to_string().parse().ok()
                } else {
                    None
                }
            }
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

#[inline]
fn mismatch() -> ! {
    panic!("scalar field mismatch")
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: ((*a as u64 + *b as u64) % *p as u64) as u32,
                p: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            _ => mismatch(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                p: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            _ => mismatch(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: ((*a as u64 * *b as u64) % *p as u64) as u32,
                p: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut s = self.clone();
        s.negate();
        s
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        self.negate();
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                *a = ((*a as u64 + *b as u64) % *p as u64) as u32;
            }
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            _ => mismatch(),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                *a = ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32;
            }
            (Scalar::Q(a), Scalar::Q(b)) => *a -= b,
            _ => mismatch(),
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                *a = ((*a as u64 * *b as u64) % *p as u64) as u32;
            }
            (Scalar::Q(a), Scalar::Q(b)) => *a *= b,
            _ => mismatch(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn make_field_accepts_zero_and_odd_primes() {
        assert!(make_field(0).unwrap().is_rational());
        assert_eq!(make_field(3).unwrap().characteristic(), 3);
        assert_eq!(
            make_field(2_147_483_647).unwrap().characteristic(),
            2_147_483_647
        );
    }

    #[test]
    fn make_field_rejects_two_composite_negative() {
        let e = make_field(2).unwrap_err().to_string();
        assert!(e.contains("characteristic two excluded"), "{e}");
        assert!(make_field(9).is_err());
        assert!(make_field(1).is_err());
        assert!(make_field(-3).is_err());
    }

    #[test]
    fn rationals_are_reduced() {
        let q = Field::rationals();
        let x = q.parse("6/-4").unwrap();
        assert_eq!(x.to_canonical_string(), "-3/2");
        assert_eq!(q.parse("4/2").unwrap().to_canonical_string(), "2");
        assert!(q.parse("1/0").is_err());
    }

    #[test]
    fn gf_residues_are_canonical() {
        let f = Field::gf(5);
        assert_eq!(f.from_i64(-1).to_canonical_string(), "4");
        assert_eq!(f.parse("12").unwrap(), f.from_i64(2));
        let inv = f.from_i64(3).inv().unwrap();
        assert!((inv * f.from_i64(3)).is_one());
        assert!(f.zero().inv().is_none());
    }

    fn arb_field() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::rationals()),
            Just(Field::gf(3)),
            Just(Field::gf(7)),
            Just(Field::gf(2_147_483_647))
        ]
    }

    fn arb_scalar(f: Field) -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20).prop_map(move |(a, b)| {
            if f.is_rational() {
                f.parse(&format!("{a}/{b}")).unwrap()
            } else {
                f.from_i64(a * b)
            }
        })
    }

    proptest! {
        #[test]
        fn field_axioms(
            (a, b, c) in arb_field().prop_flat_map(|f| (arb_scalar(f), arb_scalar(f), arb_scalar(f)))
        ) {
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn serialize_parse_round_trip(
            (f, a) in arb_field().prop_flat_map(|f| (Just(f), arb_scalar(f)))
        ) {
            let s = a.to_canonical_string();
            let back = f.parse(&s).unwrap();
            prop_assert_eq!(back.to_canonical_string(), s);
            prop_assert_eq!(back, a);
        }
    }
}
