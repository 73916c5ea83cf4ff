//! Exact rational arithmetic for the combinatorial constants.
//!
//! Everything this crate proves exactly — `Q`, `tau`, Cheeger constants,
//! closed-form eigenvalue predictions, search ratios — lives in [`Rational`].
//! The numerators and denominators involved are tiny (degrees, volumes and
//! cut sizes of graphs with at most a few thousand vertices), so an `i64`
//! backing is ample; arithmetic is kept in reduced form throughout.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact fraction in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    /// Builds `numerator / denominator` in reduced form.
    ///
    /// Panics if `denominator == 0`.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "rational with zero denominator");
        Rational(Ratio::new(numerator, denominator))
    }

    pub fn integer(value: i64) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    /// Always positive.
    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator() == 0
    }

    pub fn is_integer(&self) -> bool {
        self.denominator() == 1
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Nearest-double rendering; exact whenever numerator and denominator
    /// are exactly representable, which covers every value this crate emits.
    pub fn to_f64(&self) -> f64 {
        self.0
            .to_f64()
            .unwrap_or(self.numerator() as f64 / self.denominator() as f64)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Self::integer(value)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(self.0.div(rhs.0))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 = self.0 + rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

// Serialized as `{"num": .., "den": .., "decimal": ..}`; the decimal field is
// a convenience rendering and is ignored when reading back.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Rational", 3)?;
        s.serialize_field("num", &self.numerator())?;
        s.serialize_field("den", &self.denominator())?;
        s.serialize_field("decimal", &self.to_f64())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct RationalVisitor;

        impl<'de> Visitor<'de> for RationalVisitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map with integer fields `num` and `den`")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Rational, A::Error> {
                let mut num: Option<i64> = None;
                let mut den: Option<i64> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "num" => num = Some(map.next_value()?),
                        "den" => den = Some(map.next_value()?),
                        // `decimal` (and anything else) is redundant on input.
                        _ => {
                            let _: de::IgnoredAny = map.next_value()?;
                        }
                    }
                }
                let num = num.ok_or_else(|| de::Error::missing_field("num"))?;
                let den = den.ok_or_else(|| de::Error::missing_field("den"))?;
                if den == 0 {
                    return Err(de::Error::custom("rational with zero denominator"));
                }
                Ok(Rational::new(num, den))
            }
        }

        deserializer.deserialize_map(RationalVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numerator(), -3);
        assert_eq!(r.denominator(), 2);
        assert_eq!(r, Rational::new(-3, 2));
    }

    #[test]
    fn arithmetic_is_exact() {
        let q = Rational::new(3, 2);
        let tau = Rational::new(4, 3);
        assert_eq!(q * tau, Rational::integer(2));
        assert_eq!(q + tau, Rational::new(17, 6));
        assert_eq!(q - tau, Rational::new(1, 6));
        assert_eq!(q / tau, Rational::new(9, 8));
    }

    #[test]
    fn ordering_is_exact() {
        assert!(Rational::new(1, 3) < Rational::new(34, 100));
        assert!(Rational::new(2, 3) > Rational::new(1, 2));
        let mut v = [
            Rational::new(7, 10),
            Rational::new(2, 3),
            Rational::new(1, 1),
        ];
        v.sort();
        assert_eq!(v[0], Rational::new(2, 3));
        assert_eq!(v[2], Rational::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Rational::new(4, 2).to_string(), "2");
        assert_eq!(Rational::new(-3, 2).to_string(), "-3/2");
    }

    #[test]
    fn json_round_trip_from_num_den() {
        let r = Rational::new(310, 241);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"num\":310"));
        assert!(text.contains("\"den\":241"));
        assert!(text.contains("\"decimal\":"));
        let back: Rational = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn to_f64_matches_division() {
        let r = Rational::new(310, 241);
        assert_eq!(r.to_f64(), 310.0 / 241.0);
    }
}
