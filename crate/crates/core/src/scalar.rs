//! Exact scalars over `Z`, `Q`, `Z/m`, and dual numbers `k[t]/(t^2)`.
//!
//! Every value is kept in canonical form: rationals in lowest terms with
//! positive denominator, residues in `[0, m)`. There is no tolerance
//! parameter anywhere; equality is exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Names an exact commutative base ring.
///
/// `Dual(k)` is the ring of dual numbers `k[t]/(t^2)` over a base ring; it
/// exists so first-order deformations are literal scalar extensions run
/// through the same evaluators as everything else. Dual rings do not nest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    Rationals,
    IntegersMod(BigInt),
    Dual(Box<RingSpec>),
}

impl RingSpec {
    pub fn integers_mod(m: i64) -> Result<RingSpec> {
        if m < 2 {
            return Err(Error::BadModulus(m.to_string()));
        }
        Ok(RingSpec::IntegersMod(BigInt::from(m)))
    }

    pub fn dual(base: RingSpec) -> Result<RingSpec> {
        if matches!(base, RingSpec::Dual(_)) {
            return Err(Error::Invalid("dual rings do not nest".into()));
        }
        Ok(RingSpec::Dual(Box::new(base)))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            RingSpec::Integers => Scalar::Int(BigInt::zero()),
            RingSpec::Rationals => Scalar::Rat(BigRational::zero()),
            RingSpec::IntegersMod(m) => Scalar::Mod(BigInt::zero(), m.clone()),
            RingSpec::Dual(base) => Scalar::Dual(Box::new(base.zero()), Box::new(base.zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            RingSpec::Integers => Scalar::Int(BigInt::one()),
            RingSpec::Rationals => Scalar::Rat(BigRational::one()),
            RingSpec::IntegersMod(m) => {
                let one = if *m == BigInt::one() { BigInt::zero() } else { BigInt::one() };
                Scalar::Mod(one, m.clone())
            }
            RingSpec::Dual(base) => Scalar::Dual(Box::new(base.one()), Box::new(base.zero())),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            RingSpec::Integers => Scalar::Int(BigInt::from(v)),
            RingSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            RingSpec::IntegersMod(m) => Scalar::Mod(BigInt::from(v).mod_floor(m), m.clone()),
            RingSpec::Dual(base) => {
                Scalar::Dual(Box::new(base.from_i64(v)), Box::new(base.zero()))
            }
        }
    }

    /// Parses a canonical decimal string, `"p/q"` over the rationals.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::BadScalar(s.to_string(), self.to_string());
        match self {
            RingSpec::Integers => Ok(Scalar::Int(s.parse::<BigInt>().map_err(|_| bad())?)),
            RingSpec::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((p, q)) => (
                        p.parse::<BigInt>().map_err(|_| bad())?,
                        q.parse::<BigInt>().map_err(|_| bad())?,
                    ),
                    None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
                };
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rat(BigRational::new(num, den)))
            }
            RingSpec::IntegersMod(m) => {
                let v = s.parse::<BigInt>().map_err(|_| bad())?;
                Ok(Scalar::Mod(v.mod_floor(m), m.clone()))
            }
            RingSpec::Dual(_) => Err(bad()),
        }
    }

    /// Flag syntax: `Z`, `Q`, or `Zmod:m`.
    pub fn parse_spec(s: &str) -> Result<RingSpec> {
        match s {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            _ => match s.strip_prefix("Zmod:") {
                Some(m) => {
                    let m: BigInt = m
                        .parse()
                        .map_err(|_| Error::BadModulus(m.to_string()))?;
                    if m < BigInt::from(2) {
                        return Err(Error::BadModulus(m.to_string()));
                    }
                    Ok(RingSpec::IntegersMod(m))
                }
                None => Err(Error::Invalid(format!("unknown ring {s:?}"))),
            },
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::IntegersMod(m) => write!(f, "Zmod:{m}"),
            RingSpec::Dual(base) => write!(f, "Dual({base})"),
        }
    }
}

/// An exact element of the ring named by a [`RingSpec`]. Scalars are
/// self-describing so mixed-ring arithmetic can be rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    /// Residue in canonical range `[0, m)`, with its modulus.
    Mod(BigInt, BigInt),
    /// `a + b t` with `t^2 = 0`.
    Dual(Box<Scalar>, Box<Scalar>),
}

impl Scalar {
    pub fn ring(&self) -> RingSpec {
        match self {
            Scalar::Int(_) => RingSpec::Integers,
            Scalar::Rat(_) => RingSpec::Rationals,
            Scalar::Mod(_, m) => RingSpec::IntegersMod(m.clone()),
            Scalar::Dual(a, _) => RingSpec::Dual(Box::new(a.ring())),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
            Scalar::Mod(v, _) => v.is_zero(),
            Scalar::Dual(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring().one()
    }

    fn check_same_ring(&self, other: &Scalar) -> Result<()> {
        let (ra, rb) = (self.ring(), other.ring());
        if ra != rb {
            return Err(Error::MixedRings(ra.to_string(), rb.to_string()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod(a, m), Scalar::Mod(b, _)) => Scalar::Mod((a + b).mod_floor(m), m.clone()),
            (Scalar::Dual(a, b), Scalar::Dual(c, d)) => Scalar::Dual(
                Box::new(a.checked_add(c)?),
                Box::new(b.checked_add(d)?),
            ),
            _ => unreachable!("same-ring check passed"),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod(a, m), Scalar::Mod(b, _)) => Scalar::Mod((a * b).mod_floor(m), m.clone()),
            // (a + bt)(c + dt) = ac + (ad + bc) t
            (Scalar::Dual(a, b), Scalar::Dual(c, d)) => Scalar::Dual(
                Box::new(a.checked_mul(c)?),
                Box::new(a.checked_mul(d)?.checked_add(&b.checked_mul(c)?)?),
            ),
            _ => unreachable!("same-ring check passed"),
        })
    }

    pub fn negated(&self) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(-v),
            Scalar::Rat(v) => Scalar::Rat(-v),
            Scalar::Mod(v, m) => Scalar::Mod((-v).mod_floor(m), m.clone()),
            Scalar::Dual(a, b) => Scalar::Dual(Box::new(a.negated()), Box::new(b.negated())),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.negated())
    }

    /// Multiplicative inverse where the element is a unit.
    pub fn checked_inv(&self) -> Result<Scalar> {
        let non_unit = || Error::NonUnit(self.to_string(), self.ring().to_string());
        match self {
            Scalar::Int(v) => {
                if v.is_one() || *v == -BigInt::one() {
                    Ok(self.clone())
                } else {
                    Err(non_unit())
                }
            }
            Scalar::Rat(v) => {
                if v.is_zero() {
                    Err(non_unit())
                } else {
                    Ok(Scalar::Rat(v.recip()))
                }
            }
            Scalar::Mod(v, m) => {
                let ext = v.extended_gcd(m);
                if ext.gcd.is_one() {
                    Ok(Scalar::Mod(ext.x.mod_floor(m), m.clone()))
                } else {
                    Err(non_unit())
                }
            }
            // (a + bt)^{-1} = a^{-1} - a^{-1} b a^{-1} t
            Scalar::Dual(a, b) => {
                let ai = a.checked_inv().map_err(|_| non_unit())?;
                let t = ai.checked_mul(b)?.checked_mul(&ai)?.negated();
                Ok(Scalar::Dual(Box::new(ai), Box::new(t)))
            }
        }
    }

    /// Multiplies by `(-1)^exponent`.
    pub fn signed(self, exponent: i64) -> Scalar {
        if exponent.rem_euclid(2) == 0 {
            self
        } else {
            self.negated()
        }
    }

    /// Extends `a` to the dual numbers as `a + b t`.
    pub fn with_dual_part(&self, b: &Scalar) -> Result<Scalar> {
        self.check_same_ring(b)?;
        Ok(Scalar::Dual(Box::new(self.clone()), Box::new(b.clone())))
    }

    /// The augmentation `a + bt -> a`; identity on non-dual scalars.
    pub fn augmented(&self) -> Scalar {
        match self {
            Scalar::Dual(a, _) => (**a).clone(),
            other => other.clone(),
        }
    }

    /// The `t`-coefficient of a dual scalar; zero for non-dual scalars.
    pub fn dual_part(&self) -> Scalar {
        match self {
            Scalar::Dual(_, b) => (**b).clone(),
            other => other.ring().zero(),
        }
    }
}

/// Checked entry point matching the flat operation table: `add`, `mul`,
/// `neg`, `eq`, `inv`.
pub fn ring_arith(op: &str, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar> {
    let need_b = || Error::Invalid(format!("operation {op:?} needs two operands"));
    match op {
        "add" => a.checked_add(b.ok_or_else(need_b)?),
        "mul" => a.checked_mul(b.ok_or_else(need_b)?),
        "neg" => Ok(a.negated()),
        "inv" => a.checked_inv(),
        "eq" => {
            let b = b.ok_or_else(need_b)?;
            a.check_same_ring(b)?;
            Ok(if a == b { a.ring().one() } else { a.ring().zero() })
        }
        _ => Err(Error::Invalid(format!("unknown ring operation {op:?}"))),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(v) => {
                if v.denom().is_one() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Scalar::Mod(v, _) => write!(f, "{v}"),
            Scalar::Dual(a, b) => write!(f, "{a}+{b}t"),
        }
    }
}
