//! Representations of W_R and characters of W_C.
//!
//! Notation used in reports and on the command line:
//! `d(m)` for the two-dimensional δ(m), `sgn^b` for sgn^b (`Triv` and `sgn` are accepted),
//! `chi(m)` for χ_m, `d(s1,s2)` and `eps(e,s)` for the general GL(n,R) summands.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The character χ_m(z) = (z/z̄)^{m/2} of W_C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeilCChar(pub i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeilRep {
    /// δ(m) = Ind(χ_m), m ≥ 1.
    TwoDim(i64),
    /// sgn^b, b ∈ {0,1}.
    OneDim(u8),
    /// Induced from z^{s1} z̄^{s2}-type data, s1 − s2 a positive integer.
    GeneralTwoDim(Rational64, Rational64),
    /// sgn^ε |·|^s.
    GeneralOneDim(u8, Rational64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SelfDuality {
    Orthogonal,
    Symplectic,
    NotSelfDual,
}

impl WeilRep {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            WeilRep::TwoDim(m) => m >= 1,
            WeilRep::OneDim(b) => b <= 1,
            WeilRep::GeneralTwoDim(s1, s2) => {
                let d = s1 - s2;
                d.is_integer() && d > Rational64::from_integer(0)
            }
            WeilRep::GeneralOneDim(e, _) => e <= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidRep(self.to_string()))
        }
    }

    pub fn dimension(&self) -> u32 {
        match self {
            WeilRep::TwoDim(_) | WeilRep::GeneralTwoDim(..) => 2,
            WeilRep::OneDim(_) | WeilRep::GeneralOneDim(..) => 1,
        }
    }

    pub fn self_duality(&self) -> SelfDuality {
        let zero = Rational64::from_integer(0);
        match *self {
            WeilRep::TwoDim(m) if m % 2 != 0 => SelfDuality::Symplectic,
            WeilRep::TwoDim(_) => SelfDuality::Orthogonal,
            WeilRep::OneDim(_) => SelfDuality::Orthogonal,
            WeilRep::GeneralTwoDim(s1, s2) if s1 + s2 == zero => {
                if (s1 - s2).to_integer() % 2 != 0 {
                    SelfDuality::Symplectic
                } else {
                    SelfDuality::Orthogonal
                }
            }
            WeilRep::GeneralOneDim(_, s) if s == zero => SelfDuality::Orthogonal,
            _ => SelfDuality::NotSelfDual,
        }
    }

    /// Restriction to W_C; defined for δ(m) and sgn^b.
    pub fn restrict_to_wc(&self) -> Result<Vec<WeilCChar>> {
        match *self {
            WeilRep::TwoDim(m) => Ok(vec![WeilCChar(m), WeilCChar(-m)]),
            WeilRep::OneDim(_) => Ok(vec![WeilCChar(0)]),
            _ => Err(Error::InvalidRep(format!("restriction of {self} to W_C is not a sum of chi_m"))),
        }
    }

    /// Exponent b of det = sgn^b, for δ(m) and sgn^b.
    pub fn det_sign(&self) -> Option<u8> {
        match *self {
            WeilRep::TwoDim(m) => Some(((m + 1).rem_euclid(2)) as u8),
            WeilRep::OneDim(b) => Some(b),
            _ => None,
        }
    }
}

/// The W_R (or W_C) part of an Arthur summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rho {
    Weil(WeilRep),
    Char(WeilCChar),
}

impl Rho {
    pub fn delta(m: i64) -> Rho {
        Rho::Weil(WeilRep::TwoDim(m))
    }
    pub fn sgn(b: u8) -> Rho {
        Rho::Weil(WeilRep::OneDim(b))
    }
    pub fn triv() -> Rho {
        Rho::sgn(0)
    }
    pub fn chi(m: i64) -> Rho {
        Rho::Char(WeilCChar(m))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Rho::Weil(w) => w.validate(),
            Rho::Char(_) => Ok(()),
        }
    }

    pub fn dimension(&self) -> u32 {
        match self {
            Rho::Weil(w) => w.dimension(),
            Rho::Char(_) => 1,
        }
    }
}

fn rat_str(r: Rational64) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for WeilCChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi({})", self.0)
    }
}

impl fmt::Display for WeilRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WeilRep::TwoDim(m) => write!(f, "d({m})"),
            WeilRep::OneDim(b) => write!(f, "sgn^{b}"),
            WeilRep::GeneralTwoDim(s1, s2) => write!(f, "d({},{})", rat_str(s1), rat_str(s2)),
            WeilRep::GeneralOneDim(e, s) => write!(f, "eps({},{})", e, rat_str(s)),
        }
    }
}

impl fmt::Display for Rho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rho::Weil(w) => w.fmt(f),
            Rho::Char(c) => c.fmt(f),
        }
    }
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad integer '{s}'")))
}

fn parse_rat(s: &str) -> Result<Rational64> {
    Rational64::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational '{s}'")))
}

fn inside<'a>(s: &'a str, head: &str) -> Option<&'a str> {
    s.strip_prefix(head).and_then(|r| r.strip_suffix(')'))
}

impl FromStr for Rho {
    type Err = Error;
    fn from_str(s: &str) -> Result<Rho> {
        let s = s.trim();
        let rho = if s == "Triv" || s == "triv" {
            Rho::triv()
        } else if s == "sgn" {
            Rho::sgn(1)
        } else if let Some(b) = s.strip_prefix("sgn^") {
            let b = parse_int(b)?;
            if !(0..=1).contains(&b) {
                return Err(Error::Parse(format!("sgn exponent must be 0 or 1: '{s}'")));
            }
            Rho::sgn(b as u8)
        } else if let Some(body) = inside(s, "chi(") {
            Rho::chi(parse_int(body)?)
        } else if let Some(body) = inside(s, "d(") {
            match body.split_once(',') {
                Some((a, b)) => Rho::Weil(WeilRep::GeneralTwoDim(parse_rat(a)?, parse_rat(b)?)),
                None => Rho::delta(parse_int(body)?),
            }
        } else if let Some(body) = inside(s, "eps(") {
            let (e, v) = body.split_once(',').ok_or_else(|| Error::Parse(format!("expected eps(e,s): '{s}'")))?;
            let e = parse_int(e)?;
            if !(0..=1).contains(&e) {
                return Err(Error::Parse(format!("eps sign must be 0 or 1: '{s}'")));
            }
            Rho::Weil(WeilRep::GeneralOneDim(e as u8, parse_rat(v)?))
        } else {
            return Err(Error::Parse(format!("unknown representation '{s}'")));
        };
        rho.validate()?;
        Ok(rho)
    }
}

impl Serialize for Rho {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rho {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Rho, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(WeilRep::TwoDim(3).dimension(), 2);
        assert_eq!(WeilRep::OneDim(1).dimension(), 1);
        assert_eq!(WeilRep::OneDim(0).dimension(), 1);
    }

    #[test]
    fn duality_alternates() {
        assert_eq!(WeilRep::TwoDim(1).self_duality(), SelfDuality::Symplectic);
        assert_eq!(WeilRep::TwoDim(2).self_duality(), SelfDuality::Orthogonal);
        assert_eq!(WeilRep::OneDim(1).self_duality(), SelfDuality::Orthogonal);
        for m in 1..=50 {
            let want = if m % 2 == 1 { SelfDuality::Symplectic } else { SelfDuality::Orthogonal };
            assert_eq!(WeilRep::TwoDim(m).self_duality(), want);
        }
    }

    #[test]
    fn general_duality() {
        let h = Rational64::new(1, 2);
        assert_eq!(WeilRep::GeneralTwoDim(h, -h).self_duality(), SelfDuality::Symplectic);
        assert_eq!(WeilRep::GeneralTwoDim(h + 1, -h).self_duality(), SelfDuality::NotSelfDual);
    }

    #[test]
    fn restriction() {
        assert_eq!(WeilRep::TwoDim(2).restrict_to_wc().unwrap(), vec![WeilCChar(2), WeilCChar(-2)]);
        assert_eq!(WeilRep::OneDim(0).restrict_to_wc().unwrap(), vec![WeilCChar(0)]);
        assert_eq!(WeilRep::TwoDim(5).restrict_to_wc().unwrap(), vec![WeilCChar(5), WeilCChar(-5)]);
        for m in 1..=50 {
            let r = WeilRep::TwoDim(m).restrict_to_wc().unwrap();
            assert_eq!(r.len() as u32, WeilRep::TwoDim(m).dimension());
            assert_ne!(r[0], r[1]);
        }
    }

    #[test]
    fn parse_round_trip() {
        for s in ["d(3)", "sgn^0", "sgn^1", "chi(-2)", "d(1/2,-3/2)", "eps(1,3/2)"] {
            assert_eq!(s.parse::<Rho>().unwrap().to_string(), s);
        }
        assert_eq!("Triv".parse::<Rho>().unwrap(), Rho::triv());
        assert!("d(0)".parse::<Rho>().is_err());
        assert!("d(1,1)".parse::<Rho>().is_err());
        assert!("sgn^2".parse::<Rho>().is_err());
    }
}
