//! Arthur parameters against classical L-groups.
//!
//! A parameter is an ordered list of summands `ρ ⊠ R[a]`. Summands are kept in canonical
//! order: by |m| decreasing, χ_m before χ_{-m}, then by `a` decreasing, then Triv before sgn.
//! This keeps the pairs χ_{±m} adjacent and puts the χ_0 / Triv tails last.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{DualFamily, GaloisAction, LGroupDescriptor};
use crate::weil::{Rho, WeilCChar, WeilRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArthurSummand {
    pub rho: Rho,
    pub a: u32,
}

impl ArthurSummand {
    pub fn new(rho: Rho, a: u32) -> Self {
        ArthurSummand { rho, a }
    }

    pub fn dimension(&self) -> u32 {
        self.rho.dimension() * self.a
    }
}

impl fmt::Display for ArthurSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if matches!(self.rho, Rho::Weil(WeilRep::OneDim(_))) { " " } else { "" };
        write!(f, "{}{}xR[{}]", self.rho, sep, self.a)
    }
}

impl FromStr for ArthurSummand {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (rho, rest) = s
            .rsplit_once("xR[")
            .ok_or_else(|| Error::Parse(format!("expected '<rho>xR[a]': '{s}'")))?;
        let a = rest
            .strip_suffix(']')
            .and_then(|x| x.trim().parse::<u32>().ok())
            .filter(|&a| a >= 1)
            .ok_or_else(|| Error::Parse(format!("bad SL(2) dimension in '{s}'")))?;
        Ok(ArthurSummand { rho: rho.parse()?, a })
    }
}

fn order_key(s: &ArthurSummand) -> (i64, i64, i64, i64, String) {
    // (class, -|m|, sign rank, -a, b) ascending
    match s.rho {
        Rho::Char(WeilCChar(m)) | Rho::Weil(WeilRep::TwoDim(m)) => {
            (0, -m.abs(), if m >= 0 { 0 } else { 1 }, -i64::from(s.a), String::new())
        }
        Rho::Weil(WeilRep::OneDim(b)) => (0, 0, 0, -i64::from(s.a), b.to_string()),
        _ => (1, 0, 0, -i64::from(s.a), s.rho.to_string()),
    }
}

pub fn canonical_cmp(x: &ArthurSummand, y: &ArthurSummand) -> Ordering {
    order_key(x).cmp(&order_key(y))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArthurParameter {
    pub target: LGroupDescriptor,
    pub summands: Vec<ArthurSummand>,
}

impl ArthurParameter {
    /// Builds a parameter with summands in canonical order.
    pub fn new(target: LGroupDescriptor, mut summands: Vec<ArthurSummand>) -> Self {
        summands.sort_by(canonical_cmp);
        ArthurParameter { target, summands }
    }

    /// Parses `"d(3)xR[2] + sgn^0 xR[3]"`.
    pub fn parse(target: LGroupDescriptor, text: &str) -> Result<Self> {
        let summands = text
            .split('+')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(target, summands))
    }

    pub fn dimension(&self) -> u32 {
        self.summands.iter().map(ArthurSummand::dimension).sum()
    }

    pub fn is_canonical(&self) -> bool {
        self.summands.windows(2).all(|w| canonical_cmp(&w[0], &w[1]) != Ordering::Greater)
    }
}

impl fmt::Display for ArthurParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Index of the offending summand; `None` for global conditions.
    pub summand: Option<usize>,
    pub rule: String,
}

fn v(summand: Option<usize>, rule: impl Into<String>) -> Violation {
    Violation { summand, rule: rule.into() }
}

pub fn validate_good_parity(psi: &ArthurParameter) -> std::result::Result<(), Vec<Violation>> {
    let t = psi.target;
    let mut out = Vec::new();
    for (i, s) in psi.summands.iter().enumerate() {
        if s.a == 0 {
            out.push(v(Some(i), "a >= 1"));
        }
        if let Err(e) = s.rho.validate() {
            out.push(v(Some(i), e.to_string()));
        }
    }
    if psi.dimension() != t.standard_dim {
        out.push(v(None, format!("dimension {} != {}", psi.dimension(), t.standard_dim)));
    }
    let n = i64::from(t.standard_dim);
    match t.dual_family {
        DualFamily::GL(_) if t.galois_action == GaloisAction::PinnedOuter => {
            for (i, s) in psi.summands.iter().enumerate() {
                match s.rho {
                    Rho::Char(WeilCChar(m)) => {
                        if (m + i64::from(s.a) - n).rem_euclid(2) != 0 {
                            out.push(v(Some(i), "m+a != n (mod 2)"));
                        }
                    }
                    _ => out.push(v(Some(i), "unitary target needs chi(m) summands")),
                }
            }
        }
        DualFamily::GL(_) => {
            for (i, s) in psi.summands.iter().enumerate() {
                if matches!(s.rho, Rho::Char(_)) {
                    out.push(v(Some(i), "GL target needs W_R representations"));
                }
            }
        }
        DualFamily::SO(_) | DualFamily::Sp(_) => {
            let orthogonal = matches!(t.dual_family, DualFamily::SO(_));
            let mut f = 0i64;
            let mut sum_b = 0i64;
            for (i, s) in psi.summands.iter().enumerate() {
                let a = i64::from(s.a);
                match s.rho {
                    Rho::Weil(WeilRep::TwoDim(m)) => {
                        let odd = (m + a - 1).rem_euclid(2) == 1;
                        if orthogonal && odd {
                            out.push(v(Some(i), "m+a-1 odd"));
                        }
                        if !orthogonal && !odd {
                            out.push(v(Some(i), "m+a-1 even"));
                        }
                        if a % 2 == 1 {
                            f += 1;
                        }
                    }
                    Rho::Weil(WeilRep::OneDim(b)) => {
                        if orthogonal && a % 2 == 0 {
                            out.push(v(Some(i), "c even"));
                        }
                        if !orthogonal && a % 2 == 1 {
                            out.push(v(Some(i), "c odd"));
                        }
                        sum_b += i64::from(b);
                    }
                    _ => out.push(v(Some(i), "self-dual target needs d(m) or sgn^b summands")),
                }
            }
            if orthogonal {
                let want = if t.galois_action == GaloisAction::Trivial { 0 } else { 1 };
                if (sum_b + f - want).rem_euclid(2) != 0 {
                    if t.standard_dim % 2 == 1 {
                        out.push(v(None, "sum b != f (mod 2)"));
                    } else {
                        out.push(v(None, "sum b + f != n-p (mod 2)"));
                    }
                }
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Collapses repeated summands; the flag is set when a repetition was found.
pub fn dedup_slots(psi: &ArthurParameter) -> (Vec<ArthurSummand>, bool) {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in &psi.summands {
        if seen.insert(*s) {
            out.push(*s);
        }
    }
    let flagged = out.len() != psi.summands.len();
    (out, flagged)
}

/// Rank R of A(ψ) ≅ (Z/2Z)^R.
pub fn component_group(psi: &ArthurParameter) -> Result<u32> {
    if psi.target.is_general_linear() {
        return Ok(0);
    }
    let mut seen = HashSet::new();
    for s in &psi.summands {
        if !seen.insert(*s) {
            return Err(Error::MultiplicityNotSupported(s.to_string()));
        }
    }
    Ok(psi.summands.len() as u32)
}

fn ladder(center: Rational64, a: u32, out: &mut Vec<Rational64>) {
    let top = center + Rational64::new(i64::from(a) - 1, 2);
    for j in 0..a {
        out.push(top - i64::from(j));
    }
}

/// Contribution of one summand to the infinitesimal character.
pub fn summand_inf_char(s: &ArthurSummand) -> Vec<Rational64> {
    let mut out = Vec::new();
    let half = |m: i64| Rational64::new(m, 2);
    match s.rho {
        Rho::Char(WeilCChar(m)) => ladder(half(m), s.a, &mut out),
        Rho::Weil(WeilRep::TwoDim(m)) => {
            ladder(half(m), s.a, &mut out);
            ladder(half(-m), s.a, &mut out);
        }
        Rho::Weil(WeilRep::OneDim(_)) => ladder(Rational64::from_integer(0), s.a, &mut out),
        Rho::Weil(WeilRep::GeneralTwoDim(s1, s2)) => {
            ladder(s1, s.a, &mut out);
            ladder(s2, s.a, &mut out);
        }
        Rho::Weil(WeilRep::GeneralOneDim(_, x)) => ladder(x, s.a, &mut out),
    }
    out
}

/// Infinitesimal character as a multiset, sorted decreasing.
pub fn inf_char(psi: &ArthurParameter) -> Vec<Rational64> {
    let mut out: Vec<Rational64> = psi.summands.iter().flat_map(summand_inf_char).collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Regularity. For GL/U targets all entries are distinct. For Sp/SO targets the multiset
/// is read as {±x_i} (plus one 0 for SO(odd)); the x_i must have distinct absolute values,
/// and must be nonzero except for SO(even) targets, where one x_i = 0 is allowed.
pub fn is_regular(psi: &ArthurParameter) -> bool {
    let ic = inf_char(psi);
    let distinct = |xs: &[Rational64]| xs.windows(2).all(|w| w[0] != w[1]);
    match psi.target.dual_family {
        DualFamily::GL(_) => distinct(&ic),
        DualFamily::SO(_) | DualFamily::Sp(_) => {
            let zero = Rational64::from_integer(0);
            let zeros = ic.iter().filter(|x| **x == zero).count();
            let pos: Vec<Rational64> = ic.iter().copied().filter(|x| *x > zero).collect();
            let allowed_zeros = match psi.target.dual_family {
                DualFamily::SO(m) if m % 2 == 1 => 1,
                DualFamily::SO(_) => 2,
                _ => 0,
            };
            zeros <= allowed_zeros && distinct(&pos)
        }
    }
}

pub fn is_integral(psi: &ArthurParameter) -> bool {
    inf_char(psi).iter().all(Rational64::is_integer)
}

pub fn is_half_integral_nonintegral(psi: &ArthurParameter) -> bool {
    inf_char(psi).iter().all(|x| !x.is_integer() && (x * 2).is_integer())
}

/// Whether every entry lies in `offset + Z`.
pub fn in_coset(psi: &ArthurParameter, offset: Rational64) -> bool {
    inf_char(psi).iter().all(|x| (x - offset).is_integer())
}

/// Restriction to SL(2,C), as a partition of the standard dimension.
pub fn sl2_partition(psi: &ArthurParameter) -> Vec<u32> {
    let mut parts: Vec<u32> = psi
        .summands
        .iter()
        .flat_map(|s| std::iter::repeat(s.a).take(s.rho.dimension() as usize))
        .collect();
    parts.sort_by(|a, b| b.cmp(a));
    parts
}

/// Descriptive data of the singleton packet of a GL(n,R) parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlRepDescriptor {
    pub levi: Vec<u32>,
    /// Speh(ρ, a) blocks for the two-dimensional summands.
    pub speh_blocks: Vec<ArthurSummand>,
    /// Characters ε∘det of GL(a) for the one-dimensional summands.
    pub characters: Vec<ArthurSummand>,
}

pub fn gl_arthur_rep(psi: &ArthurParameter) -> Result<GlRepDescriptor> {
    if !psi.target.is_general_linear() {
        return Err(Error::InvalidParameter(format!("target {} is not GL(n)", psi.target)));
    }
    validate_good_parity(psi).map_err(|vs| Error::InvalidParameter(format!("{vs:?}")))?;
    let (two, one): (Vec<ArthurSummand>, Vec<ArthurSummand>) =
        psi.summands.iter().partition(|s| s.rho.dimension() == 2);
    let mut levi: Vec<u32> = two.iter().map(|s| 2 * s.a).collect();
    levi.extend(one.iter().map(|s| s.a));
    Ok(GlRepDescriptor { levi, speh_blocks: two, characters: one })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{dual_lgroup, ClassicalGroup};

    fn lg(g: ClassicalGroup) -> LGroupDescriptor {
        dual_lgroup(g).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn u3_example_ok() {
        let psi = ArthurParameter::parse(lg(ClassicalGroup::Unitary(2, 1)), "chi(2)xR[1] + chi(-2)xR[1] + chi(0)xR[1]").unwrap();
        assert_eq!(validate_good_parity(&psi), Ok(()));
    }

    #[test]
    fn sp4_examples() {
        let t = lg(ClassicalGroup::SymplecticReal(2));
        let ok = ArthurParameter::parse(t, "d(1)xR[2] + Triv xR[1]").unwrap();
        assert_eq!(validate_good_parity(&ok), Ok(()));
        let bad = ArthurParameter::parse(t, "d(2)xR[2] + Triv xR[1]").unwrap();
        let vs = validate_good_parity(&bad).unwrap_err();
        assert!(vs.iter().any(|x| x.rule == "m+a-1 odd"));
    }

    #[test]
    fn component_group_counts() {
        let t = lg(ClassicalGroup::Unitary(3, 3));
        let psi = ArthurParameter::parse(t, "chi(2)xR[2] + chi(6)xR[2] + chi(-4)xR[2]").unwrap();
        assert_eq!(component_group(&psi), Ok(3));
        let gl = ArthurParameter::parse(lg(ClassicalGroup::GeneralLinearReal(3)), "d(1)xR[1] + Triv xR[1]").unwrap();
        assert_eq!(component_group(&gl), Ok(0));
        let one = ArthurParameter::parse(lg(ClassicalGroup::SymplecticReal(1)), "Triv xR[3]").unwrap();
        assert_eq!(component_group(&one), Ok(1));
    }

    #[test]
    fn repeated_summand_is_typed_error() {
        let t = lg(ClassicalGroup::SpecialOrthogonal(1, 1));
        let psi = ArthurParameter::parse(t, "Triv xR[1] + Triv xR[1]").unwrap();
        assert!(matches!(component_group(&psi), Err(Error::MultiplicityNotSupported(_))));
        let (slots, flagged) = dedup_slots(&psi);
        assert!(flagged);
        assert_eq!(slots.len(), 1);
    }

    #[test]
    fn inf_char_examples() {
        let t = lg(ClassicalGroup::Unitary(2, 0));
        let psi = ArthurParameter::parse(t, "chi(4)xR[2]").unwrap();
        assert_eq!(inf_char(&psi), vec![r(5, 2), r(3, 2)]);
        let s = ArthurSummand::new(Rho::triv(), 3);
        assert_eq!(summand_inf_char(&s), vec![r(1, 1), r(0, 1), r(-1, 1)]);
        let d = ArthurSummand::new(Rho::delta(3), 1);
        let mut got = summand_inf_char(&d);
        got.sort();
        assert_eq!(got, vec![r(-3, 2), r(3, 2)]);
    }

    #[test]
    fn sl2_examples() {
        let t = lg(ClassicalGroup::SpecialOrthogonal(5, 3));
        let psi = ArthurParameter::parse(t, "d(2)xR[1] + d(4)xR[1] + Triv xR[4]").unwrap();
        assert_eq!(sl2_partition(&psi), vec![4, 1, 1, 1, 1]);
        let t2 = lg(ClassicalGroup::SpecialOrthogonal(3, 2));
        let psi2 = ArthurParameter::parse(t2, "d(1)xR[2]").unwrap();
        assert_eq!(sl2_partition(&psi2), vec![2, 2]);
    }

    #[test]
    fn gl_rep_examples() {
        let t = lg(ClassicalGroup::GeneralLinearReal(3));
        let psi = ArthurParameter::parse(t, "d(3)xR[1] + Triv xR[1]").unwrap();
        let d = gl_arthur_rep(&psi).unwrap();
        assert_eq!(d.levi, vec![2, 1]);
        assert_eq!(d.speh_blocks, vec![ArthurSummand::new(Rho::delta(3), 1)]);
        assert_eq!(d.characters, vec![ArthurSummand::new(Rho::triv(), 1)]);

        let t10 = lg(ClassicalGroup::GeneralLinearReal(10));
        let two = ArthurParameter::parse(t10, "d(1)xR[2] + d(2)xR[3]").unwrap();
        let mut levi = gl_arthur_rep(&two).unwrap().levi;
        levi.sort();
        assert_eq!(levi, vec![4, 6]);

        let t4 = lg(ClassicalGroup::GeneralLinearReal(4));
        assert_eq!(gl_arthur_rep(&ArthurParameter::parse(t4, "Triv xR[4]").unwrap()).unwrap().levi, vec![4]);
    }

    #[test]
    fn canonical_order_pairs_adjacent() {
        let t = lg(ClassicalGroup::Unitary(3, 2));
        let psi = ArthurParameter::parse(t, "chi(0)xR[1] + chi(-2)xR[1] + chi(4)xR[1] + chi(2)xR[1] + chi(-4)xR[1]").unwrap();
        assert_eq!(psi.to_string(), "chi(4)xR[1] + chi(-4)xR[1] + chi(2)xR[1] + chi(-2)xR[1] + chi(0)xR[1]");
    }

    #[test]
    fn json_shape() {
        let t = lg(ClassicalGroup::SymplecticReal(2));
        let psi = ArthurParameter::parse(t, "d(1)xR[2] + Triv xR[1]").unwrap();
        let j = serde_json::to_value(&psi).unwrap();
        assert_eq!(j["summands"][0]["rho"], "d(1)");
        assert_eq!(j["summands"][0]["a"], 2);
        let back: ArthurParameter = serde_json::from_value(j).unwrap();
        assert_eq!(back, psi);
    }

    #[test]
    fn regularity_by_type() {
        let so_even = lg(ClassicalGroup::SpecialOrthogonal(2, 2));
        let p = ArthurParameter::parse(so_even, "d(2)xR[1] + Triv xR[1] + sgn^1 xR[1]").unwrap();
        assert!(is_regular(&p));
        let sp = lg(ClassicalGroup::SymplecticReal(1));
        assert!(is_regular(&ArthurParameter::parse(sp, "d(2)xR[1] + sgn^1 xR[1]").unwrap()));
        assert!(!is_regular(&ArthurParameter::parse(sp, "Triv xR[1] + sgn^1 xR[1] + Triv xR[1]").unwrap()));
    }
}
