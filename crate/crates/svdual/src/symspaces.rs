//! The thirteen classical symmetric spaces with discrete series.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{dual_lgroup, ClassicalGroup, LGroupDescriptor};

/// A symmetric space G/H from the registry. Cases 7 and 8 carry (r,s,r',s') with
/// (p,q) = (r+r', s+s'). Case 9 with p+q odd is stored with p even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpace", into = "RawSpace")]
pub enum SymmetricSpace {
    C1 { n: u32, p: u32 },
    C2 { p: u32, q: u32 },
    C3 { r: u32, s: u32, rp: u32, sp: u32 },
    C4 { n: u32 },
    C5 { p: u32, q: u32 },
    C6 { n: u32 },
    C7 { r: u32, s: u32, rp: u32, sp: u32 },
    C8 { r: u32, s: u32, rp: u32, sp: u32 },
    C9 { p: u32, q: u32 },
    C10 { n: u32 },
    C11 { n: u32, p: u32 },
    C12 { n: u32 },
    C13 { n: u32 },
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct RawSpace {
    case: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rp: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sp: Option<u32>,
}

impl TryFrom<RawSpace> for SymmetricSpace {
    type Error = Error;
    fn try_from(raw: RawSpace) -> Result<Self> {
        let need = |v: Option<u32>, name: &str| {
            v.ok_or_else(|| Error::InvalidSpace(format!("case {} needs parameter {name}", raw.case)))
        };
        use SymmetricSpace::*;
        let x = match raw.case {
            1 => C1 { n: need(raw.n, "n")?, p: need(raw.p, "p")? },
            2 => C2 { p: need(raw.p, "p")?, q: need(raw.q, "q")? },
            3 => C3 { r: need(raw.r, "r")?, s: need(raw.s, "s")?, rp: need(raw.rp, "rp")?, sp: need(raw.sp, "sp")? },
            4 => C4 { n: need(raw.n, "n")? },
            5 => C5 { p: need(raw.p, "p")?, q: need(raw.q, "q")? },
            6 => C6 { n: need(raw.n, "n")? },
            7 => C7 { r: need(raw.r, "r")?, s: need(raw.s, "s")?, rp: need(raw.rp, "rp")?, sp: need(raw.sp, "sp")? },
            8 => C8 { r: need(raw.r, "r")?, s: need(raw.s, "s")?, rp: need(raw.rp, "rp")?, sp: need(raw.sp, "sp")? },
            9 => C9 { p: need(raw.p, "p")?, q: need(raw.q, "q")? },
            10 => C10 { n: need(raw.n, "n")? },
            11 => C11 { n: need(raw.n, "n")?, p: need(raw.p, "p")? },
            12 => C12 { n: need(raw.n, "n")? },
            13 => C13 { n: need(raw.n, "n")? },
            c => return Err(Error::InvalidSpace(format!("unknown case {c}"))),
        };
        x.normalized()
    }
}

impl From<SymmetricSpace> for RawSpace {
    fn from(x: SymmetricSpace) -> Self {
        use SymmetricSpace::*;
        let mut raw = RawSpace { case: x.case_id(), ..Default::default() };
        match x {
            C1 { n, p } | C11 { n, p } => {
                raw.n = Some(n);
                raw.p = Some(p);
            }
            C2 { p, q } | C5 { p, q } | C9 { p, q } => {
                raw.p = Some(p);
                raw.q = Some(q);
            }
            C3 { r, s, rp, sp } | C7 { r, s, rp, sp } | C8 { r, s, rp, sp } => {
                raw.r = Some(r);
                raw.s = Some(s);
                raw.rp = Some(rp);
                raw.sp = Some(sp);
            }
            C4 { n } | C6 { n } | C10 { n } | C12 { n } | C13 { n } => raw.n = Some(n),
        }
        raw
    }
}

/// Parses `case5:p=1,q=1` or `case7:r=1,s=0,rp=2,sp=1`.
impl FromStr for SymmetricSpace {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, body) = text.split_once(':').unwrap_or((&text, ""));
        let case = head
            .strip_prefix("case")
            .and_then(|c| c.parse::<u8>().ok())
            .ok_or_else(|| Error::Parse(format!("expected 'caseN:...': '{text}'")))?;
        let mut raw = RawSpace { case, ..Default::default() };
        for kv in body.split(',').filter(|kv| !kv.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value: '{kv}'")))?;
            let v: u32 = v.parse().map_err(|_| Error::Parse(format!("bad value in '{kv}'")))?;
            let slot = match k {
                "n" => &mut raw.n,
                "p" => &mut raw.p,
                "q" => &mut raw.q,
                "r" => &mut raw.r,
                "s" => &mut raw.s,
                "rp" | "r'" => &mut raw.rp,
                "sp" | "s'" => &mut raw.sp,
                _ => return Err(Error::Parse(format!("unknown key '{k}'"))),
            };
            *slot = Some(v);
        }
        SymmetricSpace::try_from(raw)
    }
}

impl fmt::Display for SymmetricSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SymmetricSpace::*;
        match *self {
            C1 { n, p } => write!(f, "GL({n},R)/GL({p},R)xGL({},R)", n - p),
            C2 { p, q } => write!(f, "U({p},{q})/O({p},{q})"),
            C3 { r, s, rp, sp } => write!(f, "U({},{})/U({r},{s})xU({rp},{sp})", r + rp, s + sp),
            C4 { n } => write!(f, "U({n},{n})/GL({n},C)"),
            C5 { p, q } => write!(f, "U({},{})/Sp({p},{q})", 2 * p, 2 * q),
            C6 { n } => write!(f, "U({n},{n})/Sp({},R)", 2 * n),
            C7 { r, s, rp, sp } | C8 { r, s, rp, sp } => {
                write!(f, "SO({},{})/SO({r},{s})xSO({rp},{sp})", r + rp, s + sp)
            }
            C9 { p, q } => write!(f, "SO({},{})/U({p},{q})", 2 * p, 2 * q),
            C10 { n } => write!(f, "SO({n},{n})/GL({n},R)"),
            C11 { n, p } => write!(f, "Sp({},R)/Sp({},R)xSp({},R)", 2 * n, 2 * p, 2 * (n - p)),
            C12 { n } => write!(f, "Sp({},R)/Sp({},C)", 4 * n, 2 * n),
            C13 { n } => write!(f, "Sp({},R)/GL({n},R)", 2 * n),
        }
    }
}

impl SymmetricSpace {
    pub fn case_id(&self) -> u8 {
        use SymmetricSpace::*;
        match self {
            C1 { .. } => 1,
            C2 { .. } => 2,
            C3 { .. } => 3,
            C4 { .. } => 4,
            C5 { .. } => 5,
            C6 { .. } => 6,
            C7 { .. } => 7,
            C8 { .. } => 8,
            C9 { .. } => 9,
            C10 { .. } => 10,
            C11 { .. } => 11,
            C12 { .. } => 12,
            C13 { .. } => 13,
        }
    }

    /// Spec string accepted by `FromStr`.
    pub fn spec(&self) -> String {
        let raw = RawSpace::from(*self);
        let mut kv = Vec::new();
        for (k, v) in [("n", raw.n), ("p", raw.p), ("q", raw.q), ("r", raw.r), ("s", raw.s), ("rp", raw.rp), ("sp", raw.sp)] {
            if let Some(v) = v {
                kv.push(format!("{k}={v}"));
            }
        }
        format!("case{}:{}", raw.case, kv.join(","))
    }

    /// Validates, swapping case 9 with p+q odd to p even.
    pub fn normalized(self) -> Result<Self> {
        let x = match self {
            SymmetricSpace::C9 { p, q } if (p + q) % 2 == 1 && p % 2 == 1 => SymmetricSpace::C9 { p: q, q: p },
            other => other,
        };
        x.validate()?;
        Ok(x)
    }

    pub fn validate(&self) -> Result<()> {
        use SymmetricSpace::*;
        let bad = |why: &str| Err(Error::InvalidSpace(format!("{}: {why}", self.spec_unchecked())));
        match *self {
            C1 { n, p } | C11 { n, p } if 2 * p > n => return bad("2p <= n required"),
            C3 { r, s, rp, sp } | C7 { r, s, rp, sp } | C8 { r, s, rp, sp } if r > rp || s > sp => {
                return bad("r <= r' and s <= s' required")
            }
            C7 { r, s, rp, sp } if (r + rp + s + sp) % 2 == 0 => return bad("p+q odd required"),
            C8 { r, s, rp, sp } if (r + rp + s + sp) % 2 == 1 => return bad("p+q even required"),
            C9 { p, q } if p % 2 == 1 && q % 2 == 1 => return bad("p and q both odd"),
            C9 { p, q } if (p + q) % 2 == 1 && p % 2 == 1 => return bad("case 9 with p+q odd is stored with p even"),
            _ => {}
        }
        self.group_unchecked().validate().map_err(|e| Error::InvalidSpace(format!("{}: {e}", self.spec_unchecked())))
    }

    fn spec_unchecked(&self) -> String {
        format!("case {}", self.case_id())
    }

    fn group_unchecked(&self) -> ClassicalGroup {
        use ClassicalGroup::*;
        use SymmetricSpace::*;
        match *self {
            C1 { n, .. } => GeneralLinearReal(n),
            C2 { p, q } => Unitary(p, q),
            C3 { r, s, rp, sp } => Unitary(r + rp, s + sp),
            C4 { n } | C6 { n } => Unitary(n, n),
            C5 { p, q } => Unitary(2 * p, 2 * q),
            C7 { r, s, rp, sp } | C8 { r, s, rp, sp } => SpecialOrthogonal(r + rp, s + sp),
            C9 { p, q } => SpecialOrthogonal(2 * p, 2 * q),
            C10 { n } => SpecialOrthogonal(n, n),
            C11 { n, .. } | C13 { n } => SymplecticReal(n),
            C12 { n } => SymplecticReal(2 * n),
        }
    }

    pub fn group(&self) -> ClassicalGroup {
        self.group_unchecked()
    }

    pub fn lgroup(&self) -> LGroupDescriptor {
        dual_lgroup(self.group()).expect("validated space has a valid group")
    }

    /// The integer n used throughout the per-case formulas: p+q for unitary cases,
    /// ⌊(p+q)/2⌋ for orthogonal cases, the displayed n otherwise.
    pub fn n(&self) -> u32 {
        use SymmetricSpace::*;
        match *self {
            C1 { n, .. } | C4 { n } | C6 { n } | C10 { n } | C11 { n, .. } | C12 { n } | C13 { n } => n,
            C2 { p, q } | C5 { p, q } | C9 { p, q } => p + q,
            C3 { r, s, rp, sp } => r + s + rp + sp,
            C7 { r, s, rp, sp } | C8 { r, s, rp, sp } => (r + s + rp + sp) / 2,
        }
    }

    /// r+s for cases 3, 7, 8.
    pub fn m(&self) -> u32 {
        match *self {
            SymmetricSpace::C3 { r, s, .. } | SymmetricSpace::C7 { r, s, .. } | SymmetricSpace::C8 { r, s, .. } => r + s,
            _ => 0,
        }
    }
}

/// A complex reductive Lie algebra of classical type. `Sp(k)` is sp(2k), `SoOdd(k)` is
/// so(2k+1), `SoEven(k)` is so(2k).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieAlg {
    Gl(u32),
    Sp(u32),
    SoOdd(u32),
    SoEven(u32),
}

impl LieAlg {
    pub fn rank(&self) -> u32 {
        match *self {
            LieAlg::Gl(k) | LieAlg::Sp(k) | LieAlg::SoOdd(k) | LieAlg::SoEven(k) => k,
        }
    }

    /// The Langlands dual type.
    pub fn dual(&self) -> LieAlg {
        match *self {
            LieAlg::Sp(k) => LieAlg::SoOdd(k),
            LieAlg::SoOdd(k) => LieAlg::Sp(k),
            other => other,
        }
    }
}

impl fmt::Display for LieAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LieAlg::Gl(k) => write!(f, "gl({k})"),
            LieAlg::Sp(k) => write!(f, "sp({})", 2 * k),
            LieAlg::SoOdd(k) => write!(f, "so({})", 2 * k + 1),
            LieAlg::SoEven(k) => write!(f, "so({})", 2 * k),
        }
    }
}

/// ľ_X: general-linear blocks plus at most one tail (a gl tail for cases 1 and 3).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviDual {
    pub gl: Vec<u32>,
    pub tail: Option<LieAlg>,
}

impl fmt::Display for LeviDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.gl.len() {
            let k = self.gl[i];
            let run = self.gl[i..].iter().take_while(|&&x| x == k).count();
            parts.push(if run == 1 { format!("gl({k})") } else { format!("gl({k})^{run}") });
            i += run;
        }
        if let Some(t) = self.tail {
            parts.push(t.to_string());
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualData {
    /// ǧ_X as used throughout (rank-consistent).
    pub g_check: LieAlg,
    /// ǧ_X as printed in the table, when it differs.
    pub g_check_printed: Option<LieAlg>,
    pub l_check: LeviDual,
}

pub fn dual_data(x: &SymmetricSpace) -> DualData {
    use SymmetricSpace::*;
    let n = x.n();
    let m = x.m();
    let ones = |k: u32| vec![1; k as usize];
    let twos = |k: u32| vec![2; k as usize];
    let gl_tail = |k: u32| if k > 0 { Some(LieAlg::Gl(k)) } else { None };
    let (g, printed, gl, tail) = match *x {
        C1 { n, p } => (LieAlg::Sp(p), None, ones(2 * p), gl_tail(n - 2 * p)),
        C2 { .. } => (LieAlg::Gl(n), None, ones(n), None),
        C3 { .. } => (LieAlg::Sp(m), None, ones(2 * m), gl_tail(n - 2 * m)),
        C4 { n } => (LieAlg::Sp(n), None, ones(2 * n), None),
        C5 { .. } => (LieAlg::Gl(n), None, twos(n), None),
        C6 { n } => (LieAlg::Gl(n), None, twos(n), None),
        C7 { .. } => (LieAlg::Sp(m), None, ones(m), (n > m).then_some(LieAlg::Sp(n - m))),
        C8 { .. } => (LieAlg::SoOdd(m), None, ones(m), (n > m).then_some(LieAlg::SoEven(n - m))),
        C9 { .. } | C10 { .. } => {
            let printed = LieAlg::Sp(n);
            (LieAlg::Sp(n / 2), Some(printed), twos(n / 2), (n % 2 == 1).then_some(LieAlg::SoEven(1)))
        }
        C11 { n, p } => (LieAlg::Sp(p), None, twos(p), Some(LieAlg::SoOdd(n - 2 * p))),
        C12 { n } => (LieAlg::Sp(n), None, twos(n), None),
        C13 { n } => (LieAlg::SoOdd(n), None, ones(n), None),
    };
    let g_check_printed = printed.filter(|p| *p != g);
    DualData { g_check: g, g_check_printed, l_check: LeviDual { gl, tail } }
}

pub fn rank(x: &SymmetricSpace) -> Result<u32> {
    x.validate()?;
    Ok(dual_data(x).g_check.rank())
}

/// One row of the registry table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryRow {
    pub case: u8,
    pub space: &'static str,
    pub constraint: &'static str,
    pub g_check: &'static str,
    pub l_check: &'static str,
    /// Rank-consistent ǧ_X where the printed column differs.
    pub g_check_corrected: Option<&'static str>,
    /// Parameter keys of the space spec.
    pub keys: &'static str,
}

pub fn registry() -> Vec<RegistryRow> {
    let row = |case, space, constraint, g_check, l_check, corrected, keys| RegistryRow {
        case,
        space,
        constraint,
        g_check,
        l_check,
        g_check_corrected: corrected,
        keys,
    };
    vec![
        row(1, "GL(n,R)/GL(p,R)xGL(n-p,R)", "2p <= n", "sp(2p)", "(gl1)^{2p} x gl(n-2p)", None, "n,p"),
        row(2, "U(p,q)/O(p,q)", "", "gl(p+q)", "(gl1)^{p+q}", None, "p,q"),
        row(3, "U(p,q)/U(r,s)xU(r',s')", "r <= r', s <= s'", "sp(2(r+s))", "(gl1)^{2(r+s)} x gl(r'+s'-(r+s))", None, "r,s,rp,sp"),
        row(4, "U(n,n)/GL(n,C)", "", "sp(2n)", "(gl1)^{2n}", None, "n"),
        row(5, "U(2p,2q)/Sp(p,q)", "", "gl(p+q)", "(gl2)^{p+q}", None, "p,q"),
        row(6, "U(n,n)/Sp(2n,R)", "", "gl(n)", "(gl2)^n", None, "n"),
        row(7, "SO(p,q)/SO(r,s)xSO(r',s')", "p+q = 2n+1, r <= r', s <= s'", "sp(2(r+s))", "sp(2(n-(r+s))) x (gl1)^{r+s}", None, "r,s,rp,sp"),
        row(8, "SO(p,q)/SO(r,s)xSO(r',s')", "p+q = 2n, r <= r', s <= s'", "so(2(r+s)+1)", "so(2(n-(r+s))) x (gl1)^{r+s}", None, "r,s,rp,sp"),
        row(9, "SO(2p,2q)/U(p,q)", "p+q = n, not both p,q odd", "sp(2(p+q))", "(gl2)^{[n/2]} (+so(2) if n odd)", Some("sp(2[n/2])"), "p,q"),
        row(10, "SO(n,n)/GL(n,R)", "", "sp(2n)", "(gl2)^{[n/2]} (+so(2) if n odd)", Some("sp(2[n/2])"), "n"),
        row(11, "Sp(2n,R)/Sp(2p,R)xSp(2(n-p),R)", "2p <= n", "sp(2p)", "(gl2)^p x so(2(n-2p)+1)", None, "n,p"),
        row(12, "Sp(4n,R)/Sp(2n,C)", "", "sp(2n)", "(gl2)^n", None, "n"),
        row(13, "Sp(2n,R)/GL(n,R)", "", "so(2n+1)", "(gl1)^n", None, "n"),
    ]
}

/// All valid spaces of a case with every raw parameter at most `bound`.
pub fn instances(case: u8, bound: u32) -> Vec<SymmetricSpace> {
    use SymmetricSpace::*;
    let mut out = Vec::new();
    let b = bound;
    match case {
        1 | 11 => {
            for n in 1..=b {
                for p in 0..=n / 2 {
                    out.push(if case == 1 { C1 { n, p } } else { C11 { n, p } });
                }
            }
        }
        2 | 5 | 9 => {
            for p in 0..=b {
                for q in 0..=b {
                    out.push(match case {
                        2 => C2 { p, q },
                        5 => C5 { p, q },
                        _ => C9 { p, q },
                    });
                }
            }
        }
        3 | 7 | 8 => {
            for r in 0..=b {
                for s in 0..=b {
                    for rp in r..=b {
                        for sp in s..=b {
                            out.push(match case {
                                3 => C3 { r, s, rp, sp },
                                7 => C7 { r, s, rp, sp },
                                _ => C8 { r, s, rp, sp },
                            });
                        }
                    }
                }
            }
        }
        4 | 6 | 10 | 12 | 13 => {
            for n in 1..=b {
                out.push(match case {
                    4 => C4 { n },
                    6 => C6 { n },
                    10 => C10 { n },
                    12 => C12 { n },
                    _ => C13 { n },
                });
            }
        }
        _ => {}
    }
    out.retain(|x| x.validate().is_ok());
    out
}

pub fn all_instances(bound: u32) -> Vec<SymmetricSpace> {
    (1..=13).flat_map(|c| instances(c, bound)).collect()
}

/// A factor of a real Levi subgroup or of L∩H.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RealFactor {
    CStar,
    RStar,
    /// {±1}.
    Pm1,
    /// Compact U(k).
    UComp(u32),
    SUComp(u32),
    GlR(u32),
    U(u32, u32),
    SU(u32, u32),
    SO(u32, u32),
    /// Sp(2k,R).
    SpR(u32),
}

impl RealFactor {
    /// Real dimension of the centre's identity component.
    pub fn center_dim(&self) -> u32 {
        match *self {
            RealFactor::CStar => 2,
            RealFactor::RStar => 1,
            RealFactor::Pm1 | RealFactor::SUComp(_) | RealFactor::SU(..) | RealFactor::SpR(_) => 0,
            RealFactor::UComp(k) => u32::from(k > 0),
            RealFactor::GlR(k) => u32::from(k > 0),
            RealFactor::U(a, b) => u32::from(a + b > 0),
            RealFactor::SO(a, b) => u32::from(a + b == 2),
        }
    }

    /// Complexified Lie algebra factors; trivial algebras are dropped.
    pub fn complexify(&self) -> Vec<LieAlg> {
        match *self {
            RealFactor::CStar => vec![LieAlg::Gl(1), LieAlg::Gl(1)],
            RealFactor::RStar => vec![LieAlg::Gl(1)],
            RealFactor::Pm1 => vec![],
            RealFactor::UComp(k) | RealFactor::GlR(k) => {
                if k > 0 {
                    vec![LieAlg::Gl(k)]
                } else {
                    vec![]
                }
            }
            RealFactor::U(a, b) => {
                if a + b > 0 {
                    vec![LieAlg::Gl(a + b)]
                } else {
                    vec![]
                }
            }
            RealFactor::SUComp(_) | RealFactor::SU(..) => vec![],
            RealFactor::SO(a, b) => {
                let d = a + b;
                if d <= 1 {
                    vec![]
                } else if d % 2 == 1 {
                    vec![LieAlg::SoOdd(d / 2)]
                } else {
                    vec![LieAlg::SoEven(d / 2)]
                }
            }
            RealFactor::SpR(k) => {
                if k > 0 {
                    vec![LieAlg::Sp(k)]
                } else {
                    vec![]
                }
            }
        }
    }

    fn is_trivial(&self) -> bool {
        match *self {
            RealFactor::UComp(0) | RealFactor::SUComp(0) | RealFactor::GlR(0) | RealFactor::SpR(0) => true,
            RealFactor::U(a, b) | RealFactor::SU(a, b) => a + b == 0,
            RealFactor::SO(a, b) => a + b <= 1,
            _ => false,
        }
    }
}

impl fmt::Display for RealFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RealFactor::CStar => f.write_str("C^x"),
            RealFactor::RStar => f.write_str("R^x"),
            RealFactor::Pm1 => f.write_str("{+-1}"),
            RealFactor::UComp(k) => write!(f, "U({k})"),
            RealFactor::SUComp(k) => write!(f, "SU({k})"),
            RealFactor::GlR(k) => write!(f, "GL({k},R)"),
            RealFactor::U(a, b) => write!(f, "U({a},{b})"),
            RealFactor::SU(a, b) => write!(f, "SU({a},{b})"),
            RealFactor::SO(a, b) => write!(f, "SO({a},{b})"),
            RealFactor::SpR(k) => write!(f, "Sp({},R)", 2 * k),
        }
    }
}

/// A product of powers of real factors.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RealProduct(pub Vec<(RealFactor, u32)>);

impl RealProduct {
    fn of(items: &[(RealFactor, u32)]) -> Self {
        RealProduct(items.iter().copied().filter(|(f, e)| *e > 0 && !f.is_trivial()).collect())
    }

    pub fn center_dim(&self) -> u32 {
        self.0.iter().map(|(f, e)| f.center_dim() * e).sum()
    }

    pub fn complexify(&self) -> Vec<LieAlg> {
        self.0
            .iter()
            .flat_map(|(f, e)| std::iter::repeat(f.complexify()).take(*e as usize).flatten())
            .collect()
    }
}

impl fmt::Display for RealProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(x, e)| if *e == 1 { x.to_string() } else { format!("{x}^{e}") })
            .collect();
        f.write_str(&parts.join(" x "))
    }
}

/// When a character π_L(...) of L is trivial on L∩H.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrivialityRule {
    /// Every character is trivial on L∩H.
    Always,
    /// All t_i even.
    AllEven,
    /// t_i ∈ Z and ε = 0 (t_i ∈ ½Z a priori).
    IntegralAndEpsZero,
    /// (t_1,-t_1,…,t_k,-t_k) followed by a zero tail entry when present.
    PairedOpposite { pairs: u32, tail: bool },
    /// Trivial iff the sign/η part is trivial.
    EpsZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharLattice {
    /// Number of t-entries of π_L(t; ε).
    pub t_len: u32,
    /// t_i ∈ ½Z rather than Z.
    pub half_integral: bool,
    /// Whether an extra sign ε (or η) is part of the parameter.
    pub has_eps: bool,
    pub rule: TrivialityRule,
    pub description: String,
}

impl CharLattice {
    /// Whether π_L(t; eps) is a character of L at all.
    pub fn is_character(&self, t: &[Rational64], eps: u8) -> bool {
        t.len() == self.t_len as usize
            && t.iter().all(|x| if self.half_integral { (x * 2).is_integer() } else { x.is_integer() })
            && (eps == 0 || self.has_eps)
            && eps <= 1
    }

    pub fn trivial_on_l_cap_h(&self, t: &[Rational64], eps: u8) -> bool {
        if !self.is_character(t, eps) {
            return false;
        }
        let even = |x: &Rational64| x.is_integer() && x.to_integer() % 2 == 0;
        match self.rule {
            TrivialityRule::Always => true,
            TrivialityRule::AllEven => t.iter().all(even),
            TrivialityRule::IntegralAndEpsZero => eps == 0 && t.iter().all(Rational64::is_integer),
            TrivialityRule::PairedOpposite { pairs, tail } => {
                let k = pairs as usize;
                (0..k).all(|i| t[2 * i] + t[2 * i + 1] == Rational64::from_integer(0))
                    && (!tail || t[2 * k] == Rational64::from_integer(0))
            }
            TrivialityRule::EpsZero => eps == 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealLevi {
    pub l: RealProduct,
    pub l_cap_h: RealProduct,
    pub chars: CharLattice,
    /// Second reading of an ambiguous display, with a note.
    pub alternative: Option<(RealProduct, RealProduct, String)>,
}

pub fn real_levi(x: &SymmetricSpace) -> Result<RealLevi> {
    x.validate()?;
    use RealFactor::*;
    use SymmetricSpace::*;
    let lat = |t_len: u32, half_integral: bool, has_eps: bool, rule: TrivialityRule, d: &str| CharLattice {
        t_len,
        half_integral,
        has_eps,
        rule,
        description: d.to_string(),
    };
    let mut alternative = None;
    let (l, lh, chars) = match *x {
        C1 { n, p } => (
            RealProduct::of(&[(CStar, p), (GlR(n - 2 * p), 1)]),
            RealProduct::of(&[(RStar, p), (GlR(n - 2 * p), 1)]),
            lat(p, true, n > 2 * p, TrivialityRule::IntegralAndEpsZero, "pi_L(t_1..t_p, eps), t_i in Z/2; trivial iff t_i in Z and eps = 0"),
        ),
        C2 { p, q } => (
            RealProduct::of(&[(UComp(1), p + q)]),
            RealProduct::of(&[(Pm1, p + q)]),
            lat(p + q, false, false, TrivialityRule::AllEven, "pi_L(t_1..t_n); trivial iff all t_i even"),
        ),
        C3 { r, s, rp, sp } => {
            let k = r + s;
            let tail = rp + sp > k;
            (
                RealProduct::of(&[(UComp(1), 2 * k), (U(rp - r, sp - s), 1)]),
                RealProduct::of(&[(UComp(1), k), (U(rp - r, sp - s), 1)]),
                lat(
                    2 * k + u32::from(tail),
                    false,
                    false,
                    TrivialityRule::PairedOpposite { pairs: k, tail },
                    "pi_L(t_1..t_2k, t_0); trivial iff (t_1,-t_1,...,t_k,-t_k,0)",
                ),
            )
        }
        C4 { n } => (
            RealProduct::of(&[(UComp(1), 2 * n)]),
            RealProduct::of(&[(UComp(1), n)]),
            lat(2 * n, false, false, TrivialityRule::PairedOpposite { pairs: n, tail: false }, "pi_L(t_1..t_2n); trivial iff (t_1,-t_1,...,t_n,-t_n)"),
        ),
        C5 { p, q } => (
            RealProduct::of(&[(U(2, 0), p), (U(0, 2), q)]),
            RealProduct::of(&[(SU(2, 0), p), (SU(0, 2), q)]),
            lat(p + q, false, false, TrivialityRule::Always, "pi_L(t_1..t_n); always trivial"),
        ),
        C6 { n } => (
            RealProduct::of(&[(U(1, 1), n)]),
            RealProduct::of(&[(SU(1, 1), n)]),
            lat(n, false, false, TrivialityRule::Always, "pi_L(t_1..t_n); always trivial"),
        ),
        C7 { r, s, rp, sp } | C8 { r, s, rp, sp } => {
            let (a, b) = (rp - r, sp - s);
            (
                RealProduct::of(&[(U(1, 0), r), (U(0, 1), s), (SO(a, b), 1)]),
                RealProduct::of(&[(SO(a, b), 1)]),
                lat(r + s, false, a * b != 0, TrivialityRule::EpsZero, "pi_L(t_1..t_{r+s}; eta); trivial iff eta trivial"),
            )
        }
        C9 { p, q } => {
            let n = p + q;
            let d = "pi_L(t_1..t_[n/2]); always trivial";
            if n % 2 == 0 {
                (
                    RealProduct::of(&[(U(2, 0), p / 2), (U(0, 2), q / 2)]),
                    RealProduct::of(&[(SU(2, 0), p / 2), (SU(0, 2), q / 2)]),
                    lat(n / 2, false, false, TrivialityRule::Always, d),
                )
            } else {
                alternative = Some((
                    RealProduct::of(&[(U(2, 0), (q - 1) / 2), (U(0, 2), p / 2), (SO(2, 0), 1)]),
                    RealProduct::of(&[(SU(2, 0), (q - 1) / 2), (SU(0, 2), p / 2), (SO(2, 0), 1)]),
                    "signature swapped: SO(2q,2p)/U(q,p) with q odd".to_string(),
                ));
                (
                    RealProduct::of(&[(U(2, 0), p / 2), (U(0, 2), (q - 1) / 2), (SO(0, 2), 1)]),
                    RealProduct::of(&[(SU(2, 0), p / 2), (SU(0, 2), (q - 1) / 2), (SO(0, 2), 1)]),
                    lat(n / 2, false, false, TrivialityRule::Always, d),
                )
            }
        }
        C10 { n } => {
            if n % 2 == 0 {
                (
                    RealProduct::of(&[(U(1, 1), n / 2)]),
                    RealProduct::of(&[(SU(1, 1), n / 2)]),
                    lat(n / 2, false, false, TrivialityRule::Always, "pi_L(t_1..t_[n/2]); always trivial"),
                )
            } else {
                (
                    RealProduct::of(&[(U(1, 1), n / 2), (SO(1, 1), 1)]),
                    RealProduct::of(&[(SU(1, 1), n / 2), (SO(1, 1), 1)]),
                    lat(n / 2, false, true, TrivialityRule::EpsZero, "pi_L(t_1..t_[n/2]; eps); trivial iff eps = 0"),
                )
            }
        }
        C11 { n, p } => (
            RealProduct::of(&[(U(1, 1), p), (SpR(n - 2 * p), 1)]),
            RealProduct::of(&[(SU(1, 1), p), (SpR(n - 2 * p), 1)]),
            lat(p, false, false, TrivialityRule::Always, "pi_L(t_1..t_p); always trivial"),
        ),
        C12 { n } => (
            RealProduct::of(&[(UComp(2), n)]),
            RealProduct::of(&[(SUComp(2), n)]),
            lat(n, false, false, TrivialityRule::Always, "pi_L(t_1..t_n); always trivial"),
        ),
        C13 { n } => (
            RealProduct::of(&[(UComp(1), n)]),
            RealProduct::of(&[(Pm1, n)]),
            lat(n, false, false, TrivialityRule::AllEven, "pi_L(t_1..t_n); trivial iff all t_i even"),
        ),
    };
    Ok(RealLevi { l, l_cap_h: lh, chars, alternative })
}

pub fn levi_char_constraints(x: &SymmetricSpace) -> Result<CharLattice> {
    Ok(real_levi(x)?.chars)
}

/// Rank read off the real Levi: dim Z(L) − dim Z(L∩H).
pub fn rank_from_levi(x: &SymmetricSpace) -> Result<u32> {
    let rl = real_levi(x)?;
    Ok(rl.l.center_dim() - rl.l_cap_h.center_dim())
}

/// Factors of ľ_X as Lie algebras, for comparison with the dual of the complexified L.
pub fn l_check_algebras(d: &LeviDual) -> Vec<LieAlg> {
    let mut v: Vec<LieAlg> = d.gl.iter().map(|&k| LieAlg::Gl(k)).collect();
    v.extend(d.tail.filter(|t| t.rank() > 0));
    v.sort();
    v
}

/// The complexified real Levi, dualized factor by factor.
pub fn dual_of_complexified_levi(x: &SymmetricSpace) -> Result<Vec<LieAlg>> {
    let mut v: Vec<LieAlg> = real_levi(x)?.l.complexify().iter().map(LieAlg::dual).collect();
    v.sort();
    Ok(v)
}

/// Golden data for the minimal (rank-one) member of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneFixture {
    pub space: SymmetricSpace,
    pub l: &'static str,
    pub l_cap_h: &'static str,
}

pub fn rank_one_fixtures() -> Vec<RankOneFixture> {
    use SymmetricSpace::*;
    let f = |space, l, l_cap_h| RankOneFixture { space, l, l_cap_h };
    vec![
        f(C1 { n: 2, p: 1 }, "C^x", "R^x"),
        f(C2 { p: 1, q: 0 }, "U(1)", "{+-1}"),
        f(C3 { r: 1, s: 0, rp: 1, sp: 0 }, "U(1)^2", "U(1)"),
        f(C4 { n: 1 }, "U(1)^2", "U(1)"),
        f(C5 { p: 1, q: 0 }, "U(2,0)", "SU(2,0)"),
        f(C6 { n: 1 }, "U(1,1)", "SU(1,1)"),
        f(C8 { r: 1, s: 0, rp: 1, sp: 0 }, "U(1,0)", "1"),
        f(C9 { p: 2, q: 0 }, "U(2,0)", "SU(2,0)"),
        f(C10 { n: 2 }, "U(1,1)", "SU(1,1)"),
        f(C11 { n: 2, p: 1 }, "U(1,1)", "SU(1,1)"),
        f(C12 { n: 1 }, "U(2)", "SU(2)"),
        f(C13 { n: 1 }, "U(1)", "{+-1}"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn registry_rows() {
        let reg = registry();
        assert_eq!(reg.len(), 13);
        assert_eq!((reg[4].space, reg[4].g_check, reg[4].l_check), ("U(2p,2q)/Sp(p,q)", "gl(p+q)", "(gl2)^{p+q}"));
        assert_eq!((reg[12].space, reg[12].g_check, reg[12].l_check), ("Sp(2n,R)/GL(n,R)", "so(2n+1)", "(gl1)^n"));
    }

    #[test]
    fn case9_both_odd_rejected() {
        assert!("case9:p=1,q=1".parse::<SymmetricSpace>().is_err());
        assert_eq!("case9:p=1,q=2".parse::<SymmetricSpace>().unwrap(), SymmetricSpace::C9 { p: 2, q: 1 });
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SymmetricSpace::C1 { n: 7, p: 2 }).unwrap(), 2);
        assert_eq!(rank(&SymmetricSpace::C2 { p: 2, q: 2 }).unwrap(), 4);
        assert_eq!(rank(&SymmetricSpace::C8 { r: 1, s: 1, rp: 2, sp: 2 }).unwrap(), 2);
        assert_eq!(dual_data(&SymmetricSpace::C8 { r: 1, s: 1, rp: 2, sp: 2 }).g_check.to_string(), "so(5)");
    }

    #[test]
    fn real_levi_examples() {
        let c1 = real_levi(&SymmetricSpace::C1 { n: 7, p: 2 }).unwrap();
        assert_eq!(c1.l.to_string(), "C^x^2 x GL(3,R)");
        assert_eq!(c1.l_cap_h.to_string(), "R^x^2 x GL(3,R)");
        let c5 = real_levi(&SymmetricSpace::C5 { p: 2, q: 1 }).unwrap();
        assert_eq!(c5.l.to_string(), "U(2,0)^2 x U(0,2)");
        assert_eq!(c5.l_cap_h.to_string(), "SU(2,0)^2 x SU(0,2)");
        let c13 = real_levi(&SymmetricSpace::C13 { n: 3 }).unwrap();
        assert_eq!((c13.l.to_string(), c13.l_cap_h.to_string()), ("U(1)^3".into(), "{+-1}^3".into()));
    }

    #[test]
    fn rank_one_fixtures_match() {
        for fx in rank_one_fixtures() {
            let rl = real_levi(&fx.space).unwrap();
            assert_eq!(rl.l.to_string(), fx.l, "{}", fx.space);
            assert_eq!(rl.l_cap_h.to_string(), fx.l_cap_h, "{}", fx.space);
            assert_eq!(rank(&fx.space).unwrap(), 1, "{}", fx.space);
        }
    }

    #[test]
    fn char_lattice_examples() {
        let c3 = levi_char_constraints(&SymmetricSpace::C3 { r: 1, s: 1, rp: 2, sp: 1 }).unwrap();
        assert!(c3.trivial_on_l_cap_h(&[r(3), r(-3), r(1), r(-1), r(0)], 0));
        assert!(!c3.trivial_on_l_cap_h(&[r(3), r(-3), r(1), r(-1), r(2)], 0));
        let c13 = levi_char_constraints(&SymmetricSpace::C13 { n: 2 }).unwrap();
        assert!(c13.trivial_on_l_cap_h(&[r(2), r(-4)], 0));
        assert!(!c13.trivial_on_l_cap_h(&[r(2), r(1)], 0));
        let c12 = levi_char_constraints(&SymmetricSpace::C12 { n: 2 }).unwrap();
        assert!(c12.trivial_on_l_cap_h(&[r(5), r(-7)], 0));
    }

    #[test]
    fn rank_one_case1_sign_character() {
        // λ2 = −λ1 ∈ ½Z∖Z gives the sign character of R^x
        let c1 = levi_char_constraints(&SymmetricSpace::C1 { n: 2, p: 1 }).unwrap();
        assert!(c1.trivial_on_l_cap_h(&[r(2)], 0));
        assert!(!c1.trivial_on_l_cap_h(&[Rational64::new(3, 2)], 0));
    }

    #[test]
    fn space_json_and_spec() {
        let x = SymmetricSpace::C7 { r: 1, s: 0, rp: 2, sp: 1 };
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"case":7,"r":1,"s":0,"rp":2,"sp":1}"#);
        // SO(3,1) has p+q even, so this record is not a case-7 space
        assert!(x.validate().is_err());
        let y = SymmetricSpace::C7 { r: 1, s: 0, rp: 2, sp: 0 };
        assert_eq!(y.spec().parse::<SymmetricSpace>().unwrap(), y);
        assert!(serde_json::from_str::<SymmetricSpace>(r#"{"case":7,"r":2,"s":0,"rp":1,"sp":1}"#).is_err());
    }

    #[test]
    fn case9_odd_records_both_readings() {
        let rl = real_levi(&SymmetricSpace::C9 { p: 2, q: 3 }).unwrap();
        assert_eq!(rl.l.to_string(), "U(2,0) x U(0,2) x SO(0,2)");
        assert!(rl.alternative.is_some());
    }
}
