//! Real classical groups, their L-groups and c-Levi templates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real classical group. `SymplecticReal(n)` is Sp(2n,R).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup", into = "RawGroup")]
pub enum ClassicalGroup {
    GeneralLinearReal(u32),
    Unitary(u32, u32),
    SymplecticReal(u32),
    SpecialOrthogonal(u32, u32),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "family")]
enum RawGroup {
    #[serde(rename = "GL")]
    Gl { n: u32 },
    #[serde(rename = "U")]
    U { p: u32, q: u32 },
    #[serde(rename = "Sp")]
    Sp { n: u32 },
    #[serde(rename = "SO")]
    So { p: u32, q: u32 },
}

impl TryFrom<RawGroup> for ClassicalGroup {
    type Error = Error;
    fn try_from(raw: RawGroup) -> Result<Self> {
        let g = match raw {
            RawGroup::Gl { n } => ClassicalGroup::GeneralLinearReal(n),
            RawGroup::U { p, q } => ClassicalGroup::Unitary(p, q),
            RawGroup::Sp { n } => ClassicalGroup::SymplecticReal(n),
            RawGroup::So { p, q } => ClassicalGroup::SpecialOrthogonal(p, q),
        };
        g.validate()?;
        Ok(g)
    }
}

impl From<ClassicalGroup> for RawGroup {
    fn from(g: ClassicalGroup) -> Self {
        match g {
            ClassicalGroup::GeneralLinearReal(n) => RawGroup::Gl { n },
            ClassicalGroup::Unitary(p, q) => RawGroup::U { p, q },
            ClassicalGroup::SymplecticReal(n) => RawGroup::Sp { n },
            ClassicalGroup::SpecialOrthogonal(p, q) => RawGroup::So { p, q },
        }
    }
}

impl ClassicalGroup {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            ClassicalGroup::GeneralLinearReal(n) => n >= 1,
            ClassicalGroup::Unitary(p, q) => p + q >= 1,
            ClassicalGroup::SymplecticReal(n) => n >= 1,
            ClassicalGroup::SpecialOrthogonal(p, q) => p + q >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGroup(self.to_string()))
        }
    }
}

impl fmt::Display for ClassicalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassicalGroup::GeneralLinearReal(n) => write!(f, "GL({n},R)"),
            ClassicalGroup::Unitary(p, q) => write!(f, "U({p},{q})"),
            ClassicalGroup::SymplecticReal(n) => write!(f, "Sp({},R)", 2 * n),
            ClassicalGroup::SpecialOrthogonal(p, q) => write!(f, "SO({p},{q})"),
        }
    }
}

/// Complex dual group. `Sp(n)` is Sp(2n,C); `SO(m)` is SO(m,C).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DualFamily {
    GL(u32),
    Sp(u32),
    SO(u32),
}

impl fmt::Display for DualFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DualFamily::GL(n) => write!(f, "GL({n},C)"),
            DualFamily::Sp(n) => write!(f, "Sp({},C)", 2 * n),
            DualFamily::SO(m) => write!(f, "SO({m},C)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GaloisAction {
    Trivial,
    PinnedOuter,
}

/// The L-group of a real classical group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LGroupDescriptor {
    pub dual_family: DualFamily,
    pub galois_action: GaloisAction,
    pub standard_dim: u32,
}

impl LGroupDescriptor {
    pub fn is_unitary(&self) -> bool {
        matches!(self.dual_family, DualFamily::GL(_)) && self.galois_action == GaloisAction::PinnedOuter
    }

    pub fn is_general_linear(&self) -> bool {
        matches!(self.dual_family, DualFamily::GL(_)) && self.galois_action == GaloisAction::Trivial
    }
}

impl fmt::Display for LGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.galois_action {
            GaloisAction::Trivial => write!(f, "{} x W_R", self.dual_family),
            GaloisAction::PinnedOuter => write!(f, "{} x| W_R", self.dual_family),
        }
    }
}

pub fn dual_lgroup(g: ClassicalGroup) -> Result<LGroupDescriptor> {
    g.validate()?;
    let d = match g {
        ClassicalGroup::GeneralLinearReal(n) => LGroupDescriptor {
            dual_family: DualFamily::GL(n),
            galois_action: GaloisAction::Trivial,
            standard_dim: n,
        },
        ClassicalGroup::Unitary(p, q) => LGroupDescriptor {
            dual_family: DualFamily::GL(p + q),
            galois_action: GaloisAction::PinnedOuter,
            standard_dim: p + q,
        },
        ClassicalGroup::SymplecticReal(n) => LGroupDescriptor {
            dual_family: DualFamily::SO(2 * n + 1),
            galois_action: GaloisAction::Trivial,
            standard_dim: 2 * n + 1,
        },
        ClassicalGroup::SpecialOrthogonal(p, q) if (p + q) % 2 == 1 => LGroupDescriptor {
            dual_family: DualFamily::Sp((p + q) / 2),
            galois_action: GaloisAction::Trivial,
            standard_dim: p + q - 1,
        },
        ClassicalGroup::SpecialOrthogonal(p, q) => {
            let n = (p + q) / 2;
            let action = if (i64::from(n) - i64::from(p)).rem_euclid(2) == 0 {
                GaloisAction::Trivial
            } else {
                GaloisAction::PinnedOuter
            };
            LGroupDescriptor {
                dual_family: DualFamily::SO(2 * n),
                galois_action: action,
                standard_dim: 2 * n,
            }
        }
    };
    Ok(d)
}

/// One factor of a c-Levi subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LeviFactor {
    /// GL(a,C) viewed as a real group.
    GlComplex(u32),
    GlReal(u32),
    U(u32, u32),
    /// Sp(2a,R).
    SpReal(u32),
    SO(u32, u32),
}

impl fmt::Display for LeviFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LeviFactor::GlComplex(a) => write!(f, "GL({a},C)"),
            LeviFactor::GlReal(a) => write!(f, "GL({a},R)"),
            LeviFactor::U(p, q) => write!(f, "U({p},{q})"),
            LeviFactor::SpReal(a) => write!(f, "Sp({},R)", 2 * a),
            LeviFactor::SO(r, s) => write!(f, "SO({r},{s})"),
        }
    }
}

/// Family-level description of the c-Levi subgroups of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CLeviFamily {
    pub group: ClassicalGroup,
    pub shape: String,
    pub equation: String,
}

/// A concrete c-Levi: general-linear or unitary blocks plus at most one classical tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CLeviTemplate {
    pub factors: Vec<LeviFactor>,
}

impl CLeviTemplate {
    /// Checks the bookkeeping equation of the family of `g`.
    pub fn bookkeeping_holds(&self, g: ClassicalGroup) -> bool {
        let mut cplx = 0;
        let mut real = 0;
        let (mut up, mut uq) = (0, 0);
        let mut sp: Vec<u32> = Vec::new();
        let mut so: Vec<(u32, u32)> = Vec::new();
        for f in &self.factors {
            match *f {
                LeviFactor::GlComplex(a) if a >= 1 => cplx += a,
                LeviFactor::GlReal(a) if a >= 1 => real += a,
                LeviFactor::U(p, q) if p + q >= 1 => {
                    up += p;
                    uq += q;
                }
                LeviFactor::SpReal(a) => sp.push(a),
                LeviFactor::SO(r, s) => so.push((r, s)),
                _ => return false,
            }
        }
        match g {
            ClassicalGroup::GeneralLinearReal(n) => {
                up + uq == 0 && sp.is_empty() && so.is_empty() && 2 * cplx + real == n
            }
            ClassicalGroup::Unitary(p, q) => {
                cplx + real == 0 && sp.is_empty() && so.is_empty() && (up, uq) == (p, q)
            }
            ClassicalGroup::SymplecticReal(n) => {
                cplx + real == 0 && so.is_empty() && sp.len() == 1 && 2 * (up + uq) + sp[0] == n
            }
            ClassicalGroup::SpecialOrthogonal(p, q) => {
                cplx + real == 0
                    && sp.is_empty()
                    && so.len() == 1
                    && (2 * up + so[0].0, 2 * uq + so[0].1) == (p, q)
            }
        }
    }
}

pub fn c_levi_family(g: ClassicalGroup) -> Result<CLeviFamily> {
    g.validate()?;
    let (shape, equation) = match g {
        ClassicalGroup::GeneralLinearReal(_) => {
            ("prod GL(a_i,C) x prod GL(a'_j,R)", "2 sum a_i + sum a'_j = n")
        }
        ClassicalGroup::Unitary(_, _) => ("prod U(p_i,q_i)", "sum (p_i,q_i) = (p,q)"),
        ClassicalGroup::SymplecticReal(_) => {
            ("prod U(p_i,q_i) x Sp(2a,R)", "2 sum (p_i+q_i) + a = n")
        }
        ClassicalGroup::SpecialOrthogonal(_, _) => {
            ("prod U(p_i,q_i) x SO(r,s)", "sum (2p_i,2q_i) + (r,s) = (p,q)")
        }
    };
    Ok(CLeviFamily { group: g, shape: shape.into(), equation: equation.into() })
}

/// Partitions of `n` into non-increasing positive parts.
pub(crate) fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Multisets of nonzero pairs summing to `(p,q)`, each listed in non-increasing order.
fn pair_partitions(p: u32, q: u32) -> Vec<Vec<(u32, u32)>> {
    fn go(p: u32, q: u32, max: (u32, u32), cur: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if p == 0 && q == 0 {
            out.push(cur.clone());
            return;
        }
        for a in (0..=p).rev() {
            for b in (0..=q).rev() {
                if a + b == 0 || (a, b) > max {
                    continue;
                }
                cur.push((a, b));
                go(p - a, q - b, (a, b), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(p, q, (p, q), &mut Vec::new(), &mut out);
    out
}

/// All c-Levi instances of `g`, up to reordering of the factors.
pub fn c_levi_instances(g: ClassicalGroup) -> Result<Vec<CLeviTemplate>> {
    g.validate()?;
    let mut out = Vec::new();
    match g {
        ClassicalGroup::GeneralLinearReal(n) => {
            for c in 0..=n / 2 {
                let cps = if c == 0 { vec![vec![]] } else { partitions(c) };
                let rps = if n == 2 * c { vec![vec![]] } else { partitions(n - 2 * c) };
                for cp in &cps {
                    for rp in &rps {
                        let mut factors: Vec<LeviFactor> = cp.iter().map(|&a| LeviFactor::GlComplex(a)).collect();
                        factors.extend(rp.iter().map(|&a| LeviFactor::GlReal(a)));
                        out.push(CLeviTemplate { factors });
                    }
                }
            }
        }
        ClassicalGroup::Unitary(p, q) => {
            for pp in pair_partitions(p, q) {
                out.push(CLeviTemplate { factors: pp.into_iter().map(|(a, b)| LeviFactor::U(a, b)).collect() });
            }
        }
        ClassicalGroup::SymplecticReal(n) => {
            for a in 0..=n {
                if (n - a) % 2 != 0 {
                    continue;
                }
                let half = (n - a) / 2;
                for up in 0..=half {
                    for pp in pair_partitions(up, half - up) {
                        let mut factors: Vec<LeviFactor> = pp.into_iter().map(|(x, y)| LeviFactor::U(x, y)).collect();
                        factors.push(LeviFactor::SpReal(a));
                        out.push(CLeviTemplate { factors });
                    }
                }
            }
        }
        ClassicalGroup::SpecialOrthogonal(p, q) => {
            for up in 0..=p / 2 {
                for uq in 0..=q / 2 {
                    for pp in pair_partitions(up, uq) {
                        let mut factors: Vec<LeviFactor> = pp.into_iter().map(|(x, y)| LeviFactor::U(x, y)).collect();
                        factors.push(LeviFactor::SO(p - 2 * up, q - 2 * uq));
                        out.push(CLeviTemplate { factors });
                    }
                }
            }
        }
    }
    Ok(out)
}
