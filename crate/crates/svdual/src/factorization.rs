//! Principal SL(2) partitions, commutants, the dual group ^LG_X, per-case
//! discrete-series parameter shapes and the factorization ψ = φ∘φ_d.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::arthur::{sl2_partition, ArthurParameter, ArthurSummand};
use crate::error::{Error, Result};
use crate::groups::{DualFamily, GaloisAction, LGroupDescriptor};
use crate::symspaces::{dual_data, LeviDual, LieAlg, SymmetricSpace};
use crate::weil::{Rho, SelfDuality, WeilCChar, WeilRep};

/// Partition of the standard dimension, as part size ↦ multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionWithMult {
    pub mult: BTreeMap<u32, u32>,
    pub ambient: LGroupDescriptor,
}

impl PartitionWithMult {
    pub fn from_parts(parts: &[u32], ambient: LGroupDescriptor) -> Self {
        let mut mult = BTreeMap::new();
        for &a in parts {
            *mult.entry(a).or_insert(0) += 1;
        }
        PartitionWithMult { mult, ambient }
    }

    /// Parts in decreasing order.
    pub fn parts(&self) -> Vec<u32> {
        self.mult.iter().rev().flat_map(|(&a, &m)| std::iter::repeat(a).take(m as usize)).collect()
    }

    pub fn total(&self) -> u32 {
        self.mult.iter().map(|(a, m)| a * m).sum()
    }
}

impl fmt::Display for PartitionWithMult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mult.iter().rev().map(|(a, m)| if *m == 1 { a.to_string() } else { format!("{a}^{m}") }).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn principal_partition(levi: &LeviDual, ambient: LGroupDescriptor) -> Result<PartitionWithMult> {
    let gl_like = matches!(ambient.dual_family, DualFamily::GL(_));
    let mut parts = Vec::new();
    for &k in &levi.gl {
        parts.push(k);
        if !gl_like {
            parts.push(k);
        }
    }
    match levi.tail {
        Some(LieAlg::Gl(k)) => parts.push(k),
        Some(LieAlg::Sp(k)) => parts.push(2 * k),
        Some(LieAlg::SoOdd(k)) => parts.push(2 * k + 1),
        Some(LieAlg::SoEven(k)) if k >= 1 => parts.extend([2 * k - 1, 1]),
        _ => {}
    }
    let total: u32 = parts.iter().sum();
    let odd_so = matches!(ambient.dual_family, DualFamily::SO(m) if m % 2 == 1);
    if odd_so && levi.tail.is_none() && total + 1 == ambient.standard_dim {
        parts.push(1);
    }
    parts.retain(|&a| a > 0);
    let p = PartitionWithMult::from_parts(&parts, ambient);
    if p.total() != ambient.standard_dim {
        return Err(Error::InvalidParameter(format!(
            "levi {levi} gives total {} in {ambient}",
            p.total()
        )));
    }
    Ok(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CFactor {
    GL(u32),
    /// Sp(k,C), k even.
    Sp(u32),
    O(u32),
}

impl fmt::Display for CFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CFactor::GL(k) => write!(f, "GL({k})"),
            CFactor::Sp(k) => write!(f, "Sp({k})"),
            CFactor::O(k) => write!(f, "O({k})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeilAction {
    DirectProduct,
    SemiDirect,
}

/// What the commutant has beyond its main factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Extra {
    None,
    Pm1,
    SO2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutantDescriptor {
    /// Sorted factor multiset.
    pub factors: Vec<CFactor>,
    pub det_condition: bool,
    pub extra: Extra,
    pub weil_action: WeilAction,
}

impl CommutantDescriptor {
    fn build(mut factors: Vec<CFactor>, det_condition: bool, weil_action: WeilAction) -> Self {
        factors.retain(|f| !matches!(f, CFactor::GL(0) | CFactor::Sp(0) | CFactor::O(0)));
        factors.sort();
        let n_o = factors.iter().filter(|f| matches!(f, CFactor::O(_))).count();
        let signs = n_o - usize::from(det_condition && n_o > 0);
        let extra = if signs > 0 {
            Extra::Pm1
        } else if det_condition && factors.contains(&CFactor::O(2)) {
            Extra::SO2
        } else {
            Extra::None
        };
        CommutantDescriptor { factors, det_condition, extra, weil_action }
    }
}

impl fmt::Display for CommutantDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fs: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        let body = if fs.is_empty() { "1".to_string() } else { fs.join(" x ") };
        if self.det_condition {
            write!(f, "S({body})")?;
        } else {
            f.write_str(&body)?;
        }
        match self.weil_action {
            WeilAction::DirectProduct => f.write_str(" x W_R"),
            WeilAction::SemiDirect => f.write_str(" x| W_R"),
        }
    }
}

/// Centralizer of the SL(2) image of a partition in the ambient L-group.
pub fn commutant(ambient: LGroupDescriptor, part: &PartitionWithMult) -> Result<CommutantDescriptor> {
    if part.total() != ambient.standard_dim {
        return Err(Error::InvalidParameter(format!("partition {part} does not fill {ambient}")));
    }
    let mut factors = Vec::new();
    match ambient.dual_family {
        DualFamily::GL(_) => {
            factors.extend(part.mult.values().map(|&m| CFactor::GL(m)));
            let w = match ambient.galois_action {
                GaloisAction::Trivial => WeilAction::DirectProduct,
                GaloisAction::PinnedOuter => WeilAction::SemiDirect,
            };
            Ok(CommutantDescriptor::build(factors, false, w))
        }
        DualFamily::Sp(_) => {
            for (&a, &m) in &part.mult {
                if a % 2 == 1 {
                    if m % 2 == 1 {
                        return Err(Error::InvalidParameter(format!("odd part {a} with odd multiplicity in Sp")));
                    }
                    factors.push(CFactor::Sp(m));
                } else {
                    factors.push(CFactor::O(m));
                }
            }
            Ok(CommutantDescriptor::build(factors, false, WeilAction::DirectProduct))
        }
        DualFamily::SO(_) => {
            let mut odd_odd = false;
            for (&a, &m) in &part.mult {
                if a % 2 == 0 {
                    if m % 2 == 1 {
                        return Err(Error::InvalidParameter(format!("even part {a} with odd multiplicity in SO")));
                    }
                    factors.push(CFactor::Sp(m));
                } else {
                    odd_odd |= m % 2 == 1;
                    factors.push(CFactor::O(m));
                }
            }
            // an element of det −1 central in an odd O(m) absorbs the outer action
            let w = match ambient.galois_action {
                GaloisAction::PinnedOuter if !odd_odd => WeilAction::SemiDirect,
                _ => WeilAction::DirectProduct,
            };
            Ok(CommutantDescriptor::build(factors, true, w))
        }
    }
}

/// Commutant of X read case by case, boundary members included.
pub fn golden_commutant(x: &SymmetricSpace) -> CommutantDescriptor {
    use CFactor::*;
    use SymmetricSpace::*;
    use WeilAction::*;
    let n = x.n();
    let m = x.m();
    let inherit = if x.lgroup().galois_action == GaloisAction::PinnedOuter { SemiDirect } else { DirectProduct };
    let gl_split = |k: u32, n: u32, w| {
        let fs = if n - 2 * k >= 2 {
            vec![GL(2 * k), GL(1)]
        } else if n - 2 * k == 1 {
            vec![GL(2 * k + 1)]
        } else {
            vec![GL(2 * k)]
        };
        CommutantDescriptor::build(fs, false, w)
    };
    match *x {
        C1 { n, p } => gl_split(p, n, DirectProduct),
        C2 { .. } => CommutantDescriptor::build(vec![GL(n)], false, SemiDirect),
        C3 { .. } => gl_split(m, n, SemiDirect),
        C4 { n } => CommutantDescriptor::build(vec![GL(2 * n)], false, SemiDirect),
        C5 { .. } | C6 { .. } => CommutantDescriptor::build(vec![GL(n)], false, SemiDirect),
        C7 { .. } => {
            if n == m {
                CommutantDescriptor::build(vec![Sp(2 * m)], false, DirectProduct)
            } else {
                CommutantDescriptor::build(vec![Sp(2 * m), O(1)], false, DirectProduct)
            }
        }
        C8 { .. } => {
            if n - m <= 1 {
                CommutantDescriptor::build(vec![O(2 * n)], true, inherit)
            } else {
                CommutantDescriptor::build(vec![O(2 * m + 1), O(1)], true, DirectProduct)
            }
        }
        C9 { .. } | C10 { .. } => {
            if n % 2 == 0 {
                CommutantDescriptor::build(vec![Sp(n)], true, DirectProduct)
            } else {
                CommutantDescriptor::build(vec![Sp(n - 1), O(2)], true, inherit)
            }
        }
        C11 { p, .. } => CommutantDescriptor::build(vec![Sp(2 * p), O(1)], true, DirectProduct),
        C12 { n } => CommutantDescriptor::build(vec![Sp(2 * n), O(1)], true, DirectProduct),
        C13 { n } => CommutantDescriptor::build(vec![O(2 * n + 1)], true, DirectProduct),
    }
}

/// Whether X sits at a boundary where the generic product formula collapses.
pub fn is_commutant_boundary(x: &SymmetricSpace) -> bool {
    let (n, m) = (x.n(), x.m());
    match *x {
        SymmetricSpace::C1 { n, p } => n - 2 * p <= 1,
        SymmetricSpace::C3 { .. } => n - 2 * m <= 1,
        SymmetricSpace::C7 { .. } => n == m || m == 0,
        SymmetricSpace::C8 { .. } => n - m <= 1,
        _ => false,
    }
}

/// Commutant of the principal SL(2) of ľ_X computed by the general rule.
pub fn commutant_of_space(x: &SymmetricSpace) -> Result<CommutantDescriptor> {
    let part = principal_partition(&dual_data(x).l_check, x.lgroup())?;
    commutant(x.lgroup(), &part)
}

/// The two realizations of ^LG_X in case 3 with n odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case3Variant {
    /// SO(2k,C) ⋊ W_R through the orthogonal embedding.
    SOEvenSemidirect,
    /// Sp(2k,C) ⋊ W_R, the E-group.
    ESpSemidirect,
}

/// How the second tail character of case 8 is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EtaRule {
    /// (Triv,Triv) iff p ≡ n (mod 2), else (Triv,sgn).
    Verbatim,
    /// η_2 = sgn^{p−n+r+s}: the determinant forced by the target.
    LeviFactor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Options {
    pub case3_variant: Case3Variant,
    pub eta_rule: EtaRule,
}

impl Default for Options {
    fn default() -> Self {
        Options { case3_variant: Case3Variant::ESpSemidirect, eta_rule: EtaRule::LeviFactor }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SVDualDescriptor {
    pub family: LieAlg,
    pub weil_action: WeilAction,
    pub variant: Option<Case3Variant>,
}

impl fmt::Display for SVDualDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.family {
            LieAlg::Gl(k) => format!("GL({k},C)"),
            LieAlg::Sp(k) => format!("Sp({},C)", 2 * k),
            LieAlg::SoOdd(k) => format!("SO({},C)", 2 * k + 1),
            LieAlg::SoEven(k) => format!("SO({},C)", 2 * k),
        };
        match (self.weil_action, self.variant) {
            (_, Some(Case3Variant::ESpSemidirect)) => write!(f, "{g} x| W_R (E-group)"),
            (WeilAction::SemiDirect, _) => write!(f, "{g} x| W_R"),
            _ => write!(f, "{g} x W_R"),
        }
    }
}

pub fn sv_dual(x: &SymmetricSpace, variant: Case3Variant) -> SVDualDescriptor {
    use SymmetricSpace::*;
    use WeilAction::*;
    let n = x.n();
    let m = x.m();
    let d = |family, weil_action| SVDualDescriptor { family, weil_action, variant: None };
    match *x {
        C1 { p, .. } => d(LieAlg::Sp(p), DirectProduct),
        C2 { .. } => d(LieAlg::Gl(n), SemiDirect),
        C3 { .. } if n % 2 == 0 => d(LieAlg::Sp(m), DirectProduct),
        C3 { .. } => {
            let family = match variant {
                Case3Variant::SOEvenSemidirect => LieAlg::SoEven(m),
                Case3Variant::ESpSemidirect => LieAlg::Sp(m),
            };
            SVDualDescriptor { family, weil_action: SemiDirect, variant: Some(variant) }
        }
        C4 { n } => d(LieAlg::Sp(n), DirectProduct),
        C5 { .. } | C6 { .. } => d(LieAlg::Gl(n), SemiDirect),
        C7 { .. } => d(LieAlg::Sp(m), DirectProduct),
        C8 { .. } => d(LieAlg::SoOdd(m), DirectProduct),
        C9 { .. } | C10 { .. } => d(LieAlg::Sp(n / 2), DirectProduct),
        C11 { p, .. } => d(LieAlg::Sp(p), DirectProduct),
        C12 { n } => d(LieAlg::Sp(n), DirectProduct),
        C13 { n } => d(LieAlg::SoOdd(n), DirectProduct),
    }
}

/// Every recorded realization of ^LG_X.
pub fn sv_dual_variants(x: &SymmetricSpace) -> Vec<SVDualDescriptor> {
    if matches!(x, SymmetricSpace::C3 { .. }) && x.n() % 2 == 1 {
        vec![sv_dual(x, Case3Variant::ESpSemidirect), sv_dual(x, Case3Variant::SOEvenSemidirect)]
    } else {
        vec![sv_dual(x, Case3Variant::ESpSemidirect)]
    }
}

/// How the φ_d summands are turned into ψ summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HeadRule {
    Identity,
    /// δ(m) ↦ χ_m ⊕ χ_{−m}.
    SplitPairs,
    /// χ_m ↦ χ_{m+shift}.
    ShiftChar(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhiTwist {
    Untwisted,
    SgnTwisted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiDescriptor {
    pub source: SVDualDescriptor,
    /// SL(2) dimension attached to every head summand.
    pub head_a: u32,
    pub head_rule: HeadRule,
    /// φ_d's one-dimensional summand sgn^b goes to `sgn^{b+shift} ⊠ R[1]`; `None` when φ_d has none.
    pub sgn_shift: Option<u8>,
    pub tail: Vec<ArthurSummand>,
    pub twist: PhiTwist,
}

pub fn phi_descriptor(x: &SymmetricSpace, opts: &Options) -> PhiDescriptor {
    use SymmetricSpace::*;
    let n = x.n();
    let m = x.m();
    let s = |rho: Rho, a: u32| ArthurSummand::new(rho, a);
    let triv = Rho::triv();
    let opt_tail = |rho: Rho, a: u32| if a > 0 { vec![s(rho, a)] } else { vec![] };
    let (head_a, head_rule, sgn_shift, tail) = match *x {
        C1 { n, p } => (1, HeadRule::Identity, None, opt_tail(triv, n - 2 * p)),
        C2 { .. } => (1, HeadRule::Identity, None, vec![]),
        C3 { .. } => (1, HeadRule::SplitPairs, None, opt_tail(Rho::chi(0), n - 2 * m)),
        C4 { .. } => (1, HeadRule::SplitPairs, None, vec![]),
        C5 { .. } | C6 { .. } => (2, HeadRule::ShiftChar(if n % 2 == 0 { 1 } else { 0 }), None, vec![]),
        C7 { .. } => (1, HeadRule::Identity, None, opt_tail(triv, 2 * (n - m))),
        C8 { r, s: ss, rp, sp } => {
            if n == m {
                (1, HeadRule::Identity, None, vec![])
            } else {
                let p = i64::from(r + rp);
                let shift = match opts.eta_rule {
                    EtaRule::LeviFactor => (i64::from(n) - p).rem_euclid(2),
                    EtaRule::Verbatim => (p - i64::from(n) - i64::from(r + ss)).rem_euclid(2),
                };
                let _ = sp;
                (1, HeadRule::Identity, Some(shift as u8), vec![s(triv, 2 * (n - m) - 1)])
            }
        }
        C9 { .. } => (2, HeadRule::Identity, None, if n % 2 == 1 { vec![s(triv, 1), s(Rho::sgn(1), 1)] } else { vec![] }),
        C10 { .. } => (2, HeadRule::Identity, None, if n % 2 == 1 { vec![s(triv, 1), s(triv, 1)] } else { vec![] }),
        C11 { n, p } => (2, HeadRule::Identity, None, vec![s(triv, 2 * (n - 2 * p) + 1)]),
        C12 { .. } => (2, HeadRule::Identity, None, vec![s(triv, 1)]),
        C13 { .. } => (1, HeadRule::Identity, Some(0), vec![]),
    };
    PhiDescriptor { source: sv_dual(x, opts.case3_variant), head_a, head_rule, sgn_shift, tail, twist: PhiTwist::Untwisted }
}

/// φ∘φ_d as a list of ψ summands in canonical order.
pub fn recompose(phi: &PhiDescriptor, phi_d: &[Rho], target: LGroupDescriptor) -> ArthurParameter {
    let mut out = Vec::new();
    let a = phi.head_a;
    for rho in phi_d {
        match (*rho, phi.head_rule) {
            (Rho::Weil(WeilRep::TwoDim(m)), HeadRule::SplitPairs) => {
                out.push(ArthurSummand::new(Rho::chi(m), a));
                out.push(ArthurSummand::new(Rho::chi(-m), a));
            }
            (Rho::Char(WeilCChar(m)), HeadRule::ShiftChar(k)) => out.push(ArthurSummand::new(Rho::chi(m + k), a)),
            (Rho::Weil(WeilRep::OneDim(b)), _) => {
                let shift = phi.sgn_shift.unwrap_or(0);
                out.push(ArthurSummand::new(Rho::sgn((b + shift) % 2), 1));
            }
            (other, _) => out.push(ArthurSummand::new(other, a)),
        }
    }
    out.extend(phi.tail.iter().copied());
    ArthurParameter::new(target, out)
}

fn comb(values: &[i64], k: u32) -> Vec<Vec<i64>> {
    values.iter().copied().combinations(k as usize).collect()
}

fn parity_range(lo: i64, hi: i64, parity: i64) -> Vec<i64> {
    (lo..=hi).filter(|m| (m - parity).rem_euclid(2) == 0).collect()
}

/// λ_i = m_i/2 with m sorted decreasing; returns p_0 = #{i : λ_i + (n+1)/2 − i even} and
/// whether λ − ρ has constant parity.
fn case2_lambda_data(ms: &[i64]) -> (u32, Option<i64>) {
    let n = ms.len() as i64;
    let mut sorted = ms.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let mu: Vec<i64> = sorted.iter().enumerate().map(|(i, m)| (m + n + 1 - 2 * (i as i64 + 1)) / 2).collect();
    let p0 = mu.iter().filter(|x| x.rem_euclid(2) == 0).count() as u32;
    let common = if mu.iter().all(|x| (x - mu[0]).rem_euclid(2) == 0) { mu.first().map(|x| x.rem_euclid(2)) } else { None };
    (p0, common)
}

/// All parameters of the discrete-series shape of X with |m_i| ≤ height.
pub fn generate_ds_parameters(x: &SymmetricSpace, height: u32, opts: &Options) -> Vec<ArthurParameter> {
    use SymmetricSpace::*;
    let h = i64::from(height);
    let n = x.n();
    let m = x.m();
    let target = x.lgroup();
    let s = ArthurSummand::new;
    let triv = Rho::triv();
    let odd_pos = parity_range(1, h, 1);
    let mut out = Vec::new();
    let mut emit = |v: Vec<ArthurSummand>| out.push(ArthurParameter::new(target, v));
    let deltas = |ms: &[i64], a: u32| ms.iter().map(|&mm| s(Rho::delta(mm), a)).collect::<Vec<_>>();
    match *x {
        C1 { n, p } => {
            for ms in comb(&odd_pos, p) {
                let mut v = deltas(&ms, 1);
                if n > 2 * p {
                    v.push(s(triv, n - 2 * p));
                }
                emit(v);
            }
        }
        C2 { p, q } => {
            let cands = parity_range(-h, h, i64::from(n) - 1);
            for ms in comb(&cands, n) {
                let (p0, common) = case2_lambda_data(&ms);
                let ok = if n % 2 == 0 {
                    common == Some(i64::from(p % 2))
                } else {
                    p0 == p || p0 == q
                };
                if ok {
                    emit(ms.iter().map(|&mm| s(Rho::chi(mm), 1)).collect());
                }
            }
        }
        C3 { .. } | C4 { .. } => {
            // χ_m ⊠ R[1] in U(N) needs m ≡ N − 1; case 4 lives in U(n,n)
            let (k, big_n) = if let C4 { n } = *x { (n, 2 * n) } else { (m, n) };
            let cands = parity_range(1, h, i64::from(big_n) - 1);
            for ms in comb(&cands, k) {
                let mut v: Vec<ArthurSummand> = ms.iter().flat_map(|&mm| [s(Rho::chi(mm), 1), s(Rho::chi(-mm), 1)]).collect();
                if n > 2 * k {
                    v.push(s(Rho::chi(0), n - 2 * k));
                }
                emit(v);
            }
        }
        C5 { .. } | C6 { .. } => {
            for ms in comb(&parity_range(-h, h, 0), n) {
                emit(ms.iter().map(|&mm| s(Rho::chi(mm), 2)).collect());
            }
        }
        C7 { .. } => {
            for ms in comb(&odd_pos, m) {
                let mut v = deltas(&ms, 1);
                if n > m {
                    v.push(s(triv, 2 * (n - m)));
                }
                emit(v);
            }
        }
        C8 { r, s: ss, rp, .. } => {
            let p = i64::from(r + rp);
            let b2 = match opts.eta_rule {
                EtaRule::Verbatim => (p - i64::from(n)).rem_euclid(2),
                EtaRule::LeviFactor => (p - i64::from(n) + i64::from(r + ss)).rem_euclid(2),
            } as u8;
            for ms in comb(&parity_range(2, h, 0), m) {
                let mut v = deltas(&ms, 1);
                if n > m {
                    v.push(s(triv, 2 * (n - m) - 1));
                    v.push(s(Rho::sgn(b2), 1));
                }
                emit(v);
            }
        }
        C9 { .. } | C10 { .. } => {
            for ms in comb(&odd_pos, n / 2) {
                let mut v = deltas(&ms, 2);
                if n % 2 == 1 {
                    v.push(s(triv, 1));
                    v.push(s(if matches!(x, C9 { .. }) { Rho::sgn(1) } else { triv }, 1));
                }
                emit(v);
            }
        }
        C11 { n, p } => {
            for ms in comb(&odd_pos, p) {
                let mut v = deltas(&ms, 2);
                v.push(s(triv, 2 * (n - 2 * p) + 1));
                emit(v);
            }
        }
        C12 { n } => {
            for ms in comb(&odd_pos, n) {
                let mut v = deltas(&ms, 2);
                v.push(s(triv, 1));
                emit(v);
            }
        }
        C13 { n } => {
            let lambdas: Vec<i64> = (1..=h / 2).rev().collect();
            for ls in comb(&lambdas, n) {
                if ls.iter().enumerate().all(|(i, l)| (l - (i as i64 + 1)).rem_euclid(2) == 0) {
                    let mut v: Vec<ArthurSummand> = ls.iter().map(|&l| s(Rho::delta(2 * l), 1)).collect();
                    v.push(s(Rho::sgn((n % 2) as u8), 1));
                    emit(v);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorizeError {
    TargetMismatch(String),
    PartitionMismatch { expected: Vec<u32>, got: Vec<u32> },
    TailMismatch(String),
    ParityMismatch(String),
    NotDiscrete(String),
}

impl fmt::Display for FactorizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorizeError::TargetMismatch(s) => write!(f, "target mismatch: {s}"),
            FactorizeError::PartitionMismatch { expected, got } => {
                write!(f, "SL(2) partition {got:?} is not the principal partition {expected:?}")
            }
            FactorizeError::TailMismatch(s) => write!(f, "tail mismatch: {s}"),
            FactorizeError::ParityMismatch(s) => write!(f, "parity mismatch: {s}"),
            FactorizeError::NotDiscrete(s) => write!(f, "phi_d not discrete: {s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub phi_d: Vec<Rho>,
    pub phi: PhiDescriptor,
}

fn head_parity_ok(x: &SymmetricSpace, rho: &Rho) -> bool {
    use SymmetricSpace::*;
    let n = i64::from(x.n());
    let odd = |m: i64| m.rem_euclid(2) == 1;
    match (*x, *rho) {
        (C1 { .. } | C4 { .. } | C7 { .. } | C9 { .. } | C10 { .. } | C11 { .. } | C12 { .. }, Rho::Weil(WeilRep::TwoDim(m))) => odd(m),
        (C3 { .. }, Rho::Weil(WeilRep::TwoDim(m))) => (m - (n - 1)).rem_euclid(2) == 0,
        (C8 { .. } | C13 { .. }, Rho::Weil(WeilRep::TwoDim(m))) => !odd(m),
        (C2 { .. }, Rho::Char(WeilCChar(m))) => (m - (n - 1)).rem_euclid(2) == 0,
        (C5 { .. } | C6 { .. }, Rho::Char(WeilCChar(m))) => !odd(m),
        _ => false,
    }
}

/// Whether φ_d is a discrete parameter for the source dual group.
pub fn is_discrete_for(source: &SVDualDescriptor, phi_d: &[Rho]) -> bool {
    let distinct = phi_d.iter().all_unique();
    let typed = phi_d.iter().all(|rho| match (source.family, rho) {
        (LieAlg::Gl(k), Rho::Char(WeilCChar(m))) => (m - (i64::from(k) - 1)).rem_euclid(2) == 0,
        (LieAlg::Sp(_), Rho::Weil(w @ WeilRep::TwoDim(_))) if source.variant.is_none() => {
            w.self_duality() == SelfDuality::Symplectic
        }
        (LieAlg::Sp(_) | LieAlg::SoEven(_), Rho::Weil(w @ WeilRep::TwoDim(_))) => w.self_duality() == SelfDuality::Orthogonal,
        (LieAlg::SoOdd(_), Rho::Weil(w @ (WeilRep::TwoDim(_) | WeilRep::OneDim(_)))) => w.self_duality() == SelfDuality::Orthogonal,
        _ => false,
    });
    distinct && typed
}

fn multiset_remove(pool: &mut Vec<ArthurSummand>, item: &ArthurSummand) -> bool {
    match pool.iter().position(|s| s == item) {
        Some(i) => {
            pool.remove(i);
            true
        }
        None => false,
    }
}

pub fn factorize(psi: &ArthurParameter, x: &SymmetricSpace, opts: &Options) -> std::result::Result<Factorization, FactorizeError> {
    let target = x.lgroup();
    if psi.target != target {
        return Err(FactorizeError::TargetMismatch(format!("{} vs {}", psi.target, target)));
    }
    let expected = principal_partition(&dual_data(x).l_check, target)
        .map_err(|e| FactorizeError::TargetMismatch(e.to_string()))?
        .parts();
    let got = sl2_partition(psi);
    if got != expected {
        return Err(FactorizeError::PartitionMismatch { expected, got });
    }
    let phi = phi_descriptor(x, opts);
    let mut pool = psi.summands.clone();
    for t in &phi.tail {
        if !multiset_remove(&mut pool, t) {
            return Err(FactorizeError::TailMismatch(format!("missing {t}")));
        }
    }
    let mut phi_d = Vec::new();
    let (ones, heads): (Vec<ArthurSummand>, Vec<ArthurSummand>) =
        pool.into_iter().partition(|s| matches!(s.rho, Rho::Weil(WeilRep::OneDim(_))) || s.rho == Rho::chi(0) && phi.head_rule == HeadRule::SplitPairs);
    match phi.sgn_shift {
        Some(shift) => {
            let [one] = ones.as_slice() else {
                return Err(FactorizeError::TailMismatch(format!("expected one sgn^b xR[1], found {}", ones.len())));
            };
            let Rho::Weil(WeilRep::OneDim(b)) = one.rho else {
                return Err(FactorizeError::TailMismatch(format!("unexpected {one}")));
            };
            if one.a != 1 {
                return Err(FactorizeError::TailMismatch(format!("unexpected {one}")));
            }
            let bd = (b + 2 - shift) % 2;
            // φ_d lands in SO(2k+1): det = sgn^{k + b_d} must be trivial
            let k = heads.len() as u8;
            if (k + bd) % 2 != 0 {
                return Err(FactorizeError::TailMismatch(format!("{one} is sgn-twisted")));
            }
            phi_d.push(Rho::sgn(bd));
        }
        None => {
            if let Some(one) = ones.first() {
                return Err(FactorizeError::TailMismatch(format!("unexpected {one}")));
            }
        }
    }
    let mut heads_d = Vec::new();
    match phi.head_rule {
        HeadRule::SplitPairs => {
            let mut pool = heads.clone();
            while let Some(h) = pool.first().copied() {
                let Rho::Char(WeilCChar(mm)) = h.rho else {
                    return Err(FactorizeError::ParityMismatch(format!("{h} is not a character")));
                };
                if mm <= 0 || h.a != phi.head_a {
                    return Err(FactorizeError::ParityMismatch(format!("{h} is not paired with its opposite")));
                }
                pool.remove(0);
                let partner = ArthurSummand::new(Rho::chi(-mm), h.a);
                if !multiset_remove(&mut pool, &partner) {
                    return Err(FactorizeError::ParityMismatch(format!("{h} is not paired with its opposite")));
                }
                heads_d.push(Rho::delta(mm));
            }
        }
        HeadRule::ShiftChar(k) => {
            for h in &heads {
                let Rho::Char(WeilCChar(mm)) = h.rho else {
                    return Err(FactorizeError::ParityMismatch(format!("{h} is not a character")));
                };
                if !head_parity_ok(x, &h.rho) {
                    return Err(FactorizeError::ParityMismatch(format!("{h}: m must be even")));
                }
                heads_d.push(Rho::chi(mm - k));
            }
        }
        HeadRule::Identity => heads_d.extend(heads.iter().map(|h| h.rho)),
    }
    for h in &heads {
        if h.a != phi.head_a {
            return Err(FactorizeError::PartitionMismatch { expected: expected.clone(), got: got.clone() });
        }
    }
    for rho in &heads_d {
        let check = match (phi.head_rule, rho) {
            (HeadRule::ShiftChar(_), _) => true,
            (HeadRule::SplitPairs, Rho::Weil(WeilRep::TwoDim(m))) => head_parity_ok(x, &Rho::delta(*m)),
            _ => head_parity_ok(x, rho),
        };
        if !check {
            return Err(FactorizeError::ParityMismatch(format!("{rho} has the wrong parity for case {}", x.case_id())));
        }
    }
    let mut all = heads_d;
    all.extend(phi_d);
    if !is_discrete_for(&phi.source, &all) {
        return Err(FactorizeError::NotDiscrete(all.iter().map(ToString::to_string).join(" + ")));
    }
    let back = recompose(&phi, &all, target);
    let mut lhs = back.summands.clone();
    let mut rhs = psi.summands.clone();
    lhs.sort_by(crate::arthur::canonical_cmp);
    rhs.sort_by(crate::arthur::canonical_cmp);
    if lhs != rhs {
        return Err(FactorizeError::NotDiscrete(format!("recomposition gives {back}")));
    }
    Ok(Factorization { phi_d: all, phi })
}

/// Serializable factorization report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationReport {
    pub space: SymmetricSpace,
    pub psi: String,
    pub phi_d: Vec<String>,
    pub variant: String,
    pub verdict: bool,
    pub mismatch_reason: Option<String>,
}

pub fn factorization_report(psi: &ArthurParameter, x: &SymmetricSpace, opts: &Options) -> FactorizationReport {
    let res = factorize(psi, x, opts);
    let variant = sv_dual(x, opts.case3_variant).to_string();
    match res {
        Ok(f) => FactorizationReport {
            space: *x,
            psi: psi.to_string(),
            phi_d: f.phi_d.iter().map(ToString::to_string).collect(),
            variant,
            verdict: true,
            mismatch_reason: None,
        },
        Err(e) => FactorizationReport {
            space: *x,
            psi: psi.to_string(),
            phi_d: vec![],
            variant,
            verdict: false,
            mismatch_reason: Some(e.to_string()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{dual_lgroup, ClassicalGroup};

    fn lg(g: ClassicalGroup) -> LGroupDescriptor {
        dual_lgroup(g).unwrap()
    }

    #[test]
    fn partition_examples() {
        // (gl1)^m x so(2(n-m)) in SO(2n), n=4, m=1
        let levi = LeviDual { gl: vec![1], tail: Some(LieAlg::SoEven(3)) };
        let p = principal_partition(&levi, lg(ClassicalGroup::SpecialOrthogonal(4, 4))).unwrap();
        assert_eq!(p.parts(), vec![5, 1, 1, 1]);
        let levi = LeviDual { gl: vec![2, 2], tail: None };
        let p = principal_partition(&levi, lg(ClassicalGroup::SpecialOrthogonal(4, 4))).unwrap();
        assert_eq!(p.parts(), vec![2, 2, 2, 2]);
        let levi = LeviDual { gl: vec![1, 1, 1, 1], tail: Some(LieAlg::Gl(3)) };
        let p = principal_partition(&levi, lg(ClassicalGroup::GeneralLinearReal(7))).unwrap();
        assert_eq!(p.parts(), vec![3, 1, 1, 1, 1]);
    }

    #[test]
    fn commutant_examples() {
        // Sp(2n), partition (2(n-m), 1^{2m}), n=3, m=1
        let t = lg(ClassicalGroup::SpecialOrthogonal(4, 3));
        let c = commutant(t, &PartitionWithMult::from_parts(&[4, 1, 1], t)).unwrap();
        assert_eq!(c.factors, vec![CFactor::Sp(2), CFactor::O(1)]);
        assert_eq!(c.extra, Extra::Pm1);
        let t = lg(ClassicalGroup::SpecialOrthogonal(4, 4));
        let c = commutant(t, &PartitionWithMult::from_parts(&[2, 2, 2, 2], t)).unwrap();
        assert_eq!(c.factors, vec![CFactor::Sp(4)]);
        // SO(2n+1), (2n-4p+1, 2^{2p}), n=3, p=1
        let t = lg(ClassicalGroup::SymplecticReal(3));
        let c = commutant(t, &PartitionWithMult::from_parts(&[3, 2, 2], t)).unwrap();
        assert_eq!(c.factors, vec![CFactor::Sp(2), CFactor::O(1)]);
        assert!(c.det_condition);
        assert_eq!(c.extra, Extra::None);
    }

    #[test]
    fn commutant_rejects_bad_parity() {
        let t = lg(ClassicalGroup::SymplecticReal(1));
        assert!(commutant(t, &PartitionWithMult::from_parts(&[2, 1], t)).is_err());
    }

    #[test]
    fn sv_dual_examples() {
        let c2 = SymmetricSpace::C2 { p: 2, q: 1 };
        assert_eq!(sv_dual(&c2, Case3Variant::ESpSemidirect).family, LieAlg::Gl(3));
        for (p, q) in [(2, 1), (2, 2), (4, 1)] {
            let x = SymmetricSpace::C9 { p, q };
            assert_eq!(sv_dual(&x, Case3Variant::ESpSemidirect).family, LieAlg::Sp((p + q) / 2));
        }
        let c3 = SymmetricSpace::C3 { r: 1, s: 0, rp: 1, sp: 1 };
        assert_eq!(sv_dual_variants(&c3).len(), 2);
    }

    #[test]
    fn case7_generation_example() {
        // SO(3,2)/SO(1,0)xSO(2,2): (r,s)=(1,0), n=2
        let x = SymmetricSpace::C7 { r: 1, s: 0, rp: 2, sp: 2 };
        let got: Vec<String> = generate_ds_parameters(&x, 3, &Options::default()).iter().map(ToString::to_string).collect();
        assert_eq!(got, vec!["d(1)xR[1] + sgn^0 xR[2]", "d(3)xR[1] + sgn^0 xR[2]"]);
    }

    #[test]
    fn case1_factorizes() {
        let x = SymmetricSpace::C1 { n: 5, p: 2 };
        let psi = ArthurParameter::parse(x.lgroup(), "d(3)xR[1] + d(1)xR[1] + Triv xR[1]").unwrap();
        let f = factorize(&psi, &x, &Options::default()).unwrap();
        assert_eq!(f.phi_d, vec![Rho::delta(3), Rho::delta(1)]);
        assert_eq!(f.phi.source.family, LieAlg::Sp(2));
    }

    #[test]
    fn case7_sgn_tail_rejected() {
        let x = SymmetricSpace::C7 { r: 1, s: 0, rp: 2, sp: 2 };
        let psi = ArthurParameter::parse(x.lgroup(), "d(1)xR[1] + sgn^1 xR[2]").unwrap();
        assert!(matches!(factorize(&psi, &x, &Options::default()), Err(FactorizeError::TailMismatch(_))));
    }

    #[test]
    fn case3_odd_gives_orthogonal_phi_d() {
        let x = SymmetricSpace::C3 { r: 1, s: 0, rp: 1, sp: 1 };
        let psi = ArthurParameter::parse(x.lgroup(), "chi(2)xR[1] + chi(-2)xR[1] + chi(0)xR[1]").unwrap();
        let f = factorize(&psi, &x, &Options::default()).unwrap();
        assert_eq!(f.phi_d, vec![Rho::delta(2)]);
        assert_eq!(WeilRep::TwoDim(2).self_duality(), SelfDuality::Orthogonal);
        assert_eq!(f.phi.source.variant, Some(Case3Variant::ESpSemidirect));
        let so = Options { case3_variant: Case3Variant::SOEvenSemidirect, ..Options::default() };
        assert_eq!(factorize(&psi, &x, &so).unwrap().phi.source.family, LieAlg::SoEven(1));
    }

    #[test]
    fn case5_odd_m_rejected() {
        let x = SymmetricSpace::C5 { p: 1, q: 0 };
        let gen = generate_ds_parameters(&x, 6, &Options::default());
        assert!(gen.iter().all(|psi| psi.summands.iter().all(|s| matches!(s.rho, Rho::Char(WeilCChar(m)) if m % 2 == 0))));
        let bad = ArthurParameter::parse(x.lgroup(), "chi(3)xR[2]").unwrap();
        assert!(factorize(&bad, &x, &Options::default()).is_err());
    }

    #[test]
    fn case8_tail_rules() {
        // SO(4,0)/SO(1,0)xSO(3,0): r+s = 1 odd, the rules disagree
        let x = SymmetricSpace::C8 { r: 1, s: 0, rp: 3, sp: 0 };
        let lf = generate_ds_parameters(&x, 2, &Options::default());
        assert_eq!(lf[0].to_string(), "d(2)xR[1] + sgn^0 xR[1] + sgn^1 xR[1]");
        assert!(crate::arthur::validate_good_parity(&lf[0]).is_ok());
        let vb = Options { eta_rule: EtaRule::Verbatim, ..Options::default() };
        let v = generate_ds_parameters(&x, 2, &vb);
        assert_eq!(v[0].to_string(), "d(2)xR[1] + sgn^0 xR[1] + sgn^0 xR[1]");
        assert!(crate::arthur::validate_good_parity(&v[0]).is_err());
    }
}
