//! Which members of an Arthur packet are discrete series of a given symmetric space.
//!
//! Characters of A(ψ) ≅ (Z/2)^R are sign vectors indexed by the distinct summands of ψ in
//! canonical order. Head slots are the summands produced by φ_d; the remaining slots are
//! the constant tail of the case shape.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::arthur::{dedup_slots, ArthurParameter, ArthurSummand};
use crate::error::{Error, Result};
use crate::factorization::{factorize, phi_descriptor, Options};
use crate::symspaces::SymmetricSpace;
use crate::weil::{Rho, WeilRep};

pub const MAX_ENUM_RANK: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EpsCharacter {
    pub signs: Vec<i8>,
}

impl EpsCharacter {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::Parse(format!("signs must be +1 or -1: {signs:?}")));
        }
        Ok(EpsCharacter { signs })
    }

    pub fn trivial(len: usize) -> Self {
        EpsCharacter { signs: vec![1; len] }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn negated(&self) -> Self {
        EpsCharacter { signs: self.signs.iter().map(|s| -s).collect() }
    }

    /// All of {±1}^len, lexicographic with −1 < +1.
    pub fn all(len: u32) -> impl Iterator<Item = EpsCharacter> {
        (0u64..1 << len).map(move |bits| EpsCharacter {
            signs: (0..len).map(|i| if bits >> (len - 1 - i) & 1 == 1 { 1 } else { -1 }).collect(),
        })
    }
}

impl fmt::Display for EpsCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.signs.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect();
        write!(f, "({s})")
    }
}

impl FromStr for EpsCharacter {
    type Err = Error;

    /// Accepts "+-+", "(+,-,+)" or "1,-1,1".
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        let signs = if t.contains(',') {
            t.split(',')
                .map(|x| match x.trim() {
                    "+" | "+1" | "1" => Ok(1),
                    "-" | "-1" => Ok(-1),
                    other => Err(Error::Parse(format!("bad sign {other:?}"))),
                })
                .collect::<Result<Vec<i8>>>()?
        } else {
            t.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    other => Err(Error::Parse(format!("bad sign {other:?}"))),
                })
                .collect::<Result<Vec<i8>>>()?
        };
        EpsCharacter::new(signs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PacketQuery {
    pub space: SymmetricSpace,
    pub psi: ArthurParameter,
    pub eps: EpsCharacter,
}

/// Order in which the χ_{±m} heads of cases 3 and 4 are numbered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum PairIndexing {
    /// (χ_{m_1}, χ_{−m_1}, χ_{m_2}, χ_{−m_2}, …)
    #[default]
    Adjacent,
    /// (χ_{m_1}, …, χ_{m_k}, χ_{−m_1}, …, χ_{−m_k})
    Blocked,
}

/// Reference pure inner form; `Swapped` exchanges the baselines (−1)^{i−1} and (−1)^i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Normalization {
    #[default]
    Reference,
    Swapped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SpectrumOptions {
    pub indexing: PairIndexing,
    pub normalization: Normalization,
}

impl SpectrumOptions {
    fn baseline(&self, i: usize) -> i8 {
        // i is 1-based
        let b = if i % 2 == 1 { 1 } else { -1 };
        match self.normalization {
            Normalization::Reference => b,
            Normalization::Swapped => -b,
        }
    }
}

/// Distinct summand slots of ψ and the positions of the head slots among them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotLayout {
    pub slots: Vec<ArthurSummand>,
    pub heads: Vec<usize>,
}

impl SlotLayout {
    pub fn rank(&self) -> u32 {
        self.slots.len() as u32
    }

    pub fn tails(&self) -> Vec<usize> {
        (0..self.slots.len()).filter(|i| !self.heads.contains(i)).collect()
    }
}

/// Checks that ψ has the shape of X and splits its slots into heads and tail.
pub fn slot_layout(x: &SymmetricSpace, psi: &ArthurParameter) -> Result<SlotLayout> {
    factorize(psi, x, &Options::default()).map_err(|e| Error::InvalidParameter(format!("{psi} for {}: {e}", x.spec())))?;
    let phi = phi_descriptor(x, &Options::default());
    let mut sorted = psi.clone();
    sorted.summands.sort_by(crate::arthur::canonical_cmp);
    let (slots, _) = dedup_slots(&sorted);
    let heads = slots
        .iter()
        .enumerate()
        .filter(|(_, s)| !phi.tail.contains(s) && !matches!(s.rho, Rho::Weil(WeilRep::OneDim(_))))
        .map(|(i, _)| i)
        .collect();
    Ok(SlotLayout { slots, heads })
}

/// Which proposition decides membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Criterion {
    /// Match counts 2r/2s and pair products (−1)^{p+q−1}.
    PairsMixed,
    /// Match count n and pair products 1.
    PairsEqual,
    /// Match counts r and s.
    Matches,
    /// ε_i = −1 on every head slot.
    HeadsMinus,
    /// ε trivial.
    Trivial,
}

impl Criterion {
    pub fn id(&self) -> &'static str {
        match self {
            Criterion::PairsMixed => "pairs-mixed",
            Criterion::PairsEqual => "pairs-equal",
            Criterion::Matches => "matches",
            Criterion::HeadsMinus => "heads-minus",
            Criterion::Trivial => "trivial",
        }
    }
}

pub fn criterion(x: &SymmetricSpace) -> Result<Criterion> {
    use SymmetricSpace::*;
    Ok(match x {
        C1 { .. } | C2 { .. } | C13 { .. } => return Err(Error::WrongCase(x.case_id())),
        C3 { .. } => Criterion::PairsMixed,
        C4 { .. } => Criterion::PairsEqual,
        C7 { .. } | C8 { .. } => Criterion::Matches,
        C5 { .. } | C9 { .. } | C12 { .. } => Criterion::HeadsMinus,
        C6 { .. } | C10 { .. } | C11 { .. } => Criterion::Trivial,
    })
}

fn reorder_pairs(heads: &[i8], indexing: PairIndexing) -> Vec<i8> {
    match indexing {
        PairIndexing::Adjacent => heads.to_vec(),
        PairIndexing::Blocked => {
            let pos = heads.iter().step_by(2);
            let neg = heads.iter().skip(1).step_by(2);
            pos.chain(neg).copied().collect()
        }
    }
}

fn eval(x: &SymmetricSpace, layout: &SlotLayout, eps: &EpsCharacter, opts: &SpectrumOptions) -> Result<bool> {
    let crit = criterion(x)?;
    if eps.len() != layout.slots.len() {
        return Err(Error::InvalidParameter(format!(
            "character {eps} has {} signs, A(psi) has rank {}",
            eps.len(),
            layout.slots.len()
        )));
    }
    let heads: Vec<i8> = layout.heads.iter().map(|&i| eps.signs[i]).collect();
    let matches = |h: &[i8]| h.iter().enumerate().filter(|(i, &e)| e == opts.baseline(i + 1)).count() as u32;
    let pair_products = |h: &[i8], want: i8| h.chunks(2).all(|c| c.len() == 2 && c[0] * c[1] == want);
    Ok(match (crit, *x) {
        (Criterion::PairsMixed, SymmetricSpace::C3 { r, s, rp, sp }) => {
            let h = reorder_pairs(&heads, opts.indexing);
            let want = if (r + s + rp + sp) % 2 == 0 { -1 } else { 1 };
            matches(&h) == 2 * r && h.len() as u32 - matches(&h) == 2 * s && pair_products(&h, want)
        }
        (Criterion::PairsEqual, SymmetricSpace::C4 { n }) => {
            let h = reorder_pairs(&heads, opts.indexing);
            matches(&h) == n && pair_products(&h, 1)
        }
        (Criterion::Matches, SymmetricSpace::C7 { r, s, .. } | SymmetricSpace::C8 { r, s, .. }) => {
            matches(&heads) == r && heads.len() as u32 - matches(&heads) == s
        }
        (Criterion::HeadsMinus, _) => heads.iter().all(|&e| e == -1),
        (Criterion::Trivial, _) => eps.signs.iter().all(|&e| e == 1),
        _ => unreachable!("criterion table covers every case"),
    })
}

/// Tail slots a criterion leaves free.
pub fn free_slots(x: &SymmetricSpace, layout: &SlotLayout) -> Result<Vec<usize>> {
    Ok(match criterion(x)? {
        Criterion::Trivial => vec![],
        _ => layout.tails(),
    })
}

pub fn eps_valid(q: &PacketQuery, opts: &SpectrumOptions) -> Result<bool> {
    criterion(&q.space)?;
    let layout = slot_layout(&q.space, &q.psi)?;
    eval(&q.space, &layout, &q.eps, opts)
}

/// Accepted characters with free tail slots pinned to +1, in lexicographic order.
pub fn enumerate_eps(x: &SymmetricSpace, psi: &ArthurParameter, opts: &SpectrumOptions) -> Result<Vec<EpsCharacter>> {
    criterion(x)?;
    let layout = slot_layout(x, psi)?;
    if layout.rank() > MAX_ENUM_RANK {
        return Err(Error::RankTooLarge(layout.rank()));
    }
    let free = free_slots(x, &layout)?;
    let mut out = Vec::new();
    for eps in EpsCharacter::all(layout.rank()) {
        if free.iter().any(|&i| eps.signs[i] != 1) {
            continue;
        }
        if eval(x, &layout, &eps, opts)? {
            out.push(eps);
        }
    }
    Ok(out)
}

/// The unique candidate whose criterion accepts (ψ, ε).
pub fn disjoint_owner(
    psi: &ArthurParameter,
    eps: &EpsCharacter,
    candidates: &[SymmetricSpace],
    opts: &SpectrumOptions,
) -> Result<Option<SymmetricSpace>> {
    let mut owners = Vec::new();
    for x in candidates {
        let layout = slot_layout(x, psi)?;
        if eval(x, &layout, eps, opts)? {
            owners.push(*x);
        }
    }
    match owners.as_slice() {
        [] => Ok(None),
        [one] => Ok(Some(*one)),
        many => Err(Error::MultipleOwners(many.iter().map(|x| x.spec()).collect::<Vec<_>>().join(", "))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub space: SymmetricSpace,
    pub psi: String,
    pub eps: EpsCharacter,
    pub verdict: bool,
    pub criterion_id: String,
}

/// One verdict per character of A(ψ), lexicographic in the signs.
pub fn packet_verdicts(x: &SymmetricSpace, psi: &ArthurParameter, opts: &SpectrumOptions) -> Result<Vec<Verdict>> {
    let crit = criterion(x)?;
    let layout = slot_layout(x, psi)?;
    if layout.rank() > MAX_ENUM_RANK {
        return Err(Error::RankTooLarge(layout.rank()));
    }
    EpsCharacter::all(layout.rank())
        .map(|eps| {
            let verdict = eval(x, &layout, &eps, opts)?;
            Ok(Verdict { space: *x, psi: psi.to_string(), eps, verdict, criterion_id: crit.id().to_string() })
        })
        .collect()
}

/// Number of accepted characters for case 3 against the count S_r × S_s \ S_{r+s}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingReport {
    pub space: SymmetricSpace,
    pub psi: String,
    pub verbatim_count: u64,
    pub expected_count: u64,
    pub agrees: bool,
    pub note: Option<String>,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn case3_counting(x: &SymmetricSpace, psi: &ArthurParameter, opts: &SpectrumOptions) -> Result<CountingReport> {
    let SymmetricSpace::C3 { r, s, rp, sp } = *x else {
        return Err(Error::InvalidParameter(format!("{} is not case 3", x.spec())));
    };
    let verbatim = enumerate_eps(x, psi, opts)?.len() as u64;
    let expected = binomial(u64::from(r + s), u64::from(r));
    let agrees = verbatim == expected;
    let note = (!agrees).then(|| {
        format!(
            "p+q = {} odd: pair products force equal signs, so the match count is r+s; \
             the criterion gives {verbatim}, the coset count gives {expected}",
            r + s + rp + sp
        )
    });
    Ok(CountingReport { space: *x, psi: psi.to_string(), verbatim_count: verbatim, expected_count: expected, agrees, note })
}

/// Regular infinitesimal character in the usual coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InfCharTuple {
    pub lambda: Vec<Rational64>,
}

impl InfCharTuple {
    pub fn new(lambda: Vec<Rational64>) -> Result<Self> {
        if lambda.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Irregular(format!("{lambda:?} is not strictly decreasing")));
        }
        Ok(InfCharTuple { lambda })
    }

    pub fn from_ints(lambda: &[i64]) -> Result<Self> {
        Self::new(lambda.iter().map(|&l| Rational64::from_integer(l)).collect())
    }

    pub fn from_halves(doubled: &[i64]) -> Result<Self> {
        Self::new(doubled.iter().map(|&l| Rational64::new(l, 2)).collect())
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }
}

impl fmt::Display for InfCharTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lambda.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for InfCharTuple {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        let lambda = t
            .split(',')
            .map(|x| x.trim().parse::<Rational64>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        InfCharTuple::new(lambda)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case2Variant {
    /// U(p,q)/O(p,q).
    OFull,
    /// U(p,q)/SO(p,q).
    SOOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinKType {
    pub p: u32,
    /// λ − ρ.
    pub mu_tilde: Vec<i64>,
    pub mu: Vec<i64>,
    /// Highest weight for U(p) × U(n−p): matching indices, then the others.
    pub highest_weight: (Vec<i64>, Vec<i64>),
}

fn case2_check(lambda: &InfCharTuple, eps: &EpsCharacter) -> Result<()> {
    let n = lambda.n();
    if eps.len() != n {
        return Err(Error::InvalidParameter(format!("character {eps} has length {} for n = {n}", eps.len())));
    }
    let integral = lambda.lambda.iter().all(|l| l.is_integer());
    let half = lambda.lambda.iter().all(|l| (*l * 2).is_integer() && !l.is_integer());
    let ok = if n % 2 == 1 { integral } else { half };
    if !ok {
        return Err(Error::Irregular(format!("{lambda} for n = {n}")));
    }
    Ok(())
}

fn matching(eps: &EpsCharacter) -> Vec<bool> {
    eps.signs.iter().enumerate().map(|(i, &e)| e == if i % 2 == 0 { 1 } else { -1 }).collect()
}

pub fn case2_min_ktype(lambda: &InfCharTuple, eps: &EpsCharacter) -> Result<MinKType> {
    case2_check(lambda, eps)?;
    let n = lambda.n();
    let matched = matching(eps);
    let p = matched.iter().filter(|&&m| m).count() as u32;
    let mu_tilde: Vec<i64> = lambda
        .lambda
        .iter()
        .enumerate()
        .map(|(i, l)| (*l - Rational64::new(n as i64 + 1, 2) + (i as i64 + 1)).to_integer())
        .collect();
    let mu: Vec<i64> = (0..n)
        .map(|i| {
            let (mut below, mut above) = (0, 0);
            for j in 0..n {
                if matched[i] != matched[j] {
                    if lambda.lambda[j] < lambda.lambda[i] {
                        below += 1;
                    } else {
                        above += 1;
                    }
                }
            }
            mu_tilde[i] + below - above
        })
        .collect();
    let hw = (
        (0..n).filter(|&i| matched[i]).map(|i| mu[i]).collect(),
        (0..n).filter(|&i| !matched[i]).map(|i| mu[i]).collect(),
    );
    Ok(MinKType { p, mu_tilde, mu, highest_weight: hw })
}

pub fn case2_is_ds(lambda: &InfCharTuple, eps: &EpsCharacter, variant: Case2Variant) -> Result<bool> {
    let k = case2_min_ktype(lambda, eps)?;
    let n = lambda.n();
    let par = |x: i64| x.rem_euclid(2);
    let matched = matching(eps);
    let so_ok = if n % 2 == 0 {
        k.mu_tilde.iter().all(|&x| par(x) == par(k.mu_tilde[0]))
    } else {
        (0..2).any(|w| (0..n).all(|i| par(k.mu_tilde[i]) == if matched[i] { w } else { 1 - w }))
    };
    Ok(match variant {
        Case2Variant::SOOnly => so_ok,
        Case2Variant::OFull if n % 2 == 0 => so_ok && par(k.mu_tilde[0]) == i64::from(k.p % 2),
        Case2Variant::OFull => so_ok && k.mu.iter().all(|&x| par(x) == 0),
    })
}

/// SO-quotient: (p, ε) and (n−p, −ε) give the same space; keep the member whose
/// matching μ̃ are even.
pub fn case2_so_quotient_accepting(lambda: &InfCharTuple) -> Result<Vec<(u32, EpsCharacter)>> {
    let n = lambda.n() as u32;
    let mut out = Vec::new();
    for eps in EpsCharacter::all(n) {
        if !case2_is_ds(lambda, &eps, Case2Variant::SOOnly)? {
            continue;
        }
        let k = case2_min_ktype(lambda, &eps)?;
        let matched = matching(&eps);
        let rep = n % 2 == 0 || (0..n as usize).all(|i| (k.mu_tilde[i].rem_euclid(2) == 0) == matched[i]);
        if rep {
            out.push((k.p, eps));
        }
    }
    Ok(out)
}

/// ε_i = (−1)^{λ_i + (n−1)/2} and p_0 = #{i : λ_i + (n+1)/2 − i even}, n odd.
pub fn case2_closed_form(lambda: &InfCharTuple) -> Result<(u32, EpsCharacter)> {
    let n = lambda.n() as i64;
    if n % 2 == 0 {
        return Err(Error::InvalidParameter("closed form needs n odd".into()));
    }
    case2_check(lambda, &EpsCharacter::trivial(n as usize))?;
    let ints: Vec<i64> = lambda.lambda.iter().map(|l| l.to_integer()).collect();
    let signs = ints.iter().map(|l| if (l + (n - 1) / 2).rem_euclid(2) == 0 { 1 } else { -1 }).collect();
    let p0 = ints.iter().enumerate().filter(|(i, l)| (*l + (n + 1) / 2 - (*i as i64 + 1)).rem_euclid(2) == 0).count();
    Ok((p0 as u32, EpsCharacter { signs }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case13Chi {
    Trivial,
    SgnDet,
}

fn case13_check(lambda: &InfCharTuple) -> Result<Vec<i64>> {
    if lambda.lambda.iter().any(|l| !l.is_integer() || *l <= Rational64::from_integer(0)) {
        return Err(Error::Irregular(format!("{lambda} must be positive integers")));
    }
    Ok(lambda.lambda.iter().map(|l| l.to_integer()).collect())
}

pub fn case13_is_ds(lambda: &InfCharTuple, chi: Case13Chi) -> Result<bool> {
    let l = case13_check(lambda)?;
    let shift = match chi {
        Case13Chi::Trivial => 0,
        Case13Chi::SgnDet => 1,
    };
    Ok(l.iter().enumerate().all(|(i, x)| (x - (i as i64 + 1) - shift).rem_euclid(2) == 0))
}

/// Per-member verdicts: each member has Harish-Chandra parameter s·λ for a sign vector s.
pub fn case13_root_oracle_members(lambda: &InfCharTuple, chi: Case13Chi) -> Result<Vec<bool>> {
    let l = case13_check(lambda)?;
    let n = l.len();
    let mut out = Vec::new();
    for s in EpsCharacter::all(n as u32) {
        // doubled coordinates throughout
        let hc: Vec<i64> = (0..n).map(|i| 2 * l[i] * i64::from(s.signs[i])).collect();
        let mut two_rho = vec![0i64; n];
        // ⋀^top(u∩p) restricted to {±1}^n: exponent of each ε_k mod 2
        let mut top = vec![0i64; n];
        let add = |coeffs: &[(usize, i64)], noncompact: bool, two_rho: &mut Vec<i64>, top: &mut Vec<i64>| {
            let pairing: i64 = coeffs.iter().map(|&(k, c)| c * hc[k]).sum();
            let sign = if pairing > 0 { 1 } else { -1 };
            for &(k, c) in coeffs {
                two_rho[k] += sign * c;
                if noncompact {
                    top[k] += sign * c;
                }
            }
        };
        for i in 0..n {
            add(&[(i, 2)], true, &mut two_rho, &mut top);
            for j in i + 1..n {
                add(&[(i, 1), (j, -1)], false, &mut two_rho, &mut top);
                add(&[(i, 1), (j, 1)], true, &mut two_rho, &mut top);
            }
        }
        // t = Λ − ρ_Λ
        let t: Vec<i64> = (0..n).map(|k| (hc[k] - two_rho[k]) / 2).collect();
        let target = match chi {
            Case13Chi::Trivial => 0,
            Case13Chi::SgnDet => 1,
        };
        out.push((0..n).all(|k| (t[k] + top[k]).rem_euclid(2) == target));
    }
    Ok(out)
}

/// Root-theoretic check of case 13: every member's character is trivial on L ∩ K ∩ H.
pub fn case13_root_oracle(lambda: &InfCharTuple, chi: Case13Chi) -> Result<bool> {
    Ok(case13_root_oracle_members(lambda, chi)?.iter().all(|&b| b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::generate_ds_parameters;

    fn q(space: SymmetricSpace, psi: &str, eps: &str) -> PacketQuery {
        PacketQuery { space, psi: ArthurParameter::parse(space.lgroup(), psi).unwrap(), eps: eps.parse().unwrap() }
    }

    #[test]
    fn case5_example() {
        let x = SymmetricSpace::C5 { p: 1, q: 1 };
        let o = SpectrumOptions::default();
        assert!(eps_valid(&q(x, "chi(2)xR[2] + chi(-2)xR[2]", "--"), &o).unwrap());
        assert!(!eps_valid(&q(x, "chi(2)xR[2] + chi(-2)xR[2]", "+-"), &o).unwrap());
    }

    #[test]
    fn case3_unique_character() {
        let x = SymmetricSpace::C3 { r: 1, s: 0, rp: 1, sp: 2 };
        let psi = ArthurParameter::parse(x.lgroup(), "chi(3)xR[1] + chi(-3)xR[1] + chi(0)xR[2]").unwrap();
        let got = enumerate_eps(&x, &psi, &SpectrumOptions::default()).unwrap();
        assert_eq!(got, vec!["+-+".parse().unwrap()]);
        let c = case3_counting(&x, &psi, &SpectrumOptions::default()).unwrap();
        assert!(c.agrees);
    }

    #[test]
    fn wrong_case_rejected() {
        let x = SymmetricSpace::C1 { n: 2, p: 1 };
        let e = eps_valid(&q(x, "d(1)xR[1]", "+"), &SpectrumOptions::default());
        assert_eq!(e, Err(Error::WrongCase(1)));
    }

    #[test]
    fn owners_on_u22() {
        let psi = "chi(2)xR[2] + chi(6)xR[2]";
        let c5 = SymmetricSpace::C5 { p: 1, q: 1 };
        let c6 = SymmetricSpace::C6 { n: 2 };
        let p = ArthurParameter::parse(c5.lgroup(), psi).unwrap();
        let o = SpectrumOptions::default();
        assert_eq!(disjoint_owner(&p, &"--".parse().unwrap(), &[c5, c6], &o).unwrap(), Some(c5));
        assert_eq!(disjoint_owner(&p, &"++".parse().unwrap(), &[c5, c6], &o).unwrap(), Some(c6));
        assert_eq!(disjoint_owner(&p, &"+-".parse().unwrap(), &[c5, c6], &o).unwrap(), None);
    }

    #[test]
    fn case11_single_character() {
        let x = SymmetricSpace::C11 { n: 3, p: 1 };
        for psi in generate_ds_parameters(&x, 5, &Options::default()) {
            assert_eq!(enumerate_eps(&x, &psi, &SpectrumOptions::default()).unwrap(), vec![EpsCharacter::trivial(2)]);
        }
    }

    #[test]
    fn min_ktype_example() {
        let l = InfCharTuple::from_ints(&[2, 1, -1]).unwrap();
        let k = case2_min_ktype(&l, &"-++".parse().unwrap()).unwrap();
        // only index 3 matches (+,−,+)
        assert_eq!(k.p, 1);
        assert_eq!(k.mu_tilde, vec![1, 1, 0]);
        // λ_i + (n+1)/2 − i has the same parities when n is odd
        let shifted = [3i64, 1, -2];
        assert!(k.mu_tilde.iter().zip(shifted).all(|(a, b)| (a - b) % 2 == 0));
    }

    #[test]
    fn rho_gives_zero_mu_tilde() {
        let l = InfCharTuple::from_halves(&[3, 1, -1, -3]).unwrap();
        for eps in EpsCharacter::all(4) {
            let k = case2_min_ktype(&l, &eps).unwrap();
            assert_eq!(k.mu_tilde, vec![0; 4]);
            assert!(case2_is_ds(&l, &eps, Case2Variant::SOOnly).unwrap());
            assert_eq!(case2_is_ds(&l, &eps, Case2Variant::OFull).unwrap(), k.p % 2 == 0);
        }
    }

    #[test]
    fn matching_baseline_has_no_corrections() {
        let l = InfCharTuple::from_ints(&[5, 2, 0, -3, -4]).unwrap();
        let k = case2_min_ktype(&l, &"+-+-+".parse().unwrap()).unwrap();
        assert_eq!(k.mu, k.mu_tilde);
    }

    #[test]
    fn irregular_rejected() {
        let l = InfCharTuple::from_halves(&[3, 1, -1]).unwrap();
        assert!(matches!(case2_min_ktype(&l, &"+++".parse().unwrap()), Err(Error::Irregular(_))));
        assert!(InfCharTuple::from_ints(&[1, 1]).is_err());
    }

    #[test]
    fn case13_examples() {
        let t = |v: &[i64]| InfCharTuple::from_ints(v).unwrap();
        assert!(case13_is_ds(&t(&[3, 2, 1]), Case13Chi::Trivial).unwrap());
        assert!(!case13_is_ds(&t(&[4, 2, 1]), Case13Chi::Trivial).unwrap());
        assert!(case13_is_ds(&t(&[2, 1]), Case13Chi::SgnDet).unwrap());
        for l in 1..10 {
            assert_eq!(case13_root_oracle(&t(&[l]), Case13Chi::Trivial).unwrap(), l % 2 == 1);
        }
    }

    #[test]
    fn eps_parse_forms() {
        let a: EpsCharacter = "+-+".parse().unwrap();
        let b: EpsCharacter = "(1,-1,+1)".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(+-+)");
        assert_eq!(EpsCharacter::all(2).map(|e| e.to_string()).collect::<Vec<_>>(), ["(--)", "(-+)", "(+-)", "(++)"]);
    }
}
