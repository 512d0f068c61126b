//! Exact matrices over Z[u^{1/2}, u^{-1/2}], u = z/z̄, and the explicit L-group embeddings.
//!
//! Exponents are stored doubled, so χ_m(z) = u^{m/2} is the monomial with key m.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Laurent polynomial in u^{1/2}; keys are doubled exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent(BTreeMap<i64, i64>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent(BTreeMap::new())
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// c·u^{e/2}
    pub fn monomial(c: i64, e: i64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, c);
        }
        Laurent(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// (coefficient, doubled exponent) when a single term.
    pub fn as_monomial(&self) -> Option<(i64, i64)> {
        match self.0.iter().collect::<Vec<_>>().as_slice() {
            [(e, c)] => Some((**c, **e)),
            _ => None,
        }
    }

    /// u ↦ u^{-1}
    pub fn bar(&self) -> Self {
        Laurent(self.0.iter().map(|(e, c)| (-e, *c)).collect())
    }

    /// Value at z = −1, where u^{1/2} = z/|z| = −1.
    pub fn at_minus_one(&self) -> i64 {
        self.0.iter().map(|(e, c)| if e.rem_euclid(2) == 0 { *c } else { -c }).sum()
    }

    fn clean(mut self) -> Self {
        self.0.retain(|_, c| *c != 0);
        self
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        let mut m = self.0.clone();
        for (e, c) in &o.0 {
            *m.entry(*e).or_insert(0) += c;
        }
        Laurent(m).clean()
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent(self.0.iter().map(|(e, c)| (*e, -c)).collect())
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        let mut m = BTreeMap::new();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &o.0 {
                *m.entry(e1 + e2).or_insert(0) += c1 * c2;
            }
        }
        Laurent(m).clean()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .map(|(e, c)| match e {
                0 => c.to_string(),
                e if e % 2 == 0 => format!("{c}u^{}", e / 2),
                e => format!("{c}u^({e}/2)"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    e: Vec<Laurent>,
}

impl ExactMatrix {
    pub fn zero(n: usize) -> Self {
        ExactMatrix { n, e: vec![Laurent::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, Laurent::constant(1));
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n, "square input");
            for (j, &c) in r.iter().enumerate() {
                m.set(i, j, Laurent::constant(c));
            }
        }
        m
    }

    /// Diagonal matrix with entries c_i u^{e_i/2}.
    pub fn diag(entries: &[(i64, i64)]) -> Self {
        let mut m = Self::zero(entries.len());
        for (i, &(c, e)) in entries.iter().enumerate() {
            m.set(i, i, Laurent::monomial(c, e));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Laurent {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Laurent) {
        self.e[i * self.n + j] = v;
    }

    pub fn scale(&self, c: i64) -> Self {
        let k = Laurent::constant(c);
        ExactMatrix { n: self.n, e: self.e.iter().map(|x| x * &k).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn bar(&self) -> Self {
        ExactMatrix { n: self.n, e: self.e.iter().map(Laurent::bar).collect() }
    }

    pub fn at_minus_one(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).at_minus_one()).collect()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Laurent> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    /// Inverse of a matrix with one invertible monomial ±u^k per row and column.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let mut m = Self::zero(self.n);
        let mut used = vec![false; self.n];
        for i in 0..self.n {
            let nz: Vec<usize> = (0..self.n).filter(|&j| !self.get(i, j).is_zero()).collect();
            let [j] = nz.as_slice() else { return None };
            let (c, e) = self.get(i, *j).as_monomial()?;
            if c.abs() != 1 || used[*j] {
                return None;
            }
            used[*j] = true;
            m.set(*j, i, Laurent::monomial(c, -e));
        }
        Some(m)
    }

    /// Block matrix from a grid of optional blocks with the given sizes.
    pub fn blocks(sizes: &[usize], grid: &[Vec<Option<ExactMatrix>>]) -> Self {
        let n: usize = sizes.iter().sum();
        let offs: Vec<usize> = sizes.iter().scan(0, |s, &x| {
            let o = *s;
            *s += x;
            Some(o)
        }).collect();
        let mut m = Self::zero(n);
        for (bi, row) in grid.iter().enumerate() {
            for (bj, blk) in row.iter().enumerate() {
                if let Some(b) = blk {
                    assert_eq!((b.n, b.n), (sizes[bi], sizes[bj]), "block shape");
                    for i in 0..b.n {
                        for j in 0..b.n {
                            m.set(offs[bi] + i, offs[bj] + j, b.get(i, j).clone());
                        }
                    }
                }
            }
        }
        m
    }

    /// Kronecker product h ⊗ g: the block matrix (h_ij g).
    pub fn kron(h: &ExactMatrix, g: &ExactMatrix) -> Self {
        let n = h.n * g.n;
        let mut m = Self::zero(n);
        for a in 0..h.n {
            for b in 0..h.n {
                for i in 0..g.n {
                    for j in 0..g.n {
                        m.set(a * g.n + i, b * g.n + j, h.get(a, b) * g.get(i, j));
                    }
                }
            }
        }
        m
    }

    /// First entry where the two matrices differ.
    pub fn first_difference(&self, o: &ExactMatrix) -> Option<String> {
        if self.n != o.n {
            return Some(format!("sizes {} and {}", self.n, o.n));
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) != o.get(i, j) {
                    return Some(format!("entry ({i},{j}): {} vs {}", self.get(i, j), o.get(i, j)));
                }
            }
        }
        None
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, o: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, o.n, "matrix sizes");
        let n = self.n;
        let mut m = ExactMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) + &(a * b);
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, o: &ExactMatrix) -> ExactMatrix {
        ExactMatrix { n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, o: &ExactMatrix) -> ExactMatrix {
        ExactMatrix { n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| a + &-b).collect() }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale(-1)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A matrix carried together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invertible {
    pub m: ExactMatrix,
    pub inv: ExactMatrix,
}

impl Invertible {
    pub fn monomial(m: ExactMatrix) -> Self {
        let inv = m.monomial_inverse().expect("monomial matrix");
        Invertible { m, inv }
    }

    /// I + c·E_ij, i ≠ j.
    pub fn elementary(n: usize, i: usize, j: usize, c: i64) -> Self {
        assert_ne!(i, j);
        let mut m = ExactMatrix::identity(n);
        let mut inv = ExactMatrix::identity(n);
        m.set(i, j, Laurent::constant(c));
        inv.set(i, j, Laurent::constant(-c));
        Invertible { m, inv }
    }

    pub fn compose(&self, o: &Invertible) -> Invertible {
        Invertible { m: &self.m * &o.m, inv: &o.inv * &self.inv }
    }

    pub fn transpose_inverse(&self) -> ExactMatrix {
        self.inv.transpose()
    }
}

/// Antidiagonal with 1, −1, 1, … from the top-right corner.
pub fn w_matrix(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zero(n);
    for i in 0..n {
        m.set(i, n - 1 - i, Laurent::constant(if i % 2 == 0 { 1 } else { -1 }));
    }
    m
}

fn anti_ones(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zero(n);
    for i in 0..n {
        m.set(i, n - 1 - i, Laurent::constant(1));
    }
    m
}

/// Diagonal 1, −1, 1, … of size n.
pub fn t_alt(n: usize) -> ExactMatrix {
    ExactMatrix::diag(&(0..n).map(|i| (if i % 2 == 0 { 1 } else { -1 }, 0)).collect::<Vec<_>>())
}

fn outer(n: usize, p: usize, tr: Option<ExactMatrix>, mid: Option<ExactMatrix>, bl: Option<ExactMatrix>) -> ExactMatrix {
    let sizes = [p, n - 2 * p, p];
    let grid = vec![vec![None, None, tr], vec![None, mid, None], vec![bl, None, None]];
    let (sizes, grid): (Vec<usize>, Vec<Vec<Option<ExactMatrix>>>) = {
        let keep: Vec<usize> = (0..3).filter(|&k| sizes[k] > 0).collect();
        (
            keep.iter().map(|&k| sizes[k]).collect(),
            keep.iter().map(|&a| keep.iter().map(|&b| grid[a][b].clone()).collect()).collect(),
        )
    };
    ExactMatrix::blocks(&sizes, &grid)
}

fn check_sizes(n: usize, p: usize) -> crate::error::Result<()> {
    if 2 * p > n {
        return Err(crate::error::Error::InvalidParameter(format!("need n >= 2p, got n={n}, p={p}")));
    }
    Ok(())
}

/// J_{n,p} = ((0,0,w_p),(0,I,0),(ᵗw_p,0,0)).
pub fn j_np(n: usize, p: usize) -> crate::error::Result<ExactMatrix> {
    check_sizes(n, p)?;
    Ok(outer(n, p, Some(w_matrix(p)), Some(ExactMatrix::identity(n - 2 * p)), Some(w_matrix(p).transpose())))
}

/// J'_{n,p}: the same recipe with the all-ones antidiagonal.
pub fn jprime_np(n: usize, p: usize) -> crate::error::Result<ExactMatrix> {
    check_sizes(n, p)?;
    Ok(outer(n, p, Some(anti_ones(p)), Some(ExactMatrix::identity(n - 2 * p)), Some(anti_ones(p))))
}

/// T_{2p}: alternating diagonal.
pub fn t_2p(p: usize) -> ExactMatrix {
    t_alt(2 * p)
}

/// T'_{2p} = ((0,0,w_p),(0,I,0),(−ᵗw_p,0,0)) in size n.
pub fn tprime_2p(n: usize, p: usize) -> crate::error::Result<ExactMatrix> {
    check_sizes(n, p)?;
    Ok(outer(n, p, Some(w_matrix(p)), Some(ExactMatrix::identity(n - 2 * p)), Some(-&w_matrix(p).transpose())))
}

/// g ↦ w_n ᵗg^{-1} w_n^{-1}
pub fn sigma(g: &Invertible) -> ExactMatrix {
    let n = g.m.size();
    let w = w_matrix(n);
    let winv = w.monomial_inverse().expect("w is monomial");
    &(&w * &g.transpose_inverse()) * &winv
}

/// (A, g) with g ∈ {1, j}; j acts through `sigma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisElement {
    pub matrix: Invertible,
    pub j: bool,
}

impl GaloisElement {
    pub fn plain(m: Invertible) -> Self {
        GaloisElement { matrix: m, j: false }
    }

    pub fn with_j(m: Invertible) -> Self {
        GaloisElement { matrix: m, j: true }
    }

    /// (A, j)(B, g) = (A σ(B), jg). The matrix part of j² = −1 ∈ W_C is returned separately.
    pub fn compose(&self, o: &GaloisElement) -> (ExactMatrix, bool, bool) {
        let b = if self.j { sigma(&o.matrix) } else { o.matrix.m.clone() };
        let both = self.j && o.j;
        (&self.matrix.m * &b, self.j ^ o.j, both)
    }
}

/// Embeds [[A,B],[C,D]] of size 2p into the outer blocks of size n; the middle is `mid`.
fn iota_outer(n: usize, p: usize, g: &ExactMatrix, mid: Option<ExactMatrix>) -> ExactMatrix {
    let mut m = ExactMatrix::zero(n);
    let pos = |k: usize| if k < p { k } else { n - 2 * p + k };
    for i in 0..2 * p {
        for j in 0..2 * p {
            m.set(pos(i), pos(j), g.get(i, j).clone());
        }
    }
    if let Some(mid) = mid {
        for i in 0..n - 2 * p {
            for j in 0..n - 2 * p {
                m.set(p + i, p + j, mid.get(i, j).clone());
            }
        }
    }
    m
}

fn elem(n: usize, i: usize, j: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zero(n);
    m.set(i, j, Laurent::constant(1));
    m
}

/// Basis of {X : ᵗX F + F X = 0} for an integer matrix F, via exact nullspace.
pub fn form_algebra_basis(f: &ExactMatrix) -> Vec<ExactMatrix> {
    let n = f.size();
    let fi: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| f.get(i, j).as_monomial().map_or(0, |(c, _)| c)).collect()).collect();
    // unknowns X_{kl}; equation (a,b): Σ_k X_{ka} F_{kb} + Σ_l F_{al} X_{lb} = 0
    let mut rows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut r = vec![0i64; n * n];
            for k in 0..n {
                r[k * n + a] += fi[k][b];
            }
            for l in 0..n {
                r[l * n + b] += fi[a][l];
            }
            rows.push(r);
        }
    }
    nullspace(rows, n * n)
        .into_iter()
        .map(|v| {
            let mut m = ExactMatrix::zero(n);
            for (k, c) in v.iter().enumerate() {
                m.set(k / n, k % n, Laurent::constant(*c));
            }
            m
        })
        .collect()
}

/// Integer nullspace basis by fraction-free elimination.
fn nullspace(mut rows: Vec<Vec<i64>>, cols: usize) -> Vec<Vec<i64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                for k in 0..cols {
                    rows[i][k] = rows[i][k] * a - rows[r][k] * b;
                }
                let g = rows[i].iter().fold(0i64, |g, &x| gcd(g, x));
                if g > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fcol| {
            // scale so every pivot solve is integral
            let l = pivots.iter().enumerate().fold(1i64, |l, (ri, _)| lcm(l, rows[ri][pivots[ri]].abs()));
            let mut v = vec![0i64; cols];
            v[fcol] = l;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[ri][fcol] * l / rows[ri][pc];
            }
            v
        })
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub params: String,
    pub ok: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    fn push(&mut self, id: &str, params: &str, diff: Option<String>) {
        self.results.push(CheckResult { id: id.to_string(), params: params.to_string(), ok: diff.is_none(), detail: diff });
    }

    fn same(&mut self, id: &str, params: &str, lhs: &ExactMatrix, rhs: &ExactMatrix) {
        self.push(id, params, lhs.first_difference(rhs));
    }

    fn truth(&mut self, id: &str, params: &str, ok: bool, why: impl FnOnce() -> String) {
        self.push(id, params, if ok { None } else { Some(why()) });
    }

    pub fn extend(&mut self, o: Report) {
        self.results.extend(o.results);
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.results.iter().filter(|r| !r.ok).collect()
    }

    pub fn all_ok(&self) -> bool {
        self.results.iter().all(|r| r.ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let status = if r.ok { "ok" } else { "FAIL" };
            write!(f, "{:<28} {:<22} {status}", r.id, r.params)?;
            if let Some(d) = &r.detail {
                write!(f, "  {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Generators of GL(n): elementary unipotents, one diagonal u-torus element per slot, and w_n.
fn gl_generators(n: usize) -> Vec<Invertible> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(Invertible::elementary(n, i, j, 1));
            }
        }
        let mut d: Vec<(i64, i64)> = vec![(1, 0); n];
        d[i] = (1, 2);
        out.push(Invertible::monomial(ExactMatrix::diag(&d)));
    }
    out.push(Invertible::monomial(w_matrix(n)));
    out
}

fn sl2_generators() -> Vec<(Invertible, [i64; 4])> {
    vec![
        (Invertible::elementary(2, 0, 1, 1), [1, 1, 0, 1]),
        (Invertible::elementary(2, 1, 0, 1), [1, 0, 1, 1]),
        (Invertible::monomial(ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]])), [0, 1, -1, 0]),
    ]
}

/// w_n properties and the block decomposition of w_n.
pub fn check_w(n: usize) -> Report {
    let mut r = Report::default();
    let params = format!("n={n}");
    let w = w_matrix(n);
    let wt = w.transpose();
    let winv = w.monomial_inverse().expect("monomial");
    r.same("w.transpose_inverse", &params, &wt, &winv);
    let sign = if n % 2 == 1 { 1 } else { -1 };
    r.same("w.transpose_sign", &params, &wt, &w.scale(sign));
    for p in 0..=n / 2 {
        let params = format!("n={n},p={p}");
        let mid = w_matrix(n - 2 * p).scale(if p % 2 == 0 { 1 } else { -1 });
        // the bottom-left block carries (−1)^{n−1} against ᵗw_p
        let bl = w_matrix(p).transpose().scale(sign);
        let blocks = outer(n, p, Some(w_matrix(p)), Some(mid), Some(bl));
        r.same(if n % 2 == 1 { "w.block_form" } else { "w.block_form_even" }, &params, &w, &blocks);
    }
    r
}

/// Prop 5.1 (i): w_{2p} antisymmetric, Sp(2p) as σ-fixed points, W_C pattern.
pub fn check_xi_sp(n: usize, p: usize, a: i64, b: i64) -> crate::error::Result<Report> {
    check_sizes(n, p)?;
    if (a - n as i64).rem_euclid(2) != 0 || b.rem_euclid(2) != 0 {
        return Err(crate::error::Error::InvalidParameter(format!("need a = n, b = 0 (mod 2): a={a}, b={b}")));
    }
    let mut r = Report::default();
    let params = format!("n={n},p={p},a={a},b={b}");
    if p > 0 {
        let w = w_matrix(2 * p);
        r.same("xi_sp.w_antisymmetric", &params, &w.transpose(), &-&w);
        // Lie algebra of the σ-fixed points is the form algebra of w_{2p}
        for x in form_algebra_basis(&w) {
            let lhs = &(&(&w * &x.transpose()) * &w.monomial_inverse().expect("monomial")).scale(-1);
            r.same("xi_sp.fixed_points", &params, lhs, &x);
        }
    }
    let d = xi_sp_wc(n, p, a, b);
    let mut exps: Vec<i64> = d.diagonal().iter().map(|x| x.as_monomial().map_or(i64::MIN, |m| m.1)).collect();
    exps.sort();
    let mut want: Vec<i64> = std::iter::repeat(a).take(2 * p).chain(std::iter::repeat(b).take(n - 2 * p)).collect();
    want.sort();
    r.truth("xi_sp.wc_pattern", &params, exps == want && d.is_diagonal(), || format!("{exps:?} vs {want:?}"));
    if n == 2 * p {
        // ξ_Sp(j) = (1, j) on ^L U_{2p}
        let one = Invertible::monomial(ExactMatrix::identity(n));
        let sq = sigma(&one);
        let minus_one = ExactMatrix::diag(&d.at_minus_one().iter().enumerate().map(|(i, row)| (row[i], 0)).collect::<Vec<_>>());
        r.same("xi_sp.j_square", &params, &sq, &minus_one);
        let conj = sigma(&Invertible::monomial(d.clone()));
        r.same("xi_sp.j_conjugates_z", &params, &conj, &d.bar());
    }
    Ok(r)
}

fn xi_sp_wc(n: usize, p: usize, a: i64, b: i64) -> ExactMatrix {
    ExactMatrix::diag(&(0..n).map(|i| (1, if i < 2 * p { a } else { b })).collect::<Vec<_>>())
}

/// ξ_SO on W_C: (χ_{a'})^p, (χ_b)^{n−2p}, (χ_{a'})^p.
pub fn xi_so_wc(n: usize, p: usize, a: i64, b: i64) -> ExactMatrix {
    ExactMatrix::diag(&(0..n).map(|i| (1, if i < p || i >= n - p { a } else { b })).collect::<Vec<_>>())
}

/// Prop 5.1 (ii).
pub fn check_xi_so(n: usize, p: usize, a: i64, b: i64) -> crate::error::Result<Report> {
    check_sizes(n, p)?;
    if (a - n as i64 + 1).rem_euclid(2) != 0 || b.rem_euclid(2) != 0 {
        return Err(crate::error::Error::InvalidParameter(format!("need a' = n-1, b = 0 (mod 2): a'={a}, b={b}")));
    }
    let mut r = Report::default();
    let params = format!("n={n},p={p},a'={a},b={b}");
    let d = xi_so_wc(n, p, a, b);
    let mut exps: Vec<i64> = d.diagonal().iter().map(|x| x.as_monomial().map_or(i64::MIN, |m| m.1)).collect();
    exps.sort();
    let mut want: Vec<i64> = std::iter::repeat(a).take(2 * p).chain(std::iter::repeat(b).take(n - 2 * p)).collect();
    want.sort();
    r.truth("xi_so.wc_pattern", &params, exps == want, || format!("{exps:?} vs {want:?}"));
    if n % 2 == 1 {
        let j = j_np(n, p)?;
        r.same("xi_so.J_symmetric", &params, &j.transpose(), &j);
        // O(2p) realized by J lies in the σ_n-fixed points
        let jp = outer(2 * p, p, Some(w_matrix(p)), None, Some(w_matrix(p).transpose()));
        let w = w_matrix(n);
        let winv = w.monomial_inverse().expect("monomial");
        for x in form_algebra_basis(&jp) {
            let ix = iota_outer(n, p, &x, None);
            let lhs = (&(&w * &ix.transpose()) * &winv).scale(-1);
            r.same("xi_so.o2p_in_fixed_points", &params, &lhs, &ix);
        }
        return Ok(r);
    }
    let tp = tprime_2p(n, p)?;
    let jpr = jprime_np(n, p)?;
    let jpr_inv = jpr.monomial_inverse().expect("monomial");
    let dmat = &tp * &jpr_inv;
    r.truth("xi_so.TJ_diagonal", &params, dmat.is_diagonal(), || format!("T'(J')^-1 not diagonal:\n{dmat}"));
    // its outer entries must be those of T_{2p}
    let t = t_2p(p);
    let outer_ok = (0..2 * p).all(|k| {
        let pos = if k < p { k } else { n - 2 * p + k };
        dmat.get(pos, pos) == t.get(k, k)
    }) && (p..n - p).all(|k| *dmat.get(k, k) == Laurent::constant(1));
    r.truth("xi_so.TJ_outer_is_T2p", &params, outer_ok, || format!("diag {:?}", dmat.diagonal().iter().map(ToString::to_string).collect::<Vec<_>>()));
    let dinv = dmat.monomial_inverse().expect("signed diagonal");
    let tinv = t.monomial_inverse().expect("signed diagonal");
    // ι(T g T^{-1}) = D ι(g) D^{-1} on elementary matrices
    for i in 0..2 * p {
        for jx in 0..2 * p {
            let g = elem(2 * p, i, jx);
            let lhs = iota_outer(n, p, &(&(&t * &g) * &tinv), None);
            let rhs = &(&dmat * &iota_outer(n, p, &g, None)) * &dinv;
            r.same("xi_so.iota_intertwines_T", &format!("{params},E{i}{jx}"), &lhs, &rhs);
        }
    }
    // the chosen SO(2p): ᵗι(g)^{-1} = (J')^{-1} ι(g) J' on the Lie algebra
    let jp_small = anti_ones(2 * p);
    for x in form_algebra_basis(&jp_small) {
        let ix = iota_outer(n, p, &x, None);
        let lhs = ix.transpose().scale(-1);
        let rhs = &(&jpr_inv * &ix) * &jpr;
        r.same("xi_so.J_prime_realization", &params, &lhs, &rhs);
        r.same("xi_so.z_commutes_iota", &params, &(&d * &ix), &(&ix * &d));
    }
    let w = w_matrix(n);
    let a_mat = Invertible::monomial(&tp * &w);
    // ξ_SO(j) ξ_SO(z) ξ_SO(j)^{-1} = ξ_SO(z̄)
    let conj = &(&a_mat.m * &sigma(&Invertible::monomial(d.clone()))) * &a_mat.inv;
    r.same("xi_so.j_conjugates_z", &params, &conj, &d.bar());
    // ξ_SO(j)² = (1, −1)
    let xj = GaloisElement::with_j(a_mat);
    let (sq, _, hits_minus_one) = xj.compose(&xj);
    debug_assert!(hits_minus_one);
    r.same("xi_so.j_square", &params, &sq, &ExactMatrix::identity(n));
    Ok(r)
}

/// ι(g, h) = h ⊗ g
pub fn iota_gl_sl2(g: &ExactMatrix, h: &ExactMatrix) -> ExactMatrix {
    ExactMatrix::kron(h, g)
}

/// c(z) = u^{1/2} I_{2n}, c(j) = diag(−I_n, I_n).
pub fn c_z(n: usize) -> ExactMatrix {
    ExactMatrix::diag(&vec![(1, 1); 2 * n])
}

pub fn c_j(n: usize) -> ExactMatrix {
    ExactMatrix::diag(&(0..2 * n).map(|i| (if i < n { -1 } else { 1 }, 0)).collect::<Vec<_>>())
}

/// Commutant of ι(SL(2)) in ^L U_{2n} and the maps ξ_±.
pub fn check_xi_pm(n: usize) -> Report {
    let mut r = Report::default();
    let params = format!("n={n}");
    let id_n = ExactMatrix::identity(n);
    let id2 = ExactMatrix::identity(2);
    let w2n = w_matrix(2 * n);
    let w2n_inv = w2n.monomial_inverse().expect("monomial");
    let s = if (n - 1) % 2 == 0 { 1 } else { -1 };
    for (h, [a, b, c, d]) in sl2_generators() {
        let ih = Invertible { m: iota_gl_sl2(&id_n, &h.m), inv: iota_gl_sl2(&id_n, &h.inv) };
        let lhs = sigma(&ih);
        let want = iota_gl_sl2(&id_n, &ExactMatrix::from_ints(&[&[a, s * b], &[s * c, d]]));
        r.same("sl2.sigma_iota_h", &params, &lhs, &want);
        if n % 2 == 0 {
            // c(j) restores ι(h)
            let cj = c_j(n);
            let back = &(&cj * &lhs) * &cj;
            r.same("xi_minus.commutes_sl2", &params, &back, &ih.m);
        }
    }
    let wn = w_matrix(n);
    let lhs = &w2n_inv * &iota_gl_sl2(&wn, &id2);
    let sgn = if n % 2 == 0 { 1 } else { -1 };
    let want = ExactMatrix::blocks(&[n, n], &[vec![None, Some(id_n.scale(sgn))], vec![Some(id_n.clone()), None]]);
    r.same("xi_plus.w2n_inv_iota_wn", &params, &lhs, &want);
    let gens = gl_generators(n);
    let lift = |g: &Invertible| Invertible { m: iota_gl_sl2(&g.m, &id2), inv: iota_gl_sl2(&g.inv, &id2) };
    if n % 2 == 1 {
        for g in &gens {
            r.same("xi_plus.sigma_compatible", &params, &sigma(&lift(g)), &iota_gl_sl2(&sigma(g), &id2));
        }
        for g in &gens {
            for h in gens.iter().take(4) {
                // ξ_+(g,j) ξ_+(h,j) = ξ_+(g σ(h), −1)
                let lhs = &lift(g).m * &sigma(&lift(h));
                let rhs = iota_gl_sl2(&(&g.m * &sigma(h)), &id2);
                r.same("xi_plus.homomorphism", &params, &lhs, &rhs);
            }
        }
    } else {
        let cj = Invertible::monomial(c_j(n));
        let cz = c_z(n);
        r.same("xi_minus.c_j_square", &params, &(&cj.m * &cj.m), &ExactMatrix::identity(2 * n));
        r.same("xi_minus.c_z_c_j", &params, &(&cz * &cj.m), &(&cj.m * &cz));
        // (1,j)² = (1,−1) ↦ c(j)σ(c(j)) = c(−1)
        let cm1 = ExactMatrix::diag(&vec![(cz.get(0, 0).at_minus_one(), 0); 2 * n]);
        r.same("xi_minus.j_square", &params, &(&cj.m * &sigma(&cj)), &cm1);
        for g in &gens {
            for h in gens.iter().take(4) {
                // ξ_−(g,j) ξ_−(h,j) = ξ_−(g σ(h), −1)
                let xh = lift(h).compose(&cj);
                let lhs = &(&lift(g).m * &cj.m) * &sigma(&xh);
                let rhs = &iota_gl_sl2(&(&g.m * &sigma(h)), &id2) * &cm1;
                r.same("xi_minus.homomorphism", &params, &lhs, &rhs);
            }
        }
        // ξ_−(j) ξ_−(D, z) ξ_−(j)^{-1} = ξ_−(σ(D), z̄)
        let dn = ExactMatrix::diag(&(0..n).map(|i| (1, 2 * i as i64 - n as i64)).collect::<Vec<_>>());
        let x = Invertible::monomial(&iota_gl_sl2(&dn, &id2) * &cz);
        let lhs = &(&cj.m * &sigma(&x)) * &cj.inv;
        let rhs = &iota_gl_sl2(&sigma(&Invertible::monomial(dn.clone())), &id2) * &cz.bar();
        r.same("xi_minus.j_conjugates_z", &params, &lhs, &rhs);
    }
    r
}

/// t = diag(−I_k, I_k) and the E-group relations.
pub fn check_esp(k: usize) -> Report {
    let mut r = Report::default();
    let params = format!("k={k}");
    let w = w_matrix(2 * k);
    let t = ExactMatrix::diag(&(0..2 * k).map(|i| (if i < k { -1 } else { 1 }, 0)).collect::<Vec<_>>());
    let tw = &t * &w;
    r.same("esp.tw_square", &params, &(&tw * &tw), &ExactMatrix::identity(2 * k));
    r.same("esp.similitude_minus_one", &params, &(&(&t.transpose() * &w) * &t), &-&w);
    // on sp(w), j acts through conjugation by t
    let winv = w.monomial_inverse().expect("monomial");
    for x in form_algebra_basis(&w) {
        let via_sigma = &(&t * &(&(&w * &x.transpose()) * &winv).scale(-1)) * &t;
        r.same("esp.j_action_is_t", &params, &via_sigma, &(&(&t * &x) * &t));
    }
    r
}

pub fn j1() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[0, 0, 1, 0], &[0, 0, 0, -1], &[-1, 0, 0, 0], &[0, 1, 0, 0]])
}

pub fn j2() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[-1, 0, 0, 0]])
}

pub fn tau() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[0, 0, 1, 0], &[0, 0, 0, -1], &[-1, 0, 0, 0], &[0, 1, 0, 0]])
}

pub fn j_case11() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]])
}

/// Rank-one relations: J_1, J_2 and the case-11 τ.
pub fn check_rank_one() -> Report {
    let mut r = Report::default();
    let p = "4x4";
    for (name, j) in [("J1", j1()), ("J2", j2())] {
        let inv = j.monomial_inverse().expect("monomial");
        r.same(&format!("rank_one.{name}_transpose_inverse"), p, &j.transpose(), &inv);
        r.same(&format!("rank_one.{name}_antisymmetric"), p, &j.transpose(), &-&j);
    }
    r.same("rank_one.J1J2_anticommute", p, &(&j1() * &j2()), &-&(&j2() * &j1()));
    let t = tau();
    let tinv = t.monomial_inverse().expect("monomial");
    r.same("case11.tau_transpose_inverse", p, &t.transpose(), &tinv);
    r.same("case11.tau_antisymmetric", p, &t.transpose(), &-&t);
    r.same("case11.tau_square", p, &(&t * &t), &ExactMatrix::identity(4).scale(-1));
    let j = j_case11();
    r.same("case11.tau_in_sp", p, &(&(&t.transpose() * &j) * &t), &j);
    let form = (&t * &j).scale(-1);
    r.same("case11.minus_tau_J_symmetric", p, &form.transpose(), &form);
    r.same("case11.minus_tau_J_is_antidiagonal", p, &form, &anti_ones(4));
    // sp(J) ∩ centralizer(τ) preserves −τJ
    let sp = form_algebra_basis(&j);
    let mut rows = Vec::new();
    for x in &sp {
        let c = &(&x.clone() * &t) - &(&t * x);
        rows.push(c);
    }
    // solve Σ c_i [X_i, τ] = 0
    let m = sp.len();
    let mut eqs = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            eqs.push((0..m).map(|i| rows[i].get(a, b).as_monomial().map_or(0, |(c, _)| c)).collect::<Vec<i64>>());
        }
    }
    let comm = nullspace(eqs, m);
    r.truth("case11.centralizer_dimension", p, comm.len() == 4, || format!("dim {}", comm.len()));
    for coeffs in comm {
        let mut x = ExactMatrix::zero(4);
        for (i, c) in coeffs.iter().enumerate() {
            x = &x + &sp[i].scale(*c);
        }
        let lhs = &(&x.transpose() * &form) + &(&form * &x);
        r.same("case11.centralizer_preserves_form", p, &lhs, &ExactMatrix::zero(4));
    }
    r
}

/// Every check for n ≤ max_n and k ≤ max_n / 2.
pub fn check_all(max_n: usize) -> Report {
    let mut r = Report::default();
    for n in 1..=max_n {
        r.extend(check_w(n));
        for p in 0..=n / 2 {
            r.extend(check_xi_sp(n, p, (n % 2) as i64, 0).expect("valid sizes"));
            r.extend(check_xi_so(n, p, ((n + 1) % 2) as i64, 0).expect("valid sizes"));
        }
        r.extend(check_xi_pm(n));
    }
    for k in 1..=max_n.div_ceil(2) {
        r.extend(check_esp(k));
    }
    r.extend(check_rank_one());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w2_and_w3() {
        let w2 = w_matrix(2);
        assert_eq!(w2, ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]));
        assert_eq!(w2.transpose(), -&w2);
        assert_eq!(w2.monomial_inverse().unwrap(), -&w2);
        let w3 = w_matrix(3);
        assert_eq!(w3.transpose(), w3);
        assert_eq!(w3.monomial_inverse().unwrap(), w3);
    }

    #[test]
    fn tj_pattern() {
        let d = &tprime_2p(6, 2).unwrap() * &jprime_np(6, 2).unwrap();
        let diag: Vec<i64> = d.diagonal().iter().map(|x| x.as_monomial().unwrap().0).collect();
        assert_eq!(diag, vec![1, -1, 1, 1, 1, -1]);
    }

    #[test]
    fn laurent_arithmetic() {
        let a = Laurent::monomial(2, 1);
        let b = Laurent::monomial(3, -1);
        assert_eq!(&a * &b, Laurent::constant(6));
        assert_eq!((&a + &-&a), Laurent::zero());
        assert_eq!(a.bar(), Laurent::monomial(2, -1));
        assert_eq!(a.at_minus_one(), -2);
    }

    #[test]
    fn minimal_odd_case() {
        assert!(check_xi_so(3, 1, 0, 0).unwrap().all_ok());
        assert!(check_xi_sp(4, 1, 0, 0).unwrap().all_ok());
        assert!(check_xi_sp(3, 0, 1, 0).unwrap().all_ok());
    }

    #[test]
    fn xi_pm_small() {
        for n in 1..=4 {
            let r = check_xi_pm(n);
            assert!(r.all_ok(), "{r}");
        }
    }

    #[test]
    fn esp_and_rank_one() {
        for k in 1..=4 {
            assert!(check_esp(k).all_ok());
        }
        let r = check_rank_one();
        assert!(r.all_ok(), "{r}");
        let t = ExactMatrix::diag(&[(-1, 0), (1, 0)]);
        let w = w_matrix(2);
        assert_eq!(&(&t.transpose() * &w) * &t, -&w);
    }

    #[test]
    fn sp_algebra_dimension() {
        assert_eq!(form_algebra_basis(&w_matrix(4)).len(), 10);
        assert_eq!(form_algebra_basis(&anti_ones(4)).len(), 6);
    }

    #[test]
    fn galois_square_of_w() {
        // (w_n, j)² = ((−1)^{n−1}, −1)
        for n in 1..=6 {
            let x = GaloisElement::with_j(Invertible::monomial(w_matrix(n)));
            let (m, j, minus) = x.compose(&x);
            assert!(!j && minus);
            assert_eq!(m, ExactMatrix::identity(n).scale(if n % 2 == 1 { 1 } else { -1 }));
        }
    }

    #[test]
    fn size_violation() {
        assert!(j_np(3, 2).is_err());
    }
}
