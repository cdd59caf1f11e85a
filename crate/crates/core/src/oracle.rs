//! Brute-force ground truth at desk scale.
//!
//! Enumerations of `S_n`, `GL_n(F_p)` and the upper triangular group, literal
//! double-coset expansion, and a literal region-criterion comparison. The
//! arithmetic here runs on plain `u64` residues mod `p` and never calls the
//! elimination kernels of the main modules, so agreement is a real check.
//! Random generators for tests live here too.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num::rational::BigRational;
use num::Zero;
use rand::Rng;
use rayon::prelude::*;

use crate::colmat::ColMatrix;
use crate::decomp::{bruhat_decompose, coset_label};
use crate::error::{Error, Result};
use crate::flags::{
    relative_position, relative_position_by_decomposition, relative_position_by_dimensions,
    Filtration, Flag, GradationTable, IndexPoset, Subspace,
};
use crate::permutation::{bruhat_leq, bruhat_leq_tableau, Permutation};
use crate::scalar::{Ring, Scalar};
use crate::schubert::{closure_cover_check, y_sigma_contains};

/// Materialized finite group.
#[derive(Debug, Clone)]
pub enum FiniteGroupEnumeration {
    SymmetricGroup { n: usize, elements: Vec<Permutation> },
    GeneralLinear { n: usize, p: u64, elements: Vec<ColMatrix> },
}

impl FiniteGroupEnumeration {
    pub fn symmetric(n: usize) -> Result<FiniteGroupEnumeration> {
        Ok(FiniteGroupEnumeration::SymmetricGroup {
            n,
            elements: enumerate_sn(n)?,
        })
    }

    pub fn general_linear(n: usize, p: u64) -> Result<FiniteGroupEnumeration> {
        Ok(FiniteGroupEnumeration::GeneralLinear {
            n,
            p,
            elements: enumerate_gl(n, p)?,
        })
    }

    pub fn len(&self) -> usize {
        match self {
            FiniteGroupEnumeration::SymmetricGroup { elements, .. } => elements.len(),
            FiniteGroupEnumeration::GeneralLinear { elements, .. } => elements.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `n!`.
pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `∏_{i<n} (pⁿ − pⁱ)`.
pub fn gl_order(n: u32, p: u64) -> u64 {
    let pn = p.pow(n);
    (0..n).map(|i| pn - p.pow(i)).product()
}

/// All permutations with support in `[1, n]`, lexicographic in one-line
/// notation.
pub fn enumerate_sn(n: usize) -> Result<Vec<Permutation>> {
    if n > 7 {
        return Err(Error::TooLarge(format!("S_{n} has {} elements", factorial(n))));
    }
    let mut out = Vec::with_capacity(factorial(n));
    let mut line: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::from_one_line(&line)?);
        // next lexicographic permutation
        let Some(i) = (1..line.len()).rev().find(|&i| line[i - 1] < line[i]) else {
            break;
        };
        let j = (i..line.len()).rev().find(|&j| line[j] > line[i - 1]).unwrap();
        line.swap(i - 1, j);
        line[i..].reverse();
    }
    Ok(out)
}

type ModMatrix = Vec<Vec<u64>>;

fn to_mod(g: &ColMatrix, n: usize) -> ModMatrix {
    g.block_rows(n)
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| match x {
                    Scalar::Modular { value, .. } => *value,
                    _ => panic!("oracle expects F_p matrices"),
                })
                .collect()
        })
        .collect()
}

fn from_mod(p: u64, m: &ModMatrix) -> ColMatrix {
    let ring = Ring::PrimeField(p);
    ColMatrix::from_rows(
        ring,
        m.iter()
            .map(|r| r.iter().map(|&v| Scalar::from_i64(ring, v as i64)).collect())
            .collect(),
    )
    .expect("square by construction")
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is small; brute force keeps this independent of the scalar module
    (1..p).find(|&b| a * b % p == 1).expect("nonzero residue mod a prime")
}

/// Rank mod `p` by plain elimination on residues.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: ModMatrix = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_inv(m[rank][c], p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c] * inv % p;
                for j in 0..ncols {
                    m[i][j] = (m[i][j] + p * p - f * m[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over ℚ by textbook elimination on `BigRational`s.
pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for i in rank + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                for j in c..ncols {
                    let delta = &f * &m[rank][j];
                    m[i][j] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_mul(a: &ModMatrix, b: &ModMatrix, p: u64) -> ModMatrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j] % p).sum::<u64>() % p).collect())
        .collect()
}

fn all_mod_matrices(n: usize, p: u64) -> impl Iterator<Item = ModMatrix> {
    let cells = n * n;
    let total = p.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut m = vec![vec![0u64; n]; n];
        for k in 0..cells {
            m[k / n][k % n] = code % p;
            code /= p;
        }
        m
    })
}

fn check_enumeration_size(n: usize, p: u64) -> Result<()> {
    let cells = (n * n) as u32;
    match p.checked_pow(cells) {
        Some(total) if total <= 10_000_000 => Ok(()),
        _ => Err(Error::TooLarge(format!("{p}^{cells} matrices to scan"))),
    }
}

/// Every invertible `n × n` matrix over `F_p`, as window-`n` matrices
/// (normalized, so some have a smaller stored window).
pub fn enumerate_gl(n: usize, p: u64) -> Result<Vec<ColMatrix>> {
    Ring::prime_field(p)?;
    check_enumeration_size(n, p)?;
    Ok(all_mod_matrices(n, p)
        .filter(|m| rank_mod_p(m, p) == n)
        .map(|m| from_mod(p, &m))
        .collect())
}

/// Upper triangular matrices with nonzero diagonal over `F_p`, window `n`.
pub fn enumerate_borel(n: usize, p: u64) -> Result<Vec<ColMatrix>> {
    Ring::prime_field(p)?;
    check_enumeration_size(n, p)?;
    Ok(all_mod_matrices(n, p)
        .filter(|m| (0..n).all(|i| m[i][i] != 0 && (0..i).all(|j| m[i][j] == 0)))
        .map(|m| from_mod(p, &m))
        .collect())
}

/// `{bσc : b, c ∈ B(F_p)}` by literal expansion at window `n`.
pub fn double_coset(sigma: &Permutation, n: usize, p: u64) -> Result<HashSet<ColMatrix>> {
    let borel: Vec<ModMatrix> = enumerate_borel(n, p)?.iter().map(|b| to_mod(b, n)).collect();
    let mut s = vec![vec![0u64; n]; n];
    for j in 1..=n {
        s[sigma.apply(j) - 1][j - 1] = 1;
    }
    let mut out = HashSet::new();
    for b in &borel {
        let bs = mod_mul(b, &s, p);
        for c in &borel {
            out.insert(from_mod(p, &mod_mul(&bs, c, p)));
        }
    }
    Ok(out)
}

/// Region criterion evaluated over the full `n × n` table, counting each
/// `r_{i,j}` from scratch.
pub fn bruhat_leq_bruteforce(sigma: &Permutation, tau: &Permutation, n: usize) -> bool {
    let r = |w: &Permutation, i: usize, j: usize| (1..=j).filter(|&k| w.apply(k) <= i).count();
    (1..=n).all(|i| (1..=n).all(|j| r(sigma, i, j) >= r(tau, i, j)))
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut line: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        line.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_one_line(&line).expect("shuffle of 1..=n")
}

/// Small random element of `ring` (numerators and denominators below 10
/// over ℚ and ℤ).
pub fn random_scalar<R: Rng>(ring: Ring, rng: &mut R) -> Scalar {
    match ring {
        Ring::Rationals => Scalar::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9)),
        Ring::PrimeField(p) => Scalar::from_i64(ring, rng.gen_range(0..p) as i64),
        Ring::Integers => Scalar::from_i64(ring, rng.gen_range(-9..=9)),
    }
}

pub fn random_unit<R: Rng>(ring: Ring, rng: &mut R) -> Scalar {
    match ring {
        Ring::Integers => Scalar::from_i64(ring, if rng.gen() { 1 } else { -1 }),
        _ => loop {
            let x = random_scalar(ring, rng);
            if x.is_unit() {
                return x;
            }
        },
    }
}

/// Random upper triangular matrix with unit diagonal entries, window `n`.
pub fn random_upper_triangular<R: Rng>(ring: Ring, n: usize, unipotent: bool, rng: &mut R) -> ColMatrix {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Greater => ring.zero(),
                    std::cmp::Ordering::Equal if unipotent => ring.one(),
                    std::cmp::Ordering::Equal => random_unit(ring, rng),
                    std::cmp::Ordering::Less => random_scalar(ring, rng),
                })
                .collect()
        })
        .collect();
    ColMatrix::from_rows(ring, rows).expect("square")
}

/// Random invertible `n × n` matrix over a field (rejection sampling).
pub fn random_invertible<R: Rng>(ring: Ring, n: usize, rng: &mut R) -> ColMatrix {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| random_scalar(ring, rng)).collect()).collect();
        let g = ColMatrix::from_rows(ring, rows).expect("square");
        if g.is_invertible().expect("field") {
            return g;
        }
    }
}

pub fn random_flag<R: Rng>(ring: Ring, dim: usize, rng: &mut R) -> Flag {
    Flag::from_matrix(&random_invertible(ring, dim, rng), dim).expect("invertible")
}

/// Random linear filtration of `k^dim`: a chain of `len ≥ 2` subspaces taken
/// from a random flag, with repeats allowed, starting at 0 and ending at
/// the whole space.
pub fn random_chain_filtration<R: Rng>(ring: Ring, dim: usize, len: usize, rng: &mut R) -> Filtration {
    assert!(len >= 2);
    let flag = random_flag(ring, dim, rng);
    let mut dims: Vec<usize> = (0..len - 2).map(|_| rng.gen_range(0..=dim)).collect();
    dims.sort_unstable();
    dims.insert(0, 0);
    dims.push(dim);
    let modules = dims.iter().map(|&d| flag.step(d).expect("in range")).collect();
    Filtration::new(IndexPoset::Chain(len), modules).expect("valid chain")
}

/// A random almost gradation of `f`: at each index, a complement of `F_{<x}`
/// in `F_x`, with every basis vector shifted by a random element of
/// `F_{<x}`.
pub fn random_almost_gradation<R: Rng>(f: &Filtration, rng: &mut R) -> Result<GradationTable> {
    let ring = f.ring();
    let mut cells = Vec::with_capacity(f.poset().len());
    for x in 0..f.poset().len() {
        let below = f.below(x)?;
        let base = f.module(x).complement_of(&below)?;
        let shifted: Vec<Vec<Scalar>> = base
            .basis()
            .iter()
            .map(|v| {
                let mut w = v.clone();
                for u in below.basis() {
                    let c = random_scalar(ring, rng);
                    for (wk, uk) in w.iter_mut().zip(u) {
                        *wk = &*wk + &(&c * uk);
                    }
                }
                w
            })
            .collect();
        cells.push(Subspace::span(ring, f.ambient(), &shifted)?);
    }
    Ok(GradationTable {
        poset: f.poset(),
        cells,
    })
}

/// Which family of exhaustive checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bruhat,
    Decomp,
    Closure,
    Flags,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "bruhat" => Ok(Suite::Bruhat),
            "decomp" => Ok(Suite::Decomp),
            "closure" => Ok(Suite::Closure),
            "flags" => Ok(Suite::Flags),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
}

/// First disagreement found by a suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub suite: Suite,
    pub counterexample: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} suite mismatch: {}", self.suite, self.counterexample)
    }
}

pub type SuiteOutcome = std::result::Result<SuiteReport, Mismatch>;

fn mismatch(suite: Suite, counterexample: String) -> Mismatch {
    Mismatch { suite, counterexample }
}

/// Runs one suite at size `n` over `F_p`. Domain errors inside the suite
/// count as mismatches; setup errors (size limits, bad `p`) are `Err`.
pub fn run_suite(suite: Suite, n: usize, p: u64) -> Result<SuiteOutcome> {
    match suite {
        Suite::Bruhat => Ok(bruhat_suite(n)?),
        Suite::Decomp => Ok(decomp_suite(n, p)?),
        Suite::Closure => Ok(closure_suite(n, p)?),
        Suite::Flags => Ok(flags_suite(n, p)?),
    }
}

fn bruhat_suite(n: usize) -> Result<SuiteOutcome> {
    let all = enumerate_sn(n)?;
    let bad = all.par_iter().find_map_any(|s| {
        all.iter().find_map(|t| {
            let fast = bruhat_leq(s, t).ok()?;
            let slow = bruhat_leq_bruteforce(s, t, n);
            let tableau = bruhat_leq_tableau(s, t, n);
            (fast != slow || fast != tableau)
                .then(|| format!("{s} <= {t}: region {fast}, brute force {slow}, tableau {tableau}"))
        })
    });
    Ok(match bad {
        Some(c) => Err(mismatch(Suite::Bruhat, c)),
        None => Ok(SuiteReport {
            suite: Suite::Bruhat,
            cases: all.len() * all.len(),
        }),
    })
}

fn decomp_suite(n: usize, p: u64) -> Result<SuiteOutcome> {
    let gl = enumerate_gl(n, p)?;
    let sn = enumerate_sn(n)?;
    let bad = gl.par_iter().find_map_any(|g| match bruhat_decompose(g) {
        Ok(f) if f.reproduces(g) => None,
        Ok(_) => Some(format!("factorization of {g} does not multiply back")),
        Err(e) => Some(format!("{g}: {e}")),
    });
    if let Some(c) = bad {
        return Ok(Err(mismatch(Suite::Decomp, c)));
    }
    let mut fibers: HashMap<Permutation, HashSet<ColMatrix>> = HashMap::new();
    for g in &gl {
        match coset_label(g) {
            Ok(label) => {
                fibers.entry(label).or_default().insert(g.clone());
            }
            Err(e) => return Ok(Err(mismatch(Suite::Decomp, format!("{g}: {e}")))),
        }
    }
    let mut covered = 0;
    for sigma in &sn {
        let coset = double_coset(sigma, n, p)?;
        covered += coset.len();
        let fiber = fibers.remove(sigma).unwrap_or_default();
        if fiber != coset {
            return Ok(Err(mismatch(
                Suite::Decomp,
                format!(
                    "fiber over {sigma} has {} matrices, double coset has {}",
                    fiber.len(),
                    coset.len()
                ),
            )));
        }
    }
    if !fibers.is_empty() || covered != gl.len() {
        return Ok(Err(mismatch(
            Suite::Decomp,
            format!("double cosets cover {covered} of {} matrices", gl.len()),
        )));
    }
    Ok(Ok(SuiteReport {
        suite: Suite::Decomp,
        cases: gl.len(),
    }))
}

fn closure_suite(n: usize, p: u64) -> Result<SuiteOutcome> {
    let gl = enumerate_gl(n, p)?;
    let sn = enumerate_sn(n)?;
    let bad = gl.par_iter().find_map_any(|g| {
        let tau = match coset_label(g) {
            Ok(t) => t,
            Err(e) => return Some(format!("{g}: {e}")),
        };
        sn.iter().find_map(|sigma| {
            let member = match y_sigma_contains(sigma, g) {
                Ok(m) => m,
                Err(e) => return Some(format!("{sigma}, {g}: {e}")),
            };
            let below = bruhat_leq_bruteforce(&tau, sigma, n);
            if member != below {
                return Some(format!(
                    "g = {g} in Y_{sigma} is {member}, but its cell {tau} <= {sigma} is {below}"
                ));
            }
            closure_cover_check(sigma, g).err().map(|e| format!("{sigma}, {g}: {e}"))
        })
    });
    Ok(match bad {
        Some(c) => Err(mismatch(Suite::Closure, c)),
        None => Ok(SuiteReport {
            suite: Suite::Closure,
            cases: gl.len() * sn.len(),
        }),
    })
}

fn flags_suite(n: usize, p: u64) -> Result<SuiteOutcome> {
    let ring = Ring::prime_field(p)?;
    let e = Flag::standard(ring, n);
    for sigma in enumerate_sn(n)? {
        let f = e.act(&ColMatrix::permutation_matrix(ring, &sigma)?)?;
        match relative_position(&f, &e) {
            Ok(w) if w == sigma => {}
            Ok(w) => {
                return Ok(Err(mismatch(
                    Suite::Flags,
                    format!("relative position of {sigma}E is {w}"),
                )))
            }
            Err(e) => return Ok(Err(mismatch(Suite::Flags, format!("{sigma}: {e}")))),
        }
    }
    let gl = enumerate_gl(n, p)?;
    let borel = enumerate_borel(n, p)?;
    // group flags by relative position; each class must be a single B-orbit
    let mut classes: BTreeMap<Vec<usize>, Vec<Vec<Subspace>>> = BTreeMap::new();
    for g in &gl {
        let f = Flag::from_matrix(g, n)?;
        let (a, b) = (
            relative_position_by_decomposition(&f, &e),
            relative_position_by_dimensions(&f, &e),
        );
        let w = match (a, b) {
            (Ok(a), Ok(b)) if a == b => a,
            (a, b) => {
                return Ok(Err(mismatch(
                    Suite::Flags,
                    format!("{f}: decomposition {a:?} vs dimensions {b:?}"),
                )))
            }
        };
        let back = relative_position(&e, &f).ok();
        if back.as_ref() != Some(&w.inverse()) {
            return Ok(Err(mismatch(
                Suite::Flags,
                format!("{f}: w(F,E) = {w} but w(E,F) = {back:?}"),
            )));
        }
        let steps = f.steps()?;
        let class = classes.entry(w.one_line(n)).or_default();
        if !class.contains(&steps) {
            class.push(steps);
        }
    }
    for (w, class) in &classes {
        let sigma = Permutation::from_one_line(w)?;
        let base = e.act(&ColMatrix::permutation_matrix(ring, &sigma)?)?;
        let mut orbit: Vec<Vec<Subspace>> = Vec::new();
        for b in &borel {
            let steps = base.act(b)?.steps()?;
            if !orbit.contains(&steps) {
                orbit.push(steps);
            }
        }
        let same = orbit.len() == class.len() && orbit.iter().all(|s| class.contains(s));
        if !same {
            return Ok(Err(mismatch(
                Suite::Flags,
                format!(
                    "flags at position {sigma}: {} found, B-orbit has {}",
                    class.len(),
                    orbit.len()
                ),
            )));
        }
    }
    Ok(Ok(SuiteReport {
        suite: Suite::Flags,
        cases: gl.len(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_sizes() {
        assert_eq!(enumerate_sn(1).unwrap(), vec![Permutation::identity()]);
        assert_eq!(enumerate_sn(3).unwrap().len(), 6);
        assert_eq!(enumerate_sn(5).unwrap().len(), 120);
        assert!(matches!(enumerate_sn(8), Err(Error::TooLarge(_))));
        let s4: HashSet<Permutation> = enumerate_sn(4).unwrap().into_iter().collect();
        assert_eq!(s4.len(), 24);
    }

    #[test]
    fn general_linear_sizes() {
        assert_eq!(enumerate_gl(2, 2).unwrap().len(), 6);
        assert_eq!(enumerate_gl(3, 2).unwrap().len(), 168);
        assert_eq!(enumerate_gl(1, 5).unwrap().len(), 4);
        assert_eq!(enumerate_gl(2, 3).unwrap().len() as u64, gl_order(2, 3));
        assert_eq!(gl_order(3, 2), 168);
        assert!(matches!(enumerate_gl(4, 3), Err(Error::TooLarge(_))));
        assert!(enumerate_gl(2, 4).is_err());
    }

    #[test]
    fn enumeration_orders() {
        for n in 0..=5 {
            assert_eq!(FiniteGroupEnumeration::symmetric(n).unwrap().len(), factorial(n));
        }
        for (n, p) in [(1, 2), (2, 2), (3, 2), (2, 3), (2, 5)] {
            let g = FiniteGroupEnumeration::general_linear(n, p).unwrap();
            assert_eq!(g.len() as u64, gl_order(n as u32, p));
        }
    }

    #[test]
    fn borel_size() {
        // (p−1)^n p^{n(n−1)/2}
        assert_eq!(enumerate_borel(3, 2).unwrap().len(), 8);
        assert_eq!(enumerate_borel(2, 3).unwrap().len(), 12);
    }

    #[test]
    fn s3_bruhat_order_table() {
        let s3 = enumerate_sn(3).unwrap();
        let id = Permutation::identity();
        for s in &s3 {
            assert!(bruhat_leq_bruteforce(&id, s, 3));
        }
        let p = |l: &[usize]| Permutation::from_one_line(l).unwrap();
        assert!(!bruhat_leq_bruteforce(&p(&[2, 3, 1]), &p(&[3, 1, 2]), 3));
        assert!(!bruhat_leq_bruteforce(&p(&[3, 1, 2]), &p(&[2, 3, 1]), 3));
        let relations = s3
            .iter()
            .flat_map(|s| s3.iter().map(move |t| (s, t)))
            .filter(|(s, t)| bruhat_leq_bruteforce(s, t, 3))
            .count();
        // 6 reflexive + 4 above id + 2·2 middle-to-top... 19 relations in all
        assert_eq!(relations, 19);
    }

    #[test]
    fn oracle_ranks() {
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 2]], 3), 2);
        let q = |n: i64| BigRational::from_integer(n.into());
        assert_eq!(rank_rational(&[vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
    }

    #[test]
    fn suites_pass_at_small_sizes() {
        for suite in [Suite::Bruhat, Suite::Decomp, Suite::Closure, Suite::Flags] {
            let outcome = run_suite(suite, 2, 3).unwrap();
            assert!(outcome.is_ok(), "{outcome:?}");
        }
    }
}
