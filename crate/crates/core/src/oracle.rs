//! Plethysm by literal substitution, independent of the power-sum machinery.
//!
//! `g` is expanded into monomials in `N = |f|·|g|` variables, each monomial
//! repeated by its coefficient, and every Schur function in `f` is evaluated
//! on that alphabet by summing over semistandard tableaux. `N` variables are
//! enough to pin down a symmetric function of degree `|f|·|g|`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::SymFunc;

/// Largest `|f|·|g|` the oracle accepts.
pub const MAX_ORACLE_DEGREE: usize = 10;

/// Coefficients of `x^μ` in `f ∘ g` for every partition `μ`, i.e. the
/// monomial expansion, computed by substitution. `f` and `g` must be
/// homogeneous, `g` of positive degree with nonnegative integer monomial
/// coefficients.
pub fn plethysm_by_substitution(f: &SymFunc, g: &SymFunc) -> Result<BTreeMap<Partition, BigRational>> {
    let d = f.degree().ok_or(Error::NotHomogeneous)?;
    let e = g.degree().ok_or(Error::NotHomogeneous)?;
    if e == 0 {
        return Err(Error::ConstantTerm);
    }
    let total = d * e;
    if total > MAX_ORACLE_DEGREE {
        return Err(Error::InvalidArgument(format!("degree {total} is too large for the substitution oracle")));
    }
    let alphabet = alphabet_of(g, total)?;
    let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (lambda, c) in f.to_schur() {
        for (mu, count) in schur_on_alphabet(&lambda, &alphabet, total) {
            *out.entry(mu).or_insert_with(BigRational::zero) += &c * BigRational::from_integer(BigInt::from(count));
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// The monomials of `g` in `vars` variables, each listed as often as its
/// coefficient.
fn alphabet_of(g: &SymFunc, vars: usize) -> Result<Vec<Vec<u8>>> {
    let e = g.degree().ok_or(Error::NotHomogeneous)?;
    let coeffs = monomial_coefficients(g, e);
    let mut letters = Vec::new();
    for exps in weak_compositions(e, vars) {
        let mut sorted: Vec<usize> = exps.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let key = Partition::new(sorted)?;
        let c = coeffs.get(&key).cloned().unwrap_or_else(BigRational::zero);
        if !c.is_integer() || c.is_negative() {
            return Err(Error::InvalidArgument(format!("coefficient {c} of m{key} is not a nonnegative integer")));
        }
        let times = c.to_integer().to_usize().ok_or_else(|| Error::InvalidArgument("coefficient too large".into()))?;
        letters.extend(std::iter::repeat_n(exps, times));
    }
    Ok(letters)
}

/// `[x^μ] g` for `μ ⊢ e`, counting tableaux on the plain variables rather
/// than going through the monomial basis.
fn monomial_coefficients(g: &SymFunc, e: usize) -> BTreeMap<Partition, BigRational> {
    let variables: Vec<Vec<u8>> = (0..e).map(|i| (0..e).map(|j| u8::from(i == j)).collect()).collect();
    let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (lambda, c) in g.to_schur() {
        for (mu, count) in schur_on_alphabet(&lambda, &variables, e) {
            *out.entry(mu).or_insert_with(BigRational::zero) += &c * BigRational::from_integer(BigInt::from(count));
        }
    }
    out
}

fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<u8>> {
    fn go(left: usize, slots: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if slots == 1 {
            cur.push(left as u8);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x as u8);
            go(left - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// `s_λ` evaluated on the alphabet, keeping only exponent vectors that are
/// partitions.
fn schur_on_alphabet(lambda: &Partition, alphabet: &[Vec<u8>], vars: usize) -> HashMap<Partition, u64> {
    let shape = lambda.parts();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut state = Tableau {
        shape,
        cells: &cells,
        alphabet,
        entries: vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()],
        exps: vec![0u8; vars],
        out: HashMap::new(),
    };
    state.fill(0);
    state.out
}

struct Tableau<'a> {
    shape: &'a [usize],
    cells: &'a [(usize, usize)],
    alphabet: &'a [Vec<u8>],
    entries: Vec<Vec<usize>>,
    exps: Vec<u8>,
    out: HashMap<Partition, u64>,
}

impl Tableau<'_> {
    fn fill(&mut self, i: usize) {
        if i == self.cells.len() {
            if self.exps.windows(2).all(|w| w[0] >= w[1]) {
                let parts = self.exps.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
                let mu = Partition::new(parts).expect("positive parts");
                *self.out.entry(mu).or_insert(0) += 1;
            }
            return;
        }
        let (r, c) = self.cells[i];
        let mut lo = 0;
        if c > 0 {
            lo = self.entries[r][c - 1];
        }
        if r > 0 {
            lo = lo.max(self.entries[r - 1][c] + 1);
        }
        // leave room for the cells still below in this column
        let below = self.shape[r + 1..].iter().take_while(|&&len| len > c).count();
        for v in lo..self.alphabet.len().saturating_sub(below) {
            self.entries[r][c] = v;
            for (x, y) in self.exps.iter_mut().zip(&self.alphabet[v]) {
                *x += y;
            }
            self.fill(i + 1);
            for (x, y) in self.exps.iter_mut().zip(&self.alphabet[v]) {
                *x -= y;
            }
        }
    }
}

/// Every pair `(f, g)` of Schur functions with `|f|·|g| <= max_degree` and
/// `|g| >= 1`, for exhaustive comparison runs.
pub fn schur_pairs(max_degree: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        for e in 1..=max_degree / d {
            for lambda in partitions_of(d) {
                for mu in partitions_of(e) {
                    out.push((lambda.clone(), mu));
                }
            }
        }
    }
    out
}
