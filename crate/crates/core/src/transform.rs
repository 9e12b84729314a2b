//! Partial transformations of `[n]`, the conjugation action of `S_n`, and
//! enumeration of nilpotent file placements.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{binomial, factorial, stirling2};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A partial map `A -> [n]` with `A ⊆ [n]`, stored in one-line notation:
/// `image[i - 1] = f(i)` and `0` marks points outside the domain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartialTransformation {
    image: Vec<usize>,
}

impl PartialTransformation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidArgument("ground set must be nonempty".into()));
        }
        if let Some((i, &v)) = image.iter().enumerate().find(|(_, &v)| v > n) {
            return Err(Error::EntryOutOfRange { position: i + 1, value: v, n });
        }
        Ok(Self { image })
    }

    /// The nowhere-defined map on `[n]`.
    pub fn zero(n: usize) -> Self {
        Self { image: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (1..=n).collect() }
    }

    pub(crate) fn from_raw(image: Vec<usize>) -> Self {
        Self { image }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `f(i)` for `1 <= i <= n`, `None` off the domain.
    pub fn apply(&self, i: usize) -> Option<usize> {
        match self.image[i - 1] {
            0 => None,
            v => Some(v),
        }
    }

    /// Size of the domain, i.e. the number of rooks in the matrix picture.
    pub fn rank(&self) -> usize {
        self.image.iter().filter(|&&v| v != 0).count()
    }

    pub fn domain(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.image[i - 1] != 0).collect()
    }

    /// Number of distinct values `|f(A)|`.
    pub fn image_size(&self) -> usize {
        let mut seen = vec![false; self.n() + 1];
        let mut count = 0;
        for &v in &self.image {
            if v != 0 && !seen[v] {
                seen[v] = true;
                count += 1;
            }
        }
        count
    }

    /// `(f ∘ g)(i) = f(g(i))` where both steps are defined.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if self.n() != g.n() {
            return Err(Error::SizeMismatch(self.n(), g.n()));
        }
        let image = g
            .image
            .iter()
            .map(|&gi| if gi == 0 { 0 } else { self.image[gi - 1] })
            .collect();
        Ok(Self { image })
    }

    pub fn power(&self, m: usize) -> Self {
        let mut acc = Self::identity(self.n());
        for _ in 0..m {
            acc = self.compose(&acc).expect("same size");
        }
        acc
    }

    /// Whether iterating from every point eventually leaves the domain,
    /// i.e. the functional digraph has no directed cycle.
    pub fn is_nilpotent(&self) -> bool {
        // 0 = unseen, 1 = on the current path, 2 = known to terminate
        let n = self.n();
        let mut state = vec![0u8; n + 1];
        let mut path = Vec::new();
        for start in 1..=n {
            let mut x = start;
            while x != 0 && state[x] == 0 {
                state[x] = 1;
                path.push(x);
                x = self.image[x - 1];
            }
            if x != 0 && state[x] == 1 {
                return false;
            }
            for y in path.drain(..) {
                state[y] = 2;
            }
        }
        true
    }

    /// The 0/1 matrix with a one in row `f(j)`, column `j`; composition of
    /// maps becomes matrix multiplication.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut m = vec![vec![0u8; n]; n];
        for (j, &v) in self.image.iter().enumerate() {
            if v != 0 {
                m[v - 1][j] = 1;
            }
        }
        m
    }
}

impl fmt::Display for PartialTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.image)
    }
}

impl fmt::Debug for PartialTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PartialTransformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

impl<'de> Deserialize<'de> for PartialTransformation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            image: Vec<usize>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.n != raw.image.len() {
            return Err(serde::de::Error::custom(format!(
                "n = {} but image has {} entries",
                raw.n,
                raw.image.len()
            )));
        }
        Self::new(raw.image).map_err(serde::de::Error::custom)
    }
}

/// JSON object form `{"n":3,"image":[...]}`.
pub fn to_json(f: &PartialTransformation) -> serde_json::Value {
    serde_json::json!({ "n": f.n(), "image": f.image })
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    f.write_str("[")?;
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("]")
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected bracketed list: {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
        })
        .collect()
}

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(format!("{image:?}")));
            }
            seen[v] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (1..=n).collect() }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (1..=n).collect();
        image.swap(a - 1, b - 1);
        Self { image }
    }

    /// The fixed representative of a cycle type: cycles in decreasing length
    /// order filled with consecutive integers, e.g. `(3,2,1) -> (123)(45)(6)`.
    pub fn of_cycle_type(rho: &Partition) -> Self {
        let n = rho.weight();
        let mut image = vec![0; n];
        let mut start = 1;
        for &len in rho.parts() {
            for i in 0..len {
                let from = start + i;
                let to = start + (i + 1) % len;
                image[from - 1] = to;
            }
            start += len;
        }
        Self { image }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(Self { image: other.image.iter().map(|&j| self.image[j - 1]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v - 1] = i + 1;
        }
        Self { image }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut lens = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x - 1];
                len += 1;
            }
            lens.push(len);
        }
        Partition::new(lens).expect("cycle lengths are positive")
    }

    /// Whether `w f w⁻¹ = f`, checked pointwise as `f(w(i)) = w(f(i))`.
    pub fn commutes_with(&self, f: &PartialTransformation) -> bool {
        (1..=self.n()).all(|i| {
            let lhs = f.image[self.image[i - 1] - 1];
            let fi = f.image[i - 1];
            let rhs = if fi == 0 { 0 } else { self.image[fi - 1] };
            lhs == rhs
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.image)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut image: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { image: image.clone() });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| image[i - 1] < image[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| image[j] > image[i - 1]).unwrap();
        image.swap(i - 1, j);
        image[i..].reverse();
    }
    out
}

/// `w f w⁻¹`: relabels both the points and the values of `f` by `w`.
pub fn conjugate_action(w: &Permutation, f: &PartialTransformation) -> Result<PartialTransformation> {
    if w.n() != f.n() {
        return Err(Error::SizeMismatch(w.n(), f.n()));
    }
    let mut image = vec![0; f.n()];
    for (i, &fi) in f.image.iter().enumerate() {
        if fi != 0 {
            image[w.image[i] - 1] = w.image[fi - 1];
        }
    }
    Ok(PartialTransformation { image })
}

/// Depth-first enumeration of nilpotent `k`-file placements on `[n]`,
/// optionally restricted to those starting with a fixed prefix.
///
/// Values are tried in increasing order at each position, so the output is
/// lexicographic in one-line notation. A candidate value is rejected as soon
/// as it would close a cycle through the already assigned entries.
#[derive(Clone, Debug)]
pub struct NilpotentPlacements {
    n: usize,
    k: usize,
    fixed: usize,
    image: Vec<usize>,
    next: Vec<usize>,
    pos: usize,
    rank: usize,
    done: bool,
}

impl NilpotentPlacements {
    pub fn new(n: usize, k: usize) -> Self {
        Self::with_prefix(n, k, &[])
    }

    /// Restricts the search to maps whose first entries equal `prefix`.
    /// An inadmissible prefix gives an empty stream.
    pub fn with_prefix(n: usize, k: usize, prefix: &[usize]) -> Self {
        let mut it = Self {
            n,
            k,
            fixed: prefix.len(),
            image: vec![0; n],
            next: vec![0; n + 1],
            pos: prefix.len(),
            rank: 0,
            done: n == 0 || k >= n || prefix.len() > n,
        };
        if !it.done {
            for (p, &v) in prefix.iter().enumerate() {
                if !it.admissible(p, v) {
                    it.done = true;
                    break;
                }
                it.image[p] = v;
                if v != 0 {
                    it.rank += 1;
                }
            }
        }
        it
    }

    /// Admissible prefixes of length `depth`; the streams started from them
    /// partition the full stream.
    pub fn prefixes(n: usize, k: usize, depth: usize) -> Vec<Vec<usize>> {
        let depth = depth.min(n);
        let mut out = Vec::new();
        if n == 0 || k >= n {
            return out;
        }
        let mut probe = Self::with_prefix(n, k, &[]);
        probe.collect_prefixes(0, depth, &mut out);
        out
    }

    fn collect_prefixes(&mut self, p: usize, depth: usize, out: &mut Vec<Vec<usize>>) {
        if p == depth {
            out.push(self.image[..depth].to_vec());
            return;
        }
        for v in 0..=self.n {
            if self.admissible(p, v) {
                self.image[p] = v;
                self.rank += usize::from(v != 0);
                self.collect_prefixes(p + 1, depth, out);
                self.rank -= usize::from(v != 0);
                self.image[p] = 0;
            }
        }
    }

    fn admissible(&self, p: usize, v: usize) -> bool {
        let remaining = self.n - p - 1;
        if v == 0 {
            return self.rank + remaining >= self.k;
        }
        if v > self.n || v == p + 1 || self.rank >= self.k {
            return false;
        }
        // entries at positions >= p are still 0, so this walk only follows
        // assigned edges and terminates
        let mut x = v;
        while x != 0 {
            if x == p + 1 {
                return false;
            }
            x = self.image[x - 1];
        }
        true
    }

    fn clear(&mut self, p: usize) {
        if self.image[p] != 0 {
            self.image[p] = 0;
            self.rank -= 1;
        }
    }

    fn retreat(&mut self) {
        if self.pos == self.fixed {
            self.done = true;
        } else {
            self.pos -= 1;
        }
    }
}

impl Iterator for NilpotentPlacements {
    type Item = PartialTransformation;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.done {
                return None;
            }
            if self.pos == self.n {
                let out = PartialTransformation { image: self.image.clone() };
                self.retreat();
                return Some(out);
            }
            let p = self.pos;
            self.clear(p);
            let mut placed = false;
            while self.next[p] <= self.n {
                let v = self.next[p];
                self.next[p] += 1;
                if self.admissible(p, v) {
                    self.image[p] = v;
                    self.rank += usize::from(v != 0);
                    placed = true;
                    break;
                }
            }
            if placed {
                self.pos += 1;
                self.next[self.pos] = 0;
            } else {
                self.next[p] = 0;
                self.retreat();
            }
        }
    }
}

/// Every element of `C_{k,n}` exactly once, lexicographically.
pub fn enumerate_nilpotent(n: usize, k: usize) -> NilpotentPlacements {
    NilpotentPlacements::new(n, k)
}

/// `|C_{k,n}| = C(n-1, k) n^k`.
pub fn count_nilpotent(n: usize, k: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(0u32);
    }
    binomial(n - 1, k) * BigUint::from(n).pow(k as u32)
}

/// Counts `C_{k,n}` by walking the enumeration, split across worker
/// threads by prefix.
pub fn count_nilpotent_by_enumeration(n: usize, k: usize) -> u64 {
    let depth = if n > 5 { 2 } else { 0 };
    NilpotentPlacements::prefixes(n, k, depth)
        .par_iter()
        .map(|pre| NilpotentPlacements::with_prefix(n, k, pre).count() as u64)
        .sum()
}

/// The closed form `C(n, r) S(n, r+1) r!` for partial transformations with
/// image size `r`.
pub fn count_by_image_size(n: usize, r: usize) -> BigUint {
    binomial(n, r) * stirling2(n, r + 1) * factorial(r)
}

/// One row of the image-size census: the closed form next to brute-force
/// counts over all `(n+1)^n` partial maps and over the nilpotent ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageSizeCensus {
    pub n: usize,
    pub r: usize,
    pub closed_form: u64,
    pub all_maps: u64,
    pub nilpotent_maps: u64,
}

impl ImageSizeCensus {
    pub fn matches_all_maps(&self) -> bool {
        self.closed_form == self.all_maps
    }

    pub fn matches_nilpotent_maps(&self) -> bool {
        self.closed_form == self.nilpotent_maps
    }
}

/// Brute-force census of image sizes over every partial map on `[n]`.
pub fn image_size_census(n: usize) -> Vec<ImageSizeCensus> {
    let mut all = vec![0u64; n + 1];
    let mut nil = vec![0u64; n + 1];
    let mut image = vec![0usize; n];
    loop {
        let f = PartialTransformation { image: image.clone() };
        let r = f.image_size();
        all[r] += 1;
        if f.is_nilpotent() {
            nil[r] += 1;
        }
        // odometer over {0..n}^n
        let mut i = 0;
        while i < n && image[i] == n {
            image[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        image[i] += 1;
    }
    (0..=n)
        .map(|r| ImageSizeCensus {
            n,
            r,
            closed_form: u64::try_from(count_by_image_size(n, r)).expect("small n"),
            all_maps: all[r],
            nilpotent_maps: nil[r],
        })
        .collect()
}
