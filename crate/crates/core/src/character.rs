//! Class functions on the symmetric group, the irreducible character table,
//! and the fixed-point characters of the conjugation action on nilpotent
//! partial transformations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::transform::{NilpotentPlacements, Permutation};

/// The irreducible characters of `S_n`, rows and columns both indexed by
/// `partitions_of(n)`.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    // values[lambda][rho]
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lambda| partitions.iter().map(|rho| mn(lambda.parts(), rho.parts(), &mut memo)).collect())
            .collect();
        Self { n, partitions, index, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^λ(ρ)`. Panics if either partition has the wrong weight.
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[rho]]
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }
}

type MnMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// Murnaghan–Nakayama: strip a rim hook of length `rho[0]` in every possible
/// way, using beta-sets so that a rim hook is a single bead sliding down.
fn mn(lambda: &[usize], rho: &[usize], memo: &mut MnMemo) -> i64 {
    if rho.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = rho[0];
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&shape, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

fn tables() -> &'static RwLock<HashMap<usize, Arc<CharacterTable>>> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// The character table of `S_n`, built once per `n` and shared.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    if let Some(t) = tables().read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(CharacterTable::build(n));
    let mut guard = tables().write().unwrap();
    Arc::clone(guard.entry(n).or_insert(built))
}

/// A rational-valued function on the conjugacy classes of `S_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    /// Every cycle type of `S_n` must appear exactly once.
    pub fn new(n: usize, values: BTreeMap<Partition, BigRational>) -> Result<Self> {
        let expected = partitions_of(n);
        if values.len() != expected.len() || expected.iter().any(|p| !values.contains_key(p)) {
            return Err(Error::InvalidArgument(format!("class function on S_{n} needs one value per cycle type")));
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> BigRational) -> Self {
        let values = partitions_of(n).into_iter().map(|p| {
            let v = f(&p);
            (p, v)
        });
        Self { n, values: values.collect() }
    }

    pub fn from_integers(n: usize, mut f: impl FnMut(&Partition) -> BigInt) -> Self {
        Self::from_fn(n, |p| BigRational::from_integer(f(p)))
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| BigRational::zero())
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| BigRational::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, rho: &Partition) -> Option<&BigRational> {
        self.values.get(rho)
    }

    pub fn values(&self) -> &BTreeMap<Partition, BigRational> {
        &self.values
    }

    /// The value at the identity.
    pub fn degree(&self) -> BigRational {
        self.values[&Partition::column(self.n)].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Zero::is_zero)
    }

    fn zip(&self, other: &Self, op: impl Fn(&BigRational, &BigRational) -> BigRational) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let values = self.values.iter().map(|(p, a)| (p.clone(), op(a, &other.values[p]))).collect();
        Ok(Self { n: self.n, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product (the inner tensor product of representations).
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { n: self.n, values: self.values.iter().map(|(p, v)| (p.clone(), v * c)).collect() }
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, v)) in self.values.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{p}: {v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.values.iter().map(|(p, v)| (p.to_string(), v.to_string()))).finish()
    }
}

/// `χ^λ` as a class function.
pub fn irreducible_character(lambda: &Partition) -> ClassFunction {
    let n = lambda.weight();
    let table = character_table(n);
    let row = table.row(lambda);
    let values = table
        .partitions()
        .iter()
        .zip(row)
        .map(|(p, &v)| (p.clone(), BigRational::from_integer(v.into())))
        .collect();
    ClassFunction { n, values }
}

/// `(1/n!) Σ_ρ (n!/z_ρ) α(ρ) β(ρ)`.
pub fn inner_product(alpha: &ClassFunction, beta: &ClassFunction) -> Result<BigRational> {
    if alpha.n != beta.n {
        return Err(Error::SizeMismatch(alpha.n, beta.n));
    }
    Ok(alpha
        .values
        .iter()
        .map(|(rho, a)| a * &beta.values[rho] / BigRational::from_integer(BigInt::from(rho.z())))
        .sum())
}

/// Multiplicities of irreducibles in a genuine representation. Only nonzero
/// multiplicities are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IrredDecomposition {
    n: usize,
    mults: BTreeMap<Partition, BigUint>,
}

impl IrredDecomposition {
    pub fn new(n: usize, mults: impl IntoIterator<Item = (Partition, BigUint)>) -> Result<Self> {
        let mut out = Self { n, mults: BTreeMap::new() };
        for (p, m) in mults {
            if p.weight() != n {
                return Err(Error::SizeMismatch(n, p.weight()));
            }
            if !m.is_zero() {
                *out.mults.entry(p).or_default() += m;
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Multiplicity of `V_λ`, zero when absent.
    pub fn get(&self, lambda: &Partition) -> BigUint {
        self.mults.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero multiplicities in partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.mults.iter()
    }

    /// Every partition of `n` with its multiplicity, zeros included.
    pub fn dense(&self) -> Vec<(Partition, BigUint)> {
        partitions_of(self.n).into_iter().map(|p| {
            let m = self.get(&p);
            (p, m)
        }).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// `Σ mult(λ) dim V_λ`.
    pub fn degree(&self) -> BigUint {
        let table = character_table(self.n);
        let identity = Partition::column(self.n);
        self.mults
            .iter()
            .map(|(p, m)| m * BigUint::from(table.value(p, &identity) as u64))
            .sum()
    }

    pub fn character(&self) -> ClassFunction {
        let mut acc = ClassFunction::zero(self.n);
        for (p, m) in &self.mults {
            let scaled = irreducible_character(p).scale(&BigRational::from_integer(BigInt::from(m.clone())));
            acc = acc.add(&scaled).expect("same n");
        }
        acc
    }

    /// `[{"partition":[4,2],"mult":35}, ...]`, nonzero entries only.
    pub fn to_json(&self) -> Vec<DecompositionEntry> {
        self.mults
            .iter()
            .map(|(p, m)| DecompositionEntry { partition: p.clone(), mult: m.clone() })
            .collect()
    }

    pub fn from_json(n: usize, entries: &[DecompositionEntry]) -> Result<Self> {
        Self::new(n, entries.iter().map(|e| (e.partition.clone(), e.mult.clone())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionEntry {
    pub partition: Partition,
    #[serde(with = "biguint_number")]
    pub mult: BigUint,
}

/// Serializes a `BigUint` as a plain JSON number of any size.
pub(crate) mod biguint_number {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        let number: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
        serde::Serialize::serialize(&number, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let number = serde_json::Number::deserialize(d)?;
        number.to_string().parse().map_err(|_| D::Error::custom(format!("not a nonnegative integer: {number}")))
    }
}

/// `V[4]^3 V[3,1]^6 V[2,2]`; `0` for the empty decomposition.
impl fmt::Display for IrredDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, m)) in self.mults.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "V{p}")?;
            if !m.is_one() {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IrredDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IrredDecomposition(n={}, {self})", self.n)
    }
}

/// Multiplicities `⟨χ^λ, α⟩` of a virtual character, as integers.
pub fn decompose_virtual(alpha: &ClassFunction) -> Result<BTreeMap<Partition, BigInt>> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(alpha.n) {
        let m = inner_product(&irreducible_character(&lambda), alpha)?;
        if !m.is_integer() {
            return Err(Error::NonIntegerMultiplicity { partition: lambda.to_string(), value: m.to_string() });
        }
        if !m.is_zero() {
            out.insert(lambda, m.to_integer());
        }
    }
    Ok(out)
}

/// Decomposes a character into irreducibles. Non-integer or negative
/// multiplicities are integrity errors.
pub fn decompose(alpha: &ClassFunction) -> Result<IrredDecomposition> {
    let mut mults = Vec::new();
    for (lambda, m) in decompose_virtual(alpha)? {
        if m.is_negative() {
            return Err(Error::NegativeMultiplicity { partition: lambda.to_string(), value: m.to_string() });
        }
        mults.push((lambda, m.to_biguint().expect("nonnegative")));
    }
    IrredDecomposition::new(alpha.n, mults)
}

/// The number of elements of `C_{k,n}` commuting with a fixed permutation of
/// each cycle type, by walking the enumeration once.
pub fn fixed_point_character(n: usize, k: usize) -> Result<ClassFunction> {
    if n == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("need 0 <= k < n, got n = {n}, k = {k}")));
    }
    let classes = partitions_of(n);
    let reps: Vec<Permutation> = classes.iter().map(Permutation::of_cycle_type).collect();
    let depth = if n > 5 { 2 } else { 0 };
    let counts = NilpotentPlacements::prefixes(n, k, depth)
        .par_iter()
        .map(|prefix| {
            let mut counts = vec![0u64; reps.len()];
            for f in NilpotentPlacements::with_prefix(n, k, prefix) {
                for (c, w) in counts.iter_mut().zip(&reps) {
                    if w.commutes_with(&f) {
                        *c += 1;
                    }
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; reps.len()],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let values = classes
        .into_iter()
        .zip(counts)
        .map(|(p, c)| (p, BigRational::from_integer(c.into())))
        .collect();
    Ok(ClassFunction { n, values })
}

/// `Σ_k` of the fixed-point characters: the character of all nilpotent maps.
pub fn total_fixed_point_character(n: usize) -> Result<ClassFunction> {
    (0..n).try_fold(ClassFunction::zero(n), |acc, k| acc.add(&fixed_point_character(n, k)?))
}

/// Dimension of `V_λ`.
pub fn irreducible_dimension(lambda: &Partition) -> BigUint {
    let n = lambda.weight();
    BigUint::from(character_table(n).value(lambda, &Partition::column(n)) as u64)
}

/// Converts a rational known to be a small integer.
#[cfg(test)]
fn as_i64(v: &BigRational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if v.is_integer() {
        v.to_integer().to_i64()
    } else {
        None
    }
}
