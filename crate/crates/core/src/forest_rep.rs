//! Representations attached to oduns: the Frobenius characteristic of each
//! conjugation orbit, the characters of the strata `C_{k,n}`, sign
//! multiplicities, dimensions and the rook (chain forest) specialization.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{decompose, fixed_point_character, ClassFunction, IrredDecomposition};
use crate::counting::factorial;
use crate::error::{Error, Result};
use crate::forest::{labeled_representative, transformation_of};
use crate::odun::{enumerate_oduns, has_only_even_symmetries, Odun, RootedTree};
use crate::partition::{partitions_with_parts, Partition};
use crate::symfunc::{inverse_frobenius_of_degree, SymFunc, SymFuncJson};
use crate::transform::{all_permutations, conjugate_action};

fn cache() -> &'static RwLock<HashMap<String, SymFunc>> {
    static CACHE: OnceLock<RwLock<HashMap<String, SymFunc>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(code: &str, compute: impl FnOnce() -> SymFunc) -> SymFunc {
    if let Some(f) = cache().read().unwrap().get(code) {
        return f.clone();
    }
    let f = compute();
    // a concurrent insert computed the same value
    cache().write().unwrap().entry(code.to_string()).or_insert_with(|| f.clone());
    f
}

/// `∏ over groups of m isomorphic pieces of h_m ∘ F_piece`.
fn grouped_product<'a>(groups: impl IntoIterator<Item = (&'a RootedTree, usize)>) -> SymFunc {
    groups.into_iter().fold(SymFunc::one(), |acc, (t, m)| {
        let f = frobenius_of_tree(t);
        acc.mul(&SymFunc::h(m).plethysm(&f).expect("tree characteristics have no constant term"))
    })
}

/// `F_t = s_1 · ∏ h_m ∘ F_c` over the distinct child subtrees `c` of the
/// root, each occurring `m` times.
pub fn frobenius_of_tree(t: &RootedTree) -> SymFunc {
    cached(t.code(), || SymFunc::p_k(1).mul(&grouped_product(t.child_groups())))
}

/// The Frobenius characteristic of the conjugation orbit with underlying
/// forest `o`: `∏ h_m ∘ F_t` over distinct component trees.
pub fn frobenius_of_odun(o: &Odun) -> SymFunc {
    match o.tree_groups().as_slice() {
        [(t, 1)] => frobenius_of_tree(t),
        _ => cached(&o.code(), || grouped_product(o.tree_groups())),
    }
}

/// Number of cached characteristics.
pub fn frobenius_cache_len() -> usize {
    cache().read().unwrap().len()
}

/// Serialized form of the characteristic cache, keyed by canonical string.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCacheJson {
    pub entries: BTreeMap<String, SymFuncJson>,
}

pub fn export_frobenius_cache() -> FrobeniusCacheJson {
    let guard = cache().read().unwrap();
    FrobeniusCacheJson {
        entries: guard
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json(crate::symfunc::Basis::P)))
            .collect(),
    }
}

/// Validates and loads cache entries, returning how many were added. Each
/// key must be a canonical odun string and each value must have the right
/// degree and dimension.
pub fn import_frobenius_cache(json: &FrobeniusCacheJson) -> Result<usize> {
    let mut checked = Vec::with_capacity(json.entries.len());
    for (code, value) in &json.entries {
        let o: Odun = code.parse()?;
        if o.code() != *code {
            return Err(Error::Integrity(format!("cache key {code:?} is not canonical")));
        }
        let f = SymFunc::from_json(value)?;
        let n = o.vertex_count();
        if f.degree() != Some(n) || f.hall_inner_product(&SymFunc::p_k(1).pow(n)) != rat(dimension_of_odun(&o)) {
            return Err(Error::Integrity(format!("cache entry for {code} has the wrong degree or dimension")));
        }
        checked.push((code.clone(), f));
    }
    let mut guard = cache().write().unwrap();
    let mut added = 0;
    for (code, f) in checked {
        if let std::collections::hash_map::Entry::Vacant(e) = guard.entry(code) {
            e.insert(f);
            added += 1;
        }
    }
    Ok(added)
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// An orbit together with everything computed about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdunRepresentation {
    pub odun: Odun,
    pub frobenius: SymFunc,
    pub decomposition: IrredDecomposition,
    pub dimension: BigUint,
}

pub fn odun_representation(o: &Odun) -> Result<OdunRepresentation> {
    let frobenius = frobenius_of_odun(o);
    let n = o.vertex_count();
    let decomposition = decompose(&inverse_frobenius_of_degree(&frobenius, n)?)?;
    let dimension = dimension_of_odun(o);
    if decomposition.degree() != dimension {
        return Err(Error::Integrity(format!("dimension of {o} disagrees with its decomposition")));
    }
    Ok(OdunRepresentation { odun: o.clone(), frobenius, decomposition, dimension })
}

/// `Σ F_o` over forests on `n` vertices with `n - k` components.
pub fn frobenius_of_ckn(n: usize, k: usize) -> Result<SymFunc> {
    check_stratum(n, k)?;
    let oduns = enumerate_oduns(n, Some(n - k));
    Ok(oduns
        .par_iter()
        .map(frobenius_of_odun)
        .reduce(SymFunc::zero, |a, b| a.add(&b)))
}

/// The character of `C_{k,n}` assembled from its orbits.
pub fn character_of_ckn(n: usize, k: usize) -> Result<ClassFunction> {
    inverse_frobenius_of_degree(&frobenius_of_ckn(n, k)?, n)
}

fn check_stratum(n: usize, k: usize) -> Result<()> {
    if n == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("need 0 <= k < n, got n = {n}, k = {k}")));
    }
    Ok(())
}

/// How a stratum's character is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Counting fixed points over the enumeration.
    FixedPoint,
    /// Summing orbit characteristics.
    Plethysm,
}

pub fn stratum_character(n: usize, k: usize, method: Method) -> Result<ClassFunction> {
    match method {
        Method::FixedPoint => fixed_point_character(n, k),
        Method::Plethysm => character_of_ckn(n, k),
    }
}

pub fn decompose_ckn(n: usize, k: usize, method: Method) -> Result<IrredDecomposition> {
    decompose(&stratum_character(n, k, method)?)
}

/// Multiplicity of the sign representation in the orbit of `o`, read from
/// the symmetries of the forest: it is 1 exactly when every relabeling
/// that fixes the forest is an even permutation.
pub fn sign_multiplicity(o: &Odun) -> u8 {
    u8::from(has_only_even_symmetries(o))
}

/// `⟨F_o, e_n⟩`, the same multiplicity read off the characteristic.
pub fn sign_multiplicity_by_coefficient(o: &Odun) -> BigRational {
    frobenius_of_odun(o).hall_inner_product(&SymFunc::e(o.vertex_count()))
}

/// Sign multiplicity in each stratum `C_{k,n}`, `k = 0..n`.
pub fn sign_by_stratum(n: usize) -> Vec<usize> {
    (0..n)
        .map(|k| enumerate_oduns(n, Some(n - k)).iter().filter(|o| sign_multiplicity(o) == 1).count())
        .collect()
}

/// Same as [`sign_by_stratum`], from the Schur expansion of each stratum.
pub fn sign_by_stratum_by_coefficient(n: usize) -> Result<Vec<BigRational>> {
    let e = SymFunc::e(n);
    (0..n).map(|k| Ok(frobenius_of_ckn(n, k)?.hall_inner_product(&e))).collect()
}

/// Sign multiplicity in all of `C_n`.
pub fn total_sign_multiplicity(n: usize) -> usize {
    sign_by_stratum(n).into_iter().sum()
}

/// Sign multiplicity in the top stratum `C_{n-1,n}`, whose orbits are the
/// rooted trees on `n` vertices.
pub fn sign_in_top_stratum(n: usize) -> usize {
    enumerate_oduns(n, Some(1)).iter().filter(|o| sign_multiplicity(o) == 1).count()
}

/// `n! / ∏_a ∏_b m(a;b)!`, where `a` runs over the vertices and a common
/// root above all components, and `m(a;b)` counts the children of `a`
/// isomorphic to `b`. This is the number of distinct labelings of `o`.
pub fn dimension_of_odun(o: &Odun) -> BigUint {
    fn symmetry(groups: &[(&RootedTree, usize)]) -> BigUint {
        groups.iter().fold(BigUint::one(), |acc, (t, m)| acc * factorial(*m) * symmetry(&t.child_groups()).pow(*m as u32))
    }
    factorial(o.vertex_count()) / symmetry(&o.tree_groups())
}

/// Size of the conjugation orbit of a labeling of `o`, by applying every
/// permutation. Exponential; meant for small cross-checks.
pub fn orbit_size_by_enumeration(o: &Odun) -> usize {
    let f = transformation_of(&labeled_representative(o));
    all_permutations(o.vertex_count())
        .iter()
        .map(|w| conjugate_action(w, &f).expect("same size"))
        .collect::<HashSet<_>>()
        .len()
}

/// The orbits of injective nilpotent maps with `parts` chains, summed:
/// `Σ_λ ∏_i h_{m_i} ∘ p_1^i` over partitions of `n` with `parts` parts,
/// `m_i` the number of parts equal to `i`.
pub fn rook_frobenius(n: usize, parts: usize) -> Result<SymFunc> {
    if parts == 0 || parts > n {
        return Err(Error::InvalidArgument(format!("need 1 <= parts <= n, got n = {n}, parts = {parts}")));
    }
    Ok(partitions_with_parts(n, parts).iter().map(chain_forest_frobenius).fold(SymFunc::zero(), |a, b| a.add(&b)))
}

/// `∏_i h_{m_i} ∘ p_1^i` for the chain forest with chain lengths `lambda`.
pub fn chain_forest_frobenius(lambda: &Partition) -> SymFunc {
    lambda.multiplicities().fold(SymFunc::one(), |acc, (i, m)| {
        acc.mul(&SymFunc::h(m).plethysm(&SymFunc::p_k(1).pow(i)).expect("p_1^i has no constant term"))
    })
}

/// Partitions of `n` into `parts` parts whose repeated parts are all even.
pub fn rook_sign_count(n: usize, parts: usize) -> usize {
    partitions_with_parts(n, parts)
        .iter()
        .filter(|l| l.multiplicities().all(|(i, m)| m == 1 || i % 2 == 0))
        .count()
}

/// `V_(n) ⊕ V_(n-1,1)^2 ⊕ V_(n-2,2) ⊕ V_(n-2,1,1)`.
pub fn c1n_closed_form(n: usize) -> Result<IrredDecomposition> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("closed form needs n >= 4, got {n}")));
    }
    let p = |parts: Vec<usize>| Partition::new(parts).expect("positive parts");
    IrredDecomposition::new(
        n,
        [
            (p(vec![n]), BigUint::one()),
            (p(vec![n - 1, 1]), BigUint::from(2u32)),
            (p(vec![n - 2, 2]), BigUint::one()),
            (p(vec![n - 2, 1, 1]), BigUint::one()),
        ],
    )
}

/// Decomposes `C_{1,n}` through its orbits and compares with the closed
/// form, failing with an integrity error on any difference.
pub fn proposition_check_c1n(n: usize) -> Result<IrredDecomposition> {
    let expected = c1n_closed_form(n)?;
    let computed = decompose_ckn(n, 1, Method::Plethysm)?;
    if computed != expected {
        return Err(Error::Integrity(format!("C(1,{n}) is {computed}, closed form gives {expected}")));
    }
    Ok(computed)
}

/// `C_{2,n}` from its three orbit types: a 3-chain, a cherry, or two
/// 2-chains, each with isolated vertices added.
pub fn c2n_from_orbits(n: usize) -> Result<SymFunc> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("need n >= 4, got {n}")));
    }
    let chain3 = SymFunc::p_k(1).pow(3);
    let cherry: SymFunc = "s[3] + s[2,1]".parse()?;
    let two_chains = SymFunc::h(2).plethysm(&SymFunc::p_k(1).pow(2))?;
    Ok(chain3.add(&cherry).mul(&SymFunc::h(n - 3)).add(&two_chains.mul(&SymFunc::h(n - 4))))
}

/// The same expression with the cherry term as printed in the source
/// example, `s[2,1] + s[1,1,1]`, kept to show that it is inconsistent.
pub fn c2n_with_printed_cherry(n: usize) -> Result<SymFunc> {
    let printed: SymFunc = "s[2,1] + s[1,1,1]".parse()?;
    let correct: SymFunc = "s[3] + s[2,1]".parse()?;
    Ok(c2n_from_orbits(n)?.add(&printed.sub(&correct).mul(&SymFunc::h(n - 3))))
}

/// `Σ_k F` over all strata: the characteristic of the whole of `C_n`.
pub fn frobenius_of_cn(n: usize) -> Result<SymFunc> {
    (0..n).try_fold(SymFunc::zero(), |acc, k| Ok(acc.add(&frobenius_of_ckn(n, k)?)))
}

/// Trivial multiplicity of each orbit is 1, so this counts the oduns.
pub fn trivial_multiplicity(f: &SymFunc, n: usize) -> BigRational {
    f.hall_inner_product(&SymFunc::h(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::odun::is_blossoming;
    use crate::symfunc::Basis;

    fn odun(s: &str) -> Odun {
        s.parse().unwrap()
    }

    fn sf(s: &str) -> SymFunc {
        s.parse().unwrap()
    }

    #[test]
    fn small_characteristics() {
        assert_eq!(frobenius_of_odun(&odun("()")), sf("s[1]"));
        assert_eq!(frobenius_of_odun(&odun("((()))")), SymFunc::p_k(1).pow(3));
        assert_eq!(frobenius_of_odun(&odun("((()))")).to_string(), "s[3] + 2*s[2,1] + s[1,1,1]");
        assert_eq!(frobenius_of_odun(&odun("(())(())")).to_string(), "s[4] + s[3,1] + 2*s[2,2] + s[2,1,1] + s[1,1,1,1]");
        assert_eq!(frobenius_of_odun(&odun("(()())")).to_string(), "s[3] + s[2,1]");
        assert_eq!(frobenius_of_odun(&Odun::empty()), SymFunc::one());
        assert!(frobenius_cache_len() > 0);
    }

    #[test]
    fn cherry_matches_its_fixed_points() {
        // orbit {[0,1,1],[2,0,2],[3,3,0]}: fixed by the identity (3), by one
        // transposition each (1), by no 3-cycle (0)
        let f = frobenius_of_odun(&odun("(()())"));
        let chi = inverse_frobenius_of_degree(&f, 3).unwrap();
        let vals: Vec<String> = chi.values().values().map(ToString::to_string).collect();
        assert_eq!(vals, vec!["0", "1", "3"]);
    }

    #[test]
    fn n3_strata() {
        let fp = fixed_point_character(3, 2).unwrap();
        assert_eq!(character_of_ckn(3, 2).unwrap(), fp);
        assert_eq!(decompose_ckn(3, 2, Method::Plethysm).unwrap().to_string(), "V[3]^2 V[2,1]^3 V[1,1,1]");
        assert_eq!(character_of_ckn(5, 0).unwrap(), ClassFunction::trivial(5));
        assert!(character_of_ckn(3, 3).is_err());
    }

    #[test]
    fn plethysm_path_matches_fixed_points() {
        for n in 1..=5 {
            for k in 0..n {
                assert_eq!(character_of_ckn(n, k).unwrap(), fixed_point_character(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn sign_multiplicities() {
        assert_eq!(sign_multiplicity(&odun("(())(())")), 1);
        assert_eq!(sign_multiplicity(&odun("(()())")), 0);
        assert_eq!(sign_multiplicity(&odun("((())(()))")), 1);
        for n in 1..=7 {
            for o in enumerate_oduns(n, None) {
                assert_eq!(rat(sign_multiplicity(&o)), sign_multiplicity_by_coefficient(&o), "{o}");
            }
        }
        assert_eq!(sign_by_stratum(5), vec![0, 0, 1, 3, 4]);
        assert_eq!(total_sign_multiplicity(3), 2);
        assert_eq!(sign_in_top_stratum(6), 8);
        let by_coeff: Vec<BigRational> = sign_by_stratum_by_coefficient(5).unwrap();
        assert_eq!(by_coeff, [0, 0, 1, 3, 4].map(rat).to_vec());
    }

    #[test]
    fn twin_odd_subtrees_kill_the_sign() {
        let twin = Odun::chains(&[2, 2]).add_root();
        let o = Odun::from_trees(vec![twin.clone(), twin]);
        assert!(is_blossoming(&o));
        assert_eq!(sign_multiplicity(&o), 0);
        assert_eq!(sign_multiplicity_by_coefficient(&o), rat(0));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension_of_odun(&Odun::chains(&[5])), factorial(5));
        assert_eq!(dimension_of_odun(&Odun::chains(&[2, 1])), BigUint::from(6u32));
        assert_eq!(dimension_of_odun(&Odun::chains(&[2, 2])), BigUint::from(12u32));
        assert_eq!(dimension_of_odun(&odun("(()())")), BigUint::from(3u32));
        // each copy of a repeated subtree brings its own symmetries
        assert_eq!(dimension_of_odun(&odun("(()())(()())")), BigUint::from(90u32));
        assert_eq!(BigUint::from(orbit_size_by_enumeration(&odun("(()())(()())"))), BigUint::from(90u32));
        let p1 = |n: usize| SymFunc::p_k(1).pow(n);
        for n in 1..=5 {
            for o in enumerate_oduns(n, None) {
                let d = dimension_of_odun(&o);
                assert_eq!(rat(d.clone()), frobenius_of_odun(&o).hall_inner_product(&p1(n)));
                assert_eq!(BigUint::from(orbit_size_by_enumeration(&o)), d);
            }
        }
    }

    #[test]
    fn representation_record() {
        let r = odun_representation(&odun("(())(())")).unwrap();
        assert_eq!(r.dimension, BigUint::from(12u32));
        assert_eq!(r.decomposition.to_string(), "V[4] V[3,1] V[2,2]^2 V[2,1,1] V[1,1,1,1]");
    }

    #[test]
    fn rooks() {
        assert_eq!(rook_frobenius(3, 1).unwrap(), SymFunc::p_k(1).pow(3));
        assert_eq!(
            chain_forest_frobenius(&Partition::new(vec![2, 2]).unwrap()).to_text(Basis::S),
            "s[4] + s[3,1] + 2*s[2,2] + s[2,1,1] + s[1,1,1,1]"
        );
        assert_eq!(rook_sign_count(4, 2), 2);
        assert_eq!(rook_sign_count(2, 2), 0);
        for n in 1..=7 {
            for parts in 1..=n {
                let z = rook_frobenius(n, parts).unwrap();
                assert_eq!(trivial_multiplicity(&z, n), rat(partitions_with_parts(n, parts).len()));
                assert_eq!(z.hall_inner_product(&SymFunc::e(n)), rat(rook_sign_count(n, parts)));
                for lambda in partitions_with_parts(n, parts) {
                    let o = Odun::chains(lambda.parts());
                    assert_eq!(chain_forest_frobenius(&lambda), frobenius_of_odun(&o));
                }
            }
        }
        assert!(rook_frobenius(3, 0).is_err());
    }

    #[test]
    fn c1n_and_c2n() {
        for n in 4..=7 {
            proposition_check_c1n(n).unwrap();
            let c2 = frobenius_of_ckn(n, 2).unwrap();
            assert_eq!(c2n_from_orbits(n).unwrap(), c2);
            assert_ne!(c2n_with_printed_cherry(n).unwrap(), c2);
        }
        assert!(c1n_closed_form(3).is_err());
    }

    #[test]
    fn adding_a_root_to_everything() {
        // ch C_{n-1,n} = s_1 · Σ_k ch C_{k,n-1}
        for n in 2..=6 {
            let lower = frobenius_of_cn(n - 1).unwrap();
            assert_eq!(frobenius_of_ckn(n, n - 1).unwrap(), SymFunc::p_k(1).mul(&lower));
        }
    }

    #[test]
    fn cache_round_trip() {
        frobenius_of_odun(&odun("((())())"));
        let exported = export_frobenius_cache();
        assert!(exported.entries.contains_key("(()(()))"));
        assert_eq!(import_frobenius_cache(&exported).unwrap(), 0);
        let mut bad = FrobeniusCacheJson::default();
        bad.entries.insert("(()())".into(), SymFunc::p_k(1).pow(3).to_json(Basis::P));
        assert!(matches!(import_frobenius_cache(&bad), Err(Error::Integrity(_))));
        let mut noncanonical = FrobeniusCacheJson::default();
        noncanonical.entries.insert("((())())".into(), SymFunc::p_k(1).pow(4).to_json(Basis::P));
        assert!(matches!(import_frobenius_cache(&noncanonical), Err(Error::Integrity(_))));
    }
}
