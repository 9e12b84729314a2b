//! Symmetric functions with exact rational coefficients, stored in the
//! power-sum basis, with conversions to the Schur, monomial, complete and
//! elementary bases, products, plethysm and the Frobenius characteristic.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::character::{character_table, irreducible_character, inner_product, ClassFunction};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Largest weight accepted by the text and JSON parsers for the bases that
/// need a character table or a basis change (s, m, h, e).
pub const MAX_PARSE_WEIGHT: usize = 14;
/// Largest weight accepted for power sums, which cost nothing to build.
pub const MAX_PARSE_POWER_WEIGHT: usize = 256;

/// The bases the library reads and writes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    P,
    S,
    M,
    H,
    E,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::P => 'p',
            Basis::S => 's',
            Basis::M => 'm',
            Basis::H => 'h',
            Basis::E => 'e',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'p' => Basis::P,
            's' => Basis::S,
            'm' => Basis::M,
            'h' => Basis::H,
            'e' => Basis::E,
            _ => return None,
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        match (chars.next().and_then(Basis::from_letter), chars.next()) {
            (Some(b), None) => Ok(b),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// A symmetric function, kept as a finite combination of power sums `p_ρ`
/// with no zero coefficients. The empty partition indexes the constant term.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, BigRational>,
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn z_rat(rho: &Partition) -> BigRational {
    rat(BigInt::from(rho.z()))
}

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_terms([(Partition::empty(), c)])
    }

    /// Sums the given power-sum terms, dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    fn add_term(&mut self, p: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `p_ρ`.
    pub fn p(rho: &Partition) -> Self {
        Self::from_terms([(rho.clone(), BigRational::one())])
    }

    /// `p_k`; `p_0` is taken to be 1.
    pub fn p_k(k: usize) -> Self {
        Self::p(&Partition::row(k))
    }

    /// `s_λ = Σ_ρ z_ρ⁻¹ χ^λ_ρ p_ρ`.
    pub fn schur(lambda: &Partition) -> Self {
        static CACHE: OnceLock<RwLock<HashMap<Partition, SymFunc>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(s) = cache.read().unwrap().get(lambda) {
            return s.clone();
        }
        let table = character_table(lambda.weight());
        let s = Self::from_terms(
            table
                .partitions()
                .iter()
                .map(|rho| (rho.clone(), rat(table.value(lambda, rho)) / z_rat(rho))),
        );
        cache.write().unwrap().insert(lambda.clone(), s.clone());
        s
    }

    /// `h_n = s_(n)`.
    pub fn h(n: usize) -> Self {
        Self::schur(&Partition::row(n))
    }

    /// `e_n = s_(1^n)`.
    pub fn e(n: usize) -> Self {
        Self::schur(&Partition::column(n))
    }

    /// `h_λ = Π h_{λ_i}`.
    pub fn h_product(lambda: &Partition) -> Self {
        lambda.parts().iter().fold(Self::one(), |acc, &k| acc.mul(&Self::h(k)))
    }

    /// `e_λ = Π e_{λ_i}`.
    pub fn e_product(lambda: &Partition) -> Self {
        lambda.parts().iter().fold(Self::one(), |acc, &k| acc.mul(&Self::e(k)))
    }

    /// The monomial symmetric function `m_μ`, obtained by inverting the
    /// unitriangular relation `h`-pairing of power sums.
    pub fn monomial(mu: &Partition) -> Self {
        monomial_basis(mu.weight())[mu].clone()
    }

    /// The basis element of `basis` indexed by `lambda`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        match basis {
            Basis::P => Self::p(lambda),
            Basis::S => Self::schur(lambda),
            Basis::M => Self::monomial(lambda),
            Basis::H => Self::h_product(lambda),
            Basis::E => Self::e_product(lambda),
        }
    }

    /// Builds `Σ c_λ b_λ` from coefficients in any basis.
    pub fn from_basis(basis: Basis, coeffs: impl IntoIterator<Item = (Partition, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (lambda, c) in coeffs {
            if !c.is_zero() {
                out = out.add(&Self::basis_element(basis, &lambda).scale(&c));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Power-sum coefficients.
    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn p_coefficient(&self, rho: &Partition) -> BigRational {
        self.terms.get(rho).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.p_coefficient(&Partition::empty())
    }

    /// The common degree of all terms; `None` for zero or mixed elements.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Partition::weight);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_some()
    }

    /// The degree-`d` component.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        Self { terms: self.terms.iter().filter(|(p, _)| p.weight() == d).map(|(p, c)| (p.clone(), c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect() }
    }

    /// Product in the ring of symmetric functions: power-sum indices
    /// concatenate.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `ω`, the involution sending `p_ρ` to `ε_ρ p_ρ` and `s_λ` to `s_λ'`.
    pub fn omega(&self) -> Self {
        Self { terms: self.terms.iter().map(|(p, c)| (p.clone(), c * rat(p.sign()))).collect() }
    }

    /// `p_m ∘ g`: every power sum `p_k` in `g` becomes `p_{mk}`.
    fn dilate(&self, m: usize) -> Self {
        Self { terms: self.terms.iter().map(|(p, c)| (p.dilate(m), c.clone())).collect() }
    }

    /// The plethysm `f ∘ g`, determined by `p_m ∘ p_n = p_{mn}`, linearity
    /// and multiplicativity in `f`, and additivity and multiplicativity of
    /// `p_m ∘ (-)`. Rational coefficients of `g` are left alone. `g` must
    /// have no constant term.
    pub fn plethysm(&self, g: &Self) -> Result<Self> {
        if !g.constant_term().is_zero() {
            return Err(Error::ConstantTerm);
        }
        let mut powers: HashMap<usize, Self> = HashMap::new();
        let mut out = Self::zero();
        for (rho, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for &k in rho.parts() {
                let pk = powers.entry(k).or_insert_with(|| g.dilate(k));
                term = term.mul(pk);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// `⟨f, g⟩` with `⟨p_ρ, p_σ⟩ = z_ρ δ_ρσ`.
    pub fn hall_inner_product(&self, other: &Self) -> BigRational {
        let (small, large) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        small
            .terms
            .iter()
            .filter_map(|(p, c)| large.terms.get(p).map(|d| c * d * z_rat(p)))
            .sum()
    }

    /// Coefficients in the Schur basis: `[s_λ] f = Σ_ρ c_ρ χ^λ_ρ`.
    pub fn to_schur(&self) -> BTreeMap<Partition, BigRational> {
        let mut out = BTreeMap::new();
        for d in self.degrees() {
            let table = character_table(d);
            for lambda in table.partitions() {
                let c: BigRational = self
                    .terms
                    .iter()
                    .filter(|(rho, _)| rho.weight() == d)
                    .map(|(rho, c)| c * rat(table.value(lambda, rho)))
                    .sum();
                if !c.is_zero() {
                    out.insert(lambda.clone(), c);
                }
            }
        }
        out
    }

    /// Coefficients in the monomial basis: `[m_μ] f = ⟨f, h_μ⟩`.
    pub fn to_monomial(&self) -> BTreeMap<Partition, BigRational> {
        self.expand_against(SymFunc::h_product)
    }

    /// Coefficients in the complete basis: `[h_λ] f = ⟨f, m_λ⟩`.
    pub fn to_complete(&self) -> BTreeMap<Partition, BigRational> {
        self.expand_against(SymFunc::monomial)
    }

    /// Coefficients in the elementary basis: `[e_λ] f = ⟨ω f, m_λ⟩`.
    pub fn to_elementary(&self) -> BTreeMap<Partition, BigRational> {
        self.omega().to_complete()
    }

    /// Coefficients in `basis`.
    pub fn coefficients(&self, basis: Basis) -> BTreeMap<Partition, BigRational> {
        match basis {
            Basis::P => self.terms.clone(),
            Basis::S => self.to_schur(),
            Basis::M => self.to_monomial(),
            Basis::H => self.to_complete(),
            Basis::E => self.to_elementary(),
        }
    }

    fn expand_against(&self, dual: impl Fn(&Partition) -> SymFunc) -> BTreeMap<Partition, BigRational> {
        let mut out = BTreeMap::new();
        for d in self.degrees() {
            let part = self.homogeneous_part(d);
            for mu in partitions_of(d) {
                let c = part.hall_inner_product(&dual(&mu));
                if !c.is_zero() {
                    out.insert(mu, c);
                }
            }
        }
        out
    }

    fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(Partition::weight).collect();
        ds.dedup();
        ds
    }

    /// Text form in the given basis, e.g. `s[3] + 2*s[2,1] - 1/2*s[1,1,1]`.
    pub fn to_text(&self, basis: Basis) -> String {
        format_terms(basis, &self.coefficients(basis))
    }

    /// `{"basis":"s","terms":[{"partition":[2,1],"coeff":"2"}]}`.
    pub fn to_json(&self, basis: Basis) -> SymFuncJson {
        SymFuncJson {
            basis,
            terms: self
                .coefficients(basis)
                .into_iter()
                .map(|(partition, c)| TermJson { partition, coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(json: &SymFuncJson) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            check_parse_weight(json.basis, &t.partition)?;
            coeffs.push((t.partition.clone(), parse_rational(&t.coeff)?));
        }
        Ok(Self::from_basis(json.basis, coeffs))
    }

    /// Parses the text form in any of the bases `p s m h e`, mixing freely.
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
}

fn check_parse_weight(basis: Basis, p: &Partition) -> Result<()> {
    let cap = if basis == Basis::P { MAX_PARSE_POWER_WEIGHT } else { MAX_PARSE_WEIGHT };
    if p.weight() > cap {
        return Err(Error::Parse(format!("{}{p} exceeds the weight limit {cap}", basis.letter())));
    }
    Ok(())
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn format_terms(basis: Basis, coeffs: &BTreeMap<Partition, BigRational>) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (p, c)) in coeffs.iter().enumerate() {
        let magnitude = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if p.is_empty() {
            out.push_str(&magnitude.to_string());
            continue;
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
            out.push('*');
        }
        out.push(basis.letter());
        out.push_str(&p.to_string());
    }
    out
}

/// Shown in the Schur basis.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(Basis::S))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({})", self.to_text(Basis::P))
    }
}

/// Grammar: `term (("+" | "-") term)*`, where a term is an optional sign,
/// an optional coefficient `a` or `a/b` followed by `*`, and a basis element
/// such as `s[2,1]`; a bare coefficient is a constant.
impl FromStr for SymFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty symmetric function".into()));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let bytes = compact.as_bytes();
        let mut out = Self::zero();
        let mut i = 0;
        let mut first = true;
        while i < bytes.len() {
            let mut negative = false;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                negative = bytes[i] == b'-';
                i += 1;
            } else if !first {
                return Err(Error::Parse(format!("expected '+' or '-' at {i} in {s:?}")));
            }
            first = false;
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
                i += 1;
            }
            let mut coeff = if start == i { BigRational::one() } else { parse_rational(&compact[start..i])? };
            if negative {
                coeff = -coeff;
            }
            let explicit = start != i;
            if explicit && i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            } else if explicit && (i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-') {
                out = out.add(&Self::constant(coeff));
                continue;
            }
            let basis = bytes
                .get(i)
                .and_then(|&b| Basis::from_letter(b as char))
                .ok_or_else(|| Error::Parse(format!("expected a basis letter at {i} in {s:?}")))?;
            i += 1;
            if bytes.get(i) != Some(&b'[') {
                return Err(Error::Parse(format!("expected '[' at {i} in {s:?}")));
            }
            let close = compact[i..]
                .find(']')
                .map(|off| i + off)
                .ok_or_else(|| Error::Parse(format!("unclosed '[' in {s:?}")))?;
            let lambda: Partition = compact[i..=close].parse()?;
            check_parse_weight(basis, &lambda)?;
            i = close + 1;
            out = out.add(&Self::basis_element(basis, &lambda).scale(&coeff));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: Basis,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Partition,
    pub coeff: String,
}

/// `m_μ` in power sums for every `μ ⊢ n`. With `R_ρμ = ⟨p_ρ, h_μ⟩` the
/// coefficient of `m_μ` in `p_ρ`, which vanishes unless `μ` is coarser
/// than `ρ`, solve `m_μ = (p_μ - Σ_{ν coarser} R_μν m_ν) / R_μμ` from the
/// coarsest partition down.
fn monomial_basis(n: usize) -> Arc<HashMap<Partition, SymFunc>> {
    type ByDegree = HashMap<usize, Arc<HashMap<Partition, SymFunc>>>;
    static CACHE: OnceLock<RwLock<ByDegree>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.read().unwrap().get(&n) {
        return Arc::clone(m);
    }
    // partitions_of lists (n) first; coarser partitions always come earlier
    let parts = partitions_of(n);
    let h: Vec<SymFunc> = parts.iter().map(SymFunc::h_product).collect();
    let mut solved: HashMap<Partition, SymFunc> = HashMap::new();
    for mu in &parts {
        let p_mu = SymFunc::p(mu);
        let mut rest = p_mu.clone();
        let mut diagonal = BigRational::zero();
        for (nu, h_nu) in parts.iter().zip(&h) {
            let r = p_mu.hall_inner_product(h_nu);
            if r.is_zero() {
                continue;
            }
            if nu == mu {
                diagonal = r;
            } else {
                rest = rest.sub(&solved[nu].scale(&r));
            }
        }
        solved.insert(mu.clone(), rest.scale(&diagonal.recip()));
    }
    let built = Arc::new(solved);
    Arc::clone(cache.write().unwrap().entry(n).or_insert(built))
}

/// `ch(α) = Σ_ρ z_ρ⁻¹ α_ρ p_ρ`.
pub fn frobenius_ch(alpha: &ClassFunction) -> SymFunc {
    SymFunc::from_terms(alpha.values().iter().map(|(rho, v)| (rho.clone(), v / z_rat(rho))))
}

/// The class function of degree `n` whose characteristic is `f`:
/// `α_ρ = z_ρ [p_ρ] f`. Terms of other degrees are an error.
pub fn inverse_frobenius_of_degree(f: &SymFunc, n: usize) -> Result<ClassFunction> {
    if let Some(p) = f.terms.keys().find(|p| p.weight() != n) {
        return Err(if f.is_homogeneous() { Error::SizeMismatch(n, p.weight()) } else { Error::NotHomogeneous });
    }
    Ok(ClassFunction::from_fn(n, |rho| f.p_coefficient(rho) * z_rat(rho)))
}

/// As [`inverse_frobenius_of_degree`], reading the degree off `f`; zero and
/// mixed-degree inputs are rejected.
pub fn inverse_frobenius(f: &SymFunc) -> Result<ClassFunction> {
    let n = f.degree().ok_or(Error::NotHomogeneous)?;
    inverse_frobenius_of_degree(f, n)
}

/// The Littlewood–Richardson coefficient `c^λ_{μν} = [s_λ](s_μ s_ν)`.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigRational {
    if lambda.weight() != mu.weight() + nu.weight() {
        return BigRational::zero();
    }
    SymFunc::schur(mu).mul(&SymFunc::schur(nu)).hall_inner_product(&SymFunc::schur(lambda))
}

/// The Kronecker coefficient `γ^λ_{μν} = ⟨χ^λ, χ^μ χ^ν⟩`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigRational> {
    let product = irreducible_character(mu).pointwise_mul(&irreducible_character(nu))?;
    inner_product(&irreducible_character(lambda), &product)
}

/// `s_λ ∘ (g + h) = Σ_{μ,ν} c^λ_{μν} (s_μ ∘ g)(s_ν ∘ h)`.
pub fn plethysm_sum_rule(lambda: &Partition, g: &SymFunc, h: &SymFunc) -> Result<SymFunc> {
    let n = lambda.weight();
    let mut out = SymFunc::zero();
    for j in 0..=n {
        for mu in partitions_of(j) {
            if !mu.is_contained_in(lambda) {
                continue;
            }
            let left = SymFunc::schur(&mu).plethysm(g)?;
            for nu in partitions_of(n - j) {
                let c = littlewood_richardson(lambda, &mu, &nu);
                if c.is_zero() {
                    continue;
                }
                out = out.add(&left.mul(&SymFunc::schur(&nu).plethysm(h)?).scale(&c));
            }
        }
    }
    Ok(out)
}

/// `s_λ ∘ (g h) = Σ_{μ,ν ⊢ |λ|} γ^λ_{μν} (s_μ ∘ g)(s_ν ∘ h)`.
pub fn plethysm_product_rule(lambda: &Partition, g: &SymFunc, h: &SymFunc) -> Result<SymFunc> {
    let n = lambda.weight();
    let mut out = SymFunc::zero();
    for mu in partitions_of(n) {
        let left = SymFunc::schur(&mu).plethysm(g)?;
        for nu in partitions_of(n) {
            let c = kronecker(lambda, &mu, &nu)?;
            if !c.is_zero() {
                out = out.add(&left.mul(&SymFunc::schur(&nu).plethysm(h)?).scale(&c));
            }
        }
    }
    Ok(out)
}

/// `h_n ∘ (g h) = Σ_{λ ⊢ n} (s_λ ∘ g)(s_λ ∘ h)`.
pub fn complete_product_rule(n: usize, g: &SymFunc, h: &SymFunc) -> Result<SymFunc> {
    partitions_of(n).iter().try_fold(SymFunc::zero(), |acc, lambda| {
        let s = SymFunc::schur(lambda);
        Ok(acc.add(&s.plethysm(g)?.mul(&s.plethysm(h)?)))
    })
}

/// `e_n ∘ (g h) = Σ_{λ ⊢ n} (s_λ ∘ g)(s_λ' ∘ h)`.
pub fn elementary_product_rule(n: usize, g: &SymFunc, h: &SymFunc) -> Result<SymFunc> {
    partitions_of(n).iter().try_fold(SymFunc::zero(), |acc, lambda| {
        let left = SymFunc::schur(lambda).plethysm(g)?;
        let right = SymFunc::schur(&lambda.conjugate()).plethysm(h)?;
        Ok(acc.add(&left.mul(&right)))
    })
}

/// `K_λμ`, the coefficient of `m_μ` in `s_λ`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.weight() != mu.weight() {
        return BigInt::zero();
    }
    SymFunc::schur(lambda).hall_inner_product(&SymFunc::h_product(mu)).to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sf(s: &str) -> SymFunc {
        s.parse().unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn small_schur_functions() {
        assert_eq!(SymFunc::schur(&p(&[1])), SymFunc::p_k(1));
        assert_eq!(SymFunc::schur(&p(&[2])), SymFunc::from_terms([(p(&[2]), q(1, 2)), (p(&[1, 1]), q(1, 2))]));
        assert_eq!(SymFunc::schur(&p(&[1, 1])), SymFunc::from_terms([(p(&[2]), q(-1, 2)), (p(&[1, 1]), q(1, 2))]));
        assert_eq!(SymFunc::schur(&Partition::empty()), SymFunc::one());
    }

    #[test]
    fn products() {
        let s1 = SymFunc::schur(&p(&[1]));
        assert_eq!(s1.mul(&s1), sf("s[2] + s[1,1]"));
        assert_eq!(s1.mul(&SymFunc::one()), s1);
        assert_eq!(SymFunc::p_k(1).pow(3).to_text(Basis::S), "s[3] + 2*s[2,1] + s[1,1,1]");
    }

    #[test]
    fn plethysm_examples() {
        assert_eq!(SymFunc::p_k(2).plethysm(&SymFunc::p_k(3)).unwrap(), SymFunc::p_k(6));
        for k in 0..=5 {
            let h = SymFunc::h(k);
            assert_eq!(h.plethysm(&SymFunc::schur(&p(&[1]))).unwrap(), h);
        }
        assert_eq!(SymFunc::h(2).plethysm(&SymFunc::h(2)).unwrap(), sf("s[4] + s[2,2]"));
        assert_eq!(SymFunc::e(2).plethysm(&SymFunc::h(2)).unwrap(), sf("s[3,1]"));
        assert_eq!(SymFunc::h(2).plethysm(&SymFunc::one()), Err(Error::ConstantTerm));
        // coefficients of g are not raised to powers
        let two_p1 = SymFunc::p_k(1).scale(&q(2, 1));
        assert_eq!(SymFunc::p_k(2).plethysm(&two_p1).unwrap(), SymFunc::p_k(2).scale(&q(2, 1)));
        // constant terms of f pass through
        let f = SymFunc::one().add(&SymFunc::p_k(2));
        assert_eq!(f.plethysm(&SymFunc::p_k(1)).unwrap(), f);
    }

    #[test]
    fn conversions() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                for basis in [Basis::P, Basis::S, Basis::M, Basis::H, Basis::E] {
                    let b = SymFunc::basis_element(basis, &lambda);
                    let coeffs = b.coefficients(basis);
                    assert_eq!(coeffs.len(), 1, "{basis:?} {lambda}");
                    assert_eq!(coeffs[&lambda], BigRational::one());
                }
            }
        }
        assert_eq!(SymFunc::monomial(&p(&[1, 1])), sf("1/2*p[1,1] - 1/2*p[2]"));
        assert_eq!(SymFunc::monomial(&p(&[2, 1])), sf("p[2,1] - p[3]"));
        let f = sf("s[3] + 2*s[2,1] - 1/3*s[1,1,1]");
        for basis in [Basis::P, Basis::S, Basis::M, Basis::H, Basis::E] {
            assert_eq!(SymFunc::from_basis(basis, f.coefficients(basis)), f);
        }
        assert_eq!(SymFunc::e(3).to_text(Basis::M), "m[1,1,1]");
        assert_eq!(SymFunc::h(2).to_text(Basis::E), "-e[2] + e[1,1]");
    }

    #[test]
    fn kostka_numbers() {
        for lambda in partitions_of(6) {
            assert_eq!(kostka(&lambda, &lambda), BigInt::one());
        }
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(kostka(&p(&[1, 1, 1]), &p(&[3])), BigInt::zero());
        // K_{λ,1^n} counts standard tableaux, which is dim V_λ
        for lambda in partitions_of(7) {
            assert_eq!(kostka(&lambda, &Partition::column(7)), BigInt::from(crate::character::irreducible_dimension(&lambda)));
        }
        assert_eq!(
            SymFunc::p_k(1).pow(3).to_schur(),
            BTreeMap::from([(p(&[3]), q(1, 1)), (p(&[2, 1]), q(2, 1)), (p(&[1, 1, 1]), q(1, 1))])
        );
    }

    #[test]
    fn frobenius_characteristic() {
        for n in 1..=6 {
            for lambda in partitions_of(n) {
                let chi = irreducible_character(&lambda);
                assert_eq!(frobenius_ch(&chi), SymFunc::schur(&lambda));
                assert_eq!(inverse_frobenius(&SymFunc::schur(&lambda)).unwrap(), chi);
            }
        }
        let fp = crate::character::fixed_point_character(3, 2).unwrap();
        assert_eq!(frobenius_ch(&fp), sf("2*s[3] + 3*s[2,1] + s[1,1,1]"));
        let regular = inverse_frobenius(&SymFunc::p_k(1).pow(4)).unwrap();
        assert_eq!(regular.degree(), rat(24));
        assert_eq!(regular.values().values().filter(|v| !v.is_zero()).count(), 1);
        assert_eq!(inverse_frobenius(&sf("s[2] + s[1]")), Err(Error::NotHomogeneous));
        assert_eq!(inverse_frobenius(&SymFunc::zero()), Err(Error::NotHomogeneous));
        assert_eq!(inverse_frobenius_of_degree(&SymFunc::zero(), 3).unwrap(), ClassFunction::zero(3));
    }

    #[test]
    fn text_round_trip_and_errors() {
        let f = sf("s[3] + 2*s[2,1] + s[1,1,1]");
        assert_eq!(f.to_string(), "s[3] + 2*s[2,1] + s[1,1,1]");
        assert_eq!(sf(&f.to_text(Basis::P)), f);
        assert_eq!(sf("- 1/2 * s[ 2 ] + 3"), SymFunc::h(2).scale(&q(-1, 2)).add(&SymFunc::constant(q(3, 1))));
        assert_eq!(sf("s[1,2]"), sf("s[2,1]"));
        assert_eq!(sf("0"), SymFunc::zero());
        assert_eq!(sf("h[2,1]"), SymFunc::h(2).mul(&SymFunc::h(1)));
        assert_eq!(sf("3 - s[]").to_text(Basis::P), "2");
        for bad in ["", "s", "s[2", "2*", "x[1]", "s[0]", "1/0", "s[1] s[1]", "s[2]+", "++s[1]", "s[20]", "2**s[1]"] {
            assert!(bad.parse::<SymFunc>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn json_round_trip() {
        let f = sf("s[3] + 2*s[2,1] - 1/2*s[1,1,1]");
        let json = serde_json::to_string(&f.to_json(Basis::S)).unwrap();
        assert_eq!(
            json,
            r#"{"basis":"s","terms":[{"partition":[3],"coeff":"1"},{"partition":[2,1],"coeff":"2"},{"partition":[1,1,1],"coeff":"-1/2"}]}"#
        );
        let back: SymFuncJson = serde_json::from_str(&json).unwrap();
        assert_eq!(SymFunc::from_json(&back).unwrap(), f);
        let p_json = f.to_json(Basis::P);
        assert_eq!(SymFunc::from_json(&p_json).unwrap(), f);
        let bad: SymFuncJson = serde_json::from_str(r#"{"basis":"s","terms":[{"partition":[1],"coeff":"x"}]}"#).unwrap();
        assert!(SymFunc::from_json(&bad).is_err());
    }

    #[test]
    fn littlewood_richardson_and_kronecker() {
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), q(1, 1));
        assert_eq!(littlewood_richardson(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), q(2, 1));
        assert_eq!(littlewood_richardson(&p(&[3]), &p(&[1, 1]), &p(&[1])), q(0, 1));
        assert_eq!(kronecker(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), q(1, 1));
        assert_eq!(kronecker(&p(&[3]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), q(1, 1));
        assert_eq!(kronecker(&p(&[1, 1, 1]), &p(&[3]), &p(&[1, 1, 1])).unwrap(), q(1, 1));
    }

    #[test]
    fn plethysm_rules_small() {
        let gs = [sf("s[1]"), sf("s[2]"), sf("s[1,1]")];
        for n in 1..=3 {
            for g in &gs {
                for h in &gs {
                    let gh = g.mul(h);
                    assert_eq!(complete_product_rule(n, g, h).unwrap(), SymFunc::h(n).plethysm(&gh).unwrap());
                    assert_eq!(elementary_product_rule(n, g, h).unwrap(), SymFunc::e(n).plethysm(&gh).unwrap());
                    for lambda in partitions_of(n) {
                        let s = SymFunc::schur(&lambda);
                        assert_eq!(plethysm_product_rule(&lambda, g, h).unwrap(), s.plethysm(&gh).unwrap());
                        assert_eq!(plethysm_sum_rule(&lambda, g, h).unwrap(), s.plethysm(&g.add(h)).unwrap());
                    }
                }
            }
        }
        let p1 = SymFunc::p_k(1);
        assert_eq!(plethysm_product_rule(&p(&[1]), &p1, &p1).unwrap(), p1.mul(&p1));
        assert_eq!(plethysm_sum_rule(&p(&[1]), &p1, &p1).unwrap(), p1.add(&p1));
    }
}
