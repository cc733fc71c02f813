//! Irreducible and primary decomposition of monomial ideals, associated
//! primes, standard pairs, length multiplicities, arithmetic degree and the
//! dimension filtration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, VarSet};
use crate::multicomplex::{ExtVector, Multicomplex};

/// An irreducible monomial ideal `(x_i^{b_i} : i ∈ A)`, stored as the map
/// `i ↦ b_i` with every `b_i ≥ 1`. The empty map is the zero ideal, the only
/// component with empty prime.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleComponent {
    n: usize,
    pure_powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(n: usize, pure_powers: BTreeMap<usize, u32>) -> Result<Self> {
        for (&i, &b) in &pure_powers {
            if i >= n {
                return Err(Error::VariableOutOfRange { var: i, n });
            }
            debug_assert!(b >= 1);
        }
        Ok(IrreducibleComponent { n, pure_powers })
    }

    /// Reads a component off an ideal whose generators are pure variable
    /// powers; `None` if some generator is mixed.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<Self> {
        let mut pure_powers = BTreeMap::new();
        for g in ideal.gens() {
            if !g.is_pure_power() || g.is_one() {
                return None;
            }
            let i = g.exponents().iter().position(|&e| e > 0).unwrap();
            pure_powers.insert(i, g.exponent(i));
        }
        Some(IrreducibleComponent {
            n: ideal.n(),
            pure_powers,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pure_powers(&self) -> &BTreeMap<usize, u32> {
        &self.pure_powers
    }

    /// The prime `(x_i : i ∈ A)` the component is primary to.
    pub fn prime(&self) -> VarSet {
        VarSet::new(self.n, self.pure_powers.keys().copied()).expect("indices in range")
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self.pure_powers.iter().map(|(&i, &b)| {
            let mut exps = vec![0; self.n];
            exps[i] = b;
            Monomial::new(exps)
        });
        MonomialIdeal::new(self.n, gens).expect("lengths match")
    }

    /// The maximal element of the single-facet multicomplex of this
    /// component: `b_i - 1` on `A`, `∞` off `A`.
    pub fn maximal_element(&self) -> ExtVector {
        use crate::multicomplex::ExtNat;
        ExtVector::new(
            (0..self.n)
                .map(|i| match self.pure_powers.get(&i) {
                    Some(&b) => ExtNat::Fin(b - 1),
                    None => ExtNat::Inf,
                })
                .collect(),
        )
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ideal())
    }
}

/// A standard pair `(u, Z)` with `supp(u) ∩ Z = ∅`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardPair {
    pub monomial: Monomial,
    pub vars: VarSet,
}

impl StandardPair {
    /// The facet `log u + c(Z)` of the associated multicomplex.
    pub fn to_facet(&self) -> ExtVector {
        ExtVector::from_parts(self.monomial.exponents(), &self.vars)
    }

    pub fn from_facet(a: &ExtVector) -> Self {
        StandardPair {
            monomial: a.finite_part(),
            vars: a.ip(),
        }
    }
}

impl fmt::Display for StandardPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.monomial)?;
        for (k, i) in self.vars.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        write!(f, "}})")
    }
}

/// Splits until every piece has only pure-power generators.
fn decompose_rec(ideal: &MonomialIdeal, out: &mut BTreeSet<IrreducibleComponent>) {
    if let Some(c) = IrreducibleComponent::from_ideal(ideal) {
        out.insert(c);
        return;
    }
    // first non-pure-power generator, split at its first positive exponent
    let g = ideal
        .gens()
        .iter()
        .find(|g| !g.is_pure_power())
        .expect("some generator is mixed")
        .clone();
    let i = g.exponents().iter().position(|&e| e > 0).unwrap();
    let mut power = vec![0; ideal.n()];
    power[i] = g.exponent(i);
    let mut rest = g.exponents().to_vec();
    rest[i] = 0;
    let left = ideal.add_gen(&Monomial::new(power)).expect("same n");
    let right = ideal.add_gen(&Monomial::new(rest)).expect("same n");
    decompose_rec(&left, out);
    decompose_rec(&right, out);
}

/// The unique irredundant irreducible decomposition of a proper monomial
/// ideal, sorted canonically.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut set = BTreeSet::new();
    decompose_rec(ideal, &mut set);
    let mut components: Vec<IrreducibleComponent> = set.into_iter().collect();
    // drop redundant components until the decomposition is irredundant
    loop {
        let mut removed = false;
        for k in 0..components.len() {
            let mut rest = MonomialIdeal::unit(ideal.n());
            for (j, c) in components.iter().enumerate() {
                if j != k {
                    rest = rest.intersect(&c.to_ideal()).expect("same n");
                }
            }
            if components[k].to_ideal().contains_ideal(&rest).expect("same n") {
                components.remove(k);
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }
    Ok(components)
}

/// The distinct primes of the irreducible components, sorted.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<VarSet>> {
    let components = irreducible_decomposition(ideal)?;
    let set: BTreeSet<VarSet> = components.iter().map(|c| c.prime()).collect();
    Ok(set.into_iter().collect())
}

/// The inclusion-minimal associated primes.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VarSet>> {
    let ass = associated_primes(ideal)?;
    Ok(ass
        .iter()
        .filter(|p| !ass.iter().any(|q| q.is_proper_subset(p)))
        .cloned()
        .collect())
}

/// Groups the irreducible components by prime; each primary component is the
/// intersection of its group.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Vec<(VarSet, MonomialIdeal)>> {
    let components = irreducible_decomposition(ideal)?;
    let mut groups: BTreeMap<VarSet, MonomialIdeal> = BTreeMap::new();
    for c in components {
        let p = c.prime();
        let q = c.to_ideal();
        groups
            .entry(p)
            .and_modify(|acc| *acc = acc.intersect(&q).expect("same n"))
            .or_insert(q);
    }
    Ok(groups.into_iter().collect())
}

/// Standard pairs of `I`, as the inverse image of the facets of the
/// associated multicomplex under `(u, Z) ↦ log u + c(Z)`.
pub fn standard_pairs(ideal: &MonomialIdeal) -> Result<Vec<StandardPair>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let gamma = Multicomplex::of_ideal(ideal)?;
    Ok(gamma
        .facets()
        .iter()
        .map(StandardPair::from_facet)
        .collect())
}

/// The length multiplicity of the prime `P`: the number of standard pairs
/// whose `Z` is the complement of `P`. Positive iff `P ∈ Ass(S/I)`.
pub fn length_multiplicity(ideal: &MonomialIdeal, prime: &VarSet) -> Result<u64> {
    if prime.n() != ideal.n() {
        return Err(Error::DimensionMismatch {
            expected: ideal.n(),
            found: prime.n(),
        });
    }
    let z = prime.complement();
    Ok(standard_pairs(ideal)?
        .iter()
        .filter(|p| p.vars == z)
        .count() as u64)
}

/// The arithmetic degree of `S/I`: the number of standard pairs.
///
/// deg(S/P) = 1 for every monomial prime, so no degree weights appear.
pub fn arithmetic_degree(ideal: &MonomialIdeal) -> Result<u64> {
    Ok(standard_pairs(ideal)?.len() as u64)
}

/// Krull dimension of `S/I` for proper `I`: `n - min |P|` over the minimal
/// primes.
pub fn krull_dimension(ideal: &MonomialIdeal) -> Result<i64> {
    let min = minimal_primes(ideal)?;
    Ok(min
        .iter()
        .map(|p| (ideal.n() - p.len()) as i64)
        .max()
        .expect("proper ideal has at least one minimal prime"))
}

/// The dimension filtration of `S/I`, recorded as the ascending ideal chain
/// `I = I^(-1) ⊆ I^(0) ⊆ ... ⊆ I^(d) = S` with `D_i(S/I) = I^(i)/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionFiltration {
    base: MonomialIdeal,
    /// `levels[0]` is `I^(-1) = I`; `levels[i+1]` is `I^(i)`.
    levels: Vec<MonomialIdeal>,
    components: Vec<(VarSet, MonomialIdeal)>,
}

impl DimensionFiltration {
    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    /// The ideal `I^(i)` for `i` in `-1..=dim S/I`.
    pub fn level(&self, i: i64) -> &MonomialIdeal {
        &self.levels[(i + 1) as usize]
    }

    pub fn levels(&self) -> &[MonomialIdeal] {
        &self.levels
    }

    /// Top index `d = dim S/I`.
    pub fn dim(&self) -> i64 {
        self.levels.len() as i64 - 2
    }

    pub fn components(&self) -> &[(VarSet, MonomialIdeal)] {
        &self.components
    }

    /// `depth S/I = min { i : D_i ≠ D_{i-1} }`; valid for pretty clean
    /// quotients (enforced by the caller in `invariants`).
    pub fn first_jump(&self) -> i64 {
        for i in 0..=self.dim() {
            if self.level(i) != self.level(i - 1) {
                return i;
            }
        }
        self.dim()
    }
}

/// Builds the dimension filtration from the primary decomposition:
/// `I^(i) = ⋂ { Q_j : dim S/P_j ≥ i+1 }`, the empty intersection being `S`.
pub fn dimension_filtration(ideal: &MonomialIdeal) -> Result<DimensionFiltration> {
    let components = primary_decomposition(ideal)?;
    let d = krull_dimension(ideal)?;
    let n = ideal.n();
    let mut levels = vec![ideal.clone()];
    for i in 0..=d {
        let mut level = MonomialIdeal::unit(n);
        for (p, q) in &components {
            if (n - p.len()) as i64 >= i + 1 {
                level = level.intersect(q).expect("same n");
            }
        }
        levels.push(level);
    }
    Ok(DimensionFiltration {
        base: ideal.clone(),
        levels,
        components,
    })
}
