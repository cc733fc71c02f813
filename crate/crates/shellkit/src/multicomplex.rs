//! Multicomplexes: downward-closed, limit-closed subsets of `ℕ^n_∞`,
//! represented by their finite antichain of maximal elements.
//!
//! Faces are never materialized; every query reduces to comparisons against
//! the maximal elements.

use std::collections::BTreeSet;
use std::fmt;

use crate::decomposition;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, VarSet};

/// `ℕ ∪ {∞}`, totally ordered with every finite value below `Inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtNat {
    Fin(u32),
    Inf,
}

impl ExtNat {
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtNat::Inf)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtNat::Fin(v) => Some(v),
            ExtNat::Inf => None,
        }
    }
}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use ExtNat::*;
        match (self, other) {
            (Fin(a), Fin(b)) => a.cmp(b),
            (Fin(_), Inf) => std::cmp::Ordering::Less,
            (Inf, Fin(_)) => std::cmp::Ordering::Greater,
            (Inf, Inf) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{}", v),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

/// A point `a ∈ ℕ^n_∞`, i.e. a face of a multicomplex.
///
/// The derived `Ord` is lexicographic with `inf` above every finite entry;
/// it is used only as a canonical output order. The mathematical order is
/// the componentwise partial order [`ExtVector::le`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtVector {
    entries: Vec<ExtNat>,
}

impl ExtVector {
    pub fn new(entries: Vec<ExtNat>) -> Self {
        ExtVector { entries }
    }

    /// Builds from finite values with an explicit infinite part.
    pub fn from_parts(finite: &[u32], ip: &VarSet) -> Self {
        let entries = finite
            .iter()
            .enumerate()
            .map(|(i, &v)| if ip.contains(i) { ExtNat::Inf } else { ExtNat::Fin(v) })
            .collect();
        ExtVector { entries }
    }

    /// The all-finite point `b ∈ ℕ^n`.
    pub fn from_finite(exps: &[u32]) -> Self {
        ExtVector {
            entries: exps.iter().map(|&v| ExtNat::Fin(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> ExtNat {
        self.entries[i]
    }

    pub fn entries(&self) -> &[ExtNat] {
        &self.entries
    }

    /// The infinite part `ip(a) = {i : a(i) = ∞}`.
    pub fn ip(&self) -> VarSet {
        let members: Vec<usize> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_infinite())
            .map(|(i, _)| i)
            .collect();
        VarSet::new(self.entries.len(), members).expect("indices in range")
    }

    /// `dim a = |ip(a)| - 1`.
    pub fn dim(&self) -> i64 {
        self.ip().len() as i64 - 1
    }

    /// Componentwise partial order.
    pub fn le(&self, other: &ExtVector) -> bool {
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a <= b)
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &ExtVector) -> ExtVector {
        ExtVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    /// The monomial `x^a'` where `a'` keeps the finite coordinates and zeroes
    /// the infinite ones; for a facet this is the base `u` of its standard
    /// pair.
    pub fn finite_part(&self) -> Monomial {
        Monomial::new(
            self.entries
                .iter()
                .map(|e| e.finite().unwrap_or(0))
                .collect(),
        )
    }

    /// The prime `P_a` generated by the variables with finite coordinate.
    pub fn prime(&self) -> VarSet {
        self.ip().complement()
    }
}

impl fmt::Display for ExtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// A multicomplex `Γ ⊆ ℕ^n_∞`, stored by its maximal elements `ℳ(Γ)`.
///
/// The maximal set is a canonical sorted antichain. The empty multicomplex
/// (no maximal elements) pairs with the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multicomplex {
    n: usize,
    maximal: Vec<ExtVector>,
}

impl Multicomplex {
    /// The multicomplex generated by `points`: dominated points are dropped,
    /// the survivors are exactly the maximal elements.
    pub fn from_maximal(n: usize, points: impl IntoIterator<Item = ExtVector>) -> Result<Self> {
        let mut pts: Vec<ExtVector> = Vec::new();
        for p in points {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.len(),
                });
            }
            pts.push(p);
        }
        pts.sort();
        pts.dedup();
        let maximal: Vec<ExtVector> = pts
            .iter()
            .enumerate()
            .filter(|(i, p)| {
                !pts.iter()
                    .enumerate()
                    .any(|(j, q)| j != *i && ExtVector::le(p, q))
            })
            .map(|(_, p)| p.clone())
            .collect();
        Ok(Multicomplex { n, maximal })
    }

    pub fn empty(n: usize) -> Self {
        Multicomplex { n, maximal: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn maximal(&self) -> &[ExtVector] {
        &self.maximal
    }

    pub fn is_empty(&self) -> bool {
        self.maximal.is_empty()
    }

    /// Face membership: `a ∈ Γ` iff `a ≤ m` for some maximal `m`.
    pub fn contains_face(&self, a: &ExtVector) -> Result<bool> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        Ok(self.maximal.iter().any(|m| a.le(m)))
    }

    /// The monomial ideal `I(Γ)`, spanned by the monomials whose exponent
    /// vectors are not faces. Computed as the intersection of the irreducible
    /// ideals of the maximal elements; `I(∅) = (1)`.
    pub fn ideal_of(&self) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for m in &self.maximal {
            acc = acc
                .intersect(&Self::irreducible_ideal_of(m))
                .expect("same ambient size");
        }
        acc
    }

    /// `I(Γ(m)) = (x_i^{m(i)+1} : i ∉ ip(m))`; the zero ideal when `m` is
    /// all-infinite.
    pub fn irreducible_ideal_of(m: &ExtVector) -> MonomialIdeal {
        let n = m.len();
        let gens: Vec<Monomial> = m
            .entries()
            .iter()
            .enumerate()
            .filter_map(|(i, e)| {
                e.finite().map(|v| {
                    let mut exps = vec![0; n];
                    exps[i] = v + 1;
                    Monomial::new(exps)
                })
            })
            .collect();
        MonomialIdeal::new(n, gens).expect("lengths match")
    }

    /// The unique multicomplex with `I(Γ) = I`, from the irreducible
    /// decomposition of `I`.
    pub fn of_ideal(ideal: &MonomialIdeal) -> Result<Multicomplex> {
        if ideal.is_unit() {
            return Ok(Multicomplex::empty(ideal.n()));
        }
        let components = decomposition::irreducible_decomposition(ideal)?;
        Multicomplex::from_maximal(
            ideal.n(),
            components.iter().map(|c| c.maximal_element()),
        )
    }

    /// The facet set `𝓕(Γ)`: faces `a` such that every maximal element above
    /// `a` has the same infinite part. Always contains `ℳ(Γ)`.
    pub fn facets(&self) -> Vec<ExtVector> {
        let mut out: BTreeSet<ExtVector> = BTreeSet::new();
        for m in &self.maximal {
            let ip = m.ip();
            let finite_idx: Vec<usize> = (0..self.n).filter(|i| !ip.contains(*i)).collect();
            // walk the box of candidates a <= m with ip(a) = ip(m)
            let mut current = vec![0u32; finite_idx.len()];
            loop {
                let mut entries: Vec<ExtNat> = vec![ExtNat::Inf; self.n];
                for (k, &i) in finite_idx.iter().enumerate() {
                    entries[i] = ExtNat::Fin(current[k]);
                }
                let a = ExtVector::new(entries);
                let is_facet = self
                    .maximal
                    .iter()
                    .filter(|m2| a.le(m2))
                    .all(|m2| m2.ip() == ip);
                if is_facet {
                    out.insert(a);
                }
                // advance the mixed-radix counter
                let mut k = 0;
                loop {
                    if k == finite_idx.len() {
                        break;
                    }
                    let bound = m.entry(finite_idx[k]).finite().unwrap();
                    if current[k] < bound {
                        current[k] += 1;
                        break;
                    }
                    current[k] = 0;
                    k += 1;
                }
                if k == finite_idx.len() {
                    break;
                }
            }
        }
        out.into_iter().collect()
    }

    /// `dim Γ = max |ip(m)| - 1` over the maximal elements; `-1` for the
    /// empty multicomplex.
    pub fn dimension(&self) -> i64 {
        self.maximal.iter().map(|m| m.dim()).max().unwrap_or(-1)
    }

    /// Union of multicomplexes: generated by the union of the maximal sets.
    pub fn union(&self, other: &Multicomplex) -> Result<Multicomplex> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Multicomplex::from_maximal(
            self.n,
            self.maximal.iter().chain(&other.maximal).cloned(),
        )
    }

    /// Intersection: generated by the pairwise componentwise meets of the
    /// maximal elements.
    pub fn intersection(&self, other: &Multicomplex) -> Result<Multicomplex> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut meets = Vec::new();
        for a in &self.maximal {
            for b in &other.maximal {
                meets.push(a.meet(b));
            }
        }
        Multicomplex::from_maximal(self.n, meets)
    }
}

impl fmt::Display for Multicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, m) in self.maximal.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", m)?;
        }
        write!(f, ">")
    }
}
