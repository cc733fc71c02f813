//! Simplicial complexes: Stanley-Reisner ideals, non-pure shellings in the
//! sense of Bjorner and Wachs, shelling numbers, and the induced clean
//! filtrations.
//!
//! The void complex (no facets, not even the empty face) maps to the unit
//! ideal; the complex whose only face is the empty set maps to the ideal
//! `(x_1, ..., x_n)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::filtration::{FiltrationStep, PrimeFiltrationRecord};
use crate::monomial::{Monomial, MonomialIdeal, VarSet};
use crate::multicomplex::{ExtNat, ExtVector, Multicomplex};

/// A simplicial complex on vertex set `{0, ..., n-1}`, stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`; dominated faces are dropped
    /// so the stored facets form an inclusion antichain, sorted canonically.
    pub fn new(n: usize, faces: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        let mut fs: Vec<VarSet> = Vec::new();
        for f in faces {
            if f.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: f.n(),
                });
            }
            fs.push(f);
        }
        fs.sort();
        fs.dedup();
        let facets: Vec<VarSet> = fs
            .iter()
            .enumerate()
            .filter(|(i, f)| !fs.iter().enumerate().any(|(j, g)| j != *i && f.is_subset(g)))
            .map(|(_, f)| f.clone())
            .collect();
        Ok(SimplicialComplex { n, facets })
    }

    /// The void complex: no faces at all.
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, f: &VarSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(g))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, v) in facet.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", v + 1)?;
            }
            write!(f, "}}")?;
        }
        write!(f, ">")
    }
}

fn varset_of_mask(n: usize, mask: u32) -> VarSet {
    VarSet::new(n, (0..n).filter(|i| mask & (1 << i) != 0)).expect("indices in range")
}

/// The Stanley-Reisner ideal, generated by the minimal non-faces.
///
/// Equals the intersection of the primes `P_F = (x_j : j ∉ F)` over the
/// facets. Void complex -> unit ideal; `{∅}` -> `(x_1, ..., x_n)`; the full
/// simplex -> zero ideal.
pub fn sr_ideal(delta: &SimplicialComplex) -> MonomialIdeal {
    let n = delta.n();
    assert!(n < 32, "vertex count beyond the subset-enumeration range");
    let mut gens: Vec<Monomial> = Vec::new();
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let f = varset_of_mask(n, mask);
        if delta.is_face(&f) {
            continue;
        }
        // minimal iff every maximal proper subset is a face
        let minimal = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .all(|i| delta.is_face(&varset_of_mask(n, mask & !(1 << i))));
        if minimal {
            gens.push(Monomial::new(
                (0..n)
                    .map(|i| u32::from(mask & (1 << i) != 0))
                    .collect(),
            ));
        }
    }
    MonomialIdeal::new(n, gens).expect("lengths match")
}

/// The multicomplex with maximal elements `a_F` (`∞` on the facet, `0` off
/// it); its ideal is the Stanley-Reisner ideal.
pub fn multicomplex_of(delta: &SimplicialComplex) -> Multicomplex {
    Multicomplex::from_maximal(
        delta.n(),
        delta.facets.iter().map(|f| facet_point(f)),
    )
    .expect("lengths match")
}

/// The point `a_F` of a face: `∞` on `F`, `0` elsewhere.
pub fn facet_point(f: &VarSet) -> ExtVector {
    ExtVector::new(
        (0..f.n())
            .map(|i| if f.contains(i) { ExtNat::Inf } else { ExtNat::Fin(0) })
            .collect(),
    )
}

/// The Bjorner-Wachs condition for the facet at position `i` (0-based)
/// against the earlier prefix: for every `j < i` there must be a vertex
/// `v ∈ F_i ∖ F_j` and a `k < i` with `F_i ∖ F_k = {v}`.
fn bw_step_ok(order: &[&VarSet], i: usize) -> bool {
    let fi = order[i];
    (0..i).all(|j| {
        fi.iter().any(|v| {
            !order[j].contains(v)
                && (0..i).any(|k| {
                    let diff: Vec<usize> = fi.iter().filter(|&w| !order[k].contains(w)).collect();
                    diff == [v]
                })
        })
    })
}

/// Backtracking search for a non-pure shelling; `Ok(None)` means not
/// shellable. The witness is the lex-first valid order.
pub fn find_shelling_bw(delta: &SimplicialComplex) -> Result<Option<Vec<VarSet>>> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let facets: Vec<&VarSet> = delta.facets.iter().collect();

    fn rec<'a>(
        facets: &[&'a VarSet],
        used: &mut [bool],
        order: &mut Vec<&'a VarSet>,
    ) -> bool {
        if order.len() == facets.len() {
            return true;
        }
        for i in 0..facets.len() {
            if used[i] {
                continue;
            }
            order.push(facets[i]);
            if bw_step_ok(order, order.len() - 1) {
                used[i] = true;
                if rec(facets, used, order) {
                    return true;
                }
                used[i] = false;
            }
            order.pop();
        }
        false
    }

    let mut used = vec![false; facets.len()];
    let mut order = Vec::with_capacity(facets.len());
    if rec(&facets, &mut used, &mut order) {
        Ok(Some(order.into_iter().cloned().collect()))
    } else {
        Ok(None)
    }
}

/// Checks that `order` is a permutation of the facets satisfying the
/// Bjorner-Wachs condition; reports the first violating position.
pub fn verify_shelling_bw(delta: &SimplicialComplex, order: &[VarSet]) -> Result<()> {
    let mut sorted = order.to_vec();
    sorted.sort();
    if sorted != delta.facets {
        return Err(Error::NotAFacetPermutation);
    }
    let refs: Vec<&VarSet> = order.iter().collect();
    for i in 0..refs.len() {
        if !bw_step_ok(&refs, i) {
            return Err(Error::NotAShelling {
                step: i + 1,
                reason: format!(
                    "facet {} has no earlier facet meeting it in a maximal proper face \
                     covering some earlier difference",
                    order[i]
                ),
            });
        }
    }
    Ok(())
}

/// The shelling numbers `a_i` and monomials `f_i` of a shelling: `a_i`
/// counts the facets of `⟨F_1, ..., F_{i-1}⟩ ∩ ⟨F_i⟩` (all maximal proper
/// faces of `⟨F_i⟩` for a valid shelling) and `f_i = ∏ x_k` over the `k ∈
/// F_i` with `F_i ∖ {k}` among them; `deg f_i = a_i` and `a_1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingNumbers {
    pub order: Vec<VarSet>,
    pub a: Vec<u32>,
    pub f: Vec<Monomial>,
}

pub fn shelling_numbers(delta: &SimplicialComplex, order: &[VarSet]) -> Result<ShellingNumbers> {
    verify_shelling_bw(delta, order)?;
    let n = delta.n();
    let mut a = Vec::with_capacity(order.len());
    let mut f = Vec::with_capacity(order.len());
    for (i, fi) in order.iter().enumerate() {
        if i == 0 {
            a.push(0);
            f.push(Monomial::one(n));
            continue;
        }
        // facets of the intersection subcomplex = maximal intersections
        let inters: Vec<VarSet> = (0..i).map(|j| fi.intersection(&order[j])).collect();
        let maximal: Vec<&VarSet> = inters
            .iter()
            .filter(|g| !inters.iter().any(|h| g.is_proper_subset(h)))
            .collect();
        let mut distinct = maximal.clone();
        distinct.sort();
        distinct.dedup();
        a.push(distinct.len() as u32);
        let exps = (0..n)
            .map(|k| {
                let without: VarSet =
                    VarSet::new(n, fi.iter().filter(|&v| v != k)).expect("in range");
                u32::from(fi.contains(k) && distinct.iter().any(|g| **g == without))
            })
            .collect();
        f.push(Monomial::new(exps));
    }
    Ok(ShellingNumbers {
        order: order.to_vec(),
        a,
        f,
    })
}

/// The clean filtration of `K[Δ]` from a shelling: chain ideals
/// `⋂_{j=1}^{r-t} P_{F_j}` with step monomials `f_{r-t+1}` and primes
/// `P_{F_{r-t+1}}`, so the step degrees are the shelling numbers reversed.
pub fn clean_filtration_of_complex(
    delta: &SimplicialComplex,
    order: &[VarSet],
) -> Result<PrimeFiltrationRecord> {
    let numbers = shelling_numbers(delta, order)?;
    let n = delta.n();
    let r = order.len();
    // chain[i] = ⋂_{j=1}^{i} P_{F_j}; chain[0] = S
    let mut chain = vec![MonomialIdeal::unit(n)];
    for fi in order {
        let p = fi.complement().prime_ideal();
        let last = chain.last().unwrap().intersect(&p)?;
        chain.push(last);
    }
    let base = chain[r].clone();
    let steps = (1..=r)
        .map(|t| {
            let i = r - t + 1; // shelling index feeding filtration step t
            FiltrationStep {
                monomial: numbers.f[i - 1].clone(),
                prime: order[i - 1].complement(),
                ideal_before: chain[i].clone(),
                ideal_after: chain[i - 1].clone(),
            }
        })
        .collect();
    Ok(PrimeFiltrationRecord { base, steps })
}
