//! Slow brute-force reference implementations used to cross-check the main
//! crate in tests. Nothing here is meant for production use: the algorithms
//! are exponential by design and favor being obviously correct over being
//! fast.

use itertools::Itertools;
use thiserror::Error;

use shellkit::decomposition::StandardPair;
use shellkit::filtration::verify_shelling;
use shellkit::monomial::{Monomial, MonomialIdeal, VarSet};
use shellkit::multicomplex::Multicomplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("facet count {found} exceeds the permutation-scan guard of {guard}")]
    TooManyFacets { found: usize, guard: usize },
}

/// Counts the monomials of each degree `0..=degree_bound` outside `ideal`,
/// by exhaustive enumeration with a direct divisibility test.
pub fn standard_monomial_counts(ideal: &MonomialIdeal, degree_bound: u32) -> Vec<u64> {
    let n = ideal.n();
    let mut counts = vec![0u64; degree_bound as usize + 1];

    fn walk(
        exps: &mut Vec<u32>,
        left: u32,
        n: usize,
        gens: &[Monomial],
        counts: &mut [u64],
        degree_bound: u32,
    ) {
        if exps.len() == n {
            let in_ideal = gens
                .iter()
                .any(|g| g.exponents().iter().zip(exps.iter()).all(|(a, b)| a <= b));
            if !in_ideal {
                counts[(degree_bound - left) as usize] += 1;
            }
            return;
        }
        for e in 0..=left {
            exps.push(e);
            walk(exps, left - e, n, gens, counts, degree_bound);
            exps.pop();
        }
    }

    walk(
        &mut Vec::with_capacity(n),
        degree_bound,
        n,
        ideal.gens(),
        &mut counts,
        degree_bound,
    );
    counts
}

/// `true` iff `u K[Z]` meets `ideal` in a nonzero monomial: some generator's
/// exponents off `Z` are dominated by `u`'s.
fn span_meets_ideal(ideal: &MonomialIdeal, u: &Monomial, z: &VarSet) -> bool {
    ideal.gens().iter().any(|g| {
        g.exponents()
            .iter()
            .enumerate()
            .all(|(i, &e)| z.contains(i) || e <= u.exponent(i))
    })
}

/// Strict comparison in the Sturmfels-Trung-Vogel order:
/// `(v, W) < (u, Z)` iff `v | u` and `supp(u/v) ∪ Z ⊆ W`, with inequality.
fn stv_less(small: &StandardPair, big: &StandardPair) -> bool {
    if small == big || !small.monomial.divides(&big.monomial) {
        return false;
    }
    let quotient_support: Vec<usize> = (0..big.vars.n())
        .filter(|&i| big.monomial.exponent(i) > small.monomial.exponent(i))
        .collect();
    quotient_support.iter().all(|&i| small.vars.contains(i))
        && big.vars.is_subset(&small.vars)
}

/// Exhaustive standard-pair computation: enumerate every admissible pair
/// `(u, Z)` with `u` inside the componentwise generator-exponent box, keep
/// those with `u K[Z] ∩ I = {0}`, then keep the minimal ones under the
/// Sturmfels-Trung-Vogel order. Returns the pairs sorted.
pub fn standard_pairs_bruteforce(ideal: &MonomialIdeal) -> Vec<StandardPair> {
    if ideal.is_unit() {
        return vec![];
    }
    let n = ideal.n();
    // finite facet coordinates never exceed the generator exponents
    let bound: Vec<u32> = (0..n)
        .map(|i| ideal.gens().iter().map(|g| g.exponent(i)).max().unwrap_or(0))
        .collect();

    let mut candidates: Vec<StandardPair> = Vec::new();
    let exps_choices: Vec<Vec<u32>> = bound.iter().map(|&b| (0..=b).collect()).collect();
    for exps in exps_choices.into_iter().multi_cartesian_product() {
        let u = Monomial::new(exps);
        let free: Vec<usize> = (0..n).filter(|&i| u.exponent(i) == 0).collect();
        for k in 0..=free.len() {
            for z_members in free.iter().copied().combinations(k) {
                let z = VarSet::new(n, z_members).expect("in range");
                if !span_meets_ideal(ideal, &u, &z) {
                    candidates.push(StandardPair {
                        monomial: u.clone(),
                        vars: z,
                    });
                }
            }
        }
    }

    let mut minimal: Vec<StandardPair> = candidates
        .iter()
        .filter(|p| !candidates.iter().any(|q| stv_less(q, p)))
        .cloned()
        .collect();
    minimal.sort();
    minimal
}

/// Exhaustive search over all facet orders with no dimension restriction,
/// re-deriving the per-step test from ideal arithmetic: a prefix extends by
/// a facet iff intersecting with its irreducible ideal removes exactly one
/// minimal generator `u`, the colon by `u` is a monomial prime, and the new
/// Stanley `Z`-set does not strictly contain an earlier one. Unlike the main
/// crate's search, every unused facet is a candidate at every depth, so this
/// does not rely on the existence of dimension-non-increasing shellings.
pub fn shellable_backtracking(gamma: &Multicomplex) -> bool {
    fn rec(
        facets: &[shellkit::multicomplex::ExtVector],
        used: &mut [bool],
        z_sets: &mut Vec<VarSet>,
        k_prev: &MonomialIdeal,
    ) -> bool {
        if used.iter().all(|&u| u) {
            return true;
        }
        for i in 0..facets.len() {
            if used[i] {
                continue;
            }
            let j = Multicomplex::irreducible_ideal_of(&facets[i]);
            let k_next = k_prev.intersect(&j).expect("same n");
            let gone: Vec<&Monomial> = k_prev
                .gens()
                .iter()
                .filter(|g| !k_next.contains(g).expect("same n"))
                .collect();
            let [u] = gone.as_slice() else { continue };
            let Some(prime) = k_next.colon(u).expect("same n").as_prime() else {
                continue;
            };
            let z = prime.complement();
            if z_sets.iter().any(|w| w.is_proper_subset(&z)) {
                continue;
            }
            used[i] = true;
            z_sets.push(z);
            if rec(facets, used, z_sets, &k_next) {
                return true;
            }
            z_sets.pop();
            used[i] = false;
        }
        false
    }

    let facets = gamma.facets();
    let mut used = vec![false; facets.len()];
    let mut z_sets = Vec::with_capacity(facets.len());
    rec(&facets, &mut used, &mut z_sets, &MonomialIdeal::unit(gamma.n()))
}

/// Tries every permutation of the facets with the full shelling check
/// (step test plus condition (2)); `true` iff some order is a shelling.
pub fn shellable_bruteforce(gamma: &Multicomplex) -> Result<bool, OracleError> {
    const GUARD: usize = 8;
    let facets = gamma.facets();
    if facets.len() > GUARD {
        return Err(OracleError::TooManyFacets {
            found: facets.len(),
            guard: GUARD,
        });
    }
    let r = facets.len();
    Ok(facets
        .into_iter()
        .permutations(r)
        .any(|order| verify_shelling(gamma, &order).is_ok()))
}
