//! Shellings of multicomplexes and the prime filtrations they induce:
//! verification and search for shellings, pretty clean and clean tests,
//! Stanley decompositions.
//!
//! A shelling is a facet order `a_1, ..., a_r` such that each difference
//! `Γ(a_i) ∖ Γ(a_1, ..., a_{i-1})` is a Stanley set (condition (1)) and the
//! `Z`-sets of the Stanley sets never grow from an earlier step to a strictly
//! larger later one (condition (2)). Condition (1) is decided ideal-
//! theoretically on the descending chain `K_i = ⋂_{j≤i} I(Γ(a_j))`: the step
//! passes iff exactly one minimal generator `u` of `K_{i-1}` leaves the ideal
//! and `K_i : u` is a monomial prime.

use std::collections::BTreeSet;
use std::fmt;

use crate::decomposition::associated_primes;
use crate::error::{Error, Result};
use crate::monomial::{monomials_up_to, Monomial, MonomialIdeal, VarSet};
use crate::multicomplex::{ExtVector, Multicomplex};

/// One verified step of a shelling, with all ideal-theoretic witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingStep {
    facet: ExtVector,
    monomial: Monomial,
    stanley_vars: VarSet,
    prime: VarSet,
    ideal_before: MonomialIdeal,
    ideal_after: MonomialIdeal,
}

impl ShellingStep {
    pub fn facet(&self) -> &ExtVector {
        &self.facet
    }

    /// The base monomial `u` of the Stanley set `u K[Z]`.
    pub fn monomial(&self) -> &Monomial {
        &self.monomial
    }

    /// The variable set `Z` of the Stanley set.
    pub fn stanley_vars(&self) -> &VarSet {
        &self.stanley_vars
    }

    /// The prime `P = K_i : u`, the complement of `Z`.
    pub fn prime(&self) -> &VarSet {
        &self.prime
    }

    /// `K_{i-1}`.
    pub fn ideal_before(&self) -> &MonomialIdeal {
        &self.ideal_before
    }

    /// `K_i = K_{i-1} ∩ I(Γ(a_i))`.
    pub fn ideal_after(&self) -> &MonomialIdeal {
        &self.ideal_after
    }

    pub fn degree(&self) -> u32 {
        self.monomial.degree()
    }
}

/// A verified shelling of a multicomplex. Only produced by
/// [`verify_shelling`] and [`find_shelling`], so holding one certifies
/// shellability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shelling {
    multicomplex: Multicomplex,
    steps: Vec<ShellingStep>,
}

impl Shelling {
    pub fn multicomplex(&self) -> &Multicomplex {
        &self.multicomplex
    }

    pub fn steps(&self) -> &[ShellingStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The facet order `a_1, ..., a_r`.
    pub fn order(&self) -> Vec<ExtVector> {
        self.steps.iter().map(|s| s.facet.clone()).collect()
    }
}

/// The ideal-theoretic test for condition (1) at a single facet.
fn try_step(
    k_prev: &MonomialIdeal,
    facet: &ExtVector,
) -> std::result::Result<ShellingStep, String> {
    let j = Multicomplex::irreducible_ideal_of(facet);
    let k_next = k_prev.intersect(&j).expect("same ambient size");
    let new_gens: Vec<&Monomial> = k_prev
        .gens()
        .iter()
        .filter(|g| !k_next.contains(g).expect("same ambient size"))
        .collect();
    let u = match new_gens.as_slice() {
        [u] => (*u).clone(),
        [] => {
            return Err("the facet adds no face: the difference set is empty".into());
        }
        _ => {
            return Err(format!(
                "{} minimal generators leave the ideal ({}), so the difference \
                 set is not a Stanley set",
                new_gens.len(),
                new_gens
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
    };
    let colon = k_next.colon(&u).expect("same ambient size");
    let prime = match colon.as_prime() {
        Some(p) => p,
        None => {
            return Err(format!(
                "the colon ideal {} by the new generator {} is not a monomial prime",
                colon, u
            ));
        }
    };
    let stanley_vars = prime.complement();
    Ok(ShellingStep {
        facet: facet.clone(),
        monomial: u,
        stanley_vars,
        prime,
        ideal_before: k_prev.clone(),
        ideal_after: k_next,
    })
}

/// Checks conditions (1) and (2) for the given facet order; `order` must be
/// a permutation of the facets of `gamma`.
pub fn verify_shelling(gamma: &Multicomplex, order: &[ExtVector]) -> Result<Shelling> {
    if gamma.is_empty() {
        return Err(Error::EmptyMulticomplex);
    }
    let mut sorted = order.to_vec();
    sorted.sort();
    if sorted != gamma.facets() {
        return Err(Error::NotAFacetPermutation);
    }
    let mut steps: Vec<ShellingStep> = Vec::with_capacity(order.len());
    let mut k_prev = MonomialIdeal::unit(gamma.n());
    for (idx, facet) in order.iter().enumerate() {
        let step = try_step(&k_prev, facet).map_err(|reason| Error::NotAShelling {
            step: idx + 1,
            reason,
        })?;
        if let Some(earlier) = steps
            .iter()
            .find(|e| e.stanley_vars.is_proper_subset(&step.stanley_vars))
        {
            return Err(Error::NotAShelling {
                step: idx + 1,
                reason: format!(
                    "condition (2) violated: the Stanley set of earlier facet {} has \
                     Z-set strictly inside this step's",
                    earlier.facet
                ),
            });
        }
        k_prev = step.ideal_after.clone();
        steps.push(step);
    }
    Ok(Shelling {
        multicomplex: gamma.clone(),
        steps,
    })
}

/// Backtracking search for a shelling of `gamma`; `Ok(None)` means not
/// shellable.
///
/// The search only explores orders with non-increasing `|ip(a)|`, which is
/// complete: a shellable multicomplex always admits a shelling whose Stanley
/// set dimensions do not increase, and there the Stanley `Z`-sets are the
/// infinite parts of the facets. Ties are broken lexicographically, so the
/// witness is deterministic.
pub fn find_shelling(gamma: &Multicomplex) -> Result<Option<Shelling>> {
    if gamma.is_empty() {
        return Err(Error::EmptyMulticomplex);
    }
    let mut facets = gamma.facets();
    facets.sort_by(|a, b| b.ip().len().cmp(&a.ip().len()).then_with(|| a.cmp(b)));

    fn rec(
        facets: &[ExtVector],
        used: &mut [bool],
        steps: &mut Vec<ShellingStep>,
        k_prev: &MonomialIdeal,
    ) -> bool {
        if steps.len() == facets.len() {
            return true;
        }
        let first_unused = used.iter().position(|u| !u).expect("some facet unused");
        let target_ip = facets[first_unused].ip().len();
        for i in first_unused..facets.len() {
            if used[i] {
                continue;
            }
            if facets[i].ip().len() != target_ip {
                // sorted by |ip| descending: only smaller infinite parts follow,
                // and placing one now would strand the larger ones
                break;
            }
            let step = match try_step(k_prev, &facets[i]) {
                Ok(step) => step,
                Err(_) => continue,
            };
            // condition (2) safety check; implied by the dimension restriction
            // but kept as a guard against search-strategy changes
            if steps
                .iter()
                .any(|e| e.stanley_vars.is_proper_subset(&step.stanley_vars))
            {
                continue;
            }
            used[i] = true;
            let k_next = step.ideal_after.clone();
            steps.push(step);
            if rec(facets, used, steps, &k_next) {
                return true;
            }
            steps.pop();
            used[i] = false;
        }
        false
    }

    let mut used = vec![false; facets.len()];
    let mut steps = Vec::with_capacity(facets.len());
    let unit = MonomialIdeal::unit(gamma.n());
    if rec(&facets, &mut used, &mut steps, &unit) {
        Ok(Some(Shelling {
            multicomplex: gamma.clone(),
            steps,
        }))
    } else {
        Ok(None)
    }
}

/// One step of an ascending prime filtration: `I_t = (I_{t-1}, u_t)` with
/// `I_{t-1} : u_t = P_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    pub monomial: Monomial,
    pub prime: VarSet,
    /// `I_{t-1}`.
    pub ideal_before: MonomialIdeal,
    /// `I_t`.
    pub ideal_after: MonomialIdeal,
}

impl FiltrationStep {
    pub fn degree(&self) -> u32 {
        self.monomial.degree()
    }
}

/// A recorded prime filtration `I = I_0 ⊂ I_1 ⊂ ... ⊂ I_r = S` of `S/I`,
/// ascending, with one cyclic prime quotient per step.
///
/// The record is plain data; [`verify_pretty_clean`] re-derives every
/// witness, so third-party records can be checked without trust.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFiltrationRecord {
    pub base: MonomialIdeal,
    pub steps: Vec<FiltrationStep>,
}

impl PrimeFiltrationRecord {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn primes(&self) -> Vec<VarSet> {
        self.steps.iter().map(|s| s.prime.clone()).collect()
    }
}

impl fmt::Display for PrimeFiltrationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.base)?;
        for s in &self.steps {
            writeln!(
                f,
                "  + {}  (prime {}, degree {}) -> {}",
                s.monomial,
                s.prime,
                s.degree(),
                s.ideal_after
            )?;
        }
        Ok(())
    }
}

/// Reverses the descending `K`-chain of a shelling into the ascending prime
/// filtration of `S/I(Γ)`.
pub fn filtration_from_shelling(
    gamma: &Multicomplex,
    shelling: &Shelling,
) -> Result<PrimeFiltrationRecord> {
    if shelling.multicomplex != *gamma {
        return Err(Error::ShellingMismatch);
    }
    let base = gamma.ideal_of();
    let steps = shelling
        .steps
        .iter()
        .rev()
        .map(|s| FiltrationStep {
            monomial: s.monomial.clone(),
            prime: s.prime.clone(),
            ideal_before: s.ideal_after.clone(),
            ideal_after: s.ideal_before.clone(),
        })
        .collect();
    Ok(PrimeFiltrationRecord { base, steps })
}

/// Re-derives every step of the record and checks the pretty clean order
/// condition and `Supp = Ass`. Step index `0` in the error marks a global
/// (non-step) condition.
pub fn verify_pretty_clean(f: &PrimeFiltrationRecord) -> Result<()> {
    if f.base.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut prev = f.base.clone();
    for (t, s) in f.steps.iter().enumerate() {
        let step = t + 1;
        let fail = |reason: String| Error::InvalidFiltration { step, reason };
        if s.ideal_before != prev {
            return Err(fail(format!(
                "chain broken: expected ideal {} before the step, found {}",
                prev, s.ideal_before
            )));
        }
        if prev.contains(&s.monomial)? {
            return Err(fail(format!(
                "step monomial {} already lies in the ideal",
                s.monomial
            )));
        }
        let after = prev.add_gen(&s.monomial)?;
        if after != s.ideal_after {
            return Err(fail(format!(
                "adding {} yields {}, not the recorded {}",
                s.monomial, after, s.ideal_after
            )));
        }
        let colon = prev.colon(&s.monomial)?;
        if colon.as_prime().as_ref() != Some(&s.prime) {
            return Err(fail(format!(
                "colon by {} is {}, not the recorded prime {}",
                s.monomial,
                colon,
                s.prime.prime_ideal()
            )));
        }
        prev = after;
    }
    if !prev.is_unit() {
        return Err(Error::InvalidFiltration {
            step: 0,
            reason: format!("chain ends at {} instead of the unit ideal", prev),
        });
    }
    for (i, si) in f.steps.iter().enumerate() {
        for sj in &f.steps[i + 1..] {
            if si.prime.is_proper_subset(&sj.prime) {
                return Err(Error::InvalidFiltration {
                    step: i + 1,
                    reason: format!(
                        "pretty clean order violated: prime {} strictly precedes the \
                         larger prime {}",
                        si.prime, sj.prime
                    ),
                });
            }
        }
    }
    let supp: BTreeSet<VarSet> = f.steps.iter().map(|s| s.prime.clone()).collect();
    let ass: BTreeSet<VarSet> = associated_primes(&f.base)?.into_iter().collect();
    if supp != ass {
        return Err(Error::InvalidFiltration {
            step: 0,
            reason: "the primes of the filtration do not equal the associated primes"
                .into(),
        });
    }
    Ok(())
}

/// Searches for a shelling of the multicomplex of `I` and converts it; the
/// witness filtration is pretty clean by construction.
pub fn pretty_clean_filtration(ideal: &MonomialIdeal) -> Result<Option<PrimeFiltrationRecord>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let gamma = Multicomplex::of_ideal(ideal)?;
    match find_shelling(&gamma)? {
        Some(sh) => Ok(Some(filtration_from_shelling(&gamma, &sh)?)),
        None => Ok(None),
    }
}

/// `S/I` is pretty clean iff its multicomplex is shellable.
pub fn is_pretty_clean(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(pretty_clean_filtration(ideal)?.is_some())
}

/// Clean = pretty clean with pairwise incomparable associated primes.
pub fn is_clean(ideal: &MonomialIdeal) -> Result<bool> {
    if !is_pretty_clean(ideal)? {
        return Ok(false);
    }
    let ass = associated_primes(ideal)?;
    Ok(!ass
        .iter()
        .any(|p| ass.iter().any(|q| p.is_proper_subset(q))))
}

/// A direct sum decomposition `S/I = ⊕ u_i K[Z_i]` read off a prime
/// filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pub summands: Vec<(Monomial, VarSet)>,
}

/// One summand `(u_t, Z_t = complement of P_t)` per filtration step, in
/// chain order.
pub fn stanley_decomposition(f: &PrimeFiltrationRecord) -> StanleyDecomposition {
    StanleyDecomposition {
        summands: f
            .steps
            .iter()
            .map(|s| (s.monomial.clone(), s.prime.complement()))
            .collect(),
    }
}

/// Degree-bounded partition check: every monomial of degree at most
/// `degree_bound` outside `I` must lie in exactly one summand `u K[Z]`, and
/// every monomial in `I` in none.
pub fn verify_stanley_partition(
    ideal: &MonomialIdeal,
    dec: &StanleyDecomposition,
    degree_bound: u32,
) -> Result<bool> {
    let n = ideal.n();
    for m in monomials_up_to(n, degree_bound) {
        let hits = dec
            .summands
            .iter()
            .filter(|(u, z)| {
                (0..n).all(|i| {
                    if z.contains(i) {
                        m.exponent(i) >= u.exponent(i)
                    } else {
                        m.exponent(i) == u.exponent(i)
                    }
                })
            })
            .count();
        let standard = !ideal.contains(&m)?;
        if hits != usize::from(standard) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multicomplex::ExtNat;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec()))).unwrap()
    }

    fn ev(entries: &[i64]) -> ExtVector {
        ExtVector::new(
            entries
                .iter()
                .map(|&v| if v < 0 { ExtNat::Inf } else { ExtNat::Fin(v as u32) })
                .collect(),
        )
    }

    fn vs(n: usize, members: &[usize]) -> VarSet {
        VarSet::new(n, members.iter().copied()).unwrap()
    }

    #[test]
    fn verify_shelling_paper_example() {
        let gamma = Multicomplex::of_ideal(&ideal(2, &[&[3, 0], &[1, 1]])).unwrap();
        let sh = verify_shelling(&gamma, &[ev(&[0, -1]), ev(&[1, 0]), ev(&[2, 0])]).unwrap();
        let monomials: Vec<String> = sh.steps().iter().map(|s| s.monomial().to_string()).collect();
        assert_eq!(monomials, vec!["1", "x1", "x1^2"]);
        let primes: Vec<VarSet> = sh.steps().iter().map(|s| s.prime().clone()).collect();
        assert_eq!(primes, vec![vs(2, &[0]), vs(2, &[0, 1]), vs(2, &[0, 1])]);
        assert_eq!(sh.steps()[0].ideal_after(), &ideal(2, &[&[1, 0]]));
        assert_eq!(sh.steps()[2].ideal_after(), &ideal(2, &[&[3, 0], &[1, 1]]));
    }

    #[test]
    fn verify_shelling_rejects_non_permutation() {
        let gamma = Multicomplex::of_ideal(&ideal(2, &[&[3, 0], &[1, 1]])).unwrap();
        assert_eq!(
            verify_shelling(&gamma, &[ev(&[0, -1]), ev(&[1, 0])]).unwrap_err(),
            Error::NotAFacetPermutation
        );
        assert_eq!(
            verify_shelling(&gamma, &[ev(&[0, -1]), ev(&[1, 0]), ev(&[1, 0])]).unwrap_err(),
            Error::NotAFacetPermutation
        );
    }

    #[test]
    fn two_plane_ideal_fails_at_step_two() {
        let gamma = Multicomplex::of_ideal(&ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        ))
        .unwrap();
        for order in [
            [ev(&[0, 0, -1, -1]), ev(&[-1, -1, 0, 0])],
            [ev(&[-1, -1, 0, 0]), ev(&[0, 0, -1, -1])],
        ] {
            match verify_shelling(&gamma, &order) {
                Err(Error::NotAShelling { step: 2, .. }) => {}
                other => panic!("expected failure at step 2, got {:?}", other),
            }
        }
    }

    #[test]
    fn single_zero_infinity_facet_is_trivially_shellable() {
        let gamma = Multicomplex::from_maximal(3, [ev(&[0, -1, 0])]).unwrap();
        let sh = verify_shelling(&gamma, &[ev(&[0, -1, 0])]).unwrap();
        assert!(sh.steps()[0].monomial().is_one());
        assert_eq!(sh.steps()[0].prime(), &vs(3, &[0, 2]));
    }

    #[test]
    fn find_shelling_examples() {
        let gamma = Multicomplex::of_ideal(&ideal(2, &[&[3, 0], &[1, 1]])).unwrap();
        let sh = find_shelling(&gamma).unwrap().unwrap();
        assert_eq!(sh.order(), vec![ev(&[0, -1]), ev(&[1, 0]), ev(&[2, 0])]);

        let two_planes = Multicomplex::of_ideal(&ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        ))
        .unwrap();
        assert!(find_shelling(&two_planes).unwrap().is_none());

        // Borel-type example
        let borel = Multicomplex::of_ideal(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap();
        assert!(find_shelling(&borel).unwrap().is_some());

        assert_eq!(
            find_shelling(&Multicomplex::empty(2)).unwrap_err(),
            Error::EmptyMulticomplex
        );
    }

    #[test]
    fn filtration_from_shelling_reverses_chain() {
        let i = ideal(2, &[&[3, 0], &[1, 1]]);
        let gamma = Multicomplex::of_ideal(&i).unwrap();
        let sh = find_shelling(&gamma).unwrap().unwrap();
        let f = filtration_from_shelling(&gamma, &sh).unwrap();
        assert_eq!(f.base, i);
        assert_eq!(f.len(), 3);
        assert_eq!(
            f.primes(),
            vec![vs(2, &[0, 1]), vs(2, &[0, 1]), vs(2, &[0])]
        );
        assert_eq!(f.steps[0].ideal_before, i);
        assert!(f.steps[2].ideal_after.is_unit());
        verify_pretty_clean(&f).unwrap();

        let other = Multicomplex::of_ideal(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap();
        assert_eq!(
            filtration_from_shelling(&other, &sh).unwrap_err(),
            Error::ShellingMismatch
        );
    }

    #[test]
    fn verify_pretty_clean_rejects_bad_order() {
        // the chain 0 ⊂ (y)/I ⊂ (x,y)/I ⊂ R over I = (x²,xy): every step is a
        // prime quotient but the primes come in the order (x),(x,y),(x,y)
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let i1 = ideal(2, &[&[2, 0], &[0, 1]]);
        let i2 = ideal(2, &[&[1, 0], &[0, 1]]);
        let f = PrimeFiltrationRecord {
            base: i.clone(),
            steps: vec![
                FiltrationStep {
                    monomial: Monomial::new(vec![0, 1]),
                    prime: vs(2, &[0]),
                    ideal_before: i.clone(),
                    ideal_after: i1.clone(),
                },
                FiltrationStep {
                    monomial: Monomial::new(vec![1, 0]),
                    prime: vs(2, &[0, 1]),
                    ideal_before: i1,
                    ideal_after: i2.clone(),
                },
                FiltrationStep {
                    monomial: Monomial::one(2),
                    prime: vs(2, &[0, 1]),
                    ideal_before: i2,
                    ideal_after: MonomialIdeal::unit(2),
                },
            ],
        };
        match verify_pretty_clean(&f) {
            Err(Error::InvalidFiltration { step: 1, reason }) => {
                assert!(reason.contains("pretty clean order"), "{}", reason);
            }
            other => panic!("expected order violation, got {:?}", other),
        }
    }

    #[test]
    fn verify_pretty_clean_rejects_tampered_monomial() {
        let i = ideal(2, &[&[3, 0], &[1, 1]]);
        let gamma = Multicomplex::of_ideal(&i).unwrap();
        let sh = find_shelling(&gamma).unwrap().unwrap();
        let mut f = filtration_from_shelling(&gamma, &sh).unwrap();
        f.steps[0].monomial = Monomial::new(vec![5, 5]);
        assert!(matches!(
            verify_pretty_clean(&f),
            Err(Error::InvalidFiltration { step: 1, .. })
        ));
    }

    #[test]
    fn pretty_clean_and_clean_verdicts() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(is_pretty_clean(&i).unwrap());
        assert!(!is_clean(&i).unwrap());

        let two_planes = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        );
        assert!(!is_pretty_clean(&two_planes).unwrap());
        assert!(!is_clean(&two_planes).unwrap());

        let p = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(is_pretty_clean(&p).unwrap());
        assert!(is_clean(&p).unwrap());

        // Stanley-Reisner ideal of the path {1,2},{2,3}
        let path = ideal(3, &[&[1, 0, 1]]);
        assert!(is_clean(&path).unwrap());

        assert_eq!(
            is_pretty_clean(&MonomialIdeal::unit(2)).unwrap_err(),
            Error::UnitIdeal
        );
    }

    #[test]
    fn stanley_decomposition_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let f = pretty_clean_filtration(&i).unwrap().unwrap();
        let dec = stanley_decomposition(&f);
        let mut summands = dec.summands.clone();
        summands.sort();
        assert_eq!(
            summands,
            vec![
                (Monomial::one(2), vs(2, &[1])),
                (Monomial::new(vec![1, 0]), vs(2, &[])),
            ]
        );
        assert!(verify_stanley_partition(&i, &dec, 8).unwrap());

        // a partition with a missing summand fails the check
        let short = StanleyDecomposition {
            summands: dec.summands[..1].to_vec(),
        };
        assert!(!verify_stanley_partition(&i, &short, 8).unwrap());
    }

    #[test]
    fn filtration_length_is_arithmetic_degree() {
        for i in [
            ideal(2, &[&[3, 0], &[1, 1]]),
            ideal(2, &[&[2, 0], &[1, 1]]),
            ideal(3, &[&[1, 0, 1]]),
        ] {
            let f = pretty_clean_filtration(&i).unwrap().unwrap();
            assert_eq!(
                f.len() as u64,
                crate::decomposition::arithmetic_degree(&i).unwrap()
            );
        }
    }
}
