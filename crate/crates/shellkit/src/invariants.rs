//! Hilbert series machinery: the `h_{ki}` table of a prime filtration, the
//! per-dimension series `H_i(t) = Q_i(t)/(1-t)^i`, Hilbert series of the
//! modules `Ext^i(S/I, S)`, Castelnuovo-Mumford regularity, depth, the
//! Stanley conjecture check, and Borel-type detection.

use std::collections::BTreeMap;

use crate::decomposition::dimension_filtration;
use crate::error::{Error, Result};
use crate::filtration::{
    pretty_clean_filtration, verify_pretty_clean, PrimeFiltrationRecord, StanleyDecomposition,
};
use crate::monomial::{MonomialIdeal, VarSet};

/// The table `h_{ki} = #{steps with deg u = k and dim S/P = i}` of a prime
/// filtration.
///
/// Tables built by [`h_table`] from a verified pretty clean filtration are
/// flagged; regularity is only defined on flagged tables, since the formula
/// is proven under the pretty clean hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    n: usize,
    entries: BTreeMap<(u32, usize), u64>,
    verified_pretty_clean: bool,
}

impl HilbertTable {
    /// Builds a table from raw entries, e.g. deserialized data; such a table
    /// carries no pretty clean provenance and is refused by [`regularity`].
    pub fn from_entries(n: usize, entries: BTreeMap<(u32, usize), u64>) -> Self {
        HilbertTable {
            n,
            entries,
            verified_pretty_clean: false,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &BTreeMap<(u32, usize), u64> {
        &self.entries
    }

    pub fn get(&self, k: u32, i: usize) -> u64 {
        self.entries.get(&(k, i)).copied().unwrap_or(0)
    }

    /// Sum of all entries; equals the filtration length.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_verified(&self) -> bool {
        self.verified_pretty_clean
    }
}

/// Counts the steps of a filtration by `(deg u, n - |P|)` after verifying
/// that the record is a pretty clean prime filtration.
pub fn h_table(f: &PrimeFiltrationRecord) -> Result<HilbertTable> {
    verify_pretty_clean(f)?;
    let n = f.base.n();
    let mut entries: BTreeMap<(u32, usize), u64> = BTreeMap::new();
    for s in &f.steps {
        *entries.entry((s.degree(), n - s.prime.len())).or_insert(0) += 1;
    }
    Ok(HilbertTable {
        n,
        entries,
        verified_pretty_clean: true,
    })
}

/// A finite sum of terms `Q(t)/(1-t)^pole` with Laurent polynomial
/// numerators, stored as `(exponent, coefficient)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTerm {
    /// `(exponent, coefficient)` pairs, exponents strictly increasing.
    pub numerator: Vec<(i64, i64)>,
    pub pole: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    /// Terms with pairwise distinct pole orders, sorted by pole.
    pub terms: Vec<SeriesTerm>,
}

fn binomial(top: i64, bottom: i64) -> i64 {
    if bottom < 0 || top < bottom {
        return 0;
    }
    let mut acc: i64 = 1;
    for j in 0..bottom {
        acc = acc * (top - j) / (j + 1);
    }
    acc
}

impl RationalSeries {
    pub fn zero() -> Self {
        RationalSeries { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.numerator.is_empty())
    }

    /// Taylor coefficients of `t^0 .. t^degree_bound`.
    ///
    /// Numerator exponents may be negative (Ext series); contributions below
    /// degree zero are simply not reported.
    pub fn expand(&self, degree_bound: u32) -> Vec<i64> {
        let mut out = vec![0i64; degree_bound as usize + 1];
        for term in &self.terms {
            let p = term.pole as i64;
            for &(e, c) in &term.numerator {
                for (d, slot) in out.iter_mut().enumerate() {
                    let m = d as i64 - e;
                    if p == 0 {
                        if m == 0 {
                            *slot += c;
                        }
                    } else if m >= 0 {
                        // 1/(1-t)^p = sum_m C(m+p-1, p-1) t^m
                        *slot += c * binomial(m + p - 1, p - 1);
                    }
                }
            }
        }
        out
    }
}

/// `Hilb(S/I) = Σ_i H_i(t)` with `H_i(t) = Q_i(t)/(1-t)^i`,
/// `Q_i(t) = Σ_k h_{ki} t^k`.
pub fn hilbert_series(table: &HilbertTable) -> RationalSeries {
    let mut by_pole: BTreeMap<usize, Vec<(i64, i64)>> = BTreeMap::new();
    for (&(k, i), &h) in table.entries() {
        if h > 0 {
            by_pole.entry(i).or_default().push((k as i64, h as i64));
        }
    }
    RationalSeries {
        terms: by_pole
            .into_iter()
            .map(|(pole, numerator)| SeriesTerm { numerator, pole })
            .collect(),
    }
}

/// The series `H_i(t)` alone (zero series when the column is empty).
pub fn dimension_series(table: &HilbertTable, i: usize) -> RationalSeries {
    let numerator: Vec<(i64, i64)> = table
        .entries()
        .iter()
        .filter(|&(&(_, col), &h)| col == i && h > 0)
        .map(|(&(k, _), &h)| (k as i64, h as i64))
        .collect();
    if numerator.is_empty() {
        RationalSeries::zero()
    } else {
        RationalSeries {
            terms: vec![SeriesTerm { numerator, pole: i }],
        }
    }
}

/// `Hilb(Ext^i(S/I, S)) = (Σ_k h_{k,n-i} t^{n-i-k}) / (1-t)^{n-i}` in the
/// normalized Laurent presentation; the zero series when column `n-i` is
/// empty.
pub fn ext_hilbert(table: &HilbertTable, i: usize) -> Result<RationalSeries> {
    let n = table.n();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let col = n - i;
    let mut numerator: Vec<(i64, i64)> = table
        .entries()
        .iter()
        .filter(|&(&(_, c), &h)| c == col && h > 0)
        .map(|(&(k, _), &h)| (col as i64 - k as i64, h as i64))
        .collect();
    numerator.sort();
    if numerator.is_empty() {
        Ok(RationalSeries::zero())
    } else {
        Ok(RationalSeries {
            terms: vec![SeriesTerm {
                numerator,
                pole: col,
            }],
        })
    }
}

/// `reg(S/I) = max{k : h_{ki} ≠ 0}`; valid only for tables from verified
/// pretty clean filtrations.
pub fn regularity(table: &HilbertTable) -> Result<u32> {
    if !table.is_verified() {
        return Err(Error::UnverifiedTable);
    }
    Ok(table
        .entries()
        .iter()
        .filter(|(_, &h)| h > 0)
        .map(|(&(k, _), _)| k)
        .max()
        .expect("a filtration has at least one step"))
}

/// `depth S/I = min{i : D_i(S/I) ≠ D_{i-1}(S/I)}`, read off the dimension
/// filtration; proven for pretty clean quotients, hence refused otherwise.
pub fn depth_pretty_clean(ideal: &MonomialIdeal) -> Result<i64> {
    if !crate::filtration::is_pretty_clean(ideal)? {
        return Err(Error::NotPrettyClean);
    }
    Ok(dimension_filtration(ideal)?.first_jump())
}

/// Stanley's conjecture instance check: `min |Z_i| ≥ depth S/I`. For
/// decompositions from pretty clean filtrations this is a theorem, so a
/// `false` here indicates a bug.
pub fn stanley_conjecture_check(dec: &StanleyDecomposition, depth: i64) -> bool {
    dec.summands
        .iter()
        .map(|(_, z)| z.len() as i64)
        .min()
        .map_or(true, |min_z| min_z >= depth)
}

/// Borel type: `I : x_j^∞ = I : (x_1, ..., x_j)^∞` for every `j`.
pub fn is_borel_type(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    for j in 0..ideal.n() {
        let single = ideal.saturate_var(j)?;
        let prefix = VarSet::new(ideal.n(), 0..=j)?;
        if single != ideal.saturate_vars(&prefix)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience pipeline: table of the canonical pretty clean filtration of
/// `I`, or `None` when `S/I` is not pretty clean.
pub fn h_table_of_ideal(ideal: &MonomialIdeal) -> Result<Option<HilbertTable>> {
    match pretty_clean_filtration(ideal)? {
        Some(f) => Ok(Some(h_table(&f)?)),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec()))).unwrap()
    }

    fn table_of(i: &MonomialIdeal) -> HilbertTable {
        h_table_of_ideal(i).unwrap().unwrap()
    }

    #[test]
    fn h_table_examples() {
        let t = table_of(&ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(t.get(0, 1), 1);
        assert_eq!(t.get(1, 0), 1);
        assert_eq!(t.total(), 2);

        let t = table_of(&ideal(2, &[&[3, 0], &[1, 1]]));
        assert_eq!(t.get(0, 1), 1);
        assert_eq!(t.get(1, 0), 1);
        assert_eq!(t.get(2, 0), 1);

        // prime: single entry h_{0, n-|P|}
        let t = table_of(&ideal(3, &[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(t.entries().len(), 1);
        assert_eq!(t.get(0, 1), 1);
    }

    #[test]
    fn hilbert_series_expansions() {
        // (x², xy): t + 1/(1-t) -> 1, 2, 1, 1, ...
        let s = hilbert_series(&table_of(&ideal(2, &[&[2, 0], &[1, 1]])));
        assert_eq!(s.expand(4), vec![1, 2, 1, 1, 1]);

        // (x1x3): (1+t)/(1-t)^2 -> 1, 3, 5, 7, ...
        let s = hilbert_series(&table_of(&ideal(3, &[&[1, 0, 1]])));
        assert_eq!(s.expand(3), vec![1, 3, 5, 7]);
        assert_eq!(s.terms.len(), 1);
        assert_eq!(s.terms[0].numerator, vec![(0, 1), (1, 1)]);
        assert_eq!(s.terms[0].pole, 2);

        // prime of height c in n variables: 1/(1-t)^{n-c}
        let s = hilbert_series(&table_of(&ideal(3, &[&[1, 0, 0], &[0, 1, 0]])));
        assert_eq!(s.expand(4), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn ext_hilbert_examples() {
        let t = table_of(&ideal(2, &[&[2, 0], &[1, 1]]));
        // i = n = 2: row 0 gives numerator t^{-1}, pole 0
        let s = ext_hilbert(&t, 2).unwrap();
        assert_eq!(s.terms.len(), 1);
        assert_eq!(s.terms[0].numerator, vec![(-1, 1)]);
        assert_eq!(s.terms[0].pole, 0);
        // i = 0: column n - 0 = 2 is empty
        assert!(ext_hilbert(&t, 0).unwrap().is_zero());

        // prime P, i = |P|: t^{n-|P|}/(1-t)^{n-|P|}
        let t = table_of(&ideal(3, &[&[1, 0, 0], &[0, 1, 0]]));
        let s = ext_hilbert(&t, 2).unwrap();
        assert_eq!(s.terms[0].numerator, vec![(1, 1)]);
        assert_eq!(s.terms[0].pole, 1);

        assert_eq!(
            ext_hilbert(&t, 4).unwrap_err(),
            Error::IndexOutOfRange { index: 4, max: 3 }
        );
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(regularity(&table_of(&ideal(2, &[&[2, 0], &[1, 1]]))).unwrap(), 1);
        assert_eq!(regularity(&table_of(&ideal(2, &[&[3, 0], &[1, 1]]))).unwrap(), 2);
        assert_eq!(
            regularity(&table_of(&ideal(3, &[&[1, 0, 0], &[0, 1, 0]]))).unwrap(),
            0
        );

        let raw = HilbertTable::from_entries(2, BTreeMap::from([((0, 1), 1)]));
        assert_eq!(regularity(&raw).unwrap_err(), Error::UnverifiedTable);
    }

    #[test]
    fn depth_examples() {
        assert_eq!(depth_pretty_clean(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap(), 0);
        // prime: depth = dim = n - |P|
        assert_eq!(
            depth_pretty_clean(&ideal(3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap(),
            1
        );
        // path complex Stanley-Reisner ring is Cohen-Macaulay of dimension 2
        assert_eq!(depth_pretty_clean(&ideal(3, &[&[1, 0, 1]])).unwrap(), 2);

        let two_planes = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        );
        assert_eq!(
            depth_pretty_clean(&two_planes).unwrap_err(),
            Error::NotPrettyClean
        );
    }

    #[test]
    fn stanley_conjecture_instances() {
        for i in [
            ideal(2, &[&[2, 0], &[1, 1]]),
            ideal(2, &[&[3, 0], &[1, 1]]),
            ideal(3, &[&[1, 0, 1]]),
            ideal(3, &[&[1, 0, 0], &[0, 1, 0]]),
        ] {
            let f = pretty_clean_filtration(&i).unwrap().unwrap();
            let dec = crate::filtration::stanley_decomposition(&f);
            let depth = depth_pretty_clean(&i).unwrap();
            assert!(stanley_conjecture_check(&dec, depth), "failed for {}", i);
        }
    }

    #[test]
    fn borel_type_examples() {
        assert!(is_borel_type(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap());
        assert!(is_borel_type(&ideal(2, &[&[3, 0], &[1, 1]])).unwrap());
        // initial-segment prime
        assert!(is_borel_type(&ideal(3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap());
        let two_planes = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        );
        assert!(!is_borel_type(&two_planes).unwrap());
        // non-initial prime (x2) fails already at j = 1
        assert!(!is_borel_type(&ideal(2, &[&[0, 1]])).unwrap());
        assert_eq!(
            is_borel_type(&MonomialIdeal::unit(2)).unwrap_err(),
            Error::UnitIdeal
        );
    }

    #[test]
    fn dimension_series_splits_hilbert_series() {
        let t = table_of(&ideal(2, &[&[2, 0], &[1, 1]]));
        let full = hilbert_series(&t).expand(6);
        let mut summed = vec![0i64; 7];
        for i in 0..=t.n() {
            for (d, c) in dimension_series(&t, i).expand(6).into_iter().enumerate() {
                summed[d] += c;
            }
        }
        assert_eq!(full, summed);
    }
}
