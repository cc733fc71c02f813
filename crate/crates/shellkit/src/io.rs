//! JSON wire formats.
//!
//! Every domain type has a plain serde representation (`*Repr`) with
//! conversions in both directions. Conventions: variable and vertex indices
//! are 1-based on the wire (0-based internally), and the infinity entry of a
//! face is the string literal `"inf"`.

use serde::{Deserialize, Serialize};

use crate::decomposition::{IrreducibleComponent, StandardPair};
use crate::error::{Error, Result};
use crate::filtration::{FiltrationStep, PrimeFiltrationRecord, Shelling};
use crate::invariants::{HilbertTable, RationalSeries, SeriesTerm};
use crate::monomial::{Monomial, MonomialIdeal, VarSet};
use crate::multicomplex::{ExtNat, ExtVector, Multicomplex};
use crate::simplicial::SimplicialComplex;

/// `{"n": 2, "gens": [[2,0],[1,1]]}`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdealRepr {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealRepr {
    fn from(i: &MonomialIdeal) -> Self {
        IdealRepr {
            n: i.n(),
            gens: i.gens().iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;
    fn try_from(r: IdealRepr) -> Result<Self> {
        MonomialIdeal::new(r.n, r.gens.into_iter().map(Monomial::new))
    }
}

/// A face entry: a number or the literal `"inf"`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ExtNatRepr {
    Fin(u32),
    Word(String),
}

impl From<ExtNat> for ExtNatRepr {
    fn from(e: ExtNat) -> Self {
        match e {
            ExtNat::Fin(v) => ExtNatRepr::Fin(v),
            ExtNat::Inf => ExtNatRepr::Word("inf".into()),
        }
    }
}

impl TryFrom<ExtNatRepr> for ExtNat {
    type Error = Error;
    fn try_from(r: ExtNatRepr) -> Result<Self> {
        match r {
            ExtNatRepr::Fin(v) => Ok(ExtNat::Fin(v)),
            ExtNatRepr::Word(w) if w == "inf" => Ok(ExtNat::Inf),
            ExtNatRepr::Word(w) => Err(Error::InvalidInput(format!(
                "face entry must be a number or \"inf\", got \"{}\"",
                w
            ))),
        }
    }
}

pub fn face_repr(a: &ExtVector) -> Vec<ExtNatRepr> {
    a.entries().iter().map(|&e| e.into()).collect()
}

pub fn face_from_repr(entries: Vec<ExtNatRepr>) -> Result<ExtVector> {
    Ok(ExtVector::new(
        entries
            .into_iter()
            .map(ExtNat::try_from)
            .collect::<Result<Vec<_>>>()?,
    ))
}

/// `{"n":2, "maximal":[[0,"inf"],[2,0]]}`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MulticomplexRepr {
    pub n: usize,
    pub maximal: Vec<Vec<ExtNatRepr>>,
}

impl From<&Multicomplex> for MulticomplexRepr {
    fn from(g: &Multicomplex) -> Self {
        MulticomplexRepr {
            n: g.n(),
            maximal: g.maximal().iter().map(face_repr).collect(),
        }
    }
}

impl TryFrom<MulticomplexRepr> for Multicomplex {
    type Error = Error;
    fn try_from(r: MulticomplexRepr) -> Result<Self> {
        let points = r
            .maximal
            .into_iter()
            .map(face_from_repr)
            .collect::<Result<Vec<_>>>()?;
        Multicomplex::from_maximal(r.n, points)
    }
}

fn vars_repr(z: &VarSet) -> Vec<usize> {
    z.iter().map(|i| i + 1).collect()
}

fn vars_from_repr(n: usize, members: Vec<usize>) -> Result<VarSet> {
    let zero_based = members
        .into_iter()
        .map(|v| {
            v.checked_sub(1)
                .ok_or_else(|| Error::InvalidInput("variable indices are 1-based".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    VarSet::new(n, zero_based)
}

/// `{"n":4, "facets":[[1,2],[3,4]]}` with 1-based vertex labels.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexRepr {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexRepr {
    fn from(d: &SimplicialComplex) -> Self {
        ComplexRepr {
            n: d.n(),
            facets: d.facets().iter().map(vars_repr).collect(),
        }
    }
}

impl TryFrom<ComplexRepr> for SimplicialComplex {
    type Error = Error;
    fn try_from(r: ComplexRepr) -> Result<Self> {
        let facets = r
            .facets
            .into_iter()
            .map(|f| vars_from_repr(r.n, f))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(r.n, facets)
    }
}

/// `{"vars":[1], "exps":[3]}` — an irreducible component `(x_i^{b_i})`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComponentRepr {
    pub vars: Vec<usize>,
    pub exps: Vec<u32>,
}

impl From<&IrreducibleComponent> for ComponentRepr {
    fn from(c: &IrreducibleComponent) -> Self {
        ComponentRepr {
            vars: c.pure_powers().keys().map(|&i| i + 1).collect(),
            exps: c.pure_powers().values().copied().collect(),
        }
    }
}

/// `{"u":[2,0], "Z":[]}` with 1-based variable indices in `Z`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairRepr {
    pub u: Vec<u32>,
    #[serde(rename = "Z")]
    pub z: Vec<usize>,
}

impl From<&StandardPair> for PairRepr {
    fn from(p: &StandardPair) -> Self {
        PairRepr {
            u: p.monomial.exponents().to_vec(),
            z: vars_repr(&p.vars),
        }
    }
}

/// `{"terms":[{"num":[[0,1]],"pole":1}]}` with `num` as
/// `(exponent, coefficient)` pairs.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SeriesRepr {
    pub terms: Vec<SeriesTermRepr>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SeriesTermRepr {
    pub num: Vec<(i64, i64)>,
    pub pole: usize,
}

impl From<&RationalSeries> for SeriesRepr {
    fn from(s: &RationalSeries) -> Self {
        SeriesRepr {
            terms: s
                .terms
                .iter()
                .map(|t| SeriesTermRepr {
                    num: t.numerator.clone(),
                    pole: t.pole,
                })
                .collect(),
        }
    }
}

impl From<SeriesRepr> for RationalSeries {
    fn from(r: SeriesRepr) -> Self {
        RationalSeries {
            terms: r
                .terms
                .into_iter()
                .map(|t| SeriesTerm {
                    numerator: t.num,
                    pole: t.pole,
                })
                .collect(),
        }
    }
}

/// h-table as `(k, i, h)` triples.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HTableRepr {
    pub n: usize,
    pub entries: Vec<(u32, usize, u64)>,
}

impl From<&HilbertTable> for HTableRepr {
    fn from(t: &HilbertTable) -> Self {
        HTableRepr {
            n: t.n(),
            entries: t
                .entries()
                .iter()
                .map(|(&(k, i), &h)| (k, i, h))
                .collect(),
        }
    }
}

impl From<HTableRepr> for HilbertTable {
    fn from(r: HTableRepr) -> Self {
        HilbertTable::from_entries(
            r.n,
            r.entries.into_iter().map(|(k, i, h)| ((k, i), h)).collect(),
        )
    }
}

/// One filtration step with all witnesses.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FiltrationStepRepr {
    pub u: Vec<u32>,
    /// 1-based generators of the step prime.
    pub prime: Vec<usize>,
    pub before: Vec<Vec<u32>>,
    pub after: Vec<Vec<u32>>,
}

/// An exported prime filtration record, re-verifiable by third parties.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FiltrationRepr {
    pub n: usize,
    pub base: Vec<Vec<u32>>,
    pub steps: Vec<FiltrationStepRepr>,
}

impl From<&PrimeFiltrationRecord> for FiltrationRepr {
    fn from(f: &PrimeFiltrationRecord) -> Self {
        let gens = |i: &MonomialIdeal| -> Vec<Vec<u32>> {
            i.gens().iter().map(|g| g.exponents().to_vec()).collect()
        };
        FiltrationRepr {
            n: f.base.n(),
            base: gens(&f.base),
            steps: f
                .steps
                .iter()
                .map(|s| FiltrationStepRepr {
                    u: s.monomial.exponents().to_vec(),
                    prime: vars_repr(&s.prime),
                    before: gens(&s.ideal_before),
                    after: gens(&s.ideal_after),
                })
                .collect(),
        }
    }
}

impl TryFrom<FiltrationRepr> for PrimeFiltrationRecord {
    type Error = Error;
    fn try_from(r: FiltrationRepr) -> Result<Self> {
        let n = r.n;
        let ideal = |gens: Vec<Vec<u32>>| -> Result<MonomialIdeal> {
            MonomialIdeal::new(n, gens.into_iter().map(Monomial::new))
        };
        Ok(PrimeFiltrationRecord {
            base: ideal(r.base)?,
            steps: r
                .steps
                .into_iter()
                .map(|s| {
                    Ok(FiltrationStep {
                        monomial: Monomial::new(s.u),
                        prime: vars_from_repr(n, s.prime)?,
                        ideal_before: ideal(s.before)?,
                        ideal_after: ideal(s.after)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        })
    }
}

/// One shelling step with all witnesses.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ShellingStepRepr {
    pub facet: Vec<ExtNatRepr>,
    pub u: Vec<u32>,
    /// 1-based members of the Stanley variable set.
    #[serde(rename = "Z")]
    pub z: Vec<usize>,
    /// 1-based generators of the step prime.
    pub prime: Vec<usize>,
    pub before: Vec<Vec<u32>>,
    pub after: Vec<Vec<u32>>,
}

/// An exported shelling: the multicomplex, the facet order and the per-step
/// witnesses.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ShellingRepr {
    pub n: usize,
    pub maximal: Vec<Vec<ExtNatRepr>>,
    pub order: Vec<Vec<ExtNatRepr>>,
    pub steps: Vec<ShellingStepRepr>,
}

impl From<&Shelling> for ShellingRepr {
    fn from(sh: &Shelling) -> Self {
        let gens = |i: &MonomialIdeal| -> Vec<Vec<u32>> {
            i.gens().iter().map(|g| g.exponents().to_vec()).collect()
        };
        ShellingRepr {
            n: sh.multicomplex().n(),
            maximal: sh.multicomplex().maximal().iter().map(face_repr).collect(),
            order: sh.steps().iter().map(|s| face_repr(s.facet())).collect(),
            steps: sh
                .steps()
                .iter()
                .map(|s| ShellingStepRepr {
                    facet: face_repr(s.facet()),
                    u: s.monomial().exponents().to_vec(),
                    z: vars_repr(s.stanley_vars()),
                    prime: vars_repr(s.prime()),
                    before: gens(s.ideal_before()),
                    after: gens(s.ideal_after()),
                })
                .collect(),
        }
    }
}

/// Re-verifies an exported shelling: rebuilds the multicomplex, re-runs the
/// shelling check on the recorded order, and compares every recorded witness
/// with the recomputed one.
pub fn verify_shelling_repr(r: &ShellingRepr) -> Result<Shelling> {
    let gamma = Multicomplex::try_from(MulticomplexRepr {
        n: r.n,
        maximal: r.maximal.clone(),
    })?;
    let order = r
        .order
        .iter()
        .map(|f| face_from_repr(f.clone()))
        .collect::<Result<Vec<_>>>()?;
    let shelling = crate::filtration::verify_shelling(&gamma, &order)?;
    if ShellingRepr::from(&shelling) != *r {
        return Err(Error::ShellingMismatch);
    }
    Ok(shelling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::{find_shelling, filtration_from_shelling, verify_pretty_clean};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec()))).unwrap()
    }

    #[test]
    fn ideal_json_round_trip() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let json = serde_json::to_string(&IdealRepr::from(&i)).unwrap();
        assert_eq!(json, r#"{"n":2,"gens":[[1,1],[2,0]]}"#);
        let back: IdealRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(MonomialIdeal::try_from(back).unwrap(), i);
    }

    #[test]
    fn multicomplex_json_round_trip() {
        let g = Multicomplex::of_ideal(&ideal(2, &[&[3, 0], &[1, 1]])).unwrap();
        let json = serde_json::to_string(&MulticomplexRepr::from(&g)).unwrap();
        assert_eq!(json, r#"{"n":2,"maximal":[[0,"inf"],[2,0]]}"#);
        let back: MulticomplexRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(Multicomplex::try_from(back).unwrap(), g);

        let bad: MulticomplexRepr =
            serde_json::from_str(r#"{"n":2,"maximal":[[0,"oops"]]}"#).unwrap();
        assert!(matches!(
            Multicomplex::try_from(bad),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn complex_json_round_trip() {
        let json = r#"{"n":4,"facets":[[1,2],[3,4]]}"#;
        let repr: ComplexRepr = serde_json::from_str(json).unwrap();
        let d = SimplicialComplex::try_from(repr.clone()).unwrap();
        assert_eq!(d.facets().len(), 2);
        assert_eq!(serde_json::to_string(&ComplexRepr::from(&d)).unwrap(), json);

        let bad: ComplexRepr = serde_json::from_str(r#"{"n":2,"facets":[[0]]}"#).unwrap();
        assert!(SimplicialComplex::try_from(bad).is_err());
    }

    #[test]
    fn filtration_record_round_trip() {
        let i = ideal(2, &[&[3, 0], &[1, 1]]);
        let gamma = Multicomplex::of_ideal(&i).unwrap();
        let sh = find_shelling(&gamma).unwrap().unwrap();
        let f = filtration_from_shelling(&gamma, &sh).unwrap();
        let repr = FiltrationRepr::from(&f);
        let json = serde_json::to_string(&repr).unwrap();
        let back: FiltrationRepr = serde_json::from_str(&json).unwrap();
        let record = PrimeFiltrationRecord::try_from(back).unwrap();
        assert_eq!(record, f);
        verify_pretty_clean(&record).unwrap();
    }

    #[test]
    fn shelling_record_verifies_and_detects_tampering() {
        let i = ideal(2, &[&[3, 0], &[1, 1]]);
        let gamma = Multicomplex::of_ideal(&i).unwrap();
        let sh = find_shelling(&gamma).unwrap().unwrap();
        let repr = ShellingRepr::from(&sh);
        let json = serde_json::to_string(&repr).unwrap();
        let back: ShellingRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(verify_shelling_repr(&back).unwrap(), sh);

        let mut tampered = repr.clone();
        tampered.steps[1].u = vec![9, 9];
        assert_eq!(
            verify_shelling_repr(&tampered).unwrap_err(),
            Error::ShellingMismatch
        );
    }

    #[test]
    fn series_and_table_round_trips() {
        let t = crate::invariants::h_table_of_ideal(&ideal(2, &[&[2, 0], &[1, 1]]))
            .unwrap()
            .unwrap();
        let s = crate::invariants::hilbert_series(&t);
        let json = serde_json::to_string(&SeriesRepr::from(&s)).unwrap();
        let back: SeriesRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(RationalSeries::from(back), s);

        let json = serde_json::to_string(&HTableRepr::from(&t)).unwrap();
        let back: HTableRepr = serde_json::from_str(&json).unwrap();
        let t2 = HilbertTable::from(back);
        assert_eq!(t2.entries(), t.entries());
        assert!(!t2.is_verified());
    }
}
