//! Exact arithmetic on monomials and monomial ideals.
//!
//! Ideals are kept in canonical form: the generating set is the divisibility
//! antichain, sorted lexicographically by exponent vector. The zero ideal has
//! no generators, the unit ideal has the single generator `1`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x^a` in `n` variables, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1`.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i` (0-based).
    pub fn var(i: usize, n: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// True iff `self` divides `other` (componentwise `<=`).
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial { exps }
    }

    /// Product. Panics on exponent overflow; wraparound is never silent.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// `self / gcd(self, other)`.
    pub fn div_gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a - a.min(b))
            .collect();
        Monomial { exps }
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> VarSet {
        let members = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect();
        VarSet {
            n: self.exps.len(),
            members,
        }
    }

    /// True iff the monomial is a power of a single variable (or `1`).
    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|&&e| e > 0).count() <= 1
    }
}

/// All monomials in `n` variables of total degree at most `d`, in
/// lexicographic order of exponent vectors.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn fill(exps: &mut Vec<u32>, left: u32, n: usize, out: &mut Vec<Monomial>) {
        if exps.len() == n {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps.push(e);
            fill(exps, left - e, n, out);
            exps.pop();
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(n), d, n, &mut out);
    out.sort();
    out
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A subset of the variable indices `{0, ..., n-1}`.
///
/// Doubles as a monomial prime ideal: the ideal generated by the member
/// variables. Displayed and serialized 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarSet {
    n: usize,
    members: BTreeSet<usize>,
}

impl VarSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(Error::VariableOutOfRange { var: v, n });
        }
        Ok(VarSet { n, members })
    }

    pub fn empty(n: usize) -> Self {
        VarSet {
            n,
            members: BTreeSet::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        VarSet {
            n,
            members: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn complement(&self) -> VarSet {
        VarSet {
            n: self.n,
            members: (0..self.n).filter(|i| !self.members.contains(i)).collect(),
        }
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_subset(&self, other: &VarSet) -> bool {
        self.members.is_subset(&other.members) && self.members != other.members
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        VarSet {
            n: self.n,
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &VarSet) -> VarSet {
        VarSet {
            n: self.n,
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    /// The prime ideal generated by the member variables.
    pub fn prime_ideal(&self) -> MonomialIdeal {
        let gens = self.members.iter().map(|&i| Monomial::var(i, self.n));
        MonomialIdeal::new(self.n, gens).expect("variables are in range")
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        write!(f, ")")
    }
}

/// A monomial ideal given by its minimal (antichain) generating set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`, minimalized to the divisibility
    /// antichain and sorted. Idempotent on already-minimal input.
    pub fn new(n: usize, raw: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut gens: Vec<Monomial> = Vec::new();
        for m in raw {
            if m.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.len(),
                });
            }
            gens.push(m);
        }
        gens.sort();
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for (i, m) in gens.iter().enumerate() {
            let redundant = gens
                .iter()
                .enumerate()
                .any(|(j, g)| j != i && g.divides(m));
            if !redundant {
                minimal.push(m.clone());
            }
        }
        Ok(MonomialIdeal { n, gens: minimal })
    }

    /// The ideal `(0)`.
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![] }
    }

    /// The ideal `(1) = S`.
    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper means neither the unit ideal; the zero ideal is proper.
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn check_n(&self, found: usize) -> Result<()> {
        if self.n != found {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found,
            });
        }
        Ok(())
    }

    /// Membership: true iff some generator divides `m`. The zero ideal
    /// contains no monomial, the unit ideal contains all.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_n(m.len())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Ideal inclusion `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_n(other.n)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sum `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_n(other.n)?;
        MonomialIdeal::new(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    /// Adds a single monomial generator.
    pub fn add_gen(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_n(m.len())?;
        MonomialIdeal::new(self.n, self.gens.iter().cloned().chain([m.clone()]))
    }

    /// Intersection `I ∩ J` via pairwise lcms of the generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_n(other.n)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(self.n, raw)
    }

    /// Colon by a monomial: `I : u = ({g / gcd(g, u)})`.
    ///
    /// Satisfies `(I : u) : v = I : uv`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_n(u.len())?;
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| g.div_gcd(u)))
    }

    /// Colon by an ideal: `I : J = ⋂_{h ∈ gens(J)} I : h`.
    ///
    /// `I : (0) = S` by convention.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_n(other.n)?;
        if other.is_zero() {
            return Ok(MonomialIdeal::unit(self.n));
        }
        let mut acc = MonomialIdeal::unit(self.n);
        for h in &other.gens {
            acc = acc.intersect(&self.colon(h)?)?;
        }
        Ok(acc)
    }

    /// Saturation `I : x_j^∞`: zero out exponent `j` in every generator.
    pub fn saturate_var(&self, j: usize) -> Result<MonomialIdeal> {
        if j >= self.n {
            return Err(Error::VariableOutOfRange { var: j, n: self.n });
        }
        MonomialIdeal::new(
            self.n,
            self.gens.iter().map(|g| {
                let mut exps = g.exponents().to_vec();
                exps[j] = 0;
                Monomial::new(exps)
            }),
        )
    }

    /// Saturation by the prime generated by `vars`: iterated colon until the
    /// chain stabilizes.
    pub fn saturate_vars(&self, vars: &VarSet) -> Result<MonomialIdeal> {
        self.check_n(vars.n())?;
        if vars.is_empty() {
            return Err(Error::EmptyVarSet);
        }
        let prime = vars.prime_ideal();
        let mut current = self.clone();
        loop {
            let next = current.colon_ideal(&prime)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// If all generators are single variables (or the ideal is `(0)`), the
    /// generating variable set; `None` otherwise. The zero ideal is the prime
    /// of the empty set.
    pub fn as_prime(&self) -> Option<VarSet> {
        let mut members = BTreeSet::new();
        for g in &self.gens {
            if g.degree() != 1 {
                return None;
            }
            let i = g.exponents().iter().position(|&e| e == 1).unwrap();
            members.insert(i);
        }
        Some(VarSet {
            n: self.n,
            members,
        })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec()))).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        // {x^2, x^3, xy} -> {x^2, xy}
        let i = ideal(2, &[&[2, 0], &[3, 0], &[1, 1]]);
        assert_eq!(i, ideal(2, &[&[2, 0], &[1, 1]]));
    }

    #[test]
    fn minimalize_empty_is_zero() {
        let i = MonomialIdeal::new(2, []).unwrap();
        assert!(i.is_zero());
        assert_eq!(i, MonomialIdeal::zero(2));
    }

    #[test]
    fn minimalize_four_vars() {
        // {x1x3, x1x3x4, x2x4} -> {x1x3, x2x4}
        let i = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 1, 1], &[0, 1, 0, 1]]);
        assert_eq!(i, ideal(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]));
    }

    #[test]
    fn minimalize_idempotent() {
        let i = ideal(2, &[&[2, 0], &[3, 0], &[1, 1]]);
        let again = MonomialIdeal::new(2, i.gens().to_vec()).unwrap();
        assert_eq!(i, again);
    }

    #[test]
    fn minimalize_rejects_length_mismatch() {
        let err = MonomialIdeal::new(2, [Monomial::new(vec![1, 0, 0])]).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.contains(&Monomial::new(vec![2, 1])).unwrap()); // x^2 y
        assert!(!i.contains(&Monomial::new(vec![0, 3])).unwrap()); // y^3
        assert!(!MonomialIdeal::zero(2)
            .contains(&Monomial::new(vec![5, 5]))
            .unwrap());
        assert!(MonomialIdeal::unit(2)
            .contains(&Monomial::new(vec![0, 0]))
            .unwrap());
    }

    #[test]
    fn intersect_examples() {
        // (x) ∩ (x^2, y) = (x^2, xy)
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[2, 0], &[1, 1]]));

        // (x1,x2) ∩ (x3,x4) = the four mixed products
        let p = ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let q = ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(
            p.intersect(&q).unwrap(),
            ideal(
                4,
                &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]
            )
        );

        // I ∩ S = I
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.intersect(&MonomialIdeal::unit(2)).unwrap(), i);
    }

    #[test]
    fn colon_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        // (x^2, xy) : x = (x, y)
        assert_eq!(
            i.colon(&Monomial::var(0, 2)).unwrap(),
            ideal(2, &[&[1, 0], &[0, 1]])
        );
        // I : 1 = I
        assert_eq!(i.colon(&Monomial::one(2)).unwrap(), i);
        // (x1x3, x1x4, x2x3, x2x4) : x1 = (x3, x4)
        let j = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        );
        assert_eq!(
            j.colon(&Monomial::var(0, 4)).unwrap(),
            ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn colon_composes() {
        let i = ideal(2, &[&[3, 1], &[1, 2]]);
        let u = Monomial::new(vec![1, 0]);
        let v = Monomial::new(vec![1, 1]);
        assert_eq!(
            i.colon(&u).unwrap().colon(&v).unwrap(),
            i.colon(&u.mul(&v)).unwrap()
        );
    }

    #[test]
    fn saturate_single_variable() {
        // x^2 is a generator, so (x^2, xy) : x^∞ is the unit ideal
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.saturate_var(0).unwrap().is_unit());
        // (x^2, xy) : y^∞ = (x)
        assert_eq!(i.saturate_var(1).unwrap(), ideal(2, &[&[1, 0]]));
        // x_j regular mod a prime not containing it
        let p = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(p.saturate_var(2).unwrap(), p);
    }

    #[test]
    fn saturate_variable_set() {
        // (x^2, xy) : (x, y)^∞ = (x)
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let m = VarSet::full(2);
        assert_eq!(i.saturate_vars(&m).unwrap(), ideal(2, &[&[1, 0]]));
        assert_eq!(
            i.saturate_vars(&VarSet::empty(2)).unwrap_err(),
            Error::EmptyVarSet
        );
    }

    #[test]
    fn as_prime_recognition() {
        assert_eq!(
            ideal(3, &[&[1, 0, 0], &[0, 0, 1]]).as_prime(),
            Some(VarSet::new(3, [0, 2]).unwrap())
        );
        assert_eq!(
            MonomialIdeal::zero(3).as_prime(),
            Some(VarSet::empty(3))
        );
        assert_eq!(ideal(2, &[&[2, 0]]).as_prime(), None);
        assert_eq!(MonomialIdeal::unit(2).as_prime(), None);
    }

    #[test]
    fn display_forms() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.to_string(), "(x1*x2,x1^2)");
        assert_eq!(MonomialIdeal::unit(2).to_string(), "(1)");
        assert_eq!(MonomialIdeal::zero(2).to_string(), "()");
        assert_eq!(VarSet::new(2, [0, 1]).unwrap().to_string(), "(x1,x2)");
    }
}
