//! Extension data of a datum under the pure braid action.
//!
//! The acting group is generated by the pure movers `A_ij`. Its stabilizers
//! of the datum exactly, up to simultaneous conjugation, and up to `Aut G`
//! are the chain `H' ⊆ H''' ⊆ H''`; their indices are the orbit sizes at the
//! three canonicalization levels. On `H''` the braid action induces
//! `ε̃: H'' → Aut G`, and for a centerless `G` every element of `H'''` acts
//! as conjugation by a unique `φ(h) ∈ G`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::datum::Datum;
use crate::error::{Error, Result};
use crate::group::{automorphism_group, AutGroup, Elem, PermGroup};
use crate::hurwitz::{apply_word, apply_word_in_place, pure_generators, BraidWord};
use crate::orbit::{
    coset_action, enumerate_orbit, expand, intersect_actions, schreier_generators, Canon,
    Canonicalizer, CosetAction, Mover, SchreierGenerator,
};
use crate::Limits;

#[derive(Clone, Debug)]
pub struct ExtensionReport {
    pub datum: Datum,
    /// Pure orbit size of the exact tuple.
    pub exact_orbit_index: usize,
    /// Set when `tₙ` is not central: the full twist then moves the exact
    /// tuple, so this index may exceed `[H_X : H']` by a divisor of `ord(tₙ)`.
    pub exact_index_center_ambiguous: bool,
    /// `[H_X : H''']`.
    pub inn_orbit_index: usize,
    /// `[H_X : H'']`.
    pub aut_orbit_index: usize,
    /// `ε̃` on the Schreier generators of `H''`, as positions in `Aut G`.
    pub eps_generators: Vec<(SchreierGenerator, usize)>,
    /// The subgroup of `Aut G` generated by the values of `ε̃`, as positions.
    pub eps_image: Vec<usize>,
    /// Order of the image of `ε̃` in `Out G`.
    pub eps_image_in_out: usize,
    pub center_trivial: bool,
    pub abelian: bool,
}

/// Position of the unique automorphism with `η(sourceᵢ) = targetᵢ`.
pub fn solve_automorphism(auts: &AutGroup, source: &[Elem], target: &[Elem]) -> Option<usize> {
    auts.automorphisms()
        .iter()
        .position(|eta| source.iter().zip(target).all(|(&s, &t)| eta.apply(s) == t))
}

/// All `g` with `g sᵢ g⁻¹ = tᵢ` for every `i`.
pub fn conjugators(group: &PermGroup, source: &[Elem], target: &[Elem]) -> Vec<Elem> {
    group
        .elements()
        .filter(|&g| {
            source
                .iter()
                .zip(target)
                .all(|(&s, &t)| group.conj(g, s) == t)
        })
        .collect()
}

/// `ε̃` of a stabilizer word: the automorphism matching the moved tuple.
pub fn induced_automorphism(auts: &AutGroup, d: &Datum, word: &BraidWord) -> Result<Option<usize>> {
    let moved = apply_word(d, word)?;
    Ok(solve_automorphism(auts, d.entries(), moved.entries()))
}

/// Closure of a set of automorphisms (given by position) under composition.
pub fn generated_subgroup(auts: &AutGroup, gens: &[usize]) -> Vec<usize> {
    let identity = AutGroup::IDENTITY;
    let mut seen = alloc::vec![false; auts.len()];
    seen[identity] = true;
    let mut out = alloc::vec![identity];
    let mut k = 0;
    while k < out.len() {
        let x = auts.get(out[k]).clone();
        for &g in gens {
            let y = auts
                .position(&x.compose(auts.get(g)))
                .expect("Aut G is closed under composition");
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        k += 1;
    }
    out.sort_unstable();
    out
}

pub fn extension_report(d: &Datum, limits: &Limits) -> Result<ExtensionReport> {
    let auts = automorphism_group(d.group());
    extension_report_with(d, &auts, limits)
}

/// Orbit indices at the three levels and `ε̃` on the Schreier generators of `H''`.
pub fn extension_report_with(
    d: &Datum,
    auts: &AutGroup,
    limits: &Limits,
) -> Result<ExtensionReport> {
    let group = d.group();
    let pure = Mover::pure(d.len())?;
    let exact = enumerate_orbit(d, &pure, Canonicalizer::Exact, limits)?;
    let inn = enumerate_orbit(d, &pure, Canonicalizer::Inn, limits)?;
    let aut = enumerate_orbit(d, &pure, Canonicalizer::Aut(auts), limits)?;

    let mut eps_generators = Vec::new();
    for s in schreier_generators(&coset_action(&aut))? {
        let eta = induced_automorphism(auts, d, &s.word)?.ok_or_else(|| {
            Error::Inconsistent(alloc::format!(
                "no automorphism realizes stabilizer word {}",
                s.word
            ))
        })?;
        eps_generators.push((s, eta));
    }
    let values: Vec<usize> = eps_generators.iter().map(|(_, e)| *e).collect();
    let eps_image = generated_subgroup(auts, &values);
    let inner_part = eps_image.iter().filter(|&&k| auts.is_inner(k)).count();

    let last = *d.entries().last().expect("datum has entries");
    Ok(ExtensionReport {
        datum: d.clone(),
        exact_orbit_index: exact.size(),
        exact_index_center_ambiguous: !group.center_elems().contains(&last),
        inn_orbit_index: inn.size(),
        aut_orbit_index: aut.size(),
        eps_image_in_out: eps_image.len() / inner_part,
        eps_generators,
        eps_image,
        center_trivial: group.is_centerless(),
        abelian: group.is_abelian(),
    })
}

/// `φ(w)` for one Schreier generator of `H'''`, with its replay check.
#[derive(Clone, Debug)]
pub struct PhiValue {
    pub generator: SchreierGenerator,
    pub value: Elem,
    /// `w` applied to the tuple equals the simultaneous conjugate by `φ(w)`.
    pub verified: bool,
}

/// The centerless minimum: the coset action of `H'''` with `φ` on its generators.
#[derive(Clone, Debug)]
pub struct MinimalExtension {
    pub datum: Datum,
    pub base: CosetAction,
    pub phi: Vec<PhiValue>,
}

impl MinimalExtension {
    /// Degree of the base over `M₀,ₙ`, i.e. `[H_X : H''']`.
    pub fn degree(&self) -> usize {
        self.base.index()
    }

    pub fn certificate_passes(&self) -> bool {
        self.phi.iter().all(|p| p.verified)
    }
}

pub fn centerless_minimum(d: &Datum, limits: &Limits) -> Result<MinimalExtension> {
    let group = d.group();
    if !group.is_centerless() {
        return Err(Error::NotCenterless(group.center_elems().len()));
    }
    let pure = Mover::pure(d.len())?;
    let inn = enumerate_orbit(d, &pure, Canonicalizer::Inn, limits)?;
    let base = coset_action(&inn);
    let mut phi = Vec::new();
    for generator in schreier_generators(&base)? {
        let moved = apply_word(d, &generator.word)?;
        let found = conjugators(group, d.entries(), moved.entries());
        let value = match found.as_slice() {
            [g] => *g,
            [] => {
                return Err(Error::Inconsistent(alloc::format!(
                    "stabilizer word {} is not realized by a conjugation",
                    generator.word
                )))
            }
            _ => {
                return Err(Error::Inconsistent(String::from(
                    "several conjugators in a centerless group",
                )))
            }
        };
        let verified = d.conjugate_by(value) == moved;
        phi.push(PhiValue {
            generator,
            value,
            verified,
        });
    }
    Ok(MinimalExtension {
        datum: d.clone(),
        base,
        phi,
    })
}

/// Every pure generator checked to fix the tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianCertificate {
    pub checked: Vec<String>,
    pub orbit_size: usize,
}

/// For abelian `G`: each `A_ij` fixes the datum exactly, so the pure orbit is a point.
pub fn abelian_certificate(d: &Datum, limits: &Limits) -> Result<AbelianCertificate> {
    let group = d.group();
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let mut checked = Vec::new();
    for a in pure_generators(d.len())? {
        let mut tuple = d.entries().to_vec();
        apply_word_in_place(group, &mut tuple, &a.word);
        if tuple != d.entries() {
            return Err(Error::Inconsistent(alloc::format!(
                "{} moved an abelian datum",
                a.name()
            )));
        }
        checked.push(a.name());
    }
    let orbit = enumerate_orbit(d, &Mover::pure(d.len())?, Canonicalizer::Exact, limits)?;
    if orbit.size() != 1 {
        return Err(Error::Inconsistent(alloc::format!(
            "abelian pure orbit has {} points",
            orbit.size()
        )));
    }
    Ok(AbelianCertificate {
        checked,
        orbit_size: orbit.size(),
    })
}

/// A computable element of the extension set: a finite-index subgroup of the
/// pure braid group given as a basepoint stabilizer, labeled by the datum.
///
/// A point reached by the transversal word `w` is labeled by `w · datum`;
/// the levels list the canonicalizers whose keys the points record.
#[derive(Clone, Debug)]
pub struct ExtensionHandle {
    datum: Datum,
    levels: Vec<Canon>,
    action: CosetAction,
}

impl ExtensionHandle {
    /// The handle of one canonical level (`H'`, `H'''` or `H''`).
    pub fn level(
        d: &Datum,
        canon: Canon,
        auts: Option<&AutGroup>,
        limits: &Limits,
    ) -> Result<Self> {
        let pure = Mover::pure(d.len())?;
        let orbit = enumerate_orbit(d, &pure, Canonicalizer::new(canon, auts)?, limits)?;
        Ok(ExtensionHandle {
            datum: d.clone(),
            levels: alloc::vec![canon],
            action: coset_action(&orbit),
        })
    }

    pub fn index(&self) -> usize {
        self.action.index()
    }

    pub fn levels(&self) -> &[Canon] {
        &self.levels
    }

    pub fn action(&self) -> &CosetAction {
        &self.action
    }

    pub fn datum(&self) -> &Datum {
        &self.datum
    }

    /// Tuple labeling `point`.
    pub fn label(&self, point: usize) -> Datum {
        let word = expand(
            self.action.movers(),
            self.datum.len(),
            &self.action.transversal()[point],
        );
        apply_word(&self.datum, &word).expect("strand counts agree")
    }

    pub fn stabilizer_generators(&self) -> Result<Vec<SchreierGenerator>> {
        schreier_generators(&self.action)
    }

    /// True if `word` fixes the datum at every level of this handle.
    pub fn fixes(&self, word: &BraidWord, auts: Option<&AutGroup>) -> Result<bool> {
        let moved = apply_word(&self.datum, word)?;
        for &level in &self.levels {
            let canon = Canonicalizer::new(level, auts)?;
            let group = self.datum.group();
            if canon.key(group, moved.entries()) != canon.key(group, self.datum.entries()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self ≥ other`: every stabilizer generator of `self` fixes `other`'s
    /// basepoint, checked in `other`'s action and by replay on the datum,
    /// with the induced automorphisms agreeing.
    pub fn dominates(&self, other: &ExtensionHandle, auts: &AutGroup) -> Result<bool> {
        if self.datum.entries() != other.datum.entries()
            || self.action.movers() != other.action.movers()
        {
            return Err(Error::MoverMismatch);
        }
        for s in self.stabilizer_generators()? {
            if other.action.act(other.action.basepoint(), &s.movers) != other.action.basepoint() {
                return Ok(false);
            }
            if !other.fixes(&s.word, Some(auts))? {
                return Ok(false);
            }
            // both handles see the same tuple action, so ε̃ agrees when defined
            let ours = induced_automorphism(auts, &self.datum, &s.word)?;
            let theirs = induced_automorphism(auts, &other.datum, &s.word)?;
            if ours != theirs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Join in the directed set: the stabilizer of the paired basepoints.
pub fn join(a: &ExtensionHandle, b: &ExtensionHandle) -> Result<ExtensionHandle> {
    if a.datum.entries() != b.datum.entries() {
        return Err(Error::MoverMismatch);
    }
    let action = intersect_actions(&a.action, &b.action)?;
    let mut levels = a.levels.clone();
    levels.extend_from_slice(&b.levels);
    levels.sort_unstable();
    levels.dedup();
    Ok(ExtensionHandle {
        datum: a.datum.clone(),
        levels,
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use alloc::sync::Arc;

    fn example() -> Datum {
        let g = Arc::new(builtin::symmetric(3));
        Datum::parse(&g, &["(1 2)", "(2 3)", "(2 3)", "(1 2)"]).unwrap()
    }

    #[test]
    fn example_report() {
        let r = extension_report(&example(), &Limits::default()).unwrap();
        assert!(r.aut_orbit_index >= 2);
        assert_eq!(r.inn_orbit_index, r.aut_orbit_index);
        assert!(r.exact_orbit_index >= r.inn_orbit_index);
        assert!(r.center_trivial);
        assert!(!r.abelian);
    }

    #[test]
    fn abelian_report_is_trivial() {
        let z3 = Arc::new(builtin::cyclic(3));
        let d = Datum::parse(&z3, &["(1 2 3)", "(1 3 2)", "(1 2 3)", "(1 3 2)"]).unwrap();
        let r = extension_report(&d, &Limits::default()).unwrap();
        assert_eq!(
            (r.exact_orbit_index, r.inn_orbit_index, r.aut_orbit_index),
            (1, 1, 1)
        );
        assert_eq!(r.eps_image.len(), 1);
        let cert = abelian_certificate(&d, &Limits::default()).unwrap();
        assert_eq!(cert.checked, ["A12", "A13", "A23"]);
        assert_eq!(
            centerless_minimum(&d, &Limits::default()).unwrap_err(),
            Error::NotCenterless(3)
        );
    }

    #[test]
    fn minimum_on_example_datum() {
        let m = centerless_minimum(&example(), &Limits::default()).unwrap();
        assert!(m.certificate_passes());
        let r = extension_report(&example(), &Limits::default()).unwrap();
        assert_eq!(m.degree(), r.inn_orbit_index);
        assert_eq!(
            abelian_certificate(&example(), &Limits::default()).unwrap_err(),
            Error::NotAbelian
        );
    }

    #[test]
    fn joins() {
        let d = example();
        let lim = Limits::default();
        let auts = automorphism_group(d.group());
        let exact = ExtensionHandle::level(&d, Canon::Exact, None, &lim).unwrap();
        let inn = ExtensionHandle::level(&d, Canon::Inn, None, &lim).unwrap();
        let aut = ExtensionHandle::level(&d, Canon::Aut, Some(&auts), &lim).unwrap();
        assert_eq!(join(&exact, &exact).unwrap().index(), exact.index());
        assert_eq!(join(&exact, &inn).unwrap().index(), exact.index());
        assert_eq!(join(&inn, &aut).unwrap().index(), inn.index());
        assert!(exact.dominates(&inn, &auts).unwrap());
        assert!(inn.dominates(&aut, &auts).unwrap());
        let j = join(&inn, &aut).unwrap();
        assert!(j.dominates(&inn, &auts).unwrap());
        assert!(j.dominates(&aut, &auts).unwrap());
    }
}
