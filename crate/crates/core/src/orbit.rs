//! Orbit enumeration under braid movers, coset actions and Schreier generators.
//!
//! Orbit points are canonical keys: the tuple itself (`Exact`), its least
//! simultaneous conjugate (`Inn`) or its least automorphic image (`Aut`).
//! The basepoint stabilizer of the resulting coset action is the subgroup of
//! the mover group fixing the start datum up to the chosen equivalence.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::datum::{aut_key, inn_key, Datum};
use crate::error::{Cap, Error, Result};
use crate::group::{AutGroup, Elem, PermGroup};
use crate::hurwitz::{apply_word_in_place, pure_generators, BraidWord, Sign};
use crate::Limits;

/// Equivalence used for orbit points.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Canon {
    Exact,
    Inn,
    Aut,
}

impl Canon {
    pub fn as_str(self) -> &'static str {
        match self {
            Canon::Exact => "exact",
            Canon::Inn => "inn",
            Canon::Aut => "aut",
        }
    }
}

impl core::str::FromStr for Canon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Canon::Exact),
            "inn" => Ok(Canon::Inn),
            "aut" => Ok(Canon::Aut),
            _ => Err(Error::Inconsistent(alloc::format!(
                "unknown canonicalizer {s:?}"
            ))),
        }
    }
}

/// A canonicalizer with the data it needs.
#[derive(Clone, Copy, Debug)]
pub enum Canonicalizer<'a> {
    Exact,
    Inn,
    Aut(&'a AutGroup),
}

impl Canonicalizer<'_> {
    pub fn tag(&self) -> Canon {
        match self {
            Canonicalizer::Exact => Canon::Exact,
            Canonicalizer::Inn => Canon::Inn,
            Canonicalizer::Aut(_) => Canon::Aut,
        }
    }

    pub fn key(&self, group: &PermGroup, tuple: &[Elem]) -> Vec<Elem> {
        match self {
            Canonicalizer::Exact => tuple.to_vec(),
            Canonicalizer::Inn => inn_key(group, tuple),
            Canonicalizer::Aut(auts) => aut_key(auts, tuple),
        }
    }
}

impl<'a> Canonicalizer<'a> {
    /// Builds the canonicalizer for a tag; `Aut` needs the automorphism group.
    pub fn new(tag: Canon, auts: Option<&'a AutGroup>) -> Result<Self> {
        Ok(match tag {
            Canon::Exact => Canonicalizer::Exact,
            Canon::Inn => Canonicalizer::Inn,
            Canon::Aut => Canonicalizer::Aut(auts.ok_or_else(|| {
                Error::Inconsistent("aut canonicalizer needs the automorphism group".into())
            })?),
        })
    }
}

/// A named braid word used as a generator of the acting group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mover {
    pub name: String,
    pub word: BraidWord,
}

impl Mover {
    pub fn new(name: impl Into<String>, word: BraidWord) -> Self {
        Mover {
            name: name.into(),
            word,
        }
    }

    /// `A_ij` for `1 ≤ i < j ≤ n−1`.
    pub fn pure(n: usize) -> Result<Vec<Mover>> {
        Ok(pure_generators(n)?
            .into_iter()
            .map(|a| Mover::new(a.name(), a.word))
            .collect())
    }

    /// `σ₁, …, σ_{n−1}`.
    pub fn full(n: usize) -> Result<Vec<Mover>> {
        (1..n)
            .map(|i| {
                Ok(Mover::new(
                    alloc::format!("s{i}"),
                    BraidWord::sigma(n, i, Sign::Pos)?,
                ))
            })
            .collect()
    }
}

/// A word in the movers: `(mover index, sign)` applied left to right.
pub type MoverWord = Vec<(usize, Sign)>;

fn reduce_mover_word(w: &[(usize, Sign)]) -> MoverWord {
    let mut out: MoverWord = Vec::with_capacity(w.len());
    for &(m, s) in w {
        if out.last() == Some(&(m, s.flip())) {
            out.pop();
        } else {
            out.push((m, s));
        }
    }
    out
}

fn invert_mover_word(w: &[(usize, Sign)]) -> MoverWord {
    w.iter().rev().map(|&(m, s)| (m, s.flip())).collect()
}

/// Expands a mover word into a braid word on `strands` strands.
pub fn expand(movers: &[Mover], strands: usize, w: &[(usize, Sign)]) -> BraidWord {
    let mut out = BraidWord::empty(strands);
    for &(m, s) in w {
        let piece = match s {
            Sign::Pos => movers[m].word.clone(),
            Sign::Neg => movers[m].word.inverse(),
        };
        out = out.then(&piece);
    }
    out.reduced()
}

#[derive(Clone, Debug)]
pub struct Orbit {
    canon: Canon,
    representative: Datum,
    movers: Vec<Mover>,
    keys: Vec<Vec<Elem>>,
    reps: Vec<Vec<Elem>>,
    index: HashMap<Vec<Elem>, u32>,
    parent: Vec<Option<(u32, u32, Sign)>>,
    forward: Vec<Vec<u32>>,
}

/// Breadth-first closure of `start` under the movers and their inverses.
pub fn enumerate_orbit(
    start: &Datum,
    movers: &[Mover],
    canon: Canonicalizer<'_>,
    limits: &Limits,
) -> Result<Orbit> {
    let group = start.group().as_ref();
    let n = start.len();
    if let Some(m) = movers.iter().find(|m| m.word.strands() != n) {
        return Err(Error::StrandMismatch {
            word: m.word.strands(),
            datum: n,
        });
    }
    let inverses: Vec<BraidWord> = movers.iter().map(|m| m.word.inverse()).collect();

    let start_key = canon.key(group, start.entries());
    let mut keys = alloc::vec![start_key.clone()];
    let mut reps = alloc::vec![start.entries().to_vec()];
    let mut index: HashMap<Vec<Elem>, u32> = HashMap::new();
    index.insert(start_key, 0);
    let mut parent = alloc::vec![None];
    let mut forward: Vec<Vec<u32>> = alloc::vec![Vec::new(); movers.len()];
    let mut queue = VecDeque::from([0u32]);
    let mut scratch = alloc::vec![Elem::IDENTITY; n];

    while let Some(p) = queue.pop_front() {
        for (m, mover) in movers.iter().enumerate() {
            for sign in [Sign::Pos, Sign::Neg] {
                let word = if sign == Sign::Pos {
                    &mover.word
                } else {
                    &inverses[m]
                };
                scratch.copy_from_slice(&reps[p as usize]);
                apply_word_in_place(group, &mut scratch, word);
                let key = canon.key(group, &scratch);

                if sign == Sign::Pos && canon.tag() != Canon::Exact {
                    let mut via_key = keys[p as usize].clone();
                    apply_word_in_place(group, &mut via_key, word);
                    if canon.key(group, &via_key) != key {
                        return Err(Error::IncompatibleCanonicalizer(mover.name.clone()));
                    }
                }

                let q = match index.get(&key) {
                    Some(&q) => q,
                    None => {
                        let q = keys.len() as u32;
                        if keys.len() >= limits.orbit_cap {
                            return Err(Error::cap(
                                "orbit",
                                Cap::Orbit,
                                limits.orbit_cap,
                                keys.len(),
                            ));
                        }
                        index.insert(key.clone(), q);
                        keys.push(key);
                        reps.push(scratch.clone());
                        parent.push(Some((p, m as u32, sign)));
                        queue.push_back(q);
                        q
                    }
                };
                if sign == Sign::Pos {
                    forward[m].push(q);
                }
            }
        }
    }

    Ok(Orbit {
        canon: canon.tag(),
        representative: start.clone(),
        movers: movers.to_vec(),
        keys,
        reps,
        index,
        parent,
        forward,
    })
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.keys.len()
    }

    pub fn canon(&self) -> Canon {
        self.canon
    }

    pub fn representative(&self) -> &Datum {
        &self.representative
    }

    pub fn movers(&self) -> &[Mover] {
        &self.movers
    }

    /// Canonical keys in discovery order; the start's key is first.
    pub fn keys(&self) -> &[Vec<Elem>] {
        &self.keys
    }

    /// Least canonical key in the orbit.
    pub fn least_key(&self) -> &[Elem] {
        self.keys.iter().min().expect("orbit is non-empty")
    }

    pub fn point_of(&self, key: &[Elem]) -> Option<usize> {
        self.index.get(key).map(|&p| p as usize)
    }

    pub fn contains_key(&self, key: &[Elem]) -> bool {
        self.index.contains_key(key)
    }

    /// The tuple reached at `point` by its transversal word.
    pub fn member(&self, point: usize) -> Datum {
        self.representative.with_entries(self.reps[point].clone())
    }

    /// Mover word from the start to `point`, first discovered by the BFS.
    pub fn mover_word_to(&self, point: usize) -> MoverWord {
        let mut out = Vec::new();
        let mut p = point;
        while let Some((q, m, s)) = self.parent[p] {
            out.push((m as usize, s));
            p = q as usize;
        }
        out.reverse();
        out
    }

    pub fn word_to(&self, point: usize) -> BraidWord {
        expand(
            &self.movers,
            self.representative.len(),
            &self.mover_word_to(point),
        )
    }
}

/// Permutation action of named movers on a finite point set with a basepoint.
#[derive(Clone, Debug)]
pub struct CosetAction {
    movers: Vec<Mover>,
    perms: Vec<Vec<u32>>,
    inverses: Vec<Vec<u32>>,
    basepoint: usize,
    transversal: Vec<MoverWord>,
}

/// Packages an orbit's mover images as a coset action; basepoint is the start.
pub fn coset_action(orbit: &Orbit) -> CosetAction {
    let transversal = (0..orbit.size()).map(|p| orbit.mover_word_to(p)).collect();
    CosetAction::from_parts(orbit.movers.clone(), orbit.forward.clone(), transversal)
}

impl CosetAction {
    fn from_parts(movers: Vec<Mover>, perms: Vec<Vec<u32>>, transversal: Vec<MoverWord>) -> Self {
        let inverses = perms
            .iter()
            .map(|perm| {
                let mut inv = alloc::vec![0u32; perm.len()];
                for (p, &q) in perm.iter().enumerate() {
                    inv[q as usize] = p as u32;
                }
                inv
            })
            .collect();
        CosetAction {
            movers,
            perms,
            inverses,
            basepoint: 0,
            transversal,
        }
    }

    /// Number of points, i.e. the index of the basepoint stabilizer.
    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn movers(&self) -> &[Mover] {
        &self.movers
    }

    pub fn mover_names(&self) -> Vec<&str> {
        self.movers.iter().map(|m| m.name.as_str()).collect()
    }

    pub fn perm(&self, mover: usize) -> &[u32] {
        &self.perms[mover]
    }

    pub fn transversal(&self) -> &[MoverWord] {
        &self.transversal
    }

    /// Image of `point` under a mover or its inverse.
    pub fn step(&self, point: usize, mover: usize, sign: Sign) -> usize {
        match sign {
            Sign::Pos => self.perms[mover][point] as usize,
            Sign::Neg => self.inverses[mover][point] as usize,
        }
    }

    pub fn act(&self, point: usize, word: &[(usize, Sign)]) -> usize {
        word.iter().fold(point, |p, &(m, s)| self.step(p, m, s))
    }

    pub fn is_bijective(&self) -> bool {
        self.perms.iter().all(|perm| {
            let mut hit = alloc::vec![false; self.index()];
            perm.len() == self.index()
                && perm
                    .iter()
                    .all(|&q| !core::mem::replace(&mut hit[q as usize], true))
        })
    }

    pub fn is_transitive(&self) -> bool {
        let mut seen = alloc::vec![false; self.index()];
        seen[self.basepoint] = true;
        let mut stack = alloc::vec![self.basepoint];
        while let Some(p) = stack.pop() {
            for perm in &self.perms {
                let q = perm[p] as usize;
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    fn same_movers(&self, other: &CosetAction) -> bool {
        self.movers == other.movers
    }
}

/// An element of the basepoint stabilizer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchreierGenerator {
    pub movers: MoverWord,
    pub word: BraidWord,
}

/// Schreier generators `t_p · m · t_{m(p)}⁻¹` of the basepoint stabilizer,
/// freely reduced, without the trivial ones and duplicates.
pub fn schreier_generators(ca: &CosetAction) -> Result<Vec<SchreierGenerator>> {
    let strands = ca
        .movers
        .first()
        .map(|m| m.word.strands())
        .unwrap_or_default();
    for (p, t) in ca.transversal.iter().enumerate() {
        if ca.act(ca.basepoint, t) != p {
            return Err(Error::MissingTransversal(p));
        }
    }
    let mut seen: hashbrown::HashSet<MoverWord> = hashbrown::HashSet::new();
    let mut out = Vec::new();
    for p in 0..ca.index() {
        for m in 0..ca.movers.len() {
            let q = ca.perms[m][p] as usize;
            let mut w = ca.transversal[p].clone();
            w.push((m, Sign::Pos));
            w.extend(invert_mover_word(&ca.transversal[q]));
            let w = reduce_mover_word(&w);
            if w.is_empty() || !seen.insert(w.clone()) {
                continue;
            }
            let word = expand(&ca.movers, strands, &w);
            out.push(SchreierGenerator { movers: w, word });
        }
    }
    Ok(out)
}

/// Product action on pairs, restricted to the orbit of the paired basepoints.
/// Its basepoint stabilizer is the intersection of the two stabilizers.
pub fn intersect_actions(a: &CosetAction, b: &CosetAction) -> Result<CosetAction> {
    if !a.same_movers(b) {
        return Err(Error::MoverMismatch);
    }
    let start = (a.basepoint as u32, b.basepoint as u32);
    let mut index: HashMap<(u32, u32), u32> = HashMap::new();
    index.insert(start, 0);
    let mut points = alloc::vec![start];
    let mut transversal: Vec<MoverWord> = alloc::vec![Vec::new()];
    let mut perms: Vec<Vec<u32>> = alloc::vec![Vec::new(); a.movers.len()];
    let mut k = 0;
    while k < points.len() {
        let (pa, pb) = points[k];
        for (m, images) in perms.iter_mut().enumerate() {
            for sign in [Sign::Pos, Sign::Neg] {
                let next = (
                    a.step(pa as usize, m, sign) as u32,
                    b.step(pb as usize, m, sign) as u32,
                );
                let q = *index.entry(next).or_insert_with(|| {
                    points.push(next);
                    let mut t = transversal[k].clone();
                    t.push((m, sign));
                    transversal.push(t);
                    (points.len() - 1) as u32
                });
                if sign == Sign::Pos {
                    images.push(q);
                }
            }
        }
        k += 1;
    }
    Ok(CosetAction::from_parts(
        a.movers.clone(),
        perms,
        transversal,
    ))
}
