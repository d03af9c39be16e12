//! Nielsen tuples: `(t₁, …, tₙ)` with `t₁ ⋯ tₙ = 1`, every `tᵢ ≠ 1`, generating `G`.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::{AutGroup, Elem, PermGroup};
use crate::perm::Perm;

#[derive(Clone)]
pub struct Datum {
    group: Arc<PermGroup>,
    entries: Vec<Elem>,
}

impl PartialEq for Datum {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.entries == other.entries
    }
}

impl Eq for Datum {}

impl core::hash::Hash for Datum {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

/// Checks the three defining conditions on a tuple of group elements.
pub fn check_entries(group: &PermGroup, entries: &[Elem]) -> Result<()> {
    if entries.len() < 3 {
        return Err(Error::TooFewEntries(entries.len()));
    }
    if let Some(index) = entries.iter().position(|&t| t == Elem::IDENTITY) {
        return Err(Error::TrivialEntry { index: index + 1 });
    }
    let product = group.product(entries);
    if product != Elem::IDENTITY {
        return Err(Error::ProductNotIdentity(group.perm(product).to_string()));
    }
    let generated = group.generated_order(entries);
    if generated != group.order() {
        return Err(Error::ProperSubgroup {
            generated,
            order: group.order(),
        });
    }
    Ok(())
}

/// True when `entries` satisfies all three conditions.
pub fn is_datum(group: &PermGroup, entries: &[Elem]) -> bool {
    check_entries(group, entries).is_ok()
}

/// Validates a tuple of permutations as a datum over `group`.
pub fn validate(entries: &[Perm], group: &Arc<PermGroup>) -> Result<Datum> {
    if entries.len() < 3 {
        return Err(Error::TooFewEntries(entries.len()));
    }
    let ids = entries
        .iter()
        .map(|p| group.try_elem(p))
        .collect::<Result<Vec<_>>>()?;
    Datum::new(group.clone(), ids)
}

impl Datum {
    pub fn new(group: Arc<PermGroup>, entries: Vec<Elem>) -> Result<Self> {
        check_entries(&group, &entries)?;
        Ok(Datum { group, entries })
    }

    /// Skips validation; the caller guarantees the tuple is a datum.
    pub(crate) fn new_unchecked(group: Arc<PermGroup>, entries: Vec<Elem>) -> Self {
        debug_assert!(is_datum(&group, &entries));
        Datum { group, entries }
    }

    /// Parses each entry in cycle notation.
    pub fn parse(group: &Arc<PermGroup>, entries: &[&str]) -> Result<Self> {
        let perms = entries
            .iter()
            .map(|s| Perm::parse(s, group.degree()))
            .collect::<core::result::Result<Vec<_>, _>>()?;
        validate(&perms, group)
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn perms(&self) -> impl Iterator<Item = &Perm> + '_ {
        self.entries.iter().map(|&e| self.group.perm(e))
    }

    pub fn into_entries(self) -> Vec<Elem> {
        self.entries
    }

    pub(crate) fn with_entries(&self, entries: Vec<Elem>) -> Datum {
        Datum::new_unchecked(self.group.clone(), entries)
    }

    /// Genus of the cover, from `2g − 2 = −2|G| + Σ (|G|/oᵢ)(oᵢ − 1)`.
    pub fn genus(&self) -> u64 {
        let order = self.group.order() as i64;
        let ramification: i64 = self
            .entries
            .iter()
            .map(|&t| {
                let o = self.group.elem_order(t) as i64;
                order - order / o
            })
            .sum();
        let twice = 2 - 2 * order + ramification;
        debug_assert!(twice >= 0 && twice % 2 == 0);
        (twice / 2) as u64
    }

    pub fn branch_signature(&self) -> BranchSignature {
        BranchSignature::of_entries(&self.group, &self.entries)
    }

    /// Least simultaneous conjugate.
    pub fn inn_canonical(&self) -> Datum {
        self.with_entries(inn_key(&self.group, &self.entries))
    }

    /// Least image under the given automorphisms.
    pub fn aut_canonical(&self, auts: &AutGroup) -> Datum {
        self.with_entries(aut_key(auts, &self.entries))
    }

    /// `(η(t₁), …, η(tₙ))`.
    pub fn map_by(&self, eta: &crate::group::GroupAutomorphism) -> Datum {
        self.with_entries(self.entries.iter().map(|&t| eta.apply(t)).collect())
    }

    /// `(g t₁ g⁻¹, …, g tₙ g⁻¹)`.
    pub fn conjugate_by(&self, g: Elem) -> Datum {
        self.with_entries(
            self.entries
                .iter()
                .map(|&t| self.group.conj(g, t))
                .collect(),
        )
    }
}

/// Lexicographically least tuple among the simultaneous conjugates.
pub fn inn_key(group: &PermGroup, entries: &[Elem]) -> Vec<Elem> {
    least_image(entries, group.elements(), |g, t| group.conj(g, t))
}

/// Lexicographically least tuple among the automorphic images.
pub fn aut_key(auts: &AutGroup, entries: &[Elem]) -> Vec<Elem> {
    least_image(entries, auts.automorphisms().iter(), |eta, t| eta.apply(t))
}

fn least_image<A: Copy>(
    entries: &[Elem],
    actors: impl Iterator<Item = A>,
    act: impl Fn(A, Elem) -> Elem,
) -> Vec<Elem> {
    let mut best = entries.to_vec();
    for a in actors {
        for k in 0..entries.len() {
            let x = act(a, entries[k]);
            if x < best[k] {
                best[k] = x;
                for j in k + 1..entries.len() {
                    best[j] = act(a, entries[j]);
                }
                break;
            }
            if x > best[k] {
                break;
            }
        }
    }
    best
}

impl fmt::Display for Datum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.perms().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Datum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Datum[{self}]")
    }
}

/// Multiset of conjugacy classes and of element orders of a tuple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BranchSignature {
    /// `(class id, count)`, sorted by class id.
    pub classes: Vec<(usize, usize)>,
    /// Element orders, sorted ascending.
    pub orders: Vec<u32>,
}

impl BranchSignature {
    pub fn of_entries(group: &PermGroup, entries: &[Elem]) -> Self {
        let mut ids: Vec<usize> = entries.iter().map(|&t| group.class_of(t)).collect();
        ids.sort_unstable();
        let mut orders: Vec<u32> = entries.iter().map(|&t| group.elem_order(t)).collect();
        orders.sort_unstable();
        BranchSignature {
            classes: run_lengths(&ids),
            orders,
        }
    }

    /// Least signature over all automorphic images of the tuple.
    ///
    /// Automorphisms may permute conjugacy classes, so this is the form that
    /// is constant on a full Hurwitz-plus-`Aut G` orbit.
    pub fn aut_normalized(group: &PermGroup, auts: &AutGroup, entries: &[Elem]) -> Self {
        let reps: Vec<Elem> = group.classes().iter().map(|c| c[0]).collect();
        let base: Vec<usize> = entries.iter().map(|&t| group.class_of(t)).collect();
        let mut orders: Vec<u32> = entries.iter().map(|&t| group.elem_order(t)).collect();
        orders.sort_unstable();
        let mut best: Option<Vec<(usize, usize)>> = None;
        for eta in auts.automorphisms() {
            let mut ids: Vec<usize> = base
                .iter()
                .map(|&c| group.class_of(eta.apply(reps[c])))
                .collect();
            ids.sort_unstable();
            let runs = run_lengths(&ids);
            if best.as_ref().is_none_or(|b| runs < *b) {
                best = Some(runs);
            }
        }
        BranchSignature {
            classes: best.unwrap_or_default(),
            orders,
        }
    }

    /// Compact text such as `C1^2 C3^2 | 2,2,3,3`.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        for (k, (c, m)) in self.classes.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(&alloc::format!("C{c}^{m}"));
        }
        out.push_str(" |");
        for (k, o) in self.orders.iter().enumerate() {
            out.push(if k == 0 { ' ' } else { ',' });
            out.push_str(&o.to_string());
        }
        out
    }
}

fn run_lengths(sorted: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in sorted {
        match out.last_mut() {
            Some((c, m)) if *c == x => *m += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}
