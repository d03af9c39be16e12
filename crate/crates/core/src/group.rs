//! Finite permutation groups with a fully enumerated element table.
//!
//! Elements are numbered in lexicographic order of their image arrays, so
//! comparing [`Elem`] ids is the same as comparing the permutations. The
//! identity is always `Elem(0)`.

use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::error::{Cap, Error, PermError, Result};
use crate::perm::Perm;

pub const DEFAULT_ORDER_CAP: usize = 2000;

/// Index of an element in its group's element table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone)]
pub struct PermGroup {
    name: Option<String>,
    degree: usize,
    generators: Vec<Perm>,
    gen_elems: Vec<Elem>,
    elements: Vec<Perm>,
    lookup: HashMap<Perm, Elem>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    class_of: Vec<u32>,
    classes: Vec<Vec<Elem>>,
    center: Vec<Elem>,
}

impl core::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("PermGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        Self::with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    /// Enumerates the closure of `generators`, failing if it exceeds `order_cap` elements.
    pub fn with_cap(degree: usize, generators: Vec<Perm>, order_cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                }
                .into());
            }
        }

        let identity = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x)?;
                if seen.insert(y.clone()) {
                    if seen.len() > order_cap {
                        return Err(Error::cap(
                            "group order",
                            Cap::GroupOrder,
                            order_cap,
                            seen.len(),
                        ));
                    }
                    queue.push_back(y);
                }
            }
        }

        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        let lookup: HashMap<Perm, Elem> = elements
            .iter()
            .enumerate()
            .map(|(k, p)| (p.clone(), Elem(k as u32)))
            .collect();

        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mul.push(lookup[&a.compose(b)?].0);
            }
        }
        let inv: Vec<u32> = elements.iter().map(|p| lookup[&p.inverse()].0).collect();
        let orders: Vec<u32> = elements.iter().map(|p| p.order() as u32).collect();
        let gen_elems = generators.iter().map(|g| lookup[g]).collect();

        let mut group = PermGroup {
            name: None,
            degree,
            generators,
            gen_elems,
            elements,
            lookup,
            mul,
            inv,
            orders,
            class_of: Vec::new(),
            classes: Vec::new(),
            center: Vec::new(),
        };
        group.build_classes();
        Ok(group)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    fn build_classes(&mut self) {
        let n = self.order();
        let mut class_of = alloc::vec![u32::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let mut members: Vec<Elem> = (0..n)
                .map(|g| self.conj(Elem(g as u32), Elem(x as u32)))
                .collect();
            members.sort();
            members.dedup();
            for m in &members {
                class_of[m.index()] = id;
            }
            classes.push(members);
        }
        self.center = (0..n as u32)
            .map(Elem)
            .filter(|&z| {
                self.gen_elems
                    .iter()
                    .all(|&g| self.mul(z, g) == self.mul(g, z))
            })
            .collect();
        self.class_of = class_of;
        self.classes = classes;
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn generator_elems(&self) -> &[Elem] {
        &self.gen_elems
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + Clone {
        (0..self.elements.len() as u32).map(Elem)
    }

    pub fn perm(&self, e: Elem) -> &Perm {
        &self.elements[e.index()]
    }

    pub fn elem(&self, p: &Perm) -> Option<Elem> {
        if p.degree() == self.degree {
            self.lookup.get(p).copied()
        } else {
            None
        }
    }

    /// Like [`elem`](Self::elem) but fails with [`Error::NotInGroup`].
    pub fn try_elem(&self, p: &Perm) -> Result<Elem> {
        self.elem(p).ok_or_else(|| Error::NotInGroup(p.to_string()))
    }

    /// Looks up an element written in cycle notation.
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        self.try_elem(&Perm::parse(text, self.degree)?)
    }

    /// `a · b`, applying `b` first.
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.index() * self.elements.len() + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.inv[a.index()])
    }

    /// `g · x · g⁻¹`.
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn product(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(Elem::IDENTITY, |acc, &x| self.mul(acc, x))
    }

    pub fn elem_order(&self, e: Elem) -> u32 {
        self.orders[e.index()]
    }

    pub fn class_of(&self, e: Elem) -> usize {
        self.class_of[e.index()] as usize
    }

    /// Conjugacy classes, numbered by their least element.
    pub fn classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn center_elems(&self) -> &[Elem] {
        &self.center
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<Perm> {
        self.center.iter().map(|&z| self.perm(z).clone()).collect()
    }

    pub fn is_centerless(&self) -> bool {
        self.center.len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.center.len() == self.order()
    }

    /// Order of the subgroup generated by `xs`.
    pub fn generated_order(&self, xs: &[Elem]) -> usize {
        self.closure(xs).len()
    }

    pub fn closure(&self, xs: &[Elem]) -> Vec<Elem> {
        let mut seen = alloc::vec![false; self.order()];
        let mut out = alloc::vec![Elem::IDENTITY];
        seen[0] = true;
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            for &g in xs {
                let y = self.mul(x, g);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort();
        out
    }

    /// A subset of the generators that still generates the group.
    pub fn reduced_generators(&self) -> Vec<Elem> {
        let mut chosen: Vec<Elem> = Vec::new();
        let mut order = 1;
        for &g in &self.gen_elems {
            if order == self.order() {
                break;
            }
            let mut trial = chosen.clone();
            trial.push(g);
            let o = self.generated_order(&trial);
            if o > order {
                chosen = trial;
                order = o;
            }
        }
        chosen
    }
}

/// An automorphism stored as its images of the group generators plus the
/// induced map on the whole element table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupAutomorphism {
    gen_images: Vec<Elem>,
    map: Vec<Elem>,
}

impl GroupAutomorphism {
    pub fn identity(group: &PermGroup) -> Self {
        GroupAutomorphism {
            gen_images: group.generator_elems().to_vec(),
            map: group.elements().collect(),
        }
    }

    fn from_map(group: &PermGroup, map: Vec<Elem>) -> Self {
        let gen_images = group
            .generator_elems()
            .iter()
            .map(|g| map[g.index()])
            .collect();
        GroupAutomorphism { gen_images, map }
    }

    #[inline]
    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e.index()]
    }

    pub fn gen_images(&self) -> &[Elem] {
        &self.gen_images
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(k, e)| e.index() == k)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        let map: Vec<Elem> = other.map.iter().map(|&e| self.apply(e)).collect();
        let gen_images = other.gen_images.iter().map(|&e| self.apply(e)).collect();
        GroupAutomorphism { gen_images, map }
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        let mut map = alloc::vec![Elem::IDENTITY; self.map.len()];
        for (k, &e) in self.map.iter().enumerate() {
            map[e.index()] = Elem(k as u32);
        }
        // generator k is map[gen_images[k]]; its image under the inverse is map applied again
        let gen_images = self
            .gen_images
            .iter()
            .map(|&img| map[map[img.index()].index()])
            .collect();
        GroupAutomorphism { gen_images, map }
    }

    /// True if the map is a bijective homomorphism, checked on all pairs.
    pub fn is_automorphism_of(&self, group: &PermGroup) -> bool {
        let n = group.order();
        if self.map.len() != n {
            return false;
        }
        let mut hit = alloc::vec![false; n];
        for &e in &self.map {
            if e.index() >= n || core::mem::replace(&mut hit[e.index()], true) {
                return false;
            }
        }
        group.elements().all(|a| {
            group
                .elements()
                .all(|b| self.apply(group.mul(a, b)) == group.mul(self.apply(a), self.apply(b)))
        })
    }
}

/// `x ↦ a x a⁻¹`.
pub fn inner_automorphism(group: &PermGroup, a: &Perm) -> Result<GroupAutomorphism> {
    let a = group.try_elem(a)?;
    Ok(inner_automorphism_of(group, a))
}

pub fn inner_automorphism_of(group: &PermGroup, a: Elem) -> GroupAutomorphism {
    let map = group.elements().map(|x| group.conj(a, x)).collect();
    GroupAutomorphism::from_map(group, map)
}

/// `Aut G` with its inner subgroup marked.
#[derive(Clone, Debug)]
pub struct AutGroup {
    autos: Vec<GroupAutomorphism>,
    inner: Vec<bool>,
    lookup: HashMap<Vec<Elem>, usize>,
}

impl AutGroup {
    /// Position of the identity; its map is the least permutation of the elements.
    pub const IDENTITY: usize = 0;

    pub fn len(&self) -> usize {
        self.autos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.autos.is_empty()
    }

    pub fn automorphisms(&self) -> &[GroupAutomorphism] {
        &self.autos
    }

    pub fn get(&self, k: usize) -> &GroupAutomorphism {
        &self.autos[k]
    }

    pub fn is_inner(&self, k: usize) -> bool {
        self.inner[k]
    }

    pub fn inner(&self) -> impl Iterator<Item = &GroupAutomorphism> {
        self.autos
            .iter()
            .zip(&self.inner)
            .filter(|(_, &i)| i)
            .map(|(a, _)| a)
    }

    pub fn inner_order(&self) -> usize {
        self.inner.iter().filter(|&&i| i).count()
    }

    pub fn out_order(&self) -> usize {
        self.len() / self.inner_order()
    }

    /// Position of an automorphism given by its element map.
    pub fn position(&self, aut: &GroupAutomorphism) -> Option<usize> {
        self.lookup.get(aut.map()).copied()
    }
}

/// Enumerates `Aut G` by assigning order-preserving images to a generating
/// set and validating the homomorphism property.
pub fn automorphism_group(group: &PermGroup) -> AutGroup {
    let gens = group.reduced_generators();
    let n = group.order();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            group
                .elements()
                .filter(|&x| {
                    group.elem_order(x) == group.elem_order(g)
                        && group.classes()[group.class_of(x)].len()
                            == group.classes()[group.class_of(g)].len()
                })
                .collect()
        })
        .collect();

    let mut found: Vec<Vec<Elem>> = Vec::new();
    let mut choice = alloc::vec![0usize; gens.len()];
    let mut map = alloc::vec![Elem::IDENTITY; n];
    let mut set = alloc::vec![false; n];
    let mut queue = Vec::with_capacity(n);
    'outer: loop {
        let images: Vec<Elem> = choice
            .iter()
            .zip(&candidates)
            .map(|(&c, cs)| cs[c])
            .collect();
        if extend_to_hom(group, &gens, &images, &mut map, &mut set, &mut queue) {
            found.push(map.clone());
        }
        // odometer over the candidate lists
        for k in (0..gens.len()).rev() {
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
        break;
    }
    if gens.is_empty() {
        found = alloc::vec![group.elements().collect()];
    }

    found.sort();
    found.dedup();
    let inner_maps: HashSet<Vec<Elem>> = group
        .elements()
        .map(|a| inner_automorphism_of(group, a).map)
        .collect();
    let autos: Vec<GroupAutomorphism> = found
        .into_iter()
        .map(|m| GroupAutomorphism::from_map(group, m))
        .collect();
    debug_assert!(n > 256 || autos.iter().all(|a| a.is_automorphism_of(group)));
    let inner = autos.iter().map(|a| inner_maps.contains(&a.map)).collect();
    let lookup = autos
        .iter()
        .enumerate()
        .map(|(k, a)| (a.map.clone(), k))
        .collect();
    AutGroup {
        autos,
        inner,
        lookup,
    }
}

/// Extends `gens[k] ↦ images[k]` along the Cayley graph; succeeds iff the
/// assignment defines an injective homomorphism.
fn extend_to_hom(
    group: &PermGroup,
    gens: &[Elem],
    images: &[Elem],
    map: &mut [Elem],
    set: &mut [bool],
    queue: &mut Vec<Elem>,
) -> bool {
    set.iter_mut().for_each(|s| *s = false);
    queue.clear();
    map[0] = Elem::IDENTITY;
    set[0] = true;
    queue.push(Elem::IDENTITY);
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        k += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let y = group.mul(x, g);
            let fy = group.mul(map[x.index()], img);
            if set[y.index()] {
                if map[y.index()] != fy {
                    return false;
                }
            } else {
                set[y.index()] = true;
                map[y.index()] = fy;
                queue.push(y);
            }
        }
    }
    let mut hit = alloc::vec![false; map.len()];
    map.iter()
        .all(|e| !core::mem::replace(&mut hit[e.index()], true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn identity_is_elem_zero() {
        let g = builtin::symmetric(3);
        assert!(g.perm(Elem::IDENTITY).is_identity());
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn centers() {
        assert_eq!(builtin::symmetric(3).center().len(), 1);
        assert_eq!(builtin::cyclic(4).center().len(), 4);
        assert_eq!(builtin::quaternion().center().len(), 2);
        assert_eq!(builtin::dihedral(4).center().len(), 2);
    }

    #[test]
    fn order_cap() {
        let e =
            PermGroup::with_cap(5, builtin::symmetric(5).generators().to_vec(), 100).unwrap_err();
        assert!(e.is_cap());
    }

    #[test]
    fn automorphism_counts() {
        let s3 = automorphism_group(&builtin::symmetric(3));
        assert_eq!(s3.len(), 6);
        assert_eq!(s3.inner_order(), 6);
        assert_eq!(s3.out_order(), 1);
        assert_eq!(automorphism_group(&builtin::klein()).len(), 6);
        assert_eq!(automorphism_group(&builtin::klein()).inner_order(), 1);
        let trivial = PermGroup::new(3, alloc::vec![]).unwrap();
        let aut = automorphism_group(&trivial);
        assert_eq!(aut.len(), 1);
        assert!(aut.get(0).is_identity());
        assert_eq!(automorphism_group(&builtin::symmetric(4)).len(), 24);
        assert_eq!(automorphism_group(&builtin::cyclic(6)).len(), 2);
        assert_eq!(automorphism_group(&builtin::quaternion()).len(), 24);
        assert_eq!(automorphism_group(&builtin::dihedral(4)).len(), 8);
        assert_eq!(automorphism_group(&builtin::alternating(4)).len(), 24);
    }

    #[test]
    fn automorphisms_are_valid_and_closed() {
        for g in [
            builtin::symmetric(3),
            builtin::klein(),
            builtin::quaternion(),
            builtin::dihedral(4),
        ] {
            let aut = automorphism_group(&g);
            let maps: HashSet<&[Elem]> = aut.automorphisms().iter().map(|a| a.map()).collect();
            assert_eq!(maps.len(), aut.len());
            for a in aut.automorphisms() {
                assert!(a.is_automorphism_of(&g));
                assert!(maps.contains(a.inverse().map()));
                assert!(a.compose(&a.inverse()).is_identity());
                for b in aut.automorphisms() {
                    assert!(maps.contains(a.compose(b).map()));
                }
            }
        }
    }

    #[test]
    fn inner_times_center_is_order() {
        for g in [
            builtin::symmetric(3),
            builtin::symmetric(4),
            builtin::klein(),
            builtin::quaternion(),
            builtin::dihedral(4),
            builtin::cyclic(6),
            builtin::alternating(4),
        ] {
            let aut = automorphism_group(&g);
            assert_eq!(aut.inner_order() * g.center_elems().len(), g.order());
        }
    }

    #[test]
    fn inner_normal_in_aut() {
        let g = builtin::dihedral(4);
        let aut = automorphism_group(&g);
        for eta in aut.automorphisms() {
            for k in 0..aut.len() {
                if aut.is_inner(k) {
                    let c = eta.compose(aut.get(k)).compose(&eta.inverse());
                    assert!(aut.is_inner(aut.position(&c).unwrap()));
                }
            }
        }
    }

    #[test]
    fn inner_automorphisms() {
        let g = builtin::symmetric(3);
        let id = inner_automorphism(&g, &Perm::identity(3)).unwrap();
        assert!(id.is_identity());
        let inn = inner_automorphism(&g, &Perm::parse("(1 3)", 3).unwrap()).unwrap();
        let x = g.parse_elem("(2 3)").unwrap();
        assert_eq!(g.perm(inn.apply(x)), &Perm::parse("(1 2)", 3).unwrap());
        let outside = Perm::parse("(1 2)", 4).unwrap();
        assert!(matches!(
            inner_automorphism(&g, &outside),
            Err(Error::NotInGroup(_))
        ));
    }

    #[test]
    fn inner_is_functorial() {
        let g = builtin::symmetric(4);
        for a in g.elements().step_by(5) {
            for b in g.elements().step_by(7) {
                let lhs = inner_automorphism_of(&g, a).compose(&inner_automorphism_of(&g, b));
                assert_eq!(lhs, inner_automorphism_of(&g, g.mul(a, b)));
            }
        }
    }
}
