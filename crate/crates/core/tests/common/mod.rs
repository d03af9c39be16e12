//! Brute-force reference implementations used by the integration tests.
//!
//! Everything here works on raw `Perm` tuples with linear scans: no element
//! tables, no canonical keys, no BFS. Partitions are computed by repeated
//! full passes of label propagation until nothing changes.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use hurwitz_core::{builtin, Perm, PermGroup};

pub struct OracleGroup {
    pub name: String,
    pub elements: Vec<Perm>,
    pub generators: Vec<Perm>,
}

impl OracleGroup {
    pub fn from_generators(name: &str, degree: usize, generators: Vec<Perm>) -> Self {
        let mut elements = vec![Perm::identity(degree)];
        loop {
            let mut grew = false;
            for x in elements.clone() {
                for g in &generators {
                    let y = g.compose(&x).unwrap();
                    if !elements.contains(&y) {
                        elements.push(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        OracleGroup {
            name: name.to_string(),
            elements,
            generators,
        }
    }

    pub fn of(group: &PermGroup) -> Self {
        Self::from_generators(
            group.name().unwrap_or("?"),
            group.degree(),
            group.generators().to_vec(),
        )
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generated_order(&self, xs: &[Perm]) -> usize {
        let o = OracleGroup::from_generators("", self.elements[0].degree(), xs.to_vec());
        o.order()
    }

    pub fn is_datum(&self, tuple: &[Perm]) -> bool {
        let degree = self.elements[0].degree();
        let mut product = Perm::identity(degree);
        for t in tuple {
            product = product.compose(t).unwrap();
        }
        tuple.len() >= 3
            && tuple.iter().all(|t| !t.is_identity())
            && product.is_identity()
            && self.generated_order(tuple) == self.order()
    }

    /// Every n-tuple of elements, filtered by the datum conditions.
    pub fn all_data(&self, n: usize) -> Vec<Vec<Perm>> {
        let k = self.order();
        let mut out = Vec::new();
        let mut digits = vec![0usize; n];
        'outer: loop {
            let tuple: Vec<Perm> = digits.iter().map(|&d| self.elements[d].clone()).collect();
            if self.is_datum(&tuple) {
                out.push(tuple);
            }
            for pos in (0..n).rev() {
                digits[pos] += 1;
                if digits[pos] < k {
                    continue 'outer;
                }
                digits[pos] = 0;
            }
            break;
        }
        out
    }

    /// Every bijection of the element list that is a homomorphism.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let k = self.order();
        let id = self.elements.iter().position(|e| e.is_identity()).unwrap();
        let index = |p: &Perm| self.elements.iter().position(|e| e == p).unwrap();
        let table: Vec<Vec<usize>> = (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| index(&self.elements[a].compose(&self.elements[b]).unwrap()))
                    .collect()
            })
            .collect();
        let rest: Vec<usize> = (0..k).filter(|&x| x != id).collect();
        let mut out = Vec::new();
        permutations(&rest, &mut |images| {
            let mut map = vec![0usize; k];
            map[id] = id;
            for (src, dst) in rest.iter().zip(images) {
                map[*src] = *dst;
            }
            let hom = (0..k).all(|a| (0..k).all(|b| map[table[a][b]] == table[map[a]][map[b]]));
            if hom {
                out.push(map);
            }
        });
        out
    }

    pub fn apply_aut(&self, map: &[usize], p: &Perm) -> Perm {
        let i = self.elements.iter().position(|e| e == p).unwrap();
        self.elements[map[i]].clone()
    }
}

fn permutations(items: &[usize], f: &mut impl FnMut(&[usize])) {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if rest.is_empty() {
            f(prefix);
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, f);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    rec(&mut Vec::new(), &mut items.to_vec(), f);
}

/// `σᵢ^{±1}` on a permutation tuple, 1-based `i`.
pub fn sigma(tuple: &[Perm], i: usize, positive: bool) -> Vec<Perm> {
    let mut out = tuple.to_vec();
    let (a, b) = (&tuple[i - 1], &tuple[i]);
    if positive {
        out[i - 1] = a.compose(b).unwrap().compose(&a.inverse()).unwrap();
        out[i] = a.clone();
    } else {
        out[i - 1] = b.clone();
        out[i] = b.inverse().compose(a).unwrap().compose(b).unwrap();
    }
    out
}

/// Braid letters `(index, positive)`.
pub type Letters = Vec<(usize, bool)>;

pub fn apply_letters(tuple: &[Perm], letters: &[(usize, bool)]) -> Vec<Perm> {
    letters
        .iter()
        .fold(tuple.to_vec(), |t, &(i, s)| sigma(&t, i, s))
}

pub fn invert(letters: &[(usize, bool)]) -> Letters {
    letters.iter().rev().map(|&(i, s)| (i, !s)).collect()
}

/// `A_ij` as letters: `σ_{j−1} ⋯ σ_{i+1} σᵢ σᵢ σ_{i+1}⁻¹ ⋯ σ_{j−1}⁻¹`.
pub fn pure_letters(i: usize, j: usize) -> Letters {
    let mut out: Letters = ((i + 1)..j).rev().map(|k| (k, true)).collect();
    out.push((i, true));
    out.push((i, true));
    out.extend(((i + 1)..j).map(|k| (k, false)));
    out
}

pub fn pure_movers(n: usize) -> Vec<Letters> {
    let mut out = Vec::new();
    for i in 1..n - 1 {
        for j in i + 1..n {
            out.push(pure_letters(i, j));
        }
    }
    out
}

pub fn full_movers(n: usize) -> Vec<Letters> {
    (1..n).map(|i| vec![(i, true)]).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    Exact,
    Inn,
    Aut,
}

/// Partition of `data` under the movers together with the level's
/// equivalence, as the least member index of each datum's class.
pub fn oracle_partition(
    group: &OracleGroup,
    data: &[Vec<Perm>],
    movers: &[Letters],
    level: Level,
) -> Vec<usize> {
    let position: HashMap<Vec<Perm>, usize> = data
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, d)| (d, k))
        .collect();
    let autos = if level == Level::Aut {
        group.automorphisms()
    } else {
        Vec::new()
    };
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); data.len()];
    for (k, d) in data.iter().enumerate() {
        for m in movers {
            for w in [m.clone(), invert(m)] {
                neighbours[k].push(position[&apply_letters(d, &w)]);
            }
        }
        match level {
            Level::Exact => {}
            Level::Inn => {
                for g in &group.elements {
                    let c: Vec<Perm> = d.iter().map(|t| g.conjugate(t).unwrap()).collect();
                    neighbours[k].push(position[&c]);
                }
            }
            Level::Aut => {
                for a in &autos {
                    let c: Vec<Perm> = d.iter().map(|t| group.apply_aut(a, t)).collect();
                    neighbours[k].push(position[&c]);
                }
            }
        }
    }
    let mut label: Vec<usize> = (0..data.len()).collect();
    loop {
        let mut changed = false;
        for k in 0..data.len() {
            for &j in &neighbours[k] {
                let m = label[k].min(label[j]);
                if label[k] != m || label[j] != m {
                    label[k] = m;
                    label[j] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    label
}

/// Number of classes in a label vector.
pub fn class_count(labels: &[usize]) -> usize {
    let mut l = labels.to_vec();
    l.sort_unstable();
    l.dedup();
    l.len()
}

/// Groups of order at most 8, as permutation groups.
pub fn small_groups() -> Vec<Arc<PermGroup>> {
    let p = |d: usize, s: &str| Perm::parse(s, d).unwrap();
    let z2cubed = PermGroup::new(6, vec![p(6, "(1 2)"), p(6, "(3 4)"), p(6, "(5 6)")])
        .unwrap()
        .named("Z2xZ2xZ2");
    vec![
        builtin::cyclic(2),
        builtin::cyclic(3),
        builtin::cyclic(4),
        builtin::klein(),
        builtin::cyclic(5),
        builtin::symmetric(3),
        builtin::cyclic(6),
        builtin::cyclic(7),
        builtin::cyclic(8),
        builtin::dihedral(4),
        builtin::quaternion(),
        builtin::cyclic_product(2, 4),
        z2cubed,
    ]
    .into_iter()
    .map(Arc::new)
    .collect()
}

pub fn example_group() -> Arc<PermGroup> {
    Arc::new(builtin::symmetric(3))
}

pub fn example_tuple() -> [&'static str; 4] {
    ["(1 2)", "(2 3)", "(2 3)", "(1 2)"]
}
