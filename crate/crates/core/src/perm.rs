//! Permutations on `0..degree` with cycle-notation input and output.
//!
//! Composition is right-to-left: `p.compose(&q)` applies `q` first, then `p`.
//! Points are 0-based internally and 1-based in cycle notation.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::PermError;

/// A permutation stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let d = images.len();
        let mut seen = alloc::vec![false; d];
        for &x in &images {
            let x = x as usize;
            if x >= d {
                return Err(PermError::PointOutOfRange {
                    point: x + 1,
                    degree: d,
                });
            }
            if seen[x] {
                return Err(PermError::NotBijective);
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = alloc::vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let a = a as usize;
                if a >= degree {
                    return Err(PermError::PointOutOfRange {
                        point: a + 1,
                        degree,
                    });
                }
                if touched[a] {
                    return Err(PermError::RepeatedPoint { point: a + 1 });
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"` or `"()"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        let cycles = parse_cycles(text)?;
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(degree, &refs)
    }

    /// Parses cycle notation, taking the degree to be the largest point mentioned.
    pub fn parse_minimal(text: &str) -> Result<Self, PermError> {
        let cycles = parse_cycles(text)?;
        let degree = cycles
            .iter()
            .flatten()
            .map(|&p| p as usize + 1)
            .max()
            .unwrap_or(0);
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k as u32 == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Perm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0u32; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x as usize] = k as u32;
        }
        Perm { images }
    }

    /// `self · x · self⁻¹`.
    pub fn conjugate(&self, x: &Perm) -> Result<Perm, PermError> {
        self.compose(x)?.compose(&self.inverse())
    }

    pub fn order(&self) -> u64 {
        let mut seen = alloc::vec![false; self.degree()];
        let mut lcm = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] as usize;
                len += 1;
            }
            lcm = lcm / gcd(lcm, len) * len;
        }
        lcm
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k as u32);
                k = self.images[k] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Same permutation on a larger point set.
    pub fn extend_to(&self, degree: usize) -> Perm {
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree.max(self.degree()) as u32);
        Perm { images }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<u32>>, PermError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(PermError::Syntax(String::from("empty permutation text")));
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| PermError::Syntax(alloc::format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| PermError::Syntax(String::from("unclosed cycle")))?;
        let mut cycle = Vec::new();
        for token in body[..close].split_whitespace() {
            let point: usize = token
                .parse()
                .map_err(|_| PermError::Syntax(alloc::format!("bad point {token:?}")))?;
            if point == 0 {
                return Err(PermError::Syntax(String::from("points are 1-based")));
            }
            cycle.push((point - 1) as u32);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{{{}; deg {}}}", self, self.degree())
    }
}
