//! Small named groups as permutation groups.

use alloc::format;
use alloc::vec::Vec;

use crate::group::PermGroup;
use crate::perm::Perm;

fn cycle(degree: usize, points: &[u32]) -> Perm {
    Perm::from_cycles(degree, &[points]).expect("valid cycle")
}

fn build(degree: usize, gens: Vec<Perm>, name: &str) -> PermGroup {
    PermGroup::with_cap(degree, gens, usize::MAX)
        .expect("builtin group")
        .named(name)
}

/// `Z/n` generated by the n-cycle `(1 2 … n)`.
pub fn cyclic(n: usize) -> PermGroup {
    assert!(n >= 1);
    let pts: Vec<u32> = (0..n as u32).collect();
    let gens = if n == 1 {
        Vec::new()
    } else {
        alloc::vec![cycle(n, &pts)]
    };
    build(n.max(1), gens, &format!("Z{n}"))
}

/// `S_n` generated by `(1 2)` and `(1 2 … n)`.
pub fn symmetric(n: usize) -> PermGroup {
    assert!(n >= 2);
    let pts: Vec<u32> = (0..n as u32).collect();
    build(
        n,
        alloc::vec![cycle(n, &[0, 1]), cycle(n, &pts)],
        &format!("S{n}"),
    )
}

/// `A_n` generated by the 3-cycles `(1 2 k)`.
pub fn alternating(n: usize) -> PermGroup {
    assert!(n >= 3);
    let gens = (2..n as u32).map(|k| cycle(n, &[0, 1, k])).collect();
    build(n, gens, &format!("A{n}"))
}

/// Dihedral group of order `2n` acting on an n-gon.
pub fn dihedral(n: usize) -> PermGroup {
    assert!(n >= 3);
    let pts: Vec<u32> = (0..n as u32).collect();
    let reflection = Perm::from_images((0..n as u32).map(|k| (n as u32 - k) % n as u32).collect())
        .expect("reflection");
    build(n, alloc::vec![cycle(n, &pts), reflection], &format!("D{n}"))
}

/// Klein four-group `Z/2 × Z/2` as `⟨(1 2), (3 4)⟩`.
pub fn klein() -> PermGroup {
    build(4, alloc::vec![cycle(4, &[0, 1]), cycle(4, &[2, 3])], "V4")
}

/// Quaternion group in its regular representation on 8 points.
pub fn quaternion() -> PermGroup {
    // points 2u + s encode (-1)^s · unit u, with units 1, i, j, k
    const UNIT: [[(u32, u32); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let left = |u: usize| {
        let images = (0..8u32)
            .map(|p| {
                let (v, s) = ((p / 2) as usize, p % 2);
                let (w, t) = UNIT[u][v];
                2 * w + (s + t) % 2
            })
            .collect();
        Perm::from_images(images).expect("quaternion")
    };
    build(8, alloc::vec![left(1), left(2)], "Q8")
}

/// Direct product of cyclic groups `Z/a × Z/b` on `a + b` points.
pub fn cyclic_product(a: usize, b: usize) -> PermGroup {
    let d = a + b;
    let first: Vec<u32> = (0..a as u32).collect();
    let second: Vec<u32> = (a as u32..d as u32).collect();
    build(
        d,
        alloc::vec![cycle(d, &first), cycle(d, &second)],
        &format!("Z{a}xZ{b}"),
    )
}

/// Looks up `S3`, `S4`, `A4`, `Z2`, `Z3`, `Z6`, `V4`, `Q8`, `D4` and the
/// families `Sn`, `An`, `Zn`, `Dn` for small `n`. Case-insensitive.
pub fn by_name(name: &str) -> Option<PermGroup> {
    let upper = name.trim().to_ascii_uppercase();
    match upper.as_str() {
        "V4" | "Z2XZ2" => return Some(klein()),
        "Q8" => return Some(quaternion()),
        _ => {}
    }
    let (family, rest) = upper.split_at(1.min(upper.len()));
    let n: usize = rest.parse().ok()?;
    match family {
        "S" if (2..=7).contains(&n) => Some(symmetric(n)),
        "A" if (3..=7).contains(&n) => Some(alternating(n)),
        "Z" | "C" if (1..=2000).contains(&n) => Some(cyclic(n)),
        "D" if (3..=1000).contains(&n) => Some(dihedral(n)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(cyclic(6).order(), 6);
        assert_eq!(klein().order(), 4);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(cyclic_product(2, 4).order(), 8);
        assert_eq!(cyclic(1).order(), 1);
    }

    #[test]
    fn quaternion_is_not_dihedral() {
        // Q8 has a single involution, D4 has five
        let inv = |g: &PermGroup| g.elements().filter(|&e| g.elem_order(e) == 2).count();
        assert_eq!(inv(&quaternion()), 1);
        assert_eq!(inv(&dihedral(4)), 5);
    }

    #[test]
    fn lookup() {
        for name in ["S3", "S4", "A4", "Z2", "Z3", "Z6", "V4", "q8", "d4"] {
            assert!(by_name(name).is_some(), "{name}");
        }
        assert_eq!(by_name("s3").unwrap().name(), Some("S3"));
        assert!(by_name("X5").is_none());
        assert!(by_name("").is_none());
    }
}
