//! Enumeration of all data for `(G, n)` and their split into topological
//! types: orbits of the braid moves `σᵢ^{±1}` combined with `Aut G`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::datum::{inn_key, is_datum, BranchSignature, Datum};
use crate::error::{Cap, Error, Result};
use crate::group::{automorphism_group, AutGroup, Elem, PermGroup};
use crate::orbit::{enumerate_orbit, Canonicalizer, Mover};
use crate::Limits;

/// One topological type.
#[derive(Clone, Debug)]
pub struct TypeReport {
    /// Least datum of the type.
    pub representative: Datum,
    /// Number of data in the type.
    pub orbit_size: usize,
    /// Number of `Aut G`-classes of data in the type.
    pub aut_classes: usize,
    pub genus: u64,
    /// Signature normalized over `Aut G`, constant on the type.
    pub signature: BranchSignature,
    /// Orbits of the pure movers on the data of this type, by level.
    pub pure_exact_orbits: usize,
    pub pure_inn_orbits: usize,
    pub pure_aut_orbits: usize,
}

impl TypeReport {
    fn sort_key(&self) -> (u64, &BranchSignature, &[Elem]) {
        (self.genus, &self.signature, self.representative.entries())
    }
}

/// All data `(t₁, …, tₙ)` over `group`, in lexicographic order.
pub fn enumerate_data(group: &Arc<PermGroup>, n: usize, limits: &Limits) -> Result<Vec<Datum>> {
    if n < 3 {
        return Err(Error::TooFewEntries(n));
    }
    let order = group.order();
    let candidates = (order as u128).saturating_pow((n - 1) as u32);
    if candidates > limits.enum_cap as u128 {
        return Err(Error::cap(
            "enumeration",
            Cap::Enumeration,
            limits.enum_cap,
            candidates.min(usize::MAX as u128) as usize,
        ));
    }
    let mut out = Vec::new();
    if order == 1 {
        return Ok(out);
    }
    // odometer over non-identity elements for the first n−1 entries
    let mut digits = alloc::vec![1u32; n - 1];
    let mut prefix = alloc::vec![Elem::IDENTITY; n];
    let mut tuple = alloc::vec![Elem::IDENTITY; n];
    let mut from = 0;
    loop {
        for k in from..n - 1 {
            tuple[k] = Elem(digits[k]);
            prefix[k + 1] = group.mul(prefix[k], tuple[k]);
        }
        tuple[n - 1] = group.inv(prefix[n - 1]);
        if is_datum(group, &tuple) {
            out.push(Datum::new_unchecked(group.clone(), tuple.clone()));
        }
        let mut k = n - 1;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            digits[k] += 1;
            if (digits[k] as usize) < order {
                break;
            }
            digits[k] = 1;
        }
        from = k;
    }
}

/// Groups data by their `Aut G`-normalized signature, in signature order.
pub fn signature_buckets(data: Vec<Datum>, auts: &AutGroup) -> Vec<Vec<Datum>> {
    let mut keyed: Vec<(BranchSignature, Datum)> = data
        .into_iter()
        .map(|d| {
            (
                BranchSignature::aut_normalized(d.group(), auts, d.entries()),
                d,
            )
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.entries().cmp(b.1.entries())));
    let mut out: Vec<Vec<Datum>> = Vec::new();
    let mut last: Option<BranchSignature> = None;
    for (sig, d) in keyed {
        if last.as_ref() != Some(&sig) {
            out.push(Vec::new());
            last = Some(sig);
        }
        out.last_mut().unwrap().push(d);
    }
    out
}

/// Splits one signature bucket into types.
pub fn classify_bucket(
    bucket: &[Datum],
    auts: &AutGroup,
    limits: &Limits,
) -> Result<Vec<TypeReport>> {
    let mut assigned: HashSet<Vec<Elem>> = HashSet::new();
    let mut out = Vec::new();
    for d in bucket {
        if assigned.contains(d.entries()) {
            continue;
        }
        let (report, members) = type_with_members(d, auts, limits)?;
        assigned.extend(members);
        out.push(report);
    }
    Ok(out)
}

/// All topological types of `(G, n)`, sorted by genus, signature and representative.
pub fn classify_types(
    group: &Arc<PermGroup>,
    n: usize,
    limits: &Limits,
) -> Result<Vec<TypeReport>> {
    let auts = automorphism_group(group);
    let data = enumerate_data(group, n, limits)?;
    let mut reports = Vec::new();
    for bucket in signature_buckets(data, &auts) {
        reports.extend(classify_bucket(&bucket, &auts, limits)?);
    }
    sort_reports(&mut reports);
    Ok(reports)
}

pub fn sort_reports(reports: &mut [TypeReport]) {
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

/// Report of the type containing `d`.
pub fn type_of(d: &Datum, limits: &Limits) -> Result<TypeReport> {
    let auts = automorphism_group(d.group());
    type_of_with(d, &auts, limits)
}

pub fn type_of_with(d: &Datum, auts: &AutGroup, limits: &Limits) -> Result<TypeReport> {
    Ok(type_with_members(d, auts, limits)?.0)
}

fn type_with_members(
    d: &Datum,
    auts: &AutGroup,
    limits: &Limits,
) -> Result<(TypeReport, Vec<Vec<Elem>>)> {
    let group = d.group().as_ref();
    let n = d.len();
    let orbit = enumerate_orbit(d, &Mover::full(n)?, Canonicalizer::Aut(auts), limits)?;

    let mut members: HashSet<Vec<Elem>> = HashSet::new();
    for key in orbit.keys() {
        for eta in auts.automorphisms() {
            members.insert(key.iter().map(|&t| eta.apply(t)).collect());
        }
    }
    let mut members: Vec<Vec<Elem>> = members.into_iter().collect();
    members.sort();

    let pure = Mover::pure(n)?;
    let pure_exact_orbits = count_orbits(
        d,
        members.iter().cloned(),
        &pure,
        Canonicalizer::Exact,
        limits,
    )?;
    let mut inn_keys: Vec<Vec<Elem>> = members.iter().map(|m| inn_key(group, m)).collect();
    inn_keys.sort();
    inn_keys.dedup();
    let pure_inn_orbits = count_orbits(d, inn_keys.into_iter(), &pure, Canonicalizer::Inn, limits)?;
    let mut aut_keys: Vec<Vec<Elem>> = orbit.keys().to_vec();
    aut_keys.sort();
    let pure_aut_orbits = count_orbits(
        d,
        aut_keys.into_iter(),
        &pure,
        Canonicalizer::Aut(auts),
        limits,
    )?;

    let representative = d.with_entries(orbit.least_key().to_vec());
    let report = TypeReport {
        genus: representative.genus(),
        signature: BranchSignature::aut_normalized(group, auts, representative.entries()),
        representative,
        orbit_size: members.len(),
        aut_classes: orbit.size(),
        pure_exact_orbits,
        pure_inn_orbits,
        pure_aut_orbits,
    };
    Ok((report, members))
}

/// Number of orbits of `movers` on a set of canonical keys closed under them.
fn count_orbits(
    template: &Datum,
    keys: impl Iterator<Item = Vec<Elem>>,
    movers: &[Mover],
    canon: Canonicalizer<'_>,
    limits: &Limits,
) -> Result<usize> {
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut count = 0;
    for key in keys {
        if seen.contains(&key) {
            continue;
        }
        let orbit = enumerate_orbit(&template.with_entries(key), movers, canon, limits)?;
        seen.extend(orbit.keys().iter().cloned());
        count += 1;
    }
    Ok(count)
}
