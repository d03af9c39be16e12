//! JSON and table renderings. Field order in these structs is the output order.

use std::fmt::Write as _;

use hurwitz_core::extension::{AbelianCertificate, ExtensionReport, MinimalExtension};
use hurwitz_core::{AutGroup, Datum, Orbit, TypeReport};
use serde::Serialize;

use crate::input::DatumJson;

#[derive(Serialize)]
pub struct CheckReport {
    pub valid: bool,
    pub datum: DatumJson,
    pub group_order: usize,
    pub n: usize,
    pub genus: u64,
    pub signature: String,
}

impl CheckReport {
    pub fn new(d: &Datum) -> Self {
        CheckReport {
            valid: true,
            datum: DatumJson::of(d),
            group_order: d.group().order(),
            n: d.len(),
            genus: d.genus(),
            signature: d.branch_signature().describe(),
        }
    }

    pub fn table(&self) -> String {
        format!(
            "valid      yes\ngroup      order {}\nentries    {}\ngenus      {}\nsignature  {}\n",
            self.group_order,
            self.datum.entries.join(","),
            self.genus,
            self.signature
        )
    }
}

#[derive(Serialize)]
pub struct GenusReport {
    pub datum: DatumJson,
    pub genus: u64,
    /// Entry orders, in tuple order.
    pub orders: Vec<u32>,
}

impl GenusReport {
    pub fn new(d: &Datum) -> Self {
        let g = d.group();
        GenusReport {
            datum: DatumJson::of(d),
            genus: d.genus(),
            orders: d.entries().iter().map(|&t| g.elem_order(t)).collect(),
        }
    }

    pub fn table(&self) -> String {
        let orders: Vec<String> = self.orders.iter().map(u32::to_string).collect();
        format!("genus   {}\norders  {}\n", self.genus, orders.join(","))
    }
}

#[derive(Serialize)]
pub struct OrbitReport {
    pub size: usize,
    /// Least canonical key of the orbit.
    pub representative: Vec<String>,
    pub canonicalizer: &'static str,
    pub movers: Vec<String>,
}

impl OrbitReport {
    pub fn new(orbit: &Orbit) -> Self {
        let rep = orbit.representative().group();
        OrbitReport {
            size: orbit.size(),
            representative: orbit
                .least_key()
                .iter()
                .map(|&t| rep.perm(t).to_string())
                .collect(),
            canonicalizer: orbit.canon().as_str(),
            movers: orbit.movers().iter().map(|m| m.name.clone()).collect(),
        }
    }

    pub fn table(&self) -> String {
        format!(
            "size            {}\ncanonicalizer   {}\nmovers          {}\nrepresentative  {}\n",
            self.size,
            self.canonicalizer,
            self.movers.join(" "),
            self.representative.join(",")
        )
    }
}

#[derive(Serialize)]
pub struct TypeJson {
    pub index: usize,
    pub orbit_size: usize,
    pub aut_classes: usize,
    pub genus: u64,
    pub signature: String,
    pub representative: Vec<String>,
    pub pure_exact_orbits: usize,
    pub pure_inn_orbits: usize,
    pub pure_aut_orbits: usize,
}

impl TypeJson {
    pub fn new(index: usize, t: &TypeReport) -> Self {
        TypeJson {
            index,
            orbit_size: t.orbit_size,
            aut_classes: t.aut_classes,
            genus: t.genus,
            signature: t.signature.describe(),
            representative: t.representative.perms().map(|p| p.to_string()).collect(),
            pure_exact_orbits: t.pure_exact_orbits,
            pure_inn_orbits: t.pure_inn_orbits,
            pure_aut_orbits: t.pure_aut_orbits,
        }
    }
}

pub fn types_table(types: &[TypeJson]) -> String {
    let mut out = String::from("index  orbit_size  genus  signature  representative\n");
    for t in types {
        let _ = writeln!(
            out,
            "{:<5}  {:<10}  {:<5}  {}  {}",
            t.index,
            t.orbit_size,
            t.genus,
            t.signature,
            t.representative.join(",")
        );
    }
    let _ = writeln!(out, "{} types", types.len());
    out
}

#[derive(Serialize)]
pub struct EpsJson {
    pub word: String,
    /// Images of the group generators under `ε̃(word)`.
    pub generator_images: Vec<String>,
    pub inner: bool,
}

#[derive(Serialize)]
pub struct PhiJson {
    pub word: String,
    pub value: String,
    pub verified: bool,
}

#[derive(Serialize)]
pub struct MinimalJson {
    pub degree: usize,
    pub movers: Vec<String>,
    pub phi: Vec<PhiJson>,
    pub certificate_passes: bool,
}

#[derive(Serialize)]
pub struct AbelianJson {
    pub checked: Vec<String>,
    pub orbit_size: usize,
}

#[derive(Serialize)]
pub struct ExtensionJson {
    pub datum: DatumJson,
    pub exact_orbit_index: usize,
    pub exact_index_center_ambiguous: bool,
    pub inn_orbit_index: usize,
    pub aut_orbit_index: usize,
    pub eps_generators: Vec<EpsJson>,
    pub eps_image_order: usize,
    pub eps_image_in_out: usize,
    pub center_trivial: bool,
    pub abelian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal: Option<MinimalJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abelian_certificate: Option<AbelianJson>,
}

impl ExtensionJson {
    pub fn new(r: &ExtensionReport, auts: &AutGroup) -> Self {
        let g = r.datum.group();
        let eps_generators = r
            .eps_generators
            .iter()
            .map(|(s, k)| EpsJson {
                word: s.word.to_string(),
                generator_images: auts.automorphisms()[*k]
                    .gen_images()
                    .iter()
                    .map(|&x| g.perm(x).to_string())
                    .collect(),
                inner: auts.is_inner(*k),
            })
            .collect();
        ExtensionJson {
            datum: DatumJson::of(&r.datum),
            exact_orbit_index: r.exact_orbit_index,
            exact_index_center_ambiguous: r.exact_index_center_ambiguous,
            inn_orbit_index: r.inn_orbit_index,
            aut_orbit_index: r.aut_orbit_index,
            eps_generators,
            eps_image_order: r.eps_image.len(),
            eps_image_in_out: r.eps_image_in_out,
            center_trivial: r.center_trivial,
            abelian: r.abelian,
            minimal: None,
            abelian_certificate: None,
        }
    }

    pub fn with_minimal(mut self, m: &MinimalExtension) -> Self {
        let g = m.datum.group();
        self.minimal = Some(MinimalJson {
            degree: m.degree(),
            movers: m.base.mover_names().into_iter().map(String::from).collect(),
            phi: m
                .phi
                .iter()
                .map(|p| PhiJson {
                    word: p.generator.word.to_string(),
                    value: g.perm(p.value).to_string(),
                    verified: p.verified,
                })
                .collect(),
            certificate_passes: m.certificate_passes(),
        });
        self
    }

    pub fn with_abelian(mut self, c: &AbelianCertificate) -> Self {
        self.abelian_certificate = Some(AbelianJson {
            checked: c.checked.clone(),
            orbit_size: c.orbit_size,
        });
        self
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "datum                {}", self.datum.entries.join(","));
        let _ = writeln!(
            out,
            "exact index          {}{}",
            self.exact_orbit_index,
            if self.exact_index_center_ambiguous {
                " (t_n not central)"
            } else {
                ""
            }
        );
        let _ = writeln!(out, "inn index            {}", self.inn_orbit_index);
        let _ = writeln!(out, "aut index            {}", self.aut_orbit_index);
        let _ = writeln!(
            out,
            "eps image            order {}, {} in Out",
            self.eps_image_order, self.eps_image_in_out
        );
        let _ = writeln!(out, "center trivial       {}", self.center_trivial);
        let _ = writeln!(out, "abelian              {}", self.abelian);
        if let Some(m) = &self.minimal {
            let _ = writeln!(
                out,
                "minimal extension    degree {}, {} generators, certificate {}",
                m.degree,
                m.phi.len(),
                if m.certificate_passes {
                    "passes"
                } else {
                    "FAILS"
                }
            );
            for p in &m.phi {
                let _ = writeln!(out, "  phi({}) = {}", p.word, p.value);
            }
        }
        if let Some(c) = &self.abelian_certificate {
            let _ = writeln!(
                out,
                "abelian certificate  {} generators fix the datum",
                c.checked.len()
            );
        }
        out
    }
}
