//! JSON schemas for every file format the CLI reads and writes.
//!
//! Coefficients are decimal strings (fractions as `"p/q"`) so no binary
//! float pathway exists; serialization is canonical (sorted keys, reduced
//! scalars), making round-trips bit-exact after one normalization pass.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedMap, GradedModule};
use crate::rep::{AdjointFamily, ShamashSystem};
use crate::scalar::{RingSpec, Scalar};
use crate::unital::{decompose_strictly_unital, SplitUnitAlgebra, SplitUnitModule};

/// `{"degrees": {"0": ["1"], "1": ["e"]}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub degrees: BTreeMap<String, Vec<String>>,
}

impl ModuleJson {
    pub fn from_module(m: &GradedModule) -> ModuleJson {
        ModuleJson {
            degrees: m
                .degrees()
                .iter()
                .map(|(d, ls)| (d.to_string(), ls.clone()))
                .collect(),
        }
    }

    pub fn to_module(&self) -> Result<GradedModule> {
        let mut degrees = BTreeMap::new();
        for (d, ls) in &self.degrees {
            let d: i64 = d
                .parse()
                .map_err(|_| Error::Invalid(format!("bad degree key {d:?}")))?;
            degrees.insert(d, ls.clone());
        }
        GradedModule::new(degrees)
    }
}

/// `{"degree": -1, "entries": [{"from": "e", "to": "1", "coeff": "3"}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub degree: i64,
    pub entries: Vec<MapEntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEntryJson {
    pub from: String,
    pub to: String,
    pub coeff: String,
}

impl MapJson {
    pub fn from_map(m: &GradedMap) -> MapJson {
        MapJson {
            degree: m.degree,
            entries: m
                .entries()
                .into_iter()
                .map(|(from, to, c)| MapEntryJson { from, to, coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn to_map(
        &self,
        ring: &RingSpec,
        source: &GradedModule,
        target: &GradedModule,
    ) -> Result<GradedMap> {
        let entries: Result<Vec<(String, String, Scalar)>> = self
            .entries
            .iter()
            .map(|e| Ok((e.from.clone(), e.to.clone(), ring.parse(&e.coeff)?)))
            .collect();
        GradedMap::from_entries(source.clone(), target.clone(), self.degree, &entries?)
    }
}

/// `{"degree": -1, "max_arity": 6, "components": [{"arity": 2, "entries":
/// [{"inputs": ["e","e"], "output": {"1": "1"}}]}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainJson {
    pub degree: i64,
    pub max_arity: usize,
    pub components: Vec<CochainComponentJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainComponentJson {
    pub arity: usize,
    pub entries: Vec<CochainEntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainEntryJson {
    pub inputs: Vec<String>,
    pub output: BTreeMap<String, String>,
}

impl CochainJson {
    pub fn from_cochain(c: &Cochain) -> CochainJson {
        let components = c
            .arities()
            .map(|a| CochainComponentJson {
                arity: a,
                entries: c
                    .component(a)
                    .expect("listed arity")
                    .iter()
                    .map(|(w, e)| CochainEntryJson {
                        inputs: w.clone(),
                        output: e
                            .terms()
                            .map(|(l, v)| (l.clone(), v.to_string()))
                            .collect(),
                    })
                    .collect(),
            })
            .collect();
        CochainJson { degree: c.degree, max_arity: c.max_arity, components }
    }

    pub fn to_cochain(
        &self,
        ring: &RingSpec,
        source: &GradedModule,
        target: &GradedModule,
    ) -> Result<Cochain> {
        let mut out = Cochain::zero(
            ring.clone(),
            source.clone(),
            target.clone(),
            self.degree,
            self.max_arity,
        );
        for comp in &self.components {
            for entry in &comp.entries {
                let mut e = GradedElement::zero();
                for (l, v) in &entry.output {
                    let d = target.degree_of(l)? + 1;
                    e.add_term(l.clone(), ring.parse(v)?, d)?;
                }
                out.add_component(comp.arity, entry.inputs.clone(), e)?;
            }
        }
        Ok(out)
    }
}

/// An algebra file: ring, carrier, unit, and the full structure `ν`
/// (strictly unital split form is recovered by decomposition).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub ring: String,
    pub max_arity: usize,
    pub module: ModuleJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    pub nu: CochainJson,
}

impl AlgebraJson {
    pub fn ring_spec(&self) -> Result<RingSpec> {
        RingSpec::parse_spec(&self.ring)
    }

    pub fn from_nu(ring: &RingSpec, nu: &Cochain, unit: Option<&str>) -> AlgebraJson {
        AlgebraJson {
            ring: ring.to_string(),
            max_arity: nu.max_arity,
            module: ModuleJson::from_module(&nu.source),
            unit: unit.map(String::from),
            nu: CochainJson::from_cochain(nu),
        }
    }

    pub fn from_algebra(alg: &SplitUnitAlgebra) -> Result<AlgebraJson> {
        Ok(AlgebraJson::from_nu(
            alg.ring(),
            &alg.assembled()?,
            Some(&alg.carrier.unit_label),
        ))
    }

    /// The structure as a plain nonunital cochain.
    pub fn to_nu(&self) -> Result<(RingSpec, Cochain)> {
        let ring = self.ring_spec()?;
        let module = self.module.to_module()?;
        let nu = self.nu.to_cochain(&ring, &module, &module)?;
        Ok((ring, nu))
    }

    /// The structure in split-unit form; requires a `unit` field.
    pub fn to_algebra(&self) -> Result<SplitUnitAlgebra> {
        let (ring, nu) = self.to_nu()?;
        let unit = self
            .unit
            .as_deref()
            .ok_or_else(|| Error::Invalid("algebra file has no unit label".into()))?;
        let carrier = SplitUnitModule::new(&ring, nu.source.clone(), unit)?;
        let (mu_bar, h) = decompose_strictly_unital(&nu, &carrier)?;
        SplitUnitAlgebra::new_unchecked(carrier, mu_bar, h, self.max_arity)
    }
}

/// A representation file: the fiber module plus the adjoint family in the
/// graded-map schema (`word` holds the algebra letters, n-1 of them).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub module: ModuleJson,
    pub maps: Vec<RepMapJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepMapJson {
    pub arity: usize,
    pub entries: Vec<RepEntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepEntryJson {
    pub word: Vec<String>,
    pub from: String,
    pub output: BTreeMap<String, String>,
}

impl RepJson {
    pub fn from_family(fam: &AdjointFamily) -> RepJson {
        let mut by_arity: BTreeMap<usize, Vec<RepEntryJson>> = BTreeMap::new();
        for (n, (w, m), v) in fam.entries() {
            by_arity.entry(n).or_default().push(RepEntryJson {
                word: w.clone(),
                from: m.clone(),
                output: v.terms().map(|(l, c)| (l.clone(), c.to_string())).collect(),
            });
        }
        RepJson {
            module: ModuleJson::from_module(&fam.module),
            maps: by_arity
                .into_iter()
                .map(|(arity, entries)| RepMapJson { arity, entries })
                .collect(),
        }
    }

    pub fn to_family(
        &self,
        ring: &RingSpec,
        source: &GradedModule,
        max_arity: usize,
    ) -> Result<AdjointFamily> {
        let module = self.module.to_module()?;
        let mut fam = AdjointFamily::new(ring.clone(), source.clone(), module.clone(), max_arity);
        for map in &self.maps {
            for e in &map.entries {
                let mut out = GradedElement::zero();
                for (l, v) in &e.output {
                    out.add_term(l.clone(), ring.parse(v)?, module.degree_of(l)?)?;
                }
                fam.set_value(map.arity, e.word.clone(), &e.from, out)?;
            }
        }
        Ok(fam)
    }
}

/// A Shamash system file: `f`, the module, and the `σ^n` maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShamashJson {
    pub f: String,
    pub module: ModuleJson,
    pub sigma: Vec<SigmaJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaJson {
    pub n: usize,
    pub entries: Vec<MapEntryJson>,
}

impl ShamashJson {
    pub fn from_system(sys: &ShamashSystem) -> ShamashJson {
        ShamashJson {
            f: sys.f.to_string(),
            module: ModuleJson::from_module(&sys.module),
            sigma: sys
                .sigmas()
                .iter()
                .map(|(&n, map)| SigmaJson {
                    n,
                    entries: MapJson::from_map(map).entries,
                })
                .collect(),
        }
    }

    pub fn to_system(&self, ring: &RingSpec, max_index: usize) -> Result<ShamashSystem> {
        let module = self.module.to_module()?;
        let f = ring.parse(&self.f)?;
        let mut sigma = BTreeMap::new();
        for s in &self.sigma {
            let mj = MapJson { degree: 2 * s.n as i64 - 1, entries: s.entries.clone() };
            let map = mj.to_map(ring, &module, &module)?;
            if !map.is_zero() {
                sigma.insert(s.n, map);
            }
        }
        ShamashSystem::new_unchecked(f, module, sigma, max_index)
    }
}

/// Matrix-factorization output: `φ, ψ` in the graded-map schema over the
/// parity-collapsed modules, plus the verified `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFactorizationJson {
    pub f: String,
    pub even: ModuleJson,
    pub odd: ModuleJson,
    pub phi: MapJson,
    pub psi: MapJson,
}

impl MatrixFactorizationJson {
    pub fn from_mf(mf: &crate::comodule::MatrixFactorization) -> MatrixFactorizationJson {
        MatrixFactorizationJson {
            f: mf.f.to_string(),
            even: ModuleJson::from_module(&mf.even),
            odd: ModuleJson::from_module(&mf.odd),
            phi: MapJson::from_map(&mf.phi),
            psi: MapJson::from_map(&mf.psi),
        }
    }
}

/// Curved-bar output: the action of `d` on every word basis element and
/// the values of `ξ`, over the reduced module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarJson {
    pub ring: String,
    pub max_arity: usize,
    pub module: ModuleJson,
    pub d: Vec<BarDEntryJson>,
    pub xi: Vec<BarXiEntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarDEntryJson {
    pub word: Vec<String>,
    pub value: Vec<BarTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarTermJson {
    pub word: Vec<String>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarXiEntryJson {
    pub word: Vec<String>,
    pub value: String,
}

/// Canonical serialization: serde maps are `BTreeMap`s, so keys are always
/// sorted and repeated runs are byte-identical.
pub fn to_canonical_string<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map_err(|e| Error::Invalid(format!("serialization failed: {e}")))
}

pub fn from_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Invalid(format!("parse error: {e}")))
}
