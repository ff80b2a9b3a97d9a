//! The JSON input document.
//!
//! A document describes a complex (either inline or under `"complex"`) plus
//! whichever parameter sections the subcommand needs:
//!
//! ```json
//! {"complex": {"m": 4, "facets": [[1,2],[2,3],[3,4],[1,4]]},
//!  "euler": {"eA": [1,1,1,1], "eB": [2,2,2,2]}}
//! ```
//!
//! Integers may be given as JSON numbers or as decimal strings.

use num_bigint::BigInt;
use polyprod::{Cell, CellPairModel, EulerVector, GroupSpec, ManifoldPairSpec, SimplicialComplex};
use serde::Deserialize;

use crate::CliError;

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Signed(i64),
    Unsigned(u64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match IntRepr::deserialize(deserializer)? {
            IntRepr::Signed(x) => Ok(Int(x.into())),
            IntRepr::Unsigned(x) => Ok(Int(x.into())),
            IntRepr::Text(s) => s
                .trim()
                .parse::<BigInt>()
                .map(Int)
                .map_err(|_| serde::de::Error::custom(format!("{s:?} is not an integer"))),
        }
    }
}

fn bigs(xs: &[Int]) -> Vec<BigInt> {
    xs.iter().map(|x| x.0.clone()).collect()
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    m: Option<usize>,
    facets: Option<Vec<Vec<usize>>>,
    edges: Option<Vec<[usize; 2]>>,
    flag: Option<bool>,
    empty_only: Option<bool>,
}

impl ComplexSpec {
    fn is_blank(&self) -> bool {
        self.m.is_none()
            && self.facets.is_none()
            && self.edges.is_none()
            && self.flag.is_none()
            && self.empty_only.is_none()
    }

    pub fn build(&self) -> Result<SimplicialComplex, CliError> {
        let m = self.m.ok_or_else(|| CliError::malformed("complex is missing \"m\""))?;
        let empty_only = self.empty_only.unwrap_or(false);
        let forms = [self.facets.is_some(), self.edges.is_some(), empty_only];
        if forms.iter().filter(|&&x| x).count() != 1 {
            return Err(CliError::malformed(
                "complex needs exactly one of \"facets\", \"edges\" (with \"flag\": true) or \"empty_only\": true",
            ));
        }
        if self.flag.is_some() && self.edges.is_none() {
            return Err(CliError::malformed("\"flag\" only applies to the \"edges\" form"));
        }
        if self.flag == Some(false) {
            return Err(CliError::malformed("the \"edges\" form describes a flag complex; \"flag\" must be true"));
        }
        let complex = if let Some(facets) = &self.facets {
            SimplicialComplex::from_facets(m, facets)?
        } else if let Some(edges) = &self.edges {
            let pairs: Vec<(usize, usize)> = edges.iter().map(|&[a, b]| (a, b)).collect();
            SimplicialComplex::clique_complex(m, &pairs)?
        } else {
            SimplicialComplex::empty_only(m)?
        };
        Ok(complex)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CellJson {
    dim: u32,
    in_b: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairJson {
    cells: Vec<CellJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EulerJson {
    #[serde(rename = "eA")]
    e_a: Vec<Int>,
    #[serde(rename = "eB")]
    e_b: Option<Vec<Int>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifoldJson {
    k: Vec<u32>,
    chi_boundary: Vec<Int>,
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum GroupJson {
    Finite { order: Int },
    TypeFl { chi: Int },
}

const INLINE_COMPLEX_KEYS: [&str; 5] = ["m", "facets", "edges", "flag", "empty_only"];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    complex: Option<ComplexSpec>,
    #[serde(skip)]
    inline: ComplexSpec,
    pairs: Option<Vec<PairJson>>,
    euler: Option<EulerJson>,
    q: Option<Vec<Int>>,
    manifold: Option<ManifoldJson>,
    groups: Option<Vec<GroupJson>>,
}

fn missing(section: &str) -> CliError {
    CliError::malformed(format!("input has no \"{section}\" section"))
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let invalid = |e: serde_json::Error| CliError::malformed(format!("invalid input document: {e}"));
        let mut object: serde_json::Map<String, serde_json::Value> = serde_json::from_str(text).map_err(invalid)?;
        let inline: serde_json::Map<String, serde_json::Value> =
            INLINE_COMPLEX_KEYS.iter().filter_map(|&k| object.remove_entry(k)).collect();
        let mut doc: InputDocument = serde_json::from_value(object.into()).map_err(invalid)?;
        doc.inline = serde_json::from_value(inline.into()).map_err(invalid)?;
        match (&doc.complex, doc.inline.is_blank()) {
            (Some(_), false) => Err(CliError::malformed("complex given both inline and under \"complex\"")),
            _ => Ok(doc),
        }
    }

    pub fn complex(&self) -> Result<SimplicialComplex, CliError> {
        match &self.complex {
            Some(spec) => spec.build(),
            None if self.inline.is_blank() => Err(missing("complex")),
            None => self.inline.build(),
        }
    }

    pub fn pairs(&self) -> Result<Vec<CellPairModel>, CliError> {
        let pairs = self.pairs.as_ref().ok_or_else(|| missing("pairs"))?;
        Ok(pairs
            .iter()
            .map(|p| CellPairModel::new(p.cells.iter().map(|c| Cell::new(c.dim, c.in_b)).collect()))
            .collect())
    }

    pub fn has_pairs(&self) -> bool {
        self.pairs.is_some()
    }

    pub fn e_a(&self) -> Result<EulerVector, CliError> {
        let euler = self.euler.as_ref().ok_or_else(|| missing("euler"))?;
        Ok(EulerVector::new(bigs(&euler.e_a)))
    }

    pub fn e_b(&self) -> Result<EulerVector, CliError> {
        let euler = self.euler.as_ref().ok_or_else(|| missing("euler"))?;
        let e_b = euler.e_b.as_ref().ok_or_else(|| CliError::malformed("\"euler\" section has no \"eB\""))?;
        Ok(EulerVector::new(bigs(e_b)))
    }

    pub fn has_euler(&self) -> bool {
        self.euler.is_some()
    }

    pub fn q(&self) -> Result<Vec<BigInt>, CliError> {
        Ok(bigs(self.q.as_ref().ok_or_else(|| missing("q"))?))
    }

    pub fn manifold(&self) -> Result<Option<ManifoldPairSpec>, CliError> {
        match &self.manifold {
            None => Ok(None),
            Some(m) => Ok(Some(ManifoldPairSpec::new(m.k.clone(), bigs(&m.chi_boundary))?)),
        }
    }

    pub fn groups(&self) -> Result<Vec<GroupSpec>, CliError> {
        let groups = self.groups.as_ref().ok_or_else(|| missing("groups"))?;
        Ok(groups
            .iter()
            .map(|g| match g {
                GroupJson::Finite { order } => GroupSpec::FiniteOfOrder(order.0.clone()),
                GroupJson::TypeFl { chi } => GroupSpec::TypeFl(chi.0.clone()),
            })
            .collect())
    }
}
