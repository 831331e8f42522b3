//! Catalog of every irreducible cyclic code of a given length, grouped by
//! code parameters, with text, JSON and CSV renderings.

use std::cmp::Reverse;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorizer::{case_parameters, Case, CaseParameters, FactorKind};
use crate::gfield::FieldTower;
use crate::wdist::{all_codes, CodeRecord};

pub const SCHEMA: &str = "cycloweight/1";

/// Validated parameters, the field tower and every code, in canonical
/// check-polynomial order.
pub fn enumerate_codes(q: u64, n: u64) -> Result<(CaseParameters, FieldTower, Vec<CodeRecord>)> {
    let params = case_parameters(n, q)?;
    let tower = FieldTower::for_order(q)?;
    let codes = all_codes(&params, &tower)?;
    Ok((params, tower, codes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupClass {
    Binomial,
    Trinomial { nu2u: u32 },
}

impl GroupClass {
    pub fn of(code: &CodeRecord) -> Self {
        match code.factor.kind() {
            FactorKind::Binomial { .. } => GroupClass::Binomial,
            FactorKind::Trinomial { .. } => GroupClass::Trinomial {
                nu2u: code.factor.nu2u().expect("trinomials carry nu_2(u)"),
            },
        }
    }

    pub fn label(&self) -> String {
        match self {
            GroupClass::Binomial => "binomial".into(),
            GroupClass::Trinomial { nu2u } => format!("trinomial nu2(u)={nu2u}"),
        }
    }

    fn rank(&self) -> (u8, Reverse<u32>) {
        match *self {
            GroupClass::Binomial => (0, Reverse(0)),
            GroupClass::Trinomial { nu2u } => (1, Reverse(nu2u)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogParameters {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m_prime: Option<u64>,
    pub l: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l_prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandedTerm {
    pub weight: usize,
    /// Decimal digits.
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub check_poly: String,
    pub enumerator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogGroup {
    pub label: String,
    pub dimension: usize,
    pub min_distance: usize,
    pub class: GroupClass,
    pub enumerator: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expanded: Option<Vec<ExpandedTerm>>,
    pub rows: Vec<CatalogRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSummary {
    pub codes: usize,
    pub groups: usize,
    pub rows_per_group: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub schema: String,
    pub q: u64,
    pub n: u64,
    pub case: Case,
    pub parameters: CatalogParameters,
    pub groups: Vec<CatalogGroup>,
    pub summary: CatalogSummary,
}

impl CatalogDocument {
    pub fn build(params: &CaseParameters, codes: &[CodeRecord], expand: bool) -> Self {
        let parameters = match params.case {
            Case::BinomialOnly => CatalogParameters {
                m: Some(params.m),
                m_prime: None,
                l: params.l,
                l_prime: None,
                r: None,
            },
            Case::Mixed => CatalogParameters {
                m: None,
                m_prime: Some(params.m_prime),
                l: params.l,
                l_prime: Some(params.l_prime),
                r: params.r,
            },
        };
        let mut order: Vec<&CodeRecord> = codes.iter().collect();
        order.sort_by(|a, b| {
            let key = |c: &CodeRecord| (c.dimension, GroupClass::of(c).rank(), c.min_distance);
            key(a).cmp(&key(b)).then_with(|| a.check_poly.canonical_cmp(&b.check_poly))
        });
        let mut groups: Vec<CatalogGroup> = Vec::new();
        for code in order {
            let class = GroupClass::of(code);
            let row = CatalogRow {
                check_poly: code.check_poly.render(),
                enumerator: code.enumerator.render(),
            };
            match groups.last_mut() {
                Some(g) if g.dimension == code.dimension && g.class == class && g.min_distance == code.min_distance => {
                    g.rows.push(row)
                }
                _ => groups.push(CatalogGroup {
                    label: code.label(),
                    dimension: code.dimension,
                    min_distance: code.min_distance,
                    class,
                    enumerator: code.enumerator.render(),
                    expanded: expand.then(|| {
                        code.enumerator
                            .expanded()
                            .iter()
                            .map(|(w, c)| ExpandedTerm {
                                weight: *w,
                                count: c.to_string(),
                            })
                            .collect()
                    }),
                    rows: vec![row],
                }),
            }
        }
        let summary = CatalogSummary {
            codes: codes.len(),
            groups: groups.len(),
            rows_per_group: groups.iter().map(|g| g.rows.len()).collect(),
        };
        CatalogDocument {
            schema: SCHEMA.into(),
            q: params.q,
            n: params.n,
            case: params.case,
            parameters,
            groups,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CatalogDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            input: "catalog JSON".into(),
            reason: e.to_string(),
        })?;
        if doc.schema != SCHEMA {
            return Err(Error::Parse {
                input: "catalog JSON".into(),
                reason: format!("unsupported schema {:?}", doc.schema),
            });
        }
        Ok(doc)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let p = &self.parameters;
        let mut params = Vec::new();
        if let Some(m) = p.m {
            params.push(format!("m = {m}"));
        }
        if let Some(m) = p.m_prime {
            params.push(format!("m' = {m}"));
        }
        params.push(format!("l = {}", p.l));
        if let Some(l) = p.l_prime {
            params.push(format!("l' = {l}"));
        }
        if let Some(r) = p.r {
            params.push(format!("r = {r}"));
        }
        let case = match self.case {
            Case::BinomialOnly => "binomial",
            Case::Mixed => "mixed",
        };
        writeln!(out, "q = {}, n = {}, case {case} ({})", self.q, self.n, params.join(", ")).unwrap();
        let plural = |k: usize, word: &str| if k == 1 { format!("1 {word}") } else { format!("{k} {word}s") };
        writeln!(out, "{} in {}", plural(self.summary.codes, "code"), plural(self.summary.groups, "group")).unwrap();
        for g in &self.groups {
            writeln!(out).unwrap();
            writeln!(out, "{}  {}  {}", g.label, g.class.label(), plural(g.rows.len(), "code")).unwrap();
            writeln!(out, "  A(z) = {}", g.enumerator).unwrap();
            if let Some(terms) = &g.expanded {
                let sum: Vec<String> = terms.iter().map(|t| format!("{}:{}", t.weight, t.count)).collect();
                writeln!(out, "  expanded {}", sum.join(" ")).unwrap();
            }
            for row in &g.rows {
                writeln!(out, "  {}", row.check_poly).unwrap();
            }
        }
        out
    }

    /// One line per code; with expanded groups, one line per
    /// `(code, weight)`.
    pub fn render_csv(&self) -> String {
        let expanded = self.groups.iter().all(|g| g.expanded.is_some()) && !self.groups.is_empty();
        let mut out = String::new();
        if expanded {
            out += "check_poly,weight,count\n";
            for g in &self.groups {
                for row in &g.rows {
                    for t in g.expanded.as_deref().unwrap_or_default() {
                        writeln!(out, "{},{},{}", row.check_poly, t.weight, t.count).unwrap();
                    }
                }
            }
        } else {
            out += "dimension,min_distance,class,check_poly,enumerator\n";
            for g in &self.groups {
                for row in &g.rows {
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        g.dimension,
                        g.min_distance,
                        g.class.label(),
                        row.check_poly,
                        row.enumerator
                    )
                    .unwrap();
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(q: u64, n: u64, expand: bool) -> CatalogDocument {
        let (params, _, codes) = enumerate_codes(q, n).unwrap();
        CatalogDocument::build(&params, &codes, expand)
    }

    #[test]
    fn worked_example_groups() {
        let d = doc(31, 288, false);
        assert_eq!(d.summary.codes, 85);
        let labels: Vec<&str> = d.groups.iter().map(|g| g.label.as_str()).collect();
        assert_eq!(
            labels,
            [
                "[31;288,1,288]",
                "[31;288,2,144]",
                "[31;288,2,216]",
                "[31;288,2,252]",
                "[31;288,2,270]",
                "[31;288,3,96]",
                "[31;288,6,48]",
                "[31;288,6,72]",
                "[31;288,6,84]",
                "[31;288,6,90]",
            ]
        );
        assert_eq!(d.summary.rows_per_group, [6, 3, 6, 12, 24, 4, 2, 4, 8, 16]);
        let rows: Vec<&str> = d.groups[0].rows.iter().map(|r| r.check_poly.as_str()).collect();
        assert_eq!(rows, ["x + 1", "x + 5", "x + 6", "x + 25", "x + 26", "x + 30"]);
        assert_eq!(d.groups[3].enumerator, "1+240z^252+720z^288");
    }

    #[test]
    fn json_round_trip() {
        for (q, n) in [(31, 288), (3, 8), (5, 4), (7, 16), (9, 16)] {
            let d = doc(q, n, true);
            assert_eq!(CatalogDocument::from_json(&d.to_json()).unwrap(), d);
        }
        let bad = doc(3, 8, false).to_json().replace(SCHEMA, "other/2");
        assert!(CatalogDocument::from_json(&bad).is_err());
    }

    #[test]
    fn binomial_case_parameters() {
        let d = doc(5, 4, false);
        assert_eq!(d.case, Case::BinomialOnly);
        assert_eq!((d.parameters.m, d.parameters.r), (Some(1), None));
        assert!(d.render_text().starts_with("q = 5, n = 4, case binomial (m = 1, l = 1)"));
    }

    #[test]
    fn csv_variants() {
        let d = doc(3, 8, false);
        let csv = d.render_csv();
        assert!(csv.starts_with("dimension,min_distance,class,check_poly,enumerator\n1,8,binomial,x + 1,1+2z^8\n"));
        let d = doc(3, 8, true);
        let csv = d.render_csv();
        assert!(csv.starts_with("check_poly,weight,count\nx + 1,0,1\nx + 1,8,2\n"));
    }
}
