use std::fmt;
use std::str::FromStr;

use crate::betti::McmName;
use crate::error::{Error, Result};

use super::field::{Field, FieldSpec};
use super::poly::{BPoly, Mono};

/// Modules with a built-in presentation: the eight indecomposable MCM
/// modules and the residue field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Mcm(McmName),
    Residue,
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "k" | "k_residue" => Ok(Builtin::Residue),
            other => other.parse().map(Builtin::Mcm),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Mcm(n) => write!(f, "{n}"),
            Builtin::Residue => f.write_str("k_residue"),
        }
    }
}

/// A finite presentation `G / R` of a graded B-module: `G` is free on
/// generators in the given degrees and `R` is spanned by the relations,
/// each a vector of homogeneous polynomials, one per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    gen_degrees: Vec<i64>,
    relations: Vec<Vec<BPoly>>,
    relation_degrees: Vec<i64>,
}

impl Presentation {
    pub fn new(gen_degrees: Vec<i64>, relations: Vec<Vec<BPoly>>) -> Result<Self> {
        let mut relation_degrees = Vec::with_capacity(relations.len());
        for rel in &relations {
            if rel.len() != gen_degrees.len() {
                return Err(Error::RelationArity {
                    expected: gen_degrees.len(),
                    got: rel.len(),
                });
            }
            let mut degree = None;
            for (p, &a) in rel.iter().zip(&gen_degrees) {
                if p.is_zero() {
                    continue;
                }
                let d = p
                    .homogeneous_degree()
                    .ok_or_else(|| Error::Inhomogeneous(p.to_string()))?
                    as i64
                    + a;
                match degree {
                    None => degree = Some(d),
                    Some(e) if e != d => {
                        return Err(Error::Inhomogeneous(format!(
                            "relation entries have degrees {e} and {d}"
                        )))
                    }
                    _ => {}
                }
            }
            relation_degrees.push(degree.ok_or(Error::ZeroRelation)?);
        }
        Ok(Presentation {
            gen_degrees,
            relations,
            relation_degrees,
        })
    }

    /// `B / (f_1, ..., f_n)` with one generator in degree 0.
    pub fn quotient(gens: &[BPoly]) -> Result<Self> {
        Self::new(vec![0], gens.iter().map(|g| vec![g.clone()]).collect())
    }

    pub fn builtin(b: Builtin) -> Self {
        let p = |s: &str| BPoly::parse(s).expect("builtin polynomial");
        let quotient = |gens: &[&str]| {
            Self::quotient(&gens.iter().map(|g| p(g)).collect::<Vec<_>>()).expect("builtin")
        };
        match b {
            Builtin::Mcm(McmName::Free) => Self::new(vec![0], vec![]).expect("builtin"),
            Builtin::Mcm(McmName::Omega) => {
                // cokernel of [[-z, y, 0], [0, -y, x]]; each column is a relation
                let cols = [["-z", "0"], ["y", "-y"], ["0", "x"]];
                let rels = cols
                    .iter()
                    .map(|c| c.iter().map(|s| p(s)).collect())
                    .collect();
                Self::new(vec![0, 0], rels).expect("builtin")
            }
            Builtin::Mcm(McmName::M1) => quotient(&["x"]),
            Builtin::Mcm(McmName::M2) => quotient(&["y"]),
            Builtin::Mcm(McmName::M3) => quotient(&["z"]),
            Builtin::Mcm(McmName::M12) => quotient(&["x", "y"]),
            Builtin::Mcm(McmName::M13) => quotient(&["x", "z"]),
            Builtin::Mcm(McmName::M23) => quotient(&["y", "z"]),
            Builtin::Residue => quotient(&["x", "y", "z"]),
        }
    }

    pub fn gen_degrees(&self) -> &[i64] {
        &self.gen_degrees
    }

    pub fn relations(&self) -> &[Vec<BPoly>] {
        &self.relations
    }

    pub fn relation_degrees(&self) -> &[i64] {
        &self.relation_degrees
    }

    pub fn max_gen_degree(&self) -> Option<i64> {
        self.gen_degrees.iter().copied().max()
    }

    pub fn min_gen_degree(&self) -> Option<i64> {
        self.gen_degrees.iter().copied().min()
    }
}

/// `builtin(name)` as a presentation.
pub fn builtin(name: &str) -> Result<Presentation> {
    Ok(Presentation::builtin(name.parse()?))
}

/// `B / I` for homogeneous nonzero generators of `I`.
pub fn quotient_module(gens: &[BPoly]) -> Result<Presentation> {
    if gens.iter().any(BPoly::is_zero) {
        return Err(Error::ZeroRelation);
    }
    Presentation::quotient(gens)
}

/// A presentation with coefficients mapped into a concrete field.
#[derive(Clone, Debug)]
pub struct GradedModule<F: Field> {
    field: F,
    gen_degrees: Vec<i64>,
    relations: Vec<FieldRelation<F::Elem>>,
}

#[derive(Clone, Debug)]
pub(crate) struct FieldRelation<E> {
    pub degree: i64,
    /// Per generator, the terms of its polynomial.
    pub entries: Vec<Vec<(Mono, E)>>,
}

impl<F: Field> GradedModule<F> {
    pub fn new(field: F, p: &Presentation) -> Result<Self> {
        let mut relations = Vec::new();
        for (rel, &degree) in p.relations.iter().zip(&p.relation_degrees) {
            let entries = rel
                .iter()
                .map(|poly| poly.to_field(&field))
                .collect::<Result<Vec<_>>>()?;
            // a relation may vanish after reduction mod p; it is then trivial
            if entries.iter().any(|e| !e.is_empty()) {
                relations.push(FieldRelation { degree, entries });
            }
        }
        Ok(GradedModule {
            field,
            gen_degrees: p.gen_degrees.clone(),
            relations,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn gen_degrees(&self) -> &[i64] {
        &self.gen_degrees
    }

    pub(crate) fn relations(&self) -> &[FieldRelation<F::Elem>] {
        &self.relations
    }
}

/// A parsed module description file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDescription {
    pub field: Option<FieldSpec>,
    pub presentation: Presentation,
}

impl ModuleDescription {
    /// Line format: `field QQ` or `field Fp <p>`; `gens d1 d2 ...`;
    /// `rel <poly>[, <poly> ...]`; or `builtin <name>` instead of
    /// `gens`/`rel`. Blank lines and `#` comments are ignored.
    ///
    /// Each `rel` line is one row of the presentation matrix, so there is
    /// one line per generator and one comma-separated entry per relation.
    /// Without a `gens` line every generator sits in degree 0.
    pub fn parse(text: &str) -> Result<Self> {
        let mut field = None;
        let mut gens: Option<Vec<i64>> = None;
        let mut rows: Vec<Vec<BPoly>> = Vec::new();
        let mut builtin_body: Option<Builtin> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "field" => {
                    if field.is_some() {
                        return Err(err("duplicate `field` line".into()));
                    }
                    let words: Vec<&str> = rest.split_whitespace().collect();
                    let spec = match words.as_slice() {
                        [q] if q.eq_ignore_ascii_case("qq") => FieldSpec::Rationals,
                        [fp, p] if fp.eq_ignore_ascii_case("fp") => format!("fp:{p}")
                            .parse()
                            .map_err(|e: Error| err(e.to_string()))?,
                        [spec] => spec.parse().map_err(|e: Error| err(e.to_string()))?,
                        _ => return Err(err(format!("bad field `{rest}`"))),
                    };
                    field = Some(spec);
                }
                "gens" => {
                    if gens.is_some() {
                        return Err(err("duplicate `gens` line".into()));
                    }
                    let degs = rest
                        .split_whitespace()
                        .map(|w| {
                            w.parse::<i64>()
                                .map_err(|_| err(format!("bad degree `{w}`")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    if degs.is_empty() {
                        return Err(err("`gens` needs at least one degree".into()));
                    }
                    gens = Some(degs);
                }
                "rel" => {
                    let row = rest
                        .split(',')
                        .map(|s| BPoly::parse(s).map_err(|e| err(e.to_string())))
                        .collect::<Result<Vec<_>>>()?;
                    if let Some(first) = rows.first() {
                        if first.len() != row.len() {
                            return Err(err(format!(
                                "matrix row has {} entries, expected {}",
                                row.len(),
                                first.len()
                            )));
                        }
                    }
                    rows.push(row);
                }
                "builtin" => {
                    if builtin_body.is_some() {
                        return Err(err("duplicate `builtin` line".into()));
                    }
                    builtin_body = Some(rest.parse().map_err(|e: Error| err(e.to_string()))?);
                }
                other => return Err(err(format!("unknown keyword `{other}`"))),
            }
        }
        let presentation = match (builtin_body, gens) {
            (Some(b), None) if rows.is_empty() => Presentation::builtin(b),
            (Some(_), _) => {
                return Err(Error::Parse {
                    line: 0,
                    msg: "`builtin` cannot be combined with `gens` or `rel`".into(),
                })
            }
            (None, gens) => {
                let gens = match gens {
                    Some(g) => g,
                    None if !rows.is_empty() => vec![0; rows.len()],
                    None => {
                        return Err(Error::Parse {
                            line: 0,
                            msg: "module description has no body".into(),
                        })
                    }
                };
                if !rows.is_empty() && rows.len() != gens.len() {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("{} matrix rows for {} generators", rows.len(), gens.len()),
                    });
                }
                let n_rel = rows.first().map_or(0, Vec::len);
                let rels = (0..n_rel)
                    .map(|c| rows.iter().map(|r| r[c].clone()).collect())
                    .collect();
                Presentation::new(gens, rels)?
            }
        };
        Ok(ModuleDescription {
            field,
            presentation,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolve::field::PrimeField;

    #[test]
    fn omega_presentation() {
        let p = Presentation::builtin(Builtin::Mcm(McmName::Omega));
        assert_eq!(p.gen_degrees(), &[0, 0]);
        assert_eq!(p.relation_degrees(), &[1, 1, 1]);
    }

    #[test]
    fn builtin_names() {
        assert!(builtin("M12").is_ok());
        assert!(builtin("k_residue").is_ok());
        assert!(matches!(builtin("M4"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn quotient_rejects_bad_generators() {
        assert_eq!(
            quotient_module(&[BPoly::parse("x*y").unwrap()]),
            Err(Error::ZeroRelation)
        );
        assert!(matches!(
            quotient_module(&[BPoly::parse("x + y^2").unwrap()]),
            Err(Error::Inhomogeneous(_))
        ));
    }

    #[test]
    fn relation_degrees_follow_shifts() {
        let p = Presentation::new(
            vec![0, 1],
            vec![vec![
                BPoly::parse("x^2").unwrap(),
                BPoly::parse("y").unwrap(),
            ]],
        )
        .unwrap();
        assert_eq!(p.relation_degrees(), &[2]);
        let bad = Presentation::new(
            vec![0, 0],
            vec![vec![
                BPoly::parse("x^2").unwrap(),
                BPoly::parse("y").unwrap(),
            ]],
        );
        assert!(matches!(bad, Err(Error::Inhomogeneous(_))));
    }

    #[test]
    fn parse_description() {
        let text = "# canonical module\nfield Fp 32003\ngens 0 0\nrel -z, y, 0\nrel 0, -y, x\n";
        let d = ModuleDescription::parse(text).unwrap();
        assert_eq!(d.field, Some(FieldSpec::Prime(32003)));
        assert_eq!(
            d.presentation,
            Presentation::builtin(Builtin::Mcm(McmName::Omega))
        );
    }

    #[test]
    fn parse_builtin_and_cyclic_rows() {
        let d = ModuleDescription::parse("builtin omega").unwrap();
        assert_eq!(d.field, None);
        assert_eq!(d.presentation.gen_degrees(), &[0, 0]);
        let d = ModuleDescription::parse("field QQ\nrel x^3, y^3, z^3\n").unwrap();
        assert_eq!(d.field, Some(FieldSpec::Rationals));
        assert_eq!(d.presentation.gen_degrees(), &[0]);
        assert_eq!(d.presentation.relation_degrees(), &[3, 3, 3]);
        let free = ModuleDescription::parse("gens 0 2").unwrap();
        assert!(free.presentation.relations().is_empty());
    }

    #[test]
    fn parse_description_errors() {
        assert!(ModuleDescription::parse("").is_err());
        assert!(ModuleDescription::parse("gens 0\nfoo 1").is_err());
        assert!(ModuleDescription::parse("builtin omega\ngens 0").is_err());
        assert!(ModuleDescription::parse("field Fp 6\nbuiltin B").is_err());
        assert!(ModuleDescription::parse("gens 0 0\nrel x, y").is_err());
        assert!(ModuleDescription::parse("rel x, y\nrel z").is_err());
        let e = ModuleDescription::parse("gens 0\nrel x +").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn relations_vanishing_mod_p_are_dropped() {
        let p = Presentation::quotient(&[BPoly::parse("7x").unwrap()]).unwrap();
        let m = GradedModule::new(PrimeField::new(7).unwrap(), &p).unwrap();
        assert!(m.relations().is_empty());
    }
}
