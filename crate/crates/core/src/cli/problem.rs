//! Line-oriented problem files.
//!
//! ```text
//! # Brieskorn surface, f = xy deformed by -tz
//! vars: x y z
//! param: t
//! phi: x^5+y^3+z^2
//! F: x*y - t*z
//! arc: t=0, x=-s^2, y=0, z=s^5
//! ```
//!
//! Keys: `vars`, `param` (default `t`), `arcparam` (default `s`), `phi`,
//! `f`, `g`, `F`, `Phi`, `arc` (repeatable), and the extensions `weights`
//! (hint for the weighted certificate) and `ideal` (explicit generators for
//! the `newton` command). `phi`, `Phi` and `ideal` take comma-separated
//! lists; `#` starts a comment.

use std::collections::BTreeMap;

use crate::arcs::Arc;
use crate::error::{Error, Result};
use crate::invariants::{FamilyDeformedX, FamilyFixedX, FunctionOnGerm, MapGerm};
use crate::polyring::{parse_polynomial_at, Polynomial, Rational, Vars};

const KEYS: &[&str] = &[
    "vars", "param", "arcparam", "phi", "f", "g", "F", "Phi", "arc", "weights", "ideal",
];

/// The three problem shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Configuration {
    /// `f` on `X = phi^{-1}(0)`.
    Germ(FunctionOnGerm),
    /// `F(t, x)` on a fixed `X`, from `F` or from `f + t g`.
    FixedX(FamilyFixedX),
    /// `f` on the deformed germs `Phi(t, x) = 0`.
    DeformedX(FamilyDeformedX),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub vars: Vars,
    pub param: String,
    pub arc_param: String,
    pub configuration: Configuration,
    pub arcs: Vec<Arc>,
    pub weights: Option<Vec<u64>>,
    pub ideal: Option<Vec<Polynomial>>,
    /// Canonical rendering of the inputs, one `key: value` per line.
    pub canonical: String,
}

impl ProblemFile {
    /// `f` on `X`, taking `t = 0` for families.
    pub fn function_at_zero(&self) -> Result<FunctionOnGerm> {
        match &self.configuration {
            Configuration::Germ(fg) => Ok(fg.clone()),
            Configuration::FixedX(fam) => {
                FunctionOnGerm::new(fam.germ().clone(), fam.at(&Rational::from_integer(0.into()))?)
            }
            Configuration::DeformedX(fam) => fam.at(&Rational::from_integer(0.into())),
        }
    }
}

struct Entry {
    line: usize,
    /// 1-based column of the first character of `value`.
    column: usize,
    value: String,
}

/// Parses a problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let mut entries: BTreeMap<&'static str, Vec<Entry>> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            return Err(Error::Syntax {
                line,
                column: content.len() - content.trim_start().len() + 1,
                message: "expected `key: value`".into(),
            });
        };
        let key = content[..colon].trim();
        let Some(&key) = KEYS.iter().find(|&&k| k == key) else {
            return Err(Error::Syntax {
                line,
                column: content.len() - content.trim_start().len() + 1,
                message: format!("unknown key {key:?}"),
            });
        };
        let rest = &content[colon + 1..];
        let lead = rest.len() - rest.trim_start().len();
        let list = entries.entry(key).or_default();
        if key != "arc" && !list.is_empty() {
            return Err(Error::Syntax {
                line,
                column: 1,
                message: format!("duplicate key {key:?}"),
            });
        }
        list.push(Entry {
            line,
            column: colon + 1 + lead + 1,
            value: rest.trim().to_string(),
        });
    }
    let single = |k: &str| entries.get(k).and_then(|v| v.first());

    let vars_entry = single("vars").ok_or_else(|| Error::input("missing `vars`"))?;
    let names: Vec<&str> = words(&vars_entry.value);
    let vars = Vars::new(&names).map_err(|e| at(e, vars_entry))?;
    let param = match single("param") {
        Some(e) => identifier(e)?,
        None => "t".to_string(),
    };
    let arc_param = match single("arcparam") {
        Some(e) => identifier(e)?,
        None => "s".to_string(),
    };
    if vars.index_of(&param).is_some() {
        return Err(Error::input(format!("parameter {param:?} is also a space variable")));
    }
    if vars.index_of(&arc_param).is_some() || arc_param == param {
        return Err(Error::input(format!(
            "arc parameter {arc_param:?} clashes with another variable"
        )));
    }
    let mut total_names: Vec<String> = vars.names().to_vec();
    total_names.push(param.clone());
    let total = Vars::new(&total_names)?;
    let arc_vars = Vars::new(&[arc_param.as_str()])?;

    let phi = match single("phi") {
        Some(e) => poly_list(e, &vars)?,
        None => Vec::new(),
    };
    let f = single("f").map(|e| poly(e, &vars)).transpose()?;
    let g = single("g").map(|e| poly(e, &vars)).transpose()?;
    let big_f = single("F").map(|e| poly(e, &total)).transpose()?;
    let big_phi = single("Phi").map(|e| poly_list(e, &total)).transpose()?;
    let ideal = single("ideal").map(|e| poly_list(e, &vars)).transpose()?;
    let weights = single("weights")
        .map(|e| {
            words(&e.value)
                .iter()
                .map(|w| {
                    w.parse::<u64>()
                        .ok()
                        .filter(|&x| x > 0)
                        .ok_or_else(|| at(Error::input(format!("bad weight {w:?}")), e))
                })
                .collect::<Result<Vec<u64>>>()
        })
        .transpose()?;
    if let Some(w) = &weights {
        if w.len() != vars.len() {
            return Err(Error::input(format!(
                "{} weights for {} variables",
                w.len(),
                vars.len()
            )));
        }
    }

    let configuration = match (&f, &g, &big_f, &big_phi) {
        (_, _, Some(_), Some(_)) => return Err(Error::input("give either F or Phi, not both")),
        (Some(_), _, Some(_), _) | (_, Some(_), Some(_), _) => {
            return Err(Error::input("give either F or f and g, not both"))
        }
        (_, Some(_), _, Some(_)) => return Err(Error::input("g cannot be combined with Phi")),
        (_, _, _, Some(phi_t)) => {
            if !phi.is_empty() {
                return Err(Error::input("give either phi or Phi, not both"));
            }
            let f = f.clone().ok_or_else(|| Error::input("Phi requires f"))?;
            Configuration::DeformedX(FamilyDeformedX::new(&vars, &param, phi_t.clone(), f)?)
        }
        (_, _, Some(fam), None) => Configuration::FixedX(FamilyFixedX::new(
            MapGerm::new(&vars, phi.clone())?,
            &param,
            fam.clone(),
        )?),
        (Some(f), Some(g), None, None) => {
            let germ = MapGerm::new(&vars, phi.clone())?;
            let f = f.reembed(&total)?;
            let g = g.reembed(&total)?;
            Configuration::FixedX(FamilyFixedX::from_split(germ, &param, &f, &g)?)
        }
        (Some(f), None, None, None) => {
            Configuration::Germ(FunctionOnGerm::new(MapGerm::new(&vars, phi.clone())?, f.clone())?)
        }
        (None, _, None, None) => {
            if ideal.is_none() {
                return Err(Error::input("missing `f` (or `F`)"));
            }
            // An explicit ideal alone is enough for the newton command;
            // the function slot is filled with zero.
            Configuration::Germ(FunctionOnGerm::new(
                MapGerm::new(&vars, phi.clone())?,
                Polynomial::zero(&vars),
            )?)
        }
    };

    let mut arcs = Vec::new();
    for e in entries.get("arc").map(Vec::as_slice).unwrap_or(&[]) {
        arcs.push(parse_arc(e, &total, &arc_vars)?);
    }

    let mut canonical = vec![format!("vars: {}", vars.names().join(" "))];
    canonical.push(format!("param: {param}"));
    canonical.push(format!("arcparam: {arc_param}"));
    let join = |ps: &[Polynomial]| ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    if !phi.is_empty() {
        canonical.push(format!("phi: {}", join(&phi)));
    }
    for (k, p) in [("f", &f), ("g", &g), ("F", &big_f)] {
        if let Some(p) = p {
            canonical.push(format!("{k}: {p}"));
        }
    }
    if let Some(ps) = &big_phi {
        canonical.push(format!("Phi: {}", join(ps)));
    }
    if let Some(ps) = &ideal {
        canonical.push(format!("ideal: {}", join(ps)));
    }
    for a in &arcs {
        canonical.push(format!("arc: {a}"));
    }
    if let Some(w) = &weights {
        let w: Vec<String> = w.iter().map(ToString::to_string).collect();
        canonical.push(format!("weights: {}", w.join(" ")));
    }

    Ok(ProblemFile {
        vars,
        param,
        arc_param,
        configuration,
        arcs,
        weights,
        ideal,
        canonical: canonical.join("\n") + "\n",
    })
}

fn words(s: &str) -> Vec<&str> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|w| !w.is_empty())
        .collect()
}

fn at(e: Error, entry: &Entry) -> Error {
    match e {
        Error::Input(message) => Error::Syntax {
            line: entry.line,
            column: entry.column,
            message,
        },
        other => other,
    }
}

fn identifier(e: &Entry) -> Result<String> {
    let v = Vars::new(&[e.value.as_str()]).map_err(|err| at(err, e))?;
    Ok(v.names()[0].clone())
}

fn poly(e: &Entry, vars: &Vars) -> Result<Polynomial> {
    parse_polynomial_at(&e.value, vars, e.line, e.column).map_err(|err| at(err, e))
}

/// Splits on commas, keeping track of each piece's column.
fn pieces(e: &Entry) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in e.value.char_indices() {
        if c == ',' {
            out.push((start, &e.value[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &e.value[start..]));
    out.into_iter()
        .map(|(offset, s)| {
            let lead = s.len() - s.trim_start().len();
            (e.column + offset + lead, s.trim())
        })
        .collect()
}

fn poly_list(e: &Entry, vars: &Vars) -> Result<Vec<Polynomial>> {
    if e.value.is_empty() {
        return Ok(Vec::new());
    }
    pieces(e)
        .into_iter()
        .map(|(column, s)| parse_polynomial_at(s, vars, e.line, column).map_err(|err| at(err, e)))
        .collect()
}

fn parse_arc(e: &Entry, ambient: &Vars, arc_vars: &Vars) -> Result<Arc> {
    let mut coords = BTreeMap::new();
    for (column, piece) in pieces(e) {
        let Some((name, value)) = piece.split_once('=') else {
            return Err(Error::Syntax {
                line: e.line,
                column,
                message: format!("expected `coordinate=polynomial`, got {piece:?}"),
            });
        };
        let name = name.trim();
        if ambient.index_of(name).is_none() {
            return Err(Error::Syntax {
                line: e.line,
                column,
                message: format!("unknown coordinate {name:?}"),
            });
        }
        let value_column = column + piece.find('=').unwrap_or(0) + 1;
        let lead = value.len() - value.trim_start().len();
        let p = parse_polynomial_at(value.trim(), arc_vars, e.line, value_column + lead)?;
        if coords.insert(name.to_string(), p).is_some() {
            return Err(Error::Syntax {
                line: e.line,
                column,
                message: format!("coordinate {name:?} given twice"),
            });
        }
    }
    Arc::new(arc_vars, coords).map_err(|err| at(err, e))
}
