//! Spec strings and JSON files accepted on the command line.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{FiniteAbelianGroup, UnitEmbedding};
use crate::cohomology::{carrying_cocycle, Cochain2};
use crate::fingroup::FiniteGroup;
use crate::loopalg::{load_presentation, Field, GradedBasisAlgebra};
use crate::torsion::{DegreeWindow, TwistedAlgebra};

/// Bad input, located by the path of the offending field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{field}: {message}")]
pub struct InputError {
    pub field: String,
    pub message: String,
}

impl InputError {
    pub fn new(field: impl Into<String>, message: impl ToString) -> Self {
        Self { field: field.into(), message: message.to_string() }
    }
}

fn resolve(dir: &Path, path: &str) -> PathBuf {
    let p = Path::new(path);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        dir.join(p)
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    table: Vec<Vec<usize>>,
}

/// `cyclic:<n>`, `product:<spec>x<spec>` or `table:<path>`.
pub fn parse_group(spec: &str, dir: &Path) -> Result<FiniteGroup, String> {
    let spec = spec.trim();
    if let Some(n) = spec.strip_prefix("cyclic:") {
        let n: usize = n.parse().map_err(|_| format!("bad order {n:?}"))?;
        return FiniteGroup::cyclic(n).map_err(|e| e.to_string());
    }
    if let Some(rest) = spec.strip_prefix("product:") {
        // the factors may themselves contain 'x', so try every split
        let mut last_err = format!("expected <spec>x<spec> in {rest:?}");
        for (i, _) in rest.match_indices('x') {
            match (parse_group(&rest[..i], dir), parse_group(&rest[i + 1..], dir)) {
                (Ok(l), Ok(r)) => return FiniteGroup::product(&l, &r).map_err(|e| e.to_string()),
                (Err(e), _) | (_, Err(e)) => last_err = e,
            }
        }
        return Err(last_err);
    }
    if let Some(path) = spec.strip_prefix("table:") {
        let path = resolve(dir, path);
        let file: TableFile =
            serde_json::from_str(&read(&path)?).map_err(|e| format!("{}: {e}", path.display()))?;
        return FiniteGroup::from_table(&file.table).map_err(|e| e.to_string());
    }
    Err(format!("unknown group spec {spec:?} (expected cyclic:, product: or table:)"))
}

/// `coeff:<m1>[x<m2>...]`, bare `<m1>[x<m2>...]`, or `trivial`.
pub fn parse_coeff(spec: &str) -> Result<FiniteAbelianGroup, String> {
    let spec = spec.trim();
    if spec == "trivial" {
        return Ok(FiniteAbelianGroup::trivial());
    }
    let body = spec.strip_prefix("coeff:").unwrap_or(spec);
    let factors = body
        .split('x')
        .map(|m| m.trim().parse::<u64>().map_err(|_| format!("bad modulus {m:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    FiniteAbelianGroup::new(factors).map_err(|e| e.to_string())
}

/// `circle:<p>:<window>` (`p = 0` for ℚ), `cpl:<l>:<p>` or `file:<path>`.
pub fn parse_algebra(spec: &str, dir: &Path) -> Result<GradedBasisAlgebra, String> {
    let spec = spec.trim();
    let nums = |rest: &str| -> Result<(u32, u32), String> {
        let (a, b) = rest.split_once(':').ok_or_else(|| format!("expected two numbers in {rest:?}"))?;
        let a = a.parse().map_err(|_| format!("bad number {a:?}"))?;
        let b = b.parse().map_err(|_| format!("bad number {b:?}"))?;
        Ok((a, b))
    };
    let built = if let Some(rest) = spec.strip_prefix("circle:") {
        let (p, w) = nums(rest)?;
        let field = Field::from_characteristic(p).map_err(|e| e.to_string())?;
        GradedBasisAlgebra::circle_model(field, w)
    } else if let Some(rest) = spec.strip_prefix("cpl:") {
        let (l, p) = nums(rest)?;
        GradedBasisAlgebra::cpl_minimal_model(l, p)
    } else if let Some(path) = spec.strip_prefix("file:") {
        load_presentation(resolve(dir, path))
    } else {
        return Err(format!("unknown algebra spec {spec:?} (expected circle:, cpl: or file:)"));
    };
    built.map_err(|e| e.to_string())
}

/// Cocycle file: `values[g][h]` lists the components of `c(g, h)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleFile {
    pub group: String,
    pub coeff: Vec<u64>,
    pub values: Vec<Vec<Vec<u64>>>,
}

impl CocycleFile {
    pub fn from_cochain(group_spec: &str, c: &Cochain2) -> Self {
        let n = c.group().order();
        let values = (0..n)
            .map(|g| (0..n).map(|h| c.coeff().components(c.get(g, h))).collect())
            .collect();
        Self { group: group_spec.to_string(), coeff: c.coeff().factors().to_vec(), values }
    }
}

/// Reads a cocycle file, normalizing by the constant `c(e, e)`.
pub fn load_cocycle(path: &Path) -> Result<Cochain2, InputError> {
    let label = path.display().to_string();
    let text = read(path).map_err(|e| InputError::new(&label, e))?;
    let file: CocycleFile = serde_json::from_str(&text).map_err(|e| InputError::new(&label, e))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let group = parse_group(&file.group, dir).map_err(|e| InputError::new(format!("{label}: group"), e))?;
    let coeff = FiniteAbelianGroup::new(file.coeff.clone()).map_err(|e| InputError::new(format!("{label}: coeff"), e))?;
    let n = group.order();
    if file.values.len() != n {
        return Err(InputError::new(
            format!("{label}: values"),
            format!("expected {n} rows, got {}", file.values.len()),
        ));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (g, row) in file.values.iter().enumerate() {
        if row.len() != n {
            return Err(InputError::new(
                format!("{label}: values[{g}]"),
                format!("expected {n} entries, got {}", row.len()),
            ));
        }
        for (h, comps) in row.iter().enumerate() {
            let a = coeff
                .from_components(comps)
                .map_err(|e| InputError::new(format!("{label}: values[{g}][{h}]"), e))?;
            flat.push(a);
        }
    }
    Cochain2::normalized_from_raw(Arc::new(group), coeff, flat)
        .map_err(|e| InputError::new(format!("{label}: values"), e))
}

/// `zero`, `carrying:<a-element>` or `file:<path>`.
pub fn parse_cocycle(
    spec: &str,
    group: &Arc<FiniteGroup>,
    coeff: &FiniteAbelianGroup,
    dir: &Path,
) -> Result<Cochain2, String> {
    let spec = spec.trim();
    if spec == "zero" {
        return Ok(Cochain2::zero(group.clone(), coeff.clone()));
    }
    if let Some(a) = spec.strip_prefix("carrying:") {
        let a = coeff.parse_element(a).map_err(|e| e.to_string())?;
        let gen = group.cyclic_generator().ok_or("carrying cocycles need a cyclic group")?;
        return carrying_cocycle(group.clone(), gen, coeff.clone(), a).map_err(|e| e.to_string());
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let c = load_cocycle(&resolve(dir, path)).map_err(|e| e.to_string())?;
        if **c.group() != **group {
            return Err("the file's group differs from the configured group".into());
        }
        if c.coeff() != coeff {
            return Err("the file's coefficients differ from the configured coefficients".into());
        }
        return Ok(Cochain2::new(group.clone(), coeff.clone(), c.values().to_vec()).expect("validated"));
    }
    Err(format!("unknown cocycle spec {spec:?} (expected zero, carrying: or file:)"))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    algebra: String,
    group: String,
    coeff: String,
    #[serde(default)]
    generator_images: Vec<String>,
    cocycle: String,
    #[serde(default)]
    degree_window: Option<(i32, i32)>,
}

/// A fully resolved twisting configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub algebra: TwistedAlgebra,
    pub window: DegreeWindow,
}

/// Reads and validates a config file; relative paths inside it are taken
/// relative to the file's directory.
pub fn load_config(path: &Path) -> Result<RunConfig, InputError> {
    let label = path.display().to_string();
    let text = read(path).map_err(|e| InputError::new(&label, e))?;
    let cfg: ConfigFile = serde_json::from_str(&text).map_err(|e| InputError::new(&label, e))?;
    let dir = path.parent().unwrap_or(Path::new("."));

    let base = Arc::new(parse_algebra(&cfg.algebra, dir).map_err(|e| InputError::new("algebra", e))?);
    let group = Arc::new(parse_group(&cfg.group, dir).map_err(|e| InputError::new("group", e))?);
    let coeff = parse_coeff(&cfg.coeff).map_err(|e| InputError::new("coeff", e))?;
    let images = cfg
        .generator_images
        .iter()
        .enumerate()
        .map(|(i, s)| base.parse_element(s).map_err(|e| InputError::new(format!("generator_images[{i}]"), e)))
        .collect::<Result<Vec<_>, _>>()?;
    let embedding = if coeff.factors().is_empty() && images.is_empty() {
        UnitEmbedding::trivial(base.clone())
    } else {
        UnitEmbedding::new(coeff.clone(), base.clone(), images).map_err(|e| InputError::new("generator_images", e))?
    };
    let cocycle = parse_cocycle(&cfg.cocycle, &group, &coeff, dir).map_err(|e| InputError::new("cocycle", e))?;
    let window = match cfg.degree_window {
        Some((min, max)) if min <= max => DegreeWindow { min, max },
        Some(_) => return Err(InputError::new("degree_window", "minimum exceeds maximum")),
        None => DegreeWindow::ALL,
    };
    let algebra = TwistedAlgebra::new(base, group, embedding, cocycle).map_err(|e| InputError::new("cocycle", e))?;
    Ok(RunConfig { algebra, window })
}
