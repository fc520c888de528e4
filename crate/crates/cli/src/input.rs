//! Category and structure files.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use modelcat::fincat::CategorySpec;
use modelcat::modelstruct::{GeneratingData, ModelStructure};
use modelcat::{FiniteCategory, MorphismClass};
use serde::Deserialize;
use serde_json::Value;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("{}: cannot read", path.display()))
}

pub fn load_category(path: &Path) -> Result<FiniteCategory> {
    let spec: CategorySpec =
        serde_json::from_str(&read(path)?).with_context(|| format!("{}: invalid category file", path.display()))?;
    spec.build().with_context(|| format!("{}: invalid category", path.display()))
}

/// A class is either a keyword or an explicit list of morphism ids.
#[derive(Deserialize)]
#[serde(untagged)]
enum ClassSpec {
    Keyword(String),
    Members(Vec<String>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StructureFile {
    /// Path relative to the structure file, or an inline category.
    category: Value,
    cof: Option<ClassSpec>,
    fib: Option<ClassSpec>,
    weq: Option<ClassSpec>,
    #[serde(rename = "I")]
    gen_cof: Option<ClassSpec>,
    #[serde(rename = "J")]
    gen_acyclic_cof: Option<ClassSpec>,
    left: Option<ClassSpec>,
    right: Option<ClassSpec>,
}

/// What a structure file describes, decided by which fields are present.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Model,
    Generators,
    Wfs,
}

pub struct StructureInput {
    pub path: PathBuf,
    pub category: FiniteCategory,
    file: StructureFile,
}

impl StructureInput {
    pub fn load(path: &Path) -> Result<StructureInput> {
        let file: StructureFile = serde_json::from_str(&read(path)?)
            .with_context(|| format!("{}: invalid structure file", path.display()))?;
        let category = match &file.category {
            Value::String(rel) => {
                let base = path.parent().unwrap_or(Path::new(""));
                load_category(&base.join(rel))?
            }
            inline => {
                let spec = CategorySpec::deserialize(inline)
                    .with_context(|| format!("{}: field `category`", path.display()))?;
                spec.build()
                    .with_context(|| format!("{}: field `category`", path.display()))?
            }
        };
        Ok(StructureInput {
            path: path.to_path_buf(),
            category,
            file,
        })
    }

    pub fn shape(&self) -> Result<Shape> {
        let f = &self.file;
        let model = [&f.cof, &f.fib].iter().any(|c| c.is_some());
        let generators = [&f.gen_cof, &f.gen_acyclic_cof].iter().any(|c| c.is_some());
        let wfs = [&f.left, &f.right].iter().any(|c| c.is_some());
        match (model, generators, wfs) {
            (true, false, false) => Ok(Shape::Model),
            (false, true, false) => Ok(Shape::Generators),
            (false, false, true) if f.weq.is_none() => Ok(Shape::Wfs),
            _ => bail!(
                "{}: expected exactly one of cof/fib/weq, I/J/weq or left/right",
                self.path.display()
            ),
        }
    }

    fn class(&self, field: &str, spec: &Option<ClassSpec>) -> Result<MorphismClass> {
        let cat = &self.category;
        let ctx = || format!("{}: field `{field}`", self.path.display());
        match spec {
            None => bail!("{}: missing field `{field}`", self.path.display()),
            Some(ClassSpec::Members(names)) => cat.class_from_names(names).with_context(ctx),
            Some(ClassSpec::Keyword(k)) => match k.as_str() {
                "all" => Ok(cat.all()),
                "none" => Ok(cat.none()),
                "isos" => Ok(cat.isomorphisms()),
                "identities" => Ok(cat.identities()),
                other => Err(anyhow::anyhow!(
                    "unknown class keyword `{other}` (expected all, none, isos, identities or a list)"
                ))
                .with_context(ctx),
            },
        }
    }

    fn expect(&self, shape: Shape) -> Result<()> {
        let found = self.shape()?;
        if found != shape {
            let want = match shape {
                Shape::Model => "cof/fib/weq",
                Shape::Generators => "I/J/weq",
                Shape::Wfs => "left/right",
            };
            bail!("{}: this command needs fields {want}", self.path.display());
        }
        Ok(())
    }

    /// Unverified; callers run the axiom checker.
    pub fn structure(&self) -> Result<ModelStructure> {
        self.expect(Shape::Model)?;
        let f = &self.file;
        Ok(ModelStructure::new(
            self.class("cof", &f.cof)?,
            self.class("fib", &f.fib)?,
            self.class("weq", &f.weq)?,
        ))
    }

    pub fn generators(&self) -> Result<GeneratingData> {
        self.expect(Shape::Generators)?;
        let f = &self.file;
        Ok(GeneratingData {
            gen_cof: self.class("I", &f.gen_cof)?,
            gen_acyclic_cof: self.class("J", &f.gen_acyclic_cof)?,
            weq: self.class("weq", &f.weq)?,
        })
    }

    pub fn wfs(&self) -> Result<(MorphismClass, MorphismClass)> {
        self.expect(Shape::Wfs)?;
        Ok((self.class("left", &self.file.left)?, self.class("right", &self.file.right)?))
    }
}
