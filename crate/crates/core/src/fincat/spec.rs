//! Serialized category descriptions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{poset_category, validate_category, CategoryError, FiniteCategory};

/// A category file, tagged by `kind`.
///
/// ```json
/// {"kind": "poset", "elements": ["0", "1"], "leq": [["0", "1"]]}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", try_from = "CategoryFile")]
pub enum CategorySpec {
    Category(RawCategory),
    Poset(RawPoset),
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Category,
    Poset,
}

// Flat mirror of the file so that field errors keep their line numbers.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CategoryFile {
    kind: Kind,
    objects: Option<Vec<String>>,
    morphisms: Option<Vec<RawMorphism>>,
    identities: Option<BTreeMap<String, String>>,
    composition: Option<Vec<[String; 3]>>,
    elements: Option<Vec<String>>,
    leq: Option<Vec<[String; 2]>>,
}

impl TryFrom<CategoryFile> for CategorySpec {
    type Error = String;

    fn try_from(file: CategoryFile) -> Result<Self, String> {
        match file.kind {
            Kind::Category => {
                if file.elements.is_some() || file.leq.is_some() {
                    return Err("fields `elements`/`leq` belong to kind \"poset\"".into());
                }
                Ok(CategorySpec::Category(RawCategory {
                    objects: file.objects.ok_or("kind \"category\" requires field `objects`")?,
                    morphisms: file.morphisms.unwrap_or_default(),
                    identities: file.identities.unwrap_or_default(),
                    composition: file.composition.unwrap_or_default(),
                }))
            }
            Kind::Poset => {
                if file.objects.is_some()
                    || file.morphisms.is_some()
                    || file.identities.is_some()
                    || file.composition.is_some()
                {
                    return Err("kind \"poset\" takes only fields `elements` and `leq`".into());
                }
                Ok(CategorySpec::Poset(RawPoset {
                    elements: file.elements.ok_or("kind \"poset\" requires field `elements`")?,
                    leq: file.leq.unwrap_or_default(),
                }))
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawCategory {
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<RawMorphism>,
    /// Optional object -> identity morphism id. Objects not listed get
    /// `id_<object>`, which is inserted unless already present.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub identities: BTreeMap<String, String>,
    /// `[g, f, g∘f]` triples; composites with an identity may be omitted.
    #[serde(default)]
    pub composition: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMorphism {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawPoset {
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<[String; 2]>,
}

impl CategorySpec {
    pub fn build(&self) -> Result<FiniteCategory, CategoryError> {
        match self {
            CategorySpec::Category(raw) => validate_category(raw),
            CategorySpec::Poset(p) => {
                let pairs: Vec<(&str, &str)> =
                    p.leq.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
                let elements: Vec<&str> = p.elements.iter().map(String::as_str).collect();
                poset_category(&elements, &pairs)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_kinds() {
        let poset: CategorySpec =
            serde_json::from_str(r#"{"kind":"poset","elements":["0","1"],"leq":[["0","1"]]}"#)
                .unwrap();
        assert_eq!(poset.build().unwrap().num_morphisms(), 3);

        let cat: CategorySpec = serde_json::from_str(
            r#"{"kind":"category","objects":["x","y"],
                "morphisms":[{"id":"f","dom":"x","cod":"y"}],
                "composition":[]}"#,
        )
        .unwrap();
        assert_eq!(cat.build().unwrap().num_morphisms(), 3);
    }

    #[test]
    fn unknown_field_is_reported_with_position() {
        let err = serde_json::from_str::<CategorySpec>(
            "{\"kind\":\"poset\",\n\"elements\":[],\n\"lequ\":[]}",
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("lequ"), "{msg}");
        assert_eq!(err.line(), 3);
    }

    #[test]
    fn kind_mismatch_is_reported() {
        let err = serde_json::from_str::<CategorySpec>(r#"{"kind":"category","elements":["a"]}"#)
            .unwrap_err();
        assert!(err.to_string().contains("poset"), "{err}");
    }

    #[test]
    fn serializes_with_kind_tag() {
        let spec = CategorySpec::Poset(RawPoset {
            elements: vec!["x".into()],
            leq: vec![],
        });
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"kind":"poset","elements":["x"],"leq":[]}"#);
        assert_eq!(serde_json::from_str::<CategorySpec>(&text).unwrap(), spec);
    }
}
