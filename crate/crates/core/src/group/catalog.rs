use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupRef};
use crate::error::{argument, validation, Error, Result};

/// Environment variable naming a directory of `<name>.toml` entries that
/// replaces the built-in catalog.
pub const CATALOG_DIR_ENV: &str = "STPERM_CATALOG_DIR";

const MAX_ORDER: usize = 4096;
const MAX_DEGREE: usize = 4096;
const MAX_TABLE_ORDER: usize = 512;
const MAX_GENERATORS: usize = 64;

macro_rules! entry {
    ($name:literal) => {
        (
            $name,
            include_str!(concat!("../../data/catalog/", $name, ".toml")),
        )
    };
}

const BUILTIN: &[(&str, &str)] = &[
    entry!("A4"),
    entry!("C1"),
    entry!("C2"),
    entry!("C2xC2xC2"),
    entry!("C2xC4"),
    entry!("C2xC8"),
    entry!("C2xQ8"),
    entry!("C3"),
    entry!("C3xC3"),
    entry!("C3xC9"),
    entry!("C4"),
    entry!("C4xC4"),
    entry!("C5"),
    entry!("C8"),
    entry!("C9"),
    entry!("C16"),
    entry!("C25"),
    entry!("C27"),
    entry!("C81"),
    entry!("C125"),
    entry!("C625"),
    entry!("D8"),
    entry!("D16"),
    entry!("D32"),
    entry!("He27"),
    entry!("M16"),
    entry!("Q8"),
    entry!("Q8_semidirect_F3sq"),
    entry!("Q16"),
    entry!("Q32"),
    entry!("S3"),
    entry!("S4"),
    entry!("SD16"),
    entry!("SL2F3"),
    entry!("V4"),
];

/// One catalog file: a name, the declared order, and either a full
/// multiplication table (rows) or permutation generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
}

pub fn parse_catalog_entry(text: &str) -> Result<CatalogEntry> {
    let entry: CatalogEntry = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    entry.validate()?;
    Ok(entry)
}

impl CatalogEntry {
    /// Shape and size checks that do not require building the group.
    pub fn validate(&self) -> Result<()> {
        if self.order == 0 || self.order > MAX_ORDER {
            return validation(format!(
                "declared order {} outside 1..={MAX_ORDER}",
                self.order
            ));
        }
        match (&self.generators, &self.table) {
            (Some(_), Some(_)) => validation("entry has both `generators` and `table`"),
            (None, None) => validation("entry needs `generators` or `table`"),
            (Some(gens), None) => {
                if gens.len() > MAX_GENERATORS {
                    return validation(format!("more than {MAX_GENERATORS} generators"));
                }
                if gens.iter().any(|g| g.len() > MAX_DEGREE) {
                    return validation(format!("permutation degree above {MAX_DEGREE}"));
                }
                match &self.generator_names {
                    Some(names) if names.len() != gens.len() => {
                        validation("`generator_names` and `generators` differ in length")
                    }
                    _ => Ok(()),
                }
            }
            (None, Some(table)) => {
                if table.len() != self.order {
                    return validation("table size differs from declared order");
                }
                if table.len() > MAX_TABLE_ORDER {
                    return validation(format!("tables are limited to order {MAX_TABLE_ORDER}"));
                }
                Ok(())
            }
        }
    }

    /// Builds and validates the group; the result must have the declared order.
    pub fn build(&self) -> Result<FiniteGroup> {
        let group = if let Some(table) = &self.table {
            FiniteGroup::from_table(table.clone())?
        } else {
            let gens = self.generators.as_deref().unwrap_or(&[]);
            let degree = gens.first().map_or(0, Vec::len);
            let (group, gen_index) =
                FiniteGroup::from_permutations_indexed(degree, gens, self.order + 1)?;
            if group.order() != self.order {
                return validation(format!(
                    "`{}` declares order {} but generates order {}",
                    self.name,
                    self.order,
                    group.order()
                ));
            }
            match &self.generator_names {
                Some(names) => {
                    let labels = word_labels(&group, &gen_index, names);
                    group.with_labels(labels)?
                }
                None => group,
            }
        };
        if group.order() != self.order {
            return validation(format!(
                "`{}` declares order {} but has order {}",
                self.name,
                self.order,
                group.order()
            ));
        }
        Ok(group.with_name(self.name.clone()))
    }
}

/// Shortest words in the generators (BFS, left multiplication), with runs
/// written as powers.
fn word_labels(group: &FiniteGroup, gen_index: &[usize], names: &[String]) -> Vec<String> {
    let n = group.order();
    let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
    words[0] = Some(Vec::new());
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (s, &g) in gen_index.iter().enumerate() {
            let y = group.mul(g, x);
            if words[y].is_none() {
                let mut w = vec![s];
                w.extend(words[x].as_ref().expect("visited"));
                words[y] = Some(w);
                queue.push(y);
            }
        }
        i += 1;
    }
    words
        .into_iter()
        .map(|w| render_word(&w.expect("generators generate"), names))
        .collect()
}

fn render_word(word: &[usize], names: &[String]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(&names[word[i]]);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

fn override_dir() -> Option<PathBuf> {
    std::env::var_os(CATALOG_DIR_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

fn read_dir_names(dir: &Path) -> Result<Vec<String>> {
    let rd = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut names = Vec::new();
    for item in rd {
        let path = item.map_err(|e| Error::Io(e.to_string()))?.path();
        if path.extension().is_some_and(|e| e == "toml") {
            if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                names.push(stem.to_string());
            }
        }
    }
    names.sort();
    Ok(names)
}

/// Names available in the active catalog (built-in unless overridden).
pub fn catalog_names() -> Result<Vec<String>> {
    match override_dir() {
        Some(dir) => read_dir_names(&dir),
        None => Ok(BUILTIN.iter().map(|(n, _)| n.to_string()).collect()),
    }
}

type Cache = Mutex<HashMap<(Option<PathBuf>, String), GroupRef>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Loads a catalog group by name. Built groups are cached per catalog source.
pub fn catalog(name: &str) -> Result<GroupRef> {
    let dir = override_dir();
    let key = (dir.clone(), name.to_string());
    if let Some(g) = cache().lock().expect("catalog cache poisoned").get(&key) {
        return Ok(g.clone());
    }
    let text = match &dir {
        Some(dir) => {
            if name.is_empty() || name.contains(['/', '\\']) || name.starts_with('.') {
                return argument(format!("unknown catalog group `{name}`"));
            }
            let path = dir.join(format!("{name}.toml"));
            if !path.is_file() {
                return argument(format!("unknown catalog group `{name}`"));
            }
            std::fs::read_to_string(&path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
        }
        None => match BUILTIN.iter().find(|(n, _)| *n == name) {
            Some((_, text)) => text.to_string(),
            None => return argument(format!("unknown catalog group `{name}`")),
        },
    };
    let entry = parse_catalog_entry(&text)?;
    if entry.name != name {
        return validation(format!("file for `{name}` declares name `{}`", entry.name));
    }
    let group = Arc::new(entry.build()?);
    cache()
        .lock()
        .expect("catalog cache poisoned")
        .insert(key, group.clone());
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_entry_builds() {
        for (name, _) in BUILTIN {
            let g = catalog(name).unwrap();
            assert_eq!(g.name(), Some(*name));
        }
    }

    #[test]
    fn required_examples() {
        let q8 = catalog("Q8").unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.center().order(), 2);
        assert_eq!(catalog("Q8_semidirect_F3sq").unwrap().order(), 72);
        assert_eq!(catalog("C1").unwrap().order(), 1);
    }

    #[test]
    fn unknown_name_is_an_argument_error() {
        assert!(matches!(catalog("NoSuchGroup"), Err(Error::Argument(_))));
    }

    #[test]
    fn labels_are_generator_words() {
        let q8 = catalog("Q8").unwrap();
        assert_eq!(q8.label(0), "1");
        let labels = q8.labels().unwrap();
        assert!(labels.contains(&"x".to_string()));
        assert!(labels.contains(&"x^2".to_string()));
    }

    #[test]
    fn malformed_entries_are_rejected() {
        assert!(matches!(
            parse_catalog_entry("name = 3"),
            Err(Error::Parse(_))
        ));
        let both = "name='a'\norder=1\ngenerators=[]\ntable=[[0]]";
        assert!(matches!(
            parse_catalog_entry(both),
            Err(Error::Validation(_))
        ));
        let neither = "name='a'\norder=1";
        assert!(matches!(
            parse_catalog_entry(neither),
            Err(Error::Validation(_))
        ));
        let wrong_order = "name='a'\norder=3\ngenerators=[[1,0]]";
        let e = parse_catalog_entry(wrong_order).unwrap();
        assert!(matches!(e.build(), Err(Error::Validation(_))));
        let not_perm = "name='a'\norder=2\ngenerators=[[0,0]]";
        assert!(parse_catalog_entry(not_perm).unwrap().build().is_err());
        let table = "name='c2'\norder=2\ntable=[[0,1],[1,0]]";
        assert_eq!(
            parse_catalog_entry(table).unwrap().build().unwrap().order(),
            2
        );
    }
}
