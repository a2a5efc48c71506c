//! Input resolution. A file argument names a file on disk; failing that it
//! names a bundled data file, with or without the `.json` suffix.

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

pub const BUNDLED: &[(&str, &str)] = &[
    ("amalgam-reduced.json", include_str!("../data/amalgam-reduced.json")),
    ("amalgam.json", include_str!("../data/amalgam.json")),
    ("constants.json", include_str!("../data/constants.json")),
    ("delta_L.json", include_str!("../data/delta_L.json")),
    ("goldens.json", include_str!("../data/goldens.json")),
    ("map-free-abelian.json", include_str!("../data/map-free-abelian.json")),
    (
        "map-infinite-cyclic.json",
        include_str!("../data/map-infinite-cyclic.json"),
    ),
    ("matrix-n-final.json", include_str!("../data/matrix-n-final.json")),
    ("n-final.json", include_str!("../data/n-final.json")),
    ("nb-faces.json", include_str!("../data/nb-faces.json")),
    ("nb.json", include_str!("../data/nb.json")),
    ("rst.json", include_str!("../data/rst.json")),
];

/// File contents with the name they were requested under and their digest.
#[derive(Clone, Debug)]
pub struct Input {
    pub name: String,
    pub sha256: String,
    pub text: String,
}

impl Input {
    pub fn new(name: impl Into<String>, text: String) -> Self {
        let sha256 = hex::encode(Sha256::digest(text.as_bytes()));
        Self {
            name: name.into(),
            sha256,
            text,
        }
    }
}

fn bundled_key(name: &str) -> String {
    if name.ends_with(".json") {
        name.to_string()
    } else {
        format!("{name}.json")
    }
}

pub fn bundled_names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}

/// Resolves file arguments. `base_dir` anchors relative paths (job files);
/// `data_dir` replaces the embedded copies of bundled files.
#[derive(Clone, Debug, Default)]
pub struct Loader {
    pub data_dir: Option<PathBuf>,
    pub base_dir: Option<PathBuf>,
}

impl Loader {
    pub fn new(data_dir: Option<PathBuf>) -> Self {
        Self {
            data_dir,
            base_dir: None,
        }
    }

    pub fn relative_to(&self, dir: &Path) -> Self {
        Self {
            data_dir: self.data_dir.clone(),
            base_dir: Some(dir.to_path_buf()),
        }
    }

    fn read_path(path: &Path, name: &str) -> Result<Input> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Ok(Input::new(name, text))
    }

    pub fn load(&self, arg: &str) -> Result<Input> {
        let path = match &self.base_dir {
            Some(dir) => dir.join(arg),
            None => PathBuf::from(arg),
        };
        if path.is_file() {
            return Self::read_path(&path, arg);
        }
        self.bundled(arg)
            .map_err(|_| CliError::input(format!("{arg}: no such file and no bundled data file of that name")))
    }

    pub fn bundled(&self, name: &str) -> Result<Input> {
        let key = bundled_key(name);
        let Some((_, text)) = BUNDLED.iter().find(|(n, _)| *n == key) else {
            return Err(CliError::input(format!("{name}: not a bundled data file")));
        };
        match &self.data_dir {
            Some(dir) => Self::read_path(&dir.join(&key), &key),
            None => Ok(Input::new(key, text.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_lookup() {
        let l = Loader::default();
        let a = l.load("n-final").unwrap();
        let b = l.load("n-final.json").unwrap();
        assert_eq!(a.name, "n-final.json");
        assert_eq!(a.sha256, b.sha256);
        assert_eq!(a.sha256.len(), 64);
        assert!(l.load("no-such-thing").is_err());
    }

    #[test]
    fn bundled_files_are_valid_json() {
        for (name, text) in BUNDLED {
            let v: serde_json::Value = serde_json::from_str(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(v.get("note").is_some(), "{name} has no note");
        }
    }
}
