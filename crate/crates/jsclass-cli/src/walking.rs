//! Deterministic discovery of analyzable files under a root directory.

use std::io;
use std::path::{Path, PathBuf};

/// How files under the root are interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputMode {
    /// Only `*.js`, parsed natively.
    Js,
    /// Only `*.json`, ingested as ESTree documents.
    EstreeJson,
    /// Both: `*.js` parsed, `*.json` ingested. A file matched as `.json` is
    /// never also parsed as source.
    Auto,
}

/// What a discovered file holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    /// JavaScript source text.
    Js,
    /// ESTree JSON document.
    EstreeJson,
}

/// One file selected for analysis.
#[derive(Debug, Clone)]
pub struct InputFile {
    /// Path on disk.
    pub path: PathBuf,
    /// Root-relative path with forward slashes; the file's model identity.
    pub rel: String,
    /// Interpretation of the content.
    pub kind: InputKind,
}

/// Walk policy. Defaults skip `node_modules`, hidden directories, and files
/// over 5 MB, which keeps vendored bundles out of the metrics.
#[derive(Debug, Clone)]
pub struct WalkOptions {
    /// Skip directories named `node_modules`.
    pub skip_node_modules: bool,
    /// Skip directories whose name starts with `.`.
    pub skip_hidden_dirs: bool,
    /// Skip files larger than this many bytes.
    pub max_file_size: u64,
    /// Directory to exclude entirely (the artifact output directory, so a
    /// previous run's model.json is never ingested as input).
    pub exclude_dir: Option<PathBuf>,
}

impl Default for WalkOptions {
    fn default() -> Self {
        WalkOptions {
            skip_node_modules: true,
            skip_hidden_dirs: true,
            max_file_size: 5 * 1024 * 1024,
            exclude_dir: None,
        }
    }
}

/// Collects the analyzable files under `root` in ascending relative-path
/// order. The order is part of the tool's contract: detection resolves
/// duplicate candidate names by first occurrence in this order.
pub fn collect_inputs(
    root: &Path,
    mode: InputMode,
    opts: &WalkOptions,
) -> io::Result<Vec<InputFile>> {
    let excluded = opts
        .exclude_dir
        .as_ref()
        .and_then(|d| d.canonicalize().ok());
    let mut inputs = Vec::new();
    let walker = walkdir::WalkDir::new(root).into_iter().filter_entry(|e| {
        if e.file_type().is_dir() {
            let name = e.file_name().to_string_lossy();
            if opts.skip_node_modules && name == "node_modules" {
                return false;
            }
            // never hide the root itself, whatever its name
            if opts.skip_hidden_dirs && name.starts_with('.') && e.depth() > 0 {
                return false;
            }
            if let Some(ex) = &excluded {
                if e.path().canonicalize().ok().as_deref() == Some(ex) {
                    return false;
                }
            }
        }
        true
    });
    for entry in walker {
        let entry = entry.map_err(|e| {
            io::Error::new(
                e.io_error()
                    .map(io::Error::kind)
                    .unwrap_or(io::ErrorKind::Other),
                e.to_string(),
            )
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let kind = match entry.path().extension().and_then(|e| e.to_str()) {
            Some("js") if mode != InputMode::EstreeJson => InputKind::Js,
            Some("json") if mode != InputMode::Js => InputKind::EstreeJson,
            _ => continue,
        };
        if entry.metadata()?.len() > opts.max_file_size {
            log::info!("skipping oversized file {}", entry.path().display());
            continue;
        }
        let rel = entry
            .path()
            .strip_prefix(root)
            .unwrap_or(entry.path())
            .to_string_lossy()
            .replace('\\', "/");
        inputs.push(InputFile {
            path: entry.path().to_path_buf(),
            rel,
            kind,
        });
    }
    inputs.sort_by(|a, b| a.rel.cmp(&b.rel));
    Ok(inputs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn touch(path: &Path, content: &str) {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(path, content).unwrap();
    }

    #[test]
    fn auto_mode_finds_js_and_json_in_rel_order() {
        let dir = tempfile::tempdir().unwrap();
        touch(&dir.path().join("b.js"), "var b;");
        touch(&dir.path().join("a.js"), "var a;");
        touch(&dir.path().join("sub/c.json"), "{}");
        touch(&dir.path().join("d.txt"), "not code");
        let inputs = collect_inputs(dir.path(), InputMode::Auto, &WalkOptions::default()).unwrap();
        let rels: Vec<_> = inputs.iter().map(|i| i.rel.as_str()).collect();
        assert_eq!(rels, ["a.js", "b.js", "sub/c.json"]);
        assert_eq!(inputs[0].kind, InputKind::Js);
        assert_eq!(inputs[2].kind, InputKind::EstreeJson);
    }

    #[test]
    fn single_extension_modes_ignore_the_other_kind() {
        let dir = tempfile::tempdir().unwrap();
        touch(&dir.path().join("a.js"), "var a;");
        touch(&dir.path().join("b.json"), "{}");
        let opts = WalkOptions::default();
        let js = collect_inputs(dir.path(), InputMode::Js, &opts).unwrap();
        assert_eq!(js.len(), 1);
        assert_eq!(js[0].rel, "a.js");
        let json = collect_inputs(dir.path(), InputMode::EstreeJson, &opts).unwrap();
        assert_eq!(json.len(), 1);
        assert_eq!(json[0].rel, "b.json");
    }

    #[test]
    fn skips_node_modules_hidden_dirs_and_oversized_files() {
        let dir = tempfile::tempdir().unwrap();
        touch(&dir.path().join("keep.js"), "var k;");
        touch(&dir.path().join("node_modules/dep/index.js"), "var d;");
        touch(&dir.path().join(".git/hook.js"), "var h;");
        touch(&dir.path().join("big.js"), &"x".repeat(32));
        let opts = WalkOptions {
            max_file_size: 16,
            ..WalkOptions::default()
        };
        let inputs = collect_inputs(dir.path(), InputMode::Js, &opts).unwrap();
        let rels: Vec<_> = inputs.iter().map(|i| i.rel.as_str()).collect();
        assert_eq!(rels, ["keep.js"]);
    }

    #[test]
    fn hidden_root_is_still_walked() {
        let dir = tempfile::tempdir().unwrap();
        let root = dir.path().join(".hidden");
        touch(&root.join("a.js"), "var a;");
        let inputs = collect_inputs(&root, InputMode::Js, &WalkOptions::default()).unwrap();
        assert_eq!(inputs.len(), 1);
    }

    #[test]
    fn exclude_dir_keeps_prior_artifacts_out() {
        let dir = tempfile::tempdir().unwrap();
        touch(&dir.path().join("src/a.js"), "var a;");
        touch(&dir.path().join("out/model.json"), "{}");
        let opts = WalkOptions {
            exclude_dir: Some(dir.path().join("out")),
            ..WalkOptions::default()
        };
        let inputs = collect_inputs(dir.path(), InputMode::Auto, &opts).unwrap();
        let rels: Vec<_> = inputs.iter().map(|i| i.rel.as_str()).collect();
        assert_eq!(rels, ["src/a.js"]);
    }
}
