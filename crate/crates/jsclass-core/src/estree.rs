//! Ingestion of ESTree-shaped JSON documents (the interchange format
//! emitted by Esprima and compatible parsers) into [`crate::ast`] trees.
//!
//! Ingestion is total over well-formed documents: node kinds in the
//! supported subset become typed nodes; everything else, including
//! supported kinds whose payload does not match the expected shape,
//! degrades to [`NodeKind::Opaque`] with all node-valued children still
//! ingested, so traversal always sees the whole tree. Opaque children are
//! ordered by source position when `loc` data is present (JSON object keys
//! carry no reliable order).

use crate::ast::{AstNode, LiteralValue, NodeKind, PropertyKind, SourceFile, SourceSpan};
use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use serde_json::{Map, Value};

/// Why a document could not be ingested at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EstreeError {
    /// The text is not valid JSON.
    BadJson(String),
    /// Valid JSON whose top-level `type` is not `"Program"`.
    NotAProgram,
}

impl EstreeError {
    /// Stable machine-readable code for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            EstreeError::BadJson(_) => "bad_json",
            EstreeError::NotAProgram => "not_a_program",
        }
    }
}

impl fmt::Display for EstreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EstreeError::BadJson(msg) => write!(f, "malformed JSON: {}", msg),
            EstreeError::NotAProgram => write!(f, "top-level `type` is not \"Program\""),
        }
    }
}

/// Ingestion counters for one document.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IngestStats {
    /// AstNodes created, opaque included.
    pub nodes_loaded: u64,
    /// Nodes that fell back to `Opaque` (unknown kind or shape mismatch).
    pub opaque_nodes: u64,
}

/// Parses one ESTree JSON document into a [`SourceFile`].
///
/// Line counts are approximated from `loc` extents (the greatest end line
/// seen anywhere in the tree) because the raw source is not available in
/// this mode; without `loc` data both counts are 0.
pub fn ingest_estree_json(
    document_text: &str,
    path: &str,
) -> Result<(SourceFile, IngestStats), EstreeError> {
    let value: Value =
        serde_json::from_str(document_text).map_err(|e| EstreeError::BadJson(e.to_string()))?;
    let is_program = value
        .get("type")
        .and_then(Value::as_str)
        .map(|t| t == "Program")
        .unwrap_or(false);
    if !is_program {
        return Err(EstreeError::NotAProgram);
    }
    let mut ingest = Ingest::default();
    let root = ingest.node(&value);
    let line_extent = ingest.max_end_line;
    Ok((
        SourceFile {
            path: path.to_owned(),
            raw_line_count: line_extent,
            loc: line_extent,
            root,
        },
        IngestStats {
            nodes_loaded: ingest.nodes_loaded,
            opaque_nodes: ingest.opaque_nodes,
        },
    ))
}

#[derive(Default)]
struct Ingest {
    nodes_loaded: u64,
    opaque_nodes: u64,
    max_end_line: u32,
}

fn span_of(map: &Map<String, Value>) -> SourceSpan {
    let Some(loc) = map.get("loc") else {
        return SourceSpan::UNKNOWN;
    };
    let part = |p: &str, k: &str| -> Option<u32> { loc.get(p)?.get(k)?.as_u64().map(|n| n as u32) };
    match (
        part("start", "line"),
        part("start", "column"),
        part("end", "line"),
        part("end", "column"),
    ) {
        (Some(sl), Some(sc), Some(el), Some(ec)) => SourceSpan::new(sl, sc, el, ec),
        _ => SourceSpan::UNKNOWN,
    }
}

fn is_node(value: &Value) -> bool {
    value
        .as_object()
        .map(|m| m.get("type").map(Value::is_string).unwrap_or(false))
        .unwrap_or(false)
}

impl Ingest {
    /// Ingests any node-shaped value; never fails (falls back to opaque).
    fn node(&mut self, value: &Value) -> AstNode {
        let map = value.as_object().expect("caller checked is_node");
        let span = span_of(map);
        if span.is_known() && span.end_line > self.max_end_line {
            self.max_end_line = span.end_line;
        }
        let estree_type = map
            .get("type")
            .and_then(Value::as_str)
            .expect("caller checked is_node")
            .to_owned();
        // A shape mismatch can surface after some children were already
        // ingested; roll the counters back so the opaque fallback (which
        // re-gathers all children) counts each node exactly once.
        let saved = (self.nodes_loaded, self.opaque_nodes, self.max_end_line);
        let kind = match self.typed(&estree_type, map) {
            Some(kind) => kind,
            None => {
                (self.nodes_loaded, self.opaque_nodes, self.max_end_line) = saved;
                self.opaque_nodes += 1;
                NodeKind::Opaque {
                    estree_type,
                    children: self.opaque_children(map),
                }
            }
        };
        self.nodes_loaded += 1;
        AstNode::new(kind, span)
    }

    fn child(&mut self, map: &Map<String, Value>, key: &str) -> Option<AstNode> {
        let v = map.get(key)?;
        if is_node(v) {
            Some(self.node(v))
        } else {
            None
        }
    }

    fn boxed_child(&mut self, map: &Map<String, Value>, key: &str) -> Option<Box<AstNode>> {
        self.child(map, key).map(Box::new)
    }

    /// Optional-node slot: missing/null is a valid `None`; any other
    /// non-node value is a shape mismatch (`Err`).
    fn optional_child(
        &mut self,
        map: &Map<String, Value>,
        key: &str,
    ) -> Result<Option<Box<AstNode>>, ()> {
        match map.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(v) if is_node(v) => Ok(Some(Box::new(self.node(v)))),
            Some(_) => Err(()),
        }
    }

    /// Array-of-nodes slot; `None` when the key is missing or not an array.
    /// Non-node elements are skipped (they are not nodes by the JSON-level
    /// counting rule).
    fn node_list(&mut self, map: &Map<String, Value>, key: &str) -> Option<Vec<AstNode>> {
        let arr = map.get(key)?.as_array()?;
        Some(
            arr.iter()
                .filter(|v| is_node(v))
                .map(|v| self.node(v))
                .collect(),
        )
    }

    /// Maps a supported `type` to a typed kind; `None` means fall back to
    /// opaque (unknown kind, or a payload shape this subset cannot hold).
    fn typed(&mut self, estree_type: &str, map: &Map<String, Value>) -> Option<NodeKind> {
        match estree_type {
            "Program" => Some(NodeKind::Program {
                body: self.node_list(map, "body")?,
            }),
            "FunctionDeclaration" => {
                let id = self.boxed_child(map, "id")?;
                let params = self.node_list(map, "params")?;
                let body = self.boxed_child(map, "body")?;
                Some(NodeKind::FunctionDeclaration { id, params, body })
            }
            "FunctionExpression" => {
                let id = self.optional_child(map, "id").ok()?;
                let params = self.node_list(map, "params")?;
                let body = self.boxed_child(map, "body")?;
                Some(NodeKind::FunctionExpression { id, params, body })
            }
            "VariableDeclaration" => Some(NodeKind::VariableDeclaration {
                declarations: self.node_list(map, "declarations")?,
            }),
            "VariableDeclarator" => {
                let id = self.boxed_child(map, "id")?;
                let init = self.optional_child(map, "init").ok()?;
                Some(NodeKind::VariableDeclarator { id, init })
            }
            "ExpressionStatement" => Some(NodeKind::ExpressionStatement {
                expression: self.boxed_child(map, "expression")?,
            }),
            "AssignmentExpression" => Some(NodeKind::AssignmentExpression {
                operator: map.get("operator")?.as_str()?.to_owned(),
                left: self.boxed_child(map, "left")?,
                right: self.boxed_child(map, "right")?,
            }),
            "MemberExpression" => Some(NodeKind::MemberExpression {
                object: self.boxed_child(map, "object")?,
                property: self.boxed_child(map, "property")?,
                computed: map
                    .get("computed")
                    .and_then(Value::as_bool)
                    .unwrap_or(false),
            }),
            "NewExpression" => Some(NodeKind::NewExpression {
                callee: self.boxed_child(map, "callee")?,
                arguments: self.node_list(map, "arguments").unwrap_or_default(),
            }),
            "CallExpression" => Some(NodeKind::CallExpression {
                callee: self.boxed_child(map, "callee")?,
                arguments: self.node_list(map, "arguments").unwrap_or_default(),
            }),
            "ThisExpression" => Some(NodeKind::ThisExpression),
            "Identifier" => Some(NodeKind::Identifier {
                name: map.get("name")?.as_str()?.to_owned(),
            }),
            "Literal" => {
                let raw = map
                    .get("raw")
                    .and_then(Value::as_str)
                    .unwrap_or_default()
                    .to_owned();
                let value = if let Some(re) = map.get("regex").and_then(Value::as_object) {
                    LiteralValue::Regex {
                        pattern: re.get("pattern")?.as_str()?.to_owned(),
                        flags: re.get("flags")?.as_str()?.to_owned(),
                    }
                } else {
                    match map.get("value") {
                        None | Some(Value::Null) => LiteralValue::Null,
                        Some(Value::Bool(b)) => LiteralValue::Boolean(*b),
                        Some(Value::Number(n)) => LiteralValue::Number(n.as_f64()?),
                        Some(Value::String(s)) => LiteralValue::Str(s.clone()),
                        Some(_) => return None,
                    }
                };
                Some(NodeKind::Literal { value, raw })
            }
            "ObjectExpression" => Some(NodeKind::ObjectExpression {
                properties: self.node_list(map, "properties")?,
            }),
            "Property" => {
                let kind = match map.get("kind").and_then(Value::as_str) {
                    None | Some("init") => PropertyKind::Init,
                    Some("get") => PropertyKind::Get,
                    Some("set") => PropertyKind::Set,
                    Some(_) => return None,
                };
                Some(NodeKind::Property {
                    key: self.boxed_child(map, "key")?,
                    value: self.boxed_child(map, "value")?,
                    kind,
                })
            }
            "ArrayExpression" => {
                let arr = map.get("elements")?.as_array()?;
                let elements = arr
                    .iter()
                    .map(|v| if is_node(v) { Some(self.node(v)) } else { None })
                    .collect();
                Some(NodeKind::ArrayExpression { elements })
            }
            "ReturnStatement" => Some(NodeKind::ReturnStatement {
                argument: self.optional_child(map, "argument").ok()?,
            }),
            "BlockStatement" => Some(NodeKind::BlockStatement {
                body: self.node_list(map, "body")?,
            }),
            "IfStatement" => Some(NodeKind::IfStatement {
                test: self.boxed_child(map, "test")?,
                consequent: self.boxed_child(map, "consequent")?,
                alternate: self.optional_child(map, "alternate").ok()?,
            }),
            "ForStatement" => Some(NodeKind::ForStatement {
                init: self.optional_child(map, "init").ok()?,
                test: self.optional_child(map, "test").ok()?,
                update: self.optional_child(map, "update").ok()?,
                body: self.boxed_child(map, "body")?,
            }),
            "WhileStatement" => Some(NodeKind::WhileStatement {
                test: self.boxed_child(map, "test")?,
                body: self.boxed_child(map, "body")?,
            }),
            "BinaryExpression" => Some(NodeKind::BinaryExpression {
                operator: map.get("operator")?.as_str()?.to_owned(),
                left: self.boxed_child(map, "left")?,
                right: self.boxed_child(map, "right")?,
            }),
            "LogicalExpression" => Some(NodeKind::LogicalExpression {
                operator: map.get("operator")?.as_str()?.to_owned(),
                left: self.boxed_child(map, "left")?,
                right: self.boxed_child(map, "right")?,
            }),
            "UnaryExpression" => Some(NodeKind::UnaryExpression {
                operator: map.get("operator")?.as_str()?.to_owned(),
                argument: self.boxed_child(map, "argument")?,
            }),
            "UpdateExpression" => Some(NodeKind::UpdateExpression {
                operator: map.get("operator")?.as_str()?.to_owned(),
                argument: self.boxed_child(map, "argument")?,
                prefix: map.get("prefix").and_then(Value::as_bool).unwrap_or(true),
            }),
            "ConditionalExpression" => Some(NodeKind::ConditionalExpression {
                test: self.boxed_child(map, "test")?,
                consequent: self.boxed_child(map, "consequent")?,
                alternate: self.boxed_child(map, "alternate")?,
            }),
            "SequenceExpression" => Some(NodeKind::SequenceExpression {
                expressions: self.node_list(map, "expressions")?,
            }),
            "EmptyStatement" => Some(NodeKind::EmptyStatement),
            _ => None,
        }
    }

    /// Gathers every node-valued entry (directly or inside arrays) for an
    /// opaque node, ordered by source position where known.
    fn opaque_children(&mut self, map: &Map<String, Value>) -> Vec<AstNode> {
        let mut children = Vec::new();
        for (key, v) in map {
            if key == "type" || key == "loc" || key == "range" {
                continue;
            }
            if is_node(v) {
                children.push(self.node(v));
            } else if let Some(arr) = v.as_array() {
                for item in arr {
                    if is_node(item) {
                        children.push(self.node(item));
                    }
                }
            }
        }
        children.sort_by_key(|n| (n.span.start_line, n.span.start_col));
        children
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::walk;

    /// Independent JSON-level node count: objects holding a string `type`.
    fn json_node_count(value: &Value) -> u64 {
        let mut count = 0;
        match value {
            Value::Object(map) => {
                if map.get("type").map(Value::is_string).unwrap_or(false) {
                    count += 1;
                }
                for v in map.values() {
                    count += json_node_count(v);
                }
            }
            Value::Array(arr) => {
                for v in arr {
                    count += json_node_count(v);
                }
            }
            _ => {}
        }
        count
    }

    #[test]
    fn minimal_program() {
        let (file, stats) =
            ingest_estree_json(r#"{"type":"Program","body":[]}"#, "a.json").expect("ingests");
        assert!(matches!(&file.root.kind, NodeKind::Program { body } if body.is_empty()));
        assert_eq!(stats.nodes_loaded, 1);
        assert_eq!(stats.opaque_nodes, 0);
    }

    #[test]
    fn unsupported_kind_becomes_opaque() {
        let (file, stats) = ingest_estree_json(
            r#"{"type":"Program","body":[{"type":"DebuggerStatement"}]}"#,
            "a.json",
        )
        .expect("ingests");
        let NodeKind::Program { body } = &file.root.kind else {
            panic!("not a program")
        };
        assert_eq!(body.len(), 1);
        assert!(
            matches!(&body[0].kind, NodeKind::Opaque { estree_type, .. } if estree_type == "DebuggerStatement")
        );
        assert_eq!(stats.opaque_nodes, 1);
    }

    #[test]
    fn malformed_json_is_bad_json() {
        let err = ingest_estree_json("{not json", "a.json").expect_err("must fail");
        assert!(matches!(err, EstreeError::BadJson(_)));
        assert_eq!(err.code(), "bad_json");
    }

    #[test]
    fn non_program_root_is_rejected() {
        let err = ingest_estree_json(r#"{"type":"ExpressionStatement"}"#, "a.json")
            .expect_err("must fail");
        assert_eq!(err, EstreeError::NotAProgram);
        assert_eq!(err.code(), "not_a_program");
        let err = ingest_estree_json("42", "a.json").expect_err("must fail");
        assert_eq!(err, EstreeError::NotAProgram);
    }

    #[test]
    fn unknown_id_kind_stays_typed_with_opaque_child() {
        // VariableDeclarator with a destructuring pattern id: the pattern is
        // not in the subset, but the declarator shape is fine, so it stays
        // typed with an opaque id and the init child remains reachable.
        let doc = r#"{"type":"Program","body":[{"type":"VariableDeclaration","declarations":[
            {"type":"VariableDeclarator",
             "id":{"type":"ObjectPattern","properties":[]},
             "init":{"type":"Identifier","name":"src"}}],"kind":"var"}]}"#;
        let (file, stats) = ingest_estree_json(doc, "a.json").expect("ingests");
        let mut idents = Vec::new();
        let mut opaque_types = Vec::new();
        let mut declarators = 0;
        walk(&file.root, &mut |n, _| match &n.kind {
            NodeKind::Identifier { name } => idents.push(name.clone()),
            NodeKind::Opaque { estree_type, .. } => opaque_types.push(estree_type.clone()),
            NodeKind::VariableDeclarator { .. } => declarators += 1,
            _ => {}
        });
        assert_eq!(idents, alloc::vec!["src".to_string()]);
        assert_eq!(declarators, 1);
        assert_eq!(opaque_types, alloc::vec!["ObjectPattern".to_string()]);
        assert_eq!(stats.opaque_nodes, 1);
    }

    #[test]
    fn shape_mismatch_degrades_to_opaque_keeping_children() {
        // VariableDeclarator whose id slot is not a node at all: the typed
        // shape cannot hold it, so the declarator falls back to opaque while
        // its node-valued children remain reachable.
        let doc = r#"{"type":"Program","body":[{"type":"VariableDeclaration","declarations":[
            {"type":"VariableDeclarator",
             "id":"broken",
             "init":{"type":"Identifier","name":"src"}}],"kind":"var"}]}"#;
        let (file, stats) = ingest_estree_json(doc, "a.json").expect("ingests");
        let mut idents = Vec::new();
        let mut opaque_types = Vec::new();
        walk(&file.root, &mut |n, _| match &n.kind {
            NodeKind::Identifier { name } => idents.push(name.clone()),
            NodeKind::Opaque { estree_type, .. } => opaque_types.push(estree_type.clone()),
            _ => {}
        });
        assert_eq!(idents, alloc::vec!["src".to_string()]);
        assert_eq!(opaque_types, alloc::vec!["VariableDeclarator".to_string()]);
        assert_eq!(stats.opaque_nodes, 1);
    }

    #[test]
    fn loc_populates_spans_and_line_extent() {
        let doc = r#"{"type":"Program","body":[
            {"type":"EmptyStatement","loc":{"start":{"line":3,"column":0},"end":{"line":3,"column":1}}}
        ]}"#;
        let (file, _) = ingest_estree_json(doc, "a.json").expect("ingests");
        let NodeKind::Program { body } = &file.root.kind else {
            panic!("not a program")
        };
        assert_eq!(body[0].span, SourceSpan::new(3, 0, 3, 1));
        assert_eq!(file.raw_line_count, 3);
        assert_eq!(file.loc, 3);
    }

    #[test]
    fn missing_loc_means_unknown_span() {
        let (file, _) = ingest_estree_json(
            r#"{"type":"Program","body":[{"type":"EmptyStatement"}]}"#,
            "a.json",
        )
        .expect("ingests");
        let NodeKind::Program { body } = &file.root.kind else {
            panic!("not a program")
        };
        assert!(!body[0].span.is_known());
        assert_eq!(file.raw_line_count, 0);
    }

    #[test]
    fn listing_fixture_counts() {
        let text = include_str!("../../../fixtures/listings/listing1.json");
        let (file, stats) = ingest_estree_json(text, "listing1.json").expect("ingests");
        let mut function_names = Vec::new();
        let mut new_count = 0;
        let mut object_create_calls = 0;
        walk(&file.root, &mut |n, _| match &n.kind {
            NodeKind::FunctionDeclaration { id, .. } => {
                function_names.push(id.identifier_name().unwrap_or("").to_owned())
            }
            NodeKind::NewExpression { .. } => new_count += 1,
            NodeKind::CallExpression { callee, .. } => {
                if let NodeKind::MemberExpression {
                    object, property, ..
                } = &callee.kind
                {
                    if object.identifier_name() == Some("Object")
                        && property.identifier_name() == Some("create")
                    {
                        object_create_calls += 1;
                    }
                }
            }
            _ => {}
        });
        assert_eq!(
            function_names,
            alloc::vec!["Mammal".to_string(), "Cat".to_string()]
        );
        assert_eq!(new_count, 2);
        assert_eq!(object_create_calls, 1);
        // Every JSON node maps to exactly one AstNode.
        let value: Value = serde_json::from_str(text).expect("valid json");
        assert_eq!(file.root.node_count(), json_node_count(&value));
        assert_eq!(stats.nodes_loaded, json_node_count(&value));
    }

    #[test]
    fn ingest_is_deterministic() {
        let text = include_str!("../../../fixtures/listings/listing1.json");
        let (a, _) = ingest_estree_json(text, "x.json").expect("ingests");
        let (b, _) = ingest_estree_json(text, "x.json").expect("ingests");
        assert_eq!(a, b);
    }

    #[test]
    fn parser_and_ingest_agree_on_listing() {
        let src = include_str!("../../../fixtures/listings/listing1.js");
        let json = include_str!("../../../fixtures/listings/listing1.json");
        let (parsed, diags) = crate::parser::parse_source(src, "listing1.js").expect("parses");
        assert!(diags.is_empty());
        let (ingested, _) = ingest_estree_json(json, "listing1.json").expect("ingests");
        assert!(
            crate::ast::structural_eq(&parsed.root, &ingested.root),
            "parser and ingest trees differ"
        );
    }

    #[test]
    fn parser_and_ingest_agree_on_conformance_fixtures() {
        let dir =
            std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/conformance");
        let mut names: Vec<_> = std::fs::read_dir(&dir)
            .expect("fixture dir")
            .map(|e| e.expect("entry").path())
            .filter(|p| p.extension().is_some_and(|e| e == "js"))
            .collect();
        names.sort();
        assert!(
            names.len() >= 50,
            "expected >= 50 fixtures, got {}",
            names.len()
        );
        let mut failures = Vec::new();
        for js_path in &names {
            let json_path = js_path.with_extension("json");
            let src = std::fs::read_to_string(js_path).expect("read js");
            let json = std::fs::read_to_string(&json_path).expect("read json");
            let stem = js_path.file_name().unwrap().to_string_lossy().into_owned();
            let (parsed, _) = match crate::parser::parse_source(&src, &stem) {
                Ok(p) => p,
                Err(e) => {
                    failures.push(alloc::format!("{}: parse failed: {}", stem, e));
                    continue;
                }
            };
            let (ingested, stats) = ingest_estree_json(&json, &stem).expect("ingests");
            let value: Value = serde_json::from_str(&json).expect("valid json");
            if stats.nodes_loaded != json_node_count(&value) {
                failures.push(alloc::format!(
                    "{}: ingest count {} != json count {}",
                    stem,
                    stats.nodes_loaded,
                    json_node_count(&value)
                ));
            }
            if !crate::ast::structural_eq(&parsed.root, &ingested.root) {
                failures.push(alloc::format!("{}: trees differ", stem));
            }
        }
        assert!(failures.is_empty(), "{}", failures.join("\n"));
    }
}
