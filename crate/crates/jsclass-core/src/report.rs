//! Report artifacts: canonical model JSON, UML class diagram (DOT),
//! distribution map (SVG), and metrics tables (CSV/text).
//!
//! Every emitter consumes the same canonical [`ModelDoc`], built once from
//! a detected model plus its metrics. Regenerating a report from a stored
//! `model.json` therefore produces byte-identical output to the original
//! analysis run: the document is the single source of truth, and all
//! emitters are deterministic pure functions of it.

use crate::detect::OOModel;
use crate::diag::Diagnostic;
use crate::metrics::MetricsReport;
use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use serde::{Deserialize, Serialize};

/// Schema version emitted by and accepted from model JSON documents.
pub const SCHEMA_VERSION: u32 = 1;

/// One member entry in a class document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberDoc {
    /// Member name.
    pub name: String,
    /// Introducing pattern (`this_assignment`, `prototype_assignment`,
    /// `prototype_literal`, or `static_assignment`).
    pub origin: String,
}

/// One class with members, links, and metric values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassDoc {
    /// Class name.
    pub name: String,
    /// Defining file path (the package).
    pub package: String,
    /// Attributes, name-sorted.
    pub attributes: Vec<MemberDoc>,
    /// Methods, name-sorted.
    pub methods: Vec<MemberDoc>,
    /// Superclass name, if any.
    pub superclass: Option<String>,
    /// Direct subclass names, sorted.
    pub subclasses: Vec<String>,
    /// Number of methods.
    pub nom: u32,
    /// Number of attributes.
    pub noa: u32,
    /// Number of direct subclasses.
    pub children: u32,
    /// Depth of inheritance tree (root = 0).
    pub dit: u32,
}

/// One inheritance edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    /// Subclass name.
    pub subclass: String,
    /// Superclass name.
    pub superclass: String,
    /// Matched source pattern (`prototype_new` or
    /// `prototype_object_create`).
    pub pattern: String,
}

/// One package (source file) with its classes and line counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackageDoc {
    /// File path relative to the analysis root.
    pub path: String,
    /// Names of classes defined here, sorted.
    pub classes: Vec<String>,
    /// Lines with code content.
    pub loc: u32,
    /// Physical lines.
    pub raw_line_count: u32,
}

/// One diagnostic in exportable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticDoc {
    /// `info`, `warning`, or `error`.
    pub severity: String,
    /// Machine-readable code.
    pub code: String,
    /// Human-readable message.
    pub message: String,
    /// Source file, when known.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub file: Option<String>,
    /// 1-based start line, when known.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub line: Option<u32>,
    /// 0-based start column, when known.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub col: Option<u32>,
}

/// The canonical analysis document: everything reports need, in
/// deterministic order (classes name-sorted, members name-sorted, edges
/// sorted by (subclass, superclass), packages path-sorted).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelDoc {
    /// Always [`SCHEMA_VERSION`] when emitted by this library.
    pub schema_version: u32,
    /// Optional analysis name (e.g. the root directory).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    /// Number of classes.
    pub noc: u32,
    /// Sum of per-class NOM.
    pub total_methods: u64,
    /// Sum of per-class NOA.
    pub total_attributes: u64,
    /// Sum of per-file LOC (code lines).
    pub total_loc: u64,
    /// Sum of per-file physical lines.
    pub total_raw_lines: u64,
    /// Classes, name-sorted.
    pub classes: Vec<ClassDoc>,
    /// Inheritance edges, sorted by (subclass, superclass).
    pub edges: Vec<EdgeDoc>,
    /// Packages (files), path-sorted.
    pub packages: Vec<PackageDoc>,
    /// Diagnostics in detection order.
    pub diagnostics: Vec<DiagnosticDoc>,
}

fn diagnostic_doc(d: &Diagnostic) -> DiagnosticDoc {
    let span = d.span.filter(|s| s.is_known());
    DiagnosticDoc {
        severity: d.severity.as_str().to_owned(),
        code: d.code.as_str().to_owned(),
        message: d.message.clone(),
        file: d.file.clone(),
        line: span.map(|s| s.start_line),
        col: span.map(|s| s.start_col),
    }
}

/// Builds the canonical document from a model and its metrics.
pub fn build_doc(model: &OOModel, metrics: &MetricsReport, name: Option<&str>) -> ModelDoc {
    let dit_by_name: alloc::collections::BTreeMap<&str, (u32, u32)> = metrics
        .per_class
        .iter()
        .map(|c| (c.class_name.as_str(), (c.dit, c.children_count)))
        .collect();
    let classes = model
        .classes
        .values()
        .map(|class| {
            let (dit, children) = dit_by_name
                .get(class.name.as_str())
                .copied()
                .unwrap_or((0, class.children.len() as u32));
            ClassDoc {
                name: class.name.clone(),
                package: class.file.clone(),
                attributes: class
                    .attributes
                    .values()
                    .map(|m| MemberDoc {
                        name: m.name.clone(),
                        origin: m.origin.as_str().to_owned(),
                    })
                    .collect(),
                methods: class
                    .methods
                    .values()
                    .map(|m| MemberDoc {
                        name: m.name.clone(),
                        origin: m.origin.as_str().to_owned(),
                    })
                    .collect(),
                superclass: class.superclass.clone(),
                subclasses: class.children.clone(),
                nom: class.methods.len() as u32,
                noa: class.attributes.len() as u32,
                children,
                dit,
            }
        })
        .collect();
    let edges = model
        .edges
        .iter()
        .map(|e| EdgeDoc {
            subclass: e.subclass.clone(),
            superclass: e.superclass.clone(),
            pattern: e.pattern.as_str().to_owned(),
        })
        .collect();
    let packages = model
        .packages
        .iter()
        .map(|(path, classes)| PackageDoc {
            path: path.clone(),
            classes: classes.clone(),
            loc: metrics.per_package.get(path).map(|p| p.loc).unwrap_or(0),
            raw_line_count: metrics
                .per_package
                .get(path)
                .map(|p| p.raw_line_count)
                .unwrap_or(0),
        })
        .collect();
    ModelDoc {
        schema_version: SCHEMA_VERSION,
        name: name.map(ToOwned::to_owned),
        noc: metrics.noc,
        total_methods: metrics.total_methods,
        total_attributes: metrics.total_attributes,
        total_loc: metrics.total_loc,
        total_raw_lines: metrics.total_raw_lines,
        classes,
        edges,
        packages,
        diagnostics: model.diagnostics.iter().map(diagnostic_doc).collect(),
    }
}

/// Why a stored model document was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelJsonError {
    /// Not valid JSON, or not the expected document shape.
    Parse(String),
    /// Valid document with an unsupported `schema_version`.
    SchemaVersion(u64),
}

impl fmt::Display for ModelJsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelJsonError::Parse(msg) => write!(f, "invalid model document: {}", msg),
            ModelJsonError::SchemaVersion(v) => write!(
                f,
                "unsupported model schema_version {} (expected {})",
                v, SCHEMA_VERSION
            ),
        }
    }
}

/// Serializes the canonical document; byte-identical for equal documents.
pub fn emit_model_json(doc: &ModelDoc) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("ModelDoc serializes");
    text.push('\n');
    text
}

/// Parses a stored model document, checking the schema version first so a
/// future-versioned document fails with a version error, not a shape error.
pub fn parse_model_json(text: &str) -> Result<ModelDoc, ModelJsonError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| ModelJsonError::Parse(e.to_string()))?;
    match value
        .get("schema_version")
        .and_then(serde_json::Value::as_u64)
    {
        Some(v) if v == u64::from(SCHEMA_VERSION) => {}
        Some(v) => return Err(ModelJsonError::SchemaVersion(v)),
        None => return Err(ModelJsonError::Parse("missing schema_version".to_string())),
    }
    serde_json::from_value(value).map_err(|e| ModelJsonError::Parse(e.to_string()))
}

/// Escapes one field of a DOT record label.
fn dot_escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        if matches!(c, '\\' | '"' | '{' | '}' | '|' | '<' | '>' | ' ') {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

/// Emits a UML class diagram as a DOT digraph: one record node per class
/// with name / attributes / methods compartments (members name-sorted,
/// methods shown with `()`), and one child→parent edge per inheritance
/// relation with an empty-triangle arrowhead.
pub fn emit_uml_dot(doc: &ModelDoc) -> String {
    let mut out = String::new();
    out.push_str("digraph classes {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=record, fontname=\"Helvetica\", fontsize=10];\n");
    out.push_str("  edge [arrowhead=empty];\n");
    for class in &doc.classes {
        let attributes = class
            .attributes
            .iter()
            .map(|m| format!("{}\\l", dot_escape(&m.name)))
            .collect::<Vec<_>>()
            .join("");
        let methods = class
            .methods
            .iter()
            .map(|m| format!("{}()\\l", dot_escape(&m.name)))
            .collect::<Vec<_>>()
            .join("");
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{{{}|{}|{}}}\"];",
            class.name.replace('\\', "\\\\").replace('"', "\\\""),
            dot_escape(&class.name),
            attributes,
            methods
        );
    }
    for edge in &doc.edges {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\";",
            edge.subclass.replace('\\', "\\\\").replace('"', "\\\""),
            edge.superclass.replace('\\', "\\\\").replace('"', "\\\"")
        );
    }
    out.push_str("}\n");
    out
}

/// Distribution-map rendering parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistMapSpec {
    /// Metric to visualize: `nom`, `noa`, `children`, or `dit`.
    pub metric: String,
    /// Lowest highlighted value (unbounded when absent).
    pub min: Option<u32>,
    /// Highest highlighted value (unbounded when absent).
    pub max: Option<u32>,
    /// Fill for classes inside `[min, max]`.
    pub highlight_color: String,
    /// Fill for all other classes.
    pub base_color: String,
    /// Squares per row inside a package rectangle.
    pub columns: u32,
}

impl Default for DistMapSpec {
    fn default() -> Self {
        DistMapSpec {
            metric: "nom".to_string(),
            min: None,
            max: None,
            highlight_color: "blue".to_string(),
            base_color: "gray".to_string(),
            columns: 8,
        }
    }
}

/// Why a report could not be produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportError {
    /// Distribution-map metric name outside {nom, noa, children, dit}.
    BadMetric(String),
}

impl fmt::Display for ReportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportError::BadMetric(name) => write!(
                f,
                "unknown distribution-map metric '{}' (expected nom, noa, children, or dit)",
                name
            ),
        }
    }
}

fn xml_escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

fn metric_value(class: &ClassDoc, metric: &str) -> Option<u32> {
    match metric {
        "nom" => Some(class.nom),
        "noa" => Some(class.noa),
        "children" => Some(class.children),
        "dit" => Some(class.dit),
        _ => None,
    }
}

/// Emits a distribution map as standalone SVG: one labeled rectangle per
/// package holding classes (packages without classes are not drawn), one
/// small square per class on a fixed grid, highlighted when the chosen
/// metric value v satisfies min ≤ v ≤ max (missing bound = unbounded).
/// Tooltips carry the class name and metric value. Packages are ordered by
/// path, classes by name.
pub fn emit_distribution_map(doc: &ModelDoc, spec: &DistMapSpec) -> Result<String, ReportError> {
    if !matches!(spec.metric.as_str(), "nom" | "noa" | "children" | "dit") {
        return Err(ReportError::BadMetric(spec.metric.clone()));
    }
    let columns = spec.columns.max(1);

    const CELL: u32 = 14;
    const GAP: u32 = 4;
    const PAD: u32 = 8;
    const LABEL_H: u32 = 16;
    const MARGIN: u32 = 10;
    const SPACING: u32 = 10;

    struct PackageBox<'a> {
        path: &'a str,
        classes: Vec<&'a ClassDoc>,
        width: u32,
        height: u32,
    }

    let by_name: alloc::collections::BTreeMap<&str, &ClassDoc> =
        doc.classes.iter().map(|c| (c.name.as_str(), c)).collect();
    let mut boxes: Vec<PackageBox<'_>> = Vec::new();
    for package in &doc.packages {
        if package.classes.is_empty() {
            continue;
        }
        let classes: Vec<&ClassDoc> = package
            .classes
            .iter()
            .filter_map(|name| by_name.get(name.as_str()).copied())
            .collect();
        let n = classes.len() as u32;
        let cols_used = n.min(columns);
        let rows = n.div_ceil(columns);
        let width = PAD * 2 + cols_used * CELL + cols_used.saturating_sub(1) * GAP;
        let height = PAD * 2 + LABEL_H + rows * CELL + rows.saturating_sub(1) * GAP;
        boxes.push(PackageBox {
            path: &package.path,
            classes,
            width,
            height,
        });
    }

    let content_width = boxes.iter().map(|b| b.width).max().unwrap_or(0);
    let total_height: u32 = boxes.iter().map(|b| b.height).sum::<u32>()
        + SPACING * (boxes.len() as u32).saturating_sub(1);
    let svg_width = content_width + MARGIN * 2;
    let svg_height = total_height + MARGIN * 2;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        svg_width, svg_height, svg_width, svg_height
    );
    let mut y = MARGIN;
    for package_box in &boxes {
        let _ = writeln!(
            out,
            "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>",
            MARGIN, y, package_box.width, package_box.height
        );
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-family=\"Helvetica\" font-size=\"10\">{}</text>",
            MARGIN + PAD,
            y + PAD + 9,
            xml_escape(package_box.path)
        );
        for (i, class) in package_box.classes.iter().enumerate() {
            let col = (i as u32) % columns;
            let row = (i as u32) / columns;
            let x = MARGIN + PAD + col * (CELL + GAP);
            let square_y = y + PAD + LABEL_H + row * (CELL + GAP);
            let value = metric_value(class, &spec.metric).expect("metric validated above");
            let in_range =
                spec.min.is_none_or(|m| value >= m) && spec.max.is_none_or(|m| value <= m);
            let fill = if in_range {
                &spec.highlight_color
            } else {
                &spec.base_color
            };
            let _ = writeln!(
                out,
                "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"black\"><title>{} {}={}</title></rect>",
                x,
                square_y,
                CELL,
                CELL,
                xml_escape(fill),
                xml_escape(&class.name),
                xml_escape(&spec.metric),
                value
            );
        }
        y += package_box.height + SPACING;
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Output format of the metrics table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    /// Aligned human-readable table.
    Text,
    /// RFC-4180-style CSV.
    Csv,
}

fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_owned()
    }
}

/// Emits the metrics table: columns class,package,nom,noa,children,dit;
/// one name-sorted row per class and a final SYSTEM row carrying NOC (in
/// the package column, with file/line totals) and column totals.
pub fn emit_metrics_table(doc: &ModelDoc, format: TableFormat) -> String {
    let system_package = format!(
        "noc={};files={};loc={};raw={}",
        doc.noc,
        doc.packages.len(),
        doc.total_loc,
        doc.total_raw_lines
    );
    let total_children: u64 = doc.classes.iter().map(|c| u64::from(c.children)).sum();
    let mut rows: Vec<[String; 6]> = doc
        .classes
        .iter()
        .map(|c| {
            [
                c.name.clone(),
                c.package.clone(),
                c.nom.to_string(),
                c.noa.to_string(),
                c.children.to_string(),
                c.dit.to_string(),
            ]
        })
        .collect();
    rows.push([
        "SYSTEM".to_string(),
        system_package,
        doc.total_methods.to_string(),
        doc.total_attributes.to_string(),
        total_children.to_string(),
        String::new(),
    ]);

    let header = ["class", "package", "nom", "noa", "children", "dit"];
    match format {
        TableFormat::Csv => {
            let mut out = String::new();
            out.push_str(&header.join(","));
            out.push('\n');
            for row in &rows {
                let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                out.push_str(&fields.join(","));
                out.push('\n');
            }
            out
        }
        TableFormat::Text => {
            let mut widths: [usize; 6] = header.map(str::len);
            for row in &rows {
                for (w, field) in widths.iter_mut().zip(row.iter()) {
                    *w = (*w).max(field.len());
                }
            }
            let mut out = String::new();
            let write_row = |out: &mut String, cells: [&str; 6]| {
                for (i, (cell, width)) in cells.iter().zip(widths.iter()).enumerate() {
                    if i > 0 {
                        out.push_str("  ");
                    }
                    if i < 2 {
                        // name/package left-aligned, numbers right-aligned
                        let _ = write!(out, "{:<width$}", cell, width = width);
                    } else {
                        let _ = write!(out, "{:>width$}", cell, width = width);
                    }
                }
                while out.ends_with(' ') {
                    out.pop();
                }
                out.push('\n');
            };
            write_row(&mut out, header);
            for row in &rows {
                let cells = [
                    row[0].as_str(),
                    row[1].as_str(),
                    row[2].as_str(),
                    row[3].as_str(),
                    row[4].as_str(),
                    if row[5].is_empty() {
                        "-"
                    } else {
                        row[5].as_str()
                    },
                ];
                write_row(&mut out, cells);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::Program;
    use crate::detect::detect;
    use crate::metrics::compute_metrics;
    use crate::parser::parse_source;

    fn doc_for(sources: &[(&str, &str)]) -> ModelDoc {
        let files = sources
            .iter()
            .map(|(path, src)| parse_source(src, path).expect("parses").0)
            .collect();
        let program = Program::assemble(files);
        let model = detect(&program);
        let metrics = compute_metrics(&model, &program);
        build_doc(&model, &metrics, None)
    }

    const LISTING: &str = "function Mammal(name) {\n\tthis.name=name;\n}\nMammal.prototype.toString=function(){\n\treturn '['+this.name+']';\n}\nCat.prototype = Object.create(Mammal.prototype);\nfunction Cat(name) {\n\tthis.name='x' + name;\n}\nvar animal = new Mammal('a');\nvar myPet = new Cat('b');\n";

    #[test]
    fn model_json_shape_and_order() {
        let doc = doc_for(&[("listing1.js", LISTING)]);
        assert_eq!(doc.schema_version, SCHEMA_VERSION);
        assert_eq!(doc.noc, 2);
        // name-sorted: Cat before Mammal
        assert_eq!(doc.classes[0].name, "Cat");
        assert_eq!(doc.classes[0].dit, 1);
        assert_eq!(doc.classes[1].name, "Mammal");
        assert_eq!(doc.classes[1].dit, 0);
        let json = emit_model_json(&doc);
        let order = [
            "\"schema_version\"",
            "\"noc\"",
            "\"total_methods\"",
            "\"total_attributes\"",
            "\"total_loc\"",
            "\"total_raw_lines\"",
            "\"classes\"",
            "\"edges\"",
            "\"packages\"",
            "\"diagnostics\"",
        ];
        let mut last = 0;
        for key in order {
            let pos = json.find(key).unwrap_or_else(|| panic!("missing {key}"));
            assert!(pos > last, "{key} out of order");
            last = pos;
        }
    }

    #[test]
    fn model_json_round_trip() {
        let doc = doc_for(&[("listing1.js", LISTING)]);
        let json = emit_model_json(&doc);
        let back = parse_model_json(&json).expect("round-trips");
        assert_eq!(back, doc);
        assert_eq!(emit_model_json(&back), json);
    }

    #[test]
    fn model_json_rejects_other_schema_versions() {
        let doc = doc_for(&[("a.js", "var x = 1;\n")]);
        let json = emit_model_json(&doc).replace("\"schema_version\": 1", "\"schema_version\": 99");
        let err = parse_model_json(&json).expect_err("must reject");
        assert_eq!(err, ModelJsonError::SchemaVersion(99));
        assert!(matches!(
            parse_model_json("{oops").expect_err("must reject"),
            ModelJsonError::Parse(_)
        ));
    }

    #[test]
    fn empty_model_json_shape() {
        let doc = doc_for(&[("empty.js", "var x = 1;\n")]);
        assert_eq!(doc.noc, 0);
        assert!(doc.classes.is_empty());
        assert!(doc.edges.is_empty());
        assert_eq!(doc.packages.len(), 1);
    }

    #[test]
    fn uml_dot_structure() {
        let doc = doc_for(&[("listing1.js", LISTING)]);
        let dot = emit_uml_dot(&doc);
        assert!(dot.starts_with("digraph classes {"));
        assert!(dot.ends_with("}\n"));
        assert!(dot.contains("\"Mammal\" [label=\"{Mammal|name\\l|toString()\\l}\"]"));
        assert!(dot.contains("\"Cat\" [label=\"{Cat|name\\l|}\"]"));
        assert!(dot.contains("\"Cat\" -> \"Mammal\";"));
        assert!(dot.contains("arrowhead=empty"));
        // balanced braces make it at least lexically plausible DOT
        assert_eq!(dot.matches('{').count(), dot.matches('}').count());
    }

    #[test]
    fn uml_dot_empty_model() {
        let doc = doc_for(&[("empty.js", "var x = 1;\n")]);
        let dot = emit_uml_dot(&doc);
        assert!(dot.starts_with("digraph classes {"));
        assert!(dot.ends_with("}\n"));
        assert!(!dot.contains("label=\"{"));
    }

    #[test]
    fn distmap_highlights_range_inclusive() {
        let doc = doc_for(&[("listing1.js", LISTING)]);
        let spec = DistMapSpec {
            metric: "nom".to_string(),
            min: Some(1),
            highlight_color: "red".to_string(),
            ..DistMapSpec::default()
        };
        let svg = emit_distribution_map(&doc, &spec).expect("renders");
        assert!(svg.contains("<title>Mammal nom=1</title>"));
        assert!(svg.contains("<title>Cat nom=0</title>"));
        // Mammal highlighted, Cat base
        let mammal_rect = svg
            .lines()
            .find(|l| l.contains("Mammal nom=1"))
            .expect("mammal square");
        assert!(mammal_rect.contains("fill=\"red\""));
        let cat_rect = svg
            .lines()
            .find(|l| l.contains("Cat nom=0"))
            .expect("cat square");
        assert!(cat_rect.contains("fill=\"gray\""));
    }

    #[test]
    fn distmap_unknown_metric_is_rejected() {
        let doc = doc_for(&[("a.js", "var x = 1;\n")]);
        let spec = DistMapSpec {
            metric: "loc".to_string(),
            ..DistMapSpec::default()
        };
        assert_eq!(
            emit_distribution_map(&doc, &spec),
            Err(ReportError::BadMetric("loc".to_string()))
        );
    }

    #[test]
    fn distmap_empty_model_is_valid_svg() {
        let doc = doc_for(&[("a.js", "var x = 1;\n")]);
        let svg = emit_distribution_map(&doc, &DistMapSpec::default()).expect("renders");
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(!svg.contains("<title>"));
    }

    #[test]
    fn distmap_grid_wraps_after_columns() {
        let mut src = String::new();
        for i in 0..10 {
            src.push_str(&format!("function C{i}() {{}}\nvar v{i} = new C{i}();\n"));
        }
        let doc = doc_for(&[("many.js", &src)]);
        let spec = DistMapSpec {
            columns: 4,
            ..DistMapSpec::default()
        };
        let svg = emit_distribution_map(&doc, &spec).expect("renders");
        // 10 classes at 4 columns = 3 rows; count distinct square y values
        let mut ys = alloc::collections::BTreeSet::new();
        for line in svg.lines() {
            if line.contains("<title>") {
                let y = line
                    .split("y=\"")
                    .nth(1)
                    .and_then(|s| s.split('"').next())
                    .expect("y attr");
                ys.insert(y.to_string());
            }
        }
        assert_eq!(ys.len(), 3);
    }

    #[test]
    fn metrics_csv_rows_and_system_totals() {
        let doc = doc_for(&[("listing1.js", LISTING)]);
        let csv = emit_metrics_table(&doc, TableFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "class,package,nom,noa,children,dit");
        assert_eq!(lines[1], "Cat,listing1.js,0,1,0,1");
        assert_eq!(lines[2], "Mammal,listing1.js,1,1,1,0");
        assert!(lines[3].starts_with("SYSTEM,noc=2;files=1;"));
        assert!(lines[3].ends_with(",1,2,1,"));
    }

    #[test]
    fn metrics_csv_empty_report() {
        let doc = doc_for(&[("empty.js", "var x = 1;\n")]);
        let csv = emit_metrics_table(&doc, TableFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with("SYSTEM,noc=0;"));
    }

    #[test]
    fn metrics_csv_quotes_when_needed() {
        let doc = doc_for(&[(
            "dir,with,commas/a.js",
            "function A() {}\nvar a = new A();\n",
        )]);
        let csv = emit_metrics_table(&doc, TableFormat::Csv);
        assert!(csv.contains("A,\"dir,with,commas/a.js\",0,0,0,0"));
    }

    #[test]
    fn metrics_text_is_aligned_same_data() {
        let doc = doc_for(&[("listing1.js", LISTING)]);
        let text = emit_metrics_table(&doc, TableFormat::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("class"));
        assert!(lines[1].starts_with("Cat"));
        assert!(lines[2].starts_with("Mammal"));
        assert!(lines[3].starts_with("SYSTEM"));
        // numbers right-aligned under their header column
        let dit_col = lines[0].find("dit").expect("dit header");
        assert_eq!(&lines[1][dit_col + 2..dit_col + 3], "1");
    }

    #[test]
    fn emitters_are_deterministic() {
        let doc = doc_for(&[("listing1.js", LISTING)]);
        assert_eq!(emit_model_json(&doc), emit_model_json(&doc));
        assert_eq!(emit_uml_dot(&doc), emit_uml_dot(&doc));
        let spec = DistMapSpec::default();
        assert_eq!(
            emit_distribution_map(&doc, &spec),
            emit_distribution_map(&doc, &spec)
        );
        assert_eq!(
            emit_metrics_table(&doc, TableFormat::Csv),
            emit_metrics_table(&doc, TableFormat::Csv)
        );
    }
}
