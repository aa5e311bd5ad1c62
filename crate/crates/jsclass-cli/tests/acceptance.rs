//! Acceptance suite: one test per shipping criterion. Each test prints a
//! single `criterion NN: PASS/FAIL` line (run with `--nocapture` to see the
//! lines for passing tests; a failing criterion prints FAIL and panics).

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::panic::AssertUnwindSafe;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use jsclass_cli::run::analyze_tree;
use jsclass_cli::walking::InputMode;
use jsclass_core::ast::{structural_eq, Program};
use jsclass_core::detect;
use jsclass_core::estree::ingest_estree_json;
use jsclass_core::metrics::compute_metrics;
use jsclass_core::parser::parse_source;
use jsclass_core::report::{build_doc, emit_distribution_map, ClassDoc, DistMapSpec, ModelDoc};

/// Relative tolerance for the corpus measurement bands.
const TOLERANCE: f64 = 0.10;

fn repo_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(rel)
}

/// Runs one criterion body and prints its pass/fail line.
fn criterion(number: u32, what: &str, body: impl FnOnce()) {
    match std::panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("criterion {:02}: PASS - {}", number, what),
        Err(cause) => {
            println!("criterion {:02}: FAIL - {}", number, what);
            std::panic::resume_unwind(cause);
        }
    }
}

/// Analyzes a single fixture file through the full product pipeline.
fn doc_for_fixture(file: &str) -> ModelDoc {
    let dir = tempfile::tempdir().expect("tempdir");
    let name = Path::new(file).file_name().unwrap();
    fs::copy(repo_path(file), dir.path().join(name)).expect("copy fixture");
    analyze_tree(dir.path(), InputMode::Js, None, None).expect("analyze fixture")
}

fn class<'d>(doc: &'d ModelDoc, name: &str) -> &'d ClassDoc {
    doc.classes
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("class {} not in model", name))
}

fn member_names(members: &[jsclass_core::report::MemberDoc]) -> Vec<&str> {
    members.iter().map(|m| m.name.as_str()).collect()
}

/// PDF.js corpus analysis, shared across criteria; the analysis wall time is
/// measured inside the initializer so waiting threads do not inflate it.
fn pdfjs() -> &'static (ModelDoc, Duration) {
    static DOC: OnceLock<(ModelDoc, Duration)> = OnceLock::new();
    DOC.get_or_init(|| {
        let started = Instant::now();
        let doc = analyze_tree(
            &repo_path("corpora/pdf.js-1.1.1"),
            InputMode::Js,
            None,
            Some("pdf.js"),
        )
        .expect("analyze pdf.js corpus");
        (doc, started.elapsed())
    })
}

/// Compares a model against a golden fixture: exact class set, per-class
/// file and member names, exact edge list, exact totals.
fn assert_matches_golden(doc: &ModelDoc, golden: &str, what: &str) {
    let text = fs::read_to_string(repo_path(golden)).expect("read golden fixture");
    let g: serde_json::Value = serde_json::from_str(&text).expect("golden fixture is JSON");
    let g_classes = g["classes"].as_object().expect("classes object");
    let found: Vec<&str> = doc.classes.iter().map(|c| c.name.as_str()).collect();
    let expected: Vec<&str> = g_classes.keys().map(String::as_str).collect();
    assert_eq!(found, expected, "{}: class set differs", what);
    for c in &doc.classes {
        let gc = &g_classes[&c.name];
        assert_eq!(
            c.package,
            gc["file"].as_str().unwrap(),
            "{}: file of {}",
            what,
            c.name
        );
        let g_attrs: Vec<&str> = gc["attributes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap())
            .collect();
        let g_methods: Vec<&str> = gc["methods"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap())
            .collect();
        assert_eq!(
            member_names(&c.attributes),
            g_attrs,
            "{}: attributes of {}",
            what,
            c.name
        );
        assert_eq!(
            member_names(&c.methods),
            g_methods,
            "{}: methods of {}",
            what,
            c.name
        );
    }
    let g_edges: Vec<(String, String)> = g["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let pair = e.as_array().unwrap();
            (
                pair[0].as_str().unwrap().to_string(),
                pair[1].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let edges: Vec<(String, String)> = doc
        .edges
        .iter()
        .map(|e| (e.subclass.clone(), e.superclass.clone()))
        .collect();
    assert_eq!(edges, g_edges, "{}: edges differ", what);
    let totals = &g["totals"];
    assert_eq!(
        u64::from(doc.noc),
        totals["noc"].as_u64().unwrap(),
        "{}: noc",
        what
    );
    assert_eq!(
        doc.total_methods,
        totals["nom"].as_u64().unwrap(),
        "{}: nom",
        what
    );
    assert_eq!(
        doc.total_attributes,
        totals["noa"].as_u64().unwrap(),
        "{}: noa",
        what
    );
    assert_eq!(
        doc.edges.len() as u64,
        totals["edges"].as_u64().unwrap(),
        "{}: edge count",
        what
    );
}

fn assert_within_band(value: f64, target: f64, what: &str) {
    let lo = target * (1.0 - TOLERANCE);
    let hi = target * (1.0 + TOLERANCE);
    assert!(
        value >= lo && value <= hi,
        "{}: {} outside [{:.1}, {:.1}]",
        what,
        value,
        lo,
        hi
    );
}

/// Structural invariants every emitted model must satisfy.
fn assert_invariants(doc: &ModelDoc, what: &str) {
    let by_name: BTreeMap<&str, &ClassDoc> =
        doc.classes.iter().map(|c| (c.name.as_str(), c)).collect();
    assert_eq!(
        doc.noc as usize,
        doc.classes.len(),
        "{}: noc != |classes|",
        what
    );
    let children_sum: u64 = doc.classes.iter().map(|c| u64::from(c.children)).sum();
    assert_eq!(
        children_sum,
        doc.edges.len() as u64,
        "{}: sum of children != |edges|",
        what
    );
    let mut seen_subclasses = BTreeSet::new();
    for e in &doc.edges {
        assert!(
            seen_subclasses.insert(e.subclass.as_str()),
            "{}: {} has more than one superclass",
            what,
            e.subclass
        );
        assert!(
            by_name.contains_key(e.subclass.as_str()),
            "{}: edge from unknown class",
            what
        );
        assert!(
            by_name.contains_key(e.superclass.as_str()),
            "{}: edge to unknown class",
            what
        );
    }
    for c in &doc.classes {
        let edge_sup = doc
            .edges
            .iter()
            .find(|e| e.subclass == c.name)
            .map(|e| e.superclass.as_str());
        assert_eq!(
            c.superclass.as_deref(),
            edge_sup,
            "{}: superclass of {} disagrees with edges",
            what,
            c.name
        );
        assert_eq!(
            c.children as usize,
            c.subclasses.len(),
            "{}: children count of {}",
            what,
            c.name
        );
        for s in &c.subclasses {
            assert_eq!(
                by_name
                    .get(s.as_str())
                    .unwrap_or_else(|| panic!("{}: unknown subclass {}", what, s))
                    .superclass
                    .as_deref(),
                Some(c.name.as_str()),
                "{}: subclass list of {} disagrees",
                what,
                c.name
            );
        }
        // acyclicity and DIT: walking up must terminate at a root
        let mut depth = 0u32;
        let mut cursor = c.superclass.as_deref();
        while let Some(sup) = cursor {
            depth += 1;
            assert!(
                (depth as usize) <= doc.classes.len(),
                "{}: superclass chain from {} cycles",
                what,
                c.name
            );
            cursor = by_name[sup].superclass.as_deref();
        }
        assert_eq!(c.dit, depth, "{}: dit of {}", what, c.name);
        if let Some(sup) = c.superclass.as_deref() {
            assert_eq!(
                c.dit,
                by_name[sup].dit + 1,
                "{}: dit of {} is not parent dit + 1",
                what,
                c.name
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Independent definition oracle: a brute-force re-scan of the typed AST that
// shares no code with the detector. Used by criterion 6.
// ---------------------------------------------------------------------------
mod oracle {
    use jsclass_core::ast::{walk, AstNode, LiteralValue, NodeKind, Program, PropertyKind};
    use std::collections::{BTreeMap, BTreeSet};

    #[derive(Debug, Default, PartialEq, Eq)]
    pub struct Class {
        pub file: String,
        pub attributes: BTreeSet<String>,
        pub methods: BTreeSet<String>,
        pub superclass: Option<String>,
    }

    #[derive(Debug, Default, PartialEq, Eq)]
    pub struct Model {
        pub classes: BTreeMap<String, Class>,
        pub edges: Vec<(String, String)>,
    }

    fn ident(node: &AstNode) -> Option<&str> {
        node.identifier_name()
    }

    fn is_function_expression(node: &AstNode) -> bool {
        matches!(node.kind, NodeKind::FunctionExpression { .. })
    }

    /// `X.prototype` (non-computed) yields `X`.
    fn prototype_of(node: &AstNode) -> Option<&str> {
        if let NodeKind::MemberExpression {
            object,
            property,
            computed: false,
        } = &node.kind
        {
            if ident(property) == Some("prototype") {
                return ident(object);
            }
        }
        None
    }

    /// `Object.create(X.prototype)` with exactly one argument yields `X`.
    fn object_create_of(node: &AstNode) -> Option<&str> {
        if let NodeKind::CallExpression { callee, arguments } = &node.kind {
            if arguments.len() == 1 {
                if let NodeKind::MemberExpression {
                    object,
                    property,
                    computed: false,
                } = &callee.kind
                {
                    if ident(object) == Some("Object") && ident(property) == Some("create") {
                        return prototype_of(&arguments[0]);
                    }
                }
            }
        }
        None
    }

    /// Property key as member-name text: identifier name, string content,
    /// or an integral number rendered without a fraction.
    fn key_name(key: &AstNode) -> Option<String> {
        if let Some(name) = ident(key) {
            return Some(name.to_string());
        }
        if let NodeKind::Literal { value, .. } = &key.kind {
            return match value {
                LiteralValue::Str(s) => Some(s.clone()),
                LiteralValue::Number(n) => {
                    let n = *n;
                    let i = n as i64;
                    if n.is_finite() && n > -9e15 && n < 9e15 && (i as f64) == n {
                        Some(format!("{}", i))
                    } else {
                        Some(format!("{}", n))
                    }
                }
                LiteralValue::Boolean(b) => Some(format!("{}", b)),
                LiteralValue::Null => Some("null".to_string()),
                LiteralValue::Regex { .. } => None,
            };
        }
        None
    }

    /// `this.x = Exp` scan of a constructor body; nested function bodies do
    /// not contribute because `this` rebinds inside them.
    fn scan_this(node: &AstNode, class: &mut Class) {
        if let NodeKind::AssignmentExpression {
            operator,
            left,
            right,
        } = &node.kind
        {
            if operator == "=" {
                if let NodeKind::MemberExpression {
                    object,
                    property,
                    computed: false,
                } = &left.kind
                {
                    if matches!(object.kind, NodeKind::ThisExpression) {
                        if let Some(member) = ident(property) {
                            if is_function_expression(right) {
                                class.methods.insert(member.to_string());
                            } else {
                                class.attributes.insert(member.to_string());
                            }
                        }
                    }
                }
            }
        }
        if matches!(
            node.kind,
            NodeKind::FunctionDeclaration { .. } | NodeKind::FunctionExpression { .. }
        ) {
            return;
        }
        node.for_each_child(&mut |child| scan_this(child, class));
    }

    /// Full re-scan: a named function is a class when the program also
    /// instantiates it; members come from `this.x` in its immediate body,
    /// `C.prototype.x` assignments, `C.prototype = {...}` literals, and
    /// `C.x` statics; `C2.prototype = new C1()` / `Object.create(C1.prototype)`
    /// links classes, last assignment per subclass winning and cycle-closing
    /// edges dropped in first-assignment order.
    pub fn scan(program: &Program) -> Model {
        // named function definitions; first in path-sorted file order wins
        let mut candidates: BTreeMap<String, (String, &AstNode)> = BTreeMap::new();
        for file in &program.files {
            walk(&file.root, &mut |node, _| {
                let named: Option<(&str, &AstNode)> = match &node.kind {
                    NodeKind::FunctionDeclaration { id, body, .. } => {
                        ident(id).map(|n| (n, &**body))
                    }
                    NodeKind::VariableDeclarator {
                        id,
                        init: Some(init),
                    } => match (&init.kind, ident(id)) {
                        (NodeKind::FunctionExpression { body, .. }, Some(n)) => Some((n, &**body)),
                        _ => None,
                    },
                    NodeKind::AssignmentExpression {
                        operator,
                        left,
                        right,
                    } if operator == "=" => match (&right.kind, ident(left)) {
                        (NodeKind::FunctionExpression { body, .. }, Some(n)) => Some((n, &**body)),
                        _ => None,
                    },
                    _ => None,
                };
                if let Some((name, body)) = named {
                    candidates
                        .entry(name.to_string())
                        .or_insert_with(|| (file.path.clone(), body));
                }
            });
        }

        // instantiation evidence anywhere in the program
        let mut instantiated: BTreeSet<String> = BTreeSet::new();
        for file in &program.files {
            walk(&file.root, &mut |node, _| match &node.kind {
                NodeKind::NewExpression { callee, .. } => {
                    if let Some(name) = ident(callee) {
                        instantiated.insert(name.to_string());
                    }
                }
                NodeKind::CallExpression { .. } => {
                    if let Some(name) = object_create_of(node) {
                        instantiated.insert(name.to_string());
                    }
                }
                _ => {}
            });
        }

        let mut classes: BTreeMap<String, Class> = BTreeMap::new();
        for (name, (file, body)) in &candidates {
            if instantiated.contains(name) {
                let mut class = Class {
                    file: file.clone(),
                    ..Class::default()
                };
                scan_this(body, &mut class);
                classes.insert(name.clone(), class);
            }
        }

        // program-wide member assignments; one assignment feeds exactly one
        // of: prototype member, computed skip, prototype literal, static
        for file in &program.files {
            walk(&file.root, &mut |node, _| {
                let NodeKind::AssignmentExpression {
                    operator,
                    left,
                    right,
                } = &node.kind
                else {
                    return;
                };
                if operator != "=" {
                    return;
                }
                // C.prototype.x = Exp
                if let NodeKind::MemberExpression {
                    object,
                    property,
                    computed: false,
                } = &left.kind
                {
                    if prototype_of(object).is_some() {
                        let target = prototype_of(object).unwrap().to_string();
                        if let (Some(class), Some(member)) =
                            (classes.get_mut(target.as_str()), ident(property))
                        {
                            if is_function_expression(right) {
                                class.methods.insert(member.to_string());
                            } else {
                                class.attributes.insert(member.to_string());
                            }
                        }
                        return;
                    }
                }
                // C.prototype[expr] = Exp: dynamic name, contributes nothing
                if let NodeKind::MemberExpression { computed: true, .. } = &left.kind {
                    return;
                }
                // C.prototype = { ... }
                if let Some(target) = prototype_of(left).map(str::to_string) {
                    if let Some(class) = classes.get_mut(target.as_str()) {
                        if let NodeKind::ObjectExpression { properties } = &right.kind {
                            for prop in properties {
                                let NodeKind::Property { key, value, kind } = &prop.kind else {
                                    continue;
                                };
                                let Some(member) = key_name(key) else {
                                    continue;
                                };
                                if *kind != PropertyKind::Init || is_function_expression(value) {
                                    class.methods.insert(member);
                                } else {
                                    class.attributes.insert(member);
                                }
                            }
                        }
                    }
                    return;
                }
                // C.x = Exp constructor static (x != prototype)
                if let NodeKind::MemberExpression {
                    object,
                    property,
                    computed: false,
                } = &left.kind
                {
                    if let (Some(target), Some(member)) = (ident(object), ident(property)) {
                        if member != "prototype" {
                            if let Some(class) = classes.get_mut(target) {
                                if is_function_expression(right) {
                                    class.methods.insert(member.to_string());
                                } else {
                                    class.attributes.insert(member.to_string());
                                }
                            }
                        }
                    }
                }
            });
        }

        // inheritance: last assignment per subclass wins, processed in
        // first-assignment order, cycle-closing edges dropped
        let mut order: Vec<String> = Vec::new();
        let mut last: BTreeMap<String, String> = BTreeMap::new();
        for file in &program.files {
            walk(&file.root, &mut |node, _| {
                let NodeKind::AssignmentExpression {
                    operator,
                    left,
                    right,
                } = &node.kind
                else {
                    return;
                };
                if operator != "=" {
                    return;
                }
                let Some(subclass) = prototype_of(left) else {
                    return;
                };
                if !classes.contains_key(subclass) {
                    return;
                }
                let superclass = match &right.kind {
                    NodeKind::NewExpression { callee, .. } => match ident(callee) {
                        Some(name) => name,
                        None => return,
                    },
                    _ => match object_create_of(right) {
                        Some(name) => name,
                        None => return,
                    },
                };
                if !classes.contains_key(superclass) || superclass == subclass {
                    return;
                }
                if !last.contains_key(subclass) {
                    order.push(subclass.to_string());
                }
                last.insert(subclass.to_string(), superclass.to_string());
            });
        }
        let mut accepted: BTreeMap<String, String> = BTreeMap::new();
        for subclass in order {
            let superclass = last[&subclass].clone();
            let mut cursor = Some(superclass.clone());
            let mut cyclic = false;
            while let Some(current) = cursor {
                if current == subclass {
                    cyclic = true;
                    break;
                }
                cursor = accepted.get(&current).cloned();
            }
            if !cyclic {
                accepted.insert(subclass, superclass);
            }
        }
        let mut edges: Vec<(String, String)> = accepted
            .iter()
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect();
        edges.sort();
        for (subclass, superclass) in &edges {
            classes.get_mut(subclass).unwrap().superclass = Some(superclass.clone());
        }
        Model { classes, edges }
    }
}

// ---------------------------------------------------------------------------
// Seeded program generator for criteria 6 and 7.
// ---------------------------------------------------------------------------

/// xorshift64* generator; deterministic per seed.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed.wrapping_mul(0x9E3779B97F4A7C15) | 1)
    }
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }
    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
    fn chance(&mut self, percent: u64) -> bool {
        self.below(100) < percent
    }
}

/// Generates a small random program exercising every detection pattern:
/// the three declaration forms, `this` members (plain, function-valued
/// variable, conditional, nested-function trap), prototype members
/// (including computed skips), prototype literals with accessors,
/// constructor statics, both inheritance patterns (including self, repeated,
/// and cycle-forming assignments), never-instantiated near-misses, and
/// cross-file references.
fn generate_program(seed: u64) -> Vec<(String, String)> {
    let mut rng = Rng::new(seed);
    let file_count = 1 + rng.below(2) as usize;
    let mut files: Vec<Vec<String>> = vec![Vec::new(); file_count];
    let class_count = 2 + rng.below(5) as usize;

    let pick = |rng: &mut Rng| rng.below(file_count as u64) as usize;

    let helper_file = pick(&mut rng);
    files[helper_file].push("function helper(n) { this.h = n; return n; }".to_string());

    for k in 0..class_count {
        let name = format!("C{}", k);
        let mut body = Vec::new();
        for j in 0..rng.below(4) {
            match rng.below(6) {
                0 => body.push(format!("this.a{} = {};", j, j)),
                1 => body.push(format!("this.a{} = 'v{}';", j, j)),
                2 => body.push(format!("this.m{} = function () {{ return {}; }};", j, j)),
                3 => body.push(format!("this.f{} = helper;", j)),
                4 => body.push(format!("if (p) {{ this.c{} = {}; }}", j, j)),
                _ => body.push(format!(
                    "var inner{} = function () {{ this.t{} = 1; }};",
                    j, j
                )),
            }
        }
        let body_text = body.join(" ");
        let declaration = match rng.below(3) {
            0 => format!("function {}(p) {{ {} }}", name, body_text),
            1 => format!("var {} = function (p) {{ {} }};", name, body_text),
            _ => format!("{} = function (p) {{ {} }};", name, body_text),
        };
        let f = pick(&mut rng);
        files[f].push(declaration);
        if rng.chance(10) {
            let f = pick(&mut rng);
            files[f].push(format!("function {}() {{ this.dup = 1; }}", name));
        }

        for j in 0..rng.below(3) {
            let f = pick(&mut rng);
            match rng.below(3) {
                0 => files[f].push(format!(
                    "{}.prototype.pm{} = function (x) {{ return x; }};",
                    name, j
                )),
                1 => files[f].push(format!("{}.prototype.pa{} = {};", name, j, j)),
                _ => files[f].push(format!("{}.prototype['k{}'] = 1;", name, j)),
            }
        }
        if rng.chance(25) {
            let f = pick(&mut rng);
            files[f].push(format!(
                "{}.prototype = {{ lm{}: function () {{ return 1; }}, la{}: {}, 'sk{}': 2, {}: 3, \
                 get g{}() {{ return 4; }}, set s{}(v) {{ }} }};",
                name,
                k,
                k,
                k,
                k,
                40 + k,
                k,
                k
            ));
        }
        if rng.chance(25) {
            let f = pick(&mut rng);
            if rng.chance(50) {
                files[f].push(format!("{}.st = function () {{ return 0; }};", name));
            } else {
                files[f].push(format!("{}.sv = {};", name, k));
            }
        }
        if rng.chance(80) {
            let f = pick(&mut rng);
            if rng.chance(50) {
                files[f].push(format!("var i{} = new {}({});", k, name, k));
            } else {
                files[f].push(format!("var o{} = Object.create({}.prototype);", k, name));
            }
        }
        if k >= 1 && rng.chance(50) {
            let target = if rng.chance(80) {
                rng.below(k as u64)
            } else {
                rng.below(class_count as u64)
            };
            let f = pick(&mut rng);
            if rng.chance(50) {
                files[f].push(format!("{}.prototype = new C{}();", name, target));
            } else {
                files[f].push(format!(
                    "{}.prototype = Object.create(C{}.prototype);",
                    name, target
                ));
            }
            if rng.chance(15) {
                let second = rng.below(class_count as u64);
                let f = pick(&mut rng);
                files[f].push(format!("{}.prototype = new C{}();", name, second));
            }
        }
        match rng.below(4) {
            0 => {
                let f = pick(&mut rng);
                files[f].push(format!("var z{} = 1 + 2 * {};", k, k));
            }
            1 => {
                let f = pick(&mut rng);
                files[f].push(format!("var u{} = helper({});", k, k));
            }
            2 => {
                let f = pick(&mut rng);
                files[f].push(format!(
                    "var multi{} = Object.create(C{}.prototype, {{}});",
                    k,
                    rng.below(class_count as u64)
                ));
            }
            _ => {
                let f = pick(&mut rng);
                files[f].push(format!(
                    "(function () {{ var q{} = new Missing(); }})();",
                    k
                ));
            }
        }
    }

    files
        .into_iter()
        .enumerate()
        .map(|(i, stmts)| {
            let path = format!("{}.js", (b'a' + i as u8) as char);
            let mut source = stmts.join("\n");
            source.push('\n');
            (path, source)
        })
        .collect()
}

/// Parses generated sources into a program, requiring a clean parse.
fn assemble_generated(seed: u64) -> Program {
    let sources = generate_program(seed);
    let mut files = Vec::new();
    for (path, source) in &sources {
        let (file, diags) = parse_source(source, path)
            .unwrap_or_else(|e| panic!("seed {}: generated source failed to parse: {}", seed, e));
        assert!(
            diags.is_empty(),
            "seed {}: generated source parses with diagnostics: {:?}",
            seed,
            diags
        );
        files.push(file);
    }
    Program::assemble(files)
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

#[test]
fn criterion_01_two_class_inheritance_example_exact_model() {
    criterion(
        1,
        "two-class inheritance example yields the exact model in under 1s",
        || {
            let started = Instant::now();
            let doc = doc_for_fixture("fixtures/listings/listing1.js");
            let elapsed = started.elapsed();

            assert_eq!(doc.noc, 2, "expected exactly 2 classes");
            let mammal = class(&doc, "Mammal");
            assert_eq!(member_names(&mammal.attributes), ["name"]);
            assert_eq!(member_names(&mammal.methods), ["toString"]);
            assert_eq!(mammal.dit, 0);
            assert_eq!(mammal.children, 1);
            assert_eq!(mammal.superclass, None);
            let cat = class(&doc, "Cat");
            assert_eq!(member_names(&cat.attributes), ["name"]);
            assert!(cat.methods.is_empty());
            assert_eq!(cat.dit, 1);
            assert_eq!(cat.children, 0);
            assert_eq!(cat.superclass.as_deref(), Some("Mammal"));
            assert_eq!(doc.edges.len(), 1);
            assert_eq!(doc.edges[0].subclass, "Cat");
            assert_eq!(doc.edges[0].superclass, "Mammal");
            assert!(elapsed < Duration::from_secs(1), "took {:?}", elapsed);

            // the shipped binary reports the same result on its summary line
            let dir = tempfile::tempdir().unwrap();
            fs::copy(
                repo_path("fixtures/listings/listing1.js"),
                dir.path().join("listing1.js"),
            )
            .unwrap();
            let out_dir = dir.path().join("out");
            let out = Command::new(env!("CARGO_BIN_EXE_jsclass"))
                .env("JSCLASS_LOG", "error")
                .args(["analyze"])
                .arg(dir.path())
                .arg("--out")
                .arg(&out_dir)
                .args(["--emit", "model,metrics"])
                .output()
                .expect("run jsclass");
            assert!(out.status.success());
            let stdout = String::from_utf8(out.stdout).unwrap();
            assert!(
                stdout.contains("classes: 2, inheritance edges: 1"),
                "summary line was: {}",
                stdout
            );
            assert!(out_dir.join("model.json").exists());
            assert!(out_dir.join("metrics.csv").exists());
            assert!(!out_dir.join("classes.dot").exists(), "uml not requested");
            assert!(
                !out_dir.join("distmap.svg").exists(),
                "distmap not requested"
            );
        },
    );
}

#[test]
fn criterion_02_singleton_object_is_not_a_class() {
    criterion(2, "singleton object literal yields zero classes", || {
        let doc = doc_for_fixture("fixtures/listings/listing2.js");
        assert_eq!(doc.noc, 0, "classes found: {:?}", doc.classes);
        assert!(doc.classes.is_empty());
        assert!(doc.edges.is_empty());
    });
}

#[test]
fn criterion_03_function_valued_variable_is_an_attribute() {
    criterion(
        3,
        "function-valued variable assigned to a this property is an attribute",
        || {
            let doc = doc_for_fixture("fixtures/listings/funcvar.js");
            let task = class(&doc, "Task");
            assert_eq!(member_names(&task.attributes), ["go", "period"]);
            assert!(
                task.methods.is_empty(),
                "methods found: {:?}",
                member_names(&task.methods)
            );
        },
    );
}

#[test]
fn criterion_04_algorithms_corpus_matches_expected_measurements() {
    criterion(
        4,
        "algorithms.js corpus: LOC band, data-structure classes only, under 10s",
        || {
            let started = Instant::now();
            let doc = analyze_tree(
                &repo_path("corpora/algorithms.js-0.8.1"),
                InputMode::Js,
                None,
                Some("algorithms.js"),
            )
            .expect("analyze algorithms.js corpus");
            let elapsed = started.elapsed();
            assert!(elapsed < Duration::from_secs(10), "took {:?}", elapsed);

            assert_within_band(doc.total_raw_lines as f64, 3263.0, "algorithms.js lines");
            assert_matches_golden(
                &doc,
                "fixtures/golden/algorithms_model.json",
                "algorithms.js",
            );
            // global algorithm functions are not classes
            for api_function in ["Dijkstra", "EulerPath", "Quicksort", "BFS", "DFS"] {
                assert!(
                    !doc.classes.iter().any(|c| c.name == api_function),
                    "{} detected as a class",
                    api_function
                );
            }
        },
    );
}

#[test]
fn criterion_05_pdfjs_corpus_totals_within_bands() {
    criterion(
        5,
        "pdf.js corpus: NOC/method/attribute/LOC bands, under 60s",
        || {
            let (doc, elapsed) = pdfjs();
            assert!(*elapsed < Duration::from_secs(60), "took {:?}", elapsed);
            assert_within_band(f64::from(doc.noc), 182.0, "pdf.js NOC");
            assert_within_band(doc.total_methods as f64, 947.0, "pdf.js methods");
            assert_within_band(doc.total_attributes as f64, 876.0, "pdf.js attributes");
            assert_within_band(doc.total_raw_lines as f64, 57359.0, "pdf.js lines");
            assert_matches_golden(doc, "fixtures/golden/pdfjs_model.json", "pdf.js");
        },
    );
}

#[test]
fn criterion_06_detector_agrees_with_definition_oracle() {
    criterion(
        6,
        "500 random programs: detector and brute-force oracle agree 100%",
        || {
            let mut nonempty = 0usize;
            let mut edged = 0usize;
            for seed in 1..=500u64 {
                let program = assemble_generated(seed);
                let model = detect::detect(&program);
                let expected = oracle::scan(&program);

                let found_names: Vec<&String> = model.classes.keys().collect();
                let expected_names: Vec<&String> = expected.classes.keys().collect();
                assert_eq!(
                    found_names, expected_names,
                    "seed {}: class sets differ",
                    seed
                );
                for (name, class) in &model.classes {
                    let want = &expected.classes[name];
                    assert_eq!(class.file, want.file, "seed {}: file of {}", seed, name);
                    let attrs: BTreeSet<&String> = class.attributes.keys().collect();
                    let want_attrs: BTreeSet<&String> = want.attributes.iter().collect();
                    assert_eq!(attrs, want_attrs, "seed {}: attributes of {}", seed, name);
                    let methods: BTreeSet<&String> = class.methods.keys().collect();
                    let want_methods: BTreeSet<&String> = want.methods.iter().collect();
                    assert_eq!(methods, want_methods, "seed {}: methods of {}", seed, name);
                    assert_eq!(
                        class.superclass, want.superclass,
                        "seed {}: superclass of {}",
                        seed, name
                    );
                }
                let edges: Vec<(String, String)> = model
                    .edges
                    .iter()
                    .map(|e| (e.subclass.clone(), e.superclass.clone()))
                    .collect();
                assert_eq!(edges, expected.edges, "seed {}: edges differ", seed);

                if !model.classes.is_empty() {
                    nonempty += 1;
                }
                if !model.edges.is_empty() {
                    edged += 1;
                }
            }
            // the generator must actually exercise detection, not just parse
            assert!(
                nonempty >= 400,
                "only {} programs produced classes",
                nonempty
            );
            assert!(edged >= 100, "only {} programs produced edges", edged);
        },
    );
}

#[test]
fn criterion_07_structural_invariants_hold_everywhere() {
    criterion(
        7,
        "structural invariants hold on every fixture, corpus, and random program",
        || {
            for fixture in [
                "fixtures/listings/listing1.js",
                "fixtures/listings/listing2.js",
                "fixtures/listings/funcvar.js",
            ] {
                assert_invariants(&doc_for_fixture(fixture), fixture);
            }
            let mut conformance = 0;
            for entry in fs::read_dir(repo_path("fixtures/conformance")).unwrap() {
                let path = entry.unwrap().path();
                if path.extension().and_then(|e| e.to_str()) != Some("js") {
                    continue;
                }
                conformance += 1;
                let source = fs::read_to_string(&path).unwrap();
                let (file, _) = parse_source(&source, path.file_name().unwrap().to_str().unwrap())
                    .unwrap_or_else(|e| panic!("{}: {}", path.display(), e));
                let program = Program::assemble(vec![file]);
                let model = detect::detect(&program);
                let metrics = compute_metrics(&model, &program);
                let doc = build_doc(&model, &metrics, None);
                assert_invariants(&doc, path.to_str().unwrap());
            }
            assert!(conformance >= 50);

            let algorithms = analyze_tree(
                &repo_path("corpora/algorithms.js-0.8.1"),
                InputMode::Js,
                None,
                None,
            )
            .unwrap();
            assert_invariants(&algorithms, "algorithms.js corpus");
            assert_invariants(&pdfjs().0, "pdf.js corpus");

            for seed in 1..=500u64 {
                let program = assemble_generated(seed);
                let model = detect::detect(&program);
                let metrics = compute_metrics(&model, &program);
                let doc = build_doc(&model, &metrics, None);
                assert_invariants(&doc, &format!("random program {}", seed));
            }
        },
    );
}

#[test]
fn criterion_08_native_parse_and_estree_ingest_agree() {
    criterion(
        8,
        "50+ conformance snippets: native parse and ESTree ingest are structurally equal",
        || {
            let dir = repo_path("fixtures/conformance");
            let mut pairs = 0;
            for entry in fs::read_dir(&dir).unwrap() {
                let js_path = entry.unwrap().path();
                if js_path.extension().and_then(|e| e.to_str()) != Some("js") {
                    continue;
                }
                let json_path = js_path.with_extension("json");
                assert!(
                    json_path.exists(),
                    "{} has no ESTree fixture",
                    js_path.display()
                );
                pairs += 1;
                let source = fs::read_to_string(&js_path).unwrap();
                let json = fs::read_to_string(&json_path).unwrap();
                let name = js_path.file_name().unwrap().to_str().unwrap();
                let (native, _) = parse_source(&source, name)
                    .unwrap_or_else(|e| panic!("{}: parse failed: {}", name, e));
                let (ingested, _) = ingest_estree_json(&json, name)
                    .unwrap_or_else(|e| panic!("{}: ingest failed: {}", name, e));
                assert!(
                    structural_eq(&native.root, &ingested.root),
                    "{}: trees differ structurally",
                    name
                );
            }
            assert!(pairs >= 50, "only {} conformance pairs", pairs);
        },
    );
}

#[test]
fn criterion_09_analyze_runs_are_byte_identical() {
    criterion(
        9,
        "two pdf.js analyze runs produce byte-identical artifacts",
        || {
            let dir = tempfile::tempdir().unwrap();
            let corpus = repo_path("corpora/pdf.js-1.1.1");
            let mut outputs = Vec::new();
            for run in 0..2 {
                let out = dir.path().join(format!("run{}", run));
                let output = Command::new(env!("CARGO_BIN_EXE_jsclass"))
                    .env("JSCLASS_LOG", "error")
                    .args(["analyze"])
                    .arg(&corpus)
                    .arg("--out")
                    .arg(&out)
                    .args(["--name", "pdf.js"])
                    .output()
                    .expect("run jsclass");
                assert!(output.status.success());
                outputs.push(out);
            }
            for artifact in ["model.json", "classes.dot", "metrics.csv", "distmap.svg"] {
                let a = fs::read(outputs[0].join(artifact)).unwrap();
                let b = fs::read(outputs[1].join(artifact)).unwrap();
                assert!(a == b, "{} differs between runs", artifact);
                assert!(!a.is_empty(), "{} is empty", artifact);
            }
        },
    );
}

#[test]
fn criterion_10_distribution_map_highlights_exactly_the_selected_classes() {
    criterion(
        10,
        "distmap with min=6 on nom highlights exactly the classes with nom >= 6",
        || {
            let (doc, _) = pdfjs();
            let spec = DistMapSpec {
                metric: "nom".to_string(),
                min: Some(6),
                ..DistMapSpec::default()
            };
            let svg = emit_distribution_map(doc, &spec).expect("emit distmap");

            // every class square carries a <title>Name nom=N</title> and its fill
            let mut highlighted = BTreeSet::new();
            let mut squares = 0;
            for line in svg.lines() {
                let Some(title_at) = line.find("<title>") else {
                    continue;
                };
                squares += 1;
                let title =
                    &line[title_at + "<title>".len()..line.find(" nom=").expect("metric in title")];
                if line.contains(&format!("fill=\"{}\"", spec.highlight_color)) {
                    highlighted.insert(title.to_string());
                }
            }
            assert_eq!(squares, doc.classes.len(), "one square per class");

            let expected: BTreeSet<String> = doc
                .classes
                .iter()
                .filter(|c| c.nom >= 6)
                .map(|c| c.name.clone())
                .collect();
            assert_eq!(highlighted, expected, "highlighted set differs");
            assert!(!expected.is_empty());
            assert!(
                expected.len() < doc.classes.len(),
                "filter must be selective"
            );
        },
    );
}
