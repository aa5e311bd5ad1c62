//! Property tests for the core pipeline: traversal counting, structural
//! equality, line counting, tokenizing, ESTree ingestion, and detector
//! invariants over generated programs.

use jsclass_core::ast::{
    count_loc, structural_eq, walk, AstNode, LiteralValue, NodeKind, Program, SourceSpan,
};
use jsclass_core::detect::detect;
use jsclass_core::estree::ingest_estree_json;
use jsclass_core::lexer::{tokenize, TokenKind};
use jsclass_core::metrics::compute_metrics;
use jsclass_core::parser::parse_source;
use proptest::prelude::*;
use serde_json::{json, Value};

// ---------------------------------------------------------------- AST trees

fn arb_span() -> impl Strategy<Value = SourceSpan> {
    (1u32..500, 0u32..80, 0u32..5, 0u32..80)
        .prop_map(|(l, c, dl, ec)| SourceSpan::new(l, c, l + dl, ec))
}

fn ident(name: &str, span: SourceSpan) -> AstNode {
    AstNode::new(
        NodeKind::Identifier {
            name: name.to_string(),
        },
        span,
    )
}

/// Random syntax trees over a representative kind subset.
fn arb_tree() -> impl Strategy<Value = AstNode> {
    let leaf = (prop_oneof![
        Just(NodeKind::ThisExpression),
        Just(NodeKind::EmptyStatement),
        "[a-z][a-z0-9]{0,5}".prop_map(|name| NodeKind::Identifier { name }),
        prop_oneof![
            any::<i32>().prop_map(|n| LiteralValue::Number(n as f64)),
            "[a-z ]{0,6}".prop_map(LiteralValue::Str),
            any::<bool>().prop_map(LiteralValue::Boolean),
            Just(LiteralValue::Null),
        ]
        .prop_map(|value| NodeKind::Literal {
            raw: "x".to_string(),
            value
        }),
    ])
    .prop_flat_map(|kind| arb_span().prop_map(move |s| AstNode::new(kind.clone(), s)));
    leaf.prop_recursive(4, 64, 4, |inner| {
        prop_oneof![
            (inner.clone(), arb_span()).prop_map(|(e, s)| AstNode::new(
                NodeKind::ExpressionStatement {
                    expression: Box::new(e)
                },
                s
            )),
            (prop::collection::vec(inner.clone(), 0..4), arb_span())
                .prop_map(|(body, s)| { AstNode::new(NodeKind::BlockStatement { body }, s) }),
            (inner.clone(), inner.clone(), arb_span()).prop_map(|(l, r, s)| AstNode::new(
                NodeKind::BinaryExpression {
                    operator: "+".to_string(),
                    left: Box::new(l),
                    right: Box::new(r),
                },
                s
            )),
            (
                inner.clone(),
                prop::collection::vec(inner.clone(), 0..3),
                arb_span()
            )
                .prop_map(|(callee, arguments, s)| AstNode::new(
                    NodeKind::CallExpression {
                        callee: Box::new(callee),
                        arguments,
                    },
                    s
                )),
            (
                prop::collection::vec(prop::option::of(inner.clone()), 0..4),
                arb_span()
            )
                .prop_map(|(elements, s)| AstNode::new(NodeKind::ArrayExpression { elements }, s)),
            (
                "[a-z]{1,4}",
                prop::collection::vec(inner.clone(), 0..3),
                inner.clone(),
                arb_span(),
                arb_span(),
            )
                .prop_map(|(name, params_src, body, fs, s)| {
                    let params = params_src
                        .iter()
                        .enumerate()
                        .map(|(i, p)| ident(&format!("p{i}"), p.span))
                        .collect();
                    AstNode::new(
                        NodeKind::FunctionExpression {
                            id: Some(Box::new(ident(&name, fs))),
                            params,
                            body: Box::new(AstNode::new(
                                NodeKind::BlockStatement {
                                    body: vec![AstNode::new(
                                        NodeKind::ExpressionStatement {
                                            expression: Box::new(body),
                                        },
                                        s,
                                    )],
                                },
                                s,
                            )),
                        },
                        s,
                    )
                }),
            (
                "[A-Z][a-z]{0,4}",
                prop::collection::vec(inner, 0..4),
                arb_span()
            )
                .prop_map(|(estree_type, children, s)| AstNode::new(
                    NodeKind::Opaque {
                        estree_type,
                        children
                    },
                    s
                )),
        ]
    })
}

/// Independent recursive count, not using `walk`.
fn recursive_count(node: &AstNode) -> u64 {
    let mut n = 1;
    node.for_each_child(&mut |c| n += recursive_count(c));
    n
}

/// Clone with every span replaced.
fn respan(node: &AstNode, span: SourceSpan) -> AstNode {
    let mut clone = node.clone();
    fn rec(n: &mut AstNode, span: SourceSpan) {
        n.span = span;
        // NodeKind holds children by value; rebuild via match versus walk.
        match &mut n.kind {
            NodeKind::Program { body }
            | NodeKind::BlockStatement { body }
            | NodeKind::SequenceExpression { expressions: body }
            | NodeKind::ObjectExpression { properties: body }
            | NodeKind::VariableDeclaration { declarations: body }
            | NodeKind::Opaque { children: body, .. } => body.iter_mut().for_each(|c| rec(c, span)),
            NodeKind::FunctionDeclaration { id, params, body } => {
                rec(id, span);
                params.iter_mut().for_each(|c| rec(c, span));
                rec(body, span);
            }
            NodeKind::FunctionExpression { id, params, body } => {
                if let Some(id) = id {
                    rec(id, span);
                }
                params.iter_mut().for_each(|c| rec(c, span));
                rec(body, span);
            }
            NodeKind::VariableDeclarator { id, init } => {
                rec(id, span);
                if let Some(init) = init {
                    rec(init, span);
                }
            }
            NodeKind::ExpressionStatement { expression: a }
            | NodeKind::UnaryExpression { argument: a, .. }
            | NodeKind::UpdateExpression { argument: a, .. } => rec(a, span),
            NodeKind::AssignmentExpression { left, right, .. }
            | NodeKind::BinaryExpression { left, right, .. }
            | NodeKind::LogicalExpression { left, right, .. } => {
                rec(left, span);
                rec(right, span);
            }
            NodeKind::MemberExpression {
                object, property, ..
            } => {
                rec(object, span);
                rec(property, span);
            }
            NodeKind::NewExpression { callee, arguments }
            | NodeKind::CallExpression { callee, arguments } => {
                rec(callee, span);
                arguments.iter_mut().for_each(|c| rec(c, span));
            }
            NodeKind::Property { key, value, .. } => {
                rec(key, span);
                rec(value, span);
            }
            NodeKind::ArrayExpression { elements } => {
                elements.iter_mut().flatten().for_each(|c| rec(c, span))
            }
            NodeKind::ReturnStatement { argument } => {
                if let Some(a) = argument {
                    rec(a, span)
                }
            }
            NodeKind::IfStatement {
                test,
                consequent,
                alternate,
            } => {
                rec(test, span);
                rec(consequent, span);
                if let Some(a) = alternate {
                    rec(a, span)
                }
            }
            NodeKind::ForStatement {
                init,
                test,
                update,
                body,
            } => {
                [init, test, update]
                    .into_iter()
                    .flatten()
                    .for_each(|c| rec(c, span));
                rec(body, span);
            }
            NodeKind::WhileStatement { test, body } => {
                rec(test, span);
                rec(body, span);
            }
            NodeKind::ConditionalExpression {
                test,
                consequent,
                alternate,
            } => {
                rec(test, span);
                rec(consequent, span);
                rec(alternate, span);
            }
            NodeKind::ThisExpression
            | NodeKind::Identifier { .. }
            | NodeKind::Literal { .. }
            | NodeKind::EmptyStatement => {}
        }
    }
    rec(&mut clone, span);
    clone
}

proptest! {
    #[test]
    fn walk_visits_each_node_exactly_once(tree in arb_tree()) {
        let mut visits = 0u64;
        let mut max_depth = 0usize;
        walk(&tree, &mut |_, ancestors| {
            visits += 1;
            max_depth = max_depth.max(ancestors.len());
        });
        prop_assert_eq!(visits, recursive_count(&tree));
        prop_assert_eq!(visits, tree.node_count());
        prop_assert!(max_depth < 20);
    }

    #[test]
    fn walk_ancestor_chain_is_the_path_from_root(tree in arb_tree()) {
        walk(&tree, &mut |node, ancestors| {
            if let Some(parent) = ancestors.last() {
                // the node is a direct child of the last ancestor
                let mut found = false;
                parent.for_each_child(&mut |c| {
                    if core::ptr::eq(c, node) {
                        found = true;
                    }
                });
                assert!(found, "ancestor chain broken");
            } else {
                assert!(core::ptr::eq(node, &tree));
            }
        });
    }

    #[test]
    fn structural_eq_ignores_spans(tree in arb_tree()) {
        let moved = respan(&tree, SourceSpan::new(9, 9, 9, 9));
        prop_assert!(structural_eq(&tree, &moved));
        prop_assert!(structural_eq(&tree, &tree.clone()));
    }

    #[test]
    fn structural_eq_detects_added_children(tree in arb_tree()) {
        let a = AstNode::new(NodeKind::Program { body: vec![tree.clone()] }, SourceSpan::UNKNOWN);
        let b = AstNode::new(
            NodeKind::Program { body: vec![tree.clone(), AstNode::new(NodeKind::EmptyStatement, SourceSpan::UNKNOWN)] },
            SourceSpan::UNKNOWN,
        );
        prop_assert!(!structural_eq(&a, &b));
        prop_assert!(!structural_eq(&b, &a));
    }
}

// ------------------------------------------------------------ line counting

#[derive(Debug, Clone)]
enum LineKind {
    Blank,
    Whitespace,
    Comment,
    Code,
    CodeThenComment,
}

fn arb_lines() -> impl Strategy<Value = (Vec<LineKind>, bool)> {
    (
        prop::collection::vec(
            prop_oneof![
                Just(LineKind::Blank),
                Just(LineKind::Whitespace),
                Just(LineKind::Comment),
                Just(LineKind::Code),
                Just(LineKind::CodeThenComment),
            ],
            1..30,
        ),
        any::<bool>(),
    )
}

proptest! {
    #[test]
    fn count_loc_counts_code_lines((lines, final_newline) in arb_lines()) {
        let mut text = String::new();
        for (i, line) in lines.iter().enumerate() {
            match line {
                LineKind::Blank => {}
                LineKind::Whitespace => text.push_str("  \t "),
                LineKind::Comment => text.push_str("// note"),
                LineKind::Code => text.push_str("var a = 1;"),
                LineKind::CodeThenComment => text.push_str("f(); // call"),
            }
            if i + 1 < lines.len() || final_newline {
                text.push('\n');
            }
        }
        // A trailing blank "line" after the final newline is not a segment.
        let last_is_empty_unterminated =
            !final_newline && matches!(lines.last(), Some(LineKind::Blank));
        let expected_raw = if last_is_empty_unterminated {
            lines.len() as u32 - 1
        } else {
            lines.len() as u32
        };
        let expected_loc = lines
            .iter()
            .filter(|l| matches!(l, LineKind::Code | LineKind::CodeThenComment))
            .count() as u32;
        let (raw, loc) = count_loc(&text);
        prop_assert_eq!(raw, expected_raw);
        prop_assert_eq!(loc, expected_loc);
    }

    #[test]
    fn count_loc_never_exceeds_raw_and_is_total(text in "\\PC{0,200}") {
        let (raw, loc) = count_loc(&text);
        prop_assert!(loc <= raw);
        prop_assert_eq!((raw, loc), count_loc(&text));
    }
}

// ----------------------------------------------------------------- tokenizer

fn token_pool() -> Vec<(&'static str, TokenKind)> {
    vec![
        ("var", TokenKind::Keyword),
        ("function", TokenKind::Keyword),
        ("return", TokenKind::Keyword),
        ("foo", TokenKind::Identifier),
        ("x1", TokenKind::Identifier),
        ("_y", TokenKind::Identifier),
        ("true", TokenKind::Boolean),
        ("null", TokenKind::Null),
        ("123", TokenKind::Number),
        ("1.5", TokenKind::Number),
        ("0x1f", TokenKind::Number),
        ("\"s t\"", TokenKind::String),
        ("'q'", TokenKind::String),
        ("(", TokenKind::Punctuator),
        (")", TokenKind::Punctuator),
        ("{", TokenKind::Punctuator),
        ("}", TokenKind::Punctuator),
        (";", TokenKind::Punctuator),
        (",", TokenKind::Punctuator),
        ("+", TokenKind::Punctuator),
        ("===", TokenKind::Punctuator),
        ("=", TokenKind::Punctuator),
        ("&&", TokenKind::Punctuator),
        (".", TokenKind::Punctuator),
    ]
}

proptest! {
    #[test]
    fn tokenizer_preserves_texts_and_newline_flags(
        picks in prop::collection::vec((0usize..24, 0usize..6), 1..40),
        lead in 0usize..3,
    ) {
        let pool = token_pool();
        let seps = [" ", "  ", "\t", "\n", "\n\n", " \n "];
        let leads = ["", " ", "\t"];
        let mut src = String::from(leads[lead]);
        for (i, (t, s)) in picks.iter().enumerate() {
            if i > 0 {
                src.push_str(seps[*s]);
            }
            src.push_str(pool[*t].0);
        }
        let tokens = tokenize(&src).expect("token pool input lexes");
        prop_assert_eq!(tokens.len(), picks.len() + 1, "one token per pick plus eof");
        for (i, (t, s)) in picks.iter().enumerate() {
            prop_assert_eq!(tokens[i].text.as_str(), pool[*t].0);
            prop_assert_eq!(tokens[i].kind, pool[*t].1);
            let expect_newline = i > 0 && seps[*s].contains('\n');
            prop_assert_eq!(
                tokens[i].preceded_by_newline, expect_newline,
                "token {} `{}`", i, tokens[i].text
            );
        }
        prop_assert_eq!(tokens.last().unwrap().kind, TokenKind::Eof);
    }
}

// ------------------------------------------------------------ ESTree ingest

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

/// ESTree-shaped JSON: well-formed known kinds mixed with free-form unknown
/// kinds (random child keys) and the occasional malformed slot.
fn arb_estree(depth: u32) -> BoxedStrategy<Value> {
    if depth == 0 {
        return prop_oneof![
            Just(json!({"type": "ThisExpression"})),
            Just(json!({"type": "EmptyStatement"})),
            "[a-z]{1,5}".prop_map(|n| json!({"type": "Identifier", "name": n})),
            any::<i32>().prop_map(|n| json!({"type": "Literal", "value": n, "raw": n.to_string()})),
        ]
        .boxed();
    }
    let child = arb_estree(depth - 1);
    prop_oneof![
        arb_estree(0),
        child
            .clone()
            .prop_map(|e| json!({"type": "ExpressionStatement", "expression": e})),
        (child.clone(), child.clone()).prop_map(|(l, r)| {
            json!({"type": "BinaryExpression", "operator": "+", "left": l, "right": r})
        }),
        prop::collection::vec(child.clone(), 0..3)
            .prop_map(|body| json!({"type": "BlockStatement", "body": body})),
        // unknown kind with free-form node-valued keys
        (
            "[A-Z][a-zA-Z]{2,8}",
            prop::collection::vec(child.clone(), 0..3),
            prop::option::of(child.clone()),
        )
            .prop_map(|(ty, kids, extra)| {
                let mut obj = serde_json::Map::new();
                obj.insert("type".into(), Value::String(ty));
                obj.insert("kids".into(), Value::Array(kids));
                if let Some(e) = extra {
                    obj.insert("other".into(), e);
                }
                obj.insert("flag".into(), Value::Bool(true));
                Value::Object(obj)
            }),
        // malformed known kind: scalar where a node belongs -> opaque fallback
        child.prop_map(|c| json!({"type": "ExpressionStatement", "expression": 42, "extra": c})),
    ]
    .boxed()
}

proptest! {
    #[test]
    fn ingest_counts_match_independent_json_walk(
        body in prop::collection::vec(arb_estree(3), 0..5)
    ) {
        let doc = json!({"type": "Program", "body": body, "sourceType": "script"});
        let text = serde_json::to_string(&doc).unwrap();
        let (file, stats) = ingest_estree_json(&text, "gen.json").expect("program root ingests");
        prop_assert_eq!(stats.nodes_loaded, json_node_count(&doc));
        prop_assert_eq!(file.root.node_count(), stats.nodes_loaded);
        // deterministic
        let (file2, _) = ingest_estree_json(&text, "gen.json").expect("ingests");
        prop_assert!(structural_eq(&file.root, &file2.root));
    }
}

// ------------------------------------------------------- detector invariants

/// Source-text generator: classes with members, instantiations, noise
/// functions, and inheritance assignments (valid ones plus self-loops and
/// duplicates, which the detector must tolerate).
#[derive(Debug, Clone)]
struct GenProgram {
    sources: Vec<String>,
}

fn arb_program() -> impl Strategy<Value = GenProgram> {
    (
        2usize..6,                                                          // class count
        prop::collection::vec(0usize..3, 2..6), // declaration form per class
        prop::collection::vec(0usize..4, 2..6), // attribute count per class
        prop::collection::vec(0usize..4, 2..6), // method count per class
        prop::collection::vec(any::<bool>(), 2..6), // instantiated?
        prop::collection::vec((0usize..6, 0usize..6, any::<bool>()), 0..6), // edges
        1usize..3,                              // file count
    )
        .prop_map(|(n, forms, attrs, methods, inst, edges, n_files)| {
            let mut files = vec![String::new(); n_files];
            for i in 0..n {
                let name = format!("C{i}");
                let form = forms[i % forms.len()];
                let file = &mut files[i % n_files];
                match form {
                    0 => file.push_str(&format!("function {name}() {{\n")),
                    1 => file.push_str(&format!("var {name} = function() {{\n")),
                    _ => file.push_str(&format!("{name} = function() {{\n")),
                }
                for a in 0..attrs[i % attrs.len()] {
                    file.push_str(&format!("  this.a{a} = {a};\n"));
                }
                file.push_str("};\n");
                if form == 0 {
                    // function declaration form: close with brace only
                    let fixed = file.trim_end_matches(";\n").to_string() + "\n";
                    *file = fixed;
                }
                for m in 0..methods[i % methods.len()] {
                    file.push_str(&format!(
                        "{name}.prototype.m{m} = function() {{ return {m}; }};\n"
                    ));
                }
                if inst[i % inst.len()] {
                    file.push_str(&format!("var v{i} = new {name}();\n"));
                }
            }
            // noise: a never-instantiated helper and a plain call
            files[0].push_str("function helper() { this.h = 1; }\nhelper();\n");
            for (a, b, use_new) in edges {
                let sub = format!("C{}", a % n);
                let sup = format!("C{}", b % n);
                let file = &mut files[(a + b) % n_files];
                if use_new {
                    file.push_str(&format!("{sub}.prototype = new {sup}();\n"));
                } else {
                    file.push_str(&format!(
                        "{sub}.prototype = Object.create({sup}.prototype);\n"
                    ));
                }
            }
            GenProgram { sources: files }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn detector_invariants_hold_on_generated_programs(gen in arb_program()) {
        let files: Vec<_> = gen
            .sources
            .iter()
            .enumerate()
            .map(|(i, src)| {
                let (file, _) = parse_source(src, &format!("f{i}.js")).expect("generated source parses");
                file
            })
            .collect();
        let program = Program::assemble(files);
        let model = detect(&program);
        let model2 = detect(&program);
        prop_assert_eq!(&model.classes, &model2.classes, "detection must be deterministic");
        prop_assert_eq!(&model.edges, &model2.edges);

        // every edge endpoint is a detected class; at most one superclass each
        let mut seen_sub = std::collections::BTreeSet::new();
        for edge in &model.edges {
            prop_assert!(model.classes.contains_key(&edge.subclass));
            prop_assert!(model.classes.contains_key(&edge.superclass));
            prop_assert_ne!(&edge.subclass, &edge.superclass);
            prop_assert!(seen_sub.insert(edge.subclass.clone()), "one superclass per class");
        }
        // acyclic: superclass chains terminate
        for name in model.classes.keys() {
            let mut cur = name.clone();
            let mut steps = 0;
            while let Some(sup) = model.classes[&cur].superclass.clone() {
                steps += 1;
                prop_assert!(steps <= model.classes.len(), "cycle in superclass chain");
                cur = sup;
            }
        }
        // children lists mirror edges
        let child_sum: usize = model.classes.values().map(|c| c.children.len()).sum();
        prop_assert_eq!(child_sum, model.edges.len());

        let metrics = compute_metrics(&model, &program);
        prop_assert_eq!(metrics.noc, model.classes.len() as u32);
        let by_name: std::collections::BTreeMap<_, _> = metrics
            .per_class
            .iter()
            .map(|c| (c.class_name.clone(), c))
            .collect();
        for edge in &model.edges {
            let child = by_name[&edge.subclass];
            let parent = by_name[&edge.superclass];
            prop_assert_eq!(child.dit, parent.dit + 1, "DIT(child) = DIT(parent) + 1");
        }
        // helper is never a class
        prop_assert!(!model.classes.contains_key("helper"));
    }
}
