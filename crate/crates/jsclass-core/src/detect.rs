//! Class, member, and inheritance detection over [`crate::ast`] trees.
//!
//! A function named `C` is a class when the program also instantiates it
//! with `new C()` or `Object.create(C.prototype)` (single argument).
//! Attributes and methods come from `this.x = Exp` assignments in the
//! class's immediate body (not nested functions, where `this` rebinds),
//! from `C.prototype.x = Exp` assignments anywhere, from object literals
//! assigned whole to `C.prototype` (accessor properties count as methods),
//! and from constructor statics `C.x = Exp`. An assignment with a
//! `FunctionExpression` right-hand side yields a method; any other
//! expression yields an attribute, even when it names a function elsewhere
//! (static analysis does not chase values).
//!
//! `C2.prototype = new C1()` / `C2.prototype = Object.create(C1.prototype)`
//! yields an inheritance edge when both ends are detected classes. Repeated
//! prototype assignment keeps the last one (warning); an edge that would
//! close a cycle is dropped (error diagnostic).
//!
//! Name resolution is a single global namespace across all files: the
//! program is the unit of analysis, matching ES5 scripts sharing one global
//! object. On duplicate definitions the first in path-sorted file order
//! wins and a warning is recorded.

use crate::ast::{walk, AstNode, NodeKind, Program, SourceSpan};
use crate::diag::{DiagCode, Diagnostic, Severity};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// How a candidate function was introduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeclarationKind {
    /// `function C() {}`
    FunctionDeclaration,
    /// `var C = function () {}` or `C = function () {}`
    VarAssignedFunctionExpression,
}

/// A named function that may become a class if instantiated.
#[derive(Debug, Clone)]
pub struct CandidateFunction<'a> {
    /// The would-be class name `C`.
    pub name: String,
    /// Introduction form.
    pub declaration_kind: DeclarationKind,
    /// Defining file path (the class's package if detected).
    pub file: String,
    /// Position of the function.
    pub span: SourceSpan,
    /// The function's `BlockStatement` body.
    pub body: &'a AstNode,
}

/// Member classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MemberKind {
    /// Right-hand side was not a `FunctionExpression`.
    Attribute,
    /// Right-hand side was a `FunctionExpression` (or an accessor).
    Method,
}

/// Which pattern introduced a member (first occurrence wins).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MemberOrigin {
    /// `this.x = Exp` in the class's immediate body.
    ThisAssignment,
    /// `C.prototype.x = Exp`
    PrototypeAssignment,
    /// property of an object literal assigned to `C.prototype`
    PrototypeLiteral,
    /// `C.x = Exp` on the constructor itself
    StaticAssignment,
}

impl MemberOrigin {
    /// Stable machine-readable name.
    pub fn as_str(&self) -> &'static str {
        match self {
            MemberOrigin::ThisAssignment => "this_assignment",
            MemberOrigin::PrototypeAssignment => "prototype_assignment",
            MemberOrigin::PrototypeLiteral => "prototype_literal",
            MemberOrigin::StaticAssignment => "static_assignment",
        }
    }
}

/// One attribute or method of a class.
#[derive(Debug, Clone, PartialEq)]
pub struct Member {
    /// Member name.
    pub name: String,
    /// Attribute or method.
    pub kind: MemberKind,
    /// Introducing pattern.
    pub origin: MemberOrigin,
    /// Position of the first introducing assignment or property.
    pub span: SourceSpan,
}

/// A detected class: the tuple (C, A, M) plus inheritance links.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassEntity {
    /// Class name.
    pub name: String,
    /// Defining file path; doubles as the package.
    pub file: String,
    /// Position of the defining function.
    pub span: SourceSpan,
    /// Attribute set, name-keyed (duplicates merged, first kept).
    pub attributes: BTreeMap<String, Member>,
    /// Method set, name-keyed.
    pub methods: BTreeMap<String, Member>,
    /// At most one superclass, by name.
    pub superclass: Option<String>,
    /// Direct subclass names, sorted.
    pub children: Vec<String>,
}

/// Which source pattern produced an inheritance edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InheritancePattern {
    /// `C2.prototype = new C1()`
    PrototypeNew,
    /// `C2.prototype = Object.create(C1.prototype)`
    PrototypeObjectCreate,
}

impl InheritancePattern {
    /// Stable machine-readable name.
    pub fn as_str(&self) -> &'static str {
        match self {
            InheritancePattern::PrototypeNew => "prototype_new",
            InheritancePattern::PrototypeObjectCreate => "prototype_object_create",
        }
    }
}

/// A subclass-of relation between two detected classes.
#[derive(Debug, Clone, PartialEq)]
pub struct InheritanceEdge {
    /// The subclass `C2`.
    pub subclass: String,
    /// The superclass `C1`.
    pub superclass: String,
    /// Matched pattern.
    pub pattern: InheritancePattern,
    /// Position of the prototype assignment.
    pub span: SourceSpan,
}

/// The recovered object-oriented model of a program.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct OOModel {
    /// All detected classes, name-keyed.
    pub classes: BTreeMap<String, ClassEntity>,
    /// Inheritance edges, sorted by (subclass, superclass).
    pub edges: Vec<InheritanceEdge>,
    /// File path → sorted names of classes defined there. Every analyzed
    /// file appears, including files defining no classes.
    pub packages: BTreeMap<String, Vec<String>>,
    /// Anomalies observed during detection.
    pub diagnostics: Vec<Diagnostic>,
}

/// `C.prototype` → `C`, for a non-computed member expression.
fn proto_target(node: &AstNode) -> Option<&str> {
    let NodeKind::MemberExpression {
        object,
        property,
        computed,
    } = &node.kind
    else {
        return None;
    };
    if *computed || property.identifier_name() != Some("prototype") {
        return None;
    }
    object.identifier_name()
}

/// `C.prototype.x` → `(C, x)`, both member levels non-computed.
fn proto_member(node: &AstNode) -> Option<(&str, &str)> {
    let NodeKind::MemberExpression {
        object,
        property,
        computed,
    } = &node.kind
    else {
        return None;
    };
    if *computed {
        return None;
    }
    let member = property.identifier_name()?;
    let class_name = proto_target(object)?;
    Some((class_name, member))
}

/// `C.x` (x ≠ "prototype") → `(C, x)`, non-computed.
fn static_member(node: &AstNode) -> Option<(&str, &str)> {
    let NodeKind::MemberExpression {
        object,
        property,
        computed,
    } = &node.kind
    else {
        return None;
    };
    if *computed {
        return None;
    }
    let member = property.identifier_name()?;
    if member == "prototype" {
        return None;
    }
    let class_name = object.identifier_name()?;
    Some((class_name, member))
}

/// `Object.create(C.prototype)` with exactly one argument → `C`.
fn object_create_target(node: &AstNode) -> Option<&str> {
    let NodeKind::CallExpression { callee, arguments } = &node.kind else {
        return None;
    };
    let NodeKind::MemberExpression {
        object,
        property,
        computed,
    } = &callee.kind
    else {
        return None;
    };
    if *computed
        || object.identifier_name() != Some("Object")
        || property.identifier_name() != Some("create")
    {
        return None;
    }
    if arguments.len() != 1 {
        return None;
    }
    proto_target(&arguments[0])
}

/// True when the node is a `FunctionExpression`.
fn is_function_expression(node: &AstNode) -> bool {
    matches!(node.kind, NodeKind::FunctionExpression { .. })
}

/// Finds every candidate class function: all `FunctionDeclaration`s (at any
/// nesting depth) and `FunctionExpression`s bound to a bare name via
/// `var C = function...` or `C = function...`. On duplicate names the first
/// occurrence in path-sorted file order wins, with a warning per loser.
pub fn collect_candidates(
    program: &Program,
) -> (BTreeMap<String, CandidateFunction<'_>>, Vec<Diagnostic>) {
    let mut candidates: BTreeMap<String, CandidateFunction<'_>> = BTreeMap::new();
    let mut diagnostics = Vec::new();
    for file in &program.files {
        walk(&file.root, &mut |node, _| {
            let found: Option<(&str, DeclarationKind, &AstNode, SourceSpan)> = match &node.kind {
                NodeKind::FunctionDeclaration { id, body, .. } => {
                    id.identifier_name().map(|name| {
                        (
                            name,
                            DeclarationKind::FunctionDeclaration,
                            &**body,
                            node.span,
                        )
                    })
                }
                NodeKind::VariableDeclarator {
                    id,
                    init: Some(init),
                } if is_function_expression(init) => {
                    let NodeKind::FunctionExpression { body, .. } = &init.kind else {
                        unreachable!("checked by is_function_expression")
                    };
                    id.identifier_name().map(|name| {
                        (
                            name,
                            DeclarationKind::VarAssignedFunctionExpression,
                            &**body,
                            init.span,
                        )
                    })
                }
                NodeKind::AssignmentExpression {
                    operator,
                    left,
                    right,
                } if operator == "=" && is_function_expression(right) => {
                    left.identifier_name().map(|name| {
                        let NodeKind::FunctionExpression { body, .. } = &right.kind else {
                            unreachable!("checked by is_function_expression")
                        };
                        (
                            name,
                            DeclarationKind::VarAssignedFunctionExpression,
                            &**body,
                            right.span,
                        )
                    })
                }
                _ => None,
            };
            let Some((name, declaration_kind, body, span)) = found else {
                return;
            };
            if candidates.contains_key(name) {
                diagnostics.push(
                    Diagnostic::new(
                        Severity::Warning,
                        DiagCode::DuplicateCandidate,
                        format!(
                            "duplicate definition of function '{}'; keeping the first",
                            name
                        ),
                    )
                    .with_file(&file.path)
                    .with_span(span),
                );
            } else {
                candidates.insert(
                    name.into(),
                    CandidateFunction {
                        name: name.into(),
                        declaration_kind,
                        file: file.path.clone(),
                        span,
                        body,
                    },
                );
            }
        });
    }
    (candidates, diagnostics)
}

/// Counts instantiation expressions per target name: `new C(...)` with a
/// bare-identifier callee, and `Object.create(C.prototype)` with exactly one
/// argument. Every occurrence anywhere counts, including expressions that
/// also serve an inheritance assignment.
pub fn collect_instantiations(program: &Program) -> BTreeMap<String, u64> {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for file in &program.files {
        walk(&file.root, &mut |node, _| {
            let target: Option<&str> = match &node.kind {
                NodeKind::NewExpression { callee, .. } => callee.identifier_name(),
                NodeKind::CallExpression { .. } => object_create_target(node),
                _ => None,
            };
            if let Some(name) = target {
                *counts.entry(name.into()).or_insert(0) += 1;
            }
        });
    }
    counts
}

/// Per-class member stores, keyed by class name.
type MemberSets = BTreeMap<String, (BTreeMap<String, Member>, BTreeMap<String, Member>)>;

fn record_member(
    sets: &mut MemberSets,
    class_name: &str,
    member_name: &str,
    kind: MemberKind,
    origin: MemberOrigin,
    span: SourceSpan,
) {
    let (attrs, methods) = sets
        .get_mut(class_name)
        .expect("record_member only called for tracked classes");
    let store = match kind {
        MemberKind::Attribute => attrs,
        MemberKind::Method => methods,
    };
    store.entry(member_name.into()).or_insert(Member {
        name: member_name.into(),
        kind,
        origin,
        span,
    });
}

/// `this.x = Exp` scan over a candidate's immediate body: nested function
/// bodies are pruned because `this` rebinds there.
fn collect_this_members(body: &AstNode, class_name: &str, sets: &mut MemberSets) {
    fn visit(node: &AstNode, class_name: &str, sets: &mut MemberSets) {
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
                        if let Some(member_name) = property.identifier_name() {
                            let kind = if is_function_expression(right) {
                                MemberKind::Method
                            } else {
                                MemberKind::Attribute
                            };
                            record_member(
                                sets,
                                class_name,
                                member_name,
                                kind,
                                MemberOrigin::ThisAssignment,
                                node.span,
                            );
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
        node.for_each_child(&mut |child| visit(child, class_name, sets));
    }
    visit(body, class_name, sets);
}

/// Key text for a property in a prototype object literal: identifier name,
/// or a literal's value rendered as text (`'x'` → x, `42` → 42).
fn property_key_name(key: &AstNode) -> Option<String> {
    if let Some(name) = key.identifier_name() {
        return Some(name.into());
    }
    let NodeKind::Literal { value, .. } = &key.kind else {
        return None;
    };
    use crate::ast::LiteralValue;
    Some(match value {
        LiteralValue::Str(s) => s.clone(),
        LiteralValue::Number(n) => {
            // Integral values render without a fraction (42, not 42.0);
            // core has no fract(), so integrality is checked by round-trip.
            let n = *n;
            let as_int = n as i64;
            if n.is_finite() && n > -9e15 && n < 9e15 && (as_int as f64) == n {
                format!("{}", as_int)
            } else {
                format!("{}", n)
            }
        }
        LiteralValue::Boolean(b) => format!("{}", b),
        LiteralValue::Null => "null".into(),
        LiteralValue::Regex { .. } => return None,
    })
}

/// Program-wide member pass: `C.prototype.x = Exp`, `C.prototype = {..}`
/// object literals, and constructor statics `C.x = Exp`, for every class in
/// `sets`. Computed prototype member names are skipped with a warning.
fn collect_global_members(
    program: &Program,
    sets: &mut MemberSets,
    diagnostics: &mut Vec<Diagnostic>,
) {
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
            // `C.prototype.x = Exp`
            if let Some((class_name, member_name)) = proto_member(left) {
                if sets.contains_key(class_name) {
                    let kind = if is_function_expression(right) {
                        MemberKind::Method
                    } else {
                        MemberKind::Attribute
                    };
                    record_member(
                        sets,
                        class_name,
                        member_name,
                        kind,
                        MemberOrigin::PrototypeAssignment,
                        node.span,
                    );
                }
                return;
            }
            // `C.prototype[expr] = Exp`: dynamic name, not recoverable.
            if let NodeKind::MemberExpression {
                object,
                computed: true,
                ..
            } = &left.kind
            {
                if let Some(class_name) = proto_target(object) {
                    if sets.contains_key(class_name) {
                        diagnostics.push(
                            Diagnostic::new(
                                Severity::Warning,
                                DiagCode::ComputedMember,
                                format!(
                                    "computed member name on '{}.prototype' ignored",
                                    class_name
                                ),
                            )
                            .with_file(&file.path)
                            .with_span(node.span),
                        );
                    }
                }
                return;
            }
            // `C.prototype = { ... }`
            if let Some(class_name) = proto_target(left) {
                if sets.contains_key(class_name) {
                    if let NodeKind::ObjectExpression { properties } = &right.kind {
                        for prop in properties {
                            let NodeKind::Property { key, value, kind } = &prop.kind else {
                                continue;
                            };
                            let Some(member_name) = property_key_name(key) else {
                                continue;
                            };
                            let member_kind = if *kind != crate::ast::PropertyKind::Init
                                || is_function_expression(value)
                            {
                                MemberKind::Method
                            } else {
                                MemberKind::Attribute
                            };
                            record_member(
                                sets,
                                class_name,
                                &member_name,
                                member_kind,
                                MemberOrigin::PrototypeLiteral,
                                prop.span,
                            );
                        }
                    }
                }
                return;
            }
            // `C.x = Exp` constructor static
            if let Some((class_name, member_name)) = static_member(left) {
                if sets.contains_key(class_name) {
                    let kind = if is_function_expression(right) {
                        MemberKind::Method
                    } else {
                        MemberKind::Attribute
                    };
                    record_member(
                        sets,
                        class_name,
                        member_name,
                        kind,
                        MemberOrigin::StaticAssignment,
                        node.span,
                    );
                }
            }
        });
    }
}

/// Extracts the attribute and method sets for one candidate. Standalone
/// variant of the batched pass inside [`detect_classes`]; results are
/// identical because member recording is independent across classes.
pub fn extract_members(
    candidate: &CandidateFunction<'_>,
    program: &Program,
) -> (BTreeMap<String, Member>, BTreeMap<String, Member>) {
    let mut sets: MemberSets = BTreeMap::new();
    sets.insert(candidate.name.clone(), (BTreeMap::new(), BTreeMap::new()));
    collect_this_members(candidate.body, &candidate.name, &mut sets);
    let mut discarded = Vec::new();
    collect_global_members(program, &mut sets, &mut discarded);
    sets.remove(&candidate.name).expect("inserted above")
}

/// Runs candidate collection, instantiation counting, and member
/// extraction, producing a model with classes and packages but no edges.
/// Candidates never instantiated are reported as info-level near-misses.
pub fn detect_classes(program: &Program) -> OOModel {
    let (candidates, mut diagnostics) = collect_candidates(program);
    let instantiations = collect_instantiations(program);

    let mut sets: MemberSets = BTreeMap::new();
    for (name, candidate) in &candidates {
        if instantiations.contains_key(name) {
            sets.insert(name.clone(), (BTreeMap::new(), BTreeMap::new()));
        } else {
            diagnostics.push(
                Diagnostic::new(
                    Severity::Info,
                    DiagCode::NearMiss,
                    format!("function '{}' is never instantiated; not a class", name),
                )
                .with_file(&candidate.file)
                .with_span(candidate.span),
            );
        }
    }
    for (name, candidate) in &candidates {
        if sets.contains_key(name) {
            collect_this_members(candidate.body, name, &mut sets);
        }
    }
    collect_global_members(program, &mut sets, &mut diagnostics);

    let mut classes: BTreeMap<String, ClassEntity> = BTreeMap::new();
    for (name, (attributes, methods)) in sets {
        let candidate = &candidates[&name];
        for member_name in attributes.keys() {
            if methods.contains_key(member_name) {
                diagnostics.push(
                    Diagnostic::new(
                        Severity::Warning,
                        DiagCode::MemberConflict,
                        format!(
                            "'{}.{}' is recorded as both attribute and method",
                            name, member_name
                        ),
                    )
                    .with_file(&candidate.file),
                );
            }
        }
        classes.insert(
            name.clone(),
            ClassEntity {
                name,
                file: candidate.file.clone(),
                span: candidate.span,
                attributes,
                methods,
                superclass: None,
                children: Vec::new(),
            },
        );
    }

    let mut packages: BTreeMap<String, Vec<String>> = program
        .files
        .iter()
        .map(|f| (f.path.clone(), Vec::new()))
        .collect();
    for class in classes.values() {
        packages
            .entry(class.file.clone())
            .or_default()
            .push(class.name.clone());
    }
    for list in packages.values_mut() {
        list.sort();
    }

    OOModel {
        classes,
        edges: Vec::new(),
        packages,
        diagnostics,
    }
}

/// Populates inheritance edges on a class-only model. When a class's
/// prototype is assigned an inheritance pattern more than once, the last
/// assignment in path/source order wins (warning). An edge that would close
/// a cycle is dropped with an error diagnostic, in assignment order.
/// `children`/`superclass` are then derived from the surviving edges.
pub fn detect_inheritance(mut model: OOModel, program: &Program) -> OOModel {
    struct PendingEdge {
        superclass: String,
        pattern: InheritancePattern,
        span: SourceSpan,
    }
    // Subclass insertion order is the order of each subclass's FIRST
    // matching assignment, even when a later one replaces the target.
    let mut order: Vec<String> = Vec::new();
    let mut pending: BTreeMap<String, PendingEdge> = BTreeMap::new();

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
            let Some(subclass) = proto_target(left) else {
                return;
            };
            if !model.classes.contains_key(subclass) {
                return;
            }
            let (superclass, pattern) = match &right.kind {
                NodeKind::NewExpression { callee, .. } => match callee.identifier_name() {
                    Some(name) => (name, InheritancePattern::PrototypeNew),
                    None => return,
                },
                _ => match object_create_target(right) {
                    Some(name) => (name, InheritancePattern::PrototypeObjectCreate),
                    None => return,
                },
            };
            if !model.classes.contains_key(superclass) || superclass == subclass {
                return;
            }
            if pending.contains_key(subclass) {
                model.diagnostics.push(
                    Diagnostic::new(
                        Severity::Warning,
                        DiagCode::PrototypeReassigned,
                        format!(
                            "prototype of '{}' assigned an inheritance pattern more than once; keeping the last",
                            subclass
                        ),
                    )
                    .with_file(&file.path)
                    .with_span(node.span),
                );
            } else {
                order.push(subclass.into());
            }
            pending.insert(
                subclass.into(),
                PendingEdge {
                    superclass: superclass.into(),
                    pattern,
                    span: node.span,
                },
            );
        });
    }

    let mut accepted: BTreeMap<String, String> = BTreeMap::new();
    let mut edges = Vec::new();
    for subclass in order {
        let edge = &pending[&subclass];
        // Walking the accepted superclass chain finds any would-be cycle.
        let mut cursor = Some(edge.superclass.clone());
        let mut cyclic = false;
        while let Some(current) = cursor {
            if current == subclass {
                cyclic = true;
                break;
            }
            cursor = accepted.get(&current).cloned();
        }
        if cyclic {
            model.diagnostics.push(
                Diagnostic::new(
                    Severity::Error,
                    DiagCode::InheritanceCycle,
                    format!(
                        "inheritance edge '{}' -> '{}' dropped: would create a cycle",
                        subclass, edge.superclass
                    ),
                )
                .with_span(edge.span),
            );
            continue;
        }
        accepted.insert(subclass.clone(), edge.superclass.clone());
        edges.push(InheritanceEdge {
            subclass,
            superclass: edge.superclass.clone(),
            pattern: edge.pattern,
            span: edge.span,
        });
    }

    edges.sort_by(|a, b| {
        (a.subclass.as_str(), a.superclass.as_str())
            .cmp(&(b.subclass.as_str(), b.superclass.as_str()))
    });
    for edge in &edges {
        if let Some(sub) = model.classes.get_mut(&edge.subclass) {
            sub.superclass = Some(edge.superclass.clone());
        }
        if let Some(sup) = model.classes.get_mut(&edge.superclass) {
            sup.children.push(edge.subclass.clone());
        }
    }
    for class in model.classes.values_mut() {
        class.children.sort();
    }
    model.edges = edges;
    model
}

/// Full detection: classes, members, then inheritance.
pub fn detect(program: &Program) -> OOModel {
    let model = detect_classes(program);
    detect_inheritance(model, program)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_source;
    use alloc::string::ToString;
    use alloc::vec;

    fn program_from(sources: &[(&str, &str)]) -> Program {
        let files = sources
            .iter()
            .map(|(path, src)| {
                let (file, diags) = parse_source(src, path).expect("test source parses");
                assert!(diags.is_empty(), "unexpected diagnostics: {diags:?}");
                file
            })
            .collect();
        Program::assemble(files)
    }

    fn single(src: &str) -> Program {
        program_from(&[("main.js", src)])
    }

    const LISTING_STYLE: &str = concat!(
        "function Mammal(name) {\n",
        "\tthis.name=name;\n",
        "}\n",
        "Mammal.prototype.toString=function(){\n",
        "\treturn '['+this.name+']';\n",
        "}\n",
        "Cat.prototype = Object.create(Mammal.prototype);\n",
        "function Cat(name) {\n",
        "\tthis.name='\"meow\" ' + name;\n",
        "}\n",
        "var animal = new Mammal('Mr. Donalds');\n",
        "var myPet = new Cat('Felix');\n",
    );

    #[test]
    fn candidates_from_all_three_forms() {
        let program = single(
            "function A() {}\nvar B = function () {};\nC = function () {};\nvar d = other();\n",
        );
        let (candidates, diags) = collect_candidates(&program);
        assert!(diags.is_empty());
        assert_eq!(
            candidates.keys().cloned().collect::<Vec<_>>(),
            vec!["A".to_string(), "B".to_string(), "C".to_string()]
        );
        assert_eq!(
            candidates["A"].declaration_kind,
            DeclarationKind::FunctionDeclaration
        );
        assert_eq!(
            candidates["B"].declaration_kind,
            DeclarationKind::VarAssignedFunctionExpression
        );
        assert_eq!(
            candidates["C"].declaration_kind,
            DeclarationKind::VarAssignedFunctionExpression
        );
    }

    #[test]
    fn nested_function_declarations_are_candidates() {
        let program = single(
            "var Outer = (function () { function Inner() { this.x = 1; } return Inner; })();\nvar i = new Inner();\n",
        );
        let (candidates, _) = collect_candidates(&program);
        assert!(candidates.contains_key("Inner"));
        assert!(!candidates.contains_key("Outer")); // init is a call, not a function
        let model = detect(&program);
        assert!(model.classes.contains_key("Inner"));
    }

    #[test]
    fn duplicate_candidate_first_file_wins() {
        let program = program_from(&[
            (
                "b.js",
                "function A() { this.fromB = 1; }\nvar x = new A();\n",
            ),
            ("a.js", "function A() { this.fromA = 1; }\n"),
        ]);
        let (candidates, diags) = collect_candidates(&program);
        assert_eq!(candidates.len(), 1);
        // path-sorted order puts a.js first
        assert_eq!(candidates["A"].file, "a.js");
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, DiagCode::DuplicateCandidate);
        let model = detect(&program);
        let class = &model.classes["A"];
        assert!(class.attributes.contains_key("fromA"));
        assert!(!class.attributes.contains_key("fromB"));
    }

    #[test]
    fn instantiation_counts() {
        let program = single(LISTING_STYLE);
        let counts = collect_instantiations(&program);
        assert_eq!(counts.get("Mammal"), Some(&2));
        assert_eq!(counts.get("Cat"), Some(&1));
    }

    #[test]
    fn non_identifier_new_callee_is_ignored() {
        let program = single("function A() {}\nnew (getCtor())();\nnew ns.A();\n");
        let counts = collect_instantiations(&program);
        assert!(counts.is_empty());
        let model = detect(&program);
        assert!(model.classes.is_empty());
    }

    #[test]
    fn object_create_needs_exactly_one_argument() {
        let program =
            single("function A() {}\nvar p = Object.create(A.prototype, { x: { value: 1 } });\n");
        assert!(collect_instantiations(&program).is_empty());
    }

    #[test]
    fn listing_style_model() {
        let program = single(LISTING_STYLE);
        let model = detect(&program);
        assert_eq!(model.classes.len(), 2);
        let mammal = &model.classes["Mammal"];
        assert_eq!(
            mammal.attributes.keys().cloned().collect::<Vec<_>>(),
            vec!["name".to_string()]
        );
        assert_eq!(
            mammal.methods.keys().cloned().collect::<Vec<_>>(),
            vec!["toString".to_string()]
        );
        let cat = &model.classes["Cat"];
        assert_eq!(
            cat.attributes.keys().cloned().collect::<Vec<_>>(),
            vec!["name".to_string()]
        );
        assert!(cat.methods.is_empty());
        assert_eq!(model.edges.len(), 1);
        assert_eq!(model.edges[0].subclass, "Cat");
        assert_eq!(model.edges[0].superclass, "Mammal");
        assert_eq!(
            model.edges[0].pattern,
            InheritancePattern::PrototypeObjectCreate
        );
        assert_eq!(mammal.children, vec!["Cat".to_string()]);
        assert_eq!(cat.superclass.as_deref(), Some("Mammal"));
    }

    #[test]
    fn singleton_object_is_not_a_class() {
        let program = single(
            "var person = {\n  firstName: \"John\",\n  lastName: \"Doe\",\n  getAge: function () { return 25; }\n};\n",
        );
        let model = detect(&program);
        assert!(model.classes.is_empty());
        assert!(model.edges.is_empty());
    }

    #[test]
    fn uninstantiated_candidate_is_a_near_miss() {
        let program = single("function Lost() { this.x = 1; }\n");
        let model = detect(&program);
        assert!(model.classes.is_empty());
        let infos: Vec<_> = model
            .diagnostics
            .iter()
            .filter(|d| d.code == DiagCode::NearMiss)
            .collect();
        assert_eq!(infos.len(), 1);
        assert_eq!(infos[0].severity, Severity::Info);
    }

    #[test]
    fn function_valued_variable_is_an_attribute() {
        let program =
            single("function run() {}\nfunction F() { this.go = run; }\nvar f = new F();\n");
        let model = detect(&program);
        let class = &model.classes["F"];
        assert!(class.attributes.contains_key("go"));
        assert!(class.methods.is_empty());
    }

    #[test]
    fn this_assignments_in_nested_functions_do_not_count() {
        let program = single(
            "function A() {\n  this.direct = 1;\n  var helper = function () { this.indirect = 2; };\n  function inner() { this.alsoNot = 3; }\n}\nvar a = new A();\n",
        );
        let model = detect(&program);
        let class = &model.classes["A"];
        assert!(class.attributes.contains_key("direct"));
        assert!(!class.attributes.contains_key("indirect"));
        assert!(!class.attributes.contains_key("alsoNot"));
    }

    #[test]
    fn this_assignment_inside_control_flow_counts() {
        let program = single(
            "function A(flag) {\n  if (flag) { this.a = 1; } else { this.b = 2; }\n  for (var i = 0; i < 3; i++) { this.c = i; }\n  switch (flag) { case 1: this.d = 4; }\n}\nvar a = new A(1);\n",
        );
        let model = detect(&program);
        let class = &model.classes["A"];
        for name in ["a", "b", "c", "d"] {
            assert!(class.attributes.contains_key(name), "missing {name}");
        }
    }

    #[test]
    fn prototype_literal_members() {
        let program = single(
            "function A() {}\nA.prototype = {\n  run: function () {},\n  limit: 10,\n  'quoted': function () {},\n  42: 'answer',\n  get size() { return 1; },\n  set size(v) {}\n};\nvar a = new A();\n",
        );
        let model = detect(&program);
        let class = &model.classes["A"];
        assert_eq!(
            class.methods.keys().cloned().collect::<Vec<_>>(),
            vec!["quoted".to_string(), "run".to_string(), "size".to_string()]
        );
        assert_eq!(
            class.attributes.keys().cloned().collect::<Vec<_>>(),
            vec!["42".to_string(), "limit".to_string()]
        );
        assert_eq!(class.methods["size"].origin, MemberOrigin::PrototypeLiteral);
    }

    #[test]
    fn constructor_statics_are_members() {
        let program =
            single("function A() {}\nA.helper = function () {};\nA.MAX = 3;\nvar a = new A();\n");
        let model = detect(&program);
        let class = &model.classes["A"];
        assert_eq!(
            class.methods["helper"].origin,
            MemberOrigin::StaticAssignment
        );
        assert_eq!(
            class.attributes["MAX"].origin,
            MemberOrigin::StaticAssignment
        );
    }

    #[test]
    fn computed_prototype_member_warns_and_is_skipped() {
        let program =
            single("function A() {}\nvar key = 'k';\nA.prototype[key] = 1;\nvar a = new A();\n");
        let model = detect(&program);
        let class = &model.classes["A"];
        assert!(class.attributes.is_empty());
        assert!(model
            .diagnostics
            .iter()
            .any(|d| d.code == DiagCode::ComputedMember));
    }

    #[test]
    fn member_in_both_sets_warns_but_keeps_both() {
        let program = single(
            "function A() { this.x = 1; }\nA.prototype.x = function () {};\nvar a = new A();\n",
        );
        let model = detect(&program);
        let class = &model.classes["A"];
        assert!(class.attributes.contains_key("x"));
        assert!(class.methods.contains_key("x"));
        assert!(model
            .diagnostics
            .iter()
            .any(|d| d.code == DiagCode::MemberConflict));
    }

    #[test]
    fn duplicate_member_keeps_first_origin() {
        let program =
            single("function A() { this.x = 1; }\nA.prototype.x = 2;\nvar a = new A();\n");
        let model = detect(&program);
        let class = &model.classes["A"];
        assert_eq!(class.attributes["x"].origin, MemberOrigin::ThisAssignment);
        assert_eq!(class.attributes.len(), 1);
    }

    #[test]
    fn inheritance_requires_both_endpoints_to_be_classes() {
        let program = single(
            "function A() {}\nvar a = new A();\nA.prototype = Object.create(Missing.prototype);\n",
        );
        let model = detect(&program);
        assert!(model.edges.is_empty());
    }

    #[test]
    fn prototype_new_pattern() {
        let program = single(
            "function A() {}\nfunction B() {}\nB.prototype = new A();\nvar a = new A();\nvar b = new B();\n",
        );
        let model = detect(&program);
        assert_eq!(model.edges.len(), 1);
        assert_eq!(model.edges[0].pattern, InheritancePattern::PrototypeNew);
        assert_eq!(model.classes["B"].superclass.as_deref(), Some("A"));
    }

    #[test]
    fn prototype_reassignment_keeps_last_with_warning() {
        let program = single(
            "function A() {}\nfunction B() {}\nfunction C() {}\nC.prototype = new A();\nC.prototype = new B();\nvar a = new A();\nvar b = new B();\nvar c = new C();\n",
        );
        let model = detect(&program);
        assert_eq!(model.edges.len(), 1);
        assert_eq!(model.edges[0].superclass, "B");
        assert!(model
            .diagnostics
            .iter()
            .any(|d| d.code == DiagCode::PrototypeReassigned));
    }

    #[test]
    fn cycle_keeps_first_edge_and_drops_second() {
        let program = single(
            "function A() {}\nfunction B() {}\nB.prototype = new A();\nA.prototype = new B();\nvar a = new A();\nvar b = new B();\n",
        );
        let model = detect(&program);
        assert_eq!(model.edges.len(), 1);
        assert_eq!(model.edges[0].subclass, "B");
        assert_eq!(model.edges[0].superclass, "A");
        let errors: Vec<_> = model
            .diagnostics
            .iter()
            .filter(|d| d.code == DiagCode::InheritanceCycle)
            .collect();
        assert_eq!(errors.len(), 1);
        assert_eq!(errors[0].severity, Severity::Error);
    }

    #[test]
    fn self_edge_is_ignored() {
        let program = single("function A() {}\nA.prototype = new A();\nvar a = new A();\n");
        let model = detect(&program);
        assert!(model.edges.is_empty());
        assert!(!model
            .diagnostics
            .iter()
            .any(|d| d.code == DiagCode::InheritanceCycle));
    }

    #[test]
    fn three_level_chain() {
        let program = single(
            "function A() {}\nfunction B() {}\nfunction C() {}\nB.prototype = Object.create(A.prototype);\nC.prototype = Object.create(B.prototype);\nvar a = new A();\nvar b = new B();\nvar c = new C();\n",
        );
        let model = detect(&program);
        assert_eq!(model.edges.len(), 2);
        assert_eq!(model.classes["A"].children, vec!["B".to_string()]);
        assert_eq!(model.classes["B"].children, vec!["C".to_string()]);
        assert!(model.classes["C"].children.is_empty());
    }

    #[test]
    fn model_invariants_hold() {
        let program = program_from(&[
            (
                "zoo.js",
                "function Animal() { this.alive = true; }\nfunction Dog() {}\nDog.prototype = new Animal();\nvar d = new Dog();\nvar a = new Animal();\n",
            ),
            ("empty.js", "var nothing = 1;\n"),
        ]);
        let model = detect(&program);
        // every class in exactly one package
        let mut appearances: BTreeMap<&str, u32> = BTreeMap::new();
        for members in model.packages.values() {
            for name in members {
                *appearances.entry(name).or_insert(0) += 1;
            }
        }
        for name in model.classes.keys() {
            assert_eq!(appearances.get(name.as_str()), Some(&1));
        }
        // zero-class files still appear as packages
        assert!(model.packages.contains_key("empty.js"));
        assert!(model.packages["empty.js"].is_empty());
        // |edges| = sum of children counts
        let child_sum: usize = model.classes.values().map(|c| c.children.len()).sum();
        assert_eq!(model.edges.len(), child_sum);
        // edge duality
        for edge in &model.edges {
            assert_eq!(
                model.classes[&edge.subclass].superclass.as_deref(),
                Some(edge.superclass.as_str())
            );
            assert!(model.classes[&edge.superclass]
                .children
                .contains(&edge.subclass));
        }
    }

    #[test]
    fn extract_members_matches_batched_detection() {
        let src = "function A() { this.x = 1; this.run = function () {}; }\nA.prototype.go = function () {};\nA.prototype = { tag: 'a' };\nA.MAX = 9;\nvar a = new A();\n";
        let program = single(src);
        let (candidates, _) = collect_candidates(&program);
        let (attrs, methods) = extract_members(&candidates["A"], &program);
        let model = detect(&program);
        let class = &model.classes["A"];
        assert_eq!(attrs, class.attributes);
        assert_eq!(methods, class.methods);
    }

    #[test]
    fn detection_is_deterministic() {
        let program = single(LISTING_STYLE);
        let a = detect(&program);
        let b = detect(&program);
        assert_eq!(a, b);
    }

    #[test]
    fn instantiation_anywhere_counts_even_across_files() {
        let program = program_from(&[
            ("def.js", "function Widget() { this.id = 0; }\n"),
            ("use.js", "var w = new Widget();\n"),
        ]);
        let model = detect(&program);
        assert!(model.classes.contains_key("Widget"));
        assert_eq!(model.classes["Widget"].file, "def.js");
    }
}
