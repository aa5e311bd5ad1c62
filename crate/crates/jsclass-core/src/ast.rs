//! Syntax-tree representation shared by the native parser and the ESTree
//! ingestion path, plus traversal and line-counting utilities.
//!
//! The node set is a deliberate ES5 subset: every construct the class
//! detector inspects is a first-class variant, and anything else survives as
//! an [`NodeKind::Opaque`] node whose children are still present in source
//! order, so traversal sees the whole tree even for syntax the model does
//! not distinguish.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

/// Half-open position range inside one source file.
///
/// Lines are 1-based, columns 0-based (the ESTree convention). A span of all
/// zeros is the "unknown" sentinel used when ESTree input carries no `loc`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct SourceSpan {
    /// 1-based line of the first character.
    pub start_line: u32,
    /// 0-based column of the first character.
    pub start_col: u32,
    /// 1-based line just past the node.
    pub end_line: u32,
    /// 0-based column just past the node.
    pub end_col: u32,
}

impl SourceSpan {
    /// Span used when the input provides no position information.
    pub const UNKNOWN: SourceSpan = SourceSpan {
        start_line: 0,
        start_col: 0,
        end_line: 0,
        end_col: 0,
    };

    /// Builds a span from start/end pairs.
    pub fn new(start_line: u32, start_col: u32, end_line: u32, end_col: u32) -> Self {
        SourceSpan {
            start_line,
            start_col,
            end_line,
            end_col,
        }
    }

    /// False for the [`SourceSpan::UNKNOWN`] sentinel.
    pub fn is_known(&self) -> bool {
        self.start_line >= 1
    }
}

/// Literal payload of a [`NodeKind::Literal`] node.
#[derive(Debug, Clone, PartialEq)]
pub enum LiteralValue {
    /// Numeric literal (decimal, hex, or legacy octal source forms).
    Number(f64),
    /// String literal with escapes decoded.
    Str(String),
    /// `true` / `false`.
    Boolean(bool),
    /// `null`.
    Null,
    /// Regular-expression literal, kept opaque.
    Regex {
        /// Pattern between the delimiting slashes, verbatim.
        pattern: String,
        /// Trailing flag characters.
        flags: String,
    },
}

/// Property kind inside an object literal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyKind {
    /// Plain `key: value`.
    Init,
    /// `get key() { ... }` accessor.
    Get,
    /// `set key(v) { ... }` accessor.
    Set,
}

/// One syntax-tree node: a kind with kind-specific children plus a span.
#[derive(Debug, Clone, PartialEq)]
pub struct AstNode {
    /// The node's variant and children.
    pub kind: NodeKind,
    /// Source range covered by the node.
    pub span: SourceSpan,
}

/// The supported node variants, mirroring the same-named ESTree types.
///
/// Child slots are typed so arity errors are unrepresentable: an
/// `AssignmentExpression` always has exactly one left and one right child.
#[derive(Debug, Clone, PartialEq)]
#[allow(missing_docs)] // variant fields mirror ESTree; names are the documentation
pub enum NodeKind {
    Program {
        body: Vec<AstNode>,
    },
    FunctionDeclaration {
        /// Always an `Identifier` node; declarations are named.
        id: Box<AstNode>,
        /// `Identifier` nodes in parameter order.
        params: Vec<AstNode>,
        body: Box<AstNode>,
    },
    FunctionExpression {
        /// Optional `Identifier` node for named function expressions.
        id: Option<Box<AstNode>>,
        /// `Identifier` nodes in parameter order.
        params: Vec<AstNode>,
        body: Box<AstNode>,
    },
    VariableDeclaration {
        declarations: Vec<AstNode>,
    },
    VariableDeclarator {
        /// The bound name, an `Identifier` node.
        id: Box<AstNode>,
        init: Option<Box<AstNode>>,
    },
    ExpressionStatement {
        expression: Box<AstNode>,
    },
    AssignmentExpression {
        operator: String,
        left: Box<AstNode>,
        right: Box<AstNode>,
    },
    MemberExpression {
        object: Box<AstNode>,
        property: Box<AstNode>,
        computed: bool,
    },
    NewExpression {
        callee: Box<AstNode>,
        arguments: Vec<AstNode>,
    },
    CallExpression {
        callee: Box<AstNode>,
        arguments: Vec<AstNode>,
    },
    ThisExpression,
    Identifier {
        name: String,
    },
    Literal {
        raw: String,
        value: LiteralValue,
    },
    ObjectExpression {
        properties: Vec<AstNode>,
    },
    Property {
        key: Box<AstNode>,
        value: Box<AstNode>,
        kind: PropertyKind,
    },
    ArrayExpression {
        /// `None` entries are elisions: `[1, , 3]`.
        elements: Vec<Option<AstNode>>,
    },
    ReturnStatement {
        argument: Option<Box<AstNode>>,
    },
    BlockStatement {
        body: Vec<AstNode>,
    },
    IfStatement {
        test: Box<AstNode>,
        consequent: Box<AstNode>,
        alternate: Option<Box<AstNode>>,
    },
    ForStatement {
        init: Option<Box<AstNode>>,
        test: Option<Box<AstNode>>,
        update: Option<Box<AstNode>>,
        body: Box<AstNode>,
    },
    WhileStatement {
        test: Box<AstNode>,
        body: Box<AstNode>,
    },
    BinaryExpression {
        operator: String,
        left: Box<AstNode>,
        right: Box<AstNode>,
    },
    LogicalExpression {
        operator: String,
        left: Box<AstNode>,
        right: Box<AstNode>,
    },
    UnaryExpression {
        operator: String,
        argument: Box<AstNode>,
    },
    UpdateExpression {
        operator: String,
        argument: Box<AstNode>,
        prefix: bool,
    },
    ConditionalExpression {
        test: Box<AstNode>,
        consequent: Box<AstNode>,
        alternate: Box<AstNode>,
    },
    SequenceExpression {
        expressions: Vec<AstNode>,
    },
    EmptyStatement,
    /// Any construct outside the subset. `estree_type` keeps the original
    /// ESTree type name; `children` hold every nested node in source order,
    /// so traversal and detection still see inside.
    Opaque {
        estree_type: String,
        children: Vec<AstNode>,
    },
}

impl AstNode {
    /// Shorthand constructor.
    pub fn new(kind: NodeKind, span: SourceSpan) -> Self {
        AstNode { kind, span }
    }

    /// The ESTree-style type name for this node.
    pub fn kind_name(&self) -> &str {
        match &self.kind {
            NodeKind::Program { .. } => "Program",
            NodeKind::FunctionDeclaration { .. } => "FunctionDeclaration",
            NodeKind::FunctionExpression { .. } => "FunctionExpression",
            NodeKind::VariableDeclaration { .. } => "VariableDeclaration",
            NodeKind::VariableDeclarator { .. } => "VariableDeclarator",
            NodeKind::ExpressionStatement { .. } => "ExpressionStatement",
            NodeKind::AssignmentExpression { .. } => "AssignmentExpression",
            NodeKind::MemberExpression { .. } => "MemberExpression",
            NodeKind::NewExpression { .. } => "NewExpression",
            NodeKind::CallExpression { .. } => "CallExpression",
            NodeKind::ThisExpression => "ThisExpression",
            NodeKind::Identifier { .. } => "Identifier",
            NodeKind::Literal { .. } => "Literal",
            NodeKind::ObjectExpression { .. } => "ObjectExpression",
            NodeKind::Property { .. } => "Property",
            NodeKind::ArrayExpression { .. } => "ArrayExpression",
            NodeKind::ReturnStatement { .. } => "ReturnStatement",
            NodeKind::BlockStatement { .. } => "BlockStatement",
            NodeKind::IfStatement { .. } => "IfStatement",
            NodeKind::ForStatement { .. } => "ForStatement",
            NodeKind::WhileStatement { .. } => "WhileStatement",
            NodeKind::BinaryExpression { .. } => "BinaryExpression",
            NodeKind::LogicalExpression { .. } => "LogicalExpression",
            NodeKind::UnaryExpression { .. } => "UnaryExpression",
            NodeKind::UpdateExpression { .. } => "UpdateExpression",
            NodeKind::ConditionalExpression { .. } => "ConditionalExpression",
            NodeKind::SequenceExpression { .. } => "SequenceExpression",
            NodeKind::EmptyStatement => "EmptyStatement",
            NodeKind::Opaque { estree_type, .. } => estree_type,
        }
    }

    /// Calls `f` on each direct child in source order.
    pub fn for_each_child<'a>(&'a self, f: &mut dyn FnMut(&'a AstNode)) {
        match &self.kind {
            NodeKind::Program { body } | NodeKind::BlockStatement { body } => {
                for c in body {
                    f(c);
                }
            }
            NodeKind::FunctionDeclaration { id, params, body } => {
                f(id);
                for c in params {
                    f(c);
                }
                f(body);
            }
            NodeKind::FunctionExpression { id, params, body } => {
                if let Some(id) = id {
                    f(id);
                }
                for c in params {
                    f(c);
                }
                f(body);
            }
            NodeKind::VariableDeclaration { declarations } => {
                for c in declarations {
                    f(c);
                }
            }
            NodeKind::VariableDeclarator { id, init } => {
                f(id);
                if let Some(init) = init {
                    f(init);
                }
            }
            NodeKind::ExpressionStatement { expression } => f(expression),
            NodeKind::AssignmentExpression { left, right, .. }
            | NodeKind::BinaryExpression { left, right, .. }
            | NodeKind::LogicalExpression { left, right, .. } => {
                f(left);
                f(right);
            }
            NodeKind::MemberExpression {
                object, property, ..
            } => {
                f(object);
                f(property);
            }
            NodeKind::NewExpression { callee, arguments }
            | NodeKind::CallExpression { callee, arguments } => {
                f(callee);
                for c in arguments {
                    f(c);
                }
            }
            NodeKind::ThisExpression
            | NodeKind::Identifier { .. }
            | NodeKind::Literal { .. }
            | NodeKind::EmptyStatement => {}
            NodeKind::ObjectExpression { properties } => {
                for c in properties {
                    f(c);
                }
            }
            NodeKind::Property { key, value, .. } => {
                f(key);
                f(value);
            }
            NodeKind::ArrayExpression { elements } => {
                for c in elements.iter().flatten() {
                    f(c);
                }
            }
            NodeKind::ReturnStatement { argument } => {
                if let Some(argument) = argument {
                    f(argument);
                }
            }
            NodeKind::IfStatement {
                test,
                consequent,
                alternate,
            } => {
                f(test);
                f(consequent);
                if let Some(alt) = alternate {
                    f(alt);
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
                    .for_each(|c| f(c));
                f(body);
            }
            NodeKind::WhileStatement { test, body } => {
                f(test);
                f(body);
            }
            NodeKind::UnaryExpression { argument, .. }
            | NodeKind::UpdateExpression { argument, .. } => f(argument),
            NodeKind::ConditionalExpression {
                test,
                consequent,
                alternate,
            } => {
                f(test);
                f(consequent);
                f(alternate);
            }
            NodeKind::SequenceExpression { expressions } => {
                for c in expressions {
                    f(c);
                }
            }
            NodeKind::Opaque { children, .. } => {
                for c in children {
                    f(c);
                }
            }
        }
    }

    /// The identifier name if this node is an `Identifier`.
    pub fn identifier_name(&self) -> Option<&str> {
        match &self.kind {
            NodeKind::Identifier { name } => Some(name),
            _ => None,
        }
    }

    /// Total node count of the subtree rooted here, including this node.
    pub fn node_count(&self) -> u64 {
        let mut count = 0;
        walk(self, &mut |_, _| count += 1);
        count
    }
}

/// Visits every node depth-first pre-order. The visitor receives each node
/// together with its ancestor chain, outermost first.
pub fn walk<'a>(root: &'a AstNode, visitor: &mut dyn FnMut(&'a AstNode, &[&'a AstNode])) {
    let mut ancestors: Vec<&AstNode> = Vec::new();
    walk_inner(root, visitor, &mut ancestors);
}

fn walk_inner<'a>(
    node: &'a AstNode,
    visitor: &mut dyn FnMut(&'a AstNode, &[&'a AstNode]),
    ancestors: &mut Vec<&'a AstNode>,
) {
    visitor(node, ancestors);
    ancestors.push(node);
    node.for_each_child(&mut |child| walk_inner(child, visitor, ancestors));
    ancestors.pop();
}

/// Structural equality ignoring spans: kinds, names, operators, literal
/// payloads, and child order must agree; positions may differ. Opaque nodes
/// compare by ESTree type name and (recursively) children, so trees built by
/// the native parser and by ESTree ingestion can be compared directly.
pub fn structural_eq(a: &AstNode, b: &AstNode) -> bool {
    fn opt_eq(a: &Option<Box<AstNode>>, b: &Option<Box<AstNode>>) -> bool {
        match (a, b) {
            (None, None) => true,
            (Some(x), Some(y)) => structural_eq(x, y),
            _ => false,
        }
    }
    fn seq_eq(a: &[AstNode], b: &[AstNode]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| structural_eq(x, y))
    }
    fn literal_eq(a: &LiteralValue, b: &LiteralValue) -> bool {
        match (a, b) {
            (LiteralValue::Number(x), LiteralValue::Number(y)) => {
                x == y || (x.is_nan() && y.is_nan())
            }
            _ => a == b,
        }
    }
    use NodeKind::*;
    match (&a.kind, &b.kind) {
        (Program { body: a }, Program { body: b }) => seq_eq(a, b),
        (
            FunctionDeclaration {
                id: an,
                params: ap,
                body: ab,
            },
            FunctionDeclaration {
                id: bn,
                params: bp,
                body: bb,
            },
        ) => structural_eq(an, bn) && seq_eq(ap, bp) && structural_eq(ab, bb),
        (
            FunctionExpression {
                id: an,
                params: ap,
                body: ab,
            },
            FunctionExpression {
                id: bn,
                params: bp,
                body: bb,
            },
        ) => opt_eq(an, bn) && seq_eq(ap, bp) && structural_eq(ab, bb),
        (VariableDeclaration { declarations: a }, VariableDeclaration { declarations: b }) => {
            seq_eq(a, b)
        }
        (VariableDeclarator { id: an, init: ai }, VariableDeclarator { id: bn, init: bi }) => {
            structural_eq(an, bn) && opt_eq(ai, bi)
        }
        (ExpressionStatement { expression: a }, ExpressionStatement { expression: b }) => {
            structural_eq(a, b)
        }
        (
            AssignmentExpression {
                operator: ao,
                left: al,
                right: ar,
            },
            AssignmentExpression {
                operator: bo,
                left: bl,
                right: br,
            },
        ) => ao == bo && structural_eq(al, bl) && structural_eq(ar, br),
        (
            MemberExpression {
                object: ao,
                property: ap,
                computed: ac,
            },
            MemberExpression {
                object: bo,
                property: bp,
                computed: bc,
            },
        ) => ac == bc && structural_eq(ao, bo) && structural_eq(ap, bp),
        (
            NewExpression {
                callee: ac,
                arguments: aa,
            },
            NewExpression {
                callee: bc,
                arguments: ba,
            },
        ) => structural_eq(ac, bc) && seq_eq(aa, ba),
        (
            CallExpression {
                callee: ac,
                arguments: aa,
            },
            CallExpression {
                callee: bc,
                arguments: ba,
            },
        ) => structural_eq(ac, bc) && seq_eq(aa, ba),
        (ThisExpression, ThisExpression) => true,
        (Identifier { name: a }, Identifier { name: b }) => a == b,
        (Literal { value: av, raw: ar }, Literal { value: bv, raw: br }) => {
            literal_eq(av, bv) && ar == br
        }
        (ObjectExpression { properties: a }, ObjectExpression { properties: b }) => seq_eq(a, b),
        (
            Property {
                key: ak,
                value: av,
                kind: akd,
            },
            Property {
                key: bk,
                value: bv,
                kind: bkd,
            },
        ) => akd == bkd && structural_eq(ak, bk) && structural_eq(av, bv),
        (ArrayExpression { elements: a }, ArrayExpression { elements: b }) => {
            a.len() == b.len()
                && a.iter().zip(b).all(|(x, y)| match (x, y) {
                    (None, None) => true,
                    (Some(x), Some(y)) => structural_eq(x, y),
                    _ => false,
                })
        }
        (ReturnStatement { argument: a }, ReturnStatement { argument: b }) => opt_eq(a, b),
        (BlockStatement { body: a }, BlockStatement { body: b }) => seq_eq(a, b),
        (
            IfStatement {
                test: at,
                consequent: ac,
                alternate: aa,
            },
            IfStatement {
                test: bt,
                consequent: bc,
                alternate: ba,
            },
        ) => structural_eq(at, bt) && structural_eq(ac, bc) && opt_eq(aa, ba),
        (
            ForStatement {
                init: ai,
                test: at,
                update: au,
                body: ab,
            },
            ForStatement {
                init: bi,
                test: bt,
                update: bu,
                body: bb,
            },
        ) => opt_eq(ai, bi) && opt_eq(at, bt) && opt_eq(au, bu) && structural_eq(ab, bb),
        (WhileStatement { test: at, body: ab }, WhileStatement { test: bt, body: bb }) => {
            structural_eq(at, bt) && structural_eq(ab, bb)
        }
        (
            BinaryExpression {
                operator: ao,
                left: al,
                right: ar,
            },
            BinaryExpression {
                operator: bo,
                left: bl,
                right: br,
            },
        ) => ao == bo && structural_eq(al, bl) && structural_eq(ar, br),
        (
            LogicalExpression {
                operator: ao,
                left: al,
                right: ar,
            },
            LogicalExpression {
                operator: bo,
                left: bl,
                right: br,
            },
        ) => ao == bo && structural_eq(al, bl) && structural_eq(ar, br),
        (
            UnaryExpression {
                operator: ao,
                argument: aa,
            },
            UnaryExpression {
                operator: bo,
                argument: ba,
            },
        ) => ao == bo && structural_eq(aa, ba),
        (
            UpdateExpression {
                operator: ao,
                argument: aa,
                prefix: ap,
            },
            UpdateExpression {
                operator: bo,
                argument: ba,
                prefix: bp,
            },
        ) => ao == bo && ap == bp && structural_eq(aa, ba),
        (
            ConditionalExpression {
                test: at,
                consequent: ac,
                alternate: aa,
            },
            ConditionalExpression {
                test: bt,
                consequent: bc,
                alternate: ba,
            },
        ) => structural_eq(at, bt) && structural_eq(ac, bc) && structural_eq(aa, ba),
        (SequenceExpression { expressions: a }, SequenceExpression { expressions: b }) => {
            seq_eq(a, b)
        }
        (EmptyStatement, EmptyStatement) => true,
        (
            Opaque {
                estree_type: at,
                children: ac,
            },
            Opaque {
                estree_type: bt,
                children: bc,
            },
        ) => at == bt && seq_eq(ac, bc),
        _ => false,
    }
}

/// One analyzed source file; in this tool a file is also the "package" unit
/// that groups classes in reports.
#[derive(Debug, Clone, PartialEq)]
pub struct SourceFile {
    /// Path relative to the analysis root, with `/` separators.
    pub path: String,
    /// Physical line count.
    pub raw_line_count: u32,
    /// Lines containing at least one token outside comments and whitespace.
    pub loc: u32,
    /// Root node, always of kind `Program`.
    pub root: AstNode,
}

/// The whole-program unit: every analyzed file, path-sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    /// Member files, sorted by path; paths are unique.
    pub files: Vec<SourceFile>,
    /// Sum of per-file `loc`.
    pub total_loc: u64,
    /// Sum of per-file `raw_line_count`.
    pub total_raw_lines: u64,
}

impl Program {
    /// Assembles a program, sorting files by path. Insertion order does not
    /// affect the result, so concurrent producers can feed this directly.
    pub fn assemble(mut files: Vec<SourceFile>) -> Program {
        files.sort_by(|a, b| a.path.cmp(&b.path));
        let total_loc = files.iter().map(|f| u64::from(f.loc)).sum();
        let total_raw_lines = files.iter().map(|f| u64::from(f.raw_line_count)).sum();
        Program {
            files,
            total_loc,
            total_raw_lines,
        }
    }
}

/// Counts `(raw_line_count, loc)` for a source text.
///
/// A "line" is a maximal newline-free segment; a trailing segment without a
/// final newline still counts. `loc` counts lines holding at least one
/// character that is neither whitespace nor inside a `//` or `/* */`
/// comment. Every line covered by a multi-line block comment is comment
/// content. The scan is purely lexical: it tracks string literals so
/// comment markers inside them do not count, but it does not recognize
/// regex literals, so a `//` inside a regex reads as a comment marker
/// (harmless for counting: such lines already contain code).
pub fn count_loc(source_text: &str) -> (u32, u32) {
    #[derive(PartialEq)]
    enum State {
        Code,
        LineComment,
        BlockComment,
        Str(char),
    }

    let mut raw = 0u32;
    let mut loc = 0u32;
    let mut state = State::Code;
    let mut line_has_code = false;
    let mut line_open = false;
    let mut chars = source_text.chars().peekable();

    while let Some(c) = chars.next() {
        line_open = true;
        match c {
            '\n' => {
                raw += 1;
                if line_has_code {
                    loc += 1;
                }
                line_has_code = false;
                line_open = false;
                if state == State::LineComment {
                    state = State::Code;
                }
                // Strings do not span raw newlines (continuations consume
                // the newline in the escape arm below), so recover here.
                if matches!(state, State::Str(_)) {
                    state = State::Code;
                }
                continue;
            }
            _ if c.is_whitespace() => continue,
            _ => {}
        }
        match state {
            State::Code => match c {
                '/' if chars.peek() == Some(&'/') => {
                    chars.next();
                    state = State::LineComment;
                }
                '/' if chars.peek() == Some(&'*') => {
                    chars.next();
                    state = State::BlockComment;
                }
                '\'' | '"' => {
                    line_has_code = true;
                    state = State::Str(c);
                }
                _ => line_has_code = true,
            },
            State::LineComment => {}
            State::BlockComment => {
                if c == '*' && chars.peek() == Some(&'/') {
                    chars.next();
                    state = State::Code;
                }
            }
            State::Str(quote) => {
                if c == '\\' {
                    if let Some(&next) = chars.peek() {
                        chars.next();
                        if next == '\n' {
                            raw += 1;
                            if line_has_code {
                                loc += 1;
                            }
                            // continuation: the next line holds string content
                            // once any character lands on it
                            line_has_code = true;
                            line_open = false;
                        }
                    }
                } else if c == quote {
                    state = State::Code;
                }
            }
        }
    }
    if line_open {
        raw += 1;
        if line_has_code {
            loc += 1;
        }
    }
    (raw, loc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn ident(name: &str) -> AstNode {
        AstNode::new(
            NodeKind::Identifier {
                name: name.to_string(),
            },
            SourceSpan::UNKNOWN,
        )
    }

    #[test]
    fn walk_visits_three_node_tree_in_preorder() {
        let program = AstNode::new(
            NodeKind::Program {
                body: vec![AstNode::new(
                    NodeKind::ExpressionStatement {
                        expression: Box::new(ident("x")),
                    },
                    SourceSpan::UNKNOWN,
                )],
            },
            SourceSpan::UNKNOWN,
        );
        let mut seen = Vec::new();
        walk(&program, &mut |node, ancestors| {
            seen.push((node.kind_name().to_string(), ancestors.len()));
        });
        assert_eq!(
            seen,
            vec![
                ("Program".to_string(), 0),
                ("ExpressionStatement".to_string(), 1),
                ("Identifier".to_string(), 2),
            ]
        );
    }

    #[test]
    fn walk_visits_empty_program_once() {
        let program = AstNode::new(NodeKind::Program { body: vec![] }, SourceSpan::UNKNOWN);
        let mut visits = 0;
        walk(&program, &mut |_, _| visits += 1);
        assert_eq!(visits, 1);
    }

    #[test]
    fn walk_reports_correct_ancestor_chain() {
        let inner = AstNode::new(
            NodeKind::AssignmentExpression {
                operator: "=".to_string(),
                left: Box::new(ident("a")),
                right: Box::new(ident("b")),
            },
            SourceSpan::UNKNOWN,
        );
        let program = AstNode::new(
            NodeKind::Program {
                body: vec![AstNode::new(
                    NodeKind::ExpressionStatement {
                        expression: Box::new(inner),
                    },
                    SourceSpan::UNKNOWN,
                )],
            },
            SourceSpan::UNKNOWN,
        );
        walk(&program, &mut |node, ancestors| {
            if node.identifier_name().is_some() {
                let chain: Vec<&str> = ancestors.iter().map(|a| a.kind_name()).collect();
                assert_eq!(
                    chain,
                    vec!["Program", "ExpressionStatement", "AssignmentExpression"]
                );
            }
        });
    }

    #[test]
    fn count_loc_empty() {
        assert_eq!(count_loc(""), (0, 0));
    }

    #[test]
    fn count_loc_code_blank_comment() {
        assert_eq!(count_loc("var x = 1;\n\n// note\n"), (3, 1));
    }

    #[test]
    fn count_loc_no_trailing_newline() {
        assert_eq!(count_loc("var a = 1;"), (1, 1));
        assert_eq!(count_loc("var a = 1;\nvar b = 2;"), (2, 2));
    }

    #[test]
    fn count_loc_block_comment_covers_lines() {
        assert_eq!(count_loc("/* one\n two\n three */\nvar x = 1;\n"), (4, 1));
        // code before the comment still counts on the opening line
        assert_eq!(
            count_loc("var a = 1; /* start\n still comment */\n"),
            (2, 1)
        );
    }

    #[test]
    fn count_loc_comment_markers_inside_strings() {
        assert_eq!(count_loc("var u = 'http://x';\n"), (1, 1));
        assert_eq!(count_loc("var s = \"/* not */\";\nvar t = 2;\n"), (2, 2));
    }

    #[test]
    fn count_loc_trailing_line_comment() {
        assert_eq!(count_loc("var a = 1; // note\n// only\n"), (2, 1));
    }

    #[test]
    fn count_loc_whitespace_only_lines() {
        assert_eq!(count_loc("   \n\t\nvar x = 1;\n"), (3, 1));
    }

    #[test]
    fn program_assemble_sorts_and_totals() {
        let mk = |path: &str, loc: u32, raw: u32| SourceFile {
            path: path.to_string(),
            raw_line_count: raw,
            loc,
            root: AstNode::new(NodeKind::Program { body: vec![] }, SourceSpan::UNKNOWN),
        };
        let program = Program::assemble(vec![mk("b.js", 5, 8), mk("a.js", 3, 4)]);
        assert_eq!(program.files[0].path, "a.js");
        assert_eq!(program.files[1].path, "b.js");
        assert_eq!(program.total_loc, 8);
        assert_eq!(program.total_raw_lines, 12);
    }

    #[test]
    fn node_count_counts_subtree() {
        let program = AstNode::new(
            NodeKind::Program {
                body: vec![AstNode::new(
                    NodeKind::ArrayExpression {
                        elements: vec![Some(ident("a")), None, Some(ident("b"))],
                    },
                    SourceSpan::UNKNOWN,
                )],
            },
            SourceSpan::UNKNOWN,
        );
        assert_eq!(program.node_count(), 4);
    }
}
