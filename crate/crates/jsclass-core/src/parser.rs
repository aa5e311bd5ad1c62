//! Recursive-descent parser for an ES5 subset, producing [`crate::ast`]
//! trees directly from source text.
//!
//! The subset covers every construct the class detector inspects as typed
//! nodes. Statements outside the subset that still matter for seeing the
//! whole tree (`switch`, `try`, `for..in`, `do..while`, labels, `throw`,
//! `break`/`continue`, `with`, `debugger`) are parsed structurally into
//! [`NodeKind::Opaque`] nodes whose children appear in source order, so
//! nothing inside them is hidden from traversal. Only genuinely
//! unrecognized syntax falls back to panic-mode recovery: the parser skips
//! a balanced token group, records a warning, and keeps going.
//!
//! Automatic semicolon insertion follows the offending-token rule: a
//! statement may end without `;` at `}`, at end of input, or before a token
//! preceded by a line terminator. The restricted productions (`return`,
//! `throw`, `break`, `continue`, postfix `++`/`--`) honor the no-newline
//! constraint.

use crate::ast::{
    count_loc, AstNode, LiteralValue, NodeKind, PropertyKind, SourceFile, SourceSpan,
};
use crate::diag::{DiagCode, Diagnostic, Severity};
use crate::lexer::{decode_number_literal, decode_string_literal, tokenize, Token, TokenKind};
use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Why parsing failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorCode {
    /// Malformed input: bad token sequence or unbalanced brackets.
    Syntax,
    /// Recognizably foreign syntax the recovery could not step over.
    UnsupportedSyntax,
}

/// A hard parse failure; the file produced no tree.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    /// Failure class.
    pub code: ParseErrorCode,
    /// Description naming the offending token.
    pub message: String,
    /// First offending position.
    pub span: SourceSpan,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}:{}",
            self.message, self.span.start_line, self.span.start_col
        )
    }
}

/// Successful parse of one file.
#[derive(Debug)]
pub struct ParseResult {
    /// Root node of kind `Program`.
    pub root: AstNode,
    /// Warnings recorded during recovery.
    pub diagnostics: Vec<Diagnostic>,
    /// Number of statements represented as `Opaque` nodes (both the
    /// structured non-subset statements and panic-mode recoveries).
    pub opaque_statement_count: u32,
}

/// Parses a token stream (which must end with an eof token) into a tree.
pub fn parse(tokens: Vec<Token>, path: &str) -> Result<ParseResult, ParseError> {
    let mut parser = Parser {
        tokens,
        pos: 0,
        path: path.to_owned(),
        diagnostics: Vec::new(),
        opaque_statements: 0,
    };
    let root = parser.parse_program()?;
    Ok(ParseResult {
        root,
        diagnostics: parser.diagnostics,
        opaque_statement_count: parser.opaque_statements,
    })
}

/// Tokenizes and parses source text, returning the assembled [`SourceFile`]
/// (with line counts) plus any recovery warnings.
pub fn parse_source(
    source_text: &str,
    path: &str,
) -> Result<(SourceFile, Vec<Diagnostic>), ParseError> {
    let tokens = tokenize(source_text).map_err(|e| ParseError {
        code: ParseErrorCode::Syntax,
        message: e.message,
        span: e.span,
    })?;
    let result = parse(tokens, path)?;
    let (raw_line_count, loc) = count_loc(source_text);
    Ok((
        SourceFile {
            path: path.to_owned(),
            raw_line_count,
            loc,
            root: result.root,
        },
        result.diagnostics,
    ))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    path: String,
    diagnostics: Vec<Diagnostic>,
    opaque_statements: u32,
}

impl Parser {
    fn cur(&self) -> &Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn peek(&self) -> &Token {
        &self.tokens[(self.pos + 1).min(self.tokens.len() - 1)]
    }

    fn at_eof(&self) -> bool {
        self.cur().kind == TokenKind::Eof
    }

    fn advance(&mut self) -> Token {
        let t = self.cur().clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn at_punct(&self, p: &str) -> bool {
        let t = self.cur();
        t.kind == TokenKind::Punctuator && t.text == p
    }

    fn at_keyword(&self, k: &str) -> bool {
        let t = self.cur();
        t.kind == TokenKind::Keyword && t.text == k
    }

    fn eat_punct(&mut self, p: &str) -> bool {
        if self.at_punct(p) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect_punct(&mut self, p: &str) -> Result<Token, ParseError> {
        if self.at_punct(p) {
            Ok(self.advance())
        } else {
            Err(self.syntax_error(&format!("expected '{}'", p)))
        }
    }

    fn syntax_error(&self, what: &str) -> ParseError {
        let t = self.cur();
        let shown = if t.kind == TokenKind::Eof {
            "end of input"
        } else {
            t.text.as_str()
        };
        ParseError {
            code: ParseErrorCode::Syntax,
            message: format!("{}, found '{}'", what, shown),
            span: t.span,
        }
    }

    /// Start position of the current token, for span assembly.
    fn start(&self) -> SourceSpan {
        self.cur().span
    }

    /// Span from `start` to the end of the previously consumed token.
    fn finish(&self, start: SourceSpan) -> SourceSpan {
        let prev = &self.tokens[self.pos.saturating_sub(1)];
        SourceSpan::new(
            start.start_line,
            start.start_col,
            prev.span.end_line,
            prev.span.end_col,
        )
    }

    /// Statement terminator with automatic semicolon insertion.
    fn consume_semicolon(&mut self) -> Result<(), ParseError> {
        if self.eat_punct(";") {
            return Ok(());
        }
        if self.at_punct("}") || self.at_eof() || self.cur().preceded_by_newline {
            return Ok(());
        }
        Err(self.syntax_error("expected ';'"))
    }

    fn parse_program(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        let body = self.parse_statement_list(None)?;
        let span = if body.is_empty() {
            SourceSpan::new(1, 0, 1, 0)
        } else {
            self.finish(start)
        };
        Ok(AstNode::new(NodeKind::Program { body }, span))
    }

    /// Parses statements until `terminator` (or eof when `None`), recovering
    /// from statement-level errors by skipping a balanced token group.
    fn parse_statement_list(
        &mut self,
        terminator: Option<&str>,
    ) -> Result<Vec<AstNode>, ParseError> {
        let mut body = Vec::new();
        loop {
            if self.at_eof() {
                break;
            }
            if let Some(t) = terminator {
                if self.at_punct(t) {
                    break;
                }
            }
            let before = self.pos;
            match self.parse_statement() {
                Ok(stmt) => body.push(stmt),
                Err(err) => {
                    self.pos = before;
                    let recovered = self.recover_statement(&err)?;
                    body.push(recovered);
                }
            }
        }
        Ok(body)
    }

    /// Panic-mode recovery: skip a balanced token group up to a statement
    /// boundary and stand in an `Opaque` node, with a warning.
    fn recover_statement(&mut self, err: &ParseError) -> Result<AstNode, ParseError> {
        let start = self.start();
        let before = self.pos;
        let mut depth = 0u32;
        while !self.at_eof() {
            let t = self.cur();
            if t.kind == TokenKind::Punctuator {
                match t.text.as_str() {
                    "(" | "[" | "{" => depth += 1,
                    ")" | "]" | "}" => {
                        if depth == 0 {
                            break; // closes an enclosing group; leave it
                        }
                        depth -= 1;
                    }
                    ";" if depth == 0 => {
                        self.advance();
                        break;
                    }
                    _ => {}
                }
            } else if depth == 0 && t.preceded_by_newline && self.pos > before {
                break;
            }
            self.advance();
        }
        if self.pos == before {
            // No progress possible; surface the original error.
            return Err(ParseError {
                code: ParseErrorCode::UnsupportedSyntax,
                message: err.message.clone(),
                span: err.span,
            });
        }
        self.opaque_statements += 1;
        self.diagnostics.push(
            Diagnostic::new(
                Severity::Warning,
                DiagCode::UnsupportedSyntax,
                format!("skipped unparsable statement ({})", err.message),
            )
            .with_file(&self.path)
            .with_span(err.span),
        );
        Ok(AstNode::new(
            NodeKind::Opaque {
                estree_type: "Unparsed".to_string(),
                children: Vec::new(),
            },
            self.finish(start),
        ))
    }

    fn parse_statement(&mut self) -> Result<AstNode, ParseError> {
        let t = self.cur();
        match t.kind {
            TokenKind::Punctuator if t.text == "{" => self.parse_block(),
            TokenKind::Punctuator if t.text == ";" => {
                let start = self.start();
                self.advance();
                Ok(AstNode::new(NodeKind::EmptyStatement, self.finish(start)))
            }
            TokenKind::Keyword => match t.text.as_str() {
                "var" => self.parse_var_statement(),
                "function" => self.parse_function(true),
                "if" => self.parse_if(),
                "for" => self.parse_for(),
                "while" => self.parse_while(),
                "do" => self.parse_do_while(),
                "return" => self.parse_return(),
                "switch" => self.parse_switch(),
                "try" => self.parse_try(),
                "throw" => self.parse_throw(),
                "break" | "continue" => self.parse_break_continue(),
                "with" => self.parse_with(),
                "debugger" => self.parse_debugger(),
                _ => self.parse_expression_statement(),
            },
            TokenKind::Identifier
                if self.peek().kind == TokenKind::Punctuator && self.peek().text == ":" =>
            {
                self.parse_labeled()
            }
            _ => self.parse_expression_statement(),
        }
    }

    fn parse_block(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.expect_punct("{")?;
        let body = self.parse_statement_list(Some("}"))?;
        self.expect_punct("}")?;
        Ok(AstNode::new(
            NodeKind::BlockStatement { body },
            self.finish(start),
        ))
    }

    fn parse_var_statement(&mut self) -> Result<AstNode, ParseError> {
        let decl = self.parse_var_declaration(true)?;
        self.consume_semicolon()?;
        Ok(decl)
    }

    /// `var` declarator list, without the terminating semicolon (shared with
    /// `for` headers).
    fn parse_var_declaration(&mut self, allow_in: bool) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // var
        let mut declarations = Vec::new();
        loop {
            let d_start = self.start();
            let id = Box::new(self.expect_identifier_node("variable name")?);
            let init = if self.eat_punct("=") {
                Some(Box::new(self.parse_assignment(allow_in)?))
            } else {
                None
            };
            declarations.push(AstNode::new(
                NodeKind::VariableDeclarator { id, init },
                self.finish(d_start),
            ));
            if !self.eat_punct(",") {
                break;
            }
        }
        Ok(AstNode::new(
            NodeKind::VariableDeclaration { declarations },
            self.finish(start),
        ))
    }

    fn expect_identifier(&mut self, what: &str) -> Result<String, ParseError> {
        if self.cur().kind == TokenKind::Identifier {
            Ok(self.advance().text)
        } else {
            Err(self.syntax_error(&format!("expected {}", what)))
        }
    }

    /// Like [`Parser::expect_identifier`] but yields an `Identifier` node
    /// spanning the token, for binding positions that are tree children.
    fn expect_identifier_node(&mut self, what: &str) -> Result<AstNode, ParseError> {
        if self.cur().kind == TokenKind::Identifier {
            let t = self.advance();
            Ok(AstNode::new(NodeKind::Identifier { name: t.text }, t.span))
        } else {
            Err(self.syntax_error(&format!("expected {}", what)))
        }
    }

    fn parse_function(&mut self, declaration: bool) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // function
        let id = if self.cur().kind == TokenKind::Identifier {
            let t = self.advance();
            Some(Box::new(AstNode::new(
                NodeKind::Identifier { name: t.text },
                t.span,
            )))
        } else if declaration {
            return Err(self.syntax_error("expected function name"));
        } else {
            None
        };
        let params = self.parse_params()?;
        let body = Box::new(self.parse_block()?);
        let span = self.finish(start);
        if declaration {
            Ok(AstNode::new(
                NodeKind::FunctionDeclaration {
                    id: id.expect("checked above"),
                    params,
                    body,
                },
                span,
            ))
        } else {
            Ok(AstNode::new(
                NodeKind::FunctionExpression { id, params, body },
                span,
            ))
        }
    }

    fn parse_params(&mut self) -> Result<Vec<AstNode>, ParseError> {
        self.expect_punct("(")?;
        let mut params = Vec::new();
        if !self.at_punct(")") {
            loop {
                params.push(self.expect_identifier_node("parameter name")?);
                if !self.eat_punct(",") {
                    break;
                }
            }
        }
        self.expect_punct(")")?;
        Ok(params)
    }

    fn parse_if(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // if
        self.expect_punct("(")?;
        let test = Box::new(self.parse_expression(true)?);
        self.expect_punct(")")?;
        let consequent = Box::new(self.parse_statement()?);
        let alternate = if self.at_keyword("else") {
            self.advance();
            Some(Box::new(self.parse_statement()?))
        } else {
            None
        };
        Ok(AstNode::new(
            NodeKind::IfStatement {
                test,
                consequent,
                alternate,
            },
            self.finish(start),
        ))
    }

    fn parse_for(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // for
        self.expect_punct("(")?;

        let init: Option<AstNode> = if self.at_punct(";") {
            None
        } else if self.at_keyword("var") {
            Some(self.parse_var_declaration(false)?)
        } else {
            Some(self.parse_expression(false)?)
        };

        if self.at_keyword("in") {
            let left = init.ok_or_else(|| self.syntax_error("expected for-in target"))?;
            self.advance(); // in
            let right = self.parse_expression(true)?;
            self.expect_punct(")")?;
            let body = self.parse_statement()?;
            self.opaque_statements += 1;
            return Ok(AstNode::new(
                NodeKind::Opaque {
                    estree_type: "ForInStatement".to_string(),
                    children: alloc::vec![left, right, body],
                },
                self.finish(start),
            ));
        }

        self.expect_punct(";")?;
        let test = if self.at_punct(";") {
            None
        } else {
            Some(Box::new(self.parse_expression(true)?))
        };
        self.expect_punct(";")?;
        let update = if self.at_punct(")") {
            None
        } else {
            Some(Box::new(self.parse_expression(true)?))
        };
        self.expect_punct(")")?;
        let body = Box::new(self.parse_statement()?);
        Ok(AstNode::new(
            NodeKind::ForStatement {
                init: init.map(Box::new),
                test,
                update,
                body,
            },
            self.finish(start),
        ))
    }

    fn parse_while(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // while
        self.expect_punct("(")?;
        let test = Box::new(self.parse_expression(true)?);
        self.expect_punct(")")?;
        let body = Box::new(self.parse_statement()?);
        Ok(AstNode::new(
            NodeKind::WhileStatement { test, body },
            self.finish(start),
        ))
    }

    fn parse_do_while(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // do
        let body = self.parse_statement()?;
        if !self.at_keyword("while") {
            return Err(self.syntax_error("expected 'while'"));
        }
        self.advance();
        self.expect_punct("(")?;
        let test = self.parse_expression(true)?;
        self.expect_punct(")")?;
        // ES5 inserts a semicolon after do..while even without a newline.
        self.eat_punct(";");
        self.opaque_statements += 1;
        Ok(AstNode::new(
            NodeKind::Opaque {
                estree_type: "DoWhileStatement".to_string(),
                children: alloc::vec![body, test],
            },
            self.finish(start),
        ))
    }

    fn parse_return(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // return
                        // Restricted production: a newline after `return` ends the statement.
        let argument = if self.at_punct(";")
            || self.at_punct("}")
            || self.at_eof()
            || self.cur().preceded_by_newline
        {
            None
        } else {
            Some(Box::new(self.parse_expression(true)?))
        };
        self.consume_semicolon()?;
        Ok(AstNode::new(
            NodeKind::ReturnStatement { argument },
            self.finish(start),
        ))
    }

    fn parse_switch(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // switch
        self.expect_punct("(")?;
        let discriminant = self.parse_expression(true)?;
        self.expect_punct(")")?;
        self.expect_punct("{")?;
        let mut children = alloc::vec![discriminant];
        while !self.at_punct("}") && !self.at_eof() {
            let case_start = self.start();
            let mut case_children = Vec::new();
            if self.at_keyword("case") {
                self.advance();
                case_children.push(self.parse_expression(true)?);
            } else if self.at_keyword("default") {
                self.advance();
            } else {
                return Err(self.syntax_error("expected 'case' or 'default'"));
            }
            self.expect_punct(":")?;
            while !self.at_punct("}")
                && !self.at_keyword("case")
                && !self.at_keyword("default")
                && !self.at_eof()
            {
                let before = self.pos;
                match self.parse_statement() {
                    Ok(stmt) => case_children.push(stmt),
                    Err(err) => {
                        self.pos = before;
                        case_children.push(self.recover_statement(&err)?);
                    }
                }
            }
            children.push(AstNode::new(
                NodeKind::Opaque {
                    estree_type: "SwitchCase".to_string(),
                    children: case_children,
                },
                self.finish(case_start),
            ));
        }
        self.expect_punct("}")?;
        self.opaque_statements += 1;
        Ok(AstNode::new(
            NodeKind::Opaque {
                estree_type: "SwitchStatement".to_string(),
                children,
            },
            self.finish(start),
        ))
    }

    fn parse_try(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // try
        let block = self.parse_block()?;
        let mut children = alloc::vec![block];
        let mut clauses = 0;
        if self.at_keyword("catch") {
            let c_start = self.start();
            self.advance();
            self.expect_punct("(")?;
            let p_span = self.cur().span;
            let param = self.expect_identifier("catch parameter")?;
            self.expect_punct(")")?;
            let body = self.parse_block()?;
            children.push(AstNode::new(
                NodeKind::Opaque {
                    estree_type: "CatchClause".to_string(),
                    children: alloc::vec![
                        AstNode::new(NodeKind::Identifier { name: param }, p_span),
                        body
                    ],
                },
                self.finish(c_start),
            ));
            clauses += 1;
        }
        if self.at_keyword("finally") {
            self.advance();
            children.push(self.parse_block()?);
            clauses += 1;
        }
        if clauses == 0 {
            return Err(self.syntax_error("expected 'catch' or 'finally'"));
        }
        self.opaque_statements += 1;
        Ok(AstNode::new(
            NodeKind::Opaque {
                estree_type: "TryStatement".to_string(),
                children,
            },
            self.finish(start),
        ))
    }

    fn parse_throw(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // throw
        if self.cur().preceded_by_newline {
            return Err(self.syntax_error("expected expression after 'throw'"));
        }
        let argument = self.parse_expression(true)?;
        self.consume_semicolon()?;
        self.opaque_statements += 1;
        Ok(AstNode::new(
            NodeKind::Opaque {
                estree_type: "ThrowStatement".to_string(),
                children: alloc::vec![argument],
            },
            self.finish(start),
        ))
    }

    fn parse_break_continue(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        let kw = self.advance(); // break | continue
        let mut children = Vec::new();
        // Restricted production: the label must follow on the same line.
        if self.cur().kind == TokenKind::Identifier && !self.cur().preceded_by_newline {
            let t = self.advance();
            children.push(AstNode::new(NodeKind::Identifier { name: t.text }, t.span));
        }
        self.consume_semicolon()?;
        self.opaque_statements += 1;
        let estree_type = if kw.text == "break" {
            "BreakStatement"
        } else {
            "ContinueStatement"
        };
        Ok(AstNode::new(
            NodeKind::Opaque {
                estree_type: estree_type.to_string(),
                children,
            },
            self.finish(start),
        ))
    }

    fn parse_with(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // with
        self.expect_punct("(")?;
        let object = self.parse_expression(true)?;
        self.expect_punct(")")?;
        let body = self.parse_statement()?;
        self.opaque_statements += 1;
        Ok(AstNode::new(
            NodeKind::Opaque {
                estree_type: "WithStatement".to_string(),
                children: alloc::vec![object, body],
            },
            self.finish(start),
        ))
    }

    fn parse_debugger(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.advance(); // debugger
        self.consume_semicolon()?;
        self.opaque_statements += 1;
        Ok(AstNode::new(
            NodeKind::Opaque {
                estree_type: "DebuggerStatement".to_string(),
                children: Vec::new(),
            },
            self.finish(start),
        ))
    }

    fn parse_labeled(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        let label = self.advance();
        self.expect_punct(":")?;
        let body = self.parse_statement()?;
        self.opaque_statements += 1;
        Ok(AstNode::new(
            NodeKind::Opaque {
                estree_type: "LabeledStatement".to_string(),
                children: alloc::vec![
                    AstNode::new(
                        NodeKind::Identifier {
                            name: label.text.clone(),
                        },
                        label.span,
                    ),
                    body
                ],
            },
            self.finish(start),
        ))
    }

    fn parse_expression_statement(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        let expression = Box::new(self.parse_expression(true)?);
        self.consume_semicolon()?;
        Ok(AstNode::new(
            NodeKind::ExpressionStatement { expression },
            self.finish(start),
        ))
    }

    /// Expression including the comma operator.
    fn parse_expression(&mut self, allow_in: bool) -> Result<AstNode, ParseError> {
        let start = self.start();
        let first = self.parse_assignment(allow_in)?;
        if !self.at_punct(",") {
            return Ok(first);
        }
        let mut expressions = alloc::vec![first];
        while self.eat_punct(",") {
            expressions.push(self.parse_assignment(allow_in)?);
        }
        Ok(AstNode::new(
            NodeKind::SequenceExpression { expressions },
            self.finish(start),
        ))
    }

    fn parse_assignment(&mut self, allow_in: bool) -> Result<AstNode, ParseError> {
        let start = self.start();
        let left = self.parse_conditional(allow_in)?;
        let t = self.cur();
        let is_assign_op = t.kind == TokenKind::Punctuator
            && matches!(
                t.text.as_str(),
                "=" | "+="
                    | "-="
                    | "*="
                    | "/="
                    | "%="
                    | "<<="
                    | ">>="
                    | ">>>="
                    | "&="
                    | "|="
                    | "^="
            );
        if !is_assign_op {
            return Ok(left);
        }
        if !matches!(
            left.kind,
            NodeKind::Identifier { .. } | NodeKind::MemberExpression { .. }
        ) {
            return Err(self.syntax_error("invalid assignment target"));
        }
        let operator = self.advance().text;
        let right = Box::new(self.parse_assignment(allow_in)?);
        Ok(AstNode::new(
            NodeKind::AssignmentExpression {
                operator,
                left: Box::new(left),
                right,
            },
            self.finish(start),
        ))
    }

    fn parse_conditional(&mut self, allow_in: bool) -> Result<AstNode, ParseError> {
        let start = self.start();
        let test = self.parse_binary(1, allow_in)?;
        if !self.eat_punct("?") {
            return Ok(test);
        }
        // The branch before ':' always re-allows `in`.
        let consequent = Box::new(self.parse_assignment(true)?);
        self.expect_punct(":")?;
        let alternate = Box::new(self.parse_assignment(allow_in)?);
        Ok(AstNode::new(
            NodeKind::ConditionalExpression {
                test: Box::new(test),
                consequent,
                alternate,
            },
            self.finish(start),
        ))
    }

    /// Binary operator precedence, or 0 for non-operators.
    fn binary_prec(&self, allow_in: bool) -> (u8, bool) {
        let t = self.cur();
        if t.kind == TokenKind::Keyword {
            return match t.text.as_str() {
                "in" if allow_in => (7, false),
                "instanceof" => (7, false),
                _ => (0, false),
            };
        }
        if t.kind != TokenKind::Punctuator {
            return (0, false);
        }
        match t.text.as_str() {
            "||" => (1, true),
            "&&" => (2, true),
            "|" => (3, false),
            "^" => (4, false),
            "&" => (5, false),
            "==" | "!=" | "===" | "!==" => (6, false),
            "<" | ">" | "<=" | ">=" => (7, false),
            "<<" | ">>" | ">>>" => (8, false),
            "+" | "-" => (9, false),
            "*" | "/" | "%" => (10, false),
            _ => (0, false),
        }
    }

    fn parse_binary(&mut self, min_prec: u8, allow_in: bool) -> Result<AstNode, ParseError> {
        let start = self.start();
        let mut left = self.parse_unary()?;
        loop {
            let (prec, logical) = self.binary_prec(allow_in);
            if prec == 0 || prec < min_prec {
                return Ok(left);
            }
            let operator = self.advance().text;
            let right = Box::new(self.parse_binary(prec + 1, allow_in)?);
            let kind = if logical {
                NodeKind::LogicalExpression {
                    operator,
                    left: Box::new(left),
                    right,
                }
            } else {
                NodeKind::BinaryExpression {
                    operator,
                    left: Box::new(left),
                    right,
                }
            };
            left = AstNode::new(kind, self.finish(start));
        }
    }

    fn parse_unary(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        let t = self.cur();
        let unary_op = match t.kind {
            TokenKind::Punctuator if matches!(t.text.as_str(), "+" | "-" | "!" | "~") => true,
            TokenKind::Keyword if matches!(t.text.as_str(), "delete" | "void" | "typeof") => true,
            _ => false,
        };
        if unary_op {
            let operator = self.advance().text;
            let argument = Box::new(self.parse_unary()?);
            return Ok(AstNode::new(
                NodeKind::UnaryExpression { operator, argument },
                self.finish(start),
            ));
        }
        if self.at_punct("++") || self.at_punct("--") {
            let operator = self.advance().text;
            let argument = Box::new(self.parse_unary()?);
            return Ok(AstNode::new(
                NodeKind::UpdateExpression {
                    operator,
                    argument,
                    prefix: true,
                },
                self.finish(start),
            ));
        }
        let expr = self.parse_member_or_new(true)?;
        // Postfix update: restricted production, no newline before the
        // operator.
        if (self.at_punct("++") || self.at_punct("--")) && !self.cur().preceded_by_newline {
            let operator = self.advance().text;
            return Ok(AstNode::new(
                NodeKind::UpdateExpression {
                    operator,
                    argument: Box::new(expr),
                    prefix: false,
                },
                self.finish(start),
            ));
        }
        Ok(expr)
    }

    /// LeftHandSideExpression: primary/new with member-access and call
    /// chains. With `allow_call` false (inside a `new` callee), call
    /// parentheses bind to the `new` instead.
    fn parse_member_or_new(&mut self, allow_call: bool) -> Result<AstNode, ParseError> {
        let start = self.start();
        let mut node = if self.at_keyword("new") {
            self.advance();
            let callee = self.parse_member_or_new(false)?;
            let arguments = if self.at_punct("(") {
                self.parse_arguments()?
            } else {
                Vec::new()
            };
            AstNode::new(
                NodeKind::NewExpression {
                    callee: Box::new(callee),
                    arguments,
                },
                self.finish(start),
            )
        } else {
            self.parse_primary()?
        };
        loop {
            if self.at_punct(".") {
                self.advance();
                let prop = self.parse_identifier_name()?;
                node = AstNode::new(
                    NodeKind::MemberExpression {
                        object: Box::new(node),
                        property: Box::new(prop),
                        computed: false,
                    },
                    self.finish(start),
                );
            } else if self.at_punct("[") {
                self.advance();
                let prop = self.parse_expression(true)?;
                self.expect_punct("]")?;
                node = AstNode::new(
                    NodeKind::MemberExpression {
                        object: Box::new(node),
                        property: Box::new(prop),
                        computed: true,
                    },
                    self.finish(start),
                );
            } else if allow_call && self.at_punct("(") {
                let arguments = self.parse_arguments()?;
                node = AstNode::new(
                    NodeKind::CallExpression {
                        callee: Box::new(node),
                        arguments,
                    },
                    self.finish(start),
                );
            } else {
                return Ok(node);
            }
        }
    }

    /// After `.`, any identifier name is a valid property, including
    /// reserved words (`a.delete`).
    fn parse_identifier_name(&mut self) -> Result<AstNode, ParseError> {
        let t = self.cur();
        match t.kind {
            TokenKind::Identifier | TokenKind::Keyword | TokenKind::Boolean | TokenKind::Null => {
                let t = self.advance();
                Ok(AstNode::new(NodeKind::Identifier { name: t.text }, t.span))
            }
            _ => Err(self.syntax_error("expected property name")),
        }
    }

    fn parse_arguments(&mut self) -> Result<Vec<AstNode>, ParseError> {
        self.expect_punct("(")?;
        let mut arguments = Vec::new();
        if !self.at_punct(")") {
            loop {
                arguments.push(self.parse_assignment(true)?);
                if !self.eat_punct(",") {
                    break;
                }
            }
        }
        self.expect_punct(")")?;
        Ok(arguments)
    }

    fn parse_primary(&mut self) -> Result<AstNode, ParseError> {
        let t = self.cur().clone();
        match t.kind {
            TokenKind::Punctuator if t.text == "(" => {
                self.advance();
                let expr = self.parse_expression(true)?;
                self.expect_punct(")")?;
                Ok(expr)
            }
            TokenKind::Punctuator if t.text == "[" => self.parse_array(),
            TokenKind::Punctuator if t.text == "{" => self.parse_object(),
            TokenKind::Keyword if t.text == "function" => self.parse_function(false),
            TokenKind::Keyword if t.text == "this" => {
                self.advance();
                Ok(AstNode::new(NodeKind::ThisExpression, t.span))
            }
            TokenKind::Identifier => {
                self.advance();
                Ok(AstNode::new(NodeKind::Identifier { name: t.text }, t.span))
            }
            TokenKind::Number => {
                self.advance();
                Ok(AstNode::new(
                    NodeKind::Literal {
                        value: LiteralValue::Number(decode_number_literal(&t.text)),
                        raw: t.text,
                    },
                    t.span,
                ))
            }
            TokenKind::String => {
                self.advance();
                Ok(AstNode::new(
                    NodeKind::Literal {
                        value: LiteralValue::Str(decode_string_literal(&t.text)),
                        raw: t.text,
                    },
                    t.span,
                ))
            }
            TokenKind::Boolean => {
                self.advance();
                Ok(AstNode::new(
                    NodeKind::Literal {
                        value: LiteralValue::Boolean(t.text == "true"),
                        raw: t.text,
                    },
                    t.span,
                ))
            }
            TokenKind::Null => {
                self.advance();
                Ok(AstNode::new(
                    NodeKind::Literal {
                        value: LiteralValue::Null,
                        raw: t.text,
                    },
                    t.span,
                ))
            }
            TokenKind::Regex => {
                self.advance();
                let body_end = t.text.rfind('/').expect("regex lexeme has closing slash");
                Ok(AstNode::new(
                    NodeKind::Literal {
                        value: LiteralValue::Regex {
                            pattern: t.text[1..body_end].to_string(),
                            flags: t.text[body_end + 1..].to_string(),
                        },
                        raw: t.text,
                    },
                    t.span,
                ))
            }
            _ => Err(self.syntax_error("unexpected token")),
        }
    }

    fn parse_array(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.expect_punct("[")?;
        let mut elements = Vec::new();
        while !self.at_punct("]") {
            if self.eat_punct(",") {
                elements.push(None); // elision
                continue;
            }
            elements.push(Some(self.parse_assignment(true)?));
            if !self.at_punct("]") {
                self.expect_punct(",")?;
            }
        }
        self.expect_punct("]")?;
        Ok(AstNode::new(
            NodeKind::ArrayExpression { elements },
            self.finish(start),
        ))
    }

    fn parse_object(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        self.expect_punct("{")?;
        let mut properties = Vec::new();
        while !self.at_punct("}") {
            properties.push(self.parse_property()?);
            if !self.eat_punct(",") {
                break;
            }
        }
        self.expect_punct("}")?;
        Ok(AstNode::new(
            NodeKind::ObjectExpression { properties },
            self.finish(start),
        ))
    }

    fn property_key_token(&self) -> bool {
        matches!(
            self.cur().kind,
            TokenKind::Identifier
                | TokenKind::Keyword
                | TokenKind::Boolean
                | TokenKind::Null
                | TokenKind::String
                | TokenKind::Number
        )
    }

    fn parse_property_key(&mut self) -> Result<AstNode, ParseError> {
        let t = self.cur().clone();
        match t.kind {
            TokenKind::Identifier | TokenKind::Keyword | TokenKind::Boolean | TokenKind::Null => {
                self.advance();
                Ok(AstNode::new(NodeKind::Identifier { name: t.text }, t.span))
            }
            TokenKind::String => {
                self.advance();
                Ok(AstNode::new(
                    NodeKind::Literal {
                        value: LiteralValue::Str(decode_string_literal(&t.text)),
                        raw: t.text,
                    },
                    t.span,
                ))
            }
            TokenKind::Number => {
                self.advance();
                Ok(AstNode::new(
                    NodeKind::Literal {
                        value: LiteralValue::Number(decode_number_literal(&t.text)),
                        raw: t.text,
                    },
                    t.span,
                ))
            }
            _ => Err(self.syntax_error("expected property name")),
        }
    }

    fn parse_property(&mut self) -> Result<AstNode, ParseError> {
        let start = self.start();
        let t = self.cur();
        // `get`/`set` are contextual: they start an accessor only when a
        // property name follows.
        if t.kind == TokenKind::Identifier && (t.text == "get" || t.text == "set") {
            let is_get = t.text == "get";
            let save = self.pos;
            self.advance();
            if self.property_key_token() {
                let key = self.parse_property_key()?;
                let f_start = self.start();
                let params = self.parse_params()?;
                let body = Box::new(self.parse_block()?);
                let value = AstNode::new(
                    NodeKind::FunctionExpression {
                        id: None,
                        params,
                        body,
                    },
                    self.finish(f_start),
                );
                return Ok(AstNode::new(
                    NodeKind::Property {
                        key: Box::new(key),
                        value: Box::new(value),
                        kind: if is_get {
                            PropertyKind::Get
                        } else {
                            PropertyKind::Set
                        },
                    },
                    self.finish(start),
                ));
            }
            self.pos = save;
        }
        let key = self.parse_property_key()?;
        self.expect_punct(":")?;
        let value = self.parse_assignment(true)?;
        Ok(AstNode::new(
            NodeKind::Property {
                key: Box::new(key),
                value: Box::new(value),
                kind: PropertyKind::Init,
            },
            self.finish(start),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::walk;

    fn parse_ok(src: &str) -> AstNode {
        let (file, diags) = parse_source(src, "test.js").expect("parses");
        assert!(diags.is_empty(), "unexpected diagnostics: {diags:?}");
        file.root
    }

    fn kind_names(root: &AstNode) -> Vec<String> {
        let mut names = Vec::new();
        walk(root, &mut |n, _| names.push(n.kind_name().to_string()));
        names
    }

    #[test]
    fn empty_program() {
        let root = parse_ok("");
        assert!(matches!(&root.kind, NodeKind::Program { body } if body.is_empty()));
    }

    #[test]
    fn var_declaration_multi() {
        let root = parse_ok("var a = 1, b, c = 'x';");
        let names = kind_names(&root);
        assert_eq!(
            names.iter().filter(|n| *n == "VariableDeclarator").count(),
            3
        );
    }

    #[test]
    fn function_declaration_shape() {
        let root = parse_ok("function add(x, y) { return x + y; }");
        let NodeKind::Program { body } = &root.kind else {
            panic!("not a program")
        };
        let NodeKind::FunctionDeclaration { id, params, body } = &body[0].kind else {
            panic!("not a function declaration")
        };
        assert_eq!(id.identifier_name(), Some("add"));
        let param_names: Vec<_> = params.iter().map(|p| p.identifier_name()).collect();
        assert_eq!(param_names, [Some("x"), Some("y")]);
        assert!(id.span.is_known() && params.iter().all(|p| p.span.is_known()));
        assert!(matches!(body.kind, NodeKind::BlockStatement { .. }));
    }

    #[test]
    fn asi_splits_statements() {
        let root = parse_ok("function f(){}\nf()");
        let NodeKind::Program { body } = &root.kind else {
            panic!("not a program")
        };
        assert_eq!(body.len(), 2);
    }

    #[test]
    fn asi_needs_newline_between_statements() {
        // Without a line terminator the second `var` is an offending token;
        // recovery replaces the statement and records a warning.
        let (file, diags) = parse_source("var a = 1 var b = 2", "t.js").expect("recovers");
        assert!(!diags.is_empty());
        let names = kind_names(&file.root);
        assert!(names.contains(&"Unparsed".to_string()));
        assert!(!names.contains(&"VariableDeclaration".to_string()));
    }

    #[test]
    fn return_restricted_production() {
        let root = parse_ok("function f() {\n  return\n  1;\n}");
        let mut returns_with_arg = 0;
        let mut bare_returns = 0;
        walk(&root, &mut |n, _| {
            if let NodeKind::ReturnStatement { argument } = &n.kind {
                if argument.is_some() {
                    returns_with_arg += 1;
                } else {
                    bare_returns += 1;
                }
            }
        });
        assert_eq!(bare_returns, 1);
        assert_eq!(returns_with_arg, 0);
    }

    #[test]
    fn postfix_update_restricted_production() {
        // `i\n++j` must parse as expression `i` then prefix `++j`.
        let root = parse_ok("i\n++j");
        let mut prefix_count = 0;
        let mut postfix_count = 0;
        walk(&root, &mut |n, _| {
            if let NodeKind::UpdateExpression { prefix, .. } = &n.kind {
                if *prefix {
                    prefix_count += 1;
                } else {
                    postfix_count += 1;
                }
            }
        });
        assert_eq!((prefix_count, postfix_count), (1, 0));
    }

    #[test]
    fn precedence_mul_over_add() {
        let root = parse_ok("var r = 1 + 2 * 3;");
        let mut found = false;
        walk(&root, &mut |n, _| {
            if let NodeKind::BinaryExpression {
                operator, right, ..
            } = &n.kind
            {
                if operator == "+" {
                    assert!(
                        matches!(&right.kind, NodeKind::BinaryExpression { operator, .. } if operator == "*")
                    );
                    found = true;
                }
            }
        });
        assert!(found);
    }

    #[test]
    fn new_binds_member_chain() {
        let root = parse_ok("var x = new a.b.C(1);");
        let mut news = 0;
        walk(&root, &mut |n, _| {
            if let NodeKind::NewExpression { callee, arguments } = &n.kind {
                news += 1;
                assert!(matches!(callee.kind, NodeKind::MemberExpression { .. }));
                assert_eq!(arguments.len(), 1);
            }
        });
        assert_eq!(news, 1);
    }

    #[test]
    fn new_without_arguments() {
        let root = parse_ok("var x = new Thing;");
        let mut seen = false;
        walk(&root, &mut |n, _| {
            if let NodeKind::NewExpression { arguments, .. } = &n.kind {
                assert!(arguments.is_empty());
                seen = true;
            }
        });
        assert!(seen);
    }

    #[test]
    fn call_after_new_is_separate() {
        // `new (pick())()` : callee is the parenthesized call.
        let root = parse_ok("var a = new (pick())();");
        let mut seen = false;
        walk(&root, &mut |n, _| {
            if let NodeKind::NewExpression { callee, .. } = &n.kind {
                assert!(matches!(callee.kind, NodeKind::CallExpression { .. }));
                seen = true;
            }
        });
        assert!(seen);
    }

    #[test]
    fn object_literal_with_accessors() {
        let root = parse_ok("var o = { get a() { return 1; }, set a(v) {}, b: 2 };");
        let mut kinds = Vec::new();
        walk(&root, &mut |n, _| {
            if let NodeKind::Property { kind, .. } = &n.kind {
                kinds.push(*kind);
            }
        });
        assert_eq!(
            kinds,
            alloc::vec![PropertyKind::Get, PropertyKind::Set, PropertyKind::Init]
        );
    }

    #[test]
    fn get_as_plain_key_still_works() {
        let root = parse_ok("var o = { get: 1, set: f };");
        let mut inits = 0;
        walk(&root, &mut |n, _| {
            if let NodeKind::Property { kind, .. } = &n.kind {
                assert_eq!(*kind, PropertyKind::Init);
                inits += 1;
            }
        });
        assert_eq!(inits, 2);
    }

    #[test]
    fn listing_style_singleton_shape() {
        let root = parse_ok(
            "var person = { firstName:\"John\", lastName:\"Doe\", birthDate: \"01-01-2000\", getAge: function () { return 25; } };",
        );
        let NodeKind::Program { body } = &root.kind else {
            panic!("not a program")
        };
        let NodeKind::VariableDeclaration { declarations } = &body[0].kind else {
            panic!("not a var declaration")
        };
        let NodeKind::VariableDeclarator { init, .. } = &declarations[0].kind else {
            panic!("not a declarator")
        };
        let NodeKind::ObjectExpression { properties } = &init.as_ref().expect("has init").kind
        else {
            panic!("not an object")
        };
        assert_eq!(properties.len(), 4);
    }

    #[test]
    fn switch_becomes_structured_opaque() {
        let root = parse_ok("switch (x) { case 1: f(); break; default: g(); }");
        let names = kind_names(&root);
        assert!(names.contains(&"SwitchStatement".to_string()));
        assert!(names.contains(&"SwitchCase".to_string()));
        // children visible: the calls inside cases are in the tree
        assert_eq!(names.iter().filter(|n| *n == "CallExpression").count(), 2);
    }

    #[test]
    fn try_catch_finally_structured() {
        let root = parse_ok("try { a(); } catch (e) { b(e); } finally { c(); }");
        let names = kind_names(&root);
        assert!(names.contains(&"TryStatement".to_string()));
        assert!(names.contains(&"CatchClause".to_string()));
        assert_eq!(names.iter().filter(|n| *n == "CallExpression").count(), 3);
    }

    #[test]
    fn for_in_structured() {
        let root = parse_ok("for (var k in obj) { use(k); }");
        let names = kind_names(&root);
        assert!(names.contains(&"ForInStatement".to_string()));
        assert!(names.contains(&"VariableDeclaration".to_string()));
    }

    #[test]
    fn labeled_break_structured() {
        let root = parse_ok("outer: for (;;) { break outer; }");
        let names = kind_names(&root);
        assert!(names.contains(&"LabeledStatement".to_string()));
        assert!(names.contains(&"BreakStatement".to_string()));
    }

    #[test]
    fn do_while_optional_semicolon() {
        let root = parse_ok("do f(); while (x)\ng();");
        let NodeKind::Program { body } = &root.kind else {
            panic!("not a program")
        };
        assert_eq!(body.len(), 2);
    }

    #[test]
    fn unknown_syntax_recovers_with_warning() {
        let (file, diags) =
            parse_source("var a = 1;\ncase 5:\nvar b = 2;", "t.js").expect("recovers");
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, DiagCode::UnsupportedSyntax);
        let names = kind_names(&file.root);
        assert!(names.contains(&"Unparsed".to_string()));
        // both surrounding declarations survive
        assert_eq!(
            names.iter().filter(|n| *n == "VariableDeclaration").count(),
            2
        );
    }

    #[test]
    fn unbalanced_group_recovers_as_opaque() {
        // A dropped `)` swallows the rest of the group; recovery skips the
        // balanced remainder instead of looping or failing hard.
        let (file, diags) = parse_source("function f() { if (a { } }", "t.js").expect("recovers");
        assert!(!diags.is_empty());
        assert!(diags.iter().all(|d| d.code == DiagCode::UnsupportedSyntax));
        let names = kind_names(&file.root);
        assert!(names.contains(&"Unparsed".to_string()));
        assert!(!names.contains(&"FunctionDeclaration".to_string()));
    }

    #[test]
    fn stray_closer_is_hard_error() {
        // A `}` with no open group gives recovery nothing to skip.
        let err = parse_source("var a = 1;\n}", "t.js").expect_err("must fail");
        assert_eq!(err.code, ParseErrorCode::UnsupportedSyntax);
    }

    #[test]
    fn illegal_character_is_hard_error() {
        let err = parse_source("var a = 1;\n@decorator", "t.js").expect_err("must fail");
        assert_eq!(err.code, ParseErrorCode::Syntax);
    }

    #[test]
    fn determinism_same_text_same_tree() {
        let src = "function A(){this.x=1;}\nA.prototype.m=function(){return 1;};\nvar a=new A();";
        let a = parse_ok(src);
        let b = parse_ok(src);
        assert_eq!(a, b);
    }

    #[test]
    fn line_counts_populated() {
        let (file, _) =
            parse_source("var a = 1;\n\n// note\nvar b = 2;\n", "t.js").expect("parses");
        assert_eq!(file.raw_line_count, 4);
        assert_eq!(file.loc, 2);
    }

    #[test]
    fn sequence_and_trailing_commas() {
        parse_ok("var a = (1, 2, 3);");
        parse_ok("var b = [1, 2, ];");
        parse_ok("var c = { x: 1, y: 2, };");
        parse_ok("var d = [1, , 3];");
    }

    #[test]
    fn regex_in_statement_position_contexts() {
        parse_ok("var re = /a/; if (s.match(/b/)) { f(/c/, x / 2); }");
    }

    #[test]
    fn keyword_member_and_keys() {
        parse_ok("a.delete(); var o = { if: 1, in: 2 }; b.new.target2 = 3;");
    }
}
