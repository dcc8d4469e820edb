//! The query surface over a parsed Java file.
//!
//! Every construct is located by byte [`Span`]s into the original file.
//! Cross references (`enclosing_class`, `enclosing_method`, `statement`)
//! are indices into the sibling vectors of the same [`SyntaxView`].

use serde::{Deserialize, Serialize};

use crate::span::Span;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyntaxView {
    pub package: Option<String>,
    pub imports: Vec<String>,
    pub classes: Vec<ClassDecl>,
    pub methods: Vec<MethodDecl>,
    pub statements: Vec<Statement>,
    pub invocations: Vec<Invocation>,
    pub instantiations: Vec<Instantiation>,
    pub var_decls: Vec<VarDecl>,
    pub assignments: Vec<Assignment>,
    pub string_literals: Vec<StringLiteral>,
    /// `R.<kind>.<name>` references, excluding the framework's `android.R`.
    pub resource_refs: Vec<ResourceRef>,
    /// Lambda expressions, parameters through body.
    pub lambdas: Vec<Span>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassKind {
    Class,
    Interface,
    Enum,
    Annotation,
    Anonymous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeRef {
    /// Type text with whitespace and generic arguments removed, e.g. `java.io.Serializable`.
    pub name: String,
    pub span: Span,
}

impl TypeRef {
    pub fn simple_name(&self) -> &str {
        simple_name(&self.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDecl {
    /// Declared name; for anonymous classes, the instantiated type.
    pub name: String,
    pub kind: ClassKind,
    pub extends: Vec<TypeRef>,
    pub implements: Vec<TypeRef>,
    /// From the `implements` keyword through the last listed type.
    pub implements_clause_span: Option<Span>,
    /// End of the token preceding `implements`.
    pub implements_clause_prefix: Option<usize>,
    /// `@Override` annotations on methods declared directly in this class.
    pub override_annotation_spans: Vec<Span>,
    pub body_span: Span,
    pub span: Span,
    pub enclosing_class: Option<usize>,
    pub enclosing_method: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub type_name: String,
    pub name: String,
    pub is_final: bool,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodDecl {
    pub name: String,
    /// `None` for constructors.
    pub return_type: Option<String>,
    pub params: Vec<Param>,
    /// Including the braces; `None` for abstract and interface methods.
    pub body_span: Option<Span>,
    pub enclosing_class: usize,
    pub is_override: bool,
    pub override_span: Option<Span>,
    pub span: Span,
}

impl MethodDecl {
    pub fn parameter_types(&self) -> Vec<&str> {
        self.params.iter().map(|p| p.type_name.as_str()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StatementKind {
    Expression,
    LocalVar,
    Return,
    Throw,
    Block,
    Control,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statement {
    pub kind: StatementKind,
    pub span: Span,
    /// Directly inside a `{}` block or a switch group, so sibling
    /// statements may be inserted before or after it.
    pub in_block: bool,
    pub enclosing_method: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invocation {
    pub receiver_text: String,
    pub receiver_span: Option<Span>,
    pub method_name: String,
    pub name_span: Span,
    pub argument_spans: Vec<Span>,
    /// Receiver start through the closing parenthesis.
    pub call_span: Span,
    /// The call is the entire expression of an expression statement.
    pub is_statement_expression: bool,
    /// The call result is dereferenced (`call().x`, `call()[i]`).
    pub is_dereferenced: bool,
    pub statement: Option<usize>,
    pub enclosing_method: Option<usize>,
    pub enclosing_class: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instantiation {
    /// As written, generic arguments removed (`Intent`, `java.util.Date`).
    pub class_name: String,
    pub argument_spans: Vec<Span>,
    /// `new` through the closing parenthesis, excluding any anonymous body.
    pub span: Span,
    pub anonymous_body: Option<Span>,
    pub is_dereferenced: bool,
    pub statement: Option<usize>,
    pub enclosing_method: Option<usize>,
    pub enclosing_class: Option<usize>,
}

impl Instantiation {
    pub fn simple_name(&self) -> &str {
        simple_name(&self.class_name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VarScope {
    Field,
    Local,
    ForInit,
    Resource,
    Catch,
    LambdaParam,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarDecl {
    pub name: String,
    pub declared_type_name: String,
    pub is_final: bool,
    pub scope: VarScope,
    pub name_span: Span,
    pub init_span: Option<Span>,
    /// The initializer with enclosing casts and parentheses stripped.
    pub init_core: Option<Span>,
    pub statement_span: Span,
    pub statement: Option<usize>,
    pub enclosing_method: Option<usize>,
    pub enclosing_class: Option<usize>,
}

impl VarDecl {
    pub fn simple_type_name(&self) -> &str {
        simple_name(&self.declared_type_name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub lhs_text: String,
    /// Last identifier of the left-hand side (`this.button` → `button`).
    pub lhs_name: String,
    pub lhs_span: Span,
    pub rhs_span: Span,
    pub rhs_core: Span,
    pub statement_span: Span,
    pub statement: Option<usize>,
    pub is_statement_expression: bool,
    pub enclosing_method: Option<usize>,
    pub enclosing_class: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringLiteral {
    pub value: String,
    /// Including the quotes.
    pub span: Span,
    pub enclosing_method: Option<usize>,
    pub enclosing_class: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResourceRef {
    pub kind: String,
    pub name: String,
    /// The whole `R.kind.name` expression.
    pub span: Span,
    pub name_span: Span,
}

/// Last dotted segment of a (possibly qualified) type name.
pub fn simple_name(name: &str) -> &str {
    name.rsplit('.').next().unwrap_or(name)
}

impl SyntaxView {
    /// Classes enclosing `class` lexically, innermost first, starting with `class` itself.
    pub fn class_chain(&self, class: usize) -> impl Iterator<Item = &ClassDecl> + '_ {
        std::iter::successors(Some(class), move |&c| self.classes[c].enclosing_class).map(move |c| &self.classes[c])
    }

    /// `Class#method(T1,T2)` style descriptor for diagnostics and PFP metadata.
    pub fn method_descriptor(&self, method: usize) -> String {
        let m = &self.methods[method];
        format!("{}#{}({})", self.classes[m.enclosing_class].name, m.name, m.parameter_types().join(","))
    }

    pub fn statement(&self, idx: Option<usize>) -> Option<&Statement> {
        idx.map(|i| &self.statements[i])
    }

    /// Every local, parameter, and catch/lambda name visible anywhere in `method`.
    pub fn names_in_method(&self, method: usize) -> Vec<&str> {
        let mut names: Vec<&str> = self.methods[method].params.iter().map(|p| p.name.as_str()).collect();
        names.extend(self.var_decls.iter().filter(|v| v.enclosing_method == Some(method)).map(|v| v.name.as_str()));
        names
    }
}
