//! Java sources: tokenizer, parser and the resulting [`SyntaxView`].

pub mod lexer;
pub mod parser;
pub mod view;

pub use view::*;

use crate::error::{Error, Result};
use crate::project::{FileKind, SourceFile};

/// Parses a Java source file into its syntax view.
pub fn parse_java(file: &SourceFile) -> Result<SyntaxView> {
    debug_assert_eq!(file.kind, FileKind::JavaSource);
    parser::parse(&file.content).map_err(|e| file.parse_failure(e.offset, e.message))
}

#[doc(hidden)]
pub fn parse_java_bytes(path: &str, src: &[u8]) -> Result<SyntaxView> {
    parser::parse(src).map_err(|e| {
        let (line, column) = crate::span::LineIndex::new(src).line_col(e.offset.min(src.len()));
        Error::ParseFailure { file: path.to_string(), offset: e.offset, line, column, message: e.message }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::span::Span;

    fn parse(src: &str) -> SyntaxView {
        parse_java_bytes("T.java", src.as_bytes()).unwrap_or_else(|e| panic!("{e}"))
    }

    fn text(src: &str, s: Span) -> &str {
        &src[s.start..s.end]
    }

    fn in_method(body: &str) -> String {
        format!("package p;\nclass T extends Activity {{\n  void m() {{\n{body}\n  }}\n}}\n")
    }

    #[test]
    fn intent_instantiation_and_declaration() {
        let src = in_method("Intent i = new Intent(this, Foo.class);");
        let v = parse(&src);
        assert_eq!(v.instantiations.len(), 1);
        let inst = &v.instantiations[0];
        assert_eq!(inst.class_name, "Intent");
        assert_eq!(inst.argument_spans.len(), 2);
        assert_eq!(text(&src, inst.span), "new Intent(this, Foo.class)");
        assert_eq!(text(&src, inst.argument_spans[1]), "Foo.class");
        assert_eq!(v.var_decls.len(), 1);
        let d = &v.var_decls[0];
        assert_eq!((d.name.as_str(), d.declared_type_name.as_str()), ("i", "Intent"));
        assert_eq!(text(&src, d.statement_span), "Intent i = new Intent(this, Foo.class);");
        assert_eq!(d.init_core, Some(inst.span));
        assert_eq!(d.enclosing_method, Some(0));
        assert_eq!(v.method_descriptor(0), "T#m()");
    }

    #[test]
    fn close_on_final_cursor() {
        let src = in_method("final Cursor c = db.rawQuery(\"SELECT 1\", null);\nc.close();");
        let v = parse(&src);
        let close = v.invocations.iter().find(|i| i.method_name == "close").unwrap();
        assert_eq!(close.receiver_text, "c");
        assert!(close.is_statement_expression);
        assert_eq!(text(&src, close.call_span), "c.close()");
        let decl = &v.var_decls[0];
        assert!(decl.is_final);
        assert_eq!(decl.declared_type_name, "Cursor");
        let raw = v.invocations.iter().find(|i| i.method_name == "rawQuery").unwrap();
        assert_eq!(raw.receiver_text, "db");
        assert_eq!(v.string_literals[0].value, "SELECT 1");
    }

    #[test]
    fn generics_casts_and_shifts() {
        let src = in_method(
            "Map<String, List<Integer>> m = new HashMap<String, List<Integer>>();\n\
             int x = a >> 2 >>> b;\n\
             boolean lt = i < n && j > k;\n\
             Button b = (Button) findViewById(R.id.ok);\n\
             Object o = (x) + 1;\n\
             long l = (long) x;",
        );
        let v = parse(&src);
        let names: Vec<_> = v.var_decls.iter().map(|d| (d.name.as_str(), d.declared_type_name.as_str())).collect();
        assert_eq!(
            names,
            vec![("m", "Map"), ("x", "int"), ("lt", "boolean"), ("b", "Button"), ("o", "Object"), ("l", "long")]
        );
        let fv = v.invocations.iter().find(|i| i.method_name == "findViewById").unwrap();
        assert_eq!(v.var_decls[3].init_core, Some(fv.call_span));
        assert_eq!(text(&src, v.var_decls[3].init_span.unwrap()), "(Button) findViewById(R.id.ok)");
        assert_eq!(v.resource_refs.len(), 1);
        assert_eq!(v.resource_refs[0].name, "ok");
        assert_eq!(text(&src, v.resource_refs[0].name_span), "ok");
    }

    #[test]
    fn anonymous_listener_classes() {
        let src = "class A extends Activity {\n\
            @Override\n\
            protected void onCreate(Bundle s) {\n\
              super.onCreate(s);\n\
              b.setOnClickListener(new View.OnClickListener() {\n\
                @Override public void onClick(View v) { go(); }\n\
              });\n\
            }\n\
        }";
        let v = parse(src);
        assert_eq!(v.classes.len(), 2);
        assert_eq!(v.classes[1].kind, ClassKind::Anonymous);
        assert_eq!(v.classes[1].name, "View.OnClickListener");
        assert_eq!(v.classes[1].enclosing_class, Some(0));
        let on_click = v.methods.iter().position(|m| m.name == "onClick").unwrap();
        assert_eq!(v.methods[on_click].enclosing_class, 1);
        assert!(v.methods[on_click].is_override);
        assert_eq!(text(src, v.methods[on_click].body_span.unwrap()), "{ go(); }");
        let go = v.invocations.iter().find(|i| i.method_name == "go").unwrap();
        assert_eq!(go.enclosing_method, Some(on_click));
        assert_eq!(go.enclosing_class, Some(1));
        let set = v.invocations.iter().find(|i| i.method_name == "setOnClickListener").unwrap();
        assert_eq!(set.enclosing_method, Some(0));
        assert_eq!(v.classes[0].override_annotation_spans.len(), 1);
        assert_eq!(v.classes[1].override_annotation_spans.len(), 1);
        assert_eq!(v.class_chain(1).map(|c| c.name.as_str()).collect::<Vec<_>>(), vec!["View.OnClickListener", "A"]);
    }

    #[test]
    fn implements_clause() {
        let src = "public class Note extends Base implements Parcelable, java.io.Serializable {\n  @Override public int describeContents() { return 0; }\n}";
        let v = parse(src);
        let c = &v.classes[0];
        assert_eq!(
            c.implements.iter().map(|t| t.name.as_str()).collect::<Vec<_>>(),
            vec!["Parcelable", "java.io.Serializable"]
        );
        assert_eq!(text(src, c.implements_clause_span.unwrap()), "implements Parcelable, java.io.Serializable");
        assert_eq!(c.implements_clause_prefix, Some(src.find(" implements").unwrap()));
        assert_eq!(text(src, c.override_annotation_spans[0]), "@Override");
        assert_eq!(v.methods[0].return_type.as_deref(), Some("int"));
    }

    #[test]
    fn statements_and_contexts() {
        let src = in_method(
            "if (a) foo(); else { bar(); }\n\
             for (int i = 0; i < 3; i++) baz(i);\n\
             for (String s : list) { use(s); }\n\
             try (InputStream in = open()) { read(in); } catch (IOException | RuntimeException e) { log(e); } finally { done(); }\n\
             switch (k) { case 1: one(); break; default: other(); }\n\
             return compute();",
        );
        let v = parse(&src);
        let by_name = |n: &str| v.invocations.iter().find(|i| i.method_name == n).unwrap();
        let stmt = |n: &str| v.statement(by_name(n).statement).unwrap();
        assert!(!stmt("foo").in_block);
        assert!(stmt("bar").in_block);
        assert!(!stmt("baz").in_block);
        assert!(stmt("use").in_block);
        assert!(stmt("one").in_block);
        assert_eq!(stmt("compute").kind, StatementKind::Return);
        assert_eq!(stmt("open").kind, StatementKind::Control);
        let scopes: Vec<_> = v.var_decls.iter().map(|d| (d.name.as_str(), d.scope)).collect();
        assert_eq!(
            scopes,
            vec![
                ("i", VarScope::ForInit),
                ("s", VarScope::ForInit),
                ("in", VarScope::Resource),
                ("e", VarScope::Catch)
            ]
        );
        assert!(v.var_decls[2].is_final);
        assert_eq!(v.var_decls[3].declared_type_name, "IOException|RuntimeException");
    }

    #[test]
    fn assignments() {
        let src = in_method("this.button = (Button) findViewById(R.id.b);\nx += 1;\ny = z = 2;");
        let v = parse(&src);
        assert_eq!(v.assignments.len(), 3);
        let a = &v.assignments[0];
        assert_eq!((a.lhs_text.as_str(), a.lhs_name.as_str()), ("this.button", "button"));
        assert!(a.is_statement_expression);
        assert_eq!(text(&src, a.statement_span), "this.button = (Button) findViewById(R.id.b);");
        assert_eq!(text(&src, a.rhs_core), "findViewById(R.id.b)");
        // `y = z = 2`: only the outer assignment is the statement expression
        let outer = v.assignments.iter().find(|a| a.lhs_name == "y").unwrap();
        let inner = v.assignments.iter().find(|a| a.lhs_name == "z").unwrap();
        assert!(outer.is_statement_expression);
        assert!(!inner.is_statement_expression);
    }

    #[test]
    fn chained_calls_and_dereference() {
        let src = in_method(
            "new Intent(this, A.class).putExtra(\"k\", v);\nString s = getIntent().getStringExtra(\"k\").trim();",
        );
        let v = parse(&src);
        assert!(v.instantiations[0].is_dereferenced);
        let put = v.invocations.iter().find(|i| i.method_name == "putExtra").unwrap();
        assert_eq!(put.receiver_text, "new Intent(this, A.class)");
        assert_eq!(text(&src, put.call_span), "new Intent(this, A.class).putExtra(\"k\", v)");
        let get = v.invocations.iter().find(|i| i.method_name == "getStringExtra").unwrap();
        assert!(get.is_dereferenced);
        assert_eq!(get.receiver_text, "getIntent()");
    }

    #[test]
    fn lambdas_refs_and_enums() {
        let src = "enum Color { RED(1) { int f() { return 2; } }, GREEN(2); Color(int x) {} int f() { return 1; } }\n\
                   class U {\n\
                     Runnable r = () -> run(1);\n\
                     java.util.function.Function<String, Integer> f = s -> s.length();\n\
                     java.util.function.Supplier<java.util.List<String>> g = java.util.ArrayList::new;\n\
                     int[] arr = {1, 2, 3};\n\
                     int[][] grid = new int[3][];\n\
                     Class<?> k = int[].class;\n\
                     @interface Marker { String value() default \"x\"; }\n\
                   }";
        let v = parse(src);
        assert!(v.invocations.iter().any(|i| i.method_name == "run"));
        assert!(v.var_decls.iter().any(|d| d.name == "s" && d.scope == VarScope::LambdaParam));
        let fields: Vec<_> =
            v.var_decls.iter().filter(|d| d.scope == VarScope::Field).map(|d| d.name.as_str()).collect();
        assert_eq!(fields, vec!["r", "f", "g", "arr", "grid", "k"]);
        assert!(v.classes.iter().any(|c| c.kind == ClassKind::Annotation));
    }

    #[test]
    fn comments_and_strings_hide_calls() {
        let src = in_method("// findViewById(R.id.fake)\n/* close(); */ String s = \"rawQuery(x)\";");
        let v = parse(&src);
        assert!(v.invocations.is_empty());
        assert!(v.resource_refs.is_empty());
    }

    #[test]
    fn framework_resource_refs_are_skipped() {
        let v = parse(&in_method("int a = android.R.id.home; int b = R.id.mine;"));
        assert_eq!(v.resource_refs.iter().map(|r| r.name.as_str()).collect::<Vec<_>>(), vec!["mine"]);
    }

    #[test]
    fn generic_methods_and_varargs() {
        let src = "class G { public static <T extends Comparable<T>> T max(T... xs) { return xs[0]; }\n  <K, V> void put(Map<K, V> m) {} }";
        let v = parse(src);
        assert_eq!(v.methods[0].params[0].type_name, "T[]");
        assert_eq!(v.methods[0].return_type.as_deref(), Some("T"));
        assert_eq!(v.methods[1].params[0].type_name, "Map");
    }

    #[test]
    fn malformed_sources_fail_with_position() {
        let err = parse_java_bytes("Bad.java", b"class A {\n  void m( {\n}").unwrap_err();
        match err {
            crate::Error::ParseFailure { file, line, .. } => {
                assert_eq!(file, "Bad.java");
                assert_eq!(line, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_java_bytes("Bad.java", b"class A { void m() { int x = ; } }").is_err());
    }

    #[test]
    fn spans_slice_back_to_claimed_text() {
        let src = in_method("Uri u = Uri.parse(\"content://a\");\nu.toString();");
        let v = parse(&src);
        for inv in &v.invocations {
            if let Some(r) = inv.receiver_span {
                assert_eq!(text(&src, r), inv.receiver_text);
            }
            assert_eq!(text(&src, inv.name_span), inv.method_name);
        }
        for lit in &v.string_literals {
            assert_eq!(text(&src, lit.span), "\"content://a\"");
        }
    }
}
