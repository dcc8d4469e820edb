//! Syntactic views over Java sources and XML resources.

pub mod java;
pub mod xml;

pub use java::{parse_java, SyntaxView};
pub use xml::{parse_xml, XmlView};
