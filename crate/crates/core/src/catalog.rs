//! The Android mutation operator catalog as static data.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Category {
    #[serde(rename = "A/I")]
    ActivityIntent,
    #[serde(rename = "AP")]
    AndroidProgramming,
    #[serde(rename = "BES")]
    BackEndServices,
    #[serde(rename = "C")]
    Connectivity,
    #[serde(rename = "D")]
    Data,
    #[serde(rename = "DB")]
    Database,
    #[serde(rename = "GP")]
    GeneralProgramming,
    #[serde(rename = "GUI")]
    Gui,
    #[serde(rename = "I/O")]
    Io,
    #[serde(rename = "NFR")]
    NonFunctional,
}

impl Category {
    pub fn code(self) -> &'static str {
        match self {
            Category::ActivityIntent => "A/I",
            Category::AndroidProgramming => "AP",
            Category::BackEndServices => "BES",
            Category::Connectivity => "C",
            Category::Data => "D",
            Category::Database => "DB",
            Category::GeneralProgramming => "GP",
            Category::Gui => "GUI",
            Category::Io => "I/O",
            Category::NonFunctional => "NFR",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Detection {
    #[serde(rename = "AST")]
    Ast,
    #[serde(rename = "Text")]
    Text,
}

impl fmt::Display for Detection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Detection::Ast => "AST",
            Detection::Text => "Text",
        })
    }
}

macro_rules! operators {
    ($($variant:ident),* $(,)?) => {
        /// Identifier of an implemented operator.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum OperatorId {
            $($variant),*
        }

        impl OperatorId {
            pub const ALL: &'static [OperatorId] = &[$(OperatorId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(OperatorId::$variant => stringify!($variant)),*
                }
            }
        }

        impl FromStr for OperatorId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $(stringify!($variant) => Ok(OperatorId::$variant),)*
                    _ => Err(unknown_operator(s)),
                }
            }
        }
    };
}

operators! {
    ActivityNotDefined,
    DifferentActivityIntentDefinition,
    InvalidActivityName,
    InvalidKeyIntentPutExtra,
    InvalidLabel,
    NullIntent,
    NullValueIntentPutExtra,
    WrongMainActivity,
    MissingPermissionManifest,
    NotParcelable,
    NullGPSLocation,
    SDKVersion,
    WrongStringResource,
    NullBackEndServiceReturn,
    BluetoothAdapterAlwaysEnabled,
    NullBluetoothAdapter,
    InvalidURI,
    ClosingNullCursor,
    InvalidIndexQueryParameter,
    InvalidSQLQuery,
    InvalidDate,
    NotSerializable,
    BuggyGUIListener,
    FindViewByIdReturnsNull,
    InvalidColor,
    InvalidIDFindView,
    ViewComponentNotVisible,
    InvalidFilePath,
    NullInputStream,
    NullOutputStream,
    LengthyBackEndService,
    LengthyGUICreation,
    LengthyGUIListener,
    LongConnectionTimeOut,
    OOMLargeImage,
}

/// Operators that appear in the taxonomy but have no implementation.
pub const UNIMPLEMENTED: &[&str] = &["InvalidMethodCallArgument", "NullMethodCallArgument", "InvalidViewFocus"];

fn unknown_operator(id: &str) -> Error {
    let reason =
        UNIMPLEMENTED.contains(&id).then(|| "operator is part of the taxonomy but is not implemented".to_string());
    Error::UnknownOperator { id: id.to_string(), reason }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for OperatorId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for OperatorId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Delay injected by the Lengthy* operators, in milliseconds.
pub const LONG_DELAY_MS: u32 = 5000;
/// Suffix appended by string-mutating operators.
pub const MUTANT_SUFFIX: &str = "_mutant";
/// Prefix injected into file paths and URIs.
pub const INVALID_PATH_PREFIX: &str = "/invalid_path/";
/// Bitmap dimension injected by OOMLargeImage.
pub const LARGE_BITMAP_DIMENSION: u32 = 10000;
/// Inclusive range for seeded SDK versions.
pub const SDK_VERSION_RANGE: (u32, u32) = (1, 35);
pub const RANDOM_LABEL_LEN: usize = 8;
pub const CONNECT_TIMEOUT_FACTOR: u32 = 100;
pub const CONNECT_TIMEOUT_FALLBACK: u32 = 1_000_000;

/// Listener callbacks targeted by the GUI listener operators.
pub const GUI_LISTENER_METHODS: &[&str] = &["onClick", "onLongClick", "onItemClick", "onTouch", "onKey"];
/// Methods considered back-end calls when invoked on a client-like receiver.
pub const BACKEND_METHODS: &[&str] = &["execute", "openConnection", "getInputStream", "getResponse", "send"];
/// Receiver type name fragments that mark a client-like receiver.
pub const BACKEND_RECEIVER_HINTS: &[&str] = &["Http", "Url", "URL", "Client"];
pub const FILE_CONSTRUCTORS: &[&str] =
    &["File", "FileInputStream", "FileOutputStream", "FileReader", "FileWriter", "RandomAccessFile"];
pub const FILE_OPENERS: &[&str] = &["openFileInput", "openFileOutput", "getFileStreamPath", "deleteFile"];
pub const SQL_METHODS: &[&str] = &["rawQuery", "execSQL"];
pub const SDK_ATTRIBUTES: &[&str] = &["minSdkVersion", "targetSdkVersion", "maxSdkVersion"];

#[derive(Debug, Clone, Serialize)]
pub struct OperatorSpec {
    pub id: OperatorId,
    pub category: Category,
    pub detection: Detection,
    pub description: &'static str,
    /// Operator-specific constants, as `(name, value)` pairs.
    pub params: &'static [(&'static str, &'static str)],
}

macro_rules! op {
    ($id:ident, $cat:ident, $det:ident, $desc:expr) => {
        op!($id, $cat, $det, $desc, [])
    };
    ($id:ident, $cat:ident, $det:ident, $desc:expr, [$(($k:expr, $v:expr)),* $(,)?]) => {
        OperatorSpec {
            id: OperatorId::$id,
            category: Category::$cat,
            detection: Detection::$det,
            description: $desc,
            params: &[$(($k, $v)),*],
        }
    };
}

static CATALOG: &[OperatorSpec] = &[
    op!(
        ActivityNotDefined,
        ActivityIntent,
        Text,
        "Deletes a non-launcher <activity> element from the manifest",
        [("skips", "launcher activity")]
    ),
    op!(
        DifferentActivityIntentDefinition,
        ActivityIntent,
        Ast,
        "Replaces the X.class argument of an Intent instantiation with another declared activity",
        [("choice", "lexicographically next activity in the registry"), ("min_activities", "2")]
    ),
    op!(
        InvalidActivityName,
        ActivityIntent,
        Text,
        "Swaps two adjacent characters of a non-launcher activity's android:name",
        [("position", "seeded"), ("skips", "launcher activity")]
    ),
    op!(
        InvalidKeyIntentPutExtra,
        ActivityIntent,
        Ast,
        "Alters the literal key of an Intent.putExtra(key, value) call",
        [("suffix", "_mutant"), ("requires", "string literal key")]
    ),
    op!(
        InvalidLabel,
        ActivityIntent,
        Text,
        "Replaces an android:label attribute in the manifest with a random string",
        [("length", "8"), ("alphabet", "[A-Za-z0-9]")]
    ),
    op!(NullIntent, ActivityIntent, Ast, "Replaces an Intent instantiation with null", [("replacement", "null")]),
    op!(
        NullValueIntentPutExtra,
        ActivityIntent,
        Ast,
        "Replaces the value argument of Intent.putExtra(key, value) with an empty Parcelable array",
        [("replacement", "new android.os.Parcelable[0]")]
    ),
    op!(
        WrongMainActivity,
        ActivityIntent,
        Text,
        "Moves the MAIN/LAUNCHER intent filter to the next declared activity",
        [("choice", "next activity in declaration order"), ("min_activities", "2")]
    ),
    op!(MissingPermissionManifest, AndroidProgramming, Text, "Deletes a <uses-permission> element from the manifest"),
    op!(
        NotParcelable,
        AndroidProgramming,
        Ast,
        "Drops Parcelable from a class's implements clause together with @Override on its Parcelable methods",
        [("methods", "describeContents,writeToParcel")]
    ),
    op!(
        NullGPSLocation,
        AndroidProgramming,
        Ast,
        "Nulls the Location parameter at the start of onLocationChanged",
        [("inserted", "<param> = null;")]
    ),
    op!(
        SDKVersion,
        AndroidProgramming,
        Text,
        "Replaces an integer SDK version attribute with a different seeded value",
        [("range", "1..=35"), ("attributes", "minSdkVersion,targetSdkVersion,maxSdkVersion")]
    ),
    op!(
        WrongStringResource,
        AndroidProgramming,
        Text,
        "Reverses the value of a <string> resource",
        [("fallback", "append _mutant when empty, palindromic or mixed content")]
    ),
    op!(
        NullBackEndServiceReturn,
        BackEndServices,
        Ast,
        "Nulls a variable right after it receives the result of a back-end call",
        [
            ("inserted", "<var> = null;"),
            ("methods", "execute,openConnection,getInputStream,getResponse,send"),
            ("receiver_hints", "Http,Url,URL,Client")
        ]
    ),
    op!(
        BluetoothAdapterAlwaysEnabled,
        Connectivity,
        Ast,
        "Replaces a BluetoothAdapter.isEnabled() call with true",
        [("replacement", "true")]
    ),
    op!(
        NullBluetoothAdapter,
        Connectivity,
        Ast,
        "Nulls a BluetoothAdapter variable right after it is assigned",
        [("inserted", "<var> = null;")]
    ),
    op!(
        InvalidURI,
        Data,
        Ast,
        "Prefixes the literal passed to Uri.parse with an invalid path",
        [("prefix", "/invalid_path/")]
    ),
    op!(
        ClosingNullCursor,
        Database,
        Ast,
        "Nulls a non-final cursor immediately before it is closed",
        [("inserted", "<var> = null;"), ("skips", "final cursors")]
    ),
    op!(
        InvalidIndexQueryParameter,
        Database,
        Ast,
        "Swaps the first two arguments of a query(...) call",
        [("min_arity", "2")]
    ),
    op!(InvalidSQLQuery, Database, Ast, "Deletes the last character of the SQL literal passed to rawQuery/execSQL"),
    op!(
        InvalidDate,
        GeneralProgramming,
        Ast,
        "Replaces a Date instantiation with the epoch",
        [("replacement", "new Date(0)")]
    ),
    op!(NotSerializable, GeneralProgramming, Ast, "Drops Serializable from a class's implements clause"),
    op!(
        BuggyGUIListener,
        Gui,
        Ast,
        "Empties the body of a GUI listener callback, keeping a default return",
        [("methods", "onClick,onLongClick,onItemClick,onTouch,onKey")]
    ),
    op!(
        FindViewByIdReturnsNull,
        Gui,
        Ast,
        "Nulls a variable right after it is assigned from findViewById",
        [("inserted", "<var> = null;")]
    ),
    op!(
        InvalidColor,
        Gui,
        Text,
        "Complements every hex digit of a #RRGGBB/#AARRGGBB color in layouts and color resources"
    ),
    op!(
        InvalidIDFindView,
        Gui,
        Ast,
        "Replaces the R.id argument of findViewById with another referenced id",
        [("choice", "lexicographically next id in the registry"), ("min_ids", "2")]
    ),
    op!(
        ViewComponentNotVisible,
        Gui,
        Ast,
        "Hides a view right after it is looked up with findViewById",
        [("inserted", "<var>.setVisibility(android.view.View.GONE);")]
    ),
    op!(
        InvalidFilePath,
        Io,
        Ast,
        "Prefixes a literal path passed to a file constructor or opener with an invalid directory",
        [("prefix", "/invalid_path/")]
    ),
    op!(
        NullInputStream,
        Io,
        Ast,
        "Nulls an input stream or reader immediately before it is closed",
        [("inserted", "<var> = null;")]
    ),
    op!(
        NullOutputStream,
        Io,
        Ast,
        "Nulls an output stream or writer immediately before it is closed",
        [("inserted", "<var> = null;")]
    ),
    op!(
        LengthyBackEndService,
        NonFunctional,
        Ast,
        "Inserts a long sleep right after a back-end call statement",
        [("delay_ms", "5000"), ("inserted", "try { Thread.sleep(5000); } catch (InterruptedException e) { }")]
    ),
    op!(
        LengthyGUICreation,
        NonFunctional,
        Ast,
        "Inserts a long sleep at the start of onCreate",
        [("delay_ms", "5000"), ("inserted", "try { Thread.sleep(5000); } catch (InterruptedException e) { }")]
    ),
    op!(
        LengthyGUIListener,
        NonFunctional,
        Ast,
        "Inserts a long sleep at the start of a GUI listener callback",
        [("delay_ms", "5000"), ("inserted", "try { Thread.sleep(5000); } catch (InterruptedException e) { }")]
    ),
    op!(
        LongConnectionTimeOut,
        NonFunctional,
        Ast,
        "Inflates the argument of setConnectTimeout",
        [("literal", "<n> * 100"), ("otherwise", "1000000")]
    ),
    op!(
        OOMLargeImage,
        NonFunctional,
        Ast,
        "Sets the dimensions passed to createBitmap/createScaledBitmap to a large constant",
        [("dimension", "10000")]
    ),
];

/// All implemented operators, grouped by category.
pub fn catalog() -> &'static [OperatorSpec] {
    CATALOG
}

pub fn operator_by_id(id: &str) -> Result<&'static OperatorSpec, Error> {
    let op: OperatorId = id.parse()?;
    Ok(spec(op))
}

pub fn spec(op: OperatorId) -> &'static OperatorSpec {
    &CATALOG[op as usize]
}

impl OperatorId {
    pub fn category(self) -> Category {
        spec(self).category
    }
}

/// Serializable form of the catalog for documentation and tooling.
#[derive(Debug, Serialize)]
pub struct CatalogDocument {
    pub format_version: u32,
    pub operators: &'static [OperatorSpec],
}

pub fn catalog_document() -> CatalogDocument {
    CatalogDocument { format_version: crate::FORMAT_VERSION, operators: CATALOG }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, HashSet};

    #[test]
    fn catalog_has_thirty_five_operators_in_id_order() {
        assert_eq!(catalog().len(), 35);
        for (i, spec) in catalog().iter().enumerate() {
            assert_eq!(spec.id as usize, i, "{} out of place", spec.id);
        }
        let ids: HashSet<_> = catalog().iter().map(|s| s.id.as_str()).collect();
        assert_eq!(ids.len(), 35);
    }

    #[test]
    fn category_counts() {
        let mut counts = BTreeMap::new();
        for s in catalog() {
            *counts.entry(s.category.code()).or_insert(0) += 1;
        }
        let expected: BTreeMap<&str, i32> = [
            ("A/I", 8),
            ("AP", 5),
            ("BES", 1),
            ("C", 2),
            ("D", 1),
            ("DB", 3),
            ("GP", 2),
            ("GUI", 5),
            ("I/O", 3),
            ("NFR", 5),
        ]
        .into_iter()
        .collect();
        assert_eq!(counts, expected);
    }

    #[test]
    fn lookup() {
        let s = operator_by_id("NullIntent").unwrap();
        assert_eq!((s.detection, s.category), (Detection::Ast, Category::ActivityIntent));
        let s = operator_by_id("ActivityNotDefined").unwrap();
        assert_eq!((s.detection, s.category), (Detection::Text, Category::ActivityIntent));
        match operator_by_id("InvalidViewFocus") {
            Err(Error::UnknownOperator { reason: Some(r), .. }) => assert!(r.contains("not implemented")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(operator_by_id("Bogus"), Err(Error::UnknownOperator { reason: None, .. })));
    }

    #[test]
    fn serializes_category_codes() {
        let json = serde_json::to_value(spec(OperatorId::InvalidFilePath)).unwrap();
        assert_eq!(json["category"], "I/O");
        assert_eq!(json["detection"], "AST");
        assert_eq!(json["id"], "InvalidFilePath");
    }
}
