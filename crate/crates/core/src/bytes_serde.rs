//! Serde helper: byte buffers are written as plain strings when they are
//! valid UTF-8 and as `{"base64": ...}` otherwise, so documents stay
//! readable without losing non-UTF-8 content.

use base64::engine::general_purpose::STANDARD;
use base64::Engine;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Text(String),
    Binary { base64: String },
}

pub fn serialize<S: Serializer>(bytes: &[u8], s: S) -> Result<S::Ok, S::Error> {
    match std::str::from_utf8(bytes) {
        Ok(text) => Repr::Text(text.to_string()).serialize(s),
        Err(_) => Repr::Binary { base64: STANDARD.encode(bytes) }.serialize(s),
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u8>, D::Error> {
    match Repr::deserialize(d)? {
        Repr::Text(t) => Ok(t.into_bytes()),
        Repr::Binary { base64 } => STANDARD.decode(base64).map_err(serde::de::Error::custom),
    }
}

#[cfg(test)]
mod tests {
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Holder(#[serde(with = "super")] Vec<u8>);

    #[test]
    fn text_and_binary_round_trip() {
        for bytes in [b"plain".to_vec(), vec![0x66, 0xff, 0x00]] {
            let json = serde_json::to_string(&Holder(bytes.clone())).unwrap();
            assert_eq!(serde_json::from_str::<Holder>(&json).unwrap().0, bytes);
        }
        assert_eq!(serde_json::to_string(&Holder(b"hi".to_vec())).unwrap(), "\"hi\"");
    }
}
