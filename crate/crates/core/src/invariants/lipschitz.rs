use std::collections::HashMap;
use std::io::Read;
use std::path::Path;

use serde::Deserialize;

use crate::algebra::rational::{frac, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::torus::{signature, TorusLink};

/// A real-valued knot invariant expected to change by at most the genus of
/// any connected cobordism between knots. The bound is never assumed; the
/// checks in this module test it.
pub trait LipschitzInvariant: Sync {
    fn name(&self) -> String;
    fn value_on(&self, link: TorusLink) -> Result<Rational>;
}

/// `-sigma/2`.
pub fn sigma_half(link: TorusLink) -> Rational {
    frac(-signature(link), 2)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SignatureInvariant;

impl LipschitzInvariant for SignatureInvariant {
    fn name(&self) -> String {
        "-sigma/2".into()
    }

    fn value_on(&self, link: TorusLink) -> Result<Rational> {
        Ok(sigma_half(link))
    }
}

/// Values supplied from outside, keyed by normalized `T(p,q)`.
#[derive(Debug, Clone)]
pub struct TableInvariant {
    name: String,
    values: HashMap<TorusLink, Rational>,
}

#[derive(Deserialize)]
struct Row {
    p: i64,
    q: i64,
    value: String,
}

impl TableInvariant {
    pub fn new(name: impl Into<String>, values: HashMap<TorusLink, Rational>) -> Self {
        TableInvariant {
            name: name.into(),
            values,
        }
    }

    /// Reads CSV with header `p,q,value`; values are integers or `a/b`.
    /// A link listed twice with different values is rejected.
    pub fn from_reader(name: impl Into<String>, reader: impl Read) -> Result<Self> {
        let mut values = HashMap::new();
        for (i, row) in csv::Reader::from_reader(reader).deserialize().enumerate() {
            let row: Row = row?;
            let link = TorusLink::new(row.p, row.q)?;
            let value = parse_rational(row.value.trim())?;
            if let Some(old) = values.insert(link, value.clone()) {
                if old != value {
                    return Err(Error::Usage(format!(
                        "row {}: conflicting values for {link}",
                        i + 1
                    )));
                }
            }
        }
        Ok(TableInvariant::new(name, values))
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        TableInvariant::from_reader(format!("csv:{}", path.display()), file)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl LipschitzInvariant for TableInvariant {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn value_on(&self, link: TorusLink) -> Result<Rational> {
        self.values
            .get(&link)
            .cloned()
            .ok_or_else(|| Error::Unsupported(format!("{} has no value for {link}", self.name)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn t(p: i64, q: i64) -> TorusLink {
        TorusLink::new(p, q).unwrap()
    }

    #[test]
    fn sigma_half_examples() {
        assert_eq!(sigma_half(t(2, 7)), rat(3));
        assert_eq!(sigma_half(t(1, 5)), rat(0));
        assert_eq!(sigma_half(t(4, 5)), rat(4));
        assert_eq!(sigma_half(t(-2, 3)), rat(-1));
    }

    #[test]
    fn table_from_csv() {
        let csv = "p,q,value\n2,3,1\n5,4,6\n3,4,-1/2\n";
        let inv = TableInvariant::from_reader("tau", csv.as_bytes()).unwrap();
        assert_eq!(inv.len(), 3);
        assert_eq!(inv.value_on(t(4, 5)).unwrap(), rat(6));
        assert_eq!(inv.value_on(t(3, 4)).unwrap(), frac(-1, 2));
        assert!(matches!(inv.value_on(t(2, 5)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn table_rejects_bad_rows() {
        let conflict = "p,q,value\n2,3,1\n3,2,2\n";
        assert!(matches!(
            TableInvariant::from_reader("x", conflict.as_bytes()),
            Err(Error::Usage(_))
        ));
        assert!(TableInvariant::from_reader("x", "p,q,value\n2,3,one\n".as_bytes()).is_err());
        assert!(TableInvariant::from_reader("x", "p,q\n2,3\n".as_bytes()).is_err());
    }
}
