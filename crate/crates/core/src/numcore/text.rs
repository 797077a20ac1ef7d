//! `gaps=1,2,4,7` / `gens=3,5` text encoding.

use std::fmt;
use std::str::FromStr;

use super::semigroup::{GeneratorList, NumericalSemigroup};
use super::set::NumericalSet;
use crate::error::{Error, Result};

impl fmt::Display for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("gaps=")?;
        for (i, g) in self.gaps().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

enum Encoding {
    Gaps(Vec<i64>),
    Gens(Vec<i64>),
}

fn parse_list(body: &str, offset: usize) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    if body.trim().is_empty() {
        return Ok(out);
    }
    let mut pos = offset;
    for item in body.split(',') {
        let lead = item.len() - item.trim_start().len();
        let trimmed = item.trim();
        let value = trimmed.parse::<i64>().map_err(|_| Error::Parse {
            position: pos + lead,
            message: format!("expected an integer, found {trimmed:?}"),
        })?;
        out.push(value);
        pos += item.len() + 1;
    }
    Ok(out)
}

fn parse_encoding(s: &str) -> Result<Encoding> {
    let lead = s.len() - s.trim_start().len();
    let s_trim = s.trim();
    let Some((key, body)) = s_trim.split_once('=') else {
        return Err(Error::Parse {
            position: lead,
            message: "expected `gaps=...` or `gens=...`".into(),
        });
    };
    let body_offset = lead + key.len() + 1;
    match key.trim() {
        "gaps" => Ok(Encoding::Gaps(parse_list(body, body_offset)?)),
        "gens" => {
            let list = parse_list(body, body_offset)?;
            if list.is_empty() {
                return Err(Error::Parse {
                    position: body_offset,
                    message: "generator list is empty".into(),
                });
            }
            Ok(Encoding::Gens(list))
        }
        other => Err(Error::Parse {
            position: lead,
            message: format!("unknown key {other:?}; expected `gaps` or `gens`"),
        }),
    }
}

impl FromStr for NumericalSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_encoding(s)? {
            Encoding::Gaps(g) => NumericalSet::from_gaps(g),
            Encoding::Gens(g) => {
                NumericalSemigroup::from_generators(&GeneratorList::new(g)?).map(Into::into)
            }
        }
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_encoding(s)? {
            Encoding::Gaps(g) => NumericalSemigroup::from_gaps(g),
            Encoding::Gens(g) => NumericalSemigroup::from_generators(&GeneratorList::new(g)?),
        }
    }
}
