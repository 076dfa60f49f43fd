//! Point-list files for replaying the sphere suites on fixed inputs.
//!
//! ```text
//! # blank lines and `#` comments are ignored
//! s24
//! 5/4, 0, 0, 3/4, 0, 0, 0
//! 1, 0, 0, 0, 0, 0, 0
//! ```
//!
//! The first content line names the sphere (`s24` or `s33`); every further
//! line holds seven exact rationals separated by commas.

use cayley_core::imspace::ImVector;
use cayley_core::scalars::{parse_rational, Rational};
use cayley_core::spheres::{SphereError, SphereKind, SpherePoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointList {
    pub kind: SphereKind,
    pub points: Vec<SpherePoint>,
}

#[derive(Debug, thiserror::Error)]
pub enum PointListError {
    #[error("point list is empty; expected a header line `s24` or `s33`")]
    MissingHeader,
    #[error("line {line}: unknown sphere `{found}`, expected `s24` or `s33`")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: expected 7 comma-separated values, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: {source}")]
    BadValue { line: usize, source: cayley_core::scalars::ScalarError },
    #[error("line {line}: {source}")]
    OffSphere { line: usize, source: SphereError },
    #[error("cannot read point list: {0}")]
    Io(#[from] std::io::Error),
}

pub fn parse_point_list(text: &str) -> Result<PointList, PointListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(PointListError::MissingHeader)?;
    let kind = match header.to_ascii_lowercase().as_str() {
        "s24" => SphereKind::S24,
        "s33" => SphereKind::S33,
        _ => return Err(PointListError::BadHeader { line: hline, found: header.into() }),
    };
    let mut points = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split(',').collect();
        if fields.len() != 7 {
            return Err(PointListError::FieldCount { line, found: fields.len() });
        }
        let values: Vec<Rational> = fields
            .iter()
            .map(|f| parse_rational(f))
            .collect::<Result<_, _>>()
            .map_err(|source| PointListError::BadValue { line, source })?;
        let coords = ImVector::new(std::array::from_fn(|i| values[i].clone()));
        points.push(SpherePoint::new(kind, coords).map_err(|source| PointListError::OffSphere { line, source })?);
    }
    Ok(PointList { kind, points })
}

pub fn read_point_list(path: &std::path::Path) -> Result<PointList, PointListError> {
    parse_point_list(&std::fs::read_to_string(path)?)
}

pub fn write_point_list(list: &PointList) -> String {
    let mut out = format!("{}\n", list.kind);
    for p in &list.points {
        let fields: Vec<String> = p.coords.v.iter().map(|c| c.to_string()).collect();
        out.push_str(&fields.join(", "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# replay\ns24\n5/4, 0, 0, 3/4, 0, 0, 0 # exact radius\n\n1,0,0,0,0,0,0\n";
        let list = parse_point_list(text).unwrap();
        assert_eq!(list.kind, SphereKind::S24);
        assert_eq!(list.points.len(), 2);
        assert_eq!(parse_point_list(&write_point_list(&list)).unwrap(), list);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_point_list("# nothing\n"), Err(PointListError::MissingHeader)));
        assert!(matches!(parse_point_list("s6\n"), Err(PointListError::BadHeader { line: 1, .. })));
        assert!(matches!(parse_point_list("s24\n1,0,0\n"), Err(PointListError::FieldCount { line: 2, found: 3 })));
        assert!(matches!(parse_point_list("s24\n1,0,0,0,0,0,x\n"), Err(PointListError::BadValue { line: 2, .. })));
        assert!(matches!(parse_point_list("s24\n\n0,0,0,1,0,0,0\n"), Err(PointListError::OffSphere { line: 3, .. })));
    }
}
