//! Plain-text edge list: a header line `n m` followed by `m` lines `u v`.
//! Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use super::{Graph, GraphError};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut offset = 0;
    let mut header: Option<(usize, usize)> = None;
    let mut g = Graph::new(0);
    let mut seen = 0;

    for line in text.split_inclusive('\n') {
        let line_offset = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(GraphError::Parse {
                offset: line_offset,
                message: format!("expected two integers, found {:?}", content),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|e| GraphError::Parse {
                offset: line_offset,
                message: format!("bad integer {s:?}: {e}"),
            })
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        match header {
            None => {
                header = Some((a, b));
                g = Graph::new(a);
            }
            Some(_) => {
                g.add_edge(a, b).map_err(|e| GraphError::Parse {
                    offset: line_offset,
                    message: e.to_string(),
                })?;
                seen += 1;
            }
        }
    }

    match header {
        None => Err(GraphError::Parse {
            offset: 0,
            message: "missing `n m` header".into(),
        }),
        Some((_, m)) if m != seen => Err(GraphError::Parse {
            offset,
            message: format!("header promises {m} edges, found {seen}"),
        }),
        Some(_) => Ok(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_petersen() {
        let p = Graph::petersen();
        let text = write_edge_list(&p);
        assert!(text.starts_with("10 15\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), p);
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n1 2 # closing\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n"),
            Err(GraphError::Parse { offset: 4, .. })
        ));
        assert!(parse_edge_list("").is_err());
    }
}
