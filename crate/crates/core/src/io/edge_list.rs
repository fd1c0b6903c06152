use super::FormatError;
use crate::graph::Graph;

fn parse_index(token: &str, line: usize) -> Result<usize, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError::Malformed { line, reason: format!("expected a vertex index, got {token:?}") })
}

/// Parses `n <count>` followed by `u v` lines; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(FormatError::Malformed { line: 1, reason: "missing \"n <count>\" header".into() })?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => parse_index(count, header_line)?,
        _ => return Err(FormatError::Malformed { line: header_line, reason: format!("expected \"n <count>\", got {header:?}") }),
    };

    let mut edges = Vec::new();
    for (line, content) in lines {
        let (u, v) = match content.split_whitespace().collect::<Vec<_>>()[..] {
            [u, v] => (parse_index(u, line)?, parse_index(v, line)?),
            _ => return Err(FormatError::Malformed { line, reason: format!("expected \"u v\", got {content:?}") }),
        };
        if u == v {
            return Err(FormatError::Malformed { line, reason: format!("self-loop at vertex {u}") });
        }
        if u >= n || v >= n {
            return Err(FormatError::Malformed { line, reason: format!("vertex {} out of range for n = {n}", u.max(v)) });
        }
        edges.push((u, v));
    }
    Ok(Graph::new(n, edges).expect("edges validated"))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(parse_edge_list("n 2\n0 1").unwrap(), Graph::complete(2));
        assert_eq!(parse_edge_list("n 5\n0 1\n1 2\n2 3\n3 4\n4 0").unwrap(), Graph::cycle(5));
        let err = parse_edge_list("n 3\n0 0").unwrap_err();
        assert!(err.to_string().contains("self-loop"), "{err}");
    }

    #[test]
    fn comments_duplicates_and_errors() {
        let g = parse_edge_list("# triangle\n\nn 3 # order\n0 1\n1 0\n1 2 # edge\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n0 1").is_err());
        assert!(parse_edge_list("n 3\n0 3").is_err());
        assert!(parse_edge_list("n 3\n0 1 2").is_err());
        assert!(parse_edge_list("n 3\n0 x").is_err());
        let c5 = Graph::cycle(5);
        assert_eq!(parse_edge_list(&emit_edge_list(&c5)).unwrap(), c5);
    }
}
