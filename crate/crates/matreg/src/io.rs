//! Plain-text formats for matroids, graphs, and simplicial complexes.
//! One record per file, UTF-8, `#` starts a comment, blank lines ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matroid::Matroid;
use crate::simplicial::SimplicialComplex;
use crate::subsets;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Strip comments and blank lines, keeping original line numbers.
fn logical_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn expect_header<'a>(
    lines: &'a [(usize, &'a str)],
    header: &str,
) -> Result<&'a [(usize, &'a str)]> {
    match lines.first() {
        Some(&(_, l)) if l == header => Ok(&lines[1..]),
        Some(&(n, l)) => Err(parse_err(n, format!("expected `{header}`, found `{l}`"))),
        None => Err(parse_err(1, format!("empty file, expected `{header}`"))),
    }
}

fn key_value<'a>(lines: &'a [(usize, &'a str)], key: &str) -> Result<(usize, &'a str)> {
    match lines.first() {
        Some(&(n, l)) => match l.split_once('=') {
            Some((k, v)) if k.trim() == key => Ok((n, v.trim())),
            _ => Err(parse_err(n, format!("expected `{key} = ...`, found `{l}`"))),
        },
        None => Err(parse_err(0, format!("missing `{key} = ...` line"))),
    }
}

fn parse_usize(line: usize, text: &str, what: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| parse_err(line, format!("invalid {what}: `{text}`")))
}

/// Parse `{i j k} {i j} ...` into subsets; braces must balance.
fn parse_subset_list(line: usize, text: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('{') else {
            return Err(parse_err(line, format!("expected `{{`, found `{rest}`")));
        };
        let Some(close) = stripped.find('}') else {
            return Err(parse_err(line, "unclosed `{`"));
        };
        let inner = &stripped[..close];
        let mut subset = Vec::new();
        for tok in inner.split_whitespace() {
            subset.push(parse_usize(line, tok, "element")?);
        }
        out.push(subset);
        rest = stripped[close + 1..].trim_start();
    }
    Ok(out)
}

/// `matroid v1` / `n = <int>` / `bases = {i j k} ...`
///
/// Loops are accepted so that enumerated matroid files (which include the
/// rank-0 family) round-trip; programmatic element-list input stays strict.
pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let lines = logical_lines(text);
    let rest = expect_header(&lines, "matroid v1")?;
    let (nline, nval) = key_value(rest, "n")?;
    let n = parse_usize(nline, nval, "ground size")?;
    let (bline, bval) = key_value(&rest[1..], "bases")?;
    let bases = parse_subset_list(bline, bval)?;
    if bases.is_empty() {
        return Err(parse_err(bline, "at least one basis required"));
    }
    for b in &bases {
        for &e in b {
            if e < 1 || e > n {
                return Err(parse_err(bline, format!("element {e} out of 1..={n}")));
            }
        }
    }
    Matroid::new(n, bases.iter().map(|b| subsets::mask_of(b)).collect())
}

pub fn write_matroid(m: &Matroid) -> String {
    let bases = m
        .bases()
        .iter()
        .map(|&b| {
            let elems: Vec<String> = subsets::elements(b).iter().map(|e| e.to_string()).collect();
            format!("{{{}}}", elems.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ");
    format!("matroid v1\nn = {}\nbases = {}\n", m.ground_size(), bases)
}

/// `graph v1` / `vertices = <int>` / `edges = a-b c-d ...`
/// Edge order defines element labels 1..m.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines = logical_lines(text);
    let rest = expect_header(&lines, "graph v1")?;
    let (vline, vval) = key_value(rest, "vertices")?;
    let v = parse_usize(vline, vval, "vertex count")?;
    let (eline, eval) = key_value(&rest[1..], "edges")?;
    let mut edges = Vec::new();
    for tok in eval.split_whitespace() {
        let Some((a, b)) = tok.split_once('-') else {
            return Err(parse_err(eline, format!("expected `a-b`, found `{tok}`")));
        };
        edges.push((
            parse_usize(eline, a, "vertex")?,
            parse_usize(eline, b, "vertex")?,
        ));
    }
    if edges.is_empty() {
        return Err(parse_err(eline, "at least one edge required"));
    }
    Graph::new(v, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g
        .edges()
        .iter()
        .map(|&(a, b)| format!("{a}-{b}"))
        .collect::<Vec<_>>()
        .join(" ");
    format!("graph v1\nvertices = {}\nedges = {}\n", g.vertex_count(), edges)
}

/// `complex v1` / `vertices = <int>` / `facets = {i j} ...`
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let lines = logical_lines(text);
    let rest = expect_header(&lines, "complex v1")?;
    let (vline, vval) = key_value(rest, "vertices")?;
    let v = parse_usize(vline, vval, "vertex count")?;
    let (fline, fval) = key_value(&rest[1..], "facets")?;
    let facets = parse_subset_list(fline, fval)?;
    for f in &facets {
        for &e in f {
            if e == 0 || e > v {
                return Err(parse_err(fline, format!("vertex {e} out of range 1..{v}")));
            }
        }
    }
    SimplicialComplex::from_facets(v, facets.iter().map(|f| subsets::mask_of(f)).collect())
}

pub fn write_complex(c: &SimplicialComplex) -> String {
    let facets = c
        .facets()
        .iter()
        .map(|&f| {
            let elems: Vec<String> = subsets::elements(f).iter().map(|e| e.to_string()).collect();
            format!("{{{}}}", elems.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        "complex v1\nvertices = {}\nfacets = {}\n",
        c.vertex_count(),
        facets
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matroid_round_trip() {
        let text = "matroid v1\nn = 4\nbases = {1 2} {2 3} {3 4} {1 4}\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.bases().len(), 4);
        assert_eq!(parse_matroid(&write_matroid(&m)).unwrap().bases(), m.bases());
    }

    #[test]
    fn loopy_matroid_round_trip() {
        // rank-0 family on [2]: both elements are loops
        let text = "matroid v1\nn = 2\nbases = {}\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m.rank(), 0);
        assert_eq!(m.loops_mask(), subsets::full_mask(2));
        assert_eq!(write_matroid(&m), text);
    }

    #[test]
    fn comments_and_blanks() {
        let text = "# square\nmatroid v1\n\nn = 2  # two elements\nbases = {1} {2}\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m.ground_size(), 2);
    }

    #[test]
    fn malformed_bases_line() {
        let text = "matroid v1\nn = 4\nbases = {1 2\n";
        match parse_matroid(text).unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn bad_header() {
        assert!(matches!(
            parse_matroid("matroyd v1\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn graph_round_trip() {
        let text = "graph v1\nvertices = 4\nedges = 1-2 2-3 3-4 4-1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edges().len(), 4);
        let m = g.graphic_matroid().unwrap();
        assert_eq!(m.bases(), Matroid::uniform(3, 4).unwrap().bases());
        assert_eq!(write_graph(&g), text);
    }

    #[test]
    fn graph_rejects_self_loop() {
        assert!(parse_graph("graph v1\nvertices = 2\nedges = 1-1\n").is_err());
    }

    #[test]
    fn complex_round_trip() {
        let text = "complex v1\nvertices = 3\nfacets = {1 2} {2 3} {1 3}\n";
        let c = parse_complex(text).unwrap();
        assert_eq!(c.facets().len(), 3);
        assert_eq!(parse_complex(&write_complex(&c)).unwrap().facets(), c.facets());
    }

    #[test]
    fn complex_vertex_range() {
        assert!(matches!(
            parse_complex("complex v1\nvertices = 2\nfacets = {1 3}\n").unwrap_err(),
            Error::Parse { line: 3, .. }
        ));
    }
}
