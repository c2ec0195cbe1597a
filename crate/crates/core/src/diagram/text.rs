use std::fmt;

use super::BrauerDiagram;

fn vertex_name(n: usize, v: usize) -> String {
    if v < n {
        format!("{}", v + 1)
    } else {
        format!("{}'", v - n + 1)
    }
}

/// Sort key interleaving the rows: 1 < 1' < 2 < 2' < ...
fn vertex_key(n: usize, v: usize) -> usize {
    if v < n {
        2 * v
    } else {
        2 * (v - n) + 1
    }
}

impl fmt::Display for BrauerDiagram {
    /// Edge list such as `{1-2, 1'-2', 3-3'}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut edges: Vec<(usize, usize)> = (0..2 * n)
            .filter_map(|v| {
                let u = self.partner(v);
                (vertex_key(n, v) < vertex_key(n, u)).then_some((v, u))
            })
            .collect();
        edges.sort_by_key(|&(v, _)| vertex_key(n, v));
        let parts: Vec<String> =
            edges.iter().map(|&(v, u)| format!("{}-{}", vertex_name(n, v), vertex_name(n, u))).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn parse_vertex(s: &str, n: usize) -> Result<usize, String> {
    let s = s.trim();
    let (num, bottom) = match s.strip_suffix('\'') {
        Some(rest) => (rest.trim(), true),
        None => (s, false),
    };
    let i: usize = num.parse().map_err(|_| format!("bad vertex '{s}'"))?;
    if i == 0 || i > n {
        return Err(format!("vertex '{s}' out of range for n = {n}"));
    }
    Ok(if bottom { n + i - 1 } else { i - 1 })
}

/// Parse an edge list such as `{1-2, 1'-2', 3-3'}` for a given `n`.
pub fn parse_diagram(s: &str, n: usize) -> Result<BrauerDiagram, String> {
    let body = s
        .trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| format!("diagram '{s}' must be enclosed in braces"))?;
    let mut partner = vec![usize::MAX; 2 * n];
    for edge in body.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (a, b) = edge.split_once('-').ok_or_else(|| format!("bad edge '{edge}'"))?;
        let (a, b) = (parse_vertex(a, n)?, parse_vertex(b, n)?);
        if a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
            return Err(format!("edge '{edge}' reuses a vertex"));
        }
        partner[a] = b;
        partner[b] = a;
    }
    if partner.contains(&usize::MAX) {
        return Err("diagram does not cover every vertex".into());
    }
    BrauerDiagram::from_partners(&partner).ok_or_else(|| "rows have different numbers of arcs".into())
}
