//! Line-oriented text formats for both graph flavours.
//!
//! A token starting with `#` opens a comment running to the end of the line;
//! `#` inside a token (as in provenance ids like `w#0`) is part of the token.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{GKind, GammaCGraph, PKind, PlumbGraph, Sign};

pub(crate) fn tokens(line: &str) -> Vec<&str> {
    line.split_whitespace().take_while(|t| !t.starts_with('#')).collect()
}

pub(crate) fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub(crate) struct Fields<'a> {
    line: usize,
    map: HashMap<&'a str, &'a str>,
}

impl<'a> Fields<'a> {
    pub(crate) fn new(line: usize, toks: &[&'a str], allowed: &[&str]) -> Result<Self> {
        let mut map = HashMap::new();
        for t in toks {
            let (k, v) = t
                .split_once('=')
                .ok_or_else(|| perr(line, format!("expected key=value, got '{t}'")))?;
            if !allowed.contains(&k) {
                return Err(perr(line, format!("unknown field '{k}'")));
            }
            if map.insert(k, v).is_some() {
                return Err(perr(line, format!("field '{k}' given twice")));
            }
        }
        Ok(Fields { line, map })
    }

    pub(crate) fn int(&self, key: &str) -> Result<Option<i64>> {
        match self.map.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse::<i64>()
                .map(Some)
                .map_err(|_| perr(self.line, format!("field '{key}' is not an integer: '{v}'"))),
        }
    }

    pub(crate) fn req_int(&self, key: &str) -> Result<i64> {
        self.int(key)?.ok_or_else(|| perr(self.line, format!("missing field '{key}'")))
    }

    pub(crate) fn str(&self, key: &str) -> Option<&'a str> {
        self.map.get(key).copied()
    }
}

pub(crate) fn header<'a>(text: &'a str, expected: &str) -> Result<impl Iterator<Item = (usize, Vec<&'a str>)>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty());
    match lines.next() {
        Some((_, t)) if t == [expected, "1"] => Ok(lines),
        Some((n, t)) => Err(perr(n, format!("expected header '{expected} 1', got '{}'", t.join(" ")))),
        None => Err(perr(0, "empty input")),
    }
}

pub fn parse_gammac(text: &str) -> Result<GammaCGraph> {
    let mut g = GammaCGraph::new();
    let mut pending = Vec::new();
    for (n, t) in header(text, "gammaC")? {
        match t[0] {
            "vertex" if t.len() >= 2 => {
                let f = Fields::new(n, &t[2..], &["m", "n", "nu", "g"])?;
                if g.index_of(t[1]).is_some() {
                    return Err(perr(n, format!("duplicate id {}", t[1])));
                }
                g.add_vertex(t[1], f.req_int("m")?, f.req_int("n")?, f.req_int("nu")?, f.int("g")?.unwrap_or(0));
            }
            "arrow" if t.len() == 2 => {
                if g.index_of(t[1]).is_some() {
                    return Err(perr(n, format!("duplicate id {}", t[1])));
                }
                g.add_arrow(t[1]);
            }
            "edge" if t.len() >= 3 => {
                let f = Fields::new(n, &t[3..], &["w"])?;
                let w = f.req_int("w")?;
                if w != 1 && w != 2 {
                    return Err(perr(n, format!("edge weight must be 1 or 2, got {w}")));
                }
                pending.push((n, t[1].to_string(), t[2].to_string(), w as u8));
            }
            _ => return Err(perr(n, format!("unrecognised line '{}'", t.join(" ")))),
        }
    }
    for (n, a, b, w) in pending {
        let ia = g.index_of(&a).ok_or_else(|| perr(n, format!("unknown node '{a}'")))?;
        let ib = g.index_of(&b).ok_or_else(|| perr(n, format!("unknown node '{b}'")))?;
        g.add_edge(ia, ib, w);
    }
    Ok(g)
}

pub fn write_gammac(g: &GammaCGraph) -> String {
    let mut s = String::from("gammaC 1\n");
    for node in &g.nodes {
        match node.kind {
            GKind::Vertex { t, genus } => {
                s += &format!("vertex {} m={} n={} nu={}", node.id, t.m, t.n, t.nu);
                if genus != 0 {
                    s += &format!(" g={genus}");
                }
                s.push('\n');
            }
            GKind::Arrow => s += &format!("arrow {}\n", node.id),
        }
    }
    for e in &g.edges {
        s += &format!("edge {} {} w={}\n", g.nodes[e.a].id, g.nodes[e.b].id, e.w);
    }
    s
}

pub fn parse_plumb(text: &str) -> Result<PlumbGraph> {
    let mut g = PlumbGraph::new();
    let mut edges = Vec::new();
    let mut dashes = Vec::new();
    for (n, t) in header(text, "plumb")? {
        match t[0] {
            "vertex" if t.len() >= 2 => {
                let f = Fields::new(n, &t[2..], &["e", "g", "m"])?;
                if g.index_of(t[1]).is_some() {
                    return Err(perr(n, format!("duplicate id {}", t[1])));
                }
                g.add_vertex(t[1], f.int("e")?, f.int("g")?.unwrap_or(0), f.int("m")?);
            }
            "arrow" if t.len() >= 2 => {
                let f = Fields::new(n, &t[2..], &["m"])?;
                if g.index_of(t[1]).is_some() {
                    return Err(perr(n, format!("duplicate id {}", t[1])));
                }
                g.add_arrow(t[1], f.int("m")?);
            }
            "dasharrow" if t.len() == 3 => {
                let f = Fields::new(n, &t[2..], &["at"])?;
                let at = f.str("at").ok_or_else(|| perr(n, "missing field 'at'"))?;
                dashes.push((n, t[1].to_string(), at.to_string()));
            }
            "edge" if t.len() == 4 => {
                let f = Fields::new(n, &t[3..], &["s"])?;
                let sign = match f.str("s") {
                    Some("+") => Sign::Plus,
                    Some("-") => Sign::Minus,
                    _ => return Err(perr(n, "edge sign must be s=+ or s=-")),
                };
                edges.push((n, t[1].to_string(), t[2].to_string(), sign));
            }
            _ => return Err(perr(n, format!("unrecognised line '{}'", t.join(" ")))),
        }
    }
    for (n, id, at) in dashes {
        let v = g.index_of(&at).ok_or_else(|| perr(n, format!("unknown vertex '{at}'")))?;
        g.add_dash(id, v);
    }
    for (n, a, b, sign) in edges {
        let ia = g.index_of(&a).ok_or_else(|| perr(n, format!("unknown node '{a}'")))?;
        let ib = g.index_of(&b).ok_or_else(|| perr(n, format!("unknown node '{b}'")))?;
        g.add_edge(ia, ib, sign);
    }
    Ok(g)
}

pub fn write_plumb(g: &PlumbGraph) -> String {
    let mut s = String::from("plumb 1\n");
    for node in &g.nodes {
        match node.kind {
            PKind::Vertex { euler, genus, mult } => {
                s += &format!("vertex {}", node.id);
                if let Some(e) = euler {
                    s += &format!(" e={e}");
                }
                if genus != 0 {
                    s += &format!(" g={genus}");
                }
                if let Some(m) = mult {
                    s += &format!(" m={m}");
                }
                s.push('\n');
            }
            PKind::Arrow { mult } => {
                s += &format!("arrow {}", node.id);
                if let Some(m) = mult {
                    s += &format!(" m={m}");
                }
                s.push('\n');
            }
        }
    }
    for d in &g.dashes {
        s += &format!("dasharrow {} at={}\n", d.id, g.nodes[d.at].id);
    }
    for e in &g.edges {
        s += &format!("edge {} {} s={}\n", g.nodes[e.a].id, g.nodes[e.b].id, e.sign.symbol());
    }
    s
}

/// Which format a text is in, judged by its header line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    GammaC,
    Plumb,
}

pub fn sniff(text: &str) -> Option<Flavor> {
    let first = text.lines().map(tokens).find(|t| !t.is_empty())?;
    match first.first().copied() {
        Some("gammaC") => Some(Flavor::GammaC),
        Some("plumb") => Some(Flavor::Plumb),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gammac_round_trip() {
        let text = "gammaC 1\n# comment\nvertex v m=1 n=3 nu=1 g=2\narrow a\nvertex w m=2 n=3 nu=1\nedge v a w=1\nedge v w w=2\n";
        let g = parse_gammac(text).unwrap();
        let out = write_gammac(&g);
        assert_eq!(parse_gammac(&out).unwrap(), g);
        assert_eq!(out, text.replace("# comment\n", ""));
    }

    #[test]
    fn plumb_round_trip_with_hash_ids() {
        let text = "plumb 1\nvertex w#0 m=2 # trailing\nvertex x e=-2\narrow a m=1\ndasharrow d at=w#0\nedge w#0 x s=-\nedge x a s=+\n";
        let g = parse_plumb(text).unwrap();
        assert_eq!(g.nodes[0].id, "w#0");
        assert_eq!(g.dashes.len(), 1);
        let out = write_plumb(&g);
        assert_eq!(parse_plumb(&out).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_gammac("gammaC 1\nvertex v m=x n=0 nu=1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        assert!(parse_plumb("gammaC 1\n").is_err());
        assert!(parse_plumb("plumb 1\nedge a b s=+\n").is_err());
    }
}
