//! Line-oriented text formats.
//!
//! Colored graph:
//!
//! ```text
//! n m n_c
//! u v        (m edge lines)
//! v c        (n color lines)
//! label v text   (optional)
//! ```
//!
//! Dependency system:
//!
//! ```text
//! demand n m
//! u v        (m edge lines)
//! supply n m     (or `supply n -` without topology)
//! u v
//! mode one-way   (or bidirectional)
//! dep u -> s1 s2 ...
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Writers emit nodes
//! and edges in ascending order.

use std::fmt::Write as _;
use std::path::Path;

use crate::colored::{ColoredGraph, DependencySystem, Direction};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Either kind of input file.
#[derive(Clone, Debug)]
pub enum Instance {
    Colored(ColoredGraph),
    System(DependencySystem),
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path)?;
    parse_instance(&text)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = Lines::new(text);
    match lines.peek().map(|(_, l)| l.split_whitespace().next()) {
        Some(Some("demand")) => parse_system(text).map(Instance::System),
        _ => parse_colored_graph(text).map(Instance::Colored),
    }
}

pub fn write_colored_graph(cg: &ColoredGraph) -> String {
    let g = cg.graph();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} {}",
        g.node_count(),
        g.edge_count(),
        cg.color_count()
    );
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    for v in 0..g.node_count() {
        let _ = writeln!(out, "{v} {}", cg.color_of(v));
    }
    if let Some(labels) = g.labels() {
        for (v, label) in labels.iter().enumerate() {
            if !label.is_empty() {
                let _ = writeln!(out, "label {v} {label}");
            }
        }
    }
    out
}

pub fn parse_colored_graph(text: &str) -> Result<ColoredGraph> {
    let mut lines = Lines::new(text);
    let (no, header) = lines.next_required("header `n m n_c`")?;
    let [n, m, nc] = numbers::<3>(no, header)?;
    let mut g = read_edges(&mut lines, n, m)?;
    let mut color = vec![usize::MAX; n];
    for _ in 0..n {
        let (no, line) = lines.next_required("color line `v c`")?;
        let [v, c] = numbers::<2>(no, line)?;
        if v >= n {
            return Err(Error::parse(no, format!("node {v} out of range")));
        }
        if color[v] != usize::MAX {
            return Err(Error::parse(no, format!("node {v} colored twice")));
        }
        if c >= nc {
            return Err(Error::parse(no, format!("color {c} out of range")));
        }
        color[v] = c;
    }
    let mut labels: Option<Vec<String>> = None;
    for (no, line) in lines.by_ref() {
        let rest = line
            .strip_prefix("label ")
            .ok_or_else(|| Error::parse(no, "expected `label v text`"))?;
        let (v, text) = rest.split_once(' ').unwrap_or((rest, ""));
        let v: usize = v
            .parse()
            .map_err(|_| Error::parse(no, format!("bad node `{v}`")))?;
        if v >= n {
            return Err(Error::parse(no, format!("node {v} out of range")));
        }
        labels.get_or_insert_with(|| vec![String::new(); n])[v] = text.to_string();
    }
    if let Some(labels) = labels {
        g.set_labels(labels)?;
    }
    ColoredGraph::new(g, color, nc)
}

pub fn write_system(sys: &DependencySystem) -> String {
    let mut out = String::new();
    let d = sys.demand();
    let _ = writeln!(out, "demand {} {}", d.node_count(), d.edge_count());
    for (u, v) in d.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    match sys.supply_graph() {
        Some(s) => {
            let _ = writeln!(out, "supply {} {}", s.node_count(), s.edge_count());
            for (u, v) in s.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        None => {
            let _ = writeln!(out, "supply {} -", sys.supply_count());
        }
    }
    let mode = match sys.direction() {
        Direction::OneWay => "one-way",
        Direction::Bidirectional => "bidirectional",
    };
    let _ = writeln!(out, "mode {mode}");
    for (v, list) in sys.supply_lists().iter().enumerate() {
        let _ = write!(out, "dep {v} ->");
        for s in list {
            let _ = write!(out, " {s}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_system(text: &str) -> Result<DependencySystem> {
    let mut lines = Lines::new(text);
    let (no, line) = lines.next_required("`demand n m`")?;
    let [n, m] = keyword_numbers(no, line, "demand")?;
    let demand = read_edges(&mut lines, n, m)?;

    let (no, line) = lines.next_required("`supply n m`")?;
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "supply" {
        return Err(Error::parse(no, "expected `supply n m` or `supply n -`"));
    }
    let supply_count = parse_num(no, fields[1])?;
    let supply_graph = match fields[2] {
        "-" => None,
        m => Some(read_edges(&mut lines, supply_count, parse_num(no, m)?)?),
    };

    let (no, line) = lines.next_required("`mode one-way|bidirectional`")?;
    let direction = match line.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["mode", "one-way"] => Direction::OneWay,
        ["mode", "bidirectional"] => Direction::Bidirectional,
        _ => {
            return Err(Error::parse(
                no,
                "expected `mode one-way` or `mode bidirectional`",
            ))
        }
    };

    let mut supplies_of: Vec<Option<Vec<usize>>> = vec![None; n];
    for (no, line) in lines.by_ref() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 3 || fields[0] != "dep" || fields[2] != "->" {
            return Err(Error::parse(no, "expected `dep u -> s1 s2 ...`"));
        }
        let v = parse_num(no, fields[1])?;
        if v >= n {
            return Err(Error::parse(no, format!("demand node {v} out of range")));
        }
        if supplies_of[v].is_some() {
            return Err(Error::parse(no, format!("demand node {v} listed twice")));
        }
        let list = fields[3..]
            .iter()
            .map(|f| parse_num(no, f))
            .collect::<Result<Vec<usize>>>()?;
        supplies_of[v] = Some(list);
    }
    let supplies_of = supplies_of
        .into_iter()
        .enumerate()
        .map(|(v, l)| {
            l.ok_or_else(|| Error::parse(lines.last, format!("no dep line for node {v}")))
        })
        .collect::<Result<Vec<_>>>()?;
    DependencySystem::new(demand, supply_count, supply_graph, supplies_of, direction)
}

pub fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

/// Non-blank, non-comment lines with 1-based line numbers.
struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate().peekable(),
            last: 0,
        }
    }

    fn skip_blank(&mut self) {
        while let Some((_, l)) = self.inner.peek() {
            let t = l.trim();
            if t.is_empty() || t.starts_with('#') {
                self.inner.next();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<(usize, &'a str)> {
        self.skip_blank();
        self.inner.peek().map(|&(i, l)| (i + 1, l.trim()))
    }

    fn next_required(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let last = self.last;
        self.next().ok_or_else(|| {
            Error::parse(
                last + 1,
                format!("unexpected end of input, expected {what}"),
            )
        })
    }
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<Self::Item> {
        self.skip_blank();
        let (i, l) = self.inner.next()?;
        self.last = i + 1;
        Some((i + 1, l.trim()))
    }
}

fn parse_num(line: usize, field: &str) -> Result<usize> {
    field.parse().map_err(|_| {
        Error::parse(
            line,
            format!("expected a non-negative integer, got `{field}`"),
        )
    })
}

fn numbers<const K: usize>(line: usize, text: &str) -> Result<[usize; K]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != K {
        return Err(Error::parse(
            line,
            format!("expected {K} fields, got {}", fields.len()),
        ));
    }
    let mut out = [0; K];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = parse_num(line, f)?;
    }
    Ok(out)
}

fn keyword_numbers<const K: usize>(line: usize, text: &str, keyword: &str) -> Result<[usize; K]> {
    let rest = text
        .strip_prefix(keyword)
        .filter(|r| r.starts_with(' '))
        .ok_or_else(|| Error::parse(line, format!("expected `{keyword}` header")))?;
    numbers(line, rest)
}

fn read_edges(lines: &mut Lines<'_>, n: usize, m: usize) -> Result<Graph> {
    let mut g = Graph::new(n);
    for _ in 0..m {
        let (no, line) = lines.next_required("edge line `u v`")?;
        let [u, v] = numbers::<2>(no, line)?;
        match g.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => return Err(Error::parse(no, format!("duplicate edge {u} {v}"))),
            Err(e) => return Err(Error::parse(no, e.to_string())),
        }
    }
    Ok(g)
}
