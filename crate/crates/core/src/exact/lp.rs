//! CPLEX LP-format export of the potential-based integer programs.
//!
//! Variables are `c{r}` per used color, `y{v}` (cut node) and `p{v}`
//! (potential) per node, and `z` (trivializing case) for the global
//! program. Output depends only on the instance, so it is byte-stable.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use crate::colored::ColoredGraph;
use crate::error::Result;

const TERMS_PER_LINE: usize = 8;

/// Writes the s-t program when `st` is given, the global one otherwise.
pub fn write_lp<W: Write>(
    cg: &ColoredGraph,
    st: Option<(usize, usize)>,
    out: &mut W,
) -> Result<()> {
    match st {
        Some((s, t)) => cg.check_pair(s, t)?,
        None => cg.require_global()?,
    }
    let g = cg.graph();
    let n = g.node_count();
    let colors = cg.used_colors();
    let mut text = String::new();

    text.push_str(
        match st {
            Some((s, t)) => format!("\\ minimum color s-t node cut, s = {s}, t = {t}\n"),
            None => "\\ minimum color node cut\n".to_string(),
        }
        .as_str(),
    );
    text.push_str("Minimize\n");
    let objective: Vec<String> = colors.iter().map(|r| format!("c{r}")).collect();
    push_row(&mut text, "obj", &objective, "");
    text.push_str("Subject To\n");

    for (k, (i, j)) in g.edges().enumerate() {
        let lo = [
            format!("p{i}"),
            format!("- p{j}"),
            format!("+ y{i}"),
            format!("+ y{j}"),
        ];
        push_row(&mut text, &format!("e{k}_lo"), &lo, ">= 0");
        let hi = [
            format!("p{i}"),
            format!("- p{j}"),
            format!("- y{i}"),
            format!("- y{j}"),
        ];
        push_row(&mut text, &format!("e{k}_hi"), &hi, "<= 0");
    }

    match st {
        Some((s, t)) => {
            let _ = writeln!(text, " ps: p{s} = 0");
            let _ = writeln!(text, " pt: p{t} = 1");
            let _ = writeln!(text, " ys: y{s} = 0");
            let _ = writeln!(text, " yt: y{t} = 0");
        }
        None => {
            let m = 2 * n;
            for v in 0..n {
                let _ = writeln!(text, " cp{v}: p{v} - y{v} >= 0");
            }
            let p_terms = signed_terms('p', n, "+");
            let y_minus = signed_terms('y', n, "-");
            let y_plus = signed_terms('y', n, "+");

            let mut row = p_terms.clone();
            row.extend(y_minus);
            row.push(format!("+ {m} z"));
            push_row(&mut text, "one1", &row, ">= 1");

            let mut row = p_terms;
            row.push(format!("- {m} z"));
            push_row(&mut text, "one0", &row, &format!("<= {}", n - 1));

            let mut row = y_plus;
            row.push(format!("- {m} z"));
            let rhs = n as i64 - 1 - m as i64;
            push_row(&mut text, "triv", &row, &format!(">= {rhs}"));
        }
    }
    for v in 0..n {
        let _ = writeln!(text, " col{v}: y{v} - c{} <= 0", cg.color_of(v));
    }

    text.push_str("Bounds\n");
    for v in 0..n {
        let _ = writeln!(text, " p{v} >= 0");
        let _ = writeln!(text, " y{v} >= 0");
    }
    text.push_str("Binary\n");
    let mut binaries: Vec<String> = colors.iter().map(|r| format!("c{r}")).collect();
    if st.is_none() {
        for v in 0..n {
            binaries.push(format!("y{v}"));
            binaries.push(format!("p{v}"));
        }
        binaries.push("z".to_string());
    }
    for chunk in binaries.chunks(TERMS_PER_LINE) {
        let _ = writeln!(text, " {}", chunk.join(" "));
    }
    text.push_str("End\n");
    out.write_all(text.as_bytes())?;
    Ok(())
}

pub fn export_milp(cg: &ColoredGraph, st: Option<(usize, usize)>, path: &Path) -> Result<()> {
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_lp(cg, st, &mut file)?;
    file.flush()?;
    Ok(())
}

fn signed_terms(prefix: char, n: usize, sign: &str) -> Vec<String> {
    (0..n)
        .map(|v| {
            if v == 0 && sign == "+" {
                format!("{prefix}{v}")
            } else {
                format!("{sign} {prefix}{v}")
            }
        })
        .collect()
}

/// One named row, wrapped after every few terms; `rhs` is empty for the
/// objective.
fn push_row(text: &mut String, name: &str, terms: &[String], rhs: &str) {
    let _ = write!(text, " {name}:");
    for (i, chunk) in terms.chunks(TERMS_PER_LINE).enumerate() {
        if i > 0 {
            text.push_str("\n   ");
        }
        for (k, term) in chunk.iter().enumerate() {
            // the objective is a plain sum
            if rhs.is_empty() && (i > 0 || k > 0) {
                text.push_str(" +");
            }
            text.push(' ');
            text.push_str(term);
        }
    }
    if !rhs.is_empty() {
        text.push(' ');
        text.push_str(rhs);
    }
    text.push('\n');
}
