//! Integer program for domination in CPLEX LP text format.
//!
//! One binary `x_j` per vertex, objective `Σ x_j`, and one covering row
//! `cov_i: Σ_{j ∈ N[i]} x_j >= 1` per vertex. No solver is bundled; the file
//! is meant for an external MILP solver.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

/// Terms per physical line before wrapping onto a continuation line.
const TERMS_PER_LINE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("lp line {line}: {reason}")]
pub struct LpError {
    pub line: usize,
    pub reason: String,
}

/// Variables are 1-based indices `j` of `x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpDocument {
    pub objective: Vec<usize>,
    /// `(name, variables)`, each row meaning `Σ x_j >= 1`.
    pub constraints: Vec<(String, Vec<usize>)>,
    pub binaries: Vec<usize>,
}

impl LpDocument {
    pub fn from_graph(g: &Graph) -> Self {
        let constraints = (0..g.n())
            .map(|i| {
                let mut row: Vec<usize> = g.closed_neighbors(i).map(|j| j + 1).collect();
                row.sort_unstable();
                (format!("cov_{}", i + 1), row)
            })
            .collect();
        Self {
            objective: (1..=g.n()).collect(),
            constraints,
            binaries: (1..=g.n()).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("Minimize\n");
        write_row(&mut out, "obj", &self.objective, "");
        out.push_str("Subject To\n");
        for (name, row) in &self.constraints {
            write_row(&mut out, name, row, " >= 1");
        }
        out.push_str("Binary\n");
        for j in &self.binaries {
            let _ = writeln!(out, " x_{j}");
        }
        out.push_str("End\n");
        out
    }

    /// Whether the 0/1 assignment `x` (indexed by `j − 1`) satisfies every row.
    pub fn satisfied_by(&self, x: &[bool]) -> bool {
        self.constraints
            .iter()
            .all(|(_, row)| row.iter().any(|&j| x[j - 1]))
    }

    pub fn objective_value(&self, x: &[bool]) -> usize {
        self.objective.iter().filter(|&&j| x[j - 1]).count()
    }
}

fn write_row(out: &mut String, name: &str, vars: &[usize], tail: &str) {
    let _ = write!(out, " {name}:");
    for (k, j) in vars.iter().enumerate() {
        if k == 0 {
            let _ = write!(out, " x_{j}");
        } else if k % TERMS_PER_LINE == 0 {
            let _ = write!(out, "\n   + x_{j}");
        } else {
            let _ = write!(out, " + x_{j}");
        }
    }
    out.push_str(tail);
    out.push('\n');
}

pub fn write_lp(g: &Graph) -> String {
    LpDocument::from_graph(g).to_text()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Preamble,
    Objective,
    Constraints,
    Binary,
    Done,
}

/// Reads back files produced by [`write_lp`], rejecting anything outside the
/// subset of the format this crate emits.
pub fn parse_lp(text: &str) -> Result<LpDocument, LpError> {
    let err = |line: usize, reason: &str| LpError {
        line,
        reason: reason.to_string(),
    };

    // (section, first line number, statement text with continuations joined)
    let mut statements: Vec<(Section, usize, String)> = Vec::new();
    let mut section = Section::Preamble;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('\\') {
            continue;
        }
        let keyword = match line.to_ascii_lowercase().as_str() {
            "minimize" => Some(Section::Objective),
            "subject to" => Some(Section::Constraints),
            "binary" => Some(Section::Binary),
            "end" => Some(Section::Done),
            _ => None,
        };
        if let Some(next) = keyword {
            section = next;
            continue;
        }
        match section {
            Section::Preamble | Section::Done => {
                return Err(err(line_no, "text outside a section"))
            }
            Section::Binary => statements.push((section, line_no, line.to_string())),
            Section::Objective | Section::Constraints => {
                if line.starts_with('+') {
                    match statements.last_mut() {
                        Some((s, _, body)) if *s == section => {
                            body.push(' ');
                            body.push_str(line);
                        }
                        _ => return Err(err(line_no, "continuation without a row")),
                    }
                } else {
                    statements.push((section, line_no, line.to_string()));
                }
            }
        }
    }
    if section != Section::Done {
        return Err(err(0, "missing `End`"));
    }

    let mut objective = None;
    let mut constraints = Vec::new();
    let mut binaries = Vec::new();
    for (section, line_no, body) in statements {
        if section == Section::Binary {
            for tok in body.split_whitespace() {
                binaries.push(parse_var(tok).ok_or_else(|| err(line_no, "bad variable"))?);
            }
            continue;
        }
        let (name, expr) = body
            .split_once(':')
            .ok_or_else(|| err(line_no, "row without a name"))?;
        let name = name.trim().to_string();
        let expr = match section {
            Section::Constraints => expr
                .trim_end()
                .strip_suffix(">= 1")
                .ok_or_else(|| err(line_no, "right-hand side must be `>= 1`"))?,
            _ => expr,
        };
        let vars = parse_sum(expr).ok_or_else(|| err(line_no, "malformed sum of variables"))?;
        if section == Section::Objective {
            if name != "obj" || objective.is_some() {
                return Err(err(line_no, "expected a single objective named `obj`"));
            }
            objective = Some(vars);
        } else {
            constraints.push((name, vars));
        }
    }
    Ok(LpDocument {
        objective: objective.ok_or_else(|| err(0, "missing objective"))?,
        constraints,
        binaries,
    })
}

/// `x_a + x_b + ...` with unit coefficients.
fn parse_sum(expr: &str) -> Option<Vec<usize>> {
    let mut vars = Vec::new();
    let mut expect_var = true;
    for tok in expr.split_whitespace() {
        if expect_var {
            vars.push(parse_var(tok)?);
        } else if tok != "+" {
            return None;
        }
        expect_var = !expect_var;
    }
    (!expect_var).then_some(vars)
}

fn parse_var(tok: &str) -> Option<usize> {
    tok.strip_prefix("x_")?.parse().ok().filter(|&j| j > 0)
}
