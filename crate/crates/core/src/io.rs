//! Plain-text graph and set-cover formats.
//!
//! Graph files: `#` comment lines, a header `n m`, then `m` lines `u v`.
//! The writer emits edges with `u < v` in lexicographic order; the reader
//! accepts any orientation and order.
//!
//! Set-cover files: header `n m k`, then `m` lines `c e_1 … e_c`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::SetCoverInstance;
use crate::graph::Graph;

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("expected a non-negative integer, found {tok:?}"),
            })
        })
        .collect()
}

fn expect_len(line_no: usize, nums: &[usize], len: usize) -> Result<()> {
    if nums.len() != len {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("expected {len} fields, found {}", nums.len()),
        });
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    let header = parse_numbers(hl, header)?;
    expect_len(hl, &header, 2)?;
    let (n, m) = (header[0], header[1]);
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hl;
    for (ln, line) in lines {
        let nums = parse_numbers(ln, line)?;
        expect_len(ln, &nums, 2)?;
        edges.push((nums[0], nums[1]));
        last_line = ln;
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// A set-cover instance together with the decision threshold `k` from the file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverFile {
    pub instance: SetCoverInstance,
    pub k: usize,
}

pub fn parse_set_cover(text: &str) -> Result<SetCoverFile> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    let header = parse_numbers(hl, header)?;
    expect_len(hl, &header, 3)?;
    let (n, m, k) = (header[0], header[1], header[2]);
    let mut family = Vec::with_capacity(m);
    for (ln, line) in lines {
        let nums = parse_numbers(ln, line)?;
        let Some((&c, elems)) = nums.split_first() else {
            unreachable!("data lines are nonempty");
        };
        expect_len(ln, elems, c)?;
        if let Some(&e) = elems.iter().find(|&&e| e >= n) {
            return Err(Error::Parse {
                line: ln,
                msg: format!("element {e} outside universe of size {n}"),
            });
        }
        family.push(elems.to_vec());
    }
    if family.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header announces {m} subsets, found {}", family.len()),
        });
    }
    Ok(SetCoverFile {
        instance: SetCoverInstance::new(n, family)?,
        k,
    })
}

pub fn write_set_cover(file: &SetCoverFile) -> String {
    let inst = &file.instance;
    let mut out = String::new();
    writeln!(out, "{} {} {}", inst.universe_size(), inst.family().len(), file.k).unwrap();
    for subset in inst.family() {
        write!(out, "{}", subset.len()).unwrap();
        for e in subset {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    out
}
