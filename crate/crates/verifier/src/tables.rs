//! The two tables of partitions of 9, as text grids and JSON.

use serde_json::{json, Value};
use tcorelab_core::cores::phi1;
use tcorelab_core::enumerate::enumerate_partitions_bounded;
use tcorelab_core::orbits::orbits_of_weight;
use tcorelab_core::stats::{srank, st_crank};
use tcorelab_core::{Orbit, Partition};

use crate::{Result, VerifyError};

pub const TABLE1_GOLDEN: &str = include_str!("../golden/table1.txt");
pub const TABLE2_GOLDEN: &str = include_str!("../golden/table2.txt");

const WEIGHT: usize = 9;
const TITLE1: &str = "Table 1. Partitions of 9 by srank mod 4 (rows) and St-crank mod 5 (columns).";
const TITLE2: &str =
    "Table 2. Partitions of 9 in orbits of the shifted orbit map; column k holds 5-core crank k mod 5.";

/// `cells[i][k]`: partitions with srank ≡ 2i (mod 4) and St-crank ≡ k
/// (mod 5), ascending by parts.
fn table1_cells(bound: usize) -> Result<[[Vec<Partition>; 5]; 2]> {
    let mut cells: [[Vec<Partition>; 5]; 2] = Default::default();
    for p in enumerate_partitions_bounded(WEIGHT, bound)? {
        let i = srank(&p).rem_euclid(4) as usize / 2;
        cells[i][st_crank(&p).rem_euclid(5) as usize].push(p);
    }
    for row in cells.iter_mut() {
        for cell in row.iter_mut() {
            cell.sort();
        }
    }
    Ok(cells)
}

/// Orbits in display order: srank class, then quotient weight, then the
/// crank-0 member ascending by parts.
fn table2_orbits(bound: usize) -> Result<Vec<Orbit>> {
    let mut keyed = Vec::new();
    for o in orbits_of_weight(WEIGHT, true, bound)? {
        let qw = phi1(o.representative(), 5)?.quotient_weight();
        keyed.push(((o.srank_mod4, qw, o.representative().clone()), o));
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, o)| o).collect())
}

/// `π->((core),k)` when the 5-quotient is `(1)` in slot `k`; the bare
/// partition when it is a 5-core.
fn image_cell(p: &Partition) -> Result<String> {
    let cq = phi1(p, 5)?;
    let note = p.frequency_notation();
    Ok(match cq.quotient_weight() {
        0 => note,
        1 => {
            let k = cq.quotient.iter().position(|q| !q.is_empty()).expect("weight 1");
            format!("{note}->({},{k})", cq.core.frequency_notation())
        }
        _ => {
            let q: Vec<String> = cq.quotient.iter().map(Partition::frequency_notation).collect();
            format!("{note}->({},[{}])", cq.core.frequency_notation(), q.join(";"))
        }
    })
}

/// Pipe-separated grid, columns padded to their widest cell, with a rule
/// under the header and between row blocks. No trailing whitespace.
fn grid(title: &str, header: &[String], blocks: &[Vec<Vec<String>>]) -> String {
    let cols = header.len();
    let width: Vec<usize> = (0..cols)
        .map(|c| {
            blocks
                .iter()
                .flatten()
                .map(|r| r[c].chars().count())
                .chain([header[c].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, &w)| format!("{c:<w$}")).collect();
        padded.join(" | ").trim_end().to_string()
    };
    let rule = width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("-+-");
    let mut out = vec![title.to_string(), String::new(), line(header)];
    for b in blocks {
        out.push(rule.clone());
        out.extend(b.iter().map(|r| line(r)));
    }
    out.join("\n") + "\n"
}

fn header() -> Vec<String> {
    std::iter::once("srank".to_string()).chain((0..5).map(|k| k.to_string())).collect()
}

pub fn table1_text(bound: usize) -> Result<String> {
    let cells = table1_cells(bound)?;
    let blocks: Vec<Vec<Vec<String>>> = cells
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let height = row.iter().map(Vec::len).max().unwrap_or(0);
            (0..height)
                .map(|r| {
                    let label = if r == 0 { (2 * i).to_string() } else { String::new() };
                    std::iter::once(label)
                        .chain(row.iter().map(|c| c.get(r).map(Partition::frequency_notation).unwrap_or_default()))
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(grid(TITLE1, &header(), &blocks))
}

pub fn table2_text(bound: usize) -> Result<String> {
    let orbits = table2_orbits(bound)?;
    let mut blocks: Vec<Vec<Vec<String>>> = Vec::new();
    let mut last = None;
    for o in &orbits {
        if last != Some(o.srank_mod4) {
            blocks.push(Vec::new());
            last = Some(o.srank_mod4);
        }
        let label = o.srank_mod4.map(|s| s.to_string()).unwrap_or_else(|| "-".into());
        let mut row = vec![label];
        for m in &o.members {
            row.push(image_cell(m)?);
        }
        blocks.last_mut().expect("pushed above").push(row);
    }
    Ok(grid(TITLE2, &header(), &blocks))
}

pub fn table1_json(bound: usize) -> Result<Value> {
    let cells = table1_cells(bound)?;
    let mut out = Vec::new();
    for (i, row) in cells.iter().enumerate() {
        for (k, cell) in row.iter().enumerate() {
            out.push(json!({
                "srank_mod4": 2 * i,
                "st_crank_mod5": k,
                "members": cell.iter().map(Partition::to_csv).collect::<Vec<_>>(),
            }));
        }
    }
    Ok(json!({ "table": "table1", "weight": WEIGHT, "cells": out }))
}

pub fn table2_json(bound: usize) -> Result<Value> {
    let mut out = Vec::new();
    for o in table2_orbits(bound)? {
        let mut members = Vec::new();
        for (k, m) in o.members.iter().enumerate() {
            let cq = phi1(m, 5)?;
            members.push(json!({
                "partition": m.to_csv(),
                "c5": k,
                "core": cq.core.to_csv(),
                "quotient": cq.quotient.iter().map(Partition::to_csv).collect::<Vec<_>>(),
            }));
        }
        out.push(json!({ "srank_mod4": o.srank_mod4, "members": members }));
    }
    Ok(json!({ "table": "table2", "weight": WEIGHT, "orbits": out }))
}

/// Renders `table1` or `table2` as text, or as one JSON line.
pub fn render_table(name: &str, as_json: bool, bound: usize) -> Result<String> {
    match (name, as_json) {
        ("table1", false) => table1_text(bound),
        ("table2", false) => table2_text(bound),
        ("table1", true) => Ok(table1_json(bound)?.to_string() + "\n"),
        ("table2", true) => Ok(table2_json(bound)?.to_string() + "\n"),
        _ => Err(VerifyError::UnknownTable(name.to_string())),
    }
}
