//! Line-based setup files.
//!
//! ```text
//! # Z/4 with the product pairing
//! A: 4
//! A': 4
//! N: 4
//! pair: 1
//! B:
//! C: 2
//! B':
//! C': 2
//! ```
//!
//! Orders and matrix rows are integers; matrix rows are separated by `;`.
//! Generators are integers for rank one groups and `(x,y,...)` tuples otherwise.

use super::group::FiniteAbelianGroup;
use super::setup::{PairingSetup, Sub};
use crate::error::{Error, Result};

const KEYS: [&str; 8] = ["A", "A'", "N", "pair", "B", "C", "B'", "C'"];

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn integers(s: &str, offset: usize) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    let mut rest = s;
    let mut pos = offset;
    loop {
        let trimmed = rest.trim_start();
        pos += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return Ok(out);
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        out.push(tok.parse().map_err(|_| parse_err(pos, format!("expected a non-negative integer, found '{tok}'")))?);
        pos += end;
        rest = &trimmed[end..];
    }
}

fn tuples(s: &str, offset: usize, rank: usize) -> Result<Vec<Vec<u64>>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b',' {
            i += 1;
        } else if c == b'(' {
            let close = s[i..].find(')').ok_or_else(|| parse_err(offset + i, "unclosed '('"))? + i;
            let inner = s[i + 1..close].replace(',', " ");
            let v = integers(&inner, offset + i + 1)?;
            if v.len() != rank {
                return Err(parse_err(offset + i, format!("tuple has {} entries, expected {rank}", v.len())));
            }
            out.push(v);
            i = close + 1;
        } else if c.is_ascii_digit() {
            let end = s[i..].find(|ch: char| !ch.is_ascii_digit()).map_or(s.len(), |e| e + i);
            if rank != 1 {
                return Err(parse_err(offset + i, format!("bare integer for a group of rank {rank}")));
            }
            out.push(vec![s[i..end].parse().map_err(|_| parse_err(offset + i, "integer too large"))?]);
            i = end;
        } else {
            return Err(parse_err(offset + i, format!("unexpected character '{}'", c as char)));
        }
    }
    Ok(out)
}

/// Parses a setup file. Positions in errors are byte offsets into `text`.
pub fn parse_setup(text: &str) -> Result<PairingSetup> {
    let mut fields: [Option<(usize, &str)>; 8] = [None; 8];
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.split('#').next().unwrap_or("").trim_end();
        if body.trim().is_empty() {
            continue;
        }
        let colon = body.find(':').ok_or_else(|| parse_err(start, "expected 'key: value'"))?;
        let key = body[..colon].trim();
        let idx =
            KEYS.iter().position(|k| *k == key).ok_or_else(|| parse_err(start, format!("unknown key '{key}'")))?;
        if fields[idx].is_some() {
            return Err(parse_err(start, format!("duplicate key '{key}'")));
        }
        fields[idx] = Some((start + colon + 1, &body[colon + 1..]));
    }
    let need = |i: usize| fields[i].ok_or_else(|| parse_err(text.len(), format!("missing key '{}'", KEYS[i])));
    let (pa, sa) = need(0)?;
    let a = FiniteAbelianGroup::new(integers(sa, pa)?)?;
    let ap = match fields[1] {
        Some((p, s)) => FiniteAbelianGroup::new(integers(s, p)?)?,
        None => a.clone(),
    };
    let (pn, sn) = need(2)?;
    let n = match integers(sn, pn)?.as_slice() {
        [n] => *n,
        _ => return Err(parse_err(pn, "N takes a single cyclic order")),
    };
    let (pm, sm) = need(3)?;
    let mut matrix = Vec::new();
    let mut row_pos = pm;
    for row in sm.split(';') {
        matrix.push(integers(row, row_pos)?);
        row_pos += row.len() + 1;
    }
    let mut gens: [Vec<Vec<u64>>; 4] = Default::default();
    for (k, slot) in gens.iter_mut().enumerate() {
        let rank = if k < 2 { a.rank() } else { ap.rank() };
        if let Some((p, s)) = fields[4 + k] {
            *slot = tuples(s, p, rank)?;
        }
    }
    PairingSetup::new(a, ap, n, matrix, gens)
}

/// Writes a setup in the file format, listing every subgroup element as a generator.
pub fn render_setup(s: &PairingSetup) -> String {
    let orders = |g: &FiniteAbelianGroup| g.orders().iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" ");
    let rows: Vec<String> =
        s.matrix().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
    let mut out = format!("A: {}\nA': {}\nN: {}\npair: {}\n", orders(s.a()), orders(s.ap()), s.n(), rows.join("; "));
    for (key, which) in [("B", Sub::B), ("C", Sub::C), ("B'", Sub::Bp), ("C'", Sub::Cp)] {
        let g = if matches!(which, Sub::B | Sub::C) { s.a() } else { s.ap() };
        let elems: Vec<String> = s.subgroup(which).iter().filter(|&&x| x != 0).map(|&x| g.show(x)).collect();
        out.push_str(&format!("{key}: {}\n", elems.join(" ")));
    }
    out
}
