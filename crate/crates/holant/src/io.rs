//! Text formats for signatures (`.sig`) and signature grids (`.grid`).
//!
//! ```text
//! signature f6 arity 6
//! entries lex
//! 1 0 0 -1 ...
//! ```
//!
//! A grid file holds `use <file>`, `vertex <id> <name>`, `edge <id>.<port> <id>.<port>`
//! and `dangling <id>.<port>` lines. Blank lines and `#` comments are ignored
//! in both formats.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use exact_field::ExactNumber;

use crate::catalog;
use crate::error::{HolantError, Result};
use crate::gadget::{Port, SignatureGrid};
use crate::signature::{Signature, MAX_ARITY};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSignature {
    pub name: String,
    pub signature: Signature,
}

fn format_err(file: &str, line: usize, msg: impl Into<String>) -> HolantError {
    HolantError::Format { file: file.to_string(), line, msg: msg.into() }
}

/// Lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((k + 1, l))
    })
}

pub fn parse_signature(text: &str, file: &str) -> Result<NamedSignature> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| format_err(file, 1, "empty signature file"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 4 || h[0] != "signature" || h[2] != "arity" {
        return Err(format_err(file, ln, "expected 'signature <name> arity <n>'"));
    }
    let arity: usize = h[3].parse().map_err(|_| format_err(file, ln, format!("bad arity '{}'", h[3])))?;
    if arity > MAX_ARITY {
        return Err(format_err(file, ln, format!("arity {arity} exceeds {MAX_ARITY}")));
    }
    let (ln, order) = lines.next().ok_or_else(|| format_err(file, ln + 1, "missing 'entries lex' line"))?;
    let mut tokens = order.split_whitespace();
    if tokens.next() != Some("entries") || tokens.next() != Some("lex") {
        return Err(format_err(file, ln, "expected 'entries lex'"));
    }
    let mut entries = Vec::with_capacity(1 << arity);
    let mut push = |ln: usize, tok: &str| -> Result<()> {
        let x = ExactNumber::parse(tok).map_err(|e| format_err(file, ln, format!("entry {}: {e}", entries.len() + 1)))?;
        entries.push(x);
        Ok(())
    };
    for tok in tokens {
        push(ln, tok)?;
    }
    let mut last = ln;
    for (ln, l) in lines {
        for tok in l.split_whitespace() {
            push(ln, tok)?;
        }
        last = ln;
    }
    if entries.len() != 1 << arity {
        return Err(format_err(file, last, format!("expected {} entries, found {}", 1usize << arity, entries.len())));
    }
    Ok(NamedSignature { name: h[1].to_string(), signature: Signature::new(arity, entries)? })
}

/// Entries are written eight per line.
pub fn write_signature(name: &str, f: &Signature) -> String {
    let mut out = format!("signature {name} arity {}\nentries lex\n", f.arity());
    for chunk in f.entry_strings().chunks(8) {
        out.push_str(&chunk.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_signature_file(path: &Path) -> Result<NamedSignature> {
    let label = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| format_err(&label, 0, e.to_string()))?;
    parse_signature(&text, &label)
}

/// A signature given either as a path to a `.sig` file or as a catalog name.
pub fn load_signature(arg: &str) -> Result<NamedSignature> {
    let p = Path::new(arg);
    if p.exists() {
        return read_signature_file(p);
    }
    Ok(NamedSignature { name: arg.to_string(), signature: catalog::by_name(arg)? })
}

fn parse_port(tok: &str, grid: &SignatureGrid, file: &str, ln: usize) -> Result<Port> {
    let (id, port) = tok.rsplit_once('.').ok_or_else(|| format_err(file, ln, format!("port '{tok}' is not of the form <vertex>.<port>")))?;
    let v = grid.vertex_index(id).ok_or_else(|| format_err(file, ln, format!("port {tok}: unknown vertex '{id}'")))?;
    let p: usize = port.parse().map_err(|_| format_err(file, ln, format!("port {tok}: '{port}' is not a port number")))?;
    let arity = grid.vertices[v].signature.arity();
    if p == 0 || p > arity {
        return Err(format_err(file, ln, format!("port {tok}: vertex '{id}' has ports 1..={arity}")));
    }
    Ok((v, p))
}

/// Parse a grid. `use` paths are resolved against `base`.
pub fn parse_grid(text: &str, file: &str, base: &Path) -> Result<SignatureGrid> {
    let mut imported: HashMap<String, Signature> = HashMap::new();
    let mut grid = SignatureGrid::new();
    let mut used: HashMap<Port, usize> = HashMap::new();
    let mut claim = |p: Port, tok: &str, ln: usize| -> Result<()> {
        if let Some(prev) = used.insert(p, ln) {
            return Err(format_err(file, ln, format!("port {tok} already used on line {prev}")));
        }
        Ok(())
    };
    let mut last = 1;
    for (ln, l) in content_lines(text) {
        last = ln;
        let t: Vec<&str> = l.split_whitespace().collect();
        match t.as_slice() {
            ["use", path] => {
                let p: PathBuf = base.join(path);
                let s = read_signature_file(&p).map_err(|e| format_err(file, ln, format!("use {path}: {e}")))?;
                imported.insert(s.name, s.signature);
            }
            ["vertex", id, name] => {
                if id.contains('.') || grid.vertex_index(id).is_some() {
                    return Err(format_err(file, ln, format!("vertex id '{id}' is invalid or repeated")));
                }
                let sig = match imported.get(*name) {
                    Some(s) => s.clone(),
                    None => catalog::by_name(name).map_err(|e| format_err(file, ln, e.to_string()))?,
                };
                grid.add_vertex(*id, *name, sig);
            }
            ["edge", a, b] => {
                let pa = parse_port(a, &grid, file, ln)?;
                let pb = parse_port(b, &grid, file, ln)?;
                claim(pa, a, ln)?;
                claim(pb, b, ln)?;
                grid.add_edge(pa, pb);
            }
            ["dangling", a] => {
                let pa = parse_port(a, &grid, file, ln)?;
                claim(pa, a, ln)?;
                grid.add_dangling(pa);
            }
            _ => return Err(format_err(file, ln, format!("unrecognized line '{l}'"))),
        }
    }
    grid.validate().map_err(|e| format_err(file, last, e.to_string()))?;
    Ok(grid)
}

pub fn read_grid_file(path: &Path) -> Result<SignatureGrid> {
    let label = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| format_err(&label, 0, e.to_string()))?;
    parse_grid(&text, &label, path.parent().unwrap_or(Path::new(".")))
}

/// Grid text referring to vertex labels; signatures must be resolvable
/// (catalog names, or imported by the caller-supplied `use` lines).
pub fn write_grid(grid: &SignatureGrid, uses: &[&str]) -> String {
    let port = |(v, p): Port| format!("{}.{}", grid.vertices[v].id, p);
    let mut out = String::new();
    for u in uses {
        out.push_str(&format!("use {u}\n"));
    }
    for v in &grid.vertices {
        out.push_str(&format!("vertex {} {}\n", v.id, v.label));
    }
    for &(a, b) in &grid.edges {
        out.push_str(&format!("edge {} {}\n", port(a), port(b)));
    }
    for &d in &grid.dangling {
        out.push_str(&format!("dangling {}\n", port(d)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_round_trip() {
        let f = catalog::f6_hat_h();
        let text = write_signature("f6hatH", &f);
        let back = parse_signature(&text, "mem").unwrap();
        assert_eq!(back.signature, f);
        assert_eq!(back.name, "f6hatH");
    }

    #[test]
    fn signature_errors_carry_lines() {
        let e = parse_signature("signature x arity 1\nentries lex\n1 q\n", "x.sig").unwrap_err();
        assert!(e.to_string().starts_with("x.sig:3:"), "{e}");
        let e = parse_signature("signature x arity 2\nentries lex 1 2 3\n", "x.sig").unwrap_err();
        assert!(e.to_string().contains("expected 4 entries"), "{e}");
    }

    #[test]
    fn double_edge() {
        let g = parse_grid("vertex a eq2\nvertex b eq2\nedge a.1 b.1\nedge a.2 b.2\n", "mem", Path::new(".")).unwrap();
        assert_eq!(g.evaluate().unwrap(), ExactNumber::from_int(2));
    }

    #[test]
    fn bad_ports_are_named() {
        let e = parse_grid("vertex a eq2\nvertex b eq2\nedge a.3 b.1\n", "g", Path::new(".")).unwrap_err();
        assert!(e.to_string().contains("port a.3"), "{e}");
        let e = parse_grid("vertex a eq2\nedge a.1 a.1\n", "g", Path::new(".")).unwrap_err();
        assert!(e.to_string().contains("already used"), "{e}");
        let e = parse_grid("vertex a eq2\nedge a.1 z.1\n", "g", Path::new(".")).unwrap_err();
        assert!(e.to_string().contains("unknown vertex 'z'"), "{e}");
    }
}
