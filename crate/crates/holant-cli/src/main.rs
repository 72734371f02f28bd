use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use boolcomb::graph::{from_bitstring, to_bitstring};
use boolcomb::{canonical_form, independence_bounds, tripartite_2_partitions};
use holant::classify::{classify, Outcome};
use holant::factor::prime_factorize;
use holant::gadget::merge;
use holant::holographic::parse_transform;
use holant::io::{load_signature, read_grid_file, write_signature};
use holant::props::{
    affine_check, bell_property, class_membership, closure_check, enumerate_distance2_squares, first_orth, is_local_affine,
    product_type_check, second_orth, second_orth_consequences, strong_bell_property, ClosureFamily, MergeReport, SigClass,
    SquareKind,
};
use holant::{claims, HolantError, Signature};

#[derive(Parser)]
#[command(name = "holant", version, about = "Exact Boolean Holant signatures, gadgets and classification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Holant value of a closed grid.
    Eval { grid: PathBuf },
    /// Signature of a grid with dangling edges, in .sig format.
    Gate { grid: PathBuf },
    /// Test one property; exit 1 when it does not hold.
    ///
    /// Properties: parity, ars, eo, first-orth, second-orth, orth-consequences,
    /// affine, product, local-affine, irreducible, class <C>, bell,
    /// strong-bell, closure <hat-O|hat-D|bell-A>, squares.
    Check {
        prop: String,
        sig: String,
        args: Vec<String>,
    },
    /// Prime factorization.
    Factor { sig: String },
    /// Apply a transform (catalog name, product like Talpha^1*Z, or a,b,c,d).
    Transform { transform: String, sig: String },
    /// Merge variables i and j through a binary signature.
    Merge { sig: String, i: usize, j: usize, b: String },
    /// Classify a set of signatures; exit 1 when nothing is certified.
    Classify {
        #[arg(required = true)]
        sigs: Vec<String>,
    },
    /// Independent sets of the even-weight graphs.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Tripartite 2-partitions of K_n.
    Ktrip { n: usize },
    /// Run the registered claims; exit 1 when any fails.
    VerifyPaper {
        /// Only claims whose id contains this text.
        #[arg(long)]
        claim: Option<String>,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Independence number of G_len (exact up to 8, bounds for 10).
    Alpha { len: usize },
    /// Canonical form of a set of bit strings, one per line.
    Canon { file: PathBuf },
}

// Writes that fail (a closed pipe, say) are dropped so the exit code survives.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outp {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

type Outcome2 = Result<bool, HolantError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn sig(arg: &str) -> Result<Signature, HolantError> {
    Ok(load_signature(arg)?.signature)
}

fn merge_report(r: MergeReport) -> bool {
    match r.violation {
        Some((i, j, b)) => out!("false: merge({i},{j},{b}) fails"),
        None if r.passes => out!("true"),
        None => out!("false: not irreducible"),
    }
    r.passes
}

fn yes_no(b: bool) -> bool {
    out!("{b}");
    b
}

fn check(prop: &str, f: &Signature, args: &[String]) -> Outcome2 {
    let need = |k: usize| -> Result<&String, HolantError> {
        args.get(k).ok_or_else(|| HolantError::Invalid(format!("property '{prop}' needs an argument")))
    };
    Ok(match prop {
        "parity" => {
            out!("{:?}", f.parity());
            f.has_parity()
        }
        "ars" => yes_no(f.ars_check()),
        "eo" => yes_no(f.is_eo()?),
        "first-orth" | "second-orth" => {
            let r = if prop == "first-orth" { first_orth(f)? } else { second_orth(f)? };
            match (&r.constant, &r.violation) {
                (Some(c), _) => out!("true (constant {})", c.to_compact_string()),
                (_, Some(v)) => out!("false: {v}"),
                _ => out!("{}", r.passes),
            }
            r.passes
        }
        "orth-consequences" => {
            let r = second_orth_consequences(f)?;
            match &r.violation {
                None => out!("true ({} identities)", r.checked),
                Some(v) => out!("false: {v}"),
            }
            r.holds
        }
        "affine" => match affine_check(f) {
            Ok(c) => {
                out!("true (lambda {}, {} free variables)", c.lambda.to_compact_string(), c.free_vars.len());
                true
            }
            Err(why) => {
                out!("false: {why}");
                false
            }
        },
        "product" => yes_no(product_type_check(f).is_some()),
        "local-affine" => yes_no(is_local_affine(f)),
        "irreducible" => yes_no(holant::factor::is_irreducible(f)?),
        "class" => yes_no(class_membership(f, need(0)?.parse::<SigClass>()?)?),
        "bell" => merge_report(bell_property(f)?),
        "strong-bell" => merge_report(strong_bell_property(f)?),
        "closure" => merge_report(closure_check(f, need(0)?.parse::<ClosureFamily>()?)?),
        "squares" => {
            let sq = enumerate_distance2_squares(f)?;
            let count = |k| sq.iter().filter(|s| s.kind == k).count();
            let (i, ii, iii, nc) = (count(SquareKind::I), count(SquareKind::II), count(SquareKind::III), count(SquareKind::NonCanonical));
            out!("{} squares: I {i}, II {ii}, III {iii}, non-canonical {nc}", sq.len());
            nc == 0
        }
        _ => return Err(HolantError::Unknown(format!("property '{prop}'"))),
    })
}

fn run(cmd: Cmd) -> Outcome2 {
    match cmd {
        Cmd::Eval { grid } => {
            out!("{}", read_grid_file(&grid)?.evaluate()?.to_compact_string());
        }
        Cmd::Gate { grid } => {
            outp!("{}", write_signature("gate", &read_grid_file(&grid)?.gate_signature()?));
        }
        Cmd::Check { prop, sig: s, args } => return check(&prop, &sig(&s)?, &args),
        Cmd::Factor { sig: s } => {
            let fz = prime_factorize(&sig(&s)?)?;
            out!("scalar {}", fz.scalar.to_compact_string());
            for f in &fz.factors {
                let vars: Vec<String> = f.vars.iter().map(|v| format!("x{v}")).collect();
                out!("({}) {}", vars.join(","), f.signature.entry_strings().join(" "));
            }
        }
        Cmd::Transform { transform, sig: s } => {
            let t = parse_transform(&transform)?;
            let n = load_signature(&s)?;
            outp!("{}", write_signature(&format!("{}_{}", t.name().replace(['*', '^', ','], ""), n.name), &t.apply(&n.signature)));
        }
        Cmd::Merge { sig: s, i, j, b } => {
            let n = load_signature(&s)?;
            let m = merge(&n.signature, i, j, &sig(&b)?)?;
            outp!("{}", write_signature(&format!("merge_{}_{i}_{j}_{b}", n.name), &m));
        }
        Cmd::Classify { sigs } => {
            let named = sigs.iter().map(|a| load_signature(a).map(|n| (n.name, n.signature))).collect::<Result<Vec<_>, _>>()?;
            let v = classify(&named)?;
            outp!("{v}");
            return Ok(v.outcome == Outcome::Tractable);
        }
        Cmd::Graph { cmd: GraphCmd::Alpha { len } } => {
            let b = independence_bounds(len, 200_000)?;
            if b.is_exact() {
                out!("alpha(G{len}) = {}", b.lower);
            } else {
                out!("{} <= alpha(G{len}) <= {}", b.lower, b.upper);
            }
            let w: Vec<String> = b.witness.iter().map(|&x| to_bitstring(x, len)).collect();
            out!("witness {}", w.join(" "));
        }
        Cmd::Graph { cmd: GraphCmd::Canon { file } } => {
            let text = fs::read_to_string(&file).map_err(|e| HolantError::Invalid(format!("{}: {e}", file.display())))?;
            let mut set = Vec::new();
            let mut len = 0;
            for (k, l) in text.lines().map(str::trim).enumerate().filter(|(_, l)| !l.is_empty()) {
                let x = from_bitstring(l).ok_or_else(|| HolantError::Format { file: file.display().to_string(), line: k + 1, msg: format!("'{l}' is not a bit string") })?;
                len = l.len();
                set.push(x);
            }
            let c = canonical_form(&set, len)?;
            out!("{}", c.iter().map(|&x| to_bitstring(x, len)).collect::<Vec<_>>().join(" "));
        }
        Cmd::Ktrip { n } => {
            let pairs = tripartite_2_partitions(n)?;
            out!("K{n}: {} tripartite 2-partitions", pairs.len());
            let show = |p: &[u32; 3]| p.iter().map(|m| format!("{{{}}}", (0..n).filter(|v| m >> v & 1 == 1).map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(","))).collect::<Vec<_>>().join("");
            for p in &pairs {
                out!("  {} + {}", show(&p.first), show(&p.second));
            }
            return Ok(!pairs.is_empty());
        }
        Cmd::VerifyPaper { claim } => {
            let reports = claims::run(claim.as_deref());
            if reports.is_empty() {
                let ids: Vec<&str> = claims::registry().iter().map(|c| c.id).collect();
                return Err(HolantError::Unknown(format!("claim '{}' (known: {})", claim.unwrap_or_default(), ids.join(", "))));
            }
            let mut all = true;
            for r in &reports {
                all &= r.passed;
                out!("{} {} ({:.2?}): {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.elapsed, r.title);
                for l in &r.detail {
                    out!("    {l}");
                }
            }
            return Ok(all);
        }
    }
    Ok(true)
}
