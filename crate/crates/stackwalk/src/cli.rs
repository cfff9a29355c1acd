//! Command-line front-end: facet-file parsing, JSON reports, and the
//! subcommand dispatcher. This is the only module that performs I/O.
//!
//! Facet files are lines of whitespace-separated vertex labels, `#` starts
//! a comment, blank lines are ignored. Reports are JSON with a mandatory
//! `schema_version` field and sorted keys, so identical invocations are
//! byte-identical.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::complex::{Complex, Face};
use crate::generators::{
    gen_hbar_member, gen_stacked_ball, gen_stacked_sphere, gen_walkup_closed,
    search_neighborly_walkup, verify_certificate_detailed, Certificate,
};
use crate::homology::{betti, relative_betti};
use crate::linalg::FieldSpec;
use crate::recognition::{classify, pseudo_boundary, Verdict};
use crate::stacked::{is_locally_stacked, is_stacked_closed, is_stacked_with_boundary, kalai_criterion};
use crate::surgery::{connected_union, handle_add_boundary, handle_add_closed, handle_delete, FacetBijection};
use crate::tightness::{criteria, is_tight, DEFAULT_GUARD};
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Parses the facet file format.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let mut facets = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let verts: std::result::Result<Vec<u32>, _> =
            line.split_whitespace().map(str::parse::<u32>).collect();
        match verts {
            Ok(v) => facets.push(Face::new(v)),
            Err(_) => {
                return Err(Error::Parse(format!(
                    "line {}: expected whitespace-separated non-negative integers, got {raw:?}",
                    lineno + 1
                )))
            }
        }
    }
    if facets.is_empty() {
        return Err(Error::Parse("no facets in input".to_string()));
    }
    Complex::from_facets(facets)
}

/// Serializes a complex so that `parse_complex` round-trips it exactly.
pub fn serialize_complex(c: &Complex) -> String {
    let mut out = String::new();
    for f in c.facets() {
        let words: Vec<String> = f.vertices().iter().map(u32::to_string).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    let ch: u32 = s.parse().map_err(|_| format!("field must be 0 or a prime, got {s:?}"))?;
    FieldSpec::from_characteristic(ch).map_err(|e| e.to_string())
}

fn parse_face(s: &str) -> std::result::Result<Face, String> {
    let verts: std::result::Result<Vec<u32>, _> =
        s.split(',').map(|w| w.trim().parse::<u32>()).collect();
    verts
        .map(Face::new)
        .map_err(|_| format!("expected comma-separated vertex labels, got {s:?}"))
}

fn parse_pairing(s: &str) -> std::result::Result<Vec<(u32, u32)>, String> {
    s.split(',')
        .map(|pair| {
            let (a, b) = pair
                .split_once(':')
                .ok_or_else(|| format!("pairing entries look like a:x, got {pair:?}"))?;
            let a = a.trim().parse().map_err(|_| format!("bad vertex in {pair:?}"))?;
            let b = b.trim().parse().map_err(|_| format!("bad vertex in {pair:?}"))?;
            Ok((a, b))
        })
        .collect()
}

#[derive(Parser)]
#[command(
    name = "stackwalk",
    about = "Stacked triangulated manifolds: homology, recognition, surgery, tightness",
    after_help = "Environment: STACKWALK_THREADS optionally caps parallelism (compute kernels \
                  are currently single-threaded, the variable is accepted and validated)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArg {
    /// Coefficient field characteristic: 0 for the rationals, else a prime.
    #[arg(long, value_parser = parse_field, default_value = "0")]
    field: FieldSpec,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: f-vector, Betti numbers, classification, stackedness,
    /// tightness criteria.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Betti numbers, optionally relative to a subcomplex.
    Homology {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        relative_to: Option<PathBuf>,
    },
    /// A single predicate with a yes/no answer.
    Check {
        file: PathBuf,
        #[arg(long)]
        stacked: bool,
        #[arg(long)]
        locally_stacked: bool,
        #[arg(long)]
        tight: bool,
        #[arg(long)]
        kalai: bool,
        #[arg(long)]
        neighborly: bool,
        #[arg(long, value_parser = parse_field, default_value = "2")]
        field: FieldSpec,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
    },
    /// Seeded random constructions with certificates.
    Gen {
        #[arg(value_parser = ["ball", "sphere", "hbar", "walkup"])]
        what: String,
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        facets: Option<u64>,
        #[arg(long)]
        vertices: Option<u64>,
        #[arg(long, default_value_t = 0)]
        handles: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Randomized search for special class members.
    Search {
        #[arg(value_parser = ["tight-neighborly"])]
        what: String,
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        vertices: u64,
        #[arg(long)]
        handles: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Handle surgery: add, delete, or connected union.
    Surgery {
        #[arg(value_parser = ["add", "delete", "union"])]
        what: String,
        #[arg(long, value_parser = parse_face)]
        sigma: Face,
        #[arg(long, value_parser = parse_face)]
        tau: Option<Face>,
        #[arg(long, value_parser = parse_pairing)]
        pairing: Option<Vec<(u32, u32)>>,
        /// Remove σ and τ (combinatorial addition on a closed manifold).
        #[arg(long)]
        closed: bool,
        #[command(flatten)]
        field: FieldArg,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a certificate against a complex.
    Verify {
        file: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
}

fn read_complex(path: &PathBuf) -> Result<Complex> {
    parse_complex(&std::fs::read_to_string(path)?)
}

fn betti_json(c: &Complex, field: FieldSpec) -> Value {
    let b = betti(c, field);
    json!(b.betti)
}

/// The `analyze` report. Stackedness and tightness legs degrade to `null`
/// when the input is outside their domain.
fn analyze_report(c: &Complex, field: FieldSpec) -> Value {
    let class = classify(c, field);
    let f = c.f_vector();
    let mut betti_map = serde_json::Map::new();
    for ch in [FieldSpec::rationals(), FieldSpec::f2(), field] {
        betti_map.insert(ch.characteristic().to_string(), betti_json(c, ch));
    }
    let boundary = pseudo_boundary(c).ok().map(|bd| {
        bd.facets()
            .filter(|f| !f.is_empty())
            .map(|f| f.vertices().to_vec())
            .collect::<Vec<_>>()
    });
    let stacked = match class.verdict {
        Verdict::HomologySphere | Verdict::ClosedHomologyManifold => {
            if c.dim() >= 3 && c.is_connected() {
                is_stacked_closed(c, field).ok()
            } else if class.verdict == Verdict::HomologySphere && c.dim() >= 2 {
                crate::stacked::is_stacked_sphere(c, field).ok()
            } else {
                None
            }
        }
        Verdict::HomologyBall | Verdict::HomologyManifoldWithBoundary => {
            is_stacked_with_boundary(c, field).ok()
        }
        Verdict::NotAHomologyManifold => None,
    };
    let locally_stacked = if class.verdict.is_manifold() {
        is_locally_stacked(c, field).ok()
    } else {
        None
    };
    let crit = criteria(c, field).ok();
    let tight = is_tight(c, field, DEFAULT_GUARD).ok();
    json!({
        "schema_version": SCHEMA_VERSION,
        "fvector": f.0,
        "betti": Value::Object(betti_map),
        "manifold_class": serde_json::to_value(class.verdict).unwrap(),
        "boundary": boundary,
        "stacked": stacked,
        "locally_stacked": locally_stacked,
        "neighborly": c.is_neighborly(),
        "ns_lhs": crit.as_ref().map(|r| r.ns_lhs),
        "ns_rhs": crit.as_ref().map(|r| r.ns_rhs),
        "tight": tight.as_ref().map(|r| r.tight),
        "certificate": Value::Null,
    })
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn gen_output(
    c: &Complex,
    cert: &Certificate,
    seed: u64,
    out: &Option<PathBuf>,
    cert_path: &Option<PathBuf>,
) -> Result<()> {
    let mut text = format!("# seed {seed}\n");
    text.push_str(&serialize_complex(c));
    write_or_print(out, &text)?;
    if let Some(p) = cert_path {
        std::fs::write(p, serde_json::to_string_pretty(cert).expect("serializable"))?;
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<()> {
    // accepted for forward compatibility; kernels are single-threaded today
    if let Ok(v) = std::env::var("STACKWALK_THREADS") {
        v.parse::<usize>()
            .map_err(|_| Error::Parse(format!("STACKWALK_THREADS must be a number, got {v:?}")))?;
    }
    match cli.command {
        Command::Analyze { file, field } => {
            let c = read_complex(&file)?;
            let report = analyze_report(&c, field.field);
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
        Command::Homology { file, field, relative_to } => {
            let c = read_complex(&file)?;
            let b = match relative_to {
                Some(sub) => relative_betti(&c, &read_complex(&sub)?, field.field)?,
                None => betti(&c, field.field),
            };
            let report = json!({
                "schema_version": SCHEMA_VERSION,
                "field": field.field.characteristic(),
                "betti": b.betti,
                "betti_reduced_minus_1": b.betti_neg1,
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
        Command::Check { file, stacked, locally_stacked, tight, kalai, neighborly, field, guard } => {
            let c = read_complex(&file)?;
            let picked =
                [stacked, locally_stacked, tight, kalai, neighborly].iter().filter(|&&b| b).count();
            if picked != 1 {
                return Err(Error::Parse(
                    "choose exactly one of --stacked, --locally-stacked, --tight, --kalai, --neighborly"
                        .to_string(),
                ));
            }
            let (name, result) = if stacked {
                let class = classify(&c, field);
                let r = if class.verdict.is_closed_manifold() {
                    is_stacked_closed(&c, field)?
                } else {
                    is_stacked_with_boundary(&c, field)?
                };
                ("stacked", r)
            } else if locally_stacked {
                ("locally-stacked", is_locally_stacked(&c, field)?)
            } else if tight {
                ("tight", is_tight(&c, field, guard)?.tight)
            } else if kalai {
                ("kalai", kalai_criterion(&c, field)?)
            } else {
                ("neighborly", c.is_neighborly())
            };
            let report = json!({
                "schema_version": SCHEMA_VERSION,
                "check": name,
                "field": field.characteristic(),
                "result": result,
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
        Command::Gen { what, dim, facets, vertices, handles, seed, out, cert } => {
            let (c, certificate) = match what.as_str() {
                "ball" => gen_stacked_ball(
                    dim,
                    facets.ok_or_else(|| Error::Parse("gen ball needs --facets".to_string()))?,
                    seed,
                )?,
                "sphere" => gen_stacked_sphere(
                    dim,
                    vertices
                        .ok_or_else(|| Error::Parse("gen sphere needs --vertices".to_string()))?,
                    seed,
                )?,
                "hbar" => gen_hbar_member(dim, handles, facets.unwrap_or(8), seed)?,
                "walkup" => gen_walkup_closed(dim, handles, facets.unwrap_or(8), seed)?,
                _ => unreachable!("clap validates the generator name"),
            };
            gen_output(&c, &certificate, seed, &out, &cert)?;
        }
        Command::Search { what: _, dim, vertices, handles, seed, budget, out, cert } => {
            match search_neighborly_walkup(dim, vertices, handles, seed, budget)? {
                Some((c, certificate)) => {
                    gen_output(&c, &certificate, seed, &out, &cert)?;
                    eprintln!("found after seeded search (seed {seed})");
                }
                None => {
                    println!("{}", json!({
                        "schema_version": SCHEMA_VERSION,
                        "found": false,
                        "seed": seed,
                        "budget": budget,
                    }));
                }
            }
        }
        Command::Surgery { what, sigma, tau, pairing, closed, field, files, out } => {
            let result = match what.as_str() {
                "delete" => {
                    let c = read_complex(&files[0])?;
                    let (cut, psi) = handle_delete(&c, &sigma, field.field)?;
                    eprintln!(
                        "reglue with --sigma {} --tau {} to invert",
                        psi.sigma.vertices().iter().map(u32::to_string).collect::<Vec<_>>().join(","),
                        psi.tau.vertices().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                    );
                    cut
                }
                "add" => {
                    let c = read_complex(&files[0])?;
                    let tau = tau.ok_or_else(|| Error::Parse("surgery add needs --tau".to_string()))?;
                    let psi = match pairing {
                        Some(p) => FacetBijection::new(sigma, tau, p)?,
                        None => FacetBijection::sorted(sigma, tau)?,
                    };
                    if closed {
                        handle_add_closed(&c, &psi)?
                    } else {
                        handle_add_boundary(&c, &psi)?
                    }
                }
                "union" => {
                    if files.len() != 2 {
                        return Err(Error::Parse("surgery union needs two files".to_string()));
                    }
                    let a = read_complex(&files[0])?;
                    let b = read_complex(&files[1])?;
                    let tau =
                        tau.ok_or_else(|| Error::Parse("surgery union needs --tau".to_string()))?;
                    connected_union(&a, &b, &sigma, &tau)?.0
                }
                _ => unreachable!("clap validates the surgery name"),
            };
            write_or_print(&out, &serialize_complex(&result))?;
        }
        Command::Verify { file, cert } => {
            let c = read_complex(&file)?;
            let text = std::fs::read_to_string(&cert)?;
            let certificate: Certificate =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            match verify_certificate_detailed(&c, &certificate) {
                Ok(()) => println!("{}", json!({"schema_version": SCHEMA_VERSION, "verified": true})),
                Err(step) => {
                    return Err(Error::pre(format!("certificate does not verify: {step}")));
                }
            }
        }
    }
    Ok(())
}

/// Entry point: 0 on success, 1 on domain errors, 2 on usage errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own exit semantics: help/version print to stdout, exit 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;

    #[test]
    fn facet_file_round_trip() {
        for c in [octahedron(), torus7(), two_tetrahedra(), Complex::simplex(0)] {
            assert_eq!(parse_complex(&serialize_complex(&c)).unwrap(), c);
        }
    }

    #[test]
    fn parser_accepts_comments_and_blanks() {
        let text = "# a tetrahedron\n\n0 1 2 3  # the only facet\n";
        assert_eq!(parse_complex(text).unwrap(), Complex::simplex(3));
        assert!(parse_complex("1 2 x\n").is_err());
        assert!(parse_complex("# nothing\n").is_err());
    }

    #[test]
    fn analyze_sphere_report() {
        let report = analyze_report(&Complex::boundary_simplex(4), FieldSpec::rationals());
        assert_eq!(report["schema_version"], 1);
        assert_eq!(report["fvector"], json!([1, 5, 10, 10, 5]));
        assert_eq!(report["manifold_class"], "homology-sphere");
        assert_eq!(report["stacked"], true);
        assert_eq!(report["neighborly"], true);
        assert_eq!(report["ns_lhs"], 0);
        assert_eq!(report["tight"], true);
        assert_eq!(report["betti"]["0"], json!([0, 0, 0, 1]));
    }

    #[test]
    fn analyze_torus_report() {
        let report = analyze_report(&torus7(), FieldSpec::f2());
        assert_eq!(report["manifold_class"], "closed-homology-manifold");
        assert_eq!(report["betti"]["2"], json!([0, 2, 1]));
        assert_eq!(report["stacked"], Value::Null); // d = 2: no closed test
        assert_eq!(report["tight"], true);
    }
}
