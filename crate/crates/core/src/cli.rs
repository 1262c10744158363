//! The `bx` command line.
//!
//! [`run`] is the whole program minus process plumbing: it takes the
//! argument vector and returns the exit code with both output streams,
//! which keeps it testable in-process.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::hopf::{self, Basis, Element, Tensor, E, H, P, PStar};
use crate::insertion::{class_of_pair, p_symbol, q_symbol, shape, TwinPair};
use crate::lattice;
use crate::perms::{is_baxter, Permutation};
use crate::trees::canopy;
use crate::verify;
use crate::words::{parse_letters, Word};

#[derive(Parser, Debug)]
#[command(name = "bx", version, about = "Baxter monoid, twin binary trees and the Baxter Hopf algebra")]
struct Cli {
    /// Line-oriented text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    /// Largest degree accepted by enumeration-heavy commands (products
    /// are capped one lower).
    #[arg(long, global = true, default_value_t = 7)]
    max_degree: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// P-symbol, shape, canopies and Q-symbol of a word.
    Insert { word: String },
    /// The Baxter class of a permutation or word.
    Class { word: String },
    /// Whether a permutation is a Baxter permutation.
    CheckBaxter { perm: String },
    /// Product of two basis elements indexed by twin pairs.
    Product {
        #[arg(long, value_enum, default_value_t = BasisArg::P)]
        basis: BasisArg,
        left: String,
        right: String,
    },
    /// Coproduct of a basis element.
    Coproduct {
        #[arg(long, value_enum, default_value_t = BasisArg::P)]
        basis: BasisArg,
        pair: String,
    },
    /// Product in the dual basis `P*`.
    DualProduct { left: String, right: String },
    /// The Baxter lattice on twin pairs of size `n`.
    Lattice {
        n: usize,
        /// Graphviz output.
        #[arg(long, conflicts_with = "format")]
        dot: bool,
        #[arg(long, value_enum)]
        format: Option<LatticeFormat>,
    },
    /// Baxter numbers, connected pairs and totally primitive dimensions.
    Dims { nmax: usize },
    /// A basis of the totally primitive elements of degree `n`.
    Primitives { n: usize },
    /// Run verification suites.
    Verify {
        /// One of all, congruence, insertion, trees, lattice, hopf, dual, series.
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BasisArg {
    #[value(name = "P")]
    P,
    #[value(name = "E")]
    E,
    #[value(name = "H")]
    H,
    #[value(name = "Pstar")]
    Pstar,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum LatticeFormat {
    Json,
    Dot,
}

/// Command outcome: exit code, standard output, standard error.
pub type Output = (i32, String, String);

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { (2, String::new(), text) } else { (0, text, String::new()) };
        }
    };
    match dispatch(&cli) {
        Ok(out) => (0, out, String::new()),
        Err(Failure::Usage(msg)) => (2, String::new(), format!("error: {msg}\n")),
        Err(Failure::Verification(out)) => (1, out, "verification failed\n".into()),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn cap(what: &str, n: usize, max: usize) -> Result<(), Failure> {
    if n > max {
        return Err(Failure::Usage(format!("{what} {n} exceeds the degree cap {max}; raise it with --max-degree")));
    }
    Ok(())
}

fn parse_pair(s: &str) -> Result<TwinPair, Failure> {
    Ok(s.parse::<TwinPair>()?)
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    let letters = parse_letters(s)?;
    Permutation::new(letters).ok_or_else(|| Failure::Usage(format!("{s:?} is not a permutation")))
}

fn element_out<B: Basis>(x: &Element<B>, plain: bool) -> String {
    if plain {
        x.to_plain()
    } else {
        pretty(&x.to_json())
    }
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let plain = cli.plain;
    let max = cli.max_degree;
    match &cli.command {
        Command::Insert { word } => {
            let u = parse_letters(word)?;
            let ps = p_symbol(&u);
            let q = q_symbol(&u);
            let j = shape(&ps)?;
            let bits = |t: &crate::trees::BinaryTree| -> String {
                if t.is_leaf() {
                    String::new()
                } else {
                    canopy(t).iter().map(|b| char::from(b'0' + b)).collect()
                }
            };
            if plain {
                Ok(format!(
                    "left\t{}\nright\t{}\nshape\t{}\ncanopy-left\t{}\ncanopy-right\t{}\nq-symbol\t{}\n",
                    ps.left,
                    ps.right,
                    j,
                    bits(j.left()),
                    bits(j.right()),
                    q
                ))
            } else {
                Ok(pretty(&json!({
                    "word": Word::new(u.clone()).to_string(),
                    "p_symbol": { "left": ps.left.to_string(), "right": ps.right.to_string() },
                    "shape": { "left": j.left().to_string(), "right": j.right().to_string(), "pair": j.to_string() },
                    "canopy": { "left": bits(j.left()), "right": bits(j.right()) },
                    "q_symbol": q.to_string(),
                })))
            }
        }
        Command::Class { word } => {
            let u = parse_letters(word)?;
            let members: Vec<String> = match Permutation::new(u.clone()) {
                Some(s) => {
                    let mut c: Vec<String> = class_of_pair(&TwinPair::of_permutation(&s)).iter().map(ToString::to_string).collect();
                    c.sort();
                    c
                }
                None => crate::congruence::congruence_class(&Word::new(u), crate::congruence::CongruenceKind::Baxter)
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
            };
            if plain {
                Ok(members.iter().map(|m| format!("{m}\n")).collect())
            } else {
                Ok(pretty(&json!(members)))
            }
        }
        Command::CheckBaxter { perm } => {
            let s = parse_perm(perm)?;
            Ok(format!("{}\n", is_baxter(&s)))
        }
        Command::Product { basis, left, right } => {
            let (a, b) = (parse_pair(left)?, parse_pair(right)?);
            cap("total degree", a.size() + b.size(), max.saturating_sub(1))?;
            Ok(match basis {
                BasisArg::P => element_out(&hopf::p_product(&Element::basis(a), &Element::basis(b)), plain),
                BasisArg::E => element_out(&hopf::e_product(&Element::<E>::basis(a), &Element::basis(b)), plain),
                BasisArg::H => element_out(&hopf::h_product(&Element::<H>::basis(a), &Element::basis(b)), plain),
                BasisArg::Pstar => element_out(&hopf::dual_product(&Element::<PStar>::basis(a), &Element::basis(b)), plain),
            })
        }
        Command::Coproduct { basis, pair } => {
            let j = parse_pair(pair)?;
            cap("degree", j.size(), max)?;
            Ok(match basis {
                BasisArg::P => element_out(&hopf::p_coproduct(&Element::<P>::basis(j)), plain),
                BasisArg::Pstar => element_out(&hopf::dual_coproduct(&Element::<PStar>::basis(j)), plain),
                BasisArg::E | BasisArg::H => {
                    let is_e = *basis == BasisArg::E;
                    let x = if is_e { hopf::e_to_p(&Element::basis(j)) } else { hopf::h_to_p(&Element::basis(j)) };
                    let d = hopf::p_coproduct(&x);
                    if is_e {
                        element_out(&tensor_to_order_basis::<E>(&d, true), plain)
                    } else {
                        element_out(&tensor_to_order_basis::<H>(&d, false), plain)
                    }
                }
            })
        }
        Command::DualProduct { left, right } => {
            let (a, b) = (parse_pair(left)?, parse_pair(right)?);
            cap("total degree", a.size() + b.size(), max.saturating_sub(1))?;
            Ok(element_out(&hopf::dual_product(&Element::<PStar>::basis(a), &Element::basis(b)), plain))
        }
        Command::Lattice { n, dot, format } => {
            cap("size", *n, max)?;
            if *dot || *format == Some(LatticeFormat::Dot) {
                Ok(lattice::hasse_dot(*n))
            } else if plain {
                let h = lattice::hasse(*n);
                Ok(h.edges.iter().map(|(a, c)| format!("{a}\t{}\t{}\n", c.target, c.case.name())).collect())
            } else {
                Ok(pretty(&lattice::hasse_json(*n)))
            }
        }
        Command::Dims { nmax } => {
            cap("degree", *nmax, max)?;
            let report = hopf::series_check(*nmax);
            let body = if plain {
                let mut s = String::from("n\tB_n\tconnected\ttotally_primitive\n");
                for r in &report.rows {
                    s.push_str(&format!("{}\t{}\t{}\t{}\n", r.n, r.baxter, r.connected, r.totally_primitive));
                }
                s
            } else {
                pretty(&json!({ "rows": report.rows, "mismatches": report.mismatches }))
            };
            if report.ok() {
                Ok(body)
            } else {
                Err(Failure::Verification(body))
            }
        }
        Command::Primitives { n } => {
            cap("degree", *n, max.min(6))?;
            let basis: Vec<Element<P>> =
                hopf::totally_primitive_basis(*n).iter().map(hopf::primitives::primitive_integral).collect();
            if plain {
                Ok(basis.iter().map(|x| format!("{x}\n")).collect())
            } else {
                Ok(pretty(&json!({ "degree": n, "dimension": basis.len(), "basis": basis.iter().map(Element::to_json).collect::<Vec<_>>() })))
            }
        }
        Command::Verify { suite, max_n } => {
            let checks = verify::run_suite(suite, *max_n)?;
            let ok = checks.iter().all(|c| c.ok);
            let body = if plain {
                checks
                    .iter()
                    .map(|c| format!("{} {}/{}: {}\n", if c.ok { "PASS" } else { "FAIL" }, c.suite, c.name, c.detail))
                    .collect()
            } else {
                pretty(&json!({ "ok": ok, "checks": checks }))
            };
            if ok {
                Ok(body)
            } else {
                Err(Failure::Verification(body))
            }
        }
    }
}

/// Rewrites both tensor factors from `P` into an order basis.
fn tensor_to_order_basis<B: Basis<Index = TwinPair>>(d: &Tensor<P, P>, upper: bool) -> Tensor<B, B> {
    let conv = |j: &TwinPair| -> Element<B> {
        let x = Element::<P>::basis(j.clone());
        if upper {
            hopf::p_to_e(&x).map_keys(Clone::clone)
        } else {
            hopf::p_to_h(&x).map_keys(Clone::clone)
        }
    };
    d.map_linear(|(a, b)| hopf::tensor(&conv(a), &conv(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bx(args: &[&str]) -> Output {
        run(std::iter::once("bx").chain(args.iter().copied()))
    }

    #[test]
    fn class_command() {
        let (code, out, _) = bx(&["class", "5273641", "--plain"]);
        assert_eq!(code, 0);
        assert_eq!(out, "5237641\n5273641\n5276341\n5723641\n5726341\n5762341\n");
        let (code, out, _) = bx(&["class", "5273641"]);
        assert_eq!(code, 0);
        let v: Vec<String> = serde_json::from_str(&out).unwrap();
        assert_eq!(v.len(), 6);
        assert_eq!(out.lines().filter(|l| l.contains('"')).count(), 6);
    }

    #[test]
    fn check_baxter() {
        assert_eq!(bx(&["check-baxter", "436975128"]), (0, "true\n".into(), String::new()));
        assert_eq!(bx(&["check-baxter", "2413"]).1, "false\n");
        let (code, _, err) = bx(&["check-baxter", "12x"]);
        assert_eq!(code, 2);
        assert!(err.contains("position 2"), "{err}");
        assert_eq!(bx(&["check-baxter", "113"]).0, 2);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(bx(&["frobnicate"]).0, 2);
        assert_eq!(bx(&["class", "1", "--bogus"]).0, 2);
        let (code, _, err) = bx(&["product", "[ (. .) | (. .) ", "[ (. .) | (. .) ]"]);
        assert_eq!(code, 2);
        assert!(err.contains("position"), "{err}");
        assert_eq!(bx(&["verify", "nope"]).0, 2);
        assert_eq!(bx(&["lattice", "9"]).0, 2);
        assert_eq!(bx(&["--help"]).0, 0);
    }

    #[test]
    fn dims_command() {
        let (code, out, _) = bx(&["dims", "5", "--plain"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last().unwrap(), "5\t92\t47\t19");
    }

    #[test]
    fn product_commands() {
        let one = "[ (. .) | (. .) ]";
        let (code, out, _) = bx(&["product", "--basis", "P", one, one]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["basis"], "P");
        assert_eq!(v["terms"].as_array().unwrap().len(), 2);
        let (_, out, _) = bx(&["product", "--basis", "E", one, one, "--plain"]);
        assert_eq!(out, "1\t[ (. (. .)) | ((. .) .) ]\n");
        let (_, out, _) = bx(&["product", "--basis", "H", one, one, "--plain"]);
        assert_eq!(out, "1\t[ ((. .) .) | (. (. .)) ]\n");
        let (_, out, _) = bx(&["dual-product", one, one, "--plain"]);
        assert_eq!(out.lines().count(), 2);
        let (_, out, _) = bx(&["coproduct", "--basis", "P", one]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["terms"][0]["key"], json!(["[ . | . ]", one]));
    }

    #[test]
    fn lattice_command() {
        let (_, out, _) = bx(&["lattice", "2", "--dot"]);
        assert!(out.starts_with("digraph"));
        assert_eq!(out.matches(" -> ").count(), 1);
        let (_, out, _) = bx(&["lattice", "3", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn insert_and_primitives() {
        let (code, out, _) = bx(&["insert", "231"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["p_symbol"]["left"], "(2 (1 . .) (3 . .))");
        let (_, out, _) = bx(&["primitives", "3", "--plain"]);
        assert_eq!(out.lines().count(), 1);
    }

    #[test]
    fn verify_command() {
        let (code, out, _) = bx(&["verify", "trees", "--max-n", "4", "--plain"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("PASS trees/tamari-pinning"));
    }
}
