//! Command-line surface: characteristic polynomials, coronals, corona
//! spectra, the census table, and the cospectral-pair pipeline.
//!
//! Graph arguments accept family tokens (`P5`, `C4`, `K5`, `S5`,
//! `K2,3`), disjoint unions of tokens (`C4+K1`), inline graph6
//! (`g6:Cl`), a file path, or `-` for standard input. Files and stdin
//! may hold either a graph6 string or an edge list (`n m` header then
//! `u v` lines).

use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use corona::assemble::{corona_char_poly, decompose};
use corona::census::{coronal_degree_census, coronal_degree_census_from, render_table, CensusRow};
use corona::closed::{
    coronal_complete_bipartite, coronal_complete_multipartite, coronal_path, coronal_regular,
    PartitionSpec,
};
use corona::coronal::{coronal, coronal_via_schwenk};
use corona::cospectral::{find_tree_mates, switching_pair, verify_corollary10};
use corona::error::Error;
use corona::graph::{
    complete, complete_multipartite, cycle, disjoint_union, parse_edge_list, path, star, Graph,
};
use corona::graph6::{emit_graph6, parse_graph6};
use corona::ratfunc::RatFunc;
use corona::roots::IsolatedRoot;

#[derive(Parser)]
#[command(name = "corona", about = "Exact spectra of corona products", disable_help_flag = false)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Render polynomials as TeX in the variable lambda.
    #[arg(long, global = true)]
    tex: bool,
    /// Emit one JSON record per result instead of plain text.
    #[arg(long = "json-lines", global = true)]
    json_lines: bool,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Method {
    Generic,
    Schwenk,
    ClosedForm,
}

#[derive(Subcommand)]
enum Cmd {
    /// Characteristic polynomial of a graph.
    Charpoly { graph: String },
    /// The coronal of a graph and its reduced denominator degree d.
    Coronal {
        graph: String,
        #[arg(long, value_enum, default_value = "generic")]
        method: Method,
    },
    /// Corona characteristic polynomial of two graphs.
    Corona {
        g: String,
        h: String,
        /// Also isolate the real roots of the corona spectrum.
        #[arg(long)]
        spectrum: bool,
        /// Also print the old/new eigenvalue decomposition.
        #[arg(long)]
        decompose: bool,
    },
    /// Distribution of coronal denominator degrees over all graphs of
    /// order n (up to isomorphism).
    Census {
        n: usize,
        /// Read class representatives from a graph6 file ('-' for stdin)
        /// instead of the built-in enumerator.
        #[arg(long = "from-graph6")]
        from_graph6: Option<PathBuf>,
    },
    /// Cospectral-pair machinery.
    Cospectral {
        #[command(subcommand)]
        sub: CospectralCmd,
    },
}

#[derive(Subcommand)]
enum CospectralCmd {
    /// Exhaustively search one order for cospectral tree pairs with
    /// cospectral complements.
    TreeMates { order: usize },
    /// Check the corona cospectrality implications on concrete graphs.
    Verify {
        g1: String,
        g2: String,
        h1: String,
        /// Defaults to h1.
        h2: Option<String>,
    },
    /// Build and certify the switching-graph pair of two tree mates.
    Switching { t1: String, t2: String },
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidGraph(format!("stdin: {}", e)))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Error::InvalidGraph(format!("{}: {}", path, e)))
    }
}

fn sniff_graph(text: &str) -> Result<Graph, Error> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let mut it = first.split_whitespace();
    let looks_like_header = matches!(
        (it.next().map(|t| t.parse::<usize>()), it.next().map(|t| t.parse::<usize>())),
        (Some(Ok(_)), Some(Ok(_)))
    );
    if looks_like_header {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

/// A single family token: P5, C6, K4, S5, or K2,3 (multipartite parts).
fn parse_family(token: &str) -> Option<Result<Graph, Error>> {
    let (head, rest) = token.split_at(1);
    let build = |r: Result<Graph, Error>| Some(r);
    match head {
        "P" | "p" => rest.parse().ok().map(path).and_then(build),
        "C" | "c" => rest.parse().ok().map(cycle).and_then(build),
        "S" | "s" => rest.parse().ok().map(star).and_then(build),
        "K" | "k" => {
            if rest.contains(',') {
                let parts: Option<Vec<usize>> =
                    rest.split(',').map(|p| p.parse().ok()).collect();
                parts.map(|p| complete_multipartite(&p))
            } else {
                rest.parse().ok().map(complete)
            }
        }
        _ => None,
    }
}

fn parse_graph_spec(spec: &str) -> Result<Graph, Error> {
    let spec = spec.trim();
    if let Some(g6) = spec.strip_prefix("g6:") {
        return parse_graph6(g6);
    }
    if spec == "-" || std::path::Path::new(spec).exists() {
        return sniff_graph(&read_input(spec)?);
    }
    let mut parts = spec.split('+');
    let mut g = parse_part(parts.next().unwrap())?;
    for p in parts {
        g = disjoint_union(&g, &parse_part(p)?)?;
    }
    Ok(g)
}

fn parse_part(token: &str) -> Result<Graph, Error> {
    let token = token.trim();
    if token.is_empty() {
        return Err(Error::InvalidGraph("empty graph token".into()));
    }
    parse_family(token)
        .unwrap_or_else(|| Err(Error::InvalidGraph(format!("unrecognized graph spec '{}'", token))))
}

/// Closed-form coronal for a recognized family token.
fn closed_form_coronal(spec: &str) -> Result<RatFunc, Error> {
    let unavailable =
        || Error::Precondition(format!("no closed form is available for '{}'", spec));
    let (head, rest) = spec.trim().split_at(1);
    match head {
        "P" | "p" => coronal_path(rest.parse().map_err(|_| unavailable())?),
        "C" | "c" => {
            let n: usize = rest.parse().map_err(|_| unavailable())?;
            coronal_regular(n, 2)
        }
        "K" | "k" => {
            if rest.contains(',') {
                let parts: Vec<usize> = rest
                    .split(',')
                    .map(|p| p.parse().map_err(|_| unavailable()))
                    .collect::<Result<_, _>>()?;
                if parts.len() == 2 {
                    coronal_complete_bipartite(parts[0], parts[1])
                } else {
                    coronal_complete_multipartite(&PartitionSpec::new(parts)?)
                }
            } else {
                let n: usize = rest.parse().map_err(|_| unavailable())?;
                coronal_regular(n, n - 1)
            }
        }
        "S" | "s" => {
            let n: usize = rest.parse().map_err(|_| unavailable())?;
            if n < 2 {
                return coronal_regular(1, 0);
            }
            coronal_complete_bipartite(1, n - 1)
        }
        _ => Err(unavailable()),
    }
}

fn roots_json(roots: &[IsolatedRoot]) -> (Vec<f64>, Vec<usize>) {
    (
        roots.iter().map(|r| r.approx()).collect(),
        roots.iter().map(|r| r.multiplicity).collect(),
    )
}

fn print_roots(roots: &[IsolatedRoot]) {
    for r in roots {
        if r.is_point() {
            println!("  {} (exact, multiplicity {})", r.lo, r.multiplicity);
        } else {
            println!(
                "  ~{:.12} in ({}, {}] (multiplicity {})",
                r.approx(),
                r.lo,
                r.hi,
                r.multiplicity
            );
        }
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.cmd {
        Cmd::Charpoly { graph } => {
            let g = parse_graph_spec(graph)?;
            let f = corona::coronal::char_poly(&g);
            if cli.json_lines {
                println!(
                    "{}",
                    json!({ "graph6": emit_graph6(&g), "polynomial": f.to_string() })
                );
            } else if cli.tex {
                println!("{}", f.to_tex());
            } else {
                println!("{}", f);
            }
        }
        Cmd::Coronal { graph, method } => {
            let chi = match method {
                Method::ClosedForm => closed_form_coronal(graph)?,
                _ => {
                    let g = parse_graph_spec(graph)?;
                    match method {
                        Method::Generic => coronal(&g)?.chi,
                        Method::Schwenk => coronal_via_schwenk(&g)?.chi,
                        Method::ClosedForm => unreachable!(),
                    }
                }
            };
            let d = chi.den_degree();
            if cli.json_lines {
                let mut record = json!({
                    "coronal": chi.to_string(),
                    "numerator": chi.num().to_string(),
                    "denominator": chi.den().to_string(),
                    "d": d,
                });
                if *method != Method::ClosedForm {
                    record["graph6"] = json!(emit_graph6(&parse_graph_spec(graph)?));
                }
                println!("{}", record);
            } else if cli.tex {
                println!("{}\td = {}", chi.to_tex(), d);
            } else {
                println!("{}\td = {}", chi, d);
            }
        }
        Cmd::Corona { g, h, spectrum, decompose: want_decompose } => {
            let gg = parse_graph_spec(g)?;
            let hh = parse_graph_spec(h)?;
            let ccp = corona_char_poly(&gg, &hh)?;
            if cli.json_lines {
                let mut record = json!({
                    "g_graph6": emit_graph6(&gg),
                    "h_graph6": emit_graph6(&hh),
                    "polynomial": ccp.total.to_string(),
                    "d": ccp.coronal.d,
                });
                if *spectrum || *want_decompose {
                    let rep = decompose(&gg, &hh)?;
                    let (roots, mults) = roots_json(&rep.all_roots);
                    record["roots"] = json!(roots);
                    record["multiplicities"] = json!(mults);
                    let (old, old_mults) = roots_json(&rep.old_roots);
                    record["old_roots"] = json!(old);
                    record["old_multiplicities"] = json!(old_mults);
                    record["new_root_groups"] = json!(rep
                        .new_root_groups
                        .iter()
                        .map(|grp| json!({
                            "mu": grp.mu.approx(),
                            "multiplicity": grp.multiplicity,
                            "roots": grp.roots,
                        }))
                        .collect::<Vec<_>>());
                }
                println!("{}", record);
                return Ok(());
            }
            if cli.tex {
                println!("{}", ccp.total.to_tex());
            } else {
                println!("{}", ccp.total);
            }
            if *spectrum || *want_decompose {
                let rep = decompose(&gg, &hh)?;
                if *spectrum {
                    println!("spectrum ({} roots with multiplicity):", ccp.m * (ccp.n + 1));
                    print_roots(&rep.all_roots);
                }
                if *want_decompose {
                    println!("old eigenvalues (multiplicity x{} from |G|):", rep.m);
                    if rep.old_roots.is_empty() {
                        println!("  none (the coronal denominator covers all of f_H)");
                    }
                    print_roots(&rep.old_roots);
                    println!("new eigenvalues, one group of {} per eigenvalue mu of G:", rep.d + 1);
                    for grp in &rep.new_root_groups {
                        let rendered: Vec<String> =
                            grp.roots.iter().map(|r| format!("{:.12}", r)).collect();
                        println!(
                            "  mu ~ {:.12} (multiplicity {}) -> [{}]",
                            grp.mu.approx(),
                            grp.multiplicity,
                            rendered.join(", ")
                        );
                    }
                    if rep.stacking_detected {
                        println!("note: an old eigenvalue coincides with a new one; multiplicities stack");
                    }
                }
            }
        }
        Cmd::Census { n, from_graph6 } => {
            let row: CensusRow = match from_graph6 {
                None => coronal_degree_census(*n)?,
                Some(path) => {
                    let text = read_input(path.to_str().unwrap_or("-"))?;
                    let graphs: Vec<Graph> = text
                        .lines()
                        .filter(|l| !l.trim().is_empty())
                        .map(parse_graph6)
                        .collect::<Result<_, _>>()?;
                    coronal_degree_census_from(*n, graphs.iter())?
                }
            };
            if cli.json_lines {
                for (d, count) in &row.counts_by_d {
                    println!("{}", json!({ "n": n, "d": d, "count": count }));
                }
            } else {
                print!("{}", render_table(std::slice::from_ref(&row)));
            }
        }
        Cmd::Cospectral { sub } => run_cospectral(cli, sub)?,
    }
    Ok(())
}

fn run_cospectral(cli: &Cli, sub: &CospectralCmd) -> Result<(), Error> {
    match sub {
        CospectralCmd::TreeMates { order } => {
            let pairs = find_tree_mates(*order)?;
            for p in &pairs {
                if cli.json_lines {
                    println!(
                        "{}",
                        json!({
                            "g1_graph6": emit_graph6(&p.g1),
                            "g2_graph6": emit_graph6(&p.g2),
                            "polynomial": p.certificate.to_string(),
                        })
                    );
                } else {
                    println!("{} {} {}", emit_graph6(&p.g1), emit_graph6(&p.g2), p.certificate);
                }
            }
            if pairs.is_empty() && !cli.json_lines {
                println!("no cospectral tree pairs with cospectral complements at order {}", order);
            }
        }
        CospectralCmd::Verify { g1, g2, h1, h2 } => {
            let g1 = parse_graph_spec(g1)?;
            let g2 = parse_graph_spec(g2)?;
            let h1 = parse_graph_spec(h1)?;
            let h2 = match h2 {
                Some(s) => parse_graph_spec(s)?,
                None => h1.clone(),
            };
            let rep = verify_corollary10(&g1, &g2, &h1, &h2)?;
            if cli.json_lines {
                println!(
                    "{}",
                    json!({
                        "g_pair_cospectral": rep.g_pair_cospectral,
                        "h_pair_cospectral": rep.h_pair_cospectral,
                        "h_pair_coronal_equal": rep.h_pair_coronal_equal,
                        "conclusion_left": rep.conclusion_left,
                        "conclusion_right": rep.conclusion_right,
                        "pass": rep.passed(),
                    })
                );
            } else {
                println!(
                    "premises: G-pair cospectral = {}, H-pair cospectral = {}, H-pair coronal-equal = {}",
                    rep.g_pair_cospectral, rep.h_pair_cospectral, rep.h_pair_coronal_equal
                );
                match rep.conclusion_left {
                    Some(ok) => println!("conclusion G1oH1 ~ G2oH1: {}", if ok { "holds" } else { "VIOLATED" }),
                    None => println!("conclusion G1oH1 ~ G2oH1: premises not satisfied"),
                }
                match rep.conclusion_right {
                    Some(ok) => println!("conclusion G1oH1 ~ G1oH2: {}", if ok { "holds" } else { "VIOLATED" }),
                    None => println!("conclusion G1oH1 ~ G1oH2: premises not satisfied"),
                }
                println!("{}", if rep.passed() { "PASS" } else { "FAIL" });
            }
            if !rep.passed() {
                return Err(Error::InvariantBreach("corona cospectrality violated".into()));
            }
        }
        CospectralCmd::Switching { t1, t2 } => {
            let t1 = parse_graph_spec(t1)?;
            let t2 = parse_graph_spec(t2)?;
            let pair = switching_pair(&t1, &t2)?;
            if cli.json_lines {
                println!(
                    "{}",
                    json!({
                        "g1_graph6": emit_graph6(&pair.g1),
                        "g2_graph6": emit_graph6(&pair.g2),
                        "polynomial": pair.certificate.to_string(),
                        "isomorphic": pair.isomorphic,
                    })
                );
            } else {
                println!("Sw(T1) = {}", emit_graph6(&pair.g1));
                println!("Sw(T2) = {}", emit_graph6(&pair.g2));
                println!("shared characteristic polynomial: {}", pair.certificate);
                println!("isomorphic: {}", pair.isomorphic);
            }
        }
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Precondition(_) => 1,
        Error::Graph6 { .. }
        | Error::EdgeList { .. }
        | Error::InvalidGraph(_)
        | Error::EmptyGraph => 2,
        Error::ResourceBudget(_) => 3,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message; keep exit code 1 for usage,
            // 0 for --help/--version
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code(&e))
        }
    }
}
