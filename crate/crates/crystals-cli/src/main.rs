//! Command-line surface over the crystals library.
//!
//! Subcommands: `graph` (materialize a crystal graph as DOT or JSON),
//! `convert` (apply a bridge map to a JSON element from stdin), `verify`
//! (run a verification suite), `dim` (dimension versus enumeration count),
//! and `evac` (apply the appropriate involution to a JSON element).
//!
//! Exit codes: 0 success, 2 usage, 3 resource bound, 4 domain violation,
//! 5 verification failure.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crystals::bridges::{
    chi_inv, chi_of_mlt, in_ml_image, lusztig_data, ml_embed, psi_infty, psi_infty_inv,
    psi_lambda, psi_lambda_inv, r_array_within_bounds, rho_poly_infty, rho_poly_lambda, theta_r,
    verify_diagram, LusztigData,
};
use crystals::cartan::{weyl_dim, DominantPartition, Rank};
use crystals::crystal::{RLambdaCrystal, RPoint, TensorCrystal};
use crystals::graph::{
    check_axioms, check_mutual_inverse, from_json, generate, graph_isomorphic, relabel_colors,
    to_dot, to_json, CrystalGraph, DEFAULT_NODE_CAP,
};
use crystals::gt::{enumerate_gt, varsigma, varsigma_inv, GtCrystal, GtPattern};
use crystals::mlt::{Mlt, MltCrystal};
use crystals::polyhedral::{in_sigma_lambda, BInftyPoly, BLambdaPoly, PolyVector};
use crystals::reverse::{
    complement_to_rssyt, complement_to_ssyt, eta, eta_inv, rho_infinity, Rmlt, RmltCrystal,
    Rssyt, RssytCrystal,
};
use crystals::ssyt::{evacuation, rho_lambda_word, Ssyt, SsytCrystal};

#[derive(Parser)]
#[command(name = "crystals", version, about = "Exact models of type-A crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Ssyt,
    Rssyt,
    Mlt,
    Rmlt,
    Poly,
    PolyLambda,
    Gt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertModel {
    Ssyt,
    Rssyt,
    Mlt,
    Rmlt,
    Poly,
    Gt,
    Lusztig,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Axioms,
    Iso,
    Involutions,
    Diagram,
    Image,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the crystal graph of a model and print it.
    Graph {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: usize,
        /// Highest weight as comma-separated parts (standard coordinates).
        #[arg(long)]
        lambda: Option<String>,
        /// Highest weight as comma-separated fundamental coefficients.
        #[arg(long)]
        fundamental: Option<String>,
        /// Depth bound; required for the infinity models.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply a bridge map to a JSON element read from stdin.
    Convert {
        #[arg(long, value_enum)]
        from: ConvertModel,
        #[arg(long, value_enum)]
        to: ConvertModel,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        fundamental: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run a verification suite; exit 5 with the first witness on failure.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Rank; when omitted for the axioms suite, a graph is read from
        /// stdin instead.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        fundamental: Option<String>,
        #[arg(long)]
        depth: Option<usize>,
        /// Count bound for the image suite.
        #[arg(long, default_value_t = 3)]
        max_count: i64,
        /// Part bound for the image suite.
        #[arg(long, default_value_t = 4)]
        max_part: i64,
    },
    /// Print the Weyl dimension and the enumeration count, asserting
    /// equality.
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        fundamental: Option<String>,
    },
    /// Apply the evacuation/mirror involution of a model to a JSON element
    /// read from stdin.
    Evac {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        fundamental: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure { code: 5, message: message.into() }
    }
}

impl From<crystals::Error> for Failure {
    fn from(e: crystals::Error) -> Self {
        let code = match e {
            crystals::Error::NodeCapExceeded { .. } => 3,
            crystals::Error::NotInDomain { .. } => 4,
            crystals::Error::Invalid { .. } => 4,
            crystals::Error::IndexOutOfRange { .. } => 2,
            crystals::Error::Parse { .. } => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(f) = run(cli.command) {
        eprintln!("error: {}", f.message);
        std::process::exit(f.code);
    }
}

fn node_cap() -> usize {
    std::env::var("CRYSTAL_NODE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_NODE_CAP)
}

fn parse_parts(text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::usage(format!("bad weight list {text:?}: {e}")))
}

fn parse_lambda(
    rank: Rank,
    lambda: &Option<String>,
    fundamental: &Option<String>,
) -> Result<Option<DominantPartition>, Failure> {
    match (lambda, fundamental) {
        (Some(_), Some(_)) => Err(Failure::usage("pass --lambda or --fundamental, not both")),
        (Some(text), None) => Ok(Some(
            DominantPartition::new(rank, &parse_parts(text)?).map_err(Failure::from)?,
        )),
        (None, Some(text)) => Ok(Some(
            DominantPartition::from_fundamental(rank, &parse_parts(text)?)
                .map_err(Failure::from)?,
        )),
        (None, None) => Ok(None),
    }
}

fn require_lambda(
    rank: Rank,
    lambda: &Option<String>,
    fundamental: &Option<String>,
) -> Result<DominantPartition, Failure> {
    parse_lambda(rank, lambda, fundamental)?
        .ok_or_else(|| Failure::usage("this model needs --lambda (or --fundamental)"))
}

fn read_stdin() -> Result<String, Failure> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn emit_graph(graph: &CrystalGraph, format: Format) {
    match format {
        Format::Dot => print!("{}", to_dot(graph)),
        Format::Json => println!("{}", to_json(graph)),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Graph { model, n, lambda, fundamental, depth, format } => {
            let rank = Rank::new(n)?;
            let cap = node_cap();
            let graph = match model {
                Model::Ssyt => {
                    let lam = require_lambda(rank, &lambda, &fundamental)?;
                    let c = SsytCrystal::new(rank, lam);
                    generate(&c, c.highest_tableau(), depth, cap)?.graph
                }
                Model::Rssyt => {
                    let lam = require_lambda(rank, &lambda, &fundamental)?;
                    let c = RssytCrystal::new(rank, lam);
                    generate(&c, c.highest(), depth, cap)?.graph
                }
                Model::Mlt => {
                    let d = depth.ok_or_else(|| Failure::usage("infinity models need --depth"))?;
                    let c = MltCrystal::new(rank);
                    generate(&c, Mlt::highest(rank), Some(d), cap)?.graph
                }
                Model::Rmlt => {
                    let d = depth.ok_or_else(|| Failure::usage("infinity models need --depth"))?;
                    let c = RmltCrystal::new(rank);
                    generate(&c, Rmlt::highest(rank), Some(d), cap)?.graph
                }
                Model::Poly => {
                    let d = depth.ok_or_else(|| Failure::usage("infinity models need --depth"))?;
                    let c = BInftyPoly::new(rank);
                    generate(&c, PolyVector::zero(rank), Some(d), cap)?.graph
                }
                Model::PolyLambda => {
                    let lam = require_lambda(rank, &lambda, &fundamental)?;
                    let c = BLambdaPoly::new(rank, lam);
                    generate(&c, PolyVector::zero(rank), depth, cap)?.graph
                }
                Model::Gt => {
                    let lam = require_lambda(rank, &lambda, &fundamental)?;
                    let c = GtCrystal::new(rank, lam);
                    generate(&c, c.highest(), depth, cap)?.graph
                }
            };
            emit_graph(&graph, format);
            Ok(())
        }
        Command::Convert { from, to, lambda, fundamental, n } => {
            let input = read_stdin()?;
            let output = convert(from, to, &input, &lambda, &fundamental, n)?;
            println!("{output}");
            Ok(())
        }
        Command::Verify { suite, n, lambda, fundamental, depth, max_count, max_part } => {
            run_suite(suite, n, &lambda, &fundamental, depth, max_count, max_part)
        }
        Command::Dim { n, lambda, fundamental } => {
            let rank = Rank::new(n)?;
            let lam = require_lambda(rank, &lambda, &fundamental)?;
            let dim = weyl_dim(&lam);
            let count = enumerate_gt(&lam, node_cap())?.len();
            if num_bigint::BigUint::from(count) == dim {
                println!("{dim} {count} OK");
                Ok(())
            } else {
                println!("{dim} {count} MISMATCH");
                Err(Failure::verification("dimension and enumeration disagree"))
            }
        }
        Command::Evac { model, lambda, fundamental, n } => {
            let input = read_stdin()?;
            let output = apply_involution(model, &input, &lambda, &fundamental, n)?;
            println!("{output}");
            Ok(())
        }
    }
}

/// Shape of a reverse tableau as a dominant partition.
fn shape_partition(t: &Rssyt) -> Result<DominantPartition, Failure> {
    let rank = Rank::new(t.n)?;
    let parts: Vec<i64> = t.shape().iter().map(|&l| l as i64).collect();
    DominantPartition::new(rank, &parts).map_err(Failure::from)
}

/// Normalizes any source model to a reverse tableau together with its
/// shape, the hub for the highest-weight family.
fn to_rssyt_hub(
    from: ConvertModel,
    input: &str,
    lambda: &Option<String>,
    fundamental: &Option<String>,
) -> Result<(Rssyt, DominantPartition), Failure> {
    match from {
        ConvertModel::Ssyt => {
            let t: Ssyt = from_json(input)?;
            let r = complement_to_rssyt(&t);
            let lam = shape_partition(&r)?;
            Ok((r, lam))
        }
        ConvertModel::Rssyt => {
            let t: Rssyt = from_json(input)?;
            let lam = shape_partition(&t)?;
            Ok((t, lam))
        }
        ConvertModel::Gt => {
            let g: GtPattern = from_json(input)?;
            let lam = g.lambda().clone();
            let t = psi_lambda(&varsigma(&g), &lam)?;
            Ok((t, lam))
        }
        ConvertModel::Poly => {
            let x: PolyVector = from_json(input)?;
            let rank = Rank::new(x.n)?;
            let lam = require_lambda(rank, lambda, fundamental)?;
            let t = psi_lambda(&x, &lam)?;
            Ok((t, lam))
        }
        _ => Err(Failure::usage("no conversion path from this model")),
    }
}

fn convert(
    from: ConvertModel,
    to: ConvertModel,
    input: &str,
    lambda: &Option<String>,
    fundamental: &Option<String>,
    _n: Option<usize>,
) -> Result<String, Failure> {
    use ConvertModel as M;
    if from == to {
        // Parse, validate, and echo the canonical form.
        return Ok(match from {
            M::Ssyt => to_json(&from_json::<Ssyt>(input)?),
            M::Rssyt => to_json(&from_json::<Rssyt>(input)?),
            M::Mlt => to_json(&from_json::<Mlt>(input)?),
            M::Rmlt => to_json(&from_json::<Rmlt>(input)?),
            M::Poly => to_json(&from_json::<PolyVector>(input)?),
            M::Gt => to_json(&from_json::<GtPattern>(input)?),
            M::Lusztig => to_json(&from_json::<LusztigData>(input)?),
        });
    }
    // The infinity family converts among itself without a weight.
    let infinity_source: Option<Rmlt> = match from {
        M::Mlt => Some(eta_inv(&from_json::<Mlt>(input)?)),
        M::Rmlt => Some(from_json::<Rmlt>(input)?),
        M::Poly if matches!(to, M::Mlt | M::Rmlt | M::Lusztig) && lambda.is_none() && fundamental.is_none() => {
            Some(psi_infty_inv(&from_json::<PolyVector>(input)?)?)
        }
        M::Lusztig => Some(eta_inv(&chi_inv(&from_json::<LusztigData>(input)?)?)),
        _ => None,
    };
    if let Some(z) = infinity_source {
        return match to {
            M::Mlt => Ok(to_json(&eta(&z))),
            M::Rmlt => Ok(to_json(&z)),
            M::Poly => Ok(to_json(&psi_infty(&z))),
            M::Lusztig => Ok(to_json(&chi_of_mlt(&eta(&z)))),
            _ => Err(Failure::usage(
                "infinity-model elements convert to mlt, rmlt, poly or lusztig",
            )),
        };
    }
    // Highest-weight family through the reverse-tableau hub.
    let (t, lam) = to_rssyt_hub(from, input, lambda, fundamental)?;
    match to {
        M::Ssyt => Ok(to_json(&complement_to_ssyt(&t))),
        M::Rssyt => Ok(to_json(&t)),
        M::Gt => {
            let x = psi_lambda_inv(&t, &lam)?;
            Ok(to_json(&varsigma_inv(&x, &lam)?))
        }
        M::Poly => Ok(to_json(&psi_lambda_inv(&t, &lam)?)),
        M::Rmlt => Ok(to_json(&ml_embed(&t))),
        M::Mlt => Ok(to_json(&eta(&ml_embed(&t)))),
        M::Lusztig => Ok(to_json(&lusztig_data(&t))),
    }
}

fn apply_involution(
    model: Model,
    input: &str,
    lambda: &Option<String>,
    fundamental: &Option<String>,
    _n: Option<usize>,
) -> Result<String, Failure> {
    match model {
        Model::Ssyt => {
            let t: Ssyt = from_json(input)?;
            Ok(to_json(&evacuation(&t)))
        }
        Model::Rssyt => {
            let t: Rssyt = from_json(input)?;
            Ok(to_json(&complement_to_rssyt(&evacuation(&complement_to_ssyt(
                &t,
            )))))
        }
        Model::Mlt => {
            let t: Mlt = from_json(input)?;
            let c = MltCrystal::new(t.rank());
            Ok(to_json(&rho_infinity(&c, &t)))
        }
        Model::Rmlt => {
            let t: Rmlt = from_json(input)?;
            let c = MltCrystal::new(t.rank());
            Ok(to_json(&eta_inv(&rho_infinity(&c, &eta(&t)))))
        }
        Model::Poly => {
            let x: PolyVector = from_json(input)?;
            Ok(to_json(&rho_poly_infty(&x)?))
        }
        Model::PolyLambda => {
            let x: PolyVector = from_json(input)?;
            let rank = Rank::new(x.n)?;
            let lam = require_lambda(rank, lambda, fundamental)?;
            Ok(to_json(&rho_poly_lambda(&x, &lam)?))
        }
        Model::Gt => {
            let g: GtPattern = from_json(input)?;
            let lam = g.lambda().clone();
            let image = rho_poly_lambda(&varsigma(&g), &lam)?;
            Ok(to_json(&varsigma_inv(&image, &lam)?))
        }
    }
}

fn run_suite(
    suite: Suite,
    n: Option<usize>,
    lambda: &Option<String>,
    fundamental: &Option<String>,
    depth: Option<usize>,
    max_count: i64,
    max_part: i64,
) -> Result<(), Failure> {
    let cap = node_cap();
    match suite {
        Suite::Axioms => {
            let Some(n) = n else {
                // No rank given: check a graph supplied on stdin.
                let graph: CrystalGraph = from_json(&read_stdin()?)?;
                finish_axioms("stdin graph", check_axioms(&graph))?;
                println!("axioms: ok (stdin graph, {} nodes)", graph.nodes.len());
                return Ok(());
            };
            let rank = Rank::new(n)?;
            let mut checked = 0usize;
            if let Some(lam) = parse_lambda(rank, lambda, fundamental)? {
                let c = RssytCrystal::new(rank, lam.clone());
                let gen = generate(&c, c.highest(), None, cap)?;
                finish_axioms("reverse tableaux", check_axioms(&gen.graph))?;
                finish_axioms("reverse tableaux", check_mutual_inverse(&c, &gen))?;
                let b = BLambdaPoly::new(rank, lam.clone());
                let gen = generate(&b, PolyVector::zero(rank), None, cap)?;
                finish_axioms("vectors", check_axioms(&gen.graph))?;
                let g = GtCrystal::new(rank, lam);
                let gen = generate(&g, g.highest(), None, cap)?;
                finish_axioms("patterns", check_axioms(&gen.graph))?;
                checked += 3;
            }
            if let Some(d) = depth {
                let c = MltCrystal::new(rank);
                let gen = generate(&c, Mlt::highest(rank), Some(d), cap)?;
                finish_axioms("large tableaux", check_axioms(&gen.graph))?;
                let b = BInftyPoly::new(rank);
                let gen = generate(&b, PolyVector::zero(rank), Some(d), cap)?;
                finish_axioms("infinity vectors", check_axioms(&gen.graph))?;
                checked += 2;
            }
            if checked == 0 {
                return Err(Failure::usage("axioms suite needs --lambda and/or --depth"));
            }
            println!("axioms: ok ({checked} graphs)");
            Ok(())
        }
        Suite::Iso => {
            let rank = Rank::new(n.ok_or_else(|| Failure::usage("iso suite needs --n"))?)?;
            let lam = require_lambda(rank, lambda, fundamental)?;
            let dim = weyl_dim(&lam);
            let rc = RssytCrystal::new(rank, lam.clone());
            let a = generate(&rc, rc.highest(), None, cap)?;
            let bc = BLambdaPoly::new(rank, lam.clone());
            let b = generate(&bc, PolyVector::zero(rank), None, cap)?;
            let gc = GtCrystal::new(rank, lam.clone());
            let c = generate(&gc, gc.highest(), None, cap)?;
            let tc = TensorCrystal::new(RmltCrystal::new(rank), RLambdaCrystal::new(lam.weight()));
            let d = generate(&tc, (Rmlt::highest(rank), RPoint), None, cap)?;
            for (label, count) in [
                ("reverse tableaux", a.elements.len()),
                ("vectors", b.elements.len()),
                ("patterns", c.elements.len()),
                ("embedded", d.elements.len()),
            ] {
                if num_bigint::BigUint::from(count) != dim {
                    return Err(Failure::verification(format!(
                        "{label}: {count} nodes, dimension {dim}"
                    )));
                }
            }
            let graphs = [&a.graph, &b.graph, &c.graph, &d.graph];
            for x in 0..4 {
                for y in (x + 1)..4 {
                    if !graph_isomorphic(graphs[x], graphs[y]) {
                        return Err(Failure::verification(format!(
                            "graphs {x} and {y} are not isomorphic"
                        )));
                    }
                }
            }
            let mut witness: Option<String> = None;
            {
                let mut record = |chk: &str, w: String| {
                    if witness.is_none() {
                        witness = Some(format!("{chk}: {w}"));
                    }
                };
                crystals::bridges::check_strict_morphism(
                    &bc,
                    &rc,
                    &b.elements,
                    |x| psi_lambda(x, &lam).unwrap(),
                    "tableau description",
                    &mut record,
                );
                crystals::bridges::check_strict_morphism(
                    &gc,
                    &bc,
                    &c.elements,
                    varsigma,
                    "pattern shift",
                    &mut record,
                );
                crystals::bridges::check_strict_morphism(
                    &rc,
                    &tc,
                    &a.elements,
                    |t| (ml_embed(t), RPoint),
                    "embedding",
                    &mut record,
                );
            }
            if let Some(w) = witness {
                return Err(Failure::verification(w));
            }
            println!("iso: ok (4 models, {dim} nodes each)");
            Ok(())
        }
        Suite::Involutions => {
            let rank = Rank::new(n.ok_or_else(|| Failure::usage("involutions suite needs --n"))?)?;
            let mut checked = 0usize;
            if let Some(lam) = parse_lambda(rank, lambda, fundamental)? {
                let c = SsytCrystal::new(rank, lam.clone());
                let gen = generate(&c, c.highest_tableau(), None, cap)?;
                for t in &gen.elements {
                    let via_word = rho_lambda_word(&c, t);
                    let via_evac = evacuation(t);
                    if via_word != via_evac {
                        return Err(Failure::verification(format!(
                            "word involution disagrees with evacuation at {t:?}"
                        )));
                    }
                    if evacuation(&via_evac) != *t {
                        return Err(Failure::verification(format!(
                            "evacuation is not involutive at {t:?}"
                        )));
                    }
                }
                checked += gen.elements.len();
            }
            if let Some(d) = depth {
                let c = MltCrystal::new(rank);
                let gen = generate(&c, Mlt::highest(rank), Some(d), cap)?;
                if !graph_isomorphic(&gen.graph, &relabel_colors(&gen.graph)) {
                    return Err(Failure::verification("truncated graph is not mirror symmetric"));
                }
                for t in &gen.elements {
                    if rho_infinity(&c, &rho_infinity(&c, t)) != *t {
                        return Err(Failure::verification(format!(
                            "mirror is not involutive at {t:?}"
                        )));
                    }
                }
                checked += gen.elements.len();
            }
            if checked == 0 {
                return Err(Failure::usage("involutions suite needs --lambda and/or --depth"));
            }
            println!("involutions: ok ({checked} elements)");
            Ok(())
        }
        Suite::Diagram => {
            let rank = Rank::new(n.ok_or_else(|| Failure::usage("diagram suite needs --n"))?)?;
            let lam = require_lambda(rank, lambda, fundamental)?;
            let report = verify_diagram(rank, &lam, depth.unwrap_or(4))?;
            if let Some(v) = report.violations.first() {
                return Err(Failure::verification(format!("{}: {}", v.check, v.witness)));
            }
            println!(
                "diagram: ok ({} highest-weight elements, {} truncated infinity elements)",
                report.lambda_elements, report.infinity_elements
            );
            Ok(())
        }
        Suite::Image => {
            let rank = Rank::new(n.ok_or_else(|| Failure::usage("image suite needs --n"))?)?;
            let n = rank.n();
            let cells: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (1..=(n + 1 - i)).map(move |j| (i, j)))
                .collect();
            let mut all = vec![Rmlt::highest(rank)];
            for &(i, j) in &cells {
                let mut next = Vec::new();
                for z in &all {
                    for v in 0..=max_count {
                        let mut w = z.clone();
                        *w.count_mut(i, j) = v;
                        next.push(w);
                    }
                }
                all = next;
            }
            let mut partitions = Vec::new();
            collect_partitions(n, max_part, &mut vec![0; n], 0, &mut partitions);
            let mut checked = 0usize;
            for lam in &partitions {
                for z in &all {
                    let lhs = in_ml_image(z, lam);
                    let rhs = in_sigma_lambda(&psi_infty(z), lam);
                    if lhs != rhs {
                        return Err(Failure::verification(format!(
                            "predicates disagree at lambda = {:?}, counts = {}",
                            lam.parts(),
                            to_json(z)
                        )));
                    }
                    if lhs && !r_array_within_bounds(&theta_r(z), lam) {
                        return Err(Failure::verification(format!(
                            "restricted coordinates out of bounds at lambda = {:?}",
                            lam.parts()
                        )));
                    }
                    checked += 1;
                }
            }
            println!("image: ok ({checked} pairs)");
            Ok(())
        }
    }
}

fn collect_partitions(
    n: usize,
    max_part: i64,
    parts: &mut Vec<i64>,
    pos: usize,
    out: &mut Vec<DominantPartition>,
) {
    if pos == n {
        out.push(DominantPartition::new(Rank::new(n).unwrap(), parts).unwrap());
        return;
    }
    let upper = if pos == 0 { max_part } else { parts[pos - 1] };
    for v in 0..=upper {
        parts[pos] = v;
        collect_partitions(n, max_part, parts, pos + 1, out);
    }
    parts[pos] = 0;
}

fn finish_axioms(label: &str, report: crystals::graph::AxiomReport) -> Result<(), Failure> {
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(Failure::verification(format!(
            "{label}: {} ({})",
            v.condition, v.witness
        ))),
    }
}
