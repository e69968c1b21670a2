//! Batch command-line front end. Every subcommand prints one JSON value
//! (or DOT) on stdout; domain errors print `{"error": ...}` and exit 1,
//! usage errors exit 2.

use std::fs;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::cluster::{enumerate_variables, exchange_pattern, ClusterSeed};
use crate::cy_lattice::{cy_dimensions, hom_finite, Pair};
use crate::error::{Error, Result};
use crate::ginzburg::build_ginzburg;
use crate::hochschild::dimension_table;
use crate::hyperpotential::{from_potential, transport, Hyperpotential, HyperpotentialDoc, Potential, PotentialDoc};
use crate::jacobian::{g2_algebra, jacobian_dimensions, lambda_via_hyperpotential, lambda_via_potential};
use crate::mesh::dot::{emit_ar_quiver_dot, Mark};
use crate::mesh::endo::EndAlgebra;
use crate::mesh::orbit::orbit_report;
use crate::mesh::{Dynkin, GroupElement, OrbitCategory, OrbitSpec, Vertex};
use crate::path_algebra::{Substitution, SubstitutionDoc};
use crate::quiver::Quiver;
use crate::scalar::Field;

#[derive(Debug, Parser)]
#[command(
    name = "quiverforge",
    version,
    about = "Exact computations with quivers, hyperpotentials and orbit categories"
)]
pub struct Cli {
    /// Worker threads for library parallelism (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Wrap the output in a report with command echo and input digest.
    #[arg(long, global = true)]
    pub report: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hyperpotential validation and conversions.
    #[command(subcommand)]
    Hyperpot(HyperpotCmd),
    /// Ginzburg dg-algebra of a hyperpotential.
    #[command(subcommand)]
    Ginzburg(GinzburgCmd),
    /// Jacobian algebra dimensions.
    #[command(subcommand)]
    Jacobian(JacobianCmd),
    /// Built-in families.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Hochschild homology tables.
    #[command(subcommand)]
    Hochschild(HochschildCmd),
    /// Fractional Calabi-Yau lattice.
    CyLattice(CyLatticeArgs),
    /// Orbit categories of mesh categories.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// The rank-2 cluster algebra of type G2.
    #[command(subcommand)]
    G2(G2Cmd),
}

#[derive(Debug, Subcommand)]
pub enum HyperpotCmd {
    /// Validity report for a hyperpotential document.
    Check { file: String },
    /// Hyperpotential of cyclic derivatives of a potential document.
    FromPotential { file: String },
    /// Transport a hyperpotential along a substitution.
    Transport { phi: String, h: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GinzburgEmit {
    Report,
    Presentation,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum GinzburgCmd {
    /// Check d^2 = 0 blockwise.
    D2 {
        h: String,
        #[arg(long, value_enum, default_value = "report")]
        emit: GinzburgEmit,
    },
}

#[derive(Debug, Subcommand)]
pub enum JacobianCmd {
    /// Dimensions of the Jacobian algebra modulo m^k for k <= N.
    Dims {
        h: String,
        #[arg(long)]
        trunc: usize,
        /// Reinterpret the document's coefficients over this field.
        #[arg(long)]
        field: Option<Field>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Potential,
    Hyperpotential,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCmd {
    /// Dimension of Lambda_{m,e} via a potential or a hyperpotential.
    Lambda {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, default_value = "Q")]
        field: Field,
        #[arg(long = "as", value_enum, default_value = "hyperpotential")]
        route: Route,
    },
    /// The loop algebra k[beta]/(beta^3).
    G2 {
        #[arg(long, default_value = "Q")]
        field: Field,
    },
}

#[derive(Debug, Subcommand)]
pub enum HochschildCmd {
    /// Per-degree dimensions of HH_0, HH_1 and the rank of B.
    Table {
        quiver: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value = "Q")]
        field: Field,
    },
}

#[derive(Debug, Args)]
pub struct CyLatticeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub d1: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub e1: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub d2: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub e2: i64,
    /// Smallest certified (d, e) with d/e equal to this ratio (`p` or `p/q`).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "member")]
    pub ratio: Option<String>,
    /// Membership of `d,e` in the lattice.
    #[arg(long, allow_hyphen_values = true)]
    pub member: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrbitEmit {
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    /// Dynkin diagram, e.g. `D8` or `E8`.
    #[arg(long)]
    pub diagram: String,
    /// Group generator, e.g. `phi*tau^4`.
    #[arg(long, allow_hyphen_values = true)]
    pub g: String,
}

#[derive(Debug, Subcommand)]
pub enum OrbitCmd {
    /// Counts, rigid objects, cluster-tilting sets and exchange graph.
    Build {
        #[command(flatten)]
        spec: OrbitArgs,
        #[arg(long, value_enum, default_value = "json")]
        emit: OrbitEmit,
        /// Vertices to mark in DOT output, `p,i;p,i;...`.
        #[arg(long, allow_hyphen_values = true)]
        mark: Option<String>,
    },
    /// Hom space between two vertices, `p,i`.
    Hom {
        #[command(flatten)]
        spec: OrbitArgs,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Endomorphism algebra of a sum of vertices, `p,i;p,i;...`.
    End {
        #[command(flatten)]
        spec: OrbitArgs,
        #[arg(long, allow_hyphen_values = true)]
        summands: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum G2Cmd {
    /// All cluster variables as strings.
    ClusterVars,
    /// Clusters and exchange graph.
    Exchange,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Serialize)]
pub struct CommandReport {
    pub command: Vec<String>,
    pub input_digest: String,
    pub result: Value,
    pub exit_status: i32,
}

enum Payload {
    Json(Value),
    Text(String),
}

fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::Internal(e.to_string()))
}

struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn read(&mut self, path: &str) -> Result<String> {
        let text = fs::read_to_string(path).map_err(|e| Error::Malformed(format!("cannot read {path}: {e}")))?;
        self.hasher.update(path.as_bytes());
        self.hasher.update([0]);
        self.hasher.update(text.as_bytes());
        self.hasher.update([0]);
        Ok(text)
    }

    fn json<T: serde::de::DeserializeOwned>(&mut self, path: &str) -> Result<T> {
        let text = self.read(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("{path}: {e}")))
    }
}

fn parse_pair(s: &str) -> Result<Pair> {
    let bad = || Error::Parse(format!("expected 'a,b', got '{s}'"));
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = t.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_vertex(s: &str) -> Result<Vertex> {
    let (p, i) = parse_pair(s)?;
    let i = usize::try_from(i).map_err(|_| Error::Parse(format!("negative vertex index in '{s}'")))?;
    Ok(Vertex::new(p, i))
}

fn parse_vertices(s: &str) -> Result<Vec<Vertex>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(parse_vertex)
        .collect()
}

fn parse_ratio(s: &str) -> Result<Pair> {
    let bad = || Error::Parse(format!("expected 'p' or 'p/q', got '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => Ok((
            p.trim().parse().map_err(|_| bad())?,
            q.trim().parse().map_err(|_| bad())?,
        )),
        None => Ok((s.trim().parse().map_err(|_| bad())?, 1)),
    }
}

fn orbit_category(a: &OrbitArgs) -> Result<OrbitCategory> {
    let spec = OrbitSpec::new(Dynkin::parse(&a.diagram)?, GroupElement::parse(&a.g)?)?;
    Ok(OrbitCategory::new(spec))
}

fn execute(cmd: &Command, inputs: &mut Inputs) -> Result<Payload> {
    let json = |v: Value| Ok(Payload::Json(v));
    match cmd {
        Command::Hyperpot(HyperpotCmd::Check { file }) => {
            let h = Hyperpotential::from_doc(&inputs.json::<HyperpotentialDoc>(file)?)?;
            json(to_value(&h.check())?)
        }
        Command::Hyperpot(HyperpotCmd::FromPotential { file }) => {
            let w = Potential::from_doc(&inputs.json::<PotentialDoc>(file)?)?;
            json(to_value(&from_potential(&w).to_doc())?)
        }
        Command::Hyperpot(HyperpotCmd::Transport { phi, h }) => {
            let phi = Substitution::from_doc(&inputs.json::<SubstitutionDoc>(phi)?)?;
            let h = Hyperpotential::from_doc(&inputs.json::<HyperpotentialDoc>(h)?)?;
            json(to_value(&transport(&phi, &h)?.to_doc())?)
        }
        Command::Ginzburg(GinzburgCmd::D2 { h, emit }) => {
            let h = Hyperpotential::from_doc(&inputs.json::<HyperpotentialDoc>(h)?)?;
            let dg = build_ginzburg(&h)?;
            match emit {
                GinzburgEmit::Report => json(to_value(&dg.check_d_squared())?),
                GinzburgEmit::Presentation => json(to_value(&dg.to_doc())?),
                GinzburgEmit::Dot => Ok(Payload::Text(dg.graded().to_dot())),
            }
        }
        Command::Jacobian(JacobianCmd::Dims { h, trunc, field }) => {
            let mut doc: HyperpotentialDoc = inputs.json(h)?;
            if let Some(f) = field {
                doc.field = f.to_string();
            }
            let h = Hyperpotential::from_doc(&doc)?;
            json(to_value(&jacobian_dimensions(&h, *trunc).report())?)
        }
        Command::Family(FamilyCmd::Lambda { m, e, field, route }) => {
            if *m == 0 || *e == 0 || m * e < 2 {
                return Err(Error::InvalidParameters(format!(
                    "need m, e >= 1 and me >= 2, got m={m} e={e}"
                )));
            }
            let (q, via) = match route {
                Route::Hyperpotential => (lambda_via_hyperpotential(*m, *e, *field)?, "hyperpotential"),
                Route::Potential => (lambda_via_potential(*m, *e, *field)?, "potential"),
            };
            json(json!({"jacobian_dim": q.dimension(), "via": via}))
        }
        Command::Family(FamilyCmd::G2 { field }) => {
            let q = g2_algebra(*field);
            json(json!({"jacobian_dim": q.dimension(), "via": "hyperpotential"}))
        }
        Command::Hochschild(HochschildCmd::Table {
            quiver,
            max_degree,
            field,
        }) => {
            let q = Arc::new(Quiver::parse_json(&inputs.read(quiver)?)?);
            json(to_value(&dimension_table(&q, *field, *max_degree))?)
        }
        Command::CyLattice(a) => {
            let g1 = (a.d1, a.e1);
            let g2 = (a.d2, a.e2);
            let hf = hom_finite(g1, g2);
            let lat = cy_dimensions(g1, g2)?;
            if let Some(m) = &a.member {
                let mem = lat.member(parse_pair(m)?);
                return json(json!({"member": mem.member, "coeffs": mem.coeffs}));
            }
            let mut out = json!({
                "D": hf.d_prime,
                "hom_finite": hf.hom_finite,
                "certified": lat.certified.as_str(),
            });
            if let Some(r) = &a.ratio {
                let (p, q) = parse_ratio(r)?;
                out["answer"] = to_value(&lat.solve_ratio(p, q)?)?;
            } else {
                out["hnf"] = to_value(&lat.hnf)?;
                out["det"] = json!(lat.det);
            }
            json(out)
        }
        Command::Orbit(OrbitCmd::Build { spec, emit, mark }) => {
            let cat = orbit_category(spec)?;
            match emit {
                OrbitEmit::Json => json(to_value(&orbit_report(&cat)?)?),
                OrbitEmit::Dot => {
                    let marks: Vec<(Vertex, Mark)> = match mark {
                        Some(s) => parse_vertices(s)?.into_iter().map(|v| (v, Mark::Bullet)).collect(),
                        None => Vec::new(),
                    };
                    Ok(Payload::Text(emit_ar_quiver_dot(cat.spec(), &marks)))
                }
            }
        }
        Command::Orbit(OrbitCmd::Hom { spec, from, to }) => {
            let cat = orbit_category(spec)?;
            json(to_value(&cat.hom_space(parse_vertex(from)?, parse_vertex(to)?)?)?)
        }
        Command::Orbit(OrbitCmd::End { spec, summands }) => {
            let cat = orbit_category(spec)?;
            let t = parse_vertices(summands)?;
            let end = EndAlgebra::new(&cat, &t)?;
            let mut out = to_value(&end.report())?;
            out["cluster_tilting"] = json!(cat.is_cluster_tilting(end.summands())?);
            json(out)
        }
        Command::G2(G2Cmd::ClusterVars) => {
            let vars = enumerate_variables(&ClusterSeed::g2())?;
            json(to_value(&vars.iter().map(|v| v.to_string()).collect::<Vec<_>>())?)
        }
        Command::G2(G2Cmd::Exchange) => json(to_value(&exchange_pattern(&ClusterSeed::g2())?)?),
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut inputs = Inputs { hasher: Sha256::new() };
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, &mut inputs)),
            Err(e) => Err(Error::InvalidParameters(format!("--jobs {n}: {e}"))),
        },
        None => execute(&cli.command, &mut inputs),
    };
    let (code, payload) = match result {
        Ok(p) => (0, p),
        Err(e) => (1, Payload::Json(json!({"error": e.to_string()}))),
    };
    let stdout = if cli.report {
        let result = match payload {
            Payload::Json(v) => v,
            Payload::Text(t) => Value::String(t),
        };
        let report = CommandReport {
            command: args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
            input_digest: format!(
                "sha256:{}",
                inputs
                    .hasher
                    .finalize()
                    .iter()
                    .map(|b| format!("{b:02x}"))
                    .collect::<String>()
            ),
            result,
            exit_status: code,
        };
        render(&to_value(&report).expect("report serializes"))
    } else {
        match payload {
            Payload::Json(v) => render(&v),
            Payload::Text(t) => t,
        }
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}
