use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use excseq::census::{census, cluster_census, rank_cap_from_env};
use excseq::cluster::{clusters, theta, theta_inverse, CompatibleTuple, Leveled, MExcSequence};
use excseq::enumerate::for_each_sequence;
use excseq::io::{
    catalog_doc, census_doc, export_dot, m_sequence_doc, sequence_doc, sequence_line, to_json,
    to_json_line, tuple_doc,
};
use excseq::mutation::{braid_sigma, garside};
use excseq::sequence::{classify, support_hasse};
use excseq::{BraidDirection, Catalog, Error, ExceptionalSequence, Quiver};

#[derive(Parser)]
#[command(
    name = "excseq",
    version,
    about = "Exceptional sequences over Dynkin quivers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct QuiverArg {
    /// Quiver: a preset such as `A3`, `A3:1>2<3`, `D4:sym-source`, `E6`, or an
    /// arrow list such as `Q3:1>2,3>2`.
    #[arg(long, short)]
    quiver: String,
}

#[derive(clap::Args)]
struct SeqArg {
    /// Comma-separated dimension-vector keys, e.g. `0.1.1,1.1.1,0.0.1`.
    #[arg(long, value_delimiter = ',', required = true)]
    seq: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutateDir {
    Right,
    Left,
}

#[derive(Clone, Copy, ValueEnum)]
enum ThetaDir {
    /// m-exceptional sequence to ordered compatible tuple.
    ToCluster,
    /// Ordered compatible tuple to m-exceptional sequence.
    ToSeq,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots.
    Roots {
        #[command(flatten)]
        quiver: QuiverArg,
    },
    /// List the indecomposable modules.
    Catalog {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate complete exceptional sequences.
    Enumerate {
        #[command(flatten)]
        quiver: QuiverArg,
        /// One JSON object per line.
        #[arg(long, conflicts_with = "count")]
        json: bool,
        /// Print only the number of sequences.
        #[arg(long)]
        count: bool,
    },
    /// Classify every term as relatively projective and/or injective.
    Classify {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long)]
        json: bool,
    },
    /// Braid move on the pair at positions k, k+1.
    Mutate {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        dir: MutateDir,
        #[arg(long)]
        json: bool,
    },
    /// Apply the Garside element to a complete exceptional sequence.
    Garside {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long)]
        json: bool,
    },
    /// Map between m-exceptional sequences and ordered compatible tuples.
    Theta {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long)]
        m: u32,
        /// Comma-separated levels, one per key.
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<u32>,
        #[arg(long, value_enum)]
        dir: ThetaDir,
        #[arg(long)]
        json: bool,
    },
    /// List the m-clusters.
    Clusters {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Print only the counts.
        #[arg(long)]
        count: bool,
    },
    /// Exact counts and probabilities over all complete exceptional sequences.
    Census {
        #[command(flatten)]
        quiver: QuiverArg,
        /// Print only the probability that the last two terms are rPI.
        #[arg(long, conflicts_with = "json")]
        rpi_pairs: bool,
        /// Include m-cluster counts for these values of m.
        #[arg(long, value_delimiter = ',')]
        clusters: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Hasse diagram of the terms ordered by support inclusion.
    Hasse {
        #[command(flatten)]
        quiver: QuiverArg,
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long)]
        dot: bool,
    },
}

enum Failure {
    Engine(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn load(arg: &QuiverArg) -> Result<Catalog, Error> {
    Catalog::build(&Quiver::parse(&arg.quiver)?)
}

fn keys_line(cat: &Catalog, seq: &ExceptionalSequence) -> String {
    seq.keys(cat).join(",")
}

fn leveled_line(cat: &Catalog, objects: &[Leveled]) -> String {
    objects
        .iter()
        .map(|x| x.display(cat))
        .collect::<Vec<_>>()
        .join(",")
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Roots { quiver } => {
            let q = Quiver::parse(&quiver.quiver)?;
            for root in q.positive_roots()? {
                writeln!(out, "{root}")?;
            }
        }
        Command::Catalog { quiver, json } => {
            let cat = load(&quiver)?;
            let doc = catalog_doc(&cat);
            if json {
                writeln!(out, "{}", to_json(&doc))?;
            } else {
                for m in &doc.modules {
                    let support: Vec<String> = m.support.iter().map(|v| v.to_string()).collect();
                    let mut flags = Vec::new();
                    if m.projective {
                        flags.push("projective");
                    }
                    if m.injective {
                        flags.push("injective");
                    }
                    if m.simple {
                        flags.push("simple");
                    }
                    writeln!(
                        out,
                        "{}\tsupport {{{}}}\t{}",
                        m.key,
                        support.join(","),
                        flags.join(" ")
                    )?;
                }
            }
        }
        Command::Enumerate {
            quiver,
            json,
            count,
        } => {
            let cat = load(&quiver)?;
            if count {
                writeln!(out, "{}", excseq::enumerate::count_ces(&cat))?;
            } else {
                let mut result = Ok(());
                for_each_sequence(&cat, cat.n(), |terms| {
                    let line = if json {
                        to_json_line(&sequence_line(&cat, terms))
                    } else {
                        terms
                            .iter()
                            .map(|&t| cat.key(t))
                            .collect::<Vec<_>>()
                            .join(",")
                    };
                    result = writeln!(out, "{line}");
                    result.is_ok()
                });
                result?;
            }
        }
        Command::Classify { quiver, seq, json } => {
            let cat = load(&quiver)?;
            let seq = ExceptionalSequence::from_keys(&cat, &seq.seq)?;
            let doc = sequence_doc(&cat, &seq)?;
            if json {
                writeln!(out, "{}", to_json(&doc))?;
            } else {
                for (k, t) in doc.terms.iter().enumerate() {
                    writeln!(
                        out,
                        "E{} {} relProj={} relInj={} root={}",
                        k + 1,
                        t.key,
                        t.rel_proj,
                        t.rel_inj,
                        t.root
                    )?;
                }
            }
        }
        Command::Mutate {
            quiver,
            seq,
            k,
            dir,
            json,
        } => {
            let cat = load(&quiver)?;
            let seq = ExceptionalSequence::from_keys(&cat, &seq.seq)?;
            let dir = match dir {
                MutateDir::Right => BraidDirection::Right,
                MutateDir::Left => BraidDirection::Left,
            };
            let result = braid_sigma(&cat, &seq, k, dir)?;
            if json {
                writeln!(out, "{}", to_json(&sequence_doc(&cat, &result)?))?;
            } else {
                writeln!(out, "{}", keys_line(&cat, &result))?;
            }
        }
        Command::Garside { quiver, seq, json } => {
            let cat = load(&quiver)?;
            let seq = ExceptionalSequence::from_keys(&cat, &seq.seq)?;
            let result = garside(&cat, &seq)?;
            if json {
                writeln!(out, "{}", to_json(&sequence_doc(&cat, &result)?))?;
            } else {
                writeln!(out, "{}", keys_line(&cat, &result))?;
            }
        }
        Command::Theta {
            quiver,
            seq,
            m,
            levels,
            dir,
            json,
        } => {
            let cat = load(&quiver)?;
            if levels.len() != seq.seq.len() {
                return Err(Error::Dimension {
                    expected: seq.seq.len(),
                    found: levels.len(),
                }
                .into());
            }
            let objects = seq
                .seq
                .iter()
                .zip(&levels)
                .map(|(key, &level)| Ok(Leveled::new(cat.parse_key(key)?, level)))
                .collect::<Result<Vec<_>, Error>>()?;
            match dir {
                ThetaDir::ToCluster => {
                    let input = MExcSequence::new(&cat, m, objects)?;
                    let tuple = theta_inverse(&cat, &input)?;
                    if json {
                        writeln!(out, "{}", to_json(&tuple_doc(&cat, &tuple)))?;
                    } else {
                        writeln!(out, "{}", leveled_line(&cat, tuple.objects()))?;
                    }
                }
                ThetaDir::ToSeq => {
                    let input = CompatibleTuple::new(&cat, m, objects)?;
                    let seq = theta(&cat, &input)?;
                    if json {
                        writeln!(out, "{}", to_json(&m_sequence_doc(&cat, &seq)))?;
                    } else {
                        writeln!(out, "{}", leveled_line(&cat, seq.terms()))?;
                    }
                }
            }
        }
        Command::Clusters { quiver, m, count } => {
            let cat = load(&quiver)?;
            if count {
                let c = cluster_census(&cat, m, rank_cap_from_env())?;
                writeln!(
                    out,
                    "clusters {} positive {} ordered {}",
                    c.clusters, c.positive_clusters, c.ordered_tuples
                )?;
            } else {
                if m == 0 {
                    return Err(Error::Domain("m must be at least 1".into()).into());
                }
                for cluster in clusters(&cat, m)? {
                    writeln!(out, "{}", leveled_line(&cat, &cluster))?;
                }
            }
        }
        Command::Census {
            quiver,
            rpi_pairs,
            clusters,
            json,
        } => {
            let cat = load(&quiver)?;
            let cap = rank_cap_from_env();
            let report = census(&cat, cap)?;
            if rpi_pairs {
                let text = report
                    .rpi_pair_text()
                    .ok_or_else(|| Error::Domain("rank 1 has no pairs of positions".into()))?;
                writeln!(out, "{text}")?;
                return Ok(());
            }
            let cluster_counts = clusters
                .iter()
                .map(|&m| cluster_census(&cat, m, cap))
                .collect::<Result<Vec<_>, Error>>()?;
            let doc = census_doc(&report, &cluster_counts);
            if json {
                writeln!(out, "{}", to_json(&doc))?;
                return Ok(());
            }
            writeln!(
                out,
                "quiver {} ({}, h = {})",
                doc.quiver, doc.dynkin, doc.coxeter_number
            )?;
            writeln!(out, "complete exceptional sequences: {}", doc.total)?;
            for p in &doc.positions {
                writeln!(
                    out,
                    "position {}: relProj {} relInj {} rPI {} (p = {})",
                    p.position, p.rel_proj, p.rel_inj, p.rpi, p.rpi_probability
                )?;
            }
            for s in doc.rpi_sets.iter().filter(|s| s.positions.len() > 1) {
                let set: Vec<String> = s.positions.iter().map(|p| p.to_string()).collect();
                writeln!(
                    out,
                    "rPI at {{{}}}: {} (p = {})",
                    set.join(","),
                    s.count,
                    s.probability
                )?;
            }
            for (k, c) in doc.last_projective.iter().enumerate().skip(1) {
                writeln!(out, "last {k} projective: {c}")?;
            }
            for (k, c) in doc.last_rel_proj.iter().enumerate().skip(1) {
                writeln!(out, "last {k} relatively projective: {c}")?;
            }
            for c in &doc.clusters {
                writeln!(
                    out,
                    "m = {}: clusters {} positive {} ordered {} m-sequences {} projectively signed {}",
                    c.m,
                    c.clusters,
                    c.positive_clusters,
                    c.ordered_tuples,
                    c.m_sequences,
                    c.projectively_signed
                )?;
            }
        }
        Command::Hasse { quiver, seq, dot } => {
            let cat = load(&quiver)?;
            let seq = ExceptionalSequence::from_keys(&cat, &seq.seq)?;
            classify(&cat, &seq)?;
            let hasse = support_hasse(&cat, &seq);
            if dot {
                write!(out, "{}", export_dot(&cat, &hasse))?;
            } else {
                for (i, (&id, &max)) in hasse.nodes.iter().zip(&hasse.maximal).enumerate() {
                    let mark = if max { " (maximal)" } else { "" };
                    writeln!(out, "E{} {}{mark}", i + 1, cat.key(id))?;
                }
                for &(a, b) in &hasse.edges {
                    writeln!(out, "E{} < E{}", a + 1, b + 1)?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { 2 } else { 3 })
        }
    }
}
