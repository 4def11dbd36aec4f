//! Command-line plumbing for the lattice toolkit: a line-oriented JSON
//! document format for bounded lattices, machine-readable reports, a DOT
//! emitter for Hasse and specialization diagrams, and the verb dispatch
//! behind the `latspec` binary.
//!
//! Everything here is deterministic: documents and reports declare their
//! fields in alphabetical order and serialize to a single JSON line, DOT
//! output walks nodes in presentation order, and repeated runs on the same
//! input produce byte-identical bytes.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use latspec::adjunctions::{free_frame_d, omega};
use latspec::compare::{hochster_dual, matsui_comparison, mspec};
use latspec::props::{is_coherent, is_distributive, is_modular, is_semimodular, is_spatial};
use latspec::space::{is_sober, open_set_lattice};
use latspec::spectra::{fspcnt, spcnt};
use latspec::{
    Elt, FiniteLattice, FiniteSpace, GalleryEntry, LatticeError, PropertyReport, DEFAULT_SIZE_LIMIT,
};
use serde::{Deserialize, Serialize};

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// On-disk description of a bounded lattice: elements in presentation order
/// and the cover relations of its Hasse diagram, plus optional automorphism
/// and sublattice blocks consumed by `fixed` and by downstream tooling.
/// Fields are declared alphabetically so emitted JSON carries sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDocument {
    /// Pairs `(x, sigma(x))`; elements not listed are fixed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<Vec<(String, String)>>,
    pub covers: Vec<(String, String)>,
    pub elements: Vec<String>,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sublattice: Option<Vec<String>>,
}

impl LatticeDocument {
    /// Describe a plain lattice, without automorphism or sublattice blocks.
    pub fn from_lattice(name: &str, lat: &FiniteLattice) -> LatticeDocument {
        LatticeDocument {
            automorphism: None,
            covers: lat
                .covers()
                .into_iter()
                .map(|(a, b)| (lat.label(a).to_owned(), lat.label(b).to_owned()))
                .collect(),
            elements: lat.labels().to_vec(),
            name: name.to_owned(),
            sublattice: None,
        }
    }

    /// Describe a gallery entry, carrying its automorphism and sublattice
    /// blocks along when the entry has them.
    pub fn from_entry(entry: &GalleryEntry) -> LatticeDocument {
        let lat = &entry.lattice;
        let mut doc = Self::from_lattice(&entry.name, lat);
        doc.automorphism = entry.serre.as_ref().map(|sigma| {
            sigma
                .iter()
                .enumerate()
                .map(|(x, &y)| (lat.label(x).to_owned(), lat.label(y).to_owned()))
                .collect()
        });
        doc.sublattice = entry
            .tensor_sub
            .as_ref()
            .map(|sub| sub.iter().map(|&x| lat.label(x).to_owned()).collect());
        doc
    }

    /// Rebuild the lattice this document describes.
    pub fn lattice(&self) -> latspec::Result<FiniteLattice> {
        FiniteLattice::from_covers(
            self.elements.iter().map(String::as_str),
            self.covers.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
    }

    /// Resolve the automorphism block against `lat` as a permutation in
    /// element indices; elements not mentioned stay fixed.
    pub fn automorphism_indices(&self, lat: &FiniteLattice) -> latspec::Result<Option<Vec<Elt>>> {
        let Some(pairs) = &self.automorphism else {
            return Ok(None);
        };
        let mut sigma: Vec<Elt> = lat.elements().collect();
        let mut seen = vec![false; lat.len()];
        for (from, to) in pairs {
            let x = lat
                .index_of(from)
                .ok_or_else(|| LatticeError::UnknownLabel(from.clone()))?;
            let y = lat
                .index_of(to)
                .ok_or_else(|| LatticeError::UnknownLabel(to.clone()))?;
            if seen[x] {
                return Err(LatticeError::DuplicateLabel(from.clone()));
            }
            seen[x] = true;
            sigma[x] = y;
        }
        Ok(Some(sigma))
    }

    /// Resolve the sublattice block against `lat` as element indices.
    pub fn sublattice_indices(&self, lat: &FiniteLattice) -> latspec::Result<Option<Vec<Elt>>> {
        let Some(labels) = &self.sublattice else {
            return Ok(None);
        };
        labels
            .iter()
            .map(|l| {
                lat.index_of(l)
                    .ok_or_else(|| LatticeError::UnknownLabel(l.clone()))
            })
            .collect::<latspec::Result<Vec<Elt>>>()
            .map(Some)
    }
}

/// One property verdict, with the witness translated back to labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyLine {
    pub notes: String,
    pub property: String,
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

/// Machine-readable result of a property or spectrum computation. Sections
/// a verb does not produce are omitted; fields are declared alphabetically
/// so emitted JSON carries sorted keys and is stable across runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    /// Every closed set, each listed by point labels.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_sets: Option<Vec<Vec<String>>>,
    /// Comparison table `(source point, target point)` where one applies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Vec<(String, String)>>,
    pub input: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub open_set_lattice_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub properties: Option<Vec<PropertyLine>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sober: Option<bool>,
    /// Pairs `(x, y)` with `y` in the closure of `{x}` and `x != y`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub specialization: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    pub version: String,
}

impl SpectrumReport {
    fn new(input: &str) -> SpectrumReport {
        SpectrumReport {
            closed_sets: None,
            comparison: None,
            input: input.to_owned(),
            open_set_lattice_size: None,
            points: None,
            properties: None,
            sober: None,
            specialization: None,
            variant: None,
            version: VERSION.to_owned(),
        }
    }

    fn with_space(mut self, space: &FiniteSpace) -> SpectrumReport {
        self.points = Some(space.labels().to_vec());
        self.closed_sets = Some(
            space
                .closed_sets()
                .iter()
                .map(|set| set.iter().map(|p| space.label(p).to_owned()).collect())
                .collect(),
        );
        self.open_set_lattice_size = Some(open_set_lattice(space).lattice.len());
        self.sober = Some(is_sober(space).verdict);
        self.specialization = Some(
            space
                .specialization_pairs()
                .into_iter()
                .map(|(x, y)| (space.label(x).to_owned(), space.label(y).to_owned()))
                .collect(),
        );
        self
    }
}

/// A verb failure carrying the process exit code its error class dictates:
/// 2 for parse and validation problems, 3 when the input fails to be a
/// lattice, 4 for unknown gallery names, 5 when a size guard trips.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<LatticeError> for Failure {
    fn from(err: LatticeError) -> Failure {
        let code = match err {
            LatticeError::NotALattice { .. } | LatticeError::CyclicCovers => 3,
            LatticeError::SizeGuard { .. } => 5,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

/// Which spectrum a verb computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    /// Semipoint spectrum: one point per element.
    Fspcnt,
    /// Point spectrum: one point per meet-prime element.
    Spcnt,
    /// Join-prime spectrum: the point spectrum of the opposite lattice.
    Mspec,
}

impl Variant {
    fn name(self) -> &'static str {
        match self {
            Variant::Fspcnt => "fspcnt",
            Variant::Spcnt => "spcnt",
            Variant::Mspec => "mspec",
        }
    }

    fn space(self, lat: &FiniteLattice) -> FiniteSpace {
        match self {
            Variant::Fspcnt => fspcnt(lat),
            Variant::Spcnt => spcnt(lat),
            Variant::Mspec => mspec(lat),
        }
    }
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per invocation, keys sorted.
    Json,
    /// DOT: lattices as Hasse diagrams, spaces as specialization diagrams.
    Dot,
}

/// Finite lattices, their spectra, and frame approximations.
#[derive(Debug, Parser)]
#[command(name = "latspec", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Input document (JSON); "-" reads standard input.
    #[arg(long = "in", global = true, default_value = "-", value_name = "FILE")]
    pub input: String,

    /// Refuse inputs with more elements than this.
    #[arg(long = "max-size", global = true, default_value_t = DEFAULT_SIZE_LIMIT, value_name = "N")]
    pub max_size: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report distributivity, modularity, semimodularity, spatiality, and
    /// coherence, each with a witness where one exists.
    Check,
    /// Compute a spectrum of the lattice and report its topology.
    Spectrum {
        #[arg(long, value_enum, default_value_t = Variant::Spcnt)]
        variant: Variant,
    },
    /// Best frame approximation: the open-set lattice of the point spectrum.
    Omega,
    /// Free frame on the underlying poset: the open-set lattice of the
    /// semipoint spectrum.
    FreeFrame,
    /// Hochster dual of a spectrum of the lattice.
    Dual {
        #[arg(long, value_enum, default_value_t = Variant::Spcnt)]
        variant: Variant,
    },
    /// Sublattice fixed by the document's automorphism block.
    Fixed,
    /// Emit a gallery lattice as a document.
    Example { name: String },
    /// Render the lattice's Hasse diagram in DOT, or the specialization
    /// diagram of its point spectrum with --space.
    Dot {
        #[arg(long)]
        space: bool,
    },
}

/// Execute one invocation and return what belongs on standard output.
pub fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Check => cmd_check(cli),
        Command::Spectrum { variant } => cmd_spectrum(cli, *variant),
        Command::Omega => cmd_omega(cli),
        Command::FreeFrame => cmd_free_frame(cli),
        Command::Dual { variant } => cmd_dual(cli, *variant),
        Command::Fixed => cmd_fixed(cli),
        Command::Example { name } => cmd_example(cli, name),
        Command::Dot { space } => cmd_dot(cli, *space),
    }
}

fn read_document(cli: &Cli) -> Result<LatticeDocument, Failure> {
    let text = if cli.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|err| Failure {
                code: 2,
                message: format!("reading standard input: {err}"),
            })?;
        buf
    } else {
        std::fs::read_to_string(&cli.input).map_err(|err| Failure {
            code: 2,
            message: format!("reading {}: {err}", cli.input),
        })?
    };
    serde_json::from_str(&text).map_err(|err| Failure {
        code: 2,
        message: format!("parsing document: {err}"),
    })
}

fn load_lattice(cli: &Cli) -> Result<(LatticeDocument, FiniteLattice), Failure> {
    let doc = read_document(cli)?;
    if doc.elements.len() > cli.max_size {
        return Err(LatticeError::SizeGuard {
            size: doc.elements.len(),
            limit: cli.max_size,
        }
        .into());
    }
    let lat = doc.lattice()?;
    Ok((doc, lat))
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn emit_lattice(cli: &Cli, name: &str, lat: &FiniteLattice) -> String {
    match cli.format {
        Format::Json => json_line(&LatticeDocument::from_lattice(name, lat)),
        Format::Dot => dot_lattice(name, lat),
    }
}

fn property_line(lat: &FiniteLattice, report: &PropertyReport) -> PropertyLine {
    PropertyLine {
        notes: report.notes.clone(),
        property: report.property.to_owned(),
        verdict: report.verdict,
        witness: report
            .witness
            .as_ref()
            .map(|w| w.iter().map(|&x| lat.label(x).to_owned()).collect()),
    }
}

fn cmd_check(cli: &Cli) -> Result<String, Failure> {
    let (doc, lat) = load_lattice(cli)?;
    if cli.format == Format::Dot {
        return Ok(dot_lattice(&doc.name, &lat));
    }
    let reports = [
        is_distributive(&lat),
        is_modular(&lat),
        is_semimodular(&lat),
        is_spatial(&lat),
        is_coherent(&lat),
    ];
    let mut report = SpectrumReport::new(&doc.name);
    report.properties = Some(reports.iter().map(|r| property_line(&lat, r)).collect());
    Ok(json_line(&report))
}

fn cmd_spectrum(cli: &Cli, variant: Variant) -> Result<String, Failure> {
    let (doc, lat) = load_lattice(cli)?;
    let space = variant.space(&lat);
    let title = format!("{}({})", variant.name(), doc.name);
    if cli.format == Format::Dot {
        return Ok(dot_space(&title, &space));
    }
    let mut report = SpectrumReport::new(&doc.name).with_space(&space);
    report.variant = Some(variant.name().to_owned());
    if variant == Variant::Mspec && is_distributive(&lat).verdict {
        let m = matsui_comparison(&lat)?;
        report.comparison = Some(
            m.forward
                .source()
                .points()
                .map(|p| {
                    (
                        m.forward.source().label(p).to_owned(),
                        m.forward.target().label(m.forward.apply(p)).to_owned(),
                    )
                })
                .collect(),
        );
    }
    Ok(json_line(&report))
}

fn cmd_omega(cli: &Cli) -> Result<String, Failure> {
    let (doc, lat) = load_lattice(cli)?;
    let approx = omega(&lat);
    Ok(emit_lattice(
        cli,
        &format!("omega({})", doc.name),
        &approx.opens.lattice,
    ))
}

fn cmd_free_frame(cli: &Cli) -> Result<String, Failure> {
    let (doc, lat) = load_lattice(cli)?;
    let approx = free_frame_d(&lat, cli.max_size)?;
    Ok(emit_lattice(
        cli,
        &format!("d({})", doc.name),
        &approx.opens.lattice,
    ))
}

fn cmd_dual(cli: &Cli, variant: Variant) -> Result<String, Failure> {
    let (doc, lat) = load_lattice(cli)?;
    let dual = hochster_dual(&variant.space(&lat))?;
    let title = format!("dual({}({}))", variant.name(), doc.name);
    if cli.format == Format::Dot {
        return Ok(dot_space(&title, &dual));
    }
    let mut report = SpectrumReport::new(&doc.name).with_space(&dual);
    report.variant = Some(format!("dual({})", variant.name()));
    Ok(json_line(&report))
}

fn cmd_fixed(cli: &Cli) -> Result<String, Failure> {
    let (doc, lat) = load_lattice(cli)?;
    let sigma = doc.automorphism_indices(&lat)?.ok_or_else(|| Failure {
        code: 2,
        message: "document has no automorphism block".to_owned(),
    })?;
    let (fixed, _) = lat.fixed_sublattice(&sigma)?;
    Ok(emit_lattice(cli, &format!("fixed({})", doc.name), &fixed))
}

fn cmd_example(cli: &Cli, name: &str) -> Result<String, Failure> {
    let entry = latspec::gallery::by_name(name).ok_or_else(|| Failure {
        code: 4,
        message: format!(
            "unknown example {name:?}; available: {}",
            latspec::gallery::names().join(", ")
        ),
    })?;
    match cli.format {
        Format::Json => Ok(json_line(&LatticeDocument::from_entry(&entry))),
        Format::Dot => Ok(dot_lattice(&entry.name, &entry.lattice)),
    }
}

fn cmd_dot(cli: &Cli, space: bool) -> Result<String, Failure> {
    let (doc, lat) = load_lattice(cli)?;
    if space {
        Ok(dot_space(&format!("spcnt({})", doc.name), &spcnt(&lat)))
    } else {
        Ok(dot_lattice(&doc.name, &lat))
    }
}

fn dot_quote(text: &str) -> String {
    let mut quoted = String::from("\"");
    for c in text.chars() {
        if c == '"' || c == '\\' {
            quoted.push('\\');
        }
        quoted.push(c);
    }
    quoted.push('"');
    quoted
}

/// Render a lattice's Hasse diagram in DOT. Nodes keep presentation order
/// (`n0`, `n1`, ...), one edge per cover relation pointing upward, and
/// `rankdir=BT` puts the bottom element at the bottom of the picture.
pub fn dot_lattice(name: &str, lat: &FiniteLattice) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {} {{\n", dot_quote(name)));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in lat.elements() {
        out.push_str(&format!("  n{x} [label={}];\n", dot_quote(lat.label(x))));
    }
    for (a, b) in lat.covers() {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push('}');
    out
}

/// Render a space's specialization diagram in DOT: the Hasse diagram of the
/// specialization preorder, with an edge `x -> y` when `y` lies in the
/// closure of `{x}` and nothing sits strictly between.
pub fn dot_space(name: &str, space: &FiniteSpace) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {} {{\n", dot_quote(name)));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for p in space.points() {
        out.push_str(&format!("  n{p} [label={}];\n", dot_quote(space.label(p))));
    }
    for x in space.points() {
        for y in space.points() {
            if x != y
                && space.specializes(x, y)
                && !space
                    .points()
                    .any(|z| z != x && z != y && space.specializes(x, z) && space.specializes(z, y))
            {
                out.push_str(&format!("  n{x} -> n{y};\n"));
            }
        }
    }
    out.push('}');
    out
}
