//! Command-line front end. Exit codes: 0 when a verdict was computed (true
//! or false), 2 for input errors, 3 when a search would exceed its budget.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::brauer::{self, BrauerError, LedgerFile};
use crate::engine::{self, EdgeFilter, FileError, Wildness};
use crate::group::{FiniteGroup, GroupError, GroupSpec, TableOptions, DEFAULT_ORDER_CAP};
use crate::liedahl::{self, AbelianFieldSpec, LiedahlError};
use crate::local::{self, LocalError, LocalExtensionSpec, LocalFieldParams, SensitivityVerdict};
use crate::report::RunReport;
use crate::suite;
use crate::words::{self, Budget, Mode, ParseError, Presentation, QuotientStrategy, SearchError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<LocalError> for CliError {
    fn from(e: LocalError) -> Self {
        match e {
            LocalError::Search(s) => s.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

macro_rules! input_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        }
    )*};
}

input_errors!(GroupError, LiedahlError, BrauerError, FileError, ParseError, serde_json::Error);

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "admissibility", version, about = "Admissibility computations for finite groups over number fields")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Worker threads for search loops; results do not depend on it.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Candidate budget per search (default: $ADMISSIBILITY_SEARCH_BUDGET or 10^9).
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    /// Leave timings out of the report.
    #[arg(long, global = true)]
    pub no_timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure of a group given in the group-spec syntax.
    Group(GroupArgs),
    /// Count epimorphisms from a presented group onto a finite group.
    EpiCount(EpiArgs),
    /// Decide whether a finite group is a quotient of a presented group.
    QuotientTest(QuotientArgs),
    #[command(subcommand)]
    Local(LocalCmd),
    /// Liedahl's condition (or tame admissibility) over an abelian number field.
    Liedahl(LiedahlArgs),
    #[command(subcommand)]
    Brauer(BrauerCmd),
    #[command(subcommand)]
    Admissible(AdmissibleCmd),
    /// Recompute one published fixture.
    PaperSuite(SuiteArgs),
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[arg(long)]
    pub spec: String,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: usize,
    /// Also count automorphisms.
    #[arg(long)]
    pub automorphisms: bool,
}

#[derive(Debug, Args)]
pub struct PresentedTarget {
    #[arg(long)]
    pub presentation: Option<String>,
    /// abstract, pro-P (e.g. pro-2) or pro-prime-to-2.
    #[arg(long, default_value = "abstract")]
    pub mode: String,
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EpiPreset {
    #[value(name = "s3-q3")]
    S3Q3,
}

#[derive(Debug, Args)]
pub struct EpiArgs {
    #[arg(long, value_enum)]
    pub preset: Option<EpiPreset>,
    #[command(flatten)]
    pub target: PresentedTarget,
    /// Use the unpruned enumeration.
    #[arg(long)]
    pub naive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuotientPreset {
    #[value(name = "q2-2to10")]
    Q2TwoToTen,
    #[value(name = "q2i-2to10")]
    Q2iTwoToTen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Naive,
    FrattiniLift,
    CentralReduction,
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    #[arg(long, value_enum)]
    pub preset: Option<QuotientPreset>,
    #[command(flatten)]
    pub target: PresentedTarget,
    #[arg(long, value_enum, default_value = "auto")]
    pub strategy: StrategyArg,
}

#[derive(Debug, Subcommand)]
pub enum LocalCmd {
    /// Is the p-group a Galois group over the local field?
    Realizable {
        #[arg(long)]
        field: String,
        #[arg(long)]
        group: String,
    },
    /// Pro-p presentation of the maximal p-extension.
    Presentation {
        #[arg(long)]
        field: String,
    },
    /// The sensitive local extensions.
    Sensitive {
        #[arg(long)]
        list: bool,
        #[arg(long)]
        count: bool,
    },
    /// Sensitivity and transfer route for an extension `--ext e=..,f=..[,tag=..]` of `--field`.
    Route {
        #[arg(long)]
        field: String,
        #[arg(long)]
        ext: String,
    },
    /// `|k^× / k^×m|`.
    PowerClasses {
        #[arg(long)]
        field: String,
        #[arg(long)]
        m: u64,
    },
    /// Evaluate the metacyclic relation word over all small 2-groups.
    RelationSweep {
        #[arg(long, default_value_t = 16)]
        bound: u64,
    },
}

#[derive(Debug, Args)]
pub struct LiedahlArgs {
    #[arg(long)]
    pub group: String,
    /// rationals, gaussian, cyclotomic:M, quadratic:D, fixed:F:H1,H2, joined with `+`.
    #[arg(long)]
    pub field: String,
    /// Tame admissibility of a solvable group from its Sylow subgroups.
    #[arg(long)]
    pub tame: bool,
}

#[derive(Debug, Subcommand)]
pub enum BrauerCmd {
    /// Index of the class in the ledger.
    Index {
        #[arg(long)]
        ledger: PathBuf,
    },
    /// Restriction of the base class to the extension in the ledger.
    Restrict {
        #[arg(long)]
        ledger: PathBuf,
    },
    /// Adequacy of the extension for a group of the given order.
    Adequate {
        #[arg(long)]
        ledger: PathBuf,
        #[arg(long)]
        group_order: u64,
        #[arg(long)]
        tame: bool,
    },
    /// Is the class (over the extension) a restriction from the base?
    Image {
        #[arg(long)]
        ledger: PathBuf,
    },
    /// Largest order in the relative Brauer group for local degrees `--degrees 4,9`.
    MaxOrder {
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u64>,
        #[arg(long)]
        brute_force: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    Any,
    AvoidResidueChar,
    TameOnly,
}

#[derive(Debug, Subcommand)]
pub enum AdmissibleCmd {
    /// Schacher's criterion for a given certificate.
    Check {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Search for a certificate from local facts.
    Search {
        #[arg(long)]
        facts: PathBuf,
        #[arg(long, value_enum, default_value = "any")]
        filter: FilterArg,
    },
    /// Wild or non-wild, from local facts.
    Wildness {
        #[arg(long)]
        facts: PathBuf,
    },
    /// Admissibility over a larger field.
    Transfer {
        #[arg(long)]
        input: PathBuf,
    },
    /// Implication diagram and separation ledger.
    Diagram {
        #[arg(long)]
        ledger: Option<PathBuf>,
        /// Ask whether `A=>B` holds in the closure.
        #[arg(long)]
        implies: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    SensitiveCount,
    S3Epimorphisms,
    #[value(name = "order-2-10")]
    OrderTwoTen,
    LocalRealizability,
    LiedahlFixtures,
    MetacyclicIdentity,
    BrauerExamples,
    Diagram,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(value_enum)]
    pub preset: Preset,
}

/// Parses `args` (program name first), runs, prints, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let echo: Vec<String> = std::env::args().skip(1).collect();
    match execute(&cli, echo) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Structured => print!("{}", report.to_json()),
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command on the configured worker pool.
pub fn execute(cli: &Cli, echo: Vec<String>) -> Result<RunReport, CliError> {
    let budget = cli.budget.map(Budget).unwrap_or_else(Budget::from_env);
    let mut report = RunReport::new(echo);
    let go = |report: &mut RunReport| dispatch(&cli.command, budget, report);
    match cli.workers {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| CliError::Input(e.to_string()))?;
            pool.install(|| go(&mut report))?;
        }
        None => go(&mut report)?,
    }
    Ok(report.finish(!cli.no_timings))
}

fn dispatch(cmd: &Command, budget: Budget, r: &mut RunReport) -> Result<(), CliError> {
    match cmd {
        Command::Group(a) => group_cmd(a, r),
        Command::EpiCount(a) => epi_cmd(a, budget, r),
        Command::QuotientTest(a) => quotient_cmd(a, budget, r),
        Command::Local(c) => local_cmd(c, budget, r),
        Command::Liedahl(a) => liedahl_cmd(a, r),
        Command::Brauer(c) => brauer_cmd(c, r),
        Command::Admissible(c) => admissible_cmd(c, r),
        Command::PaperSuite(a) => suite_cmd(a.preset, budget, r),
    }
}

fn truth(b: bool) -> &'static str {
    if b {
        "TRUE"
    } else {
        "FALSE"
    }
}

fn build(spec: &str) -> Result<FiniteGroup, CliError> {
    Ok(GroupSpec::parse(spec)?.build()?)
}

fn read_input(path: &Path, r: &mut RunReport) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    r.add_input(text.as_bytes());
    Ok(text)
}

fn labels(g: &FiniteGroup, images: &[usize]) -> String {
    images.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join(", ")
}

fn group_cmd(a: &GroupArgs, r: &mut RunReport) -> Result<(), CliError> {
    let spec = GroupSpec::parse(&a.spec)?;
    let g = r.timed("build", || spec.build_with(&TableOptions::with_cap(a.cap)))?;
    r.verdict("order", g.order().to_string(), g.order());
    r.verdict("exponent", g.exponent().to_string(), g.exponent());
    r.verdict("abelian", truth(g.is_abelian()), g.is_abelian());
    r.verdict("solvable", truth(g.is_solvable()), g.is_solvable());
    r.verdict("center order", g.center().order().to_string(), g.center().order());
    r.verdict("derived order", g.commutator_subgroup().order().to_string(), g.commutator_subgroup().order());
    let inv = g.abelianization_invariants();
    r.verdict("abelianization", format!("{inv:?}"), &inv);
    if let Some(p) = g.p_group_prime() {
        r.verdict("p-group", format!("p = {p}, rank {}", g.min_generators()), (p, g.min_generators()));
    }
    let sylows: Vec<(u64, usize)> = g.sylow_system().iter().map(|(p, s)| (*p, s.order())).collect();
    let text = sylows.iter().map(|(p, o)| format!("{p}:{o}")).collect::<Vec<_>>().join(" ");
    r.verdict("sylow orders", text, &sylows);
    match r.timed("metacyclic", || crate::group::is_metacyclic(&g)) {
        Some(m) => r.verdict("metacyclic", m.to_string(), m),
        None => r.verdict("metacyclic", "FALSE", false),
    }
    if a.automorphisms {
        let n = r.timed("automorphisms", || g.automorphism_count());
        r.verdict("automorphisms", n.to_string(), n);
    }
    Ok(())
}

fn presented(t: &PresentedTarget) -> Result<(Presentation, FiniteGroup), CliError> {
    let (Some(text), Some(group)) = (&t.presentation, &t.group) else {
        return Err(CliError::Input("give --preset, or both --presentation and --group".into()));
    };
    let mode = Mode::parse(&t.mode).ok_or_else(|| CliError::Input(format!("unknown mode {:?}", t.mode)))?;
    Ok((Presentation::parse(text, mode)?, build(group)?))
}

fn epi_cmd(a: &EpiArgs, budget: Budget, r: &mut RunReport) -> Result<(), CliError> {
    let (pres, g) = match a.preset {
        Some(EpiPreset::S3Q3) => (local::s3_counting_presentation(), crate::group::symmetric(3)?),
        None => presented(&a.target)?,
    };
    r.verdict("presentation", pres.to_string(), pres.to_string());
    if a.naive {
        let n = r.timed("search", || words::count_epimorphisms_naive(&pres, &g, budget))?;
        r.verdict("epimorphisms", n.to_string(), n);
        return Ok(());
    }
    let c = r.timed("search", || words::count_epimorphisms(&pres, &g, budget))?;
    r.verdict("epimorphisms", c.epimorphisms.to_string(), c.epimorphisms);
    r.verdict("automorphisms", c.automorphisms.to_string(), c.automorphisms);
    r.verdict("normal subgroups", c.normal_subgroups.to_string(), c.normal_subgroups);
    r.verdict("candidates", c.candidates.to_string(), c.candidates);
    Ok(())
}

fn quotient_cmd(a: &QuotientArgs, budget: Budget, r: &mut RunReport) -> Result<(), CliError> {
    if let Some(preset) = a.preset {
        let field = match preset {
            QuotientPreset::Q2TwoToTen => LocalFieldParams::q2(),
            QuotientPreset::Q2iTwoToTen => LocalFieldParams::q2_i(),
        };
        let pres = local::presentation_of_max_p_extension(&field)?;
        let g = crate::group::obstruction_group_2_10();
        r.verdict("presentation", pres.to_string(), pres.to_string());
        let red = r.timed("search", || words::central_reduction_quotient_test(&pres, &g, budget))?;
        r.verdict("quotient", truth(red.holds), red.holds);
        r.verdict("central subgroup", format!("order {}, exponent gcd {}", red.central_order, red.exponent_gcd), red.central_order);
        r.verdict(
            "coset tuples",
            format!("{} of {}", red.coset_tuples_scanned, red.coset_tuples_total),
            (red.coset_tuples_scanned, red.coset_tuples_total),
        );
        if let Some(w) = &red.witness {
            let ok = words::verify_epimorphism(&pres, &g, w);
            r.witness("images", labels(&g, w), w);
            r.witness("verified", truth(ok), ok);
        }
        return Ok(());
    }
    let (pres, g) = presented(&a.target)?;
    let strategy = match a.strategy {
        StrategyArg::Auto => QuotientStrategy::Auto,
        StrategyArg::Naive => QuotientStrategy::Naive,
        StrategyArg::FrattiniLift => QuotientStrategy::FrattiniLift,
        StrategyArg::CentralReduction => QuotientStrategy::CentralReduction,
    };
    let v = r.timed("search", || words::is_prop_quotient_with(&pres, &g, strategy, budget))?;
    r.verdict("quotient", truth(v.holds), v.holds);
    r.verdict("strategy", format!("{:?}", v.strategy), v.strategy);
    r.verdict("estimate", v.estimate.to_string(), v.estimate);
    if let Some(w) = &v.witness {
        r.witness("images", labels(&g, w), w);
        r.witness("verified", truth(words::verify_epimorphism(&pres, &g, w)), true);
    }
    Ok(())
}

fn local_cmd(c: &LocalCmd, budget: Budget, r: &mut RunReport) -> Result<(), CliError> {
    match c {
        LocalCmd::Realizable { field, group } => {
            let k: LocalFieldParams = field.parse()?;
            let g = build(group)?;
            let v = r.timed("search", || local::is_realizable_local(&g, &k, budget))?;
            r.verdict("field", k.to_string(), &k);
            r.verdict("realizable", truth(v.holds), v.holds);
            r.verdict("strategy", format!("{:?}", v.strategy), v.strategy);
            if let Some(w) = &v.witness {
                r.witness("images", labels(&g, w), w);
            }
        }
        LocalCmd::Presentation { field } => {
            let k: LocalFieldParams = field.parse()?;
            let p = local::presentation_of_max_p_extension(&k)?;
            r.verdict("field", k.to_string(), &k);
            r.verdict("presentation", p.to_string(), p.to_string());
        }
        LocalCmd::Sensitive { list, count } => {
            let census = r.timed("census", || local::count_sensitive_extensions(budget))?;
            if *count || !*list {
                r.verdict("sensitive extensions", census.to_string(), &census);
            }
            if *list {
                for (i, e) in local::enumerate_sensitive_extensions(&census).iter().enumerate() {
                    r.witness(&format!("{:>2} case {}", i + 1, e.case), e.base_description.clone(), e);
                }
            }
        }
        LocalCmd::Route { field, ext } => {
            let k: LocalFieldParams = field.parse()?;
            let spec = LocalExtensionSpec::parse_over(k, ext)?;
            let v = local::classify_extension(&spec);
            let text = match &v {
                SensitivityVerdict::Sensitive { case } => format!("sensitive, case {case}"),
                SensitivityVerdict::NonSensitive { route: Some(t) } => format!("non-sensitive, {t}"),
                SensitivityVerdict::NonSensitive { route: None } => "non-sensitive, no route".into(),
            };
            r.verdict("extension", format!("degree {}", spec.degree()), &spec);
            r.verdict("classification", text, &v);
        }
        LocalCmd::PowerClasses { field, m } => {
            let k: LocalFieldParams = field.parse()?;
            let n = k.power_class_count(*m);
            r.verdict("power classes", n.to_string(), n);
            if k.n == 1 {
                let units = local::unit_power_classes_brute_force(k.p, *m);
                let check = units * *m == n;
                r.witness("unit classes (brute force)", units.to_string(), units);
                r.witness("agrees", truth(check), check);
            }
        }
        LocalCmd::RelationSweep { bound } => {
            let s = r.timed("sweep", || local::metacyclic_relation_sweep(*bound, budget))?;
            relation_sweep_lines(&s, r);
        }
    }
    Ok(())
}

fn relation_sweep_lines(s: &local::RelationSweep, r: &mut RunReport) {
    r.verdict("parameter tuples", s.groups.to_string(), s.groups);
    r.verdict("(tuple, s) cases", s.cases.to_string(), s.cases);
    r.verdict("unsolvable congruences", s.unsolvable.to_string(), s.unsolvable);
    r.verdict("word not identity", s.failures.len().to_string(), s.failures.len());
    r.verdict("failing tuples", s.failing_groups.to_string(), s.failing_groups);
    r.verdict("failing yet realizable", s.failures_realizable_over_q2.to_string(), s.failures_realizable_over_q2);
    r.verdict("nonvanishing with [y,x]", s.reversed_commutator_failures.to_string(), s.reversed_commutator_failures);
    for f in &s.failures {
        r.witness("nonvanishing", format!("{} s={}", f.params, f.s), f);
    }
}

fn liedahl_cmd(a: &LiedahlArgs, r: &mut RunReport) -> Result<(), CliError> {
    let g = build(&a.group)?;
    let k: AbelianFieldSpec = a.field.parse()?;
    r.verdict("field", k.to_string(), k.to_string());
    if a.tame {
        let v = r.timed("criterion", || liedahl::tame_admissibility(&g, &k))?;
        r.verdict("tame admissible", truth(v.holds), &v);
        for (p, status) in &v.per_prime {
            let text = match status {
                liedahl::SylowStatus::Liedahl(l) => format!("metacyclic, Liedahl {}", truth(l.holds)),
                liedahl::SylowStatus::NotMetacyclic => "not metacyclic".into(),
            };
            r.witness(&format!("sylow {p}"), text, status);
        }
        return Ok(());
    }
    let v = r.timed("scan", || liedahl::liedahl_condition(&g, &k))?;
    r.verdict("liedahl", truth(v.holds), v.holds);
    r.verdict(
        "presentations",
        format!("{} scanned of {}", v.presentations_scanned, v.presentations_total),
        (v.presentations_scanned, v.presentations_total),
    );
    if let Some(w) = v.witness {
        r.witness("presentation", w.to_string(), w);
        r.witness("verified", truth(liedahl::verify_witness(&g, &k, &w)), true);
    }
    Ok(())
}

fn ledger(path: &Path, r: &mut RunReport) -> Result<LedgerFile, CliError> {
    Ok(serde_json::from_str(&read_input(path, r)?)?)
}

fn extension(file: &LedgerFile) -> Result<brauer::ExtensionPlaceData, CliError> {
    file.extension_data()?.ok_or_else(|| CliError::Input("ledger has no extension data".into()))
}

fn brauer_cmd(c: &BrauerCmd, r: &mut RunReport) -> Result<(), CliError> {
    match c {
        BrauerCmd::Index { ledger: path } => {
            let class = ledger(path, r)?.class()?;
            r.verdict("class", class.to_string(), &class);
            r.verdict("index", class.index().to_string(), class.index());
        }
        BrauerCmd::Restrict { ledger: path } => {
            let file = ledger(path, r)?;
            let class = file.class()?;
            let res = brauer::restrict(&class, &extension(&file)?)?;
            r.verdict("restriction", res.to_string(), &res);
            r.verdict("index", res.index().to_string(), res.index());
        }
        BrauerCmd::Adequate { ledger: path, group_order, tame } => {
            let ext = extension(&ledger(path, r)?)?;
            let gcds = ext.local_gcds();
            r.verdict("local gcds", format!("{gcds:?}"), &gcds);
            r.verdict("max order", brauer::max_order_in_relative_brauer(&gcds).to_string(), brauer::max_order_in_relative_brauer(&gcds));
            let ok = brauer::is_adequate(*group_order, &ext);
            r.verdict("adequate", truth(ok), ok);
            if *tame {
                let ok = brauer::is_tamely_adequate(*group_order, &ext)?;
                r.verdict("tamely adequate", truth(ok), ok);
            }
        }
        BrauerCmd::Image { ledger: path } => {
            let file = ledger(path, r)?;
            let img = brauer::in_restriction_image(&file.class()?, &extension(&file)?)?;
            r.verdict("in image", truth(img.holds), img.holds);
            if let Some(w) = &img.witness {
                r.witness("preimage", w.to_string(), w);
            }
            if let Some(o) = &img.obstruction {
                r.witness("obstruction", o.to_string(), o);
            }
        }
        BrauerCmd::MaxOrder { degrees, brute_force } => {
            let m = brauer::max_order_in_relative_brauer(degrees);
            r.verdict("max order", m.to_string(), m);
            if *brute_force {
                let b = brauer::max_order_brute_force(degrees);
                r.witness("brute force", b.to_string(), b);
            }
        }
    }
    Ok(())
}

fn admissible_cmd(c: &AdmissibleCmd, r: &mut RunReport) -> Result<(), CliError> {
    match c {
        AdmissibleCmd::Check { certificate } => {
            let file = engine::CertificateFile::parse(&read_input(certificate, r)?)?;
            let g = file.group()?;
            let cert = file.certificate(&g)?;
            let ok = engine::schacher_check(&g, &cert);
            r.verdict("schacher", truth(ok), ok);
            r.verdict("all places distinct", truth(cert.all_places_distinct()), cert.all_places_distinct());
        }
        AdmissibleCmd::Search { facts, filter } => {
            let file = engine::FactsFile::parse(&read_input(facts, r)?)?;
            let g = file.group()?;
            let facts = file.facts(&g)?;
            let filter = match filter {
                FilterArg::Any => EdgeFilter::Any,
                FilterArg::AvoidResidueChar => EdgeFilter::AvoidResidueChar,
                FilterArg::TameOnly => EdgeFilter::TameOnly,
            };
            let cert = engine::preadmissibility_search_with(&g, &facts, file.distinctness(), filter);
            r.verdict("preadmissible", truth(cert.is_some()), cert.is_some());
            if let Some(cert) = cert {
                certificate_lines(&cert, r);
            }
        }
        AdmissibleCmd::Wildness { facts } => {
            let file = engine::FactsFile::parse(&read_input(facts, r)?)?;
            let g = file.group()?;
            let facts = file.facts(&g)?;
            match engine::classify_wildness(&g, &facts, file.distinctness()) {
                Wildness::Wild => r.verdict("wildness", "wild", "wild"),
                Wildness::NonWildAvailable { certificate } => {
                    r.verdict("wildness", "non-wild-available", "non-wild-available");
                    certificate_lines(&certificate, r);
                }
            }
        }
        AdmissibleCmd::Transfer { input } => {
            let input = engine::TransferFile::parse(&read_input(input, r)?)?.input()?;
            let v = engine::extension_admissibility_verdict(&input);
            let text = match &v {
                engine::TransferVerdict::Admissible { routes } => {
                    let parts: Vec<String> = routes
                        .iter()
                        .map(|(p, route)| match route {
                            engine::PrimeRoute::Divisors { count } => format!("p={p}: {count} divisors"),
                            engine::PrimeRoute::MetacyclicLiedahl => format!("p={p}: metacyclic, Liedahl"),
                        })
                        .collect();
                    format!("admissible ({})", parts.join("; "))
                }
                engine::TransferVerdict::NotAdmissible { failure } => format!("not admissible: {failure}"),
                engine::TransferVerdict::NotApplicable { reason } => format!("not applicable: {reason}"),
            };
            r.verdict("transfer", text, &v);
        }
        AdmissibleCmd::Diagram { ledger, implies } => {
            let diagram = engine::ImplicationDiagram::standard();
            let ledger = match ledger {
                Some(path) => engine::parse_separation_ledger(&read_input(path, r)?)?,
                None => engine::standard_ledger(),
            };
            if let Some(q) = implies {
                let (a, b) = engine::parse_implication(q)?;
                r.verdict(&format!("{}=>{}", a.get(), b.get()), truth(diagram.implies(a, b)), diagram.implies(a, b));
            }
            diagram_lines(&engine::ledger_check(&diagram, &ledger), r);
        }
    }
    Ok(())
}

fn certificate_lines(cert: &engine::AdmissibilityCertificate, r: &mut RunReport) {
    for e in &cert.entries {
        let text = format!(
            "{} (|H| = {}), {} (|H| = {})",
            e.places[0].label,
            e.subgroups[0].order(),
            e.places[1].label,
            e.subgroups[1].order()
        );
        r.witness(&format!("p = {}", e.prime), text, e);
    }
}

fn diagram_lines(report: &engine::LedgerReport, r: &mut RunReport) {
    r.verdict("closure size", report.closure.len().to_string(), report.closure.len());
    r.verdict("dag", truth(report.is_dag), report.is_dag);
    r.verdict("inconsistencies", report.inconsistencies.len().to_string(), &report.inconsistencies);
    r.verdict("refuted pairs", report.refuted.len().to_string(), report.refuted.len());
    let unrefuted: Vec<String> = report.unrefuted.iter().map(|(a, b)| format!("{}=>{}", a.get(), b.get())).collect();
    r.verdict("unrefuted pairs", unrefuted.len().to_string(), &unrefuted);
    r.verdict("ledger passes", truth(report.passes()), report.passes());
    for (pair, example) in &report.refuted {
        r.witness(pair, example.clone(), example);
    }
}

fn suite_cmd(preset: Preset, budget: Budget, r: &mut RunReport) -> Result<(), CliError> {
    match preset {
        Preset::SensitiveCount => {
            let c = r.timed("census", || suite::sensitive_count(budget))?;
            r.verdict("sensitive extensions", c.to_string(), &c);
            r.witness("quadratic fields", c.quadratic_fields.to_string(), c.quadratic_fields);
            r.witness("cyclic cubic fields", c.cyclic_cubic_fields.to_string(), c.cyclic_cubic_fields);
            r.witness("S3 extensions", c.s3_extensions.to_string(), c.s3_extensions);
            r.witness("non-Galois cubic fields", c.non_galois_cubic_fields.to_string(), c.non_galois_cubic_fields);
        }
        Preset::S3Epimorphisms => {
            let c = r.timed("search", || suite::s3_epimorphisms(budget))?;
            r.verdict("presentation", local::s3_counting_presentation().to_string(), ());
            r.verdict("epimorphisms", c.epimorphisms.to_string(), c.epimorphisms);
            r.verdict("normal subgroups", c.normal_subgroups.to_string(), c.normal_subgroups);
            r.witness("automorphisms", c.automorphisms.to_string(), c.automorphisms);
        }
        Preset::OrderTwoTen => {
            let f = r.timed("search", || suite::order_2_10(budget))?;
            r.verdict("over Q2", truth(f.over_q2.holds), f.over_q2.holds);
            r.verdict("witness verified", truth(f.witness_verified), f.witness_verified);
            r.verdict("over Q2(i)", truth(f.over_q2_i.holds), f.over_q2_i.holds);
            r.verdict(
                "coset tuples over Q2(i)",
                format!("{} of {}", f.over_q2_i.coset_tuples_scanned, f.over_q2_i.coset_tuples_total),
                f.over_q2_i.coset_tuples_total,
            );
            r.witness("presentation Q2", f.presentation_q2.clone(), &f.over_q2);
            r.witness("presentation Q2(i)", f.presentation_q2_i.clone(), &f.over_q2_i);
        }
        Preset::LocalRealizability => {
            let rows = r.timed("search", || suite::local_realizability(budget))?;
            for row in rows {
                r.verdict(&format!("{} over {}", row.group, row.field), truth(row.holds), &row);
            }
        }
        Preset::LiedahlFixtures => {
            let rows = r.timed("scan", suite::liedahl_fixtures)?;
            for row in rows {
                let text = match row.verdict.witness {
                    Some(w) => format!("TRUE, t = {}", w.t),
                    None => format!("FALSE, {} presentations", row.verdict.presentations_total),
                };
                r.verdict(&format!("{} over {}", row.group, row.field), text, &row.verdict);
            }
        }
        Preset::MetacyclicIdentity => {
            let s = r.timed("sweep", || suite::metacyclic_identity(budget))?;
            relation_sweep_lines(&s, r);
        }
        Preset::BrauerExamples => {
            for p in [3u64, 5] {
                let f = suite::brauer_examples(p)?;
                let split: Vec<String> = f.split_invariants.iter().map(|x| x.to_string()).collect();
                r.verdict(&format!("p={p} split"), split.join(" "), &f.split_invariants);
                r.verdict(&format!("p={p} inert"), f.inert_invariant.to_string(), f.inert_invariant);
                r.verdict(&format!("p={p} uniform in image"), truth(f.uniform.holds), f.uniform.holds);
                r.verdict(&format!("p={p} same place in image"), truth(f.same_place.holds), f.same_place.holds);
                if let Some(w) = &f.uniform.witness {
                    r.witness(&format!("p={p} uniform preimage"), w.to_string(), w);
                }
                if let Some(o) = &f.same_place.obstruction {
                    r.witness(&format!("p={p} same place"), o.to_string(), o);
                }
            }
        }
        Preset::Diagram => diagram_lines(&suite::diagram(), r),
    }
    Ok(())
}
