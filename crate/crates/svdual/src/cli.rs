//! Command-line surface. `run` is what the binary calls; it returns the exit code and the report.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arthur::ArthurParameter;
use crate::error::Error;
use crate::factorization::{
    commutant_of_space, factorization_report, generate_ds_parameters, golden_commutant, sv_dual_variants, Case3Variant,
    EtaRule, Options,
};
use crate::matrixlab::check_all;
use crate::spectrum::{
    case13_is_ds, case13_root_oracle, case13_root_oracle_members, case2_closed_form, case2_is_ds,
    case2_so_quotient_accepting, disjoint_owner, packet_verdicts, slot_layout, Case13Chi, Case2Variant, EpsCharacter,
    InfCharTuple, Normalization, PairIndexing, SpectrumOptions,
};
use crate::symspaces::{all_instances, dual_data, rank, rank_from_levi, registry, SymmetricSpace};

#[derive(Debug, Parser)]
#[command(name = "svdual", version, about = "Discrete-series parameters of classical real symmetric spaces")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case3Arg {
    Esp,
    SoEven,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EtaArg {
    Levi,
    Verbatim,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IndexingArg {
    Adjacent,
    Blocked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case2Arg {
    SoOnly,
    OFull,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChiArg {
    Trivial,
    SgnDet,
}

#[derive(Debug, Clone, Copy, clap::Args)]
pub struct FactorArgs {
    #[arg(long, value_enum, default_value_t = Case3Arg::Esp)]
    pub case3_variant: Case3Arg,
    #[arg(long, value_enum, default_value_t = EtaArg::Levi)]
    pub eta_rule: EtaArg,
}

impl FactorArgs {
    fn options(&self) -> Options {
        Options {
            case3_variant: match self.case3_variant {
                Case3Arg::Esp => Case3Variant::ESpSemidirect,
                Case3Arg::SoEven => Case3Variant::SOEvenSemidirect,
            },
            eta_rule: match self.eta_rule {
                EtaArg::Levi => EtaRule::LeviFactor,
                EtaArg::Verbatim => EtaRule::Verbatim,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, clap::Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum, default_value_t = IndexingArg::Adjacent)]
    pub indexing: IndexingArg,
    /// Exchange the reference baselines (−1)^{i−1} and (−1)^i.
    #[arg(long)]
    pub swapped: bool,
}

impl SpectrumArgs {
    fn options(&self) -> SpectrumOptions {
        SpectrumOptions {
            indexing: match self.indexing {
                IndexingArg::Adjacent => PairIndexing::Adjacent,
                IndexingArg::Blocked => PairIndexing::Blocked,
            },
            normalization: if self.swapped { Normalization::Swapped } else { Normalization::Reference },
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The 13 registry rows.
    ListSpaces,
    ValidateSpace {
        #[arg(long)]
        space: String,
    },
    Rank {
        #[arg(long)]
        space: String,
    },
    /// ǧ_X, ľ_X, commutant and the dual group ^LG_X.
    DualData {
        #[arg(long)]
        space: String,
        #[command(flatten)]
        opts: FactorArgs,
    },
    GenParams {
        #[arg(long)]
        space: String,
        #[arg(long, default_value_t = 5)]
        height: u32,
        #[command(flatten)]
        opts: FactorArgs,
    },
    Factorize {
        #[arg(long)]
        space: String,
        /// Inline summands or a file containing them.
        #[arg(long)]
        psi: String,
        #[command(flatten)]
        opts: FactorArgs,
    },
    /// Characters of A(ψ) accepted by the space's criterion.
    Packet {
        #[arg(long)]
        space: String,
        #[arg(long)]
        psi: String,
        /// Print every character with its verdict.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        opts: SpectrumArgs,
    },
    /// The registry family owning (ψ, ε) among spaces with the same group.
    Owner {
        /// Any space of the ambient group; fixes the L-group of ψ.
        #[arg(long)]
        space: String,
        #[arg(long)]
        psi: String,
        #[arg(long)]
        eps: String,
        #[command(flatten)]
        opts: SpectrumArgs,
    },
    Case2 {
        #[arg(long)]
        lambda: String,
        /// Test one (p, ε) instead of listing the accepted ones.
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, value_enum, default_value_t = Case2Arg::SoOnly)]
        variant: Case2Arg,
    },
    Case13 {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = ChiArg::Trivial)]
        chi: ChiArg,
    },
    CheckMatrices {
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
}

/// Exit status and rendered report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub out: String,
}

enum Failure {
    Validation(String),
    Breach(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MultipleOwners(_) => Failure::Breach(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

struct Report {
    text: String,
    json: Value,
    /// Nonzero only for invariant breaches detected while producing a report.
    code: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: 0 }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable report")
}

fn space(text: &str) -> Result<SymmetricSpace, Failure> {
    let x: SymmetricSpace = text.parse()?;
    Ok(x.normalized()?)
}

fn psi_text(arg: &str) -> String {
    match std::fs::read_to_string(arg) {
        Ok(s) if !arg.contains('[') => s.trim().to_string(),
        _ => arg.to_string(),
    }
}

fn psi_for(x: &SymmetricSpace, arg: &str) -> Result<ArthurParameter, Failure> {
    Ok(ArthurParameter::parse(x.lgroup(), &psi_text(arg))?)
}

/// Parses argv (including the program name) and executes.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            Outcome { code, out: e.to_string() }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(&cli.command) {
        Ok(r) => {
            let out = match cli.format {
                Format::Text => r.text,
                Format::Json => serde_json::to_string_pretty(&r.json).expect("json") + "\n",
            };
            Outcome { code: r.code, out }
        }
        Err(Failure::Validation(m)) => Outcome { code: 2, out: format!("error: {m}\n") },
        Err(Failure::Breach(m)) => Outcome { code: 1, out: format!("invariant breach: {m}\n") },
    }
}

fn execute(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::ListSpaces => {
            let rows = registry();
            let mut text = String::new();
            for r in &rows {
                let corrected = r.g_check_corrected.map(|c| format!(" (rank-consistent: {c})")).unwrap_or_default();
                text += &format!(
                    "{:>2}  {:<32} {:<30} {:<14} {}{corrected}\n",
                    r.case, r.space, r.constraint, r.g_check, r.l_check
                );
            }
            Ok(Report::ok(text, to_json(&rows)))
        }
        Command::ValidateSpace { space: s } => {
            let x = space(s)?;
            let text = format!("{}  {x}  valid, group {}\n", x.spec(), x.group());
            Ok(Report::ok(text, json!({"space": x.spec(), "display": x.to_string(), "group": x.group().to_string(), "valid": true})))
        }
        Command::Rank { space: s } => {
            let x = space(s)?;
            let r = rank(&x)?;
            let levi = rank_from_levi(&x)?;
            if r != levi {
                return Err(Failure::Breach(format!("rank {r} disagrees with the real Levi count {levi}")));
            }
            Ok(Report::ok(format!("{r}\n"), json!({"space": x.spec(), "rank": r})))
        }
        Command::DualData { space: s, opts } => {
            let x = space(s)?;
            let d = dual_data(&x);
            let rule = commutant_of_space(&x)?;
            let golden = golden_commutant(&x);
            let duals: Vec<String> = sv_dual_variants(&x).iter().map(ToString::to_string).collect();
            let chosen = crate::factorization::sv_dual(&x, opts.options().case3_variant).to_string();
            let mut text = format!("space      {x}\ng_check    {}\n", d.g_check);
            if let Some(p) = &d.g_check_printed {
                text += &format!("printed    {p}\n");
            }
            text += &format!(
                "l_check    {}\nL-group    {}\ncommutant  {rule}\ngolden     {golden}\n^LG_X      {chosen}\n",
                d.l_check,
                x.lgroup()
            );
            if duals.len() > 1 {
                text += &format!("variants   {}\n", duals.join(" | "));
            }
            let code = if rule == golden { 0 } else { 1 };
            Ok(Report {
                text,
                json: json!({"space": x.spec(), "dual": d, "commutant": rule, "golden": golden, "sv_dual": chosen, "variants": duals}),
                code,
            })
        }
        Command::GenParams { space: s, height, opts } => {
            let x = space(s)?;
            let ps = generate_ds_parameters(&x, *height, &opts.options());
            let list: Vec<String> = ps.iter().map(ToString::to_string).collect();
            let text = list.iter().map(|p| format!("{p}\n")).collect();
            Ok(Report::ok(text, json!({"space": x.spec(), "height": height, "parameters": list})))
        }
        Command::Factorize { space: s, psi, opts } => {
            let x = space(s)?;
            let psi = psi_for(&x, psi)?;
            let rep = factorization_report(&psi, &x, &opts.options());
            let text = if rep.verdict {
                format!("phi_d = {}\n^LG_X = {}\n", rep.phi_d.join(" + "), rep.variant)
            } else {
                format!("no factorization: {}\n", rep.mismatch_reason.as_deref().unwrap_or(""))
            };
            let code = if rep.verdict { 0 } else { 2 };
            Ok(Report { text, json: to_json(&rep), code })
        }
        Command::Packet { space: s, psi, all, opts } => {
            let x = space(s)?;
            let psi = psi_for(&x, psi)?;
            let vs = packet_verdicts(&x, &psi, &opts.options())?;
            let accepted = crate::spectrum::enumerate_eps(&x, &psi, &opts.options())?;
            let mut text = String::new();
            if *all {
                for v in &vs {
                    text += &format!("{} {}\n", v.eps, if v.verdict { "accept" } else { "reject" });
                }
            } else {
                for e in &accepted {
                    text += &format!("{e}\n");
                }
            }
            let json = if *all { to_json(&vs) } else { json!({"space": x.spec(), "psi": psi.to_string(), "accepted": accepted}) };
            Ok(Report::ok(text, json))
        }
        Command::Owner { space: s, psi, eps, opts } => {
            let x = space(s)?;
            let psi = psi_for(&x, psi)?;
            let eps: EpsCharacter = eps.parse()?;
            let bound = x.n() * 2 + 2;
            let candidates: Vec<SymmetricSpace> = all_instances(bound)
                .into_iter()
                .filter(|y| y.group() == x.group() && slot_layout(y, &psi).is_ok())
                .filter(|y| crate::spectrum::criterion(y).is_ok())
                .collect();
            let owner = disjoint_owner(&psi, &eps, &candidates, &opts.options())?;
            let names: Vec<String> = candidates.iter().map(|c| c.spec()).collect();
            let text = match &owner {
                Some(o) => format!("{} ({o})\n", o.spec()),
                None => "none\n".to_string(),
            };
            Ok(Report::ok(text, json!({"psi": psi.to_string(), "eps": eps, "candidates": names, "owner": owner.map(|o| o.spec())})))
        }
        Command::Case2 { lambda, eps, variant } => {
            let l: InfCharTuple = lambda.parse()?;
            let v = match variant {
                Case2Arg::SoOnly => Case2Variant::SOOnly,
                Case2Arg::OFull => Case2Variant::OFull,
            };
            if let Some(e) = eps {
                let e: EpsCharacter = e.parse()?;
                let ok = case2_is_ds(&l, &e, v)?;
                let k = crate::spectrum::case2_min_ktype(&l, &e)?;
                let text = format!("{} p={} mu~={:?}\n", if ok { "discrete" } else { "not discrete" }, k.p, k.mu_tilde.iter().map(ToString::to_string).collect::<Vec<_>>());
                return Ok(Report::ok(text, json!({"lambda": l, "eps": e, "variant": format!("{v:?}"), "discrete": ok, "min_ktype": k})));
            }
            let acc = case2_so_quotient_accepting(&l)?;
            let mut text: String = acc.iter().map(|(p, e)| format!("p={p} eps={e}\n")).collect();
            let mut closed = Value::Null;
            if l.n() % 2 == 1 {
                let (p0, e0) = case2_closed_form(&l)?;
                text += &format!("closed form: p={p0} eps={e0}\n");
                closed = json!({"p": p0, "eps": e0});
                if acc != vec![(p0, e0)] {
                    return Ok(Report { text, json: json!({"accepting": acc, "closed_form": closed}), code: 1 });
                }
            }
            Ok(Report::ok(text, json!({"lambda": l, "accepting": acc, "closed_form": closed})))
        }
        Command::Case13 { lambda, chi } => {
            let l: InfCharTuple = lambda.parse()?;
            let c = match chi {
                ChiArg::Trivial => Case13Chi::Trivial,
                ChiArg::SgnDet => Case13Chi::SgnDet,
            };
            let closed = case13_is_ds(&l, c)?;
            let oracle = case13_root_oracle(&l, c)?;
            let members = case13_root_oracle_members(&l, c)?;
            let text = format!("parity rule: {closed}\nroot oracle: {oracle}\nmembers: {members:?}\n");
            let code = if closed == oracle { 0 } else { 1 };
            Ok(Report { text, json: json!({"lambda": l, "chi": format!("{c:?}"), "is_ds": closed, "oracle": oracle, "members": members}), code })
        }
        Command::CheckMatrices { max_size } => {
            if *max_size == 0 || *max_size > 16 {
                return Err(Failure::Validation(format!("max-size must be in 1..=16, got {max_size}")));
            }
            let rep = check_all(*max_size);
            let fails = rep.failures().len();
            let text = format!("{rep}{} checks, {fails} failures\n", rep.results.len());
            Ok(Report { text, json: to_json(&rep), code: if fails == 0 { 0 } else { 1 } })
        }
    }
}
