//! Command-line front end. Exit status: 0 when every check passes, 1 when
//! one fails, 2 on usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use maxilat::harness::{self, Claim, Instance, Sample, SuiteOptions, Verdict};
use maxilat::io::{self, extension_arg, load_map, poset_arg, selection_arg};
use maxilat::maxitive::{extend_lower_star, extend_star, Rational, RationalConeMap};
use maxilat::mspace::build_space;
use maxilat::residuation::{adjoint_of, heyting_arrow, residuation_verdict};
use maxilat::{Error, SelectionKind};

#[derive(Parser)]
#[command(
    name = "maxilat",
    version,
    about = "Finite posets, filter selections and maxitive maps"
)]
struct Cli {
    /// Also write the result as JSON to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Posets.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Maps between posets.
    #[command(subcommand)]
    Map(MapCmd),
    /// Lattice operations.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// The space of maxitive maps.
    #[command(subcommand)]
    Mspace(MspaceCmd),
    /// Exhaustive verification suites.
    #[command(subcommand)]
    Harness(HarnessCmd),
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Classify a poset and report continuity under a selection.
    Check {
        /// Poset file or built-in name (chain:N, antichain:N, diamond, m3, n5, seven).
        poset: String,
        /// principal, filtered, upper, or a selection file.
        #[arg(long, default_value = "filtered")]
        selection: String,
    },
}

#[derive(Subcommand)]
enum MapCmd {
    /// Check maxitivity.
    Check {
        map: PathBuf,
        /// Also check maxitivity over pairs only.
        #[arg(long)]
        pairwise: bool,
        /// Read target labels as nonnegative rationals and check the
        /// alternating condition up to this depth.
        #[arg(long, value_name = "DEPTH", value_parser = clap::value_parser!(u8).range(1..=8))]
        alternating: Option<u8>,
    },
    /// Extend a maxitive map into the completion of its source.
    Extend {
        map: PathBuf,
        #[arg(long, value_enum)]
        mode: ExtendMode,
        #[arg(long, default_value = "filtered")]
        selection: String,
        /// Extension file, or `dm` for the Dedekind–MacNeille completion.
        #[arg(long)]
        ext: Option<String>,
    },
    /// Decide residuation and compare with complete maxitivity.
    Residuated {
        map: PathBuf,
        #[arg(long)]
        ext: Option<String>,
    },
    /// Compute the upper adjoint of a residuated map.
    Adjoint {
        map: PathBuf,
        #[arg(long)]
        ext: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtendMode {
    Star,
    LowerStar,
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// r ← s, the least t with s <= r ∨ t.
    Arrow {
        lattice: String,
        #[arg(long)]
        r: String,
        #[arg(long)]
        s: String,
    },
}

#[derive(Args)]
struct SpaceArgs {
    /// Source poset E.
    #[arg(long)]
    source: String,
    /// Target poset L.
    #[arg(long)]
    target: String,
}

#[derive(Subcommand)]
enum MspaceCmd {
    /// List every maxitive map E → L.
    Build {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// u ← v in the space of maps sharing their source and target.
    Arrow {
        #[arg(long)]
        u: PathBuf,
        #[arg(long)]
        v: PathBuf,
    },
    /// Check one lemma on the space E → L.
    Verify {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum)]
        lemma: Lemma,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Lemma {
    Inf,
    Generator,
    Representation,
    Corollary,
    Frame,
}

#[derive(Subcommand)]
enum HarnessCmd {
    /// Run the suite for one claim, or `all`.
    Run {
        claim: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        max_target: Option<usize>,
        /// Comma-separated selection kinds.
        #[arg(long, value_delimiter = ',')]
        selections: Option<Vec<String>>,
        /// Check this many instances chosen at random.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List claim ids.
    List,
}

/// What a command produced: a report for stdout, JSON for `--out`, and
/// whether everything checked held.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            print!("{}", report.text);
            if let Some(path) = cli.out {
                if let Err(e) = io::write_json(&path, &report.json) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Report, Error> {
    match command {
        Command::Poset(PosetCmd::Check { poset, selection }) => poset_check(&poset, &selection),
        Command::Map(cmd) => map_command(cmd),
        Command::Lattice(LatticeCmd::Arrow { lattice, r, s }) => lattice_arrow(&lattice, &r, &s),
        Command::Mspace(cmd) => mspace_command(cmd),
        Command::Harness(HarnessCmd::List) => Ok(Report {
            text: Claim::ALL.iter().map(|c| format!("{}\n", c.id())).collect(),
            json: json!(Claim::ALL),
            ok: true,
        }),
        Command::Harness(HarnessCmd::Run {
            claim,
            max_size,
            max_target,
            selections,
            sample,
            seed,
        }) => {
            let claims = if claim == "all" {
                Claim::ALL.to_vec()
            } else {
                vec![Claim::parse(&claim)?]
            };
            let kinds = match selections {
                None => SelectionKind::BUILT_IN.to_vec(),
                Some(names) => names
                    .iter()
                    .map(|n| SelectionKind::parse(n).ok_or_else(|| Error::UnknownLabel(n.clone())))
                    .collect::<Result<_, _>>()?,
            };
            harness_run(
                &claims,
                max_size,
                max_target,
                kinds,
                sample.map(|count| Sample { count, seed }),
            )
        }
    }
}

fn poset_check(poset: &str, selection: &str) -> Result<Report, Error> {
    let p = poset_arg(poset)?;
    let spec = selection_arg(selection, &p)?;
    let sel = spec.build(&p)?;
    let profile = p.classify();
    let union_complete = sel.is_union_complete()?;
    let report = sel.continuity_report();
    let mut text = format!("{} elements, {} covers\n", p.len(), p.covers().len());
    for (name, flag) in [
        ("join-semilattice", profile.is_join_semilattice),
        ("meet-semilattice", profile.is_meet_semilattice),
        ("lattice", profile.is_lattice),
        ("complete lattice", profile.is_complete_lattice),
        ("distributive", profile.is_distributive),
        ("meet-continuous", profile.is_meet_continuous),
    ] {
        text += &format!("  {name:<18} {}\n", yes_no(flag));
    }
    text += &format!("selection {} ({} F-sets)\n", sel.kind().name(), sel.fsets().len());
    for (name, flag) in [
        ("union-complete", union_complete),
        ("continuous", report.is_continuous),
        ("domain", report.is_domain),
        ("interpolation", report.has_interpolation),
    ] {
        text += &format!("  {name:<18} {}\n", yes_no(flag));
    }
    let rel = sel.way_above();
    for x in 0..p.len() {
        text += &format!("  ⇑{} = {}\n", p.label(x), p.format_subset(rel.way_above_set(x)));
    }
    Ok(Report {
        text,
        json: json!({
            "profile": profile,
            "selection": sel.kind(),
            "union_complete": union_complete,
            "continuity": report,
        }),
        ok: true,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn map_command(cmd: MapCmd) -> Result<Report, Error> {
    match cmd {
        MapCmd::Check {
            map,
            pairwise,
            alternating,
        } => {
            let v = load_map(&map)?;
            let witness = v.maxitivity_witness()?;
            let mut ok = witness.is_none();
            let mut text = match witness {
                None => "maxitive: yes\n".to_string(),
                Some(w) => format!(
                    "maxitive: no, the supremum of {} is not preserved\n",
                    v.source().format_subset(w)
                ),
            };
            let mut out =
                json!({ "maxitive": witness.is_none(), "witness": witness.map(|w| v.source().format_subset(w)) });
            if pairwise {
                let p = v.is_pairwise_maxitive();
                text += &format!("pairwise maxitive: {}\n", yes_no(p));
                out["pairwise"] = json!(p);
                ok &= p;
            }
            if let Some(depth) = alternating {
                let depth = usize::from(depth);
                let values = v
                    .values()
                    .iter()
                    .map(|&t| {
                        let label = v.target().label(t);
                        label.parse::<Rational>().map_err(|_| Error::BadRational(label))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let cone = RationalConeMap::new(v.source_arc().clone(), values)?;
                let w = cone.alternating_witness(depth);
                match &w {
                    None => text += &format!("alternating to depth {depth}: yes\n"),
                    Some(w) => {
                        let gs: Vec<String> = w.gs.iter().map(|&g| v.source().label(g)).collect();
                        text += &format!(
                            "alternating to depth {depth}: no, Δ_{{{}}} v({}) = {}\n",
                            gs.join(","),
                            v.source().label(w.g),
                            w.difference
                        );
                    }
                }
                out["alternating"] = json!({ "depth": depth, "witness": w });
                ok &= w.is_none();
            }
            Ok(Report { text, json: out, ok })
        }
        MapCmd::Extend {
            map,
            mode,
            selection,
            ext,
        } => {
            let v = load_map(&map)?;
            let ext = extension_arg(ext.as_deref(), v.source())?;
            let extended = match mode {
                ExtendMode::Star => {
                    let spec_e = selection_arg(&selection, v.source())?;
                    let spec_l = selection_arg(&selection, v.target())?;
                    let sel_e = spec_e.build(ext.base())?;
                    let sel_l = spec_l.build(v.target())?;
                    extend_star(&v, &ext, &sel_e, &sel_l)?
                }
                ExtendMode::LowerStar => extend_lower_star(&v, &ext)?,
            };
            let c = ext.complete();
            let mut text = format!("domain {}\n", c.format_subset(extended.domain));
            let mut table = serde_json::Map::new();
            for (i, &a) in extended.index.iter().enumerate() {
                let t = v.target().label(extended.map.value(i));
                text += &format!("  {} ↦ {}\n", c.label(a), t);
                table.insert(c.label(a), json!(t));
            }
            Ok(Report {
                text,
                json: json!({ "values": table }),
                ok: true,
            })
        }
        MapCmd::Residuated { map, ext } => {
            let v = load_map(&map)?;
            let ext = extension_arg(ext.as_deref(), v.source())?;
            let verdict = residuation_verdict(&v, &ext);
            let mut text = format!("residuated: {}\n", yes_no(verdict.residuated));
            if let Some(t) = verdict.level_witness {
                text += &format!("  level {} is not of the form ↓a ∩ E\n", v.target().label(t));
            }
            text += &format!("completely maxitive: {}\n", yes_no(verdict.completely_maxitive));
            text += &format!("preserves all suprema, empty included: {}\n", yes_no(verdict.sup_map));
            Ok(Report {
                text,
                ok: verdict.residuated,
                json: serde_json::to_value(&verdict).expect("serializable"),
            })
        }
        MapCmd::Adjoint { map, ext } => {
            let v = load_map(&map)?;
            let ext = extension_arg(ext.as_deref(), v.source())?;
            let w = adjoint_of(&v, &ext)?;
            let c = ext.complete();
            let mut text = String::new();
            let mut table = serde_json::Map::new();
            for t in 0..v.target().len() {
                text += &format!("w({}) = {}\n", v.target().label(t), c.label(w.value(t)));
                table.insert(v.target().label(t), json!(c.label(w.value(t))));
            }
            Ok(Report {
                text,
                json: json!({ "adjoint": table }),
                ok: true,
            })
        }
    }
}

fn element(p: &maxilat::FinitePoset, name: &str) -> Result<usize, Error> {
    p.index_of(name).ok_or_else(|| Error::UnknownLabel(name.to_string()))
}

fn lattice_arrow(lattice: &str, r: &str, s: &str) -> Result<Report, Error> {
    let l = poset_arg(lattice)?;
    let (ri, si) = (element(&l, r)?, element(&l, s)?);
    let t = heyting_arrow(&l, ri, si)?;
    Ok(Report {
        text: format!("{r} ← {s} = {}\n", l.label(t)),
        json: json!({ "r": r, "s": s, "arrow": l.label(t) }),
        ok: true,
    })
}

fn mspace_command(cmd: MspaceCmd) -> Result<Report, Error> {
    match cmd {
        MspaceCmd::Build { space } => {
            let e = Arc::new(poset_arg(&space.source)?);
            let l = Arc::new(poset_arg(&space.target)?);
            let m = build_space(e.clone(), l.clone())?;
            let names: Vec<String> = (0..e.len()).map(|g| e.label(g)).collect();
            let mut text = format!("{} maxitive maps on ({})\n", m.len(), names.join(","));
            let mut rows = Vec::with_capacity(m.len());
            for v in m.maps() {
                let labels: Vec<String> = v.iter().map(|&t| l.label(t)).collect();
                text += &format!("  ({})\n", labels.join(","));
                rows.push(labels);
            }
            Ok(Report {
                text,
                json: json!({ "elements": names, "maps": rows }),
                ok: true,
            })
        }
        MspaceCmd::Arrow { u, v } => {
            let (u, v) = (load_map(&u)?, load_map(&v)?);
            if !u.source().same_order(v.source()) || !u.target().same_order(v.target()) {
                return Err(Error::PosetMismatch);
            }
            let m = build_space(u.source_arc().clone(), u.target_arc().clone())?;
            let (iu, iv) = (
                m.index_of(u.values()).ok_or(Error::NotInSpace)?,
                m.index_of(v.values()).ok_or(Error::NotInSpace)?,
            );
            let w = m.map(m.m_arrow(iu, iv)?);
            Ok(Report {
                text: io::map_to_json(&w),
                json: serde_json::to_value(io::map_to_file(&w)).expect("serializable"),
                ok: true,
            })
        }
        MspaceCmd::Verify { space, lemma } => {
            let e = poset_arg(&space.source)?;
            let l = poset_arg(&space.target)?;
            let claim = match lemma {
                Lemma::Inf => Claim::PointwiseInf,
                Lemma::Generator => Claim::GeneratorLemma,
                Lemma::Representation => Claim::Representation,
                Lemma::Corollary => Claim::Corollary,
                Lemma::Frame => Claim::FrameAdjunction,
            };
            let instance = Instance::new(&e)
                .with_target(&l)
                .with_selection(SelectionKind::Filtered);
            let outcome = harness::check(claim, &instance);
            let verdict = serde_json::to_value(outcome.verdict).expect("serializable");
            let mut text = format!("{}: {}\n", claim.id(), verdict.as_str().unwrap_or_default());
            for extra in [&outcome.witness, &outcome.observation].into_iter().flatten() {
                text += &format!("  {extra}\n");
            }
            Ok(Report {
                text,
                ok: outcome.verdict != Verdict::Fail,
                json: serde_json::to_value(&outcome).expect("serializable"),
            })
        }
    }
}

fn harness_run(
    claims: &[Claim],
    max_size: Option<usize>,
    max_target: Option<usize>,
    selections: Vec<SelectionKind>,
    sample: Option<Sample>,
) -> Result<Report, Error> {
    let mut text = String::new();
    let mut reports = Vec::with_capacity(claims.len());
    let mut ok = true;
    for &claim in claims {
        let mut options = SuiteOptions::defaults(claim);
        if let Some(n) = max_size {
            options.bounds.max_size = n;
        }
        if let Some(n) = max_target {
            options.bounds.max_target = n;
        }
        options.selections = selections.clone();
        options.sample = sample;
        let report = harness::run_suite(claim, &options)?;
        text += &report.summary_line();
        text.push('\n');
        if let Some(fail) = report.failures().next() {
            text += &format!(
                "  first failure: E = {:?}, witness {}\n",
                fail.instance.e.elements,
                fail.outcome.witness.as_ref().map(Value::to_string).unwrap_or_default()
            );
        }
        ok &= report.all_passed();
        reports.push(report);
    }
    Ok(Report {
        text,
        json: serde_json::to_value(&reports).expect("serializable"),
        ok,
    })
}
