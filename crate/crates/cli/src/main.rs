//! `tori`: command-line access to the norm-one torus invariants.
//!
//! Each invocation runs one computation and prints either a short text
//! summary or a JSON document. JSON objects have sorted keys, so output is
//! byte-identical across runs.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tori_core::catalog::{parse_group_arg, parse_subgroup_arg, GroupSpecFile};
use tori_core::cohom::{h1, hn_trivial_z, res_kernel_hn_z};
use tori_core::flabby::flabby_class_h1;
use tori_core::glat::norm1_lattice;
use tori_core::hnp::{
    hnp_survey, report, table1_entries, table1_lookup, DrEntry, GroupSummary, Obstruction,
    ReportInput, Table1Status,
};
use tori_core::intlat::AbInvariants;
use tori_core::permgrp::{coset_action, PermGroup};
use tori_core::{Budget, Error};

#[derive(Parser)]
#[command(name = "tori", version, about = "Invariants of norm-one tori and the Hasse norm principle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// H1(G, J_{G/H}), the Tamagawa numerator.
    H1(Common),
    /// H1(G, [J_{G/H}]^fl) from a flabby resolution.
    Flabby(Common),
    /// Ker psi1, its unramified part Dnr, and Dr for given decomposition groups.
    Obstruction(Common),
    /// Dr for every subgroup of G taken as a decomposition group.
    Survey(Common),
    /// H3(G, Z), or its kernel of restriction to the decomposition groups.
    H3z(Common),
    /// Everything above in one document.
    Report(Common),
    /// Which nTm groups of small degree can fail the Hasse norm principle.
    Table1(Common),
}

#[derive(Args)]
struct Common {
    /// Catalog label (e.g. 8T31, A5, PSL(2,7)) or "<degree>:<gen>;<gen>;...".
    #[arg(long, short)]
    group: Option<String>,
    /// Generators of H inside G, separated by ';' (default: stabilizer of 1).
    #[arg(long, short)]
    subgroup: Option<String>,
    /// Generators of a decomposition group, separated by ';'. Repeatable.
    #[arg(long = "decomposition-group", short = 'd')]
    decomposition_groups: Vec<String>,
    /// JSON group file, optionally carrying a cover used by the obstruction.
    #[arg(long)]
    cover_file: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Multiply every size limit by N.
    #[arg(long, value_name = "N", default_value_t = 1)]
    budget: u64,
}

/// The group to work with, plus the obstruction group (a cover if given).
struct Input {
    label: Option<String>,
    group: PermGroup,
    subgroup: Option<PermGroup>,
    ob_group: PermGroup,
    ob_subgroup: PermGroup,
    decomposition: Vec<PermGroup>,
    budget: Budget,
}

impl Common {
    fn resolve(&self) -> Result<Input, Error> {
        let budget = Budget::default().scaled(self.budget);
        let file = match &self.cover_file {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                Some(GroupSpecFile::from_json(&text)?.resolve(&budget)?)
            }
            None => None,
        };
        let (group, label) = match (&self.group, &file) {
            (Some(arg), _) => parse_group_arg(arg, &budget)?,
            (None, Some(f)) => (f.group.clone(), f.label.clone()),
            (None, None) => return Err(Error::Parse("--group or --cover-file is required".into())),
        };
        let subgroup = self
            .subgroup
            .as_deref()
            .map(|s| parse_subgroup_arg(&group, s))
            .transpose()?;
        let h = match &subgroup {
            Some(h) => h.clone(),
            None => group.stabilizer(1)?,
        };
        let cover = file.and_then(|f| f.cover);
        if let Some(c) = &cover {
            if c.epi.target() != &group {
                return Err(Error::Invalid("the cover file maps onto a different group".into()));
            }
        }
        let (ob_group, ob_subgroup) = match &cover {
            Some(c) => (c.group.clone(), c.preimage(&h)),
            None => (group.clone(), h),
        };
        let decomposition = self
            .decomposition_groups
            .iter()
            .map(|s| parse_subgroup_arg(&ob_group, s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Input {
            label,
            group,
            subgroup,
            ob_group,
            ob_subgroup,
            decomposition,
            budget,
        })
    }
}

impl Input {
    /// The group acting on `G/H` by right multiplication.
    fn acting_group(&self) -> Result<PermGroup, Error> {
        match &self.subgroup {
            None => Ok(self.group.clone()),
            Some(h) => Ok(coset_action(&self.group, h)?.image),
        }
    }

    fn summary(&self) -> Value {
        json!(GroupSummary::new(&self.group, self.label.as_deref()))
    }
}

fn invariants(a: &AbInvariants) -> Value {
    json!(a.as_slice())
}

fn table1_text(s: &Table1Status) -> String {
    match s {
        Table1Status::HoldsAlways => "holds for every realizing extension".into(),
        Table1Status::Obstructed(a) => format!("can fail, H1(G, [J]^fl) = {a}"),
        Table1Status::Unknown => "not covered".into(),
    }
}

fn dr_entries(ob: &Obstruction, groups: &[PermGroup]) -> Vec<DrEntry> {
    groups
        .iter()
        .map(|gv| DrEntry {
            decomposition_group: GroupSummary::new(gv, None),
            dr: ob.dr(gv),
        })
        .collect()
}

/// Output of one command: JSON document and text lines.
struct Output {
    json: Value,
    text: Vec<String>,
}

fn run(command: &Command) -> Result<(Output, bool), Error> {
    let (args, out) = match command {
        Command::H1(a) => {
            let inp = a.resolve()?;
            let g = inp.acting_group()?;
            let v = h1(&g, &norm1_lattice(&g)?)?.invariants;
            let out = Output {
                json: json!({ "group": inp.summary(), "h1_J": invariants(&v), "order": v.order() }),
                text: vec![format!("H1(G, J) = {v}")],
            };
            (a, out)
        }
        Command::Flabby(a) => {
            let inp = a.resolve()?;
            let g = inp.acting_group()?;
            let v = flabby_class_h1(&norm1_lattice(&g)?, None, &inp.budget)?;
            let out = Output {
                json: json!({ "group": inp.summary(), "flabby_class_h1": invariants(&v) }),
                text: vec![format!("H1(G, [J]^fl) = {v}")],
            };
            (a, out)
        }
        Command::Obstruction(a) => {
            let inp = a.resolve()?;
            let ob = Obstruction::new(&inp.ob_group, Some(&inp.ob_subgroup))?;
            let ker = ob.n().ker;
            let dnr = ob.dnr();
            let dr = dr_entries(&ob, &inp.decomposition);
            let mut text = vec![
                format!("H^ab = {}", ob.ambient()),
                format!("Ker psi1 = {}", ker.invariants),
                format!("Dnr = {}", dnr.invariants),
            ];
            for e in &dr {
                text.push(format!(
                    "Dr(<{}>) = {}",
                    e.decomposition_group.generators.join(", "),
                    e.dr.invariants
                ));
            }
            let out = Output {
                json: json!({
                    "group": inp.summary(),
                    "obstruction_group": GroupSummary::new(&inp.ob_group, None),
                    "subgroup": GroupSummary::new(&inp.ob_subgroup, None),
                    "ker": ker,
                    "dnr": dnr,
                    "dr": dr,
                }),
                text,
            };
            (a, out)
        }
        Command::Survey(a) => {
            let inp = a.resolve()?;
            let s = hnp_survey(&inp.ob_group, Some(&inp.ob_subgroup), &inp.budget)?;
            let trues = s.collect_structures(&s.true_set);
            let falses = s.collect_structures(&s.false_set);
            let minimal = s.collect_structures(&s.minimal_true);
            let fmt = |m: &std::collections::BTreeMap<String, usize>| {
                m.iter().map(|(k, v)| format!("{v} x {k}")).collect::<Vec<_>>().join(", ")
            };
            let out = Output {
                json: json!({
                    "group": inp.summary(),
                    "ker": s.ker,
                    "subgroups": s.per_subgroup.len(),
                    "true": { "count": s.true_set.len(), "structures": trues },
                    "false": { "count": s.false_set.len(), "structures": falses },
                    "minimal_true": minimal,
                }),
                text: vec![
                    format!("Ker psi1 = {}", s.ker.invariants),
                    format!("subgroups: {}", s.per_subgroup.len()),
                    format!("Dr = Ker psi1 for {}: {}", s.true_set.len(), fmt(&trues)),
                    format!("Dr < Ker psi1 for {}: {}", s.false_set.len(), fmt(&falses)),
                    format!("minimal: {}", fmt(&minimal)),
                ],
            };
            (a, out)
        }
        Command::H3z(a) => {
            let inp = a.resolve()?;
            let g = &inp.ob_group;
            let full = hn_trivial_z(g, 3, &inp.budget)?.invariants;
            let mut json = json!({ "group": inp.summary(), "h3": invariants(&full) });
            let mut text = vec![format!("H3(G, Z) = {full}")];
            if !inp.decomposition.is_empty() {
                let k = res_kernel_hn_z(g, &inp.decomposition, 3, &inp.budget)?.invariants;
                json["restriction_kernel"] = invariants(&k);
                text.push(format!("Ker(H3(G, Z) -> prod H3(Gv, Z)) = {k}"));
            }
            (a, Output { json, text })
        }
        Command::Report(a) => {
            let inp = a.resolve()?;
            let g = inp.acting_group()?;
            let mut ri = ReportInput::new(&g);
            ri.label = inp.label.as_deref().filter(|_| inp.subgroup.is_none());
            ri.obstruction_group = Some(&inp.ob_group);
            ri.obstruction_subgroup = Some(&inp.ob_subgroup);
            ri.decomposition_groups = &inp.decomposition;
            let r = report(&ri, &inp.budget)?;
            let mut text = vec![
                format!("G: degree {}, order {}", r.group.degree, r.group.order),
                format!("H1(G, J) = {}", r.h1_j),
                format!("H1(G, [J]^fl) = {}", r.flabby_class_h1),
                format!("Tamagawa numerator = {}", r.tamagawa_numerator),
                format!("Ker psi1 = {}", r.obstruction.ker.invariants),
                format!("Dnr = {}", r.obstruction.dnr.invariants),
            ];
            for e in &r.obstruction.dr {
                text.push(format!(
                    "Dr(<{}>) = {}",
                    e.decomposition_group.generators.join(", "),
                    e.dr.invariants
                ));
            }
            if let Some(t) = &r.table1 {
                text.push(format!("norm principle: {}", table1_text(t)));
            }
            (a, Output { json: json!(r), text })
        }
        Command::Table1(a) => {
            let out = match &a.group {
                Some(label) => {
                    let s = table1_lookup(label)?;
                    Output {
                        json: json!({ "label": label.trim(), "table1": s }),
                        text: vec![format!("{}: {}", label.trim(), table1_text(&s))],
                    }
                }
                None => {
                    let rows = table1_entries();
                    Output {
                        json: Value::Array(
                            rows.iter()
                                .map(|e| json!({
                                    "label": e.label,
                                    "structure": e.structure,
                                    "flabby_class_h1": invariants(&e.nonzero_invariants),
                                }))
                                .collect(),
                        ),
                        text: rows
                            .iter()
                            .map(|e| format!("{:<6} {:<20} {}", e.label, e.structure, e.nonzero_invariants))
                            .collect(),
                    }
                }
            };
            (a, out)
        }
    };
    Ok((out, args.json))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Invalid(_) => 2,
        Error::Budget { .. } => 3,
        Error::UnknownLabel { .. } => 4,
        Error::Dimension(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((out, true)) => {
            println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            ExitCode::SUCCESS
        }
        Ok((out, false)) => {
            for line in out.text {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Budget { .. } = e {
                eprintln!("hint: rerun with a larger --budget");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
