use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use forest_patterns::bijection::{apply_by_name, BijectionName};
use forest_patterns::generate::{
    gen_all_compositions, gen_list_partitions, gen_ordered_cycle_decomps, gen_ordered_set_partitions,
    gen_partitioned_cycle_decomps, gen_set_partitions,
};
use forest_patterns::oracle::{
    brute_count, figure, refined_counts, theorem, verify, Budget, CountOptions, Statistic, THEOREMS,
};
use forest_patterns::{gen_forests, gen_permutations, FamilyTag, Forest, ListFlags, PatternMode, PatternSet};

mod render;

use render::{big_json, Format, Table};

#[derive(Parser, Debug)]
#[command(
    name = "forest-patterns",
    version,
    about = "Pattern avoidance in rooted labeled forests"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List forests (or another combinatorial family) of size n.
    Enumerate {
        #[arg(long, default_value = "unordered")]
        family: FamilyTag,
        #[arg(long)]
        n: usize,
        /// Comma-separated patterns; prefix a pattern with `!` for consecutive.
        #[arg(long)]
        avoid: Option<PatternSet>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = Object::Forests)]
        object: Object,
    },
    /// Count the forests of size n avoiding a pattern set.
    Count {
        #[arg(long, default_value = "unordered")]
        family: FamilyTag,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        avoid: PatternSet,
        /// How to read the patterns: `mixed` honours each `!`, the others
        /// force one mode.
        #[arg(long, value_enum, default_value_t = Mode::Mixed)]
        mode: Mode,
        /// Split the count by number of top-down maxima or of trees.
        #[arg(long, value_enum)]
        by: Option<By>,
        #[command(flatten)]
        work: Work,
    },
    /// Apply a bijection (or its inverse) to a text-form input.
    Map {
        #[arg(long)]
        bijection: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        input: String,
    },
    /// Check a counting formula against brute force for n = 1..=max-n.
    Verify {
        /// Theorem name, or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        work: Work,
    },
    /// Recompute one of the published count tables.
    Table {
        #[arg(long)]
        figure: u8,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        work: Work,
    },
}

#[derive(clap::Args, Debug)]
struct Work {
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    /// Count beyond the size budget.
    #[arg(long)]
    ignore_budget: bool,
}

impl Work {
    fn options(&self) -> Result<CountOptions, Failure> {
        let defaults = CountOptions::default();
        Ok(CountOptions {
            jobs: self.jobs.map_or(defaults.jobs, |j| j.max(1)),
            budget: Budget::from_env().map_err(Failure::usage)?,
            ignore_budget: self.ignore_budget,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Classical,
    Consecutive,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum By {
    Tdm,
    Trees,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Object {
    Forests,
    Permutations,
    SetPartitions,
    OrderedSetPartitions,
    ListPartitions,
    OrderedListPartitions,
    Compositions,
    CycleDecompositions,
    PartitionedCycleDecompositions,
}

/// Why a command did not succeed, with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(e: impl ToString) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let io_err = |e: io::Error| Failure {
        code: 1,
        message: e.to_string(),
    };
    match &cli.command {
        Command::Enumerate {
            family,
            n,
            avoid,
            limit,
            object,
        } => enumerate(cli.format, *family, *n, avoid.as_ref(), *limit, *object, out).map_err(io_err)?,
        Command::Count {
            family,
            n,
            avoid,
            mode,
            by,
            work,
        } => {
            let ps = apply_mode(avoid, *mode)?;
            count(cli.format, *family, *n, &ps, *by, &work.options()?, out)?.map_err(io_err)?
        }
        Command::Map {
            bijection,
            inverse,
            input,
        } => {
            let name: BijectionName = bijection.parse().map_err(Failure::usage)?;
            let output = apply_by_name(name, *inverse, input).map_err(Failure::usage)?;
            map_output(cli.format, name, *inverse, input, &output, out).map_err(io_err)?
        }
        Command::Verify {
            theorem: name,
            max_n,
            work,
        } => return verify_cmd(cli.format, name, *max_n, &work.options()?, out),
        Command::Table {
            figure: number,
            max_n,
            work,
        } => return table_cmd(cli.format, *number, *max_n, &work.options()?, out),
    }
    Ok(0)
}

fn apply_mode(ps: &PatternSet, mode: Mode) -> Result<PatternSet, Failure> {
    match mode {
        Mode::Mixed => Ok(ps.clone()),
        Mode::Consecutive => Ok(ps.with_mode(PatternMode::Consecutive)),
        Mode::Classical => {
            if ps.patterns().iter().any(|p| p.mode() == PatternMode::Consecutive) {
                Err(Failure::usage("--mode classical conflicts with a `!` pattern"))
            } else {
                Ok(ps.clone())
            }
        }
    }
}

fn enumerate(
    format: Format,
    family: FamilyTag,
    n: usize,
    avoid: Option<&PatternSet>,
    limit: Option<usize>,
    object: Object,
    out: &mut impl Write,
) -> io::Result<()> {
    let limit = limit.unwrap_or(usize::MAX);
    let keep = |seq: &[u32]| avoid.is_none_or(|ps| ps.avoided_by(seq));
    let items: Box<dyn Iterator<Item = (String, Value)>> = match object {
        Object::Forests => Box::new(
            gen_forests(n, family)
                .filter(move |f: &Forest| avoid.is_none_or(|ps| f.avoids(ps)))
                .map(|f| (f.to_string(), serde_json::to_value(&f).unwrap())),
        ),
        Object::Permutations => Box::new(
            gen_permutations(n)
                .filter(move |p| keep(p.word()))
                .map(|p| (p.to_string(), json!(p.word()))),
        ),
        Object::SetPartitions => Box::new(gen_set_partitions(n).map(|x| (x.to_string(), json!(x.blocks())))),
        Object::OrderedSetPartitions => {
            Box::new(gen_ordered_set_partitions(n).map(|x| (x.to_string(), json!(x.blocks()))))
        }
        Object::ListPartitions => {
            Box::new(gen_list_partitions(n, ListFlags::UNORDERED).map(|x| (x.to_string(), json!(x.blocks()))))
        }
        Object::OrderedListPartitions => Box::new(
            gen_list_partitions(n, ListFlags::ORDERED_UP_TO_REVERSE)
                .map(|x| (x.to_string(), json!(x.blocks()))),
        ),
        Object::Compositions => Box::new(gen_all_compositions(n).map(|x| (x.to_string(), json!(x.parts())))),
        Object::CycleDecompositions => {
            Box::new(gen_ordered_cycle_decomps(n).map(|x| (x.to_string(), json!(x.cycles()))))
        }
        Object::PartitionedCycleDecompositions => {
            Box::new(gen_partitioned_cycle_decomps(n).map(|x| (x.to_string(), json!(x.to_string()))))
        }
    };
    let items = items.take(limit);
    match format {
        Format::Text => {
            for (text, _) in items {
                writeln!(out, "{text}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "index,object")?;
            for (i, (text, _)) in items.enumerate() {
                writeln!(out, "{},{}", i + 1, render::csv_field(&text))?;
            }
        }
        Format::Json => {
            let all: Vec<Value> = items.map(|(_, v)| v).collect();
            writeln!(out, "{}", Value::Array(all))?;
        }
    }
    Ok(())
}

fn count(
    format: Format,
    family: FamilyTag,
    n: usize,
    ps: &PatternSet,
    by: Option<By>,
    opts: &CountOptions,
    out: &mut impl Write,
) -> Result<io::Result<()>, Failure> {
    let Some(by) = by else {
        let total = brute_count(n, family, ps, opts).map_err(Failure::usage)?;
        let res = match format {
            Format::Text => writeln!(out, "{total}"),
            Format::Csv => writeln!(
                out,
                "family,n,patterns,count\n{family},{n},{},{total}",
                render::csv_field(&ps.to_string())
            ),
            Format::Json => writeln!(
                out,
                "{}",
                json!({"family": family, "n": n, "patterns": ps.to_string(), "count": big_json(&total)})
            ),
        };
        return Ok(res);
    };
    let (stat, label) = match by {
        By::Tdm => (Statistic::TopDownMaxima, "top_down_maxima"),
        By::Trees => (Statistic::TreeCount, "trees"),
    };
    let counts = refined_counts(n, family, ps, stat, opts).map_err(Failure::usage)?;
    let total: BigUint = counts.iter().sum();
    let rows: Vec<(usize, &BigUint)> = counts.iter().enumerate().skip(usize::from(n > 0)).collect();
    let res = match format {
        Format::Text => {
            let mut t = Table::new(vec![label.to_string(), "count".into()]);
            for (k, c) in &rows {
                t.row(vec![k.to_string(), c.to_string()]);
            }
            t.row(vec!["total".into(), total.to_string()]);
            t.write(out)
        }
        Format::Csv => {
            let mut s = format!("{label},count\n");
            for (k, c) in &rows {
                s += &format!("{k},{c}\n");
            }
            out.write_all(s.as_bytes())
        }
        Format::Json => {
            let split: Vec<Value> = rows
                .iter()
                .map(|(k, c)| json!({"value": k, "count": big_json(c)}))
                .collect();
            writeln!(
                out,
                "{}",
                json!({"family": family, "n": n, "patterns": ps.to_string(), "by": label,
                       "rows": split, "count": big_json(&total)})
            )
        }
    };
    Ok(res)
}

fn map_output(
    format: Format,
    name: BijectionName,
    inverse: bool,
    input: &str,
    output: &str,
    out: &mut impl Write,
) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{output}"),
        Format::Csv => writeln!(
            out,
            "bijection,inverse,input,output\n{name},{inverse},{},{}",
            render::csv_field(input),
            render::csv_field(output)
        ),
        Format::Json => {
            let mut v =
                json!({"bijection": name.name(), "inverse": inverse, "input": input, "output": output});
            if let Ok(f) = output.parse::<Forest>() {
                v["forest"] = serde_json::to_value(&f).unwrap();
            }
            writeln!(out, "{v}")
        }
    }
}

fn verify_cmd(
    format: Format,
    name: &str,
    max_n: usize,
    opts: &CountOptions,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let theorems: Vec<_> = if name == "all" {
        THEOREMS.iter().collect()
    } else {
        vec![theorem(name).map_err(|e| Failure::usage(format!("{e}, all")))?]
    };
    let mut table = Table::new(
        ["theorem", "n", "patterns", "formula", "brute", "result"]
            .map(String::from)
            .to_vec(),
    )
    .numeric(&["n", "formula", "brute"]);
    let mut failed = false;
    for th in theorems {
        for row in verify(th, max_n, opts).map_err(Failure::usage)? {
            failed |= !row.passed();
            table.row(vec![
                th.name().to_string(),
                row.n.to_string(),
                row.patterns.to_string(),
                row.formula.to_string(),
                row.brute.to_string(),
                if row.passed() { "PASS" } else { "FAIL" }.to_string(),
            ]);
        }
    }
    table.emit(format, out).map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    Ok(u8::from(failed))
}

fn table_cmd(
    format: Format,
    number: u8,
    max_n: usize,
    opts: &CountOptions,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let fig = figure(number).map_err(Failure::usage)?;
    let cells = fig.compute(max_n, opts).map_err(Failure::usage)?;
    let mut table = Table::new(
        [
            "figure", "family", "n", "pattern", "computed", "expected", "source",
        ]
        .map(String::from)
        .to_vec(),
    )
    .numeric(&["figure", "n", "computed", "expected"]);
    for c in &cells {
        table.row(vec![
            fig.number.to_string(),
            fig.family.to_string(),
            c.n.to_string(),
            c.pattern.to_string(),
            c.computed.to_string(),
            c.expected.as_ref().map_or(String::new(), |e| e.to_string()),
            "computed".into(),
        ]);
    }
    table.emit(format, out).map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    Ok(u8::from(cells.iter().any(|c| !c.agrees())))
}
