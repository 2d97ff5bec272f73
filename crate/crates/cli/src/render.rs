//! Output formats: aligned text, CSV, and one flat JSON object per line.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{json, Value};
use shuffle_squares::codes::{ChordDiagram, EulerCount, EulerRow, WordDigraph};
use shuffle_squares::covering::{CoverInstance, CoverSolution};
use shuffle_squares::cyclic::{AntiSquareReport, ShiftOutcome};
use shuffle_squares::enumeration::CountTable;
use shuffle_squares::{Permutation, SplitWitness, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Records,
}

pub struct Sink {
    out: Box<dyn Write>,
    format: Format,
}

fn positions(p: &[usize]) -> String {
    p.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn csv_positions(p: &[usize]) -> String {
    p.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

impl Sink {
    pub fn new(out: Box<dyn Write>, format: Format) -> Self {
        Sink { out, format }
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }

    fn record(&mut self, value: Value) -> io::Result<()> {
        writeln!(self.out, "{value}")
    }

    pub fn witness(&mut self, w: &Word, witness: Option<&SplitWitness>, gamma: Option<&Permutation>) -> io::Result<()> {
        let kind = if gamma.is_some() { "shuffle γ-square" } else { "shuffle square" };
        match (self.format, witness) {
            (Format::Human, Some(x)) => writeln!(
                self.out,
                "{w}: {kind}\nfirst=[{}] second=[{}] gamma={}",
                positions(&x.first_positions),
                positions(&x.second_positions),
                x.gamma
            ),
            (Format::Human, None) => match gamma {
                Some(g) => writeln!(self.out, "{w}: not a {kind} for gamma={g}"),
                None => writeln!(self.out, "{w}: not a {kind}"),
            },
            (Format::Csv, _) => {
                writeln!(self.out, "word,found,first,second,gamma")?;
                match witness {
                    Some(x) => writeln!(
                        self.out,
                        "{w},true,{},{},{}",
                        csv_positions(&x.first_positions),
                        csv_positions(&x.second_positions),
                        x.gamma
                    ),
                    None => writeln!(self.out, "{w},false,,,{}", gamma.map(|g| g.to_string()).unwrap_or_default()),
                }
            }
            (Format::Records, Some(x)) => self.record(json!({
                "word": w.to_string(),
                "found": true,
                "first": x.first_positions,
                "second": x.second_positions,
                "gamma": x.gamma.to_string(),
            })),
            (Format::Records, None) => self.record(json!({
                "word": w.to_string(),
                "found": false,
                "gamma": gamma.map(|g| g.to_string()),
            })),
        }
    }

    pub fn shift(&mut self, w: &Word, outcome: &ShiftOutcome) -> io::Result<()> {
        let shifted = w.rotate_left(outcome.shift);
        match self.format {
            Format::Human => writeln!(self.out, "shift={} word={shifted} fallback={}", outcome.shift, outcome.fallback),
            Format::Csv => writeln!(self.out, "word,shift,shifted,fallback\n{w},{},{shifted},{}", outcome.shift, outcome.fallback),
            Format::Records => self.record(json!({
                "word": w.to_string(),
                "shift": outcome.shift,
                "shifted": shifted.to_string(),
                "fallback": outcome.fallback,
            })),
        }
    }

    pub fn s_of(&mut self, w: &Word, s: usize) -> io::Result<()> {
        match self.format {
            Format::Human => writeln!(self.out, "s={s}"),
            Format::Csv => writeln!(self.out, "word,s\n{w},{s}"),
            Format::Records => self.record(json!({ "word": w.to_string(), "s": s })),
        }
    }

    pub fn table1(&mut self, reports: &[AntiSquareReport]) -> io::Result<()> {
        match self.format {
            Format::Human => {
                writeln!(self.out, "{:>4} {:>3} {:>7}", "2n", "s", "classes")?;
                for r in reports {
                    writeln!(self.out, "{:>4} {:>3} {:>7}", r.length, r.s_min, r.class_count)?;
                }
                Ok(())
            }
            Format::Csv => {
                writeln!(self.out, "2n,s,classes")?;
                for r in reports {
                    writeln!(self.out, "{},{},{}", r.length, r.s_min, r.class_count)?;
                }
                Ok(())
            }
            Format::Records => {
                for r in reports {
                    self.record(json!({ "length": r.length, "s": r.s_min, "classes": r.class_count }))?;
                }
                Ok(())
            }
        }
    }

    pub fn anti_squares(&mut self, report: &AntiSquareReport) -> io::Result<()> {
        match self.format {
            Format::Human => write!(self.out, "{report}"),
            Format::Csv => {
                writeln!(self.out, "length,s_min,complete,word")?;
                for w in &report.representatives {
                    writeln!(self.out, "{},{},{},{w}", report.length, report.s_min, report.complete)?;
                }
                Ok(())
            }
            Format::Records => {
                self.record(json!({
                    "length": report.length,
                    "s_min": report.s_min,
                    "classes": report.class_count,
                    "complete": report.complete,
                }))?;
                for w in &report.representatives {
                    self.record(json!({ "length": report.length, "word": w.to_string() }))?;
                }
                Ok(())
            }
        }
    }

    pub fn table5(&mut self, table: &CountTable) -> io::Result<()> {
        match self.format {
            Format::Human => write!(self.out, "{table}"),
            Format::Csv => write!(self.out, "{}", table.to_csv()),
            Format::Records => {
                for length in (2..=table.max_length).step_by(2) {
                    for ones in (0..=length).step_by(2) {
                        self.record(json!({
                            "length": length,
                            "ones": ones,
                            "count": table.entry(length, ones),
                        }))?;
                    }
                }
                Ok(())
            }
        }
    }

    pub fn matrix(&mut self, instance: &CoverInstance) -> io::Result<()> {
        match self.format {
            Format::Human => write!(self.out, "{}", instance.to_matrix()),
            Format::Csv => {
                for line in instance.to_matrix().lines() {
                    writeln!(self.out, "{}", line.split_whitespace().collect::<Vec<_>>().join(","))?;
                }
                Ok(())
            }
            Format::Records => {
                for (i, w) in instance.words.iter().enumerate() {
                    let perms: Vec<String> = instance.neighbors(i).map(|p| p.to_string()).collect();
                    self.record(json!({ "word": w.to_string(), "perms": perms.join(" ") }))?;
                }
                Ok(())
            }
        }
    }

    pub fn cover(&mut self, k: usize, solution: &CoverSolution) -> io::Result<()> {
        match self.format {
            Format::Human => {
                writeln!(self.out, "k={k} size={} optimal={}", solution.size, solution.optimal)?;
                write!(self.out, "{solution}")
            }
            Format::Csv => {
                writeln!(self.out, "perm")?;
                write!(self.out, "{solution}")
            }
            Format::Records => {
                for p in &solution.chosen {
                    self.record(json!({
                        "k": k,
                        "size": solution.size,
                        "optimal": solution.optimal,
                        "perm": p.to_string(),
                    }))?;
                }
                Ok(())
            }
        }
    }

    fn edges(&mut self, edge_list: &str, from: &str, to: &str) -> io::Result<()> {
        match self.format {
            Format::Csv => {
                writeln!(self.out, "{from},{to}")?;
                for line in edge_list.lines() {
                    writeln!(self.out, "{}", line.replace(' ', ","))?;
                }
                Ok(())
            }
            _ => {
                for line in edge_list.lines() {
                    let (a, b) = line.split_once(' ').unwrap_or((line, ""));
                    self.record(json!({ from: a, to: b }))?;
                }
                Ok(())
            }
        }
    }

    pub fn digraph(&mut self, d: &WordDigraph, euler: Option<EulerCount>, dot: bool) -> io::Result<()> {
        if dot {
            return write!(self.out, "{}", d.to_dot());
        }
        match self.format {
            Format::Human => {
                write!(self.out, "{}", d.to_edge_list())?;
                if let Some(e) = euler {
                    writeln!(self.out, "euler distinct={} labelled={}", e.distinct, e.labelled)?;
                }
                Ok(())
            }
            _ => self.edges(&d.to_edge_list(), "from", "to"),
        }
    }

    pub fn chords(&mut self, c: &ChordDiagram, dot: bool) -> io::Result<()> {
        if dot {
            return write!(self.out, "{}", c.to_dot());
        }
        match self.format {
            Format::Human => write!(self.out, "{}", c.to_edge_list()),
            _ => self.edges(&c.to_edge_list(), "a", "b"),
        }
    }

    pub fn violations(&mut self, words: &[Word]) -> io::Result<()> {
        match self.format {
            Format::Human => {
                writeln!(self.out, "violations={}", words.len())?;
                for w in words {
                    writeln!(self.out, "{w}")?;
                }
                Ok(())
            }
            Format::Csv => {
                writeln!(self.out, "word")?;
                for w in words {
                    writeln!(self.out, "{w}")?;
                }
                Ok(())
            }
            Format::Records => {
                for w in words {
                    self.record(json!({ "word": w.to_string() }))?;
                }
                Ok(())
            }
        }
    }

    pub fn euler(&mut self, rows: &[EulerRow]) -> io::Result<()> {
        let ones = rows.iter().filter(|r| r.backtracking.distinct == 1).count();
        let squares = rows.iter().filter(|r| r.shuffle_square).count();
        let violations = rows.iter().filter(|r| !r.coincides()).count();
        let agree = rows.iter().all(EulerRow::methods_agree);
        match self.format {
            Format::Human => {
                for r in rows {
                    writeln!(
                        self.out,
                        "{} euler={} labelled={} square={}{}",
                        r.word,
                        r.backtracking.distinct,
                        r.backtracking.labelled,
                        r.shuffle_square,
                        if r.coincides() { "" } else { " *" }
                    )?;
                }
                writeln!(
                    self.out,
                    "euler_one={ones} shuffle_squares={squares} violations={violations} methods_agree={agree}"
                )
            }
            Format::Csv => {
                writeln!(self.out, "word,euler,labelled,best_euler,best_labelled,shuffle_square")?;
                for r in rows {
                    writeln!(
                        self.out,
                        "{},{},{},{},{},{}",
                        r.word,
                        r.backtracking.distinct,
                        r.backtracking.labelled,
                        r.best.distinct,
                        r.best.labelled,
                        r.shuffle_square
                    )?;
                }
                Ok(())
            }
            Format::Records => {
                for r in rows {
                    self.record(json!({
                        "word": r.word.to_string(),
                        "euler": r.backtracking.distinct as u64,
                        "labelled": r.backtracking.labelled as u64,
                        "best_euler": r.best.distinct as u64,
                        "best_labelled": r.best.labelled as u64,
                        "shuffle_square": r.shuffle_square,
                    }))?;
                }
                Ok(())
            }
        }
    }
}
