//! Report payloads produced by the subcommands and their rendering into the
//! three output formats. Every rendering is a pure function of the report,
//! so repeated runs (and runs with different worker counts) emit identical
//! bytes.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

use dicelab_core::dice::Die;
use dicelab_core::payoff::PayoffReport;
use dicelab_core::{
    nash_as_expected, BeatsDigraph, CounterCertificate, EquilibriumReport, RankedDie,
    SideCountChecks, VerificationSuiteReport,
};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Machine-readable JSON (one document per line for die listings)
    Json,
    /// Comma-separated table; faces inside a cell are space-separated
    Csv,
    /// Human-readable text
    Pretty,
}

pub enum Output {
    DieList { dice: Vec<Die> },
    Count(u128),
    Payoff { a: Die, b: Die, report: PayoffReport },
    Certificate(CounterCertificate),
    Certificates(Vec<CounterCertificate>),
    Ranking { target: Die, ranking: Vec<RankedDie> },
    Nash(EquilibriumReport),
    Connectivity { n: u32, connected: bool },
    Graph {
        digraph: BeatsDigraph,
        cycles: Option<(usize, Vec<Vec<Die>>)>,
    },
    Suite(VerificationSuiteReport),
}

#[derive(Serialize)]
struct ConnectivityDoc {
    n: u32,
    connected: bool,
}

#[derive(Serialize)]
struct GraphDoc<'a> {
    n: u32,
    nodes: &'a [Die],
    edges: &'a [(u32, u32)],
    #[serde(skip_serializing_if = "Option::is_none")]
    cycles: Option<CyclesDoc<'a>>,
}

#[derive(Serialize)]
struct CyclesDoc<'a> {
    length: usize,
    cycles: &'a [Vec<Die>],
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut line = serde_json::to_string(value).expect("reports serialize to JSON");
    line.push('\n');
    line
}

/// Faces joined by spaces — the cell form dice take inside CSV tables.
fn spaced(die: &Die) -> String {
    die.faces()
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn csv_flag(value: Option<bool>) -> &'static str {
    match value {
        Some(true) => "true",
        Some(false) => "false",
        None => "",
    }
}

fn pretty_flag(value: Option<bool>) -> &'static str {
    match value {
        Some(true) => "yes",
        Some(false) => "NO",
        None => "-",
    }
}

impl Output {
    /// True when the report falsifies the claim its subcommand verifies —
    /// the process then exits with code 3.
    pub fn falsified(&self) -> bool {
        match self {
            Output::Nash(report) => !nash_as_expected(report),
            Output::Connectivity { connected, .. } => !connected,
            Output::Suite(report) => !report.overall_pass,
            _ => false,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Pretty => self.render_pretty(),
        }
    }

    fn render_json(&self) -> String {
        match self {
            Output::DieList { dice } => dice.iter().map(json_line).collect(),
            Output::Count(count) => format!("{count}\n"),
            Output::Payoff { report, .. } => json_line(report),
            Output::Certificate(cert) => json_line(cert),
            Output::Certificates(certs) => json_line(certs),
            Output::Ranking { ranking, .. } => json_line(ranking),
            Output::Nash(report) => json_line(report),
            Output::Connectivity { n, connected } => json_line(&ConnectivityDoc {
                n: *n,
                connected: *connected,
            }),
            Output::Graph { digraph, cycles } => json_line(&GraphDoc {
                n: digraph.n,
                nodes: &digraph.nodes,
                edges: &digraph.edges,
                cycles: cycles
                    .as_ref()
                    .map(|(length, cycles)| CyclesDoc {
                        length: *length,
                        cycles,
                    }),
            }),
            Output::Suite(report) => json_line(report),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        match self {
            Output::DieList { dice } => {
                for die in dice {
                    let faces: Vec<String> = die.faces().iter().map(|f| f.to_string()).collect();
                    let _ = writeln!(out, "{}", faces.join(","));
                }
            }
            Output::Count(count) => {
                let _ = writeln!(out, "{count}");
            }
            Output::Payoff { report, .. } => {
                let _ = writeln!(out, "wins,ties,losses,payoff");
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    report.wins, report.ties, report.losses, report.payoff
                );
            }
            Output::Certificate(cert) => {
                out.push_str(&certificates_csv(std::slice::from_ref(cert)));
            }
            Output::Certificates(certs) => {
                out.push_str(&certificates_csv(certs));
            }
            Output::Ranking { ranking, .. } => {
                let _ = writeln!(out, "die,payoff,gain");
                for entry in ranking {
                    let _ = writeln!(out, "{},{},{}", spaced(&entry.die), entry.payoff, entry.gain);
                }
            }
            Output::Nash(report) => {
                let _ = writeln!(out, "a,b");
                for (a, b) in &report.equilibria {
                    let _ = writeln!(out, "{},{}", spaced(a), spaced(b));
                }
            }
            Output::Connectivity { n, connected } => {
                let _ = writeln!(out, "n,connected");
                let _ = writeln!(out, "{n},{connected}");
            }
            Output::Graph { digraph, cycles } => match cycles {
                // with a cycle search the cycle table is the payload
                Some((_, cycles)) => {
                    let _ = writeln!(out, "cycle");
                    for cycle in cycles {
                        let dice: Vec<String> = cycle.iter().map(spaced).collect();
                        let _ = writeln!(out, "{}", dice.join(" -> "));
                    }
                }
                None => {
                    let _ = writeln!(out, "from,to");
                    for &(a, b) in &digraph.edges {
                        let _ = writeln!(
                            out,
                            "{},{}",
                            spaced(&digraph.nodes[a as usize]),
                            spaced(&digraph.nodes[b as usize])
                        );
                    }
                }
            },
            Output::Suite(report) => {
                let _ = writeln!(
                    out,
                    "n,space_size,neutrality,connectivity,xi_characterization,\
                     counter_totality,counters_nonempty,nash_unique_standard,\
                     nash_standard_present,pass"
                );
                for c in &report.per_n {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{},{}",
                        c.n,
                        c.space_size,
                        c.neutrality,
                        c.connectivity,
                        csv_flag(c.xi_characterization),
                        csv_flag(c.counter_totality),
                        csv_flag(c.counters_nonempty),
                        c.nash_unique_standard,
                        c.nash_standard_present,
                        c.pass
                    );
                }
            }
        }
        out
    }

    fn render_pretty(&self) -> String {
        let mut out = String::new();
        match self {
            Output::DieList { dice } => {
                for die in dice {
                    let _ = writeln!(out, "{die}");
                }
            }
            Output::Count(count) => {
                let _ = writeln!(out, "{count}");
            }
            Output::Payoff { a, b, report } => {
                let _ = writeln!(
                    out,
                    "{a} vs {b}: wins {}, ties {}, losses {}, payoff {}",
                    report.wins, report.ties, report.losses, report.payoff
                );
            }
            Output::Certificate(cert) => {
                let _ = writeln!(out, "{}", pretty_certificate(cert));
            }
            Output::Certificates(certs) => {
                if certs.is_empty() {
                    let _ = writeln!(out, "no one-step counter beats this die");
                } else {
                    let _ = writeln!(out, "{} one-step counter(s):", certs.len());
                    for cert in certs {
                        let _ = writeln!(out, "  {}", pretty_certificate(cert));
                    }
                }
            }
            Output::Ranking { target, ranking } => {
                let _ = writeln!(out, "one-step dice ranked against {target}:");
                for entry in ranking {
                    let _ = writeln!(
                        out,
                        "  {}  payoff {}  gain {}",
                        entry.die, entry.payoff, entry.gain
                    );
                }
            }
            Output::Nash(report) => {
                let _ = writeln!(
                    out,
                    "n={}: {} dice, {} equilibrium pair(s), unique standard pair: {}",
                    report.n,
                    report.space_size,
                    report.equilibria.len(),
                    if report.unique_standard { "yes" } else { "no" }
                );
                for (a, b) in &report.equilibria {
                    let _ = writeln!(out, "  {a} vs {b}");
                }
            }
            Output::Connectivity { n, connected } => {
                let _ = writeln!(
                    out,
                    "n={n}: {}",
                    if *connected { "connected" } else { "NOT connected" }
                );
            }
            Output::Graph { digraph, cycles } => {
                let _ = writeln!(
                    out,
                    "n={}: {} dice, {} beat relation(s)",
                    digraph.n,
                    digraph.nodes.len(),
                    digraph.edges.len()
                );
                for &(a, b) in &digraph.edges {
                    let _ = writeln!(
                        out,
                        "  {} beats {}",
                        digraph.nodes[a as usize], digraph.nodes[b as usize]
                    );
                }
                if let Some((length, cycles)) = cycles {
                    let _ = writeln!(out, "cycles of length {length}: {}", cycles.len());
                    for cycle in cycles {
                        let dice: Vec<String> = cycle.iter().map(|d| d.to_string()).collect();
                        let _ = writeln!(out, "  {}", dice.join(" -> "));
                    }
                }
            }
            Output::Suite(report) => {
                let _ = writeln!(
                    out,
                    "{:>3} {:>6}  {:<8} {:<9} {:<7} {:<8} {:<9} {:<5}  result",
                    "n", "dice", "neutral", "connected", "xi", "counter", "nonempty", "nash"
                );
                for c in &report.per_n {
                    let _ = writeln!(
                        out,
                        "{:>3} {:>6}  {:<8} {:<9} {:<7} {:<8} {:<9} {:<5}  {}",
                        c.n,
                        c.space_size,
                        pretty_flag(Some(c.neutrality)),
                        pretty_flag(Some(c.connectivity)),
                        pretty_flag(c.xi_characterization),
                        pretty_flag(c.counter_totality),
                        pretty_flag(c.counters_nonempty),
                        pretty_flag(Some(nash_check(c))),
                        if c.pass { "pass" } else { "FAIL" }
                    );
                }
                let _ = writeln!(
                    out,
                    "overall: {}",
                    if report.overall_pass { "pass" } else { "FAIL" }
                );
            }
        }
        out
    }
}

fn certificates_csv(certs: &[CounterCertificate]) -> String {
    let mut out = String::from("target,pair_i,pair_j,counter,gain,payoff\n");
    for cert in certs {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            spaced(&cert.target),
            cert.pair.0,
            cert.pair.1,
            spaced(&cert.counter),
            cert.gain,
            cert.payoff
        );
    }
    out
}

fn pretty_certificate(cert: &CounterCertificate) -> String {
    format!(
        "target {}: counter {} via pair ({}, {}), gain {}, payoff {}",
        cert.target, cert.counter, cert.pair.0, cert.pair.1, cert.gain, cert.payoff
    )
}

/// The per-n equilibrium expectation as a single flag for the pretty table:
/// three-sided spaces expect the standard pair among several equilibria,
/// all others expect it to be unique.
fn nash_check(c: &SideCountChecks) -> bool {
    if c.n == 3 {
        c.nash_standard_present && !c.nash_unique_standard
    } else {
        c.nash_unique_standard
    }
}
