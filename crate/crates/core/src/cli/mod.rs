//! Command-line front end. The binary only forwards its arguments to
//! [`run`] and exits with the returned code.

pub mod corpus;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::cjp::{predicted_cost, reduced_cjp_named, verify_mainlemma};
use crate::diagram::{parse_pd, PlanarDiagram};
use crate::error::{Error, Result};
use crate::states::{
    all_state, beta_a, is_adequate, recover_link, reduced_a_graph, swap_adjacent,
    tail_normal_form, ReducedGraph, StateKind,
};
use crate::tail::{head_with_budget, tail_with_budget, TailSeries};
use crate::theta::{series_product, theta, MonomialSpec, ThetaSeries};
use crate::tl::{verify_junkterms, BUDGET_ENV, DEFAULT_BUDGET};

pub use corpus::{Corpus, CorpusEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "skeintail", version, about = "Colored Jones polynomials, tails and state graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest number of sweep states allowed (a Catalan-number cap).
    #[arg(long, global = true, env = BUDGET_ENV)]
    pub budget: Option<u128>,

    /// Corpus file with lines `name: PD...`; replaces the built-in corpus.
    #[arg(long, global = true)]
    pub corpus: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct Input {
    /// Name of a corpus diagram.
    #[arg(long, conflicts_with = "pd", required_unless_present = "pd")]
    pub knot: Option<String>,

    /// A PD code such as "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]".
    #[arg(long)]
    pub pd: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced colored Jones polynomial J_N in q.
    Cjp {
        #[command(flatten)]
        input: Input,
        #[arg(long = "N", value_name = "N")]
        big_n: usize,
    },
    /// Leading coefficients of the tail (A-adequate diagrams).
    Tail {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        order: usize,
    },
    /// Leading coefficients of the head, the tail of the mirror image.
    Head {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        order: usize,
    },
    /// A- and B-adequacy of a diagram.
    Adequacy {
        #[command(flatten)]
        input: Input,
    },
    /// Whether the reduced all-A graph is a tree.
    Fibered {
        #[command(flatten)]
        input: Input,
    },
    /// Checks one of the identities behind the tail theorems.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// Unreduced J~_{D,n} against the all-B skein diagram S_B^(n).
    Mainlemma {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// The idempotent expansion identity for all 1 <= a <= amax, 1 <= b <= bmax.
    Junkterms {
        #[arg(long, default_value_t = 3)]
        amax: usize,
        #[arg(long, default_value_t = 3)]
        bmax: usize,
    },
    /// Equal tails before and after a local move of the all-A state.
    Move {
        #[command(flatten)]
        input: Input,
        /// Target diagram; defaults to the corpus entry `<knot>_moved`, else
        /// to the first admissible swap of the all-A state.
        #[arg(long)]
        to: Option<String>,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// The tail against the product of f(-q^2,-q) over the triangle pieces
    /// of the tail normal form.
    Theta {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidDiagram(_) | Error::InvalidArgument(_) => EXIT_PARSE,
        Error::NotAdequate(_) | Error::InvalidMove(_) | Error::Unrealizable(_) => EXIT_PRECONDITION,
        Error::Resource(_) | Error::Overflow => EXIT_RESOURCE,
        Error::Unstable(_) => EXIT_VERIFY,
        Error::DegreeOfZero | Error::OrderTooLow => EXIT_PARSE,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK { (text, String::new()) } else { (String::new(), text) };
            Outcome { code, stdout, stderr }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let ctx = match Context::new(cli) {
        Ok(c) => c,
        Err(e) => return failure(&e),
    };
    match ctx.dispatch(&cli.command) {
        Ok((passed, stdout)) => Outcome {
            code: if passed { EXIT_OK } else { EXIT_VERIFY },
            stdout,
            stderr: String::new(),
        },
        Err(e) => failure(&e),
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        code: exit_code(e),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

struct Context {
    json: bool,
    budget: u128,
    corpus: Corpus,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

impl Context {
    fn new(cli: &Cli) -> Result<Self> {
        let corpus = match &cli.corpus {
            Some(path) => Corpus::load(path)?,
            None => Corpus::builtin(),
        };
        Ok(Self {
            json: cli.json,
            budget: cli.budget.unwrap_or(DEFAULT_BUDGET),
            corpus,
        })
    }

    fn resolve(&self, input: &Input) -> Result<(String, PlanarDiagram)> {
        match (&input.knot, &input.pd) {
            (Some(name), _) => Ok((name.clone(), self.corpus.diagram(name)?.clone())),
            (None, Some(pd)) => Ok(("pd".to_string(), parse_pd(pd)?)),
            (None, None) => Err(Error::Parse("one of --knot or --pd is required".into())),
        }
    }

    fn resolve_name_or_pd(&self, text: &str) -> Result<(String, PlanarDiagram)> {
        match self.corpus.get(text) {
            Some(e) => Ok((e.name.clone(), e.diagram.clone())),
            None => Ok(("pd".to_string(), parse_pd(text)?)),
        }
    }

    /// Returns whether every check passed, and the text to print.
    fn dispatch(&self, cmd: &Command) -> Result<(bool, String)> {
        match cmd {
            Command::Cjp { input, big_n } => self.cjp(input, *big_n).map(|s| (true, s)),
            Command::Tail { input, order } => self.tail(input, *order, false).map(|s| (true, s)),
            Command::Head { input, order } => self.tail(input, *order, true).map(|s| (true, s)),
            Command::Adequacy { input } => self.adequacy(input).map(|s| (true, s)),
            Command::Fibered { input } => self.fibered(input).map(|s| (true, s)),
            Command::Verify { suite } => match suite {
                Suite::Mainlemma { input, n } => self.mainlemma(input, *n),
                Suite::Junkterms { amax, bmax } => self.junkterms(*amax, *bmax),
                Suite::Move { input, to, order } => self.moved(input, to.as_deref(), *order),
                Suite::Theta { input, order } => self.theta(input, *order),
            },
        }
    }

    fn cjp(&self, input: &Input, big_n: usize) -> Result<String> {
        let (name, d) = self.resolve(input)?;
        let r = reduced_cjp_named(&name, &d, big_n, self.budget)?;
        if self.json {
            return Ok(r.to_json(true) + "\n");
        }
        let len = r.q_coefficients().len();
        Ok(format!("{name} N={big_n}: {}\n", r.render(len)))
    }

    fn tail_series(&self, d: &PlanarDiagram, order: usize, mirror: bool) -> Result<TailSeries> {
        if mirror {
            head_with_budget(d, order, self.budget)
        } else {
            tail_with_budget(d, order, self.budget)
        }
    }

    fn tail(&self, input: &Input, order: usize, mirror: bool) -> Result<String> {
        let (name, d) = self.resolve(input)?;
        let t = self.tail_series(&d, order, mirror)?;
        if self.json {
            return Ok(t.to_json() + "\n");
        }
        let what = if mirror { "head" } else { "tail" };
        Ok(format!("{name} {what} (order {order}): {t}\n"))
    }

    fn adequacy(&self, input: &Input) -> Result<String> {
        let (name, d) = self.resolve(input)?;
        let (a, b) = (is_adequate(&d, StateKind::A), is_adequate(&d, StateKind::B));
        if self.json {
            let v = json!({"name": name, "a_adequate": a, "b_adequate": b});
            return Ok(v.to_string() + "\n");
        }
        Ok(format!("A-adequate: {}\nB-adequate: {}\n", yes_no(a), yes_no(b)))
    }

    fn fibered(&self, input: &Input) -> Result<String> {
        let (name, d) = self.resolve(input)?;
        let g = reduced_a_graph(&d)?;
        let beta = beta_a(&d)?;
        if self.json {
            let v = json!({
                "name": name,
                "tree": g.is_tree(),
                "beta_a": beta,
                "vertices": g.vertices,
                "edges": g.edges,
            });
            return Ok(v.to_string() + "\n");
        }
        Ok(format!(
            "tree: {}, β_A = {beta}\nreduced A-graph: {} vertices, {} edges\n",
            yes_no(g.is_tree()),
            g.vertices,
            g.num_edges()
        ))
    }

    fn mainlemma(&self, input: &Input, n: usize) -> Result<(bool, String)> {
        let (name, d) = self.resolve(input)?;
        let mut out = String::new();
        let mut all = true;
        for k in 1..=n {
            let ok = verify_mainlemma(&d, k)?;
            all &= ok;
            writeln!(out, "mainlemma {name} n={k}: {}", verdict(ok)).expect("string write");
        }
        Ok((all, self.summary(all, out)))
    }

    fn junkterms(&self, amax: usize, bmax: usize) -> Result<(bool, String)> {
        let mut out = String::new();
        let mut all = true;
        for a in 1..=amax {
            for b in 1..=bmax {
                let ok = verify_junkterms(a, b)?;
                all &= ok;
                writeln!(out, "junkterms a={a} b={b}: {}", verdict(ok)).expect("string write");
            }
        }
        Ok((all, self.summary(all, out)))
    }

    fn moved(&self, input: &Input, to: Option<&str>, order: usize) -> Result<(bool, String)> {
        let (name, d) = self.resolve(input)?;
        let (target_name, target) = match to {
            Some(t) => self.resolve_name_or_pd(t)?,
            None => match input.knot.as_ref().and_then(|k| self.corpus.get(&format!("{k}_moved"))) {
                Some(e) => (e.name.clone(), e.diagram.clone()),
                None => (format!("{name} after one swap"), first_swap(&d)?),
            },
        };
        let (g1, g2) = (reduced_a_graph(&d)?, reduced_a_graph(&target)?);
        let same_graph = g1.is_isomorphic(&g2);
        let t1 = tail_with_budget(&d, order, self.budget)?;
        let t2 = tail_with_budget(&target, order, self.budget)?;
        let ok = same_graph && t1.coefficients == t2.coefficients;
        let mut out = String::new();
        writeln!(out, "reduced A-graphs isomorphic: {}", yes_no(same_graph)).expect("string write");
        writeln!(out, "tail {name}: {t1}").expect("string write");
        writeln!(out, "tail {target_name}: {t2}").expect("string write");
        writeln!(out, "move {name} -> {target_name} (order {order}): {}", verdict(ok)).expect("string write");
        Ok((ok, self.summary(ok, out)))
    }

    fn theta(&self, input: &Input, order: usize) -> Result<(bool, String)> {
        let (name, d) = self.resolve(input)?;
        if order == 0 {
            return Err(Error::InvalidArgument("order must be at least 1".into()));
        }
        let pieces = tail_normal_form(&all_state(&d, StateKind::A)?)?;
        let power = theta_power(&pieces)?;
        let expected = theta_product(power, order)?;
        // the tail at order k needs colours k and k+1
        let mut reachable = order;
        while reachable > 0 {
            let (_, states) = predicted_cost(&d, reachable)?;
            if states <= self.budget {
                break;
            }
            reachable -= 1;
        }
        if reachable == 0 {
            return Err(Error::Resource("no tail order fits in the budget".into()));
        }
        let t = tail_with_budget(&d, reachable, self.budget)?;
        let ok = t.coefficients == expected.coefficients[..reachable];
        let mut out = String::new();
        writeln!(out, "f(-q^2,-q)^{power} (order {order}): {expected}").expect("string write");
        writeln!(out, "tail {name} (order {reachable}): {t}").expect("string write");
        if reachable < order {
            writeln!(
                out,
                "compared to order {reachable}; higher colours exceed the budget of {}",
                self.budget
            )
            .expect("string write");
        }
        writeln!(out, "theta {name}: {}", verdict(ok)).expect("string write");
        Ok((ok, self.summary(ok, out)))
    }

    fn summary(&self, ok: bool, text: String) -> String {
        if self.json {
            let lines: Vec<&str> = text.lines().collect();
            json!({"pass": ok, "lines": lines}).to_string() + "\n"
        } else {
            text
        }
    }
}

/// Tree pieces contribute 1 and triangles `f(-q^2,-q)`; other pieces have
/// no closed form here.
fn theta_power(pieces: &[ReducedGraph]) -> Result<u32> {
    let mut power = 0;
    for g in pieces {
        if g.is_tree() {
            continue;
        }
        if g.vertices == 3 && g.num_edges() == 3 {
            power += 1;
        } else {
            return Err(Error::NotAdequate(format!(
                "no theta product known for a piece with {} vertices and {} edges",
                g.vertices,
                g.num_edges()
            )));
        }
    }
    Ok(power)
}

/// `f(-q^2,-q)^power` modulo `q^order`.
pub fn theta_product(power: u32, order: usize) -> Result<ThetaSeries> {
    let f = theta(MonomialSpec::q_pow(-1, 2)?, MonomialSpec::q_pow(-1, 1)?, order)?;
    (0..power).try_fold(ThetaSeries::one(order), |acc, _| series_product(&acc, &f, order))
}

/// The link of the all-A state after the first admissible adjacent swap.
fn first_swap(d: &PlanarDiagram) -> Result<PlanarDiagram> {
    let s = all_state(d, StateKind::A)?;
    for (c, slots) in s.circles().iter().enumerate() {
        for j in 0..slots.len() {
            if let Ok(t) = swap_adjacent(&s, c, j) {
                if t.is_adequate() && !t.same_embedding(&s) {
                    return recover_link(&t, StateKind::A);
                }
            }
        }
    }
    Err(Error::InvalidMove("no admissible swap in the all-A state".into()))
}
