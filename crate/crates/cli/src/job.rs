use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::args::{Command, OneDivisor, TwoDivisors};

/// The inputs of one invocation, every value kept as the string given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Job {
    pub command: String,
    pub args: BTreeMap<String, String>,
}

impl Job {
    fn new(command: &str) -> Self {
        Job {
            command: command.to_string(),
            args: BTreeMap::new(),
        }
    }

    fn arg(mut self, key: &str, value: impl ToString) -> Self {
        self.args.insert(key.to_string(), value.to_string());
        self
    }

    fn one(self, d: &OneDivisor) -> Self {
        self.arg("curve", &d.curve.curve).arg("divisor", &d.divisor)
    }

    fn two(self, d: &TwoDivisors) -> Self {
        self.arg("curve", &d.curve.curve)
            .arg("divisor", &d.divisor)
            .arg("divisor2", &d.divisor2)
    }

    pub fn from_command(cmd: &Command) -> Job {
        match cmd {
            Command::Rr(d) => Job::new("rr").one(d),
            Command::H0h1(d) => Job::new("h0h1").one(d),
            Command::Clifford(d) => Job::new("clifford").one(d),
            Command::CliffordCurve {
                curve,
                bound,
                place_degree,
            } => {
                let j = Job::new("clifford-curve")
                    .arg("curve", &curve.curve)
                    .arg("place-degree", place_degree);
                match bound {
                    Some(b) => j.arg("bound", b),
                    None => j,
                }
            }
            Command::BaseLocus(d) => Job::new("base-locus").one(d),
            Command::ClassEq(d) => Job::new("class-eq").two(d),
            Command::Invariants(d) => Job::new("invariants").one(d),
            Command::Multmap(d) => Job::new("multmap").two(d),
            Command::Noether(c) => Job::new("noether").arg("curve", &c.curve),
            Command::Verdict(d) => Job::new("verdict").one(d),
            Command::VerdictAbstract {
                g,
                c,
                deg,
                h1,
                hyperelliptic,
                k_plus_2pts,
            } => Job::new("verdict-abstract")
                .arg("g", g)
                .arg("c", c)
                .arg("deg", deg)
                .arg("h1", h1)
                .arg("hyperelliptic", hyperelliptic)
                .arg("k-plus-2pts", k_plus_2pts),
            Command::WitnessSearch { divisor, bound } => {
                Job::new("witness-search").one(divisor).arg("bound", bound)
            }
            Command::Prop31 {
                curve,
                seed,
                max_attempts,
            } => Job::new("prop31")
                .arg("curve", &curve.curve)
                .arg("seed", seed)
                .arg("max-attempts", max_attempts),
            Command::Prop31Predict { g, c } => Job::new("prop31-predict").arg("g", g).arg("c", c),
        }
    }

    /// Command line reproducing this job. Flags holding `false` are dropped
    /// and `true` becomes a bare switch.
    pub fn argv(&self) -> Vec<String> {
        let mut out = vec!["hypersyz".to_string(), self.command.clone()];
        for (k, v) in &self.args {
            match v.as_str() {
                "false" => {}
                "true" => out.push(format!("--{k}")),
                _ => out.push(format!("--{k}={v}")),
            }
        }
        out
    }
}
