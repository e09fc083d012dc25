use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::vertex_set::VertexSet;

/// One graph checked against one statement.
///
/// `values` holds computed quantities, `bounds` the value each bounded
/// quantity is compared with (same key), `checks` the outcome of predicate
/// tests, and `witnesses` every set the checks relied on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub values: BTreeMap<String, i64>,
    pub bounds: BTreeMap<String, i64>,
    pub checks: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, VertexSet>,
    pub pass: bool,
    /// Smallest margin over the inequalities checked (negative on failure).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Instance {
    pub fn new(id: impl Into<String>, g: &Graph) -> Self {
        Instance {
            id: id.into(),
            graph6: emit_graph6(g),
            n: g.order(),
            values: BTreeMap::new(),
            bounds: BTreeMap::new(),
            checks: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            pass: true,
            slack: None,
            note: None,
        }
    }

    pub fn value(&mut self, key: &str, v: usize) -> &mut Self {
        self.values.insert(key.into(), v as i64);
        self
    }

    pub fn witness(&mut self, key: &str, s: VertexSet) -> &mut Self {
        self.witnesses.insert(key.into(), s);
        self
    }

    pub fn check(&mut self, key: &str, ok: bool) -> &mut Self {
        self.pass &= ok;
        let e = self.checks.entry(key.into()).or_insert(true);
        *e &= ok;
        self
    }

    fn margin(&mut self, m: i64) {
        self.slack = Some(self.slack.map_or(m, |s| s.min(m)));
        self.pass &= m >= 0;
    }

    /// Records `key = lhs <= bound`.
    pub fn at_most(&mut self, key: &str, lhs: i64, bound: i64) -> &mut Self {
        self.values.insert(key.into(), lhs);
        self.bounds.insert(key.into(), bound);
        self.margin(bound - lhs);
        self
    }

    /// Records `key = lhs >= bound`.
    pub fn at_least(&mut self, key: &str, lhs: i64, bound: i64) -> &mut Self {
        self.values.insert(key.into(), lhs);
        self.bounds.insert(key.into(), bound);
        self.margin(lhs - bound);
        self
    }

    /// Records `key = lhs == expected`.
    pub fn equals(&mut self, key: &str, lhs: i64, expected: i64) -> &mut Self {
        self.values.insert(key.into(), lhs);
        self.bounds.insert(key.into(), expected);
        self.pass &= lhs == expected;
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.note = Some(text.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    /// Corpus graphs outside the statement's hypotheses.
    pub skipped: usize,
    pub min_slack: Option<i64>,
    pub max_slack: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub statement_id: String,
    pub corpus: serde_json::Value,
    pub instances: Vec<Instance>,
    pub summary: Summary,
}

#[derive(Serialize)]
struct InstanceLine<'a> {
    statement_id: &'a str,
    #[serde(flatten)]
    instance: &'a Instance,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    statement_id: &'a str,
    corpus: &'a serde_json::Value,
    summary: &'a Summary,
}

impl VerificationReport {
    /// Sorts instances by id (stably) and computes the summary.
    pub fn assemble(statement_id: &str, corpus: serde_json::Value, mut instances: Vec<Instance>, skipped: usize) -> Self {
        instances.sort_by(|a, b| a.id.cmp(&b.id));
        let pass = instances.iter().filter(|i| i.pass).count();
        let slacks = instances.iter().filter_map(|i| i.slack);
        let summary = Summary {
            instances: instances.len(),
            pass,
            fail: instances.len() - pass,
            skipped,
            min_slack: slacks.clone().min(),
            max_slack: slacks.max(),
        };
        VerificationReport { statement_id: statement_id.into(), corpus, instances, summary }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    /// One JSON object per instance, then a summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for inst in &self.instances {
            let line = InstanceLine { statement_id: &self.statement_id, instance: inst };
            out.push_str(&serde_json::to_string(&line).expect("report serializes"));
            out.push('\n');
        }
        let tail = SummaryLine { statement_id: &self.statement_id, corpus: &self.corpus, summary: &self.summary };
        out.push_str(&serde_json::to_string(&tail).expect("report serializes"));
        out.push('\n');
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("statement\tid\tn\tpass\tslack\tvalues\tbounds\n");
        let kv = |m: &BTreeMap<String, i64>| m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";");
        for i in &self.instances {
            let slack = i.slack.map_or("-".to_string(), |s| s.to_string());
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}\t{}", self.statement_id, i.id, i.n, i.pass, slack, kv(&i.values), kv(&i.bounds));
        }
        let s = &self.summary;
        let opt = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "# summary\tinstances={}\tpass={}\tfail={}\tskipped={}\tmin_slack={}\tmax_slack={}",
            s.instances,
            s.pass,
            s.fail,
            s.skipped,
            opt(s.min_slack),
            opt(s.max_slack)
        );
        out
    }
}
