//! Result records and their three serializations.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use tornheim::special::rational::{rat_string, rat_to_f64, Rational};
use tornheim::suites::{Check, Outcome};
use tornheim::{Approx, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Refused,
    Failed,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Value {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub target: String,
    pub inputs: Vec<String>,
    pub value: Option<Value>,
    pub abs_err: Option<f64>,
    /// present iff the value came from exact rational arithmetic
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub status: Status,
    pub error_kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// null for records produced inside a batch that is timed as a whole
    pub elapsed_ms: Option<f64>,
}

impl Record {
    pub fn new(target: &str, inputs: Vec<String>) -> Self {
        Record {
            target: target.into(),
            inputs,
            value: None,
            abs_err: None,
            exact: None,
            status: Status::Ok,
            error_kind: None,
            detail: None,
            elapsed_ms: None,
        }
    }

    pub fn with_approx(mut self, v: Approx) -> Self {
        self.value = Some(Value { re: v.value.re, im: v.value.im });
        self.abs_err = Some(v.abs_err);
        self
    }

    pub fn with_exact(mut self, r: &Rational) -> Self {
        self.value = Some(Value { re: rat_to_f64(r), im: 0.0 });
        self.abs_err = Some(0.0);
        self.exact = Some(rat_string(r));
        self
    }

    pub fn refused(mut self, e: &Error) -> Self {
        self.status = Status::Refused;
        self.error_kind = Some(e.kind().into());
        self.detail = Some(e.to_string());
        self
    }

    pub fn failed(mut self, why: String) -> Self {
        self.status = Status::Failed;
        self.detail = Some(why);
        self
    }

    pub fn ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn from_check(c: &Check) -> Self {
        let mut r = Record::new(&c.target, c.inputs.clone());
        if let Some(x) = &c.exact {
            r = r.with_exact(x);
        } else if let Some(v) = c.value {
            r = r.with_approx(v);
        }
        match &c.outcome {
            Outcome::Pass => r,
            Outcome::Skipped(why) => {
                r.detail = Some(format!("not applicable: {why}"));
                r
            }
            Outcome::Fail(why) => r.failed(why.clone()),
            Outcome::Refused(e) => r.refused(e),
        }
    }
}

#[derive(Serialize)]
struct Summary<'a> {
    summary: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    suite: Option<&'a str>,
    passed: usize,
    total: usize,
}

const CSV_HEADER: &str = "target,inputs,re,im,abs_err,exact,status,error_kind,detail,elapsed_ms";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt_num(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Refused => "refused",
        Status::Failed => "failed",
    }
}

pub fn render(r: &Record, fmt: Format) -> String {
    match fmt {
        Format::Json => serde_json::to_string(r).expect("records always serialize"),
        Format::Csv => {
            let fields = [
                csv_field(&r.target),
                csv_field(&r.inputs.join(";")),
                opt_num(r.value.map(|v| v.re)),
                opt_num(r.value.map(|v| v.im)),
                opt_num(r.abs_err),
                r.exact.clone().unwrap_or_default(),
                status_name(r.status).into(),
                r.error_kind.clone().unwrap_or_default(),
                csv_field(r.detail.as_deref().unwrap_or("")),
                opt_num(r.elapsed_ms),
            ];
            fields.join(",")
        }
        Format::Text => {
            let mut line = format!("{}({})", r.target, r.inputs.join(", "));
            if let Some(x) = &r.exact {
                line += &format!(" = {x}");
            } else if let (Some(v), Some(e)) = (r.value, r.abs_err) {
                line += &format!(" = {}{:+}i ± {e:.1e}", v.re, v.im);
            }
            line += &format!(" [{}", status_name(r.status));
            if let Some(k) = &r.error_kind {
                line += &format!(": {k}");
            }
            line += "]";
            if let Some(d) = &r.detail {
                line += &format!(" {d}");
            }
            line
        }
    }
}

/// Writes records in order, with a header first for csv.
pub struct Sink<W: Write> {
    out: W,
    fmt: Format,
    header_done: bool,
}

impl<W: Write> Sink<W> {
    pub fn new(out: W, fmt: Format) -> Self {
        Sink { out, fmt, header_done: false }
    }

    pub fn record(&mut self, r: &Record) -> io::Result<()> {
        if self.fmt == Format::Csv && !self.header_done {
            writeln!(self.out, "{CSV_HEADER}")?;
            self.header_done = true;
        }
        writeln!(self.out, "{}", render(r, self.fmt))
    }

    /// The closing `passed/total` line.
    pub fn summary(&mut self, label: Option<&str>, passed: usize, total: usize) -> io::Result<()> {
        let frac = format!("{passed}/{total}");
        match self.fmt {
            Format::Json => {
                let v = Summary { summary: &frac, suite: label, passed, total };
                writeln!(self.out, "{}", serde_json::to_string(&v).expect("summaries always serialize"))
            }
            Format::Csv | Format::Text => match label {
                Some(l) => writeln!(self.out, "{l} {frac}"),
                None => writeln!(self.out, "{frac}"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tornheim::special::rational::rat;
    use tornheim::{c, Approx};

    #[test]
    fn exact_records_carry_the_fraction() {
        let r = Record::new("F", vec!["1".into()]).with_exact(&rat(5, 12));
        let j = render(&r, Format::Json);
        assert!(j.contains("\"exact\":\"5/12\""), "{j}");
        assert!(j.contains("\"status\":\"ok\""));
        let r = Record::new("zeta", vec![]).with_approx(Approx::new(c(1.0, 2.0), 1e-15));
        assert!(!render(&r, Format::Json).contains("exact"));
    }

    #[test]
    fn csv_quotes_commas() {
        let r = Record::new("x", vec!["a".into()]).failed("p, q".into());
        let line = render(&r, Format::Csv);
        assert!(line.contains("\"p, q\""), "{line}");
        assert_eq!(line.split(',').count(), CSV_HEADER.split(',').count() + 1);
    }

    #[test]
    fn refusals_name_the_error() {
        let r = Record::new("zeta", vec!["1+0i".into()]).refused(&Error::Pole("s = 1".into()));
        assert_eq!(r.status, Status::Refused);
        assert_eq!(r.error_kind.as_deref(), Some(Error::Pole(String::new()).kind()));
        assert!(!r.ok());
    }
}
