//! Rendering of sweep results as JSON, CSV or a Markdown summary.

use std::fmt::Write as _;

use bernpoly::identities::{Family, ParityReading, ShiftedRhs, SweepConfig, VerificationRecord};
use serde::Serialize;

#[derive(Serialize)]
struct ConfigEcho<'a> {
    families: Vec<&'static str>,
    max_m: u32,
    max_n: u32,
    max_q: u32,
    primes: &'a [u64],
    precision: u32,
    strict_parity: bool,
    printed_shifted_rhs: bool,
}

#[derive(Serialize, Clone, Copy)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
}

pub struct Report<'a> {
    families: &'a [Family],
    cfg: &'a SweepConfig,
    records: Vec<VerificationRecord>,
}

impl<'a> Report<'a> {
    pub fn new(
        families: &'a [Family],
        cfg: &'a SweepConfig,
        records: Vec<VerificationRecord>,
    ) -> Self {
        Report {
            families,
            cfg,
            records,
        }
    }

    fn summary(&self) -> Summary {
        let passed = self.records.iter().filter(|r| r.passed()).count();
        Summary {
            total: self.records.len(),
            passed,
            failed: self.records.len() - passed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(VerificationRecord::passed)
    }

    pub fn summary_line(&self) -> String {
        let s = self.summary();
        format!(
            "{} records: {} passed, {} failed",
            s.total, s.passed, s.failed
        )
    }

    pub fn to_json(&self) -> Result<String, String> {
        #[derive(Serialize)]
        struct Doc<'b> {
            config: ConfigEcho<'b>,
            summary: Summary,
            records: &'b [VerificationRecord],
        }
        let doc = Doc {
            config: ConfigEcho {
                families: self.families.iter().map(|f| f.tag()).collect(),
                max_m: self.cfg.max_m,
                max_n: self.cfg.max_n,
                max_q: self.cfg.max_q,
                primes: &self.cfg.primes,
                precision: self.cfg.precision,
                strict_parity: self.cfg.parity == ParityReading::LowerLimitParity,
                printed_shifted_rhs: self.cfg.shifted_rhs == ShiftedRhs::Printed,
            },
            summary: self.summary(),
            records: &self.records,
        };
        let mut text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
        text.push('\n');
        Ok(text)
    }

    pub fn to_csv(&self) -> Result<String, String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.records.is_empty() {
            w.write_record(["family", "params", "verdict", "lhs", "rhs", "mismatch"])
                .map_err(|e| e.to_string())?;
        }
        for r in &self.records {
            w.serialize(r).map_err(|e| e.to_string())?;
        }
        let bytes = w.into_inner().map_err(|e| e.to_string())?;
        String::from_utf8(bytes).map_err(|e| e.to_string())
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let c = self.cfg;
        let primes: Vec<String> = c.primes.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "# Verification report\n");
        let _ = writeln!(
            out,
            "Bounds m <= {}, n <= {}, q <= {}; primes {}; precision {}.\n",
            c.max_m,
            c.max_n,
            c.max_q,
            primes.join(", "),
            c.precision
        );
        out.push_str("| family | identity | instances | pass | fail |\n");
        out.push_str("|---|---|---:|---:|---:|\n");
        for f in self.families {
            let rows: Vec<_> = self
                .records
                .iter()
                .filter(|r| r.family == f.tag())
                .collect();
            let pass = rows.iter().filter(|r| r.passed()).count();
            let _ = writeln!(
                out,
                "| `{}` | `{}` | {} | {} | {} |",
                f.tag(),
                f.summary(),
                rows.len(),
                pass,
                rows.len() - pass
            );
        }
        let s = self.summary();
        let _ = writeln!(
            out,
            "| **total** | | {} | {} | {} |",
            s.total, s.passed, s.failed
        );

        let failures: Vec<_> = self.records.iter().filter(|r| !r.passed()).collect();
        if !failures.is_empty() {
            out.push_str("\n## Failures\n\n");
            for r in failures {
                let _ = writeln!(
                    out,
                    "- `{}` {}: {}",
                    r.family,
                    r.params,
                    r.mismatch.as_deref().unwrap_or("sides differ")
                );
            }
        }
        out
    }
}
