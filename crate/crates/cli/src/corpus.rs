//! Built-in jobs exercised by `selftest`.

use serde_json::{json, Value};

use crate::job::JobSpec;
use crate::run::{run, Command, Outcome, EXIT_FAILED, EXIT_UNSUPPORTED, EXIT_VERIFIED};

pub struct Entry {
    pub name: &'static str,
    pub command: Command,
    pub job: &'static str,
    pub expected: i32,
}

/// The irreducible quartic used for the end-to-end run.
pub const QUARTIC: &str = "-2*x^3*y + 2*x^3*z - 8*x^2*y^2 - 4*x^2*y*z - 7*x^2*z^2 - 9*x*y^3 - 10*x*y^2*z - 10*x*y*z^2 - 3*x*z^3 - 3*y^4 - 3*y^3*z - y^2*z^2 + y*z^3 + 2*z^4";

pub const ENTRIES: &[Entry] = &[
    Entry {
        name: "quaternion-residues",
        command: Command::Residues,
        job: r#"{"n": 2, "symbols": [{"a": "x*y", "b": "x^2+1"}]}"#,
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "quaternion-reciprocity",
        command: Command::Reciprocity,
        job: r#"{"n": 2, "symbols": [{"a": "x*y", "b": "x^2+1"}]}"#,
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "cubic-symbol-reciprocity",
        command: Command::Reciprocity,
        job: r#"{"n": 3, "symbols": [{"a": "y^3 - x", "b": "x*y + 1"}, {"a": "x", "b": "y - rho", "exp": 2}]}"#,
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "four-lines",
        command: Command::Pipeline,
        job: r#"{"n": 2, "symbols": [{"a": "x", "b": "y*(x+y+1)"}],
                 "curve": [{"equation": "x"}, {"equation": "y"}, {"equation": "z"}, {"equation": "x+y+z"}]}"#,
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "two-lines-conic",
        command: Command::Pipeline,
        job: r#"{"n": 2, "symbols": [{"a": "x+1", "b": "y^2-x"}],
                 "curve": [{"equation": "x+z"}, {"equation": "z"}, {"equation": "y^2-x*z"}]}"#,
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "line-cubic",
        command: Command::Pipeline,
        job: r#"{"n": 2, "symbols": [{"a": "y+1", "b": "-y^3 + x^2 + y + 1"}],
                 "curve": [{"equation": "y+z"}, {"equation": "-y^3 + x^2*z + y*z^2 + z^3"}]}"#,
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "two-conics",
        command: Command::Pipeline,
        job: r#"{"n": 2, "symbols": [{"a": "x - y^2", "b": "x^2 - y"}],
                 "curve": [{"equation": "x*z - y^2"}, {"equation": "x^2 - y*z"}]}"#,
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "quartic",
        command: Command::Pipeline,
        job: concat!(
            r#"{"n": 2, "symbols": [{"a": "(x+y+1)*(2*x+y-1)", "b": "-2*x^3*y + 2*x^3 - 8*x^2*y^2 - 4*x^2*y - 7*x^2 - 9*x*y^3 - 10*x*y^2 - 10*x*y - 3*x - 3*y^4 - 3*y^3 - y^2 + y + 2"}],"#,
            r#" "curve": [{"equation": "-2*x^3*y + 2*x^3*z - 8*x^2*y^2 - 4*x^2*y*z - 7*x^2*z^2 - 9*x*y^3 - 10*x*y^2*z - 10*x*y*z^2 - 3*x*z^3 - 3*y^4 - 3*y^3*z - y^2*z^2 + y*z^3 + 2*z^4"}]}"#
        ),
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "cyclify-three-points",
        command: Command::Cyclify,
        job: r#"{"n": 3, "targets": [{"point": "y", "residue": "x"}, {"point": "y-1", "residue": "x+1"},
                                    {"point": "inf", "residue": "1/(x^2+x)"}]}"#,
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "cyclify-quadratic",
        command: Command::Cyclify,
        job: r#"{"n": 2, "targets": [{"point": "y^2 - x", "residue": "1 + y"}, {"point": "inf", "residue": "1/(1-x)"}]}"#,
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "cyclify-cubic-theta-squared",
        command: Command::Cyclify,
        job: r#"{"n": 3, "targets": [{"point": "y^3 - x*y - 1", "residue": "y^2"}]}"#,
        expected: EXIT_VERIFIED,
    },
    Entry {
        name: "reject-corrupted-witness",
        command: Command::Cyclify,
        job: r#"{"n": 3, "targets": [{"point": "y^3 - x*y - 1", "residue": "y^2", "witness": {"w": "y + 1", "c": "2"}}]}"#,
        expected: EXIT_FAILED,
    },
    Entry {
        name: "reject-non-realizable",
        command: Command::Cyclify,
        job: r#"{"n": 3, "targets": [{"point": "y^3 - x", "residue": "y^2 + y"}]}"#,
        expected: EXIT_FAILED,
    },
    Entry {
        name: "reject-conics-without-rational-point",
        command: Command::Transform,
        job: r#"{"n": 2, "curve": [{"equation": "x^2 + y^2 - z^2"}, {"equation": "x^2 + y^2 - 4*z^2"}]}"#,
        expected: EXIT_UNSUPPORTED,
    },
    Entry {
        name: "reject-order-one",
        command: Command::Residues,
        job: r#"{"n": 1, "symbols": [{"a": "x", "b": "y"}]}"#,
        expected: EXIT_UNSUPPORTED,
    },
];

pub fn job(e: &Entry) -> JobSpec {
    serde_json::from_str(e.job).expect("corpus jobs are well formed")
}

pub fn selftest() -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for e in ENTRIES {
        let out = run(e.command, &job(e));
        let passed = out.code == e.expected;
        ok &= passed;
        let mut row = json!({
            "name": e.name,
            "command": e.command.name(),
            "expected_exit": e.expected,
            "exit": out.code,
            "passed": passed,
        });
        if !passed {
            row["report"] = out.report;
        }
        rows.push(row);
    }
    let code = if ok { EXIT_VERIFIED } else { EXIT_FAILED };
    Outcome { code, report: json!({ "command": "selftest", "entries": Value::Array(rows), "passed": ok, "exit_code": code }) }
}
