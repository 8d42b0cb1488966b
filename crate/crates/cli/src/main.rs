use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use minexp::{RationalInput, Request, Runner, ScanBounds};

/// Minimal exponents and log canonical thresholds of cones over complete
/// intersections, computed three independent ways.
#[derive(Parser)]
#[command(name = "minexp", version)]
struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form exponent, alpha table, lct and predicates.
    Formula {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
    /// Weighted upper bound from orders or polynomials.
    Weighted {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<String>,
        #[arg(long, value_delimiter = ',', conflicts_with = "poly", required_unless_present = "poly")]
        orders: Option<Vec<String>>,
        /// Repeat for several equations.
        #[arg(long)]
        poly: Option<Vec<String>>,
        /// Variable names; defaults to x1, ..., xn.
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Newton polyhedron diagonal value and exponent.
    Newton {
        /// JSON list of exponent vectors, e.g. "[[2,0],[0,3]]".
        #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
        support: Option<String>,
        #[arg(long, requires = "vars")]
        poly: Option<String>,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Simulated resolution, divisor ledger and cross-check.
    Resolve {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
    /// Valuation inequality and beta-chain grid scans.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Grid bound; defaults to MINEXP_SCAN_BOUNDS or 8.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Finite-field transversality probe (advisory).
    Probe {
        /// Repeat for several equations.
        #[arg(long, required = true)]
        poly: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// A prime field size.
        #[arg(long, default_value_t = 5)]
        field: u64,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Run a JSON manifest of requests.
    Batch {
        #[arg(long)]
        manifest: String,
    },
}

fn rationals(v: Vec<String>) -> Vec<RationalInput> {
    v.into_iter().map(RationalInput::Text).collect()
}

fn into_request(command: Command) -> Result<Request, String> {
    Ok(match command {
        Command::Formula { n, degrees } => Request::Formula { n, degrees },
        Command::Weighted { weights, orders, poly, vars } => Request::Weighted {
            weights: rationals(weights),
            orders: orders.map(rationals),
            polys: poly,
            vars,
        },
        Command::Newton { support, poly, vars } => Request::Newton {
            support: support
                .map(|s| serde_json::from_str(&s).map_err(|e| format!("bad support `{s}`: {e}")))
                .transpose()?,
            poly,
            vars,
        },
        Command::Resolve { n, degrees } => Request::Resolve { n, degrees },
        Command::Verify { n, degrees, bound } => Request::Verify { n, degrees, bound },
        Command::Probe { poly, vars, field, limit } => Request::Probe { polys: poly, vars, field, limit },
        Command::Batch { manifest } => Request::Batch { manifest },
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let scan = match ScanBounds::from_env() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let request = match into_request(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let report = Runner::new(scan).run(&request);
    let out = if cli.json {
        report.to_json() + "\n"
    } else {
        report.render_text()
    };
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    ExitCode::from(report.exit_code() as u8)
}
