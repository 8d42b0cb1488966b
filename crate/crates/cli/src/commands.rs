use minexp_core::exponent::{
    alpha_table, lct_cone, normalize_degree_one, predicates, weighted_upper_bound, Normalized,
};
use minexp_core::newton::{newton_exponent, MonomialSupport};
use minexp_core::poly::probe_transversality;
use minexp_core::resolution::{
    beta_chain, simulate_resolution, valuation_branch, verify_valuation_inequality, Branch,
};
use minexp_core::{DegreeProfile, Poly, Rational, Scalar, WeightVector, WeightedProfile};
use rayon::prelude::*;
use serde_json::json;

use crate::report::{Quantity, Report, Status};
use crate::request::{parse_manifest, RationalInput, Request};
use crate::scan::ScanBounds;

const HYPOTHESES: &str = "hypotheses attested, not verified: the equations form a regular sequence \
     and the projective hypersurfaces they cut out are smooth and meet with simple normal crossings";
const UPPER_BOUND: &str = "UPPER BOUND: this is an upper bound for the local minimal exponent at the origin, \
     not its value";
const NONDEGENERATE: &str = "hypotheses attested, not verified: isolated singularity at the origin, \
     nondegenerate with respect to its Newton polyhedron";
const GRID: &str = "finite grid scan: evidence, not a proof";
const PROBE: &str = "advisory only: a finite-field scan is evidence, not a proof, and never blocks a computation";

/// Default point budget of the transversality probe.
pub const PROBE_LIMIT: u64 = 200_000;

#[derive(Clone, Debug)]
pub struct Runner {
    pub scan: ScanBounds,
}

impl Runner {
    pub fn new(scan: ScanBounds) -> Self {
        Runner { scan }
    }

    pub fn run(&self, request: &Request) -> Report {
        let outcome = match request {
            Request::Formula { n, degrees } => formula(request, *n, degrees),
            Request::Weighted { weights, orders, polys, vars } => {
                weighted(request, weights, orders.as_deref(), polys.as_deref(), vars.as_deref())
            }
            Request::Newton { support, poly, vars } => newton(request, support.as_deref(), poly.as_deref(), vars.as_deref()),
            Request::Resolve { n, degrees } => resolve(request, *n, degrees),
            Request::Verify { n, degrees, bound } => self.verify(request, *n, degrees, *bound),
            Request::Probe { polys, vars, field, limit } => probe(request, polys, vars, *field, *limit),
            Request::Batch { manifest } => return self.batch_file(request, manifest),
        };
        outcome.unwrap_or_else(|e| Report::failed(request, e))
    }

    fn batch_file(&self, request: &Request, path: &str) -> Report {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return Report::failed(request, format!("cannot read manifest `{path}`: {e}")),
        };
        match parse_manifest(&text) {
            Ok(requests) => self.batch(request, &requests),
            Err(e) => Report::failed(request, e),
        }
    }

    /// Runs independent requests concurrently; sub-reports keep manifest order.
    pub fn batch(&self, request: &Request, requests: &[Request]) -> Report {
        let reports: Vec<Report> = requests.par_iter().map(|r| self.run(r)).collect();
        aggregate(request, reports)
    }

    fn verify(&self, request: &Request, n: usize, degrees: &[u32], bound: Option<u64>) -> Result<Report, String> {
        let profile = DegreeProfile::new(n, degrees.to_vec()).map_err(|e| e.to_string())?;
        let bound = bound.unwrap_or(self.scan.bound);
        if bound == 0 {
            return Err("the grid bound must be at least 1".into());
        }
        let branch = valuation_branch(&profile);
        let val = verify_valuation_inequality::<Rational>(&profile, bound, branch).map_err(|e| e.to_string())?;

        let grid = self.scan.u_grid();
        let r = profile.r();
        let mut beta_checked = 0u64;
        let mut beta_failure = None;
        let mut idx = vec![0usize; r];
        'grid: loop {
            let u: Vec<Rational> = idx.iter().map(|&i| grid[i].clone()).collect();
            let chain = beta_chain(&profile, &u).map_err(|e| e.to_string())?;
            beta_checked += 1;
            if !chain.passed() {
                beta_failure = Some((u, chain));
                break;
            }
            for pos in (0..r).rev() {
                if idx[pos] + 1 < grid.len() {
                    idx[pos] += 1;
                    continue 'grid;
                }
                idx[pos] = 0;
            }
            break;
        }

        let mut report = Report::new(request);
        report.push("inequality_constant", &val.alpha);
        let branch_name = match branch {
            Branch::Lct => "lct",
            Branch::Divisorial => "divisorial",
        };
        let violation = val.violation.as_ref().map(|v| {
            json!({ "b": v.b, "lhs": v.lhs.to_string(), "rhs": v.rhs.to_string() })
        });
        let beta_fail = beta_failure.as_ref().map(|(u, c)| {
            json!({
                "u": u.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "chain": c.chain,
                "betas": c.betas.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        });
        report.details = json!({
            "branch": branch_name,
            "bound": bound,
            "tuples_checked": val.tuples_checked,
            "valuation_violation": violation,
            "u_grid": { "max": self.scan.u_max.to_string(), "step": self.scan.u_step.to_string() },
            "beta_vectors_checked": beta_checked,
            "beta_failure": beta_fail,
        });
        report.text.push(format!(
            "valuation inequality ({branch_name} branch, B = {bound}): {} tuples, {}",
            val.tuples_checked,
            if val.passed() { "no violation".to_string() } else { format!("violated at b = {:?}", val.violation.as_ref().map(|v| &v.b)) }
        ));
        report.text.push(format!(
            "beta chain (u in 0..={} step {}): {beta_checked} vectors, {}",
            self.scan.u_max,
            self.scan.u_step,
            match &beta_failure {
                None => "no violation".to_string(),
                Some((u, _)) => format!("violated at u = [{}]", u.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
            }
        ));
        report.status = if val.passed() && beta_failure.is_none() { Status::Pass } else { Status::Fail };
        report.provenance.push(match branch {
            Branch::Lct => "degree sum exceeds n: checks n*b0 + sum b_j >= alpha_p * min_j (b0*d_j + b_j) for every grid tuple".into(),
            Branch::Divisorial => "degree sum at most n: checks (n*b0 + sum b_j) / min_j (b0*d_j + b_j) >= alpha_r with b_r = 0".into(),
        });
        report.provenance.push("beta chain: each beta_{k_q} dominates min(alpha_{k_q}, beta_{k_{q+1}}) and the last one min(alpha_r, r)".into());
        report.warnings.push(GRID.into());
        Ok(report)
    }
}

/// Merges sub-reports: any input error makes the batch an error, otherwise
/// any failed check makes it a failure.
pub fn aggregate(request: &Request, reports: Vec<Report>) -> Report {
    let mut report = Report::new(request);
    let passed = reports.iter().filter(|r| r.status != Status::Error && r.status != Status::Fail).count();
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let errors = reports.iter().filter(|r| r.status == Status::Error).count();
    report.status = if errors > 0 {
        Status::Error
    } else if failed > 0 {
        Status::Fail
    } else {
        Status::Pass
    };
    report.details = json!({ "total": reports.len(), "passed": passed, "failed": failed, "errors": errors });
    report.text.push(format!("batch: {passed}/{} passed", reports.len()));
    report.reports = reports;
    report
}

fn profile_results(report: &mut Report, profile: &DegreeProfile, shift: usize) -> serde_json::Value {
    let table = alpha_table::<Rational>(profile);
    let shift_q = Rational::from_usize(shift);
    report.push("minimal_exponent", &(table.minimum.clone() + shift_q.clone()));
    for (i, a) in table.alphas.iter().enumerate() {
        report.push(format!("alpha_{}", i + 1), a);
    }
    report.push("lct", &(lct_cone::<Rational>(profile) + shift_q));
    let pred = predicates::<Rational>(profile);
    json!({
        "pivot": table.pivot,
        "predicates": {
            "rational_singularities": pred.rational_singularities,
            "log_canonical": pred.log_canonical,
            "exceeds_lct": pred.exceeds_lct,
        },
    })
}

fn formula(request: &Request, n: usize, degrees: &[u32]) -> Result<Report, String> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    let normalized = normalize_degree_one(n, degrees).map_err(|e| match e {
        minexp_core::Error::Codimension { n, r } => {
            format!("codimension constraint violated: r = {r} equations cannot cut out a complete intersection in dimension n = {n}")
        }
        e => e.to_string(),
    })?;
    let mut report = Report::new(request);
    match &normalized {
        Normalized::Smooth { shift } => {
            report.results.push(Quantity::exponent("minimal_exponent", &normalized.minimal_exponent()));
            report.push("lct", &Rational::from_usize(*shift));
            report.details = json!({
                "smooth": true,
                "reduction": { "removed": shift },
                "predicates": { "rational_singularities": true, "log_canonical": true, "exceeds_lct": true },
            });
            report.text.push("all equations are linear: the cone is smooth".into());
        }
        Normalized::Reduced { profile, shift } => {
            if profile.r() > profile.n() {
                return Err(format!(
                    "codimension constraint violated: r = {} exceeds n = {} after removing linear equations",
                    profile.r(),
                    profile.n()
                ));
            }
            let mut details = profile_results(&mut report, profile, *shift);
            details["reduction"] = json!({ "removed": shift, "n": profile.n(), "degrees": profile.degrees() });
            if *shift > 0 {
                report.text.push(format!(
                    "removed {shift} linear equation(s): reduced to n = {}, degrees {:?}; values shifted by {shift}",
                    profile.n(),
                    profile.degrees()
                ));
            }
            report.text.push(format!("pivot p = {}", details["pivot"]));
            for key in ["rational_singularities", "log_canonical", "exceeds_lct"] {
                report.text.push(format!("{key}: {}", details["predicates"][key]));
            }
            report.details = details;
        }
    }
    let shift = match normalized {
        Normalized::Reduced { shift, .. } => {
            report.provenance.push(
                "minimal_exponent = min_i alpha_i with alpha_i = i + (n - d_1 - ... - d_i)/d_i, attained at the pivot p".into(),
            );
            shift
        }
        Normalized::Smooth { shift } => {
            report.provenance.push("the minimal exponent of a smooth subscheme is infinite".into());
            shift
        }
    };
    report.provenance.push("lct = min(minimal_exponent, r); rational singularities iff minimal_exponent > r".into());
    if shift > 0 {
        report.provenance.push(
            "each linear equation is removed by restricting to a hyperplane, which raises the exponent by one; \
             alpha_i refer to the reduced profile"
                .into(),
        );
    }
    report.warnings.push(HYPOTHESES.into());
    Ok(report)
}

fn default_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn parse_rationals(values: &[RationalInput]) -> Result<Vec<Rational>, String> {
    values.iter().map(RationalInput::parse).collect()
}

fn weighted(
    request: &Request,
    weights: &[RationalInput],
    orders: Option<&[RationalInput]>,
    polys: Option<&[String]>,
    vars: Option<&[String]>,
) -> Result<Report, String> {
    let w = WeightVector::new(parse_rationals(weights)?).map_err(|e| e.to_string())?;
    let mut report = Report::new(request);
    let orders: Vec<Rational> = match (orders, polys) {
        (Some(o), None) => parse_rationals(o)?,
        (None, Some(ps)) => {
            let names = vars.map_or_else(|| default_vars(w.len()), <[String]>::to_vec);
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let mut out = Vec::new();
            for (i, text) in ps.iter().enumerate() {
                let f = Poly::parse(text, &refs).map_err(|e| format!("polynomial {}: {e}", i + 1))?;
                match f.order() {
                    None => return Err(format!("polynomial {} is zero", i + 1)),
                    Some(0 | 1) => {
                        return Err(format!(
                            "polynomial {} is not in the square of the maximal ideal (it has a term of degree at most one)",
                            i + 1
                        ))
                    }
                    _ => {}
                }
                let order = f.weighted_order(&w).map_err(|e| format!("polynomial {}: {e}", i + 1))?;
                report.push(format!("wt_{}", i + 1), &order);
                out.push(order);
            }
            out
        }
        _ => return Err("give exactly one of orders or polynomials".into()),
    };
    if orders.len() > w.len() {
        return Err(format!(
            "codimension constraint violated: {} equations in dimension {}",
            orders.len(),
            w.len()
        ));
    }
    let profile = WeightedProfile::new(w.clone(), orders).map_err(|e| e.to_string())?;
    let bound = weighted_upper_bound(&profile);
    report.push("weight_sum", &w.total());
    report.push("upper_bound", &bound.value);
    report.details = json!({ "qualifier": "upper_bound", "orders": profile.orders().iter().map(ToString::to_string).collect::<Vec<_>>() });
    report.text.push("label: UPPER BOUND".into());
    report.provenance.push("upper_bound = min_i i + (w - e_1 - ... - e_i)/e_i with w the weight sum and e_i the sorted weighted orders".into());
    report.warnings.push(UPPER_BOUND.into());
    report.warnings.push(HYPOTHESES.into());
    Ok(report)
}

fn newton(request: &Request, support: Option<&[Vec<u32>]>, poly: Option<&str>, vars: Option<&[String]>) -> Result<Report, String> {
    let support = match (support, poly) {
        (Some(points), None) => MonomialSupport::new(points.to_vec()).map_err(|e| e.to_string())?,
        (None, Some(text)) => {
            let names = vars.ok_or("a polynomial needs its variable list")?;
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let f = Poly::parse(text, &refs).map_err(|e| e.to_string())?;
            MonomialSupport::from_poly(&f).map_err(|e| e.to_string())?
        }
        _ => return Err("give exactly one of support or polynomial".into()),
    };
    let (exponent, diag) = newton_exponent::<Rational>(&support).map_err(|e| e.to_string())?;
    let certified = diag.verify(&support);
    let mut report = Report::new(request);
    report.push("c", &diag.c);
    report.push("exponent", &exponent.value);
    let strs = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    report.details = json!({
        "support": support.points(),
        "convex_weights": strs(&diag.weights),
        "dual_weights": strs(&diag.dual),
        "certificate_verified": certified,
    });
    report.text.push(format!("convex weights: [{}]", strs(&diag.weights).join(", ")));
    report.text.push(format!("dual weights:   [{}]", strs(&diag.dual).join(", ")));
    report.text.push(format!("certificate verified: {certified}"));
    report.status = if certified { Status::Ok } else { Status::Fail };
    report.provenance.push("c = min { t : (t, ..., t) in the Newton polyhedron }; exponent = 1/c".into());
    report.warnings.push(NONDEGENERATE.into());
    Ok(report)
}

fn resolve(request: &Request, n: usize, degrees: &[u32]) -> Result<Report, String> {
    let profile = DegreeProfile::new(n, degrees.to_vec()).map_err(|e| e.to_string())?;
    let sim = simulate_resolution(&profile).map_err(|e| e.to_string())?;
    let bound = sim.lower_bound::<Rational>();
    let formula = alpha_table::<Rational>(&profile).minimum;
    let agrees = bound == formula;
    let mut report = Report::new(request);
    report.push("lower_bound", &bound);
    report.push("formula_value", &formula);
    for (i, row) in sim.ledger.rows.iter().enumerate() {
        report.push(format!("ratio_E{}", i + 1), &row.ratio::<Rational>());
    }
    report.text.push(format!("mode: {:?}", sim.mode));
    report.text.push("ledger:".into());
    for row in &sim.ledger.rows {
        report.text.push(format!("  {:>4}  a = {:>3}  k = {:>3}", row.label, row.a, row.k));
    }
    report.text.push("trace:".into());
    report.text.extend(sim.render_trace().lines().map(|l| format!("  {l}")));
    match &sim.factorization_witness {
        Some(w) => report.text.push(format!(
            "factorization witness: {} * ({}) {}",
            w.common_factor,
            w.residual.join(", "),
            if w.holds { "holds" } else { "FAILS" }
        )),
        None => report.text.push("factorization witness: none (log resolution only)".into()),
    }
    report.text.push(format!("cross-check lower_bound == formula_value: {}", if agrees { "PASS" } else { "FAIL" }));
    report.details = json!({
        "mode": sim.mode,
        "ledger": sim.ledger.rows.iter().map(|r| json!({ "label": r.label, "a": r.a, "k": r.k })).collect::<Vec<_>>(),
        "factorization_witness": sim.factorization_witness,
        "trace": sim.trace,
        "case3": sim.case3,
        "side_charts_checked": sim.side_charts_checked,
        "side_charts_divisorial": sim.side_charts_divisorial,
        "cross_check": agrees,
        "chart_checks": sim.checks_pass(),
    });
    report.status = if agrees && sim.checks_pass() { Status::Pass } else { Status::Fail };
    report.provenance.push("lower_bound = min over exceptional divisors of (k_j + 1)/a_j on the simulated resolution".into());
    report.provenance.push("formula_value = closed-form minimum of the alpha sequence".into());
    report.warnings.push(HYPOTHESES.into());
    report.warnings.push("charts model generic equations of these degrees; polynomial data enters only through the degrees".into());
    Ok(report)
}

fn probe(request: &Request, polys: &[String], vars: &[String], field: u64, limit: Option<u64>) -> Result<Report, String> {
    let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    let fs: Vec<Poly> = polys
        .iter()
        .enumerate()
        .map(|(i, p)| Poly::parse(p, &refs).map_err(|e| format!("polynomial {}: {e}", i + 1)))
        .collect::<Result<_, _>>()?;
    let verdict = probe_transversality(&fs, field, limit.unwrap_or(PROBE_LIMIT)).map_err(|e| e.to_string())?;
    let mut report = Report::new(request);
    report.details = serde_json::to_value(&verdict).expect("probe reports serialize");
    report.text.push(format!("verdict: {}", report.details["verdict"].as_str().unwrap_or("?")));
    report.provenance.push("scans F_q^n minus the origin for points where the vanishing equations have dependent gradients".into());
    report.warnings.push(PROBE.into());
    Ok(report)
}
