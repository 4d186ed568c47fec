//! One function per subcommand, each producing a [`RunReport`].

use conformal_em::curvature::{self, Metric};
use conformal_em::exact::{self, int, Exact};
use conformal_em::invariants::{self, moduli_scan};
use conformal_em::{compactify, page, par, Branch, CompactSolution, Error, Result};
use serde_json::{Map, Value};

use crate::report::{exact_value, float, fmt_f64, object, RunReport, Table};

/// Settings shared by every subcommand.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub tol: f64,
    pub samples: usize,
}

fn solution_inputs(r: &mut RunReport, k: u32, a: &Exact, b: &Exact, branch: Branch) {
    r.input("k", k);
    r.input("a", a.to_string());
    r.input("b", b.to_string());
    r.input("branch", branch.to_string());
}

fn solution_value(sol: &CompactSolution) -> Value {
    let psi: Vec<Value> = sol
        .psi()
        .coeffs()
        .iter()
        .map(|c| c.to_string().into())
        .collect();
    object([
        ("k", sol.k().into()),
        ("branch", sol.branch().to_string().into()),
        ("a", exact_value(sol.a())),
        ("b", exact_value(sol.b())),
        ("alpha", exact_value(sol.alpha())),
        ("e", exact_value(sol.e())),
        ("psi_coefficients_ascending", psi.into()),
        ("psi", sol.psi().to_string().into()),
    ])
}

fn invariants_value(sol: &CompactSolution) -> Result<Value> {
    let inv = invariants::report(sol)?;
    Ok(object([
        ("s_h", exact_value(&inv.s_h)),
        ("v_h_over_pi2", exact_value(&inv.v_h_over_pi2)),
        ("v_h", float(inv.v_h)),
        ("sv", float(inv.sv)),
        ("area_h_cminus", float(inv.area_h_cminus)),
        ("area_h_cplus", float(inv.area_h_cplus)),
        ("einstein", inv.einstein.into()),
        (
            "einstein_residual",
            exact_value(&page::einstein_residual(sol)),
        ),
    ]))
}

fn class_value(sol: &CompactSolution) -> Value {
    let class = sol.kahler_class();
    let mut m = Map::new();
    m.insert(
        "area_cminus_over_2pi".into(),
        exact_value(&class.area_cminus),
    );
    m.insert("area_cplus_over_2pi".into(), exact_value(&class.area_cplus));
    m.insert("area_f_over_2pi".into(), exact_value(&class.area_f));
    if let Some(r) = class.u_over_v() {
        m.insert("u_over_v".into(), exact_value(&r));
    }
    Value::Object(m)
}

pub fn build(k: u32, a: Exact, b: Exact, branch: Branch) -> Result<RunReport> {
    let mut r = RunReport::new("build");
    solution_inputs(&mut r, k, &a, &b, branch);
    let sol = CompactSolution::build(k, a, b, branch)?;
    let validation = sol.validate();
    let checks: Map<String, Value> = validation
        .checks
        .iter()
        .map(|(name, ok)| ((*name).to_owned(), (*ok).into()))
        .collect();
    for (name, ok) in &validation.checks {
        r.check(name, *ok);
    }
    let class = sol.profile()?.classify();
    r.output("solution", solution_value(&sol));
    r.output("validation", Value::Object(checks));
    r.output(
        "classification",
        object([
            ("extremal", class.extremal.into()),
            ("csck", class.csck.into()),
            ("scalar_flat_kahler", class.scalar_flat_kahler.into()),
            ("einstein", class.einstein.map_or(Value::Null, Value::from)),
        ]),
    );
    r.output("invariants", invariants_value(&sol)?);
    r.output("kahler_class", class_value(&sol));
    Ok(r)
}

pub struct VerifyArgs {
    pub k: u32,
    pub a: Exact,
    pub b: Exact,
    pub branch: Branch,
    pub perturb_alpha: Option<Exact>,
    pub full_tensor: bool,
}

pub fn verify(args: VerifyArgs, s: Settings) -> Result<RunReport> {
    let VerifyArgs {
        k,
        a,
        b,
        branch,
        perturb_alpha,
        full_tensor,
    } = args;
    let mut r = RunReport::new("verify");
    solution_inputs(&mut r, k, &a, &b, branch);
    r.input("samples", s.samples);
    r.input("tol", float(s.tol));
    let sol = CompactSolution::build(k, a, b, branch)?;
    let mut profile = sol.profile()?;
    if let Some(eps) = &perturb_alpha {
        r.input("perturb_alpha", eps.to_string());
        profile = profile.with_alpha(sol.alpha() * (int(1) + eps))?;
    }
    let rep = curvature::report(&profile, s.samples)?;
    let j_scale = rep.max_tracefree_norm.max(1.0);
    r.check(
        "constant scalar curvature",
        rep.constant_scalar_residual < s.tol,
    );
    r.check("first structure equations", rep.max_first_structure < s.tol);
    r.check("J-invariance", rep.max_j_residual < s.tol * j_scale);
    let mut residuals = Map::new();
    residuals.insert(
        "constant_scalar".into(),
        float(rep.constant_scalar_residual),
    );
    residuals.insert("first_structure".into(), float(rep.max_first_structure));
    residuals.insert("j_invariance".into(), float(rep.max_j_residual));
    residuals.insert("tracefree_max".into(), float(rep.max_tracefree_norm));
    residuals.insert("tracefree_min".into(), float(rep.min_tracefree_norm));
    if rep.einstein {
        r.output("mode", "einstein");
        r.output(
            "note",
            "h is Einstein on every sample; field reconstruction skipped",
        );
    } else {
        r.output("mode", "einstein-maxwell");
        let em = rep.max_em_residual.unwrap_or(f64::INFINITY);
        let (d, dstar) = rep
            .max_maxwell_residual
            .unwrap_or((f64::INFINITY, f64::INFINITY));
        let asd = rep.max_asd_residual.unwrap_or(f64::INFINITY);
        r.check("Einstein-Maxwell equation", em < s.tol);
        r.check("dF = 0", d < s.tol);
        r.check("d*F = 0", dstar < s.tol);
        r.check("F- anti-self-dual", asd < s.tol);
        residuals.insert("einstein_maxwell".into(), float(em));
        residuals.insert("maxwell_df".into(), float(d));
        residuals.insert("maxwell_dstar_f".into(), float(dstar));
        residuals.insert("anti_self_dual".into(), float(asd));
    }
    r.output("kappa", float(rep.kappa));
    r.output("residuals", Value::Object(residuals));
    if full_tensor {
        let rows = par::try_map(&rep.rows, |row| -> Result<Value> {
            let ric = curvature::ricci(&profile, row.x, Metric::Rescaled)?;
            let tensor: Vec<Value> = ric
                .tensor
                .iter()
                .map(|l| l.iter().map(|&v| float(v)).collect::<Vec<_>>().into())
                .collect();
            Ok(object([
                ("x", float(row.x)),
                ("ricci_h", tensor.into()),
                ("s_h", float(ric.scalar)),
            ]))
        })?;
        r.output("rows", rows);
    }
    let opt = |v: Option<f64>| v.map_or(String::new(), fmt_f64);
    r.table = Some(Table {
        header: vec![
            "x",
            "s_h",
            "tracefree_norm",
            "j_residual",
            "em_residual",
            "maxwell_df",
            "maxwell_dstar_f",
        ],
        rows: rep
            .rows
            .iter()
            .map(|row| {
                vec![
                    fmt_f64(row.x),
                    fmt_f64(row.s_h),
                    fmt_f64(row.tracefree_norm),
                    fmt_f64(row.j_residual),
                    opt(row.em_residual),
                    opt(row.maxwell_residual.map(|m| m.0)),
                    opt(row.maxwell_residual.map(|m| m.1)),
                ]
            })
            .collect(),
    });
    Ok(r)
}

pub fn enumerate(u: Exact, v: Exact) -> Result<RunReport> {
    let mut r = RunReport::new("enumerate");
    r.input("u", u.to_string());
    r.input("v", v.to_string());
    let list = compactify::enumerate_k1(&u, &v)?;
    let ratio = &u / &v;
    r.output("u_over_v", exact_value(&ratio));
    r.output("count", list.len());
    if ratio == int(9) {
        r.output(
            "note",
            "u/v = 9: the Second pair merges with the First solution",
        );
    }
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (i, e) in list.iter().enumerate() {
        let sol = &e.solution;
        let inv = invariants::report(sol)?;
        rows.push(vec![
            i.to_string(),
            sol.branch().to_string(),
            fmt_f64(exact::to_f64(sol.a())),
            fmt_f64(exact::to_f64(sol.b())),
            fmt_f64(exact::to_f64(sol.alpha())),
            fmt_f64(exact::to_f64(&inv.s_h)),
            fmt_f64(inv.sv),
        ]);
        let mut m = match solution_value(sol) {
            Value::Object(m) => m,
            _ => unreachable!("solution_value builds an object"),
        };
        m.insert("merged".into(), e.merged.into());
        m.insert(
            "zeta".into(),
            e.zeta.as_ref().map_or(Value::Null, exact_value),
        );
        m.insert("invariants".into(), invariants_value(sol)?);
        entries.push(Value::Object(m));
    }
    r.output("solutions", entries);
    if ratio > int(9) {
        let pair = invariants::area_ratio_involution_check(&u, &v)?;
        let reciprocal = &pair.ratio[0] * &pair.ratio[1] == int(1);
        r.check("Second pair area ratios reciprocal", reciprocal);
        r.output(
            "second_pair",
            object([
                (
                    "area_ratios",
                    pair.ratio
                        .iter()
                        .map(exact_value)
                        .collect::<Vec<_>>()
                        .into(),
                ),
                (
                    "sv",
                    pair.sv.iter().map(|&v| float(v)).collect::<Vec<_>>().into(),
                ),
            ]),
        );
    }
    r.table = Some(Table {
        header: vec!["index", "branch", "a", "b", "alpha", "s_h", "sv"],
        rows,
    });
    Ok(r)
}

pub fn page_cmd() -> Result<RunReport> {
    let mut r = RunReport::new("page");
    let p = page::page_point()?;
    r.check(
        "Einstein condition changes sign across the bracket",
        p.einstein_certified,
    );
    r.output("z", float(p.z));
    r.output("z_decimal", p.z_decimal);
    r.output("z_rational", p.z_rational.to_string());
    r.output(
        "bracket",
        vec![p.bracket.0.to_string(), p.bracket.1.to_string()],
    );
    r.output("radical_gap", float(p.radical_gap));
    r.output("u_over_v", float(p.u_over_v));
    r.output("alpha_over_a", float(p.alpha_over_a));
    r.output("sv", float(p.sv));
    r.output("einstein_residual_at_z", float(p.residual_at_z));
    r.output("einstein_certified", p.einstein_certified);
    Ok(r)
}

pub fn moduli(omega_d: Exact, omega_f: Exact) -> Result<RunReport> {
    let mut r = RunReport::new("moduli");
    r.input("omega_d", omega_d.to_string());
    r.input("omega_f", omega_f.to_string());
    let scan = moduli_scan(exact::to_f64(&omega_d), exact::to_f64(&omega_f))?;
    let gaps = scan.bound_gaps();
    let mut rows = Vec::new();
    let mut records = Vec::new();
    for (rec, (_, gap)) in scan.records.iter().zip(&gaps) {
        rows.push(vec![
            rec.k.to_string(),
            fmt_f64(rec.b_over_a),
            fmt_f64(rec.a),
            fmt_f64(rec.b),
            fmt_f64(rec.sv),
            fmt_f64(*gap),
        ]);
        records.push(object([
            ("k", rec.k.into()),
            ("b_over_a", float(rec.b_over_a)),
            ("a", float(rec.a)),
            ("b", float(rec.b)),
            ("sv", float(rec.sv)),
            ("bound_gap", float(*gap)),
        ]));
    }
    r.output("admissible_k", scan.admissible_k.clone());
    r.output("records", records);
    r.output("component_lower_bound", scan.component_lower_bound);
    r.table = Some(Table {
        header: vec!["k", "b_over_a", "a", "b", "sv", "bound_gap"],
        rows,
    });
    Ok(r)
}

pub struct SweepArgs {
    pub k: u32,
    pub branch: Branch,
    pub a: Exact,
    pub from: Exact,
    pub to: Exact,
    pub steps: usize,
}

/// One row per `b/a` on an evenly spaced grid, computed in parallel and
/// reported in grid order.
pub fn sweep(args: SweepArgs) -> Result<RunReport> {
    let SweepArgs {
        k,
        branch,
        a,
        from,
        to,
        steps,
    } = args;
    if steps < 2 {
        return Err(Error::InvalidInput("--steps must be at least 2".into()));
    }
    if from <= int(1) || to <= from {
        return Err(Error::InvalidInput("need 1 < --from < --to".into()));
    }
    let mut r = RunReport::new("sweep");
    r.input("k", k);
    r.input("branch", branch.to_string());
    r.input("a", a.to_string());
    r.input("from", from.to_string());
    r.input("to", to.to_string());
    r.input("steps", steps);
    let span = &to - &from;
    let grid: Vec<Exact> = (0..steps)
        .map(|i| &from + &span * Exact::new((i as i64).into(), ((steps - 1) as i64).into()))
        .collect();
    let rows = par::try_map(&grid, |z| -> Result<[f64; 5]> {
        let sol = CompactSolution::build(k, a.clone(), &a * z, branch)?;
        let inv = invariants::report(&sol)?;
        Ok([
            exact::to_f64(z),
            inv.sv,
            exact::to_f64(&inv.s_h),
            inv.v_h,
            exact::to_f64(&page::einstein_residual(&sol)),
        ])
    })?;
    r.output("rows", rows.len());
    r.table = Some(Table {
        header: vec!["parameter", "sv", "s_h", "v_h", "einstein_residual"],
        rows: rows
            .iter()
            .map(|row| row.iter().map(|&v| fmt_f64(v)).collect())
            .collect(),
    });
    Ok(r)
}
