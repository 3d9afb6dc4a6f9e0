use std::ops::RangeInclusive;
use std::path::PathBuf;

use cobdist::algebra::rational::fmt_rational;
use cobdist::cobordism::{bounds_table, chi_d_bounds, chi_dn_bounds, theorem1_chain, TableRow};
use cobdist::hirano::verify_hirano;
use cobdist::invariants::{
    corollary13_grid, dsm_lower, LipschitzInvariant, SignatureInvariant, TableInvariant,
    FAST_D_MAX,
};
use cobdist::torus::{signature, TorusLink};
use cobdist::{Error, Result};
use serde_json::json;

use crate::render::{self, label, opt, Rendered};

pub fn sig(p: i64, q: i64) -> Result<Rendered> {
    let link = TorusLink::new(p, q)?;
    let s = signature(link);
    Ok(Rendered::scalar(
        &["link", "signature"],
        vec![link.to_string(), s.to_string()],
        s.to_string(),
        json!({ "link": link, "signature": s }),
    ))
}

pub fn bounds(d: i64, n: Option<i64>) -> Result<Rendered> {
    let Some(n) = n else {
        let b = chi_d_bounds(d)?;
        let row = vec![
            d.to_string(),
            b.lower.to_string(),
            b.upper.to_string(),
            opt(b.exact()),
            label(&b.upper_method),
        ];
        let mut value = render::json(&b);
        value["d"] = json!(d);
        return Ok(Rendered::table(
            &["d", "lower", "upper", "exact", "upper_method"],
            &[row],
            value,
        ));
    };
    let b = chi_dn_bounds(d, n)?;
    let row = vec![
        d.to_string(),
        n.to_string(),
        b.interval.lower.to_string(),
        b.interval.upper.to_string(),
        opt(b.interval.exact()),
        b.branch.to_string(),
        label(&b.interval.upper_method),
        fmt_rational(&b.envelope_lower),
        fmt_rational(&b.envelope_upper),
    ];
    Ok(Rendered::table(
        &[
            "d",
            "N",
            "lower",
            "upper",
            "exact",
            "branch",
            "upper_method",
            "envelope_lower",
            "envelope_upper",
        ],
        &[row],
        render::json(&b),
    ))
}

pub fn table(d: RangeInclusive<i64>, n: RangeInclusive<i64>, check: bool) -> Result<Rendered> {
    let rows = bounds_table(d, n)?;
    let violations: Vec<&TableRow> = rows.iter().filter(|r| r.lower > r.upper).collect();
    for r in &violations {
        eprintln!("violation: d={} N={} lower {} > upper {}", r.d, r.n, r.lower, r.upper);
    }
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.cells().to_vec()).collect();
    Ok(Rendered::table(&TableRow::HEADER, &cells, render::json(&rows))
        .with_pass(!check || violations.is_empty()))
}

pub fn verify_hirano_cmd(m: u32) -> Result<Rendered> {
    let r = verify_hirano(m)?;
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    let header = [
        "m",
        "degree",
        "singular_count",
        "representative",
        "line",
        "orbit_size",
        "milnor_resultant",
        "milnor_local_algebra",
        "hessian_corank",
        "a_type",
        "delta",
        "genus",
        "audit",
        "result",
    ];
    let rows: Vec<Vec<String>> = r
        .orbits
        .iter()
        .map(|o| {
            vec![
                r.m.to_string(),
                r.degree.to_string(),
                r.singular_count.to_string(),
                o.representative.clone(),
                o.line.clone(),
                o.orbit_size.to_string(),
                o.milnor_resultant.to_string(),
                o.milnor_local_algebra.to_string(),
                o.hessian_corank.to_string(),
                opt(o.a_type.map(|k| format!("A{k}"))),
                opt(o.delta),
                r.genus.to_string(),
                if r.audit.ok() { "ok" } else { "failed" }.to_string(),
                verdict.to_string(),
            ]
        })
        .collect();
    let mut md = format!(
        "# Hirano curve, m = {}\n\n- degree: {}\n- sha256: {}\n- square-free: {}\n- singular points: {}\n- genus: {} (closed form {})\n",
        r.m, r.degree, r.polynomial_sha256, r.squarefree, r.singular_count, r.genus, r.genus_display
    );
    if let Some(fs) = &r.factors {
        md.push_str(&format!("- factors: {}\n", fs.iter().map(|f| format!("({f})")).collect::<String>()));
    }
    md.push('\n');
    md.push_str(&render::md_table(&header[3..11], &rows.iter().map(|x| x[3..11].to_vec()).collect::<Vec<_>>()));
    md.push('\n');
    let audit: Vec<Vec<String>> = r
        .audit
        .steps
        .iter()
        .map(|s| vec![s.name.clone(), s.value.to_string(), s.expected.to_string(), s.ok.to_string()])
        .collect();
    md.push_str(&render::md_table(&["audit step", "value", "expected", "ok"], &audit));
    md.push_str(&format!("\n**{verdict}**\n"));
    Ok(Rendered {
        csv: render::csv_string(&header, &rows),
        md,
        json: render::json(&r),
        pass: r.pass,
    })
}

pub fn check_cor13(d_max: i64, invariant: Option<&str>, slow: bool) -> Result<Rendered> {
    if d_max < 2 {
        return Err(Error::Usage(format!("--d-max must be at least 2, got {d_max}")));
    }
    let inv: Box<dyn LipschitzInvariant> = match invariant {
        None | Some("sigma") => {
            if d_max > FAST_D_MAX && !slow {
                return Err(Error::Usage(format!(
                    "--d-max above {FAST_D_MAX} computes large signatures; pass --slow or set COBDIST_SLOW=1"
                )));
            }
            Box::new(SignatureInvariant)
        }
        Some(spec) => match spec.strip_prefix("csv:") {
            Some(path) => Box::new(TableInvariant::from_path(&PathBuf::from(path))?),
            None => {
                return Err(Error::Usage(format!(
                    "--invariant takes `sigma` or `csv:<path>`, got `{spec}`"
                )))
            }
        },
    };
    let reports = corollary13_grid(d_max, inv.as_ref())?;
    let header = [
        "d",
        "N",
        "knot",
        "chi",
        "genus",
        "genus_formula",
        "value_torus",
        "value_knot",
        "difference",
        "ratio",
        "pass",
    ];
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.d.to_string(),
                r.n.to_string(),
                r.knot.to_string(),
                r.chi.to_string(),
                r.genus.to_string(),
                r.genus_formula.to_string(),
                fmt_rational(&r.value_torus),
                fmt_rational(&r.value_knot),
                fmt_rational(&r.difference),
                fmt_rational(&r.ratio),
                r.pass.to_string(),
            ]
        })
        .collect();
    let pass = reports.iter().all(|r| r.pass);
    Ok(Rendered::table(&header, &rows, render::json(&reports)).with_pass(pass))
}

pub fn dsm_lower_cmd(n: u64) -> Rendered {
    let d = dsm_lower(n);
    Rendered::scalar(
        &["n", "dsm_lower"],
        vec![n.to_string(), d.to_string()],
        d.to_string(),
        json!({ "n": n, "dsm_lower": d }),
    )
}

pub fn chain(d: i64) -> Result<Rendered> {
    let chain = theorem1_chain(d)?;
    let total = chain.verify()?;
    let mut running = 0;
    let rows: Vec<Vec<String>> = chain
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            running += e.chi;
            vec![
                (i + 1).to_string(),
                e.source.to_string(),
                e.target.to_string(),
                e.chi.to_string(),
                label(&e.provenance),
                running.to_string(),
            ]
        })
        .collect();
    let header = ["step", "source", "target", "chi", "provenance", "cumulative_chi"];
    let mut out = Rendered::table(
        &header,
        &rows,
        json!({ "d": d, "edges": chain, "chi": total }),
    );
    out.md.push_str(&format!("\ntotal chi: {total}\n"));
    Ok(out)
}
