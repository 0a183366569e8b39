use std::fs;
use std::io::{self, Write};
use std::path::Path;

use adgraph::graph::{ad_matrix, all_pairs_distances, Family};
use adgraph::invariants::{self as inv, BoundReport};
use adgraph::par::Execution;
use adgraph::partitions::{det_partition_summary, is_diametrical_bipartite, ENUMERATION_CAP};
use adgraph::products::{self, ProductKind};
use adgraph::spectra::{
    char_poly_exact, cycle_spectrum_closed, determinant_exact, double_star_charpoly_closed,
    eigenvalues_sym, is_distance_regular, path_charpoly_closed, CharPoly, DEFAULT_TOL,
};
use adgraph::verify::{self, Population, Theorem, VerifyReport};
use adgraph::Error;
use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::json;

use crate::graph_arg::{resolve_either, Resolved};
use crate::{Cli, Command};

/// Runs the command; `Ok(false)` means a check failed.
pub fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Info(g) => info(cli, &g.resolve()?),
        Command::Spectrum {
            graph,
            exact,
            numeric,
            closed,
        } => spectrum(cli, &graph.resolve()?, *exact, *numeric, *closed),
        Command::Det(g) => det(cli, &g.resolve()?),
        Command::Invariants {
            graph,
            planar,
            subset,
        } => invariants(cli, &graph.resolve()?, *planar, subset.as_deref()),
        Command::Verify {
            theorem,
            population,
            sequential,
        } => verify_cmd(cli, theorem, population.as_deref(), *sequential),
        Command::Product { kind, g, h, check } => product(cli, kind, g, h, *check),
        Command::Gen {
            population,
            out_dir,
        } => gen(cli, population, out_dir.as_deref()),
    }
}

fn emit<T: Serialize>(cli: &Cli, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    let body = if cli.json {
        serde_json::to_string_pretty(value)?
    } else {
        text()
    };
    match writeln!(io::stdout().lock(), "{body}") {
        // a closed pipe (`| head`) is not an error worth reporting
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn fmt_values(values: &[f64]) -> String {
    values
        .iter()
        .map(|x| format!("{:.6}", if x.abs() < 5e-13 { 0.0 } else { *x }))
        .collect::<Vec<_>>()
        .join(" ")
}

fn info(cli: &Cli, r: &Resolved) -> Result<bool> {
    let g = &r.graph;
    let diameter = all_pairs_distances(g)?.diameter();
    let profile = inv::degree_profile(g)?;
    let drg = is_distance_regular(g);
    let out = json!({
        "name": r.name,
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "diameter": diameter,
        "bipartite": g.is_bipartite(),
        "diametrical_bipartite": is_diametrical_bipartite(g)?,
        "regular": g.regularity(),
        "ad_regular": profile.is_ad_regular(),
        "ad_degree": profile.ad_regular,
        "distance_regular": drg.is_some(),
        "intersection_array": drg.as_ref().map(ToString::to_string),
    });
    emit(cli, &out, || {
        let mut lines = vec![
            format!("graph                  {}", r.name),
            format!(
                "vertices, edges        {}, {}",
                g.vertex_count(),
                g.edge_count()
            ),
            format!("diameter               {diameter}"),
            format!("bipartite              {}", out["bipartite"]),
            format!("diametrical bipartite  {}", out["diametrical_bipartite"]),
        ];
        lines.push(match profile.ad_regular {
            Some(k) => format!("AD-regular             true (AD degree {k})"),
            None => "AD-regular             false".to_string(),
        });
        lines.push(match &drg {
            Some(a) => format!("distance-regular       true {a}"),
            None => "distance-regular       false".to_string(),
        });
        lines.join("\n")
    })?;
    Ok(true)
}

#[derive(Serialize)]
struct ClosedCheck {
    form: &'static str,
    charpoly: Option<Vec<String>>,
    values: Option<Vec<f64>>,
    agrees: bool,
    max_mismatch: Option<f64>,
}

fn closed_check(r: &Resolved, exact: &CharPoly, numeric: &[f64], tol: f64) -> Result<ClosedCheck> {
    let poly = |cp: CharPoly| ClosedCheck {
        form: "charpoly",
        agrees: &cp == exact,
        charpoly: Some(cp.to_strings()),
        values: None,
        max_mismatch: None,
    };
    Ok(match r.family {
        Some(Family::Path(2)) => poly(CharPoly::from_i64(&[1, 0, -1])),
        Some(Family::Path(n)) => poly(path_charpoly_closed(n)?),
        Some(Family::DoubleStar(a, b)) => poly(double_star_charpoly_closed(a, b)?),
        Some(Family::Cycle(n)) => {
            let closed = cycle_spectrum_closed(n)?;
            let observed = adgraph::spectra::Spectrum::from_values(numeric.to_vec());
            let gap = closed.max_mismatch(&observed);
            ClosedCheck {
                form: "spectrum",
                charpoly: None,
                values: Some(closed.values().to_vec()),
                agrees: gap <= tol,
                max_mismatch: Some(gap),
            }
        }
        _ => bail!("closed forms exist only for path, cycle and double_star families"),
    })
}

fn spectrum(cli: &Cli, r: &Resolved, exact: bool, numeric: bool, closed: bool) -> Result<bool> {
    let ad = ad_matrix(&r.graph)?;
    let numeric = numeric || !(exact || closed);
    let values = eigenvalues_sym(&ad).values().to_vec();
    let cp = (exact || closed).then(|| char_poly_exact(&ad));
    let check = if closed {
        let tol = cli.tol.unwrap_or(DEFAULT_TOL);
        Some(closed_check(
            r,
            cp.as_ref().expect("computed above"),
            &values,
            tol,
        )?)
    } else {
        None
    };
    let out = json!({
        "name": r.name,
        "n": r.graph.vertex_count(),
        "numeric": numeric.then_some(&values),
        "charpoly": exact.then(|| cp.as_ref().map(CharPoly::to_strings)).flatten(),
        "charpoly_text": exact.then(|| cp.as_ref().map(ToString::to_string)).flatten(),
        "closed": check,
    });
    emit(cli, &out, || {
        let mut lines = vec![format!("AD spectrum of {}", r.name)];
        if numeric {
            lines.push(format!("eigenvalues  {}", fmt_values(&values)));
        }
        if exact {
            lines.push(format!(
                "charpoly     {}",
                cp.as_ref().expect("computed above")
            ));
        }
        if let Some(c) = &check {
            let verdict = if c.agrees { "agrees" } else { "DISAGREES" };
            match c.form {
                "spectrum" => lines.push(format!(
                    "closed form  {} ({verdict}, max mismatch {:.2e})",
                    fmt_values(c.values.as_deref().unwrap_or_default()),
                    c.max_mismatch.unwrap_or(f64::NAN)
                )),
                _ => lines.push(format!(
                    "closed form  [{}] ({verdict} with the exact polynomial)",
                    c.charpoly.as_deref().unwrap_or_default().join(", ")
                )),
            }
        }
        lines.join("\n")
    })?;
    Ok(check.is_none_or(|c| c.agrees))
}

fn det(cli: &Cli, r: &Resolved) -> Result<bool> {
    let g = &r.graph;
    let exact = determinant_exact(&ad_matrix(g)?);
    let partitions = match det_partition_summary(g) {
        Ok(summary) => Some(summary),
        Err(Error::SizeCap { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let matches = partitions.as_ref().map(|(d, _)| d == &exact);
    let out = json!({
        "name": r.name,
        "n": g.vertex_count(),
        "det_exact": exact.to_string(),
        "det_partitions": partitions.as_ref().map(|(d, _)| d.to_string()),
        "match": matches,
        "partition_count": partitions.as_ref().map(|(_, c)| c),
    });
    emit(cli, &out, || match &partitions {
        Some((d, count)) => {
            format!(
            "det AD({}) = {exact}\npartition sum = {d} over {count} spanning AD partitions ({})",
            r.name,
            if matches == Some(true) { "match" } else { "MISMATCH" }
        )
        }
        None => format!(
            "det AD({}) = {exact}\npartition sum skipped (n > {ENUMERATION_CAP})",
            r.name
        ),
    })?;
    Ok(matches != Some(false))
}

/// Runs an exact solver, mapping the size cap to `None`.
fn capped(result: adgraph::Result<usize>) -> Result<Option<usize>> {
    match result {
        Ok(x) => Ok(Some(x)),
        Err(Error::SizeCap { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn invariants(cli: &Cli, r: &Resolved, planar: bool, subset: Option<&[usize]>) -> Result<bool> {
    let g = &r.graph;
    let profile = inv::degree_profile(g)?;
    let alpha_ad = capped(inv::ad_independence_number(g))?;
    let chi_ad = capped(inv::ad_chromatic_number(g))?;
    let mut bounds: Vec<BoundReport> = inv::trace_moment_check(g)?.to_vec();
    let mut skipped: Vec<String> = Vec::new();
    let mut note = |name: &str, why: String| skipped.push(format!("{name}: {why}"));
    bounds.push(inv::spectral_radius_bound(g)?);
    match inv::bipartite_least_eig_bound(g) {
        Ok(pair) => bounds.extend(pair),
        Err(e) => note("bipartite_least_eigenvalue", e.to_string()),
    }
    match inv::inertia_bound(g) {
        Ok(b) => bounds.push(b),
        Err(e) => note("inertia", e.to_string()),
    }
    match inv::chromatic_lower_bound(g) {
        Ok(b) => bounds.push(b),
        Err(e) => note("chromatic_lower", e.to_string()),
    }
    if planar {
        match inv::planar_fourcolor_check(g, true) {
            Ok(Some(b)) => bounds.push(b),
            Ok(None) => note("planar_four_color", "chromatic numbers differ".into()),
            Err(e) => note("planar_four_color", e.to_string()),
        }
    }
    let sandwich = inv::mean_degree_sandwich(g)?;
    bounds.extend(sandwich.links.iter().cloned());
    if let Some(s) = subset {
        bounds.push(inv::induced_subgraph_bound(g, s)?);
    }
    match inv::regular_independence_bound(g) {
        Ok(b) => bounds.push(b),
        Err(e) => note("regular_independence", e.to_string()),
    }
    match inv::clique_bound(g) {
        Ok(c) => bounds.extend([c.stated, c.sharpened]),
        Err(e) => note("clique", e.to_string()),
    }
    let ok = bounds.iter().all(|b| b.holds) && sandwich.holds();
    let out = json!({
        "name": r.name,
        "degrees": profile.degrees,
        "ddegrees": profile.ddegrees,
        "addegrees": profile.addegrees,
        "d_hat_sum": profile.d_hat_sum,
        "ad_regular": profile.is_ad_regular(),
        "alpha_ad": alpha_ad,
        "chi_ad": chi_ad,
        "bounds": bounds,
        "not_applicable": skipped,
    });
    emit(cli, &out, || {
        let opt = |x: Option<usize>| x.map_or("over cap".to_string(), |v| v.to_string());
        let mut lines = vec![
            format!("graph        {}", r.name),
            format!("degrees      {:?}", profile.degrees),
            format!("ddegrees     {:?}", profile.ddegrees),
            format!("AD degrees   {:?}", profile.addegrees),
            format!("d_hat sum    {}", profile.d_hat_sum),
            format!("AD-regular   {}", profile.is_ad_regular()),
            format!("alpha_AD     {}", opt(alpha_ad)),
            format!("chi_AD       {}", opt(chi_ad)),
            String::new(),
            format!("{:<36} {:>12} {:>12}  holds", "bound", "left", "right"),
        ];
        for b in &bounds {
            lines.push(format!(
                "{:<36} {:>12.6} {:>12.6}  {}",
                b.name, b.left, b.right, b.holds
            ));
        }
        for s in &skipped {
            lines.push(format!("n/a  {s}"));
        }
        lines.join("\n")
    })?;
    Ok(ok)
}

fn verify_text(r: &VerifyReport) -> String {
    let mut lines = vec![format!(
        "{:<9} {}: {} — {} instances, {} checked, {} skipped, {} failures ({:.0} ms, seed {})",
        r.theorem,
        r.title,
        if r.passed() { "PASS" } else { "FAIL" },
        r.instances,
        r.checked,
        r.skipped,
        r.failures.len(),
        r.wall_time_ms,
        r.seed
    )];
    for f in r.failures.iter().take(5) {
        lines.push(format!("    {}: {}", f.label, f.detail));
        lines.push(format!(
            "      {}",
            f.graph
                .to_edge_list_string()
                .trim_end()
                .replace('\n', " | ")
        ));
    }
    if r.failures.len() > 5 {
        lines.push(format!(
            "    … {} more (use --json for all)",
            r.failures.len() - 5
        ));
    }
    lines.join("\n")
}

fn verify_cmd(
    cli: &Cli,
    theorem: &str,
    population: Option<&str>,
    sequential: bool,
) -> Result<bool> {
    let exec = if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let theorems: Vec<Theorem> = if theorem == "all" {
        Theorem::ALL.to_vec()
    } else {
        vec![theorem.parse()?]
    };
    let reports = theorems
        .into_iter()
        .map(|t| verify::run_spec(t, population, cli.seed, exec))
        .collect::<adgraph::Result<Vec<_>>>()?;
    let ok = reports.iter().all(VerifyReport::passed);
    if reports.len() == 1 {
        emit(cli, &reports[0], || verify_text(&reports[0]))?;
    } else {
        emit(cli, &reports, || {
            reports
                .iter()
                .map(verify_text)
                .collect::<Vec<_>>()
                .join("\n")
        })?;
    }
    Ok(ok)
}

fn product(cli: &Cli, kind: &str, g: &str, h: &str, check: bool) -> Result<bool> {
    let kind: ProductKind = kind.parse()?;
    let (g, h) = (resolve_either(g)?, resolve_either(h)?);
    if check {
        // surface hypothesis failures as errors rather than a silent note
        match kind {
            ProductKind::Join => {}
            ProductKind::Lex => {
                products::lex_ad_spectrum_closed(&g.graph, &h.graph)?;
            }
            ProductKind::Cartesian => {
                products::cartesian_ad_spectrum_closed(&g.graph, &h.graph)?;
            }
        }
    }
    let mut report = products::product_report(kind, (&g.name, &g.graph), (&h.name, &h.graph))?;
    if let Some(tol) = cli.tol {
        report.tolerance = tol;
    }
    if !check {
        report.predicted = None;
        report.max_mismatch = None;
    }
    emit(cli, &report, || {
        let mut lines = vec![
            format!("{} product of {} and {}", report.kind, g.name, h.name),
            format!("vertices {}, diameter {}", report.vertices, report.diameter),
        ];
        if let Some(case) = report.case {
            lines.push(format!("case     {case:?}"));
        }
        lines.push(format!("observed {}", fmt_values(report.observed.values())));
        if let Some(p) = &report.predicted {
            lines.push(format!("closed   {}", fmt_values(p.values())));
            lines.push(format!(
                "max mismatch {:.3e} (tolerance {:.1e}): {}",
                report.max_mismatch.unwrap_or(f64::NAN),
                report.tolerance,
                if report.agrees() {
                    "agrees"
                } else {
                    "DISAGREES"
                }
            ));
        }
        if let (true, Some(n)) = (check, &report.note) {
            lines.push(format!("note     {n}"));
        }
        lines.join("\n")
    })?;
    Ok(!check || report.predicted.is_none() || report.agrees())
}

fn sanitize(label: &str) -> String {
    label
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

fn gen(cli: &Cli, population: &str, out_dir: Option<&Path>) -> Result<bool> {
    let pop = Population::parse(population, cli.seed)?;
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for inst in &pop.instances {
            let path = dir.join(format!("{}.edges", sanitize(&inst.label)));
            fs::write(&path, inst.graph.to_edge_list_string())
                .with_context(|| format!("writing {}", path.display()))?;
        }
        eprintln!("wrote {} graphs to {}", pop.len(), dir.display());
        return Ok(true);
    }
    let items: Vec<_> = pop
        .instances
        .iter()
        .map(|i| json!({ "label": i.label, "graph": i.graph }))
        .collect();
    emit(cli, &items, || {
        pop.instances
            .iter()
            .map(|i| {
                format!(
                    "# {}\n{}",
                    i.label,
                    i.graph.to_edge_list_string().trim_end()
                )
            })
            .collect::<Vec<_>>()
            .join("\n\n")
    })?;
    Ok(true)
}
