use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use replica_knots::bands::{
    crossing_matrix, enumerate_assignments, floor_numbering, seifert_matrix_from_ladder,
    BandCensus, LadderDiagram, NumberingOptions, RungSign, Skeleton,
};
use replica_knots::catalogue::{self, CatalogueEntry};
use replica_knots::exactmoments::{
    coupled_moment_with, wick_moment_bruteforce_with, wick_moment_recursive, MomentReport,
    TraceMonomial,
};
use replica_knots::genfunc::coefficients_at_degree;
use replica_knots::knotpoly::{self, JonesPolynomial, PlanarDiagram};
use replica_knots::poly::{display_laurent, display_poly};
use replica_knots::seifert::{
    alexander_polynomial, conway_polynomial, knot_determinant, normalize_alexander,
    torus_2n_alexander, trivalent_family, SeifertMatrix,
};
use replica_knots::zeros::{
    angular_density, edge_exponent, find_roots_with, trivalent_roots, trivalent_sweep,
    EdgeFitConfig, RootConfig, RootSet, EDGE_ANGLE,
};
use replica_knots::{IntPolynomial, NPolynomial, Rational};

use crate::error::CliError;
use crate::{Format, RunConfig};

fn to_json<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn csv_only(fmt: Format, what: &str) -> Result<(), CliError> {
    if fmt == Format::Csv {
        return Err(CliError::Usage(format!("{what} has no CSV form")));
    }
    Ok(())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Recursive,
    BruteForce,
}

#[derive(Args, Debug)]
pub struct MomentsArgs {
    /// Trace monomial: powers such as `3,3`, or two-matrix words such as `[AB],[AA]`.
    #[arg(long)]
    pub traces: String,
    /// Coupling `c` (as `p/q`) for two-matrix words.
    #[arg(long)]
    pub coupling: Option<String>,
    #[arg(long, value_enum, default_value = "recursive")]
    pub route: RouteArg,
}

fn n_poly_text(p: &NPolynomial) -> String {
    display_poly(p, "N")
}

pub fn moments(a: &MomentsArgs, cfg: &RunConfig) -> Result<String, CliError> {
    let monomial: TraceMonomial = a.traces.parse()?;
    let poly = match &a.coupling {
        Some(c) => {
            let c: Rational = c
                .parse()
                .map_err(|_| CliError::Usage(format!("coupling {c:?} is not a rational p/q")))?;
            coupled_moment_with(&monomial, &c, cfg.pairing_budget)?
        }
        None if !monomial.is_single_matrix() => {
            return Err(CliError::Usage("two-matrix words need --coupling".into()))
        }
        None => match a.route {
            RouteArg::Recursive => wick_moment_recursive(&monomial)?,
            RouteArg::BruteForce => wick_moment_bruteforce_with(&monomial, cfg.pairing_budget)?,
        },
    };
    let report = MomentReport::new(&monomial, &poly);
    Ok(match cfg.format(Format::Text) {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut s = String::from("exponent,coefficient\n");
            for (e, c) in poly.terms() {
                writeln!(s, "{e},{c}").unwrap();
            }
            s
        }
        Format::Text => format!(
            "monomial   {}\npolynomial {}\nreplica    {}\n",
            report.monomial,
            n_poly_text(&poly),
            report.replica
        ),
    })
}

#[derive(Args, Debug)]
pub struct ReplicaSeriesArgs {
    /// Number of variables.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Total degree of the homogeneous part.
    #[arg(long, default_value_t = 16)]
    pub degree: u32,
    /// Keep only non-increasing exponent vectors.
    #[arg(long)]
    pub canonical: bool,
}

pub fn replica_series(a: &ReplicaSeriesArgs, cfg: &RunConfig) -> Result<String, CliError> {
    let mut records = coefficients_at_degree(a.k, a.degree)?;
    if a.canonical {
        records.retain(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]));
    }
    Ok(match cfg.format(Format::Text) {
        Format::Json => {
            let v: Vec<_> = records
                .iter()
                .map(|(e, c)| json!({"exponents": e, "coefficient": c.to_string()}))
                .collect();
            to_json(&v)?
        }
        Format::Csv => {
            let mut s: String = (1..=a.k).map(|i| format!("n{i},")).collect();
            s.push_str("coefficient\n");
            for (e, c) in &records {
                for x in e {
                    write!(s, "{x},").unwrap();
                }
                writeln!(s, "{c}").unwrap();
            }
            s
        }
        Format::Text => records
            .iter()
            .map(|(e, c)| format!("{e:?} {c}\n"))
            .collect(),
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Genus-`g` family with bidiagonal Seifert matrix of size `2g`.
    Trivalent,
    /// `(2, n)` torus knots, `n` odd.
    Torus,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Alexander,
    Matrix,
    Conway,
    Determinant,
    All,
}

#[derive(Args, Debug)]
pub struct SeifertArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Genus (trivalent) or crossing number (torus).
    #[arg(long, alias = "n")]
    pub g: u32,
    #[arg(long, value_enum, default_value = "all")]
    pub emit: Emit,
}

fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn family_matrix(family: Family, g: u32) -> Result<SeifertMatrix, CliError> {
    match family {
        Family::Trivalent => Ok(trivalent_family(g)?),
        Family::Torus => {
            torus_2n_alexander(g)?;
            let d = LadderDiagram::two_strand(vec![RungSign::Under; g as usize]);
            Ok(seifert_matrix_from_ladder(&d)?)
        }
    }
}

pub fn seifert(a: &SeifertArgs, cfg: &RunConfig) -> Result<String, CliError> {
    let v = family_matrix(a.family, a.g)?;
    let alex = normalize_alexander(&alexander_polynomial(&v));
    let conway = conway_polynomial(&v)?;
    let det = knot_determinant(&alex);
    let matrix: Vec<Vec<String>> = v
        .rows()
        .iter()
        .map(|r| r.iter().map(BigInt::to_string).collect())
        .collect();
    let fmt = cfg.format(Format::Text);
    csv_only(fmt, "seifert")?;
    if fmt == Format::Json {
        let mut obj = serde_json::Map::new();
        obj.insert(
            "family".into(),
            json!(format!("{:?}", a.family).to_lowercase()),
        );
        obj.insert("parameter".into(), json!(a.g));
        let all = a.emit == Emit::All;
        if all || a.emit == Emit::Matrix {
            let rows: Vec<Vec<serde_json::Value>> = v
                .rows()
                .iter()
                .map(|r| r.iter().map(|x| json!(i64::try_from(x).ok())).collect())
                .collect();
            obj.insert("matrix".into(), json!(rows));
        }
        if all || a.emit == Emit::Alexander {
            obj.insert("alexander".into(), json!(coeff_strings(&alex)));
        }
        if all || a.emit == Emit::Conway {
            obj.insert("conway".into(), json!(coeff_strings(&conway)));
        }
        if all || a.emit == Emit::Determinant {
            obj.insert("determinant".into(), json!(det.to_string()));
        }
        return to_json(&obj);
    }
    let mut s = String::new();
    let want = |e: Emit| a.emit == Emit::All || a.emit == e;
    if want(Emit::Matrix) {
        for r in &matrix {
            writeln!(s, "{}", r.join(" ")).unwrap();
        }
    }
    if want(Emit::Alexander) {
        writeln!(s, "{}", coeff_strings(&alex).join(" ")).unwrap();
    }
    if want(Emit::Conway) {
        writeln!(s, "{}", coeff_strings(&conway).join(" ")).unwrap();
    }
    if want(Emit::Determinant) {
        writeln!(s, "{det}").unwrap();
    }
    if a.emit == Emit::All {
        s = format!(
            "matrix\n{}alexander   {}\nconway      {}\ndeterminant {det}\n",
            matrix
                .iter()
                .map(|r| format!("  {}\n", r.join(" ")))
                .collect::<String>(),
            display_poly(&alex, "t"),
            display_poly(&conway, "z"),
        );
    }
    Ok(s)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Precise below genus 31, sweep above.
    Auto,
    /// Per-genus multiprecision ladder.
    Precise,
    /// Continuation sweep in double precision.
    Sweep,
}

#[derive(Args, Debug)]
pub struct ZerosArgs {
    #[arg(long, value_enum, default_value = "trivalent")]
    pub family: Family,
    /// Largest genus of the trivalent family.
    #[arg(long, default_value_t = 1)]
    pub gmax: u32,
    /// Crossing number of a torus knot.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: Method,
    /// Emit the pooled |arg| histogram over [0, π/3] and the edge fit instead of roots.
    #[arg(long)]
    pub density: bool,
    #[arg(long, default_value_t = 64)]
    pub bins: usize,
    /// Iteration limit per precision pass.
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_iterations: u64,
}

pub fn locus(a: &ZerosArgs, cfg: &RunConfig) -> Result<Vec<(u32, RootSet)>, CliError> {
    let precise = RootConfig {
        max_digits: cfg.digits,
        max_iterations: a.max_iterations as usize,
        ..Default::default()
    };
    let sweep_cfg = RootConfig {
        max_iterations: a.max_iterations as usize,
        ..RootConfig::sweep()
    };
    match a.family {
        Family::Torus => {
            let n =
                a.n.ok_or_else(|| CliError::Usage("--family torus needs --n".into()))?;
            Ok(vec![(
                n,
                find_roots_with(&torus_2n_alexander(n)?, &precise)?,
            )])
        }
        Family::Trivalent => {
            if a.gmax == 0 {
                return Err(CliError::Usage("--gmax must be at least 1".into()));
            }
            let sweep = match a.method {
                Method::Auto => a.gmax > 30,
                Method::Precise => false,
                Method::Sweep => true,
            };
            if sweep {
                return Ok(trivalent_sweep(a.gmax, &sweep_cfg)?);
            }
            use rayon::prelude::*;
            (1..=a.gmax)
                .into_par_iter()
                .map(|g| Ok((g, trivalent_roots(g, &precise)?)))
                .collect()
        }
    }
}

pub fn locus_csv(sets: &[(u32, RootSet)], label: &str) -> String {
    let mut s = format!("{label},re,im,modulus,arg_degrees,residual\n");
    for (g, set) in sets {
        for r in &set.roots {
            writeln!(
                s,
                "{g},{},{},{},{},{:e}",
                r.re,
                r.im,
                r.modulus(),
                r.arg().to_degrees(),
                r.residual
            )
            .unwrap();
        }
    }
    s
}

pub fn zeros(a: &ZerosArgs, cfg: &RunConfig) -> Result<String, CliError> {
    let sets = locus(a, cfg)?;
    let label = if a.family == Family::Torus { "n" } else { "g" };
    let fmt = cfg.format(Format::Text);
    if a.density {
        let roots: Vec<_> = sets
            .iter()
            .flat_map(|(_, s)| s.roots.iter().copied())
            .collect();
        let h = angular_density(&roots, a.bins, EDGE_ANGLE);
        let fit = edge_exponent(
            &roots,
            &EdgeFitConfig {
                bins: a.bins,
                ..Default::default()
            },
        )
        .ok();
        return Ok(match fmt {
            Format::Json => to_json(&json!({"histogram": h, "fit": fit}))?,
            Format::Csv => {
                let w = h.bin_width();
                let total = roots.len().max(1) as f64;
                let mut s = String::from("bin,lo_degrees,hi_degrees,count,density\n");
                for (k, c) in h.counts.iter().enumerate() {
                    let (lo, hi) = (k as f64 * w, (k + 1) as f64 * w);
                    writeln!(
                        s,
                        "{k},{},{},{c},{}",
                        lo.to_degrees(),
                        hi.to_degrees(),
                        *c as f64 / (total * w)
                    )
                    .unwrap();
                }
                s
            }
            Format::Text => {
                let mut s = format!(
                    "roots {} outside {} fullest bin {:?} of {}\n",
                    h.total(),
                    h.outside,
                    h.argmax(),
                    a.bins
                );
                match fit {
                    Some(f) => writeln!(
                        s,
                        "edge exponent {:.4} (rms {:.4}, {} bins)",
                        f.exponent, f.residual, f.bins_used
                    ),
                    None => writeln!(s, "edge exponent unavailable (too few roots)"),
                }
                .unwrap();
                s
            }
        });
    }
    Ok(match fmt {
        Format::Csv => locus_csv(&sets, label),
        Format::Json => to_json(&sets.iter().map(|(g, s)| json!({label: g, "set": s})).collect::<Vec<_>>())?,
        Format::Text => sets
            .iter()
            .map(|(g, s)| {
                let dev = s.roots.iter().map(|r| (r.modulus() - 1.0).abs()).fold(0.0, f64::max);
                format!(
                    "{label}={g} degree={} digits={} certified={} max||r|-1|={dev:.2e} max residual={:.2e}\n",
                    s.degree,
                    s.digits,
                    s.certified,
                    s.max_residual()
                )
            })
            .collect(),
    })
}

#[derive(Args, Debug)]
pub struct BandsArgs {
    /// Skeleton JSON (`{strands, rungs: [{pair, height}]}`); classify every sign assignment.
    #[arg(long, conflicts_with_all = ["diagram", "two_strand"])]
    pub census: Option<PathBuf>,
    /// Census of the two-strand skeleton with this many rungs.
    #[arg(long, conflicts_with = "diagram")]
    pub two_strand: Option<usize>,
    /// Ladder JSON with a `sign` on every rung; print its numbering and crossing matrix.
    #[arg(long)]
    pub diagram: Option<PathBuf>,
    /// Include per-assignment records in a census.
    #[arg(long)]
    pub records: bool,
    /// Reject floors below zero.
    #[arg(long)]
    pub strict: bool,
    /// Starting floor.
    #[arg(long)]
    pub base: Option<i64>,
}

fn census_text(c: &BandCensus) -> String {
    format!(
        "rungs {}\nassignments {}\nKNOT-CANDIDATE {}\nUNKNOT-REDUCIBLE {}\nUNCLASSIFIED {}\nMULTI-COMPONENT {} (linked {})\n",
        c.rungs,
        c.total(),
        c.knot_candidate,
        c.unknot_reducible,
        c.unclassified,
        c.multi_component,
        c.linked
    )
}

fn signs_text(signs: &[RungSign]) -> String {
    signs
        .iter()
        .map(|s| if *s == RungSign::Over { 'O' } else { 'U' })
        .collect()
}

pub fn bands(a: &BandsArgs, cfg: &RunConfig) -> Result<String, CliError> {
    let fmt = cfg.format(Format::Text);
    let skeleton = match (&a.census, a.two_strand) {
        (Some(p), _) => Some(read_json::<Skeleton>(p)?),
        (None, Some(n)) => Some(Skeleton::two_strand(n)),
        _ => None,
    };
    if let Some(sk) = skeleton {
        let keep = a.records || fmt == Format::Csv;
        let c = enumerate_assignments(&sk, cfg.rung_cap as usize, keep)?;
        return Ok(match fmt {
            Format::Json => to_json(&c)?,
            Format::Text => census_text(&c),
            Format::Csv => {
                let mut s = String::from("signs,components,verdict,linked,sequence\n");
                for r in &c.records {
                    let seq = r
                        .sequence
                        .as_ref()
                        .map(|q| q.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
                        .unwrap_or_default();
                    let verdict = serde_json::to_value(r.verdict)?;
                    writeln!(
                        s,
                        "{},{},{},{},{seq}",
                        signs_text(&r.signs),
                        r.components,
                        verdict.as_str().unwrap_or_default(),
                        r.linked
                    )
                    .unwrap();
                }
                s
            }
        });
    }
    let Some(path) = &a.diagram else {
        return Err(CliError::Usage(
            "bands needs --census, --two-strand or --diagram".into(),
        ));
    };
    csv_only(fmt, "bands --diagram")?;
    let d: LadderDiagram = read_json(path)?;
    let opts = NumberingOptions {
        base: a.base,
        strict: a.strict,
        ..Default::default()
    };
    let seq = floor_numbering(&d, &opts)?;
    let m = crossing_matrix(&seq)?;
    Ok(match fmt {
        Format::Json => to_json(&json!({
            "sequence": seq.sequence,
            "digits": seq.digits(),
            "braid": d.to_braid(),
            "crossing_matrix": m,
        }))?,
        _ => {
            let mut s = format!(
                "sequence {}\n",
                seq.digits()
                    .unwrap_or_else(|| format!("{:?}", seq.sequence))
            );
            for row in &m.rows {
                writeln!(
                    s,
                    "  {}",
                    row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
                )
                .unwrap();
            }
            let verdict = serde_json::to_value(m.verdict)?;
            writeln!(
                s,
                "row sums {:?}\nverdict {}",
                m.row_sums,
                verdict.as_str().unwrap_or_default()
            )
            .unwrap();
            s
        }
    })
}

#[derive(Args, Debug)]
pub struct DiagramArgs {
    /// Planar diagram JSON: `{"crossings": [[a,b,c,d], …], "signs": [±1, …]}`.
    #[arg(long, required_unless_present = "fixture", conflicts_with = "fixture")]
    pub pd: Option<PathBuf>,
    /// Bundled diagram: unknot, hopf, 3_1, 4_1, 5_1, 5_2, 8_17, 8_19.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Use the mirror image.
    #[arg(long)]
    pub mirror: bool,
}

fn load_diagram(a: &DiagramArgs) -> Result<PlanarDiagram, CliError> {
    let d = match (&a.pd, &a.fixture) {
        (Some(p), _) => read_json::<PlanarDiagram>(p)?,
        (None, Some(n)) => {
            knotpoly::fixture(n).ok_or_else(|| CliError::Input(format!("unknown fixture {n:?}")))?
        }
        (None, None) => return Err(CliError::Usage("--pd or --fixture is required".into())),
    };
    Ok(if a.mirror { d.mirror() } else { d })
}

fn half_terms(v: &JonesPolynomial) -> Vec<(i64, String)> {
    v.half_exponents()
        .terms()
        .map(|(h, c)| (h, c.to_string()))
        .collect()
}

pub fn jones(a: &DiagramArgs, cfg: &RunConfig) -> Result<String, CliError> {
    let d = load_diagram(a)?;
    let cap = cfg.crossing_cap as usize;
    let bracket = knotpoly::kauffman_bracket(&d, cap)?;
    let v = knotpoly::jones_from_bracket(&bracket, d.writhe())?;
    let fmt = cfg.format(Format::Text);
    csv_only(fmt, "jones")?;
    Ok(match fmt {
        Format::Json => to_json(&json!({
            "crossings": d.crossing_count(),
            "components": d.component_count(),
            "writhe": d.writhe(),
            "bracket": display_laurent(&bracket, "A"),
            "jones": v.to_string(),
            "jones_half_exponents": half_terms(&v),
        }))?,
        _ => format!(
            "writhe  {}\nbracket {}\njones   {v}\n",
            d.writhe(),
            display_laurent(&bracket, "A")
        ),
    })
}

#[derive(Args, Debug)]
pub struct VassilievArgs {
    #[command(flatten)]
    pub diagram: DiagramArgs,
    #[arg(long, default_value_t = 4)]
    pub jmax: usize,
}

pub fn vassiliev(a: &VassilievArgs, cfg: &RunConfig) -> Result<String, CliError> {
    let d = load_diagram(&a.diagram)?;
    let v = knotpoly::vassiliev_coefficients(&d, a.jmax, cfg.crossing_cap as usize)?;
    Ok(match cfg.format(Format::Text) {
        Format::Json => to_json(&json!({
            "jmax": a.jmax,
            "coefficients": v.iter().map(Rational::to_string).collect::<Vec<_>>(),
        }))?,
        Format::Csv => {
            let mut s = String::from("j,v\n");
            for (j, x) in v.iter().enumerate() {
                writeln!(s, "{j},{x}").unwrap();
            }
            s
        }
        Format::Text => v
            .iter()
            .enumerate()
            .map(|(j, x)| format!("v{j} {x}\n"))
            .collect(),
    })
}

#[derive(Args, Debug)]
pub struct CatalogueArgs {
    /// Rolfsen name such as `6_2`.
    #[arg(long, conflicts_with_all = ["mean", "validate"])]
    pub knot: Option<String>,
    /// Trace powers such as `3,3,2,2,2,2`.
    #[arg(long, conflicts_with = "validate")]
    pub mean: Option<String>,
    /// Check every entry, including its exact replica coefficient.
    #[arg(long)]
    pub validate: bool,
}

fn entries_out(es: &[&CatalogueEntry], fmt: Format) -> Result<String, CliError> {
    Ok(match fmt {
        Format::Json => to_json(&es)?,
        Format::Csv => {
            let mut s = String::from("name,powers,alternating,source,ambiguous\n");
            for e in es {
                let p: Vec<String> = e.powers.iter().map(usize::to_string).collect();
                let src = serde_json::to_value(e.source)?;
                writeln!(
                    s,
                    "{},{},{},{},{}",
                    e.name,
                    p.join(" "),
                    e.alternating,
                    src.as_str().unwrap_or_default(),
                    e.ambiguous
                )
                .unwrap();
            }
            s
        }
        Format::Text => es
            .iter()
            .map(|e| {
                let mut line = format!("{:<5} {}", e.name, e.mean_label());
                if !e.alternating {
                    line.push_str("  non-alternating");
                }
                if e.ambiguous {
                    line.push_str("  ambiguous-source");
                }
                line + "\n"
            })
            .collect(),
    })
}

pub fn parse_powers(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad power {x:?} in {s:?}")))
        })
        .collect()
}

pub fn catalogue(a: &CatalogueArgs, cfg: &RunConfig) -> Result<String, CliError> {
    let fmt = cfg.format(Format::Text);
    if a.validate {
        csv_only(fmt, "catalogue --validate")?;
        let r = catalogue::validate_catalogue();
        if fmt == Format::Json {
            return to_json(&r);
        }
        let mut s = String::new();
        for e in &r.entries {
            writeln!(
                s,
                "{:<5} even={} name={} replica={}",
                e.name,
                e.even_degree,
                e.name_ok,
                e.replica.as_deref().unwrap_or("skipped")
            )
            .unwrap();
        }
        writeln!(
            s,
            "torus series {}\nround trip {}\npass {}",
            r.torus_series_ok, r.round_trip_ok, r.pass
        )
        .unwrap();
        return Ok(s);
    }
    if let Some(k) = &a.knot {
        return entries_out(&[catalogue::entry(k)?], fmt);
    }
    if let Some(m) = &a.mean {
        return entries_out(&catalogue::knots_for_mean(&parse_powers(m)?), fmt);
    }
    entries_out(&catalogue::catalogue().iter().collect::<Vec<_>>(), fmt)
}
