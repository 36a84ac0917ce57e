//! Argument definitions and one function per subcommand. Each returns a
//! [`Report`]; errors mean the input itself was unusable.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use legvar_core::bryant::{
    bryant_transform, bryant_transform_implicit, conormal_chart, contact_pullback_check, general_position_report,
    gradient_degree_sample, indeterminacy_points, phi_forward, phi_inverse, projectively_equal, psi_chart, psi_form,
    self_duality_check, FlagPoint, HomaloidalCandidate, HypersurfaceData, PhiImage,
};
use legvar_core::chern::{
    catalog, check_sigma, codegree_pair, compare_c8, kodaira0_constraints, resultant_degree, resultant_on_variety,
    resultant_rlm, ruled_obstruction, sigma_from_generating_identity, sigma_symbolic, SigmaVariant, TermVerdict,
    VarietyChernData, CATALOG, H, N1,
};
use legvar_core::contact::{find_symplectic_forms, is_legendrian, SymplecticForm};
use legvar_core::exactalg::{format_rational, int, parse_poly, parse_rational, Rational, DEFAULT_PRIME};
use legvar_core::roots::{t11_identity_check, ParabolicChoice, RootSystem, RootType};
use legvar_core::{Error as CoreError, MultiPoly};
use num_traits::Zero;

use crate::acceptance;
use crate::formats::{self, parse_vector, FormatError};
use crate::report::{Report, Status};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "legvar", version, about = "Exact verification of Legendrian variety computations")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Prime for sampled computations over finite fields.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Legendrian checks on polynomial charts.
    #[command(subcommand)]
    Legendrian(LegendrianCmd),
    /// The flag-variety contactomorphism and the constructions built on it.
    #[command(subcommand)]
    Bryant(BryantCmd),
    /// Chern class obstructions.
    #[command(subcommand)]
    Chern(ChernCmd),
    /// Root system identities.
    #[command(subcommand)]
    Roots(RootsCmd),
    /// Runs the acceptance suite.
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum LegendrianCmd {
    /// Isotropy of a chart for a fixed symplectic form.
    Verify {
        #[arg(long)]
        chart: PathBuf,
        /// `standard`, `darboux` or `graph:<c>`.
        #[arg(long, default_value = "standard")]
        form: String,
    },
    /// All antisymmetric forms the chart is isotropic for.
    DiscoverForm {
        #[arg(long)]
        chart: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum BryantCmd {
    /// Image of a flag under phi.
    Map {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Preimage flag of a point `[w_1..w_n, z_1..z_n]`.
    Inverse {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Pulls the contact form back along phi and reduces modulo incidence.
    Pullback {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        factor: String,
    },
    /// Conormal lift of a hypersurface.
    Lift(HypersurfaceArg),
    /// Legendrian check of the transform, by chart and implicitly.
    Transform(HypersurfaceArg),
    /// The parametrization attached to a form `P(x1..xn)`.
    Psi {
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Tangent lines of the hyperplane section through p0.
    Indeterminacy(HypersurfaceArg),
    /// General position checklist for a surface in P^3.
    PositionReport(HypersurfaceArg),
}

#[derive(Debug, Args)]
pub struct HypersurfaceArg {
    #[arg(long)]
    pub hypersurface: PathBuf,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct VarietySource {
    /// One of the built-in varieties.
    #[arg(long)]
    pub catalog: Option<String>,
    /// A variety data file.
    #[arg(long)]
    pub variety: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Factorial,
    Binomial,
}

impl From<VariantArg> for SigmaVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Factorial => SigmaVariant::Factorial,
            VariantArg::Binomial => SigmaVariant::Binomial,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum ChernCmd {
    /// The class sigma_{2m} for an n-fold.
    Sigma {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Factorial)]
        variant: VariantArg,
    },
    /// Evaluates sigma_{2m} on a variety.
    Check {
        #[command(flatten)]
        source: VarietySource,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// The resultant R_{l,m} of sigma_{2l} and sigma_{2m} in h.
    Resultant {
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
        /// Dimension for the symbolic resultant.
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long)]
        variety: Option<PathBuf>,
        /// Compare R_{1,2} term by term with the printed degree-8 table.
        #[arg(long)]
        compare_c8: bool,
        #[arg(long, value_enum, default_value_t = VariantArg::Factorial)]
        variant: VariantArg,
    },
    /// Degree of the dual surface, two ways.
    Codegree {
        #[command(flatten)]
        source: VarietySource,
    },
    /// Obstruction for projective bundles `P^p` over a `q`-fold.
    Ruled {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Numerology of Legendrian surfaces with trivial canonical class.
    Kodaira0 {
        #[arg(long)]
        chi: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum RootsCmd {
    /// Both sides of the scalar identity at one marked node.
    Check {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        node: usize,
        #[arg(long, default_value_t = 1)]
        lambda: i64,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn parsed<T>(path: &Path, r: std::result::Result<T, FormatError>) -> Result<T> {
    r.map_err(|source| CliError::Format { path: path.to_path_buf(), source })
}

fn fr(r: &Rational) -> String {
    format_rational(r)
}

fn vector_text(v: &[Rational]) -> String {
    format!("[{}]", v.iter().map(fr).collect::<Vec<_>>().join(", "))
}

fn poly_lines(ps: &[MultiPoly]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n")
}

pub fn run(cli: &Cli) -> Result<Report> {
    let seed = cli.seed;
    match &cli.command {
        Command::Legendrian(c) => legendrian(c, seed),
        Command::Bryant(c) => bryant(c, seed, cli.prime),
        Command::Chern(c) => chern(c),
        Command::Roots(c) => roots(c),
        Command::Selftest => Ok(selftest(seed)),
    }
}

fn parse_form(text: &str, n: usize) -> Result<SymplecticForm> {
    match text {
        "standard" => Ok(SymplecticForm::standard(n)),
        "darboux" => Ok(SymplecticForm::darboux(n + 1)),
        t => match t.strip_prefix("graph:") {
            Some(c) => Ok(SymplecticForm::graph_form(n, parse_rational(c)?)?),
            None => Err(CliError::Usage(format!("unknown form `{t}`; use standard, darboux or graph:<c>"))),
        },
    }
}

fn legendrian(c: &LegendrianCmd, seed: u64) -> Result<Report> {
    match c {
        LegendrianCmd::Verify { chart, form } => {
            let text = read(chart)?;
            let ch = parsed(chart, formats::parse_chart(&text))?;
            let mut r = Report::new("legendrian verify", &[text.as_str(), form, &seed.to_string()]);
            let f = parse_form(form, ch.param_count())?;
            r.value("components", ch.components().len()).value("parameters", ch.param_count());
            let imm = ch.is_generically_immersive(seed);
            r.check(
                "chart is generically immersive",
                if imm { Status::Sampled } else { Status::Fail },
                if imm { "full rank at a random point" } else { "rank deficient at three random points" },
            );
            let rep = is_legendrian(&ch, &f)?;
            let detail = if rep.legendrian {
                "every pairing vanishes identically".to_string()
            } else {
                let labels: Vec<String> = rep.violations.iter().take(4).map(|v| v.label(ch.params())).collect();
                format!("{} nonzero pairings, e.g. {}", rep.violations.len(), labels.join(", "))
            };
            r.check(format!("isotropic for the {form} form"), Status::from_bool(rep.legendrian), detail);
            Ok(r)
        }
        LegendrianCmd::DiscoverForm { chart } => {
            let text = read(chart)?;
            let ch = parsed(chart, formats::parse_chart(&text))?;
            let mut r = Report::new("legendrian discover-form", &[text.as_str(), &seed.to_string()]);
            let found = find_symplectic_forms(&ch, seed)?;
            r.value("solution space dimension", found.basis.len());
            if let Some(w) = &found.witness {
                let rows: Vec<String> = w.matrix().iter().map(|row| vector_text(row)).collect();
                r.value("witness", rows.join("\n"));
            }
            let (status, detail) = match (&found.witness, found.basis.is_empty()) {
                (Some(_), _) => (Status::Pass, "nondegenerate member found"),
                (None, true) => (Status::Fail, "no nonzero compatible form"),
                (None, false) => (Status::Unknown, "random combinations were all degenerate"),
            };
            r.check("nondegenerate compatible form", status, detail);
            Ok(r)
        }
    }
}

fn hypersurface(arg: &HypersurfaceArg) -> Result<(String, HypersurfaceData)> {
    let text = read(&arg.hypersurface)?;
    let z = parsed(&arg.hypersurface, formats::parse_hypersurface(&text))?;
    Ok((text, z))
}

/// The candidate `P` in whatever variables it mentions, ordered `x1..xn`.
fn candidate(p: &str) -> Result<HomaloidalCandidate> {
    let mut names: Vec<String> = Vec::new();
    let mut chars = p.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if c.is_ascii_alphabetic() {
            let mut end = i + 1;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() {
                    end = j + 1;
                    chars.next();
                } else {
                    break;
                }
            }
            let name = p[i..end].to_string();
            if !names.contains(&name) {
                names.push(name);
            }
        }
    }
    names.sort_by_key(|n| {
        (n.trim_start_matches(|c: char| c.is_ascii_alphabetic()).parse::<usize>().unwrap_or(0), n.clone())
    });
    Ok(HomaloidalCandidate::new(parse_poly(p, &names)?)?)
}

fn bryant(c: &BryantCmd, seed: u64, prime: Option<u64>) -> Result<Report> {
    match c {
        BryantCmd::Map { x, y } => {
            let mut r = Report::new("bryant map", &[x.as_str(), y]);
            let p = FlagPoint::new(parse_vector(x)?, parse_vector(y)?)?;
            r.check("incidence x . y = 0", Status::Pass, "");
            match phi_forward(&p)? {
                PhiImage::Point(img) => {
                    r.value("image", vector_text(&img));
                    match phi_inverse(&img) {
                        Ok(back) => {
                            let ok = projectively_equal(back.x(), p.x()) && projectively_equal(back.y(), p.y());
                            r.check("inverse recovers the flag", Status::from_bool(ok), "");
                        }
                        Err(CoreError::Indeterminate) => {
                            r.check("inverse recovers the flag", Status::Unknown, "image has z_n = 0");
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
                PhiImage::Indeterminate => {
                    r.value("image", "undefined (x_0 = y^n = 0)");
                }
            }
            Ok(r)
        }
        BryantCmd::Inverse { point } => {
            let mut r = Report::new("bryant inverse", &[point.as_str()]);
            let wz = parse_vector(point)?;
            let flag = phi_inverse(&wz)?;
            r.value("x", vector_text(flag.x())).value("y", vector_text(flag.y()));
            let again = phi_forward(&flag)?;
            let ok = again.point().is_some_and(|p| projectively_equal(p, &wz));
            r.check("phi recovers the point", Status::from_bool(ok), "");
            Ok(r)
        }
        BryantCmd::Pullback { n, factor } => {
            let mut r = Report::new("bryant pullback", &[n.to_string(), factor.clone()]);
            let c = parse_rational(factor)?;
            let rep = contact_pullback_check(*n, &c)?;
            for (label, residual) in
                [("residual on x_0 != 0", &rep.residual_x0), ("residual on y^n != 0", &rep.residual_yn)]
            {
                let text: Vec<String> = residual.iter().map(|(d, p)| format!("({p}) {d}")).collect();
                r.value(label, if text.is_empty() { "0".to_string() } else { text.join("\n") });
            }
            r.check(
                format!("phi^* theta = {factor} x_0 y^n theta' modulo incidence"),
                Status::from_bool(rep.is_zero()),
                if rep.is_zero() { "residual identically zero" } else { "nonzero residual" },
            );
            Ok(r)
        }
        BryantCmd::Lift(arg) => {
            let (text, z) = hypersurface(arg)?;
            let mut r = Report::new("bryant lift", &[text.as_str(), &seed.to_string()]);
            let ch = conormal_chart(&z, None, seed)?;
            let len = z.ambient() + 1;
            let (x, y) = ch.components().split_at(len);
            r.value("x", poly_lines(x)).value("y", poly_lines(y));
            let zero = MultiPoly::zero(ch.params());
            let incidence = x.iter().zip(y).fold(zero.clone(), |acc, (a, b)| acc.add(&a.mul(b)));
            r.check("incidence x . y = 0", Status::from_bool(incidence.is_zero()), "");
            // y annihilates the tangent directions of the lifted point.
            let tangent = (0..ch.param_count()).all(|k| {
                x.iter().zip(y).fold(zero.clone(), |acc, (a, b)| acc.add(&a.differentiate_index(k, 1).mul(b))).is_zero()
            });
            r.check("y is tangent to Z", Status::from_bool(tangent), "");
            Ok(r)
        }
        BryantCmd::Transform(arg) => {
            let (text, z) = hypersurface(arg)?;
            let mut r = Report::new("bryant transform", &[text.as_str(), &seed.to_string()]);
            let n = z.ambient();
            match bryant_transform(&z, None, seed) {
                Ok(ch) => {
                    r.value("chart", poly_lines(ch.components()));
                    let rep = is_legendrian(&ch, &SymplecticForm::darboux(n))?;
                    r.check(
                        "chart is Legendrian",
                        Status::from_bool(rep.legendrian),
                        format!("{} nonzero pairings", rep.violations.len()),
                    );
                }
                Err(CoreError::Unsupported(why)) => {
                    r.check("chart is Legendrian", Status::Unknown, why);
                }
                Err(e) => return Err(e.into()),
            }
            let imp = bryant_transform_implicit(&z)?;
            let detail = if imp.legendrian() {
                format!("{} pairings divisible by F", imp.pairings)
            } else {
                format!(
                    "{} of {} pairings not divisible by F: {}",
                    imp.failures.len(),
                    imp.pairings,
                    imp.failures.join(", ")
                )
            };
            r.check("implicit isotropy modulo F", Status::from_bool(imp.legendrian()), detail);
            Ok(r)
        }
        BryantCmd::Psi { p, trials } => {
            let prime = prime.unwrap_or(DEFAULT_PRIME);
            let mut r =
                Report::new("bryant psi", &[p.as_str(), &trials.to_string(), &prime.to_string(), &seed.to_string()]);
            let cand = candidate(p)?;
            let ch = psi_chart(&cand)?;
            r.value("chart", poly_lines(ch.components()));
            let rep = is_legendrian(&ch, &psi_form(&cand)?)?;
            r.check("chart is Legendrian for the graph form", Status::from_bool(rep.legendrian), "");
            let found = find_symplectic_forms(&ch, seed)?;
            r.check(
                "nondegenerate compatible form",
                if found.nondegenerate() { Status::Pass } else { Status::Unknown },
                format!("solution space of dimension {}", found.basis.len()),
            );
            match self_duality_check(&cand) {
                Some(c) => r.value("P(grad P) / P^(d-1)", fr(&c)),
                None => r.value("P(grad P) / P^(d-1)", "not a constant"),
            };
            let sample = gradient_degree_sample(&cand, prime, *trials, seed)?;
            let hist: Vec<String> = sample.histogram().iter().map(|(k, v)| format!("{k}:{v}")).collect();
            r.value("gradient fiber sizes", hist.join(" "));
            let uniform = sample.fibers.iter().all(|&f| f == sample.modal);
            let status = match (sample.modal, uniform) {
                (1, _) => Status::Sampled,
                (_, true) => Status::Fail,
                _ => Status::Unknown,
            };
            r.check(
                "gradient map is birational",
                status,
                format!("sampled over F_{prime}, modal fiber size {}", sample.modal),
            );
            Ok(r)
        }
        BryantCmd::Indeterminacy(arg) => {
            let (text, z) = hypersurface(arg)?;
            let mut r = Report::new("bryant indeterminacy", &[text.as_str(), &seed.to_string()]);
            let t = indeterminacy_points(&z, seed)?;
            let d = z.degree() as usize;
            r.value("tangency polynomial", t.poly.to_string()).value("degree", t.degree);
            r.check(
                "degree d(d-1)",
                Status::from_bool(t.degree == d * (d - 1)),
                format!("expected {}, got {}", d * (d - 1), t.degree),
            );
            r.check(
                "tangency points are simple",
                if t.squarefree { Status::Pass } else { Status::Unknown },
                if t.squarefree { "squarefree" } else { "repeated root" },
            );
            Ok(r)
        }
        BryantCmd::PositionReport(arg) => {
            let (text, z) = hypersurface(arg)?;
            let mut r = Report::new("bryant position-report", &[text.as_str(), &seed.to_string()]);
            for c in general_position_report(&z, seed)?.checks {
                r.check(c.name, c.status.into(), c.detail);
            }
            Ok(r)
        }
    }
}

fn variety(source: &VarietySource) -> Result<(String, VarietyChernData)> {
    match (&source.catalog, &source.variety) {
        (Some(name), _) => Ok((format!("catalog:{name}"), catalog(name)?)),
        (None, Some(path)) => {
            let text = read(path)?;
            let v = parsed(path, formats::parse_variety(&text))?;
            Ok((text, v))
        }
        (None, None) => Err(CliError::Usage(format!("give --catalog ({}) or --variety", CATALOG.join(", ")))),
    }
}

/// Intersection numbers `h^n`, `c_1 h^{n-1}`, `2 ch_2 h^{n-2}`.
fn surface_numbers(r: &mut Report, v: &VarietyChernData) -> Result<()> {
    if !v.algebra().has_table() {
        return Ok(());
    }
    let n = v.n as u32;
    let h = v.h();
    r.value(format!("h^{n}"), fr(&v.integrate(&h.pow(n))?));
    r.value(format!("c1*h^{}", n - 1), fr(&v.integrate(&v.c(1)?.mul(&h.pow(n - 1))?)?));
    if n >= 2 {
        let two = Rational::from_integer(2.into());
        r.value(format!("2ch2*h^{}", n - 2), fr(&v.integrate(&v.ch(2)?.scale(&two).mul(&h.pow(n - 2))?)?));
    }
    Ok(())
}

fn chern(c: &ChernCmd) -> Result<Report> {
    match c {
        ChernCmd::Sigma { n, m, variant } => {
            let mut r = Report::new("chern sigma", &[n.to_string(), m.to_string(), format!("{variant:?}")]);
            let sym = sigma_symbolic(*m, (*variant).into())?;
            let mut bind = std::collections::BTreeMap::new();
            bind.insert(N1.to_string(), Rational::from_integer((n + 1).into()));
            let mut vars = legvar_core::chern::chern_names(2 * *m as usize);
            vars.push(H.into());
            let p = sym.partial_evaluate(&bind).with_vars(&vars)?;
            r.value(format!("sigma_{}", 2 * m), p.to_string());
            let (g, clean) = sigma_from_generating_identity(*n, *m)?;
            r.check("odd-weight components of the identity vanish", Status::from_bool(clean), "");
            r.check(
                "agrees with the generating identity",
                Status::from_bool(g == p),
                if g == p { String::new() } else { format!("identity gives {g}") },
            );
            Ok(r)
        }
        ChernCmd::Check { source, m } => {
            let (input, v) = variety(source)?;
            let mut r = Report::new("chern check", &[input.as_str(), &m.to_string()]);
            r.value("variety", &v.name);
            surface_numbers(&mut r, &v)?;
            let s = check_sigma(&v, *m)?;
            r.value("residual", s.residual.to_string());
            for (mono, val) in &s.pairings {
                let names: Vec<String> = mono
                    .exps()
                    .iter()
                    .zip(v.algebra().names())
                    .filter(|(e, _)| **e > 0)
                    .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
                    .collect();
                let label = if names.is_empty() { "1".to_string() } else { names.join("*") };
                r.value(format!("residual * {label}"), fr(val));
            }
            let ok = s.vanishes();
            r.check(
                format!("sigma_{} vanishes", 2 * m),
                Status::from_bool(ok),
                if ok { "residual pairs to zero" } else { "not Legendrian in this embedding" },
            );
            Ok(r)
        }
        ChernCmd::Resultant { l, m, n, catalog: cat, variety: file, compare_c8: cmp, variant } => {
            let mut inputs = vec![
                l.to_string(),
                m.to_string(),
                format!("{n:?}"),
                format!("{cat:?}"),
                cmp.to_string(),
                format!("{variant:?}"),
            ];
            if let Some(path) = file {
                inputs.push(read(path)?);
            }
            let mut r = Report::new("chern resultant", &inputs);
            let deg = resultant_degree(*l, *m);
            r.value("cohomological degree", deg);
            if let Some(n) = n {
                let res = resultant_rlm(*l, *m, *n)?;
                r.value(format!("R_{l},{m}"), res.to_string());
                r.check(format!("homogeneous of degree {deg}"), Status::from_bool(res.is_homogeneous_of(deg)), "");
            }
            if cat.is_some() || file.is_some() {
                let (_, v) = variety(&VarietySource { catalog: cat.clone(), variety: file.clone() })?;
                let res = resultant_on_variety(&v, *l, *m)?;
                let top = 2 * v.n as u32;
                if deg > top {
                    r.check(format!("R_{l},{m} vanishes on {}", v.name), Status::Pass, "above the top degree");
                } else {
                    // Exact in top degree; below it, pairing with h is a necessary condition only.
                    let k = (top - deg) / 2;
                    let pairing = v.integrate(&res.mul(&v.h().pow(k))?)?;
                    r.value(format!("R_{l},{m} * h^{k}"), format_rational(&pairing));
                    let status = match (pairing.is_zero(), k) {
                        (false, _) => Status::Fail,
                        (true, 0) => Status::Pass,
                        (true, _) => Status::Unknown,
                    };
                    r.check(
                        format!("R_{l},{m} vanishes on {}", v.name),
                        status,
                        format!("pairs to {}", format_rational(&pairing)),
                    );
                }
            }
            if *cmp {
                if (*l, *m) != (1, 2) {
                    return Err(CliError::Usage("--compare-c8 needs l = 1, m = 2".into()));
                }
                let rep = compare_c8((*variant).into())?;
                r.value("scale", fr(&rep.scale));
                for row in &rep.rows {
                    let status = match row.verdict {
                        TermVerdict::Match => Status::Pass,
                        TermVerdict::NotHomogeneous => Status::Unknown,
                        _ => Status::Fail,
                    };
                    let show = |x: &Option<Rational>| x.as_ref().map_or("-".to_string(), fr);
                    r.check(
                        format!("N1^{} {}", row.power, row.monomial()),
                        status,
                        format!(
                            "printed {}, computed {} ({})",
                            show(&row.printed),
                            show(&row.computed),
                            row.verdict.label()
                        ),
                    );
                }
            }
            Ok(r)
        }
        ChernCmd::Codegree { source } => {
            let (input, v) = variety(source)?;
            let mut r = Report::new("chern codegree", &[input.as_str()]);
            let c = codegree_pair(&v)?;
            r.value("katz", fr(&c.katz)).value("legendrian", fr(&c.legendrian)).value("sigma2", fr(&c.sigma2));
            r.check("katz = legendrian", Status::from_bool(c.agree()), format!("difference {}", fr(&c.sigma2)));
            Ok(r)
        }
        ChernCmd::Ruled { p, q } => {
            let mut r = Report::new("chern ruled", &[p.to_string(), q.to_string()]);
            let o = ruled_obstruction(*p, *q)?;
            let [c0, c1, c2] = o.quadratic;
            let k = vec!["k".to_string()];
            let quadratic = MultiPoly::from_terms(&k, [(vec![2], int(c2)), (vec![1], int(c1)), (vec![0], int(c0))]);
            r.value("r", o.r).value("quadratic", quadratic).value("discriminant", o.discriminant);
            let roots: Vec<String> =
                o.roots.iter().map(|(a, b)| if *b == 1 { a.to_string() } else { format!("{a}/{b}") }).collect();
            r.value("rational roots", if roots.is_empty() { "none".into() } else { roots.join(", ") });
            let (status, detail) = if !o.applies {
                (Status::Unknown, "p = 1: l^2 is a pullback, the comparison does not apply".to_string())
            } else if o.discriminant < 0 {
                (Status::Fail, format!("discriminant {} < 0: no real k", o.discriminant))
            } else if o.roots.is_empty() {
                (Status::Fail, "no rational k".to_string())
            } else {
                (Status::Pass, format!("k = {}", roots.join(" or ")))
            };
            r.check("Legendrian embedding allowed", status, detail);
            Ok(r)
        }
        ChernCmd::Kodaira0 { chi } => {
            let mut r = Report::new("chern kodaira0", &[chi.to_string()]);
            let k = kodaira0_constraints(*chi);
            r.value("degree", k.degree).value("h0", k.h0);
            if let Some(g) = k.genus {
                r.value("sectional genus", g);
            }
            r.check("admissible", Status::from_bool(k.admissible), format!("chi = {chi}"));
            Ok(r)
        }
    }
}

fn roots(c: &RootsCmd) -> Result<Report> {
    let RootsCmd::Check { kind, rank, node, lambda } = c;
    let mut r = Report::new("roots check", &[kind.as_str(), &rank.to_string(), &node.to_string(), &lambda.to_string()]);
    let rs = RootSystem::new(RootType::parse(kind)?, *rank)?;
    let pc = ParabolicChoice::new(rs, &[*node])?;
    let t = t11_identity_check(&pc, *lambda)?;
    r.value("gamma", t.gamma).value("dim", t.n).value("lhs", fr(&t.lhs)).value("rhs", fr(&t.rhs));
    r.value("(2 omega - alpha, omega)", fr(&t.pairing));
    r.value("2 gamma > n + 1", t.index_bound());
    r.check(
        format!("identity at lambda = {lambda}"),
        Status::from_bool(t.equal()),
        format!("{} vs {}", fr(&t.lhs), fr(&t.rhs)),
    );
    Ok(r)
}

fn selftest(seed: u64) -> Report {
    let mut r = Report::new("selftest", &[seed.to_string()]);
    for o in acceptance::run_all(seed) {
        r.check(o.title(), Status::from_bool(o.passed()), o.detail_line());
    }
    r
}

pub fn render(r: &Report, f: OutputFormat) -> String {
    match f {
        OutputFormat::Text => r.to_text(),
        OutputFormat::Json => r.to_json() + "\n",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_orders_variables_numerically() {
        let c = candidate("x10*x2 + x1^2").unwrap();
        assert_eq!(c.p().vars(), ["x1", "x2", "x10"]);
        assert!(candidate("x1 + x2^2").is_err());
    }

    #[test]
    fn form_names() {
        assert_eq!(parse_form("darboux", 1).unwrap().dim(), 4);
        assert_eq!(parse_form("graph:-1", 2).unwrap().dim(), 6);
        assert!(parse_form("nope", 2).is_err());
    }
}
