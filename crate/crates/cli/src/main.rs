use std::fmt::Display;
use std::fs;
use std::io::{self, Read as _, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use apolar::apolarity::{ann_slice, hilbert_function, minimal_generators, socle};
use apolar::exact::{format_rational, parse_form, parse_rational, FormHint};
use apolar::level_hf::{
    burch_ideal, burch_point, check_level, concavity_failure, dim_stratum, e_sequence, enumerate_level_hf,
    grassmannian_dim, hf_from_partition, partition_from_hf, GenProfile,
};
use apolar::schubert::{
    bott, bott_weight, c1_c2_analysis, check_vanishing, dvir_bound, dvir_check, e1_table, kronecker, lascoux_ranks, porteous_class,
    BottResult, Partition, RankData, SchubertClass, DEFAULT_CAP_WEIGHT,
};
use apolar::secant::{
    gad_subspace, hankel_matrix, in_sigma, secant_decompose, secant_intersect, sigma_bounds, sigma_dim,
    stacked_catalecticant_det, waring_witness_hf, Gad, SecantPlane, StackedResult,
};
use apolar::tangent::{tangent_dim_formula, tangent_space};
use apolar::{Error, Exec, Form, HilbertFunction, MatrixQ, Ring, Subspace};

const GRAMMAR: &str = "\
Inputs:
  Hilbert function   1,2,3,4,5,5,4,3,0   (h_0..h_d, trailing 0 optional)
  form               3*x1^2*x2 - 1/2*x2^3   (x = operators, y = forms; homogeneous)
  form list          one form per argument, or --input FILE with one form per line
  partition          2+2+1, 2,2,1 or {2,2,1}
  Schubert class     10{3,3} + 6{4,2}
  point with order   a:b@alpha   (L = b*y1 - a*y2)
  Bott weight        m,m,m;r1,r2   (quotient block ; sub-bundle block), or a raw weight

Exit status: 0 success, 2 domain error, 1 usage error.";

#[derive(Parser)]
#[command(
    name = "apolar",
    version,
    about = "Exact apolarity, level Hilbert functions and Grassmannian computations",
    after_help = GRAMMAR,
    allow_negative_numbers = true
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// type t / Grassmannian rank
    #[arg(short = 't', global = true)]
    t: Option<usize>,
    /// top degree d
    #[arg(short = 'd', global = true)]
    d: Option<usize>,
    /// catalecticant index i (or degree j)
    #[arg(short = 'i', global = true)]
    i: Option<usize>,
    /// rank bound r
    #[arg(short = 'r', global = true)]
    r: Option<usize>,
    /// secant order s
    #[arg(short = 's', global = true)]
    s: Option<usize>,
    /// twist m
    #[arg(short = 'm', global = true, allow_negative_numbers = true)]
    m: Option<i64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Keyvalue)]
    format: Format,
    /// largest partition weight fed to Kronecker coefficients
    #[arg(long, global = true, default_value_t = DEFAULT_CAP_WEIGHT)]
    cap_weight: u32,
    /// read forms from FILE ("-" for stdin), one per line
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Keyvalue,
    JsonLines,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that a Hilbert function is level
    HfCheck { h: String },
    /// List all level Hilbert functions of type (t, d); all t if -t is omitted
    HfEnumerate {
        /// print counts only
        #[arg(long)]
        count: bool,
    },
    /// Partition of a level Hilbert function, or back with -t -d --partition
    HfPartition {
        h: Option<String>,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Monomial Hilbert–Burch matrix and ideal of a level Hilbert function
    Burch { h: String },
    /// Hilbert function of the algebra apolar to a space of y-forms
    Hilbert { forms: Vec<String> },
    /// Annihilator slice in degree -i, or minimal generators without -i
    Ann { forms: Vec<String> },
    /// Socle of R/I for x-form generators
    Socle { forms: Vec<String> },
    /// Tangent space to the level stratum at a space of y-forms
    Tangent {
        forms: Vec<String>,
        /// use the Hilbert–Burch point of this Hilbert function
        #[arg(long)]
        hf: Option<String>,
    },
    /// Write a space of binary y-forms as an intersection of secant planes
    SecantDecompose {
        forms: Vec<String>,
        #[arg(long)]
        hf: Option<String>,
    },
    /// Intersect the secant planes (x-forms) in S_d
    SecantIntersect { forms: Vec<String> },
    /// Space of a generalized additive decomposition in S_d
    Gad { points: Vec<String> },
    /// Dimension of the secant locus Σ_s in G(t, S_d)
    SigmaDim,
    /// Level function exhibiting dim Σ_s when N1 < N2
    WaringWitness,
    /// Whether a space of y-forms lies on a secant (s-1)-plane
    InSigma { forms: Vec<String> },
    /// Stacked catalecticant determinant (or rank) for -s
    StackedDet { forms: Vec<String> },
    /// Rank of the Hankel matrix of a binary form with -i rows minus one
    HankelRank { form: Option<String> },
    /// Product of Schubert classes in G(t, S_d)
    SchubertMul { a: String, b: String },
    /// Class of the rank locus Le(i, r) in G(t, S_d)
    Porteous,
    /// Cohomology of a homogeneous bundle on a Grassmannian
    Bott {
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Kronecker coefficient and the first-row bound
    Kronecker { lambda: String, rho: String, mu: String },
    /// Ranks of the Lascoux resolution of Le(i, r)
    LascouxRanks {
        /// list every summand
        #[arg(long)]
        terms: bool,
    },
    /// Candidate components of Le(i, r) and the conditions C1, C2
    Components,
    /// E1 page for the twist -m
    E1Table,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

struct Section {
    name: String,
    fields: Vec<(String, String)>,
}

impl Section {
    fn kv(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }
}

#[derive(Default)]
struct Report(Vec<Section>);

impl Report {
    fn section(&mut self, name: &str) -> &mut Section {
        self.0.push(Section {
            name: name.to_string(),
            fields: Vec::new(),
        });
        self.0.last_mut().unwrap()
    }

    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Keyvalue => {
                for (k, sec) in self.0.iter().enumerate() {
                    if k > 0 {
                        out.push('\n');
                    }
                    out.push_str(&sec.name);
                    out.push('\n');
                    for (key, value) in &sec.fields {
                        out.push_str(&format!("{key}: {value}\n"));
                    }
                }
            }
            Format::JsonLines => {
                let q = |s: &str| serde_json::to_string(s).unwrap();
                for sec in &self.0 {
                    let mut parts = vec![format!("\"section\":{}", q(&sec.name))];
                    parts.extend(sec.fields.iter().map(|(k, v)| format!("{}:{}", q(k), q(v))));
                    out.push_str(&format!("{{{}}}\n", parts.join(",")));
                }
            }
        }
        out
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Res<T> {
    v.ok_or_else(|| Failure::Usage(format!("this command needs {flag}")))
}

fn join<T: Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn parse_hf(s: &str) -> Res<HilbertFunction> {
    Ok(HilbertFunction::parse(s)?)
}

fn e_text(g: &GenProfile) -> String {
    let nonzero: Vec<String> = g
        .e
        .iter()
        .enumerate()
        .filter(|(_, &n)| n != 0)
        .map(|(k, n)| format!("e{}={n}", k + 1))
        .collect();
    nonzero.join(", ")
}

fn matrix_text(m: &MatrixQ) -> String {
    join(
        (0..m.rows()).map(|i| format!("[{}]", join(m.row(i).iter().map(format_rational), ","))),
        " ",
    )
}

fn forms_text(forms: &[Form]) -> String {
    join(forms, ", ")
}

/// Positional forms, or the lines of `--input`.
fn read_forms(inline: &[String], opts: &Opts, ring: Ring) -> Res<Vec<Form>> {
    let mut lines: Vec<String> = inline.to_vec();
    if let Some(path) = &opts.input {
        let text = if path == "-" {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?
        };
        lines.extend(
            text.lines()
                .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
                .filter(|l| !l.is_empty()),
        );
    }
    if lines.is_empty() {
        return Err(Failure::Usage("no forms given (pass them inline or with --input)".into()));
    }
    let hint = |nvars| FormHint {
        nvars,
        ring: Some(ring),
        degree: None,
    };
    // a form that happens not to mention the last variable still lives in
    // the common ring
    let first: Vec<Form> = lines.iter().map(|l| parse_form(l, hint(None))).collect::<Result<_, _>>()?;
    let n = first.iter().map(Form::nvars).max().unwrap();
    if first.iter().all(|f| f.nvars() == n) {
        return Ok(first);
    }
    Ok(lines.iter().map(|l| parse_form(l, hint(Some(n)))).collect::<Result<_, _>>()?)
}

fn span(forms: &[Form]) -> Res<Subspace> {
    let s = Subspace::span(forms)?;
    if s.dim() != forms.len() {
        return Err(Error::Invalid(format!("the {} forms span only a {}-dimensional space", forms.len(), s.dim())).into());
    }
    Ok(s)
}

fn lambda_from(forms: &[String], hf: &Option<String>, opts: &Opts) -> Res<Subspace> {
    match hf {
        Some(h) if forms.is_empty() && opts.input.is_none() => Ok(burch_point(&parse_hf(h)?)?),
        Some(_) => Err(Failure::Usage("give either --hf or forms, not both".into())),
        None => span(&read_forms(forms, opts, Ring::S)?),
    }
}

fn rank_data(opts: &Opts) -> Res<RankData> {
    Ok(RankData::new(
        need(opts.t, "-t")?,
        need(opts.d, "-d")?,
        need(opts.i, "-i")?,
        need(opts.r, "-r")?,
    )?)
}

fn describe_level(sec: &mut Section, h: &HilbertFunction) {
    let g = e_sequence(h);
    sec.kv("type", format!("({},{})", h.t(), h.d()))
        .kv("e", e_text(&g))
        .kv("q", join(&g.q, ","))
        .kv("dim", dim_stratum(h));
}

fn bott_fields(sec: &mut Section, b: &BottResult) {
    match b {
        BottResult::Zero => {
            sec.kv("vanishes", true);
        }
        BottResult::Nonzero { degree, weight, dim } => {
            sec.kv("vanishes", false)
                .kv("degree", degree)
                .kv("weight", join(weight, ","))
                .kv("dim", dim);
        }
    }
}

fn parse_weight(s: &str) -> Res<Vec<i64>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Domain(Error::Invalid(format!("bad weight entry {p:?}"))))
        })
        .collect()
}

fn parse_point(s: &str) -> Res<((apolar::Rational, apolar::Rational), i64)> {
    let bad = || Failure::Domain(Error::Invalid(format!("expected a:b@alpha, got {s:?}")));
    let (pt, alpha) = s.split_once('@').ok_or_else(bad)?;
    let (a, b) = pt.split_once(':').ok_or_else(bad)?;
    let alpha = alpha.trim().parse::<i64>().map_err(|_| bad())?;
    Ok(((parse_rational(a)?, parse_rational(b)?), alpha))
}

fn run(cmd: &Cmd, opts: &Opts) -> Res<Report> {
    let exec = Exec::default();
    let mut rep = Report::default();
    match cmd {
        Cmd::HfCheck { h } => {
            let h = parse_hf(h)?;
            let sec = rep.section("HF-CHECK");
            sec.kv("h", &h);
            match concavity_failure(&h) {
                Some(i) => {
                    sec.kv("valid", false).kv("fails_at", i);
                }
                None => {
                    sec.kv("valid", true);
                    describe_level(sec, &h);
                    sec.kv("partition", partition_from_hf(&h)?);
                }
            }
        }
        Cmd::HfEnumerate { count } => {
            let d = need(opts.d, "-d")?;
            let ts: Vec<usize> = match opts.t {
                Some(t) => vec![t],
                None => (1..=d + 1).collect(),
            };
            for t in ts {
                let all = enumerate_level_hf(t, d, exec);
                rep.section("ENUMERATE")
                    .kv("t", t)
                    .kv("d", d)
                    .kv("count", all.len())
                    .kv("grassmannian_dim", grassmannian_dim(t, d));
                if !count {
                    for h in &all {
                        rep.section("LEVEL").kv("h", h).kv("dim", dim_stratum(h));
                    }
                }
            }
        }
        Cmd::HfPartition { h, partition } => match (h, partition) {
            (Some(h), None) => {
                let h = parse_hf(h)?;
                rep.section("HF-PARTITION")
                    .kv("h", &h)
                    .kv("partition", partition_from_hf(&h)?);
            }
            (None, Some(p)) => {
                let mu = Partition::parse(p)?;
                let h = hf_from_partition(&mu, need(opts.t, "-t")?, need(opts.d, "-d")?)?;
                check_level(&h)?;
                rep.section("HF-PARTITION").kv("partition", &mu).kv("h", &h);
            }
            _ => return Err(Failure::Usage("give a Hilbert function or --partition".into())),
        },
        Cmd::Burch { h } => {
            let h = parse_hf(h)?;
            let (m, gens) = burch_ideal(&h)?;
            let sec = rep.section("BURCH");
            sec.kv("h", &h);
            describe_level(sec, &h);
            sec.kv("matrix", m.rows_text().join(" "))
                .kv("generators", forms_text(&gens));
        }
        Cmd::Hilbert { forms } => {
            let lambda = span(&read_forms(forms, opts, Ring::S)?)?;
            let h = hilbert_function(&lambda)?;
            let sec = rep.section("HILBERT");
            sec.kv("nvars", lambda.nvars()).kv("h", &h);
            // the concavity test characterises level functions only in two variables
            if lambda.nvars() == 2 {
                let level = concavity_failure(&h).is_none();
                sec.kv("level", level);
                if level {
                    describe_level(sec, &h);
                }
            }
        }
        Cmd::Ann { forms } => {
            let lambda = span(&read_forms(forms, opts, Ring::S)?)?;
            match opts.i {
                Some(j) => {
                    let slice = ann_slice(&lambda, j)?;
                    rep.section("ANN")
                        .kv("degree", j)
                        .kv("dim", slice.dim())
                        .kv("basis", forms_text(slice.basis()));
                }
                None => {
                    let gens = minimal_generators(&lambda)?;
                    let all: Vec<Form> = gens.iter().flat_map(|(_, g)| g.iter().cloned()).collect();
                    rep.section("ANN")
                        .kv("degrees", join(gens.iter().flat_map(|(j, g)| g.iter().map(move |_| j)), ","))
                        .kv("generators", forms_text(&all));
                }
            }
        }
        Cmd::Socle { forms } => {
            let gens = read_forms(forms, opts, Ring::R)?;
            let n = gens[0].nvars();
            let s = socle(&gens, n)?;
            let sec = rep.section("SOCLE");
            sec.kv("hilbert", join(&s.hilbert, ","))
                .kv("socle", join(s.socle.iter().map(|(j, k)| format!("({j},{k})")), ", "))
                .kv("level", s.is_level());
            if let Some((t, d)) = s.level_type() {
                sec.kv("type", format!("({t},{d})"));
            }
        }
        Cmd::Tangent { forms, hf } => {
            let lambda = lambda_from(forms, hf, opts)?;
            let h = hilbert_function(&lambda)?;
            let ts = tangent_space(&lambda, &h)?;
            let sec = rep.section("TANGENT");
            sec.kv("h", &h)
                .kv("dimension", ts.dimension)
                .kv("constraints", format!("{}x{}", ts.constraints.0, ts.constraints.1))
                .kv("verified", ts.verified);
            if ts.verified {
                sec.kv("formula", tangent_dim_formula(&h));
            }
        }
        Cmd::SecantDecompose { forms, hf } => {
            let lambda = lambda_from(forms, hf, opts)?;
            let planes = secant_decompose(&lambda)?;
            rep.section("SECANT-DECOMPOSE")
                .kv("h", hilbert_function(&lambda)?)
                .kv("planes", planes.len());
            for p in &planes {
                rep.section("PLANE")
                    .kv("apolar_form", p.apolar_form())
                    .kv("dimension", p.dimension())
                    .kv("codim", p.codim());
            }
        }
        Cmd::SecantIntersect { forms } => {
            let d = need(opts.d, "-d")? as u32;
            let planes = read_forms(forms, opts, Ring::R)?
                .into_iter()
                .map(|u| SecantPlane::new(u, d))
                .collect::<Result<Vec<_>, _>>()?;
            let (lambda, h) = secant_intersect(&planes)?;
            rep.section("SECANT-INTERSECT")
                .kv("dim", lambda.dim())
                .kv("h", &h)
                .kv("basis", forms_text(lambda.basis()));
        }
        Cmd::Gad { points } => {
            let d = need(opts.d, "-d")? as u32;
            if points.is_empty() {
                return Err(Failure::Usage("no points given".into()));
            }
            let (pts, alphas): (Vec<_>, Vec<_>) = points.iter().map(|p| parse_point(p)).collect::<Res<Vec<_>>>()?.into_iter().unzip();
            let g = Gad::new(pts, alphas)?;
            let w = gad_subspace(&g, d)?;
            rep.section("GAD")
                .kv("length", g.length())
                .kv("apolar_form", g.apolar_form())
                .kv("dim", w.dim())
                .kv("basis", forms_text(w.basis()));
        }
        Cmd::SigmaDim => {
            let (t, d, s) = (need(opts.t, "-t")?, need(opts.d, "-d")?, need(opts.s, "-s")?);
            let dim = sigma_dim(t, d, s)?;
            let (n1, n2) = sigma_bounds(t, d, s);
            rep.section("SIGMA-DIM").kv("dim", dim).kv("n1", n1).kv("n2", n2);
        }
        Cmd::WaringWitness => {
            let (t, d, s) = (need(opts.t, "-t")?, need(opts.d, "-d")?, need(opts.s, "-s")?);
            let h = waring_witness_hf(t, d, s)?;
            rep.section("WARING-WITNESS")
                .kv("h", &h)
                .kv("dim", dim_stratum(&h))
                .kv("n1", sigma_bounds(t, d, s).0);
        }
        Cmd::InSigma { forms } => {
            let s = need(opts.s, "-s")?;
            let lambda = span(&read_forms(forms, opts, Ring::S)?)?;
            let sec = rep.section("IN-SIGMA");
            match in_sigma(&lambda, s)? {
                Some(u) => sec.kv("member", true).kv("witness", u),
                None => sec.kv("member", false),
            };
        }
        Cmd::StackedDet { forms } => {
            let s = need(opts.s, "-s")?;
            let fs = read_forms(forms, opts, Ring::S)?;
            let res = stacked_catalecticant_det(&fs, s)?;
            let sec = rep.section("STACKED-DET");
            match &res {
                StackedResult::Determinant(x) => sec.kv("determinant", format_rational(x)),
                StackedResult::Rank { rank, bound } => sec.kv("rank", rank).kv("bound", bound),
            };
            sec.kv("vanishes", res.vanishes());
        }
        Cmd::HankelRank { form } => {
            let a = need(opts.i, "-i")?;
            let inline: Vec<String> = form.iter().cloned().collect();
            let fs = read_forms(&inline, opts, Ring::S)?;
            if fs.len() != 1 {
                return Err(Failure::Usage("hankel-rank takes exactly one form".into()));
            }
            let m = hankel_matrix(&fs[0], a)?;
            rep.section("HANKEL-RANK")
                .kv("rank", m.rank())
                .kv("shape", format!("{}x{}", m.rows(), m.cols()))
                .kv("matrix", matrix_text(&m));
        }
        Cmd::SchubertMul { a, b } => {
            let (t, d) = (need(opts.t, "-t")?, need(opts.d, "-d")?);
            let x = SchubertClass::parse(a, t, d + 1)?;
            let y = SchubertClass::parse(b, t, d + 1)?;
            rep.section("SCHUBERT-MUL").kv("product", x.mul(&y)?);
        }
        Cmd::Porteous => {
            let data = rank_data(opts)?;
            let class = porteous_class(data.t, data.d, data.i, data.r)?;
            rep.section("PORTEOUS")
                .kv("codim", data.expected_codim())
                .kv("class", class);
        }
        Cmd::Bott { weight } => {
            let res = match weight.split_once(';') {
                Some((alpha, beta)) => bott(&parse_weight(alpha)?, &parse_weight(beta)?)?,
                None => bott_weight(&parse_weight(weight)?),
            };
            bott_fields(rep.section("BOTT").kv("gamma", weight), &res);
        }
        Cmd::Kronecker { lambda, rho, mu } => {
            let (l, r, m) = (Partition::parse(lambda)?, Partition::parse(rho)?, Partition::parse(mu)?);
            let c = kronecker(&l, &r, &m, opts.cap_weight)?;
            rep.section("KRONECKER")
                .kv("coefficient", c)
                .kv("first_row_bound", dvir_bound(&l, &m))
                .kv("bound_holds", dvir_check(&l, &r, &m, opts.cap_weight)?);
        }
        Cmd::LascouxRanks { terms } => {
            let data = rank_data(opts)?;
            let table = lascoux_ranks(data, exec)?;
            let sec = rep.section("LASCOUX-RANKS");
            sec.kv("length", table.length());
            for (k, r) in table.ranks.iter().enumerate() {
                sec.kv(&format!("E^{}", -(k as i64)), r);
            }
            sec.kv("palindromic", table.is_palindromic());
            if *terms {
                for term in &table.terms {
                    rep.section("TERM")
                        .kv("lambda", term.lambda.braces())
                        .kv("p", term.p)
                        .kv("nu", term.nu)
                        .kv("weight", join(&term.weight, ","))
                        .kv("rank", term.rank());
                }
            }
        }
        Cmd::Components => {
            let data = rank_data(opts)?;
            let r = c1_c2_analysis(data, exec)?;
            let sec = rep.section("COMPONENTS");
            sec.kv("expected_codim", r.bound)
                .kv("candidates", r.candidates.len())
                .kv("c1", r.c1)
                .kv("c2", r.c2)
                .kv("c2_strict", r.c2_strict);
            if let Some(w) = &r.witness {
                sec.kv("witness", w);
            }
            for c in &r.candidates {
                rep.section("CANDIDATE").kv("h", &c.h).kv("dim", c.dim).kv("codim", c.codim);
            }
        }
        Cmd::E1Table => {
            let data = rank_data(opts)?;
            let m = need(opts.m, "-m")?;
            let table = e1_table(data, m, opts.cap_weight, exec)?;
            let sec = rep.section("E1-TABLE");
            sec.kv("m", m).kv("cap_weight", opts.cap_weight).kv("complete", table.is_complete());
            if !table.is_complete() {
                sec.kv("truncated", join(table.truncated.iter().map(Partition::braces), " "));
            }
            let e = data.expected_codim() as i64;
            for q in table.rows_used() {
                let row = join((0..=e).map(|k| table.get(-k, q)), ",");
                sec.kv(&format!("q={q}"), row);
            }
            let verdict = match check_vanishing(&table) {
                Some(b) => b.to_string(),
                None => "n/a".into(),
            };
            sec.kv("vanishing", verdict);
        }
    }
    Ok(rep)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            eprintln!("\n{GRAMMAR}");
            return ExitCode::from(1);
        }
    };
    match run(&cli.cmd, &cli.opts) {
        Ok(rep) => {
            let mut out = io::stdout().lock();
            let _ = out.write_all(rep.render(cli.opts.format).as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}\n\n{GRAMMAR}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
