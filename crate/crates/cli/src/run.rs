use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use qtanner::builtin::{cyclic_pair, example_red_nonempty, petersen_pair, remedied_petersen};
use qtanner::characterize::{
    condition_ii_check, general_qtanner_matrices, reconstruct_schreier_pair, round_trip, swapping_condition_check,
    PsiMap,
};
use qtanner::code::{
    css_distances, css_distances_or_cap, css_from_complex, css_violations, ldpc_report, random_information_set_bound,
    to_alist, CssCode, DistanceOptions, LinearCode,
};
use qtanner::complex::{build_complex, End, SquareComplex, SquareGraph};
use qtanner::gf2::BitMatrix;
use qtanner::graph::json::{graph_spec_to_json, parse_graph_spec};
use qtanner::graph::{
    bipartite_double_cover, cayley_graph, graphs_commute, inverse_pair_compat, overlap_check, schreier_graph,
    GroupTable, LabeledGraph, SchreierSpec, Side,
};
use qtanner::spectral::{eigenvalues_symmetric, lambda, product_spectrum_check, ramanujan_bound};

use crate::args::*;
use crate::report::{sha256_hex, CliError, CliResult, InputDigest, Outcome};

/// Residuals above this make the spectrum check fail.
const SPECTRUM_RESIDUAL_TOL: f64 = 1e-6;

/// Reads input files and remembers their digests.
#[derive(Default)]
pub struct Inputs {
    pub digests: Vec<InputDigest>,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> CliResult<String> {
        let bytes = fs::read(path).map_err(|e| CliError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        self.digests.push(InputDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(&bytes),
        });
        String::from_utf8(bytes).map_err(|_| CliError::Json {
            path: path.display().to_string(),
            message: "not valid UTF-8".into(),
        })
    }

    fn spec(&mut self, path: &Path) -> CliResult<SchreierSpec> {
        let text = self.read(path)?;
        parse_graph_spec(&text).map_err(|e| CliError::Json {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }

    fn squares(&mut self, path: &Path) -> CliResult<(SquareGraph, SquareGraph, PsiMap)> {
        let text = self.read(path)?;
        let parsed: SquarePairJson = serde_json::from_str(&text).map_err(|e| CliError::Json {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let g0 = SquareGraph::new(parsed.delta, parsed.g0.vertices, parsed.g0.edges)?;
        let g1 = SquareGraph::new(parsed.delta, parsed.g1.vertices, parsed.g1.edges)?;
        let psi = match parsed.psi {
            Some(p) => PsiMap::new(p)?,
            None => PsiMap::identity(g0.n_edges()),
        };
        Ok((g0, g1, psi))
    }
}

/// Square-graph pair file, read by `characterize` and written by
/// `complex build`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SquarePairJson {
    delta: usize,
    g0: SquareGraphJson,
    g1: SquareGraphJson,
    #[serde(default)]
    psi: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SquareGraphJson {
    vertices: Vec<usize>,
    edges: Vec<[End; 2]>,
}

impl SquareGraphJson {
    fn of(g: &SquareGraph) -> Self {
        Self {
            vertices: g.vertices().to_vec(),
            edges: g.edges().to_vec(),
        }
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn parse_local(text: &str) -> CliResult<LinearCode> {
    let Some(rows) = text.strip_prefix("parity:") else {
        return Ok(LinearCode::by_name(text)?);
    };
    let rows: Vec<Vec<u8>> = rows
        .split(',')
        .map(|r| {
            r.chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(CliError::Usage(format!("local code `{text}`: rows use only 0 and 1"))),
                })
                .collect()
        })
        .collect::<CliResult<_>>()?;
    let cols = rows[0].len();
    if cols == 0 || rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Usage(format!("local code `{text}`: rows must be nonempty and equally long")));
    }
    Ok(LinearCode::from_parity(BitMatrix::from_rows(cols, &rows)))
}

fn local_codes(l: &LocalArgs) -> CliResult<(LinearCode, LinearCode)> {
    let pick = |side: &Option<String>, name: &str| {
        side.as_ref()
            .or(l.local.as_ref())
            .ok_or_else(|| CliError::Usage(format!("no local code for the {name} side; pass --local or --local-{name}")))
            .and_then(|t| parse_local(t))
    };
    Ok((pick(&l.local_a, "a")?, pick(&l.local_b, "b")?))
}

fn distance_options(cli: &Cli) -> CliResult<DistanceOptions> {
    if cli.threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    Ok(DistanceOptions {
        cap: cli.cap,
        force: cli.force,
        threads: cli.threads,
    })
}

struct GraphPair {
    a: LabeledGraph,
    b: LabeledGraph,
    partition: Option<Vec<u8>>,
}

impl GraphPair {
    fn load(inputs: &mut Inputs, p: &PairArgs) -> CliResult<Self> {
        let (sa, sb) = (inputs.spec(&p.a)?, inputs.spec(&p.b)?);
        let (a, b) = (schreier_graph(&sa)?, schreier_graph(&sb)?);
        let partition = sa
            .partition()
            .or(sb.partition())
            .map(<[u8]>::to_vec)
            .or_else(|| a.two_coloring());
        Ok(Self { a, b, partition })
    }

    fn complex(&self) -> CliResult<SquareComplex> {
        let p = self.partition.as_ref().ok_or_else(|| {
            qtanner::Error::NotBipartite("no partition given and the first graph is not bipartite".into())
        })?;
        Ok(build_complex(&self.a, &self.b, p)?)
    }
}

fn ramanujan_entry(g: &LabeledGraph) -> CliResult<(Value, bool)> {
    let l = lambda(g)?;
    let bound = ramanujan_bound(g.delta());
    let ok = l <= bound + qtanner::spectral::RAMANUJAN_TOL;
    Ok((json!({ "n": g.n_vertices(), "delta": g.delta(), "lambda": l, "bound": bound, "ramanujan": ok }), ok))
}

fn check(kind: CheckKind, p: &GraphPair) -> CliResult<Outcome> {
    let (outputs, verdict) = match kind {
        CheckKind::Commute => {
            let c = graphs_commute(&p.a, &p.b)?;
            (json!({ "commute": c }), c)
        }
        CheckKind::Overlap => {
            let o = overlap_check(&p.a, &p.b)?;
            (json!({ "overlapping_pairs": o.len(), "pairs": o }), o.is_empty())
        }
        CheckKind::Bipartite => {
            let (on_a, on_b) = match &p.partition {
                Some(part) if part.len() == p.a.n_vertices() && part.len() == p.b.n_vertices() => {
                    (p.a.is_bipartite_on(part), p.b.is_bipartite_on(part))
                }
                _ => (false, false),
            };
            (
                json!({ "partition": p.partition, "a_bipartite": on_a, "b_bipartite": on_b }),
                on_a && on_b,
            )
        }
        CheckKind::Pairs => {
            let c = inverse_pair_compat(&p.a, &p.b)?;
            (json!({ "compatible": c }), c)
        }
        CheckKind::Ramanujan => {
            let (a, ra) = ramanujan_entry(&p.a)?;
            let (b, rb) = ramanujan_entry(&p.b)?;
            (json!({ "graphs": [a, b] }), ra && rb)
        }
        CheckKind::Spectrum => {
            let r = product_spectrum_check(&p.a, &p.b)?;
            let ok = r.product_residual <= SPECTRUM_RESIDUAL_TOL
                && r.sum_residual <= SPECTRUM_RESIDUAL_TOL
                && r.eigenvector_residual <= SPECTRUM_RESIDUAL_TOL
                && r.bound_holds != Some(false);
            (serde_json::to_value(&r).expect("serializable"), ok)
        }
    };
    Ok(Outcome {
        outputs,
        verdict: Some(verdict),
        artifacts: Vec::new(),
    })
}

fn complex_outcome(x: &SquareComplex) -> Outcome {
    let (g0, g1) = x.square_graphs();
    let squares = SquarePairJson {
        delta: x.delta(),
        g0: SquareGraphJson::of(&g0),
        g1: SquareGraphJson::of(&g1),
        psi: None,
    };
    Outcome {
        outputs: json!({
            "n_vertices": x.partition().len(),
            "delta": x.delta(),
            "v0": x.side(0).len(),
            "v1": x.side(1).len(),
            "n_squares": x.n_squares(),
            "g0_edges": g0.n_edges(),
            "g1_edges": g1.n_edges(),
        }),
        verdict: None,
        artifacts: vec![
            ("complex.json".into(), pretty(&x.dump())),
            ("squares.json".into(), pretty(&squares)),
        ],
    }
}

fn alists(h0: &BitMatrix, h1: &BitMatrix) -> Vec<(String, String)> {
    vec![("h0.alist".into(), to_alist(h0)), ("h1.alist".into(), to_alist(h1))]
}

fn code_params(c: &CssCode) -> Value {
    json!({ "n": c.n(), "k": c.k(), "dim_c0": c.dim_c0(), "dim_c1": c.dim_c1() })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn code(kind: CodeKind, x: &SquareComplex, local: &LocalArgs, cli: &Cli) -> CliResult<Outcome> {
    let (ca, cb) = local_codes(local)?;
    let c = css_from_complex(x, &ca, &cb)?;
    let bound = |c: &CssCode| {
        (local.trials > 0).then(|| random_information_set_bound(c, local.trials, cli.seed))
    };
    let outcome = match kind {
        CodeKind::Build => Outcome {
            outputs: merge(code_params(&c), json!({ "ldpc": ldpc_report(&c) })),
            verdict: None,
            artifacts: alists(c.h0(), c.h1()),
        },
        CodeKind::ExportAlist => Outcome {
            outputs: json!({ "n": c.n(), "h0_rows": c.h0().rows(), "h1_rows": c.h1().rows() }),
            verdict: None,
            artifacts: alists(c.h0(), c.h1()),
        },
        CodeKind::Distance => {
            let d = css_distances(&c, &distance_options(cli)?)?;
            Outcome {
                outputs: merge(code_params(&c), json!({ "distances": d, "upper_bounds": bound(&c) })),
                verdict: None,
                artifacts: Vec::new(),
            }
        }
        CodeKind::Report => {
            let d = css_distances_or_cap(&c, &distance_options(cli)?);
            Outcome {
                outputs: merge(
                    code_params(&c),
                    json!({ "ldpc": ldpc_report(&c), "distances": d, "upper_bounds": bound(&c) }),
                ),
                verdict: None,
                artifacts: Vec::new(),
            }
        }
    };
    Ok(outcome)
}

fn characterize(kind: CharKind, g0: &SquareGraph, g1: &SquareGraph, psi: &PsiMap, local: &LocalArgs) -> CliResult<Outcome> {
    let mut out = Outcome::default();
    match kind {
        CharKind::Ii => {
            let r = condition_ii_check(g0, g1, psi)?;
            out.verdict = Some(r.holds);
            out.outputs = serde_json::to_value(&r).expect("serializable");
        }
        CharKind::Swap => {
            let r = swapping_condition_check(g0, g1, psi)?;
            out.verdict = Some(r.holds);
            out.outputs = serde_json::to_value(&r).expect("serializable");
        }
        CharKind::Reconstruct => {
            let r = reconstruct_schreier_pair(g0, g1, psi)?;
            let ok = round_trip(g0, g1, psi)?;
            let spec = |g: &LabeledGraph, name: &str| {
                g.to_spec().map(|s| graph_spec_to_json(&s) + "\n").ok_or_else(|| {
                    CliError::Core(qtanner::Error::Unsupported(format!(
                        "reconstructed {name} graph has a vertex-dependent label pairing"
                    )))
                })
            };
            out.artifacts = vec![("a.json".into(), spec(&r.a, "A")?), ("b.json".into(), spec(&r.b, "B")?)];
            out.outputs = json!({
                "n_vertices": r.partition.len(),
                "delta": r.a.delta(),
                "n_squares": r.complex.n_squares(),
                "round_trip": ok,
            });
            out.verdict = Some(ok);
        }
        CharKind::GeneralCss => {
            let (ca, cb) = local_codes(local)?;
            let (h0, h1) = general_qtanner_matrices(g0, g1, psi, &ca, &cb)?;
            let violations = css_violations(&h0, &h1)?;
            out.outputs = json!({ "n": h0.cols(), "css_violations": violations });
            if violations == 0 {
                let c = CssCode::new(h0.clone(), h1.clone())?;
                out.outputs = merge(out.outputs, code_params(&c));
            }
            out.verdict = Some(violations == 0);
            out.artifacts = alists(&h0, &h1);
        }
    }
    Ok(out)
}

fn graph_build(group: &str, labels: &[usize], side: SideArg, cover: bool, name: &str) -> CliResult<Outcome> {
    let bad = || CliError::Usage(format!("--group `{group}`: expected cyclic:N or dihedral:N with N >= 1"));
    let (family, n) = group.split_once(':').ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    let g = match family {
        "cyclic" => GroupTable::cyclic(n),
        "dihedral" => GroupTable::dihedral(n),
        _ => return Err(bad()),
    };
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let mut spec = cayley_graph(&g, labels, side)?;
    if cover {
        spec = bipartite_double_cover(&spec.to_graph())
            .to_spec()
            .expect("a cover of a Schreier graph keeps a uniform pairing");
    }
    if name.contains(['/', '\\']) || name.starts_with('.') {
        return Err(CliError::Usage(format!("--name `{name}` must be a plain file name")));
    }
    Ok(Outcome {
        outputs: json!({ "n": spec.n_vertices(), "delta": spec.delta(), "group_order": g.order() }),
        verdict: None,
        artifacts: vec![(name.to_string(), graph_spec_to_json(&spec) + "\n")],
    })
}

fn graph_inspect(spec: &SchreierSpec) -> CliResult<Outcome> {
    let g = schreier_graph(spec)?;
    let spectrum = eigenvalues_symmetric(&g.adjacency())?;
    let lam = if g.n_vertices() > 2 { Some(lambda(&g)?) } else { None };
    let bound = ramanujan_bound(g.delta());
    Ok(Outcome {
        outputs: json!({
            "n": g.n_vertices(),
            "delta": g.delta(),
            "components": g.n_components(),
            "bipartite": g.is_bipartite(),
            "self_loops": g.has_self_loops(),
            "well_labeled": g.well_labeled(),
            "eigenvalues": spectrum.eigenvalues,
            "lambda": lam,
            "ramanujan_bound": bound,
            "ramanujan": lam.map(|l| l <= bound + qtanner::spectral::RAMANUJAN_TOL),
        }),
        verdict: None,
        artifacts: Vec::new(),
    })
}

fn example_pair(ex: &ExampleArgs, pair: &GraphPair, complex: impl Fn() -> CliResult<SquareComplex>, cli: &Cli) -> CliResult<Outcome> {
    if let Some(k) = ex.check {
        return check(k, pair);
    }
    if ex.complex {
        return Ok(complex_outcome(&complex()?));
    }
    if let Some(k) = ex.code {
        return code(k, &complex()?, &ex.local, cli);
    }
    if let Some(k) = ex.characterize {
        let (g0, g1) = complex()?.square_graphs();
        return characterize(k, &g0, &g1, &PsiMap::identity(g0.n_edges()), &ex.local);
    }
    Ok(Outcome {
        outputs: json!({
            "n": pair.a.n_vertices(),
            "delta_a": pair.a.delta(),
            "delta_b": pair.b.delta(),
            "commute": graphs_commute(&pair.a, &pair.b)?,
        }),
        verdict: None,
        artifacts: Vec::new(),
    })
}

fn example(cmd: &ExampleCmd, cli: &Cli) -> CliResult<Outcome> {
    match cmd {
        ExampleCmd::Petersen(ex) => {
            let (sa, sb) = petersen_pair();
            let pair = GraphPair {
                a: sa.to_graph(),
                b: sb.to_graph(),
                partition: None,
            };
            let remedied = || -> CliResult<SquareComplex> {
                let (a, b, p) = remedied_petersen()?;
                Ok(build_complex(&a, &b, &p)?)
            };
            example_pair(ex, &pair, remedied, cli)
        }
        ExampleCmd::Cyclic { m, args } => {
            if *m < 3 {
                return Err(CliError::Usage(format!("cyclic example needs m >= 3, got {m}")));
            }
            let (a, b) = cyclic_pair(*m)?;
            let partition = a.partition().map(<[u8]>::to_vec);
            let pair = GraphPair { a, b, partition };
            example_pair(args, &pair, || pair.complex(), cli)
        }
        ExampleCmd::RedNonempty(ex) => {
            let (g, psi) = example_red_nonempty();
            if ex.check.is_some() || ex.code.is_some() || ex.complex {
                return Err(CliError::Usage(
                    "red-nonempty is a square-graph witness; only --characterize applies".into(),
                ));
            }
            match ex.characterize {
                Some(k) => characterize(k, &g, &g, &psi, &ex.local),
                None => Ok(Outcome {
                    outputs: json!({ "n_vertices": g.n_vertices(), "delta": g.delta(), "n_edges": g.n_edges() }),
                    verdict: None,
                    artifacts: Vec::new(),
                }),
            }
        }
    }
}

pub fn run(cli: &Cli, inputs: &mut Inputs) -> CliResult<Outcome> {
    match &cli.cmd {
        Cmd::Graph(GraphCmd::Build {
            group,
            labels,
            side,
            cover,
            name,
        }) => graph_build(group, labels, *side, *cover, name),
        Cmd::Graph(GraphCmd::Inspect { spec }) => graph_inspect(&inputs.spec(spec)?),
        Cmd::Check(c) => {
            let (kind, pair) = match c {
                CheckCmd::Commute(p) => (CheckKind::Commute, p),
                CheckCmd::Overlap(p) => (CheckKind::Overlap, p),
                CheckCmd::Bipartite(p) => (CheckKind::Bipartite, p),
                CheckCmd::Pairs(p) => (CheckKind::Pairs, p),
                CheckCmd::Spectrum(p) => (CheckKind::Spectrum, p),
                CheckCmd::Ramanujan { specs } => {
                    let mut entries = Vec::new();
                    let mut all = true;
                    for path in specs {
                        let (v, ok) = ramanujan_entry(&schreier_graph(&inputs.spec(path)?)?)?;
                        entries.push(v);
                        all &= ok;
                    }
                    return Ok(Outcome {
                        outputs: json!({ "graphs": entries }),
                        verdict: Some(all),
                        artifacts: Vec::new(),
                    });
                }
            };
            check(kind, &GraphPair::load(inputs, pair)?)
        }
        Cmd::Complex(ComplexCmd::Build(p)) => Ok(complex_outcome(&GraphPair::load(inputs, p)?.complex()?)),
        Cmd::Code(c) => {
            let (kind, args) = match c {
                CodeCmd::Build(a) => (CodeKind::Build, a),
                CodeCmd::Distance(a) => (CodeKind::Distance, a),
                CodeCmd::ExportAlist(a) => (CodeKind::ExportAlist, a),
                CodeCmd::Report(a) => (CodeKind::Report, a),
            };
            let x = GraphPair::load(inputs, &args.pair)?.complex()?;
            code(kind, &x, &args.local, cli)
        }
        Cmd::Characterize(c) => {
            let none = LocalArgs::default();
            let (kind, path, local) = match c {
                CharCmd::Ii { squares } => (CharKind::Ii, squares, &none),
                CharCmd::Swap { squares } => (CharKind::Swap, squares, &none),
                CharCmd::Reconstruct { squares } => (CharKind::Reconstruct, squares, &none),
                CharCmd::GeneralCss { squares, local } => (CharKind::GeneralCss, squares, local),
            };
            let (g0, g1, psi) = inputs.squares(path)?;
            characterize(kind, &g0, &g1, &psi, local)
        }
        Cmd::Example(e) => example(e, cli),
    }
}
