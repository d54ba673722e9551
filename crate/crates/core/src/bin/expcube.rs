use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use expansion_cubes::complex::{
    act_vertex, bfs, check_flag, cube_intersection, cube_vertices, cubes_at, intersection_lemma_check, is_subgroup,
    join, link_graph, stabilizer, BfsCaps,
};
use expansion_cubes::io::{read_json, CubeFile, ElementFile, GroupFile, InstanceSelector, VertexFile};
use expansion_cubes::oracle::{brute_cube_intersection, Seed};
use expansion_cubes::thompson::ThompsonV;
use expansion_cubes::verify::run_all;
use expansion_cubes::{is_full_support, Error, ExpansionInstance, Vertex};

#[derive(Parser)]
#[command(name = "expcube", version, about = "Cubical complexes of simple expansion sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical literal of a raw element file
    Canon {
        /// `v` or `houghton:N`
        #[arg(long)]
        instance: InstanceSelector,
        file: PathBuf,
    },
    /// Neighbors of a vertex with their heights
    Neighbors { vertex: PathBuf },
    /// Link graph, optionally with the flag check
    Link {
        vertex: PathBuf,
        #[arg(long)]
        check_flag: bool,
        #[arg(long, default_value_t = 6)]
        max_clique: usize,
    },
    /// Cubes containing a vertex
    Cubes {
        vertex: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Intersection of two cubes
    Intersect {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        verify_brute: bool,
    },
    /// Common upper bound with ascending paths
    Join { first: PathBuf, second: PathBuf },
    /// Breadth-first exploration; prints JSON unless an output file is given
    Bfs {
        vertex: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Image of a vertex under a group element
    Act { group: PathBuf, vertex: PathBuf },
    /// Stabilizer of a vertex
    Stabilizer { vertex: PathBuf },
    /// Seeded property suite
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    All {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

enum Failure {
    Input(Error),
    Verification(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<(), Failure>;

/// Runs `$body` with `$inst` bound to the instance named by `$sel`.
macro_rules! dispatch {
    ($sel:expr, $inst:ident => $body:expr) => {
        match $sel {
            InstanceSelector::V => {
                let $inst = &ThompsonV;
                $body
            }
            sel @ InstanceSelector::Houghton(_) => {
                let h = sel.houghton().unwrap();
                let $inst = &h;
                $body
            }
        }
    };
}

fn print(value: &Value) {
    let text = serde_json::to_string(value).expect("json values serialize");
    // a closed pipe downstream is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn to_value<T: serde::Serialize + ?Sized>(t: &T) -> Value {
    serde_json::to_value(t).expect("library values serialize")
}

fn full_vertex<I: ExpansionInstance>(inst: &I, file: &VertexFile) -> Result<Vertex<I::Element>, Failure> {
    let v = file.vertex(inst)?;
    if !is_full_support(inst, &v) {
        return Err(Failure::Input(Error::NotFullSupport));
    }
    Ok(v)
}

fn same_instance(a: InstanceSelector, b: InstanceSelector) -> Result<InstanceSelector, Failure> {
    if a != b {
        return Err(Failure::Input(Error::Parse(format!("inputs use different instances ({a} and {b})"))));
    }
    Ok(a)
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(e.into()))
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Canon { instance, file } => {
            let raw: ElementFile = read_json(file)?;
            print(&raw.canon(instance)?);
        }
        Command::Neighbors { vertex } => {
            let file: VertexFile = read_json(vertex)?;
            dispatch!(file.selector()?, inst => {
                let v = full_vertex(inst, &file)?;
                let link = link_graph(inst, &v);
                let rows: Vec<Value> = link
                    .moves
                    .iter()
                    .zip(&link.neighbors)
                    .map(|(m, w)| json!({"move": to_value(m), "height": w.height(), "elements": to_value(w)}))
                    .collect();
                print(&json!({"height": v.height(), "degree": rows.len(), "neighbors": rows}));
            })
        }
        Command::Link { vertex, check_flag: flag, max_clique } => {
            let file: VertexFile = read_json(vertex)?;
            dispatch!(file.selector()?, inst => {
                let v = full_vertex(inst, &file)?;
                let link = link_graph(inst, &v);
                let mut out = json!({"nodes": to_value(&link.moves), "edges": to_value(&link.edges())});
                if flag {
                    let report = check_flag(inst, &v, max_clique);
                    out["flag"] = json!({
                        "passed": report.passed(),
                        "cliques_checked": report.cliques_checked,
                        "largest_clique": report.largest_clique,
                        "failures": report.failures,
                    });
                    print(&out);
                    if !report.passed() {
                        return Err(Failure::Verification("link condition fails".into()));
                    }
                } else {
                    print(&out);
                }
            })
        }
        Command::Cubes { vertex, max_dim } => {
            let file: VertexFile = read_json(vertex)?;
            let sel = file.selector()?;
            dispatch!(sel, inst => {
                let v = full_vertex(inst, &file)?;
                let mut rows = Vec::new();
                for c in cubes_at(inst, &v, max_dim) {
                    let corners = cube_vertices(inst, &c)?;
                    rows.push(json!({
                        "dim": c.dim(),
                        "base": to_value(c.base()),
                        "active": to_value(c.active()),
                        "vertices": to_value(&corners),
                    }));
                }
                print(&Value::Array(rows));
            })
        }
        Command::Intersect { first, second, verify_brute } => {
            let (a, b): (CubeFile, CubeFile) = (read_json(first)?, read_json(second)?);
            let sel = same_instance(a.selector()?, b.selector()?)?;
            dispatch!(sel, inst => {
                let (c, d) = (a.cube(inst)?, b.cube(inst)?);
                let meet = cube_intersection(inst, &c, &d)?;
                let corners = match &meet {
                    Some(m) => cube_vertices(inst, m)?,
                    None => Vec::new(),
                };
                let cube = meet.as_ref().map(|m| to_value(&CubeFile::new(sel, m)));
                let lemma = intersection_lemma_check(inst, &c, &d)?;
                let mut out = json!({"intersection": cube, "vertices": to_value(&corners), "lemma_passed": lemma.passed()});
                let mut ok = lemma.passed();
                if verify_brute {
                    let agrees = brute_cube_intersection(inst, &c, &d) == corners;
                    out["brute_force_agrees"] = json!(agrees);
                    ok &= agrees;
                }
                print(&out);
                if !ok {
                    return Err(Failure::Verification("intersection check failed".into()));
                }
            })
        }
        Command::Join { first, second } => {
            let (a, b): (VertexFile, VertexFile) = (read_json(first)?, read_json(second)?);
            let sel = same_instance(a.selector()?, b.selector()?)?;
            dispatch!(sel, inst => {
                let (v1, v2) = (full_vertex(inst, &a)?, full_vertex(inst, &b)?);
                let w = join(inst, &v1, &v2)?;
                w.verify(inst, &v1, &v2)?;
                print(&json!({
                    "join": to_value(&VertexFile::new(sel, &w.upper)),
                    "from_first": to_value(&w.from_first.steps),
                    "from_second": to_value(&w.from_second.steps),
                }));
            })
        }
        Command::Bfs { vertex, radius, dot, json: json_path, cap } => {
            let file: VertexFile = read_json(vertex)?;
            dispatch!(file.selector()?, inst => {
                let v = full_vertex(inst, &file)?;
                let g = bfs(inst, &v, radius, BfsCaps { max_vertices: cap });
                if let Some(p) = &dot {
                    write_text(p, &g.to_dot())?;
                }
                if let Some(p) = &json_path {
                    write_text(p, &(g.to_json() + "\n"))?;
                }
                if dot.is_none() && json_path.is_none() {
                    let _ = writeln!(std::io::stdout().lock(), "{}", g.to_json());
                }
                eprintln!("{} vertices, {} edges", g.vertices.len(), g.edges.len());
                if g.partial {
                    return Err(Failure::Cap(Error::CapExceeded(cap).to_string()));
                }
            })
        }
        Command::Act { group, vertex } => {
            let (gf, vf): (GroupFile, VertexFile) = (read_json(group)?, read_json(vertex)?);
            let sel = same_instance(gf.selector()?, vf.selector()?)?;
            dispatch!(sel, inst => {
                let g = gf.element(inst)?;
                let v = vf.vertex(inst)?;
                print(&to_value(&VertexFile::new(sel, &act_vertex(inst, &g, &v))));
            })
        }
        Command::Stabilizer { vertex } => {
            let file: VertexFile = read_json(vertex)?;
            dispatch!(file.selector()?, inst => {
                let v = full_vertex(inst, &file)?;
                let stab = stabilizer(inst, &v)?;
                let closed = is_subgroup(inst, &stab);
                print(&json!({"order": stab.len(), "is_group": closed, "elements": to_value(&stab)}));
                if !closed {
                    return Err(Failure::Verification("stabilizer is not closed".into()));
                }
            })
        }
        Command::Verify { target: VerifyTarget::All { seed, samples } } => {
            let report = run_all(Seed(seed), samples);
            for check in &report.checks {
                println!("{check}");
            }
            if !report.passed() {
                return Err(Failure::Verification("property suite failed".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}
