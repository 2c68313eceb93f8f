use std::fs;
use std::path::Path;

use paraug::corpus::{random_even_coloring, random_mop, rng};
use paraug::embed::{audit_drawing, longest_face, render_svg, tutte_embed};
use paraug::io::{
    augmentation_to_json, instance_to_json, parse_augmentation, parse_instance, Instance,
};
use paraug::mop::Blocked;
use paraug::oracle::{
    enumerate_augmentations_with, max_fixable_reds, oracle_geometric_min, oracle_mop_min,
    pentagon_instance, OracleBudget,
};
use paraug::reduction::{assignment_to_augmentation, compile, minimum_t_join, Cnf3Instance};
use paraug::{
    check_augmentable, construct_augmentation, min_augmentation_dp, path_eulerian_check,
    star_all_but_two, zigzag_matching, AugmentabilityWitness, Augmentation, CyclicMop, Edge, Error,
    ParityColoring, PlaneGraph, Result,
};
use rand::Rng;

use crate::{Budget, Command};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance> {
    parse_instance(&read(path)?)
}

fn load_mop(path: &Path) -> Result<(CyclicMop, ParityColoring)> {
    match load(path)? {
        Instance::Mop(g, c) => Ok((g, c)),
        other => Err(Error::InvalidInput(format!(
            "expected a mop instance, got {:?}",
            other.kind()
        ))),
    }
}

fn budget(b: &Budget) -> OracleBudget {
    OracleBudget {
        max_vertices: b.max_vertices,
        max_candidate_edges: b.max_candidates,
        node_limit: b.node_limit,
    }
}

fn label(e: &Edge) -> String {
    format!("({}, {})", e.0 + 1, e.1 + 1)
}

fn labels(es: &[Edge]) -> String {
    es.iter().map(label).collect::<Vec<_>>().join(" ")
}

fn save_aug(out: &Option<std::path::PathBuf>, h: &Augmentation) -> Result<()> {
    match out {
        Some(p) => write(p, &augmentation_to_json(h)),
        None => Ok(()),
    }
}

fn describe(w: &AugmentabilityWitness) -> String {
    use AugmentabilityWitness::*;
    match w {
        AllBlue => "augmentable: no red vertex".into(),
        BlueDiagonal(d) => format!("augmentable: blue diagonal {}", label(d)),
        NonParallelRedBlue(a, b) => format!(
            "augmentable: non-parallel red-blue diagonals {} {}",
            label(a),
            label(b)
        ),
        ParallelPlusDegreeTwo { d1, d2, j } => format!(
            "augmentable: parallel red-blue diagonals {} {} with degree-two vertex {}",
            label(d1),
            label(d2),
            j + 1
        ),
        NotAugmentable(Blocked::OddRedCount) => "not augmentable: odd red count".into(),
        NotAugmentable(Blocked::NoCondition { .. }) => "not augmentable: no condition holds".into(),
    }
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidInput(format!("bad vertex range {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo < 3 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn zero_based(vs: &[usize], n: usize) -> Result<Vec<usize>> {
    vs.iter()
        .map(|&v| {
            if v == 0 || v > n {
                Err(Error::InvalidInput(format!(
                    "vertex {v} out of range 1..={n}"
                )))
            } else {
                Ok(v - 1)
            }
        })
        .collect()
}

fn plane_of(inst: &Instance) -> Option<PlaneGraph> {
    match inst {
        Instance::Mop(g, _) => Some(g.to_plane_graph()),
        Instance::Plane { graph, .. } => Some(graph.clone()),
        Instance::Geometric(_) => None,
    }
}

pub fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Check { instance } => {
            let (g, col) = load_mop(&instance)?;
            let w = check_augmentable(&g, &col);
            println!("{}", describe(&w));
            if w.is_positive() {
                let h = construct_augmentation(&g, &col, &w)?;
                println!("augmentation: {}", labels(&h.edges));
            }
            Ok(if w.is_positive() { 0 } else { 1 })
        }
        Command::Min { instance, out } => {
            let (g, col) = load_mop(&instance)?;
            match min_augmentation_dp(&g, &col) {
                Some((h, size)) => {
                    println!("{size}");
                    save_aug(&out, &h)?;
                    Ok(0)
                }
                None => {
                    println!("infeasible");
                    Ok(1)
                }
            }
        }
        Command::Reduce {
            cnf,
            variant,
            out,
            assignment,
            aug_out,
        } => {
            let phi = Cnf3Instance::parse(&read(&cnf)?)?;
            let inst = compile(&phi, variant)?;
            let g = &inst.graph;
            println!(
                "variant {variant}: n = {}, m = {}, red = {}, faces = {}",
                g.n(),
                g.num_edges(),
                inst.colors.red_count(),
                g.faces()?.len()
            );
            println!(
                "3-connected: {}",
                paraug::reduction::three_connectivity_check(g)
            );
            if let Some(p) = out {
                let file = Instance::Plane {
                    graph: g.clone(),
                    colors: inst.colors.clone(),
                    tags: inst.tags.clone(),
                };
                write(&p, &instance_to_json(&file))?;
            }
            if let Some(a) = assignment {
                let values: Vec<bool> = a
                    .chars()
                    .map(|c| match c {
                        'T' | 't' | '1' => Ok(true),
                        'F' | 'f' | '0' => Ok(false),
                        _ => Err(Error::InvalidInput(format!(
                            "bad assignment character {c:?}"
                        ))),
                    })
                    .collect::<Result<_>>()?;
                match assignment_to_augmentation(&inst, &values)? {
                    Some(h) => {
                        println!("augmentation: {} edges", h.len());
                        save_aug(&aug_out, &h)?;
                    }
                    None => {
                        println!("assignment falsifies the formula");
                        return Ok(1);
                    }
                }
            }
            Ok(0)
        }
        Command::Corpus {
            seed,
            n,
            count,
            out,
        } => {
            let (lo, hi) = parse_range(&n)?;
            fs::create_dir_all(&out)
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", out.display())))?;
            let mut r = rng(seed);
            for i in 0..count {
                let n = r.gen_range(lo..=hi);
                let g = random_mop(n, &mut r);
                let c = random_even_coloring(n, &mut r);
                let path = out.join(format!("mop_{:04}.json", i + 1));
                write(&path, &instance_to_json(&Instance::Mop(g, c)))?;
            }
            println!("wrote {count} instances to {}", out.display());
            Ok(0)
        }
        Command::Match { instance, out } => {
            let (g, col) = load_mop(&instance)?;
            let r = zigzag_matching(&g, &col);
            println!("matching: {}", labels(&r.matching.edges));
            println!(
                "unmet: {:?}",
                r.unmet.iter().map(|v| v + 1).collect::<Vec<_>>()
            );
            save_aug(&out, &r.matching)?;
            Ok(0)
        }
        Command::Star { instance, out } => {
            let (g, col) = load_mop(&instance)?;
            let (h, unmet) = star_all_but_two(&g, &col);
            println!("star: {}", labels(&h.edges));
            println!(
                "unmet: {:?}",
                unmet.iter().map(|v| v + 1).collect::<Vec<_>>()
            );
            save_aug(&out, &h)?;
            Ok(0)
        }
        Command::Oracle {
            instance,
            budget: b,
            out,
        } => {
            let found = match load(&instance)? {
                Instance::Mop(g, c) => oracle_mop_min(&g, &c, &budget(&b))?,
                Instance::Geometric(g) => oracle_geometric_min(&g, &budget(&b))?,
                Instance::Plane { .. } => {
                    return Err(Error::InvalidInput(
                        "oracle takes mop or geometric instances; use enumerate".into(),
                    ))
                }
            };
            match found {
                Some(o) => {
                    println!("{}", o.size);
                    println!("optimal augmentations: {}", o.optima);
                    save_aug(&out, &o.augmentation)?;
                    Ok(0)
                }
                None => {
                    println!("infeasible");
                    Ok(1)
                }
            }
        }
        Command::Enumerate {
            instance,
            faces,
            free,
            budget: b,
            out,
        } => {
            let inst = load(&instance)?;
            let g = plane_of(&inst).ok_or_else(|| {
                Error::InvalidInput("enumerate needs a mop or plane instance".into())
            })?;
            let all = g.faces()?;
            let region = if faces.is_empty() {
                (0..all.len()).filter(|&f| all[f].len() > 3).collect()
            } else {
                zero_based(&faces, all.len())?
            };
            let free = zero_based(&free, g.n())?;
            let hs = enumerate_augmentations_with(&g, inst.colors(), &region, &free, &budget(&b))?;
            println!("{} minimal augmentations", hs.len());
            for h in &hs {
                println!("  {}", labels(&h.edges));
            }
            if let Some(p) = out {
                let docs: Vec<serde_json::Value> = hs
                    .iter()
                    .map(|h| serde_json::from_str(&augmentation_to_json(h)).expect("valid JSON"))
                    .collect();
                write(
                    &p,
                    &(serde_json::to_string_pretty(&docs).expect("serializable") + "\n"),
                )?;
            }
            Ok(if hs.is_empty() { 1 } else { 0 })
        }
        Command::Pentagon {
            k,
            certify,
            budget: b,
            out,
        } => {
            let p = pentagon_instance(k)?;
            println!(
                "k = {k}: n = {}, red = {}, 2n/5 = {:.1} (all vertices), {:.1} (pentagon vertices)",
                p.n, p.red_count, p.bound_all, p.bound_red
            );
            if certify {
                let best = max_fixable_reds(&p.graph, &budget(&b))?;
                println!(
                    "most red parities fixable: {best} (2 per pentagon: {})",
                    best == 2 * k
                );
            }
            if let Some(path) = out {
                write(&path, &instance_to_json(&Instance::Geometric(p.graph)))?;
            }
            Ok(0)
        }
        Command::Tjoin { instance, t } => {
            let inst = load(&instance)?;
            let (n, edges) = match &inst {
                Instance::Mop(g, _) => (g.n(), g.edges()),
                Instance::Plane { graph, .. } => (graph.n(), graph.edges()),
                Instance::Geometric(g) => (g.n(), g.edges.clone()),
            };
            let t = zero_based(&t, n)?;
            let j = minimum_t_join(n, &edges, &t)?;
            println!("{}", j.len());
            println!("join: {}", labels(&j));
            Ok(0)
        }
        Command::Embed {
            instance,
            outer_face,
            out,
        } => {
            let inst = load(&instance)?;
            let (g, colors, tags) = match inst {
                Instance::Plane {
                    graph,
                    colors,
                    tags,
                } => (graph, colors, tags),
                Instance::Mop(..) | Instance::Geometric(_) => {
                    return Err(Error::InvalidInput("embed needs a plane instance".into()))
                }
            };
            let outer = match outer_face {
                Some(f) => zero_based(&[f], g.faces()?.len())?[0],
                None => longest_face(&g)?,
            };
            let d = tutte_embed(&g, outer)?;
            let audit = audit_drawing(&g, &d.coords, outer)?;
            println!("residual: {:.3e}", d.residual);
            println!("crossings: {}", audit.crossings.len());
            println!("non-convex faces: {}", audit.nonconvex.len());
            if let Some(p) = out {
                let mut graph = g;
                graph.coords = Some(d.coords);
                write(
                    &p,
                    &instance_to_json(&Instance::Plane {
                        graph,
                        colors,
                        tags,
                    }),
                )?;
            }
            Ok(if audit.is_clean() { 0 } else { 1 })
        }
        Command::Render { instance, aug, out } => {
            let inst = load(&instance)?;
            let (coords, edges) = match &inst {
                Instance::Mop(g, _) => (
                    g.to_plane_graph().coords.expect("circle placement"),
                    g.edges(),
                ),
                Instance::Plane { graph, .. } => {
                    let coords = match &graph.coords {
                        Some(c) => c.clone(),
                        None => tutte_embed(graph, longest_face(graph)?)?.coords,
                    };
                    (coords, graph.edges())
                }
                Instance::Geometric(g) => (
                    g.points.iter().map(|p| p.to_f64()).collect(),
                    g.edges.clone(),
                ),
            };
            let h = match aug {
                Some(p) => Some(parse_augmentation(&read(&p)?, inst.n())?),
                None => None,
            };
            let svg = render_svg(
                &coords,
                &edges,
                inst.colors(),
                h.as_ref().map(|h| h.edges.as_slice()),
            )?;
            write(&out, &svg)?;
            println!("wrote {}", out.display());
            Ok(0)
        }
        Command::PathEuler { instance } => match load(&instance)? {
            Instance::Geometric(g) => {
                if path_eulerian_check(&g)? {
                    println!("closable: the end-to-end segment misses the path");
                    Ok(0)
                } else {
                    println!("not closable: the end-to-end segment meets the path");
                    Ok(1)
                }
            }
            _ => Err(Error::InvalidInput(
                "path-euler needs a geometric instance".into(),
            )),
        },
    }
}
