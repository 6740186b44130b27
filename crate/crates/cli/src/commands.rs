use dirac_core::complexes::AlexanderDual;
use dirac_core::graphs::{self, Chordality, Graph};
use dirac_core::homological::{betti_table, is_shelling_order, projdim_and_reg, shelling_order};
use dirac_core::ideals::{self, has_linear_quotients, linear_quotients_order, MonomialIdeal};
use dirac_core::io;
use dirac_core::quasitrees::{self, MonomialMatrix, SignedMonomial};
use dirac_core::verify::{run_suite, suite_limits, SuiteOptions};
use dirac_core::{Error, FieldChoice, Limits, Result, SimplicialComplex};
use serde_json::{json, Value};

use crate::{check, read_input, Cli, Command, Global, Outcome};

fn complex_value(c: &SimplicialComplex) -> Value {
    serde_json::to_value(io::complex_to_json(c)).expect("serializable")
}

fn graph_value(g: &Graph) -> Value {
    serde_json::to_value(io::graph_to_json(g)).expect("serializable")
}

fn one_based(order: &[usize]) -> Vec<usize> {
    order.iter().map(|i| i + 1).collect()
}

fn signed_value(m: &SignedMonomial, pretty: bool) -> Value {
    if pretty {
        json!(m.to_string())
    } else {
        json!({ "sign": m.sign(), "monomial": m.monomial.exponents() })
    }
}

fn matrix_value(m: &MonomialMatrix, pretty: bool) -> Value {
    let rows: Vec<Value> = (0..m.num_rows())
        .map(|r| {
            let (i, j) = m.row_labels()[r];
            let entries: Vec<Value> = (0..m.num_cols())
                .map(|c| m.get(r, c).map(|e| signed_value(e, pretty)).unwrap_or(json!(0)))
                .collect();
            json!({ "label": [i + 1, j + 1], "entries": entries })
        })
        .collect();
    json!({ "rows": rows, "cols": m.num_cols() })
}

fn complex_input(g: &Global) -> Result<SimplicialComplex> {
    io::parse_complex(&read_input(g)?, g.minimalize)
}

fn ideal_input(g: &Global) -> Result<MonomialIdeal> {
    io::parse_ideal(&read_input(g)?)
}

fn graph_input(g: &Global) -> Result<Graph> {
    io::parse_graph(&read_input(g)?)
}

fn on_complex(g: &Global, f: impl FnOnce(&SimplicialComplex) -> Result<(Value, Vec<Value>)>) -> Result<Outcome> {
    let c = complex_input(g)?;
    let (result, checks) = f(&c)?;
    Ok(Outcome { inputs: complex_value(&c), result, checks })
}

fn on_ideal(g: &Global, f: impl FnOnce(&MonomialIdeal) -> Result<(Value, Vec<Value>)>) -> Result<Outcome> {
    let i = ideal_input(g)?;
    let (result, checks) = f(&i)?;
    Ok(Outcome { inputs: io::ideal_to_json(&i, g.pretty), result, checks })
}

fn on_graph(g: &Global, f: impl FnOnce(&Graph) -> Result<(Value, Vec<Value>)>) -> Result<Outcome> {
    let graph = graph_input(g)?;
    let (result, checks) = f(&graph)?;
    Ok(Outcome { inputs: graph_value(&graph), result, checks })
}

fn nonzero(i: &MonomialIdeal) -> Result<()> {
    if i.is_zero() {
        return Err(Error::Domain("the zero ideal has no resolution".into()));
    }
    Ok(())
}

pub fn run(cli: &Cli, field: FieldChoice) -> Result<Outcome> {
    let g = &cli.global;
    let pretty = g.pretty;
    let limits = Limits::default();
    match &cli.command {
        Command::Dual => on_complex(g, |c| {
            Ok(match c.alexander_dual() {
                AlexanderDual::Void => (json!({ "void": true, "facets": [] }), vec![]),
                AlexanderDual::Complex(d) => (complex_value(&d), vec![]),
            })
        }),
        Command::Complement => on_complex(g, |c| Ok((complex_value(&c.complement_complex()?), vec![]))),
        Command::Skeleton { dim } => on_complex(g, |c| Ok((complex_value(&c.skeleton(*dim)?), vec![]))),
        Command::Nonfaces => on_complex(g, |c| {
            let m = c.minimal_nonfaces();
            let sets: Vec<Vec<usize>> = m.nonfaces.iter().map(|s| s.members()).collect();
            Ok((json!({ "nonfaces": sets, "flag": m.is_flag }), vec![]))
        }),
        Command::SrIdeal => on_complex(g, |c| Ok((io::ideal_to_json(&ideals::stanley_reisner_ideal(c)?, pretty), vec![]))),
        Command::FacetIdeal { complement, pure_complement } => on_complex(g, |c| {
            let source = if *complement {
                c.complement_complex()?
            } else if *pure_complement {
                c.pure_complement()?
            } else {
                c.clone()
            };
            Ok((io::ideal_to_json(&ideals::facet_ideal(&source)?, pretty), vec![]))
        }),
        Command::Quasitree => on_complex(g, |c| {
            let order = quasitrees::leaf_order(c)?;
            let checks = match &order {
                Some(o) => {
                    let ok = quasitrees::is_leaf_order(c, o);
                    vec![check("leaf-order", ok, (!ok).then(|| complex_value(c)))]
                }
                None => vec![],
            };
            let result = json!({ "quasi_tree": order.is_some(), "leaf_order": order.as_deref().map(one_based) });
            Ok((result, checks))
        }),
        Command::RelationTrees { limit } => on_complex(g, |c| {
            let trees = quasitrees::relation_trees(c, *limit)?;
            let complement = ideals::facet_ideal(&c.complement_complex()?)?;
            let mut all_ok = true;
            let mut values = Vec::new();
            for tree in &trees {
                let certified = quasitrees::verify_minor_certificate(c, tree.edges())?;
                let rebuilt = quasitrees::reconstruct_generators(tree)?;
                let mut sorted = rebuilt.clone();
                sorted.sort();
                all_ok &= certified && sorted == complement.generators();
                let mut v = io::relation_tree_to_json(tree, pretty);
                v["generators"] = json!(rebuilt.iter().map(|m| io::monomial_json(m, pretty)).collect::<Vec<_>>());
                values.push(v);
            }
            let checks = vec![check("minor-certificate-and-reconstruction", all_ok, (!all_ok).then(|| complex_value(c)))];
            Ok((json!({ "count": trees.len(), "trees": values }), checks))
        }),
        Command::Mdelta => on_complex(g, |c| Ok((matrix_value(&quasitrees::build_m_delta(c)?, pretty), vec![]))),
        Command::Betti => on_ideal(g, |i| {
            nonzero(i)?;
            Ok((io::betti_to_json(&betti_table(i, field, &limits)?), vec![]))
        }),
        Command::Projdim => on_ideal(g, |i| Ok((json!({ "projdim": projdim_and_reg(i, field, &limits)?.projdim }), vec![]))),
        Command::Reg => on_ideal(g, |i| {
            let s = projdim_and_reg(i, field, &limits)?;
            Ok((json!({ "reg": s.reg, "linear": s.linear_resolution }), vec![]))
        }),
        Command::Chordal => on_graph(g, |graph| {
            Ok(match graphs::is_chordal(graph) {
                Chordality::Chordal { order } => {
                    let ok = graphs::verify_elimination_order(graph, &order);
                    (json!({ "chordal": true, "order": order }), vec![check("elimination-order", ok, (!ok).then(|| graph_value(graph)))])
                }
                Chordality::NotChordal { cycle } => {
                    let ok = graphs::verify_chordless_cycle(graph, &cycle);
                    (json!({ "chordal": false, "cycle": cycle }), vec![check("chordless-cycle", ok, (!ok).then(|| graph_value(graph)))])
                }
            })
        }),
        Command::CliqueComplex => on_graph(g, |graph| Ok((complex_value(&graphs::clique_complex(graph, &limits)?), vec![]))),
        Command::Dirac => on_graph(g, |graph| {
            let r = graphs::dirac_check(graph, &limits)?;
            let ok = r.agrees();
            let result = json!({
                "chordal": r.chordal.is_chordal(),
                "clique_complex_leaf_order": r.leaf_order.as_deref().map(one_based),
            });
            Ok((result, vec![check("chordal-iff-quasi-tree", ok, (!ok).then(|| graph_value(graph)))]))
        }),
        Command::HigherDirac => on_complex(g, |c| {
            let r = graphs::higher_dirac_check(c, &limits)?;
            let ok = r.holds();
            let result = json!({
                "dimension": r.dimension,
                "skeleton_of_quasi_tree": r.skeleton_of_quasi_tree,
                "chordal": r.chordal,
                "skeleton_of_clique_complex": r.skeleton_of_clique_complex,
            });
            Ok((result, vec![check("higher-dirac", ok, (!ok).then(|| complex_value(c)))]))
        }),
        Command::Power { k } => on_ideal(g, |i| Ok((io::ideal_to_json(&ideals::power(i, *k)?, pretty), vec![]))),
        Command::Restrict { bound } => on_ideal(g, |i| Ok((io::ideal_to_json(&ideals::restrict_ideal(i, bound)?, pretty), vec![]))),
        Command::Shelling => on_complex(g, |c| {
            let order = shelling_order(c, &limits)?;
            let checks = match &order {
                Some(o) => {
                    let ok = is_shelling_order(c, o);
                    vec![check("shelling-order", ok, (!ok).then(|| complex_value(c)))]
                }
                None => vec![],
            };
            Ok((json!({ "shellable": order.is_some(), "order": order.as_deref().map(one_based) }), checks))
        }),
        Command::LinearQuotients => on_ideal(g, |i| {
            let order = linear_quotients_order(i, &limits)?;
            let checks = match &order {
                Some(o) => {
                    let ok = has_linear_quotients(o);
                    vec![check("linear-quotients", ok, (!ok).then(|| io::ideal_to_json(i, pretty)))]
                }
                None => vec![],
            };
            let listed = order.as_ref().map(|o| o.iter().map(|m| io::monomial_json(m, pretty)).collect::<Vec<_>>());
            Ok((json!({ "linear_quotients": order.is_some(), "order": listed }), checks))
        }),
        Command::Verify(args) => {
            let complex = match &args.complex {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
                    Some(io::parse_complex(&text, g.minimalize)?)
                }
                None => None,
            };
            let opts = SuiteOptions {
                seed: args.seed,
                max_n: args.max_n,
                max_facets: args.max_facets,
                max_power: args.max_power,
                samples: args.samples,
                complex: complex.clone(),
                field,
                limits: suite_limits(),
            };
            let results = run_suite(&args.suite, &opts)?;
            let inputs = json!({
                "suite": args.suite,
                "seed": args.seed,
                "max_n": args.max_n,
                "max_facets": args.max_facets,
                "max_power": args.max_power,
                "samples": args.samples,
                "complex": complex.as_ref().map(complex_value),
            });
            let instances: usize = results.iter().map(|r| r.instances).sum();
            let checks = results
                .iter()
                .map(|r| {
                    let mut c = check(&r.name, r.passed, r.witness.clone());
                    c["instances"] = json!(r.instances);
                    c["stats"] = json!(r.stats);
                    c["unresolved"] = json!(r.stat("unresolved") > 0 && r.stat("failed") == 0);
                    if let Some(d) = &r.detail {
                        c["detail"] = json!(d);
                    }
                    c
                })
                .collect();
            Ok(Outcome { inputs, result: json!({ "instances": instances }), checks })
        }
    }
}
