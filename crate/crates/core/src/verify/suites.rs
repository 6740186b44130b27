use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::families::{
    all_graphs, complexes_up_to_isomorphism, random_chordal_graph, random_complex, random_equigenerated_ideal,
    random_flag_complex, random_graph, random_linear_quotient_ideal, random_pure_complex, random_quasi_tree,
    small_facet_complexes,
};
use super::minimize::{minimize_complex, minimize_graph, minimize_ideal};
use super::{stream_seed, CheckResult, SuiteOptions, Tally, Verdict};
use crate::complexes::SimplicialComplex;
use crate::error::Result;
use crate::examples::delta_q;
use crate::graphs::{clique_complex, dirac_check, higher_dirac_check, Graph};
use crate::homological::{betti_table, is_cohen_macaulay, projdim_and_reg, shelling_order};
use crate::ideals::{
    complex_from_ideal, facet_ideal, graded_component_ideal, linear_quotients_order, power, restrict_ideal,
    skeleton_ideal_from_one_skeleton, stanley_reisner_ideal, ComplexMode, MonomialIdeal,
};
use crate::io::{complex_to_json, graph_to_json, ideal_to_json};
use crate::quasitrees::{find_minor_certificate, is_quasi_tree, leaf_order, leaf_report};

type Check<'a, X> = &'a dyn Fn(&X) -> Result<Verdict>;

fn rng(opts: &SuiteOptions, label: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stream_seed(opts.seed, label))
}

fn complex_json(c: &SimplicialComplex) -> Value {
    serde_json::to_value(complex_to_json(c)).expect("serializable")
}

fn graph_json(g: &Graph) -> Value {
    serde_json::to_value(graph_to_json(g)).expect("serializable")
}

fn run_complexes<'a>(name: &str, items: impl IntoIterator<Item = &'a SimplicialComplex>, check: Check<SimplicialComplex>) -> CheckResult {
    let mut t = Tally::new(name);
    for c in items {
        t.run(c, check, &minimize_complex, &complex_json);
    }
    t.finish()
}

fn run_graphs(name: &str, items: impl IntoIterator<Item = Graph>, check: Check<Graph>) -> CheckResult {
    let mut t = Tally::new(name);
    for g in items {
        t.run(&g, check, &minimize_graph, &graph_json);
    }
    t.finish()
}

/// Complexes on `[n]` up to isomorphism, cached per `n`.
fn classes(n: usize) -> &'static [SimplicialComplex] {
    static CACHE: [OnceLock<Vec<SimplicialComplex>>; 7] = [const { OnceLock::new() }; 7];
    CACHE[n].get_or_init(|| complexes_up_to_isomorphism(n))
}

fn exhaustive(max_n: usize) -> impl Iterator<Item = &'static SimplicialComplex> {
    (1..=max_n.min(6)).flat_map(classes)
}

/// `I(bar skel_Δ(ℓ))`, or the zero ideal when the skeleton is complete.
fn skeleton_complement_ideal(c: &SimplicialComplex, l: usize) -> Result<MonomialIdeal> {
    let bar = c.skeleton(l)?.pure_complement()?;
    if bar.is_void() {
        Ok(MonomialIdeal::zero(c.ambient()))
    } else {
        facet_ideal(&bar)
    }
}

fn is_flag(c: &SimplicialComplex) -> bool {
    c.minimal_nonfaces().is_flag
}

fn dual_ideal(c: &SimplicialComplex) -> Result<Option<MonomialIdeal>> {
    match c.alexander_dual().into_complex() {
        Some(d) => Ok(Some(stanley_reisner_ideal(&d)?)),
        None => Ok(None),
    }
}

fn tag(b: bool, yes: &'static str, no: &'static str) -> &'static str {
    if b {
        yes
    } else {
        no
    }
}

fn small_family(opts: &SuiteOptions) -> Vec<SimplicialComplex> {
    let max_n = opts.max_n.unwrap_or(6);
    let max_facets = opts.max_facets.unwrap_or(4);
    (1..=max_n).flat_map(|n| small_facet_complexes(n, max_facets, 3)).collect()
}

fn random_quasi_trees(opts: &SuiteOptions, label: &str, default_samples: usize, default_max_n: usize) -> Vec<SimplicialComplex> {
    let mut r = rng(opts, label);
    let max_n = opts.max_n.unwrap_or(default_max_n).max(2);
    (0..opts.samples.unwrap_or(default_samples))
        .map(|_| {
            let n = r.gen_range(2..=max_n);
            if r.gen_bool(0.5) {
                let d = r.gen_range(1..=n.min(5));
                random_quasi_tree(&mut r, n, Some(d))
            } else {
                random_quasi_tree(&mut r, n, None)
            }
        })
        .collect()
}

fn random_flags(opts: &SuiteOptions, label: &str, default_samples: usize) -> Vec<SimplicialComplex> {
    let mut r = rng(opts, label);
    let max_n = opts.max_n.unwrap_or(8).max(2);
    (0..opts.samples.unwrap_or(default_samples))
        .map(|k| {
            let n = r.gen_range(2..=max_n);
            if k % 2 == 0 {
                let p = r.gen_range(0.3..0.9);
                random_flag_complex(&mut r, n, p)
            } else {
                let g = random_chordal_graph(&mut r, n);
                clique_complex(&g, &opts.limits).expect("small graph")
            }
        })
        .collect()
}

pub(super) fn lemma_1_1(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        let (dim, pure) = c.dimension_info()?;
        if !pure || dim < 0 {
            return Ok(Verdict::Vacuous("not_applicable"));
        }
        let d = (dim + 1) as usize;
        let lhs = c.pure_complement()?;
        let gamma = complex_from_ideal(&facet_ideal(c)?, ComplexMode::StanleyReisner)?;
        let rhs = if d as isize - 1 <= gamma.dim()? {
            gamma.skeleton(d - 1)?
        } else {
            SimplicialComplex::void(c.ambient())?
        };
        Ok(if lhs == rhs { Verdict::Holds("pure") } else { Verdict::Fails("pure complement differs from the skeleton".into()) })
    };
    let max_n = opts.max_n.unwrap_or(8);
    let mut r = rng(opts, "lemma-1.1");
    let random: Vec<SimplicialComplex> = (0..opts.samples.unwrap_or(2000))
        .map(|_| {
            let n = r.gen_range(2..=max_n.max(2));
            let d = r.gen_range(1..=n);
            let m = r.gen_range(1..=opts.max_facets.unwrap_or(8));
            random_pure_complex(&mut r, n, d, m)
        })
        .collect();
    vec![
        run_complexes("lemma-1.1/exhaustive", exhaustive(max_n), &check),
        run_complexes("lemma-1.1/random", &random, &check),
    ]
}

pub(super) fn lemma_1_2(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        let Some(lhs) = dual_ideal(c)? else {
            return Ok(Verdict::Vacuous("simplex"));
        };
        let rhs = facet_ideal(&c.complement_complex()?)?;
        Ok(if lhs == rhs { Verdict::Holds("equal") } else { Verdict::Fails(format!("I_dual = {lhs:?}, I(complement) = {rhs:?}")) })
    };
    let max_n = opts.max_n.unwrap_or(10);
    let mut r = rng(opts, "lemma-1.2");
    let random: Vec<SimplicialComplex> = (0..opts.samples.unwrap_or(10_000))
        .map(|_| {
            let n = r.gen_range(1..=max_n.max(1));
            random_complex(&mut r, n, opts.max_facets.unwrap_or(8))
        })
        .collect();
    vec![
        run_complexes("lemma-1.2/exhaustive", exhaustive(max_n), &check),
        run_complexes("lemma-1.2/random", &random, &check),
    ]
}

pub(super) fn prop_1_3(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |sigma: &SimplicialComplex| -> Result<Verdict> {
        if !is_flag(sigma) || sigma.dim()? < 1 {
            return Ok(Verdict::Vacuous("not_applicable"));
        }
        let n = sigma.ambient();
        let i1 = skeleton_complement_ideal(sigma, 1)?;
        if i1.is_zero() {
            return Ok(Verdict::Vacuous("simplex"));
        }
        let dual1 = complex_from_ideal(&i1, ComplexMode::StanleyReisner)?.alexander_dual().into_complex().expect("nonzero ideal");
        for l in 1..=sigma.dim()? as usize {
            let il = skeleton_complement_ideal(sigma, l)?;
            if il.is_zero() || n < l + 2 {
                continue;
            }
            let lhs = complex_from_ideal(&il, ComplexMode::StanleyReisner)?.alexander_dual().into_complex().expect("nonzero ideal");
            if lhs != dual1.skeleton(n - l - 2)? {
                return Ok(Verdict::Fails(format!("l = {l}")));
            }
        }
        Ok(Verdict::Holds("flag"))
    };
    vec![run_complexes("prop-1.3", &random_flags(opts, "prop-1.3", 500), &check)]
}

fn terai_family(opts: &SuiteOptions, label: &str) -> (usize, Vec<SimplicialComplex>) {
    let max_n = opts.max_n.unwrap_or(8);
    let mut r = rng(opts, label);
    let random = if max_n >= 7 {
        (0..opts.samples.unwrap_or(300))
            .map(|_| {
                let n = r.gen_range(7..=max_n);
                random_complex(&mut r, n, opts.max_facets.unwrap_or(8))
            })
            .collect()
    } else {
        Vec::new()
    };
    (max_n, random)
}

pub(super) fn thm_1_4a(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        let Some(i) = dual_ideal(c)? else {
            return Ok(Verdict::Vacuous("simplex"));
        };
        let cm = is_cohen_macaulay(c, opts.field, &opts.limits)?;
        let linear = betti_table(&i, opts.field, &opts.limits)?.is_linear();
        Ok(if cm == linear {
            Verdict::Holds(tag(cm, "cohen_macaulay", "not_cohen_macaulay"))
        } else {
            Verdict::Fails(format!("Cohen-Macaulay = {cm}, dual ideal linear = {linear}"))
        })
    };
    let (max_n, random) = terai_family(opts, "thm-1.4a");
    vec![
        run_complexes("thm-1.4a/exhaustive", exhaustive(max_n), &check),
        run_complexes("thm-1.4a/random", &random, &check),
    ]
}

pub(super) fn thm_1_4b(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        let Some(dual) = dual_ideal(c)? else {
            return Ok(Verdict::Vacuous("simplex"));
        };
        let projdim_ring = projdim_and_reg(&stanley_reisner_ideal(c)?, opts.field, &opts.limits)?.projdim + 1;
        let reg = projdim_and_reg(&dual, opts.field, &opts.limits)?.reg;
        Ok(if projdim_ring as i64 == reg {
            Verdict::Holds("equal")
        } else {
            Verdict::Fails(format!("projdim K[Δ] = {projdim_ring}, reg I_dual = {reg}"))
        })
    };
    let (max_n, random) = terai_family(opts, "thm-1.4b");
    vec![
        run_complexes("thm-1.4b/exhaustive", exhaustive(max_n), &check),
        run_complexes("thm-1.4b/random", &random, &check),
    ]
}

fn pure_family(opts: &SuiteOptions) -> Vec<SimplicialComplex> {
    let mut r = rng(opts, "pure");
    let max_n = opts.max_n.unwrap_or(8).max(3);
    let max_facets = opts.max_facets.unwrap_or(8);
    (0..opts.samples.unwrap_or(1000))
        .map(|_| {
            let n = r.gen_range(3..=max_n);
            let d = r.gen_range(1..n);
            let m = r.gen_range(1..=max_facets);
            random_pure_complex(&mut r, n, d, m)
        })
        .collect()
}

pub(super) fn thm_1_4c(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        if !c.is_pure() {
            return Ok(Verdict::Vacuous("not_pure"));
        }
        let Some(i) = dual_ideal(c)? else {
            return Ok(Verdict::Vacuous("simplex"));
        };
        let shellable = shelling_order(c, &opts.limits)?.is_some();
        let lq = linear_quotients_order(&i, &opts.limits)?.is_some();
        Ok(if shellable == lq {
            Verdict::Holds(tag(shellable, "shellable", "not_shellable"))
        } else {
            Verdict::Fails(format!("shellable = {shellable}, dual ideal has linear quotients = {lq}"))
        })
    };
    vec![run_complexes("thm-1.4c", &pure_family(opts), &check)]
}

pub(super) fn lemma_1_6(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        if !c.is_pure() || shelling_order(c, &opts.limits)?.is_none() {
            return Ok(Verdict::Vacuous("not_shellable"));
        }
        for i in 1..c.dim()?.max(1) as usize {
            if shelling_order(&c.skeleton(i)?, &opts.limits)?.is_none() {
                return Ok(Verdict::Fails(format!("the {i}-skeleton is not shellable")));
            }
        }
        Ok(Verdict::Holds("shellable"))
    };
    vec![run_complexes("lemma-1.6", &pure_family(opts), &check)]
}

pub(super) fn cor_1_5(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |sigma: &SimplicialComplex| -> Result<Verdict> {
        if !is_flag(sigma) || sigma.dim()? < 2 {
            return Ok(Verdict::Vacuous("not_applicable"));
        }
        let i1 = skeleton_complement_ideal(sigma, 1)?;
        if i1.is_zero() {
            return Ok(Verdict::Vacuous("simplex"));
        }
        if linear_quotients_order(&i1, &opts.limits)?.is_none() {
            return Ok(Verdict::Vacuous("premise_false"));
        }
        for l in 2..=sigma.dim()? as usize {
            let il = skeleton_complement_ideal(sigma, l)?;
            if !il.is_zero() && linear_quotients_order(&il, &opts.limits)?.is_none() {
                return Ok(Verdict::Fails(format!("l = {l}")));
            }
        }
        Ok(Verdict::Holds("premise_true"))
    };
    vec![run_complexes("cor-1.5", &random_flags(opts, "cor-1.5", 300), &check)]
}

pub(super) fn lemma_2_1(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        if c.facet_count() < 2 {
            return Ok(Verdict::Vacuous("single_facet"));
        }
        let quasi = leaf_order(c)?.is_some();
        let cert = find_minor_certificate(c)?.is_some();
        Ok(if quasi == cert {
            Verdict::Holds(tag(quasi, "quasi_tree", "not_quasi_tree"))
        } else {
            Verdict::Fails(format!("quasi-tree = {quasi}, minor certificate = {cert}"))
        })
    };
    vec![run_complexes("lemma-2.1", &small_family(opts), &check)]
}

pub(super) fn cor_2_2(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        if c.facet_count() < 2 {
            return Ok(Verdict::Vacuous("single_facet"));
        }
        let quasi = leaf_order(c)?.is_some();
        let pd = projdim_and_reg(&facet_ideal(&c.complement_complex()?)?, opts.field, &opts.limits)?.projdim;
        Ok(if quasi == (pd == 1) {
            Verdict::Holds(tag(quasi, "quasi_tree", "not_quasi_tree"))
        } else {
            Verdict::Fails(format!("quasi-tree = {quasi}, projdim = {pd}"))
        })
    };
    vec![run_complexes("cor-2.2", &small_family(opts), &check)]
}

pub(super) fn lemma_3_2(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        if c.vertex_support().len() != c.ambient() {
            return Ok(Verdict::Vacuous("unused_vertex"));
        }
        if !is_quasi_tree(c)? {
            return Ok(Verdict::Vacuous("not_quasi_tree"));
        }
        Ok(if is_flag(c) { Verdict::Holds("quasi_tree") } else { Verdict::Fails("quasi-tree is not flag".into()) })
    };
    let small: Vec<SimplicialComplex> = small_family(&SuiteOptions { max_n: Some(6), ..opts.clone() });
    vec![
        run_complexes("lemma-3.2/small", &small, &check),
        run_complexes("lemma-3.2/random", &random_quasi_trees(opts, "lemma-3.2", 2000, 8), &check),
    ]
}

pub(super) fn thm_3_3(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |g: &Graph| -> Result<Verdict> {
        let report = dirac_check(g, &opts.limits)?;
        Ok(if report.agrees() {
            Verdict::Holds(tag(report.chordal.is_chordal(), "chordal", "not_chordal"))
        } else {
            Verdict::Fails(format!("chordal = {}, leaf order = {:?}", report.chordal.is_chordal(), report.leaf_order))
        })
    };
    let max_n = opts.max_n.unwrap_or(7);
    let mut out = vec![run_graphs("thm-3.3/exhaustive", (1..=max_n.min(6)).flat_map(all_graphs), &check)];
    if max_n >= 7 {
        let samples = opts.samples.unwrap_or(100_000);
        let mut r = rng(opts, "thm-3.3");
        let random = (0..samples).map(move |_| {
            let p = r.gen_range(0.15..0.85);
            random_graph(&mut r, max_n, p)
        });
        out.push(run_graphs("thm-3.3/random", random, &check));
        let mut r = rng(opts, "thm-3.3/chordal");
        let chordal = (0..samples / 10).map(move |_| random_chordal_graph(&mut r, max_n));
        out.push(run_graphs("thm-3.3/constructive-chordal", chordal, &check));
    }
    out
}

pub(super) fn cor_3_5(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        let t = c.facet_count();
        if t < 2 || !is_quasi_tree(c)? {
            return Ok(Verdict::Vacuous("not_applicable"));
        }
        for f in 0..t {
            if leaf_report(c, f)?.is_leaf {
                let rest: Vec<usize> = (0..t).filter(|&g| g != f).collect();
                if !is_quasi_tree(&c.sub_complex(&rest))? {
                    return Ok(Verdict::Fails(format!("removing leaf {}", f + 1)));
                }
            }
        }
        Ok(Verdict::Holds("quasi_tree"))
    };
    let small: Vec<SimplicialComplex> = small_family(&SuiteOptions { max_n: Some(6), ..opts.clone() });
    vec![
        run_complexes("cor-3.5/small", &small, &check),
        run_complexes("cor-3.5/random", &random_quasi_trees(opts, "cor-3.5", 2000, 8), &check),
    ]
}

fn all_skeletons(c: &SimplicialComplex) -> Vec<SimplicialComplex> {
    let dim = c.dim().unwrap_or(-1);
    (0..=dim.max(-1)).filter_map(|l| c.skeleton(l as usize).ok()).collect()
}

pub(super) fn thm_3_6(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        if !c.is_pure() || c.dim()? < 0 {
            return Ok(Verdict::Vacuous("not_applicable"));
        }
        let report = higher_dirac_check(c, &opts.limits)?;
        Ok(if report.holds() {
            Verdict::Holds(tag(report.skeleton_of_quasi_tree, "skeleton_of_quasi_tree", "not_skeleton_of_quasi_tree"))
        } else {
            Verdict::Fails(format!("{report:?}"))
        })
    };
    let from_quasi = |c: &SimplicialComplex| -> Result<Verdict> {
        let report = higher_dirac_check(c, &opts.limits)?;
        Ok(if report.holds() && report.skeleton_of_quasi_tree {
            Verdict::Holds("skeleton_of_quasi_tree")
        } else {
            Verdict::Fails(format!("{report:?}"))
        })
    };
    let quasi_skeletons: Vec<SimplicialComplex> =
        random_quasi_trees(opts, "thm-3.6/quasi", 300, 8).iter().flat_map(all_skeletons).collect();
    let flag_skeletons: Vec<SimplicialComplex> = random_flags(opts, "thm-3.6/flag", 300).iter().flat_map(all_skeletons).collect();
    let mut pure = pure_family(opts);
    pure.truncate(opts.samples.unwrap_or(500));
    // The skeletons are only known to come from a quasi-tree before shrinking.
    let mut t = Tally::new("thm-3.6/quasi-tree-skeletons");
    for c in &quasi_skeletons {
        t.run(c, &from_quasi, &|x, _| x.clone(), &complex_json);
    }
    vec![
        t.finish(),
        run_complexes("thm-3.6/flag-skeletons", &flag_skeletons, &check),
        run_complexes("thm-3.6/random-pure", &pure, &check),
    ]
}

fn quasi_tree_inputs(opts: &SuiteOptions, label: &str, default_samples: usize, default_max_n: usize) -> Vec<SimplicialComplex> {
    match &opts.complex {
        Some(c) => vec![c.clone()],
        None => random_quasi_trees(opts, label, default_samples, default_max_n),
    }
}

pub(super) fn thm_4_1(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        if !is_quasi_tree(c)? {
            return Ok(Verdict::Vacuous("not_quasi_tree"));
        }
        for l in 0..=c.dim()?.max(0) as usize {
            let il = skeleton_complement_ideal(c, l)?;
            if !il.is_zero() && linear_quotients_order(&il, &opts.limits)?.is_none() {
                return Ok(Verdict::Fails(format!("no linear quotients at l = {l}")));
            }
        }
        Ok(Verdict::Holds("quasi_tree"))
    };
    vec![run_complexes("thm-4.1", &quasi_tree_inputs(opts, "thm-4.1", 100, 8), &check)]
}

pub(super) fn lemma_4_2(opts: &SuiteOptions) -> Vec<CheckResult> {
    let check = |c: &SimplicialComplex| -> Result<Verdict> {
        if !is_flag(c) || c.dim()? < 2 {
            return Ok(Verdict::Vacuous("not_applicable"));
        }
        let i1 = skeleton_complement_ideal(c, 1)?;
        for l in 2..=c.dim()? as usize {
            let lhs = skeleton_ideal_from_one_skeleton(&i1, l, c.ambient())?;
            if lhs != skeleton_complement_ideal(c, l)? {
                return Ok(Verdict::Fails(format!("l = {l}")));
            }
        }
        Ok(Verdict::Holds("flag"))
    };
    let mut family = random_quasi_trees(opts, "lemma-4.2/quasi", 150, 8);
    family.extend(random_flags(opts, "lemma-4.2/flag", 150));
    vec![run_complexes("lemma-4.2", &family, &check)]
}

pub(super) fn lemma_4_3(opts: &SuiteOptions) -> Vec<CheckResult> {
    type Instance = (MonomialIdeal, Vec<u32>);
    let check = |(i, a): &Instance| -> Result<Verdict> {
        if !betti_table(i, opts.field, &opts.limits)?.is_linear() {
            return Ok(Verdict::Vacuous("premise_false"));
        }
        let r = restrict_ideal(i, a)?;
        if r.is_zero() {
            return Ok(Verdict::Vacuous("restriction_zero"));
        }
        Ok(if betti_table(&r, opts.field, &opts.limits)?.is_linear() {
            Verdict::Holds("linear")
        } else {
            Verdict::Fails(format!("restriction to {a:?} is not linear"))
        })
    };
    let shrink = |(i, a): &Instance, fails: &dyn Fn(&Instance) -> bool| {
        (minimize_ideal(i, &|j| fails(&(j.clone(), a.clone()))), a.clone())
    };
    let to_json = |(i, a): &Instance| json!({ "ideal": ideal_to_json(i, false), "bound": a });
    let max_n = opts.max_n.unwrap_or(8).max(2);
    let max_gens = opts.max_facets.unwrap_or(8);
    let mut r = rng(opts, "lemma-4.3");
    let mut t = Tally::new("lemma-4.3");
    for k in 0..opts.samples.unwrap_or(150) {
        let n = r.gen_range(2..=max_n);
        let d = r.gen_range(2..=3);
        let i = if k % 3 == 2 {
            random_equigenerated_ideal(&mut r, n, d, max_gens, 2)
        } else {
            random_linear_quotient_ideal(&mut r, n, d, max_gens, 2)
        };
        // The bound is the lcm of a few generators, sometimes raised, so the restriction is nonzero.
        let mut gens = i.generators().to_vec();
        gens.shuffle(&mut r);
        let keep = r.gen_range(1..=gens.len());
        let mut a = vec![0u32; n];
        for g in &gens[..keep] {
            for (x, e) in a.iter_mut().zip(g.exponents()) {
                *x = (*x).max(*e);
            }
        }
        for x in a.iter_mut() {
            if r.gen_bool(0.2) {
                *x += 1;
            }
        }
        t.run(&(i, a), &check, &shrink, &to_json);
    }
    vec![t.finish()]
}

pub(super) fn thm_4_4(opts: &SuiteOptions) -> Vec<CheckResult> {
    let max_power = opts.max_power.unwrap_or(3);
    let powers = |c: &SimplicialComplex| -> Result<Verdict> {
        if !is_quasi_tree(c)? {
            return Ok(Verdict::Vacuous("not_quasi_tree"));
        }
        for l in 1..=c.dim()?.max(0) as usize {
            let il = skeleton_complement_ideal(c, l)?;
            if il.is_zero() {
                continue;
            }
            for k in 1..=max_power {
                if !betti_table(&power(&il, k)?, opts.field, &opts.limits)?.is_linear() {
                    return Ok(Verdict::Fails(format!("power {k} at l = {l} is not linear")));
                }
            }
        }
        Ok(Verdict::Holds("quasi_tree"))
    };
    // J^k equals the part of (I_1)^k in degree k(l+1) with exponents at most k.
    let identity = |c: &SimplicialComplex| -> Result<Verdict> {
        if !is_flag(c) || c.dim()? < 1 {
            return Ok(Verdict::Vacuous("not_applicable"));
        }
        let n = c.ambient();
        let i1 = skeleton_complement_ideal(c, 1)?;
        if i1.is_zero() {
            return Ok(Verdict::Vacuous("simplex"));
        }
        for l in 1..=c.dim()? as usize {
            let il = skeleton_complement_ideal(c, l)?;
            if il.is_zero() {
                continue;
            }
            for k in 1..=max_power {
                let graded = graded_component_ideal(&power(&i1, k)?, k * (l as u32 + 1), &opts.limits)?;
                if restrict_ideal(&graded, &vec![k; n])? != power(&il, k)? {
                    return Ok(Verdict::Fails(format!("identity fails for power {k} at l = {l}")));
                }
            }
        }
        Ok(Verdict::Holds("flag"))
    };
    let mut family = vec![opts.complex.clone().unwrap_or_else(delta_q)];
    if opts.complex.is_none() {
        family.extend(random_quasi_trees(opts, "thm-4.4", 20, 7));
    }
    vec![run_complexes("thm-4.4/powers", &family, &powers), run_complexes("thm-4.4/identity", &family, &identity)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(samples: usize, max_n: usize) -> SuiteOptions {
        SuiteOptions { samples: Some(samples), max_n: Some(max_n), ..SuiteOptions::default() }
    }

    fn assert_pass(results: &[CheckResult]) {
        for r in results {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn quick_runs_pass() {
        for name in ["lemma-1.1", "lemma-1.2", "prop-1.3", "thm-1.4c", "lemma-1.6", "cor-1.5", "lemma-3.2", "cor-3.5", "thm-3.6", "lemma-4.2", "lemma-4.3"] {
            assert_pass(&super::super::run_suite(name, &small(40, 5)).unwrap());
        }
        assert_pass(&super::super::run_suite("thm-3.3", &small(200, 7)).unwrap());
        assert_pass(&super::super::run_suite("cor-2.2", &small(0, 4)).unwrap());
        assert_pass(&super::super::run_suite("lemma-2.1", &small(0, 4)).unwrap());
    }

    #[test]
    fn delta_q_powers() {
        let r = super::super::run_suite("thm-4.4", &SuiteOptions { samples: Some(0), ..SuiteOptions::default() }).unwrap();
        assert_pass(&r);
        assert_eq!(r[0].instances, 1);
    }
}
