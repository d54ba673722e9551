//! The seeded property suite behind `expcube verify all`.

use std::collections::HashSet;
use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{
    act_move, act_vertex, check_flag, cube_intersection, cube_vertices, cubes_at, degree, intersection_lemma_check,
    is_subgroup, join, moves_at, neighbors, stabilizer,
};
use crate::expansion::{canonical_key, is_full_support, ExpansionInstance, Move};
use crate::houghton::{canonicalize_h, coexpansions_h, expand_h, Houghton, HoughtonElement};
use crate::oracle::{
    brute_cube_intersection, brute_neighbor_count, brute_stabilizer_order, random_cube_pair, random_h_witness,
    random_v_element, random_v_witness, random_vertex, random_vertex_of_height, Sample, Seed,
};
use crate::thompson::{canonicalize, glue, ThompsonV};

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub samples: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} samples)", self.name, self.samples)?;
        for msg in self.failures.iter().take(3) {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

fn run(name: &str, samples: usize, seed: Seed, mut body: impl FnMut(&mut ChaCha8Rng) -> Result<(), String>) -> CheckResult {
    let mut rng = seed.rng();
    let failures = (0..samples).filter_map(|_| body(&mut rng).err()).collect();
    CheckResult { name: name.into(), samples, failures }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Checks shared by every instance. Heights are kept small so that the
/// brute-force oracles stay cheap.
pub fn generic_checks<I: Sample>(inst: &I, label: &str, seed: Seed, samples: usize) -> Vec<CheckResult> {
    let lo = inst.base_vertex().height();
    let name = |s: &str| format!("{label}: {s}");
    let mut out = Vec::new();

    out.push(run(&name("generated vertices have full support"), samples, seed.derive(1), |rng| {
        let v = random_vertex(inst, rng, lo + 5);
        ensure(is_full_support(inst, &v), || v.key().to_string())
    }));

    out.push(run(&name("degree matches brute-force neighbor count"), samples, seed.derive(2), |rng| {
        let v = random_vertex(inst, rng, lo + 5);
        let (d, b, m) = (degree(inst, &v), brute_neighbor_count(inst, &v), moves_at(inst, &v).len());
        ensure(d == b && d == m, || format!("degree {d}, brute {b}, moves {m} at {}", v.key()))
    }));

    out.push(run(&name("adjacency is symmetric and changes height"), samples, seed.derive(3), |rng| {
        let v = random_vertex(inst, rng, lo + 4);
        for w in neighbors(inst, &v) {
            ensure(w.height() != v.height(), || format!("same height neighbor of {}", v.key()))?;
            ensure(neighbors(inst, &w).contains(&v), || format!("asymmetric edge at {}", v.key()))?;
        }
        Ok(())
    }));

    out.push(run(&name("link condition (cliques <= 4)"), samples.min(50), seed.derive(4), |rng| {
        let v = random_vertex(inst, rng, lo + 3);
        let report = check_flag(inst, &v, 4);
        ensure(report.passed(), || format!("{:?} at {}", report.failures, v.key()))
    }));

    out.push(run(&name("cube intersections match brute force"), samples, seed.derive(5), |rng| {
        let (c, d) = random_cube_pair(inst, rng, lo + 4, 4);
        let meet = cube_intersection(inst, &c, &d).map_err(|e| e.to_string())?;
        let brute = brute_cube_intersection(inst, &c, &d);
        let got = match &meet {
            Some(m) => cube_vertices(inst, m).map_err(|e| e.to_string())?,
            None => Vec::new(),
        };
        ensure(got == brute, || format!("{} vertices vs {} by brute force", got.len(), brute.len()))?;
        if let Some(m) = &meet {
            ensure(cubes_at(inst, m.base(), m.dim()).contains(m), || "intersection not listed at its base".into())?;
        }
        let lemma = intersection_lemma_check(inst, &c, &d).map_err(|e| e.to_string())?;
        ensure(lemma.passed(), || format!("{:?}", lemma.violations))
    }));

    out.push(run(&name("joins dominate both inputs"), samples, seed.derive(6), |rng| {
        let v1 = random_vertex(inst, rng, lo + 5);
        let v2 = random_vertex(inst, rng, lo + 5);
        let w = join(inst, &v1, &v2).map_err(|e| e.to_string())?;
        w.verify(inst, &v1, &v2).map_err(|e| e.to_string())
    }));

    out.push(run(&name("action axioms and equivariance of moves"), samples, seed.derive(7), |rng| {
        let v = random_vertex(inst, rng, lo + 4);
        let g = inst.random_group_element(rng, 3);
        let h = inst.random_group_element(rng, 3);
        ensure(act_vertex(inst, &inst.identity(), &v) == v, || "identity moves a vertex".into())?;
        let gh = inst.compose(&g, &h);
        ensure(
            act_vertex(inst, &gh, &v) == act_vertex(inst, &g, &act_vertex(inst, &h, &v)),
            || format!("(gh)v != g(hv) at {}", v.key()),
        )?;
        let moved: HashSet<String> = moves_at(inst, &v).iter().map(|m| act_move(inst, &g, m).key()).collect();
        let there: HashSet<String> = moves_at(inst, &act_vertex(inst, &g, &v)).iter().map(Move::key).collect();
        ensure(moved == there, || format!("g does not carry the moves at {}", v.key()))?;
        ensure(inst.compose(&g, &inst.invert(&g)) == inst.identity(), || "g g^-1 != id".into())
    }));

    out.push(run(&name("stabilizers are groups of the permutation-assembly order"), samples.min(40), seed.derive(8), |rng| {
        let k = rng.gen_range(lo..=lo + 3);
        let v = random_vertex_of_height(inst, rng, k);
        let stab = stabilizer(inst, &v).map_err(|e| e.to_string())?;
        ensure(stab.len() == brute_stabilizer_order(inst, &v), || format!("order {} at {}", stab.len(), v.key()))?;
        ensure(stab.iter().all(|g| act_vertex(inst, g, &v) == v), || "non-stabilizing element".into())?;
        ensure(is_subgroup(inst, &stab), || format!("not closed at {}", v.key()))
    }));

    out.push(run(&name("element literals round-trip through JSON"), samples, seed.derive(9), |rng| {
        let v = random_vertex(inst, rng, lo + 4);
        for b in v.elements() {
            let text = canonical_key(b);
            let back: I::Element = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            ensure(&back == b, || format!("{text} does not round-trip"))?;
        }
        Ok(())
    }));
    out
}

pub fn v_checks(seed: Seed, samples: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.push(run("v: two disjoint elements have exactly two coexpansions", samples, seed.derive(11), |rng| {
        let v = random_vertex_of_height(&ThompsonV, rng, 2);
        let pair = v.elements();
        let ts = ThompsonV.coexpansions(pair);
        ensure(ts.len() == 2 && ts[0] != ts[1], || format!("{} coexpansions", ts.len()))?;
        for t in &ts {
            let mut kids = ThompsonV.children(t).unwrap();
            kids.sort_by_cached_key(canonical_key);
            ensure(kids == pair, || format!("basin of {t} is not the input pair"))?;
        }
        let glued = glue(&pair[0], &pair[1]).map_err(|e| e.to_string())?;
        ensure(ts.contains(&glued), || "glue is not a coexpansion".into())
    }));
    out.push(run("v: degree is the height squared", samples, seed.derive(12), |rng| {
        let k = rng.gen_range(1..=6);
        let v = random_vertex_of_height(&ThompsonV, rng, k);
        ensure(degree(&ThompsonV, &v) == k * k, || format!("degree {} at height {k}", degree(&ThompsonV, &v)))
    }));
    out.push(run("v: equivalent representatives share a canonical form", samples, seed.derive(13), |rng| {
        let t = random_v_element(rng, 4);
        let (raw, omega) = random_v_witness(rng, &t, 4);
        let c = canonicalize(&raw, &omega).map_err(|e| e.to_string())?;
        ensure(c == t, || format!("{c} != {t}"))
    }));
    out
}

pub fn houghton_checks(n: u32, seed: Seed, samples: usize) -> Vec<CheckResult> {
    let h = Houghton::new(n).expect("n >= 1");
    let label = format!("houghton:{n}");
    let mut out = Vec::new();
    out.push(run(&format!("{label}: point/ray pairs have at most one coexpansion"), samples, seed.derive(21), |rng| {
        let v = random_vertex(&h, rng, n as usize + 4);
        let w = random_vertex(&h, rng, n as usize + 4);
        let point = v.elements().iter().chain(w.elements()).find(|b| matches!(b, HoughtonElement::Point(_)));
        let ray = w.elements().iter().find(|b| b.as_ray().is_some()).unwrap();
        if let Some(p) = point {
            let ts = coexpansions_h(&[p.clone(), ray.clone()]);
            ensure(ts.len() <= 1, || format!("{} coexpansions", ts.len()))?;
        }
        let (p, r) = expand_h(ray).map_err(|e| e.to_string())?;
        let ts = coexpansions_h(&[r, p]);
        ensure(ts == vec![ray.clone()], || "expanded pair does not contract back".into())
    }));
    out.push(run(&format!("{label}: equivalent representatives share a canonical form"), samples, seed.derive(22), |rng| {
        let v = random_vertex(&h, rng, n as usize + 4);
        let b = &v.elements()[rng.gen_range(0..v.height())];
        let (raw, domain) = random_h_witness(rng, b, 4);
        let c = canonicalize_h(&raw, domain).map_err(|e| e.to_string())?;
        ensure(&c == b, || format!("{} != {}", canonical_key(&c), canonical_key(b)))
    }));
    out
}

/// Runs every check on V, H_2 and H_3.
pub fn run_all(seed: Seed, samples: usize) -> SuiteReport {
    let mut checks = v_checks(seed.derive(100), samples);
    checks.extend(generic_checks(&ThompsonV, "v", seed.derive(101), samples));
    for n in [2, 3] {
        checks.extend(houghton_checks(n, seed.derive(200 + n as u64), samples));
        checks.extend(generic_checks(&Houghton::new(n).unwrap(), &format!("houghton:{n}"), seed.derive(300 + n as u64), samples));
    }
    SuiteReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let report = run_all(Seed(7), 5);
        for c in &report.checks {
            assert!(c.passed(), "{c}");
        }
    }
}
