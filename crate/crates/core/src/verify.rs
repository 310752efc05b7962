//! Named verification suites. Each suite runs a list of checks and reports
//! a pass/fail line per check with counts and timings.

use std::collections::BTreeSet;
use std::fmt::{self, Debug};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factor_posets::{enumerate_circular, enumerate_linear};
use crate::marked_group::{Group, Limits, MarkedGroup, Permutation, SetPartition, SymmetricGroup};
use crate::ncs::{
    armstrong_check, complementary_regions, lengths_add, psi_big, psi_big_inv, random_below, random_ncs,
    random_point, NcsPartition,
};
use crate::registry::Registry;
use crate::top_poset::{
    circ_quotient, circular_skeleton, lower_set, multiset_inverse, multiset_product, skeleton,
    stratum_complex, subfact_leq, upper_set_phi, upper_set_phi_inv, TopPosetPoint,
};
use crate::weighted_complexes::position::{one, pos, zero};
use crate::weighted_complexes::{build_interval_complex, build_order_complex, Multiset, Position};

#[derive(Debug, Clone)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}/{}: {} ({:.3} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Restricts degree-parametrized suites to one degree.
    pub d: Option<usize>,
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            d: None,
            limits: Limits::default(),
        }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, config: &VerifyConfig) -> Vec<Check>;
}

fn check(suite: &'static str, name: impl Into<String>, body: impl FnOnce() -> Result<(bool, String)>) -> Check {
    let start = Instant::now();
    let (passed, detail) = match body() {
        Ok(outcome) => outcome,
        Err(e) => (false, e.to_string()),
    };
    Check {
        suite,
        name: name.into(),
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

fn same<T: PartialEq + Debug>(got: T, want: T) -> (bool, String) {
    if got == want {
        (true, format!("{got:?}"))
    } else {
        (false, format!("got {got:?}, expected {want:?}"))
    }
}

fn sym(d: usize, config: &VerifyConfig) -> Result<MarkedGroup<SymmetricGroup>> {
    Ok(MarkedGroup::symmetric(d)?.with_limits(config.limits))
}

/// Catalan numbers from `C_{n+1} = sum_i C_i C_{n-i}`.
pub fn catalan(n: usize) -> u128 {
    let mut c = vec![1u128];
    for m in 0..n {
        c.push((0..=m).map(|i| c[i] * c[m - i]).sum());
    }
    c[n]
}

struct PaperCounts;
struct Catalan;
struct Armstrong;
struct TopPoset;
struct Ncs;
struct Psi;

impl Suite for PaperCounts {
    fn name(&self) -> &'static str {
        "paper-counts"
    }

    fn run(&self, config: &VerifyConfig) -> Vec<Check> {
        let s = self.name();
        let z = MarkedGroup::integers().with_limits(config.limits);
        vec![
            check(s, "interval-sym3", || {
                let mg = sym(3, config)?;
                Ok(same(mg.interval(&mg.delta())?.len(), 5))
            }),
            check(s, "fact-linear-sym3", || {
                let mg = sym(3, config)?;
                let p = enumerate_linear(&mg, &mg.delta())?;
                Ok(same((p.len(), p.rank_profile()), (15, vec![5, 7, 3])))
            }),
            check(s, "fact-circular-sym3", || {
                let mg = sym(3, config)?;
                Ok(same(enumerate_circular(&mg, &mg.delta())?.len(), 8))
            }),
            check(s, "comp-linear-2", || Ok(same(enumerate_linear(&z, &2)?.len(), 7))),
            check(s, "comp-circular-2", || Ok(same(enumerate_circular(&z, &2)?.len(), 4))),
            check(s, "order-complex-sym3", || {
                let mg = sym(3, config)?;
                Ok(same(build_order_complex(&mg, &mg.delta())?.dims, vec![5, 7, 3]))
            }),
            check(s, "interval-complex-sym3", || {
                let mg = sym(3, config)?;
                let k = build_interval_complex(&mg, &mg.delta())?;
                Ok(same((k.dims, k.euler), (vec![1, 4, 3], 0)))
            }),
        ]
    }
}

impl Suite for Catalan {
    fn name(&self) -> &'static str {
        "catalan"
    }

    fn run(&self, config: &VerifyConfig) -> Vec<Check> {
        let s = self.name();
        let degrees = |lo: usize, hi: usize| -> Vec<usize> {
            match config.d {
                Some(d) => vec![d],
                None => (lo..=hi).collect(),
            }
        };
        let mut checks = Vec::new();
        for d in degrees(2, 6) {
            checks.push(check(s, format!("interval-size-d{d}"), || {
                let mg = sym(d, config)?;
                Ok(same(mg.interval(&mg.delta())?.len() as u128, catalan(d)))
            }));
        }
        for d in degrees(3, 5) {
            checks.push(check(s, format!("top-cells-d{d}"), || {
                let mg = sym(d, config)?;
                let chains = mg.interval(&mg.delta())?.maximal_chain_count();
                let k = build_interval_complex(&mg, &mg.delta())?;
                let top = k.dims.last().copied().unwrap_or(0) as u128;
                Ok(same(top, chains))
            }));
        }
        for d in degrees(2, 5) {
            checks.push(check(s, format!("euler-d{d}"), || {
                let mg = sym(d, config)?;
                Ok(same(build_interval_complex(&mg, &mg.delta())?.euler, 0))
            }));
        }
        checks
    }
}

/// Compares both sides on every tuple and counts the tuples where the
/// length condition alone would give a different answer.
fn armstrong_tally(
    mg: &MarkedGroup<SymmetricGroup>,
    tuples: impl IntoIterator<Item = Vec<Permutation>>,
) -> Result<(bool, String)> {
    let (mut total, mut mismatches, mut literal) = (0usize, Vec::new(), 0usize);
    for xs in tuples {
        let (lhs, rhs) = armstrong_check(mg, &xs)?;
        if lhs != rhs {
            mismatches.push(xs.clone());
        }
        if lhs != lengths_add(mg, &xs)? {
            literal += 1;
        }
        total += 1;
    }
    let detail = format!(
        "{} of {total} tuples agree; length additivity alone disagrees on {literal}",
        total - mismatches.len()
    );
    match mismatches.first() {
        None => Ok((true, detail)),
        Some(xs) => Ok((false, format!("{detail}; first mismatch {xs:?}"))),
    }
}

fn all_tuples<T: Clone>(items: &[T], max_k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..max_k {
        layer = layer
            .iter()
            .flat_map(|t| {
                items.iter().map(move |x| {
                    let mut t = t.clone();
                    t.push(x.clone());
                    t
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

impl Suite for Armstrong {
    fn name(&self) -> &'static str {
        "armstrong"
    }

    fn run(&self, config: &VerifyConfig) -> Vec<Check> {
        let s = self.name();
        let exhaustive = |d: usize| {
            check(s, format!("exhaustive-d{d}"), move || {
                let mg = sym(d, config)?;
                let items = mg.interval(&mg.delta())?.items().to_vec();
                armstrong_tally(&mg, all_tuples(&items, 3))
            })
        };
        if let Some(d) = config.d {
            return vec![exhaustive(d)];
        }
        vec![
            exhaustive(3),
            check(s, "sampled-d4", || {
                let mg = sym(4, config)?;
                let items = mg.interval(&mg.delta())?.items().to_vec();
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                let tuples: Vec<Vec<Permutation>> = (0..1000)
                    .map(|_| {
                        let k = rng.gen_range(1..=3);
                        (0..k).map(|_| items.choose(&mut rng).unwrap().clone()).collect()
                    })
                    .collect();
                armstrong_tally(&mg, tuples)
            }),
        ]
    }
}

fn pointwise_leq<G: Group>(mg: &MarkedGroup<G>, x: &Multiset<G::Elem>, y: &Multiset<G::Elem>) -> Result<bool> {
    let support: BTreeSet<&Position> = x.support().chain(y.support()).collect();
    for s in support {
        if !mg.interval(&y.label(mg, s))?.items().contains(&x.label(mg, s)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Division by a common lower bound preserves and reflects the order.
fn division_check(mg: &MarkedGroup<SymmetricGroup>, support: &[Position], n: usize, seed: u64) -> Result<(bool, String)> {
    let points = skeleton(mg, &mg.delta(), support)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..n {
        let v = points.choose(&mut rng).unwrap();
        let mut above = Vec::new();
        for u in &points {
            if subfact_leq(mg, v, u)? {
                above.push(u);
            }
        }
        let (u, w) = (*above.choose(&mut rng).unwrap(), *above.choose(&mut rng).unwrap());
        let vi = multiset_inverse(mg, v.labels());
        let (a, b) = (multiset_product(mg, &vi, u.labels()), multiset_product(mg, &vi, w.labels()));
        if pointwise_leq(mg, u.labels(), w.labels())? != pointwise_leq(mg, &a, &b)? {
            return Ok((false, format!("fails for v={v:?} u={u:?} w={w:?}")));
        }
    }
    Ok((true, format!("{n} triples")))
}

/// `phi` is an order isomorphism from the upper set of every point onto
/// the skeleton of the complementary element.
fn phi_check(mg: &MarkedGroup<SymmetricGroup>, support: &[Position]) -> Result<(bool, String)> {
    let g = mg.delta();
    let points = skeleton(mg, &g, support)?;
    let index: std::collections::HashMap<&TopPosetPoint<Permutation>, usize> =
        points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = points.len();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = subfact_leq(mg, &points[i], &points[j])?;
        }
    }
    let mut pairs = 0usize;
    for (vi, v) in points.iter().enumerate() {
        let h_prime = mg.complement(&v.rho(mg), &g)?;
        let target = skeleton(mg, &h_prime, support)?;
        let up: Vec<usize> = (0..n).filter(|&u| leq[vi * n + u]).collect();
        let images = up
            .iter()
            .map(|&u| upper_set_phi(mg, v, &points[u]))
            .collect::<Result<Vec<_>>>()?;
        let image_set: BTreeSet<_> = images.iter().collect();
        if image_set.len() != up.len() || image_set != target.iter().collect() {
            return Ok((false, format!("phi is not a bijection above {v:?}")));
        }
        for (&u, w) in up.iter().zip(&images) {
            if index.get(&upper_set_phi_inv(mg, v, w)?) != Some(&u) {
                return Ok((false, format!("phi^-1 does not invert phi at {:?}", points[u])));
            }
        }
        for (a, &u1) in up.iter().enumerate() {
            for (b, &u2) in up.iter().enumerate() {
                if leq[u1 * n + u2] != subfact_leq(mg, &images[a], &images[b])? {
                    return Ok((false, format!("phi breaks the order above {v:?}")));
                }
                pairs += 1;
            }
        }
    }
    Ok((true, format!("{n} points, {pairs} comparable-pair checks")))
}

fn lower_set_check(mg: &MarkedGroup<SymmetricGroup>, support: &[Position], n: usize, seed: u64) -> Result<(bool, String)> {
    let points = skeleton(mg, &mg.delta(), support)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ends: Vec<Position> = support.to_vec();
    ends.extend([zero(), one()]);
    for _ in 0..n {
        let u = points.choose(&mut rng).unwrap();
        let down = lower_set(mg, u)?;
        let mut brute = BTreeSet::new();
        for x in &points {
            if subfact_leq(mg, x, u)? {
                brute.insert(x.clone());
            }
        }
        let got: BTreeSet<_> = down.items().iter().cloned().collect();
        let product = ends
            .iter()
            .map(|s| mg.interval(&u.label(mg, s)).map(|i| i.len()))
            .product::<Result<usize>>()?;
        if got != brute || down.len() != product {
            return Ok((false, format!("lower set of {u:?} differs")));
        }
        for i in 0..down.len() {
            for j in 0..down.len() {
                if down.leq(i, j) != subfact_leq(mg, down.item(i), down.item(j))? {
                    return Ok((false, format!("lower set of {u:?} has the wrong order")));
                }
            }
        }
    }
    Ok((true, format!("{n} points")))
}

impl Suite for TopPoset {
    fn name(&self) -> &'static str {
        "top-poset"
    }

    fn run(&self, config: &VerifyConfig) -> Vec<Check> {
        let s = self.name();
        let support = [pos(1, 3), pos(2, 3)];
        let mut checks = vec![check(s, "division-sym4", || {
            division_check(&sym(4, config)?, &support, 1000, config.seed)
        })];
        for d in [3, 4] {
            checks.push(check(s, format!("phi-sym{d}"), || phi_check(&sym(d, config)?, &support)));
        }
        checks.push(check(s, "lower-set-sym4", || {
            lower_set_check(&sym(4, config)?, &support, 100, config.seed)
        }));
        checks.push(check(s, "stratum-rank1-sym3", || {
            let mg = sym(3, config)?;
            let report = stratum_complex(&mg, &mg.delta(), 1)?;
            let k: Vec<usize> = report.summary.covers.iter().flatten().map(|c| c.k).collect();
            Ok(same(
                (report.summary.components().len(), report.summary.dims.clone(), k),
                (1, vec![3, 3], vec![3, 3, 3]),
            ))
        }));
        for d in 2..=4 {
            checks.push(check(s, format!("max-stratum-d{d}"), || {
                let mg = sym(d, config)?;
                let st = stratum_complex(&mg, &mg.delta(), d - 1)?.summary;
                let k = build_interval_complex(&mg, &mg.delta())?;
                Ok((
                    st.dims == k.dims && st.faces == k.faces,
                    format!("{} cells, {} faces", k.cell_count(), k.faces.len()),
                ))
            }));
        }
        checks
    }
}

/// A partition with `1..=4` random set partitions at random grid positions,
/// crossing or not.
fn random_raw(d: usize, rng: &mut ChaCha8Rng) -> Result<NcsPartition> {
    let k = rng.gen_range(1..=4);
    let mut grid: Vec<usize> = rand::seq::index::sample(rng, 60, k).into_vec();
    grid.sort_unstable();
    let parts = grid
        .into_iter()
        .map(|n| {
            let labels: Vec<usize> = (0..d).map(|_| rng.gen_range(0..d.min(3))).collect();
            (pos(n as i64, 60), SetPartition::from_labels(&labels))
        })
        .collect();
    NcsPartition::new(d, parts)
}

impl Suite for Ncs {
    fn name(&self) -> &'static str {
        "ncs"
    }

    fn run(&self, config: &VerifyConfig) -> Vec<Check> {
        let s = self.name();
        let degrees: Vec<usize> = match config.d {
            Some(d) => vec![d],
            None => (2..=8).collect(),
        };
        vec![
            check(s, "sample-d12", || {
                let p = sample_partition()?;
                let regions = complementary_regions(&p)?;
                Ok(same(
                    (p.is_valid(), p.total_criticality(), regions.count, p.nontrivial_blocks().len()),
                    (true, 9, 10, 5),
                ))
            }),
            check(s, "generated", || {
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                let n = 10_000;
                for i in 0..n {
                    let d = degrees[i % degrees.len()];
                    let p = random_ncs(&sym(d, config)?, &mut rng)?;
                    let regions = complementary_regions(&p)?;
                    if p.total_criticality() > d - 1 || regions.count != p.total_criticality() + 1 {
                        return Ok((false, format!("fails on {p}")));
                    }
                }
                Ok((true, format!("{n} partitions, degrees {degrees:?}")))
            }),
            check(s, "validate-vs-quadruples", || {
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                let (n, mut valid) = (2000, 0);
                for i in 0..n {
                    let p = random_raw(degrees[i % degrees.len()], &mut rng)?;
                    if p.is_valid() != p.is_valid_brute() {
                        return Ok((false, format!("disagree on {p}")));
                    }
                    valid += usize::from(p.is_valid());
                }
                Ok((true, format!("{n} partitions, {valid} noncrossing")))
            }),
        ]
    }
}

impl Suite for Psi {
    fn name(&self) -> &'static str {
        "psi"
    }

    fn run(&self, config: &VerifyConfig) -> Vec<Check> {
        let s = self.name();
        let degrees: Vec<usize> = match config.d {
            Some(d) => vec![d],
            None => (2..=6).collect(),
        };
        let mut checks = vec![check(s, "round-trip-and-order", || {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let n = 1000;
            for i in 0..n {
                let mg = sym(degrees[i % degrees.len()], config)?;
                let u = random_point(&mg, &mut rng)?;
                let v = random_below(&mg, &u, &mut rng)?;
                let (cu, cv) = (circ_quotient(&mg, &u), circ_quotient(&mg, &v));
                let (pu, pv) = (psi_big(&mg, &cu)?, psi_big(&mg, &cv)?);
                if psi_big_inv(&mg, &pu)? != cu || psi_big_inv(&mg, &pv)? != cv {
                    return Ok((false, format!("round trip fails at {pu}")));
                }
                if pu.total_criticality() != cu.rank(&mg)? || !pv.refinement_leq(&pu) {
                    return Ok((false, format!("order or rank fails at {pv} <= {pu}")));
                }
            }
            Ok((true, format!("{n} pairs")))
        })];
        for d in [3, 4] {
            checks.push(check(s, format!("order-isomorphism-sym{d}"), || {
                let mg = sym(d, config)?;
                let sk = circular_skeleton(&mg, &mg.delta(), &[pos(1, 3), pos(2, 3)])?;
                let images = sk
                    .classes()
                    .iter()
                    .map(|c| psi_big(&mg, c))
                    .collect::<Result<Vec<_>>>()?;
                let n = images.len();
                for i in 0..n {
                    for j in 0..n {
                        if sk.leq(&mg, i, j)? != images[i].refinement_leq(&images[j]) {
                            return Ok((false, format!("order differs at {} and {}", images[i], images[j])));
                        }
                    }
                }
                Ok((true, format!("{n} classes")))
            }));
        }
        checks
    }
}

/// The twelve-point sample partition with five nontrivial blocks on four
/// base points.
pub fn sample_partition() -> Result<NcsPartition> {
    let part = |blocks: Vec<Vec<usize>>| SetPartition::from_nontrivial(12, blocks);
    let p = NcsPartition::new(
        12,
        vec![
            (pos(1, 10), part(vec![vec![4, 5]])?),
            (pos(2, 5), part(vec![vec![1, 2, 3, 11]])?),
            (pos(1, 2), part(vec![vec![3, 6, 8], vec![11, 12]])?),
            (pos(9, 10), part(vec![vec![8, 9, 10]])?),
        ],
    )?;
    p.validate()?;
    Ok(p)
}

pub fn suites() -> Registry<dyn Suite> {
    Registry::new("verify suite")
        .with("paper-counts", || Arc::new(PaperCounts) as Arc<dyn Suite>)
        .with("catalan", || Arc::new(Catalan) as Arc<dyn Suite>)
        .with("armstrong", || Arc::new(Armstrong) as Arc<dyn Suite>)
        .with("top-poset", || Arc::new(TopPoset) as Arc<dyn Suite>)
        .with("ncs", || Arc::new(Ncs) as Arc<dyn Suite>)
        .with("psi", || Arc::new(Psi) as Arc<dyn Suite>)
}

/// Runs one suite by name, or every suite for `all`.
pub fn run_suite(name: &str, config: &VerifyConfig) -> Result<Vec<Check>> {
    let registry = suites();
    if name == "all" {
        return Ok(registry
            .names()
            .iter()
            .flat_map(|n| registry.get(n).expect("registered").run(config))
            .collect());
    }
    match registry.get(name) {
        Ok(suite) => Ok(suite.run(config)),
        Err(Error::UnknownName { kind, name, available }) => Err(Error::UnknownName {
            kind,
            name,
            available: format!("{available}, all"),
        }),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        assert_eq!((0..8).map(catalan).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn count_suite_passes() {
        for c in run_suite("paper-counts", &VerifyConfig::default()).unwrap() {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            run_suite("nope", &VerifyConfig::default()),
            Err(Error::UnknownName { .. })
        ));
    }
}
