//! Definition-level brute force used as independent ground truth: dimension
//! counts by explicit composition enumeration, minimal-generator lower
//! bounds by graded Nakayama set arithmetic, Serre-type non-CM certificates,
//! and grid probes of the conic set. No closed-form binomials and no
//! rational-function arithmetic in this module; budgets are explicit and
//! exceeding one is a hard error.

use crate::classify::{bezout_pair, ceil_div, BezoutPair, Segre3Params, Veronese2Params};
use crate::error::{Error, Result};
use crate::expr::GradedModuleExpr;
use crate::geometry::{ClassTuple, SupportPresentation};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::{BTreeSet, HashSet};

/// Explicit enumeration limits. Exceeding any limit is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug)]
pub struct EnumBudget {
    /// Largest degree a coefficient may be requested at.
    pub max_degree: i64,
    /// Largest composition block enumerated.
    pub max_block: u64,
    /// Largest monomial set materialized as full vectors.
    pub max_set: u64,
    /// Largest number of grid points probed.
    pub max_grid: u64,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_degree: 12,
            max_block: 2_000_000,
            max_set: 2_000_000,
            max_grid: 2_000_000,
        }
    }
}

impl EnumBudget {
    /// A budget for sweep-scale Serre checks, where windows start above
    /// degree 12.
    pub fn wide() -> Self {
        EnumBudget {
            max_degree: 64,
            ..EnumBudget::default()
        }
    }

    fn check_degree(&self, k: i64) -> Result<()> {
        if k.abs() > self.max_degree {
            return Err(Error::BudgetExceeded {
                what: format!("degree {k}"),
                needed: k.unsigned_abs() as u128,
                limit: self.max_degree as u128,
            });
        }
        Ok(())
    }
}

/// Number of compositions of `total` into `parts` nonnegative parts, by the
/// multiplicative count (used only to enforce the budget before
/// enumerating).
fn composition_count(total: i64, parts: usize) -> u128 {
    if total < 0 {
        return 0;
    }
    // C(total + parts - 1, parts - 1) via an exact product
    let mut acc: u128 = 1;
    for i in 1..=(parts as i64 - 1) {
        acc = acc.saturating_mul((total + i) as u128) / i as u128;
    }
    acc
}

/// All compositions of `total` into `parts` nonnegative parts, in
/// lexicographic order.
fn compositions(total: i64, parts: usize, budget: &EnumBudget) -> Result<Vec<Vec<i64>>> {
    if total < 0 {
        return Ok(Vec::new());
    }
    let count = composition_count(total, parts);
    if count > budget.max_block as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("compositions of {total} into {parts} parts"),
            needed: count,
            limit: budget.max_block as u128,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = vec![0i64; parts];
    fill(&mut out, &mut cur, 0, total);
    Ok(out)
}

fn fill(out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, idx: usize, rest: i64) {
    if idx + 1 == cur.len() {
        cur[idx] = rest;
        out.push(cur.clone());
        return;
    }
    for v in 0..=rest {
        cur[idx] = v;
        fill(out, cur, idx + 1, rest - v);
    }
}

/// The block structure of one family module: exponent vectors are
/// concatenations of per-block compositions, one block per polynomial-ring
/// factor.
#[derive(Clone, Debug)]
enum FamilyModule {
    Segre3 {
        params: Segre3Params,
        i: i64,
        j: i64,
    },
    Veronese2 {
        params: Veronese2Params,
        bz: BezoutPair,
        label: i64,
    },
}

impl FamilyModule {
    fn veronese2(params: &Veronese2Params, label: i64) -> Result<Self> {
        Ok(FamilyModule::Veronese2 {
            params: *params,
            bz: bezout_pair(params.c, params.d)?,
            label,
        })
    }

    fn widths(&self) -> Vec<usize> {
        match self {
            FamilyModule::Segre3 { params, .. } => {
                vec![params.m as usize, params.n as usize, params.p as usize]
            }
            FamilyModule::Veronese2 { params, .. } => {
                vec![params.m as usize, params.n as usize]
            }
        }
    }

    /// Block sums of the degree-`deg` monomials.
    fn block_sums(&self, deg: i64) -> Vec<i64> {
        match self {
            FamilyModule::Segre3 { i, j, .. } => vec![deg, deg - i, deg - j],
            FamilyModule::Veronese2 {
                params, bz, label, ..
            } => vec![
                params.c as i64 * deg - bz.v * label,
                params.d as i64 * deg - bz.u * label,
            ],
        }
    }

    /// Block sums of the degree-1 generators of the ambient semigroup ring.
    fn generator_sums(&self) -> Vec<i64> {
        match self {
            FamilyModule::Segre3 { .. } => vec![1, 1, 1],
            FamilyModule::Veronese2 { params, .. } => {
                vec![params.c as i64, params.d as i64]
            }
        }
    }

    /// First degree with a nonzero graded piece.
    fn first_degree(&self) -> i64 {
        match self {
            FamilyModule::Segre3 { i, j, .. } => 0.max(*i).max(*j),
            FamilyModule::Veronese2 {
                params, bz, label, ..
            } => ceil_div(bz.v * label, params.c as i64)
                .max(ceil_div(bz.u * label, params.d as i64)),
        }
    }

    fn blocks(&self, deg: i64, budget: &EnumBudget) -> Result<Vec<Vec<Vec<i64>>>> {
        self.block_sums(deg)
            .iter()
            .zip(self.widths())
            .map(|(&sum, width)| compositions(sum, width, budget))
            .collect()
    }
}

/// Counts the degree-`k` monomials of the labeled module by enumerating each
/// block of compositions explicitly and multiplying the block counts (the
/// monomial set is the cartesian product of its blocks by definition).
fn coeff_brute(module: &FamilyModule, k: i64, budget: &EnumBudget) -> Result<u64> {
    budget.check_degree(k)?;
    let blocks = module.blocks(k, budget)?;
    let mut acc: u64 = 1;
    for b in &blocks {
        acc = acc
            .checked_mul(b.len() as u64)
            .ok_or_else(|| Error::BudgetExceeded {
                what: "monomial count".to_string(),
                needed: u128::MAX,
                limit: u64::MAX as u128,
            })?;
    }
    Ok(acc)
}

pub fn segre3_coeff_brute(
    params: &Segre3Params,
    i: i64,
    j: i64,
    k: i64,
    budget: &EnumBudget,
) -> Result<u64> {
    coeff_brute(
        &FamilyModule::Segre3 {
            params: *params,
            i,
            j,
        },
        k,
        budget,
    )
}

pub fn veronese2_coeff_brute(
    params: &Veronese2Params,
    label: i64,
    k: i64,
    budget: &EnumBudget,
) -> Result<u64> {
    coeff_brute(&FamilyModule::veronese2(params, label)?, k, budget)
}

/// The explicit degree-`degree` monomials of a labeled module, as
/// canonically ordered exponent vectors in the ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    pub degree: i64,
    pub exponents: Vec<Vec<i64>>,
}

fn monomial_set(module: &FamilyModule, degree: i64, budget: &EnumBudget) -> Result<MonomialSet> {
    budget.check_degree(degree)?;
    let blocks = module.blocks(degree, budget)?;
    let total: u128 = blocks.iter().map(|b| b.len() as u128).product();
    if total > budget.max_set as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("monomial set at degree {degree}"),
            needed: total,
            limit: budget.max_set as u128,
        });
    }
    let mut exponents = vec![Vec::new()];
    for block in &blocks {
        let mut next = Vec::with_capacity(exponents.len() * block.len());
        for prefix in &exponents {
            for comp in block {
                let mut v = prefix.clone();
                v.extend_from_slice(comp);
                next.push(v);
            }
        }
        exponents = next;
    }
    exponents.sort();
    let count = coeff_brute(module, degree, budget)?;
    debug_assert_eq!(exponents.len() as u64, count);
    Ok(MonomialSet { degree, exponents })
}

pub fn segre3_monomial_set(
    params: &Segre3Params,
    i: i64,
    j: i64,
    degree: i64,
    budget: &EnumBudget,
) -> Result<MonomialSet> {
    monomial_set(
        &FamilyModule::Segre3 {
            params: *params,
            i,
            j,
        },
        degree,
        budget,
    )
}

pub fn veronese2_monomial_set(
    params: &Veronese2Params,
    label: i64,
    degree: i64,
    budget: &EnumBudget,
) -> Result<MonomialSet> {
    monomial_set(&FamilyModule::veronese2(params, label)?, degree, budget)
}

/// Graded-Nakayama lower bound for the minimal number of generators: the sum
/// over degrees `d <= max_degree` of `|M_d| - |M_d ∩ (G + M_{d-1})|`, where
/// `G` is the set of degree-1 ring generators. Both the module pieces and
/// the sumset factor blockwise (they are cartesian products of composition
/// blocks), so the set arithmetic is done per block.
fn mu_lower_bound(module: &FamilyModule, max_degree: i64, budget: &EnumBudget) -> Result<u64> {
    budget.check_degree(max_degree)?;
    let widths = module.widths();
    let gen_sums = module.generator_sums();
    let mut mu: u64 = 0;
    for deg in module.first_degree()..=max_degree {
        let cur = module.blocks(deg, budget)?;
        let cur_count: u64 = cur.iter().map(|b| b.len() as u64).product();
        if cur_count == 0 {
            continue;
        }
        let prev = module.blocks(deg - 1, budget)?;
        let mut reachable: u64 = 1;
        for (b, block_prev) in prev.iter().enumerate() {
            let gens = compositions(gen_sums[b], widths[b], budget)?;
            let mut sumset: HashSet<Vec<i64>> = HashSet::new();
            for g in &gens {
                for x in block_prev {
                    let v: Vec<i64> = g.iter().zip(x).map(|(a, b)| a + b).collect();
                    sumset.insert(v);
                }
            }
            reachable = reachable.saturating_mul(sumset.len() as u64);
        }
        mu += cur_count - reachable.min(cur_count);
    }
    Ok(mu)
}

pub fn segre3_mu_lower_bound(
    params: &Segre3Params,
    i: i64,
    j: i64,
    max_degree: i64,
    budget: &EnumBudget,
) -> Result<u64> {
    mu_lower_bound(
        &FamilyModule::Segre3 {
            params: *params,
            i,
            j,
        },
        max_degree,
        budget,
    )
}

pub fn veronese2_mu_lower_bound(
    params: &Veronese2Params,
    label: i64,
    max_degree: i64,
    budget: &EnumBudget,
) -> Result<u64> {
    mu_lower_bound(&FamilyModule::veronese2(params, label)?, max_degree, budget)
}

/// A proof that a class is not Cohen-Macaulay: the module needs more
/// generators than the multiplicity of the ring, which violates Serre's
/// numerical criterion. Absence of a certificate proves nothing.
#[derive(Clone, Debug)]
pub struct SerreCertificate {
    pub mu_lower_bound: u64,
    pub ring_multiplicity: BigInt,
    /// Inclusive degree window the generator count was taken over.
    pub degrees_inspected: (i64, i64),
}

/// Degree window: the first `window` degrees from the first nonzero one.
const DEFAULT_SERRE_WINDOW: i64 = 6;

fn serre_certificate(
    module: &FamilyModule,
    ring: &GradedModuleExpr,
    window: i64,
    budget: &EnumBudget,
) -> Result<Option<SerreCertificate>> {
    let start = module.first_degree();
    let end = start + window - 1;
    let mu = mu_lower_bound(module, end, budget)?;
    let e = ring.series()?.multiplicity()?;
    if BigInt::from(mu) > e {
        Ok(Some(SerreCertificate {
            mu_lower_bound: mu,
            ring_multiplicity: e,
            degrees_inspected: (start, end),
        }))
    } else {
        Ok(None)
    }
}

/// The ring of the Segre family as a module expression.
pub fn segre3_ring_expr(params: &Segre3Params) -> GradedModuleExpr {
    let r1 = GradedModuleExpr::PolyRing(params.m);
    let r2 = GradedModuleExpr::PolyRing(params.n);
    let r3 = GradedModuleExpr::PolyRing(params.p);
    GradedModuleExpr::segre(GradedModuleExpr::segre(r1, r2), r3)
}

/// The labeled module of the Segre family: `R1 # R2(-i) # R3(-j)`.
pub fn segre3_module_expr(params: &Segre3Params, i: i64, j: i64) -> GradedModuleExpr {
    let r1 = GradedModuleExpr::PolyRing(params.m);
    let r2 = GradedModuleExpr::PolyRing(params.n).shift(i);
    let r3 = GradedModuleExpr::PolyRing(params.p).shift(j);
    GradedModuleExpr::segre(GradedModuleExpr::segre(r1, r2), r3)
}

/// The ring of the Veronese family as a module expression.
pub fn veronese2_ring_expr(params: &Veronese2Params) -> Result<GradedModuleExpr> {
    let f1 = GradedModuleExpr::PolyRing(params.m).veronese(params.c)?;
    let f2 = GradedModuleExpr::PolyRing(params.n).veronese(params.d)?;
    Ok(GradedModuleExpr::segre(f1, f2))
}

/// The labeled module of the Veronese family:
/// `R1(-v i)^(c) # R2(-u i)^(d)`.
pub fn veronese2_module_expr(
    params: &Veronese2Params,
    bz: BezoutPair,
    label: i64,
) -> Result<GradedModuleExpr> {
    let f1 = GradedModuleExpr::PolyRing(params.m)
        .shift(bz.v * label)
        .veronese(params.c)?;
    let f2 = GradedModuleExpr::PolyRing(params.n)
        .shift(bz.u * label)
        .veronese(params.d)?;
    Ok(GradedModuleExpr::segre(f1, f2))
}

pub fn segre3_serre_certificate(
    params: &Segre3Params,
    i: i64,
    j: i64,
    budget: &EnumBudget,
) -> Result<Option<SerreCertificate>> {
    serre_certificate(
        &FamilyModule::Segre3 {
            params: *params,
            i,
            j,
        },
        &segre3_ring_expr(params),
        DEFAULT_SERRE_WINDOW,
        budget,
    )
}

pub fn veronese2_serre_certificate(
    params: &Veronese2Params,
    label: i64,
    budget: &EnumBudget,
) -> Result<Option<SerreCertificate>> {
    serre_certificate(
        &FamilyModule::veronese2(params, label)?,
        &veronese2_ring_expr(params)?,
        DEFAULT_SERRE_WINDOW,
        budget,
    )
}

/// Classes of `ceil(sigma(beta))` for `beta` on the `1/q` grid over the
/// fundamental parallelepiped: a sound under-approximation of the conic set
/// (every returned class is conic; completeness is not claimed).
pub fn conic_grid_probe(
    pres: &SupportPresentation,
    q: u32,
    budget: &EnumBudget,
) -> Result<BTreeSet<ClassTuple>> {
    if q < 1 {
        return Err(Error::InvalidParams("grid resolution must be >= 1".to_string()));
    }
    let r = pres.rank();
    let points = (q as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if points > budget.max_grid as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("1/{q} grid over a rank-{r} parallelepiped"),
            needed: points,
            limit: budget.max_grid as u128,
        });
    }
    let cg = pres.class_group();
    let mut classes = BTreeSet::new();
    let mut idx = vec![0u32; r];
    loop {
        // beta = sum (idx_i / q) * basis_i; ceil each ambient coordinate
        let mut w = Vec::with_capacity(pres.ambient_dim);
        for k in 0..pres.ambient_dim {
            let num: i64 = pres
                .basis
                .iter()
                .zip(&idx)
                .map(|(col, &t)| col[k] * t as i64)
                .sum();
            let y = BigRational::new(BigInt::from(num), BigInt::from(q));
            w.push(y.ceil().to_integer());
        }
        classes.insert(cg.project(&w));

        // odometer over {0, .., q-1}^r
        let mut pos = 0;
        loop {
            if pos == r {
                return Ok(classes);
            }
            idx[pos] += 1;
            if idx[pos] < q {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::conic_classes_generic;

    fn s3(m: u32, n: u32, p: u32) -> Segre3Params {
        Segre3Params::new(m, n, p).unwrap()
    }

    fn v2(m: u32, n: u32, c: u32, d: u32) -> Veronese2Params {
        Veronese2Params::new(m, n, c, d).unwrap()
    }

    #[test]
    fn brute_coefficient_examples() {
        let b = EnumBudget::default();
        assert_eq!(segre3_coeff_brute(&s3(2, 2, 2), 1, 2, 3, &b).unwrap(), 24);
        assert_eq!(segre3_coeff_brute(&s3(2, 2, 2), 1, 2, 1, &b).unwrap(), 0);
        assert_eq!(segre3_coeff_brute(&s3(2, 2, 2), -3, 0, -1, &b).unwrap(), 0);
        assert_eq!(veronese2_coeff_brute(&v2(2, 2, 2, 1), 0, 1, &b).unwrap(), 6);
    }

    #[test]
    fn monomial_set_examples() {
        let b = EnumBudget::default();
        let set = segre3_monomial_set(&s3(2, 2, 2), 0, 0, 1, &b).unwrap();
        assert_eq!(set.exponents.len(), 8);
        let set = segre3_monomial_set(&s3(2, 2, 2), 2, 3, 3, &b).unwrap();
        assert_eq!(set.exponents.len(), 8);
        for v in &set.exponents {
            assert_eq!(v[0] + v[1], 3);
            assert_eq!(v[2] + v[3], 1);
            assert_eq!(v[4] + v[5], 0);
        }
        let set = segre3_monomial_set(&s3(2, 2, 2), 5, 0, 3, &b).unwrap();
        assert!(set.exponents.is_empty());
        // canonical ordering: sorted, no duplicates
        let set = segre3_monomial_set(&s3(2, 3, 2), 1, -1, 2, &b).unwrap();
        let mut sorted = set.exponents.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(set.exponents, sorted);
    }

    #[test]
    fn mu_lower_bound_examples() {
        let b = EnumBudget::default();
        for max_degree in 0..=4 {
            assert_eq!(
                segre3_mu_lower_bound(&s3(2, 2, 2), 0, 0, max_degree, &b).unwrap(),
                1
            );
        }
        assert_eq!(segre3_mu_lower_bound(&s3(2, 2, 2), 2, 3, 3, &b).unwrap(), 8);
        assert_eq!(segre3_mu_lower_bound(&s3(2, 2, 2), 1, 1, 1, &b).unwrap(), 2);
    }

    #[test]
    fn mu_lower_bound_is_monotone() {
        let b = EnumBudget::default();
        for (i, j) in [(0, 0), (1, 1), (2, 3), (-1, 2)] {
            let mut prev = 0;
            for max_degree in 0.max(i).max(j)..=8 {
                let mu = segre3_mu_lower_bound(&s3(2, 2, 2), i, j, max_degree, &b).unwrap();
                assert!(mu >= prev);
                prev = mu;
            }
        }
    }

    #[test]
    fn serre_certificate_examples() {
        let b = EnumBudget::wide();
        let cert = segre3_serre_certificate(&s3(2, 2, 2), 2, 3, &b)
            .unwrap()
            .expect("the (2,3) class must be certified non-CM");
        assert!(cert.mu_lower_bound >= 8);
        assert_eq!(cert.ring_multiplicity, BigInt::from(6));
        assert!(BigInt::from(cert.mu_lower_bound) > cert.ring_multiplicity);
        assert!(segre3_serre_certificate(&s3(2, 2, 2), 0, 0, &b)
            .unwrap()
            .is_none());
    }

    #[test]
    fn grid_probe_is_sound() {
        let b = EnumBudget::default();
        let pres = SupportPresentation::segre3(&s3(2, 2, 2));
        let generic: BTreeSet<ClassTuple> = conic_classes_generic(&pres)
            .into_iter()
            .map(|c| c.class)
            .collect();
        let coarse = conic_grid_probe(&pres, 1, &b).unwrap();
        let cg = pres.class_group();
        assert!(coarse.contains(&cg.project_i64(&vec![0; 6])));
        let mid = conic_grid_probe(&pres, 2, &b).unwrap();
        let fine = conic_grid_probe(&pres, 4, &b).unwrap();
        assert!(coarse.is_subset(&mid));
        assert!(mid.is_subset(&fine));
        assert!(fine.is_subset(&generic));
    }

    #[test]
    fn budgets_are_hard_errors() {
        let tiny = EnumBudget {
            max_degree: 2,
            max_block: 3,
            max_set: 3,
            max_grid: 3,
        };
        assert!(matches!(
            segre3_coeff_brute(&s3(2, 2, 2), 0, 0, 5, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            segre3_monomial_set(&s3(2, 2, 2), 0, 0, 2, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
        let pres = SupportPresentation::segre3(&s3(2, 2, 2));
        assert!(matches!(
            conic_grid_probe(&pres, 3, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn brute_matches_engine_small() {
        let b = EnumBudget::default();
        let params = s3(2, 3, 2);
        for i in -2..=2i64 {
            for j in -2..=2i64 {
                let series = segre3_module_expr(&params, i, j).series().unwrap();
                for k in -2..=6i64 {
                    let brute = segre3_coeff_brute(&params, i, j, k, &b).unwrap();
                    assert_eq!(
                        series.coefficient(k),
                        BigInt::from(brute),
                        "(i,j)=({i},{j}) k={k}"
                    );
                }
            }
        }
        let params = v2(2, 3, 2, 3);
        let bz = bezout_pair(2, 3).unwrap();
        for label in -4..=4i64 {
            let series = veronese2_module_expr(&params, bz, label)
                .unwrap()
                .series()
                .unwrap();
            for k in -4..=6i64 {
                let brute = veronese2_coeff_brute(&params, label, k, &b).unwrap();
                assert_eq!(series.coefficient(k), BigInt::from(brute), "label={label} k={k}");
            }
        }
    }
}
