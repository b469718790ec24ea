use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::design::{solve_design, BlockDesign, Catalog, SolveOutcome};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::params::{hanani_admissible, symmetric_params, triple_system_params, DesignParams};

/// Node budget for the backtracking fallback when the caller does not pick one.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000;

fn checked(design: BlockDesign, expected: &DesignParams) -> Result<BlockDesign> {
    let got = design.verified_params()?;
    if got != *expected {
        return Err(Error::InvalidDesign(format!(
            "construction produced {got}, expected {expected}"
        )));
    }
    Ok(design)
}

/// Steiner triple system on `n ≡ 1, 3 (mod 6)` points.
///
/// `n = 6t + 3` uses Bose's construction over `Z_{2t+1} × Z_3` with the
/// idempotent quasigroup `x ∘ y = (x + y)/2`; `n = 6t + 1` uses Skolem's
/// construction over `Z_{2t} × Z_3 ∪ {∞}` with a half-idempotent quasigroup.
pub fn build_sts(n: u64) -> Result<BlockDesign> {
    let params = triple_system_params(n, 1)?;
    let n = n as usize;
    let blocks = match n % 6 {
        3 => bose_blocks(n),
        1 => skolem_blocks(n),
        _ => unreachable!("triple_system_params rejects other residues"),
    };
    checked(BlockDesign::new(n, blocks)?, &params)
}

fn bose_blocks(n: usize) -> Vec<Vec<usize>> {
    let m = n / 3;
    let half = m.div_ceil(2); // inverse of 2 modulo odd m
    let op = |x: usize, y: usize| ((x + y) * half) % m;
    let pt = |x: usize, i: usize| x + (i % 3) * m;
    let mut blocks = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..m {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for x in 0..m {
        for y in x + 1..m {
            for i in 0..3 {
                blocks.push(vec![pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

fn skolem_blocks(n: usize) -> Vec<Vec<usize>> {
    let t = (n - 1) / 6;
    let m = 2 * t;
    // σ(2i) = i, σ(2i+1) = t + i applied to x + y mod 2t
    let op = |x: usize, y: usize| {
        let s = (x + y) % m;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            t + s / 2
        }
    };
    let pt = |x: usize, i: usize| x + (i % 3) * m;
    let inf = 3 * m;
    let mut blocks = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..t {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
        for i in 0..3 {
            blocks.push(vec![inf, pt(t + x, i), pt(x, i + 1)]);
        }
    }
    for x in 0..m {
        for y in x + 1..m {
            for i in 0..3 {
                blocks.push(vec![pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

/// Operation table of an idempotent quasigroup of order `t`, for `t != 2`.
///
/// Odd `t` uses `(x + y)/2`. Even `t` prolongs the odd square of order `t - 1`
/// along the transversal `y = x + 1`, whose cells move to the new row and
/// column.
fn idempotent_quasigroup(t: usize) -> Option<Vec<Vec<usize>>> {
    let halving = |m: usize| {
        let half = m.div_ceil(2);
        (0..m)
            .map(|x| (0..m).map(|y| ((x + y) * half) % m).collect())
            .collect::<Vec<Vec<usize>>>()
    };
    match t {
        2 => None,
        t if t % 2 == 1 => Some(halving(t)),
        t => {
            let m = t - 1;
            let mut table = halving(m);
            for row in &mut table {
                row.push(0);
            }
            table.push(vec![m; t]);
            for x in 0..m {
                let y = (x + 1) % m;
                let symbol = table[x][y];
                table[x][y] = m;
                table[x][m] = symbol;
                table[m][y] = symbol;
            }
            Some(table)
        }
    }
}

/// Twofold triple system on `n ≡ 0, 4 (mod 6)` points over `Q × Z_3`
/// (plus `∞` when `n = 3t + 1`), where `Q` is an idempotent quasigroup of
/// order `t`. Every ordered pair `x != y` gives `{(x,i), (y,i), (x∘y, i+1)}`.
fn twofold_blocks(n: usize) -> Option<Vec<Vec<usize>>> {
    let t = n / 3;
    let table = idempotent_quasigroup(t)?;
    let pt = |x: usize, i: usize| x + (i % 3) * t;
    let mut blocks = Vec::with_capacity(n * (n - 1) / 3);
    for x in 0..t {
        let vertical = vec![pt(x, 0), pt(x, 1), pt(x, 2)];
        if n.is_multiple_of(3) {
            blocks.push(vertical.clone());
        } else {
            for i in 0..3 {
                blocks.push(vec![3 * t, pt(x, i), pt(x, i + 1)]);
            }
        }
        blocks.push(vertical);
    }
    for x in 0..t {
        for y in (0..t).filter(|&y| y != x) {
            for i in 0..3 {
                blocks.push(vec![pt(x, i), pt(y, i), pt(table[x][y], i + 1)]);
            }
        }
    }
    Some(blocks)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=(n - (k - cur.len())) {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Every 3-subset of an `n`-set: a `(C(n,3), n, C(n-1,2), 3, n-2)` design.
pub fn build_complete_triples(n: u64) -> Result<BlockDesign> {
    if n < 3 {
        return Err(Error::InadmissibleParameters(format!(
            "complete triples need n >= 3, got {n}"
        )));
    }
    BlockDesign::new(n as usize, k_subsets(n as usize, 3))
}

/// Points and lines of PG(2, q): 1- and 2-dimensional subspaces of GF(q)³.
pub fn build_projective_plane(q: u64) -> Result<BlockDesign> {
    let field = FiniteField::new(q)?;
    let q = field.order();
    // Normalized representatives: leading nonzero coordinate is 1.
    let mut reps = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            reps.push([1, a, b]);
        }
    }
    for a in 0..q {
        reps.push([0, 1, a]);
    }
    reps.push([0, 0, 1]);

    let dot = |u: &[usize; 3], v: &[usize; 3]| {
        (0..3).fold(0, |acc, i| field.add(acc, field.mul(u[i], v[i])))
    };
    let blocks = reps
        .iter()
        .map(|line| {
            reps.iter()
                .enumerate()
                .filter(|(_, pt)| dot(line, pt) == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let params = symmetric_params(q as u64, 1)?;
    checked(BlockDesign::new(reps.len(), blocks)?, &params)
}

/// All translates `B + i (mod v)` of each base block, duplicates kept.
pub fn develop_difference_family(v: u64, base_blocks: &[Vec<usize>]) -> Result<BlockDesign> {
    if v < 3 {
        return Err(Error::Precondition(format!("modulus {v} < 3")));
    }
    let v = v as usize;
    if let Some(x) = base_blocks.iter().flatten().find(|&&x| x >= v) {
        return Err(Error::Precondition(format!(
            "base element {x} outside 0..{v}"
        )));
    }
    let blocks = base_blocks
        .iter()
        .flat_map(|base| (0..v).map(move |i| base.iter().map(|&x| (x + i) % v).collect()))
        .collect();
    BlockDesign::new(v, blocks)
}

/// Replaces every block by its complement in the ground set.
pub fn complement_design(design: &BlockDesign) -> Result<BlockDesign> {
    let params = design
        .verified_params()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    let n = design.ground_size();
    let k = design.block_size();
    if k + 2 > n {
        return Err(Error::DegenerateComplement { n, k });
    }
    let blocks = design
        .blocks()
        .iter()
        .map(|b| (0..n).filter(|x| b.binary_search(x).is_err()).collect())
        .collect();
    let expected = params
        .complement()
        .ok_or(Error::DegenerateComplement { n, k })?;
    checked(BlockDesign::new(n, blocks)?, &expected)
}

fn multiset_overlap(a: &BlockDesign, b: &BlockDesign) -> usize {
    // both block lists are sorted
    let (mut i, mut j, mut common) = (0, 0, 0);
    let (x, y) = (a.blocks(), b.blocks());
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    common
}

const RANDOM_RELABELINGS: usize = 4096;

/// An isomorphic copy of `base` sharing as few blocks as possible with `avoid`,
/// chosen among cyclic shifts, transpositions, and then a fixed-seed sequence
/// of random relabelings of the ground set.
fn fresh_copy(base: &BlockDesign, avoid: &BlockDesign) -> Result<BlockDesign> {
    let n = base.ground_size();
    let mut best: Option<(usize, BlockDesign)> = None;
    let shifts = (1..n).map(|s| (0..n).map(|x| (x + s) % n).collect::<Vec<_>>());
    let swaps = (0..n).flat_map(|i| {
        (i + 1..n).map(move |j| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(i, j);
            p
        })
    });
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    let random = (0..RANDOM_RELABELINGS).map(move |_| {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut rng);
        p
    });
    for perm in shifts.chain(swaps).chain(random) {
        let copy = base.relabel(&perm)?;
        let overlap = multiset_overlap(&copy, avoid);
        if best.as_ref().is_none_or(|(o, _)| overlap < *o) {
            let done = overlap == 0;
            best = Some((overlap, copy));
            if done {
                break;
            }
        }
    }
    Ok(best.map_or_else(|| base.clone(), |(_, d)| d))
}

/// Triple systems reachable without the catalog or the solver.
fn direct_triple_system(n: u64, lambda: u64) -> Option<Result<BlockDesign>> {
    let sts_case = matches!(n % 6, 1 | 3);
    let build = || -> Result<BlockDesign> {
        match lambda {
            1 => build_sts(n),
            2 => {
                let sts = build_sts(n)?;
                let copy = fresh_copy(&sts, &sts)?;
                sts.union(&copy)
            }
            3 if sts_case => {
                let sts = build_sts(n)?;
                let second = fresh_copy(&sts, &sts)?;
                let twofold = sts.union(&second)?;
                let third = fresh_copy(&sts, &twofold)?;
                twofold.union(&third)
            }
            3 if n == 5 => build_complete_triples(5),
            3 => {
                // base blocks {0, i, 2i}, 1 <= i <= (n-1)/2: differences ±i, ±i, ±2i
                // hit every nonzero residue exactly three times for odd n
                let base: Vec<Vec<usize>> = (1..=(n as usize - 1) / 2)
                    .map(|i| vec![0, i, (2 * i) % n as usize])
                    .collect();
                develop_difference_family(n, &base)
            }
            _ => unreachable!(),
        }
    };
    match lambda {
        1 if sts_case => Some(build()),
        2 if sts_case => Some(build()),
        2 if matches!(n % 6, 0 | 4) => twofold_blocks(n as usize)
            .map(|blocks| BlockDesign::new(n as usize, blocks)),
        3 if n % 2 == 1 => Some(build()),
        _ => None,
    }
}

/// Triple system with pair multiplicity `lambda`, resolving gaps from the
/// bundled catalog and a solver run of [`DEFAULT_NODE_BUDGET`] nodes.
pub fn build_triple_system(n: u64, lambda: u64) -> Result<BlockDesign> {
    build_triple_system_with(n, lambda, Catalog::bundled(), DEFAULT_NODE_BUDGET)
}

pub fn build_triple_system_with(
    n: u64,
    lambda: u64,
    catalog: &Catalog,
    node_budget: u64,
) -> Result<BlockDesign> {
    let params = triple_system_params(n, lambda)?;
    if !hanani_admissible(n, lambda) {
        return Err(Error::InadmissibleParameters(format!(
            "no triple system with n = {n}, λ = {lambda}"
        )));
    }
    match direct_triple_system(n, lambda) {
        Some(built) => checked(built?, &params),
        None => resolve_design(&params, catalog, node_budget),
    }
}

/// Symmetric `((n²+n+λ)/λ, n+1, λ)` design for `λ ∈ {1, 2, 3}`.
pub fn build_symmetric(
    n: u64,
    lambda: u64,
    catalog: &Catalog,
    node_budget: u64,
) -> Result<BlockDesign> {
    let params = symmetric_params(n, lambda)?;
    resolve_design(&params, catalog, node_budget)
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Catalog entry or closed-form construction for `params`, if one applies.
fn direct(params: &DesignParams, catalog: &Catalog) -> Option<Result<BlockDesign>> {
    if let Some(design) = catalog.lookup(params) {
        return Some(Ok(design.clone()));
    }
    let DesignParams { b, n, k, lambda, .. } = *params;
    if k == 3 {
        if let Ok(tp) = triple_system_params(n, lambda) {
            if tp == *params {
                if let Some(built) = direct_triple_system(n, lambda) {
                    return Some(built);
                }
            }
        }
    }
    if binomial(n, k) == Some(b) && n <= 64 {
        return Some(BlockDesign::new(n as usize, k_subsets(n as usize, k as usize)));
    }
    if lambda == 1 && params.is_symmetric() {
        let q = k - 1;
        if symmetric_params(q, 1).ok() == Some(*params) && crate::field::is_prime_power(q) {
            return Some(build_projective_plane(q));
        }
    }
    None
}

/// Finds a design with the given parameters: catalog, closed-form
/// constructions, complement of a directly available design, and finally the
/// backtracking solver.
pub fn resolve_design(
    params: &DesignParams,
    catalog: &Catalog,
    node_budget: u64,
) -> Result<BlockDesign> {
    if let Some(built) = direct(params, catalog) {
        return checked(built?, params);
    }
    if let Some(cp) = params.complement() {
        if let Some(built) = direct(&cp, catalog) {
            let built = built?;
            if built.block_size() + 2 <= built.ground_size() {
                return checked(complement_design(&built)?, params);
            }
        }
    }
    match solve_design(params, node_budget)? {
        SolveOutcome::Found(design) => checked(design, params),
        SolveOutcome::Exhausted | SolveOutcome::BudgetExceeded => {
            Err(Error::ConstructionUnavailable(*params))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn params(b: u64, n: u64, r: u64, k: u64, l: u64) -> DesignParams {
        DesignParams::new(b, n, r, k, l).unwrap()
    }

    #[test]
    fn sts_small_orders() {
        assert_eq!(build_sts(7).unwrap().params(), Some(params(7, 7, 3, 3, 1)));
        let nine = build_sts(9).unwrap();
        assert_eq!(nine.block_count(), 12);
        assert_eq!(nine.params().unwrap().r, 4);
        assert!(build_sts(6).is_err());
        assert_eq!(build_sts(3).unwrap().block_count(), 1);
    }

    #[test]
    fn sts_counts_up_to_33() {
        for n in (3..=33u64).filter(|n| matches!(n % 6, 1 | 3)) {
            let d = build_sts(n).unwrap();
            assert_eq!(d.block_count() as u64, n * (n - 1) / 6, "n = {n}");
            let p = d.params().unwrap();
            assert_eq!(p.r, (n - 1) / 2);
        }
    }

    #[test]
    fn complete_triples() {
        assert_eq!(
            build_complete_triples(5).unwrap().params(),
            Some(params(10, 5, 6, 3, 3))
        );
        let three = build_complete_triples(3).unwrap();
        assert_eq!(three.blocks(), &[vec![0, 1, 2]]);
        assert_eq!(three.params(), Some(params(1, 3, 1, 3, 1)));
        assert_eq!(
            build_complete_triples(4).unwrap().params(),
            Some(params(4, 4, 3, 3, 2))
        );
    }

    #[test]
    fn projective_planes() {
        assert_eq!(
            build_projective_plane(2).unwrap().params(),
            Some(params(7, 7, 3, 3, 1))
        );
        assert_eq!(
            build_projective_plane(3).unwrap().params(),
            Some(params(13, 13, 4, 4, 1))
        );
        for q in [4, 5, 7, 8, 9] {
            let d = build_projective_plane(q).unwrap();
            let v = q * q + q + 1;
            assert_eq!(d.params(), Some(params(v, v, q + 1, q + 1, 1)));
        }
        assert!(build_projective_plane(6).is_err());
    }

    #[test]
    fn difference_developments() {
        let fano = develop_difference_family(7, &[vec![0, 1, 3]]).unwrap();
        assert_eq!(fano.params(), Some(params(7, 7, 3, 3, 1)));
        let biplane = develop_difference_family(11, &[vec![1, 3, 4, 5, 9]]).unwrap();
        assert_eq!(biplane.params(), Some(params(11, 11, 5, 5, 2)));
        let full = develop_difference_family(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(full.block_count(), 3);
        assert!(full.blocks().iter().all(|b| b == &[0, 1, 2]));
        assert_eq!(full.params().unwrap().lambda, 3);
    }

    #[test]
    fn complements() {
        let biplane = develop_difference_family(11, &[vec![1, 3, 4, 5, 9]]).unwrap();
        assert_eq!(
            complement_design(&biplane).unwrap().params(),
            Some(params(11, 11, 6, 6, 3))
        );
        assert_eq!(
            complement_design(&fixtures::fano()).unwrap().params(),
            Some(params(7, 7, 4, 4, 2))
        );
        assert!(matches!(
            complement_design(&build_complete_triples(3).unwrap()),
            Err(Error::DegenerateComplement { .. })
        ));
    }

    #[test]
    fn triple_system_dispatch() {
        assert_eq!(
            build_triple_system(7, 1).unwrap().params(),
            Some(params(7, 7, 3, 3, 1))
        );
        assert_eq!(
            build_triple_system(6, 2).unwrap().params(),
            Some(params(10, 6, 5, 3, 2))
        );
        assert_eq!(
            build_triple_system(5, 3).unwrap().params(),
            Some(params(10, 5, 6, 3, 3))
        );
        assert!(matches!(
            build_triple_system(6, 1),
            Err(Error::InadmissibleParameters(_))
        ));
    }

    #[test]
    fn idempotent_quasigroups() {
        assert!(idempotent_quasigroup(2).is_none());
        for t in [1, 3, 4, 5, 6, 8, 10, 11] {
            let q = idempotent_quasigroup(t).unwrap();
            for x in 0..t {
                assert_eq!(q[x][x], x, "t={t}");
                let mut row: Vec<usize> = q[x].clone();
                let mut col: Vec<usize> = (0..t).map(|y| q[y][x]).collect();
                row.sort_unstable();
                col.sort_unstable();
                assert_eq!(row, (0..t).collect::<Vec<_>>(), "t={t}");
                assert_eq!(col, (0..t).collect::<Vec<_>>(), "t={t}");
            }
        }
    }

    #[test]
    fn twofold_for_even_residues() {
        for n in [4u64, 10, 12, 16, 18, 22, 24, 58, 70] {
            let d = build_triple_system(n, 2).unwrap();
            assert_eq!(d.params(), triple_system_params(n, 2).ok(), "n={n}");
        }
    }

    #[test]
    fn twofold_union_avoids_repeats() {
        let d = build_triple_system(7, 2).unwrap();
        let blocks = d.blocks();
        assert!(blocks.windows(2).all(|w| w[0] != w[1]));
    }

    #[test]
    fn threefold_cyclic_for_five_mod_six() {
        for n in [11, 17, 23] {
            let d = build_triple_system(n, 3).unwrap();
            assert_eq!(d.params(), triple_system_params(n, 3).ok());
        }
    }

    #[test]
    fn symmetric_small_cases() {
        let cat = Catalog::bundled();
        for (n, l) in [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (3, 3), (5, 3)] {
            let d = build_symmetric(n, l, cat, 10_000).unwrap();
            assert_eq!(d.params(), symmetric_params(n, l).ok(), "n={n} λ={l}");
        }
    }
}
