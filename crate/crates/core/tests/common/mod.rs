#![allow(dead_code)]

use geoblock::{BlockDesign, Graph};
use rand::Rng;

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn legendre(a: i128, p: i128) -> i32 {
    let a = a.rem_euclid(p);
    if a == 0 {
        return 0;
    }
    let mut result = 1i128;
    let (mut base, mut exp) = (a, (p - 1) / 2);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

fn split(mut x: i128, p: i128) -> (u32, i128) {
    let mut e = 0;
    while x % p == 0 {
        x /= p;
        e += 1;
    }
    (e, x)
}

/// Hilbert symbol `(a, b)_p` for a prime `p`.
pub fn hilbert(a: i128, b: i128, p: i128) -> i32 {
    let (alpha, u) = split(a, p);
    let (beta, v) = split(b, p);
    if p == 2 {
        let eps = |x: i128| ((x - 1) / 2).rem_euclid(2);
        let omega = |x: i128| ((x * x - 1) / 8).rem_euclid(2);
        let e = eps(u) * eps(v) + alpha as i128 * omega(v) + beta as i128 * omega(u);
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let eps = ((p - 1) / 2) % 2;
        let mut s = if (alpha as i128 * beta as i128 * eps) % 2 == 0 { 1 } else { -1 };
        if beta % 2 == 1 {
            s *= legendre(u, p);
        }
        if alpha % 2 == 1 {
            s *= legendre(v, p);
        }
        s
    }
}

/// Whether `x² = a y² + b z²` has a nontrivial rational zero, by the local
/// Hilbert-symbol criterion at every relevant place.
pub fn isotropic(a: i64, b: i64) -> bool {
    if a == 0 || b == 0 {
        return true;
    }
    if a < 0 && b < 0 {
        return false;
    }
    let mut primes: Vec<u64> = vec![2];
    for x in [a, b] {
        primes.extend(factorize(x.unsigned_abs()).into_iter().map(|(p, _)| p));
    }
    primes.sort_unstable();
    primes.dedup();
    primes
        .into_iter()
        .all(|p| hilbert(a as i128, b as i128, p as i128) == 1)
}

/// For every nonadjacent pair `u < v`: distance and number of shortest paths,
/// found by enumerating simple paths of increasing length.
pub fn brute_geodesics(g: &Graph) -> Option<Vec<(usize, usize, u32, u64)>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let mut found = None;
            for len in 2..n {
                let mut on_path = vec![false; n];
                on_path[u] = true;
                let count = count_paths(g, u, v, len, &mut on_path);
                if count > 0 {
                    found = Some((len as u32, count));
                    break;
                }
            }
            let (d, c) = found?;
            out.push((u, v, d, c));
        }
    }
    Some(out)
}

fn count_paths(g: &Graph, at: usize, target: usize, left: usize, on_path: &mut [bool]) -> u64 {
    if left == 0 {
        return u64::from(at == target);
    }
    if at == target {
        return 0;
    }
    let mut total = 0;
    for &w in g.neighbors(at) {
        if !on_path[w] {
            on_path[w] = true;
            total += count_paths(g, w, target, left - 1, on_path);
            on_path[w] = false;
        }
    }
    total
}

fn connected_without(g: &Graph, removed: u32) -> bool {
    let n = g.vertex_count();
    let Some(start) = (0..n).find(|&v| removed & (1 << v) == 0) else {
        return true;
    };
    let mut seen = removed | (1 << start);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &w in g.neighbors(x) {
            if seen & (1 << w) == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// Smallest vertex set whose deletion leaves a disconnected graph, by
/// trying every subset; `n - 1` when no such set exists.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    let mut best = n.saturating_sub(1);
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < best && n - size >= 2 && !connected_without(g, mask) {
            best = size;
        }
    }
    best
}

/// Random connected graph: a random spanning tree plus each other edge with
/// probability `p`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Checks the design axioms by direct counting; returns `(b, n, r, k, λ)`.
pub fn brute_params(d: &BlockDesign) -> Option<(u64, u64, u64, u64, u64)> {
    let n = d.ground_size();
    let k = d.blocks().first()?.len();
    if d.blocks().iter().any(|b| b.len() != k) {
        return None;
    }
    let mut rep = vec![0u64; n];
    let mut pairs = vec![vec![0u64; n]; n];
    for b in d.blocks() {
        for &x in b {
            rep[x] += 1;
            for &y in b {
                if x != y {
                    pairs[x][y] += 1;
                }
            }
        }
    }
    let r = rep[0];
    let l = pairs[0][1];
    let ok = rep.iter().all(|&x| x == r)
        && (0..n).all(|x| (0..n).all(|y| x == y || pairs[x][y] == l));
    ok.then_some((d.block_count() as u64, n as u64, r, k as u64, l))
}
