//! Brute-force oracles shared by the integration suites. None of these call
//! into the code paths they are used to check.

#![allow(dead_code)]

use monocurve::MinimalArithmetic;

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Forward-DP membership table for `⟨gens⟩` on `[0, limit]`.
pub fn sieve(gens: &[i64], limit: i64) -> Vec<bool> {
    let mut t = vec![false; limit as usize + 1];
    t[0] = true;
    for v in 1..=limit as usize {
        t[v] = gens.iter().any(|&g| g as usize <= v && t[v - g as usize]);
    }
    t
}

/// Frobenius number by sieving past a run of `min(gens)` consecutive members.
pub fn sieve_frobenius(gens: &[i64]) -> i64 {
    let m = *gens.iter().min().unwrap();
    let mut limit = 64 * gens.iter().max().unwrap();
    loop {
        let t = sieve(gens, limit);
        let last_gap = t.iter().rposition(|&b| !b).map_or(-1, |i| i as i64);
        if limit - last_gap > m {
            return last_gap;
        }
        limit *= 2;
    }
}

/// Pseudo-Frobenius numbers straight from the definition: `f ∉ S` with
/// `f + s ∈ S` for every nonzero `s ∈ S` up to `2F + 2·max(gens)`.
pub fn pf_by_definition(gens: &[i64]) -> Vec<i64> {
    let f = sieve_frobenius(gens);
    if f < 0 {
        return Vec::new();
    }
    let limit = 4 * f + 4 * gens.iter().max().unwrap() + 4;
    let t = sieve(gens, limit);
    let member = |v: i64| v >= 0 && t[v as usize];
    let nonzero: Vec<i64> = (1..=2 * f + 2 * gens.iter().max().unwrap())
        .filter(|&s| member(s))
        .collect();
    (-f - 1..=f)
        .filter(|&x| !member(x) && nonzero.iter().all(|&s| member(x + s)))
        .collect()
}

/// Membership in `⟨(0,n_p), (n_i, n_p - n_i), (n_p, 0)⟩` by building the sets
/// of first coordinates reachable with exactly `k` generators.
pub fn curve_member(seq: &[i64], x: i64, y: i64) -> bool {
    let np = *seq.last().unwrap();
    if x < 0 || y < 0 || (x + y) % np != 0 {
        return false;
    }
    let m = (x + y) / np;
    let firsts: Vec<i64> = std::iter::once(0).chain(seq.iter().copied()).collect();
    let mut reach = vec![false; x as usize + 1];
    reach[0] = true;
    for _ in 0..m {
        let mut next = vec![false; x as usize + 1];
        for v in 0..=x as usize {
            if reach[v] {
                for &f in &firsts {
                    if v + f as usize <= x as usize {
                        next[v + f as usize] = true;
                    }
                }
            }
        }
        reach = next;
    }
    reach[x as usize]
}

/// All minimal arithmetic triples `(n0, p, d)` with `p ≥ min_p` and `n_p ≤ max_np`.
pub fn minimal_arithmetic(max_np: i64, min_p: i64) -> Vec<MinimalArithmetic> {
    let mut out = Vec::new();
    for n0 in 1..=max_np {
        for p in min_p.max(1)..=max_np {
            for d in 1..=max_np {
                if n0 + p * d > max_np {
                    break;
                }
                if let Ok(ar) = MinimalArithmetic::new(n0, p, d) {
                    out.push(ar);
                }
            }
        }
    }
    out
}

/// Coprime pairs `n0 < n1 ≤ max`.
pub fn coprime_pairs(max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for n1 in 2..=max {
        for n0 in 1..n1 {
            if gcd(n0, n1) == 1 {
                out.push((n0, n1));
            }
        }
    }
    out
}

/// Every strictly increasing sequence ending at `np` with length `≤ max_len`
/// and gcd 1.
pub fn increasing_sequences(max_np: i64, max_len: usize) -> Vec<Vec<i64>> {
    fn extend(prefix: &mut Vec<i64>, next_min: i64, max_np: i64, max_len: usize, out: &mut Vec<Vec<i64>>) {
        if !prefix.is_empty() && prefix.iter().fold(0, |g, &v| gcd(g, v)) == 1 {
            out.push(prefix.clone());
        }
        if prefix.len() == max_len {
            return;
        }
        for v in next_min..=max_np {
            prefix.push(v);
            extend(prefix, v + 1, max_np, max_len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_np, max_len, &mut out);
    out
}

/// `e_HK` as an unreduced fraction `(colength, n_p)` from a box count of the
/// monomials outside `⟨x^{n_r} y^{n_p - n_r}⟩_{r=0..p}`, `n_0 = 0`.
pub fn hk_by_box(seq: &[i64]) -> (i64, i64) {
    let np = *seq.last().unwrap();
    let gens: Vec<(i64, i64)> = std::iter::once(0).chain(seq.iter().copied()).map(|n| (n, np - n)).collect();
    let mut count = 0;
    for i in 0..np {
        for j in 0..np {
            if gens.iter().all(|&(a, b)| i < a || j < b) {
                count += 1;
            }
        }
    }
    (count, np)
}
