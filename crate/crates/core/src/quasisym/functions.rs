use std::collections::HashMap;

use super::indexing::{Composition, SubsetDescent};
use crate::exactpoly::{EvalContext, QCoeff, TruncPoly};

/// `M_α = Σ_{i_1<⋯<i_p} x_{i_1}^{α_1}⋯x_{i_p}^{α_p}`.
pub fn monomial_qsym(alpha: &Composition, ctx: EvalContext) -> TruncPoly {
    let mut out = TruncPoly::zero(ctx);
    if alpha.size() > ctx.d {
        return out;
    }
    let one = QCoeff::one();
    let parts = alpha.parts();
    fn rec(k: usize, start: usize, parts: &[usize], exps: &mut Vec<u32>, out: &mut TruncPoly, one: &QCoeff) {
        if k == parts.len() {
            out.add_term(exps.clone(), one);
            return;
        }
        let m = exps.len();
        // leave room for the remaining parts
        for i in start..m + k + 1 - parts.len() {
            exps[i] = parts[k] as u32;
            rec(k + 1, i + 1, parts, exps, out, one);
            exps[i] = 0;
        }
    }
    if parts.len() <= ctx.m {
        rec(0, 0, parts, &mut vec![0; ctx.m], &mut out, &one);
    }
    out
}

/// The composition read off an exponent vector by dropping zeros.
pub(crate) fn packed(exps: &[u32]) -> Vec<usize> {
    exps.iter().filter(|&&e| e > 0).map(|&e| e as usize).collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every monomial whose exponents pack to `α` carries the same coefficient,
/// for every `α` that occurs.
pub fn is_quasisymmetric(f: &TruncPoly) -> bool {
    let m = f.context().m;
    let mut seen: HashMap<Vec<usize>, (usize, &QCoeff)> = HashMap::new();
    for (e, c) in f.terms() {
        let alpha = packed(e.as_slice());
        match seen.get_mut(&alpha) {
            Some((count, first)) => {
                if *first != c {
                    return false;
                }
                *count += 1;
            }
            None => {
                seen.insert(alpha, (1, c));
            }
        }
    }
    seen.iter().all(|(alpha, (count, _))| *count == binomial(m, alpha.len()))
}

/// `L^(q)_{n,I}` from the closed formula: weakly increasing `i_1 ≤ ⋯ ≤ i_n`
/// with `i_{j-1} < i_{j+1}` at every peak `j` of `I`, weighted
/// `q^{#{j∈I : i_j = i_{j+1}}} (1+q)^{#distinct values}`.
pub fn l_q_closed(idx: &SubsetDescent, ctx: EvalContext) -> TruncPoly {
    let n = idx.n();
    let mut out = TruncPoly::zero(ctx);
    if n > ctx.d {
        return out;
    }
    let mut is_desc = vec![false; n + 1];
    for &j in idx.set() {
        is_desc[j] = true;
    }
    let mut is_peak = vec![false; n + 1];
    for j in idx.peak_set() {
        is_peak[j] = true;
    }
    // q^eq (1+q)^distinct, cached by (eq, distinct)
    let mut weights: HashMap<(usize, usize), QCoeff> = HashMap::new();
    let mut weight = |eq: usize, distinct: usize| {
        weights
            .entry((eq, distinct))
            .or_insert_with(|| QCoeff::q_pow(eq) * QCoeff::from_i64s(&[1, 1]).pow(distinct as u32))
            .clone()
    };
    struct Walk<'a> {
        is_desc: &'a [bool],
        is_peak: &'a [bool],
        seq: Vec<usize>,
        exps: Vec<u32>,
    }
    fn rec(w: &mut Walk, m: usize, eq: usize, distinct: usize, visit: &mut dyn FnMut(&[u32], usize, usize)) {
        let len = w.seq.len();
        if len == w.is_desc.len() - 1 {
            visit(&w.exps, eq, distinct);
            return;
        }
        let lo = w.seq.last().copied().unwrap_or(1);
        for v in lo..=m {
            // positions are 1-based: placing i_{len+1}
            if len >= 2 && w.is_peak[len] && w.seq[len - 2] >= v {
                continue;
            }
            let (mut eq2, mut d2) = (eq, distinct);
            match w.seq.last() {
                Some(&u) if u == v => eq2 += usize::from(w.is_desc[len]),
                _ => d2 += 1,
            }
            w.seq.push(v);
            w.exps[v - 1] += 1;
            rec(w, m, eq2, d2, visit);
            w.exps[v - 1] -= 1;
            w.seq.pop();
        }
    }
    let mut walk = Walk {
        is_desc: &is_desc,
        is_peak: &is_peak,
        seq: Vec::with_capacity(n),
        exps: vec![0; ctx.m],
    };
    rec(&mut walk, ctx.m, 0, 0, &mut |e, eq, d| out.add_term(e.to_vec(), &weight(eq, d)));
    out
}

/// Gessel's `L_{n,I}`: `i_1 ≤ ⋯ ≤ i_n` with `i_j < i_{j+1}` whenever `j ∈ I`.
pub fn gessel_fundamental(idx: &SubsetDescent, ctx: EvalContext) -> TruncPoly {
    let n = idx.n();
    let mut out = TruncPoly::zero(ctx);
    if n > ctx.d {
        return out;
    }
    let one = QCoeff::one();
    fn rec(idx: &SubsetDescent, m: usize, seq: &mut Vec<usize>, out: &mut TruncPoly, one: &QCoeff) {
        let len = seq.len();
        if len == idx.n() {
            let mut e = vec![0u32; m];
            for &v in seq.iter() {
                e[v - 1] += 1;
            }
            out.add_term(e, one);
            return;
        }
        let lo = match seq.last() {
            Some(&u) if idx.contains(len) => u + 1,
            Some(&u) => u,
            None => 1,
        };
        for v in lo..=m {
            seq.push(v);
            rec(idx, m, seq, out, one);
            seq.pop();
        }
    }
    rec(idx, ctx.m, &mut Vec::new(), &mut out, &one);
    out
}
