use std::collections::HashSet;

use crate::field;
use crate::ring::{Monomial, MonomialOrder, Polynomial};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens` with respect to `order`.
///
/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and both of Buchberger's criteria. The result is monic,
/// inter-reduced and sorted by increasing leading monomial.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    fn add(h: Polynomial, basis: &mut Vec<Polynomial>, pairs: &mut Vec<Pair>, pending: &mut HashSet<(usize, usize)>) {
        let j = basis.len();
        let lm = h.leading_monomial().unwrap().clone();
        for (i, g) in basis.iter().enumerate() {
            pairs.push(Pair {
                i,
                j,
                lcm: g.leading_monomial().unwrap().lcm(&lm),
            });
            pending.insert((i, j));
        }
        basis.push(h);
    }

    for g in gens {
        let g = g.with_order(order);
        if !g.is_zero() {
            add(g.monic(), &mut basis, &mut pairs, &mut pending);
        }
    }

    while !pairs.is_empty() {
        let next = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .unwrap();
        let Pair { i, j, lcm } = pairs.swap_remove(next);
        pending.remove(&(i, j));

        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], &lcm);
        let h = normal_form(&s, &basis);
        if !h.is_zero() {
            add(h.monic(), &mut basis, &mut pairs, &mut pending);
        }
    }
    reduce_basis(basis, order)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    // both monic
    let mf = lcm.div(f.leading_monomial().unwrap()).unwrap();
    let mg = lcm.div(g.leading_monomial().unwrap()).unwrap();
    f.mul_term(&mf, 1).sub_mul_term(1, &mg, g)
}

/// Minimalizes and inter-reduces a Gröbner basis.
pub(crate) fn reduce_basis(basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let lh = h.leading_monomial().unwrap();
            k != idx && lh.divides(lm) && (lh != lm || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|idx| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, h)| h.clone())
                .collect();
            normal_form(&minimal[idx], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    reduced
}

/// Fully reduces `f` modulo `basis`; with a Gröbner basis the result is the
/// canonical representative of `f` in the quotient.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let order = basis.first().map_or(f.order(), Polynomial::order);
    let p = f.ring().prime();
    let mut rest = f.with_order(order);
    let mut remainder: Vec<(Monomial, u32)> = Vec::new();
    while let Some((m, c)) = rest.leading_term() {
        let reducer = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)));
        match reducer {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let q = m.div(lm).unwrap();
                let coeff = if lc == 1 { c } else { field::mul(c, field::inv(lc, p), p) };
                rest = rest.sub_mul_term(coeff, &q, g);
            }
            None => {
                remainder.push((m.clone(), c));
                let terms = rest.terms()[1..].to_vec();
                rest = Polynomial::from_sorted_terms(rest.ring(), order, terms);
            }
        }
    }
    Polynomial::from_sorted_terms(f.ring(), order, remainder)
}
