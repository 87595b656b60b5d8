//! Degree-bounded noncommutative rewriting for B(E).

use crate::error::{Error, Result};
use crate::linalg::{echelon, SparseVec};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

pub type Word = Vec<u8>;
pub type Poly = LinComb<Word>;

/// Degree-lexicographic order on words, generators ordered by index.
pub fn deglex(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn leading(p: &Poly) -> Option<(&Word, &Scalar)> {
    p.iter().max_by(|x, y| deglex(x.0, y.0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Poly,
}

/// Which occurrence a reduction step rewrites; both must agree on a
/// confluent system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Debug, Serialize)]
pub struct OverlapCheck {
    pub word: Word,
    pub resolves: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RewriteSystem {
    pub generators: Vec<String>,
    pub rules: Vec<RewriteRule>,
    pub degree_bound: usize,
    /// Every overlap ambiguity of length at most the bound, as checked
    /// after completion.
    pub overlaps: Vec<OverlapCheck>,
}

impl RewriteSystem {
    fn find(&self, w: &[u8], strategy: Strategy) -> Option<(usize, usize)> {
        let positions: Box<dyn Iterator<Item = usize>> = match strategy {
            Strategy::Leftmost => Box::new(0..w.len()),
            Strategy::Rightmost => Box::new((0..w.len()).rev()),
        };
        for start in positions {
            for (ri, r) in self.rules.iter().enumerate() {
                if w[start..].starts_with(&r.lhs) {
                    return Some((start, ri));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.find(w, Strategy::Leftmost).is_none()
    }

    /// Full reduction. Words longer than `degree_bound` are an error.
    pub fn reduce_with(&self, p: &Poly, strategy: Strategy) -> Result<Poly> {
        reduce_rules(&self.rules, p, strategy, Some(self.degree_bound))
    }

    pub fn reduce(&self, p: &Poly) -> Result<Poly> {
        self.reduce_with(p, Strategy::Leftmost)
    }

    /// Normal words of each length `0..=d`.
    pub fn standard_monomials(&self, d: usize) -> Vec<Vec<Word>> {
        let m = self.generators.len() as u8;
        let mut levels: Vec<Vec<Word>> = vec![vec![Vec::new()]];
        for _ in 0..d {
            let mut next = Vec::new();
            for w in levels.last().unwrap() {
                for g in 0..m {
                    let mut v = w.clone();
                    v.push(g);
                    // Only suffixes can create a new reducible subword.
                    if self.rules.iter().all(|r| !v.ends_with(&r.lhs)) {
                        next.push(v);
                    }
                }
            }
            levels.push(next);
        }
        levels
    }

    pub fn is_confluent(&self) -> bool {
        self.overlaps.iter().all(|o| o.resolves)
    }

    /// Every rule maps to terms of the same length parity as its left side.
    pub fn is_parity_homogeneous(&self) -> bool {
        self.rules
            .iter()
            .all(|r| r.rhs.keys().all(|w| w.len() % 2 == r.lhs.len() % 2))
    }

    pub fn word_string(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let sep = if self.generators.iter().all(|g| g.len() == 1) {
            ""
        } else {
            "*"
        };
        w.iter()
            .map(|&g| self.generators[g as usize].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

fn reduce_rules(rules: &[RewriteRule], p: &Poly, strategy: Strategy, bound: Option<usize>) -> Result<Poly> {
    // Work queue ordered by deglex so each word is finished once.
    let mut work: BTreeMap<(usize, Word), Scalar> = BTreeMap::new();
    for (w, c) in p.iter() {
        if let Some(b) = bound {
            if w.len() > b {
                return Err(Error::DegreeOverflow {
                    degree: w.len(),
                    bound: b,
                });
            }
        }
        *work.entry((w.len(), w.clone())).or_default() += c;
    }
    let mut out = Poly::zero();
    while let Some(((_, w), c)) = work.pop_last() {
        if c.is_zero() {
            continue;
        }
        let hit = {
            let positions: Vec<usize> = match strategy {
                Strategy::Leftmost => (0..w.len()).collect(),
                Strategy::Rightmost => (0..w.len()).rev().collect(),
            };
            positions
                .into_iter()
                .find_map(|s| rules.iter().find(|r| w[s..].starts_with(&r.lhs)).map(|r| (s, r)))
        };
        match hit {
            None => out.add_term(w, c),
            Some((s, r)) => {
                for (rw, rc) in r.rhs.iter() {
                    let mut nw = w[..s].to_vec();
                    nw.extend_from_slice(rw);
                    nw.extend_from_slice(&w[s + r.lhs.len()..]);
                    let v = &c * rc;
                    let e = work.entry((nw.len(), nw)).or_default();
                    *e += &v;
                }
            }
        }
    }
    Ok(out)
}

fn invert(e: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    crate::linalg::dense_inverse(e).ok_or_else(|| Error::Invalid("E is singular".into()))
}

pub(crate) struct BeData {
    pub n: usize,
    pub e: Vec<Vec<Scalar>>,
    pub e_inv: Vec<Vec<Scalar>>,
    pub relations: Vec<Poly>,
}

pub(crate) fn be_relations(e: &[Vec<Scalar>]) -> Result<BeData> {
    let n = e.len();
    if n < 2 {
        return Err(Error::Invalid(format!("B(E) needs n >= 2, got n = {}", n)));
    }
    if e.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid("E must be square".into()));
    }
    let e_inv = invert(e)?;
    let u = |i: usize, j: usize| (i * n + j) as u8;
    let mut relations = Vec::new();
    // E^{-1} u^t E u = I
    for i in 0..n {
        for j in 0..n {
            let mut p = Poly::zero();
            for k in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let c = &e_inv[i][k] * &e[l][m];
                        p.add_term(vec![u(l, k), u(m, j)], c);
                    }
                }
            }
            if i == j {
                p.add_term(Vec::new(), Scalar::from_i64(-1));
            }
            relations.push(p);
        }
    }
    // u E^{-1} u^t E = I
    for i in 0..n {
        for j in 0..n {
            let mut p = Poly::zero();
            for k in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let c = &e_inv[k][l] * &e[m][j];
                        p.add_term(vec![u(i, k), u(m, l)], c);
                    }
                }
            }
            if i == j {
                p.add_term(Vec::new(), Scalar::from_i64(-1));
            }
            relations.push(p);
        }
    }
    Ok(BeData {
        n,
        e: e.to_vec(),
        e_inv,
        relations,
    })
}

/// Gaussian interreduction of a relation list into rules with distinct
/// leading words.
fn interreduce(polys: &[Poly]) -> Result<Vec<RewriteRule>> {
    let mut words: BTreeSet<(usize, Word)> = BTreeSet::new();
    for p in polys {
        for w in p.keys() {
            words.insert((w.len(), w.clone()));
        }
    }
    // Column 0 is the largest word.
    let cols: Vec<Word> = words.into_iter().rev().map(|(_, w)| w).collect();
    let index: BTreeMap<&Word, usize> = cols.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let rows: Vec<SparseVec> = polys
        .iter()
        .map(|p| {
            let mut r: SparseVec = p.iter().map(|(w, c)| (index[w], c.clone())).collect();
            r.sort_by_key(|e| e.0);
            r
        })
        .collect();
    let mut rules = Vec::new();
    for (pivot, row) in echelon(rows) {
        let lhs = cols[pivot].clone();
        if lhs.is_empty() {
            return Err(Error::Inconsistent("relations imply 1 = 0".into()));
        }
        let rhs: Poly = row.iter().skip(1).map(|(k, c)| (cols[*k].clone(), -c)).collect();
        rules.push(RewriteRule { lhs, rhs });
    }
    Ok(rules)
}

fn overlap_words(rules: &[RewriteRule], bound: usize) -> Vec<(Word, usize, usize, usize)> {
    let mut out = Vec::new();
    for (i, r1) in rules.iter().enumerate() {
        for (j, r2) in rules.iter().enumerate() {
            for k in 1..r1.lhs.len().min(r2.lhs.len()) {
                if r1.lhs[r1.lhs.len() - k..] == r2.lhs[..k] {
                    let mut w = r1.lhs.clone();
                    w.extend_from_slice(&r2.lhs[k..]);
                    if w.len() <= bound {
                        out.push((w, i, j, r1.lhs.len() - k));
                    }
                }
            }
        }
    }
    out
}

/// The two one-step rewrites of an overlap, each fully reduced.
fn resolve(rules: &[RewriteRule], w: &[u8], i: usize, j: usize, start_j: usize) -> Result<Poly> {
    let r1 = &rules[i];
    let r2 = &rules[j];
    let mut left = Poly::zero();
    for (rw, c) in r1.rhs.iter() {
        let mut nw = rw.clone();
        nw.extend_from_slice(&w[r1.lhs.len()..]);
        left.add_term(nw, c.clone());
    }
    let mut right = Poly::zero();
    for (rw, c) in r2.rhs.iter() {
        let mut nw = w[..start_j].to_vec();
        nw.extend_from_slice(rw);
        right.add_term(nw, c.clone());
    }
    let l = reduce_rules(rules, &left, Strategy::Leftmost, None)?;
    let r = reduce_rules(rules, &right, Strategy::Leftmost, None)?;
    Ok(l.sub(&r))
}

/// Derives the rewriting system of B(E) from `E`, completing overlaps up
/// to `degree_bound`. Fails if more than `rule_budget` rules are needed.
pub fn derive_be_relations(e: &[Vec<Scalar>], degree_bound: usize, rule_budget: usize) -> Result<RewriteSystem> {
    let data = be_relations(e)?;
    complete(&data.relations, generator_names(data.n), degree_bound, rule_budget)
}

pub(crate) fn generator_names(n: usize) -> Vec<String> {
    if n == 2 {
        vec!["a".into(), "b".into(), "c".into(), "d".into()]
    } else {
        (0..n * n).map(|k| format!("u{}{}", k / n + 1, k % n + 1)).collect()
    }
}

pub(crate) fn complete(
    relations: &[Poly],
    generators: Vec<String>,
    degree_bound: usize,
    rule_budget: usize,
) -> Result<RewriteSystem> {
    let mut basis: Vec<Poly> = relations.to_vec();
    let mut rules = interreduce(&basis)?;
    loop {
        if rules.len() > rule_budget {
            return Err(Error::Budget {
                what: "rewrite rules".into(),
                needed: rules.len(),
                budget: rule_budget,
            });
        }
        let mut new_rel = None;
        for (w, i, j, s) in overlap_words(&rules, degree_bound) {
            let diff = resolve(&rules, &w, i, j, s)?;
            if !diff.is_zero() {
                new_rel = Some(diff);
                break;
            }
        }
        match new_rel {
            None => break,
            Some(p) => {
                let (lw, _) = leading(&p).unwrap();
                if lw.is_empty() {
                    return Err(Error::Inconsistent("completion derived 1 = 0".into()));
                }
                basis = rules
                    .iter()
                    .map(|r| {
                        let mut q = r.rhs.scale(&Scalar::from_i64(-1));
                        q.add_term(r.lhs.clone(), Scalar::one());
                        q
                    })
                    .collect();
                basis.push(p);
                rules = interreduce(&basis)?;
                // Drop rules whose left side is reducible by a shorter one,
                // feeding their reduced difference back in.
                let mut changed = true;
                while changed {
                    changed = false;
                    for k in 0..rules.len() {
                        let others: Vec<RewriteRule> = rules
                            .iter()
                            .enumerate()
                            .filter(|(m, _)| *m != k)
                            .map(|(_, r)| r.clone())
                            .collect();
                        let lhs_red =
                            reduce_rules(&others, &LinComb::basis(rules[k].lhs.clone()), Strategy::Leftmost, None)?;
                        if lhs_red != LinComb::basis(rules[k].lhs.clone()) {
                            let rhs_red = reduce_rules(&others, &rules[k].rhs, Strategy::Leftmost, None)?;
                            let diff = lhs_red.sub(&rhs_red);
                            let mut polys: Vec<Poly> = others
                                .iter()
                                .map(|r| {
                                    let mut q = r.rhs.scale(&Scalar::from_i64(-1));
                                    q.add_term(r.lhs.clone(), Scalar::one());
                                    q
                                })
                                .collect();
                            if !diff.is_zero() {
                                polys.push(diff);
                            }
                            rules = interreduce(&polys)?;
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
    }
    // Right sides fully reduced.
    let snapshot = rules.clone();
    for r in rules.iter_mut() {
        r.rhs = reduce_rules(&snapshot, &r.rhs, Strategy::Leftmost, None)?;
    }
    rules.sort_by(|a, b| deglex(&a.lhs, &b.lhs));
    let overlaps = overlap_words(&rules, degree_bound)
        .into_iter()
        .map(|(w, i, j, s)| {
            let resolves = resolve(&rules, &w, i, j, s).map(|d| d.is_zero()).unwrap_or(false);
            OverlapCheck { word: w, resolves }
        })
        .collect();
    Ok(RewriteSystem {
        generators,
        rules,
        degree_bound,
        overlaps,
    })
}
