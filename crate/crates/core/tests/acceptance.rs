//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and exits non-zero if any
//! criterion fails. Every check compares library output against an oracle written here.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcrystal::*;

type Rows = Vec<Vec<u32>>;
type Check<T> = std::result::Result<T, String>;

// ---------------------------------------------------------------------------------------
// oracles

/// All semistandard fillings of `shape` with entries in `1..=n`, row by row.
fn oracle_ssyt(shape: &[usize], n: u32) -> Vec<Rows> {
    fn go(shape: &[usize], n: u32, r: usize, c: usize, cur: &mut Rows, out: &mut Vec<Rows>) {
        if r == shape.len() {
            out.push(cur.clone());
            return;
        }
        if c == shape[r] {
            return go(shape, n, r + 1, 0, cur, out);
        }
        let left = if c > 0 { cur[r][c - 1] } else { 1 };
        let above = if r > 0 { cur[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=n {
            cur[r].push(v);
            go(shape, n, r, c + 1, cur, out);
            cur[r].pop();
        }
    }
    let mut out = Vec::new();
    go(shape, n, 0, 0, &mut vec![Vec::new(); shape.len()], &mut out);
    out
}

/// Cells ordered by (value, column): the standardization order.
fn oracle_std_order(rows: &Rows) -> Vec<(usize, usize)> {
    let mut cells: Vec<(u32, usize, usize)> = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            cells.push((v, c, r));
        }
    }
    cells.sort();
    cells.into_iter().map(|(_, c, r)| (r, c)).collect()
}

fn oracle_descents(rows: &Rows) -> Vec<usize> {
    let order = oracle_std_order(rows);
    (1..order.len())
        .filter(|&i| order[i].0 > order[i - 1].0)
        .collect()
}

fn oracle_descomp(rows: &Rows) -> Vec<usize> {
    let d = oracle_descents(rows);
    let m: usize = rows.iter().map(Vec::len).sum();
    let mut cuts = vec![0];
    cuts.extend(&d);
    cuts.push(m);
    cuts.windows(2).map(|w| w[1] - w[0]).collect()
}

fn oracle_std(rows: &Rows) -> Rows {
    let mut out: Rows = rows.iter().map(|r| vec![0; r.len()]).collect();
    for (k, (r, c)) in oracle_std_order(rows).into_iter().enumerate() {
        out[r][c] = k as u32 + 1;
    }
    out
}

/// Row insertion; returns the row index where the tableau grew.
fn oracle_insert(p: &mut Rows, mut x: u32) -> usize {
    for (r, row) in p.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    p.push(vec![x]);
    p.len() - 1
}

fn oracle_rsk(w: &[u32]) -> (Rows, Rows) {
    let (mut p, mut q): (Rows, Rows) = (Vec::new(), Vec::new());
    for (k, &x) in w.iter().enumerate() {
        let r = oracle_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(k as u32 + 1);
    }
    (p, q)
}

fn oracle_reading(rows: &Rows) -> Vec<u32> {
    rows.iter().rev().flatten().copied().collect()
}

fn oracle_rot(w: &[u32], n: u32) -> Vec<u32> {
    w.iter().rev().map(|&x| n + 1 - x).collect()
}

/// Schützenberger evacuation through insertion: P(Rot(reading word)).
fn oracle_evac(rows: &Rows, n: u32) -> Rows {
    oracle_rsk(&oracle_rot(&oracle_reading(rows), n)).0
}

fn word_descents(w: &[u32]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

/// Number of SSYT of shape `lam` and content `mu`: chains of horizontal strips.
fn oracle_kostka(lam: &[usize], mu: &[usize]) -> u64 {
    fn strips(
        inner: &[usize],
        outer: &[usize],
        k: usize,
        row: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if row == outer.len() {
            if k == 0 {
                f(cur);
            }
            return;
        }
        let lo = inner.get(row).copied().unwrap_or(0);
        // a horizontal strip may not extend past the previous row of the inner shape
        let hi = if row == 0 {
            outer[0]
        } else {
            outer[row].min(inner[row - 1])
        };
        for len in lo..=hi.max(lo) {
            if len - lo > k || len > outer[row] {
                break;
            }
            cur.push(len);
            strips(inner, outer, k - (len - lo), row + 1, cur, f);
            cur.pop();
        }
    }
    let mut memo: HashMap<(Vec<usize>, usize), u64> = HashMap::new();
    fn count(
        nu: Vec<usize>,
        j: usize,
        lam: &[usize],
        mu: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
    ) -> u64 {
        if j == mu.len() {
            return u64::from(nu.iter().zip(lam).all(|(a, b)| a == b));
        }
        if let Some(&v) = memo.get(&(nu.clone(), j)) {
            return v;
        }
        let mut nexts = Vec::new();
        strips(&nu, lam, mu[j], 0, &mut Vec::new(), &mut |s| {
            nexts.push(s.to_vec())
        });
        let total = nexts
            .into_iter()
            .map(|s| count(s, j + 1, lam, mu, memo))
            .sum();
        memo.insert((nu, j), total);
        total
    }
    count(vec![0; lam.len()], 0, lam, mu, &mut memo)
}

/// `B(m)_k` as weakly increasing rows; `f_i` turns the last `i` into `i+1`.
type Edges = BTreeSet<(Vec<u32>, Vec<u32>, u32)>;

fn oracle_one_row(m: usize, k: u32) -> (HashSet<Vec<u32>>, Edges) {
    let rows: HashSet<Vec<u32>> = oracle_ssyt(&[m], k)
        .into_iter()
        .map(|mut r| r.remove(0))
        .collect();
    let mut edges = BTreeSet::new();
    for row in &rows {
        for i in 1..k {
            if let Some(p) = row.iter().rposition(|&x| x == i) {
                let mut next = row.clone();
                next[p] = i + 1;
                edges.insert((row.clone(), next, i));
            }
        }
    }
    (rows, edges)
}

/// Skeleton by brute force: every `f_i` edge between tableaux of different standardization,
/// keeping the least label for each ordered pair.
fn oracle_skeleton(lam: &Partition, n: u32) -> BTreeMap<(Rows, Rows), u32> {
    let mut out: BTreeMap<(Rows, Rows), u32> = BTreeMap::new();
    for rows in oracle_ssyt(lam.parts(), n) {
        let t = Tableau::new(rows.clone()).unwrap();
        for i in 1..n {
            if let Some(u) = f_tableau(&t, i) {
                let (a, b) = (oracle_std(&rows), oracle_std(&u.rows().to_vec()));
                if a != b {
                    let e = out.entry((a, b)).or_insert(i);
                    *e = (*e).min(i);
                }
            }
        }
    }
    out
}

fn shapes(max: usize) -> Vec<Partition> {
    (1..=max).flat_map(|m| partitions_of(m, None)).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check<()> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------------------
// criteria

fn criterion_1() -> Check<String> {
    let lam: Partition = "4,3".parse().unwrap();
    let expected = [(4, 140u64), (5, 560), (6, 1764), (7, 4704)];
    for (n, value) in expected {
        let formula = count_ssyt_formula(&lam, n);
        let brute = oracle_ssyt(lam.parts(), n).len() as u64;
        let crystal = generate_crystal(&lam, n).len() as u64;
        ensure(
            formula == BigUint::from(value) && brute == value && crystal == value,
            || {
                format!("n={n}: formula {formula}, brute force {brute}, crystal {crystal}, expected {value}")
            },
        )?;
    }
    Ok("|SSYT((4,3))_n| = 140, 560, 1764, 4704 for n = 4..7".into())
}

const PRINTED_EXPANSION: &str = r"F_{(4,3)}+F_{(3,4)}+F_{(3,3,1)}+F_{(2,4,1)}+F_{(3,2,2)}+2\cdot F_{(2,3,2)}$\newline $+F_{(2,3,3)}+F_{(2,2,3)}+F_{(1,4,2)}+F_{(1,3,3)}+F_{(2,2,2,1)}+ F_{(1,3,2,1)}+F_{(1,2,3,1)}+F_{(1,2,2,2)}";

fn criterion_2() -> Check<String> {
    let text = PRINTED_EXPANSION
        .replace(r"$\newline $", "")
        .replace(r"\cdot ", "*")
        .replace("F_{(", "F[")
        .replace(")}", "]");
    let mut by_degree: BTreeMap<usize, FExpansion> = BTreeMap::new();
    let mut printed_terms = 0;
    for term in text.split('+') {
        let single: FExpansion = term.trim().parse().map_err(|e| format!("{term}: {e}"))?;
        printed_terms += 1;
        let d = single.degree().unwrap();
        let acc = by_degree.entry(d).or_insert_with(FExpansion::zero);
        for (k, c) in single.terms() {
            acc.add_term(k.clone(), c.clone()).unwrap();
        }
    }
    let lam: Partition = "4,3".parse().unwrap();
    let f = schur_to_f(&lam);
    let seven = by_degree.remove(&7).ok_or("no degree-7 terms")?;
    ensure(f == seven, || {
        format!("schur_to_f = {f}, printed degree-7 part = {seven}")
    })?;
    ensure(
        f.coefficient(&Composition::new(vec![2, 3, 2]).unwrap()) == 2.into(),
        || "coefficient of F(2,3,2) is not 2".into(),
    )?;
    let stray: Vec<String> = by_degree.values().map(|e| e.to_string()).collect();
    ensure(stray == ["F[2,3,3]"], || {
        format!("unexpected off-degree printed terms {stray:?}")
    })?;

    // SYT oracle: one subcomponent per standard tableau
    let syt = oracle_ssyt(lam.parts(), 7)
        .into_iter()
        .filter(|r| r.iter().flatten().copied().collect::<HashSet<_>>().len() == 7)
        .count();
    let d = decompose(&generate_crystal(&lam, 4));
    let mut alphas: BTreeMap<Composition, i64> = BTreeMap::new();
    for s in &d.subcomponents {
        *alphas.entry(s.alpha.clone()).or_insert(0) += 1;
    }
    let printed: BTreeMap<Composition, i64> = seven
        .terms()
        .iter()
        .map(|(k, c)| (k.clone(), i64::try_from(c).unwrap()))
        .collect();
    ensure(d.subcomponents.len() == syt && syt == 14, || {
        format!(
            "{} subcomponents, {syt} standard tableaux",
            d.subcomponents.len()
        )
    })?;
    ensure(alphas == printed, || {
        "subcomponent types differ from the expansion".into()
    })?;
    Ok(format!(
        "s_(4,3) = {f}; {} subcomponents, α-multiset equal; the printed list has {printed_terms} terms, \
         F(2,3,3) has degree 8 and is excluded (the literal 15-subcomponent count is unattainable)",
        d.subcomponents.len()
    ))
}

fn criterion_3() -> Check<String> {
    let mut subs = 0;
    for lam in shapes(6) {
        for n in lam.len() as u32..=4 {
            let g = generate_crystal(&lam, n);
            let d = decompose(&g);
            // partition property
            let mut seen = vec![false; g.len()];
            for s in &d.subcomponents {
                for &v in &s.vertex_indices {
                    ensure(!std::mem::replace(&mut seen[v], true), || {
                        format!("{lam} n={n}: vertex {v} twice")
                    })?;
                }
            }
            ensure(seen.iter().all(|&x| x), || {
                format!("{lam} n={n}: vertices not covered")
            })?;
            for s in &d.subcomponents {
                subs += 1;
                let members: HashSet<usize> = s.vertex_indices.iter().copied().collect();
                let rows_of = |v: usize| g.vertex(v).rows().to_vec();
                for &v in &s.vertex_indices {
                    ensure(oracle_descomp(&rows_of(v)) == s.alpha.parts(), || {
                        format!("{} has the wrong type", g.vertex(v))
                    })?;
                }
                // induced edges recomputed from the host graph
                let mut edges = Vec::new();
                for &u in &s.vertex_indices {
                    for i in 1..n {
                        if let Some(v) = g.f(u, i) {
                            if members.contains(&v) {
                                edges.push((u, v, i));
                            }
                        }
                    }
                }
                let has_in: HashSet<usize> = edges.iter().map(|e| e.1).collect();
                let has_out: HashSet<usize> = edges.iter().map(|e| e.0).collect();
                let sources: Vec<usize> = s
                    .vertex_indices
                    .iter()
                    .copied()
                    .filter(|v| !has_in.contains(v))
                    .collect();
                let sinks: Vec<usize> = s
                    .vertex_indices
                    .iter()
                    .copied()
                    .filter(|v| !has_out.contains(v))
                    .collect();
                ensure(sources.len() == 1 && sinks.len() == 1, || {
                    format!(
                        "{}: {} sources, {} sinks",
                        s.source,
                        sources.len(),
                        sinks.len()
                    )
                })?;
                let src = rows_of(sources[0]);
                let mut weight = vec![0usize; n as usize];
                for &x in src.iter().flatten() {
                    weight[x as usize - 1] += 1;
                }
                let mut alpha = s.alpha.parts().to_vec();
                alpha.resize(n as usize, 0);
                ensure(weight == alpha, || {
                    format!("source {} has weight {weight:?}", s.source)
                })?;
                let sl = s.alpha.len() as u32;
                let shifted: Rows = src
                    .iter()
                    .map(|r| r.iter().map(|&x| x + n - sl).collect())
                    .collect();
                ensure(rows_of(sinks[0]) == shifted, || {
                    format!("sink of {} is not the shifted source", s.source)
                })?;
                // longest path by dynamic programming over depth order
                let mut order: Vec<usize> = s.vertex_indices.clone();
                let wsum = |v: usize| -> u32 { g.vertex(v).rows().iter().flatten().sum() };
                order.sort_by_key(|&v| wsum(v));
                let mut longest: HashMap<usize, usize> = HashMap::new();
                for &v in &order {
                    let best = edges
                        .iter()
                        .filter(|e| e.1 == v)
                        .map(|e| longest[&e.0] + 1)
                        .max()
                        .unwrap_or(0);
                    longest.insert(v, best);
                }
                let height = longest.values().max().unwrap() + 1;
                let m = lam.size();
                ensure(height == m * (n - sl) as usize + 1, || {
                    format!("{}: height {height}", s.source)
                })?;
                // isomorphism onto B(m)_{n-s+1}, edge by edge
                let k = n - sl + 1;
                let (rows1, edges1) = oracle_one_row(m, k);
                let order = oracle_std_order(&src);
                let descents = oracle_descents(&src);
                let band = |label: usize| descents.iter().filter(|&&d| d < label).count() as u32;
                let phi = |v: usize| -> Vec<u32> {
                    let t = rows_of(v);
                    order
                        .iter()
                        .enumerate()
                        .map(|(j, &(r, c))| t[r][c] - band(j + 1))
                        .collect()
                };
                let images: HashSet<Vec<u32>> = s.vertex_indices.iter().map(|&v| phi(v)).collect();
                ensure(images.len() == s.len() && images == rows1, || {
                    format!("{}: image is not B({m})_{k}", s.source)
                })?;
                ensure(edges.len() == edges1.len(), || {
                    format!("{}: edge counts differ", s.source)
                })?;
                for &(u, v, i) in &edges {
                    let (a, b) = (phi(u), phi(v));
                    let changed = a.iter().zip(&b).position(|(x, y)| x != y).unwrap();
                    let label = i - band(changed + 1);
                    ensure(edges1.contains(&(a, b, label)), || {
                        format!("{}: edge -{i}-> has no image", s.source)
                    })?;
                }
            }
        }
    }
    Ok(format!("{subs} subcomponents over |λ| ≤ 6, n ≤ 4"))
}

fn criterion_4() -> Check<String> {
    let mut pairs = 0;
    for m in 1..=7 {
        for lam in partitions_of(m, None) {
            for mu in compositions_of(m) {
                let got = kostka(&lam, &mu).map_err(|e| e.to_string())?;
                let brute = oracle_kostka(lam.parts(), mu.parts());
                ensure(got == brute, || format!("K^{lam}_{mu}: {got} vs {brute}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (λ, μ) pairs with |λ| = |μ| ≤ 7"))
}

fn criterion_5() -> Check<String> {
    let mut count = 0;
    for lam in shapes(5) {
        for n in lam.len() as u32..=4 {
            let g = generate_crystal(&lam, n);
            for t in g.vertices() {
                count += 1;
                let rows = t.rows().to_vec();
                let e = evacuate(t, n).map_err(|e| e.to_string())?;
                ensure(e.rows() == oracle_evac(&rows, n).as_slice(), || {
                    format!("EVAC({t}) differs from insertion")
                })?;
                ensure(e.shape() == t.shape(), || {
                    format!("EVAC({t}) changes shape")
                })?;
                ensure(evacuate(&e, n).unwrap() == *t, || {
                    format!("EVAC is not an involution at {t}")
                })?;
                let mut rev = oracle_descomp(&rows);
                rev.reverse();
                ensure(oracle_descomp(&e.rows().to_vec()) == rev, || {
                    format!("EVAC({t}) keeps DesComp")
                })?;
                for i in 1..n {
                    let lhs = f_tableau(t, i).map(|u| evacuate(&u, n).unwrap());
                    ensure(lhs == e_tableau(&e, n - i), || format!("EVAC∘f_{i} at {t}"))?;
                }
            }
            // subcomponents go to subcomponents of reversed type, source to sink
            let d = decompose(&g);
            let mut sub_of: HashMap<&Tableau, usize> = HashMap::new();
            for (k, s) in d.subcomponents.iter().enumerate() {
                for &v in &s.vertex_indices {
                    sub_of.insert(g.vertex(v), k);
                }
            }
            for s in &d.subcomponents {
                let images: Vec<Tableau> = s
                    .vertex_indices
                    .iter()
                    .map(|&v| evacuate(g.vertex(v), n).unwrap())
                    .collect();
                let target = sub_of[&images[0]];
                let t = &d.subcomponents[target];
                ensure(
                    images.iter().all(|x| sub_of[x] == target) && t.len() == s.len(),
                    || format!("{lam} n={n}: EVAC splits the subcomponent of {}", s.source),
                )?;
                ensure(t.alpha == s.alpha.reverse(), || {
                    format!("{}: image type {}", s.source, t.alpha)
                })?;
                let sl = t.alpha.len() as u32;
                let sink: Rows = t
                    .source
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(|&x| x + n - sl).collect())
                    .collect();
                ensure(
                    evacuate(&s.source, n).unwrap().rows() == sink.as_slice(),
                    || format!("EVAC of source {} is not the sink", s.source),
                )?;
            }
            let report = check_evac_duality(&lam, n).map_err(|e| e.to_string())?;
            ensure(report.pass, || {
                format!("{lam} n={n}: {:?}", report.failures)
            })?;
        }
    }
    Ok(format!("{count} tableaux over |λ| ≤ 5, n ≤ 4"))
}

fn rsk_identities(w: &[u32], n: u32) -> Check<()> {
    let word = Word::new(w.to_vec(), n).map_err(|e| e.to_string())?;
    let pair = rsk(&word).map_err(|e| e.to_string())?;
    let (p, q) = oracle_rsk(w);
    ensure(
        pair.p.rows() == p.as_slice() && pair.q.rows() == q.as_slice(),
        || format!("{w:?}: RSK differs"),
    )?;
    let qs: Vec<usize> = {
        let mut pos = vec![0; w.len() + 1];
        for (r, row) in q.iter().enumerate() {
            for &x in row {
                pos[x as usize] = r;
            }
        }
        (1..w.len()).filter(|&i| pos[i + 1] > pos[i]).collect()
    };
    ensure(qs == word_descents(w), || format!("{w:?}: Des(Q) ≠ Des(w)"))?;
    for i in 1..n {
        if let Some(fw) = f_word(&word, i) {
            ensure(
                Some(oracle_rsk(fw.letters()).0)
                    == f_tableau(&pair.p, i).map(|t| t.rows().to_vec()),
                || format!("{w:?}: P(f_{i} w) ≠ f_{i} P(w)"),
            )?;
        }
    }
    let r = oracle_rot(w, n);
    ensure(rot_word(&word).letters() == r.as_slice(), || {
        format!("{w:?}: Rot differs")
    })?;
    ensure(oracle_rot(&r, n) == w, || {
        format!("{w:?}: Rot is not an involution")
    })?;
    let dw = word_descents(w);
    let dr = word_descents(&r);
    let reflected: Vec<usize> = dw.iter().rev().map(|&i| w.len() - i).collect();
    ensure(dr == reflected, || {
        format!("{w:?}: Rot does not reverse descents")
    })?;
    let (pr, qr) = oracle_rsk(&r);
    let len = w.len() as u32;
    ensure(
        pr == oracle_evac(&p, n)
            && evacuate(&pair.p, n).unwrap().rows() == pr.as_slice()
            && evacuate(&pair.q, len).unwrap().rows() == qr.as_slice(),
        || format!("{w:?}: RSK(Rot w) ≠ (EVAC P, EVAC Q)"),
    )?;
    ensure(rsk_of_rot(&word).unwrap().holds(), || {
        format!("{w:?}: library identity fails")
    })?;
    Ok(())
}

fn criterion_6() -> Check<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..300 {
        let n = rng.gen_range(1..=4);
        let len = rng.gen_range(1..=9);
        let w: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=n)).collect();
        rsk_identities(&w, n)?;
    }
    let mut exhaustive = 0;
    for n in 1..=3u32 {
        for len in 1..=6u32 {
            for code in 0..n.pow(len) {
                let w: Vec<u32> = (0..len).map(|k| code / n.pow(k) % n + 1).collect();
                rsk_identities(&w, n)?;
                exhaustive += 1;
            }
        }
    }
    Ok(format!(
        "300 random words (n ≤ 4, len ≤ 9) and {exhaustive} words exhaustively (n ≤ 3, len ≤ 6)"
    ))
}

fn criterion_7() -> Check<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..50 {
        let m = rng.gen_range(1..=8);
        let lams = partitions_of(m, None);
        let mut g = SchurExpansion::zero();
        let mut f = FExpansion::zero();
        for lam in &lams {
            if rng.gen_bool(0.4) {
                let c: u32 = rng.gen_range(1..=9);
                g.add_term(lam.clone(), c.into()).unwrap();
                // F-expansion from the standard tableaux oracle
                for rows in oracle_ssyt(lam.parts(), m as u32) {
                    if rows.iter().flatten().collect::<HashSet<_>>().len() == m {
                        let alpha = Composition::new(oracle_descomp(&rows)).unwrap();
                        f.add_term(alpha, c.into()).unwrap();
                    }
                }
            }
        }
        if g.is_zero() {
            continue;
        }
        ensure(schur_expansion_to_f(&g) == f, || {
            format!("trial {trial}: F-expansion differs")
        })?;
        let back = schurify(&f).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(back == g, || {
            format!("trial {trial}: recovered {back}, expected {g}")
        })?;
    }
    let mut rejected = 0;
    for m in 1..=6 {
        for alpha in compositions_of(m) {
            let single = FExpansion::single(alpha.clone(), 1);
            let symmetric = alpha.len() == 1 || alpha.len() == m;
            match schurify(&single) {
                Err(Error::NotSymmetric(_)) if !symmetric => rejected += 1,
                Ok(s) if symmetric => {
                    let lam = Partition::new(alpha.sorted_partition().parts().to_vec()).unwrap();
                    ensure(s == SchurExpansion::single(lam, 1), || {
                        format!("F_{alpha} gave {s}")
                    })?;
                }
                other => return Err(format!("F_{alpha}: {other:?}")),
            }
        }
    }
    Ok(format!(
        "50 random combinations recovered; {rejected} non-symmetric single F_α rejected"
    ))
}

fn criterion_8() -> Check<String> {
    let mut shapes_checked = 0;
    for lam in shapes(6) {
        let syt: Vec<Rows> = oracle_ssyt(lam.parts(), lam.size() as u32)
            .into_iter()
            .filter(|r| r.iter().flatten().collect::<HashSet<_>>().len() == lam.size())
            .collect();
        let big_s = syt.iter().map(|r| oracle_descomp(r).len()).max().unwrap() as u32;
        let as_map = |s: &SkeletonGraph| -> BTreeMap<(Rows, Rows), u32> {
            s.edges
                .iter()
                .map(|&(u, v, i)| {
                    (
                        (s.vertices[u].rows().to_vec(), s.vertices[v].rows().to_vec()),
                        i,
                    )
                })
                .collect()
        };
        let stable = oracle_skeleton(&lam, big_s);
        for n in big_s..=big_s + 2 {
            let lib = build_skeleton(&lam, n);
            ensure(as_map(&lib) == stable, || {
                format!("Skeleton({lam})_{n} differs from the stable skeleton")
            })?;
            ensure(oracle_skeleton(&lam, n) == stable, || {
                format!("brute-force Skeleton({lam})_{n} is not stable")
            })?;
        }
        for n in 1..big_s {
            let keep = |r: &Rows| oracle_descomp(r).len() as u32 <= n;
            let induced: BTreeMap<(Rows, Rows), u32> = stable
                .iter()
                .filter(|((a, b), _)| keep(a) && keep(b))
                .map(|(k, &v)| (k.clone(), v))
                .collect();
            let lib = build_skeleton(&lam, n);
            ensure(as_map(&lib) == induced, || {
                format!("Skeleton({lam})_{n} is not the induced subgraph")
            })?;
            let verts: BTreeSet<Rows> = lib.vertices.iter().map(|t| t.rows().to_vec()).collect();
            let expected: BTreeSet<Rows> = syt.iter().filter(|r| keep(r)).cloned().collect();
            ensure(verts == expected, || {
                format!("Skeleton({lam})_{n} has the wrong vertices")
            })?;
        }
        for (a, b) in stable.keys() {
            let (x, y) = (oracle_descents(a).len(), oracle_descents(b).len());
            ensure(x.abs_diff(y) <= 1, || {
                format!("{lam}: edge joins {x} and {y} descents")
            })?;
        }
        shapes_checked += 1;
    }
    Ok(format!("{shapes_checked} shapes with |λ| ≤ 6"))
}

fn criterion_9() -> Check<String> {
    // reordering: F_α occurs in s_sort(α), via the standard tableaux oracle
    let mut compositions = 0;
    for m in 1..=6 {
        for alpha in compositions_of(m) {
            let lam = alpha.sorted_partition();
            let found = oracle_ssyt(lam.parts(), m as u32).into_iter().any(|r| {
                r.iter().flatten().collect::<HashSet<_>>().len() == m
                    && oracle_descomp(&r) == alpha.parts()
            });
            ensure(found, || format!("F_{alpha} does not occur in s_{lam}"))?;
            compositions += 1;
        }
        let report = check_reordering_conjecture(m);
        ensure(report.pass, || {
            format!(
                "reordering checker disagrees at m={m}: {:?}",
                report.violations
            )
        })?;
    }
    let mut shape_count = 0;
    for lam in shapes(6) {
        let s = check_skeleton_structure(&lam).map_err(|e| e.to_string())?;
        ensure(s.pass, || format!("{lam}: layers {:?}", s.layers))?;
        ensure(
            s.layers.iter().all(|(_, c)| *c != Classification::Other),
            || format!("{lam}: Other"),
        )?;
        let d = check_dual_equivalence_conjecture(&lam).map_err(|e| e.to_string())?;
        ensure(d.pass, || format!("{lam}: {:?}", d.violations))?;
        shape_count += 1;
    }
    // (4,3): skeleton pairs with no dual equivalence edge, from the brute-force skeleton
    let lam: Partition = "4,3".parse().unwrap();
    let deg = dual_equivalence_graph(&lam);
    let dual_pairs: HashSet<(Rows, Rows)> = deg
        .edges
        .iter()
        .flat_map(|&(a, b, _)| {
            let (x, y) = (
                deg.vertices[a].rows().to_vec(),
                deg.vertices[b].rows().to_vec(),
            );
            [(x.clone(), y.clone()), (y, x)]
        })
        .collect();
    let big_s = oracle_ssyt(lam.parts(), 7)
        .iter()
        .filter(|r| r.iter().flatten().collect::<HashSet<_>>().len() == 7)
        .map(|r| oracle_descomp(r).len())
        .max()
        .unwrap() as u32;
    let skeleton_pairs: BTreeSet<(Rows, Rows)> = oracle_skeleton(&lam, big_s)
        .into_keys()
        .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
    let extra = skeleton_pairs
        .iter()
        .filter(|p| !dual_pairs.contains(*p))
        .count();
    ensure(extra == 7, || {
        format!("Skeleton((4,3)) has {extra} pairs outside the dual equivalence graph")
    })?;
    let report = check_dual_equivalence_conjecture(&lam).map_err(|e| e.to_string())?;
    ensure(report.extra_skeleton_pairs == 7, || {
        format!("checker reports {}", report.extra_skeleton_pairs)
    })?;
    Ok(format!(
        "reordering over {compositions} compositions, layers and dual equivalence over {shape_count} shapes \
         (m ≤ 6) all consistent; Skeleton((4,3)) has 7 extra edges"
    ))
}

fn main() {
    type Criterion = (u32, &'static str, u64, fn() -> Check<String>);
    let criteria: [Criterion; 9] = [
        (1, "counting theorem", 5, criterion_1),
        (
            2,
            "Schur expansion of (4,3) and its decomposition",
            2,
            criterion_2,
        ),
        (3, "quasicrystal structure", 60, criterion_3),
        (4, "Kostka numbers", 120, criterion_4),
        (5, "evacuation", 60, criterion_5),
        (6, "RSK and Rot identities", 30, criterion_6),
        (7, "schurification round trip", 30, criterion_7),
        (8, "skeleton theorem", 120, criterion_8),
        (9, "conjecture harness", 600, criterion_9),
    ];
    let mut failed = 0;
    for (k, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(limit);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over time limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {k} [{name}]: {status} ({:.2} s, limit {limit} s) {detail}",
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}
