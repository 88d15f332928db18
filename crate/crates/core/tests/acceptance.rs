//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Expected values come from oracles written here: arrow counting, the
//! alternate form of matrix mutation, fraction-free integer rank, and the
//! dimension formulas of reflection functors. A criterion that is known to
//! be unattainable as stated prints FAIL with its reason but does not fail
//! the run; any other failure does.

use std::collections::BTreeMap;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use qpmut::decorated::{is_isomorphic, mutate_decorated, DecoratedRep, Representation, ISO_TRIALS};
use qpmut::format::{qp_to_json, to_string};
use qpmut::jacobian::{jacobian_dims, Qp};
use qpmut::linalg::{rat, RatMatrix, Rational};
use qpmut::mutation::{admissible_vertices, check_involution, mutate_qp, premutate, random_potential};
use qpmut::pathalg::{cyclic_classes, Potential};
use qpmut::quiver::{matrix_mutate, mutate_quiver, to_matrix, Quiver};
use qpmut::reduction::{split, verify_split};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Outcome {
    Pass(String),
    Fail(String),
    /// The criterion cannot hold as stated; the reason is recorded.
    Unattainable(String),
}

use Outcome::*;

// ---------------------------------------------------------------- oracles

/// `c[t][h]` = number of arrows `t -> h`, counted directly.
fn counts(q: &Quiver) -> Vec<Vec<i64>> {
    let n = q.num_vertices();
    let mut c = vec![vec![0; n]; n];
    for a in q.arrows() {
        c[a.tail][a.head] += 1;
    }
    c
}

/// `b[i][j] = #{j -> i} - #{i -> j}`.
fn exchange(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    (0..n).map(|i| (0..n).map(|j| c[j][i] - c[i][j]).collect()).collect()
}

/// Matrix mutation in the form `b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2`.
fn mutate_matrix(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == k || j == k {
                        -b[i][j]
                    } else {
                        b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
                    }
                })
                .collect()
        })
        .collect()
}

/// Rank by fraction-free (Bareiss) elimination.
fn int_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let (mut r, mut prev) = (0, 1i128);
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn to_int(q: &Rational) -> i128 {
    q.to_string().parse().expect("integer coefficient")
}

fn matrix_ints(m: &RatMatrix) -> Vec<Vec<i128>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(to_int).collect()).collect()
}

/// Rank of the quadratic part, block by block over unordered vertex
/// pairs: rows are arrows `i -> j`, columns arrows `j -> i`, `i < j`.
fn quadratic_rank(s: &Potential) -> usize {
    let q = s.quiver();
    let mut blocks: BTreeMap<(usize, usize), BTreeMap<(usize, usize), i128>> = BTreeMap::new();
    for (p, c) in s.terms() {
        if p.degree() != 2 {
            continue;
        }
        let (u, v) = (p.arrows()[0], p.arrows()[1]);
        let (x, y) = if q.arrow(u).tail < q.arrow(u).head { (u, v) } else { (v, u) };
        let key = (q.arrow(x).tail, q.arrow(x).head);
        *blocks.entry(key).or_default().entry((x, y)).or_insert(0) += to_int(c);
    }
    blocks
        .into_iter()
        .map(|((i, j), entries)| {
            let xs: Vec<usize> = (0..q.num_arrows()).filter(|&a| q.arrow(a).tail == i && q.arrow(a).head == j).collect();
            let ys: Vec<usize> = (0..q.num_arrows()).filter(|&a| q.arrow(a).tail == j && q.arrow(a).head == i).collect();
            let m = xs.iter().map(|x| ys.iter().map(|y| entries.get(&(*x, *y)).copied().unwrap_or(0)).collect()).collect();
            int_rank(m)
        })
        .sum()
}

// ---------------------------------------------------------------- corpora

/// Every loop-free 2-acyclic quiver on 1-4 vertices with at most two
/// parallel arrows between any two vertices.
fn exhaustive_quivers() -> Vec<Quiver> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        let vs: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let total = 5usize.pow(pairs.len() as u32);
        for code in 0..total {
            let mut arrows = Vec::new();
            let mut rest = code;
            for &(i, j) in &pairs {
                let choice = rest % 5;
                rest /= 5;
                let (t, h, m) = match choice {
                    0 => continue,
                    1 | 2 => (i, j, choice),
                    _ => (j, i, choice - 2),
                };
                for r in 0..m {
                    arrows.push((format!("x{}{}{r}", t + 1, h + 1), vs[t].clone(), vs[h].clone()));
                }
            }
            out.push(Quiver::new(vs.clone(), arrows).expect("valid quiver"));
        }
    }
    out
}

/// Random 2-acyclic quivers on 3-4 vertices with at most two parallel
/// arrows, at most seven arrows and at least one oriented 3-cycle.
fn random_quivers(count: usize, seed: u64, max_mult: usize) -> Vec<Arc<Quiver>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(3..=4);
        let vs: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
        let mut arrows = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let m = rng.gen_range(0..=max_mult);
                let (t, h) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
                for r in 0..m {
                    arrows.push((format!("x{}{}{r}", t + 1, h + 1), vs[t].clone(), vs[h].clone()));
                }
            }
        }
        if arrows.len() > 7 {
            continue;
        }
        let q = Arc::new(Quiver::new(vs, arrows).expect("valid quiver"));
        if cyclic_classes(&q, 3).is_empty() {
            continue;
        }
        out.push(q);
    }
    out
}

/// Generic QPs for the mutation suites, exact modulo `m^order`.
fn generic_corpus(order: usize) -> Vec<Qp> {
    random_quivers(50, 1, 2)
        .iter()
        .enumerate()
        .map(|(i, q)| Qp::exact(random_potential(q, 7, i as u64 + 1).lift_order(order)))
        .collect()
}

fn triangle() -> Arc<Quiver> {
    Arc::new(Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]).unwrap())
}

fn cycles(q: &Arc<Quiver>, order: usize, terms: &[(i64, &[&str])]) -> Qp {
    let t: Vec<(Rational, &[&str])> = terms.iter().map(|(c, p)| (rat(*c), *p)).collect();
    Qp::exact(Potential::from_cycles(q.clone(), order, &t).unwrap())
}

// ---------------------------------------------------------------- criteria

fn quiver_involution() -> Outcome {
    let qs = exhaustive_quivers();
    let mut checks = 0;
    for q in &qs {
        for k in q.vertices() {
            let twice = mutate_quiver(&mutate_quiver(q, k).unwrap(), k).unwrap();
            checks += 1;
            if twice.vertices() != q.vertices() || counts(&twice) != counts(q) {
                return Fail(format!("μ_{k}² differs on {:?}", q.arrows()));
            }
        }
    }
    Pass(format!("{} quivers, {checks} vertex checks", qs.len()))
}

fn matrix_oracle() -> Outcome {
    let qs = exhaustive_quivers();
    let mut checks = 0;
    for q in &qs {
        let b = exchange(&counts(q));
        for (k, v) in q.vertices().iter().enumerate() {
            let mu = mutate_quiver(q, v).unwrap();
            let expected = mutate_matrix(&b, k);
            checks += 1;
            if exchange(&counts(&mu)) != expected {
                return Fail(format!("matrix of μ_{v} differs on {:?}", q.arrows()));
            }
            if to_matrix(&mu).unwrap() != matrix_mutate(&to_matrix(q).unwrap(), v).unwrap() {
                return Fail(format!("library matrix mutation differs at {v} on {:?}", q.arrows()));
            }
        }
    }
    Pass(format!("{} quivers, {checks} vertex checks", qs.len()))
}

fn trivial_jacobian() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut cases = 0;
    for m in 1..=3usize {
        let vs: Vec<String> = (1..=2 * m).map(|v| v.to_string()).collect();
        let mut arrows = Vec::new();
        for i in 0..m {
            arrows.push((format!("x{i}"), vs[2 * i].clone(), vs[2 * i + 1].clone()));
            arrows.push((format!("y{i}"), vs[2 * i + 1].clone(), vs[2 * i].clone()));
        }
        let q = Arc::new(Quiver::new(vs, arrows).unwrap());
        for _ in 0..5 {
            let mut s = Potential::zero(q.clone(), 6);
            for i in 0..m {
                let (x, y) = (format!("x{i}"), format!("y{i}"));
                let c = rat(rng.gen_range(1..=50) * if rng.gen_bool(0.5) { 1 } else { -1 });
                let d = rat(rng.gen_range(-50..=50));
                let t = Potential::from_cycles(
                    q.clone(),
                    6,
                    &[(c, &[y.as_str(), x.as_str()][..]), (d, &[y.as_str(), x.as_str(), y.as_str(), x.as_str()][..])],
                )
                .unwrap();
                s = s.add(&t).unwrap();
            }
            let dims = jacobian_dims(&Qp::exact(s)).dims;
            cases += 1;
            if dims.iter().sum::<usize>() != 2 * m || dims[0] != 2 * m || dims[1..].iter().any(|&d| d != 0) {
                return Fail(format!("{m} 2-cycles: dims {dims:?}"));
            }
        }
    }
    Pass(format!("{cases} QPs on 1-3 disjoint 2-cycles at N = 6"))
}

fn splitting_corpus() -> Vec<(String, Qp)> {
    let order = 8;
    let mut corpus = Vec::new();
    let c2 = Arc::new(Quiver::build(&["1", "2"], &[("x", "1", "2"), ("y", "2", "1")]).unwrap());
    corpus.push(("2-cycle".into(), cycles(&c2, order, &[(1, &["y", "x"])])));
    corpus.push(("scaled 2-cycle with tail".into(), cycles(&c2, order, &[(3, &["y", "x"]), (1, &["y", "x", "y", "x"])])));
    let c22 = Arc::new(
        Quiver::build(&["1", "2"], &[("x1", "1", "2"), ("x2", "1", "2"), ("y1", "2", "1"), ("y2", "2", "1")]).unwrap(),
    );
    corpus.push((
        "two mixed 2-cycles".into(),
        cycles(&c22, order, &[(1, &["y1", "x1"]), (1, &["y2", "x2"]), (2, &["y1", "x2"]), (1, &["y1", "x1", "y2", "x2"])]),
    ));
    let c21 = Arc::new(Quiver::build(&["1", "2"], &[("x1", "1", "2"), ("x2", "1", "2"), ("y", "2", "1")]).unwrap());
    corpus.push((
        "degenerate pairing".into(),
        cycles(&c21, order, &[(1, &["y", "x1"]), (1, &["y", "x2", "y", "x1"]), (-2, &["y", "x2", "y", "x2"])]),
    ));
    let tu = Arc::new(
        Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("u", "1", "3")]).unwrap(),
    );
    corpus.push((
        "triangle with a chord".into(),
        cycles(&tu, order, &[(2, &["c", "u"]), (1, &["c", "b", "a"]), (-3, &["c", "u", "c", "b", "a"])]),
    ));
    let tri = Qp::exact(Potential::single(triangle(), order, &["c", "b", "a"]).unwrap());
    corpus.push(("premutated triangle".into(), premutate(&tri, "2").unwrap().qp_tilde));

    // premutations of generic QPs
    let mut premutated = 0;
    for (i, q) in random_quivers(20, 5, 1).iter().enumerate() {
        let qp = Qp::exact(random_potential(q, 5, i as u64).lift_order(order));
        for k in admissible_vertices(q) {
            let t = premutate(&qp, &k).unwrap().qp_tilde;
            if quadratic_rank(t.potential()) > 0 && premutated < 8 {
                corpus.push((format!("premutation {i} at {k}"), t));
                premutated += 1;
                break;
            }
        }
    }

    // generic potentials on quivers with planted 2-cycles
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (i, base) in random_quivers(8, 9, 1).iter().enumerate() {
        let n = base.num_vertices();
        let mut arrows: Vec<(String, String, String)> = base
            .arrows()
            .iter()
            .map(|a| (a.id.clone(), base.vertices()[a.tail].clone(), base.vertices()[a.head].clone()))
            .collect();
        let mut planted = 0;
        for s in 0..n {
            for t in s + 1..n {
                if base.multiplicity(s, t) + base.multiplicity(t, s) == 0 && (planted == 0 || rng.gen_bool(0.5)) {
                    arrows.push((format!("p{s}{t}"), base.vertices()[s].clone(), base.vertices()[t].clone()));
                    arrows.push((format!("q{t}{s}"), base.vertices()[t].clone(), base.vertices()[s].clone()));
                    planted += 1;
                }
            }
        }
        let q = Arc::new(Quiver::new(base.vertices().to_vec(), arrows).unwrap());
        corpus.push((format!("planted {i}"), Qp::exact(random_potential(&q, 5, 100 + i as u64).lift_order(order))));
    }
    corpus
}

fn splitting_theorem() -> Outcome {
    let corpus = splitting_corpus();
    if corpus.len() < 20 {
        return Fail(format!("corpus has only {} QPs", corpus.len()));
    }
    for (name, qp) in &corpus {
        let sr = split(qp);
        if !verify_split(qp, &sr) {
            return Fail(format!("{name}: witness does not verify"));
        }
        if sr.reduced.potential().element().valuation().is_some_and(|v| v < 3) {
            return Fail(format!("{name}: reduced potential has terms below degree 3"));
        }
        let rank = quadratic_rank(qp.potential());
        if sr.trivial_pairs.len() != rank {
            return Fail(format!("{name}: {} trivial pairs, quadratic rank {rank}", sr.trivial_pairs.len()));
        }
        let (a, b) = (jacobian_dims(qp), jacobian_dims(&sr.reduced));
        let h = a.trusted_below_degree.min(b.trusted_below_degree);
        if a.dims[..h] != b.dims[..h] {
            return Fail(format!("{name}: dims {:?} vs reduced {:?}", a.dims, b.dims));
        }
    }
    Pass(format!("{} QPs modulo m^8", corpus.len()))
}

fn triangle_example() -> Outcome {
    let qp = Qp::exact(Potential::single(triangle(), 8, &["c", "b", "a"]).unwrap());
    let mu = mutate_qp(&qp, "2").unwrap();
    let arrows: Vec<(String, String, String)> = mu
        .quiver()
        .arrows()
        .iter()
        .map(|a| (a.id.clone(), mu.quiver().vertices()[a.tail].clone(), mu.quiver().vertices()[a.head].clone()))
        .collect();
    let expected = vec![("a*".to_string(), "2".to_string(), "1".to_string()), ("b*".into(), "3".into(), "2".into())];
    if arrows != expected || !mu.potential().is_zero() {
        return Fail(format!("μ_2 gave {arrows:?} with S = {}", mu.potential()));
    }
    let r = check_involution(&qp, "2").unwrap();
    if !r.passed() {
        return Fail(format!("involution report {r:?}"));
    }
    Pass("μ_2 = ({a*: 2->1, b*: 3->2}, 0), all three invariants match".into())
}

fn theorem_two() -> Outcome {
    let corpus = generic_corpus(8);
    let (mut checks, mut structural, mut profiles) = (0, Vec::new(), 0);
    for (i, qp) in corpus.iter().enumerate() {
        for k in admissible_vertices(qp.quiver()) {
            checks += 1;
            match check_involution(qp, &k) {
                Ok(r) => {
                    if !(r.arrows_match && r.dims_match) {
                        structural.push(format!("QP {i} at {k}"));
                    }
                    if !r.profile_match {
                        profiles += 1;
                    }
                }
                Err(e) => structural.push(format!("QP {i} at {k}: {e}")),
            }
        }
    }
    if !structural.is_empty() {
        return Fail(format!("{} of {checks} checks fail on arrows or dims: {:?}", structural.len(), structural));
    }
    let summary = format!("{} QPs, {checks} checks: arrows and Jacobian dims match in all", corpus.len());
    if profiles > 0 {
        return Unattainable(format!(
            "{summary}; degree profiles differ in {profiles} checks because the profile is not invariant under \
             right-equivalence (terms in the Jacobian ideal can be removed)"
        ));
    }
    Pass(summary)
}

fn counterexample_path() -> PathBuf {
    let dir = option_env!("CARGO_TARGET_TMPDIR").map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    dir.join("genericity_counterexample.json")
}

fn walk(qp: &Qp, depth: usize, seq: &mut Vec<String>, visited: &mut usize) -> Result<(), String> {
    if depth == 0 {
        return Ok(());
    }
    for k in qp.quiver().vertices().to_vec() {
        seq.push(k.clone());
        let next = mutate_qp(qp, &k).map_err(|e| format!("{seq:?}: {e}"))?;
        *visited += 1;
        if !next.quiver().is_two_acyclic() {
            return Err(format!("{seq:?}: reduced quiver has a 2-cycle"));
        }
        walk(&next, depth - 1, seq, visited)?;
        seq.pop();
    }
    Ok(())
}

fn genericity() -> Outcome {
    // exact order 9 is still known modulo m^3 after four mutations, which
    // fixes the quadratic part and so the reduced quiver
    let corpus = generic_corpus(9);
    let mut visited = 0;
    for (i, qp) in corpus.iter().enumerate() {
        let mut seq = Vec::new();
        if let Err(reason) = walk(qp, 4, &mut seq, &mut visited) {
            let path = counterexample_path();
            let record = serde_json::json!({ "qp": qp_to_json(qp), "sequence": seq, "reason": reason });
            let written = std::fs::write(&path, to_string(&record)).is_ok();
            return Fail(format!("QP {i}: {reason}; counterexample {} {}", if written { "in" } else { "not written to" }, path.display()));
        }
    }
    Pass(format!("{} QPs, {visited} mutations along all sequences of length at most 4", corpus.len()))
}

/// Random quiver where `k` (vertex 0) is a sink or a source.
fn random_reflection_case(rng: &mut ChaCha8Rng, sink: bool) -> DecoratedRep {
    let n = rng.gen_range(2..=4);
    let vs: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    let mut arrows = Vec::new();
    for v in 1..n {
        for r in 0..rng.gen_range(0..=2) {
            let (t, h) = if sink { (v, 0) } else { (0, v) };
            arrows.push((format!("k{v}{r}"), vs[t].clone(), vs[h].clone()));
        }
        for w in v + 1..n {
            if rng.gen_bool(0.5) {
                let (t, h) = if rng.gen_bool(0.5) { (v, w) } else { (w, v) };
                arrows.push((format!("o{v}{w}"), vs[t].clone(), vs[h].clone()));
            }
        }
    }
    let q = Arc::new(Quiver::new(vs, arrows).unwrap());
    let dims: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| RatMatrix::from_fn(dims[a.head], dims[a.tail], |_, _| rat(rng.gen_range(-2..=2))))
        .collect();
    let decoration = (0..n).map(|_| rng.gen_range(0..=2)).collect();
    DecoratedRep::new(Representation::new(q, dims, maps).unwrap(), decoration).unwrap()
}

fn decorated_reflection() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cases = 120;
    for case in 0..cases {
        let sink = case % 2 == 0;
        let dm = random_reflection_case(&mut rng, sink);
        let q = dm.quiver().clone();
        let at_k: Vec<usize> = (0..q.num_arrows()).filter(|&a| if sink { q.arrow(a).head == 0 } else { q.arrow(a).tail == 0 }).collect();
        // α = [M(a_1) | M(a_2) | ...] at a sink, β = [M(b_1); M(b_2); ...] at a source
        let blocks: Vec<Vec<Vec<i128>>> = at_k.iter().map(|&a| matrix_ints(&dm.rep.maps()[a])).collect();
        let dk = dm.rep.dims()[0];
        let other: usize = at_k.iter().map(|&a| dm.rep.dims()[if sink { q.arrow(a).tail } else { q.arrow(a).head }]).sum();
        let assembled: Vec<Vec<i128>> = if sink {
            (0..dk).map(|r| blocks.iter().flat_map(|b| b[r].clone()).collect()).collect()
        } else {
            blocks.into_iter().flatten().collect()
        };
        let rank = int_rank(assembled);
        let once = mutate_decorated(&dm, "1").unwrap();
        let expect_m = other - rank + dm.decoration[0];
        let expect_v = dk - rank;
        if once.rep.dims()[0] != expect_m || once.decoration[0] != expect_v {
            return Fail(format!(
                "case {case}: got M({}) V({}), expected M({expect_m}) V({expect_v})",
                once.rep.dims()[0],
                once.decoration[0]
            ));
        }
        if once.rep.dims()[1..] != dm.rep.dims()[1..] || once.decoration[1..] != dm.decoration[1..] {
            return Fail(format!("case {case}: spaces away from the reflected vertex changed"));
        }
        let twice = mutate_decorated(&once, "1").unwrap();
        if twice.rep.dims() != dm.rep.dims() || twice.decoration != dm.decoration {
            return Fail(format!("case {case}: double reflection changed dimensions"));
        }
        if !is_isomorphic(&dm.rep, &twice.rep, ISO_TRIALS).unwrap() {
            return Fail(format!("case {case}: double reflection is not isomorphic"));
        }
    }
    Pass(format!("{cases} sink and source cases"))
}

fn collect_files(dir: &FsPath, out: &mut Vec<PathBuf>) {
    let Ok(entries) = std::fs::read_dir(dir) else { return };
    for e in entries.flatten() {
        let p = e.path();
        let name = e.file_name();
        if name == "target" || name == ".git" || name == "node_modules" {
            if name == "node_modules" {
                out.push(p);
            }
            continue;
        }
        if p.is_dir() {
            collect_files(&p, out);
        } else {
            out.push(p);
        }
    }
}

fn no_secondary() -> Outcome {
    let root = FsPath::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let members: Vec<String> = std::fs::read_dir(root.join("crates"))
        .map(|d| d.flatten().map(|e| e.file_name().to_string_lossy().into_owned()).collect())
        .unwrap_or_default();
    if members != ["core"] {
        return Fail(format!("workspace crates {members:?}"));
    }
    let mut files = Vec::new();
    collect_files(&root, &mut files);
    let frontend: Vec<&PathBuf> = files
        .iter()
        .filter(|p| {
            let ext = p.extension().and_then(|e| e.to_str()).unwrap_or("");
            matches!(ext, "html" | "js" | "ts" | "tsx" | "jsx" | "css" | "vue" | "svelte")
                || p.file_name().is_some_and(|n| n == "package.json" || n == "node_modules")
        })
        .collect();
    if !frontend.is_empty() {
        return Fail(format!("front-end files present: {frontend:?}"));
    }
    Pass("single library crate, no front-end sources".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("quiver involution, exhaustive up to 4 vertices", quiver_involution),
        ("matrix-mutation oracle, exhaustive up to 4 vertices", matrix_oracle),
        ("trivial QPs have Jacobian algebra R", trivial_jacobian),
        ("splitting suite", splitting_theorem),
        ("triangle worked example", triangle_example),
        ("double mutation invariants on 50 generic QPs", theorem_two),
        ("genericity along mutation sequences", genericity),
        ("decorated reflection at sinks and sources", decorated_reflection),
        ("primary suite runs without the secondary component", no_secondary),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Pass(detail) => println!("PASS [PRIMARY] {name}: {detail} ({secs:.1}s)"),
            Fail(detail) => {
                failed += 1;
                println!("FAIL [PRIMARY] {name}: {detail} ({secs:.1}s)");
            }
            Unattainable(detail) => println!("FAIL [PRIMARY] {name}: {detail}; unattainable as stated ({secs:.1}s)"),
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
