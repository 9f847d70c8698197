#![allow(dead_code)]

use std::path::{Path, PathBuf};

use cubenoise::codes::LinearCode;
use cubenoise::fuzz::{random_code, random_matroid, random_multigraph, trial_rng};
use cubenoise::matroids::{graphic_matroid, BinaryMatroid, Graph};

pub fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn read(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

pub fn graph(name: &str) -> Graph {
    Graph::parse(&read(name)).unwrap()
}

/// Repetition codes up to length 8, the named codes, and 50 random codes with `n ≤ 12`.
pub fn code_corpus() -> Vec<(String, LinearCode)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("rep{n}"), LinearCode::repetition(n).unwrap()));
    }
    for (r, m) in [(1, 3), (1, 4), (2, 4)] {
        out.push((format!("rm({r},{m})"), LinearCode::reed_muller(r, m).unwrap()));
    }
    out.push(("hamming74".into(), LinearCode::parse(&read("hamming74.code")).unwrap()));
    for i in 0..50u64 {
        let mut rng = trial_rng(0xC0DE, i);
        let n = 2 + (i as usize % 11);
        let k = 1 + (i as usize * 7) % n;
        out.push((format!("random{i}"), random_code(n, k, &mut rng).unwrap()));
    }
    out
}

/// The graph files plus two random multigraphs with loops.
pub fn graph_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = ["k3.graph", "k4.graph", "c5.graph", "petersen.graph", "multigraph.graph"]
        .iter()
        .map(|n| (n.to_string(), graph(n)))
        .collect();
    for (i, (v, e)) in [(5usize, 9usize), (6, 12)].into_iter().enumerate() {
        let mut rng = trial_rng(0x6EA9, i as u64);
        loop {
            let g = random_multigraph(v, e, &mut rng).unwrap();
            if g.edges().iter().any(|(a, b)| a == b) {
                out.push((format!("random-multigraph{i}"), g));
                break;
            }
        }
    }
    out
}

/// Graphic matroids of the graph corpus, matrix files, codes as column matroids, and random matroids.
pub fn matroid_corpus() -> Vec<(String, BinaryMatroid)> {
    let mut out: Vec<(String, BinaryMatroid)> =
        graph_corpus().into_iter().map(|(n, g)| (n, graphic_matroid(&g))).collect();
    out.push(("mixed.matrix".into(), BinaryMatroid::parse(&read("mixed.matrix")).unwrap()));
    out.push(("rep2".into(), BinaryMatroid::parse(&read("rep2.code")).unwrap()));
    out.push(("rm13".into(), BinaryMatroid::parse(&read("rm13.code")).unwrap()));
    out.push(("free5".into(), BinaryMatroid::free(5).unwrap()));
    out.push(("loop".into(), BinaryMatroid::from_rows(1, vec![0]).unwrap()));
    for (i, m) in random_matroids(10).into_iter().enumerate() {
        out.push((format!("random{i}"), m));
    }
    out
}

/// `count` random matroids with `n ≤ 12` and between 1 and 6 rows.
pub fn random_matroids(count: u64) -> Vec<BinaryMatroid> {
    (0..count)
        .map(|i| {
            let mut rng = trial_rng(0x3A7, i);
            let n = 1 + (i as usize % 12);
            let rows = 1 + (i as usize * 5) % 6;
            random_matroid(n, rows, &mut rng).unwrap()
        })
        .collect()
}

/// Tutte polynomial by deletion and contraction, as `coeffs[i][j]` of `x^i y^j`.
pub fn tutte_by_deletion_contraction(g: &Graph) -> Vec<Vec<i128>> {
    fn connected(v: usize, edges: &[(usize, usize)], a: usize, b: usize) -> bool {
        let mut seen = vec![false; v];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            for &(p, q) in edges {
                for (s, t) in [(p, q), (q, p)] {
                    if s == x && !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        false
    }
    fn add(a: &mut Vec<Vec<i128>>, b: &[Vec<i128>], di: usize, dj: usize) {
        for (i, row) in b.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if a.len() <= i + di {
                    a.resize(i + di + 1, Vec::new());
                }
                let r = &mut a[i + di];
                if r.len() <= j + dj {
                    r.resize(j + dj + 1, 0);
                }
                r[j + dj] += c;
            }
        }
    }
    fn rec(v: usize, edges: &[(usize, usize)]) -> Vec<Vec<i128>> {
        let Some((&(a, b), rest)) = edges.split_last() else {
            return vec![vec![1]];
        };
        let mut out = Vec::new();
        if a == b {
            add(&mut out, &rec(v, rest), 0, 1);
            return out;
        }
        let contracted: Vec<(usize, usize)> = rest
            .iter()
            .map(|&(p, q)| (if p == b { a } else { p }, if q == b { a } else { q }))
            .collect();
        if !connected(v, rest, a, b) {
            add(&mut out, &rec(v, &contracted), 1, 0);
        } else {
            add(&mut out, &rec(v, rest), 0, 0);
            add(&mut out, &rec(v, &contracted), 0, 0);
        }
        out
    }
    rec(g.vertex_count(), g.edges())
}

/// Coefficient lookup that treats missing entries as zero.
pub fn coeff(c: &[Vec<i128>], i: usize, j: usize) -> i128 {
    c.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
}
