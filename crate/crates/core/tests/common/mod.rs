//! Test-side oracle: an independent model of the puzzle graph built on plain
//! digit vectors and string keys, sharing no representation or traversal code
//! with the library. Only valid for k ≤ 10 (single-character digits).
//!
//! A state string lists pegs from the largest disk (first character) down to
//! the smallest (last character); internally `Word` stores `word[i]` = peg of
//! disk `i`.

// Each integration-test target compiles its own copy of this module, and no
// single target uses every helper.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};

pub type Word = Vec<u8>;

pub fn word_of(s: &str) -> Word {
    s.chars()
        .rev()
        .map(|c| c.to_digit(10).expect("digit") as u8)
        .collect()
}

pub fn string_of(word: &Word) -> String {
    word.iter()
        .rev()
        .map(|&d| char::from_digit(d as u32, 10).expect("digit"))
        .collect()
}

/// All k^n states in lexicographic string order (= ascending packed code).
pub fn all_states(k: u8, n: u8) -> Vec<String> {
    let mut words = vec![String::new()];
    for _ in 0..n {
        words = words
            .iter()
            .flat_map(|w| (0..k).map(move |d| format!("{w}{d}")))
            .collect();
    }
    words
}

/// A disk may move iff no smaller disk sits on its peg, and may land on any
/// other peg holding no smaller disk.
pub fn neighbors(s: &str, k: u8) -> Vec<String> {
    let word = word_of(s);
    let mut out = Vec::new();
    for disk in 0..word.len() {
        let from = word[disk];
        if word[..disk].contains(&from) {
            continue; // a smaller disk sits on top
        }
        for to in 0..k {
            if to == from || word[..disk].contains(&to) {
                continue;
            }
            let mut next = word.clone();
            next[disk] = to;
            out.push(string_of(&next));
        }
    }
    out.sort();
    out
}

/// Breadth-first distances from `source` over string states.
pub fn bfs(k: u8, source: &str) -> HashMap<String, u32> {
    let mut dist = HashMap::new();
    dist.insert(source.to_string(), 0);
    let mut queue = VecDeque::from([source.to_string()]);
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        for next in neighbors(&s, k) {
            dist.entry(next.clone()).or_insert_with(|| {
                queue.push_back(next);
                d + 1
            });
        }
    }
    dist
}

pub fn distance(k: u8, from: &str, to: &str) -> u32 {
    *bfs(k, from).get(to).expect("graph is connected")
}

/// Counts shortest paths by explicit depth-first enumeration, panicking if
/// more than `cap` are found (keeps accidental blowups loud).
pub fn count_geodesics(k: u8, from: &str, to: &str, cap: u64) -> u64 {
    let dist = bfs(k, from);
    let total = dist[to];
    let mut count = 0;
    let mut stack = vec![(to.to_string(), total)];
    while let Some((s, d)) = stack.pop() {
        if d == 0 {
            assert_eq!(s, from);
            count += 1;
            assert!(count <= cap, "more than {cap} geodesics");
            continue;
        }
        for prev in neighbors(&s, k) {
            if dist[&prev] + 1 == d {
                stack.push((prev, d - 1));
            }
        }
    }
    count
}

/// Degree closed form in terms of the number of occupied pegs.
pub fn closed_form_degree(k: u32, occupied: u32) -> u32 {
    occupied * (k - 1) - occupied * (occupied - 1) / 2
}

pub fn occupied_pegs(s: &str) -> u32 {
    let mut seen = [false; 10];
    for c in s.chars() {
        seen[c.to_digit(10).unwrap() as usize] = true;
    }
    seen.iter().filter(|&&b| b).count() as u32
}

/// Textbook brute-force automorphism search: assign images in vertex order,
/// keeping full edge ⇔ edge consistency with everything assigned so far. No
/// degree filters, no structural shortcuts. Returns the set of permutation
/// tables over vertex indices (states in lexicographic order), sorted.
pub fn brute_force_automorphisms(k: u8, n: u8) -> Vec<Vec<usize>> {
    let states = all_states(k, n);
    let index: BTreeMap<&str, usize> = states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let order = states.len();
    let adj: Vec<Vec<bool>> = states
        .iter()
        .map(|s| {
            let mut row = vec![false; order];
            for t in neighbors(s, k) {
                row[index[t.as_str()]] = true;
            }
            row
        })
        .collect();

    let mut found = Vec::new();
    let mut image: Vec<Option<usize>> = vec![None; order];
    let mut used = vec![false; order];
    search(&adj, 0, &mut image, &mut used, &mut found);
    found.sort();
    found
}

fn search(
    adj: &[Vec<bool>],
    v: usize,
    image: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    found: &mut Vec<Vec<usize>>,
) {
    let order = adj.len();
    if v == order {
        found.push(image.iter().map(|i| i.unwrap()).collect());
        return;
    }
    for w in 0..order {
        if used[w] {
            continue;
        }
        let consistent = (0..v).all(|u| adj[u][v] == adj[image[u].unwrap()][w]);
        if !consistent {
            continue;
        }
        image[v] = Some(w);
        used[w] = true;
        search(adj, v + 1, image, used, found);
        image[v] = None;
        used[w] = false;
    }
}
