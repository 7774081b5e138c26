//! The bipartite occurrence graph `Gr(u)` on `C(u) x {0,1}`: an edge joins
//! `(x,0)` and `(y,1)` whenever `xy` is a factor of `u`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub letter: Letter,
    pub side: u8,
}

impl Vertex {
    pub fn new(letter: Letter, side: u8) -> Vertex {
        Vertex { letter, side }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.letter, self.side)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceGraph {
    letters: BTreeMap<Letter, usize>,
    edges: BTreeSet<(Vertex, Vertex)>,
    /// Component label of vertex `2*i + side`, where `i` indexes `letters`.
    component: Vec<usize>,
}

fn find(parent: &mut [usize], mut a: usize) -> usize {
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}

pub fn build_graph(u: &Word) -> OccurrenceGraph {
    let letters: BTreeMap<Letter, usize> = u.content().into_iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut parent: Vec<usize> = (0..2 * letters.len()).collect();
    let mut edges = BTreeSet::new();
    for pair in u.letters().windows(2) {
        let (x, y) = (pair[0], pair[1]);
        edges.insert((Vertex::new(x, 0), Vertex::new(y, 1)));
        let a = find(&mut parent, 2 * letters[&x]);
        let b = find(&mut parent, 2 * letters[&y] + 1);
        if a != b {
            parent[a] = b;
        }
    }
    // Relabel roots by first appearance so labels are canonical.
    let mut label = vec![usize::MAX; parent.len()];
    let mut next = 0;
    let component = (0..parent.len())
        .map(|v| {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        })
        .collect();
    OccurrenceGraph { letters, edges, component }
}

impl OccurrenceGraph {
    pub fn vertex_count(&self) -> usize {
        self.component.len()
    }

    pub fn edges(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.edges
    }

    fn slot(&self, v: Vertex) -> Result<usize> {
        match self.letters.get(&v.letter) {
            Some(&i) if v.side <= 1 => Ok(2 * i + v.side as usize),
            _ => Err(Error::UnknownVertex(v.to_string())),
        }
    }

    pub fn same_component(&self, p: Vertex, q: Vertex) -> Result<bool> {
        Ok(self.component[self.slot(p)?] == self.component[self.slot(q)?])
    }

    /// Components as sorted blocks of sorted vertices.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut blocks: Vec<Vec<Vertex>> = Vec::new();
        for (&x, &i) in &self.letters {
            for side in 0..2u8 {
                let c = self.component[2 * i + side as usize];
                if c >= blocks.len() {
                    blocks.resize(c + 1, Vec::new());
                }
                blocks[c].push(Vertex::new(x, side));
            }
        }
        blocks.iter_mut().for_each(|b| b.sort());
        blocks.sort();
        blocks
    }

    /// Equality of the component partitions of two graphs over the same
    /// content. Labels are assigned in vertex order, so the label vectors
    /// coincide exactly when the partitions do.
    pub fn same_partition(&self, other: &OccurrenceGraph) -> bool {
        self.letters.len() == other.letters.len()
            && self.letters.keys().eq(other.letters.keys())
            && self.component == other.component
    }
}

pub fn same_components(u: &Word, v: &Word) -> bool {
    build_graph(u).same_partition(&build_graph(v))
}

pub fn same_component(u: &Word, p: Vertex, q: Vertex) -> Result<bool> {
    build_graph(u).same_component(p, q)
}
