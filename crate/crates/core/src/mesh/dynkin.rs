//! Simply-laced Dynkin diagrams with a fixed labeling and bipartite coloring.
//!
//! Labelings:
//! - `A_n`: the path `0 - 1 - ... - (n-1)`.
//! - `D_n`: the path `0 - ... - (n-3)` with `n-2` and `n-1` both attached to
//!   `n-3`; `D_3` is `A_3` with its middle vertex labeled `0`.
//! - `E_n`: branch vertex `0`, short arm `1`, arm `2 - 3` of length two,
//!   long arm `4 - ... - (n-1)`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    D,
    E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dynkin {
    kind: DynkinType,
    rank: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    colors: Vec<u8>,
    phi: Vec<usize>,
}

impl Dynkin {
    pub fn parse(name: &str) -> Result<Dynkin> {
        let t = name.trim();
        let bad = || Error::UnsupportedDiagram(name.to_string());
        if t.len() < 2 {
            return Err(bad());
        }
        let (k, n) = t.split_at(1);
        let n: usize = n.parse().map_err(|_| bad())?;
        match k {
            "A" if n >= 1 => Ok(Dynkin::a(n)),
            "D" if n >= 3 => Ok(Dynkin::d(n)),
            "E" if (6..=8).contains(&n) => Ok(Dynkin::e(n)),
            _ => Err(bad()),
        }
    }

    pub fn a(n: usize) -> Dynkin {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        // reversal; a diagram automorphism of Z A_n only when it keeps colors
        let phi = (0..n).map(|i| n - 1 - i).collect();
        Dynkin::build(DynkinType::A, n, edges, phi)
    }

    pub fn d(n: usize) -> Dynkin {
        assert!(n >= 3);
        let mut edges: Vec<(usize, usize)> = (1..n - 2).map(|i| (i - 1, i)).collect();
        edges.push((n - 3, n - 2));
        edges.push((n - 3, n - 1));
        let mut phi: Vec<usize> = (0..n).collect();
        phi.swap(n - 2, n - 1);
        Dynkin::build(DynkinType::D, n, edges, phi)
    }

    pub fn e(n: usize) -> Dynkin {
        assert!((6..=8).contains(&n));
        let mut edges = vec![(0, 1), (0, 2), (2, 3), (0, 4)];
        for i in 5..n {
            edges.push((i - 1, i));
        }
        let mut phi: Vec<usize> = (0..n).collect();
        if n == 6 {
            phi = vec![0, 1, 4, 5, 2, 3];
        }
        Dynkin::build(DynkinType::E, n, edges, phi)
    }

    fn build(kind: DynkinType, rank: usize, edges: Vec<(usize, usize)>, phi: Vec<usize>) -> Dynkin {
        let mut neighbors = vec![Vec::new(); rank];
        for &(i, j) in &edges {
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        for n in &mut neighbors {
            n.sort_unstable();
        }
        // the diagram is a tree: 2-color by breadth-first search from 0
        let mut colors = vec![u8::MAX; rank];
        let mut queue = std::collections::VecDeque::from([0usize]);
        colors[0] = 0;
        while let Some(i) = queue.pop_front() {
            for &j in &neighbors[i] {
                if colors[j] == u8::MAX {
                    colors[j] = 1 - colors[i];
                    queue.push_back(j);
                }
            }
        }
        Dynkin {
            kind,
            rank,
            edges,
            neighbors,
            colors,
            phi,
        }
    }

    pub fn kind(&self) -> DynkinType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        let k = match self.kind {
            DynkinType::A => "A",
            DynkinType::D => "D",
            DynkinType::E => "E",
        };
        format!("{k}{}", self.rank)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn color(&self, i: usize) -> u8 {
        self.colors[i]
    }

    pub fn phi(&self, i: usize) -> usize {
        self.phi[i]
    }

    /// Whether `phi` is a graph automorphism that keeps the coloring, so
    /// that `(p, i) -> (p, phi i)` is an automorphism of `Z Delta`.
    pub fn phi_is_admissible(&self) -> bool {
        (0..self.rank).all(|i| self.colors[self.phi[i]] == self.colors[i])
            && self
                .edges
                .iter()
                .all(|&(i, j)| self.neighbors[self.phi[i]].contains(&self.phi[j]))
    }

    pub fn phi_is_trivial(&self) -> bool {
        (0..self.rank).all(|i| self.phi[i] == i)
    }

    pub fn positive_roots(&self) -> usize {
        let n = self.rank;
        match (self.kind, n) {
            (DynkinType::A, n) => n * (n + 1) / 2,
            (DynkinType::D, n) => n * (n - 1),
            (DynkinType::E, 6) => 36,
            (DynkinType::E, 7) => 63,
            (DynkinType::E, _) => 120,
        }
    }

    pub fn coxeter_number(&self) -> usize {
        2 * self.positive_roots() / self.rank
    }

    /// Row used when drawing `Z Delta`: one row per tau-orbit, with the
    /// two arms of a branch point drawn above and below it.
    pub fn display_row(&self, i: usize) -> usize {
        let n = self.rank;
        match self.kind {
            DynkinType::A => i,
            DynkinType::D => {
                if n == 3 {
                    return [1, 0, 2][i];
                }
                if i == n - 2 {
                    0
                } else if i == n - 1 {
                    1
                } else {
                    n - 2 - i
                }
            }
            DynkinType::E => match i {
                3 => 0,
                2 => 1,
                0 | 1 => 2,
                i => i - 1,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e8_coloring_matches_figure_columns() {
        let e8 = Dynkin::e(8);
        let colors: Vec<u8> = (0..8).map(|i| e8.color(i)).collect();
        assert_eq!(colors, vec![0, 1, 1, 0, 1, 0, 1, 0]);
        assert_eq!(e8.coxeter_number(), 30);
        assert!(e8.phi_is_trivial());
    }

    #[test]
    fn d_phi_swaps_short_arms() {
        let d8 = Dynkin::d(8);
        assert_eq!(d8.phi(6), 7);
        assert!(d8.phi_is_admissible());
        assert_eq!(d8.coxeter_number(), 14);
        assert_eq!(d8.neighbors(5), &[4, 6, 7]);
    }

    #[test]
    fn d3_is_a3() {
        let d3 = Dynkin::d(3);
        assert_eq!(d3.neighbors(0), &[1, 2]);
        assert_eq!(d3.positive_roots(), Dynkin::a(3).positive_roots());
        assert!(d3.phi_is_admissible());
    }

    #[test]
    fn parse_names() {
        assert_eq!(Dynkin::parse("E8").unwrap(), Dynkin::e(8));
        assert_eq!(Dynkin::parse("D8").unwrap().rank(), 8);
        assert!(Dynkin::parse("E9").is_err());
        assert!(Dynkin::parse("G2").is_err());
        assert!(Dynkin::e(6).phi_is_admissible());
        assert!(!Dynkin::a(4).phi_is_admissible());
        assert!(Dynkin::a(3).phi_is_admissible());
    }
}
