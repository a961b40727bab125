//! Reference implementations: Floyd-Warshall all-pairs distances and a
//! per-source BFS oracle. These are the correctness references and the
//! timing baseline; neither shares code with the matrix-power path.

use std::collections::VecDeque;

use crate::error::Error;
use crate::graph::Graph;
use crate::partition::PartitionResult;

const UNREACHED: u32 = u32::MAX;

/// Dense all-pairs hop-distance matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    width: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.dist[i * self.width + j]
    }

    /// Per-node eccentricities: the maximum of each row.
    pub fn eccentricities(&self) -> Vec<u32> {
        (0..self.width)
            .map(|i| {
                self.dist[i * self.width..(i + 1) * self.width]
                    .iter()
                    .copied()
                    .max()
                    .expect("non-empty row")
            })
            .collect()
    }
}

/// Textbook Floyd-Warshall with unit edge weights, kept deliberately plain
/// so the benchmark baseline is the traditional algorithm.
pub fn floyd_warshall(g: &Graph) -> Result<DistanceMatrix, Error> {
    let n = g.node_count();
    let mut dist = vec![UNREACHED; n * n];
    for i in 0..n {
        dist[i * n + i] = 0;
        for j in g.neighbors(i) {
            dist[i * n + j] = 1;
        }
    }
    let mut row_k = vec![0u32; n];
    for k in 0..n {
        row_k.copy_from_slice(&dist[k * n..(k + 1) * n]);
        for i in 0..n {
            let d_ik = dist[i * n + k];
            if d_ik == UNREACHED {
                continue;
            }
            let row_i = &mut dist[i * n..(i + 1) * n];
            for j in 0..n {
                let d_kj = row_k[j];
                if d_kj != UNREACHED && d_ik + d_kj < row_i[j] {
                    row_i[j] = d_ik + d_kj;
                }
            }
        }
    }
    if dist.contains(&UNREACHED) {
        return Err(Error::NotConnected);
    }
    Ok(DistanceMatrix { width: n, dist })
}

/// One BFS per source; `ecc[i]` is the largest distance reached from `i`.
pub fn bfs_eccentricities(g: &Graph) -> Result<Vec<u32>, Error> {
    let n = g.node_count();
    let mut ecc = Vec::with_capacity(n);
    let mut dist = vec![UNREACHED; n];
    let mut queue = VecDeque::new();
    for source in 0..n {
        dist.fill(UNREACHED);
        dist[source] = 0;
        queue.clear();
        queue.push_back(source);
        let mut reached = 1;
        let mut max_dist = 0;
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[v] == UNREACHED {
                    dist[v] = dist[u] + 1;
                    max_dist = max_dist.max(dist[v]);
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        if reached != n {
            return Err(Error::NotConnected);
        }
        ecc.push(max_dist);
    }
    Ok(ecc)
}

/// The independent partition oracle: radius and layers straight from BFS
/// eccentricities.
pub fn oracle_partition(g: &Graph) -> Result<PartitionResult, Error> {
    let ecc = bfs_eccentricities(g)?;
    Ok(PartitionResult::from_eccentricities(&ecc))
}

#[cfg(test)]
mod tests {
    #![allow(clippy::needless_range_loop)]

    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn graph(n: usize, edges: &[(u32, u32)]) -> Graph {
        Graph::from_index_edges(n, edges).unwrap()
    }

    fn random_connected(rng: &mut StdRng, n: usize, extra: usize) -> Graph {
        let mut edges: Vec<(u32, u32)> =
            (1..n as u32).map(|i| (rng.random_range(0..i), i)).collect();
        for _ in 0..extra {
            let a = rng.random_range(0..n as u32);
            let b = rng.random_range(0..n as u32);
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
        graph(n, &edges)
    }

    /// Independent per-pair check used to cross-validate Floyd-Warshall.
    fn bfs_distances_from(g: &Graph, source: usize) -> Vec<u32> {
        let n = g.node_count();
        let mut dist = vec![UNREACHED; n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[v] == UNREACHED {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    #[test]
    fn triangle_distances() {
        let d = floyd_warshall(&graph(3, &[(0, 1), (1, 2), (0, 2)])).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d.get(i, j), u32::from(i != j));
            }
        }
    }

    #[test]
    fn path4_distances() {
        let d = floyd_warshall(&graph(4, &[(0, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(1, 3), 2);
        assert_eq!(d.get(3, 0), 3);
        assert_eq!(d.get(2, 2), 0);
    }

    #[test]
    fn floyd_warshall_matches_bfs_on_random_graph() {
        let mut rng = StdRng::seed_from_u64(31);
        let g = random_connected(&mut rng, 48, 70);
        let d = floyd_warshall(&g).unwrap();
        for i in 0..48 {
            let bfs = bfs_distances_from(&g, i);
            for j in 0..48 {
                assert_eq!(d.get(i, j), bfs[j], "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        assert!(matches!(floyd_warshall(&g), Err(Error::NotConnected)));
        assert!(matches!(bfs_eccentricities(&g), Err(Error::NotConnected)));
        assert!(matches!(oracle_partition(&g), Err(Error::NotConnected)));
    }

    #[test]
    fn path5_eccentricities() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(bfs_eccentricities(&g).unwrap(), vec![4, 3, 2, 3, 4]);
    }

    #[test]
    fn cycle6_eccentricities() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(bfs_eccentricities(&g).unwrap(), vec![3; 6]);
    }

    #[test]
    fn eccentricities_equal_distance_matrix_row_maxima() {
        let mut rng = StdRng::seed_from_u64(37);
        let g = random_connected(&mut rng, 64, 90);
        let from_bfs = bfs_eccentricities(&g).unwrap();
        let from_fw = floyd_warshall(&g).unwrap().eccentricities();
        assert_eq!(from_bfs, from_fw);
    }

    #[test]
    fn radius_diameter_bounds_hold() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..25 {
            let n = rng.random_range(2..=40);
            let extra = rng.random_range(0..n);
            let g = random_connected(&mut rng, n, extra);
            let ecc = bfs_eccentricities(&g).unwrap();
            let radius = *ecc.iter().min().unwrap();
            let diameter = *ecc.iter().max().unwrap();
            assert!(radius <= diameter);
            assert!(diameter <= 2 * radius);
        }
    }

    #[test]
    fn oracle_partition_basics() {
        let single = graph(1, &[]);
        let p = oracle_partition(&single).unwrap();
        assert_eq!(p.radius(), 0);
        assert_eq!(p.layers(), &[0]);

        let star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let p = oracle_partition(&star).unwrap();
        assert_eq!(p.radius(), 1);
        assert_eq!(p.depth(), 1);
    }
}
