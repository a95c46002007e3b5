//! Cartesian products G □ H with the flat vertex numbering used throughout:
//! the product vertex v_{i,j} (left vertex i, right vertex j) has flat id
//! (i - 1) * n_H + j.
//!
//! (v_{i,j}, v_{i',j'}) is an edge iff i = i' and {j, j'} is an edge of H,
//! or j = j' and {i, i'} is an edge of G.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A Cartesian product that remembers its factors and the coordinate maps.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    left: Graph,
    right: Graph,
    product: Graph,
}

impl ProductGraph {
    pub fn new(left: Graph, right: Graph) -> ProductGraph {
        let (ng, nh) = (left.n(), right.n());
        let flat = |i: usize, j: usize| (i - 1) * nh + j;
        let mut edges = Vec::with_capacity(ng * right.edge_count() + nh * left.edge_count());
        for i in 1..=ng {
            for (j, j2) in right.edges() {
                edges.push((flat(i, j), flat(i, j2)));
            }
        }
        for j in 1..=nh {
            for (i, i2) in left.edges() {
                edges.push((flat(i, j), flat(i2, j)));
            }
        }
        let product =
            Graph::from_edges(ng * nh, &edges).expect("product of connected graphs is connected");
        ProductGraph {
            left,
            right,
            product,
        }
    }

    pub fn left(&self) -> &Graph {
        &self.left
    }

    pub fn right(&self) -> &Graph {
        &self.right
    }

    /// The product itself, an ordinary graph on n_G * n_H vertices.
    pub fn graph(&self) -> &Graph {
        &self.product
    }

    /// Flat id of v_{i,j}.
    ///
    /// # Errors
    ///
    /// [`Error::VertexRange`] if either coordinate is out of range.
    pub fn flat_id(&self, i: usize, j: usize) -> Result<usize> {
        if i < 1 || i > self.left.n() {
            return Err(Error::VertexRange {
                v: i,
                n: self.left.n(),
            });
        }
        if j < 1 || j > self.right.n() {
            return Err(Error::VertexRange {
                v: j,
                n: self.right.n(),
            });
        }
        Ok((i - 1) * self.right.n() + j)
    }

    /// Coordinates (i, j) of a flat id.
    pub fn coords(&self, v: usize) -> Result<(usize, usize)> {
        let n = self.product.n();
        if v < 1 || v > n {
            return Err(Error::VertexRange { v, n });
        }
        let nh = self.right.n();
        Ok(((v - 1) / nh + 1, (v - 1) % nh + 1))
    }

    /// Flat ids of the copy of the left factor over right vertex j:
    /// {v_{1,j}, ..., v_{n_G,j}}.
    pub fn left_copy(&self, j: usize) -> Result<Vec<usize>> {
        if j < 1 || j > self.right.n() {
            return Err(Error::VertexRange {
                v: j,
                n: self.right.n(),
            });
        }
        Ok((1..=self.left.n())
            .map(|i| (i - 1) * self.right.n() + j)
            .collect())
    }

    /// Flat ids of the copy of the right factor over left vertex i:
    /// {v_{i,1}, ..., v_{i,n_H}}.
    pub fn right_copy(&self, i: usize) -> Result<Vec<usize>> {
        if i < 1 || i > self.left.n() {
            return Err(Error::VertexRange {
                v: i,
                n: self.left.n(),
            });
        }
        Ok((1..=self.right.n())
            .map(|j| (i - 1) * self.right.n() + j)
            .collect())
    }
}

/// Builds G □ H.
pub fn cartesian_product(g: &Graph, h: &Graph) -> ProductGraph {
    ProductGraph::new(g.clone(), h.clone())
}
