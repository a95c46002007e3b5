//! Exact vertex colorings: every color 1..=r is used by at least one vertex.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A total, exact coloring. `colors[v - 1]` is the color of vertex v; the
/// colors used are exactly 1..=r.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u16>", into = "Vec<u16>")]
pub struct Coloring {
    colors: Vec<u16>,
    r: u16,
}

impl Coloring {
    /// Wraps a per-vertex color array, validating that the set of colors
    /// used is exactly 1..=r for some r >= 1.
    pub fn new(colors: Vec<u16>) -> Result<Coloring> {
        if colors.is_empty() {
            return Err(Error::InvalidColoring("no vertices".into()));
        }
        let r = *colors.iter().max().unwrap();
        if colors.contains(&0) {
            return Err(Error::InvalidColoring("colors are 1-based; found 0".into()));
        }
        let mut used = vec![false; r as usize + 1];
        for &c in &colors {
            used[c as usize] = true;
        }
        if let Some(missing) = (1..=r).find(|&c| !used[c as usize]) {
            return Err(Error::InvalidColoring(format!(
                "not exact: color {missing} is unused but {r} appears"
            )));
        }
        Ok(Coloring { colors, r })
    }

    /// Number of vertices colored.
    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Number of colors used.
    pub fn color_count(&self) -> u16 {
        self.r
    }

    /// Color of vertex v (1-based).
    #[inline]
    pub fn color(&self, v: usize) -> u16 {
        self.colors[v - 1]
    }

    /// The underlying array, indexed by vertex id - 1.
    pub fn as_slice(&self) -> &[u16] {
        &self.colors
    }

    /// Vertices of one color class, ascending.
    pub fn class(&self, color: u16) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.color(v) == color).collect()
    }
}

impl TryFrom<Vec<u16>> for Coloring {
    type Error = Error;

    fn try_from(colors: Vec<u16>) -> Result<Coloring> {
        Coloring::new(colors)
    }
}

impl From<Coloring> for Vec<u16> {
    fn from(c: Coloring) -> Vec<u16> {
        c.colors
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_exact_colorings_only() {
        let c = Coloring::new(vec![1, 3, 2, 1]).unwrap();
        assert_eq!(c.color_count(), 3);
        assert_eq!(c.class(1), vec![1, 4]);
        assert!(Coloring::new(vec![1, 3, 3]).is_err()); // 2 unused
        assert!(Coloring::new(vec![0, 1]).is_err());
        assert!(Coloring::new(vec![]).is_err());
    }

    #[test]
    fn serializes_as_bare_array() {
        let c = Coloring::new(vec![1, 2, 1]).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), "[1,2,1]");
        let back: Coloring = serde_json::from_str("[1,2,1]").unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Coloring>("[1,3]").is_err());
    }
}
