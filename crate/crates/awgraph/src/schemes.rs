//! Coloring constructions for Cartesian products of trees.
//!
//! The constructions pick a diametral pair (source, sink) of the product
//! and color by distance from the two endpoints. Colors are reported as
//! 1 (red), 2 (blue), 3 (green); the numbers are presentation only.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{cartesian_product, ProductGraph};
use crate::tree::is_k_peripheral;

pub const RED: u16 = 1;
pub const BLUE: u16 = 2;
pub const GREEN: u16 = 3;

/// An ordered diametral pair of the product, by flat vertex id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiametralPairChoice {
    pub source: usize,
    pub sink: usize,
}

/// All ordered pairs (source, sink) at mutual distance equal to the
/// diameter, sorted by source then sink.
pub fn enumerate_diametral_choices(g: &Graph) -> Vec<DiametralPairChoice> {
    let diam = g.diameter();
    let mut out = Vec::new();
    for source in g.vertices() {
        for sink in g.vertices() {
            if source != sink && g.dist(source, sink) == diam {
                out.push(DiametralPairChoice { source, sink });
            }
        }
    }
    out
}

/// The lexicographically least diametral choice: smallest source, then
/// smallest sink.
pub fn default_diametral_choice(g: &Graph) -> Result<DiametralPairChoice> {
    enumerate_diametral_choices(g)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition("a diametral pair needs at least two vertices".into()))
}

fn validate_tree_factors(p: &ProductGraph) -> Result<()> {
    for (side, factor) in [("left", p.left()), ("right", p.right())] {
        if !factor.is_tree() {
            return Err(Error::NotATree(format!("the {side} factor is not a tree")));
        }
        if is_k_peripheral(factor, 3)?.is_some() {
            return Err(Error::Precondition(format!(
                "the {side} factor is 3-peripheral; these constructions require factors \
                 without three pairwise-diametral vertices"
            )));
        }
    }
    Ok(())
}

fn validate_choice(g: &Graph, choice: &DiametralPairChoice) -> Result<()> {
    let n = g.n();
    for v in [choice.source, choice.sink] {
        if v < 1 || v > n {
            return Err(Error::VertexRange { v, n });
        }
    }
    if choice.source == choice.sink {
        return Err(Error::Precondition("source and sink must differ".into()));
    }
    if g.dist(choice.source, choice.sink) != g.diameter() {
        return Err(Error::Precondition(format!(
            "vertices {} and {} are at distance {}, not the diameter {}",
            choice.source,
            choice.sink,
            g.dist(choice.source, choice.sink),
            g.diameter()
        )));
    }
    Ok(())
}

fn build_exact(g: &Graph, classes: impl Fn(usize) -> u16) -> Result<Coloring> {
    let colors: Vec<u16> = g.vertices().map(classes).collect();
    for want in [RED, BLUE, GREEN] {
        if !colors.contains(&want) {
            return Err(Error::InvalidColoring(format!(
                "degenerate construction: color class {want} is empty"
            )));
        }
    }
    Coloring::new(colors)
}

/// Distance coloring for a product of non-3-peripheral trees with odd
/// diameter: red is the set of vertices at distance diam from the sink
/// (which contains the source), blue the set at distance diam from the
/// source (which contains the sink), green everything else. The result is
/// rainbow-free for 3-APs.
pub fn odd_diameter_coloring(p: &ProductGraph, choice: &DiametralPairChoice) -> Result<Coloring> {
    let g = p.graph();
    validate_tree_factors(p)?;
    validate_choice(g, choice)?;
    let diam = g.diameter();
    if diam % 2 == 0 {
        return Err(Error::Precondition(format!(
            "this construction needs an odd product diameter, got {diam}"
        )));
    }
    for v in g.vertices() {
        if g.dist(v, choice.sink) == diam && g.dist(v, choice.source) == diam {
            return Err(Error::Internal(format!(
                "vertex {v} is at distance {diam} from both endpoints; factors of a \
                 non-3-peripheral pair cannot produce this"
            )));
        }
    }
    build_exact(g, |v| {
        if g.dist(v, choice.sink) == diam {
            RED
        } else if g.dist(v, choice.source) == diam {
            BLUE
        } else {
            GREEN
        }
    })
}

/// Output of the even-diameter construction: the coloring plus the
/// vertices that met both the red and the blue criterion (they are colored
/// red; the overlap is reported rather than hidden).
#[derive(Debug, Clone, Serialize)]
pub struct EvenColoringOutcome {
    pub coloring: Coloring,
    pub red_blue_overlap: Vec<usize>,
}

/// Distance coloring for a product of non-3-peripheral trees with even
/// diameter: red at distance diam from the sink, blue at distance diam - 1
/// from the source (red takes precedence), green elsewhere. Unlike the odd
/// construction this one carries no rainbow-freeness guarantee; it is
/// provided for experimentation across diametral choices.
pub fn generalized_even_coloring(
    p: &ProductGraph,
    choice: &DiametralPairChoice,
) -> Result<EvenColoringOutcome> {
    let g = p.graph();
    validate_tree_factors(p)?;
    validate_choice(g, choice)?;
    let diam = g.diameter();
    if diam % 2 == 1 {
        return Err(Error::Precondition(format!(
            "this construction needs an even product diameter, got {diam}"
        )));
    }
    let red_blue_overlap: Vec<usize> = g
        .vertices()
        .filter(|&v| g.dist(v, choice.sink) == diam && g.dist(v, choice.source) == diam - 1)
        .collect();
    let coloring = build_exact(g, |v| {
        if g.dist(v, choice.sink) == diam {
            RED
        } else if g.dist(v, choice.source) == diam - 1 {
            BLUE
        } else {
            GREEN
        }
    })?;
    Ok(EvenColoringOutcome { coloring, red_blue_overlap })
}

/// A fixed 18-vertex example: the product of a 3-vertex path and a
/// 6-cycle, colored with singleton red and blue classes placed at mutual
/// distance equal to the diameter. The coloring is rainbow-free for 3-APs
/// even though one factor is not a tree.
pub fn example_p3c6_coloring() -> (ProductGraph, Coloring) {
    let p = cartesian_product(&Graph::path(3), &Graph::cycle(6));
    let red = p.flat_id(1, 1).expect("coordinates in range");
    let blue = p.flat_id(3, 4).expect("coordinates in range");
    let colors = p
        .graph()
        .vertices()
        .map(|v| if v == red { RED } else if v == blue { BLUE } else { GREEN })
        .collect();
    let c = Coloring::new(colors).expect("three nonempty classes");
    (p, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ap::validate_coloring;

    fn grid(a: usize, b: usize) -> ProductGraph {
        cartesian_product(&Graph::path(a), &Graph::path(b))
    }

    #[test]
    fn diametral_choices_are_ordered_pairs() {
        let p = grid(2, 3);
        let choices = enumerate_diametral_choices(p.graph());
        let pairs: Vec<(usize, usize)> =
            choices.iter().map(|c| (c.source, c.sink)).collect();
        assert_eq!(pairs, vec![(1, 6), (3, 4), (4, 3), (6, 1)]);
        assert_eq!(
            default_diametral_choice(p.graph()).unwrap(),
            DiametralPairChoice { source: 1, sink: 6 }
        );
        assert!(default_diametral_choice(&Graph::path(1)).is_err());
    }

    #[test]
    fn odd_coloring_on_a_2x3_grid() {
        let p = grid(2, 3);
        let choice = default_diametral_choice(p.graph()).unwrap();
        let c = odd_diameter_coloring(&p, &choice).unwrap();
        assert_eq!(c.as_slice(), &[1, 3, 3, 3, 3, 2]);
        let report = validate_coloring(p.graph(), &c, 3).unwrap();
        assert!(report.is_rainbow_free());
    }

    #[test]
    fn odd_coloring_validates_its_inputs() {
        assert!(matches!(
            odd_diameter_coloring(&grid(3, 3), &DiametralPairChoice { source: 1, sink: 9 }),
            Err(Error::Precondition(_))
        ));
        let star = Graph::star(3);
        let p = cartesian_product(&star, &Graph::path(2));
        let choice = default_diametral_choice(p.graph()).unwrap();
        assert!(matches!(odd_diameter_coloring(&p, &choice), Err(Error::Precondition(_))));
        let cyc = cartesian_product(&Graph::cycle(4), &Graph::path(2));
        let choice = default_diametral_choice(cyc.graph()).unwrap();
        assert!(matches!(odd_diameter_coloring(&cyc, &choice), Err(Error::NotATree(_))));
        let p = grid(2, 3);
        assert!(matches!(
            odd_diameter_coloring(&p, &DiametralPairChoice { source: 1, sink: 2 }),
            Err(Error::Precondition(_))
        ));
        let tiny = grid(1, 2);
        let choice = default_diametral_choice(tiny.graph()).unwrap();
        assert!(matches!(odd_diameter_coloring(&tiny, &choice), Err(Error::InvalidColoring(_))));
    }

    #[test]
    fn even_coloring_on_a_4x4_grid() {
        let p = grid(4, 4);
        let choice = default_diametral_choice(p.graph()).unwrap();
        let out = generalized_even_coloring(&p, &choice).unwrap();
        assert!(out.red_blue_overlap.is_empty());
        let mut expected = vec![GREEN; 16];
        expected[0] = RED;
        expected[11] = BLUE;
        expected[14] = BLUE;
        assert_eq!(out.coloring.as_slice(), expected.as_slice());
    }

    #[test]
    fn even_coloring_rejects_odd_diameters() {
        let p = grid(2, 3);
        let choice = default_diametral_choice(p.graph()).unwrap();
        assert!(matches!(
            generalized_even_coloring(&p, &choice),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn fixed_example_is_rainbow_free_at_diametral_distance() {
        let (p, c) = example_p3c6_coloring();
        assert_eq!(c.color(1), RED);
        assert_eq!(c.color(16), BLUE);
        assert_eq!(p.graph().dist(1, 16), p.graph().diameter());
        let report = validate_coloring(p.graph(), &c, 3).unwrap();
        assert!(report.is_rainbow_free());
    }
}
