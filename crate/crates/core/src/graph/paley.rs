use super::field::FiniteField;
use super::{Graph, GraphError};

pub const MAX_PALEY_ORDER: u64 = 10_000;

/// Paley graph on the elements of `GF(q)`, vertices in field element order.
pub fn paley_graph(q: u64) -> Result<Graph, GraphError> {
    if q > MAX_PALEY_ORDER {
        return Err(GraphError::TooLarge {
            q,
            max: MAX_PALEY_ORDER,
        });
    }
    let field = FiniteField::new(q)?;
    if q % 4 != 1 {
        return Err(GraphError::NotOneModFour(q));
    }
    let squares = field.nonzero_squares();
    let n = q as usize;
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if squares[field.sub(v as u64, u as u64) as usize] {
                g.set_edge(u, v, true);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn p5_is_relabelled_c5() {
        let g = paley_graph(5).unwrap();
        // residues {1, 4}: i ~ i ± 1, which is the cycle in natural order
        assert_eq!(g, cycle(5));
    }

    #[test]
    fn errors() {
        assert_eq!(paley_graph(7), Err(GraphError::NotOneModFour(7)));
        assert_eq!(paley_graph(15), Err(GraphError::NotPrimePower(15)));
        assert_eq!(paley_graph(27), Err(GraphError::NotOneModFour(27)));
        assert!(matches!(
            paley_graph(10_009),
            Err(GraphError::TooLarge { .. })
        ));
    }

    #[test]
    fn regular_of_half_degree() {
        for q in [5u64, 9, 13, 17, 25, 29, 37, 41, 49] {
            let g = paley_graph(q).unwrap();
            assert!(
                g.degrees().iter().all(|&d| d as u64 == (q - 1) / 2),
                "q = {q}"
            );
        }
    }
}
