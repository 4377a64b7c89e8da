use std::str::FromStr;

use gainsym::constructions::{bowtie_with_pendant, hexagon_family, omega_fixture, triangle_pair_with_square};
use gainsym::GainGraph64;

/// Built-in graphs selectable with `--fixture`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    /// `example2`: the five-vertex sixth-root-of-unity graph.
    Example2,
    /// `gamma_s:<s>`: the signed hexagon family with `s ≥ 1` extra vertices.
    GammaS(usize),
    /// `fig3a`: two triangles sharing a vertex, plus a pendant.
    Fig3a,
    /// `fig3b`: two triangles sharing an edge, plus a square.
    Fig3b,
}

impl Fixture {
    pub fn graph(self) -> GainGraph64 {
        match self {
            Fixture::Example2 => omega_fixture(),
            Fixture::GammaS(s) => hexagon_family(s),
            Fixture::Fig3a => bowtie_with_pendant(),
            Fixture::Fig3b => triangle_pair_with_square(),
        }
    }
}

impl FromStr for Fixture {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "example2" => Ok(Fixture::Example2),
            "fig3a" => Ok(Fixture::Fig3a),
            "fig3b" => Ok(Fixture::Fig3b),
            _ => match s.strip_prefix("gamma_s:") {
                Some(k) => match k.parse::<usize>() {
                    Ok(k) if k >= 1 => Ok(Fixture::GammaS(k)),
                    _ => Err(format!("gamma_s needs a positive integer, got {k:?}")),
                },
                None => Err(format!(
                    "unknown fixture {s:?}; expected example2, gamma_s:<s>, fig3a or fig3b"
                )),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!("gamma_s:2".parse(), Ok(Fixture::GammaS(2)));
        assert!("gamma_s:0".parse::<Fixture>().is_err());
        assert!("fig3c".parse::<Fixture>().is_err());
        assert_eq!("example2".parse::<Fixture>().unwrap().graph().m(), 7);
    }
}
