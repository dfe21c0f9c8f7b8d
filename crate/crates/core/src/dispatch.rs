//! Picks the construction with the lowest guaranteed power for a graph and
//! anchor sequence.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{cycle_order, host_five_ordered, path_host_ordered};
use crate::four::four_ordered_hamiltonian;
use crate::general::ordered_hamiltonian;
use crate::graph::Graph;
use crate::verify::{Construction, CycleCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Auto,
    General,
    Path,
    Cycle5,
    Four,
    Host5,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Family::Auto,
            "general" => Family::General,
            "path" => Family::Path,
            "cycle5" => Family::Cycle5,
            "four" => Family::Four,
            "host5" => Family::Host5,
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Auto => "auto",
            Family::General => "general",
            Family::Path => "path",
            Family::Cycle5 => "cycle5",
            Family::Four => "four",
            Family::Host5 => "host5",
        })
    }
}

/// Power each construction guarantees for `k` anchors.
pub fn family_power(family: Family, k: usize) -> Option<usize> {
    match family {
        Family::Auto => None,
        Family::General => Some(3 * k / 2 + 1),
        Family::Path => Some((3 * k / 2).saturating_sub(1)),
        Family::Cycle5 | Family::Host5 => Some(3),
        Family::Four => Some(4),
    }
}

/// Concrete family `Auto` resolves to: the lowest power among the
/// constructions that apply, ties going to the earlier of four, cycle5,
/// path, general.
pub fn resolve_family(g: &Graph, k: usize) -> Family {
    let mut options = Vec::new();
    if k == 4 {
        options.push(Family::Four);
    }
    if k == 5 && cycle_order(g).is_some() {
        options.push(Family::Cycle5);
    }
    if k >= 3 && crate::families::path_order(g).is_some() {
        options.push(Family::Path);
    }
    options.push(Family::General);
    options
        .into_iter()
        .min_by_key(|&f| family_power(f, k))
        .expect("general always applies")
}

pub fn order(g: &Graph, anchors: &[usize], family: Family, ham: Option<&[usize]>) -> Result<CycleCertificate> {
    match family {
        Family::Auto => order(g, anchors, resolve_family(g, anchors.len()), ham),
        Family::General => ordered_hamiltonian(g, anchors),
        Family::Path => path_host_ordered(g, anchors),
        Family::Four => four_ordered_hamiltonian(g, anchors),
        Family::Cycle5 => {
            let ring = cycle_order(g).ok_or_else(|| Error::Precondition("graph is not a cycle".into()))?;
            let c = host_five_ordered(g, &ring, anchors)?;
            Ok(CycleCertificate {
                construction: Construction::Cycle5,
                ..c
            })
        }
        Family::Host5 => {
            let ring = ham.ok_or_else(|| Error::InvalidInput("host5 needs a Hamiltonian cycle".into()))?;
            host_five_ordered(g, ring, anchors)
        }
    }
}
