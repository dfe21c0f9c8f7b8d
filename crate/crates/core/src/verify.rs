//! Certificates and their independent verification.
//!
//! A [`CycleCertificate`] names a power `p`, a cyclic vertex list and an
//! anchor sequence. [`verify`] checks it against the base graph using fresh
//! BFS distances and nothing from the construction that produced it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::in_cyclic_order;
use crate::graph::{bfs_distances, Graph};
use crate::par::{self, Exec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    General,
    Path,
    Cycle5,
    Four,
    Host5,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Construction::General => "general",
            Construction::Path => "path",
            Construction::Cycle5 => "cycle5",
            Construction::Four => "four",
            Construction::Host5 => "host5",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub n: usize,
    pub power: usize,
    pub cycle: Vec<usize>,
    pub anchors: Vec<usize>,
    pub construction: Construction,
}

impl CycleCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad certificate: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub edges_ok: bool,
    pub hamiltonian_ok: bool,
    pub order_ok: bool,
    pub first_violation: Option<String>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.edges_ok && self.hamiltonian_ok && self.order_ok
    }
}

pub fn verify(g: &Graph, cert: &CycleCertificate) -> Result<VerifyReport> {
    if cert.n != g.n() {
        return Err(Error::InvalidInput(format!(
            "certificate is for {} vertices but the graph has {}",
            cert.n,
            g.n()
        )));
    }
    let n = g.n();
    let cycle = &cert.cycle;
    let mut violations: Vec<String> = Vec::new();

    let in_range = cycle.iter().all(|&v| v < n);
    let edges_ok = if cycle.len() < 3 {
        violations.push(format!("cycle has {} vertices", cycle.len()));
        false
    } else if !in_range {
        violations.push("cycle names a vertex outside the graph".into());
        false
    } else {
        let mut ok = true;
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let d = bfs_distances(g, a)?[b];
            if d > cert.power {
                violations.push(format!("edge {a}-{b} has distance {d} > {}", cert.power));
                ok = false;
                break;
            }
        }
        ok
    };

    let mut seen = vec![false; n];
    let mut hamiltonian_ok = cycle.len() == n && in_range;
    if hamiltonian_ok {
        for &v in cycle {
            if std::mem::replace(&mut seen[v], true) {
                hamiltonian_ok = false;
                violations.push(format!("vertex {v} repeats"));
                break;
            }
        }
    } else {
        violations.push(format!("cycle has {} entries for {n} vertices", cycle.len()));
    }

    let reversed: Vec<usize> = cert.anchors.iter().rev().copied().collect();
    let order_ok = in_cyclic_order(cycle, &cert.anchors) || in_cyclic_order(cycle, &reversed);
    if !order_ok {
        violations.push("anchors are missing or out of cyclic order".into());
    }

    Ok(VerifyReport {
        edges_ok,
        hamiltonian_ok,
        order_ok,
        first_violation: violations.into_iter().next(),
    })
}

/// Verifies many certificates against one graph.
pub fn verify_batch(g: &Graph, certs: &[CycleCertificate], exec: Exec) -> Vec<Result<VerifyReport>> {
    par::map(exec, certs, |c| verify(g, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert(n: usize, power: usize, cycle: Vec<usize>, anchors: Vec<usize>) -> CycleCertificate {
        CycleCertificate {
            n,
            power,
            cycle,
            anchors,
            construction: Construction::General,
        }
    }

    #[test]
    fn triangle() {
        let r = verify(&Graph::complete(3), &cert(3, 1, vec![0, 1, 2], vec![0, 1, 2])).unwrap();
        assert!(r.is_valid());
        assert_eq!(r.first_violation, None);
    }

    #[test]
    fn repeated_vertex() {
        let r = verify(&Graph::complete(3), &cert(3, 1, vec![0, 1, 1], vec![0, 1])).unwrap();
        assert!(!r.hamiltonian_ok);
        assert!(r.edges_ok);
    }

    #[test]
    fn reversed_anchors_accepted() {
        let g = Graph::cycle(5);
        let r = verify(&g, &cert(5, 1, vec![0, 1, 2, 3, 4], vec![3, 1, 0])).unwrap();
        assert!(r.is_valid());
        let r = verify(&g, &cert(5, 1, vec![0, 1, 2, 3, 4], vec![0, 2, 1, 3])).unwrap();
        assert!(!r.order_ok && r.edges_ok && r.hamiltonian_ok);
    }

    #[test]
    fn corrupted_certificates_trip_matching_flag() {
        let g = Graph::path(6);
        let good = cert(6, 2, vec![0, 2, 4, 5, 3, 1], vec![0, 4, 5, 1]);
        assert!(verify(&g, &good).unwrap().is_valid());

        let mut swapped = good.clone();
        swapped.cycle.swap(1, 2); // 0 4 2 5 ...: hop 0-4 is too long
        let r = verify(&g, &swapped).unwrap();
        assert!(!r.edges_ok && r.hamiltonian_ok);

        let mut deleted = good.clone();
        deleted.cycle.remove(1);
        deleted.power = 5;
        let r = verify(&g, &deleted).unwrap();
        assert!(!r.hamiltonian_ok && r.edges_ok && r.order_ok);

        let mut transposed = good.clone();
        transposed.anchors = vec![0, 5, 4, 1];
        let r = verify(&g, &transposed).unwrap();
        assert!(!r.order_ok && r.edges_ok && r.hamiltonian_ok);
    }

    #[test]
    fn size_mismatch_and_short_cycle() {
        assert!(verify(&Graph::path(4), &cert(5, 1, vec![0, 1, 2], vec![])).is_err());
        let r = verify(&Graph::path(2), &cert(2, 1, vec![0, 1], vec![0, 1])).unwrap();
        assert!(!r.edges_ok);
    }

    #[test]
    fn json_roundtrip_and_key_order() {
        let c = CycleCertificate {
            construction: Construction::Cycle5,
            ..cert(3, 1, vec![0, 1, 2], vec![0, 1, 2])
        };
        let s = c.to_json();
        let keys: Vec<usize> = ["\"n\"", "\"power\"", "\"cycle\"", "\"anchors\"", "\"construction\""]
            .iter()
            .map(|k| s.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(s.contains("\"cycle5\""));
        assert_eq!(CycleCertificate::from_json(&s).unwrap(), c);
        assert!(CycleCertificate::from_json("{").is_err());
    }

    #[test]
    fn batch_modes_agree() {
        let g = Graph::complete(4);
        let certs = vec![
            cert(4, 1, vec![0, 1, 2, 3], vec![0, 2]),
            cert(4, 1, vec![0, 1, 2], vec![0, 2]),
        ];
        let a = verify_batch(&g, &certs, Exec::Sequential);
        let b = verify_batch(&g, &certs, Exec::Parallel);
        assert_eq!(a.len(), 2);
        for (x, y) in a.into_iter().zip(b) {
            assert_eq!(x.unwrap(), y.unwrap());
        }
    }
}
