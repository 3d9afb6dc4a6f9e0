use serde::Serialize;

use crate::error::{Error, Result};
use crate::torus::TorusLink;

/// The move an edge comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Provenance {
    /// Hirano curve with the line at infinity and the singular balls removed,
    /// followed by bands merging the singular links.
    LemmaHirano,
    /// `T(2, a) -> T(2, b)`, one band per crossing added or removed.
    Stabilization,
    /// `T(d, d) -> T(D, D)` for `D <= d`.
    DDtoDD,
    /// An optimal cobordism to or from the unknot.
    LocalThom,
    /// `T(p, a) -> T(p, b)` by `(p - 1)|a - b|` bands.
    BandSum,
    Composite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CobordismEdge {
    pub source: TorusLink,
    pub target: TorusLink,
    pub chi: i64,
    pub provenance: Provenance,
    #[serde(skip)]
    pub connected: bool,
    /// Edges a composite was built from; empty otherwise.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<CobordismEdge>,
    /// `T(2, n)` indices of the endpoints when the links alone do not pin
    /// them down (the unknot is both `T(2, 1)` and `T(2, -1)`).
    #[serde(skip)]
    indices: Option<(i64, i64)>,
}

impl CobordismEdge {
    fn new(source: TorusLink, target: TorusLink, chi: i64, provenance: Provenance) -> Self {
        CobordismEdge {
            source,
            target,
            chi,
            provenance,
            connected: true,
            parts: Vec::new(),
            indices: None,
        }
    }

    /// The same cobordism read backwards.
    pub fn reversed(&self) -> Self {
        CobordismEdge {
            source: self.target,
            target: self.source,
            parts: self.parts.iter().rev().map(|e| e.reversed()).collect(),
            indices: self.indices.map(|(a, b)| (b, a)),
            ..self.clone()
        }
    }

    /// Mirror image of both ends.
    pub fn mirrored(&self) -> Self {
        CobordismEdge {
            source: self.source.mirror(),
            target: self.target.mirror(),
            parts: self.parts.iter().map(|e| e.mirrored()).collect(),
            indices: self.indices.map(|(a, b)| (-a, -b)),
            ..self.clone()
        }
    }

    /// Recomputes the Euler characteristic from the provenance formula and
    /// the endpoints.
    pub fn rederive(&self) -> Result<i64> {
        let fail = |why: &str| Error::Verification {
            step: format!("{:?} {} -> {}", self.provenance, self.source, self.target),
            detail: why.to_string(),
        };
        let (s, t) = (self.source.positive(), self.target.positive());
        match self.provenance {
            Provenance::LemmaHirano => {
                let m = s.p() / 2;
                let mirror_ok = self.source.is_mirror() == self.target.is_mirror();
                if s.p() != s.q() || s.p() % 2 != 0 || t != TorusLink::two(3 * m * m) || !mirror_ok {
                    return Err(fail("endpoints are not T(2m,2m) and T(2,3m^2)"));
                }
                Ok(-m * m - 2 * m)
            }
            Provenance::Stabilization => {
                let (a, b) = self.two_indices().ok_or_else(|| fail("endpoints are not T(2,n)"))?;
                Ok(-(a - b).abs())
            }
            Provenance::DDtoDD => {
                if s.p() != s.q() || t.p() != t.q() || t.p() > s.p() || self.source.is_mirror() != self.target.is_mirror() {
                    return Err(fail("endpoints are not T(d,d) and T(D,D) with D <= d"));
                }
                Ok((t.p() - 1).pow(2) - (s.p() - 1).pow(2))
            }
            Provenance::LocalThom => {
                let other = if self.source.is_unknot() {
                    self.target
                } else if self.target.is_unknot() {
                    self.source
                } else {
                    return Err(fail("neither end is the unknot"));
                };
                if let Some((a, b)) = self.two_indices() {
                    let n = if self.source.is_unknot() { b } else { a };
                    return Ok(-(n.abs() - 1).abs());
                }
                let o = other.positive();
                if o.p() == o.q() {
                    return Ok(-(o.p() - 1).pow(2));
                }
                if o.is_knot() {
                    // the four-genus bound is attained by torus knots
                    return Ok(-((o.p() - 1) * (o.q() - 1)));
                }
                Err(fail("no optimal value known for this link"))
            }
            Provenance::BandSum => {
                let mirror_ok = self.source.is_mirror() == self.target.is_mirror();
                let candidates = [(s.p(), s.q(), t.p(), t.q()), (s.p(), s.q(), t.q(), t.p()), (s.q(), s.p(), t.p(), t.q()), (s.q(), s.p(), t.q(), t.p())];
                candidates
                    .iter()
                    .filter(|c| mirror_ok && c.0 == c.2 && c.0 >= 1)
                    .map(|c| -(c.0 - 1) * (c.1 - c.3).abs())
                    .max()
                    .ok_or_else(|| fail("endpoints do not share a parameter"))
            }
            Provenance::Composite => {
                if self.parts.is_empty() {
                    return Err(fail("composite without parts"));
                }
                let chain = CobordismChain::new(self.parts.clone());
                let chi = chain.verify()?;
                if chain.source() != Some(self.source) || chain.target() != Some(self.target) {
                    return Err(fail("parts do not span the composite"));
                }
                Ok(chi)
            }
        }
    }

    fn two_indices(&self) -> Option<(i64, i64)> {
        if let Some(ix) = self.indices {
            return Some(ix);
        }
        Some((two_index(self.source)?, two_index(self.target)?))
    }
}

/// `n` with `link = T(2, n)`, when that is unambiguous.
fn two_index(link: TorusLink) -> Option<i64> {
    let sign = if link.is_mirror() { -1 } else { 1 };
    match (link.p().abs(), link.q()) {
        (2, q) => Some(sign * q),
        (0, 2) => Some(0),
        _ => None,
    }
}

/// `T(2m, 2m) -> T(2, 3m^2)` with `chi = -m^2 - 2m`.
pub fn lemma_edge(m: i64) -> Result<CobordismEdge> {
    if m < 1 {
        return Err(Error::Usage(format!("m must be positive, got {m}")));
    }
    Ok(CobordismEdge::new(
        TorusLink::diagonal(2 * m),
        TorusLink::two(3 * m * m),
        -m * m - 2 * m,
        Provenance::LemmaHirano,
    ))
}

/// The better `m = 1` edge `T(2, 2) -> T(2, 3)` with a single band.
pub fn lemma_edge_special() -> CobordismEdge {
    band_sum_edge(2, 2, 3).expect("valid parameters")
}

/// `T(p, a) -> T(p, b)`, `chi = -(p - 1)|a - b|`.
pub fn band_sum_edge(p: i64, a: i64, b: i64) -> Result<CobordismEdge> {
    if p < 1 || a < 1 || b < 1 {
        return Err(Error::Usage("band sums need positive parameters".into()));
    }
    Ok(CobordismEdge::new(
        TorusLink::new(p, a)?,
        TorusLink::new(p, b)?,
        -(p - 1) * (a - b).abs(),
        Provenance::BandSum,
    ))
}

/// `T(2, a) -> T(2, b)`, `chi = -|a - b|`.
pub fn stabilization_edge(a: i64, b: i64) -> CobordismEdge {
    let mut e = CobordismEdge::new(
        TorusLink::two(a),
        TorusLink::two(b),
        -(a - b).abs(),
        Provenance::Stabilization,
    );
    e.indices = Some((a, b));
    e
}

/// `T(d, d) -> T(D, D)`, `chi = (D - 1)^2 - (d - 1)^2`.
pub fn dd_edge(d: i64, big_d: i64) -> Result<CobordismEdge> {
    if big_d < 1 || big_d > d {
        return Err(Error::Usage(format!("need 1 <= D <= d, got d={d} D={big_d}")));
    }
    Ok(CobordismEdge::new(
        TorusLink::diagonal(d),
        TorusLink::diagonal(big_d),
        (big_d - 1).pow(2) - (d - 1).pow(2),
        Provenance::DDtoDD,
    ))
}

/// Optimal cobordism from `T(d, d)` to the unknot, `chi = -(|d| - 1)^2`.
pub fn local_thom_edge(d: i64) -> Result<CobordismEdge> {
    if d == 0 {
        return Err(Error::Usage("d must be nonzero".into()));
    }
    Ok(CobordismEdge::new(
        TorusLink::diagonal(d),
        TorusLink::unknot(),
        -(d.abs() - 1).pow(2),
        Provenance::LocalThom,
    ))
}

/// Optimal cobordism from the unknot to `T(2, n)`, `chi = -||n| - 1|`.
pub fn local_thom_edge_two(n: i64) -> CobordismEdge {
    let mut e = CobordismEdge::new(
        TorusLink::unknot(),
        TorusLink::two(n),
        -(n.abs() - 1).abs(),
        Provenance::LocalThom,
    );
    e.indices = Some((1, n));
    e
}

/// Ordered edges, each ending where the next begins.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CobordismChain {
    pub edges: Vec<CobordismEdge>,
}

impl CobordismChain {
    pub fn new(edges: Vec<CobordismEdge>) -> Self {
        CobordismChain { edges }
    }

    pub fn chi(&self) -> i64 {
        self.edges.iter().map(|e| e.chi).sum()
    }

    pub fn source(&self) -> Option<TorusLink> {
        self.edges.first().map(|e| e.source)
    }

    pub fn target(&self) -> Option<TorusLink> {
        self.edges.last().map(|e| e.target)
    }

    pub fn then(mut self, edge: CobordismEdge) -> Self {
        self.edges.push(edge);
        self
    }

    pub fn mirrored(&self) -> Self {
        CobordismChain::new(self.edges.iter().map(|e| e.mirrored()).collect())
    }

    /// Checks that consecutive ends agree, every edge is connected and its
    /// Euler characteristic matches its formula. Returns the total.
    pub fn verify(&self) -> Result<i64> {
        check_links(&self.edges)?;
        for e in &self.edges {
            if !e.connected {
                return Err(Error::Verification {
                    step: format!("{} -> {}", e.source, e.target),
                    detail: "edge is not connected".into(),
                });
            }
            let expected = e.rederive()?;
            if expected != e.chi {
                return Err(Error::Verification {
                    step: format!("{:?} {} -> {}", e.provenance, e.source, e.target),
                    detail: format!("recorded chi {} but formula gives {expected}", e.chi),
                });
            }
        }
        Ok(self.chi())
    }

    /// Compact text form, e.g. `T(6,6) -[0]-> T(6,6) -[-15]-> T(2,27)`.
    pub fn describe(&self) -> String {
        let mut out = match self.source() {
            Some(s) => s.to_string(),
            None => return String::new(),
        };
        for e in &self.edges {
            out.push_str(&format!(" -[{}]-> {}", e.chi, e.target));
        }
        out
    }
}

fn check_links(edges: &[CobordismEdge]) -> Result<()> {
    for (i, w) in edges.windows(2).enumerate() {
        if w[0].target != w[1].source {
            return Err(Error::Composition {
                index: i,
                left: format!("{} -> {}", w[0].source, w[0].target),
                right: format!("{} -> {}", w[1].source, w[1].target),
            });
        }
    }
    Ok(())
}

/// Glues a chain into one edge whose Euler characteristic is the sum.
pub fn compose(chain: &CobordismChain) -> Result<CobordismEdge> {
    match chain.edges.as_slice() {
        [] => Err(Error::Usage("cannot compose an empty chain".into())),
        [single] => Ok(single.clone()),
        edges => {
            check_links(edges)?;
            let mut e = CobordismEdge::new(
                edges[0].source,
                edges[edges.len() - 1].target,
                chain.chi(),
                Provenance::Composite,
            );
            e.connected = edges.iter().all(|x| x.connected);
            e.parts = edges.to_vec();
            Ok(e)
        }
    }
}

/// `T(d, d) -> T(D, D) -> T(2, 3m^2) -> T(2, floor(3d^2/4))` with
/// `m = floor(d/2)` and `D = 2m`. Identity steps are kept with `chi = 0`.
pub fn theorem1_chain(d: i64) -> Result<CobordismChain> {
    if d < 2 {
        return Err(Error::Usage(format!("need d >= 2, got {d}")));
    }
    let m = d / 2;
    let big_d = 2 * m;
    let target = 3 * d * d / 4;
    Ok(CobordismChain::new(vec![
        dd_edge(d, big_d)?,
        lemma_edge(m)?,
        stabilization_edge(3 * m * m, target),
    ]))
}
