//! Inequalities that any 1-Lipschitz concordance invariant must satisfy on
//! the cobordisms built by the engine.

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use super::lipschitz::LipschitzInvariant;
use crate::algebra::rational::{frac, rat, ser_rational, Rational};
use crate::cobordism::{band_sum_edge, stabilization_edge, theorem1_chain, CobordismChain};
use crate::error::{Error, Result};
use crate::torus::TorusLink;

/// Genus of a connected cobordism from its Euler characteristic and the
/// number of boundary components: `chi = 2 - 2g - b`.
pub fn chain_genus(chain: &CobordismChain) -> Result<i64> {
    let (Some(s), Some(t)) = (chain.source(), chain.target()) else {
        return Err(Error::Usage("empty chain".into()));
    };
    let b = (s.components() + t.components()) as i64;
    let twice = 2 - b - chain.chi();
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Verification {
            step: chain.describe(),
            detail: format!("chi {} with {b} boundary components gives no genus", chain.chi()),
        });
    }
    Ok(twice / 2)
}

/// Extends a chain so both ends are knots: `T(d,d)` at the source is
/// reached from `T(d,d+1)` by `d - 1` bands, and an even `T(2,N)` at the
/// target is stabilized once more to `T(2,N+1)`.
pub fn knotify(chain: &CobordismChain) -> Result<CobordismChain> {
    let (Some(s), Some(t)) = (chain.source(), chain.target()) else {
        return Err(Error::Usage("empty chain".into()));
    };
    let mut edges = Vec::with_capacity(chain.edges.len() + 2);
    if !s.is_knot() {
        let d = s.q();
        if s.is_unlink() || s.p().abs() != d {
            return Err(Error::Usage(format!("cannot knot-ify source {s}")));
        }
        let e = band_sum_edge(d, d + 1, d)?;
        edges.push(if s.is_mirror() { e.mirrored() } else { e });
    }
    edges.extend(chain.edges.iter().cloned());
    if !t.is_knot() {
        let n = if t.is_unlink() && t.q() == 2 {
            0
        } else if t.p().abs() == 2 {
            t.q() * t.p().signum()
        } else {
            return Err(Error::Usage(format!("cannot knot-ify target {t}")));
        };
        // one band joins the two components; at n = 0 this gives the unknot
        edges.push(stabilization_edge(n, if n < 0 { n - 1 } else { n + 1 }));
    }
    Ok(CobordismChain::new(edges))
}

#[derive(Debug, Clone, Serialize)]
pub struct LipschitzReport {
    pub invariant: String,
    pub source: TorusLink,
    pub target: TorusLink,
    pub chi: i64,
    pub genus: i64,
    #[serde(serialize_with = "ser_rational")]
    pub source_value: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub target_value: Rational,
    /// `|I(source) - I(target)|`.
    #[serde(serialize_with = "ser_rational")]
    pub difference: Rational,
    pub pass: bool,
}

/// Verifies the chain and checks `|I(source) - I(target)| <= genus`.
/// Both ends must already be knots (see [`knotify`]).
pub fn check_lipschitz_on_chain(
    inv: &dyn LipschitzInvariant,
    chain: &CobordismChain,
) -> Result<LipschitzReport> {
    let (Some(source), Some(target)) = (chain.source(), chain.target()) else {
        return Err(Error::Usage("empty chain".into()));
    };
    for end in [source, target] {
        if !end.is_knot() {
            return Err(Error::Usage(format!(
                "chain end {end} is not a knot; knot-ify the chain first"
            )));
        }
    }
    let chi = chain.verify()?;
    let genus = chain_genus(chain)?;
    let source_value = inv.value_on(source)?;
    let target_value = inv.value_on(target)?;
    let difference = (&source_value - &target_value).abs();
    Ok(LipschitzReport {
        invariant: inv.name(),
        source,
        target,
        chi,
        genus,
        pass: difference <= rat(genus),
        source_value,
        target_value,
        difference,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Eq4Report {
    pub invariant: String,
    pub d: i64,
    pub n: i64,
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub slack: Rational,
    pub pass: bool,
}

/// Given a connected cobordism `T(d,d) -> T(2,n+1)` of Euler characteristic
/// `n - (d-1)^2` (`n` even), compares
/// `1 + I(T(d,d+1))/g4(T(d,d+1))` against `(n + 2 I(T(2,n+1))) / ((d-1)d)`.
pub fn eq4_check(
    d: i64,
    n: i64,
    inv: &dyn LipschitzInvariant,
    chain_chi: i64,
) -> Result<Eq4Report> {
    if d < 2 {
        return Err(Error::Usage(format!(
            "need d >= 2 so that g4(T(d,d+1)) > 0, got {d}"
        )));
    }
    if n < 0 || n % 2 != 0 {
        return Err(Error::Usage(format!("n must be even and nonnegative, got {n}")));
    }
    let expected = n - (d - 1) * (d - 1);
    if chain_chi != expected {
        return Err(Error::Usage(format!(
            "cobordism must have chi = n - (d-1)^2 = {expected}, got {chain_chi}"
        )));
    }
    let g4 = frac((d - 1) * d, 2);
    let lhs = rat(1) + inv.value_on(TorusLink::new(d, d + 1)?)? / g4;
    let rhs = (rat(n) + rat(2) * inv.value_on(TorusLink::two(n + 1))?) / rat((d - 1) * d);
    let slack = &lhs - &rhs;
    Ok(Eq4Report {
        invariant: inv.name(),
        d,
        n,
        pass: !slack.is_negative(),
        lhs,
        rhs,
        slack,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Cor13Report {
    pub invariant: String,
    pub d: i64,
    /// `floor(3d^2/4)`.
    #[serde(rename = "N")]
    pub n: i64,
    /// `T(2,N)` or `T(2,N+1)`, whichever is a knot.
    pub knot: TorusLink,
    pub chain: CobordismChain,
    pub chi: i64,
    pub genus: i64,
    /// `ceil((-chi(d) + d - 1)/2)` with `chi(d)` the constructive value.
    pub genus_formula: i64,
    #[serde(serialize_with = "ser_rational")]
    pub value_knot: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub value_torus: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub difference: Rational,
    /// `I(T(d,d+1)) / g4(T(d,d+1))`.
    #[serde(serialize_with = "ser_rational")]
    pub ratio: Rational,
    pub pass: bool,
}

/// Builds `T(d,d+1) -> T(d,d) -> T(2,N) [-> T(2,N+1)]` from engine edges and
/// checks the Lipschitz bound across it.
pub fn corollary13_check(d: i64, inv: &dyn LipschitzInvariant) -> Result<Cor13Report> {
    if d < 2 {
        return Err(Error::Usage(format!("need d >= 2, got {d}")));
    }
    let core = theorem1_chain(d)?;
    let chi_d = core.verify()?;
    let n = 3 * d * d / 4;
    let mut edges = vec![band_sum_edge(d, d + 1, d)?];
    edges.extend(core.edges);
    if n % 2 == 0 {
        edges.push(stabilization_edge(n, n + 1));
    }
    let chain = CobordismChain::new(edges);
    let lip = check_lipschitz_on_chain(inv, &chain)?;
    let genus_formula = (-chi_d + d).div_euclid(2);
    let ratio = &lip.source_value / frac((d - 1) * d, 2);
    Ok(Cor13Report {
        invariant: lip.invariant,
        d,
        n,
        knot: lip.target,
        chi: lip.chi,
        genus: lip.genus,
        genus_formula,
        pass: lip.pass && lip.genus == genus_formula,
        value_knot: lip.target_value,
        value_torus: lip.source_value,
        difference: lip.difference,
        ratio,
        chain,
    })
}

/// [`corollary13_check`] for `d = 2..=d_max`, in order of `d`.
pub fn corollary13_grid(d_max: i64, inv: &dyn LipschitzInvariant) -> Result<Vec<Cor13Report>> {
    (2..=d_max)
        .into_par_iter()
        .map(|d| corollary13_check(d, inv))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobordism::{dd_edge, lemma_edge};
    use crate::invariants::SignatureInvariant;

    fn t(p: i64, q: i64) -> TorusLink {
        TorusLink::new(p, q).unwrap()
    }

    #[test]
    fn identity_chain() {
        let chain = CobordismChain::new(vec![stabilization_edge(5, 5)]);
        let r = check_lipschitz_on_chain(&SignatureInvariant, &chain).unwrap();
        assert_eq!((r.chi, r.genus), (0, 0));
        assert_eq!(r.difference, rat(0));
        assert!(r.pass);
    }

    #[test]
    fn stabilization_chain() {
        let chain = CobordismChain::new(vec![stabilization_edge(3, 7)]);
        let r = check_lipschitz_on_chain(&SignatureInvariant, &chain).unwrap();
        assert_eq!((r.chi, r.genus), (-4, 2));
        assert_eq!(r.difference, rat(2));
        assert!(r.pass);
    }

    #[test]
    fn non_knot_ends_rejected() {
        let chain = theorem1_chain(6).unwrap();
        assert!(matches!(
            check_lipschitz_on_chain(&SignatureInvariant, &chain),
            Err(Error::Usage(_))
        ));
        let k = knotify(&chain).unwrap();
        assert_eq!(k.source(), Some(t(6, 7)));
        assert_eq!(k.target(), Some(TorusLink::two(27)));
        assert!(check_lipschitz_on_chain(&SignatureInvariant, &k).unwrap().pass);
    }

    #[test]
    fn knotify_even_target_and_mirror() {
        let chain = CobordismChain::new(vec![dd_edge(4, 4).unwrap(), lemma_edge(2).unwrap()]);
        let k = knotify(&chain).unwrap();
        assert_eq!(k.target(), Some(TorusLink::two(13)));
        assert_eq!(k.verify().unwrap(), -3 - 8 - 1);
        let m = knotify(&chain.mirrored()).unwrap();
        assert_eq!(m.source(), Some(t(-4, 5)));
        assert_eq!(m.target(), Some(TorusLink::two(-13)));
        assert!(check_lipschitz_on_chain(&SignatureInvariant, &m).unwrap().pass);
    }

    #[test]
    fn knotify_two_component_unlink() {
        let chain = CobordismChain::new(vec![stabilization_edge(3, 0)]);
        let k = knotify(&chain).unwrap();
        assert!(k.target().unwrap().is_unknot());
        assert_eq!(k.verify().unwrap(), -4);
        assert!(check_lipschitz_on_chain(&SignatureInvariant, &k).unwrap().pass);
    }

    #[test]
    fn genus_of_link_cobordism() {
        let chain = CobordismChain::new(vec![dd_edge(4, 4).unwrap(), lemma_edge(2).unwrap()]);
        // chi = -8 between a 4-component and a 2-component link
        assert_eq!(chain_genus(&chain).unwrap(), 2);
    }

    #[test]
    fn eq4_examples() {
        let r = eq4_check(2, 0, &SignatureInvariant, -1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (rat(2), rat(0)));
        assert!(r.pass);
        let r = eq4_check(4, 10, &SignatureInvariant, 1).unwrap();
        assert_eq!(r.lhs, frac(5, 3));
        assert_eq!(r.rhs, frac(5, 3));
        assert_eq!(r.slack, rat(0));
        assert!(r.pass);
        let r = eq4_check(6, 20, &SignatureInvariant, -5).unwrap();
        assert_eq!(r.rhs, frac(4, 3));
        // sigma(T(6,7)) = -18
        assert_eq!(r.lhs, frac(8, 5));
        assert!(r.pass);
    }

    #[test]
    fn eq4_errors() {
        let inv = SignatureInvariant;
        assert!(matches!(eq4_check(1, 0, &inv, 0), Err(Error::Usage(_))));
        assert!(matches!(eq4_check(4, 9, &inv, 0), Err(Error::Usage(_))));
        assert!(matches!(eq4_check(4, 10, &inv, 0), Err(Error::Usage(_))));
    }

    #[test]
    fn corollary13_examples() {
        let r = corollary13_check(2, &SignatureInvariant).unwrap();
        assert_eq!((r.n, r.knot), (3, TorusLink::two(3)));
        assert_eq!((r.chi, r.genus, r.genus_formula), (-4, 2, 2));
        assert_eq!(r.difference, rat(0));
        assert!(r.pass);

        let r = corollary13_check(4, &SignatureInvariant).unwrap();
        assert_eq!((r.n, r.knot), (12, TorusLink::two(13)));
        assert_eq!(r.value_knot, rat(6));
        assert_eq!(r.value_torus, rat(4));
        assert_eq!(r.difference, rat(2));
        assert_eq!(r.genus, 6);
        assert!(r.pass);

        let r = corollary13_check(5, &SignatureInvariant).unwrap();
        assert_eq!((r.n, r.knot), (18, TorusLink::two(19)));
        assert_eq!(r.genus, r.genus_formula);
        assert!(r.pass);
    }
}
