//! Exact integer evaluation of the closed-form saturation bounds.
//!
//! All arithmetic is on `u64` with overflow checks; nothing goes through
//! floating point.

use serde::{Deserialize, Serialize};

use crate::builders::cycle_clique_order;
use crate::error::{Error, Result};
use crate::hypergraph::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    Exact,
    LowerAndUpper,
    UpperOnly,
}

/// Which closed form produced a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundSource {
    /// Berge paths: the tree-count lower bound against the H(k, m, n) count.
    PathTreeCount,
    /// Berge matchings: l - 1 disjoint edges.
    MatchingDisjointEdges,
    /// Berge triangles: the star through one vertex.
    TriangleStar,
    /// Berge K_{1,k+1}: tight cycle plus k - 1 isolated vertices.
    StarTightCycle,
    /// Berge K_{1,m}: disjoint m-cliques.
    StarCliques,
    /// Berge cycles with k >= m - 1: edges sharing an (m-2)-set.
    CycleBook,
    /// Berge cycles with k = m - 2: (m-1)-cliques at one vertex.
    CycleCliquesEqual,
    /// Berge cycles with k <= m - 3: l- and (l+1)-cliques at one vertex.
    CycleCliques,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub kind: BoundKind,
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    pub source: BoundSource,
}

impl Bound {
    fn exact(value: u64, source: BoundSource) -> Self {
        Bound {
            kind: BoundKind::Exact,
            lower: Some(value),
            upper: Some(value),
            source,
        }
    }

    fn upper_only(value: u64, source: BoundSource) -> Self {
        Bound {
            kind: BoundKind::UpperOnly,
            lower: None,
            upper: Some(value),
            source,
        }
    }
}

/// Families with a closed-form saturation result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Matching(u64),
    Triangle,
    StarExact,
    StarUpper(u64),
    CycleUpper(u64),
}

pub fn div_ceil(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn pow2(e: u64) -> Result<u64> {
    1u64.checked_shl(e as u32)
        .filter(|_| e < 64)
        .ok_or(Error::Overflow("power of two"))
}

fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow("sum"))
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow("product"))
}

fn choose(n: u64, r: u64) -> Result<u64> {
    binomial(n, r).ok_or(Error::Overflow("binomial coefficient"))
}

fn check_uniformity(k: u64) -> Result<()> {
    if k == 5 || k < 3 {
        Err(Error::UnsupportedUniformity(k as usize))
    } else {
        Ok(())
    }
}

/// Minimum edge count of a Berge-P_m-saturated k-uniform linear tree, for
/// m >= 10.
pub fn a_km(k: u64, m: u64) -> Result<u64> {
    check_uniformity(k)?;
    if m < 10 {
        return Err(Error::OrderTooSmall {
            k: k as usize,
            m: m as usize,
            min: 10,
        });
    }
    tree_count(k, m)
}

/// Edge count of the tree construction. Agrees with [`a_km`] for m >= 10 and
/// also covers 8 <= m < 10 when k != 4.
pub fn construction_edge_count(k: u64, m: u64) -> Result<u64> {
    check_uniformity(k)?;
    let min = if k == 4 { 10 } else { 8 };
    if m < min {
        return Err(Error::OrderTooSmall {
            k: k as usize,
            m: m as usize,
            min: min as usize,
        });
    }
    tree_count(k, m)
}

fn tree_count(k: u64, m: u64) -> Result<u64> {
    let value = match k {
        3 => {
            // m = 4s + r with 1 <= r <= 4
            let s = (m - 1) / 4;
            let r = m - 4 * s;
            mul(3 + r, pow2(s)?)? - 5
        }
        4 => {
            let (s, r) = (m / 6, m % 6);
            mul(6 + r, pow2(s)?)? - 8
        }
        _ => {
            let s = m / 4;
            let terms: &[u64] = match m % 4 {
                0 => &[s + 1, s, s - 1, s - 2],
                1 => &[s + 2, s - 1],
                2 => &[s + 2, s],
                _ => &[s + 2, s + 1, s - 1],
            };
            let mut total = 0;
            for &e in terms {
                total = add(total, pow2(e)?)?;
            }
            total - 6
        }
    };
    Ok(value)
}

/// Vertex count of one tree: (k-1)|E(T)| + 1.
pub fn tree_order(k: u64, m: u64) -> Result<u64> {
    add(mul(k - 1, construction_edge_count(k, m)?)?, 1)
}

/// Edge count of H(k, m, n).
pub fn h_edge_count(k: u64, m: u64, n: u64) -> Result<u64> {
    let b = tree_order(k, m)?;
    if n < b {
        return Err(Error::TooFewVertices {
            n: n as usize,
            requirement: format!("n >= (k-1)a + 1 = {b}"),
        });
    }
    Ok(div_ceil(n - n / b, k - 1))
}

/// The lower and upper bound expressions for sat_k(n, Berge-P_m), lower
/// rounded up, without the range check on n. For auditing values outside
/// the stated range; use [`sat_path_bounds`] otherwise.
pub fn path_bound_expressions(k: u64, m: u64, n: u64) -> Result<(u64, u64)> {
    let a = a_km(k, m)?;
    let b = add(mul(k - 1, a)?, 1)?;
    if n + 2 < k {
        return Err(Error::TooFewVertices {
            n: n as usize,
            requirement: format!("n >= k - 2 = {}", k - 2),
        });
    }
    let shifted = n + 2 - k;
    let lower = div_ceil(shifted - shifted / b, k - 1);
    let upper = div_ceil(n - n / b, k - 1);
    Ok((lower, upper))
}

/// Bounds on sat_k(n, Berge-P_m) for k != 5, m >= 10, n >= (k-1)a + k - 1.
pub fn sat_path_bounds(k: u64, m: u64, n: u64) -> Result<Bound> {
    let a = a_km(k, m)?;
    let min = add(mul(k - 1, a)?, k - 1)?;
    if n < min {
        return Err(Error::TooFewVertices {
            n: n as usize,
            requirement: format!("n >= (k-1)a + k - 1 = {min}"),
        });
    }
    let (lower, upper) = path_bound_expressions(k, m, n)?;
    Ok(Bound {
        kind: BoundKind::LowerAndUpper,
        lower: Some(lower),
        upper: Some(upper),
        source: BoundSource::PathTreeCount,
    })
}

fn too_few(n: u64, requirement: String) -> Error {
    Error::TooFewVertices {
        n: n as usize,
        requirement,
    }
}

pub fn closed_form(family: Family, k: u64, n: u64) -> Result<Bound> {
    if k < 3 {
        return Err(Error::UnsupportedUniformity(k as usize));
    }
    match family {
        Family::Matching(l) => {
            if l < 1 {
                return Err(Error::ParameterRegime("matching size must be at least 1".into()));
            }
            let min = mul(k, l - 1)?;
            if n < min {
                return Err(too_few(n, format!("n >= k(l-1) = {min}")));
            }
            Ok(Bound::exact(l - 1, BoundSource::MatchingDisjointEdges))
        }
        Family::Triangle => {
            if n < k + 1 {
                return Err(too_few(n, format!("n >= k + 1 = {}", k + 1)));
            }
            Ok(Bound::exact(div_ceil(n - 1, k - 1), BoundSource::TriangleStar))
        }
        Family::StarExact => {
            let min = mul(k, k)?;
            if n < min {
                return Err(too_few(n, format!("n >= k^2 = {min}")));
            }
            Ok(Bound::exact(n - k + 1, BoundSource::StarTightCycle))
        }
        Family::StarUpper(m) => {
            if k + 1 > m {
                return Err(Error::ParameterRegime(format!("needs k <= m - 1, got k = {k}, m = {m}")));
            }
            let value = mul(div_ceil(n, m), choose(m, k)?)?;
            Ok(Bound::upper_only(value, BoundSource::StarCliques))
        }
        Family::CycleUpper(m) => cycle_upper(k, m, n),
    }
}

fn cycle_upper(k: u64, m: u64, n: u64) -> Result<Bound> {
    if m < 4 {
        return Err(Error::ParameterRegime(format!("cycle bounds need m >= 4, got {m}")));
    }
    if k + 1 >= m {
        let petal = k + 2 - m;
        let min = add(mul(m, petal)?, m - 2)?;
        if n <= min {
            return Err(too_few(n, format!("n > m(k-m+2) + m - 2 = {min}")));
        }
        return Ok(Bound::upper_only(div_ceil(n - (m - 2), petal), BoundSource::CycleBook));
    }
    if k + 2 == m {
        let ratio = cycle_keq_rational(m, n)?;
        return Ok(Bound::upper_only(div_ceil(ratio.numerator, ratio.denominator), BoundSource::CycleCliquesEqual));
    }
    let l = cycle_clique_order(k as usize, m as usize) as u64;
    let min = mul(l, l)?;
    if n < min {
        return Err(too_few(n, format!("n >= l^2 = {min} (l = {l})")));
    }
    let value = add(
        mul((n - 1) / (l - 1), choose(l, k)?)?,
        mul((n - 1) % (l - 1), choose(l, k - 1)?)?,
    )?;
    Ok(Bound::upper_only(value, BoundSource::CycleCliques))
}

/// An unreduced fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub numerator: u64,
    pub denominator: u64,
}

/// The k = m - 2 cycle bound with its remainder term r/(k-2) kept as a
/// fraction. [`closed_form`] reports the ceiling, which is what the clique
/// construction actually builds.
pub fn cycle_keq_rational(m: u64, n: u64) -> Result<Ratio> {
    if m < 5 {
        return Err(Error::ParameterRegime(format!("needs k = m - 2 >= 3, got m = {m}")));
    }
    let k = m - 2;
    let min = mul(m, m)?;
    if n < min {
        return Err(too_few(n, format!("n >= m^2 = {min}")));
    }
    let whole = mul((n - 1) / (m - 2), choose(m - 1, k)?)?;
    Ok(Ratio {
        numerator: add(mul(whole, k - 2)?, (n - 1) % (m - 2))?,
        denominator: k - 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        assert_eq!(a_km(3, 10), Ok(15));
        assert_eq!(a_km(4, 13), Ok(20));
        assert_eq!(a_km(6, 12), Ok(24));
        assert_eq!(a_km(5, 12), Err(Error::UnsupportedUniformity(5)));
        assert!(matches!(a_km(3, 9), Err(Error::OrderTooSmall { .. })));
        assert_eq!(construction_edge_count(3, 8), Ok(9));
        assert_eq!(construction_edge_count(6, 9), Ok(12));
        assert!(construction_edge_count(4, 9).is_err());
    }

    #[test]
    fn h_counts() {
        assert_eq!(h_edge_count(3, 10, 31), Ok(15));
        assert_eq!(h_edge_count(3, 10, 33), Ok(16));
        assert_eq!(h_edge_count(4, 12, 49), Ok(16));
    }

    #[test]
    fn path_bounds() {
        let b = sat_path_bounds(3, 10, 62).unwrap();
        assert_eq!((b.lower, b.upper), (Some(30), Some(30)));
        assert_eq!(path_bound_expressions(3, 10, 31), Ok((15, 15)));
        assert_eq!(path_bound_expressions(4, 12, 49), Ok((16, 16)));
        // below (k-1)a + k - 1 the guarded form refuses
        assert!(matches!(sat_path_bounds(3, 10, 31), Err(Error::TooFewVertices { .. })));
        assert!(sat_path_bounds(3, 10, 32).is_ok());
    }

    #[test]
    fn closed_forms() {
        let v = |f, k, n| closed_form(f, k, n).unwrap().upper.unwrap();
        assert_eq!(v(Family::Triangle, 3, 8), 4);
        assert_eq!(v(Family::Matching(3), 3, 9), 2);
        assert_eq!(v(Family::StarExact, 3, 9), 7);
        assert_eq!(v(Family::CycleUpper(6), 3, 17), 26);
        assert_eq!(v(Family::CycleUpper(4), 3, 7), 5);
        assert_eq!(v(Family::CycleUpper(5), 3, 26), 33);
        assert_eq!(v(Family::StarUpper(4), 3, 14), 16);
        assert_eq!(closed_form(Family::CycleUpper(6), 3, 17).unwrap().kind, BoundKind::UpperOnly);
        assert!(matches!(closed_form(Family::StarExact, 3, 8), Err(Error::TooFewVertices { .. })));
    }

    #[test]
    fn rational_remainder() {
        // k = 5, r = 2: the fraction is 2/3 but the construction needs a whole edge
        let r = cycle_keq_rational(7, 51).unwrap();
        assert_eq!(r, Ratio { numerator: 10 * 6 * 3, denominator: 3 });
        let r = cycle_keq_rational(7, 53).unwrap();
        assert_eq!((r.numerator, r.denominator), (10 * 6 * 3 + 2, 3));
        assert_eq!(closed_form(Family::CycleUpper(7), 5, 53).unwrap().upper, Some(61));
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(a_km(3, 400), Err(Error::Overflow(_))));
    }
}
