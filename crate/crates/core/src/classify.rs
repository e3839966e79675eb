//! Mixture indices, the half-swap `w` and half-reverse `r`, and orbit counting.
//!
//! Digit `d_0` is the most significant bit of `d` and sits over `E_1`; the
//! first `n-1` digits cover `E_1..E_{n-1}`, the rest `F_1..F_{n-1}`. A set bit
//! means type 1.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::freealg::GenType;

/// Largest `n` accepted by [`enumerate`].
pub const MAX_ENUMERATE_N: usize = 12;

/// `2^(2(n-1))`.
pub fn mixture_count(n: usize) -> u64 {
    1u64 << (2 * (n - 1))
}

pub fn check_range(n: usize, d: u64) -> Result<()> {
    if n < 2 || 2 * (n - 1) >= 64 {
        return Err(Error::OutOfRange {
            what: "n".into(),
            value: n as u64,
        });
    }
    if d >= mixture_count(n) {
        return Err(Error::OutOfRange {
            what: format!("d for n = {n}"),
            value: d,
        });
    }
    Ok(())
}

/// `(d_0, …, d_{2n-3})`.
pub fn digits(n: usize, d: u64) -> Result<Vec<u8>> {
    check_range(n, d)?;
    let len = 2 * (n - 1);
    Ok((0..len).map(|k| ((d >> (len - 1 - k)) & 1) as u8).collect())
}

pub fn from_digits(digits: &[u8]) -> u64 {
    digits.iter().fold(0, |acc, &b| (acc << 1) | b as u64)
}

/// Types of `E_1..E_{n-1}` followed by `F_1..F_{n-1}`.
pub fn decode(n: usize, d: u64) -> Result<Vec<GenType>> {
    Ok(digits(n, d)?
        .into_iter()
        .map(|b| if b == 1 { GenType::Type1 } else { GenType::Type2 })
        .collect())
}

/// Swaps the E half and the F half.
pub fn w_map(n: usize, d: u64) -> Result<u64> {
    let h = n - 1;
    let v = digits(n, d)?;
    let mut out = v[h..].to_vec();
    out.extend_from_slice(&v[..h]);
    Ok(from_digits(&out))
}

/// Reverses each half.
pub fn r_map(n: usize, d: u64) -> Result<u64> {
    let h = n - 1;
    let v = digits(n, d)?;
    let mut out: Vec<u8> = v[..h].iter().rev().copied().collect();
    out.extend(v[h..].iter().rev());
    Ok(from_digits(&out))
}

fn w_fast(n: usize, d: u64) -> u64 {
    let h = n - 1;
    let mask = (1u64 << h) - 1;
    ((d & mask) << h) | (d >> h)
}

fn r_fast(n: usize, d: u64) -> u64 {
    let h = n - 1;
    let mask = (1u64 << h) - 1;
    let rev = |x: u64| x.reverse_bits() >> (64 - h);
    (rev(d >> h) << h) | rev(d & mask)
}

/// `{d, r(d), w(d), r(w(d))}`, sorted.
pub fn orbit(n: usize, d: u64) -> Result<Vec<u64>> {
    check_range(n, d)?;
    Ok(orbit_unchecked(n, d))
}

fn orbit_unchecked(n: usize, d: u64) -> Vec<u64> {
    let set: BTreeSet<u64> = [d, r_fast(n, d), w_fast(n, d), r_fast(n, w_fast(n, d))]
        .into_iter()
        .collect();
    set.into_iter().collect()
}

/// `2^(n-4) (7 + (-1)^n + 2^n)`, computed as `(7 + (-1)^n + 2^n) 2^n / 16`.
pub fn z_closed(n: usize) -> u64 {
    let sign: i64 = if n.is_multiple_of(2) { 1 } else { -1 };
    let bracket = (7 + sign + (1i64 << n)) as u64;
    (bracket << n) / 16
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    /// `w(d) = d`
    pub case1: u64,
    /// `r(d) = d`
    pub case2: u64,
    /// `r(d) = w(d)`
    pub case3: u64,
    pub triple_intersection: u64,
    pub union: u64,
    pub union_complement: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub n: usize,
    pub count: u64,
    pub closed_form: u64,
    /// Burnside average of fixed points over `{id, w, r, rw}`.
    pub burnside: u64,
    pub census: Census,
    /// Present when requested; each orbit sorted, orbits ordered by minimum.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<Vec<u64>>>,
}

impl OrbitReport {
    pub fn consistent(&self) -> bool {
        self.count == self.closed_form && self.count == self.burnside
    }
}

pub fn enumerate(n: usize, list_orbits: bool) -> Result<OrbitReport> {
    if !(2..=MAX_ENUMERATE_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n for enumeration".into(),
            value: n as u64,
        });
    }
    let total = mixture_count(n);
    let (count, census) = (0..total)
        .into_par_iter()
        .map(|d| {
            let (w, r) = (w_fast(n, d), r_fast(n, d));
            let rw = r_fast(n, w);
            let rep = d.min(w).min(r).min(rw);
            let c1 = w == d;
            let c2 = r == d;
            let c3 = r == w;
            let row = Census {
                case1: c1 as u64,
                case2: c2 as u64,
                case3: c3 as u64,
                triple_intersection: (c1 && c2 && c3) as u64,
                union: (c1 || c2 || c3) as u64,
                union_complement: !(c1 || c2 || c3) as u64,
            };
            ((rep == d) as u64, row)
        })
        .reduce(
            || (0, Census::default()),
            |(a, x), (b, y)| {
                (
                    a + b,
                    Census {
                        case1: x.case1 + y.case1,
                        case2: x.case2 + y.case2,
                        case3: x.case3 + y.case3,
                        triple_intersection: x.triple_intersection + y.triple_intersection,
                        union: x.union + y.union,
                        union_complement: x.union_complement + y.union_complement,
                    },
                )
            },
        );
    // fixed points of r∘w are exactly case (3)
    let burnside = (total + census.case1 + census.case2 + census.case3) / 4;
    let orbits = list_orbits.then(|| {
        (0..total)
            .filter_map(|d| {
                let o = orbit_unchecked(n, d);
                (o[0] == d).then_some(o)
            })
            .collect()
    });
    Ok(OrbitReport {
        n,
        count,
        closed_form: z_closed(n),
        burnside,
        census,
        orbits,
    })
}

/// Census counts as stated in closed form: cases (1), (2), (3), triple intersection.
pub fn census_closed(n: usize) -> [u64; 4] {
    let case2 = if n % 2 == 1 { 1 << (n - 1) } else { 1 << n };
    let triple = if n % 2 == 1 { 1 << ((n - 1) / 2) } else { 1 << (n / 2) };
    [1 << (n - 1), case2, 1 << (n - 1), triple]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_maps_agree_with_digit_maps() {
        for n in 2..=5 {
            for d in 0..mixture_count(n) {
                assert_eq!(w_fast(n, d), w_map(n, d).unwrap());
                assert_eq!(r_fast(n, d), r_map(n, d).unwrap());
            }
        }
    }

    #[test]
    fn decode_43() {
        use GenType::*;
        assert_eq!(
            decode(4, 43).unwrap(),
            vec![Type1, Type2, Type1, Type2, Type1, Type1]
        );
    }

    #[test]
    fn range_is_checked() {
        assert!(w_map(2, 4).is_err());
        assert!(decode(3, 16).is_err());
        assert!(enumerate(13, false).is_err());
    }
}
