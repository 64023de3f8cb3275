//! Exact intersection numbers on two-stage projective bundle towers
//! P(V) -> P(E) -> B with B a curve, computed by symbolic reduction in the
//! Chow ring. This is the independent cross-check for every closed-form
//! top self-intersection the constructors emit: the closed forms never
//! feed back into it.

use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::constructors::ScrollFamily;
use crate::error::FamilyError;

/// Element of the rational Chow ring of P(E) over a curve, E of rank r.
/// Basis h^i and h^i f for 0 <= i < r, with f^2 = 0 and
/// h^r = deg(E) h^(r-1) f, hence h^(r+1) = 0.
#[derive(Clone, Debug, PartialEq)]
struct Ruled {
    r: usize,
    p: Vec<BigRational>,
    q: Vec<BigRational>,
}

impl Ruled {
    fn zero(r: usize) -> Self {
        Ruled {
            r,
            p: vec![BigRational::zero(); r],
            q: vec![BigRational::zero(); r],
        }
    }

    fn one(r: usize) -> Self {
        let mut out = Ruled::zero(r);
        out.p[0] = BigRational::one();
        out
    }

    /// The divisor class x_hs h + x_f f. For r = 1 the bundle is a line
    /// bundle and h itself is already deg(E) f.
    fn class(r: usize, deg_e: &BigRational, x_hs: &BigRational, x_f: &BigRational) -> Self {
        let mut out = Ruled::zero(r);
        out.q[0] = x_f.clone();
        if r >= 2 {
            out.p[1] = x_hs.clone();
        } else {
            out.q[0] += x_hs * deg_e;
        }
        out
    }

    fn add_assign(&mut self, other: &Ruled) {
        for i in 0..self.r {
            self.p[i] += &other.p[i];
            self.q[i] += &other.q[i];
        }
    }

    fn scaled(&self, c: &BigRational) -> Ruled {
        Ruled {
            r: self.r,
            p: self.p.iter().map(|v| v * c).collect(),
            q: self.q.iter().map(|v| v * c).collect(),
        }
    }

    fn mul(&self, other: &Ruled, deg_e: &BigRational) -> Ruled {
        let r = self.r;
        let mut out = Ruled::zero(r);
        for i in 0..r {
            if self.p[i].is_zero() && self.q[i].is_zero() {
                continue;
            }
            for j in 0..r {
                let k = i + j;
                let pp = &self.p[i] * &other.p[j];
                if !pp.is_zero() {
                    if k < r {
                        out.p[k] += &pp;
                    } else if k == r {
                        // h^r folds onto h^(r-1) f; higher powers vanish.
                        out.q[r - 1] += pp * deg_e;
                    }
                }
                if k < r {
                    out.q[k] += &self.p[i] * &other.q[j] + &self.q[i] * &other.p[j];
                }
            }
        }
        out
    }

    /// Integral over P(E): the coefficient of h^(r-1) f.
    fn integral(&self) -> BigRational {
        self.q[self.r - 1].clone()
    }
}

/// Product of `factors` divisor classes on X = P(V), where V is the direct
/// sum of the line bundles O(d_i h + a_i f) on P(E) and E has rank `rank`
/// and degree `deg_e` on the base curve. Each factor is a triple
/// (x_H, x_h, x_f) of coefficients in the tautological class of V, the
/// pulled-back tautological class of E, and the fibre of B. The number of
/// factors must equal dim X = rank + #summands - 1.
pub fn tower_product(
    rank: u64,
    deg_e: &BigRational,
    summands: &[(i64, BigRational)],
    factors: &[(BigRational, BigRational, BigRational)],
) -> Result<BigRational, FamilyError> {
    if rank == 0 {
        return Err(FamilyError::RankRange("first stage needs rank >= 1".into()));
    }
    let r = usize::try_from(rank)
        .map_err(|_| FamilyError::RankRange("first stage rank too large".into()))?;
    let m = summands.len();
    if m == 0 {
        return Err(FamilyError::ParamRange("need at least one summand".into()));
    }
    let dim = r + m - 1;
    if factors.len() != dim {
        return Err(FamilyError::ParamRange(format!(
            "expected {} factors for a {}-dimensional total space, got {}",
            dim,
            dim,
            factors.len()
        )));
    }

    // Chern classes of V by multiplying out (1 + L_i): cherns[k] = c_k(V).
    let mut cherns = vec![Ruled::one(r)];
    for (d, a) in summands {
        let l = Ruled::class(r, deg_e, &BigRational::from_integer((*d).into()), a);
        let mut next = Vec::with_capacity(cherns.len() + 1);
        next.push(cherns[0].clone());
        for k in 1..=cherns.len() {
            let mut v = if k < cherns.len() {
                cherns[k].clone()
            } else {
                Ruled::zero(r)
            };
            v.add_assign(&cherns[k - 1].mul(&l, deg_e));
            next.push(v);
        }
        cherns = next;
    }

    // state[j] is the coefficient of H^j; H^m reduces through
    // H^m = sum_{k=1}^{m} (-1)^(k+1) c_k H^(m-k).
    let mut state = vec![Ruled::zero(r); m];
    state[0] = Ruled::one(r);
    for (x_cap, x_hs, x_f) in factors {
        let w = Ruled::class(r, deg_e, x_hs, x_f);
        let mut next = vec![Ruled::zero(r); m];
        for j in 0..m {
            next[j].add_assign(&state[j].mul(&w, deg_e));
            let shifted = state[j].scaled(x_cap);
            if j + 1 < m {
                next[j + 1].add_assign(&shifted);
            } else {
                for k in 1..=m {
                    let fold = shifted.mul(&cherns[k], deg_e);
                    if k % 2 == 1 {
                        next[m - k].add_assign(&fold);
                    } else {
                        next[m - k].add_assign(&fold.scaled(&-BigRational::one()));
                    }
                }
            }
        }
        state = next;
    }
    Ok(state[m - 1].integral())
}

/// Top self-intersection of a single divisor class on the tower.
pub fn tower_top_power(
    rank: u64,
    deg_e: &BigRational,
    summands: &[(i64, BigRational)],
    class: &(BigRational, BigRational, BigRational),
) -> Result<BigRational, FamilyError> {
    let dim = (rank as usize + summands.len()).saturating_sub(1);
    tower_product(rank, deg_e, summands, &vec![class.clone(); dim])
}

/// Top self-intersection of x_H H + x_h h + x_f f on the total space of a
/// scroll family, computed in the tower ring.
pub fn tower_intersection(
    scroll: &ScrollFamily,
    x_cap: &BigRational,
    x_hs: &BigRational,
    x_f: &BigRational,
) -> BigRational {
    let summands: Vec<(i64, BigRational)> = scroll
        .fiber_degrees()
        .iter()
        .copied()
        .zip(scroll.twists().iter().cloned())
        .collect();
    tower_top_power(
        2,
        scroll.bundle().degree(),
        &summands,
        &(x_cap.clone(), x_hs.clone(), x_f.clone()),
    )
    .expect("validated scroll data is dimensionally consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn one_summand_tower_collapses_to_the_base() {
        // P(O(d h + a f)) over P(E) is P(E) itself with H = d h + a f, so
        // H^2 = d^2 deg(E) + 2 d a.
        for (e, d, a) in [(2i64, 3i64, 2i64), (5, 1, -1), (1, 2, 0)] {
            let got = tower_top_power(2, &rat(e), &[(d, rat(a))], &(rat(1), rat(0), rat(0)))
                .unwrap();
            assert_eq!(got, rat(d * d * e + 2 * d * a));
        }
    }

    #[test]
    fn first_stage_alone_recovers_the_bundle_degree() {
        // Trivial second stage over a rank-r first stage: h^r = deg(E).
        for r in 1..5u64 {
            let got = tower_top_power(r, &rat(7), &[(1, rat(0))], &(rat(1), rat(0), rat(0)))
                .unwrap();
            assert_eq!(got, rat(7));
        }
    }

    #[test]
    fn fibre_classes_square_to_zero() {
        let got = tower_top_power(2, &rat(3), &[(2, rat(1)), (1, rat(0))], &(rat(0), rat(0), rat(1)))
            .unwrap();
        assert_eq!(got, rat(0));
        let mixed = tower_product(
            2,
            &rat(3),
            &[(2, rat(1)), (1, rat(0))],
            &[
                (rat(1), rat(0), rat(0)),
                (rat(1), rat(0), rat(0)),
                (rat(0), rat(0), rat(1)),
            ],
        )
        .unwrap();
        // H^2 f is the fibre degree of the rank-2 scroll: d_1 + d_2.
        assert_eq!(mixed, rat(3));
    }

    #[test]
    fn factor_count_must_match_the_dimension() {
        let err = tower_product(2, &rat(1), &[(1, rat(0))], &[(rat(1), rat(0), rat(0))])
            .unwrap_err();
        assert!(matches!(err, FamilyError::ParamRange(_)));
    }
}
