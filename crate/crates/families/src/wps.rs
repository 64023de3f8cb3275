//! Families of weighted hypersurfaces over a rational base: a hypersurface
//! of weighted degree d in P(a) x B, polarized by e times the tautological
//! class plus a base twist. These are the families with arbitrarily small
//! slope, so they sit on the far side of every constructor in this crate.

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use slope_theorems::ratio::bigint_json;
use slope_theorems::{FamilyFlags, FamilyInvariants, FamilyParams};
use wps_ring::{cartier_index, graded_dim, WeightVector};

use crate::error::FamilyError;

/// Degree-d hypersurface family in P(a) x B over a rational curve B,
/// polarized by L = e H + (base twist), with h scaling the tautological
/// part of the pushforward and l the twist part. The defining class must
/// be Cartier, i.e. the Cartier index of the weights must divide d.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "WpsRaw", into = "WpsRaw")]
pub struct WpsHypersurfaceFamily {
    weights: WeightVector,
    d: BigInt,
    e: BigInt,
    h: BigInt,
    l: BigInt,
}

#[derive(Serialize, Deserialize)]
struct WpsRaw {
    weights: WeightVector,
    #[serde(with = "bigint_json")]
    d: BigInt,
    #[serde(with = "bigint_json")]
    e: BigInt,
    #[serde(with = "bigint_json")]
    h: BigInt,
    #[serde(with = "bigint_json")]
    l: BigInt,
}

impl TryFrom<WpsRaw> for WpsHypersurfaceFamily {
    type Error = FamilyError;

    fn try_from(raw: WpsRaw) -> Result<Self, FamilyError> {
        WpsHypersurfaceFamily::new(raw.weights, raw.d, raw.e, raw.h, raw.l)
    }
}

impl From<WpsHypersurfaceFamily> for WpsRaw {
    fn from(f: WpsHypersurfaceFamily) -> WpsRaw {
        WpsRaw {
            weights: f.weights,
            d: f.d,
            e: f.e,
            h: f.h,
            l: f.l,
        }
    }
}

impl WpsHypersurfaceFamily {
    pub fn new(
        weights: WeightVector,
        d: BigInt,
        e: BigInt,
        h: BigInt,
        l: BigInt,
    ) -> Result<Self, FamilyError> {
        if weights.len() < 3 {
            return Err(FamilyError::ParamRange(
                "need at least three weights for positive fiber dimension".into(),
            ));
        }
        if !d.is_positive() || !e.is_positive() || !h.is_positive() {
            return Err(FamilyError::ParamRange(
                "degrees d, e and the scale h must be positive".into(),
            ));
        }
        if l.is_negative() {
            return Err(FamilyError::ParamRange(
                "base twist l must be nonnegative".into(),
            ));
        }
        if !weights.is_well_formed() {
            return Err(FamilyError::NotWellFormed);
        }
        if !d.is_multiple_of(&cartier_index(&weights)) {
            return Err(FamilyError::AssumptionViolated(
                "hypersurface degree must be a multiple of the Cartier index".into(),
            ));
        }
        if e.to_usize().is_none() {
            return Err(FamilyError::ParamRange(
                "polarization degree e too large to tabulate sections".into(),
            ));
        }
        let fam = WpsHypersurfaceFamily { weights, d, e, h, l };
        if !fam.section_count().is_positive() {
            return Err(FamilyError::AssumptionViolated(
                "polarization has no sections on the fiber".into(),
            ));
        }
        Ok(fam)
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn degree(&self) -> &BigInt {
        &self.d
    }

    pub fn polarization_degree(&self) -> &BigInt {
        &self.e
    }

    /// h0 of the polarization on a fiber: monomials of degree e minus the
    /// multiples of the defining equation.
    pub fn section_count(&self) -> BigInt {
        let s_e = BigInt::from(graded_dim(&self.weights, &self.e));
        let s_lower = BigInt::from(graded_dim(&self.weights, &(&self.e - &self.d)));
        s_e - s_lower
    }

    /// Sign of d - |a|: positive degrees put the fiber canonical class on
    /// the ample side.
    pub fn kodaira_sign(&self) -> std::cmp::Ordering {
        self.d.cmp(&self.weights.total())
    }

    /// Whether the polarization is the relative canonical class: the
    /// fiberwise part matches adjunction and the twist parts agree.
    pub fn is_relative_canonical(&self) -> bool {
        self.e == &self.d - self.weights.total() && self.h == self.l
    }
}

/// Full invariant record. The finiteness witness at q = 1 is emitted as
/// claimed data so the slope checks evaluate; the honest Cartier witness
/// is computed from the weights.
pub fn wps_family(fam: &WpsHypersurfaceFamily) -> FamilyInvariants {
    let a = &fam.weights;
    let n = (a.len() - 2) as u32;
    let product = a.product();
    let e_n = (&fam.e).pow(n);
    let e_n1 = &e_n * &fam.e;
    let s_lower = BigInt::from(graded_dim(a, &(&fam.e - &fam.d)));
    let h0 = fam.section_count();

    let np1 = BigInt::from(n + 1);
    let top = BigRational::new(&e_n1 * &fam.l + np1 * &e_n * &fam.h * &fam.d, product.clone());
    let push = BigRational::from_integer(&fam.h * &h0 + &fam.l * &s_lower);
    let fiber_top = BigRational::new(&e_n * &fam.d, product);

    let cartier = cartier_index(a);
    let witness = &cartier / cartier.gcd(&fam.e);

    FamilyInvariants {
        n,
        top_self: top,
        push_deg: push,
        h0,
        fiber_top,
        flags: FamilyFlags {
            l_nef: true,
            push_nef: true,
            gen_finite_at_q: Some(BigInt::one()),
            lf_cartier_gg_at_q: Some(witness),
            birational: false,
            kodaira_nonneg: fam.kodaira_sign() != std::cmp::Ordering::Less,
            curve_special: false,
            canonical_sings: false,
        },
        params: FamilyParams::default(),
    }
}

/// Slope of the hypersurface data without the well-formedness and Cartier
/// checks, for weight vectors that fail them but still have a meaningful
/// section count.
pub fn hypersurface_slope_closed_form(
    weights: Vec<BigInt>,
    d: &BigInt,
    e: &BigInt,
    h: &BigInt,
    l: &BigInt,
) -> Result<BigRational, FamilyError> {
    let a = WeightVector::new(weights).map_err(|err| FamilyError::ParamRange(err.to_string()))?;
    if a.len() < 3 {
        return Err(FamilyError::ParamRange(
            "need at least three weights for positive fiber dimension".into(),
        ));
    }
    if !d.is_positive() || !e.is_positive() || !h.is_positive() || l.is_negative() {
        return Err(FamilyError::ParamRange(
            "need d, e, h positive and l nonnegative".into(),
        ));
    }
    if e.to_usize().is_none() {
        return Err(FamilyError::ParamRange(
            "polarization degree e too large to tabulate sections".into(),
        ));
    }
    let n = (a.len() - 2) as u32;
    let s_e = BigInt::from(graded_dim(&a, e));
    let s_lower = BigInt::from(graded_dim(&a, &(e - d)));
    let h0 = &s_e - &s_lower;
    if !h0.is_positive() {
        return Err(FamilyError::AssumptionViolated(
            "polarization has no sections on the fiber".into(),
        ));
    }
    let e_n = e.pow(n);
    let np1 = BigInt::from(n + 1);
    let top = &e_n * e * l + np1 * &e_n * h * d;
    let push = (h * h0 + l * s_lower) * a.product();
    Ok(BigRational::new(top, push))
}

/// Closed form for the slope when e = 1 and d >= 2: with c unit weights,
/// slope = ((n+1) d + l/h) / (c prod a). Agrees with the general formula
/// because the section count is then exactly c.
pub fn wps_special_slope(fam: &WpsHypersurfaceFamily) -> Result<BigRational, FamilyError> {
    if !fam.e.is_one() {
        return Err(FamilyError::ParamRange(
            "closed form needs polarization degree e = 1".into(),
        ));
    }
    if fam.d <= BigInt::one() {
        return Err(FamilyError::ParamRange(
            "closed form needs hypersurface degree d >= 2".into(),
        ));
    }
    let units = fam
        .weights
        .weights()
        .iter()
        .filter(|w| w.is_one())
        .count();
    if units == 0 {
        return Err(FamilyError::ParamRange(
            "closed form needs at least one unit weight".into(),
        ));
    }
    let n = (fam.weights.len() - 2) as u32;
    let np1 = BigInt::from(n + 1);
    let numer = np1 * &fam.d * &fam.h + &fam.l;
    let denom = BigInt::from(units) * fam.weights.product() * &fam.h;
    Ok(BigRational::new(numer, denom))
}

/// Weighted hypersurfaces (1, 1, alpha, ..., alpha), degree m alpha,
/// polarized by the unit class: slope ((n+1) m alpha + 1) / (2 alpha^n),
/// which decays like alpha^(1-n), so no uniform positive lower bound can
/// exist without extra hypotheses.
pub fn vanishing_slope_family(
    n: u32,
    alpha: u64,
    m: u64,
) -> Result<WpsHypersurfaceFamily, FamilyError> {
    let degree = BigInt::from(alpha) * BigInt::from(m);
    if n == 0 || alpha == 0 || m == 0 || degree < BigInt::from(2) {
        return Err(FamilyError::ParamRange(
            "need n >= 1, alpha, m >= 1 and m alpha >= 2".into(),
        ));
    }
    let mut w = vec![BigInt::one(), BigInt::one()];
    w.extend(std::iter::repeat(BigInt::from(alpha)).take(n as usize));
    let weights = WeightVector::new(w).expect("weights are positive");
    WpsHypersurfaceFamily::new(weights, degree, BigInt::one(), BigInt::one(), BigInt::one())
}

/// Weighted hypersurfaces (1, ..., 1, 2, n+3) of degree 2(n+3): slope
/// (n+1)/n + 1/(2n(n+3)), just above the reference value (n+1)/n. Well
/// formed only for n >= 2; the n = 1 slope is still available through
/// `hypersurface_slope_closed_form`.
pub fn near_extremal_family(n: u32) -> Result<WpsHypersurfaceFamily, FamilyError> {
    if n == 0 {
        return Err(FamilyError::ParamRange("need n >= 1".into()));
    }
    let mut w = vec![BigInt::one(); n as usize];
    w.push(BigInt::from(2));
    w.push(BigInt::from(u64::from(n) + 3));
    let weights = WeightVector::new(w).expect("weights are positive");
    WpsHypersurfaceFamily::new(
        weights,
        BigInt::from(2 * (u64::from(n) + 3)),
        BigInt::one(),
        BigInt::one(),
        BigInt::one(),
    )
}

/// A family built on the Sylvester sequence s_0 = 2, s_{k+1} = s_k^2 - s_k + 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SylvesterFamily {
    /// s_0, ..., s_n.
    pub terms: Vec<BigInt>,
    pub family: WpsHypersurfaceFamily,
    pub slope: BigRational,
}

/// Hypersurfaces of degree 3(s_n - 1) in weights (1, 1, 3 b_0, ..., 3 b_{n-1})
/// with b_i = (s_n - 1)/s_i. The unit-fraction identity of the Sylvester
/// sequence gives |a| + 1 = d, so the fibers always sit just above the
/// canonical threshold while the slope decays superexponentially in n.
pub fn sylvester_family(n: u32) -> Result<SylvesterFamily, FamilyError> {
    if n == 0 {
        return Err(FamilyError::ParamRange("need n >= 1".into()));
    }
    let mut terms = vec![BigInt::from(2)];
    for _ in 0..n {
        let last = terms.last().unwrap();
        terms.push(last * last - last + BigInt::one());
    }
    let top_term = terms.last().unwrap();
    let scale = top_term - BigInt::one();
    let mut w = vec![BigInt::one(), BigInt::one()];
    for s in &terms[..n as usize] {
        w.push(BigInt::from(3) * (&scale / s));
    }
    let weights = WeightVector::new(w).expect("weights are positive");
    let family = WpsHypersurfaceFamily::new(
        weights,
        BigInt::from(3) * &scale,
        BigInt::one(),
        BigInt::one(),
        BigInt::one(),
    )?;
    let slope = wps_special_slope(&family)?;
    Ok(SylvesterFamily {
        terms,
        family,
        slope,
    })
}

/// Surface family probing the doubled section bound: weights
/// (1, 1, alpha k, beta k), degree alpha beta k, polarized in degree k.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdProbe {
    pub family: WpsHypersurfaceFamily,
    pub invariants: FamilyInvariants,
    pub slope: BigRational,
    /// The doubled reference value 4 (k-1)/(k+1); operative exactly when
    /// the fibers have nonnegative Kodaira dimension.
    pub threshold: BigRational,
    /// Whether the fiber polarization is Cartier, which holds when
    /// alpha, beta, k are pairwise coprime.
    pub fiber_polarization_cartier: bool,
}

/// slope = k/(alpha beta (k+1)) + 3k/(k+1), to be measured against the
/// doubled bound 4 (k-1)/(k+1): the gap can be as small as 1/36 while the
/// bound still fails, so the doubled constant is sharp against this
/// family only through its extra hypotheses.
pub fn threshold_probe(alpha: u64, beta: u64, k: u64) -> Result<ThresholdProbe, FamilyError> {
    if alpha < 2 || beta < 2 || k < 1 {
        return Err(FamilyError::ParamRange(
            "need alpha, beta >= 2 and k >= 1".into(),
        ));
    }
    let weights = WeightVector::new(vec![
        BigInt::one(),
        BigInt::one(),
        BigInt::from(alpha) * BigInt::from(k),
        BigInt::from(beta) * BigInt::from(k),
    ])
    .expect("weights are positive");
    let family = WpsHypersurfaceFamily::new(
        weights,
        BigInt::from(alpha) * BigInt::from(beta) * BigInt::from(k),
        BigInt::from(k),
        BigInt::one(),
        BigInt::one(),
    )?;
    let invariants = wps_family(&family);
    let slope = invariants.slope().expect("positive pushforward degree");
    let threshold = BigRational::new(
        BigInt::from(4) * BigInt::from(k - 1),
        BigInt::from(k) + BigInt::one(),
    );
    let coprime = |x: u64, y: u64| BigInt::from(x).gcd(&BigInt::from(y)).is_one();
    Ok(ThresholdProbe {
        family,
        invariants,
        slope,
        threshold,
        fiber_polarization_cartier: coprime(alpha, beta) && coprime(alpha, k) && coprime(beta, k),
    })
}
