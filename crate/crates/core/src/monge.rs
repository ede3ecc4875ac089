//! Parabolic Monge-form surface germs and their closed-form invariants.

use std::fmt;
use std::sync::LazyLock;

use thiserror::Error;

use crate::jet::{Axis, Jet2};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MongeError {
    #[error("not a parabolic Monge jet: a_{0}{1} must vanish")]
    NotParabolicMonge(u32, u32),
    #[error("umbilic point: a_02 = 0")]
    Umbilic,
    #[error("degree bound {0} is too small (need at least 3)")]
    BoundTooSmall(u32),
    #[error("a_30 = 0: the discriminant is not a quadratic in gamma_3")]
    ZeroA30,
    #[error("no real root: Q_D4 < 0")]
    NoRealRoot,
    #[error("square root of an irrational quantity is not representable")]
    NestedRadical,
    #[error("the cubic matrix [[a_30, a_21], [a_21, a_12]] vanishes")]
    ZeroCubicMatrix,
}

static ZERO: LazyLock<Scalar> = LazyLock::new(Scalar::zero);

/// A validated germ `z = f(x, y)` with `a_20 = a_11 = 0`, `a_02 != 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct MongeSurface {
    jet: Jet2,
    // a_ij in derivative convention, indexed by i * (bound + 1) + j
    table: Vec<Scalar>,
}

impl MongeSurface {
    pub fn new(jet: Jet2) -> Result<Self, MongeError> {
        let k = jet.bound();
        if k < 3 {
            return Err(MongeError::BoundTooSmall(k));
        }
        for (i, j) in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)] {
            if !jet.monomial_coeff(i, j).is_zero() {
                return Err(MongeError::NotParabolicMonge(i, j));
            }
        }
        if jet.monomial_coeff(0, 2).is_zero() {
            return Err(MongeError::Umbilic);
        }
        let n = k as usize + 1;
        let mut table = vec![Scalar::zero(); n * n];
        for (i, j, a) in jet.coeffs() {
            table[i as usize * n + j as usize] = a;
        }
        Ok(MongeSurface { jet, table })
    }

    /// Convenience constructor from `(i, j, a_ij)` triples.
    pub fn from_coeffs<I>(bound: u32, coeffs: I) -> Result<Self, crate::Error>
    where
        I: IntoIterator<Item = (u32, u32, Scalar)>,
    {
        let jet = Jet2::from_coeffs(bound, coeffs)?;
        Ok(MongeSurface::new(jet)?)
    }

    pub fn jet(&self) -> &Jet2 {
        &self.jet
    }

    pub fn bound(&self) -> u32 {
        self.jet.bound()
    }

    /// `a_ij`; zero above the degree bound.
    pub fn a(&self, i: u32, j: u32) -> &Scalar {
        let k = self.bound();
        if i + j > k {
            return &ZERO;
        }
        &self.table[i as usize * (k as usize + 1) + j as usize]
    }

    pub fn invariants(&self) -> InvariantSet {
        InvariantSet::of(self)
    }

    /// `DC_f(γ3)`, the discriminant of the cubic part of `f − γ`, as a
    /// quadratic in `γ3`.
    pub fn cubic_discriminant_poly(&self) -> DcfQuadratic {
        let a = |i, j| self.a(i, j);
        let (a30, a21, a12, a03) = (a(3, 0), a(2, 1), a(1, 2), a(0, 3));
        let n = |v: i64| Scalar::from_int(v);
        let b = &(&(&n(2) * &(&a30.pow(2) * a03)) - &(&n(6) * &(&(a30 * a21) * a12))) + &(&n(4) * &a21.pow(3));
        let c = &(&(&(&(&a30.pow(2) * &a03.pow(2)) - &(&n(6) * &(&(&(a30 * a21) * a12) * a03)))
            + &(&n(4) * &(a30 * &a12.pow(3))))
            + &(&n(4) * &(&a21.pow(3) * a03)))
            - &(&n(3) * &(&a21.pow(2) * &a12.pow(2)));
        let w = Scalar::ratio(1, 48);
        DcfQuadratic {
            c2: -&(&a30.pow(2) * &w),
            c1: &b * &w,
            c0: -&(&c * &w),
        }
    }

    /// Real roots of `DC_f(γ3) = 0` from the quadratic formula, each paired
    /// with the literal closed-form value for the same branch `ε`.
    pub fn dcf_roots(&self) -> Result<Vec<DcfRoot>, MongeError> {
        let a30 = self.a(3, 0);
        if a30.is_zero() {
            return Err(MongeError::ZeroA30);
        }
        let q = self.invariants().q_d4;
        if q.is_negative() {
            return Err(MongeError::NoRealRoot);
        }
        let poly = self.cubic_discriminant_poly();
        let disc = poly.discriminant();
        let disc_r = disc.to_rational().ok_or(MongeError::NestedRadical)?;
        let root_disc = Scalar::sqrt_of(disc_r).ok_or(MongeError::NoRealRoot)?;
        let q_r = q.to_rational().ok_or(MongeError::NestedRadical)?;
        let root_q = Scalar::sqrt_of(q_r).ok_or(MongeError::NoRealRoot)?;
        let q32 = &q * &root_q;

        let two_c2 = &poly.c2 * &Scalar::from_int(2);
        let center = &(-&poly.c1) / &two_c2;
        let a = |i, j| self.a(i, j);
        let (a21, a12, a03) = (a(2, 1), a(1, 2), a(0, 3));
        let literal_base = &(&(&Scalar::from_int(2) * &a21.pow(3)) - &(&Scalar::from_int(3) * &(&(a12 * a21) * a30)))
            + &(a03 * &a30.pow(2));
        let a30sq = a30.pow(2);

        if root_disc.is_zero() {
            let literal = &literal_base / &a30sq;
            return Ok(vec![DcfRoot {
                epsilon: 0,
                closed_form_agrees: literal == center,
                closed_form: literal,
                value: center,
            }]);
        }
        let mut out = Vec::with_capacity(2);
        for eps in [1i8, -1] {
            let offset = &root_disc / &two_c2;
            // pick the root on the ε side of the vertex
            let cand_plus = &center + &offset;
            let value = if (&cand_plus - &center).is_positive() == (eps > 0) {
                cand_plus
            } else {
                &center - &offset
            };
            let signed = if eps > 0 { q32.clone() } else { -&q32 };
            let literal = &(&literal_base + &signed) / &a30sq;
            out.push(DcfRoot {
                epsilon: eps,
                closed_form_agrees: literal == value,
                closed_form: literal,
                value,
            });
        }
        Ok(out)
    }

    /// Kernel of `M3 = [[a_30, a_21], [a_21, a_12]]`.
    pub fn cubic_kernel(&self) -> Result<CubicKernel, MongeError> {
        let (a30, a21, a12) = (self.a(3, 0), self.a(2, 1), self.a(1, 2));
        if a30.is_zero() && a21.is_zero() && a12.is_zero() {
            return Err(MongeError::ZeroCubicMatrix);
        }
        let det = &(a30 * a12) - &a21.pow(2);
        if !det.is_zero() {
            return Ok(CubicKernel::Trivial);
        }
        let (mut g0, mut g1) = if a21.is_zero() && a30.is_zero() {
            (Scalar::one(), Scalar::zero())
        } else {
            (-a21, a30.clone())
        };
        let lead = if g0.is_zero() { &g1 } else { &g0 };
        if lead.is_negative() {
            g0 = -&g0;
            g1 = -&g1;
        }
        let factor = if a30.is_zero() {
            None
        } else {
            Some(KernelFactor {
                s: a30.inv(),
                xi: -a21,
                eta: a30.clone(),
            })
        };
        Ok(CubicKernel::Line {
            generator: (g0, g1),
            factor,
        })
    }

    /// `K̃ = f_xx f_yy − f_xy²`, whose zero set is the parabolic curve.
    pub fn parabolic_function(&self) -> Jet2 {
        let fx = self.jet.partial(Axis::X);
        let fy = self.jet.partial(Axis::Y);
        let fxx = fx.partial(Axis::X);
        let fyy = fy.partial(Axis::Y);
        let fxy = fx.partial(Axis::Y);
        &(&fxx * &fyy) - &(&fxy * &fxy)
    }
}

impl fmt::Debug for MongeSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MongeSurface({})", self.jet)
    }
}

/// `c2·γ² + c1·γ + c0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DcfQuadratic {
    pub c2: Scalar,
    pub c1: Scalar,
    pub c0: Scalar,
}

impl DcfQuadratic {
    pub fn evaluate(&self, g: &Scalar) -> Scalar {
        &(&(&self.c2 * g) + &self.c1) * g + &self.c0
    }

    pub fn discriminant(&self) -> Scalar {
        &self.c1.pow(2) - &(&Scalar::from_int(4) * &(&self.c2 * &self.c0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DcfRoot {
    /// `+1`/`−1` for the branch above/below the vertex, `0` for a double root.
    pub epsilon: i8,
    pub value: Scalar,
    /// `(2a21³ − 3a12a21a30 + a03a30² + ε·Q_D4^{3/2}) / a30²`
    pub closed_form: Scalar,
    pub closed_form_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelFactor {
    pub s: Scalar,
    pub xi: Scalar,
    pub eta: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum CubicKernel {
    Trivial,
    Line {
        generator: (Scalar, Scalar),
        /// `M3 = s·[[η², −ξη], [−ξη, ξ²]]`, present when `a_30 != 0`.
        factor: Option<KernelFactor>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSet {
    pub q_d4: Scalar,
    pub q_e6: Scalar,
    pub q_e7: Scalar,
    pub q_e8: Scalar,
    pub q_estar: Scalar,
    pub r_a3: Scalar,
    pub r_a4: Scalar,
    pub r_a5: Scalar,
    pub r_a6: Scalar,
    pub s_d4: Scalar,
}

impl InvariantSet {
    pub fn of(s: &MongeSurface) -> Self {
        let a = |i: u32, j: u32| s.a(i, j).clone();
        let n = |v: i64| Scalar::from_int(v);
        let (a02, a30, a21, a12, a03) = (a(0, 2), a(3, 0), a(2, 1), a(1, 2), a(0, 3));
        let (a40, a31, a22, a13, a04) = (a(4, 0), a(3, 1), a(2, 2), a(1, 3), a(0, 4));
        let (a50, a41, a32, a23, a14, a05) = (a(5, 0), a(4, 1), a(3, 2), a(2, 3), a(1, 4), a(0, 5));
        let (a60, a51) = (a(6, 0), a(5, 1));
        let a70 = a(7, 0);
        let p = |x: &Scalar, e: u32| x.pow(e);

        let q_d4 = p(&a21, 2) - &a12 * &a30;

        let q_e6 = &a40 * &p(&a21, 4) - n(4) * &a31 * &a30 * p(&a21, 3) + n(6) * &a22 * p(&a30, 2) * p(&a21, 2)
            - n(4) * &a13 * p(&a30, 3) * &a21
            + &a04 * &p(&a30, 4);

        let q_e7 = -(&a40 * &p(&a21, 3)) + n(3) * &a31 * &a30 * p(&a21, 2) - n(3) * &a22 * p(&a30, 2) * &a21
            + &a13 * &p(&a30, 3);

        let q_e8 = n(10) * p(&a21, 2) * &a23 * p(&a30, 3) - n(5) * &a14 * &a21 * p(&a30, 4) + &a05 * &p(&a30, 5)
            - n(10) * p(&a21, 3) * p(&a30, 2) * &a32
            + n(5) * p(&a21, 4) * &a30 * &a41
            - p(&a21, 5) * &a50;

        let q_estar = -(n(3) * p(&a21, 4) * p(&a40, 2)) + p(&a21, 3) * (n(12) * &a31 * &a40 + &a21 * &a50) * &a30
            - n(2) * p(&a21, 2) * (n(6) * p(&a31, 2) + n(3) * &a22 * &a40 + n(2) * &a21 * &a41) * p(&a30, 2)
            + n(6) * &a21 * (n(2) * &a22 * &a31 + &a21 * &a32) * p(&a30, 3)
            + (-(n(3) * p(&a22, 2)) - n(4) * &a21 * &a23) * p(&a30, 4)
            + &a14 * &p(&a30, 5);

        let r_a3 = -(n(3) * p(&a21, 2)) + &a02 * &a40;

        let r_a4 = -(n(10) * &a21 * &a31 * &a40) + n(5) * &a12 * p(&a40, 2) + n(3) * p(&a21, 2) * &a50;

        let r_a5 = n(150) * &a21 * p(&a31, 2) * p(&a40, 2) - n(225) * &a21 * &a22 * p(&a40, 3)
            + n(25) * &a03 * p(&a40, 4)
            + n(225) * p(&a21, 2) * p(&a40, 2) * &a41
            - n(180) * p(&a21, 2) * &a31 * &a40 * &a50
            + n(54) * p(&a21, 3) * p(&a50, 2)
            - n(45) * p(&a21, 3) * &a40 * &a60;

        let r_a6 = n(756) * p(&a21, 3) * p(&a50, 3)
            - n(315) * p(&a21, 2) * &a50 * (n(10) * &a31 * &a50 + n(3) * &a21 * &a60) * &a40
            + n(75)
                * &a21
                * (n(56) * p(&a31, 2) * &a50
                    + n(21) * &a21 * &a31 * &a60
                    + n(3) * &a21 * (n(14) * &a41 * &a50 + &a21 * &a70))
                * p(&a40, 2)
            - n(175)
                * (n(10) * p(&a31, 3) + n(30) * &a21 * &a31 * &a41 + n(9) * &a21 * (&a22 * &a50 + &a21 * &a51))
                * p(&a40, 3)
            + n(2625) * (&a22 * &a31 + &a21 * &a32) * p(&a40, 4)
            - n(875) * &a13 * p(&a40, 5);

        let s_d4 = n(4) * &a03 * &a21 - n(3) * p(&a12, 2);

        InvariantSet {
            q_d4,
            q_e6,
            q_e7,
            q_e8,
            q_estar,
            r_a3,
            r_a4,
            r_a5,
            r_a6,
            s_d4,
        }
    }

    /// `(name, value)` pairs in a fixed order.
    pub fn named(&self) -> [(&'static str, &Scalar); 10] {
        [
            ("Q_D4", &self.q_d4),
            ("Q_E6", &self.q_e6),
            ("Q_E7", &self.q_e7),
            ("Q_E8", &self.q_e8),
            ("Q_Estar", &self.q_estar),
            ("R_A3", &self.r_a3),
            ("R_A4", &self.r_a4),
            ("R_A5", &self.r_a5),
            ("R_A6", &self.r_a6),
            ("S_D4", &self.s_d4),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(coeffs: &[(u32, u32, i64)]) -> MongeSurface {
        MongeSurface::from_coeffs(7, coeffs.iter().map(|&(i, j, v)| (i, j, Scalar::from_int(v)))).unwrap()
    }

    #[test]
    fn validation() {
        assert!(MongeSurface::from_coeffs(7, [(0, 2, Scalar::one()), (3, 0, Scalar::one())]).is_ok());
        let e = MongeSurface::new(Jet2::from_coeffs(7, [(0, 2, Scalar::one()), (2, 0, Scalar::one())]).unwrap());
        assert_eq!(e.unwrap_err(), MongeError::NotParabolicMonge(2, 0));
        let e = MongeSurface::new(Jet2::from_coeffs(7, [(3, 0, Scalar::one())]).unwrap());
        assert_eq!(e.unwrap_err(), MongeError::Umbilic);
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(
            surf(&[(0, 2, 1), (2, 1, 1), (3, 0, 1)]).invariants().q_d4,
            Scalar::one()
        );
        assert_eq!(
            surf(&[(0, 2, 1), (1, 3, 1), (3, 0, 1)]).invariants().q_e7,
            Scalar::one()
        );
        assert_eq!(
            surf(&[(0, 2, 1), (2, 1, 1), (4, 0, 1), (5, 0, 1)]).invariants().r_a4,
            Scalar::from_int(3)
        );
    }

    #[test]
    fn discriminant_quadratic() {
        let s = surf(&[(0, 2, 1), (3, 0, 1), (1, 2, -1)]);
        let p = s.cubic_discriminant_poly();
        assert_eq!(p.c2, Scalar::ratio(-1, 48));
        assert_eq!(p.c1, Scalar::zero());
        assert_eq!(p.c0, Scalar::ratio(4, 48));
        let roots = s.dcf_roots().unwrap();
        let vals: Vec<_> = roots.iter().map(|r| r.value.clone()).collect();
        assert_eq!(vals, vec![Scalar::from_int(2), Scalar::from_int(-2)]);
        // the literal closed form lands on ±1
        assert_eq!(roots[0].closed_form, Scalar::one());
        assert!(!roots[0].closed_form_agrees);

        let s = surf(&[(0, 2, 1), (3, 0, 1), (1, 2, 1)]);
        assert_eq!(s.dcf_roots().unwrap_err(), MongeError::NoRealRoot);
    }

    #[test]
    fn kernel_examples() {
        let s = surf(&[(0, 2, 1), (3, 0, 1)]);
        match s.cubic_kernel().unwrap() {
            CubicKernel::Line { generator, factor } => {
                assert_eq!(generator, (Scalar::zero(), Scalar::one()));
                let f = factor.unwrap();
                assert_eq!((f.s, f.xi, f.eta), (Scalar::one(), Scalar::zero(), Scalar::one()));
            }
            k => panic!("{k:?}"),
        }
        let s = surf(&[(0, 2, 1), (3, 0, 1), (2, 1, 1), (1, 2, 1)]);
        match s.cubic_kernel().unwrap() {
            CubicKernel::Line { generator, .. } => {
                assert_eq!(generator, (Scalar::one(), Scalar::from_int(-1)))
            }
            k => panic!("{k:?}"),
        }
        let s = surf(&[(0, 2, 1), (0, 3, 1)]);
        assert_eq!(s.cubic_kernel().unwrap_err(), MongeError::ZeroCubicMatrix);
    }

    #[test]
    fn parabolic_gradient() {
        let s = surf(&[(0, 2, 3), (3, 0, 2), (2, 1, 5), (1, 2, 7)]);
        let k = s.parabolic_function();
        assert_eq!(k.coeff(1, 0), Scalar::from_int(6));
        assert_eq!(k.coeff(0, 1), Scalar::from_int(15));
    }
}
