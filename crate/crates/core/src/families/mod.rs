//! The tridiagonal matrix families, their predicted spectra and the
//! parameter shifts of their induction steps.
//!
//! Every family is stored as a [`TridiagonalSpec`] for a matrix `G` whose
//! characteristic object is `P(t) = det(tI + G)`, with `t` standing for the
//! family's spectral variable `lambda(x)`.

mod coefficients;
mod params;
mod sampling;

use serde::Serialize;

use crate::algebra::Rational;
use crate::error::{Error, Result};

pub use coefficients::{QRacahPoint, Reading};
pub use params::{FamilyId, FamilyParams};
pub use sampling::{sample_params, SAMPLE_BOUND, SAMPLE_RETRIES};
pub(crate) use sampling::{small_rational, stream_seed_for_identity};

/// Tridiagonal matrix `G` given by its three diagonals.
///
/// `diag[n]` is the constant added to `t` on the diagonal of `tI + G`
/// (that is `-b_n`), `sup[n]` is `a_n` and `sub[n]` is `c_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TridiagonalSpec {
    pub dim: usize,
    pub diag: Vec<Rational>,
    pub sup: Vec<Rational>,
    pub sub: Vec<Rational>,
}

impl TridiagonalSpec {
    pub fn new(diag: Vec<Rational>, sup: Vec<Rational>, sub: Vec<Rational>) -> Result<Self> {
        let dim = diag.len();
        if dim == 0 {
            return Err(Error::BadDimension { dim, context: "tridiagonal spec".into() });
        }
        if sup.len() != dim - 1 || sub.len() != dim - 1 {
            return Err(Error::Shape(format!(
                "dim {dim} needs off-diagonals of length {}, got {} and {}",
                dim - 1,
                sup.len(),
                sub.len()
            )));
        }
        Ok(TridiagonalSpec { dim, diag, sup, sub })
    }

    /// Superdiagonal coefficient `a_n`, zero outside `0..N`.
    pub fn a(&self, n: usize) -> Rational {
        self.sup.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// Subdiagonal coefficient `c_n`, zero outside `1..=N`.
    pub fn c(&self, n: usize) -> Rational {
        match n {
            0 => Rational::zero(),
            _ => self.sub.get(n - 1).cloned().unwrap_or_else(Rational::zero),
        }
    }

    /// Whether `diag[n] = a_n + c_n` for every row.
    pub fn satisfies_ansatz(&self) -> bool {
        (0..self.dim).all(|n| self.diag[n] == self.a(n) + self.c(n))
    }
}

/// One induction step: `P_parent(t) = prod_{r in pulled}(t - r) *
/// scale^{-child_dim} * P_child(scale * (t + offset))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftSpec {
    pub pulled_roots: Vec<Rational>,
    pub scale: Rational,
    pub offset: Rational,
    pub child_params: FamilyParams,
    pub child_dim: usize,
}

fn big_n(dim: usize) -> i64 {
    dim as i64 - 1
}

fn check_dim(dim: usize, family: FamilyId) -> Result<()> {
    if dim == 0 {
        return Err(Error::BadDimension { dim, context: family.name().into() });
    }
    Ok(())
}

fn check_params(family: FamilyId, params: &FamilyParams) -> Result<()> {
    if params.family() != family {
        return Err(Error::Unsupported(format!(
            "parameters for {} passed to {family}",
            params.family()
        )));
    }
    Ok(())
}

fn ansatz(
    dim: usize,
    mut a: impl FnMut(i64) -> Result<Rational>,
    mut c: impl FnMut(i64) -> Result<Rational>,
) -> Result<TridiagonalSpec> {
    let n_max = big_n(dim);
    let sup = (0..n_max).map(&mut a).collect::<Result<Vec<_>>>()?;
    let sub = (1..=n_max).map(&mut c).collect::<Result<Vec<_>>>()?;
    let diag = (0..dim)
        .map(|n| {
            let mut d = Rational::zero();
            if n < sup.len() {
                d += &sup[n];
            }
            if n > 0 {
                d += &sub[n - 1];
            }
            d
        })
        .collect();
    TridiagonalSpec::new(diag, sup, sub)
}

/// Build the family matrix with the corrected coefficient readings.
pub fn build_matrix(family: FamilyId, dim: usize, params: &FamilyParams) -> Result<TridiagonalSpec> {
    build_matrix_with(family, dim, params, Reading::Corrected)
}

pub fn build_matrix_with(
    family: FamilyId,
    dim: usize,
    params: &FamilyParams,
    reading: Reading,
) -> Result<TridiagonalSpec> {
    check_dim(dim, family)?;
    check_params(family, params)?;
    let n = big_n(dim);
    let r = |k: i64| Rational::from(k);
    match params {
        FamilyParams::SylvesterD => TridiagonalSpec::new(
            vec![Rational::zero(); dim],
            (0..n).map(|k| r(k + 1)).collect(),
            (0..n).map(|k| r(n - k)).collect(),
        ),
        FamilyParams::SylvesterB { a } => {
            let am1 = a - Rational::one();
            TridiagonalSpec::new(
                (0..=n).map(|k| r(-k)).collect(),
                (0..n).map(|k| a * r(k + 1)).collect(),
                (0..n).map(|k| &am1 * r(n - k)).collect(),
            )
        }
        FamilyParams::SylvesterA => TridiagonalSpec::new(
            (0..=n).map(|k| r(-2 * k)).collect(),
            (0..n).map(|k| r(k + 1)).collect(),
            (0..n).map(|k| r(k - n)).collect(),
        ),
        FamilyParams::Krawtchouk { p } => ansatz(
            dim,
            |k| Ok(coefficients::krawtchouk_a(k, n, p)),
            |k| Ok(coefficients::krawtchouk_c(k, p)),
        ),
        FamilyParams::DualHahn { gamma, delta } => ansatz(
            dim,
            |k| Ok(coefficients::dual_hahn_a(k, n, gamma)),
            |k| Ok(coefficients::dual_hahn_c(k, n, delta)),
        ),
        FamilyParams::Hahn { alpha, beta } => ansatz(
            dim,
            |k| coefficients::hahn_a(k, n, alpha, beta),
            |k| coefficients::hahn_c(k, n, alpha, beta),
        ),
        FamilyParams::Racah { alpha, beta, gamma } => ansatz(
            dim,
            |k| coefficients::racah_a(k, n, alpha, beta, gamma),
            |k| coefficients::racah_c(k, n, alpha, beta, gamma),
        ),
        FamilyParams::QRacah { q, a, b, c } => {
            let pt = QRacahPoint { q: q.clone(), a: a.clone(), b: b.clone(), c: c.clone() };
            if let Some(v) = validate_params(family, dim, params).into_iter().next() {
                return Err(Error::DegenerateParams(v.0));
            }
            ansatz(dim, |k| pt.a_coeff(k, n, reading), |k| pt.c_coeff(k, n))
        }
    }
}

/// Roots `mu_0..mu_N` of the claimed closed form `P(t) = prod (t - mu_n)`.
pub fn predicted_spectrum(
    family: FamilyId,
    dim: usize,
    params: &FamilyParams,
) -> Result<Vec<Rational>> {
    check_dim(dim, family)?;
    check_params(family, params)?;
    let n = big_n(dim);
    let r = |k: i64| Rational::from(k);
    let spectrum = match params {
        FamilyParams::SylvesterD => (0..=n).map(|j| r(2 * j - n)).collect(),
        FamilyParams::SylvesterB { a } => (0..=n).map(|j| -(a * r(n - 2 * j)) + r(n - j)).collect(),
        FamilyParams::SylvesterA => vec![r(n); dim],
        FamilyParams::Krawtchouk { .. } | FamilyParams::Hahn { .. } => (0..=n).map(|k| r(-k)).collect(),
        FamilyParams::DualHahn { gamma, delta } => quadratic_spectrum(dim, &(gamma + delta)),
        FamilyParams::Racah { gamma, .. } => {
            let delta = params.racah_delta(dim).expect("racah");
            quadratic_spectrum(dim, &(gamma + delta))
        }
        FamilyParams::QRacah { q, a, b, c } => {
            if let Some(v) = validate_params(family, dim, params).into_iter().next() {
                return Err(Error::DegenerateParams(v.0));
            }
            let pt = QRacahPoint { q: q.clone(), a: a.clone(), b: b.clone(), c: c.clone() };
            (0..=n).map(|k| pt.lambda(k, n)).collect::<Result<Vec<_>>>()?
        }
    };
    Ok(spectrum)
}

/// `lambda(n) = -n (n + s + 1)` for `n = 0..dim`, where `s = gamma + delta`.
fn quadratic_spectrum(dim: usize, s: &Rational) -> Vec<Rational> {
    (0..dim as i64)
        .map(|k| -(Rational::from(k) * (s + Rational::from(k + 1))))
        .collect()
}

/// The induction step of a family at the given dimension.
pub fn shifted_family(family: FamilyId, dim: usize, params: &FamilyParams) -> Result<ShiftSpec> {
    check_params(family, params)?;
    if matches!(family, FamilyId::SylvesterA | FamilyId::Hahn | FamilyId::Racah) {
        return Err(Error::Unsupported(format!("no induction step is defined for {family}")));
    }
    if dim < family.min_step_dim() {
        return Err(Error::BadDimension {
            dim,
            context: format!("{family} induction step (needs dim >= {})", family.min_step_dim()),
        });
    }
    let n = big_n(dim);
    let one = Rational::one;
    let shift = match params {
        FamilyParams::SylvesterD => ShiftSpec {
            pulled_roots: vec![Rational::from(-n), Rational::from(n)],
            scale: one(),
            offset: Rational::zero(),
            child_params: FamilyParams::SylvesterD,
            child_dim: dim - 2,
        },
        FamilyParams::SylvesterB { a } => ShiftSpec {
            pulled_roots: vec![Rational::from(n) - a * Rational::from(n)],
            scale: one(),
            offset: -a,
            child_params: params.clone(),
            child_dim: dim - 1,
        },
        FamilyParams::Krawtchouk { .. } => ShiftSpec {
            pulled_roots: vec![Rational::zero()],
            scale: one(),
            offset: one(),
            child_params: params.clone(),
            child_dim: dim - 1,
        },
        FamilyParams::DualHahn { gamma, delta } => ShiftSpec {
            pulled_roots: vec![Rational::zero()],
            scale: one(),
            offset: gamma + delta + Rational::from(2),
            child_params: FamilyParams::DualHahn { gamma: gamma + one(), delta: delta + one() },
            child_dim: dim - 1,
        },
        FamilyParams::QRacah { q, a, b, c } => {
            if let Some(v) = validate_params(family, dim, params).into_iter().next() {
                return Err(Error::DegenerateParams(v.0));
            }
            let pt = QRacahPoint { q: q.clone(), a: a.clone(), b: b.clone(), c: c.clone() };
            ShiftSpec {
                pulled_roots: vec![Rational::zero()],
                scale: q.clone(),
                offset: pt.shift_offset(n)?,
                child_params: FamilyParams::QRacah { q: q.clone(), a: a * q, b: b.clone(), c: c * q },
                child_dim: dim - 1,
            }
        }
        FamilyParams::SylvesterA | FamilyParams::Hahn { .. } | FamilyParams::Racah { .. } => {
            unreachable!("rejected above")
        }
    };
    Ok(shift)
}

/// A violated nondegeneracy condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation(pub String);

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Every nondegeneracy condition the family needs at this dimension that
/// fails. An empty list means the parameters are usable.
pub fn validate_params(family: FamilyId, dim: usize, params: &FamilyParams) -> Vec<Violation> {
    let mut out = Vec::new();
    if dim == 0 {
        out.push(Violation("dim must be at least 1".into()));
        return out;
    }
    if params.family() != family {
        out.push(Violation(format!("parameters belong to {}", params.family())));
        return out;
    }
    let n = big_n(dim);
    match params {
        FamilyParams::Hahn { alpha, beta } | FamilyParams::Racah { alpha, beta, .. } => {
            let s = alpha + beta;
            let mut check = |k: i64, off: i64, label: &str| {
                if (&s + Rational::from(2 * k + off)).is_zero() {
                    out.push(Violation(format!("2·{k}+α+β{label} = 0")));
                }
            };
            for k in 0..n {
                check(k, 1, "+1");
                check(k, 2, "+2");
            }
            for k in 1..=n {
                check(k, 0, "");
                check(k, 1, "+1");
            }
            out.dedup();
        }
        FamilyParams::QRacah { q, a, b, c } => {
            if q.is_zero() || q.abs().is_one() {
                out.push(Violation(format!("q = {q} lies in {{0, 1, -1}}")));
                return out;
            }
            if b.is_zero() {
                out.push(Violation("b = 0".into()));
            }
            if c.is_zero() {
                out.push(Violation("c = 0".into()));
            }
            let ab = a * b;
            for k in 1..=2 * n + 2 {
                if (&ab * q.pow(k)).is_one() {
                    out.push(Violation(format!("ab·q^{k} = 1")));
                }
            }
        }
        _ => {}
    }
    out
}

/// Text describing what `t` stands for, with numeric parameters substituted.
pub fn lambda_description(dim: usize, params: &FamilyParams) -> String {
    match params {
        FamilyParams::SylvesterD | FamilyParams::SylvesterB { .. } | FamilyParams::SylvesterA => {
            "t = x".into()
        }
        FamilyParams::Krawtchouk { .. } | FamilyParams::Hahn { .. } => "t = λ(x) = -x".into(),
        FamilyParams::DualHahn { gamma, delta } => {
            let s = gamma + delta + Rational::one();
            format!("t = λ(x) = -x(x + γ + δ + 1) = -x(x + {s})")
        }
        FamilyParams::Racah { gamma, .. } => {
            let delta = params.racah_delta(dim).expect("racah");
            let s = gamma + &delta + Rational::one();
            format!("t = λ(x) = -x(x + γ + δ + 1) = -x(x + {s}), δ = -N-1-β = {delta}")
        }
        FamilyParams::QRacah { q, b, c, .. } => {
            let d = if q.is_zero() || b.is_zero() {
                "undefined".to_string()
            } else {
                (q.pow(-big_n(dim) - 1) / b).to_string()
            };
            format!("t = λ(x) = -(1 - q^(-x))(1 - q^(x+1)·c·d), q = {q}, c = {c}, d = q^(-N-1)/b = {d}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn sylvester_d_dim3() {
        let s = build_matrix(FamilyId::SylvesterD, 3, &FamilyParams::SylvesterD).unwrap();
        assert_eq!(s.diag, ints(&[0, 0, 0]));
        assert_eq!(s.sup, ints(&[1, 2]));
        assert_eq!(s.sub, ints(&[2, 1]));
    }

    #[test]
    fn krawtchouk_dim2() {
        let s = build_matrix(FamilyId::Krawtchouk, 2, &FamilyParams::Krawtchouk { p: rat(1, 3) })
            .unwrap();
        assert_eq!(s.diag, vec![rat(1, 3), rat(2, 3)]);
        assert_eq!(s.sup, vec![rat(1, 3)]);
        assert_eq!(s.sub, vec![rat(2, 3)]);
    }

    #[test]
    fn krawtchouk_matches_displayed_diagonal() {
        let p = rat(2, 7);
        let dim = 6;
        let s = build_matrix(FamilyId::Krawtchouk, dim, &FamilyParams::Krawtchouk { p: p.clone() })
            .unwrap();
        let n = Rational::from(dim - 1);
        for k in 0..dim {
            let expect = &p * &n + Rational::from(k) * (Rational::one() - rat(2, 1) * &p);
            assert_eq!(s.diag[k], expect);
        }
    }

    #[test]
    fn dual_hahn_matches_displayed_entries() {
        let (g, d) = (rat(1, 2), rat(1, 3));
        let dim = 5;
        let n = (dim - 1) as i64;
        let s = build_matrix(
            FamilyId::DualHahn,
            dim,
            &FamilyParams::DualHahn { gamma: g.clone(), delta: d.clone() },
        )
        .unwrap();
        let r = |k: i64| Rational::from(k);
        for k in 0..=n {
            // N(γ+2k+1) - k(γ-δ+2k)
            let expect = r(n) * (&g + r(2 * k + 1)) - r(k) * (&g - &d + r(2 * k));
            assert_eq!(s.diag[k as usize], expect, "row {k}");
        }
        assert_eq!(s.sup[0], r(n) * (&g + r(1)));
        assert_eq!(s.sub[0], r(n) + &d);
        assert_eq!(s.sub[(n - 1) as usize], r(n) * (&d + r(1)));
    }

    #[test]
    fn sylvester_a_is_scaled_b() {
        let dim = 5;
        let a = build_matrix(FamilyId::SylvesterA, dim, &FamilyParams::SylvesterA).unwrap();
        let b = build_matrix(FamilyId::SylvesterB, dim, &FamilyParams::SylvesterB { a: rat(1, 2) })
            .unwrap();
        let two = rat(2, 1);
        assert!(a.diag.iter().zip(&b.diag).all(|(x, y)| *x == y * &two));
        assert!(a.sup.iter().zip(&b.sup).all(|(x, y)| *x == y * &two));
        assert!(a.sub.iter().zip(&b.sub).all(|(x, y)| *x == y * &two));
    }

    #[test]
    fn ansatz_identity_holds() {
        for family in FamilyId::ALL.into_iter().filter(|f| f.is_ansatz()) {
            for dim in 1..7 {
                let p = sample_params(family, dim, 11).unwrap();
                let s = build_matrix(family, dim, &p).unwrap();
                assert!(s.satisfies_ansatz(), "{family} dim {dim}");
            }
        }
    }

    #[test]
    fn qracah_degenerate() {
        let p = FamilyParams::QRacah { q: rat(1, 2), a: rat(4, 1), b: rat(1, 1), c: rat(1, 7) };
        assert!(matches!(
            build_matrix(FamilyId::QRacah, 3, &p),
            Err(Error::DegenerateParams(_))
        ));
    }

    #[test]
    fn bad_dimension() {
        assert!(matches!(
            build_matrix(FamilyId::SylvesterD, 0, &FamilyParams::SylvesterD),
            Err(Error::BadDimension { .. })
        ));
    }

    #[test]
    fn spectra() {
        assert_eq!(
            predicted_spectrum(FamilyId::SylvesterD, 3, &FamilyParams::SylvesterD).unwrap(),
            ints(&[-2, 0, 2])
        );
        let k = FamilyParams::Krawtchouk { p: rat(5, 9) };
        assert_eq!(predicted_spectrum(FamilyId::Krawtchouk, 4, &k).unwrap(), ints(&[0, -1, -2, -3]));
        let q = FamilyParams::QRacah { q: rat(1, 2), a: rat(1, 3), b: rat(1, 5), c: rat(1, 7) };
        let spec = predicted_spectrum(FamilyId::QRacah, 3, &q).unwrap();
        assert_eq!(spec[0], Rational::zero());
        assert_eq!(spec[1], rat(-3, 7));
    }

    #[test]
    fn shift_examples() {
        let dh = FamilyParams::DualHahn { gamma: rat(1, 2), delta: rat(1, 3) };
        let s = shifted_family(FamilyId::DualHahn, 4, &dh).unwrap();
        assert_eq!(s.child_params, FamilyParams::DualHahn { gamma: rat(3, 2), delta: rat(4, 3) });
        assert_eq!(s.pulled_roots, vec![Rational::zero()]);
        assert_eq!(s.scale, Rational::one());
        assert_eq!(s.offset, rat(17, 6));

        let k = FamilyParams::Krawtchouk { p: rat(1, 3) };
        let s = shifted_family(FamilyId::Krawtchouk, 3, &k).unwrap();
        assert_eq!(s.child_params, k);
        assert_eq!(s.offset, Rational::one());

        let q = FamilyParams::QRacah { q: rat(1, 2), a: rat(1, 3), b: rat(1, 5), c: rat(1, 7) };
        let s = shifted_family(FamilyId::QRacah, 3, &q).unwrap();
        assert_eq!(
            s.child_params,
            FamilyParams::QRacah { q: rat(1, 2), a: rat(1, 6), b: rat(1, 5), c: rat(1, 14) }
        );
        assert_eq!(s.scale, rat(1, 2));
        assert_eq!(s.offset, rat(3, 7));
        assert_eq!(s.child_dim + s.pulled_roots.len(), 3);

        let d = shifted_family(FamilyId::SylvesterD, 5, &FamilyParams::SylvesterD).unwrap();
        assert_eq!(d.child_dim + d.pulled_roots.len(), 5);
    }

    #[test]
    fn shift_errors() {
        assert!(matches!(
            shifted_family(FamilyId::SylvesterA, 4, &FamilyParams::SylvesterA),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            shifted_family(FamilyId::SylvesterD, 2, &FamilyParams::SylvesterD),
            Err(Error::BadDimension { .. })
        ));
        let k = FamilyParams::Krawtchouk { p: rat(1, 3) };
        assert!(matches!(
            shifted_family(FamilyId::Krawtchouk, 1, &k),
            Err(Error::BadDimension { .. })
        ));
    }

    #[test]
    fn validation_examples() {
        let h = FamilyParams::Hahn { alpha: rat(0, 1), beta: rat(-1, 1) };
        let v = validate_params(FamilyId::Hahn, 2, &h);
        assert_eq!(v, vec![Violation("2·0+α+β+1 = 0".into())]);

        let k = FamilyParams::Krawtchouk { p: rat(7, 2) };
        assert!(validate_params(FamilyId::Krawtchouk, 5, &k).is_empty());

        let q = FamilyParams::QRacah { q: rat(1, 1), a: rat(1, 3), b: rat(1, 5), c: rat(1, 7) };
        let v = validate_params(FamilyId::QRacah, 4, &q);
        assert_eq!(v.len(), 1);
        assert!(v[0].0.contains("q = 1"));

        let q = FamilyParams::QRacah { q: rat(1, 2), a: rat(4, 1), b: rat(1, 1), c: rat(1, 7) };
        assert!(!validate_params(FamilyId::QRacah, 3, &q).is_empty());
    }
}
