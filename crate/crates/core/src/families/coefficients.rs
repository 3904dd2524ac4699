//! Recurrence coefficients `a_n` (superdiagonal) and `c_n` (subdiagonal) of
//! the families whose diagonal is fixed by `b_n = -a_n - c_n`.

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Which transcription of a coefficient formula to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// The reading that the determinant oracle confirms.
    #[default]
    Corrected,
    /// The formula exactly as printed, kept so its failure stays reproducible.
    PaperLiteral,
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn quotient(num: Rational, den: Rational, what: impl FnOnce() -> String) -> Result<Rational> {
    num.checked_div(&den)
        .ok_or_else(|| Error::DegenerateParams(what()))
}

pub(crate) fn krawtchouk_a(n: i64, big_n: i64, p: &Rational) -> Rational {
    p * r(big_n - n)
}

pub(crate) fn krawtchouk_c(n: i64, p: &Rational) -> Rational {
    r(n) * (Rational::one() - p)
}

pub(crate) fn dual_hahn_a(n: i64, big_n: i64, gamma: &Rational) -> Rational {
    r(big_n - n) * (gamma + r(n + 1))
}

pub(crate) fn dual_hahn_c(n: i64, big_n: i64, delta: &Rational) -> Rational {
    r(n) * (delta + r(big_n - n + 1))
}

pub(crate) fn hahn_a(n: i64, big_n: i64, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let s = alpha + beta;
    let num = (&s + r(n + 1)) * (alpha + r(n + 1)) * r(big_n - n);
    let den = (&s + r(2 * n + 1)) * (&s + r(2 * n + 2));
    quotient(num, den, || format!("hahn a_{n}: (2n+α+β+1)(2n+α+β+2) = 0"))
}

pub(crate) fn hahn_c(n: i64, big_n: i64, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let s = alpha + beta;
    let num = r(n) * (&s + r(n + big_n + 1)) * (beta + r(n));
    let den = (&s + r(2 * n)) * (&s + r(2 * n + 1));
    quotient(num, den, || format!("hahn c_{n}: (2n+α+β)(2n+α+β+1) = 0"))
}

pub(crate) fn racah_a(
    n: i64,
    big_n: i64,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Result<Rational> {
    let s = alpha + beta;
    let num = (alpha + r(n + 1)) * (&s + r(n + 1)) * (gamma + r(n + 1)) * r(big_n - n);
    let den = (&s + r(2 * n + 1)) * (&s + r(2 * n + 2));
    quotient(num, den, || format!("racah a_{n}: (2n+α+β+1)(2n+α+β+2) = 0"))
}

pub(crate) fn racah_c(
    n: i64,
    big_n: i64,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Result<Rational> {
    let s = alpha + beta;
    let num = -(r(n) * (&s + r(n + big_n + 1)) * (&s - gamma + r(n)) * (beta + r(n)));
    let den = (&s + r(2 * n)) * (&s + r(2 * n + 1));
    quotient(num, den, || format!("racah c_{n}: (2n+α+β)(2n+α+β+1) = 0"))
}

/// A point `(q, a, b, c)` of q-Racah parameter space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QRacahPoint {
    pub q: Rational,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl QRacahPoint {
    fn ab_q(&self, k: i64) -> Rational {
        &self.a * &self.b * self.q.pow(k)
    }

    fn one_minus(x: Rational) -> Rational {
        Rational::one() - x
    }

    fn check_q(&self) -> Result<()> {
        if self.q.is_zero() {
            return Err(Error::DegenerateParams("q-racah: q = 0".into()));
        }
        Ok(())
    }

    /// Superdiagonal coefficient
    /// `a_n = (1-ab q^{n+1})(1-a q^{n+1})(1-q^{n-N})(1-c q^{n+1}) / ((1-ab q^{2n+1})(1-ab q^{2n+2}))`.
    ///
    /// [`Reading::PaperLiteral`] replaces the factor `(1-a q^{n+1})` with
    /// `(1-q^{n+1})`, which breaks the closed-form spectrum for every `N >= 1`.
    pub fn a_coeff(&self, n: i64, big_n: i64, reading: Reading) -> Result<Rational> {
        self.check_q()?;
        let q = &self.q;
        let second = match reading {
            Reading::Corrected => &self.a * q.pow(n + 1),
            Reading::PaperLiteral => q.pow(n + 1),
        };
        let num = Self::one_minus(self.ab_q(n + 1))
            * Self::one_minus(second)
            * Self::one_minus(q.pow(n - big_n))
            * Self::one_minus(&self.c * q.pow(n + 1));
        let den = Self::one_minus(self.ab_q(2 * n + 1)) * Self::one_minus(self.ab_q(2 * n + 2));
        quotient(num, den, || {
            format!("q-racah a_{n}: (1-abq^{{2n+1}})(1-abq^{{2n+2}}) = 0")
        })
    }

    /// Subdiagonal coefficient
    /// `c_n = (c q^{-N}/b)(1-q^n)(1-b q^n)(1-ab c^{-1} q^n)(1-ab q^{n+N+1}) / ((1-ab q^{2n})(1-ab q^{2n+1}))`.
    pub fn c_coeff(&self, n: i64, big_n: i64) -> Result<Rational> {
        self.check_q()?;
        let q = &self.q;
        if self.b.is_zero() {
            return Err(Error::DegenerateParams("q-racah: b = 0".into()));
        }
        let ab_over_c = (&self.a * &self.b)
            .checked_div(&self.c)
            .ok_or_else(|| Error::DegenerateParams("q-racah: c = 0".into()))?;
        let prefactor = &self.c * q.pow(-big_n) / &self.b;
        let num = prefactor
            * Self::one_minus(q.pow(n))
            * Self::one_minus(&self.b * q.pow(n))
            * Self::one_minus(ab_over_c * q.pow(n))
            * Self::one_minus(self.ab_q(n + big_n + 1));
        let den = Self::one_minus(self.ab_q(2 * n)) * Self::one_minus(self.ab_q(2 * n + 1));
        quotient(num, den, || {
            format!("q-racah c_{n}: (1-abq^{{2n}})(1-abq^{{2n+1}}) = 0")
        })
    }

    /// `d = q^{-N-1} / b`, from `b d q = q^{-N}`.
    pub fn d(&self, big_n: i64) -> Result<Rational> {
        self.check_q()?;
        self.q
            .pow(-big_n - 1)
            .checked_div(&self.b)
            .ok_or_else(|| Error::DegenerateParams("q-racah: b = 0".into()))
    }

    /// `lambda(x) = -(1 - q^{-x})(1 - q^{x+1} c d)` at integer `x`.
    pub fn lambda(&self, x: i64, big_n: i64) -> Result<Rational> {
        let cd = &self.c * self.d(big_n)?;
        Ok(-(Self::one_minus(self.q.pow(-x)) * Self::one_minus(self.q.pow(x + 1) * cd)))
    }

    /// Offset `1 + c/(b q^N) - 1/q - c q/(b q^N)` relating the parent
    /// spectral variable to the child's.
    pub fn shift_offset(&self, big_n: i64) -> Result<Rational> {
        self.check_q()?;
        if self.b.is_zero() {
            return Err(Error::DegenerateParams("q-racah: b = 0".into()));
        }
        let bqn = &self.b * self.q.pow(big_n);
        let c_over = &self.c / &bqn;
        Ok(Rational::one() + &c_over - self.q.pow(-1) - &self.c * &self.q / &bqn)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn point() -> QRacahPoint {
        QRacahPoint { q: rat(1, 2), a: rat(1, 3), b: rat(1, 5), c: rat(1, 7) }
    }

    #[test]
    fn lambda_at_one() {
        // d = 2^3 * 5 = 40, cd = 40/7, lambda(1) = -(1-2)(1 - 10/7) = -3/7
        assert_eq!(point().d(2).unwrap(), rat(40, 1));
        assert_eq!(point().lambda(1, 2).unwrap(), rat(-3, 7));
        assert_eq!(point().lambda(0, 2).unwrap(), Rational::zero());
    }

    #[test]
    fn shift_offset_value() {
        // 1 + 20/7 - 2 - 10/7
        assert_eq!(point().shift_offset(2).unwrap(), rat(3, 7));
    }

    #[test]
    fn boundary_coefficients_vanish() {
        let p = point();
        assert_eq!(p.a_coeff(2, 2, Reading::Corrected).unwrap(), Rational::zero());
        assert_eq!(p.c_coeff(0, 2).unwrap(), Rational::zero());
        assert_eq!(hahn_a(3, 3, &rat(1, 2), &rat(1, 3)).unwrap(), Rational::zero());
    }

    #[test]
    fn degenerate_denominators() {
        let p = QRacahPoint { q: rat(1, 2), a: rat(4, 1), b: rat(1, 1), c: rat(1, 7) };
        assert!(matches!(p.a_coeff(0, 2, Reading::Corrected), Err(Error::DegenerateParams(_))));
        assert!(matches!(hahn_a(0, 1, &rat(0, 1), &rat(-1, 1)), Err(Error::DegenerateParams(_))));
        let zero_c = QRacahPoint { c: Rational::zero(), ..point() };
        assert!(zero_c.c_coeff(1, 2).is_err());
    }

    #[test]
    fn readings_differ_only_in_one_factor() {
        let p = point();
        let cor = p.a_coeff(0, 2, Reading::Corrected).unwrap();
        let lit = p.a_coeff(0, 2, Reading::PaperLiteral).unwrap();
        // ratio is (1 - a q)/(1 - q) = (5/6)/(1/2)
        assert_eq!(cor / lit, rat(5, 3));
    }
}
