//! Exact replay of the block-triangularization steps.
//!
//! Each step conjugates the family matrix `G` by a transform built from a
//! known eigenvector, checks that one off-diagonal block vanishes and that
//! the leading block carries the expected eigenvalues, then conjugates the
//! trailing block until it equals `(1/scale) G_child + offset I`. Every
//! comparison is an exact rational equality.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Rational;
use crate::determinant::to_dense;
use crate::error::{Error, Result};
use crate::families::{
    build_matrix, shifted_family, FamilyId, FamilyParams, QRacahPoint, Reading, ShiftSpec,
    TridiagonalSpec,
};
use crate::matrix::DenseMatrix;

pub use crate::matrix::DenseMatrix as Matrix;

/// The transforms used by the reductions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransformKind {
    /// Rows `(1, ..., 1)` and `(1, -1, ..., (-1)^N)` on top of the identity.
    SylvesterRows,
    /// Row `(1, ..., 1)` on top of the identity.
    OnesRow,
    /// Identity with first column `(1, -1, 1, ..., (-1)^N)`.
    AlternatingColumn,
    /// Unit upper triangular with `-1` on the second superdiagonal.
    BidiagSkipOne,
    /// Unit upper bidiagonal with `-1` on the superdiagonal.
    BidiagAdjacentMinus,
    /// Unit lower bidiagonal with `1` on the subdiagonal.
    BidiagAdjacentPlus,
    /// `diag(q^{-k} (1 - ab q^{2k+2}))`, `k = 0..dim`.
    LambdaDiag,
}

fn sign(k: usize) -> Rational {
    Rational::from(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// The alternating vector `(1, -1, 1, ...)`.
pub fn alternating(dim: usize) -> Vec<Rational> {
    (0..dim).map(sign).collect()
}

pub fn build_transform(
    kind: TransformKind,
    dim: usize,
    params: Option<&FamilyParams>,
) -> Result<DenseMatrix> {
    if dim == 0 {
        return Err(Error::BadDimension { dim, context: format!("{kind:?} transform") });
    }
    let mut t = DenseMatrix::identity(dim);
    match kind {
        TransformKind::SylvesterRows => {
            if dim < 2 {
                return Err(Error::BadDimension { dim, context: "SylvesterRows transform".into() });
            }
            for j in 0..dim {
                t[(0, j)] = Rational::one();
                t[(1, j)] = sign(j);
            }
        }
        TransformKind::OnesRow => {
            for j in 0..dim {
                t[(0, j)] = Rational::one();
            }
        }
        TransformKind::AlternatingColumn => {
            for i in 0..dim {
                t[(i, 0)] = sign(i);
            }
        }
        TransformKind::BidiagSkipOne => {
            for i in 0..dim.saturating_sub(2) {
                t[(i, i + 2)] = -Rational::one();
            }
        }
        TransformKind::BidiagAdjacentMinus => {
            for i in 0..dim - 1 {
                t[(i, i + 1)] = -Rational::one();
            }
        }
        TransformKind::BidiagAdjacentPlus => {
            for i in 1..dim {
                t[(i, i - 1)] = Rational::one();
            }
        }
        TransformKind::LambdaDiag => {
            let Some(FamilyParams::QRacah { q, a, b, .. }) = params else {
                return Err(Error::Unsupported("LambdaDiag needs q-racah parameters".into()));
            };
            if q.is_zero() {
                return Err(Error::DegenerateParams("LambdaDiag: q = 0".into()));
            }
            let ab = a * b;
            for k in 0..dim as i64 {
                let entry = q.pow(-k) * (Rational::one() - &ab * q.pow(2 * k + 2));
                if entry.is_zero() {
                    return Err(Error::DegenerateParams(format!("LambdaDiag: ab·q^{} = 1", 2 * k + 2)));
                }
                t[(k as usize, k as usize)] = entry;
            }
        }
    }
    Ok(t)
}

/// Whether the alternating vector is a right kernel vector of `G`, which is
/// equivalent to `diag[n] = a_n + c_n` on every row.
pub fn ansatz_kernel_check(spec: &TridiagonalSpec) -> bool {
    to_dense(spec)
        .mul_vec(&alternating(spec.dim))
        .iter()
        .all(Rational::is_zero)
}

/// Which off-diagonal block the reduction asserts to vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZeroBlock {
    /// Row-eigenvector transforms give a block lower-triangular result.
    UpperRight,
    /// The alternating-column transform gives a block upper-triangular result.
    LowerLeft,
}

/// First entry at which an assertion failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub stage: &'static str,
    pub row: usize,
    pub col: usize,
    pub expected: Rational,
    pub actual: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub family: FamilyId,
    pub dim: usize,
    pub params: FamilyParams,
    pub zero_block: ZeroBlock,
    pub zero_block_ok: bool,
    /// Eigenvalues of `G` read off the leading block.
    pub leading_eigs: Vec<Rational>,
    pub leading_eigs_ok: bool,
    /// Tridiagonal intermediate form (q-Racah only; true otherwise).
    pub trailing_tridiagonal_ok: bool,
    pub trailing_match_ok: bool,
    pub shift: ShiftSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.zero_block_ok
            && self.leading_eigs_ok
            && self.trailing_tridiagonal_ok
            && self.trailing_match_ok
            && self.witness.is_none()
    }
}

/// An intermediate matrix of the reduction, for tracing.
#[derive(Debug, Clone, Serialize)]
pub struct TraceStage {
    pub label: &'static str,
    pub matrix: DenseMatrix,
}

/// Run the reduction of the family matrix.
pub fn reduce_step(family: FamilyId, dim: usize, params: &FamilyParams) -> Result<ReductionReport> {
    Ok(reduce_step_traced(family, dim, params)?.0)
}

pub fn reduce_step_traced(
    family: FamilyId,
    dim: usize,
    params: &FamilyParams,
) -> Result<(ReductionReport, Vec<TraceStage>)> {
    check_supported(family)?;
    let g = to_dense(&build_matrix(family, dim, params)?);
    reduce_matrix(family, dim, params, &g)
}

fn check_supported(family: FamilyId) -> Result<()> {
    if family.has_reduction() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("no block reduction is defined for {family}")))
    }
}

struct Recorder {
    witness: Option<Witness>,
    stages: Vec<TraceStage>,
}

impl Recorder {
    /// Compare one entry; remembers the first mismatch.
    fn expect(&mut self, stage: &'static str, row: usize, col: usize, expected: &Rational, actual: &Rational) -> bool {
        if expected == actual {
            return true;
        }
        if self.witness.is_none() {
            self.witness = Some(Witness {
                stage,
                row,
                col,
                expected: expected.clone(),
                actual: actual.clone(),
            });
        }
        false
    }

    fn stage(&mut self, label: &'static str, matrix: &DenseMatrix) {
        self.stages.push(TraceStage { label, matrix: matrix.clone() });
    }
}

/// Run the reduction pipeline on an explicit parent matrix `g`, which need
/// not be the family matrix (a perturbed copy must make the report fail).
pub fn reduce_matrix(
    family: FamilyId,
    dim: usize,
    params: &FamilyParams,
    g: &DenseMatrix,
) -> Result<(ReductionReport, Vec<TraceStage>)> {
    check_supported(family)?;
    if g.dim() != dim {
        return Err(Error::Shape(format!("matrix of dim {} for reduction at dim {dim}", g.dim())));
    }
    let shift = shifted_family(family, dim, params)?;
    let expected_eigs: Vec<Rational> = shift.pulled_roots.iter().map(|r| -r).collect();
    let lead = expected_eigs.len();
    let mut rec = Recorder { witness: None, stages: Vec::new() };
    rec.stage("G", g);

    // Step 1: split off the known eigenvalues.
    let (t, conj, zero_block) = match family {
        FamilyId::SylvesterD | FamilyId::SylvesterB => {
            let kind = if family == FamilyId::SylvesterD {
                TransformKind::SylvesterRows
            } else {
                TransformKind::OnesRow
            };
            let t = build_transform(kind, dim, None)?;
            let conj = g.conjugate_by_inverse_right(&t)?;
            (t, conj, ZeroBlock::UpperRight)
        }
        _ => {
            let t = build_transform(TransformKind::AlternatingColumn, dim, None)?;
            let conj = g.conjugate_by_inverse_left(&t)?;
            (t, conj, ZeroBlock::LowerLeft)
        }
    };
    rec.stage("T", &t);
    rec.stage("T-conjugated", &conj);

    let zero = Rational::zero();
    let mut zero_block_ok = true;
    for i in 0..dim {
        for j in 0..dim {
            let in_block = match zero_block {
                ZeroBlock::UpperRight => i < lead && j >= lead,
                ZeroBlock::LowerLeft => i >= lead && j < lead,
            };
            if in_block {
                zero_block_ok &= rec.expect("zero block", i, j, &zero, &conj[(i, j)]);
            }
        }
    }

    let mut leading_eigs_ok = true;
    for i in 0..lead {
        for j in 0..lead {
            let expected = if i == j { &expected_eigs[i] } else { &zero };
            leading_eigs_ok &= rec.expect("leading block", i, j, expected, &conj[(i, j)]);
        }
    }
    let leading_eigs = (0..lead).map(|i| conj[(i, i)].clone()).collect();

    // Step 2: bring the trailing block to the child matrix.
    let m = conj.trailing_block(lead);
    rec.stage("M", &m);
    let child_dim = shift.child_dim;
    let (s, mut reduced) = match family {
        FamilyId::SylvesterD => {
            let s = build_transform(TransformKind::BidiagSkipOne, child_dim, None)?;
            let r = m.conjugate_by_inverse_left(&s)?;
            (s, r)
        }
        FamilyId::SylvesterB => {
            let s = build_transform(TransformKind::BidiagAdjacentMinus, child_dim, None)?;
            let r = m.conjugate_by_inverse_left(&s)?;
            (s, r)
        }
        _ => {
            let s = build_transform(TransformKind::BidiagAdjacentPlus, child_dim, None)?;
            let r = m.conjugate_by_inverse_right(&s)?;
            (s, r)
        }
    };
    rec.stage("S", &s);
    rec.stage("S-conjugated", &reduced);

    let mut trailing_tridiagonal_ok = true;
    if family == FamilyId::QRacah {
        trailing_tridiagonal_ok = check_shifted_tridiagonal(&mut rec, g, &reduced);
        let lambda = build_transform(TransformKind::LambdaDiag, child_dim, Some(params))?;
        reduced = reduced.conjugate_by_inverse_left(&lambda)?;
        rec.stage("Lambda", &lambda);
        rec.stage("Lambda-conjugated", &reduced);
    }

    let child = to_dense(&build_matrix(family, child_dim, &shift.child_params)?);
    let inv_scale = shift
        .scale
        .recip()
        .ok_or_else(|| Error::DegenerateParams("zero induction scale".into()))?;
    let target = child.scale(&inv_scale).add_identity(&shift.offset);
    rec.stage("expected", &target);
    let trailing_match_ok = match reduced.first_difference(&target) {
        None => true,
        Some((i, j)) => {
            rec.expect("trailing similarity", i, j, &target[(i, j)], &reduced[(i, j)]);
            false
        }
    };

    let report = ReductionReport {
        family,
        dim,
        params: params.clone(),
        zero_block,
        zero_block_ok,
        leading_eigs,
        leading_eigs_ok,
        trailing_tridiagonal_ok,
        trailing_match_ok,
        shift,
        witness: rec.witness,
    };
    Ok((report, rec.stages))
}

/// The `S`-conjugated trailing block of an ansatz matrix is tridiagonal with
/// diagonal `a_n + c_{n+1}`, superdiagonal `a_{n+1}` and subdiagonal
/// `c_{n+1}`, where `a_n`, `c_n` are read off the parent `g`.
fn check_shifted_tridiagonal(rec: &mut Recorder, g: &DenseMatrix, y: &DenseMatrix) -> bool {
    let a = |n: usize| -> Rational {
        if n + 1 < g.dim() {
            g[(n, n + 1)].clone()
        } else {
            Rational::zero()
        }
    };
    let c = |n: usize| -> Rational {
        if n >= 1 && n < g.dim() {
            g[(n, n - 1)].clone()
        } else {
            Rational::zero()
        }
    };
    let mut ok = true;
    for i in 0..y.dim() {
        for j in 0..y.dim() {
            let expected = if i == j {
                a(i) + c(i + 1)
            } else if j == i + 1 {
                a(i + 1)
            } else if i == j + 1 {
                c(i)
            } else {
                Rational::zero()
            };
            ok &= rec.expect("tridiagonal form", i, j, &expected, &y[(i, j)]);
        }
    }
    ok
}

/// Which subscript the left side of the q-Racah scalar identity uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum IdentityVariant {
    /// `c_{n+1}`, the reading the reduction requires.
    #[default]
    #[serde(rename = "cn1")]
    SmallN,
    /// `c_{N+1}`, as printed.
    #[serde(rename = "cN1")]
    CapitalN,
}

impl IdentityVariant {
    pub fn name(self) -> &'static str {
        match self {
            IdentityVariant::SmallN => "cn1",
            IdentityVariant::CapitalN => "cN1",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "cn1" => Some(IdentityVariant::SmallN),
            "cN1" => Some(IdentityVariant::CapitalN),
            _ => None,
        }
    }
}

/// Both sides of the diagonal identity at one parameter point:
///
/// `(a_n + c_{n+1} - 1 - c/(bq^N) + 1/q + cq/(bq^N)) q
///   = a_{n+1} (1-abq^{2n+4})/(1-abq^{2n+2}) + q^2 c_n (1-abq^{2n})/(1-abq^{2n+2})`.
pub fn scalar_identity_sides(
    n: usize,
    big_n: usize,
    point: &QRacahPoint,
    variant: IdentityVariant,
    reading: Reading,
) -> Result<(Rational, Rational)> {
    let (n, big) = (n as i64, big_n as i64);
    if point.q.is_zero() || point.q.abs().is_one() {
        return Err(Error::DegenerateParams(format!("q = {}", point.q)));
    }
    let c_index = match variant {
        IdentityVariant::SmallN => n + 1,
        IdentityVariant::CapitalN => big + 1,
    };
    let q = &point.q;
    let lhs = (point.a_coeff(n, big, reading)? + point.c_coeff(c_index, big)? - point.shift_offset(big)?) * q;
    let ab = &point.a * &point.b;
    let one = Rational::one;
    let base = one() - &ab * q.pow(2 * n + 2);
    let ratio = |k: i64| -> Result<Rational> {
        (one() - &ab * q.pow(k))
            .checked_div(&base)
            .ok_or_else(|| Error::DegenerateParams(format!("1 - ab·q^{} = 0", 2 * n + 2)))
    };
    let rhs = point.a_coeff(n + 1, big, reading)? * ratio(2 * n + 4)?
        + q * q * point.c_coeff(n, big)? * ratio(2 * n)?;
    Ok((lhs, rhs))
}

/// Numerators and denominators of identity test points lie within this
/// bound, a pool of more than 10^6 distinct rationals per coordinate.
pub const PIT_BOUND: i64 = 1000;

#[derive(Debug, Clone, Serialize)]
pub struct IdentityFailure {
    pub q: Rational,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub trials: usize,
    pub seed: u64,
    pub variant: IdentityVariant,
    pub reading: Reading,
    pub passed_trials: usize,
    /// No trials were run, so the result holds trivially.
    pub vacuous: bool,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<IdentityFailure>,
}

/// Randomized exact check of the scalar identity at `trials` random points.
pub fn qracah_scalar_identity(n: usize, big_n: usize, trials: usize, seed: u64) -> Result<IdentityReport> {
    qracah_scalar_identity_with(n, big_n, trials, seed, IdentityVariant::SmallN, Reading::Corrected)
}

pub fn qracah_scalar_identity_with(
    n: usize,
    big_n: usize,
    trials: usize,
    seed: u64,
    variant: IdentityVariant,
    reading: Reading,
) -> Result<IdentityReport> {
    if n >= big_n {
        return Err(Error::BadDimension {
            dim: big_n,
            context: format!("scalar identity needs n < N, got n = {n}"),
        });
    }
    let stream = crate::families::stream_seed_for_identity(n as u64, big_n as u64, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    let mut report = IdentityReport {
        n,
        big_n,
        trials,
        seed,
        variant,
        reading,
        passed_trials: 0,
        vacuous: trials == 0,
        holds: true,
        failure: None,
    };
    for _ in 0..trials {
        let (point, lhs, rhs) = sample_identity_point(&mut rng, n, big_n, variant, reading)?;
        if lhs == rhs {
            report.passed_trials += 1;
        } else {
            report.holds = false;
            report.failure.get_or_insert(IdentityFailure {
                q: point.q,
                a: point.a,
                b: point.b,
                c: point.c,
                lhs,
                rhs,
            });
        }
    }
    Ok(report)
}

fn sample_identity_point(
    rng: &mut ChaCha8Rng,
    n: usize,
    big_n: usize,
    variant: IdentityVariant,
    reading: Reading,
) -> Result<(QRacahPoint, Rational, Rational)> {
    use crate::families::{small_rational, SAMPLE_RETRIES};
    for _ in 0..SAMPLE_RETRIES {
        let point = QRacahPoint {
            q: small_rational(rng, PIT_BOUND),
            a: small_rational(rng, PIT_BOUND),
            b: small_rational(rng, PIT_BOUND),
            c: small_rational(rng, PIT_BOUND),
        };
        if point.b.is_zero() || point.c.is_zero() {
            continue;
        }
        match scalar_identity_sides(n, big_n, &point, variant, reading) {
            Ok((lhs, rhs)) => return Ok((point, lhs, rhs)),
            Err(Error::DegenerateParams(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SamplingExhausted {
        attempts: SAMPLE_RETRIES,
        context: format!("scalar identity n = {n}, N = {big_n}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::families::sample_params;

    #[test]
    fn transform_examples() {
        let t = build_transform(TransformKind::AlternatingColumn, 3, None).unwrap();
        assert_eq!(t, DenseMatrix::from_int_rows(&[&[1, 0, 0], &[-1, 1, 0], &[1, 0, 1]]).unwrap());
        let s = build_transform(TransformKind::BidiagAdjacentPlus, 3, None).unwrap();
        assert_eq!(s, DenseMatrix::from_int_rows(&[&[1, 0, 0], &[1, 1, 0], &[0, 1, 1]]).unwrap());
        let s = build_transform(TransformKind::BidiagSkipOne, 4, None).unwrap();
        assert_eq!(
            s,
            DenseMatrix::from_int_rows(&[&[1, 0, -1, 0], &[0, 1, 0, -1], &[0, 0, 1, 0], &[0, 0, 0, 1]])
                .unwrap()
        );
        let s = build_transform(TransformKind::BidiagAdjacentMinus, 3, None).unwrap();
        assert_eq!(s, DenseMatrix::from_int_rows(&[&[1, -1, 0], &[0, 1, -1], &[0, 0, 1]]).unwrap());
        let t = build_transform(TransformKind::SylvesterRows, 3, None).unwrap();
        assert_eq!(t, DenseMatrix::from_int_rows(&[&[1, 1, 1], &[1, -1, 1], &[0, 0, 1]]).unwrap());
    }

    #[test]
    fn lambda_diag_example() {
        let p = FamilyParams::QRacah { q: rat(1, 2), a: rat(1, 3), b: rat(1, 5), c: rat(1, 7) };
        let l = build_transform(TransformKind::LambdaDiag, 2, Some(&p)).unwrap();
        assert_eq!(l, DenseMatrix::diagonal(&[rat(59, 60), rat(239, 120)]));
        assert!(build_transform(TransformKind::LambdaDiag, 2, None).is_err());
        let degenerate = FamilyParams::QRacah { q: rat(1, 2), a: rat(4, 1), b: rat(1, 1), c: rat(1, 7) };
        assert!(matches!(
            build_transform(TransformKind::LambdaDiag, 2, Some(&degenerate)),
            Err(Error::DegenerateParams(_))
        ));
    }

    #[test]
    fn kernel_check() {
        let k = build_matrix(FamilyId::Krawtchouk, 5, &FamilyParams::Krawtchouk { p: rat(2, 7) }).unwrap();
        assert!(ansatz_kernel_check(&k));
        let h = build_matrix(FamilyId::Hahn, 4, &sample_params(FamilyId::Hahn, 4, 3).unwrap()).unwrap();
        assert!(ansatz_kernel_check(&h));
        let mut broken = k.clone();
        broken.diag[0] += &Rational::one();
        assert!(!ansatz_kernel_check(&broken));
    }

    #[test]
    fn sylvester_d_dim3() {
        let (r, stages) = reduce_step_traced(FamilyId::SylvesterD, 3, &FamilyParams::SylvesterD).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.leading_eigs, vec![rat(2, 1), rat(-2, 1)]);
        let m = &stages.iter().find(|s| s.label == "M").unwrap().matrix;
        assert_eq!(*m, DenseMatrix::zeros(1));
    }

    #[test]
    fn sylvester_b_dim2() {
        let r = reduce_step(FamilyId::SylvesterB, 2, &FamilyParams::SylvesterB { a: rat(3, 1) }).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.leading_eigs, vec![rat(2, 1)]);
        assert_eq!(r.shift.offset, rat(-3, 1));
    }

    #[test]
    fn qracah_dim3() {
        let p = FamilyParams::QRacah { q: rat(1, 2), a: rat(1, 3), b: rat(1, 5), c: rat(1, 7) };
        let r = reduce_step(FamilyId::QRacah, 3, &p).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.shift.offset, rat(3, 7));
        assert_eq!(r.shift.scale, rat(1, 2));
        assert_eq!(r.zero_block, ZeroBlock::LowerLeft);
    }

    #[test]
    fn unsupported_families() {
        for f in [FamilyId::SylvesterA, FamilyId::Hahn, FamilyId::Racah] {
            let p = sample_params(f, 4, 0).unwrap();
            assert!(matches!(reduce_step(f, 4, &p), Err(Error::Unsupported(_))));
        }
    }

    #[test]
    fn perturbation_produces_witness() {
        let p = FamilyParams::Krawtchouk { p: rat(1, 3) };
        let mut g = to_dense(&build_matrix(FamilyId::Krawtchouk, 4, &p).unwrap());
        g[(2, 2)] += &Rational::one();
        let (r, _) = reduce_matrix(FamilyId::Krawtchouk, 4, &p, &g).unwrap();
        assert!(!r.passed());
        assert!(r.witness.is_some());
    }

    #[test]
    fn identity_single_point() {
        let pt = QRacahPoint { q: rat(1, 2), a: rat(1, 3), b: rat(1, 5), c: rat(1, 7) };
        let (l, r) = scalar_identity_sides(0, 2, &pt, IdentityVariant::SmallN, Reading::Corrected).unwrap();
        assert_eq!(l, r);
        let (l, r) = scalar_identity_sides(0, 2, &pt, IdentityVariant::CapitalN, Reading::Corrected).unwrap();
        assert_ne!(l, r);
    }

    #[test]
    fn identity_vacuous() {
        let r = qracah_scalar_identity(3, 8, 0, 1).unwrap();
        assert!(r.vacuous && r.holds);
        assert!(qracah_scalar_identity(8, 8, 1, 1).is_err());
    }
}
