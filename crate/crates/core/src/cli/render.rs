use std::fmt::Write;

use super::cases::{Case, EvalCase, IdentityCase, ReduceCase, TableRow, VerifyCase};
use crate::algebra::Rational;
use crate::matrix::DenseMatrix;

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn join(values: &[Rational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn seed_part(seed: Option<u64>) -> String {
    seed.map(|s| format!(" seed={s}")).unwrap_or_default()
}

pub fn render_text(cases: &[Case], table: bool) -> String {
    let mut out = String::new();
    if table {
        out.push_str("family\tdim\tparams\tclosed form\tcoefficients\n");
    }
    for case in cases {
        match case {
            Case::Eval(c) => eval(&mut out, c),
            Case::Verify(c) => verify(&mut out, c),
            Case::Reduce(c) => reduce(&mut out, c),
            Case::Identity(c) => identity(&mut out, c),
            Case::Table(c) => table_row(&mut out, c),
        }
    }
    out
}

fn eval(out: &mut String, c: &EvalCase) {
    let r = &c.report;
    let var = r.variable;
    let _ = writeln!(out, "family: {}", r.family);
    let _ = writeln!(out, "dim: {}", r.dim);
    let _ = writeln!(out, "params: {}{}", r.params, seed_part(c.seed));
    let _ = writeln!(out, "reading: {}", reading_name(c.report.reading));
    let _ = writeln!(out, "substitution: {}", c.substitution);
    let _ = writeln!(out, "determinant: {}", r.charpoly.pretty(var));
    let _ = writeln!(out, "coefficients: [{}]", join(r.charpoly.coeffs()));
    let _ = writeln!(out, "closed form: {}", c.factored);
    let _ = writeln!(out, "oracle: {}", r.oracle.pretty(var));
    let _ = writeln!(out, "match: {}", r.closed_match);
    let _ = writeln!(out, "oracle match: {}", r.oracle_match);
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "witness: {w}");
    }
}

fn reading_name(r: crate::families::Reading) -> &'static str {
    match r {
        crate::families::Reading::Corrected => "corrected",
        crate::families::Reading::PaperLiteral => "paper-literal",
    }
}

fn verify(out: &mut String, c: &VerifyCase) {
    let r = &c.report;
    let _ = write!(
        out,
        "{} {} dim={}{} params={} closed={} oracle={}",
        status(c.passed),
        r.family,
        r.dim,
        seed_part(c.seed),
        r.params,
        flag(r.closed_match),
        flag(r.oracle_match)
    );
    if let Some(ind) = &c.induction {
        let _ = write!(out, " induction={}", flag(ind.holds));
    }
    if let Some(b) = &c.b_leading_coefficient {
        let _ = write!(out, " leading-coefficient={}", flag(b.holds));
    }
    if let Some(a) = c.a_family {
        let _ = write!(out, " a-family={}", flag(a));
    }
    out.push('\n');
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "  witness: {w}");
    }
    if let Some(w) = c.induction.as_ref().and_then(|i| i.witness.as_ref()) {
        let _ = writeln!(out, "  witness: {w}");
    }
}

fn reduce(out: &mut String, c: &ReduceCase) {
    let r = &c.report;
    let zero_block = match r.zero_block {
        crate::reduction::ZeroBlock::UpperRight => "upper-right",
        crate::reduction::ZeroBlock::LowerLeft => "lower-left",
    };
    let _ = writeln!(out, "{} {} dim={}{} params={}", status(c.passed), r.family, r.dim, seed_part(c.seed), r.params);
    let _ = writeln!(out, "  zero block ({zero_block}): {}", flag(r.zero_block_ok));
    let _ = writeln!(out, "  leading eigenvalues: [{}] {}", join(&r.leading_eigs), flag(r.leading_eigs_ok));
    let _ = writeln!(out, "  tridiagonal form: {}", flag(r.trailing_tridiagonal_ok));
    let _ = writeln!(out, "  trailing similarity: {}", flag(r.trailing_match_ok));
    let s = &r.shift;
    let _ = writeln!(
        out,
        "  shift: scale={} offset={} child dim={} child params={}",
        s.scale, s.offset, s.child_dim, s.child_params
    );
    if let Some(w) = &r.witness {
        let _ = writeln!(
            out,
            "  witness: {} at ({}, {}): expected {}, found {}",
            w.stage, w.row, w.col, w.expected, w.actual
        );
    }
    for stage in c.trace.iter().flatten() {
        let _ = writeln!(out, "  {}:", stage.label);
        matrix(out, &stage.matrix);
    }
}

fn matrix(out: &mut String, m: &DenseMatrix) {
    for line in m.to_string().lines() {
        let _ = writeln!(out, "    {line}");
    }
}

fn identity(out: &mut String, c: &IdentityCase) {
    let r = &c.report;
    let _ = write!(
        out,
        "{} n={} N={} trials={}/{} variant={} reading={}",
        status(c.passed),
        r.n,
        r.big_n,
        r.passed_trials,
        r.trials,
        r.variant.name(),
        reading_name(r.reading)
    );
    if r.vacuous {
        out.push_str(" (vacuous: no points checked)");
    }
    out.push('\n');
    if let Some(f) = &r.failure {
        let _ = writeln!(
            out,
            "  counterexample: q={}, a={}, b={}, c={}: left {} vs right {}",
            f.q, f.a, f.b, f.c, f.lhs, f.rhs
        );
    }
}

fn table_row(out: &mut String, c: &TableRow) {
    let _ = write!(out, "{}\t{}\t{}\t{}\t[{}]", c.family, c.dim, c.params, c.factored, join(&c.coefficients));
    if !c.passed {
        out.push_str("\tMISMATCH");
    }
    out.push('\n');
}
