//! Fiber-by-fiber verification of a deformation family.
//!
//! A sample is a pair `(t0, K)`. Its fiber is reduced to minimal form and
//! the observed branch data is compared with the expected data:
//!
//! * a jump above the expected value, an extra pole or a pole at infinity
//!   fails the family;
//! * a jump below the expected value is a degenerate specialization (a
//!   coefficient vanishing at `t0`) and the sample is skipped with a reason.

use serde::Serialize;

use super::family::{build_family, Family, FamilySpec, FiberOutcome};
use crate::algebra::{
    as_minimal_form, as_minimal_form_with_poles, BranchPoint, Field, Fq, Poly, ProfileEntry,
    DEFAULT_FIELD_CAP,
};
use crate::{Error, Result};

/// A pass needs at least this many successful samples.
pub const MIN_SUCCESSES: usize = 3;
/// Samples must be drawn from at least this many distinct fields. Successes
/// may come from fewer: a branch locus such as the fifth roots of unity in
/// characteristic 7 is rational over only one field below the size cap.
pub const MIN_FIELDS: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Prime-field parameters `t0` (taken mod `p`; zero is dropped).
    pub t0: Vec<i64>,
    /// Largest extension degree `m` of the sample fields.
    pub max_degree: u32,
    /// Largest field order used.
    pub cap: u64,
    /// Also sample `t0 = z` and `t0 = z + 1` in each proper extension.
    pub extension_points: bool,
}

impl VerifyOptions {
    pub fn for_prime(p: u32) -> VerifyOptions {
        VerifyOptions {
            t0: (1..=(p as i64 - 1).min(4)).collect(),
            max_degree: 4,
            cap: DEFAULT_FIELD_CAP,
            extension_points: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialResult {
    pub expected: u32,
    pub observed: Vec<ProfileEntry>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleResult {
    pub t0_repr: String,
    pub field: String,
    pub jumps_expected: Vec<u32>,
    pub jumps_observed: Vec<u32>,
    pub profile: Vec<ProfileEntry>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkippedSample {
    pub t0_repr: String,
    pub field: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub spec: FamilySpec,
    pub special: SpecialResult,
    pub generic: Vec<SampleResult>,
    pub skipped: Vec<SkippedSample>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict.pass
    }

    pub fn successes(&self) -> usize {
        self.generic.iter().filter(|s| s.ok).count()
    }
}

fn field_name(f: &Field) -> String {
    format!("{}^{}", f.characteristic(), f.degree())
}

/// The `(field, t0)` pairs to sample.
pub fn sample_points(p: u32, opts: &VerifyOptions) -> Result<Vec<(Field, Fq)>> {
    let mut out = Vec::new();
    for m in 1..=opts.max_degree {
        if (p as u64).checked_pow(m).is_none_or(|q| q > opts.cap) {
            break;
        }
        let field = Field::new(p, m)?;
        let mut ts: Vec<Fq> = Vec::new();
        for &t in &opts.t0 {
            let a = field.int(t);
            if !a.is_zero() && !ts.contains(&a) {
                ts.push(a);
            }
        }
        if m >= 2 && opts.extension_points {
            let z = field.generator();
            for a in [z, field.add(z, Fq::ONE)] {
                if !ts.contains(&a) {
                    ts.push(a);
                }
            }
        }
        out.extend(ts.into_iter().map(|t| (field.clone(), t)));
    }
    Ok(out)
}

enum SampleOutcome {
    Done(SampleResult),
    Skipped(SkippedSample),
}

fn run_sample(family: &Family, field: &Field, t0: Fq) -> Result<SampleOutcome> {
    let t0_repr = field.format(t0);
    let fname = field_name(field);
    let skip = |reason: String| {
        Ok(SampleOutcome::Skipped(SkippedSample {
            t0_repr: t0_repr.clone(),
            field: fname.clone(),
            reason,
        }))
    };
    let fiber = match family.fiber(field, t0)? {
        FiberOutcome::Ready(f) => f,
        FiberOutcome::Skip(r) => return skip(r),
    };
    let mut jumps_expected: Vec<u32> = fiber.expected.iter().map(|x| x.1).collect();
    jumps_expected.sort_unstable_by(|a, b| b.cmp(a));
    let fail = |msg: String, observed: Vec<u32>, profile: Vec<ProfileEntry>| {
        Ok(SampleOutcome::Done(SampleResult {
            t0_repr: t0_repr.clone(),
            field: fname.clone(),
            jumps_expected: jumps_expected.clone(),
            jumps_observed: observed,
            profile,
            ok: false,
            failure: Some(msg),
        }))
    };

    if fiber.f.is_constant() {
        return skip("fiber is constant".into());
    }
    let den = fiber.f.den();
    let factors: Vec<(Fq, usize)> = fiber
        .expected
        .iter()
        .map(|&(a, _)| (a, den.root_multiplicity(a)))
        .filter(|x| x.1 > 0)
        .collect();
    let total: usize = factors.iter().map(|x| x.1).sum();
    if Some(total) != den.degree() {
        return fail(
            format!("denominator {den} has poles outside the expected branch locus"),
            vec![],
            vec![],
        );
    }
    let mf = as_minimal_form_with_poles(&fiber.f, &factors)?;
    let profile = mf.profile.describe();
    let observed = mf.profile.jumps();
    if mf.profile.jump_at(BranchPoint::Infinity).is_some() {
        return fail("pole at infinity".into(), observed, profile);
    }
    let mut dropped = Vec::new();
    for &(a, j) in &fiber.expected {
        let o = mf.profile.jump_at(BranchPoint::Finite(a)).unwrap_or(0);
        if o > j {
            return fail(
                format!("jump {o} at {} exceeds expected {j}", field.format(a)),
                observed,
                profile,
            );
        }
        if o < j {
            dropped.push(format!("jump at {} is {o} < {j}", field.format(a)));
        }
    }
    if !dropped.is_empty() {
        let mut reason = format!("degenerate specialization: {}", dropped.join(", "));
        if mf.accidental_cancellation {
            reason.push_str(" (accidental cancellation)");
        }
        return skip(reason);
    }
    Ok(SampleOutcome::Done(SampleResult {
        t0_repr: t0_repr.clone(),
        field: fname.clone(),
        jumps_expected: jumps_expected.clone(),
        jumps_observed: observed,
        profile,
        ok: true,
        failure: None,
    }))
}

fn check_special(family: &Family) -> Result<SpecialResult> {
    let expected = family.spec.e() - 1;
    let f0 = &family.special;
    let field = f0.field().clone();
    // c / x^{e-1} with c a nonzero constant.
    let shape = f0.num().is_constant()
        && !f0.num().is_zero()
        && *f0.den() == Poly::monomial(&field, Fq::ONE, expected as usize);
    let (observed, profile_ok) = match as_minimal_form(f0) {
        Ok(mf) => {
            let ok = mf.profile.points == vec![(BranchPoint::Finite(Fq::ZERO), expected)];
            (mf.profile.describe(), ok)
        }
        Err(Error::ConstantFunction) => (vec![], false),
        Err(e) => return Err(e),
    };
    Ok(SpecialResult {
        expected,
        observed,
        ok: shape && profile_ok,
    })
}

/// Verifies `spec` on the sample points described by `opts`.
pub fn verify_family_with(spec: &FamilySpec, opts: &VerifyOptions) -> Result<VerificationReport> {
    let family = build_family(spec)?;
    let special = check_special(&family)?;
    let mut generic = Vec::new();
    let mut skipped = Vec::new();
    let points = sample_points(spec.p(), opts)?;
    let mut fields: Vec<u32> = points.iter().map(|x| x.0.degree()).collect();
    fields.dedup();
    for (field, t0) in points {
        match run_sample(&family, &field, t0)? {
            SampleOutcome::Done(s) => generic.push(s),
            SampleOutcome::Skipped(s) => skipped.push(s),
        }
    }

    let e = spec.e();
    let expected_jumps = spec.expected_generic_jumps();
    let conserved: u32 = expected_jumps.iter().map(|j| j + 1).sum();
    let mut discrepancy = None;
    if !special.ok {
        discrepancy = Some(format!(
            "special fiber {} is not a single pole of order {}",
            family.special,
            e - 1
        ));
    } else if conserved != e {
        discrepancy = Some(format!("sum of (jump + 1) is {conserved}, expected {e}"));
    } else if let Some(bad) = generic.iter().find(|s| !s.ok) {
        discrepancy = Some(format!(
            "t0 = {} in F_{}: {}",
            bad.t0_repr,
            bad.field,
            bad.failure.clone().unwrap_or_default()
        ));
    } else if let Some(bad) = generic.iter().find(|s| s.jumps_observed != expected_jumps) {
        discrepancy = Some(format!(
            "t0 = {} in F_{}: jumps {:?}, expected {:?}",
            bad.t0_repr, bad.field, bad.jumps_observed, expected_jumps
        ));
    } else if fields.len() < MIN_FIELDS {
        discrepancy = Some(format!("samples drawn from only {} fields", fields.len()));
    } else if generic.len() < MIN_SUCCESSES {
        discrepancy = Some(format!("only {} successful samples", generic.len()));
    }
    Ok(VerificationReport {
        spec: spec.clone(),
        special,
        generic,
        skipped,
        verdict: Verdict {
            pass: discrepancy.is_none(),
            first_discrepancy: discrepancy,
        },
    })
}

/// [`verify_family_with`] using [`VerifyOptions::for_prime`].
pub fn verify_family(spec: &FamilySpec) -> Result<VerificationReport> {
    verify_family_with(spec, &VerifyOptions::for_prime(spec.p()))
}

/// Verifies many families, in parallel when enabled.
pub fn verify_all(specs: Vec<FamilySpec>) -> Vec<Result<VerificationReport>> {
    crate::sweep::map(specs, |s| verify_family(&s))
}
