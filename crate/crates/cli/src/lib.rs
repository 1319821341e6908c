//! Claim runners behind the `cubic3ec` command.

pub mod claims;

use claims::*;
use cubic3ec::graph::{generalized_petersen, GeneralizedPetersenParams};
use cubic3ec::product::{base_graph, extend_level, generate_family, FamilyMember, FAMILY_GUARD};
use cubic3ec::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;

pub const DEFAULT_SEED: u64 = 20_240_229;

/// Process exit status for a set of verdicts: 1 if anything failed, 0 if
/// something ran and nothing failed, 3 if every claim was skipped by a guard.
pub fn exit_code(verdicts: impl IntoIterator<Item = Verdict>) -> u8 {
    let (mut pass, mut fail) = (false, false);
    for v in verdicts {
        match v {
            Verdict::Pass => pass = true,
            Verdict::Fail => fail = true,
            Verdict::Skipped => {}
        }
    }
    if fail {
        1
    } else if pass {
        0
    } else {
        3
    }
}

/// Levels `1..=k` of the family.
pub fn family_levels(k: usize) -> Result<Vec<Vec<FamilyMember>>> {
    if k > FAMILY_GUARD {
        return generate_family(k).map(|_| Vec::new());
    }
    let mut levels = vec![generate_family(1)?];
    for _ in 1..k {
        let next = extend_level(levels.last().unwrap())?;
        levels.push(next);
    }
    Ok(levels)
}

#[derive(Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub verdict: Verdict,
}

#[derive(Serialize)]
pub struct AggregateReport {
    pub k: usize,
    pub seed: u64,
    pub claims: Vec<ClaimReport>,
    pub summary: Summary,
}

type Job<'a> = Box<dyn Fn() -> ClaimReport + Send + Sync + 'a>;

/// Every claim for members with up to `k` copies, ordered by claim id.
pub fn report_all(k: usize, seed: u64, timings: bool) -> Result<AggregateReport> {
    if k == 0 {
        return Err(Error::Param("k must be at least 1".into()));
    }
    let levels = family_levels(k)?;
    let p92 = Subject::single("P(9,2)", base_graph());
    let p15 = Subject::single("P(15,2)", generalized_petersen(GeneralizedPetersenParams::new(15, 2)?)?);
    let corpus = factor_corpus();
    let pairs: Vec<_> = corpus
        .iter()
        .flat_map(|a| corpus.iter().map(move |b| ((a.0.to_string(), a.1.clone()), (b.0.to_string(), b.1.clone()))))
        .collect();

    let subjects: Vec<(usize, Subject)> =
        levels.iter().enumerate().skip(1).map(|(i, ms)| (i + 1, Subject::family(i + 1, ms.clone()))).collect();

    let mut jobs: Vec<Job> = vec![
        Box::new(|| unique_coloring(&p92)),
        Box::new(|| three_hamilton(&p92)),
        Box::new(|| three_hamilton(&p15)),
        Box::new(|| triangle_free(&p92)),
        Box::new(|| nonplanar(&p92)),
        Box::new(|| petersen_minor(&p92)),
        Box::new(genus_p92),
        Box::new(projective_p92),
        Box::new(move || multiplicativity(&pairs, false, seed)),
    ];
    for (j, s) in &subjects {
        let (j, members) = (*j, &levels[j - 1]);
        jobs.push(Box::new(move || unique_coloring(s)));
        jobs.push(Box::new(move || triangle_free(s)));
        jobs.push(Box::new(move || nonplanar(s)));
        jobs.push(Box::new(move || genus_exhaustive(s, Some(j))));
        jobs.push(Box::new(move || genus_family(j, members)));
        // Petersen subdivisions take about a second per 34-vertex member;
        // larger levels are left to `verify petersen-minor`.
        if j == 2 {
            jobs.push(Box::new(move || petersen_minor(s)));
        }
    }
    let mut claims: Vec<ClaimReport> = jobs.par_iter().map(|job| timed(timings, job)).collect();
    claims.sort_by(|a, b| a.claim.cmp(&b.claim));
    let count = |v: Verdict| claims.iter().filter(|c| c.verdict == v).count();
    let summary = Summary {
        passed: count(Verdict::Pass),
        failed: count(Verdict::Fail),
        skipped: count(Verdict::Skipped),
        verdict: if count(Verdict::Fail) > 0 { Verdict::Fail } else { Verdict::Pass },
    };
    Ok(AggregateReport { k, seed, claims, summary })
}
