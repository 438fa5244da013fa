//! Machine-checkable certificates for the spectral inequality checkers.
//!
//! Each checker evaluates both sides of one concrete inequality instance
//! and records every named quantity it used, so a certificate can be
//! re-audited without rerunning the producer.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const CERT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatementId {
    PartialNet,
    DisjointSupports,
    SmallEval,
    BallCover,
    RandomDeletion,
    DenseRegime,
    Combined,
    ConnectedCorollary,
    Interlacing,
    WalkCount,
}

impl StatementId {
    pub fn parse(s: &str) -> Option<StatementId> {
        match s {
            "partial_net" => Some(StatementId::PartialNet),
            "disjoint_supports" => Some(StatementId::DisjointSupports),
            "small_eval" => Some(StatementId::SmallEval),
            "ball_cover" => Some(StatementId::BallCover),
            "random_deletion" => Some(StatementId::RandomDeletion),
            "dense_regime" => Some(StatementId::DenseRegime),
            "combined" => Some(StatementId::Combined),
            "connected_corollary" => Some(StatementId::ConnectedCorollary),
            "interlacing" => Some(StatementId::Interlacing),
            "walk_count" => Some(StatementId::WalkCount),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            StatementId::PartialNet => "partial_net",
            StatementId::DisjointSupports => "disjoint_supports",
            StatementId::SmallEval => "small_eval",
            StatementId::BallCover => "ball_cover",
            StatementId::RandomDeletion => "random_deletion",
            StatementId::DenseRegime => "dense_regime",
            StatementId::Combined => "combined",
            StatementId::ConnectedCorollary => "connected_corollary",
            StatementId::Interlacing => "interlacing",
            StatementId::WalkCount => "walk_count",
        }
    }
}

/// Verdict derived from (hypotheses_met, holds): an instance whose
/// hypotheses fail is vacuous, never violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Vacuous,
    Violated,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub schema_version: u32,
    pub statement_id: StatementId,
    pub inputs: serde_json::Value,
    /// Named quantities: exact fractions where available, decimals with
    /// 15 significant digits otherwise.
    pub computed: BTreeMap<String, String>,
    pub hypotheses_met: bool,
    /// Literal comparison of the recorded quantities, regardless of
    /// whether the hypotheses were met.
    pub holds: bool,
    pub verdict: Verdict,
}

impl BoundCertificate {
    pub fn new(
        statement_id: StatementId,
        inputs: serde_json::Value,
        computed: BTreeMap<String, String>,
        hypotheses_met: bool,
        holds: bool,
    ) -> Self {
        let verdict = if !hypotheses_met {
            Verdict::Vacuous
        } else if holds {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
        BoundCertificate {
            schema_version: CERT_SCHEMA_VERSION,
            statement_id,
            inputs,
            computed,
            hypotheses_met,
            holds,
            verdict,
        }
    }

    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

/// 15-significant-digit decimal rendering for recorded quantities.
pub fn sig15(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x:.14e}")
    }
}
