//! Every claim about one `(tree, map, orientation)` instance, in one report.

use std::fmt;

use serde::Serialize;

use super::checks::{geometric_sum_check, odd_coefficients_check, z2_similarity_to_companion};
use super::prop1::{prop1_case1_check, prop1_case2_check, Prop1Outcome, RowOp};
use super::witness::{basis_witness_with_matrix, coprime_pairs, BasisWitness};
use crate::algebra::{charpoly, determinant, Modulus, Polynomial};
use crate::dynamics::{lemma1_holds_for, oriented_matrix, VertexMap};
use crate::error::Result;
use crate::report::{ser_decimal, Claim, MatrixJson, PolyJson};
use crate::tree::{canonical_form, Orientation};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct InstanceId {
    /// Isomorphism-class code of the tree.
    pub tree: String,
    /// Labeled edge list, edge 1 first.
    pub edges: String,
    /// `f(1),f(2),...`
    pub map: String,
    pub orientation: String,
}

impl InstanceId {
    pub fn new(f: &VertexMap, o: &Orientation) -> Self {
        InstanceId {
            tree: canonical_form(f.tree()),
            edges: f.tree().edge_list_string(),
            map: f.image_string(),
            orientation: o.to_bits(),
        }
    }
}

impl fmt::Display for InstanceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tree={} edges={} map={} orientation={}",
            self.tree, self.edges, self.map, self.orientation
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMode {
    None,
    /// `start = 1, j = 1`
    Canonical,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub lemma1: bool,
    pub witness: WitnessMode,
    pub prop1: bool,
}

impl VerifyOptions {
    /// Everything, with the canonical witness only.
    pub fn full() -> Self {
        VerifyOptions {
            lemma1: true,
            witness: WitnessMode::Canonical,
            prop1: true,
        }
    }

    /// Only the matrix claims (charpolys, determinant, geometric sum,
    /// parity, Z_2 similarity).
    pub fn core() -> Self {
        VerifyOptions {
            lemma1: false,
            witness: WitnessMode::None,
            prop1: false,
        }
    }
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self::full()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claims {
    pub oriented_charpoly_geometric: Claim,
    pub oriented_det_sign: Claim,
    pub geometric_sum_vanishes: Claim,
    pub unoriented_charpoly_mod2_geometric: Claim,
    pub unoriented_coefficients_odd: Claim,
    pub unoriented_z2_similar_to_companion: Claim,
    pub lemma1: Claim,
    pub basis_witness: Claim,
    pub prop1_case1: Claim,
    pub prop1_case2: Claim,
}

impl Claims {
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Claim)> {
        [
            ("oriented_charpoly_geometric", &self.oriented_charpoly_geometric),
            ("oriented_det_sign", &self.oriented_det_sign),
            ("geometric_sum_vanishes", &self.geometric_sum_vanishes),
            (
                "unoriented_charpoly_mod2_geometric",
                &self.unoriented_charpoly_mod2_geometric,
            ),
            ("unoriented_coefficients_odd", &self.unoriented_coefficients_odd),
            (
                "unoriented_z2_similar_to_companion",
                &self.unoriented_z2_similar_to_companion,
            ),
            ("lemma1", &self.lemma1),
            ("basis_witness", &self.basis_witness),
            ("prop1_case1", &self.prop1_case1),
            ("prop1_case2", &self.prop1_case2),
        ]
        .into_iter()
    }

    pub fn all_pass(&self) -> bool {
        self.iter().all(|(_, c)| !c.is_fail())
    }

    /// Decided outcomes only, for comparing instances.
    pub fn outcome_vector(&self) -> Vec<Option<bool>> {
        self.iter().map(|(_, c)| c.as_bool()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessReport {
    #[serde(serialize_with = "ser_decimal")]
    pub start: usize,
    #[serde(serialize_with = "ser_decimal")]
    pub j: usize,
    pub mf: MatrixJson,
    #[serde(serialize_with = "ser_decimal")]
    pub det_mf: i64,
    pub mf_charpoly: PolyJson,
}

impl From<&BasisWitness> for WitnessReport {
    fn from(w: &BasisWitness) -> Self {
        WitnessReport {
            start: w.start,
            j: w.j,
            mf: MatrixJson::from(&w.mf),
            det_mf: w.det_mf,
            mf_charpoly: PolyJson::from(&charpoly(&w.mf).expect("square")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceReport {
    pub id: InstanceId,
    #[serde(serialize_with = "ser_decimal")]
    pub n: usize,
    pub oriented: MatrixJson,
    pub unoriented: MatrixJson,
    pub oriented_charpoly: PolyJson,
    pub unoriented_charpoly: PolyJson,
    pub unoriented_charpoly_mod2: PolyJson,
    #[serde(serialize_with = "ser_decimal")]
    pub det_oriented: i64,
    #[serde(serialize_with = "ser_decimal")]
    pub det_unoriented: i64,
    pub claims: Claims,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub all_witnesses: Vec<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row_operations: Option<Vec<RowOp>>,
    pub all_pass: bool,
}

fn claim_from(r: Result<bool>, detail: impl FnOnce() -> String) -> Claim {
    match r {
        Ok(ok) => Claim::from_bool(ok, detail),
        Err(e) => Claim::Fail {
            detail: e.to_string(),
        },
    }
}

/// Runs every requested check on one instance. Claim failures are recorded
/// in the report; only malformed input is an error.
pub fn verify_instance(
    f: &VertexMap,
    o: &Orientation,
    opts: &VerifyOptions,
) -> Result<InstanceReport> {
    let n = f.tree().edge_count();
    let m = oriented_matrix(f, o)?;
    let (a, b) = (&m.oriented, &m.unoriented);
    let z2 = Modulus::new(2)?;

    let geometric: Polynomial<i64> = Polynomial::geometric((), n);
    let cp_a = charpoly(a)?;
    let cp_b = charpoly(b)?;
    let cp_b2 = cp_b.reduce_mod(z2);
    let det_a = determinant(a)?;
    let det_b = determinant(b)?;
    let sign = if n % 2 == 0 { 1 } else { -1 };

    let not_applicable = |why: &str| Claim::NotApplicable {
        reason: why.to_string(),
    };

    let mut witness = None;
    let mut all_witnesses = Vec::new();
    let basis_claim = match opts.witness {
        WitnessMode::None => not_applicable("not requested"),
        mode => {
            let pairs = if mode == WitnessMode::All {
                coprime_pairs(n)
            } else {
                vec![(1, 1)]
            };
            let mut claim = Claim::Pass;
            for (start, j) in pairs {
                let w = basis_witness_with_matrix(f, o, a, start, j)
                    .and_then(|w| w.check_rational_conjugation(a).map(|_| w));
                match w {
                    Ok(w) => {
                        let rep = WitnessReport::from(&w);
                        if (start, j) == (1, 1) {
                            witness = Some(rep.clone());
                        }
                        if mode == WitnessMode::All {
                            all_witnesses.push(rep);
                        }
                    }
                    Err(e) => {
                        claim = Claim::Fail {
                            detail: e.to_string(),
                        };
                        break;
                    }
                }
            }
            claim
        }
    };

    let mut row_operations = None;
    let (case1, case2) = if opts.prop1 {
        let case1 = match prop1_case1_check(f, o) {
            Ok(true) => Claim::Pass,
            Ok(false) => not_applicable("some image path has both signs"),
            Err(e) => Claim::Fail {
                detail: e.to_string(),
            },
        };
        let case2 = match prop1_case2_check(f, o) {
            Ok(Prop1Outcome::Derived(d)) => {
                row_operations = Some(d.ops);
                Claim::Pass
            }
            Ok(Prop1Outcome::NotApplicable(why)) => Claim::NotApplicable { reason: why },
            Err(e) => Claim::Fail {
                detail: e.to_string(),
            },
        };
        (case1, case2)
    } else {
        (not_applicable("not requested"), not_applicable("not requested"))
    };

    let claims = Claims {
        oriented_charpoly_geometric: Claim::from_bool(cp_a == geometric, || {
            format!("charpoly(A) = {cp_a}")
        }),
        oriented_det_sign: Claim::from_bool(det_a == sign, || format!("det A = {det_a}")),
        geometric_sum_vanishes: claim_from(geometric_sum_check(a), || {
            "I + A + ... + A^n != 0".into()
        }),
        unoriented_charpoly_mod2_geometric: Claim::from_bool(
            cp_b2 == geometric.reduce_mod(z2),
            || format!("charpoly(B) mod 2 = {cp_b2}"),
        ),
        unoriented_coefficients_odd: claim_from(odd_coefficients_check(b), || {
            format!("charpoly(B) = {cp_b}")
        }),
        unoriented_z2_similar_to_companion: claim_from(z2_similarity_to_companion(b), || {
            "invariant factors of B over Z_2 differ from the companion's".into()
        }),
        lemma1: if opts.lemma1 {
            Claim::from_bool(lemma1_holds_for(f, o, a), || {
                "Φ([u,v]) != [f(u),f(v)] for some pair".into()
            })
        } else {
            not_applicable("not requested")
        },
        basis_witness: basis_claim,
        prop1_case1: case1,
        prop1_case2: case2,
    };
    let all_pass = claims.all_pass();

    Ok(InstanceReport {
        id: InstanceId::new(f, o),
        n,
        oriented: MatrixJson::from(a),
        unoriented: MatrixJson::from(b),
        oriented_charpoly: PolyJson::from(&cp_a),
        unoriented_charpoly: PolyJson::from(&cp_b),
        unoriented_charpoly_mod2: PolyJson::from(&cp_b2),
        det_oriented: det_a,
        det_unoriented: det_b,
        claims,
        witness,
        all_witnesses,
        row_operations,
        all_pass,
    })
}
