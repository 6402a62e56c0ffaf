//! Exact bookkeeping of the known chromatic-profile values and the
//! locally bipartite structure thresholds.

use std::fmt::Write as _;

use locolor_core::Rational;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    ProvenExact,
    UpperBound,
    LowerBound,
    /// The value exists but is not quantified; nothing numeric to check.
    ExistenceOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdRow {
    pub quantity: String,
    pub a: Option<usize>,
    pub b: Option<usize>,
    /// Colour count of a profile value; `None` for thresholds and
    /// structural statements.
    pub k: Option<usize>,
    #[serde(serialize_with = "ser_opt_ratio")]
    pub value: Option<Rational>,
    /// `γ` in `1 - 1/(a + b - 1 + γ)`, when the row is of that shape.
    #[serde(serialize_with = "ser_opt_ratio")]
    pub gamma: Option<Rational>,
    pub status: Status,
}

fn ser_opt_ratio<S: serde::Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

fn int(x: usize) -> Rational {
    Rational::from_integer(x as i128)
}

fn ratio(p: i128, q: i128) -> Rational {
    Rational::new(p, q)
}

/// `1 - 1/x`.
fn one_minus_recip(x: Rational) -> Rational {
    Rational::from_integer(1) - x.recip()
}

#[derive(Clone, Debug, Serialize)]
pub struct ThresholdTable {
    pub rows: Vec<ThresholdRow>,
}

/// A table invariant that does not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableViolation {
    pub row: Option<usize>,
    pub detail: String,
}

impl ThresholdTable {
    /// Rows for every `a ≤ max_a`, `b ≤ max_b` (both at least 1).
    pub fn new(max_a: usize, max_b: usize) -> Self {
        let mut rows = Vec::new();
        let mut push = |quantity: String, a, b, k, value, gamma, status| {
            rows.push(ThresholdRow {
                quantity,
                a,
                b,
                k,
                value,
                gamma,
                status,
            })
        };
        push("δχ(F_{1,2}, 3)".into(), Some(1), Some(2), Some(3), Some(ratio(4, 7)), Some(ratio(1, 3)), Status::ProvenExact);
        push("δχ(F_{1,2}, 4)".into(), Some(1), Some(2), Some(4), Some(ratio(6, 11)), None, Status::UpperBound);
        for a in 1..=max_a {
            for b in 1..=max_b {
                let ell = a + b - 1;
                if b >= 2 {
                    for k in 1..=ell {
                        push(format!("δχ(F_{{{a},{b}}}, {k})"), Some(a), Some(b), Some(k), Some(one_minus_recip(int(a + b))), None, Status::ProvenExact);
                    }
                    push(format!("δχ(F_{{{a},{b}}})"), Some(a), Some(b), None, Some(one_minus_recip(int(ell))), None, Status::ProvenExact);
                }
                if b == 2 && a > 1 {
                    let gamma = ratio(1, 3);
                    push(format!("δχ(F_{{{a},2}}, {})", a + 2), Some(a), Some(2), Some(a + 2), Some(one_minus_recip(int(ell) + gamma)), Some(gamma), Status::ProvenExact);
                }
                if b >= 3 {
                    let gamma = ratio(1, 7);
                    push(format!("δχ(F_{{{a},{b}}}, {})", a + b), Some(a), Some(b), Some(a + b), Some(one_minus_recip(int(ell) + gamma)), Some(gamma), Status::UpperBound);
                }
            }
        }
        for r in 2..=max_a + max_b {
            push(format!("δχ(K_{{{}}}, {r})", r + 1), None, None, Some(r), Some(one_minus_recip(int(r) - ratio(1, 3))), None, Status::ProvenExact);
            push(format!("δχ(K_{{{}}})", r + 1), None, None, None, Some(one_minus_recip(int(r) - ratio(1, 2))), None, Status::ProvenExact);
        }
        let lb = |s: &str| format!("locally bipartite: {s}");
        push(lb("3-colourable"), Some(1), Some(2), None, Some(ratio(4, 7)), None, Status::ProvenExact);
        push(lb("homomorphic to C7bar"), Some(1), Some(2), None, Some(ratio(5, 9)), None, Status::ProvenExact);
        push(lb("homomorphic to C7bar or H2+, below 5/9"), Some(1), Some(2), None, None, None, Status::ExistenceOnly);
        push(lb("4-colourable"), Some(1), Some(2), None, Some(ratio(6, 11)), None, Status::UpperBound);
        push(lb("3-colourable or contains H2"), Some(1), Some(2), None, Some(ratio(7, 13)), None, Status::ProvenExact);
        push(lb("3-colourable or contains H2 or T0"), Some(1), Some(2), None, Some(ratio(8, 15)), None, Status::ProvenExact);
        push(lb("bounded chromatic number"), Some(1), Some(2), None, Some(ratio(1, 2)), None, Status::ProvenExact);
        ThresholdTable { rows }
    }

    fn find(&self, quantity: &str) -> Option<&ThresholdRow> {
        self.rows.iter().find(|r| r.quantity == quantity)
    }

    /// Range, γ-consistency, and ordering invariants.
    pub fn cross_check(&self) -> Vec<TableViolation> {
        let mut out = Vec::new();
        let (zero, one) = (Rational::from_integer(0), Rational::from_integer(1));
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(v) = row.value {
                if v < zero || v > one {
                    out.push(TableViolation {
                        row: Some(i),
                        detail: format!("{} = {v} is outside [0, 1]", row.quantity),
                    });
                }
            }
            if row.status == Status::ExistenceOnly && row.value.is_some() {
                out.push(TableViolation {
                    row: Some(i),
                    detail: format!("{} is existence-only but stores a value", row.quantity),
                });
            }
            if let (Some(g), Some(a), Some(b), Some(v)) = (row.gamma, row.a, row.b, row.value) {
                let expect = one_minus_recip(int(a + b - 1) + g);
                if expect != v {
                    out.push(TableViolation {
                        row: Some(i),
                        detail: format!("{}: 1 - 1/(a+b-1+γ) = {expect}, stored {v}", row.quantity),
                    });
                }
            }
        }
        let mut need = |ok: bool, detail: String| {
            if !ok {
                out.push(TableViolation { row: None, detail });
            }
        };
        let value = |q: &str| self.find(q).and_then(|r| r.value);
        need(value("δχ(F_{1,2}, 3)") == Some(ratio(4, 7)), "δχ(F_{1,2}, 3) must be 4/7".into());
        let chain = [ratio(4, 7), ratio(5, 9), ratio(6, 11), ratio(7, 13), ratio(8, 15), ratio(1, 2)];
        let stored: Vec<Rational> = self.rows.iter().filter(|r| r.quantity.starts_with("locally bipartite")).filter_map(|r| r.value).collect();
        need(stored == chain, format!("locally bipartite thresholds {stored:?} differ from the expected chain"));
        need(chain.windows(2).all(|w| w[0] > w[1]), "locally bipartite thresholds must decrease".into());
        // First interesting value sits strictly between the threshold and
        // the trivial profile value, and below the clique-free threshold.
        for row in self.rows.iter().filter(|r| r.gamma.is_some()) {
            let (a, b, v) = (row.a.unwrap(), row.b.unwrap(), row.value.unwrap());
            let ell = a + b - 1;
            let mut msg = String::new();
            let threshold = one_minus_recip(int(ell));
            let trivial = one_minus_recip(int(a + b));
            let clique_free = one_minus_recip(int(ell) + ratio(1, 2));
            if !(threshold < v && v < trivial && v < clique_free) {
                let _ = write!(msg, "{} = {v} not inside ({threshold}, min({trivial}, {clique_free}))", row.quantity);
                need(false, msg);
            }
        }
        out
    }
}
