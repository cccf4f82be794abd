//! Fixed tables of identity instances, rendered as aligned text.

use super::{verify_l_identity, verify_theorem_1_4, IdentityId, VerificationReport};
use crate::error::{Error, Result};

pub const TABLE_IDS: [&str; 3] = ["intro-n20", "intro-n32", "lem2.3-n35"];

/// A rendered table and whether every row passed.
#[derive(Clone, Debug)]
pub struct Table {
    pub id: &'static str,
    pub title: String,
    pub rows: Vec<(String, VerificationReport)>,
}

impl Table {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|(_, r)| r.pass)
    }

    pub fn to_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|(e, _)| e.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = format!("# {}\n", self.title);
        for (eq, r) in &self.rows {
            let pad = width - eq.chars().count();
            let value = if r.pass {
                r.lhs_value.to_string()
            } else {
                format!("{} != {}", r.lhs_value, r.rhs_value)
            };
            out += &format!(
                "{eq}{}  [{value}] {}\n",
                " ".repeat(pad),
                if r.pass { "pass" } else { "FAIL" }
            );
        }
        out
    }

    pub fn reports(&self) -> impl Iterator<Item = &VerificationReport> {
        self.rows.iter().map(|(_, r)| r)
    }
}

pub fn table(id: &str) -> Result<Table> {
    match id {
        "intro-n20" => {
            let rows = (0..=10)
                .step_by(2)
                .map(|k| {
                    let [a, _] = verify_theorem_1_4(20, k)?;
                    Ok((a.instance.equation(), a))
                })
                .collect::<Result<_>>()?;
            Ok(Table {
                id: "intro-n20",
                title: "n=20, X1(20,k) for even k".into(),
                rows,
            })
        }
        "intro-n32" => {
            let mut rows = Vec::new();
            for k in [11, 12, 13] {
                let mut pair = verify_theorem_1_4(32, k)?.to_vec();
                // X1 on the left first
                pair.sort_by_key(|r| r.instance.params.get("lhs_set").map(|p| p.to_string()));
                for r in pair {
                    rows.push((r.instance.equation_padded(3), r));
                }
            }
            Ok(Table {
                id: "intro-n32",
                title: "n=32, k=11,12,13".into(),
                rows,
            })
        }
        "lem2.3-n35" => {
            let rows = [(14, 7), (11, 13), (7, 21)]
                .into_iter()
                .map(|(k, m)| {
                    let r = verify_l_identity(1, k, m)?
                        .into_iter()
                        .find(|r| r.id() == IdentityId::Lem23)
                        .expect("d = 1 with m >= 4 always has the three-case form");
                    Ok((r.instance.equation(), r))
                })
                .collect::<Result<_>>()?;
            Ok(Table {
                id: "lem2.3-n35",
                title: "n=35, the three cases of L(k,m)".into(),
                rows,
            })
        }
        _ => Err(Error::UnknownId(id.to_string())),
    }
}
