//! Verification records shared by the theorem checkers.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub id: String,
    pub claim: String,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
    pub equality: bool,
    pub note: String,
}

impl VerificationRecord {
    pub fn leq(id: impl Into<String>, claim: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        Self {
            id: id.into(),
            claim: claim.into(),
            lhs,
            rhs,
            pass: lhs <= rhs,
            equality: lhs == rhs,
            note: String::new(),
        }
    }

    pub fn eq(id: impl Into<String>, claim: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        Self {
            id: id.into(),
            claim: claim.into(),
            lhs,
            rhs,
            pass: lhs == rhs,
            equality: lhs == rhs,
            note: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

impl fmt::Display for VerificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}{}",
            self.id,
            self.claim,
            self.lhs,
            self.rhs,
            if self.pass { "pass" } else { "FAIL" },
            if self.note.is_empty() {
                String::new()
            } else {
                format!("\t{}", self.note)
            }
        )
    }
}
