//! Symbolic Turing-progression schedules for worms with finite modalities.
//!
//! For a worm `A` over natural-number modalities, `T + A` is equivalent to
//! the union of the progressions `T^n_{Ω_n(A)}`, and at each level `n` it is
//! `Π_{n+1}`-conservative over `T^n_{Ω_n(A)} + r_n(A)`. This module only
//! renders those statements; the arithmetical side conditions on `T` are
//! stated in the report text and never checked.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::syntax::{print_ordinal, print_worm, Style};
use crate::worm::{omega, remainder, Worm};

/// Assumptions on the base theory under which the reports hold.
pub const SIDE_CONDITIONS: &str = "assuming T is an elementary presented theory extending EA+ \
whose axioms are of complexity at most Pi_{n+1}";

/// One level of a schedule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScheduleEntry {
    pub level: u64,
    /// `Ω_level(A)`.
    pub extent: Ordinal,
    /// `r_level(A)`.
    pub remainder: Worm,
}

/// The levels `n` with `Ω_n(A) > 0`, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Schedule {
    pub worm: Worm,
    pub entries: Vec<ScheduleEntry>,
}

impl Schedule {
    /// The extent at `level`; 0 beyond the listed levels.
    pub fn extent(&self, level: u64) -> Ordinal {
        self.entries
            .iter()
            .find(|e| e.level == level)
            .map(|e| e.extent.clone())
            .unwrap_or_else(Ordinal::zero)
    }

    /// `⋃ T^n_{Ω_n(A)}` as text.
    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return format!("T + {} ≡ T", worm_text(&self.worm));
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| progression(e.level, &e.extent))
            .collect();
        format!("T + {} ≡ {}", worm_text(&self.worm), parts.join(" ∪ "))
    }
}

fn check_finite(worm: &Worm) -> Result<()> {
    match worm.modalities().iter().find(|m| !m.is_finite()) {
        Some(m) => Err(Error::ModalityTooLarge(print_ordinal(m, Style::Compact))),
        None => Ok(()),
    }
}

/// The Turing schedule of a worm over natural-number modalities.
pub fn schedule(worm: &Worm) -> Result<Schedule> {
    check_finite(worm)?;
    let mut entries = Vec::new();
    for level in 0u64.. {
        let extent = omega(&Ordinal::nat(level), worm);
        if extent.is_zero() {
            break;
        }
        entries.push(ScheduleEntry {
            level,
            extent,
            remainder: remainder(&Ordinal::nat(level), worm),
        });
    }
    Ok(Schedule {
        worm: worm.clone(),
        entries,
    })
}

/// The level-`n` conservativity statement
/// `T + A ≡_n T^n_{Ω_n(A)} + r_n(A)`, where `≡_n` is `Π_{n+1}`-equivalence.
pub fn conservativity(worm: &Worm, n: u64) -> Result<String> {
    check_finite(worm)?;
    let sub = subscript(n);
    if worm.is_empty() {
        return Ok(format!("T + ⊤ ≡{sub} T"));
    }
    let level = Ordinal::nat(n);
    let extent = omega(&level, worm);
    let rest = remainder(&level, worm);
    let mut rhs = if extent.is_zero() {
        "T".to_string()
    } else {
        progression(n, &extent)
    };
    if !rest.is_empty() {
        rhs.push_str(" + ");
        rhs.push_str(&print_worm(&rest));
    }
    Ok(format!("T + {} ≡{sub} {rhs}", print_worm(worm)))
}

fn worm_text(worm: &Worm) -> String {
    if worm.is_empty() {
        "⊤".to_string()
    } else {
        print_worm(worm)
    }
}

fn progression(level: u64, extent: &Ordinal) -> String {
    format!("T{}_{}", superscript(level), print_ordinal(extent, Style::Compact))
}

fn map_digits(n: u64, digits: [char; 10]) -> String {
    n.to_string()
        .chars()
        .map(|c| digits[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

fn subscript(n: u64) -> String {
    map_digits(n, ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'])
}

fn superscript(n: u64) -> String {
    map_digits(n, ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'])
}
