use serde::Serialize;

use crate::kneser::{kneser_chromatic_formula, kneser_odd_girth_formula};
use crate::rational::{display, ratio, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct ArithmeticCheck {
    pub name: String,
    pub lhs: String,
    pub relation: &'static str,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArithmeticReport {
    pub checks: Vec<ArithmeticCheck>,
}

impl ArithmeticReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn compare(name: String, lhs: &Rational, relation: &'static str, rhs: &Rational) -> ArithmeticCheck {
    let holds = match relation {
        ">" => lhs > rhs,
        "<" => lhs < rhs,
        "=" => lhs == rhs,
        _ => unreachable!("unknown relation"),
    };
    ArithmeticCheck {
        name,
        lhs: display(lhs),
        relation,
        rhs: display(rhs),
        holds,
    }
}

/// Exact checks behind the measurable chromatic bounds for `S(T_3)`:
/// `1/0.45537 > 2 + 1/6`, `1/0.4361 < 2 + 1/3`, the Kneser chromatic number
/// `2 + k/6` of `K(2k + k/6, k)`, and triangle-freeness of `K(2k + k/3, k)`.
pub fn corollary14_arithmetic() -> ArithmeticReport {
    let mut checks = vec![
        compare("1/0.45537 vs 2+1/6".into(), &ratio(100_000, 45_537), ">", &ratio(13, 6)),
        compare("1/0.4361 vs 2+1/3".into(), &ratio(10_000, 4_361), "<", &ratio(7, 3)),
    ];
    for k in [6i64, 12, 18] {
        let n = 2 * k + k / 6;
        let chi = kneser_chromatic_formula(n as u64, k as u64).expect("n >= 2k");
        checks.push(compare(
            format!("chi(K({n},{k})) vs 2+k/6"),
            &ratio(chi as i64, 1),
            "=",
            &ratio(2 + k / 6, 1),
        ));
        checks.push(compare(
            format!("chi*(K({n},{k})) vs 2+1/6"),
            &ratio(n, k),
            "=",
            &ratio(13, 6),
        ));
    }
    for k in [3i64, 6, 9] {
        let n = 2 * k + k / 3;
        let og = kneser_odd_girth_formula(n as u64, k as u64).expect("n > 2k");
        checks.push(compare(
            format!("odd girth of K({n},{k}) vs 3"),
            &ratio(og as i64, 1),
            ">",
            &ratio(3, 1),
        ));
        checks.push(compare(format!("n = {n} vs 3k"), &ratio(n, 1), "<", &ratio(3 * k, 1)));
        checks.push(compare(
            format!("chi*(K({n},{k})) vs 2+1/3"),
            &ratio(n, k),
            "=",
            &ratio(7, 3),
        ));
    }
    ArithmeticReport { checks }
}
