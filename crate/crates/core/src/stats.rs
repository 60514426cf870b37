//! Statistics on interval-closed sets and exact homomesy reports.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ics::IntervalClosedSet;
use crate::poset::Poset;
use crate::rowmotion::{orbit_decomposition, Orbit, OrbitDecomposition};

pub type Rational = Ratio<i64>;

/// The closed registry of statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Cardinality,
    /// Members of even rank minus members of odd rank.
    SignedCardinality,
    /// +1 if the toggle at `x` adds it, −1 if it removes it, 0 otherwise.
    Toggleability(usize),
    MaxCount,
    MinCount,
    MaxMinusMin,
}

impl Statistic {
    pub const NAMES: [&'static str; 6] = [
        "cardinality",
        "signed_cardinality",
        "toggleability:<x>",
        "max_count",
        "min_count",
        "max_minus_min",
    ];

    pub fn id(&self) -> String {
        self.to_string()
    }

    /// Like [`FromStr`], but resolves `toggleability:<label>` against the
    /// poset's labels (ignoring whitespace), then `top`/`bottom` for a unique
    /// maximal/minimal element, then an index.
    pub fn parse_for(text: &str, p: &Poset) -> Result<Statistic> {
        let text = text.trim();
        if let Some(arg) = text.strip_prefix("toggleability:") {
            let unique = |v: Vec<usize>| (v.len() == 1).then(|| v[0]);
            let x = match (p.find_label(arg), arg.trim()) {
                (Some(x), _) => x,
                (None, "top") => unique(p.maximal_elements()).ok_or_else(|| {
                    Error::InvalidParameter("`top` needs a unique maximal element".to_string())
                })?,
                (None, "bottom") => unique(p.minimal_elements()).ok_or_else(|| {
                    Error::InvalidParameter("`bottom` needs a unique minimal element".to_string())
                })?,
                (None, t) => t
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("unknown element `{arg}`")))?,
            };
            p.check_element(x)?;
            return Ok(Statistic::Toggleability(x));
        }
        text.parse()
    }

    pub fn evaluate(&self, p: &Poset, i: &IntervalClosedSet) -> Result<i64> {
        p.check(i)?;
        Ok(match *self {
            Statistic::Cardinality => i.len() as i64,
            Statistic::SignedCardinality => {
                let ranks = p.ranks().ok_or_else(|| {
                    Error::Unranked("signed cardinality needs a ranked poset".to_string())
                })?;
                i.iter()
                    .map(|x| if ranks[x] % 2 == 0 { 1 } else { -1 })
                    .sum()
            }
            Statistic::Toggleability(x) => {
                p.check_element(x)?;
                let toggled = crate::rowmotion::toggle(p, i, x)?;
                toggled.len() as i64 - i.len() as i64
            }
            Statistic::MaxCount => p.max_of(i).len() as i64,
            Statistic::MinCount => p.min_of(i).len() as i64,
            Statistic::MaxMinusMin => p.max_of(i).len() as i64 - p.min_of(i).len() as i64,
        })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Cardinality => f.write_str("cardinality"),
            Statistic::SignedCardinality => f.write_str("signed_cardinality"),
            Statistic::Toggleability(x) => write!(f, "toggleability:{x}"),
            Statistic::MaxCount => f.write_str("max_count"),
            Statistic::MinCount => f.write_str("min_count"),
            Statistic::MaxMinusMin => f.write_str("max_minus_min"),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "cardinality" => Statistic::Cardinality,
            "signed_cardinality" => Statistic::SignedCardinality,
            "max_count" => Statistic::MaxCount,
            "min_count" => Statistic::MinCount,
            "max_minus_min" => Statistic::MaxMinusMin,
            _ => match s.strip_prefix("toggleability:") {
                Some(x) => Statistic::Toggleability(x.trim().parse().map_err(|_| {
                    Error::InvalidParameter(format!(
                        "toggleability needs an element index, got `{x}`"
                    ))
                })?),
                None => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown statistic `{s}` (expected one of {})",
                        Statistic::NAMES.join(", ")
                    )))
                }
            },
        })
    }
}

/// `"p/q"` in lowest terms, denominator always shown.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact mean of `values`.
fn mean(values: &[i64]) -> Rational {
    Rational::new(values.iter().sum(), values.len() as i64)
}

pub fn orbit_average(stat: Statistic, p: &Poset, orbit: &Orbit) -> Result<Rational> {
    let values = orbit
        .members()
        .iter()
        .map(|i| stat.evaluate(p, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(mean(&values))
}

/// Per-orbit averages of a statistic and the homomesy verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomesyReport {
    pub stat: String,
    /// `(average, orbit size)`, in the decomposition's orbit order.
    pub orbit_averages: Vec<(Rational, usize)>,
    pub global_average: Rational,
    pub homomesic: bool,
    /// The common average, when homomesic.
    pub c: Option<Rational>,
    /// Orbit indices `(0, j)` where orbit `j` is the first whose average
    /// differs from orbit 0.
    pub witness: Option<(usize, usize)>,
    /// Statistic values around each orbit, starting at its representative.
    pub values: Vec<Vec<i64>>,
}

impl HomomesyReport {
    pub fn to_json_value(&self) -> Value {
        let mut v = json!({
            "stat": self.stat,
            "homomesic": self.homomesic,
            "global_average": format_rational(&self.global_average),
            "orbit_averages": self
                .orbit_averages
                .iter()
                .map(|(a, size)| json!([format_rational(a), size]))
                .collect::<Vec<_>>(),
            "witness": self.witness.map(|(a, b)| json!([a, b])),
        });
        if let Some(c) = &self.c {
            v["c"] = json!(format_rational(c));
        }
        v
    }
}

/// Homomesy report for an arbitrary integer-valued function. The registry
/// statistics go through [`homomesy_report`]; this entry point also serves
/// negative-path tests with deliberately broken statistics.
pub fn homomesy_report_with<F>(
    decomposition: &OrbitDecomposition,
    stat_id: &str,
    f: F,
) -> Result<HomomesyReport>
where
    F: Fn(&IntervalClosedSet) -> Result<i64> + Sync,
{
    let values = decomposition
        .orbits
        .par_iter()
        .map(|o| o.members().iter().map(&f).collect::<Result<Vec<i64>>>())
        .collect::<Result<Vec<_>>>()?;
    let orbit_averages: Vec<(Rational, usize)> =
        values.iter().map(|v| (mean(v), v.len())).collect();
    let total: i64 = values.iter().flatten().sum();
    let global_average = Rational::new(total, decomposition.total.max(1) as i64);
    let witness = orbit_averages
        .iter()
        .position(|(a, _)| *a != orbit_averages[0].0)
        .map(|j| (0, j));
    let homomesic = witness.is_none();
    Ok(HomomesyReport {
        stat: stat_id.to_string(),
        c: homomesic.then(|| orbit_averages[0].0),
        orbit_averages,
        global_average,
        homomesic,
        witness,
        values,
    })
}

pub fn homomesy_report_for(
    p: &Poset,
    decomposition: &OrbitDecomposition,
    stat: Statistic,
) -> Result<HomomesyReport> {
    if let Statistic::Toggleability(x) = stat {
        p.check_element(x)?;
    }
    if stat == Statistic::SignedCardinality && !p.is_ranked() {
        return Err(Error::Unranked(
            "signed cardinality needs a ranked poset".to_string(),
        ));
    }
    homomesy_report_with(decomposition, &stat.id(), |i| stat.evaluate(p, i))
}

pub fn homomesy_report(p: &Poset, stat: Statistic) -> Result<HomomesyReport> {
    homomesy_report_for(p, &orbit_decomposition(p)?, stat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ics::enumerate_ics;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn parse_and_print() {
        for s in [
            "cardinality",
            "signed_cardinality",
            "toggleability:3",
            "max_count",
            "min_count",
            "max_minus_min",
        ] {
            assert_eq!(s.parse::<Statistic>().unwrap().to_string(), s);
        }
        assert!("size".parse::<Statistic>().is_err());
        assert!("toggleability:top".parse::<Statistic>().is_err());
        let diamond = Poset::product(&Poset::chain(2).unwrap(), &Poset::chain(2).unwrap()).unwrap();
        assert_eq!(
            Statistic::parse_for("toggleability:(2, 2)", &diamond).unwrap(),
            Statistic::Toggleability(3)
        );
        assert!(Statistic::parse_for("toggleability:9", &diamond).is_err());
        assert_eq!(
            Statistic::parse_for("toggleability:top", &diamond).unwrap(),
            Statistic::Toggleability(3)
        );
        assert_eq!(
            Statistic::parse_for("toggleability: bottom", &diamond).unwrap(),
            Statistic::Toggleability(0)
        );
        let vee = Poset::antichain(2).unwrap();
        assert!(Statistic::parse_for("toggleability:top", &vee).is_err());
    }

    #[test]
    fn simple_values() {
        let p = Poset::stacked_diamond(3, 2).unwrap();
        let empty = IntervalClosedSet::empty(&p);
        assert_eq!(Statistic::Cardinality.evaluate(&p, &empty).unwrap(), 0);
        assert_eq!(Statistic::MaxMinusMin.evaluate(&p, &empty).unwrap(), 0);
        assert_eq!(Statistic::Toggleability(3).evaluate(&p, &empty).unwrap(), 1);
        let bottom = IntervalClosedSet::from_elements(&p, [0]).unwrap();
        // adding the top would skip the middle rank
        assert_eq!(
            Statistic::Toggleability(3).evaluate(&p, &bottom).unwrap(),
            0
        );
        assert_eq!(
            Statistic::Toggleability(0).evaluate(&p, &bottom).unwrap(),
            -1
        );
        let lower = IntervalClosedSet::from_elements(&p, [0, 1, 2]).unwrap();
        assert_eq!(Statistic::Toggleability(3).evaluate(&p, &lower).unwrap(), 1);
        let ends = IntervalClosedSet::from_elements(&p, [0, 1, 2, 3]).unwrap();
        assert_eq!(Statistic::Toggleability(1).evaluate(&p, &ends).unwrap(), 0);
        assert_eq!(Statistic::SignedCardinality.evaluate(&p, &ends).unwrap(), 0);
        let unranked = Poset::from_covers(4, [(0, 1), (1, 2), (3, 2)], None).unwrap();
        assert!(matches!(
            Statistic::SignedCardinality.evaluate(&unranked, &IntervalClosedSet::empty(&unranked)),
            Err(Error::Unranked(_))
        ));
    }

    #[test]
    fn chain_cardinality_is_not_homomesic() {
        let report = homomesy_report(&Poset::chain(3).unwrap(), Statistic::Cardinality).unwrap();
        assert!(!report.homomesic);
        assert_eq!(report.orbit_averages, vec![(r(3, 2), 2), (r(7, 5), 5)]);
        assert_eq!(report.witness, Some((0, 1)));
        assert_eq!(
            report.to_json_value().to_string(),
            r#"{"global_average":"10/7","homomesic":false,"orbit_averages":[["3/2",2],["7/5",5]],"stat":"cardinality","witness":[0,1]}"#
        );
    }

    #[test]
    fn diamond_toggleability() {
        let p = Poset::stacked_diamond(3, 2).unwrap();
        for x in [0, 3] {
            let report = homomesy_report(&p, Statistic::Toggleability(x)).unwrap();
            assert!(report.homomesic);
            assert_eq!(report.c, Some(r(0, 1)));
        }
        // middle elements: 1/2 on {∅, P}, −1/5 on the 5-orbit, 0 on the 6-orbit
        for x in [1, 2] {
            let report = homomesy_report(&p, Statistic::Toggleability(x)).unwrap();
            assert!(!report.homomesic);
            assert_eq!(
                report.orbit_averages,
                vec![(r(1, 2), 2), (r(-1, 5), 5), (r(0, 1), 6)]
            );
        }
    }

    #[test]
    fn max_toggleability_plus_then_minus() {
        let p = Poset::product(&Poset::chain(2).unwrap(), &Poset::chain(3).unwrap()).unwrap();
        let top = p.maximal_elements()[0];
        let report = homomesy_report(&p, Statistic::Toggleability(top)).unwrap();
        for values in &report.values {
            for k in 0..values.len() {
                if values[k] == 1 {
                    assert_eq!(values[(k + 1) % values.len()], -1);
                }
            }
        }
    }

    #[test]
    fn weighted_averages_sum_to_total() {
        let p = Poset::ordinal_sum_of_antichains(&[2, 1, 2]).unwrap();
        for stat in [
            Statistic::Cardinality,
            Statistic::MaxCount,
            Statistic::SignedCardinality,
        ] {
            let report = homomesy_report(&p, stat).unwrap();
            let weighted: Rational = report
                .orbit_averages
                .iter()
                .map(|(a, s)| a * Rational::from(*s as i64))
                .sum();
            let direct: i64 = enumerate_ics(&p)
                .iter()
                .map(|i| stat.evaluate(&p, i).unwrap())
                .sum();
            assert_eq!(weighted, Rational::from(direct));
        }
    }

    #[test]
    fn corrupted_statistic_is_caught() {
        let p = Poset::product(&Poset::chain(2).unwrap(), &Poset::chain(3).unwrap()).unwrap();
        let d = orbit_decomposition(&p).unwrap();
        let honest = homomesy_report_for(&p, &d, Statistic::MaxMinusMin).unwrap();
        assert!(honest.homomesic);
        let corrupted = homomesy_report_with(&d, "corrupted", |i| {
            Ok(Statistic::MaxMinusMin.evaluate(&p, i)? + i64::from(i.is_full()))
        })
        .unwrap();
        assert!(!corrupted.homomesic);
        assert!(corrupted.witness.is_some());
    }
}
