//! Simple-group catalog, signature primes and the descending-prime
//! elimination ladder.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, factorize, is_prime, prime_factors_bounded, sieve};
use crate::error::{Error, Result};
use crate::indices::w_alt_2t;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "alt_prime")]
    AltPrime,
    #[serde(rename = "alt_2power")]
    Alt2Power,
    #[serde(rename = "psl2")]
    Psl2,
    #[serde(rename = "sporadic")]
    Sporadic,
    #[serde(rename = "cyclic")]
    Cyclic,
    /// `Alt(n)` with `n` neither prime nor a power of two.
    #[serde(rename = "alt_other")]
    AltOther,
    #[serde(rename = "psl3_4")]
    Psl3Four,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DataSource {
    #[serde(rename = "formula")]
    Formula,
    #[serde(rename = "paper-table")]
    PaperTable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGroupDescriptor {
    pub name: String,
    pub family: Family,
    /// `p` for `Alt(p)`, `PSL(2,p)` and `C_p`; `t` for `Alt(2^t)`; `n` for
    /// other alternating groups; empty otherwise.
    pub params: Vec<u64>,
    pub order: BigUint,
    pub useful_odd_indices: Vec<BigUint>,
    pub signature_primes: BTreeSet<u64>,
    pub source: DataSource,
}

impl SimpleGroupDescriptor {
    fn formula(
        name: String,
        family: Family,
        params: Vec<u64>,
        order: BigUint,
        useful: Vec<BigUint>,
    ) -> Self {
        let mut desc = SimpleGroupDescriptor {
            name,
            family,
            params,
            order,
            useful_odd_indices: useful,
            signature_primes: BTreeSet::new(),
            source: DataSource::Formula,
        };
        desc.signature_primes = signature_primes(&desc).unwrap_or_default();
        desc
    }

    /// `Alt(n)`, `n ≥ 5`. Powers of two `n = 2^t` get the `Alt(2^t)` name.
    pub fn alternating(n: u64) -> Self {
        let order = factorial(n) / 2u32;
        if is_prime(n) {
            Self::formula(
                format!("Alt({n})"),
                Family::AltPrime,
                vec![n],
                order,
                vec![n.into()],
            )
        } else if n >= 8 && n.is_power_of_two() {
            let t = n.trailing_zeros() as u64;
            let w = w_alt_2t(t as u32).expect("t ≥ 3");
            Self::formula(
                format!("Alt(2^{t})"),
                Family::Alt2Power,
                vec![t],
                order,
                vec![w],
            )
        } else {
            Self::formula(
                format!("Alt({n})"),
                Family::AltOther,
                vec![n],
                order,
                Vec::new(),
            )
        }
    }

    pub fn psl2(p: u64) -> Self {
        let (lo, hi) = (p * (p - 1) / 2, p * (p + 1) / 2);
        let odd = if lo % 2 == 1 { lo } else { hi };
        Self::formula(
            format!("PSL(2,{p})"),
            Family::Psl2,
            vec![p],
            BigUint::from(p * (p * p - 1) / 2),
            vec![odd.into()],
        )
    }

    pub fn cyclic(p: u64) -> Self {
        Self::formula(
            format!("C{p}"),
            Family::Cyclic,
            vec![p],
            p.into(),
            Vec::new(),
        )
    }

    pub fn psl3_4() -> Self {
        Self::formula(
            "PSL(3,4)".into(),
            Family::Psl3Four,
            Vec::new(),
            20160u32.into(),
            Vec::new(),
        )
    }

    /// Sporadic group by its catalog name (`M11`, `Fi24'`, `M`, …).
    pub fn sporadic(name: &str) -> Result<Self> {
        simple_catalog()
            .iter()
            .find(|d| d.family == Family::Sporadic && d.name == name)
            .cloned()
            .ok_or_else(|| Error::UnsupportedFamily(format!("unknown sporadic group {name:?}")))
    }

    /// Largest signature prime: the ladder row this group lands in.
    pub fn elimination_prime(&self) -> Option<u64> {
        self.signature_primes.iter().next_back().copied()
    }
}

/// Prime factors of the family's designated odd useful index. Sporadic
/// values are table data.
pub fn signature_primes(desc: &SimpleGroupDescriptor) -> Result<BTreeSet<u64>> {
    match desc.family {
        Family::AltPrime => Ok(BTreeSet::from([desc.params[0]])),
        Family::Psl2 => {
            let index = desc.useful_odd_indices[0]
                .to_u64()
                .expect("PSL(2,p) index fits in u64");
            Ok(factorize(index).into_iter().map(|(p, _)| p).collect())
        }
        Family::Alt2Power => {
            let t = desc.params[0] as u32;
            let w = w_alt_2t(t)?;
            let primes = prime_factors_bounded(&w, 1usize << t)
                .expect("prime factors of w(2^(t-1),2) are below 2^t");
            Ok(primes.into_iter().collect())
        }
        Family::Sporadic => Ok(desc.signature_primes.clone()),
        _ => Err(Error::UnsupportedFamily(format!(
            "{} has no designated odd useful index",
            desc.name
        ))),
    }
}

#[derive(Debug, Deserialize)]
struct CatalogRecord {
    name: String,
    family: Family,
    params: Vec<u64>,
    order: String,
    useful_odd_indices: Vec<String>,
    signature_primes: Vec<u64>,
    source: DataSource,
}

const CATALOG_JSON: &str = include_str!("../data/catalog.json");

fn parse_big(s: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| Error::Data(format!("bad decimal integer {s:?} in catalog")))
}

/// Parses a catalog in the shipped JSON format.
pub fn parse_catalog(json: &str) -> Result<Vec<SimpleGroupDescriptor>> {
    let records: Vec<CatalogRecord> =
        serde_json::from_str(json).map_err(|e| Error::Data(e.to_string()))?;
    records
        .into_iter()
        .map(|r| {
            Ok(SimpleGroupDescriptor {
                order: parse_big(&r.order)?,
                useful_odd_indices: r
                    .useful_odd_indices
                    .iter()
                    .map(|s| parse_big(s))
                    .collect::<Result<_>>()?,
                name: r.name,
                family: r.family,
                params: r.params,
                signature_primes: r.signature_primes.into_iter().collect(),
                source: r.source,
            })
        })
        .collect()
}

/// The 66 catalogued simple groups: 26 sporadic groups, `PSL(2,p)` and
/// `Alt(p)` for primes `5 ≤ p ≤ 71`, and `Alt(2^t)` for `3 ≤ t ≤ 6`.
pub fn simple_catalog() -> &'static [SimpleGroupDescriptor] {
    static CATALOG: OnceLock<Vec<SimpleGroupDescriptor>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(CATALOG_JSON).expect("shipped catalog parses"))
}

/// Descriptor from a short spec: `alt:<n>`, `alt2t:<t>`, `psl2:<p>`,
/// `sporadic:<name>` or a bare sporadic name.
pub fn descriptor_from_spec(spec: &str) -> Result<SimpleGroupDescriptor> {
    let spec = spec.trim();
    let Some((kind, arg)) = spec.split_once(':') else {
        return SimpleGroupDescriptor::sporadic(spec);
    };
    let number = || -> Result<u64> {
        arg.parse()
            .map_err(|_| Error::parse(kind.len() + 1, format!("expected an integer, got {arg:?}")))
    };
    match kind {
        "alt" => {
            let n = number()?;
            if n < 5 {
                return Err(Error::InvalidParameter(format!("Alt({n}) is not simple")));
            }
            Ok(SimpleGroupDescriptor::alternating(n))
        }
        "alt2t" => {
            let t = number()?;
            if !(3..=40).contains(&t) {
                return Err(Error::InvalidParameter(format!(
                    "alt2t needs 3 ≤ t ≤ 40, got {t}"
                )));
            }
            Ok(SimpleGroupDescriptor::alternating(1 << t))
        }
        "psl2" => {
            let p = number()?;
            if p < 5 || !is_prime(p) {
                return Err(Error::InvalidParameter(format!(
                    "psl2:{p}: parameter must be a prime ≥ 5"
                )));
            }
            Ok(SimpleGroupDescriptor::psl2(p))
        }
        "sporadic" => SimpleGroupDescriptor::sporadic(arg),
        _ => Err(Error::parse(0, format!("unknown descriptor kind {kind:?}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderRow {
    pub prime: u64,
    pub groups: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderReport {
    pub rows: Vec<LadderRow>,
    pub leftovers: Vec<String>,
}

/// Repeatedly removes every remaining group whose elimination prime is the
/// current maximum.
pub fn eliminate(catalog: &[SimpleGroupDescriptor]) -> LadderReport {
    eliminate_until(catalog, 0)
}

/// Like [`eliminate`], but stops before the first row prime below `stop`;
/// everything not yet removed is reported as a leftover.
pub fn eliminate_until(catalog: &[SimpleGroupDescriptor], stop: u64) -> LadderReport {
    let mut remaining: Vec<&SimpleGroupDescriptor> = catalog.iter().collect();
    let mut rows = Vec::new();
    while let Some(q) = remaining.iter().filter_map(|d| d.elimination_prime()).max() {
        if q < stop {
            break;
        }
        let (hit, rest): (Vec<_>, Vec<_>) = remaining
            .into_iter()
            .partition(|d| d.elimination_prime() == Some(q));
        rows.push(LadderRow {
            prime: q,
            groups: hit.iter().map(|d| d.name.clone()).collect(),
        });
        remaining = rest;
    }
    LadderReport {
        rows,
        leftovers: remaining.iter().map(|d| d.name.clone()).collect(),
    }
}

impl LadderReport {
    pub fn render_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.prime.to_string().len())
            .max()
            .unwrap_or(1)
            .max(1);
        let mut out = String::new();
        let _ = writeln!(out, "{:>width$}  groups", "r");
        for row in &self.rows {
            let _ = writeln!(out, "{:>width$}  {}", row.prime, row.groups.join(", "));
        }
        if !self.leftovers.is_empty() {
            let _ = writeln!(out, "leftovers: {}", self.leftovers.join(", "));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.rows).expect("rows serialise")
    }
}

/// The published elimination table, row by row.
const PUBLISHED_TABLE: [(u64, &[&str]); 18] = [
    (71, &["PSL(2,71)", "M", "Alt(71)"]),
    (67, &["PSL(2,67)", "Alt(67)", "Ly"]),
    (61, &["Alt(61)", "Alt(2^6)"]),
    (59, &["PSL(2,59)", "Alt(59)"]),
    (53, &["PSL(2,53)", "Alt(53)"]),
    (47, &["PSL(2,47)", "Alt(47)", "BM"]),
    (43, &["PSL(2,43)", "Alt(43)", "J4"]),
    (41, &["PSL(2,41)", "Alt(41)"]),
    (37, &["PSL(2,37)", "Alt(37)"]),
    (31, &["PSL(2,31)", "Alt(31)", "Alt(2^5)", "O'N"]),
    (29, &["PSL(2,29)", "Alt(29)", "Fi24'", "Ru"]),
    (
        23,
        &["PSL(2,23)", "Alt(23)", "M23", "M24", "Co2", "Co3", "Fi23"],
    ),
    (19, &["PSL(2,19)", "Alt(19)", "J1", "J3", "HN", "Th"]),
    (17, &["PSL(2,17)", "Alt(17)", "He"]),
    (
        13,
        &["PSL(2,13)", "Alt(13)", "Alt(2^4)", "Suz", "Co1", "Fi22"],
    ),
    (
        11,
        &["PSL(2,11)", "Alt(11)", "M11", "M12", "M22", "HS", "McL"],
    ),
    (7, &["PSL(2,7)", "Alt(7)", "J2"]),
    (5, &["PSL(2,5)", "Alt(5)", "Alt(2^3)"]),
];

/// The one entry missing from the published table: `PSL(2,61)` has
/// signature prime 61 like every other `PSL(2,p)` in its row.
pub const TABLE_ERRATUM: (u64, &str) = (61, "PSL(2,61)");

/// The published table; with `corrected`, [`TABLE_ERRATUM`] is applied.
pub fn published_table(corrected: bool) -> Vec<LadderRow> {
    PUBLISHED_TABLE
        .iter()
        .map(|&(prime, groups)| {
            let mut groups: Vec<String> = groups.iter().map(|s| s.to_string()).collect();
            if corrected && prime == TABLE_ERRATUM.0 {
                groups.insert(0, TABLE_ERRATUM.1.to_string());
            }
            LadderRow { prime, groups }
        })
        .collect()
}

/// Row-by-row differences between a computed ladder and a reference table.
/// Group order inside a row is ignored.
pub fn diff_table(report: &LadderReport, reference: &[LadderRow]) -> Vec<String> {
    let mut out = Vec::new();
    if report.rows.len() != reference.len() {
        out.push(format!(
            "row count: computed {}, table {}",
            report.rows.len(),
            reference.len()
        ));
    }
    let primes: BTreeSet<u64> = report
        .rows
        .iter()
        .chain(reference)
        .map(|r| r.prime)
        .collect();
    for &q in primes.iter().rev() {
        let set = |rows: &[LadderRow]| -> Option<BTreeSet<String>> {
            rows.iter()
                .find(|r| r.prime == q)
                .map(|r| r.groups.iter().cloned().collect())
        };
        match (set(&report.rows), set(reference)) {
            (Some(a), Some(b)) if a == b => {}
            (Some(a), Some(b)) => {
                let extra: Vec<_> = a.difference(&b).cloned().collect();
                let missing: Vec<_> = b.difference(&a).cloned().collect();
                out.push(format!(
                    "row {q}: computed adds [{}], lacks [{}]",
                    extra.join(", "),
                    missing.join(", ")
                ));
            }
            (Some(_), None) => out.push(format!("row {q}: computed only")),
            (None, Some(_)) => out.push(format!("row {q}: table only")),
            (None, None) => unreachable!(),
        }
    }
    if !report.leftovers.is_empty() {
        out.push(format!("leftovers: {}", report.leftovers.join(", ")));
    }
    out
}

/// All `x` in `[lo, hi]` with no prime in `[x, ⌊6x/5⌋]`.
pub fn nagura_check(lo: u64, hi: u64) -> Vec<u64> {
    let lo = lo.max(1);
    if hi < lo {
        return Vec::new();
    }
    let top = (6 * hi / 5) as usize;
    let s = sieve(top + 1);
    // next[i] = smallest prime ≥ lo + i, or usize::MAX.
    let mut next = vec![usize::MAX; top + 2 - lo as usize];
    let mut upcoming = usize::MAX;
    for n in (lo as usize..=top).rev() {
        if s.is_prime(n) {
            upcoming = n;
        }
        next[n - lo as usize] = upcoming;
    }
    (lo..=hi)
        .filter(|&x| next[(x - lo) as usize] > (6 * x / 5) as usize)
        .collect()
}

/// Every `t ≥ 2` with `2^t ≤ cap` such that `p` is the largest prime below `2^t`.
pub fn powers_with_largest_prime(p: u64, cap: u64) -> Vec<u32> {
    let s = sieve(cap as usize);
    (2..64u32)
        .take_while(|&t| 1u64 << t <= cap)
        .filter(|&t| s.largest_prime_below(1usize << t) == Some(p as usize))
        .collect()
}
