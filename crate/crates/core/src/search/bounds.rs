use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::SIEVE_LIMIT;
use crate::catalog::{Family, GroupId};
use crate::error::{Error, Result};

/// Families as the search bounds see them: `L(2,q)` has its own field cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundFamily {
    L2,
    Lie(Family),
}

impl BoundFamily {
    pub fn all() -> impl Iterator<Item = BoundFamily> {
        std::iter::once(BoundFamily::L2).chain(Family::LIE.into_iter().map(BoundFamily::Lie))
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BoundFamily::L2 => "L2",
            BoundFamily::Lie(f) => f.symbol(),
        }
    }

    fn from_symbol(s: &str) -> Option<Self> {
        if s.eq_ignore_ascii_case("L2") {
            return Some(BoundFamily::L2);
        }
        Family::from_symbol(s)
            .filter(|f| Family::LIE.contains(f))
            .map(BoundFamily::Lie)
    }

    /// Families with a degree or rank parameter.
    pub fn has_rank(self) -> bool {
        matches!(self, BoundFamily::Lie(f) if f.is_classical())
    }

    /// Smallest degree (`L`, `U`) or rank (`S`, `O`, `O+`, `O-`) the
    /// enumeration starts from; smaller ones are other families' aliases.
    pub fn min_rank(self) -> u32 {
        match self {
            BoundFamily::Lie(Family::L | Family::U) => 3,
            BoundFamily::Lie(Family::S) => 2,
            BoundFamily::Lie(Family::O) => 3,
            BoundFamily::Lie(Family::OPlus | Family::OMinus) => 4,
            _ => 0,
        }
    }

    pub fn min_q(self) -> u64 {
        match self {
            BoundFamily::L2 => 4,
            BoundFamily::Lie(Family::G2) => 3,
            BoundFamily::Lie(Family::Suzuki | Family::F4Twisted) => 8,
            BoundFamily::Lie(Family::Ree) => 27,
            _ => 2,
        }
    }
}

/// A finite box of parameters to enumerate simple groups in. A cap of 0
/// switches a family off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub alt_max_n: u32,
    pub q_max: BTreeMap<BoundFamily, u64>,
    /// Max degree for `L`, `U`; max rank `m` for `S(2m)`, `O(2m+1)`, `O+-(2m)`.
    pub rank_max: BTreeMap<BoundFamily, u32>,
    pub include_sporadics: bool,
}

impl SearchBounds {
    /// Every family switched off.
    pub fn empty() -> Self {
        Self {
            alt_max_n: 0,
            q_max: BTreeMap::new(),
            rank_max: BTreeMap::new(),
            include_sporadics: false,
        }
    }

    pub fn q_cap(&self, f: BoundFamily) -> u64 {
        self.q_max.get(&f).copied().unwrap_or(0)
    }

    pub fn rank_cap(&self, f: BoundFamily) -> u32 {
        self.rank_max.get(&f).copied().unwrap_or(0)
    }

    pub fn validate(&self) -> Result<()> {
        if self.alt_max_n != 0 && self.alt_max_n < 5 {
            return Err(Error::Bounds(format!(
                "alt_max_n = {} is below 5",
                self.alt_max_n
            )));
        }
        if self.alt_max_n as u64 >= SIEVE_LIMIT {
            return Err(Error::Bounds(format!(
                "alt_max_n must be below {SIEVE_LIMIT}"
            )));
        }
        for (&f, &q) in &self.q_max {
            if q != 0 && q < f.min_q() {
                return Err(Error::Bounds(format!(
                    "q_max.{} = {q} is below the smallest valid field size {}",
                    f.symbol(),
                    f.min_q()
                )));
            }
            if q >= SIEVE_LIMIT {
                return Err(Error::Bounds(format!(
                    "q_max.{} must be below {SIEVE_LIMIT}",
                    f.symbol()
                )));
            }
        }
        for (&f, &r) in &self.rank_max {
            if !f.has_rank() {
                return Err(Error::Bounds(format!(
                    "{} has no rank parameter",
                    f.symbol()
                )));
            }
            if r != 0 && r < f.min_rank() {
                return Err(Error::Bounds(format!(
                    "rank_max.{} = {r} is below the smallest rank {}",
                    f.symbol(),
                    f.min_rank()
                )));
            }
        }
        Ok(())
    }

    /// Sets one `key = value` entry, as in the config file.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| Error::Bounds(format!("{what} in `{key} = {value}`"));
        let key_t = key.trim();
        let value = value.trim();
        let number = || {
            value
                .parse::<u64>()
                .map_err(|_| bad("expected a natural number"))
        };
        if key_t == "alt_max_n" {
            self.alt_max_n = u32::try_from(number()?).map_err(|_| bad("value too large"))?;
        } else if key_t == "include_sporadics" {
            self.include_sporadics = match value {
                "true" | "yes" | "1" => true,
                "false" | "no" | "0" => false,
                _ => return Err(bad("expected true or false")),
            };
        } else if let Some(fam) = key_t.strip_prefix("q_max.") {
            let f = BoundFamily::from_symbol(fam).ok_or_else(|| bad("unknown family"))?;
            self.q_max.insert(f, number()?);
        } else if let Some(fam) = key_t.strip_prefix("rank_max.") {
            let f = BoundFamily::from_symbol(fam).ok_or_else(|| bad("unknown family"))?;
            if !f.has_rank() {
                return Err(bad("family has no rank parameter"));
            }
            self.rank_max.insert(
                f,
                u32::try_from(number()?).map_err(|_| bad("value too large"))?,
            );
        } else {
            return Err(bad("unknown key"));
        }
        Ok(())
    }

    /// Reads `key = value` lines on top of `self`. Blank lines and `#`
    /// comments are ignored.
    pub fn apply_config(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::Bounds(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            self.set(k, v)?;
        }
        self.validate()
    }

    /// True if `g` itself (not an isomorphic name) lies inside the box.
    fn covers_name(&self, g: &GroupId) -> bool {
        match *g {
            GroupId::Alt { n } => n <= self.alt_max_n,
            GroupId::Sporadic(_) => self.include_sporadics,
            GroupId::Classical {
                family: Family::L,
                dim: 2,
                q,
            } => q <= self.q_cap(BoundFamily::L2),
            GroupId::Classical { family, dim, q } => {
                let f = BoundFamily::Lie(family);
                let rank = match family {
                    Family::L | Family::U => dim,
                    _ => dim / 2,
                };
                rank >= f.min_rank() && rank <= self.rank_cap(f) && q <= self.q_cap(f)
            }
            GroupId::Exceptional { family, q } => q <= self.q_cap(BoundFamily::Lie(family)),
        }
    }

    /// True if `g`, under any of its names, is enumerated within these bounds.
    pub fn covers(&self, g: &GroupId) -> bool {
        self.covers_name(g) || g.isomorphic_names().iter().any(|h| self.covers_name(h))
    }
}

impl Default for SearchBounds {
    /// The box containing every group the recognition argument names.
    fn default() -> Self {
        let mut b = Self::empty();
        b.alt_max_n = 800;
        b.include_sporadics = true;
        b.q_max.insert(BoundFamily::L2, 600_000);
        for f in [Family::L, Family::U] {
            b.q_max.insert(BoundFamily::Lie(f), 729);
            b.rank_max.insert(BoundFamily::Lie(f), 8);
        }
        for f in [Family::S, Family::O, Family::OPlus, Family::OMinus] {
            b.q_max.insert(BoundFamily::Lie(f), 757);
            b.rank_max.insert(BoundFamily::Lie(f), 8);
        }
        for f in Family::LIE.into_iter().filter(|f| !f.is_classical()) {
            b.q_max.insert(BoundFamily::Lie(f), 27);
        }
        b
    }
}

impl FromStr for SearchBounds {
    type Err = Error;

    /// Config text applied on top of an all-off box.
    fn from_str(text: &str) -> Result<Self> {
        let mut b = Self::empty();
        b.apply_config(text)?;
        Ok(b)
    }
}

impl fmt::Display for SearchBounds {
    /// Config-file form; parses back to an equal value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alt_max_n = {}", self.alt_max_n)?;
        writeln!(f, "include_sporadics = {}", self.include_sporadics)?;
        for fam in BoundFamily::all() {
            if let Some(q) = self.q_max.get(&fam) {
                writeln!(f, "q_max.{} = {q}", fam.symbol())?;
            }
            if let Some(r) = self.rank_max.get(&fam) {
                writeln!(f, "rank_max.{} = {r}", fam.symbol())?;
            }
        }
        Ok(())
    }
}
