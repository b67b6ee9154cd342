use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::sporadic::Sporadic;
use crate::arith::prime_power;
use crate::error::{Error, Result};

/// Family of a finite simple group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Alt,
    L,
    U,
    S,
    O,
    OPlus,
    OMinus,
    G2,
    F4,
    E6,
    E6Twisted,
    E7,
    E8,
    D4Triality,
    Suzuki,
    Ree,
    F4Twisted,
    Sporadic,
}

impl Family {
    pub const LIE: [Family; 16] = [
        Family::L,
        Family::U,
        Family::S,
        Family::O,
        Family::OPlus,
        Family::OMinus,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E6Twisted,
        Family::E7,
        Family::E8,
        Family::D4Triality,
        Family::Suzuki,
        Family::Ree,
        Family::F4Twisted,
    ];

    /// Name as it appears in group specs (`O+`, `2E6`, ...).
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Alt => "Alt",
            Family::L => "L",
            Family::U => "U",
            Family::S => "S",
            Family::O => "O",
            Family::OPlus => "O+",
            Family::OMinus => "O-",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E6Twisted => "2E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::D4Triality => "3D4",
            Family::Suzuki => "2B2",
            Family::Ree => "2G2",
            Family::F4Twisted => "2F4",
            Family::Sporadic => "Sporadic",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        let upper = s.to_ascii_uppercase();
        [Family::Alt, Family::Sporadic]
            .into_iter()
            .chain(Family::LIE)
            .find(|f| f.symbol().to_ascii_uppercase() == upper)
    }

    /// Classical families carry a dimension parameter.
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Family::L | Family::U | Family::S | Family::O | Family::OPlus | Family::OMinus
        )
    }
}

/// A finite simple group, named by family and parameters.
///
/// Classical groups carry the dimension of the natural module as written in
/// the usual notation: `L(n,q)`, `U(n,q)`, `S(2m,q)`, `O(2m+1,q)`,
/// `O+(2m,q)`, `O-(2m,q)`. Values are only meaningful once
/// [`GroupId::validate`] accepts them; [`parse_group`] always validates.
///
/// The derived ordering (family, then parameters) is the enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupId {
    Alt { n: u32 },
    Classical { family: Family, dim: u32, q: u64 },
    Exceptional { family: Family, q: u64 },
    Sporadic(Sporadic),
}

impl GroupId {
    pub fn alt(n: u32) -> Self {
        GroupId::Alt { n }
    }

    pub fn classical(family: Family, dim: u32, q: u64) -> Self {
        GroupId::Classical { family, dim, q }
    }

    pub fn exceptional(family: Family, q: u64) -> Self {
        GroupId::Exceptional { family, q }
    }

    /// `L(2,q)`.
    pub fn l2(q: u64) -> Self {
        Self::classical(Family::L, 2, q)
    }

    pub fn family(&self) -> Family {
        match *self {
            GroupId::Alt { .. } => Family::Alt,
            GroupId::Classical { family, .. } | GroupId::Exceptional { family, .. } => family,
            GroupId::Sporadic(_) => Family::Sporadic,
        }
    }

    /// Field size, for groups of Lie type.
    pub fn field_size(&self) -> Option<u64> {
        match *self {
            GroupId::Classical { q, .. } | GroupId::Exceptional { q, .. } => Some(q),
            _ => None,
        }
    }

    /// Checks that the parameters name a simple group.
    pub fn validate(&self) -> Result<()> {
        let not_simple = |constraint: &str| {
            Err(Error::NotSimple {
                group: self.to_string(),
                constraint: constraint.to_string(),
            })
        };
        match *self {
            GroupId::Alt { n } => {
                if n < 5 {
                    return not_simple("Alt(n) requires n >= 5");
                }
            }
            GroupId::Sporadic(_) => {}
            GroupId::Classical { family, dim, q } => {
                prime_power(q).ok_or_else(|| Error::NotPrimePower(q.to_string()))?;
                match family {
                    Family::L => {
                        if dim < 2 {
                            return not_simple("L(n,q) requires n >= 2");
                        }
                        if dim == 2 && q < 4 {
                            return not_simple("L(2,q) requires q >= 4");
                        }
                    }
                    Family::U => {
                        if dim < 2 {
                            return not_simple("U(n,q) requires n >= 2");
                        }
                        if dim == 2 && q < 4 {
                            return not_simple("U(2,q) requires q >= 4");
                        }
                        if dim == 3 && q == 2 {
                            return not_simple("U(3,q) requires q >= 3");
                        }
                    }
                    Family::S => {
                        if dim < 2 || dim % 2 != 0 {
                            return not_simple("S(2m,q) requires an even dimension 2m >= 2");
                        }
                        if dim == 2 && q < 4 {
                            return not_simple("S(2,q) requires q >= 4");
                        }
                        if dim == 4 && q == 2 {
                            return not_simple("S(4,q) requires q >= 3");
                        }
                    }
                    Family::O => {
                        if dim < 3 || dim % 2 != 1 {
                            return not_simple("O(2m+1,q) requires an odd dimension 2m+1 >= 3");
                        }
                        if dim == 3 && q < 4 {
                            return not_simple("O(3,q) requires q >= 4");
                        }
                        if dim == 5 && q == 2 {
                            return not_simple("O(5,q) requires q >= 3");
                        }
                    }
                    Family::OPlus => {
                        if dim < 6 || dim % 2 != 0 {
                            return not_simple("O+(2m,q) requires an even dimension 2m >= 6");
                        }
                    }
                    Family::OMinus => {
                        if dim < 4 || dim % 2 != 0 {
                            return not_simple("O-(2m,q) requires an even dimension 2m >= 4");
                        }
                    }
                    _ => unreachable!("classical variant with non-classical family"),
                }
            }
            GroupId::Exceptional { family, q } => {
                let (p, f) = prime_power(q).ok_or_else(|| Error::NotPrimePower(q.to_string()))?;
                match family {
                    Family::G2 if q == 2 => return not_simple("G2(q) requires q >= 3"),
                    Family::Suzuki if p != 2 || f % 2 == 0 => {
                        return not_simple("2B2(q) requires q = 2^(2k+1)")
                    }
                    Family::Suzuki if q == 2 => return not_simple("2B2(q) requires q >= 8"),
                    Family::Ree if p != 3 || f % 2 == 0 => {
                        return not_simple("2G2(q) requires q = 3^(2k+1)")
                    }
                    Family::Ree if q == 3 => return not_simple("2G2(q) requires q >= 27"),
                    Family::F4Twisted if p != 2 || f % 2 == 0 => {
                        return not_simple("2F4(q) requires q = 2^(2k+1)")
                    }
                    Family::F4Twisted if q == 2 => {
                        return not_simple("2F4(q) requires q >= 8; 2F4(2)' is the Tits group")
                    }
                    f if f.is_classical() || f == Family::Alt || f == Family::Sporadic => {
                        unreachable!("exceptional variant with non-exceptional family")
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// One step of the isomorphism table, or `None` if `self` is already a
    /// class representative.
    fn alias_step(&self) -> Option<GroupId> {
        use Family::*;
        let GroupId::Classical { family, dim, q } = *self else {
            return None;
        };
        Some(match (family, dim, q) {
            (L, 2, 4) | (L, 2, 5) => GroupId::alt(5),
            (L, 2, 9) => GroupId::alt(6),
            (L, 4, 2) => GroupId::alt(8),
            (L, 3, 2) => GroupId::l2(7),
            (U, 2, _) | (S, 2, _) | (O, 3, _) => GroupId::l2(q),
            (U, 4, 2) => GroupId::classical(S, 4, 3),
            (O, 5, _) => GroupId::classical(S, 4, q),
            (O, _, _) if q % 2 == 0 => GroupId::classical(S, dim - 1, q),
            (OPlus, 6, _) => GroupId::classical(L, 4, q),
            (OMinus, 4, _) => GroupId::l2(q.checked_mul(q)?),
            (OMinus, 6, _) => GroupId::classical(U, 4, q),
            _ => return None,
        })
    }

    /// Representative of the isomorphism class: alternating names win over
    /// `L(2,4)`, `L(2,5)`, `L(2,9)`, `L(4,2)`; `L(2,7)` over `L(3,2)`;
    /// `S(4,3)` over `U(4,2)`; low-rank and even-characteristic orthogonal
    /// names fold into `L`, `U` and `S`.
    pub fn canonical(&self) -> GroupId {
        let mut g = *self;
        while let Some(next) = g.alias_step() {
            g = next;
        }
        g
    }

    /// One step backwards through the isomorphism table.
    fn alias_preimages(&self) -> Vec<GroupId> {
        use Family::*;
        let mut out = Vec::new();
        match *self {
            GroupId::Alt { n: 5 } => out.extend([GroupId::l2(4), GroupId::l2(5)]),
            GroupId::Alt { n: 6 } => out.push(GroupId::l2(9)),
            GroupId::Alt { n: 8 } => out.push(GroupId::classical(L, 4, 2)),
            GroupId::Classical { family, dim, q } => match (family, dim) {
                (L, 2) => {
                    if q == 7 {
                        out.push(GroupId::classical(L, 3, 2));
                    }
                    out.extend([
                        GroupId::classical(U, 2, q),
                        GroupId::classical(S, 2, q),
                        GroupId::classical(O, 3, q),
                    ]);
                    let r = (q as f64).sqrt().round() as u64;
                    if r * r == q && prime_power(r).is_some() {
                        out.push(GroupId::classical(OMinus, 4, r));
                    }
                }
                (L, 4) => out.push(GroupId::classical(OPlus, 6, q)),
                (U, 4) => out.push(GroupId::classical(OMinus, 6, q)),
                (S, _) => {
                    if dim == 4 {
                        out.push(GroupId::classical(O, 5, q));
                        if q == 3 {
                            out.push(GroupId::classical(U, 4, 2));
                        }
                    } else if q % 2 == 0 {
                        out.push(GroupId::classical(O, dim + 1, q));
                    }
                }
                _ => {}
            },
            _ => {}
        }
        out
    }

    /// Every other name in the isomorphism table for this group, sorted.
    pub fn isomorphic_names(&self) -> Vec<GroupId> {
        let root = self.canonical();
        let mut seen = BTreeSet::from([root]);
        let mut queue = VecDeque::from([root]);
        while let Some(g) = queue.pop_front() {
            for h in g.alias_preimages() {
                if h.validate().is_ok() && h.canonical() == root && seen.insert(h) {
                    queue.push_back(h);
                }
            }
        }
        seen.remove(self);
        seen.into_iter().collect()
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Alt { n } => write!(f, "Alt({n})"),
            GroupId::Classical { family, dim, q } => write!(f, "{}({dim},{q})", family.symbol()),
            GroupId::Exceptional { family, q } => write!(f, "{}({q})", family.symbol()),
            GroupId::Sporadic(s) => write!(f, "{s}"),
        }
    }
}

/// A parsed group spec: the validated group, plus a note when the written
/// group was not simple and its simple derived subgroup was substituted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGroup {
    pub id: GroupId,
    pub note: Option<String>,
}

/// Parses a group spec such as `2E6(3)`, `Alt(757)`, `O+(8,27)`, `L(2,3^9)`
/// or a sporadic name. Matching is case-insensitive; field sizes may be
/// written as powers.
pub fn parse_group(spec: &str) -> Result<GroupId> {
    parse_group_verbose(spec).map(|p| p.id)
}

pub fn parse_group_verbose(spec: &str) -> Result<ParsedGroup> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let syntax = |reason: &str| Error::Syntax {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    if compact.is_empty() {
        return Err(syntax("empty spec"));
    }
    if let Some(s) = Sporadic::from_name(&compact) {
        return Ok(ParsedGroup {
            id: GroupId::Sporadic(s),
            note: None,
        });
    }
    let Some(open) = compact.find('(') else {
        return Err(Error::UnknownSporadic(compact));
    };
    if !compact.ends_with(')') {
        return Err(syntax("expected a closing ')'"));
    }
    let name = &compact[..open];
    let args: Vec<&str> = compact[open + 1..compact.len() - 1].split(',').collect();
    let family = Family::from_symbol(name)
        .filter(|&f| f != Family::Sporadic)
        .ok_or_else(|| syntax(&format!("unknown family {name:?}")))?;
    let nums = args
        .iter()
        .map(|a| parse_number(a).ok_or_else(|| syntax(&format!("bad number {a:?}"))))
        .collect::<Result<Vec<u64>>>()?;

    let id = match (family, nums.as_slice()) {
        (Family::Alt, [n]) => {
            GroupId::alt(u32::try_from(*n).map_err(|_| syntax("degree too large"))?)
        }
        (Family::Alt, _) => return Err(syntax("Alt takes one argument")),
        (f, [dim, q]) if f.is_classical() => {
            let dim = u32::try_from(*dim).map_err(|_| syntax("dimension too large"))?;
            GroupId::classical(f, dim, *q)
        }
        (f, _) if f.is_classical() => {
            return Err(syntax(&format!("{} takes two arguments", f.symbol())))
        }
        (f, [q]) => GroupId::exceptional(f, *q),
        (f, _) => return Err(syntax(&format!("{} takes one argument", f.symbol()))),
    };
    if let Some(q) = id.field_size() {
        if prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q.to_string()));
        }
    }
    if let Some(derived) = derived_subgroup(&id) {
        return Ok(ParsedGroup {
            id: derived,
            note: Some(format!(
                "{id} is not simple; using its derived subgroup {derived}"
            )),
        });
    }
    id.validate()?;
    Ok(ParsedGroup { id, note: None })
}

/// Non-simple groups whose derived subgroup is simple and catalogued.
fn derived_subgroup(g: &GroupId) -> Option<GroupId> {
    use Family::*;
    match *g {
        GroupId::Classical {
            family: S,
            dim: 4,
            q: 2,
        }
        | GroupId::Classical {
            family: O,
            dim: 5,
            q: 2,
        } => Some(GroupId::alt(6)),
        GroupId::Exceptional { family: G2, q: 2 } => Some(GroupId::classical(U, 3, 3)),
        GroupId::Exceptional { family: Ree, q: 3 } => Some(GroupId::l2(8)),
        GroupId::Exceptional {
            family: F4Twisted,
            q: 2,
        } => Some(GroupId::Sporadic(super::sporadic::Sporadic::Tits)),
        _ => None,
    }
}

fn parse_number(s: &str) -> Option<u64> {
    match s.split_once('^') {
        Some((base, exp)) => {
            let base: u64 = base.parse().ok()?;
            let exp: u32 = exp.parse().ok()?;
            base.checked_pow(exp)
        }
        None => s.parse().ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Sporadic;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_group("2E6(3)").unwrap(),
            GroupId::exceptional(Family::E6Twisted, 3)
        );
        assert_eq!(parse_group("Alt(757)").unwrap(), GroupId::alt(757));
        let l24 = parse_group("L(2,4)").unwrap();
        assert_eq!(l24, GroupId::l2(4));
        assert_eq!(l24.canonical(), GroupId::alt(5));
        let names = l24.isomorphic_names();
        assert!(names.contains(&GroupId::l2(5)));
        assert!(names.contains(&GroupId::alt(5)));
    }

    #[test]
    fn case_and_whitespace_insensitive() {
        assert_eq!(parse_group("alt( 5 )").unwrap(), GroupId::alt(5));
        assert_eq!(
            parse_group("o+(8, 27)").unwrap(),
            GroupId::classical(Family::OPlus, 8, 27)
        );
        assert_eq!(parse_group("l(2,3^9)").unwrap(), GroupId::l2(19683));
        assert_eq!(
            parse_group("3d4(3)").unwrap(),
            GroupId::exceptional(Family::D4Triality, 3)
        );
    }

    #[test]
    fn rejects_non_simple() {
        for spec in ["L(2,2)", "L(2,3)", "U(3,2)", "2B2(2)", "Alt(4)", "O+(4,3)"] {
            let err = parse_group(spec).unwrap_err();
            assert!(matches!(err, Error::NotSimple { .. }), "{spec}: {err}");
        }
        let msg = parse_group("L(2,3)").unwrap_err().to_string();
        assert!(msg.contains("q >= 4"), "{msg}");
    }

    #[test]
    fn redirects_to_derived_subgroup() {
        let cases = [
            ("S(4,2)", GroupId::alt(6)),
            ("G2(2)", GroupId::classical(Family::U, 3, 3)),
            ("2G2(3)", GroupId::l2(8)),
            ("2F4(2)", GroupId::Sporadic(Sporadic::Tits)),
        ];
        for (spec, id) in cases {
            let parsed = parse_group_verbose(spec).unwrap();
            assert_eq!(parsed.id, id);
            assert!(parsed.note.is_some());
        }
        assert_eq!(
            parse_group("2F4(2)'").unwrap(),
            GroupId::Sporadic(Sporadic::Tits)
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_group("L(2,6)"),
            Err(Error::NotPrimePower(_))
        ));
        assert!(matches!(parse_group("Q(3)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group("L(2,5"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group("E6(3,3)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group("M13"), Err(Error::UnknownSporadic(_))));
        assert!(parse_group("2B2(32)").is_ok());
        assert!(matches!(
            parse_group("2B2(4)"),
            Err(Error::NotSimple { .. })
        ));
        assert!(matches!(
            parse_group("2G2(9)"),
            Err(Error::NotSimple { .. })
        ));
    }

    #[test]
    fn canonical_forms() {
        let c = |s: &str| parse_group(s).unwrap().canonical().to_string();
        assert_eq!(c("L(2,5)"), "Alt(5)");
        assert_eq!(c("L(2,9)"), "Alt(6)");
        assert_eq!(c("L(4,2)"), "Alt(8)");
        assert_eq!(c("O+(6,2)"), "Alt(8)");
        assert_eq!(c("L(3,2)"), "L(2,7)");
        assert_eq!(c("U(4,2)"), "S(4,3)");
        assert_eq!(c("O-(6,2)"), "S(4,3)");
        assert_eq!(c("O(7,4)"), "S(6,4)");
        assert_eq!(c("O(7,3)"), "O(7,3)");
        assert_eq!(c("O-(4,757)"), "L(2,573049)");
        assert_eq!(c("E6(3)"), "E6(3)");
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "Alt(5)", "L(3,27)", "O+(8,27)", "O-(10,3)", "2E6(3)", "3D4(3)", "Fi24'", "2F4(2)'",
        ] {
            let g = parse_group(s).unwrap();
            assert_eq!(g.to_string(), s);
            assert_eq!(parse_group(&g.to_string()).unwrap(), g);
        }
    }
}
