//! Canonical textual names for patterns (grammar version 1).
//!
//! ```text
//! ap:<len>
//! polyvdw:<poly>[;<poly>…]
//! schur:add | schur:mul | schur:star:<l>,<k>      [:distinct]
//! moreira | blm
//! fp:t=<t>:d=<depth>
//! glue:poly=<poly>:star=<l>,<k>   [:n=<arity>] [:allow-equal]
//! glue:mean:star=<l>,<k>          [:n=<arity>]
//! glue:system=<poly>[;<poly>…]:star=<l>,<k>   [:n=<arity>] [:allow-equal]
//! mixed:t=<t>:d=<depth>:<family name>
//! quad:t=<t>:d=<depth>
//! ```
//!
//! Polynomials are sums of monomials in `d`, e.g. `d^2`, `-3d`, `2d^3+d`.
//! These names appear in reports and in CNF metadata; parsing and rendering
//! round-trip exactly.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{GlueLhs, GlueSpec, PatternError, PatternSpec, TripleOp};
use crate::algebra::{AffineShift, IntPolynomial, StarParams};

impl PatternSpec {
    pub fn canonical_name(&self) -> String {
        match self {
            PatternSpec::Ap { len } => alloc::format!("ap:{len}"),
            PatternSpec::PolyVdw { polys } => alloc::format!("polyvdw:{}", join_polys(polys)),
            PatternSpec::SchurTriple { op, distinct } => {
                let mut s = match op {
                    TripleOp::Add => String::from("schur:add"),
                    TripleOp::Mul => String::from("schur:mul"),
                    TripleOp::Star(p) => alloc::format!("schur:star:{},{}", p.l(), p.k()),
                };
                if *distinct {
                    s.push_str(":distinct");
                }
                s
            }
            PatternSpec::MoreiraTriple => String::from("moreira"),
            PatternSpec::BlmTriple => String::from("blm"),
            PatternSpec::Products { shift, depth } => {
                alloc::format!("fp:t={}:d={}", shift.t(), depth)
            }
            PatternSpec::Glue(g) => {
                let mut s = String::from("glue:");
                match &g.lhs {
                    GlueLhs::PolyOffset { poly } => s.push_str(&alloc::format!("poly={poly}")),
                    GlueLhs::Mean => s.push_str("mean"),
                    GlueLhs::System { polys } => {
                        s.push_str(&alloc::format!("system={}", join_polys(polys)))
                    }
                }
                s.push_str(&alloc::format!(":star={},{}", g.star.l(), g.star.k()));
                if g.rhs_arity != 2 {
                    s.push_str(&alloc::format!(":n={}", g.rhs_arity));
                }
                if g.allow_equal_xy {
                    s.push_str(":allow-equal");
                }
                s
            }
            PatternSpec::Mixed { family, shift, depth } => {
                alloc::format!("mixed:t={}:d={}:{}", shift.t(), depth, family.canonical_name())
            }
            PatternSpec::QuadSeq { shift, depth } => {
                alloc::format!("quad:t={}:d={}", shift.t(), depth)
            }
        }
    }

    /// Parses a canonical name; the result is validated.
    pub fn parse(name: &str) -> Result<Self, PatternError> {
        let spec = parse_inner(name.trim())?;
        spec.validate()?;
        Ok(spec)
    }
}

fn join_polys(polys: &[IntPolynomial]) -> String {
    let parts: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
    parts.join(";")
}

fn bad(name: &str, why: &str) -> PatternError {
    PatternError::Parse(alloc::format!("`{name}`: {why}"))
}

fn parse_poly(s: &str, name: &str) -> Result<IntPolynomial, PatternError> {
    s.parse::<IntPolynomial>().map_err(|e| bad(name, &e))
}

fn parse_polys(s: &str, name: &str) -> Result<Vec<IntPolynomial>, PatternError> {
    s.split(';').map(|p| parse_poly(p, name)).collect()
}

fn parse_int<T: core::str::FromStr>(s: &str, name: &str, what: &str) -> Result<T, PatternError> {
    s.trim().parse().map_err(|_| bad(name, &alloc::format!("bad {what} `{s}`")))
}

fn parse_star(s: &str, name: &str) -> Result<StarParams, PatternError> {
    let (l, k) = s.split_once(',').ok_or_else(|| bad(name, "expected l,k"))?;
    StarParams::new(parse_int(l, name, "l")?, parse_int(k, name, "k")?)
        .map_err(|e| bad(name, &alloc::format!("{e}")))
}

fn parse_kv<'a>(seg: &'a str, key: &str) -> Option<&'a str> {
    seg.strip_prefix(key).and_then(|r| r.strip_prefix('='))
}

fn parse_inner(name: &str) -> Result<PatternSpec, PatternError> {
    let (head, rest) = name.split_once(':').unwrap_or((name, ""));
    match head {
        "ap" => Ok(PatternSpec::Ap { len: parse_int(rest, name, "length")? }),
        "polyvdw" => Ok(PatternSpec::PolyVdw { polys: parse_polys(rest, name)? }),
        "moreira" if rest.is_empty() => Ok(PatternSpec::MoreiraTriple),
        "blm" if rest.is_empty() => Ok(PatternSpec::BlmTriple),
        "schur" => {
            let mut segs = rest.split(':');
            let op = match segs.next() {
                Some("add") => TripleOp::Add,
                Some("mul") => TripleOp::Mul,
                Some("star") => {
                    let lk = segs.next().ok_or_else(|| bad(name, "schur:star needs l,k"))?;
                    TripleOp::Star(parse_star(lk, name)?)
                }
                _ => return Err(bad(name, "expected add, mul, or star")),
            };
            let mut distinct = false;
            for seg in segs {
                match seg {
                    "distinct" => distinct = true,
                    other => return Err(bad(name, &alloc::format!("unknown segment `{other}`"))),
                }
            }
            Ok(PatternSpec::SchurTriple { op, distinct })
        }
        "fp" | "quad" => {
            let (mut t, mut d) = (None, None);
            for seg in rest.split(':') {
                if let Some(v) = parse_kv(seg, "t") {
                    t = Some(parse_int(v, name, "t")?);
                } else if let Some(v) = parse_kv(seg, "d") {
                    d = Some(parse_int(v, name, "depth")?);
                } else {
                    return Err(bad(name, &alloc::format!("unknown segment `{seg}`")));
                }
            }
            let shift = AffineShift(t.ok_or_else(|| bad(name, "missing t="))?);
            let depth = d.ok_or_else(|| bad(name, "missing d="))?;
            Ok(if head == "fp" {
                PatternSpec::Products { shift, depth }
            } else {
                PatternSpec::QuadSeq { shift, depth }
            })
        }
        "glue" => {
            let mut segs = rest.split(':');
            let first = segs.next().ok_or_else(|| bad(name, "missing glue form"))?;
            let lhs = if let Some(p) = parse_kv(first, "poly") {
                GlueLhs::PolyOffset { poly: parse_poly(p, name)? }
            } else if first == "mean" {
                GlueLhs::Mean
            } else if let Some(ps) = parse_kv(first, "system") {
                GlueLhs::System { polys: parse_polys(ps, name)? }
            } else {
                return Err(bad(name, "expected poly=, mean, or system="));
            };
            let mut star = None;
            let mut rhs_arity = 2usize;
            let mut allow_equal_xy = false;
            for seg in segs {
                if let Some(v) = parse_kv(seg, "star") {
                    star = Some(parse_star(v, name)?);
                } else if let Some(v) = parse_kv(seg, "n") {
                    rhs_arity = parse_int(v, name, "arity")?;
                } else if seg == "allow-equal" {
                    allow_equal_xy = true;
                } else {
                    return Err(bad(name, &alloc::format!("unknown segment `{seg}`")));
                }
            }
            let star = star.ok_or_else(|| bad(name, "missing star=l,k"))?;
            Ok(PatternSpec::Glue(GlueSpec { lhs, star, rhs_arity, allow_equal_xy }))
        }
        "mixed" => {
            // t= and d= come first; everything after the second kv is the
            // family name verbatim (it may itself contain `:`).
            let (tseg, rest) = rest.split_once(':').ok_or_else(|| bad(name, "missing d="))?;
            let (dseg, family) = rest.split_once(':').ok_or_else(|| bad(name, "missing family"))?;
            let t = parse_kv(tseg, "t").ok_or_else(|| bad(name, "expected t="))?;
            let d = parse_kv(dseg, "d").ok_or_else(|| bad(name, "expected d="))?;
            Ok(PatternSpec::Mixed {
                family: Box::new(parse_inner(family)?),
                shift: AffineShift(parse_int(t, name, "t")?),
                depth: parse_int(d, name, "depth")?,
            })
        }
        _ => Err(bad(name, "unknown pattern family")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_names_parse() {
        for s in [
            "ap:3",
            "schur:add",
            "schur:mul",
            "schur:star:1,1",
            "schur:star:2,3:distinct",
            "glue:poly=d^2:star=1,1",
            "glue:mean:star=2,3:n=3",
            "glue:system=d;d^2:star=1,1",
            "glue:poly=d^3:star=1,-1:allow-equal",
            "quad:t=0:d=2",
            "fp:t=1:d=2",
            "polyvdw:d^2;2d",
            "moreira",
            "blm",
            "mixed:t=1:d=1:ap:3",
            "mixed:t=0:d=2:schur:star:1,1",
        ] {
            let p = PatternSpec::parse(s).unwrap_or_else(|e| panic!("{s}: {e}"));
            assert_eq!(p.canonical_name(), s, "round trip of `{s}`");
        }
    }

    #[test]
    fn rejects_malformed_names() {
        for s in [
            "ap", "ap:x", "schur", "schur:sub", "glue:mean", "glue:poly=7:star=1,1",
            "fp:t=1", "mixed:t=1:d=1:quad:t=0:d=1", "nope:1", "schur:star:3,2",
        ] {
            assert!(PatternSpec::parse(s).is_err(), "`{s}` should not parse");
        }
    }

    #[test]
    fn default_arity_is_elided() {
        let g = PatternSpec::parse("glue:poly=d^2:star=1,1:n=2").unwrap();
        assert_eq!(g.canonical_name(), "glue:poly=d^2:star=1,1");
    }

    mod round_trip {
        use super::super::*;
        use proptest::prelude::*;

        fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
            proptest::collection::vec(-9i64..=9, 1..4)
                .prop_map(IntPolynomial::new)
                .prop_filter("nonzero", |p| !p.is_zero())
        }

        fn star_strategy() -> impl Strategy<Value = StarParams> {
            (1i64..=4, -3i64..=4)
                .prop_map(|(l, d)| StarParams::new(l, l * d + 1).unwrap())
        }

        fn spec_strategy() -> impl Strategy<Value = PatternSpec> {
            let leaf = prop_oneof![
                (2u32..=10).prop_map(|len| PatternSpec::Ap { len }),
                proptest::collection::vec(poly_strategy(), 1..3)
                    .prop_map(|polys| PatternSpec::PolyVdw { polys }),
                (star_strategy(), any::<bool>()).prop_map(|(p, distinct)| {
                    PatternSpec::SchurTriple { op: TripleOp::Star(p), distinct }
                }),
                any::<bool>().prop_map(|d| PatternSpec::SchurTriple {
                    op: if d { TripleOp::Add } else { TripleOp::Mul },
                    distinct: false,
                }),
                Just(PatternSpec::MoreiraTriple),
                Just(PatternSpec::BlmTriple),
                (-5i64..=5, 1usize..=3).prop_map(|(t, depth)| PatternSpec::Products {
                    shift: AffineShift(t),
                    depth,
                }),
                (poly_strategy(), star_strategy(), 1usize..=4, any::<bool>()).prop_map(
                    |(poly, star, rhs_arity, allow_equal_xy)| {
                        PatternSpec::Glue(GlueSpec {
                            lhs: GlueLhs::PolyOffset { poly },
                            star,
                            rhs_arity,
                            allow_equal_xy,
                        })
                    }
                ),
                (star_strategy(), 1usize..=4).prop_map(|(star, rhs_arity)| {
                    PatternSpec::Glue(GlueSpec {
                        lhs: GlueLhs::Mean,
                        star,
                        rhs_arity,
                        allow_equal_xy: false,
                    })
                }),
                (proptest::collection::vec(poly_strategy(), 1..3), star_strategy()).prop_map(
                    |(polys, star)| {
                        PatternSpec::Glue(GlueSpec {
                            lhs: GlueLhs::System { polys },
                            star,
                            rhs_arity: 2,
                            allow_equal_xy: false,
                        })
                    }
                ),
                (-5i64..=5, 1usize..=2).prop_map(|(t, depth)| PatternSpec::QuadSeq {
                    shift: AffineShift(t),
                    depth,
                }),
            ];
            // one level of mixed nesting over enumerable families
            (leaf, proptest::option::of((-3i64..=3, 1usize..=2))).prop_map(|(family, mixed)| {
                match (family.is_enumerable(), mixed) {
                    (true, Some((t, depth))) => PatternSpec::Mixed {
                        family: Box::new(family),
                        shift: AffineShift(t),
                        depth,
                    },
                    _ => family,
                }
            })
        }

        proptest! {
            #[test]
            fn names_round_trip(spec in spec_strategy()) {
                prop_assert!(spec.validate().is_ok());
                let name = spec.canonical_name();
                let parsed = PatternSpec::parse(&name)
                    .unwrap_or_else(|e| panic!("`{name}`: {e}"));
                prop_assert_eq!(&parsed, &spec, "`{}`", name);
                prop_assert_eq!(parsed.canonical_name(), name);
            }
        }
    }
}
