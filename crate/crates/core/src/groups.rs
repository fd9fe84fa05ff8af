//! Named groups and the group-spec grammar:
//!
//! ```text
//! alt:<n> | sym:<n> | psl2:<p> | cyclic:<n> | dihedral:<n> | gens:<cycles>
//! ```
//!
//! `<cycles>` is a `;`-separated list of permutations in cycle notation with
//! 1-based points, e.g. `gens:(1 2 3)(4 5);(1 2)`.

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation, DEFAULT_ELEMENT_CAP};

pub const DEFAULT_DEGREE_CAP: usize = 1024;

#[derive(Debug, Clone, Copy)]
pub struct CatalogOptions {
    pub element_cap: u64,
    pub degree_cap: usize,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions {
            element_cap: DEFAULT_ELEMENT_CAP,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

pub fn catalog_group(spec: &str) -> Result<PermGroup> {
    catalog_group_with(spec, &CatalogOptions::default())
}

pub fn catalog_group_with(spec: &str, opts: &CatalogOptions) -> Result<PermGroup> {
    let spec = spec.trim();
    let Some(colon) = spec.find(':') else {
        return Err(Error::parse(
            0,
            format!("expected '<kind>:<arg>', got {spec:?}"),
        ));
    };
    let (kind, arg) = (&spec[..colon], &spec[colon + 1..]);
    let arg_pos = colon + 1;
    let group = match kind {
        "gens" => parse_generators(arg, arg_pos, opts)?,
        "alt" | "sym" | "psl2" | "cyclic" | "dihedral" => {
            let n = parse_number(arg, arg_pos)?;
            let degree = match kind {
                "psl2" => n.saturating_add(1),
                _ => n,
            };
            if kind == "psl2" && (!is_prime(n as u64) || n < 5) {
                return Err(Error::InvalidParameter(format!(
                    "psl2:{n}: parameter must be a prime ≥ 5"
                )));
            }
            if degree > opts.degree_cap {
                return Err(Error::cap("degree", degree, opts.degree_cap as u64));
            }
            match kind {
                "alt" => alternating(n)?,
                "sym" => symmetric(n)?,
                "psl2" => psl2(n)?,
                "cyclic" => cyclic(n)?,
                _ => dihedral(n)?,
            }
        }
        _ => {
            return Err(Error::parse(
                0,
                format!(
                    "unknown group kind {kind:?} (expected alt, sym, psl2, cyclic, dihedral, gens)"
                ),
            ))
        }
    };
    Ok(group.with_element_cap(opts.element_cap))
}

fn parse_number(text: &str, pos: usize) -> Result<usize> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(
            pos,
            format!("expected a positive integer, got {text:?}"),
        ));
    }
    let n: usize = text
        .parse()
        .map_err(|_| Error::parse(pos, format!("integer {text:?} out of range")))?;
    if n == 0 {
        return Err(Error::parse(pos, "parameter must be positive"));
    }
    Ok(n)
}

fn cycle(points: impl IntoIterator<Item = u32>) -> Vec<u32> {
    points.into_iter().collect()
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("sym:0".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[cycle([0, 1])])?);
    }
    if n >= 3 {
        gens.push(Permutation::from_cycles(n, &[cycle(0..n as u32)])?);
    }
    PermGroup::new(n, gens)
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("alt:0".into()));
    }
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(Permutation::from_cycles(n, &[cycle([0, 1, 2])])?);
    }
    if n >= 4 {
        // An odd-length cycle through n or n-1 points is even.
        let long = if n % 2 == 1 {
            cycle(0..n as u32)
        } else {
            cycle(1..n as u32)
        };
        gens.push(Permutation::from_cycles(n, &[long])?);
    }
    PermGroup::new(n, gens)
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    let gens = if n >= 2 {
        vec![Permutation::from_cycles(n, &[cycle(0..n as u32)])?]
    } else {
        Vec::new()
    };
    PermGroup::new(n, gens)
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "dihedral:{n}: need at least 3 vertices"
        )));
    }
    let rotation = Permutation::from_cycles(n, &[cycle(0..n as u32)])?;
    let reflection = Permutation::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
    PermGroup::new(n, vec![rotation, reflection])
}

/// PSL(2, p) acting on the projective line `F_p ∪ {∞}`, with `∞` as point
/// `p`, generated by `z ↦ z + 1` and `z ↦ -1/z`.
pub fn psl2(p: usize) -> Result<PermGroup> {
    if !is_prime(p as u64) || p < 5 {
        return Err(Error::InvalidParameter(format!(
            "psl2:{p}: parameter must be a prime ≥ 5"
        )));
    }
    let inf = p as u32;
    let mut translate = vec![0u32; p + 1];
    let mut invert = vec![0u32; p + 1];
    for z in 0..p {
        translate[z] = ((z + 1) % p) as u32;
        invert[z] = if z == 0 {
            inf
        } else {
            let inv = mod_inverse(z as u64, p as u64);
            ((p as u64 - inv) % p as u64) as u32
        };
    }
    translate[p] = inf;
    invert[p] = 0;
    PermGroup::new(
        p + 1,
        vec![
            Permutation::from_images(translate)?,
            Permutation::from_images(invert)?,
        ],
    )
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn parse_generators(text: &str, offset: usize, opts: &CatalogOptions) -> Result<PermGroup> {
    let mut perms: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut degree = 1usize;
    let mut start = 0usize;
    for piece in text.split(';') {
        let cycles = parse_cycles(piece, offset + start)?;
        for c in &cycles {
            for &p in c {
                degree = degree.max(p as usize + 1);
            }
        }
        perms.push(cycles);
        start += piece.len() + 1;
    }
    if degree > opts.degree_cap {
        return Err(Error::cap("degree", degree, opts.degree_cap as u64));
    }
    let gens = perms
        .iter()
        .map(|cycles| Permutation::from_cycles(degree, cycles))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}

/// Parses `(a b c)(d e)…` into 0-based cycles, or `()` for the identity.
fn parse_cycles(text: &str, offset: usize) -> Result<Vec<Vec<u32>>> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut cycles = Vec::new();
    let mut used = std::collections::HashSet::new();
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(Error::parse(
            offset + i,
            "empty permutation (write () for the identity)",
        ));
    }
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(Error::parse(
                offset + i,
                format!("expected '(' but found {:?}", bytes[i] as char),
            ));
        }
        i += 1;
        let mut current = Vec::new();
        loop {
            skip_ws(&mut i);
            if i >= bytes.len() {
                return Err(Error::parse(offset + i, "unterminated cycle"));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            if bytes[i] == b',' {
                i += 1;
                continue;
            }
            let begin = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if begin == i {
                return Err(Error::parse(
                    offset + i,
                    format!("unexpected character {:?}", bytes[i] as char),
                ));
            }
            let point: u64 = text[begin..i]
                .parse()
                .map_err(|_| Error::parse(offset + begin, "point out of range"))?;
            if point == 0 || point > u32::MAX as u64 {
                return Err(Error::parse(offset + begin, "points are 1-based"));
            }
            let point = (point - 1) as u32;
            if !used.insert(point) {
                return Err(Error::parse(
                    offset + begin,
                    format!("repeated point {}", point + 1),
                ));
            }
            current.push(point);
        }
        if current.len() > 1 {
            cycles.push(current);
        }
        skip_ws(&mut i);
    }
    Ok(cycles)
}
