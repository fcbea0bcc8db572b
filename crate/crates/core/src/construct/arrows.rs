//! Relational images of the structural arrows used by the constructions.
//!
//! Every generator maps each letter occurrence to the occurrence(s) it
//! becomes in the target; projections drop the discarded side, and
//! distribution duplicates the distributed factor.

use crate::error::{Error, Result};
use crate::formula::{BinOp, Formula, Path};
use crate::linking::{compose, identity_arrow, Relation, TypedRelArrow};

fn shifted(rel: &Relation, ds: usize, dt: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    rel.iter().map(move |&(i, j)| (i + ds, j + dt))
}

fn split(f: &Formula, op: BinOp) -> Result<(&Formula, &Formula)> {
    match f.as_binary() {
        Some((o, a, b)) if o == op => Ok((a, b)),
        _ => Err(Error::TypeMismatch(format!("expected a {op:?} formula, got {f}"))),
    }
}

/// An arrow that keeps every occurrence in place, between formulas with the
/// same letter sequence (reassociation, dissociativity, adding constants).
pub fn positional(source: &Formula, target: &Formula) -> Result<TypedRelArrow> {
    if source.leaf_letters() != target.leaf_letters() {
        return Err(Error::TypeMismatch(format!(
            "{source} and {target} do not share their letter sequence"
        )));
    }
    let rel = (0..source.size()).map(|i| (i, i)).collect();
    Ok(TypedRelArrow::unchecked(source.clone(), target.clone(), rel))
}

/// `A & B -> A`.
pub fn first_projection(source: &Formula) -> Result<TypedRelArrow> {
    let (a, _) = split(source, BinOp::And)?;
    let rel = (0..a.size()).map(|i| (i, i)).collect();
    Ok(TypedRelArrow::unchecked(source.clone(), a.clone(), rel))
}

/// `A & B -> B`.
pub fn second_projection(source: &Formula) -> Result<TypedRelArrow> {
    let (a, b) = split(source, BinOp::And)?;
    let m = a.size();
    let rel = (0..b.size()).map(|i| (m + i, i)).collect();
    Ok(TypedRelArrow::unchecked(source.clone(), b.clone(), rel))
}

/// `A -> A | B`.
pub fn left_injection(a: &Formula, b: &Formula) -> TypedRelArrow {
    let rel = (0..a.size()).map(|i| (i, i)).collect();
    TypedRelArrow::unchecked(a.clone(), Formula::or(a.clone(), b.clone()), rel)
}

/// `B -> A | B`.
pub fn right_injection(a: &Formula, b: &Formula) -> TypedRelArrow {
    let m = a.size();
    let rel = (0..b.size()).map(|i| (i, m + i)).collect();
    TypedRelArrow::unchecked(b.clone(), Formula::or(a.clone(), b.clone()), rel)
}

/// `<h1, h2>: C -> D1 & D2`.
pub fn pairing(h1: &TypedRelArrow, h2: &TypedRelArrow) -> Result<TypedRelArrow> {
    if h1.source != h2.source {
        return Err(Error::TypeMismatch(format!(
            "pairing arrows from {} and {}",
            h1.source, h2.source
        )));
    }
    let d1 = h1.target.size();
    let rel = h1.rel.iter().copied().chain(shifted(&h2.rel, 0, d1)).collect();
    Ok(TypedRelArrow::unchecked(
        h1.source.clone(),
        Formula::and(h1.target.clone(), h2.target.clone()),
        rel,
    ))
}

/// `[h1, h2]: C1 | C2 -> D`.
pub fn copairing(h1: &TypedRelArrow, h2: &TypedRelArrow) -> Result<TypedRelArrow> {
    if h1.target != h2.target {
        return Err(Error::TypeMismatch(format!(
            "copairing arrows into {} and {}",
            h1.target, h2.target
        )));
    }
    let c1 = h1.source.size();
    let rel = h1.rel.iter().copied().chain(shifted(&h2.rel, c1, 0)).collect();
    Ok(TypedRelArrow::unchecked(
        Formula::or(h1.source.clone(), h2.source.clone()),
        h1.target.clone(),
        rel,
    ))
}

/// `h1 op h2: X1 op X2 -> Y1 op Y2`.
pub fn tensor(op: BinOp, h1: &TypedRelArrow, h2: &TypedRelArrow) -> TypedRelArrow {
    let (x1, y1) = (h1.source.size(), h1.target.size());
    let rel = h1.rel.iter().copied().chain(shifted(&h2.rel, x1, y1)).collect();
    TypedRelArrow::unchecked(
        Formula::binary(op, h1.source.clone(), h2.source.clone()),
        Formula::binary(op, h1.target.clone(), h2.target.clone()),
        rel,
    )
}

/// `A op B -> B op A`.
pub fn commutation(source: &Formula) -> Result<TypedRelArrow> {
    let (op, a, b) = source
        .as_binary()
        .ok_or_else(|| Error::TypeMismatch(format!("cannot commute {source}")))?;
    let (m, n) = (a.size(), b.size());
    let rel = (0..m).map(|i| (i, n + i)).chain((0..n).map(|j| (m + j, j))).collect();
    Ok(TypedRelArrow::unchecked(
        source.clone(),
        Formula::binary(op, b.clone(), a.clone()),
        rel,
    ))
}

/// `(X | Y) & Z -> (X & Z) | (Y & Z)`; `Z` is linked to both copies.
pub fn distribution(source: &Formula) -> Result<TypedRelArrow> {
    let (xy, z) = split(source, BinOp::And)?;
    let (x, y) = split(xy, BinOp::Or)?;
    let (nx, ny, nz) = (x.size(), y.size(), z.size());
    let target = Formula::or(
        Formula::and(x.clone(), z.clone()),
        Formula::and(y.clone(), z.clone()),
    );
    let rel = (0..nx)
        .map(|i| (i, i))
        .chain((0..ny).map(|i| (nx + i, nx + nz + i)))
        .chain((0..nz).flat_map(|k| [(nx + ny + k, nx + k), (nx + ny + k, nx + nz + ny + k)]))
        .collect();
    Ok(TypedRelArrow::unchecked(source.clone(), target, rel))
}

/// Lifts `h: X -> Y` to `C[X] -> C[Y]`, identity outside the hole at `path`.
pub fn in_context(whole: &Formula, path: &Path, h: &TypedRelArrow) -> Result<TypedRelArrow> {
    if whole.subformula(path) != Some(&h.source) {
        return Err(Error::TypeMismatch(format!(
            "{} is not the subformula of {whole} at {path}",
            h.source
        )));
    }
    let mut target = whole.clone();
    *target.subformula_mut(path).expect("checked above") = h.target.clone();

    // occurrences before the hole keep their index
    let mut before = 0;
    let mut cur = whole;
    for &step in &path.0 {
        cur = match (cur, step) {
            (Formula::Not(a), _) => a,
            (Formula::And(a, _) | Formula::Or(a, _), 0) => a,
            (Formula::And(a, b) | Formula::Or(a, b), _) => {
                before += a.size();
                b
            }
            _ => unreachable!("path checked above"),
        };
    }
    let (xs, ys, total) = (h.source.size(), h.target.size(), whole.size());
    let rel = (0..before)
        .map(|i| (i, i))
        .chain(shifted(&h.rel, before, before))
        .chain((before + xs..total).map(|i| (i, i + ys - xs)))
        .collect();
    Ok(TypedRelArrow::unchecked(whole.clone(), target, rel))
}

/// Composes a chain of arrows left to right.
pub fn chain(arrows: &[TypedRelArrow]) -> Result<TypedRelArrow> {
    let (first, rest) = arrows
        .split_first()
        .ok_or_else(|| Error::TypeMismatch("empty chain".into()))?;
    rest.iter().try_fold(first.clone(), |acc, h| compose(&acc, h))
}

pub fn identity(a: &Formula) -> TypedRelArrow {
    identity_arrow(a)
}
