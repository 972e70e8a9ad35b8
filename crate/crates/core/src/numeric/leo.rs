//! Forward images of intervals under the extended transformation, tracked
//! exactly as finite unions of intervals with open or closed ends.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{Beta, NumericError, Real};

/// An interval of reals with independently open or closed endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: Real,
    pub hi: Real,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Span {
    pub fn open(lo: Real, hi: Real) -> Self {
        Span {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        }
    }

    /// `(0, 1]`.
    pub fn unit() -> Self {
        Span {
            lo: Real::integer(0),
            hi: Real::integer(1),
            lo_closed: false,
            hi_closed: true,
        }
    }

    fn point(p: Real) -> Self {
        Span {
            lo: p.clone(),
            hi: p,
            lo_closed: true,
            hi_closed: true,
        }
    }

    fn is_empty(&self) -> Result<bool, NumericError> {
        Ok(match cmp(&self.lo, &self.hi)? {
            Ordering::Less => false,
            Ordering::Equal => !(self.lo_closed && self.hi_closed),
            Ordering::Greater => true,
        })
    }

    fn intersect(&self, o: &Span) -> Result<Option<Span>, NumericError> {
        let (lo, lo_closed) = match cmp(&self.lo, &o.lo)? {
            Ordering::Less => (o.lo.clone(), o.lo_closed),
            Ordering::Greater => (self.lo.clone(), self.lo_closed),
            Ordering::Equal => (self.lo.clone(), self.lo_closed && o.lo_closed),
        };
        let (hi, hi_closed) = match cmp(&self.hi, &o.hi)? {
            Ordering::Less => (self.hi.clone(), self.hi_closed),
            Ordering::Greater => (o.hi.clone(), o.hi_closed),
            Ordering::Equal => (self.hi.clone(), self.hi_closed && o.hi_closed),
        };
        let s = Span {
            lo,
            hi,
            lo_closed,
            hi_closed,
        };
        Ok(if s.is_empty()? { None } else { Some(s) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeoOutcome {
    /// `T^steps(I) = (0, 1]`.
    Onto { steps: usize },
    /// No such `n ≤ nmax`. Only a search bound.
    NotFound { nmax: usize },
}

fn cmp(a: &Real, b: &Real) -> Result<Ordering, NumericError> {
    a.partial_cmp_real(b).ok_or(NumericError::RequiresExact)
}

fn cells(beta: &Beta) -> Result<Vec<(u8, Span)>, NumericError> {
    let top = beta.max_digit()?;
    let inv = beta.value().recip()?;
    let mut out = Vec::with_capacity(top as usize);
    for i in 1..=top {
        let lo = Real::integer(i as i64 - 1).mul(&inv)?;
        let span = if i == top {
            Span {
                lo,
                hi: Real::integer(1),
                lo_closed: i != 1,
                hi_closed: true,
            }
        } else {
            Span {
                lo,
                hi: Real::integer(i as i64).mul(&inv)?,
                lo_closed: i != 1,
                hi_closed: false,
            }
        };
        out.push((i, span));
    }
    Ok(out)
}

fn image(beta: &Beta, cells: &[(u8, Span)], s: &Span) -> Result<Vec<Span>, NumericError> {
    let mut out = Vec::new();
    let zero = Real::integer(0);
    if s.lo_closed && cmp(&s.lo, &zero)? == Ordering::Equal {
        out.push(Span::point(Real::integer(1)));
    }
    for (digit, cell) in cells {
        if let Some(piece) = s.intersect(cell)? {
            let d = Real::integer(*digit as i64);
            let f = |x: &Real| -> Result<Real, NumericError> { d.sub(&beta.value().mul(x)?) };
            out.push(Span {
                lo: f(&piece.hi)?,
                hi: f(&piece.lo)?,
                lo_closed: piece.hi_closed,
                hi_closed: piece.lo_closed,
            });
        }
    }
    Ok(out)
}

/// Sort and merge overlapping or touching spans.
fn normalize(mut spans: Vec<Span>) -> Result<Vec<Span>, NumericError> {
    let mut err = None;
    spans.sort_by(|a, b| {
        cmp(&a.lo, &b.lo)
            .map(|o| o.then(b.lo_closed.cmp(&a.lo_closed)))
            .unwrap_or_else(|e| {
                err = Some(e);
                Ordering::Equal
            })
    });
    if let Some(e) = err {
        return Err(e);
    }
    let mut out: Vec<Span> = Vec::new();
    for s in spans {
        if let Some(last) = out.last_mut() {
            let joins = match cmp(&s.lo, &last.hi)? {
                Ordering::Less => true,
                Ordering::Equal => s.lo_closed || last.hi_closed,
                Ordering::Greater => false,
            };
            if joins {
                match cmp(&s.hi, &last.hi)? {
                    Ordering::Greater => {
                        last.hi = s.hi;
                        last.hi_closed = s.hi_closed;
                    }
                    Ordering::Equal => last.hi_closed |= s.hi_closed,
                    Ordering::Less => {}
                }
                continue;
            }
        }
        out.push(s);
    }
    Ok(out)
}

fn is_unit(spans: &[Span]) -> Result<bool, NumericError> {
    let unit = Span::unit();
    Ok(match spans {
        [s] => {
            cmp(&s.lo, &unit.lo)? == Ordering::Equal
                && cmp(&s.hi, &unit.hi)? == Ordering::Equal
                && s.hi_closed
        }
        _ => false,
    })
}

/// Smallest `n ≤ nmax` with `T^n(I) = (0, 1]` for the extended map.
/// Needs an exact β; interval bases cannot decide endpoint membership.
pub fn leo_witness(beta: &Beta, interval: &Span, nmax: usize) -> Result<LeoOutcome, NumericError> {
    if !beta.is_exact() {
        return Err(NumericError::RequiresExact);
    }
    if interval.is_empty()? {
        return Err(NumericError::EmptyInterval);
    }
    let domain = Span {
        lo_closed: true,
        ..Span::unit()
    };
    let start = interval
        .intersect(&domain)?
        .ok_or(NumericError::EmptyInterval)?;
    let cells = cells(beta)?;
    let mut cur = vec![start];
    for n in 0..=nmax {
        if is_unit(&cur)? {
            return Ok(LeoOutcome::Onto { steps: n });
        }
        if n == nmax {
            break;
        }
        let mut next = Vec::new();
        for s in &cur {
            next.extend(image(beta, &cells, s)?);
        }
        cur = normalize(next)?;
    }
    Ok(LeoOutcome::NotFound { nmax })
}
