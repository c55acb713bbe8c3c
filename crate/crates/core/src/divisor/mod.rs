//! Divisors, Riemann–Roch spaces and the invariants built on them.

pub(crate) mod rr;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::curve::Place;

pub use rr::{CliffordSearch, RRBasis};

/// A finite formal sum of places with nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor {
    terms: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero() -> Divisor {
        Divisor::default()
    }

    pub fn from_place(place: Place, n: i64) -> Divisor {
        let mut d = Divisor::zero();
        d.add_place(place, n);
        d
    }

    /// `n * inf`.
    pub fn infinity(n: i64) -> Divisor {
        Divisor::from_place(Place::Infinite, n)
    }

    pub fn from_terms<I: IntoIterator<Item = (Place, i64)>>(terms: I) -> Divisor {
        let mut d = Divisor::zero();
        for (p, n) in terms {
            d.add_place(p, n);
        }
        d
    }

    pub fn add_place(&mut self, place: Place, n: i64) {
        if n == 0 {
            return;
        }
        match self.terms.get_mut(&place) {
            Some(e) => {
                *e += n;
                if *e == 0 {
                    self.terms.remove(&place);
                }
            }
            None => {
                self.terms.insert(place, n);
            }
        }
    }

    pub fn coeff(&self, place: &Place) -> i64 {
        self.terms.get(place).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(p, &n)| n * p.degree() as i64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&n| n > 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, &i64)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.terms.keys()
    }

    pub fn add(&self, o: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, &n) in &o.terms {
            d.add_place(p.clone(), n);
        }
        d
    }

    pub fn neg(&self) -> Divisor {
        Divisor {
            terms: self.terms.iter().map(|(p, &n)| (p.clone(), -n)).collect(),
        }
    }

    pub fn sub(&self, o: &Divisor) -> Divisor {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> Divisor {
        Divisor::from_terms(self.terms.iter().map(|(p, &n)| (p.clone(), k * n)))
    }

    /// `D >= E` coefficientwise.
    pub fn dominates(&self, o: &Divisor) -> bool {
        self.sub(o).is_effective()
    }
}

impl fmt::Display for Divisor {
    /// `[inf,5]+[split(x,1),1]`; the empty divisor prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, n)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "[{p},{n}]")?;
        }
        Ok(())
    }
}

impl Serialize for Divisor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
