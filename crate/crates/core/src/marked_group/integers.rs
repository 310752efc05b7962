use super::{Group, LengthOracle};
use crate::error::{Error, Result};

/// `Z` with generating set `{1}`, written additively.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Group for Integers {
    type Elem = i64;

    fn name(&self) -> String {
        "Z".into()
    }

    fn identity(&self) -> i64 {
        0
    }

    fn mul(&self, x: &i64, y: &i64) -> i64 {
        x + y
    }

    fn inv(&self, x: &i64) -> i64 {
        -x
    }

    fn generators(&self) -> Vec<i64> {
        vec![1]
    }

    fn format(&self, x: &i64) -> String {
        x.to_string()
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn elements(&self) -> Option<Vec<i64>> {
        None
    }
}

/// `l(n) = n` on the nonnegative integers.
#[derive(Debug, Clone, Copy, Default)]
pub struct IntegerLength;

impl LengthOracle<Integers> for IntegerLength {
    fn name(&self) -> &'static str {
        "formula"
    }

    fn length(&self, _group: &Integers, x: &i64) -> Result<usize> {
        usize::try_from(*x)
            .map_err(|_| Error::Domain(format!("{x} is not in the monoid generated by {{1}}")))
    }
}
