use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{is_ideal, IdealSet, Side};
use crate::structure::Cayley;

/// Which side the annihilating factor multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnnihilatorSide {
    /// `{r : rX = 0}`
    Left,
    /// `{r : Xr = 0}`
    Right,
}

/// Annihilator of a nonempty subset of the structure acting on itself.
///
/// The result is a left (right) ideal whenever multiplication is
/// associative; otherwise it is checked and rejected if closure fails.
pub fn annihilator(s: &Cayley, xs: &[usize], side: AnnihilatorSide) -> Result<IdealSet> {
    if xs.is_empty() {
        return Err(Error::Precondition("annihilator of the empty set".into()));
    }
    for &x in xs {
        s.check_element(x)?;
    }
    let z = s.require_zero()?;
    let members = ElemSet::from_iter(
        s.size(),
        s.elements().filter(|&r| {
            xs.iter().all(|&x| match side {
                AnnihilatorSide::Left => s.mul(r, x) == z,
                AnnihilatorSide::Right => s.mul(x, r) == z,
            })
        }),
    );
    let ideal_side = match side {
        AnnihilatorSide::Left => Side::Left,
        AnnihilatorSide::Right => Side::Right,
    };
    let side = if is_ideal(s, &members, Side::TwoSided) {
        Side::TwoSided
    } else if is_ideal(s, &members, ideal_side) {
        ideal_side
    } else {
        return Err(Error::Precondition(
            "annihilator is not closed; multiplication is not associative".into(),
        ));
    };
    Ok(IdealSet::from_closed(side, members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::is_subtractive;
    use crate::standard::{chain, integers_mod};

    #[test]
    fn chain_annihilators() {
        let t = chain(3);
        let ann = annihilator(&t, &[1], AnnihilatorSide::Left).unwrap();
        assert_eq!(ann.to_vec(), vec![0, 1]);
        assert!(is_subtractive(&t, &ann).holds());
        assert_eq!(annihilator(&t, &[2], AnnihilatorSide::Right).unwrap().to_vec(), vec![0]);
        assert!(annihilator(&t, &[], AnnihilatorSide::Left).is_err());
    }

    #[test]
    fn intersection_is_annihilator_of_union() {
        let z = integers_mod(6);
        let a = annihilator(&z, &[2], AnnihilatorSide::Left).unwrap();
        let b = annihilator(&z, &[3], AnnihilatorSide::Left).unwrap();
        let ab = annihilator(&z, &[2, 3], AnnihilatorSide::Left).unwrap();
        assert_eq!(a.members().intersection(b.members()), *ab.members());
        assert_eq!(ab.to_vec(), vec![0]);
    }
}
