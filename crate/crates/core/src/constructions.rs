//! Constructions producing new ringoids from old ones.
//!
//! Tuple-valued carriers (products, `K^n`, function spaces, coefficient
//! vectors) are encoded little-endian in mixed radix: the first coordinate is
//! the least significant digit of the element index.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::laws::{Check, Law};
use crate::structure::{Cayley, Magma};
use crate::Caps;

/// Splits `index` into `len` little-endian digits of base `radix`.
pub fn digits(mut index: usize, radix: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(index % radix);
        index /= radix;
    }
    out
}

/// Inverse of [`digits`].
pub fn from_digits(ds: &[usize], radix: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * radix + d)
}

fn checked_power(base: usize, exp: usize, what: &'static str, cap: usize) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).filter(|&v| v <= cap).ok_or(Error::CapExceeded {
            what,
            size: base.saturating_pow(exp as u32),
            cap,
        })?;
    }
    Ok(acc)
}

fn tuple_label(parts: impl IntoIterator<Item = String>) -> String {
    format!("({})", parts.into_iter().collect::<Vec<_>>().join(","))
}

/// The ringoid of endomorphisms of a medial magma, with pointwise addition
/// and composition `(f*g)(x) = f(g(x))`.
///
/// Endomorphisms are listed in lexicographic order of their value tuples
/// `(f(0), f(1), ...)`; the identity map is the `one` of the result.
pub fn endomorphism_ringoid(m: &Magma, caps: &Caps) -> Result<Cayley> {
    if let Check::Fails(w) = m.medial() {
        return Err(Error::LawViolation { law: Law::AddMedial.name().into(), witness: w });
    }
    let n = m.size();
    let total = checked_power(n, n, "map enumeration", caps.map_enumeration)?;

    let mut endos: Vec<Vec<usize>> = Vec::new();
    for code in 0..total {
        // most significant digit first, so codes run in lexicographic order
        let mut f = digits(code, n, n);
        f.reverse();
        let is_hom = (0..n).all(|x| (0..n).all(|y| f[m.op(x, y)] == m.op(f[x], f[y])));
        if is_hom {
            endos.push(f);
            if endos.len() > caps.carrier {
                return Err(Error::CapExceeded {
                    what: "endomorphism ringoid",
                    size: endos.len(),
                    cap: caps.carrier,
                });
            }
        }
    }

    let index: HashMap<&[usize], usize> = endos.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let lookup = |f: Vec<usize>| index[f.as_slice()];
    let identity: Vec<usize> = (0..n).collect();
    let one = index.get(identity.as_slice()).copied();

    let k = endos.len();
    let s = Cayley::from_fn(
        "End",
        k,
        |a, b| lookup((0..n).map(|x| m.op(endos[a][x], endos[b][x])).collect()),
        |a, b| lookup((0..n).map(|x| endos[a][endos[b][x]]).collect()),
        None,
        one,
    )?;
    let labels = endos.iter().map(|f| tuple_label(f.iter().map(usize::to_string))).collect();
    s.with_labels(labels)
}

/// Adjoins a new additive identity `z` to a unital multiplicative magma with
/// absorbing element `0 != 1`.
///
/// On the old carrier `a + b = 0`; `z` is neutral for addition and absorbing
/// for multiplication, and becomes the zero of the result (index `size`).
pub fn austere_extension(m: &Cayley) -> Result<Cayley> {
    let one = m.require_one()?;
    let zero = m.require_zero()?;
    if zero == one {
        return Err(Error::Precondition("absorbing element equals identity".into()));
    }
    if let Some(x) = m.elements().find(|&x| m.mul(one, x) != x || m.mul(x, one) != x) {
        return Err(Error::LawViolation { law: Law::HasOne.name().into(), witness: vec![x] });
    }
    if let Some(x) = m.elements().find(|&x| m.mul(zero, x) != zero || m.mul(x, zero) != zero) {
        return Err(Error::LawViolation { law: Law::ZeroAbsorbing.name().into(), witness: vec![x] });
    }
    let n = m.size();
    let z = n;
    let s = Cayley::from_fn(
        format!("austere({})", m.name()),
        n + 1,
        |a, b| match (a == z, b == z) {
            (true, _) => b,
            (_, true) => a,
            _ => zero,
        },
        |a, b| if a == z || b == z { z } else { m.mul(a, b) },
        Some(z),
        Some(one),
    )?;
    let mut labels = m.labels().to_vec();
    labels.push("z".into());
    s.with_labels(labels)
}

/// Structure constants `gamma[i][j][k]` of a bilinear multiplication on
/// `K^n`: the product of basis vectors `e_i e_j` is `sum_k gamma[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    semifield: Cayley,
    dim: usize,
    gamma: Vec<usize>,
}

impl StructureConstants {
    /// Validates the semifield and the constants; `gamma` is indexed
    /// `[i][j][k]` in row-major order.
    pub fn new(semifield: Cayley, dim: usize, gamma: Vec<usize>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("dimension must be positive".into()));
        }
        semifield.require_commutative_semiring()?;
        let z = semifield.require_zero()?;
        let e = semifield.require_one()?;
        if let Some(x) = semifield
            .elements()
            .filter(|&x| x != z)
            .find(|&x| !semifield.elements().any(|y| semifield.mul(x, y) == e))
        {
            return Err(Error::LawViolation { law: "semifield_inverse".into(), witness: vec![x] });
        }
        if gamma.len() != dim * dim * dim {
            return Err(Error::Invalid(format!(
                "expected {} structure constants, got {}",
                dim * dim * dim,
                gamma.len()
            )));
        }
        if let Some(&bad) = gamma.iter().find(|&&g| g >= semifield.size()) {
            return Err(Error::ElementOutOfRange(bad));
        }
        Ok(Self { semifield, dim, gamma })
    }

    pub fn semifield(&self) -> &Cayley {
        &self.semifield
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gamma(&self, i: usize, j: usize, k: usize) -> usize {
        self.gamma[(i * self.dim + j) * self.dim + k]
    }

    /// The cross product on `B^3`: `e1 e2 = e2 e1 = e3`, `e2 e3 = e3 e2 = e1`,
    /// `e3 e1 = e1 e3 = e2`, all other products zero.
    pub fn boolean_cross_product() -> Self {
        let b = crate::standard::boolean();
        let mut gamma = vec![0; 27];
        for (i, j, k) in [(0, 1, 2), (1, 0, 2), (1, 2, 0), (2, 1, 0), (2, 0, 1), (0, 2, 1)] {
            gamma[(i * 3 + j) * 3 + k] = 1;
        }
        Self::new(b, 3, gamma).expect("boolean cross product constants are valid")
    }
}

/// The NA-hemiring on `K^n` with componentwise addition and the bilinear
/// multiplication determined by the structure constants.
pub fn hemialgebra(c: &StructureConstants, caps: &Caps) -> Result<Cayley> {
    let k = &c.semifield;
    let q = k.size();
    let n = c.dim;
    let size = checked_power(q, n, "hemialgebra carrier", caps.carrier)?;
    let kz = k.zero().expect("validated semifield has zero");
    let sum = |xs: &mut dyn Iterator<Item = usize>| xs.fold(kz, |acc, x| k.add(acc, x));

    let s = Cayley::from_fn(
        format!("hemialgebra({}^{})", k.name(), n),
        size,
        |a, b| {
            let (da, db) = (digits(a, q, n), digits(b, q, n));
            from_digits(&(0..n).map(|i| k.add(da[i], db[i])).collect::<Vec<_>>(), q)
        },
        |a, b| {
            let (da, db) = (digits(a, q, n), digits(b, q, n));
            let coords: Vec<usize> = (0..n)
                .map(|t| {
                    sum(&mut (0..n).flat_map(|i| {
                        let (da, db) = (&da, &db);
                        (0..n).map(move |j| k.mul(k.mul(da[i], db[j]), c.gamma(i, j, t)))
                    }))
                })
                .collect();
            from_digits(&coords, q)
        },
        Some(from_digits(&vec![kz; n], q)),
        None,
    )?;
    let labels =
        (0..size).map(|x| tuple_label(digits(x, q, n).into_iter().map(|d| k.label(d).to_string()))).collect();
    s.with_labels(labels)
}

/// Scalar multiplication of `K` on the hemialgebra carrier `K^n`.
pub fn hemialgebra_scale(c: &StructureConstants, alpha: usize, a: usize) -> usize {
    let k = &c.semifield;
    let q = k.size();
    let da = digits(a, q, c.dim);
    from_digits(&da.iter().map(|&x| k.mul(alpha, x)).collect::<Vec<_>>(), q)
}

/// Componentwise product of finitely many structures.
pub fn direct_product(factors: &[Cayley], caps: &Caps) -> Result<Cayley> {
    if factors.is_empty() {
        return Err(Error::Invalid("direct product of no factors".into()));
    }
    let mut size: usize = 1;
    for f in factors {
        size = size.checked_mul(f.size()).filter(|&v| v <= caps.carrier).ok_or(Error::CapExceeded {
            what: "direct product",
            size: factors.iter().map(Cayley::size).fold(1usize, usize::saturating_mul),
            cap: caps.carrier,
        })?;
    }
    let radices: Vec<usize> = factors.iter().map(Cayley::size).collect();
    let split = |mut x: usize| -> Vec<usize> {
        radices
            .iter()
            .map(|&r| {
                let d = x % r;
                x /= r;
                d
            })
            .collect()
    };
    let join =
        |ds: Vec<usize>| -> usize { ds.iter().zip(&radices).rev().fold(0, |acc, (&d, &r)| acc * r + d) };
    let zero = factors.iter().map(Cayley::zero).collect::<Option<Vec<_>>>().map(&join);
    let one = factors.iter().map(Cayley::one).collect::<Option<Vec<_>>>().map(&join);
    let name = factors.iter().map(Cayley::name).collect::<Vec<_>>().join("×");
    let s = Cayley::from_fn(
        name,
        size,
        |a, b| {
            let (da, db) = (split(a), split(b));
            join(factors.iter().enumerate().map(|(i, f)| f.add(da[i], db[i])).collect())
        },
        |a, b| {
            let (da, db) = (split(a), split(b));
            join(factors.iter().enumerate().map(|(i, f)| f.mul(da[i], db[i])).collect())
        },
        zero,
        one,
    )?;
    let labels = (0..size)
        .map(|x| {
            let d = split(x);
            tuple_label(factors.iter().zip(d).map(|(f, di)| f.label(di).to_string()))
        })
        .collect();
    s.with_labels(labels)
}

/// `S[G]` for a finite commutative monoid `G`, together with the data
/// needed to read coefficients back out of an element.
#[derive(Clone, Debug)]
pub struct MonoidSemiring {
    structure: Cayley,
    base: Cayley,
    monoid: Magma,
}

impl MonoidSemiring {
    pub fn structure(&self) -> &Cayley {
        &self.structure
    }

    pub fn base(&self) -> &Cayley {
        &self.base
    }

    pub fn monoid(&self) -> &Magma {
        &self.monoid
    }

    /// Coefficient of each monoid element, in monoid index order.
    pub fn coefficients(&self, f: usize) -> Vec<usize> {
        digits(f, self.base.size(), self.monoid.size())
    }

    pub fn from_coefficients(&self, coeffs: &[usize]) -> usize {
        from_digits(coeffs, self.base.size())
    }
}

/// The monoid semiring `S[G]`: functions `G -> S` with pointwise addition and
/// convolution `(f h)(k) = sum over g1 g2 = k of f(g1) h(g2)`.
pub fn monoid_semiring(s: &Cayley, g: &Magma, caps: &Caps) -> Result<MonoidSemiring> {
    s.require_semiring()?;
    let e = g.require_commutative_monoid()?;
    let q = s.size();
    let m = g.size();
    let size = checked_power(q, m, "monoid semiring", caps.carrier)?;
    let sz = s.zero().expect("semiring has zero");
    let so = s.one().expect("semiring has one");

    let mut delta = vec![sz; m];
    delta[e] = so;
    let structure = Cayley::from_fn(
        format!("{}[G{}]", s.name(), m),
        size,
        |a, b| {
            let (da, db) = (digits(a, q, m), digits(b, q, m));
            from_digits(&(0..m).map(|i| s.add(da[i], db[i])).collect::<Vec<_>>(), q)
        },
        |a, b| {
            let (da, db) = (digits(a, q, m), digits(b, q, m));
            let mut out = vec![sz; m];
            for (g1, &x) in da.iter().enumerate() {
                for (g2, &y) in db.iter().enumerate() {
                    let k = g.op(g1, g2);
                    out[k] = s.add(out[k], s.mul(x, y));
                }
            }
            from_digits(&out, q)
        },
        Some(from_digits(&vec![sz; m], q)),
        Some(from_digits(&delta, q)),
    )?;
    let labels =
        (0..size).map(|x| tuple_label(digits(x, q, m).into_iter().map(|d| s.label(d).to_string()))).collect();
    Ok(MonoidSemiring { structure: structure.with_labels(labels)?, base: s.clone(), monoid: g.clone() })
}

/// `H[X]/(X^{d+1})`: coefficient vectors of length `d + 1`, constant term
/// first, with convolution that discards degrees above `d`.
pub fn truncated_polynomial_hemiring(h: &Cayley, degree_cap: usize, caps: &Caps) -> Result<Cayley> {
    if !h.laws().is_na_hemiring() {
        return Err(h.laws().first_semiring_failure());
    }
    let q = h.size();
    let len = degree_cap + 1;
    let size = checked_power(q, len, "truncated polynomials", caps.carrier)?;
    let hz = h.zero().expect("NA-hemiring has zero");
    let one = h.one().map(|o| {
        let mut c = vec![hz; len];
        c[0] = o;
        from_digits(&c, q)
    });
    let s = Cayley::from_fn(
        format!("{}[X]/X^{}", h.name(), len),
        size,
        |a, b| {
            let (da, db) = (digits(a, q, len), digits(b, q, len));
            from_digits(&(0..len).map(|i| h.add(da[i], db[i])).collect::<Vec<_>>(), q)
        },
        |a, b| {
            let (da, db) = (digits(a, q, len), digits(b, q, len));
            let mut out = vec![hz; len];
            for i in 0..len {
                for j in 0..len - i {
                    out[i + j] = h.add(out[i + j], h.mul(da[i], db[j]));
                }
            }
            from_digits(&out, q)
        },
        Some(from_digits(&vec![hz; len], q)),
        one,
    )?;
    let labels = (0..size)
        .map(|x| tuple_label(digits(x, q, len).into_iter().map(|d| h.label(d).to_string())))
        .collect();
    s.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{boolean, chain, saturating};

    #[test]
    fn digit_roundtrip() {
        for x in 0..27 {
            assert_eq!(from_digits(&digits(x, 3, 3), 3), x);
        }
        assert_eq!(digits(5, 2, 3), vec![1, 0, 1]);
    }

    #[test]
    fn endomorphisms_of_boolean_join() {
        let join = Magma::from_fn(2, |a, b| a.max(b)).unwrap();
        let end = endomorphism_ringoid(&join, &Caps::default()).unwrap();
        assert_eq!(end.size(), 3);
        assert_eq!(end.labels(), &["(0,0)", "(0,1)", "(1,1)"]);
        assert_eq!(end.one(), Some(1));
        let laws = end.laws();
        assert!(laws.is_ringoid());
        assert!(laws.mul_associative.holds());
        assert!(laws.add_medial.holds());
    }

    #[test]
    fn endomorphisms_of_singleton() {
        let m = Magma::from_fn(1, |_, _| 0).unwrap();
        let end = endomorphism_ringoid(&m, &Caps::default()).unwrap();
        assert_eq!(end.size(), 1);
        assert_eq!(end.one(), Some(0));
        assert!(end.laws().is_ringoid());
    }

    #[test]
    fn endomorphisms_reject_non_medial() {
        // x + y = x + 2y mod 3 composed with a twist is not medial
        let m = Magma::from_table(&[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 2]]).unwrap();
        assert!(!m.medial().holds());
        assert!(matches!(endomorphism_ringoid(&m, &Caps::default()), Err(Error::LawViolation { .. })));
    }

    #[test]
    fn endomorphism_cap() {
        let m = Magma::from_fn(2, |a, b| a.max(b)).unwrap();
        let caps = Caps { carrier: 2, ..Caps::default() };
        assert!(matches!(endomorphism_ringoid(&m, &caps), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn austere_over_boolean_monoid() {
        let s = austere_extension(&boolean()).unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(s.zero(), Some(2));
        let laws = s.laws();
        assert!(laws.zerosumfree.holds());
        assert!(laws.entire.holds());
        assert!(laws.is_semiring());
        for x in s.elements() {
            assert_eq!(s.add(x, 2), x);
        }
    }

    #[test]
    fn austere_requires_identity() {
        let no_one = Cayley::from_fn("m", 2, |_, _| 0, |_, _| 0, Some(0), None).unwrap();
        assert_eq!(austere_extension(&no_one), Err(Error::MissingOne));
    }

    #[test]
    fn hemialgebra_identity_constants() {
        let c = StructureConstants::new(boolean(), 1, vec![1]).unwrap();
        let h = hemialgebra(&c, &Caps::default()).unwrap();
        let b = boolean();
        assert_eq!(h.add_table(), b.add_table());
        assert_eq!(h.mul_table(), b.mul_table());
    }

    #[test]
    fn hemialgebra_null_multiplication() {
        let c = StructureConstants::new(boolean(), 2, vec![0; 8]).unwrap();
        let h = hemialgebra(&c, &Caps::default()).unwrap();
        assert!(h.elements().all(|a| h.elements().all(|b| h.mul(a, b) == 0)));
        assert!(h.laws().is_na_hemiring());
    }

    #[test]
    fn hemialgebra_rejects_non_semifield() {
        assert!(StructureConstants::new(saturating(3), 1, vec![1]).is_err());
        assert!(StructureConstants::new(chain(3), 1, vec![1]).is_err());
    }

    #[test]
    fn hemialgebra_cap() {
        let caps = Caps { carrier: 4, ..Caps::default() };
        let c = StructureConstants::boolean_cross_product();
        assert!(matches!(hemialgebra(&c, &caps), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn product_with_singleton_is_isomorphic() {
        let one = Cayley::from_fn("1", 1, |_, _| 0, |_, _| 0, Some(0), Some(0)).unwrap();
        let t = chain(3);
        let p = direct_product(&[t.clone(), one], &Caps::default()).unwrap();
        // the singleton is the most significant digit, so indices line up
        assert_eq!(p.add_table(), t.add_table());
        assert_eq!(p.mul_table(), t.mul_table());
        assert_eq!(p.zero(), t.zero());
        assert_eq!(p.one(), t.one());
    }

    #[test]
    fn boolean_square() {
        let p = direct_product(&[boolean(), boolean()], &Caps::default()).unwrap();
        assert_eq!(p.size(), 4);
        assert!(p.laws().is_semiring());
        assert!(!p.laws().entire.holds());
        assert_eq!(p.label(2), "(0,1)");
    }

    #[test]
    fn product_cap() {
        let caps = Caps { carrier: 3, ..Caps::default() };
        assert!(matches!(direct_product(&[boolean(), boolean()], &caps), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn monoid_semiring_over_trivial_monoid() {
        let g = Magma::from_fn(1, |_, _| 0).unwrap();
        let sg = monoid_semiring(&saturating(3), &g, &Caps::default()).unwrap();
        assert_eq!(sg.structure().add_table(), saturating(3).add_table());
        assert_eq!(sg.structure().mul_table(), saturating(3).mul_table());
    }

    #[test]
    fn monoid_semiring_counts_functions() {
        let z3 = Magma::from_fn(3, |a, b| (a + b) % 3).unwrap();
        let sg = monoid_semiring(&chain(3), &z3, &Caps::default()).unwrap();
        assert_eq!(sg.structure().size(), 27);
        assert!(sg.structure().laws().is_semiring());
    }

    #[test]
    fn monoid_semiring_rejects_non_monoid() {
        let g = Magma::from_fn(2, |a, b| (a + 2 * b) % 2).unwrap();
        assert!(monoid_semiring(&boolean(), &g, &Caps::default()).is_err());
    }

    #[test]
    fn truncated_polynomials_degree_zero() {
        let p = truncated_polynomial_hemiring(&chain(3), 0, &Caps::default()).unwrap();
        assert_eq!(p.mul_table(), chain(3).mul_table());
    }

    #[test]
    fn boolean_linear_polynomials() {
        let p = truncated_polynomial_hemiring(&boolean(), 1, &Caps::default()).unwrap();
        assert_eq!(p.size(), 4);
        // 1 + X has coefficients (1, 1), index 3
        assert_eq!(p.mul(3, 3), 3);
        assert!(p.elements().all(|f| p.mul(0, f) == 0 && p.mul(f, 0) == 0));
        assert!(p.laws().is_semiring());
    }
}
