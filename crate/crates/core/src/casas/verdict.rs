use serde::{Deserialize, Serialize};

use crate::arith::{Field, FieldDescriptor, Prime, PrimeField, Ring};
use crate::error::{Error, Result};
use crate::unipoly::{is_linear_power, UniPoly};

/// A monic polynomial of degree at least 1 over a declared field.
#[derive(Clone, Debug, PartialEq)]
pub struct CaInstance<F: Field> {
    poly: UniPoly<F>,
}

impl<F: Field> CaInstance<F> {
    pub fn new(poly: UniPoly<F>) -> Result<Self> {
        if !poly.is_monic() || poly.degree() == Some(0) {
            return Err(Error::NotMonic);
        }
        Ok(CaInstance { poly })
    }

    pub fn poly(&self) -> &UniPoly<F> {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap()
    }

    pub fn field(&self) -> FieldDescriptor {
        self.poly.ring().descriptor()
    }
}

/// `deg gcd(P, P_i)` for one derivative index; a vanishing `P_i` counts as
/// sharing all of `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdEntry {
    pub i: usize,
    pub gcd_degree: usize,
    pub derivative_vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaVerdict {
    pub degree: usize,
    /// Entries for `i = 1, ..., d - 1`.
    pub gcd_profile: Vec<GcdEntry>,
    /// Present iff `P = (X - root)^d`.
    pub linear_power_root: Option<String>,
    pub is_counterexample: bool,
}

impl CaVerdict {
    pub fn all_nontrivial(&self) -> bool {
        self.gcd_profile.iter().all(|e| e.gcd_degree >= 1)
    }
}

pub fn check_ca<F: Field>(inst: &CaInstance<F>) -> CaVerdict {
    let p = inst.poly();
    let d = inst.degree();
    let gcd_profile = (1..d)
        .map(|i| {
            let pi = p.hasse_derivative(i);
            GcdEntry {
                i,
                gcd_degree: p.gcd(&pi).degree().unwrap_or(0),
                derivative_vanishes: pi.is_zero(),
            }
        })
        .collect::<Vec<_>>();
    let root = is_linear_power(p).map(|a| p.ring().format_elem(&a));
    let nontrivial = gcd_profile.iter().all(|e| e.gcd_degree >= 1);
    CaVerdict {
        degree: d,
        gcd_profile,
        is_counterexample: nontrivial && root.is_none(),
        linear_power_root: root,
    }
}

/// `P` brought to the form `X^d + a_1 X^(d-1) + ... + a_(d-1) X`, with
/// `P(X) = scale * normalized(X - shift)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedForm<F: Field> {
    pub original: UniPoly<F>,
    pub shift: F::Elem,
    pub scale: F::Elem,
    pub normalized: UniPoly<F>,
}

impl<F: Field> NormalizedForm<F> {
    /// Reapplies the recorded transform.
    pub fn reconstruct(&self) -> UniPoly<F> {
        let field = self.normalized.ring();
        self.normalized
            .taylor_shift(&field.neg(&self.shift))
            .scale(&self.scale)
    }
}

/// Normalizes with a root found from a linear `gcd(P, P_i)`, or from `P`
/// itself when it is linear; fails if no such root is visible.
pub fn normalize<F: Field>(poly: &UniPoly<F>) -> Result<NormalizedForm<F>> {
    let field = poly.ring();
    let d = poly
        .degree()
        .ok_or_else(|| Error::domain("cannot normalize the zero polynomial"))?;
    if d == 0 {
        return Err(Error::domain("cannot normalize a constant"));
    }
    let zero = field.zero();
    if field.is_zero(&poly.coeff(0)) {
        return normalize_at(poly, &zero);
    }
    let monic = poly.monic();
    let candidate = (1..d).rev().chain(std::iter::once(0)).find_map(|i| {
        let g = monic.gcd(&monic.hasse_derivative(i));
        (g.degree() == Some(1)).then(|| field.neg(&g.coeff(0)))
    });
    match candidate {
        Some(root) => normalize_at(poly, &root),
        None => Err(Error::CannotNormalize(
            "no root of P is visible through a linear gcd with a Hasse derivative".into(),
        )),
    }
}

/// Normalizes by moving the given root of `P` to 0.
pub fn normalize_at<F: Field>(poly: &UniPoly<F>, root: &F::Elem) -> Result<NormalizedForm<F>> {
    let field = poly.ring();
    let lc = poly
        .leading_coeff()
        .ok_or_else(|| Error::domain("cannot normalize the zero polynomial"))?
        .clone();
    if !field.is_zero(&poly.eval(root)) {
        return Err(Error::CannotNormalize(format!(
            "{} is not a root",
            field.format_elem(root)
        )));
    }
    let normalized = poly.taylor_shift(root).monic();
    Ok(NormalizedForm {
        original: poly.clone(),
        shift: root.clone(),
        scale: lc,
        normalized,
    })
}

/// `X^(p+1) - X^p` over `F_p`.
pub fn family_counterexample(p: Prime) -> Result<CaInstance<PrimeField>> {
    let field = PrimeField::from_prime(p)?;
    let d = p.get() as usize + 1;
    let mut coeffs = vec![field.zero(); d + 1];
    coeffs[d] = field.one();
    coeffs[d - 1] = field.neg(&field.one());
    CaInstance::new(UniPoly::new(field, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rationals;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn verdict(field: PrimeField, low_first: &[i64]) -> CaVerdict {
        check_ca(&CaInstance::new(UniPoly::from_i64s(field, low_first)).unwrap())
    }

    #[test]
    fn verdict_examples() {
        let v = verdict(fp(2), &[0, 0, 1, 1]);
        assert!(v.is_counterexample);
        assert_eq!(
            v.gcd_profile
                .iter()
                .map(|e| e.gcd_degree)
                .collect::<Vec<_>>(),
            vec![2, 1]
        );

        let v = verdict(fp(7), &[0, 0, 0, 0, 1]);
        assert!(!v.is_counterexample);
        assert_eq!(v.linear_power_root.as_deref(), Some("0"));
        assert!(v.all_nontrivial());

        let v = verdict(fp(3), &[0, 1, 1]);
        assert!(!v.is_counterexample);
        assert_eq!(v.gcd_profile[0].gcd_degree, 0);
    }

    #[test]
    fn degree_one_is_never_a_counterexample() {
        let v = verdict(fp(5), &[3, 1]);
        assert!(v.gcd_profile.is_empty());
        assert_eq!(v.linear_power_root.as_deref(), Some("2"));
        assert!(!v.is_counterexample);
    }

    #[test]
    fn rejects_non_monic() {
        assert_eq!(
            CaInstance::new(UniPoly::from_i64s(fp(5), &[0, 2])).unwrap_err(),
            Error::NotMonic
        );
        assert!(CaInstance::new(UniPoly::from_i64s(fp(5), &[1])).is_err());
    }

    #[test]
    fn vanishing_derivative_counts_as_shared() {
        // X^12 + X^8 over F_2 has P_1 = 0.
        let mut c = vec![0; 13];
        c[12] = 1;
        c[8] = 1;
        let v = verdict(fp(2), &c);
        assert!(v.gcd_profile[0].derivative_vanishes);
        assert_eq!(v.gcd_profile[0].gcd_degree, 12);
    }

    #[test]
    fn normalization_examples() {
        let q = Rationals::new();
        let n = normalize(&UniPoly::from_i64s(q, &[1, 2, 1])).unwrap();
        assert_eq!(n.normalized, UniPoly::from_i64s(q, &[0, 0, 1]));
        assert_eq!(n.shift, q.from_i64(-1));
        assert_eq!(n.reconstruct(), n.original);

        let f2 = fp(2);
        let p = UniPoly::from_i64s(f2, &[0, 1, 0, 1]);
        assert_eq!(normalize(&p).unwrap().normalized, p);

        let n = normalize(&UniPoly::from_i64s(q, &[0, 4, 2])).unwrap();
        assert_eq!(n.normalized, UniPoly::from_i64s(q, &[0, 2, 1]));
        assert_eq!(n.reconstruct(), n.original);

        assert!(matches!(
            normalize(&UniPoly::from_i64s(q, &[1, 0, 1])),
            Err(Error::CannotNormalize(_))
        ));
    }

    #[test]
    fn family_members() {
        for p in [2u64, 3, 5, 7, 97] {
            let inst = family_counterexample(Prime::new(p).unwrap()).unwrap();
            assert_eq!(inst.degree() as u64, p + 1);
            let v = check_ca(&inst);
            assert!(v.is_counterexample, "p = {p}");
            assert!(v.linear_power_root.is_none());
        }
        let inst = family_counterexample(Prime::new(5).unwrap()).unwrap();
        assert_eq!(
            inst.poly().hasse_derivative(5),
            UniPoly::from_i64s(fp(5), &[4, 1])
        );
    }
}
