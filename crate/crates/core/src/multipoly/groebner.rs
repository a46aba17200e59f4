use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Monomial, MultiPoly, WeightedOrder};
use crate::arith::Field;
use crate::error::{Error, Result};

/// Work limits for [`buchberger_is_gb`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbBudget {
    pub max_pairs: usize,
    /// Reduction steps allowed per S-polynomial.
    pub max_steps_per_pair: u64,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget {
            max_pairs: 10_000,
            max_steps_per_pair: 10_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairOutcome {
    /// Leading monomials are coprime; the S-polynomial reduces to zero.
    SkippedCoprime,
    ReducedToZero,
    NonzeroRemainder,
}

/// Per-pair record of a Gröbner basis check, in lexicographic pair order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbCertificate {
    pub is_groebner_basis: bool,
    pub leading_monomials: Vec<String>,
    pub pairs: Vec<(usize, usize, PairOutcome)>,
}

impl GbCertificate {
    pub fn checked(&self) -> usize {
        self.pairs
            .iter()
            .filter(|p| p.2 != PairOutcome::SkippedCoprime)
            .count()
    }

    pub fn skipped(&self) -> usize {
        self.pairs.len() - self.checked()
    }
}

fn check_inputs<F: Field>(polys: &[&MultiPoly<F>], order: &WeightedOrder) -> Result<()> {
    for f in polys {
        if f.nvars() != order.nvars() {
            return Err(Error::domain(
                "polynomial and order disagree on variable count",
            ));
        }
    }
    Ok(())
}

fn monic_leading<F: Field>(f: &MultiPoly<F>) -> Result<(Monomial, F::Elem)> {
    let (m, c) = f
        .leading_term()
        .ok_or_else(|| Error::domain("zero polynomial has no leading term"))?;
    let inv = f.ring().inv(c).expect("leading coefficient is nonzero");
    Ok((m.clone(), inv))
}

/// `(L / lt(f)) f - (L / lt(g)) g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial<F: Field>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
    order: &WeightedOrder,
) -> Result<MultiPoly<F>> {
    check_inputs(&[f, g], order)?;
    let (mf, inv_f) = monic_leading(f)?;
    let (mg, inv_g) = monic_leading(g)?;
    let l = mf.lcm(&mg);
    let left = f.mul_term(&l.div(&mf).unwrap(), &inv_f);
    let right = g.mul_term(&l.div(&mg).unwrap(), &inv_g);
    Ok(left.sub(&right))
}

/// Full reduction of `f` modulo `basis`: no term of the result is divisible
/// by a leading monomial of `basis`.
pub fn normal_form<F: Field>(
    f: &MultiPoly<F>,
    basis: &[MultiPoly<F>],
    order: &WeightedOrder,
) -> Result<MultiPoly<F>> {
    let refs: Vec<&MultiPoly<F>> = basis.iter().collect();
    check_inputs(&refs, order)?;
    check_inputs(&[f], order)?;
    reduce(f, basis, u64::MAX)
}

fn reduce<F: Field>(
    f: &MultiPoly<F>,
    basis: &[MultiPoly<F>],
    max_steps: u64,
) -> Result<MultiPoly<F>> {
    let field = f.ring();
    let leads: Vec<(Monomial, F::Elem)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(monic_leading)
        .collect::<Result<_>>()?;
    let nonzero: Vec<&MultiPoly<F>> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut work = f.clone();
    let mut remainder = MultiPoly::zero(field.clone(), f.nvars());
    let mut steps = 0u64;
    while let Some((m, c)) = work.terms.pop_last() {
        let divisor = leads.iter().position(|(lm, _)| lm.divides(&m));
        match divisor {
            None => {
                remainder.terms.insert(m, c);
            }
            Some(k) => {
                steps += 1;
                if steps > max_steps {
                    return Err(Error::budget(
                        "normal form reduction",
                        format!("> {max_steps} steps"),
                        max_steps,
                    ));
                }
                let (lm, inv) = &leads[k];
                let factor = field.neg(&field.mul(&c, inv));
                let shift = m.div(lm).unwrap();
                // the leading term cancels against the popped term
                for (u, b) in nonzero[k].terms().rev().skip(1) {
                    work.add_term(u.mul(&shift), &field.mul(&factor, b));
                }
            }
        }
    }
    Ok(remainder)
}

/// Checks Buchberger's criterion: every S-polynomial of `basis` reduces to
/// zero, skipping pairs with coprime leading monomials. Pairs are processed
/// in parallel; the certificate lists them in lexicographic order.
pub fn buchberger_is_gb<F: Field>(
    basis: &[MultiPoly<F>],
    order: &WeightedOrder,
    budget: &GbBudget,
) -> Result<GbCertificate> {
    let refs: Vec<&MultiPoly<F>> = basis.iter().collect();
    check_inputs(&refs, order)?;
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| monic_leading(g).map(|(m, _)| m))
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
        .collect();
    if pairs.len() > budget.max_pairs {
        return Err(Error::budget(
            "S-pair checks",
            pairs.len(),
            budget.max_pairs,
        ));
    }
    let outcomes: Vec<(usize, usize, PairOutcome)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            if leads[i].is_coprime(&leads[j]) {
                return Ok((i, j, PairOutcome::SkippedCoprime));
            }
            let s = s_polynomial(&basis[i], &basis[j], order)?;
            let r = reduce(&s, basis, budget.max_steps_per_pair)?;
            let outcome = if r.is_zero() {
                PairOutcome::ReducedToZero
            } else {
                PairOutcome::NonzeroRemainder
            };
            Ok((i, j, outcome))
        })
        .collect::<Result<_>>()?;
    Ok(GbCertificate {
        is_groebner_basis: outcomes
            .iter()
            .all(|p| p.2 != PairOutcome::NonzeroRemainder),
        leading_monomials: leads.iter().map(|m| m.to_string()).collect(),
        pairs: outcomes,
    })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::multipoly::{generic_resultant, SymbolicLimits};
    use crate::PrimeField;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn mono(field: PrimeField, e: &[u16], c: u64) -> MultiPoly<PrimeField> {
        MultiPoly::term(field, Monomial::new(e), field.from_u64(c))
    }

    #[test]
    fn s_polynomial_examples() {
        let f5 = f(5);
        let order = WeightedOrder::new(2);
        let g = mono(f5, &[2, 1], 1).add(&mono(f5, &[1, 0], 3));
        assert!(s_polynomial(&g, &g, &order).unwrap().is_zero());
        let a = mono(f5, &[2, 0], 1);
        let b = mono(f5, &[1, 1], 1);
        assert!(s_polynomial(&a, &b, &order).unwrap().is_zero());
        let a = a.add(&mono(f5, &[0, 1], 2));
        let b = b.add(&mono(f5, &[3, 0], 1));
        let lcm = a.leading_term().unwrap().0.lcm(b.leading_term().unwrap().0);
        let s = s_polynomial(&a, &b, &order).unwrap();
        assert!(s.leading_term().unwrap().0 < &lcm);
        assert!(s_polynomial(&MultiPoly::zero(f5, 2), &b, &order).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let f7 = f(7);
        let order = WeightedOrder::new(2);
        let g = mono(f7, &[0, 3], 1);
        assert!(normal_form(&g, std::slice::from_ref(&g), &order)
            .unwrap()
            .is_zero());
        let h = mono(f7, &[1, 3], 1).add(&mono(f7, &[1, 0], 1));
        assert_eq!(normal_form(&h, &[g], &order).unwrap(), mono(f7, &[1, 0], 1));
    }

    #[test]
    fn coprime_leaders_reduce_to_zero() {
        // The skipped pair really does reduce to zero.
        let f3 = f(3);
        let lim = SymbolicLimits::default();
        let order = WeightedOrder::new(2);
        let g = vec![
            generic_resultant(f3, 3, 1, &lim).unwrap(),
            generic_resultant(f3, 3, 2, &lim).unwrap(),
        ];
        let s = s_polynomial(&g[0], &g[1], &order).unwrap();
        assert!(normal_form(&s, &g, &order).unwrap().is_zero());
        let cert = buchberger_is_gb(&g, &order, &GbBudget::default()).unwrap();
        assert!(cert.is_groebner_basis);
        assert_eq!(cert.skipped(), 1);
    }

    #[test]
    fn non_basis_detected_and_budget_enforced() {
        let f5 = f(5);
        let order = WeightedOrder::new(2);
        // {a2 + a1^2, a1*a2}: S = a1^3 is irreducible
        let g = vec![
            mono(f5, &[2, 0], 1).add(&mono(f5, &[0, 1], 1)),
            mono(f5, &[1, 1], 1),
        ];
        let cert = buchberger_is_gb(&g, &order, &GbBudget::default()).unwrap();
        assert!(!cert.is_groebner_basis);
        let tight = GbBudget {
            max_pairs: 0,
            max_steps_per_pair: 1,
        };
        assert!(buchberger_is_gb(&g, &order, &tight)
            .unwrap_err()
            .is_budget());
        let single = vec![mono(f5, &[1, 0], 1)];
        assert!(
            buchberger_is_gb(&single, &order, &GbBudget::default())
                .unwrap()
                .is_groebner_basis
        );
    }

    #[test]
    fn degree_four_mod_two_is_a_basis() {
        let f2 = f(2);
        let lim = SymbolicLimits::default();
        let order = WeightedOrder::new(3);
        let g: Vec<_> = (1..4)
            .map(|i| generic_resultant(f2, 4, i, &lim).unwrap())
            .collect();
        for a in &g {
            for b in &g {
                let s = s_polynomial(a, b, &order).unwrap();
                assert!(normal_form(&s, &g, &order).unwrap().is_zero());
            }
        }
        assert!(
            buchberger_is_gb(&g, &order, &GbBudget::default())
                .unwrap()
                .is_groebner_basis
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn ideal_elements_reduce_to_zero(
            mults in prop::collection::vec(prop::collection::vec((prop::collection::vec(0u16..3, 3), 0u64..2), 0..4), 3),
        ) {
            let f2 = f(2);
            let lim = SymbolicLimits::default();
            let order = WeightedOrder::new(3);
            let g: Vec<_> = (1..4).map(|i| generic_resultant(f2, 4, i, &lim).unwrap()).collect();
            let mut element = MultiPoly::zero(f2, 3);
            for (gen, mult) in g.iter().zip(&mults) {
                let h = MultiPoly::from_terms(f2, 3, mult.iter().map(|(e, c)| (Monomial::new(e), *c)));
                element = element.add(&gen.mul(&h));
            }
            prop_assert!(normal_form(&element, &g, &order).unwrap().is_zero());
        }
    }
}
