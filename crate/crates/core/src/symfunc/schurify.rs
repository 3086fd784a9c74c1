//! Basis changes between Schur functions and fundamental quasisymmetric functions.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use super::expansion::{FExpansion, SchurExpansion};
use crate::combinatorics::composition::{Composition, WeightVector};
use crate::combinatorics::enumerate::enumerate_syt;
use crate::combinatorics::parsing::descent_composition;
use crate::combinatorics::partition::Partition;
use crate::error::{Error, Result};
use crate::quasicrystal::count_ssyt_formula;

fn cache() -> &'static RwLock<HashMap<Partition, FExpansion>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, FExpansion>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `s_λ = Σ_{T ∈ SYT(λ)} F_{DesComp(T)}`, memoized per shape.
pub fn schur_to_f(shape: &Partition) -> FExpansion {
    if let Some(f) = cache().read().expect("cache lock").get(shape) {
        return f.clone();
    }
    let mut f = FExpansion::zero();
    for t in enumerate_syt(shape) {
        f.add_term(descent_composition(&t), BigInt::from(1))
            .expect("descent compositions of one shape share a degree");
    }
    cache()
        .write()
        .expect("cache lock")
        .entry(shape.clone())
        .or_insert(f)
        .clone()
}

/// Linear extension of [`schur_to_f`].
pub fn schur_expansion_to_f(g: &SchurExpansion) -> FExpansion {
    let mut out = FExpansion::zero();
    for (lam, c) in g.terms() {
        out.add_scaled(&schur_to_f(lam), c)
            .expect("homogeneous input");
    }
    out
}

/// Exponent vectors of the monomials of `F_α(x₁..x_n)`: weakly increasing index sequences
/// that rise strictly at the descent set of `α`. Sorted, each listed once.
pub fn f_to_monomials(alpha: &Composition, n: usize) -> Vec<WeightVector> {
    let m = alpha.size();
    let descents = alpha.descent_set();
    let mut strict = vec![false; m];
    for d in descents {
        strict[d] = true;
    }
    let mut out = Vec::new();
    let mut counts = vec![0usize; n];
    fn go(
        k: usize,
        low: usize,
        strict: &[bool],
        counts: &mut Vec<usize>,
        out: &mut Vec<WeightVector>,
    ) {
        if k == strict.len() {
            out.push(WeightVector(counts.clone()));
            return;
        }
        let start = if k > 0 && strict[k] { low + 1 } else { low };
        for x in start..counts.len() {
            counts[x] += 1;
            go(k + 1, x, strict, counts, out);
            counts[x] -= 1;
        }
    }
    if m > 0 && n > 0 {
        go(0, 0, &strict, &mut counts, &mut out);
    }
    out.sort();
    out
}

/// The lexicographically greatest composition with a non-zero coefficient.
pub fn leading_support(f: &FExpansion) -> Result<Composition> {
    f.leading()
        .map(|(k, _)| k.clone())
        .ok_or(Error::EmptyExpansion)
}

/// Expands a symmetric function given in the `F` basis into Schur functions by repeatedly
/// subtracting `c·s_α` for the leading support `α`.
pub fn schurify(f: &FExpansion) -> Result<SchurExpansion> {
    let mut rest = f.clone();
    let mut out = SchurExpansion::zero();
    let cap = f
        .degree()
        .map_or(0, |m| 1usize << m.saturating_sub(1).min(62));
    let mut steps = 0;
    while let Some((alpha, c)) = rest.leading() {
        if steps == cap {
            return Err(Error::Internal(format!("schurify exceeded {cap} steps")));
        }
        steps += 1;
        let (alpha, c) = (alpha.clone(), c.clone());
        let lam =
            Partition::try_from(&alpha).map_err(|_| Error::NotSymmetric(alpha.to_string()))?;
        rest.add_scaled(&schur_to_f(&lam), &-c.clone())?;
        out.add_term(lam, c)?;
    }
    Ok(out)
}

/// True iff [`schurify`] succeeds with only positive coefficients.
pub fn is_schur_positive(f: &FExpansion) -> bool {
    schurify(f).is_ok_and(|s| s.terms().values().all(Signed::is_positive))
}

/// Number of monic monomials of `s_μ[s_λ(x₁..x_n)]`, namely `|SSYT(μ)_{|SSYT(λ)_n|}|`.
pub fn plethysm_monomial_count(mu: &Partition, lam: &Partition, n: u32) -> BigUint {
    count_ssyt_formula(mu, count_ssyt_formula(lam, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn gessel_expansions() {
        let f = schur_to_f(&p("4,3"));
        assert_eq!(
            f.terms()
                .values()
                .map(|c| c.to_string().parse::<u32>().unwrap())
                .sum::<u32>(),
            14
        );
        assert_eq!(f.coefficient(&"2,3,2".parse().unwrap()), BigInt::from(2));
        assert_eq!(schur_to_f(&Partition::row(4)).to_string(), "F[4]");
        assert_eq!(schur_to_f(&Partition::column(3)).to_string(), "F[1,1,1]");
        assert_eq!(leading_support(&f).unwrap().parts(), &[4, 3]);
    }

    #[test]
    fn monomials() {
        assert_eq!(f_to_monomials(&"2,3,2".parse().unwrap(), 4).len(), 8);
        assert_eq!(f_to_monomials(&"3".parse().unwrap(), 3).len(), 10);
        assert!(f_to_monomials(&"1,1,1".parse().unwrap(), 2).is_empty());
    }

    #[test]
    fn schurification() {
        let s = schurify(&schur_to_f(&p("4,3"))).unwrap();
        assert_eq!(s.to_string(), "s[4,3]");
        assert_eq!(
            schurify(&"F[1,2]".parse().unwrap()),
            Err(Error::NotSymmetric("(1,2)".into()))
        );
        assert_eq!(
            leading_support(&FExpansion::zero()),
            Err(Error::EmptyExpansion)
        );
        assert_eq!(
            schurify(&"F[1]".parse().unwrap()).unwrap().to_string(),
            "s[1]"
        );
        let mut g = schur_to_f(&p("2,1"));
        g.add_scaled(&"F[2,1]".parse().unwrap(), &BigInt::from(-1))
            .unwrap();
        assert!(!is_schur_positive(&g));
        let mut h = schur_to_f(&p("2,1"));
        h.add_scaled(&schur_to_f(&p("3")), &BigInt::from(2))
            .unwrap();
        assert!(is_schur_positive(&h));
    }

    #[test]
    fn plethysm_counts() {
        let lam = p("2,1");
        assert_eq!(
            plethysm_monomial_count(&Partition::row(1), &lam, 3),
            count_ssyt_formula(&lam, 3u32)
        );
        assert_eq!(
            plethysm_monomial_count(&Partition::row(2), &Partition::row(1), 2),
            BigUint::from(3u32)
        );
        assert_eq!(
            plethysm_monomial_count(&Partition::column(2), &Partition::row(2), 2),
            BigUint::from(3u32)
        );
    }
}
