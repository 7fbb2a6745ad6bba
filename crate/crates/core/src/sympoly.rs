//! Elementary symmetric polynomials and power sums at rational points.

use std::collections::BTreeSet;

use crate::error::{check_index, Error, Result};
use crate::exact::{Scalar, VerificationReport};

/// Ordered, non-empty list of points `x_1..x_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet(Vec<Scalar>);

impl PointSet {
    pub fn new(points: Vec<Scalar>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::DimensionMismatch("a point set needs at least one point".into()));
        }
        Ok(PointSet(points))
    }

    pub fn from_integers(points: &[i64]) -> Result<Self> {
        Self::new(points.iter().map(|&x| Scalar::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn points(&self) -> &[Scalar] {
        &self.0
    }

    /// `x_i`, 1-based.
    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.0.get(i.wrapping_sub(1))
    }

    /// First pair `(i, j)`, `i < j`, with `x_i = x_j`.
    pub fn first_repeat(&self) -> Option<(usize, usize)> {
        for j in 1..self.0.len() {
            if let Some(i) = self.0[..j].iter().position(|x| *x == self.0[j]) {
                return Some((i + 1, j + 1));
            }
        }
        None
    }

    pub fn is_distinct(&self) -> bool {
        self.0.iter().collect::<BTreeSet<_>>().len() == self.0.len()
    }

    pub fn require_distinct(&self) -> Result<()> {
        match self.first_repeat() {
            Some((first, second)) => Err(Error::RepeatedPoints { first, second }),
            None => Ok(()),
        }
    }

    /// The points with `x_i` removed. Empty when `n = 1`, so this returns the
    /// raw slice rather than a `PointSet`.
    pub fn omit(&self, i: usize) -> Result<Vec<Scalar>> {
        check_index(i, self.len())?;
        let mut rest = self.0.clone();
        rest.remove(i - 1);
        Ok(rest)
    }
}

/// `e_0..e_n` and `sigma_1..sigma_n` with `sigma_j = (-1)^(n-j) e_(n-j+1)`.
///
/// The sigmas are the coefficients of `x^n = sum_j sigma_j x^(j-1)`, valid at
/// every point of the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymCoefficients {
    pub e: Vec<Scalar>,
    pub sigma: Vec<Scalar>,
}

impl SymCoefficients {
    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    /// `sigma_j`, 1-based.
    pub fn sigma(&self, j: usize) -> &Scalar {
        &self.sigma[j - 1]
    }
}

/// Coefficients of `prod (t + x_i)`: `e_0..e_m` for `m` points. Accepts the
/// empty slice (returns `[1]`).
pub fn elementary_of(points: &[Scalar]) -> Vec<Scalar> {
    let mut e = Vec::with_capacity(points.len() + 1);
    e.push(Scalar::one());
    for x in points {
        e.push(Scalar::zero());
        for k in (1..e.len()).rev() {
            let add = &e[k - 1] * x;
            e[k] += add;
        }
    }
    e
}

pub fn elementary_all(ps: &PointSet) -> SymCoefficients {
    let e = elementary_of(ps.points());
    let n = ps.len();
    let sigma = (1..=n)
        .map(|j| Scalar::sign_of_parity(n - j) * &e[n - j + 1])
        .collect();
    SymCoefficients { e, sigma }
}

/// `e_0..e_{n-1}` of the points with `x_i` removed.
pub fn elementary_omit(ps: &PointSet, i: usize) -> Result<Vec<Scalar>> {
    Ok(elementary_of(&ps.omit(i)?))
}

/// Deflates `e(all)` by one point: `e_k(omit) = e_k - x e_{k-1}(omit)`.
/// O(n) per point, which keeps the inverse construction at O(n^2).
pub(crate) fn deflate(e_all: &[Scalar], x: &Scalar) -> Vec<Scalar> {
    let m = e_all.len() - 1;
    let mut out: Vec<Scalar> = Vec::with_capacity(m);
    out.push(Scalar::one());
    for k in 1..m {
        let next = &e_all[k] - x * &out[k - 1];
        out.push(next);
    }
    out
}

pub fn power_sum_direct(ps: &PointSet, k: usize) -> Scalar {
    ps.points().iter().map(|x| x.pow(k)).sum()
}

/// `s_k` from `s_0..s_{n-1}` extended by
/// `s_{n+m} = sum_{j=1}^n (-1)^(n+j) s_{m+j-1} e_{n-j+1}`.
pub fn power_sum_recurrence(ps: &PointSet, k: usize) -> Scalar {
    power_sums_recurrence(ps, k).pop().expect("non-empty")
}

/// `s_0..=s_k` via the recurrence.
pub fn power_sums_recurrence(ps: &PointSet, k: usize) -> Vec<Scalar> {
    let n = ps.len();
    let e = elementary_of(ps.points());
    // (-1)^(n+j) e_{n-j+1} for j = 1..n
    let weights: Vec<Scalar> = (1..=n)
        .map(|j| Scalar::sign_of_parity(n + j) * &e[n - j + 1])
        .collect();
    let mut s: Vec<Scalar> = (0..n.min(k + 1)).map(|t| power_sum_direct(ps, t)).collect();
    while s.len() <= k {
        let m = s.len() - n;
        let next = weights
            .iter()
            .enumerate()
            .map(|(j0, w)| w * &s[m + j0])
            .sum();
        s.push(next);
    }
    s
}

/// Checks `x_m^n = sum_{j=0}^{n-1} (-1)^(n-j+1) e_{n-j} x_m^j`.
pub fn reduce_power(ps: &PointSet, m: usize) -> Result<VerificationReport> {
    check_index(m, ps.len())?;
    let n = ps.len();
    let x = ps.get(m).expect("checked");
    let e = elementary_of(ps.points());
    let lhs = x.pow(n);
    let rhs = (0..n)
        .map(|j| Scalar::sign_of_parity(n - j + 1) * &e[n - j] * x.pow(j))
        .sum();
    Ok(VerificationReport::new(
        format!("power reduction at x_{m}: x^{n} = sum_j (-1)^(n-j+1) e_(n-j) x^j"),
        lhs,
        rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from(x)).collect()
    }

    fn ps(v: &[i64]) -> PointSet {
        PointSet::from_integers(v).unwrap()
    }

    // sum over k-subsets; exponential, so only for small n
    fn elementary_by_subsets(points: &[Scalar], k: usize) -> Scalar {
        let n = points.len();
        (0u32..1 << n)
            .filter(|mask| mask.count_ones() as usize == k)
            .map(|mask| {
                (0..n)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| points[b].clone())
                    .product::<Scalar>()
            })
            .sum()
    }

    // Newton's identities: k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i, solved
    // for p_k; uses e_k = 0 for k > n.
    fn newton_power_sums(e: &[Scalar], upto: usize) -> Vec<Scalar> {
        let n = e.len() - 1;
        let ek = |k: usize| if k <= n { e[k].clone() } else { Scalar::zero() };
        let mut p = vec![Scalar::from(n)];
        for k in 1..=upto {
            let mut acc = Scalar::sign_of_parity(k - 1) * Scalar::from(k) * ek(k);
            for i in 1..k {
                acc += Scalar::sign_of_parity(i - 1) * ek(i) * &p[k - i];
            }
            p.push(acc);
        }
        p
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_all(&ps(&[1, 2, 3])).e, ints(&[1, 6, 11, 6]));
        assert_eq!(elementary_all(&ps(&[0, 0, 0])).e, ints(&[1, 0, 0, 0]));
        assert_eq!(elementary_all(&ps(&[1, 2])).sigma, ints(&[-2, 3]));
    }

    #[test]
    fn omit_examples() {
        assert_eq!(elementary_omit(&ps(&[1, 2, 3]), 1).unwrap(), ints(&[1, 5, 6]));
        assert_eq!(elementary_omit(&ps(&[7]), 1).unwrap(), ints(&[1]));
        assert_eq!(elementary_omit(&ps(&[1, 2, 3]), 2).unwrap(), ints(&[1, 4, 3]));
        assert_eq!(
            elementary_omit(&ps(&[1, 2, 3]), 4),
            Err(Error::IndexOutOfRange { index: 4, bound: 3 })
        );
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum_direct(&ps(&[1, 2, 3]), 2), Scalar::from(14));
        assert_eq!(power_sum_direct(&ps(&[0, 5, -1]), 0), Scalar::from(3));
        assert_eq!(power_sum_direct(&ps(&[1, 2]), 3), Scalar::from(9));

        assert_eq!(power_sum_recurrence(&ps(&[1, 2]), 3), Scalar::from(9));
        assert_eq!(power_sum_recurrence(&ps(&[1, 2, 3]), 3), Scalar::from(36));
        for k in 0..10 {
            assert_eq!(power_sum_recurrence(&ps(&[-3]), k), Scalar::from(-3).pow(k));
        }
    }

    #[test]
    fn reduce_power_examples() {
        let r = reduce_power(&ps(&[1, 2]), 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, Scalar::from(4));
        assert!(reduce_power(&ps(&[5]), 1).unwrap().holds);
        let r = reduce_power(&ps(&[1, 2, 3]), 3).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs, Scalar::from(27));
        assert!(reduce_power(&ps(&[1, 2]), 0).is_err());
    }

    #[test]
    fn repeated_points_allowed_in_recurrence() {
        let p = ps(&[2, 2, -1, 0]);
        for k in 0..=15 {
            assert_eq!(power_sum_recurrence(&p, k), power_sum_direct(&p, k));
        }
    }

    #[test]
    fn distinctness() {
        assert!(ps(&[1, 2, 3]).is_distinct());
        assert_eq!(ps(&[1, 2, 1]).first_repeat(), Some((1, 3)));
        assert_eq!(
            ps(&[4, 4]).require_distinct(),
            Err(Error::RepeatedPoints { first: 1, second: 2 })
        );
        assert!(PointSet::new(vec![]).is_err());
    }

    fn points(max_n: usize) -> impl Strategy<Value = PointSet> {
        proptest::collection::vec((-6i64..=6, 1i64..=3), 1..=max_n).prop_map(|v| {
            PointSet::new(
                v.into_iter()
                    .map(|(p, q)| Scalar::new(p.into(), q.into()).unwrap())
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn incremental_product_matches_subset_sums(p in points(7)) {
            let e = elementary_all(&p).e;
            for (k, ek) in e.iter().enumerate() {
                prop_assert_eq!(ek, &elementary_by_subsets(p.points(), k));
            }
        }

        #[test]
        fn recurrence_matches_direct_and_newton(p in points(7)) {
            let via_rec = power_sums_recurrence(&p, 20);
            let via_newton = newton_power_sums(&elementary_all(&p).e, 20);
            for k in 0..=20 {
                let direct = power_sum_direct(&p, k);
                prop_assert_eq!(&via_rec[k], &direct);
                prop_assert_eq!(&via_newton[k], &direct);
            }
        }

        #[test]
        fn omit_recombines(p in points(6)) {
            let all = elementary_all(&p).e;
            for i in 1..=p.len() {
                let omit = elementary_omit(&p, i).unwrap();
                prop_assert_eq!(&deflate(&all, p.get(i).unwrap()), &omit);
                let x = p.get(i).unwrap();
                for k in 0..=p.len() {
                    let hi = if k < omit.len() { omit[k].clone() } else { Scalar::zero() };
                    let lo = if k >= 1 { x * &omit[k - 1] } else { Scalar::zero() };
                    prop_assert_eq!(&all[k], &(hi + lo));
                }
            }
        }

        #[test]
        fn sigma_relation_and_root_property(p in points(6)) {
            let c = elementary_all(&p);
            let n = p.len();
            for j in 1..=n {
                prop_assert_eq!(c.sigma(j), &(Scalar::sign_of_parity(n - j) * &c.e[n - j + 1]));
            }
            for m in 1..=n {
                prop_assert!(reduce_power(&p, m).unwrap().holds);
                let x = p.get(m).unwrap();
                let via_sigma: Scalar = (1..=n).map(|j| c.sigma(j) * x.pow(j - 1)).sum();
                prop_assert_eq!(x.pow(n), via_sigma);
            }
        }
    }
}
