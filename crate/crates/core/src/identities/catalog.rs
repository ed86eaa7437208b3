//! The twenty registry entries and their builders.

use super::{Comparison, IdentityEntry, IdentityError, Kind, ParamSpec, Params, Shape};
use crate::bijections::enumerate_tj;
use crate::partition::{
    crank_le0_by_parity, crank_of, distinct_count, enumerate_partitions_bounded,
    for_each_partition, frobenius_count, mex_count, pentagonal_double_sign, CrankTable,
    FrobeniusPredicate, Parity,
};
use crate::qseries::{
    bilateral_sum, carlitz_product, carlitz_theta, crank_gf_bivariate, crank_le0_bivariate,
    gaussian_binomial_at, unilateral_sum, Count, QPochhammer, Series, SeriesError, ZSeries,
};

type R<T> = Result<T, IdentityError>;

// ---------------------------------------------------------------------------
// small builders

fn poch(base: usize, step: usize, count: Count) -> QPochhammer {
    QPochhammer::new(base, step, count)
}

fn inf(base: usize, step: usize) -> QPochhammer {
    poch(base, step, Count::Infinite)
}

fn fin(base: usize, step: usize, n: usize) -> QPochhammer {
    poch(base, step, Count::Finite(n))
}

/// `s / Π dens`.
fn over(mut s: Series, dens: &[QPochhammer]) -> R<Series> {
    for d in dens {
        d.divide(&mut s)?;
    }
    Ok(s)
}

/// `s * Π nums`.
fn times(mut s: Series, nums: &[QPochhammer]) -> R<Series> {
    for f in nums {
        f.multiply(&mut s)?;
    }
    Ok(s)
}

fn mono(order: usize, e: usize) -> Series {
    Series::monomial(order, e, 1)
}

/// `Σ_{n >= 0} term(n)` where `term(n)` is `None` once its lowest exponent
/// `exp(n)` passes the order; `exp` must be increasing.
fn sum_terms<E, T>(order: usize, exp: E, mut term: T) -> R<Series>
where
    E: Fn(usize) -> usize,
    T: FnMut(usize, usize) -> R<Series>,
{
    let mut total = Series::zero(order);
    let mut n = 0;
    while exp(n) <= order {
        total = total.add(&term(n, exp(n))?)?;
        n += 1;
    }
    Ok(total)
}

fn series_from(order: usize, f: impl Fn(u32) -> i64) -> Series {
    let mut s = Series::zero(order);
    for n in 0..=order {
        s.set_coeff(n, f(n as u32));
    }
    s
}

fn seq(ns: impl IntoIterator<Item = u32>, f: impl Fn(u32) -> i64) -> Shape {
    Shape::Sequence(ns.into_iter().map(|n| (n, f(n))).collect())
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn param(params: &Params, name: &str) -> i64 {
    params[name]
}

fn j_param(params: &Params) -> usize {
    param(params, "j") as usize
}

fn ser(s: Series) -> Shape {
    Shape::Series(s)
}

fn mex(a: u32, b: u32, n: u32, parity: Option<Parity>) -> i64 {
    mex_count(a, b, n, parity).expect("modulus 2 or 4") as i64
}

/// `(-q^2; q^2)_∞`.
fn neg_q2_q2(order: usize) -> R<Series> {
    Ok(inf(2, 2).negated().expand(order)?)
}

/// `(q^2; q^2)_∞`.
fn q2_q2(order: usize) -> R<Series> {
    Ok(inf(2, 2).expand(order)?)
}

/// Number of partitions of `n` with crank exactly 0, without the `n = 1`
/// convention.
fn crank_zero_actual(n: u32) -> i64 {
    let mut count = 0;
    for_each_partition(n, |parts| {
        if crank_of(parts) == 0 {
            count += 1;
        }
    });
    count
}

// ---------------------------------------------------------------------------
// crank generating functions

/// `(1/(q;q)_∞) Σ_{n>=0} (-1)^n q^{n(n+1)/2 + j(n+1)}`.
fn alternating_crank_sum(order: usize, j: usize) -> R<Series> {
    let s = unilateral_sum(order, |n| n * (n + 1) / 2 + j as i64 * (n + 1), sign)?;
    over(s, &[QPochhammer::euler()])
}

/// `Σ_{n>=0} q^{(n+1)(n+j)} / ((q;q)_n (q;q)_{n+j})`.
fn positive_crank_sum(order: usize, j: usize) -> R<Series> {
    sum_terms(
        order,
        |n| (n + 1) * (n + j),
        |n, e| over(mono(order, e), &[fin(1, 1, n), fin(1, 1, n + j)]),
    )
}

/// `(q;q)_∞ Σ_{n>=0} q^{n+j} / ((q;q)_n (q;q)_{n+j})`.
fn triple_sum(order: usize, j: usize) -> R<Series> {
    let s = sum_terms(
        order,
        |n| n + j,
        |n, e| over(mono(order, e), &[fin(1, 1, n), fin(1, 1, n + j)]),
    )?;
    times(s, &[QPochhammer::euler()])
}

fn crank_at_least(table: &CrankTable, order: usize, j: i64) -> Series {
    series_from(order, |n| table.count(n, |m| m >= j))
}

/// The three members of Fine's identity at `t = q^alpha`, `b = q^beta`:
///
/// - `(t;q)_∞ Σ t^n / ((q;q)_n (bq;q)_n)`
/// - `(1/(bq;q)_∞) Σ (t;q)_n/(q;q)_n (-b)^n q^{n(n+1)/2}`
/// - `Σ (bt)^n q^{n^2} / ((q;q)_n (bq;q)_n)`
///
/// returned as two comparisons (first = second, first = third).
pub fn fine_comparisons(alpha: usize, beta: usize, order: usize) -> R<Vec<Comparison>> {
    if alpha == 0 {
        return Err(SeriesError::ZeroFactor.into());
    }
    let first = sum_terms(
        order,
        |n| alpha * n,
        |n, e| over(mono(order, e), &[fin(1, 1, n), fin(beta + 1, 1, n)]),
    )?;
    let first = times(first, &[inf(alpha, 1)])?;
    let second = sum_terms(
        order,
        |n| beta * n + n * (n + 1) / 2,
        |n, e| {
            let s = mono(order, e).scale(sign(n as i64));
            let s = times(s, &[fin(alpha, 1, n)])?;
            over(s, &[fin(1, 1, n)])
        },
    )?;
    let second = over(second, &[inf(beta + 1, 1)])?;
    let third = sum_terms(
        order,
        |n| (alpha + beta) * n + n * n,
        |n, e| over(mono(order, e), &[fin(1, 1, n), fin(beta + 1, 1, n)]),
    )?;
    let label = format!("fine alpha={alpha} beta={beta}");
    Ok(vec![
        Comparison::new(
            format!("{label}: first = second"),
            ser(first.clone()),
            ser(second),
        ),
        Comparison::new(format!("{label}: first = third"), ser(first), ser(third)),
    ])
}

// ---------------------------------------------------------------------------
// entries

fn garvan_bivariate(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let table = CrankTable::new(order as u32);
    let mut enumerated = ZSeries::zero(order);
    for n in 0..=order {
        for (&m, &c) in table.row(n as u32) {
            enumerated.set_coeff(m, n, c)?;
        }
    }
    Ok(vec![Comparison::new(
        "crank product = M(m,n)",
        Shape::Z(crank_gf_bivariate(order)),
        Shape::Z(enumerated),
    )])
}

/// `(1/(q;q)_∞) Σ_{n>=1} (-1)^{n-1} q^{n(n-1)/2 + n|m|} (1 - q^n)`.
fn fixed_m_series(order: usize, m: i64) -> R<Series> {
    let a = m.unsigned_abs() as i64;
    let pos = bilateral_like(order, |n| n * (n - 1) / 2 + n * a)?;
    let neg = bilateral_like(order, |n| n * (n - 1) / 2 + n * a + n)?;
    over(pos.sub(&neg)?, &[QPochhammer::euler()])
}

/// `Σ_{n>=1} (-1)^{n-1} q^{exp(n)}`.
fn bilateral_like(order: usize, exp: impl Fn(i64) -> i64) -> R<Series> {
    Ok(unilateral_sum(order, |k| exp(k + 1), sign)?)
}

fn garvan_fixed_m(params: &Params, order: usize) -> R<Vec<Comparison>> {
    let m = param(params, "m");
    let table = CrankTable::new(order as u32);
    let rhs = fixed_m_series(order, m)?;
    Ok(vec![
        Comparison::new(
            "M(m,n) = fixed-m series",
            ser(series_from(order, |n| table.m(m, n))),
            ser(rhs.clone()),
        ),
        Comparison::new(
            "z^m slice of crank product = fixed-m series",
            ser(crank_gf_bivariate(order).z_coefficient(m)),
            ser(rhs),
        ),
    ])
}

fn crank_symmetry(params: &Params, order: usize) -> R<Vec<Comparison>> {
    let m = param(params, "m");
    let table = CrankTable::new(order as u32);
    let gf = crank_gf_bivariate(order);
    Ok(vec![
        Comparison::new(
            "M(m,n) = M(-m,n)",
            seq(0..=order as u32, |n| table.m(m, n)),
            seq(0..=order as u32, |n| table.m(-m, n)),
        ),
        Comparison::new(
            "z^m slice = z^-m slice",
            ser(gf.z_coefficient(m)),
            ser(gf.z_coefficient(-m)),
        ),
    ])
}

fn qbinomial_excess(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let mut out = Vec::new();
    for n in 0..=8usize {
        for d in 0..=n {
            let lhs = QPochhammer::q_n(d).expand_inverse(order)?;
            let rhs = over(gaussian_binomial_at(n, d, order)?, &[fin(n - d + 1, 1, d)])?;
            out.push(Comparison::new(format!("n={n} d={d}"), ser(lhs), ser(rhs)));
        }
    }
    for d in 0..=8usize {
        let lhs = QPochhammer::q_n(d).expand_inverse(order)?;
        let count = series_from(order, |w| {
            enumerate_partitions_bounded(w, w, d).len() as i64
        });
        out.push(Comparison::new(
            format!("1/(q;q)_{d} counts partitions into at most {d} parts"),
            ser(lhs),
            ser(count),
        ));
    }
    Ok(out)
}

fn thm1_2(params: &Params, order: usize) -> R<Vec<Comparison>> {
    let j = j_param(params);
    let table = CrankTable::new(order as u32);
    let rhs = alternating_crank_sum(order, j)?;
    let ji = j as i64;
    Ok(vec![
        Comparison::new(
            "crank >= j = alternating sum",
            ser(crank_at_least(&table, order, ji)),
            ser(rhs.clone()),
        ),
        Comparison::new(
            "crank <= -j = alternating sum",
            ser(series_from(order, |n| table.count(n, |m| m <= -ji))),
            ser(rhs),
        ),
    ])
}

fn thm2_1(params: &Params, order: usize) -> R<Vec<Comparison>> {
    let j = j_param(params);
    let table = CrankTable::new(order as u32);
    Ok(vec![Comparison::new(
        "crank >= j = positive sum",
        ser(crank_at_least(&table, order, j as i64)),
        ser(positive_crank_sum(order, j)?),
    )])
}

fn lemma2_2(params: &Params, order: usize) -> R<Vec<Comparison>> {
    let j = j_param(params);
    let alt = alternating_crank_sum(order, j)?;
    let pos = positive_crank_sum(order, j)?;
    // Fine at t = q, b = q^j before multiplying by q^j / (q;q)_j
    let fine_lhs = over(
        unilateral_sum(order, |n| n * (n + 1) / 2 + n * j as i64, sign)?,
        &[inf(j + 1, 1)],
    )?;
    let fine_rhs = sum_terms(
        order,
        |n| n * n + n * (j + 1),
        |n, e| over(mono(order, e), &[fin(1, 1, n), fin(j + 1, 1, n)]),
    )?;
    let rescaled = over(fine_rhs.shift(j), &[fin(1, 1, j)])?;
    let table = CrankTable::new(order as u32);
    Ok(vec![
        Comparison::new("alternating = positive", ser(alt.clone()), ser(pos.clone())),
        Comparison::new("specialized Fine", ser(fine_lhs), ser(fine_rhs)),
        Comparison::new(
            "q^j/(q;q)_j times specialized Fine = positive",
            ser(rescaled),
            ser(pos),
        ),
        Comparison::new(
            "alternating = crank >= j",
            ser(alt),
            ser(crank_at_least(&table, order, j as i64)),
        ),
    ])
}

/// Largest weight at which the triple sets are enumerated.
const TRIPLE_WEIGHT: usize = 12;

fn fine_specialized(params: &Params, order: usize) -> R<Vec<Comparison>> {
    let j = j_param(params);
    let a = triple_sum(order, j)?;
    let mut out = vec![
        Comparison::new(
            "triple sum = alternating sum",
            ser(a.clone()),
            ser(alternating_crank_sum(order, j)?),
        ),
        Comparison::new(
            "triple sum = positive sum",
            ser(a.clone()),
            ser(positive_crank_sum(order, j)?),
        ),
    ];
    out.extend(fine_comparisons(1, j, order)?);
    // T_j needs a nonempty κ; for j = 0 the n = 0 term of the sum is the
    // empty κ and contributes (q;q)_∞
    let correction = if j == 0 {
        QPochhammer::euler().expand(order)?
    } else {
        Series::zero(order)
    };
    let expected = a.sub(&correction)?;
    let w_max = order.min(TRIPLE_WEIGHT) as u32;
    let signed = |w: u32| -> i64 {
        enumerate_tj(j as u32, w)
            .iter()
            .map(|t| i64::from(t.sign()))
            .sum()
    };
    let expected_seq = seq(0..=w_max, |w| {
        i64::try_from(expected.coeff(w as usize)).expect("small coefficient")
    });
    out.push(Comparison::new(
        "signed count of T_j",
        seq(0..=w_max, signed),
        expected_seq,
    ));
    Ok(out)
}

fn ewell(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let theta = unilateral_sum(order, |n| n * (n + 1) / 2, |n| sign(n * (n + 1) / 2))?;
    let ewell_product = over(q2_q2(order)?, &[inf(1, 2).negated()])?;
    let lhs = over(theta.clone(), &[QPochhammer::euler()])?;
    let rhs = neg_q2_q2(order)?;
    let distinct_even = series_from(order, |n| {
        if n % 2 == 0 {
            distinct_count(n / 2, None) as i64
        } else {
            0
        }
    });
    Ok(vec![
        Comparison::new("theta = product form", ser(theta), ser(ewell_product)),
        Comparison::new("theta/(q;q) = (-q^2;q^2)", ser(lhs), ser(rhs.clone())),
        Comparison::new(
            "(-q^2;q^2) counts distinct even parts",
            ser(rhs),
            ser(distinct_even),
        ),
    ])
}

/// `Σ_{n>=0} q^{n(n+1)} / (q;q)_n^2`.
fn odd_mex_square_sum(order: usize) -> R<Series> {
    sum_terms(
        order,
        |n| n * (n + 1),
        |n, e| over(mono(order, e), &[fin(1, 1, n), fin(1, 1, n)]),
    )
}

/// `Σ_{n>=0} q^{n(n+1)} / (q^2;q^2)_n`.
fn even_denominator_sum(order: usize) -> R<Series> {
    sum_terms(
        order,
        |n| n * (n + 1),
        |n, e| over(mono(order, e), &[fin(2, 2, n)]),
    )
}

/// `Σ_{k>=0} q^{e(k)} (1 + s q^{f(k)})` for the mod-4 mex sums.
fn mex_theta(order: usize, e: impl Fn(i64) -> i64, f: impl Fn(i64) -> i64, s: i64) -> R<Series> {
    let a = unilateral_sum(order, &e, |_| 1)?;
    let b = unilateral_sum(order, |k| e(k) + f(k), |_| s)?;
    Ok(a.add(&b)?)
}

fn m14_theta(order: usize, s: i64) -> R<Series> {
    mex_theta(order, |k| 2 * k * (4 * k + 1), |k| 4 * k + 1, s)
}

fn m34_theta(order: usize, s: i64) -> R<Series> {
    mex_theta(order, |k| (2 * k + 1) * (4 * k + 3), |k| 4 * k + 3, s)
}

fn m14_gf(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let enumerated = series_from(order, |n| mex(1, 4, n, None));
    let defining = over(m14_theta(order, -1)?, &[QPochhammer::euler()])?;
    let half = odd_mex_square_sum(order)?
        .add(&even_denominator_sum(order)?)?
        .div_exact(2)?;
    Ok(vec![
        Comparison::new(
            "m_{1,4} = defining sum",
            ser(enumerated.clone()),
            ser(defining),
        ),
        Comparison::new("m_{1,4} = half-sum", ser(enumerated), ser(half)),
    ])
}

fn m34_gf(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let enumerated = series_from(order, |n| mex(3, 4, n, None));
    let defining = over(m34_theta(order, -1)?, &[QPochhammer::euler()])?;
    let half = odd_mex_square_sum(order)?
        .sub(&even_denominator_sum(order)?)?
        .div_exact(2)?;
    Ok(vec![
        Comparison::new(
            "m_{3,4} = defining sum",
            ser(enumerated.clone()),
            ser(defining),
        ),
        Comparison::new("m_{3,4} = half-sum", ser(enumerated), ser(half)),
    ])
}

fn half_distinct(n: u32, parity: Option<Parity>) -> i64 {
    if n.is_multiple_of(2) {
        distinct_count(n / 2, parity) as i64
    } else {
        0
    }
}

fn prop_o13(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let ns = || 0..=order as u32;
    Ok(vec![Comparison::new(
        "m_{1,4} - m_{3,4} = q(n/2) or 0",
        seq(ns(), |n| mex(1, 4, n, None) - mex(3, 4, n, None)),
        seq(ns(), |n| half_distinct(n, None)),
    )])
}

fn thm_4ways(_: &Params, order: usize) -> R<Vec<Comparison>> {
    use Parity::{Even, Odd};
    let ns = || 0..=order as u32;
    let m = |a: u32, p: Parity| move |n: u32| mex(a, 4, n, Some(p));
    let s = |f: &dyn Fn(u32) -> i64| series_from(order, f);
    let neg_q = inf(1, 1).negated();
    let theta_minus = unilateral_sum(order, |k| k * (k + 1) / 2, |k| sign(k * (k + 1) / 2))?;
    let theta_plus = unilateral_sum(order, |k| k * (k + 1) / 2, |_| 1)?;
    let a = over(theta_minus, &[QPochhammer::euler()])?;
    let b = over(theta_plus, &[neg_q])?;
    let (e, o) = (neg_q2_q2(order)?, q2_q2(order)?);
    Ok(vec![
        Comparison::new(
            "m^o_{1,4} = m^e_{3,4} + q^o(n/2)",
            seq(ns(), m(1, Odd)),
            seq(ns(), |n| m(3, Even)(n) + half_distinct(n, Some(Odd))),
        ),
        Comparison::new(
            "m^e_{1,4} = m^o_{3,4} + q^e(n/2)",
            seq(ns(), m(1, Even)),
            seq(ns(), |n| m(3, Odd)(n) + half_distinct(n, Some(Even))),
        ),
        Comparison::new(
            "m^e_{1,4} + m^o_{1,4}",
            ser(s(&|n| m(1, Even)(n) + m(1, Odd)(n))),
            ser(over(m14_theta(order, -1)?, &[QPochhammer::euler()])?),
        ),
        Comparison::new(
            "m^e_{1,4} - m^o_{1,4}",
            ser(s(&|n| m(1, Even)(n) - m(1, Odd)(n))),
            ser(over(m14_theta(order, 1)?, &[neg_q])?),
        ),
        Comparison::new(
            "m^o_{3,4} + m^e_{3,4}",
            ser(s(&|n| m(3, Odd)(n) + m(3, Even)(n))),
            ser(over(m34_theta(order, -1)?, &[QPochhammer::euler()])?),
        ),
        Comparison::new(
            "m^e_{3,4} - m^o_{3,4}",
            ser(s(&|n| m(3, Even)(n) - m(3, Odd)(n))),
            ser(over(m34_theta(order, 1)?, &[neg_q])?),
        ),
        Comparison::new(
            "2(m^e_{1,4} - m^o_{3,4}) via theta sums",
            ser(s(&|n| 2 * (m(1, Even)(n) - m(3, Odd)(n)))),
            ser(a.add(&b)?),
        ),
        Comparison::new(
            "2(m^e_{1,4} - m^o_{3,4}) via products",
            ser(s(&|n| 2 * (m(1, Even)(n) - m(3, Odd)(n)))),
            ser(e.add(&o)?),
        ),
        Comparison::new(
            "2(m^o_{1,4} - m^e_{3,4}) via theta sums",
            ser(s(&|n| 2 * (m(1, Odd)(n) - m(3, Even)(n)))),
            ser(a.sub(&b)?),
        ),
        Comparison::new(
            "2(m^o_{1,4} - m^e_{3,4}) via products",
            ser(s(&|n| 2 * (m(1, Odd)(n) - m(3, Even)(n)))),
            ser(e.sub(&o)?),
        ),
    ])
}

/// `Σ_k q^{k(2k+1)} (1 + q^{2k+1})`.
fn odd_mex_theta(order: usize) -> R<Series> {
    mex_theta(order, |k| k * (2 * k + 1), |k| 2 * k + 1, 1)
}

fn cor_oe(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let ns = || 0..=order as u32;
    let m12 = |p: Parity| move |n: u32| mex(1, 2, n, Some(p));
    let target = q2_q2(order)?;
    // Σ_k q^{k(2k+1)} / ((-q;q)_{2k} (-q^{2k+2};q)_∞)
    let first = sum_terms(
        order,
        |k| k * (2 * k + 1),
        |k, e| {
            over(
                mono(order, e),
                &[fin(1, 1, 2 * k).negated(), inf(2 * k + 2, 1).negated()],
            )
        },
    )?;
    let second = over(odd_mex_theta(order)?, &[inf(1, 1).negated()])?;
    let bilateral = bilateral_sum(order, |k| k * (2 * k + 1), |_| 1)?;
    let third = over(
        times(bilateral, &[inf(2, 2)])?,
        &[inf(1, 2).negated(), inf(4, 4)],
    )?;
    Ok(vec![
        Comparison::new(
            "m^o_{1,2} - m^e_{1,2} = pentagonal double sign",
            seq(ns(), |n| m12(Parity::Odd)(n) - m12(Parity::Even)(n)),
            seq(ns(), |n| pentagonal_double_sign(u64::from(n))),
        ),
        Comparison::new(
            "m^e_{1,2} - m^o_{1,2} = (q^2;q^2)",
            ser(series_from(order, |n| {
                m12(Parity::Even)(n) - m12(Parity::Odd)(n)
            })),
            ser(target.clone()),
        ),
        Comparison::new(
            "length-split sum = (q^2;q^2)",
            ser(first),
            ser(target.clone()),
        ),
        Comparison::new("theta form = (q^2;q^2)", ser(second.clone()), ser(target)),
        Comparison::new("theta form = bilateral form", ser(second), ser(third)),
    ])
}

fn carlitz(params: &Params, order: usize) -> R<Vec<Comparison>> {
    let degree = param(params, "degree") as usize;
    let bilateral = bilateral_sum(order, |k| k * (2 * k + 1), |_| 1)?;
    let lhs = over(bilateral.clone(), &[inf(4, 4)])?;
    let rhs = inf(3, 4).negated().expand(order)?;
    let rhs = times(rhs, &[inf(1, 4).negated()])?;
    let product_sub = carlitz_product(order).substitute(3, 1, order)?;
    let theta_sub = carlitz_theta(order).substitute(3, 1, order)?;
    let product_direct = times(rhs.clone(), &[inf(4, 4)])?;
    Ok(vec![
        Comparison::new(
            format!("product = theta to total degree {degree}"),
            Shape::XY(carlitz_product(degree)),
            Shape::XY(carlitz_theta(degree)),
        ),
        Comparison::new("theta at x=q^3, y=q", ser(theta_sub), ser(bilateral)),
        Comparison::new(
            "product at x=q^3, y=q",
            ser(product_sub),
            ser(product_direct),
        ),
        Comparison::new("substituted form", ser(lhs), ser(rhs)),
    ])
}

fn parity_m12(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let ns = || 0..=order as u32;
    Ok(vec![Comparison::new(
        "m_{1,2}(n) mod 2 = [n = m(3m±1)]",
        seq(ns(), |n| mex(1, 2, n, None).rem_euclid(2)),
        seq(ns(), |n| {
            i64::from(pentagonal_double_sign(u64::from(n)) != 0)
        }),
    )])
}

fn oddstats(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let odd = || (1..=order as u32).step_by(2);
    let base = || seq(odd(), |n| mex(1, 4, n, None));
    Ok(vec![
        Comparison::new(
            "m_{1,4} = m_{3,4}",
            base(),
            seq(odd(), |n| mex(3, 4, n, None)),
        ),
        Comparison::new(
            "m_{1,4} = m^o_{1,2}",
            base(),
            seq(odd(), |n| mex(1, 2, n, Some(Parity::Odd))),
        ),
        Comparison::new(
            "m_{1,4} = m^e_{1,2}",
            base(),
            seq(odd(), |n| mex(1, 2, n, Some(Parity::Even))),
        ),
    ])
}

/// `M_{<=0}(k, n)` by enumeration, with `z` marking `k`; the partition `1`
/// is left out, as in the crank conventions at `n = 1`.
fn crank_le0_by_length(order: usize) -> R<ZSeries> {
    let mut z = ZSeries::zero(order);
    for n in 0..=order as u32 {
        if n == 1 {
            continue;
        }
        let mut by_len = std::collections::BTreeMap::new();
        for_each_partition(n, |parts| {
            if crank_of(parts) <= 0 {
                *by_len.entry(parts.len() as i64).or_insert(0i64) += 1;
            }
        });
        for (k, c) in by_len {
            z.set_coeff(k, n as usize, c)?;
        }
    }
    Ok(z)
}

fn huh_kim(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let ns = || 0..=order as u32;
    let le0 = |p: Parity| move |n: u32| crank_le0_by_parity(n, p) as i64;
    let bivariate = crank_le0_bivariate(order);
    let collapsed = bivariate.substitute_z(-1)?;
    let mixed = sum_terms(
        order,
        |n| n * (n + 1),
        |n, e| over(mono(order, e), &[fin(1, 1, n).negated(), fin(1, 1, n)]),
    )?;
    Ok(vec![
        Comparison::new(
            "M^e_{<=0} = m_{1,4}",
            seq(ns(), le0(Parity::Even)),
            seq(ns(), |n| mex(1, 4, n, None)),
        ),
        Comparison::new(
            "M^o_{<=0} = m_{3,4}",
            seq(ns(), le0(Parity::Odd)),
            seq(ns(), |n| mex(3, 4, n, None)),
        ),
        Comparison::new(
            "length-marked series = enumeration",
            Shape::Z(bivariate),
            Shape::Z(crank_le0_by_length(order)?),
        ),
        Comparison::new("z = -1 collapse", ser(collapsed.clone()), ser(mixed)),
        Comparison::new(
            "z = -1 collapse = (q^2;q^2) form",
            ser(collapsed),
            ser(even_denominator_sum(order)?),
        ),
    ])
}

fn cor3_8(_: &Params, order: usize) -> R<Vec<Comparison>> {
    let ns = || 0..=order as u32;
    let diff = |n: u32| {
        crank_le0_by_parity(n, Parity::Even) as i64 - crank_le0_by_parity(n, Parity::Odd) as i64
    };
    let sum = even_denominator_sum(order)?;
    Ok(vec![
        Comparison::new(
            "M^e_{<=0} - M^o_{<=0} = q(n/2) or 0",
            seq(ns(), diff),
            seq(ns(), |n| half_distinct(n, None)),
        ),
        Comparison::new(
            "signed enumeration = Durfee sum",
            ser(series_from(order, diff)),
            ser(sum.clone()),
        ),
        Comparison::new("Durfee sum = (-q^2;q^2)", ser(sum), ser(neg_q2_q2(order)?)),
    ])
}

fn frobenius_crank(params: &Params, order: usize) -> R<Vec<Comparison>> {
    let j = j_param(params) as u32;
    let ns = || 0..=order as u32;
    let table = CrankTable::new(order as u32);
    let no_zero = |n: u32| frobenius_count(n, &[FrobeniusPredicate::NoZero]) as i64;
    let durfee = sum_terms(
        order,
        |d| d * d + 2 * d,
        |d, e| {
            if d == 0 {
                Ok(Series::one(order))
            } else {
                over(mono(order, e), &[fin(1, 1, d), fin(2, 1, d - 1)])
            }
        },
    )?;
    Ok(vec![
        Comparison::new(
            "(a) crank 0 = Durfee sum",
            ser(series_from(order, crank_zero_actual)),
            ser(durfee),
        ),
        Comparison::new(
            "(b) M(0,n) = a(n) - a(n-1)",
            seq(ns(), |n| table.m(0, n)),
            seq(ns(), |n| {
                no_zero(n) - if n == 0 { 0 } else { no_zero(n - 1) }
            }),
        ),
        Comparison::new(
            "(c) crank 0 = no 0, bottom entries differ by 1",
            seq(ns(), crank_zero_actual),
            seq(ns(), |n| {
                frobenius_count(
                    n,
                    &[
                        FrobeniusPredicate::NoZero,
                        FrobeniusPredicate::BottomFirstTwoDifferByOne,
                    ],
                ) as i64
            }),
        ),
        Comparison::new(
            format!("(d) crank >= {j} = no {j} in top row"),
            seq(ns(), |n| table.count(n, |m| m >= i64::from(j))),
            seq(ns(), |n| {
                if n < j {
                    0
                } else {
                    frobenius_count(n - j, &[FrobeniusPredicate::NoJInTopRow(j)]) as i64
                }
            }),
        ),
    ])
}

// ---------------------------------------------------------------------------

fn j_spec(max_grid: i64) -> ParamSpec {
    ParamSpec {
        name: "j",
        min: 0,
        max: 1000,
        grid: (0..=max_grid).collect(),
        default: None,
    }
}

fn m_spec() -> ParamSpec {
    ParamSpec {
        name: "m",
        min: -1000,
        max: 1000,
        grid: (-8..=8).collect(),
        default: None,
    }
}

pub(super) fn entries() -> Vec<IdentityEntry> {
    use Kind::*;
    let e = |id, kind, summary, params, build| IdentityEntry {
        id,
        kind,
        summary,
        params,
        build,
    };
    vec![
        e(
            "garvan-bivariate",
            SeriesVsEnumeration,
            "two-variable crank generating function",
            vec![],
            garvan_bivariate,
        ),
        e(
            "garvan-fixed-m",
            SeriesVsEnumeration,
            "generating function of M(m,n) for fixed m",
            vec![m_spec()],
            garvan_fixed_m,
        ),
        e(
            "crank-symmetry",
            CountVsCount,
            "M(m,n) = M(-m,n)",
            vec![m_spec()],
            crank_symmetry,
        ),
        e(
            "qbinomial-excess",
            SeriesVsSeries,
            "1/(q;q)_d = [n choose d]/(q^{n-d+1};q)_d, n <= 8",
            vec![],
            qbinomial_excess,
        ),
        e(
            "thm1.2",
            SeriesVsEnumeration,
            "crank >= j as an alternating sum",
            vec![j_spec(5)],
            thm1_2,
        ),
        e(
            "thm2.1",
            SeriesVsEnumeration,
            "crank >= j as a positive sum",
            vec![j_spec(5)],
            thm2_1,
        ),
        e(
            "lemma2.2",
            SeriesVsSeries,
            "alternating sum = positive sum",
            vec![j_spec(5)],
            lemma2_2,
        ),
        e(
            "fine-specialized",
            SeriesVsSeries,
            "Fine's identity at t = q, b = q^j and the triple sum",
            vec![j_spec(5)],
            fine_specialized,
        ),
        e(
            "ewell",
            SeriesVsSeries,
            "theta sum over (q;q) = (-q^2;q^2)",
            vec![],
            ewell,
        ),
        e(
            "m14-gf",
            SeriesVsEnumeration,
            "generating functions of m_{1,4}",
            vec![],
            m14_gf,
        ),
        e(
            "m34-gf",
            SeriesVsEnumeration,
            "generating functions of m_{3,4}",
            vec![],
            m34_gf,
        ),
        e(
            "prop-o13",
            CountVsCount,
            "m_{1,4} - m_{3,4} = q(n/2) for even n, 0 for odd n",
            vec![],
            prop_o13,
        ),
        e(
            "thm-4ways",
            CountVsCount,
            "length-parity relations between m_{1,4} and m_{3,4}",
            vec![],
            thm_4ways,
        ),
        e(
            "cor-oe",
            CountVsCount,
            "m^o_{1,2} - m^e_{1,2} on doubled pentagonal numbers",
            vec![],
            cor_oe,
        ),
        e(
            "carlitz",
            SeriesVsSeries,
            "Carlitz's product = Ramanujan's theta series, and its x = q^3, y = q case",
            vec![ParamSpec {
                name: "degree",
                min: 0,
                max: 200,
                grid: vec![30],
                default: Some(30),
            }],
            carlitz,
        ),
        e(
            "parity-m12",
            CountVsCount,
            "m_{1,2}(n) is odd exactly at n = m(3m±1)",
            vec![],
            parity_m12,
        ),
        e(
            "oddstats",
            CountVsCount,
            "four statistics agree at odd n",
            vec![],
            oddstats,
        ),
        e(
            "huh-kim",
            CountVsCount,
            "M^e_{<=0} = m_{1,4} and M^o_{<=0} = m_{3,4}",
            vec![],
            huh_kim,
        ),
        e(
            "cor3.8",
            CountVsCount,
            "M^e_{<=0} - M^o_{<=0} = q(n/2) for even n, 0 for odd n",
            vec![],
            cor3_8,
        ),
        e(
            "frobenius-crank",
            CountVsCount,
            "crank classes against Frobenius symbol classes",
            vec![j_spec(4)],
            frobenius_crank,
        ),
    ]
}
