//! Bivariate polynomial gcd over the rationals.
//!
//! Polynomials are viewed in `Q[z][q]`: a vector of `z`-polynomials indexed by
//! the power of `q`. The gcd is computed with a primitive pseudo-remainder
//! sequence in `q`, the content part with Euclid in `Q[z]`.

use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::Rational;

type UPoly = Vec<Rational>;
type BiPoly = Vec<UPoly>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

fn u_divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let mut r = a.clone();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lb = b.last().expect("division by zero polynomial").clone();
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn u_monic(mut a: UPoly) -> UPoly {
    if let Some(l) = a.last().cloned() {
        for c in a.iter_mut() {
            *c /= &l;
        }
    }
    a
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = u_divrem(&x, &y);
        x = y;
        y = r;
    }
    u_monic(x)
}

fn content(a: &BiPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        if c.is_empty() {
            continue;
        }
        g = if g.is_empty() { u_monic(c.clone()) } else { u_gcd(&g, c) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn primitive(a: &BiPoly) -> BiPoly {
    let c = content(a);
    if c.len() <= 1 {
        let l = c.first().cloned().unwrap_or_else(Rational::one);
        return a.iter().map(|p| p.iter().map(|x| x / &l).collect()).collect();
    }
    a.iter()
        .map(|p| {
            let (q, r) = u_divrem(p, &c);
            debug_assert!(r.is_empty());
            q
        })
        .collect()
}

fn bi_trim(a: &mut BiPoly) {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
}

fn prem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut r = a.clone();
    bi_trim(&mut r);
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        let mut next: BiPoly = r.iter().map(|c| u_mul(c, &lb)).collect();
        for (j, y) in b.iter().enumerate() {
            next[shift + j] = u_sub(&next[shift + j], &u_mul(&lr, y));
        }
        bi_trim(&mut next);
        r = next;
    }
    r
}

fn to_bi(p: &LaurentPoly) -> BiPoly {
    let (mq, mz) = p.min_exponents();
    let (xq, _) = p.max_exponents();
    let mut out: BiPoly = vec![Vec::new(); (xq - mq + 1) as usize];
    for (&(a, b), c) in p.terms() {
        let row = &mut out[(a - mq) as usize];
        let j = (b - mz) as usize;
        if row.len() <= j {
            row.resize(j + 1, Rational::zero());
        }
        row[j] = c.clone();
    }
    out
}

fn from_bi(p: &BiPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (i, row) in p.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            out.add_term((i as i32, j as i32), c.clone());
        }
    }
    out
}

/// Gcd of two nonzero Laurent polynomials, up to a unit of the Laurent ring.
/// The result is an honest polynomial with zero minimal exponents.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_monomial() || b.is_monomial() {
        return LaurentPoly::one();
    }
    let a = to_bi(a);
    let b = to_bi(b);
    let c = u_gcd(&content(&a), &content(&b));
    let mut p = primitive(&a);
    let mut r = primitive(&b);
    if p.len() < r.len() {
        std::mem::swap(&mut p, &mut r);
    }
    while !r.is_empty() {
        if r.len() == 1 {
            p = vec![vec![Rational::one()]];
            break;
        }
        let rem = prem(&p, &r);
        p = r;
        r = if rem.is_empty() { Vec::new() } else { primitive(&rem) };
    }
    let g: BiPoly = p.iter().map(|row| u_mul(row, &c)).collect();
    from_bi(&g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn gcd_of_products() {
        // (q - z)(q + 1) and (q - z)(z + 2)
        let a = LaurentPoly::from_terms([((1, 0), r(1)), ((0, 1), r(-1))]);
        let b = LaurentPoly::from_terms([((1, 0), r(1)), ((0, 0), r(1))]);
        let c = LaurentPoly::from_terms([((0, 1), r(1)), ((0, 0), r(2))]);
        let g = gcd(&(&a * &b), &(&a * &c));
        assert!(g.exact_div(&a).is_some_and(|u| u.is_monomial()));
    }

    #[test]
    fn coprime() {
        let a = LaurentPoly::from_terms([((2, 0), r(1)), ((0, 0), r(-1))]);
        let b = LaurentPoly::from_terms([((0, 2), r(1)), ((0, 0), r(1))]);
        assert!(gcd(&a, &b).is_monomial());
    }
}
