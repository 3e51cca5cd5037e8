//! Dense polynomials over the prime field F_p (word-sized p): ring
//! arithmetic, gcd, modular powering, squarefree decomposition in
//! characteristic p, and full factorization into monic irreducibles
//! via distinct-degree + equal-degree (Cantor-Zassenhaus) splitting.
//!
//! Coefficients are canonical residues in `[0, p)` stored in a `Vec<u64>`
//! (index i = coefficient of x^i); products go through u128 so any prime
//! below 2^63 is safe. Randomized splitting takes an explicit seed and
//! factor lists are sorted canonically, so every result is reproducible
//! byte for byte.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, invariant, Result};
use crate::integer::is_prime_u64;

/// A polynomial over F_p. Invariants: every coefficient lies in
/// `[0, p)`, and the coefficient vector carries no trailing zeros
/// (the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// Build from raw coefficients (index i = coefficient of x^i),
    /// reducing each into `[0, p)` and trimming.
    ///
    /// # Panics
    /// If `p` is not prime. Arithmetic here relies on F_p being a field.
    pub fn new(p: u64, coeffs: impl IntoIterator<Item = u64>) -> Self {
        assert!(is_prime_u64(p), "modulus {p} is not prime");
        let coeffs = coeffs.into_iter().map(|c| c % p).collect();
        ModPoly::from_raw(p, coeffs)
    }

    /// Internal constructor for arithmetic results whose coefficients are
    /// already canonical residues; skips the primality and range checks.
    fn from_raw(p: u64, coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p), "residue out of range");
        let mut poly = ModPoly { p, coeffs };
        poly.trim();
        poly
    }

    pub fn zero(p: u64) -> Self {
        ModPoly::new(p, [])
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, [1])
    }

    /// The monomial x.
    pub fn x(p: u64) -> Self {
        ModPoly::new(p, [0, 1])
    }

    /// The monomial coeff * x^deg.
    pub fn monomial(p: u64, coeff: u64, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = coeff % p;
        ModPoly::new(p, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Coefficients in ascending power order, without trailing zeros.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient (0 for the zero polynomial).
    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    fn assert_same_modulus(&self, other: &Self) {
        assert_eq!(
            self.p, other.p,
            "mixed moduli: {} versus {}",
            self.p, other.p
        );
    }

    fn mul_residues(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.p);
        ModPoly::from_raw(self.p, coeffs.collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| (self.p + self.coeff(i) - other.coeff(i)) % self.p);
        ModPoly::from_raw(self.p, coeffs.collect())
    }

    pub fn neg(&self) -> Self {
        ModPoly::zero(self.p).sub(self)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_modulus(other);
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + self.mul_residues(a, b)) % self.p;
            }
        }
        ModPoly::from_raw(self.p, acc)
    }

    pub fn mul_scalar(&self, s: u64) -> Self {
        let s = s % self.p;
        let coeffs: Vec<u64> = self.coeffs.iter().map(|&c| self.mul_residues(c, s)).collect();
        ModPoly::from_raw(self.p, coeffs)
    }

    /// Make monic by dividing through by the leading coefficient.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        self.mul_scalar(inv)
    }

    /// Euclidean division: returns (q, r) with `self = q * divisor + r`
    /// and `deg r < deg divisor`.
    ///
    /// # Panics
    /// If `divisor` is zero or the moduli differ.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        self.assert_same_modulus(divisor);
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p;
        if self.coeffs.len() < divisor.coeffs.len() {
            return (ModPoly::zero(p), self.clone());
        }
        let dd = divisor.coeffs.len() - 1;
        let lc_inv = inv_mod(divisor.lc(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let factor = self.mul_residues(rem[k], lc_inv);
            quot[k - dd] = factor;
            if factor != 0 {
                for (j, &dc) in divisor.coeffs.iter().enumerate() {
                    let sub = self.mul_residues(factor, dc);
                    rem[k - dd + j] = (p + rem[k - dd + j] - sub) % p;
                }
            }
        }
        rem.truncate(dd);
        (ModPoly::from_raw(p, quot), ModPoly::from_raw(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divmod(divisor).1
    }

    /// True when `divisor` divides self exactly.
    pub fn divisible_by(&self, divisor: &Self) -> bool {
        self.rem(divisor).is_zero()
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (self.mul_residues(acc, x) + c) % self.p;
        }
        acc
    }

    /// Formal derivative (coefficient arithmetic mod p, so the degree can
    /// collapse: d/dx of x^p is 0 in characteristic p).
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        let coeffs: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul_residues(c, (i as u64) % self.p))
            .collect();
        ModPoly::from_raw(self.p, coeffs)
    }

    /// Substitute x^(1/p): inverse of the Frobenius on polynomials whose
    /// derivative vanishes. Every exponent must be divisible by p, and in
    /// F_p the coefficients are already their own p-th roots (a^p = a).
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        debug_assert!(
            self.coeffs.iter().enumerate().all(|(i, &c)| c == 0 || i % p == 0),
            "p-th root of a polynomial that is not a p-th power"
        );
        let coeffs: Vec<u64> = self.coeffs.iter().step_by(p).copied().collect();
        ModPoly::from_raw(self.p, coeffs)
    }
}

impl std::fmt::Display for ModPoly {
    /// Canonical rendering in descending powers: `x^3 + 2*x + 1`.
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            match (c, i) {
                (c, 0) => write!(out, "{c}")?,
                (1, 1) => write!(out, "x")?,
                (1, i) => write!(out, "x^{i}")?,
                (c, 1) => write!(out, "{c}*x")?,
                (c, i) => write!(out, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Modular inverse in F_p by Fermat powering.
fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of 0 mod {p}");
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Monic greatest common divisor.
///
/// `gcd(f, 0)` is the monic normalization of f; both zero is a domain
/// error (no monic generator exists).
pub fn fp_gcd(f: &ModPoly, g: &ModPoly) -> Result<ModPoly> {
    if f.is_zero() && g.is_zero() {
        domain!("gcd(0, 0) is undefined");
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// `base^exp mod modpoly` by square-and-multiply over the bits of `exp`.
pub fn fp_pow_mod(base: &ModPoly, exp: &BigUint, modpoly: &ModPoly) -> Result<ModPoly> {
    if modpoly.is_zero() {
        domain!("powering modulo the zero polynomial");
    }
    let p = base.modulus();
    let mut acc = ModPoly::one(p).rem(modpoly);
    let mut sq = base.rem(modpoly);
    let mut e = exp.clone();
    let two = BigUint::from(2u32);
    while !e.is_zero() {
        if (&e % &two).is_one() {
            acc = acc.mul(&sq).rem(modpoly);
        }
        sq = sq.mul(&sq).rem(modpoly);
        e >>= 1;
    }
    Ok(acc)
}

/// Squarefree decomposition in characteristic p: returns pairwise-coprime
/// squarefree monic polynomials with their multiplicities, whose product
/// with multiplicities reconstructs `f` up to the leading unit.
///
/// The classical multiplicity-peeling loop handles multiplicities not
/// divisible by p; whatever remains is an exact p-th power (vanishing
/// derivative), which is deflated through [`ModPoly::pth_root`] and
/// processed recursively with multiplicities scaled by p.
pub fn squarefree_decomposition(f: &ModPoly) -> Result<Vec<(ModPoly, u32)>> {
    if f.is_zero() {
        domain!("squarefree decomposition of 0");
    }
    let mut out = Vec::new();
    decompose_into(&f.monic(), 1, &mut out)?;
    out.sort_by(|(a, _), (b, _)| canonical_cmp(a, b));
    Ok(out)
}

fn decompose_into(f: &ModPoly, e: u32, out: &mut Vec<(ModPoly, u32)>) -> Result<()> {
    if f.is_one() {
        return Ok(());
    }
    let d = f.derivative();
    if d.is_zero() {
        // Pure p-th power: deflate and scale multiplicities.
        let p32 = u32::try_from(f.modulus()).expect("p-th-power deflation needs word-sized p");
        return decompose_into(&f.pth_root(), e * p32, out);
    }
    let mut c = fp_gcd(f, &d)?;
    let mut w = f.divmod(&c).0;
    // Peel factors of multiplicity i = 1, 2, ...; multiplicities divisible
    // by p never appear in w (they divide the derivative fully) and stay
    // behind in c for the recursive p-th-root pass.
    let mut i = 1u32;
    while !w.is_one() {
        let y = fp_gcd(&w, &c)?;
        let fac = w.divmod(&y).0;
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, e * i));
        }
        c = c.divmod(&y).0;
        w = y;
        i += 1;
    }
    if !c.is_one() {
        // What survives the peeling is exactly the p-th-power part
        // (factors whose multiplicity p divides), so deflating it costs
        // a factor p in every multiplicity.
        let p32 = u32::try_from(f.modulus()).expect("p-th-power deflation needs word-sized p");
        decompose_into(&c.pth_root(), e * p32, out)?;
    }
    Ok(())
}

/// A complete factorization over F_p: `unit * prod(factor^multiplicity)`.
/// Factors are distinct monic irreducibles in canonical order (ascending
/// degree, then descending-power coefficient sequence compared
/// lexicographically), so reports and witnesses are reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpFactorization {
    pub p: u64,
    pub unit: u64,
    pub factors: Vec<(ModPoly, u32)>,
}

impl FpFactorization {
    /// Multiply the factorization back together.
    pub fn product(&self) -> ModPoly {
        let mut acc = ModPoly::new(self.p, [self.unit]);
        for (g, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(g);
            }
        }
        acc
    }
}

impl std::fmt::Display for FpFactorization {
    /// Renders like `(x + 1)^4 * (x^2 + x + 1)^4`.
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        if self.unit != 1 || self.factors.is_empty() {
            write!(out, "{}", self.unit)?;
            first = false;
        }
        for (g, e) in &self.factors {
            if !first {
                write!(out, " * ")?;
            }
            first = false;
            write!(out, "({g})")?;
            if *e > 1 {
                write!(out, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Canonical factor order: ascending degree, then the coefficient
/// sequences compared from the leading coefficient down (the order
/// polynomials would sort in if printed).
pub fn canonical_cmp(a: &ModPoly, b: &ModPoly) -> std::cmp::Ordering {
    let da = a.degree().map_or(-1i64, |d| d as i64);
    let db = b.degree().map_or(-1i64, |d| d as i64);
    da.cmp(&db)
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Full factorization into monic irreducibles with multiplicities,
/// deterministic for a fixed `seed`. Every emitted factor is re-verified
/// irreducible (Frobenius fixed-field check at its degree and at every
/// proper divisor), and the product is re-verified equal to the input;
/// both checks guard the randomized splitting.
pub fn fp_factor(f: &ModPoly, seed: u64) -> Result<FpFactorization> {
    if f.is_zero() {
        domain!("factorization of 0");
    }
    let p = f.modulus();
    let unit = f.lc();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(ModPoly, u32)> = Vec::new();
    for (sqfree, mult) in squarefree_decomposition(f)? {
        for (product, d) in distinct_degree(&sqfree)? {
            for irred in equal_degree(&product, d, &mut rng)? {
                factors.push((irred, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| canonical_cmp(a, b));

    // Distinctness: equal factors coming out of different squarefree
    // multiplicities would mean the decomposition was not coprime.
    for pair in factors.windows(2) {
        invariant!(
            pair[0].0 != pair[1].0,
            "duplicate irreducible factor {}",
            pair[0].0
        );
    }
    for (g, _) in &factors {
        invariant!(
            verify_irreducible(g)?,
            "factor {g} failed the irreducibility re-check mod {p}"
        );
    }
    let result = FpFactorization { p, unit, factors };
    invariant!(
        result.product() == *f,
        "factor product does not reconstruct the input mod {p}"
    );
    Ok(result)
}

/// Distinct-degree splitting of a squarefree monic polynomial: returns
/// (product of all irreducible factors of degree d, d) pairs with the
/// products nontrivial, in ascending d.
fn distinct_degree(f: &ModPoly) -> Result<Vec<(ModPoly, usize)>> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.clone();
    // h tracks x^(p^d) mod rest, advanced one Frobenius power per round.
    let mut h = ModPoly::x(p).rem(&rest);
    let mut d = 0usize;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg {
            // Whatever is left is a single irreducible factor.
            out.push((rest.clone(), deg));
            break;
        }
        h = fp_pow_mod(&h, &BigUint::from(p), &rest)?;
        let g = fp_gcd(&h.sub(&ModPoly::x(p)), &rest)?;
        if !g.is_one() {
            out.push((g.clone(), d));
            rest = rest.divmod(&g).0;
            h = h.rem(&rest);
        }
    }
    Ok(out)
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree
/// product of irreducibles all of degree `d`.
fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<ModPoly>> {
    let deg = f.degree().expect("nonzero by construction");
    if deg == d {
        return Ok(vec![f.monic()]);
    }
    let p = f.modulus();
    let split = loop {
        let r = random_poly(p, deg, rng);
        if r.degree().is_none() {
            continue;
        }
        let candidate = if p == 2 {
            // Trace map: sum of r^(2^i) for i < d separates factors in
            // characteristic 2, where the (q-1)/2 exponent is unusable.
            let mut acc = r.rem(f);
            let mut term = r.rem(f);
            for _ in 1..d {
                term = term.mul(&term).rem(f);
                acc = acc.add(&term);
            }
            acc
        } else {
            // r^((p^d - 1)/2) is +-1 modulo each irreducible factor;
            // subtracting 1 strands roughly half the factors in the gcd.
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let w = fp_pow_mod(&r, &e, f)?;
            w.sub(&ModPoly::one(p))
        };
        if candidate.is_zero() {
            continue;
        }
        let g = fp_gcd(&candidate, f)?;
        let gdeg = g.degree().unwrap_or(0);
        if gdeg > 0 && gdeg < deg {
            break g;
        }
    };
    let rest = f.divmod(&split).0;
    let mut out = equal_degree(&split, d, rng)?;
    out.extend(equal_degree(&rest, d, rng)?);
    Ok(out)
}

fn random_poly(p: u64, below_degree: usize, rng: &mut ChaCha8Rng) -> ModPoly {
    let coeffs: Vec<u64> = (0..below_degree).map(|_| rng.gen_range(0..p)).collect();
    ModPoly::from_raw(p, coeffs)
}

/// Irreducibility check for a monic polynomial of degree d >= 1 over F_p:
/// x^(p^d) = x mod g, and the Frobenius orbit does not collapse at any
/// proper divisor d' of d (gcd(x^(p^d') - x, g) = 1).
pub fn verify_irreducible(g: &ModPoly) -> Result<bool> {
    let d = match g.degree() {
        Some(d) if d >= 1 => d,
        _ => return Ok(false),
    };
    let p = g.modulus();
    let x = ModPoly::x(p);
    // Frobenius images x^(p^j) mod g for j = 1..d, one powering each.
    let mut frob = x.rem(g);
    let mut images = Vec::with_capacity(d);
    for _ in 0..d {
        frob = fp_pow_mod(&frob, &BigUint::from(p), g)?;
        images.push(frob.clone());
    }
    if images[d - 1] != x.rem(g) {
        return Ok(false);
    }
    for dd in 1..d {
        if d % dd == 0 {
            let overlap = fp_gcd(&images[dd - 1].sub(&x), g)?;
            if !overlap.is_one() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All roots of f in F_p, each repeated to its multiplicity, in
/// ascending residue order.
pub fn fp_roots(f: &ModPoly) -> Result<Vec<u64>> {
    if f.is_zero() {
        domain!("roots of the zero polynomial");
    }
    let p = f.modulus();
    let x = ModPoly::x(p);
    // Distinct roots are the roots of gcd(f, x^p - x).
    let frob = fp_pow_mod(&x, &BigUint::from(p), &f.monic())?;
    let linear_part = fp_gcd(&frob.sub(&x), f)?;
    let mut distinct: Vec<u64> = Vec::new();
    match linear_part.degree() {
        None | Some(0) => {}
        Some(d) if (d as u64) < 64 && p <= 4096 => {
            // Small fields: direct scan beats splitting.
            distinct.extend((0..p).filter(|&r| f.eval(r) == 0));
        }
        Some(_) => {
            let mut rng = ChaCha8Rng::seed_from_u64(crate::integer::DEFAULT_SEED);
            for lin in equal_degree(&linear_part, 1, &mut rng)? {
                // Monic linear factor x + c has root p - c.
                let c = lin.coeff(0);
                distinct.push((p - c) % p);
            }
        }
    }
    distinct.sort_unstable();
    let mut out = Vec::new();
    for r in distinct {
        let lin = ModPoly::new(p, [(p - r) % p, 1]);
        let mut rest = f.clone();
        loop {
            let (q, rem) = rest.divmod(&lin);
            if !rem.is_zero() {
                break;
            }
            out.push(r);
            rest = q;
        }
    }
    Ok(out)
}
