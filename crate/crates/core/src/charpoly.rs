//! Exact characteristic polynomials, bipartite b-coefficients, matching counts and the
//! coefficientwise quasi-order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// φ(G, x) = det(xI − A) = Σ c_k x^{n−k}, stored as `coeffs[k] = c_k` (so `coeffs[0] = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.first().is_none_or(|c| !c.is_one()) {
            return Err(Error::InvalidArgument(
                "characteristic polynomial must be monic".into(),
            ));
        }
        Ok(CharPoly { coeffs })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .fold(0.0, |acc, c| acc * x + big_to_f64(c))
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pow = n - k;
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (pow, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{pow}")?,
                (_, false) => write!(f, "{mag}x^{pow}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Big integers exceed 64 bits quickly, so the wire format is decimal strings.
fn serialize_bigs<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

fn deserialize_bigs<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
    let strings = Vec::<String>::deserialize(d)?;
    strings
        .iter()
        .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
        .collect()
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigs(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for CharPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coeffs = deserialize_bigs(d)?;
        CharPoly::from_coeffs(coeffs).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

// Dense polynomials in ascending powers of x.
type Poly = Vec<BigInt>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub_assign(a: &mut Poly, b: &Poly) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
}

fn shift_up(a: &Poly) -> Poly {
    let mut out = Vec::with_capacity(a.len() + 1);
    out.push(BigInt::zero());
    out.extend(a.iter().cloned());
    out
}

fn one() -> Poly {
    vec![BigInt::one()]
}

/// Exact characteristic polynomial. Forests go through the leaf-deletion recursion, every
/// other graph through Faddeev–LeVerrier in integer arithmetic.
pub fn char_poly(g: &Graph) -> CharPoly {
    if g.is_forest() {
        char_poly_forest(g)
    } else {
        char_poly_faddeev_leverrier(g)
    }
}

/// Faddeev–LeVerrier: M_1 = I, c_k = −tr(A·M_k)/k, M_{k+1} = A·M_k + c_k·I.
/// The division by k is exact over the integers.
pub fn char_poly_faddeev_leverrier(g: &Graph) -> CharPoly {
    let n = g.n();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigInt::one());
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 1..=n {
        // am = A·M via adjacency lists.
        let am: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut row = vec![BigInt::zero(); n];
                for &u in g.neighbors(i) {
                    for (r, x) in row.iter_mut().zip(&m[u]) {
                        *r += x;
                    }
                }
                row
            })
            .collect();
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let ck = -(trace / BigInt::from(k));
        if k < n {
            m = am;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &ck;
            }
        }
        coeffs.push(ck);
    }
    CharPoly { coeffs }
}

/// φ of a forest by rooted dynamic programming. At a root v with subtrees T_c:
/// φ(T_v − v) = Π φ(T_c) and φ(T_v) = x·φ(T_v − v) − Σ_c φ(T_c − c)·Π_{c'≠c} φ(T_c'),
/// which is φ(T) = x·φ(T − v) − Σ_{u∼v} φ(T − v − u) applied at every vertex bottom-up.
pub fn char_poly_forest(g: &Graph) -> CharPoly {
    assert!(g.is_forest(), "char_poly_forest needs an acyclic graph");
    let n = g.n();
    let mut full: Vec<Poly> = vec![Vec::new(); n];
    let mut minus: Vec<Poly> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut total = one();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let (order, parent) = rooted_order(g, root, &mut seen);
        for &v in order.iter().rev() {
            let kids: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| w != parent[v])
                .collect();
            // prefix[i] = Π_{j<i} full[kids[j]], suffix likewise from the right.
            let mut prefix = vec![one()];
            for &c in &kids {
                let next = poly_mul(prefix.last().unwrap(), &full[c]);
                prefix.push(next);
            }
            let mut suffix = vec![one(); kids.len() + 1];
            for i in (0..kids.len()).rev() {
                suffix[i] = poly_mul(&suffix[i + 1], &full[kids[i]]);
            }
            let mut fv = shift_up(&prefix[kids.len()]);
            for (i, &c) in kids.iter().enumerate() {
                let others = poly_mul(&prefix[i], &suffix[i + 1]);
                poly_sub_assign(&mut fv, &poly_mul(&minus[c], &others));
            }
            minus[v] = prefix.pop().unwrap();
            full[v] = fv;
        }
        total = poly_mul(&total, &full[root]);
    }
    total.resize(n + 1, BigInt::zero());
    total.reverse();
    CharPoly { coeffs: total }
}

fn rooted_order(g: &Graph, root: usize, seen: &mut [bool]) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; g.n()];
    let mut order = Vec::new();
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    (order, parent)
}

/// Nonnegative b-coefficients of a bipartite characteristic polynomial,
/// φ(G, x) = Σ_k (−1)^k b_{2k} x^{n−2k}. Always ⌊n/2⌋ + 1 entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BCoeffs {
    b: Vec<BigInt>,
    n: usize,
}

impl BCoeffs {
    pub fn new(b: Vec<BigInt>, n: usize) -> Result<Self> {
        if b.len() > n / 2 + 1 {
            return Err(Error::InvalidArgument(format!(
                "{} b-coefficients exceed ⌊{n}/2⌋ + 1",
                b.len()
            )));
        }
        if b.first().is_none_or(|b0| !b0.is_one()) {
            return Err(Error::InvalidArgument("b_0 must be 1".into()));
        }
        if b.iter().any(Signed::is_negative) {
            return Err(Error::InvalidArgument(
                "b-coefficients must be nonnegative".into(),
            ));
        }
        let mut b = b;
        b.resize(n / 2 + 1, BigInt::zero());
        Ok(BCoeffs { b, n })
    }

    pub fn values(&self) -> &[BigInt] {
        &self.b
    }

    /// Vertex count of the graph these came from.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The same graph with isolated vertices added up to `n`: φ gains a factor x^{n − self.n},
    /// which leaves every b_{2k} in place and appends zeros.
    pub fn padded_to(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::InvalidArgument(format!(
                "cannot pad {} vertices down to {n}",
                self.n
            )));
        }
        let mut b = self.b.clone();
        b.resize(n / 2 + 1, BigInt::zero());
        Ok(BCoeffs { b, n })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.b.iter().map(big_to_f64).collect()
    }

    /// Decimal strings, for reports.
    pub fn to_strings(&self) -> Vec<String> {
        self.b.iter().map(|x| x.to_string()).collect()
    }
}

impl Serialize for BCoeffs {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigs(&self.b, s)
    }
}

/// b_{2k} = (−1)^k c_{2k}; fails unless odd coefficients vanish and even ones alternate.
pub fn b_coefficients(p: &CharPoly) -> Result<BCoeffs> {
    let n = p.degree();
    let mut b = Vec::with_capacity(n / 2 + 1);
    for (k, c) in p.coeffs().iter().enumerate() {
        if k % 2 == 1 {
            if !c.is_zero() {
                return Err(Error::NotBipartitePolynomial(format!(
                    "coefficient of x^{} is {c}, expected 0",
                    n - k
                )));
            }
            continue;
        }
        let v = if (k / 2) % 2 == 0 { c.clone() } else { -c };
        if v.is_negative() {
            return Err(Error::NotBipartitePolynomial(format!(
                "coefficient of x^{} is {c}, wrong sign",
                n - k
            )));
        }
        b.push(v);
    }
    BCoeffs::new(b, n)
}

/// Outcome of comparing two b-vectors coefficientwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuasiOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl QuasiOrder {
    /// `a ⪯ b`, i.e. Less or Equal.
    pub fn is_le(self) -> bool {
        matches!(self, QuasiOrder::Less | QuasiOrder::Equal)
    }

    pub fn reverse(self) -> Self {
        match self {
            QuasiOrder::Less => QuasiOrder::Greater,
            QuasiOrder::Greater => QuasiOrder::Less,
            other => other,
        }
    }
}

impl fmt::Display for QuasiOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Coefficientwise comparison after padding both sides to the same even vertex count.
pub fn quasi_compare(a: &BCoeffs, b: &BCoeffs) -> Result<QuasiOrder> {
    let na = a.n() + a.n() % 2;
    let nb = b.n() + b.n() % 2;
    if na != nb {
        return Err(Error::OrderMismatch(na, nb));
    }
    let (a, b) = (a.padded_to(na)?, b.padded_to(nb)?);
    let (mut less, mut greater) = (false, false);
    for (x, y) in a.values().iter().zip(b.values()) {
        match x.cmp(y) {
            Ordering::Less => less = true,
            Ordering::Greater => greater = true,
            Ordering::Equal => {}
        }
    }
    Ok(match (less, greater) {
        (false, false) => QuasiOrder::Equal,
        (true, false) => QuasiOrder::Less,
        (false, true) => QuasiOrder::Greater,
        (true, true) => QuasiOrder::Incomparable,
    })
}

/// Number of k-edge matchings. Forests use a rooted dynamic program; other graphs fall back
/// to scanning edge subsets, which is limited to m ≤ 20.
pub fn matching_count(g: &Graph, k: usize) -> Result<BigInt> {
    let all = matching_numbers(g)?;
    Ok(all.get(k).cloned().unwrap_or_default())
}

/// `[m_0, m_1, …, m_{⌊n/2⌋}]` where m_k counts k-edge matchings.
pub fn matching_numbers(g: &Graph) -> Result<Vec<BigInt>> {
    let mut out = if g.is_forest() {
        forest_matchings(g)
    } else if g.m() <= 20 {
        subset_matchings(g)
    } else {
        return Err(Error::OracleOnly(g.m()));
    };
    out.resize(g.n() / 2 + 1, BigInt::zero());
    Ok(out)
}

fn forest_matchings(g: &Graph) -> Vec<BigInt> {
    let n = g.n();
    // free[v]: matchings of T_v leaving v unmatched; all[v]: every matching of T_v.
    let mut free: Vec<Poly> = vec![Vec::new(); n];
    let mut all: Vec<Poly> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut total = one();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let (order, parent) = rooted_order(g, root, &mut seen);
        for &v in order.iter().rev() {
            let mut f = one();
            let mut matched: Poly = Vec::new();
            for &c in g.neighbors(v) {
                if c == parent[v] {
                    continue;
                }
                let mut next_matched = poly_mul(&matched, &all[c]);
                let via_c = shift_up(&poly_mul(&f, &free[c]));
                if next_matched.len() < via_c.len() {
                    next_matched.resize(via_c.len(), BigInt::zero());
                }
                for (x, y) in next_matched.iter_mut().zip(via_c) {
                    *x += y;
                }
                matched = next_matched;
                f = poly_mul(&f, &all[c]);
            }
            let mut a = f.clone();
            if a.len() < matched.len() {
                a.resize(matched.len(), BigInt::zero());
            }
            for (x, y) in a.iter_mut().zip(&matched) {
                *x += y;
            }
            free[v] = f;
            all[v] = a;
        }
        total = poly_mul(&total, &all[root]);
    }
    total
}

fn subset_matchings(g: &Graph) -> Vec<BigInt> {
    // At most 40 vertices touch an edge; index them compactly for a u64 mask.
    let mut touched: Vec<usize> = g.edges().iter().flat_map(|&(u, v)| [u, v]).collect();
    touched.sort_unstable();
    touched.dedup();
    let idx = |v: usize| touched.binary_search(&v).unwrap();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (idx(u), idx(v))).collect();
    let mut counts = vec![0u64; g.n() / 2 + 1];
    'subsets: for mask in 0u32..(1u32 << edges.len()) {
        let mut used = 0u64;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let bits = (1u64 << u) | (1u64 << v);
                if used & bits != 0 {
                    continue 'subsets;
                }
                used |= bits;
            }
        }
        counts[mask.count_ones() as usize] += 1;
    }
    counts.into_iter().map(BigInt::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path_graph, star_graph};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn k3() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn small_polynomials() {
        let k2 = path_graph(2).unwrap();
        assert_eq!(char_poly(&k2).coeffs(), ints(&[1, 0, -1]).as_slice());
        assert_eq!(
            char_poly(&path_graph(3).unwrap()).coeffs(),
            ints(&[1, 0, -2, 0]).as_slice()
        );
        assert_eq!(
            char_poly(&path_graph(4).unwrap()).coeffs(),
            ints(&[1, 0, -3, 0, 1]).as_slice()
        );
        assert_eq!(char_poly(&k3()).coeffs(), ints(&[1, 0, -3, -2]).as_slice());
        assert_eq!(
            char_poly(&Graph::empty(3)).coeffs(),
            ints(&[1, 0, 0, 0]).as_slice()
        );
        assert_eq!(char_poly(&Graph::empty(0)).coeffs(), ints(&[1]).as_slice());
        assert_eq!(
            char_poly(&path_graph(4).unwrap()).to_string(),
            "x^4 - 3x^2 + 1"
        );
    }

    #[test]
    fn forest_and_faddeev_agree() {
        let g =
            Graph::from_edge_list(9, &[(0, 1), (1, 2), (1, 3), (4, 5), (5, 6), (6, 7)]).unwrap();
        assert_eq!(char_poly_forest(&g), char_poly_faddeev_leverrier(&g));
        let s = star_graph(7).unwrap();
        assert_eq!(char_poly_forest(&s), char_poly_faddeev_leverrier(&s));
    }

    #[test]
    fn b_coefficient_examples() {
        let b = b_coefficients(&char_poly(&path_graph(4).unwrap())).unwrap();
        assert_eq!(b.values(), ints(&[1, 3, 1]).as_slice());
        let b = b_coefficients(&char_poly(&star_graph(4).unwrap())).unwrap();
        assert_eq!(b.values(), ints(&[1, 3, 0]).as_slice());
        assert!(matches!(
            b_coefficients(&char_poly(&k3())),
            Err(Error::NotBipartitePolynomial(_))
        ));
        // Odd n: P_3 = x^3 − 2x has b = [1, 2].
        let b = b_coefficients(&char_poly(&path_graph(3).unwrap())).unwrap();
        assert_eq!(b.values(), ints(&[1, 2]).as_slice());
        assert_eq!(
            b.padded_to(4).unwrap().values(),
            ints(&[1, 2, 0]).as_slice()
        );
    }

    #[test]
    fn wrong_sign_is_rejected() {
        let p = CharPoly::from_coeffs(ints(&[1, 0, 2])).unwrap();
        assert!(b_coefficients(&p).is_err());
        assert!(CharPoly::from_coeffs(ints(&[2, 0])).is_err());
    }

    #[test]
    fn matching_examples() {
        assert_eq!(
            matching_count(&path_graph(4).unwrap(), 2).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            matching_count(&star_graph(5).unwrap(), 2).unwrap(),
            BigInt::zero()
        );
        assert_eq!(matching_count(&k3(), 0).unwrap(), BigInt::one());
        assert_eq!(matching_count(&k3(), 1).unwrap(), BigInt::from(3));
        assert_eq!(matching_count(&Graph::empty(4), 0).unwrap(), BigInt::one());
        // K_7 has 21 edges and cycles.
        let pairs: Vec<_> = (0..7)
            .flat_map(|i| (i + 1..7).map(move |j| (i, j)))
            .collect();
        let k7 = Graph::from_edge_list(7, &pairs).unwrap();
        assert_eq!(matching_count(&k7, 1), Err(Error::OracleOnly(21)));
    }

    #[test]
    fn forest_dp_matches_subset_scan() {
        let g = Graph::from_edge_list(
            10,
            &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (6, 7), (7, 8)],
        )
        .unwrap();
        let mut dp = forest_matchings(&g);
        dp.resize(6, BigInt::zero());
        assert_eq!(dp, subset_matchings(&g));
    }

    #[test]
    fn quasi_order_examples() {
        let s4 = b_coefficients(&char_poly(&star_graph(4).unwrap())).unwrap();
        let p4 = b_coefficients(&char_poly(&path_graph(4).unwrap())).unwrap();
        assert_eq!(quasi_compare(&s4, &p4).unwrap(), QuasiOrder::Less);
        assert_eq!(quasi_compare(&p4, &s4).unwrap(), QuasiOrder::Greater);
        assert_eq!(quasi_compare(&p4, &p4).unwrap(), QuasiOrder::Equal);
        let a = BCoeffs::new(ints(&[1, 4, 0]), 4).unwrap();
        let b = BCoeffs::new(ints(&[1, 3, 1]), 4).unwrap();
        assert_eq!(quasi_compare(&a, &b).unwrap(), QuasiOrder::Incomparable);
        // 3 vertices pad to 4; 6 does not.
        let p3 = b_coefficients(&char_poly(&path_graph(3).unwrap())).unwrap();
        assert_eq!(quasi_compare(&p3, &s4).unwrap(), QuasiOrder::Less);
        let p6 = b_coefficients(&char_poly(&path_graph(6).unwrap())).unwrap();
        assert_eq!(quasi_compare(&p3, &p6), Err(Error::OrderMismatch(4, 6)));
    }

    #[test]
    fn json_uses_decimal_strings() {
        let p = char_poly(&path_graph(4).unwrap());
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1","0","-3","0","1"]"#);
        let back: CharPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let big = CharPoly::from_coeffs(vec![
            BigInt::one(),
            "123456789012345678901234567890".parse().unwrap(),
        ])
        .unwrap();
        let back: CharPoly = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_b(len: usize) -> impl Strategy<Value = BCoeffs> {
            proptest::collection::vec(0i64..4, len - 1).prop_map(move |rest| {
                let mut v = vec![BigInt::one()];
                v.extend(rest.into_iter().map(BigInt::from));
                BCoeffs::new(v, 2 * (len - 1)).unwrap()
            })
        }

        proptest! {
            #[test]
            fn antisymmetric(a in arb_b(4), b in arb_b(4)) {
                let ab = quasi_compare(&a, &b).unwrap();
                let ba = quasi_compare(&b, &a).unwrap();
                prop_assert_eq!(ab, ba.reverse());
                if ab.is_le() && ba.is_le() {
                    prop_assert_eq!(a, b);
                }
            }

            #[test]
            fn transitive(a in arb_b(4), b in arb_b(4), c in arb_b(4)) {
                if quasi_compare(&a, &b).unwrap().is_le() && quasi_compare(&b, &c).unwrap().is_le() {
                    prop_assert!(quasi_compare(&a, &c).unwrap().is_le());
                }
            }

            #[test]
            fn low_coefficients(n in 1usize..25, pairs in proptest::collection::vec((0usize..25, 0usize..25), 0..60)) {
                let pairs: Vec<_> = pairs.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
                let g = Graph::from_edge_list(n, &pairs).unwrap();
                let p = char_poly(&g);
                prop_assert_eq!(&p.coeffs()[0], &BigInt::one());
                if n >= 1 {
                    prop_assert!(p.coeffs()[1].is_zero());
                }
                if n >= 2 {
                    prop_assert_eq!(-p.coeffs()[2].clone(), BigInt::from(g.m()));
                }
            }
        }
    }
}
