//! The space `P(U)` for `U = C^m (x) C^n`: polynomial algebra for
//! `theta = +1`, Grassmann algebra for `theta = -1`. Multidegree components,
//! generator actions, the Howe homomorphism `zeta` as explicit matrices, and
//! the symmetric bilinear form.
//!
//! One global generator order `x_{11} < x_{12} < .. < x_{1n} < x_{21} < ..`
//! fixes every Grassmann sign in the crate: left multiplication or left
//! derivation by a generator picks up `(-1)^k` where `k` is the number of
//! generators present that precede it in this order.

use crate::exact::{rat, rat_int, Mat, QMat, Rat};
use crate::roots::{signed_index, KindTag, LieElt, LieKind, RootDatum, Weight};
use num::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Monomial exponents, flattened block-major: entry `a*n + i` is the
/// exponent of `x_{a+1, i+1}`. For `theta = -1` every exponent is 0 or 1.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

/// Block degrees `nu_1 .. nu_m`.
pub type MultiDegree = Vec<usize>;

#[derive(Clone, Debug)]
pub struct FockComponent {
    pub nu: MultiDegree,
    pub basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl FockComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, mono: &Monomial) -> Option<usize> {
        self.index.get(mono).copied()
    }
}

/// Generator of the Weyl/Clifford algebra: `X(a, i)` is left multiplication
/// by `x_{a+1, i+1}`, `D(a, i)` the corresponding left derivation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    X(usize, usize),
    D(usize, usize),
}

/// Operator of the form `constant + sum c * g_1 .. g_k` with each `g_j` a
/// generator; the generator list is written in operator order, so the last
/// entry acts first.
#[derive(Clone, Debug)]
pub struct HeisOp {
    pub constant: Rat,
    pub terms: Vec<(Rat, Vec<Gen>)>,
}

impl HeisOp {
    pub fn zero() -> Self {
        HeisOp { constant: Rat::zero(), terms: Vec::new() }
    }
}

/// Matrix of an operator between two multidegree components.
#[derive(Clone, Debug)]
pub struct FockOperator {
    pub source: MultiDegree,
    pub target: MultiDegree,
    pub matrix: QMat,
}

/// The Fock space `P(C^m (x) C^n)` with its component cache.
pub struct FockSpace {
    pub theta: i8,
    pub m: usize,
    pub n: usize,
    cache: Mutex<HashMap<MultiDegree, Arc<FockComponent>>>,
}

/// Exponent rows of total degree `k` in `n` slots, lexicographically
/// ascending; entries capped at 1 when `theta = -1`.
pub fn power_rows(theta: i8, n: usize, k: usize) -> Vec<Vec<u32>> {
    let cap = if theta == -1 { 1 } else { k };
    let mut out = Vec::new();
    let mut row = vec![0u32; n];
    fn rec(row: &mut Vec<u32>, pos: usize, left: usize, cap: usize, out: &mut Vec<Vec<u32>>) {
        if pos == row.len() {
            if left == 0 {
                out.push(row.clone());
            }
            return;
        }
        let max_here = cap.min(left);
        for e in 0..=max_here {
            row[pos] = e as u32;
            rec(row, pos + 1, left - e, cap, out);
        }
        row[pos] = 0;
    }
    rec(&mut row, 0, k, cap, &mut out);
    out
}

/// Dimension of one block: `C(n, k)` for Grassmann, `C(n+k-1, k)` for
/// polynomial variables.
pub fn block_dim(theta: i8, n: usize, k: usize) -> usize {
    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut acc = 1usize;
        for j in 0..k.min(n - k) {
            acc = acc * (n - j) / (j + 1);
        }
        acc
    }
    if theta == -1 {
        binom(n, k)
    } else {
        binom(n + k - 1, k)
    }
}

impl FockSpace {
    pub fn new(theta: i8, m: usize, n: usize) -> Self {
        assert!(theta == 1 || theta == -1);
        assert!(m >= 1 && n >= 1);
        FockSpace { theta, m, n, cache: Mutex::new(HashMap::new()) }
    }

    pub fn for_datum(datum: &RootDatum) -> Self {
        FockSpace::new(datum.theta, datum.kind.m, datum.n)
    }

    /// The component of multidegree `nu`, built lazily and cached.
    /// Components that violate the Grassmann cap are empty, not an error.
    pub fn component(&self, nu: &[usize]) -> Arc<FockComponent> {
        assert_eq!(nu.len(), self.m);
        let mut cache = self.cache.lock().unwrap();
        if let Some(c) = cache.get(nu) {
            return Arc::clone(c);
        }
        let mut basis = Vec::new();
        if self.theta == 1 || nu.iter().all(|&k| k <= self.n) {
            let block_rows: Vec<Vec<Vec<u32>>> =
                nu.iter().map(|&k| power_rows(self.theta, self.n, k)).collect();
            let mut current: Vec<Vec<u32>> = vec![vec![]];
            for rows in &block_rows {
                let mut next = Vec::with_capacity(current.len() * rows.len());
                for prefix in &current {
                    for row in rows {
                        let mut e = prefix.clone();
                        e.extend_from_slice(row);
                        next.push(e);
                    }
                }
                current = next;
            }
            basis = current.into_iter().map(|exps| Monomial { exps }).collect();
        }
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let comp = Arc::new(FockComponent { nu: nu.to_vec(), basis, index });
        cache.insert(nu.to_vec(), Arc::clone(&comp));
        comp
    }

    /// Applies a single generator to a basis monomial. Returns `None` when
    /// the result is zero (Grassmann square, or derivation of an absent
    /// variable).
    pub fn apply_gen(&self, gen: Gen, mono: &Monomial) -> Option<(Rat, Monomial)> {
        let pos = match gen {
            Gen::X(a, i) | Gen::D(a, i) => {
                assert!(a < self.m && i < self.n);
                a * self.n + i
            }
        };
        let mut exps = mono.exps.clone();
        match (gen, self.theta) {
            (Gen::X(..), -1) => {
                if exps[pos] == 1 {
                    return None;
                }
                let sign = grassmann_sign(&exps, pos);
                exps[pos] = 1;
                Some((sign, Monomial { exps }))
            }
            (Gen::D(..), -1) => {
                if exps[pos] == 0 {
                    return None;
                }
                let sign = grassmann_sign(&exps, pos);
                exps[pos] = 0;
                Some((sign, Monomial { exps }))
            }
            (Gen::X(..), _) => {
                exps[pos] += 1;
                Some((Rat::one(), Monomial { exps }))
            }
            (Gen::D(..), _) => {
                if exps[pos] == 0 {
                    return None;
                }
                let mult = rat_int(exps[pos] as i64);
                exps[pos] -= 1;
                Some((mult, Monomial { exps }))
            }
        }
    }

    /// Multidegree shift effected by one generator.
    fn gen_shift(gen: Gen, shift: &mut [i64]) {
        match gen {
            Gen::X(a, _) => shift[a] += 1,
            Gen::D(a, _) => shift[a] -= 1,
        }
    }

    /// Left multiplication by `x_{a,i}` or left derivation by `d_{a,i}` of a
    /// component vector; returns the shifted multidegree and the image
    /// coordinates (empty target allowed).
    pub fn multiply_generator(
        &self,
        gen: Gen,
        nu: &[usize],
        v: &[Rat],
    ) -> (Option<MultiDegree>, Vec<Rat>) {
        let mut shift = vec![0i64; self.m];
        Self::gen_shift(gen, &mut shift);
        let target = shift_degree(nu, &shift);
        let src = self.component(nu);
        assert_eq!(v.len(), src.dim());
        let tgt = match &target {
            Some(t) => self.component(t),
            None => return (None, Vec::new()),
        };
        let mut out = vec![Rat::zero(); tgt.dim()];
        for (idx, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if let Some((c, mono)) = self.apply_gen(gen, &src.basis[idx]) {
                if let Some(j) = tgt.index_of(&mono) {
                    out[j] += c * coeff;
                }
            }
        }
        (target, out)
    }

    /// Matrix of a `HeisOp` restricted to the component of degree `nu`.
    /// Every term must shift the multidegree by the same amount.
    pub fn op_matrix(&self, op: &HeisOp, nu: &[usize]) -> FockOperator {
        let src = self.component(nu);
        let mut common_shift: Option<Vec<i64>> = if op.constant.is_zero() && !op.terms.is_empty() {
            None
        } else {
            Some(vec![0i64; self.m])
        };
        for (_, gens) in &op.terms {
            let mut s = vec![0i64; self.m];
            for &g in gens {
                Self::gen_shift(g, &mut s);
            }
            match &common_shift {
                None => common_shift = Some(s),
                Some(c) => assert_eq!(*c, s, "operator mixes multidegree shifts"),
            }
        }
        let shift = common_shift.unwrap_or_else(|| vec![0i64; self.m]);
        let target = shift_degree(nu, &shift);
        let tgt_dim = match &target {
            Some(t) => self.component(t).dim(),
            None => 0,
        };
        let mut matrix = Mat::zero(tgt_dim, src.dim());
        if tgt_dim == 0 {
            return FockOperator {
                source: nu.to_vec(),
                target: target.unwrap_or_default(),
                matrix,
            };
        }
        let target = target.unwrap();
        let tgt = self.component(&target);
        for (col, mono) in src.basis.iter().enumerate() {
            if !op.constant.is_zero() {
                let row = tgt.index_of(mono).expect("zero-shift term must stay in component");
                *matrix.at_mut(row, col) = matrix.at(row, col) + op.constant.clone();
            }
            for (c, gens) in &op.terms {
                let mut acc: Option<(Rat, Monomial)> = Some((c.clone(), mono.clone()));
                for g in gens.iter().rev() {
                    acc = match acc {
                        Some((coeff, m)) => self
                            .apply_gen(*g, &m)
                            .map(|(c2, m2)| (coeff * c2, m2)),
                        None => None,
                    };
                }
                if let Some((coeff, m)) = acc {
                    let row = tgt.index_of(&m).expect("image escaped target component");
                    *matrix.at_mut(row, col) = matrix.at(row, col) + coeff;
                }
            }
        }
        FockOperator { source: nu.to_vec(), target, matrix }
    }

    /// Gram matrix of the symmetric bilinear form on a component: identity
    /// for Grassmann variables, diagonal of factorials otherwise.
    pub fn inner_gram(&self, nu: &[usize]) -> QMat {
        let comp = self.component(nu);
        let d = comp.dim();
        let mut g = Mat::zero(d, d);
        for (i, mono) in comp.basis.iter().enumerate() {
            let mut val = Rat::one();
            if self.theta == 1 {
                for &e in &mono.exps {
                    for f in 1..=e as i64 {
                        val = val * rat_int(f);
                    }
                }
            }
            *g.at_mut(i, i) = val;
        }
        g
    }

    /// All multidegrees of the full Grassmann Fock space (`theta = -1`),
    /// lexicographically ordered.
    pub fn all_multidegrees(&self) -> Vec<MultiDegree> {
        assert_eq!(self.theta, -1, "full space is finite only for theta = -1");
        let mut out = vec![vec![]];
        for _ in 0..self.m {
            let mut next = Vec::new();
            for prefix in &out {
                for k in 0..=self.n {
                    let mut p = prefix.clone();
                    p.push(k);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }
}

fn shift_degree(nu: &[usize], shift: &[i64]) -> Option<MultiDegree> {
    nu.iter()
        .zip(shift)
        .map(|(&k, &s)| {
            let v = k as i64 + s;
            if v < 0 {
                None
            } else {
                Some(v as usize)
            }
        })
        .collect()
}

/// `(-1)^k` with `k` the number of generators present strictly before `pos`
/// in the global order.
fn grassmann_sign(exps: &[u32], pos: usize) -> Rat {
    let k: u32 = exps[..pos].iter().sum();
    if k % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Bar involution on `1..=n`: pairs `(1,2), (3,4), ..`; fixes `n` when `n`
/// is odd.
pub fn bar_index(i: usize, n: usize) -> usize {
    if i % 2 == 0 {
        i - 1
    } else if i < n {
        i + 1
    } else {
        i
    }
}

/// Sign `theta_i` of the bilinear form of the dual group determined by the
/// pair `(kind of G, theta)`: all ones for an orthogonal dual group,
/// `(-1)^{i-1}` for a symplectic one.
pub fn dual_theta_sign(gtag: KindTag, theta: i8, i: usize) -> i8 {
    let symplectic_dual = match gtag {
        KindTag::Gl => false,
        KindTag::Sp => theta == -1,
        KindTag::So => theta == 1,
    };
    if symplectic_dual && i % 2 == 0 {
        -1
    } else {
        1
    }
}

/// The index sequence `1, 3, .., n, .., 4, 2` (odds ascending, then evens
/// descending) that orders the Borel subalgebra of the dual group.
pub fn corder(n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (1..=n).filter(|i| i % 2 == 1).collect();
    let mut evens: Vec<usize> = (1..=n).filter(|i| i % 2 == 0).collect();
    evens.reverse();
    v.extend(evens);
    v
}

/// The Howe homomorphism applied to a Lie element, as a sum of one- and
/// two-generator terms.
pub fn zeta_op(datum: &RootDatum, x: &LieElt) -> HeisOp {
    assert_eq!(datum.kind, x.kind);
    let n = datum.n;
    let theta = datum.theta;
    let th = rat_int(theta as i64);
    let mut op = HeisOp::zero();
    match datum.kind.tag {
        KindTag::Gl => {
            let m = datum.kind.m;
            for a in 0..m {
                for b in 0..m {
                    let c = x.mat.at(a, b);
                    if c.is_zero() {
                        continue;
                    }
                    for i in 0..n {
                        op.terms.push((c.clone(), vec![Gen::X(a, i), Gen::D(b, i)]));
                    }
                }
            }
        }
        _ => {
            let m = datum.kind.m;
            let half = rat(1, 2);
            let signed: Vec<i64> = (1..=m as i64).flat_map(|a| [-a, a]).collect();
            for &a in &signed {
                for &b in &signed {
                    let c = x.mat.at(signed_index(a, m), signed_index(b, m)).clone();
                    if c.is_zero() {
                        continue;
                    }
                    let c = c * half.clone();
                    add_zeta_f(&mut op, datum, a, b, &c, &th);
                }
            }
        }
    }
    op
}

/// Adds `c * zeta(F_ab)` (signed indices) to the operator.
fn add_zeta_f(op: &mut HeisOp, datum: &RootDatum, a: i64, b: i64, c: &Rat, th: &Rat) {
    let n = datum.n;
    match (a > 0, b > 0) {
        (true, true) => {
            let (a, b) = (a as usize - 1, b as usize - 1);
            if a == b {
                op.constant += c * th * rat(n as i64, 2);
            }
            for i in 0..n {
                op.terms.push((c.clone(), vec![Gen::X(a, i), Gen::D(b, i)]));
            }
        }
        (true, false) => {
            // zeta(F_{a,-b'}) = - sum_i theta theta_i x_{a, bar i} x_{b', i}
            let (a, bp) = (a as usize - 1, (-b) as usize - 1);
            for i in 1..=n {
                let ti = dual_theta_sign(datum.kind.tag, datum.theta, i);
                let coeff = -(c * th) * rat_int(ti as i64);
                op.terms.push((
                    coeff,
                    vec![Gen::X(a, bar_index(i, n) - 1), Gen::X(bp, i - 1)],
                ));
            }
        }
        (false, true) => {
            // zeta(F_{-a',b}) = sum_i theta_i d_{a',i} d_{b, bar i}
            let (ap, b) = ((-a) as usize - 1, b as usize - 1);
            for i in 1..=n {
                let ti = dual_theta_sign(datum.kind.tag, datum.theta, i);
                let coeff = c * rat_int(ti as i64);
                op.terms.push((
                    coeff,
                    vec![Gen::D(ap, i - 1), Gen::D(b, bar_index(i, n) - 1)],
                ));
            }
        }
        (false, false) => {
            // F_{-a',-b'} = -F_{b',a'} with both indices positive.
            add_zeta_f(op, datum, -b, -a, &-c.clone(), th);
        }
    }
}

/// Matrix of `zeta(X)` on the degree-`nu` component.
pub fn zeta_matrix(space: &FockSpace, datum: &RootDatum, x: &LieElt, nu: &[usize]) -> FockOperator {
    let op = zeta_op(datum, x);
    space.op_matrix(&op, nu)
}

/// The module weight of the degree-`nu` component in label coordinates:
/// `kappa + nu`.
pub fn zeta_weight(datum: &RootDatum, nu: &[usize]) -> Weight {
    Weight::new(
        datum
            .kappa
            .labels
            .iter()
            .zip(nu)
            .map(|(k, &d)| k + rat_int(d as i64))
            .collect(),
    )
}

/// Chevalley anti-involution on a Lie element: transpose for gl;
/// `F_ab -> sgn(ab) F_ba` (theta = 1) or `F_ab -> F_ba` (theta = -1).
pub fn epsilon(datum: &RootDatum, x: &LieElt) -> LieElt {
    match datum.kind.tag {
        KindTag::Gl => LieElt { kind: x.kind, mat: x.mat.transpose() },
        _ => {
            let m = datum.kind.m;
            let signed: Vec<i64> = (1..=m as i64).flat_map(|a| [-a, a]).collect();
            let mut acc = LieElt::zero(x.kind);
            for &a in &signed {
                for &b in &signed {
                    let c = x.mat.at(signed_index(a, m), signed_index(b, m)).clone();
                    if c.is_zero() {
                        continue;
                    }
                    let sgn = if datum.theta == 1 && (a > 0) != (b > 0) {
                        -Rat::one()
                    } else {
                        Rat::one()
                    };
                    let f_ba = crate::roots::f_unit(b, a, x.kind);
                    acc = acc.add(&f_ba.scale(&(c * sgn * rat(1, 2))));
                }
            }
            acc
        }
    }
}

/// Verifies the adjunction `<zeta(X) u, v> = <u, zeta(eps(X)) v>` as a
/// matrix identity on the degree-`nu` component (source side).
pub fn epsilon_adjoint_check(
    space: &FockSpace,
    datum: &RootDatum,
    x: &LieElt,
    nu: &[usize],
) -> bool {
    let m_x = zeta_matrix(space, datum, x, nu);
    if m_x.matrix.rows() == 0 {
        return true;
    }
    let eps_x = epsilon(datum, x);
    let m_eps = zeta_matrix(space, datum, &eps_x, &m_x.target);
    if m_eps.target != *nu {
        return false;
    }
    let g_src = space.inner_gram(nu);
    let g_tgt = space.inner_gram(&m_x.target);
    m_x.matrix.transpose() * g_tgt == g_src * m_eps.matrix
}

/// Which highest monomial family to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HighestKind {
    /// `phi_k`: first `k` indices in natural order (`f_1^k` for theta = 1).
    Gl,
    /// `psi_k`: first `k` indices of the precedence order of the twisted
    /// Borel subalgebra.
    Twisted,
}

/// The highest monomial of a component together with the Grassmann sign
/// relating the ordered tensor-factor product to the sorted basis monomial.
pub fn highest_monomial(
    space: &FockSpace,
    kind: HighestKind,
    nu: &[usize],
) -> (Rat, Monomial) {
    let n = space.n;
    let mut exps = vec![0u32; space.m * n];
    let mut sign = Rat::one();
    for (a, &k) in nu.iter().enumerate() {
        match (space.theta, kind) {
            (1, _) => {
                exps[a * n] = k as u32;
            }
            (_, HighestKind::Gl) => {
                assert!(k <= n);
                for i in 0..k {
                    exps[a * n + i] = 1;
                }
            }
            (_, HighestKind::Twisted) => {
                assert!(k <= n);
                let order = corder(n);
                let prefix: Vec<usize> = order[..k].to_vec();
                // Sign of the permutation sorting the prefix ascending.
                let mut inversions = 0usize;
                for p in 0..prefix.len() {
                    for q in (p + 1)..prefix.len() {
                        if prefix[p] > prefix[q] {
                            inversions += 1;
                        }
                    }
                }
                if inversions % 2 == 1 {
                    sign = -sign;
                }
                for &i in &prefix {
                    exps[a * n + i - 1] = 1;
                }
            }
        }
    }
    (sign, Monomial { exps })
}

/// Highest monomial as a signed coordinate vector in its component.
pub fn highest_vector(space: &FockSpace, kind: HighestKind, nu: &[usize]) -> Vec<Rat> {
    let (sign, mono) = highest_monomial(space, kind, nu);
    let comp = space.component(nu);
    let mut v = vec![Rat::zero(); comp.dim()];
    let idx = comp.index_of(&mono).expect("highest monomial not in component");
    v[idx] = sign;
    v
}
