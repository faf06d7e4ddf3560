//! Root systems, weights, Weyl and extended Weyl groups for the classical
//! types `gl_m`, `sp_2m`, `so_2m`.
//!
//! Weights are handled in two coordinate systems. User-facing *labels*
//! `(w_1, .., w_m)` are the values on the basis elements `E_aa` (type gl) or
//! `F_aa` (types sp/so) of the Cartan subalgebra. Internally most root
//! arithmetic happens in *eta coordinates*, the basis dual to the standard
//! torus; for gl the two agree, for sp/so the conversion is
//! `eta_a = -label_{m+1-a}`.

use crate::exact::{rat, rat_int, Mat, QMat, Rat};
use num::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum KindTag {
    Gl,
    Sp,
    So,
}

/// Classical type: `Gl` is `gl_m`, `Sp` is `sp_2m`, `So` is `so_2m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct LieKind {
    pub tag: KindTag,
    pub m: usize,
}

impl LieKind {
    pub fn gl(m: usize) -> Self {
        LieKind { tag: KindTag::Gl, m }
    }
    pub fn sp(m: usize) -> Self {
        LieKind { tag: KindTag::Sp, m }
    }
    pub fn so(m: usize) -> Self {
        LieKind { tag: KindTag::So, m }
    }

    /// Dimension of the defining representation.
    pub fn defining_dim(&self) -> usize {
        match self.tag {
            KindTag::Gl => self.m,
            _ => 2 * self.m,
        }
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        match self.tag {
            KindTag::Gl => self.m - 1,
            KindTag::Sp => self.m,
            KindTag::So => {
                if self.m > 1 {
                    self.m
                } else {
                    0
                }
            }
        }
    }
}

impl fmt::Display for LieKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            KindTag::Gl => write!(f, "gl_{}", self.m),
            KindTag::Sp => write!(f, "sp_{}", 2 * self.m),
            KindTag::So => write!(f, "so_{}", 2 * self.m),
        }
    }
}

/// Weight given by its label sequence `w_1 .. w_m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    pub labels: Vec<Rat>,
}

impl Weight {
    pub fn new(labels: Vec<Rat>) -> Self {
        Weight { labels }
    }

    pub fn zero(m: usize) -> Self {
        Weight { labels: vec![Rat::zero(); m] }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.labels
                .iter()
                .zip(&other.labels)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(
            self.labels
                .iter()
                .zip(&other.labels)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn to_eta(&self, kind: LieKind) -> Vec<Rat> {
        let m = kind.m;
        assert_eq!(self.labels.len(), m, "label length must equal m");
        match kind.tag {
            KindTag::Gl => self.labels.clone(),
            _ => (0..m).map(|a| -self.labels[m - 1 - a].clone()).collect(),
        }
    }

    pub fn from_eta(kind: LieKind, eta: &[Rat]) -> Self {
        let m = kind.m;
        match kind.tag {
            KindTag::Gl => Weight::new(eta.to_vec()),
            _ => Weight::new((0..m).map(|a| -eta[m - 1 - a].clone()).collect()),
        }
    }
}

/// Positive root in eta coordinates; indices are 1-based and `a < b` where
/// two indices appear.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Root {
    /// `eta_a - eta_b`
    Diff(usize, usize),
    /// `eta_a + eta_b`
    Sum(usize, usize),
    /// `2 eta_a`
    Two(usize),
}

impl Root {
    /// The root as an integer vector in eta coordinates.
    pub fn to_vec(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0i64; m];
        match *self {
            Root::Diff(a, b) => {
                v[a - 1] = 1;
                v[b - 1] = -1;
            }
            Root::Sum(a, b) => {
                v[a - 1] = 1;
                v[b - 1] = 1;
            }
            Root::Two(a) => v[a - 1] = 2,
        }
        v
    }

    pub fn from_vec(v: &[i64]) -> Option<Root> {
        let nz: Vec<(usize, i64)> = v
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i + 1, x))
            .collect();
        match nz.as_slice() {
            [(a, 2)] => Some(Root::Two(*a)),
            [(a, 1), (b, -1)] => Some(Root::Diff(*a, *b)),
            [(a, 1), (b, 1)] => Some(Root::Sum(*a, *b)),
            _ => None,
        }
    }

    /// Pairing `w(H_alpha)` of a weight in eta coordinates with the coroot.
    pub fn pair_eta(&self, eta: &[Rat]) -> Rat {
        match *self {
            Root::Diff(a, b) => &eta[a - 1] - &eta[b - 1],
            Root::Sum(a, b) => &eta[a - 1] + &eta[b - 1],
            Root::Two(a) => eta[a - 1].clone(),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff(a, b) => write!(f, "e{}-e{}", a, b),
            Root::Sum(a, b) => write!(f, "e{}+e{}", a, b),
            Root::Two(a) => write!(f, "2e{}", a),
        }
    }
}

/// Signed permutation of `{-m..-1, 1..m}`; `imgs[a-1]` is the image of `+a`.
/// Plain permutations (all images positive) represent Weyl elements of gl.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct SignedPerm {
    pub imgs: Vec<i64>,
}

impl SignedPerm {
    pub fn identity(m: usize) -> Self {
        SignedPerm { imgs: (1..=m as i64).collect() }
    }

    pub fn m(&self) -> usize {
        self.imgs.len()
    }

    pub fn is_bijection(&self) -> bool {
        let m = self.m();
        let mut seen = vec![false; m];
        for &x in &self.imgs {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > m || seen[a - 1] {
                return false;
            }
            seen[a - 1] = true;
        }
        true
    }

    /// Composition acting on the left: `(self * other)(a) = self(other(a))`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let imgs = other
            .imgs
            .iter()
            .map(|&x| {
                let y = self.imgs[x.unsigned_abs() as usize - 1];
                if x < 0 {
                    -y
                } else {
                    y
                }
            })
            .collect();
        SignedPerm { imgs }
    }

    pub fn inverse(&self) -> SignedPerm {
        let m = self.m();
        let mut imgs = vec![0i64; m];
        for (a, &x) in self.imgs.iter().enumerate() {
            let b = x.unsigned_abs() as usize;
            imgs[b - 1] = if x < 0 { -((a + 1) as i64) } else { (a + 1) as i64 };
        }
        SignedPerm { imgs }
    }

    /// Number of sign flips (for membership in the type-D Weyl group).
    pub fn flips(&self) -> usize {
        self.imgs.iter().filter(|&&x| x < 0).count()
    }

    /// Action on a weight in eta coordinates: `eta_a -> sgn * eta_{|img a|}`.
    pub fn act_eta(&self, eta: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); eta.len()];
        for (a, &x) in self.imgs.iter().enumerate() {
            let b = x.unsigned_abs() as usize - 1;
            out[b] = if x < 0 { -eta[a].clone() } else { eta[a].clone() };
        }
        out
    }

    pub fn act_vec(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; v.len()];
        for (a, &x) in self.imgs.iter().enumerate() {
            let b = x.unsigned_abs() as usize - 1;
            out[b] = if x < 0 { -v[a] } else { v[a] };
        }
        out
    }
}

/// Reduced word in the simple reflections, 1-based indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedWord(pub Vec<usize>);

#[derive(Debug, Clone, PartialEq)]
pub enum RootError {
    /// `m = 0` or an index out of range.
    BadRank(String),
    /// A word that is not reduced (detected by a repeated or negative root
    /// in its normal ordering).
    NotReduced(ReducedWord),
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::BadRank(s) => write!(f, "bad root datum: {}", s),
            RootError::NotReduced(w) => write!(f, "word {:?} is not reduced", w.0),
        }
    }
}

/// Root datum for one of the classical types, bound to the Howe-system
/// parameters `theta` and `n` which fix the weight `kappa`.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub kind: LieKind,
    pub theta: i8,
    pub n: usize,
    pub positive_roots: Vec<Root>,
    /// The compact positive roots `eta_a - eta_b` only.
    pub compact_positive_roots: Vec<Root>,
    pub simple_roots: Vec<Root>,
    pub rho: Weight,
    pub kappa: Weight,
}

/// Builds the full root datum. `theta` is +1 (polynomial) or -1 (Grassmann)
/// and `n` is the rank of the dual group; they enter only through `kappa`.
pub fn build_root_datum(kind: LieKind, theta: i8, n: usize) -> Result<RootDatum, RootError> {
    if kind.m == 0 {
        return Err(RootError::BadRank("m must be positive".into()));
    }
    assert!(theta == 1 || theta == -1);
    let m = kind.m;
    let mut positive_roots = Vec::new();
    let mut compact = Vec::new();
    for a in 1..=m {
        for b in (a + 1)..=m {
            positive_roots.push(Root::Diff(a, b));
            compact.push(Root::Diff(a, b));
        }
    }
    match kind.tag {
        KindTag::Gl => {}
        KindTag::Sp => {
            for a in 1..=m {
                for b in (a + 1)..=m {
                    positive_roots.push(Root::Sum(a, b));
                }
            }
            for a in 1..=m {
                positive_roots.push(Root::Two(a));
            }
        }
        KindTag::So => {
            for a in 1..=m {
                for b in (a + 1)..=m {
                    positive_roots.push(Root::Sum(a, b));
                }
            }
        }
    }
    let simple_roots = match kind.tag {
        KindTag::Gl => (1..m).map(|c| Root::Diff(c, c + 1)).collect(),
        KindTag::Sp => {
            let mut s: Vec<Root> = (1..m).map(|c| Root::Diff(c, c + 1)).collect();
            s.push(Root::Two(m));
            s
        }
        KindTag::So => {
            if m > 1 {
                let mut s: Vec<Root> = (1..m).map(|c| Root::Diff(c, c + 1)).collect();
                s.push(Root::Sum(m - 1, m));
                s
            } else {
                Vec::new()
            }
        }
    };
    // Label coordinates: gl has rho_a = m/2 - a + 1/2; sp has -a; so has 1 - a.
    let rho = Weight::new(
        (1..=m as i64)
            .map(|a| match kind.tag {
                KindTag::Gl => rat(m as i64, 2) - rat_int(a) + rat(1, 2),
                KindTag::Sp => rat_int(-a),
                KindTag::So => rat_int(1 - a),
            })
            .collect(),
    );
    let kappa = Weight::new(match kind.tag {
        KindTag::Gl => vec![Rat::zero(); m],
        _ => vec![rat(theta as i64 * n as i64, 2); m],
    });
    Ok(RootDatum {
        kind,
        theta,
        n,
        positive_roots,
        compact_positive_roots: compact,
        simple_roots,
        rho,
        kappa,
    })
}

impl RootDatum {
    /// Simple reflection `s_c` (1-based) as a signed permutation.
    pub fn simple_reflection(&self, c: usize) -> SignedPerm {
        let m = self.kind.m;
        assert!(c >= 1 && c <= self.kind.rank(), "simple reflection index out of range");
        let mut p = SignedPerm::identity(m);
        match self.kind.tag {
            KindTag::Gl => p.imgs.swap(c - 1, c),
            KindTag::Sp => {
                if c < m {
                    p.imgs.swap(c - 1, c);
                } else {
                    p.imgs[m - 1] = -(m as i64);
                }
            }
            KindTag::So => {
                if c < m {
                    p.imgs.swap(c - 1, c);
                } else {
                    p.imgs[m - 2] = -(m as i64);
                    p.imgs[m - 1] = -((m - 1) as i64);
                }
            }
        }
        p
    }

    /// The diagram involution `tau_m` for so_2m (flips the sign of eta_m).
    pub fn tau(&self) -> SignedPerm {
        assert_eq!(self.kind.tag, KindTag::So);
        let mut p = SignedPerm::identity(self.kind.m);
        p.imgs[self.kind.m - 1] = -(self.kind.m as i64);
        p
    }

    pub fn word_to_perm(&self, word: &ReducedWord) -> SignedPerm {
        let mut p = SignedPerm::identity(self.kind.m);
        // Word (d_1..d_l) denotes the product s_{d_l} ... s_{d_1}.
        for &d in &word.0 {
            p = self.simple_reflection(d).compose(&p);
        }
        p
    }

    /// Coxeter length: the number of positive roots sent to negatives.
    pub fn length(&self, p: &SignedPerm) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| !is_positive_vec(&p.act_vec(&r.to_vec(self.kind.m))))
            .count()
    }

    /// Shifted action of a (possibly extended) Weyl element on a weight in
    /// label coordinates: `sigma o lam = sigma(lam + rho) - rho`.
    pub fn shifted_action(&self, sigma: &SignedPerm, lam: &Weight) -> Weight {
        let eta = lam.add(&self.rho).to_eta(self.kind);
        let moved = sigma.act_eta(&eta);
        Weight::from_eta(self.kind, &moved).sub(&self.rho)
    }

    /// True iff `(lam + rho)(H_alpha)` avoids `{-1, -2, ...}` for every
    /// positive root.
    pub fn is_nonsingular(&self, lam: &Weight) -> bool {
        let eta = lam.add(&self.rho).to_eta(self.kind);
        self.positive_roots.iter().all(|r| {
            let v = r.pair_eta(&eta);
            !(v.is_integer() && v.is_negative())
        })
    }

    /// Normal ordering of positive roots attached to a reduced word:
    /// `beta_k = s_{d_1} .. s_{d_{k-1}} (alpha_{d_k})`.
    pub fn normal_ordering(&self, word: &ReducedWord) -> Result<Vec<Root>, RootError> {
        let m = self.kind.m;
        let mut prefix = SignedPerm::identity(m);
        let mut out: Vec<Root> = Vec::new();
        for (k, &d) in word.0.iter().enumerate() {
            if d < 1 || d > self.kind.rank() {
                return Err(RootError::BadRank(format!("simple index {} out of range", d)));
            }
            let alpha = self.simple_roots[d - 1];
            let beta_vec = prefix.act_vec(&alpha.to_vec(m));
            if !is_positive_vec(&beta_vec) {
                return Err(RootError::NotReduced(word.clone()));
            }
            let beta = Root::from_vec(&beta_vec)
                .ok_or_else(|| RootError::NotReduced(word.clone()))?;
            if out.contains(&beta) {
                return Err(RootError::NotReduced(word.clone()));
            }
            out.push(beta);
            if k + 1 < word.0.len() {
                prefix = prefix.compose(&self.simple_reflection(d));
            }
        }
        Ok(out)
    }

    /// A fixed reduced word for the longest Weyl element, produced by the
    /// greedy ascent: repeatedly append the first simple reflection that
    /// increases the length.
    pub fn longest_word(&self) -> ReducedWord {
        let r = self.kind.rank();
        let m = self.kind.m;
        let mut sigma = SignedPerm::identity(m);
        let mut letters = Vec::new();
        'outer: loop {
            for c in 1..=r {
                let alpha = self.simple_roots[c - 1].to_vec(m);
                if is_positive_vec(&sigma.act_vec(&alpha)) {
                    letters.push(c);
                    sigma = sigma.compose(&self.simple_reflection(c));
                    continue 'outer;
                }
            }
            break;
        }
        // letters gives sigma_0 = s_{c_1} s_{c_2} .. as a left-to-right
        // product; our word convention is sigma = s_{d_l} .. s_{d_1}.
        letters.reverse();
        ReducedWord(letters)
    }

    /// For so_2m: true iff every extended-Weyl element fixing `lam` under the
    /// shifted action already lies in the Weyl subgroup (even sign flips).
    /// For gl and sp the extended group equals the Weyl group.
    pub fn extended_stabilizer_equal(&self, lam: &Weight) -> bool {
        if self.kind.tag != KindTag::So {
            return true;
        }
        let m = self.kind.m;
        let target = lam.add(&self.rho).to_eta(self.kind);
        for p in all_signed_perms(m) {
            if p.flips() % 2 == 0 {
                continue;
            }
            if p.act_eta(&target) == target {
                return false;
            }
        }
        true
    }

    /// Pairing of a weight in label coordinates with the coroot of a
    /// positive root.
    pub fn pair(&self, w: &Weight, alpha: &Root) -> Rat {
        alpha.pair_eta(&w.to_eta(self.kind))
    }
}

fn is_positive_vec(v: &[i64]) -> bool {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) => x > 0,
        None => false,
    }
}

/// All signed permutations of m letters (hyperoctahedral group).
pub fn all_signed_perms(m: usize) -> Vec<SignedPerm> {
    let mut perms: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for p in &perms {
            for a in 1..=m as i64 {
                if p.iter().any(|&x| x.abs() == a) {
                    continue;
                }
                let mut q = p.clone();
                q.push(a);
                next.push(q.clone());
                q.pop();
                q.push(-a);
                next.push(q);
            }
        }
        perms = next;
    }
    perms.into_iter().map(|imgs| SignedPerm { imgs }).collect()
}

/// Element of the Lie algebra represented by its defining matrix
/// (`m x m` for gl, `2m x 2m` for sp/so with rows and columns indexed by
/// `-m .. -1, 1 .. m`).
#[derive(Clone, PartialEq, Debug)]
pub struct LieElt {
    pub kind: LieKind,
    pub mat: QMat,
}

impl LieElt {
    pub fn zero(kind: LieKind) -> Self {
        let d = kind.defining_dim();
        LieElt { kind, mat: Mat::zero(d, d) }
    }

    pub fn bracket(&self, other: &LieElt) -> LieElt {
        assert_eq!(self.kind, other.kind);
        LieElt { kind: self.kind, mat: self.mat.commutator(&other.mat) }
    }

    pub fn scale(&self, c: &Rat) -> LieElt {
        LieElt { kind: self.kind, mat: self.mat.scale(c) }
    }

    pub fn add(&self, other: &LieElt) -> LieElt {
        assert_eq!(self.kind, other.kind);
        LieElt { kind: self.kind, mat: self.mat.clone() + other.mat.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }
}

/// Row/column position of signed index `a` in the defining representation of
/// sp_2m / so_2m (order `-m, .., -1, 1, .., m`).
pub fn signed_index(a: i64, m: usize) -> usize {
    assert!(a != 0 && a.unsigned_abs() as usize <= m);
    if a < 0 {
        (a + m as i64) as usize
    } else {
        (a + m as i64 - 1) as usize
    }
}

/// Matrix unit `E_ab` of gl_m.
pub fn gl_unit(a: usize, b: usize, m: usize) -> LieElt {
    let mut mat = QMat::zero(m, m);
    *mat.at_mut(a - 1, b - 1) = Rat::one();
    LieElt { kind: LieKind::gl(m), mat }
}

/// Basis element `F_ab = E_ab - sgn(ab) E_{-b,-a}` (sp) or
/// `F_ab = E_ab - E_{-b,-a}` (so) with signed indices.
pub fn f_unit(a: i64, b: i64, kind: LieKind) -> LieElt {
    assert_ne!(kind.tag, KindTag::Gl);
    let m = kind.m;
    let d = 2 * m;
    let mut mat = QMat::zero(d, d);
    *mat.at_mut(signed_index(a, m), signed_index(b, m)) = Rat::one();
    let sgn = match kind.tag {
        KindTag::Sp => {
            if (a > 0) == (b > 0) {
                Rat::one()
            } else {
                -Rat::one()
            }
        }
        _ => Rat::one(),
    };
    let cur = mat.at(signed_index(-b, m), signed_index(-a, m)).clone();
    *mat.at_mut(signed_index(-b, m), signed_index(-a, m)) = cur - sgn;
    LieElt { kind, mat }
}

/// Defining-representation matrix of the coroot `H_alpha`.
pub fn coroot_elt(datum: &RootDatum, alpha: &Root) -> LieElt {
    let kind = datum.kind;
    let m = kind.m;
    match kind.tag {
        KindTag::Gl => match *alpha {
            Root::Diff(a, b) => gl_unit(a, a, m).add(&gl_unit(b, b, m).scale(&-Rat::one())),
            _ => unreachable!("gl has only eta differences"),
        },
        _ => {
            // eta_a is dual to F_{a-m-1, a-m-1}; alias h_a = that element.
            let h = |a: usize| f_unit(a as i64 - m as i64 - 1, a as i64 - m as i64 - 1, kind);
            match *alpha {
                Root::Diff(a, b) => h(a).add(&h(b).scale(&-Rat::one())),
                Root::Sum(a, b) => h(a).add(&h(b)),
                Root::Two(a) => h(a),
            }
        }
    }
}

/// Raising, lowering and Cartan elements `(E, F, H)` for a positive root,
/// normalized so that `[E, F] = H` holds as a matrix identity in the
/// defining representation.
///
/// Simple-root vectors follow the fixed classical choices; composite roots
/// are built by iterated brackets of simple ones along a fixed chain and the
/// lowering vector is rescaled to match the coroot.
pub fn defining_root_vectors(datum: &RootDatum, alpha: &Root) -> (LieElt, LieElt, LieElt) {
    let kind = datum.kind;
    let m = kind.m;
    let h_alpha = coroot_elt(datum, alpha);
    if let Some(c) = datum.simple_roots.iter().position(|s| s == alpha) {
        let c = c + 1;
        let (e, f) = simple_vectors(kind, c);
        let check = e.bracket(&f);
        assert_eq!(check, h_alpha, "simple root vectors must satisfy [E,F]=H");
        return (e, f, h_alpha);
    }
    // Find a simple root alpha_c with alpha - alpha_c still positive.
    let alpha_vec = alpha.to_vec(m);
    for (idx, s) in datum.simple_roots.iter().enumerate() {
        let s_vec = s.to_vec(m);
        let diff: Vec<i64> = alpha_vec.iter().zip(&s_vec).map(|(a, b)| a - b).collect();
        if let Some(beta) = Root::from_vec(&diff) {
            if datum.positive_roots.contains(&beta) {
                let (e_c, f_c) = simple_vectors(kind, idx + 1);
                let (e_b, f_b, _) = defining_root_vectors(datum, &beta);
                let e = e_c.bracket(&e_b);
                assert!(!e.is_zero(), "bracket chain degenerated");
                let f = f_b.bracket(&f_c);
                // [E, F] is proportional to H_alpha; normalize F.
                let comm = e.bracket(&f);
                let t = proportionality(&comm.mat, &h_alpha.mat)
                    .expect("[E,F] must be proportional to the coroot");
                assert!(!t.is_zero(), "normalization impossible");
                let f = f.scale(&t.recip());
                debug_assert_eq!(e.bracket(&f), h_alpha);
                return (e, f, h_alpha);
            }
        }
    }
    unreachable!("every non-simple positive root decomposes through a simple one")
}

/// Fixed raising/lowering vectors for the c-th simple root.
fn simple_vectors(kind: LieKind, c: usize) -> (LieElt, LieElt) {
    let m = kind.m;
    match kind.tag {
        KindTag::Gl => (gl_unit(c, c + 1, m), gl_unit(c + 1, c, m)),
        KindTag::Sp => {
            if c < m {
                (
                    f_unit(c as i64 - m as i64 - 1, c as i64 - m as i64, kind),
                    f_unit(c as i64 - m as i64, c as i64 - m as i64 - 1, kind),
                )
            } else {
                (
                    f_unit(-1, 1, kind).scale(&rat(1, 2)),
                    f_unit(1, -1, kind).scale(&rat(1, 2)),
                )
            }
        }
        KindTag::So => {
            if c < m {
                (
                    f_unit(c as i64 - m as i64 - 1, c as i64 - m as i64, kind),
                    f_unit(c as i64 - m as i64, c as i64 - m as i64 - 1, kind),
                )
            } else {
                (f_unit(-2, 1, kind), f_unit(1, -2, kind))
            }
        }
    }
}

/// If `a = t * b` entrywise, returns `t` (requires `b` nonzero).
fn proportionality(a: &QMat, b: &QMat) -> Option<Rat> {
    let mut t: Option<Rat> = None;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.at(i, j);
            let y = b.at(i, j);
            if y.is_zero() {
                if !x.is_zero() {
                    return None;
                }
                continue;
            }
            let ratio = x / y;
            match &t {
                None => t = Some(ratio),
                Some(r) => {
                    if *r != ratio {
                        return None;
                    }
                }
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(labels: &[(i64, i64)]) -> Weight {
        Weight::new(labels.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn gl2_datum() {
        let d = build_root_datum(LieKind::gl(2), -1, 2).unwrap();
        assert_eq!(d.rho, w(&[(1, 2), (-1, 2)]));
        assert_eq!(d.kappa, w(&[(0, 1), (0, 1)]));
        assert_eq!(d.positive_roots, vec![Root::Diff(1, 2)]);
    }

    #[test]
    fn sp2_datum() {
        let d = build_root_datum(LieKind::sp(1), -1, 2).unwrap();
        assert_eq!(d.rho, w(&[(-1, 1)]));
        assert_eq!(d.kappa, w(&[(-1, 1)]));
        assert_eq!(d.positive_roots, vec![Root::Two(1)]);
    }

    #[test]
    fn so2_datum_has_empty_root_system() {
        let d = build_root_datum(LieKind::so(1), -1, 2).unwrap();
        assert!(d.positive_roots.is_empty());
        assert_eq!(d.kind.rank(), 0);
    }

    #[test]
    fn shifted_action_identity() {
        let d = build_root_datum(LieKind::gl(2), -1, 2).unwrap();
        let lam = w(&[(3, 1), (7, 2)]);
        assert_eq!(d.shifted_action(&SignedPerm::identity(2), &lam), lam);
    }

    #[test]
    fn shifted_action_gl2_swap() {
        let d = build_root_datum(LieKind::gl(2), -1, 2).unwrap();
        let s1 = d.simple_reflection(1);
        let lam = w(&[(2, 1), (5, 1)]);
        // (a, b) -> (b - 1, a + 1)
        assert_eq!(d.shifted_action(&s1, &lam), w(&[(4, 1), (3, 1)]));
    }

    #[test]
    fn shifted_action_sp2_flip() {
        let d = build_root_datum(LieKind::sp(1), -1, 2).unwrap();
        let s1 = d.simple_reflection(1);
        let lam = w(&[(5, 1)]);
        // (c) -> (-c + 2) with rho_1 = -1
        assert_eq!(d.shifted_action(&s1, &lam), w(&[(-3, 1)]));
    }

    #[test]
    fn nonsingular_examples() {
        let d = build_root_datum(LieKind::gl(2), -1, 2).unwrap();
        assert!(d.is_nonsingular(&w(&[(0, 1), (0, 1)])));
        assert!(!d.is_nonsingular(&w(&[(0, 1), (2, 1)])));
        let so2 = build_root_datum(LieKind::so(1), -1, 2).unwrap();
        assert!(so2.is_nonsingular(&w(&[(1000, 1)])));
    }

    #[test]
    fn normal_ordering_gl3() {
        let d = build_root_datum(LieKind::gl(3), -1, 2).unwrap();
        let ord = d.normal_ordering(&ReducedWord(vec![1, 2, 1])).unwrap();
        assert_eq!(ord, vec![Root::Diff(1, 2), Root::Diff(1, 3), Root::Diff(2, 3)]);
    }

    #[test]
    fn normal_ordering_rejects_non_reduced() {
        let d = build_root_datum(LieKind::gl(3), -1, 2).unwrap();
        assert!(d.normal_ordering(&ReducedWord(vec![1, 1])).is_err());
    }

    #[test]
    fn longest_words_have_expected_length() {
        let gl2 = build_root_datum(LieKind::gl(2), -1, 2).unwrap();
        assert_eq!(gl2.longest_word().0, vec![1]);
        let gl3 = build_root_datum(LieKind::gl(3), -1, 2).unwrap();
        assert_eq!(gl3.longest_word().0.len(), 3);
        let sp4 = build_root_datum(LieKind::sp(2), -1, 2).unwrap();
        assert_eq!(sp4.longest_word().0.len(), 4);
        // The word must be valid: normal ordering exhausts the positive roots.
        let ord = sp4.normal_ordering(&sp4.longest_word()).unwrap();
        assert_eq!(ord.len(), sp4.positive_roots.len());
    }

    #[test]
    fn longest_word_sends_all_simples_negative() {
        for datum in [
            build_root_datum(LieKind::gl(4), -1, 2).unwrap(),
            build_root_datum(LieKind::sp(2), -1, 2).unwrap(),
            build_root_datum(LieKind::so(3), -1, 2).unwrap(),
        ] {
            let w0 = datum.word_to_perm(&datum.longest_word());
            for s in &datum.simple_roots {
                let img = w0.act_vec(&s.to_vec(datum.kind.m));
                assert!(!super::is_positive_vec(&img));
            }
        }
    }

    #[test]
    fn extended_stabilizer_so() {
        let d = build_root_datum(LieKind::so(1), -1, 2).unwrap();
        // lam + rho = 0 is fixed by the sign flip tau.
        assert!(!d.extended_stabilizer_equal(&w(&[(0, 1)])));
        assert!(d.extended_stabilizer_equal(&w(&[(1, 1)])));
        let gl = build_root_datum(LieKind::gl(2), -1, 2).unwrap();
        assert!(gl.extended_stabilizer_equal(&w(&[(0, 1), (0, 1)])));
    }

    #[test]
    fn root_vectors_satisfy_sl2_relations() {
        for datum in [
            build_root_datum(LieKind::gl(3), -1, 2).unwrap(),
            build_root_datum(LieKind::sp(2), -1, 2).unwrap(),
            build_root_datum(LieKind::so(2), -1, 2).unwrap(),
        ] {
            for alpha in datum.positive_roots.clone() {
                let (e, f, h) = defining_root_vectors(&datum, &alpha);
                assert_eq!(e.bracket(&f), h, "[E,F] = H for {alpha}");
                assert_eq!(h.bracket(&e), e.scale(&rat_int(2)), "[H,E] = 2E for {alpha}");
                assert_eq!(h.bracket(&f), f.scale(&rat_int(-2)), "[H,F] = -2F for {alpha}");
            }
        }
    }

    #[test]
    fn gl_root_vectors_are_matrix_units() {
        let d = build_root_datum(LieKind::gl(3), -1, 2).unwrap();
        let (e, f, h) = defining_root_vectors(&d, &Root::Diff(1, 3));
        assert_eq!(e, gl_unit(1, 3, 3));
        assert_eq!(f, gl_unit(3, 1, 3));
        assert_eq!(h, gl_unit(1, 1, 3).add(&gl_unit(3, 3, 3).scale(&rat_int(-1))));
    }

    #[test]
    fn sp2_long_root_vectors() {
        let d = build_root_datum(LieKind::sp(1), -1, 2).unwrap();
        let (e, f, h) = defining_root_vectors(&d, &Root::Two(1));
        assert_eq!(e, f_unit(-1, 1, d.kind).scale(&rat(1, 2)));
        assert_eq!(f, f_unit(1, -1, d.kind).scale(&rat(1, 2)));
        assert_eq!(h, f_unit(-1, -1, d.kind));
    }

    #[test]
    fn shifted_action_is_group_action() {
        let d = build_root_datum(LieKind::sp(2), -1, 2).unwrap();
        let lam = w(&[(1, 2), (-3, 1)]);
        let s1 = d.simple_reflection(1);
        let s2 = d.simple_reflection(2);
        let prod = s1.compose(&s2);
        assert_eq!(
            d.shifted_action(&prod, &lam),
            d.shifted_action(&s1, &d.shifted_action(&s2, &lam))
        );
    }

    #[test]
    fn normal_ordering_word_independence_multiset() {
        let d = build_root_datum(LieKind::gl(3), -1, 2).unwrap();
        let mut a = d.normal_ordering(&ReducedWord(vec![1, 2, 1])).unwrap();
        let mut b = d.normal_ordering(&ReducedWord(vec![2, 1, 2])).unwrap();
        a.sort_by_key(|r| format!("{r}"));
        b.sort_by_key(|r| format!("{r}"));
        assert_eq!(a, b);
    }
}
