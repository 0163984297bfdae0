//! Exact arithmetic on twigs (linear chains of rational curves).
//!
//! A twig `[m_1, ..., m_r]` stands for a chain of curves whose i-th member has
//! self-intersection `-m_i`. Determinants, inductances and adjoints are the
//! invariants that govern which chains contract to a single smooth curve, and
//! they drive both the catalog templates and the boundary classifier.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// A finite sequence of integers `[m_1, ..., m_r]`; entry `m_i` is the negated
/// self-intersection of the i-th curve. The empty twig is allowed and has
/// determinant 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Twig(Vec<i64>);

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TwigError {
    NotAdmissible,
    EmptyTwig,
    OutOfRange,
    NoDecomposition,
    Parse(String),
}

impl fmt::Display for TwigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwigError::NotAdmissible => write!(f, "twig is not admissible (entry < 2)"),
            TwigError::EmptyTwig => write!(f, "twig is empty"),
            TwigError::OutOfRange => write!(f, "rational is not in the open interval (0,1)"),
            TwigError::NoDecomposition => {
                write!(f, "twig matches none of the boundary decompositions")
            }
            TwigError::Parse(msg) => write!(f, "bad twig syntax: {}", msg),
        }
    }
}

impl Twig {
    pub fn new(entries: Vec<i64>) -> Self {
        Twig(entries)
    }

    pub fn empty() -> Self {
        Twig(Vec::new())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every entry at least 2.
    pub fn is_admissible(&self) -> bool {
        self.0.iter().all(|&m| m >= 2)
    }

    fn require_admissible_nonempty(&self) -> Result<(), TwigError> {
        if self.is_empty() {
            return Err(TwigError::EmptyTwig);
        }
        if !self.is_admissible() {
            return Err(TwigError::NotAdmissible);
        }
        Ok(())
    }

    /// `[m_r, ..., m_1]`.
    pub fn transpose(&self) -> Twig {
        let mut v = self.0.clone();
        v.reverse();
        Twig(v)
    }

    /// Drops the first entry; the empty twig for `r <= 1`.
    pub fn overline(&self) -> Twig {
        if self.0.len() <= 1 {
            Twig::empty()
        } else {
            Twig(self.0[1..].to_vec())
        }
    }

    /// Drops the last entry; the empty twig for `r <= 1`.
    pub fn underline(&self) -> Twig {
        if self.0.len() <= 1 {
            Twig::empty()
        } else {
            Twig(self.0[..self.0.len() - 1].to_vec())
        }
    }

    /// Concatenation `[self, other]`.
    pub fn concat(&self, other: &Twig) -> Twig {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Twig(v)
    }

    /// The weight sequence of the corresponding chain (entry `m` becomes `-m`).
    pub fn weights(&self) -> Vec<i64> {
        self.0.iter().map(|&m| -m).collect()
    }

    pub fn parse(text: &str) -> Result<Twig, TwigError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| TwigError::Parse(String::from("expected [a,b,...]")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Twig::empty());
        }
        let mut entries = Vec::new();
        for piece in inner.split(',') {
            let piece = piece.trim();
            let n: i64 = piece
                .parse()
                .map_err(|_| TwigError::Parse(alloc::format!("bad entry `{}`", piece)))?;
            entries.push(n);
        }
        Ok(Twig(entries))
    }
}

impl fmt::Display for Twig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", m)?;
        }
        write!(f, "]")
    }
}

/// `[t * 2]`: t repetitions of the entry 2.
pub fn repeat2(t: i64) -> Twig {
    assert!(t >= 0, "repeat2 needs t >= 0");
    Twig(vec![2; t as usize])
}

/// `L(m; t) = [[t * 2], [m]]`.
pub fn l_twig(m: i64, t: i64) -> Twig {
    assert!(m >= 1 && t >= 0, "L(m;t) needs m >= 1, t >= 0");
    let mut v = vec![2; t as usize];
    v.push(m);
    Twig(v)
}

/// `R(m; t) = [[m], [t * 2]]`.
pub fn r_twig(m: i64, t: i64) -> Twig {
    assert!(m >= 1 && t >= 0, "R(m;t) needs m >= 1, t >= 0");
    let mut v = vec![m];
    v.extend(core::iter::repeat(2).take(t as usize));
    Twig(v)
}

/// Determinant of the twig: |det| of the tridiagonal intersection matrix with
/// diagonal `-m_i` and off-diagonal 1. `det([]) = 1`. Computed by the two-term
/// recurrence `d([m_1..m_r]) = m_1 d([m_2..m_r]) - d([m_3..m_r])` with the
/// absolute value taken at the end.
pub fn det(t: &Twig) -> BigInt {
    det_signed(t.entries()).abs()
}

fn det_signed(entries: &[i64]) -> BigInt {
    // d_k over suffixes, right to left.
    let mut next = BigInt::one(); // d of empty suffix
    let mut next2 = BigInt::zero(); // d of "past the end"
    for &m in entries.iter().rev() {
        let cur = BigInt::from(m) * &next - &next2;
        next2 = next;
        next = cur;
    }
    next
}

/// Inductance `e(A) = d(overline(A)) / d(A)`, an exact rational in (0,1).
pub fn inductance(t: &Twig) -> Result<Rational, TwigError> {
    t.require_admissible_nonempty()?;
    Ok(Rational::new(det(&t.overline()), det(t)))
}

/// Inverts the inductance map: the unique admissible twig with inductance `q`,
/// obtained by the Hirzebruch-Jung expansion of `d/p` with ceiling divisions.
pub fn twig_from_inductance(q: &Rational) -> Result<Twig, TwigError> {
    if !q.is_strictly_between_zero_and_one() {
        return Err(TwigError::OutOfRange);
    }
    let mut d = q.denom().clone();
    let mut p = q.numer().clone();
    let mut entries = Vec::new();
    while !p.is_zero() {
        // m = ceil(d/p); since 0 < p < d and gcd(p,d)=1 this is >= 2 except
        // in the terminal step p = 1 where it is d itself.
        let m = num_integer::Integer::div_ceil(&d, &p);
        let next_p = &m * &p - &d;
        entries.push(i64::try_from(&m).expect("twig entry exceeds i64"));
        d = p;
        p = next_p;
    }
    Ok(Twig(entries))
}

/// Adjoint `A*`: the unique admissible twig with inductance `1 - e(^tA)`.
pub fn adjoint(t: &Twig) -> Result<Twig, TwigError> {
    t.require_admissible_nonempty()?;
    let e_transposed = inductance(&t.transpose())?;
    twig_from_inductance(&e_transposed.one_minus())
}

/// One `L(m; t)` block of the unique block decomposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LBlock {
    pub m: i64,
    pub t: i64,
}

/// The unique decomposition `A = [L(m_r; t_r), ..., L(m_1; t_1)]` of an
/// admissible twig with `m_1 >= 2` and `m_i >= 3` for `i > 1`. Blocks are
/// stored left to right as they appear in the twig, so `blocks[0]` is
/// `L(m_r; t_r)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LBlockDecomposition {
    pub blocks: Vec<LBlock>,
}

impl LBlockDecomposition {
    pub fn reassemble(&self) -> Twig {
        let mut out = Twig::empty();
        for b in &self.blocks {
            out = out.concat(&l_twig(b.m, b.t));
        }
        out
    }
}

/// Splits an admissible twig into its L-blocks by scanning runs of 2s.
/// An all-2 tail is the final block `L(2; len-1)`.
pub fn l_block_decompose(t: &Twig) -> Result<LBlockDecomposition, TwigError> {
    t.require_admissible_nonempty()?;
    let mut blocks = Vec::new();
    let mut twos = 0i64;
    for &m in t.entries() {
        if m == 2 {
            twos += 1;
        } else {
            blocks.push(LBlock { m, t: twos });
            twos = 0;
        }
    }
    if twos > 0 {
        // trailing 2s: the last block must take m = 2 and use one of them
        blocks.push(LBlock { m: 2, t: twos - 1 });
    }
    debug_assert_eq!(
        LBlockDecomposition {
            blocks: blocks.clone()
        }
        .reassemble(),
        *t
    );
    Ok(LBlockDecomposition { blocks })
}

/// `m_A = t_r + 3` where `t_r` is the t-parameter of the leftmost L-block.
pub fn m_a(t: &Twig) -> Result<i64, TwigError> {
    let dec = l_block_decompose(t)?;
    Ok(dec.blocks[0].t + 3)
}

/// The twig `B` such that `[[m], A, [1], B]` contracts to `[m, 1]`, i.e.
/// `underline(A*)`. Both the adjoint route and the closed formula built from
/// the L-block decomposition are computed; they must agree.
pub fn fujita_prime_expected(a: &Twig) -> Result<Twig, TwigError> {
    a.require_admissible_nonempty()?;
    let via_adjoint = adjoint(a)?.underline();
    let via_formula = fujita_prime_formula(a)?;
    assert_eq!(
        via_adjoint, via_formula,
        "adjoint route and block formula disagree for {}",
        a
    );
    Ok(via_adjoint)
}

/// The closed formula: with blocks `[L(m_r;t_r), ..., L(m_1;t_1)]`,
/// `B = [(m_1-2) * 2]` for `r = 1` and
/// `B = [[(m_1-2) * 2], R(t_1+3; m_2-3), ..., R(t_{r-1}+3; m_r-3)]` for `r > 1`.
fn fujita_prime_formula(a: &Twig) -> Result<Twig, TwigError> {
    let dec = l_block_decompose(a)?;
    // dec.blocks is leftmost-first, i.e. indices r, r-1, ..., 1.
    let r = dec.blocks.len();
    let block = |i: usize| dec.blocks[r - i]; // paper index 1..=r
    let mut out = repeat2(block(1).m - 2);
    for i in 1..r {
        out = out.concat(&r_twig(block(i).t + 3, block(i + 1).m - 3));
    }
    Ok(out)
}

/// Case data of the boundary-twig decomposition. Re-expanding with
/// [`expand_boundary`] reproduces the input twig exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BoundaryTwigDecomposition {
    /// `[A, [1], A*, [m]]` - exactly one entry equal to 1.
    Case1 { a: Twig, m: i64 },
    /// `[^t(A*), [1], ^tA, A, [1], A*]` - even palindrome with two 1s.
    Case2 { a: Twig },
    /// `[L(1; r'-2), [r-2], R(1; r'-2)]` - odd palindrome, 1s next to center.
    Case3a { r_prime: i64 },
    /// `[L(m_A; t), ^t(underline(A*)), [1], ^tA, [2t+3], A, [1], underline(A*), R(m_A; t)]`.
    Case3b { a: Twig, t: i64 },
}

/// Rebuilds the full twig from the case data.
pub fn expand_boundary(d: &BoundaryTwigDecomposition) -> Twig {
    match d {
        BoundaryTwigDecomposition::Case1 { a, m } => {
            let astar = adjoint(a).expect("case data holds an admissible twig");
            a.concat(&Twig(vec![1]))
                .concat(&astar)
                .concat(&Twig(vec![*m]))
        }
        BoundaryTwigDecomposition::Case2 { a } => {
            let astar = adjoint(a).expect("case data holds an admissible twig");
            astar
                .transpose()
                .concat(&Twig(vec![1]))
                .concat(&a.transpose())
                .concat(a)
                .concat(&Twig(vec![1]))
                .concat(&astar)
        }
        BoundaryTwigDecomposition::Case3a { r_prime } => {
            let k = r_prime - 2;
            let r = 2 * r_prime - 1;
            l_twig(1, k)
                .concat(&Twig(vec![r - 2]))
                .concat(&r_twig(1, k))
        }
        BoundaryTwigDecomposition::Case3b { a, t } => {
            let ma = m_a(a).expect("case data holds an admissible twig");
            let under = adjoint(a).expect("admissible").underline();
            l_twig(ma, *t)
                .concat(&under.transpose())
                .concat(&Twig(vec![1]))
                .concat(&a.transpose())
                .concat(&Twig(vec![2 * t + 3]))
                .concat(a)
                .concat(&Twig(vec![1]))
                .concat(&under)
                .concat(&r_twig(ma, *t))
        }
    }
}

/// Recognizes which of the three boundary shapes a twig has and extracts the
/// case parameters. Entries must all be >= 1.
pub fn decompose_boundary(t: &Twig) -> Result<BoundaryTwigDecomposition, TwigError> {
    if t.is_empty() || t.entries().iter().any(|&m| m < 1) {
        return Err(TwigError::NoDecomposition);
    }
    let ones: Vec<usize> = t
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &m)| m == 1)
        .map(|(i, _)| i)
        .collect();
    let r = t.len();
    let is_palindrome = t.entries().iter().eq(t.entries().iter().rev());

    let candidate = match ones.len() {
        1 => decompose_case1(t, ones[0]),
        2 if ones[0] + ones[1] == r - 1 && is_palindrome => {
            if r % 2 == 0 {
                decompose_case2(t, ones[0])
            } else {
                decompose_case3(t, ones[0])
            }
        }
        _ => None,
    };
    let candidate = candidate.ok_or(TwigError::NoDecomposition)?;
    if expand_boundary(&candidate) == *t {
        Ok(candidate)
    } else {
        Err(TwigError::NoDecomposition)
    }
}

fn decompose_case1(t: &Twig, e: usize) -> Option<BoundaryTwigDecomposition> {
    if e == 0 || e + 1 >= t.len() {
        return None;
    }
    let a = Twig(t.entries()[..e].to_vec());
    if !a.is_admissible() {
        return None;
    }
    let m = *t.entries().last().unwrap();
    Some(BoundaryTwigDecomposition::Case1 { a, m })
}

fn decompose_case2(t: &Twig, e: usize) -> Option<BoundaryTwigDecomposition> {
    // [^t(A*), 1, ^tA, A, 1, A*]; the middle is ^tA ++ A, of even length.
    let e2 = t.len() - 1 - e;
    let middle = &t.entries()[e + 1..e2];
    if middle.is_empty() || middle.len() % 2 != 0 {
        return None;
    }
    let half = middle.len() / 2;
    let a = Twig(middle[half..].to_vec());
    if !a.is_admissible() {
        return None;
    }
    Some(BoundaryTwigDecomposition::Case2 { a })
}

fn decompose_case3(t: &Twig, e: usize) -> Option<BoundaryTwigDecomposition> {
    let r = t.len();
    let r_prime = (r + 1) / 2; // 1-based center index
                               // 1-based position of the first 1 is e+1.
    if e + 1 == r_prime {
        return None; // lem(3-4)(1): the center is never a 1
    }
    if e + 2 == r_prime {
        // the explicit all-2 shape around a center of weight r-2
        return Some(BoundaryTwigDecomposition::Case3a {
            r_prime: r_prime as i64,
        });
    }
    // general shape: read t from the center entry 2t+3 and A from the run
    // between the center and the second 1
    let center = t.entries()[r_prime - 1];
    if center < 3 || (center - 3) % 2 != 0 {
        return None;
    }
    let tt = (center - 3) / 2;
    let e2 = r - 1 - e; // 0-based index of the second 1
    let a = Twig(t.entries()[r_prime..e2].to_vec());
    if a.is_empty() || !a.is_admissible() {
        return None;
    }
    Some(BoundaryTwigDecomposition::Case3b { a, t: tt })
}

impl fmt::Display for BoundaryTwigDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryTwigDecomposition::Case1 { a, m } => write!(f, "Case1(A={}, m={})", a, m),
            BoundaryTwigDecomposition::Case2 { a } => write!(f, "Case2(A={})", a),
            BoundaryTwigDecomposition::Case3a { r_prime } => write!(f, "Case3a(r'={})", r_prime),
            BoundaryTwigDecomposition::Case3b { a, t } => write!(f, "Case3b(A={}, t={})", a, t),
        }
    }
}

/// All admissible twigs with determinant at most `max_det`, ordered by
/// (determinant, entries). One twig per inductance value p/d with d <= max_det.
pub fn admissible_twigs_up_to(max_det: i64) -> Vec<Twig> {
    let mut out = Vec::new();
    // (prefix, det(prefix), det(prefix minus its last entry)); appending x
    // takes (d, u) to (x*d - u, d), so determinants grow strictly
    let mut stack: Vec<(Vec<i64>, i64, i64)> = vec![(Vec::new(), 1, 0)];
    while let Some((prefix, d, u)) = stack.pop() {
        if !prefix.is_empty() {
            out.push(Twig(prefix.clone()));
        }
        let mut x = 2i64;
        loop {
            let nd = x * d - u;
            if nd > max_det {
                break;
            }
            let mut next = prefix.clone();
            next.push(x);
            stack.push((next, nd, d));
            x += 1;
        }
    }
    out.sort_by(|a, b| (det(a), a.clone()).cmp(&(det(b), b.clone())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn tw(entries: &[i64]) -> Twig {
        Twig::new(entries.to_vec())
    }

    /// Independent oracle: determinant of the tridiagonal intersection matrix
    /// by cofactor expansion on the first row.
    fn det_matrix_oracle(entries: &[i64]) -> i64 {
        let n = entries.len();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = -entries[i];
            if i + 1 < n {
                m[i][i + 1] = 1;
                m[i + 1][i] = 1;
            }
        }
        fn det_rec(m: &[Vec<i64>]) -> i64 {
            let n = m.len();
            if n == 0 {
                return 1;
            }
            let mut acc = 0i64;
            for j in 0..n {
                if m[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                acc += sign * m[0][j] * det_rec(&minor);
            }
            acc
        }
        det_rec(&m).abs()
    }

    #[test]
    fn det_paper_examples() {
        assert_eq!(det(&Twig::empty()), BigInt::from(1));
        assert_eq!(det(&tw(&[2, 4])), BigInt::from(7));
        assert_eq!(det(&tw(&[2, 2, 3])), BigInt::from(7));
        for m in 2..=10 {
            assert_eq!(det(&tw(&[m])), BigInt::from(m));
        }
    }

    #[test]
    fn det_matches_matrix_oracle() {
        for t in 1..=10i64 {
            let chain = repeat2(t);
            assert_eq!(det(&chain), BigInt::from(t + 1));
            assert_eq!(
                det(&chain),
                BigInt::from(det_matrix_oracle(chain.entries()))
            );
        }
        for tgt in admissible_twigs_up_to(12) {
            assert_eq!(det(&tgt), BigInt::from(det_matrix_oracle(tgt.entries())));
        }
        // non-admissible entries are accepted by det
        assert_eq!(
            det(&tw(&[2, 1, 2])),
            BigInt::from(det_matrix_oracle(&[2, 1, 2]))
        );
        assert_eq!(det(&tw(&[0, 3])), BigInt::from(det_matrix_oracle(&[0, 3])));
    }

    #[test]
    fn inductance_paper_examples() {
        assert_eq!(inductance(&tw(&[4, 2])).unwrap(), Rational::from_i64(2, 7));
        assert_eq!(
            inductance(&tw(&[2, 2, 3])).unwrap(),
            Rational::from_i64(5, 7)
        );
        assert_eq!(inductance(&tw(&[2, 4])).unwrap(), Rational::from_i64(4, 7));
        assert_eq!(inductance(&tw(&[2, 1, 2])), Err(TwigError::NotAdmissible));
        assert_eq!(inductance(&Twig::empty()), Err(TwigError::EmptyTwig));
    }

    #[test]
    fn hirzebruch_jung_examples() {
        assert_eq!(
            twig_from_inductance(&Rational::from_i64(5, 7)).unwrap(),
            tw(&[2, 2, 3])
        );
        assert_eq!(
            twig_from_inductance(&Rational::from_i64(1, 2)).unwrap(),
            tw(&[2])
        );
        assert_eq!(
            twig_from_inductance(&Rational::from_i64(3, 2)),
            Err(TwigError::OutOfRange)
        );
        // 2/7 -> [4,2], checked against exhaustive search over the pool
        let hits: Vec<Twig> = admissible_twigs_up_to(7)
            .into_iter()
            .filter(|t| inductance(t).unwrap() == Rational::from_i64(2, 7))
            .collect();
        assert_eq!(hits, vec![tw(&[4, 2])]);
        assert_eq!(
            twig_from_inductance(&Rational::from_i64(2, 7)).unwrap(),
            tw(&[4, 2])
        );
    }

    #[test]
    fn adjoint_paper_examples() {
        assert_eq!(adjoint(&tw(&[2, 4])).unwrap(), tw(&[2, 2, 3]));
        assert_eq!(adjoint(&tw(&[2])).unwrap(), tw(&[2]));
        assert_eq!(adjoint(&tw(&[3])).unwrap(), tw(&[2, 2]));
    }

    #[test]
    fn sequence_manipulations() {
        assert_eq!(tw(&[2, 4]).transpose(), tw(&[4, 2]));
        assert_eq!(l_twig(4, 2), tw(&[2, 2, 4]));
        assert_eq!(r_twig(4, 2), tw(&[4, 2, 2]));
        assert_eq!(tw(&[2, 2, 3]).underline(), tw(&[2, 2]));
        assert_eq!(tw(&[2, 2, 3]).overline(), tw(&[2, 3]));
        assert_eq!(tw(&[5]).overline(), Twig::empty());
        assert_eq!(tw(&[5]).underline(), Twig::empty());
        assert_eq!(repeat2(3), tw(&[2, 2, 2]));
        assert_eq!(repeat2(0), Twig::empty());
    }

    #[test]
    fn l_block_examples() {
        let d = l_block_decompose(&tw(&[2, 4])).unwrap();
        assert_eq!(d.blocks, vec![LBlock { m: 4, t: 1 }]);
        assert_eq!(d.reassemble(), tw(&[2, 4]));

        let d = l_block_decompose(&tw(&[3, 2])).unwrap();
        assert_eq!(d.blocks, vec![LBlock { m: 3, t: 0 }, LBlock { m: 2, t: 0 }]);
        assert_eq!(d.reassemble(), tw(&[3, 2]));

        let d = l_block_decompose(&tw(&[2, 2])).unwrap();
        assert_eq!(d.blocks, vec![LBlock { m: 2, t: 1 }]);

        assert_eq!(
            l_block_decompose(&tw(&[2, 1])),
            Err(TwigError::NotAdmissible)
        );
    }

    #[test]
    fn l_block_reassembly_is_identity() {
        for t in admissible_twigs_up_to(20) {
            assert_eq!(l_block_decompose(&t).unwrap().reassemble(), t);
        }
    }

    #[test]
    fn m_a_examples() {
        assert_eq!(m_a(&tw(&[2, 4])).unwrap(), 4);
        assert_eq!(m_a(&tw(&[2])).unwrap(), 3);
        assert_eq!(m_a(&tw(&[2, 2])).unwrap(), 4);
        // all-2 twigs: m_A = k + 2 for [k * 2]
        for k in 1..=8 {
            assert_eq!(m_a(&repeat2(k)).unwrap(), k + 2);
        }
        // a leading run of s twos followed by an entry >= 3 gives s + 3
        for s in 0..=5 {
            let t = repeat2(s).concat(&tw(&[4, 2]));
            assert_eq!(m_a(&t).unwrap(), s + 3);
        }
    }

    #[test]
    fn fujita_prime_examples() {
        assert_eq!(fujita_prime_expected(&tw(&[2, 4])).unwrap(), tw(&[2, 2]));
        assert_eq!(fujita_prime_expected(&tw(&[2])).unwrap(), Twig::empty());
        assert_eq!(fujita_prime_expected(&tw(&[3, 3])).unwrap(), tw(&[2, 3]));
        // both routes agree on a whole pool
        for a in admissible_twigs_up_to(20) {
            let _ = fujita_prime_expected(&a).unwrap();
        }
    }

    #[test]
    fn decompose_boundary_examples() {
        assert_eq!(
            decompose_boundary(&tw(&[2, 4, 1, 2, 2, 3, 5])).unwrap(),
            BoundaryTwigDecomposition::Case1 {
                a: tw(&[2, 4]),
                m: 5
            }
        );
        assert_eq!(
            decompose_boundary(&tw(&[2, 1, 3, 1, 2])).unwrap(),
            BoundaryTwigDecomposition::Case3a { r_prime: 3 }
        );
        assert_eq!(
            decompose_boundary(&tw(&[2, 2, 1, 5, 1, 2, 2])).unwrap(),
            BoundaryTwigDecomposition::Case3a { r_prime: 4 }
        );
        assert_eq!(
            decompose_boundary(&tw(&[3, 1, 2, 3, 2, 1, 3])).unwrap(),
            BoundaryTwigDecomposition::Case3b { a: tw(&[2]), t: 0 }
        );
        // Case2: built from A = [2,4]
        let c2 = BoundaryTwigDecomposition::Case2 { a: tw(&[2, 4]) };
        let expanded = expand_boundary(&c2);
        assert_eq!(decompose_boundary(&expanded).unwrap(), c2);
        // no interior 1 with matching shape
        assert_eq!(
            decompose_boundary(&tw(&[2, 3, 2])),
            Err(TwigError::NoDecomposition)
        );
        assert_eq!(
            decompose_boundary(&tw(&[1, 2])),
            Err(TwigError::NoDecomposition)
        );
    }

    #[test]
    fn decompose_round_trip_over_pool() {
        let pool = admissible_twigs_up_to(8);
        for a in &pool {
            for m in 2..=3 {
                let t = expand_boundary(&BoundaryTwigDecomposition::Case1 { a: a.clone(), m });
                assert_eq!(expand_boundary(&decompose_boundary(&t).unwrap()), t);
            }
            let t = expand_boundary(&BoundaryTwigDecomposition::Case2 { a: a.clone() });
            assert_eq!(expand_boundary(&decompose_boundary(&t).unwrap()), t);
            for tt in 0..=2 {
                let t = expand_boundary(&BoundaryTwigDecomposition::Case3b {
                    a: a.clone(),
                    t: tt,
                });
                assert_eq!(expand_boundary(&decompose_boundary(&t).unwrap()), t);
            }
        }
        for rp in 3..=8 {
            let t = expand_boundary(&BoundaryTwigDecomposition::Case3a { r_prime: rp });
            assert_eq!(expand_boundary(&decompose_boundary(&t).unwrap()), t);
        }
    }

    #[test]
    fn adjoint_defining_property() {
        for t in admissible_twigs_up_to(20) {
            let lhs = inductance(&adjoint(&t).unwrap()).unwrap();
            let rhs = inductance(&t.transpose()).unwrap().one_minus();
            assert_eq!(lhs, rhs, "adjoint property fails for {}", t);
        }
    }

    #[test]
    fn twig_display_and_parse() {
        assert_eq!(format!("{}", tw(&[2, 4])), "[2,4]");
        assert_eq!(format!("{}", Twig::empty()), "[]");
        assert_eq!(Twig::parse("[2, 4]").unwrap(), tw(&[2, 4]));
        assert_eq!(Twig::parse("[]").unwrap(), Twig::empty());
        assert!(Twig::parse("2,4").is_err());
        assert!(Twig::parse("[2,x]").is_err());
    }
}
