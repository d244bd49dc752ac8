//! Permutations of bell positions and rows of bells.
//!
//! Positions and bells are 1-based at every public boundary. Permutations
//! act on the right: `p.compose(&q)` means "first do `p`, then do `q`", so
//! the composite sends position `i` to `q(p(i))`. Applying a permutation to
//! a row moves the bell in position `i` to position `p(i)`.

use std::fmt;
use std::ops::{BitXor, Mul};

use crate::error::{Error, Result};

/// Largest supported degree; positions are stored as bytes.
pub const MAX_DEGREE: usize = u8::MAX as usize;

/// A bijection of the positions `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    // images[i] is the 0-based image of 0-based position i
    images: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl BitXor for Parity {
    type Output = Parity;

    fn bitxor(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidDegree(n));
    }
    Ok(())
}

impl Perm {
    pub fn identity(n: usize) -> Result<Perm> {
        check_degree(n)?;
        Ok(Perm {
            images: (0..n as u8).collect(),
        })
    }

    /// Builds a permutation from the 1-based images of positions `1..=n`.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(Error::Point { point: img, degree: n });
            }
            if seen[img - 1] {
                return Err(Error::Cycle(img));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u8);
        }
        Ok(Perm { images: out })
    }

    /// The product of the given cycles, composed left to right.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut acc = Perm::identity(n)?;
        for cycle in cycles {
            acc = acc.compose(&Perm::cycle(n, cycle)?)?;
        }
        Ok(acc)
    }

    /// A single cycle `(a b c ...)` on `n` points.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Perm> {
        check_degree(n)?;
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut seen = vec![false; n];
        for &p in points {
            if p == 0 || p > n {
                return Err(Error::Point { point: p, degree: n });
            }
            if seen[p - 1] {
                return Err(Error::Cycle(p));
            }
            seen[p - 1] = true;
        }
        for (k, &p) in points.iter().enumerate() {
            let next = points[(k + 1) % points.len()];
            images[p - 1] = (next - 1) as u8;
        }
        Ok(Perm { images })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Perm> {
        Perm::cycle(n, &[a, b])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based images of `1..=n`.
    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize + 1)
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub(crate) fn from_raw(images: Vec<u8>) -> Perm {
        debug_assert!(!images.is_empty());
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.image(i) == i
    }

    fn same_degree(&self, other: &Perm) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// First `self`, then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        self.same_degree(other)?;
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { images: inv }
    }

    /// `self` composed with itself `k` times.
    pub fn pow(&self, k: u64) -> Perm {
        let mut result = Perm {
            images: (0..self.degree() as u8).collect(),
        };
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.then_unchecked(&base);
            }
            base = base.then_unchecked(&base);
            k >>= 1;
        }
        result
    }

    /// Moves the bell in position `i` to position `self(i)`.
    pub fn apply_to_row(&self, row: &Row) -> Result<Row> {
        if self.degree() != row.stage() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: row.stage(),
            });
        }
        let mut bells = vec![0u8; row.stage()];
        for (i, &bell) in row.bells.iter().enumerate() {
            bells[self.images[i] as usize] = bell;
        }
        Ok(Row { bells })
    }

    /// Disjoint cycles, each starting at its smallest point, sorted by that
    /// point. 1-cycles are included only when `with_fixed` is set.
    pub fn cycles(&self, with_fixed: bool) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            if cycle.len() > 1 || with_fixed {
                out.push(cycle);
            }
        }
        out
    }

    /// Number of disjoint cycles, 1-cycles included.
    pub fn cycle_count(&self) -> usize {
        self.cycles(true).len()
    }

    /// Least `k >= 1` with `self^k` the identity.
    pub fn order(&self) -> u64 {
        self.cycles(false).iter().map(|c| c.len() as u64).fold(1, lcm)
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles(false).iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// A non-identity product of disjoint transpositions of adjacent
    /// positions, i.e. a legal change between successive rows.
    pub fn is_transition(&self) -> bool {
        let mut moved = false;
        for (i, &x) in self.images.iter().enumerate() {
            let x = x as usize;
            if x == i {
                continue;
            }
            moved = true;
            if x + 1 != i && i + 1 != x {
                return false;
            }
            if self.images[x] as usize != i {
                return false;
            }
        }
        moved
    }

    /// True when the permutation swaps exactly one adjacent pair.
    pub fn is_single_swap(&self) -> bool {
        self.is_transition()
            && self
                .images
                .iter()
                .enumerate()
                .filter(|(i, &x)| *i != x as usize)
                .count()
                == 2
    }

    pub fn common_fixed_point(&self, other: &Perm) -> Result<bool> {
        self.same_degree(other)?;
        Ok(self
            .images
            .iter()
            .zip(&other.images)
            .enumerate()
            .any(|(i, (&a, &b))| a as usize == i && b as usize == i))
    }

    /// Points moved by the permutation (1-based).
    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| !self.fixes(i)).collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Mul for &Perm {
    type Output = Perm;

    /// Left-to-right product. Panics on a degree mismatch; use
    /// [`Perm::compose`] for a checked product.
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs).expect("permutation degrees differ")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_cycles(self))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

/// An arrangement of the bells `1..=n`, listed by position.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Row {
    bells: Vec<u8>,
}

impl Row {
    pub fn rounds(n: usize) -> Result<Row> {
        check_degree(n)?;
        Ok(Row {
            bells: (1..=n as u8).collect(),
        })
    }

    pub fn new(bells: &[usize]) -> Result<Row> {
        let n = bells.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::Row(format!("a row needs 1..={MAX_DEGREE} bells, got {n}")));
        }
        let mut seen = vec![false; n];
        for &b in bells {
            if b == 0 || b > n {
                return Err(Error::Row(format!("bell {b} outside 1..={n}")));
            }
            if seen[b - 1] {
                return Err(Error::Row(format!("bell {b} appears twice")));
            }
            seen[b - 1] = true;
        }
        Ok(Row {
            bells: bells.iter().map(|&b| b as u8).collect(),
        })
    }

    pub fn stage(&self) -> usize {
        self.bells.len()
    }

    pub fn bells(&self) -> impl Iterator<Item = usize> + '_ {
        self.bells.iter().map(|&b| b as usize)
    }

    /// Bell in the 1-based position `i`.
    pub fn bell_at(&self, i: usize) -> usize {
        self.bells[i - 1] as usize
    }

    pub fn is_rounds(&self) -> bool {
        self.bells.iter().enumerate().all(|(i, &b)| b as usize == i + 1)
    }

    /// The row reached from rounds by `p`.
    pub fn from_perm(p: &Perm) -> Row {
        let mut bells = vec![0u8; p.degree()];
        for (i, &x) in p.raw().iter().enumerate() {
            bells[x as usize] = i as u8 + 1;
        }
        Row { bells }
    }

    /// The permutation taking rounds to this row.
    pub fn to_perm(&self) -> Perm {
        let mut images = vec![0u8; self.stage()];
        for (pos, &bell) in self.bells.iter().enumerate() {
            images[bell as usize - 1] = pos as u8;
        }
        Perm::from_raw(images)
    }

    /// The permutation `t` with `t.apply_to_row(self) == next`.
    pub fn transition_to(&self, next: &Row) -> Result<Perm> {
        if self.stage() != next.stage() {
            return Err(Error::DegreeMismatch {
                left: self.stage(),
                right: next.stage(),
            });
        }
        self.to_perm().inverse().compose(&next.to_perm())
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_row(self))
    }
}

impl fmt::Debug for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Row[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_cycles;

    fn p(s: &str, n: usize) -> Perm {
        parse_cycles(s, n).unwrap()
    }

    #[test]
    fn identity_basics() {
        let e = Perm::identity(5).unwrap();
        let rounds = Row::rounds(5).unwrap();
        assert_eq!(e.apply_to_row(&rounds).unwrap(), rounds);
        assert_eq!(Perm::identity(4).unwrap().order(), 1);
        assert_eq!(Perm::identity(6).unwrap().parity(), Parity::Even);
        assert_eq!(Perm::identity(0), Err(Error::InvalidDegree(0)));
    }

    #[test]
    fn composition_is_left_to_right() {
        let x = p("(1 2)(3 4)", 5);
        let y = p("(2 3)(4 5)", 5);
        assert_eq!(x.compose(&y).unwrap(), p("(1 3 5 4 2)", 5));

        let y_inv = p("(2 3)(4 5)", 5).inverse();
        let z = p("(1 2)", 5);
        assert_eq!(y_inv.compose(&z).unwrap(), p("(1 2 3)(4 5)", 5));

        assert_eq!(x.compose(&Perm::identity(5).unwrap()).unwrap(), x);
        assert!(matches!(
            x.compose(&Perm::identity(4).unwrap()),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn inverses() {
        assert_eq!(p("(2 4 3)", 4).inverse(), p("(2 3 4)", 4));
        assert_eq!(p("(1 2)(3 4)", 4).inverse(), p("(1 2)(3 4)", 4));
        assert_eq!(p("(2 3 4 6 7)", 7).inverse(), p("(2 7 6 4 3)", 7));
    }

    #[test]
    fn acting_on_rows() {
        let row = Row::new(&[5, 4, 3, 2, 1]).unwrap();
        let out = p("(1 2)(3 4)", 5).apply_to_row(&row).unwrap();
        assert_eq!(out, Row::new(&[4, 5, 2, 3, 1]).unwrap());

        let zx = p("(3 4 6 7 5)", 7);
        let lead_head = zx.apply_to_row(&Row::rounds(7).unwrap()).unwrap();
        assert_eq!(lead_head, Row::new(&[1, 2, 5, 3, 7, 4, 6]).unwrap());

        assert!(p("(1 2)", 3).apply_to_row(&Row::rounds(4).unwrap()).is_err());
    }

    #[test]
    fn orders_and_parities() {
        assert_eq!(p("(2 4 6 5 3)", 6).order(), 5);
        assert_eq!(p("(1 2 3)(4 5)", 5).order(), 6);
        assert_eq!(Perm::identity(7).unwrap().order(), 1);
        assert_eq!(p("(1 2)(3 4)(5 6)", 7).parity(), Parity::Odd);
        assert_eq!(p("(2 4 7)(3 6 5)", 7).parity(), Parity::Even);
    }

    #[test]
    fn transitions() {
        assert!(p("(1 2)(3 4)", 5).is_transition());
        assert!(!p("(1 3)", 4).is_transition());
        assert!(!p("(2 4 3)", 4).is_transition());
        assert!(!Perm::identity(4).unwrap().is_transition());
        assert!(p("(3 4)", 4).is_single_swap());
        assert!(!p("(1 2)(3 4)", 4).is_single_swap());
    }

    #[test]
    fn common_fixed_points() {
        let x = p("(1 2)(3 4)", 5);
        let y = p("(2 3)(4 5)", 5);
        let brute = (1..=5).any(|i| x.fixes(i) && y.fixes(i));
        assert_eq!(x.common_fixed_point(&y).unwrap(), brute);
        assert!(!brute);

        assert!(p("(3 4)", 4).common_fixed_point(&p("(3 4)", 4)).unwrap());

        let b = p("(2 3)", 4);
        let c = p("(3 4)", 4);
        let brute = (1..=4).any(|i| b.fixes(i) && c.fixes(i));
        assert!(brute);
        assert_eq!(b.common_fixed_point(&c).unwrap(), brute);
    }

    #[test]
    fn rows_and_perms_correspond() {
        let g = p("(2 4 6 5 3)", 6);
        let row = Row::from_perm(&g);
        assert_eq!(row, Row::new(&[1, 3, 5, 2, 6, 4]).unwrap());
        assert_eq!(row.to_perm(), g);
        let next = Row::new(&[1, 5, 6, 3, 4, 2]).unwrap();
        assert_eq!(row.transition_to(&next).unwrap().apply_to_row(&row).unwrap(), next);
    }

    #[test]
    fn row_validation() {
        assert!(Row::new(&[1, 1, 2, 3]).is_err());
        assert!(Row::new(&[1, 2, 4]).is_err());
        assert!(Row::new(&[]).is_err());
    }
}
