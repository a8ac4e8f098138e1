//! Root systems of the finite simple Lie types, in Bourbaki numbering.
//!
//! The central object is [`RootSystem`]: the Cartan matrix of an admissible
//! [`LieType`], its full set of positive roots generated by closure from the
//! simple roots, the symmetrizer that turns the Cartan matrix into the
//! invariant form, and exact pairing operations between [`Weight`]s and
//! coroots.
//!
//! Two coordinate systems are in play and kept strictly apart:
//!
//! * a [`Root`] is an integer vector in the simple-root basis;
//! * a [`Weight`] is a rational vector in the fundamental-weight basis.
//!
//! The Cartan matrix is stored as `A[i][j] = ⟨α_j, α_i∨⟩`, which makes the
//! conversion from root coordinates `c` to weight coordinates the product
//! `A·c` (see [`RootSystem::root_as_weight`]).

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{rat, Rat};

/// The seven families of finite simple Lie types.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(format!("unknown Lie type family {other:?}")),
        }
    }
}

/// An admissible simple Lie type: a family together with a rank.
///
/// Admissibility bounds (`A_n` n≥1, `B_n` n≥2, `C_n` n≥3, `D_n` n≥4,
/// `E_6..E_8`, `F_4`, `G_2`) are enforced at construction, so low-rank
/// coincidences such as `B_1 ≅ A_1` or `C_2 ≅ B_2` have a single name.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reject = |reason| Error::InadmissibleType {
            family: family.letter(),
            rank,
            reason,
        };
        match family {
            Family::A if rank >= 1 => Ok(()),
            Family::A => Err(reject("rank must be at least 1")),
            Family::B if rank >= 2 => Ok(()),
            Family::B => Err(reject("rank must be at least 2 (B1 is A1)")),
            Family::C if rank >= 3 => Ok(()),
            Family::C => Err(reject("rank must be at least 3 (C2 is B2)")),
            Family::D if rank >= 4 => Ok(()),
            Family::D => Err(reject("rank must be at least 4 (D3 is A3)")),
            Family::E if (6..=8).contains(&rank) => Ok(()),
            Family::E => Err(reject("rank must be 6, 7 or 8")),
            Family::F if rank == 4 => Ok(()),
            Family::F => Err(reject("rank must be 4")),
            Family::G if rank == 2 => Ok(()),
            Family::G => Err(reject("rank must be 2")),
        }?;
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, by the classical closed forms.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Cartan matrix in the convention `A[i][j] = ⟨α_j, α_i∨⟩`, nodes in
    /// Bourbaki order (0-based internally).
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let bond = |i: usize, j: usize, aij: i64, aji: i64, a: &mut Vec<Vec<i64>>| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    bond(i, i + 1, -1, -1, &mut a);
                }
            }
            // α_n short: ⟨α_n, α_{n-1}∨⟩ = -1, ⟨α_{n-1}, α_n∨⟩ = -2.
            Family::B => {
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1, &mut a);
                }
                bond(n - 2, n - 1, -1, -2, &mut a);
            }
            // α_n long: transpose of the B_n double bond.
            Family::C => {
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1, &mut a);
                }
                bond(n - 2, n - 1, -2, -1, &mut a);
            }
            Family::D => {
                for i in 0..n - 3 {
                    bond(i, i + 1, -1, -1, &mut a);
                }
                bond(n - 3, n - 2, -1, -1, &mut a);
                bond(n - 3, n - 1, -1, -1, &mut a);
            }
            // Node 2 is the branch node, attached to node 4 of the chain
            // 1-3-4-5-6(-7)(-8).
            Family::E => {
                bond(0, 2, -1, -1, &mut a);
                bond(1, 3, -1, -1, &mut a);
                for i in 2..n - 1 {
                    bond(i, i + 1, -1, -1, &mut a);
                }
            }
            // Chain 1-2=3-4 with α_1, α_2 long and α_3, α_4 short.
            Family::F => {
                bond(0, 1, -1, -1, &mut a);
                bond(1, 2, -1, -2, &mut a);
                bond(2, 3, -1, -1, &mut a);
            }
            // α_1 short, α_2 long.
            Family::G => {
                bond(0, 1, -3, -1, &mut a);
            }
        }
        a
    }

    /// The symmetrizer `d_i = (α_i, α_i)/2` in the normalization where long
    /// roots have squared length 2, so `diag(d)·A` is the matrix of the
    /// invariant form on the simple roots.
    fn symmetrizer(&self) -> Vec<Rat> {
        let n = self.rank;
        let one = Rat::one;
        let half = || rat(1) / rat(2);
        match self.family {
            Family::A | Family::D | Family::E => vec![one(); n],
            Family::B => {
                let mut d = vec![one(); n];
                d[n - 1] = half();
                d
            }
            Family::C => {
                let mut d = vec![half(); n];
                d[n - 1] = one();
                d
            }
            Family::F => vec![one(), one(), half(), half()],
            Family::G => vec![rat(1) / rat(3), one()],
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root, stored as integer coordinates in the simple-root basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn simple_coords(&self) -> &[i64] {
        &self.coords
    }

    /// Sum of the simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A weight, stored as rational coordinates in the fundamental-weight basis.
///
/// The i-th coordinate of λ is the pairing `⟨λ, α_i∨⟩`, so dominance and
/// integrality are coordinate-wise conditions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| rat(c)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Rat::zero(); rank],
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// True if every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// True if every coordinate is ≥ 0.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// True if every coordinate is > 0.
    pub fn is_strictly_dominant(&self) -> bool {
        self.coords.iter().all(|c| c.is_positive())
    }

    pub fn scaled(&self, c: &Rat) -> Weight {
        Weight {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

/// A root system: Cartan data plus the generated positive roots and cached
/// exact pairing tables.
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rat>>,
    symmetrizer: Vec<Rat>,
    positive_roots: Vec<Root>,
    index_of: HashMap<Vec<i64>, usize>,
    /// Row r holds the coefficients of β_r∨ in the simple coroots, i.e.
    /// `⟨λ, β_r∨⟩ = Σ_j rows[r][j]·λ_j` for λ in fundamental-weight coords.
    coroot_rows: Vec<Vec<Rat>>,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let n = lie_type.rank();
        let cartan = lie_type.cartan_matrix();
        let symmetrizer = lie_type.symmetrizer();
        let cartan_rat: Vec<Vec<Rat>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| rat(x)).collect())
            .collect();
        let cartan_inv = invert(&cartan_rat);

        let positive_roots = generate_positive_roots(&cartan, n);
        assert_eq!(
            positive_roots.len(),
            lie_type.positive_root_count(),
            "positive-root closure disagrees with the closed-form count for {lie_type}"
        );

        let index_of = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), k))
            .collect();

        // (β,β)/2 = (1/2)·cᵀ·diag(d)·A·c, then β∨ = Σ_j c_j·(d_j / d_β)·α_j∨.
        let coroot_rows = positive_roots
            .iter()
            .map(|beta| {
                let c = &beta.coords;
                let mut norm = Rat::zero();
                for i in 0..n {
                    for j in 0..n {
                        norm += &symmetrizer[i] * rat(cartan[i][j] * c[i] * c[j]);
                    }
                }
                let d_beta = norm / rat(2);
                assert!(d_beta.is_positive(), "root of non-positive length");
                let row: Vec<Rat> = (0..n)
                    .map(|j| rat(c[j]) * &symmetrizer[j] / &d_beta)
                    .collect();
                debug_assert!(
                    row.iter().all(|x| x.is_integer()),
                    "coroot is not in the coroot lattice"
                );
                row
            })
            .collect();

        RootSystem {
            lie_type,
            cartan,
            cartan_inv,
            symmetrizer,
            positive_roots,
            index_of,
            coroot_rows,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    /// Cartan matrix, `A[i][j] = ⟨α_j, α_i∨⟩` (0-based rows/columns).
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrizer `d_i` with `diag(d)·A` symmetric positive definite and
    /// long roots of squared length 2.
    pub fn symmetrizer(&self) -> &[Rat] {
        &self.symmetrizer
    }

    /// All positive roots, ordered by height and deterministically within
    /// each height level; the first `rank` entries are α_1, ..., α_n.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The simple root α_i, `i` 1-based.
    pub fn simple_root(&self, i: usize) -> Result<&Root> {
        if i == 0 || i > self.rank() {
            return Err(Error::NodeOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(&self.positive_roots[i - 1])
    }

    /// Index of β in [`Self::positive_roots`], if it is a positive root here.
    pub fn root_index(&self, beta: &Root) -> Option<usize> {
        self.index_of.get(&beta.coords).copied()
    }

    /// β rewritten in fundamental-weight coordinates: the product `A·c`.
    pub fn root_as_weight(&self, beta: &Root) -> Weight {
        let n = self.rank();
        assert_eq!(beta.coords.len(), n, "root of wrong rank");
        let coords = (0..n)
            .map(|i| {
                rat((0..n)
                    .map(|j| self.cartan[i][j] * beta.coords[j])
                    .sum::<i64>())
            })
            .collect();
        Weight::new(coords)
    }

    /// Exact pairing `⟨λ, β∨⟩` of a weight with the coroot of a positive
    /// root of this system. For integral λ the result is an integer.
    pub fn coroot_pairing(&self, lambda: &Weight, beta: &Root) -> Result<Rat> {
        let idx = self
            .root_index(beta)
            .ok_or_else(|| Error::RootNotInSystem(beta.coords.clone()))?;
        Ok(self.coroot_pairing_by_index(lambda, idx))
    }

    pub(crate) fn coroot_pairing_by_index(&self, lambda: &Weight, idx: usize) -> Rat {
        assert_eq!(lambda.rank(), self.rank(), "weight of wrong rank");
        self.coroot_rows[idx]
            .iter()
            .zip(lambda.coords())
            .map(|(r, l)| r * l)
            .sum()
    }

    /// The minimal invariant form `⟨λ, μ⟩` (long roots squared length 2).
    ///
    /// With μ = Σ m_j α_j this is Σ_j m_j·d_j·λ_j, where m = A⁻¹·μ.
    pub fn inner_product(&self, lambda: &Weight, mu: &Weight) -> Rat {
        let n = self.rank();
        assert_eq!(lambda.rank(), n, "weight of wrong rank");
        assert_eq!(mu.rank(), n, "weight of wrong rank");
        let mut acc = Rat::zero();
        for j in 0..n {
            let mut m_j = Rat::zero();
            for k in 0..n {
                m_j += &self.cartan_inv[j][k] * &mu.coords()[k];
            }
            acc += m_j * &self.symmetrizer[j] * &lambda.coords()[j];
        }
        acc
    }

    /// δ⁺, the half-sum of the positive roots: all-ones in this basis.
    pub fn weyl_vector(&self) -> Weight {
        Weight::new(vec![Rat::one(); self.rank()])
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("lie_type", &self.lie_type)
            .field("positive_roots", &self.positive_roots.len())
            .finish()
    }
}

/// Closure generation: grow root strings upward from the simple roots.
/// β + α_i is a root iff q = p − ⟨β, α_i∨⟩ > 0, where p is the number of
/// steps the α_i-string through β extends downward.
fn generate_positive_roots(cartan: &[Vec<i64>], n: usize) -> Vec<Root> {
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        found.insert(e.clone());
        level.push(e);
    }
    let mut all: Vec<Vec<i64>> = level.clone();

    while !level.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !found.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !found.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        // Descending lexicographic order keeps the simple roots in natural
        // order at height 1 and is deterministic at every height.
        level = next.into_iter().rev().collect();
        for r in &level {
            found.insert(r.clone());
        }
        all.extend(level.iter().cloned());
    }

    all.into_iter().map(Root::new).collect()
}

/// Exact inverse of a small rational matrix by Gauss–Jordan elimination.
fn invert(mat: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = mat.len();
    let mut a: Vec<Vec<Rat>> = mat.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (ac, ic) = (a[col][j].clone(), inv[col][j].clone());
                    a[r][j] -= ac * &f;
                    inv[r][j] -= ic * &f;
                }
            }
        }
    }
    inv
}

/// Convert a weight in fundamental-weight coordinates to simple-root
/// coordinates (the product A⁻¹·λ); used by consumers that need to read off
/// root-basis coefficients exactly.
pub fn to_root_basis(rs: &RootSystem, lambda: &Weight) -> Vec<Rat> {
    let n = rs.rank();
    assert_eq!(lambda.rank(), n, "weight of wrong rank");
    (0..n)
        .map(|j| {
            let mut acc = Rat::zero();
            for k in 0..n {
                acc += &rs.cartan_inv[j][k] * &lambda.coords()[k];
            }
            acc
        })
        .collect()
}
