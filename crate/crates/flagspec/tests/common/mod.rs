//! Shared test support: independent oracles and sampling helpers.
//!
//! The oracles here deliberately avoid the library's optimized code paths.
//! Dimensions come from Freudenthal's multiplicity recursion (not the Weyl
//! product formula), spectra from explicit enumeration of all 2^m sign
//! vectors (not the value-merging convolution), P¹ cohomology from the
//! closed-form Čech numbers, and Weyl orbits from a closure over explicit
//! reflection matrices.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::{Signed, ToPrimitive, Zero};

use flagspec::root_system::to_root_basis;
use flagspec::{
    FlagVariety, KahlerClass, LieType, LineBundleClass, Nat, PiScalar, Rat, Root, RootSystem,
    Weight,
};

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn rats(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&n| rat(n)).collect()
}

pub fn nat(n: u64) -> Nat {
    Nat::from(n)
}

/// Dominant representative under the plain (unshifted) Weyl action, by
/// greedy descent. Unlike the library's dominance walk this does not demand
/// regularity, so it also handles boundary weights.
pub fn plain_dominant(rs: &RootSystem, lambda: &Weight) -> Weight {
    let mut current = lambda.clone();
    loop {
        match current.coords().iter().position(|c| c.is_negative()) {
            Some(j) => current = rs.simple_reflection(j + 1, &current).unwrap(),
            None => return current,
        }
    }
}

/// Dimension of the irreducible module of highest weight λ by Freudenthal's
/// recursion: enumerate the weight box between λ and w₀λ, compute each
/// multiplicity from the multiplicities closer to λ, and add everything up.
pub fn freudenthal_dimension(rs: &RootSystem, lambda: &Weight) -> Nat {
    assert!(lambda.is_integral() && lambda.is_dominant());
    let lowest = -&plain_dominant(rs, &-lambda);
    let diff = lambda - &lowest;
    let box_bounds: Vec<usize> = to_root_basis(rs, &diff)
        .into_iter()
        .map(|c| {
            assert!(c.is_integer() && !c.is_negative());
            c.to_integer().to_usize().expect("weight box fits usize")
        })
        .collect();

    // All k-tuples with k_i ≤ bounds_i, ordered by total height so that
    // every multiplicity needed by the recursion is already known.
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for &b in &box_bounds {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..=b).map(move |k| {
                    let mut t2 = t.clone();
                    t2.push(k);
                    t2
                })
            })
            .collect();
    }
    tuples.sort_by_key(|t| t.iter().sum::<usize>());

    let delta = rs.weyl_vector();
    let lambda_shift = lambda + &delta;
    let top_norm = rs.inner_product(&lambda_shift, &lambda_shift);
    let root_weights: Vec<Weight> = rs
        .positive_roots()
        .iter()
        .map(|b| rs.root_as_weight(b))
        .collect();
    let root_norms: Vec<Rat> = root_weights
        .iter()
        .map(|bw| rs.inner_product(bw, bw))
        .collect();

    let mut mult: HashMap<Vec<usize>, Nat> = HashMap::new();
    let mut dim = Nat::zero();
    for tuple in &tuples {
        let height: usize = tuple.iter().sum();
        let m = if height == 0 {
            Nat::from(1u32)
        } else {
            let mut mu = lambda.clone();
            for (i, &k) in tuple.iter().enumerate() {
                if k > 0 {
                    let alpha = rs.root_as_weight(rs.simple_root(i + 1).unwrap());
                    mu = &mu - &alpha.scaled(&rat(k as i64));
                }
            }
            let mu_shift = &mu + &delta;
            let c = &top_norm - &rs.inner_product(&mu_shift, &mu_shift);
            if c.is_zero() {
                Nat::zero()
            } else {
                let mut s = Rat::zero();
                for (r, beta) in rs.positive_roots().iter().enumerate() {
                    let ip_mu_beta = rs.inner_product(&mu, &root_weights[r]);
                    let mut j = 1i64;
                    loop {
                        let mut above = tuple.clone();
                        let mut in_box = true;
                        for (i, &c_i) in beta.simple_coords().iter().enumerate() {
                            let step = (j * c_i) as usize;
                            if above[i] < step {
                                in_box = false;
                                break;
                            }
                            above[i] -= step;
                        }
                        if !in_box {
                            break;
                        }
                        let m_above = &mult[&above];
                        if !m_above.is_zero() {
                            // (μ + jβ, β) = (μ, β) + j·(β, β).
                            let pairing = &ip_mu_beta + rat(j) * &root_norms[r];
                            s += Rat::from_integer(m_above.clone().into()) * pairing;
                        }
                        j += 1;
                    }
                }
                let value = rat(2) * s / c;
                assert!(value.is_integer() && !value.is_negative());
                value
                    .to_integer()
                    .to_biguint()
                    .expect("multiplicity is non-negative")
            }
        };
        dim += &m;
        mult.insert(tuple.clone(), m);
    }
    dim
}

/// Weitzenböck eigenvalue multiset by explicit enumeration of all 2^m sign
/// vectors; only usable for small m.
pub fn brute_force_weitzenboeck(
    x: &FlagVariety,
    l: &LineBundleClass,
    omega: &KahlerClass,
) -> Vec<(PiScalar, Nat)> {
    let m = x.dim_c();
    assert!(m <= 22, "brute force limited to small dimensions");
    let l_weight = x.line_bundle_weight(l).unwrap();
    let omega_weight = x.kahler_weight(omega).unwrap();
    let power = if omega.pi_units() { 0 } else { 1 };

    let mut d = Vec::with_capacity(m);
    let mut lw = Vec::with_capacity(m);
    let mut w = Vec::with_capacity(m);
    for beta in x.radical_roots() {
        d.push(x.curve_pairing(x.canonical_weight(), beta).unwrap());
        lw.push(x.curve_pairing(&l_weight, beta).unwrap());
        w.push(x.curve_pairing(&omega_weight, beta).unwrap());
    }

    let mut table: BTreeMap<Rat, Nat> = BTreeMap::new();
    for mask in 0u64..(1u64 << m) {
        let mut sum = Rat::zero();
        for b in 0..m {
            let signed = if mask >> b & 1 == 1 {
                &d[b] + &lw[b]
            } else {
                &d[b] - &lw[b]
            };
            sum += signed / &w[b];
        }
        *table.entry(sum).or_insert_with(Nat::zero) += 1u32;
    }
    table
        .into_iter()
        .map(|(v, mult)| (PiScalar::new(v, power).unwrap(), mult))
        .collect()
}

/// Čech cohomology of O(d) on P¹: (h⁰, h¹) = (d+1, 0) for d ≥ 0, (0, −d−1)
/// for d ≤ −2, and (0, 0) for d = −1.
pub fn p1_cohomology(d: i64) -> (u64, u64) {
    if d >= 0 {
        ((d + 1) as u64, 0)
    } else if d == -1 {
        (0, 0)
    } else {
        (0, (-d - 1) as u64)
    }
}

/// Every element of the Weyl group as an integer matrix acting on
/// fundamental-weight coordinates, generated by closure from the simple
/// reflections. Exponential in general; meant for tiny ranks.
pub fn weyl_group_matrices(rs: &RootSystem) -> Vec<Vec<Vec<i64>>> {
    let n = rs.rank();
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    // s_i sends λ_j to λ_j − λ_i·A[j][i]: the identity minus column i of the
    // Cartan matrix placed in column i.
    let generators: Vec<Vec<Vec<i64>>> = (0..n)
        .map(|i| {
            let mut s = identity.clone();
            for j in 0..n {
                s[j][i] -= rs.cartan()[j][i];
            }
            s
        })
        .collect();
    let mul = |a: &[Vec<i64>], b: &[Vec<i64>]| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    };

    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
    let mut frontier = vec![identity.clone()];
    seen.insert(identity);
    while let Some(w) = frontier.pop() {
        for g in &generators {
            let next = mul(g, &w);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn apply_matrix(m: &[Vec<i64>], w: &Weight) -> Weight {
    let coords: Vec<Rat> = (0..m.len())
        .map(|i| {
            m[i].iter()
                .zip(w.coords())
                .map(|(&c, x)| rat(c) * x)
                .sum()
        })
        .collect();
    Weight::new(coords)
}

/// All admissible Lie types with rank ≤ `max_rank`.
pub fn admissible_types_up_to(max_rank: usize) -> Vec<LieType> {
    use flagspec::Family;
    let mut out = Vec::new();
    for (family, min_rank) in [
        (Family::A, 1),
        (Family::B, 2),
        (Family::C, 3),
        (Family::D, 4),
    ] {
        for rank in min_rank..=max_rank {
            out.push(LieType::new(family, rank).unwrap());
        }
    }
    for rank in 6..=8 {
        if rank <= max_rank {
            out.push(LieType::new(Family::E, rank).unwrap());
        }
    }
    if max_rank >= 4 {
        out.push(LieType::new(Family::F, 4).unwrap());
    }
    if max_rank >= 2 {
        out.push(LieType::new(Family::G, 2).unwrap());
    }
    out
}

/// All non-empty subsets of {1, ..., rank}.
pub fn painted_subsets(rank: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << rank))
        .map(|mask| {
            (1..=rank)
                .filter(|&node| mask >> (node - 1) & 1 == 1)
                .collect()
        })
        .collect()
}

/// The smallest non-negative line bundle compatible with the Spin^c parity
/// condition: the parity vector of δ_P itself.
pub fn canonical_parity_representative(x: &FlagVariety) -> LineBundleClass {
    LineBundleClass::new(
        x.spinc_parities()
            .iter()
            .map(|&p| i64::from(p).into())
            .collect(),
    )
}

pub fn build_flag(lie_type: LieType, painted: &[usize]) -> FlagVariety {
    FlagVariety::new(RootSystem::new(lie_type), painted).unwrap()
}

/// Keep a Root handle alive alongside its owning system when iterating.
pub fn radical_root_coords(x: &FlagVariety) -> Vec<Root> {
    x.radical_roots().cloned().collect()
}
