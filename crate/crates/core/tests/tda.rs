use philotope::embedding::PointCloud;
use philotope::synthetic::{sample, Shape};
use philotope::tda::{
    format_diagrams, h0_single_linkage, parse_diagrams, persistence_diagram, reduce, reduce_with,
    rips_diagrams, vietoris_rips, DiagramPoint, DistanceMatrix, Filtration, Metric,
    PersistenceDiagram, ReductionOptions, Simplex,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[path = "fixtures/topology.rs"]
mod topology;

fn random_cloud(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> PointCloud<f64> {
    let pts = (0..n)
        .map(|_| (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect();
    PointCloud::unlabelled(pts).unwrap()
}

/// Symmetric matrix of random weights; need not satisfy the triangle inequality.
fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> DistanceMatrix<f64> {
    DistanceMatrix::from_fn(n, |_, _| rng.random_range(0.0..1.0)).unwrap()
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect()
}

#[test]
fn rips_matches_clique_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let dm = random_weights(&mut rng, 8);
        let threshold = rng.random_range(0.3..1.0);
        let f = vietoris_rips(&dm, 3, threshold);
        let mut expected = Vec::new();
        for size in 1..=4 {
            for s in subsets(8, size) {
                let value = s
                    .iter()
                    .flat_map(|&i| s.iter().map(move |&j| (i, j)))
                    .map(|(i, j)| dm.get(i, j))
                    .fold(0.0, f64::max);
                if value <= threshold {
                    expected.push((s, value));
                }
            }
        }
        let mut got: Vec<(Vec<usize>, f64)> = f
            .simplices()
            .iter()
            .map(|fs| (fs.simplex.vertices().to_vec(), fs.value))
            .collect();
        assert_eq!(got.len(), expected.len());
        // Filtration order: by value, then dimension.
        for w in got.windows(2) {
            assert!((w[0].1, w[0].0.len()) <= (w[1].1, w[1].0.len()));
        }
        got.sort_by(|a, b| a.0.cmp(&b.0));
        expected.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(got, expected);
    }
}

/// Textbook reduction on a dense boolean matrix: while some earlier
/// column shares the lowest one, add it.
fn naive_pairs(f: &Filtration<f64>) -> (Vec<(usize, usize)>, Vec<usize>) {
    let n = f.len();
    let index = f.index();
    let mut cols: Vec<Vec<bool>> = f
        .simplices()
        .iter()
        .map(|fs| {
            let mut c = vec![false; n];
            if fs.simplex.dim() > 0 {
                for face in fs.simplex.facets() {
                    c[index[&face]] = true;
                }
            }
            c
        })
        .collect();
    let low = |c: &Vec<bool>| c.iter().rposition(|&b| b);
    for j in 0..n {
        loop {
            let Some(l) = low(&cols[j]) else { break };
            let Some(k) = (0..j).find(|&k| low(&cols[k]) == Some(l)) else {
                break;
            };
            let add = cols[k].clone();
            for (x, y) in cols[j].iter_mut().zip(add) {
                *x ^= y;
            }
        }
    }
    let mut pairs = Vec::new();
    let mut paired = vec![false; n];
    for (j, c) in cols.iter().enumerate() {
        if let Some(i) = low(c) {
            pairs.push((i, j));
            paired[i] = true;
            paired[j] = true;
        }
    }
    let unpaired = (0..n).filter(|&i| !paired[i]).collect();
    (pairs, unpaired)
}

#[test]
fn reduction_matches_naive_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for trial in 0..30 {
        let cloud = random_cloud(&mut rng, 10, 3);
        let dm = DistanceMatrix::from_cloud(&cloud, Metric::Euclidean).unwrap();
        let f = vietoris_rips(&dm, 3, f64::INFINITY);
        let (mut pairs, unpaired) = naive_pairs(&f);
        pairs.sort();
        for clearing in [false, true] {
            let p = reduce_with(&f, ReductionOptions { clearing });
            let mut got = p.pairs.clone();
            got.sort();
            // Clearing skips columns that the naive run reduces to zero;
            // the top dimension is not cleared, so compare below it.
            let below_top = |&(b, _): &(usize, usize)| f.get(b).simplex.dim() < 3;
            let want: Vec<_> = pairs.iter().copied().filter(below_top).collect();
            let got: Vec<_> = got.into_iter().filter(below_top).collect();
            assert_eq!(got, want, "trial {trial}, clearing {clearing}");
            for d in 0..=2 {
                let ours = persistence_diagram(&f, &p, d);
                let naive = PersistenceDiagram::new(
                    d,
                    pairs
                        .iter()
                        .filter(|&&(b, _)| f.get(b).simplex.dim() == d)
                        .map(|&(b, k)| DiagramPoint { birth: f.get(b).value, death: f.get(k).value })
                        .chain(
                            unpaired
                                .iter()
                                .filter(|&&b| f.get(b).simplex.dim() == d)
                                .map(|&b| DiagramPoint { birth: f.get(b).value, death: f64::INFINITY }),
                        )
                        .collect(),
                );
                assert!(ours.same_multiset(&naive), "trial {trial} dim {d}");
            }
        }
    }
}

#[test]
fn h0_union_find_equals_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..200 {
        let n = rng.random_range(1..=50);
        let dm = match i % 3 {
            0 => DistanceMatrix::from_cloud(&random_cloud(&mut rng, n, 4), Metric::Euclidean).unwrap(),
            1 => DistanceMatrix::from_cloud(&random_cloud(&mut rng, n, 4), Metric::Cosine).unwrap(),
            _ => random_weights(&mut rng, n),
        };
        let f = vietoris_rips(&dm, 1, f64::INFINITY);
        let by_reduction = persistence_diagram(&f, &reduce(&f), 0);
        assert!(h0_single_linkage(&dm).same_multiset(&by_reduction), "cloud {i}");
    }
}

/// Rank over Z_2 of vectors stored as bitsets.
fn rank_gf2(mut rows: Vec<u128>) -> usize {
    let mut rank = 0;
    for bit in (0..128).rev() {
        let Some(p) = rows.iter().position(|&r| r >> bit & 1 == 1) else { continue };
        let pivot = rows.swap_remove(p);
        for r in rows.iter_mut() {
            if *r >> bit & 1 == 1 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Betti number of the subcomplex with values `<= a`, as
/// `#k-simplices - rank ∂_k - rank ∂_{k+1}`.
fn betti_by_rank(f: &Filtration<f64>, k: usize, a: f64) -> usize {
    let live: Vec<&Simplex> = f
        .simplices()
        .iter()
        .filter(|s| s.value <= a)
        .map(|s| &s.simplex)
        .collect();
    let of_dim = |d: usize| live.iter().copied().filter(move |s| s.dim() == d);
    let boundary_rank = |d: usize| {
        if d == 0 {
            return 0;
        }
        let faces: Vec<&Simplex> = of_dim(d - 1).collect();
        let rows = of_dim(d)
            .map(|s| {
                s.facets()
                    .map(|fc| 1u128 << faces.iter().position(|x| **x == fc).unwrap())
                    .fold(0, |acc, b| acc | b)
            })
            .collect();
        rank_gf2(rows)
    };
    of_dim(k).count() - boundary_rank(k) - boundary_rank(k + 1)
}

#[test]
fn betti_numbers_match_rank_computation() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..25 {
        let cloud = random_cloud(&mut rng, 9, 2);
        let dm = DistanceMatrix::from_cloud(&cloud, Metric::Euclidean).unwrap();
        let f = vietoris_rips(&dm, 2, f64::INFINITY);
        let p = reduce(&f);
        let dgms: Vec<_> = (0..=1).map(|d| persistence_diagram(&f, &p, d)).collect();
        let values: Vec<f64> = f.simplices().iter().map(|s| s.value).collect();
        for &a in &values {
            for (k, dgm) in dgms.iter().enumerate() {
                assert_eq!(dgm.betti_at(a), betti_by_rank(&f, k, a), "k={k} a={a}");
            }
        }
    }
}

#[test]
fn circle_has_one_loop() {
    let cloud = sample::<f64>(Shape::Circle, 60, 0.0, 1);
    let dm = DistanceMatrix::from_cloud(&cloud, Metric::Euclidean).unwrap();
    let d = rips_diagrams(&dm, 1, 2.0).unwrap();
    assert_eq!(d[0].essential().count(), 1);
    let pers = d[1].persistences_desc();
    assert!(pers[0] > 1.0);
    assert!(pers.get(1).map_or(true, |&p| p < 0.2 * pers[0]));
    assert!(rips_diagrams(&dm, 1, f64::INFINITY).is_err());
}

#[test]
fn synthetic_shapes_have_their_loops() {
    for seed in 1..=3 {
        let circle = topology::h1_persistences(Shape::Circle, seed);
        assert!(circle[0] > 3.0 * circle.get(1).copied().unwrap_or(0.0), "circle {seed}: {circle:?}");
        let noisy = topology::h1_persistences(Shape::NoisyCircle, seed);
        assert_eq!(topology::dominant(&noisy, 0.25), 1, "noisy {seed}: {noisy:?}");
        let two = topology::h1_persistences(Shape::TwoCircles, seed);
        assert_eq!(topology::dominant(&two, 0.25), 2, "two circles {seed}: {two:?}");
    }
    assert_eq!(
        topology::h1_persistences(Shape::NoisyCircle, 9),
        topology::h1_persistences(Shape::NoisyCircle, 9)
    );
}

#[test]
fn diagram_file_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let dm = DistanceMatrix::from_cloud(&random_cloud(&mut rng, 12, 2), Metric::Euclidean).unwrap();
    let d = rips_diagrams(&dm, 1, 10.0).unwrap();
    let header = vec![("metric".to_string(), "euclidean".to_string())];
    let text = format_diagrams(&header, &d);
    let parsed = parse_diagrams::<f64>(&text).unwrap();
    assert_eq!(parsed.header, header);
    for k in 0..=1 {
        assert_eq!(parsed.diagram(k).points, d[k].points);
    }
    assert!(parse_diagrams::<f64>("0 1\n").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn diagrams_invariant_under_point_permutation(seed in any::<u64>(), n in 2usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dm = DistanceMatrix::from_cloud(&random_cloud(&mut rng, n, 3), Metric::Euclidean).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        let a = rips_diagrams(&dm, 1, 10.0).unwrap();
        let b = rips_diagrams(&dm.permuted(&perm), 1, 10.0).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!(x.same_multiset(y));
        }
    }

    #[test]
    fn h0_births_zero_and_one_essential(seed in any::<u64>(), n in 1usize..40) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = h0_single_linkage(&random_weights(&mut rng, n));
        prop_assert_eq!(d.len(), n);
        prop_assert_eq!(d.essential().count(), 1);
        prop_assert!(d.points.iter().all(|p| p.birth == 0.0));
    }
}
