use itertools::Itertools;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use richardson::lattice::{enumerate_pd, tableau_from_lattice, z_of};
use richardson::pluecker::{shuffle_relation, signed_coordinate, Monomial};
use richardson::straighten::{straighten_p1, straighten_p2};
use richardson::tableaux::{enumerate_invariant_tableaux, Tableau};
use richardson::{IndexTuple, PointMatrix, QuotientSetup};

const SETUPS: &[(usize, usize, &[usize])] = &[
    (2, 5, &[2]),
    (2, 5, &[3]),
    (3, 5, &[2, 4]),
    (3, 7, &[2, 5]),
    (3, 7, &[3, 5]),
    (2, 7, &[2]),
    (2, 7, &[3]),
    (2, 7, &[4]),
    (4, 9, &[2, 5, 7]),
];

fn setup() -> impl Strategy<Value = QuotientSetup> {
    (0..SETUPS.len()).prop_map(|k| {
        let (r, n, l) = SETUPS[k];
        QuotientSetup::new(r, n, l).unwrap()
    })
}

/// Any `r × width` grid with entries in `[1, n]`.
fn grid(r: usize, n: usize, width: usize) -> impl Strategy<Value = Tableau> {
    prop::collection::vec(prop::collection::vec(1..=n, width), r).prop_map(|g| Tableau::new(g).unwrap())
}

fn setup_and_two_grids() -> impl Strategy<Value = (QuotientSetup, Tableau, Tableau)> {
    setup().prop_flat_map(|s| {
        let (r, n) = (s.r(), s.n());
        (Just(s), (0usize..6, 0usize..6)).prop_flat_map(move |(s, (w1, w2))| (Just(s), grid(r, n, w1), grid(r, n, w2)))
    })
}

fn invariant_member() -> impl Strategy<Value = (QuotientSetup, usize, Tableau)> {
    (setup(), 1usize..=2).prop_flat_map(|(s, d)| {
        let st = enumerate_invariant_tableaux(&s, d);
        (Just(s), Just(d), prop::sample::select(st))
    })
}

/// Column-standard tableau whose row `i` lies in `range(i)`.
fn regime_tableau(s: &QuotientSetup, p1: bool, picks: &[usize]) -> Option<Tableau> {
    let cols: Vec<Vec<usize>> = (1..=s.r())
        .map(|i| if p1 { s.p1_range(i).iter() } else { s.p2_range(i).iter() })
        .multi_cartesian_product()
        .filter(|c| c.windows(2).all(|w| w[0] < w[1]))
        .collect();
    if cols.is_empty() {
        return None;
    }
    let chosen: Vec<Vec<usize>> = picks.iter().map(|&k| cols[k % cols.len()].clone()).collect();
    Some(Tableau::from_columns(s.r(), &chosen).unwrap())
}

fn matrix(r: usize, n: usize, seed: u64) -> PointMatrix {
    PointMatrix::random(r, n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn z_is_additive((s, g1, g2) in setup_and_two_grids()) {
        let prod = g1.product(&g2).unwrap();
        prop_assert_eq!(z_of(&prod, &s), z_of(&g1, &s).add(&z_of(&g2, &s)));
    }

    #[test]
    fn z_ignores_order_within_rows((s, g, _) in setup_and_two_grids(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shuffled: Vec<Vec<usize>> = g.grid().iter().map(|row| {
            let mut row = row.clone();
            row.shuffle(&mut rng);
            row
        }).collect();
        prop_assert_eq!(z_of(&Tableau::new(shuffled).unwrap(), &s), z_of(&g, &s));
    }

    #[test]
    fn weight_is_additive((s, g1, g2) in setup_and_two_grids()) {
        let n = s.n();
        let sum: Vec<usize> = g1.weight(n).iter().zip(g2.weight(n)).map(|(a, b)| a + b).collect();
        prop_assert_eq!(g1.product(&g2).unwrap().weight(n), sum);
    }

    #[test]
    fn split_then_product_is_identity((s, d, g) in invariant_member()) {
        let (g1, g2) = g.split(&s, d).unwrap();
        prop_assert_eq!(g1.cols(), s.r() * d);
        prop_assert!(g1.satisfies_p1(&s));
        prop_assert!(g2.satisfies_p2(&s));
        prop_assert_eq!(g1.product(&g2).unwrap(), g);
    }

    #[test]
    fn member_z_lands_in_pd((s, d, g) in invariant_member()) {
        let z = z_of(&g, &s);
        prop_assert!(z.in_pd(&s, d));
        prop_assert_eq!(tableau_from_lattice(&z, &s, d).unwrap(), g);
    }

    #[test]
    fn lattice_round_trip(k in 0usize..9, d in 1usize..=3, pick in any::<prop::sample::Index>()) {
        let (r, n, l) = SETUPS[k];
        let s = QuotientSetup::new(r, n, l).unwrap();
        let pd = enumerate_pd(&s, d);
        let z = pick.get(&pd);
        let g = tableau_from_lattice(z, &s, d).unwrap();
        prop_assert!(g.is_t_invariant(&s, d));
        prop_assert_eq!(&z_of(&g, &s), z);
    }

    #[test]
    fn p1_times_p2_is_semistandard(
        s in setup(),
        left in prop::collection::vec(any::<usize>(), 0..5),
        right in prop::collection::vec(any::<usize>(), 0..5),
    ) {
        let (Some(a), Some(b)) = (regime_tableau(&s, true, &left), regime_tableau(&s, false, &right)) else {
            return Ok(());
        };
        let a = straighten_p1(&a, &s).unwrap();
        let b = straighten_p2(&b, &s).unwrap();
        prop_assert!(a.is_semistandard());
        prop_assert!(b.is_semistandard());
        prop_assert!(a.product(&b).unwrap().is_semistandard());
    }

    #[test]
    fn straightening_sorts_rows(s in setup(), picks in prop::collection::vec(any::<usize>(), 1..6), p1 in any::<bool>()) {
        let Some(g) = regime_tableau(&s, p1, &picks) else { return Ok(()); };
        let out = if p1 { straighten_p1(&g, &s) } else { straighten_p2(&g, &s) }.unwrap();
        for i in 1..=s.r() {
            prop_assert_eq!(out.row(i).to_vec(), g.row(i).iter().copied().sorted().collect::<Vec<_>>());
        }
        prop_assert_eq!(z_of(&out, &s), z_of(&g, &s));
    }

    #[test]
    fn alternating_coordinates_match_minors(
        (r, n) in prop::sample::select(vec![(2usize, 4usize), (2, 5), (3, 6), (3, 7)]),
        seed in any::<u64>(),
        perm_seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let x = matrix(r, n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        let mut cols: Vec<usize> = (1..=n).collect();
        cols.shuffle(&mut rng);
        cols.truncate(r);
        let (sign, tau) = signed_coordinate(&cols).unwrap();
        prop_assert_eq!(x.minor_of_columns(&cols), sign * x.minor(&tau));

        let mut repeated = cols.clone();
        repeated[r - 1] = repeated[0];
        prop_assert!(signed_coordinate(&repeated).is_none());
        prop_assert_eq!(x.minor_of_columns(&repeated), 0);
    }

    #[test]
    fn monomial_evaluation_is_multiplicative(
        (r, n) in prop::sample::select(vec![(2usize, 5usize), (3, 7)]),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..5),
        split in any::<prop::sample::Index>(),
        seed in any::<u64>(),
    ) {
        let tuples = richardson::setup::all_index_tuples(r, n);
        let factors: Vec<IndexTuple> = picks.iter().map(|p| p.get(&tuples).clone()).collect();
        let cut = split.index(factors.len() + 1);
        let m1 = Monomial::new(factors[..cut].to_vec());
        let m2 = Monomial::new(factors[cut..].to_vec());
        let x = matrix(r, n, seed);
        let direct: BigInt = factors.iter().map(|t| BigInt::from(x.minor(t))).product();
        prop_assert_eq!(m1.mul(&m2).evaluate(&x), m1.evaluate(&x) * m2.evaluate(&x));
        prop_assert_eq!(m1.mul(&m2).evaluate(&x), direct);
    }

    #[test]
    fn shuffle_relations_vanish(
        (r, n) in prop::sample::select(vec![(2usize, 5usize), (3, 6), (3, 7), (4, 8)]),
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
        seed in any::<u64>(),
    ) {
        let tuples = richardson::setup::all_index_tuples(r, n);
        let (alpha, beta) = (a.get(&tuples), b.get(&tuples));
        let x = matrix(r, n, seed);
        for k in (1..=r).filter(|&k| alpha.at(k) > beta.at(k)) {
            let rel = shuffle_relation(alpha, beta, k).unwrap();
            prop_assert_eq!(rel.evaluate(&x), BigInt::from(0), "{} {} k={}", alpha, beta, k);
        }
    }

    #[test]
    fn setups_satisfy_invariants(n in 2usize..=14, r_pick in any::<prop::sample::Index>(), l_pick in any::<prop::sample::Index>()) {
        let rs: Vec<usize> = (1..n).filter(|&r| num_integer::gcd(r, n) == 1).collect();
        let r = *r_pick.get(&rs);
        let ls = QuotientSetup::admissible_ls(r, n);
        prop_assume!(!ls.is_empty());
        let s = QuotientSetup::new(r, n, l_pick.get(&ls)).unwrap();
        prop_assert!(s.invariant_violations().is_empty());
        prop_assert!(s.disjointness_violations().is_empty());
        prop_assert_eq!(s.coordinates().len(), s.block_sizes().iter().sum::<usize>());
    }
}
