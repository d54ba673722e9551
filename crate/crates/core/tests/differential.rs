//! Main code paths against the brute-force oracles.

use rand::Rng;

use expansion_cubes::complex::{
    cube_intersection, cube_vertices, degree, link_graph, moves_at, stabilizer, Cube,
};
use expansion_cubes::houghton::{Houghton, HoughtonElement};
use expansion_cubes::oracle::{
    brute_cube_intersection, brute_neighbor_count, brute_square_test, brute_stabilizer_order, random_cube_pair,
    random_vertex, random_vertex_of_height, Sample, Seed,
};
use expansion_cubes::thompson::{ball_vertex, PrefixMapTable, ThompsonV};
use expansion_cubes::ExpansionInstance;

fn square_vs_adjacency<I: Sample>(inst: &I, seed: Seed, samples: usize, height_bound: usize) {
    let mut rng = seed.rng();
    let mut adjacent = 0;
    for _ in 0..samples {
        let v = random_vertex(inst, &mut rng, height_bound);
        let link = link_graph(inst, &v);
        let i = rng.gen_range(0..link.len());
        let mut j = rng.gen_range(0..link.len());
        while link.len() > 1 && j == i {
            j = rng.gen_range(0..link.len());
        }
        if i == j {
            continue;
        }
        let square = brute_square_test(inst, &v, &link.moves[i], &link.moves[j]);
        assert_eq!(square, link.adjacency[i][j], "at {}", v.key());
        adjacent += square as usize;
    }
    assert!(adjacent > 0);
}

#[test]
fn square_exists_iff_basins_disjoint() {
    square_vs_adjacency(&ThompsonV, Seed(1), 1000, 5);
    square_vs_adjacency(&Houghton::new(2).unwrap(), Seed(2), 1000, 6);
}

#[test]
fn degree_matches_brute_force() {
    let mut rng = Seed(3).rng();
    for _ in 0..100 {
        let v = random_vertex(&ThompsonV, &mut rng, 7);
        assert_eq!(degree(&ThompsonV, &v), brute_neighbor_count(&ThompsonV, &v));
    }
    for n in 1..=3 {
        let h = Houghton::new(n).unwrap();
        for _ in 0..100 {
            let v = random_vertex(&h, &mut rng, n as usize + 6);
            let brute = brute_neighbor_count(&h, &v);
            assert_eq!(degree(&h, &v), brute);
            assert_eq!(moves_at(&h, &v).len(), brute);
        }
    }
}

#[test]
fn brute_neighbor_examples() {
    assert_eq!(brute_neighbor_count(&ThompsonV, &ThompsonV.base_vertex()), 1);
    assert_eq!(brute_neighbor_count(&ThompsonV, &ball_vertex(["00", "01", "1"]).unwrap()), 9);
}

/// Rays are unique per branch in a full-support vertex, so each of the `p`
/// points pairs with each of the `r = n` rays at most once.
#[test]
fn houghton_down_degree_is_at_most_points_times_rays() {
    let mut rng = Seed(4).rng();
    for n in 1..=3u32 {
        let h = Houghton::new(n).unwrap();
        for _ in 0..100 {
            let v = random_vertex(&h, &mut rng, n as usize + 6);
            let points = v.elements().iter().filter(|b| matches!(b, HoughtonElement::Point(_))).count();
            let rays = v.height() - points;
            assert_eq!(rays, n as usize);
            let down = moves_at(&h, &v).iter().filter(|m| !m.is_expansion()).count();
            assert!(down <= points * rays);
        }
        // on a standard vertex every (point, ray) pair on the ray's branch contracts
        let s = h.standard_vertex(&vec![3; n as usize]);
        let down = moves_at(&h, &s).iter().filter(|m| !m.is_expansion()).count();
        assert_eq!(down, 2 * n as usize * n as usize);
    }
}

fn intersections<I: Sample>(inst: &I, seed: Seed, height_bound: usize) {
    let mut rng = seed.rng();
    for _ in 0..200 {
        let (c, d) = random_cube_pair(inst, &mut rng, height_bound, 4);
        let brute = brute_cube_intersection(inst, &c, &d);
        let got = cube_intersection(inst, &c, &d).unwrap().map(|m| cube_vertices(inst, &m).unwrap());
        assert_eq!(got.unwrap_or_default(), brute);
    }
}

#[test]
fn cube_intersections_match_brute_force() {
    intersections(&ThompsonV, Seed(5), 6);
    intersections(&Houghton::new(2).unwrap(), Seed(6), 6);
    intersections(&Houghton::new(3).unwrap(), Seed(7), 7);
}

fn ball(w: &str) -> PrefixMapTable {
    PrefixMapTable::ball(w.parse().unwrap())
}

#[test]
fn three_ball_square_against_a_translate() {
    let square = Cube::new(&ThompsonV, ball_vertex(["0", "10", "11"]).unwrap(), vec![ball("0"), ball("10")]).unwrap();
    let translate =
        Cube::new(&ThompsonV, ball_vertex(["0", "100", "101", "11"]).unwrap(), vec![ball("0"), ball("11")]).unwrap();
    let shared = brute_cube_intersection(&ThompsonV, &square, &translate);
    assert_eq!(shared.len(), 2);
    let meet = cube_intersection(&ThompsonV, &square, &translate).unwrap().unwrap();
    assert_eq!(cube_vertices(&ThompsonV, &meet).unwrap(), shared);
    let far = Cube::new(&ThompsonV, ThompsonV.base_vertex(), vec![]).unwrap();
    assert!(brute_cube_intersection(&ThompsonV, &square, &far).is_empty());
}

#[test]
fn stabilizer_orders_match_permutation_assembly() {
    let mut rng = Seed(8).rng();
    for k in 1..=5 {
        let v = random_vertex_of_height(&ThompsonV, &mut rng, k);
        let order = stabilizer(&ThompsonV, &v).unwrap().len();
        assert_eq!(order, brute_stabilizer_order(&ThompsonV, &v));
        assert_eq!(order, (1..=k).product::<usize>());
    }
    let h = Houghton::new(2).unwrap();
    for k in 2..=6 {
        let v = random_vertex_of_height(&h, &mut rng, k);
        let points = k - 2;
        let order = stabilizer(&h, &v).unwrap().len();
        assert_eq!(order, brute_stabilizer_order(&h, &v));
        assert_eq!(order, (1..=points).product::<usize>());
    }
}
