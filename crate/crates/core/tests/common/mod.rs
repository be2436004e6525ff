#![allow(dead_code)]

use monomial_crystal::monomial::LatticePoint;
use monomial_crystal::typea::{Partition, PartitionSequence};
use monomial_crystal::{GroupAlgebraElement, PointMultiset, RootDatum, ThresholdSet, Weight};
use rand::seq::SliceRandom;
use rand::Rng;

/// A point of the right parity with level in `lo..=hi` (roughly).
pub fn random_point<R: Rng>(rng: &mut R, datum: &RootDatum, lo: i64, hi: i64) -> LatticePoint {
    let i = rng.gen_range(1..=datum.num_vertices());
    let mut c = rng.gen_range(lo..=hi);
    if (c - datum.parity(i)).rem_euclid(2) != 0 {
        c += 1;
    }
    LatticePoint::new(datum, i, c).expect("parity fixed")
}

/// Total cardinality at most `max_card`, each multiplicity at most `max_mult`.
pub fn random_multiset<R: Rng>(rng: &mut R, datum: &RootDatum, max_card: u64, max_mult: u64) -> PointMultiset {
    let card = rng.gen_range(0..=max_card);
    let mut r = PointMultiset::new();
    while r.cardinality() < card {
        let p = random_point(rng, datum, -2, 4);
        let room = (card - r.cardinality()).min(max_mult - r.get(p).min(max_mult));
        if room == 0 {
            continue;
        }
        r.insert(p, rng.gen_range(1..=room));
    }
    r
}

/// `up(Supp R ∪ extra)` for up to two extra random points.
pub fn random_upset<R: Rng>(rng: &mut R, datum: &RootDatum, r: &PointMultiset) -> ThresholdSet {
    let mut pts: Vec<LatticePoint> = r.support().into_iter().collect();
    for _ in 0..rng.gen_range(0..=2) {
        pts.push(random_point(rng, datum, -3, 3));
    }
    ThresholdSet::up_closure(datum, pts).expect("valid points")
}

pub fn random_element<R: Rng>(rng: &mut R, datum: &RootDatum, terms: usize, range: i64) -> GroupAlgebraElement {
    (0..terms)
        .map(|_| {
            let w = Weight((0..datum.lattice_rank()).map(|_| rng.gen_range(-range..=range)).collect());
            (w, rng.gen_range(-3..=3))
        })
        .collect()
}

/// Entry `i` has at most `i` parts and at most `max_boxes` boxes.
pub fn random_sequence<R: Rng>(rng: &mut R, max_len: usize, max_boxes: usize) -> PartitionSequence {
    let len = rng.gen_range(1..=max_len);
    let parts: Vec<Partition> = (1..=len)
        .map(|i| {
            let size = rng.gen_range(0..=max_boxes);
            let fits: Vec<Partition> = Partition::all_of_size(size).into_iter().filter(|p| p.length() <= i).collect();
            fits.choose(rng).cloned().unwrap_or_else(Partition::empty)
        })
        .collect();
    PartitionSequence::new(parts).expect("lengths respected")
}

pub fn small_datums() -> Vec<RootDatum> {
    vec![
        RootDatum::parse("A", 1).unwrap(),
        RootDatum::parse("A", 2).unwrap(),
        RootDatum::parse("A", 3).unwrap(),
        RootDatum::parse("A", 4).unwrap(),
        RootDatum::parse("D", 4).unwrap(),
    ]
}
