use subcount::abelian::{epi_count, HomologySignature};
use subcount::census::SubgroupCensus;
use subcount::classes::{census_table, count_classes};
use subcount::oracle::{
    oracle_count_classes, oracle_count_subgroups, oracle_epi_count, oracle_orientable_split,
};
use subcount::GroupKind;

const GRID: [(&str, u32); 6] = [
    ("free:2", 5),
    ("free:3", 4),
    ("orient:1", 5),
    ("orient:2", 4),
    ("nonorient:2", 5),
    ("nonorient:3", 4),
];

fn kind(s: &str) -> GroupKind {
    s.parse().unwrap()
}

#[test]
fn subgroup_counts_match_oracle() {
    for (s, max) in GRID {
        let census = SubgroupCensus::compute(kind(s), max).unwrap();
        for n in 1..=max {
            assert_eq!(oracle_count_subgroups(kind(s), n).unwrap(), *census.total(n), "{s} n={n}");
        }
    }
}

#[test]
fn class_counts_match_oracle() {
    for (s, max) in GRID {
        for n in 1..=max {
            assert_eq!(
                oracle_count_classes(kind(s), n).unwrap(),
                count_classes(kind(s), n).unwrap(),
                "{s} n={n}"
            );
        }
    }
}

#[test]
fn orientability_split_matches_oracle() {
    for p in 2..=3 {
        let census = SubgroupCensus::compute(GroupKind::nonorientable(p).unwrap(), 4).unwrap();
        for n in 1..=4 {
            let (plus, minus) = oracle_orientable_split(p, n).unwrap();
            assert_eq!(Some(&plus), census.orientable(n), "p={p} n={n}");
            assert_eq!(Some(minus), census.nonorientable(n), "p={p} n={n}");
        }
    }
}

#[test]
fn epi_counts_match_oracle() {
    let mut torsions = vec![vec![]];
    for a in 2..=4u64 {
        torsions.push(vec![a]);
        for b in a..=4 {
            torsions.push(vec![a, b]);
        }
    }
    for torsion in torsions {
        for rank in 0..=3 {
            let h = HomologySignature::new(torsion.clone(), rank).unwrap();
            for ell in 1..=12 {
                assert_eq!(oracle_epi_count(&h, ell).unwrap(), epi_count(&h, ell).unwrap(), "{h} l={ell}");
            }
        }
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let k = kind("nonorient:2");
    let (classes, split, table) = single.install(|| {
        (
            oracle_count_classes(k, 5).unwrap(),
            oracle_orientable_split(2, 5).unwrap(),
            census_table(k, 12).unwrap(),
        )
    });
    assert_eq!(classes, oracle_count_classes(k, 5).unwrap());
    assert_eq!(split, oracle_orientable_split(2, 5).unwrap());
    assert_eq!(table, census_table(k, 12).unwrap());
}

#[test]
fn larger_free_group_values() {
    // F_2 at degree 6: 720^2 tuples enumerated.
    let f2 = kind("free:2");
    assert_eq!(oracle_count_subgroups(f2, 6).unwrap(), 3447u32.into());
    assert_eq!(oracle_count_classes(f2, 6).unwrap(), count_classes(f2, 6).unwrap());
}
