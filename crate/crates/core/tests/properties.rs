use genchar::group_algebra::Tableau;
use genchar::table_file::TableFile;
use genchar::{
    build_table, covering_pairs, gen_char_from_tableau, gen_char_via_travis, phi_sfs, phi_sfs_embedded, point_stabilizer,
    Partition, Permutation,
};
use proptest::prelude::*;
use proptest::sample::{select, Index};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

fn fixing_one(n: usize) -> impl Strategy<Value = Permutation> {
    Just((2..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|rest| {
        let mut images = vec![1];
        images.extend(rest);
        Permutation::from_images(&images).unwrap()
    })
}

fn pair(n: usize) -> impl Strategy<Value = (Partition, Partition)> {
    select(covering_pairs(n).unwrap())
}

proptest! {
    #[test]
    fn sign_is_multiplicative((a, b) in (1usize..=8).prop_flat_map(|n| (permutation(n), permutation(n)))) {
        prop_assert_eq!(a.compose(&b).unwrap().sign(), a.sign() * b.sign());
    }

    #[test]
    fn cycle_notation_round_trips(p in (1usize..=9).prop_flat_map(permutation)) {
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse_with_degree(&text, p.degree()).unwrap(), p);
    }

    #[test]
    fn marked_class_is_stabilizer_invariant(
        (theta, pi) in (1usize..=7).prop_flat_map(|n| (permutation(n), fixing_one(n)))
    ) {
        let conj = theta.conjugate_by(&pi).unwrap();
        prop_assert_eq!(conj.marked_class(), theta.marked_class());
        prop_assert_eq!(conj.marked_class().representative().marked_class(), theta.marked_class());
    }

    #[test]
    fn phi_is_constant_on_marked_classes(
        ((lam, mu), theta, pi) in (2usize..=6).prop_flat_map(|n| (pair(n), permutation(n), fixing_one(n)))
    ) {
        let conj = theta.conjugate_by(&pi).unwrap();
        prop_assert_eq!(phi_sfs(&lam, &mu, &theta).unwrap(), phi_sfs(&lam, &mu, &conj).unwrap());
    }

    #[test]
    fn phi_ignores_embedding_degree(
        ((lam, mu), theta, pad) in (2usize..=5).prop_flat_map(|n| (pair(n), permutation(n), any::<Index>()))
    ) {
        let (l, _) = theta.minimal_embedding();
        let n = lam.n();
        let chosen = l + pad.index(n - l + 1);
        prop_assert_eq!(
            phi_sfs_embedded(&lam, &mu, &theta, chosen).unwrap(),
            phi_sfs(&lam, &mu, &theta).unwrap()
        );
    }

    #[test]
    fn phi_denominator_divides_normalizer(
        ((lam, mu), theta) in (2usize..=7).prop_flat_map(|n| (pair(n), permutation(n)))
    ) {
        let (l, _) = theta.minimal_embedding();
        let v = phi_sfs(&lam, &mu, &theta).unwrap();
        let normalizer = genchar::falling_factorial(lam.n() as i64 - 1, l - 1);
        let den: i64 = v.denom().try_into().unwrap();
        prop_assert_eq!(normalizer % den, 0);
    }

    #[test]
    fn travis_average_ignores_the_rest_of_the_tableau(
        ((lam, mu), pi) in (2usize..=5).prop_flat_map(|n| (pair(n), fixing_one(n)))
    ) {
        // relabel 2..=n of the canonical tableau; 1 stays in the removed cell
        let t = Tableau::canonical(&lam, &mu).unwrap().act(&pi);
        prop_assert_eq!(gen_char_from_tableau(&t).unwrap(), gen_char_via_travis(&lam, &mu).unwrap());
    }
}

#[test]
fn travis_average_is_stabilizer_invariant() {
    for n in 2..=5 {
        for (lam, mu) in covering_pairs(n).unwrap() {
            let phi = gen_char_via_travis(&lam, &mu).unwrap();
            for pi in point_stabilizer(n) {
                assert_eq!(phi.conjugate_by(&pi).unwrap(), phi);
            }
        }
    }
}

#[test]
fn table_json_round_trip_is_byte_stable() {
    for n in 2..=6 {
        let table = build_table(n).unwrap();
        let json = TableFile::from_table(&table).to_json();
        let parsed = TableFile::from_json(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
        assert_eq!(parsed.to_table().unwrap(), table);
    }
}
