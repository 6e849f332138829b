use num_rational::Rational64;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use bscone::betti::{
    eval_functional, make_pure_diagram, BettiTable, DegreeSequence, FunctionalId, TailMode,
};
use bscone::cone::{check_graded, check_local, comparable, decompose, BettiSequence, Verdict};
use bscone::format::{parse_table, print_table};
use bscone::{Rational, Scalar, Table};

fn degseq() -> impl Strategy<Value = DegreeSequence> {
    (-5i64..=10, 1i64..=6, 0u8..3).prop_map(|(d0, gap, shape)| match shape {
        0 => DegreeSequence::free(d0),
        1 => DegreeSequence::two_step(d0, d0 + gap).unwrap(),
        _ => DegreeSequence::tail(d0, d0 + gap).unwrap(),
    })
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (1i64..=30, 1i64..=8).prop_map(|(n, d)| Rational::from_frac(n, d))
}

/// Nonnegative combination of up to 6 pure diagrams.
fn cone_point() -> impl Strategy<Value = Table> {
    prop::collection::vec((degseq(), coefficient()), 0..=6).prop_map(|terms| {
        terms.into_iter().fold(Table::canonical(), |acc, (d, c)| {
            acc.add_scaled(&c, make_pure_diagram::<Rational>(d).table())
                .unwrap()
        })
    })
}

/// Arbitrary canonical table with small signed entries.
fn any_table() -> impl Strategy<Value = Table> {
    prop::collection::vec((0usize..3, -4i64..=6, -3i64..=9), 0..10).prop_map(|entries| {
        let mut t = Table::canonical();
        for (i, j, x) in entries {
            t.set(i, j, Rational::from_int(x)).unwrap();
        }
        t
    })
}

proptest! {
    #[test]
    fn gamma_inf_is_linear(a in any_table(), b in any_table(), u in -5i64..=5, v in -5i64..=5) {
        let (u, v) = (Rational::from_int(u), Rational::from_int(v));
        let combo = a.scale(&u).add_scaled(&v, &b).unwrap();
        let lhs = eval_functional(FunctionalId::GammaInf, &combo);
        let rhs = u * eval_functional(FunctionalId::GammaInf, &a)
            + v * eval_functional(FunctionalId::GammaInf, &b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn decomposition_round_trips(v in cone_point()) {
        let d = decompose(&v).unwrap();
        prop_assert_eq!(d.recombine(), v);
        prop_assert!(d.terms.iter().all(|(_, c)| c.is_positive()));
    }

    #[test]
    fn decomposition_is_a_chain(v in cone_point()) {
        let seqs: Vec<_> = decompose(&v).unwrap().degree_sequences().collect();
        for (k, a) in seqs.iter().enumerate() {
            for b in &seqs[k + 1..] {
                prop_assert!(comparable(a, b), "{} vs {}", a, b);
            }
        }
    }

    #[test]
    fn certificates_are_sound(v in any_table()) {
        match check_graded(&v) {
            Verdict::Member(d) => prop_assert_eq!(d.recombine(), v),
            Verdict::NotMember { functional, value } => {
                prop_assert!(value.is_negative());
                prop_assert_eq!(eval_functional(functional, &v), value);
            }
        }
    }

    #[test]
    fn local_cone_matches_linear_tables(b0 in 0i64..=8, b1 in 0i64..=8, b2 in 0i64..=16) {
        // a table on the diagonal (0,0), (1,1), (2,2) meets exactly the local inequalities
        let t = Table::from_ints(TailMode::Canonical, [(0, 0, b0), (1, 1, b1), (2, 2, b2)]).unwrap();
        let s = BettiSequence::<Rational>::from_ints(b0, b1, b2);
        prop_assert_eq!(check_graded(&t).is_member(), check_local(&s, false).is_member());
    }

    #[test]
    fn table_files_round_trip(v in any_table(), explicit in any::<bool>()) {
        let v = if explicit { v.to_explicit(4) } else { v };
        let text = print_table(&v);
        prop_assert_eq!(parse_table::<Rational>(&text).unwrap(), v);
    }

    #[test]
    fn small_scalars_agree_with_big_rationals(v in cone_point()) {
        // the same table in Ratio<i64> decomposes the same way
        let small: BettiTable<Rational64> = BettiTable::from_entries(
            TailMode::Canonical,
            v.iter().map(|(i, j, x)| (i, j, Rational64::from_rational(x).unwrap())),
        )
        .unwrap();
        let big = decompose(&v).unwrap();
        let little = decompose(&small).unwrap();
        prop_assert_eq!(big.terms.len(), little.terms.len());
        for ((d, c), (e, s)) in big.terms.iter().zip(&little.terms) {
            prop_assert_eq!(d, e);
            prop_assert_eq!(c, &s.to_rational());
        }
    }

    #[test]
    fn scaling_preserves_membership(v in any_table(), c in coefficient()) {
        prop_assert_eq!(check_graded(&v).is_member(), check_graded(&v.scale(&c)).is_member());
        prop_assert!(check_graded(&v.scale(&Rational::zero())).is_member());
    }
}
