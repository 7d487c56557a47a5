use ibox_core::chain::{connect, route};
use ibox_core::laurent::{Laurent, TERM_CAP};
use ibox_core::seed::SeedContext;
use ibox_core::{AdmissibleSeq, Chain, Interval, Orientation, RootData, Seed, Step, TypeLabel};
use proptest::prelude::*;

fn seq(label: &str) -> AdmissibleSeq {
    let r = RootData::new(label.parse::<TypeLabel>().unwrap());
    AdmissibleSeq::from_quiver(&r, &Orientation::bipartite(&r)).unwrap()
}

fn chain_strategy(max_len: usize) -> impl Strategy<Value = Chain> {
    (-20i64..20, prop::collection::vec(any::<bool>(), 0..max_len)).prop_map(|(start, bits)| {
        Chain::new(start, bits.into_iter().map(|b| if b { Step::R } else { Step::L }).collect())
    })
}

proptest! {
    #[test]
    fn succ_and_pred_are_inverse(label in prop::sample::select(vec!["A2", "A3", "D4", "E6"]), k in -20i64..20) {
        let s = seq(label);
        prop_assert_eq!(s.pred(s.succ(k).unwrap()).unwrap(), k);
        prop_assert_eq!(s.succ(s.pred(k).unwrap()).unwrap(), k);
        let j = s.color(k + 1).unwrap();
        prop_assert!(s.succ_color(k, j).unwrap() >= k);
        prop_assert!(s.pred_color(k, j).unwrap() <= k);
    }

    #[test]
    fn box_moves_are_involutions(chain in chain_strategy(12)) {
        for s in chain.movable_positions() {
            let moved = chain.box_move(s).unwrap();
            prop_assert_eq!(moved.range(), chain.range());
            prop_assert!(moved.is_movable(s));
            prop_assert_eq!(moved.box_move(s).unwrap(), chain.clone());
        }
        for k in 1..=chain.len() {
            prop_assert_eq!(chain.envelope(k).unwrap().len(), k);
        }
    }

    #[test]
    fn routes_reach_their_target(a in chain_strategy(10), bits in prop::collection::vec(any::<bool>(), 0..10)) {
        let pattern: Vec<Step> = bits.iter().take(a.len() - 1).map(|&b| if b { Step::R } else { Step::L })
            .chain(std::iter::repeat(Step::L)).take(a.len() - 1).collect();
        let b = Chain::with_range(a.range(), pattern).unwrap();
        for path in [connect(&a, &b).unwrap(), route(&a, &b).unwrap()] {
            let end = path.iter().fold(a.clone(), |c, &s| c.box_move(s).unwrap());
            prop_assert_eq!(&end, &b);
        }
    }

    #[test]
    fn transported_seeds_stay_admissible(bits in prop::collection::vec(any::<bool>(), 1..9)) {
        let ctx = SeedContext::new(seq("A3"));
        let range = Interval::new(-(bits.len() as i64), 0);
        let chain = Chain::with_range(range, bits.iter().map(|&b| if b { Step::R } else { Step::L }).collect()).unwrap();
        let seed = Seed::for_chain(&ctx, &chain).unwrap();
        prop_assert!(seed.check_lambda_admissible().holds());
        for k in seed.exchangeable() {
            let back = seed.mutate(&ctx, k).unwrap().mutate(&ctx, k).unwrap();
            prop_assert!(back.same_data(&seed));
        }
    }

    #[test]
    fn laurent_division_round_trips(
        p in prop::collection::vec((prop::collection::vec(-2i32..3, 3), -4i64..5), 1..5),
        q in prop::collection::vec((prop::collection::vec(-2i32..3, 3), -4i64..5), 1..5),
    ) {
        let build = |terms: &[(Vec<i32>, i64)]| terms.iter().fold(Laurent::zero(3), |acc, (e, c)| {
            acc.add(&Laurent::monomial(e.clone(), *c)).unwrap()
        });
        let (p, q) = (build(&p), build(&q));
        prop_assume!(!q.is_zero());
        let prod = p.mul(&q, TERM_CAP).unwrap();
        prop_assert_eq!(prod.exact_div(&q, TERM_CAP).unwrap(), p);
    }
}
