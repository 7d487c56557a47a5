//! The Λ closed form is pinned by requiring `ΛB̃ = -2I` on canonical seeds:
//! among the candidate variants exactly one passes in A1, A2 and A3.

use ibox_core::invariants::{lambda_monomials_with, LambdaVariant};
use ibox_core::seed::SeedContext;
use ibox_core::{AdmissibleSeq, Interval, IntMatrix, Orientation, RootData, Seed, TypeLabel};

fn admissible_with(ctx: &SeedContext, seed: &Seed, v: LambdaVariant) -> bool {
    let n = seed.len();
    let mut lambda = IntMatrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            let (x, y) = (&seed.labels()[j].highest, &seed.labels()[k].highest);
            lambda[(j, k)] = lambda_monomials_with(ctx.series(), v, x, y).unwrap();
        }
    }
    seed.clone().with_lambda(lambda).unwrap().check_lambda_admissible().holds()
}

#[test]
fn exactly_one_variant_is_admissible() {
    let mut passing = Vec::new();
    for v in LambdaVariant::all() {
        let ok = ["A1", "A2", "A3"].iter().all(|label| {
            let r = RootData::new(label.parse::<TypeLabel>().unwrap());
            let ctx = SeedContext::new(AdmissibleSeq::from_quiver(&r, &Orientation::bipartite(&r)).unwrap());
            let l = r.longest_len() as i64;
            [l, 2 * l, 3 * l].iter().all(|&size| {
                let seed = Seed::canonical(&ctx, Interval::new(1 - size, 0)).unwrap();
                admissible_with(&ctx, &seed, v)
            })
        });
        if ok {
            passing.push(v);
        }
    }
    assert_eq!(passing, vec![LambdaVariant::FROZEN]);
}
