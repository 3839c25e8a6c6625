//! The pruned breadth-first search must agree with naive enumeration.

use integrated_info::aitk::toy::{toy_shortest, toy_shortest_with_workers, Op, ToyProgram};
use integrated_info::aitk::EstimateKind;
use integrated_info::bits::BitString;
use integrated_info::rng::XorShift64Star;

/// Every program of `k` instructions in lexicographic code order.
fn programs_of(k: usize) -> Vec<ToyProgram> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    loop {
        out.push(ToyProgram::new(idx.iter().map(|&i| Op::ALL[i]).collect()));
        let mut p = k;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < Op::ALL.len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

fn first_shortest(
    by_len: &[Vec<ToyProgram>],
    target: &BitString,
    advice: &BitString,
) -> Option<ToyProgram> {
    by_len.iter().flatten().find(|p| p.run(advice, 4 * target.len()).as_ref() == Ok(target)).cloned()
}

#[test]
fn search_matches_enumeration() {
    let max_ops = 6;
    let by_len: Vec<Vec<ToyProgram>> = (0..=max_ops).map(programs_of).collect();
    let mut rng = XorShift64Star::new(99);
    for trial in 0..240 {
        let n = trial % 9 + 1;
        let target = if trial % 3 == 0 {
            rng.bits(n)
        } else {
            let mut t = rng.bits(1 + trial % 3);
            while t.len() < n {
                t = t.concat(&t.reversed());
            }
            t.slice(0, n)
        };
        let advice = match trial % 4 {
            0 => BitString::new(),
            1 => target.flipped(n - 1),
            2 => rng.bits(3),
            _ => target.slice(0, n / 2),
        };
        let est = toy_shortest(&target, &advice, Some(3 * max_ops));
        match first_shortest(&by_len, &target, &advice) {
            Some(p) => {
                assert_eq!(est.kind, EstimateKind::Exact);
                assert_eq!(est.program(), Some(&p), "target {target} advice {advice}");
            }
            None => {
                assert_eq!(est.kind, EstimateKind::UpperBound);
                assert_eq!(est.value_bits, 3.0 * n as f64);
            }
        }
    }
}

#[test]
fn workers_do_not_change_the_witness() {
    let mut rng = XorShift64Star::new(4);
    for _ in 0..20 {
        let target = rng.bits(12);
        let advice = rng.bits(6);
        let one = toy_shortest_with_workers(&target, &advice, None, 1);
        let four = toy_shortest_with_workers(&target, &advice, None, 4);
        assert_eq!(one, four);
    }
}
