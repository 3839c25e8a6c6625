use integrated_info::aitk::lzss::{compress_bytes, decode_padded, decompress_bytes, encode_padded};
use integrated_info::aitk::{c_hat, c_hat_cond, CompressorEstimator};
use integrated_info::bits::{pair_decode, pair_encode, BitString};
use integrated_info::integration::{
    edit_integration, neighbors, Encoder, FeistelMix, LzssCodec, NeighborhoodSpec, XorMask,
};
use integrated_info::pid::{
    mutual_information, pid_decompose, theorem1_residual, InputDistribution, JointDistribution,
    TruthTable, VarSet,
};
use integrated_info::report::{Format, Report};
use proptest::prelude::*;
use serde_json::json;

fn bits(max_len: usize) -> impl Strategy<Value = BitString> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(BitString::from_bools)
}

fn weights(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0u32..20, n).prop_filter_map("all-zero mass", |w| {
        let total: u32 = w.iter().sum();
        (total > 0).then(|| w.iter().map(|&v| v as f64 / total as f64).collect())
    })
}

proptest! {
    #[test]
    fn lzss_round_trips_bytes(data in prop::collection::vec(any::<u8>(), 0..600)) {
        prop_assert_eq!(decompress_bytes(&compress_bytes(&data)).unwrap(), data);
    }

    #[test]
    fn lzss_round_trips_repetitive_bytes(seed in prop::collection::vec(0u8..4, 1..20), reps in 1usize..200) {
        let data: Vec<u8> = seed.iter().cycle().take(seed.len() * reps).copied().collect();
        prop_assert_eq!(decompress_bytes(&compress_bytes(&data)).unwrap(), data);
    }

    #[test]
    fn padded_codec_round_trips_bits(z in bits(300)) {
        prop_assert_eq!(decode_padded(&encode_padded(&z)).unwrap(), z);
    }

    #[test]
    fn pairing_round_trips(a in bits(100), b in bits(100)) {
        prop_assert_eq!(pair_decode(&pair_encode(&a, &b)).unwrap(), (a, b));
    }

    #[test]
    fn feistel_inverts(half in bits(150), key in any::<u64>(), rounds in 0usize..12) {
        let z = half.concat(&half.reversed().flipped_if_nonempty());
        let f = FeistelMix { rounds, key };
        let out = f.apply(&z).unwrap();
        prop_assert_eq!(out.len(), z.len());
        prop_assert_eq!(f.invert(&out).unwrap().unwrap(), z);
    }

    #[test]
    fn xor_mask_is_an_involution(z in bits(200), key in any::<u64>()) {
        let m = XorMask { key };
        prop_assert_eq!(m.apply(&m.apply(&z).unwrap()).unwrap(), z);
    }

    #[test]
    fn neighbors_are_distinct_from_the_center(z in bits(40).prop_filter("short", |z| z.len() >= 2)) {
        let flips = neighbors(&z, NeighborhoodSpec::FLIPS).unwrap();
        prop_assert_eq!(flips.len(), z.len());
        for w in neighbors(&z, NeighborhoodSpec::FLIPS_AND_DELETION).unwrap() {
            prop_assert_ne!(&w, &z);
        }
    }

    #[test]
    fn compressor_conditional_is_bounded(x in bits(200), y in bits(200)) {
        let lz = CompressorEstimator::lzss();
        let cond = c_hat_cond(&x, &y, &lz);
        prop_assert!(cond >= 0.0 && cond <= c_hat(&x, &lz));
    }

    #[test]
    fn integration_ratio_is_a_fraction(z in bits(64).prop_filter("short", |z| z.len() >= 2)) {
        let lz = CompressorEstimator::lzss();
        let r = edit_integration(&LzssCodec, &z, NeighborhoodSpec::FLIPS_AND_DELETION, &lz, false).unwrap();
        prop_assert!((0.0..=1.0).contains(&r.ratio));
        prop_assert!(r.numerator <= r.denominator);
        prop_assert!((r.ratio - r.numerator / r.denominator).abs() < 1e-12);
    }

    #[test]
    fn pid_equalities_hold(n1 in 1usize..5, n2 in 1usize..5, ny in 1usize..5, w in weights(64)) {
        let mut records = Vec::new();
        for i in 0..n1 {
            for j in 0..n2 {
                for k in 0..ny {
                    records.push((i.to_string(), j.to_string(), k.to_string(), w[(i * 16) + (j * 4) + k]));
                }
            }
        }
        let total: f64 = records.iter().map(|r| r.3).sum();
        prop_assume!(total > 0.0);
        for r in &mut records {
            r.3 /= total;
        }
        let d = JointDistribution::from_records(&records).unwrap();
        let p = pid_decompose(&d);
        prop_assert!(p.equality_error() < 1e-9);
        prop_assert!(p.redundancy >= -1e-9);
        prop_assert!(p.redundancy <= p.i1.min(p.i2) + 1e-9);
    }

    #[test]
    fn lossless_tables_satisfy_the_residual_identity(
        n1 in 1usize..5,
        n2 in 1usize..5,
        w in weights(16),
        perm_seed in any::<u64>(),
    ) {
        let mut labels: Vec<usize> = (0..n1 * n2).collect();
        let mut s = perm_seed | 1;
        for i in (1..labels.len()).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            labels.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let x1: Vec<String> = (0..n1).map(|i| i.to_string()).collect();
        let x2: Vec<String> = (0..n2).map(|i| i.to_string()).collect();
        let table = TruthTable::new(x1, x2, labels.iter().map(|l| format!("y{l}")).collect()).unwrap();
        let mass: Vec<f64> = w[..n1 * n2].to_vec();
        let total: f64 = mass.iter().sum();
        prop_assume!(total > 0.0);
        let d = table
            .distribution(&InputDistribution::Joint(mass.iter().map(|m| m / total).collect()))
            .unwrap();
        prop_assert!(theorem1_residual(&d).unwrap().abs() <= 1e-9);
        prop_assert!(mutual_information(&d, VarSet::X1, VarSet::X2).unwrap() >= -1e-12);
    }

    #[test]
    fn reports_reparse_to_the_same_results(x in -1e6f64..1e6, y in any::<u32>(), s in "[a-z,\"]{0,12}") {
        let r = Report::new("prop", json!({"s": s}), json!({"x": x, "y": y, "list": [x, s]}), 64.0);
        let back = Report::parse(&r.render(Format::Json)).unwrap();
        prop_assert_eq!(&back.results, &r.results);
        prop_assert_eq!(back.render(Format::Json), r.render(Format::Json));
    }
}

trait FlipFirst {
    fn flipped_if_nonempty(&self) -> BitString;
}

impl FlipFirst for BitString {
    fn flipped_if_nonempty(&self) -> BitString {
        if self.is_empty() {
            self.clone()
        } else {
            self.flipped(0)
        }
    }
}
