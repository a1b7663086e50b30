//! Values frozen from an independent brute-force oracle (string-based block
//! comparison over the popcount-generated prefix, no code shared with this
//! crate). Broad cross-checks of gamma, Gamma and K over small grids.

use antipower::{big_gamma, frak_k, gamma, TmBuffer};

type ThresholdRow = (u64, [(u64, Option<u64>); 24]);

const GAMMA_BIGGAMMA_K1_24: [ThresholdRow; 3] = [
    (
        0,
        [
            (1, None),
            (1, None),
            (5, Some(3)),
            (5, Some(3)),
            (5, Some(3)),
            (5, Some(9)),
            (11, Some(9)),
            (11, Some(9)),
            (11, Some(15)),
            (11, Some(17)),
            (11, Some(17)),
            (11, Some(17)),
            (11, Some(17)),
            (11, Some(17)),
            (13, Some(17)),
            (13, Some(17)),
            (13, Some(27)),
            (13, Some(33)),
            (13, Some(33)),
            (13, Some(33)),
            (13, Some(41)),
            (13, Some(45)),
            (13, Some(45)),
            (13, Some(45)),
        ],
    ),
    (
        1,
        [
            (1, None),
            (2, None),
            (2, Some(3)),
            (5, Some(3)),
            (5, Some(3)),
            (5, Some(9)),
            (11, Some(9)),
            (11, Some(9)),
            (11, Some(15)),
            (11, Some(17)),
            (11, Some(17)),
            (11, Some(17)),
            (11, Some(17)),
            (11, Some(17)),
            (13, Some(17)),
            (13, Some(17)),
            (13, Some(27)),
            (13, Some(33)),
            (13, Some(33)),
            (13, Some(33)),
            (13, Some(41)),
            (13, Some(45)),
            (13, Some(45)),
            (13, Some(45)),
        ],
    ),
    (
        2,
        [
            (1, None),
            (1, None),
            (3, Some(1)),
            (5, Some(3)),
            (5, Some(3)),
            (5, Some(9)),
            (5, Some(9)),
            (11, Some(9)),
            (11, Some(9)),
            (11, Some(17)),
            (11, Some(17)),
            (11, Some(17)),
            (11, Some(17)),
            (11, Some(17)),
            (13, Some(17)),
            (13, Some(17)),
            (13, Some(27)),
            (13, Some(33)),
            (13, Some(33)),
            (13, Some(33)),
            (13, Some(41)),
            (13, Some(45)),
            (19, Some(45)),
            (19, Some(45)),
        ],
    ),
];

#[test]
fn gamma_and_big_gamma_match_oracle_for_k_to_24() {
    for (j, expected) in GAMMA_BIGGAMMA_K1_24 {
        let mut buf = TmBuffer::new();
        for (idx, (want_gamma, want_big)) in expected.iter().enumerate() {
            let k = idx as u64 + 1;
            assert_eq!(
                gamma(&mut buf, j, k).unwrap(),
                *want_gamma,
                "gamma_{j}({k})"
            );
            assert_eq!(
                big_gamma(&mut buf, j, k).unwrap(),
                *want_big,
                "Gamma_{j}({k})"
            );
        }
    }
}

const FRAK_J0_M1_32: [u64; 32] = [
    3, 3, 3, 3, 7, 3, 7, 3, 6, 7, 15, 3, 27, 7, 9, 3, 10, 6, 26, 7, 19, 15, 24, 3, 29, 27, 17, 7,
    33, 9, 19, 3,
];
const FRAK_J1_M1_32: [u64; 32] = [
    2, 4, 3, 4, 7, 3, 7, 4, 6, 7, 15, 3, 27, 7, 9, 4, 10, 6, 26, 7, 19, 15, 31, 3, 29, 27, 17, 7,
    33, 9, 19, 4,
];
const FRAK_J2_M1_32: [u64; 32] = [
    3, 2, 4, 4, 8, 3, 7, 4, 6, 7, 15, 3, 23, 7, 11, 4, 10, 6, 26, 7, 22, 15, 31, 3, 29, 27, 17, 7,
    33, 9, 19, 4,
];

#[test]
fn frak_k_matches_oracle_for_m_to_32() {
    let mut buf = TmBuffer::new();
    for (j, expected) in [
        (0u64, FRAK_J0_M1_32),
        (1, FRAK_J1_M1_32),
        (2, FRAK_J2_M1_32),
    ] {
        for (idx, want) in expected.iter().enumerate() {
            let m = idx as u64 + 1;
            assert_eq!(frak_k(&mut buf, j, m).unwrap(), *want, "K_{j}({m})");
        }
    }
}
