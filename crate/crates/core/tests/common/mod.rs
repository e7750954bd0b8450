//! Published reference energies (cm⁻¹) shared by the integration tests.
#![allow(dead_code)]

pub mod props;

use rovib::database::MoleculeDatabase;
use rovib::SpectroscopicParams;

pub const TABLE_NU: [u32; 3] = [0, 3, 5];
pub const TABLE_J: [u32; 9] = [0, 1, 2, 3, 4, 5, 10, 15, 20];

/// (ν, J, GPS value if printed, closed-form value).
pub type Row = (u32, u32, Option<f64>, f64);

pub const NO_ROWS: [Row; 27] = [
    (0, 0, Some(947.759), 947.756),
    (0, 1, Some(951.123), 951.121),
    (0, 2, Some(957.849), 957.847),
    (0, 3, None, 967.937),
    (0, 4, None, 981.390),
    (0, 5, None, 998.205),
    (0, 10, Some(1132.686), 1132.686),
    (0, 15, Some(1351.069), 1351.072),
    (0, 20, Some(1653.146), 1653.153),
    (3, 0, Some(6453.267), 6453.239),
    (3, 1, Some(6456.510), 6456.484),
    (3, 2, Some(6462.995), 6462.971),
    (3, 3, None, 6472.703),
    (3, 4, None, 6485.677),
    (3, 5, None, 6501.894),
    (3, 10, Some(6631.552), 6631.592),
    (3, 15, Some(6842.080), 6842.207),
    (3, 20, Some(7133.275), 7133.526),
    (5, 0, Some(9951.736), 9951.693),
    (5, 1, Some(9954.898), 9954.857),
    (5, 2, Some(9961.220), 9961.188),
    (5, 3, None, 9970.679),
    (5, 4, None, 9983.3351),
    (5, 5, None, 9999.155),
    (5, 10, Some(10125.542), 10125.669),
    (5, 15, Some(10330.775), 10331.112),
    (5, 20, Some(10614.632), 10615.269),
];

pub const O2_ROWS: [Row; 27] = [
    (0, 0, Some(774.984), 775.089),
    (0, 1, Some(777.848), 777.863),
    (0, 2, Some(783.394), 783.410),
    (0, 3, None, 791.731),
    (0, 4, None, 802.823),
    (0, 5, None, 816.688),
    (0, 10, Some(927.562), 927.578),
    (0, 15, Some(1107.634), 1107.654),
    (0, 20, Some(1356.714), 1356.739),
    (3, 0, Some(5269.581), 5269.672),
    (3, 1, Some(5272.250), 5272.343),
    (3, 2, Some(5277.588), 5277.684),
    (3, 3, None, 5285.694),
    (3, 4, None, 5296.374),
    (3, 5, None, 5309.722),
    (3, 10, Some(5416.325), 5416.479),
    (3, 15, Some(5589.607), 5589.837),
    (3, 20, Some(5829.279), 5829.619),
    (5, 0, Some(8118.378), 8118.516),
    (5, 1, Some(8120.977), 8121.118),
    (5, 2, Some(8126.175), 8126.321),
    (5, 3, None, 8134.126),
    (5, 4, None, 8144.530),
    (5, 5, None, 8157.535),
    (5, 10, Some(8261.257), 8261.546),
    (5, 15, Some(8429.966), 8430.441),
    (5, 20, Some(8663.303), 8664.046),
];

pub const O2_PLUS_ROWS: [Row; 27] = [
    (0, 0, Some(934.601), 934.614),
    (0, 1, Some(937.848), 937.862),
    (0, 2, Some(944.341), 944.353),
    (0, 3, None, 954.094),
    (0, 4, None, 967.079),
    (0, 5, None, 983.310),
    (0, 10, Some(1113.112), 1113.127),
    (0, 15, Some(1323.924), 1323.940),
    (0, 20, Some(1615.541), 1615.563),
    (3, 0, Some(6376.545), 6376.615),
    (3, 1, Some(6379.684), 6379.756),
    (3, 2, Some(6385.962), 6386.035),
    (3, 3, None, 6395.455),
    (3, 4, None, 6408.015),
    (3, 5, None, 6423.713),
    (3, 10, Some(6549.135), 6549.270),
    (3, 15, Some(6752.948), 6753.159),
    (3, 20, Some(7034.867), 7035.194),
    (5, 0, Some(9845.984), 9846.089),
    (5, 1, Some(9849.051), 9849.159),
    (5, 2, Some(9855.183), 9855.296),
    (5, 3, None, 9864.503),
    (5, 4, None, 9876.778),
    (5, 5, None, 9892.120),
    (5, 10, Some(10014.566), 10014.830),
    (5, 15, Some(10213.639), 10214.091),
    (5, 20, Some(10488.989), 10489.719),
];

pub fn table_rows() -> [(&'static str, &'static [Row]); 3] {
    [("NO", &NO_ROWS), ("O2", &O2_ROWS), ("O2+", &O2_PLUS_ROWS)]
}

/// N₂, J = 0: (ν, closed form, Morse).
pub const N2_ROWS: [(u32, f64, f64); 10] = [
    (0, 1174.9270, 1174.9477),
    (1, 3499.7430, 3498.7289),
    (2, 5790.7601, 5787.6913),
    (3, 8047.9316, 8041.8351),
    (4, 10271.210, 10261.160),
    (5, 12460.549, 12445.666),
    (6, 14615.901, 14595.353),
    (7, 16737.218, 16710.222),
    (8, 18824.454, 18790.272),
    (9, 20877.559, 20835.503),
];

pub fn molecule(name: &str) -> SpectroscopicParams {
    MoleculeDatabase::bundled().get(name).expect("bundled molecule").clone()
}

pub fn all_molecules() -> Vec<SpectroscopicParams> {
    MoleculeDatabase::bundled().records().to_vec()
}
