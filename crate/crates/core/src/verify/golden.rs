//! Published rows of the F, G, H tables and their shifts, highest power first
//! as printed. Row `i` is `n = i + 1`.

pub const F: &[&[i64]] = &[
    &[1],
    &[3, 4],
    &[15, 40, 27],
    &[105, 420, 565, 256],
    &[945, 5040, 10150, 9156, 3125],
    &[10395, 69300, 185850, 250768, 170359, 46656],
];

pub const G: &[&[i64]] = &[
    &[1],
    &[1, 2],
    &[3, 10, 9],
    &[15, 70, 113, 64],
    &[105, 630, 1450, 1526, 625],
    &[945, 6930, 20650, 31346, 24337, 7776],
];

pub const H: &[&[i64]] = &[
    &[1],
    &[1],
    &[1, 3],
    &[3, 13, 16],
    &[15, 85, 171, 125],
    &[105, 735, 2005, 2551, 1296],
    &[945, 7875, 26950, 47586, 43653, 16807],
];

pub const F_SHIFT: &[&[i64]] = &[
    &[1],
    &[3, 1],
    &[15, 10, 2],
    &[105, 105, 40, 6],
    &[945, 1260, 700, 196, 24],
    &[10395, 17325, 12600, 5068, 1148, 120],
];

pub const G_SHIFT: &[&[i64]] = &[
    &[1],
    &[1, 1],
    &[3, 4, 2],
    &[15, 25, 18, 6],
    &[105, 210, 190, 96, 24],
    &[945, 2205, 2380, 1526, 600, 120],
];

pub const H_SHIFT: &[&[i64]] = &[
    &[1],
    &[1],
    &[1, 2],
    &[3, 7, 6],
    &[15, 40, 46, 24],
    &[105, 315, 430, 326, 120],
    &[945, 3150, 4900, 4536, 2556, 720],
];
