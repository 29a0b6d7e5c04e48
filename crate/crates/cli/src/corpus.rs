//! Example programs shipped with the binary.

pub const CORPUS: &[(&str, &str)] = &[
    ("su3", include_str!("../corpus/su3.exf")),
    ("g2", include_str!("../corpus/g2.exf")),
    ("spin7", include_str!("../corpus/spin7.exf")),
    ("classify", include_str!("../corpus/classify.exf")),
    ("psu3_nilmanifold", include_str!("../corpus/psu3_nilmanifold.exf")),
    ("compact", include_str!("../corpus/compact.exf")),
    ("straight", include_str!("../corpus/straight.exf")),
];
