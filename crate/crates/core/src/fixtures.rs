//! The bundled fixture corpus, embedded at compile time.

/// (file name, contents) for every fixture.
pub const ALL: &[(&str, &str)] = &[
    ("221.gc", include_str!("../fixtures/221.gc")),
    ("221_G1.pl", include_str!("../fixtures/221_G1.pl")),
    ("347.gc", include_str!("../fixtures/347.gc")),
    ("a3.arr", include_str!("../fixtures/a3.arr")),
    ("acirr10.curve", include_str!("../fixtures/acirr10.curve")),
    ("c4.curve", include_str!("../fixtures/c4.curve")),
    ("cubic.curve", include_str!("../fixtures/cubic.curve")),
    ("cusp27.pl", include_str!("../fixtures/cusp27.pl")),
    ("cusp34.pl", include_str!("../fixtures/cusp34.pl")),
    ("cuspA2.pl", include_str!("../fixtures/cuspA2.pl")),
    ("cyl.pl", include_str!("../fixtures/cyl.pl")),
    ("keta2.gc", include_str!("../fixtures/keta2.gc")),
    ("loop4.curve", include_str!("../fixtures/loop4.curve")),
    ("loop5.curve", include_str!("../fixtures/loop5.curve")),
    ("nu2.gc", include_str!("../fixtures/nu2.gc")),
    ("pencil3.arr", include_str!("../fixtures/pencil3.arr")),
    ("pencil4.arr", include_str!("../fixtures/pencil4.arr")),
    ("pencil5.arr", include_str!("../fixtures/pencil5.arr")),
    ("pencil6.arr", include_str!("../fixtures/pencil6.arr")),
    ("quartic27.curve", include_str!("../fixtures/quartic27.curve")),
    ("xyz3.gc", include_str!("../fixtures/xyz3.gc")),
    ("xyz3_G.pl", include_str!("../fixtures/xyz3_G.pl")),
];

pub fn get(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Fixtures with the given extension, e.g. "gc".
pub fn with_ext(ext: &str) -> impl Iterator<Item = (&'static str, &'static str)> + '_ {
    ALL.iter().copied().filter(move |(n, _)| n.rsplit_once('.').is_some_and(|(_, e)| e == ext))
}
