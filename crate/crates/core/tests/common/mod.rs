#![allow(dead_code)]

use kunz_core::Count;

/// One row of the published table of `s_g`, `t_g` and `n̂_g`.
#[derive(Clone, Copy, Debug)]
pub struct KnownRow {
    pub genus: u32,
    pub s: Count,
    pub t: Count,
    pub nhat: Option<Count>,
}

impl KnownRow {
    pub fn n(&self) -> Option<Count> {
        self.nhat.map(|h| h + self.t)
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .skip(1)
        .map(|l| l.split(',').collect())
}

pub fn table2() -> Vec<KnownRow> {
    data_lines(include_str!("../data/table2.csv"))
        .map(|f| KnownRow {
            genus: f[0].parse().unwrap(),
            s: f[1].parse().unwrap(),
            t: f[2].parse().unwrap(),
            nhat: (!f[3].is_empty()).then(|| f[3].parse().unwrap()),
        })
        .collect()
}

/// `(length, partial sum)` from the published weight table.
pub fn table1() -> Vec<(u32, f64)> {
    data_lines(include_str!("../data/table1.csv"))
        .map(|f| (f[0].parse().unwrap(), f[1].parse().unwrap()))
        .collect()
}

pub fn fib(n: usize) -> Count {
    let (mut a, mut b) = (0 as Count, 1 as Count);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}
