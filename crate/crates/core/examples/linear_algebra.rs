//! Exact rank, kernels and span comparison over the rationals.

use syzlab::algebra::{ratio, Rational};
use syzlab::exactla::{kernel_basis, rank, span_equal, QMat};

fn show(v: &[Rational]) -> String {
    let s: Vec<String> = v.iter().map(|q| q.to_string()).collect();
    format!("({})", s.join(", "))
}

fn main() {
    let m = QMat::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, -1, 2]]);
    println!("rank {}", rank(&m));
    for v in kernel_basis(&m) {
        println!("kernel vector {}", show(&v));
    }

    let a = vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(1, 1), ratio(0, 1)]];
    let b = vec![vec![ratio(0, 1), ratio(1, 1)], vec![ratio(3, 1), ratio(1, 1)]];
    println!("same span: {}", span_equal(&a, &b).unwrap());
}
