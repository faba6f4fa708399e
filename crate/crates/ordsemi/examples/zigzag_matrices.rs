//! A linear order on upper-triangular matrices with positive rational
//! entries: scan positions by diagonal distance (main diagonal first),
//! then by column, and compare entrywise at the first disagreement.
//! The order is invariant under multiplication on both sides.
//!
//! Run with: cargo run --example zigzag_matrices

use std::cmp::Ordering;

use ordsemi::instances::{xi_positions, UpperTriangular};
use ordsemi::{ordering_label, Result, Semigroup};

fn main() -> Result<()> {
    let u3 = UpperTriangular::new(3)?;

    let order = xi_positions(3)
        .iter()
        .map(|p| format!("({},{})", p.row, p.col))
        .collect::<Vec<_>>()
        .join(" ");
    println!("scan order for n = 3: {order}");

    let x = u3.parse(r#"[[1, 7, 9], [0, 2, 8], [0, 0, 3]]"#)?;
    let y = u3.parse(r#"[[1, "1/2", 100], [0, 2, 1], [0, 0, 4]]"#)?;
    println!("x = {}", u3.render(&x));
    println!("y = {}", u3.render(&y));
    // Diagonals agree at (1,1) and (2,2) but split at (3,3); the huge
    // off-diagonal entries of y never get a say.
    println!("x vs y: {}", ordering_label(u3.compare(&x, &y)));

    let z = u3.parse(r#"[[2, 1, 1], [0, 1, 1], [0, 0, 1]]"#)?;
    let xz = u3.op(&x, &z);
    let yz = u3.op(&y, &z);
    println!("xz = {}", u3.render(&xz));
    println!("yz = {}", u3.render(&yz));
    assert_eq!(u3.compare(&xz, &yz), Ordering::Less);
    println!("multiplying by z on the right preserves x < y");
    Ok(())
}
