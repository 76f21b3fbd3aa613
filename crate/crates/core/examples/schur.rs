// Dimensions, evaluations and specializations of Schur polynomials.

use zasym::schur::{
    count_ssyt, dim_hook_content, principal_specialization, schur_bialternant_eval,
    schur_ssyt_eval, stepped_specialization, stepped_specialization_by_product,
};
use zasym::Partition;

fn main() {
    let lambda = Partition::new(&[2, 1]).unwrap();
    for n in 2..=4 {
        let dim = dim_hook_content(&lambda, n).unwrap();
        println!("dim (2,1) in {n} variables = {dim}");
    }
    println!("tableaux counted directly: {}", count_ssyt(&lambda, 3, 1000).unwrap());

    let points = [2, -1, 3];
    println!(
        "s(2,1) at {points:?}: bialternant {}, tableau sum {}",
        schur_bialternant_eval(&lambda, &points).unwrap(),
        schur_ssyt_eval(&lambda, &points, 1000).unwrap()
    );

    println!("s(2,1)(1, q, q^2) = {}", principal_specialization(&lambda, 3).unwrap());
    let shape = Partition::new(&[2, 1, 1]).unwrap();
    let stepped = stepped_specialization(&shape, -3, 4, 10_000).unwrap();
    assert_eq!(stepped, stepped_specialization_by_product(&shape, -3, 4).unwrap());
    println!("s(2,1,1)(q^-3, q^-1, q, q^3) = {stepped}");
}
