// Partitions, conjugates, Frobenius coordinates and z-asymmetric shapes.

use zasym::partition::{enumerate_partitions, enumerate_z_asymmetric};
use zasym::{FrobeniusCoords, Partition};

fn main() {
    let lambda = Partition::new(&[4, 2, 2, 1]).unwrap();
    println!("{lambda}: conjugate {}, rank {}", lambda.conjugate(), lambda.rank());
    println!("frobenius {}", lambda.frobenius());
    println!("hooks {:?}", lambda.hooks());
    println!("contents {:?}", lambda.contents());
    println!(
        "k = {}, k' = {}, content sum = {}",
        lambda.k_statistic(),
        lambda.conjugate().k_statistic(),
        lambda.content_sum()
    );

    let shape = FrobeniusCoords::new(vec![3, 0], vec![2, 0]).unwrap().to_partition();
    println!("(3,0|2,0) = {shape}");

    println!("partitions of 5: {}", enumerate_partitions(5, None).len());
    for z in [-1, 0, 1] {
        let shapes: Vec<String> = enumerate_z_asymmetric(6, z).iter().map(|p| p.to_string()).collect();
        println!("{z}-asymmetric of 6: {}", shapes.join(" "));
    }
}
