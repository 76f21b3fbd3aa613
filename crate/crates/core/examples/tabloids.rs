// Counting and enumerating content and hook tabloids.

use zasym::tabloid::{
    content_gf, content_gf_by_enumeration, count_content_tabloids, count_hook_tabloids,
    enumerate_tabloids,
};
use zasym::{Partition, Tabloid, TabloidKind};

fn main() {
    let lambda = Partition::new(&[4, 2, 2, 1]).unwrap();
    println!("content tabloids, n = 4: {}", count_content_tabloids(&lambda, 4));
    println!("hook tabloids: {}", count_hook_tabloids(&lambda));

    let t = Tabloid::from_rows(
        TabloidKind::Content { n: 4 },
        vec![vec![1, 2, 4, -2], vec![3, 2], vec![3, 2], vec![4]],
    )
    .unwrap();
    println!("a content tabloid of norm {}:\n{t}", t.norm());

    let small = Partition::new(&[2, 1]).unwrap();
    for t in enumerate_tabloids(&small, TabloidKind::Hook, 100).unwrap() {
        println!("hook tabloid {:?}", t.rows());
    }
    let gf = content_gf(&small, 2);
    assert_eq!(gf, content_gf_by_enumeration(&small, 2, 1000).unwrap());
    println!("norm generating function of (2,1), n = 2: {gf}");
}
