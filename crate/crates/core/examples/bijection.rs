// The diagonal shift between content tabloids of (α+m|β) and (α|β+m).

use zasym::tabloid::{phi, phi_inverse, verify_phi};
use zasym::{FrobeniusCoords, Tabloid, TabloidKind};

fn main() {
    let t = Tabloid::from_rows(
        TabloidKind::Content { n: 3 },
        vec![vec![2, 0, 1, 3, -3], vec![2, 1, 1], vec![3]],
    )
    .unwrap();
    let s = phi(&t, 1).unwrap();
    println!("T, norm {}:\n{t}\n", t.norm());
    println!("image, norm {}:\n{s}\n", s.norm());
    assert_eq!(phi_inverse(&s, 1).unwrap(), t);

    let base = FrobeniusCoords::new(vec![3, 0], vec![2, 0]).unwrap();
    for n in 3..=4 {
        let report = verify_phi(&base, 1, n, 10_000_000).unwrap();
        println!("{}", serde_json::to_string(&report).unwrap());
    }
}
