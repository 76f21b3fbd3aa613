// Content sequences and the diagonal labelling of cells.

use zasym::content::{cell_of, diagonal_labels, is_shifted_form};
use zasym::{ContentSequence, Partition};

fn main() {
    let lambda = Partition::new(&[5, 3, 1]).unwrap();
    let seq = ContentSequence::of(&lambda);
    let window: Vec<String> = seq.iter().map(|(a, x)| format!("{a}:{x}")).collect();
    println!("x({lambda}) = {} with peak {}", window.join(" "), seq.peak());
    println!("back to {}", seq.to_partition());

    for label in diagonal_labels(&lambda) {
        let (row, col) = cell_of(&lambda, label).unwrap();
        println!("  ({row},{col}) -> ({},{})", label.index, label.content);
    }

    let from_window = ContentSequence::from_window(&[1, 2, 2, 1, 1], 2).unwrap();
    println!("window 1,2,[2],1,1 is {}", from_window.to_partition());

    for parts in [[2usize, 2, 2], [3, 3, 0]] {
        let mu = Partition::from_parts(&parts).unwrap();
        println!("{mu} in shifted form for m = 1: {}", is_shifted_form(&mu, 1));
    }
}
