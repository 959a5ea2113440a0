//! Free reduction, cyclic normal forms and automorphism composition.

use twistcert::word::{Budget, CyclicWord, FreeAutomorphism, Word};

fn main() {
    // x y y^-1 x  ->  x x
    let w = Word::reduce(&[(0, 1), (1, 1), (1, -1), (0, 1)], 2).unwrap();
    println!("reduced: {w:?}");

    let a = Word::from_signed(&[1, 2, -1]);
    let b = Word::from_signed(&[-2]);
    println!(
        "x y x^-1 ~ y^-1: {}",
        CyclicWord::canonical(&a) == CyclicWord::canonical(&b)
    );

    // x -> x y, y -> y composed with itself
    let f =
        FreeAutomorphism::from_images(vec![Word::from_signed(&[1, 2]), Word::from_signed(&[2])])
            .unwrap();
    let ff = FreeAutomorphism::compose(&f, &f, Budget::default()).unwrap();
    println!("f∘f: {ff:?}");
}
