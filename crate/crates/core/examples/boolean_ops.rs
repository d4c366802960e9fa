//! Union, intersection and difference of polyhedra, and the valuation identity.
//!
//!     cargo run --example boolean_ops

use ratvol::polyhedron::{closure_of_difference, intersection, union};
use ratvol::{lambda_vector, Polyhedron, RatPoint, Simplex};

fn tri(v: [(i64, i64); 3]) -> Polyhedron {
    Polyhedron::from_simplex(Simplex::new(v.iter().map(|&(x, y)| RatPoint::from_ints(&[x, y])).collect()).unwrap())
}

fn show(name: &str, p: &Polyhedron) {
    let l: Vec<String> = lambda_vector(p).iter().map(|x| x.to_string()).collect();
    println!("{name:<6} {} simplexes  λ = ({})", p.simplexes().len(), l.join(", "));
}

fn main() {
    let p = tri([(0, 0), (4, 0), (0, 4)]);
    let q = tri([(1, 1), (5, 1), (1, 5)]);
    let u = union(&p, &q).unwrap();
    let i = intersection(&p, &q).unwrap();
    show("P", &p);
    show("Q", &q);
    show("P ∪ Q", &u);
    show("P ∩ Q", &i);
    show("P \\ Q", &closure_of_difference(&p, &q).unwrap());
    let lhs = lambda_vector(&p)[2].0.clone() + &lambda_vector(&q)[2].0;
    let rhs = lambda_vector(&u)[2].0.clone() + &lambda_vector(&i)[2].0;
    println!("λ₂(P) + λ₂(Q) = {lhs}, λ₂(P ∪ Q) + λ₂(P ∩ Q) = {rhs}");
}
