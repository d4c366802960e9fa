//! Farey mediants and blow-ups keep a triangulation regular and leave λ alone.
//!
//!     cargo run --example farey_blow_up

use ratvol::measure::lambda_of_complex;
use ratvol::simplicial::{den_simplex, farey_blow_up, farey_mediant};
use ratvol::{Complex, RatPoint, Simplex};

fn main() {
    let t = Simplex::new(vec![RatPoint::from_fracs(&[(1, 3)]), RatPoint::from_fracs(&[(1, 2)])]).unwrap();
    println!("T = {t}, den(T) = {}, mediant = {}", den_simplex(&t).unwrap(), farey_mediant(&t).unwrap());

    let mut c = Complex::from_maximal(1, [t]);
    println!("λ₁ = {}", lambda_of_complex(&c, 1).unwrap());
    for step in 1..=4 {
        // refine the first maximal segment again and again
        let s = c.maximal()[0].clone();
        c = farey_blow_up(&c, &s).unwrap();
        let segs: Vec<String> = c.maximal().iter().map(|s| s.to_string()).collect();
        println!("step {step}: {}  λ₁ = {}", segs.join(" "), lambda_of_complex(&c, 1).unwrap());
    }
}
