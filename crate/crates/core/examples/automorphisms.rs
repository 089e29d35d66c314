//! Endomorphisms of F_n, certified automorphisms and their JSON records.

use necklace::autos::AutomorphismRecord;
use necklace::{Automorphism, Endomorphism, Word};

fn main() -> necklace::Result<()> {
    let n = 3;
    let w = |t: &str| Word::parse(t, n);
    let sigma1 = Endomorphism::new(vec![w("x1 x2 x1^-1")?, w("x1")?, w("x3")?], false)?;
    let inverse = Endomorphism::new(vec![w("x2")?, w("x2^-1 x1 x2")?, w("x3")?], false)?;
    let a = Automorphism::certify(sigma1.clone(), inverse)?;

    let delta = Word::delta(n);
    println!("sigma1(D) = {}", a.apply(&delta)?);
    println!("sigma1^2(x1) = {}", a.compose(&a)?.apply(&w("x1")?)?);

    let d = sigma1.perm_conj_decompose().expect("permutation-conjugacy form");
    println!(
        "permutation {:?}, conjugators {:?}",
        d.permutation,
        d.conjugators.iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );

    let json = serde_json::to_string_pretty(&a.to_record()).expect("json");
    println!("{json}");
    let back: AutomorphismRecord = serde_json::from_str(&json).expect("record");
    assert_eq!(Automorphism::from_record(&back)?, a);

    // a wrong inverse is refused
    let bogus = Automorphism::certify(sigma1, Endomorphism::identity(n));
    println!("bogus inverse: {}", bogus.unwrap_err());

    let inner = Automorphism::inner(&w("x1 x2")?)?;
    println!("inner(x1 x2)(x3) = {}", inner.apply(&w("x3")?)?);
    Ok(())
}
