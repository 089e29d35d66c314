//! The semidirect product B_n x F_n and the map theta from the circular braid
//! group into it, used as an independent equality test.

use necklace::semidirect::{sd_multiply, sd_power, SDElement, ThetaTable};
use necklace::{Family, FamilyKind, Generator, GroupWord, Syllable};

fn main() -> necklace::Result<()> {
    let n = 4;
    let table = ThetaTable::new(n)?;
    for g in Family::new(FamilyKind::Circular, n)?.generators() {
        let r = table.generator_image(Syllable::pos(g)).to_record();
        println!("theta({g}) = ({}, {})", r.braid, r.fiber);
    }

    let a1 = SDElement::alpha(n, 1)?;
    let e2 = SDElement::eta(n, 2)?;
    let p = sd_multiply(&a1, &e2)?;
    println!("\na1 . e2 = {:?}", p.to_record());

    let circ = Family::new(FamilyKind::Circular, n)?;
    let zeta = table.generator_image(Syllable::pos(Generator::Zeta));
    let zn = sd_power(zeta, n as i64);
    println!("theta(z)^{n} = {:?}", zn.to_record());

    for (a, b) in [("z^-1 s1 z", "s2"), ("z^4", "1"), ("s4 s1 s4", "s1 s4 s1")] {
        let (u, v) = (GroupWord::parse(a, circ)?, GroupWord::parse(b, circ)?);
        let same = table.equal(&table.theta(&u)?, &table.theta(&v)?);
        println!("oracle: {a:>10} == {b:<9} {same}");
    }
    Ok(())
}
