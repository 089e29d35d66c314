//! Membership tests for automorphisms and words realizing them.

use necklace::characterize::{
    artin_witness, check_affine, check_braid, check_necklace, check_welded, necklace_witness, welded_witness,
};
use necklace::families::{delta, represent};
use necklace::{Endomorphism, Family, FamilyKind, GroupWord, Word};

fn report(label: &str, phi: &Endomorphism) {
    let verdicts = [
        check_braid(phi),
        check_affine(phi),
        check_necklace(phi),
        check_welded(phi),
    ];
    let marks: Vec<String> = verdicts
        .iter()
        .map(|v| match v.reason {
            None => "yes".to_string(),
            Some(r) => r.code().to_string(),
        })
        .collect();
    println!(
        "{label:<22} braid {:<16} affine {:<16} necklace {:<20} welded {}",
        marks[0], marks[1], marks[2], marks[3]
    );
}

fn main() -> necklace::Result<()> {
    let neck = Family::new(FamilyKind::Necklace, 3)?;
    let tau = represent(&GroupWord::parse("t", neck)?).forward().clone();
    let twist = represent(&GroupWord::parse("u1", Family::new(FamilyKind::Rings, 3)?)?)
        .forward()
        .clone();
    let shear = Endomorphism::new(vec![Word::parse("x1 x2", 2)?, Word::generator(2, 2)], false)?;
    report("tau", &tau);
    report(
        "s3 (necklace)",
        represent(&GroupWord::parse("s3", neck)?).forward(),
    );
    report("twist u1", &twist);
    report("x1 -> x1 x2", &shear);
    println!("residue of tau: {:?}", check_necklace(&tau).residue);

    let braid = Family::new(FamilyKind::Braid, 4)?;
    let phi = represent(&GroupWord::parse("s1 s2^-1 s3 s1", braid)?)
        .forward()
        .clone();
    println!("\nbraid witness:    {}", artin_witness(&phi)?);

    let d = delta(1, 3, 3)?;
    println!("welded witness:   {}", welded_witness(d.forward())?);

    let phi = represent(&GroupWord::parse("s3 t^2 s1^-1", neck)?)
        .forward()
        .clone();
    println!("necklace witness: {}", necklace_witness(&phi)?);
    Ok(())
}
