//! The six families, their representations and the word problem.

use necklace::families::{abelianization, epsilon_word, equal_elements, normalize_zeta, represent};
use necklace::{Family, FamilyKind, GroupWord};

fn main() -> necklace::Result<()> {
    for kind in FamilyKind::ALL {
        let family = Family::new(kind, 3)?;
        let gens: Vec<String> = family.generators().iter().map(|g| g.to_string()).collect();
        println!("{kind:<9} generators {}", gens.join(" "));
    }

    let circ = Family::new(FamilyKind::Circular, 3)?;
    let w = GroupWord::parse("z^-1 s1 z", circ)?;
    println!("\nrho({w}):");
    for (i, img) in represent(&w).forward().images().iter().enumerate() {
        println!("  x{} -> {img}", i + 1);
    }

    let pairs = [
        ("z^-1 s1 z", "s2"),
        ("z^3", "1"),
        ("s1 s3 s1", "s3 s1 s3"),
        ("s1 z", "z s2"),
    ];
    for (a, b) in pairs {
        let (u, v) = (GroupWord::parse(a, circ)?, GroupWord::parse(b, circ)?);
        println!("{a:>12} == {b:<10} {}", equal_elements(&u, &v)?);
    }

    let w = GroupWord::parse("s1 z s2 z^-1 s3 z^2", circ)?;
    let (k, tail) = normalize_zeta(&w)?;
    let ab = abelianization(&w)?;
    println!(
        "\n{w} = z^{k} . {tail}   (eps {}, sigma sum {})",
        epsilon_word(&w)?,
        ab.sigma_total
    );

    let neck = Family::new(FamilyKind::Necklace, 3)?;
    for k in [3, 6] {
        let t = GroupWord::parse(&format!("t^{k}"), neck)?;
        println!(
            "necklace t^{k} == 1: {}",
            equal_elements(&t, &GroupWord::identity(neck))?
        );
    }
    Ok(())
}
