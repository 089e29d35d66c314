//! Checking the built-in presentations and scanning the circular kernel.

use necklace::presentations::{
    builtin_assignment, builtin_presentation, check_assignment, kernel_scan, PresentationKind,
};
use necklace::Automorphism;

fn main() -> necklace::Result<()> {
    for kind in PresentationKind::ALL {
        let p = builtin_presentation(kind, 4)?;
        let r = check_assignment(&p, &builtin_assignment(kind, 4)?)?;
        println!(
            "{kind:<10} n=4  {:>3}/{:<3} relations hold",
            r.passed,
            r.relations.len()
        );
    }

    // sending z to the identity breaks the conjugation relations
    let kind = PresentationKind::Family(necklace::FamilyKind::Circular);
    let p = builtin_presentation(kind, 3)?;
    let mut images = builtin_assignment(kind, 3)?;
    images.insert("z".into(), Automorphism::identity(3));
    let r = check_assignment(&p, &images)?;
    for rel in r.relations.iter().filter(|r| !r.pass) {
        let d = rel.first_difference.as_ref().expect("failing relation");
        println!(
            "fails: {} = {}  ({}: {} vs {})",
            rel.lhs, rel.rhs, d.generator, d.lhs_image, d.rhs_image
        );
    }

    let scan = kernel_scan(3, 5)?;
    println!(
        "\nkernel scan n=3 up to length 5: {} words, {} act trivially, {} violations",
        scan.scanned, scan.kernel_hits, scan.violations
    );
    Ok(())
}
