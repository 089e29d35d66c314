//! Reduced words in F_n: parsing, products, cyclic reduction and the two
//! conjugacy decompositions.

use necklace::Word;

fn main() -> necklace::Result<()> {
    let n = 3;
    let w = Word::parse("x1 x2 x2^-1 x3 y^2", n)?;
    println!("reduced:            {w}");
    println!("length / alg. len:  {} / {}", w.len(), w.algebraic_length());

    let u = Word::parse("x2 x1^-1", n)?;
    let c = u.conjugate(&Word::generator(n, 3));
    println!("u x3 u^-1:          {c}");
    let (k, prefix) = c
        .generator_conjugate_decompose()
        .expect("conjugate of a generator");
    println!("  decomposes as     ({prefix}) x{k} ({})", prefix.inverse());

    let d = u.conjugate(&Word::delta(n));
    let v = d.delta_conjugator().expect("conjugate of delta");
    println!("u D u^-1:           {d}");
    println!("  delta conjugator  {v}");

    let (p, core) = Word::parse("x1 x2 x3 x1^-1", n)?.cyclic_reduce();
    println!("cyclic reduction:   prefix {p}, core {core}");

    // x1^-1 is not a positive generator, so this is not a conjugate of one
    println!(
        "x2 x1^-1 x2^-1:     {:?}",
        Word::parse("x2 x1^-1 x2^-1", n)?.generator_conjugate_decompose()
    );
    Ok(())
}
