//! Builds a Bernoulli table, writes it to the versioned cache format and reads it back.

use zetaforge::ratseq::{bernoulli, cache_load, cache_store, euler_endpoint, BernoulliTable};

fn main() -> zetaforge::Result<()> {
    for n in [2, 4, 6, 12, 30] {
        println!("B_{n:<3} = {}", bernoulli(n));
    }
    for m in 0..5 {
        println!("E_{}(1) = {}", 2 * m + 1, euler_endpoint(m));
    }

    let path = std::env::temp_dir().join("zetaforge-example.cache");
    let table = BernoulliTable::up_to(60);
    cache_store(&table, &path)?;
    let back = cache_load(&path)?;
    println!("cache {} round trip equal: {}", path.display(), back == table);
    std::fs::remove_file(&path)?;
    Ok(())
}
