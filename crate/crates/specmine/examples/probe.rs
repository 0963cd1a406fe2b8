use std::collections::BTreeMap;
use std::path::Path;
use specmine::corpus::{index_corpus, search_files, search_projects};
use specmine::extract::{expand_to_subsystem, flatten_packages, score_relevancy};
use specmine::srcmodel::resolve_references;

fn main() {
    let root = Path::new("crates/specmine/tests/fixtures/corpus");
    let index = index_corpus(root).unwrap();
    println!("projects: {}", index.project_count());
    for (id, p) in &index.projects {
        println!("  {id}: {} units", p.units.len());
    }
    println!("diagnostics: {:?}", index.diagnostics);

    // Which units contain the word 'server'?
    if let Some(postings) = index.unit_postings.get("server") {
        println!("\nunits containing 'server':");
        for (u, tf) in postings {
            println!("  {u} tf={tf} tests={}", index.units[u].has_tests);
        }
    }

    // Project search for {lightweight, http}
    let pk = vec!["lightweight".to_string(), "http".to_string()];
    println!("\nproject search lightweight+http: {:?}", search_projects(&index, &pk));

    // File search 'server' over all
    let fk = vec!["server".to_string()];
    println!("\nfile search 'server':");
    for (u, s) in search_files(&index, &fk, None, 500) {
        println!("  {u} {s:.3}");
    }

    // Parse all units + resolve, per project closure from each server-seed
    let mut models = BTreeMap::new();
    for (uid, _u) in &index.units {
        models.insert(uid.clone(), index.parse_unit_from_disk(uid).unwrap());
    }
    let resolved = resolve_references(models);
    println!("\nresolution diagnostics: {:?}", resolved.diagnostics);

    let key_terms: Vec<String> = ["server","request","response","route","handler","port","exchange","context"].iter().map(|s| s.to_string()).collect();
    for seed in ["P1/src/com/acme/web/WebServer.java", "P1/src/com/acme/web/Exchange.java", "P2/app/net/fastserve/NetServer.java", "P3/src/tiny/EchoServer.java", "P4/src/bulk/MegaServer.java", "P5/src/sim/StatServer.java", "P6/src/io/relay/RelayServer.java"] {
        let set = expand_to_subsystem(seed, &resolved, 200).unwrap();
        let sub = flatten_packages(&set, &resolved, "spec.sample", "probe", seed);
        let score = score_relevancy(&sub, &key_terms);
        println!("\nseed {seed}: {} units, {} loc, relevancy {}", set.len(), sub.total_loc, score);
        for u in &set { println!("   {u}"); }
    }
}
