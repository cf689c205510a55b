use metricdim::generate::{generate, FamilySpec};
use metricdim::{all_pairs_distances, cartesian_product, metric_dimension, SolveOptions};
use std::time::{Duration, Instant};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let name = args.get(1).map(String::as_str).unwrap_or("q6");
    let budget: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(120);
    let g = match name {
        "q5" => generate(&FamilySpec::Hypercube { n: 5 }).unwrap(),
        "q6" => generate(&FamilySpec::Hypercube { n: 6 }).unwrap(),
        "q7" => generate(&FamilySpec::Hypercube { n: 7 }).unwrap(),
        "q8" => generate(&FamilySpec::Hypercube { n: 8 }).unwrap(),
        kk if kk.starts_with('k') => {
            let (n, m) = kk[1..].split_once('x').unwrap();
            let a = generate(&FamilySpec::Complete { n: n.parse().unwrap() }).unwrap();
            let b = generate(&FamilySpec::Complete { n: m.parse().unwrap() }).unwrap();
            cartesian_product(&a, &b).unwrap().0
        }
        other => panic!("unknown instance {other}"),
    };
    let dm = all_pairs_distances(&g);
    let t = Instant::now();
    let opts = SolveOptions::with_budget(Some(Duration::from_secs(budget)));
    let r = metric_dimension(&g, &dm, &opts);
    println!("{} n={} -> {} wall={:?}", name, g.n(), r.to_json_string(), t.elapsed());
}
