use gaudin::model::ModelParams;
use gaudin::momentum::detect_events;

fn main() {
    let p = ModelParams::new(1.0, 2.0, 0.0, [-0.5, 0.0, 0.0, 0.5, 0.0]).unwrap();
    let t = std::time::Instant::now();
    let events = detect_events(&p, -2.0, 2.5).unwrap();
    println!("elapsed: {:?}", t.elapsed());
    for e in events {
        println!(
            "{:?} t4={:.9} j={:.9} k={:.9} h={:.9} confirmed={}",
            e.kind, e.t4, e.j, e.k, e.h, e.confirmed
        );
    }
}
