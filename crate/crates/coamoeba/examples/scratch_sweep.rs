// scratch: hunt for size-2 sector clusters in real systems
use coamoeba::system::{sector_census, solve_system, CircuitSystem};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    let mut best = 0;
    for i in 0..40 {
        for j in 0..40 {
            let f1 = -2.0 + 0.1 * i as f64;
            let f3 = -2.0 + 0.1 * j as f64;
            if f1.abs() < 0.05 || f3.abs() < 0.05 {
                continue;
            }
            for (f2, f4) in [(1.0, 1.0), (-1.0, -1.0), (0.5, 2.0)] {
                let system = CircuitSystem::new(
                    vec![vec![1, 2], vec![2, 1], vec![0, 0], vec![1, 1]],
                    c(f1, 0.0),
                    c(f2, 0.0),
                    c(f3, 0.0),
                    c(f4, 0.0),
                )
                .unwrap();
                let roots = solve_system(&system).unwrap();
                let report = sector_census(&system, &roots, 1e-6);
                if report.max_cluster > best {
                    best = report.max_cluster;
                    println!(
                        "f1={f1:.2} f2={f2} f3={f3:.2} f4={f4}: {} roots, max cluster {}",
                        report.total_roots, report.max_cluster
                    );
                }
                if report.max_cluster > 2 {
                    println!("VIOLATION at f1={f1} f3={f3} f2={f2} f4={f4}");
                }
            }
        }
    }
    println!("best cluster size seen: {best}");
}
