// scratch benchmark for raster accuracy/timing at acceptance resolution
use coamoeba::geometry::PointConfiguration;
use coamoeba::raster::{raster_coamoeba, raster_coamoeba_of_support};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::time::Instant;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    let r = 1024;
    let pi2 = PI * PI;

    let t0 = Instant::now();
    let tri = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
    let img = raster_coamoeba_of_support(&tri, &[c(1., 0.), c(1., 0.), c(1., 0.)], r).unwrap();
    println!("trinomial:    area/pi^2 = {:.4}  (expect 1.0)   {:?}", img.area() / pi2, t0.elapsed());

    let t0 = Instant::now();
    let square = PointConfiguration::validate(vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
    let img = raster_coamoeba(&square, &[c(1., 0.), c(1., 0.), c(1., 0.), c(-1.0, 0.)], r).unwrap();
    println!("square r=1:   area/pi^2 = {:.4}  (expect 2.0)   {:?}", img.area() / pi2, t0.elapsed());

    let t0 = Instant::now();
    let hypo = PointConfiguration::validate(vec![vec![0, 0], vec![1, 2], vec![2, 1], vec![1, 1]]).unwrap();
    let img = raster_coamoeba(&hypo, &[c(1., 0.), c(1., 0.), c(1., 0.), c(-3.0, 0.)], r).unwrap();
    println!("zw form r=3:  area/pi^2 = {:.4}  (expect 2.0)   {:?}", img.area() / pi2, t0.elapsed());

    let t0 = Instant::now();
    let trap = PointConfiguration::validate(vec![vec![0, 0], vec![2, 0], vec![0, 1], vec![1, 1]]).unwrap();
    let img = raster_coamoeba(&trap, &[c(1., 0.), c(0.8, 0.6), c(-0.3, 1.1), c(2.0, -0.4)], r).unwrap();
    println!("trapezoid:    area/pi^2 = {:.4}  (expect < 1.88)  {:?}", img.area() / pi2, t0.elapsed());

    // doubling stability probe at 512 vs 1024
    let a512 = raster_coamoeba(&square, &[c(1., 0.), c(1., 0.), c(1., 0.), c(-1.0, 0.)], 512).unwrap().area();
    println!("square 512 vs 1024: {:.4} vs {:.4}", a512 / pi2, img.area() / pi2);
}
