// scratch: component counts of the vertex-family lopsided complement
use coamoeba::geometry::PointConfiguration;
use coamoeba::raster::raster_lopsided;
use coamoeba::TAU;
use num_complex::Complex64;

fn main() {
    let config = PointConfiguration::validate(vec![
        vec![0, 0],
        vec![1, 0],
        vec![0, 3],
        vec![3, 1],
    ])
    .unwrap();
    for arg in [0.0, TAU / 3.0, -TAU / 3.0, 0.35] {
        let coeffs = [
            Complex64::new(1., 0.),
            Complex64::new(1., 0.),
            Complex64::new(1., 0.),
            Complex64::from_polar(1.0, arg),
        ];
        print!("arg {arg:+.3}: ");
        for r in [384, 512, 640, 768, 1024, 1536] {
            let img = raster_lopsided(&config, &coeffs, r).unwrap();
            print!("{}@{} ", img.complement_components(), r);
        }
        println!();
    }
}
