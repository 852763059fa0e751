// scratch: closed-coamoeba component counts with size filtering
use coamoeba::geometry::PointConfiguration;
use coamoeba::raster::raster_closed_coamoeba;
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
    for arg in [0.0, TAU / 3.0, -TAU / 3.0, 0.35, std::f64::consts::PI, 1.5] {
        let coeffs = [
            Complex64::new(1., 0.),
            Complex64::new(1., 0.),
            Complex64::new(1., 0.),
            Complex64::from_polar(1.0, arg),
        ];
        print!("arg {arg:+.3}: ");
        for r in [256, 384, 512] {
            let img = raster_closed_coamoeba(&config, &coeffs, r).unwrap();
            let sizes = img.complement_component_sizes();
            let min_px = (r * r) / 4000; // ~0.025% of the torus
            let big = sizes.iter().filter(|&&s| s >= min_px).count();
            let small = sizes.len() - big;
            print!("{big}(+{small}tiny)@{r} ");
        }
        println!();
    }
}
