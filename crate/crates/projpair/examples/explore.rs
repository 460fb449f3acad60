use projpair::*;
use std::time::Instant;

fn main() {
    // Jacobi timing
    for n in [64usize, 128, 256, 512] {
        let u = sampling::random_unitary(8, 1);
        let _ = u;
        let a = {
            let mut rng = rng::SplitMix64::new(7);
            let raw = ComplexMatrix::from_fn(n, n, |_, _| {
                num_complex::Complex64::new(rng.next_gaussian(), rng.next_gaussian())
            });
            raw.hermitian_part()
        };
        let t0 = Instant::now();
        let s = herm_eig(&a, 1e-9).unwrap();
        println!("herm_eig n={n}: {:?} (lambda_max {:.3})", t0.elapsed(), s.eigenvalues.last().unwrap());
    }

    // DFT calculus timing at 256 incl. exp residual
    let t0 = Instant::now();
    let calc = DftCalculus::new(256).unwrap();
    let build = t0.elapsed();
    let t1 = Instant::now();
    let r = calc.exp_log_residual().unwrap();
    println!("dft 256: build {:?}, exp residual {:.3e} in {:?}", build, r, t1.elapsed());

    // sweep values
    let t0 = Instant::now();
    let rows = uncertainty_sweep(&[16, 32, 64, 128, 256], 0.25).unwrap();
    println!("sweep took {:?}", t0.elapsed());
    for row in &rows {
        println!(
            "n={:3} |I|={:2} distance={:.17e} commutator={:.17e} corners={:?} gammas={} norm_pq={:.17e} hs={:.17e}",
            row.n,
            row.set_i.len(),
            row.distance,
            row.commutator_norm.unwrap(),
            row.corner_dims,
            row.gammas.len(),
            row.norm_pq,
            row.hs_sq,
        );
    }

    // prolate spectra for factorization configs
    for (n, k) in [(16usize, 4usize), (16, 8), (32, 8)] {
        let set = IndexSet::interval(n, 0, k).unwrap();
        let rep = localization_report(n, &set, &set).unwrap();
        let cos2: Vec<f64> = rep.gammas.iter().map(|g| g.cos().powi(2)).collect();
        println!("n={n} |I|={k}: corners={:?} cos^2 gammas={:?}", rep.corner_dims, cos2);
    }

    // exp at 512
    let t0 = Instant::now();
    let calc = DftCalculus::new(512).unwrap();
    let r = calc.exp_log_residual().unwrap();
    println!("dft 512 exp residual {:.3e}, total {:?}", r, t0.elapsed());
}
