//! Adaptive 7/15-point Gauss–Kronrod quadrature for smooth integrands.

use super::QuadResult;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the odd-indexed Kronrod nodes and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_SUBINTERVALS: usize = 500;

fn rule<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let sum = f(centre - dx) + f(centre + dx);
        kronrod += WGK[j] * sum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * sum;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Integrates `f` over `[a, b]` by bisecting the subinterval with the
/// largest error until the total error estimate meets
/// `max(abs_tol, rel_tol·|I|)` or the subinterval budget is spent.
pub fn integrate<F>(mut f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> QuadResult
where
    F: FnMut(f64) -> f64,
{
    if a == b {
        return QuadResult { value: 0.0, abs_error_estimate: 0.0, evaluations: 1 };
    }
    let (value, error) = rule(&mut f, a, b);
    let mut pieces = vec![(a, b, value, error)];
    let mut evaluations = 15;
    loop {
        let total: f64 = pieces.iter().map(|p| p.2).sum();
        let total_error: f64 = pieces.iter().map(|p| p.3).sum();
        if total_error <= abs_tol.max(rel_tol * total.abs()) || pieces.len() >= MAX_SUBINTERVALS {
            return QuadResult { value: total, abs_error_estimate: total_error, evaluations };
        }
        let worst = pieces
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .expect("non-empty");
        let (lo, hi, _, _) = pieces[worst];
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return QuadResult { value: total, abs_error_estimate: total_error, evaluations };
        }
        pieces.swap_remove(worst);
        let left = rule(&mut f, lo, mid);
        let right = rule(&mut f, mid, hi);
        evaluations += 30;
        pieces.push((lo, mid, left.0, left.1));
        pieces.push((mid, hi, right.0, right.1));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_integrands() {
        let r = integrate(|t| t.cos(), 0.0, 1.0, 1e-15, 1e-15);
        assert!((r.value - 1f64.sin()).abs() < 1e-15);
        let r = integrate(|t| 1.0 / (1.0 + t * t), 0.0, 10.0, 1e-14, 1e-14);
        assert!((r.value - 10f64.atan()).abs() < 1e-13, "{r:?}");
    }

    #[test]
    fn adapts_to_a_sharp_peak() {
        let r = integrate(|t| 1.0 / (1e-4 + t * t), -1.0, 1.0, 1e-12, 1e-13);
        let exact = 2.0 * 100.0 * (100f64).atan();
        assert!((r.value - exact).abs() < 1e-9 * exact, "{r:?}");
        assert!(r.evaluations > 15);
    }
}
