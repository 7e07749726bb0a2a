//! Registry of closed-form multiple-angle, doubling and addition formulas.
//!
//! Every [`FormulaId`] pairs one closed-form evaluator with its validity
//! domain. [`evaluate`] computes the closed form (`lhs`) and the same
//! quantity by direct inversion (`rhs`); [`sweep`] runs that comparison over
//! an interior grid of the domain.

mod addition;
mod double_angle;
mod multiple_angle;
mod phi_psi;

use std::fmt;
use std::str::FromStr;

pub use addition::{
    cox_shurman_add, cox_shurman_double, cox_shurman_half_period, dixon_add, dixon_double, dixon_half_period,
    NEAR_DEGENERATE,
};
pub use double_angle::{cosh_2_6, sin_2_4, sin_3_2_2, sin_3_2_6, sin_3_6, sin_4_3_4, sin_6_5_3, sinh_2_4, sinh_2_6};
pub use multiple_angle::{maf1, maf1_hyp, maf1_trig, maf2, maf2_hyp, maf2_trig, scale_factor, tau_double, ScaledValues};
pub use phi_psi::{phi, phi_inverse, phi_psi, psi};

use crate::error::{Error, Result};
use crate::gtf::{sincos_pq, sinhcosh_pq};
use crate::params::{ExtReal, ParamPair};
use double_angle::fixed;

/// Sweep window used when a formula's domain is unbounded.
pub const UNBOUNDED_WINDOW: f64 = 2.0;

/// How a formula is parameterised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// A single argument at a fixed exponent pair.
    Fixed,
    /// A single argument and the exponent `q > 1` of a family.
    Family,
    /// Two arguments `u`, `v` of an addition theorem.
    Binary,
}

macro_rules! formula_ids {
    ($($variant:ident => $name:literal, $shape:ident;)*) => {
        /// Identifier of a registered formula.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum FormulaId {
            $($variant,)*
        }

        impl FormulaId {
            /// All formulas in canonical order.
            pub const ALL: [FormulaId; [$(FormulaId::$variant),*].len()] = [$(FormulaId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(FormulaId::$variant => $name,)*
                }
            }

            pub fn shape(self) -> Shape {
                match self {
                    $(FormulaId::$variant => Shape::$shape,)*
                }
            }
        }
    };
}

formula_ids! {
    Maf1Sin => "MAF1_SIN", Family;
    Maf1Cos => "MAF1_COS", Family;
    Maf1Sinh => "MAF1_SINH", Family;
    Maf1Cosh => "MAF1_COSH", Family;
    Maf2Sinh => "MAF2_SINH", Family;
    Maf2Cosh => "MAF2_COSH", Family;
    Maf2Sin => "MAF2_SIN", Family;
    Maf2Cos => "MAF2_COS", Family;
    DaSinh26 => "DA_SINH_2_6", Fixed;
    DaCosh26 => "DA_COSH_2_6", Fixed;
    DaSin326 => "DA_SIN_3_2_6", Fixed;
    DaSin36 => "DA_SIN_3_6", Fixed;
    DaSin653 => "DA_SIN_6_5_3", Fixed;
    DaSin322 => "DA_SIN_3_2_2", Fixed;
    DixonAddSin => "DIXON_ADD_SIN", Binary;
    DixonAddCos => "DIXON_ADD_COS", Binary;
    DixonDouble => "DIXON_DOUBLE", Fixed;
    CsAdd => "CS_ADD", Binary;
    CsDouble => "CS_DOUBLE", Fixed;
    DaSinh24 => "DA_SINH_2_4", Fixed;
    DaSin24 => "DA_SIN_2_4", Fixed;
    DaSin434 => "DA_SIN_4_3_4", Fixed;
    TauDouble => "TAU_DOUBLE", Family;
}

impl FormulaId {
    /// Exclusive upper bound of the argument. For [`Shape::Binary`] formulas
    /// it bounds `u`, `v` and `u + v`. `q` is ignored unless the shape is
    /// [`Shape::Family`].
    pub fn domain_end(self, q: f64) -> Result<ExtReal> {
        use FormulaId::*;
        let quarter = |p: f64, q: f64| -> Result<ExtReal> {
            Ok(match ParamPair::new(p, q)?.half_period() {
                ExtReal::Finite(v) => ExtReal::Finite(0.5 * v),
                ExtReal::Infinite => ExtReal::Infinite,
            })
        };
        let half = |p: f64, q: f64| -> Result<ExtReal> { Ok(ParamPair::new(p, q)?.half_period()) };
        match self {
            Maf1Sin | Maf1Cos | Maf1Sinh | Maf1Cosh | TauDouble => quarter(q / (q - 1.0), q),
            Maf2Sinh | Maf2Cosh | Maf2Sin | Maf2Cos => half(q / 2.0, q),
            DaSinh26 | DaCosh26 | DaSin326 => quarter(1.5, 6.0),
            DaSin36 => quarter(3.0, 6.0),
            DaSin653 => quarter(1.2, 3.0),
            DaSin322 => quarter(1.5, 2.0),
            DixonAddSin | DixonAddCos => half(1.5, 3.0),
            DixonDouble => quarter(1.5, 3.0),
            CsAdd => half(2.0, 3.0),
            CsDouble => quarter(2.0, 3.0),
            DaSinh24 | DaSin434 => quarter(4.0 / 3.0, 4.0),
            DaSin24 => quarter(2.0, 4.0),
        }
    }

    /// Right end of the sweep grid: the domain end, or
    /// [`UNBOUNDED_WINDOW`] when the domain is unbounded.
    pub fn sweep_end(self, q: f64) -> Result<f64> {
        Ok(self.domain_end(q)?.as_finite().unwrap_or(UNBOUNDED_WINDOW))
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::FormulaDomain { formula: "REGISTRY", reason: format!("unknown formula {s}") })
    }
}

/// Arguments for [`evaluate`], matching the formula's [`Shape`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FormulaInput {
    At(f64),
    Family { q: f64, x: f64 },
    Pair(f64, f64),
}

/// A closed form next to the directly computed value it should equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormulaEval {
    pub lhs: f64,
    pub rhs: f64,
    /// `|lhs - rhs|`.
    pub residual: f64,
}

impl FormulaEval {
    fn new(lhs: f64, rhs: f64) -> Self {
        FormulaEval { lhs, rhs, residual: (lhs - rhs).abs() }
    }

    /// `|lhs - rhs| / max(1, |rhs|)`: absolute for moderate values, relative
    /// once the hyperbolic functions grow large.
    pub fn scaled_residual(&self) -> f64 {
        self.residual / self.rhs.abs().max(1.0)
    }
}

fn check_domain(id: FormulaId, q: f64, args: &[f64]) -> Result<()> {
    let end = id.domain_end(q)?.to_f64();
    for &a in args {
        if !(a >= 0.0 && a < end) {
            return Err(Error::FormulaDomain { formula: id.name(), reason: format!("argument {a} outside [0, {end})") });
        }
    }
    Ok(())
}

fn family_q(id: FormulaId, q: f64) -> Result<f64> {
    if q > 1.0 && q.is_finite() {
        Ok(q)
    } else {
        Err(Error::FormulaDomain { formula: id.name(), reason: format!("family exponent q = {q} must exceed 1") })
    }
}

/// Evaluates the closed form of `id` and the directly computed value it
/// should reproduce.
pub fn evaluate(id: FormulaId, input: FormulaInput) -> Result<FormulaEval> {
    use FormulaId::*;
    match (id.shape(), input) {
        (Shape::Fixed, FormulaInput::At(x)) => double_angle(id, x),
        (Shape::Family, FormulaInput::Family { q, x }) => {
            let q = family_q(id, q)?;
            check_domain(id, q, &[x])?;
            let y = scale_factor(q) * x;
            let scaled = ParamPair::new(2.0 * q / (q + 2.0), q)?;
            let two = ParamPair::new(2.0, q)?;
            let (lhs, rhs) = match id {
                Maf1Sin => (maf1_trig(q, x)?.0, sincos_pq(&two, y)?.sin),
                Maf1Cos => (maf1_trig(q, x)?.1, sincos_pq(&two, y)?.cos),
                Maf1Sinh => (maf1_hyp(q, x)?.0, sinhcosh_pq(&scaled, y)?.sinh),
                Maf1Cosh => (maf1_hyp(q, x)?.1, sinhcosh_pq(&scaled, y)?.cosh),
                Maf2Sinh => (maf2_hyp(q, x)?.0, sinhcosh_pq(&two, y)?.sinh),
                Maf2Cosh => (maf2_hyp(q, x)?.1, sinhcosh_pq(&two, y)?.cosh),
                Maf2Sin => (maf2_trig(q, x)?.0, sincos_pq(&scaled, y)?.sin),
                Maf2Cos => (maf2_trig(q, x)?.1, sincos_pq(&scaled, y)?.cos),
                TauDouble => (tau_double(q, x)?, sincos_pq(&two, y)?.tau(&two)),
                _ => unreachable!("family shapes are listed above"),
            };
            Ok(FormulaEval::new(lhs, rhs))
        }
        (Shape::Binary, FormulaInput::Pair(u, v)) => {
            check_domain(id, 0.0, &[u, v, u + v])?;
            let (lhs, rhs) = match id {
                DixonAddSin => (dixon_add(u, v)?.0, sincos_pq(&fixed(1.5, 3.0), u + v)?.sin),
                DixonAddCos => (dixon_add(u, v)?.1, sincos_pq(&fixed(1.5, 3.0), u + v)?.cos),
                CsAdd => (cox_shurman_add(u, v)?, sincos_pq(&fixed(2.0, 3.0), u + v)?.sin),
                _ => unreachable!("binary shapes are listed above"),
            };
            Ok(FormulaEval::new(lhs, rhs))
        }
        (shape, _) => Err(Error::FormulaDomain {
            formula: id.name(),
            reason: format!("expects {shape:?} arguments, got {input:?}"),
        }),
    }
}

/// Evaluates a fixed-pair doubling formula at `x`: `lhs` is the closed form
/// built from the functions at `x`, `rhs` the direct value at `2x`.
pub fn double_angle(id: FormulaId, x: f64) -> Result<FormulaEval> {
    use FormulaId::*;
    if id.shape() != Shape::Fixed {
        return Err(Error::FormulaDomain { formula: id.name(), reason: "not a fixed-pair doubling formula".into() });
    }
    check_domain(id, 0.0, &[x])?;
    let sin_at = |p, q| sincos_pq(&fixed(p, q), 2.0 * x).map(|sc| sc.sin);
    let (lhs, rhs) = match id {
        DaSinh26 => (sinh_2_6(x)?, sinhcosh_pq(&fixed(2.0, 6.0), 2.0 * x)?.sinh),
        DaCosh26 => (cosh_2_6(x)?, sinhcosh_pq(&fixed(2.0, 6.0), 2.0 * x)?.cosh),
        DaSin326 => (sin_3_2_6(x)?, sin_at(1.5, 6.0)?),
        DaSin36 => (sin_3_6(x)?, sin_at(3.0, 6.0)?),
        DaSin653 => (sin_6_5_3(x)?, sin_at(1.2, 3.0)?),
        DaSin322 => (sin_3_2_2(x)?, sin_at(1.5, 2.0)?),
        DixonDouble => (dixon_double(x)?.0, sin_at(1.5, 3.0)?),
        CsDouble => (cox_shurman_double(x)?, sin_at(2.0, 3.0)?),
        DaSinh24 => (sinh_2_4(x)?, sinhcosh_pq(&fixed(2.0, 4.0), 2.0 * x)?.sinh),
        DaSin24 => (sin_2_4(x)?, sin_at(2.0, 4.0)?),
        DaSin434 => (sin_4_3_4(x)?, sin_at(4.0 / 3.0, 4.0)?),
        _ => unreachable!("fixed shapes are listed above"),
    };
    Ok(FormulaEval::new(lhs, rhs))
}

/// Worst scaled residual over a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub max_residual: f64,
    /// Argument of the left-hand side (`x`, or `u + v`) at the worst point.
    pub worst_point: f64,
    pub points: usize,
    /// Points where evaluation returned an error; they count as infinite
    /// residuals.
    pub errors: Vec<(f64, Error)>,
}

/// Grid points `t_i = i/(n+1)`, `i = 1..=n`, mapped into the domain:
/// `x = t·end` for single-argument formulas, `(u, v) = (0.55, 0.35)·t·end`
/// for addition theorems.
pub fn sweep_points(id: FormulaId, q: f64, n: usize) -> Result<Vec<FormulaInput>> {
    let end = id.sweep_end(q)?;
    Ok((1..=n)
        .map(|i| {
            let t = i as f64 / (n + 1) as f64;
            match id.shape() {
                Shape::Fixed => FormulaInput::At(end * t),
                Shape::Family => FormulaInput::Family { q, x: end * t },
                Shape::Binary => FormulaInput::Pair(0.55 * end * t, 0.35 * end * t),
            }
        })
        .collect())
}

/// Compares closed form and direct evaluation at `n` interior points.
pub fn sweep(id: FormulaId, q: f64, n: usize) -> Result<Sweep> {
    let mut result = Sweep { max_residual: 0.0, worst_point: 0.0, points: 0, errors: Vec::new() };
    for input in sweep_points(id, q, n)? {
        let at = match input {
            FormulaInput::At(x) | FormulaInput::Family { x, .. } => x,
            FormulaInput::Pair(u, v) => u + v,
        };
        result.points += 1;
        let residual = match evaluate(id, input) {
            Ok(eval) if eval.scaled_residual().is_finite() => eval.scaled_residual(),
            Ok(_) => f64::INFINITY,
            Err(e) => {
                result.errors.push((at, e));
                f64::INFINITY
            }
        };
        if residual > result.max_residual || residual.is_nan() {
            result.max_residual = residual;
            result.worst_point = at;
        }
    }
    Ok(result)
}
