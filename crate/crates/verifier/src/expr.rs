//! Named series for the `series` subcommand.

use num_bigint::BigInt;
use serde_json::{json, Value};
use tcorelab_qseries::{partition_series, triangular_sum, Cyclotomic5, Laurent, Product, Ring};

use crate::checks::series::{crank_product, distinct_even_product, g_product, xyz};
use crate::render::render_series;
use crate::{Result, VerifyError};

type Z = BigInt;
type C5 = Cyclotomic5<Z>;

/// Names accepted by [`series_expr`]; `tcores:T` and `fj:J` take an integer.
pub const EXPRESSIONS: &[&str] = &[
    "partitions",
    "euler",
    "triangular",
    "rambest",
    "p5n4",
    "tcores:T",
    "p02",
    "crank",
    "rsgf",
    "srank-distinct-even",
    "stcrank-srank",
    "g3",
    "fj:J",
    "g-xi-1",
    "g-xi-i",
];

fn int(v: i64) -> Z {
    Z::from(v)
}

fn param<T: std::str::FromStr>(name: &str, raw: &str) -> Result<T> {
    raw.parse().map_err(|_| VerifyError::UnknownExpr(name.to_string()))
}

/// The first `order` coefficients of the named series as JSON.
pub fn series_expr(name: &str, order: usize) -> Result<Value> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let coeffs = match (head, arg) {
        ("partitions", None) => render_series(&partition_series::<Z>(order)),
        ("euler", None) => render_series(&Product::<Z>::new().plain(1, 1, 1).expand(order)?),
        ("triangular", None) => render_series(&triangular_sum::<Z>(order)),
        ("rambest", None) => {
            render_series(&Product::<Z>::new().plain(5, 5, 5).plain(1, 1, -6).expand(order)?.scale(&int(5)))
        }
        ("p5n4", None) => render_series(&partition_series::<Z>(5 * order).sift(5, 4)?.truncate(order)),
        ("tcores", Some(t)) => {
            let t: usize = param(name, t)?;
            if t < 2 {
                return Err(VerifyError::UnknownExpr(name.to_string()));
            }
            render_series(&Product::<Z>::new().plain(t, t, t as i32).plain(1, 1, -1).expand(order)?)
        }
        ("p02", None) => render_series(
            &Product::<Z>::new()
                .factor(int(-1), 1, 2, 1)
                .plain(4, 4, -1)
                .factor(int(-1), 2, 4, -2)
                .expand(order)?,
        ),
        ("crank", None) => render_series(&crank_product(order)?),
        ("rsgf", None) => render_series(
            &Product::<Laurent<Z>>::new()
                .factor(xyz(0, 1, 1).negated(), 1, 2, 1)
                .plain(4, 4, -1)
                .factor(xyz(0, 0, 2), 2, 4, -1)
                .factor(xyz(0, 2, 0), 2, 4, -1)
                .expand(order)?,
        ),
        ("srank-distinct-even", None) => render_series(&distinct_even_product(xyz(0, 2, 0), xyz(0, -2, 0), order)?),
        ("stcrank-srank", None) => {
            render_series(&g_product(xyz(1, 0, 0), xyz(-1, 0, 0), xyz(0, 2, 0), xyz(0, -2, 0), order)?)
        }
        ("g3", None) => {
            let around = xyz(1, 0, 0).plus(&Laurent::one()).plus(&xyz(-1, 0, 0));
            render_series(&crank_product(order)?.scale(&around))
        }
        ("fj", Some(j)) => {
            let j: i64 = param(name, j)?;
            let base = Product::<Laurent<Z>>::new()
                .factor(xyz(1, 0, 0), 2, 2, -1)
                .factor(xyz(-1, 0, 0), 2, 2, -1)
                .expand(order)?;
            render_series(&base.shift(((2 * j - 1) * j) as usize))
        }
        ("g-xi-1", None) => render_series(&g_product(C5::xi_pow(1), C5::xi_pow(-1), C5::one(), C5::one(), order)?),
        ("g-xi-i", None) => {
            let m = C5::from_i64(-1);
            render_series(&g_product(C5::xi_pow(1), C5::xi_pow(-1), m.clone(), m, order)?)
        }
        _ => return Err(VerifyError::UnknownExpr(name.to_string())),
    };
    Ok(json!({ "expr": name, "order": order, "coeffs": coeffs }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &Value) -> Vec<i64> {
        v["coeffs"].as_array().unwrap().iter().map(|c| c.as_i64().unwrap()).collect()
    }

    #[test]
    fn small_series() {
        assert_eq!(ints(&series_expr("partitions", 8).unwrap()), [1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(ints(&series_expr("euler", 8).unwrap()), [1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(ints(&series_expr("tcores:2", 7).unwrap()), [1, 1, 0, 1, 0, 0, 1]);
        // p(4), p(9), p(14) = 5, 30, 135
        assert_eq!(ints(&series_expr("p5n4", 3).unwrap()), [5, 30, 135]);
        assert_eq!(ints(&series_expr("rambest", 3).unwrap()), [5, 30, 135]);
    }

    #[test]
    fn unknown_names() {
        for bad in ["nope", "tcores", "tcores:x", "tcores:1", "fj", "partitions:3"] {
            assert!(matches!(series_expr(bad, 5), Err(VerifyError::UnknownExpr(_))), "{bad}");
        }
    }
}
