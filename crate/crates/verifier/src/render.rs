//! JSON rendering of exact ring elements and series.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use tcorelab_qseries::{Cyclotomic5, FourthRoot, Laurent, Ring, Series, VAR_NAMES};

pub trait Render {
    fn render(&self) -> Value;
}

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal
/// strings.
impl Render for BigInt {
    fn render(&self) -> Value {
        match self.to_i64() {
            Some(v) => json!(v),
            None => json!(self.to_string()),
        }
    }
}

/// A list of `{"monomial": {var: exponent}, "coeff": c}` in lexicographic
/// order of the exponent vector `(x, y, z)`. Zero exponents are omitted.
impl<R: Ring + Render> Render for Laurent<R> {
    fn render(&self) -> Value {
        let terms = self
            .terms()
            .map(|(e, c)| {
                let mut m = Map::new();
                for (name, &k) in VAR_NAMES.iter().zip(e) {
                    if k != 0 {
                        m.insert(name.to_string(), json!(k));
                    }
                }
                json!({ "monomial": m, "coeff": c.render() })
            })
            .collect();
        Value::Array(terms)
    }
}

/// Reduced coefficients of `1, ξ, ξ², ξ³, ξ⁴`.
impl<R: Ring + Render> Render for Cyclotomic5<R> {
    fn render(&self) -> Value {
        json!({ "xi": self.coeffs().iter().map(Render::render).collect::<Vec<_>>() })
    }
}

/// Coefficients of `1, y, y², y³`.
impl<R: Ring + Render> Render for FourthRoot<R> {
    fn render(&self) -> Value {
        json!({ "y": self.coeffs().iter().map(Render::render).collect::<Vec<_>>() })
    }
}

pub fn render_series<R: Ring + Render>(s: &Series<R>) -> Value {
    Value::Array(s.coeffs().iter().map(Render::render).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_terms_sorted() {
        let l = Laurent::var_pow(0, 1)
            .plus(&Laurent::var_pow(0, -1))
            .minus(&Laurent::constant(BigInt::from(1)));
        assert_eq!(
            l.render(),
            json!([
                { "monomial": { "x": -1 }, "coeff": 1 },
                { "monomial": {}, "coeff": -1 },
                { "monomial": { "x": 1 }, "coeff": 1 },
            ])
        );
    }

    #[test]
    fn big_integers_as_strings() {
        let big = BigInt::from(u64::MAX) * BigInt::from(3);
        assert_eq!(big.render(), json!(big.to_string()));
        assert_eq!(BigInt::from(-7).render(), json!(-7));
    }
}
