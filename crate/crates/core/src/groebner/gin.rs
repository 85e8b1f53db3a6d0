use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{buchberger_with, GroebnerOptions, IdealGens, LinearChange};
use crate::error::{Error, Result};
use crate::monoideal::MonomialIdeal;
use crate::poly::{Field, MonomialOrder};

/// Rational entries of random matrices are drawn from `[-H, H] \ {0}`.
pub const DEFAULT_ENTRY_BOUND: i64 = 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GinOptions {
    pub seed: u64,
    pub trials: usize,
    pub entry_bound: i64,
    pub groebner: GroebnerOptions,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            seed: 0,
            trials: 2,
            entry_bound: DEFAULT_ENTRY_BOUND,
            groebner: GroebnerOptions::default(),
        }
    }
}

/// A dense random invertible matrix. Over the rationals entries are
/// uniform in `[-bound, bound] \ {0}`; over `F_p` uniform nonzero residues.
/// Singular draws are rejected and redrawn, up to a fixed number of
/// attempts (over tiny fields such as `F_2` no dense nonzero matrix is
/// invertible).
pub fn random_invertible<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    r: usize,
    bound: i64,
) -> Result<LinearChange> {
    const MAX_ATTEMPTS: usize = 1000;
    for _ in 0..MAX_ATTEMPTS {
        let rows = (0..r)
            .map(|_| (0..r).map(|_| random_entry(rng, field, bound)).collect())
            .collect();
        if let Ok(g) = LinearChange::new(field, rows) {
            return Ok(g);
        }
    }
    Err(Error::InvalidInput(format!(
        "no invertible {r}x{r} matrix with nonzero entries found over {field}"
    )))
}

fn random_entry<R: Rng + ?Sized>(rng: &mut R, field: Field, bound: i64) -> crate::poly::Scalar {
    match field {
        Field::Rational => {
            let v = rng.random_range(1..=bound);
            field.from_i64(if rng.random_bool(0.5) { v } else { -v })
        }
        Field::Prime(p) => field.from_i64(rng.random_range(1..p) as i64),
    }
}

/// Generic initial ideal with default options apart from seed and trials.
pub fn gin(ideal: &IdealGens, order: MonomialOrder, seed: u64, trials: usize) -> Result<MonomialIdeal> {
    gin_with(
        ideal,
        order,
        &GinOptions {
            seed,
            trials,
            ..GinOptions::default()
        },
    )
}

/// Computes `in(g(I))` for `trials` independent random changes `g` drawn
/// from a generator seeded with `opts.seed`, and returns the common value.
/// Disagreement between trials is reported as [`Error::UnstableGin`].
pub fn gin_with(ideal: &IdealGens, order: MonomialOrder, opts: &GinOptions) -> Result<MonomialIdeal> {
    if opts.trials < 2 {
        return Err(Error::InvalidInput("gin needs at least 2 trials".into()));
    }
    if opts.entry_bound < 1 {
        return Err(Error::InvalidInput("entry bound must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let r = ideal.context().len();
    let mut first: Option<MonomialIdeal> = None;
    for trial in 0..opts.trials {
        let g = random_invertible(&mut rng, ideal.field(), r, opts.entry_bound)?;
        let moved = g.apply_ideal(&ideal.with_order(order))?;
        let initial = buchberger_with(&moved, order, &opts.groebner)?.initial_ideal();
        match &first {
            None => first = Some(initial),
            Some(expected) if *expected == initial => {}
            Some(_) => return Err(Error::UnstableGin { trial }),
        }
    }
    Ok(first.expect("at least two trials"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarContext;
    use crate::textio::parse_polynomial;

    fn ideal(vars: &[&str], gens: &[&str]) -> IdealGens {
        let ctx = VarContext::new(vars).unwrap();
        IdealGens::new(
            gens.iter()
                .map(|g| parse_polynomial(g, &ctx, Field::Rational, MonomialOrder::GrevLex).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn gin_of_last_variable_is_first_variable() {
        let i = ideal(&["x1", "x2"], &["x2"]);
        for order in MonomialOrder::ALL {
            assert_eq!(gin(&i, order, 3, 2).unwrap().to_string(), "x1");
        }
    }

    #[test]
    fn gin_of_a_form_is_a_power_of_the_first_variable() {
        let i = ideal(&["x", "y", "z"], &["y*z^2 - x^3 + z^3"]);
        assert_eq!(gin(&i, MonomialOrder::GrevLex, 0, 3).unwrap().to_string(), "x^3");
    }

    #[test]
    fn gin_is_deterministic_per_seed() {
        let i = ideal(&["x", "y", "z"], &["x*y - z^2", "y^2 - x*z"]);
        let a = gin(&i, MonomialOrder::GrevLex, 11, 2).unwrap();
        let b = gin(&i, MonomialOrder::GrevLex, 11, 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn too_few_trials() {
        let i = ideal(&["x"], &["x"]);
        assert!(gin(&i, MonomialOrder::GrevLex, 0, 1).is_err());
    }

    #[test]
    fn random_matrices_over_prime_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_invertible(&mut rng, Field::Prime(32003), 4, DEFAULT_ENTRY_BOUND).unwrap();
        assert_eq!(g.dim(), 4);
        assert!((0..4).all(|i| (0..4).all(|j| !g.entry(i, j).is_zero())));
        // the only dense nonzero 2x2 matrix over F_2 is singular
        assert!(random_invertible(&mut rng, Field::Prime(2), 2, DEFAULT_ENTRY_BOUND).is_err());
    }

    #[test]
    fn rational_entries_within_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = random_invertible(&mut rng, Field::Rational, 5, 3).unwrap();
        let allowed: Vec<_> = [-3, -2, -1, 1, 2, 3].iter().map(|&v| Field::Rational.from_i64(v)).collect();
        assert!((0..5).all(|i| (0..5).all(|j| allowed.contains(g.entry(i, j)))));
    }
}
