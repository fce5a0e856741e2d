use series_core::{rat, PowerSeries, Rational};

use crate::blocks::solve_wdvv;
use crate::{Case, FjrwError};

/// <<phi>>_{1,1} = (6 f3 + f2^2) / 36 for the cubic.
pub fn fjrw_genus_one(case: Case, order: usize) -> Result<PowerSeries<Rational>, FjrwError> {
    if case != Case::Cubic {
        return Err(FjrwError::Unsupported(case.name()));
    }
    let b = solve_wdvv(case, order)?;
    Ok((&b.f(3).scale_rat(&rat(6, 1)) + &(b.f(2) * b.f(2))).scale_rat(&rat(1, 36)))
}
