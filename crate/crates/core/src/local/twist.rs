use crate::algebra::{int, odd_part, residue_mod_2pow, v2, Domain, Rat};
use crate::error::{Error, Result};

/// Choose `δ ∈ {1, -1, 2, -2}` so that `s' = δ^r s` has even valuation and
/// odd part `≡ 1 mod 4`. Returns `(δ, δ² z, s')`.
pub fn normalize_twist(z: &Rat, s: &Rat, r: u32) -> Result<(i64, Rat, Rat)> {
    if s.is_zero() {
        return Err(Error::DegenerateParameter("s = 0".into()));
    }
    let e = v2(s).expect("nonzero");
    let base: i64 = if e % 2 == 0 { 1 } else { 2 };
    let twisted = |d: i64| Domain::pow(&int(d), r as u64).times(s);
    let s1 = twisted(base);
    let u = odd_part(&s1).expect("nonzero");
    let delta = if residue_mod_2pow(&u, 2)? == 1 {
        base
    } else {
        -base
    };
    Ok((delta, int(delta * delta).times(z), twisted(delta)))
}
