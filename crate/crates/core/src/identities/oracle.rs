use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::Result;
use crate::numkernel::{ApproxReal, EvalContext, ExactRational};
use crate::zetacore::zeta_ref;

type Memo = RwLock<HashMap<(u32, u32), ApproxReal>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `zeta(k)` for integer `k >= 2` from the Euler–Maclaurin evaluator,
/// memoized per working precision.
pub(crate) fn zeta_int(k: u32, ctx: &EvalContext) -> Result<ApproxReal> {
    let key = (k, ctx.working_bits());
    if let Some(v) = memo().read().expect("zeta memo lock poisoned").get(&key) {
        return Ok(v.clone());
    }
    let v = zeta_ref(&ExactRational::from(k as i64), ctx)?;
    memo().write().expect("zeta memo lock poisoned").insert(key, v.clone());
    Ok(v)
}
