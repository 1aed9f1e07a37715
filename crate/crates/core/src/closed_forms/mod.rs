//! The identity catalog.
//!
//! Every entry pairs a closed form with the [`direct_sum`] call that
//! evaluates its left-hand side term by term, so each identity can be
//! checked mechanically at any parameter point. Identity ids and their
//! statement strings are a stable public naming contract, used by the CLI
//! and in verification reports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::integers::{
    checked_index, direct_sum, fib, is_integral, lucas, sign, Index, Rational, SequenceKind,
};
use crate::{Error, Result};

mod cubic;
mod linear;
mod powers;
mod quadratic;

pub use cubic::cubic_rhs;
pub use linear::{linear_rhs, quadratic_base_rhs, special_linear_rhs};
pub use powers::{even_power_branch, even_power_rhs, odd_power_branch, odd_power_rhs, PowerBranch};
pub use quadratic::quadratic_rhs;

macro_rules! identity_ids {
    ($($variant:ident => $tag:literal),+ $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum IdentityId {
            $(#[serde(rename = $tag)] $variant,)+
        }

        impl IdentityId {
            /// All ids in catalog order.
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),+];

            pub fn tag(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $tag,)+
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s.trim() {
                    $($tag => Ok(IdentityId::$variant),)+
                    other => Err(Error::UnknownIdentity(other.to_string())),
                }
            }
        }
    };
}

identity_ids! {
    F1 => "F1",
    L1 => "L1",
    E5 => "E5",
    E6 => "E6",
    E7 => "E7",
    E8 => "E8",
    E9 => "E9",
    E10 => "E10",
    E11 => "E11",
    E12 => "E12",
    T1F2Rhs => "T1_F2RHS",
    T1L2Rhs => "T1_L2RHS",
    Q13 => "Q13",
    Q14 => "Q14",
    Q15 => "Q15",
    Q16 => "Q16",
    C18 => "C18",
    C19 => "C19",
    C20 => "C20",
    C21 => "C21",
    C22 => "C22",
    C23 => "C23",
    EvenF => "EVEN_F",
    EvenL => "EVEN_L",
    AltEvenF => "ALT_EVEN_F",
    AltEvenL => "ALT_EVEN_L",
    OddF => "ODD_F",
    OddL => "ODD_L",
    AltOddF => "ALT_ODD_F",
    AltOddL => "ALT_ODD_L",
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

/// A parameter slot of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    N,
    J,
    R,
    S,
    P,
    M,
    X,
    Z,
}

impl Slot {
    pub const ALL: [Slot; 8] = [
        Slot::N,
        Slot::J,
        Slot::R,
        Slot::S,
        Slot::P,
        Slot::M,
        Slot::X,
        Slot::Z,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Slot::N => "n",
            Slot::J => "j",
            Slot::R => "r",
            Slot::S => "s",
            Slot::P => "p",
            Slot::M => "m",
            Slot::X => "x",
            Slot::Z => "z",
        }
    }
}

/// Integer parameters of a catalog identity.
///
/// `x` and `z` are the free weights of the generic linear and quadratic
/// forms; `m` is the power parameter of the even/odd power families (the
/// summand is raised to `2m` or `2m + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdentityParams {
    pub n: Index,
    pub j: Index,
    pub r: Index,
    pub s: Index,
    pub p: Index,
    pub m: Index,
    pub x: Index,
    pub z: Index,
}

impl Default for IdentityParams {
    fn default() -> Self {
        IdentityParams {
            n: 0,
            j: 1,
            r: 1,
            s: 0,
            p: 1,
            m: 1,
            x: 1,
            z: 1,
        }
    }
}

impl IdentityParams {
    pub fn get(&self, slot: Slot) -> Index {
        match slot {
            Slot::N => self.n,
            Slot::J => self.j,
            Slot::R => self.r,
            Slot::S => self.s,
            Slot::P => self.p,
            Slot::M => self.m,
            Slot::X => self.x,
            Slot::Z => self.z,
        }
    }

    pub fn set(&mut self, slot: Slot, value: Index) {
        match slot {
            Slot::N => self.n = value,
            Slot::J => self.j = value,
            Slot::R => self.r = value,
            Slot::S => self.s = value,
            Slot::P => self.p = value,
            Slot::M => self.m = value,
            Slot::X => self.x = value,
            Slot::Z => self.z = value,
        }
    }

    /// Copy with every slot `id` does not read reset to its default.
    pub fn collapsed(&self, id: IdentityId) -> Self {
        let slots = id.slots();
        let mut out = IdentityParams::default();
        for &slot in slots {
            out.set(slot, self.get(slot));
        }
        out
    }

    /// `(slot name, value)` pairs for the slots `id` reads, in slot order.
    pub fn used(&self, id: IdentityId) -> Vec<(&'static str, Index)> {
        id.slots().iter().map(|&s| (s.name(), self.get(s))).collect()
    }
}

/// A [`direct_sum`] call: `Σ_{k=0}^{n} C(n,k) x^{n-k} z^k W_{j(rk+s)}^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LhsEmbedding {
    pub n: Index,
    pub x: Rational,
    pub z: Rational,
    pub j: Index,
    pub r: Index,
    pub s: Index,
    pub m: Index,
    pub kind: SequenceKind,
}

impl LhsEmbedding {
    pub fn evaluate(&self) -> Result<Rational> {
        direct_sum(
            self.n, &self.x, &self.z, self.j, self.r, self.s, self.m, self.kind,
        )
    }
}

fn int(v: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

fn signed_one(e: i128) -> Rational {
    int(sign(e))
}

/// Catalog entry: id, the slots it reads, and its statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityDescriptor {
    pub id: IdentityId,
    pub slots: &'static [Slot],
    /// The identity written out in plain text.
    pub anchor: &'static str,
}

use Slot::{J, M, N, P, R, S, X, Z};

const LINEAR_SLOTS: &[Slot] = &[N, J, R, S, X, Z];
const STEP_SLOTS: &[Slot] = &[N, J, R, S];
const P_SLOTS: &[Slot] = &[N, J, R, S, P];
const CUBIC_SLOTS: &[Slot] = &[N, S];
const POWER_SLOTS: &[Slot] = &[N, J, R, S, M];

impl IdentityId {
    pub fn slots(self) -> &'static [Slot] {
        use IdentityId::*;
        match self {
            F1 | L1 | T1F2Rhs | T1L2Rhs => LINEAR_SLOTS,
            E5 | E6 | E7 | E8 => STEP_SLOTS,
            E9 | E10 | E11 | E12 | Q13 | Q14 | Q15 | Q16 => P_SLOTS,
            C18 | C19 | C20 | C21 | C22 | C23 => CUBIC_SLOTS,
            EvenF | EvenL | AltEvenF | AltEvenL | OddF | OddL | AltOddF | AltOddL => POWER_SLOTS,
        }
    }

    pub fn uses(self, slot: Slot) -> bool {
        self.slots().contains(&slot)
    }

    /// Whether the `m` slot belongs to an odd-power family (`2m + 1`).
    pub fn is_odd_power(self) -> bool {
        use IdentityId::*;
        matches!(self, OddF | OddL | AltOddF | AltOddL)
    }

    pub fn anchor(self) -> &'static str {
        use IdentityId::*;
        match self {
            F1 => "sum C(n,k) x^(n-k) z^k F_{j(rk+s)} = (a^{js}(x+a^{jr}z)^n - b^{js}(x+b^{jr}z)^n)/sqrt5",
            L1 => "sum C(n,k) x^(n-k) z^k L_{j(rk+s)} = a^{js}(x+a^{jr}z)^n + b^{js}(x+b^{jr}z)^n",
            E5 => "sum (-1)^{jrk} C(n,k) F_{j(2rk+s)} = (-1)^{jrn} L_{jr}^n F_{j(rn+s)}",
            E6 => "sum (-1)^{jrk} C(n,k) L_{j(2rk+s)} = (-1)^{jrn} L_{jr}^n L_{j(rn+s)}",
            E7 => "sum (-1)^{(jr+1)k} C(n,k) F_{j(2rk+s)} = 5^{n/2} F_{jr}^n F_{j(rn+s)} [n even]; (-1)^{jr+1} 5^{(n-1)/2} F_{jr}^n L_{j(rn+s)} [n odd]",
            E8 => "sum (-1)^{(jr+1)k} C(n,k) L_{j(2rk+s)} = 5^{n/2} F_{jr}^n L_{j(rn+s)} [n even]; (-1)^{jr+1} 5^{(n+1)/2} F_{jr}^n F_{j(rn+s)} [n odd]",
            E9 => "sum (-1)^k C(n,k) F_{p+jr}^{n-k} F_p^k F_{j(rk+s)} = (-1)^{js+1} F_{jr}^n F_{pn-js}",
            E10 => "sum (-1)^k C(n,k) F_{p+jr}^{n-k} F_p^k L_{j(rk+s)} = (-1)^{js} F_{jr}^n L_{pn-js}",
            E11 => "sum (-1)^k C(n,k) L_{p+jr}^{n-k} L_p^k F_{j(rk+s)} = (-1)^{js+1} 5^{n/2} F_{jr}^n F_{pn-js} [n even]; (-1)^{js+1} 5^{(n-1)/2} F_{jr}^n L_{pn-js} [n odd]",
            E12 => "sum (-1)^k C(n,k) L_{p+jr}^{n-k} L_p^k L_{j(rk+s)} = (-1)^{js} 5^{n/2} F_{jr}^n L_{pn-js} [n even]; (-1)^{js} 5^{(n+1)/2} F_{jr}^n F_{pn-js} [n odd]",
            T1F2Rhs => "5 sum C(n,k) x^(n-k) z^k F_{j(rk+s)}^2 = a^{2js}(x+a^{2jr}z)^n + b^{2js}(x+b^{2jr}z)^n - 2(-1)^{js}(x+(-1)^{jr}z)^n",
            T1L2Rhs => "sum C(n,k) x^(n-k) z^k L_{j(rk+s)}^2 = a^{2js}(x+a^{2jr}z)^n + b^{2js}(x+b^{2jr}z)^n + 2(-1)^{js}(x+(-1)^{jr}z)^n",
            Q13 => "sum (-1)^k C(n,k) F_{2jr+p}^{n-k} F_p^k F_{j(rk+s)}^2 = (F_{2jr}^n L_{pn-2js} - 2(-1)^{js} F_{jr}^n L_{jr+p}^n)/5, p != 0",
            Q14 => "sum (-1)^k C(n,k) F_{2jr+p}^{n-k} F_p^k L_{j(rk+s)}^2 = F_{2jr}^n L_{pn-2js} + 2(-1)^{js} F_{jr}^n L_{jr+p}^n, p != 0",
            Q15 => "sum (-1)^k C(n,k) L_{2jr+p}^{n-k} L_p^k F_{j(rk+s)}^2 = 5^{n/2-1} F_{2jr}^n L_{pn-2js} - 2(-1)^{js} 5^{n-1} F_{jr}^n F_{jr+p}^n [n even]; 5^{(n-1)/2} F_{2jr}^n F_{pn-2js} - 2(-1)^{js} 5^{n-1} F_{jr}^n F_{jr+p}^n [n odd]",
            Q16 => "sum (-1)^k C(n,k) L_{2jr+p}^{n-k} L_p^k L_{j(rk+s)}^2 = 5^{n/2} F_{2jr}^n L_{pn-2js} + 2(-1)^{js} 5^n F_{jr}^n F_{jr+p}^n [n even]; 5^{(n+1)/2} F_{2jr}^n F_{pn-2js} + 2(-1)^{js} 5^n F_{jr}^n F_{jr+p}^n [n odd]",
            C18 => "sum C(n,k) F_{k+s}^3 = (2^n F_{2n+3s} + 3F_{n-s})/5",
            C19 => "sum C(n,k) L_{k+s}^3 = 2^n L_{2n+3s} + 3L_{n-s}",
            C20 => "sum (-1)^k C(n,k) F_{k+s}^3 = ((-1)^n 2^n F_{n+3s} - 3(-1)^s F_{2n+s})/5",
            C21 => "sum (-1)^k C(n,k) L_{k+s}^3 = (-1)^n 2^n L_{n+3s} + 3(-1)^s L_{2n+s}",
            C22 => "sum C(n,k) 2^k F_{k+s}^3 = 5^{n/2-1}(F_{3n+3s} - 3(-1)^s F_s) [n even]; 5^{(n-3)/2}(L_{3n+3s} + 3(-1)^s L_s) [n odd]",
            C23 => "sum C(n,k) 2^k L_{k+s}^3 = 5^{n/2}(L_{3n+3s} + 3(-1)^s L_s) [n even]; 5^{(n+1)/2}(F_{3n+3s} - 3(-1)^s F_s) [n odd]",
            EvenF => "sum C(n,k) F_{j(rk+s)}^{2m}, branches on jmr and n parity",
            EvenL => "sum C(n,k) L_{j(rk+s)}^{2m}, branches on jmr and n parity",
            AltEvenF => "sum (-1)^k C(n,k) F_{j(rk+s)}^{2m}, branches on jmr and n parity",
            AltEvenL => "sum (-1)^k C(n,k) L_{j(rk+s)}^{2m}, branches on jmr and n parity",
            OddF => "sum C(n,k) F_{j(2rk+s)}^{2m+1}, branches on jr and n parity",
            OddL => "sum C(n,k) L_{j(2rk+s)}^{2m+1}, branches on jr and n parity",
            AltOddF => "sum (-1)^k C(n,k) F_{j(2rk+s)}^{2m+1}, branches on jr and n parity",
            AltOddL => "sum (-1)^k C(n,k) L_{j(2rk+s)}^{2m+1}, branches on jr and n parity",
        }
    }

    pub fn descriptor(self) -> IdentityDescriptor {
        IdentityDescriptor {
            id: self,
            slots: self.slots(),
            anchor: self.anchor(),
        }
    }
}

/// Why a parameter point lies outside an identity's domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainViolation {
    pub reason: String,
    /// A soft violation is a stated restriction the left-hand side itself
    /// does not need; the verifier may evaluate such points on request.
    pub soft: bool,
}

pub fn domain_violation(id: IdentityId, params: &IdentityParams) -> Option<DomainViolation> {
    let hard = |reason: &str| {
        Some(DomainViolation {
            reason: reason.to_string(),
            soft: false,
        })
    };
    if params.n < 0 {
        return hard("n must be non-negative");
    }
    if id.uses(Slot::M) && params.m < 0 {
        return hard("m must be non-negative");
    }
    if matches!(id, IdentityId::Q13 | IdentityId::Q14) && params.p == 0 {
        return Some(DomainViolation {
            reason: "p must be nonzero".to_string(),
            soft: true,
        });
    }
    None
}

/// `Ok(())` when `params` lies in the domain of `id`.
pub fn applicable(id: IdentityId, params: &IdentityParams) -> Result<()> {
    match domain_violation(id, params) {
        None => Ok(()),
        Some(v) => Err(Error::Inapplicable { id, reason: v.reason }),
    }
}

impl IdentityDescriptor {
    /// The term-by-term left-hand side of the identity at `params`.
    pub fn lhs_embedding(&self, params: &IdentityParams) -> Result<LhsEmbedding> {
        use IdentityId::*;
        use SequenceKind::{Fib, Lucas};
        let IdentityParams {
            n, j, r, s, p, m, x, z,
        } = *params;
        let (jr, one) = (j as i128 * r as i128, int(1));
        let (x, z) = (int(x), int(z));
        let e = |x: Rational, z: Rational, j, r, s, m, kind| LhsEmbedding {
            n,
            x,
            z,
            j,
            r,
            s,
            m,
            kind,
        };
        let kind_of = |id: IdentityId| match id {
            F1 | E5 | E7 | E9 | E11 | T1F2Rhs | Q13 | Q15 | C18 | C20 | C22 | EvenF
            | AltEvenF | OddF | AltOddF => Fib,
            _ => Lucas,
        };
        let kind = kind_of(self.id);
        let fp = |i: i128| -> Result<Rational> { Ok(int(fib(checked_index(i, "weight subscript")?))) };
        let lp = |i: i128| -> Result<Rational> { Ok(int(lucas(checked_index(i, "weight subscript")?))) };
        let twice = |v: Index| checked_index(2 * v as i128, "doubled parameter");
        let p = p as i128;
        Ok(match self.id {
            F1 | L1 => e(x, z, j, r, s, 1, kind),
            T1F2Rhs | T1L2Rhs => e(x, z, j, r, s, 2, kind),
            E5 | E6 => e(one, signed_one(jr), j, twice(r)?, s, 1, kind),
            E7 | E8 => e(one, signed_one(jr + 1), j, twice(r)?, s, 1, kind),
            E9 | E10 => e(fp(p + jr)?, -fp(p)?, j, r, s, 1, kind),
            E11 | E12 => e(lp(p + jr)?, -lp(p)?, j, r, s, 1, kind),
            Q13 | Q14 => e(fp(2 * jr + p)?, -fp(p)?, j, r, s, 2, kind),
            Q15 | Q16 => e(lp(2 * jr + p)?, -lp(p)?, j, r, s, 2, kind),
            C18 | C19 => e(one, int(1), 1, 1, s, 3, kind),
            C20 | C21 => e(one, int(-1), 1, 1, s, 3, kind),
            C22 | C23 => e(one, int(2), 1, 1, s, 3, kind),
            EvenF | EvenL => e(one, int(1), j, r, s, twice(m)?, kind),
            AltEvenF | AltEvenL => e(one, int(-1), j, r, s, twice(m)?, kind),
            OddF | OddL => e(one, int(1), j, twice(r)?, s, twice(m)? + 1, kind),
            AltOddF | AltOddL => e(one, int(-1), j, twice(r)?, s, twice(m)? + 1, kind),
        })
    }

    /// The closed-form right-hand side at `params`. Does not check the
    /// domain; see [`applicable`].
    pub fn rhs(&self, params: &IdentityParams) -> Result<Rational> {
        use IdentityId::*;
        use SequenceKind::{Fib, Lucas};
        let IdentityParams {
            n, j, r, s, m, x, z, ..
        } = *params;
        match self.id {
            F1 | L1 => {
                let kind = if self.id == F1 { Fib } else { Lucas };
                linear_rhs(kind, n, &int(x), &int(z), j, r, s)
            }
            T1F2Rhs | T1L2Rhs => {
                let kind = if self.id == T1F2Rhs { Fib } else { Lucas };
                quadratic_base_rhs(kind, n, &int(x), &int(z), j, r, s)
            }
            E5 | E6 | E7 | E8 | E9 | E10 | E11 | E12 => special_linear_rhs(self.id, params),
            Q13 | Q14 | Q15 | Q16 => quadratic_rhs(self.id, params),
            C18 | C19 | C20 | C21 | C22 | C23 => cubic_rhs(self.id, n, s),
            EvenF => even_power_rhs(n, j, r, s, m, false, Fib),
            EvenL => even_power_rhs(n, j, r, s, m, false, Lucas),
            AltEvenF => even_power_rhs(n, j, r, s, m, true, Fib),
            AltEvenL => even_power_rhs(n, j, r, s, m, true, Lucas),
            OddF => odd_power_rhs(n, j, r, s, m, false, Fib),
            OddL => odd_power_rhs(n, j, r, s, m, false, Lucas),
            AltOddF => odd_power_rhs(n, j, r, s, m, true, Fib),
            AltOddL => odd_power_rhs(n, j, r, s, m, true, Lucas),
        }
    }

    /// [`rhs`](Self::rhs), asserting an integer result. All catalog
    /// identities have integer weights at integer parameters.
    pub fn integral_rhs(&self, params: &IdentityParams) -> Result<Rational> {
        let v = self.rhs(params)?;
        if !is_integral(&v) {
            return Err(Error::NotIntegral(format!(
                "{} at {:?} gave {}",
                self.id,
                params.used(self.id),
                v
            )));
        }
        Ok(v)
    }
}

/// All identities in stable catalog order.
pub fn catalog() -> Vec<IdentityDescriptor> {
    IdentityId::ALL.iter().map(|id| id.descriptor()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalPair {
    pub lhs: Rational,
    pub rhs: Rational,
    pub matched: bool,
}

/// Both sides of `id` at `params`.
pub fn eval_pair(id: IdentityId, params: &IdentityParams) -> Result<EvalPair> {
    applicable(id, params)?;
    evaluate_unchecked(id, params)
}

/// Both sides without the domain check, for exploratory runs outside a
/// stated restriction.
pub(crate) fn evaluate_unchecked(id: IdentityId, params: &IdentityParams) -> Result<EvalPair> {
    let d = id.descriptor();
    let lhs = d.lhs_embedding(params)?.evaluate()?;
    let rhs = d.integral_rhs(params)?;
    let matched = lhs == rhs;
    Ok(EvalPair { lhs, rhs, matched })
}

pub(crate) mod util {
    use num_bigint::BigInt;

    use crate::integers::{checked_index, fib, lucas, Rational};
    use crate::Result;

    pub fn f(i: i128) -> Result<BigInt> {
        Ok(fib(checked_index(i, "Fibonacci subscript")?))
    }

    pub fn l(i: i128) -> Result<BigInt> {
        Ok(lucas(checked_index(i, "Lucas subscript")?))
    }

    pub fn q(v: BigInt) -> Rational {
        Rational::from_integer(v)
    }

    pub fn pow(v: &BigInt, e: i64) -> BigInt {
        num_traits::Pow::pow(v, e as u32)
    }
}
