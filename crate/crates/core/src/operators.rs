//! The catalog of step operators `f: A -> A` on fixed-width digit strings,
//! plus the textual operator-spec format used by the CLI and report files.
//!
//! Every step is a pure function `DigitString -> DigitString` at a fixed
//! width. [`OperatorSpec`] bundles a step kind with its parameters and the
//! zero policy, validating all parameter invariants at construction time.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digitspace::{pow10, DigitString, Permutation, MAX_WIDTH};
use crate::error::{Error, Result};
use crate::randomops::fixed_random_step;

/// What happens to leading zeros between iterations.
///
/// Under `Pad` (the default) the state space is all 10^k width-k strings and
/// every result keeps its width. Under `Shrink` a result drops its leading
/// zeros and the next step runs at the reduced width; only width-agnostic
/// kinds (Kaprekar, ReverseDiff, DigitShiftSub) support it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroPolicy {
    #[default]
    Pad,
    Shrink,
}

impl fmt::Display for ZeroPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroPolicy::Pad => write!(f, "pad"),
            ZeroPolicy::Shrink => write!(f, "shrink"),
        }
    }
}

/// Consecutive digit-group sizes for the swap-add operator, e.g. `[1,2]`
/// reads a 3-digit numeral as `5(76)`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Grouping {
    parts: [u8; MAX_WIDTH as usize],
    len: u8,
}

impl Grouping {
    /// Builds a grouping; every part must be >= 1 and the parts must sum to
    /// `width`.
    pub fn new(parts: &[u8], width: u8) -> Result<Self> {
        if parts.is_empty() || parts.len() > MAX_WIDTH as usize {
            return Err(Error::InvalidGrouping(format!(
                "grouping must have 1..=9 parts, got {}",
                parts.len()
            )));
        }
        let mut sum = 0u32;
        for &p in parts {
            if p == 0 {
                return Err(Error::InvalidGrouping("every part must be >= 1".into()));
            }
            sum += u32::from(p);
        }
        if sum != u32::from(width) {
            return Err(Error::InvalidGrouping(format!(
                "parts sum to {sum}, expected width {width}"
            )));
        }
        let mut buf = [0u8; MAX_WIDTH as usize];
        buf[..parts.len()].copy_from_slice(parts);
        Ok(Self { parts: buf, len: parts.len() as u8 })
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts[..self.len as usize]
    }

    pub fn width(&self) -> u8 {
        self.parts().iter().sum()
    }
}

impl fmt::Display for Grouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Grouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grouping({self})")
    }
}

/// One operator family from the catalog plus its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    /// digits sorted descending minus digits sorted ascending
    Kaprekar,
    /// |P1(a) - P2(a)|
    PermDiff { p1: Permutation, p2: Permutation },
    /// |a - P(a)|
    SelfPermDiff { p: Permutation },
    /// |a - reverse(a)|
    ReverseDiff,
    /// split into digit groups, reverse the group order, add, mod 10^k
    SfSwapAdd { grouping: Grouping },
    /// shift digits up/down by threshold rules, subtract, absolute value
    DigitShiftSub {
        inc_amount: u8,
        inc_if_less_than: u8,
        dec_amount: u8,
        dec_if_greater_than: u8,
    },
    /// (m*a + c) mod 10^k
    AffineMod { m: u64, c: u64 },
    /// (sum of digit^p) mod 10^k
    DigitPowerSum { exponent: u32 },
    /// seeded pseudorandom successor; a genuine function of the state
    FixedRandom { seed: u64 },
}

impl OperatorKind {
    /// The snake_case kind tag used by the spec format.
    pub fn name(&self) -> &'static str {
        match self {
            OperatorKind::Kaprekar => "kaprekar",
            OperatorKind::PermDiff { .. } => "perm_diff",
            OperatorKind::SelfPermDiff { .. } => "self_perm_diff",
            OperatorKind::ReverseDiff => "reverse_diff",
            OperatorKind::SfSwapAdd { .. } => "sf_swap_add",
            OperatorKind::DigitShiftSub { .. } => "digit_shift_sub",
            OperatorKind::AffineMod { .. } => "affine_mod",
            OperatorKind::DigitPowerSum { .. } => "digit_power_sum",
            OperatorKind::FixedRandom { .. } => "fixed_random",
        }
    }

    /// Shrink is only defined for kinds that make sense at every width.
    pub fn supports_shrink(&self) -> bool {
        matches!(
            self,
            OperatorKind::Kaprekar | OperatorKind::ReverseDiff | OperatorKind::DigitShiftSub { .. }
        )
    }

    pub const ALL_NAMES: [&'static str; 9] = [
        "kaprekar",
        "perm_diff",
        "self_perm_diff",
        "reverse_diff",
        "sf_swap_add",
        "digit_shift_sub",
        "affine_mod",
        "digit_power_sum",
        "fixed_random",
    ];
}

/// A validated operator: kind, parameters, width, zero policy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WireSpec", into = "WireSpec")]
pub struct OperatorSpec {
    kind: OperatorKind,
    width: u8,
    zero_policy: ZeroPolicy,
}

impl OperatorSpec {
    /// Validates all kind invariants against the width and builds the spec
    /// with the default pad policy.
    pub fn new(kind: OperatorKind, width: u8) -> Result<Self> {
        if width == 0 || width > MAX_WIDTH {
            return Err(Error::InvalidWidth(width));
        }
        match &kind {
            OperatorKind::PermDiff { p1, p2 } => {
                if p1.width() != width || p2.width() != width {
                    return Err(Error::Validation(format!(
                        "permutation widths ({}, {}) must equal spec width {width}",
                        p1.width(),
                        p2.width()
                    )));
                }
            }
            OperatorKind::SelfPermDiff { p } => {
                if p.width() != width {
                    return Err(Error::Validation(format!(
                        "permutation width {} must equal spec width {width}",
                        p.width()
                    )));
                }
            }
            OperatorKind::SfSwapAdd { grouping } => {
                if grouping.width() != width {
                    return Err(Error::Validation(format!(
                        "grouping parts sum to {}, expected width {width}",
                        grouping.width()
                    )));
                }
            }
            OperatorKind::DigitShiftSub {
                inc_amount,
                inc_if_less_than,
                dec_amount,
                dec_if_greater_than,
            } => {
                validate_shift_params(*inc_amount, *inc_if_less_than, *dec_amount, *dec_if_greater_than)?;
            }
            OperatorKind::DigitPowerSum { exponent: 0 } => {
                return Err(Error::Validation("exponent must be >= 1".into()));
            }
            _ => {}
        }
        Ok(Self { kind, width, zero_policy: ZeroPolicy::Pad })
    }

    pub fn with_zero_policy(mut self, policy: ZeroPolicy) -> Result<Self> {
        if policy == ZeroPolicy::Shrink && !self.kind.supports_shrink() {
            return Err(Error::Validation(format!(
                "zero_policy shrink is only valid for kaprekar, reverse_diff and digit_shift_sub, not {}",
                self.kind.name()
            )));
        }
        self.zero_policy = policy;
        Ok(self)
    }

    pub fn kind(&self) -> &OperatorKind {
        &self.kind
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn zero_policy(&self) -> ZeroPolicy {
        self.zero_policy
    }

    /// Applies one step of the operator.
    ///
    /// Under pad the input width must equal the spec width and the result
    /// keeps it. Under shrink later states may be narrower than the spec
    /// width; the result drops its leading zeros.
    pub fn apply(&self, ds: DigitString) -> Result<DigitString> {
        match self.zero_policy {
            ZeroPolicy::Pad if ds.width() != self.width => {
                return Err(Error::WidthMismatch { left: ds.width(), right: self.width })
            }
            ZeroPolicy::Shrink if ds.width() > self.width => {
                return Err(Error::WidthMismatch { left: ds.width(), right: self.width })
            }
            _ => {}
        }
        let out = match &self.kind {
            OperatorKind::Kaprekar => kaprekar_step(ds),
            OperatorKind::PermDiff { p1, p2 } => perm_diff_step(ds, p1, p2)?,
            OperatorKind::SelfPermDiff { p } => self_perm_diff_step(ds, p)?,
            OperatorKind::ReverseDiff => reverse_diff_step(ds),
            OperatorKind::SfSwapAdd { grouping } => sf_swap_add_step(ds, grouping)?,
            OperatorKind::DigitShiftSub {
                inc_amount,
                inc_if_less_than,
                dec_amount,
                dec_if_greater_than,
            } => digit_shift_sub_step(ds, *inc_amount, *inc_if_less_than, *dec_amount, *dec_if_greater_than)?,
            OperatorKind::AffineMod { m, c } => affine_mod_step(ds, *m, *c),
            OperatorKind::DigitPowerSum { exponent } => digit_power_sum_step(ds, *exponent),
            OperatorKind::FixedRandom { seed } => fixed_random_step(*seed, ds),
        };
        Ok(match self.zero_policy {
            ZeroPolicy::Pad => out,
            ZeroPolicy::Shrink => out.shrink(),
        })
    }

    /// Serializes to the single-object spec format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("operator spec serializes")
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

fn validate_shift_params(
    inc_amount: u8,
    inc_if_less_than: u8,
    dec_amount: u8,
    dec_if_greater_than: u8,
) -> Result<()> {
    if inc_amount > 9 || dec_amount > 9 || inc_if_less_than > 10 || dec_if_greater_than > 9 {
        return Err(Error::InvalidShiftParams(
            "shift params must be small (amounts <= 9, thresholds <= 10)".into(),
        ));
    }
    // Largest digit the increment touches is inc_if_less_than - 1.
    if inc_if_less_than > 0 && inc_if_less_than - 1 + inc_amount > 9 {
        return Err(Error::InvalidShiftParams(format!(
            "(inc_if_less_than - 1) + inc_amount = {} exceeds 9; a shifted digit would leave 0..=9",
            inc_if_less_than - 1 + inc_amount
        )));
    }
    // Smallest digit the decrement touches is dec_if_greater_than + 1.
    if dec_if_greater_than < 9 && dec_amount > dec_if_greater_than + 1 {
        return Err(Error::InvalidShiftParams(format!(
            "dec_amount {dec_amount} exceeds dec_if_greater_than + 1 = {}; a shifted digit would leave 0..=9",
            dec_if_greater_than + 1
        )));
    }
    Ok(())
}

fn abs_diff_at_width(x: u64, y: u64, width: u8) -> DigitString {
    DigitString::from_integer(x.abs_diff(y), width).expect("difference stays below 10^width")
}

/// Kaprekar step: digits sorted descending minus digits sorted ascending,
/// re-encoded at the same width. Repdigits map to all zeros.
pub fn kaprekar_step(ds: DigitString) -> DigitString {
    let hi = ds.sort_descending().to_integer();
    let lo = ds.sort_ascending().to_integer();
    abs_diff_at_width(hi, lo, ds.width())
}

/// |P1(a) - P2(a)| at the same width.
pub fn perm_diff_step(ds: DigitString, p1: &Permutation, p2: &Permutation) -> Result<DigitString> {
    let a = ds.apply_permutation(p1)?.to_integer();
    let b = ds.apply_permutation(p2)?.to_integer();
    Ok(abs_diff_at_width(a, b, ds.width()))
}

/// |a - P(a)| at the same width.
pub fn self_perm_diff_step(ds: DigitString, p: &Permutation) -> Result<DigitString> {
    let b = ds.apply_permutation(p)?.to_integer();
    Ok(abs_diff_at_width(ds.to_integer(), b, ds.width()))
}

/// |a - reverse(a)| at the same width.
pub fn reverse_diff_step(ds: DigitString) -> DigitString {
    abs_diff_at_width(ds.to_integer(), ds.reverse().to_integer(), ds.width())
}

/// Splits the digits into consecutive groups, reverses the group order,
/// and adds the swapped numeral to the original, mod 10^width.
///
/// For two groups this is the worked `5(76) + (76)5` swap; for more groups
/// the swap is full group-order reversal.
pub fn sf_swap_add_step(ds: DigitString, grouping: &Grouping) -> Result<DigitString> {
    if grouping.width() != ds.width() {
        return Err(Error::InvalidGrouping(format!(
            "grouping parts sum to {}, expected width {}",
            grouping.width(),
            ds.width()
        )));
    }
    let digits = ds.digits();
    let mut swapped = 0u64;
    // Walk the groups back to front, appending each group's digits.
    let mut ends = [0usize; MAX_WIDTH as usize];
    let mut pos = 0usize;
    for (i, &part) in grouping.parts().iter().enumerate() {
        pos += part as usize;
        ends[i] = pos;
    }
    for i in (0..grouping.parts().len()).rev() {
        let start = ends[i] - grouping.parts()[i] as usize;
        for &d in &digits[start..ends[i]] {
            swapped = swapped * 10 + u64::from(d);
        }
    }
    let sum = (ds.to_integer() + swapped) % pow10(ds.width());
    Ok(DigitString::from_integer(sum, ds.width()).expect("mod keeps value in range"))
}

/// Shifts digits up/down by the threshold rules, then takes the absolute
/// difference of the two shifted numerals.
///
/// `A'` adds `inc_amount` to every digit `< inc_if_less_than`; `A''`
/// subtracts `dec_amount` from every digit `> dec_if_greater_than`. The
/// primary operator is `(1, 9, 1, 0)`: add 1 to each digit less than 9,
/// subtract 1 from each non-zero digit.
pub fn digit_shift_sub_step(
    ds: DigitString,
    inc_amount: u8,
    inc_if_less_than: u8,
    dec_amount: u8,
    dec_if_greater_than: u8,
) -> Result<DigitString> {
    validate_shift_params(inc_amount, inc_if_less_than, dec_amount, dec_if_greater_than)?;
    let mut up = 0u64;
    let mut down = 0u64;
    for &d in ds.digits() {
        let u = if d < inc_if_less_than { d + inc_amount } else { d };
        let v = if d > dec_if_greater_than { d - dec_amount } else { d };
        up = up * 10 + u64::from(u);
        down = down * 10 + u64::from(v);
    }
    Ok(abs_diff_at_width(up, down, ds.width()))
}

/// (m*a + c) mod 10^width.
pub fn affine_mod_step(ds: DigitString, m: u64, c: u64) -> DigitString {
    let modulus = u128::from(pow10(ds.width()));
    let v = (u128::from(m) * u128::from(ds.to_integer()) + u128::from(c)) % modulus;
    DigitString::from_integer(v as u64, ds.width()).expect("mod keeps value in range")
}

/// (sum of digit^exponent) mod 10^width.
pub fn digit_power_sum_step(ds: DigitString, exponent: u32) -> DigitString {
    let modulus = pow10(ds.width());
    let sum = ds
        .digits()
        .iter()
        .map(|&d| pow_mod(u64::from(d), exponent, modulus))
        .fold(0u64, |acc, t| (acc + t) % modulus);
    DigitString::from_integer(sum, ds.width()).expect("mod keeps value in range")
}

fn pow_mod(base: u64, mut exp: u32, modulus: u64) -> u64 {
    let m = u128::from(modulus);
    let mut acc: u128 = 1 % m;
    let mut b = u128::from(base % modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Parses the external operator-spec format and validates every invariant.
pub fn parse_operator_spec(text: &str) -> Result<OperatorSpec> {
    serde_json::from_str(text).map_err(|e| {
        if e.is_data() {
            Error::Validation(e.to_string())
        } else {
            Error::Parse(e.to_string())
        }
    })
}

/// Raw field-for-field image of the spec format; validation happens in the
/// conversion to [`OperatorSpec`].
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireSpec {
    kind: String,
    width: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zero_policy: Option<ZeroPolicy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grouping: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inc_amount: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inc_if_less_than: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dec_amount: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dec_if_greater_than: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exponent: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

impl WireSpec {
    fn take_str(field: &Option<String>, name: &str, kind: &str) -> Result<String> {
        field
            .clone()
            .ok_or_else(|| Error::Validation(format!("kind {kind:?} requires field {name:?}")))
    }

    fn take_num<T: Copy>(field: &Option<T>, name: &str, kind: &str) -> Result<T> {
        field.ok_or_else(|| Error::Validation(format!("kind {kind:?} requires field {name:?}")))
    }

    fn reject_extras(&self, kind: &str, allowed: &[&str]) -> Result<()> {
        let present: [(&str, bool); 12] = [
            ("p1", self.p1.is_some()),
            ("p2", self.p2.is_some()),
            ("p", self.p.is_some()),
            ("grouping", self.grouping.is_some()),
            ("inc_amount", self.inc_amount.is_some()),
            ("inc_if_less_than", self.inc_if_less_than.is_some()),
            ("dec_amount", self.dec_amount.is_some()),
            ("dec_if_greater_than", self.dec_if_greater_than.is_some()),
            ("m", self.m.is_some()),
            ("c", self.c.is_some()),
            ("exponent", self.exponent.is_some()),
            ("seed", self.seed.is_some()),
        ];
        for (name, is_present) in present {
            if is_present && !allowed.contains(&name) {
                return Err(Error::Validation(format!(
                    "field {name:?} is not valid for kind {kind:?}"
                )));
            }
        }
        Ok(())
    }
}

impl TryFrom<WireSpec> for OperatorSpec {
    type Error = Error;

    fn try_from(w: WireSpec) -> Result<Self> {
        let kind_tag = w.kind.as_str();
        let kind = match kind_tag {
            "kaprekar" => {
                w.reject_extras(kind_tag, &[])?;
                OperatorKind::Kaprekar
            }
            "perm_diff" => {
                w.reject_extras(kind_tag, &["p1", "p2"])?;
                OperatorKind::PermDiff {
                    p1: WireSpec::take_str(&w.p1, "p1", kind_tag)?.parse()?,
                    p2: WireSpec::take_str(&w.p2, "p2", kind_tag)?.parse()?,
                }
            }
            "self_perm_diff" => {
                w.reject_extras(kind_tag, &["p"])?;
                OperatorKind::SelfPermDiff {
                    p: WireSpec::take_str(&w.p, "p", kind_tag)?.parse()?,
                }
            }
            "reverse_diff" => {
                w.reject_extras(kind_tag, &[])?;
                OperatorKind::ReverseDiff
            }
            "sf_swap_add" => {
                w.reject_extras(kind_tag, &["grouping"])?;
                let text = WireSpec::take_str(&w.grouping, "grouping", kind_tag)?;
                let mut parts = Vec::new();
                for token in text.split(',') {
                    parts.push(token.trim().parse::<u8>().map_err(|_| {
                        Error::Parse(format!("invalid grouping entry {token:?} in {text:?}"))
                    })?);
                }
                OperatorKind::SfSwapAdd { grouping: Grouping::new(&parts, w.width)? }
            }
            "digit_shift_sub" => {
                w.reject_extras(
                    kind_tag,
                    &["inc_amount", "inc_if_less_than", "dec_amount", "dec_if_greater_than"],
                )?;
                OperatorKind::DigitShiftSub {
                    inc_amount: WireSpec::take_num(&w.inc_amount, "inc_amount", kind_tag)?,
                    inc_if_less_than: WireSpec::take_num(&w.inc_if_less_than, "inc_if_less_than", kind_tag)?,
                    dec_amount: WireSpec::take_num(&w.dec_amount, "dec_amount", kind_tag)?,
                    dec_if_greater_than: WireSpec::take_num(&w.dec_if_greater_than, "dec_if_greater_than", kind_tag)?,
                }
            }
            "affine_mod" => {
                w.reject_extras(kind_tag, &["m", "c"])?;
                OperatorKind::AffineMod {
                    m: WireSpec::take_num(&w.m, "m", kind_tag)?,
                    c: WireSpec::take_num(&w.c, "c", kind_tag)?,
                }
            }
            "digit_power_sum" => {
                w.reject_extras(kind_tag, &["exponent"])?;
                OperatorKind::DigitPowerSum {
                    exponent: WireSpec::take_num(&w.exponent, "exponent", kind_tag)?,
                }
            }
            "fixed_random" => {
                w.reject_extras(kind_tag, &["seed"])?;
                OperatorKind::FixedRandom { seed: WireSpec::take_num(&w.seed, "seed", kind_tag)? }
            }
            other => {
                return Err(Error::Validation(format!(
                    "unknown kind {other:?}; expected one of {:?}",
                    OperatorKind::ALL_NAMES
                )))
            }
        };
        OperatorSpec::new(kind, w.width)?.with_zero_policy(w.zero_policy.unwrap_or_default())
    }
}

impl From<OperatorSpec> for WireSpec {
    fn from(spec: OperatorSpec) -> Self {
        let mut w = WireSpec {
            kind: spec.kind.name().to_string(),
            width: spec.width,
            zero_policy: match spec.zero_policy {
                ZeroPolicy::Pad => None,
                ZeroPolicy::Shrink => Some(ZeroPolicy::Shrink),
            },
            p1: None,
            p2: None,
            p: None,
            grouping: None,
            inc_amount: None,
            inc_if_less_than: None,
            dec_amount: None,
            dec_if_greater_than: None,
            m: None,
            c: None,
            exponent: None,
            seed: None,
        };
        match spec.kind {
            OperatorKind::Kaprekar | OperatorKind::ReverseDiff => {}
            OperatorKind::PermDiff { p1, p2 } => {
                w.p1 = Some(p1.to_string());
                w.p2 = Some(p2.to_string());
            }
            OperatorKind::SelfPermDiff { p } => w.p = Some(p.to_string()),
            OperatorKind::SfSwapAdd { grouping } => w.grouping = Some(grouping.to_string()),
            OperatorKind::DigitShiftSub {
                inc_amount,
                inc_if_less_than,
                dec_amount,
                dec_if_greater_than,
            } => {
                w.inc_amount = Some(inc_amount);
                w.inc_if_less_than = Some(inc_if_less_than);
                w.dec_amount = Some(dec_amount);
                w.dec_if_greater_than = Some(dec_if_greater_than);
            }
            OperatorKind::AffineMod { m, c } => {
                w.m = Some(m);
                w.c = Some(c);
            }
            OperatorKind::DigitPowerSum { exponent } => w.exponent = Some(exponent),
            OperatorKind::FixedRandom { seed } => w.seed = Some(seed),
        }
        w
    }
}

impl FromStr for OperatorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_operator_spec(s)
    }
}
