//! Ring descriptors and map files.
//!
//! Skew ring:
//! `{"n": 3, "mode": "root_of_unity", "ell": 6, "phi": [[3, 2], [3]]}`
//! where `phi` is either the full n×n matrix or its strict upper triangle
//! (row i lists φ_{i,i+1}, …, φ_{i,n}). Formal mode takes `"mode": "formal"`
//! and an optional `"root": {"ell": w, "phi": …}` for a root-of-unity factor
//! multiplied into each parameter.
//!
//! Weyl tensor product:
//! `{"weyl": {"qs": [{"order": 3, "exp": 1}, {"formal": 1, "inverse": true}]}}`.

use std::fmt;

use discq_core::exactmath::{Coefficient, CycloNumber, LaurentQ};
use discq_core::qweyl::{WeylParam, WeylTensorPresentation};
use discq_core::skewring::{Endomorphism, RingPresentation, RootPart, SkewPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescriptorError {
    /// JSON pointer to the offending field.
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for DescriptorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "descriptor error at {}: {}", at, self.message)
    }
}

impl std::error::Error for DescriptorError {}

type DResult<T> = Result<T, DescriptorError>;

fn err<T>(pointer: &str, message: impl Into<String>) -> DResult<T> {
    Err(DescriptorError {
        pointer: pointer.to_string(),
        message: message.into(),
    })
}

#[derive(Debug, Clone)]
pub enum Descriptor {
    Skew(RingPresentation),
    Weyl(WeylTensorPresentation),
}

pub fn parse_descriptor(text: &str) -> DResult<Descriptor> {
    let v: Value = serde_json::from_str(text).map_err(|e| DescriptorError {
        pointer: String::new(),
        message: format!("invalid JSON: {}", e),
    })?;
    let obj = v.as_object().ok_or_else(|| DescriptorError {
        pointer: String::new(),
        message: "expected an object".into(),
    })?;
    if let Some(w) = obj.get("weyl") {
        return parse_weyl(w, "/weyl").map(Descriptor::Weyl);
    }
    let allowed = ["n", "mode", "ell", "phi", "root", "name", "note"];
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return err(&format!("/{}", k), "unknown field");
    }
    let n = get_uint(obj.get("n"), "/n")? as usize;
    if n < 2 {
        return err("/n", "at least two generators are required");
    }
    let mode = obj
        .get("mode")
        .and_then(Value::as_str)
        .ok_or_else(|| DescriptorError {
            pointer: "/mode".into(),
            message: "expected \"root_of_unity\" or \"formal\"".into(),
        })?;
    let phi = parse_phi(obj.get("phi"), n, "/phi")?;
    let pres = match mode {
        "root_of_unity" => {
            if obj.contains_key("root") {
                return err("/root", "only formal descriptors take a root part");
            }
            let ell = get_uint(obj.get("ell"), "/ell")?;
            if ell == 0 {
                return err("/ell", "must be positive");
            }
            RingPresentation::root_of_unity(ell as u32, phi)
        }
        "formal" => {
            if obj.contains_key("ell") {
                return err("/ell", "formal descriptors put the root order under \"root\"");
            }
            let root = match obj.get("root") {
                None => None,
                Some(r) => {
                    let ro = r.as_object().ok_or_else(|| DescriptorError {
                        pointer: "/root".into(),
                        message: "expected an object".into(),
                    })?;
                    let ell = get_uint(ro.get("ell"), "/root/ell")?;
                    if ell == 0 {
                        return err("/root/ell", "must be positive");
                    }
                    let rphi = parse_phi(ro.get("phi"), n, "/root/phi")?;
                    Some(RootPart { ell: ell as u32, phi: rphi })
                }
            };
            RingPresentation::formal(phi, root)
        }
        _ => return err("/mode", "expected \"root_of_unity\" or \"formal\""),
    };
    pres.map(Descriptor::Skew).map_err(|e| DescriptorError {
        pointer: "/phi".into(),
        message: e.to_string(),
    })
}

fn get_uint(v: Option<&Value>, pointer: &str) -> DResult<u64> {
    match v.and_then(Value::as_u64) {
        Some(x) if x <= u32::MAX as u64 => Ok(x),
        _ => err(pointer, "expected a non-negative integer"),
    }
}

fn get_int(v: &Value, pointer: &str) -> DResult<i64> {
    v.as_i64().map_or_else(|| err(pointer, "expected an integer"), Ok)
}

/// Full matrix, or strict upper triangle as ragged rows.
fn parse_phi(v: Option<&Value>, n: usize, pointer: &str) -> DResult<Vec<Vec<i64>>> {
    let rows = v.and_then(Value::as_array).ok_or_else(|| DescriptorError {
        pointer: pointer.into(),
        message: "expected an array of rows".into(),
    })?;
    let mut ints: Vec<Vec<i64>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let p = format!("{}/{}", pointer, i);
        let cells = row.as_array().ok_or_else(|| DescriptorError {
            pointer: p.clone(),
            message: "expected an array".into(),
        })?;
        ints.push(
            cells
                .iter()
                .enumerate()
                .map(|(j, c)| get_int(c, &format!("{}/{}", p, j)))
                .collect::<DResult<_>>()?,
        );
    }
    let full = ints.len() == n && ints.iter().all(|r| r.len() == n);
    if full {
        return Ok(ints);
    }
    // upper triangle: row i has n − 1 − i entries; a trailing empty row is optional
    if ints.len() == n && ints[n - 1].is_empty() {
        ints.pop();
    }
    if ints.len() != n - 1 {
        return err(pointer, format!("expected {} full rows or {} upper-triangle rows", n, n - 1));
    }
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in ints.iter().enumerate() {
        if row.len() != n - 1 - i {
            return err(&format!("{}/{}", pointer, i), format!("upper-triangle row {} needs {} entries", i, n - 1 - i));
        }
        for (k, &x) in row.iter().enumerate() {
            let j = i + 1 + k;
            m[i][j] = x;
            m[j][i] = -x;
        }
    }
    Ok(m)
}

fn parse_weyl(v: &Value, pointer: &str) -> DResult<WeylTensorPresentation> {
    let qs = v.get("qs").and_then(Value::as_array).ok_or_else(|| DescriptorError {
        pointer: format!("{}/qs", pointer),
        message: "expected an array of parameters".into(),
    })?;
    let mut params = Vec::new();
    for (i, q) in qs.iter().enumerate() {
        let p = format!("{}/qs/{}", pointer, i);
        let o = q.as_object().ok_or_else(|| DescriptorError {
            pointer: p.clone(),
            message: "expected an object".into(),
        })?;
        if let Some(id) = o.get("formal") {
            let id = get_uint(Some(id), &format!("{}/formal", p))? as u32;
            let inverse = match o.get("inverse") {
                None => false,
                Some(b) => b.as_bool().ok_or_else(|| DescriptorError {
                    pointer: format!("{}/inverse", p),
                    message: "expected a boolean".into(),
                })?,
            };
            params.push(WeylParam::Formal { id, inverse });
        } else {
            let order = get_uint(o.get("order"), &format!("{}/order", p))? as u32;
            if order == 0 {
                return err(&format!("{}/order", p), "must be positive");
            }
            let exp = match o.get("exp") {
                Some(e) => get_int(e, &format!("{}/exp", p))?,
                None => return err(&format!("{}/exp", p), "expected an integer"),
            };
            params.push(WeylParam::Root { order, exp });
        }
    }
    WeylTensorPresentation::new(params).map_err(|e| DescriptorError {
        pointer: format!("{}/qs", pointer),
        message: e.to_string(),
    })
}

/// One coefficient: a number, a rational string, an object
/// `{"c": "3/2", "q": k, "zeta": [order, exp]}`, or a list of such objects summed.
pub fn parse_coeff<C: Coefficient + FromFormal>(v: &Value, pointer: &str) -> DResult<C> {
    match v {
        Value::Array(parts) => {
            let mut acc = C::zero();
            for (i, p) in parts.iter().enumerate() {
                acc = acc + parse_coeff::<C>(p, &format!("{}/{}", pointer, i))?;
            }
            Ok(acc)
        }
        Value::Object(o) => {
            let c = match o.get("c") {
                None => BigRational::from_integer(1.into()),
                Some(x) => parse_rational(x, &format!("{}/c", pointer))?,
            };
            let mut z = CycloNumber::from_rational(c);
            if let Some(zeta) = o.get("zeta") {
                let p = format!("{}/zeta", pointer);
                let pair = zeta.as_array().filter(|a| a.len() == 2).ok_or_else(|| DescriptorError {
                    pointer: p.clone(),
                    message: "expected [order, exp]".into(),
                })?;
                let order = get_uint(Some(&pair[0]), &format!("{}/0", p))? as u32;
                if order == 0 {
                    return err(&format!("{}/0", p), "must be positive");
                }
                let exp = get_int(&pair[1], &format!("{}/1", p))?;
                z = z * CycloNumber::cyclo(order, exp);
            }
            let q = match o.get("q") {
                None => 0,
                Some(x) => get_int(x, &format!("{}/q", pointer))?,
            };
            C::from_formal(q, z).map_or_else(|| err(&format!("{}/q", pointer), "formal q in a root-of-unity ring"), Ok)
        }
        _ => Ok(C::from_cyclo(CycloNumber::from_rational(parse_rational(v, pointer)?))),
    }
}

fn parse_rational(v: &Value, pointer: &str) -> DResult<BigRational> {
    if let Some(i) = v.as_i64() {
        return Ok(BigRational::from_integer(i.into()));
    }
    let s = v.as_str().ok_or_else(|| DescriptorError {
        pointer: pointer.into(),
        message: "expected an integer or a rational string".into(),
    })?;
    let bad = || DescriptorError {
        pointer: pointer.into(),
        message: format!("cannot parse {:?} as a rational", s),
    };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Coefficient rings that may carry a power of the formal parameter.
pub trait FromFormal: Sized {
    fn from_formal(q: i64, c: CycloNumber) -> Option<Self>;
}

impl FromFormal for CycloNumber {
    fn from_formal(q: i64, c: CycloNumber) -> Option<Self> {
        (q == 0).then_some(c)
    }
}

impl FromFormal for LaurentQ {
    fn from_formal(q: i64, c: CycloNumber) -> Option<Self> {
        Some(LaurentQ::monomial(q, c))
    }
}

/// `[{"exps": [..], "coeff": ..}, ..]`
pub fn parse_poly<C>(v: &Value, n: usize, pointer: &str) -> DResult<SkewPoly<C>>
where
    C: Coefficient + FromFormal,
{
    let terms = v.as_array().ok_or_else(|| DescriptorError {
        pointer: pointer.into(),
        message: "expected an array of terms".into(),
    })?;
    let mut p = SkewPoly::zero(n);
    for (i, t) in terms.iter().enumerate() {
        let tp = format!("{}/{}", pointer, i);
        let exps = t.get("exps").and_then(Value::as_array).ok_or_else(|| DescriptorError {
            pointer: format!("{}/exps", tp),
            message: "expected an exponent array".into(),
        })?;
        if exps.len() != n {
            return err(&format!("{}/exps", tp), format!("expected {} exponents", n));
        }
        let e: Vec<u32> = exps
            .iter()
            .enumerate()
            .map(|(k, x)| get_uint(Some(x), &format!("{}/exps/{}", tp, k)).map(|x| x as u32))
            .collect::<DResult<_>>()?;
        let c = match t.get("coeff") {
            None => C::one(),
            Some(c) => parse_coeff::<C>(c, &format!("{}/coeff", tp))?,
        };
        p.accumulate(e, c);
    }
    Ok(p)
}

/// `{"images": [poly, …]}`, one polynomial per generator.
pub fn parse_map<C>(text: &str, n: usize) -> DResult<Endomorphism<C>>
where
    C: Coefficient + FromFormal,
{
    let v: Value = serde_json::from_str(text).map_err(|e| DescriptorError {
        pointer: String::new(),
        message: format!("invalid JSON: {}", e),
    })?;
    let imgs = v.get("images").and_then(Value::as_array).ok_or_else(|| DescriptorError {
        pointer: "/images".into(),
        message: "expected an array of generator images".into(),
    })?;
    if imgs.len() != n {
        return err("/images", format!("expected {} images", n));
    }
    let images = imgs
        .iter()
        .enumerate()
        .map(|(i, p)| parse_poly::<C>(p, n, &format!("/images/{}", i)))
        .collect::<DResult<_>>()?;
    Ok(Endomorphism { images })
}
