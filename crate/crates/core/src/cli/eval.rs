//! Evaluation of expressions and canonical printing of values.

use super::expr::Expr;
use crate::cg_algebra::{MeetSide, OrderedBasis, PeanoSpace};
use crate::error::{Error, Result};
use crate::exterior::{ExtMonomial, Exterior, ExteriorElement, Vector};
use crate::letterplace::{Biproduct, BitableauElement, LPMonomial, LetterplaceElement};
use crate::ring::{format_q, parse_q, q_to_i64, qi, Q};
use num_traits::One;
use crate::tensor_power::{TensorMonomial, TensorPower, TensorPowerElement};
use serde::Deserialize;
use std::collections::BTreeMap;

#[derive(Deserialize, Default)]
struct EnvFile {
    dim: Option<usize>,
    #[serde(default)]
    vectors: BTreeMap<String, Vec<String>>,
    basis: Option<Vec<Vec<String>>>,
}

/// Named vectors, the ambient dimension and the basis used by `*`.
#[derive(Clone, Debug)]
pub struct Env {
    dim: usize,
    vectors: BTreeMap<String, Vector>,
    basis: OrderedBasis,
}

fn parse_vector(v: &[String]) -> Result<Vector> {
    v.iter()
        .map(|s| parse_q(s).ok_or_else(|| Error::Eval(format!("bad rational {s:?}"))))
        .collect()
}

impl Env {
    pub fn standard(dim: usize) -> Env {
        Env {
            dim,
            vectors: BTreeMap::new(),
            basis: OrderedBasis::standard(dim),
        }
    }

    /// Reads `{"dim": n, "vectors": {"p1": ["1", "0", "2"], ...}, "basis": [...]}`;
    /// every field is optional.
    pub fn from_json(text: &str) -> Result<Env> {
        let file: EnvFile = serde_json::from_str(text).map_err(|e| Error::Eval(e.to_string()))?;
        let mut vectors = BTreeMap::new();
        for (name, v) in &file.vectors {
            vectors.insert(name.clone(), parse_vector(v)?);
        }
        let dim = match (file.dim, vectors.values().next()) {
            (Some(d), _) => d,
            (None, Some(v)) => v.len(),
            (None, None) => 3,
        };
        if let Some((name, v)) = vectors.iter().find(|(_, v)| v.len() != dim) {
            return Err(Error::Eval(format!("vector {name} has {} coordinates, expected {dim}", v.len())));
        }
        let basis = match file.basis {
            Some(b) => OrderedBasis::new(b.iter().map(|v| parse_vector(v)).collect::<Result<_>>()?)?,
            None => OrderedBasis::standard(dim),
        };
        if basis.dim() != dim {
            return Err(Error::DimensionMismatch(dim, basis.dim()));
        }
        Ok(Env { dim, vectors, basis })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn vector(&self, name: &str) -> Result<ExteriorElement> {
        if let Some(v) = self.vectors.get(name) {
            return Ok(Exterior::from_vector(v));
        }
        if let Some(k) = name.strip_prefix('e').and_then(|k| k.parse::<usize>().ok()) {
            if (1..=self.dim).contains(&k) {
                return Ok(Exterior::basis(self.dim, k));
            }
        }
        Err(Error::Eval(format!("unknown name {name}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Q),
    Ext(ExteriorElement),
    Tensor(TensorPowerElement),
    Letterplace(LetterplaceElement),
    Bitableau(BitableauElement),
}

fn integer(c: &Q) -> Result<i64> {
    q_to_i64(c).ok_or_else(|| Error::Eval(format!("{} is not an integer coefficient", format_q(c))))
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Ext(_) => "exterior element",
            Value::Tensor(_) => "tensor",
            Value::Letterplace(_) => "letterplace element",
            Value::Bitableau(_) => "bitableau",
        }
    }

    fn ext(&self, dim: usize) -> Result<ExteriorElement> {
        match self {
            Value::Scalar(c) => Ok(Exterior::scalar(dim, c.clone())),
            Value::Ext(e) => Ok(e.clone()),
            other => Err(Error::Eval(format!("expected an exterior element, got a {}", other.kind()))),
        }
    }

    fn letterplace(&self) -> Result<LetterplaceElement> {
        match self {
            Value::Scalar(c) => Ok(LetterplaceElement::one().scale(integer(c)?)),
            Value::Letterplace(e) => Ok(e.clone()),
            Value::Bitableau(b) => Ok(b.expand()),
            other => Err(Error::Eval(format!("expected a letterplace element, got a {}", other.kind()))),
        }
    }

    fn scale(&self, c: &Q) -> Result<Value> {
        Ok(match self {
            Value::Scalar(x) => Value::Scalar(x * c),
            Value::Ext(e) => Value::Ext(e.scale(c)),
            Value::Tensor(t) => Value::Tensor(t.scale(c)),
            Value::Letterplace(e) => Value::Letterplace(e.scale(integer(c)?)),
            Value::Bitableau(b) => Value::Bitableau(b.scale(&integer(c)?)),
        })
    }
}

fn tensor_of(v: &Value, dim: usize) -> Result<TensorPowerElement> {
    match v {
        Value::Tensor(t) => Ok(t.clone()),
        other => TensorPower::pure(&[other.ext(dim)?]),
    }
}

fn tensor_concat(a: &TensorPowerElement, b: &TensorPowerElement) -> Result<TensorPowerElement> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    let mut r = TensorPower::zero(a.m() + b.m(), a.dim());
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            let folds = ka.folds().iter().chain(kb.folds()).copied().collect();
            r.add_term(TensorMonomial::new(folds), ca * cb);
        }
    }
    Ok(r)
}

fn star_tensor(basis: &OrderedBasis, t: &TensorPowerElement) -> Result<TensorPowerElement> {
    let n = basis.dim();
    let mut r = TensorPower::zero(t.m(), n);
    for (k, c) in t.terms() {
        let folds = k
            .folds()
            .iter()
            .map(|f| basis.hodge(&Exterior::monomial(n, *f, qi(1))))
            .collect::<Result<Vec<_>>>()?;
        r = r.add(&TensorPower::pure(&folds)?.scale(c))?;
    }
    Ok(r)
}

fn combine(a: Value, b: Value, dim: usize, sign: i32) -> Result<Value> {
    use Value::*;
    let b = if sign < 0 { b.scale(&qi(-1))? } else { b };
    Ok(match (a, b) {
        (Scalar(x), Scalar(y)) => Scalar(x + y),
        (Tensor(x), Tensor(y)) => Tensor(x.add(&y)?),
        (Bitableau(x), Bitableau(y)) => Bitableau(x.add(&y)),
        (x @ (Letterplace(_) | Bitableau(_)), y) | (y, x @ (Letterplace(_) | Bitableau(_))) => {
            Letterplace(x.letterplace()?.add(&y.letterplace()?))
        }
        (x, y) => Ext(x.ext(dim)?.add(&y.ext(dim)?)?),
    })
}

fn wedge(a: Value, b: Value) -> Result<Value> {
    use Value::*;
    Ok(match (a, b) {
        (Scalar(c), v) | (v, Scalar(c)) => v.scale(&c)?,
        (Ext(x), Ext(y)) => Ext(x.wedge(&y)?),
        (Tensor(x), Tensor(y)) => Tensor(x.graded_product(&y)?),
        (Bitableau(x), Bitableau(y)) => Bitableau(x.mul(&y)),
        (x @ (Letterplace(_) | Bitableau(_)), y @ (Letterplace(_) | Bitableau(_))) => {
            Letterplace(x.letterplace()?.mul(&y.letterplace()?))
        }
        (x, y) => {
            return Err(Error::Eval(format!("cannot multiply a {} by a {}", x.kind(), y.kind())));
        }
    })
}

pub fn eval(e: &Expr, env: &Env) -> Result<Value> {
    let n = env.dim;
    Ok(match e {
        Expr::Number(c) => Value::Scalar(c.clone()),
        Expr::Name(name) => Value::Ext(env.vector(name)?),
        Expr::Var(l, p) => Value::Letterplace(LetterplaceElement::var(*l, *p)),
        Expr::Biproduct(w, d) => Value::Bitableau(BitableauElement::from_rows(&[Biproduct::new(w.clone(), d)], 1)),
        Expr::Neg(x) => eval(x, env)?.scale(&qi(-1))?,
        Expr::Star(x) => match eval(x, env)? {
            Value::Tensor(t) => Value::Tensor(star_tensor(&env.basis, &t)?),
            v => Value::Ext(env.basis.hodge(&v.ext(n)?)?),
        },
        Expr::Wedge(a, b) => wedge(eval(a, env)?, eval(b, env)?)?,
        Expr::Meet(a, b) => {
            let ps = PeanoSpace::standard(n);
            Value::Ext(ps.meet(&eval(a, env)?.ext(n)?, &eval(b, env)?.ext(n)?, MeetSide::Left)?)
        }
        Expr::Tensor(a, b) => Value::Tensor(tensor_concat(&tensor_of(&eval(a, env)?, n)?, &tensor_of(&eval(b, env)?, n)?)?),
        Expr::Add(a, b) => combine(eval(a, env)?, eval(b, env)?, n, 1)?,
        Expr::Sub(a, b) => combine(eval(a, env)?, eval(b, env)?, n, -1)?,
        Expr::Diamond(h, j, i, x) => match eval(x, env)? {
            Value::Tensor(t) => Value::Tensor(t.diamond(*h, *j, *i)?),
            v @ (Value::Letterplace(_) | Value::Bitableau(_)) => {
                let lp = v.letterplace()?;
                let (j, i) = (place(*j)?, place(*i)?);
                if i == j {
                    if *h != 1 {
                        return Err(Error::InvalidArgument(
                            "diagonal polarization is defined only for h = 1".into(),
                        ));
                    }
                    Value::Letterplace(lp.polarize(j, i))
                } else {
                    Value::Letterplace(lp.polarize_divided(*h, j, i)?)
                }
            }
            other => return Err(Error::Eval(format!("geometric product of a {}", other.kind()))),
        },
        Expr::Bracket(items) => {
            let mut acc = Exterior::one(n);
            for it in items {
                acc = acc.wedge(&eval(it, env)?.ext(n)?)?;
            }
            Value::Scalar(PeanoSpace::standard(n).bracket_of(&acc))
        }
    })
}

fn place(p: usize) -> Result<u8> {
    u8::try_from(p)
        .ok()
        .filter(|p| *p > 0)
        .ok_or_else(|| Error::Eval(format!("bad place {p}")))
}

fn ext_mono(m: ExtMonomial) -> String {
    m.indices().iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join(" ^ ")
}

fn lp_mono(m: &LPMonomial) -> String {
    m.vars()
        .iter()
        .map(|v| format!("({}|{})", v.letter, v.place))
        .collect::<Vec<_>>()
        .join(" ^ ")
}

/// `c ^ body`, dropping the coefficient when it is ±1 and the body is
/// nonempty.
fn term(c: &Q, body: &str) -> String {
    if body.is_empty() {
        return format_q(c);
    }
    if c.is_one() {
        body.to_string()
    } else if (-c).is_one() {
        format!("-{body}")
    } else {
        format!("{} ^ {body}", format_q(c))
    }
}

fn join_terms(parts: Vec<String>) -> String {
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Canonical printout; evaluating it again reproduces the value.
pub fn print_value(v: &Value) -> String {
    match v {
        Value::Scalar(c) => format_q(c),
        Value::Ext(e) => join_terms(e.terms().map(|(m, c)| term(c, &ext_mono(*m))).collect()),
        Value::Tensor(t) => join_terms(
            t.terms()
                .map(|(k, c)| {
                    let folds: Vec<String> = k
                        .folds()
                        .iter()
                        .map(|f| if f.is_unit() { "1".to_string() } else { ext_mono(*f) })
                        .collect();
                    let first = if k.fold(1).is_unit() {
                        format_q(c)
                    } else {
                        term(c, &folds[0])
                    };
                    std::iter::once(first)
                        .chain(folds[1..].iter().cloned())
                        .collect::<Vec<_>>()
                        .join(" # ")
                })
                .collect(),
        ),
        Value::Letterplace(e) => join_terms(e.terms().map(|(m, c)| term(&qi(*c), &lp_mono(m))).collect()),
        Value::Bitableau(b) => join_terms(
            b.terms()
                .map(|(rows, c)| {
                    let body = rows.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ^ ");
                    term(&qi(*c), &body)
                })
                .collect(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::super::expr::parse;
    use super::*;

    fn run(text: &str) -> String {
        print_value(&eval(&parse(text).unwrap(), &Env::standard(3)).unwrap())
    }

    #[test]
    fn basic_values() {
        assert_eq!(run("e1 ^ e2 - 2 ^ e2 ^ e1"), "3 ^ e1 ^ e2");
        assert_eq!(run("[e1, e2, e3]"), "1");
        assert_eq!(run("*e1"), "e2 ^ e3");
        assert_eq!(run("(e1 ^ e2) & (e2 ^ e3)"), run("e2"));
        assert_eq!(run("dia(1, 2, 1, e1 ^ e2 # e3)"), "e1 # e2 ^ e3 + -e2 # e1 ^ e3");
        assert_eq!(run("bp(xy; 1:1, 2:1) - (x|1) ^ (y|2)"), "-(y|1) ^ (x|2)");
    }
}
