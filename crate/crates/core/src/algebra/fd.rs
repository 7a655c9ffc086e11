//! Finite-dimensional *-algebras given by structure constants.

use crate::error::AlgebraError;
use crate::expr::{Letter, NCExpr};
use crate::presentation::{Generator, GeneratorKind, Presentation};
use crate::scalar::Scalar;

/// A finite-dimensional unital *-algebra on a named basis `b_0 … b_{d-1}`.
///
/// `constants[i][j][k]` is the coefficient of `b_k` in `b_i b_j`. The
/// involution is conjugate-linear; `involution[i]` holds the coordinates of
/// `b_i*`. The complement vectors together with the unit form a second basis,
/// used to write elements as `λ·1 + (complement part)` in free products.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteDimAlgebra {
    names: Vec<String>,
    constants: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    involution: Vec<Vec<Scalar>>,
    complement: Vec<Vec<Scalar>>,
    to_reduced: Vec<Vec<Scalar>>,
}

impl FiniteDimAlgebra {
    pub fn new(
        names: Vec<String>,
        constants: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        involution: Vec<Vec<Scalar>>,
        complement: Vec<Vec<Scalar>>,
    ) -> Result<Self, AlgebraError> {
        let d = names.len();
        if d == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        let bad = |m: &str| Err(AlgebraError::InvalidStructure(m.to_string()));
        if constants.len() != d
            || constants.iter().any(|r| r.len() != d || r.iter().any(|c| c.len() != d))
        {
            return bad("structure constants must be dim³");
        }
        if unit.len() != d || involution.len() != d || involution.iter().any(|c| c.len() != d) {
            return bad("unit and involution must match the dimension");
        }
        if complement.len() + 1 != d || complement.iter().any(|c| c.len() != d) {
            return bad("complement must have dim - 1 vectors of length dim");
        }
        let mut columns = vec![unit.clone()];
        columns.extend(complement.iter().cloned());
        let Some(to_reduced) = invert_columns(&columns) else {
            return bad("unit and complement do not span the algebra");
        };
        let alg = FiniteDimAlgebra { names, constants, unit, involution, complement, to_reduced };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        let basis = |i: usize| -> Vec<Scalar> {
            let mut v = vec![Scalar::zero(); d];
            v[i] = Scalar::one();
            v
        };
        let fail = |m: String| Err(AlgebraError::InvalidStructure(m));
        for i in 0..d {
            let bi = basis(i);
            if self.mul_vec(&self.unit, &bi) != bi || self.mul_vec(&bi, &self.unit) != bi {
                return fail(format!("unit does not act trivially on {}", self.names[i]));
            }
            if self.star_vec(&self.involution[i]) != bi {
                return fail(format!("involution is not involutive on {}", self.names[i]));
            }
            for j in 0..d {
                let bij = self.mul_vec(&bi, &basis(j));
                let lhs = self.star_vec(&bij);
                let rhs = self.mul_vec(&self.involution[j], &self.involution[i]);
                if lhs != rhs {
                    return fail(format!(
                        "involution not anti-multiplicative on ({}, {})",
                        self.names[i], self.names[j]
                    ));
                }
                for k in 0..d {
                    let bk = basis(k);
                    if self.mul_vec(&bij, &bk) != self.mul_vec(&bi, &self.mul_vec(&basis(j), &bk)) {
                        return fail(format!(
                            "not associative on ({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Scalar>>] {
        &self.constants
    }

    pub fn unit_vector(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn complement(&self) -> &[Vec<Scalar>] {
        &self.complement
    }

    pub fn involution_of(&self, i: usize) -> &[Scalar] {
        &self.involution[i]
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.constants[i][j] == self.constants[j][i]))
    }

    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, ck) in self.constants[i][j].iter().enumerate() {
                    if !ck.is_zero() {
                        out[k] += &(&c * ck);
                    }
                }
            }
        }
        out
    }

    pub fn star_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let c = xi.conj();
            for (k, s) in self.involution[i].iter().enumerate() {
                if !s.is_zero() {
                    out[k] += &(&c * s);
                }
            }
        }
        out
    }

    /// Coordinates against `[1, r_0, r_1, …]`: entry 0 is the unit coefficient.
    pub fn split(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.to_reduced
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// The canonical presentation: every basis element is a generator; the
    /// relations are the multiplication table and `Σ uᵢ bᵢ − 1`.
    pub fn canonical_presentation(&self) -> Presentation {
        let d = self.dim();
        let mut gens = Vec::with_capacity(d);
        let mut star_rels = Vec::new();
        for i in 0..d {
            let star = &self.involution[i];
            let single = single_basis(star);
            let kind = match single {
                Some(j) if j == i => GeneratorKind::SelfAdjoint,
                Some(j) if j < i && single_basis(&self.involution[j]) == Some(i) => {
                    GeneratorKind::AdjointOf(self.names[j].clone())
                }
                Some(j) if j > i => GeneratorKind::Free,
                _ => {
                    star_rels.push(
                        NCExpr::letter(Letter::star(&self.names[i])).sub(&self.vec_expr(star)),
                    );
                    GeneratorKind::Free
                }
            };
            gens.push(Generator { name: self.names[i].clone(), kind });
        }
        let mut rels = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let lhs = NCExpr::word(&[&self.names[i], &self.names[j]]);
                rels.push(lhs.sub(&self.vec_expr(&self.constants[i][j])));
            }
        }
        rels.push(self.vec_expr(&self.unit).sub(&NCExpr::one()));
        rels.extend(star_rels);
        Presentation::new(gens, rels).expect("basis names are distinct")
    }

    /// `Σ xᵢ bᵢ` as an expression in the basis generators.
    pub fn vec_expr(&self, x: &[Scalar]) -> NCExpr {
        x.iter()
            .enumerate()
            .fold(NCExpr::zero(), |acc, (i, c)| acc.add(&NCExpr::generator(&self.names[i]).scale(c)))
    }

    pub(crate) fn complement_label(&self, j: usize) -> String {
        let v = &self.complement[j];
        match single_basis(v) {
            Some(i) => self.names[i].clone(),
            None => format!("({})", self.vec_expr(v)),
        }
    }
}

fn single_basis(v: &[Scalar]) -> Option<usize> {
    let nz: Vec<usize> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect();
    match nz.as_slice() {
        [i] if v[*i].is_one() => Some(*i),
        _ => None,
    }
}

/// Inverse of the square matrix whose columns are `cols`, as row vectors.
fn invert_columns(cols: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let d = cols.len();
    // augmented [M | I], M[r][c] = cols[c][r]
    let mut m: Vec<Vec<Scalar>> = (0..d)
        .map(|r| {
            let mut row: Vec<Scalar> = (0..d).map(|c| cols[c][r].clone()).collect();
            row.extend((0..d).map(|c| if c == r { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].inv()?;
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * d {
                    let delta = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[d..].to_vec()).collect())
}

fn kron(a: usize, b: usize) -> Scalar {
    if a == b {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// `ℂⁿ` with minimal projections `e1 … en`.
pub fn cn_structure(n: usize) -> Result<FiniteDimAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroDimension);
    }
    let names = (1..=n).map(|i| format!("e{i}")).collect();
    let constants = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| if i == j && j == k { Scalar::one() } else { Scalar::zero() }).collect()).collect())
        .collect();
    let unit = vec![Scalar::one(); n];
    let involution = (0..n).map(|i| (0..n).map(|k| kron(i, k)).collect()).collect();
    let complement = (0..n - 1).map(|i| (0..n).map(|k| kron(i, k)).collect()).collect();
    FiniteDimAlgebra::new(names, constants, unit, involution, complement)
}

/// `M_n(ℂ)` with matrix units `E_ij`; basis index of `E_ij` is `i·n + j`.
pub fn matrix_structure(n: usize) -> Result<FiniteDimAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroDimension);
    }
    let d = n * n;
    let name = |i: usize, j: usize| {
        if n < 10 {
            format!("E{}{}", i + 1, j + 1)
        } else {
            format!("E{}_{}", i + 1, j + 1)
        }
    };
    let names = (0..d).map(|a| name(a / n, a % n)).collect();
    let constants = (0..d)
        .map(|a| {
            (0..d)
                .map(|b| {
                    let (i, j) = (a / n, a % n);
                    let (k, l) = (b / n, b % n);
                    (0..d).map(|c| if j == k && c == i * n + l { Scalar::one() } else { Scalar::zero() }).collect()
                })
                .collect()
        })
        .collect();
    let unit = (0..d).map(|a| if a / n == a % n { Scalar::one() } else { Scalar::zero() }).collect::<Vec<_>>();
    let involution = (0..d)
        .map(|a| {
            let t = (a % n) * n + a / n;
            (0..d).map(|c| kron(c, t)).collect()
        })
        .collect();
    let inv_n = Scalar::ratio(1, n as i64);
    let complement = (0..d)
        .filter(|&a| a != d - 1)
        .map(|a| {
            let mut v: Vec<Scalar> = (0..d).map(|c| kron(c, a)).collect();
            if a / n == a % n {
                for (c, u) in unit.iter().enumerate() {
                    v[c] = &v[c] - &(u * &inv_n);
                }
            }
            v
        })
        .collect();
    FiniteDimAlgebra::new(names, constants, unit, involution, complement)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_dimension_rejected() {
        assert_eq!(cn_structure(0).unwrap_err(), AlgebraError::ZeroDimension);
        assert_eq!(matrix_structure(0).unwrap_err(), AlgebraError::ZeroDimension);
    }

    #[test]
    fn builtins_validate() {
        for n in 1..=4 {
            cn_structure(n).unwrap();
        }
        for n in 1..=3 {
            matrix_structure(n).unwrap();
        }
    }

    #[test]
    fn non_associative_table_rejected() {
        // ℂ² with e1 e2 = e1, which breaks associativity against the unit
        let mut a = cn_structure(2).unwrap();
        a.constants[0][1][0] = Scalar::one();
        let r = FiniteDimAlgebra::new(a.names.clone(), a.constants.clone(), a.unit.clone(), a.involution.clone(), a.complement.clone());
        assert!(matches!(r, Err(AlgebraError::InvalidStructure(_))));
    }

    #[test]
    fn m2_split_uses_traceless_complement() {
        let m = matrix_structure(2).unwrap();
        // E22 = 1/2·1 − (E11 − 1/2·1)
        let e22 = vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one()];
        assert_eq!(m.split(&e22), vec![Scalar::ratio(1, 2), Scalar::from_int(-1), Scalar::zero(), Scalar::zero()]);
    }

    #[test]
    fn m2_presentation_pairs_off_diagonals() {
        let p = matrix_structure(2).unwrap().canonical_presentation();
        assert_eq!(p.generator("E11").unwrap().kind, GeneratorKind::SelfAdjoint);
        assert_eq!(p.generator("E12").unwrap().kind, GeneratorKind::Free);
        assert_eq!(p.generator("E21").unwrap().kind, GeneratorKind::AdjointOf("E12".into()));
    }
}
