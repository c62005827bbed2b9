//! Finite-dimensional Lie superalgebras given by structure constants.

use crate::element::Parity;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperalgebraData {
    name: String,
    names: Vec<String>,
    parities: Vec<Parity>,
    /// `brackets[i][j]` = coordinates of `[e_i, e_j]`.
    brackets: Vec<Vec<Vec<Scalar>>>,
}

impl LieSuperalgebraData {
    /// Builds the algebra from brackets of ordered pairs; the super-antisymmetric
    /// mirror of each given bracket is filled in. Validates super-Jacobi.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<(String, Parity)>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<Scalar>)>,
    ) -> Result<Self> {
        let dim = basis.len();
        let (names, parities): (Vec<_>, Vec<_>) = basis.into_iter().unzip();
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(Error::InvalidLieData(format!("duplicate basis element `{n}`")));
            }
        }
        let zero = vec![Scalar::zero(); dim];
        let mut given: Vec<Vec<Option<Vec<Scalar>>>> = vec![vec![None; dim]; dim];
        for ((i, j), v) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::IndexOutOfRange { index: i.max(j), max: dim.saturating_sub(1) });
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            given[i][j] = Some(v);
        }
        let mut table = vec![vec![zero.clone(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let sign = -parities[i].koszul(parities[j]);
                let mirror = given[j][i].as_ref().map(|v| v.iter().map(|x| x * &sign).collect::<Vec<_>>());
                table[i][j] = match (&given[i][j], mirror) {
                    (Some(d), Some(m)) => {
                        if *d != m {
                            return Err(Error::InvalidLieData(format!(
                                "[{}, {}] is not super-antisymmetric",
                                names[i], names[j]
                            )));
                        }
                        d.clone()
                    }
                    (Some(d), None) => d.clone(),
                    (None, Some(m)) => m,
                    (None, None) => zero.clone(),
                };
            }
        }
        let data = LieSuperalgebraData { name: name.into(), names, parities, brackets: table };
        data.validate()?;
        Ok(data)
    }

    fn validate(&self) -> Result<()> {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let expected = self.parities[i].add(self.parities[j]);
                for (k, c) in self.brackets[i][j].iter().enumerate() {
                    if !c.is_zero() && self.parities[k] != expected {
                        return Err(Error::InvalidLieData(format!(
                            "[{}, {}] has a component of the wrong parity",
                            self.names[i], self.names[j]
                        )));
                    }
                }
                if i == j && self.parities[i] == Parity::Even && self.brackets[i][i].iter().any(|c| !c.is_zero()) {
                    return Err(Error::InvalidLieData(format!("[{0}, {0}] must vanish", self.names[i])));
                }
            }
        }
        if let Some((a, b, c)) = self.jacobi_witness() {
            return Err(Error::InvalidLieData(format!(
                "super-Jacobi fails on ({}, {}, {})",
                self.names[a], self.names[b], self.names[c]
            )));
        }
        Ok(())
    }

    /// First triple violating `[a,[b,c]] = [[a,b],c] + (−1)^{p(a)p(b)}[b,[a,c]]`.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize)> {
        let dim = self.dim();
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    let lhs = self.bracket(&unit(dim, a), &self.brackets[b][c]);
                    let mut rhs = self.bracket(&self.brackets[a][b], &unit(dim, c));
                    let sign = self.parities[a].koszul(self.parities[b]);
                    for (r, x) in rhs.iter_mut().zip(self.bracket(&unit(dim, b), &self.brackets[a][c])) {
                        *r += &(&sign * &x);
                    }
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Scalar] {
        &self.brackets[i][j]
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let dim = self.dim();
        let mut out = vec![Scalar::zero(); dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.brackets[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad e_i` acting on coordinate columns.
    pub fn ad(&self, i: usize) -> Matrix {
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        for j in 0..dim {
            for (k, c) in self.brackets[i][j].iter().enumerate() {
                m.set(k, j, c.clone());
            }
        }
        m
    }

    /// Killing form `str(ad a · ad b)` on basis elements.
    pub fn killing_form(&self) -> Matrix {
        let dim = self.dim();
        let ads: Vec<Matrix> = (0..dim).map(|i| self.ad(i)).collect();
        let mut k = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                let prod = ads[i].mul(&ads[j]).expect("square");
                let mut t = Scalar::zero();
                for d in 0..dim {
                    let x = prod.get(d, d);
                    if self.parities[d] == Parity::Even {
                        t += x;
                    } else {
                        t -= x;
                    }
                }
                k.set(i, j, t);
            }
        }
        k
    }

    /// Checks that `rho` (one matrix per basis element, even-only) is a representation.
    pub fn check_representation(&self, rho: &[Matrix]) -> Result<()> {
        if rho.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: rho.len() });
        }
        let n = rho.first().map_or(0, Matrix::rows);
        for m in rho {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.rows().max(m.cols()) });
            }
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let sign = self.parities[i].koszul(self.parities[j]);
                let lhs = rho[i].mul(&rho[j])?.sub(&rho[j].mul(&rho[i])?.scale(&sign))?;
                let mut rhs = Matrix::zeros(n, n);
                for (k, c) in self.brackets[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        rhs = rhs.add(&rho[k].scale(c))?;
                    }
                }
                if lhs != rhs {
                    return Err(Error::InvalidRepresentation(self.names[i].clone(), self.names[j].clone()));
                }
            }
        }
        Ok(())
    }

    /// Is this algebra abelian?
    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().flatten().flatten().all(Scalar::is_zero)
    }

    pub fn sl2() -> Self {
        let b = vec![("e".into(), Parity::Even), ("f".into(), Parity::Even), ("h".into(), Parity::Even)];
        Self::new(
            "sl2",
            b,
            vec![
                ((0, 1), ints(&[0, 0, 1])),
                ((2, 0), ints(&[2, 0, 0])),
                ((2, 1), ints(&[0, -2, 0])),
            ],
        )
        .expect("sl2 is valid")
    }

    /// `gl2` with basis `e, f, h, z`, `z` the identity matrix.
    pub fn gl2() -> Self {
        let b = vec![
            ("e".into(), Parity::Even),
            ("f".into(), Parity::Even),
            ("h".into(), Parity::Even),
            ("z".into(), Parity::Even),
        ];
        Self::new(
            "gl2",
            b,
            vec![
                ((0, 1), ints(&[0, 0, 1, 0])),
                ((2, 0), ints(&[2, 0, 0, 0])),
                ((2, 1), ints(&[0, -2, 0, 0])),
            ],
        )
        .expect("gl2 is valid")
    }

    /// Borel subalgebra of sl2 with basis `h, e`.
    pub fn borel_sl2() -> Self {
        let b = vec![("h".into(), Parity::Even), ("e".into(), Parity::Even)];
        Self::new("borel", b, vec![((0, 1), ints(&[0, 2]))]).expect("borel is valid")
    }

    /// Heisenberg algebra with `[p, q] = z`.
    pub fn heisenberg() -> Self {
        let b = vec![("p".into(), Parity::Even), ("q".into(), Parity::Even), ("z".into(), Parity::Even)];
        Self::new("h3", b, vec![((0, 1), ints(&[0, 0, 1]))]).expect("heisenberg is valid")
    }

    pub fn abelian(n: usize) -> Self {
        let b = (1..=n).map(|k| (format!("a{k}"), Parity::Even)).collect();
        Self::new(format!("abelian{n}"), b, Vec::new()).expect("abelian is valid")
    }

    /// Looks up a built-in Lie algebra by name.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "sl2" => Some(Self::sl2()),
            "gl2" => Some(Self::gl2()),
            "borel" | "borel_sl2" | "b2" => Some(Self::borel_sl2()),
            "h3" | "heisenberg" => Some(Self::heisenberg()),
            _ => name.strip_prefix("abelian").and_then(|k| k.parse().ok()).map(Self::abelian),
        }
    }

    /// The 2-dimensional standard representation of sl2 (`e, f, h` order).
    pub fn sl2_standard_rep() -> Vec<Matrix> {
        vec![
            Matrix::from_ints(&[&[0, 1], &[0, 0]]),
            Matrix::from_ints(&[&[0, 0], &[1, 0]]),
            Matrix::from_ints(&[&[1, 0], &[0, -1]]),
        ]
    }

    /// Adjoint representation matrices.
    pub fn adjoint_rep(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.ad(i)).collect()
    }
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}

fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_killing_form_value() {
        let k = LieSuperalgebraData::sl2().killing_form();
        assert_eq!(k.get(0, 1), &Scalar::from_int(4));
        assert_eq!(k.get(2, 2), &Scalar::from_int(8));
        assert!(k.get(0, 0).is_zero());
    }

    #[test]
    fn jacobi_failure_is_reported() {
        // [a,b]=c, [a,c]=a fails Jacobi on (a,b,c)
        let b = vec![("a".into(), Parity::Even), ("b".into(), Parity::Even), ("c".into(), Parity::Even)];
        let r = LieSuperalgebraData::new(
            "bad",
            b,
            vec![((0, 1), ints(&[0, 0, 1])), ((0, 2), ints(&[1, 0, 0]))],
        );
        assert!(matches!(r, Err(Error::InvalidLieData(_))));
    }

    #[test]
    fn standard_and_adjoint_reps() {
        let g = LieSuperalgebraData::sl2();
        g.check_representation(&LieSuperalgebraData::sl2_standard_rep()).unwrap();
        g.check_representation(&g.adjoint_rep()).unwrap();
        let mut bad = LieSuperalgebraData::sl2_standard_rep();
        bad[2] = Matrix::identity(2);
        assert!(matches!(g.check_representation(&bad), Err(Error::InvalidRepresentation(_, _))));
    }
}
