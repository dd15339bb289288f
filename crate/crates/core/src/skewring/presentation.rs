use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Root-of-unity factor of a formal-mode presentation: p_ij also carries ζ_ell^{phi_ij}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPart {
    pub ell: u32,
    pub phi: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// q is a primitive ell-th root of unity.
    RootOfUnity { ell: u32 },
    /// q is not a root of unity. `root` optionally multiplies each p_ij by a root of unity.
    Formal { root: Option<RootPart> },
}

/// Exponents of a product of parameters: q^formal · ζ^root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ParamExp {
    pub formal: i64,
    pub root: i64,
}

/// k_{p_ij}[x_1, …, x_n] with x_j x_i = p_ij x_i x_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    n: usize,
    mode: Mode,
    phi: Vec<Vec<i64>>,
}

fn check_antisymmetric(phi: &[Vec<i64>], n: usize, modulus: Option<u32>, what: &str) -> Result<Vec<Vec<i64>>> {
    if phi.len() != n || phi.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension(format!("{} must be {}x{}", what, n, n)));
    }
    let red = |x: i64| match modulus {
        Some(m) => x.rem_euclid(m as i64),
        None => x,
    };
    let out: Vec<Vec<i64>> = phi.iter().map(|r| r.iter().map(|&x| red(x)).collect()).collect();
    for i in 0..n {
        if out[i][i] != 0 {
            return Err(Error::Precondition(format!("{}[{}][{}] must be 0", what, i + 1, i + 1)));
        }
        for j in 0..i {
            if red(out[i][j] + out[j][i]) != 0 {
                return Err(Error::Precondition(format!(
                    "{} is not antisymmetric at ({}, {})",
                    what,
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(out)
}

/// Fills the strictly lower triangle from the strictly upper one.
pub fn complete_antisymmetric(upper: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut m = alloc::vec![alloc::vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            m[i][j] = upper[i][j];
            m[j][i] = -upper[i][j];
        }
    }
    m
}

impl RingPresentation {
    pub fn root_of_unity(ell: u32, phi: Vec<Vec<i64>>) -> Result<RingPresentation> {
        if ell == 0 {
            return Err(Error::Precondition("ell must be positive".into()));
        }
        let n = phi.len();
        if n < 2 {
            return Err(Error::Precondition("at least two generators are required".into()));
        }
        let phi = check_antisymmetric(&phi, n, Some(ell), "phi")?;
        Ok(RingPresentation {
            n,
            mode: Mode::RootOfUnity { ell },
            phi,
        })
    }

    pub fn formal(phi: Vec<Vec<i64>>, root: Option<RootPart>) -> Result<RingPresentation> {
        let n = phi.len();
        if n < 2 {
            return Err(Error::Precondition("at least two generators are required".into()));
        }
        let phi = check_antisymmetric(&phi, n, None, "phi")?;
        let root = match root {
            None => None,
            Some(rp) => {
                if rp.ell == 0 {
                    return Err(Error::Precondition("root.ell must be positive".into()));
                }
                let rphi = check_antisymmetric(&rp.phi, n, Some(rp.ell), "root.phi")?;
                Some(RootPart { ell: rp.ell, phi: rphi })
            }
        };
        Ok(RingPresentation {
            n,
            mode: Mode::Formal { root },
            phi,
        })
    }

    /// All p_ij = q^{c} for i < j.
    pub fn uniform_root(n: usize, ell: u32, c: i64) -> Result<RingPresentation> {
        let upper = alloc::vec![alloc::vec![c; n]; n];
        RingPresentation::root_of_unity(ell, complete_antisymmetric(&upper, n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    pub fn phi(&self) -> &[Vec<i64>] {
        &self.phi
    }

    pub fn is_root_mode(&self) -> bool {
        matches!(self.mode, Mode::RootOfUnity { .. })
    }

    /// ℓ in root mode.
    pub fn ell(&self) -> Option<u32> {
        match self.mode {
            Mode::RootOfUnity { ell } => Some(ell),
            Mode::Formal { .. } => None,
        }
    }

    /// Order of the root of unity carried by the parameters (1 if none).
    pub fn root_order(&self) -> u32 {
        match &self.mode {
            Mode::RootOfUnity { ell } => *ell,
            Mode::Formal { root: Some(rp) } => rp.ell,
            Mode::Formal { root: None } => 1,
        }
    }

    /// Exponents of p_ij.
    pub fn param(&self, i: usize, j: usize) -> ParamExp {
        match &self.mode {
            Mode::RootOfUnity { .. } => ParamExp {
                formal: 0,
                root: self.phi[i][j],
            },
            Mode::Formal { root } => ParamExp {
                formal: self.phi[i][j],
                root: root.as_ref().map_or(0, |rp| rp.phi[i][j]),
            },
        }
    }

    /// Exponents of ∏_j p_ij^{d_j}, with `skip` excluded from the product.
    pub fn row_product(&self, i: usize, d: &[u32], skip: Option<usize>) -> ParamExp {
        let mut acc = ParamExp::default();
        for (j, &dj) in d.iter().enumerate() {
            if Some(j) == skip || dj == 0 {
                continue;
            }
            let p = self.param(i, j);
            acc.formal += p.formal * dj as i64;
            acc.root += p.root * dj as i64;
        }
        acc
    }

    /// Whether q^formal ζ^root equals q^formal' ζ^root'.
    pub fn param_eq(&self, a: ParamExp, b: ParamExp) -> bool {
        let m = self.root_order() as i64;
        a.formal == b.formal && (a.root - b.root).rem_euclid(m) == 0
    }

    pub fn param_is_one(&self, a: ParamExp) -> bool {
        self.param_eq(a, ParamExp::default())
    }

    /// (H1): no generator is central, i.e. every row has some p_ij ≠ 1.
    pub fn h1_holds(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).any(|j| !self.param_is_one(self.param(i, j))))
    }

    /// The presentation of the tensor product with `other` (variables appended).
    pub fn tensor(&self, other: &RingPresentation) -> Result<RingPresentation> {
        let n = self.n + other.n;
        let mut phi = alloc::vec![alloc::vec![0i64; n]; n];
        for i in 0..self.n {
            for j in 0..self.n {
                phi[i][j] = self.phi[i][j];
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                phi[self.n + i][self.n + j] = other.phi[i][j];
            }
        }
        match (&self.mode, &other.mode) {
            (Mode::RootOfUnity { ell: a }, Mode::RootOfUnity { ell: b }) if a == b => {
                RingPresentation::root_of_unity(*a, phi)
            }
            _ => Err(Error::Precondition(
                "tensor products are supported for root-of-unity presentations of equal order".into(),
            )),
        }
    }
}
