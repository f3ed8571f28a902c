//! Every Hurwitz equivalence the crate certifies, with its endpoints, its
//! generated certificate, and the file name it is frozen under.

use crate::braid::{self, lift_factorization, nodal_tangency_certificate, triple_point_certificates};
use crate::error::{Error, Result};
use crate::factorization::{check_certificate, Factorization, HurwitzCertificate};
use crate::identities::{
    invariance_certificate, sigma_exchange_certificate, sigma_exchange_endpoints, square_to_cube_certificate,
    square_to_cube_endpoints, Invariant,
};
use crate::mcg::{named, MCGWord};
use std::fs;
use std::path::{Path, PathBuf};

/// `source ∼ target` witnessed by `certificate`.
#[derive(Clone, Debug)]
pub struct Claim {
    pub name: String,
    pub source: Factorization,
    pub target: Factorization,
    pub certificate: HurwitzCertificate,
}

impl Claim {
    pub fn file_name(&self) -> String {
        format!("{}.cert", self.name)
    }

    /// Replays `cert` (the frozen copy, say) on the source and compares with the target.
    pub fn check_with(&self, cert: &HurwitzCertificate) -> Result<bool> {
        check_certificate(&self.source, cert, &self.target)
    }
}

fn lifted(name: &str) -> Result<Factorization> {
    let b = braid::braid_factorization(name).expect("builtin braid factorization");
    Ok(lift_factorization(&b)?.factorization)
}

/// The invariance claims `(X)_γ ∼ X` for `X ∈ {T, W0, W1}` and `γ` each
/// generator and `ρ`, then the two exchange identities and the braid rewrites.
pub fn claims() -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    let gammas: Vec<(String, MCGWord)> =
        (1..=5u8).map(|i| (format!("z{i}"), MCGWord::generator(i))).chain([("rho".into(), named::rho())]).collect();
    for x in [Invariant::T, Invariant::W0, Invariant::W1] {
        for (g, gamma) in &gammas {
            out.push(Claim {
                name: format!("invariance_{x}_{g}"),
                source: x.factorization().conjugate(gamma),
                target: x.factorization(),
                certificate: invariance_certificate(x, gamma),
            });
        }
    }
    let (source, target) = square_to_cube_endpoints();
    out.push(Claim { name: "square_to_cube".into(), source, target, certificate: square_to_cube_certificate() });
    let (source, target) = sigma_exchange_endpoints();
    out.push(Claim { name: "sigma_exchange".into(), source, target, certificate: sigma_exchange_certificate() });
    out.push(Claim {
        name: "nodal_tangency".into(),
        source: lifted("B0_nodal")?,
        target: lifted("B0_tangency")?,
        certificate: nodal_tangency_certificate(),
    });
    let tp = triple_point_certificates();
    out.push(Claim {
        name: "triple_point_fold".into(),
        source: lifted("B2_nodes")?,
        target: lifted("B2_tangency")?,
        certificate: tp.fold,
    });
    out.push(Claim {
        name: "triple_point_reduce".into(),
        source: lifted("B2_tangency")?,
        target: lifted("B2_nodes_reduced")?,
        certificate: tp.reduce,
    });
    Ok(out)
}

/// The certificates shipped with the crate.
pub fn default_certificate_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("certificates")
}

/// Writes every generated certificate into `dir`.
pub fn freeze(dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for c in claims()? {
        let path = dir.join(c.file_name());
        fs::write(&path, format!("# {} ∼ target, {} factors\n{}", c.name, c.source.len(), c.certificate))?;
        written.push(path);
    }
    Ok(written)
}

/// Reads the frozen certificate for `claim` from `dir`.
pub fn load(dir: &Path, claim: &Claim) -> Result<HurwitzCertificate> {
    let path = dir.join(claim.file_name());
    let text = fs::read_to_string(&path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    text.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_complete() {
        let cs = claims().unwrap();
        assert_eq!(cs.len(), 18 + 2 + 3);
        let mut names: Vec<_> = cs.iter().map(|c| c.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), cs.len());
    }

    #[test]
    fn generated_braid_claims_check() {
        for c in claims().unwrap().iter().filter(|c| c.name.starts_with("nodal") || c.name.starts_with("triple")) {
            assert!(c.check_with(&c.certificate).unwrap(), "{}", c.name);
        }
    }
}
