//! Textual group descriptions.
//!
//! Two equivalent surface forms are accepted:
//!
//! * JSON objects with a single key, e.g. `{"metacyclic": [5, 25, 25, 6]}`,
//!   `{"abelian": [2, 4]}`, `{"semidirect": {"normal": .., "acting": .., "action": [..]}}`;
//! * a short form `name:arg,arg,...`, e.g. `metacyclic:5,25,25,6` or `paper_2_10`.

use serde::{Deserialize, Serialize};

use super::builders::{self, ActionGenerator, CentralExtensionSpec};
use super::{build_metacyclic, FiniteGroup, GroupError, MetacyclicParams, TableOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Metacyclic([u64; 4]),
    Symmetric(usize),
    Dihedral(usize),
    Quaternion(bool),
    Heisenberg(u64),
    WreathFpCp(usize),
    UnitriangularSemidirect(usize),
    CentralExtension(CentralExtensionSpec),
    Semidirect(Box<SemidirectSpec>),
    DirectProduct(Vec<GroupSpec>),
    #[serde(rename = "paper_2_10", alias = "obstruction_2_10")]
    Obstruction2To10(bool),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemidirectSpec {
    pub normal: GroupSpec,
    pub acting: GroupSpec,
    pub action: Vec<ActionGenerator>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let text = text.trim();
        if text.starts_with('{') {
            return serde_json::from_str(text).map_err(|e| GroupError::Spec(e.to_string()));
        }
        let (name, args) = text.split_once(':').unwrap_or((text, ""));
        let nums = || -> Result<Vec<u64>, GroupError> {
            args.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<u64>().map_err(|_| GroupError::Spec(format!("bad number {s:?}"))))
                .collect()
        };
        let one = || -> Result<u64, GroupError> {
            match nums()?.as_slice() {
                [x] => Ok(*x),
                _ => Err(GroupError::Spec(format!("{name} takes one argument"))),
            }
        };
        Ok(match name.trim() {
            "cyclic" => GroupSpec::Cyclic(one()? as usize),
            "abelian" => GroupSpec::Abelian(nums()?.into_iter().map(|x| x as usize).collect()),
            "metacyclic" => match nums()?.as_slice() {
                [m, n, i, t] => GroupSpec::Metacyclic([*m, *n, *i, *t]),
                _ => return Err(GroupError::Spec("metacyclic takes m,n,i,t".into())),
            },
            "symmetric" => GroupSpec::Symmetric(one()? as usize),
            "dihedral" => GroupSpec::Dihedral(one()? as usize),
            "quaternion" => GroupSpec::Quaternion(true),
            "heisenberg" => GroupSpec::Heisenberg(one()?),
            "wreath_fp_cp" => GroupSpec::WreathFpCp(one()? as usize),
            "unitriangular_semidirect" => GroupSpec::UnitriangularSemidirect(one()? as usize),
            "paper_2_10" | "obstruction_2_10" => GroupSpec::Obstruction2To10(true),
            other => return Err(GroupError::Spec(format!("unknown group family {other:?}"))),
        })
    }

    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        self.build_with(&TableOptions::default())
    }

    pub fn build_with(&self, opts: &TableOptions) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => builders::cyclic(*n),
            GroupSpec::Abelian(v) => builders::abelian(v),
            GroupSpec::Metacyclic([m, n, i, t]) => build_metacyclic(MetacyclicParams::new(*m, *n, *i, *t)?),
            GroupSpec::Symmetric(n) => builders::symmetric(*n),
            GroupSpec::Dihedral(n) => builders::dihedral(*n),
            GroupSpec::Quaternion(_) => Ok(builders::quaternion()),
            GroupSpec::Heisenberg(p) => builders::heisenberg(*p),
            GroupSpec::WreathFpCp(p) => builders::wreath_fp_cp(*p),
            GroupSpec::UnitriangularSemidirect(p) => builders::unitriangular_semidirect(*p, opts),
            GroupSpec::CentralExtension(spec) => builders::central_extension(spec, opts),
            GroupSpec::Semidirect(s) => {
                let n = s.normal.build_with(opts)?;
                let h = s.acting.build_with(opts)?;
                builders::semidirect_product(&n, &h, &s.action, opts)
            }
            GroupSpec::DirectProduct(parts) => {
                let mut acc = builders::cyclic(1)?;
                for p in parts {
                    acc = builders::direct_product(&acc, &p.build_with(opts)?)?;
                }
                Ok(acc)
            }
            GroupSpec::Obstruction2To10(_) => Ok(builders::obstruction_group_2_10()),
        }
    }
}
