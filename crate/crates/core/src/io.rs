//! JSON wire formats for groups and G-sets, and the versioned report
//! envelope. All indices are 0-based.

use std::collections::{BTreeMap, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::gset::GSet;
use crate::report::Report;

pub const REPORT_SCHEMA: &str = "gmackey-report/1";

/// `{"order": n, "mul": [[..]]}`, `{"degree": d, "generators": [[..]]}`
/// or `{"name": "S3"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table { order: usize, mul: Vec<Vec<usize>> },
    Permutations { degree: usize, generators: Vec<Vec<usize>> },
    Named { name: String },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Table { order, mul } => {
                if mul.len() != *order {
                    return Err(Error::Parse(format!("order {order} but {} rows", mul.len())));
                }
                FiniteGroup::from_table(mul.clone())
            }
            GroupSpec::Permutations { degree, generators } => FiniteGroup::from_permutations(*degree, generators),
            GroupSpec::Named { name } => {
                FiniteGroup::by_name(name).ok_or_else(|| Error::Parse(format!("unknown group {name:?}")))
            }
        }
    }

    pub fn of(group: &FiniteGroup) -> Self {
        GroupSpec::Table { order: group.order(), mul: group.table().to_vec() }
    }
}

/// `{"size": n, "action": {"<element>": [perm], ..}}`. The listed
/// elements must generate the group; the others act by composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSetSpec {
    pub size: usize,
    pub action: BTreeMap<String, Vec<usize>>,
}

impl GSetSpec {
    pub fn build(&self, group: &FiniteGroup) -> Result<GSet> {
        let n = group.order();
        let mut perms: Vec<Option<Vec<usize>>> = vec![None; n];
        perms[group.identity()] = Some((0..self.size).collect());
        let mut given = Vec::new();
        for (key, p) in &self.action {
            let g: usize = key.trim().parse().map_err(|_| Error::Parse(format!("element {key:?} is not an index")))?;
            if g >= n {
                return Err(Error::Parse(format!("element {g} outside a group of order {n}")));
            }
            if p.len() != self.size || p.iter().any(|&x| x >= self.size) {
                return Err(Error::InvalidGSet(format!("action of {g} is not a map of {} points", self.size)));
            }
            perms[g] = Some(p.clone());
            given.push(g);
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&g| perms[g].is_some()).collect();
        while let Some(h) = queue.pop_front() {
            for &s in &given {
                let sh = group.mul(s, h);
                if perms[sh].is_none() {
                    let (ps, ph) = (perms[s].as_ref().expect("given"), perms[h].as_ref().expect("reached"));
                    perms[sh] = Some(ph.iter().map(|&x| ps[x]).collect());
                    queue.push_back(sh);
                }
            }
        }
        let action = perms
            .into_iter()
            .enumerate()
            .map(|(g, p)| p.ok_or_else(|| Error::InvalidGSet(format!("the listed elements do not reach {g}"))))
            .collect::<Result<Vec<_>>>()?;
        GSet::new(group, self.size, action)
    }

    pub fn of(x: &GSet) -> Self {
        let action = x.action().iter().enumerate().map(|(g, p)| (g.to_string(), p.clone())).collect();
        Self { size: x.size(), action }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// A group from a JSON file, or from a built-in name when no such file
/// exists.
pub fn load_group(arg: &str) -> Result<FiniteGroup> {
    let path = Path::new(arg);
    if !path.exists() {
        return GroupSpec::Named { name: arg.to_string() }.build();
    }
    let spec: GroupSpec = serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
    spec.build()
}

/// One G-set, or a JSON list of them.
pub fn load_gsets(path: &Path, group: &FiniteGroup) -> Result<Vec<GSet>> {
    let text = read(path)?;
    let specs: Vec<GSetSpec> = match serde_json::from_str::<GSetSpec>(&text) {
        Ok(one) => vec![one],
        Err(_) => serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
    };
    specs.iter().map(|s| s.build(group)).collect()
}

/// The document written by `--json`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Envelope {
    pub schema: String,
    pub command: String,
    pub passed: bool,
    pub reports: Vec<Report>,
    pub data: serde_json::Value,
}

impl Envelope {
    pub fn new(command: &str, reports: Vec<Report>, data: serde_json::Value) -> Self {
        let passed = reports.iter().all(Report::passed);
        Self { schema: REPORT_SCHEMA.into(), command: command.into(), passed, reports, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_formats_agree() {
        let s3 = FiniteGroup::symmetric(3);
        let table: GroupSpec = serde_json::from_str(&serde_json::to_string(&GroupSpec::of(&s3)).unwrap()).unwrap();
        assert_eq!(table.build().unwrap(), s3);
        let perms: GroupSpec = serde_json::from_str(r#"{"degree": 3, "generators": [[1,0,2],[1,2,0]]}"#).unwrap();
        assert_eq!(perms.build().unwrap().order(), 6);
        let named: GroupSpec = serde_json::from_str(r#"{"name": "C2"}"#).unwrap();
        assert_eq!(named.build().unwrap(), FiniteGroup::cyclic(2));
    }

    #[test]
    fn gset_from_generators() {
        let g = FiniteGroup::cyclic(4);
        let spec: GSetSpec = serde_json::from_str(r#"{"size": 4, "action": {"1": [1,2,3,0]}}"#).unwrap();
        assert_eq!(spec.build(&g).unwrap(), GSet::regular(&g));
        let round = GSetSpec::of(&GSet::regular(&g)).build(&g).unwrap();
        assert_eq!(round, GSet::regular(&g));
    }

    #[test]
    fn broken_action_is_rejected() {
        let g = FiniteGroup::cyclic(2);
        let spec: GSetSpec = serde_json::from_str(r#"{"size": 3, "action": {"1": [1,2,0]}}"#).unwrap();
        assert!(matches!(spec.build(&g), Err(Error::InvalidGSet(_))));
    }
}
