//! The six fine gradings on the real form of signature −14.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{
    check_grading, interval_check, refine, universal_group, FgAbelianGroup, GradedDecomposition, GradingReport,
    IntervalReport,
};
use crate::error::{Error, Result};
use crate::liemodels::{
    build_albert, build_chevalley_form, build_flag, build_tits, AlbertModel, ChevalleyRealForm, FlagModel, TitsModel,
};
use crate::composition::CompositionKind;
use crate::structalg::{killing_form, killing_signature, AlgebraTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GradingName {
    Gamma3,
    Gamma7,
    Gamma8,
    Gamma10,
    Gamma12,
    Gamma13,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelName {
    Albert,
    Tits,
    Flag,
    Chevalley,
}

impl GradingName {
    pub const ALL: [GradingName; 6] = [
        GradingName::Gamma3,
        GradingName::Gamma7,
        GradingName::Gamma8,
        GradingName::Gamma10,
        GradingName::Gamma12,
        GradingName::Gamma13,
    ];

    pub fn model(self) -> ModelName {
        match self {
            GradingName::Gamma3 => ModelName::Tits,
            GradingName::Gamma7 | GradingName::Gamma8 => ModelName::Albert,
            GradingName::Gamma10 | GradingName::Gamma12 => ModelName::Flag,
            GradingName::Gamma13 => ModelName::Chevalley,
        }
    }

    pub fn expected(self) -> ExpectedRow {
        let (t, free, tors, e, o): (&[usize], usize, &[u64], usize, usize) = match self {
            GradingName::Gamma3 => (&[64, 7], 0, &[2, 2, 2, 3, 3], 0, 14),
            GradingName::Gamma7 => (&[48, 1, 0, 7], 0, &[2, 2, 2, 2, 2, 2], 0, 78),
            GradingName::Gamma8 => (&[57, 0, 7], 1, &[2, 2, 2, 2], 1, 29),
            GradingName::Gamma10 => (&[60, 7, 0, 1], 2, &[2, 2, 2], 2, 16),
            GradingName::Gamma12 => (&[73, 0, 0, 0, 1], 1, &[2, 2, 2, 2, 2], 1, 35),
            GradingName::Gamma13 => (&[72, 0, 0, 0, 0, 1], 0, &[2, 2, 2, 2, 2, 2, 2], 0, 78),
        };
        ExpectedRow {
            type_vector: t.to_vec(),
            group: FgAbelianGroup::new(free, tors.to_vec()).expect("valid group"),
            neutral_dim: e,
            order_two_dim: o,
        }
    }
}

impl fmt::Display for GradingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            GradingName::Gamma3 => 3,
            GradingName::Gamma7 => 7,
            GradingName::Gamma8 => 8,
            GradingName::Gamma10 => 10,
            GradingName::Gamma12 => 12,
            GradingName::Gamma13 => 13,
        };
        write!(f, "gamma{n}")
    }
}

impl FromStr for GradingName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.to_ascii_lowercase();
        let n = t.strip_prefix("gamma").or_else(|| t.strip_prefix('g')).unwrap_or(&t);
        match n {
            "3" => Ok(GradingName::Gamma3),
            "7" => Ok(GradingName::Gamma7),
            "8" => Ok(GradingName::Gamma8),
            "10" => Ok(GradingName::Gamma10),
            "12" => Ok(GradingName::Gamma12),
            "13" => Ok(GradingName::Gamma13),
            _ => Err(Error::Parse(format!("unknown grading {s}"))),
        }
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelName::Albert => "albert",
            ModelName::Tits => "tits",
            ModelName::Flag => "flag",
            ModelName::Chevalley => "chevalley",
        })
    }
}

impl FromStr for ModelName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "albert" => Ok(ModelName::Albert),
            "tits" => Ok(ModelName::Tits),
            "flag" => Ok(ModelName::Flag),
            "chevalley" => Ok(ModelName::Chevalley),
            _ => Err(Error::Parse(format!("unknown model {s}"))),
        }
    }
}

/// One row of the reference table.
#[derive(Clone, Debug, Serialize)]
pub struct ExpectedRow {
    pub type_vector: Vec<usize>,
    pub group: FgAbelianGroup,
    pub neutral_dim: usize,
    pub order_two_dim: usize,
}

/// The four models of signature −14, built on first use.
#[derive(Default)]
pub struct Models {
    albert: OnceCell<AlbertModel>,
    tits: OnceCell<TitsModel>,
    flag: OnceCell<FlagModel>,
    chevalley: OnceCell<ChevalleyRealForm>,
}

fn get_or_build<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let _ = cell.set(f()?);
    Ok(cell.get().expect("just set"))
}

impl Models {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn albert(&self) -> Result<&AlbertModel> {
        get_or_build(&self.albert, || build_albert(-1))
    }

    pub fn tits(&self) -> Result<&TitsModel> {
        get_or_build(&self.tits, || build_tits(CompositionKind::Octonion))
    }

    pub fn flag(&self) -> Result<&FlagModel> {
        get_or_build(&self.flag, build_flag)
    }

    pub fn chevalley(&self) -> Result<&ChevalleyRealForm> {
        get_or_build(&self.chevalley, || build_chevalley_form([-1, 1, 1, 1, 1, 1]))
    }

    pub fn table(&self, m: ModelName) -> Result<&AlgebraTable> {
        Ok(match m {
            ModelName::Albert => self.albert()?.table(),
            ModelName::Tits => self.tits()?.table(),
            ModelName::Flag => self.flag()?.table(),
            ModelName::Chevalley => self.chevalley()?.table(),
        })
    }
}

pub fn build_named_grading(name: GradingName, models: &Models) -> Result<GradedDecomposition> {
    match name {
        GradingName::Gamma3 => models.tits()?.gamma3(),
        GradingName::Gamma7 => {
            let a = models.albert()?;
            a.lift_grading(&a.jordan.jordan_octonion_grading()?)
        }
        GradingName::Gamma8 => {
            let a = models.albert()?;
            let z = refine(&a.jordan.jordan_z_grading()?, &a.jordan.octonion_part_grading()?)?;
            a.lift_grading(&z)
        }
        GradingName::Gamma10 => models.flag()?.gamma10(),
        GradingName::Gamma12 => models.flag()?.gamma12(),
        GradingName::Gamma13 => models.chevalley()?.gamma13(),
    }
}

/// Components whose degree g has 2g ≠ 0 must be κ-isotropic.
pub fn isotropy_check(l: &AlgebraTable, g: &GradedDecomposition) -> Result<bool> {
    let k = killing_form(l)?;
    for c in &g.components {
        let two = g.group.add(&c.degree, &c.degree)?;
        if g.group.is_zero(&two) {
            continue;
        }
        for x in &c.basis {
            for y in &c.basis {
                if !k.eval(x, y)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedGradingReport {
    pub name: String,
    pub model: ModelName,
    pub declared_group: String,
    pub check: GradingReport,
    pub total_dim: usize,
    pub type_vector: Vec<usize>,
    pub universal_group: String,
    pub interval: IntervalReport,
    pub isotropic: bool,
    pub expected: ExpectedRowJson,
    pub type_matches: bool,
    pub group_matches: bool,
    pub interval_matches: bool,
    /// Type and universal group equal the reference row.
    pub fine: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpectedRowJson {
    pub type_vector: Vec<usize>,
    pub group: String,
    pub interval: String,
}

impl NamedGradingReport {
    pub fn passed(&self) -> bool {
        self.check.passed()
            && self.total_dim == 78
            && self.interval.holds
            && self.isotropic
            && self.type_matches
            && self.group_matches
            && self.interval_matches
    }
}

/// Builds, verifies and compares one grading. `signature` is the model's Killing signature.
pub fn verify_named_grading(
    name: GradingName,
    models: &Models,
    signature: Option<i64>,
) -> Result<(GradedDecomposition, NamedGradingReport)> {
    let l = models.table(name.model())?;
    let g = build_named_grading(name, models)?;
    let check = check_grading(l, &g)?;
    let universal = if check.passed() {
        universal_group(&g, &check)?.group.describe()
    } else {
        "n/a".into()
    };
    let sig = match signature {
        Some(s) => s,
        None => killing_signature(l)?,
    };
    let interval = interval_check(&g, sig);
    let exp = name.expected();
    let type_vector = g.type_vector();
    let rep = NamedGradingReport {
        name: name.to_string(),
        model: name.model(),
        declared_group: g.group.describe(),
        total_dim: g.total_dim(),
        isotropic: isotropy_check(l, &g)?,
        type_matches: type_vector == exp.type_vector,
        group_matches: universal == exp.group.describe(),
        interval_matches: interval.neutral_dim == exp.neutral_dim && interval.order_two_dim == exp.order_two_dim,
        fine: type_vector == exp.type_vector && universal == exp.group.describe(),
        expected: ExpectedRowJson {
            type_vector: exp.type_vector.clone(),
            group: exp.group.describe(),
            interval: format!("{}±{}", exp.neutral_dim, exp.order_two_dim),
        },
        type_vector,
        universal_group: universal,
        interval,
        check,
    };
    Ok((g, rep))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in GradingName::ALL {
            assert_eq!(n.to_string().parse::<GradingName>().unwrap(), n);
        }
        assert!("gamma11".parse::<GradingName>().is_err());
        assert_eq!("FLAG".parse::<ModelName>().unwrap(), ModelName::Flag);
    }

    #[test]
    fn expected_rows_sum_to_78() {
        for n in GradingName::ALL {
            let t = n.expected().type_vector;
            let s: usize = t.iter().enumerate().map(|(i, h)| (i + 1) * h).sum();
            assert_eq!(s, 78, "{n}");
        }
    }
}
