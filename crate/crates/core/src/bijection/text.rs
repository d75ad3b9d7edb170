use std::fmt;
use std::str::FromStr;

use super::*;
use crate::forest::Forest;
use crate::partition::{ListFlags, ListPartition, OrderedSetPartition, SetPartition};
use crate::perm::{CycleDecomposition, Permutation};

/// The maps reachable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BijectionName {
    Phi,
    PhiD,
    Theta,
    Shallow,
    Xi,
    Gamma,
    Tau,
    TauOneDescent,
    Rho,
    Psi,
    Alpha,
    Beta,
}

impl BijectionName {
    pub const ALL: [BijectionName; 12] = [
        BijectionName::Phi,
        BijectionName::PhiD,
        BijectionName::Theta,
        BijectionName::Shallow,
        BijectionName::Xi,
        BijectionName::Gamma,
        BijectionName::Tau,
        BijectionName::TauOneDescent,
        BijectionName::Rho,
        BijectionName::Psi,
        BijectionName::Alpha,
        BijectionName::Beta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BijectionName::Phi => "phi",
            BijectionName::PhiD => "phi_d",
            BijectionName::Theta => "theta",
            BijectionName::Shallow => "shallow",
            BijectionName::Xi => "xi",
            BijectionName::Gamma => "gamma",
            BijectionName::Tau => "tau",
            BijectionName::TauOneDescent => "tau_onedescent",
            BijectionName::Rho => "rho",
            BijectionName::Psi => "psi",
            BijectionName::Alpha => "alpha",
            BijectionName::Beta => "beta",
        }
    }
}

impl fmt::Display for BijectionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BijectionName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BijectionName::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = BijectionName::ALL.iter().map(|b| b.name()).collect();
                format!("unknown bijection {s:?}; expected one of {}", names.join(", "))
            })
    }
}

fn parse<T: FromStr>(s: &str) -> Result<T, BijectionError>
where
    T::Err: fmt::Display,
{
    s.parse()
        .map_err(|e: T::Err| BijectionError::Input(e.to_string()))
}

fn lists(s: &str, flags: ListFlags) -> Result<ListPartition, BijectionError> {
    Ok(ListPartition::parse(s, flags)?)
}

/// Applies a map (or its inverse) to the text form of its input and returns
/// the text form of the result. Forests use the `n|parents` notation.
pub fn apply_by_name(name: BijectionName, inverse: bool, input: &str) -> Result<String, BijectionError> {
    use BijectionName as B;
    let s = input.trim();
    if !inverse {
        let forest = match name {
            B::Phi => phi(&parse::<Permutation>(s)?),
            B::PhiD => phi_d(&parse::<Permutation>(s)?),
            B::Theta => theta(&parse::<CycleDecomposition>(s)?)?,
            B::Shallow => shallow(&parse::<SetPartition>(s)?),
            B::Xi => xi(&parse::<CycleDecomposition>(s)?)?,
            B::Gamma => gamma(&parse::<OrderedSetPartition>(s)?)?,
            B::Tau => tau(&lists(s, ListFlags::UNORDERED)?, TauVariant::Unimodal132)?,
            B::TauOneDescent => tau(&lists(s, ListFlags::UNORDERED)?, TauVariant::OneDescent)?,
            B::Rho => rho(&parse::<Permutation>(s)?)?,
            B::Psi => psi(&lists(s, ListFlags::ORDERED_UP_TO_REVERSE)?)?,
            B::Alpha => alpha(&parse::<Forest>(s)?)?,
            B::Beta => beta_wilf(&parse::<Forest>(s)?)?,
        };
        return Ok(forest.to_string());
    }
    let f = parse::<Forest>(s)?;
    Ok(match name {
        B::Phi => phi_inv(&f)?.to_string(),
        B::PhiD => phi_d_inv(&f)?.to_string(),
        B::Theta => theta_inv(&f)?.to_string(),
        B::Shallow => shallow_inv(&f)?.to_string(),
        B::Xi => xi_inv(&f)?.to_string(),
        B::Gamma => gamma_inv(&f)?.to_string(),
        B::Tau => tau_inv(&f, TauVariant::Unimodal132)?.to_string(),
        B::TauOneDescent => tau_inv(&f, TauVariant::OneDescent)?.to_string(),
        B::Rho => rho_inv(&f)?.to_string(),
        B::Psi => psi_inv(&f)?.to_string(),
        B::Alpha => beta_wilf(&f)?.to_string(),
        B::Beta => alpha(&f)?.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for b in BijectionName::ALL {
            assert_eq!(b.name().parse::<BijectionName>().unwrap(), b);
        }
        assert!("omega".parse::<BijectionName>().unwrap_err().contains("theta"));
    }

    #[test]
    fn text_round_trips() {
        assert_eq!(
            apply_by_name(BijectionName::Theta, false, "(2,1)").unwrap(),
            "2|2 0"
        );
        assert_eq!(
            apply_by_name(BijectionName::Theta, true, "2|2 0").unwrap(),
            "(2,1)"
        );
        let f = apply_by_name(BijectionName::Psi, false, "{2,3,1}{4}").unwrap();
        assert_eq!(apply_by_name(BijectionName::Psi, true, &f).unwrap(), "{2,3,1}{4}");
        assert!(matches!(
            apply_by_name(BijectionName::Phi, false, "1,x"),
            Err(BijectionError::Input(_))
        ));
    }
}
