//! The pointed ribbon category backend: Z/N-graded vector spaces with the
//! bicharacter braiding beta(a, b) = zeta^(t a b), its Kirby objects, the
//! graded matrix Frobenius algebra and its modules.

mod frobenius;
mod graded;

pub use frobenius::{
    cap_scalar, cup_scalar, frobenius_data, module_data, swim_check, verify_frobenius,
    verify_module, FrobeniusData, FrobeniusReport, ModuleData, ModuleReport, SwimReport,
};
pub use graded::{
    braiding, enumerate_indices, pairing_maps, twist, BasisVec, GradedMap, GradedObject, MapSign,
    MultiIdx, PairingMaps,
};

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::CycloNumber;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("frobenius degree c={0} must be a nonzero element of the subgroup H")]
    BadFrobeniusDegree(u32),
    #[error("module must lie outside the subcategory (g={0} is in H)")]
    ModuleInSubcategory(u32),
    #[error("cap condition fails; data unusable")]
    CapConditionFails,
    #[error("cup condition fails; data unusable")]
    CupConditionFails,
}

/// Parameters of the nested pair Vec_H inside Vec_{Z/N}: the grading group
/// order, the bicharacter exponent t, and a generator of the subgroup H.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CategoryParams {
    pub n: u32,
    pub t: i64,
    pub subgroup_gen: u32,
}

/// Which Kirby color: the ambient category (all of Z/N) or the subcategory
/// Vec_H.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KirbyScope {
    Full,
    Sub,
}

impl CategoryParams {
    pub fn new(n: u32, t: i64, subgroup_gen: u32) -> Result<Self, CategoryError> {
        if n == 0 {
            return Err(CategoryError::ZeroModulus);
        }
        Ok(CategoryParams { n, t, subgroup_gen: subgroup_gen % n })
    }

    /// The cyclic subgroup H generated by `subgroup_gen`, sorted.
    pub fn subgroup(&self) -> Vec<u32> {
        let mut seen = BTreeSet::new();
        let mut x = 0u32;
        loop {
            if !seen.insert(x) {
                break;
            }
            x = (x + self.subgroup_gen) % self.n;
        }
        seen.into_iter().collect()
    }

    pub fn zeta(&self, exponent: i64) -> CycloNumber {
        CycloNumber::zeta_pow(self.n, exponent)
    }

    pub fn in_subgroup(&self, d: u32) -> bool {
        self.subgroup().contains(&(d % self.n))
    }

    /// The Kirby object: one basis vector per element of Z/N (full) or per
    /// element of H (sub).
    pub fn kirby_object(&self, scope: KirbyScope) -> GradedObject {
        let degrees: Vec<u32> = match scope {
            KirbyScope::Full => (0..self.n).collect(),
            KirbyScope::Sub => self.subgroup(),
        };
        GradedObject::new(
            degrees
                .into_iter()
                .map(|d| BasisVec { degree: d, label: format!("b{d}") })
                .collect(),
        )
    }
}

/// Degrees x whose double braiding with the chosen scope is trivial:
/// t * 2 * x * y = 0 mod N for every y in the scope, by brute-force scan.
pub fn transparent_degrees(params: &CategoryParams, scope: KirbyScope) -> BTreeSet<u32> {
    let n = params.n as i64;
    let range: Vec<u32> = match scope {
        KirbyScope::Full => (0..params.n).collect(),
        KirbyScope::Sub => params.subgroup(),
    };
    (0..params.n)
        .filter(|&x| {
            range
                .iter()
                .all(|&y| (2 * params.t * x as i64 * y as i64).rem_euclid(n) == 0)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_of_two_mod_six() {
        let p = CategoryParams::new(6, 1, 2).unwrap();
        assert_eq!(p.subgroup(), vec![0, 2, 4]);
        let degrees: Vec<u32> = p
            .kirby_object(KirbyScope::Sub)
            .basis
            .iter()
            .map(|b| b.degree)
            .collect();
        assert_eq!(degrees, vec![0, 2, 4]);
    }

    #[test]
    fn kirby_object_full() {
        let p = CategoryParams::new(6, 1, 2).unwrap();
        let full = p.kirby_object(KirbyScope::Full);
        assert_eq!(full.dim(), 6);
        let p1 = CategoryParams::new(1, 1, 0).unwrap();
        let one = p1.kirby_object(KirbyScope::Full);
        assert_eq!(one.dim(), 1);
        assert_eq!(one.degree(0), 0);
    }

    #[test]
    fn transparency_scan() {
        let p = CategoryParams::new(6, 1, 2).unwrap();
        let t: Vec<u32> = transparent_degrees(&p, KirbyScope::Full).into_iter().collect();
        assert_eq!(t, vec![0, 3]);
        let sym = CategoryParams::new(6, 0, 2).unwrap();
        let all: Vec<u32> = transparent_degrees(&sym, KirbyScope::Full).into_iter().collect();
        assert_eq!(all, vec![0, 1, 2, 3, 4, 5]);
        // intersection with H = {0, 2, 4} leaves {0}
        let h = p.subgroup();
        let common: Vec<u32> = t.into_iter().filter(|d| h.contains(d)).collect();
        assert_eq!(common, vec![0]);
    }

    #[test]
    fn twist_is_even() {
        // theta(a) = theta(-a) holds automatically for the induced twist
        for t in 0..4 {
            let p = CategoryParams::new(6, t, 2).unwrap();
            for a in 0..6i64 {
                assert_eq!(p.zeta(p.t * a * a), p.zeta(p.t * (6 - a) * (6 - a)));
            }
        }
    }
}
