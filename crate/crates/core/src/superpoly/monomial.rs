use super::vartable::{Grade, VarTable};

/// A product of variables in canonical form.
///
/// `exps[i]` is the exponent of variable `i` of the owning table. Odd
/// variables only ever carry exponent 0 or 1 and are understood to be
/// multiplied in ascending table order with an implicit `+1` sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[idx] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Odd factors in canonical (ascending) order.
    pub fn odd_factors(&self, table: &VarTable) -> Vec<usize> {
        table.odd_indices().filter(|&i| self.exps[i] > 0).collect()
    }

    pub fn odd_degree(&self, table: &VarTable) -> u32 {
        table.odd_indices().map(|i| self.exps[i]).sum()
    }

    pub fn grade(&self, table: &VarTable) -> Grade {
        Grade::from_deg(self.odd_degree(table))
    }

    /// Product `self * other`, returning the sign picked up by sorting the
    /// concatenated odd factors, or `None` if an odd variable repeats.
    pub fn mul(&self, other: &Monomial, table: &VarTable) -> Option<(Monomial, f64)> {
        let mut swaps = 0usize;
        let mut left_odd_seen = 0usize;
        let mut left_odd_total = 0usize;
        for i in table.odd_indices() {
            if self.exps[i] > 0 {
                left_odd_total += 1;
            }
        }
        // Walk odd indices in ascending order: every odd factor of `other` at
        // index b must hop over the factors of `self` with index > b.
        for i in table.odd_indices() {
            let a = self.exps[i] > 0;
            let b = other.exps[i] > 0;
            if a && b {
                return None;
            }
            if a {
                left_odd_seen += 1;
            }
            if b {
                swaps += left_odd_total - left_odd_seen;
            }
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(x, y)| x + y).collect();
        let sign = if swaps.is_multiple_of(2) { 1.0 } else { -1.0 };
        Some((Monomial { exps }, sign))
    }

    /// Remove one power of variable `idx`. For an odd variable the returned
    /// sign accounts for moving it to the right end (`right == true`) or the
    /// left end of the ordered odd factors first. The extra scalar is the
    /// multiplicity produced by differentiating `v^k`.
    pub fn differentiate(&self, idx: usize, right: bool, table: &VarTable) -> Option<(Monomial, f64)> {
        let k = self.exps[idx];
        if k == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[idx] -= 1;
        let factor = match table.grade(idx) {
            Grade::Even => k as f64,
            Grade::Odd => {
                let odd = self.odd_factors(table);
                let pos = odd.iter().position(|&i| i == idx).expect("odd factor present");
                let hops = if right { odd.len() - 1 - pos } else { pos };
                if hops % 2 == 0 {
                    1.0
                } else {
                    -1.0
                }
            }
        };
        Some((Monomial { exps }, factor))
    }
}
