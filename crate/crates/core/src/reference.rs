//! Reference values the computations are checked against, each under a
//! stable claim id.

use crate::error::Result;
use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: &'static str,
    /// Exact value as `n/d`, when the claim is a number.
    pub value: Option<&'static str>,
    pub description: &'static str,
}

impl Claim {
    pub fn rational(&self) -> Option<Result<Rational>> {
        self.value.map(str::parse)
    }
}

pub const DET_CASE2_EVEN_CLASS: Claim = Claim {
    id: "det.case2.even",
    value: Some("-128"),
    description: "Jacobian determinant of the Case 2 trace map at (2,3) for even t",
};

pub const DET_CASE2_T9: Claim = Claim {
    id: "det.case2.t9",
    value: Some("-1792/4913"),
    description: "Jacobian determinant of the Case 2 trace map at (2,3), t = 9",
};

pub const DET_CASE2_HALF_ODD_CLASS: Claim = Claim {
    id: "det.case2.half-odd",
    value: Some("-768/6859"),
    description: "Jacobian determinant of the Case 2 trace map at (2,3) for odd t with (t-1)/2 odd",
};

pub const DET_CASE3_T13: Claim = Claim {
    id: "det.case3.t13",
    value: Some("74929536/42961619719375"),
    description: "Jacobian determinant of the 5-variable trace map at (2,3,4,5,6), t = 13",
};

pub const DET_CASE3_T14: Claim = Claim {
    id: "det.case3.t14",
    value: Some("3203652023/129225403018523774123952000"),
    description: "Jacobian determinant of the 6-variable trace map at (2,...,7), t = 14",
};

pub const DETERMINANT_CLAIMS: [Claim; 5] =
    [DET_CASE2_EVEN_CLASS, DET_CASE2_T9, DET_CASE2_HALF_ODD_CLASS, DET_CASE3_T13, DET_CASE3_T14];

/// One claim per displayed closed form; the id suffix is the formula id.
pub const TRACE_CLAIMS: [Claim; 5] = [
    Claim {
        id: "trace.case1-odd",
        value: None,
        description: "closed form for tr(APAP^-1), Case 1, odd t",
    },
    Claim {
        id: "trace.case1-even",
        value: None,
        description: "closed form for tr(APAP^-1), Case 1, even t",
    },
    Claim {
        id: "trace.case2-even",
        value: None,
        description: "closed form for tr(APAP^-1), Case 2, even t",
    },
    Claim {
        id: "trace.case2-odd-half-even",
        value: None,
        description: "closed form for tr(APAP^-1), Case 2, odd t with (t-1)/2 even",
    },
    Claim {
        id: "trace.case2-odd-half-odd",
        value: None,
        description: "closed form for tr(APAP^-1), Case 2, odd t with (t-1)/2 odd",
    },
];

/// `a k + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Linear(pub i64, pub i64);

impl Linear {
    pub fn at(&self, k: usize) -> i64 {
        self.0 * k as i64 + self.1
    }
}

/// A nonempty cell of a stratum table: `S^dim`, or `S^dim - S^minus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableCell {
    pub source: usize,
    pub sink: usize,
    pub dim: Linear,
    pub minus: Option<Linear>,
}

const fn cell(source: usize, sink: usize, dim: (i64, i64), minus: Option<(i64, i64)>) -> TableCell {
    TableCell {
        source,
        sink,
        dim: Linear(dim.0, dim.1),
        minus: match minus {
            Some((a, b)) => Some(Linear(a, b)),
            None => None,
        },
    }
}

#[derive(Clone, Copy, Debug)]
pub struct StratumTableRef {
    pub id: &'static str,
    pub description: &'static str,
    /// Which `C_i` the table describes.
    pub i: usize,
    /// `n` as a function of `k`.
    pub n: Linear,
    pub k_range: (usize, usize),
    /// Dimension of each fixed component `p_j`; a negative value means the
    /// component is empty at that `k` and drops out of the table.
    pub components: &'static [Linear],
    /// Cells below the diagonal; every other cell is empty.
    pub cells: &'static [TableCell],
}

pub const TABLE_1: StratumTableRef = StratumTableRef {
    id: "table.1",
    description: "strata of the leaf space of C_1, n = 2k",
    i: 1,
    n: Linear(2, 0),
    k_range: (2, 6),
    components: &[Linear(0, 0), Linear(2, -2), Linear(0, 0)],
    cells: &[
        cell(1, 2, (2, -2), None),
        cell(1, 3, (2, -1), None),
        cell(2, 3, (2, -2), None),
    ],
};

pub const TABLE_2: StratumTableRef = StratumTableRef {
    id: "table.2",
    description: "strata of the leaf space of C_2, n = 2k",
    i: 2,
    n: Linear(2, 0),
    k_range: (2, 6),
    components: &[Linear(0, 0), Linear(0, 0), Linear(2, -4), Linear(0, 0), Linear(0, 0)],
    cells: &[
        cell(1, 2, (0, 0), None),
        cell(1, 3, (2, -3), Some((0, 0))),
        cell(2, 3, (2, -4), None),
        cell(1, 4, (2, -2), Some((2, -3))),
        cell(2, 4, (2, -3), Some((2, -4))),
        cell(3, 4, (2, -4), None),
        cell(1, 5, (2, -1), Some((2, -2))),
        cell(2, 5, (2, -2), Some((2, -3))),
        cell(3, 5, (2, -3), Some((0, 0))),
        cell(4, 5, (0, 0), None),
    ],
};

/// At `k = 2` the middle component `RP^(2k-5)` is empty.
pub const TABLE_4: StratumTableRef = StratumTableRef {
    id: "table.4",
    description: "strata of the leaf space of C_2, n = 2k-1",
    i: 2,
    n: Linear(2, -1),
    k_range: (2, 6),
    components: &[Linear(0, 0), Linear(0, 0), Linear(2, -5), Linear(0, 0), Linear(0, 0)],
    cells: &[
        cell(1, 2, (0, 0), None),
        cell(1, 3, (2, -4), Some((0, 0))),
        cell(2, 3, (2, -5), None),
        cell(1, 4, (2, -3), Some((2, -4))),
        cell(2, 4, (2, -4), Some((2, -5))),
        cell(3, 4, (2, -5), None),
        cell(1, 5, (2, -2), Some((2, -3))),
        cell(2, 5, (2, -3), Some((2, -4))),
        cell(3, 5, (2, -4), Some((0, 0))),
        cell(4, 5, (0, 0), None),
    ],
};

pub const STRATUM_TABLES: [StratumTableRef; 3] = [TABLE_1, TABLE_2, TABLE_4];

/// The involution on the diagram of `C_3` on `RP^6`:
/// `S^0_j -> S^0_(7-j)` and `S^d_j -> S^d_(7-d-j)` for `d > 0`.
pub fn table3_tau(dim: usize, j: usize) -> (usize, usize) {
    if dim == 0 {
        (0, 7 - j)
    } else {
        (dim, 7 - dim - j)
    }
}

/// Leaf spaces quoted as sphere dimensions: `(n, i, dims)`.
pub const LEAF_SPACES: [(usize, usize, &[usize]); 3] =
    [(6, 3, &[5, 3, 1]), (6, 2, &[5, 3]), (7, 4, &[6, 4, 2, 0])];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_parse() {
        for c in DETERMINANT_CLAIMS {
            assert!(c.rational().unwrap().is_ok(), "{}", c.id);
        }
        assert_eq!(TABLE_2.cells.len(), 10);
        assert_eq!(table3_tau(0, 1), (0, 6));
        assert_eq!(table3_tau(1, 3), (1, 3));
    }
}
