//! Relative positions of the supports of two involutions of `C_n`, as
//! pattern data. Each row lists `D_sigma \ D_tau`, `D_tau \ D_sigma` and the
//! ordering of the free indices.

use serde::Serialize;

/// A free index of a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    I,
    K,
    J,
    L,
}

impl Var {
    pub(crate) fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Var::I => 'i',
            Var::K => 'k',
            Var::J => 'j',
            Var::L => 'l',
        }
    }
}

/// A root with free indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RootPattern {
    /// `e_x - e_y`
    Diff(Var, Var),
    /// `e_x + e_y`
    Sum(Var, Var),
    /// `2 e_x`
    Long(Var),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub table: u8,
    pub case: u8,
    pub sigma_only: Vec<RootPattern>,
    pub tau_only: Vec<RootPattern>,
    /// Indices that must be strictly increasing, in this order.
    pub order: Vec<Var>,
    /// The transcription of this row is uncertain.
    pub doubtful: bool,
}

use RootPattern::{Diff as D, Long as L2, Sum as S};
use Var::{I, J, K, L};

fn row(table: u8, case: u8, sigma_only: &[RootPattern], tau_only: &[RootPattern], order: &[Var]) -> TableRow {
    TableRow {
        table,
        case,
        sigma_only: sigma_only.to_vec(),
        tau_only: tau_only.to_vec(),
        order: order.to_vec(),
        doubtful: false,
    }
}

const IKJL: &[Var] = &[I, K, J, L];
const IKJ: &[Var] = &[I, K, J];
const IJ: &[Var] = &[I, J];

/// All rows of the four tables.
pub fn table_rows() -> Vec<TableRow> {
    vec![
        // d(sigma) = d(tau), first part
        TableRow {
            doubtful: true,
            ..row(1, 1, &[S(I, J)], &[S(I, K)], IKJ)
        },
        row(1, 2, &[D(K, J), S(I, L)], &[S(I, J), D(K, L)], IKJL),
        row(1, 3, &[D(I, J), S(K, L)], &[D(I, L), S(K, J)], IKJL),
        row(1, 4, &[D(I, J)], &[S(I, J)], IJ),
        row(1, 5, &[S(I, J), S(K, L)], &[S(I, K), S(J, L)], IKJL),
        row(1, 6, &[S(I, J), D(K, L)], &[S(I, K), D(J, L)], IKJL),
        row(1, 7, &[S(I, L), D(K, J)], &[S(I, K)], IKJL),
        row(1, 8, &[D(K, J)], &[D(I, J)], IKJ),
        row(1, 9, &[S(K, J)], &[S(I, J)], IKJ),
        row(1, 10, &[D(I, K)], &[D(I, J)], IKJ),
        row(1, 11, &[D(I, K), D(J, L)], &[D(I, J), D(K, L)], IKJL),
        row(1, 12, &[D(I, K), S(J, L)], &[D(I, J), S(K, L)], IKJL),
        row(1, 13, &[S(I, L), S(K, J)], &[S(I, J), S(K, L)], IKJL),
        row(1, 14, &[D(I, J), D(K, L)], &[D(I, L), D(K, J)], IKJL),
        row(1, 15, &[D(I, L), S(K, J)], &[S(I, J), D(K, L)], IKJL),
        row(1, 16, &[D(I, J), S(K, L)], &[S(I, L), D(K, J)], IKJL),
        row(1, 17, &[D(I, K), D(J, L)], &[D(I, L)], IKJL),
        row(1, 18, &[D(I, K), S(J, L)], &[S(I, L)], IKJL),
        row(1, 19, &[], &[D(I, J)], IJ),
        // d(sigma) = d(tau), second part
        row(2, 1, &[L2(J)], &[L2(I)], IJ),
        row(2, 2, &[S(I, J), L2(K)], &[L2(I), S(K, J)], IKJ),
        row(2, 3, &[D(I, J), L2(K)], &[L2(I), D(K, J)], IKJ),
        row(2, 4, &[D(I, K), L2(J)], &[L2(I)], IKJ),
        row(2, 5, &[D(I, K), L2(J)], &[D(I, J), L2(K)], IKJ),
        row(2, 6, &[S(I, J), L2(K)], &[S(I, K), L2(J)], IKJ),
        // d(sigma) < d(tau)
        row(3, 1, &[], &[L2(I)], &[]),
        row(3, 2, &[S(I, J)], &[L2(I), L2(J)], IJ),
        row(3, 3, &[D(I, J)], &[L2(I)], IJ),
        row(3, 4, &[S(I, J), D(K, L)], &[L2(I), S(K, J)], IKJL),
        row(3, 5, &[S(I, L), D(K, J)], &[L2(I), S(K, L)], IKJL),
        row(3, 6, &[D(I, L), D(K, J)], &[L2(I), D(K, L)], IKJL),
        // d(sigma) > d(tau)
        row(4, 1, &[D(I, J), L2(K)], &[S(I, K)], IKJ),
        row(4, 2, &[L2(J)], &[S(I, J)], IJ),
        row(4, 3, &[L2(K), L2(J)], &[S(I, K)], IKJ),
        row(4, 4, &[D(I, K), L2(J)], &[S(I, J)], IKJ),
        row(4, 5, &[D(I, K), L2(J), L2(L)], &[D(I, L), S(K, J)], IKJL),
        row(4, 6, &[S(I, L), L2(K), L2(J)], &[S(I, K), S(J, L)], IKJL),
        row(4, 7, &[D(I, L), L2(K), L2(J)], &[S(I, K), D(J, L)], IKJL),
        row(4, 8, &[D(I, J), L2(K), L2(L)], &[S(I, K)], IKJL),
        row(4, 9, &[D(I, K), L2(J), L2(L)], &[S(I, J)], IKJL),
    ]
}

/// Row counts per table.
pub const TABLE_SIZES: [usize; 4] = [19, 6, 6, 9];
