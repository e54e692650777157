use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {0} is outside the supported range 1..={max}", max = crate::square::MAX_ORDER)]
    OrderOutOfRange(usize),

    #[error("grid text is empty")]
    EmptyInput,

    #[error("invalid order line {0:?}")]
    BadOrderLine(String),

    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },

    #[error("row {row}: expected {expected} entries, found {found}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("row {row}, column {col}: invalid token {token:?}")]
    BadToken {
        row: usize,
        col: usize,
        token: String,
    },

    #[error("row {row}, column {col}: symbol {sym} is outside 1..={order}")]
    SymbolOutOfRange {
        row: usize,
        col: usize,
        sym: usize,
        order: usize,
    },

    #[error("cell ({row},{col}) is outside an order-{order} square")]
    CellOutOfRange {
        row: usize,
        col: usize,
        order: usize,
    },

    #[error("symbol {sym} occurs twice in row {row}")]
    DuplicateInRow { row: usize, sym: usize },

    #[error("symbol {sym} occurs twice in column {col}")]
    DuplicateInColumn { col: usize, sym: usize },

    #[error("cell ({row},{col}) is empty")]
    CellEmpty { row: usize, col: usize },

    #[error("cell ({row},{col}) is already filled")]
    CellFilled { row: usize, col: usize },

    #[error("square has {empty} empty cells")]
    Incomplete { empty: usize },

    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("partial square is not uniquely completable ({})", describe_count(*.count, *.capped))]
    NotUnique { count: u64, capped: bool },

    #[error("order {order} exceeds the limit {limit} for {what}")]
    OrderTooLarge {
        order: usize,
        limit: usize,
        what: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn describe_count(count: u64, capped: bool) -> String {
    match (count, capped) {
        (0, _) => "no completions".to_string(),
        (c, true) => format!("at least {c} completions"),
        (c, false) => format!("{c} completions"),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
