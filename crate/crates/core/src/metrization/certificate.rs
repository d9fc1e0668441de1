use std::fmt;

use super::graph::{Edge, Node, Relation};
use crate::error::{Error, Result};
use crate::orders::{weak_order, Channel, Direction};

/// One link of a contradictory chain: `d(rows.0, column) rel d(rows.1, column)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub from: Node,
    pub rel: Relation,
    pub to: Node,
    pub column: usize,
    pub rows: (usize, usize),
}

impl Step {
    pub(crate) fn from_edge(edge: Edge, rel: Relation) -> Self {
        Self {
            from: edge.from,
            rel,
            to: edge.to,
            column: edge.column,
            rows: edge.rows,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}  (column {}, rows {} and {})",
            self.from,
            self.rel,
            self.to,
            self.column + 1,
            self.rows.0 + 1,
            self.rows.1 + 1
        )
    }
}

/// Why no matched distance exists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// A closed chain `v₀ → v₁ → … → v₀` with at least one strict step.
    Cycle(Vec<Step>),
    /// `P(row | index) > P(index | index)`, which would force `d(row, index) < 0`.
    Diagonal { index: usize, row: usize },
    /// `P(row | column)` ties the column maximum with the diagonal, forcing
    /// `d(row, column) = 0`; contradictory only when a semimetric is required.
    OffDiagonalZero { column: usize, row: usize },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Cycle(steps) => {
                let mut chain = steps[0].from.to_string();
                for s in steps {
                    chain.push_str(&format!(" {} {}", s.rel, s.to));
                }
                writeln!(f, "contradictory cycle: {chain}")?;
                for s in steps {
                    writeln!(f, "  {s}")?;
                }
                Ok(())
            }
            Certificate::Diagonal { index, row } => writeln!(
                f,
                "diagonal violation: P({r}|{i}) > P({i}|{i}) forces d({r},{i}) < d({i},{i}) = 0",
                r = row + 1,
                i = index + 1
            ),
            Certificate::OffDiagonalZero { column, row } => writeln!(
                f,
                "off-diagonal zero: P({r}|{c}) ties P({c}|{c}) so d({r},{c}) = 0",
                r = row + 1,
                c = column + 1
            ),
        }
    }
}

fn in_range(n: usize, index: usize) -> Result<()> {
    if index >= n {
        return Err(Error::MalformedCertificate(format!(
            "index {} outside 1..={n}",
            index + 1
        )));
    }
    Ok(())
}

/// Re-derives every claim of `certificate` from the channel's decreasing
/// rank matrix and checks that together they are contradictory.
///
/// Returns `Ok(false)` for a well-formed certificate that does not prove
/// infeasibility, and `Err` for a malformed one.
pub fn check_certificate(channel: &Channel, certificate: &Certificate) -> Result<bool> {
    let n = channel.n();
    let order = weak_order(channel.matrix(), Direction::Descending);
    match *certificate {
        Certificate::Cycle(ref steps) => {
            if steps.is_empty() {
                return Err(Error::MalformedCertificate("empty cycle".into()));
            }
            for s in steps {
                in_range(n, s.column)?;
                in_range(n, s.rows.0)?;
                in_range(n, s.rows.1)?;
                if s.rows.0 == s.rows.1 {
                    return Err(Error::MalformedCertificate("step compares a row with itself".into()));
                }
            }
            let derivable = steps.iter().all(|s| {
                let (ri, rk) = (order.rank(s.rows.0, s.column), order.rank(s.rows.1, s.column));
                let holds = match s.rel {
                    Relation::Less => ri < rk,
                    Relation::Equal => ri == rk,
                };
                holds
                    && s.from == Node::at(s.rows.0, s.column)
                    && s.to == Node::at(s.rows.1, s.column)
            });
            let closed = steps
                .iter()
                .zip(steps.iter().cycle().skip(1))
                .all(|(a, b)| a.to == b.from);
            let strict = steps.iter().any(|s| s.rel == Relation::Less);
            Ok(derivable && closed && strict)
        }
        Certificate::Diagonal { index, row } => {
            in_range(n, index)?;
            in_range(n, row)?;
            Ok(row != index && order.rank(row, index) < order.rank(index, index))
        }
        Certificate::OffDiagonalZero { column, row } => {
            in_range(n, column)?;
            in_range(n, row)?;
            Ok(row != column && order.rank(row, column) == 1 && order.rank(column, column) == 1)
        }
    }
}
