//! Maximum-likelihood and minimum-distance decoders, and the exhaustive
//! check that they agree.

use serde::Serialize;

use super::channel::Channel;
use super::distance::DistanceMatrix;
use super::weak_order::{weak_order, Direction};
use crate::error::{Error, Result};
use crate::rational::Rat;

/// Largest alphabet the exhaustive decoder comparison will enumerate.
pub const ORACLE_MAX_N: usize = 20;

/// A nonempty set of codewords, stored sorted and 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Code {
    n: usize,
    members: Vec<usize>,
}

impl Code {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::EmptyCode);
        }
        if let Some(&bad) = members.iter().find(|&&c| c >= n) {
            return Err(Error::IndexOutOfRange { index: bad, size: n });
        }
        Ok(Self { n, members })
    }

    /// Code from the set bits of `mask` (bit `i` ↔ symbol `i`).
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        Self::new(n, (0..n).filter(|&i| mask >> i & 1 == 1))
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

fn check(n: usize, code: &Code, received: usize) -> Result<()> {
    if code.n != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: code.n,
        });
    }
    if received >= n {
        return Err(Error::IndexOutOfRange {
            index: received,
            size: n,
        });
    }
    Ok(())
}

fn arg_best<'a>(
    code: &Code,
    value: impl Fn(usize) -> &'a Rat,
    better: impl Fn(&Rat, &Rat) -> bool,
) -> Vec<usize> {
    let mut best: Option<&Rat> = None;
    let mut winners = Vec::new();
    for &c in &code.members {
        let v = value(c);
        match best {
            Some(b) if better(v, b) => {
                best = Some(v);
                winners.clear();
                winners.push(c);
            }
            Some(b) if v == b => winners.push(c),
            Some(_) => {}
            None => {
                best = Some(v);
                winners.push(c);
            }
        }
    }
    winners
}

/// All codewords `c` maximizing `P(received | c)`.
pub fn mld_decode(channel: &Channel, code: &Code, received: usize) -> Result<Vec<usize>> {
    check(channel.n(), code, received)?;
    Ok(arg_best(code, |c| channel.prob(c, received), |a, b| a > b))
}

/// All codewords `c` minimizing `d(c, received)`.
pub fn mdd_decode(distance: &DistanceMatrix, code: &Code, received: usize) -> Result<Vec<usize>> {
    check(distance.n(), code, received)?;
    Ok(arg_best(code, |c| distance.get(c, received), |a, b| a < b))
}

/// Whether the channel and distance induce the same decoder, decided by
/// comparing the decreasing rank matrix of the channel with the increasing
/// rank matrix of the distance.
pub fn matched(channel: &Channel, distance: &DistanceMatrix) -> Result<bool> {
    if channel.n() != distance.n() {
        return Err(Error::SizeMismatch {
            left: channel.n(),
            right: distance.n(),
        });
    }
    Ok(weak_order(channel.matrix(), Direction::Descending)
        == weak_order(distance.matrix(), Direction::Ascending))
}

/// A code and received symbol on which the two decoders disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecoderWitness {
    pub code: Code,
    pub received: usize,
    pub mld: Vec<usize>,
    pub mdd: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgreementReport {
    pub agree: bool,
    pub codes_checked: u64,
    pub witness: Option<DecoderWitness>,
}

/// Runs both decoders on every nonempty code and every received symbol.
///
/// Independent of [`matched`]: it never looks at rank matrices.
pub fn decoder_agreement_oracle(channel: &Channel, distance: &DistanceMatrix) -> Result<AgreementReport> {
    let n = channel.n();
    if n != distance.n() {
        return Err(Error::SizeMismatch {
            left: n,
            right: distance.n(),
        });
    }
    if n > ORACLE_MAX_N {
        return Err(Error::Guard {
            what: "oracle alphabet size",
            value: n,
            limit: ORACLE_MAX_N,
        });
    }
    let mut checked = 0;
    for mask in 1..(1u64 << n) {
        let code = Code::from_mask(n, mask)?;
        checked += 1;
        for received in 0..n {
            let mld = mld_decode(channel, &code, received)?;
            let mdd = mdd_decode(distance, &code, received)?;
            if mld != mdd {
                return Ok(AgreementReport {
                    agree: false,
                    codes_checked: checked,
                    witness: Some(DecoderWitness {
                        code,
                        received,
                        mld,
                        mdd,
                    }),
                });
            }
        }
    }
    Ok(AgreementReport {
        agree: true,
        codes_checked: checked,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn channel_b() -> Channel {
        Channel::from_rows(vec![
            vec![rat(5, 8), rat(3, 16), rat(3, 16)],
            vec![rat(1, 4), rat(1, 2), rat(1, 4)],
            vec![rat(1, 8), rat(2, 8), rat(5, 8)],
        ])
        .unwrap()
    }

    fn example_distance() -> DistanceMatrix {
        DistanceMatrix::from_rows(vec![
            vec![int(0), int(1), int(2)],
            vec![int(1), int(0), rat(1, 2)],
            vec![int(2), rat(1, 2), int(0)],
        ])
        .unwrap()
    }

    #[test]
    fn mld_on_worked_channel() {
        let code = Code::new(3, [0, 2]).unwrap();
        assert_eq!(mld_decode(&channel_b(), &code, 1).unwrap(), vec![2]);
        let single = Code::new(3, [1]).unwrap();
        for j in 0..3 {
            assert_eq!(mld_decode(&channel_b(), &single, j).unwrap(), vec![1]);
        }
        assert!(mld_decode(&channel_b(), &single, 3).is_err());
    }

    #[test]
    fn full_tie_returns_whole_code() {
        let uniform = Channel::from_rows(vec![vec![rat(1, 2); 2]; 2]).unwrap();
        let code = Code::new(2, [0, 1]).unwrap();
        assert_eq!(mld_decode(&uniform, &code, 0).unwrap(), vec![0, 1]);
        let eq = DistanceMatrix::from_pairs(3, |_, _| int(1)).unwrap();
        let code = Code::new(3, [0, 1]).unwrap();
        assert_eq!(mdd_decode(&eq, &code, 2).unwrap(), vec![0, 1]);
    }

    #[test]
    fn mdd_on_worked_distance() {
        let code = Code::new(3, [0, 2]).unwrap();
        assert_eq!(mdd_decode(&example_distance(), &code, 1).unwrap(), vec![2]);
        let all = Code::new(3, [0, 1, 2]).unwrap();
        for j in 0..3 {
            assert_eq!(mdd_decode(&example_distance(), &all, j).unwrap(), vec![j]);
        }
    }

    #[test]
    fn code_validation() {
        assert_eq!(Code::new(3, []), Err(Error::EmptyCode));
        assert!(Code::new(3, [3]).is_err());
        assert_eq!(Code::from_mask(3, 0b101).unwrap().members(), &[0, 2]);
    }

    #[test]
    fn matched_and_oracle_on_worked_example() {
        let p = channel_b();
        let d = example_distance();
        assert!(matched(&p, &d).unwrap());
        let report = decoder_agreement_oracle(&p, &d).unwrap();
        assert!(report.agree);
        assert_eq!(report.codes_checked, 7);

        let ones = DistanceMatrix::from_pairs(3, |_, _| int(1)).unwrap();
        assert!(!matched(&p, &ones).unwrap());
        let report = decoder_agreement_oracle(&p, &ones).unwrap();
        assert!(!report.agree);
        let w = report.witness.unwrap();
        assert_ne!(w.mld, w.mdd);
    }

    #[test]
    fn trivial_alphabet() {
        let p = Channel::from_rows(vec![vec![int(1)]]).unwrap();
        let d = DistanceMatrix::from_rows(vec![vec![int(0)]]).unwrap();
        assert!(matched(&p, &d).unwrap());
        assert!(decoder_agreement_oracle(&p, &d).unwrap().agree);
    }
}
