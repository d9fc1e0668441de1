use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::subsets::{subset_label, SubsetVector};

/// The weak order of a positive vector: equality classes of masks, smallest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderCone {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl OrderCone {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Whether `v` induces the same weak order.
    pub fn contains(&self, v: &SubsetVector) -> bool {
        v.n() == self.n && ordered_like(&self.classes, |mask| v.get(mask))
    }

    /// `[{3}] < [{2}, {2,3}] < …`
    pub fn describe(&self) -> String {
        describe_classes(&self.classes)
    }
}

pub(crate) fn describe_classes(classes: &[Vec<usize>]) -> String {
    classes
        .iter()
        .map(|c| format!("[{}]", c.iter().map(|&m| subset_label(m)).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join(" < ")
}

pub(crate) fn ordered_like<'a>(classes: &[Vec<usize>], value: impl Fn(usize) -> &'a Rat) -> bool {
    let within = classes
        .iter()
        .all(|c| c.iter().all(|&m| value(m) == value(c[0])));
    let between = classes
        .windows(2)
        .all(|w| value(w[0][0]) < value(w[1][0]));
    within && between
}

/// Groups `masks` by their value under `value`, ascending.
pub(crate) fn group_by_value(masks: impl IntoIterator<Item = usize>, value: impl Fn(usize) -> Rat) -> Vec<Vec<usize>> {
    let mut keyed: Vec<(Rat, usize)> = masks.into_iter().map(|m| (value(m), m)).collect();
    keyed.sort();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut last: Option<Rat> = None;
    for (v, m) in keyed {
        if last.as_ref() == Some(&v) {
            classes.last_mut().expect("open class").push(m);
        } else {
            classes.push(vec![m]);
            last = Some(v);
        }
    }
    classes
}

pub fn cone_of(delta: &SubsetVector) -> Result<OrderCone> {
    if let Some((mask, _)) = delta.iter().find(|(_, v)| !v.is_positive()) {
        return Err(Error::NonPositiveWeight { mask });
    }
    Ok(OrderCone {
        n: delta.n(),
        classes: group_by_value(1..=delta.len(), |m| delta.get(m).clone()),
    })
}
