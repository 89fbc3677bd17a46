use crate::error::Error;
use crate::graph::EdgeColoredPoset;

/// Four vertices with covers `bottom → left → top` and `bottom → right → top`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Diamond {
    pub bottom: usize,
    pub left: usize,
    pub right: usize,
    pub top: usize,
}

impl Diamond {
    pub fn to_error(self, p: &EdgeColoredPoset) -> Error {
        Error::NotDiamondColored {
            bottom: p.label(self.bottom).to_string(),
            left: p.label(self.left).to_string(),
            right: p.label(self.right).to_string(),
            top: p.label(self.top).to_string(),
        }
    }
}

/// Sorted intersection of two sorted cover lists.
fn common<E: Copy>(a: &[(usize, E)], b: &[(usize, E)]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].0);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Every diamond in id order: by bottom, then left < right, then top.
pub fn diamonds(p: &EdgeColoredPoset) -> impl Iterator<Item = Diamond> + '_ {
    (0..p.len()).flat_map(move |bottom| {
        let ups = p.up(bottom);
        (0..ups.len()).flat_map(move |i| {
            (i + 1..ups.len()).flat_map(move |j| {
                let (left, right) = (ups[i].0, ups[j].0);
                common(p.up(left), p.up(right)).into_iter().map(move |top| Diamond {
                    bottom,
                    left,
                    right,
                    top,
                })
            })
        })
    })
}

/// First diamond whose parallel edges disagree in color, if any.
pub fn diamond_violation(p: &EdgeColoredPoset) -> Option<Diamond> {
    diamonds(p).find(|d| {
        let c = |a, b| p.edge_color(a, b).unwrap();
        c(d.bottom, d.left) != c(d.right, d.top) || c(d.bottom, d.right) != c(d.left, d.top)
    })
}

pub fn check_diamond_colored(p: &EdgeColoredPoset) -> bool {
    diamond_violation(p).is_none()
}

/// Which half of the balance condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VeeKind {
    /// Two upper covers of `apex` with zero or several common upper covers.
    Open,
    /// Two lower covers of `apex` with zero or several common lower covers.
    CoOpen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnbalancedVee {
    pub kind: VeeKind,
    pub apex: usize,
    pub left: usize,
    pub right: usize,
    /// How many closing elements exist (anything but exactly one fails).
    pub closures: usize,
}

/// First vee not closed by exactly one co-vee (or dually), scanning open
/// vees before co-open ones.
pub fn balance_violation(p: &EdgeColoredPoset) -> Option<UnbalancedVee> {
    let scan = |kind: VeeKind| {
        (0..p.len()).find_map(move |apex| {
            let arms = if kind == VeeKind::Open {
                p.up(apex)
            } else {
                p.down(apex)
            };
            for i in 0..arms.len() {
                for j in i + 1..arms.len() {
                    let (left, right) = (arms[i].0, arms[j].0);
                    let closures = if kind == VeeKind::Open {
                        common(p.up(left), p.up(right)).len()
                    } else {
                        common(p.down(left), p.down(right)).len()
                    };
                    if closures != 1 {
                        return Some(UnbalancedVee {
                            kind,
                            apex,
                            left,
                            right,
                            closures,
                        });
                    }
                }
            }
            None
        })
    };
    scan(VeeKind::Open).or_else(|| scan(VeeKind::CoOpen))
}

pub fn check_topographically_balanced(p: &EdgeColoredPoset) -> bool {
    balance_violation(p).is_none()
}
