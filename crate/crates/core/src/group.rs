use std::fmt;

/// A finitely generated abelian 2-group with optional 2-adic summands.
///
/// Each summand is `0` for the 2-adic integers `Z2`, or a power of two
/// `n ≥ 2` for the cyclic group `Z/n`. The canonical form lists `Z2`
/// summands first, then cyclic summands in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GroupDescriptor {
    summands: Vec<u64>,
}

impl GroupDescriptor {
    pub fn trivial() -> Self {
        GroupDescriptor::default()
    }

    /// The 2-adic integers.
    pub fn z2() -> Self {
        GroupDescriptor { summands: vec![0] }
    }

    pub fn cyclic(order: u64) -> Self {
        GroupDescriptor::new(vec![order]).expect("cyclic order must be a power of two ≥ 2")
    }

    pub fn new(mut summands: Vec<u64>) -> Option<Self> {
        if summands
            .iter()
            .any(|&n| n != 0 && (n < 2 || !n.is_power_of_two()))
        {
            return None;
        }
        summands.sort_by(|a, b| match (a, b) {
            (0, 0) => std::cmp::Ordering::Equal,
            (0, _) => std::cmp::Ordering::Less,
            (_, 0) => std::cmp::Ordering::Greater,
            _ => b.cmp(a),
        });
        Some(GroupDescriptor { summands })
    }

    pub fn summands(&self) -> &[u64] {
        &self.summands
    }

    pub fn is_trivial(&self) -> bool {
        self.summands.is_empty()
    }

    /// Group order; `None` when a `Z2` summand makes it infinite.
    pub fn order(&self) -> Option<u64> {
        self.summands.iter().try_fold(
            1u64,
            |acc, &n| if n == 0 { None } else { acc.checked_mul(n) },
        )
    }

    /// Parses one summand token: `Z` (2-adic) or a power of two ≥ 2.
    pub fn parse_summand(token: &str) -> Option<u64> {
        match token {
            "Z" | "Z2" => Some(0),
            _ => token
                .parse::<u64>()
                .ok()
                .filter(|&n| n >= 2 && n.is_power_of_two()),
        }
    }

    /// Comma-separated file form: `Z`, `8`, `2,2`, and `1` for trivial.
    pub fn to_file_token(&self) -> String {
        if self.summands.is_empty() {
            return "1".to_string();
        }
        self.summands
            .iter()
            .map(|&n| {
                if n == 0 {
                    "Z".to_string()
                } else {
                    n.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_file_token(token: &str) -> Option<Self> {
        if token == "1" {
            return Some(GroupDescriptor::trivial());
        }
        token
            .split(',')
            .map(GroupDescriptor::parse_summand)
            .collect::<Option<Vec<_>>>()
            .and_then(GroupDescriptor::new)
    }
}

impl fmt::Display for GroupDescriptor {
    /// `0`, `Z2`, `Z/8`, `Z2+Z/2`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|&n| {
                if n == 0 {
                    "Z2".to_string()
                } else {
                    format!("Z/{n}")
                }
            })
            .collect();
        f.write_str(&parts.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let g = GroupDescriptor::new(vec![2, 0, 8, 2]).unwrap();
        assert_eq!(g.summands(), &[0, 8, 2, 2]);
        assert_eq!(g.to_string(), "Z2+Z/8+Z/2+Z/2");
        assert_eq!(g.order(), None);
        assert_eq!(GroupDescriptor::new(vec![2, 16]).unwrap().order(), Some(32));
    }

    #[test]
    fn rejects_non_powers_of_two() {
        assert!(GroupDescriptor::new(vec![3]).is_none());
        assert!(GroupDescriptor::new(vec![1]).is_none());
        assert!(GroupDescriptor::from_file_token("24").is_none());
    }

    #[test]
    fn file_tokens() {
        assert_eq!(
            GroupDescriptor::from_file_token("Z").unwrap(),
            GroupDescriptor::z2()
        );
        assert_eq!(
            GroupDescriptor::from_file_token("1").unwrap(),
            GroupDescriptor::trivial()
        );
        let g = GroupDescriptor::from_file_token("2,32").unwrap();
        assert_eq!(g.to_file_token(), "32,2");
        assert_eq!(GroupDescriptor::trivial().to_string(), "0");
    }
}
