use std::fmt;
use std::str::FromStr;

/// A permutation of the three tensor slots, stored by its 0-based images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Perm3([usize; 3]);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid permutation {0:?}")]
pub struct ParsePermError(pub String);

impl Perm3 {
    pub fn identity() -> Self {
        Perm3([0, 1, 2])
    }

    /// From 0-based images `[ω(0), ω(1), ω(2)]`.
    pub fn from_images(images: [usize; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm3(images))
    }

    pub fn images(&self) -> [usize; 3] {
        self.0
    }

    pub fn apply(&self, m: usize) -> usize {
        self.0[m]
    }

    /// `(self ∘ other)(m) = self(other(m))`.
    pub fn compose(&self, other: &Perm3) -> Perm3 {
        Perm3([self.0[other.0[0]], self.0[other.0[1]], self.0[other.0[2]]])
    }

    pub fn inverse(&self) -> Perm3 {
        let mut inv = [0; 3];
        for (m, &w) in self.0.iter().enumerate() {
            inv[w] = m;
        }
        Perm3(inv)
    }

    pub fn all() -> [Perm3; 6] {
        [
            Perm3([0, 1, 2]),
            Perm3([1, 0, 2]),
            Perm3([0, 2, 1]),
            Perm3([2, 1, 0]),
            Perm3([1, 2, 0]),
            Perm3([2, 0, 1]),
        ]
    }

    /// Cycle notation with 1-based labels, e.g. `(123)`, `(12)(3)`, `()`.
    fn parse_cycles(s: &str) -> Option<Perm3> {
        let mut images = [0, 1, 2];
        let mut used = [false; 3];
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(')?;
            let end = body.find(')')?;
            let cycle: Vec<usize> = body[..end]
                .chars()
                .filter(|c| !c.is_whitespace() && *c != ',')
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()?;
            for &c in &cycle {
                if !(1..=3).contains(&c) || used[c - 1] {
                    return None;
                }
                used[c - 1] = true;
            }
            for (p, &c) in cycle.iter().enumerate() {
                images[c - 1] = cycle[(p + 1) % cycle.len()] - 1;
            }
            rest = body[end + 1..].trim_start();
        }
        Some(Perm3(images))
    }

    /// One-line notation with 0-based images, e.g. `1,2,0` or `[1,2,0]`.
    fn parse_one_line(s: &str) -> Option<Perm3> {
        let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
        let parts: Vec<usize> = inner
            .split(',')
            .map(|p| p.trim().parse().ok())
            .collect::<Option<_>>()?;
        let arr: [usize; 3] = parts.try_into().ok()?;
        Perm3::from_images(arr)
    }
}

impl FromStr for Perm3 {
    type Err = ParsePermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let parsed = match t {
            "id" | "e" => Some(Perm3::identity()),
            _ if t.starts_with('(') => Perm3::parse_cycles(t),
            _ => Perm3::parse_one_line(t),
        };
        parsed.ok_or_else(|| ParsePermError(s.to_string()))
    }
}

impl fmt::Display for Perm3 {
    /// Cycle notation with 1-based labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 3];
        let mut any = false;
        for start in 0..3 {
            if seen[start] || self.0[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut m = start;
            while !seen[m] {
                seen[m] = true;
                write!(f, "{}", m + 1)?;
                m = self.0[m];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_notations() {
        let c: Perm3 = "(123)".parse().unwrap();
        assert_eq!(c.images(), [1, 2, 0]);
        assert_eq!("1,2,0".parse::<Perm3>().unwrap(), c);
        assert_eq!("[1, 2, 0]".parse::<Perm3>().unwrap(), c);
        assert_eq!("(12)(3)".parse::<Perm3>().unwrap().images(), [1, 0, 2]);
        assert_eq!("()".parse::<Perm3>().unwrap(), Perm3::identity());
        assert_eq!(c.to_string(), "(123)");
        assert_eq!(c.inverse().to_string(), "(132)");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["(14)", "(11)", "1,1,0", "(12", "0,1", "x"] {
            assert!(bad.parse::<Perm3>().is_err(), "{bad}");
        }
    }

    #[test]
    fn group_laws() {
        for a in Perm3::all() {
            assert_eq!(a.compose(&a.inverse()), Perm3::identity());
            for b in Perm3::all() {
                for c in Perm3::all() {
                    assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
                }
            }
        }
    }
}
