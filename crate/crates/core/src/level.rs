use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A level `l` in `{0, 1/2, 1, 3/2, ...}`, stored as `2l`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level {
    two_l: usize,
}

impl Level {
    pub fn from_two_l(two_l: usize) -> Self {
        Level { two_l }
    }

    pub fn integer(k: usize) -> Self {
        Level { two_l: 2 * k }
    }

    /// The level `k + 1/2`.
    pub fn half(k: usize) -> Self {
        Level { two_l: 2 * k + 1 }
    }

    pub fn two_l(self) -> usize {
        self.two_l
    }

    pub fn is_half(self) -> bool {
        self.two_l % 2 == 1
    }

    /// `floor(l)`: number of tensor factors of `V` acted on.
    pub fn floor(self) -> usize {
        self.two_l / 2
    }

    /// `ceil(l)`: the partition algebra `A_k` the level lives in.
    pub fn ambient(self) -> usize {
        self.two_l.div_ceil(2)
    }

    pub fn prev(self) -> Option<Level> {
        self.two_l.checked_sub(1).map(Level::from_two_l)
    }

    pub fn next(self) -> Level {
        Level::from_two_l(self.two_l + 1)
    }

    /// All levels `1/2, 1, ..., self`.
    pub fn up_to(self) -> impl Iterator<Item = Level> {
        (1..=self.two_l).map(Level::from_two_l)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_half() {
            write!(f, "{}/2", self.two_l)
        } else {
            write!(f, "{}", self.two_l / 2)
        }
    }
}

impl FromStr for Level {
    type Err = Error;

    /// Accepts `2`, `3/2`, `1.5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad level `{s}`"));
        if let Some((a, b)) = s.split_once('/') {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            match b.trim() {
                "2" => Ok(Level::from_two_l(a)),
                "1" => Ok(Level::integer(a)),
                _ => Err(bad()),
            }
        } else if let Some((a, b)) = s.split_once('.') {
            let a: usize = a.parse().map_err(|_| bad())?;
            match b {
                "5" => Ok(Level::half(a)),
                "0" | "" => Ok(Level::integer(a)),
                _ => Err(bad()),
            }
        } else {
            s.parse().map(Level::integer).map_err(|_| bad())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["0", "1/2", "1", "3/2", "7/2"] {
            assert_eq!(s.parse::<Level>().unwrap().to_string(), s);
        }
        assert_eq!("1.5".parse::<Level>().unwrap(), Level::half(1));
        assert!("1/3".parse::<Level>().is_err());
    }

    #[test]
    fn ambient_and_floor() {
        let l = Level::half(2);
        assert_eq!((l.floor(), l.ambient()), (2, 3));
        assert_eq!(Level::integer(2).ambient(), 2);
        assert_eq!(Level::integer(0).prev(), None);
    }
}
