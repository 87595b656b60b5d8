use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Finite group given by its multiplication table; `table[x][y]` is the
/// index of `xy`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
}

impl Group {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(order: usize, table: Vec<Vec<usize>>, names: Vec<String>) -> Result<Group> {
        let g = Group { order, table, names };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if n == 0 {
            return Err(Error::Invalid("group of order 0".into()));
        }
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Invalid(format!("table is not a closed {}x{} table", n, n)));
        }
        if !self.names.is_empty() && self.names.len() != n {
            return Err(Error::Invalid("wrong number of element names".into()));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.table[self.table[x][y]][z] != self.table[x][self.table[y][z]] {
                        return Err(Error::Invalid(format!("not associative at ({}, {}, {})", x, y, z)));
                    }
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| self.table[e][x] == x && self.table[x][e] == x))
            .ok_or_else(|| Error::Invalid("no identity element".into()))?;
        for x in 0..n {
            if !(0..n).any(|y| self.table[x][y] == e) {
                return Err(Error::Invalid(format!("element {} has no inverse", x)));
            }
        }
        Ok(())
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn identity(&self) -> usize {
        (0..self.order)
            .find(|&e| (0..self.order).all(|x| self.table[e][x] == x))
            .unwrap()
    }

    pub fn inverse(&self, x: usize) -> usize {
        let e = self.identity();
        (0..self.order).find(|&y| self.table[x][y] == e).unwrap()
    }

    pub fn name(&self, x: usize) -> String {
        self.names.get(x).cloned().unwrap_or_else(|| format!("g{}", x))
    }

    fn generated_by(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.order];
        let mut stack = vec![self.identity()];
        inside[self.identity()] = true;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    stack.push(y);
                }
            }
        }
        inside
    }

    /// All homomorphisms to {±1}, trivial one first.
    pub fn sign_characters(&self) -> Vec<Vec<i64>> {
        let mut gens = Vec::new();
        loop {
            let inside = self.generated_by(&gens);
            match (0..self.order).find(|&x| !inside[x]) {
                Some(x) => gens.push(x),
                None => break,
            }
        }
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << gens.len()) {
            let mut val = vec![0i64; self.order];
            val[self.identity()] = 1;
            let mut stack = vec![self.identity()];
            let mut ok = true;
            while let Some(x) = stack.pop() {
                for (i, &g) in gens.iter().enumerate() {
                    let s = if mask >> i & 1 == 1 { -1 } else { 1 };
                    let y = self.mul(x, g);
                    if val[y] == 0 {
                        val[y] = val[x] * s;
                        stack.push(y);
                    }
                }
            }
            'check: for x in 0..self.order {
                for y in 0..self.order {
                    if val[self.mul(x, y)] != val[x] * val[y] {
                        ok = false;
                        break 'check;
                    }
                }
            }
            if ok {
                out.push(val);
            }
        }
        out
    }
}

fn cyclic(n: usize) -> Group {
    Group {
        order: n,
        table: (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect(),
        names: (0..n)
            .map(|i| if i == 0 { "e".into() } else { format!("g^{}", i) })
            .collect(),
    }
}

fn symmetric3() -> Group {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&x| x == p).unwrap();
    let table = perms
        .iter()
        .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect();
    let names = perms
        .iter()
        .map(|p| format!("[{}{}{}]", p[0] + 1, p[1] + 1, p[2] + 1))
        .collect();
    Group { order: 6, table, names }
}

/// Named groups: `Z2`, `Z3`, `Z4`, `S3`.
pub fn builtin_group(name: &str) -> Result<Group> {
    match name {
        "Z2" => Ok(cyclic(2)),
        "Z3" => Ok(cyclic(3)),
        "Z4" => Ok(cyclic(4)),
        "S3" => Ok(symmetric3()),
        other => Err(Error::Invalid(format!(
            "unknown group {:?} (expected Z2, Z3, Z4 or S3)",
            other
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_groups() {
        for n in ["Z2", "Z3", "Z4", "S3"] {
            builtin_group(n).unwrap().validate().unwrap();
        }
        assert!(builtin_group("Q8").is_err());
    }

    #[test]
    fn sign_characters() {
        assert_eq!(builtin_group("Z3").unwrap().sign_characters().len(), 1);
        assert_eq!(builtin_group("Z4").unwrap().sign_characters().len(), 2);
        let s3 = builtin_group("S3").unwrap().sign_characters();
        assert_eq!(s3.len(), 2);
        assert_eq!(s3[1], vec![1, -1, -1, 1, 1, -1]);
    }

    #[test]
    fn rejects_non_groups() {
        assert!(Group::new(2, vec![vec![0, 1], vec![1, 1]], vec![]).is_err());
        assert!(Group::new(2, vec![vec![0, 1]], vec![]).is_err());
        assert!(Group::new(2, vec![vec![0, 2], vec![1, 0]], vec![]).is_err());
    }
}
