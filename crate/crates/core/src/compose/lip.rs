//! Longest induced path, for answers of at least 4 vertices. Such a path
//! meets every module it does not lie inside in at most one vertex, so it is
//! either inside one factor or an induced path of the quotient.

use super::{bits, components};
use crate::error::{Error, Result};

pub fn longest_induced_path(adj: &[u64], lip: &[u64]) -> Result<u64> {
    let all = (1u64 << adj.len()) - 1;
    let across = (1..=all)
        .filter(|&s| {
            let degs: Vec<u32> = bits(s).map(|v| (adj[v] & s).count_ones()).collect();
            degs.iter().all(|&d| d <= 2)
                && degs.iter().sum::<u32>() == 2 * (s.count_ones() - 1)
                && components(adj, s).len() == 1
        })
        .map(|s| s.count_ones() as u64)
        .max()
        .unwrap_or(1);
    let best = across.max(*lip.iter().max().expect("t >= 2"));
    if best < 4 {
        return Err(Error::MalformedQuery(format!(
            "longest induced path below 4 ({best}) is outside this oracle's domain"
        )));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_path_or_factor() {
        let p4 = [0b0010, 0b0101, 0b1010, 0b0100];
        assert_eq!(longest_induced_path(&p4, &[1, 1, 1, 1]).unwrap(), 4);
        assert_eq!(longest_induced_path(&p4, &[1, 6, 1, 2]).unwrap(), 6);
        let c5 = [0b10010, 0b00101, 0b01010, 0b10100, 0b01001];
        assert_eq!(longest_induced_path(&c5, &[1; 5]).unwrap(), 4);
        assert_eq!(longest_induced_path(&[0, 0], &[5, 4]).unwrap(), 5);
        assert!(longest_induced_path(&[0b10, 0b01], &[2, 3]).is_err());
    }
}
