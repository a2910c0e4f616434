//! Maximum-weight independent set of the quotient with weights `alpha`.

use super::{bits, independent};

pub fn independence(adj: &[u64], alpha: &[u64]) -> u64 {
    let all = (1u64 << adj.len()) - 1;
    (1..=all).filter(|&s| independent(adj, s)).map(|s| bits(s).map(|v| alpha[v]).sum()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(independence(&[0, 0, 0], &[2, 3, 4]), 9);
        assert_eq!(independence(&[0b110, 0b101, 0b011], &[2, 3, 4]), 4);
        // P4 weighted: ends 0 and 3, or 1 and 3, ...
        assert_eq!(independence(&[0b0010, 0b0101, 0b1010, 0b0100], &[1, 5, 1, 2]), 7);
    }
}
