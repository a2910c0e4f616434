//! Domination on the quotient. A module meets a dominating set in nothing,
//! one vertex, or a minimum dominating set of its factor.

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    None,
    One,
    Full,
}

pub fn domination(adj: &[u64], gamma: &[u64]) -> u64 {
    let t = adj.len();
    let options: Vec<Vec<Role>> = gamma
        .iter()
        .map(|&g| if g == 1 { vec![Role::None, Role::One] } else { vec![Role::None, Role::One, Role::Full] })
        .collect();
    let mut roles = vec![Role::None; t];
    let mut best = u64::MAX;
    search(adj, gamma, &options, &mut roles, 0, &mut best);
    best
}

fn search(adj: &[u64], gamma: &[u64], options: &[Vec<Role>], roles: &mut Vec<Role>, i: usize, best: &mut u64) {
    let t = adj.len();
    if i == t {
        let used = roles.iter().enumerate().filter(|(_, &r)| r != Role::None).fold(0u64, |m, (v, _)| m | 1 << v);
        let ok = (0..t).all(|v| match roles[v] {
            Role::Full => true,
            Role::One if gamma[v] == 1 => true,
            _ => adj[v] & used != 0,
        });
        if ok {
            let cost = (0..t)
                .map(|v| match roles[v] {
                    Role::None => 0,
                    Role::One => 1,
                    Role::Full => gamma[v],
                })
                .sum();
            *best = (*best).min(cost);
        }
        return;
    }
    for &r in &options[i] {
        roles[i] = r;
        search(adj, gamma, options, roles, i + 1, best);
    }
}
