use rand::Rng;

use crate::{Population, Role};

/// Members of one group; `members[0]` is the first member drawn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Roster {
    pub members: Vec<Role>,
    pub focal: usize,
}

impl Roster {
    pub fn n(&self) -> usize {
        self.members.len()
    }

    pub fn cooperator_count(&self) -> usize {
        self.members
            .iter()
            .filter(|&&r| r == Role::Cooperator)
            .count()
    }

    pub fn focal_role(&self) -> Role {
        self.members[self.focal]
    }
}

#[inline]
fn draw<R: Rng + ?Sized>(p_cooperator: f64, rng: &mut R) -> Role {
    if rng.random::<f64>() < p_cooperator {
        Role::Cooperator
    } else {
        Role::Defector
    }
}

/// Random mixing: the focal member is planted first, the other `n - 1` are
/// independent cooperators with probability `f_c`.
pub(crate) fn fill_random<R: Rng + ?Sized>(
    members: &mut Vec<Role>,
    n: usize,
    fc: f64,
    focal_role: Role,
    rng: &mut R,
) -> usize {
    members.clear();
    members.push(focal_role);
    members.extend((1..n).map(|_| draw(fc, rng)));
    0
}

/// Assortative formation with a planted focal member at a uniform position.
/// The first member is the focal one or is drawn at `f_c`; every later
/// non-focal member copies the first member's type with probability `tau`
/// and is otherwise drawn at `f_c`.
pub(crate) fn fill_assortative<R: Rng + ?Sized>(
    members: &mut Vec<Role>,
    n: usize,
    fc: f64,
    tau: f64,
    focal_role: Role,
    rng: &mut R,
) -> usize {
    members.clear();
    let focal = rng.random_range(0..n);
    let first = if focal == 0 {
        focal_role
    } else {
        draw(fc, rng)
    };
    members.push(first);
    for slot in 1..n {
        let role = if slot == focal {
            focal_role
        } else if rng.random::<f64>() < tau {
            first
        } else {
            draw(fc, rng)
        };
        members.push(role);
    }
    focal
}

pub(crate) fn fill<R: Rng + ?Sized>(
    members: &mut Vec<Role>,
    population: &Population,
    focal_role: Role,
    rng: &mut R,
) -> usize {
    if population.is_random_mixing() {
        fill_random(members, population.n(), population.fc(), focal_role, rng)
    } else {
        fill_assortative(
            members,
            population.n(),
            population.fc(),
            population.tau(),
            focal_role,
            rng,
        )
    }
}

/// Forms a group around a focal member of `focal_role`, using random mixing
/// when `tau = 0` and assortative formation otherwise.
pub fn form_group<R: Rng + ?Sized>(
    population: &Population,
    focal_role: Role,
    rng: &mut R,
) -> Roster {
    let mut members = Vec::with_capacity(population.n());
    let focal = fill(&mut members, population, focal_role, rng);
    Roster { members, focal }
}

pub fn form_group_random<R: Rng + ?Sized>(
    population: &Population,
    focal_role: Role,
    rng: &mut R,
) -> Roster {
    let mut members = Vec::with_capacity(population.n());
    let focal = fill_random(
        &mut members,
        population.n(),
        population.fc(),
        focal_role,
        rng,
    );
    Roster { members, focal }
}

/// Assortative formation regardless of `tau`; with `tau = 0` it samples the
/// same law as [`form_group_random`] through a different path.
pub fn form_group_assortative<R: Rng + ?Sized>(
    population: &Population,
    focal_role: Role,
    rng: &mut R,
) -> Roster {
    let mut members = Vec::with_capacity(population.n());
    let focal = fill_assortative(
        &mut members,
        population.n(),
        population.fc(),
        population.tau(),
        focal_role,
        rng,
    );
    Roster { members, focal }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::replication_rng;

    #[test]
    fn focal_keeps_its_role() {
        let mut rng = replication_rng(1, 0, 0);
        for &tau in &[0.0, 0.3, 1.0] {
            let pop = Population::new(6, 0.5, tau).unwrap();
            for role in [Role::Cooperator, Role::Defector] {
                for _ in 0..200 {
                    let roster = form_group(&pop, role, &mut rng);
                    assert_eq!(roster.n(), 6);
                    assert_eq!(roster.focal_role(), role);
                }
            }
        }
    }

    #[test]
    fn full_assortment_copies_first_member() {
        let mut rng = replication_rng(2, 0, 0);
        let pop = Population::new(8, 0.3, 1.0).unwrap();
        let mut saw_focal_first = false;
        for _ in 0..500 {
            let roster = form_group(&pop, Role::Cooperator, &mut rng);
            let first = roster.members[0];
            for (slot, &role) in roster.members.iter().enumerate() {
                if slot != roster.focal {
                    assert_eq!(role, first);
                }
            }
            if roster.focal == 0 {
                saw_focal_first = true;
                assert_eq!(roster.cooperator_count(), 8);
            }
        }
        assert!(saw_focal_first);
    }

    #[test]
    fn extreme_frequencies() {
        let mut rng = replication_rng(3, 0, 0);
        let all_c = Population::random(5, 1.0).unwrap();
        let none_c = Population::random(5, 0.0).unwrap();
        for _ in 0..100 {
            assert_eq!(
                form_group(&all_c, Role::Defector, &mut rng).cooperator_count(),
                4
            );
            assert_eq!(
                form_group(&none_c, Role::Cooperator, &mut rng).cooperator_count(),
                1
            );
        }
    }
}
