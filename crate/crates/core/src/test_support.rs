//! Fixtures shared by unit tests.

pub(crate) fn s3_rows() -> Vec<Vec<usize>> {
    // Permutations of {0,1,2} in the order
    // id, (01), (02), (12), (012), (021); composition (p·q)(x) = p(q(x)).
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index([p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect()
}
