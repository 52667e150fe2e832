use super::partition::Partition;

/// Standard Young tableau with entries 1..=m.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    // position[e - 1] = (row, col), 0-based
    position: Vec<(usize, usize)>,
}

impl StandardTableau {
    /// Panics unless `rows` is a standard filling of a partition shape.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .expect("row lengths must form a partition");
        let m = shape.size();
        let mut position = vec![(usize::MAX, usize::MAX); m];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                assert!(
                    e >= 1 && e <= m && position[e - 1].0 == usize::MAX,
                    "entries must be 1..=m once each"
                );
                position[e - 1] = (r, c);
                if c > 0 {
                    assert!(row[c - 1] < e, "rows must increase");
                }
                if r > 0 {
                    assert!(rows[r - 1][c] < e, "columns must increase");
                }
            }
        }
        StandardTableau {
            shape,
            rows,
            position,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.position.len()
    }

    /// 0-based (row, column) of entry `e` (1-based).
    pub fn position(&self, e: usize) -> (usize, usize) {
        self.position[e - 1]
    }

    /// Content col - row of the box holding `e`.
    pub fn content(&self, e: usize) -> i64 {
        let (r, c) = self.position(e);
        c as i64 - r as i64
    }

    pub fn contents(&self) -> Vec<i64> {
        (1..=self.size()).map(|e| self.content(e)).collect()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let w = self.rows.first().map_or(0, |r| r.len());
        (0..w)
            .map(|c| {
                self.rows
                    .iter()
                    .filter(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect()
    }
}

/// All standard tableaux of the shape, ordered lexicographically by row
/// reading word. The row-filled tableau comes first.
pub fn enumerate_standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    fn rec(
        lambda: &[usize],
        next: usize,
        m: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > m {
            out.push(StandardTableau::from_rows(rows.clone()));
            return;
        }
        for r in 0..lambda.len() {
            let len = rows[r].len();
            if len < lambda[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                rec(lambda, next + 1, m, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.height()];
    rec(lambda.parts(), 1, lambda.size(), &mut rows, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

#[cfg(test)]
mod tests {
    use super::super::partition::specht_dimension;
    use super::*;

    #[test]
    fn order_and_count() {
        let l = Partition::new(vec![2, 1]).unwrap();
        let ts = enumerate_standard_tableaux(&l);
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(ts[1].rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(ts[1].contents(), vec![0, -1, 1]);
        for m in 0..=6 {
            for l in Partition::all_of(m) {
                assert_eq!(
                    enumerate_standard_tableaux(&l).len() as u128,
                    specht_dimension(&l)
                );
            }
        }
    }
}
