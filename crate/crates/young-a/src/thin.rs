//! Skew diagrams of thickness at most 2 and their {1,2}-fillings.

use crate::diagram::SkewDiagram;
use crate::tableau::TableauA;

/// b_i = number of columns j with Q-height i-1 and P-height i, for i = 1..=n.
pub fn bridges(s: &SkewDiagram, n: usize) -> Vec<usize> {
    let mut b = vec![0; n];
    for j in 1..=s.width() {
        let (q, p) = s.column_span(j);
        if p == q + 1 && p <= n {
            b[p - 1] += 1;
        }
    }
    b
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filling2Row {
    pub exists: bool,
    /// c_i = number of 1's in the bridge at height i, indexed by height
    pub witness: Option<Vec<usize>>,
}

/// Existence of an alpha_1-codominant balanced semistandard {1,2}-filling.
pub fn exists_filling_2row(s: &SkewDiagram, n: usize) -> Filling2Row {
    let no = Filling2Row { exists: false, witness: None };
    if s.size() % 2 == 1 || s.thickness() > 2 {
        return no;
    }
    let b = bridges(s, n);
    let total: usize = b.iter().sum();
    if b.iter().any(|&x| 2 * x > total) {
        return no;
    }
    // cut-off over the bridges taken left to right, i.e. by decreasing height
    let half = total / 2;
    let mut c = vec![0; n];
    let mut before = 0;
    for i in (0..n).rev() {
        let upto = before + b[i];
        c[i] = if upto <= half {
            0
        } else if before >= half {
            b[i]
        } else {
            let after: usize = b[..i].iter().sum();
            half - after
        };
        before = upto;
    }
    Filling2Row { exists: true, witness: Some(c) }
}

/// The {1,2}-filling described by a witness: height-2 columns read (1,2),
/// the bridge at height i starts with c_i ones followed by twos.
pub fn filling_from_witness(s: &SkewDiagram, c: &[usize]) -> TableauA {
    let mut seen = vec![0; c.len() + 1];
    let cols: Vec<Vec<usize>> = (1..=s.width())
        .map(|j| {
            let (q, p) = s.column_span(j);
            match p - q {
                0 => vec![],
                1 => {
                    seen[p] += 1;
                    vec![if seen[p] <= c[p - 1] { 1 } else { 2 }]
                }
                _ => vec![1, 2],
            }
        })
        .collect();
    TableauA::from_columns(s, &cols, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::YoungDiagram;
    use crate::tableau::check_tableau_a;
    use lie_core::ThetaSet;

    fn skew(p: &[usize], q: &[usize], n: usize) -> SkewDiagram {
        SkewDiagram::new(YoungDiagram::new(p, n).unwrap(), YoungDiagram::new(q, n).unwrap()).unwrap()
    }

    pub(crate) fn figure3() -> SkewDiagram {
        skew(&[15, 13, 10, 6, 4, 2], &[12, 12, 7, 3, 0, 0], 6)
    }

    #[test]
    fn figure3_bridges_and_filling() {
        let s = figure3();
        assert_eq!(bridges(&s, 6), vec![2, 0, 3, 2, 1, 0]);
        let f = exists_filling_2row(&s, 6);
        assert!(f.exists);
        let c = f.witness.unwrap();
        assert_eq!(c, vec![2, 0, 2, 0, 0, 0]);
        let t = filling_from_witness(&s, &c);
        // printed filling, row by row
        assert_eq!(
            t.rows,
            vec![vec![1, 1, 1], vec![2], vec![1, 1, 2], vec![1, 2, 2], vec![1, 1, 2, 2], vec![2, 2]]
        );
        let r = check_tableau_a(&t, 2, &ThetaSet::from_indices([1])).unwrap();
        assert!(r.semistandard && r.balanced && r.codominant);
    }

    #[test]
    fn small_cases() {
        let n = 6;
        let s = skew(&[3, 3, 0, 0, 0, 0], &[3, 3, 0, 0, 0, 0], n);
        assert_eq!(bridges(&s, n), vec![0; 6]);
        assert_eq!(bridges(&skew(&[2, 1], &[1, 0], 2), 2), vec![1, 1]);
        // one bridge of length 4 and nothing else
        assert!(!exists_filling_2row(&skew(&[4], &[0], 1), 1).exists);
        assert!(!exists_filling_2row(&skew(&[1, 1, 1], &[0, 0, 0], 3), 3).exists);
        assert!(exists_filling_2row(&skew(&[1, 1], &[0, 0], 2), 2).exists);
    }
}
