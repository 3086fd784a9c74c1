//! Standardization, descents and minimal parsings of tableaux.

use serde::{Deserialize, Serialize};

use super::composition::Composition;
use super::enumerate::enumerate_syt;
use super::partition::Partition;
use super::tableau::Tableau;

/// The decomposition of a tableau into maximal horizontal bands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HorizontalBandParsing {
    /// Band index (1-based) of every cell, laid out like the tableau.
    pub band_of_cell: Vec<Vec<usize>>,
    #[serde(rename = "type")]
    pub kind: Composition,
}

impl HorizontalBandParsing {
    /// Cells of each band, listed in increasing column order.
    pub fn bands(&self) -> Vec<Vec<(usize, usize)>> {
        let mut bands = vec![Vec::new(); self.kind.len()];
        for (r, row) in self.band_of_cell.iter().enumerate() {
            for (c, &b) in row.iter().enumerate() {
                bands[b - 1].push((r, c));
            }
        }
        for band in &mut bands {
            band.sort_by_key(|&(r, c)| (c, r));
        }
        bands
    }

    /// Every band is a horizontal band and no two consecutive bands can be merged.
    pub fn is_valid(&self) -> bool {
        let bands = self.bands();
        bands.iter().all(|b| is_horizontal_band(b))
            && bands.windows(2).all(|w| {
                let mut merged = w[0].clone();
                merged.extend_from_slice(&w[1]);
                !is_horizontal_band(&merged)
            })
            && bands
                .iter()
                .map(Vec::len)
                .eq(self.kind.parts().iter().copied())
    }
}

/// Cells listed in filling order: each one strictly right of and weakly above the previous.
pub fn is_horizontal_band(cells: &[(usize, usize)]) -> bool {
    cells
        .windows(2)
        .all(|w| w[0].1 < w[1].1 && w[1].0 <= w[0].0)
}

/// Relabels the cells `1..=m`, ordering by value and, among equal values, by column.
pub fn standardize_tableau(t: &Tableau) -> Tableau {
    let mut cells: Vec<(u32, usize, usize)> = Vec::with_capacity(t.size());
    for (r, row) in t.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            cells.push((v, c, r));
        }
    }
    cells.sort_unstable();
    let mut rows: Vec<Vec<u32>> = t.rows().iter().map(|r| vec![0; r.len()]).collect();
    for (label, &(_, c, r)) in cells.iter().enumerate() {
        rows[r][c] = label as u32 + 1;
    }
    Tableau::from_rows_unchecked(rows)
}

/// Descents of a standard tableau: `i` such that `i+1` lies in a strictly lower row.
pub fn standard_descent_set(std: &Tableau) -> Vec<usize> {
    let pos = std.positions_of_standard();
    (1..pos.len())
        .filter(|&i| pos[i].0 > pos[i - 1].0)
        .collect()
}

/// The type of the minimal parsing of `t`.
pub fn descent_composition(t: &Tableau) -> Composition {
    if t.is_empty() {
        return Composition::from_parts_unchecked(Vec::new());
    }
    let std = if t.is_standard() {
        t.clone()
    } else {
        standardize_tableau(t)
    };
    Composition::from_descent_set(&standard_descent_set(&std), std.size())
        .expect("descent set lies strictly inside 1..m")
}

pub fn minimal_parsing(t: &Tableau) -> HorizontalBandParsing {
    let std = standardize_tableau(t);
    let descents = standard_descent_set(&std);
    let band_of_label = |label: u32| 1 + descents.iter().filter(|&&d| d < label as usize).count();
    HorizontalBandParsing {
        band_of_cell: std
            .rows()
            .iter()
            .map(|row| row.iter().map(|&v| band_of_label(v)).collect())
            .collect(),
        kind: Composition::from_descent_set(&descents, std.size())
            .unwrap_or_else(|_| Composition::from_parts_unchecked(Vec::new())),
    }
}

/// Replaces each label of the standard tableau by the index of its band.
pub fn destandardize(std: &Tableau) -> Tableau {
    let descents = standard_descent_set(std);
    std.map_entries(|v| 1 + descents.iter().filter(|&&d| d < v as usize).count() as u32)
}

/// All tableaux `T_α` of the shape with weight and minimal parsing of type `alpha`,
/// one per standard tableau with descent composition `alpha`.
pub fn sources_of_type(shape: &Partition, alpha: &Composition) -> Vec<Tableau> {
    if shape.size() != alpha.size() {
        return Vec::new();
    }
    enumerate_syt(shape)
        .into_iter()
        .filter(|s| &descent_composition(s) == alpha)
        .map(|s| destandardize(&s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn example_tableaux() {
        let a = t("1123/223/3/4");
        assert_eq!(descent_composition(&a).parts(), &[2, 3, 3, 1]);
        assert_eq!(standardize_tableau(&a), t("1258/347/6/9"));
        let b = t("1135/234/4/7");
        assert_eq!(descent_composition(&b).parts(), &[2, 3, 3, 1]);
        assert_eq!(standardize_tableau(&b), t("1258/347/6/9"));
        assert_eq!(
            descent_composition(&t("1258/347/6/9")).parts(),
            &[2, 3, 3, 1]
        );
        let c = t("112233/2333/3");
        assert_eq!(minimal_parsing(&c).kind.parts(), &[2, 3, 6]);
        let hw = Tableau::highest_weight(&"5,4,2".parse().unwrap());
        assert_eq!(descent_composition(&hw).parts(), &[5, 4, 2]);
    }

    #[test]
    fn parsing_is_valid() {
        for s in ["1123/223/3/4", "112233/2333/3", "11111/2222/33", "1/2/3"] {
            let p = minimal_parsing(&t(s));
            assert!(p.is_valid(), "{s}");
        }
        let bad = HorizontalBandParsing {
            band_of_cell: vec![vec![1, 1], vec![2]],
            kind: "1,2".parse().unwrap(),
        };
        assert!(!bad.is_valid());
    }

    #[test]
    fn horizontal_bands() {
        assert!(is_horizontal_band(&[(1, 0), (0, 1), (0, 2)]));
        assert!(!is_horizontal_band(&[(0, 0), (1, 0)]));
        assert!(!is_horizontal_band(&[(0, 0), (1, 1)]));
        // a strip as a set, but the filling order moves south-west
        assert!(!is_horizontal_band(&[(2, 0), (0, 4), (1, 1), (1, 2)]));
    }

    #[test]
    fn sources() {
        let shape: Partition = "4,3".parse().unwrap();
        assert_eq!(sources_of_type(&shape, &"2,3,2".parse().unwrap()).len(), 2);
        assert_eq!(
            sources_of_type(&shape, &"4,3".parse().unwrap()),
            vec![Tableau::highest_weight(&shape)]
        );
        assert!(sources_of_type(&shape, &"1,1,5".parse().unwrap()).is_empty());
        assert_eq!(destandardize(&t("1258/347/6/9")), t("1123/223/3/4"));
    }
}
