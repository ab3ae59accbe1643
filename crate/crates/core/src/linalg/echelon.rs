use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_traits::Zero;

use crate::poly::Rational;

/// Incremental row echelon form over sparse vectors keyed by `K`.
///
/// Each stored row has a distinct pivot (its largest key). A new vector is
/// independent of the stored ones iff it does not reduce to zero.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon<K: Ord + Clone + Hash> {
    rows: Vec<Row<K>>,
    pivots: HashMap<K, usize>,
    inserted: usize,
    track: bool,
}

#[derive(Clone, Debug)]
struct Row<K> {
    entries: BTreeMap<K, Rational>,
    // the row as a combination of inserted vectors, by insertion index
    combo: BTreeMap<usize, Rational>,
}

impl<K: Ord + Clone + Hash> SparseEchelon<K> {
    pub fn new() -> Self {
        SparseEchelon {
            rows: Vec::new(),
            pivots: HashMap::new(),
            inserted: 0,
            track: false,
        }
    }

    /// Also records how each stored row combines the inserted vectors.
    pub fn with_tracking() -> Self {
        SparseEchelon {
            track: true,
            ..Self::new()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(
        &self,
        mut v: BTreeMap<K, Rational>,
        combo: &mut BTreeMap<usize, Rational>,
    ) -> BTreeMap<K, Rational> {
        let mut bound: Option<K> = None;
        loop {
            let next = {
                let candidates: Box<dyn DoubleEndedIterator<Item = (&K, &Rational)>> = match &bound
                {
                    Some(b) => Box::new(v.range(..b.clone())),
                    None => Box::new(v.iter()),
                };
                candidates
                    .rev()
                    .find(|(k, _)| self.pivots.contains_key(*k))
                    .map(|(k, c)| (k.clone(), c.clone()))
            };
            let Some((key, c)) = next else {
                return v;
            };
            let row = &self.rows[self.pivots[&key]];
            let factor = c / &row.entries[&key];
            for (k, x) in &row.entries {
                let entry = v.entry(k.clone()).or_insert_with(Rational::zero);
                *entry -= &factor * x;
                if entry.is_zero() {
                    v.remove(k);
                }
            }
            if self.track {
                for (i, x) in &row.combo {
                    let entry = combo.entry(*i).or_insert_with(Rational::zero);
                    *entry -= &factor * x;
                    if entry.is_zero() {
                        combo.remove(i);
                    }
                }
            }
            bound = Some(key);
        }
    }

    /// Would `v` increase the rank?
    pub fn is_independent(&self, v: &BTreeMap<K, Rational>) -> bool {
        !self.reduce(v.clone(), &mut BTreeMap::new()).is_empty()
    }

    /// Inserts `v`; returns whether it increased the rank.
    pub fn insert(&mut self, v: BTreeMap<K, Rational>) -> bool {
        self.insert_tracked(v).is_none()
    }

    /// Inserts `v` if independent and returns `None`; otherwise returns the
    /// coefficients `c_i` with `v = Σ c_i · (i-th inserted vector)`. Dependent
    /// vectors are not stored and do not consume an insertion index. Only
    /// meaningful on an echelon built `with_tracking`.
    pub fn insert_tracked(&mut self, v: BTreeMap<K, Rational>) -> Option<Vec<(usize, Rational)>> {
        let v: BTreeMap<K, Rational> = v.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        let mut combo = BTreeMap::new();
        if self.track {
            combo.insert(self.inserted, Rational::from_integer(1.into()));
        }
        let residual = self.reduce(v, &mut combo);
        if residual.is_empty() {
            // 0 = v - Σ ...  =>  v = -(combo without the self entry)
            combo.remove(&self.inserted);
            return Some(combo.into_iter().map(|(i, c)| (i, -c)).collect());
        }
        let pivot = residual
            .keys()
            .next_back()
            .expect("nonzero residual")
            .clone();
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(Row {
            entries: residual,
            combo,
        });
        self.inserted += 1;
        None
    }
}
