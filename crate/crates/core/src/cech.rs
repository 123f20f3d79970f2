//! Cech complexes of chart sheaves, their fibers, and global sections.
//!
//! The complex is indexed by the nerve of the covering of the variety by
//! its maximal cones: one column per nonempty subset of maximal cones,
//! ordered by size then lexicographically.  The term of a column depends
//! only on the common face of the selected cones, so terms are stored once
//! per distinct face and shared.
//!
//! Specialising at a point of the ambient abelian variety keeps exactly
//! the columns whose support passes through the point.  Present columns
//! are closed under shrinking the subset, so the surviving columns form a
//! quotient complex and the squared differential stays zero.  Each kept
//! column contributes the exterior algebra of the conormal space of its
//! support (the Koszul grading) tensored with its internal multiplicities;
//! the differential acts on wedge factors through the inclusions of
//! conormal spaces and respects both auxiliary gradings, so ranks are
//! computed one (koszul, internal) slice at a time.  A class in Cech
//! degree p, Koszul degree j and internal degree i sits in total degree
//! `p - j + i`.
//!
//! Global sections replace each term by one copy of the ground field per
//! connected component of its support, matched along restriction via
//! component representatives; there the total degree is `p + i`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::epoints::{SymbolGen, TorusPoint};
use crate::fan::{Cone, Fan};
use crate::local_model::{hh_chart, SheafTerm};
use crate::subgroups::SubgroupScheme;
use crate::{Error, Rat};

/// Default bound on how many maximal cones a nerve may be built over.
pub const DEFAULT_NERVE_CAP: usize = 20;

/// One column of the complex: a subset of the maximal cones and the term
/// attached to their common face.
#[derive(Clone, Debug)]
pub struct NerveEntry {
    subset: Vec<usize>,
    term_idx: usize,
}

impl NerveEntry {
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn term_index(&self) -> usize {
        self.term_idx
    }

    pub fn cech_degree(&self) -> usize {
        self.subset.len() - 1
    }
}

/// The Cech complex of chart contributions over the nerve of the maximal
/// cones of a fan.
#[derive(Clone, Debug)]
pub struct SheafComplex {
    ambient_rank: usize,
    cones: Vec<Cone>,
    terms: Vec<SheafTerm>,
    entries: Vec<NerveEntry>,
    entry_of_subset: BTreeMap<Vec<usize>, usize>,
}

impl SheafComplex {
    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Distinct common faces, parallel to `terms`.
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn terms(&self) -> &[SheafTerm] {
        &self.terms
    }

    pub fn entries(&self) -> &[NerveEntry] {
        &self.entries
    }

    pub fn term_of_entry(&self, entry: usize) -> &SheafTerm {
        &self.terms[self.entries[entry].term_idx]
    }

    fn entry_index(&self, subset: &[usize]) -> Option<usize> {
        self.entry_of_subset.get(subset).copied()
    }

    /// Copy of the complex with every term replaced through `f`; the nerve
    /// structure is untouched.  Used to cut a complex down to a subfan.
    pub(crate) fn map_terms<F>(&self, mut f: F) -> SheafComplex
    where
        F: FnMut(&Cone, &SheafTerm) -> SheafTerm,
    {
        let terms = self
            .cones
            .iter()
            .zip(self.terms.iter())
            .map(|(c, t)| f(c, t))
            .collect();
        SheafComplex {
            ambient_rank: self.ambient_rank,
            cones: self.cones.clone(),
            terms,
            entries: self.entries.clone(),
            entry_of_subset: self.entry_of_subset.clone(),
        }
    }
}

/// Build the Cech complex of a validated fan over the nerve of its maximal
/// cones.  `cap` bounds the number of maximal cones, since the nerve has
/// exponentially many subsets.
pub fn build_complex(fan: &Fan, cap: usize) -> Result<SheafComplex, Error> {
    fan.require_valid()?;
    let k = fan.max_cones().len();
    if k > cap {
        return Err(Error::NerveCapExceeded { cones: k, cap });
    }
    let mut cones: Vec<Cone> = Vec::new();
    let mut terms: Vec<SheafTerm> = Vec::new();
    let mut term_of_cone: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut entries: Vec<NerveEntry> = Vec::new();
    let mut entry_of_subset: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for subset in nonempty_subsets(k) {
        // In a valid fan the intersection of cones is the cone on the
        // shared rays, so the common face is an index intersection.
        let mut common: BTreeSet<usize> = fan.max_cones()[subset[0]]
            .ray_indices()
            .iter()
            .copied()
            .collect();
        for &c in &subset[1..] {
            let rays: BTreeSet<usize> =
                fan.max_cones()[c].ray_indices().iter().copied().collect();
            common = common.intersection(&rays).copied().collect();
        }
        let key: Vec<usize> = common.into_iter().collect();
        let term_idx = match term_of_cone.get(&key) {
            Some(&i) => i,
            None => {
                let cone = Cone::new(key.clone());
                let weights = fan.chart_weights(&cone)?;
                let term = hh_chart(&weights)?;
                cones.push(cone);
                terms.push(term);
                term_of_cone.insert(key, terms.len() - 1);
                terms.len() - 1
            }
        };
        entry_of_subset.insert(subset.clone(), entries.len());
        entries.push(NerveEntry { subset, term_idx });
    }
    Ok(SheafComplex {
        ambient_rank: fan.rank(),
        cones,
        terms,
        entries,
        entry_of_subset,
    })
}

/// The distinct supports appearing in a complex, full ambient group first,
/// deduplicated up to equality of subgroup schemes.
pub fn support_stratification(complex: &SheafComplex) -> Vec<SubgroupScheme> {
    let mut out = vec![SubgroupScheme::full(complex.ambient_rank)];
    for term in &complex.terms {
        if let Some(s) = term.support() {
            if !out.iter().any(|seen| seen == s) {
                out.push(s.clone());
            }
        }
    }
    out
}

/// Fiber of a complex at a point: dimension table and cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberComplex {
    table: BTreeMap<(usize, usize, usize), u64>,
    cohomology: BTreeMap<i64, u64>,
    dd_zero: bool,
}

impl FiberComplex {
    /// Ranks of the specialised columns, keyed by (cech, koszul, internal).
    pub fn table(&self) -> &BTreeMap<(usize, usize, usize), u64> {
        &self.table
    }

    /// Cohomology ranks keyed by total degree.
    pub fn cohomology(&self) -> &BTreeMap<i64, u64> {
        &self.cohomology
    }

    /// Whether the squared differential vanished in every slice.
    pub fn dd_zero(&self) -> bool {
        self.dd_zero
    }

    pub fn total_rank(&self) -> u64 {
        self.cohomology.values().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cohomology
            .iter()
            .map(|(t, r)| if t.rem_euclid(2) == 0 { *r as i64 } else { -(*r as i64) })
            .sum()
    }
}

/// Global sections of a complex: dimension table and cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionsComplex {
    table: BTreeMap<(usize, usize), u64>,
    cohomology: BTreeMap<i64, u64>,
    dd_zero: bool,
}

impl SectionsComplex {
    /// Ranks of the section spaces, keyed by (cech, internal).
    pub fn table(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.table
    }

    pub fn cohomology(&self) -> &BTreeMap<i64, u64> {
        &self.cohomology
    }

    pub fn dd_zero(&self) -> bool {
        self.dd_zero
    }

    pub fn total_rank(&self) -> u64 {
        self.cohomology.values().sum()
    }
}

/// Specialise a complex at a point of the ambient abelian variety.
pub fn fiber_complex(complex: &SheafComplex, point: &TorusPoint) -> Result<FiberComplex, Error> {
    if point.rank() != complex.ambient_rank {
        return Err(Error::AmbientRankMismatch {
            left: complex.ambient_rank,
            right: point.rank(),
        });
    }

    // A term survives if its support passes through the point.  Cache the
    // conormal basis and its pivot columns per surviving term.
    let nterms = complex.terms.len();
    let mut conormal: Vec<Option<ConormalBasis>> = vec![None; nterms];
    for (idx, term) in complex.terms.iter().enumerate() {
        if let Some(s) = term.support() {
            if s.contains_point(point)? {
                conormal[idx] = Some(ConormalBasis::of(s));
            }
        }
    }
    let present: Vec<usize> = complex
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| conormal[e.term_idx].is_some())
        .map(|(i, _)| i)
        .collect();

    // Dimension table of the surviving columns.
    let mut table: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
    let mut slices: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &e in &present {
        let entry = &complex.entries[e];
        let p = entry.cech_degree();
        let c = conormal[entry.term_idx].as_ref().unwrap().dim();
        let mult = complex.terms[entry.term_idx].multiplicity().unwrap();
        for j in 0..=c {
            let wedge = binomial(c, j);
            for (&i, &r) in mult {
                if wedge * r > 0 {
                    *table.entry((p, j, i)).or_insert(0) += wedge * r;
                    slices.insert((j, i));
                }
            }
        }
    }

    let mut wedge_cache: BTreeMap<(usize, usize, usize), Vec<Vec<Rat>>> = BTreeMap::new();
    let mut cohomology: BTreeMap<i64, u64> = BTreeMap::new();
    let mut dd_zero = true;

    for &(j, i) in &slices {
        // Lay out the surviving columns of this slice degree by degree.
        let mut dims: BTreeMap<usize, usize> = BTreeMap::new();
        let mut place: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
        for &e in &present {
            let entry = &complex.entries[e];
            let c = conormal[entry.term_idx].as_ref().unwrap().dim();
            let r = copies(&complex.terms[entry.term_idx], i);
            let width = binomial(c, j) as usize * r;
            if width == 0 {
                continue;
            }
            let p = entry.cech_degree();
            let off = dims.entry(p).or_insert(0);
            place.insert(e, (p, *off, r));
            *off += width;
        }
        if dims.is_empty() {
            continue;
        }
        let max_p = *dims.keys().next_back().unwrap();
        let dim_at = |p: usize| dims.get(&p).copied().unwrap_or(0);

        // One sparse matrix per Cech degree, stored by columns.
        let mut mats: Vec<Vec<BTreeMap<usize, Rat>>> = (0..max_p)
            .map(|p| vec![BTreeMap::new(); dim_at(p)])
            .collect();
        for (&e, &(p, dst_off, r)) in &place {
            if p == 0 {
                continue;
            }
            let entry = &complex.entries[e];
            let dst_term = entry.term_idx;
            for pos in 0..entry.subset.len() {
                let mut src_subset = entry.subset.clone();
                src_subset.remove(pos);
                let src_e = complex
                    .entry_index(&src_subset)
                    .expect("nerve contains every nonempty subset");
                let src_term = complex.entries[src_e].term_idx;
                debug_assert!(
                    conormal[src_term].is_some(),
                    "present columns must be closed under shrinking"
                );
                // The source may have no j-th wedge piece at all.
                let (_, src_off, src_r) = match place.get(&src_e) {
                    Some(&v) => v,
                    None => continue,
                };
                debug_assert_eq!(src_r, r, "internal multiplicities must agree");
                let block = wedge_cache
                    .entry((src_term, dst_term, j))
                    .or_insert_with(|| {
                        wedge_block(
                            conormal[src_term].as_ref().unwrap(),
                            conormal[dst_term].as_ref().unwrap(),
                            j,
                        )
                    });
                let sign_neg = pos % 2 == 1;
                let cols = &mut mats[p - 1];
                for (a, row) in block.iter().enumerate() {
                    for (b, v) in row.iter().enumerate() {
                        if v.is_zero() {
                            continue;
                        }
                        let v = if sign_neg { -v.clone() } else { v.clone() };
                        for t in 0..r {
                            let col = src_off + b * r + t;
                            let row_i = dst_off + a * r + t;
                            let slot = cols[col].entry(row_i).or_insert_with(Rat::zero);
                            *slot += v.clone();
                            if slot.is_zero() {
                                cols[col].remove(&row_i);
                            }
                        }
                    }
                }
            }
        }

        // Ranks, cohomology, and the square-zero check for this slice.
        let mut ranks: Vec<usize> = Vec::with_capacity(max_p + 1);
        for m in &mats {
            ranks.push(column_rank(m));
        }
        for p in 0..=max_p {
            let d_out = if p < max_p { ranks[p] } else { 0 };
            let d_in = if p > 0 { ranks[p - 1] } else { 0 };
            let h = dim_at(p).saturating_sub(d_out + d_in);
            if h > 0 {
                let t = p as i64 - j as i64 + i as i64;
                *cohomology.entry(t).or_insert(0) += h as u64;
            }
        }
        for p in 0..max_p.saturating_sub(1) {
            if !compose_is_zero(&mats[p + 1], &mats[p]) {
                dd_zero = false;
            }
        }
    }

    Ok(FiberComplex {
        table,
        cohomology,
        dd_zero,
    })
}

/// Global sections of a complex over the ambient abelian variety.  Each
/// term contributes one section per connected component of its support;
/// restriction between supports is matched on component representatives.
pub fn global_sections(complex: &SheafComplex) -> Result<SectionsComplex, Error> {
    let mut gen = SymbolGen::new();
    let nterms = complex.terms.len();

    // Component data per nonzero term, in term order so the generated
    // representative symbols are deterministic.
    let mut comps: Vec<Option<ComponentData>> = Vec::with_capacity(nterms);
    for term in &complex.terms {
        match term.support() {
            None => comps.push(None),
            Some(s) => comps.push(Some(ComponentData::of(s, &mut gen)?)),
        }
    }

    let mut table: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut slices: BTreeSet<usize> = BTreeSet::new();
    for entry in &complex.entries {
        if let Some(cd) = comps[entry.term_idx].as_ref() {
            let mult = complex.terms[entry.term_idx].multiplicity().unwrap();
            let p = entry.cech_degree();
            for (&i, &r) in mult {
                if r > 0 {
                    *table.entry((p, i)).or_insert(0) += cd.count as u64 * r;
                    slices.insert(i);
                }
            }
        }
    }

    let mut cohomology: BTreeMap<i64, u64> = BTreeMap::new();
    let mut dd_zero = true;

    for &i in &slices {
        let mut dims: BTreeMap<usize, usize> = BTreeMap::new();
        let mut place: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
        for (e, entry) in complex.entries.iter().enumerate() {
            let cd = match comps[entry.term_idx].as_ref() {
                Some(cd) => cd,
                None => continue,
            };
            let r = copies(&complex.terms[entry.term_idx], i);
            let width = cd.count * r;
            if width == 0 {
                continue;
            }
            let p = entry.cech_degree();
            let off = dims.entry(p).or_insert(0);
            place.insert(e, (p, *off, r));
            *off += width;
        }
        if dims.is_empty() {
            continue;
        }
        let max_p = *dims.keys().next_back().unwrap();
        let dim_at = |p: usize| dims.get(&p).copied().unwrap_or(0);

        let mut mats: Vec<Vec<BTreeMap<usize, Rat>>> = (0..max_p)
            .map(|p| vec![BTreeMap::new(); dim_at(p)])
            .collect();
        for (&e, &(p, dst_off, r)) in &place {
            if p == 0 {
                continue;
            }
            let entry = &complex.entries[e];
            let dst = comps[entry.term_idx].as_ref().unwrap();
            for pos in 0..entry.subset.len() {
                let mut src_subset = entry.subset.clone();
                src_subset.remove(pos);
                let src_e = complex
                    .entry_index(&src_subset)
                    .expect("nerve contains every nonempty subset");
                let src_term = complex.entries[src_e].term_idx;
                let src = match comps[src_term].as_ref() {
                    Some(cd) => cd,
                    None => {
                        debug_assert!(false, "nonzero terms restrict from nonzero terms");
                        continue;
                    }
                };
                let (_, src_off, src_r) = place[&src_e];
                debug_assert_eq!(src_r, r, "internal multiplicities must agree");
                let sign_neg = pos % 2 == 1;
                let cols = &mut mats[p - 1];
                for (a, rep) in dst.reps.iter().enumerate() {
                    let label = src.support.component_index(rep)?;
                    let b = src.position[&label];
                    for t in 0..r {
                        let col = src_off + b * r + t;
                        let row_i = dst_off + a * r + t;
                        let add = if sign_neg { -Rat::one() } else { Rat::one() };
                        let slot = cols[col].entry(row_i).or_insert_with(Rat::zero);
                        *slot += add;
                        if slot.is_zero() {
                            cols[col].remove(&row_i);
                        }
                    }
                }
            }
        }

        let mut ranks: Vec<usize> = Vec::with_capacity(max_p);
        for m in &mats {
            ranks.push(column_rank(m));
        }
        for p in 0..=max_p {
            let d_out = if p < max_p { ranks[p] } else { 0 };
            let d_in = if p > 0 { ranks[p - 1] } else { 0 };
            let h = dim_at(p).saturating_sub(d_out + d_in);
            if h > 0 {
                *cohomology.entry((p + i) as i64).or_insert(0) += h as u64;
            }
        }
        for p in 0..max_p.saturating_sub(1) {
            if !compose_is_zero(&mats[p + 1], &mats[p]) {
                dd_zero = false;
            }
        }
    }

    Ok(SectionsComplex {
        table,
        cohomology,
        dd_zero,
    })
}

/// Conormal basis of a support in reduced row echelon form, plus the pivot
/// column of each basis row.  Equal spaces share identical bases, so
/// coefficient matrices between them are read off at the pivots.
#[derive(Clone, Debug)]
struct ConormalBasis {
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl ConormalBasis {
    fn of(support: &SubgroupScheme) -> Self {
        let rows = support.conormal_space();
        let pivots = rows
            .iter()
            .map(|row| row.iter().position(|v| !v.is_zero()).expect("nonzero basis row"))
            .collect();
        ConormalBasis { rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Component bookkeeping of one support: labels in lexicographic order,
/// one representative per component, and the label positions.
struct ComponentData {
    support: SubgroupScheme,
    count: usize,
    reps: Vec<TorusPoint>,
    position: BTreeMap<crate::subgroups::ComponentLabel, usize>,
}

impl ComponentData {
    fn of(support: &SubgroupScheme, gen: &mut SymbolGen) -> Result<Self, Error> {
        let labels = support.component_labels();
        let mut reps = Vec::with_capacity(labels.len());
        let mut position = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            reps.push(support.component_representative(label, gen)?);
            position.insert(label.clone(), i);
        }
        Ok(ComponentData {
            support: support.clone(),
            count: labels.len(),
            reps,
            position,
        })
    }
}

fn copies(term: &SheafTerm, internal: usize) -> usize {
    term.multiplicity()
        .and_then(|m| m.get(&internal))
        .copied()
        .unwrap_or(0) as usize
}

/// Matrix of the map induced on `j`-th wedge powers by the inclusion of
/// the source conormal space into the target one.  Rows are indexed by
/// `j`-subsets of the target basis, columns by `j`-subsets of the source
/// basis, both in lexicographic order.
fn wedge_block(src: &ConormalBasis, dst: &ConormalBasis, j: usize) -> Vec<Vec<Rat>> {
    // Source basis rows in terms of the target basis: the coefficient on
    // target row k is the source entry at the k-th pivot column.
    let m: Vec<Vec<Rat>> = src
        .rows
        .iter()
        .map(|row| dst.pivots.iter().map(|&p| row[p].clone()).collect())
        .collect();
    #[cfg(debug_assertions)]
    check_coefficients(&m, src, dst);
    let src_sets = k_subsets(src.dim(), j);
    let dst_sets = k_subsets(dst.dim(), j);
    let mut block = vec![vec![Rat::zero(); src_sets.len()]; dst_sets.len()];
    for (bi, is) in src_sets.iter().enumerate() {
        for (ai, js) in dst_sets.iter().enumerate() {
            let minor: Vec<Vec<Rat>> = is
                .iter()
                .map(|&r| js.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            block[ai][bi] = det(minor);
        }
    }
    block
}

#[cfg(debug_assertions)]
fn check_coefficients(m: &[Vec<Rat>], src: &ConormalBasis, dst: &ConormalBasis) {
    let n = src.rows.first().map_or(0, Vec::len);
    for (i, row) in src.rows.iter().enumerate() {
        for c in 0..n {
            let mut acc = Rat::zero();
            for (k, coeff) in m[i].iter().enumerate() {
                acc += coeff * &dst.rows[k][c];
            }
            debug_assert_eq!(acc, row[c], "conormal inclusion has no such expansion");
        }
    }
}

/// Exact determinant of a small square rational matrix.
fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    let mut sign = false;
    let mut acc = Rat::one();
    for col in 0..n {
        let pr = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Rat::zero(),
        };
        if pr != col {
            m.swap(pr, col);
            sign = !sign;
        }
        let pivot = m[col][col].clone();
        acc *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let v = &m[col][c] * &factor;
                m[r][c] -= v;
            }
        }
    }
    if sign {
        -acc
    } else {
        acc
    }
}

/// Rank of a sparse rational matrix given by columns, by column reduction
/// on lowest nonzero entries.
fn column_rank(cols: &[BTreeMap<usize, Rat>]) -> usize {
    let mut cols: Vec<BTreeMap<usize, Rat>> = cols.to_vec();
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    let mut rank = 0;
    for jc in 0..cols.len() {
        loop {
            let low = match cols[jc].keys().next_back() {
                Some(&r) => r,
                None => break,
            };
            match owner.get(&low) {
                None => {
                    owner.insert(low, jc);
                    rank += 1;
                    break;
                }
                Some(&k) => {
                    let factor = &cols[jc][&low] / &cols[k][&low];
                    let pivot_col = cols[k].clone();
                    for (r, v) in pivot_col {
                        let cur = cols[jc].remove(&r).unwrap_or_else(Rat::zero);
                        let nv = cur - &factor * &v;
                        if !nv.is_zero() {
                            cols[jc].insert(r, nv);
                        }
                    }
                }
            }
        }
    }
    rank
}

/// Does `later * earlier` vanish?  Both matrices are column sparse.
fn compose_is_zero(later: &[BTreeMap<usize, Rat>], earlier: &[BTreeMap<usize, Rat>]) -> bool {
    for col in earlier {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (r, v) in col {
            if *r >= later.len() {
                return false;
            }
            for (rr, vv) in &later[*r] {
                let slot = acc.entry(*rr).or_insert_with(Rat::zero);
                *slot += v * vv;
                if slot.is_zero() {
                    acc.remove(rr);
                }
            }
        }
        if !acc.is_empty() {
            return false;
        }
    }
    true
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u64 = 1;
    for t in 0..k.min(n - k) {
        acc = acc * (n - t) as u64 / (t + 1) as u64;
    }
    acc
}

/// All `k`-element subsets of `0..n` in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for t in i + 1..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// All nonempty subsets of `0..n`, ordered by size then lexicographically.
fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..=n {
        out.extend(k_subsets(n, size));
    }
    out
}
