//! Reduced Groebner basis of the code ideal by term enumeration.
//!
//! Candidate monomials are processed in strictly increasing deglex order
//! starting from 1. Each candidate is keyed by the syndrome of its
//! decoded vector: an unseen key makes the candidate a standard monomial
//! (the leader of a fresh coset), a seen key yields a basis binomial
//! `candidate - leader`. Over the two-element coefficient field a linear
//! dependence among tracked rows is exact equality of their values, so the
//! syzygy bookkeeping of the module formulation collapses to this collision
//! map. The scalar multiples of the generator rows all have syndrome zero
//! and collide with the leader 1, which realizes the usual initialization
//! with every multiple of the generators.
//!
//! The enumeration only ever forms canonical-times-variable products and
//! same-block quadratics. That is enough: a monomial with a block of
//! weight two or more is congruent to a strictly smaller one through an
//! additive-table relation, so it can never be standard, and a minimal
//! such lead is necessarily an exact quadratic.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};

use rand::Rng;
use thiserror::Error;

use crate::code::{LinearCode, Syndrome};
use crate::crossing::{down, up, CanonicalMonomial, FieldVector, Monomial, TermOrder};
use crate::ideal::{binomial_codeword, Binomial, GeneratorSet};
use crate::field::FieldElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GbError {
    #[error("coset count {cosets} exceeds cap {cap}")]
    TooLarge { cosets: u64, cap: u64 },
    #[error("internal order violation: candidates left the queue out of order")]
    InternalOrderViolation,
}

/// Knobs for [`compute_reduced_gb`].
#[derive(Debug, Clone)]
pub struct GbOptions {
    /// Upper bound on q^(n-k), the number of cosets the table must hold.
    pub coset_cap: u64,
    /// Record a [`ComputationTrace`] of every introduced term.
    pub collect_trace: bool,
    /// Emit the scalar multiples of each found binomial as soon as they
    /// can be validated against the current table. Pure optimization: the
    /// resulting basis is identical with the flag on or off.
    pub eager_multiples: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            coset_cap: 100_000,
            collect_trace: false,
            eager_multiples: false,
        }
    }
}

/// How an introduced term was classified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// New coset key: the term is a standard monomial.
    Standard,
    /// Seen coset key: a basis binomial `term - trail` was emitted.
    Emitted { trail: Monomial },
    /// The term is a multiple of an earlier leading term.
    SkippedMultiple,
}

#[derive(Debug, Clone)]
pub struct TraceEntry {
    pub term: Monomial,
    pub image: FieldVector,
    pub kind: Classification,
}

/// Ordered log of the enumeration, one entry per introduced term.
#[derive(Debug, Clone, Default)]
pub struct ComputationTrace {
    pub entries: Vec<TraceEntry>,
}

/// A reduced Groebner basis together with the coset-leader table that the
/// enumeration produces as a byproduct. Immutable once computed.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    elements: Vec<Binomial>,
    standard_monomials: Vec<CanonicalMonomial>,
    leader_map: HashMap<Syndrome, CanonicalMonomial>,
    order: TermOrder,
    code: LinearCode,
    /// Division index: element indices bucketed by the lead's lowest
    /// variable and sorted by lead degree, so reduction scans cheap
    /// divisors first and only plausible ones at all.
    div_index: Vec<Vec<usize>>,
    /// Variable-support bitmask of each lead when the variable count fits
    /// into the mask width; a subset test rules out most candidates.
    lead_masks: Option<Vec<u128>>,
}

#[derive(Debug)]
pub struct GbResult {
    pub basis: GroebnerBasis,
    pub trace: Option<ComputationTrace>,
}

/// Compute with default options, discarding the trace.
pub fn reduced_gb(code: &LinearCode, ord: &TermOrder) -> Result<GroebnerBasis, GbError> {
    Ok(compute_reduced_gb(code, ord, &GbOptions::default())?.basis)
}

/// Heap key: (degree, exponents permuted into precedence order). Plain
/// lexicographic comparison of this pair is exactly the deglex order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct OrdKey {
    deg: u32,
    permuted: Box<[u8]>,
}

struct Candidate {
    key: OrdKey,
    syn: Syndrome,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}
impl Eq for Candidate {}
impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

struct Engine<'a> {
    code: &'a LinearCode,
    ord: &'a TermOrder,
    opts: &'a GbOptions,
    n: usize,
    qm1: usize,
    nvars: usize,
    /// rank[v] = position of variable v in precedence order.
    rank: Vec<usize>,
    var_syndromes: Vec<Syndrome>,
    heap: BinaryHeap<std::cmp::Reverse<Candidate>>,
    /// Every processed term: true = standard, false = non-standard.
    classified: HashMap<Box<[u8]>, bool>,
    leader_map: HashMap<Syndrome, CanonicalMonomial>,
    standard: Vec<CanonicalMonomial>,
    elements: Vec<Binomial>,
    /// Trails of eagerly emitted leads, traced when the term finally pops.
    pending_eager_trace: HashMap<Box<[u8]>, Monomial>,
    trace: Option<ComputationTrace>,
}

pub fn compute_reduced_gb(
    code: &LinearCode,
    ord: &TermOrder,
    opts: &GbOptions,
) -> Result<GbResult, GbError> {
    assert_eq!(ord.n(), code.n(), "order does not match the code's length");
    assert_eq!(ord.q(), code.q(), "order does not match the field size");

    let cosets = code.coset_count();
    if cosets > opts.coset_cap {
        return Err(GbError::TooLarge {
            cosets,
            cap: opts.coset_cap,
        });
    }

    let n = code.n();
    let qm1 = (code.q() - 1) as usize;
    let nvars = n * qm1;
    let mut rank = vec![0usize; nvars];
    for (r, &v) in ord.precedence().iter().enumerate() {
        rank[v] = r;
    }
    let var_syndromes = (0..nvars)
        .map(|v| {
            let mut entries = vec![FieldElement::Zero; n];
            entries[v / qm1] = FieldElement::Pow((v % qm1 + 1) as u32);
            code.syndrome(&FieldVector::new(entries))
        })
        .collect();

    let mut engine = Engine {
        code,
        ord,
        opts,
        n,
        qm1,
        nvars,
        rank,
        var_syndromes,
        heap: BinaryHeap::new(),
        classified: HashMap::new(),
        leader_map: HashMap::new(),
        standard: Vec::new(),
        elements: Vec::new(),
        pending_eager_trace: HashMap::new(),
        trace: opts.collect_trace.then(ComputationTrace::default),
    };
    engine.run()?;

    let Engine {
        leader_map,
        standard,
        mut elements,
        trace,
        ..
    } = engine;

    // Emission order is already ascending in the default flow; eager
    // emission can interleave, so normalize here.
    elements.sort_by(|a, b| ord.compare(a.lead(), b.lead()));

    let (div_index, lead_masks) = build_division_index(&elements, nvars);
    let basis = GroebnerBasis {
        elements,
        standard_monomials: standard,
        leader_map,
        order: ord.clone(),
        code: code.clone(),
        div_index,
        lead_masks,
    };
    Ok(GbResult { basis, trace })
}

fn build_division_index(
    elements: &[Binomial],
    nvars: usize,
) -> (Vec<Vec<usize>>, Option<Vec<u128>>) {
    let mut div_index = vec![Vec::new(); nvars];
    for (i, b) in elements.iter().enumerate() {
        let anchor = b
            .lead()
            .exps()
            .iter()
            .position(|&e| e > 0)
            .expect("leads are never 1");
        div_index[anchor].push(i);
    }
    for bucket in &mut div_index {
        bucket.sort_by_key(|&i| (elements[i].lead().degree(), i));
    }
    let lead_masks = (nvars <= 128).then(|| {
        elements
            .iter()
            .map(|b| support_mask(b.lead()))
            .collect()
    });
    (div_index, lead_masks)
}

fn support_mask(m: &Monomial) -> u128 {
    m.exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u128, |acc, (v, _)| acc | (1u128 << v))
}

impl Engine<'_> {
    fn run(&mut self) -> Result<(), GbError> {
        let one = vec![0u8; self.nvars].into_boxed_slice();
        let zero_syn = self
            .code
            .syndrome(&FieldVector::zero(self.n));
        self.push_candidate(&one, zero_syn);

        let mut last_key: Option<OrdKey> = None;
        while let Some(std::cmp::Reverse(cand)) = self.heap.pop() {
            if let Some(prev) = &last_key {
                if cand.key < *prev {
                    return Err(GbError::InternalOrderViolation);
                }
            }
            let raw = self.unpermute(&cand.key.permuted);

            if let Some(&standard) = self.classified.get(&raw) {
                // Duplicate pop (a term can be pushed by several parents).
                // If it was emitted eagerly, the introduction happens now.
                if !standard {
                    if let Some(trail) = self.pending_eager_trace.remove(&raw) {
                        self.record(&raw, Classification::Emitted { trail });
                    }
                }
                last_key = Some(cand.key);
                continue;
            }
            last_key = Some(cand.key.clone());

            if self.has_nonstandard_parent(&raw) {
                // A lead multiple is never the minimum of its coset, so
                // the coset must already have a registered leader.
                debug_assert!(self.leader_map.contains_key(&cand.syn));
                self.classified.insert(raw.clone(), false);
                self.record(&raw, Classification::SkippedMultiple);
                continue;
            }

            match self.leader_map.get(&cand.syn) {
                Some(leader) => {
                    let lead = self.to_monomial(&raw);
                    let trail = leader.monomial().clone();
                    debug_assert_eq!(self.ord.compare(&lead, &trail), Ordering::Greater);
                    self.classified.insert(raw.clone(), false);
                    self.record(
                        &raw,
                        Classification::Emitted {
                            trail: trail.clone(),
                        },
                    );
                    let bin = Binomial::oriented(lead, trail, self.ord)
                        .expect("collision sides are distinct");
                    if self.opts.eager_multiples {
                        self.emit_eager_multiples(&bin);
                    }
                    self.elements.push(bin);
                }
                None => {
                    let mono = self.to_monomial(&raw);
                    let canon = CanonicalMonomial::try_new(mono)
                        .expect("standard monomials are canonical");
                    self.leader_map.insert(cand.syn.clone(), canon.clone());
                    self.standard.push(canon);
                    self.classified.insert(raw.clone(), true);
                    self.record(&raw, Classification::Standard);
                    self.push_children(&raw, &cand.syn);
                }
            }
        }
        Ok(())
    }

    fn push_candidate(&mut self, raw: &[u8], syn: Syndrome) {
        let mut permuted = vec![0u8; self.nvars].into_boxed_slice();
        for v in 0..self.nvars {
            permuted[self.rank[v]] = raw[v];
        }
        let deg = raw.iter().map(|&e| e as u32).sum();
        self.heap.push(std::cmp::Reverse(Candidate {
            key: OrdKey { deg, permuted },
            syn,
        }));
    }

    fn unpermute(&self, permuted: &[u8]) -> Box<[u8]> {
        let mut raw = vec![0u8; self.nvars].into_boxed_slice();
        for v in 0..self.nvars {
            raw[v] = permuted[self.rank[v]];
        }
        raw
    }

    /// Children of a freshly standard term: one new variable in every
    /// unoccupied block, plus the same-block quadratics when the term is a
    /// single variable. Syndromes compose additively with the new factor.
    fn push_children(&mut self, raw: &[u8], syn: &Syndrome) {
        let spec = self.code.spec();
        let degree: u32 = raw.iter().map(|&e| e as u32).sum();
        let single_var = (degree == 1).then(|| raw.iter().position(|&e| e > 0).unwrap());
        for block in 0..self.n {
            let occupied = raw[block * self.qm1..(block + 1) * self.qm1]
                .iter()
                .any(|&e| e > 0);
            let quadratic_block = single_var.map(|v| v / self.qm1 == block).unwrap_or(false);
            if occupied && !quadratic_block {
                continue;
            }
            for slot in 0..self.qm1 {
                let v = block * self.qm1 + slot;
                let mut child = raw.to_vec().into_boxed_slice();
                child[v] += 1;
                let child_syn = syn.add(&self.var_syndromes[v], spec);
                self.push_candidate(&child, child_syn);
            }
        }
    }

    /// A term is a multiple of an earlier lead exactly when one of its
    /// maximal proper divisors is already classified non-standard. The
    /// enumeration order guarantees the witnessing divisor was processed.
    fn has_nonstandard_parent(&self, raw: &[u8]) -> bool {
        for v in 0..self.nvars {
            if raw[v] == 0 {
                continue;
            }
            let mut parent = raw.to_vec().into_boxed_slice();
            parent[v] -= 1;
            if let Some(&standard) = self.classified.get(&parent) {
                if !standard {
                    return true;
                }
            }
        }
        false
    }

    fn to_monomial(&self, raw: &[u8]) -> Monomial {
        Monomial::from_exps(
            self.n,
            self.code.q(),
            raw.iter().map(|&e| e as u32).collect(),
        )
    }

    fn compact(&self, m: &Monomial) -> Box<[u8]> {
        m.exps()
            .iter()
            .map(|&e| u8::try_from(e).expect("engine exponents fit in u8"))
            .collect()
    }

    fn record(&mut self, raw: &[u8], kind: Classification) {
        if let Some(trace) = &mut self.trace {
            let term = Monomial::from_exps(
                self.n,
                self.code.q(),
                raw.iter().map(|&e| e as u32).collect(),
            );
            let image = down(&term, self.code.spec());
            trace.entries.push(TraceEntry { term, image, kind });
        }
    }

    /// Try to emit the scalar multiples of a found binomial right away.
    /// Each multiple is validated against the current table and emitted
    /// only when it provably coincides with what the enumeration would
    /// produce later: its coset leader must be registered and all its
    /// maximal divisors must be standard.
    fn emit_eager_multiples(&mut self, bin: &Binomial) {
        if !bin.lead().is_canonical() {
            return;
        }
        let spec = self.code.spec();
        let q = spec.q();
        let vt = down(bin.lead(), spec);
        let vs = down(bin.trail(), spec);
        for j in 1..q - 1 {
            let scalar = FieldElement::Pow(j);
            let wt = up(&vt.scale(scalar, spec), spec).into_monomial();
            let ws = up(&vs.scale(scalar, spec), spec).into_monomial();
            let hi = match self.ord.compare(&wt, &ws) {
                Ordering::Greater => wt,
                Ordering::Less => ws,
                Ordering::Equal => continue,
            };
            let raw_hi = self.compact(&hi);
            if self.classified.contains_key(&raw_hi) {
                continue;
            }
            let mut parents_standard = true;
            for v in 0..self.nvars {
                if raw_hi[v] == 0 {
                    continue;
                }
                let mut parent = raw_hi.to_vec().into_boxed_slice();
                parent[v] -= 1;
                if self.classified.get(&parent) != Some(&true) {
                    parents_standard = false;
                    break;
                }
            }
            if !parents_standard {
                continue;
            }
            let syn = self.code.syndrome(&down(&hi, spec));
            let Some(leader) = self.leader_map.get(&syn) else {
                continue;
            };
            let trail = leader.monomial().clone();
            debug_assert_eq!(self.ord.compare(&hi, &trail), Ordering::Greater);
            self.classified.insert(raw_hi.clone(), false);
            if self.opts.collect_trace {
                self.pending_eager_trace.insert(raw_hi, trail.clone());
            }
            self.elements.push(
                Binomial::oriented(hi, trail, self.ord).expect("leader is strictly smaller"),
            );
        }
    }
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Standard monomials in introduction order; one per coset.
    pub fn standard_monomials(&self) -> &[CanonicalMonomial] {
        &self.standard_monomials
    }

    /// Coset key to coset leader; the decoder table.
    pub fn leader_map(&self) -> &HashMap<Syndrome, CanonicalMonomial> {
        &self.leader_map
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// Some element whose lead divides m, or None when m is standard.
    /// Scans the anchor buckets of m's variables, cheapest leads first;
    /// any hit gives the same normal form on a Groebner basis. A caller
    /// preference overrides the scan order.
    fn find_divisor(&self, m: &Monomial, preference: Option<&[usize]>) -> Option<usize> {
        if let Some(order) = preference {
            return order
                .iter()
                .copied()
                .find(|&i| self.elements[i].lead().divides(m));
        }
        let exps = m.exps();
        let mask = self.lead_masks.as_ref().map(|_| support_mask(m));
        for (v, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for &i in &self.div_index[v] {
                if let (Some(masks), Some(m_mask)) = (&self.lead_masks, mask) {
                    if masks[i] & !m_mask != 0 {
                        continue;
                    }
                }
                if self.elements[i].lead().divides(m) {
                    return Some(i);
                }
            }
        }
        None
    }

    /// Structural reduced-basis checks: pairwise non-divisible leads,
    /// standard trails, and a full leader table.
    pub fn is_reduced(&self) -> bool {
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                if i != j && a.lead().divides(b.lead()) {
                    return false;
                }
            }
        }
        let standard: std::collections::HashSet<&Monomial> = self
            .standard_monomials
            .iter()
            .map(|c| c.monomial())
            .collect();
        if !self
            .elements
            .iter()
            .all(|b| standard.contains(b.trail()))
        {
            return false;
        }
        self.leader_map.len() as u64 == self.code.coset_count()
            && self.standard_monomials.len() == self.leader_map.len()
    }
}

/// Divide m by the basis: while some lead divides the current monomial,
/// swap that factor for the corresponding trail. Every step strictly
/// decreases the monomial in the term order, and the result is the unique
/// standard monomial of m's coset.
pub fn reduce(m: &Monomial, gb: &GroebnerBasis) -> CanonicalMonomial {
    reduce_inner(m, gb, None)
}

/// Reduction with a caller-chosen divisor preference. Confluence of the
/// basis means the normal form must not depend on the preference; tests
/// exercise exactly that.
pub fn reduce_with_preference(
    m: &Monomial,
    gb: &GroebnerBasis,
    preference: &[usize],
) -> CanonicalMonomial {
    reduce_inner(m, gb, Some(preference))
}

fn reduce_inner(m: &Monomial, gb: &GroebnerBasis, preference: Option<&[usize]>) -> CanonicalMonomial {
    CanonicalMonomial::try_new(normal_form(m, gb, preference))
        .expect("fully reduced monomials are canonical")
}

/// The bare division loop. Total for any set of lead-greater-than-trail
/// binomials, Groebner or not, since every step strictly decreases the
/// monomial; the result is canonical only when the basis is complete.
fn normal_form(m: &Monomial, gb: &GroebnerBasis, preference: Option<&[usize]>) -> Monomial {
    let mut cur = m.clone();
    while let Some(i) = gb.find_divisor(&cur, preference) {
        let b = &gb.elements[i];
        let next = cur
            .div(b.lead())
            .expect("divisor found by divisibility scan")
            .mul(b.trail());
        debug_assert_eq!(gb.order.compare(&next, &cur), Ordering::Less);
        cur = next;
    }
    cur
}

/// The two monomials whose difference is the S-polynomial of two
/// binomials: lcm/lead_i * trail_i for i = 1, 2.
pub fn spoly(g1: &Binomial, g2: &Binomial) -> (Monomial, Monomial) {
    let lcm = g1.lead().lcm(g2.lead());
    let m1 = lcm.div(g1.lead()).unwrap().mul(g1.trail());
    let m2 = lcm.div(g2.lead()).unwrap().mul(g2.trail());
    (m1, m2)
}

/// Buchberger check specialized to binomials over the two-element field:
/// an S-polynomial reduces to zero exactly when its two monomials share a
/// normal form, and every generator must reduce to zero as well.
///
/// Pairs with coprime leads are skipped by Buchberger's product criterion;
/// [`is_groebner_exhaustive`] checks them too.
pub fn is_groebner(gb: &GroebnerBasis, gens: &GeneratorSet) -> bool {
    is_groebner_inner(gb, gens, true)
}

/// Like [`is_groebner`] but without the coprime-pair shortcut.
pub fn is_groebner_exhaustive(gb: &GroebnerBasis, gens: &GeneratorSet) -> bool {
    is_groebner_inner(gb, gens, false)
}

fn is_groebner_inner(gb: &GroebnerBasis, gens: &GeneratorSet, skip_coprime: bool) -> bool {
    let elems = gb.elements();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            if skip_coprime && elems[i].lead().coprime_with(elems[j].lead()) {
                continue;
            }
            let (m1, m2) = spoly(&elems[i], &elems[j]);
            if normal_form(&m1, gb, None) != normal_form(&m2, gb, None) {
                return false;
            }
        }
    }
    for g in gens.all() {
        if normal_form(g.lead(), gb, None) != normal_form(g.trail(), gb, None) {
            return false;
        }
    }
    true
}

/// Outcome of checking the ideal-membership identity empirically.
#[derive(Debug, Clone, Default)]
pub struct MembershipReport {
    /// Pairs (a, b) with a - b in C whose crossing images shared a normal form.
    pub pairs_checked: usize,
    pub pairs_failed: usize,
    /// Basis elements whose decoded difference had syndrome zero.
    pub elements_checked: usize,
    pub elements_failed: usize,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.pairs_failed == 0 && self.elements_failed == 0
    }
}

/// Sample `samples` pairs a = b + c with c a random codeword and check
/// that up(a) and up(b) reduce to the same normal form; sample the same
/// number of basis elements and check their decoded differences lie in
/// the code. Both directions must pass in full.
pub fn verify_membership<R: Rng>(
    code: &LinearCode,
    gb: &GroebnerBasis,
    samples: usize,
    rng: &mut R,
) -> MembershipReport {
    let spec = code.spec();
    let q = spec.q();
    let mut report = MembershipReport::default();

    for _ in 0..samples {
        let b = FieldVector::new(
            (0..code.n())
                .map(|_| spec.element_from_int(rng.random_range(0..q)).unwrap())
                .collect(),
        );
        let lambda: Vec<FieldElement> = (0..code.k())
            .map(|_| spec.element_from_int(rng.random_range(0..q)).unwrap())
            .collect();
        let c = code.encode(&lambda);
        let a = b.add(&c, spec);
        report.pairs_checked += 1;
        if reduce(up(&a, spec).monomial(), gb) != reduce(up(&b, spec).monomial(), gb) {
            report.pairs_failed += 1;
        }
    }

    if !gb.is_empty() {
        for _ in 0..samples {
            let g = &gb.elements()[rng.random_range(0..gb.len())];
            report.elements_checked += 1;
            if !code.contains(&binomial_codeword(g, spec)) {
                report.elements_failed += 1;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::new_code;
    use crate::field::{build_field, FieldSpec};
    use crate::ideal::assemble_generators;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn vec_from_ints(spec: &FieldSpec, ints: &[u32]) -> FieldVector {
        FieldVector::new(
            ints.iter()
                .map(|&c| spec.element_from_int(c).unwrap())
                .collect(),
        )
    }

    fn f9_code() -> LinearCode {
        let spec = build_field(3, 2, &[2, 2, 1]).unwrap();
        let rows = vec![
            vec_from_ints(&spec, &[1, 0, 4]),
            vec_from_ints(&spec, &[0, 1, 6]),
        ];
        new_code(spec, rows).unwrap()
    }

    fn f3_code() -> LinearCode {
        let spec = build_field(3, 1, &[1, 1]).unwrap();
        let rows = vec![
            vec_from_ints(&spec, &[1, 0, 0, 2, 2, 0]),
            vec_from_ints(&spec, &[0, 1, 0, 1, 1, 0]),
            vec_from_ints(&spec, &[0, 0, 1, 1, 2, 1]),
        ];
        new_code(spec, rows).unwrap()
    }

    /// The sixteen linear binomials of the F_9 example's final basis.
    const F9_LINEAR: [&str; 16] = [
        "x[1,1] - x[3,7]",
        "x[1,2] - x[3,8]",
        "x[1,3] - x[3,1]",
        "x[1,4] - x[3,2]",
        "x[1,5] - x[3,3]",
        "x[1,6] - x[3,4]",
        "x[1,7] - x[3,5]",
        "x[1,8] - x[3,6]",
        "x[2,1] - x[3,2]",
        "x[2,2] - x[3,3]",
        "x[2,3] - x[3,4]",
        "x[2,4] - x[3,5]",
        "x[2,5] - x[3,6]",
        "x[2,6] - x[3,7]",
        "x[2,7] - x[3,8]",
        "x[2,8] - x[3,1]",
    ];

    #[test]
    fn f9_basis_matches_the_printed_example() {
        let code = f9_code();
        let ord = TermOrder::deglex_default(3, 9);
        let gb = reduced_gb(&code, &ord).unwrap();

        assert_eq!(gb.standard_monomials().len(), 9);
        let rendered: Vec<String> = gb.elements().iter().map(|b| b.to_string()).collect();
        for expected in F9_LINEAR {
            assert!(rendered.contains(&expected.to_string()), "missing {expected}");
        }
        // Everything else is an additive-table quadratic on the standard
        // block: lead x[3,u]*x[3,v], trail per the table.
        let linear = gb
            .elements()
            .iter()
            .filter(|b| b.lead().degree() == 1)
            .count();
        assert_eq!(linear, 16);
        let spec = code.spec();
        for b in gb.elements().iter().filter(|b| b.lead().degree() == 2) {
            assert_eq!(b.lead().exps()[16..].iter().sum::<u32>(), 2, "{b}");
            assert!(binomial_codeword(b, spec).is_zero(), "{b}");
        }
        assert_eq!(gb.len(), 16 + 36);
        assert!(gb.is_reduced());
    }

    #[test]
    fn full_code_collapses_to_single_coset() {
        let spec = build_field(3, 2, &[2, 2, 1]).unwrap();
        let rows = vec![vec_from_ints(&spec, &[1, 0]), vec_from_ints(&spec, &[0, 1])];
        let code = new_code(spec, rows).unwrap();
        let ord = TermOrder::deglex_default(2, 9);
        let gb = reduced_gb(&code, &ord).unwrap();
        assert_eq!(gb.standard_monomials().len(), 1);
        assert!(gb.standard_monomials()[0].monomial().is_one());
        assert_eq!(gb.len(), 16);
        for b in gb.elements() {
            assert_eq!(b.lead().degree(), 1);
            assert!(b.trail().is_one());
        }
    }

    #[test]
    fn ternary_basis_elements_pass_the_oracle() {
        let code = f3_code();
        let ord = TermOrder::deglex_default(6, 3);
        let gb = reduced_gb(&code, &ord).unwrap();
        assert_eq!(gb.standard_monomials().len(), 27);
        let spec = code.spec();
        for b in gb.elements() {
            let lead_vec = down(b.lead(), spec);
            let trail_vec = down(b.trail(), spec);
            assert_eq!(code.syndrome(&lead_vec), code.syndrome(&trail_vec), "{b}");
            let leader = code.coset_leader_bruteforce(&lead_vec, &ord).unwrap();
            assert_eq!(up(&leader, spec).monomial(), b.trail(), "{b}");
        }
    }

    #[test]
    fn leader_map_agrees_with_the_bruteforce_oracle_on_every_coset() {
        for (code, ord) in [
            (f9_code(), TermOrder::deglex_default(3, 9)),
            (f3_code(), TermOrder::deglex_default(6, 3)),
        ] {
            let gb = reduced_gb(&code, &ord).unwrap();
            let spec = code.spec();
            for (syn, leader) in gb.leader_map() {
                let vec = down(leader.monomial(), spec);
                assert_eq!(&code.syndrome(&vec), syn);
                let brute = code.coset_leader_bruteforce(&vec, &ord).unwrap();
                assert_eq!(up(&brute, spec), *leader);
            }
        }
    }

    #[test]
    fn reduce_is_a_fixpoint_on_standard_monomials() {
        let code = f9_code();
        let ord = TermOrder::deglex_default(3, 9);
        let gb = reduced_gb(&code, &ord).unwrap();
        for s in gb.standard_monomials() {
            assert_eq!(reduce(s.monomial(), &gb), *s);
        }
    }

    #[test]
    fn reduce_follows_the_linear_relations() {
        let code = f9_code();
        let ord = TermOrder::deglex_default(3, 9);
        let gb = reduced_gb(&code, &ord).unwrap();
        let x11 = Monomial::variable(3, 9, 1, 1);
        assert_eq!(reduce(&x11, &gb).to_string(), "x[3,7]");
    }

    #[test]
    fn reduce_agrees_with_the_leader_map_on_random_monomials() {
        let code = f3_code();
        let ord = TermOrder::deglex_default(6, 3);
        let gb = reduced_gb(&code, &ord).unwrap();
        let spec = code.spec();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let exps: Vec<u32> = (0..12).map(|_| rng.random_range(0..4)).collect();
            let m = Monomial::from_exps(6, 3, exps);
            let nf = reduce(&m, &gb);
            let key = code.syndrome(&down(&m, spec));
            assert_eq!(&nf, &gb.leader_map()[&key]);
        }
    }

    #[test]
    fn reduction_is_confluent_under_shuffled_preferences() {
        let code = f3_code();
        let ord = TermOrder::deglex_default(6, 3);
        let gb = reduced_gb(&code, &ord).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut preference: Vec<usize> = (0..gb.len()).collect();
        for _ in 0..200 {
            let exps: Vec<u32> = (0..12).map(|_| rng.random_range(0..3)).collect();
            let m = Monomial::from_exps(6, 3, exps);
            let base = reduce(&m, &gb);
            for _ in 0..3 {
                for i in (1..preference.len()).rev() {
                    let j = rng.random_range(0..=i);
                    preference.swap(i, j);
                }
                assert_eq!(reduce_with_preference(&m, &gb, &preference), base);
            }
        }
    }

    #[test]
    fn computed_bases_verify_as_groebner() {
        for (code, ord) in [
            (f9_code(), TermOrder::deglex_default(3, 9)),
            (f3_code(), TermOrder::deglex_default(6, 3)),
        ] {
            let gb = reduced_gb(&code, &ord).unwrap();
            let gens = assemble_generators(&code, &ord);
            assert!(is_groebner(&gb, &gens));
            assert!(gb.is_reduced());
        }
    }

    #[test]
    fn coprime_shortcut_agrees_with_the_exhaustive_check() {
        let code = f3_code();
        let ord = TermOrder::deglex_default(6, 3);
        let gb = reduced_gb(&code, &ord).unwrap();
        let gens = assemble_generators(&code, &ord);
        assert!(is_groebner_exhaustive(&gb, &gens));
        assert!(is_groebner(&gb, &gens));
    }

    #[test]
    fn deleting_an_element_breaks_the_groebner_property() {
        let code = f9_code();
        let ord = TermOrder::deglex_default(3, 9);
        let gb = reduced_gb(&code, &ord).unwrap();
        let gens = assemble_generators(&code, &ord);
        for victim in [0, gb.len() / 2, gb.len() - 1] {
            let mut broken = gb.clone();
            broken.elements.remove(victim);
            let (div_index, lead_masks) =
                build_division_index(&broken.elements, broken.order.nvars());
            broken.div_index = div_index;
            broken.lead_masks = lead_masks;
            assert!(
                !is_groebner(&broken, &gens),
                "deletion of element {victim} went unnoticed"
            );
        }
    }

    #[test]
    fn membership_identity_verifies_on_both_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for (code, ord) in [
            (f9_code(), TermOrder::deglex_default(3, 9)),
            (f3_code(), TermOrder::deglex_default(6, 3)),
        ] {
            let gb = reduced_gb(&code, &ord).unwrap();
            let report = verify_membership(&code, &gb, 500, &mut rng);
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.pairs_checked, 500);
        }
    }

    #[test]
    fn membership_exhaustive_over_ternary_codewords() {
        let code = f3_code();
        let ord = TermOrder::deglex_default(6, 3);
        let gb = reduced_gb(&code, &ord).unwrap();
        let spec = code.spec();
        let zero_nf = reduce(&Monomial::one(6, 3), &gb);
        for c in code.enumerate_codewords().unwrap() {
            assert_eq!(reduce(up(&c, spec).monomial(), &gb), zero_nf);
        }
    }

    #[test]
    fn trace_is_monotone_and_labels_standards() {
        let code = f9_code();
        let ord = TermOrder::deglex_default(3, 9);
        let opts = GbOptions {
            collect_trace: true,
            ..GbOptions::default()
        };
        let result = compute_reduced_gb(&code, &ord, &opts).unwrap();
        let trace = result.trace.unwrap();
        assert!(!trace.entries.is_empty());
        for pair in trace.entries.windows(2) {
            assert_ne!(
                ord.compare(&pair[0].term, &pair[1].term),
                Ordering::Greater,
                "trace out of order"
            );
        }
        let standards = trace
            .entries
            .iter()
            .filter(|e| e.kind == Classification::Standard)
            .count();
        assert_eq!(standards, 9);
        for e in &trace.entries {
            assert_eq!(down(&e.term, code.spec()), e.image.clone());
        }
    }

    #[test]
    fn eager_multiples_produce_the_identical_basis() {
        for (code, ord) in [
            (f9_code(), TermOrder::deglex_default(3, 9)),
            (f3_code(), TermOrder::deglex_default(6, 3)),
        ] {
            let plain = reduced_gb(&code, &ord).unwrap();
            let eager = compute_reduced_gb(
                &code,
                &ord,
                &GbOptions {
                    eager_multiples: true,
                    ..GbOptions::default()
                },
            )
            .unwrap()
            .basis;
            assert_eq!(plain.elements(), eager.elements());
            assert_eq!(plain.standard_monomials(), eager.standard_monomials());
        }
    }

    #[test]
    fn coset_cap_is_enforced() {
        let code = f3_code();
        let ord = TermOrder::deglex_default(6, 3);
        let opts = GbOptions {
            coset_cap: 10,
            ..GbOptions::default()
        };
        assert_eq!(
            compute_reduced_gb(&code, &ord, &opts).unwrap_err(),
            GbError::TooLarge { cosets: 27, cap: 10 }
        );
    }

    #[test]
    fn standard_monomials_are_canonical_with_degree_at_most_n() {
        for (code, ord) in [
            (f9_code(), TermOrder::deglex_default(3, 9)),
            (f3_code(), TermOrder::deglex_default(6, 3)),
        ] {
            let gb = reduced_gb(&code, &ord).unwrap();
            for s in gb.standard_monomials() {
                assert!(s.monomial().is_canonical());
                assert!(s.degree() as usize <= code.n());
            }
        }
    }

    /// A binomial is nothing but a pair of monomials: the representation
    /// has no room for coefficients, which pins the no-coefficient-growth
    /// property at the type level.
    #[test]
    fn binomial_is_exactly_a_monomial_pair() {
        assert_eq!(
            std::mem::size_of::<Binomial>(),
            2 * std::mem::size_of::<Monomial>()
        );
        let ord = TermOrder::deglex_default(1, 3);
        let b = Binomial::oriented(
            Monomial::variable(1, 3, 1, 1),
            Monomial::one(1, 3),
            &ord,
        )
        .unwrap();
        let (_lead, _trail): (&Monomial, &Monomial) = (b.lead(), b.trail());
    }
}
