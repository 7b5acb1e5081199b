//! Lackadaisical coined walk: state, parameters and the search step
//! `U' = S · (I ⊗ C) · (Q ⊗ I)`.
//!
//! Every state carries `degree + 1` coin slots per vertex. The last slot is
//! the self-loop; with a loop weight of zero it starts at zero and stays
//! there, so the loopless walk is the `l = 0` special case.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::topology::{CoinSlot, GridSpec, VertexCoord};
use crate::Error;

/// Grid, self-loop weight and marked vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WalkParams {
    pub spec: GridSpec,
    pub loop_weight: f64,
    pub marked: Vec<VertexCoord>,
}

impl WalkParams {
    /// Validates and normalizes the marked set (sorted, deduplicated).
    pub fn new(spec: GridSpec, loop_weight: f64, marked: Vec<VertexCoord>) -> Result<Self, Error> {
        let mut params = WalkParams {
            spec,
            loop_weight,
            marked,
        };
        params.marked.sort();
        params.marked.dedup();
        params.validate()?;
        Ok(params)
    }

    /// Single marked vertex at the grid center and `l = degree / N`.
    pub fn search(spec: GridSpec) -> Result<Self, Error> {
        let l = degree_over_n(&spec);
        Self::new(spec, l, vec![default_marked(&spec)])
    }

    pub fn validate(&self) -> Result<(), Error> {
        self.spec.validate()?;
        if !(self.loop_weight.is_finite() && self.loop_weight >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "loop weight must be a finite non-negative number, got {}",
                self.loop_weight
            )));
        }
        if let Some(v) = self.marked.iter().find(|v| !self.spec.contains(**v)) {
            return Err(Error::OutOfGrid(*v));
        }
        Ok(())
    }

    pub fn with_loop_weight(&self, loop_weight: f64) -> Result<Self, Error> {
        Self::new(self.spec, loop_weight, self.marked.clone())
    }
}

/// The `degree / N` self-loop weight.
pub fn degree_over_n(spec: &GridSpec) -> f64 {
    spec.degree() as f64 / spec.vertex_count() as f64
}

/// `(⌊width/2⌋, ⌊height/2⌋)`.
pub fn default_marked(spec: &GridSpec) -> VertexCoord {
    VertexCoord::new(spec.width / 2, spec.height / 2)
}

/// Weighted uniform coin state `|s_c⟩`: `1/√(d+l)` on each direction and
/// `√l/√(d+l)` on the loop.
#[derive(Clone, Debug, PartialEq)]
pub struct CoinVector {
    degree: usize,
    loop_weight: f64,
    components: Vec<f64>,
}

impl CoinVector {
    pub fn new(degree: usize, loop_weight: f64) -> Self {
        let total = degree as f64 + loop_weight;
        let edge = 1.0 / total.sqrt();
        let mut components = vec![edge; degree + 1];
        components[degree] = loop_weight.sqrt() / total.sqrt();
        CoinVector {
            degree,
            loop_weight,
            components,
        }
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn loop_weight(&self) -> f64 {
        self.loop_weight
    }

    /// Applies `2|s_c⟩⟨s_c| − I` to one vertex's coin register in place.
    ///
    /// Uses `w = Σ a_i + √l·a_loop`, then `a_i ← 2w/(d+l) − a_i` and
    /// `a_loop ← 2√l·w/(d+l) − a_loop`.
    #[inline]
    pub fn reflect(&self, register: &mut [Complex64]) {
        debug_assert_eq!(register.len(), self.degree + 1);
        let sqrt_l = self.loop_weight.sqrt();
        let (edges, lp) = register.split_at_mut(self.degree);
        let mut w = Complex64::new(0.0, 0.0);
        for a in edges.iter() {
            w += *a;
        }
        w += lp[0] * sqrt_l;
        let scale = 2.0 / (self.degree as f64 + self.loop_weight);
        let edge_target = w * scale;
        for a in edges.iter_mut() {
            *a = edge_target - *a;
        }
        lp[0] = edge_target * sqrt_l - lp[0];
    }
}

/// Dense amplitude vector indexed by `vertex * slots + slot`.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkState {
    slots: usize,
    amplitudes: Vec<Complex64>,
}

impl WalkState {
    pub fn zeros(vertices: usize, slots: usize) -> Self {
        WalkState {
            slots,
            amplitudes: vec![Complex64::new(0.0, 0.0); vertices * slots],
        }
    }

    pub fn from_amplitudes(slots: usize, amplitudes: Vec<Complex64>) -> Self {
        assert!(
            slots > 0 && amplitudes.len().is_multiple_of(slots),
            "ragged state layout"
        );
        WalkState { slots, amplitudes }
    }

    /// `|s_c⟩/√N` at every vertex.
    pub fn initial(params: &WalkParams) -> Self {
        let spec = &params.spec;
        let coin = CoinVector::new(spec.degree(), params.loop_weight);
        let inv_sqrt_n = 1.0 / (spec.vertex_count() as f64).sqrt();
        let amplitudes = (0..spec.vertex_count())
            .flat_map(|_| coin.components().iter())
            .map(|&c| Complex64::new(c * inv_sqrt_n, 0.0))
            .collect();
        WalkState {
            slots: spec.slots(),
            amplitudes,
        }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn vertex_count(&self) -> usize {
        self.amplitudes.len() / self.slots
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn amplitude(&self, vertex: usize, slot: CoinSlot) -> Complex64 {
        self.amplitudes[vertex * self.slots + slot.0]
    }

    pub fn set_amplitude(&mut self, vertex: usize, slot: CoinSlot, value: Complex64) {
        self.amplitudes[vertex * self.slots + slot.0] = value;
    }

    /// Coin register of one vertex.
    pub fn register(&self, vertex: usize) -> &[Complex64] {
        &self.amplitudes[vertex * self.slots..(vertex + 1) * self.slots]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &WalkState) -> Complex64 {
        assert_eq!(
            self.len(),
            other.len(),
            "inner product of mismatched states"
        );
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Largest elementwise `|a − b|`.
    pub fn max_abs_diff(&self, other: &WalkState) -> f64 {
        assert_eq!(self.len(), other.len(), "comparing mismatched states");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Precomputed search walk: coin, shift permutation and marked indices for
/// one [`WalkParams`].
#[derive(Clone, Debug)]
pub struct Walk {
    params: WalkParams,
    coin: CoinVector,
    shift: Vec<usize>,
    marked: Vec<usize>,
    scratch: Vec<Complex64>,
}

impl Walk {
    pub fn new(params: WalkParams) -> Result<Self, Error> {
        params.validate()?;
        let spec = params.spec;
        let coin = CoinVector::new(spec.degree(), params.loop_weight);
        let shift = spec.shift_table();
        let mut marked: Vec<usize> = params
            .marked
            .iter()
            .map(|v| spec.vertex_index(*v))
            .collect();
        marked.sort_unstable();
        marked.dedup();
        let scratch = vec![Complex64::new(0.0, 0.0); shift.len()];
        Ok(Walk {
            params,
            coin,
            shift,
            marked,
            scratch,
        })
    }

    pub fn params(&self) -> &WalkParams {
        &self.params
    }

    pub fn spec(&self) -> &GridSpec {
        &self.params.spec
    }

    pub fn coin(&self) -> &CoinVector {
        &self.coin
    }

    pub fn initial_state(&self) -> WalkState {
        WalkState::initial(&self.params)
    }

    fn check_layout(&self, state: &WalkState) {
        assert_eq!(
            state.slots(),
            self.spec().slots(),
            "state slot count does not match grid"
        );
        assert_eq!(
            state.len(),
            self.shift.len(),
            "state length does not match grid"
        );
    }

    /// Negates every slot of every marked vertex.
    pub fn apply_oracle(&self, state: &mut WalkState) {
        self.check_layout(state);
        apply_oracle(state, &self.marked);
    }

    pub fn apply_coin(&self, state: &mut WalkState) {
        self.check_layout(state);
        let slots = state.slots();
        for register in state.amplitudes_mut().chunks_exact_mut(slots) {
            self.coin.reflect(register);
        }
    }

    pub fn apply_shift(&mut self, state: &mut WalkState) {
        self.check_layout(state);
        // flip-flop: the permutation is its own inverse, so a gather works
        for (out, &src) in self.scratch.iter_mut().zip(&self.shift) {
            *out = state.amplitudes[src];
        }
        std::mem::swap(&mut self.scratch, &mut state.amplitudes);
    }

    /// Oracle, then coin, then shift.
    pub fn step(&mut self, state: &mut WalkState) {
        self.apply_oracle(state);
        self.apply_coin(state);
        self.apply_shift(state);
    }

    pub fn evolve(&mut self, state: &mut WalkState, steps: usize) {
        for _ in 0..steps {
            self.step(state);
        }
    }

    /// Probability of measuring a marked vertex, coin marginalized.
    pub fn success_probability(&self, state: &WalkState) -> f64 {
        self.check_layout(state);
        success_probability(state, &self.marked)
    }

    /// `⟨ψ(0)|state⟩`.
    pub fn overlap_initial(&self, state: &WalkState) -> Complex64 {
        self.check_layout(state);
        let inv_sqrt_n = 1.0 / (self.spec().vertex_count() as f64).sqrt();
        let coin = self.coin.components();
        let mut acc = Complex64::new(0.0, 0.0);
        for register in state.amplitudes().chunks_exact(state.slots()) {
            for (c, a) in coin.iter().zip(register) {
                acc += a * *c;
            }
        }
        acc * inv_sqrt_n
    }

    pub fn marked_indices(&self) -> &[usize] {
        &self.marked
    }
}

/// Negates all slots at the given vertex indices. Duplicates are ignored.
pub fn apply_oracle(state: &mut WalkState, marked: &[usize]) {
    let slots = state.slots();
    let mut seen: Vec<usize> = marked.to_vec();
    seen.sort_unstable();
    seen.dedup();
    for v in seen {
        for a in &mut state.amplitudes_mut()[v * slots..(v + 1) * slots] {
            *a = -*a;
        }
    }
}

/// Total probability on the given vertex indices. Duplicates are ignored.
pub fn success_probability(state: &WalkState, marked: &[usize]) -> f64 {
    let mut seen: Vec<usize> = marked.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.iter()
        .map(|&v| state.register(v).iter().map(|a| a.norm_sqr()).sum::<f64>())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::Topology;
    use approx::assert_abs_diff_eq;

    fn spec(t: Topology, w: usize, h: usize) -> GridSpec {
        GridSpec::new(t, w, h).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn coin_vector_is_unit() {
        for d in [3, 4, 6] {
            for l in [0.0, 0.01, 1.0, 7.5] {
                let cv = CoinVector::new(d, l);
                let n: f64 = cv.components().iter().map(|x| x * x).sum();
                assert_abs_diff_eq!(n, 1.0, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn initial_state_triangular_loopless() {
        let p = WalkParams::new(spec(Topology::Triangular, 16, 16), 0.0, vec![]).unwrap();
        let s = WalkState::initial(&p);
        let expected = 1.0 / (256.0f64 * 6.0).sqrt();
        for v in 0..256 {
            for slot in 0..6 {
                assert_abs_diff_eq!(s.amplitude(v, CoinSlot(slot)).re, expected, epsilon = 1e-15);
            }
            assert_eq!(s.amplitude(v, CoinSlot(6)), c(0.0));
        }
        assert_abs_diff_eq!(s.norm(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn initial_state_honeycomb_loop_amplitude() {
        let l = 3.0 / 16.0;
        let p = WalkParams::new(spec(Topology::Honeycomb, 4, 4), l, vec![]).unwrap();
        let s = WalkState::initial(&p);
        let expected = l.sqrt() / (16.0 * (3.0 + l)).sqrt();
        for v in 0..16 {
            assert_abs_diff_eq!(s.amplitude(v, CoinSlot(3)).re, expected, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(s.norm(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn oracle_examples() {
        let p = WalkParams::new(
            spec(Topology::Triangular, 4, 4),
            0.5,
            vec![VertexCoord::new(1, 2)],
        )
        .unwrap();
        let walk = Walk::new(p.clone()).unwrap();
        let s0 = walk.initial_state();

        let mut s = s0.clone();
        apply_oracle(&mut s, &[]);
        assert_eq!(s, s0);

        walk.apply_oracle(&mut s);
        let changed = s
            .amplitudes()
            .iter()
            .zip(s0.amplitudes())
            .filter(|(a, b)| a != b)
            .count();
        assert_eq!(changed, 7);
        walk.apply_oracle(&mut s);
        assert_eq!(s, s0);

        // repeated marked entries do not cancel
        let mut s = s0.clone();
        apply_oracle(&mut s, &[9, 9]);
        assert_eq!(s.amplitude(9, CoinSlot(0)), -s0.amplitude(9, CoinSlot(0)));
    }

    #[test]
    fn coin_fixes_sc_and_reflects_basis_state() {
        let cv = CoinVector::new(6, 0.0);
        let mut reg: Vec<Complex64> = cv.components().iter().map(|&x| c(x)).collect();
        let before = reg.clone();
        cv.reflect(&mut reg);
        for (a, b) in reg.iter().zip(&before) {
            assert_abs_diff_eq!(a.re, b.re, epsilon = 1e-15);
        }

        // |→⟩ is slot 3
        let mut reg = vec![c(0.0); 7];
        reg[3] = c(1.0);
        cv.reflect(&mut reg);
        for (i, a) in reg.iter().enumerate().take(6) {
            let want = if i == 3 { -2.0 / 3.0 } else { 1.0 / 3.0 };
            assert_abs_diff_eq!(a.re, want, epsilon = 1e-15);
        }
        assert_eq!(reg[6], c(0.0));
    }

    #[test]
    fn coin_with_loop_fixes_sc() {
        let cv = CoinVector::new(3, 0.3);
        let mut reg: Vec<Complex64> = cv.components().iter().map(|&x| c(x)).collect();
        cv.reflect(&mut reg);
        for (a, b) in reg.iter().zip(cv.components()) {
            assert_abs_diff_eq!(a.re, *b, epsilon = 1e-15);
        }
    }

    #[test]
    fn shift_moves_concentrated_state() {
        let p = WalkParams::new(spec(Topology::Triangular, 16, 16), 0.0, vec![]).unwrap();
        let mut walk = Walk::new(p.clone()).unwrap();
        let g = p.spec;
        let mut s = WalkState::zeros(256, 7);
        s.set_amplitude(g.vertex_index(VertexCoord::new(2, 3)), CoinSlot(0), c(1.0));
        walk.apply_shift(&mut s);
        assert_eq!(
            s.amplitude(g.vertex_index(VertexCoord::new(1, 4)), CoinSlot(5)),
            c(1.0)
        );
        assert_eq!(s.norm_sqr(), 1.0);
    }

    #[test]
    fn unmarked_walk_keeps_initial_state() {
        for t in Topology::ALL {
            let g = spec(t, 6, 4);
            let p = WalkParams::new(g, degree_over_n(&g), vec![]).unwrap();
            let mut walk = Walk::new(p).unwrap();
            let s0 = walk.initial_state();
            let mut s = s0.clone();
            walk.evolve(&mut s, 10);
            assert!(s.max_abs_diff(&s0) < 1e-13, "{t}");
            assert_abs_diff_eq!(walk.overlap_initial(&s).re, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn success_probability_examples() {
        let g = spec(Topology::Honeycomb, 8, 8);
        let p = WalkParams::new(g, 0.1, vec![VertexCoord::new(3, 3)]).unwrap();
        let walk = Walk::new(p).unwrap();
        let s = walk.initial_state();
        assert_abs_diff_eq!(walk.success_probability(&s), 1.0 / 64.0, epsilon = 1e-15);
        let everything: Vec<usize> = (0..64).collect();
        assert_abs_diff_eq!(success_probability(&s, &everything), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(walk.overlap_initial(&s).re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn params_validation() {
        let g = spec(Topology::Triangular, 4, 4);
        assert!(WalkParams::new(g, -0.1, vec![]).is_err());
        assert!(WalkParams::new(g, f64::NAN, vec![]).is_err());
        assert!(matches!(
            WalkParams::new(g, 0.1, vec![VertexCoord::new(4, 0)]),
            Err(Error::OutOfGrid(_))
        ));
        let p =
            WalkParams::new(g, 0.1, vec![VertexCoord::new(1, 1), VertexCoord::new(1, 1)]).unwrap();
        assert_eq!(p.marked.len(), 1);
        let auto = WalkParams::search(g).unwrap();
        assert_eq!(auto.loop_weight, 6.0 / 16.0);
        assert_eq!(auto.marked, vec![VertexCoord::new(2, 2)]);
    }
}
