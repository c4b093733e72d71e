//! Dense bit sets over an m-dimensional box [0, bound_1] x ... x [0, bound_m].
//!
//! Cells are laid out row-major with the last axis fastest, and the last axis
//! is padded to a multiple of 64 so that every axis slab starts on a word
//! boundary. Padding bits are kept at zero by every operation.
//!
//! The kernels are the building blocks for semigroup closures:
//! - `dilate_axis`: upward closure along one axis (v in S => v + e_k in S),
//! - `shift_up_into`: a single +1 step along one axis,
//! - `or_coin`: `S[v] |= S[v - g]` over the whole box in ascending index order,
//!   which is one unbounded-knapsack pass for the additive generator g.
//!
//! On top of those, [`lub_closure`], [`additive_closure`] and
//! [`minimal_nabla_elements`] implement the closure constructions used by the
//! semigroup modules. All passes are monotone bit operations, so results are
//! independent of the sequential/parallel execution mode.

#[cfg(feature = "parallel")]
use crate::exec;
use std::sync::Arc;

/// Hard cap on padded cells (bits): 2^33 = 1 GiB of bitset.
const MAX_PADDED_CELLS: u64 = 1 << 33;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoxError {
    #[error("box too large: {cells} padded cells exceeds the {max} cap")]
    TooLarge { cells: u128, max: u64 },
    #[error("box must have at least one axis")]
    Empty,
}

/// Shape of a box: true dimensions plus the padded layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxShape {
    /// dims[k] = bound_k + 1.
    dims: Vec<u64>,
    /// Bit strides in the padded layout; strides[m-1] = 1.
    strides: Vec<u64>,
    /// dims[m-1] rounded up to a multiple of 64.
    padded_last: u64,
    /// Total bits including padding.
    padded_cells: u64,
}

impl BoxShape {
    pub fn new(bound: &[u64]) -> Result<Arc<Self>, BoxError> {
        if bound.is_empty() {
            return Err(BoxError::Empty);
        }
        let dims: Vec<u64> = bound.iter().map(|&b| b + 1).collect();
        let m = dims.len();
        let padded_last = dims[m - 1].div_ceil(64) * 64;
        let mut cells: u128 = padded_last as u128;
        for &d in &dims[..m - 1] {
            cells *= d as u128;
        }
        if cells > MAX_PADDED_CELLS as u128 {
            return Err(BoxError::TooLarge { cells, max: MAX_PADDED_CELLS });
        }
        let mut strides = vec![1u64; m];
        if m >= 2 {
            strides[m - 2] = padded_last;
            for k in (0..m.saturating_sub(2)).rev() {
                strides[k] = strides[k + 1] * dims[k + 1];
            }
        }
        Ok(Arc::new(BoxShape { dims, strides, padded_last, padded_cells: cells as u64 }))
    }

    pub fn m(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn bound(&self) -> Vec<u64> {
        self.dims.iter().map(|&d| d - 1).collect()
    }

    /// True cells (without padding).
    pub fn cell_count(&self) -> u64 {
        self.dims.iter().product()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        v.len() == self.dims.len() && v.iter().zip(&self.dims).all(|(&c, &d)| c < d)
    }

    fn index(&self, v: &[u64]) -> u64 {
        debug_assert!(self.contains(v));
        v.iter().zip(&self.strides).map(|(&c, &s)| c * s).sum()
    }

    fn decode(&self, mut idx: u64) -> Vec<u64> {
        let m = self.dims.len();
        let mut out = Vec::with_capacity(m);
        for &s in &self.strides[..m - 1] {
            out.push(idx / s);
            idx %= s;
        }
        out.push(idx);
        out
    }

    fn words(&self) -> usize {
        (self.padded_cells / 64) as usize
    }

    fn last_axis(&self) -> usize {
        self.dims.len() - 1
    }

    /// Words per padded line along the last axis.
    fn line_words(&self) -> usize {
        (self.padded_last / 64) as usize
    }

    /// Validity pattern of one padded line, with the first `skip` cells of
    /// the line masked off as well.
    fn line_mask(&self, skip: u64) -> Vec<u64> {
        let lw = self.line_words();
        let d = self.dims[self.last_axis()];
        let mut mask = vec![0u64; lw];
        for (i, w) in mask.iter_mut().enumerate() {
            let lo = (i as u64) * 64;
            if lo < d {
                let from = skip.saturating_sub(lo).min(64) as u32;
                *w = range_mask(from, (d - lo).min(64) as u32);
            }
        }
        mask
    }
}

/// Read 64 bits starting at bit position `pos` of `words`; positions outside
/// the slice read as zero.
#[inline]
fn window_at(words: &[u64], pos: i64) -> u64 {
    let w = pos >> 6;
    let r = (pos & 63) as u32;
    let get = |i: i64| -> u64 {
        if i < 0 || i as usize >= words.len() {
            0
        } else {
            words[i as usize]
        }
    };
    if r == 0 {
        get(w)
    } else {
        (get(w) >> r) | (get(w + 1) << (64 - r))
    }
}

/// Mask of bits [lo, hi) within one word (0 <= lo <= hi <= 64).
#[inline]
fn range_mask(lo: u32, hi: u32) -> u64 {
    debug_assert!(lo <= hi && hi <= 64);
    let high = if hi == 64 { u64::MAX } else { (1u64 << hi) - 1 };
    let low = if lo == 64 { u64::MAX } else { (1u64 << lo) - 1 };
    high & !low
}

/// In-place cascading pass: bits[x] |= bits[x - step] for x ascending over
/// [dst_start, dst_start + len). Sources below dst_start are read as-is, so
/// callers must guarantee that positions below dst_start - step are never
/// legitimate sources (here: line and block starts).
fn or_shifted_cascade(words: &mut [u64], dst_start: u64, len: u64, step: u64) {
    if len == 0 {
        return;
    }
    let end = dst_start + len;
    // Fully aligned case: whole-word copy loop (all non-last-axis passes).
    if step.is_multiple_of(64) && dst_start.is_multiple_of(64) && end.is_multiple_of(64) {
        let so = (step / 64) as usize;
        for wi in (dst_start / 64) as usize..(end / 64) as usize {
            let s = words[wi - so];
            if s & !words[wi] != 0 {
                words[wi] |= s;
            }
        }
        return;
    }
    let first_w = (dst_start / 64) as usize;
    let last_w = ((end - 1) / 64) as usize;
    for wi in first_w..=last_w {
        let a = (wi as u64) * 64;
        let lo = dst_start.saturating_sub(a).min(64) as u32;
        let hi = (end - a).min(64) as u32;
        let mask = range_mask(lo, hi);
        let src = window_at(words, a as i64 - step as i64);
        if step >= 64 {
            if src & mask & !words[wi] != 0 {
                words[wi] |= src & mask;
            }
        } else {
            let cur = words[wi];
            let mut w = cur | (src & mask);
            let mut sh = step as u32;
            while sh < 64 {
                w |= (w << sh) & mask;
                sh <<= 1;
            }
            if w != cur {
                words[wi] = w;
            }
        }
    }
}

/// out[x - out_base*64 words] |= src[x - shift] for x over
/// [dst_start, dst_start + len); `out` starts at word index `out_word_base`
/// of the same coordinate frame as `src`.
fn or_shifted_from(
    src: &[u64],
    out: &mut [u64],
    out_word_base: usize,
    dst_start: u64,
    len: u64,
    shift: u64,
) {
    if len == 0 {
        return;
    }
    let end = dst_start + len;
    if shift.is_multiple_of(64) && dst_start.is_multiple_of(64) && end.is_multiple_of(64) {
        let so = (shift / 64) as usize;
        for wi in (dst_start / 64) as usize..(end / 64) as usize {
            let s = src[wi - so];
            if s & !out[wi - out_word_base] != 0 {
                out[wi - out_word_base] |= s;
            }
        }
        return;
    }
    let first_w = (dst_start / 64) as usize;
    let last_w = ((end - 1) / 64) as usize;
    for wi in first_w..=last_w {
        let a = (wi as u64) * 64;
        let lo = dst_start.saturating_sub(a).min(64) as u32;
        let hi = (end - a).min(64) as u32;
        let mask = range_mask(lo, hi);
        let s = window_at(src, a as i64 - shift as i64);
        if s & mask & !out[wi - out_word_base] != 0 {
            out[wi - out_word_base] |= s & mask;
        }
    }
}

/// A subset of the box as a bitset.
#[derive(Debug, Clone)]
pub struct BoxSet {
    shape: Arc<BoxShape>,
    words: Vec<u64>,
}

impl BoxSet {
    pub fn empty(shape: &Arc<BoxShape>) -> Self {
        BoxSet { shape: Arc::clone(shape), words: vec![0u64; shape.words()] }
    }

    pub fn from_points<'a, I: IntoIterator<Item = &'a [u64]>>(
        shape: &Arc<BoxShape>,
        points: I,
    ) -> Self {
        let mut s = BoxSet::empty(shape);
        for p in points {
            s.insert(p);
        }
        s
    }

    pub fn shape(&self) -> &Arc<BoxShape> {
        &self.shape
    }

    pub fn insert(&mut self, v: &[u64]) {
        let idx = self.shape.index(v);
        self.words[(idx / 64) as usize] |= 1 << (idx % 64);
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        if !self.shape.contains(v) {
            return false;
        }
        let idx = self.shape.index(v);
        self.words[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_empty_set(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn same_members(&self, other: &BoxSet) -> bool {
        debug_assert_eq!(self.shape, other.shape);
        self.words == other.words
    }

    pub fn is_subset_of(&self, other: &BoxSet) -> bool {
        debug_assert_eq!(self.shape, other.shape);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn or_assign(&mut self, other: &BoxSet) {
        debug_assert_eq!(self.shape, other.shape);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn and_assign(&mut self, other: &BoxSet) {
        debug_assert_eq!(self.shape, other.shape);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn and_not_assign(&mut self, other: &BoxSet) {
        debug_assert_eq!(self.shape, other.shape);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn copy_from(&mut self, other: &BoxSet) {
        debug_assert_eq!(self.shape, other.shape);
        self.words.copy_from_slice(&other.words);
    }

    pub fn clear_all(&mut self) {
        self.words.fill(0);
    }

    /// All box cells not in `self`.
    pub fn complement(&self) -> BoxSet {
        let mut out = BoxSet::empty(&self.shape);
        let mask = self.shape.line_mask(0);
        let lw = mask.len();
        for (i, w) in out.words.iter_mut().enumerate() {
            *w = !self.words[i] & mask[i % lw];
        }
        out
    }

    /// Remove every vector whose coordinate on `axis` equals `digit`.
    pub fn clear_slab(&mut self, axis: usize, digit: u64) {
        let sh = Arc::clone(&self.shape);
        if axis == sh.last_axis() {
            let lw = sh.line_words();
            let mut w = (digit / 64) as usize;
            let mask = !(1u64 << (digit % 64));
            while w < self.words.len() {
                self.words[w] &= mask;
                w += lw;
            }
            return;
        }
        let stride = sh.strides[axis];
        let block = stride * sh.dims[axis];
        let mut base = digit * stride;
        while base < sh.padded_cells {
            let (s, e) = ((base / 64) as usize, ((base + stride) / 64) as usize);
            self.words[s..e].fill(0);
            base += block;
        }
    }

    /// Decoded coordinates of every member, in lexicographic order.
    pub fn iter_points(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                Some(self.shape.decode((wi as u64) * 64 + tz))
            })
        })
    }

    /// Upward closure along one axis: v in S implies v + e_axis in S (in box).
    pub fn dilate_axis(&mut self, axis: usize) {
        let sh = Arc::clone(&self.shape);
        let last = sh.last_axis();
        if axis == last {
            let lw = sh.line_words();
            let d = sh.dims[last];
            self.for_word_units(lw, |chunk, _| {
                for ls in 0..chunk.len() / lw {
                    or_shifted_cascade(chunk, (ls * lw) as u64 * 64 + 1, d - 1, 1);
                }
            });
            return;
        }
        let stride = sh.strides[axis];
        let block = stride * sh.dims[axis];
        if axis > 0 {
            let bw = (block / 64) as usize;
            self.for_word_units(bw, |chunk, _| {
                for bi in 0..chunk.len() / bw {
                    let b = &mut chunk[bi * bw..(bi + 1) * bw];
                    or_shifted_cascade(b, stride, block - stride, stride);
                }
            });
        } else {
            self.dilate_axis0();
        }
    }

    fn dilate_axis0(&mut self) {
        let sh = Arc::clone(&self.shape);
        let stride = sh.strides[0];
        let sw = (stride / 64) as usize;
        #[cfg(feature = "parallel")]
        if exec::parallel_active(self.words.len()) {
            use rayon::prelude::*;
            for d in 1..sh.dims[0] {
                let split = (d as usize) * sw;
                let (lo, hi) = self.words.split_at_mut(split);
                let src = &lo[split - sw..];
                hi[..sw]
                    .par_chunks_mut(1 << 12)
                    .enumerate()
                    .for_each(|(ci, chunk)| {
                        let off = ci * (1 << 12);
                        for (k, w) in chunk.iter_mut().enumerate() {
                            let s = src[off + k];
                            if s != 0 {
                                *w |= s;
                            }
                        }
                    });
            }
            return;
        }
        or_shifted_cascade(&mut self.words, stride, stride * (sh.dims[0] - 1), stride);
        let _ = sw;
    }

    /// out |= self shifted by +1 along `axis` (a single step, not a closure).
    pub fn shift_up_into(&self, axis: usize, out: &mut BoxSet) {
        debug_assert_eq!(self.shape, out.shape);
        let sh = &self.shape;
        let last = sh.last_axis();
        if axis == last {
            let lw = sh.line_words();
            let d = sh.dims[last];
            let src = &self.words;
            out.for_word_units(lw, |chunk, base_w| {
                for ls in 0..chunk.len() / lw {
                    let line_start = (base_w + ls * lw) as u64 * 64;
                    or_shifted_from(src, chunk, base_w, line_start + 1, d - 1, 1);
                }
            });
            return;
        }
        let stride = sh.strides[axis];
        let block = stride * sh.dims[axis];
        let bw = (block / 64) as usize;
        let src = &self.words;
        out.for_word_units(bw, |chunk, base_w| {
            for bi in 0..chunk.len() / bw {
                let block_start = (base_w + bi * bw) as u64 * 64;
                or_shifted_from(src, chunk, base_w, block_start + stride, block - stride, stride);
            }
        });
    }

    /// One unbounded-knapsack pass: `S[v] |= S[v - coin]` for every v >= coin,
    /// ascending, so the coin can be reused any number of times.
    pub fn or_coin(&mut self, coin: &[u64]) {
        self.or_coin_flagged(coin, None);
    }

    /// `or_coin` with optional persistent saturation flags: segments whose
    /// valid bits are all set are skipped, and since member sets only grow a
    /// flag stays correct across passes.
    fn or_coin_flagged(&mut self, coin: &[u64], flags: Option<&SaturationFlags>) {
        let sh = Arc::clone(&self.shape);
        debug_assert!(sh.contains(coin));
        debug_assert!(coin.iter().any(|&c| c > 0));
        let last = sh.last_axis();
        let c_last = coin[last];
        if coin[..last].iter().all(|&c| c == 0) {
            // Only the last axis moves: per-line cascade with step c_last.
            let lw = sh.line_words();
            let d = sh.dims[last];
            if lw == 1 {
                // One word per line: cross-line window bits are masked off,
                // so the cascade is pure in-word doubling.
                let mask = range_mask(c_last as u32, d as u32);
                self.for_word_units(1, |chunk, _| {
                    for w in chunk.iter_mut() {
                        let cur = *w;
                        if cur == 0 {
                            continue;
                        }
                        let mut x = cur;
                        let mut shf = c_last as u32;
                        while shf < 64 {
                            x |= (x << shf) & mask;
                            shf <<= 1;
                        }
                        if x != cur {
                            *w = x;
                        }
                    }
                });
                return;
            }
            self.for_word_units(lw, |chunk, _| {
                for ls in 0..chunk.len() / lw {
                    let base = (ls * lw) as u64 * 64;
                    or_shifted_cascade(chunk, base + c_last, d - c_last, c_last);
                }
            });
            return;
        }
        let delta = sh.index(coin);
        let ctx = PassCtx {
            holes: coin_holes(&sh, coin),
            delta,
            line_mask: sh.line_mask(c_last),
            full_mask: sh.line_mask(0),
            flags,
        };
        #[cfg(feature = "parallel")]
        if exec::parallel_active(self.words.len()) && sh.m() >= 2 {
            use rayon::prelude::*;
            if coin[0] == 0 {
                // No movement along the first axis: its digit blocks are
                // independent and sources stay inside each block.
                let bw = (sh.strides[0] / 64) as usize;
                self.words.par_chunks_mut(bw).enumerate().for_each(|(d, chunk)| {
                    flat_coin_pass(chunk, &[], d * bw, &ctx);
                });
            } else {
                // Sources differ in the first digit: slabs in ascending
                // order, everything inside a slab reads finalized words.
                let slab_w = (sh.strides[0] / 64) as usize;
                let per = slab_w.div_ceil(rayon::current_num_threads().max(1) * 4).max(1);
                for d0 in coin[0]..sh.dims[0] {
                    let start_w = d0 as usize * slab_w;
                    let (lo, rest) = self.words.split_at_mut(start_w);
                    let slab = &mut rest[..slab_w];
                    let lo: &[u64] = lo;
                    slab.par_chunks_mut(per).enumerate().for_each(|(ci, chunk)| {
                        flat_coin_pass(chunk, lo, start_w + ci * per, &ctx);
                    });
                }
            }
            return;
        }
        flat_coin_pass(&mut self.words, &[], 0, &ctx);
    }

    /// Run `f` over word chunks aligned to `unit` words (parallel when
    /// active). `f` receives the chunk and its starting word index.
    fn for_word_units<F: Fn(&mut [u64], usize) + Sync>(&mut self, unit: usize, f: F) {
        #[cfg(feature = "parallel")]
        if exec::parallel_active(self.words.len()) && self.words.len() > unit {
            use rayon::prelude::*;
            let units = self.words.len() / unit;
            let threads = rayon::current_num_threads().max(1);
            let per = units.div_ceil(threads * 8).max(1);
            self.words
                .par_chunks_mut(per * unit)
                .enumerate()
                .for_each(|(i, chunk)| f(chunk, i * per * unit));
            return;
        }
        let _ = unit;
        f(&mut self.words, 0);
    }
}

/// Words per saturation-flag segment.
const SEG_W: usize = 1 << 10;

/// Persistent "this segment has every valid bit set" flags. Monotone member
/// growth keeps a set flag correct forever.
struct SaturationFlags {
    flags: Vec<std::sync::atomic::AtomicBool>,
}

impl SaturationFlags {
    fn new(words: usize) -> Self {
        let mut flags = Vec::new();
        flags.resize_with(words.div_ceil(SEG_W), || std::sync::atomic::AtomicBool::new(false));
        SaturationFlags { flags }
    }

    #[inline]
    fn is_full(&self, seg: usize) -> bool {
        self.flags[seg].load(std::sync::atomic::Ordering::Relaxed)
    }

    #[inline]
    fn set_full(&self, seg: usize) {
        self.flags[seg].store(true, std::sync::atomic::Ordering::Relaxed);
    }
}

/// Invalid word ranges induced by the coin digits of the non-last axes:
/// words with axis-k digit below coin[k] repeat with period stride_k * D_k.
fn coin_holes(sh: &BoxShape, coin: &[u64]) -> Vec<(usize, usize)> {
    let last = sh.last_axis();
    coin[..last]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(k, &c)| {
            (((sh.strides[k] * sh.dims[k]) / 64) as usize, ((sh.strides[k] * c) / 64) as usize)
        })
        .collect()
}

struct PassCtx<'a> {
    holes: Vec<(usize, usize)>,
    delta: u64,
    /// Valid dst bits of one padded line (skipping the coin's last digit).
    line_mask: Vec<u64>,
    /// All valid bits of one padded line (for saturation certification).
    full_mask: Vec<u64>,
    flags: Option<&'a SaturationFlags>,
}

/// Read 64 bits at absolute bit `pos` where `region` holds the words from
/// absolute word index `base_w` on and `lower` holds words [0, base_w).
#[inline]
fn window_abs(region: &[u64], lower: &[u64], base_w: usize, pos: i64) -> u64 {
    let get = |i: i64| -> u64 {
        if i < 0 {
            return 0;
        }
        let i = i as usize;
        if i >= base_w {
            region.get(i - base_w).copied().unwrap_or(0)
        } else {
            lower.get(i).copied().unwrap_or(0)
        }
    };
    let w = pos >> 6;
    let r = (pos & 63) as u32;
    if r == 0 {
        get(w)
    } else {
        (get(w) >> r) | (get(w + 1) << (64 - r))
    }
}

/// The ascending masked word pass for one coin over `region` (absolute word
/// range [base_w, base_w + len)): words[x] |= words[x - delta] at every
/// valid x, skipping hole ranges and saturated segments.
fn flat_coin_pass(region: &mut [u64], lower: &[u64], base_w: usize, ctx: &PassCtx) {
    let total = base_w + region.len();
    let lw = ctx.line_mask.len();
    let single_mask = if lw == 1 { Some((ctx.line_mask[0], ctx.full_mask[0])) } else { None };
    // No valid destination sits below the coin's own index.
    let mut wi = base_w.max((ctx.delta / 64) as usize);
    'outer: while wi < total {
        loop {
            let mut moved = false;
            for &(p, h) in &ctx.holes {
                let r = wi % p;
                if r < h {
                    wi += h - r;
                    moved = true;
                }
            }
            if wi >= total {
                break 'outer;
            }
            if !moved {
                break;
            }
        }
        let mut run_end = total;
        for &(p, _) in &ctx.holes {
            run_end = run_end.min(wi + p - wi % p);
        }
        while wi < run_end {
            let seg = wi / SEG_W;
            if let Some(f) = ctx.flags {
                if f.is_full(seg) {
                    wi = ((seg + 1) * SEG_W).min(run_end);
                    continue;
                }
            }
            let seg_end = run_end.min((seg + 1) * SEG_W);
            let whole_seg = wi == seg * SEG_W && seg_end == (seg + 1) * SEG_W;
            let mut all_full = true;
            for k in wi..seg_end {
                let (mask, fm) = match single_mask {
                    Some(mf) => mf,
                    None => (ctx.line_mask[k % lw], ctx.full_mask[k % lw]),
                };
                let cur = region[k - base_w];
                if cur & fm == fm {
                    continue;
                }
                if mask == 0 {
                    all_full = false;
                    continue;
                }
                if cur & mask == mask {
                    all_full = false;
                    continue;
                }
                let src = window_abs(region, lower, base_w, (k as i64) * 64 - ctx.delta as i64);
                let add = src & mask & !cur;
                let new = cur | add;
                if add != 0 {
                    region[k - base_w] = new;
                }
                all_full &= new & fm == fm;
            }
            if whole_seg && all_full {
                if let Some(f) = ctx.flags {
                    f.set_full(seg);
                }
            }
            wi = seg_end;
        }
    }
}

/// Closure under least upper bounds (coordinatewise max), computed through
/// the pointwise criterion: v is a lub of members of S iff for every axis i
/// there is w in S with w <= v and w_i = v_i, i.e. the intersection over i of
/// the upward closures of S along all axes except i.
pub fn lub_closure(seed: &BoxSet) -> BoxSet {
    let m = seed.shape().m();
    if m == 1 {
        return seed.clone();
    }
    let mut acc: Option<BoxSet> = None;
    for i in 0..m {
        let mut d = seed.clone();
        for j in 0..m {
            if j != i {
                d.dilate_axis(j);
            }
        }
        match &mut acc {
            None => acc = Some(d),
            Some(a) => a.and_assign(&d),
        }
    }
    acc.expect("m >= 1")
}

/// Closure of {0} under addition of `generators`, within the box. Returns
/// the closure and the subset of generators actually used as coins (the ones
/// not already reachable when visited in ascending coordinate-sum order).
pub fn additive_closure(
    shape: &Arc<BoxShape>,
    generators: &[Vec<u64>],
) -> (BoxSet, Vec<Vec<u64>>) {
    closure_impl(shape, generators, false)
}

/// Like [`additive_closure`], but also drops generators that are already
/// coordinatewise maxima of reachable members. The result can be a strict
/// subset of the additive closure, but its lub closure equals the lub
/// closure of the full one (a sum of two lubs is the lub of the pairwise
/// sums), so [`lub_closure`] of the result is the full {+, lub} closure of
/// the generators within the box.
pub fn lub_generating_closure(
    shape: &Arc<BoxShape>,
    generators: &[Vec<u64>],
) -> (BoxSet, Vec<Vec<u64>>) {
    closure_impl(shape, generators, true)
}

fn closure_impl(
    shape: &Arc<BoxShape>,
    generators: &[Vec<u64>],
    prune_lub_covered: bool,
) -> (BoxSet, Vec<Vec<u64>>) {
    let mut gens: Vec<&Vec<u64>> = generators.iter().collect();
    gens.sort_by(|x, y| {
        x.iter().sum::<u64>().cmp(&y.iter().sum::<u64>()).then_with(|| x.cmp(y))
    });
    gens.dedup();
    let mut set = BoxSet::empty(shape);
    set.insert(&vec![0; shape.m()]);
    let flags =
        (shape.words() >= (1 << 16)).then(|| SaturationFlags::new(shape.words()));
    let mut coins = Vec::new();
    for g in gens {
        if g.iter().all(|&c| c == 0) {
            continue;
        }
        if set.contains(g) {
            continue;
        }
        if prune_lub_covered && lub_covered(&set, g) {
            continue;
        }
        set.or_coin_flagged(g, flags.as_ref());
        coins.push(g.clone());
    }
    (set, coins)
}

/// True iff for every axis i some reachable member below `g` matches its
/// i-th coordinate, i.e. g is a lub of already-reachable members.
fn lub_covered(set: &BoxSet, g: &[u64]) -> bool {
    let mut cells: u128 = 1;
    for &c in g {
        cells *= c as u128 + 1;
    }
    if cells > 2_000_000 {
        return false;
    }
    let mut found = vec![false; g.len()];
    let mut probe = vec![0u64; g.len()];
    covered_scan(set, g, 0, &mut probe, &mut found)
}

fn covered_scan(
    set: &BoxSet,
    g: &[u64],
    k: usize,
    probe: &mut Vec<u64>,
    found: &mut Vec<bool>,
) -> bool {
    if k == g.len() {
        if set.contains(probe) {
            for i in 0..g.len() {
                if probe[i] == g[i] {
                    found[i] = true;
                }
            }
            return found.iter().all(|&f| f);
        }
        return false;
    }
    for c in 0..=g[k] {
        probe[k] = c;
        if covered_scan(set, g, k + 1, probe, found) {
            return true;
        }
    }
    false
}

/// Members with all coordinates positive that are minimal in nabla_i for
/// some axis i: no other member below them with the same i-th coordinate.
pub fn minimal_nabla_elements(members: &BoxSet) -> BoxSet {
    let shape = members.shape();
    let m = shape.m();
    let mut out = BoxSet::empty(shape);
    let mut dominated = BoxSet::empty(shape);
    let mut mins = BoxSet::empty(shape);
    for i in 0..m {
        dominated.clear_all();
        for j in 0..m {
            if j != i {
                members.shift_up_into(j, &mut dominated);
            }
        }
        for j in 0..m {
            if j != i {
                dominated.dilate_axis(j);
            }
        }
        mins.copy_from(members);
        mins.and_not_assign(&dominated);
        out.or_assign(&mins);
    }
    for axis in 0..m {
        out.clear_slab(axis, 0);
    }
    out
}
